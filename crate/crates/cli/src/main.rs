use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use defcert_core::arrangement::{parse_arrangement, parse_loops, zvk_presentation};
use defcert_core::exact::{ExactScalar, ProjectivePoint};
use defcert_core::freegroup::{subgroup_member, subgroup_rank_index, stallings_fold, Alphabet, FreeWord};
use defcert_core::pipeline::{run_case_study_certificate, Verdict};
use defcert_core::rational_family::{
    base_map, critical_data, delta_contains, evaluate_map, plot_delta, specialize_family, verify_portrait,
    verify_z_formula, PlotWindow, PortraitSpec,
};

#[derive(Parser)]
#[command(name = "defcert", version, about = "Exact certificate for the deformation space case study", arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the base map, its critical data and the symbolic z identity.
    VerifyFamily {
        /// Also check the portrait of F(t; x, y) at this point, given as X,Y.
        #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Monodromy presentation of an arrangement complement.
    Zvk {
        #[arg(long, value_name = "FILE")]
        arrangement: PathBuf,
        #[arg(long, value_name = "FILE")]
        loops: PathBuf,
    },
    /// Fold a subgroup of a free group and test membership.
    Stallings {
        /// Comma-separated generator words, e.g. "a a, b b, a b".
        #[arg(long)]
        gens: String,
        #[arg(long)]
        query: String,
    },
    /// Run every check of the case study and write the certificate.
    Certificate {
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Draw the excluded curves as SVG.
    PlotDelta {
        #[arg(long, value_name = "X0,X1,Y0,Y1", allow_hyphen_values = true)]
        window: String,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

type Outcome = Result<bool, Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn check<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Check(e.to_string())
}

fn rationals(s: &str, n: usize) -> Result<Vec<ExactScalar>, Failure> {
    let v = s
        .split(',')
        .map(|p| p.trim().parse::<ExactScalar>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| usage(format!("cannot parse {s:?}: {e}")))?;
    if v.len() != n {
        return Err(usage(format!("expected {n} comma-separated rationals, got {s:?}")));
    }
    Ok(v)
}

fn report(pass: bool, what: &str) -> bool {
    println!("{} {what}", if pass { "PASS" } else { "FAIL" });
    pass
}

fn verify_family(at: Option<String>) -> Outcome {
    let f = base_map();
    let mut ok = true;
    let mut p = ProjectivePoint::Finite(ExactScalar::zero());
    let mut orbit = vec![p.to_string()];
    for _ in 0..4 {
        p = evaluate_map(&f, &p).map_err(check)?;
        orbit.push(p.to_string());
    }
    ok &= report(orbit == ["0", "inf", "1", "3/4", "0"], &format!("orbit of 0: {}", orbit.join(" -> ")));
    let c = critical_data(&f).map_err(check)?;
    let pts: Vec<String> = c.points.iter().map(|(p, _)| p.to_string()).collect();
    let vals: Vec<String> = c.value_set().iter().map(|p| p.to_string()).collect();
    ok &= report(pts == ["0", "12/5"], &format!("critical points: {}", pts.join(", ")));
    ok &= report(vals == ["121/96", "inf"], &format!("critical values: {}", vals.join(", ")));
    let z = verify_z_formula().map_err(check)?;
    ok &= report(z.wronskian_route == Some(true), "z identity via the Wronskian root");
    ok &= report(z.resultant_route, "z identity via the resultant");
    if let Some(at) = at {
        let v = rationals(&at, 2)?;
        let (x, y) = (&v[0], &v[1]);
        if let Some(cond) = delta_contains(x, y) {
            println!("NOTE ({x}, {y}) lies on the excluded curve {cond}");
        }
        match specialize_family(x, y) {
            Ok(m) => {
                let spec = PortraitSpec::family(x, y).map_err(check)?;
                let rep = verify_portrait(&m, &spec).map_err(check)?;
                for c in &rep.conditions {
                    report(c.holds, &format!("{}: {}", c.name, c.detail));
                }
                ok &= report(rep.ok(), &format!("portrait of F(t; {x}, {y})"));
            }
            Err(e) => ok &= report(false, &format!("F(t; {x}, {y}) undefined: {e}")),
        }
    }
    Ok(ok)
}

fn zvk(arrangement: PathBuf, loops: PathBuf) -> Outcome {
    let read = |p: &PathBuf| std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())));
    let arr = parse_arrangement(&read(&arrangement)?).map_err(check)?;
    let lps = parse_loops(&read(&loops)?, &arr).map_err(check)?;
    let p = zvk_presentation(&arr, &lps).map_err(check)?;
    print!("{}", p.to_text());
    Ok(true)
}

fn stallings(gens: String, query: String) -> Outcome {
    let gen_srcs: Vec<&str> = gens.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let mut names = BTreeSet::new();
    for src in gen_srcs.iter().chain([&query.as_str()]) {
        for tok in src.split_whitespace() {
            names.insert(tok.split('^').next().unwrap_or(tok).to_string());
        }
    }
    let names: Vec<String> = names.into_iter().collect();
    let alpha = Alphabet::new(&names).map_err(usage)?;
    let words = gen_srcs
        .iter()
        .map(|s| FreeWord::parse(&alpha, s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(usage)?;
    let q = FreeWord::parse(&alpha, &query).map_err(usage)?;
    let g = stallings_fold(&alpha, &words).map_err(check)?;
    let (rank, index) = subgroup_rank_index(&g);
    println!("vertices {}, edges {}, rank {rank}, index {index}", g.vertex_count(), g.edge_count());
    match subgroup_member(&g, &q).map_err(check)? {
        (true, Some(sp)) => println!("member: {q} = {sp} in the generators"),
        (true, None) => println!("member"),
        (false, _) => println!("not a member"),
    }
    Ok(true)
}

fn certificate(n_max: u32, out: PathBuf) -> Outcome {
    let r = run_case_study_certificate(n_max, &out).map_err(check)?;
    println!("{} checks, {} assumptions, written to {}", r.check_count(), r.assumptions().len(), out.display());
    if let Some((sec, text)) = r.first_failure() {
        println!("first failure [{sec}] {text}");
    }
    println!("VERDICT {}", r.verdict());
    Ok(r.verdict() == Verdict::Pass)
}

fn plot(window: String, out: PathBuf) -> Outcome {
    let v = rationals(&window, 4)?;
    let w = PlotWindow::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone());
    plot_delta(&w, &out).map_err(check)?;
    println!("wrote {}", out.display());
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::VerifyFamily { at } => verify_family(at),
        Command::Zvk { arrangement, loops } => zvk(arrangement, loops),
        Command::Stallings { gens, query } => stallings(gens, query),
        Command::Certificate { n_max, out } => certificate(n_max, out),
        Command::PlotDelta { window, out } => plot(window, out),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("usage error: {e}");
            ExitCode::from(2)
        }
    }
}
