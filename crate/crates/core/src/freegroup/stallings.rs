use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use super::{Alphabet, FreeGroupError, FreeWord, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupIndex {
    Finite(usize),
    Infinite,
}

impl fmt::Display for SubgroupIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(n) => write!(f, "{n}"),
            Self::Infinite => write!(f, "infinite"),
        }
    }
}

/// A labelled edge `from --gen--> to`. `label` is a word in the subgroup
/// generators recording how traversal of this edge contributes to the
/// spelling of a loop.
#[derive(Clone, Debug)]
pub struct FoldedEdge {
    pub from: usize,
    pub to: usize,
    pub gen: usize,
    pub label: FreeWord,
}

#[derive(Clone, Debug)]
struct Step {
    target: usize,
    label: FreeWord,
}

/// Folded core graph of a finitely generated subgroup of a free group.
///
/// Vertex 0 is the basepoint. Every edge carries a label in the free group
/// on the given generators (`h1, h2, ...`); reading the labels along a
/// basepoint loop spells the loop's word in terms of those generators.
/// Parallel-edge folds lose a relation among the generators; those are kept
/// in [`StallingsGraph::kernel`].
#[derive(Clone, Debug)]
pub struct StallingsGraph {
    alphabet: Arc<Alphabet>,
    generators: Vec<FreeWord>,
    gen_alphabet: Arc<Alphabet>,
    vertex_count: usize,
    edges: Vec<FoldedEdge>,
    steps: BTreeMap<(usize, Letter), Step>,
    kernel: Vec<FreeWord>,
}

struct Builder {
    edges: Vec<Option<FoldedEdge>>,
    incident: Vec<Vec<usize>>,
    alive: Vec<bool>,
    kernel: Vec<FreeWord>,
}

impl Builder {
    fn add_vertex(&mut self) -> usize {
        self.incident.push(Vec::new());
        self.alive.push(true);
        self.incident.len() - 1
    }

    fn add_edge(&mut self, e: FoldedEdge) {
        let id = self.edges.len();
        self.incident[e.from].push(id);
        if e.to != e.from {
            self.incident[e.to].push(id);
        }
        self.edges.push(Some(e));
    }

    /// Half-edges leaving `v`, in incidence order, as `(letter, edge, target, traversal label)`.
    fn half_edges(&self, v: usize) -> Vec<(Letter, usize, usize, FreeWord)> {
        let mut out = Vec::new();
        for &id in &self.incident[v] {
            let Some(e) = &self.edges[id] else { continue };
            if e.from == v {
                out.push((Letter::pos(e.gen), id, e.to, e.label.clone()));
            }
            if e.to == v {
                out.push((Letter::neg(e.gen), id, e.from, e.label.inv()));
            }
        }
        out
    }

    fn find_clash(&self, v: usize) -> Option<[(usize, usize, FreeWord); 2]> {
        let hs = self.half_edges(v);
        for i in 0..hs.len() {
            for j in i + 1..hs.len() {
                if hs[i].0 == hs[j].0 && hs[i].1 != hs[j].1 {
                    let a = (hs[i].1, hs[i].2, hs[i].3.clone());
                    let b = (hs[j].1, hs[j].2, hs[j].3.clone());
                    return Some([a, b]);
                }
            }
        }
        None
    }

    fn kill_edge(&mut self, id: usize) {
        if let Some(e) = self.edges[id].take() {
            self.incident[e.from].retain(|&x| x != id);
            self.incident[e.to].retain(|&x| x != id);
        }
    }

    /// Folds two half-edges at the same vertex carrying the same letter.
    /// Returns the vertex that may have new clashes.
    fn fold(&mut self, pair: [(usize, usize, FreeWord); 2]) -> Result<usize, FreeGroupError> {
        let [mut keep, mut drop] = pair;
        if keep.1 == drop.1 {
            let lost = keep.2.inv().mul(&drop.2)?;
            self.kernel.push(lost);
            self.kill_edge(drop.0);
            return Ok(keep.1);
        }
        // The basepoint never moves; otherwise the larger vertex merges into the smaller.
        if drop.1 == 0 || (keep.1 != 0 && drop.1 < keep.1) {
            std::mem::swap(&mut keep, &mut drop);
        }
        let (survivor, merged) = (keep.1, drop.1);
        let delta = keep.2.inv().mul(&drop.2)?;
        let delta_inv = delta.inv();
        self.kill_edge(drop.0);
        let moved = std::mem::take(&mut self.incident[merged]);
        for id in moved {
            let Some(e) = self.edges[id].as_mut() else { continue };
            if e.from == merged {
                e.from = survivor;
                e.label = delta.mul(&e.label)?;
            }
            if e.to == merged {
                e.to = survivor;
                e.label = e.label.mul(&delta_inv)?;
            }
            if !self.incident[survivor].contains(&id) {
                self.incident[survivor].push(id);
            }
        }
        self.alive[merged] = false;
        Ok(survivor)
    }
}

impl StallingsGraph {
    /// Folds the bouquet of `gens` into the core graph of the subgroup they
    /// generate. Generators are laid out in order and label clashes are
    /// resolved from a FIFO worklist, so the result is deterministic.
    pub fn fold(alphabet: &Arc<Alphabet>, gens: &[FreeWord]) -> Result<Self, FreeGroupError> {
        let probe = FreeWord::identity(alphabet);
        for g in gens {
            probe.same_alphabet(g)?;
        }
        let gen_alphabet = Alphabet::numbered("h", gens.len().max(1))?;
        let mut b = Builder {
            edges: Vec::new(),
            incident: Vec::new(),
            alive: Vec::new(),
            kernel: Vec::new(),
        };
        let base = b.add_vertex();
        for (i, g) in gens.iter().enumerate() {
            let h = FreeWord::generator(&gen_alphabet, i);
            if g.is_identity() {
                b.kernel.push(h);
                continue;
            }
            let n = g.len();
            let mut prev = base;
            for (k, &l) in g.letters().iter().enumerate() {
                let next = if k + 1 == n { base } else { b.add_vertex() };
                let traversal = if k == 0 { h.clone() } else { FreeWord::identity(&gen_alphabet) };
                let e = if l.inverse {
                    FoldedEdge { from: next, to: prev, gen: l.gen, label: traversal.inv() }
                } else {
                    FoldedEdge { from: prev, to: next, gen: l.gen, label: traversal }
                };
                b.add_edge(e);
                prev = next;
            }
        }

        let mut queue: VecDeque<usize> = (0..b.alive.len()).collect();
        while let Some(v) = queue.pop_front() {
            if !b.alive[v] {
                continue;
            }
            if let Some(pair) = b.find_clash(v) {
                let touched = b.fold(pair)?;
                queue.push_back(touched);
                if b.alive[v] && v != touched {
                    queue.push_back(v);
                }
            }
        }

        // Prune hanging trees away from the basepoint.
        loop {
            let leaf = (1..b.alive.len()).find(|&v| {
                b.alive[v] && {
                    let hs = b.half_edges(v);
                    hs.len() <= 1
                }
            });
            let Some(v) = leaf else { break };
            for id in b.incident[v].clone() {
                b.kill_edge(id);
            }
            b.alive[v] = false;
        }

        // Canonical numbering: breadth-first from the basepoint in letter order.
        let mut number = vec![usize::MAX; b.alive.len()];
        number[base] = 0;
        let mut order = vec![base];
        let mut bfs = VecDeque::from([base]);
        while let Some(v) = bfs.pop_front() {
            let mut hs = b.half_edges(v);
            hs.sort_by_key(|h| (h.0, h.1));
            for (_, _, t, _) in hs {
                if number[t] == usize::MAX {
                    number[t] = order.len();
                    order.push(t);
                    bfs.push_back(t);
                }
            }
        }
        let mut edges: Vec<FoldedEdge> = b
            .edges
            .iter()
            .flatten()
            .map(|e| FoldedEdge {
                from: number[e.from],
                to: number[e.to],
                gen: e.gen,
                label: e.label.clone(),
            })
            .collect();
        edges.sort_by_key(|e| (e.from, e.gen, e.to));
        let mut steps = BTreeMap::new();
        for e in &edges {
            steps.insert((e.from, Letter::pos(e.gen)), Step { target: e.to, label: e.label.clone() });
            steps.insert((e.to, Letter::neg(e.gen)), Step { target: e.from, label: e.label.inv() });
        }
        Ok(Self {
            alphabet: alphabet.clone(),
            generators: gens.to_vec(),
            gen_alphabet,
            vertex_count: order.len(),
            edges,
            steps,
            kernel: b.kernel,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn generators(&self) -> &[FreeWord] {
        &self.generators
    }

    /// Alphabet `h1, h2, ...` in which spellings are written.
    pub fn generator_alphabet(&self) -> &Arc<Alphabet> {
        &self.gen_alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[FoldedEdge] {
        &self.edges
    }

    /// Relations among the generators lost to parallel-edge folds (and any
    /// trivial generators). Empty exactly when the generators form a basis.
    pub fn kernel(&self) -> &[FreeWord] {
        &self.kernel
    }

    pub fn rank(&self) -> usize {
        self.edges.len() + 1 - self.vertex_count
    }

    /// True when the given generators freely generate the subgroup.
    pub fn is_basis(&self) -> bool {
        self.rank() == self.generators.len()
    }

    pub fn is_complete(&self) -> bool {
        (0..self.vertex_count).all(|v| {
            (0..self.alphabet.len())
                .all(|g| self.steps.contains_key(&(v, Letter::pos(g))) && self.steps.contains_key(&(v, Letter::neg(g))))
        })
    }

    pub fn index(&self) -> SubgroupIndex {
        if self.is_complete() {
            SubgroupIndex::Finite(self.vertex_count)
        } else {
            SubgroupIndex::Infinite
        }
    }

    /// Some spelling of `w` over the generators if `w` lies in the subgroup.
    /// Evaluating the spelling always gives back `w`; it is unique only when
    /// [`Self::is_basis`] holds.
    pub fn spell(&self, w: &FreeWord) -> Result<Option<FreeWord>, FreeGroupError> {
        FreeWord::identity(&self.alphabet).same_alphabet(w)?;
        let mut v = 0;
        let mut spelling = FreeWord::identity(&self.gen_alphabet);
        for &l in w.letters() {
            match self.steps.get(&(v, l)) {
                Some(step) => {
                    spelling = spelling.mul(&step.label)?;
                    v = step.target;
                }
                None => return Ok(None),
            }
        }
        Ok((v == 0).then_some(spelling))
    }

    pub fn contains(&self, w: &FreeWord) -> Result<bool, FreeGroupError> {
        Ok(self.spell(w)?.is_some())
    }

    /// Membership together with the unique spelling; refuses when the
    /// generators are not a basis.
    pub fn unique_spelling(&self, w: &FreeWord) -> Result<Option<FreeWord>, FreeGroupError> {
        if !self.is_basis() {
            return Err(FreeGroupError::SpellingUnavailable {
                rank: self.rank(),
                generators: self.generators.len(),
            });
        }
        self.spell(w)
    }

    /// Evaluates a word over the generator alphabet back into the ambient group.
    pub fn evaluate(&self, spelling: &FreeWord) -> Result<FreeWord, FreeGroupError> {
        let mut out = FreeWord::identity(&self.alphabet);
        for l in spelling.letters() {
            let g = self
                .generators
                .get(l.gen)
                .ok_or_else(|| FreeGroupError::UnknownGenerator(self.gen_alphabet.name(l.gen).to_string()))?;
            out = out.mul(&if l.inverse { g.inv() } else { g.clone() })?;
        }
        Ok(out)
    }

    /// Adjacency listing, one edge per line as `from -gen-> to [label]`.
    pub fn to_adjacency_text(&self) -> String {
        let mut s = format!(
            "stallings-graph vertices={} edges={} base=0 rank={} index={}\n",
            self.vertex_count,
            self.edges.len(),
            self.rank(),
            self.index()
        );
        for e in &self.edges {
            s.push_str(&format!(
                "{} -{}-> {} [{}]\n",
                e.from,
                self.alphabet.name(e.gen),
                e.to,
                e.label
            ));
        }
        s
    }
}

pub fn stallings_fold(alphabet: &Arc<Alphabet>, gens: &[FreeWord]) -> Result<StallingsGraph, FreeGroupError> {
    StallingsGraph::fold(alphabet, gens)
}

/// `(rank, index)` of the folded subgroup.
pub fn subgroup_rank_index(g: &StallingsGraph) -> (usize, SubgroupIndex) {
    (g.rank(), g.index())
}

/// Membership with the unique spelling when the generators are a basis.
pub fn subgroup_member(g: &StallingsGraph, w: &FreeWord) -> Result<(bool, Option<FreeWord>), FreeGroupError> {
    let spelling = g.spell(w)?;
    let member = spelling.is_some();
    if member && g.is_basis() {
        Ok((true, spelling))
    } else {
        Ok((member, None))
    }
}
