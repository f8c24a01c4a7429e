pub mod exact;
pub mod freegroup;
pub mod braid;
pub mod arrangement;
pub mod casestudy;
pub mod grouptheory;
pub mod rational_family;
pub mod pipeline;
