//! Shared instance builders for the solver benchmarks.

use tdc_core::{generate, subdivide, Family, Graph};

pub fn path(n: usize) -> Graph {
    generate(Family::Path, n).expect("valid order")
}

pub fn cycle(n: usize) -> Graph {
    generate(Family::Cycle, n).expect("valid order")
}

pub fn star_subdivision(leaves: usize, k: usize) -> Graph {
    let star = generate(Family::Star, leaves).expect("valid order");
    subdivide(&star, k).expect("valid k").graph().clone()
}
