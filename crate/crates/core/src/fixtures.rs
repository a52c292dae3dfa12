//! Small reference systems shipped in `fixtures/`.

use crate::format;
use crate::graph::PrecedenceGraph;

pub const FIG1: &str = include_str!("../fixtures/fig1.dcs");
pub const FIG2: &str = include_str!("../fixtures/fig2.dcs");
pub const FIG3: &str = include_str!("../fixtures/fig3.dcs");
pub const FIG7: &str = include_str!("../fixtures/fig7.dcs");

fn load(text: &str) -> PrecedenceGraph {
    format::parse(text).expect("bundled fixture parses").0
}

/// Zero cycle `(1,3,1)`; classes `{1,3}` and `{2}`.
pub fn g_fig1() -> PrecedenceGraph {
    load(FIG1)
}

/// Non-unique maximum redundant edge sets.
pub fn g_fig2() -> PrecedenceGraph {
    load(FIG2)
}

/// Five nodes, classes `{1}` and `{2,3,4,5}`.
pub fn g_fig3() -> PrecedenceGraph {
    load(FIG3)
}

/// Positive cycles only; nothing redundant.
pub fn g_fig7() -> PrecedenceGraph {
    load(FIG7)
}
