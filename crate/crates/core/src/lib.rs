//! Generalized Turán numbers of long cycles, paths and matchings.
//!
//! Counts copies of `K_{s,t}`, evaluates the closed-form thresholds, builds
//! the extremal families, and verifies the threshold statements exhaustively
//! on small graph classes.

mod bits;
pub mod canon;
pub mod cli;
pub mod constructions;
pub mod counting;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod io;
pub mod structure;
pub mod verify;

pub use constructions::{build_f, build_h, ConstructionParams, LabeledConstruction, Region};
pub use counting::{binomial, count_kst, CopyCount};
pub use error::{Error, Result};
pub use formulas::{eval_f, eval_f_both, eval_g, BoundParams, Theorem};
pub use graph::{BipartiteGraph, Graph, PathView, Side};
pub use graph6::{decode_graph6, encode_graph6};
pub use verify::{
    enumerate_class, search_conjecture, verify_baseline, verify_theorem, Baseline, Conjecture, GraphClassSpec,
    VerifyOptions, VerifyReport,
};
