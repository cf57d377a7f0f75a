//! Exact computation library for rainbow/monochromatic subgraph counts under
//! edge-colorings of complete and balanced complete bipartite graphs, with
//! brute-force verification of Gallai-Ramsey numbers and multiplicities at
//! desk scale.
//!
//! The crate is organized around five building blocks:
//!
//! * [`host`] — the host graphs `K_n` and `K_{n,n}`, edge indexing, and
//!   materialized automorphism groups;
//! * [`pattern`] — small target graphs, automorphism orders, copy
//!   enumeration, subgraph containment, and theorem bound graphs;
//! * [`coloring`] — exact k-edge-colorings, canonical forms, and
//!   symmetry-reduced enumeration with orbit bookkeeping;
//! * [`structure`] — generators and classifiers for the five canonical
//!   rainbow-free coloring templates;
//! * [`counting`] — closed-form and brute-force copy counting on colored
//!   hosts;
//! * [`engine`] — the Ramsey-theoretic layer: closed formulas, searches, the
//!   table verification harness, and threshold checks.
//!
//! Everything is exact integer arithmetic and deterministic; searches reduce
//! over canonical coloring classes so results are independent of thread
//! count.

pub mod coloring;
pub mod counting;
pub mod engine;
pub mod error;
pub mod host;
pub mod pattern;
pub mod structure;
mod util;

pub use coloring::{
    all_profiles, canonicalize, enumerate_exact_colorings, for_each_exact_coloring_class, ColorClassProfile,
    ColoringClass, EdgeColoring, Violation,
};
pub use counting::{
    count_colored, count_containing, count_containing_oracle, fox_count, has_rainbow, CountReport,
};
pub use engine::{
    default_table_plan, gm_formula, gm_search, gr_formula, gr_search, least_host_size,
    rainbow_threshold_check, verify_tables, FormulaQuery, FormulaResult, GrReport, GrStatus, GrVerdict,
    SearchReport, Setting, TableCell, ThresholdReport,
};
pub use error::{Error, Result};
pub use host::{EdgeId, HostGraph, HostKind, Side, VertexId};
pub use pattern::{
    bound_graph, builtin, contains_subgraph, copy_count, enumerate_copies, BoundFamily, BuiltinPattern,
    PatternGraph, RainbowTarget,
};
pub use structure::{classify_structure, generate_structure, StructureSpec, StructureVerdict};
pub use util::{binomial, binomial_sat, factorial_u128, sub_sat};
