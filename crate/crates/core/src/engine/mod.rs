//! The Ramsey-theoretic layer: closed-form gr/bgr and multiplicity values,
//! brute-force search counterparts at desk scale, table verification, and
//! guaranteed-rainbow threshold checks.

mod formula;
mod search;
mod verify;

pub use formula::{
    gm_formula, gm_table_value, gr_formula, least_host_size, star_rainbow_after_duplicates_bipartite,
    star_rainbow_after_duplicates_complete, DuplicateShape, FormulaQuery, FormulaResult, HypothesisCheck,
    Setting,
};
pub use search::{
    gm_search, gr_search, witness_consistent, witness_rainbow_copy, ClassStat, GrReport, GrStatus, GrVerdict,
    SearchReport,
};
pub use verify::{
    default_table_plan, rainbow_threshold_check, verify_tables, KVerdict, TableCell, ThresholdReport,
};
