//! Total dominator chromatic numbers of graphs and their k-subdivisions.
//!
//! A total dominator coloring is a proper vertex coloring in which every
//! vertex is adjacent to every vertex of some color class; χ_d^t is the
//! least number of classes such a coloring can use. This crate computes
//! χ_d^t, γ_t, and χ exactly by pruned search, evaluates the closed-form
//! values and bounds known for paths, stars, and k-subdivisions, builds the
//! constructive colorings behind those bounds, and replays each bound as a
//! checkable assertion over instance suites.

pub mod bitset;
pub mod coloring;
pub mod constructions;
pub mod exact;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod io;
pub mod subdivision;

pub use coloring::{
    dominated_class, is_proper, is_td_coloring, is_total_dominating_set, Coloring, ColoringError,
};
pub use constructions::{
    gamma_construction, path_construction, star_sub_construction, subdivision_upper_construction,
    ConstructionError, ConstructionId, ConstructionOutcome,
};
pub use exact::{
    brute_tdc_oracle, decide_tdc, exact_chromatic, exact_gamma_t, exact_tdc, Decision,
    SearchBudget, SolveError, SolveStats, TdcResult,
};
pub use formulas::{
    edge_lower_thm_last, gamma_sandwich_sub, henning_bounds, lower_thm24, lower_thm25, path_tdc,
    sandwich_thm22, star_sub_tdc, upper_thm26, upper_thm27, BoundPair, FormulaError,
};
pub use graph::{generate, Family, Graph, GraphError, StructuralFlags, VertexSet};
pub use harness::{
    build_corpus, run_check, run_hunt, run_suite, CheckMode, CheckRow, CheckSpec, HarnessError,
    HuntReport, HuntRow, Instance, Report, ReportFormat, ReportMeta, SuiteConfig, Summary,
    TheoremId, Verdict,
};
pub use io::{parse_graph_file, write_graph_file, GraphFileError};
pub use subdivision::{subdivide, InternalLabel, SubdividedGraph, SubdivisionError};
