//! Classification reports, theorem and lemma suites, and report files.

mod families;
mod lemmas;
mod persist;
mod report;
mod suite;

pub use lemmas::{lemma_ids, run_lemma_suite, LemmaCheck, LemmaEntry, LemmaSuiteReport, LEMMAS};
pub use persist::{load_results, parse_results, persist_results, render_results, SCHEMA_VERSION};
pub use report::{
    classify, theorem1_verdict, theorem2_verdict, ClassificationReport, CommutatorRecord, ElementRecord, Field, Status,
    TheoremVerdict, TOO_LARGE,
};
pub use suite::{run_theorem_suite, TheoremSuiteReport, VerdictCounts};
