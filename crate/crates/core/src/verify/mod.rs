//! Identity verification: runs registry identities and displayed examples
//! and records residuals.

mod examples;
mod grid;
mod record;
mod run;

pub use examples::{displayed_examples, DisplayedExample};
pub use grid::{Grid, ParamRange, DEFAULT_MAX_WEIGHT};
pub use record::{
    from_jsonl, to_jsonl, weight_report, Bucket, GroupSummary, Parity, RecordKind, Summary, VerificationRecord,
};
pub use run::{
    cross_check_qeq, tolerance, verify_all, verify_example, verify_examples, verify_grid, verify_one, CrossCheck,
};
