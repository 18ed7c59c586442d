//! Random instances, the invariant ledger, end-to-end scenarios and fuzzing for `hawaii-core`.

pub mod fuzz;
pub mod generate;
pub mod landscape;
pub mod ledger;
pub mod report;
pub mod scenarios;
