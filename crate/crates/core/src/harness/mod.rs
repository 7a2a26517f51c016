//! Oracles, worked examples and theorem pipelines.

pub mod fixtures;
pub mod oracles;
pub mod random;
pub mod theorems;

pub use fixtures::{run_fixtures, Basis, ExpectationResult, FixtureSummary};
pub use oracles::{
    pattern_power_positive, sign_search_oracle, subset_invariance_oracle, SubsetReport,
};
pub use theorems::{
    verify_group_theorem, verify_semigroup_theorem, HypothesisCheck, TheoremKind, TheoremReport,
};
