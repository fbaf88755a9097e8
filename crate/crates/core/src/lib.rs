//! Exact character-degree and class-size invariants of finite permutation
//! groups, checked against brute-force structural oracles.

pub mod arith;
pub mod chardeg;
pub mod corpus;
pub mod criteria;
pub mod error;
pub mod field;
pub mod group;
pub mod metrics;
pub mod perm;
pub mod report;
pub mod standard;
pub mod structure;

pub use arith::{Natural, PrimeSet};
pub use chardeg::{character_degrees, DegreeFrequency};
pub use criteria::{
    run_all_criteria, CriterionId, CriterionVerdict, GroupContext, Kind, Parameter,
};
pub use error::{Error, Result};
pub use group::Group;
pub use metrics::ClassSizeFrequency;
pub use perm::Permutation;
pub use standard::{standard_group, Family};

/// Exact group orders and invariant values.
pub type Order = num_bigint::BigUint;

/// `u_π` with machine-word arithmetic; overflows past `u64::MAX`.
pub fn u_pi_word(m: &DegreeFrequency, pi: &PrimeSet) -> u64 {
    metrics::u_pi(m, pi)
}

/// `u_π` with unbounded arithmetic.
pub fn u_pi_exact(m: &DegreeFrequency, pi: &PrimeSet) -> Order {
    metrics::u_pi(m, pi)
}
