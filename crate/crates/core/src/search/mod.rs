//! Deciding and enumerating invariant orderings of a finite quandle.
//!
//! Every decision has two tiers. The fast tier works on the permutation
//! group generated by the relevant translations: a group of permutations of
//! `n ≥ 3` points preserves some cyclic arrangement exactly when it is
//! cyclic and acts semiregularly, since the symmetries of an arrangement
//! are its rotations. The exhaustive tier filters every candidate
//! arrangement (or ranking) through the definitional invariance check.
//! By default both run and must agree.

mod decide;
mod embedding;
mod space;

pub use decide::{
    cyclic_witness_for_permutations, decide, decide_bicircular, decide_left_circular,
    decide_left_orderable, decide_right_circular, decide_right_orderable, Certificate, Property,
    Verdict, Witness,
};
pub use embedding::{
    embedding_image, subbasic_left, subbasic_linear, subbasic_right, EmbeddingReport, Fiber,
};
pub use space::{
    enumerate_bicircular, enumerate_biorderings, enumerate_circular_orderings, enumerate_lco,
    enumerate_left_orderings, enumerate_rco, enumerate_right_orderings, enumerate_space_part,
    CircularOrderings, Member, OrderSpace, Partition, Rankings, SpaceKind,
};

use crate::algebra::DEFAULT_CLOSURE_LIMIT;

/// Which decision tier(s) to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    /// Structural argument only.
    Fast,
    /// Brute-force enumeration only; fails past the enumeration caps.
    Exhaustive,
    /// Fast path, cross-checked by enumeration whenever the carrier is
    /// within `oracle_max_n`.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub tier: Tier,
    /// Largest carrier for which `(n-1)!` arrangements are enumerated.
    pub max_circular_n: usize,
    /// Largest carrier for which `n!` rankings are enumerated.
    pub max_linear_n: usize,
    /// Largest carrier on which [`Tier::Both`] runs the oracle.
    pub oracle_max_n: usize,
    pub closure_limit: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            tier: Tier::Both,
            max_circular_n: 10,
            max_linear_n: 8,
            oracle_max_n: 8,
            closure_limit: DEFAULT_CLOSURE_LIMIT,
        }
    }
}

impl SearchConfig {
    pub fn with_tier(mut self, tier: Tier) -> Self {
        self.tier = tier;
        self
    }
}
