//! Finite quandles and their circular orderings.
//!
//! Everything here works on small finite carriers `{0, .., n-1}` given by
//! operation tables. The crate provides:
//!
//! * [`algebra`]: Cayley-table groups, automorphisms and permutation groups
//!   (closure, cyclicity, semiregularity).
//! * [`quandle`]: validated quandle tables, the standard families
//!   (trivial, dihedral, affine, Conj, Core, generalized Alexander,
//!   products), translations and structural predicates.
//! * [`corder`]: circular orderings as cyclic arrangements or raw triple
//!   functions, linear orderings, and left/right invariance checks.
//! * [`search`]: decision procedures and exhaustive enumeration of the
//!   spaces of right/left circular orderings and right/left orderings.
//! * [`catalog`]: generation of all quandles of a small order up to
//!   isomorphism and the orderability census.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod catalog;
pub mod corder;
mod error;
pub mod quandle;
pub mod search;

pub use error::{Error, GroupViolation, QuandleAxiom, TableError};

pub type Result<T, E = Error> = core::result::Result<T, E>;
