use alloc::vec::Vec;

use crate::corder::OrderingViolation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({row}, {column}) = {value} is out of range")]
    EntryOutOfRange { row: usize, column: usize, value: usize },
}

/// First group axiom a table fails.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupViolation {
    #[error("identity index {0} is out of range")]
    IdentityOutOfRange(usize),
    #[error("row {0} is not a permutation")]
    RowNotPermutation(usize),
    #[error("column {0} is not a permutation")]
    ColumnNotPermutation(usize),
    #[error("identity fails on element {0}")]
    IdentityFailure(usize),
    #[error("associativity fails on ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuandleAxiom {
    /// `s * s = s`
    Idempotency,
    /// every right translation is a bijection
    RightInvertibility,
    /// `(a * b) * c = (a * c) * (b * c)`
    RightDistributivity,
}

impl QuandleAxiom {
    pub fn name(self) -> &'static str {
        match self {
            QuandleAxiom::Idempotency => "idempotency",
            QuandleAxiom::RightInvertibility => "right-invertibility",
            QuandleAxiom::RightDistributivity => "right-distributivity",
        }
    }
}

impl core::fmt::Display for QuandleAxiom {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(#[from] TableError),
    #[error("not a group: {0}")]
    NotAGroup(GroupViolation),
    #[error("not a group automorphism: {0}")]
    NotAnAutomorphism(&'static str),
    #[error("not a permutation of {degree} points")]
    NotAPermutation { degree: usize },
    #[error("multiplier {alpha} is not invertible modulo {n}")]
    NotInvertible { n: usize, alpha: i64 },
    /// `witness` is the offending tuple: `(s, s)` for idempotency,
    /// `(x, y, column)` with `x * column = y * column` for invertibility,
    /// `(a, b, c)` for distributivity.
    #[error("not a quandle: {axiom} fails at {witness:?}")]
    NotAQuandle { axiom: QuandleAxiom, witness: Vec<usize> },
    #[error("not a circular ordering: {0}")]
    NotACircularOrdering(OrderingViolation),
    #[error("carrier of size {0} has no nondegenerate triples")]
    SmallCarrier(usize),
    #[error("sequence is not a permutation of 0..{0}")]
    InvalidSequence(usize),
    #[error("element {index} is out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("carrier sizes differ: {0} vs {1}")]
    CarrierMismatch(usize, usize),
    #[error("triple {0:?} is degenerate")]
    DegenerateTriple([usize; 3]),
    #[error("pair ({0}, {0}) lies on the diagonal")]
    DiagonalPair(usize),
    #[error("empty list of factors")]
    NoFactors,
    #[error("resource limit: {what} needs {requested}, limit is {limit}")]
    ResourceLimit { what: &'static str, requested: usize, limit: usize },
    #[error("fast path and exhaustive search disagree on {0}")]
    OracleMismatch(&'static str),
}
