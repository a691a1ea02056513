//! Circular and linear orderings of a finite carrier.
//!
//! A circular ordering is a map `c : Q³ → {-1, 0, 1}` that vanishes exactly
//! on degenerate triples and whose cocycle defect vanishes on every
//! quadruple. On a finite carrier every circular ordering is the
//! orientation of a cyclic arrangement, which is how [`CyclicOrder`] stores
//! it; [`TripleFunction`] keeps the raw dense map for validation work.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::is_bijection;
use crate::quandle::{FiniteQuandle, Side};
use crate::{Error, Result};

/// True iff two of the three entries coincide.
#[inline]
pub fn is_degenerate_triple(x: usize, y: usize, z: usize) -> bool {
    x == y || y == z || x == z
}

/// Anything that evaluates as a `{-1, 0, 1}`-valued function on triples.
pub trait CircularOrdering {
    fn carrier_size(&self) -> usize;
    fn value(&self, x: usize, y: usize, z: usize) -> i8;
}

/// A cyclic arrangement of `0..n`, rotated so that it starts at 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicOrder {
    arrangement: Vec<usize>,
    position: Vec<usize>,
}

impl CyclicOrder {
    /// Accepts any rotation of the arrangement.
    pub fn new(arrangement: Vec<usize>) -> Result<Self> {
        if arrangement.is_empty() || !is_bijection(&arrangement) {
            return Err(Error::InvalidSequence(arrangement.len()));
        }
        let start = arrangement.iter().position(|&x| x == 0).unwrap();
        let mut arrangement = arrangement;
        arrangement.rotate_left(start);
        Ok(Self::from_canonical(arrangement))
    }

    fn from_canonical(arrangement: Vec<usize>) -> Self {
        let mut position = vec![0; arrangement.len()];
        for (i, &x) in arrangement.iter().enumerate() {
            position[x] = i;
        }
        CyclicOrder { arrangement, position }
    }

    /// The arrangement `(0, 1, .., n-1)`; for `n ≤ 2` this is the zero
    /// ordering.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        Self::from_canonical((0..n).collect())
    }

    pub fn arrangement(&self) -> &[usize] {
        &self.arrangement
    }

    pub fn successor(&self, x: usize) -> usize {
        let n = self.arrangement.len();
        self.arrangement[(self.position[x] + 1) % n]
    }

    /// Whether the bijection-or-not `map` satisfies
    /// `c(map x, map y, map z) = c(x, y, z)` everywhere.
    ///
    /// Only increasing triples are scanned: both sides are alternating and
    /// invariant under rotation of the arguments, and degenerate triples
    /// map to degenerate triples.
    pub fn preserved_by(&self, map: &[usize]) -> bool {
        let n = self.arrangement.len();
        debug_assert_eq!(map.len(), n);
        if n < 3 {
            return true;
        }
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    if self.value(map[x], map[y], map[z]) != self.value(x, y, z) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl CircularOrdering for CyclicOrder {
    fn carrier_size(&self) -> usize {
        self.arrangement.len()
    }

    #[inline]
    fn value(&self, x: usize, y: usize, z: usize) -> i8 {
        if is_degenerate_triple(x, y, z) {
            return 0;
        }
        let n = self.arrangement.len();
        let px = self.position[x];
        let dy = (self.position[y] + n - px) % n;
        let dz = (self.position[z] + n - px) % n;
        if dy < dz {
            1
        } else {
            -1
        }
    }
}

pub fn eval_cyclic(c: &CyclicOrder, x: usize, y: usize, z: usize) -> i8 {
    c.value(x, y, z)
}

/// Dense `n³` table of values in `{-1, 0, 1}`, indexed `(x·n + y)·n + z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TripleFunction {
    n: usize,
    values: Vec<i8>,
}

impl TripleFunction {
    pub fn zero(n: usize) -> Self {
        TripleFunction { n, values: vec![0; n * n * n] }
    }

    pub fn from_values(n: usize, values: Vec<i8>) -> Result<Self> {
        if values.len() != n * n * n || values.iter().any(|v| !(-1..=1).contains(v)) {
            return Err(Error::InvalidSequence(values.len()));
        }
        Ok(TripleFunction { n, values })
    }

    /// Builds a function from its values on nondegenerate triples; all
    /// other triples are 0.
    pub fn from_entries(n: usize, entries: &[([usize; 3], i8)]) -> Result<Self> {
        let mut f = Self::zero(n);
        for &([x, y, z], v) in entries {
            if let Some(&bad) = [x, y, z].iter().find(|&&i| i >= n) {
                return Err(Error::IndexOutOfRange { index: bad, size: n });
            }
            if is_degenerate_triple(x, y, z) {
                return Err(Error::DegenerateTriple([x, y, z]));
            }
            if !(-1..=1).contains(&v) {
                return Err(Error::InvalidSequence(n));
            }
            f.set(x, y, z, v);
        }
        Ok(f)
    }

    #[inline]
    fn index(&self, x: usize, y: usize, z: usize) -> usize {
        (x * self.n + y) * self.n + z
    }

    pub fn set(&mut self, x: usize, y: usize, z: usize, v: i8) {
        assert!((-1..=1).contains(&v), "triple function values lie in {{-1, 0, 1}}");
        let i = self.index(x, y, z);
        self.values[i] = v;
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// `(triple, value)` for every nondegenerate triple, lexicographically.
    pub fn nondegenerate_entries(&self) -> impl Iterator<Item = ([usize; 3], i8)> + '_ {
        let n = self.n;
        (0..n * n * n).filter_map(move |k| {
            let (x, y, z) = (k / (n * n), (k / n) % n, k % n);
            (!is_degenerate_triple(x, y, z)).then(|| ([x, y, z], self.values[k]))
        })
    }
}

impl CircularOrdering for TripleFunction {
    fn carrier_size(&self) -> usize {
        self.n
    }

    #[inline]
    fn value(&self, x: usize, y: usize, z: usize) -> i8 {
        self.values[self.index(x, y, z)]
    }
}

/// `c(t1,t2,t3) - c(t1,t2,t4) + c(t1,t3,t4) - c(t2,t3,t4)`
pub fn cocycle_defect<C: CircularOrdering + ?Sized>(c: &C, w: [usize; 4]) -> i32 {
    let [t1, t2, t3, t4] = w;
    i32::from(c.value(t1, t2, t3)) - i32::from(c.value(t1, t2, t4))
        + i32::from(c.value(t1, t3, t4))
        - i32::from(c.value(t2, t3, t4))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// zero on a nondegenerate triple or nonzero on a degenerate one
    ZeroPattern,
    /// nonzero cocycle defect
    Cocycle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingViolation {
    pub kind: ViolationKind,
    pub witness: Vec<usize>,
}

impl fmt::Display for OrderingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ViolationKind::ZeroPattern => "zero pattern",
            ViolationKind::Cocycle => "cocycle condition",
        };
        write!(f, "{kind} fails at {:?}", self.witness)
    }
}

/// Checks both circular-ordering conditions exhaustively; reports the
/// first failing triple (zero pattern) or quadruple (cocycle), scanning in
/// lexicographic order.
pub fn validate_triple_function<C: CircularOrdering + ?Sized>(
    c: &C,
) -> core::result::Result<(), OrderingViolation> {
    let n = c.carrier_size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if (c.value(x, y, z) == 0) != is_degenerate_triple(x, y, z) {
                    return Err(OrderingViolation {
                        kind: ViolationKind::ZeroPattern,
                        witness: vec![x, y, z],
                    });
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for x in 0..n {
                for y in 0..n {
                    if cocycle_defect(c, [a, b, x, y]) != 0 {
                        return Err(OrderingViolation {
                            kind: ViolationKind::Cocycle,
                            witness: vec![a, b, x, y],
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Reads the cyclic arrangement off a valid triple function by sorting
/// `1..n` with `y < z ⟺ f(0, y, z) = 1`.
pub fn function_to_cyclic(f: &TripleFunction) -> Result<CyclicOrder> {
    validate_triple_function(f).map_err(Error::NotACircularOrdering)?;
    let n = f.carrier_size();
    if n <= 2 {
        return Err(Error::SmallCarrier(n));
    }
    let mut rest: Vec<usize> = (1..n).collect();
    rest.sort_by(|&a, &b| match f.value(0, a, b) {
        1 => core::cmp::Ordering::Less,
        -1 => core::cmp::Ordering::Greater,
        _ => core::cmp::Ordering::Equal,
    });
    let mut arrangement = Vec::with_capacity(n);
    arrangement.push(0);
    arrangement.extend(rest);
    Ok(CyclicOrder::from_canonical(arrangement))
}

pub fn cyclic_to_function(c: &CyclicOrder) -> TripleFunction {
    let n = c.carrier_size();
    let mut f = TripleFunction::zero(n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                f.set(x, y, z, c.value(x, y, z));
            }
        }
    }
    f
}

/// A strict total order, stored as the ranking from least to greatest.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearOrder {
    ranking: Vec<usize>,
    rank: Vec<usize>,
}

impl LinearOrder {
    pub fn new(ranking: Vec<usize>) -> Result<Self> {
        if ranking.is_empty() || !is_bijection(&ranking) {
            return Err(Error::InvalidSequence(ranking.len()));
        }
        let mut rank = vec![0; ranking.len()];
        for (i, &x) in ranking.iter().enumerate() {
            rank[x] = i;
        }
        Ok(LinearOrder { ranking, rank })
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect()).expect("identity ranking")
    }

    pub fn carrier_size(&self) -> usize {
        self.ranking.len()
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn rank_of(&self, x: usize) -> usize {
        self.rank[x]
    }

    #[inline]
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    /// The induced circular value: `+1` for `a≺b≺c`, `b≺c≺a`, `c≺a≺b`;
    /// `-1` for `a≺c≺b`, `c≺b≺a`, `b≺a≺c`; `0` otherwise.
    pub fn induced_circular_value(&self, a: usize, b: usize, c: usize) -> i8 {
        let lt = |x, y| self.precedes(x, y);
        if (lt(a, b) && lt(b, c)) || (lt(b, c) && lt(c, a)) || (lt(c, a) && lt(a, b)) {
            1
        } else if (lt(a, c) && lt(c, b)) || (lt(c, b) && lt(b, a)) || (lt(b, a) && lt(a, c)) {
            -1
        } else {
            0
        }
    }
}

/// The circular ordering induced by a linear one: its ranking read
/// cyclically.
pub fn circular_from_linear(o: &LinearOrder) -> CyclicOrder {
    CyclicOrder::new(o.ranking.clone()).expect("a ranking is a permutation")
}

fn translate(q: &FiniteQuandle, side: Side, s: usize, t: usize) -> usize {
    match side {
        Side::Right => q.op(t, s),
        Side::Left => q.op(s, t),
    }
}

fn check_sizes(a: usize, b: usize) {
    assert_eq!(a, b, "ordering and quandle live on carriers of different size");
}

/// First `(s, x, y, z)` in lexicographic order at which
/// `c(x, y, z) ≠ c(T_s x, T_s y, T_s z)` for the translation `T_s` on
/// `side`.
///
/// # Panics
/// If the carrier sizes of `c` and `q` differ.
pub fn invariance_witness<C: CircularOrdering + ?Sized>(
    c: &C,
    q: &FiniteQuandle,
    side: Side,
) -> Option<[usize; 4]> {
    invariance_scan(c, q, side, true).into_iter().next()
}

/// Every violating `(s, x, y, z)`; for diagnostics.
pub fn invariance_violations<C: CircularOrdering + ?Sized>(
    c: &C,
    q: &FiniteQuandle,
    side: Side,
) -> Vec<[usize; 4]> {
    invariance_scan(c, q, side, false)
}

fn invariance_scan<C: CircularOrdering + ?Sized>(
    c: &C,
    q: &FiniteQuandle,
    side: Side,
    first_only: bool,
) -> Vec<[usize; 4]> {
    let n = q.order();
    check_sizes(c.carrier_size(), n);
    let mut out = Vec::new();
    for s in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let image = c.value(
                        translate(q, side, s, x),
                        translate(q, side, s, y),
                        translate(q, side, s, z),
                    );
                    if image != c.value(x, y, z) {
                        out.push([s, x, y, z]);
                        if first_only {
                            return out;
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn is_invariant<C: CircularOrdering + ?Sized>(c: &C, q: &FiniteQuandle, side: Side) -> bool {
    invariance_witness(c, q, side).is_none()
}

pub fn is_right_invariant<C: CircularOrdering + ?Sized>(c: &C, q: &FiniteQuandle) -> bool {
    is_invariant(c, q, Side::Right)
}

pub fn is_left_invariant<C: CircularOrdering + ?Sized>(c: &C, q: &FiniteQuandle) -> bool {
    is_invariant(c, q, Side::Left)
}

/// First `(s, a, b)` with `a ≺ b` but not `T_s a ≺ T_s b`. Only
/// consecutive pairs of the ranking are scanned, which suffices by
/// transitivity.
pub fn order_violation(o: &LinearOrder, q: &FiniteQuandle, side: Side) -> Option<[usize; 3]> {
    let n = q.order();
    check_sizes(o.carrier_size(), n);
    for s in 0..n {
        for pair in o.ranking.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if !o.precedes(translate(q, side, s, a), translate(q, side, s, b)) {
                return Some([s, a, b]);
            }
        }
    }
    None
}

pub fn is_right_order(o: &LinearOrder, q: &FiniteQuandle) -> bool {
    order_violation(o, q, Side::Right).is_none()
}

pub fn is_left_order(o: &LinearOrder, q: &FiniteQuandle) -> bool {
    order_violation(o, q, Side::Left).is_none()
}
