use alloc::vec::Vec;

use super::SearchConfig;
use crate::algebra::next_permutation;
use crate::corder::{CircularOrdering, CyclicOrder, LinearOrder};
use crate::quandle::{FiniteQuandle, Side};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    /// right circular orderings
    Rco,
    /// left circular orderings
    Lco,
    /// circular orderings invariant on both sides
    Bco,
    /// right orderings
    Ro,
    /// left orderings
    Lo,
    /// orderings that are both left and right orderings
    Bo,
}

impl SpaceKind {
    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::Rco => "RCO",
            SpaceKind::Lco => "LCO",
            SpaceKind::Bco => "BCO",
            SpaceKind::Ro => "RO",
            SpaceKind::Lo => "LO",
            SpaceKind::Bo => "BO",
        }
    }

    pub fn is_circular(self) -> bool {
        matches!(self, SpaceKind::Rco | SpaceKind::Lco | SpaceKind::Bco)
    }

    fn sides(self) -> &'static [Side] {
        match self {
            SpaceKind::Rco | SpaceKind::Ro => &[Side::Right],
            SpaceKind::Lco | SpaceKind::Lo => &[Side::Left],
            SpaceKind::Bco | SpaceKind::Bo => &[Side::Right, Side::Left],
        }
    }
}

/// The members of one of the finite ordering spaces of a quandle, sorted
/// and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSpace<T> {
    pub kind: SpaceKind,
    pub quandle: FiniteQuandle,
    pub members: Vec<T>,
}

impl<T: Ord> OrderSpace<T> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.members.binary_search(x).is_ok()
    }

    /// Merges spaces computed on disjoint partitions.
    pub fn merge(parts: impl IntoIterator<Item = OrderSpace<T>>) -> Option<OrderSpace<T>> {
        let mut parts = parts.into_iter();
        let mut first = parts.next()?;
        for p in parts {
            debug_assert_eq!((p.kind, &p.quandle), (first.kind, &first.quandle));
            first.members.extend(p.members);
        }
        first.members.sort();
        first.members.dedup();
        Some(first)
    }
}

/// Selects candidates whose enumeration index is `index` modulo `count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    pub index: usize,
    pub count: usize,
}

impl Partition {
    pub const WHOLE: Partition = Partition { index: 0, count: 1 };

    fn selects(self, k: usize) -> bool {
        k % self.count == self.index
    }
}

/// All canonical arrangements of `0..n` (starting at 0) in lexicographic
/// order; a single arrangement for `n ≤ 2`.
pub struct CircularOrderings {
    current: Option<Vec<usize>>,
}

impl CircularOrderings {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        CircularOrderings { current: Some((0..n).collect()) }
    }
}

impl Iterator for CircularOrderings {
    type Item = CyclicOrder;

    fn next(&mut self) -> Option<CyclicOrder> {
        let cur = self.current.as_mut()?;
        let out = CyclicOrder::new(cur.clone()).expect("arrangement");
        if cur.len() < 2 || !next_permutation(&mut cur[1..]) {
            self.current = None;
        }
        Some(out)
    }
}

/// All rankings of `0..n` in lexicographic order.
pub struct Rankings {
    current: Option<Vec<usize>>,
}

impl Rankings {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        Rankings { current: Some((0..n).collect()) }
    }
}

impl Iterator for Rankings {
    type Item = LinearOrder;

    fn next(&mut self) -> Option<LinearOrder> {
        let cur = self.current.as_mut()?;
        let out = LinearOrder::new(cur.clone()).expect("ranking");
        if !next_permutation(cur) {
            self.current = None;
        }
        Some(out)
    }
}

const CIRCULAR_CAP: &str = "circular ordering enumeration (carrier size)";
const LINEAR_CAP: &str = "ranking enumeration (carrier size)";

fn check_cap(n: usize, cap: usize, what: &'static str) -> Result<()> {
    if n > cap {
        return Err(Error::ResourceLimit { what, requested: n, limit: cap });
    }
    Ok(())
}

pub fn enumerate_circular_orderings(n: usize, cfg: &SearchConfig) -> Result<Vec<CyclicOrder>> {
    check_cap(n, cfg.max_circular_n, CIRCULAR_CAP)?;
    Ok(CircularOrderings::new(n).collect())
}

/// Distinct non-identity translations on `sides`.
pub(crate) fn translation_maps(q: &FiniteQuandle, sides: &[Side]) -> Vec<Vec<usize>> {
    let mut maps: Vec<Vec<usize>> = Vec::new();
    for &side in sides {
        for s in 0..q.order() {
            let m = match side {
                Side::Right => q.right_map(s),
                Side::Left => q.left_map(s),
            };
            if m.iter().enumerate().any(|(i, &j)| i != j) {
                maps.push(m);
            }
        }
    }
    maps.sort();
    maps.dedup();
    maps
}

fn linear_ok(o: &LinearOrder, maps: &[Vec<usize>]) -> bool {
    maps.iter().all(|m| o.ranking().windows(2).all(|w| o.precedes(m[w[0]], m[w[1]])))
}

/// Enumerates the part of a space selected by `part`. Concatenating all
/// parts of a partition and sorting gives the full space.
pub fn enumerate_space_part(
    q: &FiniteQuandle,
    kind: SpaceKind,
    cfg: &SearchConfig,
    part: Partition,
) -> Result<OrderSpace<Member>> {
    let n = q.order();
    let maps = translation_maps(q, kind.sides());
    let members = if kind.is_circular() {
        check_cap(n, cfg.max_circular_n, CIRCULAR_CAP)?;
        CircularOrderings::new(n)
            .enumerate()
            .filter(|(k, _)| part.selects(*k))
            .map(|(_, c)| c)
            .filter(|c| c.carrier_size() < 3 || maps.iter().all(|m| c.preserved_by(m)))
            .map(Member::Circular)
            .collect()
    } else {
        check_cap(n, cfg.max_linear_n, LINEAR_CAP)?;
        Rankings::new(n)
            .enumerate()
            .filter(|(k, _)| part.selects(*k))
            .map(|(_, o)| o)
            .filter(|o| linear_ok(o, &maps))
            .map(Member::Linear)
            .collect()
    };
    Ok(OrderSpace { kind, quandle: q.clone(), members })
}

/// An element of a circular or a linear space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Member {
    Circular(CyclicOrder),
    Linear(LinearOrder),
}

impl OrderSpace<Member> {
    pub fn into_circular(self) -> OrderSpace<CyclicOrder> {
        let members = self
            .members
            .into_iter()
            .map(|m| match m {
                Member::Circular(c) => c,
                Member::Linear(_) => unreachable!("circular space"),
            })
            .collect();
        OrderSpace { kind: self.kind, quandle: self.quandle, members }
    }

    pub fn into_linear(self) -> OrderSpace<LinearOrder> {
        let members = self
            .members
            .into_iter()
            .map(|m| match m {
                Member::Linear(o) => o,
                Member::Circular(_) => unreachable!("linear space"),
            })
            .collect();
        OrderSpace { kind: self.kind, quandle: self.quandle, members }
    }
}

fn circular_space(q: &FiniteQuandle, kind: SpaceKind, cfg: &SearchConfig) -> Result<OrderSpace<CyclicOrder>> {
    Ok(enumerate_space_part(q, kind, cfg, Partition::WHOLE)?.into_circular())
}

fn linear_space(q: &FiniteQuandle, kind: SpaceKind, cfg: &SearchConfig) -> Result<OrderSpace<LinearOrder>> {
    Ok(enumerate_space_part(q, kind, cfg, Partition::WHOLE)?.into_linear())
}

pub fn enumerate_rco(q: &FiniteQuandle, cfg: &SearchConfig) -> Result<OrderSpace<CyclicOrder>> {
    circular_space(q, SpaceKind::Rco, cfg)
}

pub fn enumerate_lco(q: &FiniteQuandle, cfg: &SearchConfig) -> Result<OrderSpace<CyclicOrder>> {
    circular_space(q, SpaceKind::Lco, cfg)
}

pub fn enumerate_bicircular(q: &FiniteQuandle, cfg: &SearchConfig) -> Result<OrderSpace<CyclicOrder>> {
    circular_space(q, SpaceKind::Bco, cfg)
}

pub fn enumerate_right_orderings(q: &FiniteQuandle, cfg: &SearchConfig) -> Result<OrderSpace<LinearOrder>> {
    linear_space(q, SpaceKind::Ro, cfg)
}

pub fn enumerate_left_orderings(q: &FiniteQuandle, cfg: &SearchConfig) -> Result<OrderSpace<LinearOrder>> {
    linear_space(q, SpaceKind::Lo, cfg)
}

pub fn enumerate_biorderings(q: &FiniteQuandle, cfg: &SearchConfig) -> Result<OrderSpace<LinearOrder>> {
    linear_space(q, SpaceKind::Bo, cfg)
}
