use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::space::{enumerate_lco, enumerate_left_orderings, enumerate_rco, enumerate_right_orderings};
use super::SearchConfig;
use crate::corder::{circular_from_linear, is_invariant, CircularOrdering, CyclicOrder, LinearOrder};
use crate::quandle::{FiniteQuandle, Side};
use crate::{Error, Result};

/// The linear orderings sent to one circular ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    pub image: CyclicOrder,
    pub preimages: Vec<LinearOrder>,
}

/// The map `RO(Q) → RCO(Q)` (or `LO(Q) → LCO(Q)`) sending a linear
/// ordering to its induced circular ordering, computed in full.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub side: Side,
    pub domain: Vec<LinearOrder>,
    pub image: Vec<CyclicOrder>,
    /// One fiber per image point, in the order of `image`.
    pub fibers: Vec<Fiber>,
    /// Every image point passed the invariance check for `side`.
    pub image_verified: bool,
}

impl EmbeddingReport {
    pub fn is_injective(&self) -> bool {
        self.fibers.iter().all(|f| f.preimages.len() == 1)
    }
}

pub fn embedding_image(q: &FiniteQuandle, side: Side, cfg: &SearchConfig) -> Result<EmbeddingReport> {
    let domain = match side {
        Side::Right => enumerate_right_orderings(q, cfg)?.members,
        Side::Left => enumerate_left_orderings(q, cfg)?.members,
    };
    let mut fibers: BTreeMap<CyclicOrder, Vec<LinearOrder>> = BTreeMap::new();
    for o in &domain {
        fibers.entry(circular_from_linear(o)).or_default().push(o.clone());
    }
    let image: Vec<CyclicOrder> = fibers.keys().cloned().collect();
    let image_verified = image.iter().all(|c| is_invariant(c, q, side));
    let fibers = fibers.into_iter().map(|(image, preimages)| Fiber { image, preimages }).collect();
    Ok(EmbeddingReport { side, domain, image, fibers, image_verified })
}

fn check_triple(q: &FiniteQuandle, s: [usize; 3]) -> Result<()> {
    if let Some(&bad) = s.iter().find(|&&x| x >= q.order()) {
        return Err(Error::IndexOutOfRange { index: bad, size: q.order() });
    }
    if crate::corder::is_degenerate_triple(s[0], s[1], s[2]) {
        return Err(Error::DegenerateTriple(s));
    }
    Ok(())
}

/// `{c ∈ RCO(Q) | c(S) = 1}` for a nondegenerate triple `S`.
pub fn subbasic_right(q: &FiniteQuandle, s: [usize; 3], cfg: &SearchConfig) -> Result<Vec<CyclicOrder>> {
    check_triple(q, s)?;
    let space = enumerate_rco(q, cfg)?;
    Ok(space.members.into_iter().filter(|c| c.value(s[0], s[1], s[2]) == 1).collect())
}

/// `{c ∈ LCO(Q) | c(S) = 1}` for a nondegenerate triple `S`.
pub fn subbasic_left(q: &FiniteQuandle, s: [usize; 3], cfg: &SearchConfig) -> Result<Vec<CyclicOrder>> {
    check_triple(q, s)?;
    let space = enumerate_lco(q, cfg)?;
    Ok(space.members.into_iter().filter(|c| c.value(s[0], s[1], s[2]) == 1).collect())
}

/// `{< ∈ RO(Q) | a < b}` (or `LO(Q)`) for `a ≠ b`.
pub fn subbasic_linear(
    q: &FiniteQuandle,
    side: Side,
    (a, b): (usize, usize),
    cfg: &SearchConfig,
) -> Result<Vec<LinearOrder>> {
    if let Some(&bad) = [a, b].iter().find(|&&x| x >= q.order()) {
        return Err(Error::IndexOutOfRange { index: bad, size: q.order() });
    }
    if a == b {
        return Err(Error::DiagonalPair(a));
    }
    let space = match side {
        Side::Right => enumerate_right_orderings(q, cfg)?,
        Side::Left => enumerate_left_orderings(q, cfg)?,
    };
    Ok(space.members.into_iter().filter(|o| o.precedes(a, b)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::trivial_quandle;
    use alloc::vec;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn trivial_three_right() {
        let r = embedding_image(&trivial_quandle(3), Side::Right, &cfg()).unwrap();
        assert_eq!(r.domain.len(), 6);
        assert_eq!(r.image.len(), 2);
        assert!(r.fibers.iter().all(|f| f.preimages.len() == 3));
        assert!(r.image_verified && !r.is_injective());
    }

    #[test]
    fn tiny_carriers() {
        let r = embedding_image(&trivial_quandle(2), Side::Right, &cfg()).unwrap();
        assert_eq!((r.domain.len(), r.image.len()), (2, 1));
        let r = embedding_image(&trivial_quandle(1), Side::Left, &cfg()).unwrap();
        assert_eq!((r.domain.len(), r.image.len()), (1, 1));
        assert!(r.is_injective());
        let r = embedding_image(&trivial_quandle(3), Side::Left, &cfg()).unwrap();
        assert!(r.domain.is_empty() && r.image.is_empty());
    }

    #[test]
    fn subbasis() {
        let t3 = trivial_quandle(3);
        assert_eq!(subbasic_right(&t3, [0, 1, 2], &cfg()).unwrap(), vec![CyclicOrder::identity(3)]);
        assert_eq!(subbasic_right(&t3, [0, 0, 1], &cfg()), Err(Error::DegenerateTriple([0, 0, 1])));
        assert!(subbasic_left(&t3, [0, 1, 2], &cfg()).unwrap().is_empty());
        assert_eq!(subbasic_linear(&t3, Side::Right, (0, 1), &cfg()).unwrap().len(), 3);
        assert_eq!(subbasic_linear(&t3, Side::Right, (1, 1), &cfg()), Err(Error::DiagonalPair(1)));
        assert!(matches!(subbasic_right(&t3, [0, 1, 7], &cfg()), Err(Error::IndexOutOfRange { .. })));
    }
}
