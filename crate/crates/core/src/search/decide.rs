use alloc::vec::Vec;

use super::space::{enumerate_space_part, translation_maps, Member, Partition, SpaceKind};
use super::{SearchConfig, Tier};
use crate::algebra::{closure_with_limit, is_bijection, DEFAULT_CLOSURE_LIMIT};
use crate::corder::{invariance_witness, order_violation, CyclicOrder, LinearOrder};
use crate::quandle::{FiniteQuandle, Side};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    RightCircular,
    LeftCircular,
    BiCircular,
    RightOrder,
    LeftOrder,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::RightCircular,
        Property::LeftCircular,
        Property::BiCircular,
        Property::RightOrder,
        Property::LeftOrder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::RightCircular => "right-circular",
            Property::LeftCircular => "left-circular",
            Property::BiCircular => "bi-circular",
            Property::RightOrder => "right-order",
            Property::LeftOrder => "left-order",
        }
    }

    pub fn space_kind(self) -> SpaceKind {
        match self {
            Property::RightCircular => SpaceKind::Rco,
            Property::LeftCircular => SpaceKind::Lco,
            Property::BiCircular => SpaceKind::Bco,
            Property::RightOrder => SpaceKind::Ro,
            Property::LeftOrder => SpaceKind::Lo,
        }
    }

    fn sides(self) -> &'static [Side] {
        match self {
            Property::RightCircular | Property::RightOrder => &[Side::Right],
            Property::LeftCircular | Property::LeftOrder => &[Side::Left],
            Property::BiCircular => &[Side::Right, Side::Left],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Circular(CyclicOrder),
    Linear(LinearOrder),
}

/// Why an ordering cannot exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The group generated by the translations is not cyclic, so it is not
    /// a group of rotations of any arrangement.
    NonCyclicAction { group_order: usize, max_element_order: usize },
    /// The generated group is cyclic, but `element ≠ id` fixes
    /// `fixed_point`, which no nontrivial rotation does.
    NonSemiregularAction { group_order: usize, element: Vec<usize>, fixed_point: usize },
    /// `L_base` sends the distinct `points` to the same element, collapsing
    /// a nondegenerate triple.
    NonInjectiveTranslation { base: usize, points: [usize; 2] },
    /// A translation that must be strictly increasing on a finite chain
    /// (hence the identity) moves `point`.
    NonIdentityTranslation { side: Side, base: usize, point: usize },
    /// No candidate among `candidates` passed the definitional check.
    Exhaustive { candidates: usize },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::NonCyclicAction { .. } => "non-cyclic-action",
            Certificate::NonSemiregularAction { .. } => "non-semiregular-action",
            Certificate::NonInjectiveTranslation { .. } => "non-injective-left-translation",
            Certificate::NonIdentityTranslation { .. } => "non-identity-translation",
            Certificate::Exhaustive { .. } => "exhaustive-search",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub property: Property,
    pub answer: bool,
    pub witness: Option<Witness>,
    pub certificate: Option<Certificate>,
    /// True when the exhaustive tier ran and agreed.
    pub oracle_checked: bool,
}

impl Verdict {
    fn yes(property: Property, witness: Witness) -> Self {
        Verdict { property, answer: true, witness: Some(witness), certificate: None, oracle_checked: false }
    }

    fn no(property: Property, certificate: Certificate) -> Self {
        Verdict { property, answer: false, witness: None, certificate: Some(certificate), oracle_checked: false }
    }
}

/// Looks for one arrangement preserved by every map in `maps`.
///
/// The maps generate a group `G`; if `G` is cyclic and semiregular with
/// generator `g` and orbit representatives `r_1 < .. < r_k`, the
/// arrangement `r_1 .. r_k, g r_1 .. g r_k, g² r_1 ..` is rotated by `g`
/// and hence preserved by all of `G`. Otherwise no arrangement is.
pub fn cyclic_witness_for_permutations<P: AsRef<[usize]>>(
    maps: &[P],
    n: usize,
) -> Result<Option<CyclicOrder>> {
    Ok(analyze_permutations(maps, n, DEFAULT_CLOSURE_LIMIT)?.ok())
}

pub(crate) fn analyze_permutations<P: AsRef<[usize]>>(
    maps: &[P],
    n: usize,
    limit: usize,
) -> Result<core::result::Result<CyclicOrder, Certificate>> {
    let group = closure_with_limit(maps, n, limit)?;
    if n <= 2 {
        return Ok(Ok(CyclicOrder::identity(n.max(1))));
    }
    let Some(generator) = group.cyclic_generator() else {
        return Ok(Err(Certificate::NonCyclicAction {
            group_order: group.order(),
            max_element_order: group.max_element_order(),
        }));
    };
    if let Some((element, fixed_point)) = group.fixed_point_witness() {
        return Ok(Err(Certificate::NonSemiregularAction {
            group_order: group.order(),
            element: element.images().to_vec(),
            fixed_point,
        }));
    }
    let reps: Vec<usize> = group.orbits().iter().map(|o| o[0]).collect();
    let mut arrangement = Vec::with_capacity(n);
    let mut layer = reps;
    for _ in 0..group.order() {
        arrangement.extend_from_slice(&layer);
        for x in layer.iter_mut() {
            *x = generator.apply(*x);
        }
    }
    Ok(Ok(CyclicOrder::new(arrangement).expect("orbits partition the carrier")))
}

fn first_non_injective_left(q: &FiniteQuandle) -> Option<Certificate> {
    let n = q.order();
    for s in 0..n {
        for x in 0..n {
            for y in x + 1..n {
                if q.op(s, x) == q.op(s, y) {
                    return Some(Certificate::NonInjectiveTranslation { base: s, points: [x, y] });
                }
            }
        }
    }
    None
}

fn first_moved_point(q: &FiniteQuandle, side: Side) -> Option<Certificate> {
    let n = q.order();
    for base in 0..n {
        for point in 0..n {
            let image = match side {
                Side::Right => q.op(point, base),
                Side::Left => q.op(base, point),
            };
            if image != point {
                return Some(Certificate::NonIdentityTranslation { side, base, point });
            }
        }
    }
    None
}

fn fast_circular(q: &FiniteQuandle, property: Property, cfg: &SearchConfig) -> Result<Verdict> {
    let n = q.order();
    if n <= 2 {
        return Ok(Verdict::yes(property, Witness::Circular(CyclicOrder::identity(n))));
    }
    let sides = property.sides();
    if sides.contains(&Side::Left) {
        if let Some(cert) = first_non_injective_left(q) {
            return Ok(Verdict::no(property, cert));
        }
    }
    let mut maps = translation_maps(q, sides);
    debug_assert!(maps.iter().all(|m| is_bijection(m)));
    if maps.is_empty() {
        maps.push((0..n).collect());
    }
    Ok(match analyze_permutations(&maps, n, cfg.closure_limit)? {
        Ok(c) => Verdict::yes(property, Witness::Circular(c)),
        Err(cert) => Verdict::no(property, cert),
    })
}

fn fast_linear(q: &FiniteQuandle, property: Property) -> Verdict {
    let n = q.order();
    match property {
        Property::RightOrder => match first_moved_point(q, Side::Right) {
            None => Verdict::yes(property, Witness::Linear(LinearOrder::identity(n))),
            Some(cert) => Verdict::no(property, cert),
        },
        Property::LeftOrder => {
            if n == 1 {
                return Verdict::yes(property, Witness::Linear(LinearOrder::identity(1)));
            }
            let cert = first_non_injective_left(q)
                .or_else(|| first_moved_point(q, Side::Left))
                .expect("a quandle with two or more elements has a moving left translation");
            Verdict::no(property, cert)
        }
        _ => unreachable!("linear property"),
    }
}

fn fast(q: &FiniteQuandle, property: Property, cfg: &SearchConfig) -> Result<Verdict> {
    match property {
        Property::RightOrder | Property::LeftOrder => Ok(fast_linear(q, property)),
        _ => fast_circular(q, property, cfg),
    }
}

fn exhaustive(q: &FiniteQuandle, property: Property, cfg: &SearchConfig) -> Result<Verdict> {
    let space = enumerate_space_part(q, property.space_kind(), cfg, Partition::WHOLE)?;
    let n = q.order();
    let candidates = if property.space_kind().is_circular() {
        (1..n).product::<usize>()
    } else {
        (1..=n).product::<usize>()
    };
    let mut verdict = match space.members.into_iter().next() {
        Some(Member::Circular(c)) => Verdict::yes(property, Witness::Circular(c)),
        Some(Member::Linear(o)) => Verdict::yes(property, Witness::Linear(o)),
        None => Verdict::no(property, Certificate::Exhaustive { candidates }),
    };
    verdict.oracle_checked = true;
    Ok(verdict)
}

/// Re-checks a positive witness against the definitions.
fn witness_holds(q: &FiniteQuandle, property: Property, witness: &Witness) -> bool {
    property.sides().iter().all(|&side| match witness {
        Witness::Circular(c) => invariance_witness(c, q, side).is_none(),
        Witness::Linear(o) => order_violation(o, q, side).is_none(),
    })
}

fn within_oracle_cap(q: &FiniteQuandle, property: Property, cfg: &SearchConfig) -> bool {
    let cap = if property.space_kind().is_circular() { cfg.max_circular_n } else { cfg.max_linear_n };
    q.order() <= cfg.oracle_max_n.min(cap)
}

pub fn decide(q: &FiniteQuandle, property: Property, cfg: &SearchConfig) -> Result<Verdict> {
    let verdict = match cfg.tier {
        Tier::Exhaustive => exhaustive(q, property, cfg)?,
        Tier::Fast | Tier::Both => {
            let mut v = fast(q, property, cfg)?;
            if cfg.tier == Tier::Both && within_oracle_cap(q, property, cfg) {
                let oracle = exhaustive(q, property, cfg)?;
                if oracle.answer != v.answer {
                    return Err(Error::OracleMismatch(property.name()));
                }
                v.oracle_checked = true;
            }
            v
        }
    };
    if let Some(w) = &verdict.witness {
        if !witness_holds(q, property, w) {
            return Err(Error::OracleMismatch(property.name()));
        }
    }
    Ok(verdict)
}

pub fn decide_right_circular(q: &FiniteQuandle, cfg: &SearchConfig) -> Result<Verdict> {
    decide(q, Property::RightCircular, cfg)
}

pub fn decide_left_circular(q: &FiniteQuandle, cfg: &SearchConfig) -> Result<Verdict> {
    decide(q, Property::LeftCircular, cfg)
}

pub fn decide_bicircular(q: &FiniteQuandle, cfg: &SearchConfig) -> Result<Verdict> {
    decide(q, Property::BiCircular, cfg)
}

pub fn decide_right_orderable(q: &FiniteQuandle, cfg: &SearchConfig) -> Result<Verdict> {
    decide(q, Property::RightOrder, cfg)
}

pub fn decide_left_orderable(q: &FiniteQuandle, cfg: &SearchConfig) -> Result<Verdict> {
    decide(q, Property::LeftOrder, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::symmetric_group;
    use crate::quandle::{conj_quandle, dihedral_quandle, quandle_from_table, trivial_quandle};
    use alloc::vec;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn engine_examples() {
        let id = [vec![0, 1, 2]];
        assert_eq!(cyclic_witness_for_permutations(&id, 3).unwrap().unwrap().arrangement(), &[0, 1, 2]);
        let cycle = [vec![1, 2, 0]];
        assert_eq!(cyclic_witness_for_permutations(&cycle, 3).unwrap().unwrap().arrangement(), &[0, 1, 2]);
        let swap = [vec![1, 0, 2]];
        assert_eq!(cyclic_witness_for_permutations(&swap, 3).unwrap(), None);
        assert!(cyclic_witness_for_permutations(&[vec![0, 0, 2]], 3).is_err());
        // (0 1)(2 3) on 4 points: orbits {0,1}, {2,3}; arrangement interleaves them
        let c = cyclic_witness_for_permutations(&[vec![1, 0, 3, 2]], 4).unwrap().unwrap();
        assert_eq!(c.arrangement(), &[0, 2, 1, 3]);
        assert!(c.preserved_by(&[1, 0, 3, 2]));
    }

    #[test]
    fn trivial_three() {
        let t3 = trivial_quandle(3);
        let right = decide_right_circular(&t3, &cfg()).unwrap();
        assert!(right.answer && right.oracle_checked);
        assert_eq!(right.witness, Some(Witness::Circular(CyclicOrder::identity(3))));
        let left = decide_left_circular(&t3, &cfg()).unwrap();
        assert!(!left.answer);
        assert_eq!(left.certificate, Some(Certificate::NonInjectiveTranslation { base: 0, points: [0, 1] }));
    }

    #[test]
    fn dihedral_three() {
        let d3 = dihedral_quandle(3);
        let right = decide_right_circular(&d3, &cfg()).unwrap();
        assert!(!right.answer);
        assert_eq!(right.certificate, Some(Certificate::NonCyclicAction { group_order: 6, max_element_order: 3 }));
        assert!(!decide_left_circular(&d3, &cfg()).unwrap().answer);
    }

    #[test]
    fn conj_s3_is_not_right_circular() {
        let q = conj_quandle(&symmetric_group(3));
        let v = decide_right_circular(&q, &cfg()).unwrap();
        assert!(!v.answer && v.oracle_checked);
        assert!(matches!(v.certificate, Some(Certificate::NonCyclicAction { group_order: 6, .. })));
    }

    #[test]
    fn non_semiregular_certificate() {
        let three = quandle_from_table(&[vec![0, 0, 1], vec![1, 1, 0], vec![2, 2, 2]]).unwrap();
        let v = decide_right_circular(&three, &cfg()).unwrap();
        assert_eq!(
            v.certificate,
            Some(Certificate::NonSemiregularAction { group_order: 2, element: vec![1, 0, 2], fixed_point: 2 })
        );
    }

    #[test]
    fn linear_decisions() {
        let t3 = trivial_quandle(3);
        assert!(decide_right_orderable(&t3, &cfg()).unwrap().answer);
        assert!(!decide_left_orderable(&t3, &cfg()).unwrap().answer);
        let d3 = dihedral_quandle(3);
        let v = decide_right_orderable(&d3, &cfg()).unwrap();
        assert_eq!(v.certificate, Some(Certificate::NonIdentityTranslation { side: Side::Right, base: 0, point: 1 }));
        let v = decide_left_orderable(&d3, &cfg()).unwrap();
        assert_eq!(v.certificate, Some(Certificate::NonIdentityTranslation { side: Side::Left, base: 0, point: 1 }));
        assert!(decide_left_orderable(&trivial_quandle(1), &cfg()).unwrap().answer);
    }

    #[test]
    fn tiers_agree_on_small_carriers() {
        let t2 = trivial_quandle(2);
        for p in Property::ALL {
            let fast = decide(&t2, p, &cfg().with_tier(Tier::Fast)).unwrap();
            let slow = decide(&t2, p, &cfg().with_tier(Tier::Exhaustive)).unwrap();
            assert_eq!(fast.answer, slow.answer, "{}", p.name());
        }
        assert!(decide_bicircular(&t2, &cfg()).unwrap().answer);
        assert!(!decide_left_orderable(&t2, &cfg()).unwrap().answer);
    }

    #[test]
    fn exhaustive_tier_respects_caps() {
        let q = trivial_quandle(9);
        let v = decide_right_orderable(&q, &cfg()).unwrap();
        assert!(v.answer && !v.oracle_checked);
        assert!(matches!(
            decide_right_orderable(&q, &cfg().with_tier(Tier::Exhaustive)),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
