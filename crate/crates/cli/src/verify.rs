//! Named checks of the finite statements the library reproduces.

use serde_json::{json, Value};

use quandle_order::algebra::{cyclic_group, direct_product, symmetric_group};
use quandle_order::catalog::generate_all_quandles;
use quandle_order::corder::{circular_from_linear, is_left_invariant, is_right_invariant, CyclicOrder};
use quandle_order::quandle::{
    conj_quandle, dihedral_quandle, quandle_from_table, trivial_quandle, FiniteQuandle, Side,
};
use quandle_order::search::{
    decide, embedding_image, enumerate_bicircular, enumerate_lco, enumerate_left_orderings,
    enumerate_rco, enumerate_right_orderings, subbasic_linear, subbasic_right, Certificate,
    Property, SearchConfig,
};
use quandle_order::{Error, Result};

use crate::report::{certificate_json, cyclic_json, embedding_json};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Value,
}

type Check = fn(&SearchConfig) -> Result<(bool, Value)>;

pub const CHECKS: [(&str, Check); 7] = [
    ("example:three-element-neither", three_element_neither),
    ("example:dihedral-3-neither", dihedral_3_neither),
    ("example:trivial-2-bicircular", trivial_2_bicircular),
    ("lemma:conj-not-left-circular", conj_not_left_circular),
    ("lemma:ordering", ordering_lemma),
    ("subbasis:trivial-3", subbasis_trivial_3),
    ("embedding:trivial-3-right", embedding_trivial_3_right),
];

/// Runs every check. A check that errors counts as failed and carries the
/// error message.
pub fn verify_paper(cfg: &SearchConfig) -> Vec<CheckResult> {
    CHECKS
        .iter()
        .map(|&(name, check)| match check(cfg) {
            Ok((passed, detail)) => CheckResult { name, passed, detail },
            Err(e) => CheckResult { name, passed: false, detail: json!({ "error": e.to_string() }) },
        })
        .collect()
}

pub fn three_element_quandle() -> FiniteQuandle {
    quandle_from_table(&[vec![0, 0, 1], vec![1, 1, 0], vec![2, 2, 2]]).expect("valid table")
}

fn neither(q: &FiniteQuandle, cfg: &SearchConfig) -> Result<(bool, Value, Option<Certificate>)> {
    let rco = enumerate_rco(q, cfg)?;
    let lco = enumerate_lco(q, cfg)?;
    let right = decide(q, Property::RightCircular, cfg)?;
    let left = decide(q, Property::LeftCircular, cfg)?;
    let ok = rco.is_empty()
        && lco.is_empty()
        && !right.answer
        && !left.answer
        && right.certificate.is_some()
        && left.certificate.is_some();
    let detail = json!({
        "rco_size": rco.len(),
        "lco_size": lco.len(),
        "right_certificate": right.certificate.as_ref().map(certificate_json),
        "left_certificate": left.certificate.as_ref().map(certificate_json),
    });
    Ok((ok, detail, right.certificate))
}

fn three_element_neither(cfg: &SearchConfig) -> Result<(bool, Value)> {
    let (ok, detail, _) = neither(&three_element_quandle(), cfg)?;
    Ok((ok, detail))
}

fn dihedral_3_neither(cfg: &SearchConfig) -> Result<(bool, Value)> {
    let (ok, detail, right) = neither(&dihedral_quandle(3), cfg)?;
    let order_six = matches!(right, Some(Certificate::NonCyclicAction { group_order: 6, .. }));
    Ok((ok && order_six, detail))
}

fn trivial_2_bicircular(cfg: &SearchConfig) -> Result<(bool, Value)> {
    let q = trivial_quandle(2);
    let space = enumerate_bicircular(&q, cfg)?;
    let verdict = decide(&q, Property::BiCircular, cfg)?;
    let ok = space.members == [CyclicOrder::identity(2)] && verdict.answer;
    Ok((ok, json!({ "members": space.members.iter().map(cyclic_json).collect::<Vec<_>>() })))
}

fn conj_not_left_circular(cfg: &SearchConfig) -> Result<(bool, Value)> {
    let groups = [
        ("Z3", cyclic_group(3)),
        ("Z4", cyclic_group(4)),
        ("Z2xZ2", direct_product(&cyclic_group(2), &cyclic_group(2))),
        ("S3", symmetric_group(3)),
    ];
    let mut ok = true;
    let mut sizes = serde_json::Map::new();
    for (name, g) in groups {
        let lco = enumerate_lco(&conj_quandle(&g), cfg)?;
        ok &= lco.is_empty();
        sizes.insert(name.into(), json!(lco.len()));
    }
    Ok((ok, json!({ "lco_sizes": sizes })))
}

fn ordering_lemma(cfg: &SearchConfig) -> Result<(bool, Value)> {
    let mut quandles = 0;
    let mut orderings = 0;
    let mut failures = Vec::new();
    for n in 1..=4 {
        for q in generate_all_quandles(n, false)? {
            quandles += 1;
            for o in enumerate_right_orderings(&q, cfg)?.members {
                orderings += 1;
                if !is_right_invariant(&circular_from_linear(&o), &q) {
                    failures.push(json!({ "table": q.rows(), "side": "right", "ranking": o.ranking() }));
                }
            }
            for o in enumerate_left_orderings(&q, cfg)?.members {
                orderings += 1;
                if !is_left_invariant(&circular_from_linear(&o), &q) {
                    failures.push(json!({ "table": q.rows(), "side": "left", "ranking": o.ranking() }));
                }
            }
        }
    }
    let ok = failures.is_empty();
    Ok((ok, json!({ "quandles": quandles, "orderings": orderings, "failures": failures })))
}

fn subbasis_trivial_3(cfg: &SearchConfig) -> Result<(bool, Value)> {
    let q = trivial_quandle(3);
    let rco = enumerate_rco(&q, cfg)?;
    let r_s = subbasic_right(&q, [0, 1, 2], cfg)?;
    let rejected = matches!(subbasic_right(&q, [0, 0, 1], cfg), Err(Error::DegenerateTriple(_)));
    let mut pair_sizes = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            if a != b {
                pair_sizes.push(subbasic_linear(&q, Side::Right, (a, b), cfg)?.len());
            }
        }
    }
    let ok = rco.len() == 2
        && r_s == [CyclicOrder::identity(3)]
        && rejected
        && pair_sizes.iter().all(|&k| k == 3);
    let detail = json!({
        "r_s": r_s.iter().map(cyclic_json).collect::<Vec<_>>(),
        "degenerate_rejected": rejected,
        "pair_sizes": pair_sizes,
    });
    Ok((ok, detail))
}

fn embedding_trivial_3_right(cfg: &SearchConfig) -> Result<(bool, Value)> {
    let r = embedding_image(&trivial_quandle(3), Side::Right, cfg)?;
    let ok = r.domain.len() == 6
        && r.image.len() == 2
        && r.fibers.iter().all(|f| f.preimages.len() == 3)
        && r.image_verified;
    Ok((ok, embedding_json(&r)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        for r in verify_paper(&SearchConfig::default()) {
            assert!(r.passed, "{} failed: {}", r.name, r.detail);
        }
    }
}
