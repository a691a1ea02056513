//! JSON rendering of verdicts, spaces, census rows and errors.

use serde_json::{json, Value};

use quandle_order::catalog::CensusRecord;
use quandle_order::corder::{CyclicOrder, LinearOrder};
use quandle_order::quandle::FiniteQuandle;
use quandle_order::search::{Certificate, EmbeddingReport, Verdict, Witness};
use quandle_order::Error;

use crate::formats::{ArrangementDoc, RankingDoc};
use crate::CliError;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn quandle_json(q: &FiniteQuandle) -> Value {
    json!({ "order": q.order(), "table": q.rows() })
}

pub fn cyclic_json(c: &CyclicOrder) -> Value {
    serde_json::to_value(ArrangementDoc::from(c)).unwrap()
}

pub fn linear_json(o: &LinearOrder) -> Value {
    serde_json::to_value(RankingDoc::from(o)).unwrap()
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Circular(c) => cyclic_json(c),
        Witness::Linear(o) => linear_json(o),
    }
}

pub fn certificate_json(c: &Certificate) -> Value {
    let mut v = match c {
        Certificate::NonCyclicAction { group_order, max_element_order } => {
            json!({ "group_order": group_order, "max_element_order": max_element_order })
        }
        Certificate::NonSemiregularAction { group_order, element, fixed_point } => {
            json!({ "group_order": group_order, "element": element, "fixed_point": fixed_point })
        }
        Certificate::NonInjectiveTranslation { base, points } => json!({ "base": base, "points": points }),
        Certificate::NonIdentityTranslation { side, base, point } => {
            json!({ "side": side.name(), "base": base, "point": point })
        }
        Certificate::Exhaustive { candidates } => json!({ "candidates": candidates }),
    };
    v["kind"] = json!(c.kind());
    v
}

/// `answer`, `witness`, `certificate` and `oracle_checked` fields.
pub fn verdict_fields(v: &Verdict) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("answer".into(), json!(yes_no(v.answer)));
    m.insert("witness".into(), v.witness.as_ref().map_or(Value::Null, witness_json));
    m.insert("certificate".into(), v.certificate.as_ref().map_or(Value::Null, certificate_json));
    m.insert("oracle_checked".into(), json!(v.oracle_checked));
    m
}

pub fn embedding_json(r: &EmbeddingReport) -> Value {
    json!({
        "side": r.side.name(),
        "domain_size": r.domain.len(),
        "image_size": r.image.len(),
        "image_verified": r.image_verified,
        "injective": r.is_injective(),
        "fibers": r.fibers.iter().map(|f| json!({
            "image": cyclic_json(&f.image),
            "preimages": f.preimages.iter().map(linear_json).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn census_record_json(r: &CensusRecord) -> Value {
    json!({
        "order": r.order,
        "class_id": r.class_id,
        "representative_table": r.representative.rows(),
        "right_circular": r.right_circular,
        "left_circular": r.left_circular,
        "bi_circular": r.bi_circular,
        "right_orderable": r.right_orderable,
        "left_orderable": r.left_orderable,
        "latin": r.latin,
        "involutory": r.involutory,
        "trivial": r.trivial,
        "orbit_sizes": r.orbit_sizes,
        "rco_size": r.rco_size,
        "lco_size": r.lco_size,
        "ro_size": r.ro_size,
        "lo_size": r.lo_size,
    })
}

pub fn error_json(e: &CliError) -> Value {
    let mut body = json!({ "message": e.to_string() });
    let kind = match e {
        CliError::Parse(_) => "ParseError",
        CliError::Io { .. } => "IoError",
        CliError::Usage(_) => "UsageError",
        CliError::Invalid(inner) => {
            match inner {
                Error::NotAQuandle { axiom, witness } => {
                    body["axiom"] = json!(axiom.name());
                    body["witness"] = json!(witness);
                }
                Error::ResourceLimit { what, requested, limit } => {
                    body["what"] = json!(what);
                    body["requested"] = json!(requested);
                    body["limit"] = json!(limit);
                }
                _ => {}
            }
            error_kind(inner)
        }
    };
    body["kind"] = json!(kind);
    json!({ "error": body })
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::MalformedTable(_) => "MalformedTable",
        Error::NotAGroup(_) => "NotAGroup",
        Error::NotAnAutomorphism(_) => "NotAnAutomorphism",
        Error::NotAPermutation { .. } => "NotAPermutation",
        Error::NotInvertible { .. } => "NotInvertible",
        Error::NotAQuandle { .. } => "NotAQuandle",
        Error::NotACircularOrdering(_) => "NotACircularOrdering",
        Error::SmallCarrier(_) => "SmallCarrier",
        Error::InvalidSequence(_) => "InvalidSequence",
        Error::IndexOutOfRange { .. } => "IndexOutOfRange",
        Error::CarrierMismatch(..) => "CarrierMismatch",
        Error::DegenerateTriple(_) => "DegenerateTriple",
        Error::DiagonalPair(_) => "DiagonalPair",
        Error::NoFactors => "NoFactors",
        Error::ResourceLimit { .. } => "ResourceLimit",
        Error::OracleMismatch(_) => "OracleMismatch",
    }
}

/// Indented `key: value` rendering for people.
pub fn render_pretty(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}

fn is_scalar_list(v: &Value) -> bool {
    v.as_array().is_some_and(|a| a.iter().all(|x| !x.is_object() && !x.is_array() || is_scalar_list(x)))
}

fn render_into(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if x.is_object() || (x.is_array() && !is_scalar_list(x)) {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_into(x, depth + 1, out);
                } else {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar(x)));
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if x.is_object() {
                    out.push_str(&format!("{pad}-\n"));
                    render_into(x, depth + 1, out);
                } else {
                    out.push_str(&format!("{pad}- {}\n", scalar(x)));
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
