//! JSON documents for groups, quandles and orderings.
//!
//! Groups and quandles may be written 0- or 1-indexed (`index_base`); they
//! are normalized to 0-indexed tables on input and always written
//! 0-indexed.

use serde::{Deserialize, Serialize};

use quandle_order::algebra::{group_from_table, FiniteGroup};
use quandle_order::corder::{CyclicOrder, LinearOrder, TripleFunction};
use quandle_order::quandle::{quandle_from_table, FiniteQuandle};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Group {
        #[serde(default)]
        index_base: usize,
        identity: usize,
        table: Vec<Vec<usize>>,
    },
    Quandle {
        #[serde(default)]
        index_base: usize,
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Group(FiniteGroup),
    Quandle { quandle: FiniteQuandle, name: Option<String> },
}

fn rebase(table: Vec<Vec<usize>>, base: usize) -> Result<Vec<Vec<usize>>, CliError> {
    match base {
        0 => Ok(table),
        1 => table
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| v.checked_sub(1).ok_or_else(|| CliError::Parse("entry 0 in a 1-indexed table".into())))
                    .collect()
            })
            .collect(),
        b => Err(CliError::Parse(format!("index_base must be 0 or 1, got {b}"))),
    }
}

pub fn parse_input(text: &str) -> Result<Structure, CliError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    match doc {
        Document::Group { index_base, identity, table } => {
            let identity = identity
                .checked_sub(index_base)
                .ok_or_else(|| CliError::Parse("identity 0 in a 1-indexed document".into()))?;
            let table = rebase(table, index_base)?;
            Ok(Structure::Group(group_from_table(&table, identity)?))
        }
        Document::Quandle { index_base, table, name } => {
            let table = rebase(table, index_base)?;
            Ok(Structure::Quandle { quandle: quandle_from_table(&table)?, name })
        }
    }
}

pub fn quandle_document(q: &FiniteQuandle, name: Option<String>) -> Document {
    Document::Quandle { index_base: 0, table: q.rows(), name }
}

pub fn group_document(g: &FiniteGroup) -> Document {
    Document::Group { index_base: 0, identity: g.identity(), table: g.rows() }
}

pub fn serialize(doc: &Document) -> String {
    serde_json::to_string(doc).expect("documents always serialize")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementDoc {
    pub arrangement: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankingDoc {
    pub ranking: Vec<usize>,
}

impl From<&CyclicOrder> for ArrangementDoc {
    fn from(c: &CyclicOrder) -> Self {
        ArrangementDoc { arrangement: c.arrangement().to_vec() }
    }
}

impl From<&LinearOrder> for RankingDoc {
    fn from(o: &LinearOrder) -> Self {
        RankingDoc { ranking: o.ranking().to_vec() }
    }
}

impl TryFrom<ArrangementDoc> for CyclicOrder {
    type Error = CliError;
    fn try_from(d: ArrangementDoc) -> Result<Self, CliError> {
        Ok(CyclicOrder::new(d.arrangement)?)
    }
}

impl TryFrom<RankingDoc> for LinearOrder {
    type Error = CliError;
    fn try_from(d: RankingDoc) -> Result<Self, CliError> {
        Ok(LinearOrder::new(d.ranking)?)
    }
}

/// `[x, y, z, value]` for each nondegenerate triple.
pub fn triple_function_entries(f: &TripleFunction) -> Vec<[i64; 4]> {
    f.nondegenerate_entries()
        .map(|([x, y, z], v)| [x as i64, y as i64, z as i64, i64::from(v)])
        .collect()
}

pub fn triple_function_from_entries(n: usize, entries: &[[i64; 4]]) -> Result<TripleFunction, CliError> {
    let mut parsed = Vec::with_capacity(entries.len());
    for &[x, y, z, v] in entries {
        let idx = |i: i64| usize::try_from(i).map_err(|_| CliError::Parse(format!("negative index {i}")));
        let v = i8::try_from(v).map_err(|_| CliError::Parse(format!("value {v} out of range")))?;
        parsed.push(([idx(x)?, idx(y)?, idx(z)?], v));
    }
    Ok(TripleFunction::from_entries(n, &parsed)?)
}
