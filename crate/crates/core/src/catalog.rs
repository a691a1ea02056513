//! All quandles of small order, and the orderability census over them.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::next_permutation;
use crate::quandle::{self, FiniteQuandle};
use crate::search::{self, Property, SearchConfig};
use crate::{Error, Result};

pub const DEFAULT_MAX_CATALOG_ORDER: usize = 5;

/// Every quandle of order `n` (cap 5), or one canonical representative per
/// isomorphism class when `up_to_iso` is set.
pub fn generate_all_quandles(n: usize, up_to_iso: bool) -> Result<Vec<FiniteQuandle>> {
    generate_all_quandles_with_limit(n, up_to_iso, DEFAULT_MAX_CATALOG_ORDER)
}

/// Labeled quandles come from a column-by-column backtracking search:
/// column `c` ranges over the permutations fixing `c`, and after each
/// column every distributivity instance whose three columns `b`, `c`,
/// `b * c` are already placed is checked. Classes are formed by mapping
/// each quandle to its least relabeled table, searching all `n!`
/// relabelings.
pub fn generate_all_quandles_with_limit(
    n: usize,
    up_to_iso: bool,
    max_order: usize,
) -> Result<Vec<FiniteQuandle>> {
    if n > max_order {
        return Err(Error::ResourceLimit { what: "quandle generation (order)", requested: n, limit: max_order });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let perms = all_permutations(n);
    let mut search = ColumnSearch {
        n,
        columns: (0..n).map(|c| perms.iter().filter(|p| p[c] == c).cloned().collect()).collect(),
        table: vec![usize::MAX; n * n],
        found: Vec::new(),
    };
    search.extend(0);
    let labeled: Vec<FiniteQuandle> = search
        .found
        .into_iter()
        .map(|t| FiniteQuandle::from_flat(n, t).expect("search only emits quandles"))
        .collect();
    if !up_to_iso {
        let mut labeled = labeled;
        labeled.sort();
        return Ok(labeled);
    }
    let classes: BTreeSet<FiniteQuandle> = labeled.iter().map(|q| canonical_form_with(q, &perms)).collect();
    Ok(classes.into_iter().collect())
}

struct ColumnSearch {
    n: usize,
    columns: Vec<Vec<Vec<usize>>>,
    table: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl ColumnSearch {
    fn extend(&mut self, col: usize) {
        let n = self.n;
        if col == n {
            self.found.push(self.table.clone());
            return;
        }
        for k in 0..self.columns[col].len() {
            for r in 0..n {
                self.table[r * n + col] = self.columns[col][k][r];
            }
            if self.consistent(col) {
                self.extend(col + 1);
            }
        }
        for r in 0..n {
            self.table[r * n + col] = usize::MAX;
        }
    }

    /// Distributivity instances `(a*b)*c = (a*c)*(b*c)` whose columns are
    /// all placed (columns `0..=last`), at least one of them being `last`.
    fn consistent(&self, last: usize) -> bool {
        let n = self.n;
        let op = |a: usize, b: usize| self.table[a * n + b];
        for b in 0..=last {
            for c in 0..=last {
                let bc = op(b, c);
                if bc > last || (b != last && c != last && bc != last) {
                    continue;
                }
                for a in 0..n {
                    if op(op(a, b), c) != op(op(a, c), bc) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        if !next_permutation(&mut p) {
            return out;
        }
    }
}

fn canonical_form_with(q: &FiniteQuandle, perms: &[Vec<usize>]) -> FiniteQuandle {
    perms.iter().map(|p| q.relabel(p)).min().expect("at least the identity relabeling")
}

/// The least table (row-major, lexicographic) among all relabelings.
pub fn canonical_form(q: &FiniteQuandle) -> FiniteQuandle {
    canonical_form_with(q, &all_permutations(q.order()))
}

/// A relabeling `p` with `a.relabel(p) == b`, if one exists.
pub fn isomorphism(a: &FiniteQuandle, b: &FiniteQuandle) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    all_permutations(a.order()).into_iter().find(|p| a.relabel(p) == *b)
}

/// One row of the census: the orderability profile of an isomorphism
/// class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub order: usize,
    /// Index of the class among the canonical representatives of its order.
    pub class_id: usize,
    pub representative: FiniteQuandle,
    pub right_circular: bool,
    pub left_circular: bool,
    pub bi_circular: bool,
    pub right_orderable: bool,
    pub left_orderable: bool,
    pub latin: bool,
    pub involutory: bool,
    pub trivial: bool,
    pub orbit_sizes: Vec<usize>,
    pub rco_size: usize,
    pub lco_size: usize,
    pub ro_size: usize,
    pub lo_size: usize,
}

pub fn census(max_n: usize, cfg: &SearchConfig) -> Result<Vec<CensusRecord>> {
    if max_n > DEFAULT_MAX_CATALOG_ORDER {
        return Err(Error::ResourceLimit {
            what: "census (order)",
            requested: max_n,
            limit: DEFAULT_MAX_CATALOG_ORDER,
        });
    }
    let mut records = Vec::new();
    for n in 1..=max_n {
        for (class_id, q) in generate_all_quandles(n, true)?.into_iter().enumerate() {
            records.push(census_record(q, class_id, cfg)?);
        }
    }
    Ok(records)
}

pub fn census_record(q: FiniteQuandle, class_id: usize, cfg: &SearchConfig) -> Result<CensusRecord> {
    let answer = |p: Property| search::decide(&q, p, cfg).map(|v| v.answer);
    let mut orbit_sizes: Vec<usize> = quandle::orbits(&q).iter().map(Vec::len).collect();
    orbit_sizes.sort_unstable();
    Ok(CensusRecord {
        order: q.order(),
        class_id,
        right_circular: answer(Property::RightCircular)?,
        left_circular: answer(Property::LeftCircular)?,
        bi_circular: answer(Property::BiCircular)?,
        right_orderable: answer(Property::RightOrder)?,
        left_orderable: answer(Property::LeftOrder)?,
        latin: quandle::is_latin(&q),
        involutory: quandle::is_involutory(&q),
        trivial: quandle::is_trivial_quandle(&q),
        orbit_sizes,
        rco_size: search::enumerate_rco(&q, cfg)?.len(),
        lco_size: search::enumerate_lco(&q, cfg)?.len(),
        ro_size: search::enumerate_right_orderings(&q, cfg)?.len(),
        lo_size: search::enumerate_left_orderings(&q, cfg)?.len(),
        representative: q,
    })
}
