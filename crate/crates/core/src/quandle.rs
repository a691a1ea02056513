//! Finite quandles given by operation tables.
//!
//! Entry `(i, j)` of a table is `i * j`; rows are the left argument. The
//! right translation `R_j : i ↦ i * j` is column `j`, the left translation
//! `L_i : j ↦ i * j` is row `i`.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{
    self, decode_mixed_radix, encode_mixed_radix, is_bijection, FiniteGroup, GroupAutomorphism,
    PermutationGroup,
};
use crate::{Error, QuandleAxiom, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteQuandle {
    order: usize,
    table: Vec<usize>,
}

pub fn quandle_from_table(rows: &[Vec<usize>]) -> Result<FiniteQuandle> {
    let (n, flat) = algebra::flatten_square(rows)?;
    FiniteQuandle::from_flat(n, flat)
}

/// Returns the first axiom violation of a square table, if any.
pub(crate) fn first_violation(n: usize, table: &[usize]) -> Option<(QuandleAxiom, Vec<usize>)> {
    let op = |a: usize, b: usize| table[a * n + b];
    if let Some(s) = (0..n).find(|&s| op(s, s) != s) {
        return Some((QuandleAxiom::Idempotency, vec![s, s]));
    }
    let mut owner = vec![usize::MAX; n];
    for c in 0..n {
        owner.fill(usize::MAX);
        for r in 0..n {
            let v = op(r, c);
            if owner[v] != usize::MAX {
                return Some((QuandleAxiom::RightInvertibility, vec![owner[v], r, c]));
            }
            owner[v] = r;
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if op(op(a, b), c) != op(op(a, c), op(b, c)) {
                    return Some((QuandleAxiom::RightDistributivity, vec![a, b, c]));
                }
            }
        }
    }
    None
}

impl FiniteQuandle {
    pub(crate) fn from_flat(n: usize, table: Vec<usize>) -> Result<Self> {
        debug_assert_eq!(table.len(), n * n);
        match first_violation(n, &table) {
            None => Ok(FiniteQuandle { order: n, table }),
            Some((axiom, witness)) => Err(Error::NotAQuandle { axiom, witness }),
        }
    }

    pub(crate) fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let table = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::from_flat(n, table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        algebra::unflatten(self.order, &self.table)
    }

    /// Row-major table.
    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    /// `R_s` as an image array.
    pub fn right_map(&self, s: usize) -> Vec<usize> {
        (0..self.order).map(|t| self.op(t, s)).collect()
    }

    /// `L_s` as an image array.
    pub fn left_map(&self, s: usize) -> Vec<usize> {
        self.table[s * self.order..(s + 1) * self.order].to_vec()
    }

    /// The table of the dual operation: `s *⁻¹ r` is the unique `t` with
    /// `t * r = s`.
    pub fn dual_op(&self) -> FiniteQuandle {
        let n = self.order;
        let mut table = vec![0; n * n];
        for r in 0..n {
            for t in 0..n {
                table[self.op(t, r) * n + r] = t;
            }
        }
        FiniteQuandle::from_flat(n, table).expect("the dual of a quandle is a quandle")
    }

    /// Relabels elements by `p` (old index ↦ new index).
    pub fn relabel(&self, p: &[usize]) -> FiniteQuandle {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[p[a] * n + p[b]] = p[self.op(a, b)];
            }
        }
        FiniteQuandle { order: n, table }
    }
}

pub fn trivial_quandle(n: usize) -> FiniteQuandle {
    assert!(n >= 1);
    FiniteQuandle::from_fn(n, |i, _| i).expect("trivial quandle")
}

/// `Z_n` with `i * j = 2j - i`.
pub fn dihedral_quandle(n: usize) -> FiniteQuandle {
    assert!(n >= 1);
    FiniteQuandle::from_fn(n, |i, j| (2 * j + n - i) % n).expect("dihedral quandle")
}

/// `Z_n` with `i * j = alpha·i + (1 - alpha)·j`; requires `gcd(alpha, n) = 1`.
pub fn affine_quandle(n: usize, alpha: i64) -> Result<FiniteQuandle> {
    assert!(n >= 1);
    let m = n as i64;
    let a = alpha.rem_euclid(m);
    if gcd(a, m) != 1 {
        return Err(Error::NotInvertible { n, alpha });
    }
    let b = (1 - a).rem_euclid(m);
    FiniteQuandle::from_fn(n, |i, j| ((a * i as i64 + b * j as i64) % m) as usize)
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// `Conj(G)`: `g * h = h⁻¹ g h`.
pub fn conj_quandle(g: &FiniteGroup) -> FiniteQuandle {
    FiniteQuandle::from_fn(g.order(), |x, y| g.mul(g.mul(g.inverse(y), x), y))
        .expect("conjugation quandle")
}

/// `Core(G)`: `g * h = h g⁻¹ h`.
pub fn core_quandle(g: &FiniteGroup) -> FiniteQuandle {
    FiniteQuandle::from_fn(g.order(), |x, y| g.mul(g.mul(y, g.inverse(x)), y))
        .expect("core quandle")
}

/// Generalized Alexander quandle: `g * h = φ(g h⁻¹) h`.
pub fn generalized_alexander_quandle(
    g: &FiniteGroup,
    phi: &GroupAutomorphism,
) -> Result<FiniteQuandle> {
    if phi.group() != g {
        return Err(Error::NotAnAutomorphism("automorphism belongs to a different group"));
    }
    FiniteQuandle::from_fn(g.order(), |x, y| g.mul(phi.apply(g.mul(x, g.inverse(y))), y))
}

/// Componentwise product with the mixed-radix encoding of
/// [`encode_mixed_radix`] (first factor most significant).
pub fn product_quandle(factors: &[FiniteQuandle]) -> Result<FiniteQuandle> {
    if factors.is_empty() {
        return Err(Error::NoFactors);
    }
    let radices: Vec<usize> = factors.iter().map(FiniteQuandle::order).collect();
    let n: usize = radices.iter().product();
    let digits: Vec<Vec<usize>> = (0..n).map(|x| decode_mixed_radix(x, &radices)).collect();
    let mut out = vec![0; factors.len()];
    FiniteQuandle::from_fn(n, |x, y| {
        for (k, q) in factors.iter().enumerate() {
            out[k] = q.op(digits[x][k], digits[y][k]);
        }
        encode_mixed_radix(&out, &radices)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// `R_s` or `L_s` of a quandle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translation {
    pub side: Side,
    pub base: usize,
    pub map: Vec<usize>,
}

impl Translation {
    pub fn is_bijective(&self) -> bool {
        is_bijection(&self.map)
    }
}

pub fn right_translation(q: &FiniteQuandle, s: usize) -> Translation {
    Translation { side: Side::Right, base: s, map: q.right_map(s) }
}

pub fn left_translation(q: &FiniteQuandle, s: usize) -> Translation {
    Translation { side: Side::Left, base: s, map: q.left_map(s) }
}

/// The permutation group generated by all right translations.
pub fn inner_group(q: &FiniteQuandle) -> Result<PermutationGroup> {
    let maps: Vec<Vec<usize>> = (0..q.order()).map(|s| q.right_map(s)).collect();
    algebra::closure(&maps, q.order())
}

pub fn inner_group_with_limit(q: &FiniteQuandle, limit: usize) -> Result<PermutationGroup> {
    let maps: Vec<Vec<usize>> = (0..q.order()).map(|s| q.right_map(s)).collect();
    algebra::closure_with_limit(&maps, q.order(), limit)
}

/// Orbits of the inner group, each sorted, listed by least element.
pub fn orbits(q: &FiniteQuandle) -> Vec<Vec<usize>> {
    let maps: Vec<Vec<usize>> = (0..q.order()).map(|s| q.right_map(s)).collect();
    crate::algebra::permgroup_orbits(&maps, q.order())
}

pub fn is_latin(q: &FiniteQuandle) -> bool {
    (0..q.order()).all(|s| is_bijection(&q.left_map(s)))
}

pub fn is_semi_latin(q: &FiniteQuandle) -> bool {
    (0..q.order()).all(|s| {
        let row = q.left_map(s);
        let mut seen = vec![false; row.len()];
        row.iter().all(|&v| !core::mem::replace(&mut seen[v], true))
    })
}

pub fn is_involutory(q: &FiniteQuandle) -> bool {
    (0..q.order()).all(|s| (0..q.order()).all(|t| q.op(q.op(t, s), s) == t))
}

/// Elements `e` with `s * e = s` for every `s`.
pub fn stabilizer_elements(q: &FiniteQuandle) -> Vec<usize> {
    (0..q.order()).filter(|&e| (0..q.order()).all(|s| q.op(s, e) == s)).collect()
}

pub fn is_trivial_quandle(q: &FiniteQuandle) -> bool {
    stabilizer_elements(q).len() == q.order()
}

/// True if `subset` is nonempty, in range and closed under the operation.
pub fn is_subquandle(q: &FiniteQuandle, subset: &[usize]) -> bool {
    let n = q.order();
    if subset.is_empty() || subset.iter().any(|&x| x >= n) {
        return false;
    }
    let mut member = vec![false; n];
    for &x in subset {
        member[x] = true;
    }
    subset.iter().all(|&a| subset.iter().all(|&b| member[q.op(a, b)]))
}
