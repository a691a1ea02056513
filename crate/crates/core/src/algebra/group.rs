use alloc::vec;
use alloc::vec::Vec;

use super::perm::{decode_mixed_radix, encode_mixed_radix, is_bijection, next_permutation};
use super::{flatten_square, unflatten};
use crate::{Error, GroupViolation, Result};

/// A finite group given by its Cayley table; entry `(i, j)` is `i·j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

pub fn group_from_table(rows: &[Vec<usize>], identity: usize) -> Result<FiniteGroup> {
    let (n, flat) = flatten_square(rows)?;
    FiniteGroup::from_flat(n, flat, identity)
}

impl FiniteGroup {
    /// Validates rows, columns, identity and associativity in that order and
    /// reports the first failure.
    pub(crate) fn from_flat(n: usize, table: Vec<usize>, identity: usize) -> Result<Self> {
        let fail = |v| Err(Error::NotAGroup(v));
        if identity >= n {
            return fail(GroupViolation::IdentityOutOfRange(identity));
        }
        for r in 0..n {
            if !is_bijection(&table[r * n..(r + 1) * n]) {
                return fail(GroupViolation::RowNotPermutation(r));
            }
        }
        for c in 0..n {
            let column: Vec<usize> = (0..n).map(|r| table[r * n + c]).collect();
            if !is_bijection(&column) {
                return fail(GroupViolation::ColumnNotPermutation(c));
            }
        }
        for x in 0..n {
            if table[identity * n + x] != x || table[x * n + identity] != x {
                return fail(GroupViolation::IdentityFailure(x));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return fail(GroupViolation::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut inverses = vec![0; n];
        for a in 0..n {
            inverses[a] = (0..n).find(|&b| table[a * n + b] == identity).expect("rows are permutations");
        }
        Ok(FiniteGroup { order: n, table, identity, inverses })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        unflatten(self.order, &self.table)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Least `k ≥ 1` with `a^k = e`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `a^k` for `k ≥ 0`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }
}

/// `Z_n` under addition, identity 0.
pub fn cyclic_group(n: usize) -> FiniteGroup {
    assert!(n >= 1, "cyclic group needs n >= 1");
    let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    FiniteGroup::from_flat(n, table, 0).expect("addition mod n is a group")
}

/// Componentwise product; `(a, b)` is element `a * |h| + b`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let radices = [g.order(), h.order()];
    let n = g.order() * h.order();
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let [a1, b1] = <[usize; 2]>::try_from(decode_mixed_radix(x, &radices)).unwrap();
        for y in 0..n {
            let [a2, b2] = <[usize; 2]>::try_from(decode_mixed_radix(y, &radices)).unwrap();
            table.push(encode_mixed_radix(&[g.mul(a1, a2), h.mul(b1, b2)], &radices));
        }
    }
    let identity = encode_mixed_radix(&[g.identity(), h.identity()], &radices);
    FiniteGroup::from_flat(n, table, identity).expect("product of groups is a group")
}

/// `Sym(k)` with elements listed in lexicographic order of their image
/// arrays (index 0 is the identity) and product `(σ·τ)(x) = σ(τ(x))`.
pub fn symmetric_group(k: usize) -> FiniteGroup {
    let mut perms = Vec::new();
    let mut seq: Vec<usize> = (0..k).collect();
    loop {
        perms.push(seq.clone());
        if !next_permutation(&mut seq) {
            break;
        }
    }
    let n = perms.len();
    let mut table = Vec::with_capacity(n * n);
    for s in &perms {
        for t in &perms {
            let st: Vec<usize> = t.iter().map(|&x| s[x]).collect();
            table.push(perms.binary_search(&st).expect("closed under composition"));
        }
    }
    FiniteGroup::from_flat(n, table, 0).expect("symmetric group")
}

/// A bijective endomorphism of a [`FiniteGroup`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAutomorphism {
    group: FiniteGroup,
    map: Vec<usize>,
}

impl GroupAutomorphism {
    pub fn new(group: &FiniteGroup, map: Vec<usize>) -> Result<Self> {
        let n = group.order();
        if map.len() != n {
            return Err(Error::NotAnAutomorphism("map length differs from group order"));
        }
        if !is_bijection(&map) {
            return Err(Error::NotAnAutomorphism("map is not a bijection"));
        }
        for x in 0..n {
            for y in 0..n {
                if map[group.mul(x, y)] != group.mul(map[x], map[y]) {
                    return Err(Error::NotAnAutomorphism("map does not respect the product"));
                }
            }
        }
        Ok(GroupAutomorphism { group: group.clone(), map })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupAutomorphism { group: group.clone(), map: (0..group.order()).collect() }
    }

    /// `x ↦ x^k`; an automorphism exactly when the group is abelian and
    /// `gcd(k, exponent) = 1`, which the validation checks directly.
    pub fn power_map(group: &FiniteGroup, k: usize) -> Result<Self> {
        let map = (0..group.order()).map(|x| group.pow(x, k)).collect();
        Self::new(group, map)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}
