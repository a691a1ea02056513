//! Finite groups by Cayley table and permutation groups.

mod group;
mod perm;
mod permgroup;

pub use group::{
    cyclic_group, direct_product, group_from_table, symmetric_group, FiniteGroup,
    GroupAutomorphism,
};
pub use perm::{decode_mixed_radix, encode_mixed_radix, is_bijection, next_permutation, Permutation};
pub use permgroup::{closure, closure_with_limit, PermutationGroup, DEFAULT_CLOSURE_LIMIT};
pub(crate) use permgroup::orbits_under as permgroup_orbits;

use alloc::vec::Vec;

use crate::{Result, TableError};

/// Checks that `rows` is a nonempty square table with entries in range and
/// flattens it row-major.
pub(crate) fn flatten_square(rows: &[Vec<usize>]) -> Result<(usize, Vec<usize>)> {
    let n = rows.len();
    if n == 0 {
        return Err(TableError::Empty.into());
    }
    let mut flat = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(TableError::NotSquare { row: r, len: row.len(), expected: n }.into());
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(TableError::EntryOutOfRange { row: r, column: c, value: v }.into());
            }
            flat.push(v);
        }
    }
    Ok((n, flat))
}

pub(crate) fn unflatten(n: usize, flat: &[usize]) -> Vec<Vec<usize>> {
    flat.chunks(n).map(|c| c.to_vec()).collect()
}
