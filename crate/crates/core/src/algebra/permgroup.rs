use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::perm::Permutation;
use crate::{Error, Result};

pub const DEFAULT_CLOSURE_LIMIT: usize = 100_000;

/// A group of permutations of `{0, .., degree-1}`, stored as its sorted
/// element list (the identity comes first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

pub fn closure<P: AsRef<[usize]>>(generators: &[P], degree: usize) -> Result<PermutationGroup> {
    closure_with_limit(generators, degree, DEFAULT_CLOSURE_LIMIT)
}

/// Breadth-first closure of `generators` under composition. Fails with
/// [`Error::ResourceLimit`] once more than `limit` elements are found.
pub fn closure_with_limit<P: AsRef<[usize]>>(
    generators: &[P],
    degree: usize,
    limit: usize,
) -> Result<PermutationGroup> {
    let mut gens = Vec::with_capacity(generators.len());
    for g in generators {
        let g = g.as_ref();
        if g.len() != degree {
            return Err(Error::NotAPermutation { degree });
        }
        gens.push(Permutation::from_images(g.to_vec())?);
    }
    gens.sort();
    gens.dedup();

    let identity = Permutation::identity(degree);
    let mut seen = BTreeSet::new();
    seen.insert(identity.clone());
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = x.then(g);
            if !seen.contains(&y) {
                if seen.len() == limit {
                    return Err(Error::ResourceLimit {
                        what: "permutation group closure",
                        requested: limit + 1,
                        limit,
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(PermutationGroup { degree, generators: gens, elements: seen.into_iter().collect() })
}

impl PermutationGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// The distinct generators the group was closed from, sorted.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, images: &[usize]) -> bool {
        images.len() == self.degree
            && self.elements.binary_search_by(|p| p.images().cmp(images)).is_ok()
    }

    pub fn max_element_order(&self) -> usize {
        self.elements.iter().map(Permutation::order).max().unwrap_or(1)
    }

    /// The least element (in image-array order) that generates the whole
    /// group; the identity for the trivial group.
    pub fn cyclic_generator(&self) -> Option<&Permutation> {
        let n = self.order();
        if n == 1 {
            return self.elements.first();
        }
        self.elements.iter().find(|p| p.order() == n)
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic_generator().is_some()
    }

    /// Orbits on the points, each sorted, listed by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_under(&self.generators, self.degree)
    }

    pub fn is_semiregular(&self) -> bool {
        let size = self.order();
        self.orbits().iter().all(|o| o.len() == size)
    }

    /// Fixed-point formulation of semiregularity; agrees with
    /// [`is_semiregular`](Self::is_semiregular).
    pub fn is_semiregular_by_fixed_points(&self) -> bool {
        self.degree.is_multiple_of(self.order()) && self.fixed_point_witness().is_none()
    }

    /// A non-identity element together with a point it fixes.
    pub fn fixed_point_witness(&self) -> Option<(&Permutation, usize)> {
        self.elements
            .iter()
            .filter(|p| !p.is_identity())
            .find_map(|p| p.fixed_points().next().map(|x| (p, x)))
    }
}

/// Orbits of the group generated by `maps` (each a permutation of
/// `0..degree`).
pub(crate) fn orbits_under<P: AsRef<[usize]>>(maps: &[P], degree: usize) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; degree];
    let mut orbits = Vec::new();
    for start in 0..degree {
        if label[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = vec![start];
        label[start] = id;
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for m in maps {
                let y = m.as_ref()[x];
                if label[y] == usize::MAX {
                    label[y] = id;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}
