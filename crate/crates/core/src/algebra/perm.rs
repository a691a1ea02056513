use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A bijection of `{0, .., degree-1}` stored as its image array.
///
/// Ordering is lexicographic on the images, so the identity is the least
/// permutation of each degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

pub fn is_bijection(images: &[usize]) -> bool {
    let n = images.len();
    let mut seen = vec![false; n];
    for &i in images {
        if i >= n || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if is_bijection(&images) {
            Ok(Permutation(images))
        } else {
            Err(Error::NotAPermutation { degree: images.len() })
        }
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn into_images(self) -> Vec<usize> {
        self.0
    }

    /// `x ↦ other(self(x))`
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(i, j)| i == *j).map(|(i, _)| i)
    }

    /// Order in the symmetric group: lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut order = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }
}

impl AsRef<[usize]> for Permutation {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Steps `seq` to its lexicographic successor. Returns `false` and leaves
/// `seq` untouched when it is already the last (descending) arrangement.
pub fn next_permutation(seq: &mut [usize]) -> bool {
    let n = seq.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

/// Mixed-radix index with the first digit most significant, so a pair
/// `(a, b)` over radices `(|g|, |h|)` encodes as `a * |h| + b`.
pub fn encode_mixed_radix(digits: &[usize], radices: &[usize]) -> usize {
    debug_assert_eq!(digits.len(), radices.len());
    digits.iter().zip(radices).fold(0, |acc, (&d, &r)| {
        debug_assert!(d < r);
        acc * r + d
    })
}

pub fn decode_mixed_radix(mut index: usize, radices: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; radices.len()];
    for (slot, &r) in digits.iter_mut().zip(radices).rev() {
        *slot = index % r;
        index /= r;
    }
    digits
}
