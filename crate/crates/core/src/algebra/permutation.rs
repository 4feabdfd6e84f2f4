use alloc::vec::Vec;

use crate::{Error, Result};

/// A bijection of `0..len`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = alloc::vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || core::mem::replace(&mut seen[i], true) {
                return Err(Error::NotAPermutation);
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(len: usize) -> Self {
        Permutation((0..len).collect())
    }

    /// The transposition of `a` and `b` on `0..len`.
    pub fn swap(len: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(len);
        p.0.swap(a, b);
        p
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    #[inline]
    pub(crate) fn apply_symbol(&self, s: u8) -> u8 {
        self.0[s as usize] as u8
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// All permutations of `0..len` in lexicographic order.
    pub fn all(len: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((0..len).collect::<Vec<_>>());
        core::iter::from_fn(move || {
            let current = next.take()?;
            let mut p = current.clone();
            if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
                let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
                p.swap(i - 1, j);
                p[i..].reverse();
                next = Some(p);
            }
            Some(Permutation(current))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Permutation::new(alloc::vec![2, 0, 1]).is_ok());
        assert_eq!(
            Permutation::new(alloc::vec![0, 0, 1]),
            Err(Error::NotAPermutation)
        );
        assert_eq!(
            Permutation::new(alloc::vec![0, 3, 1]),
            Err(Error::NotAPermutation)
        );
    }

    #[test]
    fn enumeration_and_inverse() {
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for p in &all {
            let inv = p.inverse();
            assert!((0..4).all(|i| inv.apply(p.apply(i)) == i));
        }
        assert_eq!(Permutation::all(0).count(), 1);
    }
}
