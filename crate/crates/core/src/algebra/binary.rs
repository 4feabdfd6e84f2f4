use alloc::vec::Vec;

use crate::hypercube::{cell_count, LatinHypercube};
use crate::{Error, Result};

/// Multiplication table of a binary quasigroup: row `x_1`, column `x_2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryOp {
    q: usize,
    table: Vec<u8>,
}

impl BinaryOp {
    /// `table` is row-major and must be a latin square.
    pub fn new(q: usize, table: Vec<u8>) -> Result<Self> {
        let cube = LatinHypercube::new(2, q, table)?;
        if !cube.is_latin() {
            return Err(Error::NotLatin);
        }
        Ok(BinaryOp {
            q,
            table: cube.into_values(),
        })
    }

    pub fn from_fn(q: usize, mut f: impl FnMut(u8, u8) -> u8) -> Result<Self> {
        cell_count(2, q)?;
        let table = (0..q * q)
            .map(|i| f((i / q) as u8, (i % q) as u8))
            .collect();
        Self::new(q, table)
    }

    pub fn from_hypercube(cube: &LatinHypercube) -> Result<Self> {
        if cube.arity() != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                found: cube.arity(),
            });
        }
        Self::new(cube.order(), cube.values().to_vec())
    }

    /// Addition modulo `q`.
    pub fn cyclic(q: usize) -> Result<Self> {
        Self::from_fn(q, |a, b| ((a as usize + b as usize) % q) as u8)
    }

    pub fn z4_add() -> Self {
        Self::cyclic(4).expect("order 4 is supported")
    }

    /// Addition in the Klein group, elements encoded as two-bit vectors.
    pub fn z22_add() -> Self {
        Self::from_fn(4, |a, b| a ^ b).expect("xor table is latin")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn apply(&self, a: u8, b: u8) -> u8 {
        self.table[a as usize * self.q + b as usize]
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    /// The operation `x_0 +' x_2 = x_1` whenever `x_1 + x_2 = x_0`.
    pub fn right_inverse(&self) -> BinaryOp {
        let q = self.q;
        let mut table = alloc::vec![0u8; q * q];
        for x1 in 0..q {
            for x2 in 0..q {
                let x0 = self.table[x1 * q + x2] as usize;
                table[x0 * q + x2] = x1 as u8;
            }
        }
        BinaryOp { q, table }
    }

    pub fn to_hypercube(&self) -> LatinHypercube {
        LatinHypercube::from_raw(2, self.q, self.table.clone())
    }
}

/// Group underlying an iterated-group hypercube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    CyclicZq,
    Z4,
    Z2x2,
}

/// The `n`-ary iterated group: `Q[x]` is the unique `x_0` with
/// `x_0 + x_1 + ... + x_n = 0`.
///
/// `Z2x2` encodes the element `a` as the bit pair `(l(a), a mod 2)`, so the
/// group operation is bitwise xor on the symbols `0..4`.
pub fn gen_iterated_group(kind: GroupKind, n: usize, q: usize) -> Result<LatinHypercube> {
    match kind {
        GroupKind::Z4 | GroupKind::Z2x2 if q != 4 => {
            return Err(Error::UnsupportedOrder { q, required: 4 })
        }
        _ if q < 2 => return Err(Error::Precondition("iterated groups need order at least 2")),
        _ => {}
    }
    match kind {
        GroupKind::CyclicZq | GroupKind::Z4 => LatinHypercube::from_fn(n, q, |x| {
            let sum: usize = x.iter().map(|&v| v as usize).sum();
            ((q - sum % q) % q) as u8
        }),
        GroupKind::Z2x2 => LatinHypercube::from_fn(n, q, |x| x.iter().fold(0, |acc, &v| acc ^ v)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_iterated_square() {
        let cube = gen_iterated_group(GroupKind::CyclicZq, 2, 3).unwrap();
        for i in 0..3u8 {
            for j in 0..3u8 {
                let expected = ((6 - i as i32 - j as i32).rem_euclid(3)) as u8;
                assert_eq!(cube.get(&[i, j]), expected);
            }
        }
        assert!(cube.is_latin());
    }

    #[test]
    fn klein_square_is_xor() {
        let cube = gen_iterated_group(GroupKind::Z2x2, 2, 4).unwrap();
        assert_eq!(cube, BinaryOp::z22_add().to_hypercube());
    }

    #[test]
    fn kind_must_match_order() {
        assert!(gen_iterated_group(GroupKind::Z4, 2, 3).is_err());
        assert!(gen_iterated_group(GroupKind::Z2x2, 3, 5).is_err());
        assert_eq!(
            gen_iterated_group(GroupKind::Z4, 3, 4),
            gen_iterated_group(GroupKind::CyclicZq, 3, 4)
        );
    }

    #[test]
    fn iterated_groups_are_latin() {
        for n in 1..=5 {
            for kind in [GroupKind::Z4, GroupKind::Z2x2] {
                assert!(gen_iterated_group(kind, n, 4).unwrap().is_latin());
            }
            for q in 2..=6 {
                assert!(gen_iterated_group(GroupKind::CyclicZq, n, q)
                    .unwrap()
                    .is_latin());
            }
        }
    }

    #[test]
    fn right_inverse_examples() {
        assert_eq!(BinaryOp::z22_add().right_inverse(), BinaryOp::z22_add());
        let z4 = BinaryOp::z4_add();
        assert_eq!(z4.right_inverse().right_inverse(), z4);
        let c3 = BinaryOp::cyclic(3).unwrap().right_inverse();
        for x0 in 0..3u8 {
            for x2 in 0..3u8 {
                assert_eq!(c3.apply(x0, x2), (x0 + 3 - x2) % 3);
            }
        }
    }

    #[test]
    fn right_inverse_solves_for_first_argument() {
        let op = BinaryOp::new(
            4,
            alloc::vec![0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 1, 0, 3, 2, 0, 1],
        )
        .unwrap();
        let inv = op.right_inverse();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(inv.apply(op.apply(a, b), b), a);
            }
        }
        assert!(inv.to_hypercube().is_latin());
    }

    #[test]
    fn rejects_non_latin_tables() {
        assert_eq!(
            BinaryOp::new(2, alloc::vec![0, 1, 0, 1]),
            Err(Error::NotLatin)
        );
    }
}
