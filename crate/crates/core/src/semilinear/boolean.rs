use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::hypercube::{cell_count, LatinHypercube};
use crate::{Error, Result};

/// A Boolean function on `{0,1}^n`. Bit `z` is `lambda(z_1, ..., z_n)` for
/// `z = sum z_i * 2^(n-i)`, so `z_1` is the most significant input.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BooleanFn {
    n: usize,
    bits: Vec<bool>,
}

impl BooleanFn {
    pub fn new(n: usize, bits: Vec<bool>) -> Result<Self> {
        if n == 0 || n > crate::hypercube::MAX_ARITY {
            return Err(Error::ScaleExceeded { n, q: 2 });
        }
        if bits.len() != 1 << n {
            return Err(Error::SizeMismatch {
                expected: 1 << n,
                found: bits.len(),
            });
        }
        Ok(BooleanFn { n, bits })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, alloc::vec![false; 1 << n])
    }

    pub fn from_fn(n: usize, f: impl FnMut(u32) -> bool) -> Result<Self> {
        if n == 0 || n > crate::hypercube::MAX_ARITY {
            return Err(Error::ScaleExceeded { n, q: 2 });
        }
        Self::new(n, (0..1u32 << n).map(f).collect())
    }

    /// Reads the `2^n` low bits of `word`, bit `z` giving `lambda(z)`.
    pub fn from_index_bits(n: usize, word: u64) -> Result<Self> {
        if n > 6 {
            return Err(Error::ScaleExceeded { n, q: 2 });
        }
        Self::from_fn(n, |z| word >> z & 1 == 1)
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn eval(&self, z: u32) -> bool {
        self.bits[z as usize]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn to_bit_string(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for BooleanFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

/// Parses a string of `2^n` characters over `{0, 1}`.
impl FromStr for BooleanFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Precondition("orientation strings use only 0 and 1")),
            })
            .collect::<Result<Vec<_>>>()?;
        let len = bits.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::Precondition(
                "orientation string length must be 2^n with n >= 1",
            ));
        }
        Self::new(len.trailing_zeros() as usize, bits)
    }
}

/// Zero on weights `0, 3 (mod 4)` and one on weights `1, 2 (mod 4)`.
pub fn lambda_z4(n: usize) -> BooleanFn {
    BooleanFn::from_fn(n, |z| matches!(z.count_ones() % 4, 1 | 2)).expect("arity in range")
}

/// The zero function.
pub fn lambda_z22(n: usize) -> BooleanFn {
    BooleanFn::zero(n).expect("arity in range")
}

#[inline]
fn block_of(x: &[u8]) -> u32 {
    x.iter().fold(0u32, |acc, &v| acc << 1 | (v >> 1) as u32)
}

/// The standardly semilinear cube of `lambda`:
/// `Q[x] = (x_1 ^ ... ^ x_n) ^ lambda(l(x))` on the symbols `0..4`.
pub fn gen_semilinear(lambda: &BooleanFn) -> Result<LatinHypercube> {
    let n = lambda.arity();
    cell_count(n, 4)?;
    LatinHypercube::from_fn(n, 4, |x| {
        let xor = x.iter().fold(0u8, |acc, &v| acc ^ v);
        xor ^ lambda.eval(block_of(x)) as u8
    })
}

/// Recovers `lambda` when `cube` is exactly a standardly semilinear cube.
pub fn detect_semilinear(cube: &LatinHypercube) -> Option<BooleanFn> {
    if cube.order() != 4 {
        return None;
    }
    let n = cube.arity();
    let mut bits: Vec<Option<bool>> = alloc::vec![None; 1 << n];
    for cell in cube.graph_cells() {
        let high = cell.iter().fold(0u8, |acc, &v| acc ^ (v >> 1));
        if high != 0 {
            return None;
        }
        let low = cell.iter().fold(0u8, |acc, &v| acc ^ (v & 1)) == 1;
        let slot = &mut bits[block_of(&cell[1..]) as usize];
        match *slot {
            None => *slot = Some(low),
            Some(b) if b != low => return None,
            Some(_) => {}
        }
    }
    BooleanFn::new(n, bits.into_iter().map(|b| b.unwrap_or(false)).collect()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{apply_isotopy, gen_iterated_group, GroupKind, Permutation};

    #[test]
    fn parse_and_render() {
        let lambda: BooleanFn = "0111".parse().unwrap();
        assert_eq!(lambda.arity(), 2);
        assert!(!lambda.eval(0b00) && lambda.eval(0b01) && lambda.eval(0b10) && lambda.eval(0b11));
        assert_eq!(lambda.to_string(), "0111");
        assert!("011".parse::<BooleanFn>().is_err());
        assert!("0".parse::<BooleanFn>().is_err());
        assert!("01a1".parse::<BooleanFn>().is_err());
    }

    #[test]
    fn standard_lambdas() {
        assert_eq!(lambda_z4(2).to_string(), "0111");
        assert_eq!(lambda_z22(3).to_string(), "00000000");
        assert!(!lambda_z4(4).eval(0b1111));
        assert!(lambda_z4(3).eval(0b011));
        assert!(!lambda_z4(3).eval(0b111));
    }

    #[test]
    fn zero_lambda_is_the_klein_square() {
        let cube = gen_semilinear(&lambda_z22(2)).unwrap();
        assert_eq!(cube, gen_iterated_group(GroupKind::Z2x2, 2, 4).unwrap());
    }

    #[test]
    fn all_ones_flips_the_low_bit() {
        let xor = gen_semilinear(&lambda_z22(2)).unwrap();
        let ones = gen_semilinear(&"1111".parse().unwrap()).unwrap();
        assert!(ones.is_latin());
        for i in 0..16 {
            assert_eq!(ones.at(i), xor.at(i) ^ 1);
        }
    }

    #[test]
    fn blocks_are_order_two_subcubes() {
        for word in [0u64, 0x5a, 0x81, 0xff, 0x17] {
            let lambda = BooleanFn::from_index_bits(3, word).unwrap();
            let cube = gen_semilinear(&lambda).unwrap();
            assert!(cube.is_latin());
            for block in 0..8u32 {
                let highs: Vec<u8> = (0..3).map(|i| (block >> (2 - i) & 1) as u8).collect();
                let mut symbols = alloc::collections::BTreeSet::new();
                for low in 0..8u32 {
                    let x: Vec<u8> = (0..3)
                        .map(|i| highs[i] * 2 + (low >> (2 - i) & 1) as u8)
                        .collect();
                    symbols.insert(cube.get(&x));
                }
                let parity = highs.iter().fold(0, |a, &b| a ^ b);
                let expected: alloc::collections::BTreeSet<u8> =
                    [2 * parity, 2 * parity + 1].into();
                assert_eq!(symbols, expected);
            }
        }
    }

    #[test]
    fn detection_round_trips_every_ternary_lambda() {
        for word in 0..256u64 {
            let lambda = BooleanFn::from_index_bits(3, word).unwrap();
            assert_eq!(
                detect_semilinear(&gen_semilinear(&lambda).unwrap()),
                Some(lambda)
            );
        }
    }

    #[test]
    fn raw_cyclic_square_is_not_standardly_semilinear() {
        assert_eq!(
            detect_semilinear(&gen_iterated_group(GroupKind::Z4, 2, 4).unwrap()),
            None
        );
        assert_eq!(
            detect_semilinear(&gen_iterated_group(GroupKind::CyclicZq, 2, 3).unwrap()),
            None
        );
    }

    #[test]
    fn swapping_one_and_two_turns_cyclic_into_lambda_z4() {
        let sigma = Permutation::new(alloc::vec![0, 2, 1, 3]).unwrap();
        for n in 1..=5 {
            let cube = gen_iterated_group(GroupKind::Z4, n, 4).unwrap();
            let out = apply_isotopy(&cube, &alloc::vec![sigma.clone(); n + 1]).unwrap();
            assert_eq!(detect_semilinear(&out), Some(lambda_z4(n)), "n = {n}");
        }
    }
}
