use alloc::vec::Vec;

use super::BooleanFn;
use crate::{Error, Result};

/// Multiset of four Boolean vectors of length `len`. Vector `z` is packed
/// with `z_0` as the most significant of `len` bits, so `z & (2^(len-1) - 1)`
/// is the tail `(z_1, ..., z_n)` fed to an orientation function. The four
/// vectors are kept sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quadruple {
    len: usize,
    vectors: [u32; 4],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuadrupleClass {
    /// Some column is not `{0, 0, 1, 1}`.
    NotProper,
    /// Proper, but some vector has odd weight.
    ProperNotWorthwhile,
    /// `{z, z, nu(z), nu(z)}`.
    Twin,
    /// Four distinct even-weight vectors.
    Brindled,
}

impl Quadruple {
    pub fn new(len: usize, mut vectors: [u32; 4]) -> Result<Self> {
        if len == 0 || len > 31 {
            return Err(Error::Precondition(
                "quadruple vectors must have length 1..=31",
            ));
        }
        if vectors.iter().any(|&v| v >> len != 0) {
            return Err(Error::Precondition("vector does not fit its length"));
        }
        vectors.sort_unstable();
        Ok(Quadruple { len, vectors })
    }

    /// Builds a quadruple from four `0`/`1` strings of equal length.
    pub fn parse(vectors: [&str; 4]) -> Result<Self> {
        let len = vectors[0].len();
        let mut packed = [0u32; 4];
        for (slot, s) in packed.iter_mut().zip(vectors) {
            if s.len() != len {
                return Err(Error::ArityMismatch {
                    expected: len,
                    found: s.len(),
                });
            }
            *slot = u32::from_str_radix(s, 2)
                .map_err(|_| Error::Precondition("vectors are strings over 0 and 1"))?;
        }
        Self::new(len, packed)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vectors(&self) -> [u32; 4] {
        self.vectors
    }

    /// The vectors rendered as bit strings.
    pub fn to_strings(&self) -> [alloc::string::String; 4] {
        self.vectors
            .map(|v| alloc::format!("{v:0width$b}", width = self.len))
    }

    pub fn classify(&self) -> QuadrupleClass {
        let [a, b, c, d] = self.vectors;
        // every column holds exactly two ones: not all four equal, and the
        // count is neither one nor three
        let full = (1u32 << self.len) - 1;
        let all = a & b & c & d;
        let none = !(a | b | c | d) & full;
        let odd = a ^ b ^ c ^ d;
        if all != 0 || none != 0 || odd != 0 {
            return QuadrupleClass::NotProper;
        }
        if self.vectors.iter().any(|v| v.count_ones() % 2 == 1) {
            return QuadrupleClass::ProperNotWorthwhile;
        }
        match (a == b, b == c, c == d) {
            (false, false, false) => QuadrupleClass::Brindled,
            // a proper quadruple with a repeated vector is {z, z, nu(z), nu(z)}
            _ => QuadrupleClass::Twin,
        }
    }

    /// `lambda(tail z^1) ^ ... ^ lambda(tail z^4)`.
    pub fn lambda_sum(&self, lambda: &BooleanFn) -> bool {
        debug_assert_eq!(lambda.arity() + 1, self.len);
        let tail = (1u32 << (self.len - 1)) - 1;
        self.vectors
            .iter()
            .fold(false, |acc, &v| acc ^ lambda.eval(v & tail))
    }
}

/// `2^(n-1)` for odd `n`, none for even `n`.
pub fn count_twin(n: usize) -> u64 {
    if n % 2 == 1 {
        1 << (n - 1)
    } else {
        0
    }
}

/// Twin quadruples of `(n+1)`-vectors, ordered by their smaller vector.
pub fn twin_quadruples(n: usize) -> impl Iterator<Item = Quadruple> {
    let len = n + 1;
    let full = (1u32 << len) - 1;
    (0..1u32 << len)
        .filter(move |&z| {
            z.count_ones() % 2 == 0 && (z ^ full).count_ones().is_multiple_of(2) && z < z ^ full
        })
        .map(move |z| Quadruple::new(len, [z, z, z ^ full, z ^ full]).expect("fits"))
}

/// Every brindled quadruple of `(n+1)`-vectors exactly once, in
/// lexicographic order of the sorted vectors.
pub fn enumerate_brindled(n: usize) -> BrindledIter {
    BrindledIter::new(n, None)
}

/// The brindled quadruples whose smallest vector is `first`; the sets for
/// all even-weight `first` partition [`enumerate_brindled`].
pub fn enumerate_brindled_from(n: usize, first: u32) -> BrindledIter {
    BrindledIter::new(n, Some(first))
}

/// Iterator behind [`enumerate_brindled`]. Picks `z1 < z2 < z3` among the
/// even-weight vectors; the column condition then forces `z4`.
pub struct BrindledIter {
    len: usize,
    even: Vec<u32>,
    i: usize,
    j: usize,
    k: usize,
    stop_i: usize,
}

impl BrindledIter {
    fn new(n: usize, first: Option<u32>) -> Self {
        let len = n + 1;
        assert!((1..=24).contains(&len), "arity out of range");
        let even: Vec<u32> = (0..1u32 << len)
            .filter(|z| z.count_ones() % 2 == 0)
            .collect();
        let (i, stop_i) = match first {
            None => (0, even.len()),
            Some(z) => match even.binary_search(&z) {
                Ok(pos) => (pos, pos + 1),
                Err(_) => (0, 0),
            },
        };
        BrindledIter {
            len,
            even,
            i,
            j: i + 1,
            k: i + 2,
            stop_i,
        }
    }
}

impl Iterator for BrindledIter {
    type Item = Quadruple;

    fn next(&mut self) -> Option<Quadruple> {
        let full = (1u32 << self.len) - 1;
        let m = self.even.len();
        while self.i < self.stop_i {
            while self.j < m {
                let (z1, z2) = (self.even[self.i], self.even[self.j]);
                while self.k < m {
                    let z3 = self.even[self.k];
                    self.k += 1;
                    // no column may be constant across z1, z2, z3
                    if z1 & z2 & z3 != 0 || (z1 | z2 | z3) != full {
                        continue;
                    }
                    let majority = (z1 & z2) | (z1 & z3) | (z2 & z3);
                    let z4 = !majority & full;
                    if z4 > z3 && z4.count_ones().is_multiple_of(2) {
                        return Some(Quadruple {
                            len: self.len,
                            vectors: [z1, z2, z3, z4],
                        });
                    }
                }
                self.j += 1;
                self.k = self.j + 1;
            }
            self.i += 1;
            self.j = self.i + 1;
            self.k = self.i + 2;
        }
        None
    }
}
