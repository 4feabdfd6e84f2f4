//! Flat storage of `n`-dimensional latin hypercubes of order `q`.
//!
//! A cell `(x_1, ..., x_n)` lives at linear index `sum x_i * q^(n-i)`, so
//! `x_1` is the most significant coordinate and selects the layer when a
//! cube is printed layer by layer.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 8;
/// Largest supported number of cells `q^n`.
pub const MAX_CELLS: usize = 1 << 24;
/// Largest supported arity.
pub const MAX_ARITY: usize = 24;

/// Returns `q^n` when `(n, q)` is inside the supported scale.
pub fn cell_count(n: usize, q: usize) -> Result<usize> {
    if n == 0 || n > MAX_ARITY || q == 0 || q > MAX_ORDER {
        return Err(Error::ScaleExceeded { n, q });
    }
    let mut total = 1usize;
    for _ in 0..n {
        total = total
            .checked_mul(q)
            .filter(|&t| t <= MAX_CELLS)
            .ok_or(Error::ScaleExceeded { n, q })?;
    }
    Ok(total)
}

pub fn index_of(coords: &[u8], n: usize, q: usize) -> Result<usize> {
    if coords.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: coords.len(),
        });
    }
    let mut index = 0usize;
    for (position, &c) in coords.iter().enumerate() {
        if c as usize >= q {
            return Err(Error::CoordinateOutOfRange {
                position: position + 1,
                value: c as usize,
                q,
            });
        }
        index = index * q + c as usize;
    }
    Ok(index)
}

pub fn coords_of(index: usize, n: usize, q: usize) -> Result<Vec<u8>> {
    let len = cell_count(n, q)?;
    if index >= len {
        return Err(Error::IndexOutOfRange { index, len });
    }
    let mut coords = vec![0u8; n];
    write_coords(index, q, &mut coords);
    Ok(coords)
}

/// Decodes `index` into `out` (big-endian, `out.len()` digits base `q`).
#[inline]
pub(crate) fn write_coords(mut index: usize, q: usize, out: &mut [u8]) {
    for slot in out.iter_mut().rev() {
        *slot = (index % q) as u8;
        index /= q;
    }
}

#[inline]
pub(crate) fn encode(coords: impl IntoIterator<Item = u8>, q: usize) -> usize {
    coords.into_iter().fold(0, |acc, c| acc * q + c as usize)
}

/// A line of a hypercube: all coordinates fixed except `axis`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineRef {
    /// Varying coordinate, 1-based.
    pub axis: usize,
    /// Values of the other `n - 1` coordinates in increasing axis order.
    pub fixed: Vec<u8>,
}

/// Outcome of [`LatinHypercube::validate_latin`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LatinReport {
    pub violations: Vec<LineRef>,
}

impl LatinReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// An `n`-dimensional array of order `q` over the symbols `0..q`.
///
/// Construction only checks the structure (size and symbol range). Whether
/// every line is a permutation is reported separately by
/// [`validate_latin`](Self::validate_latin), so callers can tell "not a cube"
/// apart from "not latin".
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatinHypercube {
    n: usize,
    q: usize,
    values: Vec<u8>,
}

impl LatinHypercube {
    pub fn new(n: usize, q: usize, values: Vec<u8>) -> Result<Self> {
        let expected = cell_count(n, q)?;
        if values.len() != expected {
            return Err(Error::SizeMismatch {
                expected,
                found: values.len(),
            });
        }
        if let Some(&bad) = values.iter().find(|&&v| v as usize >= q) {
            return Err(Error::SymbolOutOfRange {
                symbol: bad as usize,
                q,
            });
        }
        Ok(LatinHypercube { n, q, values })
    }

    /// Builds a cube by evaluating `f` on every cell in index order.
    pub fn from_fn(n: usize, q: usize, mut f: impl FnMut(&[u8]) -> u8) -> Result<Self> {
        let len = cell_count(n, q)?;
        let mut coords = vec![0u8; n];
        let mut values = Vec::with_capacity(len);
        for index in 0..len {
            write_coords(index, q, &mut coords);
            values.push(f(&coords));
        }
        Self::new(n, q, values)
    }

    pub(crate) fn from_raw(n: usize, q: usize, values: Vec<u8>) -> Self {
        debug_assert_eq!(cell_count(n, q).ok(), Some(values.len()));
        LatinHypercube { n, q, values }
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u8> {
        self.values
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn index_of(&self, coords: &[u8]) -> Result<usize> {
        index_of(coords, self.n, self.q)
    }

    pub fn coords_of(&self, index: usize) -> Result<Vec<u8>> {
        coords_of(index, self.n, self.q)
    }

    /// Value at `coords`; panics on malformed coordinates.
    #[inline]
    pub fn get(&self, coords: &[u8]) -> u8 {
        debug_assert_eq!(coords.len(), self.n);
        self.values[encode(coords.iter().copied(), self.q)]
    }

    #[inline]
    pub fn at(&self, index: usize) -> u8 {
        self.values[index]
    }

    /// Lists every line that repeats a symbol.
    pub fn validate_latin(&self) -> LatinReport {
        let mut violations = Vec::new();
        self.scan_lines(|axis, base| {
            violations.push(self.line_ref(axis, base));
            true
        });
        LatinReport { violations }
    }

    /// Like [`validate_latin`](Self::validate_latin) but stops at the first
    /// violation.
    pub fn is_latin(&self) -> bool {
        let mut ok = true;
        self.scan_lines(|_, _| {
            ok = false;
            false
        });
        ok
    }

    /// Calls `on_violation(axis, base_index)` for every bad line until it
    /// returns false.
    fn scan_lines(&self, mut on_violation: impl FnMut(usize, usize) -> bool) {
        let (n, q) = (self.n, self.q);
        let len = self.values.len();
        for axis in 1..=n {
            let stride = q.pow((n - axis) as u32);
            let block = stride * q;
            for outer in (0..len).step_by(block) {
                for inner in 0..stride {
                    let base = outer + inner;
                    let mut seen = 0u32;
                    let mut bad = false;
                    for k in 0..q {
                        let bit = 1u32 << self.values[base + k * stride];
                        if seen & bit != 0 {
                            bad = true;
                            break;
                        }
                        seen |= bit;
                    }
                    if bad && !on_violation(axis, base) {
                        return;
                    }
                }
            }
        }
    }

    fn line_ref(&self, axis: usize, base: usize) -> LineRef {
        let mut coords = vec![0u8; self.n];
        write_coords(base, self.q, &mut coords);
        coords.remove(axis - 1);
        LineRef {
            axis,
            fixed: coords,
        }
    }

    /// Graph cells `(Q[x], x_1, ..., x_n)` in index order.
    pub fn graph_cells(&self) -> GraphCells<'_> {
        GraphCells {
            cube: self,
            index: 0,
        }
    }

    /// Checks that `cell = (x_0, x_1, ..., x_n)` lies in the graph.
    pub fn contains_graph_cell(&self, cell: &[u8]) -> bool {
        cell.len() == self.n + 1
            && cell.iter().all(|&c| (c as usize) < self.q)
            && self.get(&cell[1..]) == cell[0]
    }
}

/// Iterator over the graph of a hypercube, see
/// [`LatinHypercube::graph_cells`].
pub struct GraphCells<'a> {
    cube: &'a LatinHypercube,
    index: usize,
}

impl Iterator for GraphCells<'_> {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        let cube = self.cube;
        if self.index >= cube.values.len() {
            return None;
        }
        let mut cell = vec![0u8; cube.n + 1];
        cell[0] = cube.values[self.index];
        write_coords(self.index, cube.q, &mut cell[1..]);
        self.index += 1;
        Some(cell)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.cube.values.len() - self.index;
        (left, Some(left))
    }
}

impl ExactSizeIterator for GraphCells<'_> {}

// Order-4 helpers. `l` keeps the high bit of a symbol, `nu` flips the low one.

#[inline]
pub(crate) fn l4(s: u8) -> u8 {
    s >> 1
}

#[inline]
pub(crate) fn nu4(s: u8) -> u8 {
    s ^ 1
}

fn check_order4(q: usize, s: u8) -> Result<()> {
    if q != 4 {
        return Err(Error::UnsupportedOrder { q, required: 4 });
    }
    if s >= 4 {
        return Err(Error::SymbolOutOfRange {
            symbol: s as usize,
            q,
        });
    }
    Ok(())
}

/// `l(0) = l(1) = 0`, `l(2) = l(3) = 1`. Only defined for order 4.
pub fn l_of(q: usize, s: u8) -> Result<u8> {
    check_order4(q, s)?;
    Ok(l4(s))
}

/// The involution `0 <-> 1`, `2 <-> 3`. Only defined for order 4.
pub fn nu_of(q: usize, s: u8) -> Result<u8> {
    check_order4(q, s)?;
    Ok(nu4(s))
}

pub fn l_of_cell(q: usize, cell: &[u8]) -> Result<Vec<u8>> {
    cell.iter().map(|&s| l_of(q, s)).collect()
}

pub fn nu_of_cell(q: usize, cell: &[u8]) -> Result<Vec<u8>> {
    cell.iter().map(|&s| nu_of(q, s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn index_examples() {
        assert_eq!(index_of(&[0, 0, 0], 3, 4), Ok(0));
        assert_eq!(index_of(&[1, 2, 3], 3, 4), Ok(27));
        assert_eq!(coords_of(63, 3, 4).unwrap(), vec![3, 3, 3]);
        assert!(matches!(
            index_of(&[1, 4, 0], 3, 4),
            Err(Error::CoordinateOutOfRange {
                position: 2,
                value: 4,
                q: 4
            })
        ));
        assert!(coords_of(64, 3, 4).is_err());
    }

    proptest! {
        #[test]
        fn index_round_trip(n in 1usize..=6, q in 1usize..=8, seed in any::<u64>()) {
            let len = match cell_count(n, q) { Ok(len) => len, Err(_) => return Ok(()) };
            let index = (seed % len as u64) as usize;
            let coords = coords_of(index, n, q).unwrap();
            prop_assert_eq!(index_of(&coords, n, q).unwrap(), index);
        }
    }

    #[test]
    fn index_round_trip_exhaustive_small() {
        for (n, q) in [(1, 8), (3, 5), (4, 4), (10, 2)] {
            let len = cell_count(n, q).unwrap();
            for i in 0..len {
                assert_eq!(index_of(&coords_of(i, n, q).unwrap(), n, q).unwrap(), i);
            }
        }
    }

    #[test]
    fn scale_bound() {
        assert!(cell_count(12, 4).is_ok());
        assert!(cell_count(13, 4).is_err());
        assert!(cell_count(2, 9).is_err());
        assert!(cell_count(0, 3).is_err());
    }

    #[test]
    fn latin_squares_of_order_two() {
        let ok = LatinHypercube::new(2, 2, vec![0, 1, 1, 0]).unwrap();
        assert!(ok.validate_latin().is_ok());
        let bad = LatinHypercube::new(2, 2, vec![0, 0, 1, 0]).unwrap();
        let report = bad.validate_latin();
        assert!(report.violations.contains(&LineRef {
            axis: 2,
            fixed: vec![0]
        }));
        assert!(!bad.is_latin());
    }

    #[test]
    fn structural_errors_are_not_latin_errors() {
        assert_eq!(
            LatinHypercube::new(2, 2, vec![0, 1, 1]),
            Err(Error::SizeMismatch {
                expected: 4,
                found: 3
            })
        );
        assert_eq!(
            LatinHypercube::new(2, 2, vec![0, 1, 2, 0]),
            Err(Error::SymbolOutOfRange { symbol: 2, q: 2 })
        );
    }

    #[test]
    fn reports_every_bad_line() {
        let cube = LatinHypercube::new(2, 3, vec![0, 0, 0, 1, 1, 1, 2, 2, 2]).unwrap();
        let report = cube.validate_latin();
        assert_eq!(report.violations.len(), 3);
        assert!(report.violations.iter().all(|line| line.axis == 2));
    }

    #[test]
    fn graph_of_identity() {
        let id = LatinHypercube::new(1, 2, vec![0, 1]).unwrap();
        let cells: Vec<_> = id.graph_cells().collect();
        assert_eq!(cells, vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn graph_is_a_distance_two_code() {
        let xor = LatinHypercube::from_fn(2, 4, |x| x[0] ^ x[1]).unwrap();
        let cells: Vec<_> = xor.graph_cells().collect();
        assert_eq!(cells.len(), 16);
        for (i, a) in cells.iter().enumerate() {
            for b in &cells[i + 1..] {
                let dist = a.iter().zip(b).filter(|(x, y)| x != y).count();
                assert!(dist >= 2);
            }
        }
    }

    #[test]
    fn l_and_nu() {
        assert_eq!(l_of(4, 2), Ok(1));
        assert_eq!(nu_of(4, 3), Ok(2));
        assert_eq!(nu_of(4, nu_of(4, 0).unwrap()), Ok(0));
        assert_eq!(
            l_of(3, 1),
            Err(Error::UnsupportedOrder { q: 3, required: 4 })
        );
        for s in 0..4 {
            assert_eq!(nu4(nu4(s)), s);
            assert_eq!(l4(nu4(s)), l4(s));
        }
        for bit in 0..2 {
            assert_eq!((0..4u8).filter(|&s| l4(s) == bit).count(), 2);
        }
        assert_eq!(l_of_cell(4, &[0, 1, 2, 3]).unwrap(), vec![0, 0, 1, 1]);
        assert_eq!(nu_of_cell(4, &[0, 1, 2, 3]).unwrap(), vec![1, 0, 3, 2]);
    }
}
