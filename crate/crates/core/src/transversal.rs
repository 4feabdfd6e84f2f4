//! Exact transversal search.
//!
//! A transversal picks one graph cell for every output symbol `x_0 = a`
//! such that the chosen cells differ in every input coordinate. The search
//! walks `a = 0, 1, ..., q - 1`, keeping one `q`-bit set of used values per
//! input coordinate; all sets are packed into a single `u64`. Once `q - 1`
//! cells are chosen the last one is forced, so it is only checked.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::time::Duration;

use crate::hypercube::{encode, write_coords, LatinHypercube};
use crate::semilinear::{detect_semilinear, Quadruple, QuadrupleClass};
use crate::{Error, Result};

/// Largest order accepted by the exact search.
pub const ENVELOPE_MAX_ORDER: usize = 6;
/// Largest number of cells accepted by the exact search.
pub const ENVELOPE_MAX_CELLS: usize = 1 << 20;

/// `q` graph cells `(x_0, ..., x_n)` sorted by `x_0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transversal {
    width: usize,
    data: Vec<u8>,
}

impl Transversal {
    /// Collects cells of length `width` and sorts them by `x_0`.
    pub fn from_cells<I, C>(width: usize, cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: AsRef<[u8]>,
    {
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for cell in cells {
            let cell = cell.as_ref();
            if cell.len() != width {
                return Err(Error::ArityMismatch {
                    expected: width,
                    found: cell.len(),
                });
            }
            rows.push(cell.to_vec());
        }
        rows.sort();
        Ok(Transversal {
            width,
            data: rows.concat(),
        })
    }

    /// Length of each cell, `n + 1`.
    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of cells.
    #[inline]
    pub fn len(&self) -> usize {
        self.data.len().checked_div(self.width).unwrap_or(0)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn cells(&self) -> impl ExactSizeIterator<Item = &[u8]> + '_ {
        self.data.chunks_exact(self.width.max(1))
    }

    #[inline]
    pub fn cell(&self, i: usize) -> &[u8] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    /// The cells concatenated, in order.
    pub fn flattened(&self) -> &[u8] {
        &self.data
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Partial transversals extended plus final-cell checks.
    pub nodes_visited: u64,
    pub transversals_found: u64,
    /// Left at zero by this crate; timing callers fill it in.
    pub elapsed: Duration,
}

/// Fails unless `cube` is inside the exact-search envelope.
pub fn check_envelope(cube: &LatinHypercube) -> Result<()> {
    let (n, q) = (cube.arity(), cube.order());
    if q > ENVELOPE_MAX_ORDER || cube.len() > ENVELOPE_MAX_CELLS || n * q > 64 {
        return Err(Error::EnvelopeExceeded { n, q });
    }
    Ok(())
}

/// True iff `t` consists of graph cells of `cube` and every coordinate
/// column is a permutation of the symbols.
pub fn verify_transversal(cube: &LatinHypercube, t: &Transversal) -> Result<bool> {
    let (n, q) = (cube.arity(), cube.order());
    if t.width() != n + 1 {
        return Err(Error::ArityMismatch {
            expected: n + 1,
            found: t.width(),
        });
    }
    if t.len() != q {
        return Err(Error::OrderMismatch {
            expected: q,
            found: t.len(),
        });
    }
    if let Some(&bad) = t.flattened().iter().find(|&&s| s as usize >= q) {
        return Err(Error::SymbolOutOfRange {
            symbol: bad as usize,
            q,
        });
    }
    if !t.cells().all(|cell| cube.contains_graph_cell(cell)) {
        return Ok(false);
    }
    for k in 0..=n {
        let mut seen = 0u32;
        for cell in t.cells() {
            let bit = 1u32 << cell[k];
            if seen & bit != 0 {
                return Ok(false);
            }
            seen |= bit;
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    index: u32,
    mask: u64,
}

/// Precomputed candidate lists for one hypercube.
pub struct TransversalSearch<'a> {
    cube: &'a LatinHypercube,
    by_symbol: Vec<Vec<Candidate>>,
    coord_masks: Vec<u64>,
    place: Vec<usize>,
}

impl<'a> TransversalSearch<'a> {
    pub fn new(cube: &'a LatinHypercube) -> Result<Self> {
        check_envelope(cube)?;
        let (n, q) = (cube.arity(), cube.order());
        let mut by_symbol = vec![Vec::with_capacity(cube.len() / q); q];
        let mut coords = vec![0u8; n];
        for index in 0..cube.len() {
            write_coords(index, q, &mut coords);
            let mask = coords
                .iter()
                .enumerate()
                .fold(0u64, |m, (k, &v)| m | 1u64 << (k * q + v as usize));
            by_symbol[cube.at(index) as usize].push(Candidate {
                index: index as u32,
                mask,
            });
        }
        let full = if q == 64 { u64::MAX } else { (1u64 << q) - 1 };
        let coord_masks = (0..n).map(|k| full << (k * q)).collect();
        let place = (0..n).map(|k| q.pow((n - 1 - k) as u32)).collect();
        Ok(TransversalSearch {
            cube,
            by_symbol,
            coord_masks,
            place,
        })
    }

    pub fn cube(&self) -> &'a LatinHypercube {
        self.cube
    }

    /// Number of independent first-level branches (cells with `x_0 = 0`).
    /// Zero for order 1, where nothing is branched on.
    pub fn branch_count(&self) -> usize {
        if self.cube.order() < 2 {
            0
        } else {
            self.by_symbol[0].len()
        }
    }

    /// Counts the transversals whose `x_0 = 0` cell is the `branch`-th
    /// candidate. Returns `(transversals, nodes)`.
    pub fn count_branch(&self, branch: usize) -> (u64, u64) {
        let c = self.by_symbol[0][branch];
        let mut nodes = 1;
        let found = self.count_from(1, c.mask, &mut nodes);
        (found, nodes)
    }

    pub fn count(&self) -> SearchStats {
        let mut nodes = 0;
        let found = self.count_from(0, 0, &mut nodes);
        SearchStats {
            nodes_visited: nodes,
            transversals_found: found,
            elapsed: Duration::ZERO,
        }
    }

    fn count_from(&self, level: usize, used: u64, nodes: &mut u64) -> u64 {
        if level + 1 == self.cube.order() {
            *nodes += 1;
            return self.forced_last(used).is_some() as u64;
        }
        let mut total = 0;
        for c in &self.by_symbol[level] {
            if c.mask & used == 0 {
                *nodes += 1;
                total += self.count_from(level + 1, used | c.mask, nodes);
            }
        }
        total
    }

    /// Index of the only cell compatible with `used`, if it carries the
    /// last symbol.
    #[inline]
    fn forced_last(&self, used: u64) -> Option<usize> {
        let q = self.cube.order();
        let mut index = 0;
        for (k, &m) in self.coord_masks.iter().enumerate() {
            let free = !used & m;
            let v = free.trailing_zeros() as usize - k * q;
            index += v * self.place[k];
        }
        (self.cube.at(index) as usize == q - 1).then_some(index)
    }

    fn transversal_from(&self, chosen: &[u32]) -> Transversal {
        let (n, q) = (self.cube.arity(), self.cube.order());
        let width = n + 1;
        let mut data = vec![0u8; q * width];
        for (a, &index) in chosen.iter().enumerate() {
            let cell = &mut data[a * width..(a + 1) * width];
            cell[0] = a as u8;
            write_coords(index as usize, q, &mut cell[1..]);
        }
        Transversal { width, data }
    }
}

/// Exact number of transversals.
pub fn count_transversals(cube: &LatinHypercube) -> Result<u64> {
    Ok(count_transversals_with_stats(cube)?.transversals_found)
}

pub fn count_transversals_with_stats(cube: &LatinHypercube) -> Result<SearchStats> {
    Ok(TransversalSearch::new(cube)?.count())
}

/// Streams transversals in lexicographic order of their flattened cell
/// lists, stopping after `limit` items when given.
pub fn enumerate_transversals(
    cube: &LatinHypercube,
    limit: Option<usize>,
) -> Result<Transversals<'_>> {
    let search = TransversalSearch::new(cube)?;
    let q = cube.order();
    Ok(Transversals {
        search,
        cursor: vec![0; q],
        chosen: vec![0; q],
        used: vec![0; q],
        depth: 0,
        remaining: limit,
        done: false,
    })
}

/// Iterator returned by [`enumerate_transversals`].
pub struct Transversals<'a> {
    search: TransversalSearch<'a>,
    cursor: Vec<usize>,
    chosen: Vec<u32>,
    used: Vec<u64>,
    depth: usize,
    remaining: Option<usize>,
    done: bool,
}

impl Iterator for Transversals<'_> {
    type Item = Transversal;

    fn next(&mut self) -> Option<Transversal> {
        if self.done || self.remaining == Some(0) {
            return None;
        }
        let last = self.search.cube.order() - 1;
        loop {
            if self.depth == last {
                let forced = self.search.forced_last(self.used[last]);
                if last == 0 {
                    self.done = true;
                } else {
                    self.depth -= 1;
                }
                if let Some(index) = forced {
                    self.chosen[last] = index as u32;
                    if let Some(r) = self.remaining.as_mut() {
                        *r -= 1;
                    }
                    return Some(self.search.transversal_from(&self.chosen));
                }
                if self.done {
                    return None;
                }
                continue;
            }
            let d = self.depth;
            let cands = &self.search.by_symbol[d];
            let used = self.used[d];
            let mut pos = self.cursor[d];
            while pos < cands.len() && cands[pos].mask & used != 0 {
                pos += 1;
            }
            if pos == cands.len() {
                if d == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                continue;
            }
            self.cursor[d] = pos + 1;
            self.chosen[d] = cands[pos].index;
            self.used[d + 1] = used | cands[pos].mask;
            self.depth += 1;
            if self.depth < last {
                self.cursor[self.depth] = 0;
            }
        }
    }
}

/// Transversals of a standardly semilinear cube grouped by the quadruple of
/// blocks (the `l`-images of their four cells) they occupy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrupleBuckets {
    pub n: usize,
    pub buckets: BTreeMap<Quadruple, u64>,
}

impl QuadrupleBuckets {
    pub fn total(&self) -> u64 {
        self.buckets.values().sum()
    }

    pub fn of_class(&self, class: QuadrupleClass) -> impl Iterator<Item = (&Quadruple, u64)> + '_ {
        self.buckets
            .iter()
            .filter(move |(qd, _)| qd.classify() == class)
            .map(|(qd, &c)| (qd, c))
    }

    pub fn twin_total(&self) -> u64 {
        self.of_class(QuadrupleClass::Twin).map(|(_, c)| c).sum()
    }
}

pub fn transversals_by_quadruple(cube: &LatinHypercube) -> Result<QuadrupleBuckets> {
    if cube.order() != 4 || detect_semilinear(cube).is_none() {
        return Err(Error::NotSemilinear);
    }
    let n = cube.arity();
    let mut buckets = BTreeMap::new();
    for t in enumerate_transversals(cube, None)? {
        let mut vectors = [0u32; 4];
        for (slot, cell) in vectors.iter_mut().zip(t.cells()) {
            *slot = encode(cell.iter().map(|&s| s >> 1), 2) as u32;
        }
        let qd = Quadruple::new(n + 1, vectors)?;
        *buckets.entry(qd).or_insert(0) += 1;
    }
    Ok(QuadrupleBuckets { n, buckets })
}
