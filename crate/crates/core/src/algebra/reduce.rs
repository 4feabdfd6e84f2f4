use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{apply_parastrophe, CompositionSpec, Expr, Permutation};
use crate::hypercube::{cell_count, encode, write_coords, LatinHypercube};
use crate::{Error, Result};

/// `f(x_1, ..., x_n) = outer(inner(x_S), x_R)` where `S` and `R` split the
/// input positions. Both variable lists are 1-based and increasing; the
/// first input of `outer` is the value of `inner`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoLevel {
    inner: LatinHypercube,
    outer: LatinHypercube,
    inner_vars: Vec<usize>,
    outer_vars: Vec<usize>,
}

impl TwoLevel {
    pub fn new(
        inner: LatinHypercube,
        outer: LatinHypercube,
        inner_vars: Vec<usize>,
        outer_vars: Vec<usize>,
    ) -> Result<Self> {
        let q = inner.order();
        if outer.order() != q {
            return Err(Error::OrderMismatch {
                expected: q,
                found: outer.order(),
            });
        }
        if inner.arity() != inner_vars.len() {
            return Err(Error::ArityMismatch {
                expected: inner.arity(),
                found: inner_vars.len(),
            });
        }
        if outer.arity() != outer_vars.len() + 1 {
            return Err(Error::ArityMismatch {
                expected: outer.arity(),
                found: outer_vars.len() + 1,
            });
        }
        if inner_vars.len() < 2 || outer_vars.is_empty() {
            return Err(Error::Precondition("both levels need at least two inputs"));
        }
        let n = inner_vars.len() + outer_vars.len();
        let mut all: Vec<usize> = inner_vars.iter().chain(&outer_vars).copied().collect();
        all.sort_unstable();
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if all != (1..=n).collect::<Vec<_>>()
            || !increasing(&inner_vars)
            || !increasing(&outer_vars)
        {
            return Err(Error::Precondition(
                "variable lists must split 1..=n in increasing order",
            ));
        }
        if !inner.is_latin() || !outer.is_latin() {
            return Err(Error::NotLatin);
        }
        Ok(TwoLevel {
            inner,
            outer,
            inner_vars,
            outer_vars,
        })
    }

    /// Splits a tree at its root: the non-leaf child becomes `inner`. Trees
    /// with a post transform are rejected.
    pub fn from_spec(spec: &CompositionSpec) -> Result<Self> {
        if spec.post_transform().is_some() {
            return Err(Error::Precondition(
                "a two-level split needs a plain composition tree",
            ));
        }
        let Expr::Node { op, left, right } = spec.root() else {
            unreachable!("compositions have at least one operation")
        };
        let (inner_expr, rest_expr, inner_left) = match (left.as_ref(), right.as_ref()) {
            (Expr::Node { .. }, other) => (left.as_ref(), other, true),
            (other, Expr::Node { .. }) => (right.as_ref(), other, false),
            _ => {
                return Err(Error::Precondition(
                    "a two-level split needs arity at least 3",
                ))
            }
        };
        let (n, q) = (spec.arity(), spec.order());
        let mut inner_vars = inner_expr.leaves();
        inner_vars.sort_unstable();
        let mut outer_vars = rest_expr.leaves();
        outer_vars.sort_unstable();

        let mut x = vec![0u8; n];
        let inner = LatinHypercube::from_fn(inner_vars.len(), q, |xs| {
            for (&v, &s) in inner_vars.iter().zip(xs) {
                x[v - 1] = s;
            }
            inner_expr.eval(&x)
        })?;
        let outer = LatinHypercube::from_fn(outer_vars.len() + 1, q, |ys| {
            for (&v, &s) in outer_vars.iter().zip(&ys[1..]) {
                x[v - 1] = s;
            }
            let rest = rest_expr.eval(&x);
            if inner_left {
                op.apply(ys[0], rest)
            } else {
                op.apply(rest, ys[0])
            }
        })?;
        Self::new(inner, outer, inner_vars, outer_vars)
    }

    pub fn inner(&self) -> &LatinHypercube {
        &self.inner
    }

    pub fn outer(&self) -> &LatinHypercube {
        &self.outer
    }

    pub fn inner_vars(&self) -> &[usize] {
        &self.inner_vars
    }

    pub fn outer_vars(&self) -> &[usize] {
        &self.outer_vars
    }

    pub fn arity(&self) -> usize {
        self.inner_vars.len() + self.outer_vars.len()
    }

    pub fn order(&self) -> usize {
        self.inner.order()
    }

    pub fn compose(&self) -> Result<LatinHypercube> {
        let mut xs = vec![0u8; self.inner_vars.len()];
        let mut ys = vec![0u8; self.outer_vars.len() + 1];
        LatinHypercube::from_fn(self.arity(), self.order(), |x| {
            for (slot, &v) in xs.iter_mut().zip(&self.inner_vars) {
                *slot = x[v - 1];
            }
            ys[0] = self.inner.get(&xs);
            for (slot, &v) in ys[1..].iter_mut().zip(&self.outer_vars) {
                *slot = x[v - 1];
            }
            self.outer.get(&ys)
        })
    }

    /// The `(|S|-1)`-ary quasigroup cut out by `inner(x_S) = a`, solved for
    /// the first variable of `S`. Its graph cells are `x_S` tuples.
    pub fn inner_fiber(&self, a: u8) -> Result<LatinHypercube> {
        let q = self.order();
        if a as usize >= q {
            return Err(Error::SymbolOutOfRange {
                symbol: a as usize,
                q,
            });
        }
        let mut xs = vec![0u8; self.inner_vars.len()];
        LatinHypercube::from_fn(xs.len() - 1, q, |rest| {
            xs[1..].copy_from_slice(rest);
            (0..q as u8)
                .find(|&v| {
                    xs[0] = v;
                    self.inner.get(&xs) == a
                })
                .expect("inner is latin")
        })
    }

    /// The `|R|`-ary quasigroup `x_0 = outer(a, x_R)`.
    pub fn outer_fiber(&self, a: u8) -> Result<LatinHypercube> {
        let q = self.order();
        if a as usize >= q {
            return Err(Error::SymbolOutOfRange {
                symbol: a as usize,
                q,
            });
        }
        let mut ys = vec![a; self.outer_vars.len() + 1];
        LatinHypercube::from_fn(self.outer_vars.len(), q, |rest| {
            ys[1..].copy_from_slice(rest);
            self.outer.get(&ys)
        })
    }
}

/// Tries `Q(x) = outer(inner(x_S), x_rest)` for the given input positions.
///
/// The `q^|S|` columns (functions of the remaining inputs) must fall into
/// exactly `q` classes of equal columns; the class labels, numbered by first
/// appearance, then form `inner`.
pub fn factor_on_subset(cube: &LatinHypercube, subset: &[usize]) -> Result<Option<TwoLevel>> {
    let (n, q) = (cube.arity(), cube.order());
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != subset.len() {
        return Err(Error::Precondition("subset has repeated positions"));
    }
    if let Some(&bad) = s.iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::IndexOutOfRange { index: bad, len: n });
    }
    if s.len() < 2 || s.len() + 1 > n {
        return Err(Error::Precondition("subset size must lie in 2..=n-1"));
    }
    let r: Vec<usize> = (1..=n).filter(|v| !s.contains(v)).collect();

    let inner_len = cell_count(s.len(), q)?;
    let col_len = cell_count(r.len(), q)?;
    let mut x = vec![0u8; n];
    let mut xs = vec![0u8; s.len()];
    let mut xr = vec![0u8; r.len()];
    let mut classes: BTreeMap<Vec<u8>, u8> = BTreeMap::new();
    let mut columns: Vec<Vec<u8>> = Vec::new();
    let mut labels = Vec::with_capacity(inner_len);
    for i in 0..inner_len {
        write_coords(i, q, &mut xs);
        for (&v, &c) in s.iter().zip(&xs) {
            x[v - 1] = c;
        }
        let column: Vec<u8> = (0..col_len)
            .map(|j| {
                write_coords(j, q, &mut xr);
                for (&v, &c) in r.iter().zip(&xr) {
                    x[v - 1] = c;
                }
                cube.at(encode(x.iter().copied(), q))
            })
            .collect();
        let next = classes.len();
        if next > q {
            return Ok(None);
        }
        let label = *classes.entry(column.clone()).or_insert_with(|| {
            columns.push(column);
            next as u8
        });
        labels.push(label);
    }
    if classes.len() != q {
        return Ok(None);
    }
    let inner = LatinHypercube::new(s.len(), q, labels)?;
    let outer = LatinHypercube::from_fn(r.len() + 1, q, |ys| {
        columns[ys[0] as usize][encode(ys[1..].iter().copied(), q)]
    })?;
    if !inner.is_latin() || !outer.is_latin() {
        return Ok(None);
    }
    TwoLevel::new(inner, outer, s, r).map(Some)
}

/// A parastrophe of the cube together with a factorization of the result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibilityWitness {
    pub parastrophe: Permutation,
    pub factorization: TwoLevel,
}

/// Sweeps the parastrophes exchanging `x_0` with each role (identity
/// first) and every input subset of size `2..=n-1`. Reordering the inputs
/// only relabels subsets, so these parastrophes reach every role
/// permutation.
pub fn reducibility_witness(cube: &LatinHypercube) -> Result<Option<ReducibilityWitness>> {
    let n = cube.arity();
    if n < 3 {
        return Err(Error::Precondition("reducibility needs arity at least 3"));
    }
    if !cube.is_latin() {
        return Err(Error::NotLatin);
    }
    for k in 0..=n {
        let pi = Permutation::swap(n + 1, 0, k);
        let image = apply_parastrophe(cube, &pi)?;
        for mask in 0u32..1 << n {
            let size = mask.count_ones() as usize;
            if size < 2 || size + 1 > n {
                continue;
            }
            let subset: Vec<usize> = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
            if let Some(factorization) = factor_on_subset(&image, &subset)? {
                return Ok(Some(ReducibilityWitness {
                    parastrophe: pi,
                    factorization,
                }));
            }
        }
    }
    Ok(None)
}

pub fn is_reducible(cube: &LatinHypercube) -> Result<bool> {
    Ok(reducibility_witness(cube)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gen_iterated_group, BinaryOp, GroupKind};
    use crate::semilinear::{gen_semilinear, BooleanFn};

    /// Oracle for ternary cubes: `Q` factors on `{i, j}` iff any two
    /// `(x_i, x_j)` columns that agree at one value of the third input agree
    /// at all of them.
    fn ternary_reducible_oracle(cube: &LatinHypercube) -> bool {
        let q = cube.order() as u8;
        let at = |pair: (usize, usize), a: u8, b: u8, c: u8| {
            let mut x = [0u8; 3];
            x[pair.0] = a;
            x[pair.1] = b;
            x[3 - pair.0 - pair.1] = c;
            cube.get(&x)
        };
        [(0, 1), (0, 2), (1, 2)].into_iter().any(|pair| {
            (0..q).all(|a| {
                (0..q).all(|b| {
                    (0..q).all(|c| {
                        (0..q).all(|d| {
                            let agree: Vec<bool> = (0..q)
                                .map(|z| at(pair, a, b, z) == at(pair, c, d, z))
                                .collect();
                            agree.iter().all(|&t| t) || agree.iter().all(|&t| !t)
                        })
                    })
                })
            })
        })
    }

    #[test]
    fn klein_group_factors_on_first_pair() {
        let cube = gen_iterated_group(GroupKind::Z2x2, 3, 4).unwrap();
        let two = factor_on_subset(&cube, &[1, 2]).unwrap().unwrap();
        assert_eq!(two.compose().unwrap(), cube);
        // labels follow first appearance, which makes inner exactly XOR here
        assert_eq!(two.inner(), &BinaryOp::z22_add().to_hypercube());
    }

    #[test]
    fn subset_preconditions() {
        let cube = gen_iterated_group(GroupKind::Z4, 2, 4).unwrap();
        assert!(factor_on_subset(&cube, &[1, 2]).is_err());
        assert!(is_reducible(&cube).is_err());
        let cube3 = gen_iterated_group(GroupKind::Z4, 3, 4).unwrap();
        assert!(factor_on_subset(&cube3, &[1, 1]).is_err());
        assert!(factor_on_subset(&cube3, &[1, 4]).is_err());
    }

    #[test]
    fn semilinear_ternary_sweep_matches_oracle() {
        let mut irreducible = 0;
        for word in 0..256u64 {
            let lambda = BooleanFn::from_index_bits(3, word).unwrap();
            let cube = gen_semilinear(&lambda).unwrap();
            let got = is_reducible(&cube).unwrap();
            assert_eq!(got, ternary_reducible_oracle(&cube), "lambda = {lambda}");
            if !got {
                irreducible += 1;
                for pi in Permutation::all(4) {
                    let image = apply_parastrophe(&cube, &pi).unwrap();
                    assert!(!ternary_reducible_oracle(&image));
                }
            }
        }
        assert!(irreducible > 0);
    }

    #[test]
    fn witness_reproduces_the_parastrophe() {
        let spec = CompositionSpec::new(
            Expr::node(
                BinaryOp::z4_add(),
                Expr::var(3),
                Expr::node(BinaryOp::cyclic(4).unwrap(), Expr::var(1), Expr::var(2)),
            ),
            None,
        )
        .unwrap();
        let cube = spec.compose().unwrap();
        let w = reducibility_witness(&cube).unwrap().unwrap();
        let image = apply_parastrophe(&cube, &w.parastrophe).unwrap();
        assert_eq!(w.factorization.compose().unwrap(), image);
    }

    #[test]
    fn from_spec_round_trip_and_fibers() {
        let spec = CompositionSpec::new(
            Expr::node(
                BinaryOp::z4_add(),
                Expr::var(2),
                Expr::node(BinaryOp::z22_add(), Expr::var(3), Expr::var(1)),
            ),
            None,
        )
        .unwrap();
        let two = TwoLevel::from_spec(&spec).unwrap();
        assert_eq!(two.inner_vars(), &[1, 3]);
        assert_eq!(two.outer_vars(), &[2]);
        assert_eq!(two.compose().unwrap(), spec.compose().unwrap());
        for a in 0..4u8 {
            let h = two.inner_fiber(a).unwrap();
            for cell in h.graph_cells() {
                assert_eq!(two.inner().get(&cell), a);
            }
            let g = two.outer_fiber(a).unwrap();
            for cell in g.graph_cells() {
                assert_eq!(two.outer().get(&[a, cell[1]]), cell[0]);
            }
        }
    }
}
