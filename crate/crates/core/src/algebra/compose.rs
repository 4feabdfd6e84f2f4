use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{BinaryOp, TransformSpec};
use crate::hypercube::LatinHypercube;
use crate::{Error, Result};

/// Rooted expression tree over binary quasigroups. Leaves are 1-based
/// variable labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(usize),
    Node {
        op: BinaryOp,
        left: Box<Expr>,
        right: Box<Expr>,
    },
}

impl Expr {
    pub fn var(k: usize) -> Self {
        Expr::Var(k)
    }

    pub fn node(op: BinaryOp, left: Expr, right: Expr) -> Self {
        Expr::Node {
            op,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub(crate) fn eval(&self, x: &[u8]) -> u8 {
        match self {
            Expr::Var(k) => x[k - 1],
            Expr::Node { op, left, right } => op.apply(left.eval(x), right.eval(x)),
        }
    }

    /// Leaf labels, left to right.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Expr::Var(k) => out.push(*k),
            Expr::Node { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            Expr::Var(_) => 0,
            Expr::Node { left, right, .. } => 1 + left.internal_nodes() + right.internal_nodes(),
        }
    }

    fn ops<'a>(&'a self, out: &mut Vec<&'a BinaryOp>) {
        if let Expr::Node { op, left, right } = self {
            out.push(op);
            left.ops(out);
            right.ops(out);
        }
    }

    fn is_leaf(&self) -> bool {
        matches!(self, Expr::Var(_))
    }
}

/// A composition of binary quasigroups plus an optional transform applied
/// to the evaluated cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionSpec {
    root: Expr,
    n: usize,
    q: usize,
    post_transform: Option<TransformSpec>,
}

impl CompositionSpec {
    pub fn new(root: Expr, post_transform: Option<TransformSpec>) -> Result<Self> {
        if root.is_leaf() {
            return Err(Error::MalformedTree(
                "a composition needs at least one operation".into(),
            ));
        }
        let leaves = root.leaves();
        let n = leaves.len();
        let mut seen = vec![false; n];
        for &k in &leaves {
            if k == 0 || k > n || core::mem::replace(&mut seen[k - 1], true) {
                return Err(Error::MalformedTree(format!(
                    "leaf labels must be a permutation of 1..={n}, found x{k}"
                )));
            }
        }
        let mut ops = Vec::new();
        root.ops(&mut ops);
        let q = ops[0].order();
        if let Some(op) = ops.iter().find(|op| op.order() != q) {
            return Err(Error::OrderMismatch {
                expected: q,
                found: op.order(),
            });
        }
        if let Some(t) = &post_transform {
            if let Some(perms) = &t.isotopy {
                if perms.len() != n + 1 {
                    return Err(Error::ArityMismatch {
                        expected: n + 1,
                        found: perms.len(),
                    });
                }
                if let Some(p) = perms.iter().find(|p| p.len() != q) {
                    return Err(Error::OrderMismatch {
                        expected: q,
                        found: p.len(),
                    });
                }
            }
            if let Some(pi) = &t.parastrophe {
                if pi.len() != n + 1 {
                    return Err(Error::ArityMismatch {
                        expected: n + 1,
                        found: pi.len(),
                    });
                }
            }
        }
        Ok(CompositionSpec {
            root,
            n,
            q,
            post_transform,
        })
    }

    /// `(...((x_1 op_1 x_2) op_2 x_3) ...) op_{n-1} x_n`.
    pub fn chain(ops: &[BinaryOp]) -> Result<Self> {
        let mut iter = ops.iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::MalformedTree("empty chain".into()))?;
        let mut root = Expr::node(first.clone(), Expr::var(1), Expr::var(2));
        for (i, op) in iter.enumerate() {
            root = Expr::node(op.clone(), root, Expr::var(i + 3));
        }
        Self::new(root, None)
    }

    pub fn with_transform(mut self, transform: TransformSpec) -> Result<Self> {
        self.post_transform = Some(transform);
        Self::new(self.root, self.post_transform)
    }

    pub fn root(&self) -> &Expr {
        &self.root
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn post_transform(&self) -> Option<&TransformSpec> {
        self.post_transform.as_ref()
    }

    /// Evaluates the tree on every cell, then applies the post transform.
    pub fn compose(&self) -> Result<LatinHypercube> {
        let cube = LatinHypercube::from_fn(self.n, self.q, |x| self.root.eval(x))?;
        match &self.post_transform {
            Some(t) => t.apply(&cube),
            None => Ok(cube),
        }
    }

    /// Operations sitting next to two leaves once the output variable is
    /// hung on the root. Each one is the external quasigroup of some proper
    /// representation of the composition.
    pub fn external_ops(&self) -> Vec<&BinaryOp> {
        fn walk<'a>(e: &'a Expr, is_root: bool, out: &mut Vec<&'a BinaryOp>) {
            if let Expr::Node { op, left, right } = e {
                let leaf_neighbours =
                    left.is_leaf() as usize + right.is_leaf() as usize + is_root as usize;
                if leaf_neighbours >= 2 {
                    out.push(op);
                }
                walk(left, false, out);
                walk(right, false, out);
            }
        }
        let mut out = Vec::new();
        walk(&self.root, true, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gen_iterated_group, GroupKind};

    #[test]
    fn klein_chain_is_the_iterated_group() {
        let spec = CompositionSpec::chain(&[BinaryOp::z22_add(), BinaryOp::z22_add()]).unwrap();
        assert_eq!(
            spec.compose().unwrap(),
            gen_iterated_group(GroupKind::Z2x2, 3, 4).unwrap()
        );
    }

    #[test]
    fn single_leaf_is_rejected() {
        assert!(matches!(
            CompositionSpec::new(Expr::var(1), None),
            Err(Error::MalformedTree(_))
        ));
    }

    #[test]
    fn leaf_labels_must_be_a_permutation() {
        let op = BinaryOp::z4_add();
        let dup = Expr::node(op.clone(), Expr::var(1), Expr::var(1));
        assert!(CompositionSpec::new(dup, None).is_err());
        let gap = Expr::node(op, Expr::var(1), Expr::var(3));
        assert!(CompositionSpec::new(gap, None).is_err());
    }

    #[test]
    fn mixed_orders_are_rejected() {
        let root = Expr::node(
            BinaryOp::z4_add(),
            Expr::node(BinaryOp::cyclic(3).unwrap(), Expr::var(1), Expr::var(2)),
            Expr::var(3),
        );
        assert!(matches!(
            CompositionSpec::new(root, None),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn evaluation_respects_leaf_placement() {
        let c3 = BinaryOp::cyclic(3).unwrap();
        let sub = BinaryOp::from_fn(3, |a, b| (a + 3 - b) % 3).unwrap();
        let root = Expr::node(
            sub,
            Expr::var(2),
            Expr::node(c3, Expr::var(3), Expr::var(1)),
        );
        let spec = CompositionSpec::new(root, None).unwrap();
        let cube = spec.compose().unwrap();
        assert!(cube.is_latin());
        for x in 0..27 {
            let c = cube.coords_of(x).unwrap();
            assert_eq!(cube.at(x), (c[1] + 6 - c[2] - c[0]) % 3);
        }
    }

    #[test]
    fn external_ops_of_a_chain() {
        let a = BinaryOp::z4_add();
        let b = BinaryOp::z22_add();
        let spec = CompositionSpec::chain(&[a.clone(), b.clone(), b.clone()]).unwrap();
        // the innermost node has two leaf children, the root has x_0 and x_4
        let ext = spec.external_ops();
        assert_eq!(ext.len(), 2);
        assert_eq!(ext[0], &b);
        assert_eq!(ext[1], &a);
    }
}
