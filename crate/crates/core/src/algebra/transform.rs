use alloc::vec;
use alloc::vec::Vec;

use super::Permutation;
use crate::hypercube::{encode, LatinHypercube};
use crate::{Error, Result};

/// `R[y] = sigma_0^-1(Q[sigma_1(y_1), ..., sigma_n(y_n)])`.
///
/// Equivalently the graph of `R` is the image of the graph of `Q` under
/// `(x_0, ..., x_n) -> (sigma_0^-1(x_0), ..., sigma_n^-1(x_n))`.
pub fn apply_isotopy(cube: &LatinHypercube, perms: &[Permutation]) -> Result<LatinHypercube> {
    let (n, q) = (cube.arity(), cube.order());
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
    let out_inv = perms[0].inverse();
    LatinHypercube::from_fn(n, q, |y| {
        let x = encode(
            y.iter().zip(&perms[1..]).map(|(&v, p)| p.apply_symbol(v)),
            q,
        );
        out_inv.apply_symbol(cube.at(x))
    })
}

/// The cube whose graph is `{(x_pi(0), ..., x_pi(n)) : x in graph(Q)}`.
pub fn apply_parastrophe(cube: &LatinHypercube, pi: &Permutation) -> Result<LatinHypercube> {
    let (n, q) = (cube.arity(), cube.order());
    if pi.len() != n + 1 {
        return Err(Error::ArityMismatch {
            expected: n + 1,
            found: pi.len(),
        });
    }
    if pi.is_identity() {
        return Ok(cube.clone());
    }
    if !cube.is_latin() {
        return Err(Error::NotLatin);
    }
    let mut values = vec![0u8; cube.len()];
    let mut moved = vec![0u8; n + 1];
    for cell in cube.graph_cells() {
        for (k, slot) in moved.iter_mut().enumerate() {
            *slot = cell[pi.apply(k)];
        }
        values[encode(moved[1..].iter().copied(), q)] = moved[0];
    }
    Ok(LatinHypercube::from_raw(n, q, values))
}

/// An isotopy and/or a parastrophe. When both are present the isotopy is
/// applied first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransformSpec {
    pub isotopy: Option<Vec<Permutation>>,
    pub parastrophe: Option<Permutation>,
}

impl TransformSpec {
    pub fn isotopy(perms: Vec<Permutation>) -> Self {
        TransformSpec {
            isotopy: Some(perms),
            parastrophe: None,
        }
    }

    pub fn parastrophe(pi: Permutation) -> Self {
        TransformSpec {
            isotopy: None,
            parastrophe: Some(pi),
        }
    }

    pub fn apply(&self, cube: &LatinHypercube) -> Result<LatinHypercube> {
        let mut out = match &self.isotopy {
            Some(perms) => apply_isotopy(cube, perms)?,
            None => cube.clone(),
        };
        if let Some(pi) = &self.parastrophe {
            out = apply_parastrophe(&out, pi)?;
        }
        Ok(out)
    }

    /// The transform undoing `self`: inverse parastrophe, then the
    /// inverse isotopy.
    pub fn inverse(&self) -> InverseTransform {
        let parastrophe = self.parastrophe.as_ref().map(Permutation::inverse);
        let isotopy = self
            .isotopy
            .as_ref()
            .map(|perms| perms.iter().map(Permutation::inverse).collect::<Vec<_>>());
        InverseTransform {
            parastrophe,
            isotopy,
        }
    }
}

/// Result of [`TransformSpec::inverse`]: parastrophe first, then isotopy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseTransform {
    pub parastrophe: Option<Permutation>,
    pub isotopy: Option<Vec<Permutation>>,
}

impl InverseTransform {
    pub fn apply(&self, cube: &LatinHypercube) -> Result<LatinHypercube> {
        let mut out = match &self.parastrophe {
            Some(pi) => apply_parastrophe(cube, pi)?,
            None => cube.clone(),
        };
        if let Some(perms) = &self.isotopy {
            out = apply_isotopy(&out, perms)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gen_iterated_group, BinaryOp, GroupKind};

    fn perm(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn identity_transforms() {
        let cube = gen_iterated_group(GroupKind::Z4, 3, 4).unwrap();
        let id = vec![Permutation::identity(4); 4];
        assert_eq!(apply_isotopy(&cube, &id).unwrap(), cube);
        assert_eq!(
            apply_parastrophe(&cube, &Permutation::identity(4)).unwrap(),
            cube
        );
    }

    #[test]
    fn isotopy_matches_definition() {
        let cube = gen_iterated_group(GroupKind::CyclicZq, 2, 5).unwrap();
        let perms = vec![
            perm(&[1, 2, 3, 4, 0]),
            perm(&[4, 3, 2, 1, 0]),
            perm(&[0, 2, 4, 1, 3]),
        ];
        let out = apply_isotopy(&cube, &perms).unwrap();
        assert!(out.is_latin());
        // R[s1^-1(x1), s2^-1(x2)] = s0^-1(Q[x1, x2])
        let inv: Vec<_> = perms.iter().map(Permutation::inverse).collect();
        for x1 in 0..5u8 {
            for x2 in 0..5u8 {
                let lhs = out.get(&[inv[1].apply_symbol(x1), inv[2].apply_symbol(x2)]);
                assert_eq!(lhs, inv[0].apply_symbol(cube.get(&[x1, x2])));
            }
        }
    }

    #[test]
    fn parastrophe_swapping_output_and_first_input() {
        let op = BinaryOp::cyclic(3).unwrap();
        let cube = op.to_hypercube();
        let out = apply_parastrophe(&cube, &perm(&[1, 0, 2])).unwrap();
        // graph re-read: cells (x1, x0, x2) with x0 = x1 + x2
        for x0 in 0..3u8 {
            for x2 in 0..3u8 {
                let x1 = (0..3u8).find(|&x1| op.apply(x1, x2) == x0).unwrap();
                assert_eq!(out.get(&[x0, x2]), x1);
            }
        }
        assert_eq!(out, op.right_inverse().to_hypercube());
    }

    #[test]
    fn parastrophe_rejects_bad_input() {
        let cube = gen_iterated_group(GroupKind::Z4, 2, 4).unwrap();
        assert!(apply_parastrophe(&cube, &perm(&[1, 0])).is_err());
        let broken = LatinHypercube::new(2, 2, vec![0, 0, 1, 1]).unwrap();
        assert_eq!(
            apply_parastrophe(&broken, &perm(&[1, 0, 2])),
            Err(Error::NotLatin)
        );
    }

    #[test]
    fn isotopy_checks_shapes() {
        let cube = gen_iterated_group(GroupKind::Z4, 2, 4).unwrap();
        assert!(matches!(
            apply_isotopy(&cube, &[Permutation::identity(4)]),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(
            apply_isotopy(&cube, &vec![Permutation::identity(3); 3]),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn transform_then_inverse_is_identity() {
        let cube = gen_iterated_group(GroupKind::CyclicZq, 3, 3).unwrap();
        let spec = TransformSpec {
            isotopy: Some(vec![
                perm(&[1, 2, 0]),
                perm(&[0, 2, 1]),
                perm(&[2, 1, 0]),
                perm(&[1, 0, 2]),
            ]),
            parastrophe: Some(perm(&[2, 0, 3, 1])),
        };
        let there = spec.apply(&cube).unwrap();
        assert_ne!(there, cube);
        assert_eq!(spec.inverse().apply(&there).unwrap(), cube);
    }
}
