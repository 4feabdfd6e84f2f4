//! Affine systems over GF(2) in at most 64 unknowns.

use alloc::vec::Vec;

/// One equation: XOR of the unknowns selected by `mask` equals `rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Equation {
    pub mask: u64,
    pub rhs: bool,
}

/// Solution set `particular + span(basis)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSpace {
    vars: usize,
    particular: u64,
    basis: Vec<u64>,
}

impl AffineSpace {
    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn len(&self) -> u128 {
        1u128 << self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn particular(&self) -> u64 {
        self.particular
    }

    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn contains(&self, x: u64) -> bool {
        // the basis is kept in reduced echelon form keyed by pivot bits
        let mut r = x ^ self.particular;
        for &b in &self.basis {
            let pivot = 63 - b.leading_zeros();
            if r >> pivot & 1 == 1 {
                r ^= b;
            }
        }
        r == 0
    }

    /// Every element, by Gray code over the basis. Only sensible for small
    /// dimensions.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        assert!(self.dim() < 64, "affine space too large to iterate");
        let mut current = self.particular;
        (0u64..1 << self.dim()).map(move |k| {
            if k > 0 {
                current ^= self.basis[k.trailing_zeros() as usize];
            }
            current
        })
    }
}

/// Solves the system in `vars` unknowns, or `None` when it is inconsistent.
pub fn solve(vars: usize, equations: &[Equation]) -> Option<AffineSpace> {
    assert!(vars <= 64);
    let full = if vars == 64 {
        u64::MAX
    } else {
        (1u64 << vars) - 1
    };
    // rows[p] has its highest set bit at p
    let mut rows: [Option<(u64, bool)>; 64] = [None; 64];
    for eq in equations {
        let (mut mask, mut rhs) = (eq.mask & full, eq.rhs);
        while mask != 0 {
            let p = 63 - mask.leading_zeros() as usize;
            match rows[p] {
                Some((m, r)) => {
                    mask ^= m;
                    rhs ^= r;
                }
                None => break,
            }
        }
        if mask == 0 {
            if rhs {
                return None;
            }
            continue;
        }
        rows[63 - mask.leading_zeros() as usize] = Some((mask, rhs));
    }
    // back substitution, lowest pivot first, free unknowns set to zero
    let mut particular = 0u64;
    for (p, row) in rows.iter().enumerate() {
        if let Some((m, r)) = *row {
            let lower = m & !(1u64 << p);
            if r ^ ((lower & particular).count_ones() % 2 == 1) {
                particular |= 1 << p;
            }
        }
    }
    // one basis vector per free unknown; keep them reduced on the free bits
    let mut basis = Vec::new();
    for f in 0..vars {
        if rows[f].is_some() {
            continue;
        }
        let mut v = 1u64 << f;
        for (p, row) in rows.iter().enumerate().skip(f + 1) {
            if let Some((m, _)) = *row {
                if (m & !(1u64 << p) & v).count_ones() % 2 == 1 {
                    v |= 1 << p;
                }
            }
        }
        basis.push(v);
    }
    let mut space = AffineSpace {
        vars,
        particular,
        basis,
    };
    space.reduce();
    Some(space)
}

impl AffineSpace {
    // echelon form on the highest bit so `contains` can reduce greedily
    fn reduce(&mut self) {
        let mut out: Vec<u64> = Vec::new();
        for &b in &self.basis {
            let mut v = b;
            for &o in &out {
                let p = 63 - o.leading_zeros();
                if v >> p & 1 == 1 {
                    v ^= o;
                }
            }
            if v != 0 {
                out.push(v);
                out.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        self.basis = out;
    }
}
