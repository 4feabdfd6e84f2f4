//! The `classify` report.

use std::fmt;

use lhc_core::algebra::{reducibility_witness, ReducibilityWitness};
use lhc_core::semilinear::{
    delta_report, detect_semilinear, zero_transversal_criterion, BooleanFn, DeltaReport,
};
use lhc_core::LatinHypercube;

use crate::sexpr::format_permutation;
use crate::Result;

#[derive(Debug, Clone)]
pub struct SemilinearInfo {
    pub lambda: BooleanFn,
    pub delta: DeltaReport,
    /// Even arity only: whether the brindled sums all equal one.
    pub no_transversals: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub arity: usize,
    pub order: usize,
    pub latin_violations: usize,
    pub semilinear: Option<SemilinearInfo>,
    /// `None` when the arity is below 3 and the question does not apply.
    pub reducible: Option<Option<ReducibilityWitness>>,
}

pub fn classify(cube: &LatinHypercube) -> Result<Classification> {
    let report = cube.validate_latin();
    let latin = report.is_ok();
    let semilinear = detect_semilinear(cube).map(|lambda| {
        let no_transversals =
            (lambda.arity() % 2 == 0).then(|| zero_transversal_criterion(&lambda).expect("even"));
        SemilinearInfo {
            delta: delta_report(&lambda),
            lambda,
            no_transversals,
        }
    });
    let reducible = if latin && cube.arity() >= 3 {
        Some(reducibility_witness(cube)?)
    } else {
        None
    };
    Ok(Classification {
        arity: cube.arity(),
        order: cube.order(),
        latin_violations: report.violations.len(),
        semilinear,
        reducible,
    })
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cube: n = {}, q = {}", self.arity, self.order)?;
        if self.latin_violations == 0 {
            writeln!(f, "latin: ok")?;
        } else {
            writeln!(f, "latin: no ({} violating lines)", self.latin_violations)?;
        }
        match &self.semilinear {
            None => writeln!(f, "standardly semilinear: no")?,
            Some(info) => {
                writeln!(f, "standardly semilinear: yes")?;
                writeln!(f, "  lambda: {}", info.lambda)?;
                writeln!(f, "  brindled sums: {:?}", info.delta.delta_class)?;
                writeln!(
                    f,
                    "  zero-sum brindled quadruples: {}",
                    info.delta.zero_sum_brindled_count
                )?;
                writeln!(f, "  plane parity: {:?}", info.delta.plane_parity)?;
                match info.no_transversals {
                    Some(true) => writeln!(f, "  criterion: no transversals")?,
                    Some(false) => writeln!(f, "  criterion: has transversals")?,
                    None => writeln!(f, "  criterion: odd arity, has transversals")?,
                }
            }
        }
        match &self.reducible {
            None => writeln!(f, "reducible: n/a")?,
            Some(None) => writeln!(f, "reducible: no")?,
            Some(Some(w)) => {
                let two = &w.factorization;
                writeln!(f, "reducible: yes")?;
                writeln!(f, "  parastrophe: {}", format_permutation(&w.parastrophe))?;
                writeln!(f, "  inner variables: {:?}", two.inner_vars())?;
                writeln!(f, "  outer variables: {:?}", two.outer_vars())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lhc_core::algebra::{gen_iterated_group, GroupKind};
    use lhc_core::semilinear::{lambda_z22, PlaneParity};

    #[test]
    fn klein_cube() {
        let c = classify(&gen_iterated_group(GroupKind::Z2x2, 3, 4).unwrap()).unwrap();
        let info = c.semilinear.as_ref().unwrap();
        assert_eq!(info.lambda, lambda_z22(3));
        assert_eq!(info.delta.plane_parity, PlaneParity::AllEven);
        assert!(matches!(c.reducible, Some(Some(_))));
        let text = c.to_string();
        assert!(
            text.contains("latin: ok") && text.contains("reducible: yes"),
            "{text}"
        );
    }
}
