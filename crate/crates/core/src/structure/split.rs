use std::sync::Arc;

use rand::Rng;

use crate::algebra::{AlgebraElement, GroupAlgebra};
use crate::error::Result;
use crate::fields::Field;

use super::Finding;

/// Rejection sampling: uniform elements until one inverts.
pub fn random_unit<K: Field, R: Rng + ?Sized>(
    alg: &Arc<GroupAlgebra<K>>,
    rng: &mut R,
) -> (AlgebraElement<K>, AlgebraElement<K>) {
    loop {
        let u = alg.random(rng);
        if let Ok(inv) = u.invert_unit() {
            return (u, inv);
        }
    }
}

/// Tallies for `U(FD_{2p}) = (1 + Γ(A)) ⋊ U(FC_2)` over sampled units.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SplitSummary {
    pub samples: usize,
    pub inverse_ok: usize,
    pub theta_unit: usize,
    pub kernel_part_ok: usize,
    pub section_ok: usize,
}

impl SplitSummary {
    pub fn all_pass(&self) -> bool {
        [self.inverse_ok, self.theta_unit, self.kernel_part_ok, self.section_ok]
            .iter()
            .all(|&c| c == self.samples)
    }

    pub fn findings(&self) -> Vec<Finding> {
        let s = self.samples;
        vec![
            Finding::new("global_split.inverse", s, self.inverse_ok),
            Finding::new("global_split.theta_unit", s, self.theta_unit),
            Finding::new("global_split.kernel_part", s, self.kernel_part_ok),
            Finding::new("global_split.section", s, self.section_ok),
        ]
    }
}

/// For each sampled unit `u`: `theta(u)` is a unit of `FC_2`,
/// `u psi(theta(u))^{-1}` lies in `1 + Γ(A)`, and `theta(psi(theta(u))) = theta(u)`.
pub fn verify_global_split<K: Field, R: Rng + ?Sized>(
    alg: &Arc<GroupAlgebra<K>>,
    rng: &mut R,
    samples: usize,
) -> Result<SplitSummary> {
    let mut out = SplitSummary {
        samples,
        ..Default::default()
    };
    for _ in 0..samples {
        let (u, inv) = random_unit(alg, rng);
        out.inverse_ok += usize::from((&u * &inv).is_one() && (&inv * &u).is_one());
        let q = u.theta();
        out.theta_unit += usize::from(q.is_unit());
        let s = q.psi(alg)?;
        out.section_ok += usize::from(s.theta() == q);
        let w = &u * &s.invert_unit()?;
        out.kernel_part_ok += usize::from((&w - &alg.one()).in_gamma_a());
    }
    Ok(out)
}

/// Number of units of the algebra by exhaustive rank tests.
pub fn count_units<K: Field>(alg: &Arc<GroupAlgebra<K>>, bound: u128) -> Result<u128> {
    let mut count = 0u128;
    alg.for_each_in_span(&alg.algebra_basis_fp(), bound, |x| {
        count += u128::from(x.is_unit());
    })?;
    Ok(count)
}
