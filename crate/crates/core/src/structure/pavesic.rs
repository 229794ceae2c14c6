use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::{AlgebraElement, GroupAlgebra};
use crate::constructions::{d_block_basis, ldu_subspaces, IdempotentPair, LduSubspaces};
use crate::error::{Error, Result};
use crate::fields::Field;

/// `v = (1 + lower)(1 + diagonal)(1 + upper)` with parts in `L`, `D`, `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationTriple<K: Field> {
    pub lower: AlgebraElement<K>,
    pub diagonal: AlgebraElement<K>,
    pub upper: AlgebraElement<K>,
}

impl<K: Field> PartialOrd for FactorizationTriple<K> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<K: Field> Ord for FactorizationTriple<K> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.lower, &self.diagonal, &self.upper).cmp(&(&other.lower, &other.diagonal, &other.upper))
    }
}

impl<K: Field> FactorizationTriple<K> {
    pub fn reconstruct(&self) -> AlgebraElement<K> {
        let one = self.lower.algebra().one();
        &(&(&one + &self.lower) * &(&one + &self.diagonal)) * &(&one + &self.upper)
    }

    pub fn in_blocks(&self, ldu: &LduSubspaces<K>) -> bool {
        let inside = |s: &crate::linalg::Subspace<K>, x: &AlgebraElement<K>| {
            s.contains(&x.to_field_vector()).expect("ambient 2p")
        };
        inside(&ldu.lower, &self.lower)
            && inside(&ldu.diagonal, &self.diagonal)
            && inside(&ldu.upper, &self.upper)
    }
}

/// Factors `v` in `1 + Γ(A)` through the idempotents `e1 = (1+b)/2`, `e2 = (1-b)/2`.
///
/// With `m = v - 1` and `m_ij = e_i m e_j`, the corner `e2 + m22` is inverted
/// in `e2 R e2` by the series `e2 - m22 + m22^2 - ...`; then
/// `upper = C m21`, `lower = m12 C`, `diagonal = m11 - m12 C m21 + m22`.
pub fn pavesic_factorize<K: Field>(v: &AlgebraElement<K>) -> Result<FactorizationTriple<K>> {
    let alg = v.algebra();
    let m = v - &alg.one();
    if !m.in_gamma_a() {
        return Err(Error::Precondition(format!("{v} is not in 1 + Γ(A)")));
    }
    let e = IdempotentPair::new(alg);
    let [[m11, m12], [m21, m22]] = e.peirce(&m);

    let mut corner_inv = e.e2.clone();
    let neg = -&m22;
    let mut term = e.e2.clone();
    loop {
        term = &term * &neg;
        if term.is_zero() {
            break;
        }
        corner_inv = &corner_inv + &term;
    }

    let upper = &corner_inv * &m21;
    let lower = &m12 * &corner_inv;
    let d1 = &m11 - &(&lower * &m21);
    Ok(FactorizationTriple {
        lower,
        diagonal: &d1 + &m22,
        upper,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationSweep {
    pub count: u128,
    pub exact: u128,
    pub in_blocks: u128,
    pub distinct: usize,
}

/// Factors every element of `1 + Γ(A)`.
pub fn factorization_sweep<K: Field>(
    alg: &Arc<GroupAlgebra<K>>,
    bound: u128,
) -> Result<FactorizationSweep> {
    let ldu = ldu_subspaces(alg);
    let one = alg.one();
    let (mut exact, mut in_blocks) = (0u128, 0u128);
    let mut triples = BTreeSet::new();
    let mut failure = None;
    let count = alg.for_each_in_span(&alg.gamma_basis_fp(), bound, |x| {
        let v = &one + x;
        match pavesic_factorize(&v) {
            Ok(t) => {
                exact += u128::from(t.reconstruct() == v);
                in_blocks += u128::from(t.in_blocks(&ldu));
                triples.insert(t);
            }
            Err(err) => failure = Some(err),
        }
    })?;
    if let Some(err) = failure {
        return Err(err);
    }
    Ok(FactorizationSweep {
        count,
        exact,
        in_blocks,
        distinct: triples.len(),
    })
}

/// `d (1 + l) d^{-1} - 1` lies in `L` for every `d` in the `1 + D` basis and
/// every `l` in an `F_p`-basis of `L`.
pub fn d_normalizes_l<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> Result<bool> {
    let ldu = ldu_subspaces(alg);
    let one = alg.one();
    for d in d_block_basis(alg) {
        let d_inv = d.element.invert_unit()?;
        for l in alg.expand_over_prime_field(&ldu.lower_basis) {
            let conj = &(&(&d.element * &(&one + &l)) * &d_inv) - &one;
            if !ldu.lower.contains(&conj.to_field_vector())? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
