//! Structural facts about the unit group of `FD_{2p}`, checked by exhaustive
//! enumeration at small scale and by rank computations everywhere else.
//!
//! Every subgroup of `1 + Γ(A)` met here is either enumerated by
//! [`closure`] or described as `1 + K` for an `F_p`-subspace `K` of `Γ(A)`
//! obtained as the kernel of a commutator map.

mod center;
mod pavesic;
mod product;
mod split;
mod subgroup;
mod unitary;

use std::sync::Arc;

use num_bigint::BigUint;

use crate::algebra::{AlgebraElement, GroupAlgebra};
use crate::fields::{Field, PrimeField};
use crate::linalg::{Matrix, Subspace};

pub use center::{
    algebra_center, centralizer_of_a, center_of_one_plus_gamma, class_sum_basis,
    exhaustive_group_center, product_set,
};
pub use pavesic::{
    d_normalizes_l, factorization_sweep, pavesic_factorize, FactorizationSweep,
    FactorizationTriple,
};
pub use product::{general_product_check, GeneralProduct};
pub use split::{count_units, random_unit, verify_global_split, SplitSummary};
pub use subgroup::{closure, SubgroupHandle};
pub use unitary::{
    enumerate_unitary_in_one_plus_gamma, quotient_unitary_units, scan_unitary_units,
    unitary_decompose, UnitaryDecomposition,
};

/// Default bound for enumerating subgroups of `1 + Γ(A)`.
pub const GROUP_BOUND: u128 = 1_000_000;
/// Default bound for scans over the whole algebra.
pub const SCAN_BOUND: u128 = 10_000_000;

/// One verified statement: what was expected, what was observed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub id: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Finding {
    pub fn new(id: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Self {
            id: id.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }
}

/// A subgroup `1 + K` of `1 + Γ(A)` given by an `F_p`-subspace `K`.
#[derive(Debug, Clone)]
pub struct LinearSubgroup<K: Field> {
    pub handle: SubgroupHandle<K>,
    /// `K` inside `F_p^{2pn}`.
    pub kernel: Subspace<PrimeField>,
    /// An `F_p`-basis of `K` as algebra elements.
    pub basis: Vec<AlgebraElement<K>>,
}

impl<K: Field> LinearSubgroup<K> {
    pub fn dim(&self) -> usize {
        self.kernel.dim()
    }

    pub fn order(&self) -> BigUint {
        p_pow(self.kernel.field().p() as usize, self.dim())
    }

    pub fn contains(&self, v: &AlgebraElement<K>) -> bool {
        let x = v - &v.algebra().one();
        self.kernel
            .contains(&x.to_prime_vector())
            .expect("same ambient space")
    }
}

/// `p^e` as a big integer.
pub fn p_pow(p: usize, e: usize) -> BigUint {
    BigUint::from(p).pow(e as u32)
}

/// Kernel over `F_p` of the linear map sending `domain[k]` to `images(domain[k])`,
/// returned as combinations of `domain`.
pub(crate) fn fp_kernel<K: Field>(
    alg: &Arc<GroupAlgebra<K>>,
    domain: &[AlgebraElement<K>],
    images: impl Fn(&AlgebraElement<K>) -> Vec<AlgebraElement<K>>,
) -> Vec<AlgebraElement<K>> {
    let fp = alg.prime_field();
    let columns: Vec<Vec<u32>> = domain
        .iter()
        .map(|x| images(x).iter().flat_map(|y| y.to_prime_vector()).collect())
        .collect();
    let rows = columns.first().map_or(0, Vec::len);
    let ker = Matrix::from_columns(fp, rows, &columns)
        .expect("images have equal length")
        .kernel();
    ker.basis_vectors()
        .into_iter()
        .map(|c| combine_fp(alg, &c, domain))
        .collect()
}

/// `sum c_k x_k` with `F_p` coefficients.
pub(crate) fn combine_fp<K: Field>(
    alg: &Arc<GroupAlgebra<K>>,
    coeffs: &[u32],
    elems: &[AlgebraElement<K>],
) -> AlgebraElement<K> {
    let f = alg.field();
    coeffs
        .iter()
        .zip(elems)
        .filter(|(&c, _)| c != 0)
        .fold(alg.zero(), |acc, (&c, x)| &acc + &x.scale(f.from_int(c as i64)))
}

pub(crate) fn linear_subgroup<K: Field>(
    alg: &Arc<GroupAlgebra<K>>,
    label: &str,
    basis: Vec<AlgebraElement<K>>,
    predicted_dim: usize,
) -> LinearSubgroup<K> {
    let kernel = crate::algebra::span_prime(alg, &basis);
    let one = alg.one();
    let handle = SubgroupHandle {
        label: label.to_string(),
        generators: basis.iter().map(|x| &one + x).collect(),
        elements: None,
        predicted_order: Some(p_pow(alg.p(), predicted_dim)),
    };
    LinearSubgroup {
        handle,
        kernel,
        basis,
    }
}

#[cfg(test)]
mod tests;
