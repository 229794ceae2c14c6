use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::{span_size, AlgebraElement, GroupAlgebra};
use crate::constructions::gamma_free_basis;
use crate::error::Result;
use crate::fields::Field;
use crate::linalg::{Matrix, Subspace};

use super::{fp_kernel, linear_subgroup, LinearSubgroup};

/// `Z(1 + Γ(A)) = 1 + {x in Γ(A) : xω = ωx for every ω in the free basis}`.
pub fn center_of_one_plus_gamma<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> LinearSubgroup<K> {
    let omegas: Vec<_> = gamma_free_basis(alg).into_iter().map(|x| x.element).collect();
    let basis = fp_kernel(alg, &alg.gamma_basis_fp(), |x| {
        omegas.iter().map(|w| &(x * w) - &(w * x)).collect()
    });
    linear_subgroup(alg, "Z", basis, alg.n() * (alg.l() + 1))
}

/// `C_{1+Γ(A)}(a) = 1 + {x in Γ(A) : xa = ax}`.
pub fn centralizer_of_a<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> LinearSubgroup<K> {
    let a = alg.a();
    let basis = fp_kernel(alg, &alg.gamma_basis_fp(), |x| vec![&(x * &a) - &(&a * x)]);
    linear_subgroup(alg, "C(a)", basis, alg.n() * alg.p())
}

/// Class sums of `D_{2p}`: `1`, `a^i + a^{-i}` for `1 <= i <= l`, and `Âb`.
pub fn class_sum_basis<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> Vec<AlgebraElement<K>> {
    let mut out = vec![alg.one()];
    for i in 1..=alg.l() as i64 {
        out.push(&alg.basis(i, 0) + &alg.basis(-i, 0));
    }
    out.push(&alg.a_hat() * &alg.b());
    out
}

/// Center of the algebra over `F`: the kernel of `x -> (xa - ax, xb - bx)`.
pub fn algebra_center<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> Subspace<K> {
    let f = alg.field();
    let (a, b) = (alg.a(), alg.b());
    let columns: Vec<Vec<K::Elem>> = (0..alg.dim())
        .map(|g| {
            let (i, j) = alg.group_element(g);
            let x = alg.basis(i as i64, j as i64);
            let mut col = (&(&x * &a) - &(&a * &x)).to_field_vector();
            col.extend((&(&x * &b) - &(&b * &x)).to_field_vector());
            col
        })
        .collect();
    let ker = Matrix::from_columns(f, 2 * alg.dim(), &columns)
        .expect("columns have length 4p")
        .kernel();
    // coordinates in the group basis are already coefficient vectors
    ker
}

/// Center of `1 + Γ(A)` by pairwise commutation over the enumerated group.
///
/// Needs `|1 + Γ(A)|^2 <= bound`.
pub fn exhaustive_group_center<K: Field>(
    alg: &Arc<GroupAlgebra<K>>,
    bound: u128,
) -> Result<BTreeSet<AlgebraElement<K>>> {
    let basis = alg.gamma_basis_fp();
    span_size(alg.p() as u128, 2 * basis.len(), bound)?;
    let one = alg.one();
    let mut group = Vec::new();
    alg.for_each_in_span(&basis, bound, |x| group.push(&one + x))?;
    Ok(group
        .iter()
        .filter(|x| group.iter().all(|y| x.commutes_with(y)))
        .cloned()
        .collect())
}

/// `{x y : x in xs, y in ys}`.
pub fn product_set<K: Field>(
    xs: &BTreeSet<AlgebraElement<K>>,
    ys: &BTreeSet<AlgebraElement<K>>,
) -> BTreeSet<AlgebraElement<K>> {
    xs.iter()
        .flat_map(|x| ys.iter().map(move |y| x * y))
        .collect()
}
