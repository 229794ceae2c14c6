use std::sync::Arc;

use crate::algebra::{span_prime, span_size, GroupAlgebra};
use crate::constructions::{d_block_basis, ldu_subspaces};
use crate::error::{Error, Result};
use crate::fields::Field;

use super::{center_of_one_plus_gamma, centralizer_of_a, closure, product_set, Finding};

/// Order accounting for `1 + Γ(A) = W C(a)` with `W = (1 + L)(1 + D)`.
///
/// Dimensions are over `F_p`, so each order is `p^dim`.
#[derive(Debug, Clone)]
pub struct GeneralProduct {
    pub l_dim: usize,
    pub d_dim: usize,
    pub w_dim: usize,
    pub c_dim: usize,
    pub z_dim: usize,
    pub gamma_dim: usize,
    /// `(L + D) ∩ K_C = K_Z`, i.e. `W ∩ C(a) = Z`.
    pub intersection_is_center: bool,
    /// Exhaustive results, present when the enumeration fits the bound.
    pub exhaustive: Option<Coverage>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coverage {
    pub w_order: usize,
    pub w_is_one_plus_l_plus_d: bool,
    pub c_order: usize,
    pub products: usize,
    pub group_order: u128,
}

impl GeneralProduct {
    pub fn order_equation_holds(&self) -> bool {
        self.w_dim + self.c_dim == self.gamma_dim + self.z_dim
    }

    pub fn findings(&self, n: usize, l: usize, p: usize) -> Vec<Finding> {
        let mut out = vec![
            Finding::new("general_product.w_exponent", 3 * n * l, self.w_dim),
            Finding::new("general_product.l_d_independent", self.l_dim + self.d_dim, self.w_dim),
            Finding::new("general_product.c_exponent", n * p, self.c_dim),
            Finding::new("general_product.z_exponent", n * (l + 1), self.z_dim),
            Finding::new("general_product.intersection_is_center", true, self.intersection_is_center),
            Finding::new(
                "general_product.order_equation",
                4 * n * l,
                (self.w_dim + self.c_dim) as i64 - self.z_dim as i64,
            ),
        ];
        if let Some(c) = &self.exhaustive {
            out.push(Finding::new(
                "general_product.exhaustive_w_set",
                true,
                c.w_is_one_plus_l_plus_d,
            ));
            out.push(Finding::new(
                "general_product.exhaustive_coverage",
                c.group_order,
                c.products,
            ));
        }
        out
    }
}

pub fn general_product_check<K: Field>(
    alg: &Arc<GroupAlgebra<K>>,
    bound: u128,
) -> Result<GeneralProduct> {
    let ldu = ldu_subspaces(alg);
    let l_fp = span_prime(alg, &alg.expand_over_prime_field(&ldu.lower_basis));
    let d_fp = span_prime(alg, &alg.expand_over_prime_field(&ldu.diagonal_basis));
    let w_space = l_fp.sum(&d_fp)?;
    let c = centralizer_of_a(alg);
    let z = center_of_one_plus_gamma(alg);
    let intersection_is_center = w_space.intersection(&c.kernel)?.equals(&z.kernel)?;

    let gamma_dim = alg.gamma_subspace_fp().dim();
    // the product table has |W||C(a)| entries
    let feasible = span_size(alg.p() as u128, gamma_dim, bound)
        .and_then(|order| span_size(alg.p() as u128, w_space.dim() + c.dim(), bound).map(|_| order));
    let exhaustive = match feasible {
        Ok(group_order) => Some(coverage(alg, &w_space, &c, bound, group_order)?),
        Err(Error::BoundExceeded { .. }) => None,
        Err(e) => return Err(e),
    };

    Ok(GeneralProduct {
        l_dim: l_fp.dim(),
        d_dim: d_fp.dim(),
        w_dim: w_space.dim(),
        c_dim: c.dim(),
        z_dim: z.dim(),
        gamma_dim,
        intersection_is_center,
        exhaustive,
    })
}

fn coverage<K: Field>(
    alg: &Arc<GroupAlgebra<K>>,
    w_space: &crate::linalg::Subspace<crate::fields::PrimeField>,
    c: &super::LinearSubgroup<K>,
    bound: u128,
    group_order: u128,
) -> Result<Coverage> {
    let one = alg.one();
    let ldu = ldu_subspaces(alg);
    let mut gens: Vec<_> = alg
        .expand_over_prime_field(&ldu.lower_basis)
        .iter()
        .map(|x| &one + x)
        .collect();
    gens.extend(d_block_basis(alg).into_iter().map(|d| d.element));
    let w = closure("W", &gens, bound)?.elements.expect("closure enumerates");
    let w_is_one_plus_l_plus_d = w.len() as u128 == span_size(alg.p() as u128, w_space.dim(), bound)?
        && w
            .iter()
            .all(|x| w_space.contains(&(x - &one).to_prime_vector()).unwrap_or(false));

    let mut c_set = std::collections::BTreeSet::new();
    alg.for_each_in_span(&c.basis, bound, |x| {
        c_set.insert(&one + x);
    })?;
    let products = product_set(&w, &c_set);
    let inside = products.iter().all(|v| (v - &one).in_gamma_a());
    Ok(Coverage {
        w_order: w.len(),
        w_is_one_plus_l_plus_d,
        c_order: c_set.len(),
        products: if inside { products.len() } else { 0 },
        group_order,
    })
}
