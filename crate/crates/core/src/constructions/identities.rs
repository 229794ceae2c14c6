//! Closed-form identities among the ω-elements, each paired with the direct
//! product it describes. A check holds when both sides agree coefficientwise.

use std::sync::Arc;

use crate::algebra::{AlgebraElement, GroupAlgebra};
use crate::fields::Field;

use super::{
    binomial_in, change_of_basis, combine, gamma_free_basis, omega_any, omega_prime_any,
    rot_diff_even_pow,
};

#[derive(Debug, Clone)]
pub struct IdentityCheck<K: Field> {
    pub name: String,
    pub lhs: AlgebraElement<K>,
    pub rhs: AlgebraElement<K>,
}

impl<K: Field> IdentityCheck<K> {
    fn new(name: String, lhs: AlgebraElement<K>, rhs: AlgebraElement<K>) -> Self {
        Self { name, lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

struct Omegas<K: Field> {
    alg: Arc<GroupAlgebra<K>>,
}

impl<K: Field> Omegas<K> {
    fn w(&self, m: usize) -> AlgebraElement<K> {
        omega_any(&self.alg, m as i64)
    }

    fn wp(&self, m: usize) -> AlgebraElement<K> {
        omega_prime_any(&self.alg, m as i64)
    }

    /// `ω_m ω'_m`
    fn ww(&self, m: usize) -> AlgebraElement<K> {
        &self.w(m) * &self.wp(m)
    }

    /// `ω'_m ω_m`
    fn wpw(&self, m: usize) -> AlgebraElement<K> {
        &self.wp(m) * &self.w(m)
    }

    /// `c4 ω_x + c4' ω_y - 8 ω_1`
    fn lin(&self, c_x: i64, x: usize, c_y: i64, y: usize) -> AlgebraElement<K> {
        &(&self.w(x).scale_int(c_x) + &self.w(y).scale_int(c_y)) - &self.w(1).scale_int(8)
    }
}

/// `ω_iω_j = 0`, `ω'_iω'_j = 0`, and
/// `ω_iω'_i = 2(a^{2i} + a^{-2i} - 2)(1 - b)`, `ω'_iω_i = 2(a^{2i} + a^{-2i} - 2)(1 + b)`.
pub fn omega_product_checks<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> Vec<IdentityCheck<K>> {
    let o = Omegas { alg: alg.clone() };
    let l = alg.l();
    let mut out = Vec::new();
    for i in 1..=l {
        for j in 1..=l {
            out.push(IdentityCheck::new(
                format!("ω_{i}ω_{j} = 0"),
                &o.w(i) * &o.w(j),
                alg.zero(),
            ));
            out.push(IdentityCheck::new(
                format!("ω'_{i}ω'_{j} = 0"),
                &o.wp(i) * &o.wp(j),
                alg.zero(),
            ));
        }
        let core = &(&alg.basis(2 * i as i64, 0) + &alg.basis(-2 * i as i64, 0)) - &alg.int(2);
        let core = core.scale_int(2);
        out.push(IdentityCheck::new(
            format!("ω_{i}ω'_{i} = 2(a^{{2i}}+a^{{-2i}}-2)(1-b)"),
            o.ww(i),
            &core * &(&alg.one() - &alg.b()),
        ));
        out.push(IdentityCheck::new(
            format!("ω'_{i}ω_{i} = 2(a^{{2i}}+a^{{-2i}}-2)(1+b)"),
            o.wpw(i),
            &core * &(&alg.one() + &alg.b()),
        ));
    }
    out
}

/// Reconstruction of `a^t - 1` and `(a^t - 1) b` from [`change_of_basis`], all `1 <= t < p`.
pub fn change_of_basis_checks<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> Vec<IdentityCheck<K>> {
    let basis: Vec<_> = gamma_free_basis(alg).into_iter().map(|x| x.element).collect();
    let mut out = Vec::new();
    for t in 1..alg.p() {
        let cob = change_of_basis(alg, t).expect("t in range");
        let target = &alg.basis(t as i64, 0) - &alg.one();
        out.push(IdentityCheck::new(
            format!("a^{t} - 1"),
            target.clone(),
            combine(alg, &cob.plain, &basis),
        ));
        out.push(IdentityCheck::new(
            format!("(a^{t} - 1)b"),
            &target * &alg.b(),
            combine(alg, &cob.twisted, &basis),
        ));
    }
    out
}

/// The product identities used to compute the center of `Γ(A)`.
///
/// Indices outside `1..=l` are read through `ω_m = (a^m - a^{-m})(1 + b)`,
/// which gives `ω_0 = 0`; this only matters for `p = 3`.
pub fn center_identity_checks<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> Vec<IdentityCheck<K>> {
    let o = Omegas { alg: alg.clone() };
    let l = alg.l();
    let mut out = Vec::new();

    for i in 1..=l {
        let lhs = &o.w(1) * &o.wp(i);
        let lhs_rev = &o.wp(i) * &o.w(1);
        if i % 2 == 1 {
            let k = (i - 1) / 2;
            out.push(IdentityCheck::new(
                format!("ω_1ω'_{i} = ω_{}ω'_{} - ω_{k}ω'_{k}", k + 1, k + 1),
                lhs,
                &o.ww(k + 1) - &o.ww(k),
            ));
            out.push(IdentityCheck::new(
                format!("ω'_{i}ω_1 = ω'_{}ω_{} - ω'_{k}ω_{k}", k + 1, k + 1),
                lhs_rev,
                &o.wpw(k + 1) - &o.wpw(k),
            ));
        } else {
            let k = i / 2;
            let (x, y) = (l - k, l - (k - 1));
            out.push(IdentityCheck::new(
                format!("ω_1ω'_{i} = ω_{x}ω'_{x} - ω_{y}ω'_{y}"),
                lhs,
                &o.ww(x) - &o.ww(y),
            ));
            out.push(IdentityCheck::new(
                format!("ω'_{i}ω_1 = ω'_{x}ω_{x} - ω'_{y}ω_{y}"),
                lhs_rev,
                &o.wpw(x) - &o.wpw(y),
            ));
        }
    }

    let triple = |j: usize| &(&o.w(1) * &o.wp(j)) * &o.w(j);
    let mut push = |j: usize, rhs: AlgebraElement<K>, form: &str| {
        out.push(IdentityCheck::new(
            format!("ω_1ω'_{j}ω_{j} = {form}"),
            triple(j),
            rhs,
        ));
    };
    if l % 2 == 1 {
        for j in (1..=l).filter(|&j| 2 * j < l) {
            push(j, o.lin(4, 2 * j + 1, -4, 2 * j - 1), "4ω_{2j+1} - 4ω_{2j-1} - 8ω_1");
        }
        for j in (1..l).filter(|&j| 2 * j >= l + 3) {
            push(j, o.lin(-4, 2 * l - 2 * j, 4, 2 * l - 2 * j + 2), "-4ω_{2l-2j} + 4ω_{2l-2j+2} - 8ω_1");
        }
        let mid = l.div_ceil(2);
        push(mid, o.lin(-4, l - 1, -4, l), "-4ω_{l-1} - 4ω_l - 8ω_1");
    } else {
        for j in (1..=l).filter(|&j| 2 * j <= l - 2) {
            push(j, o.lin(4, 2 * j + 1, -4, 2 * j - 1), "4ω_{2j+1} - 4ω_{2j-1} - 8ω_1");
        }
        for j in (1..l).filter(|&j| 2 * j >= l + 2) {
            push(j, o.lin(-4, 2 * l - 2 * j, 4, 2 * l - 2 * j + 2), "-4ω_{2l-2j} + 4ω_{2l-2j+2} - 8ω_1");
        }
        let mid = l / 2;
        push(mid, o.lin(-4, l, -4, l - 1), "-4ω_l - 4ω_{l-1} - 8ω_1");
    }
    push(l, o.lin(4, 2, 0, 1), "4ω_2 - 8ω_1");
    out
}

/// `(a - a^{-1})^{2k}(1 ∓ b) = sum_{j<k} (-1)^j (1/2) C(2k, j) ω_{k-j}ω'_{k-j}`
/// (resp. `ω'_{k-j}ω_{k-j}` for `1 + b`), all `1 <= k <= l`.
pub fn d_block_expansion_checks<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> Vec<IdentityCheck<K>> {
    let o = Omegas { alg: alg.clone() };
    let f = alg.field();
    let half = f.inv(f.from_int(2)).expect("p is odd");
    let mut out = Vec::new();
    for k in 1..=alg.l() {
        let power = rot_diff_even_pow(alg, k);
        let (mut minus, mut plus) = (alg.zero(), alg.zero());
        for j in 0..k {
            let mut c = f.mul(half, binomial_in(f, 2 * k as u64, j as u64));
            if j % 2 == 1 {
                c = f.neg(c);
            }
            minus = &minus + &o.ww(k - j).scale(c);
            plus = &plus + &o.wpw(k - j).scale(c);
        }
        out.push(IdentityCheck::new(
            format!("(a-a^-1)^{}(1-b) expansion", 2 * k),
            &power * &(&alg.one() - &alg.b()),
            minus,
        ));
        out.push(IdentityCheck::new(
            format!("(a-a^-1)^{}(1+b) expansion", 2 * k),
            &power * &(&alg.one() + &alg.b()),
            plus,
        ));
    }
    out
}
