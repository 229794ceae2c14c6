//! Named element families of `FD_{2p}`.
//!
//! Index conventions: `omega(i)` and `omega_prime(i)` take `1 <= i <= l`;
//! the `u_{i,k}`-derived families take `0 <= i <= n-1`, `1 <= k <= p-1`.
//! Families are always listed in lexicographic `(k, i)` order.

mod identities;
mod log;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::algebra::{span_field, AlgebraElement, GroupAlgebra};
use crate::error::{check_index, Error, Result};
use crate::fields::Field;
use crate::linalg::Subspace;

pub use identities::{
    change_of_basis_checks, d_block_expansion_checks, omega_product_checks, center_identity_checks, IdentityCheck,
};
pub use log::{log_family, log_rank_fp, truncated_exp, truncated_log};

/// An element tagged with the indices it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeled<K: Field> {
    pub name: String,
    pub i: usize,
    pub k: usize,
    pub element: AlgebraElement<K>,
}

/// `a^m - a^{-m}` for any integer `m`; zero when `p | m`.
pub fn rot_diff<K: Field>(alg: &Arc<GroupAlgebra<K>>, m: i64) -> AlgebraElement<K> {
    &alg.basis(m, 0) - &alg.basis(-m, 0)
}

fn one_plus_b<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> AlgebraElement<K> {
    &alg.one() + &alg.b()
}

fn one_minus_b<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> AlgebraElement<K> {
    &alg.one() - &alg.b()
}

/// `(a^m - a^{-m})(1 + b)` for any integer `m`. Agrees with [`omega`] on `1..=l`
/// and satisfies `omega_any(p - m) = -omega_any(m)`, `omega_any(0) = 0`.
pub fn omega_any<K: Field>(alg: &Arc<GroupAlgebra<K>>, m: i64) -> AlgebraElement<K> {
    &rot_diff(alg, m) * &one_plus_b(alg)
}

/// `(a^m - a^{-m})(1 - b)` for any integer `m`.
pub fn omega_prime_any<K: Field>(alg: &Arc<GroupAlgebra<K>>, m: i64) -> AlgebraElement<K> {
    &rot_diff(alg, m) * &one_minus_b(alg)
}

/// `ω_i = (a^i - a^{-i})(1 + b)`, `1 <= i <= l`.
pub fn omega<K: Field>(alg: &Arc<GroupAlgebra<K>>, i: usize) -> Result<AlgebraElement<K>> {
    check_index("i", i, 1, alg.l())?;
    Ok(omega_any(alg, i as i64))
}

/// `ω'_i = (a^i - a^{-i})(1 - b)`, `1 <= i <= l`.
pub fn omega_prime<K: Field>(alg: &Arc<GroupAlgebra<K>>, i: usize) -> Result<AlgebraElement<K>> {
    check_index("i", i, 1, alg.l())?;
    Ok(omega_prime_any(alg, i as i64))
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

/// `C(n, k)` computed exactly, then mapped into the field.
pub fn binomial_in<K: Field>(field: &K, n: u64, k: u64) -> K::Elem {
    let r = binomial(n, k) % BigUint::from(field.characteristic());
    let r: u64 = r.try_into().expect("residue fits in u64");
    field.from_int(r as i64)
}

/// `(a - 1)^k`, expanded binomially.
pub fn a_minus_one_pow<K: Field>(alg: &Arc<GroupAlgebra<K>>, k: usize) -> AlgebraElement<K> {
    let f = alg.field();
    let mut out = alg.zero();
    for j in 0..=k {
        let c = binomial_in(f, k as u64, j as u64);
        let c = if (k - j) % 2 == 1 { f.neg(c) } else { c };
        out = &out + &alg.basis(j as i64, 0).scale(c);
    }
    out
}

/// `u_{i,k} = 1 + alpha^i (a - 1)^k`.
pub fn u_elem<K: Field>(alg: &Arc<GroupAlgebra<K>>, i: usize, k: usize) -> Result<AlgebraElement<K>> {
    check_index("i", i, 0, alg.n() - 1)?;
    check_index("k", k, 1, alg.p() - 1)?;
    let alpha_i = alg.field().alpha_pow(i);
    Ok(&alg.one() + &a_minus_one_pow(alg, k).scale(alpha_i))
}

fn u_family<K: Field>(
    alg: &Arc<GroupAlgebra<K>>,
    parity: usize,
    name: &str,
    build: impl Fn(&AlgebraElement<K>) -> AlgebraElement<K>,
) -> Vec<Labeled<K>> {
    let mut out = Vec::new();
    for k in (1..alg.p()).filter(|k| k % 2 == parity) {
        for i in 0..alg.n() {
            let u = u_elem(alg, i, k).expect("indices in range");
            out.push(Labeled {
                name: format!("{name}_{{{i},{k}}}"),
                i,
                k,
                element: build(&u),
            });
        }
    }
    out
}

/// `z_{i,k} = u_{i,k}^* u_{i,k}^{-1}` for odd `k`; `n l` unitary units.
pub fn unitary_basis<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> Vec<Labeled<K>> {
    u_family(alg, 1, "z", |u| {
        let inv = u.invert_unit().expect("u_{i,k} lies in 1 + ω(FA)");
        &u.involution() * &inv
    })
}

/// `s_{i,k} = u_{i,k}^* u_{i,k}` for even `k`; `n l` symmetric units.
pub fn symmetric_basis<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> Vec<Labeled<K>> {
    u_family(alg, 0, "s", |u| &u.involution() * u)
}

/// The symmetric basis followed by `1 + alpha^i Â b`, `0 <= i < n`.
pub fn center_basis<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> Vec<Labeled<K>> {
    let mut out = symmetric_basis(alg);
    let a_hat_b = &alg.a_hat() * &alg.b();
    for i in 0..alg.n() {
        out.push(Labeled {
            name: format!("1+α^{i}Âb"),
            i,
            k: 0,
            element: &alg.one() + &a_hat_b.scale(alg.field().alpha_pow(i)),
        });
    }
    out
}

/// `(a - a^{-1})^{2k}`.
pub fn rot_diff_even_pow<K: Field>(alg: &Arc<GroupAlgebra<K>>, k: usize) -> AlgebraElement<K> {
    rot_diff(alg, 1).pow(2 * k as u64)
}

/// `1 + alpha^i (a - a^{-1})^{2k}(1 - b)` then the `(1 + b)` twins, `1 <= k <= l`.
pub fn d_block_basis<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> Vec<Labeled<K>> {
    let mut out = Vec::new();
    for (tag, side) in [("-", one_minus_b(alg)), ("+", one_plus_b(alg))] {
        for k in 1..=alg.l() {
            let core = &rot_diff_even_pow(alg, k) * &side;
            for i in 0..alg.n() {
                out.push(Labeled {
                    name: format!("d{tag}_{{{i},{k}}}"),
                    i,
                    k,
                    element: &alg.one() + &core.scale(alg.field().alpha_pow(i)),
                });
            }
        }
    }
    out
}

/// `ω_1..ω_l, ω'_1..ω'_l, ω_1ω'_1..ω_lω'_l, ω'_1ω_1..ω'_lω_l`; an `F`-basis of `Γ(A)`.
pub fn gamma_free_basis<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> Vec<Labeled<K>> {
    let l = alg.l();
    let w: Vec<_> = (1..=l).map(|i| omega_any(alg, i as i64)).collect();
    let wp: Vec<_> = (1..=l).map(|i| omega_prime_any(alg, i as i64)).collect();
    let mut out = Vec::with_capacity(4 * l);
    let mut push = |name: &str, i: usize, element: AlgebraElement<K>| {
        out.push(Labeled {
            name: format!("{name}_{i}"),
            i,
            k: 0,
            element,
        })
    };
    for i in 0..l {
        push("ω", i + 1, w[i].clone());
    }
    for i in 0..l {
        push("ω'", i + 1, wp[i].clone());
    }
    for i in 0..l {
        push("ωω'", i + 1, &w[i] * &wp[i]);
    }
    for i in 0..l {
        push("ω'ω", i + 1, &wp[i] * &w[i]);
    }
    out
}

/// `ω_1..ω_l` followed by `ω'_1..ω'_l`.
pub fn omega_family<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> Vec<Labeled<K>> {
    gamma_free_basis(alg).into_iter().take(2 * alg.l()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Omega,
    Unitary,
    Symmetric,
    Center,
    DBlock,
    Gamma,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Omega,
        Family::Unitary,
        Family::Symmetric,
        Family::Center,
        Family::DBlock,
        Family::Gamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Omega => "omega",
            Family::Unitary => "unitary",
            Family::Symmetric => "symmetric",
            Family::Center => "center",
            Family::DBlock => "d_block",
            Family::Gamma => "gamma",
        }
    }

    pub fn build<K: Field>(self, alg: &Arc<GroupAlgebra<K>>) -> Vec<Labeled<K>> {
        match self {
            Family::Omega => omega_family(alg),
            Family::Unitary => unitary_basis(alg),
            Family::Symmetric => symmetric_basis(alg),
            Family::Center => center_basis(alg),
            Family::DBlock => d_block_basis(alg),
            Family::Gamma => gamma_free_basis(alg),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// Every named family, built once.
#[derive(Debug, Clone)]
pub struct BasisCatalog<K: Field> {
    pub omega: Vec<AlgebraElement<K>>,
    pub omega_prime: Vec<AlgebraElement<K>>,
    pub unitary: Vec<Labeled<K>>,
    pub symmetric: Vec<Labeled<K>>,
    pub center: Vec<Labeled<K>>,
    pub d_block: Vec<Labeled<K>>,
    pub gamma_free_basis: Vec<Labeled<K>>,
}

impl<K: Field> BasisCatalog<K> {
    pub fn new(alg: &Arc<GroupAlgebra<K>>) -> Self {
        let l = alg.l();
        Self {
            omega: (1..=l).map(|i| omega_any(alg, i as i64)).collect(),
            omega_prime: (1..=l).map(|i| omega_prime_any(alg, i as i64)).collect(),
            unitary: unitary_basis(alg),
            symmetric: symmetric_basis(alg),
            center: center_basis(alg),
            d_block: d_block_basis(alg),
            gamma_free_basis: gamma_free_basis(alg),
        }
    }
}

/// `e_1 = (1 + b)/2`, `e_2 = (1 - b)/2`.
#[derive(Debug, Clone)]
pub struct IdempotentPair<K: Field> {
    pub e1: AlgebraElement<K>,
    pub e2: AlgebraElement<K>,
}

impl<K: Field> IdempotentPair<K> {
    pub fn new(alg: &Arc<GroupAlgebra<K>>) -> Self {
        let half = alg.field().inv(alg.field().from_int(2)).expect("p is odd");
        Self {
            e1: one_plus_b(alg).scale(half),
            e2: one_minus_b(alg).scale(half),
        }
    }

    pub fn get(&self, i: usize) -> &AlgebraElement<K> {
        match i {
            0 => &self.e1,
            _ => &self.e2,
        }
    }

    /// `[[e1 m e1, e1 m e2], [e2 m e1, e2 m e2]]`.
    pub fn peirce(&self, m: &AlgebraElement<K>) -> [[AlgebraElement<K>; 2]; 2] {
        let left = [&self.e1 * m, &self.e2 * m];
        [
            [&left[0] * &self.e1, &left[0] * &self.e2],
            [&left[1] * &self.e1, &left[1] * &self.e2],
        ]
    }
}

/// Coordinates of `a^t - 1` and `(a^t - 1) b` over [`gamma_free_basis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChangeOfBasis<K: Field> {
    pub plain: Vec<K::Elem>,
    pub twisted: Vec<K::Elem>,
}

/// Closed-form coefficients expressing `a^t - 1` and `(a^t - 1) b` through
/// `ω_j ± ω'_j` (weight 1/4) and `ω_iω'_i ± ω'_iω_i` (weight 1/8).
///
/// Writing `t = 2i` (t even) or `t = p - 2i` (t odd), `j = 2i` when `2i <= l`
/// and `j = p - 2i` otherwise; the sign of the 1/4 terms is `+` exactly when
/// `t` is even and `2i <= l`, or `t` is odd and `2i > l`.
pub fn change_of_basis<K: Field>(alg: &Arc<GroupAlgebra<K>>, t: usize) -> Result<ChangeOfBasis<K>> {
    let p = alg.p();
    let l = alg.l();
    check_index("t", t, 1, p - 1)?;
    let f = alg.field();
    let even = t % 2 == 0;
    let i = if even { t / 2 } else { (p - t) / 2 };
    let low = 2 * i <= l;
    let j = if low { 2 * i } else { p - 2 * i };
    let quarter = f.inv(f.from_int(4)).expect("p is odd");
    let eighth = f.inv(f.from_int(8)).expect("p is odd");
    let q = if even == low { quarter } else { f.neg(quarter) };

    let mut plain = vec![f.zero(); 4 * l];
    let mut twisted = vec![f.zero(); 4 * l];
    let (w, wp, ww, ww_rev) = (j - 1, l + j - 1, 2 * l + i - 1, 3 * l + i - 1);
    plain[w] = q;
    plain[wp] = q;
    plain[ww] = eighth;
    plain[ww_rev] = eighth;
    twisted[w] = q;
    twisted[wp] = f.neg(q);
    twisted[ww] = f.neg(eighth);
    twisted[ww_rev] = eighth;
    Ok(ChangeOfBasis { plain, twisted })
}

/// `sum c_j x_j`.
pub fn combine<K: Field>(
    alg: &Arc<GroupAlgebra<K>>,
    coeffs: &[K::Elem],
    elems: &[AlgebraElement<K>],
) -> AlgebraElement<K> {
    coeffs
        .iter()
        .zip(elems)
        .fold(alg.zero(), |acc, (&c, x)| &acc + &x.scale(c))
}

/// `L = span ω'_i`, `D = span {ω_iω'_i, ω'_iω_i}`, `U = span ω_i` as `F`-subspaces.
#[derive(Debug, Clone)]
pub struct LduSubspaces<K: Field> {
    pub lower: Subspace<K>,
    pub diagonal: Subspace<K>,
    pub upper: Subspace<K>,
    pub lower_basis: Vec<AlgebraElement<K>>,
    pub diagonal_basis: Vec<AlgebraElement<K>>,
    pub upper_basis: Vec<AlgebraElement<K>>,
}

pub fn ldu_subspaces<K: Field>(alg: &Arc<GroupAlgebra<K>>) -> LduSubspaces<K> {
    let l = alg.l();
    let basis: Vec<_> = gamma_free_basis(alg).into_iter().map(|x| x.element).collect();
    let upper_basis = basis[..l].to_vec();
    let lower_basis = basis[l..2 * l].to_vec();
    let diagonal_basis = basis[2 * l..].to_vec();
    LduSubspaces {
        lower: span_field(alg, &lower_basis),
        diagonal: span_field(alg, &diagonal_basis),
        upper: span_field(alg, &upper_basis),
        lower_basis,
        diagonal_basis,
        upper_basis,
    }
}
