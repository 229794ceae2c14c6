use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::{span_size, AlgebraElement, GroupAlgebra, QuotientElement};
use crate::constructions::unitary_basis;
use crate::error::{Error, Result};
use crate::fields::Field;

use super::{p_pow, SubgroupHandle};

/// Brute force over `1 + Γ(A)`, keeping the unitary elements.
///
/// The handle's generators are the `z_{i,k}` basis and its prediction is
/// `p^{n(p-1)/2}`, so `closure` of the generators can be compared against the
/// enumerated set.
pub fn enumerate_unitary_in_one_plus_gamma<K: Field>(
    alg: &Arc<GroupAlgebra<K>>,
    bound: u128,
) -> Result<SubgroupHandle<K>> {
    let one = alg.one();
    let mut found = BTreeSet::new();
    alg.for_each_in_span(&alg.gamma_basis_fp(), bound, |x| {
        let v = &one + x;
        if v.is_unitary() {
            found.insert(v);
        }
    })?;
    Ok(SubgroupHandle {
        label: "V_*".into(),
        generators: unitary_basis(alg).into_iter().map(|z| z.element).collect(),
        elements: Some(found),
        predicted_order: Some(p_pow(alg.p(), alg.n() * (alg.p() - 1) / 2)),
    })
}

/// Every unitary unit of the whole algebra, in enumeration order.
pub fn scan_unitary_units<K: Field>(
    alg: &Arc<GroupAlgebra<K>>,
    bound: u128,
) -> Result<Vec<AlgebraElement<K>>> {
    let mut found = Vec::new();
    alg.for_each_in_span(&alg.algebra_basis_fp(), bound, |u| {
        if u.is_unitary() {
            found.push(u.clone());
        }
    })?;
    Ok(found)
}

/// `u = v b^ε (-1)^δ` with `v` a unitary unit of `FA`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitaryDecomposition<K: Field> {
    pub v: AlgebraElement<K>,
    pub epsilon: u8,
    pub delta: u8,
}

impl<K: Field> UnitaryDecomposition<K> {
    pub fn recompose(&self) -> AlgebraElement<K> {
        let alg = self.v.algebra();
        let mut out = self.v.clone();
        if self.epsilon == 1 {
            out = &out * &alg.b();
        }
        if self.delta == 1 {
            out = -out;
        }
        out
    }
}

pub fn unitary_decompose<K: Field>(u: &AlgebraElement<K>) -> Result<UnitaryDecomposition<K>> {
    if !u.is_unitary() {
        return Err(Error::NotUnitary);
    }
    let alg = u.algebra();
    let f = alg.field();
    let q = u.theta();
    let sign = |c: K::Elem| {
        if f.is_one(c) {
            Some(0)
        } else if f.is_one(f.neg(c)) {
            Some(1)
        } else {
            None
        }
    };
    let (epsilon, delta) = match (f.is_zero(q.c0), f.is_zero(q.c1)) {
        (false, true) => (0, sign(q.c0)),
        (true, false) => (1, sign(q.c1)),
        _ => (0, None),
    };
    let delta = delta.ok_or_else(|| Error::Domain(format!("theta(u) = {q} is not ±1 or ±x")))?;
    let mut h = alg.one();
    if epsilon == 1 {
        h = alg.b();
    }
    if delta == 1 {
        h = -h;
    }
    // b and -1 are their own inverses
    let v = u * &h;
    if !v.in_fa() || !v.is_unitary() {
        return Err(Error::Domain(format!("{v} is not a unitary unit of FA")));
    }
    Ok(UnitaryDecomposition { v, epsilon, delta })
}

/// Brute force over `FC_2`: all `c0 + c1 x` with `(c0 + c1 x)^2 = 1`.
pub fn quotient_unitary_units<K: Field>(field: &K, bound: u128) -> Result<Vec<QuotientElement<K>>> {
    span_size(field.order() as u128, 2, bound)?;
    let mut out = Vec::new();
    for c0 in field.elements() {
        for c1 in field.elements() {
            let q = QuotientElement::new(field, c0, c1);
            if q.is_unitary() {
                out.push(q);
            }
        }
    }
    Ok(out)
}
