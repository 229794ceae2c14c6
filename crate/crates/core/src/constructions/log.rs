//! Truncated logarithm and exponential on `1 + N`, `N` a commutative
//! nilpotent subalgebra with `N^p = 0`.
//!
//! On such a context `log(1+x) = sum_{k<p} (-1)^{k+1} x^k / k` turns products
//! of commuting elements into sums, so the order of the subgroup generated by
//! commuting exponent-`p` units is `p^rank` of their logs over `F_p`.

use std::sync::Arc;

use crate::algebra::{span_prime, AlgebraElement, GroupAlgebra};
use crate::error::{Error, Result};
use crate::fields::Field;

fn check_nilpotent<K: Field>(x: &AlgebraElement<K>) -> Result<()> {
    let p = x.algebra().p() as u64;
    if !x.pow(p).is_zero() {
        return Err(Error::Domain(format!("x^p != 0 for x = {x}")));
    }
    Ok(())
}

pub fn truncated_log<K: Field>(v: &AlgebraElement<K>) -> Result<AlgebraElement<K>> {
    let alg = v.algebra();
    let f = alg.field();
    let x = v - &alg.one();
    check_nilpotent(&x)?;
    let mut out = alg.zero();
    let mut power = x.clone();
    for k in 1..alg.p() {
        let mut c = f.inv(f.from_int(k as i64))?;
        if k % 2 == 0 {
            c = f.neg(c);
        }
        out = &out + &power.scale(c);
        power = &power * &x;
    }
    Ok(out)
}

pub fn truncated_exp<K: Field>(x: &AlgebraElement<K>) -> Result<AlgebraElement<K>> {
    check_nilpotent(x)?;
    let alg = x.algebra();
    let f = alg.field();
    let mut out = alg.one();
    let mut power = alg.one();
    let mut factorial = f.one();
    for k in 1..alg.p() {
        power = &power * x;
        factorial = f.mul(factorial, f.from_int(k as i64));
        out = &out + &power.scale(f.inv(factorial)?);
    }
    Ok(out)
}

/// Logs of a pairwise commuting family.
pub fn log_family<K: Field>(elems: &[AlgebraElement<K>]) -> Result<Vec<AlgebraElement<K>>> {
    for (i, x) in elems.iter().enumerate() {
        for y in &elems[i + 1..] {
            if !x.commutes_with(y) {
                return Err(Error::Domain(format!("{x} and {y} do not commute")));
            }
        }
    }
    elems.iter().map(truncated_log).collect()
}

/// `F_p`-rank of the logs of a commuting family; the generated group has order `p^rank`.
pub fn log_rank_fp<K: Field>(
    alg: &Arc<GroupAlgebra<K>>,
    elems: &[AlgebraElement<K>],
) -> Result<usize> {
    let logs = log_family(elems)?;
    Ok(span_prime(alg, &logs).dim())
}
