use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fields::Field;

use super::{AlgebraElement, GroupAlgebra};

/// `c0 + c1 x` in `FC_2 = F<x | x^2 = 1>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuotientElement<K: Field> {
    field: K,
    pub c0: K::Elem,
    pub c1: K::Elem,
}

impl<K: Field> QuotientElement<K> {
    pub fn new(field: &K, c0: K::Elem, c1: K::Elem) -> Self {
        Self {
            field: field.clone(),
            c0,
            c1,
        }
    }

    pub fn one(field: &K) -> Self {
        Self::new(field, field.one(), field.zero())
    }

    pub fn x(field: &K) -> Self {
        Self::new(field, field.zero(), field.one())
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = &self.field;
        Ok(Self::new(f, f.add(self.c0, other.c0), f.add(self.c1, other.c1)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = &self.field;
        let c0 = f.add(f.mul(self.c0, other.c0), f.mul(self.c1, other.c1));
        let c1 = f.add(f.mul(self.c0, other.c1), f.mul(self.c1, other.c0));
        Ok(Self::new(f, c0, c1))
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Self::new(f, f.neg(self.c0), f.neg(self.c1))
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(self.c0) && self.field.is_zero(self.c1)
    }

    pub fn is_one(&self) -> bool {
        self.field.is_one(self.c0) && self.field.is_zero(self.c1)
    }

    /// `x` is its own inverse, so the canonical involution fixes `FC_2` pointwise.
    pub fn involution(&self) -> Self {
        self.clone()
    }

    /// Units of `FC_2 = F x F` (via `x -> 1`, `x -> -1`).
    pub fn is_unit(&self) -> bool {
        let f = &self.field;
        !f.is_zero(f.add(self.c0, self.c1)) && !f.is_zero(f.sub(self.c0, self.c1))
    }

    pub fn inverse(&self) -> Result<Self> {
        let f = &self.field;
        let det = f.sub(f.mul(self.c0, self.c0), f.mul(self.c1, self.c1));
        let d = f.inv(det).map_err(|_| Error::NotAUnit)?;
        Ok(Self::new(f, f.mul(self.c0, d), f.neg(f.mul(self.c1, d))))
    }

    pub fn is_unitary(&self) -> bool {
        self.is_unit()
            && self
                .involution()
                .mul(self)
                .map(|q| q.is_one())
                .unwrap_or(false)
    }

    /// Section of `theta`: `c0 + c1 x -> c0 + c1 b`.
    pub fn psi(&self, alg: &Arc<GroupAlgebra<K>>) -> Result<AlgebraElement<K>> {
        if *alg.field() != self.field {
            return Err(Error::ContextMismatch);
        }
        let mut e = alg.zero();
        e.set_coeff(0, 0, self.c0);
        e.set_coeff(0, 1, self.c1);
        Ok(e)
    }
}

impl<K: Field> fmt::Display for QuotientElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}x",
            self.field.render(self.c0),
            self.field.render(self.c1)
        )
    }
}
