//! Finite fields of odd characteristic.
//!
//! A field is a context object implementing [`Field`]; its elements are small
//! `Copy` values that only make sense together with the context that produced
//! them. Two implementations are provided: [`PrimeField`] for `F_p` and
//! [`GaloisField`] for `F_p[x]/(f)`. Everything downstream (matrices, the
//! group algebra, the constructions) is generic over the field type.

mod galois;
mod poly;
mod prime;

use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng;

use crate::error::Result;

pub use galois::{find_irreducible, is_irreducible, FieldParams, GaloisField, GfElem};
pub use prime::{is_prime, PrimeField};

/// Upper limit on the field order; elements are packed into `u32`.
pub const MAX_FIELD_ORDER: u64 = 1 << 31;

pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Copy + Eq + Ord + Hash + Debug + Send + Sync + 'static;

    fn characteristic(&self) -> u32;

    /// Degree over the prime field.
    fn degree(&self) -> usize;

    fn order(&self) -> u64 {
        (self.characteristic() as u64).pow(self.degree() as u32)
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    fn add(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn neg(&self, x: Self::Elem) -> Self::Elem;
    fn mul(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; `Error::DivisionByZero` on zero.
    fn inv(&self, x: Self::Elem) -> Result<Self::Elem>;

    fn sub(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem {
        self.add(x, self.neg(y))
    }

    fn div(&self, x: Self::Elem, y: Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    fn is_zero(&self, x: Self::Elem) -> bool {
        x == self.zero()
    }

    fn is_one(&self, x: Self::Elem) -> bool {
        x == self.one()
    }

    /// Image of an integer under `Z -> F`.
    fn from_int(&self, v: i64) -> Self::Elem;

    fn pow(&self, x: Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = x;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `alpha^i`, where `alpha` is the class of `x` generating the field over `F_p`.
    fn alpha_pow(&self, i: usize) -> Self::Elem;

    /// Coordinates over `F_p` in the power basis `1, alpha, ..., alpha^{n-1}`.
    fn to_residues(&self, x: Self::Elem) -> Vec<u32>;

    /// Inverse of [`Field::to_residues`]; residues are reduced mod `p`.
    fn from_residues(&self, residues: &[u32]) -> Result<Self::Elem>;

    /// Bijection `0..order() -> F`; index digits in base `p` are the residues.
    fn element_at(&self, index: u64) -> Self::Elem;

    fn index_of(&self, x: Self::Elem) -> u64;

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        self.element_at(rng.gen_range(0..self.order()))
    }

    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_> {
        Box::new((0..self.order()).map(move |i| self.element_at(i)))
    }

    /// Human-readable form, e.g. `2` or `1+2α^2`.
    fn render(&self, x: Self::Elem) -> String {
        let res = self.to_residues(x);
        let terms: Vec<String> = res
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "α".to_string(),
                (1, c) => format!("{c}α"),
                (i, 1) => format!("α^{i}"),
                (i, c) => format!("{c}α^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}
