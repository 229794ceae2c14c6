//! Exact arithmetic and structural verification for the modular group algebra
//! `FD_{2p}`, where `F = F_{p^n}` has odd characteristic `p` and `D_{2p}` is the
//! dihedral group of order `2p`.
//!
//! Everything is generic over a [`fields::Field`]; the aliases below fix the
//! common instantiations.

pub mod algebra;
pub mod constructions;
pub mod error;
pub mod fields;
pub mod linalg;
pub mod structure;

pub use error::{Error, Result};

/// The prime field `F_p`.
pub type Fp = fields::PrimeField;
/// The field `F_{p^n}`.
pub type Fq = fields::GaloisField;

/// `FD_{2p}` over `F_{p^n}`.
pub type Algebra = algebra::GroupAlgebra<Fq>;
/// An element of [`Algebra`].
pub type Element = algebra::AlgebraElement<Fq>;
/// An element of `FC_2` over `F_{p^n}`.
pub type Quotient = algebra::QuotientElement<Fq>;

pub type FpMatrix = linalg::Matrix<Fp>;
pub type FqMatrix = linalg::Matrix<Fq>;
pub type FpSubspace = linalg::Subspace<Fp>;
pub type FqSubspace = linalg::Subspace<Fq>;

/// Builds `FD_{2p}` over `F_{p^n}` with the default modulus, or with `modulus`
/// (constant term first, leading 1 included) when given.
pub fn algebra(p: u64, n: usize, modulus: Option<Vec<u32>>) -> Result<std::sync::Arc<Algebra>> {
    let params = match modulus {
        Some(m) => fields::FieldParams::new(p, n, m)?,
        None => fields::FieldParams::with_default_modulus(p, n)?,
    };
    algebra::GroupAlgebra::new(fields::GaloisField::new(params))
}
