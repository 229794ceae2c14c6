use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::fields::GaloisField;

fn alg(p: u64, n: usize) -> Arc<GroupAlgebra<GaloisField>> {
    GroupAlgebra::new(GaloisField::with_default_modulus(p, n).unwrap()).unwrap()
}

fn el(a: &Arc<GroupAlgebra<GaloisField>>, terms: &[(i64, i64, i64)]) -> AlgebraElement<GaloisField> {
    let mut e = a.zero();
    for &(c, i, j) in terms {
        e = &e + &a.basis(i, j).scale_int(c);
    }
    e
}

/// Group elements as affine maps `x -> (-1)^j x + i` on `Z_p`; the product is composition.
fn oracle_mul(
    a: &Arc<GroupAlgebra<GaloisField>>,
    x: &AlgebraElement<GaloisField>,
    y: &AlgebraElement<GaloisField>,
) -> AlgebraElement<GaloisField> {
    let p = a.p() as i64;
    let f = a.field();
    let mut out = a.zero();
    for g in 0..a.dim() {
        for h in 0..a.dim() {
            let (i1, j1) = a.group_element(g);
            let (i2, j2) = a.group_element(h);
            let sign = if j1 == 1 { -1 } else { 1 };
            let shift = (i1 as i64 + sign * i2 as i64).rem_euclid(p);
            let k = a.index(shift, (j1 + j2) as i64);
            let c = f.mul(x.coeffs()[g], y.coeffs()[h]);
            out.coeffs[k] = f.add(out.coeffs[k], c);
        }
    }
    out
}

#[test]
fn mul_examples() {
    let a3 = alg(3, 1);
    let (a, b) = (a3.a(), a3.b());
    assert_eq!(&a * &b, a3.basis(1, 1));
    assert_eq!(&a3.basis(1, 1) * &a3.basis(1, 1), a3.one());
    let one_b = &a3.one() + &b;
    assert_eq!(&one_b * &one_b, el(&a3, &[(2, 0, 0), (2, 0, 1)]));
    // b^{-1} a b = a^{-1}
    assert_eq!(&(&b * &a) * &b, a3.basis(-1, 0));
}

#[test]
fn mul_matches_affine_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (p, n) in [(3, 1), (5, 1), (5, 2), (7, 1)] {
        let a = alg(p, n);
        for _ in 0..50 {
            let x = a.random(&mut rng);
            let y = a.random(&mut rng);
            assert_eq!(&x * &y, oracle_mul(&a, &x, &y));
        }
    }
}

#[test]
fn involution_examples() {
    let a5 = alg(5, 1);
    assert_eq!(a5.a().involution(), a5.basis(4, 0));
    assert_eq!(a5.basis(1, 1).involution(), a5.basis(1, 1));
    let x = el(&a5, &[(1, 0, 0), (2, 1, 0), (3, 2, 1)]);
    assert_eq!(x.involution(), el(&a5, &[(1, 0, 0), (2, 4, 0), (3, 2, 1)]));
}

#[test]
fn augmentation_chi_theta_psi() {
    let a3 = alg(3, 1);
    let f = a3.field().clone();
    let cases = [
        (a3.one(), 1),
        (&a3.a() - &a3.one(), 0),
        (el(&a3, &[(2, 0, 0), (1, 1, 0), (1, 0, 1)]), 1),
    ];
    for (x, aug) in cases {
        assert_eq!(x.augmentation(), f.from_int(aug));
        assert_eq!(x.chi(), x.augmentation());
    }

    assert_eq!(a3.a().theta(), QuotientElement::one(&f));
    assert_eq!(a3.b().theta(), QuotientElement::x(&f));
    let x = el(&a3, &[(2, 0, 0), (1, 1, 0), (1, 1, 1), (1, 2, 1)]);
    assert_eq!(x.theta(), QuotientElement::new(&f, f.zero(), f.from_int(2)));

    assert_eq!(QuotientElement::one(&f).psi(&a3).unwrap(), a3.one());
    assert_eq!(QuotientElement::x(&f).psi(&a3).unwrap(), a3.b());
    let q = QuotientElement::new(&f, f.from_int(2), f.one());
    let s = q.psi(&a3).unwrap();
    assert_eq!(s, el(&a3, &[(2, 0, 0), (1, 0, 1)]));
    assert_eq!(s.theta(), q);
}

#[test]
fn gamma_membership() {
    let a3 = alg(3, 1);
    assert!((&a3.a() - &a3.one()).in_gamma_a());
    assert!(!(&a3.b() - &a3.one()).in_gamma_a());
    // (a - a^2)(1 + b) = a + ab - a^2 - a^2 b
    let w = el(&a3, &[(1, 1, 0), (1, 1, 1), (-1, 2, 0), (-1, 2, 1)]);
    assert_eq!(&(&a3.a() - &a3.basis(2, 0)) * &(&a3.one() + &a3.b()), w);
    assert!(w.in_gamma_a());
}

#[test]
fn circle_examples() {
    let a3 = alg(3, 1);
    let one = a3.one();
    let x = el(&a3, &[(1, 1, 0), (2, 2, 1)]);
    assert_eq!(x.circle(&a3.zero()).unwrap(), x);
    let u = &a3.a() - &one;
    let v = &a3.basis(2, 0) - &one;
    assert_eq!(u.circle(&v).unwrap(), a3.zero());
    let w = &a3.b() - &one;
    assert_eq!(w.circle(&w).unwrap(), a3.zero());
}

#[test]
fn circle_transports_multiplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let a = alg(5, 2);
    let one = a.one();
    for _ in 0..20 {
        let u = a.random(&mut rng);
        let v = a.random(&mut rng);
        let lhs = &(&u * &v) - &one;
        let rhs = (&u - &one).circle(&(&v - &one)).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn invert_unit_examples() {
    let a3 = alg(3, 1);
    assert_eq!(a3.a().invert_by_solve().unwrap(), a3.basis(2, 0));
    assert_eq!(a3.a().invert_unit().unwrap(), a3.basis(2, 0));
    assert_eq!(
        (&a3.one() + &a3.b()).invert_unit(),
        Err(Error::NotAUnit)
    );
    assert!(!(&a3.one() + &a3.b()).is_unit());
    let fast = (&a3.one() + &(&a3.a() - &a3.one())).invert_unit().unwrap();
    assert_eq!(fast, a3.a().pow(2));
}

#[test]
fn unitary_and_symmetric_examples() {
    let a3 = alg(3, 1);
    assert!(a3.b().is_unitary());
    assert!(!(&a3.a() + &a3.b()).is_unitary());
    let s = el(&a3, &[(2, 1, 0), (2, 2, 0)]);
    assert!(s.is_symmetric());
    assert!(!a3.zero().is_unitary());
    assert!(!a3.zero().is_symmetric());
}

#[test]
fn rendering_and_serialization() {
    let a5 = alg(5, 1);
    let x = el(&a5, &[(1, 0, 0), (2, 2, 1), (1, 1, 0)]);
    assert_eq!(x.to_string(), "1 + a + 2*a^2*b");
    assert_eq!(a5.zero().to_string(), "0");
    assert_eq!(a5.one().to_string(), "1");
    assert_eq!(a5.b().to_string(), "b");
    let ser = x.serialize();
    assert_eq!(ser.len(), 10);
    assert_eq!(a5.deserialize(&ser).unwrap(), x);

    let a9 = alg(3, 2);
    let alpha = a9.field().alpha_pow(1);
    let y = &a9.a().scale(a9.field().add(alpha, a9.field().one())) + &a9.b();
    assert_eq!(y.to_string(), "(1+α)*a + b");
    assert_eq!(y.serialize()[1], vec![1, 1]);
    assert_eq!(a9.from_prime_vector(&y.to_prime_vector()).unwrap(), y);
}

#[test]
fn context_mismatch() {
    let a3 = alg(3, 1);
    let a5 = alg(5, 1);
    assert_eq!(a3.one().try_mul(&a5.one()), Err(Error::ContextMismatch));
    assert_eq!(a3.one().try_add(&a5.one()), Err(Error::ContextMismatch));
    let f3 = a3.field().clone();
    assert_eq!(
        QuotientElement::one(&f3).psi(&a5),
        Err(Error::ContextMismatch)
    );
    // separately constructed but equal contexts interoperate
    let again = alg(3, 1);
    assert_eq!(&a3.a() * &again.a(), a3.basis(2, 0));
}

#[test]
fn theta_psi_section_exhaustive() {
    for (p, n) in [(3, 1), (3, 2), (5, 1), (5, 2), (7, 2)] {
        let a = alg(p, n);
        let f = a.field().clone();
        for c0 in f.elements() {
            for c1 in f.elements() {
                let q = QuotientElement::new(&f, c0, c1);
                assert_eq!(q.psi(&a).unwrap().theta(), q);
            }
        }
    }
}

#[test]
fn gamma_has_dimension_4l() {
    for (p, n) in [(3, 1), (5, 2), (7, 1), (11, 2)] {
        let a = alg(p, n);
        assert_eq!(a.gamma_subspace().dim(), 4 * a.l());
        assert_eq!(a.gamma_subspace().dim(), 2 * a.p() - 2);
        assert_eq!(a.gamma_subspace_fp().dim(), 4 * a.l() * a.n());
        for g in a.gamma_basis() {
            assert!(g.in_gamma_a());
        }
    }
}

#[test]
fn gamma_enumeration_counts() {
    let a = alg(3, 1);
    let mut seen = std::collections::HashSet::new();
    let total = a
        .for_each_in_span(&a.gamma_basis_fp(), 1_000, |x| {
            assert!(x.in_gamma_a());
            seen.insert(x.clone());
        })
        .unwrap();
    assert_eq!(total, 81);
    assert_eq!(seen.len(), 81);
    assert!(matches!(
        a.for_each_in_span(&a.gamma_basis_fp(), 80, |_| {}),
        Err(Error::BoundExceeded { .. })
    ));
}

#[test]
fn gamma_nilpotent_and_exponent_p() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (p, n) in [(3, 1), (5, 1), (5, 2), (7, 1)] {
        let a = alg(p, n);
        let one = a.one();
        for _ in 0..32 {
            let prod = (0..p)
                .map(|_| a.random_gamma(&mut rng))
                .reduce(|acc, x| &acc * &x)
                .unwrap();
            assert!(prod.is_zero());
            let v = &one + &a.random_gamma(&mut rng);
            assert!(v.pow(p).is_one());
            assert_eq!(&v.invert_unit().unwrap() * &v, one);
        }
    }
}

fn small_alg() -> impl Strategy<Value = Arc<GroupAlgebra<GaloisField>>> {
    prop::sample::select(vec![(3u64, 1usize), (3, 2), (5, 1), (7, 1)]).prop_map(|(p, n)| alg(p, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn involution_is_anti_automorphism_of_order_two(a in small_alg(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = a.random(&mut rng);
        let y = a.random(&mut rng);
        prop_assert_eq!((&x * &y).involution(), &y.involution() * &x.involution());
        prop_assert_eq!(x.involution().involution(), x);
    }

    #[test]
    fn theta_is_algebra_homomorphism(a in small_alg(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = a.random(&mut rng);
        let y = a.random(&mut rng);
        prop_assert_eq!((&x * &y).theta(), x.theta().mul(&y.theta()).unwrap());
        prop_assert_eq!((&x + &y).theta(), x.theta().add(&y.theta()).unwrap());
        prop_assert_eq!(x.in_gamma_a(), x.theta().is_zero());
    }

    #[test]
    fn inverse_is_two_sided(a in small_alg(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = a.random(&mut rng);
        match x.invert_unit() {
            Ok(y) => {
                prop_assert!((&x * &y).is_one());
                prop_assert!((&y * &x).is_one());
                prop_assert!(x.theta().is_unit());
            }
            Err(e) => {
                prop_assert_eq!(e, Error::NotAUnit);
                prop_assert!(!x.theta().is_unit());
            }
        }
    }
}
