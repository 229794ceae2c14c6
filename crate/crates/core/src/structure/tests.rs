use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::span_prime;
use crate::constructions::{
    center_basis, ldu_subspaces, log_rank_fp, omega, omega_prime, symmetric_basis, unitary_basis,
};
use crate::error::Error;
use crate::fields::GaloisField;

type Alg = Arc<GroupAlgebra<GaloisField>>;

fn alg(p: u64, n: usize) -> Alg {
    GroupAlgebra::new(GaloisField::with_default_modulus(p, n).unwrap()).unwrap()
}

fn set(xs: impl IntoIterator<Item = AlgebraElement<GaloisField>>) -> BTreeSet<AlgebraElement<GaloisField>> {
    xs.into_iter().collect()
}

#[test]
fn closure_examples_p3() {
    let a = alg(3, 1);
    let h = closure("A", &[a.a()], GROUP_BOUND).unwrap();
    assert_eq!(h.elements.as_ref().unwrap(), &set([a.one(), a.a(), a.basis(2, 0)]));
    assert_eq!(h.is_closed(), Some(true));

    let k = closure("K", &[a.b(), a.int(-1)], GROUP_BOUND).unwrap();
    let elems = k.elements.clone().unwrap();
    assert_eq!(elems.len(), 4);
    for x in &elems {
        assert!((x * x).is_one());
        for y in &elems {
            assert!(x.commutes_with(y));
        }
    }

    let mut gens: Vec<_> = unitary_basis(&a).into_iter().map(|z| z.element).collect();
    gens.extend([a.b(), a.int(-1)]);
    let u = closure("U_*", &gens, GROUP_BOUND).unwrap();
    assert_eq!(u.order(), Some(12));
    assert_eq!(u.is_closed(), Some(true));
}

#[test]
fn closure_errors() {
    let a = alg(5, 1);
    let gens: Vec<_> = a.gamma_basis_fp().iter().map(|x| &a.one() + x).collect();
    match closure("big", &gens, 1000) {
        Err(Error::BoundExceeded { bound, partial }) => {
            assert_eq!(bound, 1000);
            assert!(partial > 1000);
        }
        other => panic!("expected bound error, got {other:?}"),
    }
    assert!(matches!(closure("z", &[a.zero()], 10), Err(Error::NotAUnit)));
    let other = alg(3, 1);
    assert!(matches!(closure("m", &[a.a(), other.a()], 10), Err(Error::ContextMismatch)));
    assert!(matches!(closure::<GaloisField>("e", &[], 10), Err(Error::Precondition(_))));
}

#[test]
fn unitary_enumeration_p3() {
    let a = alg(3, 1);
    let h = enumerate_unitary_in_one_plus_gamma(&a, GROUP_BOUND).unwrap();
    let found = h.elements.clone().unwrap();
    assert_eq!(found, set([a.one(), a.a(), a.basis(2, 0)]));
    assert!(found.iter().all(|v| v.b_part().iter().all(|c| c.0 == 0)));
    assert_eq!(h.prediction_holds(), Some(true));
    let generated = closure("V_*", &h.generators, GROUP_BOUND).unwrap();
    assert_eq!(generated.elements.unwrap(), found);
}

#[test]
fn unitary_enumeration_bounds() {
    // 5^8 = 390625 candidates fit the default bound
    let a = alg(5, 1);
    let h = enumerate_unitary_in_one_plus_gamma(&a, GROUP_BOUND).unwrap();
    assert_eq!(h.order(), Some(25));
    assert_eq!(h.prediction_holds(), Some(true));
    assert!(matches!(
        enumerate_unitary_in_one_plus_gamma(&a, 100_000),
        Err(Error::BoundExceeded { .. })
    ));
    assert!(matches!(
        enumerate_unitary_in_one_plus_gamma(&alg(7, 1), GROUP_BOUND),
        Err(Error::BoundExceeded { .. })
    ));
}

#[test]
fn unitary_enumeration_p3_n2() {
    let a = alg(3, 2);
    let h = enumerate_unitary_in_one_plus_gamma(&a, GROUP_BOUND).unwrap();
    assert_eq!(h.order(), Some(9));
    let generated = closure("V_*", &h.generators, GROUP_BOUND).unwrap();
    assert_eq!(generated.elements, h.elements);
}

#[test]
fn decompose_examples_p3() {
    let a = alg(3, 1);
    let ab = &a.a() * &a.b();
    let d = unitary_decompose(&ab).unwrap();
    assert_eq!((d.v.clone(), d.epsilon, d.delta), (a.a(), 1, 0));
    let u = a.basis(2, 1).scale_int(2);
    let d = unitary_decompose(&u).unwrap();
    assert_eq!((d.v.clone(), d.epsilon, d.delta), (a.basis(2, 0), 1, 1));
    assert_eq!(d.recompose(), u);
    let d = unitary_decompose(&a.one()).unwrap();
    assert_eq!((d.v, d.epsilon, d.delta), (a.one(), 0, 0));
    assert!(matches!(unitary_decompose(&(&a.a() + &a.b())), Err(Error::NotUnitary)));
    assert!(matches!(unitary_decompose(&(&a.one() + &a.a())), Err(Error::NotUnitary)));
}

#[test]
fn quotient_unitary_examples() {
    for (p, n) in [(3, 1), (5, 1), (7, 2), (3, 2), (5, 2), (7, 1)] {
        let f = GaloisField::with_default_modulus(p, n).unwrap();
        let units = quotient_unitary_units(&f, GROUP_BOUND).unwrap();
        let key = |q: &crate::algebra::QuotientElement<GaloisField>| (q.c0, q.c1);
        let mut expected: Vec<_> = [(1, 0), (-1, 0), (0, 1), (0, -1)]
            .iter()
            .map(|&(c0, c1)| (f.from_int(c0), f.from_int(c1)))
            .collect();
        expected.sort();
        let mut found: Vec<_> = units.iter().map(key).collect();
        found.sort();
        assert_eq!(found, expected, "p={p} n={n}");
    }
    let f = GaloisField::with_default_modulus(11, 2).unwrap();
    assert!(quotient_unitary_units(&f, 100).is_err());
}

#[test]
fn center_of_one_plus_gamma_examples() {
    let a = alg(3, 1);
    let z = center_of_one_plus_gamma(&a);
    assert_eq!(z.dim(), 2);
    assert_eq!(z.order(), 9u32.into());
    let z7 = center_of_one_plus_gamma(&alg(7, 1));
    assert_eq!(z7.dim(), 4);
}

#[test]
fn center_matches_basis_and_shape() {
    for (p, n) in [(3, 1), (5, 1), (5, 2), (7, 2), (11, 1), (13, 2)] {
        let a = alg(p, n);
        let l = a.l();
        let z = center_of_one_plus_gamma(&a);
        assert_eq!(z.dim(), n * (l + 1), "p={p} n={n}");
        let one = a.one();
        let from_basis: Vec<_> = center_basis(&a).into_iter().map(|c| &c.element - &one).collect();
        assert!(span_prime(&a, &from_basis).equals(&z.kernel).unwrap());
        let mut shape: Vec<_> = (1..=l as i64)
            .map(|i| &(&a.basis(i, 0) + &a.basis(-i, 0)) - &a.int(2))
            .collect();
        shape.push(&a.a_hat() * &a.b());
        let shape = span_prime(&a, &a.expand_over_prime_field(&shape));
        assert!(shape.equals(&z.kernel).unwrap());
        for x in &z.basis {
            for w in a.gamma_basis() {
                assert!(x.commutes_with(&w));
            }
        }
    }
}

#[test]
fn exhaustive_center_p3() {
    let a = alg(3, 1);
    let center = exhaustive_group_center(&a, GROUP_BOUND).unwrap();
    assert_eq!(center.len(), 9);
    let s = closure(
        "S_*",
        &symmetric_basis(&a).into_iter().map(|s| s.element).collect::<Vec<_>>(),
        GROUP_BOUND,
    )
    .unwrap()
    .elements
    .unwrap();
    let ab = &a.a_hat() * &a.b();
    let line = set((0..3).map(|c| &a.one() + &ab.scale_int(c)));
    assert_eq!(product_set(&s, &line), center);
    let z = center_of_one_plus_gamma(&a);
    assert!(center.iter().all(|x| z.contains(x)));
    let generated = closure("Z", &z.handle.generators, GROUP_BOUND).unwrap();
    assert_eq!(generated.elements.unwrap(), center);
}

#[test]
fn algebra_center_is_class_sums() {
    for (p, n) in [(3, 1), (5, 2), (7, 1)] {
        let a = alg(p, n);
        let c = algebra_center(&a);
        let sums = crate::algebra::span_field(&a, &class_sum_basis(&a));
        assert_eq!(c.dim(), a.l() + 2);
        assert!(c.equals(&sums).unwrap());
    }
}

#[test]
fn centralizer_examples() {
    let a = alg(3, 1);
    let c = centralizer_of_a(&a);
    assert_eq!(c.order(), 27u32.into());
    let mut elems = BTreeSet::new();
    a.for_each_in_span(&c.basis, GROUP_BOUND, |x| {
        elems.insert(&a.one() + x);
    })
    .unwrap();
    let v = set([a.one(), a.a(), a.basis(2, 0)]);
    let mut z = BTreeSet::new();
    let zc = center_of_one_plus_gamma(&a);
    a.for_each_in_span(&zc.basis, GROUP_BOUND, |x| {
        z.insert(&a.one() + x);
    })
    .unwrap();
    assert_eq!(v.intersection(&z).count(), 1);
    assert_eq!(product_set(&v, &z), elems);
    assert_eq!(centralizer_of_a(&alg(5, 1)).dim(), 5);
}

#[test]
fn centralizer_splits_by_log_rank() {
    for (p, n) in [(5, 1), (7, 2), (11, 1), (13, 2)] {
        let a = alg(p, n);
        let p = p as usize;
        let c = centralizer_of_a(&a);
        assert_eq!(c.dim(), n * p);
        let mut gens: Vec<_> = unitary_basis(&a).into_iter().map(|z| z.element).collect();
        gens.extend(center_basis(&a).into_iter().map(|z| z.element));
        assert!(gens.iter().all(|g| c.contains(g)));
        assert_eq!(log_rank_fp(&a, &gens).unwrap(), n * p);
    }
}

#[test]
fn pavesic_examples() {
    let a = alg(5, 1);
    let t = pavesic_factorize(&a.one()).unwrap();
    assert!(t.lower.is_zero() && t.diagonal.is_zero() && t.upper.is_zero());

    let w1p = omega_prime(&a, 1).unwrap();
    let t = pavesic_factorize(&(&a.one() + &w1p)).unwrap();
    assert_eq!(t.lower, w1p);
    assert!(t.diagonal.is_zero() && t.upper.is_zero());

    let w1 = omega(&a, 1).unwrap();
    let d = &w1 * &w1p;
    let u = omega(&a, 2).unwrap();
    let v = &(&(&a.one() + &w1p) * &(&a.one() + &d)) * &(&a.one() + &u);
    let t = pavesic_factorize(&v).unwrap();
    assert_eq!((t.lower, t.diagonal, t.upper), (w1p, d, u));

    assert!(matches!(pavesic_factorize(&a.b()), Err(Error::Precondition(_))));
}

#[test]
fn pavesic_random_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (p, n) in [(5, 1), (7, 2), (11, 1)] {
        let a = alg(p, n);
        let ldu = ldu_subspaces(&a);
        for _ in 0..50 {
            let v = &a.one() + &a.random_gamma(&mut rng);
            let t = pavesic_factorize(&v).unwrap();
            assert_eq!(t.reconstruct(), v);
            assert!(t.in_blocks(&ldu));
        }
    }
}

#[test]
fn pavesic_sweep_p3() {
    let a = alg(3, 1);
    let s = factorization_sweep(&a, GROUP_BOUND).unwrap();
    assert_eq!(
        s,
        FactorizationSweep {
            count: 81,
            exact: 81,
            in_blocks: 81,
            distinct: 81
        }
    );
}

#[test]
fn d_normalizes_l_holds() {
    for (p, n) in [(3, 1), (5, 2), (7, 1), (11, 2)] {
        assert!(d_normalizes_l(&alg(p, n)).unwrap());
    }
}

#[test]
fn general_product_p3() {
    let a = alg(3, 1);
    let g = general_product_check(&a, GROUP_BOUND).unwrap();
    assert_eq!((g.w_dim, g.c_dim, g.z_dim, g.gamma_dim), (3, 3, 2, 4));
    assert!(g.intersection_is_center);
    assert!(g.order_equation_holds());
    let c = g.exhaustive.clone().unwrap();
    assert_eq!((c.w_order, c.c_order, c.products, c.group_order), (27, 27, 81, 81));
    assert!(c.w_is_one_plus_l_plus_d);
    assert!(g.findings(1, 1, 3).iter().all(|f| f.pass));
}

#[test]
fn general_product_p7_n2() {
    let a = alg(7, 2);
    let g = general_product_check(&a, GROUP_BOUND).unwrap();
    assert_eq!((g.w_dim, g.c_dim, g.z_dim, g.gamma_dim), (18, 14, 8, 24));
    assert!(g.intersection_is_center);
    assert!(g.exhaustive.is_none());
    assert!(g.findings(2, 3, 7).iter().all(|f| f.pass));
}

#[test]
fn global_split_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (p, n) in [(3, 1), (5, 2), (7, 1)] {
        let s = verify_global_split(&alg(p, n), &mut rng, 64).unwrap();
        assert!(s.all_pass(), "{s:?}");
        assert!(s.findings().iter().all(|f| f.pass));
    }
    let a = alg(3, 1);
    let ab = &a.a() * &a.b();
    let q = ab.theta();
    assert!(q.is_unit());
    let w = &ab * &q.psi(&a).unwrap().invert_unit().unwrap();
    assert_eq!(w, a.a());
}

#[test]
fn unit_count_p3() {
    assert_eq!(count_units(&alg(3, 1), SCAN_BOUND).unwrap(), 324);
}

#[test]
fn whole_algebra_unitary_scan_p3() {
    let a = alg(3, 1);
    let units = scan_unitary_units(&a, SCAN_BOUND).unwrap();
    assert_eq!(units.len(), 12);
    let v = set([a.one(), a.a(), a.basis(2, 0)]);
    let mut triples = BTreeSet::new();
    for u in &units {
        let d = unitary_decompose(u).unwrap();
        assert!(v.contains(&d.v));
        assert_eq!(&d.recompose(), u);
        triples.insert((d.v, d.epsilon, d.delta));
    }
    assert_eq!(triples.len(), 12);
}

#[test]
fn finding_compares_renderings() {
    assert!(Finding::new("x", 3, "3").pass);
    assert!(!Finding::new("x", 3, 4).pass);
}
