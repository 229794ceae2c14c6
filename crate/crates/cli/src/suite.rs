//! The `verify` suite: every checkable claim at one `(p, n, f)`, one record each.

use std::collections::BTreeSet;
use std::sync::Arc;

use fd2p::algebra::{span_prime, span_size, QuotientElement};
use fd2p::constructions::{
    center_basis, change_of_basis_checks, d_block_basis, gamma_free_basis, d_block_expansion_checks,
    omega_product_checks, ldu_subspaces, log_rank_fp, symmetric_basis, center_identity_checks,
    unitary_basis, IdentityCheck,
};
use fd2p::fields::{is_irreducible, Field};
use fd2p::structure::{
    algebra_center, center_of_one_plus_gamma, centralizer_of_a, closure, count_units,
    d_normalizes_l, enumerate_unitary_in_one_plus_gamma, exhaustive_group_center,
    factorization_sweep, general_product_check, p_pow, pavesic_factorize, product_set,
    quotient_unitary_units, random_unit, scan_unitary_units, unitary_decompose,
    verify_global_split, Finding, GROUP_BOUND, SCAN_BOUND,
};
use fd2p::{Algebra, Element, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{CheckReport, Params, Record, Status, Timer};

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub p: u64,
    pub n: usize,
    pub modulus: Option<Vec<u32>>,
    pub seed: u64,
    /// Bound for enumerating subgroups of `1 + Γ(A)`.
    pub bound: u128,
    /// Bound for scans over the whole algebra.
    pub scan_bound: u128,
    /// Sample count for seeded property checks.
    pub samples: usize,
}

impl SuiteConfig {
    pub fn new(p: u64, n: usize) -> Self {
        Self {
            p,
            n,
            modulus: None,
            seed: 0,
            bound: GROUP_BOUND,
            scan_bound: SCAN_BOUND,
            samples: 256,
        }
    }

    pub fn algebra(&self) -> fd2p::Result<Arc<Algebra>> {
        fd2p::algebra(self.p, self.n, self.modulus.clone())
    }
}

pub fn params_of(alg: &Algebra) -> Params {
    let params = alg.field().params();
    Params {
        p: params.p() as u64,
        n: params.n(),
        f: params.modulus().to_vec(),
    }
}

/// What a single check observed.
enum Outcome {
    Compare { expected: String, actual: String },
    Skip { expected: String, reason: String },
}

fn compare(expected: impl ToString, actual: impl ToString) -> Outcome {
    Outcome::Compare {
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

fn skip(expected: impl ToString, reason: impl ToString) -> Outcome {
    Outcome::Skip {
        expected: expected.to_string(),
        reason: reason.to_string(),
    }
}

struct Runner {
    report: CheckReport,
    params: Params,
    seed: u64,
    stream: u64,
}

impl Runner {
    /// A fresh generator per check, so skipping one check never shifts another's samples.
    fn rng(&mut self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }

    fn push(&mut self, id: &str, paper_ref: &str, outcome: Outcome, elapsed_ms: f64) {
        let (status, reason, expected, actual) = match outcome {
            Outcome::Compare { expected, actual } => {
                let status = if expected == actual { Status::Pass } else { Status::Fail };
                (status, None, expected, actual)
            }
            Outcome::Skip { expected, reason } => {
                (Status::Skipped, Some(reason), expected, String::new())
            }
        };
        self.report.push(Record {
            check_id: id.to_string(),
            paper_ref: paper_ref.to_string(),
            params: self.params.clone(),
            status,
            reason,
            expected,
            actual,
            elapsed_ms,
        });
    }

    /// Runs one check. A `BoundExceeded` error becomes a skip; any other error a failure.
    fn check(
        &mut self,
        id: &str,
        paper_ref: &str,
        expected_if_skipped: impl ToString,
        body: impl FnOnce(&mut ChaCha8Rng) -> fd2p::Result<Outcome>,
    ) {
        self.stream += 1;
        let mut rng = self.rng();
        let timer = Timer::start();
        let outcome = match body(&mut rng) {
            Ok(o) => o,
            Err(Error::BoundExceeded { bound, .. }) => skip(
                expected_if_skipped,
                format!("brute force exceeds enumeration bound {bound}"),
            ),
            Err(e) => compare(expected_if_skipped, format!("error: {e}")),
        };
        self.push(id, paper_ref, outcome, timer.ms());
    }

    fn findings(
        &mut self,
        paper_ref: &str,
        body: impl FnOnce(&mut ChaCha8Rng) -> fd2p::Result<Vec<(String, Outcome)>>,
        on_error_id: &str,
    ) {
        self.stream += 1;
        let mut rng = self.rng();
        let timer = Timer::start();
        match body(&mut rng) {
            Ok(list) => {
                let ms = timer.ms();
                for (id, outcome) in list {
                    self.push(&id, paper_ref, outcome, ms);
                }
            }
            Err(e) => {
                let ms = timer.ms();
                self.push(on_error_id, paper_ref, compare("no error", format!("error: {e}")), ms);
            }
        }
    }
}

fn as_outcomes(findings: Vec<Finding>) -> Vec<(String, Outcome)> {
    findings
        .into_iter()
        .map(|f| (f.id, compare(f.expected, f.actual)))
        .collect()
}

fn identity_outcome(checks: Vec<IdentityCheck<fd2p::Fq>>) -> Outcome {
    let total = checks.len();
    let failing: Vec<_> = checks.iter().filter(|c| !c.holds()).map(|c| c.name.clone()).collect();
    if failing.is_empty() {
        compare(format!("{total}/{total} hold"), format!("{total}/{total} hold"))
    } else {
        compare(
            format!("{total}/{total} hold"),
            format!("{}/{total} hold; first failure: {}", total - failing.len(), failing[0]),
        )
    }
}

fn count_of(samples: usize, mut ok: impl FnMut() -> bool) -> String {
    let passed = (0..samples).filter(|_| ok()).count();
    format!("{passed}/{samples}")
}

fn elems(list: Vec<fd2p::constructions::Labeled<fd2p::Fq>>) -> Vec<Element> {
    list.into_iter().map(|x| x.element).collect()
}

/// Runs the whole suite. Only configuration errors are returned as `Err`.
pub fn run_suite(cfg: &SuiteConfig) -> fd2p::Result<CheckReport> {
    let alg = cfg.algebra()?;
    let params = params_of(&alg);
    let mut r = Runner {
        report: CheckReport::new(params.clone(), cfg.seed),
        params,
        seed: cfg.seed,
        stream: 0,
    };
    let (p, n, l) = (alg.p(), alg.n(), alg.l());
    let f = alg.field().clone();
    let q = f.order();
    let s = cfg.samples;
    let one = alg.one();

    // fields and the algebra
    r.check("field.modulus_irreducible", "Field setup", true, |_| {
        let m = f.params().modulus();
        Ok(compare(true, is_irreducible(p as u32, m)))
    });
    r.check("field.fermat", "Field setup", "all", |rng| {
        if q <= 10_000 {
            let ok = f.elements().filter(|&x| !f.is_zero(x)).filter(|&x| f.is_one(f.pow(x, q - 1))).count();
            Ok(compare(q - 1, ok))
        } else {
            let xs: Vec<_> = (0..s).map(|_| f.random(rng)).filter(|&x| !f.is_zero(x)).collect();
            let ok = xs.iter().filter(|&&x| f.is_one(f.pow(x, q - 1))).count();
            Ok(compare(xs.len(), ok))
        }
    });
    r.check("algebra.presentation", "Dihedral presentation", true, |_| {
        let (a, b) = (alg.a(), alg.b());
        let conj = &(&b.invert_unit()? * &a) * &b;
        Ok(compare(
            true,
            a.pow(p as u64).is_one() && (&b * &b).is_one() && conj == alg.basis(-1, 0),
        ))
    });
    r.check("algebra.involution_anti_automorphism", "Involution", format!("{s}/{s}"), |rng| {
        Ok(compare(
            format!("{s}/{s}"),
            count_of(s, || {
                let (x, y) = (alg.random(rng), alg.random(rng));
                (&x * &y).involution() == &y.involution() * &x.involution()
                    && x.involution().involution() == x
            }),
        ))
    });
    r.check("algebra.theta_homomorphism", "Unit group", format!("{s}/{s}"), |rng| {
        Ok(compare(
            format!("{s}/{s}"),
            count_of(s, || {
                let (x, y) = (alg.random(rng), alg.random(rng));
                let prod = x.theta().mul(&y.theta()).expect("same field");
                let sum = x.theta().add(&y.theta()).expect("same field");
                (&x * &y).theta() == prod && (&x + &y).theta() == sum
            }),
        ))
    });
    r.check("algebra.theta_psi_identity", "Unit group", q * q, |_| {
        span_size(q as u128, 2, 10_000)?;
        let mut ok = 0;
        for c0 in f.elements() {
            for c1 in f.elements() {
                let x = QuotientElement::new(&f, c0, c1);
                ok += usize::from(x.psi(&alg)?.theta() == x);
            }
        }
        Ok(compare(q * q, ok))
    });
    r.check("algebra.gamma_dimension", "Unit group", 4 * l, |_| {
        Ok(compare(4 * l, alg.gamma_subspace().dim()))
    });
    r.check("algebra.gamma_nilpotent_index_p", "Unit group", format!("{s}/{s}"), |rng| {
        Ok(compare(
            format!("{s}/{s}"),
            count_of(s, || {
                (0..p)
                    .fold(one.clone(), |acc, _| &acc * &alg.random_gamma(rng))
                    .is_zero()
            }),
        ))
    });
    r.check("algebra.one_plus_gamma_exponent_p", "Unit group", format!("{s}/{s}"), |rng| {
        Ok(compare(
            format!("{s}/{s}"),
            count_of(s, || (&one + &alg.random_gamma(rng)).pow(p as u64).is_one()),
        ))
    });
    r.check("algebra.inverse_two_sided", "Unit group", format!("{s}/{s}"), |rng| {
        Ok(compare(
            format!("{s}/{s}"),
            count_of(s, || {
                let (u, inv) = random_unit(&alg, rng);
                (&u * &inv).is_one() && (&inv * &u).is_one()
            }),
        ))
    });

    // constructions
    r.check("constructions.gamma_free_basis_rank", "Lemma 6", 4 * l, |_| {
        let b = elems(gamma_free_basis(&alg));
        Ok(compare(4 * l, fd2p::algebra::span_field(&alg, &b).dim()))
    });
    r.check("constructions.omega_products", "Lemma 6", "all hold", |_| {
        Ok(identity_outcome(omega_product_checks(&alg)))
    });
    r.check("constructions.change_of_basis", "Lemma 6", "all hold", |_| {
        Ok(identity_outcome(change_of_basis_checks(&alg)))
    });
    r.check("constructions.center_identities", "Theorem 7", "all hold", |_| {
        Ok(identity_outcome(center_identity_checks(&alg)))
    });
    r.check("constructions.d_block_expansions", "Lemma 10", "all hold", |_| {
        Ok(identity_outcome(d_block_expansion_checks(&alg)))
    });
    r.check("constructions.d_block_spans_d", "Lemma 10", 2 * n * l, |_| {
        let d: Vec<_> = elems(d_block_basis(&alg)).iter().map(|x| x - &one).collect();
        let ldu = ldu_subspaces(&alg);
        let target = span_prime(&alg, &alg.expand_over_prime_field(&ldu.diagonal_basis));
        let spanned = span_prime(&alg, &d);
        let dim = if spanned.equals(&target)? { spanned.dim() } else { 0 };
        Ok(compare(2 * n * l, dim))
    });
    r.check("constructions.unitary_basis_unitary", "Lemma 3", true, |_| {
        let z = elems(unitary_basis(&alg));
        Ok(compare(true, z.iter().all(|x| x.is_unitary() && x.in_fa())))
    });
    r.check("constructions.unitary_basis_log_rank", "Lemma 3", n * (p - 1) / 2, |_| {
        Ok(compare(n * (p - 1) / 2, log_rank_fp(&alg, &elems(unitary_basis(&alg)))?))
    });
    r.check("constructions.symmetric_basis_symmetric", "Lemma 5", true, |_| {
        let sym = elems(symmetric_basis(&alg));
        Ok(compare(true, sym.iter().all(|x| x.is_symmetric() && x.in_fa())))
    });
    r.check("constructions.symmetric_basis_log_rank", "Lemma 5", n * l, |_| {
        Ok(compare(n * l, log_rank_fp(&alg, &elems(symmetric_basis(&alg)))?))
    });
    r.check("constructions.center_basis_log_rank", "Theorem 7", n * (l + 1), |_| {
        Ok(compare(n * (l + 1), log_rank_fp(&alg, &elems(center_basis(&alg)))?))
    });

    // unitary units
    let v_order = p_pow(p, n * (p - 1) / 2);
    let expect_v = format!("order {v_order}, equal to <z_ik>, inside FA");
    r.check("structure.unitary_exhaustive", "Lemma 2", &expect_v, |_| {
        let h = enumerate_unitary_in_one_plus_gamma(&alg, cfg.bound)?;
        let found = h.elements.clone().expect("enumerated");
        let generated = closure("V_*", &h.generators, cfg.bound)?.elements.expect("enumerated");
        Ok(compare(
            &expect_v,
            format!(
                "order {}, {} <z_ik>, {}",
                found.len(),
                if generated == found { "equal to" } else { "different from" },
                if found.iter().all(|v| v.in_fa()) { "inside FA" } else { "outside FA" }
            ),
        ))
    });
    let u_count = v_order.clone() * 4u32;
    let expect_u = format!("{u_count} unitary units, {u_count} distinct decompositions");
    r.check("structure.unitary_scan", "Theorem 1", &expect_u, |_| {
        let units = scan_unitary_units(&alg, cfg.scan_bound)?;
        let mut triples = BTreeSet::new();
        for u in &units {
            let d = unitary_decompose(u)?;
            if d.recompose() == *u {
                triples.insert((d.v, d.epsilon, d.delta));
            }
        }
        Ok(compare(
            &expect_u,
            format!("{} unitary units, {} distinct decompositions", units.len(), triples.len()),
        ))
    });
    r.check("structure.unitary_decompose_samples", "Theorem 1", format!("{s}/{s}"), |rng| {
        let z = elems(unitary_basis(&alg));
        let mut ok = 0;
        for _ in 0..s {
            let v = z
                .iter()
                .fold(one.clone(), |acc, x| &acc * &x.pow(rng.gen_range(0..p as u64)));
            let (eps, delta) = (rng.gen_range(0..2u8), rng.gen_range(0..2u8));
            let mut u = v.clone();
            if eps == 1 {
                u = &u * &alg.b();
            }
            if delta == 1 {
                u = -u;
            }
            let d = unitary_decompose(&u)?;
            ok += usize::from(d.v == v && d.epsilon == eps && d.delta == delta);
        }
        Ok(compare(format!("{s}/{s}"), format!("{ok}/{s}")))
    });
    r.check("structure.quotient_unitary_units", "Lemma 4", "{1, -1, x, -x}", |_| {
        let units = quotient_unitary_units(&f, cfg.bound)?;
        let expected: BTreeSet<_> = [(1, 0), (-1, 0), (0, 1), (0, -1)]
            .iter()
            .map(|&(a, b)| (f.from_int(a), f.from_int(b)))
            .collect();
        let found: BTreeSet<_> = units.iter().map(|u| (u.c0, u.c1)).collect();
        let actual = if found == expected && units.len() == 4 {
            "{1, -1, x, -x}".to_string()
        } else {
            units.iter().map(|u| u.to_string()).collect::<Vec<_>>().join(", ")
        };
        Ok(compare("{1, -1, x, -x}", actual))
    });

    // center and centralizer
    let z = center_of_one_plus_gamma(&alg);
    r.check("structure.center_dimension", "Theorem 7", n * (l + 1), |_| {
        Ok(compare(n * (l + 1), z.dim()))
    });
    r.check("structure.center_matches_basis", "Theorem 7", true, |_| {
        let c: Vec<_> = elems(center_basis(&alg)).iter().map(|x| x - &one).collect();
        Ok(compare(true, span_prime(&alg, &c).equals(&z.kernel)?))
    });
    r.check("structure.center_shape", "Theorem 7", true, |_| {
        let mut shape: Vec<_> = (1..=l as i64)
            .map(|i| &(&alg.basis(i, 0) + &alg.basis(-i, 0)) - &alg.int(2))
            .collect();
        shape.push(&alg.a_hat() * &alg.b());
        let shape = span_prime(&alg, &alg.expand_over_prime_field(&shape));
        Ok(compare(true, shape.equals(&z.kernel)?))
    });
    let z_order = p_pow(p, n * (l + 1));
    let expect_z = format!("order {z_order}, equal to S_* x (1 + FÂb)");
    r.check("structure.center_exhaustive", "Theorem 7", &expect_z, |_| {
        let center = exhaustive_group_center(&alg, cfg.bound)?;
        let sym = closure("S_*", &elems(symmetric_basis(&alg)), cfg.bound)?
            .elements
            .expect("enumerated");
        let ab = &alg.a_hat() * &alg.b();
        let line: BTreeSet<_> = f.elements().map(|c| &one + &ab.scale(c)).collect();
        let same = product_set(&sym, &line) == center;
        Ok(compare(
            &expect_z,
            format!(
                "order {}, {} S_* x (1 + FÂb)",
                center.len(),
                if same { "equal to" } else { "different from" }
            ),
        ))
    });
    r.check("structure.algebra_center", "Theorem 7", l + 2, |_| {
        let c = algebra_center(&alg);
        let sums = fd2p::algebra::span_field(&alg, &fd2p::structure::class_sum_basis(&alg));
        Ok(compare(l + 2, if c.equals(&sums)? { c.dim() } else { 0 }))
    });
    let c = centralizer_of_a(&alg);
    r.check("structure.centralizer_order", "Theorem 9", n * p, |_| Ok(compare(n * p, c.dim())));
    r.check("structure.centralizer_direct_product", "Theorem 9", n * p, |_| {
        let mut gens = elems(unitary_basis(&alg));
        gens.extend(elems(center_basis(&alg)));
        if !gens.iter().all(|g| c.contains(g)) {
            return Ok(compare(n * p, "generators outside C(a)"));
        }
        Ok(compare(n * p, log_rank_fp(&alg, &gens)?))
    });

    // factorization and products
    r.check("structure.pavesic_round_trips", "Theorem 8", format!("{s}/{s}"), |rng| {
        let ldu = ldu_subspaces(&alg);
        let mut ok = 0;
        for _ in 0..s {
            let v = &one + &alg.random_gamma(rng);
            let t = pavesic_factorize(&v)?;
            ok += usize::from(t.reconstruct() == v && t.in_blocks(&ldu));
        }
        Ok(compare(format!("{s}/{s}"), format!("{ok}/{s}")))
    });
    let gamma_order = p_pow(p, 4 * n * l);
    r.check("structure.pavesic_exhaustive", "Theorem 8", format!("{gamma_order} exact, unique"), |_| {
        let sweep = factorization_sweep(&alg, cfg.bound)?;
        let unique = sweep.distinct as u128 == sweep.count;
        let exact = sweep.exact.min(sweep.in_blocks);
        Ok(compare(
            format!("{gamma_order} exact, unique"),
            format!("{exact} exact, {}", if unique { "unique" } else { "not unique" }),
        ))
    });
    r.check("structure.d_normalizes_l", "Theorem 9", true, |_| {
        Ok(compare(true, d_normalizes_l(&alg)?))
    });
    r.findings(
        "Theorem 9",
        |_| {
            let g = general_product_check(&alg, cfg.bound)?;
            let mut out = as_outcomes(g.findings(n, l, p));
            if g.exhaustive.is_none() {
                out.push((
                    "general_product.exhaustive_coverage".into(),
                    skip(&gamma_order, format!("brute force exceeds enumeration bound {}", cfg.bound)),
                ));
            }
            Ok(out)
        },
        "general_product",
    );
    r.findings(
        "Unit group",
        |rng| Ok(as_outcomes(verify_global_split(&alg, rng, s)?.findings())),
        "global_split",
    );
    let unit_count = p_pow(p, 4 * n * l) * (q - 1) * (q - 1);
    r.check("structure.unit_count", "Unit group", &unit_count, |_| {
        Ok(compare(&unit_count, count_units(&alg, cfg.scan_bound)?))
    });

    Ok(r.report)
}
