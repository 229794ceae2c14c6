use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::poly;
use super::prime::is_prime;
use super::{Field, MAX_FIELD_ORDER};

const TABLE_LIMIT: u64 = 512;

/// `(p, n, f)` fixing `F = F_p[x]/(f)`. The modulus is stored constant term
/// first with the leading 1 included, so it has `n + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldParams {
    p: u32,
    n: usize,
    modulus: Vec<u32>,
}

impl FieldParams {
    /// Validates primality of `p`, monicity and irreducibility of `modulus`.
    pub fn new(p: u64, n: usize, modulus: Vec<u32>) -> Result<Self> {
        check_pn(p, n)?;
        if modulus.len() != n + 1 {
            return Err(Error::InvalidModulus(format!(
                "expected {} coefficients for degree {n}, got {}",
                n + 1,
                modulus.len()
            )));
        }
        if modulus[n] != 1 {
            return Err(Error::InvalidModulus("polynomial is not monic".into()));
        }
        if let Some(c) = modulus.iter().find(|&&c| c as u64 >= p) {
            return Err(Error::InvalidModulus(format!("coefficient {c} not reduced mod {p}")));
        }
        if !is_irreducible(p as u32, &modulus) {
            return Err(Error::InvalidModulus(format!(
                "{} is reducible over F_{p}",
                render_poly(&modulus)
            )));
        }
        Ok(Self {
            p: p as u32,
            n,
            modulus,
        })
    }

    /// Parameters using [`find_irreducible`].
    pub fn with_default_modulus(p: u64, n: usize) -> Result<Self> {
        check_pn(p, n)?;
        let modulus = find_irreducible(p as u32, n);
        Ok(Self {
            p: p as u32,
            n,
            modulus,
        })
    }

    /// Parses the comma-separated `--poly` format, e.g. `1,0,1` for `x^2 + 1`.
    pub fn parse_modulus(s: &str) -> Result<Vec<u32>> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad coefficient {t:?}: {e}")))
            })
            .collect()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.n as u32)
    }
}

fn check_pn(p: u64, n: usize) -> Result<()> {
    if p <= 2 || !is_prime(p) {
        return Err(Error::InvalidCharacteristic(p));
    }
    if n == 0 {
        return Err(Error::InvalidDegree(n));
    }
    let too_big = (p as f64).powi(n as i32) >= MAX_FIELD_ORDER as f64;
    if too_big {
        return Err(Error::FieldTooLarge { p: p as u32, n });
    }
    Ok(())
}

fn render_poly(coeffs: &[u32]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        })
        .collect();
    terms.join(" + ")
}

/// Ben-Or test: a degree-`n` polynomial is irreducible iff
/// `gcd(f, x^{p^i} - x) = 1` for every `1 <= i <= n/2`.
pub fn is_irreducible(p: u32, coeffs: &[u32]) -> bool {
    let p = p as u64;
    let f: Vec<u64> = poly::trim(coeffs.iter().map(|&c| c as u64 % p).collect());
    if f.len() < 2 {
        return false;
    }
    let n = f.len() - 1;
    if n == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut frob = x.clone();
    for _ in 1..=n / 2 {
        frob = poly::powmod(&frob, p, &f, p);
        let g = poly::gcd(&f, &poly::sub(&frob, &x, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Smallest monic irreducible polynomial of degree `n` over `F_p`, ordering
/// candidates by the integer `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`.
pub fn find_irreducible(p: u32, n: usize) -> Vec<u32> {
    let total = (p as u64).pow(n as u32);
    for k in 0..total {
        let mut coeffs = digits(k, p, n);
        coeffs.push(1);
        if is_irreducible(p, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

fn digits(mut k: u64, p: u32, n: usize) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let d = (k % p as u64) as u32;
            k /= p as u64;
            d
        })
        .collect()
}

/// Packed element of `F_{p^n}`: the integer `sum c_i p^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GfElem(pub u32);

#[derive(Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

struct Inner {
    params: FieldParams,
    q: u32,
    tables: Option<Tables>,
}

impl fmt::Debug for Inner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("p", &self.params.p)
            .field("n", &self.params.n)
            .field("modulus", &self.params.modulus)
            .finish()
    }
}

/// `F_{p^n}` as a context. Cloning is cheap; equality compares parameters.
#[derive(Clone, Debug)]
pub struct GaloisField {
    inner: Arc<Inner>,
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.params == other.inner.params
    }
}

impl Eq for GaloisField {}

impl GaloisField {
    pub fn new(params: FieldParams) -> Self {
        let q = params.order() as u32;
        let mut inner = Inner {
            params,
            q,
            tables: None,
        };
        if (q as u64) <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Self {
            inner: Arc::new(inner),
        }
    }

    /// Field with the default modulus from [`find_irreducible`].
    pub fn with_default_modulus(p: u64, n: usize) -> Result<Self> {
        Ok(Self::new(FieldParams::with_default_modulus(p, n)?))
    }

    pub fn params(&self) -> &FieldParams {
        &self.inner.params
    }

    fn p(&self) -> u32 {
        self.inner.params.p
    }

    fn n(&self) -> usize {
        self.inner.params.n
    }

    /// Element from residues, constant term first; must have exactly `n` entries.
    pub fn elem(&self, residues: &[u32]) -> Result<GfElem> {
        self.from_residues(residues)
    }
}

fn unpack(inner: &Inner, x: u32) -> Vec<u64> {
    let p = inner.params.p as u64;
    let mut k = x as u64;
    (0..inner.params.n)
        .map(|_| {
            let d = k % p;
            k /= p;
            d
        })
        .collect()
}

fn pack(inner: &Inner, c: &[u64]) -> u32 {
    let p = inner.params.p as u64;
    c.iter().rev().fold(0u64, |acc, &d| acc * p + d) as u32
}

fn slow_add(inner: &Inner, x: u32, y: u32) -> u32 {
    let p = inner.params.p as u64;
    let (a, b) = (unpack(inner, x), unpack(inner, y));
    let s: Vec<u64> = a.iter().zip(&b).map(|(u, v)| (u + v) % p).collect();
    pack(inner, &s)
}

fn slow_mul(inner: &Inner, x: u32, y: u32) -> u32 {
    let p = inner.params.p as u64;
    let n = inner.params.n;
    if n == 1 {
        return ((x as u64 * y as u64) % p) as u32;
    }
    let m: Vec<u64> = inner.params.modulus.iter().map(|&c| c as u64).collect();
    let mut r = poly::mulmod(&unpack(inner, x), &unpack(inner, y), &m, p);
    r.resize(n, 0);
    pack(inner, &r)
}

fn slow_inv(inner: &Inner, x: u32) -> u32 {
    // x^(q-2)
    let mut e = inner.q as u64 - 2;
    let mut base = x;
    let mut acc = 1u32;
    while e > 0 {
        if e & 1 == 1 {
            acc = slow_mul(inner, acc, base);
        }
        base = slow_mul(inner, base, base);
        e >>= 1;
    }
    acc
}

fn build_tables(inner: &Inner) -> Tables {
    let q = inner.q as usize;
    let mut add = vec![0; q * q];
    let mut mul = vec![0; q * q];
    for x in 0..q {
        for y in x..q {
            let s = slow_add(inner, x as u32, y as u32);
            let m = slow_mul(inner, x as u32, y as u32);
            add[x * q + y] = s;
            add[y * q + x] = s;
            mul[x * q + y] = m;
            mul[y * q + x] = m;
        }
    }
    let neg = (0..q)
        .map(|x| (0..q).find(|&y| add[x * q + y] == 0).unwrap() as u32)
        .collect();
    let mut inv = vec![0; q];
    for x in 1..q {
        if inv[x] == 0 {
            let y = (1..q).find(|&y| mul[x * q + y] == 1).unwrap();
            inv[x] = y as u32;
            inv[y] = x as u32;
        }
    }
    Tables { add, mul, neg, inv }
}

impl Field for GaloisField {
    type Elem = GfElem;

    fn characteristic(&self) -> u32 {
        self.p()
    }

    fn degree(&self) -> usize {
        self.n()
    }

    fn zero(&self) -> GfElem {
        GfElem(0)
    }

    fn one(&self) -> GfElem {
        GfElem(1)
    }

    #[inline]
    fn add(&self, x: GfElem, y: GfElem) -> GfElem {
        match &self.inner.tables {
            Some(t) => GfElem(t.add[x.0 as usize * self.inner.q as usize + y.0 as usize]),
            None => GfElem(slow_add(&self.inner, x.0, y.0)),
        }
    }

    fn neg(&self, x: GfElem) -> GfElem {
        if let Some(t) = &self.inner.tables {
            return GfElem(t.neg[x.0 as usize]);
        }
        let p = self.p() as u64;
        let c: Vec<u64> = unpack(&self.inner, x.0)
            .into_iter()
            .map(|d| (p - d) % p)
            .collect();
        GfElem(pack(&self.inner, &c))
    }

    #[inline]
    fn mul(&self, x: GfElem, y: GfElem) -> GfElem {
        match &self.inner.tables {
            Some(t) => GfElem(t.mul[x.0 as usize * self.inner.q as usize + y.0 as usize]),
            None => GfElem(slow_mul(&self.inner, x.0, y.0)),
        }
    }

    fn inv(&self, x: GfElem) -> Result<GfElem> {
        if x.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.inner.tables {
            Some(t) => GfElem(t.inv[x.0 as usize]),
            None => GfElem(slow_inv(&self.inner, x.0)),
        })
    }

    fn from_int(&self, v: i64) -> GfElem {
        GfElem(v.rem_euclid(self.p() as i64) as u32)
    }

    fn alpha_pow(&self, i: usize) -> GfElem {
        let alpha = if self.n() == 1 {
            // F_p[x]/(x - c): alpha = c
            GfElem((self.p() - self.inner.params.modulus[0]) % self.p())
        } else {
            GfElem(self.p())
        };
        self.pow(alpha, i as u64)
    }

    fn to_residues(&self, x: GfElem) -> Vec<u32> {
        unpack(&self.inner, x.0).into_iter().map(|d| d as u32).collect()
    }

    fn from_residues(&self, residues: &[u32]) -> Result<GfElem> {
        if residues.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: residues.len(),
            });
        }
        let p = self.p() as u64;
        let c: Vec<u64> = residues.iter().map(|&r| r as u64 % p).collect();
        Ok(GfElem(pack(&self.inner, &c)))
    }

    fn element_at(&self, index: u64) -> GfElem {
        GfElem((index % self.inner.q as u64) as u32)
    }

    fn index_of(&self, x: GfElem) -> u64 {
        x.0 as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_root(p: u32, coeffs: &[u32]) -> bool {
        (0..p as u64).any(|x| {
            coeffs
                .iter()
                .rev()
                .fold(0u64, |acc, &c| (acc * x + c as u64) % p as u64)
                == 0
        })
    }

    // For degree <= 3, irreducible <=> no roots in F_p.
    #[test]
    fn ben_or_matches_root_search_low_degree() {
        for p in [3u32, 5, 7] {
            for n in 2..=3usize {
                let total = (p as u64).pow(n as u32);
                for k in 0..total {
                    let mut c = digits(k, p, n);
                    c.push(1);
                    assert_eq!(is_irreducible(p, &c), !has_root(p, &c), "p={p} {c:?}");
                }
            }
        }
    }

    #[test]
    fn find_irreducible_examples() {
        assert_eq!(find_irreducible(3, 1), vec![0, 1]);
        assert_eq!(find_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(find_irreducible(5, 2), vec![2, 0, 1]);
        // stable across calls
        assert_eq!(find_irreducible(7, 3), find_irreducible(7, 3));
    }

    #[test]
    fn find_irreducible_is_minimal() {
        // every smaller candidate has a root (brute force for degree 2)
        for p in [3u32, 5, 7, 11, 13] {
            let f = find_irreducible(p, 2);
            let idx = f[0] as u64 + f[1] as u64 * p as u64;
            for k in 0..idx {
                let mut c = digits(k, p, 2);
                c.push(1);
                assert!(has_root(p, &c));
            }
            assert!(!has_root(p, &f));
        }
    }

    #[test]
    fn degree_four_counts() {
        // number of monic irreducibles of degree 4 over F_3 is (81 - 9)/4 = 18
        let count = (0..81u64)
            .filter(|&k| {
                let mut c = digits(k, 3, 4);
                c.push(1);
                is_irreducible(3, &c)
            })
            .count();
        assert_eq!(count, 18);
    }

    #[test]
    fn params_validation() {
        assert!(FieldParams::new(3, 2, vec![1, 0, 1]).is_ok());
        assert!(matches!(
            FieldParams::new(3, 2, vec![2, 0, 1]),
            Err(Error::InvalidModulus(_))
        ));
        assert!(matches!(
            FieldParams::new(3, 2, vec![1, 0, 2]),
            Err(Error::InvalidModulus(_))
        ));
        assert!(matches!(
            FieldParams::new(3, 2, vec![1, 1]),
            Err(Error::InvalidModulus(_))
        ));
        assert_eq!(
            FieldParams::new(4, 1, vec![0, 1]),
            Err(Error::InvalidCharacteristic(4))
        );
        assert_eq!(
            FieldParams::with_default_modulus(5, 0),
            Err(Error::InvalidDegree(0))
        );
        assert_eq!(FieldParams::parse_modulus("1, 0,1"), Ok(vec![1, 0, 1]));
        assert!(FieldParams::parse_modulus("1,x").is_err());
    }

    #[test]
    fn extension_examples() {
        let f = GaloisField::new(FieldParams::new(3, 2, vec![1, 0, 1]).unwrap());
        let alpha = f.elem(&[0, 1]).unwrap();
        assert_eq!(f.alpha_pow(1), alpha);
        assert_eq!(f.mul(alpha, alpha), f.from_int(2));
        assert_eq!(f.render(f.elem(&[1, 2]).unwrap()), "1+2α");
    }

    #[test]
    fn prime_case_alpha_is_root() {
        // x + 1 over F_5 has root 4; alpha = 4
        let f = GaloisField::new(FieldParams::new(5, 1, vec![1, 1]).unwrap());
        assert_eq!(f.alpha_pow(1), GfElem(4));
        let g = GaloisField::with_default_modulus(5, 1).unwrap();
        assert_eq!(g.alpha_pow(1), GfElem(0));
        assert_eq!(g.alpha_pow(0), GfElem(1));
    }

    #[test]
    fn table_and_slow_paths_agree() {
        for (p, n) in [(3u64, 2usize), (5, 2), (3, 4)] {
            let f = GaloisField::with_default_modulus(p, n).unwrap();
            let q = f.order() as u32;
            for x in 0..q {
                for y in 0..q {
                    assert_eq!(f.mul(GfElem(x), GfElem(y)).0, slow_mul(&f.inner, x, y));
                    assert_eq!(f.add(GfElem(x), GfElem(y)).0, slow_add(&f.inner, x, y));
                }
                if x != 0 {
                    assert_eq!(f.inv(GfElem(x)).unwrap().0, slow_inv(&f.inner, x));
                }
            }
        }
    }
}
