//! Dense polynomials over `F_p`, coefficients constant term first.

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn inv_mod(x: u64, p: u64) -> u64 {
    // p prime, x != 0
    let mut acc = 1u64;
    let mut base = x % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn sub(f: &[u64], g: &[u64], p: u64) -> Poly {
    let len = f.len().max(g.len());
    let out = (0..len)
        .map(|i| {
            let a = f.get(i).copied().unwrap_or(0);
            let b = g.get(i).copied().unwrap_or(0);
            (a + p - b) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(f: &[u64], g: &[u64], p: u64) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b) % p;
        }
    }
    trim(out)
}

/// Remainder of `f` modulo nonzero `g`.
pub(crate) fn rem(f: &[u64], g: &[u64], p: u64) -> Poly {
    let g = trim(g.to_vec());
    assert!(!g.is_empty(), "polynomial division by zero");
    let mut r = trim(f.to_vec());
    let lead_inv = inv_mod(*g.last().unwrap(), p);
    let dg = g.len() - 1;
    while r.len() > dg {
        let shift = r.len() - 1 - dg;
        let c = r.last().unwrap() * lead_inv % p;
        for (j, &b) in g.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - c * b % p) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn gcd(f: &[u64], g: &[u64], p: u64) -> Poly {
    let mut a = trim(f.to_vec());
    let mut b = trim(g.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

pub(crate) fn mulmod(f: &[u64], g: &[u64], m: &[u64], p: u64) -> Poly {
    rem(&mul(f, g, p), m, p)
}

/// `base^e mod m`.
pub(crate) fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Poly {
    let mut acc: Poly = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, m, p);
        }
        b = mulmod(&b, &b, m, p);
        e >>= 1;
    }
    rem(&acc, m, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_identity() {
        let p = 7;
        let f = vec![3, 0, 5, 1, 6];
        let g = vec![2, 1, 1];
        let r = rem(&f, &g, p);
        assert!(r.len() < g.len());
        // (f - r) is divisible by g: its gcd with g is g up to a unit
        let d = sub(&f, &r, p);
        assert!(rem(&d, &g, p).is_empty());
    }

    #[test]
    fn gcd_of_coprime_is_constant() {
        // x and x + 1 over F_3
        let g = gcd(&[0, 1], &[1, 1], 3);
        assert_eq!(g.len(), 1);
    }
}
