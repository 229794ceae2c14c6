use crate::error::{Error, Result};

use super::{Field, MAX_FIELD_ORDER};

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The prime field `F_p`, `p` an odd prime. Elements are residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p <= 2 || !is_prime(p) {
            return Err(Error::InvalidCharacteristic(p));
        }
        if p >= MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge { p: u32::MAX, n: 1 });
        }
        Ok(Self { p: p as u32 })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn characteristic(&self) -> u32 {
        self.p
    }

    fn degree(&self) -> usize {
        1
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    #[inline]
    fn add(&self, x: u32, y: u32) -> u32 {
        let s = x + y;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn neg(&self, x: u32) -> u32 {
        if x == 0 {
            0
        } else {
            self.p - x
        }
    }

    #[inline]
    fn mul(&self, x: u32, y: u32) -> u32 {
        ((x as u64 * y as u64) % self.p as u64) as u32
    }

    fn inv(&self, x: u32) -> Result<u32> {
        if x == 0 {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid on (x, p)
        let (mut r0, mut r1) = (self.p as i64, x as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(self.reduce(t0))
    }

    fn from_int(&self, v: i64) -> u32 {
        self.reduce(v)
    }

    fn alpha_pow(&self, _i: usize) -> u32 {
        1
    }

    fn to_residues(&self, x: u32) -> Vec<u32> {
        vec![x]
    }

    fn from_residues(&self, residues: &[u32]) -> Result<u32> {
        match residues {
            [r] => Ok(r % self.p),
            _ => Err(Error::DimensionMismatch {
                expected: 1,
                found: residues.len(),
            }),
        }
    }

    fn element_at(&self, index: u64) -> u32 {
        (index % self.p as u64) as u32
    }

    fn index_of(&self, x: u32) -> u64 {
        x as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_characteristic() {
        for p in [0, 1, 2, 4, 9, 15] {
            assert_eq!(PrimeField::new(p), Err(Error::InvalidCharacteristic(p)));
        }
        assert!(PrimeField::new(3).is_ok());
    }

    #[test]
    fn small_examples() {
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(f3.add(1, 2), 0);
        assert_eq!(f3.mul(2, 2), 1);

        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.inv(1), Ok(1));
        assert_eq!(f5.inv(2), Ok(3));
        assert_eq!(f5.inv(4), Ok(4));
        assert_eq!(f5.inv(0), Err(Error::DivisionByZero));
        assert_eq!(f5.from_int(-1), 4);
    }

    #[test]
    fn inverse_agrees_with_fermat() {
        for p in [3u64, 5, 7, 11, 13, 31] {
            let f = PrimeField::new(p).unwrap();
            for x in 1..p as u32 {
                assert_eq!(f.inv(x).unwrap(), f.pow(x, p - 2));
            }
        }
    }
}
