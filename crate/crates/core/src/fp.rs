//! Scalar arithmetic in a prime field of word-sized characteristic.
//!
//! Everything downstream (section matrices, echelon forms, Koszul ranks)
//! works with elements stored as `u64` values in `[0, p)`.

use serde::Serialize;
use thiserror::Error;

/// Exclusive upper bound for accepted primes.
///
/// The echelon kernels accumulate `c * x` products without intermediate
/// reduction, which stays below `2^63` for up to `2^22` accumulations as
/// long as `p < 2^20`.
pub const MAX_PRIME: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} outside the supported range [5, 2^20)")]
    PrimeOutOfRange(u64),
}

/// A prime modulus, validated once at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !(5..MAX_PRIME).contains(&p) {
            return Err(FieldError::PrimeOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    /// Reduce a signed integer into `[0, p)`.
    #[inline]
    pub fn from_i64(self, v: i64) -> u64 {
        let m = self.p as i64;
        (v.rem_euclid(m)) as u64
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        base %= self.p;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0, "division by zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    /// Legendre symbol: 1 for nonzero squares, -1 for non-squares, 0 for 0.
    pub fn legendre(self, a: u64) -> i32 {
        if a % self.p == 0 {
            return 0;
        }
        if self.pow(a, (self.p - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }

    /// A square root of `a`, if one exists (Tonelli-Shanks; shortcut for
    /// p = 3 mod 4).
    pub fn sqrt(self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            return Some(0);
        }
        if self.legendre(a) != 1 {
            return None;
        }
        if self.p % 4 == 3 {
            return Some(self.pow(a, (self.p + 1) / 4));
        }
        // Tonelli-Shanks: write p-1 = q * 2^s with q odd.
        let mut q = self.p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2u64;
        while self.legendre(z) != -1 {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let b = self.pow(c, 1 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes_and_out_of_range() {
        assert!(matches!(PrimeField::new(10008), Err(FieldError::NotPrime(_))));
        assert!(matches!(PrimeField::new(4), Err(FieldError::PrimeOutOfRange(_))));
        assert!(matches!(
            PrimeField::new(1 << 20),
            Err(FieldError::PrimeOutOfRange(_))
        ));
        assert!(PrimeField::new(10007).is_ok());
        assert!(PrimeField::new(10009).is_ok());
    }

    #[test]
    fn sqrt_roundtrip() {
        for &p in &[10007u64, 10009, 65537, 5] {
            let f = PrimeField::new(p).unwrap();
            let mut found = 0;
            for a in 1..200u64.min(p) {
                if let Some(r) = f.sqrt(a) {
                    assert_eq!(f.mul(r, r), a % p);
                    found += 1;
                }
            }
            assert!(found > 0);
        }
    }

    #[test]
    fn inv_is_inverse() {
        let f = PrimeField::new(10007).unwrap();
        for a in 1..100 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn from_i64_reduces_negatives() {
        let f = PrimeField::new(10007).unwrap();
        assert_eq!(f.from_i64(-1), 10006);
        assert_eq!(f.from_i64(-10007), 0);
        assert_eq!(f.from_i64(3), 3);
    }
}
