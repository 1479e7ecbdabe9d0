//! Prime fields GF(p).

use core::fmt;

/// Largest modulus accepted; keeps every product of two residues inside `u64`.
pub const MAX_MODULUS: u64 = (1 << 32) - 1;

/// The prime field GF(p). Residues are stored as `u64` in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    TooLarge(u64),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "modulus {p} is not prime"),
            FieldError::TooLarge(p) => write!(f, "modulus {p} exceeds {MAX_MODULUS}"),
        }
    }
}

impl core::error::Error for FieldError {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p > MAX_MODULUS {
            return Err(FieldError::TooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
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

    /// `a + b*c`.
    #[inline]
    pub fn mul_add(self, a: u64, b: u64, c: u64) -> u64 {
        (a + b * c) % self.p
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn from_i64(self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn reduce(self, v: u64) -> u64 {
        v % self.p
    }

    /// `dst += c * src`, entrywise.
    #[inline]
    pub fn axpy(self, dst: &mut [u64], c: u64, src: &[u64]) {
        if c == 0 {
            return;
        }
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = (*d + c * s) % self.p;
        }
    }

    pub fn scale_in_place(self, v: &mut [u64], c: u64) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert_eq!(PrimeField::new(1), Err(FieldError::NotPrime(1)));
        assert_eq!(PrimeField::new(91), Err(FieldError::NotPrime(91)));
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn inverses() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.from_i64(-1), 100);
    }
}
