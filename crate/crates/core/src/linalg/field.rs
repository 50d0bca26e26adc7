use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The prime field GF(p). Residues are stored as `u32` in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + self.p as u64 - b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u32) -> u32 {
        assert!(
            !a.is_multiple_of(self.p),
            "inverse of zero in GF({})",
            self.p
        );
        // Fermat: a^(p-2)
        let mut base = a as u64 % self.p as u64;
        let mut exp = self.p as u64 - 2;
        let m = self.p as u64;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        acc as u32
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    pub fn reduce(self, value: i64) -> u32 {
        value.rem_euclid(self.p as i64) as u32
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

impl TryFrom<u32> for PrimeField {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u32 {
    fn from(f: PrimeField) -> u32 {
        f.p
    }
}

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
