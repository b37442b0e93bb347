use std::fmt;

use super::{checked_pow, mod_add, mod_inv, mod_mul, mod_pow, mod_signed, mod_sub};
use crate::error::{Error, Result};

/// A prime qudit dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    /// Accepts `p` only if it is prime (deterministic trial division).
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Self(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// `p^m`, or an overflow error.
    pub fn pow(self, m: u32) -> Result<u64> {
        checked_pow(self.0, m)
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of `Z_{p^m}` with `m >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    exponent: u32,
    prime: PrimeModulus,
    modulus: u64,
}

impl Residue {
    pub fn new(value: i64, prime: PrimeModulus, exponent: u32) -> Result<Self> {
        if exponent == 0 {
            return Err(Error::InvalidArgument(
                "residue ring exponent must be at least 1".into(),
            ));
        }
        let modulus = prime.pow(exponent)?;
        Ok(Self {
            value: mod_signed(value as i128, modulus),
            exponent,
            prime,
            modulus,
        })
    }

    pub(crate) fn from_reduced(value: u64, prime: PrimeModulus, exponent: u32, modulus: u64) -> Self {
        debug_assert!(value < modulus);
        Self {
            value,
            exponent,
            prime,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn prime(&self) -> PrimeModulus {
        self.prime
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.prime != other.prime || self.exponent != other.exponent {
            return Err(Error::ModulusMismatch {
                left: format!("{}^{}", self.prime, self.exponent),
                right: format!("{}^{}", other.prime, other.exponent),
            });
        }
        Ok(())
    }

    fn with_value(&self, value: u64) -> Self {
        Self { value, ..*self }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.with_value(mod_add(self.value, other.value, self.modulus)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.with_value(mod_sub(self.value, other.value, self.modulus)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.with_value(mod_mul(self.value, other.value, self.modulus)))
    }

    pub fn pow(&self, exp: u64) -> Self {
        self.with_value(mod_pow(self.value, exp, self.modulus))
    }

    pub fn neg(&self) -> Self {
        self.with_value(mod_sub(0, self.value, self.modulus))
    }

    /// Multiplicative inverse; fails when `p` divides the value.
    pub fn unit_inverse(&self) -> Result<Self> {
        mod_inv(self.value, self.modulus)
            .map(|inv| self.with_value(inv))
            .ok_or(Error::NotAUnit {
                value: self.value,
                modulus: self.modulus,
            })
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}
