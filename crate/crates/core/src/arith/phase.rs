use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A phase `exp(2πi · num/den)` held as a reduced fraction of a full turn,
/// modulo 1.
///
/// Arithmetic panics if a denominator would leave `u64`; every phase this
/// crate builds has a denominator of the form `p^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PhaseFraction {
    num: u64,
    den: u64,
}

impl Default for PhaseFraction {
    fn default() -> Self {
        Self::ZERO
    }
}

impl PhaseFraction {
    pub const ZERO: Self = Self { num: 0, den: 1 };

    /// `num/den` reduced modulo 1. Panics on a zero denominator.
    pub fn new(num: i64, den: u64) -> Self {
        Self::from_i128(num as i128, den)
    }

    pub fn try_new(num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self::new(num, den))
    }

    pub(crate) fn from_i128(num: i128, den: u64) -> Self {
        assert!(den > 0, "phase denominator must be positive");
        let r = num.rem_euclid(den as i128) as u64;
        let g = r.gcd(&den);
        Self {
            num: r / g,
            den: den / g,
        }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// True when the denominator is `p^k` for some `k >= 0`.
    pub fn p_power(&self, p: u64) -> bool {
        self.den_exponent(p).is_some()
    }

    /// The `k` with `den = p^k`, if any.
    pub fn den_exponent(&self, p: u64) -> Option<u32> {
        let mut d = self.den;
        let mut k = 0;
        while d % p == 0 {
            d /= p;
            k += 1;
        }
        (d == 1).then_some(k)
    }

    /// Numerator over `p^m`: returns `u` with `self = u / p^m`, when the
    /// denominator divides `p^m`.
    pub fn scaled_numerator(&self, modulus: u64) -> Option<u64> {
        (modulus % self.den == 0).then(|| self.num * (modulus / self.den))
    }

    /// `k · self` modulo 1.
    pub fn scale(&self, k: i64) -> Self {
        Self::from_i128(self.num as i128 * k as i128, self.den)
    }
}

impl Add for PhaseFraction {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let den = self.den.lcm(&rhs.den);
        let num = self.num as i128 * (den / self.den) as i128 + rhs.num as i128 * (den / rhs.den) as i128;
        Self::from_i128(num, den)
    }
}

impl AddAssign for PhaseFraction {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Neg for PhaseFraction {
    type Output = Self;

    fn neg(self) -> Self {
        Self::from_i128(-(self.num as i128), self.den)
    }
}

impl Sub for PhaseFraction {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl std::iter::Sum for PhaseFraction {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl fmt::Display for PhaseFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for PhaseFraction {
    type Err = Error;

    /// Parses `num/den` or a bare integer (which is `0` modulo 1).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse phase `{s}` (expected num/den)"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: i64 = num.parse().map_err(|_| bad())?;
        let den: u64 = den.parse().map_err(|_| bad())?;
        Self::try_new(num, den)
    }
}
