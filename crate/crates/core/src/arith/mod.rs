//! Exact arithmetic substrate: residue rings `Z_{p^m}`, phases in `Q/Z`, and
//! power sums via Bernoulli numbers.

mod faulhaber;
mod phase;
mod residue;

pub use faulhaber::{power_sum_direct, power_sum_faulhaber, BernoulliTable};
pub use phase::PhaseFraction;
pub use residue::{PrimeModulus, Residue};

use crate::error::{Error, Result};

/// Checked `base^exp` in `u64`.
pub(crate) fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp)
        .ok_or_else(|| Error::Overflow(format!("{base}^{exp} does not fit in 64 bits")))
}

pub(crate) fn mod_add(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 + b as u128) % q as u128) as u64
}

pub(crate) fn mod_sub(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 + q as u128 - (b % q) as u128) % q as u128) as u64
}

pub(crate) fn mod_mul(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1 % q;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, q);
        }
        base = mod_mul(base, base, q);
        exp >>= 1;
    }
    acc
}

/// Reduces a signed integer into `[0, q)`.
pub(crate) fn mod_signed(a: i128, q: u64) -> u64 {
    a.rem_euclid(q as i128) as u64
}

/// Inverse of `a` modulo `q` via the extended Euclidean algorithm.
pub(crate) fn mod_inv(a: u64, q: u64) -> Option<u64> {
    use num_integer::Integer;
    let a = (a % q) as i128;
    let ext = a.extended_gcd(&(q as i128));
    if ext.gcd != 1 {
        return None;
    }
    Some(mod_signed(ext.x, q))
}

/// p-adic valuation of a nonzero integer.
pub(crate) fn valuation(mut value: u64, p: u64) -> u32 {
    debug_assert!(value != 0);
    let mut v = 0;
    while value % p == 0 {
        value /= p;
        v += 1;
    }
    v
}
