use super::level::{level_closed_form, level_recursive_oracle};
use super::structure::{group_structure, LevelSpec};
use crate::arith::{PhaseFraction, PrimeModulus};
use crate::error::{Error, Result};
use crate::poly::{Monomial, PhasePolynomial};

/// Refuse to scan more candidates than this.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, Default)]
pub struct EnumerationOptions {
    /// Keep every gate found (without global phase).
    pub collect_gates: bool,
    /// Number of evenly spaced candidates re-classified by the table oracle.
    pub oracle_samples: usize,
    /// Scan coefficients over `p^precision` instead of the smallest
    /// sufficient precision. Must not be below it.
    pub precision: Option<u32>,
}

#[derive(Debug, Clone)]
pub struct LevelEnumeration {
    /// Gates (modulo global phase) with level at most `w`.
    pub count: u64,
    /// `Π p^{m_{w,a}}` from [`group_structure`].
    pub expected: u128,
    pub candidates: u128,
    pub oracle_checked: usize,
    pub oracle_mismatches: usize,
    pub gates: Option<Vec<PhasePolynomial>>,
}

impl LevelEnumeration {
    pub fn matches(&self) -> bool {
        self.count as u128 == self.expected && self.oracle_mismatches == 0
    }
}

/// Scans every canonical polynomial of precision `<= M` (coefficients of all
/// nonzero monomials over `Z_{p^M}`) and counts those at level `<= w`.
///
/// Any gate at level `w` has precision at most `⌊(w-1)/(p-1)⌋ + 1`, so with
/// that `M` the scan covers `C^w_d` modulo global phase.
pub fn enumerate_level(spec: &LevelSpec, options: &EnumerationOptions) -> Result<LevelEnumeration> {
    let prime = spec.prime();
    let minimum = spec.max_precision();
    let precision = options.precision.unwrap_or(minimum);
    if precision < minimum {
        return Err(Error::InvalidArgument(format!(
            "precision {precision} is below the {minimum} needed for level {}",
            spec.level()
        )));
    }
    let q = prime.pow(precision)?;
    let monomials: Vec<Monomial> = spec.monomials().collect();
    let candidates = monomials
        .iter()
        .try_fold(1u128, |acc, _| acc.checked_mul(q as u128))
        .unwrap_or(u128::MAX);
    if candidates > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            candidates,
            limit: ENUMERATION_LIMIT,
        });
    }
    let sample_stride = if options.oracle_samples == 0 {
        u128::MAX
    } else {
        (candidates / options.oracle_samples as u128).max(1)
    };

    let mut digits = vec![0u64; monomials.len()];
    let mut result = LevelEnumeration {
        count: 0,
        expected: group_structure(spec)?.finite_order()?,
        candidates,
        oracle_checked: 0,
        oracle_mismatches: 0,
        gates: options.collect_gates.then(Vec::new),
    };
    for index in 0..candidates {
        let poly = build(prime, spec.qudits(), precision, &monomials, &digits)?;
        let level = level_closed_form(&poly);
        if level.level().is_some_and(|l| l <= spec.level()) {
            result.count += 1;
            if let Some(gates) = result.gates.as_mut() {
                gates.push(poly.clone());
            }
        }
        if index % sample_stride == 0 && result.oracle_checked < options.oracle_samples {
            result.oracle_checked += 1;
            if level_recursive_oracle(&poly.to_function_table()) != level {
                result.oracle_mismatches += 1;
            }
        }
        advance(&mut digits, q);
    }
    Ok(result)
}

fn build(
    prime: PrimeModulus,
    qudits: usize,
    precision: u32,
    monomials: &[Monomial],
    digits: &[u64],
) -> Result<PhasePolynomial> {
    let terms = monomials
        .iter()
        .zip(digits)
        .filter(|(_, &c)| c != 0)
        .map(|(m, &c)| (m.clone(), c as i64));
    PhasePolynomial::from_coefficients(prime, qudits, precision, terms, PhaseFraction::ZERO)
}

fn advance(digits: &mut [u64], q: u64) {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < q {
            return;
        }
        *d = 0;
    }
}

