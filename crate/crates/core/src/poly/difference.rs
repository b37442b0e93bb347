//! Finite differences of phase functions, and their inverse.

use super::polynomial::{Monomial, PhasePolynomial};
use super::table::{basis_digits, basis_index, stride, FunctionTable};
use crate::arith::{PhaseFraction, PrimeModulus};
use crate::error::{Error, Result};

/// `Δ_i θ(j) = θ(j) - θ(j - e_i)`, indices mod p.
///
/// For a diagonal gate `U` this is the diagonal `V_i` in
/// `U X(e_i) U† = V_i X(e_i)`.
pub fn shift_difference(table: &FunctionTable, direction: usize) -> Result<FunctionTable> {
    let n = table.qudits();
    if direction >= n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: direction + 1,
        });
    }
    let p = table.prime().get() as usize;
    let s = stride(p as u64, n, direction);
    let values = table.values();
    let out = (0..values.len())
        .map(|idx| {
            let digit = (idx / s) % p;
            let prev = if digit == 0 { idx + (p - 1) * s } else { idx - s };
            values[idx] - values[prev]
        })
        .collect();
    FunctionTable::new(table.prime(), n, out)
}

/// `θ(j) - θ(j - v)`: the diagonal `V` in `U X(v) U† = V X(v)`.
pub fn difference_along(table: &FunctionTable, v: &[u64]) -> Result<FunctionTable> {
    let n = table.qudits();
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: v.len(),
        });
    }
    let p = table.prime().get();
    let values = table.values();
    let out = (0..values.len())
        .map(|idx| {
            let back: Vec<u64> = basis_digits(idx, p, n)
                .iter()
                .zip(v)
                .map(|(&j, &vi)| (j + p - vi % p) % p)
                .collect();
            values[idx] - values[basis_index(&back, p)]
        })
        .collect();
    FunctionTable::new(table.prime(), n, out)
}

/// `(j^a - (j-1)^a) / p^m` as a canonical single-qudit polynomial.
///
/// Expands to `-Σ_{d<a} C(a,d)(-1)^{a-d} j^d`; the leading term is
/// `a·j^{a-1}` and the constant `(-1)^{a+1}` lands in the global phase.
pub fn monomial_difference(a: u32, prime: PrimeModulus, m: u32) -> Result<PhasePolynomial> {
    let p = prime.get();
    if a == 0 || a as u64 > p - 1 {
        return Err(Error::ExponentOutOfRange {
            exponent: a,
            max: p - 1,
        });
    }
    let mut binom: i128 = 1; // C(a, 0)
    let mut terms = Vec::with_capacity(a as usize);
    for d in 0..a {
        let sign = if (a - d) % 2 == 0 { 1 } else { -1 };
        let c_d = binom * sign;
        let coeff = i64::try_from(-c_d).map_err(|_| Error::Overflow("binomial coefficient".into()))?;
        terms.push((Monomial::new(vec![d], prime)?, coeff));
        binom = binom * (a - d) as i128 / (d + 1) as i128;
    }
    PhasePolynomial::from_coefficients(prime, 1, m, terms, PhaseFraction::ZERO)
}

/// Rebuilds `θ` with `θ(0) = 0` from `θ(j) - θ(j-1) = delta(j) + phi`.
///
/// The `p` equations only close up when `Σ_j delta(j) + p·phi ≡ 0 (mod 1)`.
pub fn integrate_difference(delta: &FunctionTable, phi: PhaseFraction) -> Result<FunctionTable> {
    if delta.qudits() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            actual: delta.qudits(),
        });
    }
    let p = delta.prime().get();
    let residual = delta.values().iter().copied().sum::<PhaseFraction>() + phi.scale(p as i64);
    if !residual.is_zero() {
        return Err(Error::InconsistentDifference {
            residual: residual.to_string(),
        });
    }
    let mut values = Vec::with_capacity(p as usize);
    let mut acc = PhaseFraction::ZERO;
    values.push(acc);
    for &d in &delta.values()[1..] {
        acc = acc + d + phi;
        values.push(acc);
    }
    FunctionTable::new(delta.prime(), 1, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn ph(n: i64, d: u64) -> PhaseFraction {
        PhaseFraction::new(n, d)
    }

    fn table(p: u64, n: usize, values: &[PhaseFraction]) -> FunctionTable {
        FunctionTable::new(prime(p), n, values.to_vec()).unwrap()
    }

    #[test]
    fn difference_of_t() {
        // V with T X T† = V X: V(0) = θ(0) - θ(1), V(1) = θ(1) - θ(0)
        let d = shift_difference(&table(2, 1, &[ph(0, 1), ph(1, 8)]), 0).unwrap();
        assert_eq!(d.values(), &[ph(7, 8), ph(1, 8)]);
    }

    #[test]
    fn difference_of_qutrit_z_is_constant() {
        let d = shift_difference(&table(3, 1, &[ph(0, 1), ph(1, 3), ph(2, 3)]), 0).unwrap();
        assert_eq!(d.values(), &[ph(1, 3); 3]);
    }

    #[test]
    fn difference_of_cz() {
        let cz = table(2, 2, &[ph(0, 1), ph(0, 1), ph(0, 1), ph(1, 2)]);
        let expect = [ph(0, 1), ph(1, 2), ph(0, 1), ph(1, 2)];
        assert_eq!(shift_difference(&cz, 0).unwrap().values(), &expect);
        assert!(shift_difference(&cz, 2).is_err());
        assert_eq!(difference_along(&cz, &[1, 0]).unwrap(), shift_difference(&cz, 0).unwrap());
        // Δ_(1,1) CZ: θ(j) - θ(j-1,j-1) = (j1 + j2 - 1)/2
        let diag = difference_along(&cz, &[1, 1]).unwrap();
        assert_eq!(diag.values(), &[ph(1, 2), ph(0, 1), ph(0, 1), ph(1, 2)]);
    }

    #[test]
    fn monomial_difference_examples() {
        let d2 = monomial_difference(2, prime(5), 1).unwrap();
        assert_eq!(d2.coefficient(&[1]), 2);
        assert_eq!(d2.global_phase(), ph(4, 5));
        assert_eq!(d2.coefficients().len(), 1);

        let d3 = monomial_difference(3, prime(5), 1).unwrap();
        assert_eq!(d3.coefficient(&[2]), 3);
        assert_eq!(d3.coefficient(&[1]), 2); // -3 mod 5
        assert_eq!(d3.global_phase(), ph(1, 5));

        let d1 = monomial_difference(1, prime(7), 2).unwrap();
        assert!(d1.is_trivial());
        assert_eq!(d1.global_phase(), ph(1, 49));

        assert!(monomial_difference(5, prime(5), 1).is_err());
    }

    /// Cross-checks against j^a - (j-1)^a computed in plain integers.
    #[test]
    fn monomial_difference_matches_integer_expansion() {
        for p in [2u64, 3, 5, 7] {
            for m in 1..=3 {
                let q = p.pow(m) as i64;
                for a in 1..p as u32 {
                    let poly = monomial_difference(a, prime(p), m).unwrap();
                    if a > 1 {
                        assert_eq!(poly.coefficient(&[a - 1]) as i64, a as i64 % q);
                    }
                    for j in 0..p {
                        let exact = (j as i64).pow(a) - (j as i64 - 1).pow(a);
                        assert_eq!(poly.evaluate(&[j]).unwrap(), ph(exact, q as u64));
                    }
                }
            }
        }
    }

    #[test]
    fn integrate_examples() {
        let s = integrate_difference(&table(2, 1, &[ph(3, 4), ph(1, 4)]), PhaseFraction::ZERO).unwrap();
        assert_eq!(s.values(), &[ph(0, 1), ph(1, 4)]);

        let z = integrate_difference(&table(3, 1, &[ph(1, 3); 3]), PhaseFraction::ZERO).unwrap();
        assert_eq!(z.values(), &[ph(0, 1), ph(1, 3), ph(2, 3)]);

        let with_phi = integrate_difference(&table(2, 1, &[ph(1, 2), ph(0, 1)]), ph(1, 4)).unwrap();
        assert_eq!(with_phi.values(), &[ph(0, 1), ph(1, 4)]);
    }

    #[test]
    fn integrate_rejects_open_cycles() {
        assert!(matches!(
            integrate_difference(&table(2, 1, &[ph(1, 4), ph(0, 1)]), PhaseFraction::ZERO),
            Err(Error::InconsistentDifference { .. })
        ));
        let two = table(2, 2, &[PhaseFraction::ZERO; 4]);
        assert!(integrate_difference(&two, PhaseFraction::ZERO).is_err());
    }
}
