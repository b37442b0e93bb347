//! Phase-polynomial representation of diagonal gates.

mod difference;
mod polynomial;
mod table;

pub use difference::{difference_along, integrate_difference, monomial_difference, shift_difference};
pub use polynomial::{Monomial, PhasePolynomial};
pub use table::{basis_digits, basis_index, basis_size, FunctionTable};


#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PhaseFraction, PrimeModulus};
    use proptest::prelude::*;
    use std::collections::HashSet;

    /// Random canonical polynomial via random coefficients over `p^m`.
    fn arb_poly() -> impl Strategy<Value = PhasePolynomial> {
        (0usize..3, 1usize..3, 1u32..4).prop_flat_map(|(pi, n, m)| {
            let p = [2u64, 3, 5][pi];
            let size = (p as usize).pow(n as u32);
            let q = p.pow(m) as i64;
            (
                proptest::collection::vec(0..q, size),
                (0i64..16, Just(16u64)),
            )
                .prop_map(move |(coeffs, (g, gd))| {
                    let prime = PrimeModulus::new(p).unwrap();
                    let terms = coeffs.into_iter().enumerate().map(|(idx, c)| {
                        (Monomial::from_digits(basis_digits(idx, p, n)), c)
                    });
                    PhasePolynomial::from_coefficients(prime, n, m, terms, PhaseFraction::new(g, gd)).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn round_trip(poly in arb_poly()) {
            let table = poly.to_function_table();
            prop_assert_eq!(PhasePolynomial::from_function_table(&table).unwrap(), poly);
        }

        #[test]
        fn integrate_inverts_difference(poly in arb_poly()) {
            prop_assume!(poly.qudits() == 1);
            let table = poly.to_function_table();
            let diff = shift_difference(&table, 0).unwrap();
            let back = integrate_difference(&diff, PhaseFraction::ZERO).unwrap();
            prop_assert_eq!(back, table.normalized());
        }
    }

    #[test]
    fn all_qutrit_tables_interpolate_uniquely() {
        let prime = PrimeModulus::new(3).unwrap();
        let mut seen = HashSet::new();
        for code in 0..27u32 {
            let values = (0..3).map(|k| PhaseFraction::new(((code / 3u32.pow(k)) % 3) as i64, 3)).collect();
            let table = FunctionTable::new(prime, 1, values).unwrap();
            let poly = PhasePolynomial::from_function_table(&table).unwrap();
            assert_eq!(poly.to_function_table(), table);
            assert!(seen.insert(poly));
        }
        assert_eq!(seen.len(), 27);
    }
}
