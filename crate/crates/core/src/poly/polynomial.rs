use std::collections::BTreeMap;
use std::fmt;

use super::table::{basis_digits, basis_size, stride, FunctionTable};
use crate::arith::{mod_add, mod_inv, mod_mul, mod_pow, mod_signed, PhaseFraction, PrimeModulus};
use crate::error::{Error, Result};

/// Exponent vector of a monomial `j_1^{a_1} ⋯ j_n^{a_n}`, each `a_i <= p - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>, prime: PrimeModulus) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::InvalidArgument("monomial needs at least one variable".into()));
        }
        let max = prime.get() - 1;
        if let Some(&bad) = exponents.iter().find(|&&a| a as u64 > max) {
            return Err(Error::ExponentOutOfRange { exponent: bad, max });
        }
        Ok(Self(exponents))
    }

    pub(crate) fn from_digits(digits: Vec<u64>) -> Self {
        Self(digits.into_iter().map(|d| d as u32).collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn qudits(&self) -> usize {
        self.0.len()
    }

    /// `wt(a) = Σ a_i`.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// `Π j_i^{a_i} mod q`, with `j_i` taken as integers in `[0, p)`.
    pub fn eval_mod(&self, j: &[u64], q: u64) -> u64 {
        self.0
            .iter()
            .zip(j)
            .fold(1 % q, |acc, (&a, &ji)| mod_mul(acc, mod_pow(ji, a as u64, q), q))
    }

    fn write_vars(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let single = self.0.len() == 1;
        let mut first = true;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if single {
                write!(f, "j")?;
            } else {
                write!(f, "j{}", i + 1)?;
            }
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        self.write_vars(f)
    }
}

/// Canonical phase polynomial: `θ(j) = global + Σ_a c_a j^a / p^M`.
///
/// Per-variable degrees stay at most `p - 1`, coefficients live in
/// `[1, p^M)`, `M` is minimal (some coefficient is a unit), and the constant
/// term is folded into `global_phase`. Under these rules every diagonal gate
/// with p-power phases has exactly one representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhasePolynomial {
    prime: PrimeModulus,
    qudits: usize,
    precision: u32,
    coefficients: BTreeMap<Monomial, u64>,
    global_phase: PhaseFraction,
}

impl PhasePolynomial {
    /// The identity gate (optionally with a global phase).
    pub fn identity(prime: PrimeModulus, qudits: usize, global_phase: PhaseFraction) -> Self {
        Self {
            prime,
            qudits,
            precision: 0,
            coefficients: BTreeMap::new(),
            global_phase,
        }
    }

    /// Builds a polynomial from integer coefficients over `Z_{p^precision}`
    /// and canonicalises it. Constant monomials are folded into the global phase.
    pub fn from_coefficients(
        prime: PrimeModulus,
        qudits: usize,
        precision: u32,
        coefficients: impl IntoIterator<Item = (Monomial, i64)>,
        global_phase: PhaseFraction,
    ) -> Result<Self> {
        let q = prime.pow(precision)?;
        let mut global = global_phase;
        let mut map = BTreeMap::new();
        for (mono, c) in coefficients {
            if mono.qudits() != qudits {
                return Err(Error::DimensionMismatch {
                    expected: qudits,
                    actual: mono.qudits(),
                });
            }
            if mono.is_constant() {
                global += PhaseFraction::from_i128(c as i128, q);
                continue;
            }
            let slot = map.entry(mono).or_insert(0u64);
            *slot = mod_add(*slot, mod_signed(c as i128, q), q);
        }
        Ok(Self::canonical(prime, qudits, precision, map, global))
    }

    /// Builds a polynomial whose monomial coefficients are given as phases
    /// `c/p^e` (terms may carry different `e`).
    pub fn from_phase_terms(
        prime: PrimeModulus,
        qudits: usize,
        terms: impl IntoIterator<Item = (Monomial, PhaseFraction)>,
        global_phase: PhaseFraction,
    ) -> Result<Self> {
        let p = prime.get();
        let terms: Vec<_> = terms.into_iter().collect();
        let mut precision = 0;
        for (_, c) in &terms {
            let e = c.den_exponent(p).ok_or_else(|| Error::NotInHierarchy {
                phase: c.to_string(),
                p,
            })?;
            precision = precision.max(e);
        }
        let q = prime.pow(precision)?;
        let ints = terms.into_iter().map(|(m, c)| {
            let u = c.scaled_numerator(q).expect("denominator divides p^precision");
            (m, u as i64)
        });
        Self::from_coefficients(prime, qudits, precision, ints, global_phase)
    }

    /// `U_{m,a}^power`: the gate `exp(2πi · power · j^a / p^m)`.
    pub fn generator(prime: PrimeModulus, m: u32, exponents: Vec<u32>, power: i64) -> Result<Self> {
        let qudits = exponents.len();
        let mono = Monomial::new(exponents, prime)?;
        Self::from_coefficients(prime, qudits, m, [(mono, power)], PhaseFraction::ZERO)
    }

    fn canonical(
        prime: PrimeModulus,
        qudits: usize,
        mut precision: u32,
        mut map: BTreeMap<Monomial, u64>,
        global_phase: PhaseFraction,
    ) -> Self {
        let p = prime.get();
        map.retain(|_, c| *c != 0);
        while precision > 0 && map.values().all(|c| c % p == 0) {
            for c in map.values_mut() {
                *c /= p;
            }
            precision -= 1;
        }
        if map.is_empty() {
            precision = 0;
        }
        Self {
            prime,
            qudits,
            precision,
            coefficients: map,
            global_phase,
        }
    }

    pub fn prime(&self) -> PrimeModulus {
        self.prime
    }

    pub fn qudits(&self) -> usize {
        self.qudits
    }

    /// The minimal `M` such that all coefficients live over `p^M`.
    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// `p^M`.
    pub fn modulus(&self) -> u64 {
        self.prime.pow(self.precision).expect("precision validated at construction")
    }

    pub fn global_phase(&self) -> PhaseFraction {
        self.global_phase
    }

    pub fn coefficients(&self) -> &BTreeMap<Monomial, u64> {
        &self.coefficients
    }

    pub fn coefficient(&self, exponents: &[u32]) -> u64 {
        self.coefficients
            .iter()
            .find(|(m, _)| m.exponents() == exponents)
            .map_or(0, |(_, &c)| c)
    }

    /// True if only a global phase remains.
    pub fn is_trivial(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn without_global_phase(&self) -> Self {
        Self {
            global_phase: PhaseFraction::ZERO,
            ..self.clone()
        }
    }

    /// `θ(j)` with every `j_i` read as an integer in `[0, p)`.
    pub fn evaluate(&self, j: &[u64]) -> Result<PhaseFraction> {
        if j.len() != self.qudits {
            return Err(Error::DimensionMismatch {
                expected: self.qudits,
                actual: j.len(),
            });
        }
        if let Some(&bad) = j.iter().find(|&&c| c >= self.prime.get()) {
            return Err(Error::InvalidArgument(format!(
                "basis component {bad} outside Z_{}",
                self.prime
            )));
        }
        let q = self.modulus();
        let sum = self
            .coefficients
            .iter()
            .fold(0, |acc, (m, &c)| mod_add(acc, mod_mul(c, m.eval_mod(j, q), q), q));
        Ok(PhaseFraction::from_i128(sum as i128, q) + self.global_phase)
    }

    pub fn to_function_table(&self) -> FunctionTable {
        FunctionTable::from_fn(self.prime, self.qudits, |j| {
            self.evaluate(j).expect("basis digits are in range")
        })
        .expect("polynomial shape is valid")
    }

    /// Interpolates the unique canonical polynomial of a phase table.
    ///
    /// The table value at `j = 0` becomes the global phase. Each axis is
    /// transformed with the Lagrange basis `δ_k(j) = Π_{k'≠k} (j-k')/(k-k')`,
    /// whose denominators are units modulo `p^M`.
    pub fn from_function_table(table: &FunctionTable) -> Result<Self> {
        let prime = table.prime();
        let p = prime.get();
        if let Some(bad) = table.non_p_power_entry() {
            return Err(Error::NotInHierarchy {
                phase: bad.to_string(),
                p,
            });
        }
        let precision = table.precision().expect("checked above");
        let global = table.values()[0];
        if precision == 0 {
            return Ok(Self::identity(prime, table.qudits(), global));
        }
        let q = prime.pow(precision)?;
        let mut data: Vec<u64> = table
            .values()
            .iter()
            .map(|&v| (v - global).scaled_numerator(q).expect("denominator divides p^M"))
            .collect();

        let basis = lagrange_basis(p, q);
        let n = table.qudits();
        let pu = p as usize;
        let mut fiber = vec![0u64; pu];
        for axis in 0..n {
            let s = stride(p, n, axis);
            for start in 0..data.len() {
                if (start / s) % pu != 0 {
                    continue;
                }
                for (k, slot) in fiber.iter_mut().enumerate() {
                    *slot = data[start + k * s];
                }
                for d in 0..pu {
                    let coeff = (0..pu).fold(0, |acc, k| mod_add(acc, mod_mul(basis[k][d], fiber[k], q), q));
                    data[start + d * s] = coeff;
                }
            }
        }

        let size = basis_size(prime, n)?;
        let map = (1..size)
            .filter(|&idx| data[idx] != 0)
            .map(|idx| (Monomial::from_digits(basis_digits(idx, p, n)), data[idx]))
            .collect();
        let poly = Self::canonical(prime, n, precision, map, PhaseFraction::ZERO);
        debug_assert_eq!(data[0], 0);
        Ok(Self {
            global_phase: global,
            ..poly
        })
    }

    /// Phase polynomial of the gate product `self · other`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.prime != other.prime || self.qudits != other.qudits {
            return Err(Error::DimensionMismatch {
                expected: self.qudits,
                actual: other.qudits,
            });
        }
        let precision = self.precision.max(other.precision);
        let q = self.prime.pow(precision)?;
        let lift = |poly: &Self| -> Vec<(Monomial, i64)> {
            let scale = q / poly.modulus();
            poly.coefficients
                .iter()
                .map(|(m, &c)| (m.clone(), mod_mul(c, scale, q) as i64))
                .collect()
        };
        Self::from_coefficients(
            self.prime,
            self.qudits,
            precision,
            lift(self).into_iter().chain(lift(other)),
            self.global_phase + other.global_phase,
        )
    }
}

/// `basis[k][d]`: coefficient of `j^d` in `δ_k(j)` modulo `q`.
fn lagrange_basis(p: u64, q: u64) -> Vec<Vec<u64>> {
    (0..p)
        .map(|k| {
            // numerator Π_{k'≠k} (j - k'), low degree first
            let mut num = vec![1u64];
            let mut den: i128 = 1;
            for other in (0..p).filter(|&o| o != k) {
                let mut next = vec![0u64; num.len() + 1];
                for (d, &c) in num.iter().enumerate() {
                    next[d + 1] = mod_add(next[d + 1], c, q);
                    next[d] = mod_add(next[d], mod_mul(c, mod_signed(-(other as i128), q), q), q);
                }
                num = next;
                den *= k as i128 - other as i128;
            }
            let inv = mod_inv(mod_signed(den, q), q).expect("Lagrange denominators are units mod p^M");
            num.iter().map(|&c| mod_mul(c, inv, q)).collect()
        })
        .collect()
}

impl fmt::Display for PhasePolynomial {
    /// Renders the non-constant part, e.g. `(2j^2 + 2j)/3` or `j/8`; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.coefficients.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.weight().cmp(&a.weight()).then_with(|| b.cmp(a)));
        let grouped = terms.len() > 1;
        if grouped {
            write!(f, "(")?;
        }
        for (i, (mono, &c)) in terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c != 1 {
                write!(f, "{c}")?;
            }
            mono.write_vars(f)?;
        }
        if grouped {
            write!(f, ")")?;
        }
        write!(f, "/{}", self.modulus())
    }
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

    fn poly(p: u64, m: u32, terms: &[(&[u32], i64)]) -> PhasePolynomial {
        let n = terms.first().map_or(1, |t| t.0.len());
        PhasePolynomial::from_coefficients(
            prime(p),
            n,
            m,
            terms.iter().map(|(e, c)| (Monomial::new(e.to_vec(), prime(p)).unwrap(), *c)),
            PhaseFraction::ZERO,
        )
        .unwrap()
    }

    fn table(p: u64, n: usize, values: &[PhaseFraction]) -> FunctionTable {
        FunctionTable::new(prime(p), n, values.to_vec()).unwrap()
    }

    #[test]
    fn monomial_bounds() {
        assert!(matches!(
            Monomial::new(vec![2], prime(2)),
            Err(Error::ExponentOutOfRange { exponent: 2, max: 1 })
        ));
        let m = Monomial::new(vec![1, 2, 0], prime(3)).unwrap();
        assert_eq!(m.weight(), 3);
        assert_eq!(m.to_string(), "j1*j2^2");
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(poly(2, 3, &[(&[1], 1)]).evaluate(&[1]).unwrap(), ph(1, 8));
        assert_eq!(poly(3, 1, &[(&[2], 2), (&[1], 2)]).evaluate(&[1]).unwrap(), ph(1, 3));
        assert_eq!(poly(2, 1, &[(&[1, 1], 1)]).evaluate(&[1, 1]).unwrap(), ph(1, 2));
        assert!(matches!(
            poly(2, 1, &[(&[1, 1], 1)]).evaluate(&[1]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(poly(2, 1, &[(&[1], 1)]).evaluate(&[2]).is_err());
    }

    #[test]
    fn tables_of_standard_gates() {
        assert_eq!(poly(2, 2, &[(&[1], 1)]).to_function_table().values(), &[ph(0, 1), ph(1, 4)]);
        assert_eq!(
            poly(3, 1, &[(&[2], 1)]).to_function_table().values(),
            &[ph(0, 1), ph(1, 3), ph(1, 3)]
        );
        assert_eq!(
            poly(2, 1, &[(&[1, 1], 1)]).to_function_table().values(),
            &[ph(0, 1), ph(0, 1), ph(0, 1), ph(1, 2)]
        );
    }

    #[test]
    fn interpolation_examples() {
        let t = PhasePolynomial::from_function_table(&table(2, 1, &[ph(0, 1), ph(1, 8)])).unwrap();
        assert_eq!(t, poly(2, 3, &[(&[1], 1)]));
        assert_eq!(t.precision(), 3);
        assert_eq!(t.to_string(), "j/8");

        // phase gate on |1> for p = 3: δ_1(j) = 2j^2 + 2j
        let p1 = PhasePolynomial::from_function_table(&table(3, 1, &[ph(0, 1), ph(1, 3), ph(0, 1)])).unwrap();
        assert_eq!(p1.coefficient(&[1]), 2);
        assert_eq!(p1.coefficient(&[2]), 2);
        assert_eq!(p1.precision(), 1);
        assert_eq!(p1.to_string(), "(2j^2 + 2j)/3");

        assert!(matches!(
            PhasePolynomial::from_function_table(&table(2, 1, &[ph(0, 1), ph(1, 3)])),
            Err(Error::NotInHierarchy { .. })
        ));
    }

    #[test]
    fn interpolation_moves_offset_into_global_phase() {
        let q = PhasePolynomial::from_function_table(&table(2, 1, &[ph(1, 8), ph(3, 8)])).unwrap();
        assert_eq!(q.global_phase(), ph(1, 8));
        assert_eq!(q.without_global_phase(), poly(2, 2, &[(&[1], 1)]));
    }

    #[test]
    fn canonical_precision_is_minimal() {
        // 2j/4 is j/2
        let q = poly(2, 2, &[(&[1], 2)]);
        assert_eq!(q.precision(), 1);
        assert_eq!(q.coefficient(&[1]), 1);
        // 9j/9 vanishes entirely
        let z = poly(3, 2, &[(&[1], 9)]);
        assert!(z.is_trivial());
        assert_eq!(z.precision(), 0);
    }

    #[test]
    fn constant_terms_fold_into_global_phase() {
        let q = poly(5, 1, &[(&[0], -1), (&[1], 2)]);
        assert_eq!(q.global_phase(), ph(4, 5));
        assert_eq!(q.coefficients().len(), 1);
    }

    #[test]
    fn mixed_precision_terms() {
        let q = PhasePolynomial::from_phase_terms(
            prime(3),
            1,
            [
                (Monomial::new(vec![1], prime(3)).unwrap(), ph(1, 9)),
                (Monomial::new(vec![2], prime(3)).unwrap(), ph(1, 3)),
            ],
            PhaseFraction::ZERO,
        )
        .unwrap();
        assert_eq!(q.precision(), 2);
        assert_eq!(q.coefficient(&[1]), 1);
        assert_eq!(q.coefficient(&[2]), 3);
    }

    #[test]
    fn products_add_exponents() {
        let s = poly(2, 2, &[(&[1], 1)]);
        let z = s.product(&s).unwrap();
        assert_eq!(z, poly(2, 1, &[(&[1], 1)]));
        assert!(z.product(&z).unwrap().is_trivial());
    }
}
