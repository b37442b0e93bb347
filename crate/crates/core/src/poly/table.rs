use crate::arith::{PhaseFraction, PrimeModulus};
use crate::error::{Error, Result};

/// Number of basis states `p^n`, with an overflow guard.
pub fn basis_size(prime: PrimeModulus, qudits: usize) -> Result<usize> {
    let n = u32::try_from(qudits).map_err(|_| Error::Overflow("qudit count".into()))?;
    let size = prime.pow(n)?;
    usize::try_from(size).map_err(|_| Error::Overflow(format!("{prime}^{qudits} basis states")))
}

/// Digits of a flat basis index, most significant (qudit 1) first.
pub fn basis_digits(mut index: usize, p: u64, qudits: usize) -> Vec<u64> {
    let mut digits = vec![0; qudits];
    for slot in digits.iter_mut().rev() {
        *slot = index as u64 % p;
        index /= p as usize;
    }
    digits
}

/// Flat row-major index of `j`, last qudit fastest. Components are taken mod p.
pub fn basis_index(j: &[u64], p: u64) -> usize {
    j.iter().fold(0usize, |acc, &d| acc * p as usize + (d % p) as usize)
}

/// Stride of qudit `i` in the row-major layout.
pub(crate) fn stride(p: u64, qudits: usize, i: usize) -> usize {
    (p as usize).pow((qudits - 1 - i) as u32)
}

/// The phase applied to each computational basis state, `Θ: Z_p^n → Q/Z`,
/// stored row-major with the last qudit fastest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FunctionTable {
    prime: PrimeModulus,
    qudits: usize,
    values: Vec<PhaseFraction>,
}

impl FunctionTable {
    pub fn new(prime: PrimeModulus, qudits: usize, values: Vec<PhaseFraction>) -> Result<Self> {
        if qudits == 0 {
            return Err(Error::InvalidArgument("at least one qudit is required".into()));
        }
        let expected = basis_size(prime, qudits)?;
        if values.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                actual: values.len(),
            });
        }
        Ok(Self {
            prime,
            qudits,
            values,
        })
    }

    pub fn constant(prime: PrimeModulus, qudits: usize, phase: PhaseFraction) -> Result<Self> {
        Self::new(prime, qudits, vec![phase; basis_size(prime, qudits)?])
    }

    /// Builds a table by evaluating `f` on every basis state.
    pub fn from_fn(
        prime: PrimeModulus,
        qudits: usize,
        mut f: impl FnMut(&[u64]) -> PhaseFraction,
    ) -> Result<Self> {
        let size = basis_size(prime, qudits)?;
        let values = (0..size)
            .map(|idx| f(&basis_digits(idx, prime.get(), qudits)))
            .collect();
        Self::new(prime, qudits, values)
    }

    pub fn prime(&self) -> PrimeModulus {
        self.prime
    }

    pub fn qudits(&self) -> usize {
        self.qudits
    }

    pub fn values(&self) -> &[PhaseFraction] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value_at(&self, j: &[u64]) -> Result<PhaseFraction> {
        self.check_point(j)?;
        Ok(self.values[basis_index(j, self.prime.get())])
    }

    pub(crate) fn check_point(&self, j: &[u64]) -> Result<()> {
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
        Ok(())
    }

    /// The same gate with its global phase removed, so that `Θ(0) = 0`.
    pub fn normalized(&self) -> Self {
        let base = self.values[0];
        Self {
            values: self.values.iter().map(|&v| v - base).collect(),
            ..self.clone()
        }
    }

    /// First phase (after normalisation) whose denominator is not a power of p.
    pub fn non_p_power_entry(&self) -> Option<PhaseFraction> {
        let p = self.prime.get();
        let base = self.values[0];
        self.values.iter().map(|&v| v - base).find(|v| !v.p_power(p))
    }

    /// Largest `m` such that some normalised phase has denominator `p^m`.
    /// `None` if some denominator is not a power of p.
    pub fn precision(&self) -> Option<u32> {
        let p = self.prime.get();
        let base = self.values[0];
        self.values
            .iter()
            .map(|&v| (v - base).den_exponent(p))
            .try_fold(0, |acc, e| e.map(|e| acc.max(e)))
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.prime != other.prime || self.qudits != other.qudits {
            return Err(Error::DimensionMismatch {
                expected: self.values.len(),
                actual: other.values.len(),
            });
        }
        Ok(())
    }

    /// Phase table of the gate product `self · other`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| a + b).collect(),
            ..self.clone()
        })
    }

    /// Phase table of the inverse gate.
    pub fn inverse(&self) -> Self {
        Self {
            values: self.values.iter().map(|&v| -v).collect(),
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_layout_is_row_major() {
        assert_eq!(basis_digits(5, 2, 3), vec![1, 0, 1]);
        assert_eq!(basis_index(&[1, 0, 1], 2), 5);
        assert_eq!(basis_index(&[2, 1], 3), 7);
        for idx in 0..27 {
            assert_eq!(basis_index(&basis_digits(idx, 3, 3), 3), idx);
        }
        assert_eq!(stride(3, 2, 0), 3);
        assert_eq!(stride(3, 2, 1), 1);
    }

    #[test]
    fn length_checked() {
        let p = PrimeModulus::new(3).unwrap();
        assert_eq!(
            FunctionTable::new(p, 1, vec![PhaseFraction::ZERO; 2]),
            Err(Error::DimensionMismatch { expected: 3, actual: 2 })
        );
        assert!(FunctionTable::new(p, 0, vec![]).is_err());
    }

    #[test]
    fn precision_and_normalisation() {
        let p = PrimeModulus::new(2).unwrap();
        let t = FunctionTable::new(p, 1, vec![PhaseFraction::new(1, 8), PhaseFraction::new(3, 8)]).unwrap();
        assert_eq!(t.precision(), Some(2));
        assert_eq!(t.normalized().values(), &[PhaseFraction::ZERO, PhaseFraction::new(1, 4)]);
        let bad = FunctionTable::new(p, 1, vec![PhaseFraction::ZERO, PhaseFraction::new(1, 3)]).unwrap();
        assert_eq!(bad.precision(), None);
        assert_eq!(bad.non_p_power_entry(), Some(PhaseFraction::new(1, 3)));
    }
}
