use std::fmt;

use crate::arith::{PhaseFraction, PrimeModulus};
use crate::error::{Error, Result};
use crate::poly::{basis_digits, basis_index, basis_size, FunctionTable};

/// A monomial (generalised permutation) operator `D · P` on `n` qudits.
///
/// Basis state `|j⟩` is sent to `exp(2πi · phases[π(j)]) |π(j)⟩`: the phase
/// is indexed by the image state, so `phases` is exactly the diagonal `D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedPermutationOp {
    prime: PrimeModulus,
    qudits: usize,
    permutation: Vec<usize>,
    phases: Vec<PhaseFraction>,
}

impl GeneralizedPermutationOp {
    pub fn new(
        prime: PrimeModulus,
        qudits: usize,
        permutation: Vec<usize>,
        phases: Vec<PhaseFraction>,
    ) -> Result<Self> {
        let size = basis_size(prime, qudits)?;
        for len in [permutation.len(), phases.len()] {
            if len != size {
                return Err(Error::DimensionMismatch {
                    expected: size,
                    actual: len,
                });
            }
        }
        let mut hit = vec![false; size];
        for &target in &permutation {
            if target >= size || std::mem::replace(&mut hit[target], true) {
                return Err(Error::InvalidArgument("permutation is not a bijection".into()));
            }
        }
        Ok(Self {
            prime,
            qudits,
            permutation,
            phases,
        })
    }

    pub fn identity(prime: PrimeModulus, qudits: usize) -> Result<Self> {
        let size = basis_size(prime, qudits)?;
        Self::new(prime, qudits, (0..size).collect(), vec![PhaseFraction::ZERO; size])
    }

    /// The diagonal gate with the given phase table.
    pub fn diagonal(table: &FunctionTable) -> Self {
        Self {
            prime: table.prime(),
            qudits: table.qudits(),
            permutation: (0..table.len()).collect(),
            phases: table.values().to_vec(),
        }
    }

    /// `X(v)|j⟩ = |j + v⟩`.
    pub fn x(prime: PrimeModulus, v: &[u64]) -> Result<Self> {
        let n = v.len();
        let p = prime.get();
        let size = basis_size(prime, n)?;
        let permutation = (0..size)
            .map(|idx| {
                let shifted: Vec<u64> = basis_digits(idx, p, n)
                    .iter()
                    .zip(v)
                    .map(|(&j, &vi)| (j + vi % p) % p)
                    .collect();
                basis_index(&shifted, p)
            })
            .collect();
        Self::new(prime, n, permutation, vec![PhaseFraction::ZERO; size])
    }

    /// `Z(w)|j⟩ = ω^{⟨w,j⟩}|j⟩`.
    pub fn z(prime: PrimeModulus, w: &[u64]) -> Result<Self> {
        let p = prime.get();
        let table = FunctionTable::from_fn(prime, w.len(), |j| {
            let dot: u64 = j.iter().zip(w).map(|(&a, &b)| a * (b % p)).sum();
            PhaseFraction::new(dot as i64, p)
        })?;
        Ok(Self::diagonal(&table))
    }

    /// Global phase `exp(2πi · phase)` applied to `self`.
    pub fn with_global_phase(&self, phase: PhaseFraction) -> Self {
        Self {
            phases: self.phases.iter().map(|&v| v + phase).collect(),
            ..self.clone()
        }
    }

    pub fn prime(&self) -> PrimeModulus {
        self.prime
    }

    pub fn qudits(&self) -> usize {
        self.qudits
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn phases(&self) -> &[PhaseFraction] {
        &self.phases
    }

    /// Image of `|index⟩` as `(target, phase)`.
    pub fn apply(&self, index: usize) -> (usize, PhaseFraction) {
        let target = self.permutation[index];
        (target, self.phases[target])
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.prime != other.prime || self.qudits != other.qudits {
            return Err(Error::DimensionMismatch {
                expected: self.permutation.len(),
                actual: other.permutation.len(),
            });
        }
        Ok(())
    }

    /// Operator product `self · other` (`other` acts first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let size = self.permutation.len();
        let mut permutation = vec![0; size];
        let mut phases = vec![PhaseFraction::ZERO; size];
        for j in 0..size {
            let (mid, first) = other.apply(j);
            let (end, second) = self.apply(mid);
            permutation[j] = end;
            phases[end] = first + second;
        }
        Ok(Self {
            permutation,
            phases,
            ..self.clone()
        })
    }

    pub fn inverse(&self) -> Self {
        let size = self.permutation.len();
        let mut permutation = vec![0; size];
        let mut phases = vec![PhaseFraction::ZERO; size];
        for j in 0..size {
            let (target, phase) = self.apply(j);
            permutation[target] = j;
            phases[j] = -phase;
        }
        Self {
            permutation,
            phases,
            ..self.clone()
        }
    }

    /// `self · op · self⁻¹`.
    pub fn conjugate(&self, op: &Self) -> Result<Self> {
        self.compose(op)?.compose(&self.inverse())
    }

    pub fn is_diagonal(&self) -> bool {
        self.permutation.iter().enumerate().all(|(j, &t)| j == t)
    }

    pub fn diagonal_table(&self) -> Option<FunctionTable> {
        self.is_diagonal()
            .then(|| FunctionTable::new(self.prime, self.qudits, self.phases.clone()).expect("shape checked"))
    }

    /// `v` when the permutation is `j ↦ j + v`.
    pub fn translation(&self) -> Option<Vec<u64>> {
        let p = self.prime.get();
        let n = self.qudits;
        let v = basis_digits(self.permutation[0], p, n);
        let ok = self.permutation.iter().enumerate().all(|(idx, &t)| {
            let moved: Vec<u64> = basis_digits(idx, p, n).iter().zip(&v).map(|(&j, &vi)| (j + vi) % p).collect();
            basis_index(&moved, p) == t
        });
        ok.then_some(v)
    }

    /// Equality up to a global phase: phases are compared after shifting
    /// the one on basis state 0 to zero.
    pub fn eq_up_to_phase(&self, other: &Self) -> bool {
        if self.prime != other.prime || self.qudits != other.qudits || self.permutation != other.permutation {
            return false;
        }
        let (a0, b0) = (self.phases[0], other.phases[0]);
        self.phases.iter().zip(&other.phases).all(|(&a, &b)| a - a0 == b - b0)
    }
}

impl fmt::Display for GeneralizedPermutationOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, _) in self.permutation.iter().enumerate() {
            let (t, ph) = self.apply(j);
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "|{j}⟩→e^(2πi·{ph})|{t}⟩")?;
        }
        Ok(())
    }
}
