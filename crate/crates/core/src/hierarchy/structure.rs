use std::fmt;

use crate::arith::{PhaseFraction, PrimeModulus};
use crate::error::{Error, Result};
use crate::poly::{basis_digits, basis_size, Monomial, PhasePolynomial};

/// A level `w` of the diagonal hierarchy on `n` qudits of dimension `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LevelSpec {
    prime: PrimeModulus,
    qudits: usize,
    level: u32,
}

impl LevelSpec {
    pub fn new(prime: PrimeModulus, qudits: usize, level: u32) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidArgument("hierarchy levels start at 1".into()));
        }
        if qudits == 0 {
            return Err(Error::InvalidArgument("at least one qudit is required".into()));
        }
        basis_size(prime, qudits)?;
        Ok(Self {
            prime,
            qudits,
            level,
        })
    }

    pub fn prime(&self) -> PrimeModulus {
        self.prime
    }

    pub fn qudits(&self) -> usize {
        self.qudits
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Nonzero monomials with per-variable degree `<= p - 1`.
    pub(crate) fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        let p = self.prime.get();
        let size = basis_size(self.prime, self.qudits).expect("checked in constructor");
        (1..size).map(move |idx| Monomial::from_digits(basis_digits(idx, p, self.qudits)))
    }

    /// Largest precision a gate at this level can need.
    pub fn max_precision(&self) -> u32 {
        (self.level - 1) / (self.prime.get() as u32 - 1) + 1
    }
}

/// `U_{m,a}^power`, the gate `exp(2πi · power · j^a / p^m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorTerm {
    pub precision: u32,
    pub exponents: Monomial,
    pub power: u64,
}

impl GeneratorTerm {
    pub fn to_polynomial(&self, prime: PrimeModulus) -> Result<PhasePolynomial> {
        PhasePolynomial::generator(
            prime,
            self.precision,
            self.exponents.exponents().to_vec(),
            self.power as i64,
        )
    }
}

impl fmt::Display for GeneratorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U_{{{},{:?}}}^{}", self.precision, self.exponents.exponents(), self.power)
    }
}

/// A gate written as a product of generators times a global phase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub terms: Vec<GeneratorTerm>,
    pub global_phase: PhaseFraction,
}

/// One generator per nonzero coefficient, all at the polynomial's precision.
pub fn decompose(poly: &PhasePolynomial) -> Decomposition {
    let terms = poly
        .coefficients()
        .iter()
        .map(|(mono, &c)| GeneratorTerm {
            precision: poly.precision(),
            exponents: mono.clone(),
            power: c,
        })
        .collect();
    Decomposition {
        terms,
        global_phase: poly.global_phase(),
    }
}

/// One cyclic factor `Z_{p^exponent}` generated by `U_{exponent, monomial}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicFactor {
    pub monomial: Monomial,
    pub exponent: u32,
    pub order: u64,
}

/// `C^w_d ≅ U(1) × Π Z_{p^{m_a}}`. The continuous `U(1)` of global phases is
/// always present and is not listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicFactorization {
    pub prime: PrimeModulus,
    pub factors: Vec<CyclicFactor>,
}

impl CyclicFactorization {
    pub fn includes_continuous_phase(&self) -> bool {
        true
    }

    /// Order of the finite part, i.e. the number of gates modulo global phase.
    pub fn finite_order(&self) -> Result<u128> {
        self.factors.iter().try_fold(1u128, |acc, f| {
            acc.checked_mul(f.order as u128)
                .ok_or_else(|| Error::Overflow("group order".into()))
        })
    }
}

impl fmt::Display for CyclicFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U(1)")?;
        for factor in &self.factors {
            write!(f, " × Z_{}", factor.order)?;
        }
        Ok(())
    }
}

fn factorization(spec: &LevelSpec, exponent_of: impl Fn(u32) -> u32) -> Result<CyclicFactorization> {
    let w = spec.level();
    let mut factors = Vec::new();
    for monomial in spec.monomials().filter(|m| m.weight() <= w) {
        let exponent = exponent_of(monomial.weight());
        if exponent == 0 {
            continue;
        }
        factors.push(CyclicFactor {
            order: spec.prime().pow(exponent)?,
            monomial,
            exponent,
        });
    }
    factors.sort_by(|a, b| {
        a.monomial
            .weight()
            .cmp(&b.monomial.weight())
            .then_with(|| b.monomial.cmp(&a.monomial))
    });
    Ok(CyclicFactorization {
        prime: spec.prime(),
        factors,
    })
}

/// Cyclic decomposition of `C^w_d`: every nonzero monomial `a` with
/// `wt(a) <= w` contributes `Z_{p^m}` with `m = ⌊(w - wt(a))/(p-1)⌋ + 1`.
pub fn group_structure(spec: &LevelSpec) -> Result<CyclicFactorization> {
    let (w, step) = (spec.level(), spec.prime().get() as u32 - 1);
    factorization(spec, |wt| (w - wt) / step + 1)
}

/// The same product with exponent `⌊(w - wt(a))/(p-1)⌋`, i.e. without the
/// `+1`. Trivial factors are dropped. It undercounts (already at `w = 1` it
/// misses the diagonal Paulis); kept so the discrepancy stays testable.
pub fn group_structure_uncorrected(spec: &LevelSpec) -> Result<CyclicFactorization> {
    let (w, step) = (spec.level(), spec.prime().get() as u32 - 1);
    factorization(spec, |wt| (w - wt) / step)
}

/// `S_w`: pairs `(m, a)` with `(p-1)(m-1) + wt(a) = w`.
pub fn generating_set(spec: &LevelSpec) -> Vec<(u32, Monomial)> {
    let (w, step) = (spec.level(), spec.prime().get() as u32 - 1);
    let mut set: Vec<_> = spec
        .monomials()
        .filter(|m| m.weight() <= w && (w - m.weight()) % step == 0)
        .map(|m| ((w - m.weight()) / step + 1, m))
        .collect();
    set.sort_by(|(ma, a), (mb, b)| ma.cmp(mb).then_with(|| b.cmp(a)));
    set
}
