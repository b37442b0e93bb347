//! Exact classification of diagonal qudit gates in the Clifford hierarchy.
//!
//! A diagonal gate on `n` qudits of prime dimension `p` is described by its
//! phase function `θ: Z_p^n → Q/Z`. Gates in the hierarchy are exactly those
//! whose phases are `p^m`-th roots of unity; their canonical form is a phase
//! polynomial with per-variable degree `<= p - 1` over `Z_{p^M}`
//! ([`PhasePolynomial`]). The level of such a gate is
//! `max (p-1)(m-1) + wt(a)` over its generator terms
//! ([`level_closed_form`]); two independent oracles compute the same value
//! from the definition of the hierarchy, one on phase tables
//! ([`level_recursive_oracle`]) and one on explicit operators
//! ([`level_matrix`]).
//!
//! All arithmetic is exact. Phases are fractions of a full turn.

pub mod arith;
pub mod error;
pub mod gates;
pub mod hierarchy;
pub mod matrix;
pub mod poly;

pub use arith::{power_sum_direct, power_sum_faulhaber, BernoulliTable, PhaseFraction, PrimeModulus, Residue};
pub use error::{Error, Result};
pub use gates::NamedGate;
pub use hierarchy::{
    classify, decompose, enumerate_level, generating_set, group_structure, group_structure_uncorrected,
    level_closed_form, level_of_named, level_recursive_oracle, Classification, CyclicFactor, CyclicFactorization,
    Decomposition, EnumerationOptions, GeneratorTerm, HierarchyLevel, LevelEnumeration, LevelSpec,
};
pub use matrix::{conjugate_diagonal, is_clifford, is_pauli, level_matrix, GeneralizedPermutationOp, PauliElement};
pub use poly::{
    difference_along, integrate_difference, monomial_difference, shift_difference, FunctionTable, Monomial, PhasePolynomial,
};
