//! Clifford-hierarchy level of diagonal gates, generator decomposition and
//! the cyclic structure of each level.

mod enumerate;
mod level;
mod structure;

pub use enumerate::{enumerate_level, EnumerationOptions, LevelEnumeration, ENUMERATION_LIMIT};
pub use level::{level_closed_form, level_recursive_oracle, HierarchyLevel};
pub use structure::{
    decompose, generating_set, group_structure, group_structure_uncorrected, CyclicFactor,
    CyclicFactorization, Decomposition, GeneratorTerm, LevelSpec,
};

use crate::arith::PrimeModulus;
use crate::error::{Error, Result};
use crate::gates::NamedGate;
use crate::matrix::{level_matrix, MATRIX_ORACLE_LIMIT};
use crate::poly::{FunctionTable, PhasePolynomial};

/// Results of every classifier that ran on one gate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// `None` when the table is not in the hierarchy.
    pub polynomial: Option<PhasePolynomial>,
    pub closed_form: HierarchyLevel,
    pub recursive: Option<HierarchyLevel>,
    pub matrix: Option<HierarchyLevel>,
}

impl Classification {
    pub fn level(&self) -> HierarchyLevel {
        self.closed_form
    }

    pub fn agree(&self) -> bool {
        [self.recursive, self.matrix]
            .iter()
            .flatten()
            .all(|&l| l == self.closed_form)
    }
}

/// Classifies a phase table. With `verify`, the table oracle and (for at
/// most [`MATRIX_ORACLE_LIMIT`] basis states) the operator oracle run too.
pub fn classify(table: &FunctionTable, verify: bool) -> Classification {
    let polynomial = PhasePolynomial::from_function_table(table).ok();
    let closed_form = polynomial
        .as_ref()
        .map_or(HierarchyLevel::NotInHierarchy, level_closed_form);
    let (recursive, matrix) = if verify {
        let matrix = (table.len() <= MATRIX_ORACLE_LIMIT)
            .then(|| level_matrix(table).expect("size checked"));
        (Some(level_recursive_oracle(table)), matrix)
    } else {
        (None, None)
    };
    Classification {
        polynomial,
        closed_form,
        recursive,
        matrix,
    }
}

/// Level of a named gate, with all classifiers required to agree.
pub fn level_of_named(gate: &NamedGate, prime: PrimeModulus, qudits: usize) -> Result<HierarchyLevel> {
    let table = gate.table(prime, qudits)?;
    let report = classify(&table, true);
    if !report.agree() {
        return Err(Error::Disagreement(format!(
            "{gate}: closed form {}, recursive {:?}, matrix {:?}",
            report.closed_form, report.recursive, report.matrix
        )));
    }
    Ok(report.level())
}
