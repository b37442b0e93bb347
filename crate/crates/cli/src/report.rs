//! Machine-readable output. Field order is fixed so JSON is byte-stable.

use diaghier_core::{
    CyclicFactorization, HierarchyLevel, LevelEnumeration, Monomial, PhaseFraction, PhasePolynomial,
};
use serde::Serialize;
use serde_json::Value;

pub fn level_value(level: HierarchyLevel) -> Value {
    match level.level() {
        Some(w) => Value::from(w),
        None => Value::from("not_in_hierarchy"),
    }
}

#[derive(Debug, Serialize)]
pub struct Term {
    pub coeff: u64,
    pub den_exp: u32,
    pub exps: Vec<u32>,
}

#[derive(Debug, Serialize)]
pub struct Generator {
    pub m: u32,
    pub exps: Vec<u32>,
    pub power: u64,
}

#[derive(Debug, Serialize)]
pub struct Factor {
    pub exps: Vec<u32>,
    pub order: u64,
}

#[derive(Debug, Serialize)]
pub struct Agreement {
    pub closed_form: Value,
    pub recursive: Option<Value>,
    pub matrix: Option<Value>,
    pub agree: bool,
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub p: u64,
    pub n: usize,
    pub level: Value,
    pub global_phase: Option<String>,
    pub polynomial: Option<String>,
    pub terms: Vec<Term>,
    pub generators: Vec<Generator>,
    pub classifiers: Agreement,
}

#[derive(Debug, Serialize)]
pub struct CanonReport {
    pub p: u64,
    pub n: usize,
    pub global_phase: String,
    pub polynomial: String,
    pub terms: Vec<Term>,
}

#[derive(Debug, Serialize)]
pub struct EnumerationReport {
    pub count: u64,
    pub expected: String,
    pub candidates: String,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct GroupReport {
    pub p: u64,
    pub n: usize,
    pub w: u32,
    pub structure: String,
    pub factors: Vec<Factor>,
    pub enumeration: Option<EnumerationReport>,
}

#[derive(Debug, Serialize)]
pub struct TableGenerator {
    pub m: u32,
    pub exps: Vec<u32>,
    pub generator: String,
}

#[derive(Debug, Serialize)]
pub struct TableRow {
    pub w: u32,
    pub generators: Vec<TableGenerator>,
    pub factors: Vec<Factor>,
}

pub fn terms(poly: &PhasePolynomial) -> Vec<Term> {
    poly.coefficients()
        .iter()
        .map(|(mono, &coeff)| Term {
            coeff,
            den_exp: poly.precision(),
            exps: mono.exponents().to_vec(),
        })
        .collect()
}

pub fn factors(structure: &CyclicFactorization) -> Vec<Factor> {
    structure
        .factors
        .iter()
        .map(|f| Factor {
            exps: f.monomial.exponents().to_vec(),
            order: f.order,
        })
        .collect()
}

pub fn enumeration(result: &LevelEnumeration) -> EnumerationReport {
    EnumerationReport {
        count: result.count,
        expected: result.expected.to_string(),
        candidates: result.candidates.to_string(),
        ok: result.matches(),
    }
}

/// `j1*j2/2`-style rendering of the generator `U_{m,a}`.
pub fn generator_name(monomial: &Monomial, modulus: u64) -> String {
    format!("{monomial}/{modulus}")
}

pub fn phase_string(phase: PhaseFraction) -> String {
    phase.to_string()
}
