//! Operator-level ground truth. Everything here works on explicit
//! generalised permutation operators and never consults phase polynomials.

mod operator;

use std::collections::HashMap;

pub use operator::GeneralizedPermutationOp;

use crate::arith::PhaseFraction;
use crate::error::{Error, Result};
use crate::hierarchy::HierarchyLevel;
use crate::poly::{basis_digits, FunctionTable};

/// Largest Hilbert-space dimension `level_matrix` accepts.
pub const MATRIX_ORACLE_LIMIT: usize = 125;

/// `exp(2πi · phase) · X(x_part) · Z(z_part)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliElement {
    pub x_part: Vec<u64>,
    pub z_part: Vec<u64>,
    pub phase: PhaseFraction,
}

/// Recognises `op` as a Pauli operator.
///
/// With `modulo_phase` any global phase is accepted (the first hierarchy
/// level). Without it the phase must lie in `⟨i⟩` for qubits and `⟨ω⟩` for
/// odd p.
pub fn is_pauli(op: &GeneralizedPermutationOp, modulo_phase: bool) -> Option<PauliElement> {
    let x_part = op.translation()?;
    let p = op.prime().get();
    let n = op.qudits();
    let phases = op.phases();
    let base = phases[0];
    // D(k) = base + ⟨w, k⟩/p
    let mut z_part = Vec::with_capacity(n);
    for i in 0..n {
        let slope = phases[(p as usize).pow((n - 1 - i) as u32)] - base;
        if p % slope.denominator() != 0 {
            return None;
        }
        z_part.push(slope.scaled_numerator(p).expect("denominator divides p"));
    }
    let linear = phases.iter().enumerate().all(|(idx, &d)| {
        let dot: u64 = basis_digits(idx, p, n).iter().zip(&z_part).map(|(a, b)| a * b).sum();
        d - base == PhaseFraction::new(dot as i64, p)
    });
    if !linear {
        return None;
    }
    // D·X(v) = e^{2πi base} Z(w) X(v) = e^{2πi (base + ⟨v,w⟩/p)} X(v) Z(w)
    let vw: u64 = x_part.iter().zip(&z_part).map(|(a, b)| a * b).sum();
    let phase = base + PhaseFraction::new(vw as i64, p);
    if !modulo_phase {
        let allowed = if p == 2 { 4 } else { p };
        if allowed % phase.denominator() != 0 {
            return None;
        }
    }
    Some(PauliElement { x_part, z_part, phase })
}

fn unit(n: usize, i: usize) -> Vec<u64> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// True when conjugation sends every `X(e_i)` and `Z(e_i)` to a Pauli
/// operator (up to phase).
pub fn is_clifford(op: &GeneralizedPermutationOp) -> bool {
    let prime = op.prime();
    let n = op.qudits();
    (0..n).all(|i| {
        let e = unit(n, i);
        [
            GeneralizedPermutationOp::x(prime, &e).expect("valid shape"),
            GeneralizedPermutationOp::z(prime, &e).expect("valid shape"),
        ]
        .iter()
        .all(|gen| is_pauli(&op.conjugate(gen).expect("same shape"), true).is_some())
    })
}

/// Splits `W = V · X(t)` into its diagonal part `V`.
fn diagonal_factor(w: &GeneralizedPermutationOp) -> Option<FunctionTable> {
    let t = w.translation()?;
    let p = w.prime().get();
    let back: Vec<u64> = t.iter().map(|&ti| (p - ti) % p).collect();
    let x_back = GeneralizedPermutationOp::x(w.prime(), &back).ok()?;
    w.compose(&x_back).ok()?.diagonal_table()
}

/// The diagonal `V` with `U X(v) U† = V X(v)`, computed by explicit
/// operator products.
pub fn conjugate_diagonal(table: &FunctionTable, v: &[u64]) -> Result<FunctionTable> {
    if v.len() != table.qudits() {
        return Err(Error::DimensionMismatch {
            expected: table.qudits(),
            actual: v.len(),
        });
    }
    let u = GeneralizedPermutationOp::diagonal(table);
    let x = GeneralizedPermutationOp::x(table.prime(), v)?;
    let w = u.conjugate(&x)?;
    let p = table.prime().get();
    let expected: Vec<u64> = v.iter().map(|&c| c % p).collect();
    assert_eq!(w.translation().as_deref(), Some(expected.as_slice()), "U X(v) U† must translate by v");
    Ok(diagonal_factor(&w).expect("U X(v) U† X(-v) is diagonal"))
}

/// Hierarchy level computed by repeated operator conjugation.
///
/// Base case: the operator is a Pauli up to phase. Otherwise each generator
/// `X(e_i)`, `Z(e_i)` is conjugated, the Pauli translation is stripped off
/// (levels are invariant under multiplication by Paulis) and the diagonal
/// remainder is classified recursively.
pub fn level_matrix(table: &FunctionTable) -> Result<HierarchyLevel> {
    if table.len() > MATRIX_ORACLE_LIMIT {
        return Err(Error::TooLarge {
            candidates: table.len() as u128,
            limit: MATRIX_ORACLE_LIMIT as u128,
        });
    }
    let p = table.prime().get();
    let base = table.values()[0];
    if table.values().iter().any(|&v| !(v - base).p_power(p)) {
        return Ok(HierarchyLevel::NotInHierarchy);
    }
    let mut memo = HashMap::new();
    Ok(HierarchyLevel::Level(matrix_recurse(
        &GeneralizedPermutationOp::diagonal(table),
        &mut memo,
    )))
}

fn matrix_recurse(op: &GeneralizedPermutationOp, memo: &mut HashMap<Vec<PhaseFraction>, u32>) -> u32 {
    let base = op.phases()[0];
    let key: Vec<PhaseFraction> = op.phases().iter().map(|&v| v - base).collect();
    if let Some(&level) = memo.get(&key) {
        return level;
    }
    let level = if is_pauli(op, true).is_some() {
        1
    } else {
        let prime = op.prime();
        let n = op.qudits();
        let mut worst = 0;
        for i in 0..n {
            let e = unit(n, i);
            for gen in [
                GeneralizedPermutationOp::x(prime, &e).expect("valid shape"),
                GeneralizedPermutationOp::z(prime, &e).expect("valid shape"),
            ] {
                let image = op.conjugate(&gen).expect("same shape");
                let v = diagonal_factor(&image).expect("diagonal conjugation yields V·X(t)");
                worst = worst.max(matrix_recurse(&GeneralizedPermutationOp::diagonal(&v), memo));
            }
        }
        1 + worst
    };
    memo.insert(key, level);
    level
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeModulus;
    use crate::gates::NamedGate;

    fn prime(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn ph(n: i64, d: u64) -> PhaseFraction {
        PhaseFraction::new(n, d)
    }

    fn gate(name: &str, p: u64, n: usize) -> FunctionTable {
        name.parse::<NamedGate>().unwrap().table(prime(p), n).unwrap()
    }

    #[test]
    fn compose_examples() {
        let x = GeneralizedPermutationOp::x(prime(2), &[1]).unwrap();
        let z = GeneralizedPermutationOp::z(prime(2), &[1]).unwrap();
        assert_eq!(x.compose(&x).unwrap(), GeneralizedPermutationOp::identity(prime(2), 1).unwrap());
        let zx = z.compose(&x).unwrap();
        assert_eq!(zx.permutation(), &[1, 0]);
        assert_eq!(zx.phases(), &[ph(0, 1), ph(1, 2)]);

        let p3 = prime(3);
        let x1 = GeneralizedPermutationOp::x(p3, &[1, 0]).unwrap();
        let x2 = GeneralizedPermutationOp::x(p3, &[0, 1]).unwrap();
        assert_eq!(x1.compose(&x2).unwrap(), GeneralizedPermutationOp::x(p3, &[1, 1]).unwrap());
        assert!(x1.compose(&x).is_err());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(GeneralizedPermutationOp::new(prime(2), 1, vec![0, 0], vec![PhaseFraction::ZERO; 2]).is_err());
    }

    #[test]
    fn commutation_phase() {
        // Z(w) X(v) = ω^{⟨v,w⟩} X(v) Z(w)
        for p in [2u64, 3, 5] {
            let pr = prime(p);
            for (v, w) in [(vec![1, 0], vec![1, 0]), (vec![1, 2 % p], vec![1, 1]), (vec![0, 1], vec![1, 0])] {
                let x = GeneralizedPermutationOp::x(pr, &v).unwrap();
                let z = GeneralizedPermutationOp::z(pr, &w).unwrap();
                let dot: u64 = v.iter().zip(&w).map(|(a, b)| a * b).sum();
                let lhs = z.compose(&x).unwrap();
                let rhs = x.compose(&z).unwrap().with_global_phase(PhaseFraction::new(dot as i64, p));
                assert_eq!(lhs, rhs, "p={p} v={v:?} w={w:?}");
            }
        }
    }

    #[test]
    fn conjugate_diagonal_examples() {
        let t = conjugate_diagonal(&gate("T", 2, 1), &[1]).unwrap();
        assert_eq!(t.values(), &[ph(7, 8), ph(1, 8)]);
        let z = conjugate_diagonal(&gate("Z", 3, 1), &[1]).unwrap();
        assert_eq!(z.values(), &[ph(1, 3); 3]);
        let cz = conjugate_diagonal(&gate("CZ", 2, 2), &[1, 0]).unwrap();
        assert_eq!(cz.values(), &[ph(0, 1), ph(1, 2), ph(0, 1), ph(1, 2)]);
    }

    #[test]
    fn pauli_recognition() {
        let z = GeneralizedPermutationOp::diagonal(&gate("Z", 2, 1));
        let elem = is_pauli(&z, false).unwrap();
        assert_eq!((elem.x_part, elem.z_part), (vec![0], vec![1]));

        let s = GeneralizedPermutationOp::diagonal(&gate("S", 2, 1));
        assert!(is_pauli(&s, true).is_none());

        let p3 = prime(3);
        let wx = GeneralizedPermutationOp::x(p3, &[1, 1]).unwrap().with_global_phase(ph(1, 3));
        let elem = is_pauli(&wx, true).unwrap();
        assert_eq!(elem.x_part, vec![1, 1]);
        assert_eq!(elem.phase, ph(1, 3));
        assert!(is_pauli(&wx, false).is_some());
        assert!(is_pauli(&wx.with_global_phase(ph(1, 7)), false).is_none());
        assert!(is_pauli(&wx.with_global_phase(ph(1, 7)), true).is_some());
    }

    #[test]
    fn qubit_y_carries_phase_i() {
        // Y = i X Z
        let p2 = prime(2);
        let y = GeneralizedPermutationOp::new(p2, 1, vec![1, 0], vec![ph(3, 4), ph(1, 4)]).unwrap();
        let elem = is_pauli(&y, false).unwrap();
        assert_eq!((elem.x_part, elem.z_part, elem.phase), (vec![1], vec![1], ph(1, 4)));
    }

    #[test]
    fn clifford_recognition() {
        assert!(is_clifford(&GeneralizedPermutationOp::diagonal(&gate("S", 2, 1))));
        assert!(!is_clifford(&GeneralizedPermutationOp::diagonal(&gate("T", 2, 1))));
        assert!(is_clifford(&GeneralizedPermutationOp::diagonal(&gate("U:1:2", 3, 1))));
        assert!(is_clifford(&GeneralizedPermutationOp::diagonal(&gate("CZ", 2, 2))));
        assert!(!is_clifford(&GeneralizedPermutationOp::diagonal(&gate("CCZ", 2, 3))));
        assert!(is_clifford(&GeneralizedPermutationOp::x(prime(5), &[2]).unwrap()));
    }

    #[test]
    fn matrix_levels() {
        let lvl = |name, p, n| level_matrix(&gate(name, p, n)).unwrap();
        assert_eq!(lvl("T", 2, 1), HierarchyLevel::Level(3));
        assert_eq!(lvl("CS", 2, 2), HierarchyLevel::Level(3));
        for p in [2, 3, 5, 7] {
            assert_eq!(lvl("Z", p, 1), HierarchyLevel::Level(1));
        }
        let bad = FunctionTable::new(prime(2), 1, vec![ph(0, 1), ph(1, 3)]).unwrap();
        assert_eq!(level_matrix(&bad).unwrap(), HierarchyLevel::NotInHierarchy);
        let big = FunctionTable::constant(prime(2), 7, PhaseFraction::ZERO).unwrap();
        assert!(matches!(level_matrix(&big), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn operators_have_inverses_and_associate() {
        let pr = prime(3);
        let a = GeneralizedPermutationOp::diagonal(&gate("U:2:1", 3, 1));
        let b = GeneralizedPermutationOp::x(pr, &[2]).unwrap();
        let c = GeneralizedPermutationOp::z(pr, &[1]).unwrap().with_global_phase(ph(1, 9));
        let id = GeneralizedPermutationOp::identity(pr, 1).unwrap();
        for op in [&a, &b, &c] {
            assert_eq!(op.compose(&op.inverse()).unwrap(), id);
            assert_eq!(op.inverse().compose(op).unwrap(), id);
        }
        assert_eq!(
            a.compose(&b).unwrap().compose(&c).unwrap(),
            a.compose(&b.compose(&c).unwrap()).unwrap()
        );
    }
}
