use std::collections::HashMap;
use std::fmt;

use crate::arith::{valuation, PhaseFraction};
use crate::poly::{basis_digits, shift_difference, FunctionTable, PhasePolynomial};

/// Position of a diagonal gate in the Clifford hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HierarchyLevel {
    /// Smallest `w >= 1` with the gate in `C^w`.
    Level(u32),
    /// Some phase has a denominator that is not a power of p.
    NotInHierarchy,
}

impl HierarchyLevel {
    pub fn level(self) -> Option<u32> {
        match self {
            Self::Level(w) => Some(w),
            Self::NotInHierarchy => None,
        }
    }
}

impl fmt::Display for HierarchyLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Level(w) => write!(f, "{w}"),
            Self::NotInHierarchy => write!(f, "not_in_hierarchy"),
        }
    }
}

/// Level read off the canonical polynomial.
///
/// A coefficient `c = Σ_t c_t p^t` of monomial `a` contributes
/// `(p-1)(M-t-1) + wt(a)` for each nonzero digit `c_t`; the gate's level is the
/// maximum, which is attained at the lowest nonzero digit. A bare global
/// phase sits at level 1.
pub fn level_closed_form(poly: &PhasePolynomial) -> HierarchyLevel {
    let p = poly.prime().get();
    let m = poly.precision();
    let level = poly
        .coefficients()
        .iter()
        .map(|(mono, &c)| {
            let t = valuation(c, p);
            (p - 1) as u32 * (m - t - 1) + mono.weight()
        })
        .max()
        .unwrap_or(1);
    HierarchyLevel::Level(level)
}

/// Level computed straight from the definition on the phase table.
///
/// A normalised table that is affine over `Z_p` with denominators dividing
/// `p` is a diagonal Pauli (level 1). Otherwise the level is one more than
/// the largest level among the differences `Δ_i θ`, which are the diagonal
/// parts of `U X(e_i) U†`. Never looks at polynomial coefficients.
pub fn level_recursive_oracle(table: &FunctionTable) -> HierarchyLevel {
    if table.non_p_power_entry().is_some() {
        return HierarchyLevel::NotInHierarchy;
    }
    let mut memo = HashMap::new();
    HierarchyLevel::Level(recurse(&table.normalized(), &mut memo))
}

fn recurse(table: &FunctionTable, memo: &mut HashMap<Vec<PhaseFraction>, u32>) -> u32 {
    if let Some(&level) = memo.get(table.values()) {
        return level;
    }
    let level = if is_diagonal_pauli(table) {
        1
    } else {
        1 + (0..table.qudits())
            .map(|i| {
                let diff = shift_difference(table, i).expect("direction in range");
                recurse(&diff.normalized(), memo)
            })
            .max()
            .expect("at least one qudit")
    };
    memo.insert(table.values().to_vec(), level);
    level
}

/// `θ(j) = Σ_i j_i θ(e_i)` with every value a multiple of `1/p`
/// (expects `θ(0) = 0`).
pub(crate) fn is_diagonal_pauli(table: &FunctionTable) -> bool {
    let p = table.prime().get();
    let n = table.qudits();
    if table.values().iter().any(|v| p % v.denominator() != 0) {
        return false;
    }
    let slopes: Vec<PhaseFraction> = (0..n)
        .map(|i| table.values()[(p as usize).pow((n - 1 - i) as u32)])
        .collect();
    table.values().iter().enumerate().all(|(idx, &v)| {
        let digits = basis_digits(idx, p, n);
        let affine: PhaseFraction = digits
            .iter()
            .zip(&slopes)
            .map(|(&d, s)| s.scale(d as i64))
            .sum();
        affine == v
    })
}
