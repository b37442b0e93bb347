//! The named gates the CLI and tests refer to.

use std::fmt;
use std::str::FromStr;

use crate::arith::{PhaseFraction, PrimeModulus};
use crate::error::{Error, Result};
use crate::poly::{basis_size, FunctionTable, PhasePolynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedGate {
    /// `ω^{j_1}`.
    Z,
    /// `i^{j_1}`, qubits only.
    S,
    /// `exp(2πi j_1/8)`, qubits only.
    T,
    /// `ω^{j_1 j_2}`.
    CZ,
    /// `i^{j_1 j_2}`, qubits only.
    CS,
    /// `ω^{j_1 j_2 j_3}`.
    CCZ,
    /// Phase `exp(2πi/p^precision)` on a single basis state (flat index).
    PhaseGate { basis_state: usize, precision: u32 },
    /// `U_{m,a}`: `exp(2πi j^a / p^m)`; missing trailing exponents are zero.
    Generator { precision: u32, exponents: Vec<u32> },
}

impl NamedGate {
    /// Fewest qudits the gate acts on.
    pub fn arity(&self) -> usize {
        match self {
            Self::Z | Self::S | Self::T | Self::PhaseGate { .. } => 1,
            Self::CZ | Self::CS => 2,
            Self::CCZ => 3,
            Self::Generator { exponents, .. } => exponents.len().max(1),
        }
    }

    fn qubit_only(&self, prime: PrimeModulus) -> Result<()> {
        if prime.get() != 2 {
            return Err(Error::InvalidArgument(format!("{self} is only defined for p = 2")));
        }
        Ok(())
    }

    /// Phase table of the gate acting on the first qudits of `qudits`.
    pub fn table(&self, prime: PrimeModulus, qudits: usize) -> Result<FunctionTable> {
        if qudits < self.arity() {
            return Err(Error::InvalidArgument(format!(
                "{self} needs at least {} qudits, got {qudits}",
                self.arity()
            )));
        }
        let pad = |lead: &[u32]| {
            let mut e = lead.to_vec();
            e.resize(qudits, 0);
            e
        };
        let poly = match self {
            Self::Z => PhasePolynomial::generator(prime, 1, pad(&[1]), 1)?,
            Self::S => {
                self.qubit_only(prime)?;
                PhasePolynomial::generator(prime, 2, pad(&[1]), 1)?
            }
            Self::T => {
                self.qubit_only(prime)?;
                PhasePolynomial::generator(prime, 3, pad(&[1]), 1)?
            }
            Self::CZ => PhasePolynomial::generator(prime, 1, pad(&[1, 1]), 1)?,
            Self::CS => {
                self.qubit_only(prime)?;
                PhasePolynomial::generator(prime, 2, pad(&[1, 1]), 1)?
            }
            Self::CCZ => PhasePolynomial::generator(prime, 1, pad(&[1, 1, 1]), 1)?,
            Self::Generator {
                precision,
                exponents,
            } => {
                if *precision == 0 {
                    return Err(Error::InvalidArgument("U_{m,a} needs m >= 1".into()));
                }
                PhasePolynomial::generator(prime, *precision, pad(exponents), 1)?
            }
            Self::PhaseGate {
                basis_state,
                precision,
            } => {
                let size = basis_size(prime, qudits)?;
                if *basis_state >= size {
                    return Err(Error::InvalidArgument(format!(
                        "phase gate index {basis_state} outside 0..{size}"
                    )));
                }
                if *precision == 0 {
                    return Err(Error::InvalidArgument("phase gate needs m >= 1".into()));
                }
                let phase = PhaseFraction::new(1, prime.pow(*precision)?);
                let mut values = vec![PhaseFraction::ZERO; size];
                values[*basis_state] = phase;
                return FunctionTable::new(prime, qudits, values);
            }
        };
        Ok(poly.to_function_table())
    }
}

impl fmt::Display for NamedGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Z => write!(f, "Z"),
            Self::S => write!(f, "S"),
            Self::T => write!(f, "T"),
            Self::CZ => write!(f, "CZ"),
            Self::CS => write!(f, "CS"),
            Self::CCZ => write!(f, "CCZ"),
            Self::PhaseGate {
                basis_state,
                precision,
            } => write!(f, "P:{basis_state}:{precision}"),
            Self::Generator {
                precision,
                exponents,
            } => {
                let e: Vec<String> = exponents.iter().map(u32::to_string).collect();
                write!(f, "U:{precision}:{}", e.join(","))
            }
        }
    }
}

impl FromStr for NamedGate {
    type Err = Error;

    /// `Z`, `S`, `T`, `CZ`, `CS`, `CCZ`, `P:k:m` or `U:m:a1,a2,...`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownGate(s.to_string());
        let upper = s.trim().to_ascii_uppercase();
        let gate = match upper.as_str() {
            "Z" => Self::Z,
            "S" => Self::S,
            "T" => Self::T,
            "CZ" => Self::CZ,
            "CS" => Self::CS,
            "CCZ" => Self::CCZ,
            other => {
                let (kind, rest) = other.split_once(':').ok_or_else(unknown)?;
                let (first, second) = rest.split_once(':').ok_or_else(unknown)?;
                match kind {
                    "P" => Self::PhaseGate {
                        basis_state: first.trim().parse().map_err(|_| unknown())?,
                        precision: second.trim().parse().map_err(|_| unknown())?,
                    },
                    "U" => Self::Generator {
                        precision: first.trim().parse().map_err(|_| unknown())?,
                        exponents: second
                            .split(',')
                            .map(|a| a.trim().parse().map_err(|_| unknown()))
                            .collect::<Result<_>>()?,
                    },
                    _ => return Err(unknown()),
                }
            }
        };
        Ok(gate)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn parse_round_trip() {
        for s in ["Z", "S", "T", "CZ", "CS", "CCZ", "P:0:2", "U:2:1,0"] {
            assert_eq!(s.parse::<NamedGate>().unwrap().to_string(), s);
        }
        assert_eq!("ccz".parse::<NamedGate>().unwrap(), NamedGate::CCZ);
        assert!(matches!("H".parse::<NamedGate>(), Err(Error::UnknownGate(_))));
        assert!("U:2".parse::<NamedGate>().is_err());
    }

    #[test]
    fn tables() {
        let t = NamedGate::T.table(prime(2), 1).unwrap();
        assert_eq!(t.values(), &[PhaseFraction::ZERO, PhaseFraction::new(1, 8)]);
        let ccz = NamedGate::CCZ.table(prime(2), 3).unwrap();
        assert_eq!(ccz.values()[7], PhaseFraction::new(1, 2));
        assert!(ccz.values()[..7].iter().all(|v| v.is_zero()));
        let p = NamedGate::PhaseGate { basis_state: 1, precision: 1 }.table(prime(3), 1).unwrap();
        assert_eq!(p.values(), &[PhaseFraction::ZERO, PhaseFraction::new(1, 3), PhaseFraction::ZERO]);
    }

    #[test]
    fn invalid_requests() {
        assert!(NamedGate::S.table(prime(3), 1).is_err());
        assert!(NamedGate::CZ.table(prime(2), 1).is_err());
        assert!(NamedGate::PhaseGate { basis_state: 3, precision: 1 }.table(prime(3), 1).is_err());
        assert!(NamedGate::Generator { precision: 1, exponents: vec![3] }.table(prime(3), 1).is_err());
    }

    #[test]
    fn gates_pad_onto_extra_qudits() {
        let z = NamedGate::Z.table(prime(3), 2).unwrap();
        assert_eq!(z.values()[3], PhaseFraction::new(1, 3));
        assert_eq!(z.values()[1], PhaseFraction::ZERO);
    }
}
