//! Gate specifications: named gate, raw phase table, or polynomial terms,
//! given either as flags or as a JSON file.

use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use diaghier_core::{FunctionTable, Monomial, NamedGate, PhaseFraction, PhasePolynomial, PrimeModulus};
use serde::Deserialize;

#[derive(Debug, Clone, Args)]
pub struct GateArgs {
    /// Qudit dimension (prime).
    #[arg(long)]
    pub p: Option<u64>,
    /// Number of qudits (inferred from the gate when omitted).
    #[arg(long)]
    pub n: Option<usize>,
    /// Named gate: Z, S, T, CZ, CS, CCZ.
    #[arg(long)]
    pub gate: Option<String>,
    /// Generator U_{m,a} as `m:a1,a2,...`.
    #[arg(long = "u", value_name = "M:A1,A2,...")]
    pub generator: Option<String>,
    /// Phase gate on basis state k with precision m, as `k:m`.
    #[arg(long, value_name = "K:M")]
    pub phase_gate: Option<String>,
    /// Comma-separated phase table in turns (`num/den`), row-major.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub phases: Option<Vec<String>>,
    /// Polynomial terms `coeff:den_exp:a1,a2,...` separated by `;`.
    #[arg(long)]
    pub terms: Option<String>,
    /// Global phase added to `--terms` (num/den).
    #[arg(long)]
    pub global_phase: Option<String>,
    /// Read the gate from a JSON file instead of flags.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

/// One term `coeff · j^exps / p^den_exp`.
#[derive(Debug, Clone, Deserialize)]
pub struct TermSpec {
    pub coeff: i64,
    pub den_exp: u32,
    pub exps: Vec<u32>,
}

#[derive(Debug, Clone)]
pub enum GateSource {
    Named(NamedGate),
    Phases(Vec<PhaseFraction>),
    Terms {
        terms: Vec<TermSpec>,
        global_phase: PhaseFraction,
    },
}

#[derive(Debug, Clone)]
pub struct GateSpec {
    pub prime: PrimeModulus,
    pub qudits: usize,
    pub source: GateSource,
}

/// On-disk form of a gate specification.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GateSpecFile {
    p: u64,
    n: Option<usize>,
    gate: Option<String>,
    u: Option<String>,
    phase_gate: Option<String>,
    phases: Option<Vec<String>>,
    terms: Option<Vec<TermSpec>>,
    global_phase: Option<String>,
}

impl GateSpec {
    pub fn from_args(args: &GateArgs) -> Result<Self> {
        if let Some(path) = &args.spec {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let file: GateSpecFile =
                serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            let terms = file.terms.map(Ok);
            return Self::build(
                file.p,
                file.n,
                file.gate,
                file.u,
                file.phase_gate,
                file.phases,
                terms,
                file.global_phase,
            );
        }
        let p = args.p.ok_or_else(|| anyhow!("--p is required"))?;
        let terms = args.terms.as_deref().map(parse_terms);
        Self::build(
            p,
            args.n,
            args.gate.clone(),
            args.generator.clone(),
            args.phase_gate.clone(),
            args.phases.clone(),
            terms,
            args.global_phase.clone(),
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn build(
        p: u64,
        n: Option<usize>,
        gate: Option<String>,
        generator: Option<String>,
        phase_gate: Option<String>,
        phases: Option<Vec<String>>,
        terms: Option<Result<Vec<TermSpec>>>,
        global_phase: Option<String>,
    ) -> Result<Self> {
        let prime = PrimeModulus::new(p)?;
        let given = [gate.is_some(), generator.is_some(), phase_gate.is_some(), phases.is_some(), terms.is_some()];
        match given.iter().filter(|&&g| g).count() {
            0 => bail!("no gate given: use one of --gate, --u, --phase-gate, --phases, --terms"),
            1 => {}
            _ => bail!("give exactly one of --gate, --u, --phase-gate, --phases, --terms"),
        }
        if global_phase.is_some() && terms.is_none() {
            bail!("--global-phase only applies to --terms");
        }

        let named = if let Some(g) = gate {
            Some(g.parse::<NamedGate>()?)
        } else if let Some(u) = generator {
            Some(format!("U:{u}").parse::<NamedGate>()?)
        } else if let Some(k) = phase_gate {
            Some(format!("P:{k}").parse::<NamedGate>()?)
        } else {
            None
        };
        if let Some(gate) = named {
            let qudits = n.unwrap_or(gate.arity());
            return Ok(Self {
                prime,
                qudits,
                source: GateSource::Named(gate),
            });
        }
        if let Some(phases) = phases {
            let values = phases
                .iter()
                .map(|s| s.parse::<PhaseFraction>())
                .collect::<diaghier_core::Result<Vec<_>>>()?;
            let qudits = match n {
                Some(n) => n,
                None => infer_qudits(p, values.len())?,
            };
            return Ok(Self {
                prime,
                qudits,
                source: GateSource::Phases(values),
            });
        }
        let terms = terms.expect("one source is present")?;
        let qudits = match n {
            Some(n) => n,
            None => terms.first().map_or(1, |t| t.exps.len()),
        };
        let global_phase = global_phase.as_deref().unwrap_or("0").parse()?;
        Ok(Self {
            prime,
            qudits,
            source: GateSource::Terms { terms, global_phase },
        })
    }

    pub fn table(&self) -> Result<FunctionTable> {
        Ok(match &self.source {
            GateSource::Named(gate) => gate.table(self.prime, self.qudits)?,
            GateSource::Phases(values) => FunctionTable::new(self.prime, self.qudits, values.clone())?,
            GateSource::Terms { terms, global_phase } => {
                let p = self.prime;
                let terms = terms
                    .iter()
                    .map(|t| {
                        let den = p.pow(t.den_exp)?;
                        Ok((Monomial::new(t.exps.clone(), p)?, PhaseFraction::new(t.coeff, den)))
                    })
                    .collect::<diaghier_core::Result<Vec<_>>>()?;
                PhasePolynomial::from_phase_terms(p, self.qudits, terms, *global_phase)?.to_function_table()
            }
        })
    }
}

fn infer_qudits(p: u64, len: usize) -> Result<usize> {
    let mut size = 1usize;
    for n in 1..=64 {
        size = size.saturating_mul(p as usize);
        if size == len {
            return Ok(n);
        }
        if size > len {
            break;
        }
    }
    bail!("{len} phases is not a power of p = {p}")
}

fn parse_terms(text: &str) -> Result<Vec<TermSpec>> {
    text.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let parts: Vec<&str> = t.trim().splitn(3, ':').collect();
            let [coeff, den_exp, exps] = parts[..] else {
                bail!("term `{t}` is not coeff:den_exp:a1,a2,...");
            };
            Ok(TermSpec {
                coeff: coeff.trim().parse().with_context(|| format!("coefficient in `{t}`"))?,
                den_exp: den_exp.trim().parse().with_context(|| format!("denominator exponent in `{t}`"))?,
                exps: exps
                    .split(',')
                    .map(|a| a.trim().parse().with_context(|| format!("exponent in `{t}`")))
                    .collect::<Result<_>>()?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infers_qudits_from_table_length() {
        assert_eq!(infer_qudits(2, 8).unwrap(), 3);
        assert_eq!(infer_qudits(3, 3).unwrap(), 1);
        assert!(infer_qudits(2, 6).is_err());
    }

    #[test]
    fn parses_terms() {
        let t = parse_terms("1:3:1; 2:2:1,1").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!((t[1].coeff, t[1].den_exp, t[1].exps.clone()), (2, 2, vec![1, 1]));
        assert!(parse_terms("1:3").is_err());
        assert!(parse_terms("a:3:1").is_err());
    }
}
