mod report;
mod spec;

use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use diaghier_core::{
    classify, decompose, enumerate_level, generating_set, group_structure, EnumerationOptions, LevelSpec,
    PhasePolynomial, PrimeModulus,
};

use report::{CanonReport, ClassifyReport, GroupReport, TableGenerator, TableRow};
use spec::{GateArgs, GateSpec};

/// Clifford-hierarchy levels and group structure of diagonal qudit gates.
#[derive(Debug, Parser)]
#[command(name = "diaghier", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hierarchy level of a diagonal gate.
    Classify {
        #[command(flatten)]
        gate: GateArgs,
        /// Also run the table oracle and, for small gates, the operator oracle.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Canonical phase polynomial of a diagonal gate.
    Canon {
        #[command(flatten)]
        gate: GateArgs,
        #[arg(long)]
        json: bool,
    },
    /// Cyclic decomposition of the diagonal gates at level w.
    Group {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: u32,
        /// Count the level by brute force and compare.
        #[arg(long)]
        enumerate: bool,
        #[arg(long)]
        json: bool,
    },
    /// Generating monomials and factor orders for every level up to w-max.
    Table {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Classify { gate, verify, json } => cmd_classify(&GateSpec::from_args(&gate)?, verify, json),
        Command::Canon { gate, json } => cmd_canon(&GateSpec::from_args(&gate)?, json),
        Command::Group { p, n, w, enumerate, json } => cmd_group(p, n, w, enumerate, json),
        Command::Table { p, n, w_max, format } => cmd_table(p, n, w_max, format),
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn cmd_classify(spec: &GateSpec, verify: bool, json: bool) -> Result<ExitCode> {
    let table = spec.table()?;
    let result = classify(&table, verify);
    let agree = result.agree();
    let poly = result.polynomial.as_ref();

    let report = ClassifyReport {
        p: spec.prime.get(),
        n: spec.qudits,
        level: report::level_value(result.level()),
        global_phase: poly.map(|q| report::phase_string(q.global_phase())),
        polynomial: poly.map(ToString::to_string),
        terms: poly.map(report::terms).unwrap_or_default(),
        generators: poly
            .map(|q| {
                decompose(q)
                    .terms
                    .into_iter()
                    .map(|t| report::Generator {
                        m: t.precision,
                        exps: t.exponents.exponents().to_vec(),
                        power: t.power,
                    })
                    .collect()
            })
            .unwrap_or_default(),
        classifiers: report::Agreement {
            closed_form: report::level_value(result.closed_form),
            recursive: result.recursive.map(report::level_value),
            matrix: result.matrix.map(report::level_value),
            agree,
        },
    };

    if json {
        print_json(&report)?;
    } else {
        println!("level: {}", result.level());
        if let Some(q) = poly {
            println!("polynomial: {q}");
            println!("global phase: {}", q.global_phase());
        }
        if verify {
            let mut ran = vec![format!("closed_form={}", result.closed_form)];
            if let Some(l) = result.recursive {
                ran.push(format!("recursive={l}"));
            }
            match result.matrix {
                Some(l) => ran.push(format!("matrix={l}")),
                None => ran.push("matrix=skipped".into()),
            }
            let verdict = if agree { "agree" } else { "DISAGREE" };
            println!("classifiers: {} ({verdict})", ran.join(" "));
        }
    }
    Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_canon(spec: &GateSpec, json: bool) -> Result<ExitCode> {
    let poly = PhasePolynomial::from_function_table(&spec.table()?)?;
    if json {
        print_json(&CanonReport {
            p: spec.prime.get(),
            n: spec.qudits,
            global_phase: report::phase_string(poly.global_phase()),
            polynomial: poly.to_string(),
            terms: report::terms(&poly),
        })?;
    } else {
        println!("polynomial: {poly}");
        println!("global phase: {}", poly.global_phase());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_group(p: u64, n: usize, w: u32, enumerate: bool, json: bool) -> Result<ExitCode> {
    let spec = LevelSpec::new(PrimeModulus::new(p)?, n, w)?;
    let structure = group_structure(&spec)?;
    let enumeration = if enumerate {
        Some(enumerate_level(&spec, &EnumerationOptions::default())?)
    } else {
        None
    };
    let ok = enumeration.as_ref().is_none_or(|e| e.matches());

    if json {
        print_json(&GroupReport {
            p,
            n,
            w,
            structure: structure.to_string(),
            factors: report::factors(&structure),
            enumeration: enumeration.as_ref().map(report::enumeration),
        })?;
    } else {
        println!("{structure}");
        if let Some(e) = &enumeration {
            let verdict = if ok { "check OK" } else { "check FAILED" };
            println!("count {}, expected {}, {verdict}", e.count, e.expected);
        }
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_table(p: u64, n: usize, w_max: u32, format: Format) -> Result<ExitCode> {
    if w_max == 0 {
        bail!("--w-max must be at least 1");
    }
    let prime = PrimeModulus::new(p)?;
    let mut rows = Vec::new();
    for w in 1..=w_max {
        let spec = LevelSpec::new(prime, n, w)?;
        let generators = generating_set(&spec)
            .into_iter()
            .map(|(m, mono)| {
                Ok(TableGenerator {
                    generator: report::generator_name(&mono, prime.pow(m)?),
                    exps: mono.exponents().to_vec(),
                    m,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(TableRow {
            w,
            generators,
            factors: report::factors(&group_structure(&spec)?),
        });
    }

    match format {
        Format::Json => print_json(&rows)?,
        Format::Csv => {
            println!("w,m,exps,generator,factor_order");
            for row in &rows {
                for g in &row.generators {
                    let order = row
                        .factors
                        .iter()
                        .find(|f| f.exps == g.exps)
                        .map_or(0, |f| f.order);
                    let exps: Vec<String> = g.exps.iter().map(u32::to_string).collect();
                    println!("{},{},{},{},{order}", row.w, g.m, exps.join(";"), g.generator);
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
