//! `equiloc` command-line front end.
//!
//! Exit status: 0 when output was produced or every check passed, 1 on a
//! mathematical mismatch, 2 on usage errors or unknown labels.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use equiloc::gv::GvPipeline;
use equiloc::ideals::{verify_all, IdealCorpus};
use equiloc::localization::{invariant, InsertionClass};
use equiloc::pairing::virtual_tangent;
use equiloc::ring::parse_rational;
use equiloc::{properties, Catalog, Error, Rational, Report, DEFAULT_SERIES_ORDER};
use serde_json::json;

use render::{Format, Output};

const ORDER_VAR: &str = "EQUILOC_SERIES_ORDER";
const MIN_ORDER: usize = 6;

#[derive(Parser)]
#[command(
    name = "equiloc",
    version,
    about = "Exact localization computations on the Mukai-Umemura threefold"
)]
struct Cli {
    /// Catalog TOML file to use instead of the built-in one.
    #[arg(long, global = true, value_name = "FILE")]
    catalog: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Self-pairings chi(F,F) of the fixed sheaves.
    Pairings {
        #[arg(long, value_name = "LABEL")]
        curve: Option<String>,
    },
    /// The descendent integrals <tau_i(h_{2-i})>_d.
    Invariants {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..=4))]
        degree: Option<i64>,
    },
    /// Run a verification suite.
    #[command(subcommand)]
    Verify(Verify),
    /// Dump or load the geometry data file.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Subcommand)]
enum Verify {
    /// The genus-0/genus-1 identity in each degree.
    Conjecture {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..=4))]
        degree: Option<i64>,
        /// Genus-one values n1(1..4) as exact rationals.
        #[arg(long, value_name = "V1,V2,V3,V4", value_parser = parse_n1)]
        n1: Option<N1>,
    },
    /// Gröbner recomputation of the ideal containments.
    Ideals,
    /// Structural properties of the catalog.
    Properties,
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Write the catalog in its TOML form.
    Dump {
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Parse and validate a catalog file.
    Load { file: PathBuf },
}

#[derive(Debug, Clone)]
struct N1(Vec<Rational>);

fn parse_n1(s: &str) -> Result<N1, String> {
    let values = s
        .split(',')
        .map(|v| parse_rational(v.trim()).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != 4 {
        return Err(format!("expected 4 comma-separated values, got {}", values.len()));
    }
    Ok(N1(values))
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownLabel(_) | Error::UnsupportedDegree(_) | Error::Parse(_) | Error::Catalog(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Math(other.to_string()),
        }
    }
}

type CmdResult = Result<(Output, bool), Failure>;

fn series_order() -> Result<usize, Failure> {
    let Ok(raw) = std::env::var(ORDER_VAR) else {
        return Ok(DEFAULT_SERIES_ORDER);
    };
    match raw.trim().parse::<usize>() {
        Ok(n) if n >= MIN_ORDER => Ok(n),
        _ => Err(Failure::Usage(format!(
            "{ORDER_VAR} must be an integer >= {MIN_ORDER}, got `{raw}`"
        ))),
    }
}

fn read_catalog(path: &Path) -> Result<(Catalog, String), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok((Catalog::from_toml(&text)?, text))
}

fn pairings(cat: &Catalog, curve: Option<&str>) -> CmdResult {
    let sheaves = match curve {
        Some(label) => vec![cat.sheaf(label)?],
        None => cat.sheaves.iter().collect(),
    };
    let mut out = Output::new(
        "pairings",
        vec!["curve", "degree", "chi", "deformation", "obstruction"],
    );
    for s in sheaves {
        let vt = virtual_tangent(cat, s)?;
        out.push(vec![
            json!(s.label),
            json!(s.degree),
            json!(vt.to_string()),
            json!(vt.deformation.to_string()),
            json!(vt.obstruction.to_string()),
        ]);
    }
    Ok((out, true))
}

fn invariants(cat: &Catalog, degree: Option<i64>, order: usize) -> CmdResult {
    let degrees: Vec<i64> = match degree {
        Some(d) => vec![d],
        None => cat.degrees().map(i64::from).collect(),
    };
    let mut out = Output::new("invariants", vec!["degree", "tau0(h2)", "tau1(h1)", "tau2(h0)"]);
    for d in degrees {
        let mut row = vec![json!(d)];
        for i in 0..3 {
            let rec = invariant(cat, d, i, InsertionClass::complementary(i)?, order)?;
            row.push(json!(rec.value.to_string()));
        }
        out.push(row);
    }
    Ok((out, true))
}

fn conjecture(cat: &Catalog, degree: Option<i64>, n1: Option<&[Rational]>, order: usize) -> CmdResult {
    let mut gv = GvPipeline::new(cat, order)?;
    if let Some(values) = n1 {
        gv = gv.with_n1(values);
    }
    let degrees: Vec<i64> = match degree {
        Some(d) => vec![d],
        None => gv.degrees().collect(),
    };
    let mut out = Output::new(
        "verify conjecture",
        vec!["degree", "n0", "n1", "lhs", "rhs", "holds"],
    );
    let mut all = true;
    for d in degrees {
        let c = gv.conjecture_check(d)?;
        all &= c.holds;
        out.push(vec![
            json!(d),
            json!(gv.n0(d)?.to_string()),
            json!(gv.n1(d).to_string()),
            json!(c.lhs.to_string()),
            json!(c.rhs.to_string()),
            json!(c.holds),
        ]);
    }
    Ok((out, all))
}

fn report_output(command: &str, report: &Report) -> CmdResult {
    let mut out = Output::new(command, vec!["check", "passed", "detail"]);
    for c in &report.checks {
        out.push(vec![json!(c.name), json!(c.passed), json!(c.detail)]);
    }
    Ok((out, report.all_passed()))
}

fn catalog_load(path: &Path) -> CmdResult {
    let (cat, text) = read_catalog(path)?;
    let canonical = cat.to_toml()? == text;
    let mut out = Output::new(
        "catalog load",
        vec!["points", "components", "sheaves", "degrees", "canonical"],
    );
    out.push(vec![
        json!(cat.points.len()),
        json!(cat.components.len()),
        json!(cat.sheaves.len()),
        json!(cat.degree_lists.len()),
        json!(canonical),
    ]);
    Ok((out, true))
}

/// Runs a command; `Ok(None)` means raw output was already written.
fn run(cli: &Cli) -> Result<Option<(Output, bool)>, Failure> {
    let order = series_order()?;
    let cat = match &cli.catalog {
        Some(path) => read_catalog(path)?.0,
        None => Catalog::mukai_umemura(),
    };
    let result = match &cli.command {
        Command::Pairings { curve } => pairings(&cat, curve.as_deref())?,
        Command::Invariants { degree } => invariants(&cat, *degree, order)?,
        Command::Verify(Verify::Conjecture { degree, n1 }) => {
            conjecture(&cat, *degree, n1.as_ref().map(|v| v.0.as_slice()), order)?
        }
        Command::Verify(Verify::Ideals) => {
            report_output("verify ideals", &verify_all(&IdealCorpus::builtin(), &cat)?)?
        }
        Command::Verify(Verify::Properties) => {
            report_output("verify properties", &properties::run(&cat, order)?)?
        }
        Command::Catalog(CatalogCmd::Dump { out }) => {
            let text = cat.to_toml()?;
            match out {
                Some(path) => std::fs::write(path, text)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            return Ok(None);
        }
        Command::Catalog(CatalogCmd::Load { file }) => catalog_load(file)?,
    };
    Ok(Some(result))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some((output, passed))) => {
            print!("{}", output.render(cli.format));
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
