use std::path::Path;

use qtorus::dimension::{
    corank1_commutative_subgroup, is_isotropic, krull_dimension, KrullBudget, KrullReport,
};
use qtorus::skewmod::{
    default_range, is_irreducible_linear, is_unitary, make_presentation, mt1_check, theorem2_check,
    to_skew, CheckOptions, CyclicModule, GrowthReport, Mt1Report, SkewPresentation, Theorem2Report,
    IDEAL_NOTE,
};
use qtorus::torus::{center_lattice, is_simple, parse_element_with_class};
use qtorus::verify::{run_suite, VerifyReport};
use qtorus::{Error, Sublattice};
use serde::Serialize;

use crate::config::{AlgebraConfig, ConfigError};

/// A failure that aborts the command before a report exists.
#[derive(Debug, Serialize)]
pub struct CliError {
    pub kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        let kind = match &e {
            ConfigError::Io(_) => "ConfigIo".to_string(),
            ConfigError::Parse { .. } => "ConfigError".to_string(),
            ConfigError::Invalid(inner) => error_kind(inner).to_string(),
        };
        CliError {
            kind,
            field: e.field(),
            message: e.to_string(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let field = match &e {
            Error::InvalidSpec { field, .. } => Some(field.clone()),
            _ => None,
        };
        CliError {
            kind: error_kind(&e).to_string(),
            message: e.to_string(),
            field,
        }
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        Error::NotContained => "NotContained",
        Error::NotSaturated => "NotSaturated",
        Error::DivisionByZero => "DivisionByZero",
        Error::SpecMismatch => "SpecMismatch",
        Error::DependentRows => "DependentRows",
        Error::InfiniteIndex => "InfiniteIndex",
        Error::InvalidSpec { .. } => "ConfigError",
        Error::Syntax { .. } | Error::UnknownGenerator(_) => "ParseError",
        Error::NotInvertible(_) => "NotInvertible",
        Error::NotIsotropic => "NotIsotropic",
        Error::NotCorankOne => "NotCorankOne",
        Error::ZeroElement => "ZeroElement",
        Error::NotUnitary => "NotUnitary",
        Error::ZeroWidth => "ZeroWidth",
        Error::DegenerateData => "DegenerateData",
        Error::CenterNotTrivial => "CenterNotTrivial",
        Error::PreconditionUnmet(_) => "PreconditionUnmet",
        Error::NoCorankOneSubgroup => "NoCorankOneSubgroup",
        Error::InvalidArgument(_) => "InvalidArgument",
    }
}

#[derive(Serialize)]
pub struct Report<I: Serialize, P: Serialize, R: Serialize> {
    pub command: &'static str,
    pub input: I,
    pub provenance: P,
    pub results: R,
    pub pass: bool,
}

pub type Rendered = (String, bool);

fn render<I: Serialize, P: Serialize, R: Serialize>(report: &Report<I, P, R>) -> Rendered {
    let text = serde_json::to_string(report).expect("reports serialize");
    (text, report.pass)
}

#[derive(Serialize)]
struct CenterResults {
    basis: Vec<Vec<i64>>,
    rank: usize,
    simple: bool,
}

pub fn center(path: &Path) -> Result<Rendered, CliError> {
    let cfg = AlgebraConfig::load(path)?;
    let spec = cfg.to_spec()?;
    let z = center_lattice(&spec);
    Ok(render(&Report {
        command: "center",
        input: &cfg,
        provenance: (),
        results: CenterResults {
            basis: z.basis_i64(),
            rank: z.rank(),
            simple: is_simple(&spec),
        },
        pass: true,
    }))
}

#[derive(Serialize)]
struct KrullResults {
    #[serde(flatten)]
    report: KrullReport,
    budget_exhausted: bool,
}

pub fn krull(path: &Path, budget: KrullBudget) -> Result<Rendered, CliError> {
    let cfg = AlgebraConfig::load(path)?;
    let spec = cfg.to_spec()?;
    let (report, budget_exhausted) = match krull_dimension(&spec, budget) {
        Ok(r) => (r, false),
        Err(e) => {
            eprintln!("warning: {e}");
            (e.best, true)
        }
    };
    let pass = is_isotropic(&spec, &report.witness.sublattice);
    Ok(render(&Report {
        command: "krull",
        input: &cfg,
        provenance: budget,
        results: KrullResults {
            report,
            budget_exhausted,
        },
        pass,
    }))
}

/// Parses `--c` as a JSON array of rows or as `1,0,0; 0,1,0`.
pub fn parse_rows(text: &str, n: usize) -> Result<Vec<Vec<i64>>, CliError> {
    let bad = |message: String| CliError {
        kind: "ParseError".into(),
        message,
        field: Some("--c".into()),
    };
    let rows: Vec<Vec<i64>> = if text.trim_start().starts_with('[') {
        serde_json::from_str(text).map_err(|e| bad(e.to_string()))?
    } else {
        text.split(';')
            .filter(|r| !r.trim().is_empty())
            .map(|r| {
                r.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<i64>().map_err(|e| bad(format!("`{s}`: {e}"))))
                    .collect()
            })
            .collect::<Result<_, _>>()?
    };
    if let Some(row) = rows.iter().find(|r| r.len() != n) {
        return Err(bad(format!(
            "row {row:?} has length {}, expected {n}",
            row.len()
        )));
    }
    Ok(rows)
}

pub struct ModuleArgs<'a> {
    pub config: &'a Path,
    pub r: &'a str,
    pub c: Option<&'a str>,
    pub options: CheckOptions,
}

#[derive(Serialize)]
struct ModuleInput<'a> {
    config: &'a AlgebraConfig,
    r: &'a str,
    c: Option<&'a str>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Outcome<T: Serialize> {
    Ran(T),
    NotRun { not_run: CliError },
}

impl<T: Serialize> Outcome<T> {
    fn from_result(r: Result<T, Error>) -> Self {
        match r {
            Ok(v) => Outcome::Ran(v),
            Err(e) => Outcome::NotRun { not_run: e.into() },
        }
    }
}

#[derive(Serialize)]
struct ModuleResults<'a> {
    c_source: &'static str,
    presentation: &'a SkewPresentation,
    normalized_r: String,
    unitary: bool,
    irreducible_linear: bool,
    free_rank: usize,
    growth: Outcome<GrowthReport>,
    mt1: Outcome<Mt1Report>,
    theorem2: Outcome<Theorem2Report>,
    ideal: &'static str,
}

pub fn module(args: &ModuleArgs) -> Result<Rendered, CliError> {
    let cfg = AlgebraConfig::load(args.config)?;
    let spec = cfg.to_spec()?;
    let n = spec.rank();
    let (c, c_source) = match args.c {
        Some(text) => (Sublattice::from_rows(n, &parse_rows(text, n)?), "given"),
        None => (
            corank1_commutative_subgroup(&spec).ok_or(Error::NoCorankOneSubgroup)?,
            "discovered",
        ),
    };
    let pres = make_presentation(&spec, &c)?;
    let r_elem = parse_element_with_class(&spec, pres.x_class(), args.r)?;
    let r = to_skew(&r_elem, &pres)?;
    if !is_unitary(&r)? {
        return Err(Error::NotUnitary.into());
    }
    let irreducible_linear = is_irreducible_linear(&r)?;
    let m = CyclicModule::new(&r)?;
    let (k_min, k_max) = default_range(args.options.k_max);
    let growth = Outcome::from_result(m.growth_exponent(k_min, k_max));
    let mt1 = Outcome::from_result(mt1_check(&spec, &m, &args.options));
    let theorem2 = Outcome::from_result(theorem2_check(&spec, &m, &args.options));
    let pass = !matches!(&mt1, Outcome::Ran(r) if !r.pass)
        && !matches!(&theorem2, Outcome::Ran(r) if !r.pass);
    Ok(render(&Report {
        command: "module",
        input: ModuleInput {
            config: &cfg,
            r: args.r,
            c: args.c,
        },
        provenance: args.options,
        results: ModuleResults {
            c_source,
            presentation: &pres,
            normalized_r: m.r().to_string(),
            unitary: true,
            irreducible_linear,
            free_rank: m.width(),
            growth,
            mt1,
            theorem2,
            ideal: IDEAL_NOTE,
        },
        pass,
    }))
}

#[derive(Serialize)]
struct VerifyInput<'a> {
    suite: &'a str,
    cases: usize,
}

#[derive(Serialize)]
struct VerifyProvenance {
    seed: u64,
    generator: &'static str,
}

pub fn verify(suite: &str, cases: usize, seed: u64) -> Result<Rendered, CliError> {
    let report: VerifyReport = run_suite(suite, cases, seed).map_err(|e| CliError {
        kind: "UnknownSuite".into(),
        message: e.to_string(),
        field: Some("--suite".into()),
    })?;
    let pass = report.pass;
    Ok(render(&Report {
        command: "verify",
        input: VerifyInput { suite, cases },
        provenance: VerifyProvenance {
            seed,
            generator: "ChaCha8 seeded from u64, one stream per case",
        },
        results: report,
        pass,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_syntaxes() {
        assert_eq!(
            parse_rows("[[0,1,0],[0,0,1]]", 3).unwrap(),
            vec![vec![0, 1, 0], vec![0, 0, 1]]
        );
        assert_eq!(
            parse_rows("0,1,0; 0 0 1", 3).unwrap(),
            vec![vec![0, 1, 0], vec![0, 0, 1]]
        );
        assert!(parse_rows("0,1", 3).is_err());
        assert!(parse_rows("a,b,c", 3).is_err());
    }
}
