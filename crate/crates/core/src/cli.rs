//! The `uproll` command line: JSON problem in, JSON (or TSV) report out.
//!
//! Exit codes: 0 success (any verdict), 2 malformed input, 3 hypothesis
//! violated, 4 generator outside 𝓛, 5 the command needs a (super)commutative
//! spec or a finite census and did not get one.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::algebra::AlgebraSpec;
use crate::cartan::{CartanDatum, Series};
use crate::error::{Error, Result};
use crate::extensions::{triplet_report, BqSpec, ExtWeight};
use crate::localmod::{check_ribbon, local_report, monodromy_exponent, muger_center, twist_exponent};
use crate::oracle::{brute_census_order, brute_cocycle, brute_commutativity};
use crate::rational::parse_rational;
use crate::weight::Weight;

const CENSUS_POINT_CAP: usize = 4_000_000;

#[derive(Debug, Parser)]
#[command(name = "uproll", version, about = "Simple-current extensions of unrolled quantum groups at roots of unity")]
struct Cli {
    /// Problem description (JSON); standard input when omitted.
    #[arg(long, global = true)]
    input: Option<std::path::PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Coefficient bound for the brute-force oracle.
    #[arg(long = "box", global = true, default_value_t = 3)]
    bound: i64,

    /// Number of transparency probes.
    #[arg(long, global = true, default_value_t = 8)]
    probes: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Root-system constants for the input's series, rank and ell.
    Datum,
    /// (Super)commutativity verdict for the input lattice.
    CheckAlgebra,
    /// Simple local modules with their twists.
    Census,
    /// Twist exponents of the input weights (census reps if none given).
    Twists,
    /// Monodromy exponents between the input weights (census reps if none given).
    Monodromy,
    /// Sufficient ribbon condition.
    Ribbon,
    /// Transparent simples of the local-module category.
    Muger,
    /// The triplet algebra at ell = 2r.
    Triplet {
        #[arg(long)]
        series: Series,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        r: i64,
    },
    /// Heisenberg-augmented algebra: commutativity, locality, twists, transparency.
    Bq,
    /// Brute-force cross-checks of the closed-form verdicts.
    Oracle,
}

/// The JSON problem description. Rationals are `"n"` or `"p/q"` strings and
/// weights are written in fundamental-weight coordinates.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemInput {
    pub series: String,
    pub rank: usize,
    pub ell: i64,
    #[serde(default)]
    pub lattice: Vec<Vec<String>>,
    #[serde(default)]
    pub mu: Option<Vec<String>>,
    #[serde(default)]
    pub heisenberg: Option<HeisenbergInput>,
    #[serde(default)]
    pub weights: Vec<Vec<String>>,
    #[serde(default)]
    pub ext_weights: Vec<ExtWeightInput>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeisenbergInput {
    pub a_squared: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtWeightInput {
    pub qg: Vec<String>,
    pub fock_tilde: Vec<String>,
}

impl ProblemInput {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn datum(&self) -> Result<CartanDatum> {
        let series: Series = self.series.parse()?;
        CartanDatum::new(series, self.rank, self.ell)
    }

    fn weight(&self, row: &[String]) -> Result<Weight> {
        let w = Weight::parse(row)?;
        w.expect_dim(self.rank)?;
        Ok(w)
    }

    pub fn generators(&self) -> Result<Vec<Weight>> {
        self.lattice.iter().map(|r| self.weight(r)).collect()
    }

    pub fn spec(&self) -> Result<AlgebraSpec> {
        let mu = self.mu.as_ref().map(|m| self.weight(m)).transpose()?;
        AlgebraSpec::new(self.datum()?, self.generators()?, mu)
    }

    pub fn input_weights(&self) -> Result<Vec<Weight>> {
        self.weights.iter().map(|r| self.weight(r)).collect()
    }

    pub fn bq_spec(&self) -> Result<BqSpec> {
        let a2 = self
            .heisenberg
            .as_ref()
            .map(|h| parse_rational(&h.a_squared))
            .transpose()?;
        BqSpec::new(self.datum()?, self.generators()?, a2)
    }

    pub fn ext_weights(&self) -> Result<Vec<ExtWeight>> {
        self.ext_weights
            .iter()
            .map(|e| Ok(ExtWeight::new(self.weight(&e.qg)?, self.weight(&e.fock_tilde)?)))
            .collect()
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidSeriesRank { .. }
        | Error::DimensionMismatch { .. }
        | Error::Parse(_)
        | Error::MuNotHalfOdd(_)
        | Error::NotLocal(_)
        | Error::NotInLattice(_)
        | Error::IncompleteTable(_)
        | Error::CocycleInvalid(_) => 2,
        Error::HypothesisViolated(_) | Error::NonADESeries(_) | Error::OddEll(_) => 3,
        Error::NotInSimpleCurrentLattice(_) => 4,
        Error::AlgebraInvalid(_) | Error::InfiniteCensus | Error::NotSubgroup(_) => 5,
    }
}

/// Runs the command line with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the command line against explicit streams.
pub fn run_with<I, T>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli, stdin) {
        Ok(Output::Json(v)) => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
            0
        }
        Ok(Output::Text(t)) => {
            let _ = write!(out, "{t}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "uproll: {e}");
            exit_code(&e)
        }
    }
}

enum Output {
    Json(Value),
    Text(String),
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Result<ProblemInput> {
    let text = match &cli.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            s
        }
    };
    ProblemInput::parse(&text)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Output> {
    if let Command::Triplet { series, rank, r } = &cli.command {
        return Ok(Output::Json(to_value(&triplet_report(*series, *rank, *r)?)));
    }
    let input = read_input(cli, stdin)?;
    let value = match &cli.command {
        Command::Datum => to_value(&input.datum()?),
        Command::CheckAlgebra => check_algebra(&input)?,
        Command::Census => {
            let spec = input.spec()?;
            let report = local_report(&spec)?;
            if cli.format == Format::Tsv {
                let mut text = String::new();
                for t in &report.twists {
                    text.push_str(&format!(
                        "{}\t{}\n",
                        t.rep.to_strings().join(","),
                        crate::rational::format_rational(t.twist.value())
                    ));
                }
                return Ok(Output::Text(text));
            }
            let mut v = to_value(&report.census);
            v["twists"] = to_value(&report.twists);
            v
        }
        Command::Twists => {
            let datum = input.datum()?;
            let weights = weights_or_reps(&input)?;
            json!({
                "twists": weights.iter().map(|w| json!({
                    "weight": to_value(w),
                    "twist": to_value(&twist_exponent(&datum, w)),
                })).collect::<Vec<_>>()
            })
        }
        Command::Monodromy => {
            let datum = input.datum()?;
            let weights = weights_or_reps(&input)?;
            let matrix: Vec<Vec<Value>> = weights
                .iter()
                .map(|a| weights.iter().map(|b| to_value(&monodromy_exponent(&datum, a, b))).collect())
                .collect();
            json!({ "weights": to_value(&weights), "monodromy": matrix })
        }
        Command::Ribbon => to_value(&check_ribbon(&input.spec()?)?),
        Command::Muger => {
            let spec = input.spec()?;
            spec.require_valid()?;
            to_value(&muger_center(&spec)?)
        }
        Command::Bq => bq(&input, cli.probes)?,
        Command::Oracle => oracle(&input, cli.bound)?,
        Command::Triplet { .. } => unreachable!("handled above"),
    };
    Ok(Output::Json(value))
}

fn weights_or_reps(input: &ProblemInput) -> Result<Vec<Weight>> {
    if !input.weights.is_empty() {
        return input.input_weights();
    }
    let spec = input.spec()?;
    let report = local_report(&spec)?;
    report.census.reps.ok_or(Error::InfiniteCensus)
}

fn check_algebra(input: &ProblemInput) -> Result<Value> {
    let spec = input.spec()?;
    Ok(match spec.mu {
        None => {
            let v = spec.check_commutative();
            json!({
                "kind": "commutative",
                "commutative": v.commutative,
                "witness": to_value(&v.witness),
                "basis": to_value(&spec.basis()),
            })
        }
        Some(_) => {
            let v = spec.check_supercommutative()?;
            json!({
                "kind": "supercommutative",
                "supercommutative": v.supercommutative,
                "commutative": v.even_part.commutative,
                "witness": to_value(&v.even_part.witness),
                "reasons": v.reasons,
                "basis": to_value(&spec.basis()),
                "odd_index": spec.odd_index(),
            })
        }
    })
}

fn bq(input: &ProblemInput, probes: usize) -> Result<Value> {
    let spec = input.bq_spec()?;
    let weights = input.ext_weights()?;
    let mut rows = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, w) in weights.iter().enumerate() {
        let local = spec.is_local(w);
        let transparency = if local { Some(spec.transparency(w, probes)?) } else { None };
        if local {
            let mut placed = false;
            for class in classes.iter_mut() {
                if spec.equivalent(&weights[class[0]], w)? {
                    class.push(i);
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push(vec![i]);
            }
        }
        rows.push(json!({
            "weight": to_value(w),
            "local": local,
            "twist": to_value(&spec.twist(w)),
            "transparency": to_value(&transparency),
        }));
    }
    Ok(json!({
        "a_squared": crate::rational::format_rational(&spec.a_squared),
        "commutative": spec.check_commutative(),
        "ribbon": to_value(&spec.ribbon()),
        "weights": rows,
        "equivalence_classes": classes,
    }))
}

fn oracle(input: &ProblemInput, bound: i64) -> Result<Value> {
    let spec = input.spec()?;
    let closed = spec.check_commutative().commutative;
    let brute = brute_commutativity(&spec, bound);
    let mut v = json!({
        "box": bound,
        "commutative": { "closed_form": closed, "brute_force": brute, "agree": closed == brute },
    });
    if spec.is_valid() {
        v["cocycle"] = to_value(&brute_cocycle(&spec, bound.min(2)));
        let census = local_report(&spec)?.census;
        if let Some(order) = census.order {
            let count = brute_census_order(&spec, CENSUS_POINT_CAP)?;
            v["census"] = json!({
                "order": order,
                "brute_force": to_value(&count),
                "agree": count.value() == order,
            });
        }
    }
    Ok(v)
}
