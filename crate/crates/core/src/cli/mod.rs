//! The `qtet` command line.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::criterion::{decide, DecideOptions};
use crate::error::{Error, Result};
use crate::generate::{derive_qmixed, generate_qgeometric};
use crate::operators::{build_suite, relation_report, serre_alpha};
use crate::pairfile::PairFile;
use crate::pipeline::{error_json, run_pipeline, Outcome};
use crate::scalar::{parse_scalar, FieldSpec};
use crate::split::{bijection_check, compute_split};
use crate::tdp::{verify_axioms, PairClass, TdProfile, TriPair};
use crate::words::{enumerate_irreducible, AlgebraElement, AqAlpha};

#[derive(Parser, Debug)]
#[command(name = "qtet", version, about = "Exact computations with q-mixed tridiagonal pairs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the four tridiagonal-pair axioms against the derived eigenvalues.
    Verify(FileArg),
    /// Report the eigenvalue class of a pair.
    Classify(FileArg),
    /// Split decompositions, raising and lowering maps, and ζ.
    Split(FileArg),
    /// Run the named operator identity suite.
    Relations(FileArg),
    /// Evaluate P at λ* and decide existence.
    Criterion(FileArg),
    /// Build the algebra action and write it as JSON.
    Construct {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a verified q-geometric or q-mixed pair file.
    Generate {
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum)]
        class: GenClass,
        /// `c` for q-mixed pairs, as a scalar literal.
        #[arg(long)]
        c: Option<String>,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Word enumeration and normal forms.
    #[command(subcommand)]
    Words(WordsCommand),
    /// Full pipeline report for one file or every `*.json` in a directory.
    Report {
        #[arg(required_unless_present = "batch", conflicts_with = "batch")]
        file: Option<PathBuf>,
        #[arg(long)]
        batch: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct FileArg {
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct FieldArg {
    /// Rational value of `q`; symbolic when omitted.
    #[arg(long)]
    pub q: Option<String>,
}

impl FieldArg {
    fn field(&self) -> Result<FieldSpec> {
        match &self.q {
            None => Ok(FieldSpec::Symbolic),
            Some(lit) => {
                let q = parse_scalar(lit, &FieldSpec::Symbolic)?;
                let q = q
                    .as_rational()
                    .cloned()
                    .ok_or_else(|| Error::Domain(format!("--q {lit} is not a rational literal")))?;
                FieldSpec::specialized(q)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GenClass {
    Geo,
    Mixed,
}

#[derive(Subcommand, Debug)]
pub enum WordsCommand {
    /// Irreducible words of a given length, one per line.
    Enumerate {
        #[arg(long)]
        length: usize,
    },
    /// Normal form of an element literal.
    Reduce {
        element: String,
        /// Deformation parameter; defaults to q^{-4}(q-q^{-1})^3[3]!.
        #[arg(long)]
        alpha: Option<String>,
        #[command(flatten)]
        field: FieldArg,
    },
}

/// Writes a line to stdout; a closed pipe is not an error.
fn emit(line: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

fn print_json(v: &Value) {
    emit(&serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn fail(e: &Error) -> i32 {
    let outcome = Outcome::of_error(e);
    eprintln!("qtet: {e}");
    print_json(&json!({ "status": outcome, "exit_code": outcome.code(), "error": error_json(e) }));
    outcome.code()
}

fn load(path: &Path) -> Result<(PairFile, TriPair)> {
    let file = PairFile::read(path)?;
    let pair = file.to_pair()?;
    Ok((file, pair))
}

fn profile_of(file: &PairFile, pair: &TriPair) -> Result<TdProfile> {
    TdProfile::derive(pair, file.c_hint()?.as_ref())
}

fn verify(path: &Path) -> Result<i32> {
    let (file, pair) = load(path)?;
    let profile = profile_of(&file, &pair)?;
    let axioms = verify_axioms(&pair, &profile);
    let valid = axioms.all_pass() && profile.class != PairClass::Other;
    print_json(&json!({ "valid": valid, "profile": profile.summary(), "axioms": axioms }));
    Ok(if valid { 0 } else { Outcome::InvalidPair.code() })
}

fn classify(path: &Path) -> Result<i32> {
    let (file, pair) = load(path)?;
    print_json(&serde_json::to_value(profile_of(&file, &pair)?.summary())?);
    Ok(0)
}

fn split(path: &Path) -> Result<i32> {
    let (file, pair) = load(path)?;
    let profile = profile_of(&file, &pair)?;
    let split = compute_split(&pair, &profile)?;
    print_json(&json!({
        "d": split.d,
        "n": split.n,
        "v_dims": split.v.dims(),
        "vstar_dims": split.vstar.dims(),
        "u_dims": split.u.dims(),
        "w_dims": split.w.dims(),
        "zeta": split.zeta,
        "raise_u": split.raise_u,
        "lower_u": split.lower_u,
        "raise_w": split.raise_w,
        "lower_w": split.lower_w,
        "bijection": bijection_check(&split),
    }));
    Ok(0)
}

fn relations(path: &Path) -> Result<i32> {
    let (file, pair) = load(path)?;
    let profile = profile_of(&file, &pair)?;
    let mut split = compute_split(&pair, &profile)?;
    let suite = build_suite(&pair, &profile, &mut split)?;
    let report = relation_report(&pair, &split, &suite);
    let all_pass = report.all_pass();
    print_json(&json!({ "class": profile.class.name(), "all_pass": all_pass, "checks": report }));
    Ok(if all_pass { 0 } else { Outcome::Error.code() })
}

fn decision_outcome(decision: &crate::criterion::Decision) -> Outcome {
    if !decision.consistent() {
        Outcome::Error
    } else if decision.exists {
        Outcome::Exists
    } else {
        Outcome::CriterionFails
    }
}

fn criterion(path: &Path) -> Result<i32> {
    let (file, pair) = load(path)?;
    let opts = DecideOptions {
        c_hint: file.c_hint()?,
        zeta_override: None,
    };
    let decision = decide(&pair, &opts)?;
    let outcome = decision_outcome(&decision);
    print_json(&json!({
        "d": decision.d,
        "c": decision.c,
        "zeta": decision.zeta,
        "P_coeffs": decision.criterion.p_coeffs,
        "lambda_star": decision.criterion.lambda_star,
        "P_value": decision.criterion.p_at_lambda_star,
        "exists": decision.exists,
        "closure_dim": decision.closure_dim,
        "checks": decision.checks,
    }));
    Ok(outcome.code())
}

fn construct(path: &Path, out: &Path) -> Result<i32> {
    let (file, pair) = load(path)?;
    let opts = DecideOptions {
        c_hint: file.c_hint()?,
        zeta_override: None,
    };
    let decision = decide(&pair, &opts)?;
    let outcome = decision_outcome(&decision);
    if let Some(action) = &decision.action {
        std::fs::write(out, serde_json::to_string_pretty(action)? + "\n")?;
    }
    print_json(&json!({
        "exists": decision.exists,
        "written": decision.action.is_some().then(|| out.display().to_string()),
        "action_checks": decision.action_checks,
    }));
    Ok(outcome.code())
}

fn generate(d: usize, class: GenClass, c: Option<&str>, field: &FieldSpec, out: &Path) -> Result<i32> {
    let geo = generate_qgeometric(d, field)?;
    let mut meta = Map::new();
    meta.insert("d".into(), json!(d));
    let pair = match class {
        GenClass::Geo => {
            meta.insert("class".into(), json!("q_geometric"));
            geo
        }
        GenClass::Mixed => {
            let lit = c.ok_or_else(|| Error::Domain("--class mixed needs --c".into()))?;
            let c = parse_scalar(lit, field)?;
            meta.insert("class".into(), json!("q_mixed"));
            meta.insert("c".into(), json!(c.to_literal()));
            derive_qmixed(&geo, &c)?
        }
    };
    PairFile::from_pair(&pair, meta).write(out)?;
    print_json(&json!({ "written": out.display().to_string(), "d": d, "n": pair.n() }));
    Ok(0)
}

fn words(cmd: &WordsCommand) -> Result<i32> {
    match cmd {
        WordsCommand::Enumerate { length } => {
            for w in enumerate_irreducible(*length) {
                emit(&w.letter_string());
            }
        }
        WordsCommand::Reduce { element, alpha, field } => {
            let field = field.field()?;
            let alpha = match alpha {
                Some(lit) => parse_scalar(lit, &field)?,
                None => serre_alpha(&field),
            };
            let e = AlgebraElement::parse(element, &field)?;
            emit(&AqAlpha::new(alpha, field).reduce(&e).to_string());
        }
    }
    Ok(0)
}

fn report_one(path: &Path) -> (Value, Outcome) {
    match PairFile::read(path) {
        Ok(file) => run_pipeline(&file, &DecideOptions::default()),
        Err(e) => {
            let outcome = Outcome::of_error(&e);
            (json!({ "status": outcome, "exit_code": outcome.code(), "error": error_json(&e) }), outcome)
        }
    }
}

fn report(file: Option<&Path>, batch: Option<&Path>) -> Result<i32> {
    if let Some(path) = file {
        let (value, outcome) = report_one(path);
        print_json(&value);
        return Ok(outcome.code());
    }
    let dir = batch.expect("clap requires a file or --batch");
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let results: Vec<(PathBuf, Value, Outcome)> = paths
        .par_iter()
        .map(|p| {
            let (v, o) = report_one(p);
            (p.clone(), v, o)
        })
        .collect();
    let code = results.iter().map(|(_, _, o)| o.code()).max().unwrap_or(0);
    let entries: Vec<Value> = results
        .into_iter()
        .map(|(p, v, _)| json!({ "file": p.display().to_string(), "report": v }))
        .collect();
    print_json(&Value::Array(entries));
    Ok(code)
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = match &cli.command {
        Command::Verify(a) => verify(&a.file),
        Command::Classify(a) => classify(&a.file),
        Command::Split(a) => split(&a.file),
        Command::Relations(a) => relations(&a.file),
        Command::Criterion(a) => criterion(&a.file),
        Command::Construct { file, out } => construct(file, out),
        Command::Generate { d, class, c, field, out } => field
            .field()
            .and_then(|f| generate(*d, *class, c.as_deref(), &f, out)),
        Command::Words(w) => words(w),
        Command::Report { file, batch } => report(file.as_deref(), batch.as_deref()),
    };
    result.unwrap_or_else(|e| fail(&e))
}

pub fn main() -> i32 {
    run(&Cli::parse())
}
