//! The `lrhive` command line: counting, enumeration, maps between the models,
//! the Schur-polynomial oracle, verification sweeps and rendering.
//!
//! Exit codes: 0 success, 1 usage error, 2 invariant or domain error,
//! 3 verification failure.

pub mod checks;
pub mod sweep;

use std::ffi::OsString;
use std::num::NonZeroUsize;

use clap::{Parser, Subcommand, ValueEnum};
use lrhive::bijections::{
    check_lr_member, gz1_to_hive, gz2_to_hive, hive_gz_maps, hive_to_lr, lr_to_hive, phi_gz_to_lr,
    phi_lr_to_gz, psi_gz2_to_lr, psi_lr_to_gz2,
};
use lrhive::enumeration::{count, visit, Member, Model};
use lrhive::hives::boundary_of;
use lrhive::oracle::{lr_coefficient_oracle, product_decomposition};
use lrhive::render::{render_hive, render_tableau, render_tarray};
use lrhive::{DominantWeight, Entry, HArray, LRTriple, SkewTableau, TArray};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::sweep::{run_sweep, SweepMode, VerifySweepConfig};

#[derive(Debug, Parser)]
#[command(
    name = "lrhive",
    version,
    about = "Littlewood-Richardson coefficients through tableaux, hives and GZ schemes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Hive,
    Tarray,
    Tableau,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the size of one model's family.
    Count {
        #[arg(long)]
        model: Model,
        /// `{"mu":[..],"nu":[..],"lambda":[..]}`, or `@file`.
        #[arg(long)]
        triple: String,
    },
    /// List the members of one model's family.
    Enumerate {
        #[arg(long)]
        model: Model,
        #[arg(long)]
        triple: String,
        #[arg(long)]
        limit: Option<NonZeroUsize>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Send one object through the bijections.
    Map {
        #[arg(long)]
        from: Model,
        #[arg(long)]
        to: Model,
        /// The object as JSON, or `@file`.
        #[arg(long = "in")]
        input: String,
        /// Required when the source is a GZ scheme; otherwise read off the object.
        #[arg(long)]
        triple: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Schur-polynomial coefficients of `s_mu * s_nu`.
    Oracle {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Cross-check all models, maps and array identities.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long = "max-part")]
        max_part: Entry,
        #[arg(long, default_value = "exhaustive")]
        mode: SweepMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random arrays per array-level check.
        #[arg(long = "random-arrays", default_value_t = 200)]
        random_arrays: usize,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Draw a hive, t-array or tableau given as JSON.
    Render {
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain(String),
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
            CliError::Verification(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) | CliError::Verification(m) => m,
        }
    }
}

impl From<lrhive::Error> for CliError {
    fn from(e: lrhive::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read_arg(s: &str) -> Result<String, CliError> {
    match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}"))),
        None => Ok(s.to_string()),
    }
}

fn parse<T: DeserializeOwned>(s: &str, what: &str) -> Result<T, CliError> {
    let text = read_arg(s)?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid {what} JSON: {e}")))
}

/// A weight given either as a bare array or as `{"n", "parts"}`.
#[derive(Deserialize)]
#[serde(untagged)]
enum WeightArg {
    Plain(Vec<Entry>),
    Full(DominantWeight),
}

fn parse_weight(s: &str, what: &str) -> Result<DominantWeight, CliError> {
    match parse::<WeightArg>(s, what)? {
        WeightArg::Plain(parts) => Ok(DominantWeight::polynomial(parts)?),
        WeightArg::Full(w) if w.is_polynomial() => Ok(w),
        WeightArg::Full(w) => Err(CliError::Domain(format!(
            "{what} {:?} has a negative part",
            w.parts()
        ))),
    }
}

fn member_json(m: &Member) -> String {
    serde_json::to_string(m).expect("plain data serializes")
}

fn render_member(m: &Member) -> String {
    match m {
        Member::Tableau(y) => render_tableau(y),
        Member::Hive(h) => render_hive(h),
        Member::Pattern(t) => render_tarray(t),
    }
}

fn cmd_count(model: Model, triple: &str) -> Result<String, CliError> {
    let t: LRTriple = parse(triple, "triple")?;
    Ok(format!("{}\n", count(model, &t)))
}

fn cmd_enumerate(
    model: Model,
    triple: &str,
    limit: Option<NonZeroUsize>,
    format: Format,
) -> Result<String, CliError> {
    let t: LRTriple = parse(triple, "triple")?;
    let mut out = String::new();
    visit(model, &t, limit, &mut |m| {
        match format {
            Format::Json => {
                out.push_str(&member_json(&m));
                out.push('\n');
            }
            Format::Ascii => {
                out.push_str(&render_member(&m));
                out.push('\n');
            }
        }
        Ok(())
    })?;
    Ok(out)
}

fn load_member(model: Model, input: &str) -> Result<Member, CliError> {
    Ok(match model {
        Model::Lr => Member::Tableau(parse(input, "tableau")?),
        Model::Hive => Member::Hive(parse(input, "hive")?),
        Model::Gz1 | Model::Gz2 => Member::Pattern(parse(input, "t-array")?),
    })
}

fn triple_of_member(m: &Member) -> Result<LRTriple, CliError> {
    match m {
        Member::Tableau(y) => {
            let nu = DominantWeight::polynomial(y.content()).map_err(|_| {
                CliError::Domain(format!(
                    "tableau content {:?} is not a partition",
                    y.content()
                ))
            })?;
            Ok(LRTriple::new(
                y.shape().inner().clone(),
                nu,
                y.shape().outer().clone(),
            )?)
        }
        Member::Hive(h) => {
            let b = boundary_of(h)?;
            Ok(LRTriple::new(
                b.mu().clone(),
                b.nu().clone(),
                b.lambda().clone(),
            )?)
        }
        Member::Pattern(_) => Err(CliError::Usage(
            "--triple is required when mapping from a GZ scheme".into(),
        )),
    }
}

fn to_lr(m: &Member, from: Model, t: &LRTriple) -> Result<SkewTableau, CliError> {
    Ok(match (m, from) {
        (Member::Tableau(y), _) => {
            check_lr_member(y, t)?;
            y.clone()
        }
        (Member::Hive(h), _) => hive_to_lr(h, t)?,
        (Member::Pattern(s), Model::Gz1) => phi_gz_to_lr(s, t)?,
        (Member::Pattern(s), _) => psi_gz2_to_lr(s, t)?,
    })
}

/// Maps `m` (a member of `from`'s family of `t`) to `to`'s family.
pub fn map_member(m: &Member, from: Model, to: Model, t: &LRTriple) -> Result<Member, CliError> {
    // hive <-> GZ go through the derived arrays directly; everything else through the tableau
    match (from, to, m) {
        (Model::Gz1, Model::Hive, Member::Pattern(s)) => {
            return Ok(Member::Hive(gz1_to_hive(s, t)?))
        }
        (Model::Gz2, Model::Hive, Member::Pattern(s)) => {
            return Ok(Member::Hive(gz2_to_hive(s, t)?))
        }
        (Model::Hive, Model::Gz1 | Model::Gz2, Member::Hive(h)) => {
            hive_to_lr(h, t)?;
            let (s1, s2) = hive_gz_maps(h)?;
            return Ok(Member::Pattern(if to == Model::Gz1 { s1 } else { s2 }));
        }
        _ => {}
    }
    let y = to_lr(m, from, t)?;
    Ok(match to {
        Model::Lr => Member::Tableau(y),
        Model::Hive => Member::Hive(lr_to_hive(&y, t)?),
        Model::Gz1 => Member::Pattern(phi_lr_to_gz(&y, t)?),
        Model::Gz2 => Member::Pattern(psi_lr_to_gz2(&y, t)?),
    })
}

fn cmd_map(
    from: Model,
    to: Model,
    input: &str,
    triple: Option<&str>,
    format: Format,
) -> Result<String, CliError> {
    let m = load_member(from, input)?;
    let t = match triple {
        Some(s) => parse(s, "triple")?,
        None => triple_of_member(&m)?,
    };
    let out = map_member(&m, from, to, &t)?;
    Ok(match format {
        Format::Json => format!("{}\n", member_json(&out)),
        Format::Ascii => render_member(&out),
    })
}

fn cmd_oracle(mu: &str, nu: &str, lambda: Option<&str>) -> Result<String, CliError> {
    let mu = parse_weight(mu, "mu")?;
    let nu = parse_weight(nu, "nu")?;
    match lambda {
        Some(l) => {
            let t = LRTriple::new(mu, nu, parse_weight(l, "lambda")?)?;
            Ok(format!("{}\n", lr_coefficient_oracle(&t)?))
        }
        None => {
            if mu.n() != nu.n() {
                return Err(lrhive::Error::RankMismatch {
                    expected: mu.n(),
                    found: nu.n(),
                }
                .into());
            }
            let d = product_decomposition(&mu, &nu)?;
            #[derive(Serialize)]
            struct Term<'a> {
                lambda: &'a [Entry],
                coefficient: i64,
            }
            let terms: Vec<Term> = d
                .iter()
                .rev()
                .map(|(l, &coefficient)| Term {
                    lambda: l.parts(),
                    coefficient,
                })
                .collect();
            Ok(format!(
                "{}\n",
                serde_json::to_string(&terms).expect("plain data serializes")
            ))
        }
    }
}

fn cmd_verify(config: VerifySweepConfig, format: Format) -> Result<String, CliError> {
    config.validate().map_err(CliError::Usage)?;
    let report = run_sweep(&config).map_err(CliError::Domain)?;
    let text = match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&report).expect("report serializes")
        ),
        Format::Ascii => report.to_text(),
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(CliError::Verification(text))
    }
}

fn detect_kind(v: &serde_json::Value) -> Result<Kind, CliError> {
    if v.get("matrix").is_some() {
        return Ok(Kind::Tableau);
    }
    let n = v.get("n").and_then(serde_json::Value::as_u64);
    let rows = v
        .get("rows")
        .and_then(serde_json::Value::as_array)
        .map(Vec::len);
    match (n, rows) {
        (Some(n), Some(r)) if r as u64 == n + 1 => Ok(Kind::Hive),
        (Some(n), Some(r)) if r as u64 == n => Ok(Kind::Tarray),
        _ => Err(CliError::Usage(
            "cannot tell what the input is; pass --kind".into(),
        )),
    }
}

fn cmd_render(input: &str, kind: Option<Kind>) -> Result<String, CliError> {
    let v: serde_json::Value = parse(input, "input")?;
    let kind = match kind {
        Some(k) => k,
        None => detect_kind(&v)?,
    };
    let bad = |e: serde_json::Error| CliError::Usage(format!("invalid input JSON: {e}"));
    Ok(match kind {
        Kind::Hive => render_hive(&serde_json::from_value::<HArray>(v).map_err(bad)?),
        Kind::Tarray => render_tarray(&serde_json::from_value::<TArray>(v).map_err(bad)?),
        Kind::Tableau => render_tableau(&serde_json::from_value::<SkewTableau>(v).map_err(bad)?),
    })
}

/// Caps the global worker pool at `LRHIVE_THREADS` when set.
fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("LRHIVE_THREADS") else {
        return Ok(());
    };
    let k: usize = v.parse().ok().filter(|&k| k >= 1).ok_or_else(|| {
        CliError::Usage(format!(
            "LRHIVE_THREADS must be a positive integer, got `{v}`"
        ))
    })?;
    // a pool built earlier in the same process keeps its size
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build_global();
    Ok(())
}

pub fn execute(cli: Cli) -> Result<String, CliError> {
    configure_threads()?;
    match cli.command {
        Command::Count { model, triple } => cmd_count(model, &triple),
        Command::Enumerate {
            model,
            triple,
            limit,
            format,
        } => cmd_enumerate(model, &triple, limit, format),
        Command::Map {
            from,
            to,
            input,
            triple,
            format,
        } => cmd_map(from, to, &input, triple.as_deref(), format),
        Command::Oracle { mu, nu, lambda } => cmd_oracle(&mu, &nu, lambda.as_deref()),
        Command::Verify {
            n,
            max_part,
            mode,
            seed,
            random_arrays,
            format,
        } => cmd_verify(
            VerifySweepConfig {
                n,
                max_part,
                seed,
                mode,
                random_arrays,
            },
            format,
        ),
        Command::Render { input, kind } => cmd_render(&input, kind),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(cli) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(CliError::Verification(report)) => Outcome {
            code: 3,
            stdout: report,
            stderr: "verification failed\n".into(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message()),
        },
    }
}
