//! The `rccs` command line.
//!
//! [`run`] parses arguments, executes one subcommand and returns the exit
//! status together with what would go to standard output and standard
//! error, so tests can drive the CLI in-process.

#![allow(clippy::result_large_err)]

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use rccs_core::{
    check_conjunctive_common_cause, check_generalised_common_cause, check_system,
    construct_admissible, extend_with_rccs, induced_event, is_admissible, realized_deviation,
    sample_admissible_search, verify_extension, AdmissibleSet, Error, Family, Model, Partition,
    Rational, SearchQuery, SpaceDocument, TargetProfile,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::InfeasibleProfile(_)) => EXIT_INFEASIBLE,
            CliError::Core(Error::SearchBudgetExceeded { .. }) => EXIT_BUDGET,
            CliError::Core(Error::ConstructionFailed(_)) => EXIT_FALSE,
            _ => EXIT_MALFORMED,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Fork,
    Gcc,
    Hr,
    Ghr,
    M,
    Gm,
}

impl ModelArg {
    fn model(self) -> Model {
        match self {
            ModelArg::Fork => Model::ConjunctiveFork,
            ModelArg::Gcc => Model::GeneralisedCommonCause,
            ModelArg::Hr => Model::HrRccs,
            ModelArg::Ghr => Model::GhrRccs,
            ModelArg::M => Model::MRccs,
            ModelArg::Gm => Model::GmRccs,
        }
    }

    fn from_model(model: Model) -> Option<Self> {
        Some(match model {
            Model::ConjunctiveFork => ModelArg::Fork,
            Model::GeneralisedCommonCause => ModelArg::Gcc,
            Model::HrRccs => ModelArg::Hr,
            Model::GhrRccs => ModelArg::Ghr,
            Model::MRccs => ModelArg::M,
            Model::GmRccs => ModelArg::Gm,
            _ => return None,
        })
    }

    fn family(self) -> Result<Family, CliError> {
        match self {
            ModelArg::Hr | ModelArg::Ghr => Ok(Family::Hr),
            ModelArg::M | ModelArg::Gm => Ok(Family::M),
            other => Err(CliError::Usage(format!(
                "model {} has no admissible sets; use hr, ghr, m or gm",
                other.model()
            ))),
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

fn parse_sizes(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("expected LO..HI, got {s:?}");
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    Ok((
        lo.parse().map_err(|_| bad())?,
        hi.parse().map_err(|_| bad())?,
    ))
}

#[derive(Debug, Parser)]
#[command(
    name = "rccs",
    version,
    about = "Exact checks and constructions for generalised Reichenbachian common cause systems"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct SpaceArgs {
    /// Space file (JSON).
    #[arg(long)]
    pub space: PathBuf,
    /// The correlated pair, as two event names.
    #[arg(long, default_value = "A,B", value_delimiter = ',', num_args = 1)]
    pub pair: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Marginals, correlation and deviation of the pair.
    Analyze {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_rational)]
        epsilon: Rational,
    },
    /// Validate a cause or a partition against one model.
    Check {
        #[command(flatten)]
        space: SpaceArgs,
        /// Defaults to the file's `model` section.
        #[arg(long, value_enum)]
        model: Option<ModelArg>,
        /// Defaults to the file's `epsilon` section, else 0.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        epsilon: Option<Rational>,
        /// Event names: the cause for fork/gcc, the blocks otherwise. A
        /// single name C stands for the partition {C, ¬C}. Defaults to the
        /// file's `rccs` section.
        #[arg(long, value_delimiter = ',')]
        partition: Option<Vec<String>>,
    },
    /// Extend the space with a GHR- or GM-RCCS.
    Construct {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        epsilon: Rational,
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        size: usize,
        /// Where to write the extended space file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate every partition and report those satisfying the model.
    Search {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_rational)]
        epsilon: Rational,
        #[arg(long, value_enum)]
        model: ModelArg,
        /// Inclusive size range, e.g. `2..3`. Defaults to all sizes.
        #[arg(long, value_parser = parse_sizes)]
        sizes: Option<(usize, usize)>,
    },
    /// Construct (or, with --trials, randomly search for) an admissible set.
    Admissible {
        #[arg(long, value_parser = parse_rational)]
        prob_a: Rational,
        #[arg(long, value_parser = parse_rational)]
        prob_b: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        epsilon: Rational,
        #[arg(long, value_parser = parse_rational)]
        deviation: Rational,
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value = "hr")]
        model: ModelArg,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_MALFORMED
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(cli.command) {
        Ok((code, value)) => Outcome {
            code,
            stdout: render(&value),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value");
    s.push('\n');
    s
}

fn load(args: &SpaceArgs) -> Result<SpaceDocument, CliError> {
    let text = fs::read_to_string(&args.space).map_err(|e| CliError::Io {
        path: args.space.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(SpaceDocument::from_json(&text)?)
}

fn pair<'d>(
    doc: &'d SpaceDocument,
    args: &SpaceArgs,
) -> Result<(&'d rccs_core::Event, &'d rccs_core::Event), CliError> {
    match args.pair.as_slice() {
        [a, b] => Ok((doc.event(a)?, doc.event(b)?)),
        other => Err(CliError::Usage(format!(
            "--pair needs exactly two event names, got {}",
            other.len()
        ))),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

#[derive(Serialize)]
struct Analysis<'a> {
    pair: &'a [String],
    prob_a: Rational,
    prob_b: Rational,
    prob_ab: Rational,
    correlation: Rational,
    epsilon: Rational,
    deviation: Rational,
    existence_condition: bool,
}

#[derive(Serialize)]
struct ConstructSummary {
    model: Model,
    size: usize,
    epsilon: Rational,
    deviation: Rational,
    source_atoms: usize,
    target_atoms: usize,
    rccs: Vec<String>,
    extension_verdict: bool,
    rccs_verdict: bool,
}

#[derive(Serialize)]
struct SearchOutput {
    model: Model,
    epsilon: Rational,
    sizes: [usize; 2],
    #[serde(flatten)]
    report: Value,
}

#[derive(Serialize)]
struct AdmissibleOutput {
    profile: TargetProfile,
    model: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    set: Option<AdmissibleSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    realized_deviation: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<bool>,
}

fn execute(command: Command) -> Result<(i32, Value), CliError> {
    match command {
        Command::Analyze { space, epsilon } => {
            let doc = load(&space)?;
            let (a, b) = pair(&doc, &space)?;
            let s = &doc.space;
            let prob_a = s.prob(a)?;
            let prob_b = s.prob(b)?;
            let analysis = Analysis {
                pair: &space.pair,
                prob_ab: s.prob(&a.intersect(b)?)?,
                correlation: s.correlation(a, b)?,
                deviation: s.deviation(a, b, &epsilon)?,
                existence_condition: (&epsilon + &prob_a * &prob_b).is_positive(),
                epsilon,
                prob_a,
                prob_b,
            };
            Ok((EXIT_OK, to_value(&analysis)))
        }
        Command::Check {
            space,
            model,
            epsilon,
            partition,
        } => {
            let doc = load(&space)?;
            let (a, b) = pair(&doc, &space)?;
            let model = match model.or_else(|| doc.model.and_then(ModelArg::from_model)) {
                Some(m) => m,
                None => return Err(CliError::Usage("--model is required".into())),
            };
            let epsilon = epsilon.or_else(|| doc.epsilon.clone()).unwrap_or_default();
            let names = match partition.or_else(|| doc.rccs.clone()) {
                Some(n) => n,
                None => return Err(CliError::Usage("--partition is required".into())),
            };
            let report = match model {
                ModelArg::Fork | ModelArg::Gcc => {
                    let [cause] = names.as_slice() else {
                        return Err(CliError::Usage(format!(
                            "model {} takes a single cause event, got {} names",
                            model.model(),
                            names.len()
                        )));
                    };
                    let c = doc.event(cause)?;
                    if model == ModelArg::Fork {
                        check_conjunctive_common_cause(&doc.space, a, b, c)?
                    } else {
                        check_generalised_common_cause(&doc.space, a, b, c, &epsilon)?
                    }
                }
                _ => {
                    let p = match names.as_slice() {
                        [cause] => {
                            let c = doc.event(cause)?;
                            Partition::new(&doc.space, vec![c.clone(), c.complement()])?
                        }
                        _ => doc.partition(&names)?,
                    };
                    check_system(model.model(), &doc.space, a, b, &p, &epsilon)?
                }
            };
            let code = if report.verdict { EXIT_OK } else { EXIT_FALSE };
            Ok((code, to_value(&report)))
        }
        Command::Construct {
            space,
            epsilon,
            model,
            size,
            out,
        } => {
            let family = match model {
                ModelArg::Ghr => Family::Hr,
                ModelArg::Gm => Family::M,
                other => {
                    return Err(CliError::Usage(format!(
                        "construct builds ghr or gm systems, not {}",
                        other.model()
                    )))
                }
            };
            let doc = load(&space)?;
            let (a, b) = pair(&doc, &space)?;
            let result = extend_with_rccs(&doc.space, a, b, &epsilon, size, family)?;
            let ext = verify_extension(&doc.space, &result);
            let ha = induced_event(&result, a)?;
            let hb = induced_event(&result, b)?;
            let rccs = check_system(
                result.model(),
                result.target(),
                &ha,
                &hb,
                result.rccs(),
                &epsilon,
            )?;
            let out_doc = result.to_document(&doc)?;
            if let Some(path) = &out {
                fs::write(path, out_doc.to_json()).map_err(|e| CliError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
            }
            let summary = ConstructSummary {
                model: result.model(),
                size,
                deviation: doc.space.deviation(a, b, &epsilon)?,
                epsilon,
                source_atoms: doc.space.len(),
                target_atoms: result.target().len(),
                rccs: out_doc.rccs.clone().unwrap_or_default(),
                extension_verdict: ext.verdict,
                rccs_verdict: rccs.verdict,
            };
            let code = if ext.verdict && rccs.verdict {
                EXIT_OK
            } else {
                EXIT_FALSE
            };
            Ok((code, to_value(&summary)))
        }
        Command::Search {
            space,
            epsilon,
            model,
            sizes,
        } => {
            let doc = load(&space)?;
            let (a, b) = pair(&doc, &space)?;
            let (lo, hi) = sizes.unwrap_or((2, doc.space.len()));
            let query = SearchQuery {
                a: a.clone(),
                b: b.clone(),
                epsilon: epsilon.clone(),
                model: model.model(),
                sizes: lo..=hi,
            };
            let report = rccs_core::find_rccs(&doc.space, &query)?;
            let out = SearchOutput {
                model: model.model(),
                epsilon,
                sizes: [lo, hi],
                report: report.to_json(&doc.space),
            };
            Ok((EXIT_OK, to_value(&out)))
        }
        Command::Admissible {
            prob_a,
            prob_b,
            epsilon,
            deviation,
            size,
            model,
            trials,
            seed,
        } => {
            let family = model.family()?;
            let profile = TargetProfile::new(prob_a, prob_b, epsilon, deviation, size)?;
            let name = match family {
                Family::Hr => "hr-admissible",
                Family::M => "m-admissible",
            };
            let set = match trials {
                Some(t) => sample_admissible_search(&profile, t, seed, family)?,
                None => Some(construct_admissible(&profile, family)?),
            };
            let verdict = set
                .as_ref()
                .map(|s| is_admissible(family, s, &profile).verdict);
            let out = AdmissibleOutput {
                model: name,
                trials,
                seed: trials.map(|_| seed),
                realized_deviation: set.as_ref().map(|s| realized_deviation(s, &profile)),
                verdict,
                set,
                profile,
            };
            let code = if out.set.is_some() {
                EXIT_OK
            } else {
                EXIT_FALSE
            };
            Ok((code, to_value(&out)))
        }
    }
}
