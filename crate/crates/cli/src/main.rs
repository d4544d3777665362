//! `hnt`: command-line driver for the hnt-core checks.
//!
//! Exit codes: 0 verified, 1 mathematical falsification, 2 usage or
//! feasibility error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hnt_core::config::{DEFAULT_GROUP_CAP, DEFAULT_VERTEX_CAP};
use hnt_core::lemmas::run_lemma_suite;
use hnt_core::report::render_clauses;
use hnt_core::transitivity::is_neighbour_transitive;
use hnt_core::{
    classify_theorem, setwise_stabilizer, verify_family, Code, Error, GeneratorSet, HammingScheme, SearchConfig,
    TheoremCase,
};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "hnt", version, about = "Neighbour-transitivity checks for codes in Hamming graphs")]
struct Cli {
    /// Largest group order an exhaustive sweep may enumerate.
    #[arg(long, global = true, env = "HNT_GROUP_CAP", default_value_t = DEFAULT_GROUP_CAP)]
    group_cap: u128,

    /// Largest vertex count an exhaustive sweep may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_CAP)]
    vertex_cap: u64,

    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build and verify the binary family member of length m.
    Family {
        /// Code length, even and at least 4
        #[arg(long)]
        m: usize,
        /// Also compute the full stabilizer of the neighbour set.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Summarize a code file.
    Analyze {
        /// Code file: header `m q`, then one word per line
        #[arg(long)]
        input: PathBuf,
    },
    /// Compute the setwise stabilizer of a code's neighbour set (or of the code).
    Stabilizer {
        /// Code file: header `m q`, then one word per line
        #[arg(long)]
        input: PathBuf,
        /// Set to stabilize
        #[arg(long, value_enum, default_value_t = StabilizerTarget::Neighbours)]
        of: StabilizerTarget,
        /// Print every element.
        #[arg(long)]
        list: bool,
    },
    /// Run the vertex, triple and pre-codeword lemma suite on H(m,q).
    Lemmas {
        /// Coordinates
        #[arg(long)]
        m: usize,
        /// Alphabet size
        #[arg(long)]
        q: usize,
        /// Seed for the sampled random codes
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decide whether the stabilizer of the neighbour set fixes the code.
    Classify {
        /// Code file: header `m q`, then one word per line
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StabilizerTarget {
    Neighbours,
    Code,
}

enum Outcome {
    Verified,
    Falsified,
}

struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("report serializes")),
        Format::Text => print!("{}", text()),
    }
}

fn cmd_family(m: usize, exhaustive: bool, format: Format, cfg: &SearchConfig) -> Result<Outcome, Failure> {
    if m < 4 || !m.is_multiple_of(2) {
        return Err(Failure("m must be even and ≥ 4".into()));
    }
    let report = verify_family(m, exhaustive, cfg)?;
    emit(format, &report, || {
        let mut out = format!("family m={m} (exhaustive: {exhaustive})\n");
        out.push_str(&render_clauses(&report.clauses));
        if let Some(order) = report.stabilizer_order {
            out.push_str(&format!("stabilizer_order: {order}\n"));
        }
        out
    });
    Ok(if report.all_pass() { Outcome::Verified } else { Outcome::Falsified })
}

fn cmd_classify(input: &PathBuf, format: Format, cfg: &SearchConfig) -> Result<Outcome, Failure> {
    let code = Code::read(input)?;
    let report = classify_theorem(&code, cfg)?;
    emit(format, &report, || {
        let case = match report.theorem_case {
            Some(TheoremCase::Delta4BinaryEvenLength) => "CASE2_delta4_q2_m_even",
            Some(TheoremCase::Delta3EvenDegree) => "CASE3_delta3_mq1_even",
            Some(TheoremCase::Violation) => "VIOLATION",
            None => "-",
        };
        let verdict = serde_json::to_value(report.verdict).expect("verdict serializes");
        format!(
            "delta: {}\nverdict: {}\nwitness: {}\ntheorem_case: {case}\nstabilizer_order: {}\ntransitive_on_neighbours: {}\n",
            report.delta,
            verdict.as_str().unwrap_or_default(),
            report.witness.as_ref().map_or("-".to_string(), |w| w.to_text()),
            report.stabilizer_order.map_or("-".to_string(), |o| o.to_string()),
            report.transitive_on_neighbours
        )
    });
    Ok(if report.is_violation() { Outcome::Falsified } else { Outcome::Verified })
}

#[derive(Serialize)]
struct Analysis {
    m: usize,
    q: usize,
    size: usize,
    delta: hnt_core::MinDistance,
    neighbour_count: usize,
    linear_binary: bool,
    automorphism_order: Option<usize>,
    aut_neighbour_transitive: Option<bool>,
}

fn cmd_analyze(input: &PathBuf, format: Format, cfg: &SearchConfig) -> Result<Outcome, Failure> {
    let code = Code::read(input)?;
    let scheme = code.scheme();
    let neighbours = code.neighbour_set();
    let (automorphism_order, aut_neighbour_transitive) = match setwise_stabilizer(code.words(), scheme, cfg) {
        Ok(aut) => {
            let transitive = if neighbours.is_empty() {
                None
            } else {
                Some(is_neighbour_transitive(&code, &GeneratorSet::new(scheme, aut.clone())?)?)
            };
            (Some(aut.len()), transitive)
        }
        Err(Error::Feasibility { .. }) => (None, None),
        Err(e) => return Err(e.into()),
    };
    let analysis = Analysis {
        m: scheme.m(),
        q: scheme.q(),
        size: code.len(),
        delta: code.min_distance(),
        neighbour_count: neighbours.len(),
        linear_binary: code.is_linear_binary(),
        automorphism_order,
        aut_neighbour_transitive,
    };
    emit(format, &analysis, || {
        let opt = |o: Option<String>| o.unwrap_or_else(|| "-".into());
        format!(
            "scheme: {scheme}\nsize: {}\ndelta: {}\nneighbours: {}\nlinear_binary: {}\nautomorphism_order: {}\naut_neighbour_transitive: {}\n",
            analysis.size,
            analysis.delta,
            analysis.neighbour_count,
            analysis.linear_binary,
            opt(analysis.automorphism_order.map(|o| o.to_string())),
            opt(analysis.aut_neighbour_transitive.map(|t| t.to_string())),
        )
    });
    Ok(Outcome::Verified)
}

#[derive(Serialize)]
struct StabilizerReport {
    target: &'static str,
    order: usize,
    elements: Option<Vec<hnt_core::Automorphism>>,
}

fn cmd_stabilizer(
    input: &PathBuf,
    of: StabilizerTarget,
    list: bool,
    format: Format,
    cfg: &SearchConfig,
) -> Result<Outcome, Failure> {
    let code = Code::read(input)?;
    let (target, set) = match of {
        StabilizerTarget::Neighbours => ("neighbours", code.neighbour_set()),
        StabilizerTarget::Code => ("code", code.words().to_vec()),
    };
    let stab = setwise_stabilizer(&set, code.scheme(), cfg)?;
    let report = StabilizerReport {
        target,
        order: stab.len(),
        elements: list.then_some(stab),
    };
    emit(format, &report, || {
        let mut out = format!("target: {target}\norder: {}\n", report.order);
        for x in report.elements.iter().flatten() {
            out.push_str(&format!("{x}\n"));
        }
        out
    });
    Ok(Outcome::Verified)
}

fn cmd_lemmas(m: usize, q: usize, seed: u64, format: Format, cfg: &SearchConfig) -> Result<Outcome, Failure> {
    let scheme = HammingScheme::new(m, q)?;
    let report = run_lemma_suite(scheme, seed, cfg)?;
    emit(format, &report, || {
        format!("lemmas on {scheme} (seed {seed})\n{}", render_clauses(&report.clauses))
    });
    Ok(if report.all_pass() { Outcome::Verified } else { Outcome::Falsified })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = SearchConfig::default()
        .with_group_cap(cli.group_cap)
        .with_vertex_cap(cli.vertex_cap);
    let format = cli.format;
    let result = match &cli.command {
        Command::Family { m, exhaustive } => cmd_family(*m, *exhaustive, format, &cfg),
        Command::Analyze { input } => cmd_analyze(input, format, &cfg),
        Command::Stabilizer { input, of, list } => cmd_stabilizer(input, *of, *list, format, &cfg),
        Command::Lemmas { m, q, seed } => cmd_lemmas(*m, *q, *seed, format, &cfg),
        Command::Classify { input } => cmd_classify(input, format, &cfg),
    };
    match result {
        Ok(Outcome::Verified) => ExitCode::SUCCESS,
        Ok(Outcome::Falsified) => ExitCode::from(1),
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
