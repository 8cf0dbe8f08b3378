//! Command-line surface and the validated job description behind it.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use tsid_core::constructions::Family;
use tsid_core::counting::DEFAULT_BUDGET;
use tsid_core::property::QuasiMode;
use tsid_core::{Mode, Rational};

/// Samples for `quasi` when the host is too large for the exact scan.
pub const DEFAULT_SAMPLES: usize = 256;

/// Random hosts drawn by `check multiplicity`.
pub const DEFAULT_TRIALS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "tsid", version, about = "Exact Sidorenko-type checks for oriented graphs in tournaments")]
pub struct Cli {
    /// Seed for randomized hosts and samplers; required whenever one is used.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Node-expansion ceiling per count.
    #[arg(long, global = true, env = "TSID_WORK_BUDGET")]
    pub budget: Option<u64>,
    /// Worker threads for the parallel scans (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Output format (default: DGF/1 text for `construct`, JSON otherwise).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a catalog digraph. Graph families take `n` then endpoint pairs.
    Construct {
        family: String,
        params: Vec<usize>,
    },
    /// Count copies of a DGF/1 pattern in a TRN/1 host.
    Count {
        pattern: PathBuf,
        host: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Labeled)]
        mode: ModeArg,
        /// Anchor a pattern vertex, as `vertex=host_vertex` (labeled mode).
        #[arg(long = "pin", value_parser = parse_pin)]
        pins: Vec<(usize, usize)>,
    },
    /// Check a property of a DGF/1 pattern; exit 0 holds, 2 violated.
    Check(CheckArgs),
    /// Measure the quasirandom-direction parameter of a host.
    Quasi(QuasiArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Hom,
    Labeled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PropertyArg {
    Anti,
    StrongAnti,
    SidorenkoScan,
    Impartial,
    TwoPath,
    Multiplicity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Transitive,
    Blowup,
    TwoBlock,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub property: PropertyArg,
    pub pattern: PathBuf,
    /// Scan every tournament up to this many vertices.
    #[arg(long)]
    pub exhaustive: Option<usize>,
    /// Scan one host per size from a family instead.
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Sizes: `N`, `A..B` (inclusive) or a comma list. For `impartial`
    /// and `strong-anti`, the largest size.
    #[arg(long)]
    pub n: Option<String>,
    /// Block fraction for two-block hosts, as a decimal or `p/q`.
    #[arg(long)]
    pub c: Option<String>,
    /// Pinned pattern vertex (strong-anti).
    #[arg(long = "pin")]
    pub pins: Vec<usize>,
    /// Random hosts for `multiplicity`.
    #[arg(long)]
    pub trials: Option<usize>,
}

#[derive(Debug, Args)]
pub struct QuasiArgs {
    /// TRN/1 host file.
    pub host: Option<PathBuf>,
    #[arg(long, value_name = "N")]
    pub transitive: Option<usize>,
    #[arg(long, value_name = "N")]
    pub random: Option<usize>,
    #[arg(long, num_args = 2, value_names = ["C", "N"])]
    pub two_block: Option<Vec<String>>,
    /// Force the exact scan (n <= 20).
    #[arg(long)]
    pub exact: bool,
    /// Exact scan over disjoint pairs `A`, `B` only.
    #[arg(long)]
    pub disjoint: bool,
    /// Force sampling with this many starts.
    #[arg(long)]
    pub samples: Option<usize>,
}

fn parse_pin(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once('=').ok_or_else(|| format!("expected vertex=host_vertex, got `{s}`"))?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("`{x}` is not a vertex"));
    Ok((num(a)?, num(b)?))
}

/// `N`, `A..B` (inclusive) or `a,b,c`.
pub fn parse_sizes(s: &str) -> Result<Vec<usize>, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("`{x}` is not a size"));
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(format!("empty range {s}"));
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(num).collect()
}

/// A decimal (`0.1`) or fraction (`1/10`), exactly.
pub fn parse_fraction(s: &str) -> Result<Rational, String> {
    let bad = || format!("`{s}` is not a decimal or p/q fraction");
    let int = |x: &str| x.trim().parse::<BigInt>().map_err(|_| bad());
    if let Some((p, q)) = s.split_once('/') {
        let q = int(q)?;
        if q == BigInt::from(0) {
            return Err(bad());
        }
        return Ok(Rational::new(int(p)?, q));
    }
    match s.split_once('.') {
        Some((whole, frac)) => {
            if !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            let digits = format!("{}{}", if whole.is_empty() { "0" } else { whole }, frac);
            Ok(Rational::new(int(&digits)?, scale))
        }
        None => Ok(Rational::from_integer(int(s)?)),
    }
}

/// Host family for `check anti --family`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum HostSpec {
    Transitive,
    /// Blowups of the pattern itself, filled lexicographically.
    Blowup,
    TwoBlock {
        #[serde(with = "tsid_core::report::rational")]
        c: Rational,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "property", rename_all = "kebab-case")]
pub enum CheckJob {
    Anti { n_max: usize },
    AntiFamily { family: HostSpec, ns: Vec<usize> },
    StrongAnti { pins: Vec<usize>, n_max: usize },
    SidorenkoScan { n_max: usize },
    Impartial { n_max: usize },
    TwoPath,
    Multiplicity { trials: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum HostSource {
    File {
        path: PathBuf,
    },
    Transitive {
        n: usize,
    },
    Random {
        n: usize,
        seed: u64,
    },
    TwoBlock {
        #[serde(with = "tsid_core::report::rational")]
        c: Rational,
        n: usize,
        seed: u64,
    },
}

/// A fully validated job.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Job {
    Construct {
        spec: Family,
    },
    Count {
        pattern: PathBuf,
        host: PathBuf,
        mode: Mode,
        pins: Vec<(usize, usize)>,
    },
    Check {
        pattern: PathBuf,
        check: CheckJob,
    },
    Quasi {
        host: HostSource,
        /// `None`: exact up to 20 vertices, sampled beyond.
        mode: Option<QuasiMode>,
        samples: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub job: Job,
    pub seed: Option<u64>,
    pub budget: u64,
    pub threads: Option<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{0}")]
pub struct ConfigError(pub String);

fn fail<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<RunConfig, ConfigError> {
        let seed = cli.seed;
        let need_seed = |what: &str| -> Result<u64, ConfigError> {
            seed.ok_or_else(|| ConfigError(format!("{what} is randomized; pass --seed")))
        };
        let default_format = if matches!(cli.command, Command::Construct { .. }) {
            Format::Text
        } else {
            Format::Json
        };
        let job = match cli.command {
            Command::Construct { family, params } => Job::Construct {
                spec: Family::parse(&family, &params).map_err(ConfigError)?,
            },
            Command::Count {
                pattern,
                host,
                mode,
                pins,
            } => {
                let mode = match mode {
                    ModeArg::Hom => Mode::Homomorphisms,
                    ModeArg::Labeled => Mode::Labeled,
                };
                if mode == Mode::Homomorphisms && !pins.is_empty() {
                    return fail("--pin applies to labeled counts only");
                }
                Job::Count {
                    pattern,
                    host,
                    mode,
                    pins,
                }
            }
            Command::Check(a) => check_job(a, seed).map(|(pattern, check)| Job::Check { pattern, check })?,
            Command::Quasi(q) => {
                let sources = [q.host.is_some(), q.transitive.is_some(), q.random.is_some(), q.two_block.is_some()];
                if sources.iter().filter(|&&x| x).count() != 1 {
                    return fail("give exactly one host: a file, --transitive, --random or --two-block");
                }
                let host = if let Some(path) = q.host {
                    HostSource::File { path }
                } else if let Some(n) = q.transitive {
                    HostSource::Transitive { n }
                } else if let Some(n) = q.random {
                    HostSource::Random {
                        n,
                        seed: need_seed("--random")?,
                    }
                } else {
                    let v = q.two_block.expect("checked above");
                    HostSource::TwoBlock {
                        c: parse_fraction(&v[0]).map_err(ConfigError)?,
                        n: parse_sizes(&v[1])
                            .ok()
                            .filter(|x| x.len() == 1)
                            .map(|x| x[0])
                            .ok_or_else(|| ConfigError(format!("`{}` is not a size", v[1])))?,
                        seed: need_seed("--two-block")?,
                    }
                };
                if [q.exact, q.disjoint, q.samples.is_some()].iter().filter(|&&x| x).count() > 1 {
                    return fail("--exact, --disjoint and --samples are exclusive");
                }
                let samples = q.samples.unwrap_or(DEFAULT_SAMPLES);
                let mode = if q.exact {
                    Some(QuasiMode::ExactSmall)
                } else if q.disjoint {
                    Some(QuasiMode::ExactDisjoint)
                } else if q.samples.is_some() {
                    Some(QuasiMode::Sampled {
                        count: samples,
                        seed: need_seed("--samples")?,
                    })
                } else {
                    None
                };
                Job::Quasi { host, mode, samples }
            }
        };
        Ok(RunConfig {
            job,
            seed,
            budget: cli.budget.unwrap_or(DEFAULT_BUDGET),
            threads: cli.threads,
            format: cli.format.unwrap_or(default_format),
            out: cli.out,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("configs always serialize")
    }

    pub fn from_json(s: &str) -> Result<RunConfig, ConfigError> {
        serde_json::from_str(s).map_err(|e| ConfigError(e.to_string()))
    }
}

fn check_job(a: CheckArgs, seed: Option<u64>) -> Result<(PathBuf, CheckJob), ConfigError> {
    let sizes = || -> Result<Vec<usize>, ConfigError> {
        match &a.n {
            Some(s) => parse_sizes(s).map_err(ConfigError),
            None => fail("--n is required"),
        }
    };
    let largest = || -> Result<usize, ConfigError> {
        let n = a
            .exhaustive
            .map(Ok)
            .unwrap_or_else(|| sizes().map(|v| v.into_iter().max().unwrap_or(0)))?;
        Ok(n)
    };
    let check = match a.property {
        PropertyArg::Anti => match (a.exhaustive, a.family) {
            (Some(n_max), None) => CheckJob::Anti { n_max },
            (None, Some(f)) => {
                let family = match f {
                    FamilyArg::Transitive => HostSpec::Transitive,
                    FamilyArg::Blowup => HostSpec::Blowup,
                    FamilyArg::TwoBlock => HostSpec::TwoBlock {
                        c: parse_fraction(a.c.as_deref().ok_or_else(|| ConfigError("two-block hosts need --c".into()))?)
                            .map_err(ConfigError)?,
                        seed: seed.ok_or_else(|| ConfigError("two-block hosts are randomized; pass --seed".into()))?,
                    },
                };
                CheckJob::AntiFamily { family, ns: sizes()? }
            }
            _ => return fail("anti needs exactly one of --exhaustive N or --family F --n SIZES"),
        },
        PropertyArg::StrongAnti => CheckJob::StrongAnti {
            pins: a.pins.clone(),
            n_max: largest()?,
        },
        PropertyArg::SidorenkoScan => CheckJob::SidorenkoScan { n_max: largest()? },
        PropertyArg::Impartial => CheckJob::Impartial { n_max: largest()? },
        PropertyArg::TwoPath => CheckJob::TwoPath,
        PropertyArg::Multiplicity => CheckJob::Multiplicity {
            trials: a.trials.unwrap_or(DEFAULT_TRIALS),
            seed: seed.ok_or_else(|| ConfigError("multiplicity samples hosts; pass --seed".into()))?,
        },
    };
    Ok((a.pattern, check))
}
