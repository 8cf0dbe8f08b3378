//! Executes a [`RunConfig`] and renders the result.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::json;
use tsid_core::constructions::Construction;
use tsid_core::counting::baseline;
use tsid_core::covers::{homomorphism_multiplicity_probe, two_path_condition};
use tsid_core::format::{parse_dgf, parse_trn, write_dgf};
use tsid_core::property::{
    check_anti_exhaustive, check_anti_on_family, check_impartial, check_strong_anti, quasirandom_epsilon,
    sidorenko_ratio_scan, two_block_tournament, HostFamily, PropertyReport, QuasiEstimate, QuasiMode,
    TwoBlockParams, Verdict, EXACT_EPSILON_LIMIT,
};
use tsid_core::{CountResult, Counter, Digraph, FillStrategy, Mode, PinnedPattern, Rational, Tournament, VertexSet};

use crate::config::{CheckJob, Format, HostSource, HostSpec, Job, RunConfig};

/// Exit status for a check whose property fails.
pub const EXIT_VIOLATED: i32 = 2;

/// What a run produced: the body for stdout (or `--out`), diagnostics for
/// stderr, and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    pub warnings: Vec<String>,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome {
            body,
            warnings: Vec::new(),
            exit_code: 0,
        }
    }
}

pub fn execute(cfg: &RunConfig) -> Result<Outcome> {
    let counter = Counter::with_budget(cfg.budget);
    match &cfg.job {
        Job::Construct { spec } => {
            let c = spec.build()?;
            let body = match cfg.format {
                Format::Text => construction_dgf(&c),
                Format::Json => pretty(&json!({
                    "family": c.family,
                    "description": c.description,
                    "designated": c.designated.as_ref().map(VertexSet::to_vec),
                    "warnings": c.warnings,
                    "digraph": write_dgf(&c.digraph),
                })),
            };
            Ok(Outcome {
                body,
                warnings: c.warnings,
                exit_code: 0,
            })
        }
        Job::Count {
            pattern,
            host,
            mode,
            pins,
        } => {
            let (d, _) = read_pattern(pattern)?;
            let t = read_host(host)?;
            let r = count(&d, &t, *mode, pins, &counter)?;
            Ok(Outcome::ok(match cfg.format {
                Format::Json => pretty(&r),
                Format::Text => format!(
                    "value {}\nbound {}\nratio {} ({:.6})\n",
                    r.value,
                    r.bound,
                    r.ratio,
                    approx(&r.ratio)
                ),
            }))
        }
        Job::Check { pattern, check } => {
            let (d, provenance) = read_pattern(pattern)?;
            run_check(&d, provenance, check, cfg.format, &counter)
        }
        Job::Quasi { host, mode, samples } => {
            let t = build_host(host)?;
            let mode = mode.unwrap_or(if t.n() <= EXACT_EPSILON_LIMIT {
                QuasiMode::ExactSmall
            } else {
                QuasiMode::Sampled {
                    count: *samples,
                    seed: cfg.seed.context("hosts above 20 vertices are sampled; pass --seed")?,
                }
            });
            let q = quasirandom_epsilon(&t, mode)?;
            Ok(Outcome::ok(match cfg.format {
                Format::Json => pretty(&q),
                Format::Text => quasi_text(&q),
            }))
        }
    }
}

fn pretty<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("results always serialize");
    s.push('\n');
    s
}

fn approx(r: &Rational) -> f64 {
    tsid_core::scalar::approx(r)
}

/// DGF/1 body under `#` provenance lines.
fn construction_dgf(c: &Construction) -> String {
    let mut s = String::new();
    let family = serde_json::to_string(&c.family).expect("families serialize");
    let _ = writeln!(s, "# family: {family}");
    let _ = writeln!(s, "# {}", c.description);
    if let Some(a) = &c.designated {
        let _ = writeln!(s, "# designated: {:?}", a.to_vec());
    }
    for w in &c.warnings {
        let _ = writeln!(s, "# warning: {w}");
    }
    s.push_str(&write_dgf(&c.digraph));
    s
}

/// The pattern, with its `#` header lines (or the file name) as provenance.
fn read_pattern(path: &Path) -> Result<(Digraph, String)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let d = parse_dgf(&text).with_context(|| format!("parsing {}", path.display()))?;
    let header: Vec<&str> = text
        .lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .map(str::trim)
        .collect();
    let provenance = if header.is_empty() {
        path.file_name().map_or_else(String::new, |f| f.to_string_lossy().into_owned())
    } else {
        header.join("; ")
    };
    Ok((d, provenance))
}

fn read_host(path: &Path) -> Result<Tournament> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_trn(&text).with_context(|| format!("parsing {}", path.display()))
}

fn build_host(src: &HostSource) -> Result<Tournament> {
    Ok(match src {
        HostSource::File { path } => read_host(path)?,
        HostSource::Transitive { n } => Tournament::transitive(*n),
        HostSource::Random { n, seed } => Tournament::seeded_random(*n, *seed),
        HostSource::TwoBlock { c, n, seed } => two_block_tournament(&TwoBlockParams::new(*n, c.clone(), *seed)?),
    })
}

fn count(d: &Digraph, t: &Tournament, mode: Mode, pins: &[(usize, usize)], counter: &Counter) -> Result<CountResult> {
    if mode == Mode::Homomorphisms {
        let value = counter.homomorphisms(d, t)?;
        let bound = baseline(t.n(), d.n(), d.edge_count());
        if bound == Rational::from_integer(0.into()) {
            bail!("host is empty, so the baseline is zero");
        }
        let ratio = Rational::from_integer(value.clone().into()) / &bound;
        return Ok(CountResult { value, bound, ratio });
    }
    if pins.is_empty() {
        return Ok(counter.labeled(d, t)?);
    }
    let mut pins = pins.to_vec();
    pins.sort_unstable();
    if let Some(&(v, _)) = pins.iter().find(|&&(v, _)| v >= d.n()) {
        bail!("pinned vertex {v} is not in the pattern");
    }
    if pins.windows(2).any(|w| w[0].0 == w[1].0) {
        bail!("a pattern vertex is pinned twice");
    }
    let set = VertexSet::from_members(d.n(), pins.iter().map(|&(v, _)| v));
    let images: Vec<usize> = pins.iter().map(|&(_, x)| x).collect();
    let p = PinnedPattern::new(d.clone(), set)?.anchored_at(&images)?;
    Ok(counter.labeled_pinned(&p, t)?)
}

fn run_check(d: &Digraph, provenance: String, check: &CheckJob, format: Format, counter: &Counter) -> Result<Outcome> {
    let mut report = match check {
        CheckJob::Anti { n_max } => check_anti_exhaustive(d, *n_max, counter)?,
        CheckJob::AntiFamily { family, ns } => {
            let family = match family {
                HostSpec::Transitive => HostFamily::Transitive,
                HostSpec::Blowup => HostFamily::Blowup {
                    base: d.clone(),
                    fill: FillStrategy::Lexicographic,
                },
                HostSpec::TwoBlock { c, seed } => HostFamily::TwoBlock {
                    c: c.clone(),
                    seed: *seed,
                },
            };
            check_anti_on_family(d, &family, ns, counter)?
        }
        CheckJob::StrongAnti { pins, n_max } => {
            if let Some(&v) = pins.iter().find(|&&v| v >= d.n()) {
                bail!("pinned vertex {v} is not in the pattern");
            }
            let set = VertexSet::from_members(d.n(), pins.iter().copied());
            check_strong_anti(&PinnedPattern::new(d.clone(), set)?, *n_max, counter)?
        }
        CheckJob::SidorenkoScan { n_max } => sidorenko_ratio_scan(d, *n_max, counter)?,
        CheckJob::Impartial { n_max } => check_impartial(d, *n_max, counter)?,
        CheckJob::TwoPath => {
            let r = two_path_condition(d);
            let body = match format {
                Format::Json => pretty(&r),
                Format::Text => match r.first_bad {
                    None => "two-path condition holds\n".to_string(),
                    Some((u, v)) => format!("two-path condition fails at ({u}, {v})\n"),
                },
            };
            return Ok(Outcome {
                body,
                warnings: Vec::new(),
                exit_code: if r.holds { 0 } else { EXIT_VIOLATED },
            });
        }
        CheckJob::Multiplicity { trials, seed } => {
            let r = homomorphism_multiplicity_probe(d, *trials, *seed, counter)?;
            let unique = r.max_observed <= 1 && r.designed_host_count == 1;
            let body = match format {
                Format::Json => pretty(&r),
                Format::Text => format!(
                    "designed host count {}\nmax over {} random hosts {}\nhosts with no copy {}\n{}\n",
                    r.designed_host_count, r.trials, r.max_observed, r.zero_hosts, r.note
                ),
            };
            return Ok(Outcome {
                body,
                warnings: Vec::new(),
                exit_code: if unique { 0 } else { EXIT_VIOLATED },
            });
        }
    };
    report.provenance = provenance;
    let exit_code = if report.is_violated() { EXIT_VIOLATED } else { 0 };
    let body = match format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Text => report_text(&report),
    };
    Ok(Outcome {
        body,
        warnings: Vec::new(),
        exit_code,
    })
}

fn report_text(r: &PropertyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "property  {:?}", r.property);
    let _ = writeln!(s, "regime    {:?}", r.regime);
    let verdict = match r.verdict {
        Verdict::HoldsUpTo { n_max } => format!("holds up to n = {n_max}"),
        Verdict::ViolatedBy { n } => format!("violated at n = {n}"),
        Verdict::Scanned { n_max } => format!("scanned up to n = {n_max}"),
    };
    let _ = writeln!(s, "verdict   {verdict}");
    let _ = writeln!(s, "extremal  {} ({:.6})", r.extremal_ratio, r.extremal_ratio_approx);
    if let Some(w) = &r.witness {
        let _ = writeln!(s, "witness   {}", w.lines().nth(1).unwrap_or(""));
    }
    if let Some(x) = &r.witness_ratio {
        let _ = writeln!(s, "ratio     {x} ({:.6})", approx(x));
    }
    if let Some(a) = &r.witness_anchor {
        let _ = writeln!(s, "anchor    {a:?}");
    }
    for p in &r.curve {
        let _ = writeln!(s, "n={:<4} max {:.6}  min {:.6}", p.n, p.max_ratio_approx, p.min_ratio_approx);
    }
    for note in &r.notes {
        let _ = writeln!(s, "note: {note}");
    }
    s
}

fn quasi_text(q: &QuasiEstimate) -> String {
    format!(
        "n {}\nepsilon {} ({:.6}){}\nA {:?}\nB {:?}\n",
        q.n,
        q.epsilon,
        q.epsilon_approx,
        if q.exact { "" } else { ", sampled lower bound" },
        q.a,
        q.b
    )
}
