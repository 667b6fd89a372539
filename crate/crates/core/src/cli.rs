//! Command implementations behind the `mbti-szondi` binary. Each command
//! returns a [`QueryResult`] or report that renders in human or machine form.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cache::{self, CacheFile};
use crate::error::{Error, Result};
use crate::interpretation::{validate, Interpretation};
use crate::model::{IndicatorSet, Profile};
use crate::polarity::{Connection, ConnectionReport, Suite};
use crate::profile_set::ProfileSet;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const VERIFICATION: i32 = 3;
    pub const CACHE: i32 = 4;
    pub const INTERPRETATION: i32 = 5;
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) | Error::EntryParse { .. } | Error::ProfileIndexOutOfRange(_) => {
            exit::PARSE
        }
        Error::FingerprintMismatch { .. } | Error::CorruptCache(_) => exit::CACHE,
        Error::Document(_)
        | Error::UnsatisfiableRow(_)
        | Error::ConsistencyViolation { .. }
        | Error::NegationUnsupported => exit::INTERPRETATION,
        Error::Io(_) => exit::FAILURE,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Machine,
}

/// Output of `to-spp`, `to-mbti` and `lookup`.
#[derive(Debug, Clone, Serialize)]
pub struct QueryResult {
    pub command: String,
    pub input: String,
    #[serde(flatten)]
    pub output: QueryOutput,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum QueryOutput {
    Indicators {
        indicators: String,
    },
    Profiles {
        count: u64,
        #[serde(skip_serializing_if = "Vec::is_empty")]
        sample: Vec<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        boxes: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        enumerated_to: Option<PathBuf>,
    },
}

impl QueryResult {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Machine => serde_json::to_string(self).expect("query results serialize"),
            Format::Human => {
                let mut out = String::new();
                match &self.output {
                    QueryOutput::Indicators { indicators } => {
                        out.push_str(&format!("{indicators}\n"));
                    }
                    QueryOutput::Profiles {
                        count,
                        sample,
                        seed,
                        boxes,
                        enumerated_to,
                    } => {
                        out.push_str(&format!("count {count}\n"));
                        if let Some(seed) = seed {
                            out.push_str(&format!("seed {seed}\n"));
                        }
                        for p in sample {
                            out.push_str(&format!("  {p}\n"));
                        }
                        if let Some(b) = boxes {
                            out.push_str(&format!("boxes {b}\n"));
                        }
                        if let Some(path) = enumerated_to {
                            out.push_str(&format!("enumerated to {}\n", path.display()));
                        }
                    }
                }
                out
            }
        }
    }
}

/// Options for `to-spp`.
#[derive(Debug, Clone, Default)]
pub struct ToSppOptions {
    pub sample: Option<usize>,
    pub seed: u64,
    pub boxes: bool,
    pub enumerate: Option<PathBuf>,
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn profiles_output(set: &ProfileSet, opts: &ToSppOptions) -> Result<QueryOutput> {
    let mut sample = Vec::new();
    let mut seed = None;
    if let Some(n) = opts.sample {
        seed = Some(opts.seed);
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let count = set.count();
        if count > 0 {
            for _ in 0..n {
                let p = set.nth(rng.gen_range(0..count)).expect("rank below count");
                sample.push(p.to_string());
            }
        }
    }
    if let Some(path) = &opts.enumerate {
        let mut out = BufWriter::new(fs::File::create(path)?);
        for p in set.iter() {
            writeln!(out, "{p}")?;
        }
        out.flush()?;
    }
    Ok(QueryOutput::Profiles {
        count: set.count(),
        sample,
        seed,
        boxes: opts.boxes.then(|| set.canonical().to_string()),
        enumerated_to: opts.enumerate.clone(),
    })
}

/// `to-spp`: right polarity of an indicator set.
pub fn to_spp(conn: &Connection, indicators: &str, opts: &ToSppOptions) -> Result<QueryResult> {
    let set: IndicatorSet = indicators.parse()?;
    let start = Instant::now();
    let image = conn.right_polarity(set);
    let elapsed = start.elapsed();
    Ok(QueryResult {
        command: "to-spp".into(),
        input: set.to_string(),
        output: profiles_output(&image, opts)?,
        elapsed_ms: millis(elapsed),
    })
}

/// `to-mbti`: left polarity of a single profile.
pub fn to_mbti(conn: &Connection, profile: &str) -> Result<QueryResult> {
    let profile: Profile = profile.parse()?;
    let start = Instant::now();
    let set = conn.left_polarity_of(&[profile]);
    Ok(QueryResult {
        command: "to-mbti".into(),
        input: profile.to_string(),
        output: QueryOutput::Indicators {
            indicators: set.to_string(),
        },
        elapsed_ms: millis(start.elapsed()),
    })
}

/// `verify`: runs a suite; the caller exits non-zero unless it passed.
pub fn verify(conn: &Connection, suite: Suite, trials: usize, seed: u64) -> ConnectionReport {
    conn.verify_interpretation(suite, trials, seed)
}

pub fn precompute(conn: &Connection, path: &Path) -> Result<Duration> {
    let start = Instant::now();
    cache::precompute(conn, path)?;
    Ok(start.elapsed())
}

/// `lookup`: answers from the cache file without recomputation.
pub fn lookup(
    interp: &Interpretation,
    indicators: &str,
    cache_path: &Path,
    opts: &ToSppOptions,
) -> Result<QueryResult> {
    let set: IndicatorSet = indicators.parse()?;
    let start = Instant::now();
    let cache = CacheFile::open(cache_path)?;
    let image = cache.lookup(interp, set)?;
    let elapsed = start.elapsed();
    Ok(QueryResult {
        command: "lookup".into(),
        input: set.to_string(),
        output: profiles_output(&image, opts)?,
        elapsed_ms: millis(elapsed),
    })
}

/// `interp show`: the active interpretation as a loadable document.
pub fn interp_show(interp: &Interpretation) -> String {
    format!(
        "# fingerprint {}\n{}",
        interp.fingerprint(),
        interp.to_document()
    )
}

/// `interp check`: validation errors and warnings plus the dominance rule.
pub fn interp_check(interp: &Interpretation) -> (bool, String) {
    let report = validate(interp);
    let mut out = String::new();
    for e in &report.errors {
        out.push_str(&format!("error: {e}\n"));
    }
    for w in &report.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out.push_str(&format!(
        "dominance rule: {}\n",
        if interp.dominance_consistency() {
            "consistent"
        } else {
            "violated"
        }
    ));
    out.push_str(if report.is_ok() { "ok\n" } else { "invalid\n" });
    (report.is_ok(), out)
}

/// Loads `path` if given, otherwise the built-in table.
pub fn load_interpretation(path: Option<&Path>) -> Result<Interpretation> {
    match path {
        None => Ok(Interpretation::builtin()),
        Some(p) => Interpretation::load(&fs::read_to_string(p)?),
    }
}
