//! Precomputed right polarities for all `2^16` indicator sets.
//!
//! Text format, one record per line:
//!
//! ```text
//! mbti-szondi-cache 1
//! fingerprint <sha256 of the interpretation rows>
//! entries 65536
//! <mask as 4 hex digits> count=<n> [<box>] [<box>] ...
//! ```
//!
//! Entry `k` sits on line `k + 3` (0-based) and describes the indicator set
//! with bit mask `k`. Stored counts are re-derived from the boxes on read.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::interpretation::Interpretation;
use crate::model::IndicatorSet;
use crate::polarity::Connection;
use crate::profile_set::ProfileSet;

pub const FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "mbti-szondi-cache";
const HEADER_LINES: usize = 3;
pub const ENTRY_COUNT: usize = 1 << 16;

/// Computes every entry and writes the cache atomically (temp file, then
/// rename).
pub fn precompute(connection: &Connection<Interpretation>, path: &Path) -> Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut out = BufWriter::new(fs::File::create(&tmp)?);
        writeln!(out, "{MAGIC} {FORMAT_VERSION}")?;
        writeln!(
            out,
            "fingerprint {}",
            connection.translation().fingerprint()
        )?;
        writeln!(out, "entries {ENTRY_COUNT}")?;
        for set in IndicatorSet::all_sets() {
            let image = connection.right_polarity(set);
            writeln!(out, "{:04x} {image}", set.bits())?;
        }
        out.flush()?;
        out.into_inner().map_err(|e| e.into_error())?.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// A loaded cache file. Entries are parsed on demand.
pub struct CacheFile {
    fingerprint: String,
    lines: Vec<String>,
}

impl CacheFile {
    pub fn open(path: &Path) -> Result<CacheFile> {
        CacheFile::parse(&fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<CacheFile> {
        let lines: Vec<String> = text.lines().map(str::to_owned).collect();
        let header = |i: usize, key: &str| -> Result<String> {
            lines
                .get(i)
                .and_then(|l| l.strip_prefix(key))
                .and_then(|r| r.strip_prefix(' '))
                .map(str::to_owned)
                .ok_or_else(|| Error::CorruptCache(format!("missing `{key}` header")))
        };
        let version = header(0, MAGIC)?;
        if version != FORMAT_VERSION.to_string() {
            return Err(Error::CorruptCache(format!(
                "unsupported version {version}"
            )));
        }
        let fingerprint = header(1, "fingerprint")?;
        let entries = header(2, "entries")?;
        if entries != ENTRY_COUNT.to_string() || lines.len() != HEADER_LINES + ENTRY_COUNT {
            return Err(Error::CorruptCache(format!(
                "expected {ENTRY_COUNT} entries, header says {entries}, file has {}",
                lines.len().saturating_sub(HEADER_LINES)
            )));
        }
        Ok(CacheFile { fingerprint, lines })
    }

    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    /// Rejects the cache unless it was built for `interp`.
    pub fn check_fingerprint(&self, interp: &Interpretation) -> Result<()> {
        let expected = interp.fingerprint();
        if expected != self.fingerprint {
            return Err(Error::FingerprintMismatch {
                expected,
                found: self.fingerprint.clone(),
            });
        }
        Ok(())
    }

    /// The stored image of `set`, with its count verified against its boxes.
    pub fn entry(&self, set: IndicatorSet) -> Result<ProfileSet> {
        let line = &self.lines[HEADER_LINES + set.bits() as usize];
        let corrupt = |why: String| Error::CorruptCache(format!("entry {:04x}: {why}", set.bits()));
        let (mask, body) = line
            .split_once(' ')
            .ok_or_else(|| corrupt("malformed line".into()))?;
        if u16::from_str_radix(mask, 16).ok() != Some(set.bits()) {
            return Err(corrupt(format!("labelled `{mask}`")));
        }
        body.parse::<ProfileSet>().map_err(|e| corrupt(e.message))
    }

    /// Looks up `set` after checking the fingerprint.
    pub fn lookup(&self, interp: &Interpretation, set: IndicatorSet) -> Result<ProfileSet> {
        self.check_fingerprint(interp)?;
        self.entry(set)
    }

    /// Parses and verifies every entry.
    pub fn verify_all(&self) -> Result<()> {
        for set in IndicatorSet::all_sets() {
            self.entry(set)?;
        }
        Ok(())
    }
}
