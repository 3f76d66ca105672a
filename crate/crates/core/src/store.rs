//! Append-only JSONL persistence for scored tuples, plus CSV export.
//!
//! One record per line keeps the store resumable and corruption-local: a
//! damaged line loses exactly one record, and appending never rewrites
//! history. Big integers serialize as decimal strings — JSON numbers stop
//! being faithful past 2⁵³ and the norms here get much larger than that.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::conditions::ConditionProfile;
use crate::quality::QualityReport;
use crate::ring::Ring;

/// Family label used for user-supplied tuples that belong to no family.
pub const ADHOC_FAMILY: &str = "adhoc";

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("store I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("record serialization: {0}")]
    Serde(#[from] serde_json::Error),
    #[error("CSV export: {0}")]
    Csv(#[from] csv::Error),
}

mod biguint_decimal {
    use num_bigint::BigUint;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse::<BigUint>().map_err(|e| D::Error::custom(format!("invalid integer literal: {e}")))
    }
}

/// The quality fields that persist with a record.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StoredQuality {
    #[serde(with = "biguint_decimal")]
    pub max_norm: BigUint,
    #[serde(with = "biguint_decimal")]
    pub rad: BigUint,
    pub rad_complete: bool,
    pub q: f64,
    pub q_is_lower_bound: bool,
}

impl From<&QualityReport> for StoredQuality {
    fn from(r: &QualityReport) -> Self {
        StoredQuality {
            max_norm: r.max_norm.clone(),
            rad: r.rad_value.clone(),
            rad_complete: r.rad_complete,
            q: r.q,
            q_is_lower_bound: r.q_is_lower_bound,
        }
    }
}

/// One scored tuple: where it lives, how it classifies, how good it is,
/// and where it sits in its family's enumeration (for resuming).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TupleRecord {
    pub ring: Ring,
    pub n: u32,
    /// Canonical element strings; they parse back through the ring modules
    /// to entries whose recomputed conditions and quality match the stored
    /// values.
    pub entries: Vec<String>,
    pub conditions: ConditionProfile,
    pub quality: StoredQuality,
    /// Family id, or [`ADHOC_FAMILY`] for user-supplied tuples.
    pub family_id: String,
    pub params: String,
    /// Zero-based position within the family enumeration; 0 for ad-hoc
    /// records.
    pub index: u64,
}

impl TupleRecord {
    pub fn new(
        ring: Ring,
        entries: Vec<String>,
        conditions: ConditionProfile,
        report: &QualityReport,
        family_id: impl Into<String>,
        params: impl Into<String>,
        index: u64,
    ) -> Self {
        TupleRecord {
            ring,
            n: entries.len() as u32,
            entries,
            conditions,
            quality: StoredQuality::from(report),
            family_id: family_id.into(),
            params: params.into(),
            index,
        }
    }
}

/// A JSONL file of [`TupleRecord`]s, one per line.
#[derive(Clone, Debug)]
pub struct JsonlStore {
    path: PathBuf,
}

impl JsonlStore {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        JsonlStore { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Append one record. The whole line goes out in a single write so a
    /// crash can't leave a partial record in front of a later writer.
    pub fn append(&self, record: &TupleRecord) -> Result<(), StoreError> {
        let mut line = serde_json::to_string(record)?;
        line.push('\n');
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        file.write_all(line.as_bytes())?;
        file.flush()?;
        Ok(())
    }

    /// Load every parseable record in file order. Damaged lines are
    /// skipped, not fatal; the second component counts them. A missing
    /// file is an empty store.
    pub fn load(&self) -> Result<(Vec<TupleRecord>, usize), StoreError> {
        let file = match std::fs::File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok((Vec::new(), 0)),
            Err(e) => return Err(e.into()),
        };
        let mut records = Vec::new();
        let mut skipped = 0usize;
        for line in BufReader::new(file).lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<TupleRecord>(&line) {
                Ok(r) => records.push(r),
                Err(_) => skipped += 1,
            }
        }
        Ok((records, skipped))
    }

    /// Largest stored enumeration index for one family, if any record of
    /// that family exists.
    pub fn max_index_for(&self, family_id: &str) -> Result<Option<u64>, StoreError> {
        let (records, _) = self.load()?;
        Ok(records.iter().filter(|r| r.family_id == family_id).map(|r| r.index).max())
    }
}

/// CSV header, fixed column order.
pub const CSV_HEADER: [&str; 9] =
    ["ring", "n", "family", "params", "q", "rad", "rad_complete", "max_norm", "entries"];

/// Write records as CSV with the stable column order of [`CSV_HEADER`].
/// Entries are joined with ";". The q column uses the shortest decimal
/// form that parses back to the identical double.
pub fn export_csv<W: Write>(records: &[TupleRecord], out: W) -> Result<(), StoreError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.ring.as_str().to_string(),
            r.n.to_string(),
            r.family_id.clone(),
            r.params.clone(),
            r.quality.q.to_string(),
            r.quality.rad.to_string(),
            r.quality.rad_complete.to_string(),
            r.quality.max_norm.to_string(),
            r.entries.join(";"),
        ])?;
    }
    w.flush().map_err(StoreError::Io)?;
    Ok(())
}
