//! Molecular pipeline: CSV ingestion, InChI-based complexity profiles,
//! quantile/linear relations to MS2 peak counts, threshold analysis and
//! group-separation tests.
//!
//! Ingested assembly values are taken at face value and never recomputed
//! from molecular graphs. InChI strings are treated at the character
//! level; the "payload" is everything after the standard `InChI=1S/`
//! prefix, falling back to the full string (with a flag) when the prefix
//! is absent.

use serde::Serialize;
use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::assembly::{self, HeuristicMethod};
use crate::bdm;
use crate::entropy;
use crate::error::{Error, Result};
use crate::lz;
use crate::par;
use crate::seq::Sequence;
use crate::stats::{self, PairedSamples};

pub const INCHI_STANDARD_PREFIX: &str = "InChI=1S/";
/// Block size for the BDM column of complexity profiles.
pub const PROFILE_BDM_BLOCK: usize = 4;
/// Permutations used for pairwise Cucconi tests.
pub const CUCCONI_PERMUTATIONS: usize = 10_000;
/// Minimum group size admitted to separation tests.
pub const MIN_GROUP_SIZE: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    SmallMolecule,
    Peptide,
    Dead,
    Abiotic,
    Biological,
    Blinded,
    Unknown,
}

impl Group {
    pub fn name(&self) -> &'static str {
        match self {
            Group::SmallMolecule => "small_molecule",
            Group::Peptide => "peptide",
            Group::Dead => "dead",
            Group::Abiotic => "abiotic",
            Group::Biological => "biological",
            Group::Blinded => "blinded",
            Group::Unknown => "unknown",
        }
    }

    /// Living/non-living labelling for threshold analysis; `None` for
    /// groups that carry no such information.
    pub fn is_living(&self) -> Option<bool> {
        match self {
            Group::Biological => Some(true),
            Group::Dead | Group::Abiotic => Some(false),
            _ => None,
        }
    }
}

impl FromStr for Group {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        let norm: String = s
            .trim()
            .chars()
            .map(|c| if c == ' ' || c == '-' { '_' } else { c.to_ascii_lowercase() })
            .collect();
        Ok(match norm.as_str() {
            "small_molecule" | "small_molecules" => Group::SmallMolecule,
            "peptide" | "peptides" => Group::Peptide,
            "dead" => Group::Dead,
            "abiotic" | "inorganic" => Group::Abiotic,
            "biological" | "living" | "organic" => Group::Biological,
            "blinded" | "blind" => Group::Blinded,
            _ => Group::Unknown,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MoleculeRecord {
    pub id: String,
    pub inchi: Option<String>,
    /// Characters after the standard prefix (full length when flagged).
    pub inchi_payload_length: Option<usize>,
    /// True when the standard prefix was missing and the full string
    /// length was used instead.
    pub payload_fallback: bool,
    /// Ingested assembly value.
    pub ma: Option<f64>,
    pub ms2_peaks: Option<u64>,
    pub group: Group,
}

impl MoleculeRecord {
    pub fn payload(&self) -> Option<&str> {
        let inchi = self.inchi.as_deref()?;
        Some(inchi.strip_prefix(INCHI_STANDARD_PREFIX).unwrap_or(inchi))
    }
}

/// Binds logical fields to CSV column names. `id` is required plus any
/// two of `inchi`, `ma`, `ms2`; `group` is optional but needed by the
/// classification stages.
#[derive(Debug, Clone, Default)]
pub struct ColumnMap {
    pub id: String,
    pub inchi: Option<String>,
    pub ma: Option<String>,
    pub ms2: Option<String>,
    pub group: Option<String>,
}

impl ColumnMap {
    /// Parse `id=...,inchi=...,ma=...,ms2=...,group=...`.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut map = ColumnMap::default();
        for pair in spec.split(',') {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| Error::InvalidColumnMap(format!("expected key=value, got {pair:?}")))?;
            let value = value.trim().to_string();
            match key.trim() {
                "id" => map.id = value,
                "inchi" => map.inchi = Some(value),
                "ma" => map.ma = Some(value),
                "ms2" => map.ms2 = Some(value),
                "group" => map.group = Some(value),
                other => {
                    return Err(Error::InvalidColumnMap(format!(
                        "unknown logical column {other:?}"
                    )))
                }
            }
        }
        map.validate()?;
        Ok(map)
    }

    pub fn validate(&self) -> Result<()> {
        if self.id.is_empty() {
            return Err(Error::InvalidColumnMap("id column is required".into()));
        }
        let data_columns =
            self.inchi.is_some() as usize + self.ma.is_some() as usize + self.ms2.is_some() as usize;
        if data_columns < 2 {
            return Err(Error::InvalidColumnMap(
                "need at least two of inchi, ma, ms2".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SkipNote {
    /// 1-based data row (excluding the header).
    pub row: usize,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Ingest {
    pub records: Vec<MoleculeRecord>,
    pub skipped: Vec<SkipNote>,
}

pub fn ingest_csv(path: &Path, columns: &ColumnMap) -> Result<Ingest> {
    columns.validate()?;
    let mut reader = csv::Reader::from_path(path)?;
    let headers = reader.headers()?.clone();
    let col = |name: &str| -> Result<usize> {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::MissingColumn(name.to_string()))
    };
    let id_col = col(&columns.id)?;
    let inchi_col = columns.inchi.as_deref().map(col).transpose()?;
    let ma_col = columns.ma.as_deref().map(col).transpose()?;
    let ms2_col = columns.ms2.as_deref().map(col).transpose()?;
    let group_col = columns.group.as_deref().map(col).transpose()?;

    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let rownum = i + 1;
        let row = row?;
        let field = |c: usize| row.get(c).unwrap_or("").trim().to_string();
        let id = field(id_col);
        if id.is_empty() {
            skipped.push(SkipNote {
                row: rownum,
                reason: "empty id".into(),
            });
            continue;
        }
        let inchi = inchi_col.map(&field).filter(|s| !s.is_empty());
        let ma = match ma_col.map(&field) {
            Some(raw) if !raw.is_empty() => match raw.parse::<f64>() {
                Ok(v) if v >= 0.0 => Some(v),
                _ => {
                    skipped.push(SkipNote {
                        row: rownum,
                        reason: format!("unparseable ma value {raw:?}"),
                    });
                    continue;
                }
            },
            _ => None,
        };
        let ms2_peaks = match ms2_col.map(&field) {
            Some(raw) if !raw.is_empty() => match raw.parse::<u64>() {
                Ok(v) => Some(v),
                Err(_) => {
                    skipped.push(SkipNote {
                        row: rownum,
                        reason: format!("unparseable ms2 value {raw:?}"),
                    });
                    continue;
                }
            },
            _ => None,
        };
        let group = group_col
            .map(&field)
            .map(|g| g.parse::<Group>().unwrap())
            .unwrap_or(Group::Unknown);
        let (payload_len, fallback) = match &inchi {
            Some(s) => match s.strip_prefix(INCHI_STANDARD_PREFIX) {
                Some(rest) => (Some(rest.chars().count()), false),
                None => (Some(s.chars().count()), true),
            },
            None => (None, false),
        };
        records.push(MoleculeRecord {
            id,
            inchi,
            inchi_payload_length: payload_len,
            payload_fallback: fallback,
            ma,
            ms2_peaks,
            group,
        });
    }
    Ok(Ingest { records, skipped })
}

/// Measure names produced by [`complexity_profile`].
pub const PROFILE_MEASURES: [&str; 5] = ["lzw", "ai", "entropy", "bdm", "length"];

/// LZW codeword count, heuristic assembly index, symbol entropy, BDM
/// (LZW-bit estimator) and payload length of one record's InChI payload.
pub fn complexity_profile(rec: &MoleculeRecord) -> Result<BTreeMap<String, f64>> {
    let payload = rec
        .payload()
        .ok_or_else(|| Error::Degenerate(format!("record {} has no InChI", rec.id)))?;
    if payload.is_empty() {
        return Err(Error::Degenerate(format!("record {} has an empty InChI", rec.id)));
    }
    let seq = Sequence::from_text(payload)?;
    let mut out = BTreeMap::new();
    out.insert(
        "lzw".to_string(),
        lz::lzw_encode(&seq)?.codeword_count as f64,
    );
    out.insert(
        "ai".to_string(),
        assembly::heuristic_index(&seq, HeuristicMethod::BestOf)?.index as f64,
    );
    out.insert(
        "entropy".to_string(),
        entropy::shannon_entropy(&seq, 1)?.h_symbol,
    );
    out.insert(
        "bdm".to_string(),
        bdm::bdm(
            &seq,
            PROFILE_BDM_BLOCK.min(seq.len()),
            bdm::Estimator::LzwBits,
        )?,
    );
    out.insert("length".to_string(), payload.chars().count() as f64);
    Ok(out)
}

/// Profiles for a batch of records, skipping those without InChI.
pub fn profile_all(records: &[MoleculeRecord]) -> Vec<Option<BTreeMap<String, f64>>> {
    par::map_slice(records, |_, rec| complexity_profile(rec).ok())
}

#[derive(Debug, Clone, Serialize)]
pub struct QuantileLine {
    pub tau: f64,
    pub intercept: f64,
    pub slope: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Ms2Relation {
    pub measure: String,
    pub n: usize,
    pub pearson_r: f64,
    pub lines: Vec<QuantileLine>,
    /// Residuals against the median line: (record id, residual).
    pub residuals: Vec<(String, f64)>,
}

/// Quantile regressions of `measure` against MS2 peak counts.
pub fn ms2_relation(
    records: &[MoleculeRecord],
    measure: &str,
    measure_values: &[Option<f64>],
    taus: &[f64],
) -> Result<Ms2Relation> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut ids = Vec::new();
    for (rec, value) in records.iter().zip(measure_values) {
        if let (Some(ms2), Some(v)) = (rec.ms2_peaks, value) {
            xs.push(ms2 as f64);
            ys.push(*v);
            ids.push(rec.id.clone());
        }
    }
    if xs.len() < 10 {
        return Err(Error::InsufficientData {
            needed: 10,
            got: xs.len(),
        });
    }
    let paired = PairedSamples::new(xs.clone(), ys.clone())?;
    let pearson_r = stats::pearson(&paired)?;
    let mut lines = Vec::new();
    for &tau in taus {
        let (intercept, slope) = stats::quantile_regression(&paired, tau)?;
        lines.push(QuantileLine {
            tau,
            intercept,
            slope,
        });
    }
    let (mi, ms) = stats::quantile_regression(&paired, 0.5)?;
    let residuals = ids
        .into_iter()
        .zip(xs.iter().zip(&ys))
        .map(|(id, (x, y))| (id, y - mi - ms * x))
        .collect();
    Ok(Ms2Relation {
        measure: measure.to_string(),
        n: paired.len(),
        pearson_r,
        lines,
        residuals,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ThresholdReport {
    pub measure: String,
    pub threshold: f64,
    pub true_positive: usize,
    pub false_positive: usize,
    pub true_negative: usize,
    pub false_negative: usize,
    pub precision: f64,
    pub recall: f64,
    /// The threshold mapped into MS2-peak space through the tau-quantile
    /// line of measure against MS2, when that line is available.
    pub ms2_equivalent_threshold: Option<f64>,
    pub quantile_tau: f64,
}

/// Confusion counts for the rule `measure > threshold => living`, plus
/// the MS2-space image of the threshold under the quantile line.
pub fn threshold_analysis(
    records: &[MoleculeRecord],
    measure: &str,
    measure_values: &[Option<f64>],
    threshold: f64,
    tau: f64,
) -> Result<ThresholdReport> {
    let mut tp = 0;
    let mut fp = 0;
    let mut tn = 0;
    let mut fn_ = 0;
    let mut seen_living = false;
    let mut seen_nonliving = false;
    for (rec, value) in records.iter().zip(measure_values) {
        let (Some(living), Some(v)) = (rec.group.is_living(), value) else {
            continue;
        };
        seen_living |= living;
        seen_nonliving |= !living;
        match (*v > threshold, living) {
            (true, true) => tp += 1,
            (true, false) => fp += 1,
            (false, false) => tn += 1,
            (false, true) => fn_ += 1,
        }
    }
    if !(seen_living && seen_nonliving) {
        return Err(Error::SingleClass);
    }
    let precision = if tp + fp > 0 {
        tp as f64 / (tp + fp) as f64
    } else {
        0.0
    };
    let recall = if tp + fn_ > 0 {
        tp as f64 / (tp + fn_) as f64
    } else {
        0.0
    };
    // Invert measure = a + b * ms2 at the threshold.
    let ms2_equivalent_threshold = ms2_relation(records, measure, measure_values, &[tau])
        .ok()
        .and_then(|rel| {
            let line = &rel.lines[0];
            (line.slope != 0.0).then(|| (threshold - line.intercept) / line.slope)
        });
    Ok(ThresholdReport {
        measure: measure.to_string(),
        threshold,
        true_positive: tp,
        false_positive: fp,
        true_negative: tn,
        false_negative: fn_,
        precision,
        recall,
        ms2_equivalent_threshold,
        quantile_tau: tau,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupSeparation {
    pub measure: String,
    /// (group a, group b, cucconi statistic, permutation p-value).
    pub pairwise: Vec<(String, String, f64, f64)>,
    pub kruskal_h: f64,
    pub kruskal_p: f64,
    /// Groups left out for being smaller than [`MIN_GROUP_SIZE`].
    pub excluded: Vec<(String, usize)>,
}

/// Pairwise Cucconi p-values and a Kruskal-Wallis omnibus p for one
/// measure across the record groups.
pub fn group_separation(
    records: &[MoleculeRecord],
    measure: &str,
    measure_values: &[Option<f64>],
    seed: u64,
) -> Result<GroupSeparation> {
    let mut by_group: BTreeMap<Group, Vec<f64>> = BTreeMap::new();
    for (rec, value) in records.iter().zip(measure_values) {
        if let Some(v) = value {
            by_group.entry(rec.group).or_default().push(*v);
        }
    }
    let mut excluded = Vec::new();
    let mut groups: Vec<(Group, Vec<f64>)> = Vec::new();
    for (g, values) in by_group {
        if values.len() < MIN_GROUP_SIZE {
            excluded.push((g.name().to_string(), values.len()));
        } else {
            groups.push((g, values));
        }
    }
    if groups.len() < 2 {
        return Err(Error::InsufficientData {
            needed: 2,
            got: groups.len(),
        });
    }
    let (h, p) = stats::kruskal_wallis(
        &groups.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(),
    )?;
    let mut pairwise = Vec::new();
    for i in 0..groups.len() {
        for j in i + 1..groups.len() {
            let (c, pv) = stats::cucconi(&groups[i].1, &groups[j].1, CUCCONI_PERMUTATIONS, seed)?;
            pairwise.push((
                groups[i].0.name().to_string(),
                groups[j].0.name().to_string(),
                c,
                pv,
            ));
        }
    }
    Ok(GroupSeparation {
        measure: measure.to_string(),
        pairwise,
        kruskal_h: h,
        kruskal_p: p,
        excluded,
    })
}
