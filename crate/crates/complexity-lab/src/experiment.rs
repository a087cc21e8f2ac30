//! Experiment orchestration and report serialization.
//!
//! Each runner takes a seeded config, distributes trials across workers
//! (trial `t` always uses the RNG stream derived from `(seed, t)`, so
//! reports are independent of worker count), and emits a JSON report plus
//! CSV matrices for plotting. With `stable: true` the runtime metadata is
//! left out and rerunning the same config yields byte-identical output.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use crate::assembly::{self, HeuristicMethod};
use crate::bdm::{self, Estimator};
use crate::ctm::{ctm_build, CtmTable};
use crate::entropy;
use crate::error::{Error, Result};
use crate::generate::{generate, GeneratorKind, GeneratorSpec};
use crate::lz;
use crate::molecular::{self, ColumnMap, MoleculeRecord};
use crate::par;
use crate::seq::Sequence;
use crate::stats::{self, Family, FitReport, PairedSamples};

/// Growth checkpoints reported by the correlation tables.
pub const CHECKPOINTS: [usize; 11] = [8, 14, 20, 40, 60, 80, 100, 200, 500, 1000, 3000];

/// Entropy-rate window cap used by every experiment.
pub const ENTROPY_WINDOW: usize = entropy::ENTROPY_WINDOW_DEFAULT;

/// Block size for BDM columns over non-binary experiment alphabets.
pub const BDM_BLOCK: usize = 4;

/// CTM table parameters for the fixed-length suite (ternary alphabet).
pub const ZBC_CTM_STATES: u8 = 2;
pub const ZBC_CTM_SYMBOLS: u8 = 3;
pub const ZBC_CTM_CUTOFF: u32 = 150;

pub const MEASURE_NAMES: [&str; 4] = ["lzw", "ai", "entropy_rate", "bdm"];

#[derive(Debug, Clone, Copy, Serialize)]
pub struct MeasureSample {
    pub lzw: f64,
    pub ai: f64,
    pub entropy_rate: f64,
    pub bdm: f64,
}

impl MeasureSample {
    pub fn get(&self, name: &str) -> f64 {
        match name {
            "lzw" => self.lzw,
            "ai" => self.ai,
            "entropy_rate" => self.entropy_rate,
            "bdm" => self.bdm,
            _ => f64::NAN,
        }
    }
}

fn eval_measures(x: &Sequence, table: Option<&CtmTable>) -> Result<MeasureSample> {
    let lzw = lz::lzw_encode(x)?.codeword_count as f64;
    let ai = assembly::heuristic_index(x, HeuristicMethod::BestOf)?.index as f64;
    let (rate, _) = entropy::entropy_rate(x, ENTROPY_WINDOW)?;
    let block = BDM_BLOCK.min(x.len());
    let bdm_value = match table {
        Some(t) if x.alphabet_size() <= t.symbols as usize => bdm::bdm(
            x,
            block.min(3),
            Estimator::Ctm {
                table: t,
                fallback: true,
            },
        )?,
        _ => bdm::bdm(x, block, Estimator::LzwBits)?,
    };
    Ok(MeasureSample {
        lzw,
        ai,
        entropy_rate: rate,
        bdm: bdm_value,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct BoxStats {
    pub measure: String,
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
    pub mean: f64,
    pub std: f64,
}

fn box_stats(measure: &str, values: &[f64]) -> BoxStats {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mean = sorted.iter().sum::<f64>() / sorted.len() as f64;
    let var = sorted.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>()
        / (sorted.len().max(2) - 1) as f64;
    BoxStats {
        measure: measure.to_string(),
        min: sorted[0],
        q1: stats::quantile_sorted(&sorted, 0.25),
        median: stats::quantile_sorted(&sorted, 0.5),
        q3: stats::quantile_sorted(&sorted, 0.75),
        max: sorted[sorted.len() - 1],
        mean,
        std: var.sqrt(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RuntimeMeta {
    pub duration_secs: f64,
    pub threads: usize,
    pub unix_timestamp: u64,
}

fn runtime_meta(started: Instant) -> RuntimeMeta {
    #[cfg(feature = "parallel")]
    let threads = rayon::current_num_threads();
    #[cfg(not(feature = "parallel"))]
    let threads = 1;
    RuntimeMeta {
        duration_secs: started.elapsed().as_secs_f64(),
        threads,
        unix_timestamp: std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
    }
}

// ---------------------------------------------------------------------------
// Fixed-length ZBC suite
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct ZbcConfig {
    pub length: usize,
    pub trials: u64,
    pub seed: u64,
    pub entropy_window: usize,
    pub bdm_block: usize,
    pub bdm_estimator: String,
    pub ai_estimator: String,
    /// What the primary Welch entries are computed on.
    pub welch_on: String,
}

impl ZbcConfig {
    pub fn new(length: usize, trials: u64, seed: u64) -> Self {
        Self {
            length,
            trials,
            seed,
            entropy_window: ENTROPY_WINDOW,
            bdm_block: 3,
            bdm_estimator: format!(
                "ctm({},{},{}) with lzw_bits fallback",
                ZBC_CTM_STATES, ZBC_CTM_SYMBOLS, ZBC_CTM_CUTOFF
            ),
            ai_estimator: "best_of(lz_prefix, greedy_repeat)".to_string(),
            welch_on: "five_number_summary".to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WelchEntry {
    pub a: String,
    pub b: String,
    pub t: f64,
    pub p: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MeasureFits {
    pub measure: String,
    pub selected: Option<Family>,
    pub reports: Vec<FitReport>,
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZbcReport {
    pub experiment: String,
    pub config: ZbcConfig,
    pub box_plot: Vec<BoxStats>,
    /// Welch tests on the five-number summaries of each pair of measures.
    /// Summary-level testing is what produces the small degrees of freedom
    /// behind published pairwise t values of this kind; the full-sample
    /// tests are in `welch_raw`.
    pub welch: Vec<WelchEntry>,
    /// Welch tests on the raw per-trial samples.
    pub welch_raw: Vec<WelchEntry>,
    pub fits: Vec<MeasureFits>,
    /// (ai, lzw, count) over all trials.
    pub density: Vec<(u32, u32, u64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime: Option<RuntimeMeta>,
}

/// Measures over seeded fixed-length draws from the ZBC multiset, with
/// pairwise Welch tests and distribution fits per measure.
pub fn run_zbc_permutations(cfg: &ZbcConfig, stable: bool) -> Result<ZbcReport> {
    if cfg.trials < 2 {
        return Err(Error::InsufficientData {
            needed: 2,
            got: cfg.trials as usize,
        });
    }
    let started = Instant::now();
    let table = ctm_build(ZBC_CTM_STATES, ZBC_CTM_SYMBOLS, ZBC_CTM_CUTOFF)?;
    let samples: Vec<MeasureSample> = par::map_range(cfg.trials as usize, |t| {
        let spec = GeneratorSpec::new(GeneratorKind::ZbcPermutation, cfg.length, cfg.seed, t as u64);
        let x = generate(&spec).expect("positive length");
        eval_measures(&x, Some(&table)).expect("measures are total on non-empty input")
    })
    .into_iter()
    .collect();

    let columns: BTreeMap<&str, Vec<f64>> = MEASURE_NAMES
        .iter()
        .map(|&m| (m, samples.iter().map(|s| s.get(m)).collect()))
        .collect();

    let box_plot = MEASURE_NAMES
        .iter()
        .map(|&m| box_stats(m, &columns[m]))
        .collect();

    let five_number = |m: &str| -> Vec<f64> {
        let b = box_stats(m, &columns[m]);
        vec![b.min, b.q1, b.median, b.q3, b.max]
    };
    let welch_pairs = [("lzw", "ai"), ("lzw", "bdm"), ("ai", "bdm")];
    let run_welch = |samples: &dyn Fn(&str) -> Vec<f64>| -> Vec<WelchEntry> {
        welch_pairs
            .iter()
            .map(|&(a, b)| match stats::welch_t(&samples(a), &samples(b)) {
                Ok((t, p)) => WelchEntry {
                    a: a.to_string(),
                    b: b.to_string(),
                    t,
                    p,
                    note: None,
                },
                Err(e) => WelchEntry {
                    a: a.to_string(),
                    b: b.to_string(),
                    t: f64::NAN,
                    p: f64::NAN,
                    note: Some(e.to_string()),
                },
            })
            .collect()
    };
    let welch = run_welch(&five_number);
    let welch_raw = run_welch(&|m: &str| columns[m].clone());

    let fits = MEASURE_NAMES
        .iter()
        .map(|&m| match stats::best_fit(&columns[m]) {
            Ok((selected, reports)) => MeasureFits {
                measure: m.to_string(),
                selected: Some(selected),
                reports,
                skipped: None,
            },
            Err(e) => MeasureFits {
                measure: m.to_string(),
                selected: None,
                reports: Vec::new(),
                skipped: Some(format!("insufficient data: {e}")),
            },
        })
        .collect();

    let mut density: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for s in &samples {
        *density.entry((s.ai as u32, s.lzw as u32)).or_insert(0) += 1;
    }
    let density = density.into_iter().map(|((a, l), c)| (a, l, c)).collect();

    Ok(ZbcReport {
        experiment: "zbc".to_string(),
        config: cfg.clone(),
        box_plot,
        welch,
        welch_raw,
        fits,
        density,
        runtime: (!stable).then(|| runtime_meta(started)),
    })
}

// ---------------------------------------------------------------------------
// Growing sequences
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowingKind {
    Random,
    Pattern5,
    Pattern10,
    Zbc,
}

impl GrowingKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "random" => Some(Self::Random),
            "pattern5" => Some(Self::Pattern5),
            "pattern10" => Some(Self::Pattern10),
            "zbc" => Some(Self::Zbc),
            _ => None,
        }
    }

    fn generator(&self) -> GeneratorKind {
        match self {
            Self::Random => GeneratorKind::UniformRandom,
            Self::Pattern5 => GeneratorKind::Pattern("ABCDE".into()),
            Self::Pattern10 => GeneratorKind::Pattern("ABCDEFGHIJ".into()),
            Self::Zbc => GeneratorKind::ZbcPermutation,
        }
    }

    fn is_deterministic(&self) -> bool {
        matches!(self, Self::Pattern5 | Self::Pattern10)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GrowingConfig {
    pub kind: GrowingKind,
    pub max_length: usize,
    pub trials: u64,
    /// Trials actually run (1 for deterministic kinds).
    pub effective_trials: u64,
    pub seed: u64,
    pub entropy_window: usize,
    pub bdm_block: usize,
    pub bdm_estimator: String,
    pub ai_estimator: String,
    pub checkpoints: Vec<usize>,
}

impl GrowingConfig {
    pub fn new(kind: GrowingKind, max_length: usize, trials: u64, seed: u64) -> Self {
        let effective = if kind.is_deterministic() { 1 } else { trials };
        Self {
            kind,
            max_length,
            trials,
            effective_trials: effective,
            seed,
            entropy_window: ENTROPY_WINDOW,
            bdm_block: BDM_BLOCK,
            bdm_estimator: "lzw_bits".to_string(),
            ai_estimator: "lz_prefix_factors_minus_1".to_string(),
            checkpoints: CHECKPOINTS
                .iter()
                .copied()
                .filter(|&c| c <= max_length)
                .collect(),
        }
    }
}

/// Lengths at which trajectory measures are evaluated: every length up to
/// 250, then a graded grid that always contains the checkpoints.
pub fn sample_lengths(max_length: usize) -> Vec<usize> {
    let mut lengths: Vec<usize> = Vec::new();
    if max_length <= 250 {
        lengths.extend(2..=max_length);
    } else {
        lengths.extend(2..=20);
        lengths.extend((25..=100).step_by(5));
        lengths.extend((110..=200).step_by(10));
        lengths.extend((225..=500).step_by(25));
        lengths.extend((550..=1000).step_by(50));
        lengths.extend((1100..=max_length).step_by(100));
        lengths.extend(CHECKPOINTS.iter().copied().filter(|&c| c <= max_length));
        lengths.push(max_length);
        lengths.sort_unstable();
        lengths.dedup();
    }
    lengths
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckpointCorrelation {
    pub length: usize,
    /// Averaged growth-Spearman of each measure's trajectory against the
    /// assembly-index trajectory; `None` when every trial was degenerate.
    pub lzw: Option<f64>,
    pub entropy_rate: Option<f64>,
    pub bdm: Option<f64>,
    pub trials_used: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct LogRatioRow {
    pub length: usize,
    pub mean: f64,
    pub std: f64,
    pub trials_used: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PowerLawFit {
    pub exponent: f64,
    pub log_intercept: f64,
    pub r_squared: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GrowingReport {
    pub experiment: String,
    pub config: GrowingConfig,
    pub sample_lengths: Vec<usize>,
    pub correlations: Vec<CheckpointCorrelation>,
    pub log_ratio: Vec<LogRatioRow>,
    /// Power-law fit to the log-ratio std curve (log std ~ log length).
    pub std_power_law: Option<PowerLawFit>,
    /// Power-law fit to the log-ratio mean curve.
    pub mean_power_law: Option<PowerLawFit>,
    /// (ai, lzw, count) pooled over trials and lengths.
    pub density: Vec<(u32, u32, u64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime: Option<RuntimeMeta>,
}

struct Trajectory {
    samples: Vec<MeasureSample>,
}

/// Growing-sequence experiment: per-length measures along each trial's
/// growth, trajectory correlations at the checkpoints, and the log-ratio
/// asymptotics of lzw against the assembly index.
pub fn run_growing(cfg: &GrowingConfig, stable: bool) -> Result<GrowingReport> {
    if cfg.max_length < 8 {
        return Err(Error::InsufficientData {
            needed: 8,
            got: cfg.max_length,
        });
    }
    let started = Instant::now();
    let lengths = sample_lengths(cfg.max_length);
    let kind = cfg.kind.generator();

    let trajectories: Vec<Trajectory> = par::map_range(cfg.effective_trials as usize, |t| {
        let spec = GeneratorSpec::new(kind.clone(), cfg.max_length, cfg.seed, t as u64);
        let x = generate(&spec).expect("positive length");
        let lzw_counts = lz::lzw_counts_per_prefix(&x);
        let samples = lengths
            .iter()
            .map(|&len| {
                let prefix = x.prefix(len);
                // The growth tables use the assembly-scheme parse length
                // (factor count minus one). Unlike join counts, which dip
                // whenever a prefix lands on a doubling boundary, the
                // factor count is non-decreasing along the growth, which
                // is what a trajectory correlation needs.
                let ai = lz::lz_prefix_parse(&prefix).expect("non-empty").codeword_count - 1;
                let (rate, _) = entropy::entropy_rate(&prefix, ENTROPY_WINDOW).expect("non-empty");
                let block = BDM_BLOCK.min(len);
                let bdm_value =
                    bdm::bdm(&prefix, block, Estimator::LzwBits).expect("non-empty");
                MeasureSample {
                    lzw: lzw_counts[len - 1] as f64,
                    ai: ai as f64,
                    entropy_rate: rate,
                    bdm: bdm_value,
                }
            })
            .collect();
        Trajectory { samples }
    });

    // Trajectory correlations at each checkpoint.
    let mut correlations = Vec::new();
    for &cp in &cfg.checkpoints {
        let upto = lengths.iter().take_while(|&&l| l <= cp).count();
        if upto < 3 {
            continue;
        }
        let mut acc: BTreeMap<&str, (f64, u64)> = BTreeMap::new();
        for traj in &trajectories {
            let ai: Vec<f64> = traj.samples[..upto].iter().map(|s| s.ai).collect();
            for name in ["lzw", "entropy_rate", "bdm"] {
                let ys: Vec<f64> = traj.samples[..upto].iter().map(|s| s.get(name)).collect();
                if let Ok(rho) = stats::growth_spearman(&ai, &ys) {
                    let e = acc.entry(name).or_insert((0.0, 0));
                    e.0 += rho;
                    e.1 += 1;
                }
            }
        }
        let avg = |name: &str| -> Option<f64> {
            acc.get(name)
                .filter(|(_, n)| *n > 0)
                .map(|(sum, n)| sum / *n as f64)
        };
        correlations.push(CheckpointCorrelation {
            length: cp,
            lzw: avg("lzw"),
            entropy_rate: avg("entropy_rate"),
            bdm: avg("bdm"),
            trials_used: trajectories.len() as u64,
        });
    }

    // Log-ratio asymptotics per sample length.
    let mut log_ratio = Vec::new();
    for (i, &len) in lengths.iter().enumerate() {
        let ratios: Vec<f64> = trajectories
            .iter()
            .filter_map(|t| {
                let s = &t.samples[i];
                (s.ai >= 2.0 && s.lzw >= 2.0).then(|| s.lzw.ln() / s.ai.ln())
            })
            .collect();
        if ratios.len() < 2 {
            continue;
        }
        let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
        let var = ratios.iter().map(|r| (r - mean) * (r - mean)).sum::<f64>()
            / (ratios.len() - 1) as f64;
        log_ratio.push(LogRatioRow {
            length: len,
            mean,
            std: var.sqrt(),
            trials_used: ratios.len() as u64,
        });
    }

    let power_law = |rows: &[LogRatioRow], pick: fn(&LogRatioRow) -> f64| -> Option<PowerLawFit> {
        let points: Vec<(f64, f64)> = rows
            .iter()
            .filter(|r| pick(r) > 0.0)
            .map(|r| ((r.length as f64).ln(), pick(r).ln()))
            .collect();
        if points.len() < 3 {
            return None;
        }
        let paired = PairedSamples::new(
            points.iter().map(|p| p.0).collect(),
            points.iter().map(|p| p.1).collect(),
        )
        .ok()?;
        let (a, b, r2) = stats::ols(&paired).ok()?;
        Some(PowerLawFit {
            exponent: b,
            log_intercept: a,
            r_squared: r2,
        })
    };
    let std_power_law = power_law(&log_ratio, |r| r.std);
    let mean_power_law = power_law(&log_ratio, |r| r.mean);

    let mut density: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for traj in &trajectories {
        for s in &traj.samples {
            *density.entry((s.ai as u32, s.lzw as u32)).or_insert(0) += 1;
        }
    }
    let density = density.into_iter().map(|((a, l), c)| (a, l, c)).collect();

    Ok(GrowingReport {
        experiment: "growing".to_string(),
        config: cfg.clone(),
        sample_lengths: lengths,
        correlations,
        log_ratio,
        std_power_law,
        mean_power_law,
        density,
        runtime: (!stable).then(|| runtime_meta(started)),
    })
}

// ---------------------------------------------------------------------------
// Molecular pipeline
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct MolecularConfig {
    pub csv_path: String,
    pub columns: String,
    pub quantiles: Vec<f64>,
    pub ma_threshold: f64,
    pub threshold_tau: f64,
    pub knn_k: usize,
    pub seed: u64,
}

impl MolecularConfig {
    pub fn new(csv_path: String, columns: String, quantiles: Vec<f64>, ma_threshold: f64) -> Self {
        Self {
            csv_path,
            columns,
            quantiles,
            ma_threshold,
            threshold_tau: 0.14,
            knn_k: 3,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OlsSection {
    pub n: usize,
    pub pearson_r: f64,
    pub intercept: f64,
    pub slope: f64,
    pub r_squared: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct KnnSection {
    pub target: String,
    pub features: Vec<String>,
    pub k: usize,
    pub n: usize,
    pub accuracy: f64,
    pub auc: f64,
    pub roc_points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MolecularReport {
    pub experiment: String,
    pub config: MolecularConfig,
    pub record_count: usize,
    pub skipped_rows: Vec<molecular::SkipNote>,
    /// Per-record complexity profiles (id -> measure -> value).
    pub profiles: Vec<(String, BTreeMap<String, f64>)>,
    pub relations: Vec<molecular::Ms2Relation>,
    pub ma_vs_length: Option<OlsSection>,
    pub threshold: Option<molecular::ThresholdReport>,
    pub separation: Vec<molecular::GroupSeparation>,
    pub knn: Option<KnnSection>,
    /// Sections that could not run, with reasons.
    pub skipped_sections: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime: Option<RuntimeMeta>,
}

fn measure_values(
    records: &[MoleculeRecord],
    profiles: &[Option<BTreeMap<String, f64>>],
    measure: &str,
) -> Vec<Option<f64>> {
    records
        .iter()
        .zip(profiles)
        .map(|(rec, profile)| match measure {
            "ma" => rec.ma,
            "length" => rec.inchi_payload_length.map(|l| l as f64),
            m => profile.as_ref().and_then(|p| p.get(m).copied()),
        })
        .collect()
}

/// Full molecular analysis: quantile relations to MS2 peaks, the
/// MA-versus-length regression, threshold analysis, group separation and
/// a KNN classification baseline.
pub fn run_molecular(cfg: &MolecularConfig, stable: bool) -> Result<MolecularReport> {
    let started = Instant::now();
    let columns = ColumnMap::parse(&cfg.columns)?;
    let ingest = molecular::ingest_csv(Path::new(&cfg.csv_path), &columns)?;
    let records = ingest.records;
    let profiles = molecular::profile_all(&records);
    let mut skipped_sections: Vec<(String, String)> = Vec::new();

    let profile_rows: Vec<(String, BTreeMap<String, f64>)> = records
        .iter()
        .zip(&profiles)
        .filter_map(|(r, p)| p.as_ref().map(|p| (r.id.clone(), p.clone())))
        .collect();

    let mut relations = Vec::new();
    for measure in ["ma", "length", "lzw"] {
        let values = measure_values(&records, &profiles, measure);
        match molecular::ms2_relation(&records, measure, &values, &cfg.quantiles) {
            Ok(rel) => relations.push(rel),
            Err(e) => skipped_sections.push((format!("ms2_relation:{measure}"), e.to_string())),
        }
    }

    let ma_vs_length = {
        let pairs: Vec<(f64, f64)> = records
            .iter()
            .filter_map(|r| Some((r.inchi_payload_length? as f64, r.ma?)))
            .collect();
        if pairs.len() >= 3 {
            let paired = PairedSamples::new(
                pairs.iter().map(|p| p.0).collect(),
                pairs.iter().map(|p| p.1).collect(),
            )?;
            match (stats::pearson(&paired), stats::ols(&paired)) {
                (Ok(r), Ok((a, b, r2))) => Some(OlsSection {
                    n: paired.len(),
                    pearson_r: r,
                    intercept: a,
                    slope: b,
                    r_squared: r2,
                }),
                _ => {
                    skipped_sections
                        .push(("ma_vs_length".into(), "degenerate regression".into()));
                    None
                }
            }
        } else {
            skipped_sections.push((
                "ma_vs_length".into(),
                format!("only {} records carry both ma and length", pairs.len()),
            ));
            None
        }
    };

    let threshold = {
        let values = measure_values(&records, &profiles, "ma");
        match molecular::threshold_analysis(
            &records,
            "ma",
            &values,
            cfg.ma_threshold,
            cfg.threshold_tau,
        ) {
            Ok(t) => Some(t),
            Err(e) => {
                skipped_sections.push(("threshold".into(), e.to_string()));
                None
            }
        }
    };

    let mut separation = Vec::new();
    for measure in ["ma", "length", "lzw", "ai", "entropy", "bdm"] {
        let values = measure_values(&records, &profiles, measure);
        match molecular::group_separation(&records, measure, &values, cfg.seed) {
            Ok(s) => separation.push(s),
            Err(e) => {
                skipped_sections.push((format!("separation:{measure}"), e.to_string()))
            }
        }
    }

    let knn = {
        let features_of: Vec<(usize, Vec<f64>)> = records
            .iter()
            .enumerate()
            .filter_map(|(i, _)| {
                let p = profiles[i].as_ref()?;
                Some((
                    i,
                    molecular::PROFILE_MEASURES
                        .iter()
                        .map(|m| p[*m])
                        .collect::<Vec<f64>>(),
                ))
            })
            .collect();
        let living: Vec<Option<bool>> = features_of
            .iter()
            .map(|(i, _)| records[*i].group.is_living())
            .collect();
        let binary: Vec<(Vec<f64>, bool)> = if living.iter().filter(|l| l.is_some()).count() >= 4 {
            features_of
                .iter()
                .zip(&living)
                .filter_map(|((_, f), l)| l.map(|l| (f.clone(), l)))
                .collect()
        } else {
            // Fall back to the peptide / small-molecule calibration split.
            features_of
                .iter()
                .filter_map(|(i, f)| match records[*i].group {
                    molecular::Group::Peptide => Some((f.clone(), true)),
                    molecular::Group::SmallMolecule => Some((f.clone(), false)),
                    _ => None,
                })
                .collect()
        };
        let target = if living.iter().filter(|l| l.is_some()).count() >= 4 {
            "living"
        } else {
            "peptide_vs_small_molecule"
        };
        let features: Vec<Vec<f64>> = binary.iter().map(|(f, _)| f.clone()).collect();
        let labels: Vec<bool> = binary.iter().map(|(_, l)| *l).collect();
        match stats::knn_classify(&features, &labels, cfg.knn_k) {
            Ok(r) => {
                let scored: Vec<(f64, bool)> =
                    r.scores.iter().zip(&labels).map(|(&s, &l)| (s, l)).collect();
                Some(KnnSection {
                    target: target.to_string(),
                    features: molecular::PROFILE_MEASURES
                        .iter()
                        .map(|s| s.to_string())
                        .collect(),
                    k: cfg.knn_k,
                    n: labels.len(),
                    accuracy: r.accuracy,
                    auc: r.auc,
                    roc_points: stats::roc_points(&scored),
                })
            }
            Err(e) => {
                skipped_sections.push(("knn".into(), e.to_string()));
                None
            }
        }
    };

    Ok(MolecularReport {
        experiment: "molecular".to_string(),
        config: cfg.clone(),
        record_count: records.len(),
        skipped_rows: ingest.skipped,
        profiles: profile_rows,
        relations,
        ma_vs_length,
        threshold,
        separation,
        knn,
        skipped_sections,
        runtime: (!stable).then(|| runtime_meta(started)),
    })
}

// ---------------------------------------------------------------------------
// Output writing
// ---------------------------------------------------------------------------

fn write_file(dir: &Path, name: &str, contents: &str, written: &mut Vec<PathBuf>) -> Result<()> {
    let path = dir.join(name);
    std::fs::write(&path, contents)?;
    written.push(path);
    Ok(())
}

fn csv_f64(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v}")
    }
}

impl ZbcReport {
    pub fn write_outputs(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        write_file(dir, "report.json", &to_json(self)?, &mut written)?;
        let mut boxplot = String::from("measure,min,q1,median,q3,max,mean,std\n");
        for b in &self.box_plot {
            let _ = writeln!(
                boxplot,
                "{},{},{},{},{},{},{},{}",
                b.measure,
                csv_f64(b.min),
                csv_f64(b.q1),
                csv_f64(b.median),
                csv_f64(b.q3),
                csv_f64(b.max),
                csv_f64(b.mean),
                csv_f64(b.std)
            );
        }
        write_file(dir, "boxplot.csv", &boxplot, &mut written)?;
        let mut welch = String::from("kind,a,b,t,p\n");
        for (kind, entries) in [("summary", &self.welch), ("raw", &self.welch_raw)] {
            for w in entries {
                let _ = writeln!(
                    welch,
                    "{kind},{},{},{},{}",
                    w.a,
                    w.b,
                    csv_f64(w.t),
                    csv_f64(w.p)
                );
            }
        }
        write_file(dir, "welch.csv", &welch, &mut written)?;
        let mut density = String::from("ai,lzw,count\n");
        for (a, l, c) in &self.density {
            let _ = writeln!(density, "{a},{l},{c}");
        }
        write_file(dir, "density.csv", &density, &mut written)?;
        Ok(written)
    }
}

impl GrowingReport {
    pub fn write_outputs(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        write_file(dir, "report.json", &to_json(self)?, &mut written)?;
        let mut corr = String::from("length,lzw,entropy_rate,bdm\n");
        let fmt = |v: Option<f64>| v.map(csv_f64).unwrap_or_else(|| "".to_string());
        for c in &self.correlations {
            let _ = writeln!(
                corr,
                "{},{},{},{}",
                c.length,
                fmt(c.lzw),
                fmt(c.entropy_rate),
                fmt(c.bdm)
            );
        }
        write_file(dir, "correlations.csv", &corr, &mut written)?;
        let mut ratio = String::from("length,mean,std,trials\n");
        for r in &self.log_ratio {
            let _ = writeln!(
                ratio,
                "{},{},{},{}",
                r.length,
                csv_f64(r.mean),
                csv_f64(r.std),
                r.trials_used
            );
        }
        write_file(dir, "log_ratio.csv", &ratio, &mut written)?;
        let mut density = String::from("ai,lzw,count\n");
        for (a, l, c) in &self.density {
            let _ = writeln!(density, "{a},{l},{c}");
        }
        write_file(dir, "density.csv", &density, &mut written)?;
        Ok(written)
    }
}

impl MolecularReport {
    pub fn write_outputs(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        write_file(dir, "report.json", &to_json(self)?, &mut written)?;
        let mut profiles = String::from("id,lzw,ai,entropy,bdm,length\n");
        for (id, p) in &self.profiles {
            let _ = writeln!(
                profiles,
                "{},{},{},{},{},{}",
                id,
                csv_f64(p["lzw"]),
                csv_f64(p["ai"]),
                csv_f64(p["entropy"]),
                csv_f64(p["bdm"]),
                csv_f64(p["length"])
            );
        }
        write_file(dir, "profiles.csv", &profiles, &mut written)?;
        let mut rel = String::from("measure,tau,intercept,slope,pearson_r\n");
        for r in &self.relations {
            for line in &r.lines {
                let _ = writeln!(
                    rel,
                    "{},{},{},{},{}",
                    r.measure,
                    line.tau,
                    csv_f64(line.intercept),
                    csv_f64(line.slope),
                    csv_f64(r.pearson_r)
                );
            }
        }
        write_file(dir, "relations.csv", &rel, &mut written)?;
        let mut heat = String::from("measure,group_a,group_b,cucconi,p\n");
        for s in &self.separation {
            for (a, b, c, p) in &s.pairwise {
                let _ = writeln!(heat, "{},{},{},{},{}", s.measure, a, b, csv_f64(*c), csv_f64(*p));
            }
        }
        write_file(dir, "heatmap.csv", &heat, &mut written)?;
        if let Some(knn) = &self.knn {
            let mut roc = String::from("fpr,tpr\n");
            for (f, t) in &knn.roc_points {
                let _ = writeln!(roc, "{},{}", csv_f64(*f), csv_f64(*t));
            }
            write_file(dir, "roc.csv", &roc, &mut written)?;
        }
        Ok(written)
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::Degenerate(format!("serialization failed: {e}")))
}
