//! Correlations, regressions, distribution fits, rank tests and
//! classifier metrics used by the experiment harness.
//!
//! Everything here is deterministic; the only randomness is the seeded
//! permutation resampling inside [`cucconi`], whose per-permutation RNG
//! streams are derived from the permutation index so the p-value does not
//! depend on worker count.

use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF, Normal, StudentsT};

use crate::error::{Error, Result};
use crate::par;
use crate::rng::SplitMix64;

#[derive(Debug, Clone)]
pub struct PairedSamples {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub labels: Option<Vec<String>>,
}

impl PairedSamples {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::Degenerate(format!(
                "paired samples of different lengths: {} vs {}",
                xs.len(),
                ys.len()
            )));
        }
        if xs.iter().chain(ys.iter()).any(|v| v.is_nan()) {
            return Err(Error::Degenerate("NaN values are not admitted".into()));
        }
        Ok(Self {
            xs,
            ys,
            labels: None,
        })
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

fn variance(v: &[f64]) -> f64 {
    let m = mean(v);
    v.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (v.len() - 1) as f64
}

/// Product-moment correlation.
pub fn pearson(p: &PairedSamples) -> Result<f64> {
    if p.len() < 3 {
        return Err(Error::InsufficientData {
            needed: 3,
            got: p.len(),
        });
    }
    let (mx, my) = (mean(&p.xs), mean(&p.ys));
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (x, y) in p.xs.iter().zip(&p.ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::Degenerate("zero variance coordinate".into()));
    }
    Ok(sxy / (sxx.sqrt() * syy.sqrt()))
}

/// Mid-ranks (average rank for ties), 1-based.
pub fn midranks(values: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && values[idx[j + 1]] == values[idx[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            ranks[k] = avg;
        }
        i = j + 1;
    }
    ranks
}

/// Ranks with ties broken by position, 1-based. Two series that grow
/// together (both non-decreasing) get identical rank vectors, which makes
/// this the ranking used for growth-trajectory correlations.
pub fn ordinal_ranks(values: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| {
        values[a]
            .partial_cmp(&values[b])
            .unwrap()
            .then(a.cmp(&b))
    });
    let mut ranks = vec![0.0; values.len()];
    for (pos, &i) in idx.iter().enumerate() {
        ranks[i] = pos as f64 + 1.0;
    }
    ranks
}

/// Pearson on mid-ranks.
pub fn spearman(p: &PairedSamples) -> Result<f64> {
    if p.len() < 3 {
        return Err(Error::InsufficientData {
            needed: 3,
            got: p.len(),
        });
    }
    pearson(&PairedSamples::new(midranks(&p.xs), midranks(&p.ys))?)
}

/// Spearman with ties broken by sequence position; the correlation used
/// for measure trajectories along a growing sequence.
pub fn growth_spearman(xs: &[f64], ys: &[f64]) -> Result<f64> {
    pearson(&PairedSamples::new(ordinal_ranks(xs), ordinal_ranks(ys))?)
}

/// Least squares: (intercept, slope, r_squared).
pub fn ols(p: &PairedSamples) -> Result<(f64, f64, f64)> {
    if p.len() < 3 {
        return Err(Error::InsufficientData {
            needed: 3,
            got: p.len(),
        });
    }
    let (mx, my) = (mean(&p.xs), mean(&p.ys));
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (x, y) in p.xs.iter().zip(&p.ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 {
        return Err(Error::Degenerate("zero x variance".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r_squared = if syy == 0.0 {
        0.0
    } else {
        let ss_res: f64 = p
            .xs
            .iter()
            .zip(&p.ys)
            .map(|(x, y)| {
                let e = y - intercept - slope * x;
                e * e
            })
            .sum();
        1.0 - ss_res / syy
    };
    Ok((intercept, slope, r_squared))
}

/// Asymmetric absolute loss whose minimizer is the tau-quantile line.
pub fn pinball_loss(p: &PairedSamples, tau: f64, intercept: f64, slope: f64) -> f64 {
    p.xs.iter()
        .zip(&p.ys)
        .map(|(x, y)| {
            let r = y - intercept - slope * x;
            if r >= 0.0 {
                tau * r
            } else {
                (tau - 1.0) * r
            }
        })
        .sum()
}

/// Exact single-feature quantile regression: the optimum passes through
/// two data points with distinct x, so enumerating those lines and taking
/// the minimal pinball loss is exact. Ties go to the smaller |slope|,
/// then the smaller |intercept|.
pub fn quantile_regression(p: &PairedSamples, tau: f64) -> Result<(f64, f64)> {
    if !(0.0..1.0).contains(&tau) || tau == 0.0 {
        return Err(Error::Degenerate(format!("tau {tau} outside (0,1)")));
    }
    if p.len() < 2 {
        return Err(Error::InsufficientData {
            needed: 2,
            got: p.len(),
        });
    }
    let mut best: Option<(f64, f64, f64)> = None; // (loss, intercept, slope)
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p.xs[i] == p.xs[j] {
                continue;
            }
            let slope = (p.ys[j] - p.ys[i]) / (p.xs[j] - p.xs[i]);
            let intercept = p.ys[i] - slope * p.xs[i];
            let loss = pinball_loss(p, tau, intercept, slope);
            let better = match best {
                None => true,
                Some((bl, ba, bs)) => {
                    let eps = 1e-12 * bl.abs().max(1.0);
                    loss < bl - eps
                        || (loss <= bl + eps
                            && (slope.abs() < bs.abs()
                                || (slope.abs() == bs.abs() && intercept.abs() < ba.abs())))
                }
            };
            if better {
                best = Some((loss, intercept, slope));
            }
        }
    }
    match best {
        Some((_, a, b)) => Ok((a, b)),
        None => Err(Error::Degenerate("all x values identical".into())),
    }
}

/// Welch's t with Satterthwaite degrees of freedom; two-sided p.
pub fn welch_t(a: &[f64], b: &[f64]) -> Result<(f64, f64)> {
    if a.len() < 2 || b.len() < 2 {
        return Err(Error::InsufficientData {
            needed: 2,
            got: a.len().min(b.len()),
        });
    }
    let (va, vb) = (variance(a), variance(b));
    if va == 0.0 && vb == 0.0 {
        return Err(Error::Degenerate("zero variance in both samples".into()));
    }
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let se2 = va / na + vb / nb;
    let t = (mean(a) - mean(b)) / se2.sqrt();
    let df = se2 * se2 / (va * va / (na * na * (na - 1.0)) + vb * vb / (nb * nb * (nb - 1.0)));
    let dist = StudentsT::new(0.0, 1.0, df).map_err(|e| Error::Degenerate(e.to_string()))?;
    let p = 2.0 * (1.0 - dist.cdf(t.abs()));
    Ok((t, p))
}

/// Rank-based H statistic with tie correction; p by chi-square.
pub fn kruskal_wallis(groups: &[Vec<f64>]) -> Result<(f64, f64)> {
    if groups.len() < 2 || groups.iter().any(|g| g.is_empty()) {
        return Err(Error::InsufficientData {
            needed: 2,
            got: groups.len(),
        });
    }
    let combined: Vec<f64> = groups.iter().flatten().copied().collect();
    let n = combined.len() as f64;
    let first = combined[0];
    if combined.iter().all(|&v| v == first) {
        return Err(Error::Degenerate("all values identical".into()));
    }
    let ranks = midranks(&combined);
    let mut h = 0.0;
    let mut offset = 0usize;
    for g in groups {
        let r: f64 = ranks[offset..offset + g.len()].iter().sum();
        h += r * r / g.len() as f64;
        offset += g.len();
    }
    h = 12.0 / (n * (n + 1.0)) * h - 3.0 * (n + 1.0);
    // Tie correction.
    let mut sorted = combined.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut tie_sum = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        tie_sum += t * t * t - t;
        i = j + 1;
    }
    let correction = 1.0 - tie_sum / (n * n * n - n);
    let h = h / correction;
    let df = groups.len() as f64 - 1.0;
    let dist = ChiSquared::new(df).map_err(|e| Error::Degenerate(e.to_string()))?;
    let p = 1.0 - dist.cdf(h.max(0.0));
    Ok((h, p))
}

fn cucconi_statistic(ranks_b: &[f64], n1: usize, n2: usize) -> f64 {
    let n = (n1 + n2) as f64;
    let n2f = n2 as f64;
    let num_mean = n2f * (n + 1.0) * (2.0 * n + 1.0);
    let denom = (n1 as f64 * n2f * (n + 1.0) * (2.0 * n + 1.0) * (8.0 * n + 11.0) / 5.0).sqrt();
    let s_sq: f64 = ranks_b.iter().map(|&r| r * r).sum();
    let s_contrary: f64 = ranks_b.iter().map(|&r| (n + 1.0 - r) * (n + 1.0 - r)).sum();
    let u = (6.0 * s_sq - num_mean) / denom;
    let v = (6.0 * s_contrary - num_mean) / denom;
    let rho = 2.0 * (n * n - 4.0) / ((2.0 * n + 1.0) * (8.0 * n + 11.0)) - 1.0;
    (u * u + v * v - 2.0 * rho * u * v) / (2.0 * (1.0 - rho * rho))
}

/// Cucconi location-scale test. The p-value comes from seeded permutation
/// resampling (deterministic given the seed).
pub fn cucconi(a: &[f64], b: &[f64], permutations: usize, seed: u64) -> Result<(f64, f64)> {
    if a.len() < 5 || b.len() < 5 {
        return Err(Error::InsufficientData {
            needed: 5,
            got: a.len().min(b.len()),
        });
    }
    let combined: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
    let ranks = midranks(&combined);
    let observed = cucconi_statistic(&ranks[a.len()..], a.len(), b.len());

    let exceed: u64 = par::map_range(permutations, |i| {
        let mut rng = SplitMix64::for_trial(seed, i as u64);
        let mut idx: Vec<usize> = (0..combined.len()).collect();
        rng.shuffle(&mut idx);
        let perm_ranks: Vec<f64> = idx[a.len()..].iter().map(|&j| ranks[j]).collect();
        u64::from(cucconi_statistic(&perm_ranks, a.len(), b.len()) >= observed)
    })
    .into_iter()
    .sum();
    let p = (exceed + 1) as f64 / (permutations + 1) as f64;
    Ok((observed, p))
}

/// Rank-based (Mann-Whitney) AUC with mid-rank tie handling.
pub fn roc_auc(scores: &[(f64, bool)]) -> Result<f64> {
    let n_pos = scores.iter().filter(|(_, l)| *l).count();
    let n_neg = scores.len() - n_pos;
    if n_pos == 0 || n_neg == 0 {
        return Err(Error::SingleClass);
    }
    let values: Vec<f64> = scores.iter().map(|(s, _)| *s).collect();
    let ranks = midranks(&values);
    let rank_sum: f64 = scores
        .iter()
        .zip(&ranks)
        .filter(|((_, l), _)| *l)
        .map(|(_, r)| r)
        .sum();
    let auc = (rank_sum - (n_pos * (n_pos + 1)) as f64 / 2.0) / (n_pos * n_neg) as f64;
    Ok(auc)
}

/// ROC points (fpr, tpr) for plotting, sweeping the score threshold.
pub fn roc_points(scores: &[(f64, bool)]) -> Vec<(f64, f64)> {
    let n_pos = scores.iter().filter(|(_, l)| *l).count().max(1) as f64;
    let n_neg = (scores.len() - n_pos as usize).max(1) as f64;
    let mut sorted: Vec<(f64, bool)> = scores.to_vec();
    sorted.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    let mut points = vec![(0.0, 0.0)];
    let (mut tp, mut fp) = (0usize, 0usize);
    let mut i = 0;
    while i < sorted.len() {
        let threshold = sorted[i].0;
        while i < sorted.len() && sorted[i].0 == threshold {
            if sorted[i].1 {
                tp += 1;
            } else {
                fp += 1;
            }
            i += 1;
        }
        points.push((fp as f64 / n_neg, tp as f64 / n_pos));
    }
    points
}

#[derive(Debug, Clone, Serialize)]
pub struct KnnReport {
    pub predictions: Vec<bool>,
    pub scores: Vec<f64>,
    pub accuracy: f64,
    pub auc: f64,
}

/// Leave-one-out k-nearest-neighbour classification on standardized
/// features (Euclidean metric). The class score is the neighbour vote
/// fraction; vote ties predict the negative class.
pub fn knn_classify(features: &[Vec<f64>], labels: &[bool], k: usize) -> Result<KnnReport> {
    let n = features.len();
    if n != labels.len() {
        return Err(Error::Degenerate("features/labels length mismatch".into()));
    }
    if k == 0 || k >= n {
        return Err(Error::Degenerate(format!("k {k} incompatible with {n} points")));
    }
    if !labels.iter().any(|&l| l) || labels.iter().all(|&l| l) {
        return Err(Error::SingleClass);
    }
    let dims = features[0].len();
    if features.iter().any(|f| f.len() != dims) {
        return Err(Error::Degenerate("ragged feature rows".into()));
    }
    // z-score per feature; constant features stay zero.
    let mut standardized = vec![vec![0.0; dims]; n];
    for d in 0..dims {
        let column: Vec<f64> = features.iter().map(|f| f[d]).collect();
        let m = mean(&column);
        let sd = variance(&column).sqrt();
        for (row, f) in standardized.iter_mut().zip(&column) {
            row[d] = if sd > 0.0 { (f - m) / sd } else { 0.0 };
        }
    }
    let mut scores = Vec::with_capacity(n);
    let mut predictions = Vec::with_capacity(n);
    let mut correct = 0usize;
    for i in 0..n {
        let mut dist: Vec<(f64, usize)> = (0..n)
            .filter(|&j| j != i)
            .map(|j| {
                let d2: f64 = standardized[i]
                    .iter()
                    .zip(&standardized[j])
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum();
                (d2, j)
            })
            .collect();
        dist.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)));
        let votes = dist[..k].iter().filter(|&&(_, j)| labels[j]).count();
        let score = votes as f64 / k as f64;
        let prediction = score > 0.5;
        if prediction == labels[i] {
            correct += 1;
        }
        scores.push(score);
        predictions.push(prediction);
    }
    let auc = roc_auc(
        &scores
            .iter()
            .zip(labels)
            .map(|(&s, &l)| (s, l))
            .collect::<Vec<_>>(),
    )?;
    Ok(KnnReport {
        predictions,
        scores,
        accuracy: correct as f64 / n as f64,
        auc,
    })
}

// ---------------------------------------------------------------------------
// Distribution fits
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Pareto,
    Geometric,
    Gaussian,
}

impl Family {
    pub fn is_long_tail(&self) -> bool {
        matches!(self, Family::Pareto)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FitReport {
    pub family: Family,
    pub params: Vec<(String, f64)>,
    pub mae: f64,
    pub rmse: f64,
    pub ks_stat: f64,
}

enum Fitted {
    Pareto { xm: f64, alpha: f64 },
    Geometric { p: f64 },
    Gaussian { mu: f64, sigma: f64 },
}

impl Fitted {
    fn cdf(&self, x: f64) -> f64 {
        match *self {
            Fitted::Pareto { xm, alpha } => {
                if x < xm {
                    0.0
                } else {
                    1.0 - (xm / x).powf(alpha)
                }
            }
            Fitted::Geometric { p } => {
                if x < 1.0 {
                    0.0
                } else {
                    1.0 - (1.0 - p).powf(x.floor())
                }
            }
            Fitted::Gaussian { mu, sigma } => Normal::new(mu, sigma)
                .map(|d| d.cdf(x))
                .unwrap_or(f64::NAN),
        }
    }

    /// Left limit of the CDF; differs from `cdf` only at the atoms of the
    /// geometric family.
    fn cdf_left(&self, x: f64) -> f64 {
        match *self {
            Fitted::Geometric { .. } => {
                let at_atom = (x - x.round()).abs() < 1e-9 && x.round() >= 1.0;
                if at_atom {
                    self.cdf(x - 1.0)
                } else {
                    self.cdf(x)
                }
            }
            _ => self.cdf(x),
        }
    }
}

/// Maximum-likelihood fit of one family, with histogram errors over a
/// fixed binning and the KS distance between empirical and fitted CDFs.
pub fn fit_distribution(values: &[f64], family: Family) -> Result<FitReport> {
    if values.len() < 20 {
        return Err(Error::InsufficientData {
            needed: 20,
            got: values.len(),
        });
    }
    let first = values[0];
    if values.iter().all(|&v| v == first) {
        return Err(Error::Degenerate("constant values".into()));
    }
    let n = values.len() as f64;
    let fitted = match family {
        Family::Pareto => {
            if values.iter().any(|&v| v <= 0.0) {
                return Err(Error::DomainMismatch(
                    "pareto requires positive values".into(),
                ));
            }
            let xm = values.iter().cloned().fold(f64::INFINITY, f64::min);
            let log_sum: f64 = values.iter().map(|&v| (v / xm).ln()).sum();
            if log_sum == 0.0 {
                return Err(Error::Degenerate("no spread above the minimum".into()));
            }
            Fitted::Pareto {
                xm,
                alpha: n / log_sum,
            }
        }
        Family::Geometric => {
            if values
                .iter()
                .any(|&v| v < 1.0 || (v - v.round()).abs() > 1e-9)
            {
                return Err(Error::DomainMismatch(
                    "geometric requires integer counts >= 1".into(),
                ));
            }
            Fitted::Geometric {
                p: 1.0 / mean(values),
            }
        }
        Family::Gaussian => {
            let mu = mean(values);
            let sigma = (values.iter().map(|&v| (v - mu) * (v - mu)).sum::<f64>() / n).sqrt();
            Fitted::Gaussian { mu, sigma }
        }
    };

    // KS distance over distinct values, comparing right limits with right
    // limits and left limits with left limits so atoms on both sides
    // (tied data against a discrete family) are not spuriously penalized.
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut ks: f64 = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let v = sorted[i];
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == v {
            j += 1;
        }
        let emp_before = i as f64 / n;
        let emp_at = (j + 1) as f64 / n;
        ks = ks.max((fitted.cdf(v) - emp_at).abs());
        ks = ks.max((fitted.cdf_left(v) - emp_before).abs());
        i = j + 1;
    }

    // Histogram errors over a fixed binning: unit bins for integer-valued
    // data (capped at 200), else 30 equal-width bins.
    let lo = sorted[0];
    let hi = sorted[sorted.len() - 1];
    let integral = values.iter().all(|&v| (v - v.round()).abs() < 1e-9);
    let span = (hi - lo).round() as usize + 1;
    let unit_bins = integral && span <= 200;
    let bins = if unit_bins { span } else { 30 };
    let width = (hi - lo) / bins as f64;
    let mut mae = 0.0;
    let mut mse = 0.0;
    for bin in 0..bins {
        let (a, b) = if unit_bins {
            (lo + bin as f64 - 0.5, lo + bin as f64 + 0.5)
        } else {
            (lo + bin as f64 * width, lo + (bin + 1) as f64 * width)
        };
        let emp = values
            .iter()
            .filter(|&&v| v > a && v <= b || (bin == 0 && v == a))
            .count() as f64
            / n;
        let fit = (fitted.cdf(b) - fitted.cdf(a)).max(0.0);
        let diff = (emp - fit).abs();
        mae += diff;
        mse += diff * diff;
    }
    mae /= bins as f64;
    let rmse = (mse / bins as f64).sqrt();

    let params = match fitted {
        Fitted::Pareto { xm, alpha } => vec![("xm".to_string(), xm), ("alpha".to_string(), alpha)],
        Fitted::Geometric { p } => vec![("p".to_string(), p)],
        Fitted::Gaussian { mu, sigma } => {
            vec![("mu".to_string(), mu), ("sigma".to_string(), sigma)]
        }
    };
    Ok(FitReport {
        family,
        params,
        mae,
        rmse,
        ks_stat: ks,
    })
}

/// Fit every applicable family and pick the one with the smallest KS
/// distance.
pub fn best_fit(values: &[f64]) -> Result<(Family, Vec<FitReport>)> {
    let mut reports = Vec::new();
    for family in [Family::Pareto, Family::Geometric, Family::Gaussian] {
        if let Ok(r) = fit_distribution(values, family) {
            reports.push(r);
        }
    }
    if reports.is_empty() {
        return Err(Error::Degenerate("no family fits the data".into()));
    }
    let best = reports
        .iter()
        .min_by(|a, b| a.ks_stat.partial_cmp(&b.ks_stat).unwrap())
        .unwrap()
        .family;
    Ok((best, reports))
}

/// Interpolated quantile (the "type 7" rule) of a sorted slice.
pub fn quantile_sorted(sorted: &[f64], q: f64) -> f64 {
    if sorted.is_empty() {
        return f64::NAN;
    }
    let h = (sorted.len() - 1) as f64 * q;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}
