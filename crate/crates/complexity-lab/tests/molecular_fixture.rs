//! Behaviour of the molecular pipeline on the shipped synthetic fixture.

use std::path::Path;

use complexity_lab::molecular::{
    group_separation, ingest_csv, profile_all, threshold_analysis, ColumnMap, Group,
};
use complexity_lab::stats::{self, PairedSamples};

fn fixture() -> (Vec<complexity_lab::molecular::MoleculeRecord>, Vec<Option<std::collections::BTreeMap<String, f64>>>) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/molecules.csv");
    let columns = ColumnMap::parse("id=id,inchi=inchi,ma=ma,ms2=ms2_peaks,group=group").unwrap();
    let ingest = ingest_csv(&path, &columns).unwrap();
    assert!(ingest.skipped.is_empty(), "fixture should ingest cleanly");
    let profiles = profile_all(&ingest.records);
    (ingest.records, profiles)
}

/// The LZW column of the profiles is driven by payload length: strong
/// rank correlation on any ingested corpus.
#[test]
fn lzw_profile_tracks_payload_length() {
    let (records, profiles) = fixture();
    let pairs: Vec<(f64, f64)> = records
        .iter()
        .zip(&profiles)
        .filter_map(|(r, p)| {
            Some((
                p.as_ref()?.get("lzw").copied()?,
                r.inchi_payload_length? as f64,
            ))
        })
        .collect();
    assert!(pairs.len() >= 50);
    let p = PairedSamples::new(
        pairs.iter().map(|x| x.0).collect(),
        pairs.iter().map(|x| x.1).collect(),
    )
    .unwrap();
    let rho = stats::spearman(&p).unwrap();
    assert!(rho >= 0.8, "spearman(lzw, length) = {rho}");
}

/// Within one group, the lzw and assembly profiles are statistically
/// similar (location-scale): the Cucconi null is not rejected.
#[test]
fn same_group_lzw_and_ai_profiles_are_similar() {
    let (records, profiles) = fixture();
    for group in [Group::Peptide, Group::SmallMolecule] {
        let collect = |measure: &str| -> Vec<f64> {
            records
                .iter()
                .zip(&profiles)
                .filter(|(r, _)| r.group == group)
                .filter_map(|(_, p)| p.as_ref()?.get(measure).copied())
                .collect()
        };
        let lzw = collect("lzw");
        let ai = collect("ai");
        let (_, p) = stats::cucconi(&lzw, &ai, 10_000, 1).unwrap();
        assert!(p > 0.05, "{group:?}: lzw vs ai profiles rejected with p = {p}");
    }
}

/// Peptides and small molecules separate on every profile measure.
#[test]
fn peptides_separate_from_small_molecules() {
    let (records, profiles) = fixture();
    for measure in ["length", "lzw", "ai"] {
        let values: Vec<Option<f64>> = records
            .iter()
            .zip(&profiles)
            .map(|(r, p)| match measure {
                "length" => r.inchi_payload_length.map(|l| l as f64),
                m => p.as_ref().and_then(|p| p.get(m).copied()),
            })
            .collect();
        let sep = group_separation(&records, measure, &values, 5).unwrap();
        let pair = sep
            .pairwise
            .iter()
            .find(|(a, b, _, _)| {
                (a == "peptide" && b == "small_molecule")
                    || (a == "small_molecule" && b == "peptide")
            })
            .expect("peptide/small-molecule pair present");
        assert!(pair.3 < 0.05, "{measure}: p = {}", pair.3);
    }
}

/// The threshold maps into MS2 space through the 14% quantile line.
#[test]
fn threshold_maps_into_ms2_space() {
    let (records, _) = fixture();
    let values: Vec<Option<f64>> = records.iter().map(|r| r.ma).collect();
    let rep = threshold_analysis(&records, "ma", &values, 15.0, 0.14).unwrap();
    let ms2 = rep.ms2_equivalent_threshold.expect("quantile line fitted");
    assert!(ms2 > 0.0, "mapped threshold {ms2}");
    let labelled =
        rep.true_positive + rep.false_positive + rep.true_negative + rep.false_negative;
    let expected = records
        .iter()
        .filter(|r| r.group.is_living().is_some() && r.ma.is_some())
        .count();
    assert_eq!(labelled, expected);
}
