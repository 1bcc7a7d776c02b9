//! Frozen values produced by an independent symbolic computation (power-series expansion of
//! the closed-form rational functions and a separate rank computation for the quotient rings).

use std::collections::BTreeMap;

use higgs_core::morse::{
    classifying_space_poincare, gauge_group_poincare, higgs_poincare_morse, stable_bundles_poincare,
};
use higgs_core::relation_ideal::{full_h_series, quotient_hilbert, IdealSpec};
use higgs_core::{ModuliParams, PoincareSeries, ENGINE_VERSION};
use serde::Deserialize;

#[derive(Deserialize)]
struct QuotientEntry {
    g_prime: u32,
    k_prime: u32,
    maxdeg: u32,
    series: PoincareSeries,
}

#[derive(Deserialize)]
struct QuotientGolden {
    code_version: String,
    entries: Vec<QuotientEntry>,
}

#[derive(Deserialize)]
struct SeriesGolden {
    code_version: String,
    series: BTreeMap<String, PoincareSeries>,
}

fn series_golden() -> SeriesGolden {
    serde_json::from_str(include_str!("golden/series.json")).unwrap()
}

#[test]
fn quotient_hilbert_functions() {
    let golden: QuotientGolden =
        serde_json::from_str(include_str!("golden/quotient_hilbert.json")).unwrap();
    assert_eq!(golden.code_version, ENGINE_VERSION);
    for e in golden.entries {
        let got = quotient_hilbert(IdealSpec::new(e.g_prime, e.k_prime), e.maxdeg).unwrap();
        assert_eq!(got, e.series, "I^{}_{} through {}", e.g_prime, e.k_prime, e.maxdeg);
    }
}

#[test]
fn gauge_group_expansion() {
    let golden = series_golden();
    assert_eq!(golden.code_version, ENGINE_VERSION);
    assert_eq!(
        gauge_group_poincare(2, 6).unwrap(),
        golden.series["gauge_group_g2_through6"]
    );
    assert_eq!(
        classifying_space_poincare(2, 10).unwrap(),
        golden.series["classifying_g2_through10"]
    );
}

#[test]
fn stable_bundle_polynomials() {
    let golden = series_golden();
    for g in 1..=3 {
        assert_eq!(
            stable_bundles_poincare(g, 1).unwrap(),
            golden.series[&format!("stable_bundles_g{g}")],
            "g = {g}"
        );
    }
}

#[test]
fn morse_assemblies() {
    let golden = series_golden();
    for n in 0..8 {
        let p = ModuliParams::new(2, n, 1).unwrap();
        assert_eq!(
            higgs_poincare_morse(&p).unwrap(),
            golden.series[&format!("higgs_morse_g2_n{n}")],
            "g = 2, n = {n}"
        );
    }
    for n in 0..3 {
        let p = ModuliParams::new(3, n, 1).unwrap();
        assert_eq!(
            higgs_poincare_morse(&p).unwrap(),
            golden.series[&format!("higgs_morse_g3_n{n}")],
            "g = 3, n = {n}"
        );
    }
}

#[test]
fn ring_side_polynomials() {
    let golden = series_golden();
    for g in 1..=3 {
        assert_eq!(
            full_h_series(g).unwrap(),
            golden.series[&format!("full_ring_g{g}")],
            "g = {g}"
        );
    }
}

#[test]
fn sample_values_are_readable() {
    let golden = series_golden();
    assert_eq!(
        golden.series["stable_bundles_g2"].to_string(),
        "1 + 4t + 7t^2 + 12t^3 + 24t^4 + 32t^5 + 24t^6 + 12t^7 + 7t^8 + 4t^9 + t^10"
    );
}
