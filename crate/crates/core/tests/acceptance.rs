//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test -p offdiag-core --test acceptance -- --nocapture`.

use std::sync::OnceLock;

use offdiag_core::verify::{self, Check, HeliumSeries, VerifyConfig};

fn config() -> &'static VerifyConfig {
    static CFG: OnceLock<VerifyConfig> = OnceLock::new();
    CFG.get_or_init(VerifyConfig::default)
}

fn series() -> &'static HeliumSeries {
    static SERIES: OnceLock<HeliumSeries> = OnceLock::new();
    SERIES.get_or_init(|| HeliumSeries::compute(config()).expect("He series"))
}

fn report(c: Check) {
    println!("{c}");
    assert!(c.passed, "{c}");
}

#[test]
fn criterion_1_hydrogenic_constant_sum() {
    report(verify::hydrogenic_constant_sum(config()));
}

#[test]
fn criterion_2_closed_form_anchors() {
    report(verify::closed_form_anchors(config()));
}

#[test]
fn criterion_3_oscillator_lower_bound() {
    report(verify::oscillator_lower_bound(config()));
}

#[test]
fn criterion_4_uncertainty_sums() {
    report(verify::uncertainty_sums(config(), series()));
}

#[test]
fn criterion_5_helium_signs_and_limits() {
    report(verify::helium_signs_and_limits(series()));
}

#[test]
fn criterion_6_information_distances() {
    report(verify::information_distances(series()));
}

#[test]
fn criterion_7_dual_path_equivalence() {
    report(verify::dual_path_equivalence(config()));
}

#[test]
fn criterion_8_variational() {
    report(verify::variational(config()));
}

#[test]
fn criterion_9_normalization() {
    report(verify::normalization(config()));
}

#[test]
fn loosened_tolerance_fails_constancy() {
    let cfg = VerifyConfig { spec: config().spec.with_rel_tol(1e-3), ..config().clone() };
    let c = verify::hydrogenic_constant_sum(&cfg);
    println!("(rel_tol 1e-3) {c}");
    assert!(!c.passed);
}
