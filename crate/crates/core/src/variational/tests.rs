use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::optimize::gradient;
use super::*;
use crate::quadrature::QuadratureSpec;

fn quadrature_energy(a: f64, b: f64, z: f64) -> f64 {
    let spec = QuadratureSpec::default().with_rel_tol(1e-12).with_abs_tol(1e-14);
    oracle::quadrature_energy(a, b, z, &spec).unwrap()
}

#[test]
fn single_zeta_examples() {
    assert!((energy(2.0_f64, 2.0, 2.0).unwrap().total - -2.75).abs() < 1e-14);
    let z = 27.0_f64 / 16.0;
    assert!((energy(z, z, 2.0).unwrap().total - -2.84765625).abs() < 1e-14);
    assert_eq!(single_zeta_optimum(2.0), (27.0 / 16.0, -(27.0f64 / 16.0).powi(2)));
}

#[test]
fn single_zeta_formula_against_quadrature_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..10 {
        let zeta: f64 = rng.gen_range(0.5..4.0);
        let closed = energy(zeta, zeta, 2.0).unwrap().total;
        let textbook = zeta * zeta - 4.0 * zeta + 5.0 * zeta / 8.0;
        assert!((closed - textbook).abs() < 1e-12);
        let oracle = quadrature_energy(zeta, zeta, 2.0);
        assert!((closed - oracle).abs() < 1e-10, "zeta={zeta}: {closed} vs {oracle}");
    }
}

#[test]
fn split_energy_against_quadrature_oracle() {
    for (a, b, z) in [(1.19, 2.18, 2.0), (0.7, 3.3, 3.0), (5.6, 7.9, 7.0)] {
        let closed = energy(a, b, z).unwrap().total;
        let oracle = quadrature_energy(a, b, z);
        assert!((closed - oracle).abs() < 1e-10 * closed.abs(), "({a},{b}): {closed} vs {oracle}");
    }
}

#[test]
fn repulsion_integrals_against_oracle_pieces() {
    // (aa|bb) for equal exponents is 5ζ/8
    assert!((coulomb(1.6_f64, 1.6) - 1.0).abs() < 1e-14);
    assert!((exchange(1.6_f64, 1.6) - 1.0).abs() < 1e-14);
    assert!((nuclear_overlap(2.0_f64, 2.0) - 2.0).abs() < 1e-14);
}

#[test]
fn breakdown_sums_to_total() {
    let e = energy(1.3_f64, 2.4, 2.0).unwrap();
    assert_eq!(e.total, e.kinetic + e.nuclear_attraction + e.electron_repulsion);
    assert!(energy(-1.0_f64, 2.0, 2.0).is_err());
    assert!(energy(1.0_f64, 2.0, 0.0).is_err());
}

#[test]
fn helium_optimum() {
    let r = optimize(2.0_f64, None, &OptimizerOptions::default()).unwrap();
    assert!(r.converged, "{r:?}");
    assert!((r.z1 - 1.18853082600666).abs() < 1e-6 && (r.z2 - 2.1831708895176187).abs() < 1e-6);
    assert!((r.energy - -2.875661331234779).abs() < 1e-10);
    assert!(r.energy < -2.8476);
    let e = energy(r.z1, r.z2, 2.0).unwrap();
    assert!(e.virial_defect() < 1e-4);
}

#[test]
fn grid_search_oracle() {
    let mut best = (f64::INFINITY, 0.0, 0.0);
    for i in 0..=300 {
        for j in 0..=300 {
            let (a, b) = (1.05 + 0.001 * i as f64, 2.05 + 0.001 * j as f64);
            let e = energy(a, b, 2.0).unwrap().total;
            if e < best.0 {
                best = (e, a, b);
            }
        }
    }
    let r = optimize(2.0_f64, None, &OptimizerOptions::default()).unwrap();
    assert!((r.energy - best.0).abs() < 1e-4);
    assert!(r.energy <= best.0);
    assert!((r.z1 - best.1).abs() < 2e-3 && (r.z2 - best.2).abs() < 2e-3);
}

#[test]
fn descent_from_symmetric_guess() {
    for z in [2.0, 5.0, 10.0] {
        let r = optimize(z, Some((z, z)), &OptimizerOptions::default()).unwrap();
        assert!(r.trace.windows(2).all(|w| w[1] <= w[0]), "Z={z}");
        assert!(r.trace[0] <= energy(z, z, z).unwrap().total + 1e-12);
        assert!(r.converged);
    }
}

#[test]
fn series_trends_in_scaled_form() {
    let zs: Vec<f64> = (2..=10).map(f64::from).collect();
    let rs = optimize_series(&zs, &OptimizerOptions::default()).unwrap();
    for (z, r) in zs.iter().zip(&rs) {
        assert!(r.converged && r.z1 <= r.z2);
        let (_, single) = single_zeta_optimum(*z);
        let unscreened = energy(*z, *z, *z).unwrap().total;
        assert!(r.energy <= single && single <= unscreened);
        let g = gradient([r.z1, r.z2], *z, 1e-5);
        assert!((g[0] * g[0] + g[1] * g[1]).sqrt() < 1e-6);
        assert!(energy(r.z1, r.z2, *z).unwrap().virial_defect() < 1e-4);
    }
    for w in rs.windows(2) {
        assert!((w[1].z2 - w[1].z1) / w[1].z < (w[0].z2 - w[0].z1) / w[0].z);
        assert!(w[1].z1 / w[1].z > w[0].z1 / w[0].z);
    }
    let last = rs.last().unwrap();
    assert!((last.z1 - 8.573086883085779).abs() < 1e-5 && (last.z2 - 10.80184115339574).abs() < 1e-5);
}

#[test]
fn rejects_small_charge() {
    assert!(optimize(0.5_f64, None, &OptimizerOptions::default()).is_err());
}

#[test]
fn iteration_cap_reports_not_converged() {
    let opts = OptimizerOptions { max_iterations: 3, ..Default::default() };
    let r = optimize(2.0_f64, None, &opts).unwrap();
    assert!(!r.converged);
    assert!(matches!(r.require_converged(), Err(crate::error::Error::NotConverged { .. })));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sub/params.txt");
    let mut cache = ParameterCache::open(&path).unwrap();
    assert!(cache.is_empty());
    let (a, b) = cache.exponents(3.0, &OptimizerOptions::default()).unwrap();
    cache.save().unwrap();
    let reopened = ParameterCache::open(&path).unwrap();
    let (a2, b2, e, converged) = reopened.get(3.0).unwrap();
    assert_eq!((a, b), (a2, b2));
    assert!(converged && (e - -7.248748).abs() < 1e-6);
    assert!(reopened.to_text().starts_with("# Z Z1 Z2 E converged\n"));
    std::fs::write(&path, "2 1.0 oops -1 true\n").unwrap();
    assert!(ParameterCache::open(&path).is_err());
}

proptest! {
    #[test]
    fn exchange_symmetry(a in 0.2f64..8.0, b in 0.2f64..8.0, z in 1.0f64..10.0) {
        prop_assert_eq!(energy(a, b, z).unwrap().total, energy(b, a, z).unwrap().total);
    }

    #[test]
    fn variational_bound_above_exact_helium(a in 0.3f64..5.0, b in 0.3f64..5.0) {
        // exact nonrelativistic helium ground state
        prop_assert!(energy(a, b, 2.0).unwrap().total > -2.903724);
    }
}
