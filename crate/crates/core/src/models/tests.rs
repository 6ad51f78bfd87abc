use std::f64::consts::PI;

use proptest::prelude::*;

use super::*;
use crate::quadrature::{integrate_2d_radial, integrate_radial, Integrator, QuadratureSpec};
use crate::Error;

/// Near-optimal helium exponents, used throughout the tests.
const HE: (f64, f64, f64) = (2.0, 1.1885, 2.1832);

fn spec() -> QuadratureSpec<f64> {
    QuadratureSpec::default()
}

fn helium() -> SplitShellModel<f64> {
    SplitShellModel::new(HE.0, HE.1, HE.2).unwrap()
}

fn log_grid(n: usize, lo: f64, hi: f64) -> impl Iterator<Item = f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n).map(move |i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
}

#[test]
fn hydrogen_density_values() {
    let h = HydrogenicAtom::new(1.0).unwrap();
    assert!((h.charge_density(0.0) - 1.0 / PI).abs() < 1e-16);
    assert!((h.momentum_density(0.0) - 8.0 / (PI * PI)).abs() < 1e-15);
    assert!((1.0 / PI - 0.3183099).abs() < 1e-7);
    assert!((8.0 / (PI * PI) - 0.8105695).abs() < 1e-7);
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(matches!(HydrogenicAtom::new(0.0), Err(Error::InvalidModelParameters(_))));
    assert!(matches!(HydrogenicAtom::new(f64::NAN), Err(Error::InvalidModelParameters(_))));
    assert!(matches!(HarmonicOscillator1D::new(-1.0), Err(Error::InvalidModelParameters(_))));
    assert!(matches!(SplitShellModel::new(2.0, -1.0, 2.0), Err(Error::InvalidModelParameters(_))));
    assert!(matches!(SplitShellModel::new(2.0, 1.0, 0.0), Err(Error::InvalidModelParameters(_))));
}

#[test]
fn non_interacting_reduction_is_twice_hydrogenic() {
    let ni = SplitShellModel::non_interacting(2.0).unwrap();
    let h = HydrogenicAtom::new(2.0).unwrap();
    assert!(ni.is_non_interacting());
    for r in log_grid(50, 1e-3, 20.0) {
        let want = 2.0 * 8.0 / PI * (-4.0 * r).exp();
        assert!((ni.charge_density(r) - want).abs() <= 1e-12 * want.max(1e-300));
        let wp = 2.0 * h.momentum_density(r);
        assert!((ni.momentum_density(r) - wp).abs() <= 1e-12 * wp);
        for r2 in [0.0, 0.3, 1.7] {
            let g = 2.0 * h.charge_density(r) * h.charge_density(r2);
            assert!((ni.pair_density_position(r, r2) - g).abs() <= 1e-12 * g);
            let p = 2.0 * h.momentum_density(r) * h.momentum_density(r2);
            assert!((ni.pair_density_momentum(r, r2) - p).abs() <= 1e-12 * p);
        }
    }
}

#[test]
fn nearly_equal_exponents_take_the_degenerate_branch() {
    let m = SplitShellModel::new(2.0, 2.0, 2.0 + 1e-10).unwrap();
    assert!(m.is_non_interacting());
    assert_eq!(m.density_terms().len(), 1);
    let m = SplitShellModel::new(2.0, 2.0, 2.0 + 1e-6).unwrap();
    assert!(!m.is_non_interacting());
}

#[test]
fn helium_one_electron_densities_normalized_to_two() {
    let he = helium();
    let n = 4.0 * PI * integrate_radial(|r| he.charge_density(r), 2, &spec()).unwrap().value;
    assert!((n - 2.0).abs() < 1e-10, "{n}");
    let n = 4.0 * PI * integrate_radial(|p| he.momentum_density(p), 2, &spec()).unwrap().value;
    assert!((n - 2.0).abs() < 1e-10, "{n}");
}

#[test]
fn every_model_momentum_density_normalized_to_n() {
    let models: Vec<AtomicModel<f64>> = vec![
        HydrogenicAtom::new(1.0).unwrap().into(),
        HydrogenicAtom::new(7.5).unwrap().into(),
        HarmonicOscillator1D::new(0.25).unwrap().into(),
        HarmonicOscillator1D::new(4.0).unwrap().into(),
        helium().into(),
        SplitShellModel::non_interacting(3.0).unwrap().into(),
    ];
    for m in &models {
        let measure = m.measure();
        let pref: f64 = measure.prefactor();
        let w = measure.weight_power();
        let np = pref * integrate_radial(|p| m.momentum_density(p), w, &spec()).unwrap().value;
        let nr = pref * integrate_radial(|r| m.charge_density(r), w, &spec()).unwrap().value;
        let n = m.electron_count() as f64;
        assert!((np - n).abs() < 1e-9, "{}: {np}", m.label());
        assert!((nr - n).abs() < 1e-9, "{}: {nr}", m.label());
    }
}

#[test]
fn wavefunction_is_normalized() {
    let he = helium();
    let norm = integrate_2d_radial(|a, b| he.wavefunction(a, b).powi(2), &spec()).unwrap().value;
    assert!((norm - 1.0).abs() < 1e-9, "{norm}");
    let norm = integrate_2d_radial(|a, b| he.momentum_wavefunction(a, b).powi(2), &spec()).unwrap().value;
    assert!((norm - 1.0).abs() < 1e-9, "{norm}");
}

#[test]
fn pair_densities_normalized_to_two() {
    let he = helium();
    let g = integrate_2d_radial(|a, b| he.pair_density_position(a, b), &spec()).unwrap().value;
    assert!((g - 2.0).abs() < 1e-9, "{g}");
    let p = integrate_2d_radial(|a, b| he.pair_density_momentum(a, b), &spec()).unwrap().value;
    assert!((p - 2.0).abs() < 1e-9, "{p}");
}

#[test]
fn pair_density_marginal_is_one_electron_density() {
    // ∫Γ(r₁,r₂) d³r₂ = (N−1) ρ(r₁), tying the closed-form expansion to 2|Ψ|²
    let he = helium();
    let it = Integrator::new(spec()).unwrap();
    for r1 in [0.0, 0.4, 1.3, 4.0] {
        let m = 4.0 * PI * it.radial(|r2| Ok(he.pair_density_position(r1, r2)), 2).unwrap().value;
        let rho = he.charge_density(r1);
        assert!((m - rho).abs() <= 1e-10 * rho, "r1 = {r1}: {m} vs {rho}");
        let m = 4.0 * PI * it.radial(|p2| Ok(he.pair_density_momentum(r1, p2)), 2).unwrap().value;
        let pi = he.momentum_density(r1);
        assert!((m - pi).abs() <= 1e-10 * pi, "p1 = {r1}: {m} vs {pi}");
    }
}

#[test]
fn closed_form_normalization_constant() {
    let he = helium();
    let (a, b) = (HE.1, HE.2);
    // ⟨Ψ|Ψ⟩ from the moments of e^{-αr}
    let i = |alpha: f64| 8.0 * PI / alpha.powi(3); // 4π ∫ e^{-αr} r² dr
    let norm = he.normalization().powi(2) * (2.0 * i(2.0 * a) * i(2.0 * b) + 2.0 * i(a + b) * i(a + b));
    assert!((norm - 1.0).abs() < 1e-13, "{norm}");
}

#[test]
fn momentum_orbital_unit_norm() {
    for zeta in [0.5, 1.0, 2.7, 10.0] {
        let o = MomentumOrbital::new(zeta);
        let n = 4.0 * PI * integrate_radial(|p| o.value(p).powi(2), 2, &spec()).unwrap().value;
        assert!((n - 1.0).abs() < 1e-10, "zeta = {zeta}: {n}");
        let s = SlaterOrbital::new(zeta);
        let n = 4.0 * PI * integrate_radial(|r| s.value(r).powi(2), 2, &spec()).unwrap().value;
        assert!((n - 1.0).abs() < 1e-10);
    }
}

#[test]
fn momentum_overlap_equals_position_overlap() {
    let pair = OrbitalPair::new(1.2, 2.2);
    let num = 4.0 * PI * integrate_radial(|p| pair.momentum(p), 2, &spec()).unwrap().value;
    assert!((num - pair.overlap()).abs() < 1e-11);
    let num = 4.0 * PI * integrate_radial(|r| pair.position(r), 2, &spec()).unwrap().value;
    assert!((num - pair.overlap()).abs() < 1e-11);
}

#[test]
fn densities_non_negative_on_log_grid() {
    let models: Vec<AtomicModel<f64>> = vec![
        HydrogenicAtom::new(1.0).unwrap().into(),
        HydrogenicAtom::new(30.0).unwrap().into(),
        HarmonicOscillator1D::new(1.0).unwrap().into(),
        helium().into(),
        SplitShellModel::new(10.0, 8.57, 10.8).unwrap().into(),
    ];
    for m in &models {
        for x in log_grid(1000, 1e-4, 50.0) {
            assert!(m.charge_density(x) >= 0.0 && m.momentum_density(x) >= 0.0, "{} at {x}", m.label());
        }
    }
}

#[test]
fn labels_and_params() {
    let m: AtomicModel<f64> = helium().into();
    let p = m.params();
    assert_eq!(p.z, Some(2.0));
    assert_eq!(p.z1, Some(HE.1));
    assert!(m.label().starts_with("helium(Z=2"));
    let ni: AtomicModel<f64> = SplitShellModel::non_interacting(2.0).unwrap().into();
    assert_eq!(ni.label(), "helium-NI(Z=2)");
}

proptest! {
    #[test]
    fn pair_densities_exchange_symmetric(a in 0.0f64..12.0, b in 0.0f64..12.0, z1 in 0.5f64..4.0, z2 in 0.5f64..4.0) {
        let m = SplitShellModel::new(2.0, z1, z2).unwrap();
        prop_assert_eq!(m.pair_density_position(a, b), m.pair_density_position(b, a));
        prop_assert_eq!(m.pair_density_momentum(a, b), m.pair_density_momentum(b, a));
    }
}
