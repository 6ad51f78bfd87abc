use std::f64::consts::PI;

use proptest::prelude::*;

use super::*;

fn spec() -> QuadratureSpec<f64> {
    QuadratureSpec::default()
}

fn assert_close(got: f64, want: f64, tol: f64) {
    assert!((got - want).abs() <= tol, "got {got:.15e}, want {want:.15e}, diff {:e}", (got - want).abs());
}

#[test]
fn radial_gamma_moments() {
    let e = integrate_radial(|x: f64| (-x).exp(), 2, &spec()).unwrap();
    assert_close(e.value, 2.0, 1e-12);
    let e = integrate_radial(|x: f64| (-2.0 * x).exp(), 2, &spec()).unwrap();
    assert_close(e.value, 0.25, 1e-12);
    let e = integrate_radial(|x: f64| (-x * x / 2.0).exp(), 0, &spec()).unwrap();
    assert_close(e.value, (PI / 2.0).sqrt(), 1e-12);
}

#[test]
fn error_estimate_respects_tolerance() {
    let s = spec();
    for f in [
        Box::new(|x: f64| (-x).exp()) as Box<dyn Fn(f64) -> f64>,
        Box::new(|x: f64| 1.0 / (1.0 + x * x).powi(4)),
        Box::new(|x: f64| (-3.0 * x).exp() * (1.0 + x).ln()),
    ] {
        let e = integrate_radial(&f, 2, &s).unwrap();
        assert!(e.error <= s.abs_tol.max(s.rel_tol * e.value.abs()), "{e:?}");
    }
}

#[test]
fn algebraic_tails_are_integrated() {
    // hydrogen momentum density, Z = 1
    let e = integrate_radial(|p: f64| 4.0 * PI * 8.0 / (PI * PI * (1.0 + p * p).powi(4)), 2, &spec()).unwrap();
    assert_close(e.value, 1.0, 1e-11);
    // ∫ x²/(1+x²)² dx = π/4, decays only as x⁻²
    let e = integrate_radial(|x: f64| 1.0 / (1.0 + x * x).powi(2), 2, &spec()).unwrap();
    assert_close(e.value, PI / 4.0, 1e-10);
}

#[test]
fn bessel_transform_examples() {
    let rho = |r: f64| (-2.0 * r).exp() / PI;
    assert_close(bessel_j0_transform(rho, 0.0, &spec()).unwrap().value, 1.0, 1e-12);
    assert_close(bessel_j0_transform(rho, 2.0, &spec()).unwrap().value, 0.25, 1e-12);
    let pi_p = |p: f64| 8.0 / (PI * PI * (1.0 + p * p).powi(4));
    let want = (-1.0_f64).exp() * (1.0 + 1.0 + 1.0 / 3.0);
    assert_close(bessel_j0_transform(pi_p, 1.0, &spec()).unwrap().value, want, 1e-10);
    assert_close(want, 0.858_385_362_7, 1e-10);
}

#[test]
fn bessel_transform_of_exponentials_matches_closed_form() {
    for &a in &[1.0_f64, 2.0, 4.0] {
        for &q in &[0.5_f64, 1.0, 5.0] {
            let got = bessel_j0_transform(|r: f64| (-a * r).exp(), q, &spec()).unwrap();
            let want = 8.0 * PI * a / (a * a + q * q).powi(2);
            assert_close(got.value, want, 1e-10 * want.max(1.0));
        }
    }
}

#[test]
fn bessel_transform_at_large_argument() {
    // cancellation-heavy regime: many half-periods, tiny result
    let q = 40.0;
    let got = bessel_j0_transform(|r: f64| (-r).exp(), q, &spec()).unwrap();
    let want = 8.0 * PI / (1.0 + q * q).powi(2);
    assert_close(got.value, want, 1e-12);
}

#[test]
fn transform_at_zero_equals_weighted_radial() {
    let f = |r: f64| (-1.7 * r).exp() * (1.0 + r);
    let t = bessel_j0_transform(f, 0.0, &spec()).unwrap().value;
    let r = integrate_radial(f, 2, &spec()).unwrap().value;
    assert_eq!(t, 4.0 * PI * r);
}

#[test]
fn cosine_transform_of_gaussian() {
    let it = Integrator::new(spec()).unwrap();
    for &q in &[0.0_f64, 0.3, 2.0, 6.0] {
        let got = it.cosine(|x: f64| Ok((-x * x / 2.0).exp()), q).unwrap();
        let want = (2.0 * PI).sqrt() * (-q * q / 2.0).exp();
        assert_close(got.value, want, 1e-11);
    }
}

#[test]
fn two_dimensional_separable_product_is_unity() {
    let norm = 8.0 * PI; // 4π ∫ e^{-x} x² dx
    let e = integrate_2d_radial(|a: f64, b: f64| (-a).exp() * (-b).exp() / (norm * norm), &spec()).unwrap();
    assert_close(e.value, 1.0, 1e-9);
}

#[test]
fn two_dimensional_nested_matches_gamma_squared() {
    let e = integrate_2d_radial(|a: f64, b: f64| (-a - b).exp() * a * b, &spec()).unwrap();
    let want = (4.0 * PI).powi(2) * 36.0;
    assert_close(e.value, want, 1e-9 * want);
}

#[test]
fn two_dimensional_symmetric_integrand_swap_invariant() {
    let f = |a: f64, b: f64| (-1.3 * a - 2.9 * b).exp() * (1.0 + a * b);
    let s = spec();
    let x = integrate_2d_radial(f, &s).unwrap().value;
    let y = integrate_2d_radial(|a, b| f(b, a), &s).unwrap().value;
    assert!((x - y).abs() <= s.rel_tol * x.abs());
}

#[test]
fn finite_interval() {
    let it = Integrator::new(spec()).unwrap();
    let e = it.interval(|x: f64| Ok(x.sin()), 0.0, PI).unwrap();
    assert_close(e.value, 2.0, 1e-13);
    let e = it.interval(|x: f64| Ok(x.sin()), PI, 0.0).unwrap();
    assert_close(e.value, -2.0, 1e-13);
}

#[test]
fn non_finite_integrand_is_reported() {
    let err = integrate_radial(|x: f64| if x > 1.0 { f64::NAN } else { 1.0 }, 0, &spec()).unwrap_err();
    assert!(matches!(err, Error::NonFinite { .. }), "{err:?}");
}

#[test]
fn panel_budget_exhaustion_is_non_convergent() {
    let tight = QuadratureSpec { max_panels: 4, ..spec() };
    let err = bessel_j0_transform(|r: f64| (-r).exp(), 5.0, &tight).unwrap_err();
    assert!(matches!(err, Error::NonConvergent { .. }), "{err:?}");
}

#[test]
fn invalid_spec_rejected() {
    let bad = QuadratureSpec { panel_order: 1, ..spec() };
    assert!(matches!(integrate_radial(|x: f64| x, 0, &bad), Err(Error::InvalidSpec(_))));
    let bad = QuadratureSpec { rel_tol: 0.0, ..spec() };
    assert!(bad.validate().is_err());
}

#[test]
fn identically_zero_integrand() {
    let e = integrate_radial(|_x: f64| 0.0, 2, &spec()).unwrap();
    assert_eq!(e.value, 0.0);
}

#[test]
fn single_precision_scalar() {
    let s = QuadratureSpec::<f32>::default();
    let e = integrate_radial(|x: f32| (-x).exp(), 2, &s).unwrap();
    assert!((e.value - 2.0).abs() < 1e-4, "{e:?}");
    let t = bessel_j0_transform(|r: f32| (-2.0 * r).exp() / std::f32::consts::PI, 2.0, &s).unwrap();
    assert!((t.value - 0.25).abs() < 1e-4, "{t:?}");
}

#[test]
fn deterministic_for_fixed_spec() {
    let f = |p: f64| 1.0 / (2.0 + p * p).powi(3);
    let a = bessel_j0_transform(f, 3.3, &spec()).unwrap();
    let b = bessel_j0_transform(f, 3.3, &spec()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn halving_tolerance_stays_within_previous_error() {
    let funcs: [fn(f64) -> f64; 3] = [
        |x| (-0.7 * x).exp() * (1.0 + x * x),
        |x| 1.0 / (1.0 + x * x).powi(3),
        |x| (-x).exp() * (3.0 * x).cos().abs(),
    ];
    for f in funcs {
        let mut s = QuadratureSpec { rel_tol: 1e-6, abs_tol: 1e-9, ..spec() };
        let mut prev = integrate_radial(f, 2, &s).unwrap();
        for _ in 0..6 {
            s.rel_tol /= 2.0;
            let next = integrate_radial(f, 2, &s).unwrap();
            assert!((next.value - prev.value).abs() <= prev.error, "{prev:?} -> {next:?}");
            prev = next;
        }
    }
}

#[test]
fn huge_conjugate_value_with_algebraic_density() {
    // 4π∫(1+p²)⁻⁴ j₀(qp) p² dp = π² e^{-q}(q²+3q+3)/24
    let s = spec();
    let f = |p: f64| (1.0 + p * p).powi(-4);
    let exact = |q: f64| PI * PI * (-q).exp() * (q * q + 3.0 * q + 3.0) / 24.0;
    for q in [3.0, 20.0] {
        assert_close(bessel_j0_transform(f, q, &s).unwrap().value, exact(q), 1e-10);
    }
}

#[test]
fn huge_conjugate_value_stops_at_absolute_tolerance() {
    let s = spec();
    for q in [500.0, 2000.0] {
        let e = bessel_j0_transform(|r: f64| (-r).exp(), q, &s).unwrap();
        assert_close(e.value, 8.0 * PI / (1.0 + q * q).powi(2), 10.0 * s.abs_tol);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn linearity(a in -3.0f64..3.0, b in -3.0f64..3.0, alpha in 0.3f64..4.0, beta in 0.3f64..4.0, n in 0i32..4) {
        let s = spec();
        let f = move |x: f64| (-alpha * x).exp() * x.powi(n);
        let g = move |x: f64| (-beta * x).exp();
        let lhs = integrate_radial(|x| a * f(x) + b * g(x), 2, &s).unwrap().value;
        let rhs = a * integrate_radial(f, 2, &s).unwrap().value + b * integrate_radial(g, 2, &s).unwrap().value;
        let scale = (a.abs() + b.abs()).max(1.0) * (lhs.abs().max(rhs.abs()).max(1.0));
        prop_assert!((lhs - rhs).abs() <= 2.0 * s.rel_tol * scale, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn transform_consistency_at_zero(alpha in 0.2f64..8.0, c in 0.0f64..2.0) {
        let s = spec();
        let f = move |r: f64| (-alpha * r).exp() * (1.0 + c * r);
        let t = bessel_j0_transform(f, 0.0, &s).unwrap().value;
        let r = 4.0 * PI * integrate_radial(f, 2, &s).unwrap().value;
        prop_assert!((t - r).abs() <= s.rel_tol * r.abs());
    }
}
