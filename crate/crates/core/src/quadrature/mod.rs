//! Adaptive integration over semi-infinite radial domains.
//!
//! The domain `[0, ∞)` is split into geometric panels `[0, x₀, 2x₀, 4x₀, …, L]`
//! where `L` is the first doubling past the integrand maximum at which the
//! envelope has fallen by `tail_cutoff_decades` powers of ten. The remainder
//! `[L, ∞)` is integrated under `x = L/t`, so algebraically decaying integrands
//! (momentum densities, form factors) are handled as well as exponential ones.
//! Oscillatory transforms additionally break at every zero of the kernel.

mod adaptive;
mod gauss;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{from_usize, lit, sinc, Real};
use adaptive::{integrate_segments, Map, Outcome, PanelRule, Segment};

pub use gauss::GaussLegendre;

/// First geometric breakpoint of the radial scan.
const SCAN_START: f64 = 1.0 / 4096.0;
/// Number of doublings the scan may take before giving up on locating the tail.
const SCAN_DOUBLINGS: i32 = 64;

/// Settings shared by every numerical integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, bound(deserialize = "T: Real + Deserialize<'de>", serialize = "T: Real + Serialize"))]
pub struct QuadratureSpec<T> {
    pub rel_tol: T,
    pub abs_tol: T,
    /// Nodes of the high-order Gauss-Legendre rule applied on each panel.
    pub panel_order: usize,
    pub max_panels: usize,
    /// Envelope drop, in powers of ten, after which the reciprocal tail map takes over.
    pub tail_cutoff_decades: T,
    /// Panels per half-period of an oscillatory kernel.
    pub oscillatory_panels_per_period: usize,
}

impl<T: Real> Default for QuadratureSpec<T> {
    fn default() -> Self {
        let eps = T::epsilon();
        Self {
            rel_tol: lit::<T>(1e-10).max(eps * lit(100.0)),
            abs_tol: lit::<T>(1e-12).max(eps * lit(10.0)),
            panel_order: 16,
            max_panels: 50_000,
            tail_cutoff_decades: lit(16.0),
            oscillatory_panels_per_period: 1,
        }
    }
}

impl<T: Real> QuadratureSpec<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > T::zero()) || !(self.abs_tol > T::zero()) {
            return Err(Error::InvalidSpec("rel_tol and abs_tol must be positive".into()));
        }
        if self.panel_order < 2 {
            return Err(Error::InvalidSpec("panel_order must be at least 2".into()));
        }
        if self.max_panels < 1 {
            return Err(Error::InvalidSpec("max_panels must be at least 1".into()));
        }
        if !(self.tail_cutoff_decades > T::zero()) {
            return Err(Error::InvalidSpec("tail_cutoff_decades must be positive".into()));
        }
        if self.oscillatory_panels_per_period < 1 {
            return Err(Error::InvalidSpec("oscillatory_panels_per_period must be at least 1".into()));
        }
        Ok(())
    }

    pub fn with_rel_tol(mut self, rel_tol: T) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_abs_tol(mut self, abs_tol: T) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    /// Same spec with both tolerances multiplied by `factor`.
    pub fn scaled(mut self, factor: T) -> Self {
        self.rel_tol = self.rel_tol * factor;
        self.abs_tol = self.abs_tol * factor;
        self
    }
}

/// An integral value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate<T> {
    pub value: T,
    pub error: T,
}

impl<T: Real> Estimate<T> {
    pub fn new(value: T, error: T) -> Self {
        Self { value, error }
    }

    pub fn exact(value: T) -> Self {
        Self { value, error: T::zero() }
    }

    pub fn scale(self, factor: T) -> Self {
        Self { value: self.value * factor, error: self.error * factor.abs() }
    }
}

impl<T: Real> std::ops::Add for Estimate<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { value: self.value + rhs.value, error: self.error + rhs.error }
    }
}

impl<T: Real> std::ops::Sub for Estimate<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { value: self.value - rhs.value, error: self.error + rhs.error }
    }
}

/// One sampled point of an integrand or distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrandSample<T> {
    pub abscissa: T,
    pub value: T,
}

impl<T: Real> IntegrandSample<T> {
    pub fn new(abscissa: T, value: T) -> Self {
        debug_assert!(abscissa >= T::zero());
        Self { abscissa, value }
    }
}

/// A validated spec together with its precomputed panel rules.
#[derive(Debug, Clone)]
pub struct Integrator<T> {
    spec: QuadratureSpec<T>,
    rule: PanelRule<T>,
}

impl<T: Real> Integrator<T> {
    pub fn new(spec: QuadratureSpec<T>) -> Result<Self> {
        spec.validate()?;
        Ok(Self { rule: PanelRule::new(spec.panel_order), spec })
    }

    pub fn spec(&self) -> &QuadratureSpec<T> {
        &self.spec
    }

    fn rescaled(&self, factor: T) -> Self {
        Self { spec: self.spec.scaled(factor), rule: self.rule.clone() }
    }

    /// Geometric breakpoints `[0, x₀, 2x₀, …, L]` covering the bulk of `envelope`.
    fn scan<E: FnMut(T) -> Result<T>>(&self, envelope: &mut E) -> Result<Vec<T>> {
        let x0 = lit::<T>(SCAN_START);
        let drop = lit::<T>(10.0).powf(-self.spec.tail_cutoff_decades);
        let mut points = vec![T::zero()];
        let mut peak = T::zero();
        let mut x = x0;
        for _ in 0..SCAN_DOUBLINGS {
            let g = envelope(x)?.abs();
            if !g.is_finite() {
                return Err(Error::NonFinite { abscissa: x.to_f64().unwrap_or(f64::NAN) });
            }
            points.push(x);
            if g > peak {
                peak = g;
            } else if g <= peak * drop {
                break;
            }
            x = x * lit(2.0);
        }
        if peak == T::zero() {
            points.truncate(2);
        }
        Ok(points)
    }

    fn with_tail(&self, breakpoints: Vec<T>) -> [Segment<T>; 2] {
        let origin = *breakpoints.last().expect("scan yields at least two points");
        [
            Segment { map: Map::Identity, breakpoints },
            Segment { map: Map::Reciprocal { origin }, breakpoints: vec![T::zero(), T::one()] },
        ]
    }

    fn radial_outcome<F: FnMut(T) -> Result<T>>(&self, f: &mut F, weight_power: i32) -> Result<Outcome<T>> {
        if weight_power < 0 {
            return Err(Error::InvalidSpec("weight_power must be non-negative".into()));
        }
        let mut g = |x: T| -> Result<T> {
            let v = f(x)?;
            Ok(if v == T::zero() { v } else { v * x.powi(weight_power) })
        };
        let breakpoints = self.scan(&mut g)?;
        integrate_segments(&mut g, &self.with_tail(breakpoints), &self.rule, &self.spec)
    }

    /// `∫₀^∞ f(x) x^weight_power dx`.
    pub fn radial<F: FnMut(T) -> Result<T>>(&self, mut f: F, weight_power: i32) -> Result<Estimate<T>> {
        let out = self.radial_outcome(&mut f, weight_power)?;
        Ok(Estimate::new(out.value, out.error))
    }

    /// `∫ₐᵇ f(x) dx` over a finite interval.
    pub fn interval<F: FnMut(T) -> Result<T>>(&self, mut f: F, a: T, b: T) -> Result<Estimate<T>> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::InvalidSpec("interval bounds must be finite".into()));
        }
        if a == b {
            return Ok(Estimate::exact(T::zero()));
        }
        let (lo, hi, sign) = if a < b { (a, b, T::one()) } else { (b, a, -T::one()) };
        let seg = [Segment { map: Map::Identity, breakpoints: vec![lo, hi] }];
        let out = integrate_segments(&mut f, &seg, &self.rule, &self.spec)?;
        Ok(Estimate::new(out.value, out.error).scale(sign))
    }

    /// Oscillatory transform on `[0, ∞)` with kernel zeros at `offset·π/q + nπ/q`.
    ///
    /// Kernel zeros are only placed where the envelope times the kernel
    /// amplitude `amplitude(qx)` still matters at the absolute tolerance;
    /// beyond that the remaining alternating tail is negligible and goes to
    /// the reciprocal tail segment.
    fn oscillatory<F, K, A>(
        &self,
        f: &mut F,
        weight_power: i32,
        q: T,
        offset: T,
        kernel: K,
        amplitude: A,
    ) -> Result<Outcome<T>>
    where
        F: FnMut(T) -> Result<T>,
        K: Fn(T) -> T,
        A: Fn(T) -> T,
    {
        let mut envelope = |x: T| -> Result<T> {
            let v = f(x)?;
            Ok(if v == T::zero() { v } else { v * x.powi(weight_power) })
        };
        let mut breakpoints = self.scan(&mut envelope)?;
        let negligible = self.spec.abs_tol * lit(1e-3);
        let mut peak_seen = T::zero();
        let mut cut_at = breakpoints.len() - 1;
        let mut candidate = None;
        for (i, &x) in breakpoints.iter().enumerate().skip(1) {
            let g = envelope(x)?.abs();
            peak_seen = peak_seen.max(g);
            let mass = g * x * amplitude(q * x);
            if g < peak_seen && mass <= negligible {
                candidate.get_or_insert(i);
            } else {
                candidate = None;
            }
        }
        if let Some(i) = candidate {
            cut_at = i.max(1);
        }
        breakpoints.truncate(cut_at + 1);
        let cutoff = *breakpoints.last().unwrap();
        let half_period = T::PI() / q;
        let n_zeros = ((cutoff / half_period) - offset).floor().max(T::zero());
        let per = self.spec.oscillatory_panels_per_period;
        let n_zeros_usize = n_zeros.to_usize().unwrap_or(usize::MAX);
        if n_zeros_usize.saturating_mul(per) > self.spec.max_panels {
            return Err(Error::NonConvergent {
                reason: format!(
                    "{} kernel half-periods below the tail cutoff exceed max_panels = {}",
                    n_zeros_usize, self.spec.max_panels
                ),
            });
        }
        let step = half_period / from_usize(per);
        let first = offset * half_period;
        let mut x = first;
        let mut k = 0usize;
        while x < cutoff {
            if x > T::zero() {
                breakpoints.push(x);
            }
            k += 1;
            x = first + step * from_usize(k);
        }
        breakpoints.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let min_gap = T::epsilon() * lit(64.0);
        breakpoints.dedup_by(|b, a| (*b - *a).abs() <= min_gap * a.abs().max(T::one()));
        let mut g = |x: T| -> Result<T> {
            let v = f(x)?;
            Ok(if v == T::zero() { v } else { v * x.powi(weight_power) * kernel(q * x) })
        };
        integrate_segments(&mut g, &self.with_tail(breakpoints), &self.rule, &self.spec)
    }

    /// `4π ∫₀^∞ f(x) j₀(qx) x² dx`.
    pub fn bessel_j0<F: FnMut(T) -> Result<T>>(&self, mut f: F, q: T) -> Result<Estimate<T>> {
        if !(q >= T::zero()) {
            return Err(Error::InvalidSpec("conjugate value must be non-negative".into()));
        }
        let four_pi = lit::<T>(4.0) * T::PI();
        if q == T::zero() {
            return Ok(self.radial(f, 2)?.scale(four_pi));
        }
        let out = self.oscillatory(&mut f, 2, q, T::zero(), sinc, |t: T| T::one().min(t.recip()))?;
        Ok(Estimate::new(out.value, out.error).scale(four_pi))
    }

    /// `∫_{-∞}^{∞} f(|x|) cos(qx) dx = 2 ∫₀^∞ f(x) cos(qx) dx`.
    pub fn cosine<F: FnMut(T) -> Result<T>>(&self, mut f: F, q: T) -> Result<Estimate<T>> {
        if !(q >= T::zero()) {
            return Err(Error::InvalidSpec("conjugate value must be non-negative".into()));
        }
        let two = lit::<T>(2.0);
        if q == T::zero() {
            return Ok(self.radial(f, 0)?.scale(two));
        }
        let out = self.oscillatory(&mut f, 0, q, lit(0.5), |t: T| t.cos(), |_| T::one())?;
        Ok(Estimate::new(out.value, out.error).scale(two))
    }

    /// `(4π)² ∬ f(x₁, x₂) x₁² x₂² dx₁ dx₂` by nested radial quadrature.
    ///
    /// The inner integral runs at a tenth of the tolerances and the outer at
    /// half, so the propagated inner error stays inside the requested budget
    /// unless the integrand cancels heavily.
    pub fn radial_2d<F: FnMut(T, T) -> Result<T>>(&self, mut f: F) -> Result<Estimate<T>> {
        let inner = self.rescaled(lit(0.1));
        let outer = self.rescaled(lit(0.5));
        let four_pi = lit::<T>(4.0) * T::PI();
        let mut h = |x1: T| -> Result<T> {
            let e = inner.radial(|x2| f(x1, x2), 2)?;
            Ok(e.value * four_pi)
        };
        let out = outer.radial_outcome(&mut h, 2)?;
        let propagated = inner.spec.rel_tol * out.abs_integral;
        Ok(Estimate::new(out.value * four_pi, (out.error + propagated) * four_pi))
    }
}

/// `∫₀^∞ f(x) x^weight_power dx` with an error estimate.
pub fn integrate_radial<T: Real, F: Fn(T) -> T>(
    f: F,
    weight_power: i32,
    spec: &QuadratureSpec<T>,
) -> Result<Estimate<T>> {
    Integrator::new(*spec)?.radial(|x| Ok(f(x)), weight_power)
}

/// `4π ∫₀^∞ f(x) j₀(qx) x² dx` with `j₀(t) = sin(t)/t`.
pub fn bessel_j0_transform<T: Real, F: Fn(T) -> T>(
    f: F,
    conjugate_value: T,
    spec: &QuadratureSpec<T>,
) -> Result<Estimate<T>> {
    Integrator::new(*spec)?.bessel_j0(|x| Ok(f(x)), conjugate_value)
}

/// `(4π)² ∬ f(x₁, x₂) x₁² x₂² dx₁ dx₂`.
pub fn integrate_2d_radial<T: Real, F: Fn(T, T) -> T>(f: F, spec: &QuadratureSpec<T>) -> Result<Estimate<T>> {
    Integrator::new(*spec)?.radial_2d(|a, b| Ok(f(a, b)))
}

#[cfg(test)]
mod tests;
