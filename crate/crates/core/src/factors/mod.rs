//! One- and two-electron structure factors.
//!
//! `F(k)` is the spherically averaged Fourier transform of the charge density
//! and `B(s)` that of the momentum density. Each factor is available through
//! an analytic path (closed-form orbital-product transforms) and an independent
//! numeric path (quadrature of the densities against `j₀`), so the two can
//! certify each other.

pub mod closed_form;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distribution::{PairDistribution, RadialDistribution};
use crate::error::{Error, Result};
use crate::models::{AtomicModel, Measure, SplitShellModel};
use crate::quadrature::{IntegrandSample, Integrator, QuadratureSpec};
use crate::scalar::{from_usize, lit, Real};
use closed_form::{
    form_pair, form_pair_norm, oscillator_form, oscillator_reciprocal, reciprocal_pair, reciprocal_pair_norm,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorKind {
    /// `F(k)`, transform of the charge density; lives in momentum space.
    Form,
    /// `B(s)`, transform of the momentum density; lives in position space.
    ReciprocalForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Path {
    Analytic,
    Numeric,
}

#[derive(Debug, Clone)]
pub struct StructureFactor1D<T> {
    model: AtomicModel<T>,
    kind: FactorKind,
    path: Path,
    integrator: Integrator<T>,
}

impl<T: Real> StructureFactor1D<T> {
    pub fn new(model: AtomicModel<T>, kind: FactorKind, path: Path, spec: QuadratureSpec<T>) -> Result<Self> {
        Ok(Self { model, kind, path, integrator: Integrator::new(spec)? })
    }

    pub fn model(&self) -> &AtomicModel<T> {
        &self.model
    }
    pub fn kind(&self) -> FactorKind {
        self.kind
    }
    pub fn path(&self) -> Path {
        self.path
    }
    pub fn measure(&self) -> Measure {
        self.model.measure()
    }

    /// The factor at `x`, normalized so that its value at the origin is `N`.
    pub fn value(&self, x: T) -> Result<T> {
        match self.path {
            Path::Analytic => Ok(self.analytic(x)),
            Path::Numeric => self.numeric(x),
        }
    }

    fn analytic(&self, x: T) -> T {
        match (&self.model, self.kind) {
            (AtomicModel::Oscillator(o), FactorKind::Form) => oscillator_form(o.omega(), x),
            (AtomicModel::Oscillator(o), FactorKind::ReciprocalForm) => oscillator_reciprocal(o.omega(), x),
            (AtomicModel::Hydrogenic(h), FactorKind::Form) => closed_form::hydrogenic_form(h.z(), x),
            (AtomicModel::Hydrogenic(h), FactorKind::ReciprocalForm) => closed_form::hydrogenic_reciprocal(h.z(), x),
            (AtomicModel::SplitShell(s), kind) => {
                s.density_terms().iter().map(|&(pair, w)| w * pair_transform(kind, pair, x)).sum()
            }
        }
    }

    fn numeric(&self, x: T) -> Result<T> {
        let model = &self.model;
        let e = match (self.measure(), self.kind) {
            (Measure::Line, FactorKind::Form) => self.integrator.cosine(|r| Ok(model.charge_density(r)), x)?,
            (Measure::Line, FactorKind::ReciprocalForm) => {
                self.integrator.cosine(|p| Ok(model.momentum_density(p)), x)?
            }
            (Measure::Spherical, FactorKind::Form) => {
                self.integrator.bessel_j0(|r| Ok(model.charge_density(r)), x)?
            }
            (Measure::Spherical, FactorKind::ReciprocalForm) => {
                self.integrator.bessel_j0(|p| Ok(model.momentum_density(p)), x)?
            }
        };
        Ok(e.value)
    }

    /// `∫ f dⁿx`, the constant that maps the factor onto a unity-normalized distribution.
    ///
    /// The analytic path sums closed-form term norms; the numeric path uses
    /// Fourier inversion at the origin, `(2π)ⁿ` times the underlying density at zero.
    pub fn norm_constant(&self) -> Result<T> {
        let two_pi = lit::<T>(2.0) * T::PI();
        let norm = match (self.path, &self.model, self.kind) {
            (Path::Analytic, AtomicModel::Oscillator(o), FactorKind::Form) => {
                lit::<T>(2.0) * (T::PI() * o.omega()).sqrt()
            }
            (Path::Analytic, AtomicModel::Oscillator(o), FactorKind::ReciprocalForm) => {
                lit::<T>(2.0) * (T::PI() / o.omega()).sqrt()
            }
            (Path::Analytic, AtomicModel::Hydrogenic(h), kind) => {
                pair_norm(kind, crate::models::OrbitalPair::new(h.z(), h.z()))
            }
            (Path::Analytic, AtomicModel::SplitShell(s), kind) => {
                s.density_terms().iter().map(|&(pair, w)| w * pair_norm(kind, pair)).sum()
            }
            (Path::Numeric, model, kind) => {
                let dim = match model.measure() {
                    Measure::Line => 1,
                    Measure::Spherical => 3,
                };
                let at_origin = match kind {
                    FactorKind::Form => model.charge_density(T::zero()),
                    FactorKind::ReciprocalForm => model.momentum_density(T::zero()),
                };
                two_pi.powi(dim) * at_origin
            }
        };
        if !(norm.is_finite() && norm > T::zero()) {
            return Err(Error::DivergentNorm(format!("{} gave {norm}", self.model.label())));
        }
        Ok(norm)
    }

    pub fn unity_normalize(self) -> Result<Normalized1D<T>> {
        let norm = self.norm_constant()?;
        Ok(Normalized1D { factor: self, norm })
    }

    pub fn sample(&self, grid: &[T]) -> Result<Vec<IntegrandSample<T>>> {
        grid.iter().map(|&x| Ok(IntegrandSample::new(x, self.value(x)?))).collect()
    }

    pub fn positivity_scan(&self, grid: &[T]) -> Result<PositivityReport<T>> {
        let samples = self.sample(grid)?;
        Ok(PositivityReport::from_samples(
            samples.iter().map(|s| (vec![s.abscissa], s.value)),
            self.integrator.spec().abs_tol,
        ))
    }
}

fn pair_transform<T: Real>(kind: FactorKind, pair: crate::models::OrbitalPair<T>, x: T) -> T {
    match kind {
        FactorKind::Form => form_pair(pair, x),
        FactorKind::ReciprocalForm => reciprocal_pair(pair, x),
    }
}

fn pair_norm<T: Real>(kind: FactorKind, pair: crate::models::OrbitalPair<T>) -> T {
    match kind {
        FactorKind::Form => form_pair_norm(pair),
        FactorKind::ReciprocalForm => reciprocal_pair_norm(pair),
    }
}

/// A 1D factor divided by its norm constant.
#[derive(Debug, Clone)]
pub struct Normalized1D<T> {
    factor: StructureFactor1D<T>,
    norm: T,
}

impl<T: Real> Normalized1D<T> {
    pub fn norm_constant(&self) -> T {
        self.norm
    }
    pub fn factor(&self) -> &StructureFactor1D<T> {
        &self.factor
    }
}

impl<T: Real> RadialDistribution<T> for Normalized1D<T> {
    fn measure(&self) -> Measure {
        self.factor.measure()
    }
    fn value(&self, x: T) -> Result<T> {
        Ok(self.factor.value(x)? / self.norm)
    }
}

/// Two-electron factor `F(k₁,k₂)` or `B(s₁,s₂)` with `F(0,0) = B(0,0) = C(N,2) = 1`.
#[derive(Debug, Clone)]
pub struct StructureFactor2D<T> {
    model: SplitShellModel<T>,
    kind: FactorKind,
    path: Path,
    outer: Integrator<T>,
    inner: Integrator<T>,
}

impl<T: Real> StructureFactor2D<T> {
    pub fn new(model: SplitShellModel<T>, kind: FactorKind, path: Path, spec: QuadratureSpec<T>) -> Result<Self> {
        Ok(Self {
            model,
            kind,
            path,
            outer: Integrator::new(spec)?,
            inner: Integrator::new(spec.scaled(lit(0.1)))?,
        })
    }

    pub fn model(&self) -> &SplitShellModel<T> {
        &self.model
    }
    pub fn kind(&self) -> FactorKind {
        self.kind
    }
    pub fn path(&self) -> Path {
        self.path
    }

    pub fn value(&self, x1: T, x2: T) -> Result<T> {
        match self.path {
            Path::Analytic => Ok(self.analytic(x1, x2)),
            Path::Numeric => self.numeric(x1, x2),
        }
    }

    fn analytic(&self, x1: T, x2: T) -> T {
        let half = lit::<T>(0.5);
        self.model
            .pair_terms()
            .iter()
            .map(|t| half * t.weight * pair_transform(self.kind, t.first, x1) * pair_transform(self.kind, t.second, x2))
            .sum()
    }

    /// Nested transform: inner `H(r₁, k₂) = ∫ Γ(r₁,r₂) r₂² j₀(k₂r₂) dr₂`, then
    /// the outer `j₀(k₁r₁)` transform over `r₁`.
    fn numeric(&self, x1: T, x2: T) -> Result<T> {
        let half = lit::<T>(0.5);
        let m = &self.model;
        let kind = self.kind;
        let pair = move |a: T, b: T| match kind {
            FactorKind::Form => m.pair_density_position(a, b),
            FactorKind::ReciprocalForm => m.pair_density_momentum(a, b),
        };
        let inner = &self.inner;
        let e = self
            .outer
            .bessel_j0(|r1| Ok(inner.bessel_j0(|r2| Ok(half * pair(r1, r2)), x2)?.value), x1)?;
        Ok(e.value)
    }

    /// `∬ f d³x₁ d³x₂`.
    pub fn norm_constant(&self) -> Result<T> {
        let half = lit::<T>(0.5);
        let norm = match self.path {
            Path::Analytic => self
                .model
                .pair_terms()
                .iter()
                .map(|t| half * t.weight * pair_norm(self.kind, t.first) * pair_norm(self.kind, t.second))
                .sum(),
            Path::Numeric => {
                let at_origin = match self.kind {
                    FactorKind::Form => self.model.pair_density_position(T::zero(), T::zero()),
                    FactorKind::ReciprocalForm => self.model.pair_density_momentum(T::zero(), T::zero()),
                };
                (lit::<T>(2.0) * T::PI()).powi(6) * half * at_origin
            }
        };
        if !(norm.is_finite() && norm > T::zero()) {
            return Err(Error::DivergentNorm(format!("two-electron factor gave {norm}")));
        }
        Ok(norm)
    }

    pub fn unity_normalize(self) -> Result<Normalized2D<T>> {
        let norm = self.norm_constant()?;
        Ok(Normalized2D { factor: self, norm })
    }

    /// Values on the product grid `grid × grid`, row-major in the first argument.
    pub fn sample_grid(&self, grid: &[T]) -> Result<Vec<(T, T, T)>> {
        let rows: Result<Vec<Vec<(T, T, T)>>> = grid
            .par_iter()
            .map(|&a| grid.iter().map(|&b| Ok((a, b, self.value(a, b)?))).collect())
            .collect();
        Ok(rows?.into_iter().flatten().collect())
    }

    pub fn positivity_scan(&self, grid: &[T]) -> Result<PositivityReport<T>> {
        let values = self.sample_grid(grid)?;
        Ok(PositivityReport::from_samples(
            values.into_iter().map(|(a, b, v)| (vec![a, b], v)),
            self.outer.spec().abs_tol,
        ))
    }
}

#[derive(Debug, Clone)]
pub struct Normalized2D<T> {
    factor: StructureFactor2D<T>,
    norm: T,
}

impl<T: Real> Normalized2D<T> {
    pub fn norm_constant(&self) -> T {
        self.norm
    }
    pub fn factor(&self) -> &StructureFactor2D<T> {
        &self.factor
    }
}

impl<T: Real> PairDistribution<T> for Normalized2D<T> {
    fn value(&self, x1: T, x2: T) -> Result<T> {
        Ok(self.factor.value(x1, x2)? / self.norm)
    }

    fn is_separable(&self) -> bool {
        self.factor.model.is_non_interacting()
    }
}

/// Minimum of a sampled distribution and whether it clears `-abs_tol`.
#[derive(Debug, Clone, PartialEq)]
pub struct PositivityReport<T> {
    pub min_value: T,
    pub min_location: Vec<T>,
    pub is_positive: bool,
}

impl<T: Real> PositivityReport<T> {
    pub fn from_samples<I: IntoIterator<Item = (Vec<T>, T)>>(samples: I, abs_tol: T) -> Self {
        let mut min_value = T::infinity();
        let mut min_location = Vec::new();
        for (loc, v) in samples {
            if v < min_value || v.is_nan() {
                min_value = v;
                min_location = loc;
            }
        }
        let is_positive = min_value > -abs_tol;
        Self { min_value, min_location, is_positive }
    }

    pub fn into_error(self) -> Error {
        Error::NegativeDistribution {
            min_value: self.min_value.to_f64().unwrap_or(f64::NAN),
            location: self.min_location.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect(),
        }
    }
}

/// `n` log-spaced points on `[lo, hi]`.
pub fn log_grid<T: Real>(n: usize, lo: T, hi: T) -> Vec<T> {
    assert!(n >= 2 && lo > T::zero() && hi > lo);
    let (a, b) = (lo.ln(), hi.ln());
    let last = from_usize::<T>(n - 1);
    (0..n).map(|i| (a + (b - a) * from_usize::<T>(i) / last).exp()).collect()
}

/// `n` evenly spaced points on `[lo, hi]`.
pub fn linear_grid<T: Real>(n: usize, lo: T, hi: T) -> Vec<T> {
    assert!(n >= 2 && hi > lo);
    let last = from_usize::<T>(n - 1);
    (0..n).map(|i| lo + (hi - lo) * from_usize::<T>(i) / last).collect()
}

/// 200 log-spaced points over `[1e-3, 30]`.
pub fn default_scan_grid<T: Real>() -> Vec<T> {
    log_grid(200, lit(1e-3), lit(30.0))
}

/// `F(k)` for any model.
pub fn one_electron_f<T: Real>(model: &AtomicModel<T>, k: T, path: Path, spec: &QuadratureSpec<T>) -> Result<T> {
    StructureFactor1D::new(model.clone(), FactorKind::Form, path, *spec)?.value(k)
}

/// `B(s)` for any model.
pub fn one_electron_b<T: Real>(model: &AtomicModel<T>, s: T, path: Path, spec: &QuadratureSpec<T>) -> Result<T> {
    StructureFactor1D::new(model.clone(), FactorKind::ReciprocalForm, path, *spec)?.value(s)
}

/// `F(k₁, k₂)` for the two-electron model.
pub fn two_electron_f<T: Real>(
    model: &SplitShellModel<T>,
    k1: T,
    k2: T,
    path: Path,
    spec: &QuadratureSpec<T>,
) -> Result<T> {
    StructureFactor2D::new(model.clone(), FactorKind::Form, path, *spec)?.value(k1, k2)
}

/// `B(s₁, s₂)` for the two-electron model.
pub fn two_electron_b<T: Real>(
    model: &SplitShellModel<T>,
    s1: T,
    s2: T,
    path: Path,
    spec: &QuadratureSpec<T>,
) -> Result<T> {
    StructureFactor2D::new(model.clone(), FactorKind::ReciprocalForm, path, *spec)?.value(s1, s2)
}
