//! Shannon entropies of densities and structure factors, information
//! distances, mutual informations and correlation measures.

pub mod closed_form;
mod report;

pub use closed_form::{
    closed_form_entropy, hydrogenic_sum, oscillator_sum, uncertainty_bound, ClosedFormEntropy, ClosedFormKind,
    HYDROGENIC_B_CONSTANT,
};
pub use report::{delta_measures, EntropyOptions, EntropyReport};

use crate::distribution::{PairDistribution, RadialDistribution};
use crate::error::Result;
use crate::factors::{default_scan_grid, log_grid, PositivityReport};
use crate::quadrature::{Estimate, Integrator};
use crate::scalar::{lit, underflow_threshold, xlogx, Real};

/// Points per axis of the screening grid used before a two-electron entropy.
pub const PAIR_SCREEN_POINTS: usize = 50;

/// Rejects a value below `-abs_tol`; maps tiny negative round-off to zero.
fn checked<T: Real>(v: T, at: &[T], abs_tol: T) -> Result<T> {
    if v.is_nan() || v < -abs_tol {
        return Err(PositivityReport { min_value: v, min_location: at.to_vec(), is_positive: false }.into_error());
    }
    Ok(v.max(T::zero()))
}

/// Screens a 1D distribution on the default log grid.
pub fn screen_radial<T: Real, D: RadialDistribution<T>>(f: &D, abs_tol: T) -> Result<()> {
    let grid = default_scan_grid::<T>();
    let samples: Result<Vec<_>> = grid.iter().map(|&x| Ok((vec![x], f.value(x)?))).collect();
    require_positive(PositivityReport::from_samples(samples?, abs_tol))
}

/// Screens a pair distribution on a coarse log product grid; every quadrature
/// node is checked again during integration.
pub fn screen_pair<T: Real, P: PairDistribution<T>>(f: &P, abs_tol: T) -> Result<()> {
    let grid = log_grid(PAIR_SCREEN_POINTS, lit(1e-3), lit(30.0));
    let mut samples = Vec::with_capacity(grid.len() * grid.len());
    for &a in &grid {
        for &b in &grid {
            samples.push((vec![a, b], f.value(a, b)?));
        }
    }
    require_positive(PositivityReport::from_samples(samples, abs_tol))
}

/// `S = -∫ f ln f dμ` for a unity-normalized 1D distribution.
pub fn shannon_radial<T: Real, D: RadialDistribution<T>>(f: &D, integrator: &Integrator<T>) -> Result<Estimate<T>> {
    let tol = integrator.spec().abs_tol;
    screen_radial(f, tol)?;
    let measure = f.measure();
    let e = integrator.radial(|x| Ok(-xlogx(checked(f.value(x)?, &[x], tol)?)), measure.weight_power())?;
    Ok(e.scale(measure.prefactor()))
}

/// `S = -(4π)² ∬ f ln f x₁²x₂² dx₁dx₂` for a unity-normalized pair distribution.
pub fn shannon_2d<T: Real, P: PairDistribution<T>>(f: &P, integrator: &Integrator<T>) -> Result<Estimate<T>> {
    let tol = integrator.spec().abs_tol;
    screen_pair(f, tol)?;
    integrator.radial_2d(|a, b| Ok(-xlogx(checked(f.value(a, b)?, &[a, b], tol)?)))
}

/// Kullback-Leibler distance `∬ f₂ ln[f₂ / (f(x₁) f(x₂))]` between a pair
/// distribution and the product of a 1D distribution with itself.
///
/// Regions where either 1D factor underflows contribute nothing.
pub fn information_distance<T: Real, P: PairDistribution<T>, D: RadialDistribution<T>>(
    pair: &P,
    single: &D,
    integrator: &Integrator<T>,
) -> Result<Estimate<T>> {
    let tol = integrator.spec().abs_tol;
    let tiny = underflow_threshold::<T>();
    screen_pair(pair, tol)?;
    screen_radial(single, tol)?;
    integrator.radial_2d(|a, b| {
        let f2 = checked(pair.value(a, b)?, &[a, b], tol)?;
        let fa = checked(single.value(a)?, &[a], tol)?;
        let fb = checked(single.value(b)?, &[b], tol)?;
        if f2 <= tiny || fa <= tiny || fb <= tiny {
            return Ok(T::zero());
        }
        Ok(f2 * (f2.ln() - fa.ln() - fb.ln()))
    })
}

/// `2S - S₂`: the mutual information when `S₂` is the entropy of a pair
/// distribution whose marginal has entropy `S`.
pub fn mutual_information<T: Real>(single: Estimate<T>, pair: Estimate<T>) -> Estimate<T> {
    let two = T::one() + T::one();
    Estimate::new(two * single.value - pair.value, two * single.error + pair.error)
}

/// Refuses a distribution whose sampled minimum is negative.
pub fn require_positive<T: Real>(report: PositivityReport<T>) -> Result<()> {
    if report.is_positive {
        Ok(())
    } else {
        Err(report.into_error())
    }
}
