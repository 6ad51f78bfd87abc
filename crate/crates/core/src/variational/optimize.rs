use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::energy;
use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizerOptions {
    pub max_iterations: usize,
    /// Simplex diameter in log-exponent coordinates at which the simplex phase stops.
    pub simplex_tol: f64,
    /// Gradient norm (hartree per unit exponent) required for `converged`.
    pub grad_tol: f64,
    /// Central-difference step for the gradient check.
    pub fd_step: f64,
}

impl Default for OptimizerOptions {
    fn default() -> Self {
        Self { max_iterations: 2000, simplex_tol: 1e-11, grad_tol: 1e-6, fd_step: 1e-5 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizationResult<T> {
    pub z: T,
    /// Smaller exponent; the wavefunction is symmetric under `Z₁ ↔ Z₂`.
    pub z1: T,
    pub z2: T,
    pub energy: T,
    pub iterations: usize,
    pub converged: bool,
    pub gradient_norm: T,
    /// Best energy after each iteration; never increases.
    pub trace: Vec<T>,
}

impl<T: Real> OptimizationResult<T> {
    pub fn require_converged(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NotConverged { iterations: self.iterations })
        }
    }
}

fn e_log<T: Real>(u: [T; 2], z: T) -> T {
    energy(u[0].exp(), u[1].exp(), z).map(|e| e.total).unwrap_or(T::infinity())
}

fn e_lin<T: Real>(x: [T; 2], z: T) -> T {
    energy(x[0], x[1], z).map(|e| e.total).unwrap_or(T::infinity())
}

/// Central-difference gradient in the exponents.
pub(crate) fn gradient<T: Real>(x: [T; 2], z: T, h: T) -> [T; 2] {
    let two = lit::<T>(2.0);
    let d0 = (e_lin([x[0] + h, x[1]], z) - e_lin([x[0] - h, x[1]], z)) / (two * h);
    let d1 = (e_lin([x[0], x[1] + h], z) - e_lin([x[0], x[1] - h], z)) / (two * h);
    [d0, d1]
}

fn norm<T: Real>(g: [T; 2]) -> T {
    (g[0] * g[0] + g[1] * g[1]).sqrt()
}

/// Simplex descent on `(ln Z₁, ln Z₂)` followed by a safeguarded Newton polish.
///
/// Starts from `initial_guess` or the single-zeta optimum `(Z-5/16, Z-5/16)`.
pub fn optimize<T: Real>(z: T, initial_guess: Option<(T, T)>, opts: &OptimizerOptions) -> Result<OptimizationResult<T>> {
    if !(z >= T::one() && z.is_finite()) {
        return Err(Error::InvalidModelParameters(format!("optimization needs Z >= 1, got {z}")));
    }
    let (g1, g2) = initial_guess.unwrap_or_else(|| {
        let zeta = z - lit(5.0 / 16.0);
        (zeta, zeta)
    });
    energy(g1, g2, z)?;
    let start = [g1.ln(), g2.ln()];
    let step = lit::<T>(0.1);
    let mut simplex = [start, [start[0] + step, start[1]], [start[0], start[1] + step]];
    let mut values = simplex.map(|u| e_log(u, z));
    let mut trace = Vec::new();
    let mut iterations = 0;
    let half = lit::<T>(0.5);
    let two = lit::<T>(2.0);

    while iterations < opts.max_iterations {
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).unwrap_or(std::cmp::Ordering::Equal));
        simplex = order.map(|i| simplex[i]);
        values = order.map(|i| values[i]);
        trace.push(values[0]);
        let diameter = (1..3)
            .map(|i| ((simplex[i][0] - simplex[0][0]).powi(2) + (simplex[i][1] - simplex[0][1]).powi(2)).sqrt())
            .fold(T::zero(), T::max);
        if diameter < lit(opts.simplex_tol) {
            break;
        }
        iterations += 1;
        let centroid = [half * (simplex[0][0] + simplex[1][0]), half * (simplex[0][1] + simplex[1][1])];
        let along = |t: T| -> [T; 2] {
            [centroid[0] + t * (simplex[2][0] - centroid[0]), centroid[1] + t * (simplex[2][1] - centroid[1])]
        };
        let reflected = along(-T::one());
        let fr = e_log(reflected, z);
        if fr < values[0] {
            let expanded = along(-two);
            let fe = e_log(expanded, z);
            (simplex[2], values[2]) = if fe < fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr < values[1] {
            (simplex[2], values[2]) = (reflected, fr);
        } else {
            let contracted = if fr < values[2] { along(-half) } else { along(half) };
            let fc = e_log(contracted, z);
            if fc < values[2].min(fr) {
                (simplex[2], values[2]) = (contracted, fc);
            } else {
                for i in 1..3 {
                    simplex[i] = [
                        simplex[0][0] + half * (simplex[i][0] - simplex[0][0]),
                        simplex[0][1] + half * (simplex[i][1] - simplex[0][1]),
                    ];
                    values[i] = e_log(simplex[i], z);
                }
            }
        }
    }

    let best = simplex
        .iter()
        .zip(values)
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal))
        .map(|(u, _)| *u)
        .unwrap();
    let mut x = [best[0].exp(), best[1].exp()];
    let mut e = e_lin(x, z);
    let h = lit::<T>(opts.fd_step);
    let grad_tol = lit::<T>(opts.grad_tol);

    for _ in 0..50 {
        if iterations >= opts.max_iterations || norm(gradient(x, z, h)) < grad_tol * lit(1e-2) {
            break;
        }
        let Some(dx) = newton_step(x, z) else { break };
        let mut t = T::one();
        let mut accepted = false;
        for _ in 0..30 {
            let trial = [x[0] - t * dx[0], x[1] - t * dx[1]];
            let et = e_lin(trial, z);
            if et <= e {
                (x, e) = (trial, et);
                accepted = true;
                break;
            }
            t = t * half;
        }
        iterations += 1;
        trace.push(e);
        if !accepted {
            break;
        }
    }

    let gradient_norm = norm(gradient(x, z, h));
    let (z1, z2) = if x[0] <= x[1] { (x[0], x[1]) } else { (x[1], x[0]) };
    Ok(OptimizationResult {
        z,
        z1,
        z2,
        energy: e,
        iterations,
        converged: gradient_norm < grad_tol,
        gradient_norm,
        trace,
    })
}

/// Newton direction from a finite-difference Hessian.
fn newton_step<T: Real>(x: [T; 2], z: T) -> Option<[T; 2]> {
    let h = lit::<T>(1e-4);
    let f = |a: T, b: T| e_lin([a, b], z);
    let f0 = f(x[0], x[1]);
    let four = lit::<T>(4.0);
    let h00 = (f(x[0] + h, x[1]) - lit::<T>(2.0) * f0 + f(x[0] - h, x[1])) / (h * h);
    let h11 = (f(x[0], x[1] + h) - lit::<T>(2.0) * f0 + f(x[0], x[1] - h)) / (h * h);
    let h01 = (f(x[0] + h, x[1] + h) - f(x[0] + h, x[1] - h) - f(x[0] - h, x[1] + h) + f(x[0] - h, x[1] - h))
        / (four * h * h);
    let g = gradient(x, z, lit(1e-6));
    let det = h00 * h11 - h01 * h01;
    if !(det > T::zero() && h00 > T::zero()) {
        return None;
    }
    Some([(h11 * g[0] - h01 * g[1]) / det, (h00 * g[1] - h01 * g[0]) / det])
}

/// Optimizes every `Z` independently; results keep the input order.
pub fn optimize_series<T: Real>(zs: &[T], opts: &OptimizerOptions) -> Result<Vec<OptimizationResult<T>>> {
    zs.par_iter().map(|&z| optimize(z, None, opts)).collect()
}
