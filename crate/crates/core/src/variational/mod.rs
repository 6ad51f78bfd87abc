//! Variational exponents of the two-electron split-shell wavefunction.
//!
//! The energy of `Ψ = a(1)b(2) + b(1)a(2)` over the He-like Hamiltonian
//! `-½∇₁² - ½∇₂² - Z/r₁ - Z/r₂ + 1/r₁₂` reduces to one-electron Slater
//! integrals plus a Coulomb and an exchange repulsion integral, all closed form.

mod cache;
pub mod oracle;
mod optimize;

pub use cache::ParameterCache;
pub use optimize::{optimize, optimize_series, OptimizationResult, OptimizerOptions};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::OrbitalPair;
use crate::scalar::{lit, Real};

/// Expectation values in hartree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyBreakdown<T> {
    pub kinetic: T,
    pub nuclear_attraction: T,
    pub electron_repulsion: T,
    pub total: T,
}

impl<T: Real> EnergyBreakdown<T> {
    /// `|E + T| / |E|`; zero at a fully scale-optimized point.
    pub fn virial_defect(&self) -> T {
        (self.total + self.kinetic).abs() / self.total.abs()
    }
}

/// `⟨1/r⟩` between 1s orbitals `a` and `b`: `4(ab)^{3/2}/(a+b)²`.
pub fn nuclear_overlap<T: Real>(a: T, b: T) -> T {
    lit::<T>(4.0) * (a * b).powf(lit(1.5)) / ((a + b) * (a + b))
}

/// Coulomb integral `(aa|bb) = ab(a² + 3ab + b²)/(a+b)³`.
pub fn coulomb<T: Real>(a: T, b: T) -> T {
    a * b * (a * a + lit::<T>(3.0) * a * b + b * b) / (a + b).powi(3)
}

/// Exchange integral `(ab|ab) = S² · 5(a+b)/16`.
pub fn exchange<T: Real>(a: T, b: T) -> T {
    let s = OrbitalPair::new(a, b).overlap();
    s * s * lit::<T>(5.0) * (a + b) / lit(16.0)
}

pub fn energy<T: Real>(z1: T, z2: T, z: T) -> Result<EnergyBreakdown<T>> {
    for (name, v) in [("Z1", z1), ("Z2", z2), ("Z", z)] {
        if !(v > T::zero() && v.is_finite()) {
            return Err(Error::InvalidModelParameters(format!("{name} must be positive, got {v}")));
        }
    }
    // canonical order makes the exchange symmetry bit-exact
    let (a, b) = if z1 <= z2 { (z1, z2) } else { (z2, z1) };
    let s = OrbitalPair::new(a, b).overlap();
    let norm = T::one() + s * s;
    let half = lit::<T>(0.5);
    let two = lit::<T>(2.0);
    let kinetic = (half * (a * a + b * b) + a * b * s * s) / norm;
    let nuclear_attraction = -z * (a + b + two * s * nuclear_overlap(a, b)) / norm;
    let electron_repulsion = (coulomb(a, b) + exchange(a, b)) / norm;
    Ok(EnergyBreakdown {
        kinetic,
        nuclear_attraction,
        electron_repulsion,
        total: kinetic + nuclear_attraction + electron_repulsion,
    })
}

/// Single-zeta optimum `ζ = Z - 5/16`, `E = -ζ²`.
pub fn single_zeta_optimum<T: Real>(z: T) -> (T, T) {
    let zeta = z - lit(5.0 / 16.0);
    (zeta, -zeta * zeta)
}

#[cfg(test)]
mod tests;
