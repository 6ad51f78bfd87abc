//! Exactly evaluable systems and their densities.

mod hydrogenic;
mod orbital;
mod oscillator;
mod split_shell;

use serde::{Deserialize, Serialize};

use crate::scalar::{lit, Real};

pub use hydrogenic::HydrogenicAtom;
pub use orbital::{MomentumOrbital, OrbitalPair, SlaterOrbital};
pub use oscillator::HarmonicOscillator1D;
pub use split_shell::{PairTerm, SplitShellModel, DEGENERATE_GAP};

/// Integration measure of a radial distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Measure {
    /// `∫_{-∞}^{∞} f(|x|) dx = 2 ∫₀^∞ f dx`, for one-dimensional systems.
    Line,
    /// `∫ f d³x = 4π ∫₀^∞ f x² dx`, for spherically symmetric systems.
    Spherical,
}

impl Measure {
    pub fn weight_power(self) -> i32 {
        match self {
            Measure::Line => 0,
            Measure::Spherical => 2,
        }
    }

    pub fn prefactor<T: Real>(self) -> T {
        match self {
            Measure::Line => lit(2.0),
            Measure::Spherical => lit::<T>(4.0) * T::PI(),
        }
    }
}

/// Parameters echoed into reports.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ModelParams<T> {
    pub z: Option<T>,
    pub omega: Option<T>,
    pub z1: Option<T>,
    pub z2: Option<T>,
    pub c_n: Option<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum AtomicModel<T> {
    Hydrogenic(HydrogenicAtom<T>),
    Oscillator(HarmonicOscillator1D<T>),
    SplitShell(SplitShellModel<T>),
}

impl<T: Real> AtomicModel<T> {
    pub fn electron_count(&self) -> usize {
        match self {
            AtomicModel::Hydrogenic(_) | AtomicModel::Oscillator(_) => 1,
            AtomicModel::SplitShell(_) => 2,
        }
    }

    pub fn measure(&self) -> Measure {
        match self {
            AtomicModel::Oscillator(_) => Measure::Line,
            _ => Measure::Spherical,
        }
    }

    pub fn charge_density(&self, r: T) -> T {
        match self {
            AtomicModel::Hydrogenic(h) => h.charge_density(r),
            AtomicModel::Oscillator(o) => o.position_density(r),
            AtomicModel::SplitShell(s) => s.charge_density(r),
        }
    }

    pub fn momentum_density(&self, p: T) -> T {
        match self {
            AtomicModel::Hydrogenic(h) => h.momentum_density(p),
            AtomicModel::Oscillator(o) => o.momentum_density(p),
            AtomicModel::SplitShell(s) => s.momentum_density(p),
        }
    }

    pub fn split_shell(&self) -> Option<&SplitShellModel<T>> {
        match self {
            AtomicModel::SplitShell(s) => Some(s),
            _ => None,
        }
    }

    pub fn params(&self) -> ModelParams<T> {
        match self {
            AtomicModel::Hydrogenic(h) => ModelParams { z: Some(h.z()), ..Default::default() },
            AtomicModel::Oscillator(o) => ModelParams { omega: Some(o.omega()), ..Default::default() },
            AtomicModel::SplitShell(s) => ModelParams {
                z: Some(s.z()),
                z1: Some(s.z1()),
                z2: Some(s.z2()),
                c_n: Some(s.normalization()),
                omega: None,
            },
        }
    }

    /// Short label such as `hydrogenic(Z=2)` or `helium(Z=2, Z1=1.19, Z2=2.18)`.
    pub fn label(&self) -> String {
        match self {
            AtomicModel::Hydrogenic(h) => format!("hydrogenic(Z={})", h.z()),
            AtomicModel::Oscillator(o) => format!("oscillator(omega={})", o.omega()),
            AtomicModel::SplitShell(s) if s.is_non_interacting() => format!("helium-NI(Z={})", s.z()),
            AtomicModel::SplitShell(s) => format!("helium(Z={}, Z1={}, Z2={})", s.z(), s.z1(), s.z2()),
        }
    }
}

impl<T> From<HydrogenicAtom<T>> for AtomicModel<T> {
    fn from(m: HydrogenicAtom<T>) -> Self {
        AtomicModel::Hydrogenic(m)
    }
}

impl<T> From<HarmonicOscillator1D<T>> for AtomicModel<T> {
    fn from(m: HarmonicOscillator1D<T>) -> Self {
        AtomicModel::Oscillator(m)
    }
}

impl<T> From<SplitShellModel<T>> for AtomicModel<T> {
    fn from(m: SplitShellModel<T>) -> Self {
        AtomicModel::SplitShell(m)
    }
}

#[cfg(test)]
mod tests;
