//! Unity-normalized distributions consumed by the entropy functionals.

use crate::error::Result;
use crate::models::{AtomicModel, Measure, SplitShellModel};
use crate::scalar::{from_usize, Real};

/// Non-negative function of one radial variable, normalized to one under its measure.
pub trait RadialDistribution<T: Real>: Sync {
    fn measure(&self) -> Measure;
    fn value(&self, x: T) -> Result<T>;
}

/// Non-negative function of two radial variables, normalized to one under `(4π)² x₁²x₂² dx₁dx₂`.
pub trait PairDistribution<T: Real>: Sync {
    fn value(&self, x1: T, x2: T) -> Result<T>;

    /// `true` if the distribution is exactly a product of two identical 1D factors.
    fn is_separable(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Position,
    Momentum,
}

/// `ρ/N` or `π/N`.
#[derive(Debug, Clone)]
pub struct UnitDensity<T> {
    model: AtomicModel<T>,
    space: Space,
    n: T,
}

impl<T: Real> UnitDensity<T> {
    pub fn new(model: AtomicModel<T>, space: Space) -> Self {
        let n = from_usize(model.electron_count());
        Self { model, space, n }
    }
}

impl<T: Real> RadialDistribution<T> for UnitDensity<T> {
    fn measure(&self) -> Measure {
        self.model.measure()
    }

    fn value(&self, x: T) -> Result<T> {
        Ok(match self.space {
            Space::Position => self.model.charge_density(x),
            Space::Momentum => self.model.momentum_density(x),
        } / self.n)
    }
}

/// `Γ/(N(N-1))` or `Π/(N(N-1))` for the two-electron model.
#[derive(Debug, Clone)]
pub struct UnitPairDensity<T> {
    model: SplitShellModel<T>,
    space: Space,
}

impl<T: Real> UnitPairDensity<T> {
    pub fn new(model: SplitShellModel<T>, space: Space) -> Self {
        Self { model, space }
    }
}

impl<T: Real> PairDistribution<T> for UnitPairDensity<T> {
    fn value(&self, x1: T, x2: T) -> Result<T> {
        let two = T::one() + T::one();
        Ok(match self.space {
            Space::Position => self.model.pair_density_position(x1, x2),
            Space::Momentum => self.model.pair_density_momentum(x1, x2),
        } / two)
    }

    fn is_separable(&self) -> bool {
        self.model.is_non_interacting()
    }
}

/// Adapts a closure into a [`RadialDistribution`].
pub struct FnRadial<F> {
    pub measure: Measure,
    pub f: F,
}

impl<T: Real, F: Fn(T) -> T + Sync> RadialDistribution<T> for FnRadial<F> {
    fn measure(&self) -> Measure {
        self.measure
    }
    fn value(&self, x: T) -> Result<T> {
        Ok((self.f)(x))
    }
}

/// Adapts a closure into a [`PairDistribution`].
pub struct FnPair<F>(pub F);

impl<T: Real, F: Fn(T, T) -> T + Sync> PairDistribution<T> for FnPair<F> {
    fn value(&self, x1: T, x2: T) -> Result<T> {
        Ok((self.0)(x1, x2))
    }
}
