use crate::error::{Error, Result};
use crate::scalar::Real;

/// Ground state of the one-dimensional harmonic oscillator (unit mass, ħ = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicOscillator1D<T> {
    omega: T,
}

impl<T: Real> HarmonicOscillator1D<T> {
    pub fn new(omega: T) -> Result<Self> {
        if !(omega > T::zero() && omega.is_finite()) {
            return Err(Error::InvalidModelParameters(format!("frequency must be positive, got {omega}")));
        }
        Ok(Self { omega })
    }

    pub fn omega(&self) -> T {
        self.omega
    }

    /// Gaussian of variance `1/(2ω)`.
    pub fn position_density(&self, x: T) -> T {
        (self.omega / T::PI()).sqrt() * (-self.omega * x * x).exp()
    }

    /// Gaussian of variance `ω/2`.
    pub fn momentum_density(&self, p: T) -> T {
        (T::one() / (T::PI() * self.omega)).sqrt() * (-p * p / self.omega).exp()
    }
}
