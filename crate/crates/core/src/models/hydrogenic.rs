use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

/// One-electron atom with nuclear charge `Z` in its 1s ground state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HydrogenicAtom<T> {
    z: T,
}

impl<T: Real> HydrogenicAtom<T> {
    pub fn new(z: T) -> Result<Self> {
        if !(z > T::zero() && z.is_finite()) {
            return Err(Error::InvalidModelParameters(format!("nuclear charge must be positive, got {z}")));
        }
        Ok(Self { z })
    }

    pub fn z(&self) -> T {
        self.z
    }

    /// `(Z³/π) e^{-2Zr}`
    pub fn charge_density(&self, r: T) -> T {
        self.z.powi(3) / T::PI() * (lit::<T>(-2.0) * self.z * r).exp()
    }

    /// `8Z⁵ / (π² (Z² + p²)⁴)`
    pub fn momentum_density(&self, p: T) -> T {
        let d = self.z * self.z + p * p;
        lit::<T>(8.0) * self.z.powi(5) / (T::PI() * T::PI() * d.powi(4))
    }
}
