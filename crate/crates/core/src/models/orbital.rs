use crate::scalar::{lit, Real};

/// Normalized 1s Slater orbital `√(ζ³/π) e^{-ζr}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlaterOrbital<T> {
    pub zeta: T,
}

impl<T: Real> SlaterOrbital<T> {
    pub fn new(zeta: T) -> Self {
        Self { zeta }
    }

    pub fn value(&self, r: T) -> T {
        (self.zeta.powi(3) / T::PI()).sqrt() * (-self.zeta * r).exp()
    }
}

/// Fourier partner of [`SlaterOrbital`]: `(2√2/π) ζ^{5/2} / (ζ² + p²)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumOrbital<T> {
    pub zeta: T,
}

impl<T: Real> MomentumOrbital<T> {
    pub fn new(zeta: T) -> Self {
        Self { zeta }
    }

    pub fn value(&self, p: T) -> T {
        let z = self.zeta;
        let d = z * z + p * p;
        lit::<T>(2.0) * T::SQRT_2() / T::PI() * z.powi(2) * z.sqrt() / (d * d)
    }
}

/// Product `φ_x φ_y` of two 1s orbitals, the building block of every density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitalPair<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> OrbitalPair<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    /// `φ_x(r) φ_y(r) = (xy)^{3/2}/π · e^{-(x+y)r}`.
    pub fn position(&self, r: T) -> T {
        (self.x * self.y).powf(lit(1.5)) / T::PI() * (-(self.x + self.y) * r).exp()
    }

    /// `φ̂_x(p) φ̂_y(p) = (8/π²) (xy)^{5/2} / ((x²+p²)² (y²+p²)²)`.
    pub fn momentum(&self, p: T) -> T {
        let p2 = p * p;
        let dx = self.x * self.x + p2;
        let dy = self.y * self.y + p2;
        lit::<T>(8.0) / (T::PI() * T::PI()) * (self.x * self.y).powf(lit(2.5)) / (dx * dx * dy * dy)
    }

    /// `⟨φ_x|φ_y⟩ = 8 (xy)^{3/2} / (x+y)³`.
    pub fn overlap(&self) -> T {
        lit::<T>(8.0) * (self.x * self.y).powf(lit(1.5)) / (self.x + self.y).powi(3)
    }
}
