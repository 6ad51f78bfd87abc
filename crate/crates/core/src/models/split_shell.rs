use super::orbital::{MomentumOrbital, OrbitalPair, SlaterOrbital};
use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

/// Exponent difference below which the model is treated as non-interacting.
pub const DEGENERATE_GAP: f64 = 1e-9;

/// One term `weight · (φ_x φ_y)(1) (φ_u φ_v)(2)` of the pair-density expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairTerm<T> {
    pub first: OrbitalPair<T>,
    pub second: OrbitalPair<T>,
    pub weight: T,
}

/// Two-electron singlet `Ψ = C_N (e^{-Z₁r₁} e^{-Z₂r₂} + e^{-Z₂r₁} e^{-Z₁r₂})`.
///
/// In terms of normalized 1s orbitals `a = φ_{Z₁}`, `b = φ_{Z₂}` with overlap
/// `S = ⟨a|b⟩`, the densities expand once into orbital products:
///
/// ```text
/// ρ(r)     = [a² + b² + 2S ab](r) / (1 + S²)
/// Γ(r₁,r₂) = [a²(1)b²(2) + b²(1)a²(2) + 2 ab(1) ab(2)] / (1 + S²)
/// ```
///
/// and the same expansion holds in momentum space with the Fourier partners,
/// since the momentum-space overlap equals `S`.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitShellModel<T> {
    z: T,
    z1: T,
    z2: T,
    overlap: T,
    c_n: T,
    degenerate: bool,
    density_terms: Vec<(OrbitalPair<T>, T)>,
    pair_terms: Vec<PairTerm<T>>,
}

impl<T: Real> SplitShellModel<T> {
    pub fn new(z: T, z1: T, z2: T) -> Result<Self> {
        for (name, v) in [("Z", z), ("Z1", z1), ("Z2", z2)] {
            if !(v > T::zero() && v.is_finite()) {
                return Err(Error::InvalidModelParameters(format!("{name} must be positive, got {v}")));
            }
        }
        let degenerate = (z1 - z2).abs() < lit(DEGENERATE_GAP);
        let two = lit::<T>(2.0);
        let (overlap, density_terms, pair_terms) = if degenerate {
            let zeta = (z1 + z2) / two;
            let pair = OrbitalPair::new(zeta, zeta);
            (T::one(), vec![(pair, two)], vec![PairTerm { first: pair, second: pair, weight: two }])
        } else {
            let aa = OrbitalPair::new(z1, z1);
            let bb = OrbitalPair::new(z2, z2);
            let ab = OrbitalPair::new(z1, z2);
            let s = ab.overlap();
            let denom = T::one() + s * s;
            (
                s,
                vec![(aa, T::one() / denom), (bb, T::one() / denom), (ab, two * s / denom)],
                vec![
                    PairTerm { first: aa, second: bb, weight: T::one() / denom },
                    PairTerm { first: bb, second: aa, weight: T::one() / denom },
                    PairTerm { first: ab, second: ab, weight: two / denom },
                ],
            )
        };
        let c_n = (z1 * z2).powf(lit(1.5)) / (T::PI() * (two * (T::one() + overlap * overlap)).sqrt());
        Ok(Self { z, z1, z2, overlap, c_n, degenerate, density_terms, pair_terms })
    }

    /// The hydrogenlike reference `Z₁ = Z₂ = Z`.
    pub fn non_interacting(z: T) -> Result<Self> {
        Self::new(z, z, z)
    }

    pub fn z(&self) -> T {
        self.z
    }
    pub fn z1(&self) -> T {
        self.z1
    }
    pub fn z2(&self) -> T {
        self.z2
    }
    pub fn overlap(&self) -> T {
        self.overlap
    }
    pub fn normalization(&self) -> T {
        self.c_n
    }
    pub fn is_non_interacting(&self) -> bool {
        self.degenerate
    }

    /// Orbital products and weights of the one-electron density (normalized to 2).
    pub fn density_terms(&self) -> &[(OrbitalPair<T>, T)] {
        &self.density_terms
    }

    /// Terms of the pair density (normalized to `N(N-1) = 2`).
    pub fn pair_terms(&self) -> &[PairTerm<T>] {
        &self.pair_terms
    }

    pub fn wavefunction(&self, r1: T, r2: T) -> T {
        self.c_n * ((-self.z1 * r1 - self.z2 * r2).exp() + (-self.z2 * r1 - self.z1 * r2).exp())
    }

    /// Momentum-space wavefunction built from [`MomentumOrbital`]s.
    pub fn momentum_wavefunction(&self, p1: T, p2: T) -> T {
        let a = MomentumOrbital::new(self.z1);
        let b = MomentumOrbital::new(self.z2);
        let s = self.overlap;
        let norm = T::one() / (lit::<T>(2.0) * (T::one() + s * s)).sqrt();
        norm * (a.value(p1) * b.value(p2) + b.value(p1) * a.value(p2))
    }

    pub fn charge_density(&self, r: T) -> T {
        self.density_terms.iter().map(|(pair, w)| *w * pair.position(r)).sum()
    }

    pub fn momentum_density(&self, p: T) -> T {
        self.density_terms.iter().map(|(pair, w)| *w * pair.momentum(p)).sum()
    }

    /// `Γ(r₁, r₂) = 2 |Ψ(r₁, r₂)|²`.
    pub fn pair_density_position(&self, r1: T, r2: T) -> T {
        let psi = self.wavefunction(r1, r2);
        lit::<T>(2.0) * psi * psi
    }

    /// `Π(p₁, p₂) = 2 |Φ(p₁, p₂)|²`.
    pub fn pair_density_momentum(&self, p1: T, p2: T) -> T {
        let phi = self.momentum_wavefunction(p1, p2);
        lit::<T>(2.0) * phi * phi
    }

    /// Position orbitals `(φ_{Z₁}, φ_{Z₂})`.
    pub fn orbitals(&self) -> (SlaterOrbital<T>, SlaterOrbital<T>) {
        (SlaterOrbital::new(self.z1), SlaterOrbital::new(self.z2))
    }
}
