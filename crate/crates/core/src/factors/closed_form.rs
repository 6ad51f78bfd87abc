//! Closed-form Fourier transforms of 1s orbital products.
//!
//! `form_pair` is `4π∫ φ_x φ_y j₀(kr) r² dr` and `reciprocal_pair` is
//! `4π∫ φ̂_x φ̂_y j₀(sp) p² dp`, i.e. the two-centre overlap of `φ_x` and `φ_y`
//! at separation `s`. Every structure factor in the crate is a weighted sum of
//! these, or of products of them.

use std::sync::OnceLock;

use crate::models::{OrbitalPair, DEGENERATE_GAP};
use crate::quadrature::GaussLegendre;
use crate::scalar::{lit, Real};

/// Relative exponent gap below which the partial-fraction form loses digits
/// to cancellation and the Feynman-parameter form is used instead.
const NEAR_DEGENERATE: f64 = 1e-2;
const FEYNMAN_NODES: usize = 24;

/// `8 (xy)^{3/2} (x+y) / ((x+y)² + k²)²`
pub fn form_pair<T: Real>(pair: OrbitalPair<T>, k: T) -> T {
    let OrbitalPair { x, y } = pair;
    let a = x + y;
    let d = a * a + k * k;
    lit::<T>(8.0) * (x * y).powf(lit(1.5)) * a / (d * d)
}

/// Two-centre overlap of 1s orbitals with exponents `x`, `y` at distance `s`.
pub fn reciprocal_pair<T: Real>(pair: OrbitalPair<T>, s: T) -> T {
    let (x, y) = if pair.x <= pair.y { (pair.x, pair.y) } else { (pair.y, pair.x) };
    let gap = y - x;
    if gap < lit(DEGENERATE_GAP) {
        let z = (x + y) / lit(2.0);
        let zs = z * s;
        return (-zs).exp() * (T::one() + zs + zs * zs / lit(3.0));
    }
    if gap < lit::<T>(NEAR_DEGENERATE) * (x + y) {
        return reciprocal_pair_feynman(x, y, s);
    }
    let d = y * y - x * x;
    // (e^{-xs} - e^{-ys}) / s, stable as s → 0
    let diff_quotient = if s == T::zero() { gap } else { -(-x * s).exp() * (-gap * s).exp_m1() / s };
    let bracket = (-x * s).exp() / x + (-y * s).exp() / y - lit::<T>(4.0) * diff_quotient / d;
    lit::<T>(8.0) * (x * y).powf(lit(2.5)) / (d * d) * bracket
}

/// `2 (xy)^{5/2} ∫₀¹ u(1-u) e^{-cs}(c²s² + 3cs + 3)/c⁵ du` with `c² = u x² + (1-u) y²`.
fn reciprocal_pair_feynman<T: Real>(x: T, y: T, s: T) -> T {
    static RULE: OnceLock<GaussLegendre<f64>> = OnceLock::new();
    let rule = RULE.get_or_init(|| GaussLegendre::new(FEYNMAN_NODES));
    let half = lit::<T>(0.5);
    let mut acc = T::zero();
    for (&t, &w) in rule.nodes().iter().zip(rule.weights()) {
        let u = half * (T::one() + lit(t));
        let c = (u * x * x + (T::one() - u) * y * y).sqrt();
        let cs = c * s;
        acc = acc + lit::<T>(w) * u * (T::one() - u) * (-cs).exp() * (cs * cs + lit::<T>(3.0) * cs + lit(3.0)) / c.powi(5);
    }
    lit::<T>(2.0) * (x * y).powf(lit(2.5)) * acc * half
}

/// `∫ form_pair d³k = (2π)³ φ_x(0) φ_y(0) = 8π² (xy)^{3/2}`
pub fn form_pair_norm<T: Real>(pair: OrbitalPair<T>) -> T {
    lit::<T>(8.0) * T::PI() * T::PI() * (pair.x * pair.y).powf(lit(1.5))
}

/// `∫ reciprocal_pair d³s = (2π)³ φ̂_x(0) φ̂_y(0) = 64π (xy)^{-3/2}`
pub fn reciprocal_pair_norm<T: Real>(pair: OrbitalPair<T>) -> T {
    lit::<T>(64.0) * T::PI() / (pair.x * pair.y).powf(lit(1.5))
}

/// Hydrogenic `F(k) = 16Z⁴ / (4Z² + k²)²`.
pub fn hydrogenic_form<T: Real>(z: T, k: T) -> T {
    form_pair(OrbitalPair::new(z, z), k)
}

/// Hydrogenic `B(s) = e^{-Zs} (1 + Zs + Z²s²/3)`.
pub fn hydrogenic_reciprocal<T: Real>(z: T, s: T) -> T {
    reciprocal_pair(OrbitalPair::new(z, z), s)
}

/// Oscillator `F(k) = e^{-k²/(4ω)}`.
pub fn oscillator_form<T: Real>(omega: T, k: T) -> T {
    (-k * k / (lit::<T>(4.0) * omega)).exp()
}

/// Oscillator `B(s) = e^{-s²ω/4}`.
pub fn oscillator_reciprocal<T: Real>(omega: T, s: T) -> T {
    (-s * s * omega / lit(4.0)).exp()
}
