//! Exact entropies of hydrogenic and oscillator structure factors.

use serde::{Deserialize, Serialize};

use crate::scalar::{lit, Real};

/// Additive constant in the hydrogenic `S_B`, from a 30-digit quadrature of the
/// unity-normalized `B(s)` at `Z = 1`. The test suite recomputes it.
pub const HYDROGENIC_B_CONSTANT: f64 = 0.036765412386998747;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosedFormKind {
    HydrogenicF,
    HydrogenicB,
    OscillatorF,
    OscillatorB,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormEntropy<T> {
    pub kind: ClosedFormKind,
    /// `Z` for hydrogenic kinds, `ω` for oscillator kinds.
    pub parameter: T,
    pub value: T,
}

impl<T: Real> ClosedFormEntropy<T> {
    /// Panics if `parameter` is not positive.
    pub fn new(kind: ClosedFormKind, parameter: T) -> Self {
        assert!(parameter > T::zero(), "closed-form entropy needs a positive parameter");
        let one = T::one();
        let ln_pi = T::PI().ln();
        let ln2 = T::LN_2();
        let half = lit::<T>(0.5);
        let ln_p = parameter.ln();
        let value = match kind {
            ClosedFormKind::HydrogenicF => lit::<T>(2.0) * (one + ln_pi) + lit::<T>(7.0) * ln2 + lit::<T>(3.0) * ln_p,
            ClosedFormKind::HydrogenicB => {
                lit::<T>(2.0) + ln_pi + lit::<T>(6.0) * ln2 + lit(HYDROGENIC_B_CONSTANT) - lit::<T>(3.0) * ln_p
            }
            ClosedFormKind::OscillatorF => half * (one + ln_pi) + ln2 + half * ln_p,
            ClosedFormKind::OscillatorB => half * (one + ln_pi) + ln2 - half * ln_p,
        };
        Self { kind, parameter, value }
    }
}

pub fn closed_form_entropy<T: Real>(kind: ClosedFormKind, parameter: T) -> T {
    ClosedFormEntropy::new(kind, parameter).value
}

/// `S_F + S_B` for any hydrogenic atom.
pub fn hydrogenic_sum<T: Real>() -> T {
    closed_form_entropy(ClosedFormKind::HydrogenicF, T::one()) + closed_form_entropy(ClosedFormKind::HydrogenicB, T::one())
}

/// `S_F + S_B = (1 + ln π) + 2 ln 2` for any oscillator frequency.
pub fn oscillator_sum<T: Real>() -> T {
    T::one() + T::PI().ln() + lit::<T>(2.0) * T::LN_2()
}

/// `3(1 + ln π)` per electron: the position-momentum entropic uncertainty bound.
pub fn uncertainty_bound<T: Real>(electrons: usize) -> T {
    lit::<T>(3.0 * electrons as f64) * (T::one() + T::PI().ln())
}
