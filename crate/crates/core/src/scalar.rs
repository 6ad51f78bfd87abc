//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point type the numerics are generic over: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + LowerExp
    + Default
    + Sum
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an `f64` literal into `T`.
#[inline]
pub fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in target float type")
}

#[inline]
pub fn from_usize<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("count representable in target float type")
}

/// Values at or below this are treated as exact zeros in `f ln f`.
#[inline]
pub fn underflow_threshold<T: Real>() -> T {
    lit::<T>(1e-300).max(T::min_positive_value())
}

/// `f ln f` with the continuous extension `0 ln 0 = 0`.
#[inline]
pub fn xlogx<T: Real>(f: T) -> T {
    if f <= underflow_threshold() {
        T::zero()
    } else {
        f * f.ln()
    }
}

/// Zero-order spherical Bessel function `sin(t)/t`.
#[inline]
pub fn sinc<T: Real>(t: T) -> T {
    if t.abs() < lit(1e-4) {
        let t2 = t * t;
        T::one() - t2 / lit(6.0) + t2 * t2 / lit(120.0)
    } else {
        t.sin() / t
    }
}

/// Neumaier-compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum<T> {
    sum: T,
    compensation: T,
}

impl<T: Real> CompensatedSum<T> {
    pub fn new() -> Self {
        Self { sum: T::zero(), compensation: T::zero() }
    }

    pub fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation = self.compensation + ((self.sum - t) + x);
        } else {
            self.compensation = self.compensation + ((x - t) + self.sum);
        }
        self.sum = t;
    }

    pub fn value(&self) -> T {
        self.sum + self.compensation
    }
}

impl<T: Real> FromIterator<T> for CompensatedSum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut acc = Self::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sinc_is_continuous_across_series_switch() {
        for &t in &[0.0_f64, 1e-6, 9.999e-5, 1.0001e-4, 0.5, 3.0] {
            let exact = if t == 0.0 { 1.0 } else { t.sin() / t };
            assert!((sinc(t) - exact).abs() < 1e-15, "t = {t}");
        }
        assert!((sinc(1e-5_f32) - 1.0).abs() < 1e-7);
    }

    #[test]
    fn xlogx_limit() {
        assert_eq!(xlogx(0.0_f64), 0.0);
        assert_eq!(xlogx(1e-320_f64), 0.0);
        assert!((xlogx(0.5_f64) - 0.5 * 0.5_f64.ln()).abs() < 1e-16);
        assert_eq!(xlogx(0.0_f32), 0.0);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let terms = [1.0_f64, 1e100, 1.0, -1e100];
        let acc: CompensatedSum<f64> = terms.iter().copied().collect();
        assert_eq!(acc.value(), 2.0);
    }
}
