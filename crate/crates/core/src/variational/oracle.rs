//! Quadrature evaluation of the energy, independent of the closed-form integrals.

use crate::error::Result;
use crate::models::SlaterOrbital;
use crate::quadrature::{Integrator, QuadratureSpec};
use crate::scalar::{lit, Real};

/// Energy from radial quadrature of every Hamiltonian term, with `1/r₁₂`
/// replaced by its spherical average `1/max(r₁, r₂)`.
pub fn quadrature_energy<T: Real>(a: T, b: T, z: T, spec: &QuadratureSpec<T>) -> Result<T> {
    let i = Integrator::new(*spec)?;
    let four_pi = lit::<T>(4.0) * T::PI();
    let half = lit::<T>(0.5);
    let prod = |x: T, y: T, r: T| SlaterOrbital::new(x).value(r) * SlaterOrbital::new(y).value(r);
    let moment = |x: T, y: T, w: i32| -> Result<T> { Ok(four_pi * i.radial(|r| Ok(prod(x, y, r)), w)?.value) };
    // ⟨x|-½∇²|y⟩ = ½∫∇φ_x·∇φ_y = ½xy⟨x|y⟩ for 1s orbitals
    let h = |x: T, y: T| -> Result<T> { Ok(half * x * y * moment(x, y, 2)? - z * moment(x, y, 1)?) };
    let repulsion = |f: &dyn Fn(T) -> T, g: &dyn Fn(T) -> T| -> Result<T> {
        let outer = i.radial(
            |r1| {
                if r1 == T::zero() {
                    return Ok(T::zero());
                }
                let below = i.interval(|r2| Ok(g(r2) * r2 * r2), T::zero(), r1)?.value / r1;
                let above = i.radial(|t| Ok(g(r1 + t) * (r1 + t)), 0)?.value;
                Ok(f(r1) * (below + above))
            },
            2,
        )?;
        Ok(four_pi * four_pi * outer.value)
    };
    let s = moment(a, b, 2)?;
    let j = repulsion(&|r| prod(a, a, r), &|r| prod(b, b, r))?;
    let k = repulsion(&|r| prod(a, b, r), &|r| prod(a, b, r))?;
    let two = lit::<T>(2.0);
    Ok((h(a, a)? + h(b, b)? + two * s * h(a, b)? + j + k) / (T::one() + s * s))
}
