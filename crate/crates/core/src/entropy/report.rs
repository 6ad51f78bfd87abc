use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{information_distance, mutual_information, shannon_2d, shannon_radial, uncertainty_bound};
use crate::distribution::{Space, UnitDensity, UnitPairDensity};
use crate::error::Result;
use crate::factors::{FactorKind, Path, StructureFactor1D, StructureFactor2D};
use crate::models::{AtomicModel, HydrogenicAtom, ModelParams, SplitShellModel};
use crate::quadrature::{Estimate, Integrator, QuadratureSpec};
use crate::scalar::{lit, Real};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyOptions<T> {
    pub spec: QuadratureSpec<T>,
    /// Path for the one-electron factors. Two-electron factors always use the
    /// analytic path; the numeric one is certified pointwise instead.
    pub path: Path,
    /// Use exact additivity for separable (non-interacting) models instead of
    /// integrating the product distributions.
    pub separable_shortcut: bool,
}

impl<T: Real> Default for EntropyOptions<T> {
    fn default() -> Self {
        Self { spec: QuadratureSpec::default(), path: Path::Analytic, separable_shortcut: true }
    }
}

impl<T: Real> EntropyOptions<T> {
    /// Pair integrals relax the absolute tolerance to `1e-10`.
    pub fn pair_spec(&self) -> QuadratureSpec<T> {
        let abs = self.spec.abs_tol.max(lit(1e-10));
        self.spec.with_abs_tol(abs)
    }
}

/// All entropic quantities of one model, in nats. Two-electron quantities are
/// `None` for one-electron systems.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyReport<T> {
    pub label: String,
    pub params: ModelParams<T>,
    pub s_f: Estimate<T>,
    pub s_b: Estimate<T>,
    pub s_rho: Estimate<T>,
    pub s_pi: Estimate<T>,
    pub s_f2: Option<Estimate<T>>,
    pub s_b2: Option<Estimate<T>>,
    pub s_gamma: Option<Estimate<T>>,
    pub s_pi2: Option<Estimate<T>>,
    /// Kullback-Leibler distance of `F(k₁,k₂)` from `F(k₁)F(k₂)`.
    pub i_f: Option<Estimate<T>>,
    pub i_b: Option<Estimate<T>>,
    pub i_r: Option<Estimate<T>>,
    pub i_p: Option<Estimate<T>>,
    /// `2S_F - S_F2`, which differs from `i_f` because `F(k)` is not the marginal of `F(k₁,k₂)`.
    pub gap_f: Option<Estimate<T>>,
    pub gap_b: Option<Estimate<T>>,
    /// Hydrogenlike reference entropies `S_F^H`, `S_B^H` at the same `Z`.
    pub s_f_h: Option<Estimate<T>>,
    pub s_b_h: Option<Estimate<T>>,
    pub delta_s_f: Option<Estimate<T>>,
    pub delta_s_b: Option<Estimate<T>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Quantity {
    SF,
    SB,
    SRho,
    SPi,
    SFH,
    SBH,
    SF2,
    SB2,
    SGamma,
    SPi2,
    IF,
    IB,
}

impl<T: Real> EntropyReport<T> {
    pub fn compute(model: &AtomicModel<T>, opts: &EntropyOptions<T>) -> Result<Self> {
        use Quantity::*;
        let shortcut = opts.separable_shortcut && model.split_shell().is_some_and(|s| s.is_non_interacting());
        let wanted: Vec<Quantity> = match model.split_shell() {
            None => vec![SF, SB, SRho, SPi],
            Some(_) if shortcut => vec![SF, SB, SRho, SPi],
            Some(_) => vec![SF, SB, SRho, SPi, SFH, SBH, SF2, SB2, SGamma, SPi2, IF, IB],
        };
        let values: Vec<Estimate<T>> =
            wanted.par_iter().map(|&q| evaluate(q, model, opts)).collect::<Result<_>>()?;
        let get = |q: Quantity| wanted.iter().position(|&w| w == q).map(|i| values[i]);
        let (s_f, s_b, s_rho, s_pi) = (get(SF).unwrap(), get(SB).unwrap(), get(SRho).unwrap(), get(SPi).unwrap());

        let mut report = Self {
            label: model.label(),
            params: model.params(),
            s_f,
            s_b,
            s_rho,
            s_pi,
            s_f2: None,
            s_b2: None,
            s_gamma: None,
            s_pi2: None,
            i_f: None,
            i_b: None,
            i_r: None,
            i_p: None,
            gap_f: None,
            gap_b: None,
            s_f_h: None,
            s_b_h: None,
            delta_s_f: None,
            delta_s_b: None,
        };
        if model.split_shell().is_none() {
            return Ok(report);
        }
        let two = lit::<T>(2.0);
        let zero = Estimate::exact(T::zero());
        if shortcut {
            report.s_f2 = Some(s_f.scale(two));
            report.s_b2 = Some(s_b.scale(two));
            report.s_gamma = Some(s_rho.scale(two));
            report.s_pi2 = Some(s_pi.scale(two));
            report.i_f = Some(zero);
            report.i_b = Some(zero);
            report.s_f_h = Some(s_f);
            report.s_b_h = Some(s_b);
        } else {
            report.s_f2 = get(SF2);
            report.s_b2 = get(SB2);
            report.s_gamma = get(SGamma);
            report.s_pi2 = get(SPi2);
            report.i_f = get(IF);
            report.i_b = get(IB);
            report.s_f_h = get(SFH);
            report.s_b_h = get(SBH);
        }
        let (s_f2, s_b2) = (report.s_f2.unwrap(), report.s_b2.unwrap());
        report.i_r = Some(if shortcut { zero } else { mutual_information(s_rho, report.s_gamma.unwrap()) });
        report.i_p = Some(if shortcut { zero } else { mutual_information(s_pi, report.s_pi2.unwrap()) });
        report.gap_f = Some(if shortcut { zero } else { mutual_information(s_f, s_f2) });
        report.gap_b = Some(if shortcut { zero } else { mutual_information(s_b, s_b2) });
        report.delta_s_f = Some(if shortcut { zero } else { s_f - report.s_f_h.unwrap() });
        report.delta_s_b = Some(if shortcut { zero } else { s_b - report.s_b_h.unwrap() });
        Ok(report)
    }

    pub fn sum_fb(&self) -> Estimate<T> {
        self.s_f + self.s_b
    }

    /// `S_F2 - 2S_F^H`.
    pub fn pair_excess_f(&self) -> Option<Estimate<T>> {
        Some(self.s_f2? - self.s_f_h?.scale(lit(2.0)))
    }

    /// `S_B2 - 2S_B^H`.
    pub fn pair_excess_b(&self) -> Option<Estimate<T>> {
        Some(self.s_b2? - self.s_b_h?.scale(lit(2.0)))
    }

    /// Largest error estimate over all reported quantities.
    pub fn max_error(&self) -> T {
        let opts = [
            self.s_f2, self.s_b2, self.s_gamma, self.s_pi2, self.i_f, self.i_b, self.i_r, self.i_p, self.gap_f,
            self.gap_b, self.delta_s_f, self.delta_s_b,
        ];
        [self.s_f, self.s_b, self.s_rho, self.s_pi]
            .into_iter()
            .chain(opts.into_iter().flatten())
            .map(|e| e.error)
            .fold(T::zero(), T::max)
    }

    /// Names of violated inequalities: non-negative distances and mutual
    /// informations, and the entropic uncertainty bounds.
    pub fn violated_invariants(&self) -> Vec<String> {
        let mut out = Vec::new();
        let slack = |e: &Estimate<T>| e.error + lit(1e-6);
        for (name, e) in [("I_F", self.i_f), ("I_B", self.i_b), ("I_r", self.i_r), ("I_p", self.i_p)] {
            if let Some(e) = e {
                if e.value < -slack(&e) {
                    out.push(format!("{name} = {} < 0", e.value));
                }
            }
        }
        // the bound is for the three-dimensional measure only
        if self.params.omega.is_none() {
            let sum = self.s_rho + self.s_pi;
            if sum.value + slack(&sum) < uncertainty_bound(1) {
                out.push(format!("S_rho + S_pi = {} below bound", sum.value));
            }
            if let (Some(g), Some(p)) = (self.s_gamma, self.s_pi2) {
                let sum = g + p;
                if sum.value + slack(&sum) < uncertainty_bound(2) {
                    out.push(format!("S_Gamma + S_Pi = {} below bound", sum.value));
                }
            }
        }
        out
    }
}

fn evaluate<T: Real>(q: Quantity, model: &AtomicModel<T>, opts: &EntropyOptions<T>) -> Result<Estimate<T>> {
    use Quantity::*;
    let one_d = Integrator::new(opts.spec)?;
    let two_d = Integrator::new(opts.pair_spec())?;
    let factor = |m: &AtomicModel<T>, kind: FactorKind| {
        StructureFactor1D::new(m.clone(), kind, opts.path, opts.spec)?.unity_normalize()
    };
    let pair_factor = |m: &SplitShellModel<T>, kind: FactorKind| {
        StructureFactor2D::new(m.clone(), kind, Path::Analytic, opts.spec)?.unity_normalize()
    };
    let hydrogenic = || -> Result<AtomicModel<T>> {
        let z = model.split_shell().expect("reference needs a two-electron model").z();
        Ok(HydrogenicAtom::new(z)?.into())
    };
    let split = || model.split_shell().expect("pair quantity needs a two-electron model");
    match q {
        SF => shannon_radial(&factor(model, FactorKind::Form)?, &one_d),
        SB => shannon_radial(&factor(model, FactorKind::ReciprocalForm)?, &one_d),
        SRho => shannon_radial(&UnitDensity::new(model.clone(), Space::Position), &one_d),
        SPi => shannon_radial(&UnitDensity::new(model.clone(), Space::Momentum), &one_d),
        SFH => shannon_radial(&factor(&hydrogenic()?, FactorKind::Form)?, &one_d),
        SBH => shannon_radial(&factor(&hydrogenic()?, FactorKind::ReciprocalForm)?, &one_d),
        SF2 => shannon_2d(&pair_factor(split(), FactorKind::Form)?, &two_d),
        SB2 => shannon_2d(&pair_factor(split(), FactorKind::ReciprocalForm)?, &two_d),
        SGamma => shannon_2d(&UnitPairDensity::new(split().clone(), Space::Position), &two_d),
        SPi2 => shannon_2d(&UnitPairDensity::new(split().clone(), Space::Momentum), &two_d),
        IF => information_distance(
            &pair_factor(split(), FactorKind::Form)?,
            &factor(model, FactorKind::Form)?,
            &two_d,
        ),
        IB => information_distance(
            &pair_factor(split(), FactorKind::ReciprocalForm)?,
            &factor(model, FactorKind::ReciprocalForm)?,
            &two_d,
        ),
    }
}

/// `(ΔS_F, ΔS_B)`: structure-factor entropies minus their hydrogenlike values at the same `Z`.
pub fn delta_measures<T: Real>(model: &SplitShellModel<T>, opts: &EntropyOptions<T>) -> Result<(Estimate<T>, Estimate<T>)> {
    let m: AtomicModel<T> = model.clone().into();
    if model.is_non_interacting() {
        return Ok((Estimate::exact(T::zero()), Estimate::exact(T::zero())));
    }
    let ((sf, sfh), (sb, sbh)) = rayon::join(
        || (evaluate(Quantity::SF, &m, opts), evaluate(Quantity::SFH, &m, opts)),
        || (evaluate(Quantity::SB, &m, opts), evaluate(Quantity::SBH, &m, opts)),
    );
    Ok((sf? - sfh?, sb? - sbh?))
}
