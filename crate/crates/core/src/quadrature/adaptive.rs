//! Globally adaptive composite quadrature.
//!
//! Every panel is integrated with an `n`-point Gauss-Legendre rule and a paired
//! lower-order Gauss-Legendre rule; their difference is the panel error
//! estimate. The panel with the largest estimate is bisected until the summed
//! estimate meets `max(abs_tol, rel_tol * |total|)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::gauss::GaussLegendre;
use super::QuadratureSpec;
use crate::error::{Error, Result};
use crate::scalar::{from_usize, lit, CompensatedSum, Real};

/// Change of variables applied to one segment of the domain.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Map<T> {
    Identity,
    /// `x = origin / t` for `t` in `(0, 1]`, covering `[origin, ∞)`.
    Reciprocal { origin: T },
}

#[derive(Debug, Clone)]
pub(crate) struct Segment<T> {
    pub map: Map<T>,
    pub breakpoints: Vec<T>,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Outcome<T> {
    pub value: T,
    pub error: T,
    /// Integral of `|f|` over the same domain, used to propagate relative error.
    pub abs_integral: T,
}

#[derive(Debug, Clone)]
pub(crate) struct PanelRule<T> {
    high: GaussLegendre<T>,
    low: GaussLegendre<T>,
}

impl<T: Real> PanelRule<T> {
    pub fn new(order: usize) -> Self {
        let low = ((order + 1) / 2).min(order - 1).max(1);
        Self { high: GaussLegendre::new(order), low: GaussLegendre::new(low) }
    }

    fn apply<F>(&self, f: &mut F, map: Map<T>, a: T, b: T) -> Result<(T, T, T)>
    where
        F: FnMut(T) -> Result<T>,
    {
        let half = (b - a) / lit(2.0);
        let mid = (a + b) / lit(2.0);
        let mut high = CompensatedSum::new();
        let mut abs = CompensatedSum::new();
        for (&x, &w) in self.high.nodes().iter().zip(self.high.weights()) {
            let v = eval_mapped(f, map, mid + half * x)?;
            high.add(w * v);
            abs.add(w * v.abs());
        }
        let mut low = CompensatedSum::new();
        for (&x, &w) in self.low.nodes().iter().zip(self.low.weights()) {
            low.add(w * eval_mapped(f, map, mid + half * x)?);
        }
        let high = high.value() * half;
        let abs = abs.value() * half.abs();
        let low = low.value() * half;
        let roundoff = lit::<T>(50.0) * T::epsilon() * abs;
        Ok((high, (high - low).abs().max(roundoff), abs))
    }
}

fn eval_mapped<T: Real, F: FnMut(T) -> Result<T>>(f: &mut F, map: Map<T>, t: T) -> Result<T> {
    let v = match map {
        Map::Identity => f(t)?,
        Map::Reciprocal { origin } => {
            let x = origin / t;
            let fx = f(x)?;
            if fx == T::zero() {
                T::zero()
            } else {
                fx * origin / (t * t)
            }
        }
    };
    if !v.is_finite() {
        let x = match map {
            Map::Identity => t,
            Map::Reciprocal { origin } => origin / t,
        };
        return Err(Error::NonFinite { abscissa: x.to_f64().unwrap_or(f64::NAN) });
    }
    Ok(v)
}

#[derive(Debug, Clone, Copy)]
struct Panel<T> {
    segment: usize,
    a: T,
    b: T,
    value: T,
    error: T,
    abs: T,
}

impl<T: Real> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<T: Real> Eq for Panel<T> {}
impl<T: Real> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Real> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.partial_cmp(&other.error).unwrap_or(Ordering::Equal)
    }
}

pub(crate) fn integrate_segments<T, F>(
    f: &mut F,
    segments: &[Segment<T>],
    rule: &PanelRule<T>,
    spec: &QuadratureSpec<T>,
) -> Result<Outcome<T>>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Panel<T>> = Vec::new();
    for (segment, seg) in segments.iter().enumerate() {
        for w in seg.breakpoints.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b <= a {
                continue;
            }
            let (value, error, abs) = rule.apply(f, seg.map, a, b)?;
            heap.push(Panel { segment, a, b, value, error, abs });
        }
    }
    if heap.len() > spec.max_panels {
        return Err(Error::NonConvergent {
            reason: format!("{} initial panels exceed max_panels = {}", heap.len(), spec.max_panels),
        });
    }

    let exact_totals = |heap: &BinaryHeap<Panel<T>>, frozen: &[Panel<T>]| {
        let mut panels: Vec<&Panel<T>> = heap.iter().chain(frozen.iter()).collect();
        panels.sort_by(|p, q| {
            p.segment.cmp(&q.segment).then(p.a.partial_cmp(&q.a).unwrap_or(Ordering::Equal))
        });
        let value: CompensatedSum<T> = panels.iter().map(|p| p.value).collect();
        let error: CompensatedSum<T> = panels.iter().map(|p| p.error).collect();
        let abs: CompensatedSum<T> = panels.iter().map(|p| p.abs).collect();
        (value.value(), error.value(), abs.value())
    };

    let (mut total, mut total_err, _) = exact_totals(&heap, &frozen);
    let mut iterations = 0usize;
    loop {
        let tol = spec.abs_tol.max(spec.rel_tol * total.abs());
        if total_err <= lit::<T>(4.0) * tol || iterations % 1024 == 1023 {
            let (v, e, _) = exact_totals(&heap, &frozen);
            total = v;
            total_err = e;
            if total_err <= spec.abs_tol.max(spec.rel_tol * total.abs()) {
                break;
            }
        }
        if heap.len() + frozen.len() >= spec.max_panels {
            return Err(Error::NonConvergent {
                reason: format!(
                    "max_panels = {} exhausted; estimate {:e} ± {:e}",
                    spec.max_panels, total, total_err
                ),
            });
        }
        let Some(worst) = heap.pop() else {
            return Err(Error::NonConvergent {
                reason: format!("tolerance below attainable precision; estimate {:e} ± {:e}", total, total_err),
            });
        };
        let mid = (worst.a + worst.b) / lit(2.0);
        let width = worst.b - worst.a;
        if mid <= worst.a || mid >= worst.b || width <= from_usize::<T>(8) * T::epsilon() * mid.abs() {
            frozen.push(worst);
            continue;
        }
        let seg = &segments[worst.segment];
        let (lv, le, la) = rule.apply(f, seg.map, worst.a, mid)?;
        let (rv, re, ra) = rule.apply(f, seg.map, mid, worst.b)?;
        total = total + (lv + rv - worst.value);
        total_err = total_err + (le + re - worst.error);
        heap.push(Panel { segment: worst.segment, a: worst.a, b: mid, value: lv, error: le, abs: la });
        heap.push(Panel { segment: worst.segment, a: mid, b: worst.b, value: rv, error: re, abs: ra });
        iterations += 1;
    }
    let (value, error, abs_integral) = exact_totals(&heap, &frozen);
    Ok(Outcome { value, error, abs_integral })
}
