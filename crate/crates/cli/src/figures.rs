//! Data behind each figure, as CSV-ready column sets.

use anyhow::{bail, Result};
use rayon::prelude::*;

use offdiag_core::factors::{FactorKind, Path};
use offdiag_core::variational::ParameterCache;
use offdiag_core::{Factor1D, Factor2D, Report};

use crate::config::{RunConfig, System};
use crate::run::{ensure_exponents, model, options};
use crate::table::num;

pub const ALL: [&str; 14] = [
    "fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11", "fig12", "fig13", "fig14",
];

#[derive(Debug, Clone)]
pub struct CurveSet {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Lazily computed series shared between figures.
pub struct Context<'a> {
    cfg: &'a RunConfig,
    cache: ParameterCache,
    hydrogenic: Option<Vec<Report>>,
    helium: Option<Vec<(Report, Report)>>,
}

impl<'a> Context<'a> {
    pub fn new(cfg: &'a RunConfig) -> Result<Self> {
        Ok(Self { cfg, cache: ParameterCache::open(&cfg.cache)?, hydrogenic: None, helium: None })
    }

    pub fn figure(&mut self, id: &str) -> Result<CurveSet> {
        use FactorKind::{Form, ReciprocalForm};
        let hydro = |z| (System::Hydrogenic, z, format!("Z{z}"));
        let he_members = [
            (System::Helium, 2.0, "Z2".to_string()),
            (System::HeliumNi, 2.0, "NI_Z2".to_string()),
            (System::Helium, 3.0, "Z3".to_string()),
            (System::Helium, 4.0, "Z4".to_string()),
        ];
        match id {
            "fig1" => self.curves_1d(id, Form, &[hydro(2.0), hydro(3.0), hydro(4.0)]),
            "fig2" => self.curves_1d(id, ReciprocalForm, &[hydro(2.0), hydro(3.0), hydro(4.0)]),
            "fig4" => self.curves_1d(id, ReciprocalForm, &he_members),
            "fig5" => self.curves_1d(id, Form, &he_members),
            "fig8" => self.surface(id, Form, 2.0),
            "fig9" => self.surface(id, ReciprocalForm, 2.0),
            "fig10" => self.surface(id, Form, 4.0),
            "fig11" => self.surface(id, ReciprocalForm, 4.0),
            "fig3" => {
                let reports = self.hydrogenic()?;
                let rows = reports
                    .iter()
                    .map(|r| vec![num(r.params.z.unwrap()), num(r.s_f.value), num(r.s_b.value)])
                    .collect();
                Ok(set(&["Z", "S_F", "S_B"], rows))
            }
            "fig6" | "fig7" | "fig12" | "fig13" | "fig14" => {
                let series = self.helium()?;
                let v = |e: Option<offdiag_core::quadrature::Estimate<f64>>| num(e.map_or(f64::NAN, |e| e.value));
                let rows = series
                    .iter()
                    .map(|(r, ni)| {
                        let z = num(r.params.z.unwrap());
                        match id {
                            "fig6" => vec![z, num(r.s_f.value), num(r.s_b.value)],
                            "fig7" => vec![z, num(r.sum_fb().value), num(ni.sum_fb().value)],
                            "fig12" => vec![z, v(r.s_f2), v(r.s_b2)],
                            "fig13" => vec![
                                z,
                                num(r.s_f2.unwrap().value + r.s_b2.unwrap().value),
                                num(2.0 * ni.sum_fb().value),
                            ],
                            _ => vec![z, v(r.i_f), v(r.i_b)],
                        }
                    })
                    .collect();
                let header: &[&str] = match id {
                    "fig6" => &["Z", "S_F", "S_B"],
                    "fig7" => &["Z", "S_F_plus_S_B", "S_F_plus_S_B_NI"],
                    "fig12" => &["Z", "S_F2", "S_B2"],
                    "fig13" => &["Z", "S_F2_plus_S_B2", "NI_2_S_F_H_plus_S_B_H"],
                    _ => &["Z", "I_F", "I_B"],
                };
                Ok(set(header, rows))
            }
            _ => bail!("unknown figure {id:?}"),
        }
    }

    fn curves_1d(&mut self, id: &str, kind: FactorKind, members: &[(System, f64, String)]) -> Result<CurveSet> {
        let helium: Vec<f64> = members.iter().filter(|m| m.0 == System::Helium).map(|m| m.1).collect();
        ensure_exponents(&mut self.cache, &helium)?;
        let factors = members
            .iter()
            .map(|(system, p, _)| Ok(Factor1D::new(model(*system, *p, &self.cache)?, kind, Path::Analytic, self.cfg.spec)?))
            .collect::<Result<Vec<_>>>()?;
        let grid = self.cfg.grid(id, false);
        let rows = grid
            .iter()
            .map(|&x| {
                let mut row = vec![num(x)];
                for f in &factors {
                    row.push(num(f.value(x)?));
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        let axis = if kind == FactorKind::Form { "k" } else { "s" };
        let prefix = if kind == FactorKind::Form { "F" } else { "B" };
        let mut columns = vec![axis.to_string()];
        columns.extend(members.iter().map(|m| format!("{prefix}_{}", m.2)));
        Ok(CurveSet { columns, rows })
    }

    fn surface(&mut self, id: &str, kind: FactorKind, z: f64) -> Result<CurveSet> {
        ensure_exponents(&mut self.cache, &[z])?;
        let m = model(System::Helium, z, &self.cache)?;
        let split = m.split_shell().expect("helium model").clone();
        let f = Factor2D::new(split, kind, Path::Analytic, self.cfg.spec)?;
        let grid = self.cfg.grid(id, true);
        let rows = f.sample_grid(&grid)?.into_iter().map(|(a, b, v)| vec![num(a), num(b), num(v)]).collect();
        let header: &[&str] = if kind == FactorKind::Form { &["k1", "k2", "F"] } else { &["s1", "s2", "B"] };
        Ok(set(header, rows))
    }

    fn hydrogenic(&mut self) -> Result<&Vec<Report>> {
        if self.hydrogenic.is_none() {
            let opts = options(self.cfg);
            let reports = self
                .cfg
                .hydrogenic_series
                .values()
                .par_iter()
                .map(|&z| Ok(Report::compute(&model(System::Hydrogenic, z, &self.cache)?, &opts)?))
                .collect::<Result<Vec<_>>>()?;
            self.hydrogenic = Some(reports);
        }
        Ok(self.hydrogenic.as_ref().unwrap())
    }

    fn helium(&mut self) -> Result<&Vec<(Report, Report)>> {
        if self.helium.is_none() {
            let zs = self.cfg.helium_series.values();
            ensure_exponents(&mut self.cache, &zs)?;
            let opts = options(self.cfg);
            let cache = &self.cache;
            let reports = zs
                .par_iter()
                .map(|&z| {
                    let r = Report::compute(&model(System::Helium, z, cache)?, &opts)?;
                    let ni = Report::compute(&model(System::HeliumNi, z, cache)?, &opts)?;
                    Ok((r, ni))
                })
                .collect::<Result<Vec<_>>>()?;
            self.helium = Some(reports);
        }
        Ok(self.helium.as_ref().unwrap())
    }
}

fn set(header: &[&str], rows: Vec<Vec<String>>) -> CurveSet {
    CurveSet { columns: header.iter().map(|s| s.to_string()).collect(), rows }
}
