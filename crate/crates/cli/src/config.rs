//! Run configuration: TOML file, environment and command-line flags, in
//! increasing order of precedence.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde::Deserialize;

use offdiag_core::Spec;

pub const OUT_ENV: &str = "OFFDIAG_OUT";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
pub enum System {
    #[serde(rename = "hydrogenic")]
    Hydrogenic,
    #[serde(rename = "oscillator")]
    Oscillator,
    #[serde(rename = "helium")]
    Helium,
    #[value(name = "helium-NI", alias = "helium-ni")]
    #[serde(rename = "helium-NI", alias = "helium-ni")]
    HeliumNi,
}

impl System {
    pub fn name(self) -> &'static str {
        match self {
            System::Hydrogenic => "hydrogenic",
            System::Oscillator => "oscillator",
            System::Helium => "helium",
            System::HeliumNi => "helium-NI",
        }
    }
}

/// Inclusive range `start:stop:step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Range {
    pub fn values(&self) -> Vec<f64> {
        let n = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        (0..=n).map(|i| self.start + self.step * i as f64).collect()
    }
}

impl FromStr for Range {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let nums = parts
            .iter()
            .map(|p| p.trim().parse::<f64>().with_context(|| format!("bad number {p:?} in range {s:?}")))
            .collect::<Result<Vec<f64>>>()?;
        let range = match nums[..] {
            [a, b] => Range { start: a, stop: b, step: 1.0 },
            [a, b, step] => Range { start: a, stop: b, step },
            _ => bail!("range {s:?} is not start:stop[:step]"),
        };
        if !(range.step > 0.0 && range.step.is_finite()) {
            bail!("range {s:?} needs a positive step");
        }
        if !(range.start.is_finite() && range.stop.is_finite() && range.stop >= range.start) {
            bail!("range {s:?} is empty");
        }
        Ok(range)
    }
}

impl<'de> Deserialize<'de> for Range {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Abscissa grid of one figure.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveGrid {
    pub range: [f64; 2],
    pub points: usize,
}

/// Contents of the TOML configuration file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub system: Option<System>,
    pub z: Option<f64>,
    pub z_range: Option<Range>,
    pub omega: Option<f64>,
    pub omega_range: Option<Range>,
    pub output_dir: Option<PathBuf>,
    pub workers: Option<usize>,
    pub cache: Option<PathBuf>,
    /// `Z` range of the helium series used by the entropy figures.
    pub helium_series: Option<Range>,
    /// `Z` range of the hydrogenic series used by the entropy figures.
    pub hydrogenic_series: Option<Range>,
    #[serde(default)]
    pub quadrature: Option<Spec>,
    #[serde(default)]
    pub curves: BTreeMap<String, CurveGrid>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}

/// Flags that override the configuration file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub system: Option<System>,
    pub z: Option<f64>,
    pub z_range: Option<Range>,
    pub omega: Option<f64>,
    pub omega_range: Option<Range>,
    pub out: Option<PathBuf>,
    pub workers: Option<usize>,
    pub tol: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub system: System,
    pub z: Option<f64>,
    pub z_range: Option<Range>,
    pub omega: Option<f64>,
    pub omega_range: Option<Range>,
    pub output_dir: PathBuf,
    pub workers: Option<usize>,
    pub cache: PathBuf,
    pub helium_series: Range,
    pub hydrogenic_series: Range,
    pub spec: Spec,
    pub curves: BTreeMap<String, CurveGrid>,
}

impl RunConfig {
    pub fn resolve(file: FileConfig, flags: Overrides, env_out: Option<PathBuf>) -> Result<Self> {
        let output_dir = flags.out.or(env_out).or(file.output_dir).unwrap_or_else(|| PathBuf::from("out"));
        let mut spec = file.quadrature.unwrap_or_default();
        if let Some(tol) = flags.tol {
            spec = spec.with_rel_tol(tol);
        }
        spec.validate().context("invalid quadrature settings")?;
        if flags.workers == Some(0) || file.workers == Some(0) {
            bail!("workers must be at least 1");
        }
        for (name, grid) in &file.curves {
            if grid.points < 2 || !(grid.range[1] > grid.range[0]) {
                bail!("curve grid {name} needs at least 2 points over a non-empty range");
            }
        }
        let cache = file.cache.unwrap_or_else(|| output_dir.join("params.txt"));
        Ok(Self {
            system: flags.system.or(file.system).unwrap_or(System::Hydrogenic),
            z: flags.z.or(file.z),
            z_range: flags.z_range.or(file.z_range),
            omega: flags.omega.or(file.omega),
            omega_range: flags.omega_range.or(file.omega_range),
            output_dir,
            workers: flags.workers.or(file.workers),
            cache,
            helium_series: file.helium_series.unwrap_or(Range { start: 2.0, stop: 10.0, step: 1.0 }),
            hydrogenic_series: file.hydrogenic_series.unwrap_or(Range { start: 1.0, stop: 30.0, step: 1.0 }),
            spec,
            curves: file.curves,
        })
    }

    /// Grid for a 1D figure (default 400 points on `[0, 10]`) or a 2D one (200 per axis).
    pub fn grid(&self, figure: &str, two_d: bool) -> Vec<f64> {
        let g = self.curves.get(figure).copied().unwrap_or(CurveGrid {
            range: [0.0, 10.0],
            points: if two_d { 200 } else { 400 },
        });
        offdiag_core::factors::linear_grid(g.points, g.range[0], g.range[1])
    }
}
