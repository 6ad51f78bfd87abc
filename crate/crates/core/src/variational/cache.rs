use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use super::{optimize, OptimizationResult, OptimizerOptions};
use crate::error::{Error, Result};

const HEADER: &str = "# Z Z1 Z2 E converged";

/// Plain-text table of optimized exponents keyed by `Z`.
#[derive(Debug, Clone, Default)]
pub struct ParameterCache {
    path: Option<PathBuf>,
    entries: BTreeMap<u64, (f64, f64, f64, f64, bool)>,
}

fn key(z: f64) -> u64 {
    // 1e-9 resolution in Z
    (z * 1e9).round() as u64
}

impl ParameterCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Opens a cache file, starting empty if it does not exist yet.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut cache = Self { path: Some(path.clone()), entries: BTreeMap::new() };
        if path.exists() {
            cache.parse(&fs::read_to_string(&path)?)?;
        }
        Ok(cache)
    }

    fn parse(&mut self, text: &str) -> Result<()> {
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::Io(format!("malformed cache line {}: {line:?}", n + 1));
            let cols: Vec<&str> = line.split_whitespace().collect();
            if cols.len() != 5 {
                return Err(bad());
            }
            let num = |s: &str| s.parse::<f64>().map_err(|_| bad());
            let converged = cols[4].parse::<bool>().map_err(|_| bad())?;
            let z = num(cols[0])?;
            self.entries.insert(key(z), (z, num(cols[1])?, num(cols[2])?, num(cols[3])?, converged));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Cached `(Z₁, Z₂, E, converged)` for `z`.
    pub fn get(&self, z: f64) -> Option<(f64, f64, f64, bool)> {
        self.entries.get(&key(z)).map(|&(_, a, b, e, c)| (a, b, e, c))
    }

    pub fn insert(&mut self, r: &OptimizationResult<f64>) {
        self.entries.insert(key(r.z), (r.z, r.z1, r.z2, r.energy, r.converged));
    }

    /// Exponents for `z`, optimizing and recording them on a miss.
    pub fn exponents(&mut self, z: f64, opts: &OptimizerOptions) -> Result<(f64, f64)> {
        if let Some((a, b, _, true)) = self.get(z) {
            return Ok((a, b));
        }
        let r = optimize(z, None, opts)?.require_converged()?;
        self.insert(&r);
        Ok((r.z1, r.z2))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from(HEADER);
        out.push('\n');
        for (z, a, b, e, c) in self.entries.values() {
            let _ = writeln!(out, "{z} {a} {b} {e} {c}");
        }
        out
    }

    /// Writes the table back to its file; a no-op for in-memory caches.
    pub fn save(&self) -> Result<()> {
        if let Some(path) = &self.path {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir)?;
            }
            fs::write(path, self.to_text())?;
        }
        Ok(())
    }
}
