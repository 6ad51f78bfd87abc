//! The four commands.

use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;

use offdiag_core::entropy::EntropyOptions;
use offdiag_core::variational::{OptimizerOptions, ParameterCache};
use offdiag_core::verify::{self, VerifyConfig};
use offdiag_core::{Hydrogenic, Model, Oscillator, Report, SplitShell};

use crate::config::{RunConfig, System};
use crate::figures;
use crate::table::{self, COLUMNS};

pub fn options(cfg: &RunConfig) -> EntropyOptions<f64> {
    EntropyOptions { spec: cfg.spec, ..Default::default() }
}

/// Builds the model for one member; helium exponents come from the cache.
pub fn model(system: System, parameter: f64, cache: &ParameterCache) -> Result<Model> {
    Ok(match system {
        System::Hydrogenic => Hydrogenic::new(parameter)?.into(),
        System::Oscillator => Oscillator::new(parameter)?.into(),
        System::HeliumNi => SplitShell::non_interacting(parameter)?.into(),
        System::Helium => {
            let (z1, z2, _, converged) =
                cache.get(parameter).with_context(|| format!("no optimized exponents for Z = {parameter}"))?;
            if !converged {
                bail!("exponent optimization did not converge for Z = {parameter}");
            }
            SplitShell::new(parameter, z1, z2)?.into()
        }
    })
}

/// Makes sure the cache holds converged exponents for every charge, optimizing misses in parallel.
pub fn ensure_exponents(cache: &mut ParameterCache, zs: &[f64]) -> Result<()> {
    let opts = OptimizerOptions::default();
    let missing: Vec<f64> = zs.iter().copied().filter(|&z| !matches!(cache.get(z), Some((.., true)))).collect();
    if missing.is_empty() {
        return Ok(());
    }
    let results = missing
        .par_iter()
        .map(|&z| offdiag_core::variational::optimize(z, None, &opts))
        .collect::<offdiag_core::Result<Vec<_>>>()?;
    for r in &results {
        cache.insert(r);
    }
    cache.save()?;
    Ok(())
}

fn parameter(cfg: &RunConfig) -> f64 {
    match cfg.system {
        System::Oscillator => cfg.omega.unwrap_or(1.0),
        System::Hydrogenic => cfg.z.unwrap_or(1.0),
        System::Helium | System::HeliumNi => cfg.z.unwrap_or(2.0),
    }
}

fn split(system: System, p: f64) -> (Option<f64>, Option<f64>) {
    match system {
        System::Oscillator => (None, Some(p)),
        _ => (Some(p), None),
    }
}

pub fn report(cfg: &RunConfig) -> Result<ExitCode> {
    let p = parameter(cfg);
    let mut cache = ParameterCache::open(&cfg.cache)?;
    if cfg.system == System::Helium {
        ensure_exponents(&mut cache, &[p])?;
    }
    let m = model(cfg.system, p, &cache)?;
    let r = Report::compute(&m, &options(cfg)).with_context(|| format!("computing {}", m.label()))?;
    println!("{}", table::render(&r));
    let (z, omega) = split(cfg.system, p);
    let path = cfg.output_dir.join("report.csv");
    table::write_csv(&path, &COLUMNS, &[table::row(cfg.system.name(), z, omega, Ok(&r))])?;
    println!("wrote {}", path.display());
    Ok(ExitCode::SUCCESS)
}

pub fn sweep(cfg: &RunConfig) -> Result<ExitCode> {
    let range = match cfg.system {
        System::Oscillator => cfg.omega_range.context("oscillator sweep needs --omega-range")?,
        _ => cfg.z_range.context("sweep needs --z-range a:b:step")?,
    };
    let values = range.values();
    let mut cache = ParameterCache::open(&cfg.cache)?;
    if cfg.system == System::Helium {
        ensure_exponents(&mut cache, &values)?;
    }
    let opts = options(cfg);
    let reports: Vec<Result<Report>> = values
        .par_iter()
        .map(|&p| Ok(Report::compute(&model(cfg.system, p, &cache)?, &opts)?))
        .collect();
    let mut failures = 0;
    let rows: Vec<Vec<String>> = values
        .iter()
        .zip(&reports)
        .map(|(&p, r)| {
            let (z, omega) = split(cfg.system, p);
            match r {
                Ok(r) => table::row(cfg.system.name(), z, omega, Ok(r)),
                Err(e) => {
                    failures += 1;
                    eprintln!("member {p}: {e:#}");
                    table::row(cfg.system.name(), z, omega, Err(&format!("{e:#}")))
                }
            }
        })
        .collect();
    let path = cfg.output_dir.join(format!("sweep_{}.csv", cfg.system.name()));
    table::write_csv(&path, &COLUMNS, &rows)?;
    println!("wrote {} ({} members, {failures} failed)", path.display(), rows.len());
    Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

pub fn curves(cfg: &RunConfig, requested: &[String]) -> Result<ExitCode> {
    let ids: Vec<String> = if requested.is_empty() {
        figures::ALL.iter().map(|s| s.to_string()).collect()
    } else {
        requested.to_vec()
    };
    for id in &ids {
        if !figures::ALL.contains(&id.as_str()) {
            bail!("unknown figure {id:?}; expected one of {}", figures::ALL.join(", "));
        }
    }
    let mut ctx = figures::Context::new(cfg)?;
    for id in &ids {
        let set = ctx.figure(id)?;
        let path = cfg.output_dir.join(format!("{id}.csv"));
        let header: Vec<&str> = set.columns.iter().map(String::as_str).collect();
        table::write_csv(&path, &header, &set.rows)?;
        println!("wrote {} ({} rows)", path.display(), set.rows.len());
    }
    Ok(ExitCode::SUCCESS)
}

pub fn verify(cfg: &RunConfig) -> Result<ExitCode> {
    let vc = VerifyConfig { spec: cfg.spec, ..VerifyConfig::default() };
    let checks = verify::run_all(&vc);
    for c in &checks {
        println!("{c}");
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let path = cfg.output_dir.join("verify.json");
    write_json(&path, &checks)?;
    println!("{} of {} checks passed; wrote {}", checks.len() - failed, checks.len(), path.display());
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn write_json<S: serde::Serialize>(path: &Path, value: &S) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let text = serde_json::to_string_pretty(value)?;
    std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}
