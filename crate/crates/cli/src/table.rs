//! CSV and plain-text rendering of entropy reports.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};

use offdiag_core::quadrature::Estimate;
use offdiag_core::Report;

/// Fixed column order of report and sweep CSVs.
pub const COLUMNS: [&str; 27] = [
    "system", "z", "omega", "z1", "z2", "c_n", "s_f", "s_b", "s_f_plus_s_b", "s_rho", "s_pi", "s_f2", "s_b2",
    "s_gamma", "s_pi2", "i_f", "i_b", "i_r", "i_p", "gap_f", "gap_b", "s_f_h", "s_b_h", "delta_s_f", "delta_s_b",
    "max_error", "status",
];

/// `%.12g`: twelve significant digits, trailing zeros trimmed.
pub fn num(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim(mantissa.to_string()))
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn est(e: Option<Estimate<f64>>) -> String {
    opt(e.map(|e| e.value))
}

/// One CSV record; `report` is `None` for a failed member.
pub fn row(system: &str, z: Option<f64>, omega: Option<f64>, report: Result<&Report, &str>) -> Vec<String> {
    match report {
        Ok(r) => {
            let p = &r.params;
            vec![
                system.into(),
                opt(p.z.or(z)),
                opt(p.omega.or(omega)),
                opt(p.z1),
                opt(p.z2),
                opt(p.c_n),
                num(r.s_f.value),
                num(r.s_b.value),
                num(r.sum_fb().value),
                num(r.s_rho.value),
                num(r.s_pi.value),
                est(r.s_f2),
                est(r.s_b2),
                est(r.s_gamma),
                est(r.s_pi2),
                est(r.i_f),
                est(r.i_b),
                est(r.i_r),
                est(r.i_p),
                est(r.gap_f),
                est(r.gap_b),
                est(r.s_f_h),
                est(r.s_b_h),
                est(r.delta_s_f),
                est(r.delta_s_b),
                num(r.max_error()),
                "ok".into(),
            ]
        }
        Err(msg) => {
            let mut cells = vec![String::new(); COLUMNS.len()];
            cells[0] = system.into();
            cells[1] = opt(z);
            cells[2] = opt(omega);
            cells[COLUMNS.len() - 1] = format!("error: {msg}");
            cells
        }
    }
}

pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let mut w = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Human-readable two-column table of a report.
pub fn render(r: &Report) -> String {
    let mut lines = vec![format!("{}", r.label)];
    let mut push = |name: &str, e: Option<Estimate<f64>>| {
        if let Some(e) = e {
            lines.push(format!("  {name:<16} {:>20}  ± {:.1e}", num(e.value), e.error));
        }
    };
    push("S_F", Some(r.s_f));
    push("S_B", Some(r.s_b));
    push("S_F + S_B", Some(r.sum_fb()));
    push("S_rho", Some(r.s_rho));
    push("S_pi", Some(r.s_pi));
    push("S_F2", r.s_f2);
    push("S_B2", r.s_b2);
    push("S_Gamma", r.s_gamma);
    push("S_Pi", r.s_pi2);
    push("I_F", r.i_f);
    push("I_B", r.i_b);
    push("I_r", r.i_r);
    push("I_p", r.i_p);
    push("2S_F - S_F2", r.gap_f);
    push("2S_B - S_B2", r.gap_b);
    push("delta S_F", r.delta_s_f);
    push("delta S_B", r.delta_s_b);
    lines.join("\n")
}
