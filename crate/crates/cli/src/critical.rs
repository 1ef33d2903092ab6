use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;

use tripartite::analysis::{critical_profile, CriticalProfile, CriticalReport};
use tripartite::channel::Temperature;
use tripartite::states::StateBranch;

use crate::sweep::{check_temperatures, nbar_list, time_column};
use crate::{format_float, write_file, Result};

pub const CRITICAL_COLUMNS: [&str; 9] = [
    "nbar", "tau_s", "tau_bp2", "tau_bp3", "tau_bp4", "tau_bp5", "tau_t", "tau_e", "n_c",
];

/// One profile per `n̄`, computed in parallel, in input order.
pub fn run_critical(branch: StateBranch, temperatures: &[Temperature]) -> Result<Vec<CriticalProfile>> {
    check_temperatures(temperatures)?;
    temperatures
        .par_iter()
        .map(|&t| Ok(critical_profile(branch, t)?))
        .collect()
}

/// `inf` when no crossing occurs in the search window, `nan` when the
/// quantity never exceeds its bound.
fn tau_cell(r: &CriticalReport) -> String {
    format_float(r.tau_gamma)
}

pub fn render_critical(branch: StateBranch, temperatures: &[Temperature], profiles: &[CriticalProfile]) -> String {
    let mut out = String::new();
    let meta = [
        ("tripartite", "critical".to_string()),
        ("version", env!("CARGO_PKG_VERSION").to_string()),
        ("branch", branch.to_string()),
        ("nbar", nbar_list(temperatures)),
        ("time_unit", time_column(temperatures).to_string()),
        ("gamma", "1".to_string()),
        ("sentinels", "inf=no crossing in window,nan=never above bound".to_string()),
    ];
    for (k, v) in meta {
        let _ = writeln!(out, "# {k}={v}");
    }
    let _ = writeln!(out, "{}", CRITICAL_COLUMNS.join(","));
    for p in profiles {
        let mut cells = vec![format_float(p.temperature.nbar())];
        cells.push(tau_cell(&p.bell[0]));
        for r in &p.bell[2..] {
            cells.push(tau_cell(r));
        }
        cells.push(tau_cell(&p.fidelity));
        cells.push(tau_cell(&p.negativity));
        cells.push(format_float(p.critical_negativity().unwrap_or(f64::NAN)));
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

pub fn cmd_critical(branch: StateBranch, temperatures: &[Temperature], out_path: &Path) -> Result<Vec<CriticalProfile>> {
    let profiles = run_critical(branch, temperatures)?;
    write_file(out_path, &render_critical(branch, temperatures, &profiles))?;
    Ok(profiles)
}
