//! Sweeps behind the five published figures, at n̄ = 0, 0.1, 0.2, 0.3.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use tripartite::analysis::TrackedQuantity;
use tripartite::bell::{BellQuantity, WwzbClass};
use tripartite::channel::Temperature;
use tripartite::states::StateBranch;

use crate::critical::{cmd_critical, run_critical};
use crate::plot::cmd_plot;
use crate::sweep::{cmd_sweep, SweepSpec};
use crate::{format_float, write_file, CliError, Result};

pub const FIGURE_NBARS: [f64; 4] = [0.0, 0.1, 0.2, 0.3];
/// `n̄` grid of the critical-negativity figure.
pub const CRITICAL_NBARS: [f64; 11] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
pub const FIGURE_STEPS: usize = 121;

fn temperatures(nbars: &[f64]) -> Vec<Temperature> {
    nbars.iter().map(|&n| Temperature::Finite(n)).collect()
}

fn bell(q: BellQuantity) -> TrackedQuantity {
    TrackedQuantity::Bell(q)
}

/// `(file stem, sweep)` for the four time-domain figures.
pub fn figure_sweeps() -> Vec<(&'static str, SweepSpec)> {
    let sweep = |branch, gamma_t_max, quantities: Vec<TrackedQuantity>| SweepSpec {
        branch,
        temperatures: temperatures(&FIGURE_NBARS),
        gamma_t_max,
        steps: FIGURE_STEPS,
        quantities,
        extended: false,
    };
    let both = vec![TrackedQuantity::Negativity, TrackedQuantity::Fidelity];
    vec![
        ("fig1", sweep(StateBranch::Ghz, 3.0, both.clone())),
        (
            "fig3",
            sweep(
                StateBranch::Ghz,
                0.5,
                vec![
                    bell(BellQuantity::Svetlichny),
                    bell(BellQuantity::Wwzb(WwzbClass::P2)),
                    bell(BellQuantity::Wwzb(WwzbClass::P3)),
                    bell(BellQuantity::Wwzb(WwzbClass::P5)),
                ],
            ),
        ),
        ("fig4", sweep(StateBranch::W, 3.0, both)),
        (
            "fig5",
            sweep(
                StateBranch::W,
                0.12,
                vec![
                    bell(BellQuantity::Svetlichny),
                    bell(BellQuantity::Wwzb(WwzbClass::P3)),
                    bell(BellQuantity::Wwzb(WwzbClass::P5)),
                ],
            ),
        ),
    ]
}

/// `nbar, n_c_ghz, n_c_w` over [`CRITICAL_NBARS`].
pub fn render_fig2() -> Result<String> {
    let temps = temperatures(&CRITICAL_NBARS);
    let ghz = run_critical(StateBranch::Ghz, &temps)?;
    let w = run_critical(StateBranch::W, &temps)?;
    let mut out = String::new();
    let _ = writeln!(out, "# tripartite=critical_negativity");
    let _ = writeln!(out, "# version={}", env!("CARGO_PKG_VERSION"));
    let _ = writeln!(out, "nbar,n_c_ghz,n_c_w");
    for ((t, g), w) in temps.iter().zip(&ghz).zip(&w) {
        let nc = |p: &tripartite::analysis::CriticalProfile| format_float(p.critical_negativity().unwrap_or(f64::NAN));
        let _ = writeln!(out, "{},{},{}", format_float(t.nbar()), nc(g), nc(w));
    }
    Ok(out)
}

/// Writes every figure's CSV and SVG into `dir`; returns the CSV paths.
pub fn write_figures(dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut written = Vec::new();
    for (stem, spec) in figure_sweeps() {
        let csv = dir.join(format!("{stem}.csv"));
        cmd_sweep(&spec, &csv)?;
        cmd_plot(&csv, &dir.join(format!("{stem}.svg")))?;
        written.push(csv);
    }
    let fig2 = dir.join("fig2.csv");
    write_file(&fig2, &render_fig2()?)?;
    cmd_plot(&fig2, &dir.join("fig2.svg"))?;
    written.push(fig2);
    for branch in [StateBranch::Ghz, StateBranch::W] {
        let path = dir.join(format!("critical_{branch}.csv"));
        cmd_critical(branch, &temperatures(&FIGURE_NBARS), &path)?;
        written.push(path);
    }
    written.sort();
    Ok(written)
}
