use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;

use tripartite::analysis::{evaluate, state_at, TrackedQuantity};
use tripartite::bell::{maximize_violation, maximize_violation_extended, AxisPair};
use tripartite::channel::Temperature;
use tripartite::states::StateBranch;

use crate::{format_float, write_file, CliError, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub branch: StateBranch,
    pub temperatures: Vec<Temperature>,
    pub gamma_t_max: f64,
    pub steps: usize,
    pub quantities: Vec<TrackedQuantity>,
    /// Free all six measurement directions instead of the branch frame.
    pub extended: bool,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.steps < 2 {
            return Err(CliError::Invalid(format!("steps must be >= 2, got {}", self.steps)));
        }
        if !(self.gamma_t_max.is_finite() && self.gamma_t_max > 0.0) {
            return Err(CliError::Invalid(format!("tmax must be > 0, got {}", self.gamma_t_max)));
        }
        if self.quantities.is_empty() {
            return Err(CliError::Invalid("at least one --quantity is required".into()));
        }
        check_temperatures(&self.temperatures)
    }

    /// `gamma_t_max · i / (steps − 1)` for `i = 0..steps`.
    pub fn grid(&self) -> Vec<f64> {
        let last = (self.steps - 1) as f64;
        (0..self.steps).map(|i| self.gamma_t_max * i as f64 / last).collect()
    }

    pub fn column_names(&self) -> Vec<String> {
        let mut names = vec![time_column(&self.temperatures).to_string()];
        for t in &self.temperatures {
            for q in &self.quantities {
                names.push(if self.temperatures.len() == 1 {
                    q.name().to_string()
                } else {
                    format!("{}@nbar={t}", q.name())
                });
            }
        }
        names
    }
}

/// The infinite-temperature mode measures time in a different unit, so it
/// cannot share an axis with finite `n̄`.
pub(crate) fn check_temperatures(temperatures: &[Temperature]) -> Result<()> {
    if temperatures.is_empty() {
        return Err(CliError::Invalid("at least one --nbar is required".into()));
    }
    let infinite = temperatures.iter().filter(|t| **t == Temperature::Infinite).count();
    if infinite > 0 && infinite < temperatures.len() {
        return Err(CliError::Invalid("--nbar inf cannot be mixed with finite values".into()));
    }
    Ok(())
}

pub(crate) fn time_column(temperatures: &[Temperature]) -> &'static str {
    if temperatures.first() == Some(&Temperature::Infinite) {
        "nbar_gamma_t"
    } else {
        "gamma_t"
    }
}

pub(crate) fn nbar_list(temperatures: &[Temperature]) -> String {
    temperatures.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
}

/// Value of one column at one time. Bell columns hold the clipped
/// violation `max{|⟨B⟩| − bound, 0}`.
fn column_value(spec: &SweepSpec, temperature: Temperature, quantity: TrackedQuantity, tau: f64) -> Result<f64> {
    let rho = state_at(spec.branch, temperature, tau)?;
    Ok(match quantity {
        TrackedQuantity::Bell(q) if spec.extended => maximize_violation_extended(&rho, q)?.violation,
        TrackedQuantity::Bell(q) => maximize_violation(&rho, q, AxisPair::for_branch(spec.branch))?.violation,
        other => evaluate(spec.branch, other, &rho)?,
    })
}

/// Evaluates the sweep; rows are computed in parallel and returned in
/// grid order.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<Vec<f64>>> {
    spec.validate()?;
    spec.grid()
        .into_par_iter()
        .map(|tau| {
            let mut row = vec![tau];
            for &t in &spec.temperatures {
                for &q in &spec.quantities {
                    row.push(column_value(spec, t, q, tau)?);
                }
            }
            Ok(row)
        })
        .collect()
}

pub fn render_sweep(spec: &SweepSpec, rows: &[Vec<f64>]) -> String {
    let mut out = String::new();
    let axes = match AxisPair::for_branch(spec.branch) {
        _ if spec.extended => "free",
        AxisPair::YX => "yx",
        AxisPair::ZX => "zx",
    };
    let meta = [
        ("tripartite", "sweep".to_string()),
        ("version", env!("CARGO_PKG_VERSION").to_string()),
        ("branch", spec.branch.to_string()),
        ("nbar", nbar_list(&spec.temperatures)),
        ("time_unit", time_column(&spec.temperatures).to_string()),
        ("gamma", "1".to_string()),
        ("basis", "4a+2b+c".to_string()),
        ("bell_axes", axes.to_string()),
        ("bell_columns", "max(|<B>|-bound,0)".to_string()),
    ];
    for (k, v) in meta {
        let _ = writeln!(out, "# {k}={v}");
    }
    let _ = writeln!(out, "{}", spec.column_names().join(","));
    for row in rows {
        let cells: Vec<String> = row.iter().map(|&x| format_float(x)).collect();
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

/// Runs the sweep and writes the CSV to `out_path`.
pub fn cmd_sweep(spec: &SweepSpec, out_path: &Path) -> Result<Vec<Vec<f64>>> {
    let rows = run_sweep(spec)?;
    write_file(out_path, &render_sweep(spec, &rows))?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> SweepSpec {
        SweepSpec {
            branch: StateBranch::Ghz,
            temperatures: vec![Temperature::Finite(0.0)],
            gamma_t_max: 1.0,
            steps: 5,
            quantities: vec![TrackedQuantity::Fidelity],
            extended: false,
        }
    }

    #[test]
    fn grid_endpoints() {
        let g = spec().grid();
        assert_eq!(g.len(), 5);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[4], 1.0);
    }

    #[test]
    fn validation() {
        assert!(spec().validate().is_ok());
        let mut s = spec();
        s.gamma_t_max = 0.0;
        assert_eq!(s.validate().unwrap_err().exit_code(), 2);
        let mut s = spec();
        s.steps = 1;
        assert!(s.validate().is_err());
        let mut s = spec();
        s.quantities.clear();
        assert!(s.validate().is_err());
        let mut s = spec();
        s.temperatures.push(Temperature::Infinite);
        assert!(s.validate().is_err());
    }

    #[test]
    fn column_names_carry_nbar_when_several() {
        let mut s = spec();
        assert_eq!(s.column_names(), ["gamma_t", "fidelity"]);
        s.temperatures.push(Temperature::Finite(0.1));
        assert_eq!(s.column_names(), ["gamma_t", "fidelity@nbar=0", "fidelity@nbar=0.1"]);
        s.temperatures = vec![Temperature::Infinite];
        assert_eq!(s.column_names()[0], "nbar_gamma_t");
    }

    #[test]
    fn rows_in_grid_order() {
        let rows = run_sweep(&spec()).unwrap();
        assert_eq!(rows.len(), 5);
        assert!(rows.windows(2).all(|w| w[0][0] < w[1][0]));
        assert!((rows[0][1] - 1.0).abs() < 1e-14);
    }
}
