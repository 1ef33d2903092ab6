//! wasm-bindgen bindings behind `www/index.html`.
//!
//! Each exported function has a plain-Rust twin returning `String` errors,
//! which is what the native tests exercise.

use std::f64::consts::TAU;

use wasm_bindgen::prelude::*;

use tripartite::analysis::{critical_profile, state_at, TrackedQuantity};
use tripartite::bell::{maximize_form, AngleForm, AxisPair, BellQuantity, CorrelationTensor, WwzbClass};
use tripartite::channel::Temperature;
use tripartite::measures::tripartite_negativity;
use tripartite::states::StateBranch;
use tripartite::teleport::{fidelity_ghz, fidelity_w};

/// Columns of one [`curves`] row.
pub const CURVE_COLUMNS: [&str; 7] = [
    "gamma_t",
    "negativity",
    "fidelity",
    "svetlichny",
    "wwzb_p2",
    "wwzb_p3",
    "wwzb_p5",
];

const CURVE_BELL: [BellQuantity; 4] = [
    BellQuantity::Svetlichny,
    BellQuantity::Wwzb(WwzbClass::P2),
    BellQuantity::Wwzb(WwzbClass::P3),
    BellQuantity::Wwzb(WwzbClass::P5),
];

fn parse_inputs(branch: &str, nbar: &str) -> Result<(StateBranch, Temperature), String> {
    let branch = branch.parse::<StateBranch>()?;
    let temperature = nbar.parse::<Temperature>().map_err(|e| e.to_string())?;
    Ok((branch, temperature))
}

fn form_at(branch: StateBranch, temperature: Temperature, gamma_t: f64, quantity: BellQuantity) -> Result<AngleForm, String> {
    let rho = state_at(branch, temperature, gamma_t).map_err(|e| e.to_string())?;
    let corr = CorrelationTensor::from_state(&rho).map_err(|e| e.to_string())?;
    Ok(AngleForm::new(quantity, &corr, AxisPair::for_branch(branch)))
}

/// Row-major `steps × 7` table: γt, negativity, fidelity and the clipped
/// S, P2, P3, P5 violations.
pub fn curves_table(branch: &str, nbar: &str, tmax: f64, steps: usize) -> Result<Vec<f64>, String> {
    let (branch, temperature) = parse_inputs(branch, nbar)?;
    if steps < 2 || !(tmax.is_finite() && tmax > 0.0) {
        return Err(format!("need steps >= 2 and tmax > 0, got {steps} and {tmax}"));
    }
    if steps > 5000 {
        return Err("at most 5000 steps".into());
    }
    let mut out = Vec::with_capacity(steps * CURVE_COLUMNS.len());
    for i in 0..steps {
        let gt = tmax * i as f64 / (steps - 1) as f64;
        let rho = state_at(branch, temperature, gt).map_err(|e| e.to_string())?;
        out.push(gt);
        out.push(tripartite_negativity(&rho).map_err(|e| e.to_string())?.tripartite);
        let f = match branch {
            StateBranch::Ghz => fidelity_ghz(&rho),
            StateBranch::W => fidelity_w(&rho),
        };
        out.push(f.map_err(|e| e.to_string())?.f_av);
        let corr = CorrelationTensor::from_state(&rho).map_err(|e| e.to_string())?;
        for q in CURVE_BELL {
            let form = AngleForm::new(q, &corr, AxisPair::for_branch(branch));
            out.push(maximize_form(&form, q).violation);
        }
    }
    Ok(out)
}

/// `⟨B⟩` on a `resolution × resolution` grid over `[0, 2π)²`, θ_B major.
pub fn landscape_grid(branch: &str, nbar: &str, gamma_t: f64, quantity: &str, resolution: usize) -> Result<Vec<f64>, String> {
    let (branch, temperature) = parse_inputs(branch, nbar)?;
    let quantity = quantity.parse::<BellQuantity>()?;
    if !(2..=512).contains(&resolution) {
        return Err(format!("resolution must be in 2..=512, got {resolution}"));
    }
    let form = form_at(branch, temperature, gamma_t, quantity)?;
    let step = TAU / resolution as f64;
    let mut out = Vec::with_capacity(resolution * resolution);
    for i in 0..resolution {
        for j in 0..resolution {
            out.push(form.eval(i as f64 * step, j as f64 * step));
        }
    }
    Ok(out)
}

/// `[θ_B, θ_C, max|⟨B⟩|, bound]` from the grid-plus-refinement search.
pub fn optimum(branch: &str, nbar: &str, gamma_t: f64, quantity: &str) -> Result<Vec<f64>, String> {
    let (branch, temperature) = parse_inputs(branch, nbar)?;
    let quantity = quantity.parse::<BellQuantity>()?;
    let r = maximize_form(&form_at(branch, temperature, gamma_t, quantity)?, quantity);
    Ok(vec![r.best_angles.0, r.best_angles.1, r.max_abs_expectation, quantity.threshold()])
}

/// `[τ_S, τ_P1, .., τ_P5, τ_T, τ_E, N_c]`; `Infinity` for no crossing in
/// the window and `NaN` for never above the bound.
pub fn critical_row(branch: &str, nbar: &str) -> Result<Vec<f64>, String> {
    let (branch, temperature) = parse_inputs(branch, nbar)?;
    let p = critical_profile(branch, temperature).map_err(|e| e.to_string())?;
    let mut row: Vec<f64> = p.bell.iter().map(|r| r.tau_gamma).collect();
    row.push(p.fidelity.tau_gamma);
    row.push(p.negativity.tau_gamma);
    row.push(p.critical_negativity().unwrap_or(f64::NAN));
    Ok(row)
}

fn js(e: String) -> JsError {
    JsError::new(&e)
}

#[wasm_bindgen]
pub fn curve_columns() -> String {
    CURVE_COLUMNS.join(",")
}

#[wasm_bindgen]
pub fn quantity_names() -> String {
    TrackedQuantity::ALL.iter().map(|q| q.name()).collect::<Vec<_>>().join(",")
}

#[wasm_bindgen]
pub fn curves(branch: &str, nbar: &str, tmax: f64, steps: usize) -> Result<Vec<f64>, JsError> {
    curves_table(branch, nbar, tmax, steps).map_err(js)
}

#[wasm_bindgen]
pub fn bell_landscape(branch: &str, nbar: &str, gamma_t: f64, quantity: &str, resolution: usize) -> Result<Vec<f64>, JsError> {
    landscape_grid(branch, nbar, gamma_t, quantity, resolution).map_err(js)
}

#[wasm_bindgen]
pub fn bell_optimum(branch: &str, nbar: &str, gamma_t: f64, quantity: &str) -> Result<Vec<f64>, JsError> {
    optimum(branch, nbar, gamma_t, quantity).map_err(js)
}

#[wasm_bindgen]
pub fn critical_times(branch: &str, nbar: &str) -> Result<Vec<f64>, JsError> {
    critical_row(branch, nbar).map_err(js)
}
