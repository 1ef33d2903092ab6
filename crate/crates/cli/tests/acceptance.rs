//! One test per acceptance criterion. Each test prints a line per check and
//! a final `criterion N: PASS|FAIL` line.

use std::f64::consts::SQRT_2;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tripartite::analysis::{
    closed_form_constants, critical_profile, critical_time, evaluate, state_at, CriticalProfile, TrackedQuantity,
};
use tripartite::bell::{ghz_max_expectation, maximize_violation, AxisPair, BellQuantity, WwzbClass};
use tripartite::channel::{apply_channel, lindblad_integrate, three_qubit_kraus, ReservoirParams, Temperature};
use tripartite::measures::{analytic_negativity_ghz, tripartite_negativity};
use tripartite::qmat::{hermitian_eigenvalues, ComplexMatrix};
use tripartite::states::{ghz_state, w_state, StateBranch};
use tripartite::teleport::{
    analytic_fidelity_ghz, fidelity_ghz, fidelity_w, zero_temperature_fidelity_w, CLASSICAL_FIDELITY,
};
use tripartite_cli::figures::write_figures;
use tripartite_cli::plot::parse_table;

const NBARS: [f64; 4] = [0.0, 0.1, 0.2, 0.3];

struct Criterion {
    id: u32,
    failures: Vec<String>,
}

impl Criterion {
    fn new(id: u32) -> Self {
        Criterion { id, failures: Vec::new() }
    }

    fn check(&mut self, label: &str, ok: bool, detail: String) {
        println!("  [{}] {label}: {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failures.push(format!("{label}: {detail}"));
        }
    }

    /// `|got − want| ≤ tol`
    fn close(&mut self, label: &str, got: f64, want: f64, tol: f64) {
        let diff = (got - want).abs();
        self.check(label, diff <= tol, format!("got {got:.12}, want {want:.12}, |diff| {diff:.3e} (tol {tol:e})"));
    }

    fn finish(self) {
        let ok = self.failures.is_empty();
        println!("criterion {}: {}", self.id, if ok { "PASS" } else { "FAIL" });
        assert!(ok, "criterion {} failed:\n{}", self.id, self.failures.join("\n"));
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn tau(branch: StateBranch, q: TrackedQuantity, t: Temperature) -> f64 {
    let r = critical_time(branch, q, t).unwrap();
    assert!(r.exists, "{branch} {q} at n̄={t}: {r:?}");
    r.tau_gamma
}

fn bell(q: BellQuantity) -> TrackedQuantity {
    TrackedQuantity::Bell(q)
}

#[test]
fn criterion_01_channel_validity() {
    let mut c = Criterion::new(1);
    let mut r = rng(1);
    let (mut worst_kraus, mut worst_trace, mut worst_eig) = (0.0f64, 0.0f64, f64::INFINITY);
    for _ in 0..1000 {
        let params = ReservoirParams::uniform(r.gen_range(0.0..=5.0), r.gen_range(0.0..=10.0)).unwrap();
        let mut sum = ComplexMatrix::zeros(8);
        for g in three_qubit_kraus(&params) {
            sum += &g.adjoint().matmul(&g);
        }
        worst_kraus = worst_kraus.max(sum.max_abs_diff(&ComplexMatrix::identity(8)));
        for rho in [ghz_state(), w_state()] {
            let out = apply_channel(&rho, &params);
            worst_trace = worst_trace.max((out.trace().re - 1.0).abs());
            worst_eig = worst_eig.min(hermitian_eigenvalues(&out).unwrap().min());
        }
    }
    c.check("Kraus completeness", worst_kraus <= 1e-12, format!("max deviation {worst_kraus:.3e}"));
    c.check("output trace", worst_trace <= 1e-12, format!("max |tr−1| {worst_trace:.3e}"));
    c.check("positivity", worst_eig >= -1e-10, format!("min eigenvalue {worst_eig:.3e}"));
    c.finish();
}

#[test]
fn criterion_02_lindblad_matches_kraus() {
    let mut c = Criterion::new(2);
    let mut worst = 0.0f64;
    for nbar in [0.0, 0.1, 0.3, 1.0] {
        for gt in [0.1, 0.5, 1.0, 2.0] {
            let params = ReservoirParams::uniform(nbar, gt).unwrap();
            for rho in [ghz_state(), w_state()] {
                let integrated = lindblad_integrate(&rho, &params, 4000).unwrap();
                worst = worst.max(integrated.max_abs_diff(&apply_channel(&rho, &params)));
            }
        }
    }
    c.check("entrywise agreement", worst <= 1e-8, format!("max |Δρ| {worst:.3e} over 32 points"));
    c.finish();
}

#[test]
fn criterion_03_analytic_ghz() {
    let mut c = Criterion::new(3);
    let mut r = rng(3);
    let (mut worst_n, mut worst_f) = (0.0f64, 0.0f64);
    for _ in 0..500 {
        let params = ReservoirParams::uniform(r.gen_range(0.0..=5.0), r.gen_range(0.0..=10.0)).unwrap();
        let rho = apply_channel(&ghz_state(), &params);
        let n = tripartite_negativity(&rho).unwrap().tripartite;
        worst_n = worst_n.max((n - analytic_negativity_ghz(&params).unwrap()).abs());
        let f = fidelity_ghz(&rho).unwrap().f_av;
        worst_f = worst_f.max((f - analytic_fidelity_ghz(&params).unwrap().f_av).abs());
    }
    c.check("negativity", worst_n <= 1e-9, format!("max |Δ| {worst_n:.3e}"));
    c.check("fidelity", worst_f <= 1e-9, format!("max |Δ| {worst_f:.3e}"));
    c.finish();
}

#[test]
fn criterion_04_ghz_critical_values() {
    let mut c = Criterion::new(4);
    let k = closed_form_constants();
    let cold = Temperature::Finite(0.0);
    let r = critical_time(StateBranch::Ghz, TrackedQuantity::Fidelity, cold).unwrap();
    c.close("γτ_T(n̄=0) vs ln[(3+√5)/2]", r.tau_gamma, ((3.0 + 5f64.sqrt()) / 2.0).ln(), 1e-9);
    let nc = r.n_at_tau.unwrap();
    c.close("N_c(n̄=0) vs (2−√5+√(197−88√5))/4", nc, (2.0 - 5f64.sqrt() + (197.0 - 88.0 * 5f64.sqrt()).sqrt()) / 4.0, 1e-9);
    c.close("N_c(n̄=0) vs 0.0598", nc, 0.0598, 5e-5);

    let hot = critical_time(StateBranch::Ghz, TrackedQuantity::Fidelity, Temperature::Infinite).unwrap();
    let p = (-hot.tau_gamma).exp();
    c.close("infinite n̄: p at F=2/3 solves p⁴+2p³=1", p.powi(4) + 2.0 * p.powi(3), 1.0, 1e-9);
    c.close("infinite n̄: p vs root oracle", p, k.ghz_infinite_p, 1e-9);
    c.close("infinite n̄: p vs 0.7166", p, 0.7166, 5e-5);
    c.close("infinite n̄: N_c vs 0.0920", hot.n_at_tau.unwrap(), 0.0920, 5e-5);
    c.finish();
}

#[test]
fn criterion_05_ghz_bell_death_times() {
    let mut c = Criterion::new(5);
    let k = closed_form_constants();
    for nbar in NBARS {
        let t = Temperature::Finite(nbar);
        let scale = 3.0 * (2.0 * nbar + 1.0);
        for (name, q, want) in [
            ("S → ln 2", BellQuantity::Svetlichny, k.ghz_svetlichny_scaled),
            ("P2 → ln(5/4)", BellQuantity::Wwzb(WwzbClass::P2), k.ghz_p2_scaled),
            ("P5 → ln 4", BellQuantity::Wwzb(WwzbClass::P5), k.ghz_p5_scaled),
        ] {
            let got = scale * tau(StateBranch::Ghz, bell(q), t);
            c.close(&format!("n̄={nbar} 3(2n̄+1)γτ {name}"), got, want, 1e-8);
        }
    }
    let mut worst = 0.0f64;
    for nbar in NBARS {
        for i in 0..=400 {
            let rho = state_at(StateBranch::Ghz, Temperature::Finite(nbar), 20.0 * i as f64 / 400.0).unwrap();
            for q in [WwzbClass::P1, WwzbClass::P4] {
                let v = maximize_violation(&rho, BellQuantity::Wwzb(q), AxisPair::YX).unwrap().violation;
                worst = worst.max(v);
            }
        }
    }
    c.check("P1, P4 violation on γt∈[0,20]", worst == 0.0, format!("max violation {worst:e}"));
    c.finish();
}

#[test]
fn criterion_06_ghz_maximal_expectations() {
    let mut c = Criterion::new(6);
    let mut r = rng(6);
    for q in [
        BellQuantity::Svetlichny,
        BellQuantity::Wwzb(WwzbClass::P2),
        BellQuantity::Wwzb(WwzbClass::P3),
    ] {
        let mut worst = 0.0f64;
        for _ in 0..50 {
            let (nbar, gt) = (r.gen_range(0.0..=1.0), r.gen_range(0.0..=1.0));
            let params = ReservoirParams::uniform(nbar, gt).unwrap();
            let got = maximize_violation(&apply_channel(&ghz_state(), &params), q, AxisPair::YX)
                .unwrap()
                .max_abs_expectation;
            let coeff = match q {
                BellQuantity::Svetlichny => 4.0 * SQRT_2,
                BellQuantity::Wwzb(WwzbClass::P2) => 5f64.sqrt(),
                _ => 2.0 * SQRT_2,
            };
            let want = coeff * (-1.5 * (2.0 * nbar + 1.0) * gt).exp();
            assert!((want - ghz_max_expectation(q, &params).unwrap()).abs() < 1e-14);
            worst = worst.max((got - want).abs());
        }
        c.check(&format!("|⟨{q}⟩|max over 50 points"), worst <= 1e-7, format!("max |Δ| {worst:.3e}"));
    }
    c.finish();
}

#[test]
fn criterion_07_w_critical_values() {
    let mut c = Criterion::new(7);
    let k = closed_form_constants();
    let cold = Temperature::Finite(0.0);
    let f = critical_time(StateBranch::W, TrackedQuantity::Fidelity, cold).unwrap();
    c.close("γτ_T vs ln(5/3)", f.tau_gamma, (5.0f64 / 3.0).ln(), 1e-9);
    c.close("N_c vs 0.0891", f.n_at_tau.unwrap(), 0.0891, 5e-5);
    let ts = tau(StateBranch::W, bell(BellQuantity::Svetlichny), cold);
    c.close("γτ_S vs 0.00891", ts, 0.00891, 5e-6);
    let closed = ((16.0 + 20.0 * SQRT_2) / (4.0 + 9.0 * SQRT_2 + (274.0 + 328.0 * SQRT_2).sqrt())).ln();
    c.close("γτ_S vs closed form", ts, closed, 1e-9);
    let t5 = tau(StateBranch::W, bell(BellQuantity::Wwzb(WwzbClass::P5)), cold);
    c.close("γτ_BP5 vs 0.10785", t5, 0.10785, 5e-6);
    c.close("γτ_BP5 vs closed form", t5, k.w_tau_p5_zero, 1e-9);

    let mut worst = 0.0f64;
    for i in 0..=500 {
        let params = ReservoirParams::uniform(0.0, 10.0 * i as f64 / 500.0).unwrap();
        let p = params.uniform_decay_factor().unwrap();
        let got = fidelity_w(&apply_channel(&w_state(), &params)).unwrap().f_av;
        worst = worst.max((got - zero_temperature_fidelity_w(p)).abs());
    }
    c.check("F_av(ρ_W) vs 5p⁴/6 − p²/2 + 2/3", worst <= 1e-10, format!("max |Δ| {worst:.3e}"));

    let hot = critical_time(StateBranch::W, TrackedQuantity::Fidelity, Temperature::Infinite).unwrap();
    c.close("infinite n̄: n̄γτ_T vs 0.3257", hot.tau_gamma, 0.3257, 5e-5);
    c.close("infinite n̄: N_c vs 0.0404", hot.n_at_tau.unwrap(), 0.0404, 5e-5);
    c.finish();
}

#[test]
fn criterion_08_w_bell_structure() {
    let mut c = Criterion::new(8);
    for class in [WwzbClass::P1, WwzbClass::P2, WwzbClass::P4] {
        let mut worst = 0.0f64;
        for nbar in NBARS {
            for i in 0..=500 {
                let rho = state_at(StateBranch::W, Temperature::Finite(nbar), 5.0 * i as f64 / 500.0).unwrap();
                let v = maximize_violation(&rho, BellQuantity::Wwzb(class), AxisPair::ZX).unwrap().violation;
                worst = worst.max(v);
            }
        }
        c.check(&format!("{class:?} never violated"), worst == 0.0, format!("max violation {worst:e}"));
    }
    let s0 = maximize_violation(&w_state(), BellQuantity::Svetlichny, AxisPair::ZX).unwrap();
    c.close("|⟨S⟩|(t=0) vs 2 + 3√2/2", s0.max_abs_expectation, 2.0 + 1.5 * SQRT_2, 1e-10);
    c.finish();
}

fn bell_tau(p: &CriticalProfile, q: BellQuantity) -> f64 {
    p.bell[BellQuantity::ALL.iter().position(|&x| x == q).unwrap()].tau_gamma
}

#[test]
fn criterion_09_orderings() {
    let mut c = Criterion::new(9);
    let s = BellQuantity::Svetlichny;
    let [p2, p3, p5] = [WwzbClass::P2, WwzbClass::P3, WwzbClass::P5].map(BellQuantity::Wwzb);
    for branch in [StateBranch::Ghz, StateBranch::W] {
        let profiles: Vec<CriticalProfile> = NBARS
            .iter()
            .map(|&n| critical_profile(branch, Temperature::Finite(n)).unwrap())
            .collect();
        for (nbar, p) in NBARS.iter().zip(&profiles) {
            let t = p.fidelity.tau_gamma;
            let e = p.negativity.tau_gamma;
            let e_ok = !p.negativity.exists || t < e;
            let ok = match branch {
                StateBranch::Ghz => {
                    bell_tau(p, p2) < bell_tau(p, s)
                        && (bell_tau(p, s) - bell_tau(p, p3)).abs() < 1e-9
                        && bell_tau(p, s) < bell_tau(p, p5)
                        && bell_tau(p, p5) < t
                        && e_ok
                }
                StateBranch::W => bell_tau(p, s) < bell_tau(p, p5) && bell_tau(p, p5) < t && e_ok,
            };
            c.check(
                &format!("{branch} n̄={nbar} ordering"),
                ok,
                format!(
                    "τ_S={:.6} τ_P2={:.6} τ_P3={:.6} τ_P5={:.6} τ_T={t:.6} τ_E={e:.6}",
                    bell_tau(p, s),
                    bell_tau(p, p2),
                    bell_tau(p, p3),
                    bell_tau(p, p5)
                ),
            );
        }
        let mut mono = true;
        for w in profiles.windows(2) {
            let finite_pairs = [
                (bell_tau(&w[0], s), bell_tau(&w[1], s)),
                (bell_tau(&w[0], p3), bell_tau(&w[1], p3)),
                (bell_tau(&w[0], p5), bell_tau(&w[1], p5)),
                (w[0].fidelity.tau_gamma, w[1].fidelity.tau_gamma),
                (w[0].negativity.tau_gamma, w[1].negativity.tau_gamma),
            ];
            let mut maybe = finite_pairs.to_vec();
            if branch == StateBranch::Ghz {
                maybe.push((bell_tau(&w[0], p2), bell_tau(&w[1], p2)));
            }
            mono &= maybe.iter().all(|&(a, b)| b < a);
        }
        c.check(&format!("{branch} times decrease with n̄"), mono, String::new());
        let nc: Vec<f64> = profiles.iter().map(|p| p.critical_negativity().unwrap()).collect();
        let nc_ok = match branch {
            StateBranch::Ghz => nc.windows(2).all(|w| w[1] > w[0]),
            StateBranch::W => nc.windows(2).all(|w| w[1] < w[0]),
        };
        c.check(&format!("{branch} N_c monotone"), nc_ok, format!("{nc:?}"));

        for (&nbar, p) in NBARS.iter().zip(&profiles) {
            let temp = Temperature::Finite(nbar);
            let horizon = p.fidelity.tau_gamma * 1.5;
            let mut nonlocal_points = 0;
            let mut nonlocal_ok = true;
            let mut useless_entangled = 0;
            for i in 0..=300 {
                let gt = horizon * i as f64 / 300.0;
                let rho = state_at(branch, temp, gt).unwrap();
                let f = evaluate(branch, TrackedQuantity::Fidelity, &rho).unwrap();
                let nonlocal = BellQuantity::ALL
                    .iter()
                    .any(|&q| maximize_violation(&rho, q, AxisPair::for_branch(branch)).unwrap().violation > 0.0);
                if nonlocal {
                    nonlocal_points += 1;
                    nonlocal_ok &= f > CLASSICAL_FIDELITY;
                }
                if f < CLASSICAL_FIDELITY && tripartite_negativity(&rho).unwrap().tripartite > 0.0 {
                    useless_entangled += 1;
                }
            }
            c.check(
                &format!("{branch} n̄={nbar} Bell-nonlocal ⇒ F_av > 2/3"),
                nonlocal_ok && nonlocal_points > 0,
                format!("{nonlocal_points} nonlocal grid points"),
            );
            c.check(
                &format!("{branch} n̄={nbar} entangled with F_av < 2/3"),
                useless_entangled > 0,
                format!("{useless_entangled} grid points"),
            );
        }
    }
    c.finish();
}

fn compare_tables(c: &mut Criterion, name: &str, got: &Path, golden: &Path) {
    let got_text = std::fs::read_to_string(got).unwrap();
    let golden_text = std::fs::read_to_string(golden).unwrap();
    let meta = |s: &str| s.lines().filter(|l| l.starts_with('#')).map(str::to_string).collect::<Vec<_>>();
    let (a, b) = (parse_table(&got_text).unwrap(), parse_table(&golden_text).unwrap());
    let shape_ok = meta(&got_text) == meta(&golden_text)
        && a.columns == b.columns
        && a.rows.len() == b.rows.len()
        && a.rows.iter().zip(&b.rows).all(|(x, y)| x.len() == y.len());
    let mut worst = 0.0f64;
    let mut sentinels_ok = true;
    if shape_ok {
        for (x, y) in a.rows.iter().zip(&b.rows) {
            for (&u, &v) in x.iter().zip(y) {
                if u.is_finite() && v.is_finite() {
                    worst = worst.max((u - v).abs() / v.abs().max(1.0));
                } else {
                    sentinels_ok &= u.to_bits() == v.to_bits() || (u.is_nan() && v.is_nan());
                }
            }
        }
    }
    c.check(
        &format!("{name} matches golden"),
        shape_ok && sentinels_ok && worst <= 1e-12,
        format!("{} rows × {} columns, max rel diff {worst:.3e}", a.rows.len(), a.columns.len()),
    );
}

#[test]
fn criterion_10_figure_reproduction() {
    let mut c = Criterion::new(10);
    let dir = tempfile::tempdir().unwrap();
    let written = write_figures(dir.path()).unwrap();
    let golden_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for path in &written {
        let name = path.file_name().unwrap().to_str().unwrap();
        compare_tables(&mut c, name, path, &golden_dir.join(name));
    }
    for stem in ["fig1", "fig2", "fig3", "fig4", "fig5"] {
        let table = parse_table(&std::fs::read_to_string(dir.path().join(format!("{stem}.csv"))).unwrap()).unwrap();
        let svg = std::fs::read_to_string(dir.path().join(format!("{stem}.svg"))).unwrap();
        let lines = svg.matches("<polyline").count();
        c.check(
            &format!("{stem}.svg"),
            lines == table.columns.len() - 1,
            format!("{lines} polylines for {} data columns", table.columns.len() - 1),
        );
    }

    // the golden fidelity curves agree with the closed forms
    let fig1 = parse_table(&std::fs::read_to_string(golden_dir.join("fig1.csv")).unwrap()).unwrap();
    let fig4 = parse_table(&std::fs::read_to_string(golden_dir.join("fig4.csv")).unwrap()).unwrap();
    let mut worst = 0.0f64;
    for (k, &nbar) in NBARS.iter().enumerate() {
        let col = fig1.columns.iter().position(|n| *n == format!("fidelity@nbar={nbar}")).unwrap();
        assert_eq!(col, 2 + 2 * k);
        for row in &fig1.rows {
            let want = analytic_fidelity_ghz(&ReservoirParams::uniform(nbar, row[0]).unwrap()).unwrap().f_av;
            worst = worst.max((row[col] - want).abs());
        }
    }
    let col = fig4.columns.iter().position(|n| n == "fidelity@nbar=0").unwrap();
    for row in &fig4.rows {
        let p = ReservoirParams::uniform(0.0, row[0]).unwrap().uniform_decay_factor().unwrap();
        worst = worst.max((row[col] - zero_temperature_fidelity_w(p)).abs());
    }
    c.check("golden fidelity curves vs closed forms", worst <= 1e-12, format!("max |Δ| {worst:.3e}"));
    c.finish();
}
