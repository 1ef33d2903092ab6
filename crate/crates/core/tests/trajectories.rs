use proptest::prelude::*;

use tripartite::analysis::{critical_profile, state_at, CriticalProfile};
use tripartite::bell::{bell_operator, closed_form_expectation, AxisPair, BellQuantity, MeasurementFrame, WwzbClass};
use tripartite::channel::{apply_channel, ReservoirParams, Temperature};
use tripartite::measures::tripartite_negativity;
use tripartite::qmat::expectation;
use tripartite::states::StateBranch;
use tripartite::teleport::{fidelity_ghz, fidelity_w};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closed_forms_match_operators(
        nbar in 0.0..2.0f64,
        gt in 0.0..3.0f64,
        tb in 0.0..6.3f64,
        tc in 0.0..6.3f64,
        w in any::<bool>(),
    ) {
        let branch = if w { StateBranch::W } else { StateBranch::Ghz };
        let params = ReservoirParams::uniform(nbar, gt).unwrap();
        let rho = apply_channel(&branch.initial_state(), &params);
        let frame = MeasurementFrame::new(AxisPair::for_branch(branch), tb, tc);
        for q in BellQuantity::ALL {
            let op = expectation(&bell_operator(q, &frame), &rho).unwrap();
            let cf = closed_form_expectation(branch, q, &params, tb, tc).unwrap();
            prop_assert!((op - cf).abs() < 1e-10, "{branch} {q}: {op} vs {cf}");
        }
    }
}

#[test]
fn closed_forms_reject_unequal_rates() {
    let p = ReservoirParams::new(Temperature::Finite(0.1), [1.0, 0.5, 1.0], 0.3).unwrap();
    for branch in [StateBranch::Ghz, StateBranch::W] {
        assert!(closed_form_expectation(branch, BellQuantity::Svetlichny, &p, 0.0, 0.0).is_err());
    }
}

#[test]
fn trajectories_stay_real() {
    for branch in [StateBranch::Ghz, StateBranch::W] {
        for tau in [0.0, 0.3, 2.0] {
            let rho = state_at(branch, Temperature::Finite(0.2), tau).unwrap();
            assert!(fidelity_ghz(&rho).is_ok() && fidelity_w(&rho).is_ok());
        }
    }
}

fn profiles(branch: StateBranch) -> Vec<CriticalProfile> {
    [0.0, 0.1, 0.2, 0.3]
        .into_iter()
        .map(|n| critical_profile(branch, Temperature::Finite(n)).unwrap())
        .collect()
}

fn bell(p: &CriticalProfile, q: BellQuantity) -> f64 {
    let i = BellQuantity::ALL.iter().position(|&x| x == q).unwrap();
    p.bell[i].tau_gamma
}

#[test]
fn ghz_orderings_and_monotonicity() {
    let ps = profiles(StateBranch::Ghz);
    for p in &ps {
        let s = bell(p, BellQuantity::Svetlichny);
        let p2 = bell(p, BellQuantity::Wwzb(WwzbClass::P2));
        let p3 = bell(p, BellQuantity::Wwzb(WwzbClass::P3));
        let p5 = bell(p, BellQuantity::Wwzb(WwzbClass::P5));
        let t = p.fidelity.tau_gamma;
        assert!(p2 < s && (s - p3).abs() < 1e-8 && s < p5 && p5 < t, "{p:?}");
        if p.negativity.exists {
            assert!(t < p.negativity.tau_gamma);
        }
    }
    assert!(!ps[0].negativity.exists);
    for w in ps.windows(2) {
        for q in [BellQuantity::Svetlichny, BellQuantity::Wwzb(WwzbClass::P5)] {
            assert!(bell(&w[1], q) < bell(&w[0], q));
        }
        assert!(w[1].fidelity.tau_gamma < w[0].fidelity.tau_gamma);
        assert!(w[1].critical_negativity().unwrap() > w[0].critical_negativity().unwrap());
    }
    for w in ps[1..].windows(2) {
        assert!(w[1].negativity.tau_gamma < w[0].negativity.tau_gamma);
    }
}

#[test]
fn w_orderings_and_monotonicity() {
    let ps = profiles(StateBranch::W);
    for p in &ps {
        let s = bell(p, BellQuantity::Svetlichny);
        let p5 = bell(p, BellQuantity::Wwzb(WwzbClass::P5));
        let t = p.fidelity.tau_gamma;
        assert!(s < p5 && p5 < t, "{p:?}");
        if p.negativity.exists {
            assert!(t < p.negativity.tau_gamma);
        }
    }
    for w in ps.windows(2) {
        for q in [BellQuantity::Svetlichny, BellQuantity::Wwzb(WwzbClass::P5)] {
            assert!(bell(&w[1], q) < bell(&w[0], q));
        }
        assert!(w[1].fidelity.tau_gamma < w[0].fidelity.tau_gamma);
        assert!(w[1].critical_negativity().unwrap() < w[0].critical_negativity().unwrap());
    }
}

#[test]
fn entangled_but_useless_window_exists() {
    for branch in [StateBranch::Ghz, StateBranch::W] {
        let p = critical_profile(branch, Temperature::Finite(0.1)).unwrap();
        let mid = if p.negativity.exists {
            0.5 * (p.fidelity.tau_gamma + p.negativity.tau_gamma)
        } else {
            p.fidelity.tau_gamma + 0.5
        };
        let rho = state_at(branch, Temperature::Finite(0.1), mid).unwrap();
        assert!(tripartite_negativity(&rho).unwrap().tripartite > 0.0);
    }
}
