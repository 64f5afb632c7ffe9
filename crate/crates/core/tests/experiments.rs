mod common;

use num_complex::Complex64;

use double_irs::analysis::{double_gain_closed_form, to_db, LinkDistances};
use double_irs::channel::{far_field_matrix, RicianFactor};
use double_irs::experiments::{
    evaluate_double, evaluate_single, run_crossover_search, run_rician_study, run_split_sweep, Case,
    CrossoverOutcome, DoubleIrsLink, RicianStudy, ScenarioConfig, SingleIrsLink,
};

use common::*;

/// Exact two-IRS effective channel recomputed from positions alone.
fn oracle_double(k1: usize, k2: usize) -> f64 {
    let (a1, b1) = near_square(k1);
    let (a2, b2) = near_square(k2);
    let x1 = grid_positions(V1, N1A, N1B, a1, b1);
    let x2 = grid_positions(V2, N2A, N2B, a2, b2);
    let t: Vec<Complex64> = x1.iter().map(|&p| los_entry(dist(BS, p))).collect();
    let r: Vec<Complex64> = x2.iter().map(|&p| los_entry(dist(USER, p))).collect();
    // far-field signatures from the anchor direction
    let u = [V2[0] - V1[0], V2[1] - V1[1], V2[2] - V1[2]];
    let n = dist(V1, V2);
    let cosine = |d: [f64; 3]| (u[0] * d[0] + u[1] * d[1] + u[2] * d[2]) / n;
    let phase = |ka: usize, kb: usize, ca: f64, cb: f64| 2.0 * std::f64::consts::PI * SPACING * (ka as f64 * ca + kb as f64 * cb) / LAMBDA;
    let phi1: Vec<Complex64> = (0..k1)
        .map(|k| {
            let g = Complex64::from_polar(1.0, phase(k % a1, k / a1, cosine(N1A), cosine(N1B)));
            (g * t[k] / t[k].norm()).conj()
        })
        .collect();
    let phi2: Vec<Complex64> = (0..k2)
        .map(|k| {
            let g = Complex64::from_polar(1.0, -phase(k % a2, k / a2, cosine(N2A), cosine(N2B)));
            (r[k] * g / r[k].norm()).conj()
        })
        .collect();
    let s: Vec<Vec<Complex64>> = x2.iter().map(|&q| x1.iter().map(|&p| los_entry(dist(q, p))).collect()).collect();
    brute_cascade(&r, &phi2, &s, &phi1, &t).norm_sqr()
}

#[test]
fn double_link_matches_an_independent_recomputation() {
    let s = ScenarioConfig::reference();
    for (k1, k2) in [(1, 1), (12, 20), (64, 64), (100, 36)] {
        let lib = evaluate_double(&s, k1, k2).unwrap().power_gain;
        let want = oracle_double(k1, k2);
        assert!((lib / want - 1.0).abs() < 1e-9, "{k1}x{k2}: {lib} vs {want}");
    }
}

#[test]
fn single_link_is_the_coherent_sum() {
    let s = ScenarioConfig::reference();
    let (a, b) = near_square(400);
    let x = grid_positions(V2, N2A, N2B, a, b);
    let want: f64 = x.iter().map(|&p| (ALPHA.sqrt() / dist(BS, p)) * (ALPHA.sqrt() / dist(USER, p))).sum();
    let got = evaluate_single(&s, 400).unwrap().value;
    assert!((got.re / want - 1.0).abs() < 1e-12);
    assert!(got.im.abs() < 1e-12 * want);
}

#[test]
fn far_field_cascade_reaches_the_rank_one_bound() {
    let s = ScenarioConfig::reference();
    let link = DoubleIrsLink::new(&s, 100, 100).unwrap();
    let h = link.through(&far_field_matrix(&link.signatures)).unwrap().value;
    let st: f64 = link.t.iter().map(|z| z.norm()).sum();
    let sr: f64 = link.r.iter().map(|z| z.norm()).sum();
    let bound = link.signatures.scale.norm() * st * sr;
    assert!((h.norm() / bound - 1.0).abs() < 1e-12);
}

#[test]
fn sweep_peaks_at_the_balanced_split_and_tracks_the_closed_form() {
    let s = ScenarioConfig::reference();
    let res = run_split_sweep(&s, 1600, 100, 0).unwrap();
    assert_eq!(res.rows.len(), 15);
    assert_eq!(res.best_row().unwrap().k1, 800);
    assert_eq!(res.scenario_digest, s.digest());
    let row = res.rows.iter().find(|r| r.k1 == 800).unwrap();
    // closed form at the nominal distances 1, 100 and 15 m
    let d = LinkDistances::new(1.0, 100.0, 15.0).unwrap();
    let nominal = to_db(double_gain_closed_form(800.0, 800.0, &d, ALPHA)) + 43.0 + 60.0;
    assert!((nominal - 16.3383).abs() < 1e-3, "{nominal}");
    assert!((row.snr_exact_db - nominal).abs() < 1.5);
    for r in &res.rows {
        assert!((r.snr_exact_db - r.snr_closed_form_db).abs() < 1.5, "{r:?}");
    }
}

#[test]
fn crossover_brackets_the_first_win() {
    let s = ScenarioConfig::reference();
    let res = run_crossover_search(&s, 600, 1100, 20).unwrap();
    let CrossoverOutcome::Bracketed { k_star, k_below, k_above } = res.outcome else {
        panic!("{:?}", res.outcome)
    };
    assert_eq!(k_above, k_below + 20);
    assert!(k_below as f64 <= k_star && k_star <= k_above as f64);
    for r in &res.rows {
        assert_eq!(r.snr_double_db >= r.snr_single_db, r.k >= k_above, "{r:?}");
    }
}

#[test]
fn rician_study_with_los_only_is_deterministic_and_exact() {
    let s = ScenarioConfig::reference();
    let study = RicianStudy::new(36, 36, vec![RicianFactor::LOS], 5, 0);
    let res = run_rician_study(&s, &study).unwrap();
    assert_eq!(res.len(), 2);
    assert_eq!(res[0].case, Case::Double);
    assert_eq!(res[0].std_err_db, 0.0);
    let double = evaluate_double(&s, 36, 36).unwrap();
    assert!((res[0].mean_snr_db - (to_db(double.power_gain) + 103.0)).abs() < 1e-9);
    let single = SingleIrsLink::new(&s, 72).unwrap().los_channel(&s).unwrap();
    assert!((res[1].mean_snr_db - (to_db(single.power_gain) + 103.0)).abs() < 1e-9);
}

#[test]
fn rician_mean_matches_the_second_moment() {
    let s = ScenarioConfig::reference();
    let link = DoubleIrsLink::new(&s, 64, 64).unwrap();
    let h_los = link.los_channel().unwrap().value;
    let d: Vec<Vec<f64>> = link.inter.distances().chunks(64).map(|c| c.to_vec()).collect();
    let mut study = RicianStudy::new(64, 64, vec![RicianFactor::new(0.0).unwrap(), RicianFactor::new(2.0).unwrap()], 4000, 21);
    study.keep_trials = true;
    let res = run_rician_study(&s, &study).unwrap();
    for (r, tau) in res.iter().filter(|r| r.case == Case::Double).zip([0.0, 2.0]) {
        let want = to_db(rician_second_moment(h_los, link.r.as_slice(), link.t.as_slice(), &d, tau)) + 103.0;
        assert!((r.mean_snr_db - want).abs() < 4.0 * r.std_err_db.max(1e-3), "tau {tau}: {} vs {want}", r.mean_snr_db);
        assert_eq!(r.per_trial_snr_db.as_ref().unwrap().len(), 4000);
    }
}

#[test]
fn invalid_study_parameters_are_rejected() {
    let s = ScenarioConfig::reference();
    assert!(run_rician_study(&s, &RicianStudy::new(4, 4, vec![], 10, 0)).is_err());
    assert!(run_rician_study(&s, &RicianStudy::new(4, 4, vec![RicianFactor::LOS], 0, 0)).is_err());
    assert!(run_split_sweep(&s, 100, 0, 0).is_err());
}
