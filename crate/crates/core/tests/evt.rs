mod common;

use burr_records::distributions::{quantile, MemberId, Params};
use burr_records::evt::{
    aux_b, aux_b_numeric, aux_s, aux_s_numeric, classify, gev_cdf, hb_limit, mean_excess, probe_gamma, Transform,
};
use common::params;

fn gumbel_quartet() -> Vec<(MemberId, Params)> {
    vec![
        (MemberId::V, params(&[("k", 1.0), ("r", 1.0)])),
        (MemberId::VI, params(&[("k", 2.0), ("r", 0.5)])),
        (MemberId::X, params(&[("r", 1.0)])),
        (MemberId::Xa, params(&[("r", 3.0)])),
    ]
}

#[test]
fn classification_table() {
    let p = params(&[("k", 2.0), ("c", 3.0), ("r", 4.0)]);
    let expect = [
        (MemberId::I, -1.0, Transform::None),
        (MemberId::II, 1.0, Transform::Log),
        (MemberId::III, 0.5, Transform::None),
        (MemberId::IV, -3.0, Transform::None),
        (MemberId::V, 0.0, Transform::None),
        (MemberId::VI, 0.0, Transform::None),
        (MemberId::VII, 0.5, Transform::Log),
        (MemberId::VIII, 1.0, Transform::Log),
        (MemberId::IX, 0.25, Transform::Log),
        (MemberId::X, 0.0, Transform::None),
        (MemberId::XI, -1.0 / 3.0, Transform::None),
        (MemberId::XII, 1.0 / 12.0, Transform::None),
        (MemberId::Xa, 0.0, Transform::None),
    ];
    for (m, g, t) in expect {
        let d = classify(m, &p).unwrap();
        assert_eq!((d.gamma, d.transform), (g, t), "{m}");
    }
}

#[test]
fn gev_is_a_cdf() {
    for &g in &[-1.0, -0.3, 0.0, 0.5, 1.0] {
        let xs: Vec<f64> = (-400..=400).map(|i| i as f64 * 0.05).collect();
        let fs: Vec<f64> = xs.iter().map(|&x| gev_cdf(g, x)).collect();
        assert!(fs.windows(2).all(|w| w[0] <= w[1]));
        assert!(fs.iter().all(|f| (0.0..=1.0).contains(f)));
        assert!(gev_cdf(g, -1e6) < 1e-12 && gev_cdf(g, 1e6) > 1.0 - 1e-5, "{g}");
    }
}

#[test]
fn probe_examples() {
    let e = probe_gamma(MemberId::III, &params(&[("k", 2.0), ("r", 1.0)]), 2.0, &[1e-6]).unwrap();
    assert!((e[0].estimate - 0.5).abs() <= 0.005);
    let e = probe_gamma(MemberId::X, &params(&[("r", 1.0)]), 2.0, &[1e-6]).unwrap();
    assert!((e[0].estimate - 0.5).abs() <= 0.02);
}

#[test]
fn probes_track_gamma_for_heavy_and_bounded_tails() {
    let p = params(&[("k", 2.0), ("c", 2.5), ("r", 1.5)]);
    for m in MemberId::BURR {
        let d = classify(m, &p).unwrap();
        if d.gamma == 0.0 {
            continue;
        }
        let e = probe_gamma(m, &p, 2.0, &[1e-6]).unwrap();
        assert!((e[0].estimate - d.gamma).abs() < 0.05, "{m} {}", e[0].estimate);
    }
}

#[test]
fn closed_form_s_matches_finite_difference() {
    for (m, p) in gumbel_quartet() {
        for &u in &[1e-2, 1e-3, 1e-4, 1e-5, 1e-6] {
            let a = aux_s(m, &p, u).unwrap();
            let b = aux_s_numeric(m, &p, u).unwrap();
            assert!(((a - b) / b).abs() < 1e-6, "{m} u={u} {a} {b}");
        }
    }
}

#[test]
fn s_leading_behaviour_of_burr_x() {
    let p = params(&[("r", 1.0)]);
    for &u in &[1e-6, 1e-10, 1e-14] {
        let s = aux_s(MemberId::X, &p, u).unwrap();
        assert!((s * 2.0 * (1.0 / u).ln().sqrt() - 1.0).abs() < 1e-5);
    }
}

#[test]
fn s_and_b_shrink_toward_zero() {
    for (m, p) in gumbel_quartet() {
        let s: Vec<f64> = (2..=8).map(|j| aux_s(m, &p, 10f64.powi(-j)).unwrap()).collect();
        assert!(s.windows(3).all(|w| w[2] < w[0]), "{m} {s:?}");
    }
    let p = params(&[("k", 1.5), ("c", 2.5), ("r", 0.7)]);
    for m in [MemberId::I, MemberId::II, MemberId::III, MemberId::IV, MemberId::VII, MemberId::VIII, MemberId::IX, MemberId::XI, MemberId::XII] {
        let b: Vec<f64> = (2..=8).map(|j| aux_b(m, &p, 10f64.powi(-j)).unwrap().abs()).collect();
        if m == MemberId::I {
            assert!(b.iter().all(|&x| x < 1e-14));
            continue;
        }
        assert!(b.windows(3).all(|w| w[2] < w[0]), "{m} {b:?}");
    }
}

#[test]
fn b_matches_finite_difference() {
    let p = params(&[("k", 1.5), ("c", 2.5), ("r", 0.7)]);
    for m in [MemberId::II, MemberId::III, MemberId::IV, MemberId::VII, MemberId::VIII, MemberId::IX, MemberId::XI, MemberId::XII] {
        for &u in &[1e-2, 1e-3, 1e-4] {
            let a = aux_b(m, &p, u).unwrap();
            let b = aux_b_numeric(m, &p, u).unwrap();
            assert!((a - b).abs() < 1e-8 + 1e-5 * a.abs(), "{m} u={u} {a} {b}");
        }
    }
}

#[test]
fn b_examples() {
    assert!(aux_b(MemberId::I, &Params::new(), 0.01).unwrap().abs() < 1e-14);
    // XII with r = c = 1: Q(1-u) = 1/u - 1 gives b(u) = u/(1-u) exactly.
    let u = 1e-3;
    let b = aux_b(MemberId::XII, &params(&[("r", 1.0), ("c", 1.0)]), u).unwrap();
    assert!((b - u / (1.0 - u)).abs() < 1e-12);
    let b = aux_b(MemberId::III, &params(&[("k", 1.0), ("r", 1.0)]), u).unwrap();
    assert!(b.abs() <= 10.0 * u);
}

#[test]
fn mean_excess_limits() {
    let r = mean_excess(MemberId::XII, &params(&[("r", 3.0), ("c", 1.0)]), 1e3).unwrap();
    assert!((r / 1e3 - 0.5).abs() < 0.01);
    let r = mean_excess(MemberId::II, &params(&[("r", 1.0)]), 20.0).unwrap();
    assert!((r - 1.0).abs() < 1e-3);
    // Uniform against the closed form (1 - x)/2 and XI against direct quadrature of the survival.
    for &x in &[0.1, 0.5, 0.9] {
        let r = mean_excess(MemberId::I, &Params::new(), x).unwrap();
        assert!((r - (1.0 - x) / 2.0).abs() < 1e-9);
    }
    let x = quantile(MemberId::VII, &params(&[("r", 1.0)]), 0.999).unwrap();
    let r = mean_excess(MemberId::VII, &params(&[("r", 1.0)]), x).unwrap();
    assert!((r - 0.5).abs() < 1e-2, "{r}");
}

#[test]
fn hb_sequences() {
    let s = hb_limit(MemberId::V, &params(&[("k", 1.0), ("r", 1.0)]), &[100, 1000, 10000]).unwrap();
    assert!(s.windows(2).all(|w| w[1] < w[0]));
    let s = hb_limit(MemberId::VI, &params(&[("k", 1.0), ("r", 1.0)]), &[10000]).unwrap();
    assert!(s[0] <= 0.1);
    let s = hb_limit(MemberId::X, &params(&[("r", 1.0)]), &[100]).unwrap();
    assert!((s[0] - 0.5).abs() < 1e-12);
}
