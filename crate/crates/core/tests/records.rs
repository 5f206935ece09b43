mod common;

use approx::assert_relative_eq;
use burr_records::asymptotics::ks_two_sample;
use burr_records::distributions::{quantile_tail, FixedUniforms, MemberId, Params};
use burr_records::records::{
    extract_records, record_path, replication_rng, simulate_record, simulate_records, stream_records, RecordDraw,
    STREAM_CAP,
};
use common::{params, record_params};
use proptest::prelude::*;

#[test]
fn forced_unit_exponentials() {
    // U = e^{-1} makes every E_j exactly -ln(e^{-1}).
    let e1 = -(-1.0f64).exp().ln();
    let mut src = FixedUniforms::new(vec![(-1.0f64).exp()]);
    let d = simulate_record(MemberId::I, &Params::new(), 3, &mut src).unwrap();
    assert_relative_eq!(d.value, 0.950_212_931_632_136, epsilon = 1e-12);
    assert_relative_eq!(d.s_n, 3.0 * e1, epsilon = 1e-15);

    let p = params(&[("r", 1.0), ("c", 1.0)]);
    for n in [5u64, 30, 200] {
        let d = RecordDraw::from_partial_sum(MemberId::XII, &p, n, n as f64).unwrap();
        assert_relative_eq!(d.value, (n as f64).exp_m1(), max_relative = 1e-13);
        assert_eq!(d.s_star, 0.0);
    }
}

#[test]
fn s_star_is_centered() {
    let draws = simulate_records(MemberId::II, &params(&[("r", 1.0)]), 100, 10_000, 3).unwrap();
    let mean = draws.iter().map(|d| d.s_star).sum::<f64>() / draws.len() as f64;
    assert!(mean.abs() <= 0.03, "{mean}");
}

#[test]
fn defining_identity_is_bit_exact() {
    for member in MemberId::ALL {
        let p = record_params(member);
        for d in simulate_records(member, &p, 40, 50, 11).unwrap() {
            let again = quantile_tail(member, &p, -d.s_n).unwrap();
            assert_eq!(again.value.to_bits(), d.value.to_bits(), "{member}");
            assert_eq!(d.s_star, (d.s_n - 40.0) / 40f64.sqrt());
        }
    }
}

#[test]
fn paths_increase() {
    for member in MemberId::ALL {
        let p = record_params(member);
        let mut rng = replication_rng(5, 0);
        let path = record_path(member, &p, 30, &mut rng).unwrap();
        for w in path.windows(2) {
            let up = w[1].value > w[0].value
                || (w[0].overflowed && w[1].ln_value > w[0].ln_value)
                || (w[1].ln_gap.is_some() && w[1].ln_gap < w[0].ln_gap);
            assert!(up, "{member}: {:?} then {:?}", w[0], w[1]);
        }
        assert_eq!(path.iter().map(|d| d.n).collect::<Vec<_>>(), (1..=30).collect::<Vec<_>>());
    }
}

#[test]
fn replays_regardless_of_threads() {
    let p = record_params(MemberId::V);
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| simulate_records(MemberId::V, &p, 200, 300, 99).unwrap())
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn stream_oracle_agrees_with_representation() {
    for (member, p) in [(MemberId::Xa, params(&[("r", 1.0)])), (MemberId::III, params(&[("k", 2.0), ("r", 1.0)]))] {
        let rep: Vec<f64> = simulate_records(member, &p, 3, 1000, 21).unwrap().iter().map(|d| d.value).collect();
        let oracle = stream_records(member, &p, 3, 1000, 22, STREAM_CAP).unwrap();
        let (_, pv) = ks_two_sample(&rep, &oracle.values).unwrap();
        assert!(pv > 1e-3, "{member}: p = {pv}");
    }
}

#[test]
fn atom_breaks_equivalence_for_burr_x() {
    // With mass 1/2 at 0, strict stream records skip repeated zeros while
    // F^{-1}(1 - e^{-S_2}) is still 0 whenever S_2 < ln 2.
    let p = params(&[("r", 1.0)]);
    let rep = simulate_records(MemberId::X, &p, 2, 2000, 31).unwrap();
    let oracle = stream_records(MemberId::X, &p, 2, 2000, 32, STREAM_CAP).unwrap();
    let zero_rep = rep.iter().filter(|d| d.value == 0.0).count();
    let zero_stream = oracle.values.iter().filter(|&&v| v == 0.0).count();
    assert_eq!(zero_stream, 0);
    // P(S_2 < ln 2) = 1 - (1 + ln 2)/2
    let expect = 2000.0 * (1.0 - (1.0 + 2f64.ln()) / 2.0);
    assert!((zero_rep as f64 - expect).abs() < 4.0 * (expect * 0.85).sqrt(), "{zero_rep} vs {expect}");
}

#[test]
fn capped_streams_are_redrawn() {
    let s = stream_records(MemberId::I, &Params::new(), 5, 200, 1, 20).unwrap();
    assert_eq!(s.values.len(), 200);
    assert!(s.resampled > 0);
    assert!(stream_records(MemberId::I, &Params::new(), 5, 10, 1, 4).is_err());
}

#[test]
fn rejects_bad_inputs() {
    let mut rng = replication_rng(0, 0);
    assert!(simulate_record(MemberId::I, &Params::new(), 0, &mut rng).is_err());
    assert!(RecordDraw::from_partial_sum(MemberId::I, &Params::new(), 3, -1.0).is_err());
    assert!(simulate_records(MemberId::IV, &params(&[("r", 1.0)]), 3, 10, 0).is_err());
}

proptest! {
    #[test]
    fn extracted_records_are_prefix_maxima(stream in prop::collection::vec(-50i32..50, 1..200)) {
        let xs: Vec<f64> = stream.iter().map(|&v| v as f64).collect();
        let s = extract_records(&xs).unwrap();
        prop_assert_eq!(s.times[0], 1);
        prop_assert!(s.records.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(s.times.windows(2).all(|w| w[0] < w[1]));
        let mut top = f64::NEG_INFINITY;
        let mut expect = vec![];
        for (i, &x) in xs.iter().enumerate() {
            if x > top {
                top = x;
                expect.push((i as u64 + 1, x));
            }
        }
        prop_assert_eq!(s.times.iter().copied().zip(s.records.iter().copied()).collect::<Vec<_>>(), expect);
    }
}
