#![allow(dead_code)]

use burr_records::distributions::{MemberId, Params};

pub fn params(pairs: &[(&str, f64)]) -> Params {
    Params::from_pairs(pairs).unwrap()
}

/// Three parameter sets per member, spread over small, unit and large shapes.
pub fn param_grid(member: MemberId) -> Vec<Params> {
    use MemberId::*;
    let sets: Vec<Vec<(&str, f64)>> = match member {
        I => vec![vec![]],
        II | VII | VIII | X | Xa => vec![vec![("r", 0.5)], vec![("r", 1.0)], vec![("r", 3.0)]],
        XI => vec![vec![("r", 0.5)], vec![("r", 1.0)], vec![("r", 2.0)]],
        III => vec![
            vec![("k", 0.5), ("r", 1.0)],
            vec![("k", 2.0), ("r", 1.0)],
            vec![("k", 3.0), ("r", 0.4)],
        ],
        IV => vec![
            vec![("c", 0.5), ("r", 1.0)],
            vec![("c", 1.0), ("r", 2.0)],
            vec![("c", 2.0), ("r", 0.5)],
        ],
        V | VI => vec![
            vec![("k", 1.0), ("r", 1.0)],
            vec![("k", 2.0), ("r", 0.5)],
            vec![("k", 0.5), ("r", 3.0)],
        ],
        IX => vec![
            vec![("k", 1.0), ("r", 1.0)],
            vec![("k", 0.5), ("r", 2.0)],
            vec![("k", 3.0), ("r", 0.4)],
        ],
        XII => vec![
            vec![("c", 1.0), ("r", 1.0)],
            vec![("c", 2.0), ("r", 0.5)],
            vec![("c", 0.5), ("r", 3.0)],
        ],
        SinghMaddala => vec![
            vec![("a", 1.0), ("c", 1.0), ("r", 1.0)],
            vec![("a", 2.0), ("c", 0.5), ("r", 2.0)],
            vec![("a", 0.5), ("c", 3.0), ("r", 0.5)],
        ],
        Dagum => vec![
            vec![("a", 1.0), ("b", 1.0), ("c", 1.0)],
            vec![("a", 2.0), ("b", 0.5), ("c", 2.0)],
            vec![("a", 0.5), ("b", 3.0), ("c", 0.5)],
        ],
        ToppLeoneDagum => vec![
            vec![("a", 1.0), ("b", 1.0), ("c", 1.0), ("d", 1.0), ("f", 1.0)],
            vec![("a", 2.0), ("b", 0.5), ("c", 2.0), ("d", 1.5), ("f", 2.0)],
            vec![("a", 0.5), ("b", 3.0), ("c", 0.5), ("d", 0.7), ("f", 0.5)],
        ],
    };
    sets.iter().map(|s| params(s)).collect()
}

/// 50 probabilities log-spaced toward both ends of `[1e-6, 1 - 1e-6]`.
pub fn probability_grid() -> Vec<f64> {
    let lower: Vec<f64> = (0..25).map(|i| 10f64.powf(-6.0 + i as f64 * (6.0 - 0.30103) / 24.0)).collect();
    let mut all = lower.clone();
    all.extend(lower.iter().rev().map(|u| 1.0 - u));
    all
}

/// One parameter set per Burr member for record simulations.
///
/// Burr II uses `r = 2` so its centering offset `log r` is visible in the
/// coupling residual.
pub fn record_params(member: MemberId) -> Params {
    use MemberId::*;
    let set: &[(&str, f64)] = match member {
        I => &[],
        II | VII | VIII | Xa => &[("r", 2.0)],
        III => &[("k", 2.0), ("r", 1.0)],
        IV => &[("c", 2.0), ("r", 1.0)],
        V => &[("k", 1.0), ("r", 1.0)],
        VI => &[("k", 2.0), ("r", 1.0)],
        IX => &[("k", 1.0), ("r", 2.0)],
        X | XI => &[("r", 1.0)],
        XII => &[("r", 2.0), ("c", 1.0)],
        SinghMaddala => &[("a", 1.0), ("c", 2.0), ("r", 1.0)],
        Dagum => &[("a", 1.0), ("b", 2.0), ("c", 1.0)],
        ToppLeoneDagum => &[("a", 1.0), ("b", 2.0), ("c", 1.0), ("d", 1.5), ("f", 2.0)],
    };
    params(set)
}
