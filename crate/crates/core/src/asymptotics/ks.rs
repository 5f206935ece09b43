//! Kolmogorov-Smirnov distances and asymptotic p-values.

use std::f64::consts::PI;

use super::LawSpec;
use crate::error::{BurrError, Result};
use crate::numeric::normal_cdf;

/// Kolmogorov survival function `P(K > lambda)`.
///
/// Uses the theta-transformed series below 1.18 and the alternating series
/// above it. Both are summed until the terms drop below 1e-16.
pub fn kolmogorov_sf(lambda: f64) -> f64 {
    if lambda <= 0.0 {
        return 1.0;
    }
    if lambda < 1.18 {
        let w = PI * PI / (8.0 * lambda * lambda);
        let mut sum = 0.0;
        for k in 1..=40 {
            let j = (2 * k - 1) as f64;
            let t = (-j * j * w).exp();
            sum += t;
            if k >= 10 && t < 1e-16 {
                break;
            }
        }
        (1.0 - (2.0 * PI).sqrt() / lambda * sum).clamp(0.0, 1.0)
    } else {
        let mut sum = 0.0;
        for k in 1..=100 {
            let kf = k as f64;
            let t = (-2.0 * kf * kf * lambda * lambda).exp();
            sum += if k % 2 == 1 { t } else { -t };
            if k >= 10 && t < 1e-16 {
                break;
            }
        }
        (2.0 * sum).clamp(0.0, 1.0)
    }
}

fn stephens(n_eff: f64, d: f64) -> f64 {
    let sq = n_eff.sqrt();
    (sq + 0.12 + 0.11 / sq) * d
}

/// One-sample test of `sample` against a normal-frame law. Returns `(distance, pvalue)`.
pub fn ks_test(sample: &[f64], law: &LawSpec) -> Result<(f64, f64)> {
    if sample.len() < 8 {
        return Err(BurrError::Statistic(format!("KS test needs at least 8 points, got {}", sample.len())));
    }
    if sample.iter().any(|x| !x.is_finite()) {
        return Err(BurrError::Statistic("KS sample contains non-finite values".into()));
    }
    let mut xs = sample.to_vec();
    xs.sort_by(f64::total_cmp);
    let m = xs.len() as f64;
    let sd = law.variance.sqrt();
    let d = xs
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = normal_cdf((x - law.mean) / sd);
            (f - i as f64 / m).max((i + 1) as f64 / m - f)
        })
        .fold(0.0, f64::max);
    if xs[0] == xs[xs.len() - 1] {
        return Ok((d, 0.0));
    }
    Ok((d, kolmogorov_sf(stephens(m, d))))
}

/// Two-sample test. Returns `(distance, pvalue)`.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> Result<(f64, f64)> {
    if a.is_empty() || b.is_empty() {
        return Err(BurrError::Statistic("two-sample KS needs nonempty samples".into()));
    }
    let mut xs = a.to_vec();
    let mut ys = b.to_vec();
    xs.sort_by(f64::total_cmp);
    ys.sort_by(f64::total_cmp);
    let (n1, n2) = (xs.len() as f64, ys.len() as f64);
    let (mut i, mut j, mut d) = (0, 0, 0.0f64);
    while i < xs.len() && j < ys.len() {
        let t = xs[i].min(ys[j]);
        while i < xs.len() && xs[i] <= t {
            i += 1;
        }
        while j < ys.len() && ys[j] <= t {
            j += 1;
        }
        d = d.max((i as f64 / n1 - j as f64 / n2).abs());
    }
    Ok((d, kolmogorov_sf(stephens(n1 * n2 / (n1 + n2), d))))
}
