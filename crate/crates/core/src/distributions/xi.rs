//! Numerical inversion for Burr XI, whose quantile has no closed form.
//!
//! `F(x) = h(x)^r` with `h(z) = z - sin(2πz)/(2π)` and the symmetry
//! `h(1 - z) = 1 - h(z)`. Both halves reduce to solving `h(z) = T` on
//! `(0, 1/2]` with `T <= 1/2`, where `h` is convex and increasing.

use std::f64::consts::PI;

use super::level::{Level, TailPoint};
use super::MemberId;
use crate::error::{BurrError, Result};
use crate::numeric::sin_defect;

const BISECT_WIDTH: f64 = 1e-8;
const MAX_NEWTON: usize = 100;

fn h_prime(z: f64) -> f64 {
    let s = (PI * z).sin();
    2.0 * s * s
}

/// Solves `h(z) = exp(ln_t)` for `z` in `(0, 1/2]`, returning `ln z`.
fn solve_ln(ln_t: f64) -> Result<f64> {
    let a = (2.0 * PI).powi(2) / 6.0;
    if ln_t < -60.0 {
        // h(z) = a z^3 (1 + O(z^2)) and z < e^-19 here.
        return Ok((ln_t - a.ln()) / 3.0);
    }
    let t = ln_t.exp();
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    let mut iterations = 0;
    while hi - lo > BISECT_WIDTH * hi.max(1e-3) {
        let mid = 0.5 * (lo + hi);
        if sin_defect(mid) < t {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    // Newton from the right end of the bracket converges monotonically on a convex function.
    let mut z = hi;
    let mut g = sin_defect(z) - t;
    for _ in 0..MAX_NEWTON {
        if g.abs() <= 1e-15 * t {
            return Ok(z.ln());
        }
        let step = g / h_prime(z);
        let next = z - step;
        if !(next > 0.0) || step.abs() <= 2e-16 * z {
            break;
        }
        z = next;
        g = sin_defect(z) - t;
        iterations += 1;
    }
    if g.abs() <= 1e-12 * t {
        return Ok(z.ln());
    }
    Err(BurrError::NoConvergence { member: MemberId::XI, lo, hi, iterations })
}

pub(super) fn quantile(r: f64, lv: &Level) -> Result<TailPoint> {
    let ln_q = lv.ln_p / r;
    if ln_q <= -std::f64::consts::LN_2 {
        let ln_z = solve_ln(ln_q)?;
        let z = ln_z.exp();
        Ok(TailPoint { value: z, ln_value: Some(ln_z), ln_gap: Some((-z).ln_1p()) })
    } else {
        let ln_z = solve_ln(lv.ln_pow_deficit(r))?;
        let z = ln_z.exp();
        Ok(TailPoint { value: 1.0 - z, ln_value: Some((-z).ln_1p()), ln_gap: Some(ln_z) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn solves_midpoint_exactly() {
        assert_relative_eq!(solve_ln(0.5f64.ln()).unwrap().exp(), 0.5, max_relative = 1e-12);
    }

    #[test]
    fn solution_satisfies_equation() {
        for &t in &[1e-20, 1e-9, 1e-3, 0.1, 0.4] {
            let z = solve_ln(f64::ln(t)).unwrap().exp();
            assert_relative_eq!(sin_defect(z), t, max_relative = 1e-13);
        }
    }

    #[test]
    fn asymptotic_branch_is_continuous() {
        let a = solve_ln(-60.0 + 1e-9).unwrap();
        let b = solve_ln(-60.0 - 1e-9).unwrap();
        assert!((a - b - 2e-9 / 3.0).abs() < 1e-12);
    }
}
