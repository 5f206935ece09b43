//! Probability levels carried with both tails and their logarithms.

use crate::numeric::{ln_expm1, pow_deficit_rel, pow_excess_rel};

/// A probability level `p` together with its complement `u = 1 - p`.
///
/// Both tails and their logarithms are kept so quantile formulas can pick
/// whichever side is accurate. Built from `p` directly, or from the log of
/// the upper tail when `u` is far below machine epsilon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Level {
    pub p: f64,
    pub u: f64,
    pub ln_p: f64,
    pub ln_u: f64,
}

impl Level {
    pub fn from_p(p: f64) -> Self {
        Level {
            p,
            u: 1.0 - p,
            ln_p: p.ln(),
            ln_u: (-p).ln_1p(),
        }
    }

    /// Level with upper tail `u` in `(0, 1)`.
    pub fn from_u(u: f64) -> Self {
        Level { p: 1.0 - u, u, ln_p: (-u).ln_1p(), ln_u: u.ln() }
    }

    /// Level with upper tail `u = exp(ln_u)`, `ln_u < 0`.
    pub fn from_ln_tail(ln_u: f64) -> Self {
        let u = ln_u.exp();
        let p = -ln_u.exp_m1();
        let ln_p = if u < 0.5 { (-u).ln_1p() } else { p.ln() };
        Level { p, u, ln_p, ln_u }
    }

    /// The level with the roles of `p` and `u` exchanged.
    pub fn swapped(&self) -> Self {
        Level {
            p: self.u,
            u: self.p,
            ln_p: self.ln_u,
            ln_u: self.ln_p,
        }
    }

    /// `ln(p^{-1/r} - 1)`.
    pub fn ln_pow_excess(&self, r: f64) -> f64 {
        if self.u < 0.5 {
            self.ln_u - r.ln() + pow_excess_rel(self.u, r).ln_1p()
        } else {
            ln_expm1(-self.ln_p / r)
        }
    }

    /// `ln(1 - p^{1/r})`.
    pub fn ln_pow_deficit(&self, r: f64) -> f64 {
        if self.u < 0.5 {
            self.ln_u - r.ln() + pow_deficit_rel(self.u, r).ln_1p()
        } else {
            (-(self.ln_p / r).exp_m1()).ln()
        }
    }
}

/// A quantile evaluated on the tail path.
///
/// `value` may overflow to infinity for heavy tails; `ln_value` then still
/// holds the finite logarithm. `ln_gap` is `ln(uep - value)` for members with
/// a finite upper endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailPoint {
    pub value: f64,
    pub ln_value: Option<f64>,
    pub ln_gap: Option<f64>,
}

impl TailPoint {
    pub fn plain(value: f64) -> Self {
        TailPoint { value, ln_value: None, ln_gap: None }
    }

    pub fn from_ln(ln_value: f64) -> Self {
        TailPoint { value: ln_value.exp(), ln_value: Some(ln_value), ln_gap: None }
    }

    /// True when `value` is not representable and only the log is meaningful.
    pub fn overflowed(&self) -> bool {
        self.value.is_infinite() && self.ln_value.is_some_and(f64::is_finite)
    }
}
