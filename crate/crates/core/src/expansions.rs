//! Two-term expansions of extreme quantiles `F^{-1}(1-u)` as `u -> 0`.
//!
//! Members I, IV, V and XI are expanded in the gap to the upper endpoint,
//! the rest directly. Remainders are computed from cancellation-free forms of
//! `exact - leading`, so they stay meaningful down to `u = 1e-7` and beyond
//! even where the exact quantile and the expansion agree to 15 digits.

use std::f64::consts::PI;

use serde::Serialize;

use crate::distributions::{quantile_level, Level, MemberId, Params};
use crate::error::{BurrError, Result};
use crate::numeric::{least_squares, linear_fit, ln_tan_ratio, pow_deficit_rel, pow_excess_rel, sin_defect};

/// Upper limit of `u` for every expansion.
pub const U0: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Frame {
    Direct,
    UpperEndpointGap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RemainderKind {
    /// `u^e`
    PowerOfU,
    /// `(log 1/u)^{-e}`
    PowerOfLogReciprocal,
    /// `(log log 1/u)^{-e}`
    PowerOfLoglogReciprocal,
    /// `u^e / log(1/u)`
    PowerOfUOverLog,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RemainderOrder {
    pub kind: RemainderKind,
    pub exponent: f64,
    /// Whether the order applies to `remainder / leading`.
    pub relative: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpansionResult {
    pub u: f64,
    pub value: f64,
    pub frame: Frame,
    pub leading: f64,
    pub correction: f64,
    pub remainder_spec: RemainderOrder,
}

/// Constants of the Burr XI tail `1 - F(1 - X) = α X³ + β X⁵ + ...`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct XiConstants {
    /// Least-squares fit of the exact survival function, used by the expansion.
    pub alpha: f64,
    pub beta: f64,
    /// `r (2π)²/6` and `-r (2π)⁴/120`.
    pub alpha_series: f64,
    pub beta_series: f64,
    /// `(2π)²/(6r)` and `-(2π)⁴/(120r)` as they are usually quoted.
    pub alpha_quoted: f64,
    pub beta_quoted: f64,
}

/// Fits `α, β` from `(1 - F(1 - X)) / X³ ≈ α + β X² + γ₃ X³ + γ₄ X⁴`
/// over `X ∈ [2e-3, 4e-2]`.
pub fn xi_constants(r: f64) -> XiConstants {
    let n = 60;
    let (lo, hi) = (2e-3f64.ln(), 4e-2f64.ln());
    let mut rows = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    for i in 0..n {
        let x = (lo + (hi - lo) * i as f64 / (n - 1) as f64).exp();
        let sf = -(r * (-sin_defect(x)).ln_1p()).exp_m1();
        rows.push(vec![1.0, x * x, x.powi(3), x.powi(4)]);
        ys.push(sf / x.powi(3));
    }
    let coef = least_squares(&rows, &ys);
    let two_pi = 2.0 * PI;
    XiConstants {
        alpha: coef[0],
        beta: coef[1],
        alpha_series: r * two_pi.powi(2) / 6.0,
        beta_series: -r * two_pi.powi(4) / 120.0,
        alpha_quoted: two_pi.powi(2) / (6.0 * r),
        beta_quoted: -two_pi.powi(4) / (120.0 * r),
    }
}

pub fn frame_of(member: MemberId) -> Frame {
    match member {
        MemberId::I | MemberId::IV | MemberId::V | MemberId::XI => Frame::UpperEndpointGap,
        _ => Frame::Direct,
    }
}

/// Stated remainder order of each expansion.
pub fn remainder_order(member: MemberId, params: &Params) -> Result<RemainderOrder> {
    use MemberId::*;
    use RemainderKind::*;
    let r = params.r();
    let (kind, exponent, relative) = match member {
        I => (PowerOfU, f64::INFINITY, false),
        II | VII | VIII => (PowerOfU, 2.0, false),
        III | IV => (PowerOfU, 2.0, true),
        V => (PowerOfLogReciprocal, 5.0, false),
        VI => (PowerOfLoglogReciprocal, 3.0, false),
        IX => (PowerOfU, if r <= 0.5 { 2.0 } else { 1.0 / r }, false),
        X | Xa => (PowerOfUOverLog, 2.0, true),
        XI => (PowerOfU, 4.0 / 9.0, true),
        XII => (PowerOfU, 3.0 / r, true),
        SinghMaddala | Dagum | ToppLeoneDagum => {
            return Err(BurrError::Unsupported { member, operation: "quantile expansion" })
        }
    };
    Ok(RemainderOrder { kind, exponent, relative })
}

fn check_u(member: MemberId, u: f64) -> Result<()> {
    let limit = if member == MemberId::VI { U0.min((-1.0f64).exp()) } else { U0 };
    if u > 0.0 && u < limit {
        Ok(())
    } else {
        Err(BurrError::Domain { what: "tail probability u", value: u })
    }
}

/// Two-term expansion of `F^{-1}(1-u)` (or of `uep - F^{-1}(1-u)`).
///
/// ```
/// use burr_records::distributions::{MemberId, Params};
/// use burr_records::expansions::expand_quantile;
/// let p = Params::from_pairs(&[("r", 1.0)]).unwrap();
/// let e = expand_quantile(MemberId::II, &p, 1e-4).unwrap();
/// assert!((e.value - (1e4f64.ln() - 1e-4)).abs() < 1e-12);
/// ```
pub fn expand_quantile(member: MemberId, params: &Params, u: f64) -> Result<ExpansionResult> {
    let spec = remainder_order(member, params)?;
    check_u(member, u)?;
    let (leading, correction) = terms(member, params, u);
    Ok(ExpansionResult {
        u,
        value: leading + correction,
        frame: frame_of(member),
        leading,
        correction,
        remainder_spec: spec,
    })
}

fn terms(member: MemberId, p: &Params, u: f64) -> (f64, f64) {
    use MemberId::*;
    let (k, c, r) = (p.k(), p.c(), p.r());
    let l_inv = (1.0 / u).ln();
    match member {
        I => (u, 0.0),
        II => (r.ln() + l_inv, -(r + 1.0) / (2.0 * r) * u),
        III => {
            let lead = (r / u).powf(1.0 / k);
            (lead, -lead * (r + 1.0) / (2.0 * k * r) * u)
        }
        IV => {
            let lead = c * (u / r).powf(c);
            (lead, lead * c * (r + 1.0) / (2.0 * r) * u)
        }
        V => {
            let l = (k * r / u).ln();
            (1.0 / l, -1.0 / (3.0 * l.powi(3)))
        }
        VI => {
            let l = (k * r / u).ln();
            (std::f64::consts::LN_2 + l.ln(), 0.25 / (l * l))
        }
        VII => (0.5 * r.ln() + 0.5 * l_inv, -(1.0 + r) / (4.0 * r) * u),
        VIII => ((2.0 * r / PI).ln() + l_inv, (1.0 - r) / (2.0 * r) * u),
        IX => ((2.0 / (u * k)).ln() / r, -(2.0 - k) / (2.0 * r) * u),
        X | Xa => {
            let l = (r / u).ln();
            let lead = l.sqrt();
            let coef = if member == X { -(r + 1.0) } else { 1.0 - r };
            (lead, lead * coef / (4.0 * r) * u / l)
        }
        XI => {
            let xc = xi_constants(r);
            let lead = (u / xc.alpha).cbrt();
            let corr = -lead * xc.beta / (3.0 * xc.alpha) * xc.alpha.powf(-2.0 / 3.0) * u.powf(2.0 / 3.0);
            (lead, corr)
        }
        XII => {
            let lead = u.powf(-1.0 / (r * c));
            let q = u.powf(1.0 / r);
            (lead, lead * (-q / c + (1.0 - c) / (2.0 * c * c) * q * q))
        }
        SinghMaddala | Dagum | ToppLeoneDagum => unreachable!("rejected by remainder_order"),
    }
}

/// The exact quantity the expansion approximates: the quantile, or its gap
/// to the upper endpoint.
pub fn exact_quantity(member: MemberId, params: &Params, u: f64) -> Result<f64> {
    let tp = quantile_level(member, params, &Level::from_u(u))?;
    Ok(match frame_of(member) {
        Frame::Direct => tp.value,
        Frame::UpperEndpointGap => tp.ln_gap.expect("gap members carry ln_gap").exp(),
    })
}

/// `exact - expansion.value` in the expansion's frame.
pub fn remainder(member: MemberId, params: &Params, u: f64) -> Result<f64> {
    let e = expand_quantile(member, params, u)?;
    let lv = Level::from_u(u);
    let (k, c, r) = (params.k(), params.c(), params.r());
    let tplus = pow_excess_rel(u, r);
    use MemberId::*;
    // Absolute members: exact - leading. Relative members: exact / leading - 1.
    let rem = match member {
        I => 0.0,
        II => -tplus.ln_1p() - e.correction,
        VII => -0.5 * tplus.ln_1p() - e.correction,
        VIII => {
            let tminus = pow_deficit_rel(u, r);
            let v = PI / 2.0 * (u / r) * (1.0 + tminus);
            -tminus.ln_1p() - ln_tan_ratio(v) - e.correction
        }
        IX => {
            let ln_a = (2.0 / (k * u)).ln() + (-(2.0 - k) * u / 2.0).ln_1p();
            (-(2.0 - k) * u / 2.0).ln_1p() / r + (-(-ln_a / r).exp()).ln_1p() - e.correction
        }
        V => {
            let y = (k * r / u).ln() - tplus.ln_1p();
            (1.0 / y).atan() - e.value
        }
        VI => {
            let y = (k * r / u).ln() - tplus.ln_1p();
            y.asinh() - e.value
        }
        III => e.leading * ((-tplus.ln_1p() / k).exp_m1() - e.correction / e.leading),
        IV => {
            let lw = lv.ln_pow_excess(r);
            let rho = (c * tplus.ln_1p() - (c * lw).exp().ln_1p()).exp_m1();
            e.leading * (rho - e.correction / e.leading)
        }
        X | Xa => {
            let t = if member == X { tplus } else { pow_deficit_rel(u, r) };
            let l = (r / u).ln();
            let rho = (0.5 * (-t.ln_1p() / l).ln_1p()).exp_m1();
            e.leading * (rho - e.correction / e.leading)
        }
        XII => {
            if c == 1.0 {
                0.0
            } else {
                let rho = ((-u.powf(1.0 / r)).ln_1p() / c).exp_m1();
                e.leading * (rho - e.correction / e.leading)
            }
        }
        XI => exact_quantity(member, params, u)? - e.value,
        SinghMaddala | Dagum | ToppLeoneDagum => unreachable!("rejected by expand_quantile"),
    };
    Ok(rem)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum OrderFit {
    /// The expansion reproduces the quantile exactly on the grid.
    Exact,
    Fitted { exponent: f64 },
}

/// Log-log slope of `|remainder|` (divided by the leading term for relative
/// kinds) against the scale variable of the stated remainder kind.
pub fn fit_remainder_order(member: MemberId, params: &Params, u_grid: &[f64]) -> Result<OrderFit> {
    if u_grid.len() < 5 {
        return Err(BurrError::Invalid("remainder fit needs at least 5 grid points".into()));
    }
    let spec = remainder_order(member, params)?;
    let mut xs = Vec::with_capacity(u_grid.len());
    let mut ys = Vec::with_capacity(u_grid.len());
    let mut all_zero = true;
    for &u in u_grid {
        let e = expand_quantile(member, params, u)?;
        let mut rem = remainder(member, params, u)?.abs();
        if rem != 0.0 {
            all_zero = false;
        }
        if spec.relative {
            rem /= e.leading.abs();
        }
        let l = (1.0 / u).ln();
        let (x, y) = match spec.kind {
            RemainderKind::PowerOfU => (u.ln(), rem.ln()),
            RemainderKind::PowerOfUOverLog => (u.ln(), (rem * l).ln()),
            RemainderKind::PowerOfLogReciprocal => (-l.ln(), rem.ln()),
            RemainderKind::PowerOfLoglogReciprocal => (-l.ln().ln(), rem.ln()),
        };
        xs.push(x);
        ys.push(y);
    }
    if all_zero {
        return Ok(OrderFit::Exact);
    }
    if ys.iter().any(|y| !y.is_finite()) {
        return Err(BurrError::Invalid("zero remainder inside the fit grid".into()));
    }
    Ok(OrderFit::Fitted { exponent: linear_fit(&xs, &ys).0 })
}

/// `n` log-spaced points from `hi` down to `lo`.
pub fn log_grid(hi: f64, lo: f64, n: usize) -> Vec<f64> {
    let (a, b) = (hi.ln(), lo.ln());
    (0..n).map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp()).collect()
}
