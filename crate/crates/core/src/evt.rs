//! Extreme-value domains of the Burr members and the auxiliary functions
//! used by the record-value laws.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::distributions::{ln_sf, pdf, quantile_level, support, Level, MemberId, Params, TailPoint};
use crate::error::{BurrError, Result};
use crate::numeric::{integrate, pow_deficit_rel, pow_excess_rel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Transform {
    None,
    /// The index describes `exp(X)`; `X` itself is in the Gumbel domain.
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DomainClass {
    pub gamma: f64,
    pub uep: f64,
    pub transform: Transform,
}

/// Tabulated extreme-value index, upper endpoint and transform.
///
/// ```
/// use burr_records::distributions::{MemberId, Params};
/// use burr_records::evt::{classify, Transform};
/// let p = Params::from_pairs(&[("r", 2.0), ("c", 3.0)]).unwrap();
/// let d = classify(MemberId::XII, &p).unwrap();
/// assert!((d.gamma - 1.0 / 6.0).abs() < 1e-15);
/// assert_eq!(d.transform, Transform::None);
/// ```
pub fn classify(member: MemberId, params: &Params) -> Result<DomainClass> {
    use MemberId::*;
    use Transform::*;
    let (k, c, r) = (params.k(), params.c(), params.r());
    let inf = f64::INFINITY;
    let (gamma, uep, transform) = match member {
        I => (-1.0, 1.0, None),
        II => (1.0, inf, Log),
        III => (1.0 / k, inf, None),
        IV => (-c, c, None),
        V => (0.0, FRAC_PI_2, None),
        VI => (0.0, inf, None),
        VII => (0.5, inf, Log),
        VIII => (1.0, inf, Log),
        IX => (1.0 / r, inf, Log),
        X | Xa => (0.0, inf, None),
        XI => (-1.0 / 3.0, 1.0, None),
        XII => (1.0 / (r * c), inf, None),
        SinghMaddala | Dagum | ToppLeoneDagum => {
            return Err(BurrError::Unsupported { member, operation: "domain classification" })
        }
    };
    Ok(DomainClass { gamma, uep, transform })
}

/// Generalized extreme value CDF `exp(-(1 + γx)^{-1/γ})`, Gumbel at `γ = 0`.
pub fn gev_cdf(gamma: f64, x: f64) -> f64 {
    if gamma == 0.0 {
        return (-(-x).exp()).exp();
    }
    let z = gamma * x;
    if z <= -1.0 {
        return if gamma > 0.0 { 0.0 } else { 1.0 };
    }
    // (1 + γx)^{-1/γ} = exp(-ln1p(γx)/γ), continuous as γ -> 0.
    (-(-z.ln_1p() / gamma).exp()).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbeKind {
    /// `-log(Q(1-λu)/Q(1-u)) / log λ`, on `exp(X)` for log-transform members.
    QuantileRatio,
    /// The same ratio on gaps to the upper endpoint.
    EndpointGap,
    /// `(Q(1-λu) - Q(1-u)) / (Q(1-μu) - Q(1-u))`, to be compared with `log λ / log μ`.
    DoubleRatio,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbeEstimate {
    pub u: f64,
    pub kind: ProbeKind,
    pub estimate: f64,
    /// The value the estimate should approach: `γ`, or `log λ / log μ`.
    pub target: f64,
}

/// Second level used by the double-ratio probe.
pub const PROBE_MU: f64 = 4.0;

/// Numeric limit probes of the extreme-value index along `u_grid`.
///
/// Probes use the levels `1 - u` and `1 - λu`, so the second tail is `λu`.
pub fn probe_gamma(member: MemberId, params: &Params, lambda: f64, u_grid: &[f64]) -> Result<Vec<ProbeEstimate>> {
    if !(lambda > 0.0) || lambda == 1.0 || lambda == PROBE_MU {
        return Err(BurrError::Domain { what: "lambda", value: lambda });
    }
    let class = classify(member, params)?;
    let at = |u: f64| -> Result<TailPoint> {
        if !(u > 0.0 && u < 1.0) {
            return Err(BurrError::Domain { what: "probe tail probability", value: u });
        }
        quantile_level(member, params, &Level::from_u(u))
    };
    let ln_lambda = lambda.ln();
    u_grid
        .iter()
        .map(|&u| {
            let (a, b) = (at(u)?, at(lambda * u)?);
            let (kind, estimate, target) = if class.gamma == 0.0 {
                let c = at(PROBE_MU * u)?;
                let diff = |x: &TailPoint, y: &TailPoint| match (x.ln_gap, y.ln_gap) {
                    // Differences of quantiles near a finite endpoint are differences of gaps.
                    (Some(gx), Some(gy)) if class.uep.is_finite() => gy.exp() - gx.exp(),
                    _ => x.value - y.value,
                };
                (ProbeKind::DoubleRatio, diff(&b, &a) / diff(&c, &a), ln_lambda / PROBE_MU.ln())
            } else if class.uep.is_finite() {
                let (ga, gb) = (a.ln_gap.expect("gap"), b.ln_gap.expect("gap"));
                (ProbeKind::EndpointGap, -(gb - ga) / ln_lambda, class.gamma)
            } else {
                let ln_q = |t: &TailPoint| match class.transform {
                    Transform::Log => t.value,
                    Transform::None => t.ln_value.unwrap_or_else(|| t.value.ln()),
                };
                (ProbeKind::QuantileRatio, -(ln_q(&b) - ln_q(&a)) / ln_lambda, class.gamma)
            };
            Ok(ProbeEstimate { u, kind, estimate, target })
        })
        .collect()
}

fn require_gumbel_quartet(member: MemberId, operation: &'static str) -> Result<()> {
    match member {
        MemberId::V | MemberId::VI | MemberId::X | MemberId::Xa => Ok(()),
        _ => Err(BurrError::Unsupported { member, operation }),
    }
}

/// Closed-form `s(u) = -u (F^{-1}(1-u))'` for Burr V, VI, X and Xa.
pub fn aux_s(member: MemberId, params: &Params, u: f64) -> Result<f64> {
    if !(u > 0.0 && u < 1.0) {
        return Err(BurrError::Domain { what: "tail probability u", value: u });
    }
    aux_s_level(member, params, &Level::from_u(u))
}

/// `s` at `u = exp(ln_u)`, usable when `u` underflows.
pub fn aux_s_ln(member: MemberId, params: &Params, ln_u: f64) -> Result<f64> {
    if !(ln_u < 0.0) {
        return Err(BurrError::Domain { what: "log tail probability", value: ln_u });
    }
    aux_s_level(member, params, &Level::from_ln_tail(ln_u))
}

fn aux_s_level(member: MemberId, params: &Params, lv: &Level) -> Result<f64> {
    require_gumbel_quartet(member, "auxiliary function s")?;
    let (k, r) = (params.k(), params.r());
    let l = r.ln() - lv.ln_u;
    // ε(u) and d(u): (1-u)^{∓...} and (u/r) over the bracket that defines the quantile.
    let (eps, d) = if member == MemberId::Xa {
        ((lv.ln_p * (1.0 - r) / r).exp(), 1.0 / (1.0 + pow_deficit_rel(lv.u, r)))
    } else {
        ((-lv.ln_p * (r + 1.0) / r).exp(), 1.0 / (1.0 + pow_excess_rel(lv.u, r)))
    };
    let ed = eps * d;
    let a = k.ln() + d.ln();
    let s = match member {
        MemberId::V => ed / (l * l * ((1.0 + a / l).powi(2) + 1.0 / (l * l))),
        MemberId::VI => ed / (l * ((1.0 + a / l).powi(2) + 1.0 / (l * l)).sqrt()),
        _ => 0.5 * ed / (l.sqrt() * (1.0 + d.ln() / l).sqrt()),
    };
    Ok(s)
}

/// Finite-difference `s(u) = -u dQ(1-u)/du` with step `h = 1e-4 u`.
pub fn aux_s_numeric(member: MemberId, params: &Params, u: f64) -> Result<f64> {
    let h = 1e-4 * u;
    let q = |t: f64| -> Result<f64> {
        let tp = quantile_level(member, params, &Level::from_u(t))?;
        // Differentiate the gap where the endpoint is finite: it carries all the digits.
        Ok(match (member, tp.ln_gap) {
            (MemberId::V, Some(g)) => -g.exp(),
            _ => tp.value,
        })
    };
    Ok(-u * (q(u + h)? - q(u - h)?) / (2.0 * h))
}

/// `f(F^{-1}(1-u))` computed from the level, exact even when the quantile
/// rounds onto a finite endpoint.
fn density_at(member: MemberId, params: &Params, lv: &Level, tp: &TailPoint) -> Result<f64> {
    let r = params.r();
    match member {
        MemberId::I => Ok(1.0),
        MemberId::IV => {
            let lw = lv.ln_pow_excess(r);
            let ln_gap = tp.ln_gap.expect("gap");
            let ln_x = tp.ln_value.expect("value");
            let ln_f = r.ln() - (r + 1.0) * crate::numeric::softplus(lw) + lw - ln_x - ln_gap;
            Ok(ln_f.exp())
        }
        MemberId::XI => {
            let z = tp.ln_gap.expect("gap").exp();
            let s = (PI * z).sin();
            Ok(r * (lv.ln_p * (r - 1.0) / r).exp() * 2.0 * s * s)
        }
        _ => pdf(member, params, tp.value),
    }
}

/// Second-order function `b(u)` for members with `γ ≠ 0` after the transform.
pub fn aux_b(member: MemberId, params: &Params, u: f64) -> Result<f64> {
    if !(u > 0.0 && u < 1.0) {
        return Err(BurrError::Domain { what: "tail probability u", value: u });
    }
    let class = classify(member, params)?;
    if class.gamma == 0.0 {
        return Err(BurrError::Unsupported { member, operation: "auxiliary function b" });
    }
    let lv = Level::from_u(u);
    let tp = quantile_level(member, params, &lv)?;
    let f = density_at(member, params, &lv, &tp)?;
    let g = class.gamma;
    Ok(if g < 0.0 {
        -g - u / (f * tp.ln_gap.expect("gap").exp())
    } else if class.transform == Transform::Log {
        u / f - g
    } else {
        u / (f * tp.value) - g
    })
}

/// Finite-difference `b(u)` with step `h = 1e-4 u`, for cross-checks.
pub fn aux_b_numeric(member: MemberId, params: &Params, u: f64) -> Result<f64> {
    let class = classify(member, params)?;
    let h = 1e-4 * u;
    let g = class.gamma;
    // d log(·)/d log u of the quantile, its exponential, or its gap.
    let ln_q = |t: f64| -> Result<f64> {
        let tp = quantile_level(member, params, &Level::from_u(t))?;
        Ok(if g < 0.0 {
            tp.ln_gap.expect("gap")
        } else if class.transform == Transform::Log {
            tp.value
        } else {
            tp.ln_value.unwrap_or_else(|| tp.value.ln())
        })
    };
    let slope = u * (ln_q(u + h)? - ln_q(u - h)?) / (2.0 * h);
    Ok(if g < 0.0 { -g - slope } else { -slope - g })
}

/// Mean excess `R(x) = (1/S(x)) ∫_x^{uep} S(y) dy`.
pub fn mean_excess(member: MemberId, params: &Params, x: f64) -> Result<f64> {
    let sup = support(member, params);
    if !(x > sup.lep && x < sup.uep) {
        return Err(BurrError::Domain { what: "x", value: x });
    }
    let gamma = tail_index(member, params);
    if gamma >= 1.0 {
        return Err(BurrError::NonIntegrable { member, gamma });
    }
    let ls0 = ln_sf(member, params, x)?;
    let ratio = |y: f64| ln_sf(member, params, y).map(|l| (l - ls0).exp()).unwrap_or(0.0);
    let (integral, _) = if sup.uep.is_finite() {
        integrate(ratio, x, sup.uep, 1e-12, 1e-10)
    } else {
        let scale = x.abs().max(1.0);
        integrate(
            |t| {
                if t >= 1.0 {
                    return 0.0;
                }
                let y = x + scale * t / (1.0 - t);
                ratio(y) * scale / ((1.0 - t) * (1.0 - t))
            },
            0.0,
            1.0,
            1e-12,
            1e-10,
        )
    };
    Ok(integral)
}

/// Index of the untransformed member, including the related laws.
fn tail_index(member: MemberId, p: &Params) -> f64 {
    match member {
        MemberId::SinghMaddala => 1.0 / (p.c() * p.r()),
        MemberId::Dagum => 1.0 / p.b(),
        MemberId::ToppLeoneDagum => 1.0 / (p.b() * p.d()),
        _ => match classify(member, p) {
            Ok(DomainClass { transform: Transform::None, gamma, .. }) => gamma,
            _ => 0.0,
        },
    }
}

/// `√n · s(e^{-n})` along `n_grid`.
pub fn hb_limit(member: MemberId, params: &Params, n_grid: &[u64]) -> Result<Vec<f64>> {
    require_gumbel_quartet(member, "hb limit")?;
    n_grid
        .iter()
        .map(|&n| Ok((n as f64).sqrt() * aux_s_ln(member, params, -(n as f64))?))
        .collect()
}
