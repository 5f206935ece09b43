//! The Burr family (I–XII plus Xa) and three related laws.
//!
//! Every function takes the member tag and its [`Params`] explicitly. CDFs and
//! survival functions are written in log/softplus form so that both tails are
//! accurate; quantiles go through [`Level`] for the same reason.

mod level;
mod xi;

use std::f64::consts::{FRAC_PI_2, LN_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

pub use level::{Level, TailPoint};

use crate::error::{BurrError, Result};
use crate::numeric::{ln_expm1, ln_tan_ratio, sigmoid, sin_defect, softplus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MemberId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
    XII,
    Xa,
    SinghMaddala,
    Dagum,
    ToppLeoneDagum,
}

impl MemberId {
    pub const ALL: [MemberId; 16] = [
        MemberId::I,
        MemberId::II,
        MemberId::III,
        MemberId::IV,
        MemberId::V,
        MemberId::VI,
        MemberId::VII,
        MemberId::VIII,
        MemberId::IX,
        MemberId::X,
        MemberId::XI,
        MemberId::XII,
        MemberId::Xa,
        MemberId::SinghMaddala,
        MemberId::Dagum,
        MemberId::ToppLeoneDagum,
    ];

    /// The thirteen Burr members, without the related laws.
    pub const BURR: [MemberId; 13] = [
        MemberId::I,
        MemberId::II,
        MemberId::III,
        MemberId::IV,
        MemberId::V,
        MemberId::VI,
        MemberId::VII,
        MemberId::VIII,
        MemberId::IX,
        MemberId::X,
        MemberId::XI,
        MemberId::XII,
        MemberId::Xa,
    ];

    pub fn name(self) -> &'static str {
        use MemberId::*;
        match self {
            I => "I",
            II => "II",
            III => "III",
            IV => "IV",
            V => "V",
            VI => "VI",
            VII => "VII",
            VIII => "VIII",
            IX => "IX",
            X => "X",
            XI => "XI",
            XII => "XII",
            Xa => "Xa",
            SinghMaddala => "SinghMaddala",
            Dagum => "Dagum",
            ToppLeoneDagum => "ToppLeoneDagum",
        }
    }

    /// Parameter names the member reads.
    pub fn parameters(self) -> &'static [&'static str] {
        use MemberId::*;
        match self {
            I => &[],
            II | VII | VIII | X | XI | Xa => &["r"],
            III | V | VI | IX => &["k", "r"],
            IV | XII => &["c", "r"],
            SinghMaddala => &["a", "c", "r"],
            Dagum => &["a", "b", "c"],
            ToppLeoneDagum => &["a", "b", "c", "d", "f"],
        }
    }

    pub fn is_burr(self) -> bool {
        !matches!(self, MemberId::SinghMaddala | MemberId::Dagum | MemberId::ToppLeoneDagum)
    }

    /// Fails with the list of parameters the member needs but `params` never set.
    pub fn require(self, params: &Params) -> Result<()> {
        let missing: Vec<&'static str> =
            self.parameters().iter().copied().filter(|n| !params.is_set(n)).collect();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(BurrError::MissingParameters { member: self, missing })
        }
    }
}

impl fmt::Display for MemberId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MemberId {
    type Err = BurrError;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .trim()
            .chars()
            .filter(|c| !matches!(c, '-' | '_' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        let key = key.strip_prefix("burr").unwrap_or(&key);
        MemberId::ALL
            .into_iter()
            .find(|m| m.name().to_ascii_lowercase() == key)
            .or(match key {
                "sm" => Some(MemberId::SinghMaddala),
                "tld" => Some(MemberId::ToppLeoneDagum),
                _ => None,
            })
            .ok_or_else(|| BurrError::Invalid(format!("unknown member `{s}`")))
    }
}

impl Serialize for MemberId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

const PARAM_NAMES: [&str; 7] = ["k", "c", "r", "a", "b", "d", "f"];

/// Shape parameters. Unset fields read as `1`.
///
/// Values are validated when set, so a `Params` never holds a zero,
/// negative or non-finite entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    values: [f64; 7],
    set: u8,
}

impl Default for Params {
    fn default() -> Self {
        Params { values: [1.0; 7], set: 0 }
    }
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from `(name, value)` pairs.
    ///
    /// ```
    /// use burr_records::distributions::Params;
    /// let p = Params::from_pairs(&[("k", 2.0), ("r", 0.5)]).unwrap();
    /// assert_eq!(p.k(), 2.0);
    /// assert_eq!(p.c(), 1.0);
    /// ```
    pub fn from_pairs(pairs: &[(&str, f64)]) -> Result<Self> {
        pairs.iter().try_fold(Self::default(), |p, &(n, v)| p.with(n, v))
    }

    pub fn with(mut self, name: &str, value: f64) -> Result<Self> {
        let idx = PARAM_NAMES
            .iter()
            .position(|&n| n == name)
            .ok_or_else(|| BurrError::UnknownParameter(name.to_string()))?;
        if !(value.is_finite() && value > 0.0) {
            return Err(BurrError::InvalidParameter { name: PARAM_NAMES[idx], value });
        }
        self.values[idx] = value;
        self.set |= 1 << idx;
        Ok(self)
    }

    /// Parses a `key=value` assignment and applies it.
    pub fn assign(self, assignment: &str) -> Result<Self> {
        let (k, v) = assignment
            .split_once('=')
            .ok_or_else(|| BurrError::Invalid(format!("expected key=value, got `{assignment}`")))?;
        let value: f64 = v
            .trim()
            .parse()
            .map_err(|_| BurrError::Invalid(format!("`{v}` is not a number")))?;
        self.with(k.trim(), value)
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        PARAM_NAMES.iter().position(|&n| n == name).map(|i| self.values[i])
    }

    pub fn is_set(&self, name: &str) -> bool {
        PARAM_NAMES.iter().position(|&n| n == name).is_some_and(|i| self.set & (1 << i) != 0)
    }

    /// Parameters explicitly set, in canonical order.
    pub fn assigned(&self) -> Vec<(&'static str, f64)> {
        (0..7).filter(|i| self.set & (1 << i) != 0).map(|i| (PARAM_NAMES[i], self.values[i])).collect()
    }

    pub fn k(&self) -> f64 {
        self.values[0]
    }
    pub fn c(&self) -> f64 {
        self.values[1]
    }
    pub fn r(&self) -> f64 {
        self.values[2]
    }
    pub fn a(&self) -> f64 {
        self.values[3]
    }
    pub fn b(&self) -> f64 {
        self.values[4]
    }
    pub fn d(&self) -> f64 {
        self.values[5]
    }
    pub fn f(&self) -> f64 {
        self.values[6]
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let assigned = self.assigned();
        let mut map = s.serialize_map(Some(assigned.len()))?;
        for (k, v) in assigned {
            map.serialize_entry(k, &v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Support {
    pub lep: f64,
    pub uep: f64,
}

impl Support {
    pub fn contains(&self, x: f64) -> bool {
        x >= self.lep && x <= self.uep
    }
}

pub fn support(member: MemberId, params: &Params) -> Support {
    use MemberId::*;
    let (lep, uep) = match member {
        I | XI => (0.0, 1.0),
        IV => (0.0, params.c()),
        V => (-FRAC_PI_2, FRAC_PI_2),
        II | VI | VII | VIII | IX => (f64::NEG_INFINITY, f64::INFINITY),
        III | X | XII | Xa | SinghMaddala | Dagum | ToppLeoneDagum => (0.0, f64::INFINITY),
    };
    Support { lep, uep }
}

fn check_x(x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(BurrError::Domain { what: "x", value: x })
    }
}

/// `(ln F(x), ln S(x))` with `S = 1 - F`, either of which may be `-inf`.
fn ln_cdf_sf(member: MemberId, p: &Params, x: f64) -> (f64, f64) {
    use MemberId::*;
    let sup = support(member, p);
    if x <= sup.lep && !(member == X && x == 0.0) {
        return (f64::NEG_INFINITY, 0.0);
    }
    if x >= sup.uep {
        return (0.0, f64::NEG_INFINITY);
    }
    // Most members have F = (1 + e^{-z})^{-r}, i.e. ln F = -r softplus(-z).
    let logistic_power = |z: f64, r: f64| {
        let lf = -r * softplus(-z);
        (lf, ln_one_minus_exp(lf))
    };
    let upper_power = |z: f64, r: f64| {
        // S = (1 + e^{z})^{-r}
        let ls = -r * softplus(z);
        (ln_one_minus_exp(ls), ls)
    };
    match member {
        I => (x.ln(), (-x).ln_1p()),
        II => logistic_power(x, p.r()),
        III => logistic_power(p.k() * x.ln(), p.r()),
        IV => logistic_power(-((p.c() - x).ln() - x.ln()) / p.c(), p.r()),
        V => logistic_power(x.tan() - p.k().ln(), p.r()),
        VI => logistic_power(x.sinh() - p.k().ln(), p.r()),
        VII => logistic_power(2.0 * x, p.r()),
        VIII => {
            let lf = if x > 0.0 {
                p.r() * (-(2.0 / PI) * (-x).exp().atan()).ln_1p()
            } else {
                p.r() * ((2.0 / PI) * x.exp().atan()).ln()
            };
            (lf, ln_one_minus_exp(lf))
        }
        IX => {
            let m = (p.r() * softplus(x)).exp_m1();
            let k = p.k();
            if m.is_infinite() {
                let ln_m = p.r() * softplus(x);
                let ls = LN_2 - k.ln() - ln_m;
                return (ln_one_minus_exp(ls), ls);
            }
            ((k * m).ln() - (2.0 + k * m).ln(), LN_2 - (2.0 + k * m).ln())
        }
        X => logistic_power(x * x, p.r()),
        XI => {
            if x <= 0.5 {
                let lf = p.r() * sin_defect(x).ln();
                (lf, ln_one_minus_exp(lf))
            } else {
                let lf = p.r() * (-sin_defect(1.0 - x)).ln_1p();
                (lf, ln_one_minus_exp(lf))
            }
        }
        XII => upper_power(p.c() * x.ln(), p.r()),
        Xa => {
            let lf = p.r() * ln_one_minus_exp(-x * x);
            (lf, ln_one_minus_exp(lf))
        }
        SinghMaddala => upper_power(p.a().ln() + p.c() * x.ln(), p.r()),
        Dagum => logistic_power(p.b() * x.ln() - p.a().ln(), p.c()),
        ToppLeoneDagum => {
            let (_, ls_d) = logistic_power(p.b() * x.ln() - p.a().ln(), p.c());
            let lf = p.f() * (-(p.d() * ls_d).exp()).ln_1p();
            (lf, ln_one_minus_exp(lf))
        }
    }
}

/// `ln(1 - e^{y})` for `y <= 0`.
fn ln_one_minus_exp(y: f64) -> f64 {
    if y > -LN_2 {
        (-y.exp_m1()).ln()
    } else {
        (-y.exp()).ln_1p()
    }
}

/// Cumulative distribution function.
///
/// ```
/// use burr_records::distributions::{cdf, MemberId, Params};
/// let p = Params::from_pairs(&[("r", 1.0)]).unwrap();
/// assert_eq!(cdf(MemberId::II, &p, 0.0).unwrap(), 0.5);
/// ```
pub fn cdf(member: MemberId, params: &Params, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(ln_cdf_sf(member, params, x).0.exp())
}

/// Survival function `1 - F(x)`, accurate in the upper tail.
pub fn sf(member: MemberId, params: &Params, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(ln_cdf_sf(member, params, x).1.exp())
}

/// `ln(1 - F(x))`.
pub fn ln_sf(member: MemberId, params: &Params, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(ln_cdf_sf(member, params, x).1)
}

/// Density of the absolutely continuous part. Zero outside the open support;
/// Burr X's atom at `0` is not part of the density.
pub fn pdf(member: MemberId, params: &Params, x: f64) -> Result<f64> {
    use MemberId::*;
    check_x(x)?;
    let p = params;
    let sup = support(member, p);
    if member == XII && x == 0.0 {
        let c = p.c();
        return Ok(if c == 1.0 { p.r() } else if c < 1.0 { f64::INFINITY } else { 0.0 });
    }
    if x <= sup.lep || x >= sup.uep {
        return Ok(0.0);
    }
    let r = p.r();
    let ln_f = match member {
        I => 0.0,
        II => r.ln() - x - (r + 1.0) * softplus(-x),
        III => {
            let k = p.k();
            (r * k).ln() - (k + 1.0) * x.ln() - (r + 1.0) * softplus(-k * x.ln())
        }
        IV => {
            let c = p.c();
            let lw = ((c - x).ln() - x.ln()) / c;
            r.ln() - (r + 1.0) * softplus(lw) + lw - x.ln() - (c - x).ln()
        }
        V | VI => {
            let (t, dt) = if member == V {
                let t = x.tan();
                (t, 1.0 + t * t)
            } else {
                (x.sinh(), x.cosh())
            };
            let z = p.k().ln() - t;
            r.ln() + z - (r + 1.0) * softplus(z) + dt.ln()
        }
        VII => (2.0 * r).ln() - r * softplus(-2.0 * x) - softplus(2.0 * x),
        VIII => {
            let (lg, _) = ln_cdf_sf(VIII, &Params::default(), x);
            r.ln() + (r - 1.0) * lg - PI.ln() - ln_cosh(x)
        }
        IX => {
            let k = p.k();
            let sp = softplus(x);
            let ln_den = if r * sp > 30.0 {
                k.ln() + r * sp + ((2.0 - k) * (-r * sp).exp() / k).ln_1p()
            } else {
                (2.0 + k * (r * sp).exp_m1()).ln()
            };
            LN_2 + k.ln() + r.ln() + (r - 1.0) * sp + x - 2.0 * ln_den
        }
        X => r.ln() - (r + 1.0) * softplus(-x * x) + LN_2 + x.ln() - x * x,
        XI => {
            let g = if x <= 0.5 { sin_defect(x).ln() } else { (-sin_defect(1.0 - x)).ln_1p() };
            let s = (PI * x).sin();
            r.ln() + (r - 1.0) * g + (2.0 * s * s).ln()
        }
        XII => {
            let c = p.c();
            (r * c).ln() + (c - 1.0) * x.ln() - (r + 1.0) * softplus(c * x.ln())
        }
        Xa => r.ln() + (r - 1.0) * ln_one_minus_exp(-x * x) + LN_2 + x.ln() - x * x,
        SinghMaddala => {
            let (a, c) = (p.a(), p.c());
            (r * a * c).ln() + (c - 1.0) * x.ln() - (r + 1.0) * softplus(a.ln() + c * x.ln())
        }
        Dagum => dagum_ln_pdf(p.a(), p.b(), p.c(), x),
        ToppLeoneDagum => {
            let (d, f) = (p.d(), p.f());
            let dag = Params::from_pairs(&[("a", p.a()), ("b", p.b()), ("c", p.c())])?;
            let (_, ls) = ln_cdf_sf(Dagum, &dag, x);
            let q = (d * ls).exp();
            (f * d).ln() + (f - 1.0) * (-q).ln_1p() + (d - 1.0) * ls + dagum_ln_pdf(p.a(), p.b(), p.c(), x)
        }
    };
    Ok(ln_f.exp())
}

fn dagum_ln_pdf(a: f64, b: f64, c: f64, x: f64) -> f64 {
    (a * b * c).ln() - (b + 1.0) * x.ln() - (c + 1.0) * softplus(a.ln() - b * x.ln())
}

fn ln_cosh(x: f64) -> f64 {
    let ax = x.abs();
    ax + (-2.0 * ax).exp().ln_1p() - LN_2
}

fn check_p(p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(BurrError::Domain { what: "probability", value: p })
    }
}

/// Generalized inverse `inf{x : F(x) >= p}` for `p` in `(0, 1)`.
///
/// ```
/// use burr_records::distributions::{quantile, MemberId, Params};
/// let p = Params::from_pairs(&[("r", 2.0)]).unwrap();
/// assert!((quantile(MemberId::XI, &p, 0.25).unwrap() - 0.5).abs() < 1e-12);
/// ```
pub fn quantile(member: MemberId, params: &Params, p: f64) -> Result<f64> {
    check_p(p)?;
    Ok(quantile_level(member, params, &Level::from_p(p))?.value)
}

/// Quantile at upper tail `u = exp(ln_u)`, usable when `u` underflows.
pub fn quantile_tail(member: MemberId, params: &Params, ln_u: f64) -> Result<TailPoint> {
    if !(ln_u < 0.0) || ln_u.is_infinite() {
        return Err(BurrError::Domain { what: "log tail probability", value: ln_u });
    }
    quantile_level(member, params, &Level::from_ln_tail(ln_u))
}

/// Quantile at a prepared [`Level`].
pub fn quantile_level(member: MemberId, params: &Params, lv: &Level) -> Result<TailPoint> {
    use MemberId::*;
    let p = params;
    let r = p.r();
    let with_gap = |value: f64, ln_value: Option<f64>, ln_gap: f64| TailPoint {
        value,
        ln_value,
        ln_gap: Some(ln_gap),
    };
    let tp = match member {
        I => with_gap(lv.p, Some(lv.ln_p), lv.ln_u),
        II => TailPoint::plain(-lv.ln_pow_excess(r)),
        III => TailPoint::from_ln(-lv.ln_pow_excess(r) / p.k()),
        IV => {
            let c = p.c();
            let lw = lv.ln_pow_excess(r);
            with_gap(c * sigmoid(-c * lw), Some(c.ln() - softplus(c * lw)), c.ln() - softplus(-c * lw))
        }
        V => {
            let y = p.k().ln() - lv.ln_pow_excess(r);
            let gap = if y > 0.0 { (1.0 / y).atan() } else { FRAC_PI_2 - y.atan() };
            with_gap(y.atan(), None, gap.ln())
        }
        VI => TailPoint::plain((p.k().ln() - lv.ln_pow_excess(r)).asinh()),
        VII => TailPoint::plain(-0.5 * lv.ln_pow_excess(r)),
        VIII => {
            let ln_theta = (FRAC_PI_2).ln() + lv.ln_p / r;
            if ln_theta < (PI / 4.0).ln() {
                let theta = ln_theta.exp();
                TailPoint::plain(ln_theta + ln_tan_ratio(theta))
            } else {
                let ln_v = (FRAC_PI_2).ln() + lv.ln_pow_deficit(r);
                TailPoint::plain(-ln_v - ln_tan_ratio(ln_v.exp()))
            }
        }
        IX => {
            let ln_a = softplus(LN_2 + lv.ln_p - p.k().ln() - lv.ln_u);
            TailPoint::plain(ln_expm1(ln_a / r))
        }
        X => {
            let s = -lv.ln_pow_excess(r);
            if s > 0.0 {
                TailPoint { value: s.sqrt(), ln_value: Some(0.5 * s.ln()), ln_gap: None }
            } else {
                TailPoint { value: 0.0, ln_value: Some(f64::NEG_INFINITY), ln_gap: None }
            }
        }
        XI => xi::quantile(r, lv)?,
        XII => TailPoint::from_ln(lv.swapped().ln_pow_excess(r) / p.c()),
        Xa => {
            let s = -lv.ln_pow_deficit(r);
            TailPoint { value: s.sqrt(), ln_value: Some(0.5 * s.ln()), ln_gap: None }
        }
        SinghMaddala => TailPoint::from_ln((lv.swapped().ln_pow_excess(r) - p.a().ln()) / p.c()),
        Dagum => TailPoint::from_ln((p.a().ln() - lv.ln_pow_excess(p.c())) / p.b()),
        ToppLeoneDagum => {
            let ln_tail_d = lv.ln_pow_deficit(p.f()) / p.d();
            let inner = Level::from_ln_tail(ln_tail_d);
            TailPoint::from_ln((p.a().ln() - inner.ln_pow_excess(p.c())) / p.b())
        }
    };
    Ok(tp)
}

/// Source of uniforms on the open interval `(0, 1)`.
pub trait UniformSource {
    fn next_uniform(&mut self) -> f64;
}

impl<R: rand::RngCore> UniformSource for R {
    fn next_uniform(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }
}

/// Replays a fixed list of uniforms, cycling when exhausted.
#[derive(Debug, Clone)]
pub struct FixedUniforms {
    values: Vec<f64>,
    pos: usize,
}

impl FixedUniforms {
    pub fn new(values: Vec<f64>) -> Self {
        assert!(!values.is_empty(), "FixedUniforms needs at least one value");
        FixedUniforms { values, pos: 0 }
    }
}

impl UniformSource for FixedUniforms {
    fn next_uniform(&mut self) -> f64 {
        let v = self.values[self.pos % self.values.len()];
        self.pos += 1;
        v
    }
}

/// Inverse-transform sample of size `n`.
pub fn sample<S: UniformSource + ?Sized>(
    member: MemberId,
    params: &Params,
    n: usize,
    rng: &mut S,
) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(BurrError::Domain { what: "sample size", value: 0.0 });
    }
    (0..n).map(|_| quantile(member, params, rng.next_uniform())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pr(pairs: &[(&str, f64)]) -> Params {
        Params::from_pairs(pairs).unwrap()
    }

    #[test]
    fn parses_member_names() {
        assert_eq!("xii".parse::<MemberId>().unwrap(), MemberId::XII);
        assert_eq!("XA".parse::<MemberId>().unwrap(), MemberId::Xa);
        assert_eq!("Burr IV".parse::<MemberId>().unwrap(), MemberId::IV);
        assert_eq!("singh-maddala".parse::<MemberId>().unwrap(), MemberId::SinghMaddala);
        assert!("XIII".parse::<MemberId>().is_err());
    }

    #[test]
    fn params_reject_bad_values() {
        assert!(matches!(Params::new().with("k", 0.0), Err(BurrError::InvalidParameter { .. })));
        assert!(matches!(Params::new().with("r", f64::NAN), Err(BurrError::InvalidParameter { .. })));
        assert!(matches!(Params::new().with("z", 1.0), Err(BurrError::UnknownParameter(_))));
        let err = MemberId::IV.require(&pr(&[("r", 1.0)])).unwrap_err();
        assert_eq!(err, BurrError::MissingParameters { member: MemberId::IV, missing: vec!["c"] });
    }

    #[test]
    fn table_values() {
        assert_eq!(cdf(MemberId::II, &pr(&[("r", 1.0)]), 0.0).unwrap(), 0.5);
        assert_relative_eq!(cdf(MemberId::X, &pr(&[("r", 3.0)]), 0.0).unwrap(), 0.125, max_relative = 1e-15);
        assert_relative_eq!(
            cdf(MemberId::XII, &pr(&[("r", 2.0), ("c", 1.0)]), 1.0).unwrap(),
            0.75,
            max_relative = 1e-15
        );
        assert_eq!(pdf(MemberId::I, &Params::new(), 0.5).unwrap(), 1.0);
        assert_eq!(pdf(MemberId::XII, &pr(&[("r", 1.0), ("c", 1.0)]), 0.0).unwrap(), 1.0);
        assert_eq!(quantile(MemberId::I, &Params::new(), 0.3).unwrap(), 0.3);
        assert_relative_eq!(quantile(MemberId::XI, &pr(&[("r", 2.0)]), 0.25).unwrap(), 0.5, max_relative = 1e-12);
        assert_relative_eq!(
            quantile(MemberId::XII, &pr(&[("r", 1.0), ("c", 1.0)]), 0.5).unwrap(),
            1.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn supports() {
        let s = support(MemberId::IV, &pr(&[("c", 3.0)]));
        assert_eq!((s.lep, s.uep), (0.0, 3.0));
        let s = support(MemberId::XI, &Params::new());
        assert_eq!((s.lep, s.uep), (0.0, 1.0));
        let s = support(MemberId::VIII, &Params::new());
        assert_eq!((s.lep, s.uep), (f64::NEG_INFINITY, f64::INFINITY));
    }

    #[test]
    fn burr_x_plateau() {
        let p = pr(&[("r", 2.0)]);
        assert_eq!(quantile(MemberId::X, &p, 0.2).unwrap(), 0.0);
        assert_eq!(quantile(MemberId::X, &p, 0.25).unwrap(), 0.0);
        assert!(quantile(MemberId::X, &p, 0.26).unwrap() > 0.0);
        assert_eq!(cdf(MemberId::X, &p, -0.1).unwrap(), 0.0);
    }

    #[test]
    fn boundary_and_domain_errors() {
        assert!(quantile(MemberId::II, &Params::new(), 0.0).is_err());
        assert!(quantile(MemberId::II, &Params::new(), 1.0).is_err());
        assert!(cdf(MemberId::II, &Params::new(), f64::NAN).is_err());
        assert!(quantile_tail(MemberId::II, &Params::new(), 0.0).is_err());
        assert_eq!(cdf(MemberId::IV, &pr(&[("c", 2.0)]), 5.0).unwrap(), 1.0);
        assert_eq!(cdf(MemberId::I, &Params::new(), -1.0).unwrap(), 0.0);
    }

    #[test]
    fn tail_path_keeps_logs_when_value_overflows() {
        let p = pr(&[("k", 0.5), ("r", 1.0)]);
        let tp = quantile_tail(MemberId::III, &p, -1000.0).unwrap();
        assert!(tp.overflowed());
        assert_relative_eq!(tp.ln_value.unwrap(), 2000.0, max_relative = 1e-12);
        let tp = quantile_tail(MemberId::I, &Params::new(), -3.0).unwrap();
        assert_relative_eq!(tp.value, 1.0 - (-3.0f64).exp(), max_relative = 1e-15);
        assert_eq!(tp.ln_gap, Some(-3.0));
    }

    #[test]
    fn fixed_uniform_sampling() {
        let mut src = FixedUniforms::new(vec![0.1, 0.5, 0.9]);
        assert_eq!(sample(MemberId::I, &Params::new(), 3, &mut src).unwrap(), vec![0.1, 0.5, 0.9]);
        let mut src = FixedUniforms::new(vec![0.5]);
        let x = sample(MemberId::XII, &pr(&[("r", 1.0), ("c", 1.0)]), 1, &mut src).unwrap();
        assert_relative_eq!(x[0], 1.0, max_relative = 1e-15);
    }
}
