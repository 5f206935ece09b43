//! Standardized record statistics, their Gaussian limits, the Monte Carlo
//! harness and the z-test built on them.
//!
//! Every statistic lives in the normal frame: limits of the form
//! `exp(N(0, σ²))` are tested on `n^{-1/2} log(...)`.

mod ks;

use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

pub use ks::{kolmogorov_sf, ks_test, ks_two_sample};

use crate::distributions::{quantile_tail, support, MemberId, Params, TailPoint};
use crate::error::{BurrError, Result};
use crate::evt::aux_s_ln;
use crate::expansions::xi_constants;
use crate::numeric::normal_sf;
use crate::records::{replication_rng, simulate_record, RecordDraw};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawShape {
    Normal,
    LogOfVariableIsNormal,
}

/// Limit law of a standardized record statistic. `mean` and `variance`
/// are always those of the normal frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LawSpec {
    pub shape: LawShape,
    pub mean: f64,
    pub variance: f64,
}

impl LawSpec {
    pub fn sd(&self) -> f64 {
        self.variance.sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    #[default]
    Canonical,
    /// Gap to `F^{-1}(1 - e^{-n})` over `s(e^{-n}) √n`; Burr V, VI, X and Xa only.
    Alternative,
}

impl FromStr for Variant {
    type Err = BurrError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "canonical" => Ok(Variant::Canonical),
            "alternative" | "alt" => Ok(Variant::Alternative),
            _ => Err(BurrError::Invalid(format!("unknown variant `{s}` (expected canonical or alternative)"))),
        }
    }
}

fn supports_alternative(member: MemberId) -> bool {
    matches!(member, MemberId::V | MemberId::VI | MemberId::X | MemberId::Xa)
}

/// Limit law of the canonical statistic.
pub fn target_law(member: MemberId, params: &Params) -> Result<LawSpec> {
    use MemberId::*;
    let p = params;
    let (shape, variance) = match member {
        I => (LawShape::LogOfVariableIsNormal, 1.0),
        III => (LawShape::LogOfVariableIsNormal, 1.0 / (p.k() * p.k())),
        IV => (LawShape::LogOfVariableIsNormal, p.c() * p.c()),
        XI => (LawShape::LogOfVariableIsNormal, 1.0 / 9.0),
        XII => (LawShape::LogOfVariableIsNormal, 1.0 / (p.r() * p.c()).powi(2)),
        II | V | VI | VIII => (LawShape::Normal, 1.0),
        VII | X | Xa => (LawShape::Normal, 0.25),
        IX => (LawShape::Normal, 1.0 / (p.r() * p.r())),
        SinghMaddala | Dagum | ToppLeoneDagum => {
            return Err(BurrError::Unsupported { member, operation: "record limit law" })
        }
    };
    Ok(LawSpec { shape, mean: 0.0, variance })
}

/// Limit law of the statistic for `variant`.
pub fn variant_law(member: MemberId, params: &Params, variant: Variant) -> Result<LawSpec> {
    match variant {
        Variant::Canonical => target_law(member, params),
        Variant::Alternative => {
            StatisticForm::new(member, params, variant)?;
            Ok(LawSpec { shape: LawShape::Normal, mean: 0.0, variance: 1.0 })
        }
    }
}

/// A member's standardized statistic, prepared once for repeated evaluation.
#[derive(Debug, Clone, Copy)]
pub struct StatisticForm {
    pub member: MemberId,
    pub params: Params,
    pub variant: Variant,
    xi_alpha: f64,
}

fn ln_of(tp: &TailPoint) -> Result<f64> {
    let v = tp.ln_value.unwrap_or_else(|| tp.value.ln());
    if v.is_finite() {
        Ok(v)
    } else {
        Err(BurrError::Statistic(format!("log of nonpositive record value {}", tp.value)))
    }
}

fn ln_gap_of(tp: &TailPoint) -> Result<f64> {
    match tp.ln_gap {
        Some(g) if g.is_finite() => Ok(g),
        _ => Err(BurrError::Statistic(format!("record value {} is at or beyond the upper endpoint", tp.value))),
    }
}

impl StatisticForm {
    pub fn new(member: MemberId, params: &Params, variant: Variant) -> Result<Self> {
        target_law(member, params)?;
        member.require(params)?;
        if variant == Variant::Alternative && !supports_alternative(member) {
            return Err(BurrError::Unsupported { member, operation: "alternative statistic" });
        }
        let xi_alpha = if member == MemberId::XI { xi_constants(params.r()).alpha } else { f64::NAN };
        Ok(StatisticForm { member, params: *params, variant, xi_alpha })
    }

    /// Statistic of the n-th record at `tp`, in the normal frame.
    pub fn evaluate(&self, n: u64, tp: &TailPoint) -> Result<f64> {
        use MemberId::*;
        if n < 2 {
            return Err(BurrError::Domain { what: "record index n (need n >= 2)", value: n as f64 });
        }
        let nf = n as f64;
        let sq = nf.sqrt();
        let p = &self.params;
        if self.variant == Variant::Alternative {
            let q = quantile_tail(self.member, p, -nf)?;
            let s = aux_s_ln(self.member, p, -nf)?;
            let diff = if self.member == V {
                ln_gap_of(&q)?.exp() - ln_gap_of(tp)?.exp()
            } else {
                tp.value - q.value
            };
            return Ok(diff / (s * sq));
        }
        let (k, c, r) = (p.k(), p.c(), p.r());
        let x = tp.value;
        let stat = match self.member {
            I => (nf + ln_gap_of(tp)?) / sq,
            II => (x - nf) / sq,
            III => (ln_of(tp)? - r.ln() / k - nf / k) / sq,
            IV => (c * r.ln() + c * nf - c.ln() + ln_gap_of(tp)?) / sq,
            V => sq * (ln_gap_of(tp)? + nf.ln()),
            VI => sq * (x.exp() / (2.0 * (nf + (k * r).ln())) - 1.0),
            VII => (x - 0.5 * nf - 0.5 * r.ln()) / sq,
            VIII => (x - nf - (2.0 * r / std::f64::consts::PI).ln()) / sq,
            IX => (x - nf / r - (2.0 / k).ln() / r) / sq,
            X | Xa => sq * (ln_of(tp)? - 0.5 * nf.ln()),
            XI => (self.xi_alpha.ln() / 3.0 + nf / 3.0 + ln_gap_of(tp)?) / sq,
            XII => (ln_of(tp)? - nf / (r * c)) / sq,
            SinghMaddala | Dagum | ToppLeoneDagum => unreachable!("rejected in StatisticForm::new"),
        };
        if stat.is_finite() {
            Ok(stat)
        } else {
            Err(BurrError::Statistic(format!("non-finite statistic for record value {x}")))
        }
    }

    /// Coefficient of `S_n*` in the statistic's pathwise expansion.
    pub fn gamma_eff(&self) -> f64 {
        use MemberId::*;
        if self.variant == Variant::Alternative {
            return 1.0;
        }
        let p = &self.params;
        match self.member {
            I | V => -1.0,
            II | VI | VIII => 1.0,
            III => 1.0 / p.k(),
            IV => -p.c(),
            VII | X | Xa => 0.5,
            IX => 1.0 / p.r(),
            XI => -1.0 / 3.0,
            XII => 1.0 / (p.r() * p.c()),
            SinghMaddala | Dagum | ToppLeoneDagum => f64::NAN,
        }
    }
}

fn draw_point(draw: &RecordDraw) -> TailPoint {
    TailPoint { value: draw.value, ln_value: draw.ln_value, ln_gap: draw.ln_gap }
}

/// Standardized statistic of a simulated record, in the normal frame.
pub fn standardized_statistic(member: MemberId, params: &Params, draw: &RecordDraw, variant: Variant) -> Result<f64> {
    StatisticForm::new(member, params, variant)?.evaluate(draw.n, &draw_point(draw))
}

/// `statistic - γ_eff · S_n*` for the canonical statistic.
pub fn coupling_residual(member: MemberId, params: &Params, draw: &RecordDraw) -> Result<f64> {
    coupling_residual_with(&StatisticForm::new(member, params, Variant::Canonical)?, draw)
}

/// As [`coupling_residual`], for a prepared form of either variant.
pub fn coupling_residual_with(form: &StatisticForm, draw: &RecordDraw) -> Result<f64> {
    Ok(form.evaluate(draw.n, &draw_point(draw))? - form.gamma_eff() * draw.s_star)
}

/// Monte Carlo sample of a standardized statistic and its fit to the limit law.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub member: MemberId,
    pub params: Params,
    pub n: u64,
    pub m: usize,
    pub seed: u64,
    pub variant: Variant,
    pub target: LawSpec,
    pub ks_distance: f64,
    pub ks_pvalue: f64,
    pub sample_mean: f64,
    pub sample_variance: f64,
    /// Replications whose statistic was undefined and excluded.
    pub failures: usize,
    /// More than 1% of replications failed.
    pub warning: bool,
    pub statistics: Vec<f64>,
}

pub fn mean_and_variance(xs: &[f64]) -> (f64, f64) {
    let m = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / m;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (m - 1.0);
    (mean, var)
}

/// Runs `m` replications of the n-th record and tests the statistics against the limit law.
///
/// Replication `i` uses substream `i` of `seed`, so the report does not
/// depend on the number of threads.
pub fn run_experiment(
    member: MemberId,
    params: &Params,
    n: u64,
    m: usize,
    seed: u64,
    variant: Variant,
) -> Result<ExperimentReport> {
    if n < 10 {
        return Err(BurrError::Domain { what: "record index n (need n >= 10)", value: n as f64 });
    }
    if m < 100 {
        return Err(BurrError::Domain { what: "replication count m (need m >= 100)", value: m as f64 });
    }
    let form = StatisticForm::new(member, params, variant)?;
    let target = variant_law(member, params, variant)?;
    let outcomes: Vec<Result<f64>> = (0..m as u64)
        .into_par_iter()
        .map(|rep| {
            let draw = simulate_record(member, params, n, &mut replication_rng(seed, rep))?;
            form.evaluate(n, &draw_point(&draw))
        })
        .collect();
    let mut statistics = Vec::with_capacity(m);
    let mut failures = 0;
    for o in outcomes {
        match o {
            Ok(s) => statistics.push(s),
            Err(BurrError::Statistic(_)) => failures += 1,
            Err(e) => return Err(e),
        }
    }
    let (ks_distance, ks_pvalue) = ks_test(&statistics, &target)?;
    let (sample_mean, sample_variance) = mean_and_variance(&statistics);
    Ok(ExperimentReport {
        member,
        params: *params,
        n,
        m,
        seed,
        variant,
        target,
        ks_distance,
        ks_pvalue,
        sample_mean,
        sample_variance,
        failures,
        warning: failures * 100 > m,
        statistics,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TestFlag {
    SupportViolation,
}

/// Outcome of the two-sided z-test on an observed n-th record.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HypothesisTest {
    pub statistic: f64,
    pub z: f64,
    pub pvalue: f64,
    pub reject: bool,
    pub flag: Option<TestFlag>,
}

/// Tests whether `observed` is a plausible n-th record of the hypothesized member.
///
/// ```
/// use burr_records::asymptotics::{record_hypothesis_test, TestFlag, Variant};
/// use burr_records::distributions::{MemberId, Params};
/// let t = record_hypothesis_test(1.5, 50, MemberId::I, &Params::new(), 0.05, Variant::Canonical).unwrap();
/// assert!(t.reject);
/// assert_eq!(t.flag, Some(TestFlag::SupportViolation));
/// ```
pub fn record_hypothesis_test(
    observed: f64,
    n: u64,
    member: MemberId,
    params: &Params,
    significance: f64,
    variant: Variant,
) -> Result<HypothesisTest> {
    if !(significance > 0.0 && significance < 1.0) {
        return Err(BurrError::Domain { what: "significance", value: significance });
    }
    let form = StatisticForm::new(member, params, variant)?;
    let law = variant_law(member, params, variant)?;
    let sup = support(member, params);
    let inside = observed > sup.lep && observed < sup.uep;
    if !inside {
        return Ok(HypothesisTest {
            statistic: f64::NAN,
            z: f64::NAN,
            pvalue: 0.0,
            reject: true,
            flag: Some(TestFlag::SupportViolation),
        });
    }
    let tp = TailPoint {
        value: observed,
        ln_value: (sup.lep >= 0.0).then(|| observed.ln()),
        ln_gap: sup.uep.is_finite().then(|| (sup.uep - observed).ln()),
    };
    let statistic = form.evaluate(n, &tp)?;
    let z = (statistic - law.mean) / law.sd();
    let pvalue = (2.0 * normal_sf(z.abs())).min(1.0);
    Ok(HypothesisTest { statistic, z, pvalue, reject: pvalue < significance, flag: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(pairs: &[(&str, f64)]) -> Params {
        Params::from_pairs(pairs).unwrap()
    }

    #[test]
    fn law_table() {
        let l = target_law(MemberId::IX, &pr(&[("r", 2.0), ("k", 1.0)])).unwrap();
        assert_eq!((l.shape, l.variance), (LawShape::Normal, 0.25));
        assert_eq!(target_law(MemberId::X, &pr(&[("r", 7.0)])).unwrap().variance, 0.25);
        let l = target_law(MemberId::III, &pr(&[("k", 2.0), ("r", 9.0)])).unwrap();
        assert_eq!((l.shape, l.variance), (LawShape::LogOfVariableIsNormal, 0.25));
        assert!(target_law(MemberId::Dagum, &Params::new()).is_err());
    }

    #[test]
    fn alternative_is_restricted() {
        assert!(StatisticForm::new(MemberId::II, &pr(&[("r", 1.0)]), Variant::Alternative).is_err());
        assert!(StatisticForm::new(MemberId::X, &pr(&[("r", 1.0)]), Variant::Alternative).is_ok());
        assert_eq!("ALT".parse::<Variant>().unwrap(), Variant::Alternative);
    }

    #[test]
    fn burr_i_residual_is_exactly_zero() {
        for &(n, s) in &[(10u64, 7.3), (100, 113.9), (10_000, 9_871.25)] {
            let d = RecordDraw::from_partial_sum(MemberId::I, &Params::new(), n, s).unwrap();
            assert_eq!(coupling_residual(MemberId::I, &Params::new(), &d).unwrap(), 0.0);
        }
    }
}
