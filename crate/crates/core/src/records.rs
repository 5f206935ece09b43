//! Record values via the exponential partial-sum representation, plus a
//! direct stream-extraction oracle.
//!
//! The n-th record of `X_j = F^{-1}(1 - e^{-E_j})` is `F^{-1}(1 - e^{-S_n})`
//! with `S_n` a sum of n unit exponentials. The tail probability is carried
//! as `ln u = -S_n`, so nothing underflows at large n.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::distributions::{quantile, quantile_tail, MemberId, Params, UniformSource};
use crate::error::{BurrError, Result};

/// The n-th record value with the partial sum that generated it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RecordDraw {
    pub n: u64,
    pub value: f64,
    /// `ln value` for members with positive support.
    pub ln_value: Option<f64>,
    /// `ln(uep - value)` for members with a finite upper endpoint.
    pub ln_gap: Option<f64>,
    pub s_n: f64,
    pub s_star: f64,
    /// `value` overflowed; only `ln_value` is meaningful.
    pub overflowed: bool,
}

impl RecordDraw {
    /// Deterministic plug-in of a given partial sum.
    pub fn from_partial_sum(member: MemberId, params: &Params, n: u64, s_n: f64) -> Result<Self> {
        if n == 0 {
            return Err(BurrError::Domain { what: "record index n", value: 0.0 });
        }
        if !(s_n > 0.0) || !s_n.is_finite() {
            return Err(BurrError::Domain { what: "partial sum S_n", value: s_n });
        }
        let tp = quantile_tail(member, params, -s_n)?;
        let nf = n as f64;
        Ok(RecordDraw {
            n,
            value: tp.value,
            ln_value: tp.ln_value,
            ln_gap: tp.ln_gap,
            s_n,
            s_star: (s_n - nf) / nf.sqrt(),
            overflowed: tp.overflowed(),
        })
    }
}

/// Records of a finite stream and the indices (1-based) where they occur.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StreamRecords {
    pub records: Vec<f64>,
    pub times: Vec<u64>,
}

fn unit_exponential<S: UniformSource + ?Sized>(rng: &mut S) -> f64 {
    -rng.next_uniform().ln()
}

/// The n-th record value, drawn through `S_n`.
///
/// Matches strict stream records only for continuous laws. Burr X has an
/// atom at 0 that strict records step over.
///
/// ```
/// use burr_records::distributions::{FixedUniforms, MemberId, Params};
/// use burr_records::records::simulate_record;
/// let mut src = FixedUniforms::new(vec![(-1.0f64).exp()]);
/// let d = simulate_record(MemberId::I, &Params::new(), 3, &mut src).unwrap();
/// assert!((d.value - (1.0 - (-3.0f64).exp())).abs() < 1e-12);
/// ```
pub fn simulate_record<S: UniformSource + ?Sized>(
    member: MemberId,
    params: &Params,
    n: u64,
    rng: &mut S,
) -> Result<RecordDraw> {
    if n == 0 {
        return Err(BurrError::Domain { what: "record index n", value: 0.0 });
    }
    let s: f64 = (0..n).map(|_| unit_exponential(rng)).sum();
    RecordDraw::from_partial_sum(member, params, n, s)
}

/// The first n records jointly, from prefix sums of one exponential sequence.
pub fn record_path<S: UniformSource + ?Sized>(
    member: MemberId,
    params: &Params,
    n: u64,
    rng: &mut S,
) -> Result<Vec<RecordDraw>> {
    if n == 0 {
        return Err(BurrError::Domain { what: "record index n", value: 0.0 });
    }
    let mut s = 0.0;
    (1..=n)
        .map(|k| {
            s += unit_exponential(rng);
            RecordDraw::from_partial_sum(member, params, k, s)
        })
        .collect()
}

/// Strict upper records of `stream`, scanned left to right.
pub fn extract_records(stream: &[f64]) -> Result<StreamRecords> {
    let (&first, rest) = stream
        .split_first()
        .ok_or(BurrError::Domain { what: "stream length", value: 0.0 })?;
    let mut out = StreamRecords { records: vec![first], times: vec![1] };
    let mut top = first;
    for (i, &x) in rest.iter().enumerate() {
        if x > top {
            top = x;
            out.records.push(x);
            out.times.push(i as u64 + 2);
        }
    }
    Ok(out)
}

/// Draws allowed per replication in the stream oracle.
pub const STREAM_CAP: u64 = 1_000_000;

/// Replication `rep`'s random stream under master `seed`.
///
/// Each replication gets its own ChaCha stream, so results do not depend on
/// how replications are scheduled across threads.
pub fn replication_rng(seed: u64, rep: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(rep);
    rng
}

/// One iid stream scanned until its n-th strict record, or `None` past `cap` draws.
pub fn stream_record<S: UniformSource + ?Sized>(
    member: MemberId,
    params: &Params,
    n: u64,
    cap: u64,
    rng: &mut S,
) -> Result<Option<f64>> {
    let mut top = f64::NEG_INFINITY;
    let mut count = 0;
    for _ in 0..cap {
        let x = quantile(member, params, rng.next_uniform())?;
        if x > top {
            top = x;
            count += 1;
            if count == n {
                return Ok(Some(top));
            }
        }
    }
    Ok(None)
}

/// n-th records from the stream oracle, with the number of capped streams redrawn.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StreamSample {
    pub values: Vec<f64>,
    pub resampled: u64,
}

/// `m` replications of `simulate_record`, in replication order.
pub fn simulate_records(member: MemberId, params: &Params, n: u64, m: usize, seed: u64) -> Result<Vec<RecordDraw>> {
    member.require(params)?;
    (0..m as u64)
        .into_par_iter()
        .map(|rep| simulate_record(member, params, n, &mut replication_rng(seed, rep)))
        .collect()
}

/// `m` replications of the stream oracle. Streams that hit `cap` are redrawn
/// from the same replication stream and counted.
pub fn stream_records(member: MemberId, params: &Params, n: u64, m: usize, seed: u64, cap: u64) -> Result<StreamSample> {
    member.require(params)?;
    if cap < n {
        return Err(BurrError::Domain { what: "stream cap (must be at least n)", value: cap as f64 });
    }
    let per_rep: Vec<(f64, u64)> = (0..m as u64)
        .into_par_iter()
        .map(|rep| {
            let mut rng = replication_rng(seed, rep);
            let mut redrawn = 0;
            loop {
                if let Some(x) = stream_record(member, params, n, cap, &mut rng)? {
                    return Ok((x, redrawn));
                }
                redrawn += 1;
            }
        })
        .collect::<Result<_>>()?;
    Ok(StreamSample {
        values: per_rep.iter().map(|p| p.0).collect(),
        resampled: per_rep.iter().map(|p| p.1).sum(),
    })
}
