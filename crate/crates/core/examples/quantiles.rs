// Exact quantiles, the tail path for probabilities far below machine
// epsilon, and inverse-transform sampling.

use burr_records::distributions::{cdf, quantile, quantile_tail, sample, MemberId, Params};
use burr_records::records::replication_rng;
use burr_records::Result;

pub fn run_example() -> Result<()> {
    let p = Params::from_pairs(&[("r", 2.0), ("c", 3.0)])?;
    println!("Burr XII (r=2, c=3)");
    for prob in [0.01, 0.5, 0.99, 1.0 - 1e-9] {
        let x = quantile(MemberId::XII, &p, prob)?;
        println!("  p = {prob:<12} x = {x:<22} F(x) = {}", cdf(MemberId::XII, &p, x)?);
    }

    // 1 - u with u = e^{-800} is 1.0 in double precision; the tail path is not.
    let tp = quantile_tail(MemberId::XII, &p, -800.0)?;
    println!("  u = e^-800: x = {:.6e}, ln x = {:.6}", tp.value, tp.ln_value.unwrap());
    let tp = quantile_tail(MemberId::IV, &Params::from_pairs(&[("c", 2.0), ("r", 1.0)])?, -60.0)?;
    println!("Burr IV (c=2, r=1) at u = e^-60: x = {}, ln(c - x) = {:.6}", tp.value, tp.ln_gap.unwrap());

    // Burr XI has no closed-form inverse.
    let xi = Params::from_pairs(&[("r", 1.5)])?;
    println!("Burr XI (r=1.5) median = {:.12}", quantile(MemberId::XI, &xi, 0.5)?);

    let dagum = Params::from_pairs(&[("a", 1.0), ("b", 2.5), ("c", 0.8)])?;
    let xs = sample(MemberId::Dagum, &dagum, 5, &mut replication_rng(1, 0))?;
    println!("Dagum (a=1, b=2.5, c=0.8) sample: {xs:.4?}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
