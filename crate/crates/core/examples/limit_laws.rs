// Monte Carlo check of the Gaussian limits of standardized record values,
// and the pathwise coupling with the standardized partial sum.

use burr_records::asymptotics::{coupling_residual, run_experiment, Variant};
use burr_records::distributions::{MemberId, Params};
use burr_records::records::simulate_records;
use burr_records::Result;

pub fn run_example() -> Result<()> {
    let cases = [
        (MemberId::I, Params::new()),
        (MemberId::III, Params::from_pairs(&[("k", 2.0), ("r", 1.0)])?),
        (MemberId::V, Params::from_pairs(&[("k", 1.0), ("r", 1.0)])?),
        (MemberId::X, Params::from_pairs(&[("r", 1.0)])?),
        (MemberId::XII, Params::from_pairs(&[("r", 2.0), ("c", 1.0)])?),
    ];
    println!("{:<5} {:>9} {:>9} {:>9} {:>8} {:>8}", "", "mean", "var", "target", "KS", "p");
    for (member, p) in &cases {
        let r = run_experiment(*member, p, 1000, 2000, 42, Variant::Canonical)?;
        println!(
            "{member:<5} {:>9.4} {:>9.4} {:>9.4} {:>8.4} {:>8.3}",
            r.sample_mean, r.sample_variance, r.target.variance, r.ks_distance, r.ks_pvalue
        );
    }

    let p = Params::from_pairs(&[("r", 1.0)])?;
    let alt = run_experiment(MemberId::X, &p, 1000, 2000, 42, Variant::Alternative)?;
    println!("X alternative form: mean {:.4} var {:.4}", alt.sample_mean, alt.sample_variance);

    for n in [100, 1000, 10_000] {
        let draws = simulate_records(MemberId::X, &p, n, 200, 5)?;
        let mut res: Vec<f64> = draws.iter().map(|d| coupling_residual(MemberId::X, &p, d).map(f64::abs)).collect::<Result<_>>()?;
        res.sort_by(f64::total_cmp);
        println!("X coupling residual median at n={n}: {:.3e}", res[100]);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
