// Extreme-value domains of every Burr member with numeric probes, plus the
// auxiliary functions of the Gumbel-domain members.

use burr_records::distributions::{MemberId, Params};
use burr_records::evt::{aux_s, aux_s_numeric, classify, gev_cdf, hb_limit, mean_excess, probe_gamma};
use burr_records::Result;

pub fn run_example() -> Result<()> {
    let p = Params::from_pairs(&[("k", 2.0), ("c", 2.5), ("r", 1.5)])?;
    println!("{:<5} {:>9} {:>10} {:>6} {:>12} {:>9}", "", "gamma", "uep", "log?", "probe", "target");
    for member in MemberId::BURR {
        let d = classify(member, &p)?;
        let e = probe_gamma(member, &p, 2.0, &[1e-6])?[0];
        println!(
            "{member:<5} {:>9.4} {:>10.4} {:>6} {:>12.5} {:>9.4}",
            d.gamma,
            d.uep,
            format!("{:?}", d.transform),
            e.estimate,
            e.target
        );
    }

    println!("\ns(u) closed form vs finite difference, and sqrt(n) s(e^-n)");
    for member in [MemberId::V, MemberId::VI, MemberId::X, MemberId::Xa] {
        let s = aux_s(member, &p, 1e-5)?;
        let fd = aux_s_numeric(member, &p, 1e-5)?;
        let hb = hb_limit(member, &p, &[100, 10_000])?;
        println!("{member:<4} s(1e-5) = {s:.10} (fd {fd:.10}); hb: {:.4e} -> {:.4e}", hb[0], hb[1]);
    }

    let pareto = Params::from_pairs(&[("r", 3.0), ("c", 1.0)])?;
    println!("\nBurr XII (r=3, c=1) mean excess at x=1e3: {:.3}", mean_excess(MemberId::XII, &pareto, 1e3)?);
    println!("GEV(0.5) at 1: {:.6}", gev_cdf(0.5, 1.0));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
