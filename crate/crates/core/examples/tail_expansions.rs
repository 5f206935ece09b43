// Two-term extreme-quantile expansions, their remainders, and the fitted
// remainder order.

use burr_records::distributions::{MemberId, Params};
use burr_records::expansions::{
    expand_quantile, exact_quantity, fit_remainder_order, log_grid, remainder, remainder_order, xi_constants,
};
use burr_records::Result;

pub fn run_example() -> Result<()> {
    let cases = [
        (MemberId::II, Params::from_pairs(&[("r", 2.0)])?),
        (MemberId::IV, Params::from_pairs(&[("c", 2.5), ("r", 1.0)])?),
        (MemberId::V, Params::from_pairs(&[("k", 1.0), ("r", 1.0)])?),
        (MemberId::XII, Params::from_pairs(&[("r", 2.0), ("c", 2.0)])?),
    ];
    let grid = log_grid(1e-3, 1e-7, 9);
    for (member, p) in &cases {
        let order = remainder_order(*member, p)?;
        println!("Burr {member}: {:?} exponent {} (relative: {})", order.kind, order.exponent, order.relative);
        for &u in &[1e-3, 1e-5, 1e-7] {
            let e = expand_quantile(*member, p, u)?;
            println!(
                "  u={u:e} exact={:<22} two-term={:<22} remainder={:.3e}",
                exact_quantity(*member, p, u)?,
                e.value,
                remainder(*member, p, u)?
            );
        }
        println!("  fitted order: {:?}", fit_remainder_order(*member, p, &grid)?);
    }

    let xi = xi_constants(1.0);
    println!("Burr XI tail constant: fitted {:.6}, series {:.6}, commonly quoted {:.6}", xi.alpha, xi.alpha_series, xi.alpha_quoted);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
