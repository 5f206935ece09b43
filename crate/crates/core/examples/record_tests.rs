// The z-test on an observed record value, its size under the null, and the
// command-line front end driving the same computation.

use burr_records::asymptotics::{record_hypothesis_test, Variant};
use burr_records::cli::{parse_args, run};
use burr_records::distributions::{quantile_tail, MemberId, Params};
use burr_records::records::simulate_records;
use burr_records::Result;

pub fn run_example() -> Result<()> {
    let p = Params::from_pairs(&[("r", 2.0), ("c", 1.0)])?;
    let n = 500;
    let centre = quantile_tail(MemberId::XII, &p, -(n as f64))?.value;
    for x in [centre, centre * 10.0, centre * 1e10] {
        let t = record_hypothesis_test(x, n, MemberId::XII, &p, 0.05, Variant::Canonical)?;
        println!("x={x:.4e} z={:+.3} p={:.4} reject={}", t.z, t.pvalue, t.reject);
    }
    let t = record_hypothesis_test(1.5, n, MemberId::I, &Params::new(), 0.05, Variant::Canonical)?;
    println!("Burr I, x=1.5: reject={} flag={:?}", t.reject, t.flag);

    let draws = simulate_records(MemberId::XII, &p, n, 2000, 77)?;
    let mut rejected = 0;
    for d in &draws {
        if record_hypothesis_test(d.value, n, MemberId::XII, &p, 0.05, Variant::Canonical)?.reject {
            rejected += 1;
        }
    }
    println!("size at 5%: {:.2}%", 100.0 * rejected as f64 / draws.len() as f64);

    let cfg = parse_args(["burr", "test", "--member", "xii", "--param", "r=2", "--param", "c=1", "--x", "1e60", "--n", "500", "--format", "csv"])
        .expect("valid arguments");
    print!("{}", String::from_utf8_lossy(&run(&cfg).bytes));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
