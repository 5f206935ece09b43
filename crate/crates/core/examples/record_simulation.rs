// Record values from the exponential partial-sum representation, checked
// against records extracted from raw iid streams.

use burr_records::asymptotics::ks_two_sample;
use burr_records::distributions::{MemberId, Params};
use burr_records::records::{extract_records, record_path, replication_rng, simulate_records, stream_records, STREAM_CAP};
use burr_records::Result;

pub fn run_example() -> Result<()> {
    let s = extract_records(&[3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0])?;
    println!("records {:?} at times {:?}", s.records, s.times);

    let p = Params::from_pairs(&[("r", 1.0), ("c", 1.0)])?;
    let path = record_path(MemberId::XII, &p, 6, &mut replication_rng(3, 0))?;
    for d in &path {
        println!("  n={} S_n={:.4} value={:.4}", d.n, d.s_n, d.value);
    }

    // Record 2000 of Burr XII with heavy tail: the value overflows, its log does not.
    let heavy = Params::from_pairs(&[("r", 0.5), ("c", 0.5)])?;
    let d = &simulate_records(MemberId::XII, &heavy, 2000, 1, 8)?[0];
    println!("n=2000 heavy tail: overflowed={} ln value={:.3}", d.overflowed, d.ln_value.unwrap());

    let p2 = Params::from_pairs(&[("r", 2.0)])?;
    let rep: Vec<f64> = simulate_records(MemberId::II, &p2, 5, 1000, 1)?.iter().map(|d| d.value).collect();
    let oracle = stream_records(MemberId::II, &p2, 5, 1000, 2, STREAM_CAP)?;
    let (dist, pv) = ks_two_sample(&rep, &oracle.values)?;
    println!("5th record of Burr II: representation vs streams D={dist:.4} p={pv:.3} (redrawn {})", oracle.resampled);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
