//! Sweep a range of orders and print the CSV report, then run the fast
//! property suite.
//!
//!     cargo run --release -p knodel --example sweep -- 4 16 46

use knodel::harness::{run_suite, sweep, to_csv, Suite};
use knodel::solver::SolverConfig;

fn main() -> knodel::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (delta, lo, hi) = match args[..] {
        [d, lo, hi] => (d, lo, hi),
        _ => (3, 8, 48),
    };
    let cfg = SolverConfig::from_env();
    let rows = sweep(delta, lo, hi, None, &cfg)?;
    print!("{}", to_csv(&rows));
    let disagreements = rows.iter().filter(|r| !r.agrees()).count();
    println!("# {} rows, {disagreements} disagreements", rows.len());

    for report in run_suite(Suite::Core, &cfg)? {
        println!("{report}");
    }
    Ok(())
}
