//! Critical / stable verdicts from deletion profiles, next to the closed-form
//! predictions for Δ = 3 and Δ = 4.
//!
//!     cargo run --release -p knodel --example classify

use knodel::formulas::{predicted_gamma, predicted_verdict};
use knodel::solver::{classify, DeletionMode, SolverConfig};
use knodel::KnodelGraph;

fn main() -> knodel::Result<()> {
    let cfg = SolverConfig::from_env();
    for (delta, n) in [(3, 12), (3, 16), (4, 26), (4, 28), (4, 38), (2, 12), (5, 40)] {
        let g = KnodelGraph::new(delta, n)?;
        let c = classify(&g, DeletionMode::default_for(n), &cfg)?;
        let gamma = c.profile.base_gamma();
        let deleted = c.profile.per_vertex.values().next().copied().unwrap_or(gamma);
        print!("W({delta},{n}): gamma {gamma}, gamma(G-w) {deleted}, {}", c.verdict);
        if let (Some(pg), Some(pv)) = (predicted_gamma(delta, n), predicted_verdict(delta, n)) {
            print!("  (closed form: gamma {pg}, {pv})");
        }
        println!();
    }
    Ok(())
}
