//! Audit the explicit dominating sets of G - v1 for the critical families.
//!
//!     cargo run --release -p knodel --example constructions

use knodel::constructions::{w3_critical_witness, w4_26_witness, w4_mod2_witness, w4_mod8_witness};
use knodel::solver::{gamma_after_deletion, SolverConfig};

fn main() -> knodel::Result<()> {
    let mut witnesses = vec![w4_26_witness()];
    witnesses.extend((1..=3).map(w3_critical_witness).collect::<knodel::Result<Vec<_>>>()?);
    witnesses.extend((2..=4).map(w4_mod2_witness).collect::<knodel::Result<Vec<_>>>()?);
    witnesses.extend((3..=4).map(w4_mod8_witness).collect::<knodel::Result<Vec<_>>>()?);

    let cfg = SolverConfig::from_env();
    for w in &witnesses {
        let audit = w.audit()?;
        let exact = gamma_after_deletion(&w.graph()?, w.deleted_vertex, &cfg)?.gamma;
        println!(
            "{:<10} n={:<3} size {:>2} (claimed {:>2}{}) dominates: {:<5} exact gamma(G-v1) = {exact}",
            w.name,
            w.target_n,
            audit.actual_size,
            audit.claimed_size,
            if audit.size_mismatch() { ", MISMATCH" } else { "" },
            audit.dominates,
        );
        if !audit.undominated.is_empty() {
            let missed: Vec<String> = audit.undominated.iter().map(|v| v.to_string()).collect();
            println!("           misses {}", missed.join(", "));
        }
    }
    Ok(())
}
