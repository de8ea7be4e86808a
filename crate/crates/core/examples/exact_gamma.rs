//! Exact domination numbers with witnesses, with and without a deleted vertex.
//!
//!     cargo run --release -p knodel --example exact_gamma -- 4 46

use knodel::solver::{exact_gamma, external_private_neighbors, greedy_upper_bound, SolverConfig};
use knodel::{KnodelGraph, VertexId};

fn main() -> knodel::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (delta, n) = match args[..] {
        [d, n] => (d, n),
        _ => (4, 26),
    };
    let g = KnodelGraph::new(delta, n)?;
    let cfg = SolverConfig::from_env();

    let greedy = greedy_upper_bound(&g.view());
    println!("greedy: {} vertices", greedy.len());

    let full = exact_gamma(&g.view(), &cfg)?;
    println!(
        "gamma(W({delta},{n})) = {} in {} nodes, {:.2?}\n  witness {}",
        full.gamma, full.nodes_explored, full.elapsed, full.witness
    );
    for member in full.witness.iter().take(3) {
        println!("  epn({member}) = {}", external_private_neighbors(&g.view(), &full.witness, member)?);
    }

    let minus = exact_gamma(&g.deleted_view(VertexId::v(1))?, &cfg)?;
    println!("gamma(W({delta},{n}) - v1) = {}\n  witness {}", minus.gamma, minus.witness);
    Ok(())
}
