//! Cyclic-sequences, index-distances and the set M_Δ, and how they predict
//! which same-side vertices share a neighbour.
//!
//!     cargo run -p knodel --example index_arithmetic

use knodel::{m_delta, KnodelGraph, VertexId, VertexSet};

fn main() -> knodel::Result<()> {
    for delta in 2..=4 {
        println!("M_{delta} = {:?}", m_delta(delta)?);
    }

    let g = KnodelGraph::new(4, 26)?;
    let a: VertexSet = [1, 5, 10].into_iter().map(VertexId::v).collect();
    let cs = g.cyclic_sequence(&a)?;
    println!("cyclic-sequence of {a} in W(4,26): {:?} (sum {})", cs.diffs, cs.total());

    let m = m_delta(4)?;
    println!(
        "{} gaps in M_4; bound delta|A| - |N(A)| = {}",
        cs.count_in(&m),
        4 * a.len() - g.neighborhood(&a).len()
    );

    for (x, y) in [(1, 2), (1, 6), (1, 5), (3, 11)] {
        let (a, b) = (VertexId::u(x), VertexId::u(y));
        let shared = g.neighbors(a)?.intersection(&g.neighbors(b)?);
        println!(
            "id({a},{b}) = {}: closed form says {}, direct intersection {shared}",
            g.index_distance(a, b)?,
            g.neighborhoods_intersect_closed_form(a, b)?,
        );
    }
    Ok(())
}
