//! Rotations and side-swapping reflections of a Knödel graph.
//!
//!     cargo run -p knodel --example automorphisms

use knodel::{KnodelGraph, VertexId};

fn main() -> knodel::Result<()> {
    let g = KnodelGraph::new(3, 8)?;
    let shift = g.automorphism_translate(1);
    let (a, b) = (VertexId::u(1), VertexId::v(2));
    println!("translate(1): edge {a}{b} -> {}{}", shift.apply(a), shift.apply(b));

    // c = 1 sends u1 to v1
    let flip = g.automorphism_reflect(1);
    println!("reflect(1): u1 -> {}, v4 -> {}", flip.apply(VertexId::u(1)), flip.apply(VertexId::v(4)));

    let mut checked = 0;
    for n in (8..=64).step_by(2) {
        for delta in 1..=3 {
            let g = KnodelGraph::new(delta, n)?;
            for k in 0..g.half() {
                assert!(g.automorphism_translate(k).preserves_edges(&g));
                assert!(g.automorphism_reflect(k as isize).preserves_edges(&g));
                checked += 2;
            }
        }
    }
    println!("{checked} maps checked, all preserve the edge set");
    Ok(())
}
