//! Build a Knödel graph, inspect neighbourhoods, and export it.
//!
//!     cargo run -p knodel --example build_graph

use knodel::export::{to_dimacs, to_json};
use knodel::{KnodelGraph, VertexId};

fn main() -> knodel::Result<()> {
    let g = KnodelGraph::new(3, 8)?;
    println!("W({},{}) has {} edges", g.delta(), g.n(), g.edge_count());
    for v in [VertexId::u(1), VertexId::u(3), VertexId::v(1)] {
        println!("N({v}) = {}", g.neighbors(v)?);
    }

    let minus = g.deleted_view(VertexId::v(1))?;
    println!("W(3,8) - v1: {} vertices, deg(u1) = {}", minus.vertex_count(), minus.degree(VertexId::u(1))?);

    print!("{}", to_dimacs(&g));
    print!("{}", to_json(&KnodelGraph::new(2, 6)?));

    match KnodelGraph::new(5, 16) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
