//! Knödel graphs `W(Δ, n)`, exact domination numbers, and vertex-criticality.
//!
//! The crate builds Knödel graphs as pairs of bit-mask adjacency tables,
//! solves minimum dominating sets exactly by branch and bound, and checks the
//! known closed forms for `γ(W(3,n))` and `γ(W(4,n))` together with the
//! characterization of which of these graphs are γ-critical or γ-stable.
//!
//! Each capability has a runnable example under `examples/`:
//!
//! - **`build_graph`**: construction, neighbourhoods, deleted views, DIMACS/JSON export
//! - **`index_arithmetic`**: cyclic-sequences, index-distance, `M_Δ`, shared neighbours
//! - **`automorphisms`**: rotations and side-swapping reflections
//! - **`exact_gamma`**: branch-and-bound γ with witnesses and private neighbours
//! - **`classify`**: deletion profiles and critical/stable verdicts
//! - **`constructions`**: audits of the explicit dominating sets of `G - v_1`
//! - **`sweep`**: CSV sweep over a range of orders plus the property suite
//!
//! ```
//! use knodel::{KnodelGraph, SolverConfig, VertexId, solver};
//!
//! let g = KnodelGraph::new(3, 12).unwrap();
//! let cfg = SolverConfig::default();
//! assert_eq!(solver::gamma(&g, &cfg).unwrap().gamma, 4);
//! assert_eq!(solver::gamma_after_deletion(&g, VertexId::v(1), &cfg).unwrap().gamma, 3);
//! ```

pub mod constructions;
pub mod error;
pub mod export;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod solver;
pub mod vertex;

pub use error::{Error, Result};
pub use graph::{m_delta, CyclicSequence, GraphView, KnodelGraph, KnodelParams, VertexMap};
pub use solver::{Classification, DeletionMode, DeletionProfile, GammaResult, SolverConfig, Verdict};
pub use vertex::{Side, VertexId, VertexSet};
