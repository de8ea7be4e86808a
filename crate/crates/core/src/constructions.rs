//! Explicit dominating sets of `W(Δ, n) - v_1` for the critical families.
//!
//! Each set is instantiated exactly as written for the family parameter `t`,
//! together with the size it is claimed to have. Nothing is repaired: the
//! actual cardinality is reported next to the claim and the set is checked
//! against the graph by the caller.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::KnodelGraph;
use crate::solver::is_dominating;
use crate::vertex::{VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionWitness {
    pub name: &'static str,
    pub delta: usize,
    pub target_n: usize,
    pub deleted_vertex: VertexId,
    pub claimed_size: usize,
    pub set: VertexSet,
}

/// Outcome of checking a witness against its graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessAudit {
    pub name: &'static str,
    pub delta: usize,
    pub n: usize,
    pub claimed_size: usize,
    pub actual_size: usize,
    pub dominates: bool,
    pub undominated: Vec<VertexId>,
}

impl WitnessAudit {
    pub fn size_mismatch(&self) -> bool {
        self.claimed_size != self.actual_size
    }
}

impl ConstructionWitness {
    pub fn actual_size(&self) -> usize {
        self.set.len()
    }

    pub fn size_mismatch(&self) -> bool {
        self.actual_size() != self.claimed_size
    }

    pub fn graph(&self) -> Result<KnodelGraph> {
        KnodelGraph::new(self.delta, self.target_n)
    }

    pub fn audit(&self) -> Result<WitnessAudit> {
        let g = self.graph()?;
        let view = g.deleted_view(self.deleted_vertex)?;
        let dominates = is_dominating(&view, &self.set)?;
        let covered = self
            .set
            .iter()
            .fold(self.set, |acc, v| acc.union(&view.neighbors_unchecked(v)));
        Ok(WitnessAudit {
            name: self.name,
            delta: self.delta,
            n: self.target_n,
            claimed_size: self.claimed_size,
            actual_size: self.actual_size(),
            dominates,
            undominated: view.universe().difference(&covered).iter().collect(),
        })
    }
}

fn u(i: usize) -> VertexId {
    VertexId::u(i)
}

fn v(j: usize) -> VertexId {
    VertexId::v(j)
}

/// `W(3, 8t+4) - v_1`: `{u_{4i-2}} ∪ {v_{4i}} (i = 1..t) ∪ {v_{4t+2}}`, size `2t+1`.
pub fn w3_critical_witness(t: usize) -> Result<ConstructionWitness> {
    if t < 1 {
        return Err(Error::ConstructionParameter { t, min: 1 });
    }
    let set = (1..=t)
        .map(|i| u(4 * i - 2))
        .chain((1..=t).map(|i| v(4 * i)))
        .chain([v(4 * t + 2)])
        .collect();
    Ok(ConstructionWitness {
        name: "w3-critical",
        delta: 3,
        target_n: 8 * t + 4,
        deleted_vertex: v(1),
        claimed_size: 2 * t + 1,
        set,
    })
}

/// `W(4, 26) - v_1`: `{u_2, u_10, v_6, v_7, v_8, v_12}`.
pub fn w4_26_witness() -> ConstructionWitness {
    ConstructionWitness {
        name: "w4-26",
        delta: 4,
        target_n: 26,
        deleted_vertex: v(1),
        claimed_size: 6,
        set: [u(2), u(10), v(6), v(7), v(8), v(12)].into_iter().collect(),
    }
}

/// `W(4, 10t+2) - v_1`, `t >= 2`:
/// `{u_{5i-1}} (i < t) ∪ {u_{5t}} ∪ {v_{5i-2}} (i <= t) ∪ {v_{5t-1}}`, size `2t+1`.
pub fn w4_mod2_witness(t: usize) -> Result<ConstructionWitness> {
    if t < 2 {
        return Err(Error::ConstructionParameter { t, min: 2 });
    }
    let set = (1..t)
        .map(|i| u(5 * i - 1))
        .chain([u(5 * t)])
        .chain((1..=t).map(|i| v(5 * i - 2)))
        .chain([v(5 * t - 1)])
        .collect();
    Ok(ConstructionWitness {
        name: "w4-mod2",
        delta: 4,
        target_n: 10 * t + 2,
        deleted_vertex: v(1),
        claimed_size: 2 * t + 1,
        set,
    })
}

/// `W(4, 10t+8) - v_1`, `t >= 3`:
/// `{u_{5i-1}} (i <= t) ∪ {u_{5t}} ∪ {v_{5i-2}} (i <= t+1) ∪ {v_6, v_{5t-1}}`,
/// claimed size `2t+3`. The literal set has `2t+4` members.
pub fn w4_mod8_witness(t: usize) -> Result<ConstructionWitness> {
    if t < 3 {
        return Err(Error::ConstructionParameter { t, min: 3 });
    }
    let set = (1..=t)
        .map(|i| u(5 * i - 1))
        .chain([u(5 * t)])
        .chain((1..=t + 1).map(|i| v(5 * i - 2)))
        .chain([v(6), v(5 * t - 1)])
        .collect();
    Ok(ConstructionWitness {
        name: "w4-mod8",
        delta: 4,
        target_n: 10 * t + 8,
        deleted_vertex: v(1),
        claimed_size: 2 * t + 3,
        set,
    })
}
