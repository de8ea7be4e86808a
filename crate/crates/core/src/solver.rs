//! Exact minimum dominating sets by branch and bound.
//!
//! The search works on a packed `u128` universe (`U` in bits 0..64, `V` in
//! bits 64..128) so that closed neighbourhoods, the dominated set and the
//! excluded candidates are all single words. Branching is fixed: pick the
//! undominated vertex with the fewest live dominators (lowest packed index on
//! ties) and try its live closed neighbours in ascending packed order, which
//! is `(side, index)` order. A vertex with a single live dominator yields a
//! single child, i.e. forced inclusion.
//!
//! Every improvement of the incumbent is the first leaf in that fixed order
//! that beats it, so the witness does not depend on how strong the pruning
//! bounds are, only on their validity.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{GraphView, KnodelGraph};
use crate::vertex::{VertexId, VertexSet};

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000_000;

/// Environment variable overriding [`SolverConfig::node_budget`].
pub const NODE_BUDGET_ENV: &str = "KNODEL_NODE_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Search nodes allowed per solve. Running out is an error.
    pub node_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { node_budget: DEFAULT_NODE_BUDGET }
    }
}

impl SolverConfig {
    pub fn with_budget(node_budget: u64) -> Self {
        SolverConfig { node_budget }
    }

    /// Default config, with the budget taken from `KNODEL_NODE_BUDGET` if set.
    pub fn from_env() -> Self {
        std::env::var(NODE_BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(SolverConfig::with_budget)
            .unwrap_or_default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaResult {
    pub gamma: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

fn packed(v: VertexId) -> usize {
    match v.side {
        crate::vertex::Side::U => v.index - 1,
        crate::vertex::Side::V => 64 + v.index - 1,
    }
}

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let tz = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(tz)
    })
}

/// Packed closed neighbourhoods of every vertex of the view; zero for absent ones.
fn closed_table(view: &GraphView<'_>) -> Vec<u128> {
    let mut table = vec![0u128; 128];
    for v in view.universe().iter() {
        table[packed(v)] = view.closed_neighbors_unchecked(v).to_flat();
    }
    table
}

fn check_members(view: &GraphView<'_>, d: &VertexSet) -> Result<()> {
    if let Some(stray) = d.iter().find(|v| !view.base().contains(*v)) {
        return Err(Error::VertexOutOfRange(stray));
    }
    if let Some(w) = view.deleted() {
        if d.contains(w) {
            return Err(Error::DeletedVertex(w));
        }
    }
    Ok(())
}

/// Every vertex of the view is in `d` or adjacent to a member of `d`.
pub fn is_dominating(view: &GraphView<'_>, d: &VertexSet) -> Result<bool> {
    check_members(view, d)?;
    let covered = d
        .iter()
        .fold(VertexSet::empty(), |acc, v| acc.union(&view.closed_neighbors_unchecked(v)));
    Ok(view.universe().is_subset(&covered))
}

/// `{ u ∉ d : N(u) ∩ d = {member} }`.
pub fn external_private_neighbors(
    view: &GraphView<'_>,
    d: &VertexSet,
    member: VertexId,
) -> Result<VertexSet> {
    check_members(view, d)?;
    if !d.contains(member) {
        return Err(Error::NotAMember(member));
    }
    let only: VertexSet = std::iter::once(member).collect();
    Ok(view
        .neighbors_unchecked(member)
        .difference(d)
        .iter()
        .filter(|u| view.neighbors_unchecked(*u).intersection(d) == only)
        .collect())
}

/// Repeatedly adds the vertex covering the most undominated vertices,
/// preferring `U` over `V` and then the lowest index on ties.
pub fn greedy_upper_bound(view: &GraphView<'_>) -> VertexSet {
    let table = closed_table(view);
    VertexSet::from_flat(greedy_packed(&table, view.universe().to_flat()))
}

fn greedy_packed(table: &[u128], universe: u128) -> u128 {
    let mut chosen = 0u128;
    let mut undominated = universe;
    while undominated != 0 {
        let (best, _) = bits(universe)
            .map(|c| (c, (table[c] & undominated).count_ones()))
            .fold((usize::MAX, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        chosen |= 1u128 << best;
        undominated &= !table[best];
    }
    chosen
}

// lcm(1..=8); closed neighbourhoods have at most Δ + 1 <= 8 vertices.
const WEIGHT_SCALE: u32 = 840;

struct Search<'a> {
    closed: &'a [u128],
    universe: u128,
    max_closed: u32,
    best_size: usize,
    best: u128,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn run(&mut self, chosen: u128, size: usize, dominated: u128, excluded: u128) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let undominated = self.universe & !dominated;
        if undominated == 0 {
            if size < self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return Ok(());
        }
        // Counting bound: one more vertex covers at most Δ + 1 others.
        let remaining = undominated.count_ones();
        if size + remaining.div_ceil(self.max_closed) as usize >= self.best_size {
            return Ok(());
        }

        // Fractional covering bound: vertex x costs 1 / (largest coverage among
        // its live dominators), and each added vertex pays at most 1 in total.
        let live = self.universe & !excluded;
        let mut weight = 0u32;
        let mut pivot = (u32::MAX, 0usize);
        for x in bits(undominated) {
            let dominators = self.closed[x] & live;
            let count = dominators.count_ones();
            if count == 0 {
                return Ok(());
            }
            if count < pivot.0 {
                pivot = (count, x);
            }
            let cover = bits(dominators)
                .map(|d| (self.closed[d] & undominated).count_ones())
                .max()
                .unwrap_or(1);
            weight += WEIGHT_SCALE / cover;
        }
        if size + weight.div_ceil(WEIGHT_SCALE) as usize >= self.best_size {
            return Ok(());
        }

        let mut excluded = excluded;
        for d in bits(self.closed[pivot.1] & live) {
            let bit = 1u128 << d;
            self.run(chosen | bit, size + 1, dominated | self.closed[d], excluded)?;
            excluded |= bit;
        }
        Ok(())
    }
}

/// Exact domination number of the view with a reproducible minimum witness.
pub fn exact_gamma(view: &GraphView<'_>, config: &SolverConfig) -> Result<GammaResult> {
    let start = Instant::now();
    let closed = closed_table(view);
    let universe = view.universe().to_flat();
    let incumbent = greedy_packed(&closed, universe);
    let mut search = Search {
        closed: &closed,
        universe,
        max_closed: view.base().delta() as u32 + 1,
        best_size: incumbent.count_ones() as usize,
        best: incumbent,
        nodes: 0,
        budget: config.node_budget,
    };
    search.run(0, 0, 0, 0)?;
    Ok(GammaResult {
        gamma: search.best_size,
        witness: VertexSet::from_flat(search.best),
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
    })
}

pub fn gamma(g: &KnodelGraph, config: &SolverConfig) -> Result<GammaResult> {
    exact_gamma(&g.view(), config)
}

/// `γ(G - w)`.
pub fn gamma_after_deletion(g: &KnodelGraph, w: VertexId, config: &SolverConfig) -> Result<GammaResult> {
    exact_gamma(&g.deleted_view(w)?, config)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DeletionMode {
    /// Solve `G - v_1` only and copy the value to every vertex. Sound only
    /// for vertex-transitive inputs, which Knödel graphs are.
    Representative,
    /// Solve all `n` deletions independently.
    All,
}

impl DeletionMode {
    /// `All` for `n <= 32`, `Representative` above.
    pub fn default_for(n: usize) -> Self {
        if n <= 32 {
            DeletionMode::All
        } else {
            DeletionMode::Representative
        }
    }
}

impl std::str::FromStr for DeletionMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "representative" => Ok(DeletionMode::Representative),
            "all" => Ok(DeletionMode::All),
            other => Err(format!("unknown deletion mode {other:?}; expected representative or all")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Critical,
    Stable,
    Mixed,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Critical => "Critical",
            Verdict::Stable => "Stable",
            Verdict::Mixed => "Mixed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionProfile {
    pub base: GammaResult,
    pub mode: DeletionMode,
    pub per_vertex: BTreeMap<VertexId, usize>,
    pub nodes_explored: u64,
}

impl DeletionProfile {
    pub fn base_gamma(&self) -> usize {
        self.base.gamma
    }

    pub fn verdict(&self) -> Verdict {
        let base = self.base.gamma;
        if self.per_vertex.values().all(|&g| g < base) {
            Verdict::Critical
        } else if self.per_vertex.values().all(|&g| g == base) {
            Verdict::Stable
        } else {
            Verdict::Mixed
        }
    }

    pub fn is_constant(&self) -> bool {
        let mut values = self.per_vertex.values();
        match values.next() {
            Some(first) => values.all(|g| g == first),
            None => true,
        }
    }

    /// Every entry lies in `{γ - 1, γ}`.
    pub fn within_bracket(&self) -> bool {
        let base = self.base.gamma;
        self.per_vertex.values().all(|&g| g + 1 >= base && g <= base)
    }
}

pub fn deletion_profile(g: &KnodelGraph, mode: DeletionMode, config: &SolverConfig) -> Result<DeletionProfile> {
    let base = gamma(g, config)?;
    let mut nodes = base.nodes_explored;
    let per_vertex = match mode {
        DeletionMode::Representative => {
            let rep = gamma_after_deletion(g, VertexId::v(1), config)?;
            nodes += rep.nodes_explored;
            g.vertices().map(|v| (v, rep.gamma)).collect()
        }
        DeletionMode::All => {
            let solved: Vec<(VertexId, GammaResult)> = g
                .vertices()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|v| gamma_after_deletion(g, v, config).map(|r| (v, r)))
                .collect::<Result<_>>()?;
            nodes += solved.iter().map(|(_, r)| r.nodes_explored).sum::<u64>();
            solved.into_iter().map(|(v, r)| (v, r.gamma)).collect()
        }
    };
    Ok(DeletionProfile { base, mode, per_vertex, nodes_explored: nodes })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub profile: DeletionProfile,
}

/// Critical/stable verdict from the deletion profile. A mixed profile cannot
/// happen on a vertex-transitive graph and is reported as an error.
pub fn classify(g: &KnodelGraph, mode: DeletionMode, config: &SolverConfig) -> Result<Classification> {
    let profile = deletion_profile(g, mode, config)?;
    match profile.verdict() {
        Verdict::Mixed => Err(Error::MixedVerdict { delta: g.delta(), n: g.n() }),
        verdict => Ok(Classification { verdict, profile }),
    }
}
