//! Knödel graph construction and the combinatorics of one-sided index sets.
//!
//! `W(Δ, n)` has parts `U = {u_1..u_h}` and `V = {v_1..v_h}` with `h = n/2`,
//! and `u_i ~ v_j` iff `j ≡ i + 2^k - 1 (mod h)` for some `0 <= k < Δ`.
//! Residues are shown as labels `1..=h`, so residue 0 is label `h`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex::{low_bits, Side, VertexId, VertexSet};

/// Largest supported order. Each side must fit in a 64-bit mask.
pub const MAX_ORDER: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct KnodelParams {
    delta: usize,
    n: usize,
}

impl KnodelParams {
    pub fn new(delta: usize, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OrderTooSmall(n));
        }
        if n % 2 != 0 {
            return Err(Error::OddOrder(n));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let max = floor_log2(n);
        if delta < 1 || delta > max {
            return Err(Error::DegreeOutOfRange { delta, n, max });
        }
        Ok(KnodelParams { delta, n })
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn half(&self) -> usize {
        self.n / 2
    }
}

pub(crate) fn floor_log2(n: usize) -> usize {
    (usize::BITS - 1 - n.leading_zeros()) as usize
}

/// `M_Δ = { 2^a - 2^b : 0 <= b < a < Δ }`.
pub fn m_delta(delta: usize) -> Result<BTreeSet<usize>> {
    if delta < 2 {
        return Err(Error::MDeltaUndefined(delta));
    }
    let mut set = BTreeSet::new();
    for a in 1..delta {
        for b in 0..a {
            set.insert((1usize << a) - (1usize << b));
        }
    }
    Ok(set)
}

/// A Knödel graph with both neighbourhood tables precomputed as bit-masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnodelGraph {
    params: KnodelParams,
    half: usize,
    // bit j-1 of nbr_u[i-1] is set iff u_i ~ v_j; nbr_v is the transpose.
    nbr_u: Vec<u64>,
    nbr_v: Vec<u64>,
}

impl KnodelGraph {
    pub fn new(delta: usize, n: usize) -> Result<Self> {
        Ok(Self::build(KnodelParams::new(delta, n)?))
    }

    pub fn build(params: KnodelParams) -> Self {
        let half = params.half();
        let mut nbr_u = vec![0u64; half];
        let mut nbr_v = vec![0u64; half];
        for i in 0..half {
            for k in 0..params.delta {
                let j = (i + (1usize << k) - 1) % half;
                nbr_u[i] |= 1u64 << j;
                nbr_v[j] |= 1u64 << i;
            }
        }
        KnodelGraph { params, half, nbr_u, nbr_v }
    }

    pub fn params(&self) -> KnodelParams {
        self.params
    }

    pub fn delta(&self) -> usize {
        self.params.delta
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn half(&self) -> usize {
        self.half
    }

    pub fn edge_count(&self) -> usize {
        self.nbr_u.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (1..=self.half).contains(&v.index)
    }

    pub fn check(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        let h = self.half;
        (1..=h).map(VertexId::u).chain((1..=h).map(VertexId::v))
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.half)
    }

    /// Open neighbourhood `N(v)`, lying entirely on the opposite side.
    pub fn neighbors(&self, v: VertexId) -> Result<VertexSet> {
        self.check(v)?;
        Ok(self.neighbors_unchecked(v))
    }

    pub(crate) fn neighbors_unchecked(&self, v: VertexId) -> VertexSet {
        match v.side {
            Side::U => VertexSet::from_masks(0, self.nbr_u[v.index - 1]),
            Side::V => VertexSet::from_masks(self.nbr_v[v.index - 1], 0),
        }
    }

    /// `N(S)`, the union of the open neighbourhoods of the members of `set`.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        set.iter()
            .filter(|v| self.contains(*v))
            .fold(VertexSet::empty(), |acc, v| acc.union(&self.neighbors_unchecked(v)))
    }

    pub fn is_edge(&self, a: VertexId, b: VertexId) -> bool {
        if !self.contains(a) || !self.contains(b) || a.side == b.side {
            return false;
        }
        let (u, v) = if a.side == Side::U { (a, b) } else { (b, a) };
        self.nbr_u[u.index - 1] & (1u64 << (v.index - 1)) != 0
    }

    /// Edges as `(u_i, v_j)` pairs, ordered by `i` then `j`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (1..=self.half).flat_map(move |i| {
            self.neighbors_unchecked(VertexId::u(i))
                .iter()
                .map(move |v| (VertexId::u(i), v))
                .collect::<Vec<_>>()
        })
    }

    /// Circular gaps between consecutive indices of a one-sided subset.
    pub fn cyclic_sequence(&self, subset: &VertexSet) -> Result<CyclicSequence> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let side = subset.single_side().ok_or(Error::TwoSidedSubset)?;
        if subset.side_mask(side) & !low_bits(self.half) != 0 {
            let stray = subset.iter().find(|v| !self.contains(*v)).expect("stray bit");
            return Err(Error::VertexOutOfRange(stray));
        }
        let source_indices: Vec<usize> = subset.iter().map(|v| v.index).collect();
        let k = source_indices.len();
        let mut diffs: Vec<usize> = source_indices.windows(2).map(|w| w[1] - w[0]).collect();
        diffs.push(self.half + source_indices[0] - source_indices[k - 1]);
        Ok(CyclicSequence { side, source_indices, diffs })
    }

    /// `id(a, b) = min(|i - j|, h - |i - j|)` for distinct same-side vertices.
    pub fn index_distance(&self, a: VertexId, b: VertexId) -> Result<usize> {
        self.check(a)?;
        self.check(b)?;
        if a.side != b.side {
            return Err(Error::DifferentSides { a, b });
        }
        if a == b {
            return Err(Error::SameVertex(a));
        }
        let d = a.index.abs_diff(b.index);
        Ok(d.min(self.half - d))
    }

    /// Whether `N(a) ∩ N(b) ≠ ∅`, decided from the index-distance alone.
    pub fn neighborhoods_intersect_closed_form(&self, a: VertexId, b: VertexId) -> Result<bool> {
        let id = self.index_distance(a, b)?;
        let m = m_delta(self.delta())?;
        Ok(m.contains(&id) || m.contains(&(self.half - id)))
    }

    /// Rotation `(side, j) ↦ (side, j + k)`.
    pub fn automorphism_translate(&self, k: usize) -> VertexMap {
        VertexMap { half: self.half, kind: MapKind::Translate(k % self.half) }
    }

    /// Side swap `(U, j) ↦ (V, ((c - j) mod h) + 1)` and symmetrically for `V`.
    pub fn automorphism_reflect(&self, c: isize) -> VertexMap {
        let c = c.rem_euclid(self.half as isize) as usize;
        VertexMap { half: self.half, kind: MapKind::Reflect(c) }
    }

    pub fn deleted_view(&self, w: VertexId) -> Result<GraphView<'_>> {
        self.check(w)?;
        Ok(GraphView { base: self, deleted: Some(w) })
    }

    pub fn view(&self) -> GraphView<'_> {
        GraphView { base: self, deleted: None }
    }
}

/// Gaps `n_1..n_k` of a sorted one-sided index set; they always sum to `h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicSequence {
    pub side: Side,
    pub source_indices: Vec<usize>,
    pub diffs: Vec<usize>,
}

impl CyclicSequence {
    pub fn len(&self) -> usize {
        self.diffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diffs.is_empty()
    }

    pub fn total(&self) -> usize {
        self.diffs.iter().sum()
    }

    /// Sum of `len` consecutive gaps starting at position `start`, wrapping.
    pub fn run_sum(&self, start: usize, len: usize) -> usize {
        let k = self.diffs.len();
        (0..len).map(|off| self.diffs[(start + off) % k]).sum()
    }

    /// Number of gaps lying in `set` (counted with multiplicity).
    pub fn count_in(&self, set: &BTreeSet<usize>) -> usize {
        self.diffs.iter().filter(|d| set.contains(d)).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MapKind {
    Translate(usize),
    Reflect(usize),
}

/// A vertex permutation of a Knödel graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexMap {
    half: usize,
    kind: MapKind,
}

impl VertexMap {
    pub fn apply(&self, v: VertexId) -> VertexId {
        let h = self.half;
        match self.kind {
            MapKind::Translate(k) => VertexId { side: v.side, index: (v.index - 1 + k) % h + 1 },
            MapKind::Reflect(c) => VertexId {
                side: v.side.opposite(),
                index: (c + h - v.index % h) % h + 1,
            },
        }
    }

    pub fn is_identity(&self, g: &KnodelGraph) -> bool {
        g.vertices().all(|v| self.apply(v) == v)
    }

    /// True iff the map is a bijection carrying the edge set onto itself.
    pub fn preserves_edges(&self, g: &KnodelGraph) -> bool {
        let image: BTreeSet<VertexId> = g.vertices().map(|v| self.apply(v)).collect();
        if image.len() != g.n() || !image.iter().all(|v| g.contains(*v)) {
            return false;
        }
        g.edges().all(|(a, b)| g.is_edge(self.apply(a), self.apply(b)))
    }
}

/// A Knödel graph with at most one vertex logically removed.
#[derive(Debug, Clone, Copy)]
pub struct GraphView<'g> {
    base: &'g KnodelGraph,
    deleted: Option<VertexId>,
}

impl<'g> GraphView<'g> {
    pub fn base(&self) -> &'g KnodelGraph {
        self.base
    }

    pub fn deleted(&self) -> Option<VertexId> {
        self.deleted
    }

    pub fn vertex_count(&self) -> usize {
        self.base.n() - usize::from(self.deleted.is_some())
    }

    /// Vertices still present in the view.
    pub fn universe(&self) -> VertexSet {
        let mut all = self.base.all_vertices();
        if let Some(w) = self.deleted {
            all.remove(w);
        }
        all
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.base.contains(v) && Some(v) != self.deleted
    }

    pub fn check(&self, v: VertexId) -> Result<()> {
        self.base.check(v)?;
        if Some(v) == self.deleted {
            return Err(Error::DeletedVertex(v));
        }
        Ok(())
    }

    pub fn neighbors(&self, v: VertexId) -> Result<VertexSet> {
        self.check(v)?;
        Ok(self.neighbors_unchecked(v))
    }

    pub(crate) fn neighbors_unchecked(&self, v: VertexId) -> VertexSet {
        let mut nb = self.base.neighbors_unchecked(v);
        if let Some(w) = self.deleted {
            nb.remove(w);
        }
        nb
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    /// `N[v]` restricted to the view.
    pub(crate) fn closed_neighbors_unchecked(&self, v: VertexId) -> VertexSet {
        let mut nb = self.neighbors_unchecked(v);
        nb.insert(v);
        nb
    }
}
