//! Property suites over whole parameter ranges, summarized as reports.

use std::fmt;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{w3_critical_witness, w4_26_witness, w4_mod2_witness, w4_mod8_witness, ConstructionWitness};
use crate::error::Result;
use crate::formulas::{predicted_gamma, predicted_verdict};
use crate::graph::{floor_log2, m_delta, KnodelGraph, MAX_ORDER};
use crate::solver::{self, deletion_profile, DeletionMode, SolverConfig, Verdict};
use crate::vertex::{Side, VertexId, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Core,
    Constructions,
    Criticality,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "core" => Ok(Suite::Core),
            "constructions" => Ok(Suite::Constructions),
            "criticality" => Ok(Suite::Criticality),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: &'static str,
    pub check: &'static str,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(suite: &'static str, check: &'static str) -> Self {
        VerificationReport { suite, check, cases: 0, passed: 0, failed: 0, first_failure: None, notes: Vec::new() }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}/{} cases={} passed={} failed={}", self.suite, self.check, self.cases, self.passed, self.failed)?;
        if let Some(first) = &self.first_failure {
            write!(f, " first_failure=\"{first}\"")?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, config: &SolverConfig) -> Result<Vec<VerificationReport>> {
    Ok(match suite {
        Suite::Core => core_suite(),
        Suite::Constructions => constructions_suite(config)?,
        Suite::Criticality => criticality_suite(config)?,
        Suite::All => {
            let mut all = core_suite();
            all.extend(constructions_suite(config)?);
            all.extend(criticality_suite(config)?);
            all
        }
    })
}

/// Every valid `(Δ, n)` with `delta_range.contains(Δ)` and even `n <= n_max`.
pub fn valid_graphs(delta_range: std::ops::RangeInclusive<usize>, n_max: usize) -> Vec<KnodelGraph> {
    (2..=n_max.min(MAX_ORDER))
        .step_by(2)
        .flat_map(|n| {
            delta_range
                .clone()
                .filter(move |&d| d >= 1 && d <= floor_log2(n))
                .map(move |d| KnodelGraph::new(d, n).expect("valid parameters"))
        })
        .collect()
}

pub fn core_suite() -> Vec<VerificationReport> {
    vec![
        regularity(),
        shared_neighbor_closed_form(),
        cyclic_sequence_sums(0x5eed_0001),
        neighborhood_gap_bound(1000, 0x5eed_0002),
        automorphisms(),
    ]
}

fn regularity() -> VerificationReport {
    let mut r = VerificationReport::new("core", "regularity");
    for g in valid_graphs(1..=6, 128) {
        let ok = g.vertices().all(|v| g.neighbors(v).map(|nb| nb.len()) == Ok(g.delta()))
            && g.edge_count() == g.half() * g.delta();
        r.record(ok, || format!("W({},{}) is not {}-regular", g.delta(), g.n(), g.delta()));
    }
    r
}

fn same_side_pairs(g: &KnodelGraph) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
    let h = g.half();
    [Side::U, Side::V].into_iter().flat_map(move |side| {
        (1..=h).flat_map(move |i| {
            (i + 1..=h).map(move |j| (VertexId { side, index: i }, VertexId { side, index: j }))
        })
    })
}

/// The index-distance test for a shared neighbour against direct intersection,
/// exhaustively over all same-side pairs, `2 <= Δ <= 6`, `n <= 128`.
pub fn shared_neighbor_closed_form() -> VerificationReport {
    let mut r = VerificationReport::new("core", "shared-neighbor-closed-form");
    for g in valid_graphs(2..=6, 128) {
        for (a, b) in same_side_pairs(&g) {
            let direct = !g.neighbors(a).unwrap().intersection(&g.neighbors(b).unwrap()).is_empty();
            let closed = g.neighborhoods_intersect_closed_form(a, b).unwrap();
            r.record(direct == closed, || {
                format!("W({},{}) {a},{b}: direct {direct}, closed form {closed}", g.delta(), g.n())
            });
        }
    }
    r
}

fn random_one_sided(rng: &mut ChaCha8Rng, half: usize, side: Side) -> VertexSet {
    let k = rng.gen_range(1..=half);
    sample(rng, half, k)
        .into_iter()
        .map(|i| VertexId { side, index: i + 1 })
        .collect()
}

/// Gap sums and the run decomposition of index-distances on random subsets.
pub fn cyclic_sequence_sums(seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new("core", "cyclic-sequence-sums");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for g in valid_graphs(2..=6, 64) {
        for trial in 0..50 {
            let side = if trial % 2 == 0 { Side::U } else { Side::V };
            let a = random_one_sided(&mut rng, g.half(), side);
            let cs = g.cyclic_sequence(&a).unwrap();
            let mut ok = cs.total() == g.half();
            let k = cs.len();
            for p in 0..k {
                for q in p + 1..k {
                    let (x, y) = (
                        VertexId { side, index: cs.source_indices[p] },
                        VertexId { side, index: cs.source_indices[q] },
                    );
                    let id = g.index_distance(x, y).unwrap();
                    let inner = cs.run_sum(p, q - p);
                    let outer = cs.run_sum(q, k - (q - p));
                    let mut pair = [inner, outer];
                    pair.sort_unstable();
                    ok &= pair == [id, g.half() - id];
                }
            }
            r.record(ok, || format!("W({},{}) subset {a}: gaps {:?}", g.delta(), g.n(), cs.diffs));
        }
    }
    r
}

/// For random nonempty one-sided `A`, the number of gaps lying in `M_Δ` is at
/// most `Δ|A| - |N(A)|`. Runs `samples` subsets per side for
/// `Δ ∈ {3, 4}`, `n ∈ {16, 32, 64}`.
pub fn neighborhood_gap_bound(samples: usize, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new("core", "neighborhood-gap-bound");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for delta in [3, 4] {
        let m = m_delta(delta).unwrap();
        for n in [16, 32, 64] {
            let g = KnodelGraph::new(delta, n).unwrap();
            for side in [Side::U, Side::V] {
                for _ in 0..samples {
                    let a = random_one_sided(&mut rng, g.half(), side);
                    let in_m = g.cyclic_sequence(&a).unwrap().count_in(&m);
                    let bound = delta * a.len() - g.neighborhood(&a).len();
                    r.record(in_m <= bound, || format!("W({delta},{n}) A = {a}: {in_m} gaps in M, bound {bound}"));
                }
            }
        }
    }
    r
}

/// Every translation and every reflection maps the edge set onto itself,
/// for all `Δ <= 5`, `n <= 64`.
pub fn automorphisms() -> VerificationReport {
    let mut r = VerificationReport::new("core", "automorphisms");
    for g in valid_graphs(1..=5, 64) {
        for k in 0..g.half() {
            let t = g.automorphism_translate(k);
            r.record(t.preserves_edges(&g), || format!("W({},{}) translate {k}", g.delta(), g.n()));
            let f = g.automorphism_reflect(k as isize);
            r.record(f.preserves_edges(&g), || format!("W({},{}) reflect {k}", g.delta(), g.n()));
        }
    }
    r
}

fn certify(
    r: &mut VerificationReport,
    w: &ConstructionWitness,
    config: &SolverConfig,
) -> Result<()> {
    let audit = w.audit()?;
    let g = w.graph()?;
    let formula = predicted_gamma(w.delta, w.target_n);
    let base = match formula {
        Some(f) => f,
        None => solver::gamma(&g, config)?.gamma,
    };
    let ok = audit.dominates && !audit.size_mismatch() && audit.actual_size + 1 == base;
    r.record(ok, || {
        format!(
            "{} n={}: dominates={} size={} claimed={} gamma={base}",
            w.name, w.target_n, audit.dominates, audit.actual_size, audit.claimed_size
        )
    });
    Ok(())
}

pub fn constructions_suite(config: &SolverConfig) -> Result<Vec<VerificationReport>> {
    let mut w3 = VerificationReport::new("constructions", "w3-critical-sets");
    for t in 1..=6 {
        certify(&mut w3, &w3_critical_witness(t)?, config)?;
    }

    let mut w26 = VerificationReport::new("constructions", "w4-order-26-set");
    certify(&mut w26, &w4_26_witness(), config)?;

    let mut mod2 = VerificationReport::new("constructions", "w4-residue-2-sets");
    for t in 2..=6 {
        certify(&mut mod2, &w4_mod2_witness(t)?, config)?;
    }

    // The residue-8 family is adjudicated, not certified: the literal set is
    // audited for its size claim and the exact solver settles γ(G - v_1).
    let mut mod8 = VerificationReport::new("constructions", "w4-residue-8-adjudication");
    for t in 3..=6 {
        let w = w4_mod8_witness(t)?;
        let audit = w.audit()?;
        let exact = solver::gamma_after_deletion(&w.graph()?, w.deleted_vertex, config)?.gamma;
        let ok = audit.size_mismatch()
            && audit.actual_size == 2 * t + 4
            && exact == w.claimed_size
            && predicted_gamma(4, w.target_n) == Some(exact + 1);
        mod8.record(ok, || {
            format!("t={t}: literal size {} claimed {} exact {exact}", audit.actual_size, audit.claimed_size)
        });
        mod8.notes.push(format!(
            "t={t} n={}: literal set has {} vertices (claimed {}), dominates G-v1: {}{}; exact gamma(G-v1) = {exact}",
            w.target_n,
            audit.actual_size,
            audit.claimed_size,
            audit.dominates,
            if audit.undominated.is_empty() {
                String::new()
            } else {
                format!(
                    " (misses {})",
                    audit.undominated.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
                )
            }
        ));
    }
    Ok(vec![w3, w26, mod2, mod8])
}

pub const W3_RANGE: (usize, usize) = (8, 64);
pub const W4_RANGE: (usize, usize) = (16, 60);

fn even(range: (usize, usize)) -> Vec<usize> {
    (range.0..=range.1).step_by(2).collect()
}

pub fn criticality_suite(config: &SolverConfig) -> Result<Vec<VerificationReport>> {
    let mut formula = VerificationReport::new("criticality", "closed-form-gamma");
    let mut verdicts = VerificationReport::new("criticality", "critical-stable-verdicts");
    let mut deletion = VerificationReport::new("criticality", "deletion-bracket");

    let cases: Vec<(usize, usize)> = even(W3_RANGE)
        .into_iter()
        .map(|n| (3, n))
        .chain(even(W4_RANGE).into_iter().map(|n| (4, n)))
        .collect();

    let profiles = cases
        .par_iter()
        .map(|&(d, n)| {
            let g = KnodelGraph::new(d, n)?;
            // exhaustive deletions where affordable, a single representative beyond
            let mode = if n <= 48 { DeletionMode::All } else { DeletionMode::Representative };
            deletion_profile(&g, mode, config).map(|p| (d, n, p))
        })
        .collect::<Vec<_>>();

    for entry in profiles {
        let (d, n, p) = entry?;
        let gamma = p.base_gamma();
        let predicted = predicted_gamma(d, n).expect("inside formula domain");
        formula.record(gamma == predicted, || format!("W({d},{n}): solver {gamma}, formula {predicted}"));

        let verdict = p.verdict();
        let expected = predicted_verdict(d, n).expect("inside characterized range");
        let tight = verdict != Verdict::Critical || p.per_vertex.values().all(|&x| x + 1 == gamma);
        verdicts.record(verdict == expected && tight, || {
            format!("W({d},{n}): solver {verdict}, predicted {expected}")
        });

        if p.mode == DeletionMode::All {
            deletion.record(p.is_constant() && p.within_bracket(), || {
                format!("W({d},{n}): deletion values not constant within {{gamma-1, gamma}}")
            });
        }
    }
    Ok(vec![formula, verdicts, deletion])
}
