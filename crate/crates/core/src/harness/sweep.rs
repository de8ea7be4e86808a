use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::{predicted_gamma, predicted_verdict};
use crate::graph::KnodelGraph;
use crate::solver::{classify, DeletionMode, SolverConfig, Verdict};
use crate::vertex::VertexId;

/// One line of a sweep. Field order is the CSV column order; `millis` is the
/// only column that may differ between runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub delta: usize,
    pub n: usize,
    pub gamma_solver: usize,
    pub gamma_formula: Option<usize>,
    pub gamma_deleted: usize,
    pub verdict_solver: Verdict,
    pub verdict_theorem: Option<Verdict>,
    pub agree_gamma: Option<bool>,
    pub agree_verdict: Option<bool>,
    pub nodes: u64,
    pub millis: u128,
}

impl SweepRow {
    /// False iff some available prediction disagrees with the solver.
    pub fn agrees(&self) -> bool {
        self.agree_gamma != Some(false) && self.agree_verdict != Some(false)
    }
}

pub const CSV_HEADER: &str =
    "delta,n,gamma_solver,gamma_formula,gamma_deleted,verdict_solver,verdict_theorem,agree_gamma,agree_verdict,nodes,millis";

pub fn sweep_row(delta: usize, n: usize, mode: Option<DeletionMode>, config: &SolverConfig) -> Result<SweepRow> {
    let start = std::time::Instant::now();
    let g = KnodelGraph::new(delta, n)?;
    let mode = mode.unwrap_or_else(|| DeletionMode::default_for(n));
    let c = classify(&g, mode, config)?;
    let gamma_solver = c.profile.base_gamma();
    let gamma_formula = predicted_gamma(delta, n);
    let verdict_theorem = predicted_verdict(delta, n);
    Ok(SweepRow {
        delta,
        n,
        gamma_solver,
        gamma_formula,
        gamma_deleted: c.profile.per_vertex[&VertexId::v(1)],
        verdict_solver: c.verdict,
        verdict_theorem,
        agree_gamma: gamma_formula.map(|f| f == gamma_solver),
        agree_verdict: verdict_theorem.map(|v| v == c.verdict),
        nodes: c.profile.nodes_explored,
        millis: start.elapsed().as_millis(),
    })
}

/// Rows for every even `n` in `n_min..=n_max`, in ascending `n`.
pub fn sweep(
    delta: usize,
    n_min: usize,
    n_max: usize,
    mode: Option<DeletionMode>,
    config: &SolverConfig,
) -> Result<Vec<SweepRow>> {
    let first = n_min + n_min % 2;
    let orders: Vec<usize> = (first..=n_max).step_by(2).collect();
    let rows: Vec<Result<SweepRow>> = orders
        .into_par_iter()
        .map(|n| {
            sweep_row(delta, n, mode, config)
                .map_err(|e| Error::SweepAborted { delta, n, source: Box::new(e) })
        })
        .collect();
    // the lowest failing order is reported, whatever finished first
    rows.into_iter().collect()
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory csv write");
    }
    let body = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii csv");
    format!("{CSV_HEADER}\n{body}")
}

pub fn to_jsonl(rows: &[SweepRow]) -> String {
    rows.iter()
        .map(|r| serde_json::to_string(r).expect("plain data serializes") + "\n")
        .collect()
}

/// The output with the timing column blanked, for run-to-run comparison.
pub fn without_timing(rows: &[SweepRow]) -> Vec<SweepRow> {
    rows.iter().map(|r| SweepRow { millis: 0, ..r.clone() }).collect()
}
