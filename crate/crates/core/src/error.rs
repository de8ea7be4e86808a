use thiserror::Error;

use crate::vertex::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order n = {0} is odd; Knödel graphs have even order")]
    OddOrder(usize),
    #[error("order n = {0} is below the minimum order 2")]
    OrderTooSmall(usize),
    #[error("order n = {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("degree {delta} is outside 1..={max} for n = {n}")]
    DegreeOutOfRange { delta: usize, n: usize, max: usize },
    #[error("vertex {0} does not belong to the graph")]
    VertexOutOfRange(VertexId),
    #[error("vertex {0} has been deleted from this view")]
    DeletedVertex(VertexId),
    #[error("cannot parse vertex label {0:?}; expected u<k> or v<k>")]
    BadVertexLabel(String),
    #[error("{a} and {b} lie on different sides")]
    DifferentSides { a: VertexId, b: VertexId },
    #[error("index-distance needs two distinct vertices, got {0} twice")]
    SameVertex(VertexId),
    #[error("the set M_delta is only defined for delta >= 2, got {0}")]
    MDeltaUndefined(usize),
    #[error("cyclic-sequence needs a nonempty subset")]
    EmptySubset,
    #[error("cyclic-sequence needs a subset lying on one side")]
    TwoSidedSubset,
    #[error("{0} is not a member of the given set")]
    NotAMember(VertexId),
    #[error("closed form for delta = {delta} requires even n >= {min_n}, got n = {n}")]
    FormulaDomain { delta: usize, min_n: usize, n: usize },
    #[error("construction parameter t = {t} is below its minimum {min}")]
    ConstructionParameter { t: usize, min: usize },
    #[error("search exceeded the node budget of {0}")]
    BudgetExceeded(u64),
    #[error("sweep aborted at W({delta},{n}): {source}")]
    SweepAborted { delta: usize, n: usize, source: Box<Error> },
    #[error("solver consistency failure on W({delta},{n}): deletion profile is mixed")]
    MixedVerdict { delta: usize, n: usize },
}
