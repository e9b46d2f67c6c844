use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants fall into three classes: bad inputs (ranges, shapes, parse
/// failures), exceeded budgets (search and solver caps), and internal
/// soundness failures that indicate a solver bug rather than a bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("eigenvalue index {i} outside 1..={n}")]
    IndexOutOfRange { i: usize, n: usize },

    #[error("blow-up factor must be at least 1")]
    ZeroBlowup,

    #[error("blow-up deviation bounds need t >= 2, got t = {t}")]
    BlowupFactorTooSmall { t: usize },

    #[error("deviation bounds need 1 <= k < n, got k = {k}, n = {n}")]
    DepthRange { k: usize, n: usize },

    #[error("deletion depth s = {s} outside admissible range 1..={max}")]
    DeletionRange { s: usize, max: usize },

    #[error("deletion set is empty")]
    EmptyDeletionSet,

    #[error("deletion would remove every vertex")]
    NothingLeft,

    #[error("clique order r = {r} must be at least 2")]
    CliqueOrderTooSmall { r: usize },

    #[error("part count r = {r} must be at least 1")]
    PartCountTooSmall { r: usize },

    #[error("clique-free family needs r >= 3, got r = {r}")]
    FamilyOrderTooSmall { r: usize },

    #[error("exact predicate evaluation is capped at 64 vertices, graph has {n}")]
    PredicateTooLarge { n: usize },

    #[error("coefficient vectors must share one length >= 1, got {alpha}/{beta}/{gamma}/{delta}")]
    CoefficientShape {
        alpha: usize,
        beta: usize,
        gamma: usize,
        delta: usize,
    },

    #[error("coefficients must be finite")]
    NonFiniteCoefficient,

    #[error("graph order n = {n} is below the form depth k = {k}")]
    OrderBelowDepth { n: usize, k: usize },

    #[error("eigensolver hit the sweep limit {sweeps} at off-norm {off:.3e} (target {target:.3e})")]
    NoConvergence { sweeps: usize, off: f64, target: f64 },

    #[error("solver soundness: {what} residual {residual:.3e} exceeds bound {bound:.3e}")]
    Unsound {
        what: &'static str,
        residual: f64,
        bound: f64,
    },

    #[error("graph6: {msg}")]
    Graph6 { msg: String },

    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("graph order n = {n} exceeds the graph6 limit")]
    Graph6TooLarge { n: usize },

    #[error("exhaustive search is capped at n <= {cap}, got n = {n}")]
    ExhaustiveCap { n: usize, cap: usize },

    #[error("stochastic search needs at least one restart")]
    NoRestarts,

    #[error("warm start graph has {got} vertices, search wants {want}")]
    WarmStartOrder { got: usize, want: usize },

    #[error("graph is not a member of the {family} family")]
    NotMember { family: String },

    #[error("amplification target N = {big_n} is below 2n = {two_n}")]
    AmplifyRange { big_n: usize, two_n: usize },

    #[error("amplification needs n > 4k/3, got n = {n}, k = {k}")]
    AmplifyDepth { n: usize, k: usize },

    #[error("amplification needs a positive tolerance epsilon")]
    AmplifyEpsilon,

    #[error("reference value must be finite")]
    NonFiniteReference,

    #[error("construction needs k >= 1")]
    ConstructionOrder,

    #[error("construction needs n >= 21k, got n = {n}, k = {k}")]
    ConstructionPad { n: usize, k: usize },

    #[error("solver budget: order {n} exceeds the cap {budget}")]
    SolverBudget { n: usize, budget: usize },

    #[error("extremal record failed re-validation: {msg}")]
    RecordInvalid { msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
