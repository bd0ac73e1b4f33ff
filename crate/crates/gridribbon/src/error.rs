use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A grid diagram failed one of its structural invariants.
    #[error("invalid grid diagram: {0}")]
    InvalidGrid(String),

    /// Tracing closed a cycle before visiting every dot: the diagram is a
    /// link with more than one component, not a knot.
    #[error("diagram has multiple components: trace closed after {visited} of {size} rows")]
    MultiComponent { visited: usize, size: usize },

    /// Torus-family parameters must satisfy 2 <= p < q with gcd(p, q) = 1.
    #[error("invalid torus parameters (p={p}, q={q}): {reason}")]
    BadTorusParams { p: i64, q: i64, reason: String },

    /// Twist-family parameters must satisfy n >= 1.
    #[error("invalid twist parameter n={n}: n must be a positive integer")]
    BadTwistParams { n: i64 },

    /// The diagram has no crossings, so no Wirtinger presentation exists.
    #[error("diagram has no crossings (unknot diagram); no PD code")]
    ZeroCrossings,

    /// Arc bookkeeping in a PD code is inconsistent.
    #[error("malformed PD code: {0}")]
    MalformedPd(String),

    /// The quadratic bound is only meaningful for nontrivial knots.
    #[error("crossing number {c} rejected: no nontrivial knot has fewer than 3 crossings")]
    CrossingNumberTooSmall { c: u64 },

    /// Folded-ribbon layouts are built for even half-twist counts only.
    #[error("invalid half-twist count {n}: {reason}")]
    BadFoldParams { n: i64, reason: String },

    /// Exhaustive search caps exceeded.
    #[error("exhaustive search limits exceeded: size {size} > {max_size} or depth {depth} > {max_depth}")]
    SearchCapsExceeded {
        size: usize,
        max_size: usize,
        depth: usize,
        max_depth: usize,
    },

    /// A requested grid move is not legal on the given diagram.
    #[error("illegal move: {0}")]
    IllegalMove(String),

    /// Alexander polynomial coefficients exceeded the i64 range.
    #[error("polynomial coefficient overflow while converting determinant")]
    CoefficientOverflow,
}

pub type Result<T> = std::result::Result<T, Error>;
