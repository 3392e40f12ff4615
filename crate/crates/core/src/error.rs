//! Error type shared by every module in this crate.

/// Errors produced by graph construction, decoding, spectral computation,
/// and the scan drivers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An edge endpoint is not a vertex of the graph being built.
    #[error("edge endpoint {vertex} out of range for a graph on {n} vertices")]
    OutOfRangeVertex { vertex: usize, n: usize },

    /// An edge joins a vertex to itself; only simple graphs are supported.
    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),

    /// A family description carries parameters outside its valid range.
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),

    /// The graph6 header byte is missing, out of range, or requests the
    /// long (multi-byte) vertex-count form, which is not supported.
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),

    /// The graph6 body ends before all upper-triangle bits are present.
    #[error("graph6 body truncated: expected {expected} data bytes, found {found}")]
    TruncatedBits { expected: usize, found: usize },

    /// The graph6 body continues past the last upper-triangle bit, or a
    /// padding bit is set.
    #[error("trailing garbage after graph6 body: {0}")]
    TrailingGarbage(String),

    /// The requested vertex count exceeds the supported maximum, or an
    /// exhaustive sweep was requested above its supported size.
    #[error("size {n} exceeds the supported maximum {max} for {what}")]
    TooLarge { n: usize, max: usize, what: &'static str },

    /// The operation is defined only for connected graphs.
    #[error("graph is disconnected: {0}")]
    Disconnected(&'static str),

    /// A graph operation would produce a disconnected result, so the
    /// requested connected-graph quantity is undefined for it.
    #[error("operation result is disconnected: {0}")]
    DisconnectedResult(String),

    /// The iterative eigenvalue solver failed to reach its convergence
    /// threshold within the sweep budget.
    #[error("eigenvalue iteration did not converge after {sweeps} sweeps (off-diagonal norm {off:.3e})")]
    NoConvergence { sweeps: usize, off: f64 },

    /// A power-mean exponent must be strictly positive.
    #[error("exponent p must be strictly positive, got {0}")]
    NonPositiveP(f64),

    /// The inequality being checked requires more vertices than the input has.
    #[error("graph too small: {0}")]
    TooSmall(String),

    /// An operation input fails a structural precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The family has no exact closed form; its index must be computed
    /// spectrally instead.
    #[error("no exact closed form for this family: {0}")]
    UnsupportedFamily(String),

    /// A scan finished but could not certify a strict extremal witness
    /// because two non-isomorphic graphs attain the extreme within the
    /// tie-breaking tolerance.
    #[error("ambiguous extremal witness: {0}")]
    AmbiguousWitness(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
