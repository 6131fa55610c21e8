//! Exact structure-constant computations for finite-dimensional (co/bi/Hopf)
//! algebras over prime fields F_p.
//!
//! Everything here is exact arithmetic on dense structure tensors: no floats,
//! no randomization, no field extensions. Objects are small (dimensions in the
//! tens), so plain Gaussian elimination and direct tensor contractions are both
//! the simplest and the fastest tools at this scale.
//!
//! The crate is organized bottom-up:
//!
//! * [`linalg`]: matrices and subspaces over F_p,
//! * [`algebra`]: structure-constant algebras, axiom validation, duals,
//! * [`groups`], [`construct`]: group tables and the Hopf algebra constructors,
//! * [`invariants`]: radical, integrals, center, coradical, primitives,
//! * [`cohomology`]: the cobar differentials and second cohomology,
//! * [`masuoka`]: the seven-condition semisimplicity report and batch suite,
//! * [`format`]: the on-disk JSON formats used by the CLI.

// Tensor kernels walk flat slot indices in lockstep across several buffers;
// iterator rewrites obscure the index identities the comments rely on. The
// residue tests read as mathematics (`x % p == 0`), not as divisibility API.
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

pub mod algebra;
pub mod cohomology;
pub mod construct;
pub mod format;
pub mod groups;
pub mod invariants;
pub mod linalg;
pub mod masuoka;

pub use algebra::{AlgebraKind, AxiomViolation, Element, StructuredAlgebra};
pub use linalg::{FpMatrix, Subspace};

/// Errors shared across the crate.
///
/// Mathematical failures (axiom violations, inconsistent systems, invalid
/// inputs) are kept distinct from IO and parse failures so the CLI can map
/// them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} too large (residues are stored in bytes, so p <= 251)")]
    ModulusTooLarge(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    #[error("matrix is singular")]
    Singular,
    #[error("object carries no multiplication/unit data")]
    MissingAlgebra,
    #[error("object carries no comultiplication/counit data")]
    MissingCoalgebra,
    #[error("object carries no antipode and none was requested")]
    MissingAntipode,
    #[error("no antipode exists for this bialgebra")]
    NoAntipode,
    #[error("axiom validation failed with {} violation(s); first: {}", .0.len(), .0[0])]
    AxiomViolations(Vec<AxiomViolation>),
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("unknown catalog group '{0}'")]
    UnknownGroup(String),
    #[error("invalid Lie data: {0}")]
    InvalidLieData(String),
    #[error("bracket/p-map data does not define a restricted enveloping algebra: {0}")]
    NotRestricted(String),
    #[error("not a 2-cocycle: d2(u) != 0")]
    NotCocycle,
    #[error("base algebra is not commutative")]
    BaseNotCommutative,
    #[error("comultiplication incompatible with relation: {0}")]
    IncompatibleRelation(String),
    #[error("action is not a measuring: {0}")]
    NotMeasuring(String),
    #[error("cocycle is not convolution invertible")]
    NotConvolutionInvertible,
    #[error("subspace is not a Hopf subalgebra: {0}")]
    NotHopfSubalgebra(String),
    #[error("subspace is not a Hopf ideal: {0}")]
    NotHopfIdeal(String),
    #[error("proper subalgebra expected: {0}")]
    NotProper(String),
    #[error("subalgebra does not contain the primitively generated part")]
    MissingCore,
    #[error("coalgebra is not connected (coradical dimension {0})")]
    NotConnected(usize),
    #[error("integral space has dimension {0}, expected 1")]
    IntegralDimension(usize),
    #[error("representative is not fixed by Frobenius and no small fix-up was found")]
    FrobeniusFixup,
    #[error("cohomology degree {0} unsupported (supported: 1, 2, 3)")]
    UnsupportedDegree(usize),
    #[error(
        "degree-3 differential would need {0} tensor coordinates; refusing above dimension 64"
    )]
    DegreeTooLarge(usize),
    #[error("result dimension {0} exceeds the dense tensor bound {1}")]
    DimensionTooLarge(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors that indicate bad input files rather than bad math.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Io(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
