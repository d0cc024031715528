use thiserror::Error;

/// Everything that can go wrong in the toolkit.
///
/// Variants fall into three families, mirrored by [`ErrorKind`]: bad input,
/// geometry the toolkit does not handle (degenerate or out of contract), and
/// internal consistency failures that indicate a defect.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("zero direction")]
    ZeroDirection,
    #[error("degenerate system")]
    DegenerateSystem,
    #[error("degenerate: not full-dimensional (affine rank {rank} < {dim})")]
    NotFullDimensional { rank: usize, dim: usize },
    #[error("unbounded region")]
    Unbounded,
    #[error("degenerate: empty region")]
    Empty,
    #[error("edge direction not rational-primitive computable on non-lattice polytope")]
    NonLattice,
    #[error("dual undefined: origin not in interior")]
    OriginNotInterior,
    #[error("interior lattice point not unique (found {count})")]
    InteriorPointNotUnique { count: String },
    #[error("negative dilation: use polynomial evaluation for reciprocity")]
    NegativeDilation,
    #[error("Hibi criterion requires origin in polytope")]
    OriginNotInPolytope,
    #[error("equivalence search requires Delzant inputs")]
    EquivalenceRequiresDelzant,
    #[error("classification requires a Delzant polytope")]
    ClassificationRequiresDelzant,
    #[error("coefficient too large for machine-integer enumeration")]
    Overflow,
    #[error("interpolation inconsistency: {0}")]
    InterpolationInconsistency(String),
    #[error("certificate not found: cited bound contradicted ({0})")]
    CertificateNotFound(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    InvalidInput,
    Unsupported,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            InvalidInput(_) | DimensionMismatch { .. } | ZeroDirection => ErrorKind::InvalidInput,
            InterpolationInconsistency(_) | CertificateNotFound(_) | Internal(_) => ErrorKind::Internal,
            _ => ErrorKind::Unsupported,
        }
    }

    /// Process exit code used by the CLI: 1 invalid input, 2 degenerate or
    /// unsupported geometry, 3 internal consistency failure.
    pub fn exit_code(&self) -> i32 {
        match self.kind() {
            ErrorKind::InvalidInput => 1,
            ErrorKind::Unsupported => 2,
            ErrorKind::Internal => 3,
        }
    }

    /// Short machine-readable tag.
    pub fn tag(&self) -> &'static str {
        use Error::*;
        match self {
            InvalidInput(_) => "invalid_input",
            DimensionMismatch { .. } => "dimension_mismatch",
            ZeroDirection => "zero_direction",
            DegenerateSystem => "degenerate_system",
            NotFullDimensional { .. } => "not_full_dimensional",
            Unbounded => "unbounded",
            Empty => "empty",
            NonLattice => "non_lattice",
            OriginNotInterior => "origin_not_interior",
            InteriorPointNotUnique { .. } => "interior_point_not_unique",
            NegativeDilation => "negative_dilation",
            OriginNotInPolytope => "origin_not_in_polytope",
            EquivalenceRequiresDelzant => "equivalence_requires_delzant",
            ClassificationRequiresDelzant => "classification_requires_delzant",
            Overflow => "overflow",
            InterpolationInconsistency(_) => "interpolation_inconsistency",
            CertificateNotFound(_) => "certificate_not_found",
            Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
