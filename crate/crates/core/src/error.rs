use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("surface genus must be at least {min}, got {genus}")]
    InvalidGenus { genus: usize, min: usize },

    #[error("surface mismatch: genus {left} vs genus {right}")]
    SurfaceMismatch { left: usize, right: usize },

    #[error("expected a vector of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("matrix has odd dimension {0}; symplectic matrices are 2g x 2g")]
    OddDimension(usize),

    #[error("matrix is not square: {rows} x {cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix does not preserve the intersection form")]
    NotSymplectic,

    #[error("bilinear form is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },

    #[error("twist exponent must be nonzero")]
    ZeroExponent,

    #[error("letter marked separating has nonzero homology class")]
    SeparatingWithNonzeroClass,

    #[error("vanishing cycles must be right-handed; letter {index} has exponent {exponent}")]
    NegativeTwist { index: usize, exponent: i64 },

    #[error("total monodromy is not the identity on homology, so the fibration does not close up over the sphere")]
    MonodromyNotTrivial,

    #[error("a fibration over the sphere has closed fibers; got {0} boundary components")]
    SphereWithBoundary(u8),

    #[error("fiber may have at most one boundary component, got {0}")]
    TooManyBoundaryComponents(u8),

    #[error("fiber sums are only defined here for fibrations over the sphere")]
    FiberSumNeedsSphere,

    #[error("first homology over the sphere needs a section, and this fibration carries no section data")]
    MissingSection,

    #[error("signature needs a relator: the Meyer cocycle sum only assembles when the total monodromy is trivial")]
    NotARelator,

    #[error("plumbing graph is disconnected")]
    DisconnectedPlumbing,

    #[error("plumbing edge ({0}, {1}) refers to a missing vertex or is a loop")]
    InvalidPlumbingEdge(usize, usize),

    #[error("plumbing edge ({0}, {1}) is repeated")]
    DuplicatePlumbingEdge(usize, usize),

    #[error("plumbing graph has no vertices")]
    EmptyPlumbing,

    #[error("unknown atlas curve {name:?} at genus {genus}")]
    UnknownCurve { name: String, genus: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
