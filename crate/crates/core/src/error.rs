//! Error types shared across the crate.

use thiserror::Error;

use crate::rational::ExtendedRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("0/0 is not an extended rational")]
    ZeroOverZero,
    #[error("mediant of equal projective points")]
    MediantOfEqualPoints,
    #[error("cannot parse extended rational from {input:?}")]
    Parse { input: String },
    #[error("matrix [[{a},{b}],[{c},{d}]] has determinant != 1")]
    NotUnimodular { a: String, b: String, c: String, d: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PieceError {
    #[error("piecewise map must have at least one piece")]
    Empty,
    #[error("piece arcs do not partition the circle (gap or overlap at {at})")]
    NotAPartition { at: ExtendedRational },
    #[error("adjacent pieces disagree at breakpoint {at}: {left} vs {right}")]
    Discontinuous {
        at: ExtendedRational,
        left: ExtendedRational,
        right: ExtendedRational,
    },
    #[error("breakpoint images are not in cyclic order; map is not a circle bijection")]
    NotBijective,
    #[error("degenerate arc in a multi-piece map")]
    DegenerateArc,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TessError {
    #[error("edge {0}--{1} is not an edge of the tessellation")]
    MissingEdge(ExtendedRational, ExtendedRational),
    #[error("support boundary is not a closed Farey polygon")]
    BadSupport,
    #[error("interior triangles do not triangulate the support polygon")]
    BadInterior,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MarkedError {
    #[error("distinguished oriented edge {0}--{1} is not an edge of the tessellation")]
    DoeNotAnEdge(ExtendedRational, ExtendedRational),
    #[error("vertex function did not stabilize within depth {depth}")]
    DepthExceeded { depth: usize },
    #[error("vertex function certification failed at index {index}: piecewise map gives {got}, recursion gives {want}")]
    CertificationFailed {
        index: ExtendedRational,
        got: ExtendedRational,
        want: ExtendedRational,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DottedError {
    #[error("label {0} is not a nonzero rational")]
    BadLabel(ExtendedRational),
    #[error("triangles labeled {j} and {k} do not share exactly one edge")]
    NotAdjacent { j: ExtendedRational, k: ExtendedRational },
    #[error("dots of triangles {j}, {k} are not in the configuration required by the decorated flip")]
    WrongDots { j: ExtendedRational, k: ExtendedRational },
    #[error("combined labeling is not a bijection")]
    LabelingNotBijective,
    #[error("letter {position} ({letter}) not applicable: {reason}")]
    Inapplicable {
        position: usize,
        letter: String,
        reason: String,
    },
    #[error(transparent)]
    Marked(#[from] MarkedError),
}
