use thiserror::Error;

use crate::complex::Face;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex label must be nonzero")]
    ZeroVertex,
    #[error("facet list is empty")]
    NoFacets,
    #[error("central symmetry violated at face {0}")]
    CsViolation(Face),
    #[error("facet {inner} is contained in facet {outer}")]
    RedundantFacet { inner: Face, outer: Face },
    #[error("declared ground set does not contain vertex {0}")]
    GroundSetMissing(i32),
    #[error("complex is not pure")]
    NotPure,
    #[error("{0} is not a face of the complex")]
    NotAFace(Face),
    #[error("complex is not centrally symmetric")]
    NotCs,
    #[error("ground sets overlap at vertex {0}")]
    GroundSetOverlap(i32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("ambient dimensions differ: {0} vs {1}")]
    IndexMismatch(usize, usize),
    #[error("expected {expected} forms, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("no linear system of parameters found after {attempts} attempts")]
    LsopNotFound { attempts: usize, retry_log: Vec<String> },
    #[error("polytope is not simplicial: facet {0}")]
    NotSimplicial(Face),
    #[error("complex is not a subcomplex: face {0} is missing")]
    NotSubcomplex(Face),
    #[error("forms do not meet the parity hypothesis: {0}")]
    HypothesisUnmet(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
