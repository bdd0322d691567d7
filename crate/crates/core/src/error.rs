use std::fmt;

/// Errors shared by the lattice, enumeration and classification layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A surface model constructor was given invalid parameters.
    InvalidModel(String),
    /// A divisor class has the wrong length for the model it is paired with.
    DimensionMismatch { expected: usize, found: usize },
    /// An operation was called with arguments outside its domain.
    InvalidInput(String),
    /// A classification profile contradicts itself (degree, genus bound,
    /// delta genus, or lattice cross-checks).
    InconsistentProfile(String),
    /// The profile describes a surface the classification excludes.
    NonexistentSurface(String),
    /// Curve enumeration cannot close the search region.
    UnboundedSearch(String),
    /// A cone intersection table failed validation at load time.
    ConeTable(String),
    /// A cycle product would exceed the top grade of the Chow ring.
    GradeOverflow { grade_sum: usize },
    /// Two conclusive criteria disagreed; indicates an encoding bug.
    CriterionConflict(String),
    /// Malformed input document.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidModel(msg) => write!(f, "invalid surface model: {msg}"),
            Error::DimensionMismatch { expected, found } => {
                write!(
                    f,
                    "divisor class has {found} coefficients, model basis has rank {expected}"
                )
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::InconsistentProfile(msg) => write!(f, "inconsistent profile: {msg}"),
            Error::NonexistentSurface(msg) => write!(f, "no such surface exists: {msg}"),
            Error::UnboundedSearch(msg) => write!(f, "search region is not closed: {msg}"),
            Error::ConeTable(msg) => write!(f, "cone intersection table: {msg}"),
            Error::GradeOverflow { grade_sum } => {
                write!(
                    f,
                    "cycle product falls in codimension {grade_sum}, beyond the top grade"
                )
            }
            Error::CriterionConflict(msg) => write!(f, "criteria disagree: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
