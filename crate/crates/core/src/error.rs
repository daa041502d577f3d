use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A composition hit an exact 0/0 form, e.g. the velocity pair `(c, -c)`.
    #[error("degenerate sum: {0}")]
    DegenerateSum(String),

    /// An input lies outside the domain on which the operation is defined.
    #[error("domain error: {0}")]
    DomainError(String),

    /// A grid index without the two neighbours the central difference needs.
    #[error("index {index} is not an interior point of a grid with {count} points")]
    IndexError { index: usize, count: usize },

    /// Two values measured against different light-speed constants were combined.
    #[error("mismatched light speed: {left} vs {right}")]
    MismatchedLightSpeed { left: f64, right: f64 },
}

impl Error {
    /// Short variant name, used by the CLI when reporting on stderr.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DegenerateSum(_) => "DegenerateSum",
            Error::DomainError(_) => "DomainError",
            Error::IndexError { .. } => "IndexError",
            Error::MismatchedLightSpeed { .. } => "MismatchedLightSpeed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
