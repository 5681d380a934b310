use core::fmt;

/// Errors raised by the numerical kernels and the registries built on them.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument sits on (or within `pole_tol` of) a pole of the gamma function.
    Pole { what: &'static str, at: f64 },
    /// A denominator parameter of a hypergeometric series is a blocking
    /// nonpositive integer.
    ParameterPole { index: usize, value: f64 },
    /// The series did not meet its tolerance within `max_terms`.
    Diverged { terms: usize, last_term_abs: f64 },
    /// Argument outside the region where the representation is valid.
    Domain(&'static str),
    /// Complex argument on a branch cut.
    Branch(&'static str),
    /// Parameters outside an orthogonality range.
    Parameter(&'static str),
    /// A quadrature rule could not be built or reach exactness.
    Quadrature(&'static str),
    /// Adaptive refinement stalled.
    NonConvergence { stage: &'static str, estimate: f64 },
    /// The operation is not defined for this polynomial family.
    UnsupportedFamily(&'static str),
    /// A NaN or infinity escaped the computation.
    NonFinite(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole { what, at } => write!(f, "{what}: gamma pole at {at}"),
            Error::ParameterPole { index, value } => {
                write!(f, "denominator parameter {index} is a blocking pole ({value})")
            }
            Error::Diverged {
                terms,
                last_term_abs,
            } => write!(
                f,
                "series did not converge after {terms} terms (last |term| = {last_term_abs:e})"
            ),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Branch(msg) => write!(f, "branch error: {msg}"),
            Error::Parameter(msg) => write!(f, "parameter error: {msg}"),
            Error::Quadrature(msg) => write!(f, "quadrature error: {msg}"),
            Error::NonConvergence { stage, estimate } => {
                write!(f, "{stage} did not converge (last estimate {estimate:e})")
            }
            Error::UnsupportedFamily(family) => write!(f, "unsupported family: {family}"),
            Error::NonFinite(what) => write!(f, "non-finite value in {what}"),
        }
    }
}
