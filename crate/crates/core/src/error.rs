use alloc::string::String;
use core::fmt;

/// Errors raised by the construction calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    UnknownGenerator(String),
    DuplicateGenerator(String),
    /// `e + sigma` is not divisible by 4.
    Inadmissible(String),
    InvalidParameter(String),
    UnknownSurface(String),
    GenusMismatch {
        left: u32,
        right: u32,
    },
    NonzeroSelfIntersection {
        surface: String,
        value: i64,
    },
    NotSymplecticSurface(String),
    NotLagrangian(String),
    NotATorus(String),
    NotSpinSymplectic(String),
    /// Neither side of a sum has a simply connected complement or a trivial meridian certificate.
    UnsupportedFundamentalGroup,
    UnsupportedTarget(String),
    NotNullhomologous(String),
    MissingCertificate(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownGenerator(g) => write!(f, "undeclared generator `{g}`"),
            Error::DuplicateGenerator(g) => write!(f, "generator `{g}` declared twice"),
            Error::Inadmissible(msg) => write!(f, "inadmissible input: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::UnknownSurface(s) => write!(f, "no marked surface `{s}`"),
            Error::GenusMismatch { left, right } => {
                write!(f, "genus mismatch: {left} vs {right}")
            }
            Error::NonzeroSelfIntersection { surface, value } => {
                write!(f, "surface `{surface}` has self-intersection {value}, expected 0")
            }
            Error::NotSymplecticSurface(s) => write!(f, "surface `{s}` is not symplectic"),
            Error::NotLagrangian(s) => write!(f, "surface `{s}` is not Lagrangian"),
            Error::NotATorus(s) => write!(f, "surface `{s}` is not a torus"),
            Error::NotSpinSymplectic(m) => write!(f, "operand `{m}` is not spin and symplectic"),
            Error::UnsupportedFundamentalGroup => write!(
                f,
                "unsupported fundamental group computation: both complements nontrivial and no trivial-meridian certificate"
            ),
            Error::UnsupportedTarget(t) => write!(f, "unsupported target group {t}"),
            Error::NotNullhomologous(s) => write!(f, "surface `{s}` is not nullhomologous"),
            Error::MissingCertificate(c) => write!(f, "missing certificate: {c}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
