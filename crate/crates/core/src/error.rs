use thiserror::Error;

/// Failure modes of the library.
///
/// Variants split into two families: validation failures (the input does
/// not describe an admissible system) and numerical failures (the input is
/// admissible but the requested quantity does not exist or could not be
/// computed). [`Error::is_validation`] tells them apart.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid exponent {exponent} for {kinematics} kinematics")]
    InvalidExponent { exponent: f64, kinematics: &'static str },

    #[error("zero particle mass requires semirelativistic kinematics")]
    ZeroMassNonrelativistic,

    #[error("expected {expected} oscillator modes, found {found}")]
    WrongModeCount { expected: usize, found: usize },

    #[error("at least two particles are required, got {0}")]
    TooFewParticles(usize),

    #[error("invalid coefficient: {0}")]
    InvalidCoefficient(String),

    #[error("unsupported potential form: {0}")]
    UnsupportedForm(String),

    #[error("unsupported combination: {0}")]
    UnsupportedCombination(String),

    #[error("operation requires identical particle masses")]
    NonIdenticalMasses,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("argument {value} outside the domain of {function}")]
    DomainError { function: &'static str, value: f64 },

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("all masses must be strictly positive")]
    SingularMasses,

    #[error("negative discriminant {0:e} in three-body closed form")]
    NegativeDiscriminant(f64),

    #[error("no restoring force: k + N kbar = {0} must be positive")]
    NoRestoringForce(f64),

    #[error("N - 1 = {0} does not fill a closed shell with degeneracy {1}")]
    NotClosedShell(usize, u32),

    #[error("auxiliary field equation has no positive root")]
    NoPositiveRoot,

    #[error("exponent {0} has no closed-form solution at finite mass")]
    NotClosedForm(f64),

    #[error("effective string tension c = {0} must be positive")]
    NonPositiveSlope(f64),

    #[error("coupling is over critical: {0}")]
    OverCritical(String),

    #[error("unstable configuration: D = {0} must be below 1")]
    UnstableConfiguration(f64),

    #[error("no bound state: coupling {coupling} does not exceed critical value {critical}")]
    NoBoundState { coupling: f64, critical: f64 },

    #[error("no convergence after {0} evaluations")]
    NonConvergence(usize),

    #[error("trial energy has no interior minimum")]
    UnboundedBelow,

    #[error("quadratic term has a constant auxiliary field; its inverse is undefined")]
    QuadraticDegenerate,
}

impl Error {
    /// True for errors caused by an inadmissible input description.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidExponent { .. }
                | Error::ZeroMassNonrelativistic
                | Error::WrongModeCount { .. }
                | Error::TooFewParticles(_)
                | Error::InvalidCoefficient(_)
                | Error::UnsupportedForm(_)
                | Error::UnsupportedCombination(_)
                | Error::NonIdenticalMasses
                | Error::DimensionMismatch(_)
                | Error::SingularMasses
        )
    }

    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidExponent { .. } => "InvalidExponent",
            Error::ZeroMassNonrelativistic => "ZeroMassNonrelativistic",
            Error::WrongModeCount { .. } => "WrongModeCount",
            Error::TooFewParticles(_) => "TooFewParticles",
            Error::InvalidCoefficient(_) => "InvalidCoefficient",
            Error::UnsupportedForm(_) => "UnsupportedForm",
            Error::UnsupportedCombination(_) => "UnsupportedCombination",
            Error::NonIdenticalMasses => "NonIdenticalMasses",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::DomainError { .. } => "DomainError",
            Error::NotSymmetric(_) => "NotSymmetric",
            Error::SingularMasses => "SingularMasses",
            Error::NegativeDiscriminant(_) => "NegativeDiscriminant",
            Error::NoRestoringForce(_) => "NoRestoringForce",
            Error::NotClosedShell(..) => "NotClosedShell",
            Error::NoPositiveRoot => "NoPositiveRoot",
            Error::NotClosedForm(_) => "NotClosedForm",
            Error::NonPositiveSlope(_) => "NonPositiveSlope",
            Error::OverCritical(_) => "OverCritical",
            Error::UnstableConfiguration(_) => "UnstableConfiguration",
            Error::NoBoundState { .. } => "NoBoundState",
            Error::NonConvergence(_) => "NonConvergence",
            Error::UnboundedBelow => "UnboundedBelow",
            Error::QuadraticDegenerate => "QuadraticDegenerate",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
