//! Error types shared across the crate.

use thiserror::Error;

/// Errors from the geometry substrate (LP solving, projection, decomposition).
#[derive(Debug, Clone, Error)]
pub enum GeometryError {
    /// An iterative solver ran out of iterations without a certificate.
    #[error("numerical failure in {op}: {detail}")]
    NumericalFailure { op: &'static str, detail: String },
    /// The query point is not a member of the polytope.
    #[error("point is not a member of the polytope (violation {violation:.3e})")]
    NotAMember { violation: f64 },
    /// The target vector is not in the image of the domain under the map.
    #[error("target is not in the image of the domain (residual {residual:.3e})")]
    NotInImage { residual: f64 },
    /// Dimension mismatch between inputs.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Errors from the learning algorithms.
#[derive(Debug, Clone, Error)]
pub enum LearnerError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    /// The barrier Hessian lost positive definiteness.
    #[error("barrier Hessian is singular or indefinite: {0}")]
    SingularHessian(String),
    /// Feedback kind does not match the learner mode.
    #[error("feedback does not match learner mode: {0}")]
    FeedbackMismatch(&'static str),
}

/// Errors from the type-reporting solvers.
#[derive(Debug, Clone, Error)]
pub enum TypeReportingError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    /// Ellipsoid method hit its iteration budget; carries the best bound found.
    #[error("ellipsoid iteration limit reached (best bound {best_bound:.6})")]
    EllipsoidIterationLimit { best_bound: f64 },
    /// Iterative ascent failed to certify optimality; carries the residual.
    #[error("ascent did not converge (stationarity residual {residual:.3e})")]
    ConvergenceFailure { residual: f64 },
}

/// Errors raised while evaluating the persuasion domain model.
#[derive(Debug, Clone, Error)]
pub enum PersuasionError {
    /// Bayes update conditioned on a signal of (numerically) zero probability.
    #[error("signal has zero probability under the scheme and prior (mass {mass:.3e})")]
    ZeroProbabilitySignal { mass: f64 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Errors from the experiment harness.
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("config error: {0}")]
    Config(String),
    #[error("instance validation error: {0}")]
    InstanceValidation(String),
    #[error("parameter error: {0}")]
    Param(String),
    #[error("solver failure: {0}")]
    Solver(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<GeometryError> for HarnessError {
    fn from(e: GeometryError) -> Self {
        HarnessError::Solver(e.to_string())
    }
}

impl From<LearnerError> for HarnessError {
    fn from(e: LearnerError) -> Self {
        HarnessError::Solver(e.to_string())
    }
}

impl From<TypeReportingError> for HarnessError {
    fn from(e: TypeReportingError) -> Self {
        HarnessError::Solver(e.to_string())
    }
}

impl From<PersuasionError> for HarnessError {
    fn from(e: PersuasionError) -> Self {
        HarnessError::Solver(e.to_string())
    }
}
