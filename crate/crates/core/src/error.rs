//! Error type shared across the crate.

use thiserror::Error;

use crate::mesh::ElemId;

/// Errors produced by mesh, assembly, solver and contact operations.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Referenced a node or element that is no longer live.
    #[error("stale reference: {0}")]
    StaleReference(String),

    /// Element geometry is inverted or collapsed.
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    /// Iterative linear solver did not reach the requested tolerance.
    #[error("linear solver failed: relative residual {residual:.3e} after {iterations} iterations")]
    SolverFailure { residual: f64, iterations: usize },

    /// Contact (Uzawa) outer loop hit its iteration cap.
    #[error("contact solver failed: multiplier residual {residual:.3e} after {iterations} iterations")]
    ContactSolverFailure { residual: f64, iterations: usize },

    /// Stress recovery patch system is singular.
    #[error("estimator failure: {0}")]
    EstimatorFailure(String),

    /// Coarsening requested on an element whose children are refined.
    #[error("coarsen children of element {0:?} first")]
    CoarsenChildrenFirst(ElemId),

    /// Slave/master graph is inconsistent.
    #[error("topology corruption: {0}")]
    TopologyCorruption(String),

    /// Constraint anchor points into a dead element and could not be re-anchored.
    #[error("stale anchor in element {0:?}")]
    StaleAnchor(ElemId),
}

pub type Result<T> = std::result::Result<T, CoreError>;
