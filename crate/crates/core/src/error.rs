use thiserror::Error;

/// Everything the library can refuse to do.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("root finder did not converge in {max_iter} iterations (last iterate {last})")]
    NoConvergence { max_iter: usize, last: f64 },
    #[error("invalid bracket [{lo}, {hi}]: endpoints must be finite, ordered and straddle a sign change")]
    InvalidBracket { lo: f64, hi: f64 },
    #[error("degenerate interpolation points: x1 = {x1}, x2 = {x2}, f1 = {f1}, f2 = {f2}")]
    DegeneratePoints { x1: f64, x2: f64, f1: f64, f2: f64 },
    #[error("maximum wave speed is zero; no finite time step")]
    ZeroMaxSpeed,
    #[error("vacuum: 2(cL + cR)/(gamma - 1) = {limit} <= uR - uL = {du}")]
    VacuumData { limit: f64, du: f64 },
    #[error("dry bed: 2(cL + cR) = {limit} <= uR - uL = {du}")]
    DryBed { limit: f64, du: f64 },
    #[error("vessel collapse: 4(cL + cR) = {limit} <= uR - uL = {du}")]
    CollapseData { limit: f64, du: f64 },
    #[error("estimator {estimator} is not defined for the {system} system")]
    UnsupportedEstimator {
        estimator: &'static str,
        system: &'static str,
    },
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for the three "the data leave the domain" errors.
    pub fn is_physical(&self) -> bool {
        matches!(
            self,
            Error::VacuumData { .. } | Error::DryBed { .. } | Error::CollapseData { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
