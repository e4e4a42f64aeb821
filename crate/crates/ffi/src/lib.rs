//! C interface to `riemann-bounds`.
//!
//! Problems live behind an opaque `RbProblem` handle created by one of the
//! `rb_*_problem_new` constructors and released with `rb_problem_free`.
//! Every function returns an `RbStatus`; results are written through out
//! pointers only on `RB_STATUS_OK`. Panics never cross the boundary.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use riemann_bounds::bloodflow::{BfeParams, BfeProblem, BfeState};
use riemann_bounds::euler::{EulerParams, EulerProblem, EulerState};
use riemann_bounds::shallow::{SweParams, SweProblem, SweState};
use riemann_bounds::{
    courant_dt, Error, EstimatorId, RiemannProblem, SpeedBounds, StarSolution, WavePattern,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidState = 2,
    InvalidParams = 3,
    InvalidArgument = 4,
    Vacuum = 5,
    DryBed = 6,
    Collapse = 7,
    UnsupportedEstimator = 8,
    NoConvergence = 9,
    InvalidBracket = 10,
    DegeneratePoints = 11,
    ZeroMaxSpeed = 12,
    Panic = 13,
}

const STATUSES: [RbStatus; 14] = [
    RbStatus::Ok,
    RbStatus::NullPointer,
    RbStatus::InvalidState,
    RbStatus::InvalidParams,
    RbStatus::InvalidArgument,
    RbStatus::Vacuum,
    RbStatus::DryBed,
    RbStatus::Collapse,
    RbStatus::UnsupportedEstimator,
    RbStatus::NoConvergence,
    RbStatus::InvalidBracket,
    RbStatus::DegeneratePoints,
    RbStatus::ZeroMaxSpeed,
    RbStatus::Panic,
];

impl From<&Error> for RbStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NoConvergence { .. } => RbStatus::NoConvergence,
            Error::InvalidBracket { .. } => RbStatus::InvalidBracket,
            Error::DegeneratePoints { .. } => RbStatus::DegeneratePoints,
            Error::ZeroMaxSpeed => RbStatus::ZeroMaxSpeed,
            Error::VacuumData { .. } => RbStatus::Vacuum,
            Error::DryBed { .. } => RbStatus::DryBed,
            Error::CollapseData { .. } => RbStatus::Collapse,
            Error::UnsupportedEstimator { .. } => RbStatus::UnsupportedEstimator,
            Error::InvalidState(_) => RbStatus::InvalidState,
            Error::InvalidParams(_) => RbStatus::InvalidParams,
            Error::InvalidArgument(_) => RbStatus::InvalidArgument,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RbSystem {
    Euler = 0,
    Swe = 1,
    Bfe = 2,
}

/// Estimator codes accepted by `rb_problem_estimate`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RbEstimator {
    DavisA = 0,
    DavisB = 1,
    Einfeldt = 2,
    Batten = 3,
    Toro = 4,
    TmsA = 5,
    TmsB = 6,
    TmsC = 7,
    TmsD = 8,
    Exact = 9,
}

const ESTIMATORS: [(RbEstimator, EstimatorId); 10] = [
    (RbEstimator::DavisA, EstimatorId::DavisA),
    (RbEstimator::DavisB, EstimatorId::DavisB),
    (RbEstimator::Einfeldt, EstimatorId::Einfeldt),
    (RbEstimator::Batten, EstimatorId::Batten),
    (RbEstimator::Toro, EstimatorId::Toro),
    (RbEstimator::TmsA, EstimatorId::TmsA),
    (RbEstimator::TmsB, EstimatorId::TmsB),
    (RbEstimator::TmsC, EstimatorId::TmsC),
    (RbEstimator::TmsD, EstimatorId::TmsD),
    (RbEstimator::Exact, EstimatorId::Exact),
];

fn estimator_from_code(code: i32) -> Option<(RbEstimator, EstimatorId)> {
    ESTIMATORS
        .iter()
        .copied()
        .find(|(rb, _)| *rb as i32 == code)
}

fn estimator_code(id: EstimatorId) -> RbEstimator {
    ESTIMATORS
        .iter()
        .find(|(_, e)| *e == id)
        .map(|(rb, _)| *rb)
        .unwrap_or(RbEstimator::Exact)
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RbPattern {
    Rr = 0,
    Rs = 1,
    Sr = 2,
    Ss = 3,
    Vacuum = 4,
    Unknown = 5,
}

impl From<Option<WavePattern>> for RbPattern {
    fn from(p: Option<WavePattern>) -> Self {
        match p {
            Some(WavePattern::RR) => RbPattern::Rr,
            Some(WavePattern::RS) => RbPattern::Rs,
            Some(WavePattern::SR) => RbPattern::Sr,
            Some(WavePattern::SS) => RbPattern::Ss,
            Some(WavePattern::Vacuum) => RbPattern::Vacuum,
            None => RbPattern::Unknown,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RbEulerState {
    pub rho: f64,
    pub u: f64,
    pub p: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RbSweState {
    pub h: f64,
    pub u: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RbBfeState {
    pub area: f64,
    pub u: f64,
}

/// Exact star state. `star` is the pressure, depth or area depending on
/// the system.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RbExactSolution {
    pub star: f64,
    pub u_star: f64,
    pub pattern: RbPattern,
    pub s_left: f64,
    pub s_right: f64,
}

impl From<StarSolution> for RbExactSolution {
    fn from(s: StarSolution) -> Self {
        RbExactSolution {
            star: s.star,
            u_star: s.u_star,
            pattern: Some(s.pattern).into(),
            s_left: s.s_left,
            s_right: s.s_right,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RbSpeedBounds {
    pub s_left: f64,
    pub s_right: f64,
    pub estimator: RbEstimator,
    pub pattern: RbPattern,
}

impl From<SpeedBounds> for RbSpeedBounds {
    fn from(b: SpeedBounds) -> Self {
        RbSpeedBounds {
            s_left: b.s_left,
            s_right: b.s_right,
            estimator: estimator_code(b.estimator),
            pattern: b.pattern.into(),
        }
    }
}

enum AnyProblem {
    Euler(EulerProblem),
    Swe(SweProblem),
    Bfe(BfeProblem),
}

/// Opaque handle to a Riemann problem.
pub struct RbProblem {
    inner: AnyProblem,
}

macro_rules! dispatch {
    ($problem:expr, $p:ident => $body:expr) => {
        match &$problem.inner {
            AnyProblem::Euler($p) => $body,
            AnyProblem::Swe($p) => $body,
            AnyProblem::Bfe($p) => $body,
        }
    };
}

fn guard<F: FnOnce() -> RbStatus>(f: F) -> RbStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(RbStatus::Panic)
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn emit<T>(out: *mut T, value: Result<T, Error>) -> RbStatus {
    if out.is_null() {
        return RbStatus::NullPointer;
    }
    match value {
        Ok(v) => {
            out.write(v);
            RbStatus::Ok
        }
        Err(e) => RbStatus::from(&e),
    }
}

fn boxed(p: AnyProblem) -> *mut RbProblem {
    Box::into_raw(Box::new(RbProblem { inner: p }))
}

/// Creates an Euler problem. `gamma` must exceed 1.
///
/// # Safety
/// `out` must be valid for writes. On success `*out` owns a handle that
/// must be released with `rb_problem_free`.
#[no_mangle]
pub unsafe extern "C" fn rb_euler_problem_new(
    left: RbEulerState,
    right: RbEulerState,
    gamma: f64,
    out: *mut *mut RbProblem,
) -> RbStatus {
    guard(|| {
        let p = RiemannProblem::new(
            EulerState::new(left.rho, left.u, left.p),
            EulerState::new(right.rho, right.u, right.p),
            EulerParams { gamma },
        );
        emit(out, p.map(|p| boxed(AnyProblem::Euler(p))))
    })
}

/// Creates a shallow-water problem with gravitational acceleration `g`.
///
/// # Safety
/// As for `rb_euler_problem_new`.
#[no_mangle]
pub unsafe extern "C" fn rb_swe_problem_new(
    left: RbSweState,
    right: RbSweState,
    g: f64,
    out: *mut *mut RbProblem,
) -> RbStatus {
    guard(|| {
        let p = RiemannProblem::new(
            SweState::new(left.h, left.u),
            SweState::new(right.h, right.u),
            SweParams { g },
        );
        emit(out, p.map(|p| boxed(AnyProblem::Swe(p))))
    })
}

/// Creates a blood-flow problem (CGS units).
///
/// # Safety
/// As for `rb_euler_problem_new`.
#[no_mangle]
pub unsafe extern "C" fn rb_bfe_problem_new(
    left: RbBfeState,
    right: RbBfeState,
    beta: f64,
    rho: f64,
    out: *mut *mut RbProblem,
) -> RbStatus {
    guard(|| {
        let p = RiemannProblem::new(
            BfeState::new(left.area, left.u),
            BfeState::new(right.area, right.u),
            BfeParams { beta, rho },
        );
        emit(out, p.map(|p| boxed(AnyProblem::Bfe(p))))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `problem` must be null or a handle from an `rb_*_problem_new` call that
/// has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn rb_problem_free(problem: *mut RbProblem) {
    if !problem.is_null() {
        drop(Box::from_raw(problem));
    }
}

/// # Safety
/// `problem` must be null or a live handle; `out` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rb_problem_system(
    problem: *const RbProblem,
    out: *mut RbSystem,
) -> RbStatus {
    guard(|| {
        let Some(p) = problem.as_ref() else {
            return RbStatus::NullPointer;
        };
        let s = match p.inner {
            AnyProblem::Euler(_) => RbSystem::Euler,
            AnyProblem::Swe(_) => RbSystem::Swe,
            AnyProblem::Bfe(_) => RbSystem::Bfe,
        };
        emit(out, Ok(s))
    })
}

/// Wave pattern; `RB_PATTERN_VACUUM` when the data leave the domain.
///
/// # Safety
/// As for `rb_problem_system`.
#[no_mangle]
pub unsafe extern "C" fn rb_problem_classify(
    problem: *const RbProblem,
    out: *mut RbPattern,
) -> RbStatus {
    guard(|| {
        let Some(p) = problem.as_ref() else {
            return RbStatus::NullPointer;
        };
        emit(out, Ok(Some(dispatch!(p, q => q.classify())).into()))
    })
}

/// # Safety
/// As for `rb_problem_system`.
#[no_mangle]
pub unsafe extern "C" fn rb_problem_solve_exact(
    problem: *const RbProblem,
    out: *mut RbExactSolution,
) -> RbStatus {
    guard(|| {
        let Some(p) = problem.as_ref() else {
            return RbStatus::NullPointer;
        };
        emit(out, dispatch!(p, q => q.solve()).map(Into::into))
    })
}

/// `estimator` is one of the `RbEstimator` codes.
///
/// # Safety
/// As for `rb_problem_system`.
#[no_mangle]
pub unsafe extern "C" fn rb_problem_estimate(
    problem: *const RbProblem,
    estimator: i32,
    out: *mut RbSpeedBounds,
) -> RbStatus {
    guard(|| {
        let Some(p) = problem.as_ref() else {
            return RbStatus::NullPointer;
        };
        let Some((_, id)) = estimator_from_code(estimator) else {
            return RbStatus::InvalidArgument;
        };
        emit(out, dispatch!(p, q => q.estimate(id)).map(Into::into))
    })
}

/// Closed-form two-rarefaction star value, an upper bound for the exact one.
///
/// # Safety
/// As for `rb_problem_system`.
#[no_mangle]
pub unsafe extern "C" fn rb_problem_two_rarefaction(
    problem: *const RbProblem,
    out: *mut f64,
) -> RbStatus {
    guard(|| {
        let Some(p) = problem.as_ref() else {
            return RbStatus::NullPointer;
        };
        emit(out, dispatch!(p, q => q.two_rarefaction()))
    })
}

/// Star function `f_L(x) + f_R(x) + u_R - u_L`.
///
/// # Safety
/// As for `rb_problem_system`.
#[no_mangle]
pub unsafe extern "C" fn rb_problem_star_function(
    problem: *const RbProblem,
    x: f64,
    out: *mut f64,
) -> RbStatus {
    guard(|| {
        let Some(p) = problem.as_ref() else {
            return RbStatus::NullPointer;
        };
        if x.is_nan() || x < 0.0 {
            return RbStatus::InvalidArgument;
        }
        emit(out, Ok(dispatch!(p, q => q.star_function(x))))
    })
}

/// Courant time step over `len` interface speed pairs.
///
/// # Safety
/// `speeds` must point to `len` readable elements; `out` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn rb_courant_dt(
    speeds: *const RbSpeedBounds,
    len: usize,
    dx: f64,
    c_cfl: f64,
    out: *mut f64,
) -> RbStatus {
    guard(|| {
        if speeds.is_null() && len > 0 {
            return RbStatus::NullPointer;
        }
        let slice = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(speeds, len)
        };
        let pairs: Vec<SpeedBounds> = slice
            .iter()
            .map(|s| SpeedBounds {
                s_left: s.s_left,
                s_right: s.s_right,
                estimator: EstimatorId::Exact,
                pattern: None,
            })
            .collect();
        emit(out, courant_dt(&pairs, dx, c_cfl))
    })
}

/// Static, NUL-terminated description of a status code. Unknown codes get
/// a generic message.
#[no_mangle]
pub extern "C" fn rb_status_message(status: i32) -> *const c_char {
    let s: &'static [u8] = match STATUSES.iter().find(|s| **s as i32 == status) {
        None => b"unknown status\0",
        Some(&st) => match st {
            RbStatus::Ok => b"ok\0",
            RbStatus::NullPointer => b"null pointer argument\0",
            RbStatus::InvalidState => b"invalid state\0",
            RbStatus::InvalidParams => b"invalid parameters\0",
            RbStatus::InvalidArgument => b"invalid argument\0",
            RbStatus::Vacuum => b"data generate vacuum\0",
            RbStatus::DryBed => b"data generate a dry bed\0",
            RbStatus::Collapse => b"data collapse the vessel\0",
            RbStatus::UnsupportedEstimator => b"estimator not defined for this system\0",
            RbStatus::NoConvergence => b"root finder did not converge\0",
            RbStatus::InvalidBracket => b"invalid root bracket\0",
            RbStatus::DegeneratePoints => b"degenerate interpolation points\0",
            RbStatus::ZeroMaxSpeed => b"maximum wave speed is zero\0",
            RbStatus::Panic => b"internal panic\0",
        },
    };
    s.as_ptr().cast()
}

/// Library version, NUL-terminated.
#[no_mangle]
pub extern "C" fn rb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
