//! Shallow-water equations over a horizontal bed. The star variable is the
//! depth.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::system::{RiemannProblem, StarSolution, WaveSystem};
use crate::types::{EstimatorId, SpeedBounds, WavePattern};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweState {
    pub h: f64,
    pub u: f64,
}

impl SweState {
    pub const fn new(h: f64, u: f64) -> Self {
        SweState { h, u }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweParams {
    pub g: f64,
}

impl Default for SweParams {
    fn default() -> Self {
        SweParams { g: 9.8 }
    }
}

pub type SweProblem = RiemannProblem<SweParams>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweExactSolution {
    pub h_star: f64,
    pub u_star: f64,
    pub pattern: WavePattern,
    pub s_left: f64,
    pub s_right: f64,
}

impl From<StarSolution> for SweExactSolution {
    fn from(s: StarSolution) -> Self {
        SweExactSolution {
            h_star: s.star,
            u_star: s.u_star,
            pattern: s.pattern,
            s_left: s.s_left,
            s_right: s.s_right,
        }
    }
}

impl WaveSystem for SweParams {
    type State = SweState;

    const NAME: &'static str = "swe";
    const STAR_SYMBOL: &'static str = "h";
    const DRY_FRONT_FACTOR: Option<f64> = Some(2.0);

    const FIELDS: &'static [&'static str] = &["h", "u"];

    fn validate(&self) -> Result<()> {
        if self.g > 0.0 && self.g.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!(
                "g must be positive, got {}",
                self.g
            )))
        }
    }

    fn validate_state(&self, s: &SweState) -> Result<()> {
        if s.h > 0.0 && s.h.is_finite() && s.u.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidState(format!(
                "need h > 0 and finite u, got h={}, u={}",
                s.h, s.u
            )))
        }
    }

    fn state_from_values(v: &[f64]) -> Result<SweState> {
        expect_arity(v)?;
        Ok(SweState::new(v[0], v[1]))
    }

    fn state_values(s: &SweState) -> Vec<f64> {
        vec![s.h, s.u]
    }

    fn star_var(s: &SweState) -> f64 {
        s.h
    }

    fn velocity(s: &SweState) -> f64 {
        s.u
    }

    fn mirror(s: &SweState) -> SweState {
        SweState { h: s.h, u: -s.u }
    }

    fn wave_speed(&self, s: &SweState) -> f64 {
        (self.g * s.h).sqrt()
    }

    fn wave_curve(&self, h: f64, s: &SweState) -> (f64, f64) {
        let g = self.g;
        if h <= s.h {
            let c = (g * h).sqrt();
            (2.0 * (c - self.wave_speed(s)), (g / h).sqrt())
        } else {
            let w = 0.5 * g * (1.0 / h + 1.0 / s.h);
            let root = w.sqrt();
            let dw = -0.5 * g / (h * h);
            ((h - s.h) * root, root + (h - s.h) * dw / (2.0 * root))
        }
    }

    fn shock_factor(&self, h: f64, s: &SweState) -> f64 {
        let y = h / s.h;
        (0.5 * (y * y + y)).sqrt()
    }

    fn escape_speed(&self, s: &SweState) -> f64 {
        2.0 * self.wave_speed(s)
    }

    fn two_rarefaction_raw(&self, l: &SweState, r: &SweState) -> f64 {
        let b = 0.5 * (self.wave_speed(l) + self.wave_speed(r)) + 0.25 * (l.u - r.u);
        b * b / self.g
    }

    fn domain_error(limit: f64, du: f64) -> Error {
        Error::DryBed { limit, du }
    }
}

fn expect_arity(v: &[f64]) -> Result<()> {
    if v.len() == 2 {
        Ok(())
    } else {
        Err(Error::InvalidState(format!(
            "expected 2 values (h,u), got {}",
            v.len()
        )))
    }
}

pub fn problem(left: SweState, right: SweState, params: SweParams) -> Result<SweProblem> {
    RiemannProblem::new(left, right, params)
}

pub fn celerity(state: &SweState, params: &SweParams) -> f64 {
    params.wave_speed(state)
}

/// Depth wave curve through one data state.
pub fn f_side(h: f64, state: &SweState, params: &SweParams) -> f64 {
    params.wave_curve(h, state).0
}

pub fn depth_function(h: f64, problem: &SweProblem) -> f64 {
    problem.star_function(h)
}

pub fn two_rarefaction_depth(problem: &SweProblem) -> Result<f64> {
    problem.two_rarefaction()
}

/// Wet-bed condition `2(c_L + c_R) > u_R - u_L`.
pub fn check_wet(problem: &SweProblem) -> bool {
    problem.is_admissible()
}

pub fn classify(problem: &SweProblem) -> WavePattern {
    problem.classify()
}

pub fn solve_exact(problem: &SweProblem) -> Result<SweExactSolution> {
    problem.solve().map(Into::into)
}

pub fn q_factor(h: f64, state: &SweState, params: &SweParams) -> f64 {
    params.shock_factor(h, state)
}

pub fn estimate(problem: &SweProblem, estimator: EstimatorId) -> Result<SpeedBounds> {
    problem.estimate(estimator)
}
