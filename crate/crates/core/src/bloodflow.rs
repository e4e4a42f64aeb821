//! One-dimensional blood flow in an elastic artery with the tube law
//! `p = beta (sqrt(A) - sqrt(A0))`. CGS units throughout. The star
//! variable is the cross-sectional area.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::system::{RiemannProblem, StarSolution, WaveSystem};
use crate::types::{EstimatorId, SpeedBounds, WavePattern};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BfeState {
    pub a: f64,
    pub u: f64,
}

impl BfeState {
    pub const fn new(a: f64, u: f64) -> Self {
        BfeState { a, u }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BfeParams {
    pub beta: f64,
    pub rho: f64,
}

impl Default for BfeParams {
    fn default() -> Self {
        BfeParams {
            beta: 28209.4792,
            rho: 1.05,
        }
    }
}

impl BfeParams {
    /// `beta / (3 rho)`, the coefficient of the shock branch.
    pub fn gamma(&self) -> f64 {
        self.beta / (3.0 * self.rho)
    }

    /// `sqrt(beta / (2 rho))`, so that `c = zeta A^(1/4)`.
    pub fn zeta(&self) -> f64 {
        (self.beta / (2.0 * self.rho)).sqrt()
    }
}

pub type BfeProblem = RiemannProblem<BfeParams>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BfeExactSolution {
    pub a_star: f64,
    pub u_star: f64,
    pub pattern: WavePattern,
    pub s_left: f64,
    pub s_right: f64,
}

impl From<StarSolution> for BfeExactSolution {
    fn from(s: StarSolution) -> Self {
        BfeExactSolution {
            a_star: s.star,
            u_star: s.u_star,
            pattern: s.pattern,
            s_left: s.s_left,
            s_right: s.s_right,
        }
    }
}

impl WaveSystem for BfeParams {
    type State = BfeState;

    const NAME: &'static str = "bfe";
    const STAR_SYMBOL: &'static str = "A";
    const DRY_FRONT_FACTOR: Option<f64> = Some(4.0);

    const FIELDS: &'static [&'static str] = &["A", "u"];

    fn validate(&self) -> Result<()> {
        let ok = self.beta > 0.0 && self.rho > 0.0 && self.beta.is_finite() && self.rho.is_finite();
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!(
                "beta and rho must be positive, got beta={}, rho={}",
                self.beta, self.rho
            )))
        }
    }

    fn validate_state(&self, s: &BfeState) -> Result<()> {
        if s.a > 0.0 && s.a.is_finite() && s.u.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidState(format!(
                "need A > 0 and finite u, got A={}, u={}",
                s.a, s.u
            )))
        }
    }

    fn state_from_values(v: &[f64]) -> Result<BfeState> {
        expect_arity(v)?;
        Ok(BfeState::new(v[0], v[1]))
    }

    fn state_values(s: &BfeState) -> Vec<f64> {
        vec![s.a, s.u]
    }

    fn star_var(s: &BfeState) -> f64 {
        s.a
    }

    fn velocity(s: &BfeState) -> f64 {
        s.u
    }

    fn mirror(s: &BfeState) -> BfeState {
        BfeState { a: s.a, u: -s.u }
    }

    fn wave_speed(&self, s: &BfeState) -> f64 {
        self.zeta() * s.a.powf(0.25)
    }

    fn wave_curve(&self, a: f64, s: &BfeState) -> (f64, f64) {
        let zeta = self.zeta();
        if a < s.a {
            let f = 4.0 * zeta * (a.powf(0.25) - s.a.powf(0.25));
            return (f, zeta * a.powf(-0.75));
        }
        // With r = sqrt(A/A_K) the shock branch is
        //   zeta sqrt(2/3) A_K^(1/4) (r - 1) sqrt((r + 1)(r^2 + r + 1)) / r,
        // free of the 0/0 at A = A_K.
        let r = (a / s.a).sqrt();
        let k = zeta * (2.0_f64 / 3.0).sqrt() * s.a.powf(0.25);
        let poly = ((r + 2.0) * r + 2.0) * r + 1.0;
        let dpoly = (3.0 * r + 4.0) * r + 2.0;
        let sq = poly.sqrt();
        let g = (r - 1.0) * sq / r;
        let dg = sq / r + (r - 1.0) * (dpoly / (2.0 * r * sq) - sq / (r * r));
        (k * g, k * dg / (2.0 * r * s.a))
    }

    fn shock_factor(&self, a: f64, s: &BfeState) -> f64 {
        let y = a / s.a;
        if (y - 1.0).abs() < 1e-8 {
            return 1.0;
        }
        (2.0 / 3.0 * (y.powf(1.5) - 1.0) * y / (y - 1.0)).sqrt()
    }

    fn escape_speed(&self, s: &BfeState) -> f64 {
        4.0 * self.wave_speed(s)
    }

    fn two_rarefaction_raw(&self, l: &BfeState, r: &BfeState) -> f64 {
        let b = 0.5 * (self.wave_speed(l) + self.wave_speed(r)) - 0.125 * (r.u - l.u);
        let v = 2.0 * self.rho * b * b / self.beta;
        v * v
    }

    fn domain_error(limit: f64, du: f64) -> Error {
        Error::CollapseData { limit, du }
    }
}

fn expect_arity(v: &[f64]) -> Result<()> {
    if v.len() == 2 {
        Ok(())
    } else {
        Err(Error::InvalidState(format!(
            "expected 2 values (A,u), got {}",
            v.len()
        )))
    }
}

pub fn problem(left: BfeState, right: BfeState, params: BfeParams) -> Result<BfeProblem> {
    RiemannProblem::new(left, right, params)
}

pub fn wave_speed(state: &BfeState, params: &BfeParams) -> f64 {
    params.wave_speed(state)
}

/// Area wave curve through one data state.
pub fn f_side(a: f64, state: &BfeState, params: &BfeParams) -> f64 {
    params.wave_curve(a, state).0
}

pub fn area_function(a: f64, problem: &BfeProblem) -> f64 {
    problem.star_function(a)
}

pub fn two_rarefaction_area(problem: &BfeProblem) -> Result<f64> {
    problem.two_rarefaction()
}

/// Non-collapse condition `4(c_L + c_R) > u_R - u_L`.
pub fn check_open(problem: &BfeProblem) -> bool {
    problem.is_admissible()
}

pub fn classify(problem: &BfeProblem) -> WavePattern {
    problem.classify()
}

pub fn solve_exact(problem: &BfeProblem) -> Result<BfeExactSolution> {
    problem.solve().map(Into::into)
}

pub fn q_factor(a: f64, state: &BfeState, params: &BfeParams) -> f64 {
    params.shock_factor(a, state)
}

pub fn estimate(problem: &BfeProblem, estimator: EstimatorId) -> Result<SpeedBounds> {
    problem.estimate(estimator)
}
