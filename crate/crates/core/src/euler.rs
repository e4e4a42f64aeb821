//! Ideal-gas Euler equations in primitive variables (density, velocity,
//! pressure). The star variable is the pressure.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::system::{RiemannProblem, StarSolution, WaveSystem};
use crate::types::{EstimatorId, SpeedBounds, WavePattern};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EulerState {
    pub rho: f64,
    pub u: f64,
    pub p: f64,
}

impl EulerState {
    pub const fn new(rho: f64, u: f64, p: f64) -> Self {
        EulerState { rho, u, p }
    }

    /// Total energy per unit volume.
    pub fn total_energy(&self, params: &EulerParams) -> f64 {
        0.5 * self.rho * self.u * self.u + self.p / (params.gamma - 1.0)
    }

    /// Total specific enthalpy `(E + p) / rho`.
    pub fn enthalpy(&self, params: &EulerParams) -> f64 {
        (self.total_energy(params) + self.p) / self.rho
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EulerParams {
    pub gamma: f64,
}

impl Default for EulerParams {
    fn default() -> Self {
        EulerParams { gamma: 1.4 }
    }
}

pub type EulerProblem = RiemannProblem<EulerParams>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerExactSolution {
    pub p_star: f64,
    pub u_star: f64,
    pub pattern: WavePattern,
    pub s_left: f64,
    pub s_right: f64,
}

impl From<StarSolution> for EulerExactSolution {
    fn from(s: StarSolution) -> Self {
        EulerExactSolution {
            p_star: s.star,
            u_star: s.u_star,
            pattern: s.pattern,
            s_left: s.s_left,
            s_right: s.s_right,
        }
    }
}

impl WaveSystem for EulerParams {
    type State = EulerState;

    const NAME: &'static str = "euler";
    const STAR_SYMBOL: &'static str = "p";
    const DRY_FRONT_FACTOR: Option<f64> = None;

    const FIELDS: &'static [&'static str] = &["rho", "u", "p"];

    fn validate(&self) -> Result<()> {
        if self.gamma > 1.0 && self.gamma.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!(
                "gamma must exceed 1, got {}",
                self.gamma
            )))
        }
    }

    fn validate_state(&self, s: &EulerState) -> Result<()> {
        let ok =
            s.rho > 0.0 && s.p > 0.0 && s.rho.is_finite() && s.p.is_finite() && s.u.is_finite();
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidState(format!(
                "need rho > 0, p > 0 and finite u, got rho={}, u={}, p={}",
                s.rho, s.u, s.p
            )))
        }
    }

    fn state_from_values(v: &[f64]) -> Result<EulerState> {
        expect_arity(v)?;
        Ok(EulerState::new(v[0], v[1], v[2]))
    }

    fn state_values(s: &EulerState) -> Vec<f64> {
        vec![s.rho, s.u, s.p]
    }

    fn star_var(s: &EulerState) -> f64 {
        s.p
    }

    fn velocity(s: &EulerState) -> f64 {
        s.u
    }

    fn mirror(s: &EulerState) -> EulerState {
        EulerState { u: -s.u, ..*s }
    }

    fn wave_speed(&self, s: &EulerState) -> f64 {
        (self.gamma * s.p / s.rho).sqrt()
    }

    fn wave_curve(&self, p: f64, s: &EulerState) -> (f64, f64) {
        let g = self.gamma;
        if p > s.p {
            let a = 2.0 / ((g + 1.0) * s.rho);
            let b = (g - 1.0) / (g + 1.0) * s.p;
            let root = (a / (p + b)).sqrt();
            ((p - s.p) * root, root * (1.0 - 0.5 * (p - s.p) / (p + b)))
        } else {
            let c = self.wave_speed(s);
            let ratio = p / s.p;
            let f = 2.0 * c / (g - 1.0) * (ratio.powf((g - 1.0) / (2.0 * g)) - 1.0);
            let df = ratio.powf(-(g + 1.0) / (2.0 * g)) / (s.rho * c);
            (f, df)
        }
    }

    fn shock_factor(&self, p: f64, s: &EulerState) -> f64 {
        let g = self.gamma;
        (1.0 + (g + 1.0) / (2.0 * g) * (p / s.p - 1.0)).sqrt()
    }

    fn escape_speed(&self, s: &EulerState) -> f64 {
        2.0 * self.wave_speed(s) / (self.gamma - 1.0)
    }

    fn two_rarefaction_raw(&self, l: &EulerState, r: &EulerState) -> f64 {
        let g = self.gamma;
        let z = (g - 1.0) / (2.0 * g);
        let (cl, cr) = (self.wave_speed(l), self.wave_speed(r));
        let num = cl + cr - 0.5 * (g - 1.0) * (r.u - l.u);
        let den = cl / l.p.powf(z) + cr / r.p.powf(z);
        (num / den).powf(1.0 / z)
    }

    fn domain_error(limit: f64, du: f64) -> Error {
        Error::VacuumData { limit, du }
    }

    fn tms_c_double_shock(&self, p: &EulerProblem) -> Result<(f64, f64)> {
        let x = p.two_rarefaction()?;
        let (l, r) = (p.left_wave(), p.right_wave());
        Ok((
            l.u - l.c * self.shock_factor(x, &p.left),
            r.u + r.c * self.shock_factor(x, &p.right),
        ))
    }

    fn supports(id: EstimatorId) -> bool {
        id != EstimatorId::TmsD
    }

    fn extra_estimate(&self, p: &EulerProblem, id: EstimatorId) -> Result<(f64, f64)> {
        let (l, r) = (&p.left, &p.right);
        let (cl, cr) = (self.wave_speed(l), self.wave_speed(r));
        let (wl, wr) = (l.rho.sqrt(), r.rho.sqrt());
        let u_roe = (wl * l.u + wr * r.u) / (wl + wr);
        match id {
            EstimatorId::Einfeldt => {
                let eta2 = 0.5 * wl * wr / ((wl + wr) * (wl + wr));
                let d2 = (wl * cl * cl + wr * cr * cr) / (wl + wr) + eta2 * (r.u - l.u).powi(2);
                let d = d2.sqrt();
                Ok((u_roe - d, u_roe + d))
            }
            EstimatorId::Batten => {
                let h_roe = (wl * l.enthalpy(self) + wr * r.enthalpy(self)) / (wl + wr);
                let c_roe = ((self.gamma - 1.0) * (h_roe - 0.5 * u_roe * u_roe)).sqrt();
                Ok(((l.u - cl).min(u_roe - c_roe), (r.u + cr).max(u_roe + c_roe)))
            }
            _ => Err(Error::UnsupportedEstimator {
                estimator: id.name(),
                system: Self::NAME,
            }),
        }
    }
}

fn expect_arity(v: &[f64]) -> Result<()> {
    if v.len() == 3 {
        Ok(())
    } else {
        Err(Error::InvalidState(format!(
            "expected 3 values (rho,u,p), got {}",
            v.len()
        )))
    }
}

pub fn problem(left: EulerState, right: EulerState, params: EulerParams) -> Result<EulerProblem> {
    RiemannProblem::new(left, right, params)
}

pub fn sound_speed(state: &EulerState, params: &EulerParams) -> f64 {
    params.wave_speed(state)
}

/// Pressure wave curve through one data state: shock branch above `p_K`,
/// rarefaction branch below.
pub fn f_side(p: f64, state: &EulerState, params: &EulerParams) -> f64 {
    params.wave_curve(p, state).0
}

pub fn pressure_function(p: f64, problem: &EulerProblem) -> f64 {
    problem.star_function(p)
}

pub fn two_rarefaction_pressure(problem: &EulerProblem) -> Result<f64> {
    problem.two_rarefaction()
}

/// Pressure positivity: `2(c_L + c_R)/(gamma - 1) > u_R - u_L`.
pub fn check_positivity(problem: &EulerProblem) -> bool {
    problem.is_admissible()
}

pub fn classify(problem: &EulerProblem) -> WavePattern {
    problem.classify()
}

pub fn solve_exact(problem: &EulerProblem) -> Result<EulerExactSolution> {
    problem.solve().map(Into::into)
}

pub fn q_factor(p: f64, state: &EulerState, params: &EulerParams) -> f64 {
    params.shock_factor(p, state)
}

pub fn estimate(problem: &EulerProblem, estimator: EstimatorId) -> Result<SpeedBounds> {
    problem.estimate(estimator)
}
