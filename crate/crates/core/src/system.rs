use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{
    find_root_newton, interpolate_root, RootBracket, DEFAULT_MAX_ITER, DEFAULT_REL_TOL,
};
use crate::types::{EstimatorId, SpeedBounds, WavePattern};

/// A hyperbolic system whose Riemann problem reduces to one scalar equation
/// `f_L(x) + f_R(x) + (u_R - u_L) = 0` in a star variable `x` (pressure,
/// depth or area). Implemented by the parameter types, so a value of the
/// system carries its physical constants.
pub trait WaveSystem: Copy + fmt::Debug + PartialEq + Send + Sync + Serialize + 'static {
    type State: Copy + fmt::Debug + PartialEq + Send + Sync + Serialize;

    const NAME: &'static str;
    /// Symbol of the star variable in printed output.
    const STAR_SYMBOL: &'static str;
    /// Factor multiplying the outer celerity in the dry-front speed used by
    /// TMS_d, when the system has one.
    const DRY_FRONT_FACTOR: Option<f64>;

    /// Names of the primitive variables, in input order.
    const FIELDS: &'static [&'static str];

    fn validate(&self) -> Result<()>;
    fn validate_state(&self, s: &Self::State) -> Result<()>;

    /// Builds a state from its primitive variables in `FIELDS` order.
    fn state_from_values(v: &[f64]) -> Result<Self::State>;
    fn state_values(s: &Self::State) -> Vec<f64>;

    fn star_var(s: &Self::State) -> f64;
    fn velocity(s: &Self::State) -> f64;
    fn mirror(s: &Self::State) -> Self::State;

    /// Characteristic speed `c` of a state (sound speed, celerity, ...).
    fn wave_speed(&self, s: &Self::State) -> f64;

    /// Wave curve `f_K(x)` through state `s` and its derivative.
    fn wave_curve(&self, x: f64, s: &Self::State) -> (f64, f64);

    /// Shock-speed multiplier `q` so that a shock moves at `u_K -/+ c_K q`.
    fn shock_factor(&self, x: f64, s: &Self::State) -> f64;

    /// `-f_K(0)`: the velocity jump a rarefaction can produce before the
    /// star variable reaches zero.
    fn escape_speed(&self, s: &Self::State) -> f64;

    /// Closed-form star value when both waves are rarefactions. Only
    /// meaningful for admissible data.
    fn two_rarefaction_raw(&self, left: &Self::State, right: &Self::State) -> f64;

    /// Error raised when the escape-speed condition fails.
    fn domain_error(limit: f64, du: f64) -> Error;

    /// TMS_c double-shock pair.
    fn tms_c_double_shock(&self, p: &RiemannProblem<Self>) -> Result<(f64, f64)> {
        let (l, r) = (p.left_wave(), p.right_wave());
        Ok((r.u - r.c, l.u + l.c))
    }

    fn supports(id: EstimatorId) -> bool {
        match id {
            EstimatorId::Einfeldt | EstimatorId::Batten => false,
            EstimatorId::TmsD => Self::DRY_FRONT_FACTOR.is_some(),
            _ => true,
        }
    }

    /// Estimators that exist only for this system.
    fn extra_estimate(&self, _p: &RiemannProblem<Self>, id: EstimatorId) -> Result<(f64, f64)> {
        Err(Error::UnsupportedEstimator {
            estimator: id.name(),
            system: Self::NAME,
        })
    }
}

/// Left and right data plus the system constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiemannProblem<S: WaveSystem> {
    pub left: S::State,
    pub right: S::State,
    pub params: S,
}

/// Velocity and characteristic speed of one side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideWave {
    pub x: f64,
    pub u: f64,
    pub c: f64,
}

/// Exact star state and extreme wave speeds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StarSolution {
    pub star: f64,
    pub u_star: f64,
    pub pattern: WavePattern,
    pub s_left: f64,
    pub s_right: f64,
}

/// Wave-curve values at the two data points, and the resulting pattern.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Diagnosis {
    pub pattern: WavePattern,
    pub x_min: f64,
    pub f_min: f64,
    pub x_max: f64,
    pub f_max: f64,
}

impl<S: WaveSystem> RiemannProblem<S> {
    pub fn new(left: S::State, right: S::State, params: S) -> Result<Self> {
        params.validate()?;
        params.validate_state(&left)?;
        params.validate_state(&right)?;
        Ok(RiemannProblem {
            left,
            right,
            params,
        })
    }

    /// Reflection `x -> -x`: sides swap and velocities change sign.
    pub fn mirrored(&self) -> Self {
        RiemannProblem {
            left: S::mirror(&self.right),
            right: S::mirror(&self.left),
            params: self.params,
        }
    }

    pub fn left_wave(&self) -> SideWave {
        self.side(&self.left)
    }

    pub fn right_wave(&self) -> SideWave {
        self.side(&self.right)
    }

    fn side(&self, s: &S::State) -> SideWave {
        SideWave {
            x: S::star_var(s),
            u: S::velocity(s),
            c: self.params.wave_speed(s),
        }
    }

    /// Largest characteristic speed magnitude in the data; the natural
    /// scale for comparing wave speeds of this problem.
    pub fn speed_scale(&self) -> f64 {
        let (l, r) = (self.left_wave(), self.right_wave());
        (l.u.abs() + l.c).max(r.u.abs() + r.c)
    }

    pub fn delta_u(&self) -> f64 {
        S::velocity(&self.right) - S::velocity(&self.left)
    }

    /// Escape-speed condition; false means the data open a vacuum (or a
    /// dry bed, or a collapsed vessel).
    pub fn is_admissible(&self) -> bool {
        self.escape_limit() > self.delta_u()
    }

    fn escape_limit(&self) -> f64 {
        self.params.escape_speed(&self.left) + self.params.escape_speed(&self.right)
    }

    pub fn check_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(S::domain_error(self.escape_limit(), self.delta_u()))
        }
    }

    pub fn star_function(&self, x: f64) -> f64 {
        self.star_function_with_derivative(x).0
    }

    pub fn star_function_with_derivative(&self, x: f64) -> (f64, f64) {
        let (fl, dl) = self.params.wave_curve(x, &self.left);
        let (fr, dr) = self.params.wave_curve(x, &self.right);
        (fl + fr + self.delta_u(), dl + dr)
    }

    pub fn two_rarefaction(&self) -> Result<f64> {
        self.check_admissible()?;
        if self.left == self.right {
            return Ok(S::star_var(&self.left));
        }
        Ok(self.params.two_rarefaction_raw(&self.left, &self.right))
    }

    pub fn diagnose(&self) -> Result<Diagnosis> {
        self.check_admissible()?;
        let (xl, xr) = (S::star_var(&self.left), S::star_var(&self.right));
        // ties resolve to (x_min, x_max) = (x_R, x_L)
        let (x_min, x_max) = if xl < xr { (xl, xr) } else { (xr, xl) };
        let f_min = self.star_function(x_min);
        let f_max = self.star_function(x_max);
        let pattern = if f_min >= 0.0 {
            WavePattern::RR
        } else if f_max < 0.0 {
            WavePattern::SS
        } else if xl < xr {
            WavePattern::SR
        } else {
            WavePattern::RS
        };
        Ok(Diagnosis {
            pattern,
            x_min,
            f_min,
            x_max,
            f_max,
        })
    }

    /// Wave pattern from the signs of the star function at the data.
    pub fn classify(&self) -> WavePattern {
        self.diagnose()
            .map(|d| d.pattern)
            .unwrap_or(WavePattern::Vacuum)
    }

    /// Star velocity once the star value is known.
    pub fn star_velocity(&self, x: f64) -> f64 {
        let fl = self.params.wave_curve(x, &self.left).0;
        let fr = self.params.wave_curve(x, &self.right).0;
        0.5 * (S::velocity(&self.left) + S::velocity(&self.right)) + 0.5 * (fr - fl)
    }

    pub fn solve(&self) -> Result<StarSolution> {
        self.solve_with(DEFAULT_REL_TOL, DEFAULT_MAX_ITER)
    }

    pub fn solve_with(&self, rel_tol: f64, max_iter: usize) -> Result<StarSolution> {
        let pattern = self.diagnose()?.pattern;
        // with two rarefactions the closed form is the exact root
        let star = if pattern == WavePattern::RR {
            self.two_rarefaction()?
        } else {
            self.star_root(rel_tol, max_iter)?
        };
        let (l, r) = (self.left_wave(), self.right_wave());
        let s_left = if star > l.x {
            l.u - l.c * self.params.shock_factor(star, &self.left)
        } else {
            l.u - l.c
        };
        let s_right = if star > r.x {
            r.u + r.c * self.params.shock_factor(star, &self.right)
        } else {
            r.u + r.c
        };
        Ok(StarSolution {
            star,
            u_star: self.star_velocity(star),
            pattern,
            s_left,
            s_right,
        })
    }

    fn star_root(&self, rel_tol: f64, max_iter: usize) -> Result<f64> {
        let f = |x: f64| self.star_function(x);
        // The two-rarefaction value bounds the root from above; rounding can
        // leave it a hair short, so widen until the sign is right.
        let mut hi = self.two_rarefaction()?;
        let mut f_hi = f(hi);
        let mut widen = 0;
        while f_hi < 0.0 {
            widen += 1;
            if widen > 64 || !f_hi.is_finite() {
                return Err(Error::NoConvergence { max_iter, last: hi });
            }
            hi *= 2.0;
            f_hi = f(hi);
        }
        if f_hi == 0.0 {
            return Ok(hi);
        }
        let mut lo = hi * 1e-6;
        let mut f_lo = f(lo);
        let mut shrink = 0;
        while f_lo > 0.0 {
            shrink += 1;
            lo = if shrink > 48 { 0.0 } else { lo * 1e-6 };
            f_lo = f(lo);
            if lo == 0.0 {
                break;
            }
        }
        if f_lo == 0.0 {
            return Ok(lo);
        }
        let bracket = RootBracket::new(lo, hi, f_lo, f_hi)?;
        find_root_newton(
            |x| self.star_function_with_derivative(x),
            &bracket,
            hi,
            rel_tol,
            max_iter,
        )
    }

    pub fn estimate(&self, id: EstimatorId) -> Result<SpeedBounds> {
        if !S::supports(id) {
            return Err(Error::UnsupportedEstimator {
                estimator: id.name(),
                system: S::NAME,
            });
        }
        let d = self.diagnose()?;
        let (s_left, s_right) = match id {
            EstimatorId::Exact => {
                let s = self.solve()?;
                (s.s_left, s.s_right)
            }
            EstimatorId::DavisA => {
                let (l, r) = (self.left_wave(), self.right_wave());
                (l.u - l.c, r.u + r.c)
            }
            EstimatorId::DavisB => {
                let (l, r) = (self.left_wave(), self.right_wave());
                ((l.u - l.c).min(r.u - r.c), (l.u + l.c).max(r.u + r.c))
            }
            EstimatorId::Toro => self.toro()?,
            EstimatorId::TmsA | EstimatorId::TmsB | EstimatorId::TmsC => self.tms(id, &d)?,
            EstimatorId::TmsD => self.tms_d()?,
            EstimatorId::Einfeldt | EstimatorId::Batten => self.params.extra_estimate(self, id)?,
        };
        Ok(SpeedBounds {
            s_left,
            s_right,
            estimator: id,
            pattern: Some(d.pattern),
        })
    }

    /// Speeds from one star estimate, using shock factors on the shock
    /// sides of `pattern` and characteristic speeds elsewhere.
    fn speeds_at(&self, x: f64, pattern: WavePattern) -> (f64, f64) {
        let (l, r) = (self.left_wave(), self.right_wave());
        let s_left = if pattern.left_is_shock() {
            l.u - l.c * self.params.shock_factor(x, &self.left)
        } else {
            l.u - l.c
        };
        let s_right = if pattern.right_is_shock() {
            r.u + r.c * self.params.shock_factor(x, &self.right)
        } else {
            r.u + r.c
        };
        (s_left, s_right)
    }

    fn toro(&self) -> Result<(f64, f64)> {
        let x = self.two_rarefaction()?;
        let (l, r) = (self.left_wave(), self.right_wave());
        let ql = if x > l.x {
            self.params.shock_factor(x, &self.left)
        } else {
            1.0
        };
        let qr = if x > r.x {
            self.params.shock_factor(x, &self.right)
        } else {
            1.0
        };
        Ok((l.u - l.c * ql, r.u + r.c * qr))
    }

    fn rr_point(&self) -> Result<(f64, f64)> {
        let x = self.two_rarefaction()?;
        Ok((x, self.star_function(x)))
    }

    /// Chord root; if the two points coincide in value the upper one is
    /// used, which is still an upper bound for the star value.
    fn chord(&self, lower: (f64, f64), upper: (f64, f64)) -> Result<f64> {
        match interpolate_root(lower, upper) {
            Ok(x) => Ok(x),
            Err(Error::DegeneratePoints { .. }) => Ok(upper.0),
            Err(e) => Err(e),
        }
    }

    fn tms(&self, id: EstimatorId, d: &Diagnosis) -> Result<(f64, f64)> {
        let pattern = d.pattern;
        if pattern == WavePattern::RR {
            let (l, r) = (self.left_wave(), self.right_wave());
            return Ok((l.u - l.c, r.u + r.c));
        }
        let p_min = (d.x_min, d.f_min);
        let p_max = (d.x_max, d.f_max);
        let x = match (id, pattern) {
            (EstimatorId::TmsA, WavePattern::SS) => self.chord(p_max, self.rr_point()?)?,
            (EstimatorId::TmsA, _) => self.chord(p_min, p_max)?,
            (EstimatorId::TmsB, _) => self.chord(p_min, self.rr_point()?)?,
            (_, WavePattern::SS) => return self.params.tms_c_double_shock(self),
            // TMS_c mixed cases: the shock side is evaluated at the other
            // side's data value, which exceeds the star value.
            (_, WavePattern::RS) => S::star_var(&self.left),
            (_, _) => S::star_var(&self.right),
        };
        Ok(self.speeds_at(x, pattern))
    }

    fn tms_d(&self) -> Result<(f64, f64)> {
        let alpha = S::DRY_FRONT_FACTOR.ok_or(Error::UnsupportedEstimator {
            estimator: EstimatorId::TmsD.name(),
            system: S::NAME,
        })?;
        let (l, r) = (self.left_wave(), self.right_wave());
        Ok((
            (l.u - l.c).min(r.u - alpha * r.c),
            (r.u + r.c).max(l.u + alpha * l.c),
        ))
    }
}
