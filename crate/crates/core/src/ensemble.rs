//! Reproducible random Riemann problems and the bound-property sweep run
//! over them.
//!
//! Trial `i` of seed `s` always draws from ChaCha8 stream `i` of key `s`,
//! so results do not depend on how trials are split across threads.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bloodflow::{BfeParams, BfeState};
use crate::check::{encloses, Side};
use crate::error::{Error, Result};
use crate::euler::{EulerParams, EulerState};
use crate::shallow::{SweParams, SweState};
use crate::system::{RiemannProblem, WaveSystem};
use crate::types::EstimatorId;

/// A system with a reference distribution of Riemann data.
pub trait Sampler: WaveSystem {
    fn sample_state<R: Rng>(&self, rng: &mut R) -> Self::State;
}

fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

impl Sampler for EulerParams {
    fn sample_state<R: Rng>(&self, rng: &mut R) -> EulerState {
        let rho = log_uniform(rng, 1e-3, 1e3);
        let u = rng.gen_range(-100.0..100.0);
        let p = log_uniform(rng, 1e-3, 1e3);
        EulerState::new(rho, u, p)
    }
}

impl Sampler for SweParams {
    fn sample_state<R: Rng>(&self, rng: &mut R) -> SweState {
        let h = log_uniform(rng, 1e-3, 1e2);
        SweState::new(h, rng.gen_range(-20.0..20.0))
    }
}

impl Sampler for BfeParams {
    fn sample_state<R: Rng>(&self, rng: &mut R) -> BfeState {
        let a = log_uniform(rng, 1e-2, 10.0);
        BfeState::new(a, rng.gen_range(-300.0..300.0))
    }
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Problem number `trial` of the ensemble keyed by `seed`. Inadmissible
/// draws (vacuum, dry bed, collapse) are discarded and redrawn.
pub fn draw<S: Sampler>(params: S, seed: u64, trial: u64) -> RiemannProblem<S> {
    let mut rng = trial_rng(seed, trial);
    loop {
        let left = params.sample_state(&mut rng);
        let right = params.sample_state(&mut rng);
        let p = RiemannProblem {
            left,
            right,
            params,
        };
        if p.is_admissible() {
            return p;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub trial: u64,
    pub left: Vec<f64>,
    pub right: Vec<f64>,
    pub estimator: EstimatorId,
    pub side: Side,
    pub estimate: f64,
    pub exact: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzReport {
    pub system: &'static str,
    pub trials: u64,
    pub seed: u64,
    pub violations: Vec<Violation>,
    /// Trials on which the solver or an estimator returned an error.
    pub failures: Vec<(u64, String)>,
}

impl FuzzReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.failures.is_empty()
    }
}

type TrialOutcome = (Vec<Violation>, Option<(u64, String)>);

/// Checks every bounding estimator the system supports against the exact
/// speeds on `count` random problems.
pub fn fuzz<S: Sampler>(params: S, count: u64, seed: u64) -> Result<FuzzReport> {
    if count == 0 {
        return Err(Error::InvalidArgument(
            "trial count must be positive".into(),
        ));
    }
    let estimators: Vec<EstimatorId> = EstimatorId::BOUNDING
        .iter()
        .copied()
        .filter(|&id| S::supports(id))
        .collect();

    let per_trial: Vec<TrialOutcome> = (0..count)
        .into_par_iter()
        .map(|trial| {
            let p = draw(params, seed, trial);
            match check_trial(&p, trial, &estimators) {
                Ok(v) => (v, None),
                Err(e) => (Vec::new(), Some((trial, e.to_string()))),
            }
        })
        .collect();

    let mut violations = Vec::new();
    let mut failures = Vec::new();
    for (v, f) in per_trial {
        violations.extend(v);
        failures.extend(f);
    }
    Ok(FuzzReport {
        system: S::NAME,
        trials: count,
        seed,
        violations,
        failures,
    })
}

fn check_trial<S: WaveSystem>(
    p: &RiemannProblem<S>,
    trial: u64,
    estimators: &[EstimatorId],
) -> Result<Vec<Violation>> {
    let exact = p.solve()?;
    let scale = p.speed_scale();
    let mut out = Vec::new();
    for &id in estimators {
        let b = p.estimate(id)?;
        for (side, estimate, ex) in [
            (Side::Left, b.s_left, exact.s_left),
            (Side::Right, b.s_right, exact.s_right),
        ] {
            if !encloses(side, estimate, ex, scale) {
                out.push(Violation {
                    trial,
                    left: S::state_values(&p.left),
                    right: S::state_values(&p.right),
                    estimator: id,
                    side,
                    estimate,
                    exact: ex,
                });
            }
        }
    }
    Ok(out)
}
