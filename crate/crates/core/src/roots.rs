use crate::error::{Error, Result};

pub const DEFAULT_REL_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 100;

/// An interval known to contain a sign change of some function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl RootBracket {
    pub fn new(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        let finite = lo.is_finite() && hi.is_finite() && f_lo.is_finite() && f_hi.is_finite();
        let straddles = f_lo == 0.0 || f_hi == 0.0 || (f_lo < 0.0) != (f_hi < 0.0);
        if !finite || lo >= hi || !straddles {
            return Err(Error::InvalidBracket { lo, hi });
        }
        Ok(RootBracket { lo, hi, f_lo, f_hi })
    }

    /// Evaluates `f` at both ends.
    pub fn from_fn<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64) -> Result<Self> {
        let (f_lo, f_hi) = (f(lo), f(hi));
        Self::new(lo, hi, f_lo, f_hi)
    }

    fn scale(&self) -> f64 {
        self.f_lo.abs().max(self.f_hi.abs())
    }
}

/// Root of a scalar function inside `bracket`. Steps are secant steps
/// safeguarded by bisection, so no derivative is needed.
pub fn find_root<F>(mut f: F, bracket: &RootBracket, rel_tol: f64, max_iter: usize) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let x0 = 0.5 * (bracket.lo + bracket.hi);
    safeguarded(|x| (f(x), None), bracket, x0, rel_tol, max_iter)
}

/// Guarded Newton iteration started at `x0`. `f` returns the value and the
/// derivative; any iterate that would leave the current bracket, or that
/// fails to halve the previous step, is replaced by a bisection.
pub fn find_root_newton<F>(
    mut f: F,
    bracket: &RootBracket,
    x0: f64,
    rel_tol: f64,
    max_iter: usize,
) -> Result<f64>
where
    F: FnMut(f64) -> (f64, f64),
{
    safeguarded(
        |x| {
            let (v, d) = f(x);
            (v, Some(d))
        },
        bracket,
        x0,
        rel_tol,
        max_iter,
    )
}

fn midpoint(a: f64, b: f64) -> f64 {
    // Wave-curve roots can sit many decades below the upper end of the
    // bracket; a geometric midpoint finds them in a handful of steps.
    if a > 0.0 && b > 1e3 * a {
        (a * b).sqrt()
    } else if b < 0.0 && a < 1e3 * b {
        -(a * b).sqrt()
    } else {
        0.5 * (a + b)
    }
}

fn safeguarded<F>(
    mut eval: F,
    bracket: &RootBracket,
    x0: f64,
    rel_tol: f64,
    max_iter: usize,
) -> Result<f64>
where
    F: FnMut(f64) -> (f64, Option<f64>),
{
    if !(rel_tol > 0.0 && rel_tol.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "rel_tol must be positive, got {rel_tol}"
        )));
    }
    let b = RootBracket::new(bracket.lo, bracket.hi, bracket.f_lo, bracket.f_hi)?;
    if b.f_lo == 0.0 {
        return Ok(b.lo);
    }
    if b.f_hi == 0.0 {
        return Ok(b.hi);
    }
    let tol_f = rel_tol * b.scale();
    let (mut neg, mut f_neg, mut pos, mut f_pos) = if b.f_lo < 0.0 {
        (b.lo, b.f_lo, b.hi, b.f_hi)
    } else {
        (b.hi, b.f_hi, b.lo, b.f_lo)
    };

    let mut x = if x0 > b.lo && x0 < b.hi {
        x0
    } else {
        midpoint(b.lo, b.hi)
    };
    let mut prev: Option<(f64, f64)> = None;
    let mut step = b.hi - b.lo;
    let mut step_old = step;

    for _ in 0..max_iter {
        let (fx, dfx) = eval(x);
        let (lo, hi) = if neg < pos { (neg, pos) } else { (pos, neg) };
        if !fx.is_finite() {
            prev = None;
            x = midpoint(lo, hi);
            continue;
        }
        // With a derivative the step-size test below is sharper than a
        // residual test, which can stop early on steep curves.
        if fx == 0.0 || (dfx.is_none() && fx.abs() <= tol_f) {
            return Ok(x);
        }
        if fx < 0.0 {
            neg = x;
            f_neg = fx;
        } else {
            pos = x;
            f_pos = fx;
        }
        let (lo, hi) = if neg < pos { (neg, pos) } else { (pos, neg) };
        if hi - lo <= rel_tol * x.abs() {
            return Ok(x);
        }

        let slope = match (dfx, prev) {
            (Some(d), _) => d,
            (None, Some((xp, fp))) if xp != x => (fx - fp) / (x - xp),
            _ => (f_pos - f_neg) / (pos - neg),
        };
        let newton = x - fx / slope;
        let bisect = !(slope.is_finite() && slope != 0.0)
            || !(newton > lo && newton < hi)
            || (2.0 * fx).abs() > (step_old * slope).abs();
        step_old = step;
        let next = if bisect { midpoint(lo, hi) } else { newton };
        step = next - x;
        prev = Some((x, fx));
        if !bisect && step.abs() <= rel_tol * next.abs() {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::NoConvergence { max_iter, last: x })
}

/// Root of the chord through `p1 = (x1, f1)` and `p2 = (x2, f2)`. Returns
/// `x1` untouched when `f1 == 0`.
pub fn interpolate_root(p1: (f64, f64), p2: (f64, f64)) -> Result<f64> {
    let ((x1, f1), (x2, f2)) = (p1, p2);
    if f1 == 0.0 {
        return Ok(x1);
    }
    if x1 == x2 || f1 == f2 {
        return Err(Error::DegeneratePoints { x1, x2, f1, f2 });
    }
    Ok(x1 - (x2 - x1) / (f2 - f1) * f1)
}
