use crate::error::{Error, Result};
use crate::types::SpeedBounds;

/// Explicit time step `c_cfl * dx / S_max`, where `S_max` is the largest
/// speed magnitude over all interfaces.
pub fn courant_dt(speeds: &[SpeedBounds], dx: f64, c_cfl: f64) -> Result<f64> {
    if !(dx > 0.0 && dx.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "dx must be positive, got {dx}"
        )));
    }
    if !(c_cfl > 0.0 && c_cfl <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "Courant number must lie in (0, 1], got {c_cfl}"
        )));
    }
    if speeds.is_empty() {
        return Err(Error::InvalidArgument("no wave speeds given".into()));
    }
    let mut s_max = 0.0_f64;
    for s in speeds {
        let m = s.max_abs();
        if !m.is_finite() {
            return Err(Error::InvalidArgument(format!("non-finite wave speed {m}")));
        }
        s_max = s_max.max(m);
    }
    if s_max == 0.0 {
        return Err(Error::ZeroMaxSpeed);
    }
    Ok(c_cfl * dx / s_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::EstimatorId;

    fn pair(l: f64, r: f64) -> SpeedBounds {
        SpeedBounds {
            s_left: l,
            s_right: r,
            estimator: EstimatorId::TmsB,
            pattern: None,
        }
    }

    #[test]
    fn single_pair() {
        assert_eq!(courant_dt(&[pair(-1.0, 1.0)], 1.0, 1.0).unwrap(), 1.0);
    }

    #[test]
    fn picks_the_fastest_interface() {
        let dt = courant_dt(&[pair(-2.0, 1.0), pair(-1.0, 3.0)], 0.5, 0.9).unwrap();
        assert!((dt - 0.15).abs() < 1e-15);
    }

    #[test]
    fn strong_shock_pair() {
        let dt = courant_dt(&[pair(-33.0886, 37.4166)], 1.0, 1.0).unwrap();
        assert!((dt - 0.026726).abs() < 5e-7);
    }

    #[test]
    fn static_data_has_no_time_step() {
        assert_eq!(
            courant_dt(&[pair(0.0, 0.0)], 1.0, 0.5),
            Err(Error::ZeroMaxSpeed)
        );
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(courant_dt(&[], 1.0, 0.5).is_err());
        assert!(courant_dt(&[pair(-1.0, 1.0)], 0.0, 0.5).is_err());
        assert!(courant_dt(&[pair(-1.0, 1.0)], 1.0, 1.5).is_err());
        assert!(courant_dt(&[pair(-1.0, 1.0)], 1.0, 0.0).is_err());
    }

    #[test]
    fn homogeneous_in_speed() {
        let base = [pair(-2.0, 1.5), pair(-0.3, 0.7)];
        let dt = courant_dt(&base, 0.1, 0.8).unwrap();
        for k in [0.5, 3.0, 1e3] {
            let scaled: Vec<_> = base
                .iter()
                .map(|s| pair(k * s.s_left, k * s.s_right))
                .collect();
            let dtk = courant_dt(&scaled, 0.1, 0.8).unwrap();
            assert!((dtk * k - dt).abs() <= 1e-14 * dt);
        }
    }
}
