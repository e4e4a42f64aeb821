use serde::Serialize;

use crate::types::SpeedBounds;

/// Relative slack granted to a bound before it counts as violated.
pub const BOUND_REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// Whether one estimated speed encloses the exact one: the left estimate
/// must not exceed the exact left speed, the right estimate must not fall
/// below the exact right speed. `scale` sets the absolute size of the slack.
pub fn encloses(side: Side, estimate: f64, exact: f64, scale: f64) -> bool {
    let slack = BOUND_REL_TOL * scale.max(exact.abs());
    match side {
        Side::Left => estimate <= exact + slack,
        Side::Right => estimate >= exact - slack,
    }
}

/// Sides on which `estimate` fails to bound `exact`.
pub fn violated_sides(estimate: &SpeedBounds, exact: &SpeedBounds, scale: f64) -> Vec<Side> {
    let mut out = Vec::new();
    if !encloses(Side::Left, estimate.s_left, exact.s_left, scale) {
        out.push(Side::Left);
    }
    if !encloses(Side::Right, estimate.s_right, exact.s_right, scale) {
        out.push(Side::Right);
    }
    out
}
