//! Recomputes the reference tables and compares cell by cell.

use serde::Serialize;

use crate::bloodflow::BfeParams;
use crate::check::{encloses, Side};
use crate::error::Result;
use crate::euler::EulerParams;
use crate::fixtures::{ic_table, speed_table, IcRow, SpeedRow, SystemKind, TableKind};
use crate::shallow::SweParams;
use crate::system::{RiemannProblem, WaveSystem};
use crate::types::EstimatorId;

/// Speed cells must agree to `max(1e-3, 1e-6 |value|)`.
pub fn speed_tolerance(value: f64) -> f64 {
    1e-3_f64.max(1e-6 * value.abs())
}

/// One unit in the last printed decimal.
pub fn star_tolerance(decimals: u32) -> f64 {
    10f64.powi(-(decimals as i32))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellOutcome {
    pub test: u32,
    pub column: String,
    pub reference: String,
    pub computed: Option<String>,
    /// Absolute deviation for numeric cells.
    pub deviation: Option<f64>,
    pub tolerance: f64,
    pub matches: bool,
    /// Printed as a failed bound.
    pub flagged: bool,
    /// Checker verdict on the computed value (speed tables, non-exact
    /// columns only).
    pub violates_bound: Option<bool>,
    pub skipped: Option<String>,
}

impl CellOutcome {
    fn numeric(test: u32, column: &str, reference: (&str, f64), computed: f64, tol: f64) -> Self {
        let dev = (computed - reference.1).abs();
        CellOutcome {
            test,
            column: column.to_string(),
            reference: reference.0.to_string(),
            computed: Some(computed.to_string()),
            deviation: Some(dev),
            tolerance: tol,
            matches: dev <= tol,
            flagged: false,
            violates_bound: None,
            skipped: None,
        }
    }

    fn skipped(test: u32, column: &str, reference: &str, reason: &str) -> Self {
        CellOutcome {
            test,
            column: column.to_string(),
            reference: reference.to_string(),
            computed: None,
            deviation: None,
            tolerance: 0.0,
            matches: true,
            flagged: false,
            violates_bound: None,
            skipped: Some(reason.to_string()),
        }
    }

    fn failed(test: u32, column: &str, reference: &str, err: String) -> Self {
        CellOutcome {
            computed: Some(format!("error: {err}")),
            matches: false,
            skipped: None,
            ..Self::skipped(test, column, reference, "")
        }
    }

    pub fn is_checked(&self) -> bool {
        self.skipped.is_none()
    }

    pub fn computed_value(&self) -> Option<f64> {
        self.computed.as_deref().and_then(|s| s.parse().ok())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reproduction {
    pub system: SystemKind,
    pub table: TableKind,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<CellOutcome>>,
}

impl Reproduction {
    pub fn cells(&self) -> impl Iterator<Item = &CellOutcome> {
        self.rows.iter().flatten()
    }

    pub fn max_deviation(&self) -> f64 {
        self.cells()
            .filter(|c| c.is_checked())
            .filter_map(|c| c.deviation)
            .fold(0.0, f64::max)
    }

    pub fn mismatches(&self) -> Vec<&CellOutcome> {
        self.cells()
            .filter(|c| c.is_checked() && !c.matches)
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.mismatches().is_empty()
    }
}

pub fn reproduce(system: SystemKind, table: TableKind) -> Result<Reproduction> {
    match system {
        SystemKind::Euler => reproduce_with(EulerParams::default(), system, table),
        SystemKind::Swe => reproduce_with(SweParams::default(), system, table),
        SystemKind::Bfe => reproduce_with(BfeParams::default(), system, table),
    }
}

fn problem_for<S: WaveSystem>(params: S, row: &IcRow) -> Result<RiemannProblem<S>> {
    RiemannProblem::new(
        S::state_from_values(&row.left)?,
        S::state_from_values(&row.right)?,
        params,
    )
}

fn reproduce_with<S: WaveSystem>(
    params: S,
    system: SystemKind,
    table: TableKind,
) -> Result<Reproduction> {
    let ic = ic_table(system)?;
    match table.side() {
        None => {
            let columns = vec![
                S::STAR_SYMBOL.to_string(),
                "u".to_string(),
                "pattern".to_string(),
            ];
            let rows = ic
                .iter()
                .map(|row| ic_row(params, row))
                .collect::<Result<Vec<_>>>()?;
            Ok(Reproduction {
                system,
                table,
                columns,
                rows,
            })
        }
        Some(side) => {
            let speeds = speed_table(system, side)?;
            let columns = speeds[0].cells.iter().map(|c| c.column.clone()).collect();
            let rows = ic
                .iter()
                .zip(&speeds)
                .map(|(row, sp)| speed_row(params, row, sp, side))
                .collect::<Result<Vec<_>>>()?;
            Ok(Reproduction {
                system,
                table,
                columns,
                rows,
            })
        }
    }
}

fn ic_row<S: WaveSystem>(params: S, row: &IcRow) -> Result<Vec<CellOutcome>> {
    let p = problem_for(params, row)?;
    let t = row.test;
    let mut cells = match p.solve() {
        Ok(s) => vec![
            CellOutcome::numeric(
                t,
                S::STAR_SYMBOL,
                (&row.star_text, row.star),
                s.star,
                star_tolerance(row.star_dp),
            ),
            CellOutcome::numeric(
                t,
                "u",
                (&row.u_star_text, row.u_star),
                s.u_star,
                star_tolerance(row.u_dp),
            ),
            CellOutcome {
                computed: Some(s.pattern.to_string()),
                matches: s.pattern == row.pattern,
                skipped: None,
                ..CellOutcome::skipped(t, "pattern", row.pattern.as_str(), "")
            },
        ],
        Err(e) => vec![
            CellOutcome::failed(t, S::STAR_SYMBOL, &row.star_text, e.to_string()),
            CellOutcome::failed(t, "u", &row.u_star_text, e.to_string()),
            CellOutcome::failed(t, "pattern", row.pattern.as_str(), e.to_string()),
        ],
    };
    if let Some(reason) = &row.skip {
        // star columns of this row are not usable as a reference
        for c in cells.iter_mut().take(2) {
            c.skipped = Some(reason.clone());
        }
    }
    Ok(cells)
}

fn speed_row<S: WaveSystem>(
    params: S,
    row: &IcRow,
    speeds: &SpeedRow,
    side: Side,
) -> Result<Vec<CellOutcome>> {
    let p = problem_for(params, row)?;
    let pick = |l: f64, r: f64| if side == Side::Left { l } else { r };
    let exact = p.solve().map(|s| pick(s.s_left, s.s_right));
    let scale = p.speed_scale();
    let t = speeds.test;
    let mut out = Vec::new();
    for cell in &speeds.cells {
        let Some(id) = cell.estimator else {
            out.push(CellOutcome {
                flagged: cell.flagged,
                ..CellOutcome::skipped(t, &cell.column, &cell.text, "estimator not implemented")
            });
            continue;
        };
        let outcome = match p.estimate(id) {
            Ok(b) => {
                let v = pick(b.s_left, b.s_right);
                let mut c = CellOutcome::numeric(
                    t,
                    &cell.column,
                    (&cell.text, cell.value),
                    v,
                    speed_tolerance(cell.value),
                );
                c.flagged = cell.flagged;
                if id != EstimatorId::Exact {
                    c.violates_bound = exact.as_ref().ok().map(|&ex| !encloses(side, v, ex, scale));
                }
                c
            }
            Err(e) => CellOutcome {
                flagged: cell.flagged,
                ..CellOutcome::failed(t, &cell.column, &cell.text, e.to_string())
            },
        };
        out.push(outcome);
    }
    Ok(out)
}
