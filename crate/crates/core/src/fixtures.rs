//! Reference tables shipped with the crate: star states of every test
//! problem, and the slowest/fastest wave speeds produced by each estimator.
//!
//! Speed tables are stored wide, one column per estimator, exactly as
//! printed. A trailing `*` marks a cell printed as a failed bound.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::check::Side;
use crate::error::{Error, Result};
use crate::types::{EstimatorId, WavePattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemKind {
    Euler,
    Swe,
    Bfe,
}

impl SystemKind {
    pub const ALL: [SystemKind; 3] = [SystemKind::Euler, SystemKind::Swe, SystemKind::Bfe];

    pub fn name(self) -> &'static str {
        match self {
            SystemKind::Euler => "euler",
            SystemKind::Swe => "swe",
            SystemKind::Bfe => "bfe",
        }
    }
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SystemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euler" => Ok(SystemKind::Euler),
            "swe" => Ok(SystemKind::Swe),
            "bfe" => Ok(SystemKind::Bfe),
            _ => Err(Error::InvalidArgument(format!("unknown system '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    Ic,
    SLeft,
    SRight,
}

impl TableKind {
    pub const ALL: [TableKind; 3] = [TableKind::Ic, TableKind::SLeft, TableKind::SRight];

    pub fn name(self) -> &'static str {
        match self {
            TableKind::Ic => "ic",
            TableKind::SLeft => "s_left",
            TableKind::SRight => "s_right",
        }
    }

    pub fn side(self) -> Option<Side> {
        match self {
            TableKind::Ic => None,
            TableKind::SLeft => Some(Side::Left),
            TableKind::SRight => Some(Side::Right),
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ic" => Ok(TableKind::Ic),
            "s_left" => Ok(TableKind::SLeft),
            "s_right" => Ok(TableKind::SRight),
            _ => Err(Error::InvalidArgument(format!("unknown table '{s}'"))),
        }
    }
}

fn source(system: SystemKind, table: TableKind) -> &'static str {
    use SystemKind::*;
    use TableKind::*;
    match (system, table) {
        (Euler, Ic) => include_str!("../fixtures/euler_ic.csv"),
        (Euler, SLeft) => include_str!("../fixtures/euler_s_left.csv"),
        (Euler, SRight) => include_str!("../fixtures/euler_s_right.csv"),
        (Swe, Ic) => include_str!("../fixtures/swe_ic.csv"),
        (Swe, SLeft) => include_str!("../fixtures/swe_s_left.csv"),
        (Swe, SRight) => include_str!("../fixtures/swe_s_right.csv"),
        (Bfe, Ic) => include_str!("../fixtures/bfe_ic.csv"),
        (Bfe, SLeft) => include_str!("../fixtures/bfe_s_left.csv"),
        (Bfe, SRight) => include_str!("../fixtures/bfe_s_right.csv"),
    }
}

#[derive(Debug, Deserialize)]
struct IcRecord {
    test: u32,
    left: String,
    right: String,
    left_value: String,
    right_value: String,
    star: String,
    u_star: String,
    pattern: String,
    star_dp: u32,
    u_dp: u32,
    skip: String,
}

/// One test problem with its printed star state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IcRow {
    pub test: u32,
    /// Data as printed (possibly rounded).
    pub left_printed: String,
    pub right_printed: String,
    /// Data at full precision.
    pub left: Vec<f64>,
    pub right: Vec<f64>,
    pub star: f64,
    pub star_text: String,
    pub u_star: f64,
    pub u_star_text: String,
    pub pattern: WavePattern,
    /// Decimals actually carried by the printed star values; some entries
    /// are shorter values padded with zeros.
    pub star_dp: u32,
    pub u_dp: u32,
    pub skip: Option<String>,
}

pub fn parse_values(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidArgument(format!("bad number '{t}' in '{s}'")))
        })
        .collect()
}

fn number(s: &str) -> Result<f64> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("bad fixture number '{s}'")))
}

fn csv_error(e: csv::Error) -> Error {
    Error::InvalidArgument(format!("fixture: {e}"))
}

pub fn ic_table(system: SystemKind) -> Result<Vec<IcRow>> {
    let mut rdr = csv::Reader::from_reader(source(system, TableKind::Ic).as_bytes());
    let mut rows = Vec::new();
    for rec in rdr.deserialize::<IcRecord>() {
        let r = rec.map_err(csv_error)?;
        rows.push(IcRow {
            test: r.test,
            left: parse_values(&r.left_value)?,
            right: parse_values(&r.right_value)?,
            left_printed: r.left,
            right_printed: r.right,
            star: number(&r.star)?,
            u_star: number(&r.u_star)?,
            star_text: r.star,
            u_star_text: r.u_star,
            pattern: r.pattern.parse()?,
            star_dp: r.star_dp,
            u_dp: r.u_dp,
            skip: Some(r.skip).filter(|s| !s.trim().is_empty()),
        });
    }
    Ok(rows)
}

/// A printed speed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpeedCell {
    pub column: String,
    /// `None` for columns with no implementation here.
    pub estimator: Option<EstimatorId>,
    pub value: f64,
    pub text: String,
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpeedRow {
    pub test: u32,
    pub cells: Vec<SpeedCell>,
}

/// Column label to estimator. `GP` (Guermond-Popov) has no implementation.
pub fn column_estimator(column: &str) -> Option<EstimatorId> {
    if column == "GP" {
        return None;
    }
    column.parse().ok()
}

pub fn speed_table(system: SystemKind, side: Side) -> Result<Vec<SpeedRow>> {
    let table = match side {
        Side::Left => TableKind::SLeft,
        Side::Right => TableKind::SRight,
    };
    let mut rdr = csv::Reader::from_reader(source(system, table).as_bytes());
    let headers = rdr.headers().map_err(csv_error)?.clone();
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_error)?;
        let test = number(&rec[0])? as u32;
        let mut cells = Vec::new();
        for (column, raw) in headers.iter().zip(rec.iter()).skip(1) {
            let flagged = raw.ends_with('*');
            let text = raw.trim_end_matches('*').to_string();
            cells.push(SpeedCell {
                column: column.to_string(),
                estimator: column_estimator(column),
                value: number(&text)?,
                text,
                flagged,
            });
        }
        rows.push(SpeedRow { test, cells });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_table_loads() {
        for s in SystemKind::ALL {
            let ic = ic_table(s).unwrap();
            let left = speed_table(s, Side::Left).unwrap();
            let right = speed_table(s, Side::Right).unwrap();
            assert_eq!(ic.len(), left.len());
            assert_eq!(ic.len(), right.len());
            for row in left.iter().chain(&right) {
                assert_eq!(row.cells[0].estimator, Some(EstimatorId::Exact));
            }
        }
        assert_eq!(ic_table(SystemKind::Euler).unwrap().len(), 7);
        assert_eq!(ic_table(SystemKind::Swe).unwrap().len(), 5);
        assert_eq!(ic_table(SystemKind::Bfe).unwrap().len(), 6);
    }

    #[test]
    fn flags_and_columns() {
        let r = speed_table(SystemKind::Euler, Side::Right).unwrap();
        let c = &r[1].cells[2];
        assert_eq!(
            (c.column.as_str(), c.value, c.flagged),
            ("DavB", 1.1832, true)
        );
        assert_eq!(c.estimator, Some(EstimatorId::DavisB));
        let gp = r[0].cells.iter().find(|c| c.column == "GP").unwrap();
        assert_eq!(gp.estimator, None);
        let cols: Vec<_> = r[0].cells.iter().map(|c| c.column.as_str()).collect();
        assert_eq!(
            cols,
            ["Ex", "DavA", "DavB", "To", "GP", "Batten", "Einf", "TmsA", "TmsB", "TmsC"]
        );
    }

    #[test]
    fn anomalous_row_is_marked() {
        let ic = ic_table(SystemKind::Euler).unwrap();
        assert!(ic[5].skip.is_some());
        assert!(ic.iter().filter(|r| r.skip.is_some()).count() == 1);
    }

    #[test]
    fn full_precision_areas() {
        let ic = ic_table(SystemKind::Bfe).unwrap();
        assert_eq!(ic[0].left_printed, "3.1416,0");
        assert_eq!(ic[0].left[0], std::f64::consts::PI);
        assert!((ic[4].right[0] - 0.8 * std::f64::consts::PI).abs() < 1e-15);
    }
}
