use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// Outer-wave structure of a Riemann solution, left wave first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum WavePattern {
    RR,
    RS,
    SR,
    SS,
    Vacuum,
}

impl WavePattern {
    pub fn left_is_shock(self) -> bool {
        matches!(self, WavePattern::SR | WavePattern::SS)
    }

    pub fn right_is_shock(self) -> bool {
        matches!(self, WavePattern::RS | WavePattern::SS)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            WavePattern::RR => "RR",
            WavePattern::RS => "RS",
            WavePattern::SR => "SR",
            WavePattern::SS => "SS",
            WavePattern::Vacuum => "Vacuum",
        }
    }
}

impl FromStr for WavePattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "RR" => Ok(WavePattern::RR),
            "RS" => Ok(WavePattern::RS),
            "SR" => Ok(WavePattern::SR),
            "SS" => Ok(WavePattern::SS),
            "Vacuum" => Ok(WavePattern::Vacuum),
            other => Err(Error::InvalidArgument(format!(
                "unknown wave pattern '{other}'"
            ))),
        }
    }
}

impl fmt::Display for WavePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EstimatorId {
    DavisA,
    DavisB,
    Einfeldt,
    Batten,
    Toro,
    TmsA,
    TmsB,
    TmsC,
    TmsD,
    Exact,
}

impl EstimatorId {
    pub const ALL: [EstimatorId; 10] = [
        EstimatorId::Exact,
        EstimatorId::DavisA,
        EstimatorId::DavisB,
        EstimatorId::Einfeldt,
        EstimatorId::Batten,
        EstimatorId::Toro,
        EstimatorId::TmsA,
        EstimatorId::TmsB,
        EstimatorId::TmsC,
        EstimatorId::TmsD,
    ];

    /// Estimators that are proven to bound the exact speeds.
    pub const BOUNDING: [EstimatorId; 5] = [
        EstimatorId::Toro,
        EstimatorId::TmsA,
        EstimatorId::TmsB,
        EstimatorId::TmsC,
        EstimatorId::TmsD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EstimatorId::DavisA => "davis-a",
            EstimatorId::DavisB => "davis-b",
            EstimatorId::Einfeldt => "einfeldt",
            EstimatorId::Batten => "batten",
            EstimatorId::Toro => "toro",
            EstimatorId::TmsA => "tms-a",
            EstimatorId::TmsB => "tms-b",
            EstimatorId::TmsC => "tms-c",
            EstimatorId::TmsD => "tms-d",
            EstimatorId::Exact => "exact",
        }
    }
}

impl fmt::Display for EstimatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EstimatorId {
    type Err = Error;

    /// Accepts the kebab-case names plus a few spellings seen in tables
    /// (`DavisA`, `tms_b`, `TMSc`, ...).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        let id = match key.as_str() {
            "davisa" | "dava" => EstimatorId::DavisA,
            "davisb" | "davb" => EstimatorId::DavisB,
            "einfeldt" | "einf" => EstimatorId::Einfeldt,
            "batten" => EstimatorId::Batten,
            "toro" | "to" => EstimatorId::Toro,
            "tmsa" => EstimatorId::TmsA,
            "tmsb" => EstimatorId::TmsB,
            "tmsc" => EstimatorId::TmsC,
            "tmsd" => EstimatorId::TmsD,
            "exact" | "ex" => EstimatorId::Exact,
            _ => return Err(Error::InvalidArgument(format!("unknown estimator '{s}'"))),
        };
        Ok(id)
    }
}

/// An estimate (or the exact value) of the slowest and fastest wave speeds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpeedBounds {
    pub s_left: f64,
    pub s_right: f64,
    pub estimator: EstimatorId,
    pub pattern: Option<WavePattern>,
}

impl SpeedBounds {
    pub fn max_abs(&self) -> f64 {
        self.s_left.abs().max(self.s_right.abs())
    }
}
