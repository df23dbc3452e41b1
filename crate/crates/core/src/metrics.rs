//! Training-cost comparison from logged curves.

use std::fmt;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MetricDirection {
    /// Loss-like metrics.
    LowerIsBetter,
    /// Accuracy-like metrics.
    HigherIsBetter,
}

impl MetricDirection {
    fn meets(self, metric: f64, target: f64) -> bool {
        match self {
            MetricDirection::LowerIsBetter => metric <= target,
            MetricDirection::HigherIsBetter => metric >= target,
        }
    }
}

impl FromStr for MetricDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower" | "lower_is_better" => Ok(MetricDirection::LowerIsBetter),
            "higher" | "higher_is_better" => Ok(MetricDirection::HigherIsBetter),
            _ => Err(Error::InvalidOption(format!("unknown direction `{s}`"))),
        }
    }
}

impl fmt::Display for MetricDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MetricDirection::LowerIsBetter => "lower",
            MetricDirection::HigherIsBetter => "higher",
        })
    }
}

/// Metric against cumulative FLOPs. FLOPs are strictly increasing and there
/// are at least two points.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainingCurve {
    points: Vec<(f64, f64)>,
    direction: MetricDirection,
}

impl TrainingCurve {
    pub fn new(points: Vec<(f64, f64)>, direction: MetricDirection) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidCurve(format!(
                "need at least 2 points, got {}",
                points.len()
            )));
        }
        if let Some(i) = points
            .iter()
            .position(|(f, m)| !f.is_finite() || !m.is_finite())
        {
            return Err(Error::InvalidCurve(format!("point {i} is not finite")));
        }
        if let Some(i) = points.windows(2).position(|w| w[1].0 <= w[0].0) {
            return Err(Error::InvalidCurve(format!(
                "flops not strictly increasing at point {}",
                i + 1
            )));
        }
        Ok(TrainingCurve { points, direction })
    }

    /// Reads `flops,metric` rows. A header row is allowed.
    pub fn from_csv_reader<R: Read>(reader: R, direction: MetricDirection) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .flexible(true)
            .from_reader(reader);
        let mut points = Vec::new();
        for (row, record) in rdr.records().enumerate() {
            let record =
                record.map_err(|e| Error::InvalidCurve(format!("row {}: {e}", row + 1)))?;
            if record.len() != 2 {
                return Err(Error::InvalidCurve(format!(
                    "row {}: expected 2 columns, got {}",
                    row + 1,
                    record.len()
                )));
            }
            match (record[0].parse::<f64>(), record[1].parse::<f64>()) {
                (Ok(f), Ok(m)) => points.push((f, m)),
                _ if row == 0 => {}
                _ => {
                    return Err(Error::InvalidCurve(format!(
                        "row {}: cannot parse `{}`",
                        row + 1,
                        record.iter().collect::<Vec<_>>().join(",")
                    )))
                }
            }
        }
        TrainingCurve::new(points, direction)
    }

    pub fn from_csv_file(path: impl AsRef<Path>, direction: MetricDirection) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        TrainingCurve::from_csv_reader(std::io::BufReader::new(file), direction)
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn direction(&self) -> MetricDirection {
        self.direction
    }

    /// FLOPs at which the metric first meets `target`, interpolating linearly
    /// between the bracketing samples.
    pub fn first_crossing(&self, target: f64) -> Result<f64> {
        let meets = |m: f64| self.direction.meets(m, target);
        let (f0, m0) = self.points[0];
        if meets(m0) {
            return Ok(f0);
        }
        for w in self.points.windows(2) {
            let ((fa, ma), (fb, mb)) = (w[0], w[1]);
            if !meets(mb) {
                continue;
            }
            if mb == target {
                return Ok(fb);
            }
            let t = (target - ma) / (mb - ma);
            return Ok(fa + t * (fb - fa));
        }
        Err(Error::TargetNotReached(target))
    }
}

/// Fraction of the scratch run's FLOPs saved by `method` to reach `target`.
/// Negative when the method is slower.
pub fn flops_saving_ratio(
    scratch: &TrainingCurve,
    method: &TrainingCurve,
    target: f64,
) -> Result<f64> {
    let xi_scratch = scratch.first_crossing(target)?;
    let xi_method = method.first_crossing(target)?;
    if xi_scratch == 0.0 {
        return Err(Error::InvalidCurve(
            "scratch curve meets the target at zero flops".into(),
        ));
    }
    Ok((xi_scratch - xi_method) / xi_scratch)
}
