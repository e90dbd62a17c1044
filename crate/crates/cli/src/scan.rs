//! Scan grids, per-row measure evaluation and table emission.
//!
//! Rows are computed in parallel but always emitted in grid order, so the
//! output bytes never depend on scheduling. Undefined values (the
//! Klein-Gordon Fisher information of S states) and per-row physics errors
//! (supercritical grid points) leave their fields empty instead of aborting
//! the scan; no NaN or infinity ever reaches the output.

use kg_coulomb::{
    fisher, heisenberg, make_state, make_system_with_alpha, sch_moments, shannon_report, Error,
    Theory, FISHER_TOL, SHANNON_TOL,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Axis {
    N,
    L,
    #[value(alias = "Z")]
    Z,
    M,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    /// l = n - 1 along the scan.
    Circular,
    /// l = 0, m = 0 along the scan.
    Sstate,
    /// l and m fixed by flags.
    Fixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    Centroid,
    Variance,
    ShannonPower,
    Fisher,
}

impl Measure {
    pub const ALL: [Measure; 4] = [
        Measure::Centroid,
        Measure::Variance,
        Measure::ShannonPower,
        Measure::Fisher,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Measure::Centroid => "centroid",
            Measure::Variance => "variance",
            Measure::ShannonPower => "shannon-power",
            Measure::Fisher => "fisher",
        }
    }

    pub fn parse_list(list: &str) -> Result<Vec<Measure>, String> {
        let mut measures = Vec::new();
        for token in list.split(',') {
            let token = token.trim();
            let measure = match token {
                "centroid" => Measure::Centroid,
                "variance" => Measure::Variance,
                "shannon-power" => Measure::ShannonPower,
                "fisher" => Measure::Fisher,
                other => {
                    return Err(format!(
                        "unknown measure {other:?}; expected centroid, variance, shannon-power or fisher"
                    ))
                }
            };
            if !measures.contains(&measure) {
                measures.push(measure);
            }
        }
        if measures.is_empty() {
            return Err("the measure list is empty".into());
        }
        Ok(measures)
    }
}

/// One output row. `ratio` is value_kg/value_sch except for the Fisher
/// measure, where the plotted orientation is value_sch/value_kg.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub measure: String,
    #[serde(rename = "Z")]
    pub z: f64,
    pub mass: f64,
    pub n: i64,
    pub l: i64,
    pub m: i64,
    pub value_kg: Option<f64>,
    pub value_sch: Option<f64>,
    pub ratio: Option<f64>,
    pub converged: bool,
}

pub const CSV_HEADER: &str = "measure,Z,mass,n,l,m,value_kg,value_sch,ratio,converged";

impl ScanRecord {
    pub fn to_csv_line(&self) -> String {
        let mut line = String::new();
        let _ = write!(
            line,
            "{},{},{},{},{},{},{},{},{},{}",
            self.measure,
            self.z,
            self.mass,
            self.n,
            self.l,
            self.m,
            opt_field(self.value_kg),
            opt_field(self.value_sch),
            opt_field(self.ratio),
            self.converged
        );
        line
    }

    pub fn from_csv_line(line: &str) -> Result<ScanRecord, String> {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 10 {
            return Err(format!("expected 10 CSV fields, got {}", fields.len()));
        }
        let num = |i: usize| -> Result<f64, String> {
            fields[i]
                .parse::<f64>()
                .map_err(|_| format!("field {i} is not a number: {:?}", fields[i]))
        };
        let int = |i: usize| -> Result<i64, String> {
            fields[i]
                .parse::<i64>()
                .map_err(|_| format!("field {i} is not an integer: {:?}", fields[i]))
        };
        let opt = |i: usize| -> Result<Option<f64>, String> {
            if fields[i].is_empty() {
                Ok(None)
            } else {
                num(i).map(Some)
            }
        };
        Ok(ScanRecord {
            measure: fields[0].to_string(),
            z: num(1)?,
            mass: num(2)?,
            n: int(3)?,
            l: int(4)?,
            m: int(5)?,
            value_kg: opt(6)?,
            value_sch: opt(7)?,
            ratio: opt(8)?,
            converged: fields[9]
                .parse::<bool>()
                .map_err(|_| format!("field 9 is not a boolean: {:?}", fields[9]))?,
        })
    }
}

fn opt_field(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v}"),
        None => String::new(),
    }
}

/// Inclusive numeric range a:b:step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeSpec {
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl RangeSpec {
    pub fn parse(text: &str) -> Result<RangeSpec, String> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("range must be a:b:step, got {text:?}"));
        }
        let parse = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| format!("range component is not a number: {s:?}"))
        };
        let spec = RangeSpec {
            start: parse(parts[0])?,
            end: parse(parts[1])?,
            step: parse(parts[2])?,
        };
        if !spec.step.is_finite() || spec.step <= 0.0 {
            return Err(format!("range step must be positive, got {}", spec.step));
        }
        if spec.end < spec.start {
            return Err(format!(
                "range end {} lies before start {}",
                spec.end, spec.start
            ));
        }
        Ok(spec)
    }

    pub fn values(&self) -> Vec<f64> {
        let mut out = Vec::new();
        let mut i = 0u64;
        loop {
            let v = self.start + self.step * i as f64;
            if v > self.end + 1e-9 * self.step.max(1.0) {
                break;
            }
            out.push(v);
            i += 1;
        }
        out
    }

    pub fn integer_values(&self, what: &str) -> Result<Vec<i64>, String> {
        self.values()
            .into_iter()
            .map(|v| {
                let rounded = v.round();
                if (v - rounded).abs() < 1e-9 {
                    Ok(rounded as i64)
                } else {
                    Err(format!("{what} scan requires integer grid values, got {v}"))
                }
            })
            .collect()
    }
}

/// One grid point of a scan, before validation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub z: f64,
    pub n: i64,
    pub l: i64,
    pub m: i64,
}

pub struct ScanPlan {
    pub grid: Vec<GridPoint>,
    pub measures: Vec<Measure>,
    pub mass: f64,
    pub alpha: f64,
    pub tol: Option<f64>,
}

/// Builds the grid for one scan axis. `z_fixed`, `n_fixed`, `l_fixed` and
/// `m_fixed` come from flags or config and are consulted depending on the
/// axis and family.
#[allow(clippy::too_many_arguments)]
pub fn build_grid(
    axis: Axis,
    family: Family,
    range: RangeSpec,
    z_fixed: Option<f64>,
    n_fixed: Option<i64>,
    l_fixed: Option<i64>,
    m_fixed: Option<i64>,
) -> Result<Vec<GridPoint>, String> {
    let need_z = || z_fixed.ok_or_else(|| "--Z is required for this scan axis".to_string());
    let need_n = || n_fixed.ok_or_else(|| "--n is required for this scan axis".to_string());
    let m_default = m_fixed.unwrap_or(0);
    match axis {
        Axis::N => {
            let z = need_z()?;
            let ns = range.integer_values("n")?;
            ns.into_iter()
                .map(|n| {
                    let (l, m) = match family {
                        Family::Circular => (n - 1, m_default),
                        Family::Sstate => (0, 0),
                        Family::Fixed => (
                            l_fixed.ok_or_else(|| {
                                "--l is required for a fixed-family n scan".to_string()
                            })?,
                            m_default,
                        ),
                    };
                    Ok(GridPoint { z, n, l, m })
                })
                .collect()
        }
        Axis::L => {
            let z = need_z()?;
            let n = need_n()?;
            Ok(range
                .integer_values("l")?
                .into_iter()
                .map(|l| GridPoint {
                    z,
                    n,
                    l,
                    m: m_default,
                })
                .collect())
        }
        Axis::Z => {
            let n = need_n()?;
            let l = l_fixed.unwrap_or(0);
            Ok(range
                .values()
                .into_iter()
                .map(|z| GridPoint {
                    z,
                    n,
                    l,
                    m: m_default,
                })
                .collect())
        }
        Axis::M => {
            let z = need_z()?;
            let n = need_n()?;
            let l = l_fixed.ok_or_else(|| "--l is required for an m scan".to_string())?;
            Ok(range
                .integer_values("m")?
                .into_iter()
                .map(|m| GridPoint { z, n, l, m })
                .collect())
        }
    }
}

/// Evaluates every (grid point, measure) pair in parallel, preserving grid
/// order in the output. The second element of each pair is a per-row error
/// note for stderr, if any.
pub fn run_scan(plan: &ScanPlan) -> Vec<(ScanRecord, Option<String>)> {
    let jobs: Vec<(GridPoint, Measure)> = plan
        .grid
        .iter()
        .flat_map(|&point| plan.measures.iter().map(move |&measure| (point, measure)))
        .collect();
    jobs.par_iter()
        .map(|&(point, measure)| compute_record(point, measure, plan.mass, plan.alpha, plan.tol))
        .collect()
}

fn blank_record(point: GridPoint, measure: Measure, mass: f64) -> ScanRecord {
    ScanRecord {
        measure: measure.name().to_string(),
        z: point.z,
        mass,
        n: point.n,
        l: point.l,
        m: point.m,
        value_kg: None,
        value_sch: None,
        ratio: None,
        converged: false,
    }
}

fn row_note(point: GridPoint, measure: Measure, err: &Error) -> String {
    format!(
        "row (Z={}, n={}, l={}, m={}, {}): {err}",
        point.z,
        point.n,
        point.l,
        point.m,
        measure.name()
    )
}

fn compute_record(
    point: GridPoint,
    measure: Measure,
    mass: f64,
    alpha: f64,
    tol: Option<f64>,
) -> (ScanRecord, Option<String>) {
    let mut record = blank_record(point, measure, mass);
    let system = match make_system_with_alpha(point.z, mass, alpha) {
        Ok(system) => system,
        Err(err) => return (record.clone(), Some(row_note(point, measure, &err))),
    };
    let state = match make_state(point.n, point.l, point.m) {
        Ok(state) => state,
        Err(err) => return (record.clone(), Some(row_note(point, measure, &err))),
    };

    let note = match measure {
        Measure::Centroid | Measure::Variance => {
            let pick = |m: &kg_coulomb::MomentsResult| match measure {
                Measure::Centroid => m.r_mean,
                _ => m.sigma2,
            };
            record.value_sch = Some(pick(&sch_moments(&system, &state)));
            match heisenberg(&system, &state) {
                Ok(kg) => {
                    record.value_kg = Some(pick(&kg));
                    record.converged = true;
                    None
                }
                Err(err) => Some(row_note(point, measure, &err)),
            }
        }
        Measure::ShannonPower => {
            let tol = tol.unwrap_or(SHANNON_TOL);
            let mut note = None;
            match shannon_report(&system, &state, Theory::Schrodinger, tol) {
                Ok(report) => record.value_sch = Some(report.entropic_power),
                Err(err) => note = Some(row_note(point, measure, &err)),
            }
            match shannon_report(&system, &state, Theory::KleinGordon, tol) {
                Ok(report) => {
                    record.value_kg = Some(report.entropic_power);
                    record.converged = note.is_none();
                }
                Err(err) => note = Some(row_note(point, measure, &err)),
            }
            note
        }
        Measure::Fisher => {
            let tol = tol.unwrap_or(FISHER_TOL);
            let mut note = None;
            match fisher(&system, &state, Theory::Schrodinger, tol) {
                Ok(v) => record.value_sch = Some(v),
                Err(err) => note = Some(row_note(point, measure, &err)),
            }
            match fisher(&system, &state, Theory::KleinGordon, tol) {
                Ok(v) => {
                    record.value_kg = Some(v);
                    record.converged = note.is_none();
                }
                // A diverging Fisher integral is a defined outcome, not a
                // numerical failure; the field stays empty.
                Err(Error::FisherUndefined(_)) => record.converged = note.is_none(),
                Err(err) => note = Some(row_note(point, measure, &err)),
            }
            note
        }
    };

    record.ratio = match (measure, record.value_kg, record.value_sch) {
        (Measure::Fisher, Some(kg), Some(sch)) => Some(sch / kg),
        (_, Some(kg), Some(sch)) => Some(kg / sch),
        _ => None,
    };
    (record, note)
}

pub fn write_records<W: std::io::Write>(
    out: &mut W,
    format: OutputFormat,
    records: &[ScanRecord],
) -> std::io::Result<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for record in records {
                writeln!(out, "{}", record.to_csv_line())?;
            }
        }
        OutputFormat::Json => {
            for record in records {
                let line = serde_json::to_string(record).expect("records serialize");
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measure_list_parsing() {
        let all = Measure::parse_list("centroid,variance,shannon-power,fisher").unwrap();
        assert_eq!(all, Measure::ALL.to_vec());
        assert!(Measure::parse_list("centroid,entropy").is_err());
        assert!(Measure::parse_list("").is_err());
    }

    #[test]
    fn range_values_are_inclusive() {
        let r = RangeSpec::parse("1:10:1").unwrap();
        assert_eq!(r.integer_values("n").unwrap(), (1..=10).collect::<Vec<_>>());
        let r = RangeSpec::parse("5:68:7").unwrap();
        let zs = r.values();
        assert_eq!(zs.len(), 10);
        assert_eq!(zs[0], 5.0);
        assert_eq!(zs[9], 68.0);
        assert!(RangeSpec::parse("1:5:-1").is_err());
        assert!(RangeSpec::parse("1:5").is_err());
        assert!(RangeSpec::parse("3:1:1").is_err());
    }

    #[test]
    fn non_integer_grid_rejected_for_integer_axes() {
        let r = RangeSpec::parse("1:3:0.5").unwrap();
        assert!(r.integer_values("n").is_err());
    }

    #[test]
    fn circular_family_grid() {
        let grid = build_grid(
            Axis::N,
            Family::Circular,
            RangeSpec::parse("1:4:1").unwrap(),
            Some(68.0),
            None,
            None,
            None,
        )
        .unwrap();
        assert_eq!(grid.len(), 4);
        assert!(grid.iter().all(|p| p.l == p.n - 1 && p.m == 0));
    }

    #[test]
    fn csv_round_trip_preserves_every_field() {
        let record = ScanRecord {
            measure: "fisher".into(),
            z: 68.0,
            mass: 273.132054,
            n: 4,
            l: 1,
            m: -1,
            value_kg: Some(1.234567890123e8),
            value_sch: None,
            ratio: None,
            converged: true,
        };
        let parsed = ScanRecord::from_csv_line(&record.to_csv_line()).unwrap();
        assert_eq!(parsed, record);
    }

    #[test]
    fn json_round_trip_preserves_every_field() {
        let record = ScanRecord {
            measure: "centroid".into(),
            z: 20.0,
            mass: 273.132054,
            n: 2,
            l: 1,
            m: 0,
            value_kg: Some(3.3e-4),
            value_sch: Some(3.4e-4),
            ratio: Some(0.970588),
            converged: true,
        };
        let text = serde_json::to_string(&record).unwrap();
        assert!(text.contains("\"Z\":20.0"));
        let parsed: ScanRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, record);
    }

    #[test]
    fn supercritical_row_is_reported_not_fatal() {
        let point = GridPoint {
            z: 137.2,
            n: 1,
            l: 0,
            m: 0,
        };
        let (record, note) = compute_record(
            point,
            Measure::Centroid,
            273.132054,
            kg_coulomb::FINE_STRUCTURE_CONSTANT,
            None,
        );
        assert!(record.value_kg.is_none());
        assert!(record.value_sch.is_some());
        assert!(record.ratio.is_none());
        assert!(!record.converged);
        assert!(note.unwrap().contains("supercritical"));
    }

    #[test]
    fn fisher_s_state_row_is_defined_absence() {
        let point = GridPoint {
            z: 68.0,
            n: 2,
            l: 0,
            m: 0,
        };
        let (record, note) = compute_record(
            point,
            Measure::Fisher,
            273.132054,
            kg_coulomb::FINE_STRUCTURE_CONSTANT,
            None,
        );
        assert!(record.value_kg.is_none());
        assert!(record.value_sch.is_some());
        assert!(record.ratio.is_none());
        assert!(record.converged);
        assert!(note.is_none());
    }
}
