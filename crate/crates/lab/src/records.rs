//! Persisted result formats: JSON-lines trial records, summary JSON, and a
//! flat CSV for plotting. Summaries carry no timing data, so re-running with
//! the same seed reproduces them byte for byte.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::engine::{
    ExperimentConfig, LemmaParams, LemmaReport, ResilienceCurve, TrialRecord, VERSION,
};

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub version: String,
    pub config: ExperimentConfig,
    pub curve: ResilienceCurve,
}

impl SweepSummary {
    pub fn new(config: ExperimentConfig, curve: ResilienceCurve) -> SweepSummary {
        SweepSummary {
            version: VERSION.to_string(),
            config,
            curve,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaSummary {
    pub version: String,
    pub params: LemmaParams,
    pub report: LemmaReport,
}

impl LemmaSummary {
    pub fn new(params: LemmaParams, report: LemmaReport) -> LemmaSummary {
        LemmaSummary {
            version: VERSION.to_string(),
            params,
            report,
        }
    }
}

pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable record");
    s.push('\n');
    s
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> std::io::Result<()> {
    std::fs::write(path, to_pretty_json(value))
}

/// One trial record per line, in trial order. The only place wall time is
/// persisted.
pub fn write_jsonl(path: &Path, records: &[TrialRecord]) -> std::io::Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    for rec in records {
        serde_json::to_writer(&mut out, rec)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Flat curve table for plotting tools.
pub fn curve_csv(curve: &ResilienceCurve) -> String {
    let mut s = String::from("budget,destroyed_fraction,ci_lo,ci_hi\n");
    for p in &curve.points {
        s.push_str(&format!(
            "{},{},{},{}\n",
            p.budget, p.destroyed_fraction, p.ci_lo, p.ci_hi
        ));
    }
    s
}

pub fn write_csv(path: &Path, curve: &ResilienceCurve) -> std::io::Result<()> {
    std::fs::write(path, curve_csv(curve))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{
        sweep, AdversaryKind, BudgetSpec, GraphSource, PropertyKind,
    };
    use resilience_core::adversary::IsolateVariant;

    fn tiny_sweep() -> (SweepSummary, Vec<TrialRecord>) {
        let config = ExperimentConfig {
            property: PropertyKind::PerfectMatching,
            graph: GraphSource::Gnp { n: 30, p: 0.4 },
            adversary: AdversaryKind::IsolateLargerHalf {
                variant: IsolateVariant::UniformRandom,
            },
            budgets: vec![BudgetSpec::Absolute(0), BudgetSpec::NpFraction(2.0)],
            trials: 4,
            seed: 3,
            chromatic_epsilon: 0.25,
        };
        let (curve, records) = sweep(&config).unwrap();
        (SweepSummary::new(config, curve), records)
    }

    #[test]
    fn summary_json_is_stable_and_versioned() {
        let (summary, _) = tiny_sweep();
        let a = to_pretty_json(&summary);
        let b = to_pretty_json(&summary);
        assert_eq!(a, b);
        assert!(a.contains(&format!("\"version\": \"{VERSION}\"")));
        assert!(!a.contains("wall_ms"), "summaries must not carry timing");
        assert!(a.ends_with('\n'));
    }

    #[test]
    fn csv_has_header_and_one_row_per_budget() {
        let (summary, _) = tiny_sweep();
        let csv = curve_csv(&summary.curve);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "budget,destroyed_fraction,ci_lo,ci_hi");
        assert_eq!(lines.len(), 1 + summary.curve.points.len());
        for line in &lines[1..] {
            assert_eq!(line.split(',').count(), 4);
        }
    }

    #[test]
    fn jsonl_round_trip_line_count() {
        let (_, records) = tiny_sweep();
        let dir = std::env::temp_dir().join("reslab-records-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("trials.jsonl");
        write_jsonl(&path, &records).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), records.len());
        for line in text.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert!(v.get("wall_ms").is_some());
            assert!(v.get("outcomes").is_some());
        }
        std::fs::remove_dir_all(&dir).ok();
    }
}
