//! Report assembly and deterministic emission in CSV or JSONL form.

use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Result;
use crate::similarity::ComparisonRecord;

/// Aggregate counts over a batch of comparison records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total_pairs: usize,
    /// Records where either trajectory had at least one fix outside the
    /// layer.
    pub pairs_with_out_of_layer: usize,
    /// Records where any risk field is undefined.
    pub undefined_risk_pairs: usize,
}

/// A batch of comparison rows plus their summary.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    records: Vec<ComparisonRecord>,
    summary: Summary,
}

impl Report {
    /// Builds a report, sorting the records by pair id and deriving the
    /// summary from them.
    pub fn from_records(mut records: Vec<ComparisonRecord>) -> Self {
        records.sort_by(|a, b| a.pair_id.cmp(&b.pair_id));
        let summary = Summary {
            total_pairs: records.len(),
            pairs_with_out_of_layer: records
                .iter()
                .filter(|r| r.out_of_layer_real + r.out_of_layer_synthetic > 0)
                .count(),
            undefined_risk_pairs: records
                .iter()
                .filter(|r| r.risk_real.is_none() || r.risk_synthetic.is_none())
                .count(),
        };
        Report { records, summary }
    }

    pub fn records(&self) -> &[ComparisonRecord] {
        &self.records
    }

    pub fn summary(&self) -> Summary {
        self.summary
    }

    /// Rows as CSV with the fixed header
    /// `pair_id,hausdorff_km,entailment_similarity,risk_real,risk_synthetic,risk_deviation,out_of_layer_real,out_of_layer_synthetic`.
    /// Undefined values become empty fields. The summary is not part of this
    /// document; see [`Report::summary_json`].
    pub fn emit_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        for record in &self.records {
            w.serialize(record)?;
        }
        if self.records.is_empty() {
            // serde-driven headers only appear with at least one row.
            w.write_record([
                "pair_id",
                "hausdorff_km",
                "entailment_similarity",
                "risk_real",
                "risk_synthetic",
                "risk_deviation",
                "out_of_layer_real",
                "out_of_layer_synthetic",
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn emit_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.emit_csv(&mut buf).expect("in-memory CSV write");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }

    /// One JSON object per record, then a trailing `{"summary": ...}` line.
    pub fn emit_jsonl<W: Write>(&self, mut writer: W) -> Result<()> {
        for record in &self.records {
            serde_json::to_writer(&mut writer, record)?;
            writeln!(writer)?;
        }
        writeln!(
            writer,
            "{}",
            serde_json::json!({ "summary": self.summary })
        )?;
        Ok(())
    }

    pub fn emit_jsonl_string(&self) -> String {
        let mut buf = Vec::new();
        self.emit_jsonl(&mut buf).expect("in-memory JSONL write");
        String::from_utf8(buf).expect("JSONL output is UTF-8")
    }

    /// The summary as a standalone JSON document, used as the CSV sidecar.
    pub fn summary_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.summary).expect("summary serializes");
        s.push('\n');
        s
    }
}

/// Output format for the comparison report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Jsonl,
}

impl ReportFormat {
    /// Picks the format from a file name: `.jsonl` means JSONL, anything
    /// else CSV.
    pub fn from_path(path: &std::path::Path) -> ReportFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("jsonl") => ReportFormat::Jsonl,
            _ => ReportFormat::Csv,
        }
    }
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "jsonl" => Ok(ReportFormat::Jsonl),
            other => Err(format!("unknown report format {other:?}; expected csv or jsonl")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(pair_id: &str) -> ComparisonRecord {
        ComparisonRecord {
            pair_id: pair_id.to_string(),
            hausdorff_km: 1.5,
            entailment_similarity: Some(0.5),
            risk_real: Some(3.0),
            risk_synthetic: Some(4.0),
            risk_deviation: Some(1.0),
            out_of_layer_real: 0,
            out_of_layer_synthetic: 0,
            notes: Vec::new(),
        }
    }

    const HEADER: &str = "pair_id,hausdorff_km,entailment_similarity,risk_real,risk_synthetic,risk_deviation,out_of_layer_real,out_of_layer_synthetic";

    #[test]
    fn one_pair_report_is_two_csv_lines() {
        let report = Report::from_records(vec![record("a:a")]);
        let csv = report.emit_csv_string();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], HEADER);
        assert_eq!(lines[1], "a:a,1.5,0.5,3.0,4.0,1.0,0,0");
    }

    #[test]
    fn undefined_fields_render_empty() {
        let mut r = record("b:b");
        r.entailment_similarity = Some(0.0);
        r.risk_synthetic = None;
        r.risk_deviation = None;
        r.out_of_layer_synthetic = 4;
        let report = Report::from_records(vec![r]);
        let csv = report.emit_csv_string();
        assert_eq!(csv.lines().nth(1).unwrap(), "b:b,1.5,0.0,3.0,,,0,4");
        assert_eq!(report.summary().undefined_risk_pairs, 1);
        assert_eq!(report.summary().pairs_with_out_of_layer, 1);

        let jsonl = report.emit_jsonl_string();
        assert!(jsonl.contains("\"risk_synthetic\":null"), "{jsonl}");
        assert!(jsonl.lines().last().unwrap().starts_with("{\"summary\":"));
    }

    #[test]
    fn records_sorted_and_summary_consistent() {
        let report = Report::from_records(vec![record("z:z"), record("a:a"), record("m:m")]);
        let ids: Vec<&str> = report.records().iter().map(|r| r.pair_id.as_str()).collect();
        assert_eq!(ids, vec!["a:a", "m:m", "z:z"]);
        assert_eq!(report.summary().total_pairs, 3);
        assert_eq!(report.summary().pairs_with_out_of_layer, 0);
        assert_eq!(report.summary().undefined_risk_pairs, 0);
    }

    #[test]
    fn emission_is_deterministic() {
        let report = Report::from_records(vec![record("a:a"), record("b:b")]);
        assert_eq!(report.emit_csv_string(), report.emit_csv_string());
        assert_eq!(report.emit_jsonl_string(), report.emit_jsonl_string());
        assert_eq!(report.summary_json(), report.summary_json());
    }

    #[test]
    fn empty_report_still_emits_header() {
        let report = Report::from_records(vec![]);
        let csv = report.emit_csv_string();
        assert_eq!(csv.trim_end(), HEADER);
        let jsonl = report.emit_jsonl_string();
        assert_eq!(jsonl.lines().count(), 1);
    }

    #[test]
    fn format_from_path() {
        use std::path::Path;
        assert_eq!(
            ReportFormat::from_path(Path::new("out.jsonl")),
            ReportFormat::Jsonl
        );
        assert_eq!(
            ReportFormat::from_path(Path::new("out.csv")),
            ReportFormat::Csv
        );
        assert_eq!(
            ReportFormat::from_path(Path::new("report")),
            ReportFormat::Csv
        );
    }
}
