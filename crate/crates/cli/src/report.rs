//! Verification report rows and their NDJSON / CSV writers.

use std::io::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Computed and surfaced, but never counted as a failure.
    Reported,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Reported => "reported",
        }
    }
}

/// One checked cell of one suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub check: String,
    pub cell: Value,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Wall time in milliseconds; only emitted when timings are requested so
    /// that the default output is byte-identical across runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<f64>,
}

impl Row {
    pub fn new(check: &str, cell: Value, status: Status, expected: Value, actual: Value, tol: Option<f64>) -> Self {
        Self { check: check.to_string(), cell, status, expected, actual, tol, note: None, runtime_ms: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// A failed row carrying an error message in place of a value.
    pub fn error(check: &str, cell: Value, message: String) -> Self {
        Self::new(check, cell, Status::Fail, Value::Null, Value::Null, None).with_note(message)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub reported: usize,
}

impl Summary {
    pub fn of(rows: &[Row]) -> Self {
        let mut s = Summary::default();
        for r in rows {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Reported => s.reported += 1,
            }
        }
        s
    }

    pub fn ok(&self) -> bool {
        self.fail == 0
    }
}

pub fn write_ndjson<W: Write>(rows: &[Row], mut out: W) -> std::io::Result<()> {
    for row in rows {
        serde_json::to_writer(&mut out, row)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// CSV with structured fields JSON-encoded into single cells.
pub fn write_csv<W: Write>(rows: &[Row], out: W, timings: bool) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["check", "cell", "status", "expected", "actual", "tol", "note"];
    if timings {
        header.push("runtime_ms");
    }
    w.write_record(&header)?;
    for r in rows {
        let mut rec = vec![
            r.check.clone(),
            r.cell.to_string(),
            r.status.as_str().to_string(),
            r.expected.to_string(),
            r.actual.to_string(),
            r.tol.map(|t| t.to_string()).unwrap_or_default(),
            r.note.clone().unwrap_or_default(),
        ];
        if timings {
            rec.push(r.runtime_ms.map(|t| format!("{t:.3}")).unwrap_or_default());
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn rows() -> Vec<Row> {
        vec![
            Row::new("a", json!({"m": 2}), Status::Pass, json!(1), json!(1), Some(1e-7)),
            Row::new("a", json!({"m": 3}), Status::Reported, json!("x"), json!("y"), None).with_note("n"),
        ]
    }

    #[test]
    fn ndjson_lines() {
        let mut buf = Vec::new();
        write_ndjson(&rows(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        let v: Value = serde_json::from_str(lines[1]).unwrap();
        assert_eq!(v["status"], "reported");
        assert!(v.get("runtime_ms").is_none());
    }

    #[test]
    fn csv_header_and_rows() {
        let mut buf = Vec::new();
        write_csv(&rows(), &mut buf, true).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("check,cell,status,expected,actual,tol,note,runtime_ms\n"));
        assert_eq!(text.lines().count(), 3);
    }

    #[test]
    fn summary_ignores_reported() {
        let s = Summary::of(&rows());
        assert_eq!((s.pass, s.fail, s.reported), (1, 0, 1));
        assert!(s.ok());
        let mut r = rows();
        r[0].status = Status::Fail;
        assert!(!Summary::of(&r).ok());
    }
}
