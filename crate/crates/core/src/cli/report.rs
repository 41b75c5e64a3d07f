//! Deterministic report writers: CSV tables with shortest round-trip
//! float formatting and JSON values that survive non-finite numbers.

use serde_json::{json, Value};

/// Column-labeled numeric table. The same table prints as CSV or as a
/// JSON object with `columns` and `rows`, so the tabular commands can
/// serve both formats.
#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: Vec<String>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    /// Comma-separated with a header row. Rust's shortest round-trip
    /// `Display` for `f64` keeps every value re-parseable; non-finite
    /// values print as `inf`, `-inf`, `NaN`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format_float(*v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "columns": self.columns,
            "rows": self.rows
                .iter()
                .map(|row| Value::Array(row.iter().map(|v| float_value(*v)).collect()))
                .collect::<Vec<_>>(),
        })
    }
}

pub fn format_float(v: f64) -> String {
    format!("{v}")
}

/// JSON-safe float: finite values stay numbers, non-finite values become
/// the strings `"inf"`, `"-inf"`, `"nan"` (plain JSON has no encoding
/// for them, and null would conflate all three).
pub fn float_value(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else if v.is_nan() {
        json!("nan")
    } else if v > 0.0 {
        json!("inf")
    } else {
        json!("-inf")
    }
}

pub fn float_list(vs: &[f64]) -> Value {
    Value::Array(vs.iter().map(|v| float_value(*v)).collect())
}

pub fn matrix_value(m: &nalgebra::DMatrix<f64>) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| float_list(&(0..m.ncols()).map(|j| m[(i, j)]).collect::<Vec<_>>()))
            .collect(),
    )
}

/// One verification line: a named condition, its measured defect, and
/// whether the defect clears the tolerance.
pub fn condition(name: &str, pass: bool, defect: f64, detail: &str) -> Value {
    json!({
        "condition": name,
        "pass": pass,
        "defect": float_value(defect),
        "detail": detail,
    })
}

pub fn render_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report values serialize");
    text.push('\n');
    text
}
