//! Rendering of command results as text, json or csv.

use serde_json::{Map, Number};

use crate::OutputFormat;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(i64),
    List(Vec<f64>),
    Text(String),
    Bool(bool),
    Null,
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as i64)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_owned())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

/// Ordered key/value pairs produced by one operation.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record {
    fields: Vec<(String, Value)>,
}

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.push(key, value);
        self
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.push((key.to_owned(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn fields(&self) -> &[(String, Value)] {
        &self.fields
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn single(record: Record) -> Self {
        Self {
            records: vec![record],
        }
    }

    pub fn render(&self, format: OutputFormat, precision: usize) -> String {
        match format {
            OutputFormat::Json => self.json(precision),
            OutputFormat::Csv => self.csv(precision),
            _ => self.text(precision),
        }
    }

    fn text(&self, precision: usize) -> String {
        if let [record] = self.records.as_slice() {
            if let [(_, value)] = record.fields() {
                return format!("{}\n", text_value(value, precision));
            }
        }
        let blocks: Vec<String> = self
            .records
            .iter()
            .map(|r| {
                r.fields()
                    .iter()
                    .map(|(k, v)| format!("{k}: {}\n", text_value(v, precision)))
                    .collect()
            })
            .collect();
        blocks.join("\n")
    }

    fn csv(&self, precision: usize) -> String {
        let Some(first) = self.records.first() else {
            return String::new();
        };
        let mut out = first
            .fields()
            .iter()
            .map(|(k, _)| k.as_str())
            .collect::<Vec<_>>()
            .join(",");
        out.push('\n');
        for r in &self.records {
            let row: Vec<String> = r
                .fields()
                .iter()
                .map(|(_, v)| match v {
                    Value::Num(x) => fmt_num(*x, precision),
                    Value::Int(n) => n.to_string(),
                    Value::List(xs) => xs
                        .iter()
                        .map(|&x| fmt_num(x, precision))
                        .collect::<Vec<_>>()
                        .join(" "),
                    Value::Text(s) => csv_escape(s),
                    Value::Bool(b) => b.to_string(),
                    Value::Null => String::new(),
                })
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    fn json(&self, precision: usize) -> String {
        let mut values: Vec<serde_json::Value> = self
            .records
            .iter()
            .map(|r| json_record(r, precision))
            .collect();
        let doc = if values.len() == 1 {
            values.pop().expect("one record")
        } else {
            serde_json::Value::Array(values)
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
        s.push('\n');
        s
    }
}

fn json_record(r: &Record, precision: usize) -> serde_json::Value {
    // serde_json's default map is ordered by key
    let map: Map<String, serde_json::Value> = r
        .fields()
        .iter()
        .map(|(k, v)| {
            let v = match v {
                Value::Num(x) => json_num(*x, precision),
                Value::Int(n) => serde_json::Value::from(*n),
                Value::List(xs) => {
                    serde_json::Value::Array(xs.iter().map(|&x| json_num(x, precision)).collect())
                }
                Value::Text(s) => serde_json::Value::String(s.clone()),
                Value::Bool(b) => serde_json::Value::Bool(*b),
                Value::Null => serde_json::Value::Null,
            };
            (k.clone(), v)
        })
        .collect();
    serde_json::Value::Object(map)
}

fn json_num(x: f64, precision: usize) -> serde_json::Value {
    Number::from_f64(round_sig(x, precision))
        .map(serde_json::Value::Number)
        .unwrap_or(serde_json::Value::Null)
}

fn text_value(v: &Value, precision: usize) -> String {
    match v {
        Value::Num(x) => fmt_num(*x, precision),
        Value::Int(n) => n.to_string(),
        Value::List(xs) => xs
            .iter()
            .map(|&x| fmt_num(x, precision))
            .collect::<Vec<_>>()
            .join(" "),
        Value::Text(s) => s.clone(),
        Value::Bool(true) => "yes".into(),
        Value::Bool(false) => "no".into(),
        Value::Null => "-".into(),
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// Round to `digits` significant digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let digits = digits.max(1);
    let r: f64 = format!("{:.*e}", digits - 1, x)
        .parse()
        .expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Shortest decimal form of `x` rounded to `digits` significant digits.
pub fn fmt_num(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let r = round_sig(x, digits);
    let a = r.abs();
    if a != 0.0 && !(1e-6..1e15).contains(&a) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers() {
        assert_eq!(fmt_num(std::f64::consts::FRAC_PI_2, 10), "1.570796327");
        assert_eq!(fmt_num(0.2 / 0.05, 10), "4");
        assert_eq!(fmt_num(-0.0, 10), "0");
        assert_eq!(fmt_num(0.5, 3), "0.5");
        assert_eq!(fmt_num(3.0e-15, 10), "3e-15");
        assert_eq!(fmt_num(-1.23456e-9, 3), "-1.23e-9");
    }

    #[test]
    fn scalar_text() {
        let r = Report::single(Record::new().with("value", 1.0));
        assert_eq!(r.render(OutputFormat::Text, 10), "1\n");
    }

    #[test]
    fn csv_rows() {
        let r = Report {
            records: vec![
                Record::new().with("a", 1.0).with("b", "x,y"),
                Record::new().with("a", Value::Null).with("b", true),
            ],
        };
        assert_eq!(r.render(OutputFormat::Csv, 10), "a,b\n1,\"x,y\"\n,true\n");
    }

    #[test]
    fn json_keys_sorted() {
        let r = Report::single(Record::new().with("zeta", 0.1 + 0.2).with("alpha", false));
        assert_eq!(
            r.render(OutputFormat::Json, 10),
            "{\n  \"alpha\": false,\n  \"zeta\": 0.3\n}\n"
        );
    }
}
