//! JSON-lines and CSV emitters.
//!
//! JSON lines carry `"schema":"cmkit/1"` first. CSV output writes a header
//! before the first row of each kind, and summaries as `# key=value` comment
//! lines so the data rows stay a plain table.

use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use crate::{CliError, SCHEMA};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// A record that can be written in either format.
pub trait Row: Serialize {
    fn csv_header() -> &'static [&'static str];
    fn csv_fields(&self) -> Vec<String>;
}

/// Space-separated integers, the CSV encoding of a sequence.
pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// Rows separated by `;`.
pub fn join_matrix(rows: &[Vec<i64>]) -> String {
    rows.iter().map(|r| join(r)).collect::<Vec<_>>().join(";")
}

pub fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

#[derive(Serialize)]
struct SummaryLine<'a, S: Serialize> {
    schema: &'static str,
    summary: &'a S,
}

pub struct Emitter<W: Write> {
    out: W,
    format: Format,
    header: Option<&'static [&'static str]>,
}

impl<W: Write> Emitter<W> {
    pub fn new(out: W, format: Format) -> Self {
        Emitter {
            out,
            format,
            header: None,
        }
    }

    pub fn format(&self) -> Format {
        self.format
    }

    pub fn row<R: Row>(&mut self, row: &R) -> Result<(), CliError> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.out, row)?;
                self.out.write_all(b"\n")?;
            }
            Format::Csv => {
                let header = R::csv_header();
                if self.header != Some(header) {
                    self.csv_line(header.iter().copied())?;
                    self.header = Some(header);
                }
                let fields = row.csv_fields();
                self.csv_line(fields.iter().map(String::as_str))?;
            }
        }
        Ok(())
    }

    pub fn summary<S: Serialize>(&mut self, summary: &S) -> Result<(), CliError> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(
                    &mut self.out,
                    &SummaryLine {
                        schema: SCHEMA,
                        summary,
                    },
                )?;
                self.out.write_all(b"\n")?;
            }
            Format::Csv => {
                writeln!(self.out, "# schema={SCHEMA}")?;
                let mut flat = Vec::new();
                flatten("", &serde_json::to_value(summary)?, &mut flat);
                for (k, v) in flat {
                    writeln!(self.out, "# {k}={v}")?;
                }
            }
        }
        Ok(())
    }

    pub fn flush(&mut self) -> Result<(), CliError> {
        self.out.flush()?;
        Ok(())
    }

    pub fn into_inner(self) -> W {
        self.out
    }

    fn csv_line<'a>(&mut self, fields: impl Iterator<Item = &'a str>) -> Result<(), CliError> {
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        w.write_record(fields)?;
        let bytes = w
            .into_inner()
            .map_err(|e| std::io::Error::other(e.to_string()))?;
        self.out.write_all(&bytes)?;
        Ok(())
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        Value::Array(xs) => {
            let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            out.push((prefix.to_string(), parts.join(" ")));
        }
        Value::Null => out.push((prefix.to_string(), String::new())),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Pt {
        schema: &'static str,
        xs: Vec<i64>,
        tag: Option<i64>,
    }

    impl Row for Pt {
        fn csv_header() -> &'static [&'static str] {
            &["schema", "xs", "tag"]
        }
        fn csv_fields(&self) -> Vec<String> {
            vec![self.schema.into(), join(&self.xs), opt(self.tag)]
        }
    }

    #[derive(Serialize)]
    struct Sum {
        n: u64,
        ok: bool,
    }

    fn render(format: Format) -> String {
        let mut e = Emitter::new(Vec::new(), format);
        e.row(&Pt {
            schema: SCHEMA,
            xs: vec![1, 2],
            tag: None,
        })
        .unwrap();
        e.row(&Pt {
            schema: SCHEMA,
            xs: vec![3],
            tag: Some(4),
        })
        .unwrap();
        e.summary(&Sum { n: 2, ok: true }).unwrap();
        String::from_utf8(e.into_inner()).unwrap()
    }

    #[test]
    fn json_lines() {
        assert_eq!(
            render(Format::Json),
            "{\"schema\":\"cmkit/1\",\"xs\":[1,2],\"tag\":null}\n\
             {\"schema\":\"cmkit/1\",\"xs\":[3],\"tag\":4}\n\
             {\"schema\":\"cmkit/1\",\"summary\":{\"n\":2,\"ok\":true}}\n"
        );
    }

    #[test]
    fn csv_rows_and_comment_summary() {
        assert_eq!(
            render(Format::Csv),
            "schema,xs,tag\ncmkit/1,1 2,\ncmkit/1,3,4\n# schema=cmkit/1\n# n=2\n# ok=true\n"
        );
    }

    #[test]
    fn nested_summary_flattens_sorted() {
        let mut out = Vec::new();
        flatten(
            "",
            &serde_json::json!({"b": {"y": 1, "x": [1, 2]}, "a": null}),
            &mut out,
        );
        assert_eq!(
            out,
            [
                ("a".into(), "".into()),
                ("b.x".into(), "1 2".into()),
                ("b.y".into(), "1".into())
            ]
        );
    }
}
