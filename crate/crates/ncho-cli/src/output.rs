//! Record emission as JSON lines, CSV or plain `key=value` text.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub struct Emitter {
    format: Format,
    sink: Box<dyn Write>,
    csv_header: Option<Vec<String>>,
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Emitter {
    pub fn new(format: Format, out: Option<&Path>) -> Result<Self, CliError> {
        let sink: Box<dyn Write> = match out {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        Ok(Self {
            format,
            sink,
            csv_header: None,
        })
    }

    pub fn format(&self) -> Format {
        self.format
    }

    /// Writes pre-formatted text unchanged.
    pub fn raw(&mut self, text: &str) -> Result<(), CliError> {
        self.sink.write_all(text.as_bytes())?;
        if !text.ends_with('\n') {
            self.sink.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn record<T: Serialize>(&mut self, rec: &T) -> Result<(), CliError> {
        let value = serde_json::to_value(rec)?;
        match self.format {
            Format::Json => writeln!(self.sink, "{}", serde_json::to_string(&value)?)?,
            Format::Text => {
                let line = match &value {
                    Value::Object(map) => map
                        .iter()
                        .map(|(k, v)| format!("{k}={}", scalar(v)))
                        .collect::<Vec<_>>()
                        .join(" "),
                    other => scalar(other),
                };
                writeln!(self.sink, "{line}")?;
            }
            Format::Csv => {
                let Value::Object(map) = &value else {
                    writeln!(self.sink, "{}", csv_field(&scalar(&value)))?;
                    return Ok(());
                };
                let keys: Vec<String> = map.keys().cloned().collect();
                if self.csv_header.as_ref() != Some(&keys) {
                    writeln!(self.sink, "{}", keys.iter().map(|k| csv_field(k)).collect::<Vec<_>>().join(","))?;
                    self.csv_header = Some(keys);
                }
                let row: Vec<String> = map.values().map(|v| csv_field(&scalar(v))).collect();
                writeln!(self.sink, "{}", row.join(","))?;
            }
        }
        Ok(())
    }

    pub fn flush(&mut self) -> Result<(), CliError> {
        self.sink.flush()?;
        Ok(())
    }
}
