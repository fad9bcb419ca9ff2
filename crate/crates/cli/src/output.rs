use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

/// A result in all three renderings.
pub struct Output {
    pub text: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub json: Value,
}

impl Output {
    pub fn new(text: impl Into<String>, json: impl Serialize) -> Self {
        Output {
            text: text.into(),
            header: Vec::new(),
            rows: Vec::new(),
            json: serde_json::to_value(json).expect("output types serialize"),
        }
    }

    pub fn table<S: Into<String>>(mut self, header: Vec<S>, rows: Vec<Vec<String>>) -> Self {
        self.header = header.into_iter().map(Into::into).collect();
        self.rows = rows;
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json values serialize"),
            Format::Tsv => {
                let mut lines = vec![self.header.join("\t")];
                lines.extend(self.rows.iter().map(|r| r.join("\t")));
                lines.join("\n")
            }
        }
    }
}
