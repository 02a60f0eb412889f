//! CSV text and the JSON run manifest that accompanies it.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Comma-separated table with a one-line header.
#[derive(Debug, Clone)]
pub struct Csv {
    columns: usize,
    text: String,
    rows: usize,
}

impl Csv {
    pub fn new<S: AsRef<str>>(header: &[S]) -> Self {
        let mut text = header.iter().map(|h| h.as_ref()).collect::<Vec<_>>().join(",");
        text.push('\n');
        Csv { columns: header.len(), text, rows: 0 }
    }

    /// Panics if the row width differs from the header.
    pub fn row<S: AsRef<str>>(&mut self, fields: &[S]) {
        assert_eq!(fields.len(), self.columns, "row width must match the header");
        self.text.push_str(&fields.iter().map(|f| f.as_ref()).collect::<Vec<_>>().join(","));
        self.text.push('\n');
        self.rows += 1;
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub subcommand: String,
    pub model: Option<String>,
    pub parameters: BTreeMap<String, String>,
    pub output_rows: usize,
    pub output_sha256: String,
    /// Command-specific results: suprema, coverage, check verdicts.
    pub results: BTreeMap<String, Value>,
    pub version: String,
}

impl Manifest {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut c = Csv::new(&["a", "b"]);
        c.row(&["1", "2"]);
        assert_eq!(c.as_str(), "a,b\n1,2\n");
        assert_eq!(c.rows(), 1);
    }

    #[test]
    fn known_digest() {
        assert_eq!(sha256_hex(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}
