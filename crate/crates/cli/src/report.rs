use std::fmt::Display;
use std::fs;

use serde_json::json;
use sha2::{Digest, Sha256};

use crate::CliError;

/// Reads input files and folds their bytes into one digest.
#[derive(Default)]
pub struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    pub fn read(&mut self, path: &str) -> Result<String, CliError> {
        let bytes = fs::read(path).map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))?;
        self.absorb(&bytes);
        String::from_utf8(bytes).map_err(|_| CliError::Io(format!("{path} is not UTF-8")))
    }

    pub fn absorb(&mut self, bytes: &[u8]) {
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(bytes);
    }

    pub fn digest(self) -> String {
        format!("sha256:{}", hex::encode(self.hasher.finalize()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub inputs: String,
    pub records: Vec<(String, String)>,
    pub verdicts: Vec<(String, bool)>,
}

impl Report {
    pub fn new(command: String) -> Self {
        Report { command, inputs: String::new(), records: Vec::new(), verdicts: Vec::new() }
    }

    pub fn record(&mut self, key: impl Into<String>, value: impl Display) {
        self.records.push((key.into(), value.to_string()));
    }

    pub fn verdict(&mut self, name: impl Into<String>, value: bool) {
        self.verdicts.push((name.into(), value));
    }

    pub fn exit_code(&self) -> i32 {
        if self.verdicts.iter().all(|(_, v)| *v) {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\ninputs: {}\n", self.command, self.inputs);
        for (k, v) in &self.records {
            if v.contains('\n') {
                out.push_str(&format!("{k}:\n"));
                for line in v.lines() {
                    out.push_str(&format!("  {line}\n"));
                }
            } else {
                out.push_str(&format!("{k}: {v}\n"));
            }
        }
        for (name, v) in &self.verdicts {
            out.push_str(&format!("verdict {name}: {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let records: Vec<_> = self.records.iter().map(|(k, v)| json!({ "key": k, "value": v })).collect();
        let verdicts: Vec<_> = self.verdicts.iter().map(|(k, v)| json!({ "name": k, "value": v })).collect();
        let doc = json!({
            "command": self.command,
            "inputs": self.inputs,
            "records": records,
            "verdicts": verdicts,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }
}
