//! Matrix files: `{"ring": <name>, "n": <order>, "entries": [[..], ..]}` with
//! entries in the ring's JSON encoding.

use std::fs;
use std::path::Path;

use edet_core::matrix::decode_matrix;
use edet_core::{Matrix, Ring};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::rings::RingSpec;

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixFile {
    pub ring: String,
    pub n: usize,
    pub entries: Value,
}

pub fn read_json(path: &Path) -> CliResult<Value> {
    let io = |message: String| CliError::Io {
        path: path.display().to_string(),
        message,
    };
    let text = fs::read_to_string(path).map_err(|e| io(e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| io(format!("invalid JSON: {e}")))
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

impl MatrixFile {
    pub fn read(path: &Path) -> CliResult<Self> {
        Self::from_json(&read_json(path)?)
    }

    pub fn from_json(v: &Value) -> CliResult<Self> {
        let ring = v
            .get("ring")
            .and_then(Value::as_str)
            .ok_or_else(|| CliError::Input("matrix file needs a string `ring`".into()))?;
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| CliError::Input("matrix file needs an integer `n`".into()))?;
        let entries = v
            .get("entries")
            .cloned()
            .ok_or_else(|| CliError::Input("matrix file needs `entries`".into()))?;
        Ok(Self {
            ring: ring.to_string(),
            n: n as usize,
            entries,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({ "ring": self.ring, "n": self.n, "entries": self.entries })
    }

    pub fn spec(&self) -> CliResult<RingSpec> {
        self.ring.parse()
    }

    /// Decodes the entries in `ring`, checking the declared order.
    pub fn decode<R: Ring + ?Sized>(&self, ring: &R) -> CliResult<Matrix<R::Elem>> {
        let a = decode_matrix(ring, &self.entries)?;
        if a.order() != self.n {
            return Err(CliError::Input(format!(
                "declared n = {} but entries form a {}x{} matrix",
                self.n,
                a.order(),
                a.order()
            )));
        }
        Ok(a)
    }
}
