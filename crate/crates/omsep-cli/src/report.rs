//! Deterministic JSON report envelope: command, configuration, a content
//! hash of every input file, and the result. Keys are emitted sorted so
//! identical invocations produce byte-identical output.

use omsep_core::error::OmError;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub struct Report {
    command: &'static str,
    config: Value,
    input_hashes: Vec<Value>,
    result: Value,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: &'static str, config: Value) -> Report {
        Report {
            command,
            config,
            input_hashes: Vec::new(),
            result: Value::Null,
            exit_code: 0,
        }
    }

    /// Records a SHA-256 content hash of an input file.
    pub fn hash_file(&mut self, path: &std::path::Path) -> Result<(), OmError> {
        let bytes = std::fs::read(path)
            .map_err(|e| OmError::InvalidInput(format!("{}: {e}", path.display())))?;
        let digest = Sha256::digest(&bytes);
        self.input_hashes.push(json!({
            "file": path.display().to_string(),
            "sha256": hex::encode(digest),
        }));
        Ok(())
    }

    pub fn read_json<T: serde::de::DeserializeOwned>(
        &self,
        path: &std::path::Path,
    ) -> Result<T, OmError> {
        let bytes = std::fs::read(path)
            .map_err(|e| OmError::InvalidInput(format!("{}: {e}", path.display())))?;
        serde_json::from_slice(&bytes)
            .map_err(|e| OmError::InvalidInput(format!("{}: {e}", path.display())))
    }

    pub fn record_source(&mut self, description: Value) {
        self.config["source"] = description;
    }

    pub fn set_result(&mut self, result: Value) {
        self.result = result;
    }

    pub fn render(&self) -> String {
        let value = json!({
            "command": self.command,
            "config": self.config,
            "input_hashes": self.input_hashes,
            "result": self.result,
        });
        let mut out = serde_json::to_string_pretty(&value).expect("serializable report");
        out.push('\n');
        out
    }
}

/// Maps engine errors onto the documented exit codes: 2 for resource
/// limits, 3 for validation failures, 1 otherwise.
pub fn fail_exit(err: OmError) -> ! {
    let code = match &err {
        OmError::ResourceLimit(_) => 2,
        OmError::AxiomViolation(_) => 3,
        _ => 1,
    };
    eprintln!("error: {err}");
    std::process::exit(code);
}
