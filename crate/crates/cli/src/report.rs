use std::fmt;
use std::path::Path;
use std::time::Instant;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

/// Why a command stopped early, mapped onto the process exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Guard(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Guard(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Guard(m) => f.write_str(m),
        }
    }
}

impl From<flagsphere::Error> for Failure {
    fn from(e: flagsphere::Error) -> Self {
        match e {
            flagsphere::Error::FaceGuard { .. } | flagsphere::Error::Capacity(_) => {
                Failure::Guard(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

pub type CmdResult<T> = std::result::Result<T, Failure>;

/// A file read once, with its digest kept for the report.
pub struct InputFile {
    pub path: String,
    pub text: String,
    pub sha256: String,
}

pub fn read_input(path: &Path) -> CmdResult<InputFile> {
    let bytes = std::fs::read(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let sha256 = hex::encode(Sha256::digest(&bytes));
    let text = String::from_utf8(bytes)
        .map_err(|_| Failure::Usage(format!("{} is not UTF-8", path.display())))?;
    Ok(InputFile {
        path: path.display().to_string(),
        text,
        sha256,
    })
}

/// Report envelope shared by every JSON-emitting command.
pub struct Report {
    command: Vec<String>,
    inputs: Vec<Value>,
    started: Instant,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report {
            command,
            inputs: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn add_input(&mut self, f: &InputFile) {
        self.inputs
            .push(json!({ "path": f.path, "sha256": f.sha256 }));
    }

    /// Final JSON text. Timing is opt-in so that default output bytes are reproducible.
    pub fn finish(self, passed: bool, result: Value, timing: bool) -> String {
        let mut m = Map::new();
        m.insert("schema_version".into(), json!(SCHEMA_VERSION));
        m.insert("command".into(), json!(self.command));
        m.insert("inputs".into(), Value::Array(self.inputs));
        m.insert("passed".into(), json!(passed));
        m.insert("result".into(), result);
        if timing {
            m.insert(
                "timing_ms".into(),
                json!(self.started.elapsed().as_secs_f64() * 1e3),
            );
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

pub fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}
