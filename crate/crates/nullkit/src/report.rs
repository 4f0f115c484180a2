//! The machine-readable run report emitted by `--json`.
//!
//! Every field except `methods[].wall_ms` and `elapsed_ms` is a
//! deterministic function of the command line and the input files.

use nullkit_core::FieldSpec;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Bumped on any incompatible change to [`RunReport`].
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    AssertionFailed,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::AssertionFailed => 1,
            Status::InputError => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub literal: String,
    pub p: u32,
    pub e: u32,
    pub q: u32,
    /// Coefficients of the defining polynomial, low first; absent for
    /// prime fields.
    pub modulus: Option<Vec<u32>>,
}

impl From<&FieldSpec> for FieldInfo {
    fn from(f: &FieldSpec) -> Self {
        FieldInfo {
            literal: f.literal(),
            p: f.characteristic(),
            e: f.degree(),
            q: f.order(),
            modulus: f.modulus().map(<[u32]>::to_vec),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tower {
    pub coeffs: FieldInfo,
    pub points: FieldInfo,
    pub base: FieldInfo,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MethodRun {
    pub method: String,
    pub wall_ms: f64,
    pub quotient_rounds: usize,
    pub gb_size: usize,
    pub gb: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    /// The arguments after the program name.
    pub command: Vec<String>,
    pub status: Status,
    pub exit_code: i32,
    pub field: Option<Tower>,
    /// Command-specific payload.
    pub result: Value,
    pub methods: Vec<MethodRun>,
    pub assertions: Vec<Assertion>,
    pub error: Option<String>,
    pub elapsed_ms: f64,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> RunReport {
        RunReport {
            schema_version: SCHEMA_VERSION,
            tool: env!("CARGO_PKG_NAME").to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            status: Status::Ok,
            exit_code: 0,
            field: None,
            result: Value::Null,
            methods: Vec::new(),
            assertions: Vec::new(),
            error: None,
            elapsed_ms: 0.0,
        }
    }

    pub fn assert(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.assertions.push(Assertion {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
        if !passed && self.status == Status::Ok {
            self.set_status(Status::AssertionFailed);
        }
    }

    pub fn set_status(&mut self, status: Status) {
        self.status = status;
        self.exit_code = status.exit_code();
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports contain only plain data")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_assertion_sets_exit_code() {
        let mut r = RunReport::new(vec!["compare".into()]);
        r.assert("agree", true, "");
        assert_eq!(r.exit_code, 0);
        r.assert("agree", false, "colon differs");
        assert_eq!((r.status, r.exit_code), (Status::AssertionFailed, 1));
        let back: RunReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.schema_version, SCHEMA_VERSION);
    }

    #[test]
    fn field_info() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let info = FieldInfo::from(&f);
        assert_eq!((info.p, info.e, info.q), (2, 2, 4));
        assert_eq!(info.modulus, Some(vec![1, 1, 1]));
        assert_eq!(FieldInfo::from(&FieldSpec::prime(3).unwrap()).modulus, None);
    }
}
