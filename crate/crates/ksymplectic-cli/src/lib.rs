//! File formats, command dispatch, and property suites for the `ksym`
//! command-line tool. Everything the binary does is exposed here so tests
//! can drive it in-process.

pub mod fixtures;
pub mod json;
pub mod run;
pub mod suite;

use std::fmt;

/// Failure classes, mapped onto exit codes by the binary: schema/IO problems
/// exit 2, domain errors exit 1.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input: unreadable file, bad JSON, or a schema violation.
    Schema(String),
    /// A structured error from the library.
    Domain(ksymplectic::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    /// The error document printed on standard output.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            CliError::Schema(msg) => serde_json::json!({
                "error": { "code": "parse", "message": msg }
            }),
            CliError::Domain(err) => {
                let mut body = serde_json::json!({
                    "code": err.code(),
                    "message": err.to_string(),
                });
                match err {
                    ksymplectic::Error::DegenerateCommonKernel { kernel } => {
                        body["kernel"] =
                            serde_json::to_value(json::subspace_to_doc(kernel)).unwrap();
                    }
                    ksymplectic::Error::ConstructionIncomplete { built } => {
                        body["built"] = serde_json::to_value(json::subspace_to_doc(built)).unwrap();
                    }
                    _ => {}
                }
                serde_json::json!({ "error": body })
            }
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Schema(msg) => write!(f, "{msg}"),
            CliError::Domain(err) => write!(f, "{err}"),
        }
    }
}

impl From<ksymplectic::Error> for CliError {
    fn from(err: ksymplectic::Error) -> Self {
        CliError::Domain(err)
    }
}
