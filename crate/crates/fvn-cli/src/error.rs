use fvn_aggregation::AggregationError;
use fvn_assr::CompileError;
use fvn_netdsl::ParseError;
use serde_json::json;
use std::path::PathBuf;
use thiserror::Error;

/// Anything that should stop a command with exit code 1. Everything here is
/// the caller's input being wrong, not a fault of the tool.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write `{path}`: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: {err}")]
    Parse { path: PathBuf, err: ParseError },
    #[error("`{path}` is neither a `net` model nor a `ts` model")]
    UnknownFormat { path: PathBuf },
    #[error("`{path}` is not a network; `{command}` needs a `net` model")]
    NotANetwork { path: PathBuf, command: &'static str },
    #[error("network `{name}` declares no blocks to aggregate")]
    NoBlocks { name: String },
    #[error("`{path}` is not a usable aggregate artifact: {why}")]
    BadAggregate { path: PathBuf, why: String },
    #[error("{0}")]
    BadArg(String),
    #[error(transparent)]
    Compile(#[from] CompileError),
    #[error(transparent)]
    Aggregation(#[from] AggregationError),
}

impl CliError {
    /// One-line JSON for stderr. Parse failures carry their location so
    /// callers can point at the offending line.
    pub fn stderr_json(&self) -> String {
        let mut v = json!({ "error": self.to_string() });
        if let CliError::Parse { err, .. } = self {
            v["line"] = err.line.into();
            v["col"] = err.col.into();
            if let Some(id) = &err.identifier {
                v["identifier"] = id.clone().into();
            }
        }
        v.to_string()
    }
}
