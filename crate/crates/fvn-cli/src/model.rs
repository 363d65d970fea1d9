use crate::error::CliError;
use fvn_netdsl::{parse_network, parse_transition_system, Network, TransitionSystem};
use std::path::Path;

pub enum Model {
    Net(Network),
    Ts(TransitionSystem),
}

enum Kind {
    Net,
    Ts,
}

/// Read and parse a model file. The format comes from the extension when it
/// is `.net` or `.ts`, from the first keyword of the file otherwise.
pub fn load_model(path: &Path) -> Result<Model, CliError> {
    let src = std::fs::read_to_string(path)
        .map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
    let kind = match path.extension().and_then(|e| e.to_str()) {
        Some("net") => Some(Kind::Net),
        Some("ts") => Some(Kind::Ts),
        _ => sniff(&src),
    };
    match kind {
        Some(Kind::Net) => parse_network(&src)
            .map(Model::Net)
            .map_err(|err| CliError::Parse { path: path.to_path_buf(), err }),
        Some(Kind::Ts) => parse_transition_system(&src)
            .map(Model::Ts)
            .map_err(|err| CliError::Parse { path: path.to_path_buf(), err }),
        None => Err(CliError::UnknownFormat { path: path.to_path_buf() }),
    }
}

fn sniff(src: &str) -> Option<Kind> {
    for line in src.lines() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        return match t.split_whitespace().next() {
            Some("net") => Some(Kind::Net),
            Some("ts") => Some(Kind::Ts),
            _ => None,
        };
    }
    None
}

/// Transition-column ceiling for compiles: `FVN_SIZE_CAP` when set, the
/// library default otherwise.
pub fn size_cap() -> Result<usize, CliError> {
    match std::env::var("FVN_SIZE_CAP") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(CliError::BadArg(format!(
                "FVN_SIZE_CAP must be a positive integer, got `{s}`"
            ))),
        },
        Err(std::env::VarError::NotPresent) => Ok(fvn_assr::DEFAULT_MAX_COLS),
        Err(e) => Err(CliError::BadArg(format!("FVN_SIZE_CAP: {e}"))),
    }
}

/// File stem used to name artifacts.
pub fn stem(path: &Path) -> String {
    path.file_stem().and_then(|s| s.to_str()).unwrap_or("model").to_string()
}
