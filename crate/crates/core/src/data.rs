//! Ledger data shipped with the crate. Each file can be overridden by a copy
//! of the same name in a directory chosen by the caller (the CLI uses
//! `KMODULI_DATA_DIR`).

use std::path::Path;

pub const PROFILES: &str = "profiles.json";
pub const TABLE1: &str = "table1.json";
pub const WALLS: &str = "walls.json";
pub const GOLDEN_TABLE1: &str = "golden/table1.json";
pub const GOLDEN_TABLE2: &str = "golden/table2.json";

const EMBEDDED: &[(&str, &str)] = &[
    (PROFILES, include_str!("../data/profiles.json")),
    (TABLE1, include_str!("../data/table1.json")),
    (WALLS, include_str!("../data/walls.json")),
    (GOLDEN_TABLE1, include_str!("../data/golden/table1.json")),
    (GOLDEN_TABLE2, include_str!("../data/golden/table2.json")),
];

#[derive(Debug, thiserror::Error)]
pub enum DataError {
    #[error("no bundled data file named {0:?}")]
    Unknown(String),
    #[error("reading {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parsing {name}: {msg}")]
    Parse { name: String, msg: String },
}

pub fn embedded(name: &str) -> Result<&'static str, DataError> {
    EMBEDDED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| DataError::Unknown(name.to_string()))
}

/// `dir/name` if that file exists, else the bundled copy.
pub fn load(dir: Option<&Path>, name: &str) -> Result<String, DataError> {
    let fallback = embedded(name)?;
    if let Some(d) = dir {
        let p = d.join(name);
        if p.is_file() {
            return std::fs::read_to_string(&p)
                .map_err(|source| DataError::Io { path: p.display().to_string(), source });
        }
    }
    Ok(fallback.to_string())
}

pub fn parse<T: serde::de::DeserializeOwned>(name: &str, text: &str) -> Result<T, DataError> {
    serde_json::from_str(text).map_err(|e| DataError::Parse { name: name.to_string(), msg: e.to_string() })
}
