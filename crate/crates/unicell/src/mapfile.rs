//! JSON map files: `{"darts": 2n, "alpha": [a0, ..., a_{2n-1}]}`.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;
use unicell_core::{Dart, MapError, RootedMap};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    darts: usize,
    alpha: Vec<Dart>,
}

#[derive(Debug, Error)]
pub enum MapFileError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("malformed map file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid map: {0}")]
    Invariant(#[from] MapError),
}

pub fn parse_map(text: &str) -> Result<RootedMap, MapFileError> {
    let file: MapFile = serde_json::from_str(text)?;
    Ok(RootedMap::from_alpha(file.darts, file.alpha)?)
}

pub fn map_to_json(m: &RootedMap) -> String {
    let file = MapFile { darts: m.dart_count(), alpha: m.alpha_slice().to_vec() };
    serde_json::to_string(&file).expect("plain integers serialize")
}

pub fn read_map(path: &Path) -> Result<RootedMap, MapFileError> {
    let text = fs::read_to_string(path).map_err(|source| MapFileError::Io { path: path.to_owned(), source })?;
    parse_map(&text)
}
