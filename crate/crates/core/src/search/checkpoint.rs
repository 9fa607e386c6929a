use super::{Catalog, SearchError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

pub(super) const VERSION: u32 = 1;

/// Resumable search state. Units are numbered in job order, then by prefix
/// bits; the prefix depth is fixed by the run that created the file.
#[derive(Debug, Serialize, Deserialize)]
pub(super) struct Checkpoint {
    pub version: u32,
    pub config_hash: String,
    pub prefix_depth: usize,
    pub completed: BTreeSet<usize>,
    pub catalog: Catalog,
}

impl Checkpoint {
    pub fn fresh(config_hash: String, n: usize, prefix_depth: usize) -> Checkpoint {
        Checkpoint { version: VERSION, config_hash, prefix_depth, completed: BTreeSet::new(), catalog: Catalog::new(n) }
    }

    pub fn load(path: &Path) -> Result<Checkpoint, SearchError> {
        let shown = path.display().to_string();
        let text = fs::read_to_string(path).map_err(|source| SearchError::Io { path: shown.clone(), source })?;
        let ck: Checkpoint =
            serde_json::from_str(&text).map_err(|e| SearchError::Corrupt { path: shown.clone(), reason: e.to_string() })?;
        if ck.version != VERSION {
            return Err(SearchError::Corrupt { path: shown, reason: format!("version {} != {VERSION}", ck.version) });
        }
        Ok(ck)
    }

    /// Writes to a sibling temporary file, then renames over the target.
    pub fn save(&self, path: &Path) -> Result<(), SearchError> {
        let shown = path.display().to_string();
        let io = |source| SearchError::Io { path: shown.clone(), source };
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let body = serde_json::to_vec(self).expect("checkpoint serializes");
        fs::write(&tmp, body).map_err(io)?;
        fs::rename(&tmp, path).map_err(io)
    }
}
