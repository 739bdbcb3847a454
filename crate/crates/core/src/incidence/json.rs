use serde::{Deserialize, Serialize};

use super::IncidenceStructure;
use crate::error::{Error, Result};

/// The interchange file: `{"v":..,"r":..,"k":..,"lines":[[..],..]}`, with an
/// optional `"classes"` key (line indices) for affine planes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationFile {
    pub v: usize,
    pub r: usize,
    pub k: usize,
    pub lines: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<usize>>>,
}

impl ConfigurationFile {
    pub fn new(structure: &IncidenceStructure, r: usize, k: usize) -> Self {
        Self {
            v: structure.num_points(),
            r,
            k,
            lines: structure.lines().to_vec(),
            classes: None,
        }
    }

    /// Compact JSON in field order `v, r, k, lines[, classes]`.
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(self).expect("plain integers always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::MalformedStructure(format!("bad incidence JSON: {e}")))
    }

    /// The structure described by the file, canonicalized.
    pub fn structure(&self) -> Result<IncidenceStructure> {
        IncidenceStructure::new(self.v, self.lines.clone())
    }
}
