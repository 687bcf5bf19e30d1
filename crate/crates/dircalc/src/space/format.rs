//! JSON space file format:
//! `{version, kind, params, h, vertices: [{id, mu}], edges: [{u, v, w, len}]}`
//! with dense 0-based vertex ids. The loader validates ids, positivity,
//! symmetry (edges are stored once per unordered pair) and connectivity.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{DirichletSpace, Edge};
use crate::error::{Error, Result};

pub const SPACE_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceFile {
    pub version: u32,
    pub kind: String,
    pub params: serde_json::Value,
    pub h: f64,
    pub vertices: Vec<VertexRec>,
    pub edges: Vec<EdgeRec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexRec {
    pub id: usize,
    pub mu: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeRec {
    pub u: usize,
    pub v: usize,
    pub w: f64,
    pub len: f64,
}

impl SpaceFile {
    pub fn from_space(space: &DirichletSpace) -> Self {
        SpaceFile {
            version: SPACE_FORMAT_VERSION,
            kind: space.kind().to_string(),
            params: space.params().clone(),
            h: space.mesh(),
            vertices: (0..space.len())
                .map(|id| VertexRec { id, mu: space.measure(id) })
                .collect(),
            edges: space
                .edges()
                .iter()
                .map(|e| EdgeRec { u: e.u, v: e.v, w: e.w, len: e.len })
                .collect(),
        }
    }

    pub fn into_space(self) -> Result<DirichletSpace> {
        if self.version != SPACE_FORMAT_VERSION {
            return Err(Error::InvalidSpace(format!(
                "unsupported format version {} (expected {SPACE_FORMAT_VERSION})",
                self.version
            )));
        }
        let n = self.vertices.len();
        let mut mu = vec![0.0; n];
        let mut seen = vec![false; n];
        for v in &self.vertices {
            if v.id >= n || seen[v.id] {
                return Err(Error::InvalidSpace(format!(
                    "vertex ids must be dense 0-based integers; bad id {}",
                    v.id
                )));
            }
            seen[v.id] = true;
            mu[v.id] = v.mu;
        }
        let edges = self
            .edges
            .into_iter()
            .map(|e| Edge { u: e.u, v: e.v, w: e.w, len: e.len })
            .collect();
        DirichletSpace::new(self.kind, self.params, self.h, mu, edges)
    }
}

pub fn save_space(space: &DirichletSpace, path: impl AsRef<Path>) -> Result<()> {
    let file = SpaceFile::from_space(space);
    let mut bytes = serde_json::to_vec_pretty(&file)?;
    bytes.push(b'\n');
    std::fs::write(path, bytes)?;
    Ok(())
}

pub fn load_space(path: impl AsRef<Path>) -> Result<DirichletSpace> {
    let bytes = std::fs::read(path)?;
    let file: SpaceFile = serde_json::from_slice(&bytes)?;
    file.into_space()
}
