//! Space generators. Grid-like kinds use the calibration μ(x) = h^d,
//! w(x,y) = h^{d−2}, ℓ = h, so the generator approximates the Euclidean
//! Laplacian on [0,1]^d as h → 0.

use serde::{Deserialize, Serialize};

use super::{DirichletSpace, Edge};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GenParams {
    TorusGrid { d: usize, n: usize, h: f64 },
    BoxGrid { d: usize, n: usize, h: f64 },
    Path { n: usize, h: f64 },
    Dumbbell { d: usize, n: usize, neck: usize, h: f64 },
    BinaryTree { depth: usize },
    Sierpinski { level: usize },
}

impl GenParams {
    pub fn kind(&self) -> &'static str {
        match self {
            GenParams::TorusGrid { .. } => "torus_grid",
            GenParams::BoxGrid { .. } => "box_grid",
            GenParams::Path { .. } => "path",
            GenParams::Dumbbell { .. } => "dumbbell",
            GenParams::BinaryTree { .. } => "binary_tree",
            GenParams::Sierpinski { .. } => "sierpinski",
        }
    }

    /// Parameter object without the `kind` tag, as stored in space files.
    pub fn params_value(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("params serialize");
        v.as_object_mut().map(|o| o.remove("kind"));
        v
    }
}

pub fn generate(params: &GenParams) -> Result<DirichletSpace> {
    match *params {
        GenParams::TorusGrid { d, n, h } => lattice(params, d, n, h, true),
        GenParams::BoxGrid { d, n, h } => lattice(params, d, n, h, false),
        GenParams::Path { n, h } => lattice(params, 1, n, h, false),
        GenParams::Dumbbell { d, n, neck, h } => dumbbell(params, d, n, neck, h),
        GenParams::BinaryTree { depth } => binary_tree(params, depth),
        GenParams::Sierpinski { level } => sierpinski(params, level),
    }
}

fn validate_dims(d: usize, n: usize, h: f64) -> Result<()> {
    if d < 1 {
        return Err(Error::InvalidParam("dimension d must be >= 1".into()));
    }
    if n < 2 {
        return Err(Error::InvalidParam("side length n must be >= 2".into()));
    }
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::InvalidParam(format!("mesh h = {h} must be positive")));
    }
    if (n as f64).powi(d as i32) > 1e7 {
        return Err(Error::InvalidParam(format!("n^d = {} too large", (n as f64).powi(d as i32))));
    }
    Ok(())
}

/// d-dimensional lattice on n^d sites, periodic or not.
fn lattice(params: &GenParams, d: usize, n: usize, h: f64, periodic: bool) -> Result<DirichletSpace> {
    validate_dims(d, n, h)?;
    let total = n.pow(d as u32);
    let mu = vec![h.powi(d as i32); total];
    let w = h.powi(d as i32 - 2);
    let mut edges = Vec::new();
    for idx in 0..total {
        let coords = unrank(idx, d, n);
        for axis in 0..d {
            let mut next = coords.clone();
            if coords[axis] + 1 < n {
                next[axis] += 1;
            } else if periodic {
                next[axis] = 0;
            } else {
                continue;
            }
            edges.push(Edge { u: idx, v: rank(&next, n), w, len: h });
        }
    }
    DirichletSpace::new(params.kind(), params.params_value(), h, mu, edges)
}

fn rank(coords: &[usize], n: usize) -> usize {
    coords.iter().fold(0, |acc, &c| acc * n + c)
}

fn unrank(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut coords = vec![0; d];
    for i in (0..d).rev() {
        coords[i] = idx % n;
        idx /= n;
    }
    coords
}

/// Two d-dimensional blocks joined by a thin neck: the discrete stand-in for
/// a connected sum of two copies of R^d.
///
/// Block edges use the bulk calibration w = h^{d−2}; neck edges carry w = h^d
/// (a wire of sub-cell cross-section), which makes the bottleneck genuinely
/// degrade Poincaré constants as the blocks are refined.
fn dumbbell(params: &GenParams, d: usize, n: usize, neck: usize, h: f64) -> Result<DirichletSpace> {
    validate_dims(d, n, h)?;
    let block = n.pow(d as u32);
    let total = 2 * block + neck;
    let mut mu = vec![h.powi(d as i32); total];
    let w_bulk = h.powi(d as i32 - 2);
    let w_neck = h.powi(d as i32);
    let mut edges = Vec::new();
    for b in 0..2 {
        let off = b * block;
        for idx in 0..block {
            let coords = unrank(idx, d, n);
            for axis in 0..d {
                if coords[axis] + 1 < n {
                    let mut next = coords.clone();
                    next[axis] += 1;
                    edges.push(Edge { u: off + idx, v: off + rank(&next, n), w: w_bulk, len: h });
                }
            }
        }
    }
    // Attachment corners: last vertex of block 0, first vertex of block 1.
    let port_a = block - 1;
    let port_b = block;
    let neck_start = 2 * block;
    for k in 0..neck {
        mu[neck_start + k] = h.powi(d as i32);
    }
    let mut chain = Vec::with_capacity(neck + 2);
    chain.push(port_a);
    chain.extend((0..neck).map(|k| neck_start + k));
    chain.push(port_b);
    for pair in chain.windows(2) {
        edges.push(Edge { u: pair[0], v: pair[1], w: w_neck, len: h });
    }
    DirichletSpace::new(params.kind(), params.params_value(), h, mu, edges)
}

/// Complete binary tree with unit weights and lengths; exponential volume
/// growth, so doubling fails by construction.
fn binary_tree(params: &GenParams, depth: usize) -> Result<DirichletSpace> {
    if depth < 1 {
        return Err(Error::InvalidParam("tree depth must be >= 1".into()));
    }
    if depth > 20 {
        return Err(Error::InvalidParam("tree depth too large".into()));
    }
    let total = (1usize << (depth + 1)) - 1;
    let mu = vec![1.0; total];
    let mut edges = Vec::new();
    for parent in 0..total {
        for child in [2 * parent + 1, 2 * parent + 2] {
            if child < total {
                edges.push(Edge { u: parent, v: child, w: 1.0, len: 1.0 });
            }
        }
    }
    DirichletSpace::new(params.kind(), params.params_value(), 1.0, mu, edges)
}

/// Level-`level` Sierpinski gasket graph with the standard energy
/// renormalization w = (5/3)^level, self-similar vertex measure 3^{-level},
/// and edge length 2^{-level}. Supports sub-Gaussian heat kernel probing.
fn sierpinski(params: &GenParams, level: usize) -> Result<DirichletSpace> {
    if level > 9 {
        return Err(Error::InvalidParam("sierpinski level too large".into()));
    }
    let side = 1i64 << level;
    // Cells are upward triangles (a, b, size) in triangular-lattice
    // coordinates; recursion splits each into the three corner triangles.
    let mut cells = vec![(0i64, 0i64, side)];
    let mut unit_edges: Vec<((i64, i64), (i64, i64))> = Vec::new();
    while let Some((a, b, size)) = cells.pop() {
        if size == 1 {
            let p0 = (a, b);
            let p1 = (a + 1, b);
            let p2 = (a, b + 1);
            unit_edges.push((p0, p1));
            unit_edges.push((p0, p2));
            unit_edges.push((p1, p2));
        } else {
            let half = size / 2;
            cells.push((a, b, half));
            cells.push((a + half, b, half));
            cells.push((a, b + half, half));
        }
    }
    let mut ids = std::collections::BTreeMap::new();
    for (p, q) in &unit_edges {
        ids.entry(*p).or_insert(0usize);
        ids.entry(*q).or_insert(0usize);
    }
    for (next, (_, id)) in ids.iter_mut().enumerate() {
        *id = next;
    }
    let n = ids.len();
    let h = 0.5f64.powi(level as i32);
    let w = (5.0f64 / 3.0).powi(level as i32);
    let mu = vec![3.0f64.powi(-(level as i32)); n];
    let edges = unit_edges
        .into_iter()
        .map(|(p, q)| Edge { u: ids[&p], v: ids[&q], w, len: h })
        .collect();
    DirichletSpace::new(params.kind(), params.params_value(), h, mu, edges)
}
