//! Finite Dirichlet spaces: weighted graphs carrying a vertex measure, a
//! conductance-based energy form, and a shortest-path metric.
//!
//! A space holds the discrete analog of (M, d, μ, ℰ): vertices with positive
//! measure `μ(x)`, symmetric conductances `w(x,y)` on edges, and per-edge
//! lengths that induce the metric. The generator
//!
//! ```text
//! (Lf)(x) = μ(x)⁻¹ Σ_y w(x,y) (f(x) − f(y))
//! ```
//!
//! is self-adjoint and nonnegative in the μ-weighted inner product, kills
//! constants, and satisfies ⟨Lf, g⟩_μ = ℰ(f, g) exactly. Strong locality of
//! the energy form only holds in the mesh → 0 limit; [`DirichletSpace::leibniz_defect`]
//! measures the O(h) failure on a fixed graph.

mod field;
mod format;
mod generate;

pub use field::Field;
pub use format::{load_space, save_space, SpaceFile};
pub use generate::{generate, GenParams};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
    pub len: f64,
}

#[derive(Debug, Clone, Copy)]
struct Neighbor {
    to: usize,
    w: f64,
    len: f64,
}

/// A finite weighted graph with vertex measure, conductances and edge lengths.
///
/// Immutable after construction; all operations are pure.
#[derive(Debug, Clone)]
pub struct DirichletSpace {
    kind: String,
    params: serde_json::Value,
    mesh: f64,
    mu: Vec<f64>,
    edges: Vec<Edge>,
    neighbors: Vec<Vec<Neighbor>>,
    /// Row-major n×n shortest-path distance matrix.
    dist: Vec<f64>,
    diameter: f64,
    total_measure: f64,
}

/// Closed metric ball together with its measure.
#[derive(Debug, Clone)]
pub struct Ball {
    pub center: usize,
    pub radius: f64,
    /// Member vertices, ascending by id.
    pub members: Vec<usize>,
    pub volume: f64,
}

/// Result of fitting the volume doubling exponent.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DoublingFit {
    /// sup over sampled (x, r) of V(x, 2r) / V(x, r).
    pub constant: f64,
    /// Least-squares slope of log V(x, r) against log r.
    pub exponent: f64,
    /// Max absolute residual of the log-log fit.
    pub residual: f64,
    pub points: usize,
}

impl DirichletSpace {
    /// Build a space from raw data, validating all type invariants.
    ///
    /// Edges may list a pair in any order and may repeat; duplicates are
    /// merged by summing conductances (the canonical reduction used by the
    /// n=2 torus, whose two parallel edges collapse into one of weight 2w).
    /// The shortest edge length among duplicates is kept.
    pub fn new(
        kind: impl Into<String>,
        params: serde_json::Value,
        mesh: f64,
        mu: Vec<f64>,
        raw_edges: Vec<Edge>,
    ) -> Result<Self> {
        let n = mu.len();
        if n == 0 {
            return Err(Error::InvalidSpace("no vertices".into()));
        }
        if !(mesh > 0.0) || !mesh.is_finite() {
            return Err(Error::InvalidSpace(format!("mesh {mesh} must be positive")));
        }
        for (i, &m) in mu.iter().enumerate() {
            if !(m > 0.0) || !m.is_finite() {
                return Err(Error::InvalidSpace(format!("measure mu[{i}] = {m} must be positive")));
            }
        }

        let mut merged: std::collections::BTreeMap<(usize, usize), (f64, f64)> =
            std::collections::BTreeMap::new();
        for e in &raw_edges {
            if e.u >= n || e.v >= n {
                return Err(Error::InvalidSpace(format!("edge ({}, {}) out of range", e.u, e.v)));
            }
            if e.u == e.v {
                return Err(Error::InvalidSpace(format!("self-loop at vertex {}", e.u)));
            }
            if !(e.w >= 0.0) || !e.w.is_finite() {
                return Err(Error::InvalidSpace(format!(
                    "conductance w({}, {}) = {} must be nonnegative",
                    e.u, e.v, e.w
                )));
            }
            if !(e.len > 0.0) || !e.len.is_finite() {
                return Err(Error::InvalidSpace(format!(
                    "edge length l({}, {}) = {} must be positive",
                    e.u, e.v, e.len
                )));
            }
            let key = (e.u.min(e.v), e.u.max(e.v));
            let entry = merged.entry(key).or_insert((0.0, f64::INFINITY));
            entry.0 += e.w;
            entry.1 = entry.1.min(e.len);
        }
        let edges: Vec<Edge> = merged
            .into_iter()
            .filter(|&(_, (w, _))| w > 0.0)
            .map(|((u, v), (w, len))| Edge { u, v, w, len })
            .collect();

        let mut neighbors = vec![Vec::new(); n];
        for e in &edges {
            neighbors[e.u].push(Neighbor { to: e.v, w: e.w, len: e.len });
            neighbors[e.v].push(Neighbor { to: e.u, w: e.w, len: e.len });
        }

        let total_measure: f64 = mu.iter().sum();
        let mut space = DirichletSpace {
            kind: kind.into(),
            params,
            mesh,
            mu,
            edges,
            neighbors,
            dist: Vec::new(),
            diameter: 0.0,
            total_measure,
        };
        space.check_connected()?;
        space.compute_distances();
        Ok(space)
    }

    fn check_connected(&self) -> Result<()> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        let mut count = 0usize;
        while let Some(x) = stack.pop() {
            if seen[x] {
                continue;
            }
            seen[x] = true;
            count += 1;
            for nb in &self.neighbors[x] {
                if !seen[nb.to] {
                    stack.push(nb.to);
                }
            }
        }
        if count != n {
            // Rough component count for the diagnostic.
            let mut components = 1usize;
            let mut seen2 = seen;
            for s in 0..n {
                if !seen2[s] {
                    components += 1;
                    let mut stack = vec![s];
                    while let Some(x) = stack.pop() {
                        if seen2[x] {
                            continue;
                        }
                        seen2[x] = true;
                        for nb in &self.neighbors[x] {
                            stack.push(nb.to);
                        }
                    }
                }
            }
            return Err(Error::Disconnected { components });
        }
        Ok(())
    }

    /// All-pairs shortest paths with edge lengths (Dijkstra per source).
    fn compute_distances(&mut self) {
        use std::cmp::Reverse;
        use std::collections::BinaryHeap;
        let n = self.len();
        let mut dist = vec![f64::INFINITY; n * n];
        for src in 0..n {
            let row = &mut dist[src * n..(src + 1) * n];
            row[src] = 0.0;
            let mut heap: BinaryHeap<Reverse<(OrderedF64, usize)>> = BinaryHeap::new();
            heap.push(Reverse((ordered(0.0), src)));
            while let Some(Reverse((d, x))) = heap.pop() {
                let d = d.0;
                if d > row[x] {
                    continue;
                }
                for nb in &self.neighbors[x] {
                    let nd = d + nb.len;
                    if nd < row[nb.to] {
                        row[nb.to] = nd;
                        heap.push(Reverse((ordered(nd), nb.to)));
                    }
                }
            }
        }
        self.diameter = dist.iter().cloned().fold(0.0, f64::max);
        self.dist = dist;
    }

    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn params(&self) -> &serde_json::Value {
        &self.params
    }

    /// Nominal refinement scale h.
    pub fn mesh(&self) -> f64 {
        self.mesh
    }

    pub fn measure(&self, x: usize) -> f64 {
        self.mu[x]
    }

    pub fn measures(&self) -> &[f64] {
        &self.mu
    }

    /// |M| = Σ_x μ(x).
    pub fn total_measure(&self) -> f64 {
        self.total_measure
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn distance(&self, x: usize, y: usize) -> f64 {
        self.dist[x * self.len() + y]
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// Vertices ordered by distance from `x` (ties by id), with distances.
    pub fn sorted_by_distance(&self, x: usize) -> Vec<(f64, usize)> {
        let n = self.len();
        let row = &self.dist[x * n..(x + 1) * n];
        let mut order: Vec<(f64, usize)> = row.iter().cloned().zip(0..n).collect();
        order.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        order
    }

    /// Closed ball {y : d(x,y) ≤ r}.
    pub fn ball(&self, x: usize, r: f64) -> Ball {
        let n = self.len();
        let row = &self.dist[x * n..(x + 1) * n];
        let mut members = Vec::new();
        let mut volume = 0.0;
        for (y, &d) in row.iter().enumerate() {
            if d <= r {
                members.push(y);
                volume += self.mu[y];
            }
        }
        Ball { center: x, radius: r, members, volume }
    }

    /// V(x, r), the measure of the closed ball.
    pub fn volume(&self, x: usize, r: f64) -> f64 {
        let n = self.len();
        let row = &self.dist[x * n..(x + 1) * n];
        row.iter().zip(&self.mu).filter(|(&d, _)| d <= r).map(|(_, &m)| m).sum()
    }

    /// μ-weighted inner product ⟨f, g⟩_μ.
    pub fn inner_mu(&self, f: &Field, g: &Field) -> f64 {
        f.as_slice()
            .iter()
            .zip(g.as_slice())
            .zip(&self.mu)
            .map(|((a, b), m)| a * b * m)
            .sum()
    }

    /// μ-weighted L^p norm; `p = f64::INFINITY` gives the sup norm.
    pub fn lp_norm(&self, f: &Field, p: f64) -> f64 {
        if p.is_infinite() {
            return f.as_slice().iter().fold(0.0, |acc, v| acc.max(v.abs()));
        }
        assert!(p >= 1.0, "lp_norm requires p >= 1");
        let s: f64 = f
            .as_slice()
            .iter()
            .zip(&self.mu)
            .map(|(v, m)| v.abs().powf(p) * m)
            .sum();
        s.powf(1.0 / p)
    }

    /// μ-average of f over the whole space.
    pub fn mean_mu(&self, f: &Field) -> f64 {
        self.inner_mu(f, &Field::ones(self.len())) / self.total_measure
    }

    /// Apply the generator: (Lf)(x) = μ(x)⁻¹ Σ_y w(x,y)(f(x) − f(y)).
    pub fn generator_apply(&self, f: &Field) -> Field {
        self.assert_field(f);
        let mut out = vec![0.0; self.len()];
        for (x, nbs) in self.neighbors.iter().enumerate() {
            let fx = f[x];
            let mut acc = 0.0;
            for nb in nbs {
                acc += nb.w * (fx - f[nb.to]);
            }
            out[x] = acc / self.mu[x];
        }
        Field::from(out)
    }

    /// ℰ(f, g) = ½ Σ_{x,y} w(x,y)(f(x) − f(y))(g(x) − g(y)).
    pub fn energy(&self, f: &Field, g: &Field) -> f64 {
        self.assert_field(f);
        self.assert_field(g);
        self.edges
            .iter()
            .map(|e| e.w * (f[e.u] - f[e.v]) * (g[e.u] - g[e.v]))
            .sum()
    }

    /// Carré du champ Γ(f,g)(x) = (2μ(x))⁻¹ Σ_y w(x,y)(f(x)−f(y))(g(x)−g(y)).
    pub fn carre_du_champ(&self, f: &Field, g: &Field) -> Field {
        self.assert_field(f);
        self.assert_field(g);
        let mut out = vec![0.0; self.len()];
        for e in &self.edges {
            let c = e.w * (f[e.u] - f[e.v]) * (g[e.u] - g[e.v]);
            out[e.u] += c;
            out[e.v] += c;
        }
        for (x, v) in out.iter_mut().enumerate() {
            *v /= 2.0 * self.mu[x];
        }
        Field::from(out)
    }

    /// Generalized gradient length |∇f| = √Γ(f,f).
    pub fn grad_len(&self, f: &Field) -> Field {
        let mut g = self.carre_du_champ(f, f);
        for v in g.as_mut_slice() {
            *v = v.max(0.0).sqrt();
        }
        g
    }

    /// max_x |Γ(fg,h) − fΓ(g,h) − gΓ(f,h)|(x).
    ///
    /// Zero in the strongly local (continuum) limit; O(mesh) on grid
    /// discretizations of smooth data.
    pub fn leibniz_defect(&self, f: &Field, g: &Field, h: &Field) -> f64 {
        let fg = f.pointwise_mul(g);
        let lhs = self.carre_du_champ(&fg, h);
        let gh = self.carre_du_champ(g, h);
        let fh = self.carre_du_champ(f, h);
        (0..self.len())
            .map(|x| (lhs[x] - f[x] * gh[x] - g[x] * fh[x]).abs())
            .fold(0.0, f64::max)
    }

    /// Fit doubling constant and homogeneous dimension over the given radii.
    pub fn doubling_fit(&self, radii: &[f64]) -> Result<DoublingFit> {
        if radii.is_empty() {
            return Err(Error::EmptyRadii);
        }
        let n = self.len();
        let mut constant: f64 = 0.0;
        let mut pts: Vec<(f64, f64)> = Vec::new();
        for &r in radii {
            for x in 0..n {
                let v = self.volume(x, r);
                let v2 = self.volume(x, 2.0 * r);
                if v > 0.0 {
                    constant = constant.max(v2 / v);
                    pts.push((r.ln(), v.ln()));
                }
            }
        }
        let (slope, _, residual) = crate::probes::fit::linear_fit(&pts);
        Ok(DoublingFit {
            constant,
            exponent: slope.max(0.0),
            residual,
            points: pts.len(),
        })
    }

    /// Symmetrized generator matrix A = D_μ^{1/2} L D_μ^{-1/2}, row-major.
    ///
    /// A is symmetric with the same spectrum as L; eigenvectors map back by
    /// e = D_μ^{-1/2} v.
    pub fn symmetrized_generator(&self) -> Vec<f64> {
        let n = self.len();
        let mut a = vec![0.0; n * n];
        for e in &self.edges {
            let c = e.w / (self.mu[e.u] * self.mu[e.v]).sqrt();
            a[e.u * n + e.v] -= c;
            a[e.v * n + e.u] -= c;
            a[e.u * n + e.u] += e.w / self.mu[e.u];
            a[e.v * n + e.v] += e.w / self.mu[e.v];
        }
        a
    }

    /// SHA-256 of the canonical serialized form; keys report provenance.
    pub fn content_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let file = SpaceFile::from_space(self);
        let bytes = serde_json::to_vec(&file).expect("space serialization cannot fail");
        let mut hasher = Sha256::new();
        hasher.update(&bytes);
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    fn assert_field(&self, f: &Field) {
        assert_eq!(
            f.len(),
            self.len(),
            "field length {} does not match vertex count {}",
            f.len(),
            self.len()
        );
    }
}

/// Total-order wrapper so f64 keys work in the Dijkstra heap.
fn ordered(x: f64) -> OrderedF64 {
    OrderedF64(x)
}

#[derive(PartialEq)]
struct OrderedF64(f64);

impl Eq for OrderedF64 {}

impl PartialOrd for OrderedF64 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrderedF64 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// The two-point space used throughout the unit tests: μ = (1,1), w₁₂ = 1.
#[cfg(test)]
pub(crate) fn two_point() -> DirichletSpace {
    DirichletSpace::new(
        "two_point",
        serde_json::json!({}),
        1.0,
        vec![1.0, 1.0],
        vec![Edge { u: 0, v: 1, w: 1.0, len: 1.0 }],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn two_point_generator() {
        let sp = two_point();
        let f = Field::from(vec![1.0, -1.0]);
        let lf = sp.generator_apply(&f);
        assert_eq!(lf.as_slice(), &[2.0, -2.0]);
    }

    #[test]
    fn generator_kills_constants() {
        let sp = generate(&GenParams::TorusGrid { d: 2, n: 5, h: 0.2 }).unwrap();
        let lf = sp.generator_apply(&Field::constant(3.7, sp.len()));
        for v in lf.as_slice() {
            assert_eq!(*v, 0.0);
        }
    }

    #[test]
    fn second_difference_on_grid() {
        // f(x) = x² on a 1-D grid with spacing h: interior (Lf)(x) = −2.
        let h = 0.1;
        let sp = generate(&GenParams::Path { n: 11, h }).unwrap();
        let f = Field::from((0..11).map(|i| (i as f64 * h).powi(2)).collect::<Vec<_>>());
        let lf = sp.generator_apply(&f);
        for x in 1..10 {
            assert!((lf[x] + 2.0).abs() < 1e-10, "interior Lf = {}", lf[x]);
        }
    }

    #[test]
    fn energy_two_point() {
        let sp = two_point();
        let f = Field::from(vec![1.0, -1.0]);
        assert_eq!(sp.energy(&f, &f), 4.0);
        assert_eq!(sp.energy(&Field::constant(2.0, 2), &Field::constant(2.0, 2)), 0.0);
    }

    #[test]
    fn carre_two_point() {
        let sp = two_point();
        let f = Field::from(vec![1.0, -1.0]);
        let g = sp.carre_du_champ(&f, &f);
        assert_eq!(g.as_slice(), &[2.0, 2.0]);
        // Integrates back to the energy.
        assert!((sp.inner_mu(&g, &Field::ones(2)) - 4.0).abs() < 1e-15);
    }

    #[test]
    fn leibniz_defect_cases() {
        let sp = two_point();
        let f = Field::from(vec![1.0, -1.0]);
        // Constants force the exact identity by bilinearity.
        assert!(sp.leibniz_defect(&Field::constant(2.0, 2), &f, &f) < 1e-14);
        // Graphs are not strongly local: same field everywhere gives a
        // positive defect (= 4 by hand).
        let d = sp.leibniz_defect(&f, &f, &f);
        assert!((d - 4.0).abs() < 1e-14, "defect {d}");
    }

    #[test]
    fn leibniz_defect_halves_with_mesh() {
        // f = g = h = x on a 1-D grid: defect is h/2, carried by the boundary.
        let defect_at = |h: f64| {
            let n = (1.0 / h).round() as usize + 1;
            let sp = generate(&GenParams::BoxGrid { d: 1, n, h }).unwrap();
            let f = Field::from((0..n).map(|i| i as f64 * h).collect::<Vec<_>>());
            sp.leibniz_defect(&f, &f, &f)
        };
        let d1 = defect_at(0.1);
        let d2 = defect_at(0.05);
        let ratio = d1 / d2;
        assert!((ratio - 2.0).abs() < 0.2, "ratio {ratio}");
    }

    #[test]
    fn metric_on_path() {
        let h = 0.25;
        let sp = generate(&GenParams::Path { n: 5, h }).unwrap();
        assert_eq!(sp.distance(0, 0), 0.0);
        assert!((sp.distance(0, 4) - 4.0 * h).abs() < 1e-15);
        assert!((sp.diameter() - 4.0 * h).abs() < 1e-15);
    }

    #[test]
    fn torus_volume_ratio() {
        // 2-D torus, shortest-path = l¹ metric: V(x,r) ≈ 2r², so the ratio of
        // volumes at radii 0.25 and 0.5 approaches 1/4.
        let n = 32;
        let sp = generate(&GenParams::TorusGrid { d: 2, n, h: 1.0 / n as f64 }).unwrap();
        let ratio = sp.volume(0, 0.25) / sp.volume(0, 0.5);
        assert!((ratio - 0.25).abs() < 0.05, "ratio {ratio}");
    }

    #[test]
    fn doubling_fit_torus() {
        let n = 32;
        let h = 1.0 / n as f64;
        let sp = generate(&GenParams::TorusGrid { d: 2, n, h }).unwrap();
        let radii: Vec<f64> = (0..8)
            .map(|k| 4.0 * h * ((sp.diameter() / 16.0) / (4.0 * h)).powf(k as f64 / 7.0))
            .collect();
        let fit = sp.doubling_fit(&radii).unwrap();
        assert!((fit.exponent - 2.0).abs() < 0.3, "nu {}", fit.exponent);
        assert!(fit.constant < 6.0);
    }

    #[test]
    fn doubling_fit_tree_exceeds_two() {
        let sp = generate(&GenParams::BinaryTree { depth: 8 }).unwrap();
        let radii: Vec<f64> = (1..=6).map(|k| k as f64).collect();
        let fit = sp.doubling_fit(&radii).unwrap();
        assert!(fit.exponent > 2.0, "tree nu {}", fit.exponent);
    }

    #[test]
    fn empty_radii_rejected() {
        let sp = two_point();
        assert!(matches!(sp.doubling_fit(&[]), Err(Error::EmptyRadii)));
    }

    #[test]
    fn disconnected_rejected() {
        let res = DirichletSpace::new(
            "bad",
            serde_json::json!({}),
            1.0,
            vec![1.0; 4],
            vec![Edge { u: 0, v: 1, w: 1.0, len: 1.0 }, Edge { u: 2, v: 3, w: 1.0, len: 1.0 }],
        );
        assert!(matches!(res, Err(Error::Disconnected { components: 2 })));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        /// Self-adjointness ⟨Lf,g⟩_μ = ⟨f,Lg⟩_μ = ℰ(f,g) on random fields.
        #[test]
        fn energy_identity(fv in proptest::collection::vec(-5.0f64..5.0, 25),
                           gv in proptest::collection::vec(-5.0f64..5.0, 25)) {
            let sp = generate(&GenParams::TorusGrid { d: 1, n: 25, h: 0.04 }).unwrap();
            let f = Field::from(fv);
            let g = Field::from(gv);
            let lf = sp.generator_apply(&f);
            let lg = sp.generator_apply(&g);
            let e = sp.energy(&f, &g);
            let scale = 1.0 + e.abs();
            prop_assert!((sp.inner_mu(&lf, &g) - e).abs() / scale < 1e-12);
            prop_assert!((sp.inner_mu(&f, &lg) - e).abs() / scale < 1e-12);
            // Γ integrates to the energy.
            let gamma = sp.carre_du_champ(&f, &g);
            let total = sp.inner_mu(&gamma, &Field::ones(sp.len()));
            prop_assert!((total - e).abs() / scale < 1e-12);
        }

        /// Pointwise Cauchy-Schwarz for the carré du champ.
        #[test]
        fn carre_cauchy_schwarz(fv in proptest::collection::vec(-5.0f64..5.0, 16),
                                gv in proptest::collection::vec(-5.0f64..5.0, 16)) {
            let sp = generate(&GenParams::TorusGrid { d: 2, n: 4, h: 0.25 }).unwrap();
            let f = Field::from(fv);
            let g = Field::from(gv);
            let gfg = sp.carre_du_champ(&f, &g);
            let gff = sp.carre_du_champ(&f, &f);
            let ggg = sp.carre_du_champ(&g, &g);
            for x in 0..sp.len() {
                prop_assert!(gfg[x].powi(2) <= gff[x] * ggg[x] + 1e-12);
            }
        }

        /// Metric axioms and ball monotonicity on sampled triples/radii.
        #[test]
        fn metric_and_balls(x in 0usize..36, y in 0usize..36, z in 0usize..36,
                            r1 in 0.0f64..1.2, r2 in 0.0f64..1.2) {
            let sp = generate(&GenParams::TorusGrid { d: 2, n: 6, h: 1.0 / 6.0 }).unwrap();
            prop_assert_eq!(sp.distance(x, x), 0.0);
            prop_assert!((sp.distance(x, y) - sp.distance(y, x)).abs() < 1e-15);
            prop_assert!(sp.distance(x, z) <= sp.distance(x, y) + sp.distance(y, z) + 1e-12);
            let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
            let small = sp.ball(x, lo);
            let big = sp.ball(x, hi);
            prop_assert!(small.members.iter().all(|m| big.members.contains(m)));
            prop_assert!(big.members.contains(&x));
            if hi >= sp.diameter() {
                prop_assert!((big.volume - sp.total_measure()).abs() < 1e-12);
            }
        }
    }
}
