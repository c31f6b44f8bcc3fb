use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{hj_expand, hj_value, int, Link, SeifertData};
use crate::{Error, Result};

/// Genus-0 plumbing graph: one integer weight (self-intersection) per
/// vertex and undirected edges between vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlumbingGraph {
    pub weights: Vec<i64>,
    pub edges: Vec<(usize, usize)>,
}

/// How a tree-shaped graph is laid out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphShape {
    /// Vertex indices from one end to the other.
    Bamboo(Vec<usize>),
    /// Central vertex and its legs, each listed outward from the center.
    Star { center: usize, legs: Vec<Vec<usize>> },
}

impl PlumbingGraph {
    /// A chain with the given weights, edges between consecutive vertices.
    pub fn bamboo(weights: &[i64]) -> Self {
        Self {
            weights: weights.to_vec(),
            edges: (1..weights.len()).map(|k| (k - 1, k)).collect(),
        }
    }

    /// Vertex 0 is the center; each leg's weights are listed outward.
    pub fn star(center: i64, legs: &[Vec<i64>]) -> Self {
        let mut weights = vec![center];
        let mut edges = Vec::new();
        for leg in legs {
            let mut prev = 0;
            for &w in leg {
                weights.push(w);
                let idx = weights.len() - 1;
                edges.push((prev, idx));
                prev = idx;
            }
        }
        Self { weights, edges }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        adj
    }

    pub fn intersection_matrix(&self) -> IntersectionMatrix {
        let n = self.len();
        let mut entries = vec![0i64; n * n];
        for (k, &w) in self.weights.iter().enumerate() {
            entries[k * n + k] = w;
        }
        for &(a, b) in &self.edges {
            entries[a * n + b] += 1;
            entries[b * n + a] += 1;
        }
        IntersectionMatrix { n, entries }
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        if n == 0 {
            return Err(Error::InvalidInput("plumbing graph has no vertices".into()));
        }
        for &(a, b) in &self.edges {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("self-loop at vertex {a}")));
            }
        }
        if self.edges.len() != n - 1 {
            return Err(Error::InvalidInput(format!(
                "graph with {n} vertices and {} edges is not a tree",
                self.edges.len()
            )));
        }
        // n - 1 edges and connected means a tree
        let adj = self.neighbors();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidInput("plumbing graph is not connected".into()));
        }
        Ok(())
    }

    /// Bamboo or star with three legs; anything else is rejected.
    pub fn shape(&self) -> Result<GraphShape> {
        self.validate()?;
        let adj = self.neighbors();
        let branch: Vec<usize> = (0..self.len()).filter(|&v| adj[v].len() > 2).collect();
        match branch.as_slice() {
            [] => {
                let start = (0..self.len()).find(|&v| adj[v].len() <= 1).expect("a tree has a leaf");
                Ok(GraphShape::Bamboo(walk(&adj, start, usize::MAX)))
            }
            [center] if adj[*center].len() == 3 => {
                let legs = adj[*center].iter().map(|&w| walk(&adj, w, *center)).collect();
                Ok(GraphShape::Star {
                    center: *center,
                    legs,
                })
            }
            _ => Err(Error::InvalidInput(
                "only bamboos and stars with three legs are supported".into(),
            )),
        }
    }

    /// Reads the graph as a link. Every vertex of valence at most two must
    /// have weight ≤ -2, except that a single `-1` vertex is the 3-sphere.
    pub fn to_link(&self) -> Result<Link> {
        let shape = self.shape()?;
        if self.weights == [-1] {
            return Link::lens(1, 0);
        }
        let adj = self.neighbors();
        for (v, &w) in self.weights.iter().enumerate() {
            if adj[v].len() <= 2 && w > -2 {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} has weight {w}; graphs must be in minimal normal form (weights <= -2 off the node)"
                )));
            }
        }
        match shape {
            GraphShape::Bamboo(path) => {
                let cf: Vec<i64> = path.iter().map(|&v| -self.weights[v]).collect();
                let (p, q) = hj_value(&cf);
                Link::lens(p, q)
            }
            GraphShape::Star { center, legs } => {
                let fibers: Vec<(i64, i64)> = legs
                    .iter()
                    .map(|leg| hj_value(&leg.iter().map(|&v| -self.weights[v]).collect::<Vec<_>>()))
                    .collect();
                Ok(Link::Seifert(SeifertData::new(-self.weights[center], &fibers)?))
            }
        }
    }

    /// Indented tree drawing rooted at the node (or the first end of a
    /// bamboo).
    pub fn render_tree(&self) -> String {
        let adj = self.neighbors();
        let root = match self.shape() {
            Ok(GraphShape::Star { center, .. }) => center,
            Ok(GraphShape::Bamboo(path)) => path[0],
            Err(_) => 0,
        };
        let mut out = String::new();
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some((v, parent, depth)) = stack.pop() {
            let _ = writeln!(out, "{}[{v}] {}", "  ".repeat(depth), self.weights[v]);
            for &w in adj[v].iter().rev() {
                if w != parent {
                    stack.push((w, v, depth + 1));
                }
            }
        }
        out
    }
}

/// Follows a path of valence ≤ 2 vertices from `start`, away from `from`.
fn walk(adj: &[Vec<usize>], start: usize, from: usize) -> Vec<usize> {
    let mut path = vec![start];
    let (mut prev, mut cur) = (from, start);
    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
        if adj[cur].len() > 2 || path.contains(&next) {
            break;
        }
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}

/// Symmetric integer matrix: weights on the diagonal, 1 per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntersectionMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.n + c]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|r| (0..self.n).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// `(M z)_i = z · E_i`
    pub fn apply(&self, z: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c) * z[c]).sum())
            .collect()
    }

    /// `z · z`
    pub fn self_intersection(&self, z: &[i64]) -> i64 {
        self.apply(z).iter().zip(z).map(|(a, b)| a * b).sum()
    }

    /// Negative definiteness by Gaussian elimination on `-M` without
    /// pivoting: a symmetric matrix is positive definite exactly when every
    /// pivot met this way is positive.
    pub fn is_negative_definite(&self) -> bool {
        let n = self.n;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|r| (0..n).map(|c| int(-self.get(r, c))).collect())
            .collect();
        for k in 0..n {
            if !a[k][k].is_positive() {
                return false;
            }
            for r in k + 1..n {
                if a[r][k].is_zero() {
                    continue;
                }
                let f = &a[r][k] / &a[k][k];
                for c in k..n {
                    let t = &f * &a[k][c];
                    a[r][c] -= t;
                }
            }
        }
        true
    }
}

pub fn negdef_check(g: &PlumbingGraph) -> bool {
    g.intersection_matrix().is_negative_definite()
}

/// Star-shaped plumbing of a link. Lens spaces give a bamboo (a single
/// `-1` vertex for the 3-sphere); Seifert data gives a node of weight `-b`
/// at index 0 with one leg per fiber, in fiber order.
pub fn seifert_to_plumbing(link: &Link) -> PlumbingGraph {
    match link {
        Link::Lens { p: 1, .. } => PlumbingGraph::bamboo(&[-1]),
        Link::Lens { p, q } => {
            let cf = hj_expand(*p, *q).expect("normalized lens space");
            PlumbingGraph::bamboo(&cf.iter().map(|a| -a).collect::<Vec<_>>())
        }
        Link::Seifert(s) => {
            let legs: Vec<Vec<i64>> = s
                .fibers
                .iter()
                .map(|&(p, q)| {
                    hj_expand(p, q)
                        .expect("normalized fiber")
                        .iter()
                        .map(|a| -a)
                        .collect()
                })
                .collect();
            PlumbingGraph::star(-s.b, &legs)
        }
    }
}
