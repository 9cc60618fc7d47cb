use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::{Edge, TorusDims, Vertex};

/// A closed walk given by its vertex sequence; the closing edge is implicit.
///
/// Construction only checks that consecutive vertices are adjacent.
/// Simplicity is a property checked by [`crate::validate`], so malformed
/// walks read from a file can still be reported on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleWalk {
    dims: TorusDims,
    vertices: Vec<Vertex>,
}

impl CycleWalk {
    pub fn new(dims: TorusDims, vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::NotACycle("empty walk".into()));
        }
        for &v in &vertices {
            if !dims.contains(v) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    m: dims.m(),
                    n: dims.n(),
                });
            }
        }
        let len = vertices.len();
        for k in 0..len {
            let (a, b) = (vertices[k], vertices[(k + 1) % len]);
            if !dims.is_adjacent(a, b) {
                return Err(Error::NotAnEdge { u: a, v: b });
            }
        }
        Ok(CycleWalk { dims, vertices })
    }

    /// Trace the unique cycle formed by `edges`.
    pub fn from_edges(dims: TorusDims, edges: &[Edge]) -> Result<Self> {
        if edges.len() < 3 {
            return Err(Error::NotACycle(format!("only {} edges", edges.len())));
        }
        let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
        let mut seen = BTreeSet::new();
        for &e in edges {
            if !seen.insert(e) {
                return Err(Error::NotACycle(format!("edge {e} listed twice")));
            }
            adj.entry(e.u).or_default().push(e.v);
            adj.entry(e.v).or_default().push(e.u);
        }
        if let Some((v, _)) = adj
            .iter()
            .filter(|(_, ns)| ns.len() != 2)
            .min_by_key(|(v, _)| **v)
        {
            return Err(Error::NotACycle(format!(
                "vertex {v} does not have degree 2"
            )));
        }
        let start = *adj.keys().min().expect("non-empty");
        let mut walk = vec![start];
        let mut prev = start;
        let mut cur = adj[&start][0].min(adj[&start][1]);
        while cur != start {
            walk.push(cur);
            let ns = &adj[&cur];
            let next = if ns[0] == prev { ns[1] } else { ns[0] };
            prev = cur;
            cur = next;
        }
        if walk.len() != edges.len() {
            return Err(Error::NotACycle(format!(
                "edges split into several cycles (first has {} of {})",
                walk.len(),
                edges.len()
            )));
        }
        Ok(CycleWalk {
            dims,
            vertices: walk,
        })
    }

    pub fn dims(&self) -> TorusDims {
        self.dims
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Edges in walk order, including the closing edge.
    pub fn edges(&self) -> Vec<Edge> {
        let len = self.vertices.len();
        (0..len)
            .map(|k| {
                self.dims
                    .edge(self.vertices[k], self.vertices[(k + 1) % len])
                    .expect("adjacency checked on construction")
            })
            .collect()
    }

    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.edges().into_iter().collect()
    }

    /// Same cycle started at its smallest vertex and heading to the smaller neighbor.
    pub fn canonical(&self) -> CycleWalk {
        let len = self.vertices.len();
        if len == 0 {
            return self.clone();
        }
        let (start, _) = self
            .vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| **v)
            .expect("non-empty");
        let fwd = self.vertices[(start + 1) % len];
        let back = self.vertices[(start + len - 1) % len];
        let vertices = if fwd <= back {
            (0..len).map(|k| self.vertices[(start + k) % len]).collect()
        } else {
            (0..len)
                .map(|k| self.vertices[(start + len - k) % len])
                .collect()
        };
        CycleWalk {
            dims: self.dims,
            vertices,
        }
    }

    /// Same cycle up to rotation and reflection.
    pub fn same_cycle(&self, other: &CycleWalk) -> bool {
        self.dims == other.dims && self.canonical().vertices == other.canonical().vertices
    }

    /// Mirror across the main diagonal onto the transposed torus.
    pub fn transposed(&self) -> CycleWalk {
        CycleWalk {
            dims: self.dims.transposed(),
            vertices: self.vertices.iter().map(|v| v.transposed()).collect(),
        }
    }

    /// Translate every vertex by `(di, dj)`.
    pub fn shifted(&self, di: i64, dj: i64) -> CycleWalk {
        CycleWalk {
            dims: self.dims,
            vertices: self
                .vertices
                .iter()
                .map(|v| self.dims.vertex(v.i as i64 + di, v.j as i64 + dj))
                .collect(),
        }
    }
}
