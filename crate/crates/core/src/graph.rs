//! The torus graph `C_m □ C_n` and its canonical edges.

use std::fmt;

use crate::error::{Error, Result};

/// Side lengths of a torus; both are at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusDims {
    m: usize,
    n: usize,
}

impl TorusDims {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 3 || n < 3 {
            return Err(Error::InvalidDims { m, n });
        }
        Ok(TorusDims { m, n })
    }

    /// Number of rows (length of the vertical cycles).
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of columns (length of the horizontal cycles).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.m * self.n
    }

    pub fn edge_count(&self) -> usize {
        2 * self.m * self.n
    }

    pub fn transposed(&self) -> TorusDims {
        TorusDims {
            m: self.n,
            n: self.m,
        }
    }

    /// Reduce signed coordinates onto the torus.
    pub fn vertex(&self, i: i64, j: i64) -> Vertex {
        Vertex {
            i: i.rem_euclid(self.m as i64) as usize,
            j: j.rem_euclid(self.n as i64) as usize,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.i < self.m && v.j < self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.m).flat_map(move |i| (0..self.n).map(move |j| Vertex { i, j }))
    }

    /// All `2mn` edges in canonical order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut edges: Vec<Edge> = self
            .vertices()
            .flat_map(|u| [self.down(u), self.right(u)])
            .collect();
        edges.sort();
        edges
    }

    pub fn neighbors(&self, v: Vertex) -> [Vertex; 4] {
        let (m, n) = (self.m, self.n);
        [
            Vertex::new((v.i + m - 1) % m, v.j),
            Vertex::new(v.i, (v.j + n - 1) % n),
            Vertex::new(v.i, (v.j + 1) % n),
            Vertex::new((v.i + 1) % m, v.j),
        ]
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).contains(&v)
    }

    /// The vertical edge `(i,j)-(i+1,j)`.
    pub fn down(&self, u: Vertex) -> Edge {
        Edge::raw(
            u,
            Vertex::new((u.i + 1) % self.m, u.j),
            Orientation::Vertical,
        )
    }

    /// The horizontal edge `(i,j)-(i,j+1)`.
    pub fn right(&self, u: Vertex) -> Edge {
        Edge::raw(
            u,
            Vertex::new(u.i, (u.j + 1) % self.n),
            Orientation::Horizontal,
        )
    }

    /// Canonical edge between two adjacent vertices, in either order.
    pub fn edge(&self, a: Vertex, b: Vertex) -> Result<Edge> {
        for v in [a, b] {
            if !self.contains(v) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    m: self.m,
                    n: self.n,
                });
            }
        }
        if a.j == b.j && (a.i + 1) % self.m == b.i {
            Ok(self.down(a))
        } else if a.j == b.j && (b.i + 1) % self.m == a.i {
            Ok(self.down(b))
        } else if a.i == b.i && (a.j + 1) % self.n == b.j {
            Ok(self.right(a))
        } else if a.i == b.i && (b.j + 1) % self.n == a.j {
            Ok(self.right(b))
        } else {
            Err(Error::NotAnEdge { u: a, v: b })
        }
    }

    /// Dense index in `0..2mn`, used for bitsets.
    pub fn edge_index(&self, e: Edge) -> usize {
        let base = 2 * (e.u.i * self.n + e.u.j);
        match e.orientation {
            Orientation::Horizontal => base,
            Orientation::Vertical => base + 1,
        }
    }

    pub fn edge_at(&self, index: usize) -> Edge {
        let u = Vertex::new(index / 2 / self.n, index / 2 % self.n);
        if index.is_multiple_of(2) {
            self.right(u)
        } else {
            self.down(u)
        }
    }

    /// True if the edge joins the last row to the first or the last column to the first.
    pub fn is_wrap(&self, e: Edge) -> bool {
        match e.orientation {
            Orientation::Vertical => e.u.i == self.m - 1,
            Orientation::Horizontal => e.u.j == self.n - 1,
        }
    }
}

impl fmt::Display for TorusDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}×{}", self.m, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub i: usize,
    pub j: usize,
}

impl Vertex {
    pub const fn new(i: usize, j: usize) -> Self {
        Vertex { i, j }
    }

    pub fn transposed(self) -> Vertex {
        Vertex {
            i: self.j,
            j: self.i,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Vertical,
    Horizontal,
}

/// An undirected torus edge stored as `u -> u + (1,0)` or `u -> u + (0,1)`.
///
/// Ordering is lexicographic on `(u, v)`, which is the canonical order used
/// when reporting the first offending edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub orientation: Orientation,
}

impl Edge {
    fn raw(u: Vertex, v: Vertex, orientation: Orientation) -> Self {
        Edge { u, v, orientation }
    }

    pub fn has(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}–{}", self.u, self.v)
    }
}

/// Canonical form of the edge between `u` and `v` on `dims`.
pub fn canonical_edge(u: Vertex, v: Vertex, dims: TorusDims) -> Result<Edge> {
    dims.edge(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_edge_is_stored_from_the_last_column() {
        let d = TorusDims::new(3, 6).unwrap();
        let e = canonical_edge(Vertex::new(0, 0), Vertex::new(0, 5), d).unwrap();
        assert_eq!(e.u, Vertex::new(0, 5));
        assert_eq!(e.v, Vertex::new(0, 0));
        assert_eq!(e.orientation, Orientation::Horizontal);
        assert!(d.is_wrap(e));
    }

    #[test]
    fn non_adjacent_pair_is_rejected() {
        let d = TorusDims::new(4, 4).unwrap();
        assert!(matches!(
            canonical_edge(Vertex::new(0, 0), Vertex::new(1, 1), d),
            Err(Error::NotAnEdge { .. })
        ));
    }

    #[test]
    fn small_dims_rejected() {
        assert!(TorusDims::new(2, 5).is_err());
        assert!(TorusDims::new(3, 3).is_ok());
    }

    #[test]
    fn edge_index_round_trips() {
        let d = TorusDims::new(3, 5).unwrap();
        let edges = d.edges();
        assert_eq!(edges.len(), 30);
        for e in edges {
            assert_eq!(d.edge_at(d.edge_index(e)), e);
        }
    }
}
