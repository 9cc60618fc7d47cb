//! Decompositions of `C_{4m} □ C_{4n}` into cycles of length `4k` for every
//! `k | 4mn`.
//!
//! Start from the checkerboard of 4-cycles, label its cells along diagonal
//! strands, then repeatedly apply the cycle combination operation: recolor a
//! 4-cycle whose two opposite edges lie in red cycles `R, R'` and whose other
//! two edges lie in blue cycles `B, B'`. Phase 1 joins `h` cells along each
//! strand; phase 2 joins `g` of the resulting cycles across strands.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_integer::Integer;

use crate::cycle::CycleWalk;
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::{Edge, TorusDims, Vertex};

/// The basic cycles of the grid: a unit square, or a full column/row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellCycle {
    /// Square with upper-left corner `(y, z)`.
    C4 { y: usize, z: usize },
    /// Column `z`; a 4-cycle only when `m = 4`.
    V { z: usize },
    /// Row `y`; a 4-cycle only when `n = 4`.
    H { y: usize },
}

impl CellCycle {
    pub fn vertices(&self, dims: TorusDims) -> Vec<Vertex> {
        match *self {
            CellCycle::C4 { y, z } => {
                let (y, z) = (y as i64, z as i64);
                vec![
                    dims.vertex(y, z),
                    dims.vertex(y, z + 1),
                    dims.vertex(y + 1, z + 1),
                    dims.vertex(y + 1, z),
                ]
            }
            CellCycle::V { z } => (0..dims.m())
                .map(|i| Vertex::new(i, z % dims.n()))
                .collect(),
            CellCycle::H { y } => (0..dims.n())
                .map(|j| Vertex::new(y % dims.m(), j))
                .collect(),
        }
    }

    pub fn walk(&self, dims: TorusDims) -> CycleWalk {
        CycleWalk::new(dims, self.vertices(dims)).expect("cell cycles are closed walks")
    }
}

/// The `mn/2` squares `C4(y,z)` with `y + z` even.
pub fn checkerboard(dims: TorusDims) -> Result<Decomposition> {
    let (m, n) = (dims.m(), dims.n());
    if m % 2 == 1 || n % 2 == 1 {
        return Err(Error::KnownImpossible(format!(
            "{dims} has an odd side, so it has no 4-cycle decomposition"
        )));
    }
    let classes = (0..m)
        .flat_map(|y| {
            (0..n)
                .filter(move |z| (y + z) % 2 == 0)
                .map(move |z| (y, z))
        })
        .map(|(y, z)| CellCycle::C4 { y, z }.walk(dims))
        .collect();
    crate::checked(Decomposition::new(dims, classes)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    R,
    B,
    S,
    T,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::R => "R",
            Family::B => "B",
            Family::S => "S",
            Family::T => "T",
        };
        f.write_str(s)
    }
}

/// A labelled square of the checkerboard on `C_{4m} □ C_{4n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabeledFour {
    pub family: Family,
    pub i: usize,
    pub j: usize,
    /// Upper-left corner, reduced on the torus.
    pub corner: Vertex,
}

impl LabeledFour {
    /// Vertices `(y,z), (y,z+1), (y+1,z+1), (y+1,z)`.
    pub fn vertices(&self, dims: TorusDims) -> [Vertex; 4] {
        let v = CellCycle::C4 {
            y: self.corner.i,
            z: self.corner.j,
        }
        .vertices(dims);
        [v[0], v[1], v[2], v[3]]
    }

    /// `[v, w, w', v']` for [`combine`]: `vw` and `v'w'` are the edges
    /// lying in red cells. Red cells sit on the vertical sides of an `S`
    /// square and on the horizontal sides of a `T` square.
    pub fn combine_square(&self, dims: TorusDims) -> [Vertex; 4] {
        let [a, b, c, d] = self.vertices(dims);
        match self.family {
            Family::T => [a, b, c, d],
            _ => [d, a, b, c],
        }
    }
}

/// Upper-left corner of a label, before reduction.
fn corner(family: Family, i: usize, j: usize, m: usize) -> (i64, i64) {
    let (i, j) = (i as i64, j as i64);
    let (t, odd) = (i / 2, i % 2 == 1);
    match family {
        Family::R if odd => (2 * t + 4 * j, 2 * t + 2),
        Family::R => (2 * t + 4 * j, 2 * t),
        Family::B if odd => (2 * t + 1 + 4 * j, 2 * t + 1),
        Family::B if i == 0 => (4 * m as i64 - 1 + 4 * j, 1),
        Family::B => (2 * t - 1 + 4 * j, 2 * t + 1),
        Family::S => (i + 4 * j, i + 1),
        Family::T => (i + 1 + 4 * j, i),
    }
}

/// Number of labels per strand and number of strands.
pub fn label_ranges(m: usize, n: usize) -> (usize, usize) {
    (4 * m.lcm(&n), m.gcd(&n))
}

/// Labels `R, B, S, T` with `i < 4 lcm(m,n)` and `j < gcd(m,n)`.
pub fn label_checkerboard(m: usize, n: usize) -> BTreeMap<(Family, usize, usize), LabeledFour> {
    let dims = TorusDims::new(4 * m, 4 * n).expect("quarter sizes are at least 1");
    let (imax, jmax) = label_ranges(m, n);
    let mut out = BTreeMap::new();
    for family in [Family::R, Family::B, Family::S, Family::T] {
        for i in 0..imax {
            for j in 0..jmax {
                let (y, z) = corner(family, i, j, m);
                let corner = dims.vertex(y, z);
                out.insert(
                    (family, i, j),
                    LabeledFour {
                        family,
                        i,
                        j,
                        corner,
                    },
                );
            }
        }
    }
    out
}

/// Mutable decomposition used while combining; removed classes leave a hole
/// so indices stay stable.
struct Workspace {
    dims: TorusDims,
    edges: Vec<Option<Vec<Edge>>>,
    vertices: Vec<HashSet<Vertex>>,
    labels: Vec<Option<String>>,
    owner: HashMap<Edge, usize>,
}

impl Workspace {
    fn new(d: &Decomposition) -> Result<Self> {
        let mut owner = HashMap::new();
        let mut edges = Vec::new();
        let mut vertices = Vec::new();
        for (k, c) in d.classes().iter().enumerate() {
            let es = c.edges();
            for &e in &es {
                if owner.insert(e, k).is_some() {
                    return Err(Error::Combine(format!("edge {e} lies in two classes")));
                }
            }
            edges.push(Some(es));
            vertices.push(c.vertices().iter().copied().collect());
        }
        Ok(Workspace {
            dims: d.dims(),
            edges,
            vertices,
            labels: d.labels().to_vec(),
            owner,
        })
    }

    fn class_of(&self, e: Edge) -> Result<usize> {
        self.owner
            .get(&e)
            .copied()
            .ok_or_else(|| Error::Combine(format!("edge {e} is in no class")))
    }

    /// Returns `(kept, removed)` index pairs for the red and blue merges.
    fn combine(&mut self, square: [Vertex; 4]) -> Result<[(usize, usize); 2]> {
        let [v, w, w2, v2] = square;
        let dims = self.dims;
        let distinct: HashSet<Vertex> = square.iter().copied().collect();
        if distinct.len() != 4 {
            return Err(Error::Combine("square repeats a vertex".into()));
        }
        let vw = dims.edge(v, w).map_err(|e| Error::Combine(e.to_string()))?;
        let ww2 = dims
            .edge(w, w2)
            .map_err(|e| Error::Combine(e.to_string()))?;
        let w2v2 = dims
            .edge(w2, v2)
            .map_err(|e| Error::Combine(e.to_string()))?;
        let v2v = dims
            .edge(v2, v)
            .map_err(|e| Error::Combine(e.to_string()))?;
        let (r1, r2) = (self.class_of(vw)?, self.class_of(w2v2)?);
        let (b1, b2) = (self.class_of(v2v)?, self.class_of(ww2)?);
        if r1 == r2 {
            return Err(Error::Combine(format!(
                "edges {vw} and {w2v2} lie in the same class {r1}"
            )));
        }
        if b1 == b2 {
            return Err(Error::Combine(format!(
                "edges {v2v} and {ww2} lie in the same class {b1}"
            )));
        }
        if r1 == b1 || r1 == b2 || r2 == b1 || r2 == b2 {
            return Err(Error::Combine(format!(
                "edge {vw} shares a class with a crossing edge"
            )));
        }
        for (a, b, e) in [(r1, r2, vw), (b1, b2, v2v)] {
            if self.vertices[a]
                .iter()
                .any(|x| self.vertices[b].contains(x))
            {
                return Err(Error::Combine(format!(
                    "classes through {e} share a vertex"
                )));
            }
        }
        let red = self.merge(r1, r2, [vw, w2v2], [v2v, ww2]);
        let blue = self.merge(b1, b2, [v2v, ww2], [vw, w2v2]);
        Ok([red, blue])
    }

    fn merge(&mut self, a: usize, b: usize, drop: [Edge; 2], add: [Edge; 2]) -> (usize, usize) {
        let (keep, gone) = (a.min(b), a.max(b));
        let moved = self.edges[gone].take().expect("live class");
        let moved_vertices = std::mem::take(&mut self.vertices[gone]);
        let kept = self.edges[keep].as_mut().expect("live class");
        kept.extend(moved);
        kept.retain(|e| !drop.contains(e));
        kept.extend(add);
        for e in kept.iter() {
            self.owner.insert(*e, keep);
        }
        self.vertices[keep].extend(moved_vertices);
        (keep, gone)
    }

    fn finish(self) -> Result<Decomposition> {
        let mut classes = Vec::new();
        let mut labels = Vec::new();
        for (es, label) in self.edges.into_iter().zip(self.labels) {
            if let Some(es) = es {
                classes.push(CycleWalk::from_edges(self.dims, &es)?);
                labels.push(label);
            }
        }
        Decomposition::with_labels(self.dims, classes, labels)
    }
}

/// Apply the cycle combination operation at `square = [v, w, w', v']`.
///
/// The classes through `vw` and `v'w'` merge into one cycle that uses
/// `vv'` and `ww'` instead; the classes through `vv'` and `ww'` merge the
/// other way. Each merged class takes the lower of its two indices and the
/// higher index is removed.
pub fn combine(d: &Decomposition, square: [Vertex; 4]) -> Result<Decomposition> {
    let mut ws = Workspace::new(d)?;
    ws.combine(square)?;
    ws.finish()
}

/// How `k` is split as `g * h` between the strands and the strand length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorSplit {
    pub g: usize,
    pub h: usize,
}

impl FactorSplit {
    pub fn is_admissible(&self, k: usize, m: usize, n: usize) -> bool {
        let (strand_len, strands) = label_ranges(m, n);
        self.g >= 1
            && self.g * self.h == k
            && strands % self.g == 0
            && strand_len % self.h == 0
            && self.g <= self.h
    }
}

/// Every admissible split, smallest `g` first.
pub fn factor_splits(k: usize, m: usize, n: usize) -> Vec<FactorSplit> {
    if k == 0 || m == 0 || n == 0 {
        return Vec::new();
    }
    (1..=k)
        .filter(|g| k.is_multiple_of(*g))
        .map(|g| FactorSplit { g, h: k / g })
        .filter(|s| s.is_admissible(k, m, n))
        .collect()
}

pub fn factor_split(k: usize, m: usize, n: usize) -> Result<FactorSplit> {
    factor_splits(k, m, n)
        .into_iter()
        .next()
        .ok_or(Error::NoFactorSplit { k, m, n })
}

/// A finished run together with the bookkeeping used by tests.
#[derive(Debug, Clone)]
pub struct FourPhaseRun {
    pub decomposition: Decomposition,
    pub split: FactorSplit,
    pub phase1_combines: usize,
    pub phase2_combines: usize,
    /// Cycle-length histogram between the two phases.
    pub after_phase1: BTreeMap<usize, usize>,
}

/// `C_{4k}`-decomposition of `C_{4m} □ C_{4n}`; classes are labelled
/// `R_{4k}^{α,β}` / `B_{4k}^{α,β}` after the cells they grew from.
pub fn decompose_4k(
    m: usize,
    n: usize,
    k: usize,
    split: Option<FactorSplit>,
) -> Result<Decomposition> {
    run_4k(m, n, k, split).map(|r| r.decomposition)
}

pub fn run_4k(m: usize, n: usize, k: usize, split: Option<FactorSplit>) -> Result<FourPhaseRun> {
    if m == 0 || n == 0 || k == 0 {
        return Err(Error::Precondition("m, n and k must be positive".into()));
    }
    if !(4 * m * n).is_multiple_of(k) {
        return Err(Error::NoFactorSplit { k, m, n });
    }
    let split = match split {
        Some(s) if s.is_admissible(k, m, n) => s,
        Some(s) => {
            return Err(Error::Precondition(format!(
                "split g={}, h={} is not admissible for k={k}, m={m}, n={n}",
                s.g, s.h
            )))
        }
        None => factor_split(k, m, n)?,
    };
    let FactorSplit { g, h } = split;
    let dims = TorusDims::new(4 * m, 4 * n)?;
    let labels = label_checkerboard(m, n);
    let (imax, jmax) = label_ranges(m, n);

    // Start from the R and B cells, remembering which labels each class holds.
    let mut classes = Vec::new();
    let mut members: Vec<Vec<(Family, usize, usize)>> = Vec::new();
    for (key, cell) in labels.range((Family::R, 0, 0)..(Family::S, 0, 0)) {
        classes.push(CycleWalk::new(dims, cell.vertices(dims).to_vec())?);
        members.push(vec![*key]);
    }
    let mut ws = Workspace::new(&Decomposition::new(dims, classes)?)?;

    let mut apply = |ws: &mut Workspace, family: Family, i: usize, j: usize| -> Result<()> {
        let square = labels[&(family, i, j)].combine_square(dims);
        let merged = ws
            .combine(square)
            .map_err(|e| Error::Internal(format!("{family}^{{{i},{j}}}: {e}")))?;
        for (keep, gone) in merged {
            let moved = std::mem::take(&mut members[gone]);
            members[keep].extend(moved);
        }
        Ok(())
    };

    let mut phase1 = 0;
    for j in 0..jmax {
        for i in 0..imax {
            if (i + 1) % h != 0 {
                apply(&mut ws, Family::S, i, j)?;
                phase1 += 1;
            }
        }
    }
    let after_phase1 = histogram(&ws);

    let mut phase2 = 0;
    for i in (0..imax).step_by(h) {
        for j in 0..jmax {
            if (j + 1) % g != 0 {
                apply(&mut ws, Family::T, i, j)?;
                phase2 += 1;
            }
        }
    }

    for (slot, label) in ws.labels.iter_mut().enumerate() {
        if ws.edges[slot].is_none() {
            continue;
        }
        *label = Some(lineage_label(&members[slot], g, h, 4 * k)?);
    }
    let decomposition = crate::checked(ws.finish()?)?;
    Ok(FourPhaseRun {
        decomposition,
        split,
        phase1_combines: phase1,
        phase2_combines: phase2,
        after_phase1,
    })
}

fn histogram(ws: &Workspace) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for es in ws.edges.iter().flatten() {
        *h.entry(es.len()).or_insert(0) += 1;
    }
    h
}

/// A final class contains exactly one phase-1 cycle from a strand `j` with
/// `g | j`; that cycle's block index and strand group name the class.
fn lineage_label(
    members: &[(Family, usize, usize)],
    g: usize,
    h: usize,
    len: usize,
) -> Result<String> {
    let mut names: Vec<(Family, usize, usize)> = members
        .iter()
        .filter(|(_, _, j)| j % g == 0)
        .map(|&(f, i, j)| (f, i / h, j / g))
        .collect();
    names.sort();
    names.dedup();
    match names.as_slice() {
        [(f, alpha, beta)] => Ok(format!("{f}_{len}^{{{alpha},{beta}}}")),
        _ => Err(Error::Internal(format!("class has lineage {names:?}"))),
    }
}
