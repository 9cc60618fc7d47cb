//! Full certificate check for a claimed decomposition.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::decomposition::Decomposition;
use crate::graph::{Edge, TorusDims, Vertex};

/// Why a single class is not a simple cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleDefect {
    TooShort(usize),
    RepeatedVertex(Vertex),
    RepeatedEdge(Edge),
}

impl fmt::Display for CycleDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleDefect::TooShort(len) => write!(f, "walk of length {len} is too short"),
            CycleDefect::RepeatedVertex(v) => write!(f, "vertex {v} visited twice"),
            CycleDefect::RepeatedEdge(e) => write!(f, "edge {e} used twice"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCheck {
    pub index: usize,
    pub length: usize,
    pub defect: Option<CycleDefect>,
}

/// First edge claimed by two classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SharedEdge {
    pub edge: Edge,
    pub first: usize,
    pub second: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub dims: TorusDims,
    pub classes: Vec<ClassCheck>,
    pub shared_edge: Option<SharedEdge>,
    pub missing_edge: Option<Edge>,
    pub histogram: BTreeMap<usize, usize>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.classes.iter().all(|c| c.defect.is_none())
            && self.shared_edge.is_none()
            && self.missing_edge.is_none()
    }

    /// First problem found, in the order: class defects, overlap, coverage.
    pub fn first_failure(&self) -> Option<String> {
        if let Some(c) = self.classes.iter().find(|c| c.defect.is_some()) {
            return Some(format!(
                "class {}: {}",
                c.index,
                c.defect.as_ref().expect("found")
            ));
        }
        if let Some(s) = self.shared_edge {
            return Some(format!(
                "edge {} is in classes {} and {}",
                s.edge, s.first, s.second
            ));
        }
        self.missing_edge
            .map(|e| format!("edge {e} is not covered"))
    }

    /// `{40×3}` style summary of the histogram.
    pub fn lengths_summary(&self) -> String {
        let parts: Vec<String> = self
            .histogram
            .iter()
            .map(|(len, count)| format!("{len}×{count}"))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_failure() {
            None => write!(
                f,
                "PASS: {} cycles, lengths {}, torus {}",
                self.classes.len(),
                self.lengths_summary(),
                self.dims
            ),
            Some(reason) => write!(f, "FAIL: {reason}"),
        }
    }
}

fn check_class(index: usize, walk: &crate::cycle::CycleWalk) -> ClassCheck {
    let length = walk.len();
    let defect = if length < 3 {
        Some(CycleDefect::TooShort(length))
    } else {
        let mut seen = BTreeSet::new();
        let repeated_vertex = walk
            .vertices()
            .iter()
            .copied()
            .filter(|v| !seen.insert(*v))
            .min();
        match repeated_vertex {
            Some(v) => Some(CycleDefect::RepeatedVertex(v)),
            None => {
                let mut seen = BTreeSet::new();
                walk.edges()
                    .into_iter()
                    .filter(|e| !seen.insert(*e))
                    .min()
                    .map(CycleDefect::RepeatedEdge)
            }
        }
    };
    ClassCheck {
        index,
        length,
        defect,
    }
}

/// Check that every class is a simple cycle and that the classes partition
/// the edge set. Never fails; problems are reported in the result.
pub fn validate(decomposition: &Decomposition) -> ValidationReport {
    let dims = decomposition.dims();
    let classes: Vec<ClassCheck> = decomposition
        .classes()
        .iter()
        .enumerate()
        .map(|(k, c)| check_class(k, c))
        .collect();

    let mut owner: HashMap<Edge, usize> = HashMap::new();
    let mut shared: Option<SharedEdge> = None;
    for (k, c) in decomposition.classes().iter().enumerate() {
        for e in c.edge_set() {
            if let Some(&first) = owner.get(&e) {
                if shared.is_none_or(|s| e < s.edge) {
                    shared = Some(SharedEdge {
                        edge: e,
                        first,
                        second: k,
                    });
                }
            } else {
                owner.insert(e, k);
            }
        }
    }
    let missing_edge = dims.edges().into_iter().find(|e| !owner.contains_key(e));

    ValidationReport {
        dims,
        classes,
        shared_edge: shared,
        missing_edge,
        histogram: decomposition.histogram(),
    }
}
