use std::collections::BTreeMap;

use crate::cycle::CycleWalk;
use crate::error::{Error, Result};
use crate::graph::{Edge, TorusDims};

/// A list of cycles on one torus, each with an optional label.
///
/// Whether the cycles really partition the edge set is up to
/// [`crate::validate`]; constructors in this crate always validate before
/// returning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    dims: TorusDims,
    classes: Vec<CycleWalk>,
    labels: Vec<Option<String>>,
}

pub(crate) fn check_label(label: &str) -> Result<()> {
    if label.is_empty() || label.contains(':') || label.chars().any(char::is_whitespace) {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(())
}

impl Decomposition {
    pub fn new(dims: TorusDims, classes: Vec<CycleWalk>) -> Result<Self> {
        let labels = vec![None; classes.len()];
        Self::with_labels(dims, classes, labels)
    }

    pub fn with_labels(
        dims: TorusDims,
        classes: Vec<CycleWalk>,
        labels: Vec<Option<String>>,
    ) -> Result<Self> {
        if classes.len() != labels.len() {
            return Err(Error::Precondition(format!(
                "{} classes but {} labels",
                classes.len(),
                labels.len()
            )));
        }
        if let Some(c) = classes.iter().find(|c| c.dims() != dims) {
            return Err(Error::Precondition(format!(
                "class on {} inside a decomposition of {}",
                c.dims(),
                dims
            )));
        }
        for l in labels.iter().flatten() {
            check_label(l)?;
        }
        Ok(Decomposition {
            dims,
            classes,
            labels,
        })
    }

    pub fn dims(&self) -> TorusDims {
        self.dims
    }

    pub fn classes(&self) -> &[CycleWalk] {
        &self.classes
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> Option<&str> {
        self.labels.get(index).and_then(|l| l.as_deref())
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn into_parts(self) -> (TorusDims, Vec<CycleWalk>, Vec<Option<String>>) {
        (self.dims, self.classes, self.labels)
    }

    /// Cycle length -> number of classes with that length.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for c in &self.classes {
            *h.entry(c.len()).or_insert(0) += 1;
        }
        h
    }

    /// Class index owning each edge. Later classes win on overlap.
    pub fn edge_owner(&self) -> BTreeMap<Edge, usize> {
        let mut owner = BTreeMap::new();
        for (k, c) in self.classes.iter().enumerate() {
            for e in c.edges() {
                owner.insert(e, k);
            }
        }
        owner
    }

    pub fn transposed(&self) -> Decomposition {
        Decomposition {
            dims: self.dims.transposed(),
            classes: self.classes.iter().map(CycleWalk::transposed).collect(),
            labels: self.labels.clone(),
        }
    }

    /// Classes sorted by their smallest edge, each walk in canonical form.
    pub fn canonical(&self) -> Decomposition {
        let mut keyed: Vec<(Edge, CycleWalk, Option<String>)> = self
            .classes
            .iter()
            .zip(&self.labels)
            .map(|(c, l)| {
                let key = c.edges().into_iter().min().expect("walks are non-empty");
                (key, c.canonical(), l.clone())
            })
            .collect();
        keyed.sort_by(|a, b| {
            a.0.cmp(&b.0)
                .then_with(|| a.1.vertices().cmp(b.1.vertices()))
        });
        let (classes, labels) = keyed.into_iter().map(|(_, c, l)| (c, l)).unzip();
        Decomposition {
            dims: self.dims,
            classes,
            labels,
        }
    }

    /// Same set of cycles, ignoring class order, walk rotation/direction and labels.
    pub fn same_cycles(&self, other: &Decomposition) -> bool {
        if self.dims != other.dims || self.len() != other.len() {
            return false;
        }
        let a = self.canonical();
        let b = other.canonical();
        a.classes == b.classes
    }

    pub fn with_all_labels(mut self, labels: Vec<Option<String>>) -> Result<Self> {
        if labels.len() != self.classes.len() {
            return Err(Error::Precondition("label count mismatch".into()));
        }
        for l in labels.iter().flatten() {
            check_label(l)?;
        }
        self.labels = labels;
        Ok(self)
    }
}
