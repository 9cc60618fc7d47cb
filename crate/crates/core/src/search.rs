//! Exhaustive search for `C_k`-decompositions of small tori.
//!
//! All simple `k`-cycles are enumerated once, then an exact cover of the edge
//! set is sought by backtracking, always branching on the uncovered edge with
//! the fewest remaining candidates. An exhausted tree is a proof that no
//! decomposition exists.

use crate::cycle::CycleWalk;
use crate::decomposition::Decomposition;
use crate::error::Result;
use crate::graph::{TorusDims, Vertex};
use crate::special::wrapping_feasible;

pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found {
        decomposition: Decomposition,
        nodes: u64,
    },
    ProvedImpossible {
        nodes: u64,
    },
    Inconclusive {
        nodes: u64,
    },
}

impl SearchOutcome {
    pub fn nodes(&self) -> u64 {
        match self {
            SearchOutcome::Found { nodes, .. }
            | SearchOutcome::ProvedImpossible { nodes }
            | SearchOutcome::Inconclusive { nodes } => *nodes,
        }
    }
}

/// Simple `k`-cycles of the torus as edge bitsets and vertex sequences.
struct Candidates {
    words: usize,
    k: usize,
    bits: Vec<u64>,
    edge_ids: Vec<u32>,
    walks: Vec<u32>,
}

impl Candidates {
    fn len(&self) -> usize {
        self.walks.len() / self.k
    }

    fn bits(&self, c: usize) -> &[u64] {
        &self.bits[c * self.words..(c + 1) * self.words]
    }

    fn edges(&self, c: usize) -> &[u32] {
        &self.edge_ids[c * self.k..(c + 1) * self.k]
    }

    fn walk(&self, dims: TorusDims, c: usize) -> CycleWalk {
        let n = dims.n();
        let vs = self.walks[c * self.k..(c + 1) * self.k]
            .iter()
            .map(|&x| Vertex::new(x as usize / n, x as usize % n))
            .collect();
        CycleWalk::new(dims, vs).expect("enumerated cycles are walks")
    }
}

struct Enumerator<'a> {
    dims: TorusDims,
    k: usize,
    adj: Vec<[u32; 4]>,
    dist: Vec<u16>,
    edge_of: &'a dyn Fn(u32, u32) -> u32,
    out: Candidates,
    path: Vec<u32>,
    on_path: Vec<bool>,
}

impl Enumerator<'_> {
    fn record(&mut self) {
        let words = self.out.words;
        let base = self.out.bits.len();
        self.out.bits.resize(base + words, 0);
        for t in 0..self.k {
            let (a, b) = (self.path[t], self.path[(t + 1) % self.k]);
            let e = (self.edge_of)(a, b);
            self.out.bits[base + e as usize / 64] |= 1 << (e % 64);
            self.out.edge_ids.push(e);
        }
        self.out.walks.extend_from_slice(&self.path);
    }

    fn extend(&mut self, start: u32) {
        let len = self.path.len();
        let cur = *self.path.last().expect("non-empty path");
        if len == self.k {
            if self.adj[cur as usize].contains(&start) && self.path[1] < cur {
                self.record();
            }
            return;
        }
        let nv = self.dims.vertex_count();
        for t in 0..4 {
            let next = self.adj[cur as usize][t];
            if next <= start || self.on_path[next as usize] {
                continue;
            }
            // After stepping to `next`, k - len edges remain to get home.
            if self.dist[next as usize * nv + start as usize] as usize > self.k - len {
                continue;
            }
            self.on_path[next as usize] = true;
            self.path.push(next);
            self.extend(start);
            self.path.pop();
            self.on_path[next as usize] = false;
        }
    }
}

fn enumerate(dims: TorusDims, k: usize) -> Candidates {
    let (m, n) = (dims.m(), dims.n());
    let nv = m * n;
    let id = |v: Vertex| (v.i * n + v.j) as u32;
    let mut adj = Vec::with_capacity(nv);
    for v in dims.vertices() {
        let mut ns = dims.neighbors(v).map(id);
        ns.sort_unstable();
        adj.push(ns);
    }
    let mut dist = vec![0u16; nv * nv];
    for a in 0..nv {
        for b in 0..nv {
            let di = (a / n).abs_diff(b / n);
            let dj = (a % n).abs_diff(b % n);
            dist[a * nv + b] = (di.min(m - di) + dj.min(n - dj)) as u16;
        }
    }
    let edge_of = move |a: u32, b: u32| {
        let va = Vertex::new(a as usize / n, a as usize % n);
        let vb = Vertex::new(b as usize / n, b as usize % n);
        dims.edge_index(dims.edge(va, vb).expect("adjacent")) as u32
    };
    let words = dims.edge_count().div_ceil(64);
    let mut en = Enumerator {
        dims,
        k,
        adj,
        dist,
        edge_of: &edge_of,
        out: Candidates {
            words,
            k,
            bits: Vec::new(),
            edge_ids: Vec::new(),
            walks: Vec::new(),
        },
        path: Vec::with_capacity(k),
        on_path: vec![false; nv],
    };
    if k >= 3 && k <= nv {
        for s in 0..nv as u32 {
            en.path.push(s);
            en.on_path[s as usize] = true;
            en.extend(s);
            en.on_path[s as usize] = false;
            en.path.pop();
        }
    }
    en.out
}

/// Every simple cycle of length `k`, each listed once, starting at its
/// smallest vertex.
pub fn enumerate_cycles(dims: TorusDims, k: usize) -> Vec<CycleWalk> {
    let c = enumerate(dims, k);
    (0..c.len()).map(|i| c.walk(dims, i)).collect()
}

struct Cover<'a> {
    cands: &'a Candidates,
    edge_count: usize,
    /// Canonical-order rank of each edge index, for tie-breaking.
    rank: Vec<usize>,
    nodes: u64,
    limit: u64,
    chosen: Vec<usize>,
    covered: Vec<u64>,
}

enum Step {
    Done,
    Dead,
    Abort,
}

impl Cover<'_> {
    fn disjoint(&self, c: usize) -> bool {
        self.cands
            .bits(c)
            .iter()
            .zip(&self.covered)
            .all(|(a, b)| a & b == 0)
    }

    fn solve(&mut self, alive: &[u32]) -> Step {
        let mut count = vec![0u32; self.edge_count];
        for &c in alive {
            for &e in self.cands.edges(c as usize) {
                count[e as usize] += 1;
            }
        }
        let mut best: Option<usize> = None;
        for e in 0..self.edge_count {
            if self.covered[e / 64] >> (e % 64) & 1 == 1 {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => (count[e], self.rank[e]) < (count[b], self.rank[b]),
            };
            if better {
                best = Some(e);
            }
        }
        let Some(edge) = best else {
            return Step::Done;
        };
        if count[edge] == 0 {
            return Step::Dead;
        }
        let branch: Vec<u32> = alive
            .iter()
            .copied()
            .filter(|&c| self.cands.edges(c as usize).contains(&(edge as u32)))
            .collect();
        for c in branch {
            self.nodes += 1;
            if self.nodes > self.limit {
                return Step::Abort;
            }
            let c = c as usize;
            for (w, b) in self.covered.iter_mut().zip(self.cands.bits(c)) {
                *w |= b;
            }
            self.chosen.push(c);
            let next: Vec<u32> = alive
                .iter()
                .copied()
                .filter(|&x| self.disjoint(x as usize))
                .collect();
            match self.solve(&next) {
                Step::Done => return Step::Done,
                Step::Abort => return Step::Abort,
                Step::Dead => {}
            }
            self.chosen.pop();
            for (w, b) in self.covered.iter_mut().zip(self.cands.bits(c)) {
                *w &= !b;
            }
        }
        Step::Dead
    }
}

/// Search for a `C_k`-decomposition, visiting at most `node_limit` branches.
pub fn search(dims: TorusDims, k: usize, node_limit: u64) -> Result<SearchOutcome> {
    let (m, n) = (dims.m(), dims.n());
    // Counting and the wrapping equation rule out many instances outright.
    if k < 3 || k > m * n || (2 * m * n) % k != 0 || !wrapping_feasible(k, m, n) {
        return Ok(SearchOutcome::ProvedImpossible { nodes: 0 });
    }
    let cands = enumerate(dims, k);
    let edge_count = dims.edge_count();
    let mut order: Vec<usize> = (0..edge_count).collect();
    order.sort_by_key(|&e| dims.edge_at(e));
    let mut rank = vec![0; edge_count];
    for (r, &e) in order.iter().enumerate() {
        rank[e] = r;
    }
    let mut cover = Cover {
        cands: &cands,
        edge_count,
        rank,
        nodes: 1,
        limit: node_limit,
        chosen: Vec::new(),
        covered: vec![0; cands.words],
    };
    let alive: Vec<u32> = (0..cands.len() as u32).collect();
    let outcome = match cover.solve(&alive) {
        Step::Done => {
            let classes = cover.chosen.iter().map(|&c| cands.walk(dims, c)).collect();
            let decomposition = crate::checked(Decomposition::new(dims, classes)?)?;
            SearchOutcome::Found {
                decomposition,
                nodes: cover.nodes,
            }
        }
        Step::Dead => SearchOutcome::ProvedImpossible { nodes: cover.nodes },
        Step::Abort => SearchOutcome::Inconclusive { nodes: node_limit },
    };
    Ok(outcome)
}
