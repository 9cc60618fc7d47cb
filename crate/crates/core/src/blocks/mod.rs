//! Decomposition of `C_m □ C_n` into three cycles of length `2mn/3`,
//! whenever 3 divides `m` or `n`.
//!
//! The torus is tiled by small colored blocks. Each block contributes red,
//! yellow and blue edges; after tiling, every color class is one cycle.

mod catalog;

use std::collections::BTreeMap;
use std::fmt;

use crate::cycle::CycleWalk;
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::{Edge, TorusDims};

use catalog::{Fix, CATALOG, CORRECTIONS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Yellow,
    Blue,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Yellow, Color::Blue];

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Yellow => "yellow",
            Color::Blue => "blue",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Edge between two offset positions, `(row, col)` relative to a block origin.
pub type OffsetEdge = ((i64, i64), (i64, i64));

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    edges: [Vec<OffsetEdge>; 3],
}

impl Block {
    pub fn edges(&self, color: Color) -> &[OffsetEdge] {
        &self.edges[color.index()]
    }

    /// Torus edges of one color with the block origin at `(row, col)`.
    pub fn instantiate(
        &self,
        dims: TorusDims,
        row: i64,
        col: i64,
        color: Color,
    ) -> Result<Vec<Edge>> {
        self.edges(color)
            .iter()
            .map(|&((a, b), (c, d))| {
                let u = dims.vertex(row + a, col + b);
                let v = dims.vertex(row + c, col + d);
                dims.edge(u, v).map_err(|_| {
                    Error::Internal(format!(
                        "block {} lists non-edge ({a},{b})({c},{d})",
                        self.name
                    ))
                })
            })
            .collect()
    }
}

fn parse_edge_list(text: &str) -> Result<Vec<OffsetEdge>> {
    let bad = |why: &str| Error::Internal(format!("block list {text:?}: {why}"));
    let mut nums = Vec::new();
    for tok in text.split(|c: char| !(c.is_ascii_digit() || c == '-')) {
        if !tok.is_empty() {
            nums.push(tok.parse::<i64>().map_err(|_| bad("bad number"))?);
        }
    }
    if nums.len() % 4 != 0 {
        return Err(bad("coordinate count is not a multiple of 4"));
    }
    Ok(nums
        .chunks(4)
        .map(|c| ((c[0], c[1]), (c[2], c[3])))
        .collect())
}

/// Load a catalog block with its corrections applied.
pub fn catalog_block(case: u8, name: &str) -> Result<Block> {
    let def = CATALOG
        .iter()
        .find(|b| b.case == case && b.name == name)
        .ok_or_else(|| Error::Internal(format!("no block {name} for case {case}")))?;
    let mut edges: [Vec<OffsetEdge>; 3] = Default::default();
    for color in Color::ALL {
        let raw = match color {
            Color::Red => def.red,
            Color::Yellow => def.yellow,
            Color::Blue => def.blue,
        };
        let mut text = raw.to_string();
        let mut extra = Vec::new();
        for c in CORRECTIONS
            .iter()
            .filter(|c| c.case == case && c.name == name && c.color == color)
        {
            match c.fix {
                Fix::Add(more) => extra.push(more),
                Fix::Replace { from, to } => {
                    if !text.contains(from) {
                        return Err(Error::Internal(format!("correction target {from} missing")));
                    }
                    text = text.replacen(from, to, 1);
                }
            }
        }
        let mut list = parse_edge_list(&text)?;
        if def.transposed {
            list = list
                .into_iter()
                .map(|((a, b), (c, d))| ((b, a), (d, c)))
                .collect();
        }
        for more in extra {
            list.extend(parse_edge_list(more)?);
        }
        edges[color.index()] = list;
    }
    Ok(Block {
        name: format!("{case}.{name}"),
        rows: def.rows,
        cols: def.cols,
        edges,
    })
}

fn strip_block(n: usize) -> Block {
    Block {
        name: "6.C".into(),
        rows: 2,
        cols: n,
        edges: catalog::case6_strip(n),
    }
}

/// Which of the seven tilings applies, with its size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseId {
    pub case: u8,
    /// Built on the transposed torus and mirrored back.
    pub swapped: bool,
    pub big_m: usize,
    pub big_n: usize,
}

impl CaseId {
    /// Cycle length predicted by the tiling's closed form.
    pub fn cycle_length(&self) -> usize {
        let (mm, nn) = (self.big_m, self.big_n);
        match self.case {
            1 => 6 * nn + 4 * mm * nn,
            2 => 16 + 16 * nn,
            3 => 8,
            4 => 24 + 16 * nn,
            5 => 24 + 8 * mm,
            6 => 24 + 24 * nn + 8 * mm + 8 * mm * nn,
            7 => 12 + 24 * nn + 4 * mm + 8 * mm * nn,
            _ => unreachable!("cases are 1..=7"),
        }
    }
}

/// Case for `(m, n)` with `3 | n`, without transposing.
fn case_for(m: usize, n: usize) -> Option<CaseId> {
    if !n.is_multiple_of(3) || m < 3 || n < 3 {
        return None;
    }
    let id = |case, big_m, big_n| {
        Some(CaseId {
            case,
            swapped: false,
            big_m,
            big_n,
        })
    };
    if m % 2 == 1 {
        return id(1, (m - 3) / 2, n / 3);
    }
    if m == 4 {
        return match n {
            3 => id(3, 0, 0),
            n if n % 2 == 0 => id(2, 0, (n - 6) / 6),
            n => id(4, 0, (n - 9) / 6),
        };
    }
    let big_m = (m - 6) / 2;
    match n {
        6 => id(5, big_m, 0),
        n if n % 2 == 0 => id(6, big_m, (n - 6) / 6),
        n => id(7, big_m, (n - 3) / 6),
    }
}

pub fn select_case(dims: TorusDims) -> Result<CaseId> {
    let (m, n) = (dims.m(), dims.n());
    if let Some(id) = case_for(m, n) {
        return Ok(id);
    }
    case_for(n, m)
        .map(|id| CaseId {
            swapped: true,
            ..id
        })
        .ok_or_else(|| Error::Precondition(format!("neither side of {dims} is divisible by 3")))
}

struct Placement {
    block: Block,
    row: usize,
    col: usize,
}

fn layout(id: CaseId, m: usize, n: usize) -> Result<Vec<Placement>> {
    let (big_m, big_n) = (id.big_m, id.big_n);
    let at = |block: Block, row: usize, col: usize| Placement { block, row, col };
    let mut out = Vec::new();
    match id.case {
        1 => {
            let (a, b) = (catalog_block(1, "A")?, catalog_block(1, "B")?);
            for j in 0..big_n {
                out.push(at(a.clone(), 0, 3 * j));
                for i in 0..big_m {
                    out.push(at(b.clone(), 3 + 2 * i, 3 * j));
                }
            }
        }
        2 => {
            out.push(at(catalog_block(2, "A")?, 0, 0));
            let b = catalog_block(2, "B")?;
            for j in 0..big_n {
                out.push(at(b.clone(), 0, 6 + 6 * j));
            }
        }
        3 => out.push(at(catalog_block(3, "A")?, 0, 0)),
        4 => {
            let [b1, b2, b3] = ["B1", "B2", "B3"].map(|name| catalog_block(4, name));
            let (b1, b2, b3) = (b1?, b2?, b3?);
            for j in 0..big_n {
                out.push(at(b1.clone(), 0, 2 * j));
                out.push(at(b2.clone(), 0, 3 + 2 * big_n + 2 * j));
                out.push(at(b3.clone(), 0, 6 + 4 * big_n + 2 * j));
            }
            out.push(at(catalog_block(4, "A1")?, 0, 2 * big_n));
            out.push(at(catalog_block(4, "A2")?, 0, 3 + 4 * big_n));
            out.push(at(catalog_block(4, "A3")?, 0, 6 + 6 * big_n));
        }
        5 => {
            out.push(at(catalog_block(5, "A")?, 0, 0));
            let b = catalog_block(5, "B")?;
            for i in 0..big_m {
                out.push(at(b.clone(), 6 + 2 * i, 0));
            }
        }
        6 => {
            out.push(at(catalog_block(5, "A")?, 0, 0));
            let b = catalog_block(6, "B")?;
            for j in 0..big_n {
                out.push(at(b.clone(), 0, 6 + 6 * j));
            }
            let c = strip_block(n);
            for i in 0..big_m {
                out.push(at(c.clone(), 6 + 2 * i, 0));
            }
        }
        7 => {
            out.push(at(catalog_block(7, "A")?, 0, 0));
            let [b, c, d] = ["B", "C", "D"].map(|name| catalog_block(7, name));
            let (b, c, d) = (b?, c?, d?);
            for j in 0..big_n {
                out.push(at(b.clone(), 0, 3 + 6 * j));
            }
            for i in 0..big_m {
                out.push(at(c.clone(), 6 + 2 * i, 0));
                for j in 0..big_n {
                    out.push(at(d.clone(), 6 + 2 * i, 3 + 6 * j));
                }
            }
        }
        _ => unreachable!("cases are 1..=7"),
    }
    debug_assert!(out
        .iter()
        .all(|p| p.row + p.block.rows <= m && p.col + p.block.cols <= n));
    Ok(out)
}

fn assemble(dims: TorusDims, placements: &[Placement]) -> Result<Decomposition> {
    let mut color_of: BTreeMap<Edge, (Color, &str)> = BTreeMap::new();
    for p in placements {
        for color in Color::ALL {
            for e in p
                .block
                .instantiate(dims, p.row as i64, p.col as i64, color)?
            {
                match color_of.get(&e) {
                    Some(&(existing, _)) if existing != color => {
                        return Err(Error::ColorConflict {
                            edge: e,
                            block: p.block.name.clone(),
                            wanted: color.to_string(),
                            existing: existing.to_string(),
                        });
                    }
                    Some(_) => {}
                    None => {
                        color_of.insert(e, (color, &p.block.name));
                    }
                }
            }
        }
    }
    if let Some(e) = dims.edges().into_iter().find(|e| !color_of.contains_key(e)) {
        return Err(Error::Internal(format!(
            "tiling of {dims} leaves edge {e} uncolored"
        )));
    }
    let mut classes = Vec::new();
    for color in Color::ALL {
        let edges: Vec<Edge> = color_of
            .iter()
            .filter(|(_, (c, _))| *c == color)
            .map(|(e, _)| *e)
            .collect();
        let walk = CycleWalk::from_edges(dims, &edges)
            .map_err(|err| Error::Internal(format!("{color} class on {dims}: {err}")))?;
        classes.push(walk);
    }
    let labels = Color::ALL
        .iter()
        .map(|c| Some(c.name().to_string()))
        .collect();
    Decomposition::with_labels(dims, classes, labels)
}

/// Three cycles of length `2mn/3`, labelled red, yellow and blue.
pub fn decompose_three_cycles(dims: TorusDims) -> Result<Decomposition> {
    let id = select_case(dims)?;
    let work = if id.swapped { dims.transposed() } else { dims };
    let placements = layout(id, work.m(), work.n())?;
    let d = assemble(work, &placements)?;
    let d = if id.swapped { d.transposed() } else { d };
    crate::checked(d)
}
