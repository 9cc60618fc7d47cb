//! Plain-text decomposition files.
//!
//! ```text
//! torus 4 15
//! cycles 3
//! cycle 0 40 red: (0,0) (0,1) ...
//! ```
//!
//! Lines starting with `#` are comments. [`serialize`] writes the canonical
//! form, so equal decompositions produce identical bytes.

use std::fmt::Write as _;

use crate::cycle::CycleWalk;
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::{TorusDims, Vertex};

pub fn serialize(decomposition: &Decomposition) -> String {
    let d = decomposition.canonical();
    let mut out = String::new();
    let _ = writeln!(out, "torus {} {}", d.dims().m(), d.dims().n());
    let _ = writeln!(out, "cycles {}", d.len());
    for (k, c) in d.classes().iter().enumerate() {
        let _ = write!(out, "cycle {k} {}", c.len());
        if let Some(label) = d.label(k) {
            let _ = write!(out, " {label}");
        }
        out.push(':');
        for v in c.vertices() {
            let _ = write!(out, " ({},{})", v.i, v.j);
        }
        out.push('\n');
    }
    out
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| syntax(line, format!("expected {what}, found {tok:?}")))
}

fn parse_vertices(body: &str, line: usize) -> Result<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .ok_or_else(|| syntax(line, format!("expected '(' at {rest:?}")))?;
        let close = inner
            .find(')')
            .ok_or_else(|| syntax(line, "unclosed '('"))?;
        let (i, j) = inner[..close]
            .split_once(',')
            .ok_or_else(|| syntax(line, "vertex needs two coordinates"))?;
        out.push(Vertex::new(
            parse_usize(i.trim(), line, "row")?,
            parse_usize(j.trim(), line, "column")?,
        ));
        rest = inner[close + 1..].trim_start();
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<Decomposition> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing torus header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 || toks[0] != "torus" {
        return Err(syntax(ln, "expected `torus <m> <n>`"));
    }
    let m = parse_usize(toks[1], ln, "m")?;
    let n = parse_usize(toks[2], ln, "n")?;
    let dims = TorusDims::new(m, n)?;

    let (ln, header) = lines
        .next()
        .ok_or_else(|| syntax(ln + 1, "missing cycles header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 || toks[0] != "cycles" {
        return Err(syntax(ln, "expected `cycles <count>`"));
    }
    let count = parse_usize(toks[1], ln, "cycle count")?;

    let mut classes = Vec::with_capacity(count);
    let mut labels = Vec::with_capacity(count);
    let mut last_line = ln;
    for (ln, line) in lines {
        last_line = ln;
        let (head, body) = line
            .split_once(':')
            .ok_or_else(|| syntax(ln, "missing ':'"))?;
        let toks: Vec<&str> = head.split_whitespace().collect();
        if !(3..=4).contains(&toks.len()) || toks[0] != "cycle" {
            return Err(syntax(ln, "expected `cycle <index> <length> [<label>]:`"));
        }
        let index = parse_usize(toks[1], ln, "cycle index")?;
        if index != classes.len() {
            return Err(syntax(
                ln,
                format!("cycle index {index}, expected {}", classes.len()),
            ));
        }
        let length = parse_usize(toks[2], ln, "cycle length")?;
        let vertices = parse_vertices(body, ln)?;
        if vertices.len() != length {
            return Err(syntax(
                ln,
                format!(
                    "declared length {length}, found {} vertices",
                    vertices.len()
                ),
            ));
        }
        let walk = CycleWalk::new(dims, vertices).map_err(|e| Error::Semantic {
            walk: index,
            msg: e.to_string(),
        })?;
        classes.push(walk);
        labels.push(toks.get(3).map(|s| s.to_string()));
    }
    if classes.len() != count {
        return Err(syntax(
            last_line,
            format!("header declares {count} cycles, found {}", classes.len()),
        ));
    }
    Decomposition::with_labels(dims, classes, labels)
}
