use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use torus_decomp::blocks::decompose_three_cycles;
use torus_decomp::format::{parse, serialize};
use torus_decomp::four_phase::checkerboard;
use torus_decomp::special::odd_decompose;
use torus_decomp::{canonical_edge, validate, CycleWalk, Decomposition, Error, TorusDims, Vertex};

/// Straightforward re-check of the decomposition rules using plain
/// coordinate pairs, independent of the library's edge type.
type Point = (usize, usize);

fn oracle_valid(d: &Decomposition) -> bool {
    let (m, n) = (d.dims().m(), d.dims().n());
    let mut count: BTreeMap<(Point, Point), usize> = BTreeMap::new();
    for c in d.classes() {
        let vs: Vec<Point> = c.vertices().iter().map(|v| (v.i, v.j)).collect();
        if vs.len() < 3 || vs.iter().collect::<BTreeSet<_>>().len() != vs.len() {
            return false;
        }
        for k in 0..vs.len() {
            let (a, b) = (vs[k], vs[(k + 1) % vs.len()]);
            let di = (a.0 + m - b.0) % m;
            let dj = (a.1 + n - b.1) % n;
            let adjacent =
                (dj == 0 && (di == 1 || di == m - 1)) || (di == 0 && (dj == 1 || dj == n - 1));
            if !adjacent {
                return false;
            }
            *count.entry((a.min(b), a.max(b))).or_default() += 1;
        }
    }
    count.len() == 2 * m * n && count.values().all(|&c| c == 1)
}

fn base(kind: u8, size: usize) -> Decomposition {
    let s = 3 + size % 6;
    match kind % 3 {
        0 => decompose_three_cycles(TorusDims::new(s, 6).unwrap()).unwrap(),
        1 => checkerboard(TorusDims::new(4 + 2 * (size % 3), 4 + 2 * (size / 3 % 3)).unwrap())
            .unwrap(),
        _ => {
            let m = [3, 5, 7][size % 3];
            odd_decompose(TorusDims::new(m, m + 2 * (size % 2)).unwrap()).unwrap()
        }
    }
}

/// Apply one of several edits; some keep the decomposition valid, some break it.
fn mutate(d: &Decomposition, kind: u8, pick: usize, shift: usize) -> Decomposition {
    let dims = d.dims();
    let mut classes = d.classes().to_vec();
    let k = pick % classes.len();
    match kind % 7 {
        0 => {}
        1 => {
            let mut vs = classes[k].vertices().to_vec();
            vs.reverse();
            classes[k] = CycleWalk::new(dims, vs).unwrap();
        }
        2 => {
            let mut vs = classes[k].vertices().to_vec();
            let len = vs.len();
            vs.rotate_left(shift % len);
            classes[k] = CycleWalk::new(dims, vs).unwrap();
        }
        3 => {
            classes.remove(k);
        }
        4 => {
            let c = classes[k].clone();
            classes.push(c);
        }
        5 => {
            // Out and back along a short path: closed but repeats vertices.
            let start = classes[k].vertices()[shift % classes[k].len()];
            let mut path = vec![start];
            for t in 0..(2 + shift % 3) {
                let last = *path.last().unwrap();
                let next = dims.neighbors(last)[(shift + t) % 4];
                if path.contains(&next) {
                    break;
                }
                path.push(next);
            }
            let mut walk = path.clone();
            walk.extend(path[1..path.len() - 1].iter().rev());
            if walk.len() >= 2 {
                classes.push(CycleWalk::new(dims, walk).unwrap());
            }
        }
        _ => {
            // Shift one class: almost always breaks exact coverage.
            classes[k] = classes[k].shifted(0, 1 + (shift % 2) as i64);
        }
    }
    Decomposition::new(dims, classes).unwrap()
}

proptest! {
    #[test]
    fn canonical_edge_ignores_endpoint_order(m in 3usize..12, n in 3usize..12, i in 0usize..12, j in 0usize..12, dir in 0usize..4) {
        let dims = TorusDims::new(m, n).unwrap();
        let u = Vertex::new(i % m, j % n);
        let v = dims.neighbors(u)[dir];
        let e = canonical_edge(u, v, dims).unwrap();
        prop_assert_eq!(e, canonical_edge(v, u, dims).unwrap());
        prop_assert!(e.has(u) && e.has(v));
        prop_assert_eq!(dims.edge_at(dims.edge_index(e)), e);
    }

    #[test]
    fn validate_agrees_with_plain_recheck(kind in 0u8..3, size in 0usize..9, edit in 0u8..7, pick in 0usize..64, shift in 0usize..64) {
        let d = mutate(&base(kind, size), edit, pick, shift);
        let report = validate(&d);
        prop_assert_eq!(report.passed(), oracle_valid(&d), "{}", report);
        if report.passed() {
            let total: usize = d.classes().iter().map(|c| c.len()).sum();
            prop_assert_eq!(total, 2 * d.dims().m() * d.dims().n());
        }
    }

    #[test]
    fn serialize_is_idempotent(kind in 0u8..3, size in 0usize..9, edit in 0u8..7, pick in 0usize..64, shift in 0usize..64) {
        let d = mutate(&base(kind, size), edit, pick, shift);
        let text = serialize(&d);
        let back = parse(&text).unwrap();
        prop_assert_eq!(serialize(&back), text);
        prop_assert!(back.same_cycles(&d));
        let canon = d.canonical();
        prop_assert_eq!(back.labels(), canon.labels());
    }
}

#[test]
fn validation_reports_the_first_problem() {
    let d = checkerboard(TorusDims::new(4, 4).unwrap()).unwrap();
    let mut classes = d.classes().to_vec();
    classes.pop();
    let report = validate(&Decomposition::new(d.dims(), classes).unwrap());
    assert!(!report.passed());
    assert!(report.shared_edge.is_none());
    assert!(report.missing_edge.is_some());
    assert!(report.to_string().starts_with("FAIL: edge"));
}

#[test]
fn pass_line_summarizes_lengths() {
    let d = decompose_three_cycles(TorusDims::new(4, 15).unwrap()).unwrap();
    assert_eq!(
        validate(&d).to_string(),
        "PASS: 3 cycles, lengths {40×3}, torus 4×15"
    );
}

#[test]
fn parse_rejects_bad_input() {
    assert!(matches!(
        parse("torus 2 5\ncycles 0\n"),
        Err(Error::InvalidDims { .. })
    ));
    let skip = "torus 3 3\ncycles 1\ncycle 0 3: (0,0) (0,1) (1,1)\n";
    assert!(matches!(parse(skip), Err(Error::Semantic { .. })));
    let count = "torus 3 3\ncycles 2\ncycle 0 3: (0,0) (0,1) (0,2)\n";
    assert!(parse(count).is_err());
    let length = "torus 3 3\ncycles 1\ncycle 0 4: (0,0) (0,1) (0,2)\n";
    assert!(parse(length).is_err());
    assert!(matches!(
        parse("torus 3 x\n"),
        Err(Error::Syntax { line: 1, .. })
    ));
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let text = "# note\ntorus 3 3\n\ncycles 1\n# another\ncycle 0 3 row: (0,0) (0,1) (0,2)\n";
    let d = parse(text).unwrap();
    assert_eq!(d.label(0), Some("row"));
    assert_eq!(
        serialize(&d),
        "torus 3 3\ncycles 1\ncycle 0 3 row: (0,0) (0,1) (0,2)\n"
    );
}
