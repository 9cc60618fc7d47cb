use std::collections::BTreeMap;

use proptest::prelude::*;
use torus_decomp::format::parse;
use torus_decomp::search::enumerate_cycles;
use torus_decomp::special::{
    c6_decompose, c6_feasible, construct, feasibility, odd_decompose, wrapping_feasible,
    wrapping_numbers, FeasibilityVerdict, ImpossibleReason, NecessaryCondition,
};
use torus_decomp::{validate, CycleWalk, Decomposition, TorusDims};

fn dims(m: usize, n: usize) -> TorusDims {
    TorusDims::new(m, n).unwrap()
}

/// Net displacement of a walk lifted to the plane, measured in whole turns.
fn lifted_turns(c: &CycleWalk) -> (usize, usize, usize, usize) {
    let (m, n) = (c.dims().m() as i64, c.dims().n() as i64);
    let vs = c.vertices();
    let (mut y, mut z) = (0i64, 0i64);
    let (mut steps_v, mut steps_h) = (0i64, 0i64);
    for k in 0..vs.len() {
        let (a, b) = (vs[k], vs[(k + 1) % vs.len()]);
        let di = (b.i as i64 - a.i as i64).rem_euclid(m);
        let dj = (b.j as i64 - a.j as i64).rem_euclid(n);
        if dj == 0 {
            y += if di == 1 { 1 } else { -1 };
            steps_v += 1;
        } else {
            z += if dj == 1 { 1 } else { -1 };
            steps_h += 1;
        }
    }
    let (v, h) = ((y / m).abs(), (z / n).abs());
    (
        v as usize,
        h as usize,
        ((steps_v - m * v) / 2) as usize,
        ((steps_h - n * h) / 2) as usize,
    )
}

fn produced(pick: usize, size: usize) -> Option<Decomposition> {
    let s = 3 + size % 12;
    let k = 2 + size % 7;
    let d = match pick % 4 {
        0 => construct(2 * s * 3 * 2 / 3, dims(s, 6)),
        1 => construct(4, dims(2 * (2 + size % 5), 2 * (2 + size / 5 % 5))),
        2 => construct(4 * k, dims(4 * (1 + size % 3), 4 * (1 + size / 3 % 3))),
        _ => {
            let m = [3, 5, 7, 9][size % 4];
            odd_decompose(dims(m, m + 2 * (size % 2)))
        }
    };
    d.ok()
}

#[test]
fn table_of_wrapping_numbers() {
    let path = format!(
        "{}/tests/fixtures/wrapping_c16_c4xc6.txt",
        env!("CARGO_MANIFEST_DIR")
    );
    let d = parse(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert!(validate(&d).passed());
    let rows: BTreeMap<&str, (usize, usize, usize)> = (0..d.len())
        .map(|k| {
            let w = wrapping_numbers(&d.classes()[k]);
            assert_eq!(w.length(d.dims()), 16);
            (d.label(k).unwrap(), (w.v, w.h, w.ell()))
        })
        .collect();
    assert_eq!(rows["blue"], (1, 2, 0));
    assert_eq!(rows["red"], (2, 1, 1));
    assert_eq!(rows["yellow"], (1, 1, 3));
}

#[test]
fn six_cycle_constructions() {
    let mut count = 0;
    for m in 3..=24 {
        for n in 3..=24 {
            if c6_feasible(m, n) {
                let d = c6_decompose(dims(m, n)).unwrap();
                assert!(validate(&d).passed(), "{m}x{n}");
                assert_eq!(d.histogram(), BTreeMap::from([(6, m * n / 3)]), "{m}x{n}");
                count += 1;
            } else {
                assert!(c6_decompose(dims(m, n)).is_err());
            }
        }
    }
    assert!(count >= 12);
}

#[test]
fn odd_constructions() {
    for m in (3..=13).step_by(2) {
        for n in (m..2 * m).step_by(2) {
            let d = odd_decompose(dims(m, n)).unwrap();
            assert!(validate(&d).passed(), "{m}x{n}");
            assert_eq!(d.histogram(), BTreeMap::from([(n, 2 * m)]), "{m}x{n}");
        }
    }
    assert!(odd_decompose(dims(3, 7)).is_err());
    assert!(odd_decompose(dims(4, 5)).is_err());
}

#[test]
fn verdict_examples() {
    use FeasibilityVerdict::*;
    assert_eq!(
        feasibility(6, 8, 8),
        KnownImpossible(ImpossibleReason::SixCycleCharacterization)
    );
    assert_eq!(
        feasibility(4, 3, 6),
        KnownImpossible(ImpossibleReason::FourCycleOddSide)
    );
    assert_eq!(
        feasibility(5, 7, 10),
        KnownImpossible(ImpossibleReason::OddShorterThanSides)
    );
    assert_eq!(
        feasibility(40, 4, 5),
        NecessaryConditionsFail(NecessaryCondition::LongerThanVertexCount)
    );
    assert_eq!(
        feasibility(7, 4, 5),
        NecessaryConditionsFail(NecessaryCondition::DoesNotDivideEdgeCount)
    );
    assert_eq!(
        feasibility(40, 4, 15).to_string(),
        "CONSTRUCTIBLE (three-cycles)"
    );
    assert_eq!(feasibility(9, 7, 9).to_string(), "CONSTRUCTIBLE (odd)");
    assert_eq!(feasibility(9, 9, 7).to_string(), "CONSTRUCTIBLE (odd)");
    assert_eq!(
        feasibility(48, 12, 24).to_string(),
        "CONSTRUCTIBLE (four-phase)"
    );
    assert_eq!(feasibility(6, 6, 8).to_string(), "CONSTRUCTIBLE (c6)");
}

#[test]
fn constructible_verdicts_are_kept() {
    // Every positive verdict is checked by actually running the construction.
    let mut checked = 0;
    for m in 3..=16 {
        for n in 3..=16 {
            for k in 3..=2 * m * n {
                if let FeasibilityVerdict::ConstructibleHere(method) = feasibility(k, m, n) {
                    let d = construct(k, dims(m, n))
                        .unwrap_or_else(|e| panic!("{method} {k} {m}x{n}: {e}"));
                    let report = validate(&d);
                    assert!(report.passed(), "{method} {k} {m}x{n}: {report}");
                    assert_eq!(d.histogram(), BTreeMap::from([(k, 2 * m * n / k)]));
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 200, "{checked}");
}

#[test]
fn every_existing_cycle_passes_the_wrapping_filter() {
    for m in 3..=5 {
        for n in m..=5 {
            for k in 3..=m * n {
                if !enumerate_cycles(dims(m, n), k).is_empty() {
                    assert!(wrapping_feasible(k, m, n), "k={k} {m}x{n}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn wrapping_numbers_sum_to_the_torus(pick in 0usize..4, size in 0usize..64) {
        if let Some(d) = produced(pick, size) {
            let (m, n) = (d.dims().m(), d.dims().n());
            let (mut vert, mut horiz) = (0, 0);
            for c in d.classes() {
                let w = wrapping_numbers(c);
                prop_assert_eq!(w.length(d.dims()), c.len());
                prop_assert_eq!((w.v, w.h, w.l_v, w.l_h), lifted_turns(c));
                let back: Vec<_> = c.vertices().iter().rev().copied().collect();
                prop_assert_eq!(wrapping_numbers(&CycleWalk::new(d.dims(), back).unwrap()), w);
                vert += m * w.v + 2 * w.l_v;
                horiz += n * w.h + 2 * w.l_h;
            }
            prop_assert_eq!(vert, m * n);
            prop_assert_eq!(horiz, m * n);
        }
    }
}
