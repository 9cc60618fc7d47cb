//! Acceptance checks, one line per criterion. Run with
//! `cargo test --test acceptance`; exits non-zero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use torus_decomp::blocks::{decompose_three_cycles, select_case};
use torus_decomp::format::{parse, serialize};
use torus_decomp::four_phase::{checkerboard, factor_splits, run_4k, FactorSplit};
use torus_decomp::render::{render_svg, RenderStyle};
use torus_decomp::search::{search, SearchOutcome, DEFAULT_NODE_LIMIT};
use torus_decomp::special::{
    c6_decompose, c6_feasible, feasibility, odd_decompose, wrapping_numbers, FeasibilityVerdict,
    ImpossibleReason,
};
use torus_decomp::{validate, Decomposition, TorusDims};

type Check = Result<String, String>;
type WrapRow<'a> = (Option<&'a str>, (usize, usize, usize));

fn dims(m: usize, n: usize) -> TorusDims {
    TorusDims::new(m, n).expect("valid dims")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn uniform(d: &Decomposition, len: usize, count: usize) -> Result<(), String> {
    let report = validate(d);
    ensure(report.passed(), || format!("{}: {report}", d.dims()))?;
    let want = BTreeMap::from([(len, count)]);
    ensure(report.histogram == want, || {
        format!(
            "{}: histogram {:?}, want {:?}",
            d.dims(),
            report.histogram,
            want
        )
    })
}

fn fixture(name: &str) -> Decomposition {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    parse(&std::fs::read_to_string(path).expect("fixture")).expect("fixture parses")
}

fn three_cycle_pairs() -> Vec<(usize, usize)> {
    let mut pairs = BTreeSet::new();
    for m in 3..=12 {
        for n in (3..=30).step_by(3) {
            pairs.insert((m, n));
            pairs.insert((n, m));
        }
    }
    pairs.into_iter().collect()
}

fn criterion_1() -> Check {
    let pairs = three_cycle_pairs();
    for &(m, n) in &pairs {
        let d = decompose_three_cycles(dims(m, n)).map_err(|e| format!("{m}x{n}: {e}"))?;
        uniform(&d, 2 * m * n / 3, 3)?;
    }
    for (m, n, file) in [
        (4, 15, "three_cycles_c4xc15.txt"),
        (10, 18, "three_cycles_c10xc18.txt"),
    ] {
        let built = decompose_three_cycles(dims(m, n)).map_err(|e| e.to_string())?;
        let drawn = fixture(file);
        uniform(&drawn, 2 * m * n / 3, 3)?;
        ensure(built.same_cycles(&drawn), || {
            format!("{m}x{n} differs from the drawn decomposition")
        })?;
    }
    Ok(format!(
        "{} tori, reference drawings 4x15 and 10x18 reproduced",
        pairs.len()
    ))
}

fn criterion_2() -> Check {
    let mut seen = BTreeSet::new();
    for (m, n) in three_cycle_pairs() {
        let id = select_case(dims(m, n)).map_err(|e| e.to_string())?;
        let d = decompose_three_cycles(dims(m, n)).map_err(|e| e.to_string())?;
        for c in d.classes() {
            ensure(c.len() == id.cycle_length(), || {
                format!(
                    "{m}x{n} case {}: length {} vs formula {}",
                    id.case,
                    c.len(),
                    id.cycle_length()
                )
            })?;
        }
        seen.insert(id.case);
    }
    ensure(seen.len() == 7, || format!("only cases {seen:?} exercised"))?;
    Ok("all 7 closed forms match".into())
}

fn criterion_3() -> Check {
    let mut runs = 0;
    for m in 1..=3 {
        for n in 1..=3 {
            for k in (1..=4 * m * n).filter(|k| (4 * m * n) % k == 0) {
                let splits = factor_splits(k, m, n);
                ensure(!splits.is_empty(), || format!("no split for {m},{n},{k}"))?;
                for s in splits {
                    let r =
                        run_4k(m, n, k, Some(s)).map_err(|e| format!("{m},{n},{k},{s:?}: {e}"))?;
                    uniform(&r.decomposition, 4 * k, 8 * m * n / k)?;
                    runs += 1;
                }
            }
        }
    }
    // Reference drawings on 12x24: C12 (h=3), C16 (h=4), C36 (g=h=3), C48 (g=3, h=4).
    let drawings = [
        (3, FactorSplit { g: 1, h: 3 }, 48, "R_12^{0,0}", None),
        (4, FactorSplit { g: 1, h: 4 }, 36, "R_16^{0,0}", None),
        (
            9,
            FactorSplit { g: 3, h: 3 },
            16,
            "R_36^{4,0}",
            Some((12, 48)),
        ),
        (
            12,
            FactorSplit { g: 3, h: 4 },
            12,
            "R_48^{0,0}",
            Some((16, 36)),
        ),
    ];
    for (k, split, count, label, phase1) in drawings {
        let r = run_4k(3, 6, k, Some(split)).map_err(|e| e.to_string())?;
        uniform(&r.decomposition, 4 * k, count)?;
        ensure(
            r.decomposition
                .labels()
                .iter()
                .flatten()
                .any(|l| l == label),
            || format!("4k={}: no class labelled {label}", 4 * k),
        )?;
        if let Some((len, cnt)) = phase1 {
            ensure(r.after_phase1 == BTreeMap::from([(len, cnt)]), || {
                format!("4k={}: phase 1 gave {:?}", 4 * k, r.after_phase1)
            })?;
        }
    }
    Ok(format!(
        "{runs} (m,n,k,split) runs, 12x24 reference drawings reproduced"
    ))
}

fn criterion_4() -> Check {
    for m in (4..=10).step_by(2) {
        for n in (4..=10).step_by(2) {
            uniform(
                &checkerboard(dims(m, n)).map_err(|e| e.to_string())?,
                4,
                m * n / 2,
            )?;
        }
    }
    let mut proved = 0;
    for m in 3..=16 {
        for n in 3..=16 {
            if 2 * m * n > 48 || (m % 2 == 0 && n % 2 == 0) {
                continue;
            }
            match search(dims(m, n), 4, DEFAULT_NODE_LIMIT).map_err(|e| e.to_string())? {
                SearchOutcome::ProvedImpossible { .. } => proved += 1,
                other => return Err(format!("C4 on {m}x{n}: {other:?}")),
            }
        }
    }
    Ok(format!(
        "checkerboards up to 10x10, {proved} odd-sided tori proved impossible"
    ))
}

fn criterion_5() -> Check {
    for (m, n) in [(3, 3), (6, 6), (6, 4), (4, 6), (6, 8), (6, 12)] {
        let d = c6_decompose(dims(m, n)).map_err(|e| format!("{m}x{n}: {e}"))?;
        uniform(&d, 6, 2 * m * n / 6)?;
    }
    for (m, n) in [(3, 4), (3, 6)] {
        match search(dims(m, n), 6, DEFAULT_NODE_LIMIT).map_err(|e| e.to_string())? {
            SearchOutcome::ProvedImpossible { .. } => {}
            other => return Err(format!("C6 on {m}x{n}: {other:?}")),
        }
    }
    let v = feasibility(6, 8, 8);
    ensure(
        v == FeasibilityVerdict::KnownImpossible(ImpossibleReason::SixCycleCharacterization),
        || format!("feasibility(6, 8, 8) = {v:?}"),
    )?;
    Ok("6 constructions valid, 3x4 and 3x6 proved impossible, 8x8 known impossible".into())
}

fn odd_pairs() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in (3..=13).step_by(2) {
        for n in (m..=13).step_by(2) {
            if n < 2 * m {
                out.push((m, n));
            }
        }
    }
    out
}

fn criterion_6() -> Check {
    let pairs = odd_pairs();
    for &(m, n) in &pairs {
        let d = odd_decompose(dims(m, n)).map_err(|e| format!("{m}x{n}: {e}"))?;
        uniform(&d, n, 2 * m)?;
    }
    ensure(pairs.contains(&(7, 9)) && pairs.contains(&(7, 11)), || {
        "reference sizes missing".into()
    })?;
    Ok(format!("{} odd tori", pairs.len()))
}

/// Everything produced in criteria 1-6.
fn produced() -> Result<Vec<Decomposition>, String> {
    let mut out = Vec::new();
    for (m, n) in three_cycle_pairs() {
        out.push(decompose_three_cycles(dims(m, n)).map_err(|e| e.to_string())?);
    }
    for m in 1..=3 {
        for n in 1..=3 {
            for k in (1..=4 * m * n).filter(|k| (4 * m * n) % k == 0) {
                for s in factor_splits(k, m, n) {
                    out.push(
                        run_4k(m, n, k, Some(s))
                            .map_err(|e| e.to_string())?
                            .decomposition,
                    );
                }
            }
        }
    }
    for m in (4..=10).step_by(2) {
        for n in (4..=10).step_by(2) {
            out.push(checkerboard(dims(m, n)).map_err(|e| e.to_string())?);
        }
    }
    for (m, n) in [(3, 3), (6, 6), (6, 4), (4, 6), (6, 8), (6, 12)] {
        out.push(c6_decompose(dims(m, n)).map_err(|e| e.to_string())?);
    }
    for (m, n) in odd_pairs() {
        out.push(odd_decompose(dims(m, n)).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn criterion_7(all: &[Decomposition]) -> Check {
    let mut cycles = 0;
    for d in all {
        let dm = d.dims();
        for c in d.classes() {
            let w = wrapping_numbers(c);
            ensure(w.length(dm) == c.len(), || {
                format!("{dm}: wrapping {w:?} for length {}", c.len())
            })?;
            cycles += 1;
        }
    }
    let fx = fixture("wrapping_c16_c4xc6.txt");
    let mut rows: Vec<WrapRow> = fx
        .classes()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let w = wrapping_numbers(c);
            (fx.label(k), (w.v, w.h, w.ell()))
        })
        .collect();
    rows.sort();
    let want = vec![
        (Some("blue"), (1, 2, 0)),
        (Some("red"), (2, 1, 1)),
        (Some("yellow"), (1, 1, 3)),
    ];
    ensure(rows == want, || format!("C16 table rows {rows:?}"))?;
    Ok(format!(
        "{cycles} cycles satisfy the wrapping equation, C16 table reproduced"
    ))
}

fn constructor_outputs_small() -> Result<Vec<(Decomposition, usize)>, String> {
    let mut out = Vec::new();
    for m in 3..=20 {
        for n in 3..=20 {
            if 2 * m * n > 60 {
                continue;
            }
            let dm = dims(m, n);
            if m % 3 == 0 || n % 3 == 0 {
                out.push((
                    decompose_three_cycles(dm).map_err(|e| e.to_string())?,
                    2 * m * n / 3,
                ));
            }
            if m % 2 == 0 && n % 2 == 0 {
                out.push((checkerboard(dm).map_err(|e| e.to_string())?, 4));
            }
            if c6_feasible(m, n) {
                out.push((c6_decompose(dm).map_err(|e| e.to_string())?, 6));
            }
            if m % 2 == 1 && n % 2 == 1 && m <= n && n < 2 * m {
                out.push((odd_decompose(dm).map_err(|e| e.to_string())?, n));
            }
            if m % 4 == 0 && n % 4 == 0 {
                let (qm, qn) = (m / 4, n / 4);
                for k in (1..=4 * qm * qn).filter(|k| (4 * qm * qn) % k == 0) {
                    for s in factor_splits(k, qm, qn) {
                        out.push((
                            run_4k(qm, qn, k, Some(s))
                                .map_err(|e| e.to_string())?
                                .decomposition,
                            4 * k,
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn criterion_8() -> Check {
    let outputs = constructor_outputs_small()?;
    let mut seen = BTreeSet::new();
    for (d, k) in &outputs {
        let dm = d.dims();
        if !seen.insert((dm, *k)) {
            continue;
        }
        let run = || match search(dm, *k, DEFAULT_NODE_LIMIT) {
            Ok(SearchOutcome::Found {
                decomposition,
                nodes,
            }) => Ok((serialize(&decomposition), nodes)),
            Ok(other) => Err(format!("{dm} k={k}: {other:?}")),
            Err(e) => Err(format!("{dm} k={k}: {e}")),
        };
        let first = run()?;
        let second = run()?;
        ensure(first == second, || {
            format!("{dm} k={k}: search is not deterministic")
        })?;
        let found = parse(&first.0).map_err(|e| e.to_string())?;
        uniform(&found, *k, 2 * dm.m() * dm.n() / k)?;
    }
    Ok(format!(
        "search agrees on {} (torus, k) instances",
        seen.len()
    ))
}

fn criterion_9(all: &[Decomposition]) -> Check {
    let style = RenderStyle::default();
    for d in all {
        let text = serialize(d);
        let back = parse(&text).map_err(|e| format!("{}: {e}", d.dims()))?;
        ensure(back.same_cycles(d), || {
            format!("{}: round trip changed cycles", d.dims())
        })?;
        ensure(serialize(&back) == text, || {
            format!("{}: serialization not canonical", d.dims())
        })?;
        let a = render_svg(d, &style).map_err(|e| e.to_string())?;
        let b = render_svg(d, &style).map_err(|e| e.to_string())?;
        ensure(a == b, || {
            format!("{}: rendering not deterministic", d.dims())
        })?;
        let groups = a.matches("<g class=\"cycle\"").count();
        ensure(groups == d.len(), || {
            format!("{}: {groups} groups for {} classes", d.dims(), d.len())
        })?;
        let dm = d.dims();
        let wraps = dm.m() + dm.n();
        let segments = a.matches("<line ").count();
        ensure(segments == dm.edge_count() + wraps, || {
            format!(
                "{dm}: {segments} segments, want {}",
                dm.edge_count() + wraps
            )
        })?;
    }
    Ok(format!(
        "{} decompositions round-trip and render deterministically",
        all.len()
    ))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |n: usize, what: &str, result: Check, started: Instant| {
        let secs = started.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {n} ({what}): PASS - {detail} [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("criterion {n} ({what}): FAIL - {why} [{secs:.1}s]");
            }
        }
    };
    let t = Instant::now();
    report(1, "three-cycle sweep", criterion_1(), t);
    let t = Instant::now();
    report(2, "per-case lengths", criterion_2(), t);
    let t = Instant::now();
    report(3, "4k sweep", criterion_3(), t);
    let t = Instant::now();
    report(4, "4-cycle characterization", criterion_4(), t);
    let t = Instant::now();
    report(5, "6-cycle characterization", criterion_5(), t);
    let t = Instant::now();
    report(6, "odd construction", criterion_6(), t);
    let t = Instant::now();
    let all = produced();
    match &all {
        Ok(all) => {
            report(7, "wrapping equation", criterion_7(all), t);
        }
        Err(e) => report(7, "wrapping equation", Err(e.clone()), t),
    }
    let t = Instant::now();
    report(8, "search agreement", criterion_8(), t);
    let t = Instant::now();
    match &all {
        Ok(all) => report(9, "round trip and rendering", criterion_9(all), t),
        Err(e) => report(9, "round trip and rendering", Err(e.clone()), t),
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
