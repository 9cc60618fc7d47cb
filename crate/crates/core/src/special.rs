//! Wrapping numbers, the 6-cycle and odd-cycle constructions, and a
//! feasibility verdict that ties every construction in the crate together.

use std::fmt;

use crate::blocks::decompose_three_cycles;
use crate::cycle::CycleWalk;
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::four_phase::{checkerboard, decompose_4k};
use crate::graph::{Orientation, TorusDims, Vertex};

/// How often a cycle winds around the torus, and how many extra edge pairs
/// it spends in each direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WrappingNumbers {
    pub v: usize,
    pub h: usize,
    pub l_v: usize,
    pub l_h: usize,
}

impl WrappingNumbers {
    pub fn ell(&self) -> usize {
        self.l_v + self.l_h
    }

    /// `n*h + m*v + 2*(l_v + l_h)`, which equals the cycle length.
    pub fn length(&self, dims: TorusDims) -> usize {
        dims.n() * self.h + dims.m() * self.v + 2 * self.ell()
    }
}

/// Lift the walk to the infinite grid and measure its net displacement.
pub fn wrapping_numbers(c: &CycleWalk) -> WrappingNumbers {
    let dims = c.dims();
    let (m, n) = (dims.m() as i64, dims.n() as i64);
    let (mut di, mut dj) = (0i64, 0i64);
    let (mut vertical, mut horizontal) = (0i64, 0i64);
    let vs = c.vertices();
    for k in 0..vs.len() {
        let (a, b) = (vs[k], vs[(k + 1) % vs.len()]);
        let e = dims.edge(a, b).expect("walk steps are edges");
        // A step is +1 when it follows the canonical direction of its edge.
        let sign = if e.u == a { 1 } else { -1 };
        match e.orientation {
            Orientation::Vertical => {
                di += sign;
                vertical += 1;
            }
            Orientation::Horizontal => {
                dj += sign;
                horizontal += 1;
            }
        }
    }
    assert!(
        di % m == 0 && dj % n == 0,
        "closed walk must return to its start"
    );
    let v = (di / m).unsigned_abs() as usize;
    let h = (dj / n).unsigned_abs() as usize;
    let extra_v = vertical - m * v as i64;
    let extra_h = horizontal - n * h as i64;
    assert!(extra_v >= 0 && extra_v % 2 == 0 && extra_h >= 0 && extra_h % 2 == 0);
    WrappingNumbers {
        v,
        h,
        l_v: (extra_v / 2) as usize,
        l_h: (extra_h / 2) as usize,
    }
}

/// Whether `k = n*h + m*v + 2l` has a solution usable by a single cycle.
pub fn wrapping_feasible(k: usize, m: usize, n: usize) -> bool {
    for v in 0..=k / m {
        for h in 0..=(k - m * v) / n {
            let rest = k - m * v - n * h;
            if rest.is_multiple_of(2) && (v + h > 0 || k >= 4) {
                return true;
            }
        }
    }
    false
}

/// The tori with a 6-cycle decomposition: 3x3, 6x6, and 6 by a multiple of 4.
pub fn c6_feasible(m: usize, n: usize) -> bool {
    (m == 3 && n == 3)
        || (m == 6 && n == 6)
        || (m == 6 && n.is_multiple_of(4))
        || (n == 6 && m.is_multiple_of(4))
}

fn row_cycle(dims: TorusDims, i: usize) -> CycleWalk {
    CycleWalk::new(dims, (0..dims.n()).map(|j| Vertex::new(i, j)).collect()).expect("row")
}

fn column_cycle(dims: TorusDims, j: usize) -> CycleWalk {
    CycleWalk::new(dims, (0..dims.m()).map(|i| Vertex::new(i, j)).collect()).expect("column")
}

/// Two rows of three columns starting at `(i, j)`.
fn brick(dims: TorusDims, i: i64, j: i64) -> CycleWalk {
    let vs = [
        (i, j),
        (i, j + 1),
        (i, j + 2),
        (i + 1, j + 2),
        (i + 1, j + 1),
        (i + 1, j),
    ]
    .map(|(a, b)| dims.vertex(a, b))
    .to_vec();
    CycleWalk::new(dims, vs).expect("brick")
}

pub fn c6_decompose(dims: TorusDims) -> Result<Decomposition> {
    let (m, n) = (dims.m(), dims.n());
    if !c6_feasible(m, n) {
        return Err(Error::KnownImpossible(format!(
            "6-cycles decompose only 3×3, 6×6 and 6 by a multiple of 4, not {dims}"
        )));
    }
    if m == 3 {
        return decompose_three_cycles(dims);
    }
    if m == 6 && n == 6 {
        let mut classes: Vec<CycleWalk> = (0..6).map(|i| row_cycle(dims, i)).collect();
        classes.extend((0..6).map(|j| column_cycle(dims, j)));
        return crate::checked(Decomposition::new(dims, classes)?);
    }
    if m != 6 {
        return c6_decompose(dims.transposed()).map(|d| d.transposed());
    }
    let big_n = (n / 4) as i64;
    let mut classes = Vec::new();
    for i in 0..3 {
        for j in 0..big_n {
            classes.push(brick(dims, 2 * i - 1, 4 * j + 1));
            classes.push(brick(dims, 2 * i, 4 * j - 1));
        }
    }
    classes.extend((0..n / 2).map(|j| column_cycle(dims, 2 * j)));
    crate::checked(Decomposition::new(dims, classes)?)
}

/// `n`-cycles on `C_m □ C_n` for odd `m <= n < 2m`.
///
/// Each column cycle zigzags one step right and back on every pair of the
/// first `n - m` rows, then runs straight down; the rows it leaves free are
/// taken by horizontal cycles.
pub fn odd_decompose(dims: TorusDims) -> Result<Decomposition> {
    let (m, n) = (dims.m(), dims.n());
    if m % 2 == 0 || n % 2 == 0 {
        return Err(Error::Precondition(format!(
            "{dims}: both sides must be odd"
        )));
    }
    if m > n {
        return Err(Error::Precondition(format!("{dims}: need m <= n")));
    }
    if n >= 2 * m {
        return Err(Error::Precondition(format!("{dims}: need n < 2m")));
    }
    let jogs = (n - m) / 2;
    let mut classes = Vec::new();
    for j in 0..n {
        let right = (j + 1) % n;
        let mut vs = Vec::with_capacity(n);
        for l in 0..jogs {
            vs.extend([
                Vertex::new(2 * l, j),
                Vertex::new(2 * l, right),
                Vertex::new(2 * l + 1, right),
                Vertex::new(2 * l + 1, j),
            ]);
        }
        vs.extend((2 * jogs..m).map(|i| Vertex::new(i, j)));
        classes.push(CycleWalk::new(dims, vs)?);
    }
    classes.extend((2 * jogs..m).map(|i| row_cycle(dims, i)));
    crate::checked(Decomposition::new(dims, classes)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ThreeCycles,
    FourPhase,
    Checkerboard,
    SixCycles,
    OddCycles,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ThreeCycles => "three-cycles",
            Method::FourPhase => "four-phase",
            Method::Checkerboard => "checkerboard",
            Method::SixCycles => "c6",
            Method::OddCycles => "odd",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImpossibleReason {
    /// `k` odd and shorter than both sides: every k-cycle would be contractible.
    OddShorterThanSides,
    /// Outside the tori that admit 6-cycle decompositions.
    SixCycleCharacterization,
    /// 4-cycle decompositions need both sides even.
    FourCycleOddSide,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NecessaryCondition {
    LongerThanVertexCount,
    DoesNotDivideEdgeCount,
    NoWrappingSolution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeasibilityVerdict {
    ConstructibleHere(Method),
    KnownImpossible(ImpossibleReason),
    NecessaryConditionsFail(NecessaryCondition),
    OpenUnknown,
}

impl fmt::Display for FeasibilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FeasibilityVerdict::ConstructibleHere(m) => write!(f, "CONSTRUCTIBLE ({m})"),
            FeasibilityVerdict::KnownImpossible(r) => {
                let why = match r {
                    ImpossibleReason::OddShorterThanSides => "k is odd and both sides exceed k",
                    ImpossibleReason::SixCycleCharacterization => {
                        "only 3×3, 6×6 and 6 by a multiple of 4 have 6-cycle decompositions"
                    }
                    ImpossibleReason::FourCycleOddSide => {
                        "4-cycle decompositions need both sides even"
                    }
                };
                write!(f, "IMPOSSIBLE ({why})")
            }
            FeasibilityVerdict::NecessaryConditionsFail(c) => {
                let why = match c {
                    NecessaryCondition::LongerThanVertexCount => "k exceeds mn",
                    NecessaryCondition::DoesNotDivideEdgeCount => "k does not divide 2mn",
                    NecessaryCondition::NoWrappingSolution => "no cycle of length k fits the torus",
                };
                write!(f, "INFEASIBLE ({why})")
            }
            FeasibilityVerdict::OpenUnknown => {
                write!(f, "UNKNOWN (no construction or obstruction known)")
            }
        }
    }
}

fn odd_applies(k: usize, m: usize, n: usize) -> bool {
    let (lo, hi) = (m.min(n), m.max(n));
    m % 2 == 1 && n % 2 == 1 && k == hi && hi < 2 * lo
}

pub fn feasibility(k: usize, m: usize, n: usize) -> FeasibilityVerdict {
    use FeasibilityVerdict::*;
    // The 6-cycle characterization is exact, so it takes precedence over the
    // generic counting conditions.
    if k == 6 && !c6_feasible(m, n) {
        return KnownImpossible(ImpossibleReason::SixCycleCharacterization);
    }
    if k > m * n {
        return NecessaryConditionsFail(NecessaryCondition::LongerThanVertexCount);
    }
    if k == 0 || !(2 * m * n).is_multiple_of(k) {
        return NecessaryConditionsFail(NecessaryCondition::DoesNotDivideEdgeCount);
    }
    if k % 2 == 1 && m > k && n > k {
        return KnownImpossible(ImpossibleReason::OddShorterThanSides);
    }
    if !wrapping_feasible(k, m, n) {
        return NecessaryConditionsFail(NecessaryCondition::NoWrappingSolution);
    }
    if k == 4 {
        return if m.is_multiple_of(2) && n.is_multiple_of(2) {
            ConstructibleHere(Method::Checkerboard)
        } else {
            KnownImpossible(ImpossibleReason::FourCycleOddSide)
        };
    }
    if (m.is_multiple_of(3) || n.is_multiple_of(3)) && 3 * k == 2 * m * n {
        return ConstructibleHere(Method::ThreeCycles);
    }
    if m.is_multiple_of(4)
        && n.is_multiple_of(4)
        && k.is_multiple_of(4)
        && (4 * (m / 4) * (n / 4)).is_multiple_of(k / 4)
    {
        return ConstructibleHere(Method::FourPhase);
    }
    if odd_applies(k, m, n) {
        return ConstructibleHere(Method::OddCycles);
    }
    if k == 6 {
        return ConstructibleHere(Method::SixCycles);
    }
    OpenUnknown
}

/// Run the construction named by [`feasibility`].
pub fn construct(k: usize, dims: TorusDims) -> Result<Decomposition> {
    let (m, n) = (dims.m(), dims.n());
    match feasibility(k, m, n) {
        FeasibilityVerdict::ConstructibleHere(method) => construct_with(method, k, dims),
        verdict => Err(Error::KnownImpossible(verdict.to_string())),
    }
}

pub fn construct_with(method: Method, k: usize, dims: TorusDims) -> Result<Decomposition> {
    let (m, n) = (dims.m(), dims.n());
    match method {
        Method::ThreeCycles => decompose_three_cycles(dims),
        Method::FourPhase => {
            if m % 4 != 0 || n % 4 != 0 || !k.is_multiple_of(4) {
                return Err(Error::Precondition(
                    "m, n and k must be multiples of 4".into(),
                ));
            }
            decompose_4k(m / 4, n / 4, k / 4, None)
        }
        Method::Checkerboard => checkerboard(dims),
        Method::SixCycles => c6_decompose(dims),
        Method::OddCycles if m <= n => odd_decompose(dims),
        Method::OddCycles => odd_decompose(dims.transposed()).map(|d| d.transposed()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_cycle_wraps_once_horizontally() {
        let d = TorusDims::new(6, 6).unwrap();
        let w = wrapping_numbers(&row_cycle(d, 0));
        assert_eq!(
            w,
            WrappingNumbers {
                v: 0,
                h: 1,
                l_v: 0,
                l_h: 0
            }
        );
    }

    #[test]
    fn wrapping_examples() {
        assert!(!wrapping_feasible(7, 9, 11));
        assert!(wrapping_feasible(9, 7, 9));
        assert!(wrapping_feasible(6, 8, 8));
        assert!(!wrapping_feasible(3, 4, 4));
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(
            feasibility(40, 4, 15),
            FeasibilityVerdict::ConstructibleHere(Method::ThreeCycles)
        );
        assert_eq!(feasibility(32, 4, 20), FeasibilityVerdict::OpenUnknown);
        assert_eq!(
            feasibility(6, 8, 8),
            FeasibilityVerdict::KnownImpossible(ImpossibleReason::SixCycleCharacterization)
        );
        assert_eq!(
            feasibility(5, 7, 10),
            FeasibilityVerdict::KnownImpossible(ImpossibleReason::OddShorterThanSides)
        );
    }

    #[test]
    fn c6_small_cases() {
        assert_eq!(
            c6_decompose(TorusDims::new(6, 8).unwrap()).unwrap().len(),
            16
        );
        assert!(c6_decompose(TorusDims::new(3, 4).unwrap()).is_err());
    }

    #[test]
    fn odd_examples() {
        let d = odd_decompose(TorusDims::new(7, 9).unwrap()).unwrap();
        assert_eq!(d.histogram().into_iter().collect::<Vec<_>>(), vec![(9, 14)]);
        assert!(odd_decompose(TorusDims::new(5, 11).unwrap()).is_err());
    }
}
