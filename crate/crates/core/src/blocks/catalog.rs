//! Edge lists of the building blocks used by the three-cycle construction.
//!
//! Coordinates are `(row, col)` offsets from the block's upper-left vertex.
//! Entries with a `-1` or a coordinate equal to the block size reach into a
//! neighbouring block; the assembler reduces them on the torus and merges
//! duplicates. The strings are kept exactly as published; known misprints
//! are fixed by [`CORRECTIONS`] when a block is loaded.

use super::{Color, OffsetEdge};

pub(crate) struct BlockDef {
    pub case: u8,
    pub name: &'static str,
    pub rows: usize,
    pub cols: usize,
    /// Lists written as `(col,row)`.
    pub transposed: bool,
    pub red: &'static str,
    pub yellow: &'static str,
    pub blue: &'static str,
}

pub(crate) enum Fix {
    Add(&'static str),
    Replace {
        from: &'static str,
        to: &'static str,
    },
}

pub(crate) struct Correction {
    pub case: u8,
    pub name: &'static str,
    pub color: Color,
    pub fix: Fix,
}

pub(crate) const CORRECTIONS: &[Correction] = &[
    // The drawing has a red path down column 2 that the list leaves out.
    Correction {
        case: 4,
        name: "A1",
        color: Color::Red,
        fix: Fix::Add("(2,-1)(2,0), (2,0)(2,1), (2,1)(2,2), (2,2)(1,2), (1,2)(1,3)"),
    },
    Correction {
        case: 4,
        name: "A3",
        color: Color::Yellow,
        fix: Fix::Add("(-1,2)(0,2), (0,2)(0,3)"),
    },
    Correction {
        case: 4,
        name: "B1",
        color: Color::Red,
        fix: Fix::Replace {
            from: "(2,1)(2,3)",
            to: "(2,1)(2,2)",
        },
    },
    Correction {
        case: 4,
        name: "B3",
        color: Color::Blue,
        fix: Fix::Replace {
            from: "(4,0)(0,0)",
            to: "(4,0)(3,0)",
        },
    },
    Correction {
        case: 5,
        name: "A",
        color: Color::Blue,
        fix: Fix::Add("(-1,5)(0,5), (0,5)(0,6)"),
    },
];

pub(crate) const CATALOG: &[BlockDef] = &[
    BlockDef {
        case: 1,
        name: "A",
        rows: 3,
        cols: 3,
        transposed: false,
        red: "(-1,0)(0, 0), (0,0)(0,1), (0,1)(1, 1), (1,1)(1,2), (1,2)(2,2), (2,2)(2,3), (2,-1)(2, 0), (2,0)(3,0)",
        yellow: "(0,-1)(0,0), (0,0)(1,0), (1, 0)(1, 1), (1,1)(2, 1), (2, 1)(2, 2), (2, 2)(3,2), (-1,2)(0,2), (0,2)(0,3)",
        blue: "(-1, 1)(0,1), (0,1)(0,2), (0, 2)(1,2), (1, 2)(1, 3), (1, -1)(1, 0), (1, 0)(2,0), (2,0)(2,1), (2,1)(3,1)",
    },
    BlockDef {
        case: 1,
        name: "B",
        rows: 2,
        cols: 3,
        transposed: true,
        red: "(0, -1)(0, 0), (0,0)(1,0), (1, 0)(1, 1), (1, 1)(0, 1), (0, 1)(0,2)",
        yellow: "(2, -1)(2, 0), (2, 0)(3, 0), (-1, 0)(0, 0), (0, 0)(0, 1), (0, 1)(-1, 1), (3, 1)(2, 1), (2, 1)(2, 2)",
        blue: "(1, -1)(1, 0), (1, 0)(2, 0), (2, 0)(2, 1), (2, 1)(1, 1), (1, 1)(1, 2)",
    },
    BlockDef {
        case: 2,
        name: "A",
        rows: 4,
        cols: 6,
        transposed: false,
        red: "(1, -1)(1, 0), (1, 0)(2, 0), (2, 0)(2, 1), (2, 1)(1, 1), (1,1)(1,2),(1,2)(2,2), (2,2)(3,2), (3,2)(4,2), (-1,2)(0,2), (0,2)(0,3), (0,3)(1,3), (1,3)(2,3), (2,3)(2,4), (2,4)(3,4), (3,4)(4,4), (-1,4)(0,4), (0,4)(0,5), (0,5)(1,5), (1,5)(1,6)",
        yellow: "(-1, 0)(0,0), (0,0)(1,0), (1,0)(1,1), (1,1)(0,1), (0,1)(-1,1), (4, 1)(3,1), (3,1)(2,1), (2,1)(2,2), (2,2)(2,3), (2,3)(3,3), (3,3)(4,3), (-1, 3)(0,3), (0,3)(0,4), (0,4)(1,4), (1,4)(2,4), (2,4)(2,5), (2,5)(3,5), (3,5)(3,6), (3, -1)(3,0), (3,0)(4,0)",
        blue: "(0,-1)(0,0), (0,0)(0,1), (0,1)(0,2), (0,2)(1,2), (1,2)(1,3), (1,3)(1,4), (1,4)(1,5), (1,5)(2,5), (2,5)(2,6), (2,-1)(2,0), (2,0)(3,0), (3,0)(3,1), (3,1)(3,2), (3,2)(3,3), (3,3)(3,4), (3,4)(3,5), (3,5)(4,5), (-1,5)(0,5), (0,5)(0,6)",
    },
    BlockDef {
        case: 2,
        name: "B",
        rows: 4,
        cols: 6,
        transposed: false,
        red: "(4,0)(3,0), (3,0)(3,1), (3,1)(3,2), (3,2)(2,2), (2,2)(1,2), (1,2)(1,3), (1,3)(0,3), (0,3)(0,4), (0,4)(1,4), (1,4)(2,4), (2,4)(3,4), (3,4)(3,5), (3,5)(2,5), (2,5)(1,5), (1,5)(1,6), (-1, 0)(0,0), (0,0)(1,0), (1,0)(1,-1)",
        yellow: "(-1,1)(0,1), (0,1)(1,1), (1,1)(1,2), (1,2)(0,2), (0,2)(-1,2), (4,2)(3,2), (3,2)(3,3), (3,3)(2,3), (2,3)(1,3), (1,3)(1,4), (1,4)(1,5), (1,5)(0,5), (0,5)(-1,5), (4,5)(3,5), (3,5)(3,6), (3, -1)(3,0), (3,0)(2,0), (2,0)(2,1), (2,1)(3,1), (3,1)(4,1)",
        blue: "(0, -1)(0,0), (0,0)(0,1), (0,1)(0,2), (0,2)(0,3), (0,3)(-1,3), (4,3)(3,3), (3,3)(3,4), (3,4)(4,4), (-1,4)(0,4), (0,4)(0,5), (0,5)(0,6), (2,-1)(2,0), (2,0)(1,0), (1,0)(1,1), (1,1)(2,1), (2,1)(2,2), (2,2)(2,3), (2,3)(2,4), (2,4)(2,5), (2,5)(2,6)",
    },
    BlockDef {
        case: 3,
        name: "A",
        rows: 4,
        cols: 3,
        transposed: false,
        red: "(-1, 0)(0, 0), (0,0)(0,1), (0, 1)(1, 1), (1, 1)(1, 0), (1, 0)(2,0), (2, 0)(2,1), (2,1)(3,1), (3,1)(3,0), (3,0)(4,0)",
        yellow: "(0,-1)(0,0), (0,0)(1,0), (1,0)(1,-1), (1,3)(1,2), (1,2)(2,2),(2,2)(2,3), (2,-1)(2,0), (2,0)(3,0), (3,0)(3,-1), (3,3)(3,2), (3,2)(4,2), (-1,2)(0,2), (0,2)(0,3)",
        blue: "(-1, 1)(0, 1), (0,1)(0,2), (0, 2)(1, 2), (1, 2)(1, 1), (1, 1)(2,1), (2, 1)(2,2), (2,2)(3,2), (3,2)(3,1), (3,1)(4,1)",
    },
    BlockDef {
        case: 4,
        name: "A1",
        rows: 4,
        cols: 3,
        transposed: false,
        red: "(-1, 0)(0,0), (0,0)(1,0), (1,0)(1,1), (1,1)(0,1), (0,1)(0,2), (0,2)(-1,2), (4,2)(3,2), (3,2)(3,3), (3,-1)(3,0), (3,0)(4,0)",
        yellow: "(0,-1)(0,0), (0,0)(0,1), (0,1)(-1,1), (4,1)(3,1), (3,1)(3,0), (3,0)(2,0), (2,0)(1,0), (1,0)(1,-1)",
        blue: "(0,3)(0,2), (0,2)(1,2), (1,2)(1,1), (1,1)(2,1), (2,1)(3,1), (3,1)(3,2), (3,2)(2,2), (2,2)(2,3)",
    },
    BlockDef {
        case: 4,
        name: "A2",
        rows: 4,
        cols: 3,
        transposed: false,
        red: "(-1,0)(0,0), (0,0)(0,1), (0,1)(1,1), (1,1)(2,1), (2,1)(2,0), (2,0)(1,0), (1,0)(1,-1), (4,0)(3,0), (3,0)(3,-1)",
        yellow: "(-1,1)(0,1), (0,1)(0,2), (0,2)(-1,2), (4,2)(3,2), (3,2)(3,3), (4,1)(3,1), (3,1)(2,1), (2,1)(2,2), (2,2)(1,2), (1,2)(1,3)",
        blue: "(0,-1)(0,0), (0,0)(1,0), (1,0)(1,1), (1,1)(1,2), (1,2)(0,2), (0,2)(0,3), (2,-1)(2,0), (2,0)(3,0), (3,0)(3,1), (3,1)(3,2), (3,2)(2,2), (2,2)(2,3)",
    },
    BlockDef {
        case: 4,
        name: "A3",
        rows: 4,
        cols: 3,
        transposed: false,
        red: "(-1,1)(0,1), (0,1)(0,2), (0,2)(1,2), (1,2)(2,2), (2,2)(2,3), (4,1)(3,1), (3,1)(3,2), (3,2)(3,3)",
        yellow: "(-1,0)(0,0), (0,0)(0,1), (0,1)(1,1), (1,1)(1,2), (1,2)(1,3), (1,-1)(1,0), (1,0)(2,0), (2,0)(2,1), (2,1)(2,2), (2,2)(3,2), (3,2)(4,2), (3,-1)(3,0), (3,0)(4,0)",
        blue: "(0,-1)(0,0), (0,0)(1,0), (1,0)(1,1), (1,1)(2,1), (2,1)(3,1), (3,1)(3,0), (3,0)(2,0), (2,0)(2,-1)",
    },
    BlockDef {
        case: 4,
        name: "B1",
        rows: 4,
        cols: 2,
        transposed: false,
        red: "(2,-1)(2,0), (2,0)(1,0), (1,0)(0,0), (0,0)(0,1), (0,1)(1,1), (1,1)(2,1), (2,1)(2,3), (3,-1)(3,0), (3,0)(3,1), (3,1)(3,2)",
        yellow: "(0,-1)(0,0), (0,0)(-1,0), (4,0)(3,0), (3,0)(2,0), (2,0)(2,1), (2,1)(3,1), (3,1)(4,1), (-1,1)(0,1), (0,1)(0,2), (1,-1)(1,0), (1,0)(1,1), (1,1)(1,2)",
        blue: "",
    },
    BlockDef {
        case: 4,
        name: "B2",
        rows: 4,
        cols: 2,
        transposed: false,
        red: "(1,-1)(1,0), (1,0)(0,0), (0,0)(0,1), (0,1)(1,1), (1,1)(1,2), (3,-1)(3,0), (3,0)(2,0), (2,0)(2,1), (2,1)(3,1), (3,1)(3,2)",
        yellow: "",
        blue: "(2,-1)(2,0), (2,0)(1,0), (1,0)(1,1), (1,1)(2,1), (2,1)(2,2), (0,-1)(0,0), (0,0)(-1,0), (-1,1)(0,1), (0,1)(0,2), (4,0)(3,0), (3,0)(3,1), (3,1)(4,1)",
    },
    BlockDef {
        case: 4,
        name: "B3",
        rows: 4,
        cols: 2,
        transposed: false,
        red: "",
        yellow: "(1,-1)(1,0), (1,0)(0,0), (0,0)(0,1), (0,1)(1,1), (1,1)(1,2), (3,-1)(3,0), (3,0)(2,0), (2,0)(2,1), (2,1)(3,1), (3,1)(3,2)",
        blue: "(2,-1)(2,0), (2,0)(1,0), (1,0)(1,1), (1,1)(2,1), (2,1)(2,2), (0,-1)(0,0), (0,0)(-1,0), (-1,1)(0,1), (0,1)(0,2), (4,0)(0,0), (3,0)(3,1), (3,1)(4,1)",
    },
    BlockDef {
        case: 5,
        name: "A",
        rows: 6,
        cols: 6,
        transposed: false,
        red: "(1,-1)(1,0), (1,0)(2,0), (2,0)(2,1), (2,1)(1,1), (1,1)(1,2), (1,2)(2,2), (2,2)(3,2), (3,2)(4,2), (4,2)(4,3), (4,3)(5,3), (5,3)(5,2), (5,2)(6,2), (-1,2)(0,2), (0,2)(0,3), (0,3)(1,3), (1,3)(2,3), (2,3)(2,4), (2,4)(3,4), (3,4)(4,4), (4,4)(4,5), (4,5)(5,5), (5,5)(5,4), (5,4)(6,4), (-1,4)(0,4), (0,4)(0,5), (0,5)(1,5), (1,5)(1,6)",
        yellow: "(3,-1)(3,0), (3,0)(4,0), (4,0)(5,0), (5,0)(6,0), (-1,0)(0,0), (0,0)(1,0), (1,0)(1,1), (1,1)(0,1), (0,1)(-1,1), (6,1)(5,1), (5,1)(4,1), (4,1)(3,1), (3,1)(2,1), (2,1)(2,2), (2,2)(2,3), (2,3)(3,3), (3,3)(4,3), (4,3)(4,4), (4,4)(5,4), (5,4)(5,3), (5,3)(6,3), (-1,3)(0,3), (0,3)(0,4), (0,4)(1,4), (1,4)(2,4), (2,4)(2,5), (2,5)(3,5), (3,5)(3,6)",
        blue: "(0,-1)(0,0), (0,0)(0,1), (0,1)(0,2), (0,2)(1,2), (1,2)(1,3), (1,3)(1,4), (1,4)(1,5), (1,5)(2,5), (2,5)(2,6), (2,-1)(2,0), (2,0)(3,0), (3,0)(3,1), (3,1)(3,2), (3,2)(3,3), (3,3)(3,4), (3,4)(3,5), (3,5)(4,5), (4,5)(4,6), (4,-1)(4,0), (4,0)(4,1), (4,1)(4,2), (4,2)(5,2), (5,2)(5,1), (5,1)(5,0), (5,0)(5,-1), (5,6)(5,5), (5,5)(6,5)",
    },
    BlockDef {
        case: 5,
        name: "B",
        rows: 2,
        cols: 6,
        transposed: false,
        red: "(-1,2)(0,2), (0,2)(0,3), (0,3)(1,3), (1,3)(1,2), (1,2)(2,2), (-1,4)(0,4), (0,4)(0,5), (0,5)(1,5), (1,5)(1,4), (1,4)(2,4)",
        yellow: "(-1,0)(0,0), (0,0)(1,0), (1,0)(2,0), (-1,1)(0,1), (0,1)(1,1), (1,1)(2,1), (-1,3)(0,3), (0,3)(0,4), (0,4)(1,4), (1,4)(1,3), (1,3)(2,3)",
        blue: "(-1,5)(0,5), (0,5)(0,6), (0,-1)(0,0), (0,0)(0,1), (0,1)(0,2), (0,2)(1,2), (1,2)(1,1), (1,1)(1,0), (1,0)(1,-1), (1,6)(1,5), (1,5)(2,5)",
    },
    BlockDef {
        case: 6,
        name: "B",
        rows: 6,
        cols: 6,
        transposed: false,
        red: "(-1,0)(0,0), (0,0)(1,0), (1,0)(1,-1), (1,6)(1,5), (1,5)(2,5), (2,5)(3,5), (3,5)(3,4), (3,4)(4,4), (4,4)(5,4), (5,4)(6,4), (-1,4)(0,4), (0,4)(1,4), (1,4)(1,3), (1,3)(2,3), (2,3)(3,3), (3,3)(3,2), (3,2)(4,2), (4,2)(5,2), (5,2)(6,2), (-1,2)(0,2), (0,2)(1,2), (1,2)(1,1), (1,1)(2,1), (2,1)(3,1), (3,1)(3,0), (3,0)(4,0), (4,0)(5,0), (5,0)(6,0)",
        yellow: "(-1,1)(0,1), (0,1)(1,1), (1,1)(1,0), (1,0)(2,0), (2,0)(3,0), (3,0)(3,-1), (3,6)(3,5), (3,5)(4,5), (4,5)(5,5), (5,5)(6,5), (-1,5)(0,5), (0,5)(1,5), (1,5)(1,4), (1,4)(2,4), (2,4)(3,4), (3,4)(3,3), (3,3)(4,3), (4,3)(5,3), (5,3)(6,3), (-1,3)(0,3), (0,3)(1,3), (1,3)(1,2), (1,2)(2,2), (2,2)(3,2), (3,2)(3,1), (3,1)(4,1), (4,1)(5,1), (5,1)(6,1)",
        blue: "(0,-1)(0,0), (0,0)(0,1), (0,1)(0,2), (0,2)(0,3), (0,3)(0,4), (0,4)(0,5), (0,5)(0,6), (2,-1)(2,0), (2,0)(2,1), (2,1)(2,2), (2,2)(2,3), (2,3)(2,4), (2,4)(2,5), (2,5)(2,6),(4,-1)(4,0), (4,0)(4,1), (4,1)(4,2), (4,2)(4,3), (4,3)(4,4), (4,4)(4,5), (4,5)(4,6),(5,-1)(5,0), (5,0)(5,1), (5,1)(5,2), (5,2)(5,3), (5,3)(5,4), (5,4)(5,5), (5,5)(5,6)",
    },
    BlockDef {
        case: 7,
        name: "A",
        rows: 6,
        cols: 3,
        transposed: false,
        red: "(1,-1)(1,0), (1,0)(0,0), (0,0)(0,1), (0,1)(-1,1), (6,1)(5,1), (5,1)(5,2), (5,2)(4,2), (4,2)(4,3), (4,-1)(4,0), (4,0)(3,0), (3,0)(3,1), (3,1)(2,1), (2,1)(2,2), (2,2)(1,2), (1,2)(1,3)",
        yellow: "(2,-1)(2,0), (2,0)(1,0), (1,0)(1,1), (1,1)(0,1), (0,1)(0,2), (0,2)(-1,2), (6,2)(5,2), (5,2)(5,3), (5,-1)(5,0), (5,0)(4,0), (4,0)(4,1), (4,1)(3,1), (3,1)(3,2), (3,2)(2,2), (2,2)(2,3)",
        blue: "(0,-1)(0,0), (0,0)(-1,0), (6,0)(5,0), (5,0)(5,1), (5,1)(4,1), (4,1)(4,2), (4,2)(3,2), (3,2)(3,3), (3,-1)(3,0), (3,0)(2,0), (2,0)(2,1), (2,1)(1,1), (1,1)(1,2), (1,2)(0,2), (0,2)(0,3)",
    },
    BlockDef {
        case: 7,
        name: "B",
        rows: 6,
        cols: 6,
        transposed: false,
        red: "(1,-1)(1,0), (1,0)(0,0), (0,0)(0,1), (0,1)(-1,1), (6,1)(5,1), (5,1)(5,2), (5,2)(4,2), (4,2)(4,3), (4,3)(3,3), (3,3)(3,4), (3,4)(2,4), (2,4)(2,5), (2,5)(1,5), (1,5)(1,6), (4,-1)(4,0), (4,0)(3,0), (3,0)(3,1), (3,1)(2,1), (2,1)(2,2), (2,2)(1,2), (1,2)(1,3), (1,3)(0,3), (0,3)(0,4), (0,4)(-1,4), (6,4)(5,4), (5,4)(5,5), (5,5)(4,5), (4,5)(4,6)",
        yellow: "(2,-1)(2,0), (2,0)(1,0), (1,0)(1,1), (1,1)(0,1), (0,1)(0,2), (0,2)(-1,2), (6,2)(5,2), (5,2)(5,3), (5,3)(4,3), (4,3)(4,4), (4,4)(3,4), (3,4)(3,5), (3,5)(2,5), (2,5)(2,6), (5,-1)(5,0), (5,0)(4,0), (4,0)(4,1), (4,1)(3,1), (3,1)(3,2), (3,2)(2,2), (2,2)(2,3), (2,3)(1,3), (1,3)(1,4), (1,4)(0,4), (0,4)(0,5), (0,5)(-1,5), (6,5)(5,5), (5,5)(5,6)",
        blue: "(0,-1)(0,0), (0,0)(-1,0), (6,0)(5,0), (5,0)(5,1), (5,1)(4,1), (4,1)(4,2), (4,2)(3,2), (3,2)(3,3), (3,3)(2,3), (2,3)(2,4), (2,4)(1,4), (1,4)(1,5), (1,5)(0,5), (0,5)(0,6), (3,-1)(3,0), (3,0)(2,0), (2,0)(2,1), (2,1)(1,1), (1,1)(1,2), (1,2)(0,2), (0,2)(0,3), (0,3)(-1,3), (6,3)(5,3), (5,3)(5,4), (5,4)(4,4), (4,4)(4,5), (4,5)(3,5), (3,5)(3,6)",
    },
    BlockDef {
        case: 7,
        name: "C",
        rows: 2,
        cols: 3,
        transposed: false,
        red: "(-1, 1)(0, 1), (0, 1)(0, 2), (0, 2)(1, 2), (1, 2)(1, 1), (1, 1)(2, 1)",
        yellow: "(-1, 2)(0, 2), (0, 2)(0, 3), (0, -1)(0, 0), (0, 0)(1, 0), (1, 0)(1, -1), (1, 3)(1, 2), (1, 2)(2, 2)",
        blue: "(-1, 0)(0, 0), (0,0)(0,1), (0, 1)(1, 1), (1, 1)(1, 0), (1, 0)(2,0)",
    },
    BlockDef {
        case: 7,
        name: "D",
        rows: 2,
        cols: 6,
        transposed: false,
        red: "(-1, 1)(0, 1), (0, 1)(0, 2), (0, 2)(1, 2), (1, 2)(1, 1), (1, 1)(2, 1), (-1, 4)(0, 4), (0, 4)(0, 5), (0, 5)(1, 5), (1, 5)(1, 4), (1, 4)(2, 4)",
        yellow: "(-1, 2)(0, 2), (0, 2)(0, 3), (0, 3)(1, 3), (1, 3)(1, 2), (1, 2)(2, 2), (0, -1)(0, 0), (0, 0)(1, 0), (1, 0)(1, -1), (-1,5)(0,5), (0,5)(0,6), (2,5)(1,5), (1,5)(1,6)",
        blue: "(-1, 0)(0, 0), (0,0)(0,1), (0, 1)(1, 1), (1, 1)(1, 0), (1, 0)(2,0), (-1, 3)(0, 3), (0,3)(0,4), (0, 4)(1, 4), (1, 4)(1, 3), (1, 3)(2,3)",
    },
];

fn push_path(out: &mut Vec<OffsetEdge>, pts: &[(i64, i64)]) {
    out.extend(pts.windows(2).map(|w| (w[0], w[1])));
}

/// The `2 x n` strip used below the first six rows in case 6, for `n = 6 + 6N`.
pub(crate) fn case6_strip(n: usize) -> [Vec<OffsetEdge>; 3] {
    let n = n as i64;
    let big_n = (n - 6) / 6;
    let mut red = Vec::new();
    let mut yellow = Vec::new();
    let mut blue = Vec::new();

    for c in [2, 4] {
        push_path(&mut red, &[(-1, c), (0, c), (1, c), (2, c)]);
    }
    for x in 0..=big_n + 1 {
        let c = 6 + 2 * x;
        push_path(
            &mut red,
            &[(-1, c), (0, c), (0, c - 1), (1, c - 1), (1, c), (2, c)],
        );
    }
    for x in 1..=2 * big_n - 2 {
        let c = n - 2 * x;
        push_path(&mut red, &[(-1, c), (0, c), (1, c), (2, c)]);
    }

    for c in [0, 1, 3] {
        push_path(&mut yellow, &[(-1, c), (0, c), (1, c), (2, c)]);
    }
    for x in 0..=big_n {
        let c = 7 + 2 * x;
        push_path(
            &mut yellow,
            &[(-1, c), (0, c), (0, c - 1), (1, c - 1), (1, c), (2, c)],
        );
    }
    for x in 0..=2 * big_n - 2 {
        let c = n - (2 * x + 1);
        push_path(&mut yellow, &[(-1, c), (0, c), (1, c), (2, c)]);
    }

    push_path(
        &mut blue,
        &[
            (-1, 5),
            (0, 5),
            (0, 4),
            (0, 3),
            (0, 2),
            (0, 1),
            (0, 0),
            (0, -1),
        ],
    );
    // Published upper bound is 4N-2, which collides with the last red jog.
    for x in 0..=4 * big_n - 3 {
        push_path(&mut blue, &[(0, n - x), (0, n - (x + 1))]);
    }
    let c = n - (4 * big_n - 2);
    push_path(&mut blue, &[(0, c), (1, c)]);
    for x in 1..=4 * big_n - 2 {
        push_path(&mut blue, &[(1, n - (x - 1)), (1, n - x)]);
    }
    push_path(
        &mut blue,
        &[
            (2, 5),
            (1, 5),
            (1, 4),
            (1, 3),
            (1, 2),
            (1, 1),
            (1, 0),
            (1, -1),
        ],
    );

    [red, yellow, blue]
}
