//! The printed table of `T_0..T_9` and `U_0..U_9`, with each row stored both
//! verbatim and as read term by term.

/// One printed row. `read_as` lists `(coefficient, degree)` pairs as printed;
/// a term missing its variable is read with the degree its position implies.
#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    pub kind: char,
    pub n: usize,
    pub printed: &'static str,
    pub read_as: &'static [(i64, usize)],
}

macro_rules! row {
    ($kind:literal, $n:literal, $printed:literal, [$(($c:expr, $d:expr)),* $(,)?]) => {
        TableRow { kind: $kind, n: $n, printed: $printed, read_as: &[$(($c, $d)),*] }
    };
}

pub const PRINTED_TABLE: [TableRow; 20] = [
    row!('T', 0, "1", [(1, 0)]),
    row!('T', 1, "x", [(1, 1)]),
    row!('T', 2, "2x^2-1", [(2, 2), (-1, 0)]),
    row!('T', 3, "4x^3 - 3x", [(4, 3), (-3, 1)]),
    row!('T', 4, "8x^4 - 8x^2 +1", [(8, 4), (-8, 2), (1, 0)]),
    row!('T', 5, "16x^5 - 20x^3+ 5x", [(16, 5), (-20, 3), (5, 1)]),
    row!('T', 6, "32 x^6 - 48^4 + 18x^2 -1", [(32, 6), (-48, 4), (18, 2), (-1, 0)]),
    row!('T', 7, "64x^7 - 112 x^5 + 56x^3 - 7x", [(64, 7), (-112, 5), (56, 3), (-7, 1)]),
    row!('T', 8, "128x^8 - 256x^6 + 160x^4 - 32x^2 + 1", [(128, 8), (-256, 6), (160, 4), (-32, 2), (1, 0)]),
    row!('T', 9, "256x^9 - 576x^7 + 232x^5 - 120^3 +9x", [(256, 9), (-576, 7), (232, 5), (-120, 3), (9, 1)]),
    row!('U', 0, "1", [(1, 0)]),
    row!('U', 1, "2x", [(2, 1)]),
    row!('U', 2, "4x^2 -1", [(4, 2), (-1, 0)]),
    row!('U', 3, "8x^3 - 4x", [(8, 3), (-4, 1)]),
    row!('U', 4, "16x^4 - 12x^2 +1", [(16, 4), (-12, 2), (1, 0)]),
    row!('U', 5, "32x^5 - 32x^3 + 6x", [(32, 5), (-32, 3), (6, 1)]),
    row!('U', 6, "64x^6 - 80x^4 + 24x^2 -1", [(64, 6), (-80, 4), (24, 2), (-1, 0)]),
    row!('U', 7, "128x^7 - 192x^5 + 80x^3 - 8x", [(128, 7), (-192, 5), (80, 3), (-8, 1)]),
    row!('U', 8, "256x^8 - 448x^6 + 240x^4 - 40x^2 + 1", [(256, 8), (-448, 6), (240, 4), (-40, 2), (1, 0)]),
    row!('U', 9, "512x^9 - 1024x^7 + 672x^5 - 106x^3 + 10x", [(512, 9), (-1024, 7), (672, 5), (-106, 3), (10, 1)]),
];

/// Rows whose printed text drops the variable from one term.
pub const KNOWN_SLIPS: [(char, usize, usize); 2] = [('T', 6, 4), ('T', 9, 3)];

/// Coefficients that disagree with the recurrence: `(kind, n, degree, printed, computed)`.
pub const KNOWN_WRONG: [(char, usize, usize, i64, i64); 2] = [('T', 9, 5, 232, 432), ('U', 9, 3, -106, -160)];
