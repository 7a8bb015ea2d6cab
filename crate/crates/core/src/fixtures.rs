//! Reference tables transcribed verbatim from the published literature on
//! ternary heights. Nothing here is computed; tests compare against it.

/// Residue classes forcing large coefficients, with `p - min(B₋ ∪ B₊)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetsRow {
    pub p: u64,
    pub b_minus: &'static [u64],
    pub b_plus: &'static [u64],
    pub lower_bound: u64,
}

/// A witnessed lower bound `a` and the general upper bound `b = p - ⌈p/4⌉`
/// for the largest ternary height with least prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeightRangeRow {
    pub p: u64,
    pub q: u64,
    pub r: u64,
    pub n: u64,
    pub a: u64,
    pub b: u64,
}

/// A negative coefficient `a_pqr(n) = value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CounterExampleRow {
    pub p: u64,
    pub q: u64,
    pub alpha: i64,
    pub r: u64,
    pub n: u64,
    pub value: i64,
}

const fn sets(p: u64, b_minus: &'static [u64], b_plus: &'static [u64], lower_bound: u64) -> SetsRow {
    SetsRow { p, b_minus, b_plus, lower_bound }
}

pub const SETS_TABLE: [SetsRow; 17] = [
    sets(11, &[4], &[], 7),
    sets(13, &[], &[5], 8),
    sets(17, &[7], &[], 10),
    sets(19, &[], &[8], 11),
    sets(23, &[10], &[9], 14),
    sets(29, &[13], &[12], 17),
    sets(31, &[13], &[14], 18),
    sets(37, &[], &[17], 20),
    sets(41, &[18, 19], &[17], 24),
    sets(43, &[18], &[19, 20], 25),
    sets(47, &[22], &[18, 20], 29),
    sets(53, &[25], &[22, 23, 24], 31),
    sets(59, &[23, 26, 28], &[27], 36),
    sets(61, &[25, 28], &[27, 29], 36),
    sets(67, &[], &[26, 30, 32], 40),
    sets(71, &[32, 33, 34], &[27, 29, 30, 31], 44),
    sets(73, &[33], &[27, 30, 34, 35], 46),
];

const fn range(p: u64, q: u64, r: u64, n: u64, a: u64, b: u64) -> HeightRangeRow {
    HeightRangeRow { p, q, r, n, a, b }
}

pub const HEIGHT_RANGE_TABLE: [HeightRangeRow; 20] = [
    range(3, 5, 7, 7, 2, 2),
    range(5, 7, 11, 119, 3, 3),
    range(7, 11, 37, 963, 4, 5),
    range(11, 19, 601, 34884, 7, 8),
    range(13, 31, 1097, 137160, 8, 9),
    range(17, 29, 41, 4801, 10, 12),
    range(19, 53, 859, 318742, 12, 14),
    range(23, 41, 4903, 1583731, 14, 17),
    range(29, 127, 7793, 8915220, 18, 21),
    range(31, 89, 4519, 4424131, 19, 23),
    range(37, 47, 1217, 743670, 22, 27),
    range(41, 71, 97, 96529, 26, 30),
    range(43, 53, 2963, 2358548, 26, 32),
    range(47, 347, 12113, 64756445, 29, 35),
    range(53, 61, 17377, 18037438, 33, 39),
    range(59, 67, 21247, 27047555, 37, 44),
    range(61, 191, 30203, 126913006, 38, 45),
    range(67, 191, 91127, 417817361, 42, 50),
    range(71, 311, 13327, 91183645, 44, 53),
    range(73, 83, 4241, 9156474, 46, 54),
];

const fn cx(q: u64, alpha: i64, r: u64, n: u64) -> CounterExampleRow {
    CounterExampleRow { p: 11, q, alpha, r, n, value: -7 }
}

/// Negative constructions for `p = 11`, `β = 4`, one row per admissible `α`.
pub const COUNTER_EXAMPLE_TABLE: [CounterExampleRow; 10] = [
    cx(59, 2, 877, 175410),
    cx(103, 4, 1229, 381000),
    cx(191, 6, 4639, 3173086),
    cx(191, 7, 16937, 10280769),
    cx(257, 8, 3011, 2788196),
    cx(257, 9, 1163, 987397),
    cx(257, 10, 8731, 6740342),
    cx(367, 12, 56999, 72844732),
    cx(367, 13, 811, 974021),
    cx(367, 14, 39157, 44012478),
];
