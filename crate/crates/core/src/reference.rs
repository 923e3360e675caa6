//! Published reference values for the S4 standard-representation model:
//! the eigenvalue table (two decimals) and the pairs of orbits whose
//! classical bounds were worked out by hand.

use crate::permgroup::ConjugacyClass::{self, I, II, III, IV, V};

/// Half-width of the agreement band for two-decimal table entries.
pub const TABLE_TOLERANCE: f64 = 0.006;

/// One printed row: class, `g̃` in one-line notation, `(α, l)`, and
/// `[x_D, x_D̃, x_D₂, x_D₀, x_max]`.
#[derive(Clone, Copy, Debug)]
pub struct PrintedRow {
    pub class: ConjugacyClass,
    pub gtilde: &'static str,
    pub coord: (u8, u8),
    pub values: [f64; 5],
}

const fn row(
    class: ConjugacyClass,
    gtilde: &'static str,
    coord: (u8, u8),
    values: [f64; 5],
) -> PrintedRow {
    PrintedRow {
        class,
        gtilde,
        coord,
        values,
    }
}

/// The eigenvalue table in its printed order.
pub const EIGENVALUE_TABLE: [PrintedRow; 24] = [
    row(I, "(1342)", (5, 0), [4.63, 1.35, 0.38, 5.30, 5.30]),
    row(I, "(1423)", (6, 0), [4.63, 1.35, 0.38, 5.30, 5.30]),
    row(I, "(2314)", (1, 1), [1.98, 4.00, 3.03, 0.00, 4.00]),
    row(I, "(2431)", (6, 1), [2.37, 3.60, 2.64, 0.79, 3.60]),
    row(I, "(3124)", (1, 2), [1.98, 4.00, 3.03, 0.00, 4.00]),
    row(I, "(3241)", (5, 2), [2.98, 3.00, 2.04, 1.99, 3.00]),
    row(I, "(4132)", (8, 0), [2.37, 3.60, 2.64, 0.79, 3.60]),
    row(I, "(4213)", (8, 1), [2.98, 3.00, 2.04, 1.99, 3.00]),
    row(II, "(1243)", (7, 2), [3.95, 0.30, 1.92, 7.40, 7.40]),
    row(II, "(1324)", (2, 2), [4.60, 0.68, 0.77, 6.63, 6.63]),
    row(II, "(1432)", (4, 0), [4.76, 1.71, 0.00, 4.57, 4.76]),
    row(II, "(2134)", (2, 0), [0.69, 3.56, 5.18, 0.89, 5.18]),
    row(II, "(3214)", (2, 1), [2.71, 3.76, 2.05, 0.48, 3.76]),
    row(II, "(4231)", (3, 0), [3.33, 1.94, 2.03, 4.12, 4.12]),
    row(III, "(2341)", (7, 0), [2.74, 3.74, 2.02, 0.52, 3.74]),
    row(III, "(2413)", (4, 1), [1.31, 3.96, 4.05, 0.07, 4.05]),
    row(III, "(3421)", (4, 2), [1.93, 2.32, 3.95, 3.30, 3.95]),
    row(III, "(3142)", (7, 1), [1.31, 3.96, 4.05, 0.07, 4.05]),
    row(III, "(4312)", (3, 1), [1.92, 2.32, 3.95, 3.36, 3.95]),
    row(III, "(4123)", (3, 2), [2.74, 3.74, 2.02, 0.52, 3.74]),
    row(IV, "(2143)", (5, 1), [0.40, 3.65, 5.58, 0.70, 5.58]),
    row(IV, "(3412)", (6, 2), [0.99, 3.05, 4.98, 1.90, 4.98]),
    row(IV, "(4321)", (8, 2), [2.65, 1.39, 3.33, 5.21, 5.21]),
    row(V, "(1234)", (1, 0), [4.05, 0.00, 1.93, 8.00, 8.00]),
];

/// A pair of orbits `(v ⊗ v_{αl}, v ⊗ v_{α′l′})` with its stated classical bound.
#[derive(Clone, Copy, Debug)]
pub struct ListedPair {
    pub first: (u8, u8),
    pub second: (u8, u8),
    pub bound: u32,
}

const fn pair(first: (u8, u8), second: (u8, u8), bound: u32) -> ListedPair {
    ListedPair {
        first,
        second,
        bound,
    }
}

/// Pairs with stated classical bounds 8, 12, 14 and 16.
pub const LISTED_PAIRS: [ListedPair; 32] = [
    pair((4, 2), (7, 0), 8),
    pair((3, 2), (4, 1), 8),
    pair((3, 1), (7, 1), 8),
    pair((5, 0), (8, 0), 8),
    pair((6, 0), (8, 1), 8),
    pair((4, 1), (7, 2), 8),
    pair((3, 2), (7, 2), 8),
    pair((4, 0), (7, 1), 8),
    pair((3, 0), (4, 2), 8),
    pair((4, 0), (7, 2), 12),
    pair((3, 0), (7, 2), 12),
    pair((3, 0), (4, 0), 12),
    pair((4, 1), (7, 0), 12),
    pair((3, 1), (7, 0), 12),
    pair((3, 1), (4, 1), 12),
    pair((4, 2), (7, 1), 12),
    pair((3, 2), (7, 1), 12),
    pair((3, 2), (4, 2), 12),
    pair((5, 2), (8, 1), 12),
    pair((2, 2), (7, 2), 14),
    pair((2, 1), (7, 2), 14),
    pair((2, 2), (4, 0), 14),
    pair((2, 0), (4, 0), 14),
    pair((2, 0), (3, 0), 14),
    pair((2, 1), (3, 0), 14),
    pair((2, 1), (4, 2), 14),
    pair((2, 2), (3, 2), 14),
    pair((2, 0), (4, 1), 14),
    pair((2, 1), (3, 1), 14),
    pair((2, 0), (3, 2), 14),
    pair((3, 1), (5, 0), 14),
    pair((6, 2), (8, 2), 16),
];

/// The pair reported to violate its Bell inequality, with the quoted quantum bound.
pub const VIOLATING_PAIR: ((u8, u8), (u8, u8)) = ((2, 2), (7, 2));
pub const VIOLATING_QUANTUM_BOUND: f64 = 14.036;

/// Worked cycle examples: pair, number of cycles, cycle length.
/// `(first, second, cycle count, cycle length)`.
pub type CycleExample = ((u8, u8), (u8, u8), usize, usize);

pub const CYCLE_EXAMPLES: [CycleExample; 4] = [
    ((4, 2), (7, 0), 8, 6),
    ((4, 0), (7, 2), 8, 6),
    ((2, 0), (3, 2), 8, 6),
    ((6, 2), (8, 2), 12, 4),
];
