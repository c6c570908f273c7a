//! Reference tables used by the verification battery: positive-root lists,
//! generator matrices, structure constants, orbits and group orders. All of
//! them are cross-checked against independently computed values in the
//! acceptance suite; the structure-constant table is additionally pinned by
//! the algebraic identities it must satisfy (antisymmetry, |N| = q+1,
//! N·N₋ = −(q+1)²).

/// The 120 positive roots of E8 in the reference order (increasing
/// height, ties by descending lexicographic coefficient order).
pub const E8_POSITIVE_ROOTS: [[i64; 8]; 120] = [
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [1, 0, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, 1],
    [1, 0, 1, 1, 0, 0, 0, 0],
    [0, 1, 1, 1, 0, 0, 0, 0],
    [0, 1, 0, 1, 1, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 0],
    [0, 0, 0, 0, 0, 1, 1, 1],
    [1, 1, 1, 1, 0, 0, 0, 0],
    [1, 0, 1, 1, 1, 0, 0, 0],
    [0, 1, 1, 1, 1, 0, 0, 0],
    [0, 1, 0, 1, 1, 1, 0, 0],
    [0, 0, 1, 1, 1, 1, 0, 0],
    [0, 0, 0, 1, 1, 1, 1, 0],
    [0, 0, 0, 0, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 0, 0, 0],
    [1, 0, 1, 1, 1, 1, 0, 0],
    [0, 1, 1, 2, 1, 0, 0, 0],
    [0, 1, 1, 1, 1, 1, 0, 0],
    [0, 1, 0, 1, 1, 1, 1, 0],
    [0, 0, 1, 1, 1, 1, 1, 0],
    [0, 0, 0, 1, 1, 1, 1, 1],
    [1, 1, 1, 2, 1, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 0, 0],
    [1, 0, 1, 1, 1, 1, 1, 0],
    [0, 1, 1, 2, 1, 1, 0, 0],
    [0, 1, 1, 1, 1, 1, 1, 0],
    [0, 1, 0, 1, 1, 1, 1, 1],
    [0, 0, 1, 1, 1, 1, 1, 1],
    [1, 1, 2, 2, 1, 0, 0, 0],
    [1, 1, 1, 2, 1, 1, 0, 0],
    [1, 1, 1, 1, 1, 1, 1, 0],
    [1, 0, 1, 1, 1, 1, 1, 1],
    [0, 1, 1, 2, 2, 1, 0, 0],
    [0, 1, 1, 2, 1, 1, 1, 0],
    [0, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 2, 2, 1, 1, 0, 0],
    [1, 1, 1, 2, 2, 1, 0, 0],
    [1, 1, 1, 2, 1, 1, 1, 0],
    [1, 1, 1, 1, 1, 1, 1, 1],
    [0, 1, 1, 2, 2, 1, 1, 0],
    [0, 1, 1, 2, 1, 1, 1, 1],
    [1, 1, 2, 2, 2, 1, 0, 0],
    [1, 1, 2, 2, 1, 1, 1, 0],
    [1, 1, 1, 2, 2, 1, 1, 0],
    [1, 1, 1, 2, 1, 1, 1, 1],
    [0, 1, 1, 2, 2, 2, 1, 0],
    [0, 1, 1, 2, 2, 1, 1, 1],
    [1, 1, 2, 3, 2, 1, 0, 0],
    [1, 1, 2, 2, 2, 1, 1, 0],
    [1, 1, 2, 2, 1, 1, 1, 1],
    [1, 1, 1, 2, 2, 2, 1, 0],
    [1, 1, 1, 2, 2, 1, 1, 1],
    [0, 1, 1, 2, 2, 2, 1, 1],
    [1, 2, 2, 3, 2, 1, 0, 0],
    [1, 1, 2, 3, 2, 1, 1, 0],
    [1, 1, 2, 2, 2, 2, 1, 0],
    [1, 1, 2, 2, 2, 1, 1, 1],
    [1, 1, 1, 2, 2, 2, 1, 1],
    [0, 1, 1, 2, 2, 2, 2, 1],
    [1, 2, 2, 3, 2, 1, 1, 0],
    [1, 1, 2, 3, 2, 2, 1, 0],
    [1, 1, 2, 3, 2, 1, 1, 1],
    [1, 1, 2, 2, 2, 2, 1, 1],
    [1, 1, 1, 2, 2, 2, 2, 1],
    [1, 2, 2, 3, 2, 2, 1, 0],
    [1, 2, 2, 3, 2, 1, 1, 1],
    [1, 1, 2, 3, 3, 2, 1, 0],
    [1, 1, 2, 3, 2, 2, 1, 1],
    [1, 1, 2, 2, 2, 2, 2, 1],
    [1, 2, 2, 3, 3, 2, 1, 0],
    [1, 2, 2, 3, 2, 2, 1, 1],
    [1, 1, 2, 3, 3, 2, 1, 1],
    [1, 1, 2, 3, 2, 2, 2, 1],
    [1, 2, 2, 4, 3, 2, 1, 0],
    [1, 2, 2, 3, 3, 2, 1, 1],
    [1, 2, 2, 3, 2, 2, 2, 1],
    [1, 1, 2, 3, 3, 2, 2, 1],
    [1, 2, 3, 4, 3, 2, 1, 0],
    [1, 2, 2, 4, 3, 2, 1, 1],
    [1, 2, 2, 3, 3, 2, 2, 1],
    [1, 1, 2, 3, 3, 3, 2, 1],
    [2, 2, 3, 4, 3, 2, 1, 0],
    [1, 2, 3, 4, 3, 2, 1, 1],
    [1, 2, 2, 4, 3, 2, 2, 1],
    [1, 2, 2, 3, 3, 3, 2, 1],
    [2, 2, 3, 4, 3, 2, 1, 1],
    [1, 2, 3, 4, 3, 2, 2, 1],
    [1, 2, 2, 4, 3, 3, 2, 1],
    [2, 2, 3, 4, 3, 2, 2, 1],
    [1, 2, 3, 4, 3, 3, 2, 1],
    [1, 2, 2, 4, 4, 3, 2, 1],
    [2, 2, 3, 4, 3, 3, 2, 1],
    [1, 2, 3, 4, 4, 3, 2, 1],
    [2, 2, 3, 4, 4, 3, 2, 1],
    [1, 2, 3, 5, 4, 3, 2, 1],
    [2, 2, 3, 5, 4, 3, 2, 1],
    [1, 3, 3, 5, 4, 3, 2, 1],
    [2, 3, 3, 5, 4, 3, 2, 1],
    [2, 2, 4, 5, 4, 3, 2, 1],
    [2, 3, 4, 5, 4, 3, 2, 1],
    [2, 3, 4, 6, 4, 3, 2, 1],
    [2, 3, 4, 6, 5, 3, 2, 1],
    [2, 3, 4, 6, 5, 4, 2, 1],
    [2, 3, 4, 6, 5, 4, 3, 1],
    [2, 3, 4, 6, 5, 4, 3, 2],
];

/// Structure constants N(a, b) of G2 for the collection normalized by
/// [e_a, e_-a] = h_a, rows/cols in root-index order (12 x 12); i32::MIN
/// marks the a + b = 0 slots (the bracket is the coroot there).
pub const G2_STRUCTURE_CONSTANTS: [[i32; 12]; 12] = [
    [0, 1, 0, 0, 1, 0, i32::MIN, 0, -1, 0, 0, -1],
    [-1, 0, -2, -3, 0, 0, 0, i32::MIN, 3, 2, 1, 0],
    [0, 2, 0, -3, 0, 0, -1, 3, i32::MIN, -2, 0, 1],
    [0, 3, 3, 0, 0, 0, 0, 2, -2, i32::MIN, -1, -1],
    [-1, 0, 0, 0, 0, 0, 0, 1, 0, -1, i32::MIN, 1],
    [0, 0, 0, 0, 0, 0, -1, 0, 1, -1, 1, i32::MIN],
    [i32::MIN, 0, 1, 0, 0, 1, 0, -1, 0, 0, -1, 0],
    [0, i32::MIN, -3, -2, -1, 0, 1, 0, 2, 3, 0, 0],
    [1, -3, i32::MIN, 2, 0, -1, 0, -2, 0, 3, 0, 0],
    [0, -2, 2, i32::MIN, 1, 1, 0, -3, -3, 0, 0, 0],
    [0, -1, 0, 1, i32::MIN, -1, 1, 0, 0, 0, 0, 0],
    [1, 0, -1, 1, -1, i32::MIN, 0, 0, 0, 0, 0, 0],
];

/// The six positive roots of G2, order-exactly.
pub const G2_POSITIVE_ROOTS: [[i64; 2]; 6] = [[1, 0], [0, 1], [1, 1], [1, 2], [1, 3], [2, 3]];

/// The four 14×14 generator matrices of the G2 model (e1, e2, f1, f2),
/// one digit per entry, rows top to bottom.
pub const G2_MODEL_E1: [&str; 14] = [
    "01000000000000", "00000000000000", "00000000000000", "00001000000000",
    "00000000000000", "00000023000000", "00000000100000", "00000000000000",
    "00000000000000", "00000000001000", "00000000000000", "00000000000000",
    "00000000000001", "00000000000000",
];
pub const G2_MODEL_E2: [&str; 14] = [
    "00000000000000", "00300000000000", "00020000000000", "00000100000000",
    "00000012000000", "00000000000000", "00000000000000", "00000000010000",
    "00000000003000", "00000000000000", "00000000000200", "00000000000010",
    "00000000000000", "00000000000000",
];
pub const G2_MODEL_F1: [&str; 14] = [
    "00000000000000", "10000000000000", "00000000000000", "00000000000000",
    "00010000000000", "00000000000000", "00000100000000", "00000000000000",
    "00000023000000", "00000000000000", "00000000010000", "00000000000000",
    "00000000000000", "00000000000010",
];
pub const G2_MODEL_F2: [&str; 14] = [
    "00000000000000", "00000000000000", "01000000000000", "00200000000000",
    "00000000000000", "00030000000000", "00000000000000", "00001000000000",
    "00000000000000", "00000012000000", "00000000100000", "00000000002000",
    "00000000000300", "00000000000000",
];

/// The 27-element weight orbit of the first fundamental weight of E6, in
/// discovery order.
pub const E6_ORBIT_27: [[i64; 6]; 27] = [
    [1, 0, 0, 0, 0, 0], [-1, 0, 1, 0, 0, 0], [0, 0, -1, 1, 0, 0],
    [0, 1, 0, -1, 1, 0], [0, -1, 0, 0, 1, 0], [0, 1, 0, 0, -1, 1],
    [0, -1, 0, 1, -1, 1], [0, 1, 0, 0, 0, -1], [0, 0, 1, -1, 0, 1],
    [0, -1, 0, 1, 0, -1], [1, 0, -1, 0, 0, 1], [0, 0, 1, -1, 1, -1],
    [-1, 0, 0, 0, 0, 1], [1, 0, -1, 0, 1, -1], [0, 0, 1, 0, -1, 0],
    [-1, 0, 0, 0, 1, -1], [1, 0, -1, 1, -1, 0], [-1, 0, 0, 1, -1, 0],
    [1, 1, 0, -1, 0, 0], [-1, 1, 1, -1, 0, 0], [1, -1, 0, 0, 0, 0],
    [-1, -1, 1, 0, 0, 0], [0, 1, -1, 0, 0, 0], [0, -1, -1, 1, 0, 0],
    [0, 0, 0, -1, 1, 0], [0, 0, 0, 0, -1, 1], [0, 0, 0, 0, 0, -1],
];

/// The 7-dimensional G2 module: sparse entries (row, col, value), 1-based.
pub const G2_DIM7_E1: &[(usize, usize, i64)] = &[(2, 3, 1), (5, 6, 1)];
pub const G2_DIM7_E2: &[(usize, usize, i64)] = &[(1, 2, 1), (3, 4, 2), (4, 5, 1), (6, 7, 1)];
pub const G2_DIM7_F1: &[(usize, usize, i64)] = &[(3, 2, 1), (6, 5, 1)];
pub const G2_DIM7_F2: &[(usize, usize, i64)] = &[(2, 1, 1), (4, 3, 1), (5, 4, 2), (7, 6, 1)];
pub const G2_DIM7_H1: [i64; 7] = [0, 1, -1, 0, 1, -1, 0];
pub const G2_DIM7_H2: [i64; 7] = [1, -1, 2, 0, -2, 1, -1];

/// Off-diagonal entries of the one-parameter generators on the G2
/// 7-dimensional module: (row, col, coefficient, power of ζ), 1-based.
pub const G2_DIM7_X1: &[(usize, usize, i64, u32)] = &[(2, 3, 1, 1), (5, 6, 1, 1)];
pub const G2_DIM7_X2: &[(usize, usize, i64, u32)] =
    &[(1, 2, 1, 1), (3, 4, 2, 1), (3, 5, 1, 2), (4, 5, 1, 1), (6, 7, 1, 1)];
pub const G2_DIM7_Y1: &[(usize, usize, i64, u32)] = &[(3, 2, 1, 1), (6, 5, 1, 1)];
pub const G2_DIM7_Y2: &[(usize, usize, i64, u32)] =
    &[(2, 1, 1, 1), (4, 3, 1, 1), (5, 3, 1, 2), (5, 4, 2, 1), (7, 6, 1, 1)];
/// x_β(ζ) for the four non-simple positive roots of G2 on the 7-dim module,
/// in root order α1+α2, α1+2α2, α1+3α2, 2α1+3α2.
pub const G2_DIM7_X_A1A2: &[(usize, usize, i64, u32)] =
    &[(1, 3, 1, 1), (2, 4, -2, 1), (2, 6, -1, 2), (4, 6, 1, 1), (5, 7, -1, 1)];
pub const G2_DIM7_X_A1A2A2: &[(usize, usize, i64, u32)] =
    &[(1, 4, -2, 1), (1, 7, 1, 2), (2, 5, 1, 1), (3, 6, 1, 1), (4, 7, -1, 1)];
pub const G2_DIM7_X_A1A2A2A2: &[(usize, usize, i64, u32)] = &[(1, 5, 1, 1), (3, 7, -1, 1)];
pub const G2_DIM7_X_HIGHEST: &[(usize, usize, i64, u32)] = &[(1, 6, -1, 1), (2, 7, -1, 1)];

/// C2 minuscule module generators over ℤ\[T\], off-diagonal entries
/// (row, col, coefficient, power), 1-based.
pub const C2_MINUSCULE_X1: &[(usize, usize, i64, u32)] = &[(2, 3, 1, 1)];
pub const C2_MINUSCULE_X2: &[(usize, usize, i64, u32)] = &[(1, 2, 1, 1), (3, 4, 1, 1)];
pub const C2_MINUSCULE_Y1: &[(usize, usize, i64, u32)] = &[(3, 2, 1, 1)];
pub const C2_MINUSCULE_Y2: &[(usize, usize, i64, u32)] = &[(2, 1, 1, 1), (4, 3, 1, 1)];

/// A1 adjoint X1(T) / Y1(T), off-diagonal entries (row, col, coeff, power).
pub const A1_ADJOINT_X1: &[(usize, usize, i64, u32)] = &[(1, 2, 2, 1), (1, 3, 1, 2), (2, 3, 1, 1)];
pub const A1_ADJOINT_Y1: &[(usize, usize, i64, u32)] = &[(2, 1, 1, 1), (3, 1, 1, 2), (3, 2, 2, 1)];

/// The 5×5 matrices of x(t) and y(t) on the 5-dimensional irreducible
/// A1-module: off-diagonal entries (row, col, coeff, power).
pub const SL2_IRREP4_X: &[(usize, usize, i64, u32)] = &[
    (1, 2, 4, 1), (1, 3, 6, 2), (1, 4, 4, 3), (1, 5, 1, 4),
    (2, 3, 3, 1), (2, 4, 3, 2), (2, 5, 1, 3),
    (3, 4, 2, 1), (3, 5, 1, 2),
    (4, 5, 1, 1),
];
pub const SL2_IRREP4_Y: &[(usize, usize, i64, u32)] = &[
    (2, 1, 1, 1),
    (3, 1, 1, 2), (3, 2, 2, 1),
    (4, 1, 1, 3), (4, 2, 3, 2), (4, 3, 3, 1),
    (5, 1, 1, 4), (5, 2, 4, 3), (5, 3, 6, 2), (5, 4, 4, 1),
];

/// Weyl group orders of the exceptional types.
pub const EXCEPTIONAL_ORDERS: [(&str, u64); 5] = [
    ("g2", 12),
    ("f4", 1152),
    ("e6", 51840),
    ("e7", 2903040),
    ("e8", 696729600),
];

/// Highest roots per family at reference ranks.
pub const HIGHEST_ROOTS: [(&str, &[i64]); 5] = [
    ("g2", &[2, 3]),
    ("f4", &[2, 3, 4, 2]),
    ("e6", &[1, 2, 2, 3, 2, 1]),
    ("e7", &[2, 2, 3, 4, 3, 2, 1]),
    ("e8", &[2, 3, 4, 6, 5, 4, 3, 2]),
];
