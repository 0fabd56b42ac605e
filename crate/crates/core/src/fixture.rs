//! The 3x2 barrier example: columns `(?, 2, 2)` and `(2, ?, 1)` of a rank-1
//! matrix, a generating direction, and a starting point whose descent path is
//! blocked by the first column.

use crate::types::{ObservedMatrix, UnitVector};

/// Observed entries, 0-based.
pub const EXAMPLE_ENTRIES: [(usize, usize, f64); 4] =
    [(1, 0, 2.0), (2, 0, 2.0), (0, 1, 2.0), (2, 1, 1.0)];

/// The same data as a MatrixMarket coordinate file (1-based).
pub const EXAMPLE_MATRIX_MARKET: &str = "%%MatrixMarket matrix coordinate real general
% rank-1 barrier example: columns (?, 2, 2) and (2, ?, 1)
3 2 4
2 1 2
3 1 2
1 2 2
3 2 1
";

pub fn example_matrix() -> ObservedMatrix {
    ObservedMatrix::new(3, 2, EXAMPLE_ENTRIES).expect("fixture is valid")
}

/// `(2, 1, 1)/√6`, which fits every observation.
pub fn generating_direction() -> UnitVector {
    UnitVector::normalize(vec![2.0, 1.0, 1.0]).expect("nonzero")
}

/// `(-10, 1, 1)/√102`: the first column is fitted exactly but the descent
/// path towards a solution crosses the contour `f_1 = 8`.
pub fn blocked_start() -> UnitVector {
    UnitVector::normalize(vec![-10.0, 1.0, 1.0]).expect("nonzero")
}
