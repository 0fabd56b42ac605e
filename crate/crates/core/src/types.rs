//! Observed data and points on the Grassmann manifold of lines.

use std::collections::HashSet;
use std::ops::Range;

use crate::error::{Error, Result};

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

/// Tolerance on `|‖v‖ - 1|` accepted by [`UnitVector::new`].
pub const UNIT_NORM_TOL: f64 = 1e-12;
/// Tolerance on `|⟨u, h⟩|` accepted by [`GeodesicRay::new`].
pub const TANGENCY_TOL: f64 = 1e-10;

/// One observed entry, 0-based.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub value: f64,
}

/// The observed entries of an `m x n` matrix.
///
/// Entries are stored column-major (sorted by column, then row) so every
/// column's observations form one contiguous slice. The matrix is immutable
/// once built.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservedMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Entry>,
    col_start: Vec<usize>,
    norm_sq: f64,
}

impl ObservedMatrix {
    /// Builds a validated matrix from 0-based `(row, col, value)` triplets.
    ///
    /// Duplicated indices are rejected rather than merged.
    pub fn new(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyShape { rows, cols });
        }
        let mut entries = Vec::new();
        let mut seen = HashSet::new();
        for (row, col, value) in triplets {
            if row >= rows || col >= cols {
                return Err(Error::OutOfRange {
                    row,
                    col,
                    rows,
                    cols,
                });
            }
            if !value.is_finite() {
                return Err(Error::NonFinite { row, col });
            }
            if !seen.insert((row, col)) {
                return Err(Error::DuplicateEntry { row, col });
            }
            entries.push(Entry { row, col, value });
        }
        entries.sort_by_key(|e| (e.col, e.row));

        let mut col_start = vec![0; cols + 1];
        for e in &entries {
            col_start[e.col + 1] += 1;
        }
        for j in 0..cols {
            col_start[j + 1] += col_start[j];
        }
        let norm_sq = entries.iter().map(|e| e.value * e.value).sum();
        Ok(Self {
            rows,
            cols,
            entries,
            col_start,
            norm_sq,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of observed entries, `|Ω|`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// All entries in column-major order.
    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Observed entries of column `j`, sorted by row.
    ///
    /// # Panics
    /// If `j >= self.cols()`.
    pub fn column(&self, j: usize) -> &[Entry] {
        &self.entries[self.column_range(j)]
    }

    fn column_range(&self, j: usize) -> Range<usize> {
        self.col_start[j]..self.col_start[j + 1]
    }

    pub fn check_column(&self, j: usize) -> Result<()> {
        if j < self.cols {
            Ok(())
        } else {
            Err(Error::ColumnOutOfRange {
                col: j,
                cols: self.cols,
            })
        }
    }

    /// `‖X_Ω‖_F²`, cached at construction.
    pub fn norm_sq(&self) -> f64 {
        self.norm_sq
    }

    /// Returns `c · X_Ω` over the same index set.
    pub fn scaled(&self, c: f64) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            e.value *= c;
        }
        out.norm_sq = out.entries.iter().map(|e| e.value * e.value).sum();
        out
    }

    /// Dense row-major copy with unobserved entries set to zero.
    pub fn to_dense(&self) -> Vec<f64> {
        let mut dense = vec![0.0; self.rows * self.cols];
        for e in &self.entries {
            dense[e.row * self.cols + e.col] = e.value;
        }
        dense
    }
}

/// A unit-norm vector in `R^m`, standing for the line it spans.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVector(Vec<f64>);

impl UnitVector {
    /// Wraps `v` after checking `‖v‖ = 1` within [`UNIT_NORM_TOL`].
    pub fn new(v: Vec<f64>) -> Result<Self> {
        let n = norm(&v);
        if !n.is_finite() || (n - 1.0).abs() > UNIT_NORM_TOL {
            return Err(Error::NotUnitNorm { norm: n });
        }
        Ok(Self(v))
    }

    /// Scales `v` to unit length.
    pub fn normalize(mut v: Vec<f64>) -> Result<Self> {
        let n = norm(&v);
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::ZeroVector);
        }
        v.iter_mut().for_each(|x| *x /= n);
        Ok(Self(v))
    }

    /// The `i`-th standard basis vector of `R^m`.
    pub fn basis(m: usize, i: usize) -> Self {
        let mut v = vec![0.0; m];
        v[i] = 1.0;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    /// The antipodal generator `-u` of the same line.
    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|x| -x).collect())
    }
}

impl AsRef<[f64]> for UnitVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// A geodesic `u(t) = u cos t + h sin t` leaving `u` along the unit tangent `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicRay {
    base: UnitVector,
    direction: Vec<f64>,
}

impl GeodesicRay {
    pub fn new(base: UnitVector, direction: Vec<f64>) -> Result<Self> {
        if direction.len() != base.dim() {
            return Err(Error::DimensionMismatch {
                expected: base.dim(),
                actual: direction.len(),
            });
        }
        let n = norm(&direction);
        if !n.is_finite() || (n - 1.0).abs() > UNIT_NORM_TOL {
            return Err(Error::NotUnitNorm { norm: n });
        }
        let inner = dot(base.as_slice(), &direction);
        if inner.abs() > TANGENCY_TOL {
            return Err(Error::NotTangent { inner });
        }
        Ok(Self { base, direction })
    }

    pub fn base(&self) -> &UnitVector {
        &self.base
    }

    pub fn direction(&self) -> &[f64] {
        &self.direction
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }
}
