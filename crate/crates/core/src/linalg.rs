//! Dense exact linear algebra over a prime field.
//!
//! The workhorse is [`Echelon`], an incrementally built row echelon basis
//! with deterministic pivoting: rows are inserted in caller order and the
//! pivot of a row is its first nonzero column. Elimination accumulates
//! unreduced `u64` products and reduces lazily, which keeps the inner loop
//! free of divisions (sound for `p < 2^20` and up to `2^22` columns, see
//! [`crate::fp::MAX_PRIME`]).

use crate::fp::PrimeField;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Row-major matrix over F_p with entries stored reduced in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    field: PrimeField,
    cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        Self {
            field,
            cols,
            data: Vec::new(),
        }
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: Vec<Vec<u64>>) -> Self {
        let mut m = Self::new(field, cols);
        for r in rows {
            m.push_row(&r);
        }
        m
    }

    pub fn push_row(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.cols);
        let p = self.field.modulus();
        self.data.extend(row.iter().map(|&x| x % p));
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        if self.cols == 0 {
            0
        } else {
            self.data.len() / self.cols
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.field, self.cols);
        for i in 0..self.rows() {
            ech.insert(self.row(i).to_vec());
        }
        ech.rank()
    }

    /// Entrywise product of two rows (of this width), reduced.
    pub fn pointwise(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.field.modulus();
        a.iter().zip(b).map(|(&x, &y)| x * y % p).collect()
    }
}

impl Serialize for FpMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows()))?;
        for i in 0..self.rows() {
            seq.serialize_element(self.row(i))?;
        }
        seq.end()
    }
}

const NO_PIVOT: u32 = u32::MAX;

/// Incremental row echelon basis with recorded pivot columns.
///
/// Stored rows are fully reduced and normalized to pivot value 1, in
/// insertion order; that order is the canonical basis order used by the
/// graded ring pieces.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: PrimeField,
    cols: usize,
    rows: Vec<Vec<u64>>,
    pivot_cols: Vec<usize>,
    row_of_col: Vec<u32>,
}

impl Echelon {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        assert!(cols < (1 << 22), "column count too large for lazy reduction");
        Self {
            field,
            cols,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
            row_of_col: vec![NO_PIVOT; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i]
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Insert a row (entries already reduced); returns true if the rank grew.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        let p = self.field.modulus();
        let mut j = 0;
        while j < self.cols {
            let v = row[j] % p;
            if v == 0 {
                row[j] = 0;
                j += 1;
                continue;
            }
            let r = self.row_of_col[j];
            if r == NO_PIVOT {
                // New pivot: normalize and store.
                let inv = self.field.inv(v);
                for x in row.iter_mut() {
                    *x = *x % p * inv % p;
                }
                self.row_of_col[j] = self.rows.len() as u32;
                self.pivot_cols.push(j);
                self.rows.push(row);
                return true;
            }
            axpy(&mut row[j..], p - v, &self.rows[r as usize][j..]);
            row[j] = 0;
            j += 1;
        }
        false
    }

    /// Coordinates of `row` in the stored basis, or None if it lies
    /// outside the span. `coords[i]` multiplies `self.row(i)`.
    pub fn coords(&self, mut row: Vec<u64>) -> Option<Vec<u64>> {
        debug_assert_eq!(row.len(), self.cols);
        let p = self.field.modulus();
        let mut out = vec![0u64; self.rows.len()];
        let mut j = 0;
        while j < self.cols {
            let v = row[j] % p;
            if v == 0 {
                j += 1;
                continue;
            }
            let r = self.row_of_col[j];
            if r == NO_PIVOT {
                return None;
            }
            out[r as usize] = v;
            axpy(&mut row[j..], p - v, &self.rows[r as usize][j..]);
            row[j] = 0;
            j += 1;
        }
        Some(out)
    }

    /// True if `row` lies in the span of the stored basis.
    pub fn contains(&self, row: Vec<u64>) -> bool {
        self.coords(row).is_some()
    }
}

#[inline]
fn axpy(dst: &mut [u64], c: u64, src: &[u64]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, &s) in dst.iter_mut().zip(src) {
        *d += c * s;
    }
}

/// Basis of the left null space of the given rows: all coefficient vectors
/// `c` with `sum_i c[i] * rows[i] = 0`. Deterministic; kernel vectors come
/// out in the order the defining rows reduce to zero.
pub fn left_nullspace(field: PrimeField, cols: usize, rows: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let p = field.modulus();
    let n = rows.len();
    let mut ech = Echelon::new(field, cols);
    // Augmented elimination: track the coefficient combination by hand so the
    // main part can use the shared kernels.
    let mut kernel = Vec::new();
    let mut combos: Vec<Vec<u64>> = Vec::new(); // per stored echelon row
    for (i, row) in rows.iter().enumerate() {
        let mut work = row.clone();
        let mut combo = vec![0u64; n];
        combo[i] = 1;
        let mut j = 0;
        let mut placed = false;
        while j < cols {
            let v = work[j] % p;
            if v == 0 {
                work[j] = 0;
                j += 1;
                continue;
            }
            let r = ech.row_of_col[j];
            if r == NO_PIVOT {
                let inv = field.inv(v);
                for x in work.iter_mut() {
                    *x = *x % p * inv % p;
                }
                for x in combo.iter_mut() {
                    *x = *x % p * inv % p;
                }
                ech.row_of_col[j] = ech.rows.len() as u32;
                ech.pivot_cols.push(j);
                ech.rows.push(work);
                combos.push(combo);
                placed = true;
                break;
            }
            let c = p - v;
            axpy(&mut work[j..], c, &ech.rows[r as usize][j..]);
            work[j] = 0;
            axpy(&mut combo, c, &combos[r as usize]);
            for x in combo.iter_mut() {
                *x %= p;
            }
            j += 1;
        }
        if !placed {
            for x in combo.iter_mut() {
                *x %= p;
            }
            kernel.push(combo);
        }
    }
    kernel
}
