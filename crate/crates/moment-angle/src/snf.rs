//! Exact Smith normal form of integer matrices.
//!
//! The reduction records every elementary row/column operation it performs,
//! so a decomposition can be replayed against the original matrix and checked
//! bit-exactly. Arithmetic runs over `i128` and transparently restarts over
//! arbitrary-precision integers if an intermediate value overflows.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// A dense integer matrix with `i64` entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }
}

/// One elementary unimodular operation, as applied during the reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementaryOp {
    SwapRows(usize, usize),
    SwapCols(usize, usize),
    NegateRow(usize),
    NegateCol(usize),
    /// `row[dst] += factor * row[src]`
    AddRowMultiple { src: usize, dst: usize, factor: BigInt },
    /// `col[dst] += factor * col[src]`
    AddColMultiple { src: usize, dst: usize, factor: BigInt },
}

/// Result of a Smith normal form computation.
///
/// `diagonal` holds the invariant factors: nonnegative, each dividing the
/// next, zeros trailing, of length `min(rows, cols)`. `ops` is the exact
/// sequence of elementary operations; replaying them over the input matrix
/// reproduces the diagonal matrix entry for entry.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub rows: usize,
    pub cols: usize,
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    pub ops: Vec<ElementaryOp>,
}

impl SmithDecomposition {
    /// Applies the recorded operations to `input` and returns the result.
    pub fn replay(&self, input: &IntMatrix) -> Vec<Vec<BigInt>> {
        assert_eq!((input.rows(), input.cols()), (self.rows, self.cols));
        let mut m: Vec<Vec<BigInt>> = (0..input.rows())
            .map(|i| (0..input.cols()).map(|j| BigInt::from(input.get(i, j))).collect())
            .collect();
        for op in &self.ops {
            match op {
                ElementaryOp::SwapRows(a, b) => m.swap(*a, *b),
                ElementaryOp::SwapCols(a, b) => {
                    for row in &mut m {
                        row.swap(*a, *b);
                    }
                }
                ElementaryOp::NegateRow(r) => {
                    for v in &mut m[*r] {
                        *v = -std::mem::take(v);
                    }
                }
                ElementaryOp::NegateCol(c) => {
                    for row in &mut m {
                        row[*c] = -std::mem::take(&mut row[*c]);
                    }
                }
                ElementaryOp::AddRowMultiple { src, dst, factor } => {
                    for j in 0..self.cols {
                        let add = &m[*src][j] * factor;
                        m[*dst][j] += add;
                    }
                }
                ElementaryOp::AddColMultiple { src, dst, factor } => {
                    for row in &mut m {
                        let add = &row[*src] * factor;
                        row[*dst] += add;
                    }
                }
            }
        }
        m
    }

    /// True iff replaying the operations over `input` yields exactly the
    /// recorded diagonal.
    pub fn verify_replay(&self, input: &IntMatrix) -> bool {
        let m = self.replay(input);
        for (i, row) in m.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let expect = if i == j && i < self.diagonal.len() {
                    self.diagonal[i].clone()
                } else {
                    BigInt::zero()
                };
                if *v != expect {
                    return false;
                }
            }
        }
        true
    }

    /// The invariant factors greater than 1 (the torsion part).
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| **d > BigInt::from(1)).cloned().collect()
    }
}

/// Computes the Smith normal form of `m`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    match reduce::<i128>(m) {
        Some(d) => d,
        // An intermediate value left the i128 range; redo everything with
        // arbitrary precision.
        None => reduce::<BigInt>(m).expect("bigint reduction cannot overflow"),
    }
}

/// Scalar abstraction for the reduction: `i128` with overflow detection, or
/// `BigInt` which never fails.
trait Scalar: Clone + Eq + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn abs_cmp(&self, other: &Self) -> Ordering;
    fn checked_neg(&self) -> Option<Self>;
    /// `self - q * other`
    fn checked_sub_mul(&self, q: &Self, other: &Self) -> Option<Self>;
    /// Quotient truncated toward zero.
    fn div_trunc(&self, other: &Self) -> Self;
    fn rem_trunc(&self, other: &Self) -> Self;
    fn to_bigint(&self) -> BigInt;
}

impl Scalar for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn abs_cmp(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn checked_neg(&self) -> Option<Self> {
        i128::checked_neg(*self)
    }
    fn checked_sub_mul(&self, q: &Self, other: &Self) -> Option<Self> {
        q.checked_mul(*other).and_then(|p| self.checked_sub(p))
    }
    fn div_trunc(&self, other: &Self) -> Self {
        self / other
    }
    fn rem_trunc(&self, other: &Self) -> Self {
        self % other
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs_cmp(&self, other: &Self) -> Ordering {
        self.abs().cmp(&other.abs())
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self.clone())
    }
    fn checked_sub_mul(&self, q: &Self, other: &Self) -> Option<Self> {
        Some(self - q * other)
    }
    fn div_trunc(&self, other: &Self) -> Self {
        self / other
    }
    fn rem_trunc(&self, other: &Self) -> Self {
        self % other
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

struct Reducer<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
    ops: Vec<ElementaryOp>,
}

impl<S: Scalar> Reducer<S> {
    fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
        self.ops.push(ElementaryOp::SwapRows(a, b));
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
        self.ops.push(ElementaryOp::SwapCols(a, b));
    }

    fn negate_row(&mut self, r: usize) -> Option<()> {
        for j in 0..self.cols {
            let v = self.get(r, j).checked_neg()?;
            self.set(r, j, v);
        }
        self.ops.push(ElementaryOp::NegateRow(r));
        Some(())
    }

    /// `row[dst] -= q * row[src]`
    fn sub_row_multiple(&mut self, src: usize, dst: usize, q: &S) -> Option<()> {
        if q.is_zero() {
            return Some(());
        }
        for j in 0..self.cols {
            let v = self.get(dst, j).checked_sub_mul(q, self.get(src, j))?;
            self.set(dst, j, v);
        }
        let factor = q.checked_neg()?.to_bigint();
        self.ops.push(ElementaryOp::AddRowMultiple { src, dst, factor });
        Some(())
    }

    /// `col[dst] -= q * col[src]`
    fn sub_col_multiple(&mut self, src: usize, dst: usize, q: &S) -> Option<()> {
        if q.is_zero() {
            return Some(());
        }
        for i in 0..self.rows {
            let v = self.get(i, dst).checked_sub_mul(q, self.get(i, src))?;
            self.set(i, dst, v);
        }
        let factor = q.checked_neg()?.to_bigint();
        self.ops.push(ElementaryOp::AddColMultiple { src, dst, factor });
        Some(())
    }

    /// `row[dst] += row[src]` (used for the divisibility fixup).
    fn add_row(&mut self, src: usize, dst: usize) -> Option<()> {
        let minus_one = S::from_i64(-1);
        for j in 0..self.cols {
            let v = self.get(dst, j).checked_sub_mul(&minus_one, self.get(src, j))?;
            self.set(dst, j, v);
        }
        self.ops.push(ElementaryOp::AddRowMultiple { src, dst, factor: BigInt::from(1) });
        Some(())
    }

    /// Pivot of least absolute value in the trailing submatrix, ties broken
    /// by smallest row then column.
    fn find_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in k..self.rows {
            for j in k..self.cols {
                let v = self.get(i, j);
                if v.is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if v.abs_cmp(self.get(bi, bj)) == Ordering::Less {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }
}

fn reduce<S: Scalar>(input: &IntMatrix) -> Option<SmithDecomposition> {
    let rows = input.rows();
    let cols = input.cols();
    let data: Vec<S> = (0..rows * cols)
        .map(|idx| S::from_i64(input.data[idx]))
        .collect();
    let mut r = Reducer { rows, cols, data, ops: Vec::new() };
    let n = rows.min(cols);
    let mut rank = 0usize;

    'outer: for k in 0..n {
        let Some((pi, pj)) = r.find_pivot(k) else {
            break 'outer;
        };
        r.swap_rows(k, pi);
        r.swap_cols(k, pj);
        loop {
            // Reduce the pivot column and row modulo the pivot.
            let mut dirty = false;
            for i in k + 1..r.rows {
                if !r.get(i, k).is_zero() {
                    let q = r.get(i, k).div_trunc(r.get(k, k));
                    r.sub_row_multiple(k, i, &q)?;
                    if !r.get(i, k).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in k + 1..r.cols {
                if !r.get(k, j).is_zero() {
                    let q = r.get(k, j).div_trunc(r.get(k, k));
                    r.sub_col_multiple(k, j, &q)?;
                    if !r.get(k, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // A remainder survived; it is smaller than the pivot, so
                // re-pivot and continue. Terminates by descent on |pivot|.
                let (pi, pj) = r.find_pivot(k).expect("nonzero entry remains");
                r.swap_rows(k, pi);
                r.swap_cols(k, pj);
                continue;
            }
            // A unit pivot divides everything; skip the scan.
            if r.get(k, k).abs_cmp(&S::from_i64(1)) == Ordering::Equal {
                break;
            }
            // Row and column are clear. Enforce divisibility of the trailing
            // submatrix by the pivot.
            let mut offender: Option<usize> = None;
            'scan: for i in k + 1..r.rows {
                for j in k + 1..r.cols {
                    if !r.get(i, j).rem_trunc(r.get(k, k)).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    r.add_row(i, k)?;
                }
                None => break,
            }
        }
        if r.get(k, k).is_negative() {
            r.negate_row(k)?;
        }
        rank = k + 1;
    }

    let diagonal: Vec<BigInt> = (0..n).map(|k| r.get(k, k).to_bigint()).collect();
    Some(SmithDecomposition { rows, cols, diagonal, rank, ops: r.ops })
}
