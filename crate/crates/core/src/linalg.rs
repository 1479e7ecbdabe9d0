//! Dense exact linear algebra over GF(p).
//!
//! Vectors are columns. Elimination always takes the leftmost available pivot
//! column and, within it, the first row with a nonzero entry, so every
//! decomposition is a pure function of its input.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::PrimeField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinalgError {
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    FieldMismatch,
    NoSolution,
    BadEntries,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::DimensionMismatch { op, left, right } => write!(
                f,
                "{op}: dimension mismatch {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            LinalgError::FieldMismatch => write!(f, "matrices over different fields"),
            LinalgError::NoSolution => write!(f, "linear system has no solution"),
            LinalgError::BadEntries => write!(f, "entry count or residue range invalid"),
        }
    }
}

impl core::error::Error for LinalgError {}

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[r * self.cols + c])?;
            }
        }
        write!(f, "]")
    }
}

/// Output of [`rref_decompose`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// Columns span the right null space.
    pub kernel_basis: Mat,
    /// The pivot columns of the input; they span its column space.
    pub image_basis: Mat,
    /// The reduced row echelon form itself.
    pub reduced: Mat,
}

impl Mat {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major residues, rejecting out-of-range entries.
    pub fn from_vec(
        field: PrimeField,
        rows: usize,
        cols: usize,
        data: Vec<u64>,
    ) -> Result<Mat, LinalgError> {
        if data.len() != rows * cols || data.iter().any(|&x| x >= field.modulus()) {
            return Err(LinalgError::BadEntries);
        }
        Ok(Mat {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from signed integers, reducing them mod p.
    pub fn from_i64(field: PrimeField, rows: usize, cols: usize, data: &[i64]) -> Mat {
        assert_eq!(data.len(), rows * cols);
        Mat {
            field,
            rows,
            cols,
            data: data.iter().map(|&x| field.from_i64(x)).collect(),
        }
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u64,
    ) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(field.reduce(f(r, c)));
            }
        }
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u64>]) -> Mat {
        let mut m = Mat::zeros(field, rows, columns.len());
        for (c, v) in columns.iter().enumerate() {
            assert_eq!(v.len(), rows);
            for r in 0..rows {
                m.data[r * m.cols + c] = v[r];
            }
        }
        m
    }

    /// Matrix whose rows are the given vectors (each of length `cols`).
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u64>]) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for v in rows {
            assert_eq!(v.len(), cols);
            data.extend_from_slice(v);
        }
        Mat {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Column vector.
    pub fn column(field: PrimeField, v: &[u64]) -> Mat {
        Mat {
            field,
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn data(&self) -> &[u64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = self.field.reduce(v);
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u64>> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    fn check_field(&self, other: &Mat) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        Ok(())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Mat) -> Result<Mat, LinalgError> {
        compose(self, other)
    }

    /// Matrix product; panics on shape mismatch. For internal use where
    /// shapes are guaranteed by construction.
    pub fn dot(&self, other: &Mat) -> Mat {
        compose(self, other).expect("matrix shapes agree by construction")
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.modulus();
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let mut acc = 0u64;
                for (a, b) in row.iter().zip(v) {
                    acc = (acc + a * b) % p;
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Result<Mat, LinalgError> {
        self.check_field(other)?;
        if self.shape() != other.shape() {
            return Err(LinalgError::DimensionMismatch {
                op: "add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let f = self.field;
        Ok(Mat {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat, LinalgError> {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: u64) -> Mat {
        let f = self.field;
        let c = f.reduce(c);
        Mat {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// `self += c * other` in place.
    pub fn add_scaled(&mut self, c: u64, other: &Mat) {
        assert_eq!(self.shape(), other.shape());
        self.field.axpy(&mut self.data, c, &other.data);
    }

    /// Horizontal concatenation.
    pub fn hstack(parts: &[&Mat]) -> Result<Mat, LinalgError> {
        let first = parts.first().ok_or(LinalgError::BadEntries)?;
        let rows = first.rows;
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(first.field, rows, cols);
        let mut off = 0;
        for m in parts {
            if m.rows != rows {
                return Err(LinalgError::DimensionMismatch {
                    op: "hstack",
                    left: first.shape(),
                    right: m.shape(),
                });
            }
            out.set_block(0, off, m);
            off += m.cols;
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(parts: &[&Mat]) -> Result<Mat, LinalgError> {
        let first = parts.first().ok_or(LinalgError::BadEntries)?;
        let cols = first.cols;
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Mat::zeros(first.field, rows, cols);
        let mut off = 0;
        for m in parts {
            if m.cols != cols {
                return Err(LinalgError::DimensionMismatch {
                    op: "vstack",
                    left: first.shape(),
                    right: m.shape(),
                });
            }
            out.set_block(off, 0, m);
            off += m.rows;
        }
        Ok(out)
    }

    /// Block-diagonal matrix.
    pub fn block_diag(field: PrimeField, parts: &[&Mat]) -> Mat {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for m in parts {
            out.set_block(r, c, m);
            r += m.rows;
            c += m.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, m: &Mat) {
        assert!(r0 + m.rows <= self.rows && c0 + m.cols <= self.cols);
        for r in 0..m.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + m.cols].copy_from_slice(m.row(r));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        Mat::from_fn(self.field, rows, cols, |r, c| self.get(r0 + r, c0 + c))
    }

    /// Submatrix of the listed columns.
    pub fn select_columns(&self, cols: &[usize]) -> Mat {
        Mat::from_fn(self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]))
    }

    /// Submatrix of the listed rows.
    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        Mat::from_fn(self.field, rows.len(), self.cols, |r, c| self.get(rows[r], c))
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let (r2, c2) = other.shape();
        Mat::from_fn(
            self.field,
            self.rows * r2,
            self.cols * c2,
            |r, c| self.field.mul(self.get(r / r2, c / c2), other.get(r % r2, c % c2)),
        )
    }

    /// Column-major flattening (stacking columns), the usual `vec` operator.
    pub fn vec_cols(&self) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                v.push(self.get(r, c));
            }
        }
        v
    }

    /// Inverse of [`Mat::vec_cols`].
    pub fn unvec_cols(field: PrimeField, rows: usize, cols: usize, v: &[u64]) -> Mat {
        assert_eq!(v.len(), rows * cols);
        Mat::from_fn(field, rows, cols, |r, c| v[c * rows + r])
    }

    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        rref_in_place(self.field, &mut data, self.rows, self.cols).len()
    }

    pub fn kernel(&self) -> Mat {
        rref_decompose(self).kernel_basis
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        solve(self, &Mat::identity(self.field, self.rows)).ok()
    }

    pub fn trace(&self) -> u64 {
        let mut t = 0;
        for i in 0..self.rows.min(self.cols) {
            t = self.field.add(t, self.get(i, i));
        }
        t
    }
}

/// Exact matrix product `a * b`.
pub fn compose(a: &Mat, b: &Mat) -> Result<Mat, LinalgError> {
    a.check_field(b)?;
    if a.cols != b.rows {
        return Err(LinalgError::DimensionMismatch {
            op: "compose",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let p = a.field.modulus();
    let mut out = vec![0u64; a.rows * b.cols];
    // Accumulate without reduction while the running sum cannot overflow.
    let max_term = (p - 1) * (p - 1);
    let batch = if max_term == 0 {
        usize::MAX
    } else {
        ((u64::MAX - p) / max_term).max(1) as usize
    };
    for r in 0..a.rows {
        let orow = &mut out[r * b.cols..(r + 1) * b.cols];
        let arow = &a.data[r * a.cols..(r + 1) * a.cols];
        let mut pending = 0usize;
        for (k, &x) in arow.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let brow = &b.data[k * b.cols..(k + 1) * b.cols];
            for (o, &y) in orow.iter_mut().zip(brow) {
                *o += x * y;
            }
            pending += 1;
            if pending >= batch {
                for o in orow.iter_mut() {
                    *o %= p;
                }
                pending = 0;
            }
        }
        for o in orow.iter_mut() {
            *o %= p;
        }
    }
    Ok(Mat {
        field: a.field,
        rows: a.rows,
        cols: b.cols,
        data: out,
    })
}

/// Reduces `data` (row-major `rows x cols`) to reduced row echelon form in
/// place and returns the pivot columns.
fn rref_in_place(f: PrimeField, data: &mut [u64], rows: usize, cols: usize) -> Vec<usize> {
    rref_limited(f, data, rows, cols, cols)
}

/// As [`rref_in_place`], but pivots are only sought among the first
/// `pivot_cols` columns.
fn rref_limited(
    f: PrimeField,
    data: &mut [u64],
    rows: usize,
    cols: usize,
    pivot_cols: usize,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    let mut scratch = vec![0u64; cols];
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for k in 0..cols {
                data.swap(pr * cols + k, r * cols + k);
            }
        }
        let inv = f.inv(data[r * cols + c]);
        for k in c..cols {
            data[r * cols + k] = f.mul(data[r * cols + k], inv);
        }
        scratch[c..].copy_from_slice(&data[r * cols + c..(r + 1) * cols]);
        for i in 0..rows {
            if i == r {
                continue;
            }
            let x = data[i * cols + c];
            if x == 0 {
                continue;
            }
            let m = f.neg(x);
            f.axpy(&mut data[i * cols + c..(i + 1) * cols], m, &scratch[c..]);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Deterministic reduced row echelon decomposition.
pub fn rref_decompose(m: &Mat) -> Rref {
    let f = m.field;
    let mut data = m.data.clone();
    let pivots = rref_in_place(f, &mut data, m.rows, m.cols);
    let rank = pivots.len();
    let reduced = Mat {
        field: f,
        rows: m.rows,
        cols: m.cols,
        data,
    };
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..m.cols).filter(|&c| !is_pivot[c]).collect();
    let mut kernel_basis = Mat::zeros(f, m.cols, free.len());
    for (k, &fc) in free.iter().enumerate() {
        kernel_basis.data[fc * free.len() + k] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            let v = reduced.get(i, fc);
            kernel_basis.data[pc * free.len() + k] = f.neg(v);
        }
    }
    let image_basis = m.select_columns(&pivots);
    Rref {
        rank,
        pivots,
        kernel_basis,
        image_basis,
        reduced,
    }
}

/// Solves `a * x = b`. Free variables are set to zero.
pub fn solve(a: &Mat, b: &Mat) -> Result<Mat, LinalgError> {
    a.check_field(b)?;
    if a.rows != b.rows {
        return Err(LinalgError::DimensionMismatch {
            op: "solve",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let f = a.field;
    let n = a.cols;
    let w = n + b.cols;
    let mut data = vec![0u64; a.rows * w];
    for r in 0..a.rows {
        data[r * w..r * w + n].copy_from_slice(a.row(r));
        data[r * w + n..(r + 1) * w].copy_from_slice(b.row(r));
    }
    let pivots = rref_limited(f, &mut data, a.rows, w, n);
    let rank = pivots.len();
    for r in rank..a.rows {
        if data[r * w + n..(r + 1) * w].iter().any(|&x| x != 0) {
            return Err(LinalgError::NoSolution);
        }
    }
    let mut x = Mat::zeros(f, n, b.cols);
    for (i, &pc) in pivots.iter().enumerate() {
        x.data[pc * b.cols..(pc + 1) * b.cols].copy_from_slice(&data[i * w + n..(i + 1) * w]);
    }
    Ok(x)
}

/// A subspace of `GF(p)^n` held as a fully reduced echelon basis.
///
/// Every basis row has a 1 at its pivot and 0 at all other pivots, so the
/// coordinates of a member vector are its entries at the pivot positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for i in 0..ambient {
            let mut v = vec![0; ambient];
            v[i] = 1;
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }

    pub fn spanned_by<'a>(
        field: PrimeField,
        ambient: usize,
        vectors: impl IntoIterator<Item = &'a Vec<u64>>,
    ) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Column space of a matrix.
    pub fn column_space(m: &Mat) -> Subspace {
        let rref = rref_decompose(&m.transpose());
        let mut s = Subspace::zero(m.field, m.rows);
        for i in 0..rref.rank {
            s.rows.push(rref.reduced.row(i).to_vec());
            s.pivots.push(rref.pivots[i]);
        }
        s
    }

    /// Null space of a matrix.
    pub fn kernel_of(m: &Mat) -> Subspace {
        let k = rref_decompose(m).kernel_basis;
        Subspace::column_space(&k)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> Mat {
        Mat::from_columns(self.field, self.ambient, &self.rows)
    }

    /// Non-pivot coordinates; they index a complement and the quotient basis.
    pub fn complement(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// `v` minus its component along the subspace; zero at every pivot.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                f.axpy(&mut out, f.neg(c), row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates in the echelon basis, if `v` is a member.
    pub fn coords(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p]).collect())
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let f = self.field;
        let mut w = self.reduce(v);
        let Some(lead) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[lead]);
        f.scale_in_place(&mut w, inv);
        for row in self.rows.iter_mut() {
            let c = row[lead];
            if c != 0 {
                f.axpy(row, f.neg(c), &w);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, w);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v);
        }
        s
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Matrix of the projection `GF(p)^n -> GF(p)^n / self`, expressed in the
    /// complement coordinates.
    pub fn quotient_map(&self) -> Mat {
        let comp = self.complement();
        let mut m = Mat::zeros(self.field, comp.len(), self.ambient);
        let mut e = vec![0u64; self.ambient];
        for j in 0..self.ambient {
            e[j] = 1;
            let r = self.reduce(&e);
            for (i, &c) in comp.iter().enumerate() {
                m.data[i * self.ambient + j] = r[c];
            }
            e[j] = 0;
        }
        m
    }

    /// Matrix of the section `quotient -> ambient` sending each complement
    /// coordinate to its standard basis vector.
    pub fn quotient_lift(&self) -> Mat {
        let comp = self.complement();
        let mut m = Mat::zeros(self.field, self.ambient, comp.len());
        for (i, &c) in comp.iter().enumerate() {
            m.data[c * comp.len() + i] = 1;
        }
        m
    }

    /// Matrix `dim x ambient` reading off echelon coordinates of members.
    pub fn coordinate_map(&self) -> Mat {
        let mut m = Mat::zeros(self.field, self.dim(), self.ambient);
        for (i, &p) in self.pivots.iter().enumerate() {
            m.data[i * self.ambient + p] = 1;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn zero_matrix_rank_and_kernel() {
        let m = Mat::zeros(gf(5), 2, 3);
        let r = rref_decompose(&m);
        assert_eq!(r.rank, 0);
        assert_eq!(r.kernel_basis.cols(), 3);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let r = rref_decompose(&Mat::identity(gf(101), 4));
        assert_eq!(r.rank, 4);
        assert_eq!(r.kernel_basis.cols(), 0);
        assert_eq!(r.pivots, vec![0, 1, 2, 3]);
    }

    #[test]
    fn rank_one_kernel_is_multiple_of_two_minus_one() {
        let f = gf(7);
        let m = Mat::from_i64(f, 2, 2, &[1, 2, 2, 4]);
        let r = rref_decompose(&m);
        assert_eq!(r.rank, 1);
        let k = r.kernel_basis.col(0);
        // (2, -1) up to scalar: k[0] = -2 k[1].
        assert_eq!(k[0], f.mul(f.from_i64(-2), k[1]));
        assert!(m.dot(&r.kernel_basis).is_zero());
    }

    #[test]
    fn solve_identity_and_zero() {
        let f = gf(101);
        let b = Mat::from_i64(f, 3, 2, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(solve(&Mat::identity(f, 3), &b).unwrap(), b);
        let z = Mat::zeros(f, 2, 2);
        let zb = Mat::zeros(f, 2, 1);
        assert_eq!(solve(&z, &zb).unwrap(), Mat::zeros(f, 2, 1));
    }

    #[test]
    fn inconsistent_system() {
        let f = gf(3);
        let a = Mat::from_i64(f, 2, 2, &[1, 1, 0, 0]);
        let b = Mat::from_i64(f, 2, 1, &[0, 1]);
        assert_eq!(solve(&a, &b), Err(LinalgError::NoSolution));
        assert!(matches!(
            solve(&a, &Mat::zeros(f, 3, 1)),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn compose_by_hand() {
        let f = gf(7);
        let a = Mat::from_i64(f, 1, 2, &[1, 2]);
        let b = Mat::from_i64(f, 2, 1, &[3, 4]);
        assert_eq!(compose(&a, &b).unwrap().data(), &[4]);
        assert_eq!(a.dot(&Mat::identity(f, 2)), a);
        assert!(a.dot(&Mat::zeros(f, 2, 3)).is_zero());
        assert!(compose(&a, &a).is_err());
    }

    #[test]
    fn subspace_quotient_roundtrip() {
        let f = gf(11);
        let s = Subspace::spanned_by(f, 3, &[vec![1, 1, 0], vec![0, 2, 2]]);
        assert_eq!(s.dim(), 2);
        let q = s.quotient_map();
        assert_eq!(q.rows(), 1);
        let l = s.quotient_lift();
        assert_eq!(q.dot(&l), Mat::identity(f, 1));
        assert!(q.dot(&s.basis_matrix()).is_zero());
        assert_eq!(s.coords(&[2, 4, 2]), Some(vec![2, 4]));
    }
}
