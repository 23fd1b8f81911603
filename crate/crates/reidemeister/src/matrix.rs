//! Dense integer matrices with exact arbitrary-precision arithmetic.
//!
//! Everything here is sized for desk-scale problems (rank ≤ 6 or so):
//! elimination-based Smith normal form and a fraction-free Bareiss
//! determinant, no sparsity, no floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// A dense `rows x cols` matrix over the integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from nested rows. All rows must have equal length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|r| r.iter().cloned().map(Into::into))
            .collect();
        Ok(IntMatrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} - {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * vec of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect())
    }

    /// Exact determinant by the fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            let a = m.get(k, j).clone();
                            let b = m.get(r, j).clone();
                            m.set(k, j, b);
                            m.set(r, j, a);
                        }
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j);
                    // exact by the Bareiss identity
                    m.set(i, j, num / &prev);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        Ok(sign * m.get(n - 1, n - 1))
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Result of `smith_normal_form`: `u * m * v = d` with `u`, `v` unimodular,
/// `d` diagonal, nonnegative, and each diagonal entry dividing the next.
/// The inverses are tracked during elimination so cokernel computations can
/// change basis in both directions without re-inverting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries of `d` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

struct SnfState {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfState {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.d.cols {
            self.d.data.swap(a * self.d.cols + j, b * self.d.cols + j);
        }
        for j in 0..self.u.cols {
            self.u.data.swap(a * self.u.cols + j, b * self.u.cols + j);
        }
        // u_inv picks up the inverse op on the column side
        for i in 0..self.u_inv.rows {
            self.u_inv.data.swap(i * self.u_inv.cols + a, i * self.u_inv.cols + b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.d.rows {
            self.d.data.swap(i * self.d.cols + a, i * self.d.cols + b);
        }
        for i in 0..self.v.rows {
            self.v.data.swap(i * self.v.cols + a, i * self.v.cols + b);
        }
        for j in 0..self.v_inv.cols {
            self.v_inv
                .data
                .swap(a * self.v_inv.cols + j, b * self.v_inv.cols + j);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, src: usize, dst: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.d.cols {
            let add = q * self.d.get(src, j);
            let cur = self.d.get(dst, j) + add;
            self.d.set(dst, j, cur);
        }
        for j in 0..self.u.cols {
            let add = q * self.u.get(src, j);
            let cur = self.u.get(dst, j) + add;
            self.u.set(dst, j, cur);
        }
        for i in 0..self.u_inv.rows {
            let sub = q * self.u_inv.get(i, dst);
            let cur = self.u_inv.get(i, src) - sub;
            self.u_inv.set(i, src, cur);
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, src: usize, dst: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.d.rows {
            let add = q * self.d.get(i, src);
            let cur = self.d.get(i, dst) + add;
            self.d.set(i, dst, cur);
        }
        for i in 0..self.v.rows {
            let add = q * self.v.get(i, src);
            let cur = self.v.get(i, dst) + add;
            self.v.set(i, dst, cur);
        }
        for j in 0..self.v_inv.cols {
            let sub = q * self.v_inv.get(dst, j);
            let cur = self.v_inv.get(src, j) - sub;
            self.v_inv.set(src, j, cur);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.d.rows {
            let neg = -self.d.get(i, j);
            self.d.set(i, j, neg);
        }
        for i in 0..self.v.rows {
            let neg = -self.v.get(i, j);
            self.v.set(i, j, neg);
        }
        for k in 0..self.v_inv.cols {
            let neg = -self.v_inv.get(j, k);
            self.v_inv.set(j, k, neg);
        }
    }

    /// Moves the first entry of minimal absolute value in the trailing
    /// submatrix to the pivot slot. Returns false if the submatrix is zero.
    fn move_min_nonzero_to(&mut self, t: usize) -> bool {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.d.rows {
            for j in t..self.d.cols {
                let e = self.d.get(i, j);
                if e.is_zero() {
                    continue;
                }
                match &best {
                    Some(&(bi, bj)) if self.d.get(bi, bj).abs() <= e.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        match best {
            Some((i, j)) => {
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                true
            }
            None => false,
        }
    }
}

/// Smith normal form by elementary row/column operations with pivot
/// selection by minimal absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows, m.cols);
    let mut st = SnfState {
        d: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let steps = rows.min(cols);
    for t in 0..steps {
        if !st.move_min_nonzero_to(t) {
            break;
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !st.d.get(i, t).is_zero() {
                    let q = -(st.d.get(i, t) / st.d.get(t, t));
                    st.add_row(t, i, &q);
                    if !st.d.get(i, t).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !st.d.get(t, j).is_zero() {
                    let q = -(st.d.get(t, j) / st.d.get(t, t));
                    st.add_col(t, j, &q);
                    if !st.d.get(t, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // leftover remainders are strictly smaller than the pivot
                st.move_min_nonzero_to(t);
                continue;
            }
            // pivot must divide the whole trailing submatrix
            let mut fixed = false;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(st.d.get(i, j) % st.d.get(t, t)).is_zero() {
                        st.add_row(i, t, &BigInt::one());
                        fixed = true;
                        break 'scan;
                    }
                }
            }
            if !fixed {
                break;
            }
        }
    }
    for t in 0..steps {
        if st.d.get(t, t).is_negative() {
            st.negate_col(t);
        }
    }
    SmithDecomposition {
        u: st.u,
        d: st.d,
        v: st.v,
        u_inv: st.u_inv,
        v_inv: st.v_inv,
    }
}

/// Reduces `value` into `[0, modulus)` for positive `modulus`.
pub fn mod_floor(value: &BigInt, modulus: &BigInt) -> BigInt {
    value.mod_floor(modulus)
}
