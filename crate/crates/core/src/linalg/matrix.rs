//! Dense matrices over the rationals.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// A dense `rows × cols` matrix of exact rationals, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch { expected: c, found: rows.iter().map(Vec::len).find(|&l| l != c).unwrap_or(c) });
        }
        Ok(Matrix { rows: r, cols: c, data: rows.concat() })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged integer matrix");
        let data = rows.iter().flat_map(|row| row.iter().map(|&v| Rat::from_integer(v.into()))).collect();
        Matrix { rows: r, cols: c, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(n_rows: usize, cols: &[Vec<Rat>]) -> Self {
        let mut m = Matrix::zeros(n_rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), n_rows);
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m[(i, j)] = v.clone();
                }
            }
        }
        m
    }

    /// Reshapes a flat row-major vector of length `n*n` into a square matrix.
    pub fn from_flat(n: usize, flat: &[Rat]) -> Self {
        assert_eq!(flat.len(), n * n);
        Matrix { rows: n, cols: n, data: flat.to_vec() }
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

    pub fn as_flat(&self) -> &[Rat] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<Rat> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        (0..self.rows).fold(Rat::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * c).collect() }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rat, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert!(self.is_square());
        let mut result = Matrix::identity(self.rows);
        for _ in 0..k {
            result = &result * self;
        }
        result
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// `trace(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &Matrix) -> Rat {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.rows, other.cols);
        let mut acc = Rat::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let b = &other[(k, i)];
                if !b.is_zero() {
                    acc += a * b;
                }
            }
        }
        acc
    }

    /// Nilpotency by direct powering: `self^n == 0`.
    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        let mut p = self.clone();
        for _ in 1..self.rows.max(1) {
            if p.is_zero() {
                return true;
            }
            p = &p * self;
        }
        p.is_zero()
    }

    /// Reduced row-echelon form in place; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(p, r);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let d = &f * &self[(r, j)];
                    self[(i, j)] -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the right null space `{v : self · v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    /// One solution of `self · x = b` (free variables set to zero), if any.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn determinant(&self) -> Rat {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &piv;
                for j in c..n {
                    let d = &f * &m[(c, j)];
                    m[(i, j)] -= d;
                }
            }
        }
        det
    }

    /// Symmetric Gaussian elimination (congruence diagonalization) of a
    /// symmetric matrix; returns the diagonal of a congruent diagonal matrix.
    pub fn congruence_diagonal(&self) -> Vec<Rat> {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut diag = Vec::with_capacity(n);
        for k in 0..n {
            if m[(k, k)].is_zero() {
                // Try to create a nonzero pivot: swap in a later nonzero diagonal,
                // otherwise add a row/column with a nonzero off-diagonal entry.
                if let Some(j) = (k + 1..n).find(|&j| !m[(j, j)].is_zero()) {
                    m.swap_rows(k, j);
                    m.swap_cols(k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) {
                    for c in 0..n {
                        let v = m[(j, c)].clone();
                        m[(k, c)] += v;
                    }
                    for r in 0..n {
                        let v = m[(r, j)].clone();
                        m[(r, k)] += v;
                    }
                }
            }
            let p = m[(k, k)].clone();
            diag.push(p.clone());
            if p.is_zero() {
                continue;
            }
            for i in k + 1..n {
                if m[(i, k)].is_zero() {
                    continue;
                }
                let f = &m[(i, k)] / &p;
                for j in k..n {
                    let d = &f * &m[(k, j)];
                    m[(i, j)] -= d;
                }
                for r in k..n {
                    let d = &f * &m[(r, k)];
                    m[(r, i)] -= d;
                }
            }
        }
        diag
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Block diagonal matrix with the given square blocks.
    pub fn block_diag(blocks: &[Matrix]) -> Matrix {
        let n: usize = blocks.iter().map(Matrix::rows).sum();
        let mut m = Matrix::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(off + i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.rows;
        }
        m
    }

    pub fn max_abs_entry(&self) -> Rat {
        self.data.iter().map(Signed::abs).max().unwrap_or_else(Rat::zero)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| -v).collect() }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_inconsistent() {
        let m = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert!(m.solve(&[q(1), q(2)]).is_none());
        let x = m.solve(&[q(3), q(3)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![q(3), q(3)]);
    }

    #[test]
    fn determinant_and_rank() {
        let m = Matrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.determinant(), q(18));
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn congruence_diagonal_definite_and_hyperbolic() {
        let d = Matrix::from_i64(&[&[2, 1], &[1, 2]]).congruence_diagonal();
        assert!(d.iter().all(|x| x.is_positive()));
        // Hyperbolic plane: zero diagonal, nonzero off-diagonal.
        let h = Matrix::from_i64(&[&[0, 1], &[1, 0]]).congruence_diagonal();
        assert!(h.iter().any(|x| x.is_positive()) && h.iter().any(|x| x.is_negative()));
    }

    #[test]
    fn nilpotency_by_powering() {
        assert!(Matrix::from_i64(&[&[0, 1, 5], &[0, 0, 2], &[0, 0, 0]]).is_nilpotent());
        assert!(!Matrix::from_i64(&[&[1, 1], &[0, 1]]).is_nilpotent());
    }
}
