//! Subspaces of ℚⁿ with a canonical reduced row-echelon basis.

use std::fmt;

use num::{One, Zero};

use super::{Matrix, Rat};
use crate::error::{Error, Result};

/// A subspace of ℚⁿ. The basis is kept in reduced row-echelon form with
/// strictly increasing pivots, so structural equality is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit(ambient, i)).collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn span<I, V>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Rat]>,
    {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v.as_ref());
        }
        s
    }

    /// Span of standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Subspace::span(ambient, indices.into_iter().map(|i| unit(ambient, i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coset representative of `v` modulo this subspace: all pivot entries zero.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        w
    }

    pub fn contains_vec(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of the basis.
    pub fn combine(&self, coeffs: &[Rat]) -> Vec<Rat> {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = vec![Rat::zero(); self.ambient];
        for (c, row) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o += c * r;
                }
            }
        }
        out
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        // Clear the new pivot column from existing rows.
        for row in self.basis.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&w) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, w);
        true
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v);
        }
        Ok(s)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        let m = Matrix::from_rows(&self.basis).expect("rows have equal length");
        Subspace::span(self.ambient, m.kernel())
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_same(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vec(v)))
    }

    /// Standard basis vectors at the non-pivot coordinates: a canonical
    /// complement of this subspace.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|i| self.pivots.binary_search(i).is_err()).collect()
    }

    pub fn complement(&self) -> Subspace {
        Subspace::coordinate(self.ambient, self.complement_indices())
    }

    /// Image of the subspace under a linear map given as a matrix acting on columns.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        Subspace::span(m.rows(), self.basis.iter().map(|v| m.mul_vec(v)))
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}) {{", self.dim(), self.ambient)?;
        for row in &self.basis {
            let r: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, " [{}]", r.join(","))?;
        }
        write!(f, " }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qv;

    #[test]
    fn complementary_lines_sum_to_plane() {
        let a = Subspace::span(2, [qv(&[1, 0])]);
        let b = Subspace::span(2, [qv(&[0, 1])]);
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(2));
        assert!(a.intersection(&b).unwrap().is_zero());
    }

    #[test]
    fn intersection_is_idempotent() {
        let v = Subspace::span(3, [qv(&[1, 2, 3]), qv(&[0, 1, 1])]);
        assert_eq!(v.intersection(&v).unwrap(), v);
    }

    #[test]
    fn intersection_plane_and_line() {
        let a = Subspace::span(3, [qv(&[1, 1, 0]), qv(&[0, 0, 1])]);
        let b = Subspace::span(3, [qv(&[1, 1, 1])]);
        assert_eq!(a.intersection(&b).unwrap(), b);
        assert!(a.contains(&b).unwrap());
        assert!(!b.contains(&a).unwrap());
    }

    #[test]
    fn canonical_basis_independent_of_spanning_set() {
        let a = Subspace::span(3, [qv(&[1, 1, 0]), qv(&[0, 1, 1])]);
        let b = Subspace::span(3, [qv(&[1, 2, 1]), qv(&[2, 1, -1]), qv(&[1, 0, -1])]);
        assert_eq!(a, b);
    }

    #[test]
    fn mismatched_ambient_is_an_error() {
        assert!(Subspace::zero(2).sum(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn coords_round_trip() {
        let a = Subspace::span(4, [qv(&[1, 2, 0, 1]), qv(&[0, 0, 1, 3])]);
        let v = qv(&[2, 4, -1, -1]);
        let c = a.coords(&v).unwrap();
        assert_eq!(a.combine(&c), v);
    }
}
