use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar};

/// A linear subspace of k^n in canonical form: the stored basis is the unique
/// reduced row-echelon matrix of the row space with zero rows dropped.
/// Two subspaces are equal as sets iff they compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_rows<I>(field: FieldSpec, ambient: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let rows: Vec<Vec<Scalar>> = rows.into_iter().collect();
        let m = Matrix::from_rows(field, ambient, rows);
        Self::from_matrix(&m)
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let (red, pivots) = m.rref();
        let kept: Vec<Vec<Scalar>> = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows(m.field(), m.cols(), kept),
            pivots,
        }
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace::from_matrix(&Matrix::identity(field, ambient))
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot; coset representatives for the quotient.
    pub fn non_pivot_cols(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field(),
                other.field()
            )));
        }
        Ok(())
    }

    /// Reduces a vector modulo this subspace: pivot coordinates are
    /// eliminated, leaving the canonical coset representative.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            if !v[pc].is_zero() {
                let factor = v[pc].clone();
                for c in 0..self.ambient {
                    v[c] = v[c].sub(&self.basis.get(i, c).mul(&factor));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|r| self.contains(other.basis.row(r)))
    }

    /// Coordinates of a member vector in the canonical basis: for an RREF
    /// basis these are just the pivot-column entries.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Ok(Subspace::from_rows(self.field(), self.ambient, rows))
    }

    /// Intersection via the kernel of the stacked-basis system: a kernel
    /// vector (a, b) of [U^T | -W^T] gives a point a*U = b*W of both spaces.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field(), self.ambient));
        }
        let ut = self.basis.transpose();
        let wt = other.basis.transpose();
        let mut stacked = Matrix::zero(self.field(), self.ambient, self.dim() + other.dim());
        for r in 0..self.ambient {
            for c in 0..self.dim() {
                stacked.set(r, c, ut.get(r, c).clone());
            }
            for c in 0..other.dim() {
                stacked.set(r, self.dim() + c, wt.get(r, c).neg());
            }
        }
        let ker = stacked.kernel();
        let mut rows = Vec::new();
        for kv in ker.basis_rows() {
            let coeffs = &kv[..self.dim()];
            let mut v = vec![self.field().zero(); self.ambient];
            for (i, a) in coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for c in 0..self.ambient {
                    v[c] = v[c].add(&self.basis.get(i, c).mul(a));
                }
            }
            rows.push(v);
        }
        Ok(Subspace::from_rows(self.field(), self.ambient, rows))
    }

    /// A matrix C with kernel exactly this subspace: v is a member iff C*v = 0.
    pub fn constraints(&self) -> Matrix {
        if self.is_full() {
            return Matrix::zero(self.field(), 0, self.ambient);
        }
        let ann = self.basis.kernel();
        ann.basis().clone()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of k^{}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qvec(vals: &[i64]) -> Vec<Scalar> {
        vals.iter().map(|&v| FieldSpec::Rationals.from_i64(v)).collect()
    }

    #[test]
    fn canonical_equality() {
        let f = FieldSpec::Rationals;
        let u = Subspace::from_rows(f, 2, vec![qvec(&[2, 4])]);
        let w = Subspace::from_rows(f, 2, vec![qvec(&[1, 2]), qvec(&[3, 6])]);
        assert_eq!(u, w);
        assert_eq!(u.dim(), 1);
    }

    #[test]
    fn sum_and_intersection_idempotent() {
        let f = FieldSpec::Rationals;
        let u = Subspace::from_rows(f, 3, vec![qvec(&[1, 2, 0]), qvec(&[0, 0, 1])]);
        assert_eq!(u.sum(&u).unwrap(), u);
        assert_eq!(u.intersect(&u).unwrap(), u);
    }

    #[test]
    fn coordinate_axes_intersect_trivially() {
        let f = FieldSpec::Rationals;
        let e1 = Subspace::from_rows(f, 2, vec![qvec(&[1, 0])]);
        let e2 = Subspace::from_rows(f, 2, vec![qvec(&[0, 1])]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert!(e1.sum(&e2).unwrap().is_full());
    }

    #[test]
    fn membership_and_constraints() {
        let f = FieldSpec::Rationals;
        let u = Subspace::from_rows(f, 3, vec![qvec(&[1, 1, 0]), qvec(&[0, 0, 1])]);
        assert!(u.contains(&qvec(&[2, 2, -5])));
        assert!(!u.contains(&qvec(&[1, 0, 0])));
        let c = u.constraints();
        assert_eq!(c.rows(), 1);
        assert!(c.apply(&qvec(&[2, 2, -5])).iter().all(Scalar::is_zero));
        assert!(!c.apply(&qvec(&[1, 0, 0])).iter().all(Scalar::is_zero));
    }

    #[test]
    fn coordinates_in_rref_basis() {
        let f = FieldSpec::Rationals;
        let u = Subspace::from_rows(f, 3, vec![qvec(&[1, 0, 2]), qvec(&[0, 1, -1])]);
        let v = qvec(&[3, 4, 2]);
        assert!(u.contains(&v));
        assert_eq!(u.coordinates(&v).unwrap(), qvec(&[3, 4]));
    }
}
