//! A-B-bimodules with commuting exact actions, given by per-basis action
//! matrices on the carrier.

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};

use super::{Algebra, AlgebraHom};

/// An A-B-bimodule: left action of A, right action of B, both by matrices
/// on the carrier coordinates.
#[derive(Clone)]
pub struct Bimodule {
    left: Algebra,
    right: Algebra,
    dim: usize,
    /// left_actions[i] = matrix of m -> a_i * m
    left_actions: Vec<Matrix>,
    /// right_actions[j] = matrix of m -> m * b_j
    right_actions: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(
        left: Algebra,
        right: Algebra,
        dim: usize,
        left_actions: Vec<Matrix>,
        right_actions: Vec<Matrix>,
    ) -> Result<Bimodule> {
        if left_actions.len() != left.dim() || right_actions.len() != right.dim() {
            return Err(Error::BimoduleInvalid("action count mismatch".into()));
        }
        for m in left_actions.iter().chain(&right_actions) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::BimoduleInvalid("action matrix shape".into()));
            }
        }
        let b = Bimodule { left, right, dim, left_actions, right_actions };
        b.validate()?;
        Ok(b)
    }

    fn validate(&self) -> Result<()> {
        let field = self.left.field();
        if field != self.right.field() {
            return Err(Error::BimoduleInvalid("field mismatch".into()));
        }
        let id = Matrix::identity(field, self.dim);
        // unital
        if self.left_operator(self.left.unit_coords()) != id {
            return Err(Error::BimoduleInvalid("left action not unital".into()));
        }
        if self.right_operator(self.right.unit_coords()) != id {
            return Err(Error::BimoduleInvalid("right action not unital".into()));
        }
        // left action is a representation: L(a*a') = L(a) L(a')
        for i in 0..self.left.dim() {
            for j in 0..self.left.dim() {
                let prod = self
                    .left
                    .mul_coords(&self.left.basis_coords(i), &self.left.basis_coords(j));
                let lhs = self.left_operator(&prod);
                let rhs = self.left_actions[i].mul(&self.left_actions[j])?;
                if lhs != rhs {
                    return Err(Error::BimoduleInvalid(format!(
                        "left action not multiplicative at ({}, {})",
                        self.left.label(i),
                        self.left.label(j)
                    )));
                }
            }
        }
        // right action is an anti-representation: R(b*b') = R(b') R(b)
        for i in 0..self.right.dim() {
            for j in 0..self.right.dim() {
                let prod = self
                    .right
                    .mul_coords(&self.right.basis_coords(i), &self.right.basis_coords(j));
                let lhs = self.right_operator(&prod);
                let rhs = self.right_actions[j].mul(&self.right_actions[i])?;
                if lhs != rhs {
                    return Err(Error::BimoduleInvalid(format!(
                        "right action not anti-multiplicative at ({}, {})",
                        self.right.label(i),
                        self.right.label(j)
                    )));
                }
            }
        }
        // actions commute
        for (i, l) in self.left_actions.iter().enumerate() {
            for (j, r) in self.right_actions.iter().enumerate() {
                if l.mul(r)? != r.mul(l)? {
                    return Err(Error::BimoduleInvalid(format!(
                        "actions do not commute at ({}, {})",
                        self.left.label(i),
                        self.right.label(j)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn left_algebra(&self) -> &Algebra {
        &self.left
    }

    pub fn right_algebra(&self) -> &Algebra {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_actions(&self) -> &[Matrix] {
        &self.left_actions
    }

    pub fn right_actions(&self) -> &[Matrix] {
        &self.right_actions
    }

    /// Matrix of m -> a*m for an arbitrary element a of the left algebra.
    pub fn left_operator(&self, a: &[Scalar]) -> Matrix {
        let field = self.left.field();
        let mut acc = Matrix::zero(field, self.dim, self.dim);
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.left_actions[i].scale(c));
            }
        }
        acc
    }

    /// Matrix of m -> m*b for an arbitrary element b of the right algebra.
    pub fn right_operator(&self, b: &[Scalar]) -> Matrix {
        let field = self.right.field();
        let mut acc = Matrix::zero(field, self.dim, self.dim);
        for (j, c) in b.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.right_actions[j].scale(c));
            }
        }
        acc
    }

    /// Subspace M.W for a subspace W of the right algebra.
    pub fn carrier_times_subspace(&self, w: &Subspace) -> Subspace {
        let field = self.left.field();
        let mut rows = Vec::new();
        for b in w.basis_rows() {
            let op = self.right_operator(&b);
            for k in 0..self.dim {
                let mut e = vec![field.zero(); self.dim];
                e[k] = field.one();
                rows.push(op.apply(&e));
            }
        }
        Subspace::from_rows(field, self.dim, rows)
    }

    /// The zero bimodule (carrier dimension 0).
    pub fn zero(left: &Algebra, right: &Algebra) -> Result<Bimodule> {
        if left.field() != right.field() {
            return Err(Error::BimoduleInvalid("field mismatch".into()));
        }
        Ok(Bimodule {
            left: left.clone(),
            right: right.clone(),
            dim: 0,
            left_actions: vec![Matrix::zero(left.field(), 0, 0); left.dim()],
            right_actions: vec![Matrix::zero(left.field(), 0, 0); right.dim()],
        })
    }
}

/// S as an R-S-bimodule through f: R -> S (left action r.m = f(r)m,
/// right action m.s = ms). This realizes restriction of scalars.
pub fn regular_bimodule_restriction(f: &AlgebraHom) -> Bimodule {
    let s = f.target();
    let r = f.source();
    let left_actions: Vec<Matrix> = (0..r.dim())
        .map(|i| s.left_mul_operator(&f.apply_coords(&r.basis_coords(i))))
        .collect();
    let right_actions: Vec<Matrix> = (0..s.dim())
        .map(|j| s.right_mul_operator(&s.basis_coords(j)))
        .collect();
    Bimodule::new(r.clone(), s.clone(), s.dim(), left_actions, right_actions)
        .expect("regular bimodule is valid by associativity")
}

/// S as an S-R-bimodule through f (left action s.m = sm, right action
/// m.r = m f(r)). This realizes extension of scalars.
pub fn regular_bimodule_extension(f: &AlgebraHom) -> Bimodule {
    let s = f.target();
    let r = f.source();
    let left_actions: Vec<Matrix> = (0..s.dim())
        .map(|i| s.left_mul_operator(&s.basis_coords(i)))
        .collect();
    let right_actions: Vec<Matrix> = (0..r.dim())
        .map(|j| s.right_mul_operator(&f.apply_coords(&r.basis_coords(j))))
        .collect();
    Bimodule::new(s.clone(), r.clone(), s.dim(), left_actions, right_actions)
        .expect("regular bimodule is valid by associativity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_product, field_algebra, matrix_algebra};
    use crate::exactlin::FieldSpec;

    #[test]
    fn identity_regular_bimodule() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let id = AlgebraHom::identity(&a);
        let m = regular_bimodule_restriction(&id);
        assert_eq!(m.dim(), 4);
        // left action of e11 equals the left regular representation
        assert_eq!(
            m.left_operator(&a.basis_coords(0)),
            a.left_mul_operator(&a.basis_coords(0))
        );
    }

    #[test]
    fn projection_bimodule_right_action_factors() {
        // f: k x k -> k, first projection; k as a k-(k x k)-bimodule
        let k = field_algebra(FieldSpec::Rationals);
        let kk = direct_product(&k, &k).unwrap();
        let mut m = Matrix::zero(FieldSpec::Rationals, 1, 2);
        m.set(0, 0, FieldSpec::Rationals.one());
        let proj = AlgebraHom::new(kk.clone(), k.clone(), m).unwrap();
        let bim = regular_bimodule_extension(&proj);
        // right action factors through the first component
        assert_eq!(
            bim.right_operator(&kk.basis_coords(0)),
            Matrix::identity(FieldSpec::Rationals, 1)
        );
        assert!(bim.right_operator(&kk.basis_coords(1)).is_zero());
    }
}
