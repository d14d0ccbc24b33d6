//! Finite-dimensional unital associative algebras given by structure
//! constants, their elements, homomorphisms, and bimodules.

mod bimodule;
mod build;

pub use bimodule::{regular_bimodule_extension, regular_bimodule_restriction, Bimodule};
pub use build::{
    direct_product, field_algebra, group_algebra, matrix_algebra, quotient_algebra,
    subalgebra_from_generators, subalgebra_on_subspace, upper_triangular_algebra,
};

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar, Subspace};

struct AlgebraData {
    field: FieldSpec,
    dim: usize,
    labels: Vec<String>,
    /// mul[i][j] = coordinates of e_i * e_j
    mul: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
}

/// A finite-dimensional unital associative algebra over Q or F_p.
/// Cheap to clone; immutable after validation.
#[derive(Clone)]
pub struct Algebra {
    data: Arc<AlgebraData>,
}

impl Algebra {
    /// Builds and validates an algebra from structure constants: the unit
    /// law and associativity are checked exhaustively over basis triples.
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        mul: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
    ) -> Result<Algebra> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidParameter("algebra must have dimension >= 1".into()));
        }
        if mul.len() != dim
            || mul.iter().any(|row| row.len() != dim)
            || mul
                .iter()
                .any(|row| row.iter().any(|v| v.len() != dim))
            || unit.len() != dim
        {
            return Err(Error::ShapeMismatch("mul table / unit size".into()));
        }
        let a = Algebra {
            data: Arc::new(AlgebraData { field, dim, labels, mul, unit }),
        };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        // unit law
        for i in 0..n {
            let e = self.basis_coords(i);
            let left = self.mul_coords(self.unit_coords(), &e);
            let right = self.mul_coords(&e, self.unit_coords());
            if left != e || right != e {
                return Err(Error::NotUnital { label: self.label(i).to_string() });
            }
        }
        // associativity over basis triples
        for i in 0..n {
            for j in 0..n {
                let ij = &self.data.mul[i][j];
                for k in 0..n {
                    let jk = &self.data.mul[j][k];
                    let left = self.mul_coords(ij, &self.basis_coords(k));
                    let right = self.mul_coords(&self.basis_coords(i), jk);
                    if left != right {
                        return Err(Error::AssociativityFailure {
                            i: self.label(i).to_string(),
                            j: self.label(j).to_string(),
                            k: self.label(k).to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.data.field
    }

    pub fn dim(&self) -> usize {
        self.data.dim
    }

    pub fn label(&self, i: usize) -> &str {
        &self.data.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.data.labels
    }

    pub fn unit_coords(&self) -> &[Scalar] {
        &self.data.unit
    }

    pub fn mul_table(&self) -> &[Vec<Vec<Scalar>>] {
        &self.data.mul
    }

    pub fn basis_coords(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field().zero(); self.dim()];
        v[i] = self.field().one();
        v
    }

    /// Same underlying algebra, up to relabeling.
    pub fn same_as(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.field == other.data.field
                && self.data.dim == other.data.dim
                && self.data.mul == other.data.mul
                && self.data.unit == other.data.unit)
    }

    /// Bilinear product of coordinate vectors.
    pub fn mul_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        assert_eq!(x.len(), n);
        assert_eq!(y.len(), n);
        let mut out = vec![self.field().zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = x[i].mul(&y[j]);
                for (k, t) in self.data.mul[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = out[k].add(&c.mul(t));
                    }
                }
            }
        }
        out
    }

    pub fn element(&self, coords: Vec<Scalar>) -> AlgebraElement {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        AlgebraElement { parent: self.clone(), coords }
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        self.element(self.basis_coords(i))
    }

    pub fn unit(&self) -> AlgebraElement {
        self.element(self.data.unit.clone())
    }

    pub fn zero(&self) -> AlgebraElement {
        self.element(vec![self.field().zero(); self.dim()])
    }

    /// Matrix of y -> x*y in the algebra basis.
    pub fn left_mul_operator(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(self.field(), n, n);
        for j in 0..n {
            let col = self.mul_coords(x, &self.basis_coords(j));
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Matrix of y -> y*x in the algebra basis.
    pub fn right_mul_operator(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(self.field(), n, n);
        for j in 0..n {
            let col = self.mul_coords(&self.basis_coords(j), x);
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn full_subspace(&self) -> Subspace {
        Subspace::full(self.field(), self.dim())
    }

    /// Renders a coordinate vector as a combination of labeled basis
    /// elements, e.g. "e11 + 2*e12".
    pub fn format_vector(&self, coords: &[Scalar]) -> String {
        let mut terms = Vec::new();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                terms.push(self.label(i).to_string());
            } else {
                terms.push(format!("{}*{}", c, self.label(i)));
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra(dim {} over {}, basis [{}])",
            self.dim(),
            self.field(),
            self.labels().join(", ")
        )
    }
}

/// An element of an algebra: parent reference plus coordinates.
#[derive(Clone)]
pub struct AlgebraElement {
    parent: Algebra,
    coords: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn parent(&self) -> &Algebra {
        &self.parent
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    fn check_parent(&self, other: &AlgebraElement) -> Result<()> {
        if self.parent.same_as(&other.parent) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_parent(other)?;
        Ok(self.parent.element(self.parent.mul_coords(&self.coords, &other.coords)))
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_parent(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(self.parent.element(coords))
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        self.parent
            .element(self.coords.iter().map(|c| c.mul(s)).collect())
    }

    pub fn left_mul_operator(&self) -> Matrix {
        self.parent.left_mul_operator(&self.coords)
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parent.format_vector(&self.coords))
    }
}

/// A unital algebra homomorphism f: source -> target, stored as the
/// (target_dim x source_dim) matrix sending basis coordinates forward.
#[derive(Clone)]
pub struct AlgebraHom {
    source: Algebra,
    target: Algebra,
    matrix: Matrix,
}

impl AlgebraHom {
    pub fn new(source: Algebra, target: Algebra, matrix: Matrix) -> Result<AlgebraHom> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "hom matrix {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        if source.field() != target.field() {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                source.field(),
                target.field()
            )));
        }
        let f = AlgebraHom { source, target, matrix };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        let unit_image = self.apply_coords(self.source.unit_coords());
        if unit_image != self.target.unit_coords() {
            return Err(Error::HomNotUnital);
        }
        let n = self.source.dim();
        for i in 0..n {
            let fi = self.apply_coords(&self.source.basis_coords(i));
            for j in 0..n {
                let fj = self.apply_coords(&self.source.basis_coords(j));
                let prod_then_map = self.apply_coords(&self.source.mul_coords(
                    &self.source.basis_coords(i),
                    &self.source.basis_coords(j),
                ));
                let map_then_prod = self.target.mul_coords(&fi, &fj);
                if prod_then_map != map_then_prod {
                    return Err(Error::HomNotMultiplicative {
                        i: self.source.label(i).to_string(),
                        j: self.source.label(j).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn identity(a: &Algebra) -> AlgebraHom {
        AlgebraHom {
            source: a.clone(),
            target: a.clone(),
            matrix: Matrix::identity(a.field(), a.dim()),
        }
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        if !x.parent().same_as(&self.source) {
            return Err(Error::ParentMismatch);
        }
        Ok(self.target.element(self.apply_coords(x.coords())))
    }

    /// Image of a subspace of the source.
    pub fn image_subspace(&self, sub: &Subspace) -> Subspace {
        let rows: Vec<Vec<Scalar>> = sub
            .basis_rows()
            .into_iter()
            .map(|r| self.apply_coords(&r))
            .collect();
        Subspace::from_rows(self.target.field(), self.target.dim(), rows)
    }

    /// Compose: (g . f)(x) = g(f(x)); self is applied first.
    pub fn then(&self, g: &AlgebraHom) -> Result<AlgebraHom> {
        if !self.target.same_as(&g.source) {
            return Err(Error::ParentMismatch);
        }
        Ok(AlgebraHom {
            source: self.source.clone(),
            target: g.target.clone(),
            matrix: g.matrix.mul(&self.matrix)?,
        })
    }
}

impl fmt::Debug for AlgebraHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgebraHom({}-dim -> {}-dim over {})",
            self.source.dim(),
            self.target.dim(),
            self.source.field()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m2_matrix_unit_relations() {
        // oracle: e_ij * e_kl = delta_jk * e_il, independent of the table path
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let idx = |i: usize, j: usize| i * 2 + j;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let x = a.basis_element(idx(i, j));
                        let y = a.basis_element(idx(k, l));
                        let prod = x.multiply(&y).unwrap();
                        let mut expect = a.zero();
                        if j == k {
                            expect = a.basis_element(idx(i, l));
                        }
                        assert_eq!(prod.coords(), expect.coords(), "e{i}{j} * e{k}{l}");
                    }
                }
            }
        }
    }

    #[test]
    fn unit_element_is_identity() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let x = a.element(vec![
            Scalar::from_rational(1, 2),
            FieldSpec::Rationals.from_i64(3),
            FieldSpec::Rationals.from_i64(-1),
            FieldSpec::Rationals.from_i64(0),
        ]);
        assert_eq!(a.unit().multiply(&x).unwrap().coords(), x.coords());
        assert_eq!(x.multiply(&a.unit()).unwrap().coords(), x.coords());
    }

    #[test]
    fn left_mul_operator_examples() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        assert_eq!(
            a.left_mul_operator(a.unit_coords()),
            Matrix::identity(FieldSpec::Rationals, 4)
        );
        assert!(a.left_mul_operator(a.zero().coords()).is_zero());
        // e11 * M2 = top row span: rank 2
        let e11 = a.basis_coords(0);
        assert_eq!(a.left_mul_operator(&e11).rank(), 2);
    }

    #[test]
    fn parent_mismatch_rejected() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let b = upper_triangular_algebra(FieldSpec::Rationals, 2);
        let x = a.basis_element(0);
        let y = b.basis_element(0);
        assert!(matches!(x.multiply(&y), Err(Error::ParentMismatch)));
    }

    #[test]
    fn bad_mul_table_rejected() {
        // make e0*e0 = e1 with unit e0: breaks the unit law
        let f = FieldSpec::Rationals;
        let mul = vec![
            vec![vec![f.zero(), f.one()], vec![f.zero(), f.one()]],
            vec![vec![f.zero(), f.one()], vec![f.zero(), f.zero()]],
        ];
        let unit = vec![f.one(), f.zero()];
        let labels = vec!["a".into(), "b".into()];
        assert!(Algebra::new(f, labels, mul, unit).is_err());
    }
}
