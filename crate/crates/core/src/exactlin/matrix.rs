use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Scalar};

/// Dense matrix over an exact field, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        debug_assert!(entries.iter().all(|e| e.field() == field));
        Matrix { field, rows, cols, entries }
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            entries.extend(r);
        }
        Matrix::new(field, n, cols, entries)
    }

    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix::new(field, rows, cols, vec![field.zero(); rows * cols])
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for r in 0..self.rows {
            let mut acc = self.field.zero();
            for c in 0..self.cols {
                let a = self.get(r, c);
                if !a.is_zero() && !v[c].is_zero() {
                    acc = acc.add(&a.mul(&v[c]));
                }
            }
            out[r] = acc;
        }
        out
    }

    pub fn stack_vertical(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix::new(self.field, self.rows + other.rows, self.cols, entries)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let entries = self.entries.iter().map(|e| e.mul(s)).collect();
        Matrix::new(self.field, self.rows, self.cols, entries)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Matrix::new(self.field, self.rows, self.cols, entries)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Matrix::new(self.field, self.rows, self.cols, entries)
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t = t.add(self.get(i, i));
        }
        t
    }

    /// Reduced row-echelon form plus the pivot columns. Zero rows are kept,
    /// sorted to the bottom; the result is the unique RREF of the row space.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(src) = found else { continue };
            m.swap_rows(pivot_row, src);
            let inv = m.get(pivot_row, col).inverse().expect("nonzero pivot");
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.sub_scaled_row(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solves a*x = b for one solution (free variables set to zero).
    /// `b` must have the same number of rows as `a`.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if b.rows != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "solve: {}x{} vs rhs {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        // rref the augmented matrix [a | b]
        let mut aug = Matrix::zero(self.field, self.rows, self.cols + b.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            for c in 0..b.cols {
                aug.set(r, self.cols + c, b.get(r, c).clone());
            }
        }
        let (red, pivots) = aug.rref();
        // inconsistency: pivot in the augmented block
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zero(self.field, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(pc, c, red.get(i, self.cols + c).clone());
            }
        }
        Ok(Some(x))
    }

    /// Canonical basis of the null space {v : a*v = 0}.
    pub fn kernel(&self) -> super::Subspace {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[fc] = self.field.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = red.get(i, fc).neg();
            }
            basis.push(v);
        }
        super::Subspace::from_rows(self.field, self.cols, basis)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c).mul(s);
            self.set(r, c, v);
        }
    }

    fn sub_scaled_row(&mut self, dst: usize, src: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(dst, c).sub(&self.get(src, c).mul(s));
            self.set(dst, c, v);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qmat(rows: usize, cols: usize, vals: &[i64]) -> Matrix {
        let f = FieldSpec::Rationals;
        Matrix::new(f, rows, cols, vals.iter().map(|&v| f.from_i64(v)).collect())
    }

    #[test]
    fn rref_rank_one() {
        let m = qmat(2, 2, &[2, 4, 1, 2]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0]);
        assert_eq!(r.row(0), qmat(1, 2, &[1, 2]).row(0));
        assert!(r.row(1).iter().all(Scalar::is_zero));
    }

    #[test]
    fn rref_identity_fixed_point() {
        let id = Matrix::identity(FieldSpec::Rationals, 3);
        let (r, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1, 2]);
        // idempotent
        assert_eq!(r.rref().0, r);
    }

    #[test]
    fn rref_f2_elimination() {
        // [[1,1],[1,2]] over F_2 is [[1,1],[1,0]] -> identity
        let f = FieldSpec::prime(2).unwrap();
        let m = Matrix::new(
            f,
            2,
            2,
            vec![f.from_i64(1), f.from_i64(1), f.from_i64(1), f.from_i64(2)],
        );
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::identity(f, 2));
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn solve_identity_and_underdetermined() {
        let id = Matrix::identity(FieldSpec::Rationals, 2);
        let b = qmat(2, 1, &[5, -3]);
        assert_eq!(id.solve(&b).unwrap().unwrap(), b);

        // [[1,1]] x = [3]: pivot solution [3, 0]
        let a = qmat(1, 2, &[1, 1]);
        let b = qmat(1, 1, &[3]);
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(x, qmat(2, 1, &[3, 0]));

        // [[0]] x = [1]: no solution
        let a = qmat(1, 1, &[0]);
        let b = qmat(1, 1, &[1]);
        assert!(a.solve(&b).unwrap().is_none());
    }

    #[test]
    fn kernel_examples() {
        let id = Matrix::identity(FieldSpec::Rationals, 3);
        assert_eq!(id.kernel().dim(), 0);

        let z = Matrix::zero(FieldSpec::Rationals, 2, 2);
        assert_eq!(z.kernel().dim(), 2);

        // kernel([[1,1]]) = span{[1,-1]} canonicalized
        let a = qmat(1, 2, &[1, 1]);
        let k = a.kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis().row(0), qmat(1, 2, &[1, -1]).row(0));
    }
}
