//! Standard constructors: matrix algebras, upper-triangular algebras, group
//! algebras, direct products, subalgebras, and quotients.

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar, Subspace};
use crate::ideals::Ideal;

use super::{Algebra, AlgebraElement, AlgebraHom};

/// The base field as a one-dimensional algebra.
pub fn field_algebra(field: FieldSpec) -> Algebra {
    Algebra::new(
        field,
        vec!["1".to_string()],
        vec![vec![vec![field.one()]]],
        vec![field.one()],
    )
    .expect("field algebra is valid")
}

/// M_n(k) with basis e11, e12, ..., enn (row-major) and unit sum e_ii.
pub fn matrix_algebra(field: FieldSpec, n: usize) -> Algebra {
    assert!(n >= 1);
    let dim = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let mut labels = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("e{}{}", i + 1, j + 1));
        }
    }
    let mut mul = vec![vec![vec![field.zero(); dim]; dim]; dim];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if j == k {
                        mul[idx(i, j)][idx(k, l)][idx(i, l)] = field.one();
                    }
                }
            }
        }
    }
    let mut unit = vec![field.zero(); dim];
    for i in 0..n {
        unit[idx(i, i)] = field.one();
    }
    Algebra::new(field, labels, mul, unit).expect("matrix algebra is valid")
}

/// T_n(k): upper-triangular matrices, basis e_ij for i <= j.
pub fn upper_triangular_algebra(field: FieldSpec, n: usize) -> Algebra {
    assert!(n >= 1);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i..n {
            pairs.push((i, j));
        }
    }
    let dim = pairs.len();
    let pos = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
    let labels: Vec<String> = pairs.iter().map(|&(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    let mut mul = vec![vec![vec![field.zero(); dim]; dim]; dim];
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate() {
            if j == k {
                mul[a][b][pos(i, l)] = field.one();
            }
        }
    }
    let mut unit = vec![field.zero(); dim];
    for i in 0..n {
        unit[pos(i, i)] = field.one();
    }
    Algebra::new(field, labels, mul, unit).expect("triangular algebra is valid")
}

/// Group algebra k[G] from a Cayley table: table[i][j] is the index of
/// g_i * g_j. The table is validated as a group.
pub fn group_algebra(field: FieldSpec, table: &[Vec<usize>]) -> Result<Algebra> {
    let n = table.len();
    if n == 0 || table.iter().any(|row| row.len() != n) {
        return Err(Error::NotAGroup("table is not square".into()));
    }
    if table.iter().flatten().any(|&v| v >= n) {
        return Err(Error::NotAGroup("entry out of range".into()));
    }
    // identity
    let id = (0..n)
        .find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    // inverses
    for i in 0..n {
        if !(0..n).any(|j| table[i][j] == id && table[j][i] == id) {
            return Err(Error::NotAGroup(format!("element {i} has no inverse")));
        }
    }
    // associativity
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    let labels: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let mut mul = vec![vec![vec![field.zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            mul[i][j][table[i][j]] = field.one();
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[id] = field.one();
    Algebra::new(field, labels, mul, unit)
}

/// A x B with componentwise product.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(format!("{} vs {}", a.field(), b.field())));
    }
    let field = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let dim = na + nb;
    let mut labels: Vec<String> = a.labels().iter().map(|l| format!("{l}.0")).collect();
    labels.extend(b.labels().iter().map(|l| format!("{l}.1")));
    let mut mul = vec![vec![vec![field.zero(); dim]; dim]; dim];
    for i in 0..na {
        for j in 0..na {
            for (k, v) in a.mul_table()[i][j].iter().enumerate() {
                mul[i][j][k] = v.clone();
            }
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            for (k, v) in b.mul_table()[i][j].iter().enumerate() {
                mul[na + i][na + j][na + k] = v.clone();
            }
        }
    }
    let mut unit = vec![field.zero(); dim];
    for (i, v) in a.unit_coords().iter().enumerate() {
        unit[i] = v.clone();
    }
    for (i, v) in b.unit_coords().iter().enumerate() {
        unit[na + i] = v.clone();
    }
    Algebra::new(field, labels, mul, unit)
}

/// Builds the algebra structure on a multiplicatively closed subspace
/// containing the unit, together with the inclusion homomorphism.
/// Coordinates in the new algebra are pivot-column reads against the
/// subspace's canonical basis.
pub fn subalgebra_on_subspace(a: &Algebra, sub: &Subspace) -> Result<(Algebra, AlgebraHom)> {
    if sub.ambient_dim() != a.dim() {
        return Err(Error::AmbientMismatch { expected: a.dim(), got: sub.ambient_dim() });
    }
    if !sub.contains(a.unit_coords()) {
        return Err(Error::NotUnital { label: "1".into() });
    }
    let field = a.field();
    let d = sub.dim();
    let rows = sub.basis_rows();
    let coords_of = |v: &[Scalar]| -> Result<Vec<Scalar>> {
        sub.coordinates(v).ok_or(Error::NotMultiplicativelyClosed)
    };
    let mut mul = vec![vec![vec![field.zero(); d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            let prod = a.mul_coords(&rows[i], &rows[j]);
            mul[i][j] = coords_of(&prod)?;
        }
    }
    let unit = coords_of(a.unit_coords())?;
    let labels: Vec<String> = (0..d).map(|i| format!("b{i}")).collect();
    let sub_alg = Algebra::new(field, labels, mul, unit)?;
    // inclusion: columns are the basis rows
    let mut inc = Matrix::zero(field, a.dim(), d);
    for (j, row) in rows.iter().enumerate() {
        for (i, v) in row.iter().enumerate() {
            inc.set(i, j, v.clone());
        }
    }
    let hom = AlgebraHom::new(sub_alg.clone(), a.clone(), inc)?;
    Ok((sub_alg, hom))
}

/// Smallest unital subalgebra containing the generators, as a new algebra
/// plus the inclusion. Closure iterates span + pairwise products to a
/// fixed point (at most dim steps, each strictly increasing the span).
pub fn subalgebra_from_generators(
    a: &Algebra,
    gens: &[AlgebraElement],
) -> Result<(Algebra, AlgebraHom)> {
    for g in gens {
        if !g.parent().same_as(a) {
            return Err(Error::ParentMismatch);
        }
    }
    let field = a.field();
    let mut rows: Vec<Vec<Scalar>> = vec![a.unit_coords().to_vec()];
    rows.extend(gens.iter().map(|g| g.coords().to_vec()));
    let mut span = Subspace::from_rows(field, a.dim(), rows);
    for _ in 0..=a.dim() {
        let basis = span.basis_rows();
        let mut products = Vec::new();
        for x in &basis {
            for y in &basis {
                let p = a.mul_coords(x, y);
                if !span.contains(&p) {
                    products.push(p);
                }
            }
        }
        if products.is_empty() {
            break;
        }
        let mut rows = span.basis_rows();
        rows.extend(products);
        span = Subspace::from_rows(field, a.dim(), rows);
    }
    subalgebra_on_subspace(a, &span)
}

/// Quotient by a proper two-sided ideal: the algebra on the coset
/// representatives (non-pivot coordinates of the ideal's canonical basis)
/// plus the projection homomorphism.
pub fn quotient_algebra(a: &Algebra, ideal: &Ideal) -> Result<(Algebra, AlgebraHom)> {
    if !ideal.parent().same_as(a) {
        return Err(Error::ParentMismatch);
    }
    if ideal.carrier().is_full() {
        return Err(Error::ProperIdealRequired);
    }
    let field = a.field();
    let carrier = ideal.carrier();
    let reps = carrier.non_pivot_cols();
    let d = reps.len();
    // project: reduce mod the ideal, then read the non-pivot coordinates
    let project = |v: &[Scalar]| -> Vec<Scalar> {
        let red = carrier.reduce(v);
        reps.iter().map(|&c| red[c].clone()).collect()
    };
    let mut mul = vec![vec![vec![field.zero(); d]; d]; d];
    for (i, &ri) in reps.iter().enumerate() {
        for (j, &rj) in reps.iter().enumerate() {
            let prod = a.mul_coords(&a.basis_coords(ri), &a.basis_coords(rj));
            mul[i][j] = project(&prod);
        }
    }
    let unit = project(a.unit_coords());
    let labels: Vec<String> = reps.iter().map(|&c| format!("[{}]", a.label(c))).collect();
    let quot = Algebra::new(field, labels, mul, unit)?;
    let mut proj = Matrix::zero(field, d, a.dim());
    for j in 0..a.dim() {
        let col = project(&a.basis_coords(j));
        for (i, v) in col.into_iter().enumerate() {
            proj.set(i, j, v);
        }
    }
    let hom = AlgebraHom::new(a.clone(), quot.clone(), proj)?;
    Ok((quot, hom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals;

    #[test]
    fn matrix_algebra_shape() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        assert_eq!(a.dim(), 4);
        // unit = e11 + e22
        let f = FieldSpec::Rationals;
        assert_eq!(a.unit_coords(), &[f.one(), f.zero(), f.zero(), f.one()]);
    }

    #[test]
    fn cyclic_group_algebra_is_commutative() {
        let table = vec![vec![0, 1], vec![1, 0]];
        let a = group_algebra(FieldSpec::Rationals, &table).unwrap();
        assert_eq!(a.dim(), 2);
        for i in 0..2 {
            for j in 0..2 {
                let x = a.basis_element(i);
                let y = a.basis_element(j);
                assert_eq!(
                    x.multiply(&y).unwrap().coords(),
                    y.multiply(&x).unwrap().coords()
                );
            }
        }
    }

    #[test]
    fn non_group_table_rejected() {
        // no identity
        let table = vec![vec![1, 0], vec![0, 0]];
        assert!(group_algebra(FieldSpec::Rationals, &table).is_err());
    }

    #[test]
    fn diagonal_product_algebra() {
        let k = field_algebra(FieldSpec::Rationals);
        let a = direct_product(&k, &k).unwrap();
        assert_eq!(a.dim(), 2);
        let e0 = a.basis_element(0);
        let e1 = a.basis_element(1);
        assert!(e0.multiply(&e1).unwrap().is_zero());
        assert_eq!(e0.multiply(&e0).unwrap().coords(), e0.coords());
    }

    #[test]
    fn subalgebra_of_empty_generators_is_span_of_unit() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let (sub, inc) = subalgebra_from_generators(&a, &[]).unwrap();
        assert_eq!(sub.dim(), 1);
        assert_eq!(inc.apply_coords(sub.unit_coords()), a.unit_coords());
    }

    #[test]
    fn subalgebra_generated_by_e12_in_m2() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let e12 = a.basis_element(1);
        let (sub, _) = subalgebra_from_generators(&a, &[e12]).unwrap();
        assert_eq!(sub.dim(), 2);
    }

    #[test]
    fn subalgebra_generated_by_e11_in_m2() {
        // e11 is idempotent: closure is span{1, e11}, isomorphic to k x k
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let e11 = a.basis_element(0);
        let (sub, _) = subalgebra_from_generators(&a, &[e11]).unwrap();
        assert_eq!(sub.dim(), 2);
    }

    #[test]
    fn subalgebra_closure_is_idempotent() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let (sub, inc) = subalgebra_from_generators(&a, &[a.basis_element(1)]).unwrap();
        // generate again from the images of all sub basis elements
        let gens: Vec<AlgebraElement> = (0..sub.dim())
            .map(|i| inc.apply(&sub.basis_element(i)).unwrap())
            .collect();
        let (sub2, _) = subalgebra_from_generators(&a, &gens).unwrap();
        assert_eq!(sub2.dim(), sub.dim());
    }

    #[test]
    fn quotient_by_zero_is_isomorphic_copy() {
        let a = upper_triangular_algebra(FieldSpec::Rationals, 2);
        let zero = ideals::zero_ideal(&a);
        let (q, proj) = quotient_algebra(&a, &zero).unwrap();
        assert_eq!(q.dim(), a.dim());
        assert_eq!(proj.matrix(), &Matrix::identity(a.field(), a.dim()));
    }

    #[test]
    fn t2_mod_radical_is_k_times_k() {
        let a = upper_triangular_algebra(FieldSpec::Rationals, 2);
        // span{e12} is the ideal of strictly upper matrices (basis index 1)
        let i = ideals::two_sided_ideal_generated(&a, &[a.basis_element(1)]);
        let (q, _) = quotient_algebra(&a, &i).unwrap();
        assert_eq!(q.dim(), 2);
        // commutative with two orthogonal idempotents
        let e0 = q.basis_element(0);
        let e1 = q.basis_element(1);
        assert!(e0.multiply(&e1).unwrap().is_zero());
        assert_eq!(e0.multiply(&e0).unwrap().coords(), e0.coords());
        assert_eq!(e1.multiply(&e1).unwrap().coords(), e1.coords());
    }

    #[test]
    fn quotient_by_whole_algebra_rejected() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let whole = ideals::two_sided_ideal_generated(&a, &[a.basis_element(1)]);
        assert!(whole.carrier().is_full());
        assert!(matches!(
            quotient_algebra(&a, &whole),
            Err(Error::ProperIdealRequired)
        ));
    }
}
