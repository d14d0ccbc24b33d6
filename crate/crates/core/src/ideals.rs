//! Two-sided and left ideal arithmetic, radicals, nilpotency, and
//! annihilators.
//!
//! The radical is computed by the trace-form (Dickson) criterion in
//! characteristic zero and, over F_p, by the Friedl-Ronyai chain of
//! trace functions g_i(x) = tr(lift(L_x)^(p^i)) / p^i mod p, which stays
//! correct when p <= dim. Both return the largest nilpotent ideal, which
//! for finite-dimensional algebras is simultaneously the prime radical
//! and the Jacobson radical.

use std::fmt;

use num::bigint::BigInt;
use num::{Integer, Zero};

use crate::algebra::{quotient_algebra, Algebra, AlgebraElement, AlgebraHom, Bimodule};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar, Subspace};

/// A two-sided ideal in canonical subspace form.
#[derive(Clone)]
pub struct Ideal {
    parent: Algebra,
    carrier: Subspace,
}

impl Ideal {
    /// Wraps a subspace after checking two-sided closure.
    pub fn new(parent: &Algebra, carrier: Subspace) -> Result<Ideal> {
        for row in carrier.basis_rows() {
            for i in 0..parent.dim() {
                let e = parent.basis_coords(i);
                if !carrier.contains(&parent.mul_coords(&e, &row)) {
                    return Err(Error::NotAnIdeal(format!(
                        "not closed under left multiplication by {}",
                        parent.label(i)
                    )));
                }
                if !carrier.contains(&parent.mul_coords(&row, &e)) {
                    return Err(Error::NotAnIdeal(format!(
                        "not closed under right multiplication by {}",
                        parent.label(i)
                    )));
                }
            }
        }
        Ok(Ideal { parent: parent.clone(), carrier })
    }

    pub(crate) fn new_unchecked(parent: &Algebra, carrier: Subspace) -> Ideal {
        debug_assert!(Ideal::new(parent, carrier.clone()).is_ok());
        Ideal { parent: parent.clone(), carrier }
    }

    pub fn parent(&self) -> &Algebra {
        &self.parent
    }

    pub fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.carrier.is_zero()
    }

    pub fn is_whole(&self) -> bool {
        self.carrier.is_full()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_whole()
    }

    pub fn contains(&self, other: &Ideal) -> bool {
        self.carrier.contains_subspace(&other.carrier)
    }

    pub fn set_eq(&self, other: &Ideal) -> bool {
        self.carrier == other.carrier
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.parent.same_as(&other.parent) && self.carrier == other.carrier
    }
}
impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .carrier
            .basis_rows()
            .iter()
            .map(|r| self.parent.format_vector(r))
            .collect();
        write!(f, "Ideal span{{{}}}", rows.join(", "))
    }
}

/// A left ideal in canonical subspace form.
#[derive(Clone)]
pub struct LeftIdeal {
    parent: Algebra,
    carrier: Subspace,
}

impl LeftIdeal {
    pub fn parent(&self) -> &Algebra {
        &self.parent
    }

    pub fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }
}

pub fn zero_ideal(a: &Algebra) -> Ideal {
    Ideal::new_unchecked(a, Subspace::zero(a.field(), a.dim()))
}

pub fn whole_ideal(a: &Algebra) -> Ideal {
    Ideal::new_unchecked(a, a.full_subspace())
}

/// Two-sided ideal generated by elements: span{e_i * g * e_j}. One pass
/// suffices because the algebra is unital.
pub fn two_sided_ideal_generated(a: &Algebra, gens: &[AlgebraElement]) -> Ideal {
    let mut rows = Vec::new();
    for g in gens {
        assert!(g.parent().same_as(a), "generator from wrong algebra");
        for i in 0..a.dim() {
            let left = a.mul_coords(&a.basis_coords(i), g.coords());
            for j in 0..a.dim() {
                rows.push(a.mul_coords(&left, &a.basis_coords(j)));
            }
        }
    }
    Ideal::new_unchecked(a, Subspace::from_rows(a.field(), a.dim(), rows))
}

/// Two-sided ideal generated by every vector of a subspace.
pub fn ideal_generated_by_subspace(a: &Algebra, sub: &Subspace) -> Ideal {
    let gens: Vec<AlgebraElement> = sub.basis_rows().into_iter().map(|r| a.element(r)).collect();
    two_sided_ideal_generated(a, &gens)
}

/// Left ideal generated by elements: span{e_i * g}.
pub fn left_ideal_generated(a: &Algebra, gens: &[AlgebraElement]) -> LeftIdeal {
    let mut rows = Vec::new();
    for g in gens {
        assert!(g.parent().same_as(a), "generator from wrong algebra");
        for i in 0..a.dim() {
            rows.push(a.mul_coords(&a.basis_coords(i), g.coords()));
        }
    }
    LeftIdeal {
        parent: a.clone(),
        carrier: Subspace::from_rows(a.field(), a.dim(), rows),
    }
}

fn check_same_parent(i: &Ideal, j: &Ideal) -> Result<()> {
    if i.parent.same_as(&j.parent) {
        Ok(())
    } else {
        Err(Error::ParentMismatch)
    }
}

/// Product IJ = span of pairwise products of canonical basis vectors.
pub fn ideal_product(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_same_parent(i, j)?;
    let a = &i.parent;
    let mut rows = Vec::new();
    for x in i.carrier.basis_rows() {
        for y in j.carrier.basis_rows() {
            rows.push(a.mul_coords(&x, &y));
        }
    }
    Ok(Ideal::new_unchecked(
        a,
        Subspace::from_rows(a.field(), a.dim(), rows),
    ))
}

/// I^t by iterated product. t >= 1.
pub fn ideal_power(i: &Ideal, t: usize) -> Result<Ideal> {
    assert!(t >= 1, "power must be positive");
    let mut acc = i.clone();
    for _ in 1..t {
        acc = ideal_product(&acc, i)?;
    }
    Ok(acc)
}

pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_same_parent(i, j)?;
    Ok(Ideal::new_unchecked(&i.parent, i.carrier.sum(&j.carrier)?))
}

pub fn ideal_intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_same_parent(i, j)?;
    Ok(Ideal::new_unchecked(&i.parent, i.carrier.intersect(&j.carrier)?))
}

/// Preimage {r : f(r) in j}, always a two-sided ideal of the source.
pub fn preimage_under_hom(f: &AlgebraHom, j: &Ideal) -> Result<Ideal> {
    if !j.parent.same_as(f.target()) {
        return Err(Error::ParentMismatch);
    }
    let constraints = j.carrier.constraints();
    let system = constraints.mul(f.matrix())?;
    let ker = system.kernel();
    Ok(Ideal::new_unchecked(f.source(), ker))
}

/// ann_S(S/L) for a left ideal L: the set {s : s*e_j in L for all j},
/// which is the largest two-sided ideal contained in L. One linear system.
pub fn annihilator_of_quotient(l: &LeftIdeal) -> Ideal {
    let a = &l.parent;
    let n = a.dim();
    let constraints = l.carrier.constraints();
    if constraints.rows() == 0 {
        return whole_ideal(a);
    }
    let mut stacked: Option<Matrix> = None;
    for j in 0..n {
        let rj = a.right_mul_operator(&a.basis_coords(j));
        let block = constraints.mul(&rj).expect("shape");
        stacked = Some(match stacked {
            None => block,
            Some(s) => s.stack_vertical(&block),
        });
    }
    let ker = stacked.expect("dim >= 1").kernel();
    Ideal::new_unchecked(a, ker)
}

/// Annihilator of a bimodule on the requested side:
/// {a : a.M = 0} or {b : M.b = 0}.
pub fn bimodule_annihilator(m: &Bimodule, side: Side) -> Ideal {
    let (alg, actions) = match side {
        Side::Left => (m.left_algebra(), m.left_actions()),
        Side::Right => (m.right_algebra(), m.right_actions()),
    };
    let n = alg.dim();
    let md = m.dim();
    // rows: one per matrix entry (r, c); columns: algebra coordinates
    let mut sys = Matrix::zero(alg.field(), md * md, n);
    for (i, act) in actions.iter().enumerate() {
        for r in 0..md {
            for c in 0..md {
                sys.set(r * md + c, i, act.get(r, c).clone());
            }
        }
    }
    Ideal::new_unchecked(alg, sys.kernel())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// span{x*y : x in X, y in Y} for subspaces of the algebra.
pub fn subspace_mul(a: &Algebra, x: &Subspace, y: &Subspace) -> Subspace {
    let mut rows = Vec::new();
    for xr in x.basis_rows() {
        for yr in y.basis_rows() {
            rows.push(a.mul_coords(&xr, &yr));
        }
    }
    Subspace::from_rows(a.field(), a.dim(), rows)
}

/// Largest nilpotent ideal (= Jacobson radical = prime radical here).
pub fn jacobson_radical(a: &Algebra) -> Ideal {
    let sub = match a.field() {
        FieldSpec::Rationals => radical_char_zero(a),
        FieldSpec::Prime(p) => radical_char_p(a, p),
    };
    Ideal::new_unchecked(a, sub)
}

fn radical_char_zero(a: &Algebra) -> Subspace {
    let n = a.dim();
    let ops: Vec<Matrix> = (0..n).map(|i| a.left_mul_operator(&a.basis_coords(i))).collect();
    // Gram matrix of the regular trace form
    let mut gram = Matrix::zero(a.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, ops[i].mul(&ops[j]).expect("square").trace());
        }
    }
    gram.kernel()
}

/// Friedl-Ronyai radical over F_p: descending chain A = A_{-1} >= A_0 >= ...
/// >= A_l = Rad(A), l = floor(log_p dim), cut out by the trace functions
/// g_i(xy) over integral lifts of the left-regular matrices.
fn radical_char_p(a: &Algebra, p: u64) -> Subspace {
    let n = a.dim();
    let field = a.field();
    let mut l = 0u32;
    while (p as u128).pow(l + 1) <= n as u128 {
        l += 1;
    }
    // basis of the current subspace A_{i-1}, in algebra coordinates
    let mut current = Subspace::full(field, n);
    for i in 0..=l {
        if current.is_zero() {
            break;
        }
        let basis = current.basis_rows();
        let d = basis.len();
        // g_i(x * y_j) for x, y_j in the current basis; linear in x there
        let mut sys = Matrix::zero(field, d, d);
        for (row, y) in basis.iter().enumerate() {
            for (col, x) in basis.iter().enumerate() {
                let prod = a.mul_coords(x, y);
                let g = trace_function(a, &prod, p, i);
                sys.set(row, col, g);
            }
        }
        let ker = sys.kernel();
        // map kernel coordinates back to algebra coordinates
        let mut rows = Vec::new();
        for kv in ker.basis_rows() {
            let mut v = vec![field.zero(); n];
            for (bi, c) in kv.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, b) in basis[bi].iter().enumerate() {
                    v[k] = v[k].add(&c.mul(b));
                }
            }
            rows.push(v);
        }
        current = Subspace::from_rows(field, n, rows);
    }
    current
}

/// g_i(x) = tr(lift(L_x)^(p^i)) / p^i mod p. Divisibility of the trace by
/// p^i is guaranteed on the chain; violation means the input was outside
/// the domain, which would be an internal bug.
fn trace_function(a: &Algebra, x: &[Scalar], p: u64, i: u32) -> Scalar {
    let n = a.dim();
    let lx = a.left_mul_operator(x);
    // integral lift, entries in [0, p)
    let mut lift: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for r in 0..n {
        for c in 0..n {
            lift[r][c] = BigInt::from(lx.get(r, c).residue().expect("prime field"));
        }
    }
    // lift^(p^i) by repeated squaring: p^i <= dim, so i is tiny
    let e = (p as u128).pow(i);
    let mut acc = big_identity(n);
    let mut base = lift;
    let mut k = e;
    while k > 0 {
        if k & 1 == 1 {
            acc = big_mul(&acc, &base);
        }
        base = big_mul(&base, &base);
        k >>= 1;
    }
    let mut tr = BigInt::zero();
    for (r, row) in acc.iter().enumerate() {
        tr += &row[r];
    }
    let pi = BigInt::from(p).pow(i);
    let (q, r) = tr.div_rem(&pi);
    assert!(
        r.is_zero(),
        "radical chain divisibility failed: trace {tr} not divisible by {pi}"
    );
    let residue = q.mod_floor(&BigInt::from(p));
    let residue: u64 = residue.try_into().expect("residue fits");
    Scalar::Residue { value: residue, modulus: p }
}

fn big_identity(n: usize) -> Vec<Vec<BigInt>> {
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::from(1);
    }
    m
}

fn big_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for r in 0..n {
        for k in 0..n {
            if a[r][k].is_zero() {
                continue;
            }
            for c in 0..n {
                if !b[k][c].is_zero() {
                    out[r][c] += &a[r][k] * &b[k][c];
                }
            }
        }
    }
    out
}

/// Prime radical of an ideal: preimage of rad(a/i) under the projection.
pub fn prime_radical_of_ideal(a: &Algebra, i: &Ideal) -> Result<Ideal> {
    if !i.parent.same_as(a) {
        return Err(Error::ParentMismatch);
    }
    if i.is_whole() {
        return Ok(whole_ideal(a));
    }
    let (quot, proj) = quotient_algebra(a, i)?;
    let rad = jacobson_radical(&quot);
    preimage_under_hom(&proj, &rad)
}

/// Least t with I^t inside `modulo`, or None once the power chain
/// stabilizes without containment. The chain descends, so it stabilizes
/// within dim steps.
pub fn nilpotency_index(i: &Ideal, modulo: &Ideal) -> Result<Option<usize>> {
    check_same_parent(i, modulo)?;
    let mut cur = i.clone();
    for t in 1..=(i.parent.dim() + 1) {
        if modulo.contains(&cur) {
            return Ok(Some(t));
        }
        let next = ideal_product(&cur, i)?;
        if next.set_eq(&cur) {
            return Ok(None);
        }
        cur = next;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        direct_product, field_algebra, matrix_algebra, subalgebra_from_generators,
        upper_triangular_algebra,
    };

    fn f(n: i64) -> Scalar {
        FieldSpec::Rationals.from_i64(n)
    }

    #[test]
    fn generated_ideal_examples() {
        let m2 = matrix_algebra(FieldSpec::Rationals, 2);
        assert!(two_sided_ideal_generated(&m2, &[m2.zero()]).is_zero());
        // e12 generates all of M2
        let i = two_sided_ideal_generated(&m2, &[m2.basis_element(1)]);
        assert!(i.is_whole());
    }

    #[test]
    fn generated_ideal_in_dual_numbers_subalgebra() {
        // R = <1, e12> inside M2: the ideal generated by e12 is span{e12}
        let m2 = matrix_algebra(FieldSpec::Rationals, 2);
        let (r, inc) = subalgebra_from_generators(&m2, &[m2.basis_element(1)]).unwrap();
        // find the coordinates of e12 in R
        let e12_in_r = (0..r.dim())
            .map(|i| r.basis_element(i))
            .find(|b| {
                let img = inc.apply(b).unwrap();
                img.coords() == m2.basis_element(1).coords()
            });
        let e12_in_r = match e12_in_r {
            Some(b) => b,
            None => {
                // not a basis vector: solve for it
                let sub = Subspace::from_rows(
                    m2.field(),
                    m2.dim(),
                    (0..r.dim())
                        .map(|i| inc.apply_coords(&r.basis_coords(i)))
                        .collect::<Vec<_>>(),
                );
                let coords = sub.coordinates(m2.basis_element(1).coords()).unwrap();
                r.element(coords)
            }
        };
        let i = two_sided_ideal_generated(&r, &[e12_in_r]);
        assert_eq!(i.dim(), 1);
        // and it squares to zero
        let sq = ideal_product(&i, &i).unwrap();
        assert!(sq.is_zero());
        assert_eq!(nilpotency_index(&i, &zero_ideal(&r)).unwrap(), Some(2));
    }

    #[test]
    fn left_ideal_examples() {
        let m2 = matrix_algebra(FieldSpec::Rationals, 2);
        let whole = left_ideal_generated(&m2, &[m2.unit()]);
        assert_eq!(whole.dim(), 4);
        // M2 * e12 = column-2 matrices: span{e12, e22}
        let l = left_ideal_generated(&m2, &[m2.basis_element(1)]);
        assert_eq!(l.dim(), 2);
        assert!(l.carrier.contains(m2.basis_element(1).coords()));
        assert!(l.carrier.contains(m2.basis_element(3).coords()));

        // T2 * e11 = span{e11}
        let t2 = upper_triangular_algebra(FieldSpec::Rationals, 2);
        let l = left_ideal_generated(&t2, &[t2.basis_element(0)]);
        assert_eq!(l.dim(), 1);
    }

    #[test]
    fn annihilator_of_quotient_examples() {
        let m2 = matrix_algebra(FieldSpec::Rationals, 2);
        // whole algebra as left ideal: annihilator is everything
        let whole = left_ideal_generated(&m2, &[m2.unit()]);
        assert!(annihilator_of_quotient(&whole).is_whole());
        // M2 simple: largest ideal inside the column left ideal is 0
        let l = left_ideal_generated(&m2, &[m2.basis_element(1)]);
        assert!(annihilator_of_quotient(&l).is_zero());
        // T2: span{e11} contains no nonzero two-sided ideal
        let t2 = upper_triangular_algebra(FieldSpec::Rationals, 2);
        let l = left_ideal_generated(&t2, &[t2.basis_element(0)]);
        assert!(annihilator_of_quotient(&l).is_zero());
    }

    #[test]
    fn radical_examples() {
        let m2 = matrix_algebra(FieldSpec::Rationals, 2);
        assert!(jacobson_radical(&m2).is_zero());

        let t2 = upper_triangular_algebra(FieldSpec::Rationals, 2);
        let rad = jacobson_radical(&t2);
        assert_eq!(rad.dim(), 1);
        assert!(rad.carrier.contains(t2.basis_element(1).coords()));

        let t2_f5 = upper_triangular_algebra(FieldSpec::Prime(5), 2);
        let rad = jacobson_radical(&t2_f5);
        assert_eq!(rad.dim(), 1);
        assert!(rad.carrier.contains(t2_f5.basis_element(1).coords()));
    }

    #[test]
    fn radical_small_characteristic() {
        // F_2[C_2] = F_2[x]/(x-1)^2: radical is span{1 + g}
        let table = vec![vec![0, 1], vec![1, 0]];
        let a = crate::algebra::group_algebra(FieldSpec::Prime(2), &table).unwrap();
        let rad = jacobson_radical(&a);
        assert_eq!(rad.dim(), 1);
        let f2 = FieldSpec::Prime(2);
        assert!(rad.carrier.contains(&[f2.one(), f2.one()]));

        // M2(F_2) is simple, radical 0, even though p <= dim
        let m2 = matrix_algebra(FieldSpec::Prime(2), 2);
        assert!(jacobson_radical(&m2).is_zero());

        // T2(F_2): radical span{e12}
        let t2 = upper_triangular_algebra(FieldSpec::Prime(2), 2);
        let rad = jacobson_radical(&t2);
        assert_eq!(rad.dim(), 1);
        assert!(rad.carrier.contains(t2.basis_element(1).coords()));

        // T3(F_3), dim 6: radical is the strict upper triangle, dim 3
        let t3 = upper_triangular_algebra(FieldSpec::Prime(3), 3);
        assert_eq!(jacobson_radical(&t3).dim(), 3);
    }

    #[test]
    fn radical_quotient_is_semisimple_and_nilpotent() {
        for a in [
            upper_triangular_algebra(FieldSpec::Rationals, 3),
            upper_triangular_algebra(FieldSpec::Prime(2), 3),
            matrix_algebra(FieldSpec::Prime(3), 2),
        ] {
            let rad = jacobson_radical(&a);
            let t = nilpotency_index(&rad, &zero_ideal(&a)).unwrap();
            assert!(t.is_some_and(|t| t <= a.dim().max(1)));
            if rad.is_proper() {
                let (q, _) = quotient_algebra(&a, &rad).unwrap();
                assert!(jacobson_radical(&q).is_zero());
            }
        }
    }

    #[test]
    fn t3_radical_powers() {
        let t3 = upper_triangular_algebra(FieldSpec::Rationals, 3);
        let rad = jacobson_radical(&t3);
        assert_eq!(rad.dim(), 3);
        let sq = ideal_power(&rad, 2).unwrap();
        // rad^2 = span{e13}
        assert_eq!(sq.dim(), 1);
        assert!(sq.carrier.contains(t3.basis_element(2).coords()));
        assert!(ideal_power(&rad, 3).unwrap().is_zero());
        assert_eq!(nilpotency_index(&rad, &zero_ideal(&t3)).unwrap(), Some(3));
    }

    #[test]
    fn nilpotency_of_zero_is_one() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let z = zero_ideal(&a);
        assert_eq!(nilpotency_index(&z, &z).unwrap(), Some(1));
    }

    #[test]
    fn non_nilpotent_chain_stabilizes_to_none() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let whole = whole_ideal(&a);
        assert_eq!(nilpotency_index(&whole, &zero_ideal(&a)).unwrap(), None);
    }

    #[test]
    fn product_inside_intersection() {
        let t3 = upper_triangular_algebra(FieldSpec::Rationals, 3);
        let rad = jacobson_radical(&t3);
        let prod = ideal_product(&rad, &rad).unwrap();
        let inter = ideal_intersect(&rad, &rad).unwrap();
        assert!(inter.contains(&prod));
    }

    #[test]
    fn radical_monotone_and_idempotent() {
        let t3 = upper_triangular_algebra(FieldSpec::Rationals, 3);
        let zero = zero_ideal(&t3);
        let rad = jacobson_radical(&t3);
        let sqrt_zero = prime_radical_of_ideal(&t3, &zero).unwrap();
        assert!(sqrt_zero.set_eq(&rad));
        // sqrt is idempotent
        let again = prime_radical_of_ideal(&t3, &sqrt_zero).unwrap();
        assert!(again.set_eq(&sqrt_zero));
        // monotone: sqrt(0) inside sqrt(rad^2)
        let sq = ideal_power(&rad, 2).unwrap();
        let sqrt_sq = prime_radical_of_ideal(&t3, &sq).unwrap();
        assert!(sqrt_sq.contains(&sqrt_zero));
        // sqrt(whole) = whole
        assert!(prime_radical_of_ideal(&t3, &whole_ideal(&t3)).unwrap().is_whole());
    }

    #[test]
    fn preimage_under_projection_and_inclusion() {
        // diagonal inside T2: preimage of span{e12, e22} is span{e22}
        let t2 = upper_triangular_algebra(FieldSpec::Rationals, 2);
        let k = field_algebra(FieldSpec::Rationals);
        let kk = direct_product(&k, &k).unwrap();
        // inclusion diag(a, c) -> a e11 + c e22: matrix columns
        let mut m = Matrix::zero(FieldSpec::Rationals, 3, 2);
        m.set(0, 0, f(1));
        m.set(2, 1, f(1));
        let inc = AlgebraHom::new(kk.clone(), t2.clone(), m).unwrap();
        let p1 = Ideal::new(
            &t2,
            Subspace::from_rows(
                FieldSpec::Rationals,
                3,
                vec![vec![f(0), f(1), f(0)], vec![f(0), f(0), f(1)]],
            ),
        )
        .unwrap();
        let pre = preimage_under_hom(&inc, &p1).unwrap();
        assert_eq!(pre.dim(), 1);
        assert!(pre.carrier.contains(&[f(0), f(1)]));
        // preimage of the whole target is the whole source
        assert!(preimage_under_hom(&inc, &whole_ideal(&t2)).unwrap().is_whole());
    }
}
