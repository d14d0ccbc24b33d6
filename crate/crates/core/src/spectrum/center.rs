//! Center computation and the splitting of a commutative semisimple algebra
//! into its primitive idempotents.
//!
//! Over F_p the split is deterministic and complete: the fixed subalgebra of
//! the Frobenius map x -> x^p is spanned by the primitive idempotents, and
//! the minimal polynomial of any of its elements factors into distinct
//! linear factors. Over Q we split as far as rational-root extraction plus
//! small-degree / mod-p irreducibility certificates allow, and report
//! NonSplitCenter when a block resists both.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar, Subspace};
use crate::harness::SplitMix64;
use crate::poly::{certified_irreducible_q, rational_roots, roots_fp, Poly};

/// The center {z : zx = xz for all x} as a subspace.
pub fn center_subspace(a: &Algebra) -> Subspace {
    let n = a.dim();
    let mut stacked: Option<Matrix> = None;
    for i in 0..n {
        let li = a.left_mul_operator(&a.basis_coords(i));
        let ri = a.right_mul_operator(&a.basis_coords(i));
        let block = li.sub(&ri);
        stacked = Some(match stacked {
            None => block,
            Some(s) => s.stack_vertical(&block),
        });
    }
    stacked.expect("dim >= 1").kernel()
}

/// A block in the splitting process: an idempotent e (coordinates in the
/// center algebra) and the dimension of the sub-ring eZ.
struct Block {
    unit: Vec<Scalar>,
    dim: usize,
    finished: bool,
}

/// Minimal polynomial of z within the unital block (e, eZ): the monic
/// generator of {f : f(z) = 0}, computed from the first linear dependence
/// among e, z, z^2, ...
fn min_poly_in_block(z_alg: &Algebra, unit: &[Scalar], z: &[Scalar]) -> Poly {
    let field = z_alg.field();
    let n = z_alg.dim();
    let mut powers: Vec<Vec<Scalar>> = vec![unit.to_vec()];
    loop {
        let next = z_alg.mul_coords(powers.last().expect("nonempty"), z);
        // is `next` a combination of the previous powers?
        let mut cols = Matrix::zero(field, n, powers.len());
        for (c, p) in powers.iter().enumerate() {
            for (r, v) in p.iter().enumerate() {
                cols.set(r, c, v.clone());
            }
        }
        let rhs = Matrix::from_rows(field, 1, vec![next.clone()]).transpose();
        if let Some(sol) = cols.solve(&rhs).expect("shapes agree") {
            // z^m = sum c_k z^k  =>  min poly = x^m - sum c_k x^k
            let mut coeffs: Vec<Scalar> = (0..powers.len())
                .map(|k| sol.get(k, 0).neg())
                .collect();
            coeffs.push(field.one());
            return Poly::new(field, coeffs);
        }
        powers.push(next);
        assert!(powers.len() <= n + 1, "minimal polynomial search overran the dimension");
    }
}

fn block_dim(z_alg: &Algebra, unit: &[Scalar]) -> usize {
    z_alg.left_mul_operator(unit).rank()
}

/// Evaluates f at z inside the block with unit e.
fn eval_in_block(z_alg: &Algebra, unit: &[Scalar], z: &[Scalar], f: &Poly) -> Vec<Scalar> {
    let field = z_alg.field();
    let mut acc = vec![field.zero(); z_alg.dim()];
    for c in f.coeffs().iter().rev() {
        acc = z_alg.mul_coords(&acc, z);
        for (k, u) in unit.iter().enumerate() {
            acc[k] = acc[k].add(&c.mul(u));
        }
    }
    acc
}

/// Splits a block along pairwise-coprime monic factors of the minimal
/// polynomial of z: the factor h receives the idempotent (v * m/h)(z)
/// where v*(m/h) = 1 mod h.
fn split_block(
    z_alg: &Algebra,
    block: &Block,
    z: &[Scalar],
    min_poly: &Poly,
    factors: &[Poly],
) -> Result<Vec<Block>> {
    let mut out = Vec::new();
    for h in factors {
        let cofactor = min_poly.div_exact(h);
        let (g, _, v) = h.ext_gcd(&cofactor);
        if g.is_zero() || g.degree() != 0 {
            return Err(Error::Internal(
                "splitting factors were not coprime".into(),
            ));
        }
        let e = eval_in_block(z_alg, &block.unit, z, &v.mul(&cofactor));
        let dim = block_dim(z_alg, &e);
        if dim == 0 {
            return Err(Error::Internal("zero idempotent from a proper factor".into()));
        }
        out.push(Block { unit: e, dim, finished: false });
    }
    // exactness: the new idempotents are orthogonal and sum to the old unit
    let mut sum = vec![z_alg.field().zero(); z_alg.dim()];
    for b in &out {
        for (k, v) in b.unit.iter().enumerate() {
            sum[k] = sum[k].add(v);
        }
    }
    if sum != block.unit {
        return Err(Error::Internal("split idempotents do not sum to the block unit".into()));
    }
    Ok(out)
}

/// Primitive idempotents of a commutative semisimple algebra, as coordinate
/// vectors. Deterministic; complete over F_p, certified-or-fail over Q.
pub fn central_primitive_idempotents(z_alg: &Algebra) -> Result<Vec<Vec<Scalar>>> {
    let field = z_alg.field();
    let idems = match field {
        FieldSpec::Prime(p) => split_over_fp(z_alg, p)?,
        FieldSpec::Rationals => split_over_q(z_alg)?,
    };
    // exact verification: orthogonal idempotents summing to 1
    let mut sum = vec![field.zero(); z_alg.dim()];
    for e in &idems {
        for (k, v) in e.iter().enumerate() {
            sum[k] = sum[k].add(v);
        }
    }
    if sum != z_alg.unit_coords() {
        return Err(Error::Internal("idempotents do not sum to 1".into()));
    }
    for (i, e) in idems.iter().enumerate() {
        for (j, f) in idems.iter().enumerate() {
            let prod = z_alg.mul_coords(e, f);
            let expect = if i == j { e.clone() } else { vec![field.zero(); z_alg.dim()] };
            if prod != expect {
                return Err(Error::Internal("idempotent products are not diagonal".into()));
            }
        }
    }
    Ok(idems)
}

fn split_over_fp(z_alg: &Algebra, p: u64) -> Result<Vec<Vec<Scalar>>> {
    let field = z_alg.field();
    let n = z_alg.dim();
    // Frobenius matrix: column i = (e_i)^p
    let mut frob = Matrix::zero(field, n, n);
    for i in 0..n {
        let mut acc = z_alg.unit_coords().to_vec();
        let base = z_alg.basis_coords(i);
        let mut k = p;
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = z_alg.mul_coords(&acc, &sq);
            }
            sq = z_alg.mul_coords(&sq, &sq);
            k >>= 1;
        }
        for (r, v) in acc.into_iter().enumerate() {
            frob.set(r, i, v);
        }
    }
    let fixed = frob.sub(&Matrix::identity(field, n)).kernel();
    let component_count = fixed.dim();
    let mut blocks = vec![Block {
        unit: z_alg.unit_coords().to_vec(),
        dim: n,
        finished: false,
    }];
    for b in fixed.basis_rows() {
        let mut next = Vec::new();
        for block in blocks {
            if block.dim == 1 {
                next.push(block);
                continue;
            }
            let z = z_alg.mul_coords(&b, &block.unit);
            let m = min_poly_in_block(z_alg, &block.unit, &z);
            let roots = roots_fp(&m);
            if roots.len() <= 1 {
                next.push(block);
                continue;
            }
            if roots.len() != m.degree() {
                return Err(Error::Internal(
                    "Frobenius-fixed element has a nonlinear factor".into(),
                ));
            }
            let factors: Vec<Poly> = roots
                .iter()
                .map(|&c| Poly::linear_root(&Scalar::Residue { value: c, modulus: p }))
                .collect();
            next.extend(split_block(z_alg, &block, &z, &m, &factors)?);
        }
        blocks = next;
    }
    if blocks.len() != component_count {
        return Err(Error::Internal(format!(
            "Frobenius predicts {component_count} components, split found {}",
            blocks.len()
        )));
    }
    Ok(blocks.into_iter().map(|b| b.unit).collect())
}

fn split_over_q(z_alg: &Algebra) -> Result<Vec<Vec<Scalar>>> {
    let n = z_alg.dim();
    let mut blocks = vec![Block {
        unit: z_alg.unit_coords().to_vec(),
        dim: n,
        finished: false,
    }];
    loop {
        let active = blocks.iter().position(|b| !b.finished && b.dim > 1);
        let Some(idx) = active else { break };
        let block = &blocks[idx];
        match try_split_block_q(z_alg, block)? {
            SplitOutcome::Split(parts) => {
                blocks.swap_remove(idx);
                blocks.extend(parts);
            }
            SplitOutcome::Field => blocks[idx].finished = true,
            SplitOutcome::Stuck(tried) => {
                return Err(Error::NonSplitCenter(format!(
                    "a {}-dimensional central block resisted {} splitting candidates",
                    blocks[idx].dim, tried
                )));
            }
        }
    }
    Ok(blocks.into_iter().map(|b| b.unit).collect())
}

enum SplitOutcome {
    Split(Vec<Block>),
    Field,
    Stuck(usize),
}

fn try_split_block_q(z_alg: &Algebra, block: &Block) -> Result<SplitOutcome> {
    let field = z_alg.field();
    let n = z_alg.dim();
    // candidate elements: block images of basis vectors, pairwise sums,
    // then seeded pseudo-random small combinations
    let mut candidates: Vec<Vec<Scalar>> = Vec::new();
    let basis_in_block: Vec<Vec<Scalar>> = (0..n)
        .map(|i| z_alg.mul_coords(&z_alg.basis_coords(i), &block.unit))
        .collect();
    candidates.extend(basis_in_block.iter().cloned());
    for i in 0..n {
        for j in (i + 1)..n {
            let sum: Vec<Scalar> = basis_in_block[i]
                .iter()
                .zip(&basis_in_block[j])
                .map(|(a, b)| a.add(b))
                .collect();
            candidates.push(sum);
        }
    }
    let mut rng = SplitMix64::new(0x5ca1ab1e_0000_0001 ^ (n as u64) << 8 ^ block.dim as u64);
    for _ in 0..48 {
        let mut v = vec![field.zero(); n];
        for bb in &basis_in_block {
            let c = field.from_i64(rng.next_in_range(-4, 4));
            for (k, x) in bb.iter().enumerate() {
                v[k] = v[k].add(&c.mul(x));
            }
        }
        candidates.push(v);
    }
    let tried = candidates.len();
    for z in candidates {
        let m = min_poly_in_block(z_alg, &block.unit, &z);
        if m.degree() <= 1 {
            continue;
        }
        if m.squarefree_part() != m.monic() {
            return Err(Error::Internal(
                "non-squarefree minimal polynomial in a semisimple center".into(),
            ));
        }
        let (roots, _) = rational_roots(&m);
        let mut factors: Vec<Poly> = Vec::new();
        let mut leftover = m.clone();
        for r in &roots {
            let lin = Poly::linear_root(&Scalar::Rational(r.clone()));
            leftover = leftover.div_exact(&lin);
            factors.push(lin);
        }
        if !leftover.is_zero() && leftover.degree() >= 1 {
            factors.push(leftover.clone());
        }
        if factors.len() >= 2 {
            return Ok(SplitOutcome::Split(split_block(z_alg, block, &z, &m, &factors)?));
        }
        // single factor left: a full-degree irreducibility certificate
        // proves the block is a field
        if roots.is_empty() && m.degree() == block.dim && certified_irreducible_q(&m) {
            return Ok(SplitOutcome::Field);
        }
    }
    Ok(SplitOutcome::Stuck(tried))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        direct_product, field_algebra, group_algebra, matrix_algebra, subalgebra_on_subspace,
        upper_triangular_algebra,
    };

    fn split_count(a: &Algebra) -> usize {
        let zs = center_subspace(a);
        let (z_alg, _) = subalgebra_on_subspace(a, &zs).unwrap();
        central_primitive_idempotents(&z_alg).unwrap().len()
    }

    #[test]
    fn center_of_matrix_algebra_is_scalars() {
        for field in [FieldSpec::Rationals, FieldSpec::Prime(5)] {
            let a = matrix_algebra(field, 2);
            let z = center_subspace(&a);
            assert_eq!(z.dim(), 1);
            assert!(z.contains(a.unit_coords()));
        }
    }

    #[test]
    fn center_of_t2() {
        let a = upper_triangular_algebra(FieldSpec::Rationals, 2);
        assert_eq!(center_subspace(&a).dim(), 1);
    }

    #[test]
    fn product_of_fields_splits() {
        let k = field_algebra(FieldSpec::Rationals);
        let kk = direct_product(&k, &k).unwrap();
        assert_eq!(split_count(&kk), 2);
        let kkk = direct_product(&kk, &k).unwrap();
        assert_eq!(split_count(&kkk), 3);
    }

    #[test]
    fn product_of_fields_splits_fp() {
        for p in [2u64, 3, 5] {
            let k = field_algebra(FieldSpec::Prime(p));
            let kk = direct_product(&k, &k).unwrap();
            assert_eq!(split_count(&kk), 2);
        }
    }

    #[test]
    fn cyclic_group_algebra_q() {
        // Q[C_3] = Q x Q(w): two components, one of them a quadratic field
        let table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let a = group_algebra(FieldSpec::Rationals, &table).unwrap();
        assert_eq!(split_count(&a), 2);
        // Q[C_4] = Q x Q x Q(i): three components
        let c4 = vec![
            vec![0, 1, 2, 3],
            vec![1, 2, 3, 0],
            vec![2, 3, 0, 1],
            vec![3, 0, 1, 2],
        ];
        let a = group_algebra(FieldSpec::Rationals, &c4).unwrap();
        assert_eq!(split_count(&a), 3);
    }

    #[test]
    fn cyclic_group_algebra_fp() {
        // F_2[C_3] = F_2 x F_4: two components
        let table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let a = group_algebra(FieldSpec::Prime(2), &table).unwrap();
        assert_eq!(split_count(&a), 2);
        // F_7[C_3]: x^3 - 1 splits completely mod 7: three components
        let a = group_algebra(FieldSpec::Prime(7), &table).unwrap();
        assert_eq!(split_count(&a), 3);
    }

    #[test]
    fn quintic_cyclotomic_component_certified() {
        // Q[C_5] = Q x Q(zeta_5): the quartic block needs the mod-p certificate
        let c5: Vec<Vec<usize>> = (0..5).map(|i| (0..5).map(|j| (i + j) % 5).collect()).collect();
        let a = group_algebra(FieldSpec::Rationals, &c5).unwrap();
        assert_eq!(split_count(&a), 2);
    }

    #[test]
    fn non_split_center_is_reported() {
        // Q[C_8]: the component Q(zeta_8) has a non-cyclic Galois group, so
        // no generator certifies via a single mod-p reduction and the block
        // is reported rather than mis-split
        let c8: Vec<Vec<usize>> = (0..8).map(|i| (0..8).map(|j| (i + j) % 8).collect()).collect();
        let a = group_algebra(FieldSpec::Rationals, &c8).unwrap();
        let zs = center_subspace(&a);
        let (z_alg, _) = subalgebra_on_subspace(&a, &zs).unwrap();
        match central_primitive_idempotents(&z_alg) {
            Err(Error::NonSplitCenter(_)) => {}
            other => panic!("expected NonSplitCenter, got {other:?}"),
        }
    }
}
