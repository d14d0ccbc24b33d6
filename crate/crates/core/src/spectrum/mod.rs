//! The prime spectrum of a finite-dimensional algebra as a finite set, its
//! Zariski closed-set lattice, minimal primes, Goldie ranks, and the
//! rank-bounded strata.

mod center;
mod topology;

pub use center::{center_subspace, central_primitive_idempotents};
pub use topology::{
    canonical_form, enumerate_topologies, enumerate_topologies_up_to_iso, full_mask, FiniteSpace,
};

use std::fmt;
use std::sync::Arc;

use crate::algebra::{quotient_algebra, subalgebra_on_subspace, Algebra};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Scalar, Subspace};
use crate::harness::SplitMix64;
use crate::ideals::{
    self, ideal_intersect, jacobson_radical, preimage_under_hom, two_sided_ideal_generated, Ideal,
};

/// Enumeration cap for closed-set families: 2^|Spec| subsets.
pub const MAX_SPEC_POINTS: usize = 16;

/// Cap on p^dim for exhaustive element enumeration in oracles and
/// exhaustive Goldie-rank searches.
pub const ELEMENT_ENUMERATION_CAP: u128 = 1 << 16;

/// A prime ideal with its certificate: the dimension of the simple quotient.
#[derive(Clone)]
pub struct PrimeIdeal {
    ideal: Ideal,
    quotient_dim: usize,
}

impl PrimeIdeal {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn quotient_dim(&self) -> usize {
        self.quotient_dim
    }
}

impl fmt::Debug for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrimeIdeal({:?}, quotient dim {})", self.ideal, self.quotient_dim)
    }
}

struct SpecInner {
    algebra: Algebra,
    primes: Vec<PrimeIdeal>,
}

/// The prime spectrum: a canonically ordered finite list of primes.
#[derive(Clone)]
pub struct SpecSet {
    inner: Arc<SpecInner>,
}

impl SpecSet {
    pub fn algebra(&self) -> &Algebra {
        &self.inner.algebra
    }

    pub fn primes(&self) -> &[PrimeIdeal] {
        &self.inner.primes
    }

    pub fn len(&self) -> usize {
        self.inner.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.primes.is_empty()
    }

    pub fn prime(&self, i: usize) -> &PrimeIdeal {
        &self.inner.primes[i]
    }
}

impl fmt::Debug for SpecSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpecSet({} primes of {:?})", self.len(), self.inner.algebra)
    }
}

/// A Zariski closed subset: membership mask plus its defining radical
/// ideal I(U). Always closure-stable: mask == V(I(U)).
#[derive(Clone)]
pub struct ClosedSet {
    spec: SpecSet,
    mask: u32,
    ideal: Ideal,
}

impl ClosedSet {
    pub fn spec(&self) -> &SpecSet {
        &self.spec
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.ideal
    }
}

impl fmt::Debug for ClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClosedSet(mask {:#b} of {} primes)", self.mask, self.spec.len())
    }
}

/// Deterministic prime ordering: by carrier dimension, then entrywise
/// lexicographic comparison of the canonical bases.
fn prime_sort_key(i: &Ideal) -> (usize, Vec<Scalar>) {
    let mut flat = Vec::new();
    for row in i.carrier().basis_rows() {
        flat.extend(row);
    }
    (i.dim(), flat)
}

/// Computes the prime spectrum: radical, semisimple quotient, center split,
/// then one prime per central primitive idempotent (the preimage of the
/// complementary component ideal).
pub fn spec(a: &Algebra) -> Result<SpecSet> {
    let rad = jacobson_radical(a);
    let (ss, proj) = quotient_algebra(a, &rad)?;
    let z_sub = center_subspace(&ss);
    let (z_alg, z_inc) = subalgebra_on_subspace(&ss, &z_sub)?;
    let idems = central_primitive_idempotents(&z_alg)?;
    let mut primes = Vec::with_capacity(idems.len());
    for e in idems {
        let e_ss = z_inc.apply_coords(&e);
        let complement: Vec<Scalar> = ss
            .unit_coords()
            .iter()
            .zip(&e_ss)
            .map(|(u, v)| u.sub(v))
            .collect();
        let p_ss = two_sided_ideal_generated(&ss, &[ss.element(complement)]);
        let quotient_dim = ss.dim() - p_ss.dim();
        let ideal = preimage_under_hom(&proj, &p_ss)?;
        primes.push(PrimeIdeal { ideal, quotient_dim });
    }
    primes.sort_by(|x, y| prime_sort_key(&x.ideal).cmp(&prime_sort_key(&y.ideal)));
    let s = SpecSet {
        inner: Arc::new(SpecInner { algebra: a.clone(), primes }),
    };
    debug_assert!(spec_invariants_hold(&s));
    Ok(s)
}

/// SpecSet invariants: pairwise incomparability and intersection equal to
/// the prime radical.
fn spec_invariants_hold(s: &SpecSet) -> bool {
    let a = s.algebra();
    for (i, p) in s.primes().iter().enumerate() {
        for (j, q) in s.primes().iter().enumerate() {
            if i != j && p.ideal.contains(&q.ideal) {
                return false;
            }
        }
    }
    let expected = jacobson_radical(a);
    i_of_mask(s, full_mask(s.len())).set_eq(&expected)
}

/// True iff a/i is simple: zero radical and a single Wedderburn component.
pub fn is_prime(a: &Algebra, i: &Ideal) -> Result<bool> {
    if !i.is_proper() {
        return Err(Error::ProperIdealRequired);
    }
    let (q, _) = quotient_algebra(a, i)?;
    if !jacobson_radical(&q).is_zero() {
        return Ok(false);
    }
    let z_sub = center_subspace(&q);
    let (z_alg, _) = subalgebra_on_subspace(&q, &z_sub)?;
    Ok(central_primitive_idempotents(&z_alg)?.len() == 1)
}

/// Independent definitional oracle: i is prime iff no pair a, b outside i
/// has a*A*b inside i. The a-side is enumerated exhaustively over the
/// finite field; the b-side is a kernel computation. Test-only by intent.
pub fn definitional_prime_oracle(a: &Algebra, i: &Ideal) -> Result<bool> {
    if !i.is_proper() {
        return Ok(false);
    }
    let FieldSpec::Prime(p) = a.field() else {
        return Err(Error::FiniteFieldRequired(a.field().to_string()));
    };
    let (q, _) = quotient_algebra(a, i)?;
    let d = q.dim();
    let count = (p as u128).pow(d as u32);
    if count > ELEMENT_ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            what: "definitional prime oracle",
            needed: count,
            cap: ELEMENT_ENUMERATION_CAP,
        });
    }
    let mut witness_found = false;
    enumerate_vectors(q.field(), d, &mut |v| {
        if witness_found || v.iter().all(Scalar::is_zero) {
            return;
        }
        // b-side: kernel of the stacked maps b -> (v * e_k) * b
        let mut stacked: Option<crate::exactlin::Matrix> = None;
        for k in 0..d {
            let ve = q.mul_coords(v, &q.basis_coords(k));
            let block = q.left_mul_operator(&ve);
            stacked = Some(match stacked {
                None => block,
                Some(s) => s.stack_vertical(&block),
            });
        }
        if !stacked.expect("d >= 1").kernel().is_zero() {
            witness_found = true;
        }
    });
    Ok(!witness_found)
}

/// Visits every coordinate vector of F_p^d.
pub(crate) fn enumerate_vectors(field: FieldSpec, d: usize, visit: &mut impl FnMut(&[Scalar])) {
    let FieldSpec::Prime(p) = field else {
        panic!("enumerate_vectors needs a finite field")
    };
    let mut digits = vec![0u64; d];
    loop {
        let v: Vec<Scalar> = digits
            .iter()
            .map(|&x| Scalar::Residue { value: x, modulus: p })
            .collect();
        visit(&v);
        let mut k = 0;
        loop {
            if k == d {
                return;
            }
            digits[k] += 1;
            if digits[k] < p {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

/// V(X) for a subspace X: the closed set of primes containing X.
pub fn v_of_subspace(s: &SpecSet, x: &Subspace) -> ClosedSet {
    let mut mask = 0u32;
    for (k, p) in s.primes().iter().enumerate() {
        if p.ideal.carrier().contains_subspace(x) {
            mask |= 1 << k;
        }
    }
    ClosedSet {
        spec: s.clone(),
        mask,
        ideal: i_of_mask(s, mask),
    }
}

/// V(I) for an ideal I.
pub fn v_of(s: &SpecSet, i: &Ideal) -> ClosedSet {
    v_of_subspace(s, i.carrier())
}

/// I(U): intersection of the primes in the mask; the whole algebra for
/// the empty set.
pub fn i_of_mask(s: &SpecSet, mask: u32) -> Ideal {
    let a = s.algebra();
    let mut acc: Option<Ideal> = None;
    for (k, p) in s.primes().iter().enumerate() {
        if mask >> k & 1 == 1 {
            acc = Some(match acc {
                None => p.ideal.clone(),
                Some(cur) => ideal_intersect(&cur, &p.ideal).expect("same parent"),
            });
        }
    }
    acc.unwrap_or_else(|| ideals::whole_ideal(a))
}

pub fn i_of(u: &ClosedSet) -> Ideal {
    u.ideal.clone()
}

/// Closure of an arbitrary subset: V(I(U)).
pub fn closure(s: &SpecSet, mask: u32) -> ClosedSet {
    let ideal = i_of_mask(s, mask);
    v_of(s, &ideal)
}

/// Primes containing i, filtered to the inclusion-minimal ones. The filter
/// is generic even though finite-dimensional primes are incomparable.
pub fn minimal_primes_over(s: &SpecSet, i: &Ideal) -> Vec<usize> {
    let over: Vec<usize> = s
        .primes()
        .iter()
        .enumerate()
        .filter(|(_, p)| p.ideal.carrier().contains_subspace(i.carrier()))
        .map(|(k, _)| k)
        .collect();
    over.iter()
        .copied()
        .filter(|&k| {
            over.iter()
                .all(|&j| j == k || !s.prime(k).ideal.contains(&s.prime(j).ideal))
        })
        .collect()
}

/// Goldie rank of a/p with its certificate: (rank, s) where s is the
/// minimal dimension of a nonzero principal left ideal and rank = dim/s.
pub fn goldie_rank(a: &Algebra, p: &PrimeIdeal) -> Result<(usize, usize)> {
    let (q, _) = quotient_algebra(a, &p.ideal)?;
    let d = q.dim();
    let mut best: Option<usize> = None;
    let mut consider = |v: &[Scalar]| {
        if v.iter().all(Scalar::is_zero) {
            return;
        }
        let rank = q.right_mul_operator(v).rank();
        if rank > 0 {
            best = Some(best.map_or(rank, |b: usize| b.min(rank)));
        }
    };
    let exhaustive = match q.field() {
        FieldSpec::Prime(p) => (p as u128).pow(d as u32) <= ELEMENT_ENUMERATION_CAP,
        FieldSpec::Rationals => false,
    };
    if exhaustive {
        enumerate_vectors(q.field(), d, &mut consider);
    } else {
        for i in 0..d {
            consider(&q.basis_coords(i));
        }
        for i in 0..d {
            for j in 0..d {
                let prod = q.mul_coords(&q.basis_coords(i), &q.basis_coords(j));
                consider(&prod);
            }
        }
        let mut rng = SplitMix64::new(0x60171e_0000_0001 ^ (d as u64));
        for _ in 0..64 {
            let v: Vec<Scalar> = (0..d).map(|_| q.field().from_i64(rng.next_in_range(-3, 3))).collect();
            consider(&v);
        }
    }
    let s = best.ok_or_else(|| Error::Internal("no nonzero principal left ideal found".into()))?;
    if d % s != 0 {
        return Err(Error::RankUncertified(format!(
            "minimal principal left ideal dimension {s} does not divide dim {d}"
        )));
    }
    let rank = d / s;
    if s % rank != 0 {
        return Err(Error::RankUncertified(format!(
            "certificate fails: s = {s} is not a multiple of rank = {rank}"
        )));
    }
    Ok((rank, s))
}

/// A rank-bounded stratum of the spectrum with its relative topology.
#[derive(Clone, Debug)]
pub struct Stratum {
    /// Indices into the parent SpecSet, ascending.
    pub indices: Vec<usize>,
    /// Relative topology on the stratum points (reindexed 0..len).
    pub space: FiniteSpace,
}

/// Primes of rank at most n, with the relative Zariski topology.
pub fn spec_n(s: &SpecSet, n: usize) -> Result<Stratum> {
    let mut indices = Vec::new();
    for (k, p) in s.primes().iter().enumerate() {
        let (rank, _) = goldie_rank(s.algebra(), p)?;
        if rank <= n {
            indices.push(k);
        }
    }
    let ambient = all_closed_sets(s)?;
    let mut closed: Vec<u32> = ambient
        .closed_sets()
        .iter()
        .map(|&c| restrict_mask(c, &indices))
        .collect();
    closed.sort_unstable();
    closed.dedup();
    Ok(Stratum {
        space: FiniteSpace::new(indices.len(), closed)?,
        indices,
    })
}

pub(crate) fn restrict_mask(mask: u32, indices: &[usize]) -> u32 {
    let mut out = 0u32;
    for (new, &old) in indices.iter().enumerate() {
        if mask >> old & 1 == 1 {
            out |= 1 << new;
        }
    }
    out
}

/// Every subset U with U = V(I(U)), as a finite topological space.
pub fn all_closed_sets(s: &SpecSet) -> Result<FiniteSpace> {
    let n = s.len();
    if n > MAX_SPEC_POINTS {
        return Err(Error::EnumerationCap {
            what: "closed-set enumeration",
            needed: n as u128,
            cap: MAX_SPEC_POINTS as u128,
        });
    }
    let mut closed = Vec::new();
    for mask in 0..=full_mask(n) {
        if closure(s, mask).mask == mask {
            closed.push(mask);
        }
    }
    FiniteSpace::new(n, closed)
}

/// Closed sets with their defining ideals, aligned with the FiniteSpace.
pub fn closed_sets_detailed(s: &SpecSet) -> Result<(FiniteSpace, Vec<ClosedSet>)> {
    let space = all_closed_sets(s)?;
    let sets = space
        .closed_sets()
        .iter()
        .map(|&mask| ClosedSet {
            spec: s.clone(),
            mask,
            ideal: i_of_mask(s, mask),
        })
        .collect();
    Ok((space, sets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        direct_product, field_algebra, group_algebra, matrix_algebra, subalgebra_from_generators,
        upper_triangular_algebra,
    };

    #[test]
    fn spec_of_simple_algebra_is_zero() {
        for field in [FieldSpec::Rationals, FieldSpec::Prime(5)] {
            let a = matrix_algebra(field, 2);
            let s = spec(&a).unwrap();
            assert_eq!(s.len(), 1);
            assert!(s.prime(0).ideal().is_zero());
            assert_eq!(s.prime(0).quotient_dim(), 4);
        }
    }

    #[test]
    fn spec_of_product_of_fields() {
        let k = field_algebra(FieldSpec::Rationals);
        let kk = direct_product(&k, &k).unwrap();
        let s = spec(&kk).unwrap();
        assert_eq!(s.len(), 2);
        for p in s.primes() {
            assert_eq!(p.ideal().dim(), 1);
            assert_eq!(p.quotient_dim(), 1);
        }
    }

    #[test]
    fn spec_of_dual_numbers_subalgebra() {
        // R = <1, e12> inside M2: local with radical span{e12}
        let m2 = matrix_algebra(FieldSpec::Rationals, 2);
        let (r, _) = subalgebra_from_generators(&m2, &[m2.basis_element(1)]).unwrap();
        let s = spec(&r).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.prime(0).ideal().dim(), 1);
        assert_eq!(s.prime(0).quotient_dim(), 1);
        let rad = jacobson_radical(&r);
        assert!(s.prime(0).ideal().set_eq(&rad));
    }

    #[test]
    fn spec_of_t2_has_two_points() {
        let t2 = upper_triangular_algebra(FieldSpec::Rationals, 2);
        let s = spec(&t2).unwrap();
        assert_eq!(s.len(), 2);
        // both primes contain the radical span{e12}
        let rad = jacobson_radical(&t2);
        for p in s.primes() {
            assert!(p.ideal().contains(&rad));
            assert_eq!(p.ideal().dim(), 2);
        }
    }

    #[test]
    fn is_prime_examples() {
        let q = FieldSpec::Rationals;
        let m2 = matrix_algebra(q, 2);
        assert!(is_prime(&m2, &ideals::zero_ideal(&m2)).unwrap());
        let t2 = upper_triangular_algebra(q, 2);
        assert!(!is_prime(&t2, &ideals::zero_ideal(&t2)).unwrap());
        let k = field_algebra(q);
        let kk = direct_product(&k, &k).unwrap();
        assert!(!is_prime(&kk, &ideals::zero_ideal(&kk)).unwrap());
    }

    #[test]
    fn definitional_oracle_mirrors_is_prime() {
        let f3 = FieldSpec::Prime(3);
        let m2 = matrix_algebra(f3, 2);
        assert!(definitional_prime_oracle(&m2, &ideals::zero_ideal(&m2)).unwrap());
        let t2 = upper_triangular_algebra(f3, 2);
        assert!(!definitional_prime_oracle(&t2, &ideals::zero_ideal(&t2)).unwrap());
        let k = field_algebra(f3);
        let kk = direct_product(&k, &k).unwrap();
        assert!(!definitional_prime_oracle(&kk, &ideals::zero_ideal(&kk)).unwrap());
    }

    #[test]
    fn v_and_closure_examples() {
        let t2 = upper_triangular_algebra(FieldSpec::Rationals, 2);
        let s = spec(&t2).unwrap();
        let zero = ideals::zero_ideal(&t2);
        assert_eq!(v_of(&s, &zero).mask(), full_mask(2));
        assert_eq!(v_of(&s, &ideals::whole_ideal(&t2)).mask(), 0);
        // discreteness at this scale: all four subsets closed
        let space = all_closed_sets(&s).unwrap();
        assert_eq!(space.closed_sets().len(), 4);
        for mask in 0..4u32 {
            assert_eq!(closure(&s, mask).mask(), mask);
        }
    }

    #[test]
    fn minimal_primes_examples() {
        let k = field_algebra(FieldSpec::Rationals);
        let kk = direct_product(&k, &k).unwrap();
        let s = spec(&kk).unwrap();
        let zero = ideals::zero_ideal(&kk);
        assert_eq!(minimal_primes_over(&s, &zero), vec![0, 1]);
        let m2 = matrix_algebra(FieldSpec::Rationals, 2);
        let s = spec(&m2).unwrap();
        assert_eq!(minimal_primes_over(&s, &ideals::zero_ideal(&m2)), vec![0]);
    }

    #[test]
    fn goldie_rank_examples() {
        let m2 = matrix_algebra(FieldSpec::Rationals, 2);
        let s = spec(&m2).unwrap();
        let (rank, cert) = goldie_rank(&m2, s.prime(0)).unwrap();
        assert_eq!((rank, cert), (2, 2));

        // exhaustive path over F_2 agrees
        let m2f2 = matrix_algebra(FieldSpec::Prime(2), 2);
        let s2 = spec(&m2f2).unwrap();
        assert_eq!(goldie_rank(&m2f2, s2.prime(0)).unwrap(), (2, 2));

        // a field quotient has rank 1
        let k = field_algebra(FieldSpec::Rationals);
        let kk = direct_product(&k, &k).unwrap();
        let sk = spec(&kk).unwrap();
        for p in sk.primes() {
            assert_eq!(goldie_rank(&kk, p).unwrap().0, 1);
        }
    }

    #[test]
    fn spec_n_stratification() {
        let k = field_algebra(FieldSpec::Rationals);
        let kk = direct_product(&k, &k).unwrap();
        let s = spec(&kk).unwrap();
        assert_eq!(spec_n(&s, 1).unwrap().indices.len(), 2);

        let m2 = matrix_algebra(FieldSpec::Rationals, 2);
        let s = spec(&m2).unwrap();
        assert!(spec_n(&s, 1).unwrap().indices.is_empty());
        assert_eq!(spec_n(&s, 2).unwrap().indices.len(), 1);
    }

    #[test]
    fn f2_c3_spec_has_two_points_with_dims_1_2() {
        let table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let a = group_algebra(FieldSpec::Prime(2), &table).unwrap();
        let s = spec(&a).unwrap();
        let mut dims: Vec<usize> = s.primes().iter().map(|p| p.quotient_dim()).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 2]);
        // the F_4 component is a field: rank 1 with certificate 2
        for p in s.primes() {
            let (rank, _) = goldie_rank(&a, p).unwrap();
            assert_eq!(rank, 1);
        }
    }
}
