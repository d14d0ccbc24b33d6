//! The full analysis of a homomorphism: every equivalent adjointness
//! condition computed independently, with mandatory witnesses for the
//! failing ones, and a cross-consistency verdict.

use serde::Serialize;

use crate::algebra::AlgebraHom;
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::ideals::{
    self, ideal_power, preimage_under_hom, prime_radical_of_ideal, subspace_mul, Ideal,
};
use crate::spectrum::{
    all_closed_sets, full_mask, i_of_mask, restrict_mask, spec, spec_n, v_of, FiniteSpace, SpecSet,
};

use super::functors::{is_left_adjoint, lambda_functor, rho_functor};
use super::{extension_annihilator, r_of_with, Correspondence};

/// Shared, precomputed data for all per-homomorphism checks.
pub struct HomContext {
    pub f: AlgebraHom,
    pub spec_r: SpecSet,
    pub spec_s: SpecSet,
    pub space_r: FiniteSpace,
    pub space_s: FiniteSpace,
    pub r: Correspondence,
}

impl HomContext {
    pub fn new(f: &AlgebraHom) -> Result<HomContext> {
        let spec_r = spec(f.source())?;
        let spec_s = spec(f.target())?;
        let space_r = all_closed_sets(&spec_r)?;
        let space_s = all_closed_sets(&spec_s)?;
        let r = r_of_with(f, &spec_r, &spec_s)?;
        for (idx, &img) in r.finite.images.iter().enumerate() {
            if img == 0 {
                return Err(Error::Internal(format!(
                    "contraction correspondence has an empty image at prime {idx}"
                )));
            }
        }
        Ok(HomContext { f: f.clone(), spec_r, spec_s, space_r, space_s, r })
    }

    pub fn ideal_of_closed_r(&self, mask: u32) -> Ideal {
        i_of_mask(&self.spec_r, mask)
    }

    pub fn ideal_of_closed_s(&self, mask: u32) -> Ideal {
        i_of_mask(&self.spec_s, mask)
    }

    /// All semiprime ideals of R: I(U) over every subset U of Spec R.
    pub fn radical_ideals_r(&self) -> impl Iterator<Item = (u32, Ideal)> + '_ {
        (0..=full_mask(self.spec_r.len())).map(|mask| (mask, i_of_mask(&self.spec_r, mask)))
    }
}

fn mask_members(mask: u32, points: usize) -> Vec<usize> {
    (0..points).filter(|&k| mask >> k & 1 == 1).collect()
}

fn ideal_basis_strings(i: &Ideal) -> Vec<Vec<String>> {
    i.carrier()
        .basis_rows()
        .iter()
        .map(|row| row.iter().map(Scalar::to_string).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SetWitness {
    pub index: usize,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealWitness {
    /// The subset of Spec R whose radical ideal witnesses the failure.
    pub subset: Vec<usize>,
    pub ideal_basis: Vec<Vec<String>>,
    /// Left-hand side of the failed identity (prime indices in Spec S).
    pub lhs: Vec<usize>,
    /// Right-hand side of the failed identity.
    pub rhs: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdjointWitness {
    pub u_mask: u32,
    pub v_mask: u32,
    pub u_members: Vec<usize>,
    pub v_members: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimePairWitness {
    /// Index into Spec S.
    pub p_index: usize,
    /// Index into Spec R.
    pub q_index: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub single_valued: Option<SetWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub continuity: Option<SetWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strong_preimage: Option<IdealWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjoint: Option<AdjointWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime_pair: Option<PrimePairWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nearly_centralizing_prime: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nearly_centralizing_ideal: Option<IdealWitness>,
}

/// The independently computed conditions. `adjoint` is the tabulated
/// adjunction check; the others are its equivalent characterizations.
#[derive(Clone, Debug, Serialize)]
pub struct Flags {
    pub single_valued: bool,
    pub continuous: bool,
    /// The strong-preimage identity: the strong preimage of V(I) equals
    /// V(I^S) for every semiprime I.
    pub strong_preimage_identity: bool,
    pub adjoint: bool,
    /// The prime-pair criterion: Q^S inside P forces Q inside the radical
    /// of the contraction of P.
    pub prime_pair_criterion: bool,
    pub nearly_centralizing_primes: bool,
    pub nearly_centralizing_ideals: bool,
    pub centralizing: bool,
}

/// The full verdict report for one homomorphism.
#[derive(Clone, Debug, Serialize)]
pub struct HomAnalysis {
    pub flags: Flags,
    /// Nearly-centralizing exponent per prime of Spec R, when one exists.
    pub per_prime_t: Vec<Option<usize>>,
    /// The correspondence table: image prime indices per prime of Spec S.
    pub correspondence: Vec<Vec<usize>>,
    pub witnesses: Witnesses,
    /// All equivalent conditions agreed. A false value is an internal
    /// inconsistency, never a mathematical result.
    pub consistent: bool,
}

impl HomAnalysis {
    pub fn expect_consistent(&self) -> Result<()> {
        if self.consistent {
            Ok(())
        } else {
            Err(Error::Internal(
                "equivalent adjointness conditions disagree".into(),
            ))
        }
    }
}

/// The strong-preimage identity over every semiprime ideal of R, with a
/// witness ideal on failure.
pub fn strong_preimage_identity_check(ctx: &HomContext) -> Result<(bool, Option<IdealWitness>)> {
    for (mask, ideal) in ctx.radical_ideals_r() {
        let lhs = ctx.r.finite.strong_preimage(v_of(&ctx.spec_r, &ideal).mask());
        let ext = extension_annihilator(&ctx.f, &ideal)?;
        let rhs = v_of(&ctx.spec_s, &ext).mask();
        if lhs != rhs {
            return Ok((
                false,
                Some(IdealWitness {
                    subset: mask_members(mask, ctx.spec_r.len()),
                    ideal_basis: ideal_basis_strings(&ideal),
                    lhs: mask_members(lhs, ctx.spec_s.len()),
                    rhs: mask_members(rhs, ctx.spec_s.len()),
                }),
            ));
        }
    }
    Ok((true, None))
}

/// For all primes P of S and Q of R: Q^S inside P implies Q inside the
/// prime radical of f^{-1}(P).
pub fn prime_pair_criterion(ctx: &HomContext) -> Result<(bool, Option<PrimePairWitness>)> {
    for (pi, p) in ctx.spec_s.primes().iter().enumerate() {
        let contraction = preimage_under_hom(&ctx.f, p.ideal())?;
        let radical = prime_radical_of_ideal(ctx.f.source(), &contraction)?;
        for (qi, q) in ctx.spec_r.primes().iter().enumerate() {
            let ext = extension_annihilator(&ctx.f, q.ideal())?;
            if p.ideal().contains(&ext) && !radical.contains(q.ideal()) {
                return Ok((false, Some(PrimePairWitness { p_index: pi, q_index: qi })));
            }
        }
    }
    Ok((true, None))
}

/// Every P in Spec S admits a Q minimal over f^{-1}(P) with Q^S inside P.
pub fn contraction_witness_check(ctx: &HomContext) -> Result<bool> {
    for p in ctx.spec_s.primes() {
        let contraction = preimage_under_hom(&ctx.f, p.ideal())?;
        let mins = crate::spectrum::minimal_primes_over(&ctx.spec_r, &contraction);
        let mut found = false;
        for qi in mins {
            let ext = extension_annihilator(&ctx.f, ctx.spec_r.prime(qi).ideal())?;
            if p.ideal().contains(&ext) {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Least positive t with f(q)^t S inside S f(q), or None once the chain
/// of power subspaces stabilizes without containment.
pub fn nearly_centralizing_check(f: &AlgebraHom, q: &Ideal) -> Result<Option<usize>> {
    if !q.parent().same_as(f.source()) {
        return Err(Error::ParentMismatch);
    }
    let s = f.target();
    let full = s.full_subspace();
    let image = f.image_subspace(q.carrier());
    let left_ideal = subspace_mul(s, &full, &image);
    let mut power = image.clone();
    for t in 1..=(s.dim() + 1) {
        let right_span = subspace_mul(s, &power, &full);
        if left_ideal.contains_subspace(&right_span) {
            return Ok(Some(t));
        }
        let next = subspace_mul(s, &power, &image);
        if next == power {
            return Ok(None);
        }
        power = next;
    }
    Ok(None)
}

/// Centralizing: S is spanned by f(R) * C where C is the centralizer of
/// the image of R in S.
pub fn is_centralizing(f: &AlgebraHom) -> bool {
    let s = f.target();
    let r = f.source();
    let mut stacked: Option<crate::exactlin::Matrix> = None;
    for i in 0..r.dim() {
        let fi = f.apply_coords(&r.basis_coords(i));
        let block = s.left_mul_operator(&fi).sub(&s.right_mul_operator(&fi));
        stacked = Some(match stacked {
            None => block,
            Some(acc) => acc.stack_vertical(&block),
        });
    }
    let centralizer = stacked.expect("dim >= 1").kernel();
    let image = f.image_subspace(&r.full_subspace());
    subspace_mul(s, &image, &centralizer).is_full()
}

/// Computes every equivalent condition independently and reports the
/// cross-consistency verdict. Disagreement is reported, never resolved.
pub fn analyze_hom(f: &AlgebraHom) -> Result<HomAnalysis> {
    let ctx = HomContext::new(f)?;
    analyze_with(&ctx)
}

pub fn analyze_with(ctx: &HomContext) -> Result<HomAnalysis> {
    let mut witnesses = Witnesses::default();

    let single_valued = ctx.r.is_single_valued();
    if !single_valued {
        let idx = ctx
            .r
            .finite
            .images
            .iter()
            .position(|m| m.count_ones() != 1)
            .expect("some image is not a singleton");
        witnesses.single_valued = Some(SetWitness {
            index: idx,
            members: mask_members(ctx.r.finite.images[idx], ctx.spec_r.len()),
        });
    }

    let continuity_witness = ctx.r.finite.continuity_witness(&ctx.space_s, &ctx.space_r);
    let continuous = continuity_witness.is_none();
    if let Some(v) = continuity_witness {
        witnesses.continuity = Some(SetWitness {
            index: 0,
            members: mask_members(v, ctx.spec_r.len()),
        });
    }

    let (strong_preimage_identity, spi_witness) = strong_preimage_identity_check(ctx)?;
    witnesses.strong_preimage = spi_witness;

    let lambda = lambda_functor(ctx)?;
    let rho = rho_functor(ctx)?;
    let adjoint = match is_left_adjoint(&lambda, &rho) {
        Ok(()) => true,
        Err((u, v)) => {
            witnesses.adjoint = Some(AdjointWitness {
                u_mask: u,
                v_mask: v,
                u_members: mask_members(u, ctx.spec_s.len()),
                v_members: mask_members(v, ctx.spec_r.len()),
            });
            false
        }
    };

    let (prime_pair, pp_witness) = prime_pair_criterion(ctx)?;
    witnesses.prime_pair = pp_witness;

    let mut per_prime_t = Vec::with_capacity(ctx.spec_r.len());
    for (qi, q) in ctx.spec_r.primes().iter().enumerate() {
        let t = nearly_centralizing_check(&ctx.f, q.ideal())?;
        if t.is_none() && witnesses.nearly_centralizing_prime.is_none() {
            witnesses.nearly_centralizing_prime = Some(qi);
        }
        per_prime_t.push(t);
    }
    let nearly_centralizing_primes = per_prime_t.iter().all(Option::is_some);

    let mut nearly_centralizing_ideals = true;
    for (mask, ideal) in ctx.radical_ideals_r() {
        if nearly_centralizing_check(&ctx.f, &ideal)?.is_none() {
            nearly_centralizing_ideals = false;
            witnesses.nearly_centralizing_ideal = Some(IdealWitness {
                subset: mask_members(mask, ctx.spec_r.len()),
                ideal_basis: ideal_basis_strings(&ideal),
                lhs: Vec::new(),
                rhs: Vec::new(),
            });
            break;
        }
    }

    let centralizing = is_centralizing(&ctx.f);

    let flags = Flags {
        single_valued,
        continuous,
        strong_preimage_identity,
        adjoint,
        prime_pair_criterion: prime_pair,
        nearly_centralizing_primes,
        nearly_centralizing_ideals,
        centralizing,
    };

    let composite = single_valued && continuous && strong_preimage_identity;
    let consistent = adjoint == composite
        && adjoint == prime_pair
        && adjoint == nearly_centralizing_primes
        && adjoint == nearly_centralizing_ideals
        // centralizing is sufficient, not equivalent
        && (!centralizing || adjoint);

    let correspondence = (0..ctx.spec_s.len()).map(|i| ctx.r.image_indices(i)).collect();

    Ok(HomAnalysis {
        flags,
        per_prime_t,
        correspondence,
        witnesses,
        consistent,
    })
}

/// Rank-stratified continuity: r maps the rank-bounded stratum of Spec S
/// into that of Spec R, the restricted correspondence is continuous in the
/// relative topologies, and the stratified strong preimage of V(I) equals
/// V(I^n) on the stratum for every semiprime I.
pub fn stratified_continuity_check(ctx: &HomContext, n: usize) -> Result<bool> {
    let stratum_r = spec_n(&ctx.spec_r, n)?;
    let stratum_s = spec_n(&ctx.spec_s, n)?;
    let mut stratum_r_mask = 0u32;
    for &k in &stratum_r.indices {
        stratum_r_mask |= 1 << k;
    }
    // images of stratum primes stay in the stratum
    for &pi in &stratum_s.indices {
        if ctx.r.finite.images[pi] & !stratum_r_mask != 0 {
            return Ok(false);
        }
    }
    // restricted correspondence, reindexed
    let images: Vec<u32> = stratum_s
        .indices
        .iter()
        .map(|&pi| restrict_mask(ctx.r.finite.images[pi], &stratum_r.indices))
        .collect();
    let restricted = super::FiniteCorrespondence {
        source_points: stratum_s.indices.len(),
        target_points: stratum_r.indices.len(),
        images,
    };
    if !restricted.is_continuous(&stratum_s.space, &stratum_r.space) {
        return Ok(false);
    }
    // the identity from the rank-bound argument: on the stratum, the strong
    // preimage of V(I) is cut out by I^n
    for (_, ideal) in ctx.radical_ideals_r() {
        let v_mask = v_of(&ctx.spec_r, &ideal).mask();
        let lhs = restrict_mask(
            ctx.r.finite.strong_preimage(v_mask),
            &stratum_s.indices,
        );
        let power = ideal_power(&ideal, n)?;
        let image = f_image_ideal_mask(ctx, &power)?;
        let rhs = restrict_mask(image, &stratum_s.indices);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Mask of V_S(f(I)), the primes of S containing the image of I.
fn f_image_ideal_mask(ctx: &HomContext, i: &Ideal) -> Result<u32> {
    let image = ctx.f.image_subspace(i.carrier());
    Ok(crate::spectrum::v_of_subspace(&ctx.spec_s, &image).mask())
}

/// The semiprime-contraction special case: reports whether every
/// contraction f^{-1}(P) is semiprime, and when so, asserts the chain of
/// equalities r^{[-1]}V_R(I) = V_S(<f(I)>) over semiprime I.
pub fn semiprime_contraction_case(ctx: &HomContext) -> Result<bool> {
    for p in ctx.spec_s.primes() {
        let contraction = preimage_under_hom(&ctx.f, p.ideal())?;
        let radical = prime_radical_of_ideal(ctx.f.source(), &contraction)?;
        if !radical.set_eq(&contraction) {
            return Ok(false);
        }
    }
    for (_, ideal) in ctx.radical_ideals_r() {
        let lhs = ctx.r.finite.strong_preimage(v_of(&ctx.spec_r, &ideal).mask());
        let image = ctx.f.image_subspace(ideal.carrier());
        let generated = ideals::ideal_generated_by_subspace(ctx.f.target(), &image);
        let rhs = v_of(&ctx.spec_s, &generated).mask();
        if lhs != rhs {
            return Err(Error::Internal(
                "semiprime contractions but the image-ideal identity failed".into(),
            ));
        }
    }
    Ok(true)
}

/// The union-of-powers identity: for semiprime I, the strong preimage of
/// V_R(I) is the union over t of V_S(<f(I)^t>), the union stabilizing with
/// the power chain.
pub fn power_union_identity_check(ctx: &HomContext) -> Result<bool> {
    let s = ctx.f.target();
    for (_, ideal) in ctx.radical_ideals_r() {
        let lhs = ctx.r.finite.strong_preimage(v_of(&ctx.spec_r, &ideal).mask());
        let mut union = 0u32;
        let mut power = ideal.clone();
        loop {
            let image = ctx.f.image_subspace(power.carrier());
            let generated = ideals::ideal_generated_by_subspace(s, &image);
            union |= v_of(&ctx.spec_s, &generated).mask();
            let next = crate::ideals::ideal_product(&power, &ideal)?;
            if next.set_eq(&power) {
                break;
            }
            power = next;
        }
        if lhs != union {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix_algebra;
    use crate::exactlin::FieldSpec;

    #[test]
    fn identity_hom_all_flags_true() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let id = AlgebraHom::identity(&a);
        let report = analyze_hom(&id).unwrap();
        assert!(report.consistent);
        assert!(report.flags.adjoint);
        assert!(report.flags.single_valued);
        assert!(report.flags.continuous);
        assert!(report.flags.strong_preimage_identity);
        assert!(report.flags.prime_pair_criterion);
        assert!(report.flags.nearly_centralizing_primes);
        assert!(report.flags.nearly_centralizing_ideals);
        assert!(report.flags.centralizing);
        assert_eq!(report.per_prime_t, vec![Some(1)]);
    }

    #[test]
    fn identity_hom_auxiliary_checks() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let id = AlgebraHom::identity(&a);
        let ctx = HomContext::new(&id).unwrap();
        assert!(contraction_witness_check(&ctx).unwrap());
        assert!(semiprime_contraction_case(&ctx).unwrap());
        assert!(power_union_identity_check(&ctx).unwrap());
        for n in 1..=3 {
            assert!(stratified_continuity_check(&ctx, n).unwrap());
        }
    }
}
