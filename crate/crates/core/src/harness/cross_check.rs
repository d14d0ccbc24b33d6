//! The per-instance oracle driver: runs every cross-validating identity and
//! property on one homomorphism and aggregates failures into a report.

use serde::Serialize;

use crate::algebra::{regular_bimodule_extension, regular_bimodule_restriction, AlgebraHom};
use crate::correspondence::{
    alpha_annihilator, analyze_with, contraction_witness_check, lambda_functor, phi_upper,
    power_union_identity_check, r_alpha, r_of_with, semiprime_contraction_case,
    stratified_continuity_check, theta_alpha, Flags, HomContext,
};
use crate::error::Result;
use crate::exactlin::FieldSpec;
use crate::ideals::{
    ideal_power, ideal_product, jacobson_radical, nilpotency_index, preimage_under_hom,
    prime_radical_of_ideal, zero_ideal, Ideal,
};
use crate::spectrum::{full_mask, goldie_rank, v_of};

/// Aggregated outcome of all identity checks on one instance.
#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    pub flags: Flags,
    pub consistent: bool,
    pub failures: Vec<String>,
}

impl CrossCheckReport {
    pub fn ok(&self) -> bool {
        self.consistent && self.failures.is_empty()
    }
}

/// A small supply of test ideals of an algebra: the semiprime ideals plus
/// powers of the radical (non-semiprime spot checks).
fn test_ideals(ctx_spec: &crate::spectrum::SpecSet) -> Result<Vec<Ideal>> {
    let a = ctx_spec.algebra();
    let mut out = Vec::new();
    for mask in 0..=full_mask(ctx_spec.len()) {
        out.push(crate::spectrum::i_of_mask(ctx_spec, mask));
    }
    let rad = jacobson_radical(a);
    if !rad.is_zero() {
        out.push(rad.clone());
        out.push(ideal_power(&rad, 2)?);
    }
    if ctx_spec.len() >= 2 {
        let p0 = ctx_spec.prime(0).ideal().clone();
        let p1 = ctx_spec.prime(1).ideal().clone();
        out.push(ideal_product(&p0, &p1)?);
    }
    Ok(out)
}

/// Runs the full battery of identities on one homomorphism. Failures are
/// report entries, never panics.
pub fn oracle_cross_check(f: &AlgebraHom) -> Result<CrossCheckReport> {
    let ctx = HomContext::new(f)?;
    let analysis = analyze_with(&ctx)?;
    let mut failures: Vec<String> = Vec::new();
    let mut record = |name: &str, ok: bool| {
        if !ok {
            failures.push(name.to_string());
        }
    };

    // cross-consistency of the equivalent adjointness conditions
    record("adjointness-conditions-agree", analysis.consistent);

    // the restriction functor agrees with the closure-of-image functor
    let lambda = lambda_functor(&ctx)?;
    let upper = phi_upper(&ctx.r.finite, &ctx.space_s, &ctx.space_r);
    record("lambda-equals-image-closure-functor", lambda == upper);

    // the correspondence induced by the restriction bimodule is r itself
    let restriction = regular_bimodule_restriction(f);
    let via_bimodule = r_alpha(&restriction)?;
    let direct = r_of_with(f, &ctx.spec_r, &ctx.spec_s)?;
    record(
        "bimodule-correspondence-matches-contraction",
        via_bimodule.finite == direct.finite,
    );

    // the induced-functor identity: theta of the bimodule equals the
    // closure-of-image functor of its correspondence
    let theta = theta_alpha(&restriction)?;
    let upper_alpha = phi_upper(&via_bimodule.finite, &ctx.space_s, &ctx.space_r);
    record("theta-equals-image-closure-functor", theta == upper_alpha);

    // annihilator identities on both regular bimodules:
    // products: J1^a J2^a inside (J1 J2)^a; radicals: sqrt(J^a) contains
    // (sqrt J)^a contains J^a
    let extension = regular_bimodule_extension(f);
    for (m, spec_b) in [(&restriction, &ctx.spec_s), (&extension, &ctx.spec_r)] {
        let ideals_b = test_ideals(spec_b)?;
        for j1 in &ideals_b {
            for j2 in &ideals_b {
                let a1 = alpha_annihilator(m, j1)?;
                let a2 = alpha_annihilator(m, j2)?;
                let prod_ann = alpha_annihilator(m, &ideal_product(j1, j2)?)?;
                if !prod_ann.contains(&ideal_product(&a1, &a2)?) {
                    record("induced-annihilator-product-inclusion", false);
                }
            }
        }
        for j in &ideals_b {
            let ja = alpha_annihilator(m, j)?;
            let sqrt_j = prime_radical_of_ideal(spec_b.algebra(), j)?;
            let sqrt_ja = prime_radical_of_ideal(m.left_algebra(), &ja)?;
            let sqrt_then_ann = alpha_annihilator(m, &sqrt_j)?;
            if !(sqrt_ja.contains(&sqrt_then_ann) && sqrt_then_ann.contains(&ja)) {
                record("induced-annihilator-radical-squeeze", false);
            }
        }
    }

    // contraction and extension only see the radical: V_R(f^-1 J) is
    // invariant under J -> sqrt(J), V_S(I^S) under I -> sqrt(I)
    for j in test_ideals(&ctx.spec_s)? {
        let sqrt_j = prime_radical_of_ideal(f.target(), &j)?;
        let lhs = v_of(&ctx.spec_r, &preimage_under_hom(f, &j)?).mask();
        let rhs = v_of(&ctx.spec_r, &preimage_under_hom(f, &sqrt_j)?).mask();
        if lhs != rhs {
            record("contraction-radical-invariance", false);
        }
    }
    for i in test_ideals(&ctx.spec_r)? {
        let sqrt_i = prime_radical_of_ideal(f.source(), &i)?;
        let lhs = v_of(
            &ctx.spec_s,
            &crate::correspondence::extension_annihilator(f, &i)?,
        )
        .mask();
        let rhs = v_of(
            &ctx.spec_s,
            &crate::correspondence::extension_annihilator(f, &sqrt_i)?,
        )
        .mask();
        if lhs != rhs {
            record("extension-radical-invariance", false);
        }
    }

    // one-directional adjunction inequality: V_R(f^-1 J) inside V_R(I)
    // forces V_S(J) inside V_S(I^S)
    for i in test_ideals(&ctx.spec_r)? {
        let v_i = v_of(&ctx.spec_r, &i).mask();
        let ext_mask = v_of(
            &ctx.spec_s,
            &crate::correspondence::extension_annihilator(f, &i)?,
        )
        .mask();
        for j in test_ideals(&ctx.spec_s)? {
            let contracted = v_of(&ctx.spec_r, &preimage_under_hom(f, &j)?).mask();
            let v_j = v_of(&ctx.spec_s, &j).mask();
            if contracted & !v_i == 0 && v_j & !ext_mask != 0 {
                record("restriction-extension-inequality", false);
            }
        }
    }

    // complement duality of the strong preimage on the actual table
    let full_source = full_mask(ctx.spec_s.len());
    for v in 0..=full_mask(ctx.spec_r.len()) {
        let lhs = full_source & !ctx.r.finite.preimage(v);
        let rhs = ctx.r.finite.strong_preimage(full_mask(ctx.spec_r.len()) & !v);
        if lhs != rhs {
            record("strong-preimage-complement-duality", false);
        }
    }

    // every prime of S admits a minimal prime over its contraction whose
    // extension annihilator it contains
    record("contraction-witness-exists", contraction_witness_check(&ctx)?);

    // union-of-powers identity
    record("power-union-identity", power_union_identity_check(&ctx)?);

    // semiprime-contraction special case (internally asserts its chain of
    // equalities when applicable)
    let _ = semiprime_contraction_case(&ctx)?;

    // stratified continuity for small rank bounds
    for n in 1..=3 {
        record("stratified-continuity", stratified_continuity_check(&ctx, n)?);
    }

    // the strong-preimage identity quantification may be reduced to
    // semiprime ideals: spot-check non-semiprime ideals directly
    for i in test_ideals(&ctx.spec_r)? {
        let sqrt_i = prime_radical_of_ideal(f.source(), &i)?;
        let at_i = ctx.r.finite.strong_preimage(v_of(&ctx.spec_r, &i).mask());
        let at_sqrt = ctx
            .r
            .finite
            .strong_preimage(v_of(&ctx.spec_r, &sqrt_i).mask());
        if at_i != at_sqrt {
            record("strong-preimage-radical-reduction", false);
        }
    }

    // subring-in-simple-ring radical nilpotency: when f is injective and S
    // is simple of rank t, rad(R)^t = 0
    let injective = f.matrix().kernel().is_zero();
    if injective && ctx.spec_s.len() == 1 && ctx.spec_s.prime(0).ideal().is_zero() {
        let (rank, _) = goldie_rank(f.target(), ctx.spec_s.prime(0))?;
        let rad = jacobson_radical(f.source());
        let ok = if rad.is_zero() {
            true
        } else {
            ideal_power(&rad, rank)?.is_zero()
        };
        record("subring-radical-nilpotency", ok);
        // and the nilpotency index is within the rank bound
        if !rad.is_zero() {
            match nilpotency_index(&rad, &zero_ideal(f.source()))? {
                Some(t) => record("subring-radical-index-bound", t <= rank),
                None => record("subring-radical-index-bound", false),
            }
        }
    }

    // oracle agreement on small finite instances: is_prime versus the
    // definitional oracle over every enumerated two-sided ideal
    if let FieldSpec::Prime(p) = f.source().field() {
        let cheap = (p as u128).pow(f.source().dim() as u32) <= 1 << 12;
        if cheap {
            for i in crate::harness::exhaustive_ideal_enumeration(f.source())? {
                if i.is_whole() {
                    continue;
                }
                let fast = crate::spectrum::is_prime(f.source(), &i)?;
                let slow = crate::spectrum::definitional_prime_oracle(f.source(), &i)?;
                if fast != slow {
                    record("prime-oracle-agreement", false);
                }
            }
        }
    }

    Ok(CrossCheckReport {
        flags: analysis.flags.clone(),
        consistent: analysis.consistent,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix_algebra;
    use crate::harness::all_fixtures;

    #[test]
    fn fixtures_pass_the_full_battery() {
        for f in all_fixtures() {
            let report = oracle_cross_check(&f.hom).unwrap();
            assert!(report.ok(), "{}: {:?}", f.name, report.failures);
        }
    }

    #[test]
    fn identity_hom_passes() {
        let a = matrix_algebra(FieldSpec::Prime(5), 2);
        let id = AlgebraHom::identity(&a);
        let report = oracle_cross_check(&id).unwrap();
        assert!(report.ok(), "{:?}", report.failures);
    }
}
