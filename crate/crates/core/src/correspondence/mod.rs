//! The contraction correspondence of a homomorphism, continuity, the
//! restriction/extension functors on closed-set lattices, adjointness, and
//! the full equivalence decision procedure.

mod analysis;
mod functors;

pub use analysis::{
    analyze_hom, analyze_with, contraction_witness_check, is_centralizing,
    nearly_centralizing_check, power_union_identity_check, prime_pair_criterion,
    semiprime_contraction_case, stratified_continuity_check, strong_preimage_identity_check,
    AdjointWitness, Flags, HomAnalysis, HomContext, IdealWitness, PrimePairWitness, SetWitness,
    Witnesses,
};
pub use functors::{
    is_left_adjoint, lambda_functor, phi_lower, phi_upper, rho_functor, tabulated_right_adjoint,
    theta_alpha, FunctorOnClosed,
};

use crate::algebra::Bimodule;
use crate::error::Result;
use crate::exactlin::Subspace;
use crate::ideals::Ideal;
use crate::spectrum::{minimal_primes_over, spec, FiniteSpace, SpecSet};

/// A multi-valued map between finite point sets: images[u] is the bitmask
/// of points assigned to source point u.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCorrespondence {
    pub source_points: usize,
    pub target_points: usize,
    pub images: Vec<u32>,
}

impl FiniteCorrespondence {
    pub fn identity(points: usize) -> Self {
        FiniteCorrespondence {
            source_points: points,
            target_points: points,
            images: (0..points).map(|u| 1 << u).collect(),
        }
    }

    /// cU: union of point images.
    pub fn image_of_set(&self, mask: u32) -> u32 {
        let mut out = 0;
        for u in 0..self.source_points {
            if mask >> u & 1 == 1 {
                out |= self.images[u];
            }
        }
        out
    }

    /// c^{-1}V = {u : cu meets V}.
    pub fn preimage(&self, mask: u32) -> u32 {
        let mut out = 0;
        for u in 0..self.source_points {
            if self.images[u] & mask != 0 {
                out |= 1 << u;
            }
        }
        out
    }

    /// The strong preimage {u : cu inside V}.
    pub fn strong_preimage(&self, mask: u32) -> u32 {
        let mut out = 0;
        for u in 0..self.source_points {
            if self.images[u] & !mask == 0 {
                out |= 1 << u;
            }
        }
        out
    }

    /// Continuity: the strong preimage of every closed target set is closed.
    /// Returns the offending closed set on failure.
    pub fn continuity_witness(
        &self,
        source_space: &FiniteSpace,
        target_space: &FiniteSpace,
    ) -> Option<u32> {
        debug_assert_eq!(source_space.points(), self.source_points);
        debug_assert_eq!(target_space.points(), self.target_points);
        target_space
            .closed_sets()
            .iter()
            .copied()
            .find(|&v| !source_space.is_closed(self.strong_preimage(v)))
    }

    pub fn is_continuous(&self, source_space: &FiniteSpace, target_space: &FiniteSpace) -> bool {
        self.continuity_witness(source_space, target_space).is_none()
    }
}

/// Visits every correspondence between point sets of the given sizes:
/// each source point independently maps to any subset of the target.
pub fn for_each_correspondence(
    source_points: usize,
    target_points: usize,
    visit: &mut impl FnMut(&FiniteCorrespondence),
) {
    let subsets = 1u64 << target_points;
    let total = subsets.pow(source_points as u32);
    let mut images = vec![0u32; source_points];
    for code in 0..total {
        let mut c = code;
        for img in images.iter_mut() {
            *img = (c % subsets) as u32;
            c /= subsets;
        }
        visit(&FiniteCorrespondence {
            source_points,
            target_points,
            images: images.clone(),
        });
    }
}

/// The contraction correspondence between two spectra, with the underlying
/// finite table.
#[derive(Clone)]
pub struct Correspondence {
    /// Spec of the codomain algebra S (the correspondence source).
    pub source: SpecSet,
    /// Spec of the domain algebra R (the correspondence target).
    pub target: SpecSet,
    pub finite: FiniteCorrespondence,
}

impl Correspondence {
    pub fn image_indices(&self, source_index: usize) -> Vec<usize> {
        let mask = self.finite.images[source_index];
        (0..self.target.len()).filter(|&k| mask >> k & 1 == 1).collect()
    }

    pub fn is_single_valued(&self) -> bool {
        self.finite.images.iter().all(|m| m.count_ones() == 1)
    }
}

/// r for a homomorphism f: R -> S maps P in Spec S to the primes of R
/// minimal over the contraction f^{-1}(P).
pub fn r_of_with(
    f: &crate::algebra::AlgebraHom,
    spec_r: &SpecSet,
    spec_s: &SpecSet,
) -> Result<Correspondence> {
    let mut images = Vec::with_capacity(spec_s.len());
    for p in spec_s.primes() {
        let contraction = crate::ideals::preimage_under_hom(f, p.ideal())?;
        let mins = minimal_primes_over(spec_r, &contraction);
        let mut mask = 0u32;
        for k in mins {
            mask |= 1 << k;
        }
        images.push(mask);
    }
    Ok(Correspondence {
        source: spec_s.clone(),
        target: spec_r.clone(),
        finite: FiniteCorrespondence {
            source_points: spec_s.len(),
            target_points: spec_r.len(),
            images,
        },
    })
}

pub fn r_of(f: &crate::algebra::AlgebraHom) -> Result<Correspondence> {
    let spec_r = spec(f.source())?;
    let spec_s = spec(f.target())?;
    r_of_with(f, &spec_r, &spec_s)
}

/// The annihilator ideal J^alpha = ann_A(M/MJ) induced by a bimodule.
pub fn alpha_annihilator(m: &Bimodule, j: &Ideal) -> Result<Ideal> {
    if !j.parent().same_as(m.right_algebra()) {
        return Err(crate::error::Error::ParentMismatch);
    }
    let a = m.left_algebra();
    let field = a.field();
    let mj = m.carrier_times_subspace(j.carrier());
    let constraints = mj.constraints();
    if constraints.rows() == 0 || m.dim() == 0 {
        // MJ = M (or M = 0): everything annihilates the quotient
        return Ok(crate::ideals::whole_ideal(a));
    }
    // a annihilates M/MJ iff C_MJ * L_a * e_k = 0 for all carrier basis e_k;
    // linear in a, one row per (carrier index, constraint row)
    let md = m.dim();
    let rows = constraints.rows();
    let mut sys = crate::exactlin::Matrix::zero(field, md * rows, a.dim());
    for (i, l) in m.left_actions().iter().enumerate() {
        let cl = constraints.mul(l).expect("shape");
        for k in 0..md {
            for r in 0..rows {
                sys.set(k * rows + r, i, cl.get(r, k).clone());
            }
        }
    }
    Ok(Ideal::new_unchecked(a, sys.kernel()))
}

/// The correspondence induced by a bimodule: P in Spec B maps to the primes
/// of A minimal over P^alpha (empty when P^alpha is the whole ring).
pub fn r_alpha(m: &Bimodule) -> Result<Correspondence> {
    let spec_b = spec(m.right_algebra())?;
    let spec_a = spec(m.left_algebra())?;
    let mut images = Vec::with_capacity(spec_b.len());
    for p in spec_b.primes() {
        let ann = alpha_annihilator(m, p.ideal())?;
        let mut mask = 0u32;
        for k in minimal_primes_over(&spec_a, &ann) {
            mask |= 1 << k;
        }
        images.push(mask);
    }
    Ok(Correspondence {
        source: spec_b.clone(),
        target: spec_a.clone(),
        finite: FiniteCorrespondence {
            source_points: spec_b.len(),
            target_points: spec_a.len(),
            images,
        },
    })
}

/// I^S = ann_S(S/Sf(I)): the largest two-sided ideal of S inside the left
/// ideal generated by the image of I.
pub fn extension_annihilator(
    f: &crate::algebra::AlgebraHom,
    i: &Ideal,
) -> Result<Ideal> {
    if !i.parent().same_as(f.source()) {
        return Err(crate::error::Error::ParentMismatch);
    }
    let s = f.target();
    let image: Subspace = f.image_subspace(i.carrier());
    let gens: Vec<_> = image.basis_rows().into_iter().map(|r| s.element(r)).collect();
    let l = crate::ideals::left_ideal_generated(s, &gens);
    Ok(crate::ideals::annihilator_of_quotient(&l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_algebra, subalgebra_from_generators, AlgebraHom};
    use crate::exactlin::FieldSpec;
    use crate::ideals;

    #[test]
    fn strong_preimage_duality_and_monotonicity() {
        let c = FiniteCorrespondence {
            source_points: 3,
            target_points: 2,
            images: vec![0b01, 0b11, 0b00],
        };
        let full_target = 0b11u32;
        let full_source = 0b111u32;
        for v in 0..=full_target {
            // X - c^{-1}V = c^{[-1]}(Y - V)
            assert_eq!(
                full_source & !c.preimage(v),
                c.strong_preimage(full_target & !v)
            );
        }
        // monotone
        assert!(c.strong_preimage(0b01) & !c.strong_preimage(0b11) == 0);
        // c^{[-1]} of the whole space is everything; of the empty set,
        // exactly the points with empty image
        assert_eq!(c.strong_preimage(full_target), full_source);
        assert_eq!(c.strong_preimage(0), 0b100);
    }

    #[test]
    fn identity_correspondence_is_continuous() {
        let c = FiniteCorrespondence::identity(3);
        let space = FiniteSpace::discrete(3);
        assert!(c.is_continuous(&space, &space));
    }

    #[test]
    fn r_of_identity_is_identity() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let id = AlgebraHom::identity(&a);
        let r = r_of(&id).unwrap();
        assert_eq!(r.finite, FiniteCorrespondence::identity(1));
    }

    #[test]
    fn extension_annihilator_of_zero_is_zero() {
        let a = matrix_algebra(FieldSpec::Rationals, 2);
        let id = AlgebraHom::identity(&a);
        let zero = ideals::zero_ideal(&a);
        assert!(extension_annihilator(&id, &zero).unwrap().is_zero());
    }

    #[test]
    fn dual_numbers_extension_annihilator_is_zero() {
        // R = <1, e12> inside M2 = S, I = span{e12}: S e12 has no nonzero
        // two-sided ideal inside, so I^S = 0
        let s = matrix_algebra(FieldSpec::Rationals, 2);
        let (r, f) = subalgebra_from_generators(&s, &[s.basis_element(1)]).unwrap();
        let rad = ideals::jacobson_radical(&r);
        assert_eq!(rad.dim(), 1);
        let ext = extension_annihilator(&f, &rad).unwrap();
        assert!(ext.is_zero());
    }
}
