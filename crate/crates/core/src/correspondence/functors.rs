//! Inclusion-preserving functors between closed-set lattices: the generic
//! closure-of-image / closure-of-strong-preimage pair of a correspondence,
//! the restriction functor lambda, the extension functor rho, and the
//! bimodule-induced theta, plus adjointness checks.

use crate::algebra::Bimodule;
use crate::error::{Error, Result};
use crate::spectrum::{spec, v_of, FiniteSpace};

use super::{alpha_annihilator, extension_annihilator, FiniteCorrespondence, HomContext};

/// A covariant functor between closed-set categories, tabulated: table[i]
/// is the image of source.closed_sets()[i]. Monotone by validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorOnClosed {
    source: FiniteSpace,
    target: FiniteSpace,
    table: Vec<u32>,
}

impl FunctorOnClosed {
    pub fn from_fn(
        source: FiniteSpace,
        target: FiniteSpace,
        mut f: impl FnMut(u32) -> Result<u32>,
    ) -> Result<FunctorOnClosed> {
        let mut table = Vec::with_capacity(source.closed_sets().len());
        for &u in source.closed_sets() {
            let v = f(u)?;
            if !target.is_closed(v) {
                return Err(Error::Internal(format!(
                    "functor image {v:#b} of {u:#b} is not closed"
                )));
            }
            table.push(v);
        }
        let out = FunctorOnClosed { source, target, table };
        out.check_monotone()?;
        Ok(out)
    }

    fn check_monotone(&self) -> Result<()> {
        let closed = self.source.closed_sets();
        for (i, &u) in closed.iter().enumerate() {
            for (j, &u2) in closed.iter().enumerate() {
                if u & !u2 == 0 && self.table[i] & !self.table[j] != 0 {
                    return Err(Error::Internal(format!(
                        "functor not monotone at {u:#b} <= {u2:#b}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &FiniteSpace {
        &self.source
    }

    pub fn target(&self) -> &FiniteSpace {
        &self.target
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn apply(&self, closed_mask: u32) -> u32 {
        let idx = self
            .source
            .index_of(closed_mask)
            .expect("argument must be a closed set of the source space");
        self.table[idx]
    }
}

/// phi U = closure(cU).
pub fn phi_upper(
    c: &FiniteCorrespondence,
    source_space: &FiniteSpace,
    target_space: &FiniteSpace,
) -> FunctorOnClosed {
    FunctorOnClosed::from_fn(source_space.clone(), target_space.clone(), |u| {
        Ok(target_space.closure(c.image_of_set(u)))
    })
    .expect("closure images are closed and monotone")
}

/// phi_c V = closure(strong preimage of V).
pub fn phi_lower(
    c: &FiniteCorrespondence,
    source_space: &FiniteSpace,
    target_space: &FiniteSpace,
) -> FunctorOnClosed {
    FunctorOnClosed::from_fn(target_space.clone(), source_space.clone(), |v| {
        Ok(source_space.closure(c.strong_preimage(v)))
    })
    .expect("closure images are closed and monotone")
}

/// Left-adjointness of the pair (phi, psi): phi U <= V iff U <= psi V for
/// all closed U, V. Returns a witness pair on failure.
pub fn is_left_adjoint(
    phi: &FunctorOnClosed,
    psi: &FunctorOnClosed,
) -> std::result::Result<(), (u32, u32)> {
    debug_assert_eq!(phi.source, psi.target);
    debug_assert_eq!(phi.target, psi.source);
    for (i, &u) in phi.source.closed_sets().iter().enumerate() {
        for (j, &v) in phi.target.closed_sets().iter().enumerate() {
            let lhs = phi.table[i] & !v == 0;
            let rhs = u & !psi.table[j] == 0;
            if lhs != rhs {
                return Err((u, v));
            }
        }
    }
    Ok(())
}

/// Searches for a tabulated right adjoint of phi: psi V must be the union
/// of all U with phi U <= V, and that union must itself satisfy the
/// adjunction. Closed sets are union-closed, so the union is closed.
pub fn tabulated_right_adjoint(phi: &FunctorOnClosed) -> Option<FunctorOnClosed> {
    let mut table = Vec::with_capacity(phi.target.closed_sets().len());
    for &v in phi.target.closed_sets() {
        let mut best = 0u32;
        for (i, &u) in phi.source.closed_sets().iter().enumerate() {
            if phi.table[i] & !v == 0 {
                best |= u;
            }
        }
        if !phi.source.is_closed(best) {
            return None;
        }
        if phi.apply(best) & !v != 0 {
            return None;
        }
        table.push(best);
    }
    let psi = FunctorOnClosed {
        source: phi.target.clone(),
        target: phi.source.clone(),
        table,
    };
    if psi.check_monotone().is_err() {
        return None;
    }
    match is_left_adjoint(phi, &psi) {
        Ok(()) => Some(psi),
        Err(_) => None,
    }
}

/// lambda: closed V_S(J) maps to V_R(f^{-1}(J)), tabulated over the
/// closed sets of Spec S using the defining radical ideal of each.
pub fn lambda_functor(ctx: &HomContext) -> Result<FunctorOnClosed> {
    FunctorOnClosed::from_fn(ctx.space_s.clone(), ctx.space_r.clone(), |u| {
        let j = ctx.ideal_of_closed_s(u);
        let pre = crate::ideals::preimage_under_hom(&ctx.f, &j)?;
        Ok(v_of(&ctx.spec_r, &pre).mask())
    })
}

/// rho: closed V_R(I) maps to V_S(I^S).
pub fn rho_functor(ctx: &HomContext) -> Result<FunctorOnClosed> {
    FunctorOnClosed::from_fn(ctx.space_r.clone(), ctx.space_s.clone(), |v| {
        let i = ctx.ideal_of_closed_r(v);
        let ext = extension_annihilator(&ctx.f, &i)?;
        Ok(v_of(&ctx.spec_s, &ext).mask())
    })
}

/// theta: closed V in SPEC B maps to V_A(I(V)^alpha), for the functor
/// induced by an A-B-bimodule.
pub fn theta_alpha(m: &Bimodule) -> Result<FunctorOnClosed> {
    let spec_b = spec(m.right_algebra())?;
    let spec_a = spec(m.left_algebra())?;
    let space_b = crate::spectrum::all_closed_sets(&spec_b)?;
    let space_a = crate::spectrum::all_closed_sets(&spec_a)?;
    FunctorOnClosed::from_fn(space_b, space_a, |v| {
        let j = crate::spectrum::i_of_mask(&spec_b, v);
        let ann = alpha_annihilator(m, &j)?;
        Ok(v_of(&spec_a, &ann).mask())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_functors_are_adjoint() {
        let space = FiniteSpace::discrete(2);
        let c = FiniteCorrespondence::identity(2);
        let up = phi_upper(&c, &space, &space);
        let down = phi_lower(&c, &space, &space);
        assert_eq!(up.table(), down.table());
        assert!(is_left_adjoint(&up, &down).is_ok());
        let psi = tabulated_right_adjoint(&up).unwrap();
        assert_eq!(psi.table(), down.table());
    }

    #[test]
    fn adjoint_iff_continuous_on_small_spaces() {
        // a discontinuous correspondence on the Sierpinski-like space
        let src = FiniteSpace::new(2, vec![0b00, 0b01, 0b11]).unwrap();
        let tgt = FiniteSpace::discrete(2);
        // point 0 -> {1}, point 1 -> {0}: strong preimage of {0} is {1},
        // not closed in src
        let c = FiniteCorrespondence {
            source_points: 2,
            target_points: 2,
            images: vec![0b10, 0b01],
        };
        assert!(!c.is_continuous(&src, &tgt));
        let up = phi_upper(&c, &src, &tgt);
        let down = phi_lower(&c, &src, &tgt);
        assert!(is_left_adjoint(&up, &down).is_err());
        assert!(tabulated_right_adjoint(&up).is_none());
    }
}
