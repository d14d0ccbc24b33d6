//! Shipped example homomorphisms with their expected analysis outcomes.
//! Each fixture re-verifies itself: `verify` recomputes the full analysis
//! and diffs it against the stored expectations.

use crate::algebra::{
    matrix_algebra, subalgebra_on_subspace, upper_triangular_algebra, Algebra, AlgebraHom,
};
use crate::correspondence::{analyze_hom, HomAnalysis};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Subspace};

/// Expected flag values and spectrum sizes for a fixture.
#[derive(Clone, Copy, Debug)]
pub struct ExpectedFlags {
    pub single_valued: bool,
    pub continuous: bool,
    pub strong_preimage_identity: bool,
    pub adjoint: bool,
    pub centralizing: bool,
    pub spec_domain_len: usize,
    pub spec_codomain_len: usize,
}

/// A named homomorphism fixture: domain R, codomain S, the map, and the
/// expected analysis.
pub struct Fixture {
    pub name: &'static str,
    pub alias: &'static str,
    pub description: &'static str,
    pub domain: Algebra,
    pub codomain: Algebra,
    pub hom: AlgebraHom,
    pub expected: ExpectedFlags,
}

impl Fixture {
    /// Recomputes the analysis and returns it with a list of mismatches
    /// against the expectations (empty = pass).
    pub fn verify(&self) -> Result<(HomAnalysis, Vec<String>)> {
        let analysis = analyze_hom(&self.hom)?;
        let mut diffs = Vec::new();
        let mut check = |name: &str, expected: bool, actual: bool| {
            if expected != actual {
                diffs.push(format!("{name}: expected {expected}, got {actual}"));
            }
        };
        check("single_valued", self.expected.single_valued, analysis.flags.single_valued);
        check("continuous", self.expected.continuous, analysis.flags.continuous);
        check(
            "strong_preimage_identity",
            self.expected.strong_preimage_identity,
            analysis.flags.strong_preimage_identity,
        );
        check("adjoint", self.expected.adjoint, analysis.flags.adjoint);
        check("centralizing", self.expected.centralizing, analysis.flags.centralizing);
        if !analysis.consistent {
            diffs.push("internal consistency: equivalent conditions disagree".into());
        }
        let spec_r = crate::spectrum::spec(&self.domain)?;
        let spec_s = crate::spectrum::spec(&self.codomain)?;
        if spec_r.len() != self.expected.spec_domain_len {
            diffs.push(format!(
                "spec(domain) size: expected {}, got {}",
                self.expected.spec_domain_len,
                spec_r.len()
            ));
        }
        if spec_s.len() != self.expected.spec_codomain_len {
            diffs.push(format!(
                "spec(codomain) size: expected {}, got {}",
                self.expected.spec_codomain_len,
                spec_s.len()
            ));
        }
        Ok((analysis, diffs))
    }
}

fn diagonal_subspace(a: &Algebra, indices: &[usize]) -> Subspace {
    let rows: Vec<_> = indices.iter().map(|&i| a.basis_coords(i)).collect();
    Subspace::from_rows(a.field(), a.dim(), rows)
}

/// EX1: the two-dimensional subalgebra spanned by 1 and the nilpotent
/// matrix unit inside M_2. Adjoint and nearly centralizing with t = 2, but
/// not centralizing; the image ideal generates everything while the
/// extension annihilator is zero.
fn ex1() -> Fixture {
    let s = matrix_algebra(FieldSpec::Rationals, 2);
    let mut rows = vec![s.unit_coords().to_vec()];
    rows.push(s.basis_coords(1)); // e12
    let sub = Subspace::from_rows(s.field(), s.dim(), rows);
    let (r, hom) = subalgebra_on_subspace(&s, &sub).expect("valid subalgebra");
    Fixture {
        name: "ex1",
        alias: "ex-dual-m2",
        description: "dual-number subalgebra <1, e12> inside M2: adjoint, nearly centralizing (t = 2), not centralizing",
        domain: r,
        codomain: s,
        hom,
        expected: ExpectedFlags {
            single_valued: true,
            continuous: true,
            strong_preimage_identity: true,
            adjoint: true,
            centralizing: false,
            spec_domain_len: 1,
            spec_codomain_len: 1,
        },
    }
}

/// EX2: the diagonal inside T_2. The correspondence is a single-valued
/// continuous function, yet the strong-preimage identity and adjointness
/// fail: the weaker continuity condition is strictly weaker.
fn ex2() -> Fixture {
    let s = upper_triangular_algebra(FieldSpec::Rationals, 2);
    let sub = diagonal_subspace(&s, &[0, 2]);
    let (r, hom) = subalgebra_on_subspace(&s, &sub).expect("valid subalgebra");
    Fixture {
        name: "ex2",
        alias: "ex-diag-t2",
        description: "diagonal inside T2: single-valued and continuous but not adjoint",
        domain: r,
        codomain: s,
        hom,
        expected: ExpectedFlags {
            single_valued: true,
            continuous: true,
            strong_preimage_identity: false,
            adjoint: false,
            centralizing: false,
            spec_domain_len: 2,
            spec_codomain_len: 2,
        },
    }
}

/// EX3: the diagonal inside M_2. The contraction of the zero ideal has two
/// minimal primes, so the correspondence is not single-valued.
fn ex3() -> Fixture {
    let s = matrix_algebra(FieldSpec::Rationals, 2);
    let sub = diagonal_subspace(&s, &[0, 3]);
    let (r, hom) = subalgebra_on_subspace(&s, &sub).expect("valid subalgebra");
    Fixture {
        name: "ex3",
        alias: "ex-diag-m2",
        description: "diagonal inside M2: continuous but not single-valued, not adjoint",
        domain: r,
        codomain: s,
        hom,
        expected: ExpectedFlags {
            single_valued: false,
            continuous: true,
            strong_preimage_identity: false,
            adjoint: false,
            centralizing: false,
            spec_domain_len: 2,
            spec_codomain_len: 1,
        },
    }
}

pub fn all_fixtures() -> Vec<Fixture> {
    vec![ex1(), ex2(), ex3()]
}

pub fn fixture(name: &str) -> Result<Fixture> {
    all_fixtures()
        .into_iter()
        .find(|f| f.name == name || f.alias == name)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown fixture {name:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_verify_clean() {
        for f in all_fixtures() {
            let (analysis, diffs) = f.verify().unwrap();
            assert!(diffs.is_empty(), "{}: {diffs:?}", f.name);
            assert!(analysis.consistent, "{}", f.name);
        }
    }

    #[test]
    fn ex1_nearly_centralizing_exponent_is_two() {
        let f = fixture("ex1").unwrap();
        let (analysis, _) = f.verify().unwrap();
        assert_eq!(analysis.per_prime_t, vec![Some(2)]);
    }

    #[test]
    fn ex2_witness_names_the_failing_pair() {
        let f = fixture("ex-diag-t2").unwrap();
        let (analysis, _) = f.verify().unwrap();
        assert!(analysis.witnesses.strong_preimage.is_some());
        assert!(analysis.witnesses.adjoint.is_some());
        assert!(analysis.witnesses.prime_pair.is_some());
    }

    #[test]
    fn ex3_not_single_valued_at_zero() {
        let f = fixture("ex3").unwrap();
        let (analysis, _) = f.verify().unwrap();
        let w = analysis.witnesses.single_valued.unwrap();
        assert_eq!(w.index, 0);
        assert_eq!(w.members.len(), 2);
    }

    #[test]
    fn unknown_fixture_is_an_error() {
        assert!(fixture("nope").is_err());
    }
}
