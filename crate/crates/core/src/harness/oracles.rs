//! Brute-force oracles over small finite fields: exhaustive subspace and
//! two-sided ideal enumeration, and the radical as the largest nilpotent
//! ideal found by enumeration.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar, Subspace};
use crate::ideals::{ideal_sum, nilpotency_index, zero_ideal, Ideal};
use crate::spectrum::ELEMENT_ENUMERATION_CAP;

/// Every subspace of F_p^n, by enumerating reduced row-echelon matrices:
/// all pivot-column sets, all fillings of the free entries.
pub fn enumerate_subspaces(field: FieldSpec, ambient: usize) -> Result<Vec<Subspace>> {
    let FieldSpec::Prime(p) = field else {
        return Err(Error::FiniteFieldRequired(field.to_string()));
    };
    let count = (p as u128).pow(ambient as u32);
    if count > ELEMENT_ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            what: "subspace enumeration",
            needed: count,
            cap: ELEMENT_ENUMERATION_CAP,
        });
    }
    let mut out = Vec::new();
    for pivot_mask in 0u32..(1 << ambient) {
        let pivots: Vec<usize> = (0..ambient).filter(|&c| pivot_mask >> c & 1 == 1).collect();
        let k = pivots.len();
        // free entries: row i, column c with c > pivots[i] and c not a pivot
        let mut free_cells = Vec::new();
        for (i, &pc) in pivots.iter().enumerate() {
            for c in (pc + 1)..ambient {
                if !pivots.contains(&c) {
                    free_cells.push((i, c));
                }
            }
        }
        let total = (p as u128).pow(free_cells.len() as u32);
        let mut counter = vec![0u64; free_cells.len()];
        let mut iter = 0u128;
        loop {
            let mut m = Matrix::zero(field, k, ambient);
            for (i, &pc) in pivots.iter().enumerate() {
                m.set(i, pc, field.one());
            }
            for (ci, &(i, c)) in free_cells.iter().enumerate() {
                m.set(i, c, Scalar::Residue { value: counter[ci], modulus: p });
            }
            out.push(Subspace::from_matrix(&m));
            iter += 1;
            if iter >= total {
                break;
            }
            let mut d = 0;
            loop {
                counter[d] += 1;
                if counter[d] < p {
                    break;
                }
                counter[d] = 0;
                d += 1;
            }
        }
    }
    Ok(out)
}

/// Every two-sided ideal, found by filtering all subspaces by closure
/// under left and right multiplication by the basis.
pub fn exhaustive_ideal_enumeration(a: &Algebra) -> Result<Vec<Ideal>> {
    let subspaces = enumerate_subspaces(a.field(), a.dim())?;
    let mut out = Vec::new();
    'subspace: for sub in subspaces {
        for row in sub.basis_rows() {
            for i in 0..a.dim() {
                let e = a.basis_coords(i);
                if !sub.contains(&a.mul_coords(&e, &row)) || !sub.contains(&a.mul_coords(&row, &e))
                {
                    continue 'subspace;
                }
            }
        }
        out.push(Ideal::new_unchecked(a, sub));
    }
    Ok(out)
}

/// Oracle radical: the sum of all nilpotent ideals from the exhaustive
/// enumeration (their sum is the unique largest one).
pub fn brute_force_radical(a: &Algebra) -> Result<Ideal> {
    let zero = zero_ideal(a);
    let mut acc = zero.clone();
    for i in exhaustive_ideal_enumeration(a)? {
        if nilpotency_index(&i, &zero)?.is_some() {
            acc = ideal_sum(&acc, &i)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        direct_product, field_algebra, group_algebra, matrix_algebra, upper_triangular_algebra,
    };
    use crate::harness::cyclic_group_table;
    use crate::ideals::jacobson_radical;

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        // F_2^2: 1 + 3 + 1 = 5 subspaces; F_2^3: 1 + 7 + 7 + 1 = 16;
        // F_3^2: 1 + 4 + 1 = 6; F_2^4: 67
        assert_eq!(enumerate_subspaces(FieldSpec::Prime(2), 2).unwrap().len(), 5);
        assert_eq!(enumerate_subspaces(FieldSpec::Prime(2), 3).unwrap().len(), 16);
        assert_eq!(enumerate_subspaces(FieldSpec::Prime(3), 2).unwrap().len(), 6);
        assert_eq!(enumerate_subspaces(FieldSpec::Prime(2), 4).unwrap().len(), 67);
    }

    #[test]
    fn m2_f2_is_simple() {
        let a = matrix_algebra(FieldSpec::Prime(2), 2);
        let ideals = exhaustive_ideal_enumeration(&a).unwrap();
        assert_eq!(ideals.len(), 2); // 0 and M2
    }

    #[test]
    fn t2_f2_has_five_ideals() {
        let a = upper_triangular_algebra(FieldSpec::Prime(2), 2);
        let ideals = exhaustive_ideal_enumeration(&a).unwrap();
        assert_eq!(ideals.len(), 5);
    }

    #[test]
    fn product_of_fields_has_four_ideals() {
        let k = field_algebra(FieldSpec::Prime(2));
        let kk = direct_product(&k, &k).unwrap();
        assert_eq!(exhaustive_ideal_enumeration(&kk).unwrap().len(), 4);
    }

    #[test]
    fn brute_radical_agrees_with_fast_radical() {
        let algebras = vec![
            matrix_algebra(FieldSpec::Prime(2), 2),
            upper_triangular_algebra(FieldSpec::Prime(2), 2),
            upper_triangular_algebra(FieldSpec::Prime(3), 2),
            upper_triangular_algebra(FieldSpec::Prime(2), 3),
            group_algebra(FieldSpec::Prime(2), &cyclic_group_table(2)).unwrap(),
            group_algebra(FieldSpec::Prime(3), &cyclic_group_table(3)).unwrap(),
            group_algebra(FieldSpec::Prime(2), &cyclic_group_table(4)).unwrap(),
            group_algebra(FieldSpec::Prime(2), &cyclic_group_table(3)).unwrap(),
        ];
        for a in algebras {
            let fast = jacobson_radical(&a);
            let brute = brute_force_radical(&a).unwrap();
            assert!(fast.set_eq(&brute), "radical mismatch on {a:?}");
        }
    }
}
