//! Finite topological spaces presented by their closed-set families,
//! plus exhaustive enumeration of all such families on few points.

use crate::error::{Error, Result};

/// A finite topological space: point count and the family of closed sets
/// as bitmasks, sorted ascending. Contains the empty and full sets and is
/// closed under pairwise union and intersection.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    points: usize,
    closed: Vec<u32>,
}

impl FiniteSpace {
    pub fn new(points: usize, mut closed: Vec<u32>) -> Result<FiniteSpace> {
        assert!(points <= 31, "point count too large for bitmask representation");
        let full = full_mask(points);
        closed.sort_unstable();
        closed.dedup();
        if !closed.contains(&0) || !closed.contains(&full) {
            return Err(Error::InvalidParameter(
                "closed-set family must contain the empty and full sets".into(),
            ));
        }
        for &a in &closed {
            if a & !full != 0 {
                return Err(Error::InvalidParameter("closed set out of range".into()));
            }
            for &b in &closed {
                if !closed.contains(&(a | b)) || !closed.contains(&(a & b)) {
                    return Err(Error::InvalidParameter(
                        "closed-set family not closed under union/intersection".into(),
                    ));
                }
            }
        }
        Ok(FiniteSpace { points, closed })
    }

    /// The discrete space: every subset closed.
    pub fn discrete(points: usize) -> FiniteSpace {
        let full = full_mask(points);
        FiniteSpace {
            points,
            closed: (0..=full).collect(),
        }
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn closed_sets(&self) -> &[u32] {
        &self.closed
    }

    pub fn full_mask(&self) -> u32 {
        full_mask(self.points)
    }

    pub fn is_closed(&self, mask: u32) -> bool {
        self.closed.binary_search(&mask).is_ok()
    }

    /// Index of a closed set within the sorted family.
    pub fn index_of(&self, mask: u32) -> Option<usize> {
        self.closed.binary_search(&mask).ok()
    }

    /// Smallest closed superset: intersection of all closed sets containing
    /// the mask (well-defined since the family is intersection-closed and
    /// contains the full set).
    pub fn closure(&self, mask: u32) -> u32 {
        let mut acc = self.full_mask();
        for &c in &self.closed {
            if c & mask == mask {
                acc &= c;
            }
        }
        acc
    }
}

pub fn full_mask(points: usize) -> u32 {
    if points == 0 {
        0
    } else {
        (1u32 << points) - 1
    }
}

/// All closed-set families on `points` labeled points, optionally capped by
/// family size. Brute force over subsets of the powerset; fine for <= 4
/// points (2^14 candidate families).
pub fn enumerate_topologies(points: usize, max_closed_sets: usize) -> Vec<FiniteSpace> {
    assert!(points <= 4, "exhaustive topology enumeration is capped at 4 points");
    let full = full_mask(points);
    let subset_count = (full as usize) + 1;
    // free choices: all subsets except {} and the full set
    let free: Vec<u32> = (0..subset_count as u32).filter(|&m| m != 0 && m != full).collect();
    let mut out = Vec::new();
    for pick in 0u32..(1 << free.len()) {
        let mut family: Vec<u32> = vec![0, full];
        for (i, &m) in free.iter().enumerate() {
            if pick >> i & 1 == 1 {
                family.push(m);
            }
        }
        if family.len() > max_closed_sets {
            continue;
        }
        family.sort_unstable();
        family.dedup();
        let ok = family.iter().all(|&a| {
            family.iter().all(|&b| {
                family.binary_search(&(a | b)).is_ok() && family.binary_search(&(a & b)).is_ok()
            })
        });
        if ok {
            out.push(FiniteSpace { points, closed: family });
        }
    }
    out
}

/// Canonical representative of a space under point relabeling: the
/// lexicographically least closed-set family over all permutations.
pub fn canonical_form(space: &FiniteSpace) -> Vec<u32> {
    let n = space.points;
    let mut best: Option<Vec<u32>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permute_all(&mut perm, 0, &mut |p| {
        let mut mapped: Vec<u32> = space
            .closed
            .iter()
            .map(|&m| {
                let mut out = 0u32;
                for (from, &to) in p.iter().enumerate() {
                    if m >> from & 1 == 1 {
                        out |= 1 << to;
                    }
                }
                out
            })
            .collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| &mapped < b) {
            best = Some(mapped);
        }
    });
    best.expect("at least one permutation")
}

fn permute_all(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Topologies on `points` labeled points, deduplicated up to relabeling.
pub fn enumerate_topologies_up_to_iso(points: usize, max_closed_sets: usize) -> Vec<FiniteSpace> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for t in enumerate_topologies(points, max_closed_sets) {
        if seen.insert(canonical_form(&t)) {
            out.push(t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_in_sierpinski() {
        // points {0, 1}; closed sets {}, {0}, {0,1}
        let s = FiniteSpace::new(2, vec![0b00, 0b01, 0b11]).unwrap();
        assert_eq!(s.closure(0b10), 0b11);
        assert_eq!(s.closure(0b01), 0b01);
    }

    #[test]
    fn invalid_families_rejected() {
        assert!(FiniteSpace::new(2, vec![0b00, 0b01]).is_err()); // missing full
        assert!(FiniteSpace::new(2, vec![0b00, 0b01, 0b10, 0b11]).is_ok()); // discrete
    }

    #[test]
    fn topology_counts_match_the_literature() {
        // labeled topologies on n points: 1, 4, 29, 355
        assert_eq!(enumerate_topologies(1, usize::MAX).len(), 1);
        assert_eq!(enumerate_topologies(2, usize::MAX).len(), 4);
        assert_eq!(enumerate_topologies(3, usize::MAX).len(), 29);
        assert_eq!(enumerate_topologies(4, usize::MAX).len(), 355);
        // up to homeomorphism: 1, 3, 9, 33
        assert_eq!(enumerate_topologies_up_to_iso(2, usize::MAX).len(), 3);
        assert_eq!(enumerate_topologies_up_to_iso(3, usize::MAX).len(), 9);
        assert_eq!(enumerate_topologies_up_to_iso(4, usize::MAX).len(), 33);
    }
}
