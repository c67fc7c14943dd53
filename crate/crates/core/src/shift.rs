//! The compression (shifting) operator, its fixed points, and the closure
//! that drives every family to a shifted one.

use crate::error::{Error, Result};
use crate::family::SetFamily;

/// Replaces each member containing `j` but not `i` by the set with `j`
/// swapped for `i`, unless that set is already present. Family size is
/// preserved: the swap is injective and blocked swaps keep their member.
pub fn ij_shift(family: &SetFamily, i: u32, j: u32) -> Result<SetFamily> {
    let n = family.ground_size();
    if i == 0 || i >= j || j > n {
        return Err(Error::InvalidShiftPair { i, j, n });
    }
    let bi = 1u64 << (i - 1);
    let bj = 1u64 << (j - 1);
    let moved: Vec<u64> = family
        .masks()
        .iter()
        .map(|&m| {
            if m & bj != 0 && m & bi == 0 {
                let swapped = (m ^ bj) | bi;
                if family.contains_mask(swapped) {
                    m
                } else {
                    swapped
                }
            } else {
                m
            }
        })
        .collect();
    let out = SetFamily::from_masks(n, family.uniformity(), moved)?;
    debug_assert_eq!(out.len(), family.len());
    Ok(out)
}

/// Whether the family is a fixed point of all `(i, j)`-shifts: for every
/// member with `j` present and `i < j` absent, the swapped set is a member.
pub fn is_shifted(family: &SetFamily) -> bool {
    for &m in family.masks() {
        let mut present = m;
        while present != 0 {
            let j = present.trailing_zeros() + 1;
            present &= present - 1;
            let mut absent = !m & crate::set::low_mask(j - 1);
            while absent != 0 {
                let i = absent.trailing_zeros() + 1;
                absent &= absent - 1;
                let swapped = (m ^ (1 << (j - 1))) | (1 << (i - 1));
                if !family.contains_mask(swapped) {
                    return false;
                }
            }
        }
    }
    true
}

/// Applies full passes of `(i, j)`-shifts in lexicographic order (`i`
/// ascending, then `j`) until a pass changes nothing. Terminates because
/// each applied shift strictly decreases the sum of member masks.
pub fn shift_closure(family: &SetFamily) -> SetFamily {
    let n = family.ground_size();
    let mut current = family.clone();
    loop {
        let mut changed = false;
        for i in 1..n {
            for j in (i + 1)..=n {
                let next = ij_shift(&current, i, j).expect("1 <= i < j <= n by construction");
                if next != current {
                    changed = true;
                    current = next;
                }
            }
        }
        if !changed {
            return current;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::dominated_sets;

    fn family(n: u32, k: u32, sets: &[&[u32]]) -> SetFamily {
        let sets: Vec<Vec<u32>> = sets.iter().map(|s| s.to_vec()).collect();
        SetFamily::new(n, k, &sets).unwrap()
    }

    #[test]
    fn shift_moves_unblocked_members() {
        let f = family(4, 2, &[&[2, 3], &[2, 4]]);
        let shifted = ij_shift(&f, 1, 2).unwrap();
        assert_eq!(shifted, family(4, 2, &[&[1, 3], &[1, 4]]));
    }

    #[test]
    fn shift_keeps_blocked_members() {
        let f = family(4, 2, &[&[2, 3], &[1, 3]]);
        let shifted = ij_shift(&f, 1, 2).unwrap();
        assert_eq!(shifted, f);
    }

    #[test]
    fn shift_without_applicable_members_is_identity() {
        let f = family(4, 2, &[&[1, 2]]);
        assert_eq!(ij_shift(&f, 1, 3).unwrap(), f);
    }

    #[test]
    fn shift_rejects_bad_pairs() {
        let f = family(4, 2, &[&[1, 2]]);
        assert_eq!(
            ij_shift(&f, 2, 2),
            Err(Error::InvalidShiftPair { i: 2, j: 2, n: 4 })
        );
        assert_eq!(
            ij_shift(&f, 3, 1),
            Err(Error::InvalidShiftPair { i: 3, j: 1, n: 4 })
        );
        assert_eq!(
            ij_shift(&f, 1, 5),
            Err(Error::InvalidShiftPair { i: 1, j: 5, n: 4 })
        );
    }

    #[test]
    fn closure_slides_a_single_set_to_the_initial_segment() {
        let f = family(4, 3, &[&[2, 3, 4]]);
        assert_eq!(shift_closure(&f), family(4, 3, &[&[1, 2, 3]]));
    }

    #[test]
    fn closure_fixes_the_star() {
        let star = SetFamily::star(5, 2).unwrap();
        assert_eq!(shift_closure(&star), star);
        assert!(is_shifted(&star));
    }

    #[test]
    fn closure_of_disjoint_pair() {
        let f = family(4, 2, &[&[1, 2], &[3, 4]]);
        let closed = shift_closure(&f);
        assert_eq!(closed, family(4, 2, &[&[1, 2], &[1, 3]]));
        assert_eq!(closed.len(), 2);
        assert!(is_shifted(&closed));
        assert_eq!(shift_closure(&closed), closed);
    }

    #[test]
    fn shifted_examples() {
        assert!(is_shifted(&family(4, 2, &[&[1, 2], &[1, 3], &[2, 3]])));
        assert!(!is_shifted(&family(4, 2, &[&[1, 3]])));
        assert!(is_shifted(&SetFamily::empty(4, 2).unwrap()));
    }

    #[test]
    fn closure_output_is_downward_closed_under_dominance() {
        let f = family(6, 3, &[&[2, 4, 6], &[1, 5, 6], &[3, 4, 5]]);
        let closed = shift_closure(&f);
        assert!(is_shifted(&closed));
        for member in closed.members() {
            for below in dominated_sets(&member) {
                assert!(
                    closed.contains(&below),
                    "{below} dominated by {member} but missing"
                );
            }
        }
    }

    #[test]
    fn shift_preserves_intersecting_on_a_hand_case() {
        let f = family(6, 3, &[&[1, 4, 5], &[2, 4, 6], &[4, 5, 6]]);
        assert!(f.is_intersecting());
        let shifted = ij_shift(&f, 1, 4).unwrap();
        assert!(shifted.is_intersecting());
        assert_eq!(shifted.len(), f.len());
    }
}
