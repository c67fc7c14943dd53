//! Brute-force enumeration of all maximal intersecting families as maximal
//! cliques of the intersection graph on `k`-sets (Bron–Kerbosch with
//! pivoting). Deliberately kept independent of the partition and generator
//! code paths: it works on raw vertex masks and serves as their oracle.

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::set::{k_subset_masks, ElementSet};
use crate::shift::is_shifted;

/// The oracle packs the candidate `k`-sets into one word of clique bits.
pub const MAX_ORACLE_VERTICES: usize = 64;

/// All maximal intersecting `k`-uniform families on `[n]`, canonically
/// ordered; with `shifted_only`, only the shifted ones. Requires
/// `C(n, k) <= 64`.
pub fn brute_force_maximal(n: u32, k: u32, shifted_only: bool) -> Result<Vec<SetFamily>> {
    let _ = ElementSet::from_elements(n, &[])?; // ground-set range check
    if k == 0 || k > n {
        return Err(Error::InvalidUniformity { n, k });
    }
    let vertices: Vec<u64> = k_subset_masks(n, k).collect();
    if vertices.len() > MAX_ORACLE_VERTICES {
        return Err(Error::ScaleCap(format!(
            "oracle supports C(n, k) <= {MAX_ORACLE_VERTICES}, got C({n}, {k}) = {}",
            vertices.len()
        )));
    }
    let adjacency: Vec<u64> = vertices
        .iter()
        .enumerate()
        .map(|(v, &vm)| {
            let mut row = 0u64;
            for (w, &wm) in vertices.iter().enumerate() {
                if v != w && vm & wm != 0 {
                    row |= 1 << w;
                }
            }
            row
        })
        .collect();

    let all = if vertices.len() == 64 {
        !0u64
    } else {
        (1u64 << vertices.len()) - 1
    };
    let mut cliques = Vec::new();
    bron_kerbosch(&adjacency, 0, all, 0, &mut cliques);

    let mut families: Vec<SetFamily> = cliques
        .into_iter()
        .map(|clique| {
            let members: Vec<u64> = (0..vertices.len())
                .filter(|&v| clique >> v & 1 == 1)
                .map(|v| vertices[v])
                .collect();
            SetFamily::from_sorted_masks_unchecked(n, k, members)
        })
        .filter(|f| !shifted_only || is_shifted(f))
        .collect();
    families.sort();
    Ok(families)
}

fn bron_kerbosch(
    adjacency: &[u64],
    clique: u64,
    mut candidates: u64,
    mut excluded: u64,
    out: &mut Vec<u64>,
) {
    if candidates == 0 && excluded == 0 {
        out.push(clique);
        return;
    }
    // pivot on the vertex covering the most candidates
    let pivot = {
        let mut best = 0;
        let mut best_cover = None;
        let mut pool = candidates | excluded;
        while pool != 0 {
            let u = pool.trailing_zeros() as usize;
            pool &= pool - 1;
            let cover = (candidates & adjacency[u]).count_ones();
            if best_cover.is_none_or(|b| cover > b) {
                best_cover = Some(cover);
                best = u;
            }
        }
        best
    };
    let mut pool = candidates & !adjacency[pivot];
    while pool != 0 {
        let v = pool.trailing_zeros() as usize;
        let vbit = 1u64 << v;
        pool &= pool - 1;
        bron_kerbosch(
            adjacency,
            clique | vbit,
            candidates & adjacency[v],
            excluded & adjacency[v],
            out,
        );
        candidates &= !vbit;
        excluded |= vbit;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_on_five_points() {
        let all = brute_force_maximal(5, 2, false).unwrap();
        // 5 stars and 10 triangles
        assert_eq!(all.len(), 15);
        let sizes: Vec<usize> = all.iter().map(SetFamily::len).collect();
        assert_eq!(sizes.iter().filter(|&&s| s == 4).count(), 5);
        assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 10);

        let shifted = brute_force_maximal(5, 2, true).unwrap();
        assert_eq!(shifted.len(), 2);
        assert!(shifted.contains(&SetFamily::star(5, 2).unwrap()));
    }

    #[test]
    fn complementary_pairs_at_the_tight_ground_set() {
        let all = brute_force_maximal(4, 2, false).unwrap();
        // one choice from each of the three complementary pairs
        assert_eq!(all.len(), 8);
        for f in &all {
            assert_eq!(f.len(), 3);
            assert!(f.is_intersecting());
            // exactly one of each complementary pair is present
            for &m in f.masks() {
                let complement = !m & 0b1111;
                assert!(!f.contains_mask(complement));
            }
        }
    }

    #[test]
    fn every_oracle_family_is_maximal() {
        for (n, k) in [(5u32, 2u32), (6, 3)] {
            for f in brute_force_maximal(n, k, false).unwrap() {
                assert!(f.is_intersecting());
                for candidate in k_subset_masks(n, k) {
                    if !f.contains_mask(candidate) {
                        assert!(
                            f.masks().iter().any(|m| m & candidate == 0),
                            "{candidate:b} could be added to {f:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_cap() {
        assert!(matches!(
            brute_force_maximal(10, 4, false),
            Err(Error::ScaleCap(_))
        ));
    }
}
