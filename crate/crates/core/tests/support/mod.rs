//! Shared helpers for the integration suites: an independent Pascal-triangle
//! binomial and seeded random family generation.

use num_bigint::BigUint;
use rand::Rng;

use ifam_core::{k_subset_masks, shift_closure, SetFamily};

/// `C(n, k)` by the Pascal recurrence, independent of the library's
/// multiplicative evaluation.
#[allow(dead_code)]
pub fn pascal(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut row = vec![BigUint::from(1u32)];
    for _ in 0..n {
        let mut next = vec![BigUint::from(1u32)];
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigUint::from(1u32));
        row = next;
    }
    row[k].clone()
}

/// A random intersecting family: greedy accepts of uniformly sampled
/// `k`-sets against everything chosen so far.
#[allow(dead_code)]
pub fn random_intersecting_family(rng: &mut impl Rng, n: u32, k: u32) -> SetFamily {
    let universe: Vec<u64> = k_subset_masks(n, k).collect();
    let target = rng.gen_range(1..=universe.len().min(64));
    let mut chosen: Vec<u64> = Vec::new();
    let mut attempts = 0usize;
    while chosen.len() < target && attempts < target * 20 {
        attempts += 1;
        let candidate = universe[rng.gen_range(0..universe.len())];
        if !chosen.contains(&candidate) && chosen.iter().all(|&m| m & candidate != 0) {
            chosen.push(candidate);
        }
    }
    SetFamily::from_masks(n, k, chosen).expect("sampled masks are valid members")
}

/// A random shifted intersecting family: the shift closure of a random
/// intersecting seed.
#[allow(dead_code)]
pub fn random_shifted_intersecting_family(rng: &mut impl Rng, n: u32, k: u32) -> SetFamily {
    shift_closure(&random_intersecting_family(rng, n, k))
}
