//! Bit-mask subsets of a ground set `[n] = {1, ..., n}` and the dominance
//! order on equal-size sets.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground-set size; every set fits in one machine word, so
/// intersection tests are a single `AND`.
pub const MAX_GROUND_SET: u32 = 64;

/// A subset of `[n]`, with element `e` stored as bit `e - 1`.
///
/// The empty set is representable (it appears as the tail of a type-0
/// projection); uniform families reject it separately.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    mask: u64,
    n: u32,
}

pub(crate) fn check_ground(n: u32) -> Result<()> {
    if n == 0 || n > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(n));
    }
    Ok(())
}

/// Mask of the initial segment `[t] = {1, ..., t}`, saturating at word width.
pub(crate) fn low_mask(t: u32) -> u64 {
    if t == 0 {
        0
    } else if t >= 64 {
        !0
    } else {
        (1u64 << t) - 1
    }
}

impl ElementSet {
    /// Builds a set from a strictly increasing element list.
    pub fn from_elements(n: u32, elements: &[u32]) -> Result<Self> {
        check_ground(n)?;
        let mut mask = 0u64;
        let mut prev = 0u32;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            if e <= prev {
                return Err(Error::NotStrictlyIncreasing);
            }
            mask |= 1 << (e - 1);
            prev = e;
        }
        Ok(Self { mask, n })
    }

    pub fn from_mask(n: u32, mask: u64) -> Result<Self> {
        check_ground(n)?;
        if n < 64 && mask >> n != 0 {
            return Err(Error::ElementOutOfRange {
                element: 64 - mask.leading_zeros(),
                n,
            });
        }
        Ok(Self { mask, n })
    }

    /// Skips range validation; callers guarantee `mask` fits in `[n]`.
    pub(crate) fn from_mask_unchecked(n: u32, mask: u64) -> Self {
        debug_assert!(n == 64 || mask >> n == 0);
        Self { mask, n }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn ground_size(&self) -> u32 {
        self.n
    }

    pub fn cardinality(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, element: u32) -> bool {
        (1..=64).contains(&element) && self.mask >> (element - 1) & 1 == 1
    }

    pub fn intersects(&self, other: &ElementSet) -> bool {
        self.mask & other.mask != 0
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.mask & other.mask == 0
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        BitIter(self.mask)
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.elements().collect()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, e) in self.elements().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterates set bits as 1-based elements, ascending.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }
}

/// Whether `b` is coordinatewise below `a`: listing both sets increasingly,
/// every element of `b` is at most the corresponding element of `a`
/// (`b` is dominated by `a`).
pub fn dominates(a: &ElementSet, b: &ElementSet) -> Result<bool> {
    if a.cardinality() != b.cardinality() {
        return Err(Error::MismatchedCardinality(
            a.cardinality(),
            b.cardinality(),
        ));
    }
    Ok(b.elements().zip(a.elements()).all(|(lo, hi)| lo <= hi))
}

/// All sets of the same cardinality over the same ground set that are
/// dominated by `s`, in ascending mask order.
pub fn dominated_sets(s: &ElementSet) -> Vec<ElementSet> {
    let upper = s.to_vec();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(upper.len());
    collect_dominated(&upper, 0, 0, &mut current, &mut out);
    let n = s.ground_size();
    let mut sets: Vec<ElementSet> = out
        .into_iter()
        .map(|mask| ElementSet::from_mask_unchecked(n, mask))
        .collect();
    sets.sort();
    sets
}

fn collect_dominated(
    upper: &[u32],
    idx: usize,
    prev: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<u64>,
) {
    if idx == upper.len() {
        let mask = current.iter().fold(0u64, |m, &e| m | 1 << (e - 1));
        out.push(mask);
        return;
    }
    for e in (prev + 1)..=upper[idx] {
        current.push(e);
        collect_dominated(upper, idx + 1, e, current, out);
        current.pop();
    }
}

/// Masks of all `k`-element subsets of `[n]`, ascending (Gosper's hack).
pub fn k_subset_masks(n: u32, k: u32) -> KSubsetMasks {
    debug_assert!(n <= MAX_GROUND_SET);
    let limit = low_mask(n);
    let next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(low_mask(k))
    };
    KSubsetMasks { next, limit }
}

pub struct KSubsetMasks {
    next: Option<u64>,
    limit: u64,
}

impl Iterator for KSubsetMasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            let succ = (((r ^ cur) >> 2) / c) | r;
            if r != 0 && succ <= self.limit {
                Some(succ)
            } else {
                None
            }
        };
        Some(cur)
    }
}

/// Masks of all `k`-element subsets of the bits set in `window`, ascending.
pub(crate) fn k_subsets_of(window: u64, k: u32) -> Vec<u64> {
    let bits: Vec<u64> = BitIter(window).map(|e| 1u64 << (e - 1)).collect();
    if (k as usize) > bits.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    choose_bits(&bits, k as usize, 0, 0, &mut out);
    out.sort_unstable();
    out
}

fn choose_bits(bits: &[u64], k: usize, start: usize, acc: u64, out: &mut Vec<u64>) {
    if k == 0 {
        out.push(acc);
        return;
    }
    for i in start..=bits.len() - k {
        choose_bits(bits, k - 1, i + 1, acc | bits[i], out);
    }
}
