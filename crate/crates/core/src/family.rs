//! `k`-uniform set families with shared ground-set metadata.
//!
//! Members are kept deduplicated and sorted by mask value (element 1 is the
//! lowest bit), so equal families compare equal and serialization is
//! deterministic.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::set::{check_ground, k_subset_masks, low_mask, ElementSet};

/// An ordered, duplicate-free collection of `k`-subsets of `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetFamily {
    n: u32,
    k: u32,
    members: Vec<u64>,
}

impl SetFamily {
    /// Builds a family from element lists; duplicates collapse.
    pub fn new(n: u32, k: u32, sets: &[Vec<u32>]) -> Result<Self> {
        check_uniformity(n, k)?;
        let mut members = Vec::with_capacity(sets.len());
        for set in sets {
            let s = ElementSet::from_elements(n, set)?;
            if s.cardinality() != k {
                return Err(Error::WrongCardinality {
                    expected: k,
                    got: s.cardinality(),
                });
            }
            members.push(s.mask());
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self { n, k, members })
    }

    pub fn from_masks(n: u32, k: u32, masks: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_uniformity(n, k)?;
        let mut members = Vec::new();
        for mask in masks {
            let s = ElementSet::from_mask(n, mask)?;
            if s.cardinality() != k {
                return Err(Error::WrongCardinality {
                    expected: k,
                    got: s.cardinality(),
                });
            }
            members.push(mask);
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self { n, k, members })
    }

    pub fn empty(n: u32, k: u32) -> Result<Self> {
        check_uniformity(n, k)?;
        Ok(Self {
            n,
            k,
            members: Vec::new(),
        })
    }

    pub(crate) fn from_sorted_masks_unchecked(n: u32, k: u32, members: Vec<u64>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|m| m.count_ones() == k));
        Self { n, k, members }
    }

    pub fn ground_size(&self) -> u32 {
        self.n
    }

    pub fn uniformity(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn masks(&self) -> &[u64] {
        &self.members
    }

    pub fn member(&self, idx: usize) -> ElementSet {
        ElementSet::from_mask_unchecked(self.n, self.members[idx])
    }

    /// Members in canonical (ascending mask) order.
    pub fn members(&self) -> impl Iterator<Item = ElementSet> + '_ {
        let n = self.n;
        self.members
            .iter()
            .map(move |&m| ElementSet::from_mask_unchecked(n, m))
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    pub fn contains(&self, set: &ElementSet) -> bool {
        self.contains_mask(set.mask())
    }

    /// Whether every pair of members shares an element. Empty and singleton
    /// families are intersecting.
    pub fn is_intersecting(&self) -> bool {
        for (idx, a) in self.members.iter().enumerate() {
            for b in &self.members[idx + 1..] {
                if a & b == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// The smallest element contained in every member, if any. Rejects the
    /// empty family to surface misuse.
    pub fn common_element(&self) -> Result<Option<u32>> {
        if self.members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let core = self.members.iter().fold(!0u64, |acc, m| acc & m);
        Ok(if core == 0 {
            None
        } else {
            Some(core.trailing_zeros() + 1)
        })
    }

    /// All `k`-sets containing element 1.
    pub fn star(n: u32, k: u32) -> Result<Self> {
        require(n >= 2 * k, n, k, "n >= 2k")?;
        check_uniformity(n, k)?;
        let members = k_subset_masks(n, k).filter(|m| m & 1 == 1).collect();
        Ok(Self { n, k, members })
    }

    /// All `k`-sets containing 1 and meeting `{2, ..., k+1}`, plus the set
    /// `{2, ..., k+1}` itself.
    pub fn hilton_milner(n: u32, k: u32) -> Result<Self> {
        require(n >= 2 * k, n, k, "n >= 2k")?;
        check_uniformity(n, k)?;
        let block = low_mask(k + 1) & !1; // {2, ..., k+1}
        let mut members: Vec<u64> = k_subset_masks(n, k)
            .filter(|m| m & 1 == 1 && m & block != 0)
            .collect();
        members.push(block);
        members.sort_unstable();
        members.dedup();
        Ok(Self { n, k, members })
    }

    /// All 3-sets meeting `{1,2,3}` in at least two elements.
    pub fn k3_special(n: u32) -> Result<Self> {
        require(n >= 6, n, 3, "n >= 2k")?;
        let members = k_subset_masks(n, 3)
            .filter(|m| (m & 0b111).count_ones() >= 2)
            .collect();
        Ok(Self { n, k: 3, members })
    }

    /// Every `k`-subset of `[n]`.
    pub fn full_level(n: u32, k: u32) -> Result<Self> {
        check_uniformity(n, k)?;
        let members = k_subset_masks(n, k).collect();
        Ok(Self { n, k, members })
    }
}

fn check_uniformity(n: u32, k: u32) -> Result<()> {
    check_ground(n)?;
    if k == 0 || k > n {
        return Err(Error::InvalidUniformity { n, k });
    }
    Ok(())
}

fn require(cond: bool, n: u32, k: u32, constraint: &'static str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ParameterConstraint { n, k, constraint })
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, m) in self.members().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily(n={}, k={}, {})", self.n, self.k, self)
    }
}

/// The named extremal constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFamily {
    Star,
    HiltonMilner,
    K3Special,
    FullLevel,
}

impl FromStr for NamedFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "star" => Ok(Self::Star),
            "hm" => Ok(Self::HiltonMilner),
            "k3-special" => Ok(Self::K3Special),
            "full-level" => Ok(Self::FullLevel),
            other => Err(format!(
                "unknown family name {other:?} (expected star, hm, k3-special or full-level)"
            )),
        }
    }
}

pub fn make_named_family(which: NamedFamily, n: u32, k: u32) -> Result<SetFamily> {
    match which {
        NamedFamily::Star => SetFamily::star(n, k),
        NamedFamily::HiltonMilner => SetFamily::hilton_milner(n, k),
        NamedFamily::K3Special => {
            require(k == 3, n, k, "k = 3")?;
            SetFamily::k3_special(n)
        }
        NamedFamily::FullLevel => SetFamily::full_level(n, k),
    }
}
