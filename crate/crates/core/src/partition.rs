//! The canonical partition of a shifted intersecting family into type
//! classes, with head/tail projections, compression onto `[2k]`, and the
//! exact per-type counting bounds.
//!
//! A `k`-set `S` has type `i` for the smallest `i` in `[0, k-1]` with
//! `|S ∩ [2k-i-1]| >= k-i`; every member of a shifted intersecting family
//! has one. Minimality pins the structure exactly: `|S ∩ [2k-i-1]| = k-i`
//! and `2k-i` is absent, so `S` splits into a head inside `[2k-i-1]` and a
//! tail inside `[2k-i+1, n]`.

use num_bigint::BigUint;

use crate::bounds::binom;
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::set::{low_mask, ElementSet, MAX_GROUND_SET};

/// Mask of the window `[2k - level - 1]`.
pub(crate) fn head_window(k: u32, level: u32) -> u64 {
    debug_assert!(level < k);
    low_mask(2 * k - level - 1)
}

pub(crate) fn mask_type(mask: u64, k: u32) -> Option<u32> {
    (0..k).find(|&i| (mask & head_window(k, i)).count_ones() >= k - i)
}

/// The type index of `s`, or `None` when no window is full enough (possible
/// only for sets outside every shifted intersecting family).
pub fn type_index(s: &ElementSet) -> Option<u32> {
    mask_type(s.mask(), s.cardinality())
}

/// For a typeless set, the first `k` integers not in `s`: a set dominated by
/// `s` and disjoint from it, certifying that no shifted intersecting family
/// contains `s`. Returns `None` when `s` has a type.
pub fn find_disjoint_dominated(s: &ElementSet) -> Option<ElementSet> {
    if type_index(s).is_some() {
        return None;
    }
    let k = s.cardinality();
    let mut mask = 0u64;
    let mut count = 0;
    let mut e = 1u32;
    while count < k {
        if !s.contains(e) {
            mask |= 1 << (e - 1);
            count += 1;
        }
        e += 1;
    }
    // Coordinatewise the j-th absent integer sits below the j-th element of
    // a typeless s, so the witness stays inside the ground set.
    let t = ElementSet::from_mask(s.ground_size(), mask)
        .expect("witness elements never exceed the largest element of s");
    debug_assert!(t.is_disjoint(s));
    debug_assert!(crate::set::dominates(s, &t).unwrap());
    Some(t)
}

fn projection_ground(k: u32, level: u32) -> u32 {
    (2 * k - level - 1).min(MAX_GROUND_SET)
}

/// Splits a type-`level` set into its head inside `[2k-level-1]` and its
/// tail inside `[2k-level+1, n]`. Rejects sets of any other type.
pub fn project(s: &ElementSet, level: u32) -> Result<(ElementSet, ElementSet)> {
    if type_index(s) != Some(level) {
        return Err(Error::WrongType {
            set: *s,
            requested: level,
        });
    }
    let k = s.cardinality();
    let window = head_window(k, level);
    let head = ElementSet::from_mask(projection_ground(k, level), s.mask() & window)?;
    let tail = ElementSet::from_mask(s.ground_size(), s.mask() & !window)?;
    debug_assert_eq!(head.cardinality(), k - level);
    debug_assert_eq!(tail.cardinality(), level);
    debug_assert!(!tail.contains(2 * k - level));
    Ok((head, tail))
}

/// The decomposition of a family into its type classes together with the
/// per-class head projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypePartition {
    source: SetFamily,
    classes: Vec<SetFamily>,
    projections: Vec<SetFamily>,
}

impl TypePartition {
    pub fn source(&self) -> &SetFamily {
        &self.source
    }

    /// Class `i` holds the members of type `i`; classes are disjoint and
    /// cover the source family.
    pub fn classes(&self) -> &[SetFamily] {
        &self.classes
    }

    pub fn class(&self, level: u32) -> &SetFamily {
        &self.classes[level as usize]
    }

    /// Projection `i` is the deduplicated family of heads of class `i`,
    /// living inside `[2k-i-1]`.
    pub fn projections(&self) -> &[SetFamily] {
        &self.projections
    }

    pub fn projection(&self, level: u32) -> &SetFamily {
        &self.projections[level as usize]
    }

    pub fn projected_sum(&self) -> usize {
        self.projections.iter().map(SetFamily::len).sum()
    }
}

fn member_types(family: &SetFamily) -> Vec<Option<u32>> {
    family.members().map(|m| type_index(&m)).collect()
}

#[cfg(feature = "parallel")]
fn member_types_parallel(family: &SetFamily) -> Vec<Option<u32>> {
    use rayon::prelude::*;
    let n = family.ground_size();
    family
        .masks()
        .par_iter()
        .map(|&mask| type_index(&ElementSet::from_mask_unchecked(n, mask)))
        .collect()
}

fn assemble(family: &SetFamily, types: Vec<Option<u32>>) -> Result<TypePartition> {
    let n = family.ground_size();
    let k = family.uniformity();
    let mut class_masks: Vec<Vec<u64>> = vec![Vec::new(); k as usize];
    for (idx, ty) in types.into_iter().enumerate() {
        let member = family.member(idx);
        let Some(i) = ty else {
            return Err(Error::UntypedMember(member));
        };
        debug_assert_eq!((member.mask() & head_window(k, i)).count_ones(), k - i);
        debug_assert!(!member.contains(2 * k - i));
        class_masks[i as usize].push(member.mask());
    }
    let mut classes = Vec::with_capacity(k as usize);
    let mut projections = Vec::with_capacity(k as usize);
    for (i, masks) in class_masks.into_iter().enumerate() {
        let level = i as u32;
        let window = head_window(k, level);
        let heads: Vec<u64> = masks.iter().map(|m| m & window).collect();
        classes.push(SetFamily::from_masks(n, k, masks)?);
        projections.push(SetFamily::from_masks(
            projection_ground(k, level),
            k - level,
            heads,
        )?);
    }
    Ok(TypePartition {
        source: family.clone(),
        classes,
        projections,
    })
}

/// Partitions a family by type. Fails with the offending member if any set
/// has no type, which certifies the family is not both shifted and
/// intersecting.
pub fn partition(family: &SetFamily) -> Result<TypePartition> {
    #[cfg(feature = "parallel")]
    let types = member_types_parallel(family);
    #[cfg(not(feature = "parallel"))]
    let types = member_types(family);
    assemble(family, types)
}

/// Sequential variant of [`partition`].
pub fn partition_seq(family: &SetFamily) -> Result<TypePartition> {
    assemble(family, member_types(family))
}

/// Rebuilds each member as its head plus the forced tail `{2k-i+1, ..., 2k}`,
/// producing a `k`-uniform family on `[2k]` with exactly one member per
/// distinct head. The output of a shifted intersecting input is intersecting.
pub fn compress_to_2k(family: &SetFamily) -> Result<SetFamily> {
    let n = family.ground_size();
    let k = family.uniformity();
    if n < 2 * k {
        return Err(Error::ParameterConstraint {
            n,
            k,
            constraint: "n >= 2k",
        });
    }
    let parts = partition(family)?;
    let mut masks = Vec::new();
    for (i, proj) in parts.projections().iter().enumerate() {
        let level = i as u32;
        // {2k-i+1, ..., 2k}
        let forced_tail = low_mask(2 * k) & !low_mask(2 * k - level);
        for &head in proj.masks() {
            masks.push(head | forced_tail);
        }
    }
    let expected = parts.projected_sum();
    let out = SetFamily::from_masks(2 * k, k, masks)?;
    assert_eq!(
        out.len(),
        expected,
        "compressed members must stay distinct: outputs of different types \
         differ on the forced tail, and heads are distinct within a type"
    );
    Ok(out)
}

/// One row of the per-type counting report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeBoundsRow {
    pub level: u32,
    pub class_size: usize,
    pub projected_size: usize,
    /// `C(2k-i-2, k-i-1)`, the inductive cap on the projected family; no cap
    /// applies at level 0.
    pub projected_cap: Option<BigUint>,
    pub projected_ok: bool,
    /// `|projection| * C(n-2k+i, i)`, the tail-count cap on the class.
    pub member_cap: BigUint,
    pub member_ok: bool,
}

/// Per-type sizes and caps, plus the projected-sum bound `C(2k-1, k-1)`.
/// Every flag holds for every shifted intersecting family; a false flag
/// certifies invalid input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeBoundsReport {
    pub rows: Vec<TypeBoundsRow>,
    pub projected_sum: usize,
    pub projected_sum_cap: BigUint,
    pub projected_sum_ok: bool,
}

impl TypeBoundsReport {
    pub fn all_ok(&self) -> bool {
        self.projected_sum_ok && self.rows.iter().all(|r| r.projected_ok && r.member_ok)
    }
}

pub fn type_bounds_report(family: &SetFamily) -> Result<TypeBoundsReport> {
    let n = family.ground_size();
    let k = family.uniformity();
    if n < 2 * k {
        return Err(Error::ParameterConstraint {
            n,
            k,
            constraint: "n >= 2k",
        });
    }
    let parts = partition(family)?;
    let mut rows = Vec::with_capacity(k as usize);
    for level in 0..k {
        let class_size = parts.class(level).len();
        let projected_size = parts.projection(level).len();
        let projected_cap =
            (level >= 1).then(|| binom(u64::from(2 * k - level - 2), u64::from(k - level - 1)));
        let projected_ok = projected_cap
            .as_ref()
            .is_none_or(|cap| BigUint::from(projected_size) <= *cap);
        let member_cap =
            BigUint::from(projected_size) * binom(u64::from(n - 2 * k + level), u64::from(level));
        let member_ok = BigUint::from(class_size) <= member_cap;
        rows.push(TypeBoundsRow {
            level,
            class_size,
            projected_size,
            projected_cap,
            projected_ok,
            member_cap,
            member_ok,
        });
    }
    let projected_sum = parts.projected_sum();
    let projected_sum_cap = binom(u64::from(2 * k - 1), u64::from(k - 1));
    let projected_sum_ok = BigUint::from(projected_sum) <= projected_sum_cap;
    Ok(TypeBoundsReport {
        rows,
        projected_sum,
        projected_sum_cap,
        projected_sum_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::dominates;

    fn set(n: u32, els: &[u32]) -> ElementSet {
        ElementSet::from_elements(n, els).unwrap()
    }

    #[test]
    fn type_index_examples() {
        assert_eq!(type_index(&set(7, &[1, 2, 3])), Some(0));
        assert_eq!(type_index(&set(9, &[1, 5, 7, 8])), Some(2));
        assert_eq!(type_index(&set(7, &[2, 4, 6])), Some(1));
        assert_eq!(type_index(&set(7, &[4, 5, 6])), None);
    }

    #[test]
    fn disjoint_dominated_witness() {
        let s = set(7, &[4, 5, 6]);
        let t = find_disjoint_dominated(&s).unwrap();
        assert_eq!(t, set(7, &[1, 2, 3]));
        assert!(t.is_disjoint(&s));
        assert!(dominates(&s, &t).unwrap());
        assert_eq!(find_disjoint_dominated(&set(7, &[1, 2, 3])), None);
        assert_eq!(find_disjoint_dominated(&set(7, &[2, 4, 6])), None);
    }

    #[test]
    fn typeless_down_set_is_never_intersecting() {
        // a shifted family containing a typeless set also contains its
        // disjoint dominated witness
        let s = set(8, &[4, 6, 7]);
        assert_eq!(type_index(&s), None);
        let t = find_disjoint_dominated(&s).unwrap();
        let down = crate::set::dominated_sets(&s);
        let family = SetFamily::from_masks(8, 3, down.iter().map(|d| d.mask())).unwrap();
        assert!(family.contains(&t));
        assert!(!family.is_intersecting());
    }

    #[test]
    fn partition_of_the_star() {
        let star = SetFamily::star(5, 2).unwrap();
        let parts = partition(&star).unwrap();
        assert_eq!(
            parts.class(0),
            &SetFamily::new(5, 2, &[vec![1, 2], vec![1, 3]]).unwrap()
        );
        assert_eq!(
            parts.class(1),
            &SetFamily::new(5, 2, &[vec![1, 4], vec![1, 5]]).unwrap()
        );
        assert_eq!(
            parts.projection(1),
            &SetFamily::new(2, 1, &[vec![1]]).unwrap()
        );
        assert_eq!(parts.projected_sum(), 3);
    }

    #[test]
    fn partition_of_a_single_type_zero_set() {
        let f = SetFamily::new(7, 3, &[vec![1, 2, 3]]).unwrap();
        let parts = partition(&f).unwrap();
        assert_eq!(parts.class(0).len(), 1);
        assert!(parts.class(1).is_empty());
        assert!(parts.class(2).is_empty());
    }

    #[test]
    fn partition_reports_the_typeless_witness() {
        let f = SetFamily::new(7, 3, &[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert_eq!(partition(&f), Err(Error::UntypedMember(set(7, &[4, 5, 6]))));
        assert_eq!(
            partition_seq(&f),
            Err(Error::UntypedMember(set(7, &[4, 5, 6])))
        );
    }

    #[test]
    fn classes_cover_and_are_disjoint() {
        let hm = SetFamily::hilton_milner(9, 4).unwrap();
        let parts = partition(&hm).unwrap();
        assert_eq!(partition_seq(&hm).unwrap(), parts);
        let total: usize = parts.classes().iter().map(SetFamily::len).sum();
        assert_eq!(total, hm.len());
        for (i, class) in parts.classes().iter().enumerate() {
            for member in class.members() {
                assert_eq!(type_index(&member), Some(i as u32));
            }
        }
    }

    #[test]
    fn project_examples() {
        let (head, tail) = project(&set(5, &[1, 4]), 1).unwrap();
        assert_eq!(head.to_vec(), vec![1]);
        assert_eq!(tail.to_vec(), vec![4]);

        let (head, tail) = project(&set(7, &[1, 2, 3]), 0).unwrap();
        assert_eq!(head.to_vec(), vec![1, 2, 3]);
        assert!(tail.is_empty());

        let (head, tail) = project(&set(9, &[1, 5, 7, 8]), 2).unwrap();
        assert_eq!(head.to_vec(), vec![1, 5]);
        assert_eq!(tail.to_vec(), vec![7, 8]);
        assert_eq!(head.mask() | tail.mask(), set(9, &[1, 5, 7, 8]).mask());

        assert!(project(&set(5, &[1, 4]), 0).is_err());
    }

    #[test]
    fn compression_examples() {
        let star = SetFamily::star(5, 2).unwrap();
        let compressed = compress_to_2k(&star).unwrap();
        assert_eq!(
            compressed,
            SetFamily::new(4, 2, &[vec![1, 2], vec![1, 3], vec![1, 4]]).unwrap()
        );
        assert!(compressed.is_intersecting());

        let single = SetFamily::new(7, 3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(
            compress_to_2k(&single).unwrap(),
            SetFamily::new(6, 3, &[vec![1, 2, 3]]).unwrap()
        );

        let triangle = SetFamily::new(4, 2, &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        let compressed = compress_to_2k(&triangle).unwrap();
        assert_eq!(compressed.masks(), triangle.masks());
    }

    #[test]
    fn bounds_report_for_star() {
        let report = type_bounds_report(&SetFamily::star(7, 3).unwrap()).unwrap();
        let projected: Vec<usize> = report.rows.iter().map(|r| r.projected_size).collect();
        assert_eq!(projected, vec![6, 3, 1]);
        assert_eq!(report.rows[0].projected_cap, None);
        assert_eq!(report.rows[1].projected_cap, Some(BigUint::from(3u32)));
        assert_eq!(report.rows[2].projected_cap, Some(BigUint::from(1u32)));
        assert_eq!(report.projected_sum, 10);
        assert_eq!(report.projected_sum_cap, BigUint::from(10u32));
        assert!(report.all_ok());
    }

    #[test]
    fn bounds_report_for_hilton_milner() {
        let report = type_bounds_report(&SetFamily::hilton_milner(7, 3).unwrap()).unwrap();
        assert_eq!(report.rows[2].class_size, 0);
        assert_eq!(report.rows[2].projected_size, 0);
        assert!(report.all_ok());
    }

    #[test]
    fn bounds_report_for_a_singleton() {
        let f = SetFamily::new(7, 3, &[vec![1, 2, 3]]).unwrap();
        let report = type_bounds_report(&f).unwrap();
        let sizes: Vec<usize> = report.rows.iter().map(|r| r.class_size).collect();
        assert_eq!(sizes, vec![1, 0, 0]);
        assert!(report.all_ok());
    }

    #[test]
    fn projections_of_shifted_intersecting_families_are_intersecting() {
        for family in [
            SetFamily::star(9, 4).unwrap(),
            SetFamily::hilton_milner(9, 4).unwrap(),
            SetFamily::k3_special(8).unwrap(),
        ] {
            let parts = partition(&family).unwrap();
            for proj in parts.projections() {
                assert!(proj.is_intersecting());
            }
        }
    }
}
