//! Exact integer arithmetic for the counting identities behind the extremal
//! bounds, and full desk-scale verification of the Erdős–Ko–Rado and
//! Hilton–Milner theorems with their equality characterizations.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::generator::enumerate_maximal_shifted;
use crate::partition::partition;
use crate::set::{k_subset_masks, low_mask, ElementSet};

/// `C(n, k)` with arbitrary-precision exactness; zero when `k > n`.
/// Negative arguments are unrepresentable by construction.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        // exact at every step: the running product of j consecutive
        // integers is divisible by j!
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(n-1, k-1)`, the largest size of an intersecting `k`-uniform family on
/// `[n]` when `n >= 2k`.
pub fn ekr_bound(n: u32, k: u32) -> Result<BigUint> {
    if k == 0 || n < 2 * k {
        return Err(Error::ParameterConstraint {
            n,
            k,
            constraint: "n >= 2k >= 2",
        });
    }
    Ok(binom(u64::from(n - 1), u64::from(k - 1)))
}

/// `C(n-1, k-1) - C(n-k-1, k-1) + 1`, the largest size when additionally no
/// element lies in every member and `n > 2k`.
pub fn hm_bound(n: u32, k: u32) -> Result<BigUint> {
    if k < 2 || n <= 2 * k {
        return Err(Error::ParameterConstraint {
            n,
            k,
            constraint: "n > 2k >= 4",
        });
    }
    let total = binom(u64::from(n - 1), u64::from(k - 1));
    let missing = binom(u64::from(n - k - 1), u64::from(k - 1));
    Ok(total - missing + BigUint::from(1u32))
}

/// Two sides of an exact identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Checks `C(2k-2, k-1) + sum_{i=1}^{k-1} C(2k-i-2, k-1) = C(2k-1, k-1)`
/// (a hockey-stick rearrangement) with exact arithmetic.
pub fn identity_star(k: u32) -> Result<IdentityReport> {
    if k == 0 {
        return Err(Error::ParameterConstraint {
            n: 0,
            k,
            constraint: "k >= 1",
        });
    }
    let k = u64::from(k);
    let mut lhs = binom(2 * k - 2, k - 1);
    for i in 1..k {
        lhs += binom(2 * k - i - 2, k - 1);
    }
    let rhs = binom(2 * k - 1, k - 1);
    Ok(IdentityReport { lhs, rhs })
}

/// Per-class counts from the subset classification backing the product
/// identity: class `i` collects the `(k-1)`-subsets of `[n-1]` whose largest
/// qualifying window index is `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub class_counts: Vec<u64>,
    pub class_expected: Vec<BigUint>,
    /// Every classified subset also decomposed cleanly (exact window count,
    /// boundary element absent, remainder in the low window).
    pub structure_ok: bool,
}

impl ClassificationReport {
    pub fn holds(&self) -> bool {
        self.structure_ok
            && self
                .class_counts
                .iter()
                .zip(&self.class_expected)
                .all(|(got, want)| BigUint::from(*got) == *want)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductIdentityReport {
    pub identity: IdentityReport,
    /// Present when the subset enumeration is desk-scale.
    pub classification: Option<ClassificationReport>,
}

impl ProductIdentityReport {
    pub fn holds(&self) -> bool {
        self.identity.holds()
            && self
                .classification
                .as_ref()
                .is_none_or(ClassificationReport::holds)
    }
}

/// Enumerating all `C(n-1, k-1)` subsets stays cheap below this cap; the
/// classification cross-check is skipped above it.
pub const CLASSIFICATION_CAP: u64 = 2_000;

/// Checks `sum_{i=0}^{k-1} C(2k-i-2, k-i-1) C(n-2k+i, i) = C(n-1, k-1)` with
/// exact arithmetic, and at desk scale cross-checks the combinatorial
/// justification by classifying every `(k-1)`-subset of `[n-1]` by the
/// largest `i` with at least `i` elements in `[2k-i, n-1]`.
pub fn identity_product(n: u32, k: u32) -> Result<ProductIdentityReport> {
    if k == 0 || n < 2 * k {
        return Err(Error::ParameterConstraint {
            n,
            k,
            constraint: "n >= 2k >= 2",
        });
    }
    let (n64, k64) = (u64::from(n), u64::from(k));
    let mut lhs = BigUint::from(0u32);
    let mut summands = Vec::with_capacity(k as usize);
    for i in 0..k64 {
        let term = binom(2 * k64 - i - 2, k64 - i - 1) * binom(n64 - 2 * k64 + i, i);
        summands.push(term.clone());
        lhs += term;
    }
    let rhs = binom(n64 - 1, k64 - 1);
    // subsets of [n-1] must fit a mask word
    let enumerable =
        n - 1 <= crate::set::MAX_GROUND_SET && rhs <= BigUint::from(CLASSIFICATION_CAP);
    let classification = enumerable.then(|| classify_subsets(n, k, &summands));
    Ok(ProductIdentityReport {
        identity: IdentityReport { lhs, rhs },
        classification,
    })
}

fn classify_subsets(n: u32, k: u32, summands: &[BigUint]) -> ClassificationReport {
    let mut class_counts = vec![0u64; k as usize];
    let mut structure_ok = true;
    for mask in k_subset_masks(n - 1, k - 1) {
        // largest i in [0, k-1] with at least i elements inside [2k-i, n-1];
        // i = 0 always qualifies
        let mut chosen = 0;
        for i in (1..k).rev() {
            let high_window = low_mask(n - 1) & !low_mask(2 * k - i - 1);
            if (mask & high_window).count_ones() >= i {
                chosen = i;
                break;
            }
        }
        let i = chosen;
        let high_window = low_mask(n - 1) & !low_mask(2 * k - i - 1);
        let low_window = low_mask(2 * k - i - 2);
        let boundary = 2 * k - i - 1;
        let clean = (mask & high_window).count_ones() == i
            && mask >> (boundary - 1) & 1 == 0
            && (mask & low_window).count_ones() == k - i - 1;
        structure_ok &= clean;
        class_counts[i as usize] += 1;
    }
    ClassificationReport {
        class_counts,
        class_expected: summands.to_vec(),
        structure_ok,
    }
}

/// One named pass/fail entry inside a verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

impl Check {
    fn pass(name: &'static str) -> Self {
        Check {
            name,
            pass: true,
            witness: None,
        }
    }

    fn fail(name: &'static str, witness: String) -> Self {
        Check {
            name,
            pass: false,
            witness: Some(witness),
        }
    }

    fn from(name: &'static str, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }
}

/// Outcome of one theorem verification at fixed `(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: u32,
    pub k: u32,
    pub bound: BigUint,
    /// Largest family size the enumeration achieved.
    pub achieved: BigUint,
    /// Shifted representatives attaining the bound, canonically ordered.
    pub extremal: Vec<SetFamily>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Verifies the intersecting-family bound `C(n-1, k-1)` by enumerating all
/// maximal shifted intersecting families on `[n]`, and for `n > 2k` that the
/// star is the unique shifted family attaining it.
pub fn verify_ekr(n: u32, k: u32) -> Result<VerificationReport> {
    if k == 0 || n < 2 * k {
        return Err(Error::ParameterConstraint {
            n,
            k,
            constraint: "n >= 2k >= 2",
        });
    }
    let bound = ekr_bound(n, k)?;
    let families = enumerate_maximal_shifted(n, k)?;
    let achieved = BigUint::from(families.iter().map(SetFamily::len).max().unwrap_or(0));
    let extremal: Vec<SetFamily> = families
        .iter()
        .filter(|f| BigUint::from(f.len()) == bound)
        .cloned()
        .collect();

    let mut checks = Vec::new();
    let oversized = families.iter().find(|f| BigUint::from(f.len()) > bound);
    checks.push(Check::from(
        "all_sizes_within_bound",
        oversized.is_none(),
        || {
            format!(
                "family of size {} exceeds the bound",
                oversized.unwrap().len()
            )
        },
    ));
    checks.push(Check::from("bound_attained", achieved == bound, || {
        format!("maximum size {achieved} differs from bound {bound}")
    }));
    let mut notes = Vec::new();
    if n > 2 * k {
        let star = SetFamily::star(n, k)?;
        checks.push(Check::from(
            "unique_extremal_is_star",
            extremal.len() == 1 && extremal[0] == star,
            || format!("extremal families: {extremal:?}"),
        ));
    } else {
        notes.push(format!(
            "n = 2k: the bound is attained by {} families; uniqueness does not apply",
            extremal.len()
        ));
    }
    Ok(VerificationReport {
        n,
        k,
        bound,
        achieved,
        extremal,
        checks,
        notes,
    })
}

/// `{2, ..., k+1}` as a set over `[n]`: the member forced into every shifted
/// intersecting family with empty common intersection.
fn forced_member(n: u32, k: u32) -> ElementSet {
    ElementSet::from_mask(n, low_mask(k + 1) & !1).expect("k + 1 <= n")
}

/// The triangle `{{1,2},{1,3},{2,3}}`, the 2-uniform extremal family.
fn triangle(n: u32) -> Result<SetFamily> {
    SetFamily::new(n, 2, &[vec![1, 2], vec![1, 3], vec![2, 3]])
}

/// Verifies the empty-core bound `C(n-1,k-1) - C(n-k-1,k-1) + 1` over all
/// maximal shifted intersecting families without a common element, together
/// with the equality characterization (the Hilton–Milner family for `k >= 4`,
/// that family or the `k3-special` one for `k = 3`, the triangle for `k = 2`)
/// and the two structural facts behind the proof: the forced member
/// `{2, ..., k+1}` is present and the top type class is empty.
pub fn verify_hm(n: u32, k: u32) -> Result<VerificationReport> {
    if k < 2 || n <= 2 * k {
        return Err(Error::ParameterConstraint {
            n,
            k,
            constraint: "n > 2k >= 4 (k = 2 supported)",
        });
    }
    let bound = hm_bound(n, k)?;
    let families = enumerate_maximal_shifted(n, k)?;
    let empty_core: Vec<&SetFamily> = families
        .iter()
        .filter(|f| f.common_element().ok() == Some(None))
        .collect();
    let achieved = BigUint::from(empty_core.iter().map(|f| f.len()).max().unwrap_or(0));
    let extremal: Vec<SetFamily> = empty_core
        .iter()
        .filter(|f| BigUint::from(f.len()) == bound)
        .map(|f| (*f).clone())
        .collect();

    let mut checks = Vec::new();
    let oversized = empty_core.iter().find(|f| BigUint::from(f.len()) > bound);
    checks.push(Check::from(
        "all_sizes_within_bound",
        oversized.is_none(),
        || {
            format!(
                "family of size {} exceeds the bound",
                oversized.unwrap().len()
            )
        },
    ));
    checks.push(Check::from("bound_attained", achieved == bound, || {
        format!("maximum size {achieved} differs from bound {bound}")
    }));

    let mut expected = match k {
        2 => vec![triangle(n)?],
        3 => vec![SetFamily::hilton_milner(n, 3)?, SetFamily::k3_special(n)?],
        _ => vec![SetFamily::hilton_milner(n, k)?],
    };
    expected.sort();
    checks.push(Check::from(
        "extremal_set_matches",
        extremal == expected,
        || format!("expected {expected:?}, found {extremal:?}"),
    ));

    let forced = forced_member(n, k);
    let missing_forced = empty_core.iter().find(|f| !f.contains(&forced));
    checks.push(Check::from(
        "forced_member_present",
        missing_forced.is_none(),
        || format!("{} lacks {forced}", missing_forced.unwrap()),
    ));

    let mut top_class_witness = None;
    for f in &empty_core {
        let parts = partition(f)?;
        if !parts.class(k - 1).is_empty() {
            top_class_witness = Some((*f).clone());
            break;
        }
    }
    checks.push(Check::from(
        "top_type_class_empty",
        top_class_witness.is_none(),
        || {
            format!(
                "{:?} has members of type k-1",
                top_class_witness.as_ref().unwrap()
            )
        },
    ));

    if k >= 4 {
        // the two structural steps of the equality argument
        let witness_set = {
            // {1, k+1, k+3, ..., 2k}
            let mut els = vec![1, k + 1];
            els.extend(k + 3..=2 * k);
            ElementSet::from_elements(n, &els)?
        };
        let excluded_set = {
            // {2, ..., k, k+2}
            let mut els: Vec<u32> = (2..=k).collect();
            els.push(k + 2);
            ElementSet::from_elements(n, &els)?
        };
        let bad = extremal
            .iter()
            .find(|f| !f.contains(&witness_set) || f.contains(&excluded_set));
        checks.push(Check::from("extremal_structure", bad.is_none(), || {
            format!("{:?} fails the structural membership checks", bad.unwrap())
        }));
    }

    let mut notes = Vec::new();
    if k == 2 {
        notes.push(
            "k = 2 lies outside the stated equality characterization (k >= 3); \
             the triangle is the expected extremal family"
                .to_string(),
        );
    }
    Ok(VerificationReport {
        n,
        k,
        bound,
        achieved,
        extremal,
        checks,
        notes,
    })
}
