//! Level generators: the compact encoding of maximal shifted intersecting
//! families over `[2k-1]`, slot expansion back to `[n]`, and exhaustive
//! enumeration of all valid generators at desk scale.
//!
//! A slot is a pair (level `i`, head `A` of size `k-i` inside `[2k-i-1]`);
//! its expansion is every `k`-set with that exact head, element `2k-i`
//! absent, and the remaining `i` elements drawn from `[2k-i+1, n]`. Every
//! typed `k`-set belongs to exactly one slot, and a maximal shifted
//! intersecting family is a union of whole slots, so enumerating such
//! families reduces to a search over slot subsets.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::partition::{head_window, mask_type, partition, type_index};
use crate::set::{k_subset_masks, k_subsets_of, low_mask, ElementSet, MAX_GROUND_SET};
use crate::shift::is_shifted;

/// Generator enumeration is exponential in the slot universe; `k <= 4` keeps
/// it at 69 candidate heads.
pub const MAX_GENERATOR_UNIFORMITY: u32 = 4;
/// Ground-set cap for enumeration; all acceptance scales sit well below it.
pub const MAX_ENUMERATION_GROUND: u32 = 13;

/// A level-structured system `G = G_0 ∪ ... ∪ G_{k-1}` over `[2k-1]`, where
/// level `i` holds `(k-i)`-sets inside `[2k-i-1]`. The union is pairwise
/// intersecting across levels and shifted (each level is downward closed
/// under dominance).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    k: u32,
    levels: Vec<SetFamily>,
}

impl Generator {
    pub fn new(k: u32, levels: Vec<SetFamily>) -> Result<Self> {
        if k == 0 || 2 * k - 1 > MAX_GROUND_SET {
            return Err(Error::InvalidGenerator(format!(
                "uniformity {k} outside the representable range"
            )));
        }
        if levels.len() != k as usize {
            return Err(Error::InvalidGenerator(format!(
                "expected {k} levels, got {}",
                levels.len()
            )));
        }
        for (i, lvl) in levels.iter().enumerate() {
            let level = i as u32;
            if lvl.ground_size() != 2 * k - level - 1 || lvl.uniformity() != k - level {
                return Err(Error::InvalidGenerator(format!(
                    "level {level} must hold ({})-sets inside [{}], got ({})-sets inside [{}]",
                    k - level,
                    2 * k - level - 1,
                    lvl.uniformity(),
                    lvl.ground_size()
                )));
            }
        }
        let all: Vec<u64> = levels
            .iter()
            .flat_map(|l| l.masks().iter().copied())
            .collect();
        for (idx, a) in all.iter().enumerate() {
            for b in &all[idx + 1..] {
                if a & b == 0 {
                    return Err(Error::InvalidGenerator(format!(
                        "union is not intersecting: {} and {} are disjoint",
                        ElementSet::from_mask_unchecked(2 * k - 1, *a),
                        ElementSet::from_mask_unchecked(2 * k - 1, *b)
                    )));
                }
            }
        }
        for lvl in &levels {
            if !is_shifted(lvl) {
                return Err(Error::InvalidGenerator(format!(
                    "union is not shifted: level family {lvl} is not"
                )));
            }
        }
        Ok(Self { k, levels })
    }

    pub fn uniformity(&self) -> u32 {
        self.k
    }

    pub fn levels(&self) -> &[SetFamily] {
        &self.levels
    }

    pub fn level(&self, i: u32) -> &SetFamily {
        &self.levels[i as usize]
    }

    /// Total number of heads across all levels.
    pub fn len(&self) -> usize {
        self.levels.iter().map(SetFamily::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.iter().all(SetFamily::is_empty)
    }
}

fn check_expansion_params(n: u32, k: u32, level: u32) -> Result<()> {
    if k == 0 || level >= k {
        return Err(Error::InvalidGenerator(format!(
            "level {level} outside [0, k-1] for k = {k}"
        )));
    }
    if n < 2 * k || n > MAX_GROUND_SET {
        return Err(Error::ParameterConstraint {
            n,
            k,
            constraint: "2k <= n <= 64",
        });
    }
    Ok(())
}

/// Mask of the tail window `[2k-level+1, n]`.
fn tail_window(n: u32, k: u32, level: u32) -> u64 {
    low_mask(n) & !low_mask(2 * k - level)
}

/// All `k`-sets over `[n]` whose head inside `[2k-level-1]` is exactly
/// `head` and whose remaining `level` elements lie in `[2k-level+1, n]`.
/// The list has `C(n-2k+level, level)` members, ascending.
pub fn expand_slot(head: &ElementSet, level: u32, n: u32, k: u32) -> Result<Vec<ElementSet>> {
    check_expansion_params(n, k, level)?;
    if head.cardinality() != k - level {
        return Err(Error::WrongCardinality {
            expected: k - level,
            got: head.cardinality(),
        });
    }
    if head.mask() & !head_window(k, level) != 0 {
        return Err(Error::InvalidGenerator(format!(
            "slot head {head} must lie inside [{}]",
            2 * k - level - 1
        )));
    }
    let tails = k_subsets_of(tail_window(n, k, level), level);
    Ok(tails
        .into_iter()
        .map(|t| ElementSet::from_mask_unchecked(n, head.mask() | t))
        .collect())
}

fn small_choose(n: u32, k: u32) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..u128::from(k.min(n - k)) {
        acc = acc * (u128::from(n) - i) / (i + 1);
    }
    acc as usize
}

/// Expands every slot of `g` over `[n]` and unions the results. For a valid
/// generator this recovers the encoded maximal shifted intersecting family.
pub fn family_from_generator(g: &Generator, n: u32) -> Result<SetFamily> {
    let k = g.uniformity();
    check_expansion_params(n, k, 0)?;
    let mut masks = Vec::new();
    let mut expected = 0usize;
    for (i, lvl) in g.levels().iter().enumerate() {
        let level = i as u32;
        let window = tail_window(n, k, level);
        let tails = k_subsets_of(window, level);
        expected += lvl.len() * small_choose(n - 2 * k + level, level);
        for &head in lvl.masks() {
            for &t in &tails {
                masks.push(head | t);
            }
        }
    }
    let out = SetFamily::from_masks(n, k, masks)?;
    assert_eq!(
        out.len(),
        expected,
        "slot expansions must stay disjoint across slots"
    );
    Ok(out)
}

/// Reads the generator off a shifted intersecting family: level `i` is the
/// deduplicated family of heads of the type-`i` class.
pub fn generator_from_family(family: &SetFamily) -> Result<Generator> {
    let k = family.uniformity();
    if 2 * k - 1 > MAX_GROUND_SET {
        return Err(Error::InvalidGenerator(format!(
            "uniformity {k} outside the representable range"
        )));
    }
    let parts = partition(family)?;
    Generator::new(k, parts.projections().to_vec())
}

/// Why a generator's expansion fails to be a maximal shifted intersecting
/// family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorViolation {
    /// Two expanded members are disjoint.
    DisjointMembers {
        first: ElementSet,
        second: ElementSet,
    },
    /// A `k`-set outside the expansion meets every member.
    AddableSet { witness: ElementSet },
    /// A shift of a member leaves the expansion.
    MissingShiftTarget {
        member: ElementSet,
        missing: ElementSet,
    },
}

impl GeneratorViolation {
    /// The headline set of the violation.
    pub fn witness(&self) -> ElementSet {
        match self {
            Self::DisjointMembers { second, .. } => *second,
            Self::AddableSet { witness } => *witness,
            Self::MissingShiftTarget { missing, .. } => *missing,
        }
    }
}

impl std::fmt::Display for GeneratorViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::DisjointMembers { first, second } => {
                write!(f, "members {first} and {second} are disjoint")
            }
            Self::AddableSet { witness } => write!(f, "{witness} is addable"),
            Self::MissingShiftTarget { member, missing } => {
                write!(f, "shift target {missing} of {member} is not a member")
            }
        }
    }
}

/// Checks whether the expansion of `g` over `[n]` is intersecting, maximal
/// (no `k`-set can be added), and shifted; reports the first violation
/// otherwise. This is the operational domain of the generator encoding.
pub fn generator_violation(g: &Generator, n: u32) -> Result<Option<GeneratorViolation>> {
    let family = family_from_generator(g, n)?;
    let k = family.uniformity();
    let masks = family.masks();
    for (idx, a) in masks.iter().enumerate() {
        for b in &masks[idx + 1..] {
            if a & b == 0 {
                return Ok(Some(GeneratorViolation::DisjointMembers {
                    first: ElementSet::from_mask_unchecked(n, *a),
                    second: ElementSet::from_mask_unchecked(n, *b),
                }));
            }
        }
    }
    for candidate in k_subset_masks(n, k) {
        if !family.contains_mask(candidate) && masks.iter().all(|m| m & candidate != 0) {
            return Ok(Some(GeneratorViolation::AddableSet {
                witness: ElementSet::from_mask_unchecked(n, candidate),
            }));
        }
    }
    for &m in masks {
        let mut present = m;
        while present != 0 {
            let j = present.trailing_zeros() + 1;
            present &= present - 1;
            let mut absent = !m & low_mask(j - 1);
            while absent != 0 {
                let i = absent.trailing_zeros() + 1;
                absent &= absent - 1;
                let swapped = (m ^ (1 << (j - 1))) | (1 << (i - 1));
                if !family.contains_mask(swapped) {
                    return Ok(Some(GeneratorViolation::MissingShiftTarget {
                        member: ElementSet::from_mask_unchecked(n, m),
                        missing: ElementSet::from_mask_unchecked(n, swapped),
                    }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_valid_generator(g: &Generator, n: u32) -> Result<bool> {
    Ok(generator_violation(g, n)?.is_none())
}

/// Checks that the family contains the whole slot of each of its members:
/// for every member of type `i`, every expansion of its head is present.
/// Holds for every maximal shifted intersecting family; returns the first
/// missing expansion otherwise.
pub fn check_slot_closure(family: &SetFamily) -> Result<Option<ElementSet>> {
    let n = family.ground_size();
    let k = family.uniformity();
    let mut seen: Vec<(u32, u64)> = Vec::new();
    for member in family.members() {
        let Some(level) = type_index(&member) else {
            return Err(Error::UntypedMember(member));
        };
        let head_mask = member.mask() & head_window(k, level);
        if seen.contains(&(level, head_mask)) {
            continue;
        }
        seen.push((level, head_mask));
        let head = ElementSet::from_mask((2 * k - level - 1).min(MAX_GROUND_SET), head_mask)?;
        for expanded in expand_slot(&head, level, n, k)? {
            if !family.contains(&expanded) {
                return Ok(Some(expanded));
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Enumeration: a depth-first search over the slot universe, level-major
// (highest level first) and canonical within a level. Decisions propagate
// four exact constraints, so every leaf is a valid generator:
//   - down-closure: a head is includable only when all its same-level
//     dominance predecessors are included;
//   - intersection: including a head kills every head disjoint from it;
//   - shifted closure: including a slot forces the lower-level slots its
//     members shift into (`required`);
//   - maximality: every k-set owned by a dead slot, and every typeless
//     k-set, must end up blocked by an included member that is disjoint
//     from it; a branch dies as soon as some such set can no longer be
//     blocked.
// ---------------------------------------------------------------------------

struct SearchCtx {
    count: usize,
    universe: u128,
    level_of: Vec<u32>,
    head_of: Vec<u64>,
    /// Strict same-level dominance predecessors.
    preds: Vec<u128>,
    /// Strict same-level dominance successors.
    succs: Vec<u128>,
    /// Slots whose head intersects this slot's head.
    compat: Vec<u128>,
    /// Lower-level slots forced by including this slot, closed under
    /// predecessors.
    required_by: Vec<u128>,
    kset_owner: Vec<Option<u16>>,
    /// Slots owning at least one member disjoint from this k-set.
    kset_blockers: Vec<u128>,
    k: u32,
}

fn mask_dominates(upper: u64, lower: u64) -> bool {
    debug_assert_eq!(upper.count_ones(), lower.count_ones());
    // b ⪯ a iff every prefix [t] holds at least as many elements of b as of a
    let mut a = upper;
    let mut b = lower;
    loop {
        if a == 0 {
            return true;
        }
        let ta = a.trailing_zeros();
        let tb = b.trailing_zeros();
        if tb > ta {
            return false;
        }
        a &= a - 1;
        b &= b - 1;
    }
}

fn build_ctx(k: u32, n: u32) -> SearchCtx {
    let mut level_of = Vec::new();
    let mut head_of = Vec::new();
    for level in (0..k).rev() {
        for head in k_subsets_of(head_window(k, level), k - level) {
            level_of.push(level);
            head_of.push(head);
        }
    }
    let count = head_of.len();
    debug_assert!(count <= 128);
    let universe = if count == 128 {
        !0u128
    } else {
        (1u128 << count) - 1
    };

    let mut slot_id: HashMap<(u32, u64), u16> = HashMap::new();
    for s in 0..count {
        slot_id.insert((level_of[s], head_of[s]), s as u16);
    }

    let mut preds = vec![0u128; count];
    let mut succs = vec![0u128; count];
    let mut compat = vec![0u128; count];
    for s in 0..count {
        for t in 0..count {
            if head_of[s] & head_of[t] != 0 {
                compat[s] |= 1 << t;
            }
            if s != t && level_of[s] == level_of[t] && mask_dominates(head_of[s], head_of[t]) {
                preds[s] |= 1 << t;
                succs[t] |= 1 << s;
            }
        }
    }

    let members: Vec<Vec<u64>> = (0..count)
        .map(|s| {
            k_subsets_of(tail_window(n, k, level_of[s]), level_of[s])
                .into_iter()
                .map(|t| head_of[s] | t)
                .collect()
        })
        .collect();

    let mut required_by = vec![0u128; count];
    for s in 0..count {
        let level = level_of[s];
        let boundary = low_mask(2 * k - level);
        let mut targets = 0u128;
        for &m in &members[s] {
            let tail = m & !head_window(k, level);
            let mut high = tail;
            while high != 0 {
                let b = high.trailing_zeros() + 1;
                high &= high - 1;
                let mut low = boundary & !m;
                while low != 0 {
                    let a = low.trailing_zeros() + 1;
                    low &= low - 1;
                    let shifted = (m ^ (1u64 << (b - 1))) | (1u64 << (a - 1));
                    let ty = mask_type(shifted, k)
                        .expect("down-shift of a slot member always has a type");
                    debug_assert!(ty < level);
                    let head = shifted & head_window(k, ty);
                    let t = slot_id[&(ty, head)];
                    targets |= 1 << t;
                }
            }
        }
        let mut closed = targets;
        let mut rest = targets;
        while rest != 0 {
            let t = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            closed |= preds[t];
        }
        required_by[s] = closed;
    }

    let ksets: Vec<u64> = k_subset_masks(n, k).collect();
    let kset_owner: Vec<Option<u16>> = ksets
        .iter()
        .map(|&m| mask_type(m, k).map(|ty| slot_id[&(ty, m & head_window(k, ty))]))
        .collect();
    let mut kset_blockers = vec![0u128; ksets.len()];
    for (s, slot_members) in members.iter().enumerate() {
        for &m in slot_members {
            for (idx, &b) in ksets.iter().enumerate() {
                if m & b == 0 {
                    kset_blockers[idx] |= 1 << s;
                }
            }
        }
    }

    SearchCtx {
        count,
        universe,
        level_of,
        head_of,
        preds,
        succs,
        compat,
        required_by,
        kset_owner,
        kset_blockers,
        k,
    }
}

#[derive(Clone, Copy)]
struct SearchState {
    included: u128,
    dead: u128,
    required: u128,
    pos: u16,
}

impl SearchState {
    fn root() -> Self {
        SearchState {
            included: 0,
            dead: 0,
            required: 0,
            pos: 0,
        }
    }
}

/// Every k-set owned by a dead slot (and every typeless one) must be blocked
/// by an included member or still blockable by an undecided slot.
fn admissible(ctx: &SearchCtx, included: u128, dead: u128) -> bool {
    let alive = ctx.universe & !included & !dead;
    ctx.kset_owner
        .iter()
        .zip(&ctx.kset_blockers)
        .all(|(owner, blockers)| {
            let must_block = match owner {
                None => true,
                Some(s) => dead >> s & 1 == 1,
            };
            !must_block || blockers & included != 0 || blockers & alive != 0
        })
}

enum Node {
    Leaf(u128),
    Inner(Option<SearchState>, Option<SearchState>),
}

fn advance(ctx: &SearchCtx, st: SearchState) -> Node {
    let mut pos = st.pos as usize;
    while pos < ctx.count && st.dead >> pos & 1 == 1 {
        pos += 1;
    }
    if pos == ctx.count {
        return Node::Leaf(st.included);
    }
    let sbit = 1u128 << pos;

    let include = if ctx.preds[pos] & !st.included == 0 && ctx.required_by[pos] & st.dead == 0 {
        let included = st.included | sbit;
        let alive = ctx.universe & !included & !st.dead;
        // heads disjoint from pos can never join; their successors die with
        // them (dominance is transitive, so one pass of succs suffices)
        let mut kills = alive & !ctx.compat[pos];
        let mut rest = kills;
        while rest != 0 {
            let t = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            kills |= ctx.succs[t];
        }
        let dead = st.dead | kills;
        let required = st.required | ctx.required_by[pos];
        (required & dead == 0 && admissible(ctx, included, dead)).then_some(SearchState {
            included,
            dead,
            required,
            pos: pos as u16 + 1,
        })
    } else {
        None
    };

    let exclude = if st.required & sbit == 0 {
        let dead = st.dead | sbit | ctx.succs[pos];
        (st.required & dead == 0 && admissible(ctx, st.included, dead)).then_some(SearchState {
            included: st.included,
            dead,
            required: st.required,
            pos: pos as u16 + 1,
        })
    } else {
        None
    };

    Node::Inner(include, exclude)
}

fn search_seq(ctx: &SearchCtx, st: SearchState, out: &mut Vec<u128>) {
    match advance(ctx, st) {
        Node::Leaf(mask) => out.push(mask),
        Node::Inner(include, exclude) => {
            if let Some(next) = include {
                search_seq(ctx, next, out);
            }
            if let Some(next) = exclude {
                search_seq(ctx, next, out);
            }
        }
    }
}

#[cfg(feature = "parallel")]
const PAR_SPLIT_DEPTH: u32 = 12;

#[cfg(feature = "parallel")]
fn search_par(ctx: &SearchCtx, st: SearchState, depth: u32) -> Vec<u128> {
    match advance(ctx, st) {
        Node::Leaf(mask) => vec![mask],
        Node::Inner(Some(a), Some(b)) if depth < PAR_SPLIT_DEPTH => {
            let (mut left, right) = rayon::join(
                || search_par(ctx, a, depth + 1),
                || search_par(ctx, b, depth + 1),
            );
            left.extend(right);
            left
        }
        Node::Inner(include, exclude) => {
            let mut out = Vec::new();
            if let Some(next) = include {
                search_seq(ctx, next, &mut out);
            }
            if let Some(next) = exclude {
                search_seq(ctx, next, &mut out);
            }
            out
        }
    }
}

fn check_enumeration_caps(k: u32, n: u32) -> Result<()> {
    if k == 0 || k > MAX_GENERATOR_UNIFORMITY {
        return Err(Error::ScaleCap(format!(
            "generator enumeration supports 1 <= k <= {MAX_GENERATOR_UNIFORMITY}, got k = {k}"
        )));
    }
    if n < 2 * k {
        return Err(Error::ParameterConstraint {
            n,
            k,
            constraint: "n >= 2k",
        });
    }
    if n > MAX_ENUMERATION_GROUND {
        return Err(Error::ScaleCap(format!(
            "enumeration supports n <= {MAX_ENUMERATION_GROUND}, got n = {n}"
        )));
    }
    Ok(())
}

fn generators_from_masks(ctx: &SearchCtx, mut masks: Vec<u128>) -> Vec<Generator> {
    masks.sort_unstable();
    masks.dedup();
    let k = ctx.k;
    let mut out: Vec<Generator> = masks
        .into_iter()
        .map(|included| {
            let mut level_masks: Vec<Vec<u64>> = vec![Vec::new(); k as usize];
            for s in 0..ctx.count {
                if included >> s & 1 == 1 {
                    level_masks[ctx.level_of[s] as usize].push(ctx.head_of[s]);
                }
            }
            let levels: Vec<SetFamily> = level_masks
                .into_iter()
                .enumerate()
                .map(|(i, heads)| {
                    let level = i as u32;
                    SetFamily::from_masks(2 * k - level - 1, k - level, heads)
                        .expect("heads lie inside their level windows")
                })
                .collect();
            Generator::new(k, levels).expect("search leaves satisfy the generator invariants")
        })
        .collect();
    out.sort();
    out
}

/// Enumerates every generator whose expansion over `[n]` is a maximal
/// shifted intersecting family, canonically ordered.
pub fn enumerate_generators(k: u32, n: u32) -> Result<Vec<Generator>> {
    check_enumeration_caps(k, n)?;
    let ctx = build_ctx(k, n);
    #[cfg(feature = "parallel")]
    let masks = search_par(&ctx, SearchState::root(), 0);
    #[cfg(not(feature = "parallel"))]
    let masks = {
        let mut out = Vec::new();
        search_seq(&ctx, SearchState::root(), &mut out);
        out
    };
    Ok(generators_from_masks(&ctx, masks))
}

/// Sequential variant of [`enumerate_generators`].
pub fn enumerate_generators_seq(k: u32, n: u32) -> Result<Vec<Generator>> {
    check_enumeration_caps(k, n)?;
    let ctx = build_ctx(k, n);
    let mut masks = Vec::new();
    search_seq(&ctx, SearchState::root(), &mut masks);
    Ok(generators_from_masks(&ctx, masks))
}

/// All maximal shifted intersecting `k`-uniform families on `[n]`,
/// canonically ordered: the expansions of all valid generators.
pub fn enumerate_maximal_shifted(n: u32, k: u32) -> Result<Vec<SetFamily>> {
    let generators = enumerate_generators(k, n)?;
    expand_all(generators, n)
}

/// Sequential variant of [`enumerate_maximal_shifted`].
pub fn enumerate_maximal_shifted_seq(n: u32, k: u32) -> Result<Vec<SetFamily>> {
    let generators = enumerate_generators_seq(k, n)?;
    expand_all(generators, n)
}

fn expand_all(generators: Vec<Generator>, n: u32) -> Result<Vec<SetFamily>> {
    let mut families = generators
        .iter()
        .map(|g| family_from_generator(g, n))
        .collect::<Result<Vec<_>>>()?;
    families.sort();
    debug_assert!(families.windows(2).all(|w| w[0] != w[1]));
    Ok(families)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: u32, els: &[u32]) -> ElementSet {
        ElementSet::from_elements(n, els).unwrap()
    }

    fn family(n: u32, k: u32, sets: &[&[u32]]) -> SetFamily {
        let sets: Vec<Vec<u32>> = sets.iter().map(|s| s.to_vec()).collect();
        SetFamily::new(n, k, &sets).unwrap()
    }

    fn star_generator_k2() -> Generator {
        Generator::new(
            2,
            vec![family(3, 2, &[&[1, 2], &[1, 3]]), family(2, 1, &[&[1]])],
        )
        .unwrap()
    }

    fn triangle_generator_k2() -> Generator {
        Generator::new(
            2,
            vec![
                family(3, 2, &[&[1, 2], &[1, 3], &[2, 3]]),
                SetFamily::empty(2, 1).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn expand_slot_examples() {
        let heads = expand_slot(&set(2, &[1]), 1, 5, 2).unwrap();
        assert_eq!(heads, vec![set(5, &[1, 4]), set(5, &[1, 5])]);

        let single = expand_slot(&set(5, &[1, 2, 3]), 0, 9, 3).unwrap();
        assert_eq!(single, vec![set(9, &[1, 2, 3])]);

        let tails = expand_slot(&set(5, &[1, 5]), 2, 9, 4).unwrap();
        assert_eq!(
            tails,
            vec![
                set(9, &[1, 5, 7, 8]),
                set(9, &[1, 5, 7, 9]),
                set(9, &[1, 5, 8, 9])
            ]
        );
    }

    #[test]
    fn expand_slot_rejects_bad_shapes() {
        // wrong head size for the level
        assert!(expand_slot(&set(3, &[1, 2]), 1, 9, 4).is_err());
        // head sticking out of its window
        assert!(expand_slot(&set(6, &[1, 6]), 2, 9, 4).is_err());
        // n below 2k
        assert!(expand_slot(&set(3, &[1]), 1, 3, 2).is_err());
    }

    #[test]
    fn generator_shape_validation() {
        // level 1 of a k=2 generator must hold 1-sets inside [2]
        assert!(Generator::new(2, vec![family(3, 2, &[&[1, 2]]), family(3, 1, &[&[1]])],).is_err());
        // disjoint union rejected
        assert!(Generator::new(
            2,
            vec![SetFamily::empty(3, 2).unwrap(), family(2, 1, &[&[1], &[2]])],
        )
        .is_err());
        // non-shifted level rejected
        assert!(Generator::new(
            2,
            vec![family(3, 2, &[&[1, 3]]), SetFamily::empty(2, 1).unwrap()],
        )
        .is_err());
    }

    #[test]
    fn family_from_generator_examples() {
        assert_eq!(
            family_from_generator(&star_generator_k2(), 5).unwrap(),
            SetFamily::star(5, 2).unwrap()
        );
        assert_eq!(
            family_from_generator(&triangle_generator_k2(), 6).unwrap(),
            family(6, 2, &[&[1, 2], &[1, 3], &[2, 3]])
        );
        let level_one_only = Generator::new(
            2,
            vec![SetFamily::empty(3, 2).unwrap(), family(2, 1, &[&[1]])],
        )
        .unwrap();
        assert_eq!(
            family_from_generator(&level_one_only, 5).unwrap(),
            family(5, 2, &[&[1, 4], &[1, 5]])
        );
    }

    #[test]
    fn generator_from_family_examples() {
        assert_eq!(
            generator_from_family(&SetFamily::star(5, 2).unwrap()).unwrap(),
            star_generator_k2()
        );
        let hm = generator_from_family(&SetFamily::hilton_milner(7, 3).unwrap()).unwrap();
        assert!(hm.level(2).is_empty());
        let single = generator_from_family(&family(7, 3, &[&[1, 2, 3]])).unwrap();
        assert_eq!(single.level(0), &family(5, 3, &[&[1, 2, 3]]));
        assert!(single.level(1).is_empty());
        assert!(single.level(2).is_empty());
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid_generator(&star_generator_k2(), 5).unwrap());
        assert!(is_valid_generator(&triangle_generator_k2(), 5).unwrap());
        assert!(is_valid_generator(&triangle_generator_k2(), 6).unwrap());

        let level_one_only = Generator::new(
            2,
            vec![SetFamily::empty(3, 2).unwrap(), family(2, 1, &[&[1]])],
        )
        .unwrap();
        let violation = generator_violation(&level_one_only, 5).unwrap().unwrap();
        assert_eq!(
            violation,
            GeneratorViolation::AddableSet {
                witness: set(5, &[1, 2])
            }
        );
        assert_eq!(violation.witness(), set(5, &[1, 2]));
        assert_eq!(violation.to_string(), "{1,2} is addable");
    }

    #[test]
    fn enumeration_small_uniformities() {
        let k1 = enumerate_generators(1, 4).unwrap();
        assert_eq!(k1.len(), 1);
        assert_eq!(k1[0].level(0), &family(1, 1, &[&[1]]));

        let k2 = enumerate_generators(2, 5).unwrap();
        assert_eq!(k2, vec![star_generator_k2(), triangle_generator_k2()]);
    }

    #[test]
    fn enumeration_matches_at_the_tight_ground_set() {
        // n = 2k: same two generators as the spacious case
        let k2 = enumerate_generators(2, 4).unwrap();
        assert_eq!(k2.len(), 2);
        let fams = enumerate_maximal_shifted(4, 2).unwrap();
        assert!(fams.iter().all(|f| f.len() == 3));
        assert!(fams.contains(&SetFamily::star(4, 2).unwrap()));
        assert!(fams.contains(&family(4, 2, &[&[1, 2], &[1, 3], &[2, 3]])));
    }

    #[test]
    fn enumerated_families_pass_all_structural_checks() {
        for (n, k) in [(5u32, 2u32), (6, 2), (6, 3), (7, 3)] {
            let generators = enumerate_generators(k, n).unwrap();
            for g in &generators {
                assert!(is_valid_generator(g, n).unwrap(), "{g:?} at n={n}");
            }
            let families = enumerate_maximal_shifted(n, k).unwrap();
            assert_eq!(families.len(), generators.len());
            for f in &families {
                assert!(f.is_intersecting());
                assert!(is_shifted(f));
            }
        }
    }

    #[test]
    fn oracle_agrees_at_every_scale_the_word_cap_allows() {
        use crate::oracle::brute_force_maximal;
        for n in 4..=11 {
            assert_eq!(
                enumerate_maximal_shifted(n, 2).unwrap(),
                brute_force_maximal(n, 2, true).unwrap(),
                "k=2, n={n}"
            );
        }
        // C(8,3) = 56 still fits the oracle; 23936 maximal cliques, 6 shifted
        assert_eq!(
            enumerate_maximal_shifted(8, 3).unwrap(),
            brute_force_maximal(8, 3, true).unwrap()
        );
    }

    #[test]
    fn sequential_and_default_enumeration_agree() {
        for (k, n) in [(2u32, 6u32), (3, 7)] {
            assert_eq!(
                enumerate_generators(k, n).unwrap(),
                enumerate_generators_seq(k, n).unwrap()
            );
            assert_eq!(
                enumerate_maximal_shifted(n, k).unwrap(),
                enumerate_maximal_shifted_seq(n, k).unwrap()
            );
        }
    }

    #[test]
    fn enumeration_caps() {
        assert!(matches!(
            enumerate_generators(5, 12),
            Err(Error::ScaleCap(_))
        ));
        assert!(matches!(
            enumerate_generators(2, 14),
            Err(Error::ScaleCap(_))
        ));
        assert!(matches!(
            enumerate_generators(3, 5),
            Err(Error::ParameterConstraint { .. })
        ));
    }

    #[test]
    fn slot_closure_examples() {
        assert_eq!(
            check_slot_closure(&SetFamily::star(5, 2).unwrap()).unwrap(),
            None
        );
        assert_eq!(
            check_slot_closure(&family(6, 2, &[&[1, 2], &[1, 3], &[2, 3]])).unwrap(),
            None
        );
        // removing one slot member breaks closure with that exact witness
        let broken = family(5, 2, &[&[1, 2], &[1, 3], &[1, 4]]);
        assert_eq!(check_slot_closure(&broken).unwrap(), Some(set(5, &[1, 5])));
    }
}
