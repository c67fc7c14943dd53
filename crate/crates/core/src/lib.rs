//! Intersecting `k`-uniform set families on small ground sets: the
//! compression (shifting) operator, the canonical type partition of shifted
//! intersecting families, exact verification of the Erdős–Ko–Rado and
//! Hilton–Milner bounds with their equality characterizations, and
//! enumeration of all maximal shifted intersecting families through their
//! level generators, cross-checked by an independent clique-search oracle.
//!
//! Sets are single-word bit masks (`n <= 64`), so set operations are a
//! handful of instructions; counts and bounds use exact big integers.
//!
//! With the default `parallel` feature the generator enumeration and the
//! partition splitter run on rayon; the `*_seq` variants and builds without
//! the feature run the identical sequential code.

pub mod bounds;
pub mod error;
pub mod family;
pub mod generator;
pub mod oracle;
pub mod partition;
pub mod set;
pub mod shift;

pub use bounds::{
    binom, ekr_bound, hm_bound, identity_product, identity_star, verify_ekr, verify_hm, Check,
    ClassificationReport, IdentityReport, ProductIdentityReport, VerificationReport,
    CLASSIFICATION_CAP,
};
pub use error::{Error, Result};
pub use family::{make_named_family, NamedFamily, SetFamily};
pub use generator::{
    check_slot_closure, enumerate_generators, enumerate_generators_seq, enumerate_maximal_shifted,
    enumerate_maximal_shifted_seq, expand_slot, family_from_generator, generator_from_family,
    generator_violation, is_valid_generator, Generator, GeneratorViolation, MAX_ENUMERATION_GROUND,
    MAX_GENERATOR_UNIFORMITY,
};
pub use oracle::{brute_force_maximal, MAX_ORACLE_VERTICES};
pub use partition::{
    compress_to_2k, find_disjoint_dominated, partition, partition_seq, project, type_bounds_report,
    type_index, TypeBoundsReport, TypeBoundsRow, TypePartition,
};
pub use set::{dominated_sets, dominates, k_subset_masks, ElementSet, MAX_GROUND_SET};
pub use shift::{ij_shift, is_shifted, shift_closure};
