//! Toolkit for *complete* integer sets: finite sets of distinct integers
//! whose element product is an integer multiple of their element sum.
//!
//! The crate provides:
//! - the completeness predicate with exact divisibility certificates and a
//!   difference-gcd normal form ([`is_complete`], [`certificate`],
//!   [`normal_form`]);
//! - closure constructions (scaling, translation, prodsets, sumsets,
//!   zero-sum augmentation) with checkers that re-verify each construction
//!   rather than trust it ([`algebra`]);
//! - an exact, parallel census of complete subsets of `{1..N}` with growth
//!   diagnostics ([`census`]);
//! - empirical scans for the open questions: prime-sum sets, completion by
//!   new positive integers, geometric sets, and completing translates
//!   ([`conjectures`]).

pub mod algebra;
pub mod census;
pub mod complete;
pub mod conjectures;
pub mod error;
pub mod set;

pub use algebra::{
    augment_zero_sum, check_prodset_theorem, check_scalar_theorem, check_scaled_difference,
    check_sumset2_theorem, check_union_t_condition, make_homogeneous_ap, prodset,
    recognize_homogeneous_ap, scale, sumset2, translate, Constructed, HomogeneousAP,
    MultisetAggregate, TheoremId, TheoremReport,
};
pub use census::{
    ap_lower_bound, census, enumerate_complete, growth_table, resolve_worker_count, CensusReport,
    GrowthFlavor, GrowthRow, MAX_N,
};
pub use complete::{certificate, is_complete, normal_form, Certificate, NormalFormResult};
pub use conjectures::{
    complete_extension, first_odd_primes, geometric_search, is_prime, omega,
    scan_prime_conjecture, translate_search, ExtensionResult, PrimeFinding,
};
pub use error::Error;
pub use set::IntSet;
