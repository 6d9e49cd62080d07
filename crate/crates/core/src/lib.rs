//! Enumeration and verification engine for finite two-object categories whose
//! endomorphism monoids are grouplike, i.e. a finite group extended by a chain
//! of successive fresh identities.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs; file formats, the command line and the parallel
//! drivers live in the `catforge` crate.
//!
//! Layout:
//!
//! * [`table`], [`monoid`], [`canon`], [`enumerate`]: raw multiplication
//!   tables, monoid validation, canonical forms and small-order enumeration.
//! * [`grouplike`]: detection and construction of `G^{*k}` structure.
//! * [`bimodule`]: commuting left/right actions, their enumeration, group
//!   orbits and the unigen analysis.
//! * [`category`]: two-object categories as algebraic matrices with cross
//!   composition tables, plus the structural checks.
//! * [`engine`]: the closed-form construction, the brute-force completion
//!   search and the counting harness tying the two together.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bimodule;
pub mod canon;
pub mod catalog;
pub mod category;
pub mod engine;
pub mod enumerate;
pub mod grouplike;
pub mod monoid;
pub mod search;
pub mod table;

pub use bimodule::{
    enumerate_bimodules, group_orbit, strongly_unigen_check, unigen_analyze, validate_bimodule,
    Bimodule, Normalization, OrbitReport, Side, UnigenCertificate,
};
pub use canon::{canonical_form, IsoClassKey};
pub use category::{
    check_idempotent_lemmas, check_orbit_laws, compute_imax, extract_groupoid,
    extract_groupoidlike, submonoid_embedding_check, validate_category, HomSet, IMaxReport,
    SemiCategoryView, TwoObjectCategory,
};
pub use engine::{
    construct, count_categories, search_completions, verify_goal_theorem, ConstructionSpec,
    CountReport,
};
pub use enumerate::enumerate_monoids;
pub use grouplike::{build_grouplike, detect_grouplike, verify_ord, GrouplikeStructure, IdempotentChain};
pub use monoid::{center, is_group, validate_monoid, Monoid};
pub use search::{Budget, BudgetExceeded, DEFAULT_BUDGET};
pub use table::MulTable;
