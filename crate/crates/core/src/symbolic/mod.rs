//! Word-level machinery: cut-sets, the orthogonal-part semigroup, recurrence
//! words and close-projection searches.

pub mod claim;
pub mod cutset;
pub mod recurrence;
pub mod semigroup;

pub use claim::{find_close_projections, ClaimResult};
pub use cutset::{cut_set, cut_set_with_ratios, walk_cut_set, Cylinder};
pub use recurrence::{
    angle_in_window, equidistribution_n, recurrence_word, recurrence_word_finite, recurrence_word_infinite,
    verify_recurrence, FiniteBlock, RecurrenceCertificate, Schedule,
};
pub use semigroup::{
    classify, classify_with_budget, inverse_word, semigroup_closure, Closure, OrthoElement, SemigroupCase,
    SemigroupClassification,
};
