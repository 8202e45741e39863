//! Reduced words of elements of the classical Coxeter groups `A`, `B`, `D`.
//!
//! The crate revolves around one combinatorial object: the graph whose
//! vertices are the reduced words of a fixed group element `w` and whose edges
//! are single commutation or braid moves. Everything else supports studying
//! its metric structure:
//!
//! * [`coxeter`], [`root`], [`element`] — types, root systems, and group
//!   elements in window notation.
//! * [`word`] — reduced words, their root orderings, move sites, enumeration,
//!   and distinguished sorting words.
//! * [`subsystem`] — rank-two subsystems of an inversion set and the
//!   separation set of a pair of reduced words, which lower-bounds graph
//!   distance.
//! * [`graph`] — the word graph itself: construction, BFS distances,
//!   diameter estimation, and accessibility of words (vertices realizing the
//!   separation lower bound against every other vertex).
//! * [`pattern`] — classical pattern counting in permutations and the
//!   coefficient table tying pattern counts to separation statistics.

pub mod coxeter;
pub mod element;
pub mod error;
pub mod graph;
pub mod pattern;
pub mod root;
pub mod subsystem;
pub mod word;

pub use coxeter::{CoxeterType, Family};
pub use element::{all_elements, GroupElement};
pub use error::{Error, Result};
pub use graph::{accessibility_sweep, cache_path, DiameterOutcome, WordGraph};
pub use pattern::{
    avoids_obstruction_patterns, check_3412_bound, check_sum_identities, count_pattern,
    direct_sum, inverse_pattern_identity_holds, is_equality_form, obstruction_patterns,
    recompute_coefficient_table, skew_sum, BoundCheck, BoundStatus, CoefficientTable,
    Pattern, SumIdentityCheck,
};
pub use root::{positive_roots, simple_roots, Root, RootKind};
pub use subsystem::{
    l2_size, rank_two_subsystems, separation, symmetric_difference_law_holds,
    RankTwoSubsystem, SeparationSet, SubsystemIndex, SubsystemKind,
};
pub use word::{
    d_longest_factored_word, d_valley_word, enumerate_reduced_words, leftward_sorting_word,
    rightward_sorting_word, MoveKind, MoveSite, ReducedWord,
};
