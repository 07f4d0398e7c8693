//! Extended affine Weyl group engine for affine type B: group arithmetic,
//! Bruhat order, admissible sets, Newton points, sigma-conjugacy tooling,
//! reduction trees, and finite double-coset combinatorics.

pub mod admissible;
pub mod bruhat;
pub mod cartan;
pub mod cosets;
pub mod element;
pub mod finite;
pub mod minimal;
pub mod reduction;
pub mod sigma;
pub mod tables;
pub mod words;

pub use admissible::{admissible_set, admissible_set_j, min_coset_rep};
pub use bruhat::{bruhat_leq_subword, BruhatContext};
pub use cartan::{CartanDatum, DatumError};
pub use cosets::{bruhat_coset_equivalence_holds, double_coset_min_reps, DoubleCoset, FiniteWeylGroup};
pub use element::AffineWeylElem;
pub use finite::SignedPerm;
pub use minimal::{exhaustive_minimal_check, minimal_length_test, MinimalityVerdict, SearchLimits};
pub use reduction::{dl_reduction_step, reduction_tree, ReductionStrategy, ReductionTree, Side, StepOutcome};
pub use sigma::{
    count_reflection, is_finite_sigma_support, is_sigma_coxeter, is_sigma_straight, kottwitz,
    newton_point, sigma_conjugate, sigma_support, stable_subset, FrobeniusAction, NewtonPoint,
};
pub use words::{from_word, is_left_descent, is_right_descent, reduced_word};
