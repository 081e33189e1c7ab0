//! Comparison oracles for orderable groups.
//!
//! * [`word`]: reduced words in free groups and endomorphisms.
//! * [`series`]: truncated noncommutative power series and the Magnus
//!   expansion.
//! * [`free_order`]: the Magnus bi-ordering of free groups.
//! * [`lattice`]: orderings of Z², invariant orderings under a matrix, and
//!   the decision procedure for their existence.
//! * [`order`]: order oracles and the extension combinator.
//! * [`klein`], [`surface`], [`bundle`]: concrete groups.
//! * [`laws`], [`random`]: property checking.

pub mod bundle;
pub mod free_order;
pub mod klein;
pub mod lattice;
pub mod laws;
pub mod order;
pub mod random;
mod schreier;
pub mod series;
pub mod surface;
pub mod word;

pub use bundle::{
    analyze_monodromy, bundle_compare, bundle_element, bundle_multiply, bundle_order,
    commutator_expand, commutator_rewrite, figure_eight_preset, BundleElement, MonodromySpec,
    MonodromyVerdict,
};
pub use free_order::{magnus_compare, magnus_sign, MagnusOrder};
pub use klein::{klein_compare, klein_normal_form, klein_order};
pub use lattice::{eigen_sign, levitt_check, IndexOrder, IntMatrix2, LevittReport, Point};
pub use order::{extend_order, Decision, ExtensionSpec, Invariance, OrderError, OrderOracle, Sign};
pub use series::{magnus_expand, Monomial, TruncatedSeries};
pub use surface::{nf_multiply, nf_of_word, surf3p2_compare, surf3p2_order, NF3P2};
pub use word::{Endomorphism, Gen, Word};
