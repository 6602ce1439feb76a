//! Weighted Banzhaf interaction indexes and weighted least-squares
//! approximations of cooperative games.
//!
//! A game on `N = {1, …, n}` is a real-valued table over the `2^n`
//! coalitions, equivalently a pseudo-Boolean function on `{0,1}^n`. Player
//! `i` is bit `i - 1` of a coalition mask and the mask is the table index.
//!
//! The crate covers
//!
//! - the Möbius and zeta transforms, `S`-differences and the multilinear
//!   extension ([`Game`], [`MobiusTransform`]);
//! - product coalition distributions and their orthonormal basis
//!   ([`ProbabilityProfile`], [`weights`], [`basis_v`]);
//! - best degree-`k` weighted approximations ([`best_approximation`]);
//! - weighted Banzhaf, Banzhaf and Shapley interaction indexes and the
//!   conversions between them ([`weighted_banzhaf_all`], [`reindex`], …);
//! - null players, dummy coalitions, normalized indexes and coefficients of
//!   determination ([`analysis`]).
//!
//! All-coalition computations run in `O(n·2^n)` through dimension-wise
//! sweeps of the table.
//!
//! ```
//! use wbanzhaf::{weighted_banzhaf_all, Coalition, Game, ProbabilityProfile};
//!
//! // 3-player majority game: a coalition wins with at least two members
//! let f = Game::from_fn(3, |s| if s.len() >= 2 { 1.0 } else { 0.0 })?;
//! let p = ProbabilityProfile::new(vec![0.5, 0.5, 0.9])?;
//! let table = weighted_banzhaf_all(&f, &p)?;
//! let pair = Coalition::from_players([1, 2])?;
//! assert!((table.get(pair) - (1.0 - 2.0 * 0.9)).abs() < 1e-12);
//! # Ok::<(), wbanzhaf::Error>(())
//! ```
//!
//! The [`oracle`] module holds slow, formula-by-formula versions of the same
//! quantities for validation.

pub mod analysis;
pub mod approximation;
mod coalition;
mod error;
mod game;
pub mod indexes;
pub mod oracle;
mod transform;
pub mod weights;

pub use analysis::{
    is_dummy_coalition, is_null_player, normalized_index, r_squared, statistics, GameStatistics,
};
pub use approximation::{
    approximation_from_mobius, best_approximation, residual_norm, Approximation,
};
pub use coalition::{Coalition, Subsets};
pub use error::{Error, Result};
pub use game::{Game, MobiusTransform, Point};
pub use indexes::{
    banzhaf, banzhaf_all, banzhaf_center_of_mass, index_to_mobius, probabilistic_coefficient,
    reindex, shapley_all, shapley_interaction, weighted_banzhaf, weighted_banzhaf_all,
    weighted_banzhaf_from_mobius, InteractionTable,
};
pub use weights::{basis_v, inner_product, weights, ProbabilityProfile, WeightTable};

/// Largest supported player count; a dense table then holds `2^26` reals.
pub const MAX_PLAYERS: usize = 26;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/games.md")]
    mod games {}
    #[doc = include_str!("../../../book/src/weights.md")]
    mod weights {}
    #[doc = include_str!("../../../book/src/approximation.md")]
    mod approximation {}
    #[doc = include_str!("../../../book/src/indexes.md")]
    mod indexes {}
    #[doc = include_str!("../../../book/src/analysis.md")]
    mod analysis {}
}
