//! Weighted Banzhaf, Banzhaf and Shapley interaction indexes.
//!
//! For a product profile `p` the weighted Banzhaf interaction index of a
//! coalition `S` is the expected `S`-difference of the game under the
//! random coalition `C`:
//!
//! ```text
//! I_{B,p}(f, S) = E[(Δ^S f)(C)] = Σ_{T⊇S} a(T) Π_{i∈T\S} p_i
//! ```
//!
//! where `a` is the Möbius transform. Every formula used here is polynomial
//! in `p`, so profiles on the boundary of `[0,1]^n` are accepted. At `p = 0`
//! the index is the Möbius transform itself; at `p = ½` it is the classical
//! Banzhaf interaction index.

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{Game, MobiusTransform};
use crate::transform;
use crate::weights::ProbabilityProfile;

/// `I_{B,p}(f, S)` for every coalition `S`, indexed by mask.
#[derive(Debug, Clone, PartialEq)]
pub struct InteractionTable {
    profile: ProbabilityProfile,
    values: Vec<f64>,
}

impl InteractionTable {
    /// Wraps a precomputed table, e.g. one read back from disk.
    pub fn new(profile: ProbabilityProfile, values: Vec<f64>) -> Result<Self> {
        // reuse the game validation for length and finiteness
        let values = Game::new(profile.players(), values)?.into_values();
        Ok(InteractionTable { profile, values })
    }

    #[inline]
    pub fn players(&self) -> usize {
        self.profile.players()
    }

    #[inline]
    pub fn profile(&self) -> &ProbabilityProfile {
        &self.profile
    }

    #[inline]
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    #[inline]
    pub fn get(&self, s: Coalition) -> f64 {
        self.values[s.index()]
    }

    /// The weighted Banzhaf power index of a 1-based player: the entry at
    /// the singleton `{i}`.
    pub fn power_index(&self, player: usize) -> f64 {
        self.get(Coalition::singleton(player))
    }

    /// Converts back to Möbius coefficients:
    /// `a(S) = Σ_{T⊇S} I(T) Π_{i∈T\S} (-p_i)`.
    pub fn to_mobius(&self) -> MobiusTransform {
        let probs = self.profile.probs();
        let mut a = self.values.clone();
        transform::superset_product(&mut a, |i| -probs[i]);
        MobiusTransform::from_raw(self.players(), a)
    }

    /// The same indexes for another profile:
    /// `I_{B,p'}(S) = Σ_{T⊇S} I_{B,p}(T) Π_{i∈T\S} (p'_i - p_i)`.
    pub fn reindex(&self, target: &ProbabilityProfile) -> Result<InteractionTable> {
        target.check_players(self.players())?;
        let from = self.profile.probs();
        let to = target.probs();
        let mut values = self.values.clone();
        transform::superset_product(&mut values, |i| to[i] - from[i]);
        Ok(InteractionTable {
            profile: target.clone(),
            values,
        })
    }

    /// Rebuilds the game from its indexes,
    /// `f(x) = Σ_T I(T) Π_{i∈T} (x_i - p_i)`, evaluated at every vertex.
    pub fn reconstruct(&self) -> Game {
        let probs = self.profile.probs();
        let mut values = self.values.clone();
        transform::sweep(&mut values, |i, lo, hi| {
            let (without, with) = (*lo, *hi);
            *lo = without - probs[i] * with;
            *hi = without + (1.0 - probs[i]) * with;
        });
        Game::from_raw(self.players(), values)
    }
}

fn check_profile(n: usize, p: &ProbabilityProfile) -> Result<()> {
    p.check_players(n)
}

/// All weighted Banzhaf interaction indexes in `O(n·2^n)`: Möbius
/// transform, then one superset sweep with factors `p_i`.
pub fn weighted_banzhaf_all(f: &Game, p: &ProbabilityProfile) -> Result<InteractionTable> {
    check_profile(f.players(), p)?;
    weighted_banzhaf_from_mobius(&f.mobius(), p)
}

/// Same as [`weighted_banzhaf_all`], starting from Möbius coefficients.
pub fn weighted_banzhaf_from_mobius(
    a: &MobiusTransform,
    p: &ProbabilityProfile,
) -> Result<InteractionTable> {
    check_profile(a.players(), p)?;
    let probs = p.probs();
    let mut values = a.coeffs().to_vec();
    transform::superset_product(&mut values, |i| probs[i]);
    Ok(InteractionTable {
        profile: p.clone(),
        values,
    })
}

/// A single weighted Banzhaf index as an average of marginal interactions:
/// `Σ_{T⊆N\S} p_T^S (Δ^S f)(T)`.
pub fn weighted_banzhaf(f: &Game, p: &ProbabilityProfile, s: Coalition) -> Result<f64> {
    let n = f.players();
    check_profile(n, p)?;
    s.check(n)?;
    let diff = f.s_difference(s)?;
    let rest = s.complement(n);
    let probs = p.probs();
    Ok(rest
        .subsets()
        .map(|t| {
            let weight: f64 = rest
                .players()
                .map(|i| if t.contains(i) { probs[i - 1] } else { 1.0 - probs[i - 1] })
                .product();
            weight * diff.value(t)
        })
        .sum())
}

/// The probability `p_T^S = Pr(T ⊆ C ⊆ S ∪ T)` that `S` meets exactly `T`
/// among the other players.
pub fn probabilistic_coefficient(
    p: &ProbabilityProfile,
    s: Coalition,
    t: Coalition,
) -> Result<f64> {
    let n = p.players();
    s.check(n)?;
    t.check(n)?;
    if !s.is_disjoint(t) {
        return Err(Error::Overlap(s, t));
    }
    let probs = p.probs();
    Ok(s.complement(n)
        .players()
        .map(|i| if t.contains(i) { probs[i - 1] } else { 1.0 - probs[i - 1] })
        .product())
}

/// The Banzhaf interaction index:
/// `I_B(f, S) = 2^{-(n-|S|)} Σ_{T⊆N\S} (Δ^S f)(T)`.
pub fn banzhaf(f: &Game, s: Coalition) -> Result<f64> {
    let n = f.players();
    s.check(n)?;
    let diff = f.s_difference(s)?;
    let rest = s.complement(n);
    let total: f64 = rest.subsets().map(|t| diff.value(t)).sum();
    Ok(total / (1u64 << rest.len()) as f64)
}

/// Every Banzhaf interaction index (the weighted index at `p = ½`).
pub fn banzhaf_all(f: &Game) -> Result<InteractionTable> {
    weighted_banzhaf_all(f, &ProbabilityProfile::half(f.players())?)
}

/// The Banzhaf index as the average of `I_{B,p}(f, S)` over the cube of
/// profiles, integrated exactly: each monomial `Π_{i∈T\S} p_i` integrates to
/// `2^{-|T\S|}`.
pub fn banzhaf_center_of_mass(f: &Game, s: Coalition) -> Result<f64> {
    let n = f.players();
    s.check(n)?;
    let a = f.mobius();
    Ok(s.complement(n)
        .subsets()
        .map(|extra| a.coeff(s.union(extra)) * 0.5f64.powi(extra.len() as i32))
        .sum())
}

/// The Shapley interaction index `Σ_{T⊇S} a(T) / (|T| - |S| + 1)`.
pub fn shapley_interaction(f: &Game, s: Coalition) -> Result<f64> {
    let n = f.players();
    s.check(n)?;
    let a = f.mobius();
    Ok(s.complement(n)
        .subsets()
        .map(|extra| a.coeff(s.union(extra)) / (extra.len() + 1) as f64)
        .sum())
}

/// Shapley interaction indexes of every coalition, indexed by mask.
///
/// Superset sums are bucketed by `|T \ S|`, which costs `O(n²·2^n)` time
/// and `(n+1)·2^n` scratch entries.
pub fn shapley_all(f: &Game) -> Vec<f64> {
    let a = f.mobius();
    let graded = transform::graded_superset_product(a.coeffs(), |_| 1.0);
    let mut out = vec![0.0; a.coeffs().len()];
    for (d, layer) in graded.iter().enumerate() {
        let scale = 1.0 / (d + 1) as f64;
        for (o, x) in out.iter_mut().zip(layer) {
            *o += scale * x;
        }
    }
    out
}

/// Converts a table of weighted indexes back to Möbius coefficients.
pub fn index_to_mobius(table: &InteractionTable) -> MobiusTransform {
    table.to_mobius()
}

/// Converts a table of weighted indexes to another profile.
pub fn reindex(table: &InteractionTable, target: &ProbabilityProfile) -> Result<InteractionTable> {
    table.reindex(target)
}
