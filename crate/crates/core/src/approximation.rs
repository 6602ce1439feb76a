//! Best degree-`k` approximations in the weighted least-squares sense.
//!
//! The best `k`th approximation `f_k` of a game `f` is the multilinear
//! polynomial of degree at most `k` closest to `f` for the distance
//! `Σ_S w(S) (f(S) - g(S))²`. It is the orthogonal projection
//! `f_k = Σ_{|T|≤k} ⟨f, v_T⟩ v_T` onto the span of the first basis
//! elements, which never requires solving a linear system.

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{Game, MobiusTransform};
use crate::transform;
use crate::weights::{orthonormal_coefficients, weights, ProbabilityProfile};

/// Monomial coefficients `a_k(S)` of the best `k`th approximation.
///
/// The table has one entry per mask; entries with `|S| > k` are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Approximation {
    k: usize,
    coeffs: Vec<f64>,
    profile: ProbabilityProfile,
}

impl Approximation {
    #[inline]
    pub fn players(&self) -> usize {
        self.profile.players()
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn profile(&self) -> &ProbabilityProfile {
        &self.profile
    }

    #[inline]
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    #[inline]
    pub fn coeff(&self, s: Coalition) -> f64 {
        self.coeffs[s.index()]
    }

    /// Every term `(S, a_k(S))` with `|S| ≤ k`, zeros included, in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Coalition, f64)> + '_ {
        let k = self.k;
        self.coeffs
            .iter()
            .enumerate()
            .filter(move |(m, _)| m.count_ones() as usize <= k)
            .map(|(m, &c)| (Coalition::from_mask(m as u32), c))
    }

    /// `f_k(S) = Σ_{T⊆S} a_k(T)`.
    pub fn evaluate(&self, s: Coalition) -> Result<f64> {
        s.check(self.players())?;
        Ok(s.subsets().map(|t| self.coeffs[t.index()]).sum())
    }

    /// The approximation as a game (all vertex values).
    pub fn to_game(&self) -> Game {
        let mut values = self.coeffs.clone();
        transform::zeta(&mut values);
        Game::from_raw(self.players(), values)
    }

    pub fn to_mobius(&self) -> MobiusTransform {
        MobiusTransform::from_raw(self.players(), self.coeffs.clone())
    }
}

fn check_degree(k: usize, n: usize) -> Result<()> {
    if k > n {
        Err(Error::InvalidDegree { k, players: n })
    } else {
        Ok(())
    }
}

/// The best `k`th approximation of `f` for a strict profile.
///
/// Computes every `⟨f, v_T⟩` in one sweep, rescales to the weighted indexes
/// `I(T) = ⟨f, v_T⟩ / Π_{i∈T} √(p_i(1-p_i))`, drops `|T| > k` and changes
/// basis with `a_k(S) = Σ_{T⊇S, |T|≤k} I(T) Π_{i∈T\S} (-p_i)`.
pub fn best_approximation(f: &Game, p: &ProbabilityProfile, k: usize) -> Result<Approximation> {
    let n = f.players();
    check_degree(k, n)?;
    let mut coeffs = orthonormal_coefficients(f, p)?;
    let sd = p.std_devs();
    let mut scale = vec![1.0; coeffs.len()];
    transform::sweep(&mut scale, |i, _, hi| *hi /= sd[i]);
    for (m, (c, s)) in coeffs.iter_mut().zip(&scale).enumerate() {
        *c = if m.count_ones() as usize <= k { *c * s } else { 0.0 };
    }
    let probs = p.probs();
    transform::superset_product(&mut coeffs, |i| -probs[i]);
    Ok(Approximation {
        k,
        coeffs,
        profile: p.clone(),
    })
}

fn binomial(n: usize, r: usize) -> f64 {
    if r > n {
        return 0.0;
    }
    let r = r.min(n - r);
    let mut acc = 1u64;
    for j in 0..r {
        acc = acc * (n - j) as u64 / (j + 1) as u64;
    }
    acc as f64
}

/// The best `k`th approximation directly from Möbius coefficients:
///
/// ```text
/// a_k(S) = a(S) + (-1)^{k-|S|} Σ_{T⊇S, |T|>k} C(|T|-|S|-1, k-|S|) Π_{i∈T\S} p_i · a(T)
/// ```
///
/// The formula is polynomial in `p`, so boundary profiles are accepted.
pub fn approximation_from_mobius(
    a: &MobiusTransform,
    p: &ProbabilityProfile,
    k: usize,
) -> Result<Approximation> {
    let n = a.players();
    p.check_players(n)?;
    check_degree(k, n)?;
    let probs = p.probs();
    // graded[d][S] = Σ_{T⊇S, |T\S|=d} a(T) Π_{i∈T\S} p_i
    let graded = transform::graded_superset_product(a.coeffs(), |i| probs[i]);
    let coeffs = (0..a.coeffs().len())
        .map(|m| {
            let s = m.count_ones() as usize;
            if s > k {
                return 0.0;
            }
            let gap = k - s;
            let tail: f64 = (gap + 1..=n - s)
                .map(|d| binomial(d - 1, gap) * graded[d][m])
                .sum();
            let sign = if gap.is_multiple_of(2) { 1.0 } else { -1.0 };
            a.coeffs()[m] + sign * tail
        })
        .collect();
    Ok(Approximation {
        k,
        coeffs,
        profile: p.clone(),
    })
}

/// The weighted distance `‖f - f_k‖_w`.
pub fn residual_norm(f: &Game, approx: &Approximation, p: &ProbabilityProfile) -> Result<f64> {
    p.check_players(f.players())?;
    if approx.players() != f.players() {
        return Err(Error::DimensionMismatch {
            expected: f.players(),
            found: approx.players(),
        });
    }
    if approx.profile() != p {
        return Err(Error::ProfileMismatch);
    }
    let w = weights(p);
    let fk = approx.to_game();
    let sq: f64 = f
        .values()
        .iter()
        .zip(fk.values())
        .zip(w.values())
        .map(|((a, b), w)| w * (a - b) * (a - b))
        .sum();
    Ok(sq.sqrt())
}
