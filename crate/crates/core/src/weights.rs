//! Product distributions over coalitions and the associated weighted inner
//! product.
//!
//! Each player `i` joins a random coalition `C` independently with
//! probability `p_i`, so `Pr(C = S) = Π_{i∈S} p_i · Π_{i∉S} (1 - p_i)`. The
//! functions
//!
//! ```text
//! v_S(x) = Π_{i∈S} (x_i - p_i) / √(p_i (1 - p_i))
//! ```
//!
//! form an orthonormal basis of all games for the inner product
//! `⟨f, g⟩ = Σ_S w(S) f(S) g(S)` whenever every `p_i` lies strictly
//! between 0 and 1.

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{check_players, Game, Point};
use crate::transform;

/// Profiles closer than this to 0 or 1 are refused by operations that divide
/// by `√(p_i (1 - p_i))`.
pub const BOUNDARY_MARGIN: f64 = 1e-12;

/// Per-player membership probabilities `p_i = Pr(C ∋ i)`.
///
/// Any value in `[0, 1]` is accepted at construction; operations built on
/// the orthonormal basis call [`ProbabilityProfile::require_strict`].
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityProfile(Vec<f64>);

impl ProbabilityProfile {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        check_players(p.len())?;
        if let Some((i, &value)) = p
            .iter()
            .enumerate()
            .find(|(_, v)| !(0.0..=1.0).contains(*v))
        {
            return Err(Error::ProbabilityOutOfRange {
                player: i + 1,
                value,
            });
        }
        Ok(ProbabilityProfile(p))
    }

    /// Every player joins with the same probability.
    pub fn uniform(n: usize, p: f64) -> Result<Self> {
        check_players(n)?;
        ProbabilityProfile::new(vec![p; n])
    }

    /// The classical, non-weighted setting `p = (½, …, ½)`.
    pub fn half(n: usize) -> Result<Self> {
        ProbabilityProfile::uniform(n, 0.5)
    }

    #[inline]
    pub fn players(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn probs(&self) -> &[f64] {
        &self.0
    }

    /// Probability of the 1-based player `i`.
    #[inline]
    pub fn get(&self, player: usize) -> f64 {
        self.0[player - 1]
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// Fails unless every `p_i` is at least [`BOUNDARY_MARGIN`] away from 0
    /// and 1.
    pub fn require_strict(&self) -> Result<()> {
        match self
            .0
            .iter()
            .enumerate()
            .find(|(_, &p)| p <= BOUNDARY_MARGIN || p >= 1.0 - BOUNDARY_MARGIN)
        {
            Some((i, &value)) => Err(Error::BoundaryProbability {
                player: i + 1,
                value,
            }),
            None => Ok(()),
        }
    }

    /// Standard deviations `√(p_i (1 - p_i))` of the membership indicators.
    pub fn std_devs(&self) -> Vec<f64> {
        self.0.iter().map(|p| (p * (1.0 - p)).sqrt()).collect()
    }

    pub fn as_point(&self) -> Point {
        Point::new(self.0.clone()).expect("profile entries lie in [0, 1]")
    }

    pub(crate) fn check_players(&self, n: usize) -> Result<()> {
        if self.players() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: n,
                found: self.players(),
            })
        }
    }
}

/// The table `w(S) = Pr(C = S)` of a product distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightTable {
    n: usize,
    w: Vec<f64>,
}

impl WeightTable {
    #[inline]
    pub fn players(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn values(&self) -> &[f64] {
        &self.w
    }

    #[inline]
    pub fn get(&self, s: Coalition) -> f64 {
        self.w[s.index()]
    }
}

/// Materializes `w(S) = Π_{i∈S} p_i Π_{i∉S} (1 - p_i)` in `O(n·2^n)`.
pub fn weights(p: &ProbabilityProfile) -> WeightTable {
    let n = p.players();
    let mut w = vec![1.0; 1 << n];
    let probs = p.probs();
    transform::sweep(&mut w, |i, lo, hi| {
        *lo *= 1.0 - probs[i];
        *hi *= probs[i];
    });
    WeightTable { n, w }
}

/// The weighted inner product `⟨f, g⟩ = Σ_S w(S) f(S) g(S)`.
pub fn inner_product(f: &Game, g: &Game, w: &WeightTable) -> Result<f64> {
    for found in [g.players(), w.players()] {
        if found != f.players() {
            return Err(Error::DimensionMismatch {
                expected: f.players(),
                found,
            });
        }
    }
    Ok(f.values()
        .iter()
        .zip(g.values())
        .zip(w.values())
        .map(|((a, b), w)| w * a * b)
        .sum())
}

/// The orthonormal basis element `v_S` tabulated at every vertex.
pub fn basis_v(n: usize, s: Coalition, p: &ProbabilityProfile) -> Result<Game> {
    check_players(n)?;
    p.check_players(n)?;
    s.check(n)?;
    p.require_strict()?;
    let probs = p.probs();
    let sd = p.std_devs();
    let mut values = vec![1.0; 1 << n];
    transform::sweep_dims(&mut values, s.mask(), |i, lo, hi| {
        *lo *= -probs[i] / sd[i];
        *hi *= (1.0 - probs[i]) / sd[i];
    });
    Ok(Game::from_raw(n, values))
}

/// `⟨f, v_T⟩` for every `T` at once, in `O(n·2^n)`.
///
/// Per player the 2×2 map sends `(f|x_i=0, f|x_i=1)` to
/// `((1-p) f0 + p f1, σ (f1 - f0))` with `σ = √(p(1-p))`.
pub fn orthonormal_coefficients(f: &Game, p: &ProbabilityProfile) -> Result<Vec<f64>> {
    p.check_players(f.players())?;
    p.require_strict()?;
    let probs = p.probs();
    let sd = p.std_devs();
    let mut c = f.values().to_vec();
    transform::sweep(&mut c, |i, lo, hi| {
        let (f0, f1) = (*lo, *hi);
        *lo = (1.0 - probs[i]) * f0 + probs[i] * f1;
        *hi = sd[i] * (f1 - f0);
    });
    Ok(c)
}
