//! Games on `N = {1, …, n}` stored as dense tables over coalition masks.

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::transform;
use crate::MAX_PLAYERS;

pub(crate) fn check_players(n: usize) -> Result<()> {
    if (1..=MAX_PLAYERS).contains(&n) {
        Ok(())
    } else {
        Err(Error::PlayerCount(n))
    }
}

fn check_table(n: usize, values: &[f64]) -> Result<()> {
    check_players(n)?;
    let expected = 1usize << n;
    if values.len() != expected {
        return Err(Error::TableLength {
            players: n,
            expected,
            found: values.len(),
        });
    }
    if let Some((mask, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
        return Err(Error::NonFinite { mask, value });
    }
    Ok(())
}

/// A cooperative game, equivalently a pseudo-Boolean function on `{0,1}^n`.
///
/// Entry `m` of the table is the worth of the coalition whose mask is `m`.
/// No normalization of the worth of the empty coalition is assumed.
#[derive(Debug, Clone, PartialEq)]
pub struct Game {
    n: usize,
    values: Vec<f64>,
}

impl Game {
    pub fn new(n: usize, values: Vec<f64>) -> Result<Self> {
        check_table(n, &values)?;
        Ok(Game { n, values })
    }

    /// Tabulates `f` over all `2^n` coalitions.
    pub fn from_fn(n: usize, mut f: impl FnMut(Coalition) -> f64) -> Result<Self> {
        check_players(n)?;
        let values = (0..1u32 << n).map(|m| f(Coalition::from_mask(m))).collect();
        Game::new(n, values)
    }

    pub fn constant(n: usize, c: f64) -> Result<Self> {
        Game::from_fn(n, |_| c)
    }

    /// The unanimity game `u_S`: worth 1 on supersets of `S`, 0 elsewhere.
    pub fn unanimity(n: usize, s: Coalition) -> Result<Self> {
        check_players(n)?;
        s.check(n)?;
        Game::from_fn(n, |t| if s.is_subset_of(t) { 1.0 } else { 0.0 })
    }

    /// Builds the game from its Möbius coefficients (zeta transform).
    pub fn from_mobius(a: &MobiusTransform) -> Game {
        let mut values = a.coeffs.clone();
        transform::zeta(&mut values);
        Game { n: a.n, values }
    }

    pub(crate) fn from_raw(n: usize, values: Vec<f64>) -> Game {
        debug_assert_eq!(values.len(), 1 << n);
        Game { n, values }
    }

    #[inline]
    pub fn players(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    #[inline]
    pub fn value(&self, s: Coalition) -> f64 {
        self.values[s.index()]
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// The Möbius transform `a(S) = Σ_{T⊆S} (-1)^{|S|-|T|} f(T)`, in
    /// `O(n·2^n)`.
    pub fn mobius(&self) -> MobiusTransform {
        let mut coeffs = self.values.clone();
        transform::mobius(&mut coeffs);
        MobiusTransform { n: self.n, coeffs }
    }

    /// The `S`-difference `Δ^S f` tabulated at every coalition.
    ///
    /// The result does not depend on the members of `S` present in the
    /// argument: `(Δ^S f)(T) = (Δ^S f)(T \ S)`.
    pub fn s_difference(&self, s: Coalition) -> Result<Game> {
        s.check(self.n)?;
        let mut values = self.values.clone();
        transform::sweep_dims(&mut values, s.mask(), |_, lo, hi| {
            let d = *hi - *lo;
            *lo = d;
            *hi = d;
        });
        Ok(Game { n: self.n, values })
    }

    /// Evaluates the multilinear extension at a point of `[0,1]^n`.
    ///
    /// Folds one coordinate at a time, highest player first, so 0/1
    /// vertices reproduce the table entry exactly.
    pub fn multilinear_eval(&self, x: &Point) -> Result<f64> {
        if x.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.dim(),
            });
        }
        let mut buf = self.values.clone();
        let mut len = buf.len();
        for i in (0..self.n).rev() {
            let half = len / 2;
            let xi = x.coords()[i];
            for j in 0..half {
                buf[j] = (1.0 - xi) * buf[j] + xi * buf[j + half];
            }
            len = half;
        }
        Ok(buf[0])
    }

    /// The game `π(f)(x_1, …, x_n) = f(x_{π(1)}, …, x_{π(n)})`.
    ///
    /// `perm` lists `π(1), …, π(n)` as 1-based player ids.
    pub fn permute(&self, perm: &[usize]) -> Result<Game> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let image = Coalition::from_players(perm.iter().copied())?;
        if image != Coalition::grand(self.n) {
            return Err(Error::PlayerOutOfRange {
                player: perm.iter().copied().max().unwrap_or(0),
                players: self.n,
            });
        }
        // coordinate j of f reads x_{π(j)}
        let values = (0..1u32 << self.n)
            .map(|m| {
                let mut src = 0u32;
                for (j, &from) in perm.iter().enumerate() {
                    if m & (1 << (from - 1)) != 0 {
                        src |= 1 << j;
                    }
                }
                self.values[src as usize]
            })
            .collect();
        Ok(Game { n: self.n, values })
    }
}

/// Möbius coefficients `a(S)` of the multilinear form
/// `f(x) = Σ_S a(S) Π_{i∈S} x_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct MobiusTransform {
    n: usize,
    coeffs: Vec<f64>,
}

impl MobiusTransform {
    pub fn new(n: usize, coeffs: Vec<f64>) -> Result<Self> {
        check_table(n, &coeffs)?;
        Ok(MobiusTransform { n, coeffs })
    }

    pub(crate) fn from_raw(n: usize, coeffs: Vec<f64>) -> Self {
        debug_assert_eq!(coeffs.len(), 1 << n);
        MobiusTransform { n, coeffs }
    }

    /// Builds the table from sparse `(coalition, coefficient)` terms.
    /// Repeated coalitions accumulate.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coalition, f64)>,
    {
        check_players(n)?;
        let mut coeffs = vec![0.0; 1 << n];
        for (s, c) in terms {
            s.check(n)?;
            coeffs[s.index()] += c;
        }
        MobiusTransform::new(n, coeffs)
    }

    #[inline]
    pub fn players(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    #[inline]
    pub fn coeff(&self, s: Coalition) -> f64 {
        self.coeffs[s.index()]
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    /// Degree of the multilinear polynomial: the largest `|S|` with
    /// `a(S) != 0`.
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(m, _)| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// The zeta transform back to a game.
    pub fn to_game(&self) -> Game {
        Game::from_mobius(self)
    }
}

/// A point of the unit cube `[0,1]^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if let Some((coordinate, &value)) = coords
            .iter()
            .enumerate()
            .find(|(_, x)| !(0.0..=1.0).contains(*x))
        {
            return Err(Error::PointOutOfRange {
                coordinate: coordinate + 1,
                value,
            });
        }
        Ok(Point(coords))
    }

    /// The vertex `1_S`.
    pub fn vertex(n: usize, s: Coalition) -> Self {
        Point((1..=n).map(|i| if s.contains(i) { 1.0 } else { 0.0 }).collect())
    }

    /// The center `(½, …, ½)`.
    pub fn center(n: usize) -> Self {
        Point(vec![0.5; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }
}
