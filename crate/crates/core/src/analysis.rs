//! Structural diagnostics and normalized statistics of games.

use crate::approximation::best_approximation;
use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::Game;
use crate::indexes::weighted_banzhaf_all;
use crate::weights::{weights, ProbabilityProfile};

/// Absolute tolerance for exact-zero tests, multiplied by `max(1, ‖f‖_∞)`.
pub const ZERO_TOLERANCE: f64 = 1e-10;

/// Standard deviations at or below this are treated as a constant game.
pub const CONSTANT_TOLERANCE: f64 = 1e-12;

fn zero_tolerance(f: &Game) -> f64 {
    ZERO_TOLERANCE * f.sup_norm().max(1.0)
}

/// Mean and variance of `f(C)` for the random coalition `C`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameStatistics {
    pub mean: f64,
    pub variance: f64,
}

impl GameStatistics {
    pub fn std_dev(&self) -> f64 {
        self.variance.sqrt()
    }
}

/// Whether the 1-based player `i` never changes the worth of a coalition.
pub fn is_null_player(f: &Game, player: usize) -> Result<bool> {
    let n = f.players();
    if player == 0 || player > n {
        return Err(Error::PlayerOutOfRange { player, players: n });
    }
    let tol = zero_tolerance(f);
    let bit = 1usize << (player - 1);
    Ok(f.values()
        .iter()
        .enumerate()
        .filter(|(m, _)| m & bit == 0)
        .all(|(m, v)| (f.values()[m | bit] - v).abs() <= tol))
}

/// All null players, 1-based.
pub fn null_players(f: &Game) -> Vec<usize> {
    (1..=f.players())
        .filter(|&i| is_null_player(f, i).unwrap_or(false))
        .collect()
}

/// Whether `S` is a dummy coalition: `f(R ∪ T) = f(R) + f(T) - f(∅)` for
/// every `R ⊆ S` and `T ⊆ N \ S`.
///
/// Checked through the Möbius transform: `S` is dummy exactly when no
/// coefficient `a(T)` is carried by a `T` meeting both `S` and `N \ S`.
pub fn is_dummy_coalition(f: &Game, s: Coalition) -> Result<bool> {
    let n = f.players();
    s.check(n)?;
    let rest = s.complement(n);
    let tol = zero_tolerance(f);
    let a = f.mobius();
    Ok(a.coeffs().iter().enumerate().all(|(m, c)| {
        let t = Coalition::from_mask(m as u32);
        t.is_disjoint(s) || t.is_disjoint(rest) || c.abs() <= tol
    }))
}

/// Mean `f̄(p)` and variance `Σ_S w(S) f(S)² - mean²`.
pub fn statistics(f: &Game, p: &ProbabilityProfile) -> Result<GameStatistics> {
    p.check_players(f.players())?;
    let mean = f.multilinear_eval(&p.as_point())?;
    let w = weights(p);
    let second: f64 = f
        .values()
        .iter()
        .zip(w.values())
        .map(|(v, w)| w * v * v)
        .sum();
    Ok(GameStatistics {
        mean,
        variance: (second - mean * mean).max(0.0),
    })
}

fn std_dev_nonconstant(f: &Game, p: &ProbabilityProfile) -> Result<f64> {
    let sigma = statistics(f, p)?.std_dev();
    if sigma <= CONSTANT_TOLERANCE {
        Err(Error::ConstantGame)
    } else {
        Ok(sigma)
    }
}

fn std_dev_product(p: &ProbabilityProfile, s: Coalition) -> f64 {
    s.players()
        .map(|i| {
            let q = p.get(i);
            (q * (1.0 - q)).sqrt()
        })
        .product()
}

/// The normalized interaction index
/// `r(f, S) = I_{B,p}(f, S) · Π_{i∈S} √(p_i(1-p_i)) / σ(f)`, the correlation
/// between `f` and `v_S`.
pub fn normalized_index(f: &Game, p: &ProbabilityProfile, s: Coalition) -> Result<f64> {
    p.check_players(f.players())?;
    s.check(f.players())?;
    if s.is_empty() {
        return Err(Error::EmptyCoalition);
    }
    p.require_strict()?;
    let sigma = std_dev_nonconstant(f, p)?;
    let index = crate::indexes::weighted_banzhaf(f, p, s)?;
    Ok(index * std_dev_product(p, s) / sigma)
}

/// Normalized indexes of every nonempty coalition, indexed by mask; the entry
/// at the empty mask is 0.
pub fn normalized_indexes(f: &Game, p: &ProbabilityProfile) -> Result<Vec<f64>> {
    p.check_players(f.players())?;
    p.require_strict()?;
    let sigma = std_dev_nonconstant(f, p)?;
    let table = weighted_banzhaf_all(f, p)?;
    Ok(table
        .values()
        .iter()
        .enumerate()
        .map(|(m, v)| {
            if m == 0 {
                0.0
            } else {
                v * std_dev_product(p, Coalition::from_mask(m as u32)) / sigma
            }
        })
        .collect())
}

/// The coefficient of determination `R²_k = σ²(f_k) / σ²(f)` of the best
/// `k`th approximation.
pub fn r_squared(f: &Game, p: &ProbabilityProfile, k: usize) -> Result<f64> {
    p.check_players(f.players())?;
    p.require_strict()?;
    let sigma = std_dev_nonconstant(f, p)?;
    let fk = best_approximation(f, p, k)?.to_game();
    Ok(statistics(&fk, p)?.variance / (sigma * sigma))
}

/// `R²_k` as the sum of squared normalized indexes over `1 ≤ |T| ≤ k`.
pub fn r_squared_by_correlation(f: &Game, p: &ProbabilityProfile, k: usize) -> Result<f64> {
    if k > f.players() {
        return Err(Error::InvalidDegree {
            k,
            players: f.players(),
        });
    }
    let r = normalized_indexes(f, p)?;
    Ok(r.iter()
        .enumerate()
        .filter(|(m, _)| (1..=k).contains(&(m.count_ones() as usize)))
        .map(|(_, r)| r * r)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::basis_v;

    fn majority() -> Game {
        Game::new(3, vec![0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0]).unwrap()
    }

    fn set(players: &[usize]) -> Coalition {
        Coalition::from_players(players.iter().copied()).unwrap()
    }

    #[test]
    fn null_players() {
        let u = Game::unanimity(4, set(&[1, 3])).unwrap();
        assert!(is_null_player(&u, 2).unwrap());
        assert!(!is_null_player(&u, 3).unwrap());
        assert_eq!(super::null_players(&u), vec![2, 4]);
        for i in 1..=3 {
            assert!(!is_null_player(&majority(), i).unwrap());
        }
        assert!(is_null_player(&u, 5).is_err());
    }

    #[test]
    fn dummy_coalitions() {
        let additive = Game::from_fn(4, |s| s.players().map(|i| i as f64).sum::<f64>() + 0.5).unwrap();
        for m in 0..16 {
            assert!(is_dummy_coalition(&additive, Coalition::from_mask(m)).unwrap());
        }
        let u = Game::unanimity(3, Coalition::grand(3)).unwrap();
        assert!(!is_dummy_coalition(&u, set(&[1])).unwrap());
        assert!(is_dummy_coalition(&u, Coalition::EMPTY).unwrap());
        assert!(is_dummy_coalition(&u, Coalition::grand(3)).unwrap());
    }

    #[test]
    fn majority_statistics() {
        let st = statistics(&majority(), &ProbabilityProfile::half(3).unwrap()).unwrap();
        assert_eq!(st.mean, 0.5);
        assert_eq!(st.variance, 0.25);
        let c = Game::constant(3, 4.0).unwrap();
        let st = statistics(&c, &ProbabilityProfile::uniform(3, 0.3).unwrap()).unwrap();
        assert!(st.variance.abs() < 1e-12);
    }

    #[test]
    fn basis_function_statistics_and_correlation() {
        let p = ProbabilityProfile::new(vec![0.2, 0.55, 0.8]).unwrap();
        let s = set(&[1, 3]);
        let v = basis_v(3, s, &p).unwrap();
        let st = statistics(&v, &p).unwrap();
        assert!(st.mean.abs() < 1e-14);
        assert!((st.variance - 1.0).abs() < 1e-14);
        assert!((normalized_index(&v, &p, s).unwrap() - 1.0).abs() < 1e-14);
        for k in 0..=3 {
            let want = if k >= 2 { 1.0 } else { 0.0 };
            assert!((r_squared(&v, &p, k).unwrap() - want).abs() < 1e-12);
            assert!((r_squared_by_correlation(&v, &p, k).unwrap() - want).abs() < 1e-12);
        }
    }

    #[test]
    fn degenerate_inputs() {
        let c = Game::constant(2, 1.0).unwrap();
        let p = ProbabilityProfile::half(2).unwrap();
        assert_eq!(normalized_index(&c, &p, set(&[1])), Err(Error::ConstantGame));
        assert_eq!(r_squared(&c, &p, 1), Err(Error::ConstantGame));
        let f = Game::unanimity(2, set(&[1])).unwrap();
        assert_eq!(normalized_index(&f, &p, Coalition::EMPTY), Err(Error::EmptyCoalition));
        let edge = ProbabilityProfile::new(vec![1.0, 0.5]).unwrap();
        assert!(matches!(
            normalized_index(&f, &edge, set(&[1])),
            Err(Error::BoundaryProbability { player: 1, .. })
        ));
    }

    #[test]
    fn majority_r_squared_two_ways() {
        let f = majority();
        let p = ProbabilityProfile::half(3).unwrap();
        let by_variance = r_squared(&f, &p, 1).unwrap();
        let by_corr = r_squared_by_correlation(&f, &p, 1).unwrap();
        assert!((by_variance - by_corr).abs() < 1e-12);
        // r(f,{i}) = ½ · ½ / ½ = ½ for each of the three players
        assert!((by_corr - 0.75).abs() < 1e-12);
        assert!((r_squared(&f, &p, 3).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(r_squared(&f, &p, 0).unwrap(), 0.0);
    }
}
