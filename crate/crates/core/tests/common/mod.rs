#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wbanzhaf::{Coalition, Game, ProbabilityProfile};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_game(rng: &mut impl Rng, n: usize) -> Game {
    Game::from_fn(n, |_| rng.gen_range(-1.0..=1.0)).unwrap()
}

pub fn random_strict_profile(rng: &mut impl Rng, n: usize) -> ProbabilityProfile {
    ProbabilityProfile::new((0..n).map(|_| rng.gen_range(1e-3..=1.0 - 1e-3)).collect()).unwrap()
}

/// Profile drawn from [0, 1] with a fair share of exact 0s and 1s.
pub fn random_relaxed_profile(rng: &mut impl Rng, n: usize) -> ProbabilityProfile {
    ProbabilityProfile::new(
        (0..n)
            .map(|_| match rng.gen_range(0..4) {
                0 => 0.0,
                1 => 1.0,
                _ => rng.gen_range(0.0..=1.0),
            })
            .collect(),
    )
    .unwrap()
}

pub fn random_coalition(rng: &mut impl Rng, n: usize) -> Coalition {
    Coalition::from_mask(rng.gen_range(0..1u32 << n))
}

pub fn set(players: &[usize]) -> Coalition {
    Coalition::from_players(players.iter().copied()).unwrap()
}

pub fn majority() -> Game {
    Game::from_fn(3, |s| if s.len() >= 2 { 1.0 } else { 0.0 }).unwrap()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}
