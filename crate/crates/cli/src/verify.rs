//! `wbanzhaf verify`: runs every library identity on the given game and on
//! seeded random games, comparing fast paths with brute-force oracles.
//!
//! Each check reports the largest error seen over the games it ran on.
//! Errors of quantities measured in game units are divided by
//! `max(1, ‖f‖_∞)` before comparison with the tolerance. Checks whose
//! oracle grows like `4^n` or faster run only below a per-check player
//! limit.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use wbanzhaf::analysis::{normalized_indexes, null_players, r_squared_by_correlation};
use wbanzhaf::weights::orthonormal_coefficients;
use wbanzhaf::{
    approximation_from_mobius, banzhaf, banzhaf_all, banzhaf_center_of_mass, basis_v,
    best_approximation, inner_product, is_dummy_coalition, is_null_player, oracle,
    probabilistic_coefficient, r_squared, shapley_all, shapley_interaction, statistics,
    weighted_banzhaf, weighted_banzhaf_all, weights, Coalition, Error, Game, MobiusTransform,
    Point, ProbabilityProfile,
};

use crate::document::{parse_profile, GameDocument};
use crate::error::CliError;
use crate::number::{nums, Num};

/// Random games per seed, each also used for a null-player and a
/// dummy-coalition variant.
pub const RANDOM_GAMES: usize = 5;

/// Player count cap for random games.
pub const RANDOM_PLAYERS: usize = 6;

pub struct VerifyArgs<'a> {
    pub document: &'a GameDocument,
    pub profile: &'a str,
    pub seed: u64,
}

struct Case {
    game: Game,
    p: ProbabilityProfile,
    /// Second profile for reindexing.
    q: ProbabilityProfile,
    null_player: Option<usize>,
    dummy: Option<Coalition>,
}

impl Case {
    fn n(&self) -> usize {
        self.game.players()
    }

    fn scale(&self) -> f64 {
        self.game.sup_norm().max(1.0)
    }
}

type Outcome = Result<Option<f64>, Error>;

struct Check {
    identity: &'static str,
    tolerance: f64,
    max_players: usize,
    run: fn(&Case) -> Outcome,
}

#[derive(Serialize)]
struct CheckReport {
    identity: &'static str,
    status: &'static str,
    max_error: Num,
    tolerance: Num,
    games: usize,
}

#[derive(Serialize)]
struct Report<'a> {
    name: Option<&'a str>,
    n: usize,
    profile: Vec<Num>,
    seed: u64,
    random_games: usize,
    checks: Vec<CheckReport>,
    passed: bool,
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn all(n: usize) -> impl Iterator<Item = Coalition> {
    (0..1u32 << n).map(Coalition::from_mask)
}

fn random_profile(rng: &mut ChaCha8Rng, n: usize) -> ProbabilityProfile {
    ProbabilityProfile::new((0..n).map(|_| rng.gen_range(0.05..0.95)).collect())
        .expect("probabilities inside [0, 1]")
}

fn random_values(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..1usize << n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

fn cases(game: Game, p: ProbabilityProfile, seed: u64) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = game.players();
    let q = random_profile(&mut rng, n);
    let mut out = vec![Case {
        game,
        p,
        q,
        null_player: None,
        dummy: None,
    }];
    let m = n.min(RANDOM_PLAYERS);
    for _ in 0..RANDOM_GAMES {
        let p = random_profile(&mut rng, m);
        let q = random_profile(&mut rng, m);
        let base = Game::new(m, random_values(&mut rng, m)).expect("finite table");
        out.push(Case {
            game: base,
            p: p.clone(),
            q: q.clone(),
            null_player: None,
            dummy: None,
        });
        if m < 2 {
            continue;
        }
        let j = rng.gen_range(1..=m);
        let g = random_values(&mut rng, m);
        let bit = Coalition::singleton(j);
        let null = Game::from_fn(m, |s| g[s.difference(bit).index()]).expect("finite table");
        out.push(Case {
            game: null,
            p: p.clone(),
            q: q.clone(),
            null_player: Some(j),
            dummy: None,
        });
        let mut players: Vec<usize> = (1..=m).collect();
        players.shuffle(&mut rng);
        let size = rng.gen_range(1..m);
        let s = Coalition::from_players(players[..size].iter().copied()).expect("distinct players");
        let (g, h) = (random_values(&mut rng, m), random_values(&mut rng, m));
        let split = Game::from_fn(m, |r| {
            g[r.intersection(s).index()] + h[r.difference(s).index()]
        })
        .expect("finite table");
        out.push(Case {
            game: split,
            p,
            q,
            null_player: None,
            dummy: Some(s),
        });
    }
    out
}

fn checks() -> Vec<Check> {
    let unbounded = wbanzhaf::MAX_PLAYERS;
    vec![
        Check {
            identity: "mobius transform matches alternating subset sums",
            tolerance: 1e-9,
            max_players: 10,
            run: |c| Ok(Some(max_diff(c.game.mobius().coeffs(), &oracle::mobius(&c.game)) / c.scale())),
        },
        Check {
            identity: "zeta transform inverts mobius transform",
            tolerance: 1e-9,
            max_players: unbounded,
            run: |c| Ok(Some(max_diff(c.game.mobius().to_game().values(), c.game.values()) / c.scale())),
        },
        Check {
            identity: "s-difference matches alternating sum",
            tolerance: 1e-9,
            max_players: 6,
            run: |c| {
                let mut err: f64 = 0.0;
                for s in all(c.n()) {
                    let d = c.game.s_difference(s)?;
                    for t in all(c.n()) {
                        err = err.max((d.value(t) - oracle::s_difference_at(&c.game, s, t)).abs());
                    }
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "multilinear extension interpolates and matches expansion",
            tolerance: 1e-9,
            max_players: 10,
            run: |c| {
                let mut err: f64 = 0.0;
                for s in all(c.n()) {
                    let at = c.game.multilinear_eval(&Point::vertex(c.n(), s))?;
                    err = err.max((at - c.game.value(s)).abs());
                }
                for x in [c.p.probs(), c.q.probs()] {
                    let fast = c.game.multilinear_eval(&Point::new(x.to_vec())?)?;
                    err = err.max((fast - oracle::multilinear(&c.game, x)).abs());
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "coalition weights form a probability distribution",
            tolerance: 1e-10,
            max_players: unbounded,
            run: |c| {
                let w = weights(&c.p);
                let total: f64 = w.values().iter().sum();
                let mut err = (total - 1.0).abs();
                if c.n() <= 10 {
                    for s in all(c.n()) {
                        err = err.max((w.get(s) - oracle::weight(&c.p, s)).abs());
                    }
                }
                Ok(Some(err))
            },
        },
        Check {
            identity: "basis functions are orthonormal",
            tolerance: 1e-10,
            max_players: 6,
            run: |c| {
                let w = weights(&c.p);
                let basis: Vec<Game> = all(c.n())
                    .map(|s| basis_v(c.n(), s, &c.p))
                    .collect::<Result<_, _>>()?;
                let mut err: f64 = 0.0;
                for (a, va) in basis.iter().enumerate() {
                    for (b, vb) in basis.iter().enumerate().skip(a) {
                        let want = if a == b { 1.0 } else { 0.0 };
                        err = err.max((inner_product(va, vb, &w)? - want).abs());
                    }
                    let naive = oracle::basis_v(&c.p, Coalition::from_mask(a as u32));
                    err = err.max(max_diff(va.values(), &naive));
                }
                Ok(Some(err))
            },
        },
        Check {
            identity: "orthonormal coefficients match inner products",
            tolerance: 1e-9,
            max_players: 8,
            run: |c| {
                let fast = orthonormal_coefficients(&c.game, &c.p)?;
                let naive: Vec<f64> = all(c.n())
                    .map(|s| oracle::inner_product(c.game.values(), &oracle::basis_v(&c.p, s), &c.p))
                    .collect();
                Ok(Some(max_diff(&fast, &naive) / c.scale()))
            },
        },
        Check {
            identity: "four weighted index formulas agree",
            tolerance: 1e-9,
            max_players: 8,
            run: |c| {
                let table = weighted_banzhaf_all(&c.game, &c.p)?;
                let mut err: f64 = 0.0;
                for s in all(c.n()) {
                    let forms = [
                        table.get(s),
                        oracle::index_by_inner_product(&c.game, &c.p, s),
                        oracle::index_by_vertex_sum(&c.game, &c.p, s),
                        oracle::index_by_expected_difference(&c.game, &c.p, s),
                        oracle::index_by_mobius_sum(&c.game, &c.p, s),
                    ];
                    for a in &forms {
                        for b in &forms {
                            err = err.max((a - b).abs());
                        }
                    }
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "weighted index as average of marginal interactions",
            tolerance: 1e-9,
            max_players: 10,
            run: |c| {
                let table = weighted_banzhaf_all(&c.game, &c.p)?;
                let mut err: f64 = 0.0;
                for s in all(c.n()) {
                    err = err.max((weighted_banzhaf(&c.game, &c.p, s)? - table.get(s)).abs());
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "probabilistic coefficients sum to one",
            tolerance: 1e-12,
            max_players: 10,
            run: |c| {
                let mut err: f64 = 0.0;
                for s in all(c.n()) {
                    let total: f64 = s
                        .complement(c.n())
                        .subsets()
                        .map(|t| probabilistic_coefficient(&c.p, s, t))
                        .sum::<Result<f64, _>>()?;
                    err = err.max((total - 1.0).abs());
                }
                Ok(Some(err))
            },
        },
        Check {
            identity: "empty-coalition index is the mean",
            tolerance: 1e-10,
            max_players: unbounded,
            run: |c| {
                let table = weighted_banzhaf_all(&c.game, &c.p)?;
                let mean = statistics(&c.game, &c.p)?.mean;
                Ok(Some((table.get(Coalition::EMPTY) - mean).abs() / c.scale()))
            },
        },
        Check {
            identity: "indexes convert back to mobius coefficients",
            tolerance: 1e-9,
            max_players: unbounded,
            run: |c| {
                let table = weighted_banzhaf_all(&c.game, &c.p)?;
                Ok(Some(max_diff(table.to_mobius().coeffs(), c.game.mobius().coeffs()) / c.scale()))
            },
        },
        Check {
            identity: "reindex roundtrip between two profiles",
            tolerance: 1e-9,
            max_players: unbounded,
            run: |c| {
                let table = weighted_banzhaf_all(&c.game, &c.p)?;
                let back = table.reindex(&c.q)?.reindex(&c.p)?;
                Ok(Some(max_diff(back.values(), table.values()) / c.scale()))
            },
        },
        Check {
            identity: "reindex matches direct computation",
            tolerance: 1e-9,
            max_players: unbounded,
            run: |c| {
                let moved = weighted_banzhaf_all(&c.game, &c.p)?.reindex(&c.q)?;
                let direct = weighted_banzhaf_all(&c.game, &c.q)?;
                Ok(Some(max_diff(moved.values(), direct.values()) / c.scale()))
            },
        },
        Check {
            identity: "games are reconstructed from their indexes",
            tolerance: 1e-9,
            max_players: unbounded,
            run: |c| {
                let table = weighted_banzhaf_all(&c.game, &c.p)?;
                let mut err = max_diff(table.reconstruct().values(), c.game.values());
                if c.n() <= 8 {
                    err = err.max(max_diff(&oracle::reconstruct(table.values(), &c.p), c.game.values()));
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "banzhaf index is the weighted index at one half",
            tolerance: 1e-9,
            max_players: 10,
            run: |c| {
                let table = banzhaf_all(&c.game)?;
                let mut err: f64 = 0.0;
                for s in all(c.n()) {
                    err = err.max((banzhaf(&c.game, s)? - table.get(s)).abs());
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "banzhaf index is the center of mass of weighted indexes",
            tolerance: 1e-12,
            max_players: 6,
            run: |c| {
                let table = banzhaf_all(&c.game)?;
                let mut err: f64 = 0.0;
                for s in all(c.n()) {
                    let closed = banzhaf_center_of_mass(&c.game, s)?;
                    err = err.max((closed - table.get(s)).abs());
                    err = err.max((oracle::center_of_mass_by_quadrature(&c.game, s) - table.get(s)).abs());
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "shapley index matches quadrature of symmetric weighted indexes",
            tolerance: 1e-10,
            max_players: 6,
            run: |c| {
                let table = shapley_all(&c.game);
                let mut err: f64 = 0.0;
                for s in all(c.n()) {
                    err = err.max((oracle::shapley_by_quadrature(&c.game, s) - table[s.index()]).abs());
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "shapley table matches single-coalition sums",
            tolerance: 1e-9,
            max_players: 10,
            run: |c| {
                let table = shapley_all(&c.game);
                let mut err: f64 = 0.0;
                for s in all(c.n()) {
                    err = err.max((shapley_interaction(&c.game, s)? - table[s.index()]).abs());
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "best approximation solves the weighted normal equations",
            tolerance: 1e-8,
            max_players: 6,
            run: |c| {
                let mut err: f64 = 0.0;
                for k in 0..=c.n() {
                    let fast = best_approximation(&c.game, &c.p, k)?;
                    err = err.max(max_diff(fast.coeffs(), &oracle::least_squares(&c.game, &c.p, k)));
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "approximation residual is orthogonal to low-degree basis",
            tolerance: 1e-9,
            max_players: 6,
            run: |c| {
                let w = weights(&c.p);
                let mut err: f64 = 0.0;
                for k in 0..=c.n() {
                    let fk = best_approximation(&c.game, &c.p, k)?.to_game();
                    let diff: Vec<f64> = c.game.values().iter().zip(fk.values()).map(|(a, b)| a - b).collect();
                    let residual = Game::new(c.n(), diff)?;
                    for s in all(c.n()).filter(|s| s.len() <= k) {
                        err = err.max(inner_product(&residual, &basis_v(c.n(), s, &c.p)?, &w)?.abs());
                    }
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "closed-form approximation matches projection",
            tolerance: 1e-9,
            max_players: 10,
            run: |c| {
                let a = c.game.mobius();
                let mut err: f64 = 0.0;
                for k in 0..=c.n() {
                    let fast = best_approximation(&c.game, &c.p, k)?;
                    err = err.max(max_diff(fast.coeffs(), approximation_from_mobius(&a, &c.p, k)?.coeffs()));
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "approximation preserves indexes up to its degree",
            tolerance: 1e-9,
            max_players: 10,
            run: |c| {
                let full = weighted_banzhaf_all(&c.game, &c.p)?;
                let mut err: f64 = 0.0;
                for k in 0..=c.n() {
                    let fk = best_approximation(&c.game, &c.p, k)?;
                    let reduced =
                        wbanzhaf::weighted_banzhaf_from_mobius(&fk.to_mobius(), &c.p)?;
                    for s in all(c.n()).filter(|s| s.len() <= k) {
                        err = err.max((reduced.get(s) - full.get(s)).abs());
                    }
                    // the leading coefficient of the degree-|S| approximation
                    for s in all(c.n()).filter(|s| s.len() == k) {
                        err = err.max((fk.coeff(s) - full.get(s)).abs());
                    }
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "null players have vanishing indexes",
            tolerance: 1e-10,
            max_players: unbounded,
            run: |c| {
                let found = null_players(&c.game);
                if let Some(j) = c.null_player {
                    if !is_null_player(&c.game, j)? {
                        return Ok(Some(f64::INFINITY));
                    }
                }
                if found.is_empty() {
                    return Ok(None);
                }
                let tables = [
                    weighted_banzhaf_all(&c.game, &c.p)?.values().to_vec(),
                    banzhaf_all(&c.game)?.values().to_vec(),
                    shapley_all(&c.game),
                ];
                let mut err: f64 = 0.0;
                for i in found {
                    for s in all(c.n()).filter(|s| s.contains(i)) {
                        for t in &tables {
                            err = err.max(t[s.index()].abs());
                        }
                    }
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "dummy coalitions have no cross interactions",
            tolerance: 1e-10,
            max_players: unbounded,
            run: |c| {
                let Some(s) = c.dummy else { return Ok(None) };
                if !is_dummy_coalition(&c.game, s)? {
                    return Ok(Some(f64::INFINITY));
                }
                let rest = s.complement(c.n());
                let tables = [
                    weighted_banzhaf_all(&c.game, &c.p)?.values().to_vec(),
                    banzhaf_all(&c.game)?.values().to_vec(),
                    shapley_all(&c.game),
                    c.game.mobius().into_coeffs(),
                ];
                let mut err: f64 = 0.0;
                for t in all(c.n()).filter(|t| !t.is_disjoint(s) && !t.is_disjoint(rest)) {
                    for table in &tables {
                        err = err.max(table[t.index()].abs());
                    }
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "dummy coalition test matches its definition",
            tolerance: 0.0,
            max_players: 6,
            run: |c| {
                let tol = 1e-10 * c.scale();
                let disagreements = all(c.n())
                    .map(|s| is_dummy_coalition(&c.game, s).map(|d| d != oracle::is_dummy_by_definition(&c.game, s, tol)))
                    .filter(|r| !matches!(r, Ok(false)))
                    .count();
                Ok(Some(disagreements as f64))
            },
        },
        Check {
            identity: "normalized indexes are correlations in [-1, 1]",
            tolerance: 1e-12,
            max_players: unbounded,
            run: |c| {
                let r = match normalized_indexes(&c.game, &c.p) {
                    Err(Error::ConstantGame) => return Ok(None),
                    other => other?,
                };
                let sigma = statistics(&c.game, &c.p)?.std_dev();
                let coeffs = orthonormal_coefficients(&c.game, &c.p)?;
                let mut err: f64 = 0.0;
                for (r, c) in r.iter().zip(&coeffs).skip(1) {
                    err = err.max(r.abs() - 1.0).max((r - c / sigma).abs());
                }
                Ok(Some(err))
            },
        },
        Check {
            identity: "coefficient of determination is monotone in [0, 1]",
            tolerance: 1e-9,
            max_players: 12,
            run: |c| {
                let mut err: f64 = 0.0;
                let mut previous = 0.0;
                for k in 0..=c.n() {
                    let r2 = match r_squared(&c.game, &c.p, k) {
                        Err(Error::ConstantGame) => return Ok(None),
                        other => other?,
                    };
                    err = err.max(-r2).max(r2 - 1.0).max(previous - r2);
                    previous = r2;
                }
                Ok(Some(err.max((previous - 1.0).abs())))
            },
        },
        Check {
            identity: "coefficient of determination two ways",
            tolerance: 1e-9,
            max_players: 12,
            run: |c| {
                let mut err: f64 = 0.0;
                for k in 0..=c.n() {
                    let by_variance = match r_squared(&c.game, &c.p, k) {
                        Err(Error::ConstantGame) => return Ok(None),
                        other => other?,
                    };
                    err = err.max((by_variance - r_squared_by_correlation(&c.game, &c.p, k)?).abs());
                }
                Ok(Some(err))
            },
        },
        Check {
            identity: "relabeling players relabels indexes",
            tolerance: 1e-9,
            max_players: unbounded,
            run: |c| {
                let n = c.n();
                // reverse the player order
                let perm: Vec<usize> = (1..=n).rev().collect();
                let g = c.game.permute(&perm)?;
                let mut probs = vec![0.0; n];
                for (j, &to) in perm.iter().enumerate() {
                    probs[to - 1] = c.p.probs()[j];
                }
                let tf = weighted_banzhaf_all(&c.game, &c.p)?;
                let tg = weighted_banzhaf_all(&g, &ProbabilityProfile::new(probs)?)?;
                let mut err: f64 = 0.0;
                for s in all(n) {
                    let image = Coalition::from_players(s.players().map(|i| perm[i - 1]))?;
                    err = err.max((tg.get(image) - tf.get(s)).abs());
                }
                Ok(Some(err / c.scale()))
            },
        },
        Check {
            identity: "unanimity games have unit mobius support",
            tolerance: 0.0,
            max_players: 10,
            run: |c| {
                let mut err: f64 = 0.0;
                for s in all(c.n()) {
                    let a = Game::unanimity(c.n(), s)?.mobius();
                    let want = MobiusTransform::from_terms(c.n(), [(s, 1.0)])?;
                    err = err.max(max_diff(a.coeffs(), want.coeffs()));
                }
                Ok(Some(err))
            },
        },
    ]
}

pub fn run(args: &VerifyArgs) -> Result<String, CliError> {
    let game = args.document.to_game()?;
    let n = game.players();
    let p = parse_profile(args.profile, n)?;
    p.require_strict()?;
    let cases = cases(game, p.clone(), args.seed);
    let mut reports = Vec::new();
    for check in checks() {
        let mut max_error: f64 = 0.0;
        let mut games = 0;
        for case in cases.iter().filter(|c| c.n() <= check.max_players) {
            if let Some(err) = (check.run)(case)? {
                games += 1;
                // NaN must survive the fold so the check fails
                max_error = if err.is_nan() || max_error.is_nan() { f64::NAN } else { max_error.max(err) };
            }
        }
        let status = if games == 0 {
            "skipped"
        } else if max_error <= check.tolerance {
            "pass"
        } else {
            "fail"
        };
        reports.push(CheckReport {
            identity: check.identity,
            status,
            max_error: Num(max_error),
            tolerance: Num(check.tolerance),
            games,
        });
    }
    let failed = reports.iter().filter(|r| r.status == "fail").count();
    let report = Report {
        name: args.document.name.as_deref(),
        n,
        profile: nums(p.probs()),
        seed: args.seed,
        random_games: cases.len() - 1,
        checks: reports,
        passed: failed == 0,
    };
    let mut out = serde_json::to_string_pretty(&report)
        .map_err(|e| CliError::Io(format!("cannot encode report: {e}")))?;
    out.push('\n');
    if failed > 0 {
        Err(CliError::Verification {
            report: out,
            failed,
        })
    } else {
        Ok(out)
    }
}
