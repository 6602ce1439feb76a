mod common;

use common::*;
use rand::Rng;
use wbanzhaf::analysis::{normalized_indexes, r_squared_by_correlation};
use wbanzhaf::{
    best_approximation, is_dummy_coalition, is_null_player, normalized_index, oracle,
    r_squared, residual_norm, statistics, weighted_banzhaf, weighted_banzhaf_all, Coalition, Game,
};

#[test]
fn dummy_detection_matches_the_definition() {
    let mut rng = rng(50);
    for n in 1..=6 {
        for _ in 0..5 {
            // sparse Möbius support so that some coalitions are dummy
            let coeffs: Vec<f64> = (0..1 << n)
                .map(|m: u32| {
                    if m.count_ones() <= 1 || rng.gen_bool(0.15) {
                        rng.gen_range(-1.0..1.0)
                    } else {
                        0.0
                    }
                })
                .collect();
            let f = wbanzhaf::MobiusTransform::new(n, coeffs).unwrap().to_game();
            for s in Coalition::grand(n).subsets() {
                let fast = is_dummy_coalition(&f, s).unwrap();
                assert_eq!(fast, oracle::is_dummy_by_definition(&f, s, 1e-10), "n={n} s={s}");
                assert_eq!(fast, is_dummy_coalition(&f, s.complement(n)).unwrap());
            }
        }
    }
}

#[test]
fn null_players_have_zero_interaction() {
    let mut rng = rng(51);
    for n in 2..=7 {
        let base = random_game(&mut rng, n);
        let i = rng.gen_range(1..=n);
        let f = Game::from_fn(n, |t| base.value(t.difference(Coalition::singleton(i)))).unwrap();
        assert!(is_null_player(&f, i).unwrap());
        let p = random_relaxed_profile(&mut rng, n);
        for s in Coalition::grand(n).subsets().filter(|s| s.contains(i)) {
            assert!(weighted_banzhaf(&f, &p, s).unwrap().abs() <= 1e-10);
        }
    }
    // a generic game has no null player
    assert!((1..=5).all(|i| !is_null_player(&random_game(&mut rng, 5), i).unwrap()));
}

#[test]
fn statistics_and_pythagoras() {
    let mut rng = rng(52);
    for n in 1..=8 {
        let f = random_game(&mut rng, n);
        let p = random_strict_profile(&mut rng, n);
        let st = statistics(&f, &p).unwrap();
        let second: f64 = Coalition::grand(n)
            .subsets()
            .map(|s| oracle::weight(&p, s) * f.value(s).powi(2))
            .sum();
        assert!(st.variance >= 0.0);
        assert!((st.variance - (second - st.mean.powi(2))).abs() <= 1e-12);
        for k in 0..=n {
            let approx = best_approximation(&f, &p, k).unwrap();
            let sk = statistics(&approx.to_game(), &p).unwrap();
            assert!((sk.mean - st.mean).abs() <= 1e-10);
            let r = residual_norm(&f, &approx, &p).unwrap();
            assert!((st.variance - sk.variance - r * r).abs() <= 1e-9);
        }
    }
}

#[test]
fn normalized_index_bounds_and_scale_invariance() {
    let mut rng = rng(53);
    for n in 1..=8 {
        let f = random_game(&mut rng, n);
        let p = random_strict_profile(&mut rng, n);
        let (a, b) = (rng.gen_range(0.1..5.0), rng.gen_range(-3.0..3.0));
        let g = Game::from_fn(n, |s| a * f.value(s) + b).unwrap();
        let sigma = statistics(&f, &p).unwrap().std_dev();
        let table = weighted_banzhaf_all(&f, &p).unwrap();
        let all = normalized_indexes(&f, &p).unwrap();
        for s in Coalition::grand(n).subsets().skip(1) {
            let r = normalized_index(&f, &p, s).unwrap();
            assert!((-1.0 - 1e-12..=1.0 + 1e-12).contains(&r));
            assert!((r - all[s.index()]).abs() <= 1e-12);
            assert!((normalized_index(&g, &p, s).unwrap() - r).abs() <= 1e-10);
            let sd: f64 = s.players().map(|i| (p.get(i) * (1.0 - p.get(i))).sqrt()).product();
            assert!(table.get(s).abs() <= sigma / sd * (1.0 + 1e-12));
        }
    }
}

#[test]
fn r_squared_two_ways() {
    let mut rng = rng(54);
    for n in 1..=8 {
        let f = random_game(&mut rng, n);
        let p = random_strict_profile(&mut rng, n);
        let mut previous = 0.0;
        for k in 0..=n {
            let by_var = r_squared(&f, &p, k).unwrap();
            let by_corr = r_squared_by_correlation(&f, &p, k).unwrap();
            assert!((by_var - by_corr).abs() <= 1e-9);
            assert!((-1e-12..=1.0 + 1e-12).contains(&by_var));
            assert!(by_var >= previous - 1e-12);
            previous = by_var;
        }
        assert!(r_squared(&f, &p, 0).unwrap().abs() <= 1e-12);
        assert!((r_squared(&f, &p, n).unwrap() - 1.0).abs() <= 1e-12);
    }
}
