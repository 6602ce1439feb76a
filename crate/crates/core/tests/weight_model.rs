mod common;

use common::*;
use wbanzhaf::{basis_v, inner_product, oracle, weights, Coalition, Game, ProbabilityProfile};

#[test]
fn weights_match_direct_products_and_sum_to_one() {
    let mut rng = rng(10);
    for case in 0..100 {
        let n = 1 + case % 10;
        let p = random_relaxed_profile(&mut rng, n);
        let w = weights(&p);
        let total: f64 = w.values().iter().sum();
        assert!((total - 1.0).abs() <= 1e-12);
        assert!(w.values().iter().all(|&x| x >= 0.0));
        for s in Coalition::grand(n).subsets() {
            assert!((w.get(s) - oracle::weight(&p, s)).abs() <= 1e-15);
        }
        for i in 1..=n {
            let marginal: f64 = Coalition::grand(n)
                .subsets()
                .filter(|s| s.contains(i))
                .map(|s| w.get(s))
                .sum();
            assert!((marginal - p.get(i)).abs() <= 1e-12);
        }
    }
}

#[test]
fn basis_is_orthonormal() {
    let mut rng = rng(11);
    for n in 1..=8 {
        let p = random_strict_profile(&mut rng, n);
        let w = weights(&p);
        let basis: Vec<Game> = Coalition::grand(n)
            .subsets()
            .map(|s| basis_v(n, s, &p).unwrap())
            .collect();
        for (s, vs) in basis.iter().enumerate() {
            assert!(max_abs_diff(vs.values(), &oracle::basis_v(&p, Coalition::from_mask(s as u32))) <= 1e-9);
            for (t, vt) in basis.iter().enumerate() {
                let want = if s == t { 1.0 } else { 0.0 };
                let got = inner_product(vs, vt, &w).unwrap();
                assert!((got - want).abs() <= 1e-10, "n={n} s={s} t={t}: {got}");
            }
        }
    }
}

#[test]
fn expectation_is_the_multilinear_extension_at_p() {
    let mut rng = rng(12);
    for n in 1..=8 {
        let f = random_game(&mut rng, n);
        let p = random_strict_profile(&mut rng, n);
        let one = Game::constant(n, 1.0).unwrap();
        let v0 = basis_v(n, Coalition::EMPTY, &p).unwrap();
        assert_eq!(v0, one);
        let mean = inner_product(&f, &one, &weights(&p)).unwrap();
        assert!((mean - f.multilinear_eval(&p.as_point()).unwrap()).abs() <= 1e-10);
    }
}

#[test]
fn inner_product_is_symmetric_and_checks_dimensions() {
    let mut rng = rng(13);
    let f = random_game(&mut rng, 4);
    let g = random_game(&mut rng, 4);
    let w = weights(&random_strict_profile(&mut rng, 4));
    let fg = inner_product(&f, &g, &w).unwrap();
    assert_eq!(fg, inner_product(&g, &f, &w).unwrap());
    let h = random_game(&mut rng, 3);
    assert!(inner_product(&f, &h, &w).is_err());
    assert!(basis_v(3, Coalition::EMPTY, &ProbabilityProfile::half(4).unwrap()).is_err());
}
