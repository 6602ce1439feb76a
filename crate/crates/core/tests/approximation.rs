mod common;

use common::*;
use wbanzhaf::{
    approximation_from_mobius, basis_v, best_approximation, inner_product, oracle, residual_norm,
    weighted_banzhaf_all, weights, Coalition, Game, ProbabilityProfile,
};

fn binomial(n: u64, r: u64) -> f64 {
    (0..r).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}

#[test]
fn coefficients_match_normal_equations() {
    let mut rng = rng(20);
    for n in 1..=6 {
        for _ in 0..3 {
            let f = random_game(&mut rng, n);
            let p = random_strict_profile(&mut rng, n);
            for k in 0..=n {
                let approx = best_approximation(&f, &p, k).unwrap();
                let want = oracle::least_squares(&f, &p, k);
                assert!(max_abs_diff(approx.coeffs(), &want) <= 1e-8, "n={n} k={k}");
                let dist = oracle::weighted_distance_sq(f.values(), &oracle::zeta(n, &want), &p).sqrt();
                let got = residual_norm(&f, &approx, &p).unwrap();
                assert!((got - dist).abs() <= 1e-9);
            }
        }
    }
}

#[test]
fn closed_form_from_mobius_agrees_with_projection() {
    let mut rng = rng(21);
    for n in 1..=8 {
        let f = random_game(&mut rng, n);
        let p = random_strict_profile(&mut rng, n);
        for k in 0..=n {
            let a = best_approximation(&f, &p, k).unwrap();
            let b = approximation_from_mobius(&f.mobius(), &p, k).unwrap();
            assert!(max_abs_diff(a.coeffs(), b.coeffs()) <= 1e-9, "n={n} k={k}");
        }
    }
}

#[test]
fn uniform_profile_reduces_to_the_non_weighted_formula() {
    // a_k(S) = a(S) + (-1)^{k-|S|} Σ_{T⊇S,|T|>k} C(|T|-|S|-1, k-|S|) (½)^{|T|-|S|} a(T)
    let mut rng = rng(22);
    let n = 5;
    let f = random_game(&mut rng, n);
    let a = oracle::mobius(&f);
    let p = ProbabilityProfile::half(n).unwrap();
    for k in 0..=n {
        let approx = approximation_from_mobius(&f.mobius(), &p, k).unwrap();
        for s in Coalition::grand(n).subsets().filter(|s| s.len() <= k) {
            let mut tail = 0.0;
            for t in Coalition::grand(n).subsets() {
                if s.is_subset_of(t) && t.len() > k {
                    let d = (t.len() - s.len()) as u64;
                    tail += binomial(d - 1, (k - s.len()) as u64) * 0.5f64.powi(d as i32) * a[t.index()];
                }
            }
            let sign = if (k - s.len()) % 2 == 0 { 1.0 } else { -1.0 };
            let want = a[s.index()] + sign * tail;
            assert!((approx.coeff(s) - want).abs() <= 1e-12);
        }
    }
}

#[test]
fn boundary_profiles_are_accepted_by_the_closed_form() {
    let mut rng = rng(23);
    let n = 5;
    let f = random_game(&mut rng, n);
    let p = ProbabilityProfile::new(vec![0.0, 1.0, 0.3, 0.0, 0.8]).unwrap();
    assert!(best_approximation(&f, &p, 2).is_err());
    let full = approximation_from_mobius(&f.mobius(), &p, n).unwrap();
    assert_eq!(full.coeffs(), f.mobius().coeffs());
    // the closed form is continuous in p: compare with a nearby strict profile
    let near = ProbabilityProfile::new(vec![1e-7, 1.0 - 1e-7, 0.3, 1e-7, 0.8]).unwrap();
    for k in 0..n {
        let at_edge = approximation_from_mobius(&f.mobius(), &p, k).unwrap();
        let inside = best_approximation(&f, &near, k).unwrap();
        assert!(max_abs_diff(at_edge.coeffs(), inside.coeffs()) <= 1e-5);
    }
}

#[test]
fn evaluation_of_majority_degree_one() {
    let f = majority();
    let p = ProbabilityProfile::half(3).unwrap();
    let approx = best_approximation(&f, &p, 1).unwrap();
    let oracle_table = oracle::zeta(3, &oracle::least_squares(&f, &p, 1));
    for s in Coalition::grand(3).subsets() {
        assert!((approx.evaluate(s).unwrap() - oracle_table[s.index()]).abs() <= 1e-12);
    }
    // f_1 = -¼ + ½(x1 + x2 + x3)
    assert!((approx.evaluate(Coalition::grand(3)).unwrap() - 1.25).abs() <= 1e-15);
    let full = best_approximation(&f, &p, 3).unwrap();
    for s in Coalition::grand(3).subsets() {
        assert!((full.evaluate(s).unwrap() - f.value(s)).abs() <= 1e-15);
    }
}

#[test]
fn projection_properties() {
    let mut rng = rng(24);
    for n in 1..=6 {
        let f = random_game(&mut rng, n);
        let p = random_strict_profile(&mut rng, n);
        let w = weights(&p);
        let index_f = weighted_banzhaf_all(&f, &p).unwrap();
        let mut previous = f64::INFINITY;
        for k in 0..=n {
            let approx = best_approximation(&f, &p, k).unwrap();
            let fk = approx.to_game();
            let residual = Game::from_fn(n, |s| f.value(s) - fk.value(s)).unwrap();
            // orthogonality of the residual to V_k
            for s in Coalition::grand(n).subsets().filter(|s| s.len() <= k) {
                let v = basis_v(n, s, &p).unwrap();
                assert!(inner_product(&residual, &v, &w).unwrap().abs() <= 1e-9);
            }
            // indexes of order ≤ k are preserved
            let index_fk = weighted_banzhaf_all(&fk, &p).unwrap();
            for s in Coalition::grand(n).subsets().filter(|s| s.len() <= k) {
                assert!((index_fk.get(s) - index_f.get(s)).abs() <= 1e-9);
            }
            // residual shrinks with k and obeys Pythagoras
            let r = residual_norm(&f, &approx, &p).unwrap();
            assert!(r <= previous + 1e-12);
            previous = r;
            let norm_sq = inner_product(&f, &f, &w).unwrap();
            let captured: f64 = Coalition::grand(n)
                .subsets()
                .filter(|s| s.len() <= k)
                .map(|s| inner_product(&f, &basis_v(n, s, &p).unwrap(), &w).unwrap().powi(2))
                .sum();
            assert!((r - (norm_sq - captured).max(0.0).sqrt()).abs() <= 1e-7);
            // idempotence
            let again = best_approximation(&fk, &p, k).unwrap();
            assert!(max_abs_diff(again.coeffs(), approx.coeffs()) <= 1e-10);
        }
    }
}

#[test]
fn perturbing_a_coefficient_increases_the_distance() {
    let mut rng = rng(25);
    for n in 1..=6 {
        let f = random_game(&mut rng, n);
        let p = random_strict_profile(&mut rng, n);
        for k in 0..=n {
            let approx = best_approximation(&f, &p, k).unwrap();
            let base = oracle::weighted_distance_sq(f.values(), approx.to_game().values(), &p);
            for (s, _) in approx.terms() {
                for delta in [1e-3, -1e-3] {
                    let mut c = approx.coeffs().to_vec();
                    c[s.index()] += delta;
                    let moved = oracle::weighted_distance_sq(f.values(), &oracle::zeta(n, &c), &p);
                    assert!(moved > base, "n={n} k={k} s={s}");
                }
            }
        }
    }
}

#[test]
fn basis_function_residual_is_zero_or_one() {
    let mut rng = rng(26);
    let n = 5;
    let p = random_strict_profile(&mut rng, n);
    let s = set(&[1, 2, 4]);
    let v = basis_v(n, s, &p).unwrap();
    for k in 0..=n {
        let r = residual_norm(&v, &best_approximation(&v, &p, k).unwrap(), &p).unwrap();
        assert!((r - if k >= 3 { 0.0 } else { 1.0 }).abs() <= 1e-9);
    }
}
