//! Brute-force reference implementations.
//!
//! Everything here follows the defining formulas term by term, without the
//! fast sweeps used elsewhere in the crate. Costs are `O(4^n)` or worse and
//! the routines are meant for validation on small games only (think
//! `n ≤ 10`).

use nalgebra::{DMatrix, DVector};

use crate::coalition::Coalition;
use crate::game::Game;
use crate::weights::ProbabilityProfile;

fn all(n: usize) -> impl Iterator<Item = Coalition> {
    (0..1u32 << n).map(Coalition::from_mask)
}

fn sign(parity: usize) -> f64 {
    if parity.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `Pr(C = S)` for the product distribution.
pub fn weight(p: &ProbabilityProfile, s: Coalition) -> f64 {
    (1..=p.players())
        .map(|i| if s.contains(i) { p.get(i) } else { 1.0 - p.get(i) })
        .product()
}

/// `a(S) = Σ_{T⊆S} (-1)^{|S|-|T|} f(T)`, one subset at a time.
pub fn mobius(f: &Game) -> Vec<f64> {
    all(f.players())
        .map(|s| {
            all(f.players())
                .filter(|t| t.is_subset_of(s))
                .map(|t| sign(s.len() - t.len()) * f.value(t))
                .sum()
        })
        .collect()
}

/// `f(S) = Σ_{T⊆S} a(T)`.
pub fn zeta(n: usize, a: &[f64]) -> Vec<f64> {
    all(n)
        .map(|s| all(n).filter(|t| t.is_subset_of(s)).map(|t| a[t.index()]).sum())
        .collect()
}

/// `(Δ^S f)(T) = Σ_{L⊆S} (-1)^{|S\L|} f((T \ S) ∪ L)`.
pub fn s_difference_at(f: &Game, s: Coalition, t: Coalition) -> f64 {
    let base = t.difference(s);
    s.subsets()
        .map(|l| sign(s.len() - l.len()) * f.value(base.union(l)))
        .sum()
}

/// `Σ_S f(S) Π_{i∈S} x_i Π_{i∉S} (1 - x_i)`.
pub fn multilinear(f: &Game, x: &[f64]) -> f64 {
    all(f.players())
        .map(|s| {
            let prod: f64 = (1..=f.players())
                .map(|i| if s.contains(i) { x[i - 1] } else { 1.0 - x[i - 1] })
                .product();
            f.value(s) * prod
        })
        .sum()
}

/// `⟨f, g⟩` summed vertex by vertex.
pub fn inner_product(f: &[f64], g: &[f64], p: &ProbabilityProfile) -> f64 {
    all(p.players())
        .map(|s| weight(p, s) * f[s.index()] * g[s.index()])
        .sum()
}

/// `v_S` evaluated coordinate by coordinate.
pub fn basis_v(p: &ProbabilityProfile, s: Coalition) -> Vec<f64> {
    all(p.players())
        .map(|x| {
            s.players()
                .map(|i| {
                    let q = p.get(i);
                    let xi = if x.contains(i) { 1.0 } else { 0.0 };
                    (xi - q) / (q * (1.0 - q)).sqrt()
                })
                .product()
        })
        .collect()
}

/// Weighted index from its inner-product definition,
/// `Σ_x w(x) f(x) Π_{i∈S}(x_i - p_i) / Π_{i∈S} p_i(1-p_i)`.
pub fn index_by_inner_product(f: &Game, p: &ProbabilityProfile, s: Coalition) -> f64 {
    let denom: f64 = s.players().map(|i| p.get(i) * (1.0 - p.get(i))).product();
    let sum: f64 = all(f.players())
        .map(|x| {
            let prod: f64 = s
                .players()
                .map(|i| if x.contains(i) { 1.0 - p.get(i) } else { -p.get(i) })
                .product();
            weight(p, x) * f.value(x) * prod
        })
        .sum();
    sum / denom
}

/// Weighted index as a signed vertex sum,
/// `Σ_T (-1)^{|S\T|} f(T) Π_{i∈T\S} p_i Π_{i∉T∪S} (1 - p_i)`.
pub fn index_by_vertex_sum(f: &Game, p: &ProbabilityProfile, s: Coalition) -> f64 {
    let n = f.players();
    all(n)
        .map(|t| {
            let prod: f64 = (1..=n)
                .filter(|&i| !s.contains(i))
                .map(|i| if t.contains(i) { p.get(i) } else { 1.0 - p.get(i) })
                .product();
            sign(s.difference(t).len()) * f.value(t) * prod
        })
        .sum()
}

/// Weighted index as the expected `S`-difference, `Σ_T w(T) (Δ^S f)(T)`.
pub fn index_by_expected_difference(f: &Game, p: &ProbabilityProfile, s: Coalition) -> f64 {
    all(f.players())
        .map(|t| weight(p, t) * s_difference_at(f, s, t))
        .sum()
}

/// Weighted index from Möbius coefficients, `Σ_{T⊇S} a(T) Π_{i∈T\S} p_i`.
pub fn index_by_mobius_sum(f: &Game, p: &ProbabilityProfile, s: Coalition) -> f64 {
    let a = mobius(f);
    all(f.players())
        .filter(|t| s.is_subset_of(*t))
        .map(|t| {
            let prod: f64 = t.difference(s).players().map(|i| p.get(i)).product();
            a[t.index()] * prod
        })
        .sum()
}

/// Rebuilds vertex values from weighted indexes,
/// `f(x) = Σ_T I(T) Π_{i∈T} (x_i - p_i)`.
pub fn reconstruct(indexes: &[f64], p: &ProbabilityProfile) -> Vec<f64> {
    let n = p.players();
    all(n)
        .map(|x| {
            all(n)
                .map(|t| {
                    let prod: f64 = t
                        .players()
                        .map(|i| if x.contains(i) { 1.0 } else { 0.0 } - p.get(i))
                        .product();
                    indexes[t.index()] * prod
                })
                .sum()
        })
        .collect()
}

/// Best degree-`k` approximation by solving the weighted normal equations
/// over the monomial basis `{u_S : |S| ≤ k}`. Returns the full mask-indexed
/// coefficient table (zeros above degree `k`).
pub fn least_squares(f: &Game, p: &ProbabilityProfile, k: usize) -> Vec<f64> {
    let n = f.players();
    let basis: Vec<Coalition> = all(n).filter(|s| s.len() <= k).collect();
    let m = basis.len();
    let w: Vec<f64> = all(n).map(|x| weight(p, x)).collect();
    let mut gram = DMatrix::<f64>::zeros(m, m);
    let mut rhs = DVector::<f64>::zeros(m);
    for (r, &s) in basis.iter().enumerate() {
        for (c, &t) in basis.iter().enumerate() {
            // u_S u_T = u_{S∪T}
            gram[(r, c)] = all(n)
                .filter(|x| s.union(t).is_subset_of(*x))
                .map(|x| w[x.index()])
                .sum();
        }
        rhs[r] = all(n)
            .filter(|x| s.is_subset_of(*x))
            .map(|x| w[x.index()] * f.value(x))
            .sum();
    }
    let sol = gram
        .lu()
        .solve(&rhs)
        .expect("normal equations are nonsingular for a strict profile");
    let mut out = vec![0.0; 1 << n];
    for (s, c) in basis.iter().zip(sol.iter()) {
        out[s.index()] = *c;
    }
    out
}

/// `Σ_S w(S) (f(S) - g(S))²`.
pub fn weighted_distance_sq(f: &[f64], g: &[f64], p: &ProbabilityProfile) -> f64 {
    all(p.players())
        .map(|s| weight(p, s) * (f[s.index()] - g[s.index()]).powi(2))
        .sum()
}

/// The dummy-coalition condition checked from its definition.
pub fn is_dummy_by_definition(f: &Game, s: Coalition, tol: f64) -> bool {
    let rest = s.complement(f.players());
    let empty = f.value(Coalition::EMPTY);
    s.subsets().all(|r| {
        rest.subsets()
            .all(|t| (f.value(r.union(t)) - (f.value(r) + f.value(t) - empty)).abs() <= tol)
    })
}

/// Gauss–Legendre nodes and weights on `[0, 1]`, exact for polynomials of
/// degree `2m - 1`.
pub fn gauss_legendre(m: usize) -> Vec<(f64, f64)> {
    assert!(m >= 1);
    let mut rule = Vec::with_capacity(m);
    for j in 0..m {
        // Newton on P_m starting from the Chebyshev-like guess
        let mut x = (std::f64::consts::PI * (j as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut deriv = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for l in 2..=m {
                let l = l as f64;
                let p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
                p0 = p1;
                p1 = p2;
            }
            let pm = if m == 1 { x } else { p1 };
            let pm1 = if m == 1 { 1.0 } else { p0 };
            deriv = m as f64 * (x * pm - pm1) / (x * x - 1.0);
            let dx = pm / deriv;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let weight = 2.0 / ((1.0 - x * x) * deriv * deriv);
        rule.push(((1.0 - x) / 2.0, weight / 2.0));
    }
    rule
}

/// `∫_0^1 I_{B,(t,…,t)}(f, S) dt` by Gauss–Legendre quadrature with
/// `⌈(n+1)/2⌉` nodes, using the signed vertex sum for the integrand.
pub fn shapley_by_quadrature(f: &Game, s: Coalition) -> f64 {
    let n = f.players();
    gauss_legendre((n + 2) / 2)
        .into_iter()
        .map(|(t, wt)| {
            let p = ProbabilityProfile::uniform(n, t).expect("node inside [0, 1]");
            wt * index_by_vertex_sum(f, &p, s)
        })
        .sum()
}

/// `∫_{[0,1]^n} I_{B,p}(f, S) dp` by a tensor Gauss–Legendre rule with two
/// nodes per axis.
pub fn center_of_mass_by_quadrature(f: &Game, s: Coalition) -> f64 {
    let n = f.players();
    let rule = gauss_legendre(2);
    all(n)
        .map(|choice| {
            let mut wt = 1.0;
            let probs: Vec<f64> = (1..=n)
                .map(|i| {
                    let (x, w) = rule[usize::from(choice.contains(i))];
                    wt *= w;
                    x
                })
                .collect();
            let p = ProbabilityProfile::new(probs).expect("nodes inside [0, 1]");
            wt * index_by_vertex_sum(f, &p, s)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_monomials() {
        for m in 1..=6 {
            let rule = gauss_legendre(m);
            let total: f64 = rule.iter().map(|(_, w)| w).sum();
            assert!((total - 1.0).abs() < 1e-14);
            for deg in 0..2 * m {
                let got: f64 = rule.iter().map(|(x, w)| w * x.powi(deg as i32)).sum();
                assert!((got - 1.0 / (deg as f64 + 1.0)).abs() < 1e-14, "m={m} deg={deg}");
            }
        }
    }

    #[test]
    fn naive_forms_agree_on_majority() {
        let f = Game::new(3, vec![0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0]).unwrap();
        let p = ProbabilityProfile::new(vec![0.3, 0.6, 0.8]).unwrap();
        let s = Coalition::from_mask(0b011);
        let expected = 1.0 - 2.0 * 0.8;
        for v in [
            index_by_inner_product(&f, &p, s),
            index_by_vertex_sum(&f, &p, s),
            index_by_expected_difference(&f, &p, s),
            index_by_mobius_sum(&f, &p, s),
        ] {
            assert!((v - expected).abs() < 1e-14);
        }
        assert_eq!(mobius(&f), vec![0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, -2.0]);
    }
}
