//! Recurrence and hypergeometric evaluation routes against each other.

mod common;

use common::{re, rel_err, rng, uniform};
use num_complex::Complex64;
use orthogen_core::poly::*;
use proptest::prelude::*;

const N_MAX: usize = 25;
const POINTS: usize = 50;
const TOL: f64 = 1e-10;

/// Worst disagreement over `n ≤ 25` on 50 points, each degree measured
/// against the largest value it takes on the sample.
fn worst_over<F, G>(xs: &[f64], direct: F, recur: G) -> f64
where
    F: Fn(usize, f64) -> Complex64,
    G: Fn(usize, f64) -> Complex64,
{
    let mut worst = 0.0f64;
    for n in 0..=N_MAX {
        let d: Vec<_> = xs.iter().map(|&x| direct(n, x)).collect();
        let r: Vec<_> = xs.iter().map(|&x| recur(n, x)).collect();
        let scale = d.iter().map(|v| v.norm()).fold(0.0, f64::max);
        for (a, b) in r.iter().zip(&d) {
            worst = worst.max(rel_err(*a, *b, scale * 1e-3));
        }
    }
    worst
}

fn points(seed: u64, lo: f64, hi: f64) -> Vec<f64> {
    let mut r = rng(seed);
    (0..POINTS).map(|_| uniform(&mut r, lo, hi)).collect()
}

#[test]
fn jacobi_routes_agree() {
    for (i, (a, b)) in [(0.3, 0.7), (-0.4, 1.9), (2.5, -0.6)].into_iter().enumerate() {
        let p = JacobiParams::new(a, b);
        let xs = points(10 + i as u64, -1.0, 1.0);
        let w = worst_over(&xs, |n, x| jacobi_p(n, &p, re(x)).unwrap(), |n, x| jacobi_p_recurrence(n, &p, re(x)));
        assert!(w <= TOL, "({a},{b}) worst {w:e}");
    }
}

#[test]
fn gegenbauer_routes_agree() {
    for (i, mu) in [0.7, -0.3, 2.4].into_iter().enumerate() {
        let p = GegenbauerParams::new(mu);
        let xs = points(20 + i as u64, -1.0, 1.0);
        let w = worst_over(&xs, |n, x| gegenbauer_c(n, &p, re(x)).unwrap(), |n, x| gegenbauer_c_recurrence(n, &p, re(x)));
        assert!(w <= TOL, "{mu} worst {w:e}");
    }
}

#[test]
fn chebyshev_routes_agree() {
    let xs = points(30, -1.0, 1.0);
    let trig = |n: usize, x: f64| re((n as f64 * x.acos()).cos());
    let w = worst_over(&xs, trig, |n, x| chebyshev_t_recurrence(n, re(x)));
    assert!(w <= TOL, "worst {w:e}");
    let w = worst_over(&xs, |n, x| chebyshev_t(n, re(x)), |n, x| chebyshev_t_recurrence(n, re(x)));
    assert!(w <= TOL, "worst {w:e}");
}

#[test]
fn laguerre_routes_agree() {
    for (i, a) in [0.6, -0.5, 3.2].into_iter().enumerate() {
        let p = LaguerreParams::new(a);
        let xs = points(40 + i as u64, 0.0, 40.0);
        let w = worst_over(&xs, |n, x| laguerre_l(n, &p, re(x)).unwrap(), |n, x| laguerre_l_recurrence(n, &p, re(x)));
        assert!(w <= TOL, "{a} worst {w:e}");
    }
}

#[test]
fn wilson_routes_agree() {
    for (i, (a, b, c, d)) in [(1.0, 2.0, 0.5, 1.3), (0.25, 0.6, 1.7, 0.9)].into_iter().enumerate() {
        let p = WilsonParams::new(a, b, c, d);
        let xs = points(50 + i as u64, 0.0, 6.0);
        let w = worst_over(&xs, |n, x| wilson_w(n, &p, re(x)).unwrap(), |n, x| wilson_w_recurrence(n, &p, re(x)));
        assert!(w <= TOL, "({a},{b},{c},{d}) worst {w:e}");
    }
}

#[test]
fn sequences_match_single_evaluations() {
    let x = re(0.37);
    let j = JacobiParams::new(0.2, 1.1);
    let g = GegenbauerParams::new(0.8);
    let l = LaguerreParams::new(0.4);
    let js = jacobi_sequence(12, &j, x);
    let gs = gegenbauer_sequence(12, &g, x);
    let ls = laguerre_sequence(12, &l, re(3.7));
    let ts = chebyshev_t_sequence(12, x);
    for n in 0..=12 {
        assert!(rel_err(js[n], jacobi_p_recurrence(n, &j, x), 1e-12) < 1e-13);
        assert!(rel_err(gs[n], gegenbauer_c_recurrence(n, &g, x), 1e-12) < 1e-13);
        assert!(rel_err(ls[n], laguerre_l_recurrence(n, &l, re(3.7)), 1e-12) < 1e-13);
        assert!(rel_err(ts[n], chebyshev_t(n, x), 1e-12) < 1e-13);
    }
}

proptest! {
    #[test]
    fn jacobi_parity(a in -0.9f64..3.0, b in -0.9f64..3.0, x in -1.0f64..1.0, n in 0usize..=20) {
        let lhs = jacobi_p(n, &JacobiParams::new(a, b), re(-x)).unwrap();
        let rhs = jacobi_p(n, &JacobiParams::new(b, a), re(x)).unwrap() * if n % 2 == 0 { 1.0 } else { -1.0 };
        let scale = jacobi_p(n, &JacobiParams::new(a.max(b), a.min(b)), re(1.0)).unwrap().norm().max(1.0);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
    }

    #[test]
    fn gegenbauer_is_a_symmetric_jacobi(mu in 0.05f64..3.0, x in -1.0f64..1.0, n in 0usize..=15) {
        // C_n^μ = (2μ)_n / (μ+½)_n · P_n^{(μ-½, μ-½)}
        let c = gegenbauer_c(n, &GegenbauerParams::new(mu), re(x)).unwrap();
        let p = jacobi_p(n, &JacobiParams::new(mu - 0.5, mu - 0.5), re(x)).unwrap();
        let ratio: f64 = (0..n).map(|j| (2.0 * mu + j as f64) / (mu + 0.5 + j as f64)).product();
        let scale = gegenbauer_c(n, &GegenbauerParams::new(mu), re(1.0)).unwrap().norm();
        prop_assert!((c - p * ratio).norm() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn laguerre_sum_rule(a in -0.9f64..3.0, b in -0.9f64..3.0, x in 0.0f64..10.0, n in 0usize..=15) {
        // L_n^{α+β+1}(x+y) = Σ_k L_k^α(x) L_{n-k}^β(y) at y = x/2
        let y = 0.5 * x;
        let lhs = laguerre_l(n, &LaguerreParams::new(a + b + 1.0), re(x + y)).unwrap();
        let la = laguerre_sequence(n, &LaguerreParams::new(a), re(x));
        let lb = laguerre_sequence(n, &LaguerreParams::new(b), re(y));
        let rhs: Complex64 = (0..=n).map(|k| la[k] * lb[n - k]).sum();
        let scale: f64 = (0..=n).map(|k| (la[k] * lb[n - k]).norm()).sum();
        prop_assert!((lhs - rhs).norm() <= 1e-11 * scale.max(1.0));
    }

    #[test]
    fn wilson_is_symmetric_in_parameters(x in 0.0f64..4.0, n in 0usize..=10) {
        let p = WilsonParams::new(1.0, 2.0, 0.5, 1.3);
        let q = WilsonParams::new(1.3, 0.5, 2.0, 1.0);
        let a = wilson_w(n, &p, re(x)).unwrap();
        let b = wilson_w(n, &q, re(x)).unwrap();
        prop_assert!(rel_err(a, b, 1.0) <= 1e-11);
    }
}
