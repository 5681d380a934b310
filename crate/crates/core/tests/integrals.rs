//! Definite-integral registry against quadrature.

mod common;

use common::re;
use num_complex::Complex64;
use orthogen_core::identity::SampleStatus;
use orthogen_core::integral::*;
use proptest::prelude::*;

#[test]
fn registry_has_ten_integrals_with_sources() {
    let reg = integral_registry();
    assert_eq!(reg.len(), 10);
    for spec in &reg {
        assert!(orthogen_core::identity::find(spec.source).is_some(), "{}", spec.id);
        assert_eq!(find_integral(&spec.id).map(|s| s.id), Some(spec.id));
        let want = if spec.id == "INT-WIL" { 1e-7 } else { 1e-8 };
        assert_eq!(spec.tolerance, want);
    }
}

#[test]
fn default_plans_match_closed_forms() {
    let plan = IntegralPlan::default();
    for spec in integral_registry() {
        let report = verify_integral(&spec, &plan.points(&spec), spec.tolerance);
        assert_eq!(report.status(), SampleStatus::Pass, "{}", spec.id);
        assert!(report.samples.iter().all(|s| s.point.k <= 8));
        assert!(report.samples.iter().any(|s| s.point.k == 8));
    }
}

#[test]
fn projections_of_source_identities_agree() {
    let plan = IntegralPlan::default();
    for spec in integral_registry() {
        let report = verify_triangle(&spec, &plan, spec.tolerance).unwrap();
        assert_eq!(report.status(), SampleStatus::Pass, "{}", spec.id);
    }
}

#[test]
fn spread_between_orders_is_small() {
    for spec in integral_registry() {
        let p = spec.default_params();
        let rho = re(spec.rhos[0]);
        let q = spec.quadrature(3, rho, &p).unwrap();
        let scale = q.value.norm().max(1e-300);
        assert!(q.spread <= 1e-10 * scale.max(1.0), "{}: {:e}", spec.id, q.spread);
    }
}

#[test]
fn chebyshev_integral_at_zero_radius() {
    // At ρ = 0 the kernel is constant, so only k = 0 survives.
    let spec = find_integral("INT-A7").unwrap();
    let p = spec.default_params();
    let zero = spec.closed_form(0, re(0.0), &p).unwrap();
    let q = spec.quadrature(0, re(0.0), &p).unwrap().value;
    assert!((zero - q).norm() <= 1e-12 * q.norm());
    for k in 1..6 {
        assert!(spec.closed_form(k, re(0.0), &p).unwrap().norm() <= 1e-15);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn closed_forms_track_quadrature(idx in 0usize..10, t in 0.0f64..1.0, k in 0usize..=8) {
        let reg = integral_registry();
        let spec = &reg[idx];
        let lo = spec.rhos.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = spec.rhos.iter().cloned().fold(0.0, f64::max);
        let rho: Complex64 = re(lo + t * (hi - lo));
        let p = spec.default_params();
        prop_assume!(spec.check_domain(rho, &p).is_none());
        let exact = spec.closed_form(k, rho, &p).unwrap();
        let q = spec.quadrature(k, rho, &p).unwrap().value;
        let abs = (exact - q).norm();
        let err = abs.min(abs / exact.norm());
        prop_assert!(err <= spec.tolerance, "{} k={} ρ={}: {:e}", spec.id, k, rho, err);
    }
}
