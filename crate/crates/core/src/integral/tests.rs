use super::*;

fn spec(id: &str) -> IntegralSpec {
    find_integral(id).unwrap()
}

fn rel(a: C, b: C) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn catalogue_has_ten_unique_entries() {
    let all = integral_registry();
    assert_eq!(all.len(), 10);
    for (i, s) in all.iter().enumerate() {
        assert!(all[i + 1..].iter().all(|t| t.id != s.id));
        assert!(identity::find(s.source).is_some(), "{} source", s.id);
    }
}

#[test]
fn closed_forms_match_reference_values() {
    // Arbitrary-precision quadrature of each integrand.
    let cases = [
        ("INT-A3", 2, 0.4, 0.994544293327251),
        ("INT-A4", 2, 0.4, 0.348383411558173),
        ("INT-A5", 2, 0.4, 0.0206817801262585),
    ];
    for (id, k, rho, want) in cases {
        let s = spec(id);
        let got = s.closed_form(k, re(rho), &s.default_params()).unwrap();
        assert!(rel(got, re(want)) < 1e-12, "{id}: {got}");
    }
    let s = spec("INT-WIL");
    let p = s.default_params();
    let got = s.closed_form(1, re(0.3), &p).unwrap();
    assert!(rel(got, re(2.10580337740051)) < 1e-12, "{got}");
}

#[test]
fn rho_zero_collapses_to_beta_integral() {
    let s = spec("INT-A1");
    let p = s.default_params();
    let (b, g) = (0.3, 0.5);
    let beta = crate::scalar::gamma(re(g + 1.0)).unwrap() * crate::scalar::gamma(re(b + 1.0)).unwrap()
        / crate::scalar::gamma(re(g + b + 2.0)).unwrap();
    // R = 1 at ρ = 0, so the kernel is 2^{-α-β}.
    let want = beta * 2f64.powf(g + b + 1.0) * 2f64.powf(-1.7 - 0.3);
    let got = s.closed_form(0, re(0.0), &p).unwrap();
    assert!(rel(got, want) < 1e-13, "{got} vs {want}");
    assert_eq!(s.closed_form(3, re(0.0), &p).unwrap(), re(0.0));
}

#[test]
fn worked_examples() {
    let s = spec("INT-LAG2");
    let p = s.default_params();
    let q = s.quadrature(3, re(0.3), &p).unwrap().value;
    assert!(rel(q, s.closed_form(3, re(0.3), &p).unwrap()) < 1e-10);

    let s = spec("INT-A7");
    let p = s.default_params();
    let q = s.quadrature(2, re(0.5), &p).unwrap().value;
    assert!(rel(q, s.closed_form(2, re(0.5), &p).unwrap()) < 1e-9);

    let s = spec("INT-WIL");
    let p = s.default_params();
    let q = s.quadrature(1, re(0.2), &p).unwrap().value;
    assert!(rel(q, s.closed_form(1, re(0.2), &p).unwrap()) < 1e-7);
}

#[test]
fn default_plans_pass() {
    let plan = IntegralPlan::default();
    for s in integral_registry() {
        let r = verify_integral(&s, &plan.points(&s), s.tolerance);
        for o in &r.samples {
            assert_ne!(o.status, SampleStatus::Fail, "{} {:?}", s.id, o);
        }
        assert_eq!(r.status(), SampleStatus::Pass, "{}", s.id);
    }
}

#[test]
fn consistency_triangle_holds() {
    let plan = IntegralPlan::default();
    for s in integral_registry() {
        let r = verify_triangle(&s, &plan, s.tolerance).unwrap();
        for o in &r.samples {
            assert_ne!(o.status, SampleStatus::Fail, "{} {:?}", s.id, o);
        }
    }
}

#[test]
fn weight_parameters_out_of_range_are_skipped() {
    let s = spec("INT-A1");
    let p = s.default_params().with("gamma", re(-1.5));
    let pts = IntegralPlan::default().points_with(&s, &p);
    let r = verify_integral(&s, &pts[..2], s.tolerance);
    assert!(r.samples.iter().all(|o| o.status == SampleStatus::Skipped));
}

#[test]
#[ignore]
fn survey_integrals() {
    let plan = IntegralPlan::default();
    for s in integral_registry() {
        let r = verify_integral(&s, &plan.points(&s), s.tolerance);
        let t = verify_triangle(&s, &plan, s.tolerance).unwrap();
        let w = r.worst().map_or(f64::NAN, identity::metric);
        let wt = t.worst().map_or(f64::NAN, identity::metric);
        std::println!("{} {:?} worst={w:.2e} triangle {:?} worst={wt:.2e}", s.id, r.status(), t.status(), );
        for o in r.samples.iter().chain(&t.samples) {
            if o.note.is_some() || o.status != SampleStatus::Pass {
                std::println!("    k={} rho={} {:?} {:?} {:.2e}", o.point.k, o.point.rho, o.status, o.note, identity::metric(o));
            }
        }
    }
}
