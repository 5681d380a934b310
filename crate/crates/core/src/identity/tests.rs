use super::*;
use crate::scalar::{hyp2f1, pochhammer};

fn spec(id: &str) -> IdentitySpec {
    find(id).unwrap()
}

#[test]
fn catalogue_shape() {
    let reg = registry();
    assert_eq!(reg.len(), 33);
    let mut ids: Vec<_> = reg.iter().map(|s| s.id.clone()).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), 33);
    for s in &reg {
        let p = s.default_params();
        for (name, v) in p.iter() {
            assert!(v.re.is_finite(), "{} {}", s.id, name);
        }
    }
}

#[test]
fn rho_zero_collapse() {
    let s = spec("JAC-ALG-GEN");
    let p = s.default_params();
    let v = s.eval_rhs(0.3, re(0.0), &p, 0).unwrap().value;
    assert!((v - re(1.0)).norm() < 1e-15);
    assert!((s.lhs(0.3, re(0.0), &p).unwrap() - re(1.0)).norm() < 1e-15);
}

#[test]
fn finite_product_is_exact() {
    let s = spec("GEG-PRODFIN");
    let p = s.default_params().with("m", re(2.0)).with("mu", re(0.8));
    let lhs = s.lhs(0.2, re(0.3), &p).unwrap();
    let rhs = s.eval_rhs(0.2, re(0.3), &p, 2).unwrap().value;
    assert!((lhs - rhs).norm() < 1e-14 * lhs.norm());
}

#[test]
fn wilson_gen_collapses_termwise() {
    let g = spec("WIL-GEN");
    let b = spec("WIL-2F1PROD");
    let gp = g.default_params().with("h", g.default_params().get("d"));
    let bp = b.default_params();
    for k in 0..8 {
        let cg = g.coeff(k, re(0.3), &gp).unwrap().to_c();
        let cb = b.coeff(k, re(0.3), &bp).unwrap().to_c();
        assert!((cg - cb).norm() <= 1e-13 * cb.norm(), "k={k}");
    }
}

#[test]
fn legendre_q_coefficient_matches_gauss_form() {
    // f_n = ρⁿ (μ+n)(ν)_n / (μ (μ+1)_n) · 2F1(ν-μ, ν+n; μ+n+1; ρ²)
    let s = spec("GEG-POW-GEN");
    let p = s.default_params();
    let (nu, mu) = (p.get("nu"), p.get("mu"));
    for rho in [0.1, 0.5, 0.75] {
        let rho = re(rho);
        for n in [0usize, 1, 5, 40] {
            let nf = n as f64;
            let want = rho.powu(n as u32) * (mu + nf) * pochhammer(nu, n) / (mu * pochhammer(mu + 1.0, n))
                * hyp2f1(nu - mu, nu + nf, mu + nf + 1.0, rho * rho).unwrap();
            let got = s.coeff(n, rho, &p).unwrap().to_c();
            assert!((got - want).norm() <= 1e-12 * want.norm(), "n={n} {got} {want}");
        }
    }
}

#[test]
fn companion_is_an_involution() {
    let s = spec("JAC-ALG-GEN");
    let c = companion_transform(&s).unwrap();
    assert_eq!(c.id, "JAC-ALG-GEN-COMP");
    let cc = companion_transform(&c).unwrap();
    assert_eq!(cc.id, s.id);
    let p = s.default_params();
    for x in [-0.7, 0.1, 0.9] {
        assert_eq!(s.lhs(x, re(0.4), &p).unwrap(), cc.lhs(x, re(0.4), &p).unwrap());
        assert_eq!(
            s.eval_rhs(x, re(0.4), &p, 20).unwrap().value,
            cc.eval_rhs(x, re(0.4), &p, 20).unwrap().value
        );
    }
    assert!(matches!(
        companion_transform(&spec("LAG-EXP")),
        Err(Error::UnsupportedFamily(_))
    ));
}

#[test]
fn out_of_domain_points_are_skipped() {
    let s = spec("JAC-ALG");
    let pt = SamplePoint {
        x: 0.2,
        rho: re(1.2),
        params: s.default_params(),
    };
    let o = verify_point(&s, &pt, 1e-10);
    assert_eq!(o.status, SampleStatus::Skipped);
}

#[test]
#[ignore]
fn survey() {
    let plan = SamplePlan::default();
    for s in registry() {
        let pts = plan.points(&s);
        let r = verify_identity(&s, &pts, s.tier.tolerance());
        let worst = r.worst().map(|w| (metric(w), w.k_used)).unwrap_or((f64::NAN, 0));
        std::println!(
            "{:20} {:8} pass={} fail={} skip={} worst={:.2e} K={}",
            s.id,
            r.status().as_str(),
            r.count(SampleStatus::Pass),
            r.count(SampleStatus::Fail),
            r.count(SampleStatus::Skipped),
            worst.0,
            worst.1
        );
        for o in r.samples.iter().filter(|o| o.status != SampleStatus::Pass).take(3) {
            std::println!("    x={:.3} rho={} {:?} res={:.2e} {:?}", o.point.x, o.point.rho, o.status, metric(o), o.note);
        }
    }
}



#[test]
fn terms_needed_for_a_pure_power_series() {
    let s = spec("GEG-POW");
    let p = s.default_params();
    let pt = SamplePoint { x: 0.3, rho: re(0.5), params: p.clone() };
    let k = terms_needed(&s, &pt, 1e-10, 512).unwrap().unwrap();
    let res = |k| s.residual(0.3, re(0.5), &p, k).unwrap();
    assert!(metric_of(res(k)) <= 1e-10);
    assert!(metric_of(res(k - 1)) > 1e-10);
    let far = SamplePoint { x: 0.3, rho: re(0.999), params: p };
    assert_eq!(terms_needed(&s, &far, 1e-12, 64).unwrap(), None);
}

fn metric_of((abs, rel): (f64, f64)) -> f64 {
    abs.min(rel)
}
