//! Acceptance run: one line per criterion, non-zero exit if any is red.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::Instant;

use num_complex::Complex64;
use orthogen::RunConfig;
use orthogen_core::connection::*;
use orthogen_core::identity::*;
use orthogen_core::integral::{find_integral, integral_registry, verify_integral, verify_triangle, IntegralPlan};
use orthogen_core::poly::*;
use orthogen_core::quadrature::{gauss_rule, integrate_wilson, norm, WeightId};
use orthogen_core::scalar::log_gamma;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn lg(x: f64) -> f64 {
    log_gamma(re(x)).unwrap().re
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn identity_suite() -> Outcome {
    let plan = SamplePlan::default();
    let (mut samples, mut skipped, mut worst) = (0, 0, 0.0f64);
    let reg = registry();
    for spec in &reg {
        let r = verify_identity(spec, &plan.points(spec), spec.tier.tolerance());
        ensure(r.status() == SampleStatus::Pass, || format!("{} is {}", spec.id, r.status().as_str()))?;
        for s in r.samples.iter().filter(|s| s.status == SampleStatus::Skipped) {
            ensure(s.note.is_some(), || format!("{} skipped a sample without a reason", spec.id))?;
        }
        samples += r.samples.len();
        skipped += r.count(SampleStatus::Skipped);
        worst = worst.max(r.worst().map(|w| metric(w) / spec.tier.tolerance()).unwrap_or(0.0));
    }
    Ok(format!(
        "{} identities, {samples} samples, {skipped} skipped, worst residual/tolerance {worst:.1e}",
        reg.len()
    ))
}

fn reduction_closure() -> Outcome {
    let mut worst = 0.0f64;
    let mut n = 0;
    for spec in registry().iter().filter(|s| s.reduction.is_some()) {
        let x = 0.5 * (spec.x_range.0 + spec.x_range.1) + 0.2 * (spec.x_range.1 - spec.x_range.0);
        let mut rhos = vec![re(0.15), re(0.4), re(0.7)];
        if spec.complex_rho {
            rhos.push(Complex64::from_polar(0.4, PI / 7.0));
        }
        for rho in rhos {
            let m = reduction_mismatch(spec, &spec.default_params(), rho, x, 20).map_err(|e| format!("{}: {e}", spec.id))?;
            ensure(m <= 1e-11, || format!("{} at ρ={rho}: {m:e}", spec.id))?;
            worst = worst.max(m);
        }
        n += 1;
    }
    // f_n^{(ν,ν)}(ρ) = ρⁿ
    let pow = find("GEG-POW-GEN").ok_or("GEG-POW-GEN missing")?;
    for nu in [0.35, 1.2] {
        let p = pow.default_params().with("nu", re(nu)).with("mu", re(nu));
        for rho in [re(0.3), Complex64::new(0.2, 0.5)] {
            for k in 0..=20 {
                let got = pow.coeff(k, rho, &p).map_err(|e| e.to_string())?.to_c();
                let want = rho.powu(k as u32);
                let d = (got - want).norm() / want.norm();
                ensure(d <= 1e-11, || format!("ρ^{k} check at ν={nu}: {d:e}"))?;
                worst = worst.max(d);
            }
        }
    }
    Ok(format!("{n} generalized identities plus the ν=μ power check, k ≤ 20, worst {worst:.1e}"))
}

/// `∫ p_n^{src} p_k^{tgt} w / ∫ (p_k^{tgt})² w` on a Gauss rule.
fn project(rule: &orthogen_core::quadrature::QuadratureRule, n: usize, src: impl Fn(f64) -> Complex64, tgt: impl Fn(f64) -> Vec<Complex64>) -> Vec<Complex64> {
    let mut num = vec![re(0.0); n + 1];
    let mut den = vec![0.0; n + 1];
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        let s = src(*x);
        let t = tgt(*x);
        for k in 0..=n {
            num[k] += s * t[k] * *w;
            den[k] += t[k].norm_sqr() * w;
        }
    }
    num.iter().zip(&den).map(|(a, b)| a / b).collect()
}

fn row_gap(closed: &[Complex64], proj: &[Complex64]) -> f64 {
    let scale = proj.iter().map(|v| v.norm()).fold(1.0, f64::max);
    closed.iter().zip(proj).map(|(a, b)| (a - b).norm() / scale).fold(0.0, f64::max)
}

fn connection_oracle() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let mut u = |lo: f64, hi: f64| r.gen_range(lo..hi);
    let mut worst = [0.0f64; 4];
    for _ in 0..20 {
        let (a, b, g) = (u(-0.9, 3.0), u(-0.9, 3.0), u(-0.9, 3.0));
        let (nu, mu) = (u(-0.45, 3.0), u(0.05, 3.0));
        let (la, lb) = (u(-0.9, 3.0), u(-0.9, 3.0));
        let wp = WilsonParams::new(u(0.2, 2.0), u(0.2, 2.0), u(0.2, 2.0), u(0.2, 2.0));
        let h = u(0.2, 2.0);
        for n in 0..=12 {
            let rule = gauss_rule(WeightId::Jacobi { alpha: g, beta: b }, n + 8).map_err(|e| e.to_string())?;
            let proj = project(&rule, n, |x| jacobi_p_recurrence(n, &JacobiParams::new(a, b), re(x)), |x| jacobi_sequence(n, &JacobiParams::new(g, b), re(x)));
            worst[0] = worst[0].max(row_gap(&jacobi_connection(n, re(a), re(b), re(g)).map_err(|e| e.to_string())?, &proj));

            let rule = gauss_rule(WeightId::Gegenbauer { mu }, n + 8).map_err(|e| e.to_string())?;
            let proj = project(&rule, n, |x| gegenbauer_c_recurrence(n, &GegenbauerParams::new(nu), re(x)), |x| gegenbauer_sequence(n, &GegenbauerParams::new(mu), re(x)));
            worst[1] = worst[1].max(row_gap(&gegenbauer_connection(n, re(nu), re(mu)).map_err(|e| e.to_string())?, &proj));

            let rule = gauss_rule(WeightId::Laguerre { alpha: lb }, n + 8).map_err(|e| e.to_string())?;
            let proj = project(&rule, n, |x| laguerre_l_recurrence(n, &LaguerreParams::new(la), re(x)), |x| laguerre_sequence(n, &LaguerreParams::new(lb), re(x)));
            worst[2] = worst[2].max(row_gap(&laguerre_connection(n, re(la), re(lb)), &proj));
        }
        let tgt = wp.with_d(re(h));
        let params = [wp.a, wp.b, wp.c, re(h)];
        for n in 0..=8 {
            let closed = wilson_connection(n, &wp, re(h)).map_err(|e| e.to_string())?;
            let mut proj = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let num = integrate_wilson(|x| wilson_w_recurrence(n, &wp, re(x)) * wilson_w_recurrence(k, &tgt, re(x)), params, 1e-13).map_err(|e| e.to_string())?;
                let den = integrate_wilson(|x| wilson_w_recurrence(k, &tgt, re(x)).powu(2), params, 1e-13).map_err(|e| e.to_string())?;
                proj.push(num / den);
            }
            worst[3] = worst[3].max(row_gap(&closed, &proj));
        }
    }
    ensure(worst[..3].iter().all(|w| *w <= 1e-10) && worst[3] <= 1e-8, || format!("worst gaps J/G/L/W {worst:?}"))?;
    Ok(format!(
        "20 draws each, worst gap Jacobi {:.1e}, Gegenbauer {:.1e}, Laguerre {:.1e} (n ≤ 12), Wilson {:.1e} (n ≤ 8)",
        worst[0], worst[1], worst[2], worst[3]
    ))
}

/// Closed-form squared norms written out independently of the library.
fn norm_formula(w: WeightId, n: usize) -> f64 {
    let nf = n as f64;
    match w {
        WeightId::Jacobi { alpha: a, beta: b } => {
            2f64.powf(a + b + 1.0) / (2.0 * nf + a + b + 1.0)
                * (lg(nf + a + 1.0) + lg(nf + b + 1.0) - lg(nf + a + b + 1.0) - lg(nf + 1.0)).exp()
        }
        WeightId::Gegenbauer { mu } => {
            PI * 2f64.powf(1.0 - 2.0 * mu) / (nf + mu) * (lg(nf + 2.0 * mu) - lg(nf + 1.0) - 2.0 * lg(mu)).exp()
        }
        WeightId::Laguerre { alpha } => (lg(nf + alpha + 1.0) - lg(nf + 1.0)).exp(),
        WeightId::Wilson { a, b, c, h } => {
            let p = [a.re, b.re, c.re, h.re];
            let s: f64 = p.iter().sum();
            let mut l = lg(nf + 1.0) - lg(nf + s - 1.0);
            for i in 0..4 {
                for j in i + 1..4 {
                    l += lg(nf + p[i] + p[j]);
                }
            }
            2.0 * PI * l.exp() / (2.0 * nf + s - 1.0)
        }
        _ => unreachable!(),
    }
}

fn norms() -> Outcome {
    let mut worst_diag = 0.0f64;
    let mut worst_off = 0.0f64;
    let mut check = |w: WeightId, gram: &dyn Fn(usize, usize) -> f64| -> Result<(), String> {
        for i in 0..=10 {
            let hi = norm_formula(w, i);
            let lib = norm(w, i).map_err(|e| e.to_string())?;
            ensure((lib - hi).abs() <= 1e-12 * hi, || format!("{w:?} n={i}: library norm {lib} vs {hi}"))?;
            for j in 0..=i {
                let g = gram(i, j);
                if i == j {
                    worst_diag = worst_diag.max((g - hi).abs() / hi);
                } else {
                    worst_off = worst_off.max(g.abs() / (hi * norm_formula(w, j)).sqrt());
                }
            }
        }
        Ok(())
    };
    let jac = |w: WeightId, seq: &dyn Fn(f64) -> Vec<Complex64>| {
        let rule = gauss_rule(w, 24).unwrap();
        let vals: Vec<Vec<Complex64>> = rule.nodes.iter().map(|x| seq(*x)).collect();
        move |i: usize, j: usize| vals.iter().zip(&rule.weights).map(|(v, w)| (v[i] * v[j]).re * w).sum::<f64>()
    };
    let (a, b) = (1.7, 0.3);
    let w = WeightId::Jacobi { alpha: a, beta: b };
    check(w, &jac(w, &|x| jacobi_sequence(10, &JacobiParams::new(a, b), re(x))))?;
    let w = WeightId::Gegenbauer { mu: 0.7 };
    check(w, &jac(w, &|x| gegenbauer_sequence(10, &GegenbauerParams::new(0.7), re(x))))?;
    let w = WeightId::Laguerre { alpha: 0.6 };
    check(w, &jac(w, &|x| laguerre_sequence(10, &LaguerreParams::new(0.6), re(x))))?;
    let wp = WilsonParams::new(1.0, 2.0, 0.5, 1.3);
    let w = WeightId::Wilson { a: wp.a, b: wp.b, c: wp.c, h: wp.d };
    check(w, &|i, j| {
        integrate_wilson(|x| wilson_w_recurrence(i, &wp, re(x)) * wilson_w_recurrence(j, &wp, re(x)), wp.as_array(), 1e-12)
            .unwrap()
            .re
    })?;
    ensure(worst_diag <= 1e-8 && worst_off <= 1e-8, || format!("diagonal {worst_diag:e}, off-diagonal {worst_off:e}"))?;
    Ok(format!("Jacobi, Gegenbauer, Laguerre, Wilson, n ≤ 10: diagonal {worst_diag:.1e}, off-diagonal {worst_off:.1e}"))
}

fn integrals() -> Outcome {
    let plan = IntegralPlan::default();
    let mut worst = 0.0f64;
    let mut tri = 0.0f64;
    for spec in integral_registry() {
        let r = verify_integral(&spec, &plan.points(&spec), spec.tolerance);
        ensure(r.status() == SampleStatus::Pass, || format!("{} is {}", spec.id, r.status().as_str()))?;
        worst = worst.max(r.worst().map(metric).unwrap_or(0.0) / spec.tolerance);
        let t = verify_triangle(&spec, &plan, spec.tolerance).map_err(|e| format!("{}: {e}", spec.id))?;
        ensure(t.status() == SampleStatus::Pass, || format!("{} triangle is {}", spec.id, t.status().as_str()))?;
        tri = tri.max(t.worst().map(metric).unwrap_or(0.0) / spec.tolerance);
    }
    // Arbitrary-precision quadrature values at (k, ρ).
    let reference = [
        ("INT-A3", 2, 0.4, 0.994544293327251),
        ("INT-A4", 2, 0.4, 0.348383411558173),
        ("INT-A5", 2, 0.4, 0.0206817801262585),
        ("INT-WIL", 1, 0.3, 2.10580337740051),
    ];
    for (id, k, rho, want) in reference {
        let s = find_integral(id).ok_or(id)?;
        let got = s.closed_form(k, re(rho), &s.default_params()).map_err(|e| e.to_string())?;
        ensure((got - want).norm() <= 1e-12 * want, || format!("{id} closed form {got} vs {want}"))?;
    }
    Ok(format!(
        "10 integrals, k ≤ 8, worst residual/tolerance {worst:.1e}, triangle {tri:.1e}, 4 reference values"
    ))
}

fn ln_fact(n: usize) -> f64 {
    lg(n as f64 + 1.0)
}

/// `ln |(z)_n|` through log-gamma where `z` stays off the poles.
fn ln_poch(z: Complex64, n: usize) -> f64 {
    (log_gamma(z + n as f64).unwrap() - log_gamma(z).unwrap()).re
}

fn pochhammer_bounds() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(0x1E44A);
    let checks = std::cell::Cell::new(0);
    let mut drift = 0.0f64;
    let mut same = |what: &str, c: BoundCheck, lhs: f64, rhs: f64| -> Result<(), String> {
        ensure(c.holds, || format!("{what} violated: {} vs {}", c.lhs_ln, c.rhs_ln))?;
        let d = ((c.lhs_ln - lhs).abs() + (c.rhs_ln - rhs).abs()) / (1.0 + lhs.abs().max(rhs.abs()));
        drift = drift.max(d);
        ensure(d <= 1e-9, || format!("{what}: log values disagree with log-gamma ({d:e})"))?;
        checks.set(checks.get() + 1);
        Ok(())
    };
    for _ in 0..200 {
        let n = r.gen_range(0..60usize);
        let k = r.gen_range(0..=n);
        let j = r.gen_range(1..60usize);
        let u = Complex64::new(r.gen_range(1e-3..5.0), r.gen_range(-20.0..20.0));
        same("|(u)_j| lower", poch_modulus_lower(u, j), ln_poch(u, j), u.re.ln() + ln_fact(j - 1))?;
        let v = r.gen_range(0.0..8.0);
        same("(v)_n/n! upper", poch_factorial_ratio_upper(v, n), ln_poch(re(v), n) - ln_fact(n), v * (1.0 + n as f64).ln())?;
        let w = r.gen_range(-0.999..8.0);
        same("(n+w)_k upper", shifted_poch_upper(w, n, k), ln_poch(re(n as f64 + w), k), (w * 2f64.ln()).max(0.0) + ln_fact(n + k) - ln_fact(n))?;
        let z = Complex64::new(r.gen_range(0.1..5.0), r.gen_range(-5.0..5.0));
        same("|(k+z)_{n-k}| upper", complex_poch_upper(z, n, k), ln_poch(z + k as f64, n - k), z.norm() * (1.0 + n as f64).ln() + ln_fact(n) - ln_fact(k))?;
        let x = r.gen_range(1e-3..8.0);
        let lhs = if k == 0 { 0.0 } else { ln_poch(re(k as f64 + x - 1.0), k) };
        same("(k+x-1)_k lower", double_poch_lower(x, k), lhs, (x / 2.0).min(1.0 / 6.0).ln() + ln_fact(2 * k) - ln_fact(k))?;
        let x = r.gen_range(1e-3..8.0);
        same("(2k+x)_{n-k} lower", tail_poch_lower(x, n, k), ln_poch(re(2.0 * k as f64 + x), n - k), x.min(1.0).ln() - (1.0 + n as f64).ln() + ln_fact(n + k) - ln_fact(2 * k))?;
    }
    let checks = checks.get();
    ensure(checks == 6 * 200, || format!("only {checks} checks ran"))?;
    Ok(format!("{checks} checks over 6 bounds × 200 draws, zero violations, log values within {drift:.0e} of log-gamma"))
}

fn dual_route() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(0xD0A1);
    let mut worst = Vec::new();
    let mut family = |name: &str, lo: f64, hi: f64, direct: &dyn Fn(usize, f64) -> Complex64, rec: &dyn Fn(usize, f64) -> Complex64| -> Result<(), String> {
        let xs: Vec<f64> = (0..50).map(|_| r.gen_range(lo..hi)).collect();
        let mut w = 0.0f64;
        for n in 0..=25 {
            let d: Vec<Complex64> = xs.iter().map(|&x| direct(n, x)).collect();
            let scale = d.iter().map(|v| v.norm()).fold(0.0, f64::max);
            for (x, dv) in xs.iter().zip(&d) {
                w = w.max((rec(n, *x) - dv).norm() / dv.norm().max(1e-3 * scale));
            }
        }
        ensure(w <= 1e-10, || format!("{name}: {w:e}"))?;
        worst.push(format!("{name} {w:.0e}"));
        Ok(())
    };
    let jp = JacobiParams::new(0.3, 1.4);
    family("Jacobi", -1.0, 1.0, &|n, x| jacobi_p(n, &jp, re(x)).unwrap(), &|n, x| jacobi_p_recurrence(n, &jp, re(x)))?;
    let gp = GegenbauerParams::new(0.7);
    family("Gegenbauer", -1.0, 1.0, &|n, x| gegenbauer_c(n, &gp, re(x)).unwrap(), &|n, x| gegenbauer_c_recurrence(n, &gp, re(x)))?;
    family("Chebyshev", -1.0, 1.0, &|n, x| re((n as f64 * x.acos()).cos()), &|n, x| chebyshev_t_recurrence(n, re(x)))?;
    let lp = LaguerreParams::new(0.6);
    family("Laguerre", 0.0, 40.0, &|n, x| laguerre_l(n, &lp, re(x)).unwrap(), &|n, x| laguerre_l_recurrence(n, &lp, re(x)))?;
    let wp = WilsonParams::new(1.0, 2.0, 0.5, 1.3);
    family("Wilson", 0.0, 6.0, &|n, x| wilson_w(n, &wp, re(x)).unwrap(), &|n, x| wilson_w_recurrence(n, &wp, re(x)))?;
    Ok(format!("n ≤ 25, 50 points per family: {}", worst.join(", ")))
}

fn companion_and_parity() -> Outcome {
    let mut pairs = 0;
    for spec in registry().into_iter().filter(|s| s.family != orthogen_core::identity::Family::Laguerre && s.family != orthogen_core::identity::Family::Wilson) {
        let twice = companion_transform(&companion_transform(&spec).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(twice.id == spec.id, || format!("{} maps to {}", spec.id, twice.id))?;
        let p = spec.default_params();
        for x in [-0.6, 0.15, 0.8] {
            for rho in [re(0.3), re(0.6)] {
                if spec.check_domain(x, rho, &p).is_some() {
                    continue;
                }
                let a = spec.eval_rhs(x, rho, &p, 24).map_err(|e| e.to_string())?.value;
                let b = twice.eval_rhs(x, rho, &p, 24).map_err(|e| e.to_string())?.value;
                ensure(a == b && spec.lhs(x, rho, &p).ok() == twice.lhs(x, rho, &p).ok(), || format!("{} differs after two transforms", spec.id))?;
                pairs += 1;
            }
        }
    }
    let mut r = ChaCha8Rng::seed_from_u64(0x9A41);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let (a, b, x, n) = (r.gen_range(-0.9..3.0), r.gen_range(-0.9..3.0), r.gen_range(-1.0..1.0), r.gen_range(0..=20usize));
        let lhs = jacobi_p(n, &JacobiParams::new(a, b), re(-x)).unwrap();
        let rhs = jacobi_p(n, &JacobiParams::new(b, a), re(x)).unwrap() * if n % 2 == 0 { 1.0 } else { -1.0 };
        worst = worst.max((lhs - rhs).norm() / lhs.norm().max(1.0));
    }
    ensure(worst <= 1e-12, || format!("parity {worst:e}"))?;
    Ok(format!("{pairs} involution samples bit-identical, Jacobi parity worst {worst:.1e} over 200 draws"))
}

fn determinism() -> Outcome {
    let ids = ["GEG-*", "JAC-ALG-GEN", "LAG-KUMMER", "WIL-GEN", "INT-A1", "INT-WIL"];
    let mut cfgs = Vec::new();
    for jobs in [1, 3] {
        let settings = orthogen::Settings {
            ids: ids.iter().map(|s| s.to_string()).collect(),
            seed: Some(20),
            draws: Some(4),
            jobs: Some(jobs),
            ..Default::default()
        };
        cfgs.push(RunConfig::resolve(settings).map_err(|e| e.to_string())?);
    }
    let run = |cfg: &RunConfig| -> Result<serde_json::Value, String> {
        let entries = orthogen::select::select(&cfg.ids, None).map_err(|e| e.to_string())?;
        let rep = orthogen::run::verify(&entries, cfg).map_err(|e| e.to_string())?;
        let mut v = serde_json::to_value(&rep).map_err(|e| e.to_string())?;
        v.as_object_mut().unwrap().remove("generated_at");
        Ok(v)
    };
    let (a, b) = (run(&cfgs[0])?, run(&cfgs[1])?);
    ensure(a == b, || "library reports differ between 1 and 3 threads".into())?;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut files = Vec::new();
    for (i, jobs) in ["1", "4"].into_iter().enumerate() {
        let out = dir.path().join(format!("r{i}.json"));
        let mut args = vec!["verify", "--seed", "20", "--draws", "4", "--jobs", jobs, "--format", "json", "--out"];
        args.push(out.to_str().unwrap());
        args.extend(ids);
        let st = Command::new(env!("CARGO_BIN_EXE_orthogen")).args(&args).status().map_err(|e| e.to_string())?;
        ensure(st.code() == Some(0), || format!("binary exited with {st}"))?;
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        v.as_object_mut().unwrap().remove("generated_at");
        files.push(v);
    }
    ensure(files[0] == files[1], || "binary reports differ between --jobs 1 and --jobs 4".into())?;
    let n = a["results"].as_array().map_or(0, |v| v.len());
    Ok(format!("{n} entries, identical reports across thread counts for the library and the binary"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("identity residual suite", identity_suite),
        ("reduction closure", reduction_closure),
        ("connection oracle equivalence", connection_oracle),
        ("orthogonality norms", norms),
        ("integral suite and consistency triangle", integrals),
        ("Pochhammer bounds for the Wilson estimates", pochhammer_bounds),
        ("dual-route polynomial agreement", dual_route),
        ("companion involution and Jacobi parity", companion_and_parity),
        ("determinism", determinism),
    ];
    let start = Instant::now();
    let mut red = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (mark, detail) = match f() {
            Ok(d) => ("PASS", d),
            Err(e) => {
                red += 1;
                ("FAIL", e)
            }
        };
        println!("criterion {} {mark} {name}: {detail} ({:.1}s)", i + 1, t.elapsed().as_secs_f64());
    }
    println!("acceptance: {}/9 passed in {:.1}s", 9 - red, start.elapsed().as_secs_f64());
    if red == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
