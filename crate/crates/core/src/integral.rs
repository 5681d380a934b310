//! Definite integrals obtained from the expansions by orthogonality.
//!
//! Each [`IntegralSpec`] names an integrand `f(x; k, ρ)` to be integrated
//! against an orthogonality weight, and the closed form the integral should
//! equal. Verification integrates with Gauss rules of escalating order (or
//! the panelled Wilson integrator) and compares.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::identity::{
    self, judged, legendre_product_kernel, lhs_ferrers_kernel, lhs_legendre_kernel, radius, Basis,
    Family, Params, SampleOutcome, SampleStatus, VerificationReport,
};
use crate::legendre::{assoc_legendre_p_scaled, ferrers_p_scaled, LegendreArg};
use crate::poly::{
    chebyshev_t, gegenbauer_c, jacobi_p, laguerre_function_scaled, laguerre_l, wilson_w, GegenbauerParams,
    JacobiParams, LaguerreParams, WilsonParams,
};
use crate::quadrature::{gauss_rule, integrate_wilson_panels, norm_scaled, QuadratureRule, WeightId};
use crate::scalar::{bessel_i, bessel_j, gamma_scaled, hyp2f1, phyper, pochhammer_scaled, re, ComplexScalar as C};
use crate::scalar::{Scaled, TruncationControl};
use crate::{Error, Result};

/// Non-weight part of the integrand at `x`.
pub type IntegrandFn = fn(f64, usize, C, &Params) -> Result<C>;
/// Closed-form value of the integral.
pub type ClosedFormFn = fn(usize, C, &Params) -> Result<C>;
pub type WeightFn = fn(&Params) -> Result<WeightId>;
pub type RhoDomainFn = fn(C, &Params) -> Option<&'static str>;

/// Largest `k` accepted by a plan.
pub const K_MAX: usize = 12;
/// Relative agreement required between successive quadrature orders.
pub const STABLE_TOL: f64 = 1e-12;
const ORDERS: [usize; 3] = [80, 160, 320];
// Gauss-Laguerre weights beyond order ~160 underflow at the outer nodes.
const LAGUERRE_ORDERS: [usize; 3] = [40, 80, 160];

/// One catalogued definite integral.
#[derive(Clone, Debug)]
pub struct IntegralSpec {
    pub id: &'static str,
    pub family: Family,
    pub anchor: &'static str,
    pub tolerance: f64,
    pub defaults: &'static [(&'static str, f64)],
    /// Real `ρ` values of the default plan.
    pub rhos: &'static [f64],
    /// Complex `ρ` values of the default plan, as `(re, im)`.
    pub complex_rhos: &'static [(f64, f64)],
    /// Identity whose expansion yields this integral.
    pub source: &'static str,
    integrand: IntegrandFn,
    closed_form: ClosedFormFn,
    weight: WeightFn,
    domain: RhoDomainFn,
}

/// A `(k, ρ, params)` sample of an integral.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralPoint {
    pub k: usize,
    pub rho: C,
    pub params: Params,
}

/// Quadrature value with the order used and the change over the last
/// refinement, relative to `max(|I|, ∫|f| w)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadValue {
    pub value: C,
    pub order: usize,
    pub spread: f64,
}

impl IntegralSpec {
    pub fn default_params(&self) -> Params {
        Params::new(self.defaults)
    }

    pub fn weight(&self, p: &Params) -> Result<WeightId> {
        (self.weight)(p)
    }

    pub fn check_domain(&self, rho: C, p: &Params) -> Option<&'static str> {
        match self.weight(p) {
            Err(_) => return Some("weight parameters outside the orthogonality range"),
            Ok(w) if w.check().is_err() => return Some("weight parameters outside the orthogonality range"),
            Ok(_) => {}
        }
        (self.domain)(rho, p)
    }

    pub fn integrand(&self, x: f64, k: usize, rho: C, p: &Params) -> Result<C> {
        (self.integrand)(x, k, rho, p)
    }

    pub fn closed_form(&self, k: usize, rho: C, p: &Params) -> Result<C> {
        (self.closed_form)(k, rho, p)
    }

    /// `∫ f w` by escalating quadrature.
    pub fn quadrature(&self, k: usize, rho: C, p: &Params) -> Result<QuadValue> {
        let weight = self.weight(p)?;
        let mut cache = RuleCache::default();
        weighted_integral(weight, &mut cache, |x| self.integrand(x, k, rho, p))
    }
}

/// Gauss rules already built during one verification run.
#[derive(Default)]
pub struct RuleCache {
    rules: Vec<(WeightId, usize, QuadratureRule)>,
}

impl RuleCache {
    fn get(&mut self, weight: WeightId, order: usize) -> Result<&QuadratureRule> {
        if let Some(i) = self.rules.iter().position(|(w, o, _)| *w == weight && *o == order) {
            return Ok(&self.rules[i].2);
        }
        let rule = gauss_rule(weight, order)?;
        self.rules.push((weight, order, rule));
        Ok(&self.rules.last().expect("just pushed").2)
    }
}

/// `∫ f w` against `weight`, doubling the Gauss order until two successive
/// values agree to [`STABLE_TOL`]. Past the last order the final value is
/// returned with its spread.
pub fn weighted_integral<F: FnMut(f64) -> Result<C>>(weight: WeightId, cache: &mut RuleCache, mut f: F) -> Result<QuadValue> {
    if let WeightId::Wilson { a, b, c, h } = weight {
        let mut err = None;
        let r = integrate_wilson_panels(
            |x| match f(x) {
                Ok(v) => v,
                Err(e) => {
                    err.get_or_insert(e);
                    re(f64::NAN)
                }
            },
            [a, b, c, h],
            STABLE_TOL,
        );
        if let Some(e) = err {
            return Err(e);
        }
        return match r {
            Ok((value, panels)) => Ok(QuadValue {
                value,
                order: panels,
                spread: 0.0,
            }),
            Err(Error::NonConvergence { estimate, .. }) => {
                // Report the finest estimate instead of giving up.
                let (value, panels) = integrate_wilson_panels(|x| f(x).unwrap_or(re(f64::NAN)), [a, b, c, h], f64::INFINITY)?;
                Ok(QuadValue {
                    value,
                    order: panels,
                    spread: estimate,
                })
            }
            Err(e) => Err(e),
        };
    }
    let orders = match weight {
        WeightId::Laguerre { .. } => LAGUERRE_ORDERS,
        _ => ORDERS,
    };
    let mut prev: Option<C> = None;
    let mut out = None;
    for order in orders {
        let rule = cache.get(weight, order)?;
        let mut sum = re(0.0);
        let mut abs = 0.0;
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            let v = f(*x)? * *w;
            sum += v;
            abs += v.norm();
        }
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            return Err(Error::NonFinite("quadrature sum"));
        }
        let spread = prev.map_or(f64::INFINITY, |p| (sum - p).norm() / sum.norm().max(abs).max(f64::MIN_POSITIVE));
        out = Some(QuadValue {
            value: sum,
            order,
            spread,
        });
        if spread <= STABLE_TOL {
            break;
        }
        prev = Some(sum);
    }
    Ok(out.expect("at least one order"))
}

/// Sample plan for integrals: `k = 0..=k_max` at each `ρ`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralPlan {
    pub k_max: usize,
    /// Overrides the per-integral `ρ` list when set.
    pub rhos: Option<Vec<C>>,
    pub include_complex: bool,
}

impl Default for IntegralPlan {
    fn default() -> Self {
        IntegralPlan {
            k_max: 8,
            rhos: None,
            include_complex: true,
        }
    }
}

impl IntegralPlan {
    pub fn points(&self, spec: &IntegralSpec) -> Vec<IntegralPoint> {
        let params = spec.default_params();
        self.points_with(spec, &params)
    }

    pub fn points_with(&self, spec: &IntegralSpec, params: &Params) -> Vec<IntegralPoint> {
        let mut rhos: Vec<C> = match &self.rhos {
            Some(r) => r.clone(),
            None => spec.rhos.iter().map(|r| re(*r)).collect(),
        };
        if self.include_complex && self.rhos.is_none() {
            rhos.extend(spec.complex_rhos.iter().map(|(a, b)| C::new(*a, *b)));
        }
        let mut out = Vec::new();
        for rho in rhos {
            for k in 0..=self.k_max.min(K_MAX) {
                out.push(IntegralPoint {
                    k,
                    rho,
                    params: params.clone(),
                });
            }
        }
        out
    }
}

fn outcome(point: &IntegralPoint, order: usize, abs: f64, rel: f64, status: SampleStatus, note: Option<&'static str>) -> SampleOutcome<IntegralPoint> {
    SampleOutcome {
        point: point.clone(),
        k_used: order,
        residual_abs: abs,
        residual_rel: rel,
        status,
        note,
    }
}

fn error_outcome(point: &IntegralPoint, e: Error) -> SampleOutcome<IntegralPoint> {
    let (status, note) = match e {
        Error::Domain(_) | Error::Branch(_) => (SampleStatus::Skipped, "outside the evaluable domain"),
        Error::NonConvergence { .. } => (SampleStatus::Fail, "quadrature did not converge"),
        Error::Diverged { .. } => (SampleStatus::Fail, "closed-form series did not converge"),
        _ => (SampleStatus::Fail, "evaluation error"),
    };
    outcome(point, 0, f64::NAN, f64::NAN, status, Some(note))
}

fn compare(point: &IntegralPoint, q: QuadValue, expected: C, tol: f64) -> SampleOutcome<IntegralPoint> {
    let abs = (q.value - expected).norm();
    let rel = abs / expected.norm();
    let res = judged(abs, rel);
    let unstable = q.spread > STABLE_TOL;
    let note = unstable.then_some("quadrature did not stabilize to 1e-12 between orders");
    if !(res <= tol) {
        return outcome(point, q.order, abs, rel, SampleStatus::Fail, note);
    }
    outcome(point, q.order, abs, rel, SampleStatus::Pass, note)
}

fn verify_point(spec: &IntegralSpec, point: &IntegralPoint, tol: f64, cache: &mut RuleCache) -> SampleOutcome<IntegralPoint> {
    if let Some(reason) = spec.check_domain(point.rho, &point.params) {
        return outcome(point, 0, f64::NAN, f64::NAN, SampleStatus::Skipped, Some(reason));
    }
    if point.k > K_MAX {
        return outcome(point, 0, f64::NAN, f64::NAN, SampleStatus::Skipped, Some("k above the supported cap"));
    }
    let closed = match spec.closed_form(point.k, point.rho, &point.params) {
        Ok(v) => v,
        Err(e) => return error_outcome(point, e),
    };
    let weight = match spec.weight(&point.params) {
        Ok(w) => w,
        Err(e) => return error_outcome(point, e),
    };
    let q = weighted_integral(weight, cache, |x| spec.integrand(x, point.k, point.rho, &point.params));
    match q {
        Ok(q) => compare(point, q, closed, tol),
        Err(e) => error_outcome(point, e),
    }
}

/// Quadrature against closed form at every point of a plan.
pub fn verify_integral(spec: &IntegralSpec, points: &[IntegralPoint], tol: f64) -> VerificationReport<IntegralPoint> {
    let mut cache = RuleCache::default();
    VerificationReport {
        id: spec.id.into(),
        tolerance: tol,
        samples: points.iter().map(|p| verify_point(spec, p, tol, &mut cache)).collect(),
    }
}

/// Orthogonality weight of an expansion basis.
pub fn basis_weight(b: &Basis) -> Result<WeightId> {
    let real = |z: C| {
        if z.im == 0.0 {
            Ok(z.re)
        } else {
            Err(Error::Parameter("orthogonality weight needs real parameters"))
        }
    };
    Ok(match b {
        Basis::Jacobi(p) => WeightId::Jacobi {
            alpha: real(p.alpha)?,
            beta: real(p.beta)?,
        },
        Basis::Gegenbauer(p) => WeightId::Gegenbauer { mu: real(p.mu)? },
        Basis::ChebyshevT => WeightId::ChebyshevT,
        Basis::Laguerre(p) => WeightId::Laguerre { alpha: real(p.alpha)? },
        Basis::Wilson(p) => WeightId::Wilson {
            a: p.a,
            b: p.b,
            c: p.c,
            h: p.d,
        },
        Basis::LaguerreShifted(_) => return Err(Error::UnsupportedFamily("shifted Laguerre basis is not orthogonal")),
    })
}

/// Projection of the source identity's left side onto the true `B_k`
/// (not the normalized Wilson form), compared with `c_k ‖B_k‖²`, at the plan's `(k, ρ)` grid with the source identity's
/// default parameters.
pub fn verify_triangle(spec: &IntegralSpec, plan: &IntegralPlan, tol: f64) -> Result<VerificationReport<IntegralPoint>> {
    let src = identity::find(spec.source).ok_or(Error::Parameter("unknown source identity"))?;
    let points = plan.points_with(spec, &src.default_params());
    let x_mid = 0.5 * (src.x_range.0 + src.x_range.1);
    let mut cache = RuleCache::default();
    let mut samples = Vec::with_capacity(points.len());
    for point in &points {
        let p = &point.params;
        if let Some(reason) = src.check_domain(x_mid, point.rho, p) {
            samples.push(outcome(point, 0, f64::NAN, f64::NAN, SampleStatus::Skipped, Some(reason)));
            continue;
        }
        let basis = src.basis(p);
        let weight = basis_weight(&basis)?;
        let k = point.k;
        let scale = basis.scale(k).to_c();
        let expected = src
            .coeff(k, point.rho, p)
            .and_then(|c| Ok((c * norm_scaled(weight, k)?).to_c()));
        let expected = match expected {
            Ok(v) => v,
            Err(e) => {
                samples.push(error_outcome(point, e));
                continue;
            }
        };
        let q = weighted_integral(weight, &mut cache, |x| {
            let b = src.basis_sequence(k, x, p)[k] * scale;
            Ok(src.lhs(x, point.rho, p)? * b)
        });
        samples.push(match q {
            Ok(q) => compare(point, q, expected, tol),
            Err(e) => error_outcome(point, e),
        });
    }
    Ok(VerificationReport {
        id: spec.id.into(),
        tolerance: tol,
        samples,
    })
}

pub fn integral_registry() -> Vec<IntegralSpec> {
    catalog()
}

pub fn find_integral(id: &str) -> Option<IntegralSpec> {
    catalog().into_iter().find(|s| s.id == id)
}

// Helpers

fn ps(z: C, n: usize) -> Scaled {
    pochhammer_scaled(z, n)
}

fn sc(z: C) -> Scaled {
    Scaled::from_c(z)
}

fn gs(z: C) -> Result<Scaled> {
    gamma_scaled(z)
}

fn pow(z: C, e: C) -> Scaled {
    Scaled::powc(z, e)
}

fn fact(k: usize) -> Scaled {
    ps(re(1.0), k)
}

fn pfq(num: &[C], den: &[C], z: C) -> Result<C> {
    Ok(phyper(num, den, z, &TruncationControl::default())?.value)
}

fn jac(a: C, b: C) -> JacobiParams {
    JacobiParams { alpha: a, beta: b }
}

fn real_weight(z: C) -> Result<f64> {
    if z.im == 0.0 {
        Ok(z.re)
    } else {
        Err(Error::Parameter("weight parameter must be real"))
    }
}

fn unit_disk(rho: C, _: &Params) -> Option<&'static str> {
    (rho.norm() >= 1.0).then_some("|ρ| must be below 1")
}

fn disk_cut(rho: C, p: &Params) -> Option<&'static str> {
    unit_disk(rho, p).or((rho.im == 0.0 && rho.re <= 0.0).then_some("ρ may not lie in (-1, 0]"))
}

fn unit_interval(rho: C, _: &Params) -> Option<&'static str> {
    (rho.im != 0.0 || rho.re <= 0.0 || rho.re >= 1.0).then_some("ρ must lie in (0, 1)")
}

fn punctured_plane(rho: C, p: &Params) -> Option<&'static str> {
    if p.get("alpha").im != 0.0 || p.get("beta").im != 0.0 {
        return Some("α and β must be real");
    }
    (rho == re(0.0)).then_some("ρ must be nonzero")
}

fn wilson_domain(rho: C, p: &Params) -> Option<&'static str> {
    let w = wilson(p);
    if w.check_orthogonal().is_err() || w.with_d(p.get("h")).check_orthogonal().is_err() {
        return Some("Wilson parameters outside the positive-weight range");
    }
    unit_disk(rho, p)
}

fn wilson(p: &Params) -> WilsonParams {
    WilsonParams {
        a: p.get("a"),
        b: p.get("b"),
        c: p.get("c"),
        d: p.get("d"),
    }
}

// Weights

fn w_jac_gb(p: &Params) -> Result<WeightId> {
    Ok(WeightId::Jacobi {
        alpha: real_weight(p.get("gamma"))?,
        beta: real_weight(p.get("beta"))?,
    })
}

fn w_jac_ag(p: &Params) -> Result<WeightId> {
    Ok(WeightId::Jacobi {
        alpha: real_weight(p.get("alpha"))?,
        beta: real_weight(p.get("gamma"))?,
    })
}

fn w_geg_nu(p: &Params) -> Result<WeightId> {
    Ok(WeightId::Gegenbauer { mu: real_weight(p.get("nu"))? })
}

fn w_geg_gamma(p: &Params) -> Result<WeightId> {
    Ok(WeightId::Gegenbauer { mu: real_weight(p.get("gamma"))? })
}

fn w_cheb(_: &Params) -> Result<WeightId> {
    Ok(WeightId::ChebyshevT)
}

fn w_lag_beta(p: &Params) -> Result<WeightId> {
    Ok(WeightId::Laguerre { alpha: real_weight(p.get("beta"))? })
}

fn w_wilson(p: &Params) -> Result<WeightId> {
    let w = wilson(p);
    Ok(WeightId::Wilson {
        a: w.a,
        b: w.b,
        c: w.c,
        h: p.get("h"),
    })
}

// Jacobi algebraic kernel

fn f_a1(x: f64, k: usize, rho: C, p: &Params) -> Result<C> {
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let r = radius(x, rho);
    let one = re(1.0);
    let kernel = sc(r).recip() * pow(one + r - rho, -a) * pow(one + r + rho, -b);
    Ok(kernel.to_c() * jacobi_p(k, &jac(g, b), re(x))?)
}

fn cf_a1(k: usize, rho: C, p: &Params) -> Result<C> {
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let kf = k as f64;
    let lead = pow(re(2.0), g - a + 1.0) * gs(g + kf + 1.0)? * gs(b + kf + 1.0)? * ps((a + b + 1.0) * 0.5, k)
        * ps((a + b + 2.0) * 0.5, k)
        / (gs(g + b + 2.0)? * ps(a + b + 1.0, k) * ps((g + b + 2.0) * 0.5, k) * ps((g + b + 3.0) * 0.5, k) * fact(k));
    let f = pfq(
        &[b + kf + 1.0, a + b + 2.0 * kf + 1.0, a - g],
        &[a + b + kf + 1.0, g + b + 2.0 * kf + 2.0],
        rho,
    )?;
    Ok((lead * sc(f) * Scaled::from_c(rho).powi(k as i64)).to_c())
}

// Jacobi Bessel kernel

fn f_a2(x: f64, k: usize, rho: C, p: &Params) -> Result<C> {
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let j = bessel_j(a, (rho * 2.0 * (1.0 - x)).sqrt())?;
    let i = bessel_i(b, (rho * 2.0 * (1.0 + x)).sqrt())?;
    let pre = pow(re(1.0 - x), -a * 0.5) * pow(re(1.0 + x), -b * 0.5);
    Ok(pre.to_c() * j * i * jacobi_p(k, &jac(g, b), re(x))?)
}

fn cf_a2(k: usize, rho: C, p: &Params) -> Result<C> {
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let kf = k as f64;
    let lead = pow(re(2.0), g + b * 0.5 - a * 0.5 + 1.0) * gs(g + kf + 1.0)? * ps((a + b + 1.0) * 0.5, k)
        * ps((a + b + 2.0) * 0.5, k)
        / (gs(g + b + 2.0)?
            * gs(a + kf + 1.0)?
            * ps(a + b + 1.0, k)
            * ps((g + b + 2.0) * 0.5, k)
            * ps((g + b + 3.0) * 0.5, k)
            * fact(k));
    let f = pfq(
        &[a + b + 2.0 * kf + 1.0, a - g],
        &[a + b + kf + 1.0, g + b + 2.0 * kf + 2.0, a + kf + 1.0],
        rho,
    )?;
    Ok((lead * sc(f) * pow(rho, (a + b) * 0.5 + kf)).to_c())
}

// Legendre and Ferrers kernels

fn f_a3(x: f64, k: usize, rho: C, p: &Params) -> Result<C> {
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    Ok(lhs_legendre_kernel(x, rho, a, b, a + 1.0)? * jacobi_p(k, &jac(g, b), re(x))?)
}

fn cf_a3(k: usize, rho: C, p: &Params) -> Result<C> {
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let one = re(1.0);
    let kf = k as f64;
    let lead = pow(re(2.0), g + b * 0.5 + 1.0) * gs(g + kf + 1.0)? * ps(a + b + 1.0, 2 * k)
        / (pow(one - rho, a - g) * pow(rho, (g + 1.0) * 0.5) * fact(k));
    let arg = LegendreArg::exterior_with_offset((one + rho) / (one - rho), rho * 2.0 / (one - rho))?;
    let pv = assoc_legendre_p_scaled(g - a, -(g + b + 2.0 * kf + 1.0), &arg)?;
    Ok((lead * pv).to_c())
}

fn f_a4(x: f64, k: usize, rho: C, p: &Params) -> Result<C> {
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    Ok(lhs_ferrers_kernel(x, rho, b, a, b + 1.0)? * jacobi_p(k, &jac(a, g), re(x))?)
}

fn cf_a4(k: usize, rho: C, p: &Params) -> Result<C> {
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let one = re(1.0);
    let kf = k as f64;
    let lead = pow(re(2.0), g + a * 0.5 + 1.0) * gs(g + kf + 1.0)? * ps(a + b + 1.0, 2 * k)
        / (pow(one + rho, b - g) * pow(rho, (g + 1.0) * 0.5) * fact(k));
    let arg = LegendreArg::interior_with_offset((one - rho) / (one + rho), rho * 2.0 / (one + rho))?;
    let pv = ferrers_p_scaled(g - b, -(g + a + 2.0 * kf + 1.0), &arg)?;
    Ok((lead * pv).to_c())
}

// Gegenbauer

fn f_a5(x: f64, n: usize, rho: C, p: &Params) -> Result<C> {
    let (a, mu, nu) = (p.get("alpha"), p.get("mu"), p.get("nu"));
    let kernel = legendre_product_kernel(x, rho, mu - a - 0.5, mu)?;
    Ok(kernel * gegenbauer_c(n, &GegenbauerParams { mu: nu }, re(x))?)
}

fn cf_a5(n: usize, rho: C, p: &Params) -> Result<C> {
    let (a, mu, nu) = (p.get("alpha"), p.get("mu"), p.get("nu"));
    let nf = n as f64;
    let lead = sc(re(PI.sqrt())) * pow(re(2.0), re(0.5) - mu) * ps(nu * 2.0, n) * ps(a, n) * ps(mu * 2.0 - a, n)
        * ps(mu, n)
        * gs(nu + 0.5)?
        / (ps(mu * 2.0, n) * gs(mu + 0.5 + nf)? * gs(nu + 1.0 + nf)? * gs(mu + 0.5)? * fact(n));
    let f = pfq(
        &[
            (a + nf) * 0.5,
            (a + nf + 1.0) * 0.5,
            (mu * 2.0 - a + nf) * 0.5,
            (mu * 2.0 - a + nf + 1.0) * 0.5,
            mu + nf,
            mu - nu,
        ],
        &[
            (mu * 2.0 + nf) * 0.5,
            (mu * 2.0 + nf + 1.0) * 0.5,
            (mu + nf + 0.5) * 0.5,
            (mu + nf + 1.5) * 0.5,
            nu + nf + 1.0,
        ],
        rho * rho,
    )?;
    Ok((lead * sc(f) * pow(rho, mu + nf - 0.5)).to_c())
}

fn f_a6(x: f64, k: usize, rho: C, p: &Params) -> Result<C> {
    let (a, g) = (p.get("alpha"), p.get("gamma"));
    let r = radius(x, rho);
    let one = re(1.0);
    let kernel = sc(r).recip() * pow(one + r - rho, -(a - 0.5)) * pow(one + r + rho, -(g - 0.5));
    Ok(kernel.to_c() * gegenbauer_c(k, &GegenbauerParams { mu: g }, re(x))?)
}

fn cf_a6(k: usize, rho: C, p: &Params) -> Result<C> {
    let (a, g) = (p.get("alpha"), p.get("gamma"));
    let kf = k as f64;
    let lead = sc(re(PI.sqrt())) * pow(re(2.0), re(1.0) - g - a) * gs(g + 0.5)? * ps((a + g) * 0.5, k)
        * ps((a + g + 1.0) * 0.5, k)
        * ps(g * 2.0, k)
        / (gs(g + kf + 1.0)? * ps(a + g, k) * fact(k));
    let f = pfq(
        &[g + kf + 0.5, a + g + 2.0 * kf, a - g],
        &[a + g + kf, g * 2.0 + 2.0 * kf + 1.0],
        rho,
    )?;
    Ok((lead * sc(f) * Scaled::from_c(rho).powi(k as i64)).to_c())
}

fn f_a7(x: f64, k: usize, rho: C, p: &Params) -> Result<C> {
    let a = p.get("alpha");
    let r = radius(x, rho);
    let one = re(1.0);
    let kernel = pow(one + r + rho, re(0.5)) * sc(r).recip() * pow(one + r - rho, -(a - 0.5));
    Ok(kernel.to_c() * chebyshev_t(k, re(x)))
}

fn cf_a7(k: usize, rho: C, p: &Params) -> Result<C> {
    let a = p.get("alpha");
    let kf = k as f64;
    let lead = sc(re(PI)) * ps(a * 0.5, k) * ps((a + 1.0) * 0.5, k) / (pow(re(2.0), a - 1.0) * ps(a, k) * fact(k));
    let f = pfq(&[re(kf + 0.5), a + 2.0 * kf, a], &[re(2.0 * kf + 1.0), a + kf], rho)?;
    Ok((lead * sc(f) * Scaled::from_c(rho).powi(k as i64)).to_c())
}

// Laguerre

fn f_a8(x: f64, k: usize, rho: C, p: &Params) -> Result<C> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    let j = bessel_j(a, (rho * x).sqrt() * 2.0)?;
    Ok(pow(re(x), -a * 0.5).to_c() * j * laguerre_l(k, &LaguerreParams { alpha: b }, re(x))?)
}

fn cf_a8(k: usize, rho: C, p: &Params) -> Result<C> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    let kf = k as f64;
    let l = laguerre_function_scaled(b - a, a + kf, rho)?;
    let v = gs(b - a + 1.0)? * Scaled::from_ln(-rho) * pow(rho, a * 0.5 + kf) / fact(k) * l;
    Ok(v.to_c())
}

fn f_lag2(x: f64, n: usize, rho: C, p: &Params) -> Result<C> {
    // exp(x/(ρ-1)) over the weight's e^{-x}
    let e = (rho * x / (rho - 1.0)).exp();
    Ok(e * laguerre_l(n, &LaguerreParams { alpha: p.get("beta") }, re(x))?)
}

fn cf_lag2(n: usize, rho: C, p: &Params) -> Result<C> {
    let b = p.get("beta");
    let v = gs(b + n as f64 + 1.0)? * pow(re(1.0) - rho, b + 1.0) * Scaled::from_c(rho).powi(n as i64) / fact(n);
    Ok(v.to_c())
}

// Wilson

fn f_wil(x: f64, k: usize, rho: C, p: &Params) -> Result<C> {
    let w = wilson(p);
    let ix = C::new(0.0, x);
    let f1 = hyp2f1(w.a + ix, w.b + ix, w.a + w.b, rho)?;
    let f2 = hyp2f1(w.c - ix, w.d - ix, w.c + w.d, rho)?;
    Ok(f1 * f2 * wilson_w(k, &w.with_d(p.get("h")), re(x))?)
}

fn cf_wil(k: usize, rho: C, p: &Params) -> Result<C> {
    let WilsonParams { a, b, c, d } = wilson(p);
    let h = p.get("h");
    let kf = k as f64;
    let s = a + b + c + d;
    let lead = sc(re(2.0 * PI))
        * gs(a + b)?
        * gs(a + c + kf)?
        * gs(a + h + kf)?
        * gs(b + c + kf)?
        * gs(b + h + kf)?
        * gs(c + h + kf)?
        * ps(s + kf - 1.0, k)
        / (ps(c + d, k) * gs(a + b + c + h + 2.0 * kf)?);
    let f = pfq(
        &[d - h, s + 2.0 * kf - 1.0, a + c + kf, b + c + kf],
        &[s + kf - 1.0, a + b + c + h + 2.0 * kf, c + d + kf],
        rho,
    )?;
    Ok((lead * sc(f) * Scaled::from_c(rho).powi(k as i64)).to_c())
}

const JAC: &[(&str, f64)] = &[("alpha", 1.7), ("beta", 0.3), ("gamma", 0.5)];
const JAC_COM: &[(&str, f64)] = &[("alpha", 0.3), ("beta", 1.7), ("gamma", 0.5)];
const GEG_6F5: &[(&str, f64)] = &[("alpha", 0.9), ("mu", 1.1), ("nu", 0.7)];
const GEG_3F2: &[(&str, f64)] = &[("alpha", 1.7), ("gamma", 0.8)];
const CHEB: &[(&str, f64)] = &[("alpha", 1.3)];
const LAG_J: &[(&str, f64)] = &[("alpha", 0.6), ("beta", 1.3)];
const LAG_E: &[(&str, f64)] = &[("beta", 0.4)];
const WIL: &[(&str, f64)] = &[("a", 1.0), ("b", 2.0), ("c", 0.5), ("d", 1.3), ("h", 0.7)];

const DISK_RHOS: &[f64] = &[0.1, 0.4, 0.75];
// 0.4 e^{iπ/7}, the identity plans' complex probe
const DISK_COMPLEX: &[(f64, f64)] = &[(0.36038754716096766, 0.17355349564702327)];
const WIL_RHOS: &[f64] = &[0.2, 0.3, 0.45];
const LAG_RHOS: &[f64] = &[0.3, 1.0, 3.0];
const LAG_COMPLEX: &[(f64, f64)] = &[(0.5, 0.5), (1.0, -0.8)];

#[allow(clippy::too_many_arguments)]
fn entry(
    id: &'static str,
    family: Family,
    anchor: &'static str,
    defaults: &'static [(&'static str, f64)],
    source: &'static str,
    integrand: IntegrandFn,
    closed_form: ClosedFormFn,
    weight: WeightFn,
    domain: RhoDomainFn,
) -> IntegralSpec {
    IntegralSpec {
        id,
        family,
        anchor,
        tolerance: 1e-8,
        defaults,
        rhos: DISK_RHOS,
        complex_rhos: &[],
        source,
        integrand,
        closed_form,
        weight,
        domain,
    }
}

fn catalog() -> Vec<IntegralSpec> {
    use Family::*;
    let mut v = Vec::with_capacity(10);
    let mut s = entry(
        "INT-A1",
        Jacobi,
        "Jacobi-weighted algebraic kernel against P_k^{(γ,β)}, 3F2 closed form",
        JAC,
        "JAC-ALG-GEN",
        f_a1,
        cf_a1,
        w_jac_gb,
        unit_disk,
    );
    s.complex_rhos = DISK_COMPLEX;
    v.push(s);
    let mut s = entry(
        "INT-A2",
        Jacobi,
        "Bessel J times modified Bessel I against P_k^{(γ,β)}, 2F3 closed form",
        JAC,
        "JAC-BESSEL-GEN",
        f_a2,
        cf_a2,
        w_jac_gb,
        unit_disk,
    );
    s.complex_rhos = DISK_COMPLEX;
    v.push(s);
    let mut s = entry(
        "INT-A3",
        Jacobi,
        "Associated Legendre P kernel against P_k^{(γ,β)}, Legendre P closed form",
        JAC,
        "JAC-LEGP",
        f_a3,
        cf_a3,
        w_jac_gb,
        disk_cut,
    );
    s.complex_rhos = DISK_COMPLEX;
    v.push(s);
    v.push(entry(
        "INT-A4",
        Jacobi,
        "Ferrers P kernel against P_k^{(α,γ)}, Ferrers P closed form",
        JAC_COM,
        "JAC-FERP",
        f_a4,
        cf_a4,
        w_jac_ag,
        unit_interval,
    ));
    v.push(entry(
        "INT-A5",
        Gegenbauer,
        "Legendre P times Ferrers P against C_n^ν, 6F5 closed form",
        GEG_6F5,
        "GEG-6F5",
        f_a5,
        cf_a5,
        w_geg_nu,
        unit_interval,
    ));
    let mut s = entry(
        "INT-A6",
        Gegenbauer,
        "Algebraic kernel against C_k^γ, 3F2 closed form",
        GEG_3F2,
        "GEG-3F2",
        f_a6,
        cf_a6,
        w_geg_gamma,
        unit_disk,
    );
    s.complex_rhos = DISK_COMPLEX;
    v.push(s);
    let mut s = entry(
        "INT-A7",
        Chebyshev,
        "Algebraic kernel against T_k with the Chebyshev weight, 3F2 closed form",
        CHEB,
        "CHEB-3F2",
        f_a7,
        cf_a7,
        w_cheb,
        unit_disk,
    );
    s.complex_rhos = DISK_COMPLEX;
    v.push(s);
    let mut s = entry(
        "INT-A8",
        Laguerre,
        "x^{β-α/2} e^{-x} J_α(2√(ρx)) against L_k^β, Laguerre-function closed form",
        LAG_J,
        "LAG-BESSELJ-GEN",
        f_a8,
        cf_a8,
        w_lag_beta,
        punctured_plane,
    );
    s.rhos = LAG_RHOS;
    s.complex_rhos = LAG_COMPLEX;
    v.push(s);
    let mut s = entry(
        "INT-LAG2",
        Laguerre,
        "x^β exp(x/(ρ-1)) against L_n^β",
        LAG_E,
        "LAG-EXP-INV",
        f_lag2,
        cf_lag2,
        w_lag_beta,
        unit_disk,
    );
    s.complex_rhos = DISK_COMPLEX;
    v.push(s);
    let mut s = entry(
        "INT-WIL",
        Wilson,
        "Two Gauss 2F1 against W_k(x²; a,b,c,h) with the Wilson weight, 4F3 closed form",
        WIL,
        "WIL-GEN",
        f_wil,
        cf_wil,
        w_wilson,
        wilson_domain,
    );
    s.tolerance = 1e-7;
    s.rhos = WIL_RHOS;
    v.push(s);
    v
}

#[cfg(test)]
mod tests;
