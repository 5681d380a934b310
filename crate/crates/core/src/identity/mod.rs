//! Generating-function identities and the engine that checks them.
//!
//! Each [`IdentitySpec`] pairs a closed-form left-hand side `F(x, ρ)` with an
//! expansion `Σ_k c_k(ρ) B_k(x)` over a polynomial basis. Verification sums
//! the expansion with a growing truncation order and compares.

mod catalog;

use alloc::string::String;
use alloc::vec::Vec;

use crate::poly::{
    chebyshev_t_sequence, gegenbauer_sequence, jacobi_sequence, laguerre_sequence, laguerre_shifted_sequence,
    wilson_normalized_sequence, GegenbauerParams, JacobiParams, LaguerreParams, WilsonParams,
};
use crate::scalar::{pochhammer_scaled, re, ComplexScalar, Scaled, SeriesValue};
use crate::{Error, Result};

pub use catalog::registry;
pub(crate) use catalog::{legendre_product_kernel, lhs_ferrers_kernel, lhs_legendre_kernel, radius};

/// Named complex parameters of an identity.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Params {
    entries: Vec<(&'static str, ComplexScalar)>,
}

impl Params {
    pub fn new(list: &[(&'static str, f64)]) -> Self {
        Params {
            entries: list.iter().map(|(k, v)| (*k, re(*v))).collect(),
        }
    }

    /// Value of `name`, or NaN when absent so that evaluation fails loudly.
    pub fn get(&self, name: &str) -> ComplexScalar {
        self.try_get(name).unwrap_or(ComplexScalar::new(f64::NAN, f64::NAN))
    }

    pub fn try_get(&self, name: &str) -> Option<ComplexScalar> {
        self.entries.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.try_get(name).is_some()
    }

    /// Overwrites an existing entry; returns false for unknown names.
    pub fn set(&mut self, name: &str, value: ComplexScalar) -> bool {
        match self.entries.iter_mut().find(|(k, _)| *k == name) {
            Some(e) => {
                e.1 = value;
                true
            }
            None => false,
        }
    }

    pub fn with(mut self, name: &str, value: ComplexScalar) -> Self {
        self.set(name, value);
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, ComplexScalar)> + '_ {
        self.entries.iter().copied()
    }

    /// A parameter that must be a nonnegative integer (such as a degree).
    pub fn get_count(&self, name: &str) -> Result<usize> {
        let v = self.get(name);
        if v.im != 0.0 || v.re < 0.0 || v.re != v.re.round() || !v.re.is_finite() {
            return Err(Error::Parameter("expected a nonnegative integer parameter"));
        }
        Ok(v.re as usize)
    }
}

/// Polynomial family an identity expands over; also the CLI filter tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Jacobi,
    Gegenbauer,
    Chebyshev,
    Laguerre,
    Wilson,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Jacobi => "jacobi",
            Family::Gegenbauer => "gegenbauer",
            Family::Chebyshev => "chebyshev",
            Family::Laguerre => "laguerre",
            Family::Wilson => "wilson",
        }
    }

    pub fn from_tag(s: &str) -> Option<Family> {
        [
            Family::Jacobi,
            Family::Gegenbauer,
            Family::Chebyshev,
            Family::Laguerre,
            Family::Wilson,
        ]
        .into_iter()
        .find(|f| f.tag().eq_ignore_ascii_case(s))
    }
}

/// Concrete basis `B_k(x)` for one parameter set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Basis {
    Jacobi(JacobiParams),
    Gegenbauer(GegenbauerParams),
    ChebyshevT,
    Laguerre(LaguerreParams),
    /// `L_k^{α-k}(x)`.
    LaguerreShifted(ComplexScalar),
    /// `W_k(x²; a,b,c,d)`, carried normalized by `((a+b)(a+c)(a+d))_k`.
    Wilson(WilsonParams),
}

impl Basis {
    /// `B_0 … B_n` at `x`, except that Wilson entries are divided by
    /// [`Basis::scale`].
    pub fn sequence(&self, n: usize, x: ComplexScalar) -> Vec<ComplexScalar> {
        match self {
            Basis::Jacobi(p) => jacobi_sequence(n, p, x),
            Basis::Gegenbauer(p) => gegenbauer_sequence(n, p, x),
            Basis::ChebyshevT => chebyshev_t_sequence(n, x),
            Basis::Laguerre(p) => laguerre_sequence(n, p, x),
            Basis::LaguerreShifted(alpha) => laguerre_shifted_sequence(n, *alpha, x),
            Basis::Wilson(p) => wilson_normalized_sequence(n, p, x),
        }
    }

    /// Factor restoring the true `B_k` from [`Basis::sequence`].
    pub fn scale(&self, k: usize) -> Scaled {
        match self {
            Basis::Wilson(p) => {
                pochhammer_scaled(p.a + p.b, k) * pochhammer_scaled(p.a + p.c, k) * pochhammer_scaled(p.a + p.d, k)
            }
            _ => Scaled::ONE,
        }
    }

    /// Whether `B_k(-x) = ± B'_k(x)` for a family in the same class.
    pub fn has_parity(&self) -> bool {
        matches!(self, Basis::Jacobi(_) | Basis::Gegenbauer(_) | Basis::ChebyshevT)
    }
}

/// Default tolerance class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    /// Gauss, `3F2` and `2F3` coefficients.
    Standard,
    /// `6F5`, `4F3` and Wilson expansions.
    Extended,
}

impl Tier {
    pub fn tolerance(self) -> f64 {
        match self {
            Tier::Standard => 1e-10,
            Tier::Extended => 1e-8,
        }
    }
}

pub type LhsFn = fn(f64, ComplexScalar, &Params) -> Result<ComplexScalar>;
pub type CoeffFn = fn(usize, ComplexScalar, &Params) -> Result<Scaled>;
pub type BasisFn = fn(&Params) -> Basis;
/// Returns the reason a point is rejected, or `None` inside the domain.
pub type DomainFn = fn(f64, ComplexScalar, &Params) -> Option<&'static str>;

/// How a generalized identity collapses onto its base.
#[derive(Clone, Copy, Debug)]
pub struct Reduction {
    pub base: &'static str,
    /// Sets the free parameter so that the two sides coincide.
    pub collapse: fn(&Params) -> Params,
    /// Parameters of the base identity for collapsed parameters.
    pub to_base: fn(&Params) -> Params,
    /// `B_k^{gen} = factor(k) · B_k^{base}` when the bases are normalized
    /// differently.
    pub basis_factor: Option<fn(usize, &Params) -> ComplexScalar>,
}

/// One generating-function identity.
#[derive(Clone, Debug)]
pub struct IdentitySpec {
    pub id: String,
    pub family: Family,
    pub anchor: &'static str,
    pub tier: Tier,
    pub defaults: &'static [(&'static str, f64)],
    /// Extra parameter values sampled on top of the defaults.
    pub variants: &'static [(&'static str, &'static [f64])],
    /// Closed interval that sample abscissae are drawn from.
    pub x_range: (f64, f64),
    /// Whether the default plan includes a complex `ρ`.
    pub complex_rho: bool,
    pub reduction: Option<Reduction>,
    /// Set on companions: `x ↦ -x`, `ρ ↦ -ρ`, `B_k(x) ↦ (-1)^k B_k(-x)`.
    pub mirrored: bool,
    lhs: LhsFn,
    coeff: CoeffFn,
    basis: BasisFn,
    domain: DomainFn,
}

impl IdentitySpec {
    pub fn default_params(&self) -> Params {
        Params::new(self.defaults)
    }

    /// Parameter sets of the default plan.
    pub fn param_sets(&self) -> Vec<Params> {
        let base = self.default_params();
        let mut out = alloc::vec![base.clone()];
        for (name, values) in self.variants {
            for v in *values {
                let p = base.clone().with(name, re(*v));
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    fn mirror(&self, x: f64, rho: ComplexScalar) -> (f64, ComplexScalar) {
        if self.mirrored {
            (-x, -rho)
        } else {
            (x, rho)
        }
    }

    pub fn check_domain(&self, x: f64, rho: ComplexScalar, p: &Params) -> Option<&'static str> {
        if !(x.is_finite() && rho.re.is_finite() && rho.im.is_finite()) {
            return Some("non-finite sample");
        }
        let (x, rho) = self.mirror(x, rho);
        (self.domain)(x, rho, p)
    }

    pub fn lhs(&self, x: f64, rho: ComplexScalar, p: &Params) -> Result<ComplexScalar> {
        let (x, rho) = self.mirror(x, rho);
        crate::scalar::check_finite((self.lhs)(x, rho, p)?, "identity left-hand side")
    }

    /// `c_k(ρ)` of the true (unnormalized) basis.
    pub fn coeff(&self, k: usize, rho: ComplexScalar, p: &Params) -> Result<Scaled> {
        let rho = if self.mirrored { -rho } else { rho };
        let c = (self.coeff)(k, rho, p)?;
        Ok(if self.mirrored && k % 2 == 1 { -c } else { c })
    }

    pub fn basis(&self, p: &Params) -> Basis {
        (self.basis)(p)
    }

    /// `B_0 … B_n` at `x`, normalized as in [`Basis::sequence`].
    pub fn basis_sequence(&self, n: usize, x: f64, p: &Params) -> Vec<ComplexScalar> {
        let b = self.basis(p);
        if !self.mirrored {
            return b.sequence(n, re(x));
        }
        let mut s = b.sequence(n, re(-x));
        for (k, v) in s.iter_mut().enumerate() {
            if k % 2 == 1 {
                *v = -*v;
            }
        }
        s
    }

    /// Coefficients `c_0 … c_{K}` matched to [`IdentitySpec::basis_sequence`].
    pub fn term_coeffs(&self, kmax: usize, rho: ComplexScalar, p: &Params) -> Result<Vec<ComplexScalar>> {
        let mut out = Vec::with_capacity(kmax + 1);
        self.extend_coeffs(&mut out, kmax, rho, p)?;
        Ok(out)
    }

    fn extend_coeffs(&self, out: &mut Vec<ComplexScalar>, kmax: usize, rho: ComplexScalar, p: &Params) -> Result<()> {
        let b = self.basis(p);
        for k in out.len()..=kmax {
            let c = self.coeff(k, rho, p)? * b.scale(k);
            if !c.is_finite() {
                return Err(Error::NonFinite("identity coefficient"));
            }
            out.push(c.to_c());
        }
        Ok(())
    }

    /// Partial sum `Σ_{k≤K} c_k B_k(x)`.
    pub fn eval_rhs(&self, x: f64, rho: ComplexScalar, p: &Params, kmax: usize) -> Result<SeriesValue> {
        let coeffs = self.term_coeffs(kmax, rho, p)?;
        Ok(partial_sum(&coeffs, &self.basis_sequence(kmax, x, p)))
    }

    /// Residual `(|F - S_K|, |F - S_K| / |F|)` at one point.
    pub fn residual(&self, x: f64, rho: ComplexScalar, p: &Params, kmax: usize) -> Result<(f64, f64)> {
        let lhs = self.lhs(x, rho, p)?;
        let rhs = self.eval_rhs(x, rho, p, kmax)?.value;
        let abs = (lhs - rhs).norm();
        Ok((abs, abs / lhs.norm()))
    }
}

fn partial_sum(coeffs: &[ComplexScalar], basis: &[ComplexScalar]) -> SeriesValue {
    let mut sum = re(0.0);
    let mut last = 0.0;
    for (c, b) in coeffs.iter().zip(basis) {
        let t = *c * *b;
        sum += t;
        last = t.norm();
    }
    SeriesValue {
        value: sum,
        terms_used: coeffs.len().min(basis.len()),
        last_term_abs: last,
        converged: last <= 1e-15 * sum.norm().max(1.0),
    }
}

/// Looks an identity up by id, companions included.
pub fn find(id: &str) -> Option<IdentitySpec> {
    registry().into_iter().find(|s| s.id == id)
}

/// The companion identity: `x ↦ -x`, `ρ ↦ -ρ` with the basis reflected.
///
/// Applying the transform twice gives back the original spec.
pub fn companion_transform(spec: &IdentitySpec) -> Result<IdentitySpec> {
    if matches!(spec.family, Family::Laguerre | Family::Wilson) {
        return Err(Error::UnsupportedFamily("companion identities need a reflection-symmetric basis"));
    }
    let mut out = spec.clone();
    out.mirrored = !spec.mirrored;
    out.id = match spec.id.strip_suffix("-COMP") {
        Some(stem) => String::from(stem),
        None => {
            let mut s = spec.id.clone();
            s.push_str("-COMP");
            s
        }
    };
    Ok(out)
}

/// Whether a sample passed, failed, or could not be judged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleStatus {
    Pass,
    Fail,
    Skipped,
}

impl SampleStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SampleStatus::Pass => "pass",
            SampleStatus::Fail => "fail",
            SampleStatus::Skipped => "skipped",
        }
    }
}

/// One point of a sample plan.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplePoint {
    pub x: f64,
    pub rho: ComplexScalar,
    pub params: Params,
}

/// Outcome at one sample point. For integrals `k_used` is the quadrature
/// order (or Wilson panel count) that produced the accepted value.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleOutcome<P = SamplePoint> {
    pub point: P,
    pub k_used: usize,
    pub residual_abs: f64,
    pub residual_rel: f64,
    pub status: SampleStatus,
    pub note: Option<&'static str>,
}

/// Aggregated result of checking one identity over a plan.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport<P = SamplePoint> {
    pub id: String,
    pub tolerance: f64,
    pub samples: Vec<SampleOutcome<P>>,
}

impl<P> VerificationReport<P> {
    /// Largest judged residual under the pass metric.
    pub fn worst(&self) -> Option<&SampleOutcome<P>> {
        self.samples
            .iter()
            .filter(|s| s.status != SampleStatus::Skipped)
            .max_by(|a, b| metric(a).total_cmp(&metric(b)))
    }

    /// Fail if any sample failed; skipped only if nothing was judged.
    pub fn status(&self) -> SampleStatus {
        if self.samples.iter().any(|s| s.status == SampleStatus::Fail) {
            SampleStatus::Fail
        } else if self.samples.iter().any(|s| s.status == SampleStatus::Pass) {
            SampleStatus::Pass
        } else {
            SampleStatus::Skipped
        }
    }

    pub fn count(&self, status: SampleStatus) -> usize {
        self.samples.iter().filter(|s| s.status == status).count()
    }
}

/// Relative residual, or absolute where the left side is below one.
pub fn metric<P>(s: &SampleOutcome<P>) -> f64 {
    judged(s.residual_abs, s.residual_rel)
}

pub(crate) fn judged(abs: f64, rel: f64) -> f64 {
    if rel.is_nan() {
        return abs;
    }
    abs.min(rel)
}

pub const K_START: usize = 16;
pub const K_CAP: usize = 512;

/// Default sample plan: `ρ` values, abscissa count and whether to add the
/// complex probe point.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplePlan {
    pub rhos: Vec<ComplexScalar>,
    pub x_count: usize,
    pub include_complex: bool,
}

impl Default for SamplePlan {
    fn default() -> Self {
        SamplePlan {
            rhos: [0.1, 0.25, 0.5, 0.75].into_iter().map(re).collect(),
            x_count: 9,
            include_complex: true,
        }
    }
}

/// `0.4 e^{iπ/7}`.
pub fn complex_probe() -> ComplexScalar {
    ComplexScalar::from_polar(0.4, core::f64::consts::PI / 7.0)
}

/// `n` Chebyshev points of `[lo, hi]`, ascending.
pub fn chebyshev_points(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mut v: Vec<f64> = (0..n)
        .map(|j| mid - half * ((2 * j + 1) as f64 * core::f64::consts::PI / (2 * n) as f64).cos())
        .collect();
    v.sort_by(f64::total_cmp);
    v
}

impl SamplePlan {
    pub fn points(&self, spec: &IdentitySpec) -> Vec<SamplePoint> {
        let mut rhos = self.rhos.clone();
        if self.include_complex && spec.complex_rho {
            rhos.push(complex_probe());
        }
        let xs = chebyshev_points(self.x_count, spec.x_range.0, spec.x_range.1);
        let mut out = Vec::new();
        for params in spec.param_sets() {
            for rho in &rhos {
                for x in &xs {
                    out.push(SamplePoint {
                        x: *x,
                        rho: *rho,
                        params: params.clone(),
                    });
                }
            }
        }
        out
    }
}

/// Checks one point, growing `K` by doubling from [`K_START`] to [`K_CAP`].
///
/// A point passes once both the residual and the change in the partial sum
/// over the last doubling are within `tol`. At the cap, a tail that is still
/// moving marks the point skipped; a settled tail with a large residual fails.
pub fn verify_point(spec: &IdentitySpec, point: &SamplePoint, tol: f64) -> SampleOutcome {
    let mut cache = Vec::new();
    verify_point_cached(spec, point, tol, &mut cache)
}

fn verify_point_cached(
    spec: &IdentitySpec,
    point: &SamplePoint,
    tol: f64,
    coeffs: &mut Vec<ComplexScalar>,
) -> SampleOutcome {
    let outcome = |k_used, abs, rel, status, note| SampleOutcome {
        point: point.clone(),
        k_used,
        residual_abs: abs,
        residual_rel: rel,
        status,
        note,
    };
    if let Some(reason) = spec.check_domain(point.x, point.rho, &point.params) {
        return outcome(0, f64::NAN, f64::NAN, SampleStatus::Skipped, Some(reason));
    }
    let lhs = match spec.lhs(point.x, point.rho, &point.params) {
        Ok(v) => v,
        Err(e) => return error_outcome(point, e),
    };
    let scale = lhs.norm();
    let mut k = K_START;
    let mut prev: Option<ComplexScalar> = None;
    loop {
        if let Err(e) = spec.extend_coeffs(coeffs, k, point.rho, &point.params) {
            return error_outcome(point, e);
        }
        let basis = spec.basis_sequence(k, point.x, &point.params);
        let sum = partial_sum(&coeffs[..=k], &basis).value;
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            return outcome(k, f64::NAN, f64::NAN, SampleStatus::Fail, Some("non-finite partial sum"));
        }
        let abs = (lhs - sum).norm();
        let rel = abs / scale;
        let tail = prev.map(|p| judged((sum - p).norm(), (sum - p).norm() / scale));
        let res = judged(abs, rel);
        if res <= tol && tail.is_some_and(|t| t <= tol) {
            return outcome(k, abs, rel, SampleStatus::Pass, None);
        }
        if k >= K_CAP {
            return if tail.is_some_and(|t| t <= tol) {
                outcome(k, abs, rel, SampleStatus::Fail, Some("residual above tolerance with a settled tail"))
            } else {
                outcome(k, abs, rel, SampleStatus::Skipped, Some("series not settled at the truncation cap"))
            };
        }
        prev = Some(sum);
        k *= 2;
    }
}

fn error_outcome(point: &SamplePoint, e: Error) -> SampleOutcome {
    let (status, note) = match e {
        Error::Diverged { .. } | Error::NonConvergence { .. } => {
            (SampleStatus::Skipped, "coefficient series did not converge")
        }
        Error::Domain(_) | Error::Branch(_) => (SampleStatus::Skipped, "outside the evaluable domain"),
        _ => (SampleStatus::Fail, "evaluation error"),
    };
    SampleOutcome {
        point: point.clone(),
        k_used: 0,
        residual_abs: f64::NAN,
        residual_rel: f64::NAN,
        status,
        note: Some(note),
    }
}

/// Verifies every point of a plan; coefficients are shared between
/// consecutive points with the same `ρ` and parameters.
pub fn verify_identity(spec: &IdentitySpec, points: &[SamplePoint], tol: f64) -> VerificationReport {
    let mut samples = Vec::with_capacity(points.len());
    let mut key: Option<(ComplexScalar, Params)> = None;
    let mut coeffs = Vec::new();
    for point in points {
        let same = matches!(&key, Some((r, p)) if *r == point.rho && *p == point.params);
        if !same {
            coeffs.clear();
            key = Some((point.rho, point.params.clone()));
        }
        samples.push(verify_point_cached(spec, point, tol, &mut coeffs));
    }
    VerificationReport {
        id: spec.id.clone(),
        tolerance: tol,
        samples,
    }
}

/// Smallest `K ≤ cap` from which every partial sum up to `cap` is within
/// `tol` of the left side, or `None` if the tail never settles that far.
pub fn terms_needed(spec: &IdentitySpec, point: &SamplePoint, tol: f64, cap: usize) -> Result<Option<usize>> {
    let lhs = spec.lhs(point.x, point.rho, &point.params)?;
    let coeffs = spec.term_coeffs(cap, point.rho, &point.params)?;
    let basis = spec.basis_sequence(cap, point.x, &point.params);
    let scale = lhs.norm();
    let mut sum = re(0.0);
    let mut first_good = None;
    for (k, (c, b)) in coeffs.iter().zip(&basis).enumerate() {
        sum += *c * *b;
        let abs = (lhs - sum).norm();
        if judged(abs, abs / scale) <= tol {
            first_good.get_or_insert(k);
        } else {
            first_good = None;
        }
    }
    Ok(first_good)
}

/// Largest termwise relative mismatch between a generalized identity with
/// its free parameter collapsed and its base, over `k ≤ kmax`.
///
/// Also compares the two left-hand sides at `x`.
pub fn reduction_mismatch(spec: &IdentitySpec, params: &Params, rho: ComplexScalar, x: f64, kmax: usize) -> Result<f64> {
    let red = spec
        .reduction
        .ok_or(Error::Parameter("identity has no reduction"))?;
    let mut base = find(red.base).ok_or(Error::Parameter("unknown base identity"))?;
    if spec.mirrored {
        base = companion_transform(&base)?;
    }
    let gp = (red.collapse)(params);
    let bp = (red.to_base)(&gp);
    let mut worst = 0.0f64;
    let lg = spec.lhs(x, rho, &gp)?;
    let lb = base.lhs(x, rho, &bp)?;
    worst = worst.max((lg - lb).norm() / lb.norm().max(f64::MIN_POSITIVE));
    for k in 0..=kmax {
        let mut cg = spec.coeff(k, rho, &gp)?.to_c();
        if let Some(f) = red.basis_factor {
            cg *= f(k, &gp);
        }
        let cb = base.coeff(k, rho, &bp)?.to_c();
        let d = (cg - cb).norm();
        let s = cb.norm().max(cg.norm());
        if s > 0.0 {
            worst = worst.max(d / s);
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests;
