use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{companion_transform, Basis, Family, IdentitySpec, Params, Reduction, Tier};
use crate::legendre::{assoc_legendre_p_scaled, assoc_legendre_q_scaled, ferrers_p_scaled, LegendreArg};
use crate::poly::{gegenbauer_sequence, neumann_factor, GegenbauerParams, JacobiParams, LaguerreParams, WilsonParams};
use crate::scalar::{
    bessel_i, bessel_j, cpow, gamma_scaled, hyp2f1, kummer_m, phyper, pochhammer, pochhammer_scaled, re,
    ComplexScalar as C, Scaled, TruncationControl,
};
use crate::poly::laguerre_function_scaled;
use crate::Result;

const SYM: (f64, f64) = (-1.0 + 1e-3, 1.0 - 1e-3);
const LAG_X: (f64, f64) = (0.05, 8.0);
const WIL_X: (f64, f64) = (0.05, 4.0);

fn ps(z: C, n: usize) -> Scaled {
    pochhammer_scaled(z, n)
}

fn sc(z: C) -> Scaled {
    Scaled::from_c(z)
}

fn sr(x: f64) -> Scaled {
    Scaled::from_real(x)
}


fn lgs(z: C) -> Result<Scaled> {
    gamma_scaled(z)
}

fn inv_lgs(z: C) -> Result<Scaled> {
    Ok(gamma_scaled(z)?.recip())
}

/// `z^k` by repeated squaring, exact in sign for real negative `z`.
fn ipow(z: C, k: usize) -> Scaled {
    let mut base = sc(z);
    let mut acc = Scaled::ONE;
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base = base * base;
        e >>= 1;
    }
    acc
}

/// Principal `z^e` in scaled form.
fn spow(z: C, e: C) -> Scaled {
    Scaled::powc(z, e)
}

fn pfq(num: &[C], den: &[C], z: C) -> Result<C> {
    Ok(phyper(num, den, z, &TruncationControl::default())?.value)
}

/// `R = √(1+ρ²-2ρx)` formed as `√((1-ρ)² + 2ρ(1-x))`.
pub(crate) fn radius(x: f64, rho: C) -> C {
    let one = re(1.0);
    ((one - rho) * (one - rho) + rho * 2.0 * (1.0 - x)).sqrt()
}

fn radius_sq(x: f64, rho: C) -> C {
    let one = re(1.0);
    (one - rho) * (one - rho) + rho * 2.0 * (1.0 - x)
}

/// `1 + ρ - R` without cancellation.
fn one_plus_rho_minus_r(x: f64, rho: C, r: C) -> C {
    rho * 2.0 * (1.0 + x) / (r + rho + 1.0)
}

/// `R - (1 - ρ)` without cancellation.
fn r_minus_one_minus_rho(x: f64, rho: C, r: C) -> C {
    rho * 2.0 * (1.0 - x) / (r - rho + 1.0)
}

fn in_disk(rho: C) -> Option<&'static str> {
    (rho.norm() >= 1.0).then_some("|ρ| must be below 1")
}

fn open_interval(x: f64) -> Option<&'static str> {
    (x <= -1.0 || x >= 1.0).then_some("x must lie in (-1, 1)")
}

fn closed_interval(x: f64) -> Option<&'static str> {
    (!(-1.0..=1.0).contains(&x)).then_some("x must lie in [-1, 1]")
}

fn positive_x(x: f64) -> Option<&'static str> {
    (x <= 0.0).then_some("x must be positive")
}

fn real_unit_interval(rho: C) -> Option<&'static str> {
    (rho.im != 0.0 || rho.re <= 0.0 || rho.re >= 1.0).then_some("ρ must lie in (0, 1)")
}

fn off_negative_axis(rho: C) -> Option<&'static str> {
    (rho.im == 0.0 && rho.re <= 0.0).then_some("ρ may not lie in (-1, 0]")
}

fn dom_disk_closed(x: f64, rho: C, _: &Params) -> Option<&'static str> {
    closed_interval(x).or(in_disk(rho))
}

fn dom_disk_open(x: f64, rho: C, _: &Params) -> Option<&'static str> {
    open_interval(x).or(in_disk(rho))
}

fn dom_disk_cut(x: f64, rho: C, _: &Params) -> Option<&'static str> {
    open_interval(x).or(in_disk(rho)).or(off_negative_axis(rho))
}

fn dom_real_rho(x: f64, rho: C, _: &Params) -> Option<&'static str> {
    open_interval(x).or(real_unit_interval(rho))
}

fn dom_with_m(x: f64, rho: C, p: &Params) -> Option<&'static str> {
    if p.get_count("m").is_err() {
        return Some("m must be a nonnegative integer");
    }
    dom_disk_cut(x, rho, p)
}

fn dom_with_m_real(x: f64, rho: C, p: &Params) -> Option<&'static str> {
    if p.get_count("m").is_err() {
        return Some("m must be a nonnegative integer");
    }
    dom_real_rho(x, rho, p)
}

fn dom_prodfin(x: f64, rho: C, p: &Params) -> Option<&'static str> {
    if p.get_count("m").is_err() {
        return Some("m must be a nonnegative integer");
    }
    dom_disk_closed(x, rho, p)
}

fn dom_lag_disk(x: f64, rho: C, _: &Params) -> Option<&'static str> {
    positive_x(x).or(in_disk(rho))
}

fn dom_lag_entire(x: f64, _: C, _: &Params) -> Option<&'static str> {
    positive_x(x)
}

fn dom_wilson(x: f64, rho: C, p: &Params) -> Option<&'static str> {
    let w = wilson_params(p);
    if w.check_orthogonal().is_err() {
        return Some("Wilson parameters outside the positive-weight range");
    }
    if p.contains("h") && w.with_d(p.get("h")).check_orthogonal().is_err() {
        return Some("Wilson target parameters outside the positive-weight range");
    }
    positive_x(x).or(in_disk(rho))
}

fn jacobi(p: &Params, a: &str, b: &str) -> Basis {
    Basis::Jacobi(JacobiParams {
        alpha: p.get(a),
        beta: p.get(b),
    })
}

fn basis_jac_ab(p: &Params) -> Basis {
    jacobi(p, "alpha", "beta")
}

fn basis_jac_gb(p: &Params) -> Basis {
    jacobi(p, "gamma", "beta")
}

fn basis_jac_ag(p: &Params) -> Basis {
    jacobi(p, "alpha", "gamma")
}

fn geg(p: &Params, name: &str) -> Basis {
    Basis::Gegenbauer(GegenbauerParams { mu: p.get(name) })
}

fn basis_geg_nu(p: &Params) -> Basis {
    geg(p, "nu")
}

fn basis_geg_mu(p: &Params) -> Basis {
    geg(p, "mu")
}

fn basis_geg_gamma(p: &Params) -> Basis {
    geg(p, "gamma")
}

fn basis_cheb(_: &Params) -> Basis {
    Basis::ChebyshevT
}

fn basis_lag_alpha(p: &Params) -> Basis {
    Basis::Laguerre(LaguerreParams { alpha: p.get("alpha") })
}

fn basis_lag_beta(p: &Params) -> Basis {
    Basis::Laguerre(LaguerreParams { alpha: p.get("beta") })
}

fn basis_lag_shifted(p: &Params) -> Basis {
    Basis::LaguerreShifted(p.get("alpha"))
}

fn wilson_params(p: &Params) -> WilsonParams {
    WilsonParams {
        a: p.get("a"),
        b: p.get("b"),
        c: p.get("c"),
        d: p.get("d"),
    }
}

fn basis_wilson(p: &Params) -> Basis {
    Basis::Wilson(wilson_params(p))
}

fn basis_wilson_h(p: &Params) -> Basis {
    Basis::Wilson(wilson_params(p).with_d(p.get("h")))
}

fn coeff_rho_pow(k: usize, rho: C, _: &Params) -> Result<Scaled> {
    Ok(ipow(rho, k))
}

// Gegenbauer power

fn lhs_geg_pow(x: f64, rho: C, p: &Params) -> Result<C> {
    Ok(cpow(radius_sq(x, rho), -p.get("nu")))
}

fn coeff_geg_pow_gen(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (nu, mu) = (p.get("nu"), p.get("mu"));
    let one = re(1.0);
    let arg = LegendreArg::exterior_with_offset((one + rho * rho) / (rho * 2.0), (one - rho) * (one - rho) / (rho * 2.0))?;
    let phase = Scaled::from_ln(C::i() * PI * (mu - nu + 0.5));
    let pref = lgs(mu)? * phase * inv_lgs(nu)? * sr(PI.sqrt()).recip()
        * spow(rho, -(mu + 0.5))
        * spow(one - rho * rho, -(nu - mu - 0.5));
    let q = assoc_legendre_q_scaled(mu + k as f64 - 0.5, nu - mu - 0.5, &arg)?;
    Ok(pref * sc(mu + k as f64) * q)
}

// Jacobi algebraic

fn lhs_jac_alg(x: f64, rho: C, p: &Params) -> Result<C> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    let r = radius(x, rho);
    let one = re(1.0);
    let t1 = one + r - rho;
    let t2 = one + r + rho;
    Ok((sc(cpow(re(2.0), a + b)) * sc(r).recip() * spow(t1, -a) * spow(t2, -b)).to_c())
}

fn jac_gen_prefactor(k: usize, p: &Params) -> Scaled {
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let kf = k as f64;
    sc(g + b + 2.0 * kf + 1.0) * ps(g + b + 1.0, k) * ps((a + b + 1.0) * 0.5, k) * ps((a + b + 2.0) * 0.5, k)
        / (ps(a + b + 1.0, k) * ps((g + b + 2.0) * 0.5, k) * ps((g + b + 3.0) * 0.5, k))
        / sc(g + b + 1.0)
}

fn coeff_jac_alg_gen(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let kf = k as f64;
    let f = pfq(
        &[b + kf + 1.0, a + b + 2.0 * kf + 1.0, a - g],
        &[a + b + kf + 1.0, g + b + 2.0 * kf + 2.0],
        rho,
    )?;
    Ok(jac_gen_prefactor(k, p) * sc(f) * ipow(rho, k))
}

// Jacobi Bessel

fn lhs_jac_bessel(x: f64, rho: C, p: &Params) -> Result<C> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    let w1 = rho * (1.0 - x) * 0.5;
    let w2 = rho * (1.0 + x) * 0.5;
    let j = if w1 == re(0.0) {
        crate::scalar::rgamma(a + 1.0)
    } else {
        cpow(w1, -a * 0.5) * bessel_j(a, w1.sqrt() * 2.0)?
    };
    let i = if w2 == re(0.0) {
        crate::scalar::rgamma(b + 1.0)
    } else {
        cpow(w2, -b * 0.5) * bessel_i(b, w2.sqrt() * 2.0)?
    };
    Ok(j * i)
}

fn coeff_jac_bessel(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    let kf = k as f64;
    Ok(ipow(rho, k) * inv_lgs(a + 1.0 + kf)? * inv_lgs(b + 1.0 + kf)?)
}

fn coeff_jac_bessel_gen(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let kf = k as f64;
    let f = pfq(
        &[a + b + 2.0 * kf + 1.0, a - g],
        &[a + b + kf + 1.0, g + b + 2.0 * kf + 2.0, a + kf + 1.0],
        rho,
    )?;
    Ok(jac_gen_prefactor(k, p) * inv_lgs(a + 1.0 + kf)? * inv_lgs(b + 1.0 + kf)? * sc(f) * ipow(rho, k))
}

// Jacobi Gauss-function forms

fn lhs_jac_2f1(x: f64, rho: C, p: &Params) -> Result<C> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    let one = re(1.0);
    let z = rho * 2.0 * (1.0 + x) / ((one + rho) * (one + rho));
    let f = hyp2f1((a + b + 1.0) * 0.5, (a + b + 2.0) * 0.5, b + 1.0, z)?;
    Ok(cpow(one + rho, -(a + b + 1.0)) * f)
}

fn coeff_jac_2f1(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    Ok(ps(a + b + 1.0, k) / ps(b + 1.0, k) * ipow(rho, k))
}

fn coeff_jac_2f1_conn(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let kf = k as f64;
    let f = hyp2f1(a + b + 1.0 + 2.0 * kf, a - g, g + b + 2.0 + 2.0 * kf, rho)?;
    Ok(jac_gen_prefactor(k, p) * ps(a + b + 1.0, k) / ps(b + 1.0, k) * sc(f) * ipow(rho, k))
}

fn lhs_jac_ismail(x: f64, rho: C, p: &Params) -> Result<C> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    let one = re(1.0);
    let z = rho * 2.0 * (x - 1.0) / ((one - rho) * (one - rho));
    let f = hyp2f1((a + b + 2.0) * 0.5, (a + b + 3.0) * 0.5, a + 1.0, z)?;
    Ok((one + rho) * cpow(one - rho, -(a + b + 2.0)) * f)
}

fn coeff_jac_ismail(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    let s = a + b + 1.0;
    Ok(sc(s + 2.0 * k as f64) * ps(s, k) / (sc(s) * ps(a + 1.0, k)) * ipow(rho, k))
}

// Jacobi with Legendre and Ferrers coefficients

fn legendre_exterior_arg(x: f64, rho: C) -> Result<(C, LegendreArg)> {
    let r = radius(x, rho);
    let one = re(1.0);
    let arg = LegendreArg::exterior_with_offset((one + rho) / r, one_plus_rho_minus_r(x, rho, r) / r)?;
    Ok((r, arg))
}

fn ferrers_interior_arg(x: f64, rho: C) -> Result<(C, LegendreArg)> {
    let r = radius(x, rho);
    let one = re(1.0);
    let arg = LegendreArg::interior_with_offset((one - rho) / r, r_minus_one_minus_rho(x, rho, r) / r)?;
    Ok((r, arg))
}

fn rho_exterior(rho: C) -> Result<LegendreArg> {
    let one = re(1.0);
    LegendreArg::exterior_with_offset((one + rho) / (one - rho), rho * 2.0 / (one - rho))
}

fn rho_interior(rho: C) -> Result<LegendreArg> {
    let one = re(1.0);
    LegendreArg::interior_with_offset((one - rho) / (one + rho), rho * 2.0 / (one + rho))
}

pub(crate) fn lhs_legendre_kernel(x: f64, rho: C, degree: C, beta: C, radial: C) -> Result<C> {
    let (r, arg) = legendre_exterior_arg(x, rho)?;
    let pv = assoc_legendre_p_scaled(degree, -beta, &arg)?;
    Ok((spow(re(1.0 + x), -beta * 0.5) * spow(r, -radial) * pv).to_c())
}

pub(crate) fn lhs_ferrers_kernel(x: f64, rho: C, degree: C, alpha: C, radial: C) -> Result<C> {
    let (r, arg) = ferrers_interior_arg(x, rho)?;
    let pv = ferrers_p_scaled(degree, -alpha, &arg)?;
    Ok((spow(re(1.0 - x), -alpha * 0.5) * spow(r, -radial) * pv).to_c())
}

fn lhs_jac_legp(x: f64, rho: C, p: &Params) -> Result<C> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    lhs_legendre_kernel(x, rho, a, b, a + 1.0)
}

fn coeff_jac_legp(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let one = re(1.0);
    let kf = k as f64;
    let pref = lgs(g + b + 1.0)? * inv_lgs(b + 1.0)?
        * spow(re(2.0), -b * 0.5)
        * spow(one - rho, -(a - g))
        * spow(rho, -(g + 1.0) * 0.5);
    let body = sc(g + b + 2.0 * kf + 1.0) * ps(g + b + 1.0, k) * ps(a + b + 1.0, 2 * k) / ps(b + 1.0, k);
    let pv = assoc_legendre_p_scaled(g - a, -(g + b + 2.0 * kf + 1.0), &rho_exterior(rho)?)?;
    Ok(pref * body * pv)
}

fn lhs_jac_ferp(x: f64, rho: C, p: &Params) -> Result<C> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    lhs_ferrers_kernel(x, rho, b, a, b + 1.0)
}

fn coeff_jac_ferp(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let one = re(1.0);
    let kf = k as f64;
    let pref = lgs(g + a + 1.0)? * inv_lgs(a + 1.0)?
        * spow(re(2.0), -a * 0.5)
        * spow(one + rho, -(b - g))
        * spow(rho, -(g + 1.0) * 0.5);
    let body = sc(g + a + 2.0 * kf + 1.0) * ps(g + a + 1.0, k) * ps(a + b + 1.0, 2 * k) / ps(a + 1.0, k);
    let pv = ferrers_p_scaled(g - b, -(g + a + 2.0 * kf + 1.0), &rho_interior(rho)?)?;
    Ok(pref * body * pv)
}

fn lhs_jac_withm(x: f64, rho: C, p: &Params) -> Result<C> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    let m = p.get_count("m")? as f64;
    lhs_legendre_kernel(x, rho, a + m, b, a + m + 1.0)
}

fn coeff_jac_withm(n: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    let m = p.get_count("m")? as f64;
    let one = re(1.0);
    let nf = n as f64;
    let pref = spow(rho, -(a + 1.0) * 0.5) * spow(re(2.0), -b * 0.5) * spow(one - rho, re(-m));
    let body = sc(a + b + 2.0 * nf + 1.0) * lgs(a + b + nf + 1.0)? * ps(a + b + m + 1.0, 2 * n) * inv_lgs(b + nf + 1.0)?;
    let pv = assoc_legendre_p_scaled(re(-m), -(a + b + 2.0 * nf + 1.0), &rho_exterior(rho)?)?;
    Ok(pref * body * pv)
}

fn lhs_jac_withm_com(x: f64, rho: C, p: &Params) -> Result<C> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    let m = p.get_count("m")? as f64;
    lhs_ferrers_kernel(x, rho, b + m, a, b + m + 1.0)
}

fn coeff_jac_withm_com(n: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    let m = p.get_count("m")? as f64;
    let one = re(1.0);
    let nf = n as f64;
    let pref = spow(rho, -(b + 1.0) * 0.5) * spow(re(2.0), -a * 0.5) * spow(one + rho, re(-m));
    let body = sc(a + b + 2.0 * nf + 1.0) * lgs(a + b + nf + 1.0)? * ps(a + b + m + 1.0, 2 * n) * inv_lgs(a + nf + 1.0)?;
    let pv = ferrers_p_scaled(re(-m), -(a + b + 2.0 * nf + 1.0), &rho_interior(rho)?)?;
    Ok(pref * body * pv)
}

// Gegenbauer products

fn lhs_geg_prod2f1(x: f64, rho: C, p: &Params) -> Result<C> {
    let (l, mu) = (p.get("lambda"), p.get("mu"));
    let r = radius(x, rho);
    let z1 = -r_minus_one_minus_rho(x, rho, r) * 0.5;
    let z2 = one_plus_rho_minus_r(x, rho, r) * 0.5;
    let c = mu + 0.5;
    Ok(hyp2f1(l, mu * 2.0 - l, c, z1)? * hyp2f1(l, mu * 2.0 - l, c, z2)?)
}

fn coeff_geg_prod2f1(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (l, mu) = (p.get("lambda"), p.get("mu"));
    Ok(ps(l, k) * ps(mu * 2.0 - l, k) / (ps(mu * 2.0, k) * ps(mu + 0.5, k)) * ipow(rho, k))
}

fn lhs_geg_prodleg(x: f64, rho: C, p: &Params) -> Result<C> {
    let (l, mu) = (p.get("lambda"), p.get("mu"));
    legendre_product_kernel(x, rho, l + mu - 0.5, mu)
}

/// `(1-x²)^{1/4-μ/2} P_ν^{1/2-μ}(R+ρ) 𝖯_ν^{1/2-μ}(R-ρ)`.
pub(crate) fn legendre_product_kernel(x: f64, rho: C, degree: C, mu: C) -> Result<C> {
    let r = radius(x, rho);
    let order = re(0.5) - mu;
    let ext = LegendreArg::exterior_with_offset(r + rho, r_minus_one_minus_rho(x, rho, r))?;
    let int = LegendreArg::interior_with_offset(r - rho, one_plus_rho_minus_r(x, rho, r))?;
    let pe = assoc_legendre_p_scaled(degree, order, &ext)?;
    let pi = ferrers_p_scaled(degree, order, &int)?;
    Ok((spow(re((1.0 - x) * (1.0 + x)), re(0.25) - mu * 0.5) * pe * pi).to_c())
}

fn coeff_geg_prodleg(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (l, mu) = (p.get("lambda"), p.get("mu"));
    let pref = spow(rho * 0.5, mu - 0.5) * inv_lgs(mu + 0.5)? * inv_lgs(mu + 0.5)?;
    Ok(pref * ps(-l, k) * ps(mu * 2.0 + l, k) / (ps(mu * 2.0, k) * ps(mu + 0.5, k)) * ipow(rho, k))
}

/// Shared `6F5` body of the two ν-generalized product expansions.
fn geg_6f5_body(n: usize, rho: C, lambda: C, mu: C, nu: C) -> Result<Scaled> {
    let nf = n as f64;
    let lead = sc(nu + nf) * ps(-lambda, n) * ps(mu * 2.0 + lambda, n) * ps(mu, n)
        / (ps(mu * 2.0, n) * ps(mu + 0.5, n) * ps(nu + 1.0, n));
    if lead.is_zero() {
        return Ok(Scaled::ZERO);
    }
    let f = pfq(
        &[
            (nf - lambda) * 0.5,
            (nf - lambda + 1.0) * 0.5,
            (mu * 2.0 + lambda + nf) * 0.5,
            (mu * 2.0 + lambda + nf + 1.0) * 0.5,
            mu + nf,
            mu - nu,
        ],
        &[
            (mu * 2.0 + nf) * 0.5,
            (mu * 2.0 + nf + 1.0) * 0.5,
            (mu + nf + 0.5) * 0.5,
            (mu + nf + 1.5) * 0.5,
            nu + 1.0 + nf,
        ],
        rho * rho,
    )?;
    Ok(lead * sc(f) * ipow(rho, n) / sc(nu))
}

fn coeff_geg_6f5(n: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (l, mu, nu) = (p.get("lambda"), p.get("mu"), p.get("nu"));
    let pref = spow(rho * 0.5, mu - 0.5) * inv_lgs(mu + 0.5)? * inv_lgs(mu + 0.5)?;
    Ok(pref * geg_6f5_body(n, rho, l, mu, nu)?)
}

fn lhs_geg_prodfin(x: f64, rho: C, p: &Params) -> Result<C> {
    let mu = p.get("mu");
    let m = p.get_count("m")?;
    let r = radius(x, rho);
    let gp = GegenbauerParams { mu };
    Ok(gegenbauer_sequence(m, &gp, r + rho)[m] * gegenbauer_sequence(m, &gp, r - rho)[m])
}

fn prodfin_prefactor(m: usize, mu: C) -> Scaled {
    let f = ps(mu * 2.0, m) / ps(re(1.0), m);
    f * f
}

fn coeff_geg_prodfin(n: usize, rho: C, p: &Params) -> Result<Scaled> {
    let mu = p.get("mu");
    let m = p.get_count("m")?;
    if n > m {
        return Ok(Scaled::ZERO);
    }
    let mf = m as f64;
    Ok(prodfin_prefactor(m, mu) * ps(re(-mf), n) * ps(mu * 2.0 + mf, n) / (ps(mu * 2.0, n) * ps(mu + 0.5, n))
        * ipow(rho, n))
}

fn coeff_geg_prodfin_gen(n: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (mu, nu) = (p.get("mu"), p.get("nu"));
    let m = p.get_count("m")?;
    if n > m {
        return Ok(Scaled::ZERO);
    }
    Ok(prodfin_prefactor(m, mu) * geg_6f5_body(n, rho, re(m as f64), mu, nu)?)
}

// Gegenbauer rational kernels

fn lhs_geg_1mrx(x: f64, rho: C, p: &Params) -> Result<C> {
    let nu = p.get("nu");
    Ok((re(1.0) - rho * x) * cpow(radius_sq(x, rho), -(nu + 1.0)))
}

fn lhs_geg_decomp1(x: f64, rho: C, p: &Params) -> Result<C> {
    let nu = p.get("nu");
    let q = radius_sq(x, rho);
    Ok((re(1.0) - rho * rho) * 0.5 * cpow(q, -(nu + 1.0)) + cpow(q, -nu) * 0.5)
}

fn coeff_geg_1mrx(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let nu = p.get("nu");
    Ok(sc((nu * 2.0 + k as f64) / (nu * 2.0)) * ipow(rho, k))
}

fn lhs_geg_xmr(x: f64, rho: C, p: &Params) -> Result<C> {
    let nu = p.get("nu");
    Ok((re(x) - rho) * cpow(radius_sq(x, rho), -(nu + 1.0)))
}

fn lhs_geg_decomp2(x: f64, rho: C, p: &Params) -> Result<C> {
    let nu = p.get("nu");
    let q = radius_sq(x, rho);
    let inv = (rho * 2.0).inv();
    Ok((re(1.0) - rho * rho) * inv * cpow(q, -(nu + 1.0)) - inv * cpow(q, -nu))
}

fn coeff_geg_xmr(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    if k == 0 {
        return Ok(Scaled::ZERO);
    }
    let nu = p.get("nu");
    Ok(sc(re(k as f64) / (nu * 2.0)) * ipow(rho, k - 1))
}

// Gegenbauer and Chebyshev from the Jacobi algebraic kernel

fn lhs_geg_3f2(x: f64, rho: C, p: &Params) -> Result<C> {
    let (a, g) = (p.get("alpha"), p.get("gamma"));
    let r = radius(x, rho);
    let one = re(1.0);
    let v = sc(cpow(re(2.0), a + g - 1.0)) * sc(r).recip() * spow(one + r - rho, -(a - 0.5)) * spow(one + r + rho, -(g - 0.5));
    Ok(v.to_c())
}

fn coeff_geg_3f2(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (a, g) = (p.get("alpha"), p.get("gamma"));
    let kf = k as f64;
    let lead = sc(g + kf) * ps((a + g) * 0.5, k) * ps((a + g + 1.0) * 0.5, k) / (sc(g) * ps(a + g, k) * ps(g + 1.0, k));
    let f = pfq(
        &[g + kf + 0.5, a + g + 2.0 * kf, a - g],
        &[a + g + kf, g * 2.0 + 2.0 * kf + 1.0],
        rho,
    )?;
    Ok(lead * sc(f) * ipow(rho, k))
}

fn lhs_cheb_3f2(x: f64, rho: C, p: &Params) -> Result<C> {
    let a = p.get("alpha");
    let r = radius(x, rho);
    let one = re(1.0);
    Ok((spow(one + r + rho, re(0.5)) * sc(r).recip() * spow(one + r - rho, -(a - 0.5))).to_c())
}

fn coeff_cheb_3f2(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let a = p.get("alpha");
    let kf = k as f64;
    let lead = spow(re(2.0), re(1.0) - a) * sr(neumann_factor(k)) * ps(a * 0.5, k) * ps((a + 1.0) * 0.5, k)
        / (ps(a, k) * ps(re(1.0), k));
    let f = pfq(&[re(kf + 0.5), a + 2.0 * kf, a], &[re(2.0 * kf + 1.0), a + kf], rho)?;
    Ok(lead * sc(f) * ipow(rho, k))
}

// Laguerre

fn lhs_lag_besselj(x: f64, rho: C, p: &Params) -> Result<C> {
    let a = p.get("alpha");
    let arg = (rho * x).sqrt() * 2.0;
    if arg == re(0.0) {
        return Ok(cpow(rho, a * 0.5) * crate::scalar::rgamma(a + 1.0));
    }
    Ok(cpow(re(x), -a * 0.5) * bessel_j(a, arg)?)
}

fn coeff_lag_besselj(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let a = p.get("alpha");
    Ok(spow(rho, a * 0.5) * Scaled::from_ln(-rho) * ipow(rho, k) * inv_lgs(a + 1.0 + k as f64)?)
}

fn coeff_lag_besselj_gen(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (a, b) = (p.get("alpha"), p.get("beta"));
    let kf = k as f64;
    let l = laguerre_function_scaled(b - a, a + kf, rho)?;
    Ok(spow(rho, a * 0.5) * Scaled::from_ln(-rho) * ipow(rho, k) * lgs(b - a + 1.0)? * inv_lgs(b + 1.0 + kf)? * l)
}

fn lhs_lag_exp(x: f64, rho: C, _: &Params) -> Result<C> {
    Ok((-rho * x).exp())
}

fn coeff_lag_exp(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    Ok(spow(re(1.0) + rho, -p.get("alpha")) * ipow(rho, k))
}

fn lhs_lag_exp_inv(x: f64, rho: C, _: &Params) -> Result<C> {
    Ok((rho * x / (rho - 1.0)).exp())
}

fn coeff_lag_exp_inv(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    Ok(spow(re(1.0) - rho, p.get("beta") + 1.0) * ipow(rho, k))
}

fn lhs_lag_kummer(x: f64, rho: C, p: &Params) -> Result<C> {
    let (l, a) = (p.get("lambda"), p.get("alpha"));
    Ok(kummer_m(l, a + 1.0, rho * x / (rho - 1.0))?.value)
}

fn coeff_lag_kummer(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let (l, a, b) = (p.get("lambda"), p.get("alpha"), p.get("beta"));
    let kf = k as f64;
    let f = hyp2f1(l + kf, a - b, a + 1.0 + kf, rho)?;
    Ok(spow(re(1.0) - rho, l) * ps(l, k) / ps(a + 1.0, k) * sc(f) * ipow(rho, k))
}

// Wilson

fn lhs_wil_2f1prod(x: f64, rho: C, p: &Params) -> Result<C> {
    let w = wilson_params(p);
    let ix = C::new(0.0, x);
    let f1 = hyp2f1(w.a + ix, w.b + ix, w.a + w.b, rho)?;
    let f2 = hyp2f1(w.c - ix, w.d - ix, w.c + w.d, rho)?;
    Ok(f1 * f2)
}

fn coeff_wil_2f1prod(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let w = wilson_params(p);
    Ok(ipow(rho, k) / (ps(w.a + w.b, k) * ps(w.c + w.d, k) * ps(re(1.0), k)))
}

fn coeff_wil_gen(k: usize, rho: C, p: &Params) -> Result<Scaled> {
    let WilsonParams { a, b, c, d } = wilson_params(p);
    let h = p.get("h");
    let s = a + b + c + d;
    let t = a + b + c + h;
    let kf = k as f64;
    let lead = ps(s + kf - 1.0, k) / (ps(t + kf - 1.0, k) * ps(a + b, k) * ps(c + d, k) * ps(re(1.0), k));
    let f = pfq(
        &[d - h, s + 2.0 * kf - 1.0, a + c + kf, b + c + kf],
        &[s + kf - 1.0, t + 2.0 * kf, c + d + kf],
        rho,
    )?;
    Ok(lead * sc(f) * ipow(rho, k))
}

// Reductions

fn set(p: &Params, name: &str, v: C) -> Params {
    p.clone().with(name, v)
}

fn collapse_gamma_alpha(p: &Params) -> Params {
    set(p, "gamma", p.get("alpha"))
}

fn collapse_gamma_beta(p: &Params) -> Params {
    set(p, "gamma", p.get("beta"))
}

fn collapse_mu_nu(p: &Params) -> Params {
    set(p, "mu", p.get("nu"))
}

fn collapse_nu_mu(p: &Params) -> Params {
    set(p, "nu", p.get("mu"))
}

fn collapse_beta_alpha(p: &Params) -> Params {
    set(p, "beta", p.get("alpha"))
}

fn collapse_h_d(p: &Params) -> Params {
    set(p, "h", p.get("d"))
}

fn collapse_kummer(p: &Params) -> Params {
    let a = p.get("alpha");
    set(&set(p, "beta", a), "lambda", a + 1.0)
}

fn to_alpha_beta(p: &Params) -> Params {
    let mut out = Params::new(&[("alpha", 0.0), ("beta", 0.0)]);
    out.set("alpha", p.get("alpha"));
    out.set("beta", p.get("beta"));
    out
}

fn to_nu(p: &Params) -> Params {
    Params::new(&[("nu", 0.0)]).with("nu", p.get("nu"))
}

fn to_lambda_mu(p: &Params) -> Params {
    Params::new(&[("lambda", 0.0), ("mu", 0.0)])
        .with("lambda", p.get("lambda"))
        .with("mu", p.get("mu"))
}

fn to_m_mu(p: &Params) -> Params {
    Params::new(&[("m", 0.0), ("mu", 0.0)]).with("m", p.get("m")).with("mu", p.get("mu"))
}

fn to_withm_zero(p: &Params) -> Params {
    to_alpha_beta(p).with_m(0.0)
}

fn to_alpha(p: &Params) -> Params {
    Params::new(&[("alpha", 0.0)]).with("alpha", p.get("alpha"))
}

fn to_wilson_base(p: &Params) -> Params {
    let mut out = Params::new(&[("a", 0.0), ("b", 0.0), ("c", 0.0), ("d", 0.0)]);
    for k in ["a", "b", "c", "d"] {
        out.set(k, p.get(k));
    }
    out
}

fn to_exp_inv(p: &Params) -> Params {
    Params::new(&[("beta", 0.0)]).with("beta", p.get("beta"))
}

/// `P_k^{(α-½,α-½)}` in terms of `C_k^α`, with `α` read from the `gamma` slot.
fn to_symmetric_jacobi(p: &Params) -> Params {
    let g = p.get("gamma");
    Params::new(&[("alpha", 0.0), ("beta", 0.0)])
        .with("alpha", g - 0.5)
        .with("beta", g - 0.5)
}

fn gegenbauer_over_jacobi(k: usize, p: &Params) -> C {
    let g = p.get("gamma");
    pochhammer(g * 2.0, k) / pochhammer(g + 0.5, k)
}

impl Params {
    fn with_m(mut self, m: f64) -> Self {
        self.entries.push(("m", re(m)));
        self
    }
}

#[allow(clippy::too_many_arguments)]
fn entry(
    id: &str,
    family: Family,
    anchor: &'static str,
    defaults: &'static [(&'static str, f64)],
    lhs: super::LhsFn,
    coeff: super::CoeffFn,
    basis: super::BasisFn,
    domain: super::DomainFn,
) -> IdentitySpec {
    let x_range = match family {
        Family::Laguerre => LAG_X,
        Family::Wilson => WIL_X,
        _ => SYM,
    };
    IdentitySpec {
        id: id.into(),
        family,
        anchor,
        tier: Tier::Standard,
        defaults,
        variants: &[],
        x_range,
        complex_rho: true,
        reduction: None,
        mirrored: false,
        lhs,
        coeff,
        basis,
        domain,
    }
}

fn reduce(
    base: &'static str,
    collapse: fn(&Params) -> Params,
    to_base: fn(&Params) -> Params,
) -> Option<Reduction> {
    Some(Reduction {
        base,
        collapse,
        to_base,
        basis_factor: None,
    })
}

const JAC_AB: &[(&str, f64)] = &[("alpha", 1.7), ("beta", 0.3)];
const JAC_ABG: &[(&str, f64)] = &[("alpha", 1.7), ("beta", 0.3), ("gamma", 0.5)];
const JAC_FERP: &[(&str, f64)] = &[("alpha", 0.3), ("beta", 1.7), ("gamma", 0.5)];
const JAC_M: &[(&str, f64)] = &[("alpha", 0.6), ("beta", 0.3), ("m", 1.0)];
const M_VARIANTS: &[(&str, &[f64])] = &[("m", &[0.0, 1.0, 2.0, 3.0])];
const NU: &[(&str, f64)] = &[("nu", 0.7)];
const NU_MU: &[(&str, f64)] = &[("nu", 0.7), ("mu", 1.3)];
const DECOMP: &[(&str, f64)] = &[("nu", 0.7), ("mu", 1.2)];
const LAMBDA_MU: &[(&str, f64)] = &[("lambda", 0.9), ("mu", 1.1)];
const LAMBDA_MU_NU: &[(&str, f64)] = &[("lambda", 0.9), ("mu", 1.1), ("nu", 0.7)];
const M_MU: &[(&str, f64)] = &[("m", 3.0), ("mu", 0.8)];
const M_MU_NU: &[(&str, f64)] = &[("m", 3.0), ("mu", 0.8), ("nu", 1.3)];
const ALPHA_GAMMA: &[(&str, f64)] = &[("alpha", 1.7), ("gamma", 0.8)];
const ALPHA_CHEB: &[(&str, f64)] = &[("alpha", 1.7)];
const LAG_A: &[(&str, f64)] = &[("alpha", 0.6)];
const LAG_AB: &[(&str, f64)] = &[("alpha", 0.6), ("beta", 1.3)];
const LAG_EXP: &[(&str, f64)] = &[("alpha", 0.7)];
const LAG_EXP_INV: &[(&str, f64)] = &[("beta", 0.4)];
const LAG_KUMMER: &[(&str, f64)] = &[("lambda", 0.8), ("alpha", 0.6), ("beta", 1.3)];
const WIL: &[(&str, f64)] = &[("a", 1.0), ("b", 2.0), ("c", 0.5), ("d", 1.3)];
const WIL_H: &[(&str, f64)] = &[("a", 1.0), ("b", 2.0), ("c", 0.5), ("d", 1.3), ("h", 0.7)];

/// The full identity catalogue, companions included.
pub fn registry() -> Vec<IdentitySpec> {
    use Family::*;
    let mut v = Vec::new();

    v.push(entry(
        "GEG-POW",
        Gegenbauer,
        "Gegenbauer generating function (1+ρ²-2ρx)^{-ν} = Σ ρⁿ C_n^ν",
        NU,
        lhs_geg_pow,
        coeff_rho_pow,
        basis_geg_nu,
        dom_disk_closed,
    ));
    let mut s = entry(
        "GEG-POW-GEN",
        Gegenbauer,
        "Gegenbauer generating function re-expanded over C_n^μ with Legendre-Q coefficients",
        NU_MU,
        lhs_geg_pow,
        coeff_geg_pow_gen,
        basis_geg_mu,
        |x, rho, p| dom_disk_closed(x, rho, p).or(off_negative_axis(rho)),
    );
    s.reduction = reduce("GEG-POW", collapse_mu_nu, to_nu);
    v.push(s);

    v.push(entry(
        "JAC-ALG",
        Jacobi,
        "Algebraic Jacobi generating function 2^{α+β}/(R(1+R-ρ)^α(1+R+ρ)^β)",
        JAC_AB,
        lhs_jac_alg,
        coeff_rho_pow,
        basis_jac_ab,
        dom_disk_closed,
    ));
    let mut s = entry(
        "JAC-ALG-GEN",
        Jacobi,
        "Algebraic Jacobi kernel over P_k^{(γ,β)} with 3F2 coefficients",
        JAC_ABG,
        lhs_jac_alg,
        coeff_jac_alg_gen,
        basis_jac_gb,
        dom_disk_closed,
    );
    s.reduction = reduce("JAC-ALG", collapse_gamma_alpha, to_alpha_beta);
    v.push(s);

    v.push(entry(
        "JAC-BESSEL",
        Jacobi,
        "Jacobi generating function with Bessel J and modified Bessel I",
        JAC_AB,
        lhs_jac_bessel,
        coeff_jac_bessel,
        basis_jac_ab,
        dom_disk_open,
    ));
    let mut s = entry(
        "JAC-BESSEL-GEN",
        Jacobi,
        "Bessel J·I Jacobi kernel over P_k^{(γ,β)} with 2F3 coefficients",
        JAC_ABG,
        lhs_jac_bessel,
        coeff_jac_bessel_gen,
        basis_jac_gb,
        dom_disk_open,
    );
    s.reduction = reduce("JAC-BESSEL", collapse_gamma_alpha, to_alpha_beta);
    v.push(s);

    v.push(entry(
        "JAC-2F1",
        Jacobi,
        "Jacobi generating function with a Gauss 2F1 in 2(1+x)ρ/(1+ρ)²",
        JAC_AB,
        lhs_jac_2f1,
        coeff_jac_2f1,
        basis_jac_ab,
        dom_disk_closed,
    ));
    let mut s = entry(
        "JAC-2F1-CONN",
        Jacobi,
        "Gauss 2F1 Jacobi kernel over P_k^{(γ,β)} with 2F1 coefficients",
        JAC_ABG,
        lhs_jac_2f1,
        coeff_jac_2f1_conn,
        basis_jac_gb,
        dom_disk_closed,
    );
    s.reduction = reduce("JAC-2F1", collapse_gamma_alpha, to_alpha_beta);
    v.push(s);

    let mut s = entry(
        "JAC-LEGP",
        Jacobi,
        "Associated Legendre P kernel over P_k^{(γ,β)} with Legendre P coefficients",
        JAC_ABG,
        lhs_jac_legp,
        coeff_jac_legp,
        basis_jac_gb,
        dom_disk_cut,
    );
    s.reduction = reduce("JAC-WITHM", collapse_gamma_alpha, to_withm_zero);
    v.push(s);
    let mut s = entry(
        "JAC-FERP",
        Jacobi,
        "Ferrers P kernel over P_k^{(α,γ)} with Ferrers P coefficients",
        JAC_FERP,
        lhs_jac_ferp,
        coeff_jac_ferp,
        basis_jac_ag,
        dom_real_rho,
    );
    s.complex_rho = false;
    s.reduction = reduce("JAC-WITHM-COM", collapse_gamma_beta, to_withm_zero);
    v.push(s);

    v.push(entry(
        "JAC-ISMAIL",
        Jacobi,
        "Extended Jacobi generating function (1+ρ)/(1-ρ)^{α+β+2} 2F1(…; 2ρ(x-1)/(1-ρ)²)",
        JAC_AB,
        lhs_jac_ismail,
        coeff_jac_ismail,
        basis_jac_ab,
        dom_disk_closed,
    ));

    let mut s = entry(
        "JAC-WITHM",
        Jacobi,
        "Legendre P kernel with integer shift m over P_n^{(α,β)}",
        JAC_M,
        lhs_jac_withm,
        coeff_jac_withm,
        basis_jac_ab,
        dom_with_m,
    );
    s.variants = M_VARIANTS;
    v.push(s);
    let mut s = entry(
        "JAC-WITHM-COM",
        Jacobi,
        "Ferrers P kernel with integer shift m over P_n^{(α,β)}",
        JAC_M,
        lhs_jac_withm_com,
        coeff_jac_withm_com,
        basis_jac_ab,
        dom_with_m_real,
    );
    s.variants = M_VARIANTS;
    s.complex_rho = false;
    v.push(s);

    v.push(entry(
        "GEG-PROD2F1",
        Gegenbauer,
        "Gegenbauer generating function as a product of two Gauss 2F1",
        LAMBDA_MU,
        lhs_geg_prod2f1,
        coeff_geg_prod2f1,
        basis_geg_mu,
        dom_disk_closed,
    ));
    let mut s = entry(
        "GEG-PRODLEG",
        Gegenbauer,
        "Gegenbauer generating function as a Legendre P times Ferrers P product",
        LAMBDA_MU,
        lhs_geg_prodleg,
        coeff_geg_prodleg,
        basis_geg_mu,
        dom_real_rho,
    );
    s.complex_rho = false;
    v.push(s);
    let mut s = entry(
        "GEG-6F5",
        Gegenbauer,
        "Legendre P times Ferrers P product over C_n^ν with 6F5 coefficients in ρ²",
        LAMBDA_MU_NU,
        lhs_geg_prodleg,
        coeff_geg_6f5,
        basis_geg_nu,
        dom_real_rho,
    );
    s.complex_rho = false;
    s.tier = Tier::Extended;
    s.reduction = reduce("GEG-PRODLEG", collapse_nu_mu, to_lambda_mu);
    v.push(s);
    v.push(entry(
        "GEG-PRODFIN",
        Gegenbauer,
        "Finite expansion of C_m^μ(R+ρ) C_m^μ(R-ρ)",
        M_MU,
        lhs_geg_prodfin,
        coeff_geg_prodfin,
        basis_geg_mu,
        dom_prodfin,
    ));
    let mut s = entry(
        "GEG-PRODFIN-GEN",
        Gegenbauer,
        "C_m^μ(R+ρ) C_m^μ(R-ρ) over C_n^ν with terminating 6F5 coefficients",
        M_MU_NU,
        lhs_geg_prodfin,
        coeff_geg_prodfin_gen,
        basis_geg_nu,
        dom_prodfin,
    );
    s.tier = Tier::Extended;
    s.reduction = reduce("GEG-PRODFIN", collapse_nu_mu, to_m_mu);
    v.push(s);

    v.push(entry(
        "GEG-1MRX",
        Gegenbauer,
        "Gegenbauer generating function (1-ρx)/(1+ρ²-2ρx)^{ν+1}",
        NU,
        lhs_geg_1mrx,
        coeff_geg_1mrx,
        basis_geg_nu,
        dom_disk_closed,
    ));
    v.push(entry(
        "GEG-XMR",
        Gegenbauer,
        "Gegenbauer generating function (x-ρ)/(1+ρ²-2ρx)^{ν+1}",
        NU,
        lhs_geg_xmr,
        coeff_geg_xmr,
        basis_geg_nu,
        dom_disk_closed,
    ));
    v.push(entry(
        "GEG-DECOMP-1",
        Gegenbauer,
        "(1-ρx)/(…)^{ν+1} split as (1-ρ²)/2 (…)^{-ν-1} + ½ (…)^{-ν}",
        DECOMP,
        lhs_geg_decomp1,
        coeff_geg_1mrx,
        basis_geg_nu,
        dom_disk_closed,
    ));
    v.push(entry(
        "GEG-DECOMP-2",
        Gegenbauer,
        "(x-ρ)/(…)^{ν+1} split as (1-ρ²)/(2ρ) (…)^{-ν-1} - 1/(2ρ) (…)^{-ν}",
        DECOMP,
        lhs_geg_decomp2,
        coeff_geg_xmr,
        basis_geg_nu,
        |x, rho, p| dom_disk_closed(x, rho, p).or((rho == re(0.0)).then_some("ρ must be nonzero")),
    ));

    let mut s = entry(
        "GEG-3F2",
        Gegenbauer,
        "Algebraic kernel with α,β ↦ α-½,γ-½ over C_k^γ with 3F2 coefficients",
        ALPHA_GAMMA,
        lhs_geg_3f2,
        coeff_geg_3f2,
        basis_geg_gamma,
        dom_disk_closed,
    );
    s.reduction = Some(Reduction {
        base: "JAC-ALG",
        collapse: collapse_gamma_alpha,
        to_base: to_symmetric_jacobi,
        basis_factor: Some(gegenbauer_over_jacobi),
    });
    v.push(s);
    v.push(entry(
        "CHEB-3F2",
        Chebyshev,
        "Limit γ → 0 of the Gegenbauer 3F2 expansion over T_k",
        ALPHA_CHEB,
        lhs_cheb_3f2,
        coeff_cheb_3f2,
        basis_cheb,
        dom_disk_closed,
    ));

    v.push(entry(
        "LAG-BESSELJ",
        Laguerre,
        "Laguerre generating function x^{-α/2} J_α(2√(xρ))",
        LAG_A,
        lhs_lag_besselj,
        coeff_lag_besselj,
        basis_lag_alpha,
        dom_lag_entire,
    ));
    let mut s = entry(
        "LAG-BESSELJ-GEN",
        Laguerre,
        "Bessel J Laguerre kernel over L_k^β with Laguerre-function coefficients",
        LAG_AB,
        lhs_lag_besselj,
        coeff_lag_besselj_gen,
        basis_lag_beta,
        dom_lag_entire,
    );
    s.reduction = reduce("LAG-BESSELJ", collapse_beta_alpha, to_alpha);
    v.push(s);
    v.push(entry(
        "LAG-EXP",
        Laguerre,
        "e^{-xρ} = (1+ρ)^{-α} Σ ρⁿ L_n^{α-n}(x)",
        LAG_EXP,
        lhs_lag_exp,
        coeff_lag_exp,
        basis_lag_shifted,
        dom_lag_disk,
    ));
    v.push(entry(
        "LAG-EXP-INV",
        Laguerre,
        "exp(xρ/(ρ-1)) = (1-ρ)^{β+1} Σ ρⁿ L_n^β(x)",
        LAG_EXP_INV,
        lhs_lag_exp_inv,
        coeff_lag_exp_inv,
        basis_lag_beta,
        dom_lag_disk,
    ));
    let mut s = entry(
        "LAG-KUMMER",
        Laguerre,
        "Kummer M(λ, α+1, xρ/(ρ-1)) over L_k^β with 2F1 coefficients",
        LAG_KUMMER,
        lhs_lag_kummer,
        coeff_lag_kummer,
        basis_lag_beta,
        dom_lag_disk,
    );
    s.reduction = reduce("LAG-EXP-INV", collapse_kummer, to_exp_inv);
    v.push(s);

    let mut s = entry(
        "WIL-2F1PROD",
        Wilson,
        "Wilson generating function as a product of two Gauss 2F1",
        WIL,
        lhs_wil_2f1prod,
        coeff_wil_2f1prod,
        basis_wilson,
        dom_wilson,
    );
    s.tier = Tier::Extended;
    v.push(s);
    let mut s = entry(
        "WIL-GEN",
        Wilson,
        "Two-2F1 Wilson kernel over W_k(x²; a,b,c,h) with 4F3 coefficients",
        WIL_H,
        lhs_wil_2f1prod,
        coeff_wil_gen,
        basis_wilson_h,
        dom_wilson,
    );
    s.tier = Tier::Extended;
    s.reduction = reduce("WIL-2F1PROD", collapse_h_d, to_wilson_base);
    v.push(s);

    // Companions of the two Jacobi identities with a free parameter.
    for id in ["JAC-ALG-GEN", "JAC-BESSEL-GEN"] {
        let pos = v.iter().position(|s| s.id == id).unwrap_or(0);
        if let Ok(c) = companion_transform(&v[pos]) {
            v.insert(pos + 1, c);
        }
    }
    v
}
