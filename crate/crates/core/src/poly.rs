//! Classical and hypergeometric orthogonal polynomial families.
//!
//! Every family has a hypergeometric route that follows the defining
//! terminating series and a recurrence route; the `*_sequence` functions
//! return all degrees `0..=n` from the recurrence and are what the expansion
//! engine uses.

use alloc::vec::Vec;

use crate::scalar::{
    is_nonpositive_integer, kummer_m, log_gamma, phyper, pochhammer, re, ComplexScalar, Scaled,
    TruncationControl,
};
use crate::scalar::dd::{terminating_sum, Dd};
use crate::{Error, Result};

/// Jacobi parameters `(α, β)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiParams {
    pub alpha: ComplexScalar,
    pub beta: ComplexScalar,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64) -> Self {
        JacobiParams {
            alpha: re(alpha),
            beta: re(beta),
        }
    }

    /// Checks the orthogonality range: real `α, β > -1`, and
    /// `α+β+1 ≠ 0` when both lie in `(-1, 0)`.
    pub fn check_orthogonal(&self) -> Result<()> {
        let (a, b) = (self.alpha, self.beta);
        if a.im != 0.0 || b.im != 0.0 || a.re <= -1.0 || b.re <= -1.0 {
            return Err(Error::Parameter("Jacobi weight needs real α, β > -1"));
        }
        if a.re < 0.0 && b.re < 0.0 && (a.re + b.re + 1.0).abs() < 1e-12 {
            return Err(Error::Parameter("Jacobi weight with α+β+1 = 0 in (-1,0)²"));
        }
        Ok(())
    }
}

/// Gegenbauer parameter `μ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GegenbauerParams {
    pub mu: ComplexScalar,
}

impl GegenbauerParams {
    pub fn new(mu: f64) -> Self {
        GegenbauerParams { mu: re(mu) }
    }

    pub fn check_orthogonal(&self) -> Result<()> {
        let m = self.mu;
        if m.im != 0.0 || m.re <= -0.5 || m.re == 0.0 {
            return Err(Error::Parameter("Gegenbauer weight needs real μ in (-1/2, ∞) minus 0"));
        }
        Ok(())
    }
}

/// Laguerre parameter `α`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LaguerreParams {
    pub alpha: ComplexScalar,
}

impl LaguerreParams {
    pub fn new(alpha: f64) -> Self {
        LaguerreParams { alpha: re(alpha) }
    }

    pub fn check_orthogonal(&self) -> Result<()> {
        if self.alpha.im != 0.0 || self.alpha.re <= -1.0 {
            return Err(Error::Parameter("Laguerre weight needs real α > -1"));
        }
        Ok(())
    }
}

/// Wilson parameters `(a, b, c, d)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WilsonParams {
    pub a: ComplexScalar,
    pub b: ComplexScalar,
    pub c: ComplexScalar,
    pub d: ComplexScalar,
}

impl WilsonParams {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        WilsonParams {
            a: re(a),
            b: re(b),
            c: re(c),
            d: re(d),
        }
    }

    pub fn with_d(&self, d: ComplexScalar) -> Self {
        WilsonParams { d, ..*self }
    }

    pub fn as_array(&self) -> [ComplexScalar; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Positive real parts, with non-real parameters in conjugate pairs.
    pub fn check_orthogonal(&self) -> Result<()> {
        let ps = self.as_array();
        if ps.iter().any(|p| p.re <= 0.0) {
            return Err(Error::Parameter("Wilson weight needs positive real parts"));
        }
        let mut used = [false; 4];
        for i in 0..4 {
            if ps[i].im == 0.0 || used[i] {
                continue;
            }
            let partner = (0..4).find(|&j| {
                j != i && !used[j] && (ps[j] - ps[i].conj()).norm() <= 1e-14 * ps[i].norm()
            });
            match partner {
                Some(j) => {
                    used[i] = true;
                    used[j] = true;
                }
                None => {
                    return Err(Error::Parameter(
                        "Wilson weight needs non-real parameters in conjugate pairs",
                    ))
                }
            }
        }
        Ok(())
    }
}

/// Neumann factor: 1 for `n = 0`, 2 otherwise.
pub fn neumann_factor(n: usize) -> f64 {
    if n == 0 {
        1.0
    } else {
        2.0
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Terminating series with a leading `-n` numerator parameter. Real data is
/// summed in double-double, since the alternating terms can exceed the sum
/// by many orders of magnitude.
fn terminating(num: &[ComplexScalar], den: &[ComplexScalar], z: ComplexScalar) -> Result<ComplexScalar> {
    let all_real = num.iter().chain(den).all(|v| v.im == 0.0) && z.im == 0.0;
    let n = -num[0].re;
    if all_real && n >= 0.0 && n == n.round() && den.iter().all(|d| d.re > 0.0 || d.re != d.re.round()) {
        let zz = Dd::new(z.re);
        let v = terminating_sum(n as usize, |j| {
            let jf = j as f64;
            let top = num.iter().fold(zz, |acc, p| acc * (Dd::new(p.re) + Dd::new(jf)));
            let bottom = den.iter().fold(Dd::new(jf + 1.0), |acc, q| acc * (Dd::new(q.re) + Dd::new(jf)));
            (top, bottom)
        });
        return Ok(re(v));
    }
    Ok(phyper(num, den, z, &TruncationControl::default())?.value)
}

/// `P_n^{(α,β)}(x)` through its terminating Gauss series.
pub fn jacobi_p(n: usize, p: &JacobiParams, x: ComplexScalar) -> Result<ComplexScalar> {
    let (a, b) = (p.alpha, p.beta);
    let nf = n as f64;
    let f = terminating(&[re(-nf), a + b + nf + 1.0], &[a + 1.0], (re(1.0) - x) * 0.5)?;
    Ok(pochhammer(a + 1.0, n) / factorial(n) * f)
}

/// `P_k^{(α,β)}(x)` for `k = 0..=n` by the three-term recurrence.
pub fn jacobi_sequence(n: usize, p: &JacobiParams, x: ComplexScalar) -> Vec<ComplexScalar> {
    let (a, b) = (p.alpha, p.beta);
    let mut out = Vec::with_capacity(n + 1);
    out.push(re(1.0));
    if n == 0 {
        return out;
    }
    out.push(a + 1.0 + (a + b + 2.0) * (x - 1.0) * 0.5);
    let ab2 = a * a - b * b;
    for k in 2..=n {
        let kf = k as f64;
        let s = a + b + 2.0 * kf;
        let c1 = (a + b + kf) * (s - 2.0) * (2.0 * kf);
        let c2 = (s - 1.0) * ab2;
        let c3 = (s - 2.0) * (s - 1.0) * s;
        let c4 = (a + kf - 1.0) * (b + kf - 1.0) * s * 2.0;
        let v = ((c2 + c3 * x) * out[k - 1] - c4 * out[k - 2]) / c1;
        out.push(v);
    }
    out
}

pub fn jacobi_p_recurrence(n: usize, p: &JacobiParams, x: ComplexScalar) -> ComplexScalar {
    jacobi_sequence(n, p, x)[n]
}

/// `C_n^μ(x)` through its terminating Gauss series.
pub fn gegenbauer_c(n: usize, p: &GegenbauerParams, x: ComplexScalar) -> Result<ComplexScalar> {
    let mu = p.mu;
    let nf = n as f64;
    let f = terminating(&[re(-nf), mu * 2.0 + nf], &[mu + 0.5], (re(1.0) - x) * 0.5)?;
    Ok(pochhammer(mu * 2.0, n) / factorial(n) * f)
}

pub fn gegenbauer_sequence(n: usize, p: &GegenbauerParams, x: ComplexScalar) -> Vec<ComplexScalar> {
    let mu = p.mu;
    let mut out = Vec::with_capacity(n + 1);
    out.push(re(1.0));
    if n == 0 {
        return out;
    }
    out.push(mu * x * 2.0);
    for k in 2..=n {
        let kf = k as f64;
        let v = (x * (mu + kf - 1.0) * 2.0 * out[k - 1] - (mu * 2.0 + kf - 2.0) * out[k - 2]) / kf;
        out.push(v);
    }
    out
}

pub fn gegenbauer_c_recurrence(n: usize, p: &GegenbauerParams, x: ComplexScalar) -> ComplexScalar {
    gegenbauer_sequence(n, p, x)[n]
}

/// `T_n(x)`: `cos(n arccos x)` for real `x` in `[-1, 1]`, recurrence elsewhere.
pub fn chebyshev_t(n: usize, x: ComplexScalar) -> ComplexScalar {
    if x.im == 0.0 && x.re.abs() <= 1.0 {
        return re((n as f64 * x.re.acos()).cos());
    }
    chebyshev_t_recurrence(n, x)
}

pub fn chebyshev_t_sequence(n: usize, x: ComplexScalar) -> Vec<ComplexScalar> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(re(1.0));
    if n >= 1 {
        out.push(x);
    }
    for k in 2..=n {
        let v = x * 2.0 * out[k - 1] - out[k - 2];
        out.push(v);
    }
    out
}

pub fn chebyshev_t_recurrence(n: usize, x: ComplexScalar) -> ComplexScalar {
    chebyshev_t_sequence(n, x)[n]
}

/// `U_n(x) = C_n^1(x)`.
pub fn chebyshev_u(n: usize, x: ComplexScalar) -> ComplexScalar {
    let (mut prev, mut cur) = (re(1.0), x * 2.0);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = x * 2.0 * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Legendre polynomial `P_n(x) = C_n^{1/2}(x)`.
pub fn legendre_poly(n: usize, x: ComplexScalar) -> ComplexScalar {
    let (mut prev, mut cur) = (re(1.0), x);
    if n == 0 {
        return prev;
    }
    for k in 2..=n {
        let kf = k as f64;
        let next = (x * (2.0 * kf - 1.0) * cur - prev * (kf - 1.0)) / kf;
        prev = cur;
        cur = next;
    }
    cur
}

/// `L_n^α(x)` through Kummer's function.
pub fn laguerre_l(n: usize, p: &LaguerreParams, x: ComplexScalar) -> Result<ComplexScalar> {
    let a = p.alpha;
    let m = terminating(&[re(-(n as f64))], &[a + 1.0], x)?;
    Ok(pochhammer(a + 1.0, n) / factorial(n) * m)
}

pub fn laguerre_sequence(n: usize, p: &LaguerreParams, x: ComplexScalar) -> Vec<ComplexScalar> {
    let a = p.alpha;
    let mut out = Vec::with_capacity(n + 1);
    out.push(re(1.0));
    if n == 0 {
        return out;
    }
    out.push(a + 1.0 - x);
    for k in 2..=n {
        let kf = k as f64;
        let v = ((a - x + 2.0 * kf - 1.0) * out[k - 1] - (a + kf - 1.0) * out[k - 2]) / kf;
        out.push(v);
    }
    out
}

pub fn laguerre_l_recurrence(n: usize, p: &LaguerreParams, x: ComplexScalar) -> ComplexScalar {
    laguerre_sequence(n, p, x)[n]
}

/// `L_k^{α-k}(x)` for `k = 0..=n`, the coefficients of `(1+ρ)^α e^{-xρ}`.
pub fn laguerre_shifted_sequence(n: usize, alpha: ComplexScalar, x: ComplexScalar) -> Vec<ComplexScalar> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(re(1.0));
    if n == 0 {
        return out;
    }
    out.push(alpha - x);
    for k in 1..n {
        let kf = k as f64;
        let v = ((alpha - x - kf) * out[k] - x * out[k - 1]) / (kf + 1.0);
        out.push(v);
    }
    out
}

/// `L_n^{α-n}(x) = Σ_j binom(α, n-j) (-x)^j / j!`, a direct convolution.
pub fn laguerre_shifted_explicit(n: usize, alpha: ComplexScalar, x: ComplexScalar) -> ComplexScalar {
    // binom(α, m) and (-x)^j/j! built incrementally
    let mut binom = Vec::with_capacity(n + 1);
    binom.push(re(1.0));
    for m in 1..=n {
        let prev = binom[m - 1];
        binom.push(prev * (alpha - (m as f64 - 1.0)) / m as f64);
    }
    let mut sum = re(0.0);
    let mut pw = re(1.0);
    for j in 0..=n {
        if j > 0 {
            pw = pw * (-x) / j as f64;
        }
        sum += binom[n - j] * pw;
    }
    sum
}

/// Laguerre function `L_ν^α(z) = Γ(1+ν+α)/(Γ(ν+1)Γ(α+1)) M(-ν, α+1, z)` as a
/// [`Scaled`] value.
pub fn laguerre_function_scaled(nu: ComplexScalar, alpha: ComplexScalar, z: ComplexScalar) -> Result<Scaled> {
    if is_nonpositive_integer(nu + 1.0) {
        return Ok(Scaled::ZERO);
    }
    let lg = log_gamma(nu + alpha + 1.0)? - log_gamma(nu + 1.0)? - log_gamma(alpha + 1.0)?;
    let m = kummer_m(-nu, alpha + 1.0, z)?;
    Ok(Scaled::from_ln(lg) * Scaled::from_c(m.value))
}

pub fn laguerre_function(nu: ComplexScalar, alpha: ComplexScalar, z: ComplexScalar) -> Result<ComplexScalar> {
    let v = laguerre_function_scaled(nu, alpha, z)?.to_c();
    crate::scalar::check_finite(v, "laguerre_function")
}

/// `W_n(x²; a, b, c, d)` through its terminating `4F3` at unit argument.
pub fn wilson_w(n: usize, p: &WilsonParams, x: ComplexScalar) -> Result<ComplexScalar> {
    let WilsonParams { a, b, c, d } = *p;
    let nf = n as f64;
    let ix = ComplexScalar::i() * x;
    let real = [a, b, c, d].iter().all(|v| v.im == 0.0) && x.im == 0.0;
    if real {
        // (a+ix)_j (a-ix)_j = Π ((a+l)² + x²)
        let (a, b, c, d, x) = (a.re, b.re, c.re, d.re, x.re);
        let (da, db, dc, dd) = (Dd::new(a), Dd::new(b), Dd::new(c), Dd::new(d));
        let s = da + db + dc + dd;
        let f = terminating_sum(n, |j| {
            let jf = Dd::new(j as f64);
            let al = da + jf;
            let xx = Dd::new(x);
            let top = Dd::new(j as f64 - nf) * (s + Dd::new(nf - 1.0) + jf) * (al * al + xx * xx);
            let bottom = (da + db + jf) * (da + dc + jf) * (da + dd + jf) * (jf + Dd::ONE);
            (top, bottom)
        });
        let lead = pochhammer(re(a + b), n) * pochhammer(re(a + c), n) * pochhammer(re(a + d), n);
        return Ok(lead * f);
    }
    let f = terminating(
        &[re(-nf), a + b + c + d + nf - 1.0, a + ix, a - ix],
        &[a + b, a + c, a + d],
        re(1.0),
    )?;
    Ok(pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n) * f)
}

/// `W_k / ((a+b)_k (a+c)_k (a+d)_k)` for `k = 0..=n` by the three-term
/// recurrence in the degree.
pub fn wilson_normalized_sequence(n: usize, p: &WilsonParams, x: ComplexScalar) -> Vec<ComplexScalar> {
    let WilsonParams { a, b, c, d } = *p;
    let s = a + b + c + d;
    let lam = -(a * a + x * x);
    let mut out = Vec::with_capacity(n + 1);
    out.push(re(1.0));
    if n == 0 {
        return out;
    }
    let a0 = (a + b) * (a + c) * (a + d) / s;
    out.push((a0 + lam) / a0);
    for k in 1..n {
        let kf = k as f64;
        let ak = (s + kf - 1.0) * (a + b + kf) * (a + c + kf) * (a + d + kf)
            / ((s + 2.0 * kf - 1.0) * (s + 2.0 * kf));
        let ck = (b + c + kf - 1.0) * (b + d + kf - 1.0) * (c + d + kf - 1.0) * kf
            / ((s + 2.0 * kf - 2.0) * (s + 2.0 * kf - 1.0));
        let v = ((ak + ck + lam) * out[k] - ck * out[k - 1]) / ak;
        out.push(v);
    }
    out
}

pub fn wilson_w_recurrence(n: usize, p: &WilsonParams, x: ComplexScalar) -> ComplexScalar {
    let WilsonParams { a, b, c, d } = *p;
    wilson_normalized_sequence(n, p, x)[n] * pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: ComplexScalar, b: ComplexScalar, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn jacobi_examples() {
        let p = JacobiParams::new(0.3, 0.7);
        let at_one = jacobi_p(4, &p, re(1.0)).unwrap();
        assert!(close(at_one, pochhammer(re(1.3), 4) / 24.0, 1e-15));
        assert_eq!(jacobi_p(0, &p, re(0.2)).unwrap(), re(1.0));
        // P_3 via hand-rolled recurrence from P_0, P_1
        let (a, b, x) = (0.3, 0.7, 0.1);
        let mut pm = 1.0;
        let mut pc = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
        for n in 2..=3 {
            let n = n as f64;
            let c = 2.0 * n + a + b;
            let next = ((c - 1.0) * (c * (c - 2.0) * x + a * a - b * b) * pc
                - 2.0 * (n + a - 1.0) * (n + b - 1.0) * c * pm)
                / (2.0 * n * (n + a + b) * (c - 2.0));
            pm = pc;
            pc = next;
        }
        assert!(close(jacobi_p(3, &p, re(x)).unwrap(), re(pc), 1e-14));
    }

    #[test]
    fn gegenbauer_and_chebyshev_examples() {
        let g = GegenbauerParams::new(1.5);
        assert!(close(gegenbauer_c(3, &g, re(1.0)).unwrap(), pochhammer(re(3.0), 3) / 6.0, 1e-15));
        let g = GegenbauerParams::new(0.8);
        assert!(close(gegenbauer_c(1, &g, re(0.4)).unwrap(), re(0.64), 1e-15));
        assert!(close(chebyshev_t(3, re(0.5)), re(-1.0), 1e-15));
        assert_eq!(chebyshev_t(0, re(0.3)), re(1.0));
        assert!(close(chebyshev_u(5, re(1.0)), re(6.0), 1e-15));
        assert!(close(legendre_poly(2, re(0.6)), re(0.04), 1e-15));
        let one = GegenbauerParams::new(1.0);
        assert!(close(chebyshev_u(4, re(0.25)), gegenbauer_c(4, &one, re(0.25)).unwrap(), 1e-14));
    }

    #[test]
    fn chebyshev_small_mu_limit() {
        let mu = 1e-6;
        let n = 4;
        let c = gegenbauer_c_recurrence(n, &GegenbauerParams::new(mu), re(0.3));
        let t = c * ((n as f64 + mu) / mu) / neumann_factor(n);
        assert!((t - chebyshev_t(n, re(0.3))).norm() < 1e-5);
    }

    #[test]
    fn laguerre_examples() {
        let p = LaguerreParams::new(0.5);
        assert_eq!(laguerre_l(0, &p, re(2.0)).unwrap(), re(1.0));
        assert!(close(laguerre_l(1, &p, re(2.0)).unwrap(), re(-0.5), 1e-15));
        let l2 = laguerre_l(2, &p, re(1.1)).unwrap();
        let lf = laguerre_function(re(2.0), re(0.5), re(1.1)).unwrap();
        assert!(close(lf, l2, 1e-13));
        let shifted = laguerre_shifted_sequence(30, re(0.7), re(2.5));
        for (n, v) in shifted.iter().enumerate() {
            let e = laguerre_shifted_explicit(n, re(0.7), re(2.5));
            assert!(close(*v, e, 1e-11), "n={n}");
        }
    }

    #[test]
    fn wilson_examples() {
        let p = WilsonParams::new(1.0, 2.0, 0.5, 1.3);
        assert_eq!(wilson_w(0, &p, re(0.4)).unwrap(), re(1.0));
        let x: f64 = 0.4;
        let w1 = (1.0 + 2.0) * (1.0 + 0.5) * (1.0 + 1.3) - 4.8 * (1.0 + x * x);
        assert!(close(wilson_w(1, &p, re(x)).unwrap(), re(w1), 1e-14));
        assert!(close(wilson_w_recurrence(1, &p, re(x)), re(w1), 1e-14));
        let swapped = WilsonParams::new(2.0, 1.0, 0.5, 1.3);
        let w3 = wilson_w(3, &p, re(1.1)).unwrap();
        assert!(close(wilson_w(3, &swapped, re(1.1)).unwrap(), w3, 1e-12));
    }

    #[test]
    fn wilson_parameter_checks() {
        let conj = WilsonParams {
            a: ComplexScalar::new(0.5, 0.3),
            b: ComplexScalar::new(0.5, -0.3),
            c: re(1.0),
            d: re(2.0),
        };
        assert!(conj.check_orthogonal().is_ok());
        let lonely = conj.with_d(ComplexScalar::new(1.0, 0.2));
        assert!(lonely.check_orthogonal().is_err());
    }
}
