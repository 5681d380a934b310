//! One-free-parameter connection coefficients and a quadrature projection
//! oracle for them.

use alloc::vec;
use alloc::vec::Vec;

use crate::poly::{
    gegenbauer_sequence, jacobi_sequence, laguerre_sequence, wilson_w_recurrence, GegenbauerParams,
    JacobiParams, LaguerreParams, WilsonParams,
};
use crate::quadrature::{gauss_rule, integrate_wilson, WeightId};
use crate::scalar::{pochhammer_scaled, re, ComplexScalar, Scaled};
use crate::{Error, Result};

/// A source family and the one-parameter change that defines its target.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ConnectionFamily {
    /// `P_n^{(α,β)}` over `P_k^{(γ,β)}`.
    Jacobi {
        alpha: ComplexScalar,
        beta: ComplexScalar,
        gamma: ComplexScalar,
    },
    /// `C_n^ν` over `C_k^μ`.
    Gegenbauer { nu: ComplexScalar, mu: ComplexScalar },
    /// `L_n^α` over `L_k^β`.
    Laguerre { alpha: ComplexScalar, beta: ComplexScalar },
    /// `W_n(·; a,b,c,d)` over `W_k(·; a,b,c,h)`.
    Wilson { params: WilsonParams, h: ComplexScalar },
}

/// Dense lower-triangular connection table `a[n][k]`, `k <= n <= n_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionCoeffTable {
    pub family: ConnectionFamily,
    pub n_max: usize,
    pub entries: Vec<Vec<ComplexScalar>>,
}

impl ConnectionCoeffTable {
    pub fn build(family: ConnectionFamily, n_max: usize) -> Result<Self> {
        let entries = (0..=n_max).map(|n| connection_row(&family, n)).collect::<Result<Vec<_>>>()?;
        Ok(ConnectionCoeffTable {
            family,
            n_max,
            entries,
        })
    }

    pub fn get(&self, n: usize, k: usize) -> ComplexScalar {
        if k > n || n > self.n_max {
            return re(0.0);
        }
        self.entries[n][k]
    }
}

/// Closed-form row `a[n][0..=n]` for any family.
pub fn connection_row(family: &ConnectionFamily, n: usize) -> Result<Vec<ComplexScalar>> {
    match *family {
        ConnectionFamily::Jacobi { alpha, beta, gamma } => jacobi_connection(n, alpha, beta, gamma),
        ConnectionFamily::Gegenbauer { nu, mu } => gegenbauer_connection(n, nu, mu),
        ConnectionFamily::Laguerre { alpha, beta } => Ok(laguerre_connection(n, alpha, beta)),
        ConnectionFamily::Wilson { params, h } => wilson_connection(n, &params, h),
    }
}

fn finite_row(row: Vec<Scaled>) -> Result<Vec<ComplexScalar>> {
    row.into_iter()
        .map(|s| crate::scalar::check_finite(s.to_c(), "connection coefficient"))
        .collect()
}

fn factorial_scaled(n: usize) -> Scaled {
    pochhammer_scaled(re(1.0), n)
}

/// Coefficients of `P_n^{(α,β)}` over `P_k^{(γ,β)}`.
pub fn jacobi_connection(n: usize, alpha: ComplexScalar, beta: ComplexScalar, gamma: ComplexScalar) -> Result<Vec<ComplexScalar>> {
    let gb1 = gamma + beta + 1.0;
    if gb1.norm() < 1e-14 {
        return Err(Error::Pole {
            what: "jacobi_connection (γ+β+1 = 0)",
            at: gb1.re,
        });
    }
    let lead = pochhammer_scaled(beta + 1.0, n) / (Scaled::from_c(gb1) * pochhammer_scaled(gb1 + 1.0, n));
    let nf = n as f64;
    let mut row = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let kf = k as f64;
        let num = Scaled::from_c(gb1 + 2.0 * kf)
            * pochhammer_scaled(gb1, k)
            * pochhammer_scaled(alpha + beta + nf + 1.0, k)
            * pochhammer_scaled(alpha - gamma, n - k);
        let den = pochhammer_scaled(beta + 1.0, k) * pochhammer_scaled(gb1 + nf + 1.0, k) * factorial_scaled(n - k);
        if den.is_zero() {
            return Err(Error::Pole {
                what: "jacobi_connection denominator",
                at: kf,
            });
        }
        row.push(lead * num / den);
    }
    finite_row(row)
}

/// Coefficients of `C_n^ν` over `C_k^μ`, dense in `k`; entries with `n-k`
/// odd are zero.
pub fn gegenbauer_connection(n: usize, nu: ComplexScalar, mu: ComplexScalar) -> Result<Vec<ComplexScalar>> {
    if mu.norm() < 1e-14 {
        return Err(Error::Pole {
            what: "gegenbauer_connection (μ = 0)",
            at: 0.0,
        });
    }
    let mut row = vec![Scaled::ZERO; n + 1];
    for j in 0..=n / 2 {
        let k = n - 2 * j;
        let num = Scaled::from_c(mu + k as f64) * pochhammer_scaled(nu - mu, j) * pochhammer_scaled(nu, n - j);
        let den = Scaled::from_c(mu) * factorial_scaled(j) * pochhammer_scaled(mu + 1.0, n - j);
        if den.is_zero() {
            return Err(Error::Pole {
                what: "gegenbauer_connection denominator",
                at: j as f64,
            });
        }
        row[k] = num / den;
    }
    finite_row(row)
}

/// Coefficients `(α-β)_{n-k}/(n-k)!` of `L_n^α` over `L_k^β`.
pub fn laguerre_connection(n: usize, alpha: ComplexScalar, beta: ComplexScalar) -> Vec<ComplexScalar> {
    let d = alpha - beta;
    let mut tail = Vec::with_capacity(n + 1);
    let mut t = re(1.0);
    tail.push(t);
    for m in 1..=n {
        t = t * (d + (m as f64 - 1.0)) / m as f64;
        tail.push(t);
    }
    (0..=n).map(|k| tail[n - k]).collect()
}

/// Wilson connection coefficients as [`Scaled`] values.
pub fn wilson_connection_scaled(n: usize, p: &WilsonParams, h: ComplexScalar) -> Result<Vec<Scaled>> {
    let WilsonParams { a, b, c, d } = *p;
    let s = a + b + c + d;
    let t = a + b + c + h;
    let nf = n as f64;
    let mut row = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let kf = k as f64;
        let m = n - k;
        let num = factorial_scaled(n)
            * pochhammer_scaled(s + nf - 1.0, k)
            * pochhammer_scaled(d - h, m)
            * pochhammer_scaled(a + b + kf, m)
            * pochhammer_scaled(a + c + kf, m)
            * pochhammer_scaled(b + c + kf, m);
        let den = factorial_scaled(k)
            * factorial_scaled(m)
            * pochhammer_scaled(t + kf - 1.0, k)
            * pochhammer_scaled(t + 2.0 * kf, m);
        if den.is_zero() {
            return Err(Error::Pole {
                what: "wilson_connection denominator",
                at: kf,
            });
        }
        row.push(num / den);
    }
    Ok(row)
}

pub fn wilson_connection(n: usize, p: &WilsonParams, h: ComplexScalar) -> Result<Vec<ComplexScalar>> {
    finite_row(wilson_connection_scaled(n, p, h)?)
}

fn real_param(z: ComplexScalar) -> Result<f64> {
    if z.im != 0.0 {
        return Err(Error::Parameter("projection oracle needs real parameters"));
    }
    Ok(z.re)
}

/// Projection `a[n][k] = ∫ p_n^{src} p_k^{tgt} w / ∫ (p_k^{tgt})² w` with the
/// target weight, by quadrature.
pub fn projection_oracle(family: &ConnectionFamily, n: usize) -> Result<Vec<ComplexScalar>> {
    let order = n + 10;
    match *family {
        ConnectionFamily::Jacobi { alpha, beta, gamma } => {
            let w = WeightId::Jacobi {
                alpha: real_param(gamma)?,
                beta: real_param(beta)?,
            };
            let rule = gauss_rule(w, order)?;
            let src = JacobiParams { alpha, beta };
            let tgt = JacobiParams { alpha: gamma, beta };
            project(&rule, n, |x| {
                (jacobi_sequence(n, &src, re(x))[n], jacobi_sequence(n, &tgt, re(x)))
            })
        }
        ConnectionFamily::Gegenbauer { nu, mu } => {
            let rule = gauss_rule(WeightId::Gegenbauer { mu: real_param(mu)? }, order)?;
            let src = GegenbauerParams { mu: nu };
            let tgt = GegenbauerParams { mu };
            project(&rule, n, |x| {
                (gegenbauer_sequence(n, &src, re(x))[n], gegenbauer_sequence(n, &tgt, re(x)))
            })
        }
        ConnectionFamily::Laguerre { alpha, beta } => {
            let rule = gauss_rule(WeightId::Laguerre { alpha: real_param(beta)? }, order)?;
            let src = LaguerreParams { alpha };
            let tgt = LaguerreParams { alpha: beta };
            project(&rule, n, |x| {
                (laguerre_sequence(n, &src, re(x))[n], laguerre_sequence(n, &tgt, re(x)))
            })
        }
        ConnectionFamily::Wilson { params, h } => {
            params.check_orthogonal()?;
            let tgt = params.with_d(h);
            tgt.check_orthogonal()?;
            let wp = [params.a, params.b, params.c, h];
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let num = integrate_wilson(
                    |x| wilson_w_recurrence(n, &params, re(x)) * wilson_w_recurrence(k, &tgt, re(x)),
                    wp,
                    1e-13,
                )?;
                let den = integrate_wilson(
                    |x| {
                        let v = wilson_w_recurrence(k, &tgt, re(x));
                        v * v
                    },
                    wp,
                    1e-13,
                )?;
                row.push(num / den);
            }
            Ok(row)
        }
    }
}

fn project<F>(rule: &crate::quadrature::QuadratureRule, n: usize, mut eval: F) -> Result<Vec<ComplexScalar>>
where
    F: FnMut(f64) -> (ComplexScalar, Vec<ComplexScalar>),
{
    let mut num = vec![re(0.0); n + 1];
    let mut den = vec![0.0; n + 1];
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        let (src, tgt) = eval(*x);
        for k in 0..=n {
            num[k] += src * tgt[k] * *w;
            den[k] += tgt[k].norm_sqr() * w;
        }
    }
    Ok(num.iter().zip(&den).map(|(a, b)| *a / *b).collect())
}

/// One side-by-side evaluation of a Pochhammer bound used for the Wilson
/// connection estimates, in log form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundCheck {
    pub lhs_ln: f64,
    pub rhs_ln: f64,
    /// Whether `lhs_ln` sits on the required side of `rhs_ln`.
    pub holds: bool,
}

const BOUND_SLACK: f64 = 1e-12;

fn ln_fact(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

fn ln_abs_poch(z: ComplexScalar, n: usize) -> f64 {
    (0..n).map(|i| (z + i as f64).norm().ln()).sum()
}

fn at_most(lhs_ln: f64, rhs_ln: f64) -> BoundCheck {
    BoundCheck {
        lhs_ln,
        rhs_ln,
        holds: lhs_ln <= rhs_ln + BOUND_SLACK * rhs_ln.abs().max(1.0),
    }
}

fn at_least(lhs_ln: f64, rhs_ln: f64) -> BoundCheck {
    BoundCheck {
        lhs_ln,
        rhs_ln,
        holds: lhs_ln >= rhs_ln - BOUND_SLACK * rhs_ln.abs().max(1.0),
    }
}

/// `|(u)_j| ≥ (Re u)(j-1)!` for `Re u > 0`, `j ≥ 1`.
pub fn poch_modulus_lower(u: ComplexScalar, j: usize) -> BoundCheck {
    at_least(ln_abs_poch(u, j), u.re.ln() + ln_fact(j.saturating_sub(1)))
}

/// `(v)_n / n! ≤ (1+n)^v` for `v ≥ 0`.
pub fn poch_factorial_ratio_upper(v: f64, n: usize) -> BoundCheck {
    at_most(ln_abs_poch(re(v), n) - ln_fact(n), v * (1.0 + n as f64).ln())
}

/// `(n+w)_k ≤ max{1, 2^w} (n+k)!/n!` for `w > -1`, `k ≤ n`.
pub fn shifted_poch_upper(w: f64, n: usize, k: usize) -> BoundCheck {
    let lhs = ln_abs_poch(re(n as f64 + w), k);
    at_most(lhs, (w * 2f64.ln()).max(0.0) + ln_fact(n + k) - ln_fact(n))
}

/// `|(k+z)_{n-k}| ≤ (1+n)^{|z|} n!/k!` for `k ≤ n`.
pub fn complex_poch_upper(z: ComplexScalar, n: usize, k: usize) -> BoundCheck {
    let lhs = ln_abs_poch(z + k as f64, n - k);
    at_most(lhs, z.norm() * (1.0 + n as f64).ln() + ln_fact(n) - ln_fact(k))
}

/// `(k+x-1)_k ≥ min{x/2, 1/6} (2k)!/k!` for `x > 0`.
pub fn double_poch_lower(x: f64, k: usize) -> BoundCheck {
    let lhs = ln_abs_poch(re(k as f64 + x - 1.0), k);
    at_least(lhs, (x / 2.0).min(1.0 / 6.0).ln() + ln_fact(2 * k) - ln_fact(k))
}

/// `(2k+x)_{n-k} ≥ min{x, 1} (n+k)! / ((1+n)(2k)!)` for `x > 0`, `k ≤ n`.
pub fn tail_poch_lower(x: f64, n: usize, k: usize) -> BoundCheck {
    let lhs = ln_abs_poch(re(2.0 * k as f64 + x), n - k);
    let rhs = x.min(1.0).ln() - (1.0 + n as f64).ln() + ln_fact(n + k) - ln_fact(2 * k);
    at_least(lhs, rhs)
}
