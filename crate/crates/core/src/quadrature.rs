//! Gaussian quadrature for the classical weights and panelled integration
//! against the Wilson weight.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::scalar::{log_gamma, re, ComplexScalar, Scaled};
use crate::{Error, Result};

/// Orthogonality weight identifiers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum WeightId {
    /// `(1-x)^α (1+x)^β` on `[-1, 1]`.
    Jacobi { alpha: f64, beta: f64 },
    /// `(1-x²)^{μ-1/2}` on `[-1, 1]`.
    Gegenbauer { mu: f64 },
    /// `(1-x²)^{-1/2}` on `[-1, 1]`.
    ChebyshevT,
    /// `x^α e^{-x}` on `[0, ∞)`.
    Laguerre { alpha: f64 },
    /// `|Γ(a+ix)Γ(b+ix)Γ(c+ix)Γ(h+ix)/Γ(2ix)|²` on `[0, ∞)`.
    Wilson {
        a: ComplexScalar,
        b: ComplexScalar,
        c: ComplexScalar,
        h: ComplexScalar,
    },
    /// Unit weight on `[-1, 1]`.
    Legendre,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Interval {
    Symmetric,
    HalfLine,
    Finite { lo: f64, hi: f64 },
}

/// Nodes and weights of a quadrature rule.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub interval: Interval,
    pub weight_id: WeightId,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(*x)).sum()
    }

    pub fn integrate_c<F: FnMut(f64) -> ComplexScalar>(&self, mut f: F) -> ComplexScalar {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(re(0.0), |acc, (x, w)| acc + f(*x) * *w)
    }
}

impl WeightId {
    pub fn check(&self) -> Result<()> {
        let ok = match *self {
            WeightId::Jacobi { alpha, beta } => {
                alpha > -1.0 && beta > -1.0 && alpha.is_finite() && beta.is_finite()
            }
            WeightId::Gegenbauer { mu } => mu > -0.5 && mu.is_finite(),
            WeightId::Laguerre { alpha } => alpha > -1.0 && alpha.is_finite(),
            WeightId::Wilson { a, b, c, h } => [a, b, c, h].iter().all(|p| p.re > 0.0),
            WeightId::ChebyshevT | WeightId::Legendre => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Parameter("weight parameters outside the orthogonality range"))
        }
    }

    /// Total mass `∫ w`.
    pub fn moment0(&self) -> Result<f64> {
        self.check()?;
        Ok(match *self {
            WeightId::Jacobi { alpha, beta } => {
                let l = (alpha + beta + 1.0) * 2f64.ln() + lg(alpha + 1.0)? + lg(beta + 1.0)?
                    - lg(alpha + beta + 2.0)?;
                l.exp()
            }
            WeightId::Gegenbauer { mu } => (0.5 * PI.ln() + lg(mu + 0.5)? - lg(mu + 1.0)?).exp(),
            WeightId::ChebyshevT => PI,
            WeightId::Laguerre { alpha } => lg(alpha + 1.0)?.exp(),
            WeightId::Legendre => 2.0,
            WeightId::Wilson { a, b, c, h } => wilson_norm_scaled(0, [a, b, c, h])?.to_c().re,
        })
    }

    /// Monic recurrence coefficients `(a_n, b_n)` for `n < count`, with
    /// `p_{n+1} = (x - a_n) p_n - b_n p_{n-1}` (`b_0` unused).
    pub fn recurrence(&self, count: usize) -> Result<(Vec<f64>, Vec<f64>)> {
        self.check()?;
        let mut a = vec![0.0; count];
        let mut b = vec![0.0; count];
        match *self {
            WeightId::Legendre => return WeightId::Jacobi { alpha: 0.0, beta: 0.0 }.recurrence(count),
            WeightId::Jacobi { alpha, beta } => {
                let s = alpha + beta;
                for n in 0..count {
                    let nf = n as f64;
                    a[n] = if n == 0 {
                        (beta - alpha) / (s + 2.0)
                    } else {
                        (beta * beta - alpha * alpha) / ((2.0 * nf + s) * (2.0 * nf + s + 2.0))
                    };
                    b[n] = if n == 0 {
                        0.0
                    } else if n == 1 {
                        4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s).powi(2) * (3.0 + s))
                    } else {
                        let t = 2.0 * nf + s;
                        4.0 * nf * (nf + alpha) * (nf + beta) * (nf + s) / (t * t * (t + 1.0) * (t - 1.0))
                    };
                }
            }
            WeightId::Gegenbauer { mu } => {
                for n in 1..count {
                    let nf = n as f64;
                    b[n] = if n == 1 {
                        1.0 / (2.0 * (1.0 + mu))
                    } else {
                        nf * (nf + 2.0 * mu - 1.0) / (4.0 * (nf + mu) * (nf + mu - 1.0))
                    };
                }
            }
            WeightId::ChebyshevT => {
                for n in 1..count {
                    b[n] = if n == 1 { 0.5 } else { 0.25 };
                }
            }
            WeightId::Laguerre { alpha } => {
                for n in 0..count {
                    let nf = n as f64;
                    a[n] = 2.0 * nf + alpha + 1.0;
                    b[n] = nf * (nf + alpha);
                }
            }
            WeightId::Wilson { .. } => {
                return Err(Error::UnsupportedFamily("Wilson weight has no tabulated recurrence here"))
            }
        }
        Ok((a, b))
    }

    /// Monomial moments `∫ x^j w` for `j = 0..=jmax` from the Jacobi matrix.
    pub fn moments(&self, jmax: usize) -> Result<Vec<f64>> {
        let dim = jmax / 2 + 2;
        let (a, b) = self.recurrence(dim)?;
        let m0 = self.moment0()?;
        let off: Vec<f64> = b.iter().map(|v| v.sqrt()).collect();
        let mut half = vec![0.0; dim];
        half[0] = 1.0;
        let mut out = Vec::with_capacity(jmax + 1);
        out.push(m0);
        for j in 1..=jmax {
            // moment_j = e0ᵀ T^j e0 = |T^{j/2} e0|² for even j, (T^{⌊j/2⌋}e0)ᵀ T (T^{⌊j/2⌋}e0) for odd j
            if j % 2 == 0 {
                let mut next = vec![0.0; dim];
                for i in 0..dim {
                    let mut s = a[i] * half[i];
                    if i > 0 {
                        s += off[i] * half[i - 1];
                    }
                    if i + 1 < dim {
                        s += off[i + 1] * half[i + 1];
                    }
                    next[i] = s;
                }
                half = next;
                out.push(m0 * half.iter().map(|x| x * x).sum::<f64>());
            } else {
                let mut s = 0.0;
                for i in 0..dim {
                    let mut t = a[i] * half[i];
                    if i > 0 {
                        t += off[i] * half[i - 1];
                    }
                    if i + 1 < dim {
                        t += off[i + 1] * half[i + 1];
                    }
                    s += half[i] * t;
                }
                out.push(m0 * s);
            }
        }
        Ok(out)
    }

    fn interval(&self) -> Interval {
        match self {
            WeightId::Laguerre { .. } => Interval::HalfLine,
            _ => Interval::Symmetric,
        }
    }
}

fn lg(x: f64) -> Result<f64> {
    Ok(log_gamma(re(x))?.re)
}

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `d` and
/// sub-diagonal `e` (`e[0]` unused), by implicit-shift QL.
fn tridiagonal_eigenvalues(mut d: Vec<f64>, e_in: &[f64]) -> Result<Vec<f64>> {
    let n = d.len();
    let mut e = vec![0.0; n];
    e[..(n - 1)].copy_from_slice(&e_in[1..n]);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::Quadrature("QL iteration did not converge"));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + if g >= 0.0 { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(|a, b| a.partial_cmp(b).unwrap_or(core::cmp::Ordering::Equal));
    Ok(d)
}

/// Orthonormal recurrence at `x`: returns `(p_N, p_N', ln Σ_{k<N} p_k²)` with
/// rescaling to keep magnitudes in range.
fn orthonormal_at(x: f64, a: &[f64], sb: &[f64], n: usize) -> (f64, f64, f64) {
    let (mut p0, mut p1) = (0.0, 1.0);
    let (mut d0, mut d1) = (0.0, 0.0);
    let mut sum = 1.0;
    let mut ln_scale = 0.0;
    for k in 0..n {
        let prev = if k == 0 { 0.0 } else { sb[k] };
        let p2 = ((x - a[k]) * p1 - prev * p0) / sb[k + 1];
        let d2 = ((x - a[k]) * d1 + p1 - prev * d0) / sb[k + 1];
        p0 = p1;
        p1 = p2;
        d0 = d1;
        d1 = d2;
        if k + 1 < n {
            sum += p1 * p1;
        }
        let big = p1.abs().max(p0.abs());
        if big > 1e100 {
            p0 /= big;
            p1 /= big;
            d0 /= big;
            d1 /= big;
            sum /= big * big;
            ln_scale += 2.0 * big.ln();
        }
    }
    (p1, d1, sum.ln() + ln_scale)
}

/// Gauss rule of the given order for a classical weight.
///
/// Jacobi, Gegenbauer, Legendre and Laguerre rules come from the Jacobi
/// matrix, with Newton-polished nodes and Christoffel weights. Chebyshev-T
/// rules are closed form. A Wilson "rule" is a panelled Gauss–Legendre rule on
/// `[0, x_max]` with the weight folded in; it is not Gaussian in the Wilson
/// measure.
pub fn gauss_rule(weight_id: WeightId, order: usize) -> Result<QuadratureRule> {
    if order == 0 {
        return Err(Error::Quadrature("order must be at least 1"));
    }
    weight_id.check()?;
    match weight_id {
        WeightId::ChebyshevT => {
            let n = order as f64;
            let nodes: Vec<f64> = (0..order)
                .rev()
                .map(|j| ((2.0 * j as f64 + 1.0) * PI / (2.0 * n)).cos())
                .collect();
            return Ok(QuadratureRule {
                weights: vec![PI / n; order],
                nodes,
                interval: Interval::Symmetric,
                weight_id,
            });
        }
        WeightId::Wilson { a, b, c, h } => return wilson_rule(a, b, c, h, order),
        _ => {}
    }
    let (a, b) = weight_id.recurrence(order + 1)?;
    let sb: Vec<f64> = b.iter().map(|v| v.sqrt()).collect();
    let m0 = weight_id.moment0()?;
    let mut nodes = tridiagonal_eigenvalues(a[..order].to_vec(), &sb[..order])?;
    let mut weights = Vec::with_capacity(order);
    for x in nodes.iter_mut() {
        for _ in 0..3 {
            let (p, dp, _) = orthonormal_at(*x, &a, &sb, order);
            if dp == 0.0 || !dp.is_finite() {
                break;
            }
            let step = p / dp;
            if !step.is_finite() {
                break;
            }
            *x -= step;
            if step.abs() <= 1e-15 * x.abs().max(1e-300) {
                break;
            }
        }
        let (_, _, ln_sum) = orthonormal_at(*x, &a, &sb, order);
        weights.push(m0 * (-ln_sum).exp());
    }
    let keep: Vec<usize> = (0..order).filter(|&i| weights[i] > 0.0 && weights[i].is_finite()).collect();
    let nodes: Vec<f64> = keep.iter().map(|&i| nodes[i]).collect();
    let weights: Vec<f64> = keep.iter().map(|&i| weights[i]).collect();
    if nodes.is_empty() {
        return Err(Error::Quadrature("all weights underflowed"));
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        interval: weight_id.interval(),
        weight_id,
    })
}

/// `ln |Γ(a+ix)Γ(b+ix)Γ(c+ix)Γ(h+ix)/Γ(2ix)|²`.
pub fn ln_wilson_weight(x: f64, params: [ComplexScalar; 4]) -> Result<f64> {
    if x <= 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    let ix = ComplexScalar::new(0.0, x);
    let mut s = -log_gamma(ix * 2.0)?.re;
    for p in params {
        s += log_gamma(p + ix)?.re;
    }
    Ok(2.0 * s)
}

/// The Wilson weight, zero at `x = 0`.
pub fn wilson_weight(x: f64, a: ComplexScalar, b: ComplexScalar, c: ComplexScalar, h: ComplexScalar) -> Result<f64> {
    Ok(ln_wilson_weight(x, [a, b, c, h])?.exp())
}

/// Closed-form Wilson norm
/// `2π n! Π_{pairs} Γ(n+p+q) / ((2n+s-1) Γ(n+s-1))` with `s = a+b+c+d`.
pub fn wilson_norm_scaled(n: usize, params: [ComplexScalar; 4]) -> Result<Scaled> {
    let nf = n as f64;
    let s: ComplexScalar = params.iter().sum();
    let mut l = re((2.0 * PI).ln()) + log_gamma(re(nf + 1.0))?;
    for i in 0..4 {
        for j in (i + 1)..4 {
            l += log_gamma(params[i] + params[j] + nf)?;
        }
    }
    l -= log_gamma(s + nf - 1.0)?;
    Ok(Scaled::from_ln(l) * Scaled::from_c((s + 2.0 * nf - 1.0).inv()))
}

/// Closed-form squared norm of degree `n` under each classical weight.
pub fn norm_scaled(weight_id: WeightId, n: usize) -> Result<Scaled> {
    weight_id.check()?;
    let nf = n as f64;
    let l = match weight_id {
        WeightId::Jacobi { alpha, beta } => {
            if n == 0 {
                return Ok(Scaled::from_real(weight_id.moment0()?));
            }
            (alpha + beta + 1.0) * 2f64.ln() + lg(alpha + nf + 1.0)? + lg(beta + nf + 1.0)?
                - (2.0 * nf + alpha + beta + 1.0).ln()
                - lg(alpha + beta + nf + 1.0)?
                - lg(nf + 1.0)?
        }
        WeightId::Legendre => (2.0 / (2.0 * nf + 1.0)).ln(),
        WeightId::Gegenbauer { mu } => {
            PI.ln() + (1.0 - 2.0 * mu) * 2f64.ln() + lg(2.0 * mu + nf)?
                - (nf + mu).ln()
                - 2.0 * lg(mu)?
                - lg(nf + 1.0)?
        }
        WeightId::ChebyshevT => (PI / crate::poly::neumann_factor(n)).ln(),
        WeightId::Laguerre { alpha } => lg(nf + alpha + 1.0)? - lg(nf + 1.0)?,
        WeightId::Wilson { a, b, c, h } => return wilson_norm_scaled(n, [a, b, c, h]),
    };
    Ok(Scaled::from_ln(re(l)))
}

pub fn norm(weight_id: WeightId, n: usize) -> Result<f64> {
    Ok(norm_scaled(weight_id, n)?.to_c().re)
}

const PANEL_NODES: usize = 20;

fn legendre20() -> Result<QuadratureRule> {
    gauss_rule(WeightId::Legendre, PANEL_NODES)
}

/// Smallest grid point beyond which `ln w + ln(1+|f|)` stays below
/// `-41 + max(0, ln peak)` for several consecutive points.
fn wilson_cutoff<F: FnMut(f64) -> ComplexScalar>(params: [ComplexScalar; 4], f: &mut F) -> Result<f64> {
    const STEP: f64 = 0.25;
    const RUN: usize = 4;
    let mut peak = f64::NEG_INFINITY;
    let mut run = 0;
    let mut first_below = 0.0;
    let mut x = STEP;
    while x <= 400.0 {
        let l = ln_wilson_weight(x, params)? + (1.0 + f(x).norm()).ln();
        if l.is_finite() {
            peak = peak.max(l);
        }
        let cut = -41.0 + peak.max(0.0);
        if l < cut || l == f64::NEG_INFINITY {
            if run == 0 {
                first_below = x;
            }
            run += 1;
            if run >= RUN {
                return Ok(first_below);
            }
        } else {
            run = 0;
        }
        x += STEP;
    }
    Err(Error::Quadrature("Wilson integrand did not decay by x = 400"))
}

fn panelled_sum<F: FnMut(f64) -> ComplexScalar>(
    base: &QuadratureRule,
    hi: f64,
    panels: usize,
    params: [ComplexScalar; 4],
    f: &mut F,
) -> Result<(ComplexScalar, f64)> {
    let width = hi / panels as f64;
    let mut sum = re(0.0);
    let mut abs_sum = 0.0;
    for p in 0..panels {
        let lo = p as f64 * width;
        for (t, w) in base.nodes.iter().zip(&base.weights) {
            let x = lo + 0.5 * width * (t + 1.0);
            let wt = ln_wilson_weight(x, params)?.exp();
            let v = f(x) * wt * (0.5 * width * w);
            abs_sum += v.norm();
            sum += v;
        }
    }
    Ok((sum, abs_sum))
}

/// `∫_0^∞ f(x) w(x) dx` against the Wilson weight with parameters `(a,b,c,h)`.
///
/// Panels of 20-point Gauss–Legendre cover `[0, x_max]`; the panel count is
/// doubled until successive estimates agree to `rel_tol` relative to
/// `max(|I|, ∫|f w|)`.
pub fn integrate_wilson<F: FnMut(f64) -> ComplexScalar>(
    f: F,
    params: [ComplexScalar; 4],
    rel_tol: f64,
) -> Result<ComplexScalar> {
    Ok(integrate_wilson_panels(f, params, rel_tol)?.0)
}

/// [`integrate_wilson`], also returning the panel count that was accepted.
pub fn integrate_wilson_panels<F: FnMut(f64) -> ComplexScalar>(
    mut f: F,
    params: [ComplexScalar; 4],
    rel_tol: f64,
) -> Result<(ComplexScalar, usize)> {
    let [a, b, c, h] = params;
    WeightId::Wilson { a, b, c, h }.check()?;
    let hi = wilson_cutoff(params, &mut f)?;
    let base = legendre20()?;
    let mut panels = 4;
    let (mut prev, _) = panelled_sum(&base, hi, panels, params, &mut f)?;
    let mut last_err = f64::INFINITY;
    while panels <= 512 {
        panels *= 2;
        let (cur, abs_sum) = panelled_sum(&base, hi, panels, params, &mut f)?;
        let scale = cur.norm().max(abs_sum).max(f64::MIN_POSITIVE);
        last_err = (cur - prev).norm() / scale;
        if last_err <= rel_tol {
            return Ok((cur, panels));
        }
        prev = cur;
    }
    Err(Error::NonConvergence {
        stage: "integrate_wilson",
        estimate: last_err,
    })
}

fn wilson_rule(a: ComplexScalar, b: ComplexScalar, c: ComplexScalar, h: ComplexScalar, order: usize) -> Result<QuadratureRule> {
    let params = [a, b, c, h];
    let hi = wilson_cutoff(params, &mut |_| re(0.0))?;
    let base = legendre20()?;
    let panels = order.div_ceil(PANEL_NODES).max(1);
    let width = hi / panels as f64;
    let mut nodes = Vec::with_capacity(panels * PANEL_NODES);
    let mut weights = Vec::with_capacity(panels * PANEL_NODES);
    for p in 0..panels {
        let lo = p as f64 * width;
        for (t, w) in base.nodes.iter().zip(&base.weights) {
            let x = lo + 0.5 * width * (t + 1.0);
            let wt = ln_wilson_weight(x, params)?.exp() * 0.5 * width * w;
            if wt > 0.0 {
                nodes.push(x);
                weights.push(wt);
            }
        }
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        interval: Interval::Finite { lo: 0.0, hi },
        weight_id: WeightId::Wilson { a, b, c, h },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_rule_is_exact_for_x8() {
        let r = gauss_rule(WeightId::Legendre, 5).unwrap();
        let v = r.integrate(|x| x.powi(8));
        assert!((v - 2.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn moment_zero_examples() {
        let r = gauss_rule(WeightId::Jacobi { alpha: 0.3, beta: 0.7 }, 12).unwrap();
        let beta_fn = (lg(1.3).unwrap() + lg(1.7).unwrap() - lg(3.0).unwrap()).exp();
        assert!((r.weights.iter().sum::<f64>() - 4.0 * beta_fn).abs() < 1e-13);
        let r = gauss_rule(WeightId::Laguerre { alpha: 0.5 }, 30).unwrap();
        assert!((r.weights.iter().sum::<f64>() - PI.sqrt() / 2.0).abs() < 1e-13);
    }

    #[test]
    fn rules_are_ordered_positive_and_interior() {
        for w in [
            WeightId::Jacobi { alpha: -0.6, beta: 2.3 },
            WeightId::Gegenbauer { mu: 0.2 },
            WeightId::ChebyshevT,
            WeightId::Laguerre { alpha: 1.4 },
        ] {
            let r = gauss_rule(w, 40).unwrap();
            assert!(r.weights.iter().all(|w| *w > 0.0));
            assert!(r.nodes.windows(2).all(|p| p[0] < p[1]));
            match r.interval {
                Interval::Symmetric => assert!(r.nodes.iter().all(|x| x.abs() < 1.0)),
                Interval::HalfLine => assert!(r.nodes.iter().all(|x| *x > 0.0)),
                Interval::Finite { .. } => unreachable!(),
            }
        }
    }

    #[test]
    fn wilson_weight_vanishes_at_origin_and_is_symmetric() {
        let (a, b, c, h) = (re(1.0), re(2.0), re(0.5), re(0.7));
        assert!(wilson_weight(1e-8, a, b, c, h).unwrap() < 1e-12);
        let w1 = wilson_weight(1.3, a, b, c, h).unwrap();
        let w2 = wilson_weight(1.3, b, a, c, h).unwrap();
        assert!((w1 - w2).abs() <= 1e-14 * w1);
    }

    #[test]
    fn wilson_moment_zero_matches_norm() {
        let p = [re(1.0), re(2.0), re(0.5), re(1.3)];
        let i = integrate_wilson(|_| re(1.0), p, 1e-13).unwrap();
        let n0 = wilson_norm_scaled(0, p).unwrap().to_c();
        assert!((i - n0).norm() < 1e-11 * n0.norm());
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(gauss_rule(WeightId::Jacobi { alpha: -1.2, beta: 0.0 }, 4).is_err());
        assert!(gauss_rule(WeightId::Laguerre { alpha: -1.0 }, 4).is_err());
        assert!(gauss_rule(WeightId::Legendre, 0).is_err());
    }
}
