use super::gamma::{is_nonpositive_integer, log_gamma};
use super::{cpow, re, ComplexScalar, Scaled};
use crate::{Error, Result};

/// Stopping rule for truncated series.
///
/// A series stops once two consecutive terms satisfy
/// `|t_n| <= rel_tol * |partial| + abs_tol`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TruncationControl {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_terms: usize,
}

impl Default for TruncationControl {
    fn default() -> Self {
        TruncationControl {
            rel_tol: 1e-14,
            abs_tol: 1e-300,
            max_terms: 10_000,
        }
    }
}

/// Result of a truncated series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesValue {
    pub value: ComplexScalar,
    pub terms_used: usize,
    pub last_term_abs: f64,
    pub converged: bool,
}

/// Denominator parameters closer than this to a nonpositive integer are poles.
const DENOM_POLE_TOL: f64 = 1e-8;

/// Generalized hypergeometric series `pFq(num; den; z)`.
///
/// Terms follow `t_{n+1} = t_n · Π(a_i+n) / Π(b_j+n) · z/(n+1)`. A numerator
/// parameter equal to `-m` truncates the series to exactly `m+1` terms; such a
/// parameter also shields a denominator pole at `-j` when `m <= j`.
pub fn phyper(
    num: &[ComplexScalar],
    den: &[ComplexScalar],
    z: ComplexScalar,
    ctl: &TruncationControl,
) -> Result<SeriesValue> {
    let terminate_at = num
        .iter()
        .filter(|a| is_nonpositive_integer(**a))
        .map(|a| (-a.re) as usize)
        .min();

    for (index, b) in den.iter().enumerate() {
        let j = b.re.round();
        if j <= 0.0 && (*b - re(j)).norm() < DENOM_POLE_TOL {
            let shielded = matches!(terminate_at, Some(m) if (m as f64) <= -j);
            if !shielded {
                return Err(Error::ParameterPole { index, value: b.re });
            }
        }
    }

    if let Some(m) = terminate_at {
        let mut t = re(1.0);
        let mut sum = t;
        for n in 0..m {
            t *= step_ratio(num, den, z, n);
            sum += t;
        }
        let value = super::check_finite(sum, "phyper")?;
        return Ok(SeriesValue {
            value,
            terms_used: m + 1,
            last_term_abs: t.norm(),
            converged: true,
        });
    }

    let (p, q) = (num.len(), den.len());
    if p > q + 1 && z != re(0.0) {
        return Err(Error::Domain("pFq with p > q+1 diverges unless terminating"));
    }
    if p == q + 1 && z.norm() >= 1.0 {
        return Err(Error::Domain("pFq with p = q+1 needs |z| < 1"));
    }

    let mut t = re(1.0);
    let mut sum = t;
    let mut small_run = 0;
    let mut n = 0;
    while n + 1 < ctl.max_terms {
        t *= step_ratio(num, den, z, n);
        sum += t;
        n += 1;
        let small = t.norm() <= ctl.rel_tol * sum.norm() + ctl.abs_tol;
        small_run = if small { small_run + 1 } else { 0 };
        if small_run >= 2 {
            let value = super::check_finite(sum, "phyper")?;
            return Ok(SeriesValue {
                value,
                terms_used: n + 1,
                last_term_abs: t.norm(),
                converged: true,
            });
        }
        if !t.re.is_finite() || !t.im.is_finite() {
            return Err(Error::NonFinite("phyper term"));
        }
    }
    Err(Error::Diverged {
        terms: ctl.max_terms,
        last_term_abs: t.norm(),
    })
}

#[inline]
fn step_ratio(
    num: &[ComplexScalar],
    den: &[ComplexScalar],
    z: ComplexScalar,
    n: usize,
) -> ComplexScalar {
    let nf = n as f64;
    let mut top = z;
    for a in num {
        top *= *a + nf;
    }
    let mut bottom = re(nf + 1.0);
    for b in den {
        bottom *= *b + nf;
    }
    top / bottom
}

/// Direct Gauss series `2F1(a,b;c;z)` with default truncation.
pub fn hyp2f1_series(
    a: ComplexScalar,
    b: ComplexScalar,
    c: ComplexScalar,
    z: ComplexScalar,
) -> Result<ComplexScalar> {
    Ok(phyper(&[a, b], &[c], z, &TruncationControl::default())?.value)
}

/// Gauss hypergeometric function with argument conditioning.
///
/// Small arguments and terminating series are summed directly. Otherwise the
/// smaller of `z/(z-1)` (Pfaff) and `1-z` (when `c-a-b` is safely
/// non-integral) is used, falling back to the direct series inside the unit
/// disk.
pub fn hyp2f1(
    a: ComplexScalar,
    b: ComplexScalar,
    c: ComplexScalar,
    z: ComplexScalar,
) -> Result<ComplexScalar> {
    Ok(hyp2f1_scaled(a, b, c, z)?.to_c())
}

pub(crate) fn hyp2f1_scaled(
    a: ComplexScalar,
    b: ComplexScalar,
    c: ComplexScalar,
    z: ComplexScalar,
) -> Result<Scaled> {
    let terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    let r = z.norm();
    if terminating || r <= 0.75 {
        return hyp2f1_series(a, b, c, z).map(Scaled::from_c);
    }

    let one = re(1.0);
    let pfaff_arg = z / (z - one);
    let s = c - a - b;
    let s_int_dist = (s.re - s.re.round()).abs().max(s.im.abs());
    let one_minus = one - z;
    let reflect_ok = s_int_dist > 0.1 && is_gamma_regular(c);

    let pfaff_r = pfaff_arg.norm();
    let reflect_r = if reflect_ok { one_minus.norm() } else { f64::INFINITY };

    if pfaff_r < r && pfaff_r <= reflect_r && pfaff_r < 1.0 {
        // 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
        let f = hyp2f1_series(a, c - b, c, pfaff_arg)?;
        let pre = Scaled::from_ln(-a * one_minus.ln());
        return Ok(pre * Scaled::from_c(f));
    }
    if reflect_r < r && reflect_r < 0.9 {
        let (v, lost) = hyp2f1_one_minus_z(a, b, c, z)?;
        // Heavy cancellation between the two branches: the slow direct
        // series is the more accurate of the two when it converges.
        if lost < 1e2 || r >= 1.0 {
            return Ok(v);
        }
        if let Ok(f) = hyp2f1_series(a, b, c, z) {
            return Ok(Scaled::from_c(f));
        }
        return Ok(v);
    }
    if r < 1.0 {
        return hyp2f1_series(a, b, c, z).map(Scaled::from_c);
    }
    Err(Error::Domain("2F1 argument outside the unit disk with no usable transformation"))
}

fn is_gamma_regular(z: ComplexScalar) -> bool {
    log_gamma(z).is_ok()
}

fn ln_gamma_or_pole(z: ComplexScalar) -> Option<ComplexScalar> {
    log_gamma(z).ok()
}

/// Connection to `1-z` for non-integral `c-a-b`, with the ratio of the
/// larger branch to the sum as a cancellation measure.
fn hyp2f1_one_minus_z(
    a: ComplexScalar,
    b: ComplexScalar,
    c: ComplexScalar,
    z: ComplexScalar,
) -> Result<(Scaled, f64)> {
    let one = re(1.0);
    let w = one - z;
    let s = c - a - b;
    let lg_c = log_gamma(c)?;
    // A gamma pole in the denominator makes that branch vanish.
    let first = match (ln_gamma_or_pole(c - a), ln_gamma_or_pole(c - b)) {
        (Some(ga), Some(gb)) => {
            let f = hyp2f1_series(a, b, -s + 1.0, w)?;
            Scaled::from_ln(lg_c + log_gamma(s)? - ga - gb) * Scaled::from_c(f)
        }
        _ => Scaled::ZERO,
    };
    let second = match (ln_gamma_or_pole(a), ln_gamma_or_pole(b)) {
        (Some(ga), Some(gb)) => {
            let f = hyp2f1_series(c - a, c - b, s + 1.0, w)?;
            Scaled::from_ln(lg_c + log_gamma(-s)? - ga - gb + s * w.ln()) * Scaled::from_c(f)
        }
        _ => Scaled::ZERO,
    };
    // Both pieces are of comparable size here; add in plain form scaled by the larger.
    let l1 = first.ln_abs();
    let l2 = second.ln_abs();
    let base = l1.max(l2);
    if base == f64::NEG_INFINITY {
        return Ok((Scaled::ZERO, 0.0));
    }
    let shift = Scaled::from_ln(re(-base));
    let sum = (first * shift).to_c() + (second * shift).to_c();
    let lost = if sum.norm() > 0.0 { 1.0 / sum.norm() } else { f64::INFINITY };
    Ok((Scaled::from_c(sum) * Scaled::from_ln(re(base)), lost))
}

/// Kummer's confluent function `M(a, b, z) = 1F1(a; b; z)`.
///
/// For `Re z < 0` and a non-terminating series, Kummer's transformation
/// `M(a,b,z) = e^z M(b-a, b, -z)` removes the alternating cancellation.
pub fn kummer_m(a: ComplexScalar, b: ComplexScalar, z: ComplexScalar) -> Result<SeriesValue> {
    let ctl = TruncationControl::default();
    if z.re < 0.0 && !is_nonpositive_integer(a) {
        let mut s = phyper(&[b - a], &[b], -z, &ctl)?;
        s.value = super::check_finite(s.value * z.exp(), "kummer_m")?;
        return Ok(s);
    }
    phyper(&[a], &[b], z, &ctl)
}

#[allow(dead_code)]
pub(crate) fn binomial_1f0(alpha: ComplexScalar, z: ComplexScalar) -> ComplexScalar {
    cpow(re(1.0) - z, -alpha)
}
