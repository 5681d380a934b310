//! Associated Legendre and Ferrers functions through Gauss hypergeometric
//! representations.

use crate::scalar::hyper::hyp2f1_scaled;
use crate::scalar::{cpow, gamma, gamma_scaled, hyp2f1, is_nonpositive_integer, re, rgamma, ComplexScalar, Scaled};
use crate::{Error, Result};

/// Which side of the cut `[-1, 1]` an argument lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `-1 < x < 1`, for Ferrers functions.
    CutInterior,
    /// `z > 1` (or complex off `(-∞, 1]`), for associated Legendre functions.
    Exterior,
}

/// A Legendre-function argument with its distance to `1` carried separately.
///
/// Arguments like `(1+ρ)/R` sit very close to `1` near `x = 1`; forming
/// `z - 1` by subtraction there loses most digits, so callers that know the
/// offset in closed form pass it in.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LegendreArg {
    pub value: ComplexScalar,
    pub regime: Regime,
    /// `z - 1` in the exterior regime, `1 - x` on the cut.
    offset: ComplexScalar,
}

impl LegendreArg {
    pub fn exterior(z: ComplexScalar) -> Result<Self> {
        Self::exterior_with_offset(z, z - 1.0)
    }

    pub fn exterior_with_offset(z: ComplexScalar, z_minus_one: ComplexScalar) -> Result<Self> {
        if z.im == 0.0 && z.re <= 1.0 {
            return Err(Error::Branch("associated Legendre argument on (-∞, 1]"));
        }
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite("Legendre argument"));
        }
        Ok(LegendreArg {
            value: z,
            regime: Regime::Exterior,
            offset: z_minus_one,
        })
    }

    pub fn interior(x: ComplexScalar) -> Result<Self> {
        Self::interior_with_offset(x, re(1.0) - x)
    }

    pub fn interior_with_offset(x: ComplexScalar, one_minus_x: ComplexScalar) -> Result<Self> {
        if x.im == 0.0 && (x.re <= -1.0 || x.re >= 1.0) {
            return Err(Error::Domain("Ferrers argument outside (-1, 1)"));
        }
        if !(x.re.is_finite() && x.im.is_finite()) {
            return Err(Error::NonFinite("Ferrers argument"));
        }
        Ok(LegendreArg {
            value: x,
            regime: Regime::CutInterior,
            offset: one_minus_x,
        })
    }

    pub fn offset(&self) -> ComplexScalar {
        self.offset
    }
}

fn check_order(mu: ComplexScalar) -> Result<()> {
    let one_minus = re(1.0) - mu;
    let n = one_minus.re.round();
    if n <= 0.0 && (one_minus - re(n)).norm() < 1e-12 {
        return Err(Error::Pole {
            what: "Γ(1-μ) in Legendre function",
            at: one_minus.re,
        });
    }
    Ok(())
}

/// `P_ν^μ(z)` for `z` off `(-∞, 1]`, as a [`Scaled`] value.
pub fn assoc_legendre_p_scaled(nu: ComplexScalar, mu: ComplexScalar, z: &LegendreArg) -> Result<Scaled> {
    if z.regime != Regime::Exterior {
        return Err(Error::Branch("associated Legendre P needs an exterior argument"));
    }
    check_order(mu)?;
    let zm1 = z.offset;
    let zp1 = z.value + 1.0;
    let pref = Scaled::powc(zp1, mu * 0.5) * Scaled::powc(zm1, -mu * 0.5) / gamma_scaled(re(1.0) - mu)?;
    let f = hyp2f1_scaled(-nu, nu + 1.0, re(1.0) - mu, -zm1 * 0.5)?;
    Ok(pref * f)
}

pub fn assoc_legendre_p(nu: ComplexScalar, mu: ComplexScalar, z: &LegendreArg) -> Result<ComplexScalar> {
    let v = assoc_legendre_p_scaled(nu, mu, z)?.to_c();
    crate::scalar::check_finite(v, "assoc_legendre_p")
}

/// Ferrers function `𝖯_ν^μ(x)` for `-1 < x < 1`, as a [`Scaled`] value.
pub fn ferrers_p_scaled(nu: ComplexScalar, mu: ComplexScalar, x: &LegendreArg) -> Result<Scaled> {
    if x.regime != Regime::CutInterior {
        return Err(Error::Domain("Ferrers P needs an argument on the cut"));
    }
    check_order(mu)?;
    let omx = x.offset;
    let opx = x.value + 1.0;
    let pref = Scaled::powc(opx, mu * 0.5) * Scaled::powc(omx, -mu * 0.5) / gamma_scaled(re(1.0) - mu)?;
    let f = hyp2f1_scaled(-nu, nu + 1.0, re(1.0) - mu, omx * 0.5)?;
    Ok(pref * f)
}

pub fn ferrers_p(nu: ComplexScalar, mu: ComplexScalar, x: &LegendreArg) -> Result<ComplexScalar> {
    let v = ferrers_p_scaled(nu, mu, x)?.to_c();
    crate::scalar::check_finite(v, "ferrers_p")
}

/// `Q_ν^μ(z)` for `z` off `(-∞, 1]`, as a [`Scaled`] value.
///
/// Uses the expansion in `1/z²`:
/// `e^{μπi} √π Γ(ν+μ+1) (z²-1)^{μ/2} / (2^{ν+1} z^{ν+μ+1}) · F(…; 1/z²) / Γ(ν+3/2)`
/// with `F = 2F1((ν+μ)/2+1, (ν+μ+1)/2; ν+3/2; ·)`. This is the normalization
/// under which `f_n^{(ν,ν)}(ρ) = ρⁿ`.
pub fn assoc_legendre_q_scaled(nu: ComplexScalar, mu: ComplexScalar, z: &LegendreArg) -> Result<Scaled> {
    if z.regime != Regime::Exterior {
        return Err(Error::Domain("Legendre Q needs an exterior argument"));
    }
    let w = z.value;
    let zm1 = z.offset;
    let c = nu + 1.5;
    if is_nonpositive_integer(c) {
        return Err(Error::Pole {
            what: "Γ(ν+3/2) in Legendre Q",
            at: c.re,
        });
    }
    let pi = core::f64::consts::PI;
    let pref = Scaled::from_ln(ComplexScalar::i() * mu * pi + 0.5 * pi.ln())
        * gamma_scaled(nu + mu + 1.0)?
        / gamma_scaled(c)?
        * Scaled::powc(zm1, mu * 0.5)
        * Scaled::powc(w + 1.0, mu * 0.5)
        / Scaled::powc(re(2.0), nu + 1.0)
        / Scaled::powc(w, nu + mu + 1.0);
    let f = hyp2f1_scaled((nu + mu) * 0.5 + 1.0, (nu + mu + 1.0) * 0.5, c, (w * w).inv())?;
    Ok(pref * f)
}

pub fn assoc_legendre_q(nu: ComplexScalar, mu: ComplexScalar, z: &LegendreArg) -> Result<ComplexScalar> {
    let v = assoc_legendre_q_scaled(nu, mu, z)?.to_c();
    crate::scalar::check_finite(v, "assoc_legendre_q")
}

/// Magnus form `2^μ z^{ν+μ} (z²-1)^{-μ/2} / Γ(1-μ) · 2F1(-(ν+μ)/2, (1-ν-μ)/2; 1-μ; 1-1/z²)`
/// of `P_ν^μ(z)`, valid for `Re z > 0`.
pub fn assoc_legendre_p_magnus(nu: ComplexScalar, mu: ComplexScalar, z: &LegendreArg) -> Result<ComplexScalar> {
    if z.regime != Regime::Exterior || z.value.re <= 0.0 {
        return Err(Error::Domain("Magnus form needs Re z > 0 off the cut"));
    }
    check_order(mu)?;
    let w = z.value;
    let zm1 = z.offset;
    let zz = zm1 * (w + 1.0);
    let arg = zz / (w * w);
    let f = hyp2f1(-(nu + mu) * 0.5, (re(1.0) - nu - mu) * 0.5, re(1.0) - mu, arg)?;
    let ln_pref = mu * 2.0f64.ln() + (nu + mu) * w.ln() - mu * 0.5 * (zm1.ln() + (w + 1.0).ln());
    Ok((ln_pref).exp() * rgamma(re(1.0) - mu) * f)
}

/// Magnus form of `𝖯_ν^μ(x)` for `x ∈ (0, 1)`.
pub fn ferrers_p_magnus(nu: ComplexScalar, mu: ComplexScalar, x: &LegendreArg) -> Result<ComplexScalar> {
    if x.regime != Regime::CutInterior || x.value.re <= 0.0 {
        return Err(Error::Domain("Magnus form needs x in (0, 1)"));
    }
    check_order(mu)?;
    let v = x.value;
    let omx = x.offset;
    let one_minus_sq = omx * (v + 1.0);
    let arg = -one_minus_sq / (v * v);
    let f = hyp2f1(-(nu + mu) * 0.5, (re(1.0) - nu - mu) * 0.5, re(1.0) - mu, arg)?;
    let ln_pref = mu * 2.0f64.ln() + (nu + mu) * v.ln() - mu * 0.5 * one_minus_sq.ln();
    Ok(ln_pref.exp() * rgamma(re(1.0) - mu) * f)
}

/// Both sides of the quadratic `2F1 ↔ Legendre` relation at `z`.
///
/// Exterior: `2F1(a, b; a-b+1; z)` against
/// `z^{(b-a)/2} Γ(a-b+1) (1-z)^{-b} P_{-b}^{b-a}((1+z)/(1-z))` for `z ∈ (0, 1)`.
/// Cut: `2F1(a, b; a-b+1; -x)` against
/// `x^{(b-a)/2} Γ(a-b+1) (1+x)^{-b} 𝖯_{-b}^{b-a}((1-x)/(1+x))` for `x ∈ (0, 1)`.
pub fn hyp2f1_to_legendre(
    a: ComplexScalar,
    b: ComplexScalar,
    z: ComplexScalar,
    regime: Regime,
) -> Result<(ComplexScalar, ComplexScalar)> {
    if !(z.im == 0.0 && z.re > 0.0 && z.re < 1.0) {
        return Err(Error::Domain("quadratic Legendre relation sampled on (0, 1)"));
    }
    let c = a - b + 1.0;
    let one = re(1.0);
    match regime {
        Regime::Exterior => {
            let lhs = hyp2f1(a, b, c, z)?;
            let arg = LegendreArg::exterior_with_offset((one + z) / (one - z), z * 2.0 / (one - z))?;
            let p = assoc_legendre_p(-b, b - a, &arg)?;
            let rhs = cpow(z, (b - a) * 0.5) * gamma(c)? * cpow(one - z, -b) * p;
            Ok((lhs, rhs))
        }
        Regime::CutInterior => {
            let lhs = hyp2f1(a, b, c, -z)?;
            let arg = LegendreArg::interior_with_offset((one - z) / (one + z), z * 2.0 / (one + z))?;
            let p = ferrers_p(-b, b - a, &arg)?;
            let rhs = cpow(z, (b - a) * 0.5) * gamma(c)? * cpow(one + z, -b) * p;
            Ok((lhs, rhs))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{gegenbauer_c, legendre_poly, GegenbauerParams};
    use core::f64::consts::PI;

    fn close(a: ComplexScalar, b: ComplexScalar, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1e-300)
    }

    #[test]
    fn trivial_orders() {
        let z = LegendreArg::exterior(re(2.3)).unwrap();
        assert!(close(assoc_legendre_p(re(0.0), re(0.0), &z).unwrap(), re(1.0), 1e-15));
        let x = LegendreArg::interior(re(-0.4)).unwrap();
        assert!(close(ferrers_p(re(0.0), re(0.0), &x).unwrap(), re(1.0), 1e-15));
        let x = LegendreArg::interior(re(0.6)).unwrap();
        assert!(close(ferrers_p(re(2.0), re(0.0), &x).unwrap(), re(0.04), 1e-13));
        let z = LegendreArg::exterior(re(1.5)).unwrap();
        let p3 = assoc_legendre_p(re(3.0), re(0.0), &z).unwrap();
        assert!(close(p3, legendre_poly(3, re(1.5)), 1e-13));
    }

    #[test]
    fn q_closed_form() {
        let z = LegendreArg::exterior(re(2.0)).unwrap();
        let q = assoc_legendre_q(re(0.0), re(0.0), &z).unwrap();
        assert!(close(q, re(0.5 * 3.0f64.ln()), 1e-14));
    }

    #[test]
    fn gegenbauer_reductions() {
        let (n, mu) = (2usize, 0.8);
        let pre = 2.0f64.powf(mu - 0.5) * crate::scalar::gamma(re(mu)).unwrap().re * 2.0
            / (PI.sqrt() * crate::scalar::gamma(re(2.0 * mu + n as f64)).unwrap().re);
        let g = GegenbauerParams::new(mu);
        let z = 1.4;
        let p = assoc_legendre_p(re(n as f64 + mu - 0.5), re(0.5 - mu), &LegendreArg::exterior(re(z)).unwrap()).unwrap();
        let c = gegenbauer_c(n, &g, re(z)).unwrap();
        assert!(close(p, c * pre * (z * z - 1.0).powf(mu / 2.0 - 0.25), 1e-12));
        let x = 0.3;
        let f = ferrers_p(re(n as f64 + mu - 0.5), re(0.5 - mu), &LegendreArg::interior(re(x)).unwrap()).unwrap();
        let c = gegenbauer_c(n, &g, re(x)).unwrap();
        assert!(close(f, c * pre * (1.0 - x * x).powf(mu / 2.0 - 0.25), 1e-12));
    }

    #[test]
    fn quadratic_relation_examples() {
        for regime in [Regime::Exterior, Regime::CutInterior] {
            let (l, r) = hyp2f1_to_legendre(re(0.6), re(0.6), re(0.3), regime).unwrap();
            assert!(close(l, r, 1e-12));
            let (l, r) = hyp2f1_to_legendre(re(1.4), re(0.3), re(0.5), regime).unwrap();
            assert!(close(l, r, 1e-11));
            let (l, _) = hyp2f1_to_legendre(re(1.4), re(0.3), re(1e-9), regime).unwrap();
            assert!(close(l, re(1.0), 1e-8));
        }
    }

    #[test]
    fn magnus_forms_agree() {
        let (nu, mu) = (re(0.7), re(-0.4));
        let z = LegendreArg::exterior(re(1.7)).unwrap();
        assert!(close(assoc_legendre_p_magnus(nu, mu, &z).unwrap(), assoc_legendre_p(nu, mu, &z).unwrap(), 1e-12));
        let x = LegendreArg::interior(re(0.45)).unwrap();
        assert!(close(ferrers_p_magnus(nu, mu, &x).unwrap(), ferrers_p(nu, mu, &x).unwrap(), 1e-12));
    }

    #[test]
    fn positive_integer_order_is_rejected() {
        let z = LegendreArg::exterior(re(1.7)).unwrap();
        assert!(matches!(assoc_legendre_p(re(0.5), re(2.0), &z), Err(Error::Pole { .. })));
        assert!(LegendreArg::exterior(re(0.5)).is_err());
        assert!(LegendreArg::interior(re(1.5)).is_err());
    }
}
