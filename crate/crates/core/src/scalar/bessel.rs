use super::gamma::rgamma;
use super::hyper::{phyper, TruncationControl};
use super::{check_finite, cpow, re, ComplexScalar};
use crate::{Error, Result};

fn is_negative_integer(nu: ComplexScalar) -> Option<i64> {
    if nu.im == 0.0 && nu.re < 0.0 && nu.re == nu.re.round() {
        Some(nu.re as i64)
    } else {
        None
    }
}

fn bessel_series(nu: ComplexScalar, z: ComplexScalar, sign: f64) -> Result<ComplexScalar> {
    if let Some(n) = is_negative_integer(nu) {
        // J_{-n} = (-1)^n J_n and I_{-n} = I_n
        let v = bessel_series(re(-(n as f64)), z, sign)?;
        let flip = if sign < 0.0 && n % 2 != 0 { -1.0 } else { 1.0 };
        return Ok(v * flip);
    }
    if z == re(0.0) {
        if nu == re(0.0) {
            return Ok(re(1.0));
        }
        if nu.re > 0.0 {
            return Ok(re(0.0));
        }
        return Err(Error::Domain("Bessel function at z = 0 with Re ν <= 0"));
    }
    let half = z * 0.5;
    let arg = half * half * sign;
    let s = phyper(&[], &[nu + 1.0], arg, &TruncationControl::default())?;
    check_finite(cpow(half, nu) * rgamma(nu + 1.0) * s.value, "bessel")
}

/// Bessel function of the first kind `J_ν(z) = (z/2)^ν / Γ(ν+1) · 0F1(; ν+1; -z²/4)`
/// with the principal power.
pub fn bessel_j(nu: ComplexScalar, z: ComplexScalar) -> Result<ComplexScalar> {
    bessel_series(nu, z, -1.0)
}

/// Modified Bessel function `I_ν(z) = (z/2)^ν / Γ(ν+1) · 0F1(; ν+1; z²/4)`.
pub fn bessel_i(nu: ComplexScalar, z: ComplexScalar) -> Result<ComplexScalar> {
    bessel_series(nu, z, 1.0)
}
