use core::f64::consts::PI;

use super::{ComplexScalar, Scaled};
use crate::{Error, Result};

/// Distance to a nonpositive integer below which an argument counts as a pole.
pub const POLE_TOL: f64 = 1e-12;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// True when `z` is exactly a nonpositive integer (real, integral, `<= 0`).
pub fn is_nonpositive_integer(z: ComplexScalar) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

fn near_pole(z: ComplexScalar) -> bool {
    if z.re > 0.5 {
        return false;
    }
    let n = z.re.round();
    n <= 0.0 && (z - ComplexScalar::new(n, 0.0)).norm() < POLE_TOL
}

/// `ln sin(w)` without overflow for large `|Im w|`.
fn ln_sin(w: ComplexScalar) -> ComplexScalar {
    let i = ComplexScalar::i();
    if w.im.abs() < 1.0 {
        w.sin().ln()
    } else if w.im > 0.0 {
        let e = (i * w * 2.0).exp();
        -i * w + ((e - 1.0) / (i * 2.0)).ln()
    } else {
        let e = (-i * w * 2.0).exp();
        i * w + ((-e + 1.0) / (i * 2.0)).ln()
    }
}

fn lanczos_ln_gamma(z: ComplexScalar) -> ComplexScalar {
    let x = z - 1.0;
    let mut acc = ComplexScalar::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += *c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    (x + 0.5) * t.ln() - t + LN_SQRT_2PI + acc.ln()
}

/// Logarithm of the gamma function.
///
/// Uses the Lanczos approximation for `Re z >= 1/2` and the reflection
/// formula elsewhere. `exp(log_gamma(z))` equals `Γ(z)`; the imaginary part
/// is the analytic continuation from the positive real axis, which can differ
/// from the principal `Log Γ(z)` by a multiple of `2πi` far from the axis.
pub fn log_gamma(z: ComplexScalar) -> Result<ComplexScalar> {
    if near_pole(z) {
        return Err(Error::Pole {
            what: "log_gamma",
            at: z.re,
        });
    }
    let v = if z.re >= 0.5 {
        lanczos_ln_gamma(z)
    } else {
        let one_minus = -z + 1.0;
        ComplexScalar::new(PI.ln(), 0.0) - ln_sin(z * PI) - lanczos_ln_gamma(one_minus)
    };
    super::check_finite(v, "log_gamma")
}

/// The gamma function. Positive integers up to 20 are returned exactly.
pub fn gamma(z: ComplexScalar) -> Result<ComplexScalar> {
    if z.im == 0.0 && z.re >= 1.0 && z.re <= 21.0 && z.re == z.re.round() {
        let mut f = 1.0;
        for k in 2..(z.re as u32) {
            f *= k as f64;
        }
        return Ok(ComplexScalar::new(f, 0.0));
    }
    let v = gamma_scaled(z)?.to_c();
    super::check_finite(v, "gamma")
}

/// Reciprocal gamma function; entire, so poles map to zero.
pub fn rgamma(z: ComplexScalar) -> ComplexScalar {
    match log_gamma(z) {
        Ok(l) => (-l).exp(),
        Err(_) => ComplexScalar::new(0.0, 0.0),
    }
}

/// Rising factorial `(z)_n = z (z+1) … (z+n-1)` in product form.
pub fn pochhammer(z: ComplexScalar, n: usize) -> ComplexScalar {
    let mut p = ComplexScalar::new(1.0, 0.0);
    for i in 0..n {
        p *= z + i as f64;
    }
    p
}

/// `(z)_n` as a [`Scaled`] value, safe for `n` in the thousands.
///
/// Products are formed directly up to a few thousand factors; log-gamma
/// differences lose about `|ln Γ|·ε` of relative accuracy, which is too
/// much once the logarithms reach the hundreds.
pub fn pochhammer_scaled(z: ComplexScalar, n: usize) -> Scaled {
    if is_nonpositive_integer(z) {
        // (−m)_n vanishes for n > m.
        let m = (-z.re) as usize;
        if n > m {
            return Scaled::ZERO;
        }
    }
    if n <= 8192 {
        return pochhammer_scaled_product(z, n);
    }
    let zn = z + n as f64;
    if near_pole(z) || near_pole(zn) {
        return pochhammer_scaled_product(z, n);
    }
    match (log_gamma(zn), log_gamma(z)) {
        (Ok(a), Ok(b)) => Scaled::from_ln(a - b),
        _ => pochhammer_scaled_product(z, n),
    }
}

fn pochhammer_scaled_product(z: ComplexScalar, n: usize) -> Scaled {
    let mut p = Scaled::ONE;
    let mut block = ComplexScalar::new(1.0, 0.0);
    for i in 0..n {
        block *= z + i as f64;
        if i % 8 == 7 {
            p *= Scaled::from_c(block);
            block = ComplexScalar::new(1.0, 0.0);
        }
    }
    p * Scaled::from_c(block)
}

/// Taylor coefficients of `1/Γ(1+t)` about `t = 0`.
const RGAMMA_TAYLOR: [f64; 31] = [
    1.00000000000000000e+00,
    5.77215664901532866e-01,
    -6.55878071520253902e-01,
    -4.20026350340952370e-02,
    1.66538611382291479e-01,
    -4.21977345555443334e-02,
    -9.62197152787697303e-03,
    7.21894324666309990e-03,
    -1.16516759185906517e-03,
    -2.15241674114950975e-04,
    1.28050282388116196e-04,
    -2.01348547807882387e-05,
    -1.25049348214267063e-06,
    1.13302723198169593e-06,
    -2.05633841697760707e-07,
    6.11609510448141609e-09,
    5.00200764446922295e-09,
    -1.18127457048702004e-09,
    1.04342671169110054e-10,
    7.78226343990507081e-12,
    -3.69680561864220598e-12,
    5.10037028745447575e-13,
    -2.05832605356650664e-14,
    -5.34812253942301782e-15,
    1.22677862823826084e-15,
    -1.18125930169745883e-16,
    1.18669225475160037e-18,
    1.41238065531803186e-18,
    -2.29874568443537022e-19,
    1.71440632192733743e-20,
    1.33735173049369309e-22,
];

/// `1/Γ(w)` for `|w - 1| <= 1`.
fn rgamma_near_one(w: ComplexScalar) -> ComplexScalar {
    let t = w - 1.0;
    let mut acc = ComplexScalar::new(0.0, 0.0);
    for c in RGAMMA_TAYLOR.iter().rev() {
        acc = acc * t + *c;
    }
    acc
}

/// `Γ(z)` as a [`Scaled`] value.
///
/// Near the real axis the argument is moved into `[1/2, 3/2]` by the
/// recurrence, so the result is a short Taylor sum times an exact-exponent
/// product. Elsewhere large arguments are shifted down before Lanczos.
pub fn gamma_scaled(z: ComplexScalar) -> Result<Scaled> {
    if near_pole(z) {
        return Err(Error::Pole {
            what: "gamma_scaled",
            at: z.re,
        });
    }
    if z.im.abs() <= 0.5 && z.re.abs() <= 1e5 {
        let shift = (z.re - 1.0).round();
        let w = z - shift;
        if shift >= 0.0 {
            return Ok(pochhammer_scaled_product(w, shift as usize) / Scaled::from_c(rgamma_near_one(w)));
        }
        // Γ(z) = Γ(w) / (z)_{-shift}
        return Ok((Scaled::from_c(rgamma_near_one(w)) * pochhammer_scaled_product(z, (-shift) as usize)).recip());
    }
    if z.re < 0.5 {
        // Γ(z) = π / (sin(πz) Γ(1-z))
        let s = Scaled::from_ln(ln_sin(z * PI));
        return Ok(Scaled::from_real(PI) / (s * gamma_scaled(-z + 1.0)?));
    }
    if z.re <= 20.0 {
        return Ok(Scaled::from_ln(lanczos_ln_gamma(z)));
    }
    let shift = (z.re - 10.0).floor();
    if shift > 1e5 {
        return Ok(Scaled::from_ln(log_gamma(z)?));
    }
    let w = z - shift;
    Ok(Scaled::from_ln(lanczos_ln_gamma(w)) * pochhammer_scaled_product(w, shift as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::re;

    fn close(a: ComplexScalar, b: ComplexScalar, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1e-300)
    }

    #[test]
    fn trivial_values() {
        assert!(log_gamma(re(1.0)).unwrap().norm() < 1e-15);
        assert!(close(log_gamma(re(5.0)).unwrap(), re(24.0f64.ln()), 1e-15));
        assert_eq!(gamma(re(5.0)).unwrap(), re(24.0));
    }

    #[test]
    fn poles_are_rejected() {
        for n in 0..5 {
            assert!(matches!(
                log_gamma(re(-(n as f64))),
                Err(Error::Pole { .. })
            ));
        }
        assert_eq!(rgamma(re(-3.0)), re(0.0));
    }

    #[test]
    fn pochhammer_examples() {
        let z = ComplexScalar::new(0.3, -1.7);
        assert_eq!(pochhammer(z, 0), re(1.0));
        assert_eq!(pochhammer(re(3.0), 4), re(360.0));
        assert!(close(pochhammer(re(0.5), 3), re(1.875), 1e-15));
    }

    #[test]
    fn scaled_pochhammer_matches_product_and_gamma_ratio() {
        let z = ComplexScalar::new(0.7, 0.4);
        for n in [0usize, 5, 47, 48, 49, 120] {
            let direct = pochhammer(z, n);
            let s = pochhammer_scaled(z, n).to_c();
            assert!(close(s, direct, 1e-12), "n={n}: {s} vs {direct}");
        }
        assert!(pochhammer_scaled(re(-3.0), 60).is_zero());
        let big = pochhammer_scaled(re(1.5), 400);
        let expect = log_gamma(re(401.5)).unwrap() - log_gamma(re(1.5)).unwrap();
        assert!((big.ln_abs() - expect.re).abs() < 1e-10);
    }

    #[test]
    fn reflection_region_large_imaginary_part() {
        // |Γ(iy)|² = π / (y sinh πy)
        let y = 40.0;
        let l = log_gamma(ComplexScalar::new(0.0, y)).unwrap();
        let expect = 0.5 * (PI.ln() - y.ln() - (PI * y - 2.0f64.ln() + (1.0 - (-2.0 * PI * y).exp()).ln()));
        assert!((l.re - expect).abs() < 1e-12);
    }
}
