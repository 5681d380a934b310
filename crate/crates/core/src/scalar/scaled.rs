use core::ops::{Div, Mul, MulAssign, Neg};

use super::ComplexScalar;

/// A complex value carried as `mant · 2^exp`.
///
/// Coefficients built from long gamma and Pochhammer products overflow or
/// underflow double precision long before the series they belong to stops
/// contributing, so they are assembled in this form and only collapsed to a
/// plain value once multiplied into a term of moderate size. The exponent is
/// an exact integer, so long products lose no more than their mantissas do.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Scaled {
    mant: ComplexScalar,
    exp: i64,
}

/// `x · 2^n` without intermediate overflow.
fn ldexp(mut x: f64, mut n: i64) -> f64 {
    while n > 1000 {
        x *= 2f64.powi(1000);
        n -= 1000;
    }
    while n < -1000 {
        x *= 2f64.powi(-1000);
        n += 1000;
    }
    x * 2f64.powi(n as i32)
}

/// Binary exponent `e` with `r / 2^e` in `[0.5, 1)` for finite `r > 0`.
fn frexp_exp(r: f64) -> i64 {
    let bits = r.to_bits();
    let field = ((bits >> 52) & 0x7ff) as i64;
    if field == 0 {
        // subnormal
        return frexp_exp(r * 2f64.powi(64)) - 64;
    }
    field - 1022
}

impl Scaled {
    pub const ONE: Scaled = Scaled {
        mant: ComplexScalar::new(1.0, 0.0),
        exp: 0,
    };
    pub const ZERO: Scaled = Scaled {
        mant: ComplexScalar::new(0.0, 0.0),
        exp: 0,
    };

    pub fn from_c(z: ComplexScalar) -> Self {
        Scaled { mant: z, exp: 0 }.normalized()
    }

    pub fn from_real(x: f64) -> Self {
        Self::from_c(ComplexScalar::new(x, 0.0))
    }

    /// Value `exp(ln)` for a complex logarithm `ln`.
    pub fn from_ln(ln: ComplexScalar) -> Self {
        if ln.re == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        if !ln.re.is_finite() {
            return Scaled {
                mant: ComplexScalar::new(f64::NAN, f64::NAN),
                exp: 0,
            };
        }
        let k = (ln.re / core::f64::consts::LN_2).floor();
        let r = ln.re - k * core::f64::consts::LN_2;
        Scaled {
            mant: ComplexScalar::from_polar(r.exp(), ln.im),
            exp: k as i64,
        }
        .normalized()
    }

    fn normalized(self) -> Self {
        let r = self.mant.re.abs().max(self.mant.im.abs());
        if r == 0.0 || !r.is_finite() {
            return self;
        }
        let e = frexp_exp(r);
        Scaled {
            mant: ComplexScalar::new(ldexp(self.mant.re, -e), ldexp(self.mant.im, -e)),
            exp: self.exp + e,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.re == 0.0 && self.mant.im == 0.0
    }

    /// Natural log of the magnitude; `-inf` for zero.
    pub fn ln_abs(&self) -> f64 {
        let r = self.mant.norm();
        if r == 0.0 {
            f64::NEG_INFINITY
        } else {
            self.exp as f64 * core::f64::consts::LN_2 + r.ln()
        }
    }

    pub fn to_c(&self) -> ComplexScalar {
        if self.is_zero() {
            return ComplexScalar::new(0.0, 0.0);
        }
        ComplexScalar::new(ldexp(self.mant.re, self.exp), ldexp(self.mant.im, self.exp))
    }

    pub fn is_finite(&self) -> bool {
        self.mant.re.is_finite() && self.mant.im.is_finite()
    }

    pub fn recip(&self) -> Self {
        Scaled {
            mant: self.mant.inv(),
            exp: -self.exp,
        }
        .normalized()
    }

    pub fn scale(self, z: ComplexScalar) -> Self {
        self * Scaled::from_c(z)
    }

    /// Integer power by repeated squaring.
    pub fn powi(self, n: i64) -> Self {
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Scaled::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Principal power `z^e`. The integral part of `Re e` is applied by
    /// squaring so that large exponents keep full relative accuracy.
    pub fn powc(z: ComplexScalar, e: ComplexScalar) -> Self {
        if z == ComplexScalar::new(0.0, 0.0) {
            return if e == ComplexScalar::new(0.0, 0.0) {
                Scaled::ONE
            } else {
                Scaled::ZERO
            };
        }
        let n = e.re.round();
        let whole = if n.abs() < 1e15 {
            Scaled::from_c(z).powi(n as i64)
        } else {
            return Scaled::from_ln(e * z.ln());
        };
        let frac = e - n;
        if frac == ComplexScalar::new(0.0, 0.0) {
            return whole;
        }
        whole * Scaled::from_ln(frac * z.ln())
    }
}

impl Mul for Scaled {
    type Output = Scaled;
    fn mul(self, rhs: Scaled) -> Scaled {
        Scaled {
            mant: self.mant * rhs.mant,
            exp: self.exp + rhs.exp,
        }
        .normalized()
    }
}

impl MulAssign for Scaled {
    fn mul_assign(&mut self, rhs: Scaled) {
        *self = *self * rhs;
    }
}

impl Div for Scaled {
    type Output = Scaled;
    fn div(self, rhs: Scaled) -> Scaled {
        self * rhs.recip()
    }
}

impl Neg for Scaled {
    type Output = Scaled;
    fn neg(self) -> Scaled {
        Scaled {
            mant: -self.mant,
            exp: self.exp,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_beyond_double_range_collapse_correctly() {
        let big = Scaled::from_ln(ComplexScalar::new(800.0, 0.3));
        let small = Scaled::from_ln(ComplexScalar::new(-795.0, -0.3));
        let v = (big * small).to_c();
        assert!((v - ComplexScalar::new(5.0f64.exp(), 0.0)).norm() < 1e-10 * 5.0f64.exp());
    }

    #[test]
    fn zero_is_absorbing() {
        let z = Scaled::ZERO * Scaled::from_real(3.0);
        assert!(z.is_zero());
        assert_eq!(z.to_c(), ComplexScalar::new(0.0, 0.0));
        assert_eq!(z.ln_abs(), f64::NEG_INFINITY);
    }

    #[test]
    fn powers_round_trip() {
        let z = ComplexScalar::new(0.3, 0.0);
        let p = Scaled::powc(z, ComplexScalar::new(700.5, 0.0)) * Scaled::powc(z, ComplexScalar::new(-700.0, 0.0));
        assert!((p.to_c().re - 0.3f64.sqrt()).abs() < 1e-12);
        let q = Scaled::from_real(3.0).powi(-3).to_c();
        assert!((q.re - 1.0 / 27.0).abs() < 1e-17);
        let sub = Scaled::from_real(1e-310);
        assert!((sub.to_c().re - 1e-310).abs() < 1e-320);
    }
}
