//! Complex scalar kernels: gamma, Pochhammer, hypergeometric series, Bessel.

mod bessel;
pub(crate) mod dd;
mod gamma;
pub(crate) mod hyper;
mod scaled;

pub use bessel::{bessel_i, bessel_j};
pub use gamma::{
    gamma, gamma_scaled, is_nonpositive_integer, log_gamma, pochhammer, pochhammer_scaled, rgamma, POLE_TOL,
};
pub use hyper::{hyp2f1, hyp2f1_series, kummer_m, phyper, SeriesValue, TruncationControl};
pub use scaled::Scaled;

/// Complex double-precision value used for parameters, arguments and results.
pub type ComplexScalar = num_complex::Complex64;

/// Shorthand constructor for a real value lifted to [`ComplexScalar`].
#[inline]
pub fn re(x: f64) -> ComplexScalar {
    ComplexScalar::new(x, 0.0)
}

pub(crate) fn check_finite(z: ComplexScalar, what: &'static str) -> crate::Result<ComplexScalar> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(crate::Error::NonFinite(what))
    }
}

/// Principal power `base^exp` via `exp(exp * Log base)`; `0^exp` is 0 for
/// `Re exp > 0` and 1 for `exp == 0`.
pub fn cpow(base: ComplexScalar, exp: ComplexScalar) -> ComplexScalar {
    if base == ComplexScalar::new(0.0, 0.0) {
        if exp == ComplexScalar::new(0.0, 0.0) {
            return re(1.0);
        }
        return re(0.0);
    }
    (exp * base.ln()).exp()
}
