//! Generating-function expansions for hypergeometric orthogonal polynomials.
//!
//! The crate evaluates Jacobi, Gegenbauer, Chebyshev, Laguerre and Wilson
//! polynomials, the Legendre/Ferrers functions that appear as expansion
//! coefficients, one-free-parameter connection coefficients, and Gaussian
//! quadrature for the associated orthogonality measures. On top of these sit
//! two declarative registries: generating-function identities whose
//! right-hand sides are re-expanded over a shifted basis, and the definite
//! integrals obtained from them through orthogonality. Both registries come
//! with a verification engine that compares direct evaluation of each side.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod connection;
pub mod error;
pub mod identity;
pub mod integral;
pub mod legendre;
pub mod poly;
pub mod quadrature;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{ComplexScalar, Scaled, SeriesValue, TruncationControl};
