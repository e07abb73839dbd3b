//! Exact symbolic verification of the torus-invariant prime ideals of the
//! quantum matrix algebra `R_q[M_{m,n}]` and of the matching leaf
//! stratification of the matrix affine Poisson space.
//!
//! Layers, bottom up: [`coeff`] (ℤ\[q, q⁻¹\] and ℚ(q)), [`weyl`]
//! (permutations, Bruhat order), [`subsets`] (index sets and minor
//! labels), [`qmatrix`] (normal forms, quantum minors), [`grobner`],
//! [`demazure`] (quantum exterior algebra), [`poisson`], and the
//! [`suites`] that tie them together.

pub mod coeff;
pub mod demazure;
pub mod error;
pub mod grobner;
pub mod poisson;
pub mod qmatrix;
pub mod subsets;
pub mod suites;
pub mod weyl;

pub use coeff::{Laurent, LaurentPoly, RatFunc};
pub use error::{Error, Result};
pub use grobner::{GroebnerBasis, QGroebner};
pub use poisson::RatMatrix;
pub use qmatrix::{CPoly, Dims, MatPoly, Monomial, MultiDeg, QMPoly};
pub use subsets::{IndexSet, MinorSpec};
pub use weyl::Perm;

/// Commutative polynomials over ℤ, the q = 1 image of Laurent coefficients.
pub type IntPoly = CPoly<num_bigint::BigInt>;
