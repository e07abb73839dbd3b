//! The quantum matrix algebra `R_q[M_{m,n}]` and its commutative limit.

mod minors;
mod monomial;
mod poly;
pub mod straighten;

pub use minors::{aq_generators, qminor, qminor_checked, qminor_of, qminor_reversed};
pub use monomial::{Dims, Monomial};
pub use poly::{CPoly, Commutative, MatPoly, MultiDeg, Multiplication, QMPoly, Quantum};
