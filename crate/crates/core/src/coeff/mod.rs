//! Exact coefficient rings.
//!
//! Everything in this crate is computed over ℤ\[q, q⁻¹\] or its fraction
//! field ℚ(q), with ℚ used for the q = 1 specialization. The traits below
//! are the small amount of structure the polynomial layers need from a
//! coefficient type.

mod laurent;
mod qnum;
mod ratfunc;

pub use laurent::LaurentPoly;
pub use qnum::{q_binom, q_fact, q_int};
pub use ratfunc::RatFunc;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Laurent polynomials with arbitrary-precision integer coefficients.
pub type Laurent = LaurentPoly<BigInt>;

/// A commutative ring with exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
        + Send
        + Sync
{
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {}

impl Field for BigRational {}
impl Field for RatFunc {}

/// A coefficient ring receiving the structure constants of the quantum
/// matrix algebra, which all live in ℤ\[q, q⁻¹\].
///
/// For ℚ and ℤ the map is evaluation at q = 1, so a polynomial algebra over
/// those rings is the classical (commutative) limit.
pub trait Coeff: Ring {
    fn from_laurent(p: &Laurent) -> Self;
}

impl Coeff for Laurent {
    fn from_laurent(p: &Laurent) -> Self {
        p.clone()
    }
}

impl Coeff for RatFunc {
    fn from_laurent(p: &Laurent) -> Self {
        RatFunc::from(p.clone())
    }
}

impl Coeff for BigRational {
    fn from_laurent(p: &Laurent) -> Self {
        BigRational::from_integer(p.eval_q1())
    }
}

impl Coeff for BigInt {
    fn from_laurent(p: &Laurent) -> Self {
        p.eval_q1()
    }
}
