use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Laurent;
use crate::error::{Error, Result};

/// An element `num / den` of the fraction field ℚ(q).
///
/// Normal form: `gcd(num, den) = 1` in ℤ\[q\], `den` is an ordinary
/// polynomial with nonzero constant term and positive leading coefficient.
/// Any power of `q` lives in `num`. Under this normalization equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RatFunc {
    num: Laurent,
    den: Laurent,
}

/// Dense coefficient vector, constant term first.
type Dense = Vec<BigInt>;

fn split_valuation(p: &Laurent) -> (i32, Dense) {
    let lo = p.min_exp().expect("nonzero polynomial");
    let hi = p.max_exp().expect("nonzero polynomial");
    let dense = (lo..=hi).map(|e| p.coeff(e)).collect();
    (lo, dense)
}

fn from_dense(dense: &[BigInt], shift: i32) -> Laurent {
    Laurent::from_terms(
        dense
            .iter()
            .enumerate()
            .map(|(i, c)| (shift + i as i32, c.clone())),
    )
}

fn trim(a: &mut Dense) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(a: &[BigInt]) -> Dense {
    let c = content(a);
    a.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero).
fn prem(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut r: Dense = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Greatest common divisor in ℤ\[q\] via primitive remainder sequences,
/// normalized to positive leading coefficient.
fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> Dense {
    let c = content(a).gcd(&content(b));
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { primitive(&r) };
    }
    let mut g: Dense = x.iter().map(|v| v * &c).collect();
    if g.last().is_some_and(|l| l.is_negative()) {
        for v in g.iter_mut() {
            *v = -v.clone();
        }
    }
    g
}

impl RatFunc {
    pub fn new(num: Laurent, den: Laurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Laurent, den: Laurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(inv) = den.unit_inverse() {
            return Self {
                num: &num * &inv,
                den: Laurent::one(),
            };
        }
        let (vn, pn) = split_valuation(&num);
        let (vd, pd) = split_valuation(&den);
        let g = dense_gcd(&pn, &pd);
        let g = from_dense(&g, 0);
        let mut n = from_dense(&pn, 0).exact_div(&g).expect("gcd divides");
        let mut d = from_dense(&pd, 0).exact_div(&g).expect("gcd divides");
        if d.leading_coeff().is_some_and(|c| c.is_negative()) {
            n = -n;
            d = -d;
        }
        Self {
            num: n.shift(vn - vd),
            den: d,
        }
    }

    pub fn numer(&self) -> &Laurent {
        &self.num
    }

    pub fn denom(&self) -> &Laurent {
        &self.den
    }

    /// The value as a Laurent polynomial, if it is one.
    pub fn as_laurent(&self) -> Option<&Laurent> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }
}

impl From<Laurent> for RatFunc {
    fn from(p: Laurent) -> Self {
        Self {
            num: p,
            den: Laurent::one(),
        }
    }
}

impl From<i64> for RatFunc {
    fn from(v: i64) -> Self {
        Laurent::constant(BigInt::from(v)).into()
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        Laurent::zero().into()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Laurent::one().into()
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero in Q(q)");
        RatFunc::normalized(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
