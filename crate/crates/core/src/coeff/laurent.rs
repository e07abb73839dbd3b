use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::Ring;
use crate::error::{Error, Result};

/// A Laurent polynomial `Σ c_e q^e` in one variable `q`.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of polynomials. Exponent arithmetic is checked; overflow panics.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i32, C>,
}

fn add_exp(a: i32, b: i32) -> i32 {
    a.checked_add(b).expect("Laurent exponent overflow")
}

impl<C: Ring> LaurentPoly<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·q^exp`.
    pub fn monomial(c: C, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(C::one(), exp)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i32, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i32) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exp(*e, k), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (*e, v.clone() * c.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Value at q = 1, the sum of the coefficients.
    pub fn eval_q1(&self) -> C {
        self.terms.values().cloned().fold(C::zero(), |a, b| a + b)
    }

    /// The exact quotient `p / (q − 1)`; fails unless `p(1) = 0`.
    pub fn div_qminus1(&self) -> Result<Self> {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return Ok(Self::zero());
        };
        let mut quotient = Self::zero();
        let mut running = C::zero();
        for e in (lo + 1..=hi).rev() {
            running = running + self.coeff(e);
            quotient.add_term(e - 1, running.clone());
        }
        if !(self.coeff(lo) + running).is_zero() {
            return Err(Error::InexactDivision(
                "polynomial does not vanish at q = 1".into(),
            ));
        }
        Ok(quotient)
    }

    /// True for `±q^k`.
    pub fn is_unit_monomial(&self) -> bool {
        match self.terms.values().next() {
            Some(c) if self.terms.len() == 1 => c.is_one() || (-c.clone()).is_one(),
            _ => false,
        }
    }

    /// Inverse of a unit `±q^k`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit_monomial() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        let exp = e.checked_neg().expect("Laurent exponent overflow");
        Some(Self::monomial(c.clone(), exp))
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl<C: Ring + Integer> LaurentPoly<C> {
    /// Exact division; fails if the divisor does not divide `self` in
    /// the Laurent ring over `C`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (Some(d_lo), Some(d_hi)) = (divisor.min_exp(), divisor.max_exp()) else {
            return Err(Error::InexactDivision("division by zero".into()));
        };
        let Some(lo) = self.min_exp() else {
            return Ok(Self::zero());
        };
        let floor = lo - d_lo;
        let d_lead = divisor.coeff(d_hi);
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some(hi) = rem.max_exp() {
            let t = hi - d_hi;
            let (c, r) = rem.coeff(hi).div_rem(&d_lead);
            if t < floor || !r.is_zero() {
                return Err(Error::InexactDivision(
                    "divisor does not divide the dividend".into(),
                ));
            }
            let step = Self::monomial(c, t);
            rem = &rem - &(&step * divisor);
            quotient = quotient + step;
        }
        Ok(quotient)
    }
}

impl<C: Ring> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for LaurentPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Ring> Add<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Ring> Sub<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Ring> Mul<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(add_exp(*a, *b), x.clone() * y.clone());
            }
        }
        out
    }
}

impl<C: Ring> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Ring> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<C: Ring> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<C: Ring> $tr for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<C: Ring> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

/// Renders as e.g. `3*q^2 - q^-1 + 7`, highest power first.
impl<C: Ring + Signed + fmt::Display> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let power = match *e {
                0 => String::new(),
                1 => "q".to_string(),
                e => format!("q^{e}"),
            };
            if power.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{abs}*{power}")?;
            }
        }
        Ok(())
    }
}

/// JSON form: `{"<exponent>": "<coefficient>"}`.
impl<C: fmt::Display> Serialize for LaurentPoly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de, C: Ring + FromStr> Deserialize<'de> for LaurentPoly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct LaurentVisitor<C>(std::marker::PhantomData<C>);

        impl<'de, C: Ring + FromStr> Visitor<'de> for LaurentVisitor<C> {
            type Value = LaurentPoly<C>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a map from exponent strings to coefficient strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<Self::Value, A::Error> {
                let mut p = LaurentPoly::zero();
                while let Some((k, v)) = access.next_entry::<String, String>()? {
                    let e: i32 = k.parse().map_err(de::Error::custom)?;
                    let c: C = v
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad coefficient {v:?}")))?;
                    p.add_term(e, c);
                }
                Ok(p)
            }
        }

        deserializer.deserialize_map(LaurentVisitor(std::marker::PhantomData))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type L = LaurentPoly<BigInt>;

    fn lp(terms: &[(i32, i64)]) -> L {
        L::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn renders_mixed_signs() {
        let p = lp(&[(2, 3), (-1, -1), (0, 7)]);
        assert_eq!(p.to_string(), "3*q^2 + 7 - q^-1");
        assert_eq!(lp(&[(-1, -1)]).to_string(), "-q^-1");
        assert_eq!(L::zero().to_string(), "0");
        assert_eq!(lp(&[(1, 1), (-1, -1)]).to_string(), "q - q^-1");
    }

    #[test]
    fn no_zero_coefficients_are_stored() {
        let p = lp(&[(1, 2)]);
        let d = &p - &p;
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
        assert_eq!(lp(&[(3, 0)]).num_terms(), 0);
    }

    #[test]
    fn evaluation_and_division_by_q_minus_one() {
        assert_eq!(lp(&[(1, 1), (-1, 1)]).eval_q1(), BigInt::from(2));
        // q − q⁻¹ = (q − 1)(1 + q⁻¹)
        let p = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(p.div_qminus1().unwrap(), lp(&[(0, 1), (-1, 1)]));
        assert_eq!(lp(&[(2, 1), (0, -1)]).div_qminus1().unwrap(), lp(&[(1, 1), (0, 1)]));
        assert!(lp(&[(1, 1), (-1, 1)]).div_qminus1().is_err());
        assert!(L::zero().div_qminus1().unwrap().is_zero());
    }

    #[test]
    fn exact_division() {
        let a = lp(&[(3, 1), (-3, -1)]);
        let b = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(a.exact_div(&b).unwrap(), lp(&[(2, 1), (0, 1), (-2, 1)]));
        assert!(lp(&[(0, 1)]).exact_div(&lp(&[(0, 2)])).is_err());
        assert!(lp(&[(2, 1), (0, 1)]).exact_div(&lp(&[(1, 1), (0, 1)])).is_err());
        assert!(a.exact_div(&L::zero()).is_err());
    }

    #[test]
    fn unit_monomials() {
        let u = lp(&[(-3, -1)]);
        assert!(u.is_unit_monomial());
        assert_eq!(&u * &u.unit_inverse().unwrap(), L::one());
        assert!(!lp(&[(0, 2)]).is_unit_monomial());
        assert!(!lp(&[(0, 1), (1, 1)]).is_unit_monomial());
    }

    #[test]
    fn json_round_trip() {
        let p = lp(&[(2, 3), (-1, -12345678901234)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"-1":"-12345678901234","2":"3"}"#);
        let back: L = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn generic_over_machine_integers() {
        let p = LaurentPoly::<i64>::from_terms([(1, 1), (-1, 1)]);
        let sq = &p * &p;
        assert_eq!(sq, LaurentPoly::from_terms([(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(sq.to_string(), "q^2 + 2 + q^-2");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_laurent() -> impl Strategy<Value = L> {
            proptest::collection::vec((-3i32..=3, -4i64..=4), 0..5).prop_map(|v| lp(&v))
        }

        proptest! {
            #[test]
            fn ring_axioms(a in small_laurent(), b in small_laurent(), c in small_laurent()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a - &b) + &b, a.clone());
            }

            #[test]
            fn division_inverts_multiplication(a in small_laurent(), b in small_laurent()) {
                prop_assume!(!b.is_zero());
                prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
            }

            #[test]
            fn quotient_by_q_minus_one(a in small_laurent()) {
                let q_minus_1 = lp(&[(1, 1), (0, -1)]);
                let p = &a * &q_minus_1;
                prop_assert_eq!(p.div_qminus1().unwrap(), a);
            }
        }
    }
}
