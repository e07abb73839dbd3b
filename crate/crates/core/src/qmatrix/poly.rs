use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_rational::BigRational;
use num_traits::One;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use super::monomial::{Dims, Monomial};
use super::straighten::{self, Expansion};
use crate::coeff::{Coeff, Laurent, Ring};
use crate::error::{Error, Result};

/// How two normal monomials multiply.
pub trait Multiplication: Copy + Default + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static {
    const QUANTUM: bool;
    fn mul_monomials(dims: Dims, a: &Monomial, b: &Monomial) -> Expansion;
}

/// The quantum matrix algebra `R_q[M_{m,n}]`.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq, Hash)]
pub struct Quantum;

/// The polynomial ring `K[x_{ij}]`.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq, Hash)]
pub struct Commutative;

impl Multiplication for Quantum {
    const QUANTUM: bool = true;
    fn mul_monomials(dims: Dims, a: &Monomial, b: &Monomial) -> Expansion {
        straighten::mul_monomials(dims, a, b)
    }
}

impl Multiplication for Commutative {
    const QUANTUM: bool = false;
    fn mul_monomials(_: Dims, a: &Monomial, b: &Monomial) -> Expansion {
        Rc::new(vec![(a.mul(b), Laurent::one())])
    }
}

/// A polynomial in the generators `x_{ij}` in normal form: a finite map
/// from normal-order monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MatPoly<C, A> {
    dims: Dims,
    terms: BTreeMap<Monomial, C>,
    _alg: PhantomData<A>,
}

/// Element of `R_q[M_{m,n}]`.
pub type QMPoly<C = Laurent> = MatPoly<C, Quantum>;

/// Commutative polynomial in the matrix coordinates.
pub type CPoly<C = BigRational> = MatPoly<C, Commutative>;

/// `(a_1, …, a_m, b_1, …, b_n)` with `deg x_{ij} = e_i − f_j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct MultiDeg(pub Vec<i64>);

impl MultiDeg {
    /// `Σ_{i∈rows} e_i − Σ_{j∈cols} f_j`.
    pub fn of_minor(dims: Dims, rows: &[usize], cols: &[usize]) -> Self {
        let mut v = vec![0i64; dims.m + dims.n];
        for &i in rows {
            v[i - 1] += 1;
        }
        for &j in cols {
            v[dims.m + j - 1] -= 1;
        }
        Self(v)
    }

    fn of_monomial(dims: Dims, mono: &Monomial) -> Self {
        let mut v = vec![0i64; dims.m + dims.n];
        for (idx, &e) in mono.exps().iter().enumerate() {
            let (i, j) = dims.pos(idx);
            v[i - 1] += e as i64;
            v[dims.m + j - 1] -= e as i64;
        }
        Self(v)
    }
}

impl<C: Ring, A: Multiplication> MatPoly<C, A> {
    pub fn zero(dims: Dims) -> Self {
        Self {
            dims,
            terms: BTreeMap::new(),
            _alg: PhantomData,
        }
    }

    pub fn constant(dims: Dims, c: C) -> Self {
        Self::term(dims, Monomial::one(dims.nvars()), c)
    }

    pub fn one(dims: Dims) -> Self {
        Self::constant(dims, C::one())
    }

    pub fn term(dims: Dims, mono: Monomial, c: C) -> Self {
        assert_eq!(mono.nvars(), dims.nvars(), "monomial arity");
        let mut p = Self::zero(dims);
        p.add_term(mono, c);
        p
    }

    /// The generator `x_{ij}`.
    pub fn var(dims: Dims, i: usize, j: usize) -> Self {
        Self::term(dims, Monomial::var(dims.nvars(), dims.var(i, j)), C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(dims: Dims, iter: I) -> Self {
        let mut p = Self::zero(dims);
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> C {
        self.terms.get(mono).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, C)> {
        self.terms.pop_last()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(
            self.dims,
            self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())),
        )
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MatPoly<D, A> {
        MatPoly::from_terms(self.dims, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// The ℤ^{m+n} degree when all terms share it.
    pub fn multidegree(&self) -> Option<MultiDeg> {
        let mut degs = self.terms.keys().map(|m| MultiDeg::of_monomial(self.dims, m));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// True for zero and for elements whose terms share a multidegree.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.multidegree().is_some()
    }

    fn check_dims(&self, other: &Self) {
        assert_eq!(self.dims, other.dims, "polynomials over different matrix shapes");
    }
}

impl<C: Coeff, A: Multiplication> MatPoly<C, A> {
    /// `x^mono · self`.
    pub fn mul_monomial_left(&self, mono: &Monomial) -> Self {
        let mut out = Self::zero(self.dims);
        for (m, c) in &self.terms {
            for (m2, c2) in A::mul_monomials(self.dims, mono, m).iter() {
                out.add_term(m2.clone(), c.clone() * C::from_laurent(c2));
            }
        }
        out
    }

    /// `self · x^mono`.
    pub fn mul_monomial_right(&self, mono: &Monomial) -> Self {
        let mut out = Self::zero(self.dims);
        for (m, c) in &self.terms {
            for (m2, c2) in A::mul_monomials(self.dims, m, mono).iter() {
                out.add_term(m2.clone(), c.clone() * C::from_laurent(c2));
            }
        }
        out
    }

    /// The automorphism `x_{ij} ↦ q^{a_i − b_j} x_{ij}` for
    /// `weights = (a_1, …, a_m, b_1, …, b_n)`.
    pub fn scale_action(&self, weights: &[i64]) -> Result<Self> {
        let d = self.dims;
        if weights.len() != d.m + d.n {
            return Err(Error::SizeMismatch {
                expected: d.m + d.n,
                found: weights.len(),
            });
        }
        let mut out = Self::zero(d);
        for (mono, c) in &self.terms {
            let deg = MultiDeg::of_monomial(d, mono);
            let exp: i64 = deg.0.iter().zip(weights).map(|(x, w)| x * w).sum();
            let exp = i32::try_from(exp).expect("grading exponent overflow");
            out.add_term(mono.clone(), c.clone() * C::from_laurent(&Laurent::q_pow(exp)));
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.dims);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl MatPoly<Laurent, Quantum> {
    /// Evaluates every coefficient at q = 1, landing in the commutative
    /// polynomial ring over ℚ.
    pub fn specialize_q1(&self) -> CPoly {
        MatPoly::from_terms(
            self.dims,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), BigRational::from_integer(c.eval_q1()))),
        )
    }
}

impl<C: Ring, A: Multiplication> Add<&MatPoly<C, A>> for &MatPoly<C, A> {
    type Output = MatPoly<C, A>;
    fn add(self, rhs: &MatPoly<C, A>) -> MatPoly<C, A> {
        self.check_dims(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Ring, A: Multiplication> Sub<&MatPoly<C, A>> for &MatPoly<C, A> {
    type Output = MatPoly<C, A>;
    fn sub(self, rhs: &MatPoly<C, A>) -> MatPoly<C, A> {
        self.check_dims(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<C: Ring, A: Multiplication> Neg for &MatPoly<C, A> {
    type Output = MatPoly<C, A>;
    fn neg(self) -> MatPoly<C, A> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<C: Coeff, A: Multiplication> Mul<&MatPoly<C, A>> for &MatPoly<C, A> {
    type Output = MatPoly<C, A>;
    fn mul(self, rhs: &MatPoly<C, A>) -> MatPoly<C, A> {
        self.check_dims(rhs);
        let mut out = MatPoly::zero(self.dims);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let cab = ca.clone() * cb.clone();
                for (m, c) in A::mul_monomials(self.dims, a, b).iter() {
                    out.add_term(m.clone(), cab.clone() * C::from_laurent(c));
                }
            }
        }
        out
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident, $bound:ident) => {
        impl<C: $bound, A: Multiplication> $tr for MatPoly<C, A> {
            type Output = MatPoly<C, A>;
            fn $m(self, rhs: MatPoly<C, A>) -> MatPoly<C, A> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add, Ring);
owned_binop!(Sub, sub, Ring);
owned_binop!(Mul, mul, Coeff);

impl<C: Ring, A: Multiplication> Neg for MatPoly<C, A> {
    type Output = MatPoly<C, A>;
    fn neg(self) -> MatPoly<C, A> {
        -&self
    }
}

/// Human-readable form such as `x11*x22 - q*x12*x21`, leading term first.
impl<C: Ring + fmt::Display, A: Multiplication> fmt::Display for MatPoly<C, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (mono, c)) in self.terms.iter().rev().enumerate() {
            let s = c.to_string();
            let (neg, body) = if s.contains(' ') {
                (false, format!("({s})"))
            } else if let Some(rest) = s.strip_prefix('-') {
                (true, rest.to_string())
            } else {
                (false, s)
            };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let m = mono.render(self.dims);
            match (body.as_str(), mono.is_one()) {
                (_, true) => write!(f, "{body}")?,
                ("1", false) => write!(f, "{m}")?,
                (_, false) => write!(f, "{body}*{m}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermJson<'a, C> {
    monomial: Vec<[usize; 3]>,
    coeff: &'a C,
}

/// JSON term list `[{"monomial": [[i, j, exp], …], "coeff": …}, …]`,
/// leading term first.
impl<C: Serialize, A> Serialize for MatPoly<C, A> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms.iter().rev() {
            seq.serialize_element(&TermJson {
                monomial: m.triples(self.dims),
                coeff: c,
            })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RatFunc;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn dims() -> Dims {
        Dims::new(2, 2)
    }

    fn x(i: usize, j: usize) -> QMPoly {
        QMPoly::var(dims(), i, j)
    }

    fn q_minus_q_inv() -> Laurent {
        &Laurent::q() - &Laurent::q_pow(-1)
    }

    #[test]
    fn straightening_examples() {
        assert_eq!(&x(2, 1) * &x(1, 2), &x(1, 2) * &x(2, 1));
        let lhs = &x(2, 2) * &x(1, 1);
        let rhs = &(&x(1, 1) * &x(2, 2)) - &(&x(1, 2) * &x(2, 1)).scale(&q_minus_q_inv());
        assert_eq!(lhs, rhs);
        let f = &x(1, 1) + &x(2, 2);
        assert_eq!(&QMPoly::one(dims()) * &f, f);
        // x12 x11 = q^{-1} x11 x12
        assert_eq!(&x(1, 2) * &x(1, 1), (&x(1, 1) * &x(1, 2)).scale(&Laurent::q_pow(-1)));
    }

    #[test]
    fn rendering_and_json() {
        let det = &(&x(1, 1) * &x(2, 2)) - &(&x(1, 2) * &x(2, 1)).scale(&Laurent::q());
        assert_eq!(det.to_string(), "x11*x22 - q*x12*x21");
        let odd = &(&x(2, 2) * &x(1, 1)) + &QMPoly::constant(dims(), Laurent::from_terms([(0, BigInt::from(3))]));
        assert_eq!(odd.to_string(), "x11*x22 + (-q + q^-1)*x12*x21 + 3");
        let json = serde_json::to_value(&det).unwrap();
        assert_eq!(json[0]["monomial"], serde_json::json!([[1, 1, 1], [2, 2, 1]]));
        assert_eq!(json[1]["coeff"], serde_json::json!({"1": "-1"}));
    }

    #[test]
    fn grading() {
        assert_eq!(x(1, 2).multidegree().unwrap().0, vec![1, 0, 0, -1]);
        let det = &(&x(1, 1) * &x(2, 2)) - &(&x(1, 2) * &x(2, 1)).scale(&Laurent::q());
        assert_eq!(det.multidegree().unwrap().0, vec![1, 1, -1, -1]);
        assert!(!(&x(1, 1) + &x(1, 2)).is_homogeneous());
        let scaled = det.scale_action(&[1, 0, 0, 0]).unwrap();
        assert_eq!(scaled, det.scale(&Laurent::q()));
        assert!(det.scale_action(&[1]).is_err());
    }

    #[test]
    fn specialization() {
        let det = &(&x(1, 1) * &x(2, 2)) - &(&x(1, 2) * &x(2, 1)).scale(&Laurent::q());
        let c = det.specialize_q1();
        let cx = |i, j| CPoly::var(dims(), i, j);
        assert_eq!(c, &(&cx(1, 1) * &cx(2, 2)) - &(&cx(1, 2) * &cx(2, 1)));
    }

    #[test]
    fn coefficients_in_the_fraction_field() {
        let y = |i, j| QMPoly::<RatFunc>::var(dims(), i, j);
        let lhs = &y(2, 2) * &y(1, 1);
        let expect = (&x(2, 2) * &x(1, 1)).map_coeffs(|c| RatFunc::from(c.clone()));
        assert_eq!(lhs, expect);
    }

    fn monomial_strategy(d: Dims) -> impl Strategy<Value = QMPoly> {
        proptest::collection::vec(0u32..=2, d.nvars()).prop_map(move |e| {
            QMPoly::term(d, Monomial::from_exps(e), Laurent::one())
        })
    }

    fn shape_and_triple() -> impl Strategy<Value = (QMPoly, QMPoly, QMPoly)> {
        (1usize..=3, 1usize..=3).prop_flat_map(|(m, n)| {
            let d = Dims::new(m, n);
            (monomial_strategy(d), monomial_strategy(d), monomial_strategy(d))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn normal_form_is_associative((f, g, h) in shape_and_triple()) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        }

        #[test]
        fn specialization_is_multiplicative((f, g, _h) in shape_and_triple()) {
            prop_assert_eq!((&f * &g).specialize_q1(), &f.specialize_q1() * &g.specialize_q1());
        }

        #[test]
        fn products_of_homogeneous_elements_are_homogeneous((f, g, _h) in shape_and_triple()) {
            let p = &f * &g;
            prop_assert!(p.is_homogeneous());
            prop_assert_eq!(p.leading_monomial().unwrap(), &f.leading_monomial().unwrap().mul(g.leading_monomial().unwrap()));
        }
    }
}
