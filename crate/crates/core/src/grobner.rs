//! Gröbner bases for one-sided and two-sided ideals of `R_q[M_{m,n}]`
//! and of its commutative limit.
//!
//! The quantum matrix algebra is a G-algebra for the degree-lex order with
//! earlier variables heavier: every swap `x_u x_v` (u > v) is a unit times
//! `x_v x_u` plus strictly smaller terms. Hence the leading monomial of a
//! product is the product of the leading monomials, and exponent-vector
//! divisibility decides both left and right reducibility. A two-sided
//! basis is a left basis closed under right multiplication by variables.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{Coeff, Field, RatFunc};
use crate::error::{Error, Result};
use crate::qmatrix::{
    aq_generators, straighten, Dims, MatPoly, Monomial, Multiplication, QMPoly, Quantum,
};
use crate::weyl::{interval_below, Perm};

/// Which multiples of basis elements a basis is closed under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// A reduced, monic Gröbner basis.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<C, A> {
    dims: Dims,
    side: Side,
    gens: Vec<MatPoly<C, A>>,
}

/// Gröbner basis over ℚ(q) in the quantum algebra.
pub type QGroebner = GroebnerBasis<RatFunc, Quantum>;

/// Knobs for a completion run.
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Fail with [`Error::DegreeBoundExceeded`] instead of processing a
    /// pair of larger total degree.
    pub degree_bound: Option<u32>,
}

impl<C: Coeff + Field, A: Multiplication> GroebnerBasis<C, A> {
    pub fn gens(&self) -> &[MatPoly<C, A>] {
        &self.gens
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Normal form of `f`: no term of the result is divisible by a leading
    /// monomial of the basis.
    pub fn reduce(&self, f: &MatPoly<C, A>) -> MatPoly<C, A> {
        reduce_by(f, &self.gens, self.side)
    }

    pub fn contains(&self, f: &MatPoly<C, A>) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(MatPoly::is_homogeneous)
    }
}

fn multiple<C: Coeff, A: Multiplication>(g: &MatPoly<C, A>, mono: &Monomial, side: Side) -> MatPoly<C, A> {
    match side {
        Side::Right => g.mul_monomial_right(mono),
        Side::Left | Side::TwoSided => g.mul_monomial_left(mono),
    }
}

fn monic<C: Coeff + Field, A: Multiplication>(f: MatPoly<C, A>) -> MatPoly<C, A> {
    match f.leading_coeff() {
        Some(c) if !c.is_one() => {
            let inv = C::one() / c.clone();
            f.scale(&inv)
        }
        _ => f,
    }
}

/// Full reduction of `f` by `basis` using multiples on `side`.
pub fn reduce_by<C: Coeff + Field, A: Multiplication>(
    f: &MatPoly<C, A>,
    basis: &[MatPoly<C, A>],
    side: Side,
) -> MatPoly<C, A> {
    let dims = f.dims();
    let mut p = f.clone();
    let mut rest = MatPoly::zero(dims);
    while let Some((lm, lc)) = p.pop_leading() {
        let hit = basis.iter().find_map(|g| {
            let glm = g.leading_monomial()?;
            glm.cofactor_in(&lm).map(|cof| (g, cof))
        });
        match hit {
            Some((g, cof)) => {
                let t = multiple(g, &cof, side);
                let (tlm, tlc) = t.leading_term().expect("nonzero multiple");
                debug_assert_eq!(tlm, &lm);
                let factor = lc / tlc.clone();
                // p already lost its leading term; subtract the tail of factor·t
                let mut tail = t.scale(&factor);
                tail.pop_leading();
                p = &p - &tail;
            }
            None => rest.add_term(lm, lc),
        }
    }
    rest
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Task {
    Pair(usize, usize),
    /// `gens[i] · x_v`, or `x_v · gens[i]` for right bases.
    Closure(usize, usize),
}

fn s_poly<C: Coeff + Field, A: Multiplication>(
    f: &MatPoly<C, A>,
    g: &MatPoly<C, A>,
    side: Side,
) -> MatPoly<C, A> {
    let (a, b) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = a.lcm(b);
    let fa = multiple(f, &a.cofactor_in(&l).unwrap(), side);
    let gb = multiple(g, &b.cofactor_in(&l).unwrap(), side);
    let ca = C::one() / fa.leading_coeff().unwrap().clone();
    let cb = C::one() / gb.leading_coeff().unwrap().clone();
    &fa.scale(&ca) - &gb.scale(&cb)
}

/// Computes a reduced Gröbner basis of the ideal generated by `gens` on
/// the given side.
pub fn groebner<C: Coeff + Field, A: Multiplication>(
    dims: Dims,
    gens: &[MatPoly<C, A>],
    side: Side,
    opts: Options,
) -> Result<GroebnerBasis<C, A>> {
    if A::QUANTUM {
        straighten::check_pbw_conditions(dims)?;
    }
    let nv = dims.nvars();
    let mut basis: Vec<MatPoly<C, A>> = Vec::new();
    let mut queue: BTreeSet<(Monomial, Task)> = BTreeSet::new();

    let push = |basis: &mut Vec<MatPoly<C, A>>, queue: &mut BTreeSet<(Monomial, Task)>, f: MatPoly<C, A>| {
        let f = monic(f);
        let i = basis.len();
        let lm = f.leading_monomial().unwrap().clone();
        for (j, g) in basis.iter().enumerate() {
            queue.insert((lm.lcm(g.leading_monomial().unwrap()), Task::Pair(j, i)));
        }
        if side == Side::TwoSided {
            for v in 0..nv {
                queue.insert((lm.times_var(v), Task::Closure(i, v)));
            }
        }
        basis.push(f);
    };

    for g in gens {
        let r = reduce_by(g, &basis, side);
        if !r.is_zero() {
            push(&mut basis, &mut queue, r);
        }
    }

    while let Some((lcm, task)) = queue.pop_first() {
        if let Some(bound) = opts.degree_bound {
            if lcm.degree() > bound {
                return Err(Error::DegreeBoundExceeded {
                    bound,
                    degree: lcm.degree(),
                });
            }
        }
        let cand = match task {
            Task::Pair(i, j) => s_poly(&basis[i], &basis[j], side),
            Task::Closure(i, v) => {
                let x = Monomial::var(nv, v);
                basis[i].mul_monomial_right(&x)
            }
        };
        let r = reduce_by(&cand, &basis, side);
        if !r.is_zero() {
            push(&mut basis, &mut queue, r);
        }
    }

    Ok(GroebnerBasis {
        dims,
        side,
        gens: interreduce(basis, side),
    })
}

/// Drops redundant elements and fully reduces the tails.
fn interreduce<C: Coeff + Field, A: Multiplication>(mut basis: Vec<MatPoly<C, A>>, side: Side) -> Vec<MatPoly<C, A>> {
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<MatPoly<C, A>> = Vec::new();
    for f in basis {
        let lm = f.leading_monomial().unwrap();
        if !minimal.iter().any(|g| g.leading_monomial().unwrap().divides(lm)) {
            minimal.push(f);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<_> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut f = minimal[i].clone();
        let (lm, lc) = f.pop_leading().unwrap();
        let mut r = reduce_by(&f, &others, side);
        r.add_term(lm, lc);
        out.push(monic(r));
    }
    out
}

pub fn left_groebner<C: Coeff + Field, A: Multiplication>(
    dims: Dims,
    gens: &[MatPoly<C, A>],
) -> Result<GroebnerBasis<C, A>> {
    groebner(dims, gens, Side::Left, Options::default())
}

pub fn right_groebner<C: Coeff + Field, A: Multiplication>(
    dims: Dims,
    gens: &[MatPoly<C, A>],
) -> Result<GroebnerBasis<C, A>> {
    groebner(dims, gens, Side::Right, Options::default())
}

pub fn two_sided_groebner<C: Coeff + Field, A: Multiplication>(
    dims: Dims,
    gens: &[MatPoly<C, A>],
) -> Result<GroebnerBasis<C, A>> {
    groebner(dims, gens, Side::TwoSided, Options::default())
}

/// True iff every element of `gens` lies in the ideal of `basis`.
pub fn ideal_contains<C: Coeff + Field, A: Multiplication>(
    gens: &[MatPoly<C, A>],
    basis: &GroebnerBasis<C, A>,
) -> bool {
    gens.iter().all(|g| basis.contains(g))
}

/// Equality of the ideals of two bases, by reducing each one's generators
/// modulo the other.
pub fn ideal_equal<C: Coeff + Field, A: Multiplication>(
    a: &GroebnerBasis<C, A>,
    b: &GroebnerBasis<C, A>,
) -> bool {
    ideal_contains(&a.gens, b) && ideal_contains(&b.gens, a)
}

/// Lifts Laurent coefficients into ℚ(q).
pub fn to_ratfunc(f: &QMPoly) -> QMPoly<RatFunc> {
    f.map_coeffs(|c| RatFunc::from(c.clone()))
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealReport {
    pub y: Perm,
    pub generators: Vec<String>,
    pub basis_size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PosetReport {
    pub m: usize,
    pub n: usize,
    pub ideals: Vec<IdealReport>,
    pub inclusion_matrix: Vec<Vec<u8>>,
    pub bruhat_matrix: Vec<Vec<u8>>,
    pub ok: bool,
    pub failures: Vec<String>,
}

struct Computed {
    y: Perm,
    gens: Vec<QMPoly<RatFunc>>,
    rendered: Vec<String>,
    two_sided: QGroebner,
    right: QGroebner,
}

/// Checks that `y ↦ I(y)` is an order embedding of `S_{m+n}^{≤ c^m}` into
/// two-sided, homogeneous ideals.
pub fn verify_poset(m: usize, n: usize, opts: Options) -> Result<PosetReport> {
    let dims = Dims::new(m, n);
    straighten::check_pbw_conditions(dims)?;
    let elems = interval_below(&Perm::coxeter_power(m + n, m));
    let computed: Vec<Computed> = elems
        .par_iter()
        .map(|y| {
            let quantum = aq_generators(y, m, n)?;
            let rendered = quantum.iter().map(ToString::to_string).collect();
            let gens: Vec<_> = quantum.iter().map(to_ratfunc).collect();
            let two_sided = groebner(dims, &gens, Side::TwoSided, opts)?;
            let right = groebner(dims, &gens, Side::Right, opts)?;
            Ok(Computed {
                y: y.clone(),
                gens,
                rendered,
                two_sided,
                right,
            })
        })
        .collect::<Result<_>>()?;

    let size = computed.len();
    let inclusion: Vec<Vec<u8>> = (0..size)
        .into_par_iter()
        .map(|a| {
            (0..size)
                .map(|b| u8::from(ideal_contains(&computed[a].gens, &computed[b].two_sided)))
                .collect()
        })
        .collect();
    let bruhat: Vec<Vec<u8>> = elems
        .iter()
        .map(|a| elems.iter().map(|b| u8::from(a.bruhat_leq(b).expect("same size"))).collect())
        .collect();

    let mut failures = Vec::new();
    for a in 0..size {
        for b in 0..size {
            if inclusion[a][b] != bruhat[a][b] {
                failures.push(format!(
                    "inclusion I({}) <= I({}) is {} but Bruhat says {}",
                    elems[a], elems[b], inclusion[a][b], bruhat[a][b]
                ));
            }
            if a < b && inclusion[a][b] == 1 && inclusion[b][a] == 1 {
                failures.push(format!("I({}) = I({})", elems[a], elems[b]));
            }
        }
    }
    for c in &computed {
        if let Some(g) = c.gens.iter().find(|g| !g.is_homogeneous()) {
            failures.push(format!("generator {g} of I({}) is inhomogeneous", c.y));
        }
        if let Some(g) = c.two_sided.gens().iter().find(|g| !g.is_homogeneous()) {
            failures.push(format!("basis element {g} of I({}) is inhomogeneous", c.y));
        }
        if let Some(g) = c.two_sided.gens().iter().find(|g| !c.right.contains(g)) {
            failures.push(format!("{g} lies in the two-sided ideal I({}) but not in the right ideal", c.y));
        }
        if let Some(g) = c.right.gens().iter().find(|g| !c.two_sided.contains(g)) {
            failures.push(format!("{g} lies in the right ideal of I({}) only", c.y));
        }
    }

    Ok(PosetReport {
        m,
        n,
        ideals: computed
            .into_iter()
            .map(|c| IdealReport {
                y: c.y,
                generators: c.rendered,
                basis_size: c.two_sided.len(),
            })
            .collect(),
        inclusion_matrix: inclusion,
        bruhat_matrix: bruhat,
        ok: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Laurent;
    use crate::qmatrix::{qminor, CPoly, Commutative};
    use crate::subsets::IndexSet;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn d22() -> Dims {
        Dims::new(2, 2)
    }

    fn x(i: usize, j: usize) -> QMPoly<RatFunc> {
        QMPoly::var(d22(), i, j)
    }

    fn det() -> QMPoly<RatFunc> {
        let s = IndexSet::range(1, 2);
        to_ratfunc(&qminor(d22(), &s, &s).unwrap())
    }

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn aq(y: &str) -> Vec<QMPoly<RatFunc>> {
        aq_generators(&perm(y), 2, 2).unwrap().iter().map(to_ratfunc).collect()
    }

    #[test]
    fn reduction_examples() {
        let b = two_sided_groebner(d22(), &[x(1, 1)]).unwrap();
        assert!(b.reduce(&x(1, 1)).is_zero());
        let d = two_sided_groebner(d22(), &[det()]).unwrap();
        let r = d.reduce(&(&x(1, 1) * &x(2, 2)));
        assert_eq!(r, (&x(1, 2) * &x(2, 1)).scale(&RatFunc::from(Laurent::q())));
        let empty = two_sided_groebner::<RatFunc, Quantum>(d22(), &[]).unwrap();
        assert!(empty.is_empty());
        let f = &x(1, 2) + &x(2, 1);
        assert_eq!(empty.reduce(&f), f);
    }

    #[test]
    fn completion_examples() {
        // x22 x11 - x11 x22 = -(q - q^-1) x12 x21, so x11 is not normal
        let b = two_sided_groebner(d22(), &[x(1, 1)]).unwrap();
        assert_eq!(b.gens(), &[x(1, 1), &x(1, 2) * &x(2, 1)]);
        let right = right_groebner(d22(), &[x(1, 1)]).unwrap();
        assert_eq!(right.gens(), &[x(1, 1)]);
        let d = two_sided_groebner(d22(), &[det()]).unwrap();
        assert_eq!(d.gens(), &[det()]);
    }

    #[test]
    fn one_sided_bases_of_a_non_normal_element() {
        // x11 + x22 generates a proper left ideal but its two-sided closure is bigger
        let f = &x(1, 1) + &x(2, 2);
        let left = left_groebner(d22(), std::slice::from_ref(&f)).unwrap();
        let two = two_sided_groebner(d22(), std::slice::from_ref(&f)).unwrap();
        assert!(ideal_contains(left.gens(), &two));
        assert!(!ideal_equal(&left, &two));
    }

    #[test]
    fn containments() {
        let zero = two_sided_groebner::<RatFunc, Quantum>(d22(), &[]).unwrap();
        assert!(ideal_contains(&aq("1234"), &zero));
        let big = two_sided_groebner(d22(), &aq("3412")).unwrap();
        let small = two_sided_groebner(d22(), &aq("1324")).unwrap();
        assert!(ideal_contains(&aq("1324"), &big));
        assert!(!ideal_contains(&aq("3412"), &small));
    }

    #[test]
    fn degree_bound_is_reported() {
        let f = &x(1, 1) + &x(2, 2);
        let err = groebner(d22(), &[f], Side::TwoSided, Options { degree_bound: Some(1) }).unwrap_err();
        assert!(matches!(err, Error::DegreeBoundExceeded { bound: 1, .. }));
    }

    #[test]
    fn small_posets() {
        let r = verify_poset(1, 1, Options::default()).unwrap();
        assert!(r.ok, "{:?}", r.failures);
        assert_eq!(r.ideals.len(), 2);
        assert_eq!(r.ideals[1].generators, vec!["x11"]);
        for (m, n, count) in [(2, 1, 4), (1, 2, 4)] {
            let r = verify_poset(m, n, Options::default()).unwrap();
            assert!(r.ok, "{:?}", r.failures);
            assert_eq!(r.ideals.len(), count);
        }
    }

    #[test]
    fn poset_two_by_two() {
        let r = verify_poset(2, 2, Options::default()).unwrap();
        assert!(r.ok, "{:?}", r.failures);
        assert_eq!(r.ideals.len(), 14);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["ideals"][0]["y"], "1234");
    }

    // ---- commutative mode against a textbook Buchberger ----

    type Naive = BTreeMap<Vec<u32>, BigRational>;

    fn key(e: &[u32]) -> (u32, Vec<u32>) {
        (e.iter().sum(), e.to_vec())
    }

    fn lead(f: &Naive) -> (Vec<u32>, BigRational) {
        let (e, c) = f.iter().max_by(|a, b| key(a.0).cmp(&key(b.0))).unwrap();
        (e.clone(), c.clone())
    }

    fn shift_sub(f: &mut Naive, g: &Naive, by: &[u32], c: &BigRational) {
        for (e, gc) in g {
            let ee: Vec<u32> = e.iter().zip(by).map(|(a, b)| a + b).collect();
            let v = f.entry(ee.clone()).or_insert_with(BigRational::zero);
            *v -= gc * c;
            if v.is_zero() {
                f.remove(&ee);
            }
        }
    }

    fn naive_reduce(f: &Naive, basis: &[Naive]) -> Naive {
        let mut p = f.clone();
        let mut r = Naive::new();
        while !p.is_empty() {
            let (e, c) = lead(&p);
            let div = basis.iter().find(|g| {
                let (ge, _) = lead(g);
                ge.iter().zip(&e).all(|(a, b)| a <= b)
            });
            match div {
                Some(g) => {
                    let (ge, gc) = lead(g);
                    let by: Vec<u32> = e.iter().zip(&ge).map(|(a, b)| a - b).collect();
                    shift_sub(&mut p, g, &by, &(c / gc));
                }
                None => {
                    p.remove(&e);
                    r.insert(e, c);
                }
            }
        }
        r
    }

    fn naive_buchberger(gens: &[Naive]) -> Vec<Naive> {
        let mut g: Vec<Naive> = gens.iter().filter(|f| !f.is_empty()).cloned().collect();
        let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        while let Some((i, j)) = pairs.pop() {
            let (a, ac) = lead(&g[i]);
            let (b, bc) = lead(&g[j]);
            let l: Vec<u32> = a.iter().zip(&b).map(|(x, y)| *x.max(y)).collect();
            let mut s = Naive::new();
            let la: Vec<u32> = l.iter().zip(&a).map(|(x, y)| x - y).collect();
            let lb: Vec<u32> = l.iter().zip(&b).map(|(x, y)| x - y).collect();
            shift_sub(&mut s, &g[i], &la, &-(BigRational::one() / ac));
            shift_sub(&mut s, &g[j], &lb, &(BigRational::one() / bc));
            let r = naive_reduce(&s, &g);
            if !r.is_empty() {
                let k = g.len();
                g.push(r);
                pairs.extend((0..k).map(|i| (i, k)));
            }
        }
        // reduced basis
        let mut min: Vec<Naive> = Vec::new();
        for (idx, f) in g.iter().enumerate() {
            let (e, _) = lead(f);
            let redundant = g.iter().enumerate().any(|(j, h)| {
                let (he, _) = lead(h);
                j != idx && he.iter().zip(&e).all(|(a, b)| a <= b) && (he != e || j < idx)
            });
            if !redundant {
                min.push(f.clone());
            }
        }
        let mut out = Vec::new();
        for i in 0..min.len() {
            let others: Vec<Naive> = min.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| h.clone()).collect();
            let r = naive_reduce(&min[i], &others);
            let (_, c) = lead(&r);
            out.push(r.into_iter().map(|(e, v)| (e, v / c.clone())).collect::<Naive>());
        }
        out.sort_by_key(|a| key(&lead(a).0));
        out
    }

    fn to_naive(f: &CPoly) -> Naive {
        f.terms().map(|(m, c)| (m.exps().to_vec(), c.clone())).collect()
    }

    fn monomials_of_degree(nv: usize, deg: u32) -> Vec<Monomial> {
        (0..(deg + 1).pow(nv as u32))
            .map(|code| {
                (0..nv)
                    .map(|v| (code / (deg + 1).pow(v as u32)) % (deg + 1))
                    .collect::<Vec<u32>>()
            })
            .filter(|e| e.iter().sum::<u32>() == deg)
            .map(Monomial::from_exps)
            .collect()
    }

    /// Homogeneous polynomials of degree 1 or 2 with up to three terms.
    fn small_poly(d: Dims) -> impl Strategy<Value = CPoly> {
        (1u32..=2).prop_flat_map(move |deg| {
            let monos = monomials_of_degree(d.nvars(), deg);
            proptest::collection::vec((proptest::sample::select(monos), -3i64..=3), 1..=3).prop_map(
                move |ts| {
                    CPoly::from_terms(
                        d,
                        ts.into_iter()
                            .map(|(m, c)| (m, BigRational::from_integer(BigInt::from(c)))),
                    )
                },
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn commutative_mode_matches_naive_buchberger(
            gens in proptest::collection::vec(small_poly(Dims::new(2, 2)), 1..=3)
        ) {
            let ours = two_sided_groebner::<BigRational, Commutative>(Dims::new(2, 2), &gens).unwrap();
            let mut got: Vec<Naive> = ours.gens().iter().map(to_naive).collect();
            got.sort_by_key(|a| key(&lead(a).0));
            let naive: Vec<Naive> = gens.iter().map(to_naive).collect();
            prop_assert_eq!(got, naive_buchberger(&naive));
        }

        #[test]
        fn reduction_is_idempotent_and_kills_generators(
            gens in proptest::collection::vec(small_poly(Dims::new(1, 3)), 1..=2),
            f in small_poly(Dims::new(1, 3)),
        ) {
            let b = two_sided_groebner::<BigRational, Commutative>(Dims::new(1, 3), &gens).unwrap();
            let r = b.reduce(&f);
            prop_assert_eq!(b.reduce(&r), r);
            for g in &gens {
                prop_assert!(b.contains(g));
            }
        }
    }

    #[test]
    fn quantum_reduction_is_idempotent() {
        let b = two_sided_groebner(d22(), &aq("2413")).unwrap();
        let f = &(&x(2, 2) * &x(1, 1)) + &(&x(2, 1) * &x(1, 2));
        let r = b.reduce(&f);
        assert_eq!(b.reduce(&r), r);
        for g in aq("2413") {
            assert!(b.contains(&g));
        }
        assert!(b.is_homogeneous());
    }
}
