//! Rewriting products of generators into PBW normal order.
//!
//! The normal order is row-major. A product `M · x_v` with `M` in normal
//! form is computed by peeling the last variable `x_u` of `M`; when
//! `u > v` the pair `x_u x_v` is rewritten with the defining relations and
//! the pieces are recombined recursively. Results are memoized per thread.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};

use super::monomial::{Dims, Monomial};
use crate::coeff::Laurent;
use crate::error::{Error, Result};

/// A normal-form expansion with Laurent coefficients.
pub type Expansion = Rc<Vec<(Monomial, Laurent)>>;

thread_local! {
    static VAR_CACHE: RefCell<HashMap<(Dims, Monomial, usize), Expansion>> = RefCell::new(HashMap::new());
    static MONO_CACHE: RefCell<HashMap<(Dims, Monomial, Monomial), Expansion>> = RefCell::new(HashMap::new());
}

/// `x_u x_v` for `u > v`, as `Σ coeff · x_a x_b` with `a <= b`. The first
/// entry is always the swapped pair `x_v x_u`.
pub fn swap_relation(dims: Dims, u: usize, v: usize) -> Vec<(Laurent, usize, usize)> {
    assert!(u > v);
    let (l, k) = dims.pos(u);
    let (i, j) = dims.pos(v);
    let q_inv = Laurent::q_pow(-1);
    if i == l || j == k {
        // same row or same column: x_u x_v = q^{-1} x_v x_u
        vec![(q_inv, v, u)]
    } else if j > k {
        vec![(Laurent::one(), v, u)]
    } else {
        // x_{lk} x_{ij} = x_{ij} x_{lk} − (q − q^{-1}) x_{ik} x_{lj}
        let corr = -(&Laurent::q() - &q_inv);
        vec![(Laurent::one(), v, u), (corr, dims.var(i, k), dims.var(l, j))]
    }
}

fn add_into(acc: &mut BTreeMap<Monomial, Laurent>, mono: &Monomial, c: Laurent) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(mono) {
        Some(v) => {
            *v += &c;
            if v.is_zero() {
                acc.remove(mono);
            }
        }
        None => {
            acc.insert(mono.clone(), c);
        }
    }
}

/// Normal form of `mono · x_v`.
pub fn mul_var(dims: Dims, mono: &Monomial, v: usize) -> Expansion {
    let key = (dims, mono.clone(), v);
    if let Some(hit) = VAR_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let out: Expansion = match mono.last_var() {
        Some(u) if u > v => {
            let prefix = mono.without_var(u);
            let mut acc = BTreeMap::new();
            for (coeff, a, b) in swap_relation(dims, u, v) {
                for (m1, c1) in mul_var(dims, &prefix, a).iter() {
                    let c1 = &coeff * c1;
                    for (m2, c2) in mul_var(dims, m1, b).iter() {
                        add_into(&mut acc, m2, &c1 * c2);
                    }
                }
            }
            Rc::new(acc.into_iter().collect())
        }
        _ => Rc::new(vec![(mono.times_var(v), Laurent::one())]),
    };
    VAR_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

/// Normal form of `a · b` for normal monomials `a`, `b`.
pub fn mul_monomials(dims: Dims, a: &Monomial, b: &Monomial) -> Expansion {
    if b.is_one() {
        return Rc::new(vec![(a.clone(), Laurent::one())]);
    }
    let key = (dims, a.clone(), b.clone());
    if let Some(hit) = MONO_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let mut cur: BTreeMap<Monomial, Laurent> = BTreeMap::new();
    cur.insert(a.clone(), Laurent::one());
    for v in b.word() {
        let mut next = BTreeMap::new();
        for (m, c) in &cur {
            for (m2, c2) in mul_var(dims, m, v).iter() {
                add_into(&mut next, m2, c * c2);
            }
        }
        cur = next;
    }
    let out: Expansion = Rc::new(cur.into_iter().collect());
    MONO_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

/// Checks the PBW conditions the Gröbner machinery relies on: for every
/// pair `u > v` the swapped term has a unit coefficient and every
/// correction monomial lies strictly below `x_v x_u`, with the same
/// multidegree.
pub fn check_pbw_conditions(dims: Dims) -> Result<()> {
    let nv = dims.nvars();
    let pair = |a: usize, b: usize| Monomial::var(nv, a).mul(&Monomial::var(nv, b));
    let weight = |v: usize| dims.pos(v);
    for u in 0..nv {
        for v in 0..u {
            let rel = swap_relation(dims, u, v);
            let (c0, a0, b0) = &rel[0];
            if (*a0, *b0) != (v, u) || !c0.is_unit_monomial() {
                return Err(Error::Verification(format!(
                    "relation for ({u},{v}) does not lead with a unit multiple of the swap"
                )));
            }
            let lead = pair(v, u);
            let (lu, lv) = (weight(u), weight(v));
            for (_, a, b) in &rel[1..] {
                let (wa, wb) = (weight(*a), weight(*b));
                let rows_ok = {
                    let mut x = [lu.0, lv.0];
                    let mut y = [wa.0, wb.0];
                    x.sort();
                    y.sort();
                    x == y
                };
                let cols_ok = {
                    let mut x = [lu.1, lv.1];
                    let mut y = [wa.1, wb.1];
                    x.sort();
                    y.sort();
                    x == y
                };
                if pair(*a, *b) >= lead || !rows_ok || !cols_ok {
                    return Err(Error::Verification(format!(
                        "correction term of ({u},{v}) is not lower and homogeneous"
                    )));
                }
            }
        }
    }
    Ok(())
}
