//! The quantum exterior algebra `Λ_q(K^N)`, its root-vector operators,
//! Demazure and `U_−`-orbit supports, and the truncated R-matrix pairing
//! that recovers the quantum minors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{Laurent, RatFunc};
use crate::error::{Error, Result};
use crate::grobner::to_ratfunc;
use crate::qmatrix::{qminor_of, Dims, QMPoly};
use crate::subsets::{complement_index_sets, demazure_index_sets, k_subsets, minor_from_index, IndexSet, MinorSpec};
use crate::weyl::Perm;

/// `(−q^{-1})^e`.
fn swap_unit(e: usize) -> Laurent {
    let sign = if e.is_multiple_of(2) { 1 } else { -1 };
    Laurent::monomial(BigInt::from(sign), -(e as i32))
}

/// Sorts a word of generators `v_{w_1} ⋯ v_{w_r}` using
/// `v_i v_j = −q^{-1} v_j v_i` (i > j). `None` when a letter repeats.
pub fn ext_normalize(word: &[usize]) -> Option<(IndexSet, Laurent)> {
    let inversions = (0..word.len())
        .flat_map(|a| (a + 1..word.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| word[a] > word[b])
        .count();
    let set = IndexSet::from_unsorted(word.to_vec()).ok()?;
    (set.len() == word.len()).then(|| (set, swap_unit(inversions)))
}

/// An element of the degree-`k` piece of `Λ_q(K^N)` in the basis `v_I`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtVec {
    n: usize,
    k: usize,
    terms: BTreeMap<IndexSet, Laurent>,
}

impl ExtVec {
    pub fn zero(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(n: usize, set: &IndexSet) -> Self {
        let mut v = Self::zero(n, set.len());
        v.add_term(set.clone(), Laurent::one());
        v
    }

    /// The normalized product `v_{w_1} ⋯ v_{w_r}`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut v = Self::zero(n, word.len());
        if let Some((set, c)) = ext_normalize(word) {
            v.add_term(set, c);
        }
        v
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexSet, &Laurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, set: &IndexSet) -> Laurent {
        self.terms.get(set).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn support(&self) -> BTreeSet<IndexSet> {
        self.terms.keys().cloned().collect()
    }

    fn add_term(&mut self, set: IndexSet, c: Laurent) {
        assert_eq!(set.len(), self.k, "mixed degrees in an exterior vector");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(set.clone()).or_insert_with(Laurent::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&set);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        let mut out = Self::zero(self.n, self.k);
        for (s, v) in &self.terms {
            out.add_term(s.clone(), v * c);
        }
        out
    }

    /// Applies a map given on basis vectors, extended linearly.
    pub fn map_basis(&self, f: impl Fn(&IndexSet) -> ExtVec) -> Self {
        let mut out = Self::zero(self.n, self.k);
        for (s, c) in &self.terms {
            for (t, d) in f(s).terms {
                out.add_term(t, &d * c);
            }
        }
        out
    }
}

impl fmt::Display for ExtVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, c)| format!("({c})*v{s}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Y_{ij}` on a basis vector `u_I`: write `u_I = c^{-1} · u_{I∖j} u_j`
/// and send it to `c^{-1} · u_{I∖j} u_i`.
pub fn raise_basis(i: usize, j: usize, set: &IndexSet) -> Option<(IndexSet, Laurent)> {
    assert!(i < j, "Y_ij needs i < j");
    if !set.contains(j) || set.contains(i) {
        return None;
    }
    let rest = set.without(j).elems().to_vec();
    let word_j: Vec<usize> = rest.iter().copied().chain([j]).collect();
    let word_i: Vec<usize> = rest.iter().copied().chain([i]).collect();
    let (_, c0) = ext_normalize(&word_j).expect("distinct letters");
    let (target, c1) = ext_normalize(&word_i).expect("distinct letters");
    let inv = c0.unit_inverse().expect("reordering coefficients are units");
    Some((target, &c1 * &inv))
}

/// The root vector `Y_{ij}` (i < j) acting on `Λ_q`.
pub fn raise_op(i: usize, j: usize, v: &ExtVec) -> ExtVec {
    assert!(j <= v.ambient(), "Y_ij outside the ambient space");
    v.map_basis(|s| {
        let mut out = ExtVec::zero(v.ambient(), v.degree());
        if let Some((t, c)) = raise_basis(i, j, s) {
            out.add_term(t, c);
        }
        out
    })
}

/// `E_a` from the module-algebra structure: `Δ(E_a) = E_a ⊗ K_a + 1 ⊗ E_a`
/// with `E_a v_{a+1} = v_a`, `K_a v_a = q v_a`, `K_a v_{a+1} = q^{-1} v_{a+1}`,
/// applied letter by letter to `v_{i_1} ⋯ v_{i_k}`.
pub fn coproduct_raise(a: usize, v: &ExtVec) -> ExtVec {
    let n = v.ambient();
    v.map_basis(|s| {
        let word = s.elems();
        let mut out = ExtVec::zero(n, word.len());
        for t in 0..word.len() {
            if word[t] != a + 1 {
                continue;
            }
            let weight: i32 = word[t + 1..]
                .iter()
                .map(|&b| i32::from(b == a) - i32::from(b == a + 1))
                .sum();
            let mut w = word.to_vec();
            w[t] = a;
            out = out.add(&ExtVec::from_word(n, &w).scale(&Laurent::q_pow(weight)));
        }
        out
    })
}

/// `Y_{ij}` built from [`coproduct_raise`] by
/// `Y_{ij} = Y_{i,j−1} Y_{j−1,j} − q^{-1} Y_{j−1,j} Y_{i,j−1}`.
pub fn recursive_raise(i: usize, j: usize, v: &ExtVec) -> ExtVec {
    assert!(i < j);
    if j == i + 1 {
        return coproduct_raise(i, v);
    }
    let a = recursive_raise(i, j - 1, &coproduct_raise(j - 1, v));
    let b = coproduct_raise(j - 1, &recursive_raise(i, j - 1, v));
    a.add(&b.scale(&-Laurent::q_pow(-1)))
}

fn all_basis(n: usize) -> impl Iterator<Item = ExtVec> {
    (0..=n).flat_map(move |k| k_subsets(n, k).into_iter().map(move |s| ExtVec::basis(n, &s)))
}

/// Checks on `Λ_q(K^n)`, every graded piece: `raise_op` agrees with the
/// recursion from the simple operators, satisfies the recursion itself,
/// squares to zero, and obeys `Y_{ij}(u_{I'} u_j) = u_{I'} u_i` and
/// `Y_{ij} u_I = 0` for `j ∉ I`. Returns failure descriptions.
pub fn operator_identities(n: usize) -> Vec<String> {
    let q_inv = Laurent::q_pow(-1);
    let mut failures = Vec::new();
    for i in 1..n {
        for j in i + 1..=n {
            for v in all_basis(n) {
                let y = raise_op(i, j, &v);
                if y != recursive_raise(i, j, &v) {
                    failures.push(format!("Y_({i},{j}) on {v} differs from the recursion"));
                }
                if j > i + 1 {
                    let rec = raise_op(i, j - 1, &raise_op(j - 1, j, &v))
                        .add(&raise_op(j - 1, j, &raise_op(i, j - 1, &v)).scale(&-q_inv.clone()));
                    if y != rec {
                        failures.push(format!("raise_op violates the recursion for ({i},{j}) on {v}"));
                    }
                }
                if !raise_op(i, j, &y).is_zero() {
                    failures.push(format!("Y_({i},{j})^2 is nonzero on {v}"));
                }
            }
            for k in 1..=n {
                for s in k_subsets(n, k) {
                    let (lhs, rhs) = if s.contains(j) {
                        let rest = s.without(j).elems().to_vec();
                        let prod = ExtVec::from_word(n, &[rest.clone(), vec![j]].concat());
                        (recursive_raise(i, j, &prod), ExtVec::from_word(n, &[rest, vec![i]].concat()))
                    } else {
                        (recursive_raise(i, j, &ExtVec::basis(n, &s)), ExtVec::zero(n, k))
                    };
                    if lhs != rhs {
                        failures.push(format!("Y_({i},{j}) identity fails on the product over {s}"));
                    }
                }
            }
        }
    }
    failures
}

fn check_simple(a: usize, n: usize) -> Result<()> {
    if a == 0 || a >= n {
        return Err(Error::Domain(format!("simple index {a} outside 1..{}", n - 1)));
    }
    Ok(())
}

/// Support of `F_a` applied to the span of `S`, added to `S`.
pub fn lower_support(a: usize, n: usize, sets: &BTreeSet<IndexSet>) -> Result<BTreeSet<IndexSet>> {
    check_simple(a, n)?;
    let mut out = sets.clone();
    for s in sets {
        if s.contains(a) && !s.contains(a + 1) {
            out.insert(s.without(a).with(a + 1));
        }
    }
    Ok(out)
}

/// Support of `E_a` applied to the span of `S`, added to `S`.
pub fn raise_support(a: usize, n: usize, sets: &BTreeSet<IndexSet>) -> Result<BTreeSet<IndexSet>> {
    check_simple(a, n)?;
    let mut out = sets.clone();
    for s in sets {
        if s.contains(a + 1) && !s.contains(a) {
            out.insert(s.without(a + 1).with(a));
        }
    }
    Ok(out)
}

fn closure(
    n: usize,
    start: IndexSet,
    step: fn(usize, usize, &BTreeSet<IndexSet>) -> Result<BTreeSet<IndexSet>>,
) -> Result<BTreeSet<IndexSet>> {
    let mut cur: BTreeSet<IndexSet> = [start].into();
    loop {
        let mut next = cur.clone();
        for a in 1..n {
            next = step(a, n, &next)?;
        }
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

fn top_set(w: &Perm, k: usize) -> Result<IndexSet> {
    w.apply_set(&IndexSet::range(1, k))
}

/// Support of `U_− T_y v_{1..k}`: the set `y({1..k})` closed under lowering.
/// Fails unless this equals `{I : I >= y({1..k})}`.
pub fn uminus_span_indices(y: &Perm, k: usize) -> Result<BTreeSet<IndexSet>> {
    let n = y.size();
    let bottom = top_set(y, k)?;
    let span = closure(n, bottom.clone(), lower_support)?;
    let expect: BTreeSet<IndexSet> = k_subsets(n, k)
        .into_iter()
        .filter(|s| bottom.leq(s).expect("equal sizes"))
        .collect();
    if span != expect {
        return Err(Error::Verification(format!(
            "lowering closure of {bottom} is not the up-set of {bottom}"
        )));
    }
    Ok(span)
}

/// Support of the Demazure module `U_+ T_w v_{1..k}`. Fails unless it
/// equals `{I : I <= w({1..k})}`.
pub fn demazure_span_indices(w: &Perm, k: usize) -> Result<BTreeSet<IndexSet>> {
    let top = top_set(w, k)?;
    let span = closure(w.size(), top.clone(), raise_support)?;
    let expect: BTreeSet<IndexSet> = demazure_index_sets(w, k).into_iter().collect();
    if span != expect {
        return Err(Error::Verification(format!(
            "raising closure of {top} is not the down-set of {top}"
        )));
    }
    Ok(span)
}

/// Index sets of `(V_w(ω_k) ∩ U_− T_y v_{1..k})^⊥`, computed from the
/// spans and checked against [`complement_index_sets`].
pub fn ortho_complement_indices(w: &Perm, y: &Perm, k: usize) -> Result<Vec<IndexSet>> {
    if !y.bruhat_leq(w)? {
        return Err(Error::NotBelow {
            y: y.to_string(),
            w: w.to_string(),
        });
    }
    let dem = demazure_span_indices(w, k)?;
    let low = uminus_span_indices(y, k)?;
    let out: Vec<IndexSet> = dem.difference(&low).cloned().collect();
    let combinatorial = complement_index_sets(w, y, k)?;
    if out != combinatorial {
        return Err(Error::Verification(format!(
            "orthogonal complement for y = {y}, k = {k} disagrees with the index-set formula"
        )));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct PairingReport {
    pub k: usize,
    #[serde(rename = "I")]
    pub index: IndexSet,
    pub minor: MinorSpec,
    /// `pairing = scalar · Δ^q_minor`.
    pub scalar: RatFunc,
    pub value: String,
    pub ok: bool,
}

/// Order in which the truncated factors `1 + Y_{i,m+j} ⊗ x_{ij}` act.
pub fn factor_order(m: usize, n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|j| (1..=m).map(move |i| (i, j))).collect()
}

/// The matrix coefficient `⟨ξ_{w°_m(I)}, R · u_{w°_m c^m(1..k)}⟩` as an
/// element of `R_q[M_{m,n}]`.
pub fn pairing_value(m: usize, n: usize, k: usize, set: &IndexSet) -> Result<QMPoly> {
    let size = m + n;
    let dims = Dims::new(m, n);
    let wm = Perm::longest(m, size);
    let start = wm.apply_set(&top_set(&Perm::coxeter_power(size, m), k)?)?;
    let target = wm.apply_set(set)?;
    let mut state: BTreeMap<IndexSet, QMPoly> = [(start, QMPoly::one(dims))].into();
    for (i, j) in factor_order(m, n) {
        let mut next = state.clone();
        for (s, p) in &state {
            if let Some((t, c)) = raise_basis(i, m + j, s) {
                let add = (&QMPoly::var(dims, i, j) * p).scale(&c);
                let slot = next.entry(t).or_insert_with(|| QMPoly::zero(dims));
                *slot = &*slot + &add;
            }
        }
        next.retain(|_, p| !p.is_zero());
        state = next;
    }
    Ok(state.remove(&target).unwrap_or_else(|| QMPoly::zero(dims)))
}

/// Runs the pairing for `(k, I)` and checks it is a unit multiple of the
/// predicted quantum minor.
pub fn rmatrix_pairing(m: usize, n: usize, k: usize, set: &IndexSet) -> Result<PairingReport> {
    let minor = minor_from_index(m, n, k, set)?;
    let dims = Dims::new(m, n);
    let value = pairing_value(m, n, k, set)?;
    let predicted = qminor_of(dims, &minor)?;
    let (Some(a), Some(b)) = (value.leading_coeff(), predicted.leading_coeff()) else {
        return Err(Error::Verification(format!("pairing for k = {k}, I = {set} vanishes")));
    };
    let scalar = RatFunc::from(a.clone()) / RatFunc::from(b.clone());
    if to_ratfunc(&value) != to_ratfunc(&predicted).scale(&scalar) {
        return Err(Error::Verification(format!(
            "pairing for k = {k}, I = {set} is {value}, not a multiple of {predicted}"
        )));
    }
    Ok(PairingReport {
        k,
        index: set.clone(),
        minor,
        scalar,
        value: value.to_string(),
        ok: true,
    })
}

/// Every admissible `(k, I)` for `(m, n)`.
pub fn admissible_pairs(m: usize, n: usize) -> Vec<(usize, IndexSet)> {
    let size = m + n;
    let w = Perm::coxeter_power(size, m);
    (1..size)
        .flat_map(|k| demazure_index_sets(&w, k).into_iter().map(move |s| (k, s)))
        .collect()
}

/// Pairings for all admissible `(k, I)`, in parallel.
pub fn all_pairings(m: usize, n: usize) -> Result<Vec<PairingReport>> {
    admissible_pairs(m, n)
        .par_iter()
        .map(|(k, s)| rmatrix_pairing(m, n, *k, s))
        .collect()
}
