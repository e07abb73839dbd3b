//! The symmetric group S_N: one-line permutations, length, reduced words,
//! Bruhat order and lower intervals.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subsets::IndexSet;

/// A permutation of {1..N} in one-line notation: `w(i)` at position `i-1`.
///
/// Composition is function composition, `(u·v)(i) = u(v(i))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(oneline: Vec<usize>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{oneline:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Self(oneline))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// The simple transposition `s_a = (a a+1)`.
    pub fn simple(a: usize, n: usize) -> Self {
        assert!(a >= 1 && a < n, "simple reflection s_{a} outside S_{n}");
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(a - 1, a);
        Self(v)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn oneline(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` for `1 <= i <= N`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        self.check_size(other)?;
        Ok(Perm(other.0.iter().map(|&i| self.0[i - 1]).collect()))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Perm(inv)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// The sorted image `w(I)`.
    pub fn apply_set(&self, set: &IndexSet) -> Result<IndexSet> {
        if let Some(max) = set.max_elem() {
            if max > self.size() {
                return Err(Error::SizeMismatch {
                    expected: self.size(),
                    found: max,
                });
            }
        }
        IndexSet::from_unsorted(set.elems().iter().map(|&i| self.apply(i)).collect())
    }

    /// The cycle `(1 2 … N)`, i.e. `i ↦ i + 1 mod N`.
    pub fn coxeter(n: usize) -> Perm {
        Perm::coxeter_power(n, 1)
    }

    /// `c^m`, i.e. `i ↦ i + m mod N`.
    pub fn coxeter_power(n: usize, m: usize) -> Perm {
        Perm((0..n).map(|i| (i + m) % n + 1).collect())
    }

    /// Longest element of the subgroup permuting {1..k}.
    pub fn longest(k: usize, n: usize) -> Perm {
        assert!(k <= n);
        Perm((1..=n).map(|i| if i <= k { k + 1 - i } else { i }).collect())
    }

    /// Longest element of the subgroup permuting {N−k+1..N}.
    pub fn longest_rev(k: usize, n: usize) -> Perm {
        assert!(k <= n);
        let lo = n - k + 1;
        Perm((1..=n).map(|i| if i >= lo { lo + n - i } else { i }).collect())
    }

    /// A reduced word `[a_1, …, a_l]` with `w = s_{a_1} ⋯ s_{a_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut rev = Vec::with_capacity(self.length());
        // peel right descents: w = (w s_a) s_a
        while let Some(a) = (0..w.len().saturating_sub(1)).find(|&a| w[a] > w[a + 1]) {
            w.swap(a, a + 1);
            rev.push(a + 1);
        }
        rev.reverse();
        rev
    }

    /// `s_{a_1} ⋯ s_{a_l}`.
    pub fn from_word(word: &[usize], n: usize) -> Perm {
        let mut w: Vec<usize> = (1..=n).collect();
        for &a in word {
            w.swap(a - 1, a);
        }
        Perm(w)
    }

    /// Bruhat order by the dominance criterion on the counting numbers
    /// `#{a <= i : w(a) >= j}`.
    pub fn bruhat_leq(&self, other: &Perm) -> Result<bool> {
        self.check_size(other)?;
        let n = self.size();
        if self.length() > other.length() {
            return Ok(false);
        }
        let mut cu = vec![0usize; n + 2];
        let mut cw = vec![0usize; n + 2];
        for i in 0..n {
            // cu[j] = #{a <= i : u(a) >= j}
            for j in 1..=self.0[i] {
                cu[j] += 1;
            }
            for j in 1..=other.0[i] {
                cw[j] += 1;
            }
            if (1..=n).any(|j| cu[j] > cw[j]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All of S_N in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Perm(cur.clone())];
        loop {
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot");
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Perm(cur.clone()));
        }
    }

    /// The permutation matrix with a 1 at row `w(j)`, column `j`.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        let n = self.size();
        let mut m = vec![vec![0; n]; n];
        for j in 0..n {
            m[self.0[j] - 1][j] = 1;
        }
        m
    }

    fn check_size(&self, other: &Perm) -> Result<()> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                found: other.size(),
            });
        }
        Ok(())
    }
}

/// Compact one-line notation, e.g. `3412`; requires N <= 9.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{:?}", self.0)
        }
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Parses compact one-line notation (`"3412"`); bracketed or
    /// comma-separated forms are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!(
                "expected compact one-line notation such as 3412, got {s:?}"
            )));
        }
        let v = s.chars().map(|c| c as usize - '0' as usize).collect();
        Perm::new(v)
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `{y : y <= w}`, sorted by length and then one-line notation.
pub fn interval_below(w: &Perm) -> Vec<Perm> {
    let mut out: Vec<Perm> = Perm::all(w.size())
        .into_par_iter()
        .filter(|y| y.bruhat_leq(w).expect("same size"))
        .collect();
    out.sort_by_key(|p| (p.length(), p.clone()));
    out
}

/// Covering pairs `(i, j)` (indices into `elems`) with `elems[i] < elems[j]`.
pub fn hasse_edges(elems: &[Perm]) -> Vec<(usize, usize)> {
    let lengths: Vec<usize> = elems.iter().map(Perm::length).collect();
    let leq = |a: usize, b: usize| elems[a].bruhat_leq(&elems[b]).expect("same size");
    let mut edges = Vec::new();
    for i in 0..elems.len() {
        for j in 0..elems.len() {
            if lengths[j] != lengths[i] + 1 || !leq(i, j) {
                continue;
            }
            let interpolant = (0..elems.len())
                .any(|t| t != i && t != j && leq(i, t) && leq(t, j));
            if !interpolant {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Graphviz rendering of a Bruhat interval, nodes labelled by one-line
/// notation and length.
pub fn to_dot(elems: &[Perm], edges: &[(usize, usize)]) -> String {
    let mut s = String::from("digraph bruhat {\n  rankdir=BT;\n");
    for (i, p) in elems.iter().enumerate() {
        s.push_str(&format!("  n{i} [label=\"{p} ({})\"];\n", p.length()));
    }
    for (a, b) in edges {
        s.push_str(&format!("  n{a} -> n{b};\n"));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(perm("3412").oneline(), &[3, 4, 1, 2]);
        assert_eq!(perm("3412").to_string(), "3412");
        assert!("[3,4,1,2]".parse::<Perm>().is_err());
        assert!("3,4,1,2".parse::<Perm>().is_err());
        assert!("3312".parse::<Perm>().is_err());
        assert!("".parse::<Perm>().is_err());
    }

    #[test]
    fn coxeter_elements() {
        assert_eq!(Perm::coxeter(4), perm("2341"));
        assert_eq!(Perm::coxeter_power(4, 2), perm("3412"));
        let c = Perm::coxeter(4);
        assert_eq!(c.compose(&c).unwrap(), Perm::coxeter_power(4, 2));
        assert_eq!(Perm::longest(2, 4), perm("2134"));
        assert_eq!(Perm::longest_rev(2, 4), perm("1243"));
    }

    #[test]
    fn composition_convention() {
        let lhs = Perm::longest(2, 4)
            .compose(&Perm::longest_rev(2, 4).compose(&Perm::longest(4, 4)).unwrap())
            .unwrap();
        assert_eq!(lhs, perm("3412"));
        assert_eq!(
            perm("3412").apply_set(&IndexSet::new(vec![1, 2]).unwrap()).unwrap(),
            IndexSet::new(vec![3, 4]).unwrap()
        );
        assert!(perm("12").compose(&perm("123")).is_err());
    }

    #[test]
    fn lengths_and_words() {
        assert_eq!(Perm::identity(5).length(), 0);
        assert_eq!(perm("4321").length(), 6);
        for w in Perm::all(5) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Perm::from_word(&word, 5), w);
            assert_eq!(w.compose(&w.inverse()).unwrap(), Perm::identity(5));
        }
    }

    #[test]
    fn bruhat_examples() {
        let c2 = perm("3412");
        assert!(Perm::identity(4).bruhat_leq(&c2).unwrap());
        assert!(perm("2134").bruhat_leq(&c2).unwrap());
        assert!(!perm("4321").bruhat_leq(&c2).unwrap());
        assert!(perm("12").bruhat_leq(&perm("123")).is_err());
    }

    #[test]
    fn intervals() {
        assert_eq!(interval_below(&Perm::identity(3)), vec![Perm::identity(3)]);
        assert_eq!(interval_below(&perm("3412")).len(), 14);
        // c^2 = 312 in S_3 has length 2: {123, 213, 132, 312}
        assert_eq!(interval_below(&Perm::coxeter_power(3, 2)).len(), 4);
        assert_eq!(interval_below(&perm("21")).len(), 2);
        assert_eq!(hasse_edges(&interval_below(&perm("21"))), vec![(0, 1)]);
    }

    #[test]
    fn hasse_edges_are_covers() {
        let elems = interval_below(&perm("3412"));
        let edges = hasse_edges(&elems);
        for &(a, b) in &edges {
            assert_eq!(elems[b].length(), elems[a].length() + 1);
        }
        // every comparable pair is joined by a saturated chain of edges
        let dot = to_dot(&elems, &edges);
        assert!(dot.contains("3412 (4)"));
    }

    #[test]
    fn matrix_convention() {
        assert_eq!(perm("231").matrix(), vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
    }

    #[test]
    fn apply_set_respects_composition() {
        let sets = crate::subsets::k_subsets(4, 2);
        for u in Perm::all(4) {
            for v in Perm::all(4) {
                let uv = u.compose(&v).unwrap();
                for s in &sets {
                    let direct = uv.apply_set(s).unwrap();
                    assert_eq!(direct.len(), s.len());
                    assert_eq!(direct, u.apply_set(&v.apply_set(s).unwrap()).unwrap());
                }
            }
        }
    }
}
