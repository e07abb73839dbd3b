//! k-subset combinatorics: the componentwise order, the row/column splits,
//! Demazure index sets, and the index pairs naming the minor generators.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::Perm;

/// A strictly increasing subset of {1..N}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    /// Accepts strictly increasing positive entries.
    pub fn new(elems: Vec<usize>) -> Result<Self> {
        if elems.first() == Some(&0) {
            return Err(Error::InvalidIndexSet("indices start at 1".into()));
        }
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndexSet(format!(
                "{elems:?} is not strictly increasing"
            )));
        }
        Ok(Self(elems))
    }

    /// Sorts the input; repeated entries are an error.
    pub fn from_unsorted(mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        Self::new(elems)
    }

    /// `{lo..=hi}`; empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        Self((lo.max(1)..=hi).collect())
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn elems(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn max_elem(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn difference(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.0.iter().copied().filter(|i| !other.contains(*i)).collect())
    }

    pub fn intersection(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.0.iter().copied().filter(|i| other.contains(*i)).collect())
    }

    pub fn with(&self, i: usize) -> IndexSet {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&i) {
            v.insert(pos, i);
        }
        IndexSet(v)
    }

    pub fn without(&self, i: usize) -> IndexSet {
        IndexSet(self.0.iter().copied().filter(|&x| x != i).collect())
    }

    /// Subtracts `m` from every element; all elements must exceed `m`.
    pub fn shift_down(&self, m: usize) -> IndexSet {
        debug_assert!(self.0.iter().all(|&i| i > m));
        IndexSet(self.0.iter().map(|&i| i - m).collect())
    }

    /// Componentwise order: `i_l <= j_l` for every position `l`.
    pub fn leq(&self, other: &IndexSet) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }
}

impl TryFrom<Vec<usize>> for IndexSet {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        IndexSet::new(v)
    }
}

impl From<IndexSet> for Vec<usize> {
    fn from(s: IndexSet) -> Self {
        s.0
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

pub fn subset_leq(a: &IndexSet, b: &IndexSet) -> Result<bool> {
    a.leq(b)
}

/// All k-subsets of {1..n} in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<IndexSet> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(IndexSet(cur.clone()));
        // advance to the next combination
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// `(I ∩ {1..m}, I ∩ {m+1..m+n})`.
pub fn split(set: &IndexSet, m: usize) -> (IndexSet, IndexSet) {
    let (a, b): (Vec<usize>, Vec<usize>) = set.0.iter().partition(|&&i| i <= m);
    (IndexSet(a), IndexSet(b))
}

/// `{I : |I| = k, I <= w({1..k})}`.
pub fn demazure_index_sets(w: &Perm, k: usize) -> Vec<IndexSet> {
    let top = w.apply_set(&IndexSet::range(1, k)).expect("in range");
    k_subsets(w.size(), k)
        .into_iter()
        .filter(|s| s.leq(&top).expect("equal sizes"))
        .collect()
}

/// `{I : I <= w({1..k}), not I >= y({1..k})}`.
pub fn complement_index_sets(w: &Perm, y: &Perm, k: usize) -> Result<Vec<IndexSet>> {
    if w.size() != y.size() {
        return Err(Error::SizeMismatch {
            expected: w.size(),
            found: y.size(),
        });
    }
    let bottom = y.apply_set(&IndexSet::range(1, k))?;
    Ok(demazure_index_sets(w, k)
        .into_iter()
        .filter(|s| !bottom.leq(s).expect("equal sizes"))
        .collect())
}

/// Row and column sets of a square minor of an m×n matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct MinorSpec {
    pub rows: IndexSet,
    pub cols: IndexSet,
}

impl MinorSpec {
    pub fn new(rows: IndexSet, cols: IndexSet) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::SizeMismatch {
                expected: rows.len(),
                found: cols.len(),
            });
        }
        Ok(Self { rows, cols })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

impl fmt::Display for MinorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ[{};{}]", self.rows, self.cols)
    }
}

/// Reverses {1..m}: `i ↦ m + 1 − i`, fixing larger letters.
fn reverse_rows(set: &IndexSet, m: usize) -> IndexSet {
    IndexSet::from_unsorted(
        set.0
            .iter()
            .map(|&i| if i <= m { m + 1 - i } else { i })
            .collect(),
    )
    .expect("an involution keeps entries distinct")
}

/// The minor attached to an admissible index set `I` of size `k`.
///
/// For `k <= n` the rows are `w°_m(p_1(I))` and the columns
/// `({m+1..m+k} ∖ p_2(I)) − m`; for `k > n` the rows are
/// `w°_m(p_1(I) ∖ {1..k−n})` and the columns `({m+1..m+n} ∖ p_2(I)) − m`.
pub fn minor_from_index(m: usize, n: usize, k: usize, set: &IndexSet) -> Result<MinorSpec> {
    let size = m + n;
    if k == 0 || k >= size || set.len() != k || set.max_elem().is_some_and(|x| x > size) {
        return Err(Error::Precondition(format!(
            "index set {set} is not a {k}-subset of 1..{size} with 0 < k < {size}"
        )));
    }
    let top = Perm::coxeter_power(size, m).apply_set(&IndexSet::range(1, k))?;
    if !set.leq(&top)? {
        return Err(Error::Precondition(format!("{set} is not <= {top}")));
    }
    let (p1, p2) = split(set, m);
    let spec = if k <= n {
        let window = IndexSet::range(m + 1, m + k);
        let rows = reverse_rows(&p1, m);
        let cols = window.difference(&p2).shift_down(m);
        MinorSpec { rows, cols }
    } else {
        let head = IndexSet::range(1, k - n);
        let rows = reverse_rows(&p1.difference(&head), m);
        let cols = IndexSet::range(m + 1, m + n).difference(&p2).shift_down(m);
        MinorSpec { rows, cols }
    };
    assert_eq!(
        spec.rows.len(),
        spec.cols.len(),
        "admissible index sets give square minors"
    );
    Ok(spec)
}

/// One admissible `(k, I)` together with the minor it names.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GeneratorEntry {
    pub k: usize,
    #[serde(rename = "I")]
    pub index: IndexSet,
    pub minor: MinorSpec,
    /// Set when an earlier entry already produced the same minor.
    pub duplicate: bool,
}

/// Every `(k, I)` with `1 <= k < m+n`, `I <= c^m({1..k})` and
/// `not I >= y({1..k})`, in increasing `k` then lexicographic `I`.
///
/// Fails unless `y <= c^m`.
pub fn generator_entries(y: &Perm, m: usize, n: usize) -> Result<Vec<GeneratorEntry>> {
    let size = m + n;
    if y.size() != size {
        return Err(Error::SizeMismatch {
            expected: size,
            found: y.size(),
        });
    }
    let w = Perm::coxeter_power(size, m);
    if !y.bruhat_leq(&w)? {
        return Err(Error::NotBelow {
            y: y.to_string(),
            w: w.to_string(),
        });
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in 1..size {
        for set in complement_index_sets(&w, y, k)? {
            let minor = minor_from_index(m, n, k, &set)?;
            let duplicate = !seen.insert(minor.clone());
            out.push(GeneratorEntry {
                k,
                index: set,
                minor,
                duplicate,
            });
        }
    }
    Ok(out)
}

/// The distinct minors of [`generator_entries`], in first-seen order.
pub fn generator_minors(y: &Perm, m: usize, n: usize) -> Result<Vec<MinorSpec>> {
    Ok(generator_entries(y, m, n)?
        .into_iter()
        .filter(|e| !e.duplicate)
        .map(|e| e.minor)
        .collect())
}
