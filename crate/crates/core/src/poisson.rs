//! The matrix affine Poisson space `(M_{m,n}, π_{m,n})`: the quadratic
//! bracket, classical minors `A(y)`, and the classification of rational
//! matrices into torus orbits of symplectic leaves via Bruhat rank tables.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::coeff::Laurent;
use crate::error::{Error, Result};
use crate::grobner::{two_sided_groebner, GroebnerBasis};
use crate::qmatrix::{CPoly, Commutative, Dims, Monomial, QMPoly};
use crate::subsets::{generator_minors, IndexSet, MinorSpec};
use crate::weyl::{interval_below, Perm};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn sign(a: usize, b: usize) -> i64 {
    match b.cmp(&a) {
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
    }
}

/// `∂f/∂x_v`.
pub fn derivative(f: &CPoly, v: usize) -> CPoly {
    CPoly::from_terms(
        f.dims(),
        f.terms().filter(|(m, _)| m.exps()[v] > 0).map(|(m, c)| {
            let e = m.exps()[v];
            (m.without_var(v), c * rat(i64::from(e)))
        }),
    )
}

/// `{x_{ij}, x_{kl}} = (sign(k−i) + sign(l−j)) x_{il} x_{kj}`.
pub fn coordinate_bracket(dims: Dims, (i, j): (usize, usize), (k, l): (usize, usize)) -> CPoly {
    let factor = sign(i, k) + sign(j, l);
    if factor == 0 {
        return CPoly::zero(dims);
    }
    let m = Monomial::var(dims.nvars(), dims.var(i, l)).mul(&Monomial::var(dims.nvars(), dims.var(k, j)));
    CPoly::term(dims, m, rat(factor))
}

/// The bracket of `π_{m,n}`, extended from the coordinates by Leibniz.
pub fn bracket(f: &CPoly, g: &CPoly) -> CPoly {
    assert_eq!(f.dims(), g.dims(), "brackets of polynomials on different spaces");
    let dims = f.dims();
    let nv = dims.nvars();
    let df: Vec<CPoly> = (0..nv).map(|v| derivative(f, v)).collect();
    let dg: Vec<CPoly> = (0..nv).map(|v| derivative(g, v)).collect();
    let mut out = CPoly::zero(dims);
    for a in (0..nv).filter(|&a| !df[a].is_zero()) {
        for b in (0..nv).filter(|&b| !dg[b].is_zero()) {
            let br = coordinate_bracket(dims, dims.pos(a), dims.pos(b));
            if !br.is_zero() {
                out = &out + &(&(&df[a] * &dg[b]) * &br);
            }
        }
    }
    out
}

/// `(uv − vu)/(q − 1)` at `q = 1` for generators `u = x_{ij}`,
/// `v = x_{kl}`, compared with the bracket.
pub fn semiclassical_check(dims: Dims, u: (usize, usize), v: (usize, usize)) -> Result<bool> {
    let (x, y) = (QMPoly::<Laurent>::var(dims, u.0, u.1), QMPoly::<Laurent>::var(dims, v.0, v.1));
    let comm = &(&x * &y) - &(&y * &x);
    let mut limit = CPoly::zero(dims);
    for (m, c) in comm.terms() {
        let reduced = c.div_qminus1()?;
        limit = &limit + &CPoly::term(dims, m.clone(), BigRational::from_integer(reduced.eval_q1()));
    }
    let cx = CPoly::var(dims, u.0, u.1);
    let cy = CPoly::var(dims, v.0, v.1);
    Ok(limit == bracket(&cx, &cy))
}

/// A bracket identity failing on a coordinate triple.
#[derive(Clone, Debug, Serialize)]
pub struct BracketFailure {
    pub identity: &'static str,
    pub coordinates: Vec<(usize, usize)>,
}

/// Antisymmetry on coordinate pairs and the Jacobi identity on coordinate
/// triples.
pub fn check_bracket_axioms(dims: Dims) -> Vec<BracketFailure> {
    let nv = dims.nvars();
    let x: Vec<CPoly> = (0..nv)
        .map(|v| {
            let (i, j) = dims.pos(v);
            CPoly::var(dims, i, j)
        })
        .collect();
    let mut br: Vec<Vec<CPoly>> = vec![Vec::with_capacity(nv); nv];
    for a in 0..nv {
        for b in 0..nv {
            br[a].push(bracket(&x[a], &x[b]));
        }
    }
    let mut failures = Vec::new();
    for a in 0..nv {
        for b in 0..nv {
            if !(&br[a][b] + &br[b][a]).is_zero() {
                failures.push(BracketFailure {
                    identity: "antisymmetry",
                    coordinates: vec![dims.pos(a), dims.pos(b)],
                });
            }
        }
    }
    let jacobi: Vec<BracketFailure> = (0..nv)
        .into_par_iter()
        .flat_map_iter(|a| {
            let x = &x;
            let br = &br;
            (0..nv).flat_map(move |b| {
                (0..nv).filter_map(move |c| {
                    let s = &(&bracket(&x[a], &br[b][c]) + &bracket(&x[b], &br[c][a])) + &bracket(&x[c], &br[a][b]);
                    (!s.is_zero()).then(|| BracketFailure {
                        identity: "jacobi",
                        coordinates: vec![dims.pos(a), dims.pos(b), dims.pos(c)],
                    })
                })
            })
        })
        .collect();
    failures.extend(jacobi);
    failures
}

/// The classical minor `Δ_{rows, cols}` by the Leibniz formula.
pub fn classical_minor(dims: Dims, rows: &IndexSet, cols: &IndexSet) -> Result<CPoly> {
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch {
            expected: rows.len(),
            found: cols.len(),
        });
    }
    let (r, c) = (rows.elems(), cols.elems());
    let nv = dims.nvars();
    let mut out = CPoly::zero(dims);
    for sigma in Perm::all(r.len()) {
        let mono = (0..r.len()).fold(Monomial::one(nv), |acc, t| {
            acc.times_var(dims.var(r[t], c[sigma.apply(t + 1) - 1]))
        });
        let s = if sigma.length() % 2 == 0 { 1 } else { -1 };
        out = &out + &CPoly::term(dims, mono, rat(s));
    }
    Ok(out)
}

/// The classical generating set `A(y)`.
pub fn a_generators(y: &Perm, m: usize, n: usize) -> Result<Vec<CPoly>> {
    let dims = Dims::new(m, n);
    generator_minors(y, m, n)?
        .iter()
        .map(|s: &MinorSpec| classical_minor(dims, &s.rows, &s.cols))
        .collect()
}

/// Every bracket `{g, x_{ij}}` with `g ∈ A(y)` lies in the ideal of `A(y)`.
pub fn poisson_ideal_check(y: &Perm, m: usize, n: usize) -> Result<bool> {
    let dims = Dims::new(m, n);
    let gens = a_generators(y, m, n)?;
    let basis: GroebnerBasis<BigRational, Commutative> = two_sided_groebner(dims, &gens)?;
    Ok(gens.iter().all(|g| {
        (1..=m).all(|i| (1..=n).all(|j| basis.contains(&bracket(g, &CPoly::var(dims, i, j)))))
    }))
}

/// Value of `f` at the matrix `x`.
pub fn eval(f: &CPoly, x: &RatMatrix) -> BigRational {
    let dims = f.dims();
    assert_eq!((x.nrows(), x.ncols()), (dims.m, dims.n), "evaluation point shape");
    let mut acc = BigRational::zero();
    for (mono, c) in f.terms() {
        let mut t = c.clone();
        for (v, &e) in mono.exps().iter().enumerate() {
            if e > 0 {
                let (i, j) = dims.pos(v);
                t *= num_traits::pow(x.get(i, j).clone(), e as usize);
            }
        }
        acc += t;
    }
    acc
}

/// A dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: Vec<Vec<BigRational>>,
}

impl RatMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || width == 0 {
            return Err(Error::Parse("a matrix needs at least one entry".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != width) {
            return Err(Error::SizeMismatch {
                expected: width,
                found: bad.len(),
            });
        }
        Ok(Self { rows })
    }

    pub fn zeros(m: usize, n: usize) -> Self {
        Self {
            rows: vec![vec![BigRational::zero(); n]; m],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            out.rows[i][i] = BigRational::one();
        }
        out
    }

    /// Permutation matrix with `1` at row `w(j)`, column `j`.
    pub fn permutation(w: &Perm) -> Self {
        let n = w.size();
        let mut out = Self::zeros(n, n);
        for j in 1..=n {
            out.rows[w.apply(j) - 1][j - 1] = BigRational::one();
        }
        out
    }

    /// Parses a JSON array of rows of rational strings such as `"-3/4"`.
    /// Plain JSON integers are accepted too.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
        let rows = value
            .as_array()
            .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
        let parsed = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("each row must be an array".into()))?
                    .iter()
                    .map(parse_entry)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parsed)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.rows[i - 1][j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.rows[i - 1][j - 1] = v;
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ncols() != other.nrows() {
            return Err(Error::SizeMismatch {
                expected: self.ncols(),
                found: other.nrows(),
            });
        }
        let mut out = Self::zeros(self.nrows(), other.ncols());
        for i in 0..self.nrows() {
            for j in 0..other.ncols() {
                let mut s = BigRational::zero();
                for t in 0..self.ncols() {
                    if !self.rows[i][t].is_zero() && !other.rows[t][j].is_zero() {
                        s += &self.rows[i][t] * &other.rows[t][j];
                    }
                }
                out.rows[i][j] = s;
            }
        }
        Ok(out)
    }

    /// Rank of the top-left `i × j` block, by fraction-free elimination.
    pub fn northwest_rank(&self, i: usize, j: usize) -> usize {
        let block: Vec<Vec<BigRational>> = self.rows[..i].iter().map(|r| r[..j].to_vec()).collect();
        bareiss_rank(block)
    }

    pub fn rank(&self) -> usize {
        self.northwest_rank(self.nrows(), self.ncols())
    }
}

fn parse_entry(v: &serde_json::Value) -> Result<BigRational> {
    match v {
        serde_json::Value::String(s) => {
            BigRational::from_str(s.trim()).map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
        }
        serde_json::Value::Number(n) if n.is_i64() => Ok(rat(n.as_i64().unwrap())),
        other => Err(Error::Parse(format!("matrix entries must be rational strings, got {other}"))),
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        rows.serialize(s)
    }
}

/// Rank over ℚ: rows are cleared of denominators, then Bareiss
/// elimination runs over ℤ with exact divisions.
fn bareiss_rank(rows: Vec<Vec<BigRational>>) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let (nr, nc) = (a.len(), a.first().map_or(0, Vec::len));
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..nc {
        let Some(p) = (rank..nr).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..nr {
            for j in c + 1..nc {
                let num = &a[rank][c] * &a[r][j] - &a[r][c] * &a[rank][j];
                let (quo, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "fraction-free step must divide exactly");
                a[r][j] = quo;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// `f(x) = [[I_m, w°_m x], [0, I_n]]`.
pub fn unipotent_embedding(x: &RatMatrix) -> RatMatrix {
    let (m, n) = (x.nrows(), x.ncols());
    let mut g = RatMatrix::identity(m + n);
    for i in 1..=m {
        for j in 1..=n {
            // row i of w°_m x is row m+1−i of x
            g.set(i, m + j, x.get(m + 1 - i, j).clone());
        }
    }
    g
}

/// The permutation `y` whose Bruhat cell `B_− y B_+` contains `g`, read off
/// the northwest rank table.
pub fn bruhat_cell(g: &RatMatrix) -> Result<Perm> {
    let n = g.nrows();
    if g.ncols() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: g.ncols(),
        });
    }
    let r: Vec<Vec<i64>> = (0..=n)
        .map(|i| (0..=n).map(|j| g.northwest_rank(i, j) as i64).collect())
        .collect();
    let mut oneline = Vec::with_capacity(n);
    for b in 1..=n {
        let hits: Vec<usize> = (1..=n)
            .filter(|&i| r[i][b] - r[i - 1][b] - r[i][b - 1] + r[i - 1][b - 1] == 1)
            .collect();
        if hits.len() != 1 {
            return Err(Error::Domain(format!("rank table of {g} is not that of an invertible matrix")));
        }
        oneline.push(hits[0]);
    }
    let y = Perm::new(oneline).map_err(|_| Error::Domain(format!("rank table of {g} is inconsistent")))?;
    Ok(y)
}

/// `y` with `x ∈ S(y)`, i.e. `f(x) · c^m ∈ B_− y B_+`.
pub fn leaf_of(x: &RatMatrix) -> Result<Perm> {
    let (m, n) = (x.nrows(), x.ncols());
    let g = unipotent_embedding(x).mul(&RatMatrix::permutation(&Perm::coxeter_power(m + n, m)))?;
    bruhat_cell(&g)
}

/// All `2^{mn}` matrices with entries in `{0, 1}`.
pub fn zero_one_matrices(m: usize, n: usize) -> Vec<RatMatrix> {
    (0u32..1 << (m * n))
        .map(|bits| {
            let mut x = RatMatrix::zeros(m, n);
            for v in 0..m * n {
                if bits >> v & 1 == 1 {
                    x.set(v / n + 1, v % n + 1, BigRational::one());
                }
            }
            x
        })
        .collect()
}

fn small_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let p: i64 = rng.gen_range(-6..=6);
    let q: i64 = rng.gen_range(1..=4);
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Seeded random rational matrices. A third are dense, a third sparse and a
/// third of rank at most one, so that degenerate leaves are sampled too.
pub fn random_matrices(m: usize, n: usize, count: usize, seed: u64) -> Vec<RatMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|t| {
            let mut x = RatMatrix::zeros(m, n);
            match t % 3 {
                0 => {
                    for i in 1..=m {
                        for j in 1..=n {
                            x.set(i, j, small_rational(&mut rng));
                        }
                    }
                }
                1 => {
                    for i in 1..=m {
                        for j in 1..=n {
                            if rng.gen::<bool>() {
                                x.set(i, j, small_rational(&mut rng));
                            }
                        }
                    }
                }
                _ => {
                    let u: Vec<BigRational> = (0..m).map(|_| small_rational(&mut rng)).collect();
                    let v: Vec<BigRational> = (0..n).map(|_| small_rational(&mut rng)).collect();
                    for i in 1..=m {
                        for j in 1..=n {
                            x.set(i, j, &u[i - 1] * &v[j - 1]);
                        }
                    }
                }
            }
            x
        })
        .collect()
}

fn nonzero_rational(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// `leaf_of(A x B^{-1}) = leaf_of(x)` for seeded diagonal `A`, `B` and the
/// given samples. Returns the offending samples.
pub fn torus_invariance(samples: &[RatMatrix], trials: usize, seed: u64) -> Result<Vec<RatMatrix>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for t in 0..trials {
        let x = &samples[t % samples.len()];
        let (m, n) = (x.nrows(), x.ncols());
        let a: Vec<BigRational> = (0..m).map(|_| nonzero_rational(&mut rng)).collect();
        let b: Vec<BigRational> = (0..n).map(|_| nonzero_rational(&mut rng)).collect();
        let mut y = x.clone();
        for i in 1..=m {
            for j in 1..=n {
                y.set(i, j, x.get(i, j) * &a[i - 1] / &b[j - 1]);
            }
        }
        if leaf_of(&y)? != leaf_of(x)? {
            bad.push(x.clone());
        }
    }
    Ok(bad)
}

#[derive(Clone, Debug, Serialize)]
pub struct StratFailure {
    pub x: RatMatrix,
    pub y: Perm,
    pub leaf: Perm,
    /// A minor of `A(y)` not vanishing at `x` although `y <= leaf`, or
    /// `None` when all of `A(y)` vanishes although `y` is not below the leaf.
    pub minor: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StratReport {
    pub m: usize,
    pub n: usize,
    pub samples: usize,
    pub checks: usize,
    /// How many samples landed on each leaf.
    pub leaves: BTreeMap<String, usize>,
    pub failures: Vec<StratFailure>,
    pub ok: bool,
}

/// For each sample `x` and each `y <= c^m`: `A(y)` vanishes at `x` iff
/// `y <= leaf_of(x)`.
pub fn verify_stratification(m: usize, n: usize, samples: &[RatMatrix]) -> Result<StratReport> {
    let dims = Dims::new(m, n);
    let elems = interval_below(&Perm::coxeter_power(m + n, m));
    let gens: Vec<(Perm, Vec<CPoly>)> = elems
        .iter()
        .map(|y| Ok((y.clone(), a_generators(y, m, n)?)))
        .collect::<Result<_>>()?;
    for x in samples {
        if (x.nrows(), x.ncols()) != (dims.m, dims.n) {
            return Err(Error::SizeMismatch {
                expected: dims.m * dims.n,
                found: x.nrows() * x.ncols(),
            });
        }
    }
    let per_sample: Vec<(Perm, Vec<StratFailure>)> = samples
        .par_iter()
        .map(|x| {
            let leaf = leaf_of(x)?;
            let mut fails = Vec::new();
            for (y, minors) in &gens {
                let below = y.bruhat_leq(&leaf)?;
                let nonvanishing = minors.iter().find(|f| !eval(f, x).is_zero());
                match (below, nonvanishing) {
                    (true, Some(f)) => fails.push(StratFailure {
                        x: x.clone(),
                        y: y.clone(),
                        leaf: leaf.clone(),
                        minor: Some(f.to_string()),
                    }),
                    (false, None) => fails.push(StratFailure {
                        x: x.clone(),
                        y: y.clone(),
                        leaf: leaf.clone(),
                        minor: None,
                    }),
                    _ => {}
                }
            }
            Ok((leaf, fails))
        })
        .collect::<Result<_>>()?;
    let mut leaves = BTreeMap::new();
    let mut failures = Vec::new();
    for (leaf, f) in per_sample {
        *leaves.entry(leaf.to_string()).or_insert(0) += 1;
        failures.extend(f);
    }
    Ok(StratReport {
        m,
        n,
        samples: samples.len(),
        checks: samples.len() * elems.len(),
        leaves,
        ok: failures.is_empty(),
        failures,
    })
}

/// `true` when the q-commutator of two generators has an exact `(q − 1)`
/// factor; used to report semiclassical failures precisely.
pub fn commutator_divisible(dims: Dims, u: (usize, usize), v: (usize, usize)) -> bool {
    let (x, y) = (QMPoly::<Laurent>::var(dims, u.0, u.1), QMPoly::<Laurent>::var(dims, v.0, v.1));
    let comm = &(&x * &y) - &(&y * &x);
    let ok = comm.terms().all(|(_, c)| c.div_qminus1().is_ok());
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmatrix::aq_generators;
    use std::collections::BTreeSet;

    fn d(m: usize, n: usize) -> Dims {
        Dims::new(m, n)
    }

    fn x(dims: Dims, i: usize, j: usize) -> CPoly {
        CPoly::var(dims, i, j)
    }

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn mat(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::new(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn bracket_examples() {
        let dd = d(2, 2);
        assert_eq!(bracket(&x(dd, 1, 1), &x(dd, 1, 2)), &x(dd, 1, 1) * &x(dd, 1, 2));
        assert!(bracket(&x(dd, 1, 2), &x(dd, 2, 1)).is_zero());
        assert_eq!(
            bracket(&x(dd, 1, 1), &x(dd, 2, 2)),
            (&x(dd, 1, 2) * &x(dd, 2, 1)).scale(&rat(2))
        );
        // {det, x11} = 0: the determinant is Casimir
        let det = &(&x(dd, 1, 1) * &x(dd, 2, 2)) - &(&x(dd, 1, 2) * &x(dd, 2, 1));
        for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            assert!(bracket(&det, &x(dd, i, j)).is_zero());
        }
    }

    #[test]
    fn semiclassical_limit() {
        for (m, n) in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)] {
            let dd = d(m, n);
            for a in 0..dd.nvars() {
                for b in 0..dd.nvars() {
                    assert!(commutator_divisible(dd, dd.pos(a), dd.pos(b)));
                    assert!(semiclassical_check(dd, dd.pos(a), dd.pos(b)).unwrap());
                }
            }
        }
    }

    #[test]
    fn bracket_axioms_small() {
        for (m, n) in [(1, 2), (2, 2), (2, 3)] {
            assert!(check_bracket_axioms(d(m, n)).is_empty());
        }
    }

    #[test]
    fn classical_generators() {
        assert!(a_generators(&Perm::identity(4), 2, 2).unwrap().is_empty());
        let dd = d(2, 2);
        let det = &(&x(dd, 1, 1) * &x(dd, 2, 2)) - &(&x(dd, 1, 2) * &x(dd, 2, 1));
        assert_eq!(a_generators(&perm("1324"), 2, 2).unwrap(), vec![det]);
        assert_eq!(a_generators(&perm("21"), 1, 1).unwrap(), vec![x(d(1, 1), 1, 1)]);
        assert!(a_generators(&perm("4321"), 2, 2).is_err());
    }

    #[test]
    fn classical_generators_are_the_limit_of_the_quantum_ones() {
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            for y in interval_below(&Perm::coxeter_power(m + n, m)) {
                let key = |f: &CPoly| f.to_string();
                let a: BTreeSet<String> = a_generators(&y, m, n).unwrap().iter().map(key).collect();
                let b: BTreeSet<String> =
                    aq_generators(&y, m, n).unwrap().iter().map(|f| key(&f.specialize_q1())).collect();
                assert_eq!(a, b, "y = {y}");
            }
        }
    }

    #[test]
    fn poisson_ideals() {
        for y in interval_below(&Perm::coxeter_power(4, 2)) {
            assert!(poisson_ideal_check(&y, 2, 2).unwrap(), "y = {y}");
        }
    }

    #[test]
    fn ranks() {
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(mat(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(mat(&[&[0, 1, 2], &[0, 2, 5], &[0, 3, 7]]).rank(), 2);
        let r = RatMatrix::from_json(r#"[["1/2", "1/3"], ["3/2", "1"]]"#).unwrap();
        assert_eq!(r.rank(), 1);
        assert!(RatMatrix::from_json(r#"[["1/0"]]"#).is_err());
        assert!(RatMatrix::from_json(r#"[["1"], ["1", "2"]]"#).is_err());
        assert!(RatMatrix::from_json(r#"[[0.5]]"#).is_err());
    }

    #[test]
    fn cells_of_permutation_matrices() {
        for n in 1..=4 {
            for y in Perm::all(n) {
                assert_eq!(bruhat_cell(&RatMatrix::permutation(&y)).unwrap(), y);
            }
        }
    }

    #[test]
    fn leaf_examples() {
        assert_eq!(leaf_of(&RatMatrix::zeros(2, 2)).unwrap(), perm("3412"));
        assert_eq!(leaf_of(&mat(&[&[1, 2], &[3, 1]])).unwrap(), Perm::identity(4));
        assert_eq!(leaf_of(&mat(&[&[5]])).unwrap(), Perm::identity(2));
        assert_eq!(leaf_of(&mat(&[&[0]])).unwrap(), perm("21"));
    }

    #[test]
    fn stratification_two_by_two() {
        let mut samples = zero_one_matrices(2, 2);
        assert_eq!(samples.len(), 16);
        samples.extend(random_matrices(2, 2, 60, 7));
        let r = verify_stratification(2, 2, &samples).unwrap();
        assert!(r.ok, "{:?}", r.failures.first());
        assert!(torus_invariance(&samples, 30, 11).unwrap().is_empty());
    }

    #[test]
    fn stratification_rectangular() {
        for (m, n) in [(1, 2), (2, 1), (1, 3), (3, 1)] {
            let mut samples = zero_one_matrices(m, n);
            samples.extend(random_matrices(m, n, 30, 3));
            let r = verify_stratification(m, n, &samples).unwrap();
            assert!(r.ok, "({m},{n}) {:?}", r.failures.first());
        }
    }

    #[test]
    fn every_leaf_is_hit_in_two_by_two() {
        let r = verify_stratification(2, 2, &zero_one_matrices(2, 2)).unwrap();
        // zero-one matrices already meet all 14 torus orbits of leaves
        assert_eq!(r.leaves.len(), 14);
    }
}
