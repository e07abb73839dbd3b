use std::fmt;

use serde::{Deserialize, Serialize};

/// Shape of the matrix of generators `x_{ij}`, `1 <= i <= m`, `1 <= j <= n`.
///
/// Variables are numbered row-major: `x_{11}, x_{12}, …, x_{mn}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Dims {
    pub m: usize,
    pub n: usize,
}

impl Dims {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(m >= 1 && n >= 1, "matrix dimensions must be positive");
        Self { m, n }
    }

    pub fn nvars(&self) -> usize {
        self.m * self.n
    }

    /// Row-major index of `x_{ij}` (1-based `i`, `j`).
    pub fn var(&self, i: usize, j: usize) -> usize {
        assert!(
            (1..=self.m).contains(&i) && (1..=self.n).contains(&j),
            "x_{{{i},{j}}} outside a {}x{} matrix",
            self.m,
            self.n
        );
        (i - 1) * self.n + (j - 1)
    }

    /// `(i, j)` of a row-major index.
    pub fn pos(&self, v: usize) -> (usize, usize) {
        (v / self.n + 1, v % self.n + 1)
    }
}

/// An exponent vector over the row-major variables.
///
/// The derived `Ord` is the term order: total degree first, then
/// lexicographic with earlier variables heavier.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    deg: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            deg: 0,
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[v] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Self {
            deg: exps.iter().sum(),
            exps,
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Largest variable index with a positive exponent.
    pub fn last_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    pub fn times_var(&self, v: usize) -> Self {
        let mut m = self.clone();
        m.exps[v] += 1;
        m.deg += 1;
        m
    }

    /// Removes one factor of `x_v`; the exponent must be positive.
    pub fn without_var(&self, v: usize) -> Self {
        let mut m = self.clone();
        assert!(m.exps[v] > 0);
        m.exps[v] -= 1;
        m.deg -= 1;
        m
    }

    /// Commutative product: exponents add.
    pub fn mul(&self, other: &Self) -> Self {
        Self {
            deg: self.deg + other.deg,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` as exponent vectors, when `self` divides `other`.
    pub fn cofactor_in(&self, other: &Self) -> Option<Self> {
        self.divides(other).then(|| Self {
            deg: other.deg - self.deg,
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self::from_exps(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Variable indices in increasing order, repeated by exponent: the
    /// normal-order word of this monomial.
    pub fn word(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .flat_map(|(v, &e)| std::iter::repeat_n(v, e as usize))
            .collect()
    }

    /// `[[i, j, exp], …]` over the variables present.
    pub fn triples(&self, dims: Dims) -> Vec<[usize; 3]> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| {
                let (i, j) = dims.pos(v);
                [i, j, e as usize]
            })
            .collect()
    }

    pub fn render(&self, dims: Dims) -> String {
        if self.is_one() {
            return "1".into();
        }
        let wide = dims.m > 9 || dims.n > 9;
        self.triples(dims)
            .into_iter()
            .map(|[i, j, e]| {
                let name = if wide {
                    format!("x_{i}_{j}")
                } else {
                    format!("x{i}{j}")
                };
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_order_is_degree_then_lex() {
        let a = Monomial::from_exps(vec![1, 0, 0, 1]); // x11 x22
        let b = Monomial::from_exps(vec![0, 1, 1, 0]); // x12 x21
        let c = Monomial::from_exps(vec![0, 0, 0, 3]);
        assert!(a > b);
        assert!(c > a);
        assert!(Monomial::var(4, 0) > Monomial::var(4, 3));
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exps(vec![1, 2, 0]);
        let b = Monomial::from_exps(vec![2, 1, 1]);
        assert!(!a.divides(&b));
        let l = a.lcm(&b);
        assert_eq!(l.exps(), &[2, 2, 1]);
        assert_eq!(a.cofactor_in(&l).unwrap().exps(), &[1, 0, 1]);
        assert_eq!(l.word(), vec![0, 0, 1, 1, 2]);
    }

    #[test]
    fn rendering() {
        let d = Dims::new(2, 2);
        assert_eq!(Monomial::from_exps(vec![1, 0, 0, 2]).render(d), "x11*x22^2");
        assert_eq!(Monomial::one(4).render(d), "1");
        assert_eq!(d.pos(d.var(2, 1)), (2, 1));
    }
}
