use num_bigint::BigInt;

use super::monomial::{Dims, Monomial};
use super::poly::QMPoly;
use crate::coeff::Laurent;
use crate::error::{Error, Result};
use crate::subsets::{generator_minors, IndexSet, MinorSpec};
use crate::weyl::Perm;

fn check_minor(dims: Dims, rows: &IndexSet, cols: &IndexSet) -> Result<()> {
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch {
            expected: rows.len(),
            found: cols.len(),
        });
    }
    if rows.max_elem().is_some_and(|i| i > dims.m) || cols.max_elem().is_some_and(|j| j > dims.n) {
        return Err(Error::InvalidIndexSet(format!(
            "minor {rows};{cols} outside a {}x{} matrix",
            dims.m, dims.n
        )));
    }
    Ok(())
}

/// `(−q)^e`.
fn minus_q_pow(e: i32) -> Laurent {
    let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
    Laurent::monomial(BigInt::from(sign), e)
}

/// The ordered product of generators `x_{a_1 b_1} ⋯ x_{a_r b_r}`.
fn word_product(dims: Dims, word: &[(usize, usize)]) -> QMPoly {
    let nv = dims.nvars();
    word.iter().fold(QMPoly::one(dims), |acc, &(i, j)| {
        acc.mul_monomial_right(&Monomial::var(nv, dims.var(i, j)))
    })
}

fn expansion(dims: Dims, rows: &IndexSet, cols: &IndexSet, reversed: bool) -> QMPoly {
    let (r, c) = (rows.elems(), cols.elems());
    let k = r.len();
    let mut out = QMPoly::zero(dims);
    for sigma in Perm::all(k) {
        let mut word: Vec<(usize, usize)> = (0..k).map(|t| (r[t], c[sigma.apply(t + 1) - 1])).collect();
        let l = sigma.length() as i32;
        let coeff = if reversed {
            word.reverse();
            minus_q_pow(-l)
        } else {
            minus_q_pow(l)
        };
        out = &out + &word_product(dims, &word).scale(&coeff);
    }
    out
}

/// `Δ^q_{I,J} = Σ_σ (−q)^{l(σ)} x_{i_1 j_σ(1)} ⋯ x_{i_k j_σ(k)}`.
pub fn qminor(dims: Dims, rows: &IndexSet, cols: &IndexSet) -> Result<QMPoly> {
    check_minor(dims, rows, cols)?;
    Ok(expansion(dims, rows, cols, false))
}

/// The second expansion `Σ_σ (−q)^{−l(σ)} x_{i_k j_σ(k)} ⋯ x_{i_1 j_σ(1)}`.
pub fn qminor_reversed(dims: Dims, rows: &IndexSet, cols: &IndexSet) -> Result<QMPoly> {
    check_minor(dims, rows, cols)?;
    Ok(expansion(dims, rows, cols, true))
}

/// Computes both expansions and fails unless their normal forms agree.
pub fn qminor_checked(dims: Dims, rows: &IndexSet, cols: &IndexSet) -> Result<QMPoly> {
    let a = qminor(dims, rows, cols)?;
    let b = qminor_reversed(dims, rows, cols)?;
    if a != b {
        return Err(Error::Verification(format!(
            "expansions of the quantum minor {rows};{cols} differ: {a} vs {b}"
        )));
    }
    Ok(a)
}

pub fn qminor_of(dims: Dims, spec: &MinorSpec) -> Result<QMPoly> {
    qminor(dims, &spec.rows, &spec.cols)
}

/// The quantum minors `A_q(y)` generating the prime `I(y)`, deduplicated.
pub fn aq_generators(y: &Perm, m: usize, n: usize) -> Result<Vec<QMPoly>> {
    let dims = Dims::new(m, n);
    generator_minors(y, m, n)?
        .iter()
        .map(|spec| qminor_of(dims, spec))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmatrix::MultiDeg;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_minors() {
        let d = Dims::new(2, 2);
        assert_eq!(qminor(d, &set(&[1]), &set(&[1])).unwrap(), QMPoly::var(d, 1, 1));
        let det = qminor_checked(d, &set(&[1, 2]), &set(&[1, 2])).unwrap();
        assert_eq!(det.to_string(), "x11*x22 - q*x12*x21");
        assert!(qminor(d, &set(&[1, 2]), &set(&[1])).is_err());
        assert!(qminor(d, &set(&[3]), &set(&[1])).is_err());
    }

    #[test]
    fn double_expansion_up_to_three_by_three() {
        for m in 1..=3 {
            for n in 1..=3 {
                let d = Dims::new(m, n);
                for k in 1..=m.min(n) {
                    for r in crate::subsets::k_subsets(m, k) {
                        for c in crate::subsets::k_subsets(n, k) {
                            let f = qminor_checked(d, &r, &c).unwrap();
                            assert_eq!(f.multidegree().unwrap(), MultiDeg::of_minor(d, r.elems(), c.elems()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn the_quantum_determinant_is_central_in_two_by_two() {
        let d = Dims::new(2, 2);
        let det = qminor(d, &set(&[1, 2]), &set(&[1, 2])).unwrap();
        for i in 1..=2 {
            for j in 1..=2 {
                let x = QMPoly::var(d, i, j);
                assert_eq!(&det * &x, &x * &det);
            }
        }
    }

    #[test]
    fn generator_sets() {
        let p = |v: &[usize]| Perm::new(v.to_vec()).unwrap();
        assert!(aq_generators(&p(&[1, 2, 3, 4]), 2, 2).unwrap().is_empty());
        let d = Dims::new(2, 2);
        let det = qminor(d, &set(&[1, 2]), &set(&[1, 2])).unwrap();
        assert_eq!(aq_generators(&p(&[1, 3, 2, 4]), 2, 2).unwrap(), vec![det.clone()]);
        let mut all = aq_generators(&p(&[3, 4, 1, 2]), 2, 2).unwrap();
        assert_eq!(all.len(), 5);
        let mut expect: Vec<QMPoly> = [(1, 1), (1, 2), (2, 1), (2, 2)]
            .iter()
            .map(|&(i, j)| QMPoly::var(d, i, j))
            .collect();
        expect.push(det);
        let key = |f: &QMPoly| f.to_string();
        all.sort_by_key(key);
        expect.sort_by_key(key);
        assert_eq!(all, expect);
        assert!(aq_generators(&p(&[4, 3, 2, 1]), 2, 2).is_err());
    }

    #[test]
    fn generators_are_homogeneous() {
        for (m, n) in [(1, 2), (2, 1), (2, 2), (1, 3), (3, 1)] {
            for y in crate::weyl::interval_below(&Perm::coxeter_power(m + n, m)) {
                for f in aq_generators(&y, m, n).unwrap() {
                    assert!(f.is_homogeneous());
                }
            }
        }
    }
}
