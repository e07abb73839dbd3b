//! Verification suites shared by the command-line driver and the
//! acceptance tests. Every report is deterministic for a fixed input.

use rayon::prelude::*;
use serde::Serialize;

use crate::demazure::{admissible_pairs, operator_identities, ortho_complement_indices, rmatrix_pairing, PairingReport};
use crate::error::Result;
use crate::grobner::{verify_poset, Options, PosetReport};
use crate::poisson::{
    a_generators, check_bracket_axioms, poisson_ideal_check, random_matrices, semiclassical_check,
    torus_invariance, verify_stratification, zero_one_matrices, StratReport,
};
use crate::qmatrix::{aq_generators, Dims};
use crate::weyl::{interval_below, Perm};

/// Settings shared by the suites.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub m: usize,
    pub n: usize,
    pub seed: u64,
    pub degree_bound: Option<u32>,
    /// Random matrices for the stratification check.
    pub random_samples: usize,
    /// Torus-scaling trials.
    pub torus_trials: usize,
}

impl SuiteConfig {
    pub fn new(m: usize, n: usize) -> Self {
        Self {
            m,
            n,
            seed: 0,
            degree_bound: None,
            random_samples: 200,
            torus_trials: 50,
        }
    }
}

pub fn poset(cfg: &SuiteConfig) -> Result<PosetReport> {
    verify_poset(
        cfg.m,
        cfg.n,
        Options {
            degree_bound: cfg.degree_bound,
        },
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct DemazureReport {
    pub m: usize,
    pub n: usize,
    /// `(y, k)` cases compared between the two routes.
    pub complement_cases: usize,
    pub operator_ambient: usize,
    pub failures: Vec<String>,
    pub ok: bool,
}

/// Orthogonal complements by both routes for every `y <= c^m` and `k`,
/// plus the operator identities on `Λ_q(K^{m+n})`.
pub fn demazure(cfg: &SuiteConfig) -> Result<DemazureReport> {
    let size = cfg.m + cfg.n;
    let w = Perm::coxeter_power(size, cfg.m);
    let cases: Vec<(Perm, usize)> = interval_below(&w)
        .into_iter()
        .flat_map(|y| (1..size).map(move |k| (y.clone(), k)))
        .collect();
    let mut failures: Vec<String> = cases
        .par_iter()
        .filter_map(|(y, k)| {
            ortho_complement_indices(&w, y, *k)
                .err()
                .map(|e| format!("y = {y}, k = {k}: {e}"))
        })
        .collect();
    failures.extend(operator_identities(size));
    Ok(DemazureReport {
        m: cfg.m,
        n: cfg.n,
        complement_cases: cases.len(),
        operator_ambient: size,
        ok: failures.is_empty(),
        failures,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RmatrixReport {
    pub m: usize,
    pub n: usize,
    pub pairings: Vec<PairingReport>,
    pub failures: Vec<String>,
    pub ok: bool,
}

/// The R-matrix pairing for every admissible `(k, I)`.
pub fn rmatrix(cfg: &SuiteConfig) -> Result<RmatrixReport> {
    let cases = admissible_pairs(cfg.m, cfg.n);
    let results: Vec<_> = cases
        .par_iter()
        .map(|(k, s)| (k, s, rmatrix_pairing(cfg.m, cfg.n, *k, s)))
        .collect();
    let mut pairings = Vec::new();
    let mut failures = Vec::new();
    for (k, s, r) in results {
        match r {
            Ok(p) => pairings.push(p),
            Err(e) => failures.push(format!("k = {k}, I = {s}: {e}")),
        }
    }
    Ok(RmatrixReport {
        m: cfg.m,
        n: cfg.n,
        pairings,
        ok: failures.is_empty(),
        failures,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PoissonReport {
    pub m: usize,
    pub n: usize,
    pub seed: u64,
    pub bracket_axioms_ok: bool,
    pub semiclassical_pairs: usize,
    pub semiclassical_ok: bool,
    pub limit_of_quantum_generators_ok: bool,
    pub poisson_ideals_ok: bool,
    pub stratification: StratReport,
    pub torus_trials: usize,
    pub torus_ok: bool,
    pub failures: Vec<String>,
    pub ok: bool,
}

/// Bracket axioms, the semiclassical limit, the classical generators as
/// the limit of the quantum ones, Poisson ideals, and the leaf
/// stratification on zero-one and seeded random matrices.
pub fn poisson(cfg: &SuiteConfig) -> Result<PoissonReport> {
    let (m, n) = (cfg.m, cfg.n);
    let dims = Dims::new(m, n);
    let mut failures = Vec::new();

    let axioms = check_bracket_axioms(dims);
    for f in &axioms {
        failures.push(format!("{} fails on {:?}", f.identity, f.coordinates));
    }

    let pairs: Vec<(usize, usize)> = (0..dims.nvars())
        .flat_map(|a| (0..dims.nvars()).map(move |b| (a, b)))
        .collect();
    let mut semiclassical_ok = true;
    for &(a, b) in &pairs {
        let (u, v) = (dims.pos(a), dims.pos(b));
        if !semiclassical_check(dims, u, v)? {
            semiclassical_ok = false;
            failures.push(format!("semiclassical limit of [x{:?}, x{:?}] differs from the bracket", u, v));
        }
    }

    let elems = interval_below(&Perm::coxeter_power(m + n, m));
    let mut limit_ok = true;
    let mut ideals_ok = true;
    for y in &elems {
        let mut classical: Vec<String> = a_generators(y, m, n)?.iter().map(ToString::to_string).collect();
        let mut limit: Vec<String> = aq_generators(y, m, n)?
            .iter()
            .map(|f| f.specialize_q1().to_string())
            .collect();
        classical.sort();
        limit.sort();
        if classical != limit {
            limit_ok = false;
            failures.push(format!("A({y}) is not the q = 1 limit of A_q({y})"));
        }
        if !poisson_ideal_check(y, m, n)? {
            ideals_ok = false;
            failures.push(format!("the ideal of A({y}) is not Poisson"));
        }
    }

    let mut samples = if m * n <= 16 {
        zero_one_matrices(m, n)
    } else {
        Vec::new()
    };
    samples.extend(random_matrices(m, n, cfg.random_samples, cfg.seed));
    let stratification = verify_stratification(m, n, &samples)?;
    for f in stratification.failures.iter().take(20) {
        failures.push(match &f.minor {
            Some(minor) => format!("x = {}: {minor} of A({}) is nonzero but {} <= leaf {}", f.x, f.y, f.y, f.leaf),
            None => format!("x = {}: A({}) vanishes but {} is not below leaf {}", f.x, f.y, f.y, f.leaf),
        });
    }

    let torus_bad = torus_invariance(&samples, cfg.torus_trials, cfg.seed.wrapping_add(1))?;
    for x in torus_bad.iter().take(20) {
        failures.push(format!("leaf of {x} changes under torus scaling"));
    }

    Ok(PoissonReport {
        m,
        n,
        seed: cfg.seed,
        bracket_axioms_ok: axioms.is_empty(),
        semiclassical_pairs: pairs.len(),
        semiclassical_ok,
        limit_of_quantum_generators_ok: limit_ok,
        poisson_ideals_ok: ideals_ok,
        torus_trials: cfg.torus_trials,
        torus_ok: torus_bad.is_empty(),
        ok: failures.is_empty(),
        stratification,
        failures,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AllReport {
    pub poset: PosetReport,
    pub demazure: DemazureReport,
    pub rmatrix: RmatrixReport,
    pub poisson: PoissonReport,
    pub ok: bool,
}

pub fn all(cfg: &SuiteConfig) -> Result<AllReport> {
    let poset = poset(cfg)?;
    let demazure = demazure(cfg)?;
    let rmatrix = rmatrix(cfg)?;
    let poisson = poisson(cfg)?;
    let ok = poset.ok && demazure.ok && rmatrix.ok && poisson.ok;
    Ok(AllReport {
        poset,
        demazure,
        rmatrix,
        poisson,
        ok,
    })
}

/// Exhaustive Bruhat comparison against the subword criterion on `S_n`;
/// returns the number of pairs checked and any disagreements.
pub fn bruhat_oracle(n: usize) -> (usize, Vec<(Perm, Perm)>) {
    let perms = Perm::all(n);
    let words: Vec<Vec<usize>> = perms.iter().map(Perm::reduced_word).collect();
    let below: Vec<std::collections::BTreeSet<Perm>> = words
        .par_iter()
        .map(|w| subword_products(w, n))
        .collect();
    let mut bad = Vec::new();
    for (a, y) in perms.iter().enumerate() {
        for (b, w) in perms.iter().enumerate() {
            let fast = y.bruhat_leq(w).expect("same size");
            if fast != below[b].contains(&perms[a]) {
                bad.push((y.clone(), w.clone()));
            }
        }
    }
    (perms.len() * perms.len(), bad)
}

/// All products of subwords of a reduced word of `w`: the lower interval.
fn subword_products(word: &[usize], n: usize) -> std::collections::BTreeSet<Perm> {
    (0u64..1 << word.len())
        .map(|mask| {
            let sub: Vec<usize> = (0..word.len()).filter(|&t| mask >> t & 1 == 1).map(|t| word[t]).collect();
            Perm::from_word(&sub, n)
        })
        .collect()
}

/// `|W^{<= c^m}|` by brute force over `S_{m+n}` against the subword oracle.
pub fn interval_size_by_subwords(m: usize, n: usize) -> usize {
    let w = Perm::coxeter_power(m + n, m);
    subword_products(&w.reduced_word(), m + n).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let mut cfg = SuiteConfig::new(1, 1);
        cfg.random_samples = 10;
        cfg.torus_trials = 5;
        let r = all(&cfg).unwrap();
        assert!(r.ok);
        let cfg = SuiteConfig { random_samples: 20, torus_trials: 10, ..SuiteConfig::new(2, 2) };
        assert!(rmatrix(&cfg).unwrap().ok);
        assert!(demazure(&cfg).unwrap().ok);
    }

    #[test]
    fn bruhat_oracle_small() {
        for n in 1..=4 {
            let (count, bad) = bruhat_oracle(n);
            assert_eq!(count, (1..=n).product::<usize>().pow(2));
            assert!(bad.is_empty());
        }
        assert_eq!(interval_size_by_subwords(2, 2), 14);
        assert_eq!(interval_size_by_subwords(2, 1), 4);
    }
}
