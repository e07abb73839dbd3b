//! Balanced q-integers, q-factorials and Gaussian binomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Laurent;
use crate::error::{Error, Result};

fn q_minus_q_inv() -> Laurent {
    Laurent::from_terms([(1, BigInt::one()), (-1, -BigInt::one())])
}

/// `[n]_q = (q^n − q^{−n}) / (q − q^{−1})`.
pub fn q_int(n: u32) -> Laurent {
    let e = i32::try_from(n).expect("q-integer argument too large");
    let num = Laurent::from_terms([(e, BigInt::one()), (-e, -BigInt::one())]);
    num.exact_div(&q_minus_q_inv())
        .expect("q - q^-1 divides q^n - q^-n")
}

/// `[n]_q! = [1]_q ⋯ [n]_q`.
pub fn q_fact(n: u32) -> Laurent {
    (1..=n).fold(Laurent::one(), |acc, k| &acc * &q_int(k))
}

/// Gaussian binomial `[n choose m]_q`.
pub fn q_binom(n: u32, m: u32) -> Result<Laurent> {
    if m > n {
        return Err(Error::Domain(format!("q_binom({n}, {m}) needs m <= n")));
    }
    let den = &q_fact(m) * &q_fact(n - m);
    let out = q_fact(n).exact_div(&den)?;
    debug_assert!(!out.is_zero());
    Ok(out)
}
