//! Exact integer helpers shared by the counting formulas.
//!
//! Factorial arguments are signed: the summation formulas are written so that
//! any term containing a negative factorial argument vanishes, and callers
//! express that through `Option`.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{BigCount, ExactRational};

/// `n!` for `n >= 0`, `None` for negative arguments.
pub fn factorial(n: i64) -> Option<BigUint> {
    if n < 0 {
        return None;
    }
    let mut acc = BigUint::one();
    for i in 2..=n as u64 {
        acc *= i;
    }
    Some(acc)
}

/// Binomial coefficient with the usual zero convention outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc = exact_div(&acc, &BigUint::from(i + 1));
    }
    acc
}

/// Multiset coefficient `((n, l)) = binom(n + l - 1, l)`: ways to place `l`
/// indistinguishable items into `n` ordered slots.
pub fn multiset(n: i64, l: i64) -> BigUint {
    if n == 0 && l == 0 {
        return BigUint::one();
    }
    binomial(n + l - 1, l)
}

/// Divides `num` by `den`, panicking if the division leaves a remainder.
///
/// Every quotient in the counting formulas is an integer; a remainder means
/// a formula was assembled wrongly, so it is never rounded away.
#[track_caller]
pub fn exact_div(num: &BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division: {num} / {den} leaves remainder {r}");
    q
}

/// Converts an exact rational to a count, or `None` if it is negative or
/// has a denominator other than 1.
pub fn rational_to_count(value: &ExactRational) -> Option<BigCount> {
    if !value.is_integer() || value.numer().is_negative() {
        return None;
    }
    value.numer().to_biguint()
}

/// Lifts a count into the rationals.
pub fn count_to_rational(value: &BigCount) -> ExactRational {
    ExactRational::from_integer(BigInt::from(value.clone()))
}

/// Cached factorials `0!, 1!, ..., limit!`.
#[derive(Debug, Clone)]
pub struct Factorials {
    table: Vec<BigUint>,
}

impl Factorials {
    pub fn up_to(limit: usize) -> Self {
        let mut table = Vec::with_capacity(limit + 1);
        table.push(BigUint::one());
        for i in 1..=limit {
            let next = &table[i - 1] * BigUint::from(i);
            table.push(next);
        }
        Factorials { table }
    }

    /// `n!`, or `None` when `n` is negative. Panics past the cached limit.
    pub fn get(&self, n: i64) -> Option<&BigUint> {
        if n < 0 {
            return None;
        }
        let idx = n as usize;
        assert!(idx < self.table.len(), "factorial table too small for {n}!");
        Some(&self.table[idx])
    }

    /// `num! / (d_1! d_2! ...)` as a rational; zero if any argument is negative.
    pub fn ratio(&self, num: i64, dens: &[i64]) -> ExactRational {
        let Some(top) = self.get(num) else {
            return ExactRational::zero();
        };
        let mut bottom = BigUint::one();
        for &d in dens {
            match self.get(d) {
                Some(f) => bottom *= f,
                None => return ExactRational::zero(),
            }
        }
        ExactRational::new(BigInt::from(top.clone()), BigInt::from(bottom))
    }
}
