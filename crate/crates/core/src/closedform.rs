//! Closed-form counts of rooted one-face maps whose vertices have degree 1
//! or 4, and of rooted 4-regular one-face maps.
//!
//! For genus `g` and `k` vertices of degree 4 such a map has
//! `n = 3k + 1 - 2g` edges and `s = 2k + 2 - 4g` leaves.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{binomial, exact_div, factorial};
use crate::BigCount;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Params14Error {
    #[error("genus and vertex count must be nonnegative (got g={g}, k={k})")]
    InvalidInput { g: i64, k: i64 },
    #[error("no maps: n={n}, s={s}")]
    EmptyFamily { n: i64, s: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("rooted 4-regular one-face maps need genus >= 1")]
pub struct GenusZero;

/// Edge and leaf counts of a (1÷4)-map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params14 {
    pub edges: u64,
    pub leaves: u64,
}

pub fn params14(g: i64, k: i64) -> Result<Params14, Params14Error> {
    if g < 0 || k < 0 {
        return Err(Params14Error::InvalidInput { g, k });
    }
    let n = 3 * k + 1 - 2 * g;
    let s = 2 * k + 2 - 4 * g;
    if n < 1 || s < 0 {
        return Err(Params14Error::EmptyFamily { n, s });
    }
    Ok(Params14 { edges: n as u64, leaves: s as u64 })
}

fn fact(n: u64) -> BigUint {
    factorial(n as i64).expect("nonnegative")
}

/// Rooted plane 4-ary trees with `k` internal vertices, rooted at a leaf:
/// `binom(3k, k - 1) / k`, with `C(0) = 1`.
pub fn fuss_catalan4(k: u64) -> BigCount {
    if k == 0 {
        return BigCount::one();
    }
    let k = k as i64;
    exact_div(&binomial(3 * k, k - 1), &BigUint::from(k as u64))
}

/// Rooted (1÷4)-trees with `k` vertices of degree 4: `2 n! / (k! s!)`.
pub fn eps_trees14(k: u64) -> BigCount {
    let n = 3 * k + 1;
    let s = 2 * k + 2;
    exact_div(&(fact(n) * 2u32), &(fact(k) * fact(s)))
}

/// Rooted one-face (1÷4)-maps of genus `g` with `k` vertices of degree 4:
/// `2 n! / (4^g g! s! (k - g)!)`. Empty families count 0.
pub fn eps14(g: u64, k: u64) -> BigCount {
    let Ok(p) = params14(g as i64, k as i64) else {
        return BigCount::zero();
    };
    if k < g {
        return BigCount::zero();
    }
    let den = BigUint::from(4u32).pow(g as u32) * fact(g) * fact(p.leaves) * fact(k - g);
    exact_div(&(fact(p.edges) * 2u32), &den)
}

/// Rooted 4-regular one-face maps of genus `g`: `2 (4g-2)! / (4^g g! (g-1)!)`.
pub fn eps4_rooted(g: u64) -> Result<BigCount, GenusZero> {
    if g == 0 {
        return Err(GenusZero);
    }
    let den = BigUint::from(4u32).pow(g as u32) * fact(g) * fact(g - 1);
    Ok(exact_div(&(fact(4 * g - 2) * 2u32), &den))
}

/// Both sides of `2g eps14(g, k) = n binom(s + 2, s) eps14(g - 1, k - 1)`.
pub fn recurrence_sides14(g: u64, k: u64) -> (BigCount, BigCount) {
    assert!(g >= 1 && k >= 1, "recurrence needs g >= 1 and k >= 1");
    let lhs = eps14(g, k) * (2 * g);
    let n = 3 * k as i64 + 1 - 2 * g as i64;
    let s = 2 * k as i64 + 2 - 4 * g as i64;
    let rhs = if n < 1 {
        BigCount::zero()
    } else {
        binomial(s + 2, s) * (n as u64) * eps14(g - 1, k - 1)
    };
    (lhs, rhs)
}

pub fn recurrence_holds14(g: u64, k: u64) -> bool {
    let (lhs, rhs) = recurrence_sides14(g, k);
    lhs == rhs
}
