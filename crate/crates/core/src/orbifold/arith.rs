//! Multiplicative functions used by the epimorphism count.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{BigCount, ExactRational};

/// Distinct prime factors with multiplicity, by trial division.
fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient. Panics for `n = 0`.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "phi(0) is undefined");
    factorize(n).into_iter().fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Moebius function. Panics for `n = 0`.
pub fn moebius(n: u64) -> i8 {
    assert!(n >= 1, "mu(0) is undefined");
    let mut sign = 1;
    for (_, e) in factorize(n) {
        if e > 1 {
            return 0;
        }
        sign = -sign;
    }
    sign
}

/// Jordan's totient `J_k(n) = n^k prod_{p | n} (1 - p^-k)`.
pub fn jordan_totient(k: u32, n: u64) -> BigCount {
    assert!(n >= 1, "J_k(0) is undefined");
    factorize(n).into_iter().fold(BigUint::one(), |acc, (p, e)| {
        let p = BigUint::from(p);
        acc * (p.pow(e * k) - p.pow((e - 1) * k))
    })
}

pub fn lcm_all(values: &[u64]) -> u64 {
    values.iter().fold(1, |acc, &v| acc.lcm(&v))
}

/// `Phi(k, m) = phi(m) / phi(n) * mu(n)` with `n = m / gcd(k, m)`.
pub fn big_phi(k: u64, m: u64) -> ExactRational {
    let n = m / k.gcd(&m);
    let mu = moebius(n);
    if mu == 0 {
        return ExactRational::zero();
    }
    ExactRational::new(BigInt::from(euler_phi(m)) * mu, BigInt::from(euler_phi(n)))
}

/// `E(m_1..m_r) = (1/m) sum_{k=1}^{m} prod_i Phi(k, m_i)`, `m = lcm(m_i)`.
/// The empty multiset gives 1.
pub fn big_e(indices: &[u64]) -> ExactRational {
    let m = lcm_all(indices);
    let mut sum = ExactRational::zero();
    for k in 1..=m {
        let mut prod = ExactRational::one();
        for &mi in indices {
            prod *= big_phi(k, mi);
            if prod.is_zero() {
                break;
            }
        }
        sum += prod;
    }
    sum / ExactRational::from_integer(BigInt::from(m))
}
