use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use super::arith::{big_e, jordan_totient, lcm_all};
use crate::exact::{count_to_rational, rational_to_count};
use crate::{BigCount, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("branch indices must be > 1 and sorted")]
    BadIndices,
    #[error("Riemann-Hurwitz relation fails")]
    RiemannHurwitz,
    #[error("lcm of branch indices does not divide the period")]
    LcmDividesPeriod,
    #[error("removing a branch point changes the lcm")]
    LcmNotStable,
    #[error("no branch point has index equal to the period")]
    NoFullPeriodPoint,
}

/// A cyclic branched covering of a genus-`surface_genus` surface over an
/// orbifold of genus `orbifold_genus` with `period` sheets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbifoldSignature {
    pub surface_genus: u64,
    pub orbifold_genus: u64,
    pub period: u64,
    /// Sorted ascending; every entry is > 1.
    pub branch_indices: Vec<u64>,
}

impl OrbifoldSignature {
    pub fn new(
        surface_genus: u64,
        orbifold_genus: u64,
        period: u64,
        mut branch_indices: Vec<u64>,
    ) -> Result<Self, SignatureError> {
        branch_indices.sort_unstable();
        let sig = OrbifoldSignature { surface_genus, orbifold_genus, period, branch_indices };
        sig.validate()?;
        Ok(sig)
    }

    pub fn validate(&self) -> Result<(), SignatureError> {
        if self.period == 0
            || self.branch_indices.iter().any(|&m| m < 2)
            || self.branch_indices.windows(2).any(|w| w[0] > w[1])
        {
            return Err(SignatureError::BadIndices);
        }
        if !self.satisfies_riemann_hurwitz() {
            return Err(SignatureError::RiemannHurwitz);
        }
        if !self.period.is_multiple_of(self.lcm()) {
            return Err(SignatureError::LcmDividesPeriod);
        }
        if !self.lcm_stable_under_removal() {
            return Err(SignatureError::LcmNotStable);
        }
        // The trivial covering has no branch points at all.
        if self.period != 1 && !self.branch_indices.contains(&self.period) {
            return Err(SignatureError::NoFullPeriodPoint);
        }
        Ok(())
    }

    pub fn lcm(&self) -> u64 {
        lcm_all(&self.branch_indices)
    }

    /// `2 - 2g = L (2 - 2h - sum (1 - 1/m_i))`, evaluated in the rationals.
    pub fn satisfies_riemann_hurwitz(&self) -> bool {
        let int = |v: i64| ExactRational::from_integer(BigInt::from(v));
        let lhs = int(2 - 2 * self.surface_genus as i64);
        let mut bracket = int(2 - 2 * self.orbifold_genus as i64);
        for &m in &self.branch_indices {
            bracket -= int(1) - ExactRational::new(1.into(), BigInt::from(m));
        }
        lhs == bracket * int(self.period as i64)
    }

    pub fn lcm_stable_under_removal(&self) -> bool {
        let m = self.lcm();
        (0..self.branch_indices.len()).all(|i| {
            let mut rest = self.branch_indices.clone();
            rest.remove(i);
            lcm_all(&rest) == m
        })
    }

    /// Number of branch points with the given index.
    pub fn index_count(&self, index: u64) -> usize {
        self.branch_indices.iter().filter(|&&m| m == index).count()
    }
}

impl fmt::Display for OrbifoldSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, [", self.surface_genus, self.orbifold_genus, self.period)?;
        for (i, m) in self.branch_indices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("])")
    }
}

/// Signatures of period `period` through which a 4-regular one-face map of
/// genus `g` can be a cyclic covering of its quotient.
///
/// Panics unless `period` is 1, 2 or 4 (the only periods dividing 4).
pub fn signatures_for(g: u64, period: u64) -> Vec<OrbifoldSignature> {
    assert!(g >= 1, "genus must be >= 1");
    let build = |h: u64, indices: Vec<u64>| {
        OrbifoldSignature::new(g, h, period, indices).expect("generated signature is valid")
    };
    match period {
        1 => vec![build(g, Vec::new())],
        2 => (0..=g / 2).map(|h| build(h, vec![2; (2 * g + 2 - 4 * h) as usize])).collect(),
        4 => {
            let mut out = Vec::new();
            for h in 0..=g / 4 {
                let r4_max = 2 * (g + 3 - 4 * h) / 3;
                for r4 in (2..=r4_max).step_by(2) {
                    let r2 = g + 3 - 4 * h - 3 * r4 / 2;
                    let mut indices = vec![2; r2 as usize];
                    indices.extend(core::iter::repeat_n(4, r4 as usize));
                    out.push(build(h, indices));
                }
            }
            out
        }
        _ => panic!("period {period} does not divide 4"),
    }
}

/// Every signature of period 1, 2 or 4 for genus `g`.
pub fn all_signatures(g: u64) -> Vec<OrbifoldSignature> {
    [1, 2, 4].into_iter().flat_map(|l| signatures_for(g, l)).collect()
}

/// Order-preserving epimorphisms from the orbifold group onto `Z_L`:
/// `m^{2h} J_{2h}(L/m) E(m_1..m_r)`.
pub fn epi0(sig: &OrbifoldSignature) -> BigCount {
    let m = sig.lcm();
    let h = sig.orbifold_genus as u32;
    let factor = BigCount::from(m).pow(2 * h) * jordan_totient(2 * h, sig.period / m);
    let value = count_to_rational(&factor) * big_e(&sig.branch_indices);
    rational_to_count(&value).unwrap_or_else(|| panic!("non-integral epimorphism count {value} for {sig}"))
}
