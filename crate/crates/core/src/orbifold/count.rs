//! The Burnside sum over cyclic quotients for unrooted 4-regular one-face
//! maps, in three forms:
//!
//! * per signature: `epi0 * (rooted quotient maps) / (8g - 4)`,
//! * collected by period: `(eps_g + f2(g) + f4(g)) / (8g - 4)`,
//! * the fully expanded four-part sum ([`eps4_unrooted_expanded`]).
//!
//! Summation ranges are taken from non-negativity of every factorial
//! argument; a term with a negative factorial argument is zero.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::signature::{all_signatures, epi0, OrbifoldSignature};
use crate::closedform::{eps14, eps4_rooted, params14, GenusZero};
use crate::exact::{binomial, count_to_rational, multiset, rational_to_count, Factorials};
use crate::{BigCount, ExactRational};

fn int(v: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

fn pow2(exp: i64) -> ExactRational {
    let p = ExactRational::from_integer(BigInt::one() << exp.unsigned_abs());
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

fn table(g: u64) -> Factorials {
    Factorials::up_to(4 * g as usize + 8)
}

/// Period-2 term for a fixed orbifold genus `h`:
/// `(4g-2) sum_k (2g-2h+k-1)! / (h! (2k-4h+2)! (k-h)! (2g-1-2k)!)`.
pub fn f2_slice(g: u64, h: u64) -> ExactRational {
    f2_slice_with(&table(g), g as i64, h as i64, g as i64 - 1)
}

fn f2_slice_with(f: &Factorials, g: i64, h: i64, k_max: i64) -> ExactRational {
    let mut sum = ExactRational::zero();
    for k in 0..=k_max {
        sum += f.ratio(2 * g - 2 * h + k - 1, &[h, 2 * k - 4 * h + 2, k - h, 2 * g - 1 - 2 * k]);
    }
    sum * int(4 * g - 2)
}

/// Total period-2 contribution to the Burnside numerator.
pub fn f2(g: u64) -> BigCount {
    f2_with_k_max_shift(g, 0)
}

/// [`f2`] with the upper `k` bound lowered by `shift`. Only for exercising
/// the verification suite with a deliberately wrong sum.
#[doc(hidden)]
pub fn f2_with_k_max_shift(g: u64, shift: u64) -> BigCount {
    let f = table(g);
    let k_max = g as i64 - 1 - shift as i64;
    let mut total = ExactRational::zero();
    for h in 0..=g as i64 / 2 {
        total += f2_slice_with(&f, g as i64, h, k_max);
    }
    rational_to_count(&total).unwrap_or_else(|| panic!("f2({g}) = {total} is not an integer"))
}

/// Orbifold-genus-0 part of `f2`, in closed binomial form
/// `3 / (2g + 1) * binom(4g - 2, 2g)`.
pub fn f2_genus0_closed(g: u64) -> ExactRational {
    let g = g as i64;
    count_to_rational(&binomial(4 * g - 2, 2 * g)) * ExactRational::new(3.into(), (2 * g + 1).into())
}

/// Period-4 term for orbifold genus `h` and `r4` index-4 points:
/// `(2g-1) sum_k 2^{2h-1+r4} (k-2h+g-r4/2)! / (h! (k-h)! (g-r4/2-2k)! (2k+3-4h-r4)! (r4-1)!)`.
pub fn f4_slice(g: u64, h: u64, r4: u64) -> ExactRational {
    f4_slice_with(&table(g), g as i64, h as i64, r4 as i64)
}

fn f4_slice_with(f: &Factorials, g: i64, h: i64, r4: i64) -> ExactRational {
    assert!(r4 % 2 == 0, "r4 must be even");
    let half = r4 / 2;
    // k - h >= 0, 2k + 3 - 4h - r4 >= 0 and g - r4/2 - 2k >= 0
    let k_lo = h.max((4 * h + r4 - 3 + 1).div_euclid(2)).max(0);
    let k_hi = (g - half).div_euclid(2);
    let mut sum = ExactRational::zero();
    for k in k_lo..=k_hi {
        sum += f.ratio(k - 2 * h + g - half, &[h, k - h, g - half - 2 * k, 2 * k + 3 - 4 * h - r4, r4 - 1]);
    }
    sum * pow2(2 * h - 1 + r4) * int(2 * g - 1)
}

/// Total period-4 contribution to the Burnside numerator.
pub fn f4(g: u64) -> ExactRational {
    let f = table(g);
    let g = g as i64;
    let mut total = ExactRational::zero();
    for h in 0..=g {
        // r4 - 1 >= 0 and g - r4/2 >= 0
        for r4 in (2..=2 * g).step_by(2) {
            total += f4_slice_with(&f, g, h, r4);
        }
    }
    total
}

/// Unrooted 4-regular one-face maps of genus `g`, as an exact rational,
/// via `(eps_g + f2(g) + f4(g)) / (8g - 4)`.
pub fn eps4_unrooted_by_period(g: u64) -> Result<ExactRational, GenusZero> {
    let rooted = eps4_rooted(g)?;
    let numerator = count_to_rational(&(rooted + f2(g))) + f4(g);
    Ok(numerator / int(8 * g as i64 - 4))
}

/// The fully expanded formula: two closed terms, a double sum over period-2
/// quotients of positive genus and a triple sum over period-4 quotients,
/// each with its own summation bounds rather than the zero convention.
pub fn eps4_unrooted_expanded(g: u64) -> Result<ExactRational, GenusZero> {
    if g == 0 {
        return Err(GenusZero);
    }
    let f = table(g);
    let g = g as i64;
    let fac = |n: i64| count_to_rational(f.get(n).expect("nonnegative"));

    let first = fac(4 * g - 3) / (pow2(2 * g) * fac(g) * fac(g - 1));
    let second = int(3) * fac(4 * g - 3) / (int(2) * fac(2 * g + 1) * fac(2 * g - 2));

    let mut third = ExactRational::zero();
    for h in 1..=g / 2 {
        for k in 2 * h - 1..=g - 1 {
            third += f.ratio(2 * g - 2 * h + k - 1, &[2 * k - 4 * h + 2, h, k - h, 2 * g - 1 - 2 * k]);
        }
    }
    third /= int(2);

    let mut fourth = ExactRational::zero();
    for h in 0..=g / 4 {
        let r4_max = 2 * (g + 3 - 4 * h) / 3;
        for r4 in (2..=r4_max).step_by(2) {
            let k_max = (2 * g + r4).div_euclid(4);
            for k in 2 * h - 1 + r4 / 2..=k_max {
                let term = f.ratio(
                    k - 2 * h + g - r4 / 2,
                    &[h, k - h, g - r4 / 2 - 2 * k, 2 * k + 3 - 4 * h - r4, r4 - 1],
                );
                fourth += term * pow2(2 * h - 3 + r4);
            }
        }
    }

    Ok(first + second + third + fourth)
}

/// Unrooted 4-regular one-face maps of genus `g`.
///
/// Computed along two routes (collected by period, and fully expanded);
/// panics if they disagree or the result is not an integer.
pub fn eps4_unrooted(g: u64) -> Result<BigCount, GenusZero> {
    let by_period = eps4_unrooted_by_period(g)?;
    let expanded = eps4_unrooted_expanded(g)?;
    assert_eq!(by_period, expanded, "unrooted count routes disagree at genus {g}");
    Ok(rational_to_count(&by_period).unwrap_or_else(|| panic!("unrooted count {by_period} at genus {g} is not an integer")))
}

/// Rooted quotient maps on the orbifold of `sig` that lift to 4-regular
/// one-face maps, built from the (1÷4)-map counts: distribute the degree-2
/// vertices over edges, correct for the root, and for period 4 choose which
/// leaves are dangling semi-edges.
pub fn quotient_map_count(sig: &OrbifoldSignature) -> ExactRational {
    let g = sig.surface_genus as i64;
    let h = sig.orbifold_genus as i64;
    match sig.period {
        1 => count_to_rational(&eps4_rooted(sig.surface_genus).expect("genus >= 1")),
        2 => {
            let mut sum = ExactRational::zero();
            for k in 0..g {
                let l = 2 * g - 1 - 2 * k;
                let Ok(p) = params14(h, k) else { continue };
                let n = p.edges as i64;
                let trees = count_to_rational(&eps14(h as u64, k as u64));
                sum += trees * count_to_rational(&multiset(n, l)) * int(4 * g - 2) / int(2 * n);
            }
            sum
        }
        4 => {
            let r4 = sig.index_count(4) as i64;
            let mut sum = ExactRational::zero();
            for k in 0..=g {
                let dangling = 2 * k + 3 - 4 * h - r4;
                let l = g - 2 * k - r4 / 2;
                if dangling < 0 || l < 0 {
                    continue;
                }
                let leaves = dangling + r4 - 1;
                let Ok(p) = params14(h, k) else { continue };
                assert_eq!(p.leaves as i64, leaves, "leaf count mismatch in period-4 quotient");
                let n = p.edges as i64;
                let maps = count_to_rational(&eps14(h as u64, k as u64));
                sum += maps
                    * count_to_rational(&multiset(n, l))
                    * count_to_rational(&binomial(leaves, dangling))
                    * int(2 * g - 1)
                    / int(2 * n);
            }
            sum
        }
        p => panic!("period {p} does not divide 4"),
    }
}

/// Additive share of one signature in the unrooted count.
pub fn signature_contribution(sig: &OrbifoldSignature) -> ExactRational {
    count_to_rational(&epi0(sig)) * quotient_map_count(sig) / int(8 * sig.surface_genus as i64 - 4)
}

/// Unrooted count as the sum of per-signature contributions.
pub fn eps4_unrooted_by_signature(g: u64) -> ExactRational {
    all_signatures(g).iter().map(signature_contribution).sum()
}
