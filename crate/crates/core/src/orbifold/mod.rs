//! Unrooted counting through cyclic quotients (orbifolds).
//!
//! An automorphism of period `L` of a 4-regular one-face map makes it an
//! `L`-sheeted branched covering of a quotient map on an orbifold. For
//! 4-regular maps only `L` in {1, 2, 4} occur. Burnside's lemma then gives
//! the unrooted count as a weighted sum over orbifold signatures.

pub mod arith;
mod count;
mod signature;

pub use arith::{big_e, big_phi, euler_phi, jordan_totient, moebius};
pub use count::{
    eps4_unrooted, eps4_unrooted_by_period, eps4_unrooted_by_signature, eps4_unrooted_expanded, f2,
    f2_genus0_closed, f2_slice, f2_with_k_max_shift, f4, f4_slice, quotient_map_count, signature_contribution,
};
pub use signature::{all_signatures, epi0, signatures_for, OrbifoldSignature, SignatureError};
