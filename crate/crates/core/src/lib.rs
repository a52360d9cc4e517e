//! Exact enumeration of 4-regular one-face (unicellular) maps on orientable
//! surfaces.
//!
//! A rooted one-face map on `2n` darts is stored as a fixed-point-free
//! involution `alpha`; the face permutation is always the standard cycle
//! `d -> d + 1 (mod 2n)` and the vertex permutation is `sigma = alpha ∘ gamma`.
//!
//! * [`closedform`]: factorial closed forms for rooted counts.
//! * [`orbifold`]: the Burnside sum over cyclic quotients for unrooted counts.
//! * [`oracle`]: exhaustive search over involutions with pruning, and orbit
//!   counting under root rotation, to check both of the above.
//!
//! [`bijection`] implements the vertex gluing/cutting surgery that links
//! genus `g - 1` and genus `g` maps.
//!
//! Everything here is pure computation over `alloc`; file formats, the
//! threaded oracle driver and the command line live in the `unicell` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bijection;
pub mod closedform;
pub mod exact;
pub mod oracle;
pub mod orbifold;
pub mod permmap;

/// Arbitrary-precision nonnegative integer used for every map count.
pub type BigCount = num_bigint::BigUint;

/// Reduced fraction of arbitrary-precision integers with positive denominator.
pub type ExactRational = num_rational::BigRational;

pub use bijection::{cut, glue, intertwined_triples, is_intertwined, trisections, BijectionError, Surgery, Trisection, Triple};
pub use closedform::{eps14, eps4_rooted, eps_trees14, fuss_catalan4, params14, recurrence_holds14};
pub use oracle::{DegreeFilter, SearchSpec};
pub use orbifold::{eps4_unrooted, f2, f4, signatures_for, OrbifoldSignature};
pub use permmap::{DegreeProfile, Dart, MapError, RootedMap};
