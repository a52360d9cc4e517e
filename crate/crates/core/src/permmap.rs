//! Rooted one-face maps as dart permutations.
//!
//! Darts are `0..2n`. The face permutation `gamma` is fixed to the standard
//! cycle `d -> d + 1 (mod 2n)`, rooted at dart 0, so a rooted one-face map is
//! exactly a fixed-point-free involution `alpha`. The vertex permutation is
//! derived on demand as `sigma = alpha ∘ gamma`.
//!
//! Products are written right-to-left: `p ∘ q` applies `q` first.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Index of a dart (semi-edge), in `0..dart_count`.
pub type Dart = usize;

const UNSEEN: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("dart count {0} must be even and at least 2")]
    BadDartCount(usize),
    #[error("alpha has {found} entries but the dart count is {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("alpha({dart}) = {image} is out of range")]
    OutOfRange { dart: Dart, image: usize },
    #[error("alpha has a fixed point at dart {0}")]
    FixedPoint(Dart),
    #[error("alpha is not an involution: alpha(alpha({dart})) = {back}")]
    NotInvolution { dart: Dart, back: Dart },
    #[error("sigma is not a permutation of the darts")]
    NotPermutation,
    #[error("alpha ∘ sigma has {0} cycles, expected a single face")]
    NotUnicellular(usize),
}

/// A rooted one-face map, stored as its edge involution.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedMap {
    alpha: Vec<Dart>,
}

impl RootedMap {
    /// Validates `alpha` as a fixed-point-free involution on `dart_count` darts.
    pub fn from_alpha(dart_count: usize, alpha: Vec<Dart>) -> Result<Self, MapError> {
        if dart_count < 2 || !dart_count.is_multiple_of(2) {
            return Err(MapError::BadDartCount(dart_count));
        }
        if alpha.len() != dart_count {
            return Err(MapError::LengthMismatch { expected: dart_count, found: alpha.len() });
        }
        for (dart, &image) in alpha.iter().enumerate() {
            if image >= dart_count {
                return Err(MapError::OutOfRange { dart, image });
            }
        }
        for (dart, &image) in alpha.iter().enumerate() {
            if image == dart {
                return Err(MapError::FixedPoint(dart));
            }
            let back = alpha[image];
            if back != dart {
                return Err(MapError::NotInvolution { dart, back });
            }
        }
        Ok(RootedMap { alpha })
    }

    /// Builds a map from a list of edges given as dart pairs.
    pub fn from_pairs(dart_count: usize, pairs: &[(Dart, Dart)]) -> Result<Self, MapError> {
        let mut alpha = vec![UNSEEN; dart_count];
        for &(a, b) in pairs {
            for (x, y) in [(a, b), (b, a)] {
                if x >= dart_count {
                    return Err(MapError::OutOfRange { dart: y, image: x });
                }
                alpha[x] = y;
            }
        }
        if let Some(d) = alpha.iter().position(|&x| x == UNSEEN) {
            return Err(MapError::FixedPoint(d));
        }
        Self::from_alpha(dart_count, alpha)
    }

    /// Re-roots an arbitrary one-face map `(alpha, sigma)` given in any
    /// labelling.
    ///
    /// Darts are relabelled in face order starting from dart 0, so dart 0
    /// stays the root. Returns the normalised map together with the
    /// relabelling `old dart -> new dart`.
    pub fn from_permutations(alpha: &[Dart], sigma: &[Dart]) -> Result<(Self, Vec<Dart>), MapError> {
        let n2 = alpha.len();
        if sigma.len() != n2 {
            return Err(MapError::LengthMismatch { expected: n2, found: sigma.len() });
        }
        let mut seen = vec![false; n2];
        for &s in sigma {
            if s >= n2 || core::mem::replace(&mut seen[s], true) {
                return Err(MapError::NotPermutation);
            }
        }
        // Validate alpha before relabelling so the error names the real fault.
        Self::from_alpha(n2, alpha.to_vec())?;

        let face = compose(alpha, sigma);
        let mut label = vec![UNSEEN; n2];
        let mut dart = 0;
        for position in 0..n2 {
            if label[dart] != UNSEEN {
                return Err(MapError::NotUnicellular(cycle_count(&face)));
            }
            label[dart] = position;
            dart = face[dart];
        }
        if dart != 0 {
            return Err(MapError::NotUnicellular(cycle_count(&face)));
        }
        let mut relabelled = vec![0; n2];
        for old in 0..n2 {
            relabelled[label[old]] = label[alpha[old]];
        }
        Ok((RootedMap { alpha: relabelled }, label))
    }

    pub fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn edge_count(&self) -> usize {
        self.alpha.len() / 2
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }

    pub fn alpha_slice(&self) -> &[Dart] {
        &self.alpha
    }

    pub fn into_alpha(self) -> Vec<Dart> {
        self.alpha
    }

    /// The face permutation: the standard cycle.
    pub fn gamma(&self, d: Dart) -> Dart {
        assert!(d < self.dart_count(), "dart {d} out of range");
        (d + 1) % self.dart_count()
    }

    /// Vertex permutation `sigma(d) = alpha(gamma(d))`.
    ///
    /// Panics if `d` is out of range.
    pub fn sigma(&self, d: Dart) -> Dart {
        self.alpha[self.gamma(d)]
    }

    pub fn sigma_inverse(&self, d: Dart) -> Dart {
        let n2 = self.dart_count();
        (self.alpha[d] + n2 - 1) % n2
    }

    pub fn sigma_vec(&self) -> Vec<Dart> {
        (0..self.dart_count()).map(|d| self.sigma(d)).collect()
    }

    /// Cycles of `sigma`, each starting at its smallest dart, ordered by that
    /// dart.
    pub fn vertices(&self) -> Vec<Vec<Dart>> {
        cycles(&self.sigma_vec())
    }

    pub fn vertex_count(&self) -> usize {
        cycle_count(&self.sigma_vec())
    }

    /// `vertex_of[d]` is the index (into [`RootedMap::vertices`]) of the
    /// vertex containing `d`.
    pub fn vertex_index(&self) -> Vec<usize> {
        let mut index = vec![0; self.dart_count()];
        for (i, cycle) in self.vertices().iter().enumerate() {
            for &d in cycle {
                index[d] = i;
            }
        }
        index
    }

    /// Genus from `n - k = 2g - 1`.
    pub fn genus(&self) -> usize {
        let n = self.edge_count();
        let k = self.vertex_count();
        let twice = n + 1 - k;
        assert!(twice.is_multiple_of(2), "n - k + 1 = {twice} is odd; the map is not unicellular");
        twice / 2
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::from_cycle_lengths(self.vertices().iter().map(Vec::len))
    }

    pub fn is_four_regular(&self) -> bool {
        self.degree_profile().is_four_regular()
    }

    pub fn is_one_four_valent(&self) -> bool {
        self.degree_profile().is_one_four_valent()
    }

    /// Moves the root `j` steps along the face: `alpha'(d) = alpha(d - j) + j`.
    pub fn conjugate_by_rotation(&self, j: usize) -> RootedMap {
        let n2 = self.dart_count();
        let j = j % n2;
        let alpha = (0..n2).map(|d| (self.alpha[(d + n2 - j) % n2] + j) % n2).collect();
        RootedMap { alpha }
    }

    pub fn is_fixed_by_rotation(&self, j: usize) -> bool {
        rotation_fixes(&self.alpha, j)
    }
}

impl fmt::Display for RootedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.alpha.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// True iff rotating the root by `j` maps the involution to itself.
pub fn rotation_fixes(alpha: &[Dart], j: usize) -> bool {
    let n2 = alpha.len();
    let j = j % n2;
    (0..n2).all(|d| (alpha[(d + n2 - j) % n2] + j) % n2 == alpha[d])
}

/// `left ∘ right`: apply `right`, then `left`.
pub fn compose(left: &[Dart], right: &[Dart]) -> Vec<Dart> {
    right.iter().map(|&x| left[x]).collect()
}

/// Disjoint cycles of a permutation, each led by its minimum element.
pub fn cycles(perm: &[Dart]) -> Vec<Vec<Dart>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            cycle.push(d);
            d = perm[d];
        }
        out.push(cycle);
    }
    out
}

pub fn cycle_count(perm: &[Dart]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut count = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = perm[d];
        }
    }
    count
}

/// Histogram `degree -> number of vertices`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DegreeProfile(BTreeMap<usize, usize>);

impl DegreeProfile {
    pub fn from_cycle_lengths(lengths: impl IntoIterator<Item = usize>) -> Self {
        let mut map = BTreeMap::new();
        for len in lengths {
            *map.entry(len).or_insert(0) += 1;
        }
        DegreeProfile(map)
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        DegreeProfile(pairs.iter().copied().filter(|&(_, c)| c > 0).collect())
    }

    /// Number of vertices of the given degree.
    pub fn count(&self, degree: usize) -> usize {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&d, &c)| (d, c))
    }

    pub fn vertex_count(&self) -> usize {
        self.0.values().sum()
    }

    /// Sum of degree times count; equals the dart count.
    pub fn dart_total(&self) -> usize {
        self.iter().map(|(d, c)| d * c).sum()
    }

    pub fn is_four_regular(&self) -> bool {
        !self.0.is_empty() && self.0.keys().all(|&d| d == 4)
    }

    pub fn is_one_four_valent(&self) -> bool {
        !self.0.is_empty() && self.0.keys().all(|&d| d == 1 || d == 4)
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (d, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}: {c}")?;
        }
        f.write_str("}")
    }
}
