//! Brute-force ground truth.
//!
//! Rooted one-face maps on `2n` darts are exactly the fixed-point-free
//! involutions `alpha` (the face is the standard cycle), so the oracle walks
//! all of them depth first: the smallest unpaired dart is paired with each
//! larger unpaired dart in turn. Once `alpha(d + 1)` is known so is
//! `sigma(d)`, which lets partial vertex cycles be checked against the degree
//! filter while the search is still shallow.
//!
//! Unrooted maps are orbits of rooted maps under moving the root along the
//! face, counted by Burnside's lemma over all `2n` rotations.
//!
//! The first pairing of dart 0 splits the search into `2n - 1` independent
//! branches; see [`root_branches`].

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, AddAssign, Range};

use thiserror::Error;

use crate::closedform::{params14, Params14Error};
use crate::permmap::{rotation_fixes, Dart, DegreeProfile, RootedMap};
use crate::BigCount;

/// Largest dart count the search accepts; degrees are tracked in a bitmask.
pub const MAX_DARTS: usize = 62;

const FREE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("dart count {0} must be even and at least 2")]
    BadDartCount(usize),
    #[error("dart count {0} exceeds the search limit of {MAX_DARTS}")]
    TooManyDarts(usize),
    #[error("4-regular one-face maps need genus >= 1")]
    GenusZero,
    #[error(transparent)]
    Params(#[from] Params14Error),
}

/// Which vertex degrees a map may have, and optionally exactly how many
/// vertices of each degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeFilter {
    allowed: u64,
    required: Vec<(usize, usize)>,
}

impl DegreeFilter {
    /// Every degree allowed.
    pub fn any() -> Self {
        DegreeFilter { allowed: !0, required: Vec::new() }
    }

    pub fn four_regular() -> Self {
        DegreeFilter { allowed: 1 << 4, required: Vec::new() }
    }

    /// Only the listed degrees, each with exactly the listed vertex count.
    pub fn exact(counts: &[(usize, usize)]) -> Self {
        let mut required: Vec<_> = counts.iter().copied().filter(|&(_, c)| c > 0).collect();
        required.sort_unstable();
        let allowed = required.iter().fold(0u64, |acc, &(d, _)| acc | (1 << d));
        DegreeFilter { allowed, required }
    }

    pub fn allows(&self, degree: usize) -> bool {
        degree < 64 && self.allowed & (1 << degree) != 0
    }

    pub fn max_degree(&self) -> usize {
        63 - self.allowed.leading_zeros() as usize
    }

    pub fn required(&self, degree: usize) -> Option<usize> {
        self.required.iter().find(|&&(d, _)| d == degree).map(|&(_, c)| c)
    }

    pub fn admits(&self, profile: &DegreeProfile) -> bool {
        profile.iter().all(|(d, c)| self.allows(d) && self.required(d).is_none_or(|r| r == c))
            && self.required.iter().all(|&(d, c)| profile.count(d) == c)
    }
}

/// A family of rooted one-face maps to enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    dart_count: usize,
    filter: DegreeFilter,
}

impl SearchSpec {
    pub fn new(dart_count: usize, filter: DegreeFilter) -> Result<Self, SpecError> {
        if dart_count < 2 || !dart_count.is_multiple_of(2) {
            return Err(SpecError::BadDartCount(dart_count));
        }
        if dart_count > MAX_DARTS {
            return Err(SpecError::TooManyDarts(dart_count));
        }
        Ok(SearchSpec { dart_count, filter })
    }

    /// 4-regular one-face maps of genus `g` (on `8g - 4` darts).
    pub fn four_regular(g: u64) -> Result<Self, SpecError> {
        if g == 0 {
            return Err(SpecError::GenusZero);
        }
        Self::new(8 * g as usize - 4, DegreeFilter::four_regular())
    }

    /// One-face maps of genus `g` with `k` vertices of degree 4 and all
    /// others leaves.
    pub fn one_four(g: u64, k: u64) -> Result<Self, SpecError> {
        let p = params14(g as i64, k as i64)?;
        Self::new(2 * p.edges as usize, DegreeFilter::exact(&[(1, p.leaves as usize), (4, k as usize)]))
    }

    pub fn dart_count(&self) -> usize {
        self.dart_count
    }

    pub fn filter(&self) -> &DegreeFilter {
        &self.filter
    }
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    dart: Dart,
    partner: Dart,
    /// Degrees of the vertex cycles closed by the current pairing (0: none).
    closed: [usize; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Depth-first enumeration of the maps of a [`SearchSpec`], in
/// lexicographic order of `alpha`.
#[derive(Debug, Clone)]
pub struct Enumerator {
    spec: SearchSpec,
    max_degree: usize,
    alpha: Vec<Dart>,
    closed: Vec<usize>,
    stack: Vec<Frame>,
    root_partner: Option<Dart>,
    state: State,
}

impl Enumerator {
    pub fn new(spec: &SearchSpec) -> Self {
        let n2 = spec.dart_count;
        let max_degree = spec.filter.max_degree().min(n2);
        Enumerator {
            spec: spec.clone(),
            max_degree,
            alpha: vec![FREE; n2],
            closed: vec![0; max_degree + 1],
            stack: Vec::with_capacity(n2 / 2),
            root_partner: None,
            state: State::Fresh,
        }
    }

    /// Restricts the search to maps with `alpha(0) = partner`.
    pub fn branch(spec: &SearchSpec, partner: Dart) -> Self {
        assert!(partner > 0 && partner < spec.dart_count, "dart 0 cannot pair with {partner}");
        let mut e = Self::new(spec);
        e.root_partner = Some(partner);
        e
    }

    /// Advances to the next map and lends its `alpha`.
    pub fn next_alpha(&mut self) -> Option<&[Dart]> {
        loop {
            match self.state {
                State::Done => return None,
                State::Fresh => {
                    self.state = State::Running;
                    self.open_frame();
                }
                State::Running => {}
            }
            if self.stack.is_empty() {
                self.state = State::Done;
                return None;
            }
            if !self.advance_top() {
                self.stack.pop();
                continue;
            }
            if self.open_frame() {
                continue;
            }
            if self.complete() {
                return Some(&self.alpha);
            }
        }
    }

    fn sigma(&self, d: Dart) -> Option<Dart> {
        let s = self.alpha[(d + 1) % self.alpha.len()];
        (s != FREE).then_some(s)
    }

    /// Pushes a frame for the smallest unpaired dart; false if none is left.
    fn open_frame(&mut self) -> bool {
        let from = self.stack.last().map_or(0, |f| f.dart + 1);
        match (from..self.alpha.len()).find(|&d| self.alpha[d] == FREE) {
            Some(dart) => {
                self.stack.push(Frame { dart, partner: FREE, closed: [0; 2] });
                true
            }
            None => false,
        }
    }

    /// Moves the top frame to its next admissible partner.
    fn advance_top(&mut self) -> bool {
        let top = self.stack.len() - 1;
        let Frame { dart, partner, closed } = self.stack[top];
        if partner != FREE {
            self.alpha[dart] = FREE;
            self.alpha[partner] = FREE;
            self.uncount(closed);
        }
        let start = if partner == FREE { dart + 1 } else { partner + 1 };
        for e in start..self.alpha.len() {
            if self.alpha[e] != FREE || (top == 0 && self.root_partner.is_some_and(|r| r != e)) {
                continue;
            }
            self.alpha[dart] = e;
            self.alpha[e] = dart;
            if let Some(closed) = self.evaluate(dart, e) {
                self.stack[top].partner = e;
                self.stack[top].closed = closed;
                return true;
            }
            self.alpha[dart] = FREE;
            self.alpha[e] = FREE;
        }
        self.stack[top].partner = FREE;
        false
    }

    fn uncount(&mut self, closed: [usize; 2]) {
        for deg in closed {
            if deg != 0 {
                self.closed[deg] -= 1;
            }
        }
    }

    /// Checks the two `sigma` values fixed by pairing `d` with `e`.
    /// Returns the degrees of newly closed vertices, or `None` to prune.
    fn evaluate(&mut self, d: Dart, e: Dart) -> Option<[usize; 2]> {
        let n2 = self.alpha.len();
        let mut record = [0; 2];
        let mut first_min = None;
        for (i, x) in [(d + n2 - 1) % n2, (e + n2 - 1) % n2].into_iter().enumerate() {
            match self.trace(x) {
                Err(()) => {
                    self.uncount(record);
                    return None;
                }
                Ok(None) => {}
                Ok(Some((len, min))) => {
                    if first_min == Some(min) {
                        continue;
                    }
                    let over = self.spec.filter.required(len).is_some_and(|r| self.closed[len] >= r);
                    if !self.spec.filter.allows(len) || over {
                        self.uncount(record);
                        return None;
                    }
                    self.closed[len] += 1;
                    record[i] = len;
                    first_min = Some(min);
                }
            }
        }
        Some(record)
    }

    /// Follows the partial `sigma` chain through `x`. `Ok(Some((len, min)))`
    /// for a closed cycle, `Ok(None)` for an open path that can still be
    /// completed, `Err` when it is already longer than any allowed degree.
    fn trace(&self, x: Dart) -> Result<Option<(usize, Dart)>, ()> {
        let n2 = self.alpha.len();
        let mut len = 1;
        let mut min = x;
        let mut y = self.sigma(x).expect("sigma(x) was just fixed");
        loop {
            if y == x {
                return Ok(Some((len, min)));
            }
            len += 1;
            if len > self.max_degree {
                return Err(());
            }
            min = min.min(y);
            match self.sigma(y) {
                Some(z) => y = z,
                None => break,
            }
        }
        // open path: extend backwards, sigma^-1(z) = alpha(z) - 1
        let mut z = x;
        while self.alpha[z] != FREE {
            z = (self.alpha[z] + n2 - 1) % n2;
            len += 1;
            if len > self.max_degree {
                return Err(());
            }
        }
        Ok(None)
    }

    fn complete(&self) -> bool {
        self.spec.filter.required.iter().all(|&(d, c)| self.closed.get(d) == Some(&c))
    }
}

impl Iterator for Enumerator {
    type Item = RootedMap;

    fn next(&mut self) -> Option<RootedMap> {
        let n2 = self.alpha.len();
        let alpha = self.next_alpha()?.to_vec();
        Some(RootedMap::from_alpha(n2, alpha).expect("search yields involutions"))
    }
}

/// Every map of the family, in lexicographic `alpha` order.
pub fn enumerate_rooted(spec: &SearchSpec) -> Enumerator {
    Enumerator::new(spec)
}

/// Possible partners of dart 0; each names an independent search branch.
pub fn root_branches(spec: &SearchSpec) -> Range<Dart> {
    1..spec.dart_count
}

/// Rooted maps and rotations fixing them, accumulated over a search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub maps: u64,
    /// Sum over maps of the number of root rotations fixing the map.
    pub fixed_rotations: u64,
}

impl Tally {
    fn scan(mut e: Enumerator) -> Tally {
        let mut t = Tally::default();
        while let Some(alpha) = e.next_alpha() {
            t.maps += 1;
            t.fixed_rotations += (0..alpha.len()).filter(|&j| rotation_fixes(alpha, j)).count() as u64;
        }
        t
    }

    /// Number of orbits under root rotation. Panics if the Burnside sum is
    /// not divisible by the dart count.
    pub fn orbits(&self, dart_count: usize) -> BigCount {
        let n2 = dart_count as u64;
        assert!(
            self.fixed_rotations.is_multiple_of(n2),
            "Burnside sum {} is not divisible by {n2}",
            self.fixed_rotations
        );
        BigCount::from(self.fixed_rotations / n2)
    }
}

impl Add for Tally {
    type Output = Tally;

    fn add(self, rhs: Tally) -> Tally {
        Tally { maps: self.maps + rhs.maps, fixed_rotations: self.fixed_rotations + rhs.fixed_rotations }
    }
}

impl AddAssign for Tally {
    fn add_assign(&mut self, rhs: Tally) {
        *self = *self + rhs;
    }
}

impl core::iter::Sum for Tally {
    fn sum<I: Iterator<Item = Tally>>(iter: I) -> Tally {
        iter.fold(Tally::default(), Add::add)
    }
}

pub fn tally(spec: &SearchSpec) -> Tally {
    Tally::scan(Enumerator::new(spec))
}

pub fn tally_branch(spec: &SearchSpec, partner: Dart) -> Tally {
    Tally::scan(Enumerator::branch(spec, partner))
}

fn count(mut e: Enumerator) -> u64 {
    let mut n = 0;
    while e.next_alpha().is_some() {
        n += 1;
    }
    n
}

pub fn count_rooted(spec: &SearchSpec) -> BigCount {
    BigCount::from(count(Enumerator::new(spec)))
}

pub fn count_rooted_branch(spec: &SearchSpec, partner: Dart) -> u64 {
    count(Enumerator::branch(spec, partner))
}

/// Rooted one-face maps of genus `g` with `k` degree-4 vertices and only
/// leaves otherwise; 0 for empty families.
pub fn count_rooted14(g: u64, k: u64) -> Result<BigCount, SpecError> {
    match SearchSpec::one_four(g, k) {
        Ok(spec) => Ok(count_rooted(&spec)),
        Err(SpecError::Params(Params14Error::EmptyFamily { .. })) => Ok(BigCount::from(0u32)),
        Err(e) => Err(e),
    }
}

pub fn count_unrooted_burnside(spec: &SearchSpec) -> BigCount {
    tally(spec).orbits(spec.dart_count)
}

/// Unpruned reference count: every fixed-point-free involution is built in
/// full and its degree profile tested afterwards.
pub fn count_rooted_exhaustive(spec: &SearchSpec) -> BigCount {
    fn go(alpha: &mut Vec<Dart>, spec: &SearchSpec, hits: &mut u64) {
        let Some(d) = alpha.iter().position(|&x| x == FREE) else {
            let m = RootedMap::from_alpha(alpha.len(), alpha.clone()).expect("involution");
            if spec.filter.admits(&m.degree_profile()) {
                *hits += 1;
            }
            return;
        };
        for e in d + 1..alpha.len() {
            if alpha[e] == FREE {
                alpha[d] = e;
                alpha[e] = d;
                go(alpha, spec, hits);
                alpha[d] = FREE;
                alpha[e] = FREE;
            }
        }
    }
    let mut hits = 0;
    go(&mut vec![FREE; spec.dart_count], spec, &mut hits);
    BigCount::from(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn four_regular_small_genus() {
        let g1 = SearchSpec::four_regular(1).unwrap();
        assert_eq!(count_rooted(&g1), big(1));
        let maps: Vec<_> = enumerate_rooted(&g1).collect();
        assert_eq!(maps, vec![RootedMap::from_alpha(4, vec![2, 3, 0, 1]).unwrap()]);
        assert_eq!(count_rooted(&SearchSpec::four_regular(2).unwrap()), big(45));
        assert_eq!(count_unrooted_burnside(&g1), big(1));
        assert_eq!(count_unrooted_burnside(&SearchSpec::four_regular(2).unwrap()), big(6));
    }

    #[test]
    fn one_four_small_cases() {
        assert_eq!(count_rooted14(0, 1), Ok(big(2)));
        assert_eq!(count_rooted14(1, 1), Ok(big(1)));
        assert_eq!(count_rooted14(0, 0), Ok(big(1)));
        assert_eq!(count_rooted14(2, 1), Ok(big(0)));
        let tree = SearchSpec::one_four(0, 0).unwrap();
        assert_eq!(enumerate_rooted(&tree).collect::<Vec<_>>(), vec![RootedMap::from_alpha(2, vec![1, 0]).unwrap()]);
    }

    #[test]
    fn pruned_matches_exhaustive() {
        let filters = [
            DegreeFilter::any(),
            DegreeFilter::four_regular(),
            DegreeFilter::exact(&[(1, 2), (2, 1)]),
            DegreeFilter::exact(&[(1, 4), (4, 1)]),
            DegreeFilter::exact(&[(2, 2)]),
            DegreeFilter::exact(&[(1, 1), (3, 1)]),
        ];
        for n2 in (2..=8).step_by(2) {
            for f in &filters {
                let spec = SearchSpec::new(n2, f.clone()).unwrap();
                assert_eq!(count_rooted(&spec), count_rooted_exhaustive(&spec), "n2={n2} {f:?}");
            }
        }
        // all maps on 2n darts: (2n-1)!!
        assert_eq!(count_rooted(&SearchSpec::new(8, DegreeFilter::any()).unwrap()), big(105));
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let spec = SearchSpec::new(10, DegreeFilter::any()).unwrap();
        let maps: Vec<_> = enumerate_rooted(&spec).collect();
        assert_eq!(maps.len(), 945);
        assert!(maps.windows(2).all(|w| w[0].alpha_slice() < w[1].alpha_slice()));
    }

    #[test]
    fn branches_partition_the_search() {
        let spec = SearchSpec::four_regular(2).unwrap();
        let total: u64 = root_branches(&spec).map(|p| count_rooted_branch(&spec, p)).sum();
        assert_eq!(big(total), count_rooted(&spec));
        let t: Tally = root_branches(&spec).map(|p| tally_branch(&spec, p)).sum();
        assert_eq!(t, tally(&spec));
    }

    #[test]
    fn spec_errors() {
        assert_eq!(SearchSpec::new(3, DegreeFilter::any()), Err(SpecError::BadDartCount(3)));
        assert_eq!(SearchSpec::new(64, DegreeFilter::any()), Err(SpecError::TooManyDarts(64)));
        assert_eq!(SearchSpec::four_regular(0), Err(SpecError::GenusZero));
    }

    #[test]
    fn filter_admits() {
        let f = DegreeFilter::exact(&[(1, 2), (4, 1)]);
        assert!(f.admits(&DegreeProfile::from_pairs(&[(1, 2), (4, 1)])));
        assert!(!f.admits(&DegreeProfile::from_pairs(&[(1, 2), (4, 2)])));
        assert!(!f.admits(&DegreeProfile::from_pairs(&[(1, 2), (2, 1), (4, 1)])));
        assert_eq!(f.max_degree(), 4);
        assert_eq!(DegreeFilter::any().max_degree(), 63);
    }
}
