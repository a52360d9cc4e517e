//! Trisections and the vertex gluing/cutting surgery between genus `g - 1`
//! and genus `g` one-face maps.
//!
//! Darts are ordered along the face starting from the root, which for a
//! [`RootedMap`] is plain integer order. Three darts `a1 < a2 < a3` at one
//! vertex are *intertwined* when the vertex visits them as `a1, a3, a2`.
//!
//! Both surgeries replace `sigma` by `sigma ∘ c` for a 3-cycle `c` on the
//! triple and keep `alpha`. The new face is then a single cycle other than
//! the standard one, so the result is relabelled in face order from the root;
//! the triple is reported in the new labels.

use alloc::vec::Vec;

use thiserror::Error;

use crate::permmap::{Dart, RootedMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("triple darts must be distinct")]
    NotDistinct,
    #[error("dart {0} is out of range")]
    OutOfRange(Dart),
    #[error("triple darts do not share a vertex")]
    NotCoVertex,
    #[error("triple darts must lie in three different vertices")]
    NotDistinctVertices,
    #[error("triple is not intertwined at its vertex")]
    NotIntertwined,
}

/// Three darts in increasing face order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub a1: Dart,
    pub a2: Dart,
    pub a3: Dart,
}

impl Triple {
    /// Sorts three distinct darts into a triple.
    pub fn sorted(x: Dart, y: Dart, z: Dart) -> Result<Self, BijectionError> {
        let mut v = [x, y, z];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            return Err(BijectionError::NotDistinct);
        }
        Ok(Triple { a1: v[0], a2: v[1], a3: v[2] })
    }

    pub fn darts(&self) -> [Dart; 3] {
        [self.a1, self.a2, self.a3]
    }

    fn check_range(&self, m: &RootedMap) -> Result<(), BijectionError> {
        if !(self.a1 < self.a2 && self.a2 < self.a3) {
            return Err(BijectionError::NotDistinct);
        }
        match self.darts().into_iter().find(|&d| d >= m.dart_count()) {
            Some(d) => Err(BijectionError::OutOfRange(d)),
            None => Ok(()),
        }
    }
}

/// A dart `h` with `sigma(h) < h` and `sigma(h)` not the minimum of its vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Trisection(pub Dart);

/// All trisections of `m`, ascending.
pub fn trisections(m: &RootedMap) -> Vec<Trisection> {
    let mut vertex_min = alloc::vec![0; m.dart_count()];
    for cycle in m.vertices() {
        for &d in &cycle {
            vertex_min[d] = cycle[0];
        }
    }
    (0..m.dart_count())
        .filter(|&h| {
            let s = m.sigma(h);
            s < h && s != vertex_min[h]
        })
        .map(Trisection)
        .collect()
}

/// Whether the co-vertex triple is visited as `a1, a3, a2` around its vertex.
pub fn is_intertwined(m: &RootedMap, t: Triple) -> Result<bool, BijectionError> {
    t.check_range(m)?;
    let (mut pos2, mut pos3) = (None, None);
    let mut d = m.sigma(t.a1);
    let mut step = 0;
    while d != t.a1 {
        if d == t.a2 {
            pos2 = Some(step);
        } else if d == t.a3 {
            pos3 = Some(step);
        }
        step += 1;
        d = m.sigma(d);
    }
    match (pos2, pos3) {
        (Some(p2), Some(p3)) => Ok(p3 < p2),
        _ => Err(BijectionError::NotCoVertex),
    }
}

/// Every intertwined triple of `m`, in lexicographic order.
pub fn intertwined_triples(m: &RootedMap) -> Vec<Triple> {
    let mut out = Vec::new();
    for cycle in m.vertices() {
        let mut darts = cycle.clone();
        darts.sort_unstable();
        for i in 0..darts.len() {
            for j in i + 1..darts.len() {
                for k in j + 1..darts.len() {
                    let t = Triple { a1: darts[i], a2: darts[j], a3: darts[k] };
                    if is_intertwined(m, t) == Ok(true) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Result of a surgery: the new map and the triple's image in its labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surgery {
    pub map: RootedMap,
    pub triple: Triple,
}

/// Merges the three vertices through `a1 < a2 < a3` into one vertex at which
/// the triple is intertwined. Raises the genus by one.
pub fn glue(m: &RootedMap, t: Triple) -> Result<Surgery, BijectionError> {
    t.check_range(m)?;
    let vertex = m.vertex_index();
    let [x, y, z] = t.darts().map(|d| vertex[d]);
    if x == y || y == z || x == z {
        return Err(BijectionError::NotDistinctVertices);
    }
    let genus = m.genus();
    let vertices = m.vertex_count();
    Ok(reconnect(m, t, |s| {
        s.map.vertex_count() + 2 == vertices
            && s.map.genus() == genus + 1
            && is_intertwined(&s.map, s.triple) == Ok(true)
    }))
}

/// Splits the vertex carrying an intertwined triple into three vertices,
/// one per dart. Lowers the genus by one; inverse of [`glue`].
pub fn cut(m: &RootedMap, t: Triple) -> Result<Surgery, BijectionError> {
    if !is_intertwined(m, t)? {
        return Err(BijectionError::NotIntertwined);
    }
    let genus = m.genus();
    let vertices = m.vertex_count();
    Ok(reconnect(m, t, |s| {
        let vertex = s.map.vertex_index();
        let [x, y, z] = s.triple.darts().map(|d| vertex[d]);
        s.map.vertex_count() == vertices + 2 && s.map.genus() + 1 == genus && x != y && y != z && x != z
    }))
}

/// Tries `sigma ∘ c` for both orientations of the 3-cycle `c` on the triple
/// and keeps the unique one-face result that passes `accept`.
fn reconnect(m: &RootedMap, t: Triple, accept: impl Fn(&Surgery) -> bool) -> Surgery {
    let sigma = m.sigma_vec();
    let orders = [[t.a1, t.a2, t.a3], [t.a1, t.a3, t.a2]];
    let mut found: Option<Surgery> = None;
    for [c0, c1, c2] in orders {
        let mut next = sigma.clone();
        next[c0] = sigma[c1];
        next[c1] = sigma[c2];
        next[c2] = sigma[c0];
        let Ok((map, label)) = RootedMap::from_permutations(m.alpha_slice(), &next) else {
            continue;
        };
        let triple = Triple::sorted(label[t.a1], label[t.a2], label[t.a3])
            .expect("relabelling is a bijection");
        let candidate = Surgery { map, triple };
        if accept(&candidate) {
            assert!(found.is_none(), "both 3-cycle orientations satisfy the surgery postcondition at {t:?}");
            found = Some(candidate);
        }
    }
    found.unwrap_or_else(|| panic!("no 3-cycle orientation yields a one-face result at {t:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn torus() -> RootedMap {
        RootedMap::from_alpha(4, vec![2, 3, 0, 1]).unwrap()
    }

    fn figure_one() -> RootedMap {
        RootedMap::from_pairs(12, &[(0, 9), (1, 11), (2, 4), (3, 6), (5, 7), (8, 10)]).unwrap()
    }

    /// Star with four leaves around the vertex (0 2 4 6).
    fn star() -> RootedMap {
        RootedMap::from_alpha(8, vec![7, 2, 1, 4, 3, 6, 5, 0]).unwrap()
    }

    /// Path with three vertices: leaf - middle - leaf.
    fn path3() -> RootedMap {
        // darts 0..4: alpha (0 3)(1 2); sigma(0)=alpha(1)=2, sigma(2)=alpha(3)=0
        RootedMap::from_alpha(4, vec![3, 2, 1, 0]).unwrap()
    }

    #[test]
    fn trisections_of_small_maps() {
        assert_eq!(trisections(&torus()), vec![Trisection(2), Trisection(3)]);
        assert!(trisections(&RootedMap::from_alpha(2, vec![1, 0]).unwrap()).is_empty());
        assert_eq!(trisections(&figure_one()).len(), 4);
    }

    #[test]
    fn intertwined_examples() {
        let m = torus();
        assert_eq!(is_intertwined(&m, Triple::sorted(0, 1, 2).unwrap()), Ok(true));
        assert_eq!(is_intertwined(&m, Triple::sorted(0, 1, 3).unwrap()), Ok(true));
        // the vertex (0 3 2 1) runs against the face, so every triple on it is intertwined
        assert_eq!(is_intertwined(&m, Triple::sorted(0, 2, 3).unwrap()), Ok(true));
        assert_eq!(is_intertwined(&m, Triple::sorted(1, 2, 3).unwrap()), Ok(true));
        // the centre of a star (0 2 4 6) follows the face
        assert_eq!(is_intertwined(&star(), Triple::sorted(0, 2, 4).unwrap()), Ok(false));
        assert_eq!(is_intertwined(&path3(), Triple::sorted(0, 1, 2).unwrap()), Err(BijectionError::NotCoVertex));
    }

    #[test]
    fn tree_vertices_are_never_intertwined() {
        let star = star();
        assert_eq!(star.genus(), 0);
        assert!(star.vertices().iter().any(|c| c.len() == 4));
        assert!(intertwined_triples(&star).is_empty());
    }

    #[test]
    fn glue_path_gives_torus_then_cut_restores() {
        let m = path3();
        assert_eq!(m.vertex_count(), 3);
        let t = Triple::sorted(0, 1, 3).unwrap();
        let glued = glue(&m, t).unwrap();
        assert_eq!(glued.map.genus(), 1);
        assert_eq!(glued.map.vertex_count(), 1);
        assert_eq!(is_intertwined(&glued.map, glued.triple), Ok(true));
        let back = cut(&glued.map, glued.triple).unwrap();
        assert_eq!(back.map, m);
        assert_eq!(back.triple, t);
    }

    #[test]
    fn cut_torus_gives_tree() {
        let s = cut(&torus(), Triple::sorted(0, 1, 2).unwrap()).unwrap();
        assert_eq!(s.map.genus(), 0);
        assert_eq!(s.map.vertex_count(), 3);
        let again = glue(&s.map, s.triple).unwrap();
        assert_eq!(again.map, torus());
        assert_eq!(again.triple, Triple::sorted(0, 1, 2).unwrap());
    }

    #[test]
    fn surgery_preconditions() {
        assert_eq!(cut(&star(), Triple::sorted(0, 2, 4).unwrap()), Err(BijectionError::NotIntertwined));
        assert_eq!(glue(&torus(), Triple::sorted(0, 1, 2).unwrap()), Err(BijectionError::NotDistinctVertices));
        assert_eq!(Triple::sorted(1, 1, 2), Err(BijectionError::NotDistinct));
        assert_eq!(
            is_intertwined(&torus(), Triple { a1: 0, a2: 1, a3: 9 }),
            Err(BijectionError::OutOfRange(9))
        );
    }

    #[test]
    fn figure_one_intertwined_triples_cut_cleanly() {
        let m = figure_one();
        let triples = intertwined_triples(&m);
        assert!(!triples.is_empty());
        for t in triples {
            let s = cut(&m, t).unwrap();
            assert_eq!(s.map.genus(), 1);
            assert_eq!(glue(&s.map, s.triple).unwrap(), Surgery { map: m.clone(), triple: t });
        }
    }
}
