//! Self-check suite: closed forms against the oracle, plus formula-only
//! identities that run far beyond brute-force range.

use std::fmt;

use unicell_core::bijection::trisections;
use unicell_core::closedform::{eps14, eps4_rooted, params14, recurrence_sides14};
use unicell_core::exact::count_to_rational;
use unicell_core::oracle::{count_rooted14, enumerate_rooted, SearchSpec};
use unicell_core::orbifold::{
    eps4_unrooted, eps4_unrooted_by_period, eps4_unrooted_expanded, f2, f2_genus0_closed, f2_slice,
    f2_with_k_max_shift, f4,
};
use unicell_core::ExactRational;

use crate::parallel::tally_parallel;

/// Largest genus for formula-only identities.
pub const FORMULA_GENUS: u64 = 30;

/// Deliberate errors for checking that the suite can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Lower the upper summation bound of the period-2 sum by one.
    F2Bound,
}

#[derive(Debug, Clone)]
pub struct Options {
    pub max_genus: u64,
    pub threads: usize,
    pub fault: Option<Fault>,
    pub progress: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// `None` on success, otherwise the first mismatch with both values.
    pub mismatch: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "PASS  {}", self.name),
            Some(m) => write!(f, "FAIL  {}: {m}", self.name),
        }
    }
}

fn check<T: PartialEq + fmt::Display>(name: String, cases: impl IntoIterator<Item = (String, T, T)>) -> Check {
    let mismatch = cases
        .into_iter()
        .find(|(_, expected, got)| expected != got)
        .map(|(case, expected, got)| format!("{case}: expected {expected}, got {got}"));
    Check { name, mismatch }
}

pub fn run(opts: &Options, mut report: impl FnMut(&Check)) -> Vec<Check> {
    let mut out = Vec::new();
    let mut push = |c: Check| {
        report(&c);
        out.push(c);
    };

    for g in 1..=opts.max_genus {
        let spec = SearchSpec::four_regular(g).expect("genus >= 1");
        let t = tally_parallel(&spec, opts.threads, opts.progress);
        let rooted = eps4_rooted(g).expect("genus >= 1");
        push(check(format!("rooted oracle, genus {g}"), [(format!("g={g}"), rooted.to_string(), t.maps.to_string())]));
        let unrooted = eps4_unrooted(g).expect("genus >= 1");
        let orbits = t.orbits(spec.dart_count());
        push(check(format!("unrooted Burnside oracle, genus {g}"), [(format!("g={g}"), unrooted, orbits)]));
    }

    let max_darts = 8 * opts.max_genus - 4;
    let mut cases = Vec::new();
    for g in 0..=opts.max_genus + 2 {
        for k in 0..=max_darts / 2 {
            let Ok(p) = params14(g as i64, k as i64) else { continue };
            if 2 * p.edges <= max_darts {
                let oracle = count_rooted14(g, k).expect("family in range");
                cases.push((format!("g={g} k={k}"), eps14(g, k), oracle));
            }
        }
    }
    push(check(format!("(1÷4) maps against the oracle, up to {max_darts} darts"), cases));

    let mut cases = Vec::new();
    for g in 1..=opts.max_genus {
        let spec = SearchSpec::four_regular(g).expect("genus >= 1");
        for m in enumerate_rooted(&spec) {
            cases.push((format!("map {m}"), 2 * g as usize, trisections(&m).len()));
        }
    }
    push(check(format!("2g trisections on every 4-regular map, genus <= {}", opts.max_genus), cases));

    let cases = (1..=FORMULA_GENUS)
        .flat_map(|g| (1..=2 * FORMULA_GENUS).map(move |k| (g, k)))
        .map(|(g, k)| {
            let (lhs, rhs) = recurrence_sides14(g, k);
            (format!("g={g} k={k}"), lhs, rhs)
        });
    push(check(format!("(1÷4) recurrence, genus <= {FORMULA_GENUS}"), cases));

    let cases = (1..=FORMULA_GENUS).map(|g| {
        let f2g = match opts.fault {
            None => f2(g),
            Some(Fault::F2Bound) => f2_with_k_max_shift(g, 1),
        };
        let unrooted = eps4_unrooted_expanded(g).expect("genus >= 1");
        let lhs = unrooted * count_to_rational(&(8 * g - 4).into());
        let rhs = count_to_rational(&(eps4_rooted(g).expect("genus >= 1") + f2g)) + f4(g);
        (format!("g={g}"), lhs, rhs)
    });
    push(check(format!("(8g-4) unrooted = rooted + f2 + f4, genus <= {FORMULA_GENUS}"), cases));

    let cases = (1..=FORMULA_GENUS).map(|g| (format!("g={g}"), f2_genus0_closed(g), f2_slice(g, 0)));
    push(check(format!("genus-0 slice of f2 is 3/(2g+1) binom(4g-2,2g), genus <= {FORMULA_GENUS}"), cases));

    let cases = (1..=FORMULA_GENUS).map(|g| {
        let v = eps4_unrooted_by_period(g).expect("genus >= 1");
        (format!("g={g} value {v}"), ExactRational::from_integer(v.to_integer()), v)
    });
    push(check(format!("unrooted counts are integers, genus <= {FORMULA_GENUS}"), cases));

    out
}
