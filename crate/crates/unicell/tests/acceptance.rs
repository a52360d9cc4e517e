//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::fmt::Display;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::{Duration, Instant};

use unicell::parallel::tally_parallel;
use unicell_core::bijection::{cut, glue, intertwined_triples, trisections, Triple};
use unicell_core::closedform::{eps14, eps4_rooted, params14, recurrence_holds14};
use unicell_core::exact::count_to_rational;
use unicell_core::oracle::{count_rooted14, enumerate_rooted, DegreeFilter, SearchSpec};
use unicell_core::orbifold::{eps4_unrooted, eps4_unrooted_by_period, eps4_unrooted_expanded, f2, f2_genus0_closed, f2_slice, f4};
use unicell_core::BigCount;

/// Genus, labelled and unlabelled counts as published.
const PUBLISHED: [(u64, &str, &str); 15] = [
    (1, "1", "1"),
    (2, "45", "6"),
    (3, "9450", "510"),
    (4, "4729725", "169772"),
    (5, "4341887550", "120644422"),
    (6, "6352181485650", "144369379620"),
    (7, "13566444744352500", "260893265836244"),
    (8, "39834473380605028125", "663907896121296616"),
    (9, "153946961458244898693750", "2263925904300525582790"),
    (10, "757572997336023146471943750", "9968065754464730977513732"),
    (11, "4625189759553876588251163487500", "55061782851836038471634743076"),
    (12, "34307345041490879593353005168531250", "372905924364031740449809951518408"),
    (13, "303883906271359598859584503473567187500", "3038839062713596039129776983675546524"),
    (14, "3168250194798584983481619521143486701562500", "29335649951838749853328539549957507066456"),
    (15, "38405528861348447169764191835301345796340625000", "331082145356452130774665205463914398071175024"),
];

type Outcome = Result<String, String>;

fn big(s: &str) -> BigCount {
    BigCount::from_str(s).unwrap()
}

fn same<T: PartialEq + Display>(what: impl Display, expected: T, got: T) -> Result<(), String> {
    if expected == got {
        Ok(())
    } else {
        Err(format!("{what}: expected {expected}, got {got}"))
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn c1_rooted_table() -> Outcome {
    let t = Instant::now();
    for (g, labelled, _) in PUBLISHED {
        same(format!("g={g}"), big(labelled), eps4_rooted(g).unwrap())?;
    }
    let e = t.elapsed();
    within(e, Duration::from_secs(1))?;
    Ok(format!("15 rows equal, {e:?}"))
}

fn c2_unrooted_table() -> Outcome {
    let t = Instant::now();
    for (g, _, unlabelled) in PUBLISHED {
        same(format!("g={g}"), big(unlabelled), eps4_unrooted(g).unwrap())?;
    }
    let e = t.elapsed();
    within(e, Duration::from_secs(1))?;
    Ok(format!("15 rows equal, {e:?}"))
}

fn c3_c4_oracle() -> (Outcome, Outcome) {
    let mut rooted = Vec::new();
    let mut unrooted = Vec::new();
    let mut fail_r = None;
    let mut fail_u = None;
    for g in 1..=3 {
        let spec = SearchSpec::four_regular(g).unwrap();
        let t = Instant::now();
        let tally = tally_parallel(&spec, 0, false);
        let e = t.elapsed();
        let limit = if g < 3 { Duration::from_secs(1) } else { Duration::from_secs(600) };
        let r = same(format!("g={g}"), eps4_rooted(g).unwrap(), BigCount::from(tally.maps)).and(within(e, limit));
        let u = same(format!("g={g}"), eps4_unrooted(g).unwrap(), tally.orbits(spec.dart_count()));
        match r {
            Ok(()) => rooted.push(format!("g={g}: {} in {e:?}", tally.maps)),
            Err(m) => fail_r = fail_r.or(Some(m)),
        }
        match u {
            Ok(()) => unrooted.push(format!("g={g}: {}", tally.orbits(spec.dart_count()))),
            Err(m) => fail_u = fail_u.or(Some(m)),
        }
    }
    (fail_r.map_or(Ok(rooted.join(", ")), Err), fail_u.map_or(Ok(unrooted.join(", ")), Err))
}

/// The stated 16-dart bound leaves only 7 nonempty families, short of the
/// required 10; every family up to 20 darts is checked instead.
fn c5_one_four() -> Outcome {
    let mut nonempty = 0;
    let mut within_16 = 0;
    for g in 0..=5u64 {
        for k in 0..=10u64 {
            let Ok(p) = params14(g as i64, k as i64) else { continue };
            if 2 * p.edges > 20 {
                continue;
            }
            let oracle = count_rooted14(g, k).unwrap();
            same(format!("g={g} k={k}"), eps14(g, k), oracle.clone())?;
            if oracle != BigCount::from(0u32) {
                nonempty += 1;
                within_16 += usize::from(2 * p.edges <= 16);
            }
        }
    }
    if nonempty < 10 {
        return Err(format!("only {nonempty} nonempty families"));
    }
    Ok(format!("{nonempty} nonempty families up to 20 darts ({within_16} up to 16)"))
}

fn c6_recurrence() -> Outcome {
    for g in 1..=6 {
        for k in 1..=12 {
            if !recurrence_holds14(g, k) {
                return Err(format!("fails at g={g} k={k}"));
            }
        }
    }
    Ok("g <= 6, k <= 12".into())
}

/// The stated families (4-regular at genus 1 and 2, (1÷4) up to 12 darts)
/// hold 125 maps; the same check also runs on every family up to 20 darts.
fn c7_trisection_lemma() -> Outcome {
    let families = |max_darts: u64| {
        let mut specs = vec![SearchSpec::four_regular(1).unwrap(), SearchSpec::four_regular(2).unwrap()];
        if max_darts >= 20 {
            specs.push(SearchSpec::four_regular(3).unwrap());
        }
        for g in 0..=5u64 {
            for k in 0..=6u64 {
                if let Ok(p) = params14(g as i64, k as i64) {
                    if 2 * p.edges <= max_darts {
                        specs.push(SearchSpec::one_four(g, k).unwrap());
                    }
                }
            }
        }
        specs
    };
    let mut counts = Vec::new();
    for max_darts in [12, 20] {
        let mut maps = 0;
        for spec in &families(max_darts) {
            for m in enumerate_rooted(spec) {
                same(format!("map {m}"), 2 * m.genus(), trisections(&m).len())?;
                maps += 1;
            }
        }
        counts.push(maps);
    }
    Ok(format!("{} maps in the stated families, {} with every family up to 20 darts", counts[0], counts[1]))
}

fn c8_round_trip() -> Outcome {
    let mut pairs = 0;
    for n2 in [4, 6, 8, 10] {
        let spec = SearchSpec::new(n2, DegreeFilter::any()).unwrap();
        for m in enumerate_rooted(&spec) {
            if m.genus() <= 1 && n2 <= 8 {
                let v = m.vertex_index();
                for a in 0..n2 {
                    for b in a + 1..n2 {
                        for c in b + 1..n2 {
                            if v[a] == v[b] || v[b] == v[c] || v[a] == v[c] {
                                continue;
                            }
                            let t = Triple { a1: a, a2: b, a3: c };
                            let up = glue(&m, t).map_err(|e| format!("glue {t:?} on {m}: {e}"))?;
                            same(format!("glue genus on {m}"), m.genus() + 1, up.map.genus())?;
                            let down = cut(&up.map, up.triple).map_err(|e| format!("cut back on {m}: {e}"))?;
                            same(format!("cut(glue) on {m}"), m.clone(), down.map)?;
                            same(format!("triple on {m}"), format!("{t:?}"), format!("{:?}", down.triple))?;
                            same(format!("glue vertex count on {m}"), m.vertex_count() - 2, up.map.vertex_count())?;
                            pairs += 1;
                        }
                    }
                }
            }
            if (1..=2).contains(&m.genus()) {
                for t in intertwined_triples(&m) {
                    let down = cut(&m, t).map_err(|e| format!("cut {t:?} on {m}: {e}"))?;
                    same(format!("cut genus on {m}"), m.genus() - 1, down.map.genus())?;
                    same(format!("cut vertex count on {m}"), m.vertex_count() + 2, down.map.vertex_count())?;
                    let up = glue(&down.map, down.triple).map_err(|e| format!("glue back on {m}: {e}"))?;
                    same(format!("glue(cut) on {m}"), m.clone(), up.map)?;
                    pairs += 1;
                }
            }
        }
    }
    if pairs < 1000 {
        return Err(format!("only {pairs} pairs"));
    }
    Ok(format!("{pairs} (map, triple) pairs, every one at genus <= 2"))
}

fn c9_reconstruction() -> Outcome {
    for g in 1..=30u64 {
        let lhs = eps4_unrooted_expanded(g).unwrap() * count_to_rational(&BigCount::from(8 * g - 4));
        let rhs = count_to_rational(&(eps4_rooted(g).unwrap() + f2(g))) + f4(g);
        same(format!("identity g={g}"), lhs, rhs)?;
        same(format!("genus-0 slice g={g}"), f2_genus0_closed(g), f2_slice(g, 0))?;
    }
    Ok("g = 1..30, both identities".into())
}

fn c10_integrality() -> Outcome {
    for g in 1..=50 {
        let v = eps4_unrooted_by_period(g).unwrap();
        if !v.is_integer() {
            return Err(format!("g={g}: {v}"));
        }
    }
    Ok("g = 1..50, every denominator is 1".into())
}

fn main() -> ExitCode {
    // cargo passes harness flags such as --nocapture; there is nothing to filter
    let (c3, c4) = c3_c4_oracle();
    let results: [(&str, Outcome); 10] = [
        ("1 rooted closed form vs published table", c1_rooted_table()),
        ("2 unrooted formula vs published table", c2_unrooted_table()),
        ("3 rooted oracle vs closed form", c3),
        ("4 unrooted Burnside oracle vs formula", c4),
        ("5 (1÷4) oracle vs closed form", c5_one_four()),
        ("6 (1÷4) recurrence", c6_recurrence()),
        ("7 trisection lemma", c7_trisection_lemma()),
        ("8 cut/glue round trip", c8_round_trip()),
        ("9 reconstruction identity", c9_reconstruction()),
        ("10 integrality", c10_integrality()),
    ];
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("{}/{} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
