//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test --release --test acceptance -- --nocapture`.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::*;
use graceful_core::graph::automorphisms;
use graceful_core::labeling::{
    canonical_form, enumerate_graceful, find_graceful_completion, parse_golden, EnumerationMode, DEFAULT_BUDGET,
};
use graceful_core::*;

const TABLE_INSTANCE_LIMIT: Duration = Duration::from_secs(120);
const TABLE_SUITE_LIMIT: Duration = Duration::from_secs(30 * 60);
const VERIFY_SUITE_LIMIT: Duration = Duration::from_secs(60 * 60);
const RANDOM_STATES: usize = 1000;
const MEMO_MAX_EDGES: usize = 6;

/// Criteria known not to be attainable as stated, with the reason.
const KNOWN_GAPS: [(&str, &str); 1] = [(
    "golden-p32-count",
    "P3,2 has 8 orbits under its 12 automorphisms; the golden file's 10 tuples include 2 mirror pairs",
)];

struct Report {
    lines: Vec<(String, bool, String)>,
}

impl Report {
    fn record(&mut self, name: &str, outcome: Check) {
        let (ok, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        println!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        self.lines.push((name.to_string(), ok, detail));
    }
}

fn table() -> Check {
    let suite = Instant::now();
    let mut slowest = Duration::ZERO;
    for (s, a, b) in TABLE {
        let g = arc(s);
        for (first, want) in [(Player::Alice, a), (Player::Bob, b)] {
            let t = Instant::now();
            let r = solve(Arc::clone(&g), first, DEFAULT_BUDGET).map_err(|e| format!("{s}: {e}"))?;
            let took = t.elapsed();
            slowest = slowest.max(took);
            if r.winner != player(want) {
                return Err(format!("{s}, {first:?} first: got {:?}", r.winner));
            }
            if took > TABLE_INSTANCE_LIMIT {
                return Err(format!("{s}: {took:?} over {TABLE_INSTANCE_LIMIT:?}"));
            }
        }
    }
    let total = suite.elapsed();
    if total > TABLE_SUITE_LIMIT {
        return Err(format!("suite took {total:?}"));
    }
    Ok(format!("{} rows, slowest solve {slowest:.2?}, total {total:.2?}", TABLE.len()))
}

fn load(name: &str, order: &[usize]) -> Vec<GracefulLabeling> {
    let path = format!("{}/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_golden(&std::fs::read_to_string(path).unwrap(), order).unwrap()
}

fn orbits(g: &Graph, fs: &[GracefulLabeling]) -> BTreeSet<GracefulLabeling> {
    let autos = automorphisms(g).unwrap();
    fs.iter().map(|f| canonical_form(f, &autos)).collect()
}

fn golden_sets() -> Check {
    let mut parts = Vec::new();
    let mut compare = |name: &str, g: &Graph, found: Vec<GracefulLabeling>, golden: Vec<GracefulLabeling>, want: Option<usize>| {
        let a = orbits(g, &found);
        let b = orbits(g, &golden);
        if a != b {
            return Err(format!("{name}: enumerated {} orbits, golden {}", a.len(), b.len()));
        }
        if let Some(n) = want {
            if a.len() != n {
                return Err(format!("{name}: {} orbits, expected {n}", a.len()));
            }
        }
        parts.push(format!("{name} {}", a.len()));
        Ok(())
    };
    let all = |s: &str| {
        let g = arc(s);
        let f = enumerate_graceful(&g, EnumerationMode::Raw, DEFAULT_BUDGET).unwrap();
        (g, f)
    };
    let (g, f) = all("complete(4)");
    compare("K4", &g, f, load("k4.txt", &[0, 1, 2, 3]), Some(2))?;
    let (g, f) = all("cycle(4)");
    compare("C4", &g, f, load("c4.txt", &[0, 1, 2, 3]), Some(2))?;
    let (g, f) = all("wheel(4)");
    compare("W4", &g, f, load("w4.txt", &[0, 1, 2, 3, 4]), None)?;
    let (g, f) = all("wheel(5)");
    let centered = f.into_iter().filter(|f| f.0[5] == 0).collect();
    compare("W5 center 0", &g, centered, load("w5_center0.txt", &[0, 1, 2, 3, 4, 5]), Some(4))?;
    let (g, f) = all("gear(3)");
    let rim_nine = f
        .into_iter()
        .filter(|f| g.edges().iter().any(|&(u, v)| u != 3 && v != 3 && f.0[u].abs_diff(f.0[v]) == 9))
        .collect();
    let golden = load("g3_edge9.txt", &[3, 0, 4, 1, 5, 2, 6]);
    if golden.len() != 40 {
        return Err(format!("G3 golden has {} tuples", golden.len()));
    }
    compare("G3 edge 9", &g, rim_nine, golden, None)?;
    let (g, f) = all("prism(3)");
    compare("P3,2", &g, f, load("prism3.txt", &[0, 1, 2, 3, 4, 5]), None)?;
    Ok(format!("orbit sets equal: {}", parts.join(", ")))
}

fn p32_count() -> Check {
    let g = arc("prism(3)");
    let n = enumerate_graceful(&g, EnumerationMode::UpToAutomorphism, DEFAULT_BUDGET).unwrap().len();
    if n == 10 {
        Ok("10 orbits".into())
    } else {
        Err(format!("{n} orbits under the full group, expected 10"))
    }
}

fn gracefulness() -> Check {
    let graceful = |s: &str| {
        let g = arc(s);
        find_graceful_completion(&g, &PartialLabeling::empty(&g).unwrap(), DEFAULT_BUDGET).unwrap().is_some()
    };
    for n in 3..=11 {
        if graceful(&format!("cycle({n})")) != (n % 4 == 0 || n % 4 == 3) {
            return Err(format!("C{n}"));
        }
    }
    for n in 2..=5 {
        if graceful(&format!("complete({n})")) != (n <= 4) {
            return Err(format!("K{n}"));
        }
    }
    let mut trees: Vec<String> = (2..=8).map(|n| format!("path({n})")).collect();
    trees.extend((1..=6).map(|q| format!("star({q})")));
    let cats = ["caterpillar(1,2)", "caterpillar(2,2)", "caterpillar(2,0,2)", "caterpillar(1,1,1)", "caterpillar(3,3)", "caterpillar(2,2,2)", "caterpillar(1,0,1,1)"];
    trees.extend(cats.map(String::from));
    for s in &trees {
        if arc(s).n_edges() > 9 || !graceful(s) {
            return Err(s.clone());
        }
    }
    Ok(format!("C3-C11, K2-K5, {} trees", trees.len()))
}

fn verification() -> Check {
    let suite = Instant::now();
    let cases = verification_cases();
    let (mut off, mut refute) = (0, 0);
    for &(id, s, first) in &cases {
        let v = verify_strategy(id, &spec(s), first).map_err(|e| format!("{id} on {s}: {e}"))?;
        if !v.holds {
            return Err(format!("{id} on {s}, {first:?} first: counterexample {:?}", v.counterexample));
        }
        off += v.offscript_count;
        refute += v.refutation_count;
    }
    let total = suite.elapsed();
    if total > VERIFY_SUITE_LIMIT {
        return Err(format!("suite took {total:?}"));
    }
    Ok(format!("{} cases, {off} solver fallbacks, {refute} refutations, {total:.2?}", cases.len()))
}

fn blockers() -> Check {
    let mut parts = Vec::new();
    for s in ["path(4)", "path(5)", "path(6)", "star(3)", "wheel(4)"] {
        let one = partner_label_blocker(s)?;
        let two = opening_zero_blocker(s)?;
        parts.push(format!("{s} [{one}; {two}]"));
    }
    for n in [4usize, 5] {
        let g = arc(&format!("wheel({n})"));
        let all = enumerate_graceful(&g, EnumerationMode::Raw, DEFAULT_BUDGET).unwrap();
        if all.is_empty() || all.iter().any(|f| f.0[n] == n) {
            return Err(format!("W{n} center label"));
        }
        parts.push(format!("W{n}: {} labelings, none with center {n}", all.len()));
    }
    Ok(parts.join(", "))
}

fn self_consistency() -> Check {
    let c = complement_symmetry(RANDOM_STATES, 0x5eed)?;
    let a = automorphism_invariance(RANDOM_STATES, 0xa070)?;
    let m = memo_agreement(MEMO_MAX_EDGES)?;
    Ok(format!("complement {c}; automorphism {a}; memo on/off {m} with m <= {MEMO_MAX_EDGES}"))
}

#[test]
fn acceptance() {
    let mut report = Report { lines: Vec::new() };
    println!();
    report.record("table-winners", table());
    report.record("golden-enumeration", golden_sets());
    report.record("golden-p32-count", p32_count());
    report.record("gracefulness-criteria", gracefulness());
    report.record("strategy-verification", verification());
    report.record("blocker-suites", blockers());
    report.record("solver-self-consistency", self_consistency());
    for (name, reason) in KNOWN_GAPS {
        println!("note {name}: {reason}");
    }
    for (name, ok, detail) in &report.lines {
        let gap = KNOWN_GAPS.iter().any(|(g, _)| g == name);
        assert!(*ok != gap, "{name}: {detail}");
    }
}
