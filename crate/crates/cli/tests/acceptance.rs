//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use multilayer_order::algebra::laws::algebra_suite;
use multilayer_order::pattern::laws::{closure_suite, lattice_suite, order_map_correspondence, poset_axioms};
use multilayer_order::pattern::{
    enumerate_patterns, ideal_witnesses, is_ideal_downdirected, is_ideal_joinclosed, parse_pattern,
    top_pattern, ConcatPattern, IdealDefinition, PatternSpace,
};
use multilayer_order::poset::props::{scan_lattice_props, scan_monoid_props, scan_map_props};
use multilayer_order::{LawReport, PropReport};
use multilayer_order_cli::formats::parse_layer;
use multilayer_order_cli::suites::{layer_laws, LAYER_PAIRS};
use sha2::{Digest, Sha256};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass_if(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn laws_clean(reports: &[LawReport]) -> (bool, u64, u64) {
    let violations = reports.iter().filter(|r| !r.informational).map(|r| r.violations).sum();
    let cases = reports.iter().map(|r| r.defined_pairs).sum();
    (reports.iter().all(LawReport::passed), violations, cases)
}

fn first_failure(reports: &[LawReport]) -> String {
    reports
        .iter()
        .find(|r| !r.passed())
        .map(|r| format!(" first failing law {} k={:?}: {:?}", r.law, r.k, r.witnesses.first()))
        .unwrap_or_default()
}

fn p(text: &str) -> ConcatPattern {
    parse_pattern(text, Some(3)).unwrap()
}

fn enumeration_counts() -> Outcome {
    let counts: Vec<usize> = (1..=5).map(|k| enumerate_patterns(k).unwrap().len()).collect();
    // G, H, K = 1, 2, 3
    let listed: BTreeSet<ConcatPattern> = [
        "1*2*3", "1*3*2", "2*1*3", "2*3*1", "3*1*2", "3*2*1", "1.2*3", "1.3*2", "2.3*1", "1*2.3",
        "2*1.3", "3*1.2", "1.2.3",
    ]
    .into_iter()
    .map(p)
    .collect();
    let k3: BTreeSet<ConcatPattern> = enumerate_patterns(3).unwrap().into_iter().collect();
    pass_if(
        counts == [1, 3, 13, 75, 541] && listed.len() == 13 && k3 == listed,
        format!("counts {counts:?}, k=3 equals the 13 listed concatenations: {}", k3 == listed),
    )
}

const FIGURE_G: &str = r#"{"nodes":[1,2,3],"edges":[
  {"u":1,"v":2,"mult":3,"colors":["blue","red"]},
  {"u":2,"v":3,"mult":1,"colors":["blue"]}],
  "colorUniverse":["blue","green","red","yellow"]}"#;
const FIGURE_H: &str = r#"{"nodes":[1,2,3,4],"edges":[
  {"u":1,"v":2,"mult":1,"colors":["green"]},
  {"u":1,"v":3,"mult":1,"colors":["yellow"]},
  {"u":3,"v":4,"mult":2,"colors":["yellow","green"]}],
  "colorUniverse":["blue","green","red","yellow"]}"#;

fn merge_accounting() -> Outcome {
    let g = parse_layer(FIGURE_G).unwrap();
    let h = parse_layer(FIGURE_H).unwrap();
    let m = g.merge(&h).unwrap();
    let e12 = m.edge(1, 2).unwrap();
    let colors: Vec<&str> = e12.colors.iter().map(|c| c.0.as_str()).collect();
    let figure = m.node_set().len() == 4
        && m.color_count() == 4
        && e12.multiplicity == 4
        && colors == ["blue", "green", "red"];
    let laws = layer_laws(2024, LAYER_PAIRS).unwrap();
    let (clean, violations, _) = laws_clean(&laws);
    pass_if(
        figure && clean && laws[0].pairs_tested == 1000,
        format!(
            "figure: {} vertices, {} colors, edge 1-2 mult {}; {} random pairs, {violations} violations",
            m.node_set().len(),
            m.color_count(),
            e12.multiplicity,
            laws[0].pairs_tested
        ),
    )
}

fn poset_order_axioms() -> Outcome {
    let mut reports = Vec::new();
    for k in 1..=5 {
        reports.extend(poset_axioms(&PatternSpace::new(k).unwrap()));
    }
    let (clean, violations, cases) = laws_clean(&reports);
    pass_if(clean, format!("k<=5, {cases} cases, {violations} violations{}", first_failure(&reports)))
}

fn closure_maps() -> Outcome {
    let mut reports = Vec::new();
    for k in 1..=5 {
        let space = PatternSpace::new(k).unwrap();
        reports.extend(closure_suite(&space));
        reports.push(order_map_correspondence(&space));
    }
    let (clean, violations, cases) = laws_clean(&reports);
    pass_if(clean, format!("k<=5, {cases} cases, {violations} violations{}", first_failure(&reports)))
}

fn lattice_laws() -> Outcome {
    let mut reports = Vec::new();
    for k in 1..=6 {
        reports.extend(lattice_suite(k).unwrap());
    }
    let (clean, violations, cases) = laws_clean(&reports);
    pass_if(clean, format!("k<=6, {cases} cases, {violations} violations{}", first_failure(&reports)))
}

fn prop_line(r: &PropReport) -> String {
    format!(
        "{}: {} instances, hypothesis held {}, vacuous {}, violations {}",
        r.prop, r.instances, r.hypothesis_held, r.vacuous, r.violations
    )
}

fn proposition_scans() -> Outcome {
    let scan = scan_map_props(5, 2);
    let mut props: Vec<PropReport> = scan.props;
    props.extend(scan_lattice_props(5, 2));
    props.push(scan_monoid_props(4, 2));
    for r in &props {
        let tag = if r.informational { " (informational)" } else { "" };
        println!("    {}{tag}", prop_line(r));
    }
    let clean = props.iter().all(PropReport::passed) && scan.laws.iter().all(LawReport::passed);
    let violations: u64 = props.iter().filter(|r| !r.informational).map(|r| r.violations).sum();
    pass_if(clean, format!("posets<=5, lattices<=5, monoids<=4, <=2 pairs; {violations} counterexamples"))
}

fn algebra_laws() -> Outcome {
    let mut reports = Vec::new();
    for k in 1..=5 {
        reports.extend(algebra_suite(k).unwrap());
    }
    for r in reports.iter().filter(|r| r.informational && r.k == Some(5)) {
        println!("    {} k=5 (informational): {} cases, {} mismatches", r.law, r.defined_pairs, r.violations);
    }
    let (clean, violations, cases) = laws_clean(&reports);
    pass_if(clean, format!("k<=5, {cases} cases, {violations} violations{}", first_failure(&reports)))
}

fn ideal_checks() -> Outcome {
    let whole = enumerate_patterns(3).unwrap();
    let first: Vec<ConcatPattern> = ["3*1*2", "3*2*1", "3*1.2"].into_iter().map(p).collect();
    let second: Vec<ConcatPattern> = ["3*1.2", "2.3*1", "3*1*2", "3*2*1", "2*3*1"].into_iter().map(p).collect();
    let passes = |s: &[ConcatPattern]| is_ideal_joinclosed(s).unwrap() && is_ideal_downdirected(s).unwrap();
    let v1 = ideal_witnesses(&second, IdealDefinition::JoinClosed).unwrap();
    let v2 = ideal_witnesses(&second, IdealDefinition::DownDirected).unwrap();
    let top = top_pattern(3).unwrap();
    let witness = v2.iter().find(|w| w.y.is_some() && w.common_upper_bounds == [top.clone()]);
    if let Some(w) = witness {
        println!(
            "    second example witness: {} and {} have only the common upper bound {}",
            w.x,
            w.y.as_ref().unwrap(),
            top
        );
    }
    pass_if(
        passes(&whole) && passes(&first) && !v1.is_empty() && witness.is_some(),
        format!(
            "whole and first example pass both; second example fails with {} + {} witnesses",
            v1.len(),
            v2.len()
        ),
    )
}

fn sha(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn cli_round_trip() -> Outcome {
    let mut total = 0;
    let mut bad = 0;
    for k in 1..=6 {
        for x in enumerate_patterns(k).unwrap() {
            total += 1;
            if parse_pattern(&x.to_string(), Some(k)).ok() != Some(x) {
                bad += 1;
            }
        }
    }
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_mlorder"))
            .args(["hasse", "--k", "4", "--format", "dot"])
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    let stable = a.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    let (ha, hb) = (sha(&a.stdout), sha(&b.stdout));
    pass_if(
        bad == 0 && stable && ha == hb,
        format!("{total} patterns, {bad} round-trip failures; DOT sha256 {} twice", &ha[..16]),
    )
}

fn main() -> ExitCode {
    type Check = fn() -> Outcome;
    let criteria: [(&str, Check, Option<Duration>); 9] = [
        ("enumeration counts", enumeration_counts, Some(Duration::from_secs(1))),
        ("merge accounting", merge_accounting, Some(Duration::from_secs(5))),
        ("poset axioms and top/minimal elements", poset_order_axioms, Some(Duration::from_secs(30))),
        ("closure maps", closure_maps, None),
        ("sector lattice laws", lattice_laws, Some(Duration::from_secs(60))),
        ("proposition scans", proposition_scans, Some(Duration::from_secs(600))),
        ("partial monoid algebra", algebra_laws, None),
        ("ideals", ideal_checks, None),
        ("round trip and DOT stability", cli_round_trip, None),
    ];
    let mut failed = 0;
    for (n, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let ok = outcome.ok && in_time;
        if !ok {
            failed += 1;
        }
        let budget = limit.map(|l| format!(" / {}s", l.as_secs())).unwrap_or_default();
        println!(
            "criterion {} {}: {} ({:.2}s{budget}) {}",
            n + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            outcome.detail
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
