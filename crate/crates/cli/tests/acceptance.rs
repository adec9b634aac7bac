//! Acceptance suite: one pass/fail line per criterion. Runs without the
//! libtest harness so the lines always reach the terminal.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::build;
use common::checks::*;
use nps_core::census::{rank_two_disagrees, rank_two_report, verify_theorems, Status, SweepBounds};
use nps_core::family::{expected_nps, theorem_catalog, ExpectationKind, FamilySpec};
use nps_core::lattice::counts;

fn nps(text: &str) -> usize {
    counts(&build(text)).unwrap().nps
}

/// Computed value, closed form, and the catalog entry must all agree.
fn exact(text: &str, value: u64) {
    let computed = nps(text);
    assert_eq!(computed as u64, value, "{text}: enumerated {computed}, closed form {value}");
    let spec: FamilySpec = text.parse().unwrap();
    let entry = expected_nps(&spec).unwrap();
    assert_eq!(entry.kind, ExpectationKind::Exact, "{text}");
    assert_eq!(entry.value.as_integer(), Some(value as i128), "{text}: catalog says {}", entry.value);
}

fn criterion_1() -> String {
    let mut rows = 0;
    let mut check = |text: String, value: u64| {
        exact(&text, value);
        rows += 1;
    };
    for n in 3..=6u32 {
        check(format!("D({})", 1u64 << n), (1 << n) - 1);
        check(format!("Q({})", 1u64 << n), (1 << (n - 1)) - 1);
    }
    for n in 4..=6u32 {
        check(format!("S({})", 1u64 << n), 3 * (1 << (n - 2)) - 1);
    }
    let m = |n: u64, p: u64| p * (n - 1) + 1;
    for n in 4..=7 {
        check(format!("M({n},2)"), m(n, 2));
    }
    for n in 3..=5 {
        check(format!("M({n},3)"), m(n, 3));
    }
    check("M(3,5)".into(), m(3, 5));
    for p in [3u64, 5] {
        check(format!("M({p})"), p * p + 2 * p + 2);
    }
    for (p, mm) in [(3u64, 1u32), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1)] {
        let q = p.pow(mm);
        for n in 1..=3 {
            check(format!("G({n},{q})"), p * (q - 1) / (p - 1));
        }
    }
    for p in [7u64, 13] {
        for n in 1..=2 {
            check(format!("F({n},{p})"), p);
        }
    }
    for (n, value) in [(1, 7), (2, 10), (3, 13)] {
        check(format!("A({n})"), value);
    }
    format!("{rows} closed forms")
}

fn criterion_2() -> String {
    let cases = [
        ("G(r=2;p=2,n=2;q=5,m=1)", 10),
        ("G(r=3;p=5,n=1;q=11,m=1)", 11),
        ("G(r=-1;p=2,n=1;q=3,m=2)", 12),
        ("G(r=2;p=3,n=1;q=7,m=1)", 7),
    ];
    for (text, value) in cases {
        exact(text, value);
    }
    format!("{} metacyclic instances", cases.len())
}

fn criterion_3() -> String {
    assert_eq!(nps("B2(2,2)"), 12);
    for (n, p) in [(2u64, 2u64), (2, 3), (3, 2)] {
        assert!(p.pow(n as u32 + 2) <= 600);
        exact(&format!("B1({n},{p})"), p * p * (2 * n - 1) + p * (n + 1) + 2);
        exact(&format!("B2({n},{p})"), p * p * (n - 1) + p * (n + 1) + 2);
    }
    "B2(2,2) = 12 and six B1/B2 instances".into()
}

fn criterion_4() -> String {
    assert_eq!(nps("G(1,3)xC(3)"), 10);
    assert!(nps("G(1,3)xC(3,3)") > 10);
    assert_eq!(nps("Q(8)xC(2)"), 16);
    assert!(nps("Q(8)xC(2,2)") > 16);
    assert_eq!(nps("SL(2,3)"), 11);
    assert_eq!(nps("Sym(4)"), 26);
    assert_eq!(nps("C3:Q8"), 13);
    for p in [3u64, 5, 7] {
        assert_eq!(nps(&format!("D({})xC(2)", 2 * p)) as u64, 3 * p + 4, "p = {p}");
    }
    let s_c3 = counts(&build("C(3)")).unwrap().s as u64;
    for p in [5u64, 7] {
        assert_eq!(nps(&format!("X(1,{p})")) as u64, (p + 3) * s_c3 - 6, "p = {p}");
    }
    assert_eq!(nps("X(2,3)"), 48);
    assert_eq!(nps("Hol(7)"), 21);
    let (_, c7c6) = common::control_corpus().into_iter().find(|(n, _)| n == "C7:C6").unwrap();
    assert_eq!(counts(&c7c6).unwrap().nps, 21);
    "16 named values".into()
}

fn criterion_5() -> String {
    let start = Instant::now();
    let report = verify_theorems(0..=13, SweepBounds::default(), &[]).unwrap();
    let elapsed = start.elapsed();
    for row in &report.soundness {
        assert_eq!(row.status, Status::Pass, "k = {}: {} has nps {:?}", row.k, row.group, row.computed);
    }
    for row in &report.distinct {
        assert!(!row.isomorphic, "k = {}: {} and {} are isomorphic", row.k, row.left, row.right);
    }
    for k in 0..=13 {
        let members = theorem_catalog(k).len();
        let rows = report.soundness.iter().filter(|r| r.k == k).count();
        assert!(rows >= members, "k = {k}: {rows} instances for {members} members");
    }
    assert!(elapsed < Duration::from_secs(180), "took {elapsed:?}");
    format!("{} instances, {} distinct pairs", report.soundness.len(), report.distinct.len())
}

fn criterion_6() -> String {
    let corpus = counted_corpus(600);
    assert!(corpus.len() >= 60, "corpus has {} groups", corpus.len());
    let uniq = cyclic_power_uniqueness(&corpus);
    let bound = cyclic_nonpower_lower_bound(&corpus);
    let pairs = coprime_products(&corpus, 600);
    assert!(pairs >= 20, "only {pairs} coprime pairs");
    let quotients = quotient_monotonicity(&corpus, 128);
    let gcds = power_gcd(&corpus, 100);
    format!(
        "{} groups: {uniq} cyclic power subgroups, {bound} Sylow bounds, {pairs} coprime pairs, {quotients} quotients, {gcds} exponents",
        corpus.len()
    )
}

fn criterion_7() -> String {
    let n = presentation_round_trip(300);
    assert!(n > 0);
    format!("{n} presented instances")
}

fn criterion_8() -> String {
    let rows = rank_two_report(SweepBounds::default()).unwrap();
    for p in [2u64, 3, 5] {
        for b in 1..=6u32 {
            for a in 1..=b {
                let label = FamilySpec::Abelian(vec![p.pow(a), p.pow(b)]).to_string();
                let within = p.pow(a + b) <= 600;
                assert_eq!(rows.iter().any(|r| r.label == label), within, "{label}");
            }
        }
    }
    for r in &rows {
        assert_eq!(r.status, Status::UnderReview, "{}", r.label);
        assert_eq!(r.computed, Some(nps(&r.label)), "{}", r.label);
    }
    let c2c4 = rows.iter().find(|r| r.label == "C(2,4)").unwrap();
    assert_eq!(c2c4.computed, Some(5));
    assert!(rank_two_disagrees(c2c4));
    let flagged = rows.iter().filter(|r| rank_two_disagrees(r)).count();

    let out = Command::new(env!("CARGO_BIN_EXE_nps")).args(["census", "--rank-two"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"C(2,4)\",8,10,5,true,under_review"), "{text}");
    format!("{} rows, {flagged} flagged, exit 0", rows.len())
}

type Criterion = (&'static str, fn() -> String);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("closed forms for the 2-group, metacyclic and A_n families", criterion_1),
        ("metacyclic groups with p != q", criterion_2),
        ("B1 and B2 families", criterion_3),
        ("direct products and named groups", criterion_4),
        ("classification buckets 0..13", criterion_5),
        ("structural properties on the construction corpus", criterion_6),
        ("presentation round trip up to order 300", criterion_7),
        ("rank-two abelian closed form against enumeration", criterion_8),
    ];
    panic::set_hook(Box::new(|_| {}));
    let total = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match panic::catch_unwind(AssertUnwindSafe(run)) {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail} ({:.1?})", i + 1, start.elapsed()),
            Err(payload) => {
                failed += 1;
                let msg = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {} FAIL  {name}: {}", i + 1, msg.replace('\n', " "));
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1?}",
        criteria.len() - failed,
        criteria.len(),
        total.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
