//! The ten acceptance criteria, one PASS/FAIL line each.
//!
//! Algebra is exact, so every comparison is equality. The only tolerances
//! are the two wall-clock limits below.

use std::collections::BTreeSet;
use std::process::Command as Proc;
use std::time::{Duration, Instant};

use serde_json::json;
use smul_audit::claims::{run_audit, AuditConfig};
use smul_audit::query::{run_query, Command, Query};
use smul_audit::report::AuditReport;
use smul_core::Verdict;

const MMC_TIME_LIMIT: Duration = Duration::from_secs(60);
const REPLAY_TIME_LIMIT: Duration = Duration::from_secs(10);
const REPLAY_DEPTH: u32 = 16;

fn config(only: &[&str]) -> AuditConfig {
    AuditConfig { only: only.iter().map(|s| s.to_string()).collect(), ..AuditConfig::default() }
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(problems: Vec<String>, summary: String) -> Outcome {
    if problems.is_empty() {
        Outcome { ok: true, detail: summary }
    } else {
        Outcome { ok: false, detail: problems.join("; ") }
    }
}

/// Every listed claim has at least `min` records and none of them fail.
fn all_pass(report: &AuditReport, ids: &[&str], min: usize, problems: &mut Vec<String>) -> Vec<usize> {
    ids.iter()
        .map(|id| {
            let t = report.summary.by_claim.get(*id).copied().unwrap_or_default();
            if t.fail > 0 {
                let first = report.records(id).find(|r| r.verdict == Verdict::Fail).unwrap();
                problems.push(format!("{id}: {} FAIL, first at [{}] {:?}", t.fail, first.instance, first.witness));
            }
            if t.pass < min {
                problems.push(format!("{id}: {} PASS records, need {min}", t.pass));
            }
            t.pass
        })
        .collect()
}

fn distinct_constructions(report: &AuditReport, id: &str) -> usize {
    report.records(id).map(|r| r.instance.split(" | ").next().unwrap_or_default().to_string()).collect::<BTreeSet<_>>().len()
}

// --- independent oracles over Zn x Zm, plain integer arithmetic ---

type Pair = (u64, u64);

/// Ideals of Zn x Zm are dZn x eZm for divisors d | n, e | m.
fn product_ideals(n: u64, m: u64) -> Vec<BTreeSet<Pair>> {
    let divs = |k: u64| (1..=k).filter(move |d| k % d == 0);
    let mut out = Vec::new();
    for d in divs(n) {
        for e in divs(m) {
            let a: Vec<u64> = (0..n).filter(|x| x % d == 0).collect();
            let b: Vec<u64> = (0..m).filter(|y| y % e == 0).collect();
            out.push(a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).collect());
        }
    }
    out
}

fn s_prime_by_definition(p: &BTreeSet<Pair>, s: &[Pair], n: u64, m: u64) -> bool {
    let mul = |a: Pair, b: Pair| ((a.0 * b.0) % n, (a.1 * b.1) % m);
    if s.iter().any(|x| p.contains(x)) {
        return false;
    }
    let all: Vec<Pair> = (0..n).flat_map(|x| (0..m).map(move |y| (x, y))).collect();
    s.iter().any(|&t| {
        all.iter().all(|&a| all.iter().all(|&b| !p.contains(&mul(a, b)) || p.contains(&mul(t, a)) || p.contains(&mul(t, b))))
    })
}

fn s_minimal_oracle(n: u64, m: u64, s: &[Pair]) -> Vec<BTreeSet<Pair>> {
    let sp: Vec<_> = product_ideals(n, m).into_iter().filter(|p| s_prime_by_definition(p, s, n, m)).collect();
    sp.iter().filter(|p| !sp.iter().any(|q| q != *p && q.is_subset(p))).cloned().collect()
}

/// Ideals of Zn are dZn; the maximal ones among those containing `i` that
/// avoid `s`.
fn krull_oracle(n: u64, s: &[u64], i: &BTreeSet<u64>) -> Vec<BTreeSet<u64>> {
    let omega: Vec<BTreeSet<u64>> = (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| (0..n).filter(|x| x % d == 0).collect::<BTreeSet<u64>>())
        .filter(|j| i.is_subset(j) && !s.iter().any(|x| j.contains(x)))
        .collect();
    omega.iter().filter(|j| !omega.iter().any(|k| k != *j && j.is_subset(k))).cloned().collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let report = run_audit(&config(&["prop.mmc"]));
    let elapsed = start.elapsed();
    let mut problems = Vec::new();
    let n = all_pass(&report, &["prop.mmc"], 200, &mut problems)[0];
    if report.summary.rings < 30 {
        problems.push(format!("{} rings, need 30", report.summary.rings));
    }
    if report.summary.ring_set_instances < 200 {
        problems.push(format!("{} instances, need 200", report.summary.ring_set_instances));
    }
    if elapsed > MMC_TIME_LIMIT {
        problems.push(format!("took {elapsed:.1?}, limit {MMC_TIME_LIMIT:?}"));
    }
    outcome(problems, format!("{} rings, {n} instances agree, {elapsed:.1?}", report.summary.rings))
}

fn criterion_2(full: &AuditReport) -> Outcome {
    let mut problems = Vec::new();
    let n = all_pass(full, &["thm.localization-intersection", "prop.colon", "prop.contraction"], 1, &mut problems);
    outcome(problems, format!("intersection {}, colon {}, contraction {}", n[0], n[1], n[2]))
}

fn criterion_3(full: &AuditReport) -> Outcome {
    let mut problems = Vec::new();
    let n = all_pass(full, &["thm.saturation", "prop.jacobson", "prop.indecomposable"], 1, &mut problems);
    outcome(problems, format!("saturation {}, jacobson {}, indecomposable {}", n[0], n[1], n[2]))
}

fn criterion_4(full: &AuditReport) -> Outcome {
    let mut problems = Vec::new();
    let ids = ["thm.trivialextension", "prop.amalgamated", "thm.car", "cor.factorr", "prop.homomorphism"];
    all_pass(full, &ids, 1, &mut problems);
    let te = distinct_constructions(full, "thm.trivialextension");
    let am = distinct_constructions(full, "prop.amalgamated");
    for (id, k) in [("trivial extensions", te), ("amalgamations", am)] {
        if k < 50 {
            problems.push(format!("{k} {id}, need 50"));
        }
    }
    outcome(problems, format!("{te} trivial extensions, {am} amalgamations, products/quotients/images clean"))
}

fn criterion_5(full: &AuditReport) -> Outcome {
    let mut problems = Vec::new();
    let n = all_pass(full, &["sprime.modes", "thm.strongly-prime", "cor.strongly-zero-dimensional"], 1, &mut problems);
    if n[2] != full.summary.rings {
        problems.push(format!("zero-dimensional checked on {} of {} rings", n[2], full.summary.rings));
    }
    outcome(problems, format!("modes {}, strongly prime {} rings, zero-dimensional {} rings", n[0], n[1], n[2]))
}

fn criterion_6(full: &AuditReport) -> Outcome {
    let mut problems = Vec::new();
    let n = all_pass(full, &["alg.1"], 20, &mut problems)[0];
    if let Some(r) = full.records("alg.1").find(|r| r.sub_claims.iter().all(|s| s.witness.is_empty())) {
        problems.push(format!("alg.1 [{}] certifies nothing with a witness", r.instance));
    }
    let q = Query { command: Command::SMinimal, ring: "Zn 4 x Zn 9".into(), set: "<(1,0)>".into(), ideal: None, budget: 64 };
    let got = run_query(&q).expect("query runs");
    let oracle = s_minimal_oracle(4, 9, &[(1, 1), (1, 0)]);
    let expected: BTreeSet<Pair> = [0, 2].iter().map(|&x| (x, 0)).collect();
    if oracle != vec![expected] {
        problems.push(format!("oracle disagrees with the expected 2Z4 x 0: {oracle:?}"));
    }
    let result = &got["result"];
    if result.as_array().map(Vec::len) != Some(1) || result[0]["ideal"] != json!("2Z4 x 0") || result[0]["prime"] != json!(false) {
        problems.push(format!("Zn 4 x Zn 9: got {result}"));
    }
    outcome(problems, format!("{n} instances; Zn 4 x Zn 9 gives the single ideal 2Z4 x 0, witness {}", result[0]["witness"]))
}

fn criterion_7(full: &AuditReport) -> Outcome {
    let mut problems = Vec::new();
    let n = all_pass(full, &["thm.strong-krull"], 1, &mut problems)[0];
    let q = Query { command: Command::Krull, ring: "Zn 6".into(), set: "<3>".into(), ideal: None, budget: 64 };
    let got = run_query(&q).expect("query runs");
    let oracle = krull_oracle(6, &[1, 3], &BTreeSet::from([0]));
    let want: Vec<String> = oracle[0].iter().map(u64::to_string).collect();
    if oracle.len() != 1 || want != ["0", "2", "4"] {
        problems.push(format!("oracle gives {oracle:?}"));
    }
    if got["found_elements"] != json!(want) || got["is_maximal_ideal"] != json!(true) {
        problems.push(format!("Zn 6: got {}", got["found_elements"]));
    }
    outcome(problems, format!("{n} instances; Zn 6 with {{1,3}} gives {}", got["found_elements"]))
}

fn criterion_8() -> Outcome {
    let ids = ["ex.counterexample1", "ex.counterexample2", "ex.counterexample3", "ex.counterexample4", "ex.colon"];
    let start = Instant::now();
    let report = run_audit(&AuditConfig { depth: REPLAY_DEPTH, ..config(&ids) });
    let elapsed = start.elapsed();
    let mut problems = Vec::new();
    all_pass(&report, &ids, 1, &mut problems);
    let statements: Vec<&str> = report.claims.iter().flat_map(|c| c.sub_claims.iter().map(|s| s.statement.as_str())).collect();
    // the identities themselves, at the top of the bounded range
    let top = REPLAY_DEPTH - 2;
    for needle in [
        format!("(2^{}) * X{} = 0", top + 2, top + 2),
        format!("I_{top} = {}Z is S-prime via (I_{top} : 3^{top}) = 2Z", 2 * 3u64.pow(top)),
        "{0} is not S-prime: (1,0)(0,1) = (0,0)".to_string(),
    ] {
        if !statements.contains(&needle.as_str()) {
            problems.push(format!("missing identity '{needle}'"));
        }
    }
    if elapsed > REPLAY_TIME_LIMIT {
        problems.push(format!("took {elapsed:.1?}, limit {REPLAY_TIME_LIMIT:?}"));
    }
    outcome(problems, format!("5 replays at depth {REPLAY_DEPTH}, {} sub-claims, {elapsed:.1?}", statements.len()))
}

fn criterion_9(full: &AuditReport) -> Outcome {
    let mut problems = Vec::new();
    all_pass(full, &["cxlab.oracle-gate"], 1, &mut problems);
    let notes = full.records("cxlab.oracle-gate").flat_map(|r| r.notes.clone()).collect::<Vec<_>>().join("; ");
    outcome(problems, notes)
}

fn criterion_10(full: &AuditReport) -> Outcome {
    let mut problems = Vec::new();
    for id in ["ex.c01-times-r", "ex.krull-kxy", "ex.laurent-converse", "ex.zp-cap-zq"] {
        match full.records(id).next() {
            Some(r) if r.verdict == Verdict::Skip && r.notes.iter().any(|n| n.contains("docs/out-of-scope.md")) => {}
            other => problems.push(format!("{id}: {:?}", other.map(|r| r.verdict))),
        }
    }
    let status = Proc::new(env!("CARGO_BIN_EXE_smul")).arg("audit").output().expect("smul runs");
    if status.status.code() != Some(0) {
        problems.push(format!("smul audit exited {:?}", status.status.code()));
    }
    let text = String::from_utf8_lossy(&status.stdout);
    if text.lines().filter(|l| l.starts_with("SKIP ")).count() != 4 {
        problems.push("smul audit does not list the four SKIPs".into());
    }
    outcome(problems, format!("4 SKIPs with a documentation pointer, exit {:?}", status.status.code()))
}

// runs without the libtest harness so the criterion lines always reach stdout
fn main() -> std::process::ExitCode {
    let full = run_audit(&AuditConfig::default());
    let results = [
        ("1 strongly multiplicative tests agree", criterion_1()),
        ("2 localization identities", criterion_2(&full)),
        ("3 structure theorems", criterion_3(&full)),
        ("4 transport", criterion_4(&full)),
        ("5 S-prime machinery", criterion_5(&full)),
        ("6 S-minimal prime generation", criterion_6(&full)),
        ("7 strong Krull separation", criterion_7(&full)),
        ("8 counterexample replays", criterion_8()),
        ("9 polynomial oracle gate", criterion_9(&full)),
        ("10 out-of-scope SKIPs", criterion_10(&full)),
    ];
    for (name, o) in &results {
        println!("{} criterion {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    let failed: Vec<&str> = results.iter().filter(|(_, o)| !o.ok).map(|(n, _)| *n).collect();
    if failed.is_empty() {
        std::process::ExitCode::SUCCESS
    } else {
        eprintln!("failed criteria: {failed:?}");
        std::process::ExitCode::FAILURE
    }
}
