//! Audit report types and their text summary.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use smul_core::{Certificate, SubClaim, Verdict};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimRecord {
    pub claim_id: String,
    pub instance: String,
    pub verdict: Verdict,
    pub witness: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sub_claims: Vec<SubClaim>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall time of the check that produced this record, shared by every
    /// record that check produced.
    pub elapsed_ms: f64,
}

impl ClaimRecord {
    pub fn from_certificate(cert: Certificate, elapsed_ms: f64) -> Self {
        let mut witness = cert.witness;
        if cert.verdict == Verdict::Fail && witness.is_empty() {
            // a FAIL always names something; fall back to the failing statement
            witness = cert
                .sub_claims
                .iter()
                .find(|s| !s.holds)
                .map(|s| vec![s.statement.clone()])
                .unwrap_or_else(|| vec![cert.instance.clone()]);
        }
        Self {
            claim_id: cert.claim_id,
            instance: cert.instance,
            verdict: cert.verdict,
            witness,
            sub_claims: cert.sub_claims,
            notes: cert.notes,
            elapsed_ms: (elapsed_ms * 1000.0).round() / 1000.0,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl Tally {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Skip => self.skip += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skip
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: Tally,
    pub by_claim: BTreeMap<String, Tally>,
    pub rings: usize,
    pub ring_set_instances: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub seed: u64,
    pub budget: usize,
    pub depth: u32,
    pub mutate_colon: bool,
    pub summary: Summary,
    pub claims: Vec<ClaimRecord>,
}

impl AuditReport {
    pub fn new(seed: u64, budget: usize, depth: u32, mutate_colon: bool, claims: Vec<ClaimRecord>, rings: usize, instances: usize) -> Self {
        let mut total = Tally::default();
        let mut by_claim: BTreeMap<String, Tally> = BTreeMap::new();
        for c in &claims {
            total.add(c.verdict);
            by_claim.entry(c.claim_id.clone()).or_default().add(c.verdict);
        }
        Self {
            seed,
            budget,
            depth,
            mutate_colon,
            summary: Summary { total, by_claim, rings, ring_set_instances: instances },
            claims,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.total.fail > 0
    }

    pub fn records<'a>(&'a self, claim_id: &'a str) -> impl Iterator<Item = &'a ClaimRecord> + 'a {
        self.claims.iter().filter(move |c| c.claim_id == claim_id)
    }

    /// The report with timings zeroed, for comparing runs.
    pub fn without_timing(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.claims {
            c.elapsed_ms = 0.0;
        }
        r
    }

    /// One line per claim id, then every FAIL and SKIP.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (id, t) in &self.summary.by_claim {
            let _ = writeln!(out, "{id:<36} pass {:>6}  fail {:>4}  skip {:>3}", t.pass, t.fail, t.skip);
        }
        for c in self.claims.iter().filter(|c| c.verdict != Verdict::Pass) {
            let detail = if c.verdict == Verdict::Fail { c.witness.join("; ") } else { c.notes.join("; ") };
            let _ = writeln!(out, "{} {} [{}]: {detail}", c.verdict, c.claim_id, c.instance);
        }
        let t = self.summary.total;
        let _ = writeln!(
            out,
            "{} rings, {} (ring, set) instances: {} PASS, {} FAIL, {} SKIP",
            self.summary.rings, self.summary.ring_set_instances, t.pass, t.fail, t.skip
        );
        out
    }
}
