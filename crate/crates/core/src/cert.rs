//! Certificates: a verdict plus the concrete elements that justify it.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
        })
    }
}

/// One checked statement inside a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubClaim {
    pub statement: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub claim_id: String,
    pub instance: String,
    pub verdict: Verdict,
    /// For a FAIL, the witness of the first failing sub-claim.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sub_claims: Vec<SubClaim>,
    /// Analytic steps that bounded evidence cannot cover.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn new(claim_id: impl Into<String>, instance: impl Into<String>) -> Self {
        Self {
            claim_id: claim_id.into(),
            instance: instance.into(),
            verdict: Verdict::Pass,
            witness: Vec::new(),
            sub_claims: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn skipped(claim_id: impl Into<String>, instance: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut c = Self::new(claim_id, instance);
        c.verdict = Verdict::Skip;
        c.notes.push(reason.into());
        c
    }

    /// Records a sub-claim; the first failing one fixes the verdict and witness.
    pub fn check(&mut self, statement: impl Into<String>, holds: bool, witness: Vec<String>) -> &mut Self {
        if !holds && self.verdict != Verdict::Fail {
            self.verdict = Verdict::Fail;
            self.witness = witness.clone();
        }
        self.sub_claims.push(SubClaim { statement: statement.into(), holds, witness });
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}
