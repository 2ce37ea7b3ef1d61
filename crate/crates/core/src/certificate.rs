//! Machine-checkable certificates.

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    MainHypotheses,
    Independence,
    TStar,
    MembershipHint,
    Irreducibility,
    OrderTwo,
}

impl CertificateKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertificateKind::MainHypotheses => "MainHypotheses",
            CertificateKind::Independence => "Independence",
            CertificateKind::TStar => "TStar",
            CertificateKind::MembershipHint => "MembershipHint",
            CertificateKind::Irreducibility => "Irreducibility",
            CertificateKind::OrderTwo => "OrderTwo",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Undecidable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Undecidable => "undecidable",
        }
    }

    /// Process exit code: 0 pass, 1 fail, 2 undecidable.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Undecidable => 2,
        }
    }

    /// Pass only if both pass; otherwise fail dominates undecidable.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Undecidable, _) | (_, Verdict::Undecidable) => Verdict::Undecidable,
            _ => Verdict::Pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub verdict: Verdict,
    pub evidence: Value,
    pub citations: Vec<String>,
}

impl Certificate {
    pub fn new(kind: CertificateKind, verdict: Verdict, evidence: Value, citations: &[&str]) -> Self {
        Certificate { kind, verdict, evidence, citations: citations.iter().map(|s| s.to_string()).collect() }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.as_str(),
            "verdict": self.verdict.as_str(),
            "evidence": self.evidence,
            "citations": self.citations,
        })
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}
