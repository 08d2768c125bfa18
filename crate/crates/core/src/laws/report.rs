//! Structured evidence produced by every check.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    WitnessFound,
}

/// One fact backing a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Evidence {
    Count { label: String, value: u64 },
    Morphism { label: String, atom: String },
    Object { label: String, summary: String },
    Note { label: String, text: String },
}

impl Evidence {
    pub fn count(label: impl Into<String>, value: impl TryInto<u64>) -> Evidence {
        Evidence::Count {
            label: label.into(),
            value: value.try_into().unwrap_or(u64::MAX),
        }
    }

    pub fn morphism(label: impl Into<String>, atom: impl ToString) -> Evidence {
        Evidence::Morphism {
            label: label.into(),
            atom: atom.to_string(),
        }
    }

    pub fn object(label: impl Into<String>, summary: impl Into<String>) -> Evidence {
        Evidence::Object {
            label: label.into(),
            summary: summary.into(),
        }
    }

    pub fn note(label: impl Into<String>, text: impl Into<String>) -> Evidence {
        Evidence::Note {
            label: label.into(),
            text: text.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LawReport {
    pub law_name: String,
    pub instance_description: String,
    pub verdict: Verdict,
    pub evidence: Vec<Evidence>,
}

impl LawReport {
    pub fn holds(law: impl Into<String>, instance: impl Into<String>, evidence: Vec<Evidence>) -> LawReport {
        LawReport {
            law_name: law.into(),
            instance_description: instance.into(),
            verdict: Verdict::Holds,
            evidence,
        }
    }

    /// A failing report; the witness comes first in the evidence list.
    pub fn fails(
        law: impl Into<String>,
        instance: impl Into<String>,
        witness: Evidence,
        mut evidence: Vec<Evidence>,
    ) -> LawReport {
        evidence.insert(0, witness);
        LawReport {
            law_name: law.into(),
            instance_description: instance.into(),
            verdict: Verdict::Fails,
            evidence,
        }
    }

    pub fn witness_found(
        law: impl Into<String>,
        instance: impl Into<String>,
        witness: Evidence,
        mut evidence: Vec<Evidence>,
    ) -> LawReport {
        evidence.insert(0, witness);
        LawReport {
            law_name: law.into(),
            instance_description: instance.into(),
            verdict: Verdict::WitnessFound,
            evidence,
        }
    }

    /// `Holds` when `failure` is `None`, otherwise `Fails` with that witness.
    pub fn from_check(
        law: impl Into<String>,
        instance: impl Into<String>,
        failure: Option<Evidence>,
        evidence: Vec<Evidence>,
    ) -> LawReport {
        match failure {
            None => LawReport::holds(law, instance, evidence),
            Some(w) => LawReport::fails(law, instance, w, evidence),
        }
    }

    /// Success for a positive law is `Holds`; for a counterexample it is
    /// `WitnessFound`.
    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Holds | Verdict::WitnessFound)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = LawReport::fails(
            "x",
            "y",
            Evidence::count("n", 3u64),
            vec![Evidence::note("why", "because")],
        );
        let back: LawReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(!r.passed());
        assert!(r.to_json().contains("\"verdict\": \"fails\""));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"law_name":"a","instance_description":"b","verdict":"holds","evidence":[],"extra":1}"#;
        assert!(serde_json::from_str::<LawReport>(text).is_err());
    }
}
