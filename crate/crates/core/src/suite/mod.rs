//! Corpus management, exhaustive enumeration and the theorem catalogue.
//!
//! [`run_suite`] evaluates every selected statement on every member in
//! parallel, one task per `(member, statement)` pair, and assembles a
//! [`VerificationReport`] in corpus order. Refutations carry the member as
//! an emitted instance document so they can be replayed standalone.

mod catalog;
pub mod corpus;
pub mod enumerate;

use std::fmt::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::io::{emit, parse_instance, IoError};

pub use catalog::{theorem, CheckError, Outcome, Theorem, CATALOG};
pub use corpus::{Corpus, CorpusMember, FIXTURES};
pub use enumerate::{enumerate_quantales, enumerate_quantales_bounded, EnumerationError, DEFAULT_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("the corpus is empty")]
    EmptyCorpus,
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("counterexample does not load: {0}")]
    Replay(#[from] IoError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Status {
    Pass,
    Refuted,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Refuted => "REFUTED",
            Status::NotApplicable => "NOT-APPLICABLE",
        }
    }
}

/// One `(statement, member)` evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub theorem: String,
    pub member: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A refutation with everything needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub theorem: String,
    pub member: String,
    pub message: String,
    /// The member as an instance document.
    pub instance: String,
    /// Recorded product factors, as instance documents.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremSummary {
    pub id: String,
    pub statement: String,
    pub known_refutable: bool,
    pub pass: usize,
    pub refuted: usize,
    pub not_applicable: usize,
}

impl TheoremSummary {
    pub fn status(&self) -> Status {
        if self.refuted > 0 {
            Status::Refuted
        } else if self.pass > 0 {
            Status::Pass
        } else {
            Status::NotApplicable
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub members: Vec<String>,
    pub theorems: Vec<TheoremSummary>,
    pub entries: Vec<Entry>,
    pub counterexamples: Vec<Counterexample>,
    /// Wall-clock time; excluded from [`VerificationReport::without_timing`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// The statements to run; `None` selects the whole catalogue.
pub fn select_theorems(ids: Option<&[String]>) -> Result<Vec<&'static Theorem>, SuiteError> {
    match ids {
        None => Ok(CATALOG.iter().collect()),
        Some(ids) => ids
            .iter()
            .map(|id| theorem(id.trim()).ok_or_else(|| SuiteError::UnknownTheorem(id.clone())))
            .collect(),
    }
}

/// Runs one statement on one member; a panicking check is a refutation.
pub fn evaluate(t: &Theorem, member: &CorpusMember) -> Outcome {
    match catch_unwind(AssertUnwindSafe(|| (t.check)(member))) {
        Ok(outcome) => outcome,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "check panicked".into());
            Err(CheckError::Refuted(format!("check panicked: {msg}")))
        }
    }
}

pub fn run_suite(corpus: &Corpus, theorems: &[&'static Theorem]) -> Result<VerificationReport, SuiteError> {
    if corpus.is_empty() {
        return Err(SuiteError::EmptyCorpus);
    }
    let start = Instant::now();
    let pairs: Vec<(usize, usize)> = (0..theorems.len())
        .flat_map(|t| (0..corpus.len()).map(move |m| (t, m)))
        .collect();
    let outcomes: Vec<Outcome> = pairs
        .par_iter()
        .map(|&(t, m)| evaluate(theorems[t], &corpus.members[m]))
        .collect();
    let mut entries = Vec::with_capacity(pairs.len());
    let mut counterexamples = Vec::new();
    let mut summaries: Vec<TheoremSummary> = theorems
        .iter()
        .map(|t| TheoremSummary {
            id: t.id.to_string(),
            statement: t.statement.to_string(),
            known_refutable: t.known_refutable,
            pass: 0,
            refuted: 0,
            not_applicable: 0,
        })
        .collect();
    for (&(t, m), outcome) in pairs.iter().zip(outcomes) {
        let member = &corpus.members[m];
        let summary = &mut summaries[t];
        let (status, detail) = match outcome {
            Ok(()) => {
                summary.pass += 1;
                (Status::Pass, None)
            }
            Err(CheckError::NotApplicable(why)) => {
                summary.not_applicable += 1;
                (Status::NotApplicable, Some(why))
            }
            Err(CheckError::Refuted(why)) => {
                summary.refuted += 1;
                counterexamples.push(Counterexample {
                    theorem: theorems[t].id.to_string(),
                    member: member.name.clone(),
                    message: why.clone(),
                    instance: emit(&member.quantale, Some(&member.name)),
                    factors: member.factors.iter().map(|f| emit(f, None)).collect(),
                });
                (Status::Refuted, Some(why))
            }
        };
        entries.push(Entry {
            theorem: theorems[t].id.to_string(),
            member: member.name.clone(),
            status,
            detail,
        });
    }
    Ok(VerificationReport {
        members: corpus.members.iter().map(|m| m.name.clone()).collect(),
        theorems: summaries,
        entries,
        counterexamples,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    })
}

/// Reloads a counterexample and reruns its statement.
pub fn replay(cx: &Counterexample) -> Result<Outcome, SuiteError> {
    let t = theorem(&cx.theorem).ok_or_else(|| SuiteError::UnknownTheorem(cx.theorem.clone()))?;
    let quantale = parse_instance(&cx.instance)?;
    let factors = cx.factors.iter().map(|f| parse_instance(f)).collect::<Result<_, _>>()?;
    let member = CorpusMember {
        name: cx.member.clone(),
        source: "replay".into(),
        quantale,
        factors,
    };
    Ok(evaluate(t, &member))
}

impl VerificationReport {
    /// Refutations of statements not flagged as known refutable.
    pub fn unexpected_refutations(&self) -> Vec<&Entry> {
        self.entries
            .iter()
            .filter(|e| e.status == Status::Refuted)
            .filter(|e| !self.theorems.iter().any(|t| t.id == e.theorem && t.known_refutable))
            .collect()
    }

    pub fn without_timing(&self) -> Self {
        VerificationReport {
            elapsed_ms: None,
            ..self.clone()
        }
    }

    pub fn entry(&self, theorem: &str, member: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.theorem == theorem && e.member == member)
    }

    pub fn summary(&self, theorem: &str) -> Option<&TheoremSummary> {
        self.theorems.iter().find(|t| t.id == theorem)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Plain text: one line per statement, refutations and non-applicable
    /// entries spelled out, then counterexample documents.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.theorems.iter().map(|t| t.id.len()).max().unwrap_or(0);
        writeln!(
            out,
            "corpus: {} members ({})",
            self.members.len(),
            self.members.join(", ")
        )
        .unwrap();
        for t in &self.theorems {
            let flag = if t.known_refutable && t.refuted > 0 {
                "  [known refutation]"
            } else {
                ""
            };
            writeln!(
                out,
                "{:<width$}  {:<14}  pass {:>3}  refuted {:>3}  n/a {:>3}{flag}",
                t.id,
                t.status().as_str(),
                t.pass,
                t.refuted,
                t.not_applicable
            )
            .unwrap();
            for e in self
                .entries
                .iter()
                .filter(|e| e.theorem == t.id && e.status != Status::Pass)
            {
                writeln!(
                    out,
                    "    {} {}: {}",
                    e.status.as_str(),
                    e.member,
                    e.detail.as_deref().unwrap_or("")
                )
                .unwrap();
            }
        }
        let total = |s: Status| self.entries.iter().filter(|e| e.status == s).count();
        writeln!(
            out,
            "total: {} pass, {} refuted ({} unexpected), {} not applicable",
            total(Status::Pass),
            total(Status::Refuted),
            self.unexpected_refutations().len(),
            total(Status::NotApplicable)
        )
        .unwrap();
        for cx in &self.counterexamples {
            writeln!(out, "\ncounterexample {} on {}: {}", cx.theorem, cx.member, cx.message).unwrap();
            for line in cx.instance.lines() {
                writeln!(out, "  {line}").unwrap();
            }
        }
        if let Some(ms) = self.elapsed_ms {
            writeln!(out, "\nelapsed: {ms} ms").unwrap();
        }
        out
    }
}
