//! Report envelope and per-command result payloads.
//!
//! Every command prints exactly one JSON document on standard output. Field
//! order is fixed by the struct declarations and all maps are sorted, so the
//! output is deterministic byte for byte for identical inputs.

use serde::Serialize;
use serde_json::Value;

use redop::io::{OperatorReport, RuleFile, TermPair};

/// Wrapper printed by every command.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub command: String,
    pub inputs_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<usize>,
    pub result: Value,
    pub warnings: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct OperatorResult {
    pub operator: OperatorReport,
}

#[derive(Debug, Serialize)]
pub struct LeqResult {
    pub leq: bool,
}

#[derive(Debug, Serialize)]
pub struct ObstructionsResult {
    pub red_family: Vec<String>,
    pub red_meet: Vec<String>,
    pub obstructions: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ConfluentResult {
    pub confluent: bool,
    pub obstructions: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct TraceStep {
    pub operator: usize,
    pub vector: Vec<TermPair>,
}

#[derive(Debug, Serialize)]
pub struct NormalFormResult {
    pub strategy: String,
    pub normal_form: Vec<TermPair>,
    pub trace: TraceReport,
}

#[derive(Debug, Serialize)]
pub struct TraceReport {
    pub start: Vec<TermPair>,
    pub steps: Vec<TraceStep>,
}

#[derive(Debug, Serialize)]
pub struct BraidedResult {
    pub confluent: bool,
    pub steps: Vec<usize>,
    pub left_first: Vec<Vec<TermPair>>,
    pub right_first: Vec<Vec<TermPair>>,
}

/// Full completion report, emitted by both `complement` and `complete`.
#[derive(Debug, Serialize)]
pub struct CompleteResult {
    pub family: Vec<OperatorReport>,
    pub meet: OperatorReport,
    pub obstructions: Vec<String>,
    pub complement: OperatorReport,
    pub completed_family: Vec<OperatorReport>,
    pub confluent: bool,
}

#[derive(Debug, Serialize)]
pub struct PresCheckResult {
    pub degree: usize,
    pub family: String,
    pub family_size: usize,
    pub nred_meet: Vec<String>,
    pub obstructions: Vec<String>,
    pub confluent: bool,
}

#[derive(Debug, Serialize)]
pub struct PresCompleteResult {
    pub degree: usize,
    pub rounds: usize,
    pub rules: Vec<RuleFile>,
    pub confluent: bool,
}

#[derive(Debug, Serialize)]
pub struct PresNfResult {
    pub degree: usize,
    pub normal_form: Vec<TermPair>,
    pub steps: usize,
}

#[derive(Debug, Serialize)]
pub struct GeneralOperatorReport {
    pub matrix: Vec<Vec<String>>,
    pub nred: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct CompletableResult {
    pub completable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meet: Option<GeneralOperatorReport>,
    pub assumption: String,
}

#[derive(Debug, Serialize)]
pub struct GeneralConfluentResult {
    pub confluent: bool,
    pub church_rosser: bool,
    pub normalising: bool,
    pub relation_confluent: bool,
    pub assumption: String,
}

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub valid: bool,
    pub violations: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ErrorEnvelope {
    pub command: String,
    pub inputs_digest: String,
    pub error: String,
}
