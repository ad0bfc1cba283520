//! Report assembly and deterministic serialization.
//!
//! JSON is the machine interface: serialization goes through
//! `serde_json::Value`, whose maps are ordered, so identical runs give
//! identical bytes. TSV is a flat per-index view for eyeballing grids.
//! Primes render as `{x,y}` (sorted variable names), the zero prime as
//! `(0)`, and an empty set as `-` in TSV.

use asymprime_core::prime::{AssSet, MonomialPrime};
use asymprime_core::stability::StabilizationReport;
use asymprime_core::{ChainReport, MultiIndex, RingContext};
use serde::Serialize;

pub fn prime_label(p: &MonomialPrime, ring: &RingContext) -> String {
    if p.is_zero_prime() {
        return "(0)".to_string();
    }
    let names: Vec<&str> = p.support().iter().map(|&i| ring.name(i)).collect();
    format!("{{{}}}", names.join(","))
}

pub fn ass_labels(set: &AssSet, ring: &RingContext) -> Vec<String> {
    set.iter().map(|p| prime_label(p, ring)).collect()
}

pub fn ass_tsv_cell(set: &AssSet, ring: &RingContext) -> String {
    if set.is_empty() {
        return "-".to_string();
    }
    ass_labels(set, ring).join(";")
}

fn index_vec(n: &MultiIndex) -> Vec<u32> {
    n.entries().to_vec()
}

#[derive(Serialize, Debug)]
pub struct Report {
    pub version: String,
    pub experiments: Vec<ExperimentReport>,
    /// Wall-clock duration; populated only on request so that default
    /// output stays byte-deterministic.
    pub timing_ms: Option<u64>,
}

#[derive(Serialize, Debug)]
pub struct ExperimentReport {
    pub ring: Vec<String>,
    pub family: Vec<String>,
    pub filtration: String,
    pub module: String,
    pub grid: Vec<u32>,
    pub r_window: u32,
    pub r_max: u32,
    pub validation: ValidationSummary,
    pub sequence: Vec<SequenceRow>,
    pub stabilization: StabilizationSummary,
    pub torsion: TorsionSummary,
    pub chain: ChainSummary,
    pub warnings: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct ValidationSummary {
    pub grid: Vec<u32>,
    /// Axioms verified on the finite grid only; never a proof.
    pub passed: bool,
    pub violations: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct SequenceRow {
    pub index: Vec<u32>,
    pub ass: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct StabilizationSummary {
    pub stable: bool,
    pub k: Option<Vec<u32>>,
    pub minimal_k: Vec<Vec<u32>>,
    pub stable_set: Option<Vec<String>>,
    pub monotone_from: Option<Vec<u32>>,
    pub monotonicity_violations: usize,
}

#[derive(Serialize, Debug)]
pub struct TorsionSummary {
    pub t_ideal: String,
    pub grade_positive: Vec<bool>,
    pub cancellation: CancellationSummary,
    pub artin_rees_k: Option<Vec<u32>>,
}

#[derive(Serialize, Debug)]
pub struct CancellationSummary {
    pub status: String,
    pub k: Option<Vec<u32>>,
}

#[derive(Serialize, Debug)]
pub struct SeqSummary {
    pub stable: bool,
    pub k: Option<Vec<u32>>,
    pub stable_set: Option<Vec<String>>,
}

#[derive(Serialize, Debug)]
pub struct ShiftSummary {
    pub verified: usize,
    pub inconclusive: usize,
}

#[derive(Serialize, Debug)]
pub struct ChainSummary {
    pub lprime: SeqSummary,
    pub l: SeqSummary,
    pub m: SeqSummary,
    pub implication_violations: Vec<String>,
    pub l_in_lprime: ShiftSummary,
    pub quotient_in_m: ShiftSummary,
    pub unstabilized_chains: Vec<Vec<u32>>,
    pub two_path_checked: usize,
    pub two_path_mismatches: Vec<Vec<u32>>,
}

pub fn sequence_rows(report: &StabilizationReport, ring: &RingContext) -> Vec<SequenceRow> {
    report
        .sequence
        .iter()
        .map(|(n, set)| SequenceRow { index: index_vec(n), ass: ass_labels(set, ring) })
        .collect()
}

pub fn stabilization_summary(
    report: &StabilizationReport,
    ring: &RingContext,
) -> StabilizationSummary {
    StabilizationSummary {
        stable: report.stable,
        k: report.k.as_ref().map(index_vec),
        minimal_k: report.minimal_k.iter().map(index_vec).collect(),
        stable_set: report.stable_set.as_ref().map(|s| ass_labels(s, ring)),
        monotone_from: report.monotone_from.as_ref().map(index_vec),
        monotonicity_violations: report.violations.len(),
    }
}

fn seq_summary(report: &StabilizationReport, ring: &RingContext) -> SeqSummary {
    SeqSummary {
        stable: report.stable,
        k: report.k.as_ref().map(index_vec),
        stable_set: report.stable_set.as_ref().map(|s| ass_labels(s, ring)),
    }
}

pub fn chain_summary(chain: &ChainReport, ring: &RingContext) -> ChainSummary {
    ChainSummary {
        lprime: seq_summary(&chain.lprime, ring),
        l: seq_summary(&chain.l, ring),
        m: seq_summary(&chain.m, ring),
        implication_violations: chain
            .implication_violations
            .iter()
            .map(|v| v.to_string())
            .collect(),
        l_in_lprime: ShiftSummary {
            verified: chain.l_in_lprime_shifts.verified,
            inconclusive: chain.l_in_lprime_shifts.inconclusive.len(),
        },
        quotient_in_m: ShiftSummary {
            verified: chain.quotient_in_m_shifts.verified,
            inconclusive: chain.quotient_in_m_shifts.inconclusive.len(),
        },
        unstabilized_chains: chain.unstabilized_chains.iter().map(index_vec).collect(),
        two_path_checked: chain.two_path_checked,
        two_path_mismatches: chain.two_path_mismatches.iter().map(index_vec).collect(),
    }
}

/// Canonical JSON bytes: routed through `Value` so object keys come out
/// sorted regardless of struct declaration order.
pub fn emit_json(report: &Report) -> String {
    let value = serde_json::to_value(report).expect("report serializes");
    let mut out = serde_json::to_string_pretty(&value).expect("value prints");
    out.push('\n');
    out
}

/// One row per grid index: `experiment <TAB> index <TAB> ass`.
pub fn emit_tsv(report: &Report) -> String {
    let mut out = String::from("experiment\tindex\tass\n");
    for (i, exp) in report.experiments.iter().enumerate() {
        for row in &exp.sequence {
            let index: Vec<String> = row.index.iter().map(|e| e.to_string()).collect();
            let ass = if row.ass.is_empty() { "-".to_string() } else { row.ass.join(";") };
            out.push_str(&format!("{i}\t{}\t{}\n", index.join(","), ass));
        }
    }
    out
}
