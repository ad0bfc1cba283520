//! Orchestration: parse, compile, scan, assemble the report.

use crate::compile::{compile, CompileError, CompiledExperiment, Overrides, SpecError};
use crate::lexer::SourceError;
use crate::parser::parse;
use crate::report::{
    chain_summary, sequence_rows, stabilization_summary, CancellationSummary, ExperimentReport,
    Report, TorsionSummary, ValidationSummary,
};
use asymprime_core::{CancellationOutcome, Error as CoreError, Experiment};
use std::fmt;
use std::time::Instant;

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub grid: Option<Vec<u32>>,
    pub r_window: Option<u32>,
    pub r_max: Option<u32>,
    pub timing: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RunError {
    /// Lexical, syntactic, or binding failure (exit code 1).
    Source(SourceError),
    /// Spec-level rejection: degenerate data or failed axioms (exit code 2).
    Spec(SpecError),
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Source(e) => write!(f, "parse error: {e}"),
            RunError::Spec(e) => write!(f, "spec validation failed: {e}"),
        }
    }
}

impl std::error::Error for RunError {}

impl From<CompileError> for RunError {
    fn from(e: CompileError) -> Self {
        match e {
            CompileError::Source(e) => RunError::Source(e),
            CompileError::Spec(e) => RunError::Spec(e),
        }
    }
}

fn core_spec_error(e: CoreError) -> RunError {
    RunError::Spec(SpecError::new(e.to_string()))
}

pub fn run_text(text: &str, opts: &RunOptions) -> Result<Report, RunError> {
    let program = parse(text).map_err(RunError::Source)?;
    let overrides = Overrides {
        grid: opts.grid.clone(),
        r_window: opts.r_window,
        r_max: opts.r_max,
    };
    let compiled = compile(&program, &overrides)?;

    let start = Instant::now();
    let mut experiments = Vec::with_capacity(compiled.len());
    for item in compiled {
        experiments.push(run_experiment(item)?);
    }
    let timing_ms = opts.timing.then(|| start.elapsed().as_millis() as u64);

    Ok(Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        experiments,
        timing_ms,
    })
}

fn run_experiment(item: CompiledExperiment) -> Result<ExperimentReport, RunError> {
    let CompiledExperiment { spec, filtration_text, family_names } = item;
    let ring = spec.ring.clone();
    let grid = spec.grid.clone();
    let r_window = spec.r_window;
    let r_max = spec.r_max;
    let family_rendered: Vec<String> = family_names
        .iter()
        .zip(spec.family.ideals())
        .map(|(name, ideal)| format!("{name} = {}", ring.ideal_string(ideal)))
        .collect();
    let module_rendered = ring.ideal_string(spec.base.ideal());

    let exp = Experiment::new(spec);

    let validation = exp.validate().map_err(core_spec_error)?;
    if !validation.passed() {
        let detail: Vec<String> = validation
            .violations
            .iter()
            .map(|v| {
                let at: Vec<String> = v.at.iter().map(|n| n.to_string()).collect();
                format!("axiom {} fails at {}", v.axiom, at.join(", "))
            })
            .collect();
        return Err(RunError::Spec(SpecError::new(detail.join("; "))));
    }
    let validation = ValidationSummary {
        grid: grid.entries().to_vec(),
        passed: true,
        violations: vec![],
    };

    let sequence_report = exp.ass_sequence().map_err(core_spec_error)?;
    let chain = exp.check_chain().map_err(core_spec_error)?;

    let cancellation = match exp.cancellation_index() {
        CancellationOutcome::Inapplicable => {
            CancellationSummary { status: "inapplicable".into(), k: None }
        }
        CancellationOutcome::NotFound => {
            CancellationSummary { status: "not_found".into(), k: None }
        }
        CancellationOutcome::Found { k } => CancellationSummary {
            status: "found".into(),
            k: Some(k.entries().to_vec()),
        },
    };
    let torsion = TorsionSummary {
        t_ideal: ring.ideal_string(exp.torsion_ideal()),
        grade_positive: exp.grade_positive_axes(),
        cancellation,
        artin_rees_k: exp.artin_rees_index().map(|k| k.entries().to_vec()),
    };

    let mut warnings = Vec::new();
    for n in &chain.unstabilized_chains {
        warnings.push(format!(
            "L-chain at {n} reached r_max = {r_max} without {r_window} consecutive equalities"
        ));
    }
    let inconclusive =
        chain.l_in_lprime_shifts.inconclusive.len() + chain.quotient_in_m_shifts.inconclusive.len();
    if inconclusive > 0 {
        warnings.push(format!(
            "{inconclusive} shifted containment(s) could not be confirmed inside the grid"
        ));
    }
    for n in &chain.two_path_mismatches {
        warnings.push(format!(
            "L-chain value at {n} disagrees with the torsion closed form; \
             the chain window likely stopped early"
        ));
    }

    Ok(ExperimentReport {
        ring: ring.names().to_vec(),
        family: family_rendered,
        filtration: filtration_text,
        module: module_rendered,
        grid: grid.entries().to_vec(),
        r_window,
        r_max,
        validation,
        sequence: sequence_rows(&sequence_report, &ring),
        stabilization: stabilization_summary(&sequence_report, &ring),
        torsion,
        chain: chain_summary(&chain, &ring),
        warnings,
    })
}
