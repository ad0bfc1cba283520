//! Front end for the asymprime workbench: a small text DSL for declaring
//! rings, ideals, filtrations and analyses, and a runner that emits
//! deterministic JSON or TSV reports.

pub mod ast;
pub mod compile;
pub mod lexer;
pub mod parser;
pub mod report;
pub mod runner;

pub use compile::{compile, CompileError, Overrides, SpecError};
pub use lexer::SourceError;
pub use parser::parse;
pub use report::{emit_json, emit_tsv, Report};
pub use runner::{run_text, RunError, RunOptions};
