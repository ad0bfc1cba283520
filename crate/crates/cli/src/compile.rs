//! Binding resolution and lowering of a parsed program into experiment
//! specs.
//!
//! Name errors (unbound or duplicate identifiers, unknown variables, bad
//! grid arity) are source errors tied to positions. Value-level problems
//! (degenerate ideals, oversized rings, dimension clashes) are spec errors.

use crate::ast::{FiltExpr, GenList, SourceProgram, Span, Stmt};
use crate::lexer::SourceError;
use asymprime_core::{
    BaseModule, ExperimentSpec, FiltrationSpec, IdealFamily, Monomial, MonomialIdeal, MultiIndex,
    RingContext,
};
use std::collections::BTreeMap;
use std::fmt;

/// The ring size the front end accepts; the associated-prime scan is a
/// `2^v` subset loop, so larger rings are rejected up front.
pub const MAX_RING_VARS: usize = 10;

/// A semantic (value-level) rejection of an otherwise well-formed program.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecError {
    pub message: String,
}

impl SpecError {
    pub fn new(message: impl Into<String>) -> Self {
        SpecError { message: message.into() }
    }
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for SpecError {}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CompileError {
    Source(SourceError),
    Spec(SpecError),
}

impl fmt::Display for CompileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompileError::Source(e) => write!(f, "{e}"),
            CompileError::Spec(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CompileError {}

impl From<SourceError> for CompileError {
    fn from(e: SourceError) -> Self {
        CompileError::Source(e)
    }
}

impl From<SpecError> for CompileError {
    fn from(e: SpecError) -> Self {
        CompileError::Spec(e)
    }
}

fn spec_err<T>(message: impl Into<String>) -> Result<T, CompileError> {
    Err(CompileError::Spec(SpecError::new(message)))
}

/// Overrides applied at lowering time (CLI flags).
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub grid: Option<Vec<u32>>,
    pub r_window: Option<u32>,
    pub r_max: Option<u32>,
}

/// One lowered `analyze` directive plus its textual echo.
#[derive(Debug)]
pub struct CompiledExperiment {
    pub spec: ExperimentSpec,
    pub filtration_text: String,
    pub family_names: Vec<String>,
}

pub fn compile(
    program: &SourceProgram,
    overrides: &Overrides,
) -> Result<Vec<CompiledExperiment>, CompileError> {
    let ring = RingContext::new(program.ring.clone())
        .map_err(|_| SourceError::new(program.ring_span, "ring variables must be distinct"))?;
    if ring.vars() > MAX_RING_VARS {
        return spec_err(format!(
            "ring has {} variables; associated-prime scans support at most {MAX_RING_VARS}",
            ring.vars()
        ));
    }
    let var_index: BTreeMap<&str, usize> =
        program.ring.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();

    let mut ideals: BTreeMap<String, MonomialIdeal> = BTreeMap::new();
    let mut filtrations: BTreeMap<String, FiltExpr> = BTreeMap::new();
    let mut module: Option<MonomialIdeal> = None;
    let mut experiments = Vec::new();

    for stmt in &program.stmts {
        match stmt {
            Stmt::Ideal { name, gens, span } => {
                if ideals.contains_key(name) || filtrations.contains_key(name) {
                    return Err(SourceError::new(*span, format!("`{name}` is already bound")).into());
                }
                if var_index.contains_key(name.as_str()) {
                    return Err(SourceError::new(
                        *span,
                        format!("`{name}` shadows a ring variable"),
                    )
                    .into());
                }
                ideals.insert(name.clone(), lower_gens(gens, &ring, &var_index)?);
            }
            Stmt::Module { gens, span } => {
                if module.is_some() {
                    return Err(SourceError::new(*span, "module N is already defined").into());
                }
                module = Some(lower_gens(gens, &ring, &var_index)?);
            }
            Stmt::Filtration { name, expr, span } => {
                if ideals.contains_key(name) || filtrations.contains_key(name) {
                    return Err(SourceError::new(*span, format!("`{name}` is already bound")).into());
                }
                check_filt_bindings(expr, &ideals)?;
                filtrations.insert(name.clone(), expr.clone());
            }
            Stmt::Analyze { filtration, family, grid, span } => {
                let expr = filtrations.get(filtration).ok_or_else(|| {
                    SourceError::new(*span, format!("`{filtration}` is not a bound filtration"))
                })?;
                let mut members = Vec::new();
                for name in family {
                    let ideal = ideals.get(name).ok_or_else(|| {
                        SourceError::new(*span, format!("`{name}` is not a bound ideal"))
                    })?;
                    members.push(ideal.clone());
                }

                let grid = match &overrides.grid {
                    Some(g) => g.clone(),
                    None => grid.clone(),
                };
                let grid = broadcast_grid(&grid, family.len(), *span)?;

                let family_ideals = IdealFamily::new(members)
                    .map_err(|e| SpecError::new(format!("ideal family: {e}")))?;
                let base_ideal =
                    module.clone().unwrap_or_else(|| MonomialIdeal::zero(ring.vars()));
                let base = BaseModule::new(base_ideal)
                    .map_err(|e| SpecError::new(format!("module N: {e}")))?;
                let filtration_spec = lower_filt(expr, &ideals, ring.vars())?;

                let spec = ExperimentSpec::new(
                    ring.clone(),
                    family_ideals,
                    filtration_spec,
                    base,
                    MultiIndex::new(grid),
                )
                .map_err(|e| SpecError::new(e.to_string()))?;
                let r_window = overrides.r_window.unwrap_or(spec.r_window);
                let r_max = overrides.r_max.unwrap_or(spec.r_max);
                let spec = spec
                    .with_chain_limits(r_window, r_max)
                    .map_err(|e| SpecError::new(e.to_string()))?;

                experiments.push(CompiledExperiment {
                    spec,
                    filtration_text: format!("{filtration} = {expr}"),
                    family_names: family.clone(),
                });
            }
        }
    }

    if experiments.is_empty() {
        return Err(SourceError::new(
            Span::default(),
            "a program needs at least one `analyze` directive",
        )
        .into());
    }
    Ok(experiments)
}

fn broadcast_grid(grid: &[u32], dims: usize, span: Span) -> Result<Vec<u32>, CompileError> {
    if grid.len() == dims {
        Ok(grid.to_vec())
    } else if grid.len() == 1 {
        Ok(vec![grid[0]; dims])
    } else {
        Err(SourceError::new(
            span,
            format!("grid has {} bounds for a {dims}-dimensional analysis", grid.len()),
        )
        .into())
    }
}

fn lower_gens(
    gens: &GenList,
    ring: &RingContext,
    var_index: &BTreeMap<&str, usize>,
) -> Result<MonomialIdeal, CompileError> {
    let v = ring.vars();
    match gens {
        GenList::Zero => Ok(MonomialIdeal::zero(v)),
        GenList::Monomials(monos) => {
            let mut out = Vec::with_capacity(monos.len());
            for mono in monos {
                let mut exps = vec![0u32; v];
                for factor in &mono.factors {
                    let &i = var_index.get(factor.var.as_str()).ok_or_else(|| {
                        SourceError::new(
                            factor.span,
                            format!("`{}` is not a ring variable", factor.var),
                        )
                    })?;
                    exps[i] = exps[i].checked_add(factor.exp).ok_or_else(|| {
                        SourceError::new(factor.span, "exponent overflow in monomial")
                    })?;
                }
                out.push(Monomial::new(exps));
            }
            Ok(MonomialIdeal::from_gens(v, out).expect("exponent vectors match the ring"))
        }
    }
}

fn check_filt_bindings(
    expr: &FiltExpr,
    ideals: &BTreeMap<String, MonomialIdeal>,
) -> Result<(), CompileError> {
    let check = |name: &String, span: &Span| -> Result<(), CompileError> {
        if ideals.contains_key(name) {
            Ok(())
        } else {
            Err(SourceError::new(*span, format!("`{name}` is not a bound ideal")).into())
        }
    };
    match expr {
        FiltExpr::Trivial => Ok(()),
        FiltExpr::Powers(name, span) | FiltExpr::Closure(name, span) => check(name, span),
        FiltExpr::Saturation(j, k, span) => {
            check(j, span)?;
            check(k, span)
        }
        FiltExpr::IntersectPowers(names, span) => {
            for name in names {
                check(name, span)?;
            }
            Ok(())
        }
        FiltExpr::Product(parts) => {
            for part in parts {
                check_filt_bindings(part, ideals)?;
            }
            Ok(())
        }
    }
}

fn lower_filt(
    expr: &FiltExpr,
    ideals: &BTreeMap<String, MonomialIdeal>,
    vars: usize,
) -> Result<FiltrationSpec, CompileError> {
    let lookup = |name: &String| ideals[name].clone();
    match expr {
        FiltExpr::Trivial => Ok(FiltrationSpec::Trivial { vars }),
        FiltExpr::Powers(name, _) => {
            let family = IdealFamily::new(vec![lookup(name)])
                .map_err(|e| SpecError::new(format!("powers({name}): {e}")))?;
            Ok(FiltrationSpec::Powers(family))
        }
        FiltExpr::Saturation(j, k, _) => {
            let family = IdealFamily::new(vec![lookup(j)])
                .map_err(|e| SpecError::new(format!("saturation({j}, {k}): {e}")))?;
            FiltrationSpec::saturation(family, lookup(k))
                .map_err(|e| SpecError::new(format!("saturation({j}, {k}): {e}")).into())
        }
        FiltExpr::Closure(name, _) => FiltrationSpec::closure(lookup(name))
            .map_err(|e| SpecError::new(format!("closure({name}): {e}")).into()),
        FiltExpr::IntersectPowers(names, _) => {
            let components = names.iter().map(lookup).collect();
            FiltrationSpec::intersection_powers(components)
                .map_err(|e| SpecError::new(format!("intersect_powers: {e}")).into())
        }
        FiltExpr::Product(parts) => {
            let axes = parts
                .iter()
                .map(|p| lower_filt(p, ideals, vars))
                .collect::<Result<Vec<_>, _>>()?;
            FiltrationSpec::product(axes)
                .map_err(|e| SpecError::new(format!("product: {e}")).into())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn compile_text(text: &str) -> Result<Vec<CompiledExperiment>, CompileError> {
        compile(&parse(text).unwrap(), &Overrides::default())
    }

    #[test]
    fn lowers_the_golden_program() {
        let out = compile_text(
            "ring x y;\nideal J = x^2, x*y;\nideal K = x, y;\n\
             filtration F = saturation(J, K);\nanalyze F over (J) grid 6;\n",
        )
        .unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].spec.grid.entries(), &[6]);
        assert_eq!(out[0].filtration_text, "F = saturation(J, K)");
    }

    #[test]
    fn binding_errors() {
        let err = compile_text("ring x;\nideal J = x;\nfiltration F = powers(J);\nanalyze G over (J) grid 3;").unwrap_err();
        assert!(matches!(err, CompileError::Source(_)));

        let err = compile_text("ring x;\nfiltration F = powers(J);").unwrap_err();
        assert!(err.to_string().contains("`J` is not a bound ideal"));

        let err = compile_text("ring x;\nideal J = x;\nideal J = x^2;").unwrap_err();
        assert!(err.to_string().contains("already bound"));

        let err = compile_text("ring x;\nideal x = x;").unwrap_err();
        assert!(err.to_string().contains("shadows a ring variable"));
    }

    #[test]
    fn unknown_variable_is_a_source_error() {
        let err = compile_text(
            "ring x;\nideal J = x*z;\nfiltration F = powers(J);\nanalyze F over (J) grid 2;",
        )
        .unwrap_err();
        assert!(err.to_string().contains("`z` is not a ring variable"));
    }

    #[test]
    fn value_level_failures_are_spec_errors() {
        // the zero ideal cannot sit in the graded family
        let err = compile_text(
            "ring x;\nideal Z = 0;\nfiltration F = powers(Z);\nanalyze F over (Z) grid 2;",
        )
        .unwrap_err();
        assert!(matches!(err, CompileError::Spec(_)));

        // grid bounds must be at least 1
        let err = compile_text(
            "ring x;\nideal J = x;\nfiltration F = powers(J);\nanalyze F over (J) grid 0;",
        )
        .unwrap_err();
        assert!(matches!(err, CompileError::Spec(_)));

        // oversized rings are rejected up front
        let long = "ring a b c d e f g h i j k;\nideal J = a;\nfiltration F = powers(J);\nanalyze F over (J) grid 2;";
        let err = compile_text(long).unwrap_err();
        assert!(err.to_string().contains("at most 10"));
    }

    #[test]
    fn grid_broadcast_and_arity() {
        let two_dim = "ring x y;\nideal J = x;\nideal K = y;\n\
            filtration F = product(powers(J), powers(K));\n";
        let ok = compile_text(&format!("{two_dim}analyze F over (J, K) grid 3;")).unwrap();
        assert_eq!(ok[0].spec.grid.entries(), &[3, 3]);
        let err = compile_text(&format!("{two_dim}analyze F over (J, K) grid 3,3,3;")).unwrap_err();
        assert!(err.to_string().contains("grid has 3 bounds"));
    }

    #[test]
    fn missing_analyze_is_rejected() {
        let err = compile_text("ring x;\nideal J = x;").unwrap_err();
        assert!(err.to_string().contains("at least one `analyze`"));
    }
}
