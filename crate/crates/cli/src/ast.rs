//! Abstract syntax of the experiment DSL, plus the pretty printer.

use std::fmt;

/// Source position of a token. Positions are carried for diagnostics only
/// and deliberately compare equal, so that AST equality (used by the
/// parse/pretty-print round-trip) ignores them.
#[derive(Clone, Copy, Debug, Default)]
pub struct Span {
    pub line: u32,
    pub col: u32,
}

impl PartialEq for Span {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for Span {}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SourceProgram {
    pub ring: Vec<String>,
    pub ring_span: Span,
    pub stmts: Vec<Stmt>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Stmt {
    Ideal { name: String, gens: GenList, span: Span },
    Module { gens: GenList, span: Span },
    Filtration { name: String, expr: FiltExpr, span: Span },
    Analyze { filtration: String, family: Vec<String>, grid: Vec<u32>, span: Span },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GenList {
    Zero,
    Monomials(Vec<MonoExpr>),
}

/// A product of `ident(^int)?` factors, kept as written.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonoExpr {
    pub factors: Vec<Factor>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factor {
    pub var: String,
    pub exp: u32,
    pub span: Span,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FiltExpr {
    Powers(String, Span),
    Trivial,
    Saturation(String, String, Span),
    Closure(String, Span),
    IntersectPowers(Vec<String>, Span),
    Product(Vec<FiltExpr>),
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 1 {
            write!(f, "{}", self.var)
        } else {
            write!(f, "{}^{}", self.var, self.exp)
        }
    }
}

impl fmt::Display for MonoExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Display for GenList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenList::Zero => write!(f, "0"),
            GenList::Monomials(monos) => {
                let parts: Vec<String> = monos.iter().map(|m| m.to_string()).collect();
                write!(f, "{}", parts.join(", "))
            }
        }
    }
}

impl fmt::Display for FiltExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiltExpr::Powers(name, _) => write!(f, "powers({name})"),
            FiltExpr::Trivial => write!(f, "trivial"),
            FiltExpr::Saturation(j, k, _) => write!(f, "saturation({j}, {k})"),
            FiltExpr::Closure(name, _) => write!(f, "closure({name})"),
            FiltExpr::IntersectPowers(names, _) => {
                write!(f, "intersect_powers({})", names.join(", "))
            }
            FiltExpr::Product(parts) => {
                let rendered: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "product({})", rendered.join(", "))
            }
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Ideal { name, gens, .. } => write!(f, "ideal {name} = {gens};"),
            Stmt::Module { gens, .. } => write!(f, "module N = {gens};"),
            Stmt::Filtration { name, expr, .. } => write!(f, "filtration {name} = {expr};"),
            Stmt::Analyze { filtration, family, grid, .. } => {
                let grid: Vec<String> = grid.iter().map(|g| g.to_string()).collect();
                write!(
                    f,
                    "analyze {filtration} over ({}) grid {};",
                    family.join(", "),
                    grid.join(",")
                )
            }
        }
    }
}

impl fmt::Display for SourceProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {};", self.ring.join(" "))?;
        for stmt in &self.stmts {
            writeln!(f, "{stmt}")?;
        }
        Ok(())
    }
}
