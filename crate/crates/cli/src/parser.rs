//! Recursive-descent parser for the experiment DSL.
//!
//! ```text
//! program   := ring_decl stmt* ;
//! ring_decl := "ring" ident+ ";" ;
//! stmt      := "ideal" ident "=" gens ";" | "module" "N" "=" gens ";"
//!            | "filtration" ident "=" filt ";"
//!            | "analyze" ident "over" "(" ident ("," ident)* ")" "grid" int ("," int)* ";" ;
//! gens      := "0" | mono ("," mono)* ;
//! mono      := factor ("*" factor)* ;
//! factor    := ident ("^" int)? ;
//! filt      := "powers" "(" ident ")" | "trivial" | "saturation" "(" ident "," ident ")"
//!            | "closure" "(" ident ")" | "intersect_powers" "(" ident ("," ident)+ ")"
//!            | "product" "(" filt ("," filt)+ ")" ;
//! ```

use crate::ast::{Factor, FiltExpr, GenList, MonoExpr, SourceProgram, Span, Stmt};
use crate::lexer::{tokenize, SourceError, Token, TokenKind};

pub const KEYWORDS: &[&str] = &[
    "ring", "ideal", "module", "filtration", "analyze", "over", "grid", "powers", "trivial",
    "saturation", "closure", "intersect_powers", "product",
];

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

pub fn parse(text: &str) -> Result<SourceProgram, SourceError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    parser.program()
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, span: Span, message: impl Into<String>) -> SourceError {
        SourceError::new(span, message)
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<Token, SourceError> {
        let t = self.next();
        if t.kind == kind {
            Ok(t)
        } else {
            Err(self.error(t.span, format!("expected {what}, found {}", t.kind)))
        }
    }

    fn expect_keyword(&mut self, word: &str) -> Result<Token, SourceError> {
        let t = self.next();
        match &t.kind {
            TokenKind::Ident(s) if s == word => Ok(t),
            other => Err(self.error(t.span, format!("expected `{word}`, found {other}"))),
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Span), SourceError> {
        let t = self.next();
        match t.kind {
            TokenKind::Ident(s) => Ok((s, t.span)),
            other => Err(self.error(t.span, format!("expected {what}, found {other}"))),
        }
    }

    /// An identifier used as a binding or reference; keywords and the
    /// reserved module name `N` are rejected.
    fn name(&mut self, what: &str) -> Result<(String, Span), SourceError> {
        let (s, span) = self.ident(what)?;
        if KEYWORDS.contains(&s.as_str()) {
            return Err(self.error(span, format!("`{s}` is a reserved word")));
        }
        if s == "N" {
            return Err(self.error(span, "`N` is reserved for the module declaration"));
        }
        Ok((s, span))
    }

    fn int(&mut self, what: &str) -> Result<(u32, Span), SourceError> {
        let t = self.next();
        match t.kind {
            TokenKind::Int(n) => Ok((n, t.span)),
            other => Err(self.error(t.span, format!("expected {what}, found {other}"))),
        }
    }

    fn program(&mut self) -> Result<SourceProgram, SourceError> {
        let ring_tok = self.expect_keyword("ring")?;
        let mut ring = Vec::new();
        loop {
            let (name, _) = self.name("a ring variable")?;
            ring.push(name);
            if self.peek().kind == TokenKind::Semi {
                self.next();
                break;
            }
        }

        let mut stmts = Vec::new();
        loop {
            let t = self.peek().clone();
            match &t.kind {
                TokenKind::Eof => break,
                TokenKind::Ident(word) => {
                    let stmt = match word.as_str() {
                        "ideal" => self.ideal_stmt()?,
                        "module" => self.module_stmt()?,
                        "filtration" => self.filtration_stmt()?,
                        "analyze" => self.analyze_stmt()?,
                        other => {
                            return Err(self.error(
                                t.span,
                                format!(
                                    "expected `ideal`, `module`, `filtration` or `analyze`, \
                                     found `{other}`"
                                ),
                            ))
                        }
                    };
                    stmts.push(stmt);
                }
                other => {
                    return Err(self.error(t.span, format!("expected a statement, found {other}")))
                }
            }
        }
        Ok(SourceProgram { ring, ring_span: ring_tok.span, stmts })
    }

    fn ideal_stmt(&mut self) -> Result<Stmt, SourceError> {
        let kw = self.expect_keyword("ideal")?;
        let (name, _) = self.name("an ideal name")?;
        self.expect(TokenKind::Eq, "`=`")?;
        let gens = self.gens()?;
        self.expect(TokenKind::Semi, "`;`")?;
        Ok(Stmt::Ideal { name, gens, span: kw.span })
    }

    fn module_stmt(&mut self) -> Result<Stmt, SourceError> {
        let kw = self.expect_keyword("module")?;
        let (name, span) = self.ident("`N`")?;
        if name != "N" {
            return Err(self.error(span, "the module must be named `N`"));
        }
        self.expect(TokenKind::Eq, "`=`")?;
        let gens = self.gens()?;
        self.expect(TokenKind::Semi, "`;`")?;
        Ok(Stmt::Module { gens, span: kw.span })
    }

    fn filtration_stmt(&mut self) -> Result<Stmt, SourceError> {
        let kw = self.expect_keyword("filtration")?;
        let (name, _) = self.name("a filtration name")?;
        self.expect(TokenKind::Eq, "`=`")?;
        let expr = self.filt()?;
        self.expect(TokenKind::Semi, "`;`")?;
        Ok(Stmt::Filtration { name, expr, span: kw.span })
    }

    fn analyze_stmt(&mut self) -> Result<Stmt, SourceError> {
        let kw = self.expect_keyword("analyze")?;
        let (filtration, _) = self.name("a filtration name")?;
        self.expect_keyword("over")?;
        self.expect(TokenKind::LParen, "`(`")?;
        let mut family = Vec::new();
        loop {
            let (name, _) = self.name("an ideal name")?;
            family.push(name);
            match self.next() {
                Token { kind: TokenKind::Comma, .. } => continue,
                Token { kind: TokenKind::RParen, .. } => break,
                t => return Err(self.error(t.span, format!("expected `,` or `)`, found {}", t.kind))),
            }
        }
        self.expect_keyword("grid")?;
        let mut grid = Vec::new();
        let (first, _) = self.int("a grid bound")?;
        grid.push(first);
        while self.peek().kind == TokenKind::Comma {
            self.next();
            let (next, _) = self.int("a grid bound")?;
            grid.push(next);
        }
        self.expect(TokenKind::Semi, "`;`")?;
        Ok(Stmt::Analyze { filtration, family, grid, span: kw.span })
    }

    fn gens(&mut self) -> Result<GenList, SourceError> {
        if let TokenKind::Int(0) = self.peek().kind {
            self.next();
            return Ok(GenList::Zero);
        }
        let mut monos = vec![self.mono()?];
        while self.peek().kind == TokenKind::Comma {
            self.next();
            monos.push(self.mono()?);
        }
        Ok(GenList::Monomials(monos))
    }

    fn mono(&mut self) -> Result<MonoExpr, SourceError> {
        let mut factors = vec![self.factor()?];
        while self.peek().kind == TokenKind::Star {
            self.next();
            factors.push(self.factor()?);
        }
        Ok(MonoExpr { factors })
    }

    fn factor(&mut self) -> Result<Factor, SourceError> {
        let (var, span) = self.name("a variable")?;
        let exp = if self.peek().kind == TokenKind::Caret {
            self.next();
            let (e, _) = self.int("an exponent")?;
            e
        } else {
            1
        };
        Ok(Factor { var, exp, span })
    }

    fn filt(&mut self) -> Result<FiltExpr, SourceError> {
        let (word, span) = self.ident("a filtration form")?;
        match word.as_str() {
            "trivial" => Ok(FiltExpr::Trivial),
            "powers" => {
                self.expect(TokenKind::LParen, "`(`")?;
                let (name, nspan) = self.name("an ideal name")?;
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(FiltExpr::Powers(name, nspan))
            }
            "closure" => {
                self.expect(TokenKind::LParen, "`(`")?;
                let (name, nspan) = self.name("an ideal name")?;
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(FiltExpr::Closure(name, nspan))
            }
            "saturation" => {
                self.expect(TokenKind::LParen, "`(`")?;
                let (j, jspan) = self.name("an ideal name")?;
                self.expect(TokenKind::Comma, "`,`")?;
                let (k, _) = self.name("an ideal name")?;
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(FiltExpr::Saturation(j, k, jspan))
            }
            "intersect_powers" => {
                self.expect(TokenKind::LParen, "`(`")?;
                let (first, nspan) = self.name("an ideal name")?;
                let mut names = vec![first];
                self.expect(TokenKind::Comma, "`,` (intersect_powers needs two or more ideals)")?;
                loop {
                    let (name, _) = self.name("an ideal name")?;
                    names.push(name);
                    match self.next() {
                        Token { kind: TokenKind::Comma, .. } => continue,
                        Token { kind: TokenKind::RParen, .. } => break,
                        t => {
                            return Err(
                                self.error(t.span, format!("expected `,` or `)`, found {}", t.kind))
                            )
                        }
                    }
                }
                Ok(FiltExpr::IntersectPowers(names, nspan))
            }
            "product" => {
                self.expect(TokenKind::LParen, "`(`")?;
                let mut parts = vec![self.filt()?];
                self.expect(TokenKind::Comma, "`,` (product needs two or more axes)")?;
                loop {
                    parts.push(self.filt()?);
                    match self.next() {
                        Token { kind: TokenKind::Comma, .. } => continue,
                        Token { kind: TokenKind::RParen, .. } => break,
                        t => {
                            return Err(
                                self.error(t.span, format!("expected `,` or `)`, found {}", t.kind))
                            )
                        }
                    }
                }
                Ok(FiltExpr::Product(parts))
            }
            other => Err(self.error(
                span,
                format!("expected a filtration form (powers, trivial, saturation, closure, intersect_powers, product), found `{other}`"),
            )),
        }
    }
}
