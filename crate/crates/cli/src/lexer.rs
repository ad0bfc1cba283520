//! Tokenizer for the experiment DSL; every token carries its position.

use crate::ast::Span;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TokenKind {
    Ident(String),
    Int(u32),
    LParen,
    RParen,
    Comma,
    Semi,
    Eq,
    Star,
    Caret,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(s) => write!(f, "identifier `{s}`"),
            TokenKind::Int(n) => write!(f, "integer `{n}`"),
            TokenKind::LParen => write!(f, "`(`"),
            TokenKind::RParen => write!(f, "`)`"),
            TokenKind::Comma => write!(f, "`,`"),
            TokenKind::Semi => write!(f, "`;`"),
            TokenKind::Eq => write!(f, "`=`"),
            TokenKind::Star => write!(f, "`*`"),
            TokenKind::Caret => write!(f, "`^`"),
            TokenKind::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

/// A parse-stage failure: lexical, syntactic, or binding.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SourceError {
    pub span: Span,
    pub message: String,
}

impl SourceError {
    pub fn new(span: Span, message: impl Into<String>) -> Self {
        SourceError { span, message: message.into() }
    }
}

impl fmt::Display for SourceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.span, self.message)
    }
}

impl std::error::Error for SourceError {}

pub fn tokenize(text: &str) -> Result<Vec<Token>, SourceError> {
    let mut tokens = Vec::new();
    let mut line = 1u32;
    let mut col = 1u32;
    let mut chars = text.chars().peekable();

    while let Some(&c) = chars.peek() {
        let span = Span { line, col };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '(' | ')' | ',' | ';' | '=' | '*' | '^' => {
                chars.next();
                col += 1;
                let kind = match c {
                    '(' => TokenKind::LParen,
                    ')' => TokenKind::RParen,
                    ',' => TokenKind::Comma,
                    ';' => TokenKind::Semi,
                    '=' => TokenKind::Eq,
                    '*' => TokenKind::Star,
                    _ => TokenKind::Caret,
                };
                tokens.push(Token { kind, span });
            }
            c if c.is_ascii_digit() => {
                let mut value: u32 = 0;
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    chars.next();
                    col += 1;
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as u32 - '0' as u32))
                        .ok_or_else(|| SourceError::new(span, "integer literal too large"))?;
                }
                tokens.push(Token { kind: TokenKind::Int(value), span });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut word = String::new();
                while let Some(&d) = chars.peek() {
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        break;
                    }
                    chars.next();
                    col += 1;
                    word.push(d);
                }
                tokens.push(Token { kind: TokenKind::Ident(word), span });
            }
            other => {
                return Err(SourceError::new(span, format!("unexpected character `{other}`")));
            }
        }
    }
    tokens.push(Token { kind: TokenKind::Eof, span: Span { line, col } });
    Ok(tokens)
}
