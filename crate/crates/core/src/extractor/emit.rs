//! Observation emitter and the expression-level scanner shared by the
//! C-family and Python nesters.
//!
//! Expression scanning rules:
//! - a plain identifier directly followed by `(` yields a call-expression
//!   spanning through the matching `)`; the callee identifier and the
//!   argument tokens are scanned one level deeper;
//! - grouping parens/brackets do not add depth;
//! - `!`, `~`, `++`, `--`, and Python `not` are always unary; `+ - * &`
//!   (and Python `**`) are unary after an operator/opener and binary after
//!   an operand; all other counted operators are binary;
//! - keywords are never identifiers; `true/false/null/nullptr/None/this`
//!   behave as operands for operator classification.

use super::lexer::{Kw, Token, TokenKind};
use crate::taxonomy::{ConstructKind, Language};

pub type ScopeId = u32;

/// One occurrence of a canonical construct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructObservation {
    pub kind: ConstructKind,
    /// Char offset of the span start.
    pub start: usize,
    /// Char count of the source span.
    pub length: usize,
    /// Nesting depth in the construct tree; file root is 0.
    pub depth: usize,
    /// Innermost strictly-containing function scope, if any.
    pub enclosing_function: Option<ScopeId>,
    /// Innermost strictly-containing class scope, if any.
    pub enclosing_class: Option<ScopeId>,
}

impl ConstructObservation {
    pub fn end(&self) -> usize {
        self.start + self.length
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScopeKind {
    Function,
    Class,
}

/// A function or class declaration scope discovered during parsing.
#[derive(Debug, Clone)]
pub struct ScopeInfo {
    pub id: ScopeId,
    pub kind: ScopeKind,
    pub start: usize,
    pub end: usize,
    pub enclosing_function: Option<ScopeId>,
    pub enclosing_class: Option<ScopeId>,
}

/// Collects observations and tracks open function/class scopes.
#[derive(Default)]
pub struct Emitter {
    pub observations: Vec<ConstructObservation>,
    pub scopes: Vec<ScopeInfo>,
    fn_stack: Vec<ScopeId>,
    cls_stack: Vec<ScopeId>,
}

impl Emitter {
    pub fn new() -> Emitter {
        Emitter::default()
    }

    /// Emits one observation; returns its index for later span patching.
    pub fn emit(&mut self, kind: ConstructKind, start: usize, end: usize, depth: usize) -> usize {
        self.observations.push(ConstructObservation {
            kind,
            start,
            length: end.saturating_sub(start),
            depth,
            enclosing_function: self.fn_stack.last().copied(),
            enclosing_class: self.cls_stack.last().copied(),
        });
        self.observations.len() - 1
    }

    pub fn set_end(&mut self, idx: usize, end: usize) {
        let obs = &mut self.observations[idx];
        obs.length = end.saturating_sub(obs.start);
    }

    pub fn obs_end(&self, idx: usize) -> usize {
        self.observations[idx].end()
    }

    /// Opens a scope. The caller emits the construct observation first so the
    /// observation itself carries the *outer* enclosing ids.
    pub fn push_scope(&mut self, kind: ScopeKind, start: usize) -> ScopeId {
        let id = self.scopes.len() as ScopeId;
        self.scopes.push(ScopeInfo {
            id,
            kind,
            start,
            end: start,
            enclosing_function: self.fn_stack.last().copied(),
            enclosing_class: self.cls_stack.last().copied(),
        });
        match kind {
            ScopeKind::Function => self.fn_stack.push(id),
            ScopeKind::Class => self.cls_stack.push(id),
        }
        id
    }

    pub fn pop_scope(&mut self, id: ScopeId, end: usize) {
        self.scopes[id as usize].end = end;
        match self.scopes[id as usize].kind {
            ScopeKind::Function => {
                debug_assert_eq!(self.fn_stack.last(), Some(&id));
                self.fn_stack.pop();
            }
            ScopeKind::Class => {
                debug_assert_eq!(self.cls_stack.last(), Some(&id));
                self.cls_stack.pop();
            }
        }
    }

    /// Canonical output order: by span start, wider spans first, then kind id.
    pub fn finish(mut self) -> (Vec<ConstructObservation>, Vec<ScopeInfo>) {
        self.observations.sort_by(|a, b| {
            a.start
                .cmp(&b.start)
                .then(b.length.cmp(&a.length))
                .then(a.kind.id().cmp(&b.kind.id()))
        });
        (self.observations, self.scopes)
    }
}

/// Builds the delimiter match map: `matches[i]` holds the partner index for
/// every paren/bracket/brace token. Returns an error message on imbalance.
pub fn match_delims(
    tokens: &[Token],
    braces: bool,
) -> Result<Vec<usize>, String> {
    let mut matches = vec![usize::MAX; tokens.len()];
    let mut stack: Vec<(usize, TokenKind)> = Vec::new();
    for (i, t) in tokens.iter().enumerate() {
        match t.kind {
            TokenKind::OpenParen | TokenKind::OpenBracket => stack.push((i, t.kind)),
            TokenKind::OpenBrace if braces => stack.push((i, t.kind)),
            TokenKind::CloseParen | TokenKind::CloseBracket | TokenKind::CloseBrace => {
                if t.kind == TokenKind::CloseBrace && !braces {
                    continue;
                }
                let expected = match t.kind {
                    TokenKind::CloseParen => TokenKind::OpenParen,
                    TokenKind::CloseBracket => TokenKind::OpenBracket,
                    _ => TokenKind::OpenBrace,
                };
                match stack.pop() {
                    Some((open, kind)) if kind == expected => {
                        matches[open] = i;
                        matches[i] = open;
                    }
                    _ => {
                        return Err(format!(
                            "unbalanced delimiter at line {}",
                            t.line
                        ));
                    }
                }
            }
            _ => {}
        }
    }
    if let Some((open, _)) = stack.first() {
        return Err(format!(
            "unclosed delimiter at line {}",
            tokens[*open].line
        ));
    }
    Ok(matches)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Prev {
    /// Start of expression or just after an operator/opener: unary position.
    Opener,
    /// After a value: binary position.
    Operand,
}

fn classify_op(op: &str, prev: Prev, lang: Language) -> Option<ConstructKind> {
    match op {
        "!" | "~" | "++" | "--" => Some(ConstructKind::UnaryOperator),
        "+" | "-" => Some(if prev == Prev::Operand {
            ConstructKind::BinaryOperator
        } else {
            ConstructKind::UnaryOperator
        }),
        "*" | "&" if lang != Language::Python => Some(if prev == Prev::Operand {
            ConstructKind::BinaryOperator
        } else {
            ConstructKind::UnaryOperator
        }),
        "*" | "**" if lang == Language::Python => Some(if prev == Prev::Operand {
            ConstructKind::BinaryOperator
        } else {
            ConstructKind::UnaryOperator
        }),
        "@" => {
            // Matrix multiply when infix; decorators are skipped upstream.
            if prev == Prev::Operand {
                Some(ConstructKind::BinaryOperator)
            } else {
                None
            }
        }
        _ => Some(ConstructKind::BinaryOperator),
    }
}

/// Scans a token range as expression content, emitting leaf observations.
pub struct ExprScanner<'a> {
    pub tokens: &'a [Token],
    pub matches: &'a [usize],
    pub lang: Language,
}

impl<'a> ExprScanner<'a> {
    pub fn scan(&self, em: &mut Emitter, start: usize, end: usize, depth: usize) {
        let mut prev = Prev::Opener;
        let mut i = start;
        while i < end {
            let t = &self.tokens[i];
            match t.kind {
                TokenKind::Comment => {
                    em.emit(ConstructKind::Comment, t.start, t.end, depth);
                    i += 1;
                }
                TokenKind::Str => {
                    em.emit(ConstructKind::StringLiteral, t.start, t.end, depth);
                    prev = Prev::Operand;
                    i += 1;
                }
                TokenKind::Number => {
                    em.emit(ConstructKind::NumericLiteral, t.start, t.end, depth);
                    prev = Prev::Operand;
                    i += 1;
                }
                TokenKind::Ident => {
                    let callish = i + 1 < end
                        && self.tokens[i + 1].kind == TokenKind::OpenParen
                        && self.matches[i + 1] != usize::MAX
                        && self.matches[i + 1] < end;
                    if callish {
                        let close = self.matches[i + 1];
                        em.emit(ConstructKind::CallExpression, t.start, self.tokens[close].end, depth);
                        em.emit(ConstructKind::Identifier, t.start, t.end, depth + 1);
                        self.scan(em, i + 2, close, depth + 1);
                        i = close + 1;
                    } else {
                        em.emit(ConstructKind::Identifier, t.start, t.end, depth);
                        i += 1;
                    }
                    prev = Prev::Operand;
                }
                TokenKind::Keyword(kw) => {
                    match kw {
                        Kw::And | Kw::Or | Kw::In | Kw::Is => {
                            em.emit(ConstructKind::BinaryOperator, t.start, t.end, depth);
                            prev = Prev::Opener;
                        }
                        Kw::Not => {
                            em.emit(ConstructKind::UnaryOperator, t.start, t.end, depth);
                            prev = Prev::Opener;
                        }
                        Kw::Operand => prev = Prev::Operand,
                        _ => prev = Prev::Opener,
                    }
                    i += 1;
                }
                TokenKind::Op(op) => {
                    if let Some(kind) = classify_op(op, prev, self.lang) {
                        em.emit(kind, t.start, t.end, depth);
                    }
                    prev = Prev::Opener;
                    i += 1;
                }
                TokenKind::OpenParen | TokenKind::OpenBracket => {
                    let close = self.matches[i];
                    if close == usize::MAX || close >= end {
                        prev = Prev::Opener;
                        i += 1;
                    } else {
                        self.scan(em, i + 1, close, depth);
                        prev = Prev::Operand;
                        i = close + 1;
                    }
                }
                TokenKind::OpenBrace => {
                    let close = self.matches[i];
                    if close == usize::MAX || close >= end {
                        prev = Prev::Opener;
                        i += 1;
                    } else {
                        if self.lang != Language::Python {
                            // C-family brace initializer: a block.
                            em.emit(ConstructKind::Block, t.start, self.tokens[close].end, depth);
                            self.scan(em, i + 1, close, depth + 1);
                        } else {
                            // Python dict/set literal: grouping only.
                            self.scan(em, i + 1, close, depth);
                        }
                        prev = Prev::Operand;
                        i = close + 1;
                    }
                }
                TokenKind::CloseParen | TokenKind::CloseBracket | TokenKind::CloseBrace => {
                    prev = Prev::Operand;
                    i += 1;
                }
                TokenKind::Comma
                | TokenKind::Semicolon
                | TokenKind::Colon
                | TokenKind::Question
                | TokenKind::At
                | TokenKind::Arrow
                | TokenKind::Scope
                | TokenKind::Dot
                | TokenKind::Ellipsis
                | TokenKind::Preproc
                | TokenKind::Newline
                | TokenKind::Unknown => {
                    prev = Prev::Opener;
                    i += 1;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extractor::lexer::lex_cfamily;

    fn scan_c(srctext: &str) -> Vec<ConstructObservation> {
        let src: Vec<char> = srctext.chars().collect();
        let tokens = lex_cfamily(&src, Language::C);
        let matches = match_delims(&tokens, true).unwrap();
        let scanner = ExprScanner { tokens: &tokens, matches: &matches, lang: Language::C };
        let mut em = Emitter::new();
        scanner.scan(&mut em, 0, tokens.len(), 0);
        em.finish().0
    }

    fn kinds(obs: &[ConstructObservation]) -> Vec<ConstructKind> {
        obs.iter().map(|o| o.kind).collect()
    }

    #[test]
    fn nested_calls_gain_depth() {
        let obs = scan_c("f(g(x))");
        let f = obs.iter().find(|o| o.kind == ConstructKind::CallExpression && o.start == 0).unwrap();
        let g = obs.iter().find(|o| o.kind == ConstructKind::CallExpression && o.start == 2).unwrap();
        assert_eq!(f.depth, 0);
        assert_eq!(g.depth, 1);
        let x = obs.iter().find(|o| o.kind == ConstructKind::Identifier && o.start == 4).unwrap();
        assert_eq!(x.depth, 2);
        assert_eq!(f.length, 7);
        assert_eq!(g.length, 4);
    }

    #[test]
    fn unary_vs_binary_minus() {
        let obs = scan_c("a - -b");
        let ks = kinds(&obs);
        assert_eq!(
            ks,
            vec![
                ConstructKind::Identifier,
                ConstructKind::BinaryOperator,
                ConstructKind::UnaryOperator,
                ConstructKind::Identifier,
            ]
        );
    }

    #[test]
    fn grouping_parens_do_not_add_depth() {
        let obs = scan_c("(a + b)");
        assert!(obs.iter().all(|o| o.depth == 0));
    }

    #[test]
    fn increment_is_unary() {
        let obs = scan_c("i++");
        assert_eq!(
            kinds(&obs),
            vec![ConstructKind::Identifier, ConstructKind::UnaryOperator]
        );
    }
}
