//! Construct nester for Python.
//!
//! Logical lines are rebuilt from physical lines (bracket nesting and
//! backslash continuations join lines). Indented suites are blocks; the
//! suite of a compound header nests one level under its construct.
//!
//! Span and mapping conventions:
//! - `def` -> function-definition from the `def` keyword through its suite;
//! - `class` -> class-definition from the keyword through its suite;
//! - `elif` -> an if-statement nested inside the preceding if, mirroring the
//!   orelse nesting of the language's own syntax tree; chain ancestors'
//!   spans extend over every later clause;
//! - `else` -> an else-clause nested inside the innermost chain construct
//!   (if, loop, or try); `except` -> a catch-clause nested inside its try;
//! - `finally`/`with` produce no construct, only their suite block;
//! - return/break/continue span from the keyword to the end of the logical
//!   line (trailing comments excluded);
//! - one-line suites (`if x: y = 1`) become an inline block.
//!
//! Comment-only lines never advance suite extents and are observed at the
//! depth of the suite that is open where they appear.

use super::emit::{match_delims, Emitter, ExprScanner, ScopeId, ScopeKind};
use super::lexer::{lex_python, Kw, Token, TokenKind};
use super::ParseOutput;
use crate::taxonomy::{ConstructKind, Language};

pub fn parse_python(src: &[char]) -> Result<ParseOutput, String> {
    let tokens = lex_python(src);
    let matches = match_delims(&tokens, true)?;
    let mut parser = PyParser {
        tokens: &tokens,
        matches: &matches,
        em: Emitter::new(),
        levels: vec![Level::file()],
        last_end: 0,
    };
    let lines = logical_lines(&tokens);
    for line in lines {
        parser.process_line(line);
    }
    while parser.levels.len() > 1 {
        parser.close_top_level();
    }
    parser.break_chain();
    let (observations, scopes) = parser.em.finish();
    Ok(ParseOutput { observations, scopes })
}

#[derive(Clone, Copy)]
struct Line {
    start: usize,
    end: usize,
}

fn logical_lines(tokens: &[Token]) -> Vec<Line> {
    let mut lines = Vec::new();
    let mut cur: Option<usize> = None;
    let mut level: i32 = 0;
    for (i, t) in tokens.iter().enumerate() {
        match t.kind {
            TokenKind::Newline => {
                if level == 0 {
                    if let Some(s) = cur.take() {
                        lines.push(Line { start: s, end: i });
                    }
                }
            }
            TokenKind::OpenParen | TokenKind::OpenBracket | TokenKind::OpenBrace => {
                level += 1;
                cur.get_or_insert(i);
            }
            TokenKind::CloseParen | TokenKind::CloseBracket | TokenKind::CloseBrace => {
                level -= 1;
                cur.get_or_insert(i);
            }
            _ => {
                cur.get_or_insert(i);
            }
        }
    }
    if let Some(s) = cur {
        lines.push(Line { start: s, end: tokens.len() });
    }
    lines
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ChainKind {
    If,
    Loop,
    Try,
    Closed,
}

struct Pending {
    owner: Option<usize>,
    block_depth: usize,
    scope: Option<ScopeId>,
}

struct Level {
    indent: u32,
    content_depth: usize,
    block_idx: Option<usize>,
    owner: Option<usize>,
    scope: Option<ScopeId>,
    chain: Vec<usize>,
    chain_kind: Option<ChainKind>,
    pending: Option<Pending>,
}

impl Level {
    fn file() -> Level {
        Level {
            indent: 0,
            content_depth: 0,
            block_idx: None,
            owner: None,
            scope: None,
            chain: Vec::new(),
            chain_kind: None,
            pending: None,
        }
    }
}

struct PyParser<'a> {
    tokens: &'a [Token],
    matches: &'a [usize],
    em: Emitter,
    levels: Vec<Level>,
    last_end: usize,
}

impl<'a> PyParser<'a> {
    fn scanner(&self) -> ExprScanner<'a> {
        ExprScanner { tokens: self.tokens, matches: self.matches, lang: Language::Python }
    }

    fn top(&mut self) -> &mut Level {
        self.levels.last_mut().expect("file level always present")
    }

    fn close_top_level(&mut self) {
        let level = self.levels.pop().expect("file level always present");
        let end = self.last_end;
        if let Some(b) = level.block_idx {
            self.em.set_end(b, self.em.obs_end(b).max(end));
        }
        if let Some(o) = level.owner {
            self.em.set_end(o, self.em.obs_end(o).max(end));
        }
        if let Some(s) = level.scope {
            self.em.pop_scope(s, end);
        }
        // Ancestors in an open chain span every later clause.
        let chain = self.top().chain.clone();
        for idx in chain {
            self.em.set_end(idx, self.em.obs_end(idx).max(end));
        }
    }

    fn break_chain(&mut self) {
        let top = self.top();
        top.chain.clear();
        top.chain_kind = None;
    }

    fn first_significant(&self, line: Line) -> Option<usize> {
        (line.start..line.end)
            .find(|&i| !matches!(self.tokens[i].kind, TokenKind::Comment | TokenKind::Newline))
    }

    fn process_line(&mut self, line: Line) {
        let Some(first) = self.first_significant(line) else {
            // Comment-only line: observed where the open suite sits, unless a
            // suite is pending, in which case it opens that suite.
            if self.top().pending.is_some() {
                let indent = self.tokens[line.start].col;
                if indent > self.top().indent {
                    self.open_suite(indent, self.tokens[line.start].start);
                }
            }
            let depth = self.top().content_depth;
            for i in line.start..line.end {
                let t = &self.tokens[i];
                if t.kind == TokenKind::Comment {
                    self.em.emit(ConstructKind::Comment, t.start, t.end, depth);
                }
            }
            return;
        };

        let indent = self.tokens[first].col;
        while self.levels.len() > 1 && indent < self.top().indent {
            self.close_top_level();
        }
        if indent > self.top().indent {
            self.open_suite(indent, self.tokens[first].start);
        } else {
            // Same level: an unconsumed pending means an empty suite.
            self.top().pending = None;
        }

        self.parse_line(line, first);
        let line_last = self.line_span_end(line);
        self.last_end = self.last_end.max(line_last);
    }

    /// End of the last non-comment token of the line (comments trail behind
    /// statements and do not extend suite spans).
    fn line_span_end(&self, line: Line) -> usize {
        (line.start..line.end)
            .rev()
            .find(|&i| !matches!(self.tokens[i].kind, TokenKind::Comment | TokenKind::Newline))
            .map(|i| self.tokens[i].end)
            .unwrap_or(self.last_end)
    }

    fn open_suite(&mut self, indent: u32, start: usize) {
        let (owner, block_depth, scope) = match self.top().pending.take() {
            Some(p) => (p.owner, p.block_depth, p.scope),
            None => (None, self.top().content_depth, None),
        };
        let block = self.em.emit(ConstructKind::Block, start, start, block_depth);
        self.levels.push(Level {
            indent,
            content_depth: block_depth + 1,
            block_idx: Some(block),
            owner,
            scope,
            chain: Vec::new(),
            chain_kind: None,
            pending: None,
        });
    }

    /// First `:` at bracket level 0 within the line, the header/suite split.
    fn header_colon(&self, from: usize, line: Line) -> Option<usize> {
        let mut level = 0i32;
        for i in from..line.end {
            match self.tokens[i].kind {
                TokenKind::OpenParen | TokenKind::OpenBracket | TokenKind::OpenBrace => level += 1,
                TokenKind::CloseParen | TokenKind::CloseBracket | TokenKind::CloseBrace => {
                    level -= 1
                }
                TokenKind::Colon if level == 0 => return Some(i),
                _ => {}
            }
        }
        None
    }

    fn parse_line(&mut self, line: Line, first: usize) {
        let mut head = first;
        let t = &self.tokens[head];
        // Decorator line: scan the decorator expression, no construct.
        if t.kind == TokenKind::At {
            let depth = self.top().content_depth;
            self.scanner().scan(&mut self.em, head + 1, line.end, depth);
            return;
        }
        let mut kw = match t.kind {
            TokenKind::Keyword(k) => k,
            _ => {
                self.parse_simple_line(line, first);
                return;
            }
        };
        if kw == Kw::Async {
            if let Some(next) = self.first_after(head + 1, line.end) {
                if let TokenKind::Keyword(k2) = self.tokens[next].kind {
                    head = next;
                    kw = k2;
                }
            }
        }
        match kw {
            Kw::If | Kw::Elif | Kw::Else | Kw::For | Kw::While | Kw::Try | Kw::Except
            | Kw::Finally | Kw::With | Kw::Def | Kw::Class => {
                self.parse_header(line, head, kw)
            }
            _ => self.parse_simple_line(line, first),
        }
    }

    fn first_after(&self, mut i: usize, end: usize) -> Option<usize> {
        while i < end {
            if !matches!(self.tokens[i].kind, TokenKind::Comment | TokenKind::Newline) {
                return Some(i);
            }
            i += 1;
        }
        None
    }

    fn parse_header(&mut self, line: Line, head: usize, kw: Kw) {
        let colon = self.header_colon(head + 1, line);
        let header_end = colon.unwrap_or(line.end);
        let kw_tok = self.tokens[head];
        let content_depth = self.top().content_depth;

        // Resolve chain attachment and construct emission.
        let chain_kind = self.top().chain_kind;
        let chain_last = self.top().chain.last().copied();
        let chain_first = self.top().chain.first().copied();
        let (construct, block_depth, scope): (Option<usize>, usize, Option<ScopeId>) = match kw {
            Kw::Def => {
                let idx = self.em.emit(
                    ConstructKind::FunctionDefinition,
                    kw_tok.start,
                    kw_tok.end,
                    content_depth,
                );
                let scope = self.em.push_scope(ScopeKind::Function, kw_tok.start);
                self.break_chain();
                self.scan_def_header(head + 1, header_end, content_depth + 1);
                (Some(idx), content_depth + 1, Some(scope))
            }
            Kw::Class => {
                let idx = self.em.emit(
                    ConstructKind::ClassDefinition,
                    kw_tok.start,
                    kw_tok.end,
                    content_depth,
                );
                let scope = self.em.push_scope(ScopeKind::Class, kw_tok.start);
                self.break_chain();
                self.scanner().scan(&mut self.em, head + 1, header_end, content_depth + 1);
                (Some(idx), content_depth + 1, Some(scope))
            }
            Kw::If | Kw::For | Kw::While | Kw::Try => {
                self.break_chain();
                let kind = match kw {
                    Kw::If => ConstructKind::IfStatement,
                    Kw::For => ConstructKind::ForLoop,
                    Kw::While => ConstructKind::WhileLoop,
                    _ => ConstructKind::TryBlock,
                };
                let idx = self.em.emit(kind, kw_tok.start, kw_tok.end, content_depth);
                self.scanner().scan(&mut self.em, head + 1, header_end, content_depth + 1);
                let top = self.top();
                top.chain.push(idx);
                top.chain_kind = Some(match kw {
                    Kw::If => ChainKind::If,
                    Kw::For | Kw::While => ChainKind::Loop,
                    _ => ChainKind::Try,
                });
                (Some(idx), content_depth + 1, None)
            }
            Kw::Elif => {
                let parent = match (chain_kind, chain_last) {
                    (Some(ChainKind::If), Some(p)) => Some(p),
                    _ => None,
                };
                let depth = parent.map_or(content_depth, |p| self.em.observations[p].depth + 1);
                let idx =
                    self.em.emit(ConstructKind::IfStatement, kw_tok.start, kw_tok.end, depth);
                self.scanner().scan(&mut self.em, head + 1, header_end, depth + 1);
                let top = self.top();
                if parent.is_some() {
                    top.chain.push(idx);
                } else {
                    top.chain = vec![idx];
                    top.chain_kind = Some(ChainKind::If);
                }
                (Some(idx), depth + 1, None)
            }
            Kw::Else => {
                let parent = match chain_kind {
                    Some(ChainKind::If) => chain_last,
                    Some(ChainKind::Loop) | Some(ChainKind::Try) => chain_first,
                    _ => None,
                };
                let depth = parent.map_or(content_depth, |p| self.em.observations[p].depth + 1);
                let idx =
                    self.em.emit(ConstructKind::ElseClause, kw_tok.start, kw_tok.end, depth);
                let top = self.top();
                if parent.is_some() {
                    top.chain.push(idx);
                    if top.chain_kind != Some(ChainKind::Try) {
                        top.chain_kind = Some(ChainKind::Closed);
                    }
                }
                (Some(idx), depth + 1, None)
            }
            Kw::Except => {
                let parent = match chain_kind {
                    Some(ChainKind::Try) => chain_first,
                    _ => None,
                };
                let depth = parent.map_or(content_depth, |p| self.em.observations[p].depth + 1);
                let idx =
                    self.em.emit(ConstructKind::CatchClause, kw_tok.start, kw_tok.end, depth);
                self.scanner().scan(&mut self.em, head + 1, header_end, depth + 1);
                let top = self.top();
                if parent.is_some() {
                    top.chain.push(idx);
                } else {
                    top.chain = vec![idx];
                    top.chain_kind = Some(ChainKind::Try);
                }
                (Some(idx), depth + 1, None)
            }
            Kw::Finally => {
                let parent = match chain_kind {
                    Some(ChainKind::Try) => chain_first,
                    _ => None,
                };
                let depth = parent.map_or(content_depth, |p| self.em.observations[p].depth + 1);
                if let Some(p) = parent {
                    let top = self.top();
                    top.chain_kind = Some(ChainKind::Closed);
                    let _ = top;
                    (Some(p), depth, None)
                } else {
                    (None, content_depth, None)
                }
            }
            Kw::With => {
                self.break_chain();
                self.scanner().scan(&mut self.em, head + 1, header_end, content_depth);
                (None, content_depth, None)
            }
            _ => unreachable!("parse_header called with non-header keyword"),
        };

        // `finally` extends its try but owns no new span start; for the other
        // construct-bearing headers the construct is extended by its suite.
        let inline_start = colon.map(|c| self.first_after(c + 1, line.end)).flatten();
        match inline_start {
            Some(s) => {
                // One-line suite.
                let span_end = self.line_span_end(line);
                let block =
                    self.em.emit(ConstructKind::Block, self.tokens[s].start, span_end, block_depth);
                let _ = block;
                self.parse_inline_suite(s, line.end, block_depth + 1);
                if let Some(c) = construct {
                    self.em.set_end(c, self.em.obs_end(c).max(span_end));
                }
                let chain = self.top().chain.clone();
                for idx in chain {
                    self.em.set_end(idx, self.em.obs_end(idx).max(span_end));
                }
                if let Some(s) = scope {
                    self.em.pop_scope(s, span_end);
                }
            }
            None => {
                // Trailing comments of the header line sit inside the construct.
                for i in header_end..line.end {
                    let t = self.tokens[i];
                    if t.kind == TokenKind::Comment {
                        self.em.emit(ConstructKind::Comment, t.start, t.end, block_depth);
                    }
                }
                self.top().pending = Some(Pending { owner: construct, block_depth, scope });
            }
        }
    }

    /// `def` header: name identifier, parameter list, return annotation.
    fn scan_def_header(&mut self, from: usize, header_end: usize, depth: usize) {
        let mut i = from;
        // Name.
        if let Some(n) = self.first_after(i, header_end) {
            if self.tokens[n].kind == TokenKind::Ident {
                let t = self.tokens[n];
                self.em.emit(ConstructKind::Identifier, t.start, t.end, depth);
                i = n + 1;
            }
        }
        // Parameters.
        if let Some(p) = self.first_after(i, header_end) {
            if self.tokens[p].kind == TokenKind::OpenParen && self.matches[p] != usize::MAX {
                let close = self.matches[p];
                self.parse_parameters(p, close, depth);
                i = close + 1;
            }
        }
        // Return annotation and anything else.
        self.scanner().scan(&mut self.em, i, header_end, depth);
    }

    fn parse_parameters(&mut self, open: usize, close: usize, depth: usize) {
        let mut seg_start = open + 1;
        let mut j = open + 1;
        let mut segments = Vec::new();
        while j < close {
            match self.tokens[j].kind {
                TokenKind::Comma => {
                    segments.push((seg_start, j));
                    seg_start = j + 1;
                    j += 1;
                }
                TokenKind::OpenParen | TokenKind::OpenBracket | TokenKind::OpenBrace
                    if self.matches[j] != usize::MAX =>
                {
                    j = self.matches[j] + 1;
                }
                _ => j += 1,
            }
        }
        segments.push((seg_start, close));
        for (s, e) in segments {
            let Some(first) = self.first_after(s, e) else { continue };
            let last = (s..e)
                .rev()
                .find(|&i| !matches!(self.tokens[i].kind, TokenKind::Comment | TokenKind::Newline))
                .unwrap_or(first);
            // Bare `*` and `/` markers are not parameters.
            if first == last
                && matches!(self.tokens[first].kind, TokenKind::Op("*") | TokenKind::Op("/"))
            {
                continue;
            }
            self.em.emit(
                ConstructKind::Parameter,
                self.tokens[first].start,
                self.tokens[last].end,
                depth,
            );
            self.scanner().scan(&mut self.em, s, e, depth + 1);
        }
    }

    /// Statements of a one-line suite, split on top-level semicolons.
    fn parse_inline_suite(&mut self, from: usize, end: usize, depth: usize) {
        let mut seg_start = from;
        let mut level = 0i32;
        for i in from..end {
            match self.tokens[i].kind {
                TokenKind::OpenParen | TokenKind::OpenBracket | TokenKind::OpenBrace => level += 1,
                TokenKind::CloseParen | TokenKind::CloseBracket | TokenKind::CloseBrace => {
                    level -= 1
                }
                TokenKind::Semicolon if level == 0 => {
                    self.parse_simple_stmt(seg_start, i, depth);
                    seg_start = i + 1;
                }
                _ => {}
            }
        }
        self.parse_simple_stmt(seg_start, end, depth);
    }

    fn parse_simple_line(&mut self, line: Line, _first: usize) {
        self.break_chain();
        let depth = self.top().content_depth;
        self.parse_inline_suite(line.start, line.end, depth);
    }

    fn parse_simple_stmt(&mut self, from: usize, end: usize, depth: usize) {
        let Some(first) = self.first_after(from, end) else {
            // Only comments in this segment.
            for i in from..end {
                let t = self.tokens[i];
                if t.kind == TokenKind::Comment {
                    self.em.emit(ConstructKind::Comment, t.start, t.end, depth);
                }
            }
            return;
        };
        // Leading comments are statement siblings.
        for i in from..first {
            let t = self.tokens[i];
            if t.kind == TokenKind::Comment {
                self.em.emit(ConstructKind::Comment, t.start, t.end, depth);
            }
        }
        let jump = match self.tokens[first].kind {
            TokenKind::Keyword(Kw::Return) => Some(ConstructKind::ReturnStatement),
            TokenKind::Keyword(Kw::Break) => Some(ConstructKind::BreakStatement),
            TokenKind::Keyword(Kw::Continue) => Some(ConstructKind::ContinueStatement),
            _ => None,
        };
        let last = (from..end)
            .rev()
            .find(|&i| !matches!(self.tokens[i].kind, TokenKind::Comment | TokenKind::Newline))
            .unwrap_or(first);
        match jump {
            Some(kind) => {
                let t = self.tokens[first];
                let obs = self.em.emit(kind, t.start, t.end, depth);
                self.em.set_end(obs, self.tokens[last].end);
                self.scanner().scan(&mut self.em, first + 1, last + 1, depth + 1);
                for i in last + 1..end {
                    let t = self.tokens[i];
                    if t.kind == TokenKind::Comment {
                        self.em.emit(ConstructKind::Comment, t.start, t.end, depth);
                    }
                }
            }
            None => {
                self.scanner().scan(&mut self.em, first, end, depth);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extractor::emit::ConstructObservation;

    fn parse(src: &str) -> Vec<ConstructObservation> {
        let chars: Vec<char> = src.chars().collect();
        parse_python(&chars).unwrap().observations
    }

    fn find<'a>(
        obs: &'a [ConstructObservation],
        kind: ConstructKind,
    ) -> Vec<&'a ConstructObservation> {
        obs.iter().filter(|o| o.kind == kind).collect()
    }

    #[test]
    fn comment_and_identifier() {
        let obs = parse("# note\nx = 1\n");
        let comments = find(&obs, ConstructKind::Comment);
        let idents = find(&obs, ConstructKind::Identifier);
        assert_eq!(comments.len(), 1);
        assert_eq!(idents.len(), 1);
        assert_eq!(idents[0].length, 1);
        assert_eq!(comments[0].length, 6);
        assert_eq!(comments[0].depth, 0);
    }

    #[test]
    fn def_with_suite() {
        let src = "def f(a, b):\n    return a + b\n";
        let obs = parse(src);
        let funcs = find(&obs, ConstructKind::FunctionDefinition);
        assert_eq!(funcs.len(), 1);
        assert_eq!(funcs[0].depth, 0);
        assert_eq!(funcs[0].start, 0);
        // span through `return a + b`
        let text: String = src.chars().skip(funcs[0].start).take(funcs[0].length).collect();
        assert_eq!(text, "def f(a, b):\n    return a + b");
        assert_eq!(find(&obs, ConstructKind::Parameter).len(), 2);
        let blocks = find(&obs, ConstructKind::Block);
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].depth, 1);
        let rets = find(&obs, ConstructKind::ReturnStatement);
        assert_eq!(rets[0].depth, 2);
    }

    #[test]
    fn elif_nests_inside_if() {
        let src = "if a:\n    x = 1\nelif b:\n    y = 2\nelse:\n    z = 3\n";
        let obs = parse(src);
        let ifs = find(&obs, ConstructKind::IfStatement);
        assert_eq!(ifs.len(), 2);
        assert_eq!(ifs[0].depth, 0);
        assert_eq!(ifs[1].depth, 1);
        let elses = find(&obs, ConstructKind::ElseClause);
        assert_eq!(elses.len(), 1);
        assert_eq!(elses[0].depth, 2);
        // the outer if spans the whole chain
        assert_eq!(ifs[0].end(), elses[0].end());
        assert!(ifs[1].start > ifs[0].start && ifs[1].end() <= ifs[0].end());
    }

    #[test]
    fn try_except_finally() {
        let src = "try:\n    f()\nexcept ValueError as e:\n    g()\nfinally:\n    h()\n";
        let obs = parse(src);
        let tries = find(&obs, ConstructKind::TryBlock);
        let catches = find(&obs, ConstructKind::CatchClause);
        assert_eq!(tries.len(), 1);
        assert_eq!(catches.len(), 1);
        assert_eq!(catches[0].depth, tries[0].depth + 1);
        // try extends through the finally suite
        let text: String = src.chars().skip(tries[0].start).take(tries[0].length).collect();
        assert!(text.ends_with("h()"));
        // three suites -> three blocks
        assert_eq!(find(&obs, ConstructKind::Block).len(), 3);
    }

    #[test]
    fn inline_suite() {
        let obs = parse("if x: y = 1\n");
        let ifs = find(&obs, ConstructKind::IfStatement);
        let blocks = find(&obs, ConstructKind::Block);
        assert_eq!(ifs.len(), 1);
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].depth, 1);
        let y = obs
            .iter()
            .find(|o| o.kind == ConstructKind::Identifier && o.start > 4)
            .unwrap();
        assert_eq!(y.depth, 2);
    }

    #[test]
    fn nested_defs_and_scopes() {
        let src = "def outer():\n    def inner():\n        return 1\n    return inner\n";
        let chars: Vec<char> = src.chars().collect();
        let out = parse_python(&chars).unwrap();
        let funcs = find(&out.observations, ConstructKind::FunctionDefinition);
        assert_eq!(funcs.len(), 2);
        assert_eq!(funcs[0].enclosing_function, None);
        assert_eq!(funcs[1].enclosing_function, Some(0));
        assert_eq!(out.scopes.len(), 2);
    }

    #[test]
    fn class_with_method() {
        let src = "class A:\n    def m(self):\n        return 1\n";
        let chars: Vec<char> = src.chars().collect();
        let out = parse_python(&chars).unwrap();
        let obs = &out.observations;
        assert_eq!(find(obs, ConstructKind::ClassDefinition).len(), 1);
        assert_eq!(find(obs, ConstructKind::FunctionDefinition).len(), 1);
        // self is a parameter
        assert_eq!(find(obs, ConstructKind::Parameter).len(), 1);
        let m = obs.iter().find(|o| o.kind == ConstructKind::FunctionDefinition).unwrap();
        assert_eq!(m.enclosing_class, Some(0));
    }

    #[test]
    fn loop_else_and_operators() {
        let src = "for i in xs:\n    if i % 2 == 0:\n        break\nelse:\n    pass\n";
        let obs = parse(src);
        let fors = find(&obs, ConstructKind::ForLoop);
        let elses = find(&obs, ConstructKind::ElseClause);
        assert_eq!(fors.len(), 1);
        assert_eq!(elses.len(), 1);
        assert_eq!(elses[0].depth, fors[0].depth + 1);
        // `in`, `%`, `==` are binary operators
        assert_eq!(find(&obs, ConstructKind::BinaryOperator).len(), 3);
        assert_eq!(find(&obs, ConstructKind::BreakStatement).len(), 1);
    }

    #[test]
    fn unbalanced_brackets_fail() {
        let chars: Vec<char> = "x = (1 + 2\n".chars().collect();
        assert!(parse_python(&chars).is_err());
    }

    #[test]
    fn fstring_interior_not_scanned() {
        let obs = parse("s = f\"{a + b}\"\n");
        assert_eq!(find(&obs, ConstructKind::StringLiteral).len(), 1);
        // only `s` is an identifier; the interior names are opaque
        assert_eq!(find(&obs, ConstructKind::Identifier).len(), 1);
        assert_eq!(find(&obs, ConstructKind::BinaryOperator).len(), 1); // the `=`
    }

    #[test]
    fn decorator_line() {
        let obs = parse("@wraps(f)\ndef g():\n    pass\n");
        assert_eq!(find(&obs, ConstructKind::FunctionDefinition).len(), 1);
        assert_eq!(find(&obs, ConstructKind::CallExpression).len(), 1);
    }
}
