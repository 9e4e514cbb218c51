//! Construct nester for C, C++, and Java.
//!
//! Span conventions (all in chars):
//! - function-definition: from the name identifier through the closing `}`;
//! - class-definition: from the `class`/`struct`/`interface`/`enum` keyword
//!   through the closing `}` (the trailing `;` is excluded);
//! - if-statement: from `if` through the end of its controlled statement,
//!   including an attached else chain; else-clause nests inside its if;
//! - for/while: keyword through the controlled statement; do-while: `do`
//!   through the `;` after the trailing condition;
//! - try-block: `try` through the end of the last catch/finally clause;
//!   catch-clause nests inside it;
//! - return/break/continue: keyword through the terminating `;`;
//! - every balanced `{...}` is a block;
//! - parameter: each comma-separated segment of a definition's header parens
//!   (a lone `void` counts as zero parameters).
//!
//! Function definitions are detected by the `ident (...)` header pattern
//! followed by `{` with only header-like tokens in between, which also covers
//! constructor initializer lists and `throws` clauses. Declarations that end
//! in `;` fall through to expression scanning, so prototypes register their
//! header as a call-expression; that trade-off keeps the nester grammarless
//! and deterministic.

use super::emit::{match_delims, Emitter, ExprScanner, ScopeKind};
use super::lexer::{lex_cfamily, Kw, Token, TokenKind};
use super::ParseOutput;
use crate::taxonomy::{ConstructKind, Language};

pub fn parse_cfamily(src: &[char], lang: Language) -> Result<ParseOutput, String> {
    let tokens = lex_cfamily(src, lang);
    let matches = match_delims(&tokens, true)?;
    let mut parser = CfParser {
        tokens: &tokens,
        matches: &matches,
        lang,
        em: Emitter::new(),
    };
    parser.parse_statements(0, tokens.len(), 0);
    let (observations, scopes) = parser.em.finish();
    Ok(ParseOutput { observations, scopes })
}

struct CfParser<'a> {
    tokens: &'a [Token],
    matches: &'a [usize],
    lang: Language,
    em: Emitter,
}

impl<'a> CfParser<'a> {
    fn scanner(&self) -> ExprScanner<'a> {
        ExprScanner { tokens: self.tokens, matches: self.matches, lang: self.lang }
    }

    fn tok_end(&self, i: usize) -> usize {
        self.tokens[i].end
    }

    /// End of the token just before index `i` (callers guarantee i > 0).
    fn prev_end(&self, i: usize) -> usize {
        self.tokens[i - 1].end
    }

    fn parse_statements(&mut self, start: usize, end: usize, depth: usize) {
        let mut i = start;
        while i < end {
            i = self.parse_statement(i, end, depth);
        }
    }

    fn parse_statement(&mut self, i: usize, end: usize, depth: usize) -> usize {
        let t = &self.tokens[i];
        match t.kind {
            TokenKind::Comment => {
                self.em.emit(ConstructKind::Comment, t.start, t.end, depth);
                i + 1
            }
            TokenKind::Preproc | TokenKind::Semicolon | TokenKind::Unknown | TokenKind::At => i + 1,
            TokenKind::Keyword(Kw::If) => self.parse_if(i, end, depth),
            TokenKind::Keyword(Kw::Else) => self.parse_else(i, end, depth),
            TokenKind::Keyword(Kw::For) => {
                self.parse_control(i, end, depth, ConstructKind::ForLoop)
            }
            TokenKind::Keyword(Kw::While) => {
                self.parse_control(i, end, depth, ConstructKind::WhileLoop)
            }
            TokenKind::Keyword(Kw::Switch) => {
                self.parse_control(i, end, depth, ConstructKind::SwitchStatement)
            }
            TokenKind::Keyword(Kw::Do) => self.parse_do(i, end, depth),
            TokenKind::Keyword(Kw::Try) => self.parse_try(i, end, depth),
            TokenKind::Keyword(Kw::Catch) => self.parse_catch(i, end, depth),
            TokenKind::Keyword(Kw::Return) => {
                self.parse_jump(i, end, depth, ConstructKind::ReturnStatement)
            }
            TokenKind::Keyword(Kw::Break) => {
                self.parse_jump(i, end, depth, ConstructKind::BreakStatement)
            }
            TokenKind::Keyword(Kw::Continue) => {
                self.parse_jump(i, end, depth, ConstructKind::ContinueStatement)
            }
            TokenKind::Keyword(Kw::Case) => {
                // `case expr:` — scan the constant, skip the colon.
                let mut j = i + 1;
                while j < end
                    && !matches!(self.tokens[j].kind, TokenKind::Colon | TokenKind::Semicolon)
                {
                    j = self.skip_group(j);
                }
                self.scanner().scan(&mut self.em, i + 1, j.min(end), depth);
                (j + 1).min(end)
            }
            TokenKind::Keyword(Kw::Default) => {
                let mut j = i + 1;
                while j < end && self.tokens[j].kind != TokenKind::Colon {
                    j += 1;
                }
                (j + 1).min(end)
            }
            TokenKind::Keyword(kw) if self.is_class_head(i, kw) => self.parse_class(i, end, depth),
            TokenKind::OpenBrace => self.parse_block(i, depth),
            TokenKind::CloseBrace => i + 1,
            _ => self.parse_simple(i, end, depth),
        }
    }

    fn is_class_head(&self, i: usize, kw: Kw) -> bool {
        let head = match self.lang {
            Language::Cpp => matches!(kw, Kw::Class | Kw::Struct),
            Language::Java => matches!(kw, Kw::Class | Kw::Interface | Kw::Enum),
            // C structs/enums are not classes; Python never reaches here.
            _ => false,
        };
        if !head {
            return false;
        }
        // `enum class` in C++ is an enum, not a class definition.
        if self.lang == Language::Cpp && i > 0 {
            if let TokenKind::Keyword(Kw::Enum) = self.tokens[i - 1].kind {
                return false;
            }
        }
        true
    }

    /// Advances past one token, or past a whole delimiter group.
    fn skip_group(&self, i: usize) -> usize {
        match self.tokens[i].kind {
            TokenKind::OpenParen | TokenKind::OpenBracket | TokenKind::OpenBrace
                if self.matches[i] != usize::MAX =>
            {
                self.matches[i] + 1
            }
            _ => i + 1,
        }
    }

    fn skip_comments(&self, mut i: usize, end: usize) -> usize {
        while i < end && self.tokens[i].kind == TokenKind::Comment {
            i += 1;
        }
        i
    }

    /// Emits comment observations for tokens in `[from, to)` at `depth`.
    fn emit_comments(&mut self, from: usize, to: usize, depth: usize) {
        for j in from..to {
            let t = &self.tokens[j];
            if t.kind == TokenKind::Comment {
                self.em.emit(ConstructKind::Comment, t.start, t.end, depth);
            }
        }
    }

    /// Parses the parenthesized condition right after a control keyword, if
    /// present, scanning its content one level deeper. Returns the index
    /// following the condition.
    fn parse_condition(&mut self, i: usize, end: usize, depth: usize) -> usize {
        if i < end && self.tokens[i].kind == TokenKind::OpenParen && self.matches[i] != usize::MAX
        {
            let close = self.matches[i];
            self.scanner().scan(&mut self.em, i + 1, close, depth + 1);
            close + 1
        } else {
            i
        }
    }

    /// Controlled statement of a control construct: a block or one statement.
    fn parse_controlled(&mut self, i: usize, end: usize, depth: usize) -> usize {
        if i >= end {
            return i;
        }
        if self.tokens[i].kind == TokenKind::OpenBrace {
            self.parse_block(i, depth)
        } else {
            self.parse_statement(i, end, depth)
        }
    }

    fn parse_block(&mut self, i: usize, depth: usize) -> usize {
        let close = self.matches[i];
        debug_assert_ne!(close, usize::MAX);
        self.em.emit(
            ConstructKind::Block,
            self.tokens[i].start,
            self.tokens[close].end,
            depth,
        );
        self.parse_statements(i + 1, close, depth + 1);
        close + 1
    }

    fn parse_if(&mut self, i: usize, end: usize, depth: usize) -> usize {
        let obs = self.em.emit(ConstructKind::IfStatement, self.tokens[i].start, self.tokens[i].end, depth);
        let mut j = self.parse_condition(i + 1, end, depth);
        j = self.parse_controlled(j, end, depth + 1);
        // An attached else belongs inside this if; so do comments before it.
        let k = self.skip_comments(j, end);
        if k < end && self.tokens[k].kind == TokenKind::Keyword(Kw::Else) {
            self.emit_comments(j, k, depth + 1);
            j = self.parse_else(k, end, depth + 1);
        }
        if j > i {
            self.em.set_end(obs, self.prev_end(j));
        }
        j
    }

    fn parse_else(&mut self, i: usize, end: usize, depth: usize) -> usize {
        let obs = self.em.emit(ConstructKind::ElseClause, self.tokens[i].start, self.tokens[i].end, depth);
        let j = self.parse_controlled(i + 1, end, depth + 1);
        if j > i {
            self.em.set_end(obs, self.prev_end(j));
        }
        j
    }

    fn parse_control(&mut self, i: usize, end: usize, depth: usize, kind: ConstructKind) -> usize {
        let obs = self.em.emit(kind, self.tokens[i].start, self.tokens[i].end, depth);
        let mut j = self.parse_condition(i + 1, end, depth);
        j = self.parse_controlled(j, end, depth + 1);
        if j > i {
            self.em.set_end(obs, self.prev_end(j));
        }
        j
    }

    fn parse_do(&mut self, i: usize, end: usize, depth: usize) -> usize {
        let obs = self.em.emit(ConstructKind::DoWhileLoop, self.tokens[i].start, self.tokens[i].end, depth);
        let mut j = self.parse_controlled(i + 1, end, depth + 1);
        let k = self.skip_comments(j, end);
        if k < end && self.tokens[k].kind == TokenKind::Keyword(Kw::While) {
            self.emit_comments(j, k, depth + 1);
            j = self.parse_condition(k + 1, end, depth);
            if j < end && self.tokens[j].kind == TokenKind::Semicolon {
                j += 1;
            }
        }
        if j > i {
            self.em.set_end(obs, self.prev_end(j));
        }
        j
    }

    fn parse_try(&mut self, i: usize, end: usize, depth: usize) -> usize {
        let obs = self.em.emit(ConstructKind::TryBlock, self.tokens[i].start, self.tokens[i].end, depth);
        let mut j = i + 1;
        // Java try-with-resources: `try (...) {`.
        j = self.parse_condition(j, end, depth);
        j = self.parse_controlled(j, end, depth + 1);
        loop {
            let k = self.skip_comments(j, end);
            if k < end && self.tokens[k].kind == TokenKind::Keyword(Kw::Catch) {
                self.emit_comments(j, k, depth + 1);
                j = self.parse_catch(k, end, depth + 1);
            } else if k < end && self.tokens[k].kind == TokenKind::Keyword(Kw::Finally) {
                self.emit_comments(j, k, depth + 1);
                j = self.parse_controlled(k + 1, end, depth + 1);
            } else {
                break;
            }
        }
        if j > i {
            self.em.set_end(obs, self.prev_end(j));
        }
        j
    }

    fn parse_catch(&mut self, i: usize, end: usize, depth: usize) -> usize {
        let obs = self.em.emit(ConstructKind::CatchClause, self.tokens[i].start, self.tokens[i].end, depth);
        let mut j = self.parse_condition(i + 1, end, depth);
        j = self.parse_controlled(j, end, depth + 1);
        if j > i {
            self.em.set_end(obs, self.prev_end(j));
        }
        j
    }

    fn parse_jump(&mut self, i: usize, end: usize, depth: usize, kind: ConstructKind) -> usize {
        let mut j = i + 1;
        while j < end && self.tokens[j].kind != TokenKind::Semicolon {
            if self.tokens[j].kind == TokenKind::CloseBrace {
                break;
            }
            j = self.skip_group(j);
        }
        let span_end = if j < end && self.tokens[j].kind == TokenKind::Semicolon {
            let e = self.tok_end(j);
            j += 1;
            e
        } else {
            self.prev_end(j.max(i + 1))
        };
        let obs = self.em.emit(kind, self.tokens[i].start, self.tokens[i].end, depth);
        self.em.set_end(obs, span_end);
        // Statement payload (e.g. the returned expression) is one level deeper.
        let payload_end = if j > i + 1 && self.tokens[j - 1].kind == TokenKind::Semicolon {
            j - 1
        } else {
            j
        };
        self.scanner().scan(&mut self.em, i + 1, payload_end, depth + 1);
        j
    }

    fn parse_class(&mut self, i: usize, end: usize, depth: usize) -> usize {
        // Find the body brace; bail to a simple statement when the head is a
        // declaration or a variable of struct type.
        let mut j = i + 1;
        let mut brace = None;
        while j < end {
            match self.tokens[j].kind {
                TokenKind::OpenBrace => {
                    brace = Some(j);
                    break;
                }
                TokenKind::Semicolon | TokenKind::CloseBrace | TokenKind::OpenParen => break,
                TokenKind::Op("=") => break,
                _ => j = self.skip_group(j),
            }
        }
        let Some(b) = brace else {
            return self.parse_simple(i, end, depth);
        };
        let close = self.matches[b];
        let obs = self.em.emit(
            ConstructKind::ClassDefinition,
            self.tokens[i].start,
            self.tokens[close].end,
            depth,
        );
        let _ = obs;
        let scope = self.em.push_scope(ScopeKind::Class, self.tokens[i].start);
        // Header: name, bases, interfaces.
        self.scanner().scan(&mut self.em, i + 1, b, depth + 1);
        self.parse_block(b, depth + 1);
        self.em.pop_scope(scope, self.tokens[close].end);
        close + 1
    }

    /// Tokens allowed between a header's `)` and the body `{` of a function
    /// definition: modifiers, `throws` lists, constructor initializers (their
    /// paren groups are skipped whole), reference markers, trailing return
    /// types.
    fn header_tail_allows_body(&self, mut j: usize, brace: usize) -> bool {
        while j < brace {
            match self.tokens[j].kind {
                TokenKind::Ident
                | TokenKind::Keyword(_)
                | TokenKind::Colon
                | TokenKind::Comma
                | TokenKind::Scope
                | TokenKind::Arrow
                | TokenKind::Comment
                | TokenKind::Op("&")
                | TokenKind::Op("*") => j += 1,
                TokenKind::OpenParen | TokenKind::OpenBracket => {
                    let close = self.matches[j];
                    if close == usize::MAX || close > brace {
                        return false;
                    }
                    j = close + 1;
                }
                _ => return false,
            }
        }
        true
    }

    /// Declarations, expressions, and function definitions.
    fn parse_simple(&mut self, i: usize, end: usize, depth: usize) -> usize {
        let mut j = i;
        // (name index, open paren index, close paren index)
        let mut candidates: Vec<(usize, usize, usize)> = Vec::new();
        while j < end {
            match self.tokens[j].kind {
                TokenKind::Semicolon => {
                    self.scanner().scan(&mut self.em, i, j, depth);
                    return j + 1;
                }
                TokenKind::CloseBrace => {
                    self.scanner().scan(&mut self.em, i, j, depth);
                    return j;
                }
                TokenKind::Keyword(
                    Kw::If
                    | Kw::Else
                    | Kw::For
                    | Kw::While
                    | Kw::Do
                    | Kw::Switch
                    | Kw::Try
                    | Kw::Catch
                    | Kw::Return
                    | Kw::Break
                    | Kw::Continue
                    | Kw::Case
                    | Kw::Default,
                ) => {
                    // Control keyword mid-scan: close the segment and let the
                    // statement dispatcher handle it.
                    self.scanner().scan(&mut self.em, i, j, depth);
                    return j;
                }
                TokenKind::OpenParen => {
                    let close = self.matches[j];
                    if close == usize::MAX || close >= end {
                        j += 1;
                        continue;
                    }
                    if j > i && self.tokens[j - 1].kind == TokenKind::Ident {
                        candidates.push((j - 1, j, close));
                    }
                    j = close + 1;
                }
                TokenKind::OpenBracket | TokenKind::OpenBrace
                    if self.tokens[j].kind == TokenKind::OpenBracket =>
                {
                    j = self.skip_group(j);
                }
                TokenKind::OpenBrace => {
                    // Function definition if some ident(...) header reaches
                    // this brace through allowed tokens only.
                    let header = candidates
                        .iter()
                        .find(|(_, _, close)| self.header_tail_allows_body(close + 1, j))
                        .copied();
                    if let Some((name, open, close)) = header {
                        return self.parse_function_def(i, name, open, close, j, depth);
                    }
                    // Brace initializer inside a statement.
                    self.scanner().scan(&mut self.em, i, j, depth);
                    let close = self.matches[j];
                    self.em.emit(
                        ConstructKind::Block,
                        self.tokens[j].start,
                        self.tokens[close].end,
                        depth,
                    );
                    self.parse_statements(j + 1, close, depth + 1);
                    // Continue the statement after the brace group.
                    let rest = close + 1;
                    let mut k = rest;
                    while k < end
                        && !matches!(
                            self.tokens[k].kind,
                            TokenKind::Semicolon | TokenKind::CloseBrace
                        )
                    {
                        k = self.skip_group(k);
                    }
                    self.scanner().scan(&mut self.em, rest, k, depth);
                    if k < end && self.tokens[k].kind == TokenKind::Semicolon {
                        return k + 1;
                    }
                    return k;
                }
                _ => j += 1,
            }
        }
        self.scanner().scan(&mut self.em, i, end, depth);
        end
    }

    fn parse_function_def(
        &mut self,
        seg_start: usize,
        name: usize,
        open: usize,
        close: usize,
        brace: usize,
        depth: usize,
    ) -> usize {
        let body_close = self.matches[brace];
        let name_tok = &self.tokens[name];
        self.em.emit(
            ConstructKind::FunctionDefinition,
            name_tok.start,
            self.tokens[body_close].end,
            depth,
        );
        let scope = self.em.push_scope(ScopeKind::Function, name_tok.start);
        // Leading segment (return type, modifiers) sits outside the span.
        self.scanner().scan(&mut self.em, seg_start, name, depth);
        self.em.emit(ConstructKind::Identifier, name_tok.start, name_tok.end, depth + 1);
        self.parse_parameters(open, close, depth + 1);
        // Header tail: const/throws/ctor-initializers, scanned inside the span.
        self.scanner().scan(&mut self.em, close + 1, brace, depth + 1);
        self.parse_block(brace, depth + 1);
        self.em.pop_scope(scope, self.tokens[body_close].end);
        body_close + 1
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
                _ => j = self.skip_group(j),
            }
        }
        segments.push((seg_start, close));
        for (s, e) in segments {
            if s >= e {
                continue;
            }
            // `f(void)` declares zero parameters.
            if e - s == 1 && self.tokens[s].kind == TokenKind::Keyword(Kw::Void) {
                continue;
            }
            self.em.emit(
                ConstructKind::Parameter,
                self.tokens[s].start,
                self.tokens[e - 1].end,
                depth,
            );
            self.scanner().scan(&mut self.em, s, e, depth + 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extractor::emit::ConstructObservation;

    fn parse(src: &str, lang: Language) -> Vec<ConstructObservation> {
        let chars: Vec<char> = src.chars().collect();
        parse_cfamily(&chars, lang).unwrap().observations
    }

    fn find<'a>(
        obs: &'a [ConstructObservation],
        kind: ConstructKind,
    ) -> Vec<&'a ConstructObservation> {
        obs.iter().filter(|o| o.kind == kind).collect()
    }

    #[test]
    fn nested_ifs_function_at_root() {
        let obs = parse("int f(){ if(x){ if(y){} } }", Language::C);
        let funcs = find(&obs, ConstructKind::FunctionDefinition);
        assert_eq!(funcs.len(), 1);
        assert_eq!(funcs[0].depth, 0);
        // span: from `f` through the final `}`
        assert_eq!(funcs[0].start, 4);
        assert_eq!(funcs[0].end(), 27);
        let ifs = find(&obs, ConstructKind::IfStatement);
        assert_eq!(ifs.len(), 2);
        assert!(ifs[1].depth > ifs[0].depth);
        assert!(ifs[1].start > ifs[0].start && ifs[1].end() < ifs[0].end());
    }

    #[test]
    fn else_nests_inside_if() {
        let obs = parse("void f(){ if(a){x;}else{y;} }", Language::C);
        let ifs = find(&obs, ConstructKind::IfStatement);
        let elses = find(&obs, ConstructKind::ElseClause);
        assert_eq!(elses.len(), 1);
        assert_eq!(elses[0].depth, ifs[0].depth + 1);
        assert_eq!(ifs[0].end(), elses[0].end());
    }

    #[test]
    fn do_while_span_includes_trailing_semicolon() {
        let src = "void f(){ do { x; } while (x > 0); }";
        let obs = parse(src, Language::C);
        let dows = find(&obs, ConstructKind::DoWhileLoop);
        assert_eq!(dows.len(), 1);
        let text: String = src.chars().skip(dows[0].start).take(dows[0].length).collect();
        assert_eq!(text, "do { x; } while (x > 0);");
        assert!(find(&obs, ConstructKind::WhileLoop).is_empty());
    }

    #[test]
    fn try_catch_java() {
        let src = "class A { void m() { try { f(); } catch (E e) { g(); } } }";
        let obs = parse(src, Language::Java);
        let tries = find(&obs, ConstructKind::TryBlock);
        let catches = find(&obs, ConstructKind::CatchClause);
        assert_eq!(tries.len(), 1);
        assert_eq!(catches.len(), 1);
        assert_eq!(catches[0].depth, tries[0].depth + 1);
        assert_eq!(tries[0].end(), catches[0].end());
        let classes = find(&obs, ConstructKind::ClassDefinition);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].depth, 0);
    }

    #[test]
    fn parameters_counted_and_void_elided() {
        let obs = parse("int add(int a, int b){ return a + b; }", Language::C);
        assert_eq!(find(&obs, ConstructKind::Parameter).len(), 2);
        let obs2 = parse("int zero(void){ return 0; }", Language::C);
        assert_eq!(find(&obs2, ConstructKind::Parameter).len(), 0);
    }

    #[test]
    fn return_statement_span_and_payload_depth() {
        let src = "int f(){ return g(1); }";
        let obs = parse(src, Language::C);
        let rets = find(&obs, ConstructKind::ReturnStatement);
        assert_eq!(rets.len(), 1);
        let text: String = src.chars().skip(rets[0].start).take(rets[0].length).collect();
        assert_eq!(text, "return g(1);");
        let calls = find(&obs, ConstructKind::CallExpression);
        assert_eq!(calls.len(), 1);
        assert_eq!(calls[0].depth, rets[0].depth + 1);
    }

    #[test]
    fn unbalanced_braces_fail() {
        let chars: Vec<char> = "int f(){ if(x){ }".chars().collect();
        assert!(parse_cfamily(&chars, Language::C).is_err());
    }

    #[test]
    fn enclosing_scopes_assigned() {
        let src = "class A { void m() { x; } }";
        let out = {
            let chars: Vec<char> = src.chars().collect();
            parse_cfamily(&chars, Language::Java).unwrap()
        };
        assert_eq!(out.scopes.len(), 2);
        let cls = out.scopes.iter().find(|s| s.kind == ScopeKind::Class).unwrap();
        let func = out.scopes.iter().find(|s| s.kind == ScopeKind::Function).unwrap();
        assert_eq!(func.enclosing_class, Some(cls.id));
        let x = out
            .observations
            .iter()
            .find(|o| o.kind == ConstructKind::Identifier && o.length == 1)
            .unwrap();
        assert_eq!(x.enclosing_function, Some(func.id));
        assert_eq!(x.enclosing_class, Some(cls.id));
        // The method's own observation carries only the class.
        let m = out
            .observations
            .iter()
            .find(|o| o.kind == ConstructKind::FunctionDefinition)
            .unwrap();
        assert_eq!(m.enclosing_function, None);
        assert_eq!(m.enclosing_class, Some(cls.id));
    }

    #[test]
    fn switch_with_cases() {
        let src = "void f(){ switch(x){ case 1: a; break; default: b; } }";
        let obs = parse(src, Language::C);
        assert_eq!(find(&obs, ConstructKind::SwitchStatement).len(), 1);
        assert_eq!(find(&obs, ConstructKind::BreakStatement).len(), 1);
        assert_eq!(find(&obs, ConstructKind::NumericLiteral).len(), 1);
    }

    #[test]
    fn cpp_class_with_ctor_initializer() {
        let src = "class P { public: P(int x) : x_(x) {} int x_; };";
        let obs = parse(src, Language::Cpp);
        assert_eq!(find(&obs, ConstructKind::ClassDefinition).len(), 1);
        assert_eq!(find(&obs, ConstructKind::FunctionDefinition).len(), 1);
        assert_eq!(find(&obs, ConstructKind::Parameter).len(), 1);
    }

    #[test]
    fn comments_interleaved() {
        let src = "/* head */ int f(){ // body\n return 1; }";
        let obs = parse(src, Language::C);
        let comments = find(&obs, ConstructKind::Comment);
        assert_eq!(comments.len(), 2);
        assert_eq!(comments[0].depth, 0);
        assert!(comments[1].depth > 0);
    }
}
