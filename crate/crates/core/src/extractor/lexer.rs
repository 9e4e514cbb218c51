//! Language-aware tokenizers for the construct nesters.
//!
//! Both lexers work over a char slice and report spans as char offsets, so
//! construct lengths are character counts. Comment and string interiors are
//! captured as single tokens and never re-scanned. C-family preprocessor
//! directive lines are consumed whole (with backslash continuations) and
//! produce a single `Preproc` token that the nesters ignore.

use crate::taxonomy::Language;

/// Dispatch-relevant keywords. Everything else reserved maps to `Other`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kw {
    If,
    Else,
    For,
    While,
    Do,
    Switch,
    Case,
    Default,
    Try,
    Catch,
    Finally,
    Return,
    Break,
    Continue,
    Class,
    Struct,
    Interface,
    Enum,
    Def,
    Elif,
    Except,
    With,
    Async,
    Lambda,
    And,
    Or,
    Not,
    In,
    Is,
    Void,
    /// Operand-like keywords: `true`, `false`, `null`, `nullptr`, `None`, `this`.
    Operand,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Keyword(Kw),
    Number,
    Str,
    Comment,
    /// Counted operator; the static str is the operator spelling.
    Op(&'static str),
    OpenParen,
    CloseParen,
    OpenBracket,
    CloseBracket,
    OpenBrace,
    CloseBrace,
    Comma,
    Semicolon,
    Colon,
    Dot,
    /// `->` in C-family / Python annotations; not counted as an operator.
    Arrow,
    /// `::` scope resolution.
    Scope,
    Question,
    At,
    Ellipsis,
    /// A whole C-family preprocessor directive line.
    Preproc,
    /// Physical end of line (Python lexer only, outside strings).
    Newline,
    Unknown,
}

#[derive(Debug, Clone, Copy)]
pub struct Token {
    pub kind: TokenKind,
    /// Char offset of the first char.
    pub start: usize,
    /// Char offset one past the last char.
    pub end: usize,
    pub line: u32,
    /// Column of the first char with tabs expanded to 8 (Python indentation).
    pub col: u32,
}

impl Token {
    pub fn text(&self, src: &[char]) -> String {
        src[self.start..self.end].iter().collect()
    }
}

fn lookup_keyword(lang: Language, word: &str) -> Option<Kw> {
    let common = |w: &str| -> Option<Kw> {
        Some(match w {
            "if" => Kw::If,
            "else" => Kw::Else,
            "for" => Kw::For,
            "while" => Kw::While,
            "return" => Kw::Return,
            "break" => Kw::Break,
            "continue" => Kw::Continue,
            _ => return None,
        })
    };
    match lang {
        Language::C => {
            if let Some(kw) = common(word) {
                return Some(kw);
            }
            Some(match word {
                "do" => Kw::Do,
                "switch" => Kw::Switch,
                "case" => Kw::Case,
                "default" => Kw::Default,
                "struct" => Kw::Struct,
                "enum" => Kw::Enum,
                "void" => Kw::Void,
                "auto" | "char" | "const" | "double" | "extern" | "float" | "goto" | "inline"
                | "int" | "long" | "register" | "restrict" | "short" | "signed" | "sizeof"
                | "static" | "typedef" | "union" | "unsigned" | "volatile" | "_Bool"
                | "_Complex" | "_Imaginary" | "_Atomic" | "_Noreturn" | "_Thread_local"
                | "_Static_assert" | "_Alignas" | "_Alignof" => Kw::Other,
                _ => return None,
            })
        }
        Language::Cpp => {
            if let Some(kw) = lookup_keyword(Language::C, word) {
                return Some(kw);
            }
            Some(match word {
                "class" => Kw::Class,
                "try" => Kw::Try,
                "catch" => Kw::Catch,
                "true" | "false" | "nullptr" | "this" => Kw::Operand,
                "and" => Kw::And,
                "or" => Kw::Or,
                "not" => Kw::Not,
                "alignas" | "alignof" | "asm" | "bool" | "char8_t" | "char16_t" | "char32_t"
                | "compl" | "concept" | "consteval" | "constexpr" | "constinit" | "const_cast"
                | "co_await" | "co_return" | "co_yield" | "decltype" | "delete"
                | "dynamic_cast" | "explicit" | "export" | "final" | "friend" | "mutable"
                | "namespace" | "new" | "noexcept" | "operator" | "override" | "private"
                | "protected" | "public" | "reinterpret_cast" | "requires" | "static_assert"
                | "static_cast" | "template" | "thread_local" | "throw" | "typeid"
                | "typename" | "using" | "virtual" | "wchar_t" => Kw::Other,
                _ => return None,
            })
        }
        Language::Java => {
            if let Some(kw) = common(word) {
                return Some(kw);
            }
            Some(match word {
                "do" => Kw::Do,
                "switch" => Kw::Switch,
                "case" => Kw::Case,
                "default" => Kw::Default,
                "class" => Kw::Class,
                "interface" => Kw::Interface,
                "enum" => Kw::Enum,
                "try" => Kw::Try,
                "catch" => Kw::Catch,
                "finally" => Kw::Finally,
                "void" => Kw::Void,
                "true" | "false" | "null" | "this" => Kw::Operand,
                "instanceof" => Kw::Is,
                "abstract" | "assert" | "boolean" | "byte" | "char" | "const" | "double"
                | "extends" | "final" | "float" | "goto" | "implements" | "import" | "int"
                | "long" | "native" | "new" | "package" | "private" | "protected" | "public"
                | "short" | "static" | "strictfp" | "super" | "synchronized" | "throw"
                | "throws" | "transient" | "var" | "volatile" => Kw::Other,
                _ => return None,
            })
        }
        Language::Python => Some(match word {
            "if" => Kw::If,
            "elif" => Kw::Elif,
            "else" => Kw::Else,
            "for" => Kw::For,
            "while" => Kw::While,
            "try" => Kw::Try,
            "except" => Kw::Except,
            "finally" => Kw::Finally,
            "with" => Kw::With,
            "def" => Kw::Def,
            "class" => Kw::Class,
            "return" => Kw::Return,
            "break" => Kw::Break,
            "continue" => Kw::Continue,
            "async" => Kw::Async,
            "lambda" => Kw::Lambda,
            "and" => Kw::And,
            "or" => Kw::Or,
            "not" => Kw::Not,
            "in" => Kw::In,
            "is" => Kw::Is,
            "True" | "False" | "None" => Kw::Operand,
            "as" | "assert" | "await" | "del" | "from" | "global" | "import" | "nonlocal"
            | "pass" | "raise" | "yield" => Kw::Other,
            _ => return None,
        }),
    }
}

fn is_ident_start(c: char) -> bool {
    c == '_' || c == '$' || c.is_alphabetic()
}

fn is_ident_continue(c: char) -> bool {
    c == '_' || c == '$' || c.is_alphanumeric()
}

struct Cursor<'a> {
    src: &'a [char],
    pos: usize,
    line: u32,
    col: u32,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a [char]) -> Self {
        Cursor { src, pos: 0, line: 1, col: 0 }
    }

    fn peek(&self, ahead: usize) -> Option<char> {
        self.src.get(self.pos + ahead).copied()
    }

    fn cur(&self) -> Option<char> {
        self.peek(0)
    }

    fn bump(&mut self) {
        if let Some(c) = self.cur() {
            self.pos += 1;
            match c {
                '\n' => {
                    self.line += 1;
                    self.col = 0;
                }
                '\t' => self.col = self.col + 8 - self.col % 8,
                _ => self.col += 1,
            }
        }
    }

    fn bump_n(&mut self, n: usize) {
        for _ in 0..n {
            self.bump();
        }
    }
}

/// Consumes a number token body. Handles hex/binary prefixes, decimal points,
/// exponents with signs, and trailing alnum suffixes. C++ digit separators
/// (`1'000`) are consumed when `cpp_seps` is set.
fn consume_number(cur: &mut Cursor, cpp_seps: bool) {
    let mut prev_exp = false;
    while let Some(c) = cur.cur() {
        if c.is_ascii_alphanumeric() || c == '_' {
            prev_exp = matches!(c, 'e' | 'E' | 'p' | 'P');
            cur.bump();
        } else if c == '.' {
            // Stop on `..` so ellipses/ranges do not glue on.
            if cur.peek(1) == Some('.') {
                break;
            }
            prev_exp = false;
            cur.bump();
        } else if (c == '+' || c == '-') && prev_exp {
            prev_exp = false;
            cur.bump();
        } else if c == '\'' && cpp_seps && cur.peek(1).map_or(false, |d| d.is_ascii_hexdigit()) {
            cur.bump();
        } else {
            break;
        }
    }
}

/// Consumes a quoted literal starting at the quote char; escape-aware.
/// Unterminated literals run to end of line (single-quote forms) as a
/// recovery measure.
fn consume_quoted(cur: &mut Cursor, quote: char, multiline: bool) {
    cur.bump(); // opening quote
    while let Some(c) = cur.cur() {
        if c == '\\' {
            cur.bump();
            cur.bump();
        } else if c == quote {
            cur.bump();
            return;
        } else if c == '\n' && !multiline {
            return;
        } else {
            cur.bump();
        }
    }
}

/// Consumes a triple-quoted literal starting at the first quote char.
fn consume_triple(cur: &mut Cursor, quote: char) {
    cur.bump_n(3);
    while let Some(c) = cur.cur() {
        if c == '\\' {
            cur.bump();
            cur.bump();
        } else if c == quote && cur.peek(1) == Some(quote) && cur.peek(2) == Some(quote) {
            cur.bump_n(3);
            return;
        } else {
            cur.bump();
        }
    }
}

const CF_OPS3: [&str; 2] = ["<<=", ">>="];
const CF_OPS2: [&str; 18] = [
    "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=", "-=", "*=", "/=", "%=", "&=", "|=",
    "^=", "<<", ">>",
];
const PY_OPS3: [&str; 4] = ["**=", "//=", ">>=", "<<="];
const PY_OPS2: [&str; 19] = [
    "**", "//", "<<", ">>", "<=", ">=", "==", "!=", ":=", "+=", "-=", "*=", "/=", "%=", "@=",
    "&=", "|=", "^=", "~=",
];

fn match_op(cur: &Cursor, table3: &[&'static str], table2: &[&'static str]) -> Option<&'static str> {
    let take = |n: usize| -> Option<String> {
        let mut s = String::new();
        for k in 0..n {
            s.push(cur.peek(k)?);
        }
        Some(s)
    };
    if let Some(s3) = take(3) {
        if let Some(op) = table3.iter().find(|o| ***o == s3) {
            return Some(op);
        }
    }
    if let Some(s2) = take(2) {
        if let Some(op) = table2.iter().find(|o| ***o == s2) {
            return Some(op);
        }
    }
    None
}

fn single_op(c: char, python: bool) -> Option<&'static str> {
    Some(match c {
        '+' => "+",
        '-' => "-",
        '*' => "*",
        '/' => "/",
        '%' => "%",
        '<' => "<",
        '>' => ">",
        '=' => "=",
        '&' => "&",
        '|' => "|",
        '^' => "^",
        '~' => "~",
        '!' if !python => "!",
        '@' if python => "@",
        _ => return None,
    })
}

/// Lexes C, C++, or Java source.
pub fn lex_cfamily(src: &[char], lang: Language) -> Vec<Token> {
    let preproc = matches!(lang, Language::C | Language::Cpp);
    let mut cur = Cursor::new(src);
    let mut tokens = Vec::new();
    let mut line_start = true; // only whitespace seen since start of line
    loop {
        let c = match cur.cur() {
            Some(c) => c,
            None => break,
        };
        if c == '\n' {
            cur.bump();
            line_start = true;
            continue;
        }
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        let start = cur.pos;
        let (line, col) = (cur.line, cur.col);
        let mut push = |kind: TokenKind, cur: &Cursor| {
            tokens.push(Token { kind, start, end: cur.pos, line, col });
        };

        if c == '#' && preproc && line_start {
            // Whole directive line, honoring backslash continuations.
            while let Some(ch) = cur.cur() {
                if ch == '\\' && cur.peek(1) == Some('\n') {
                    cur.bump_n(2);
                } else if ch == '\n' {
                    break;
                } else {
                    cur.bump();
                }
            }
            push(TokenKind::Preproc, &cur);
            line_start = true;
            continue;
        }
        line_start = false;

        if c == '/' && cur.peek(1) == Some('/') {
            while cur.cur().map_or(false, |ch| ch != '\n') {
                cur.bump();
            }
            push(TokenKind::Comment, &cur);
            continue;
        }
        if c == '/' && cur.peek(1) == Some('*') {
            cur.bump_n(2);
            while let Some(ch) = cur.cur() {
                if ch == '*' && cur.peek(1) == Some('/') {
                    cur.bump_n(2);
                    break;
                }
                cur.bump();
            }
            push(TokenKind::Comment, &cur);
            continue;
        }
        if c == '"' {
            if lang == Language::Java && cur.peek(1) == Some('"') && cur.peek(2) == Some('"') {
                consume_triple(&mut cur, '"');
            } else {
                consume_quoted(&mut cur, '"', false);
            }
            push(TokenKind::Str, &cur);
            continue;
        }
        if c == '\'' {
            consume_quoted(&mut cur, '\'', false);
            push(TokenKind::Str, &cur);
            continue;
        }
        if c.is_ascii_digit()
            || (c == '.'
                && cur.peek(1).map_or(false, |d| d.is_ascii_digit())
                && !matches!(
                    tokens.last().map(|t| t.kind),
                    Some(TokenKind::Ident)
                        | Some(TokenKind::Number)
                        | Some(TokenKind::CloseParen)
                        | Some(TokenKind::CloseBracket)
                ))
        {
            consume_number(&mut cur, lang == Language::Cpp);
            push(TokenKind::Number, &cur);
            continue;
        }
        if is_ident_start(c) {
            while cur.cur().map_or(false, is_ident_continue) {
                cur.bump();
            }
            let word: String = src[start..cur.pos].iter().collect();
            let kind = match lookup_keyword(lang, &word) {
                Some(kw) => TokenKind::Keyword(kw),
                None => TokenKind::Ident,
            };
            push(kind, &cur);
            continue;
        }
        // Punctuation and operators, longest match first.
        if c == '.' && cur.peek(1) == Some('.') && cur.peek(2) == Some('.') {
            cur.bump_n(3);
            push(TokenKind::Ellipsis, &cur);
            continue;
        }
        if c == '-' && cur.peek(1) == Some('>') {
            cur.bump_n(2);
            push(TokenKind::Arrow, &cur);
            continue;
        }
        if c == ':' && cur.peek(1) == Some(':') {
            cur.bump_n(2);
            push(TokenKind::Scope, &cur);
            continue;
        }
        if let Some(op) = match_op(&cur, &CF_OPS3, &CF_OPS2) {
            cur.bump_n(op.chars().count());
            push(TokenKind::Op(op), &cur);
            continue;
        }
        let kind = match c {
            '(' => TokenKind::OpenParen,
            ')' => TokenKind::CloseParen,
            '[' => TokenKind::OpenBracket,
            ']' => TokenKind::CloseBracket,
            '{' => TokenKind::OpenBrace,
            '}' => TokenKind::CloseBrace,
            ',' => TokenKind::Comma,
            ';' => TokenKind::Semicolon,
            ':' => TokenKind::Colon,
            '.' => TokenKind::Dot,
            '?' => TokenKind::Question,
            '@' => TokenKind::At,
            _ => match single_op(c, false) {
                Some(op) => TokenKind::Op(op),
                None => TokenKind::Unknown,
            },
        };
        cur.bump();
        push(kind, &cur);
    }
    tokens
}

fn is_py_string_prefix(word: &str) -> bool {
    word.len() <= 2 && word.chars().all(|c| matches!(c, 'r' | 'R' | 'b' | 'B' | 'u' | 'U' | 'f' | 'F'))
}

/// Lexes Python source. Emits `Newline` tokens for unescaped physical line
/// ends so the nester can reconstruct logical lines.
pub fn lex_python(src: &[char]) -> Vec<Token> {
    let mut cur = Cursor::new(src);
    let mut tokens = Vec::new();
    loop {
        let c = match cur.cur() {
            Some(c) => c,
            None => break,
        };
        let start = cur.pos;
        let (line, col) = (cur.line, cur.col);
        let mut push = |kind: TokenKind, cur: &Cursor| {
            tokens.push(Token { kind, start, end: cur.pos, line, col });
        };
        if c == '\n' {
            cur.bump();
            push(TokenKind::Newline, &cur);
            continue;
        }
        if c == '\\' && cur.peek(1) == Some('\n') {
            cur.bump_n(2);
            continue;
        }
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if c == '#' {
            while cur.cur().map_or(false, |ch| ch != '\n') {
                cur.bump();
            }
            push(TokenKind::Comment, &cur);
            continue;
        }
        if c == '\'' || c == '"' {
            if cur.peek(1) == Some(c) && cur.peek(2) == Some(c) {
                consume_triple(&mut cur, c);
            } else {
                consume_quoted(&mut cur, c, false);
            }
            push(TokenKind::Str, &cur);
            continue;
        }
        if c.is_ascii_digit()
            || (c == '.'
                && cur.peek(1).map_or(false, |d| d.is_ascii_digit())
                && !matches!(
                    tokens.last().map(|t| t.kind),
                    Some(TokenKind::Ident)
                        | Some(TokenKind::Number)
                        | Some(TokenKind::CloseParen)
                        | Some(TokenKind::CloseBracket)
                ))
        {
            consume_number(&mut cur, false);
            push(TokenKind::Number, &cur);
            continue;
        }
        if is_ident_start(c) {
            while cur.cur().map_or(false, is_ident_continue) {
                cur.bump();
            }
            let word: String = src[start..cur.pos].iter().collect();
            // A short prefix run directly before a quote is a string prefix.
            if is_py_string_prefix(&word) {
                if let Some(q) = cur.cur() {
                    if q == '\'' || q == '"' {
                        if cur.peek(1) == Some(q) && cur.peek(2) == Some(q) {
                            consume_triple(&mut cur, q);
                        } else {
                            consume_quoted(&mut cur, q, false);
                        }
                        push(TokenKind::Str, &cur);
                        continue;
                    }
                }
            }
            let kind = match lookup_keyword(Language::Python, &word) {
                Some(kw) => TokenKind::Keyword(kw),
                None => TokenKind::Ident,
            };
            push(kind, &cur);
            continue;
        }
        if c == '.' && cur.peek(1) == Some('.') && cur.peek(2) == Some('.') {
            cur.bump_n(3);
            push(TokenKind::Ellipsis, &cur);
            continue;
        }
        if c == '-' && cur.peek(1) == Some('>') {
            cur.bump_n(2);
            push(TokenKind::Arrow, &cur);
            continue;
        }
        if let Some(op) = match_op(&cur, &PY_OPS3, &PY_OPS2) {
            cur.bump_n(op.chars().count());
            push(TokenKind::Op(op), &cur);
            continue;
        }
        let kind = match c {
            '(' => TokenKind::OpenParen,
            ')' => TokenKind::CloseParen,
            '[' => TokenKind::OpenBracket,
            ']' => TokenKind::CloseBracket,
            '{' => TokenKind::OpenBrace,
            '}' => TokenKind::CloseBrace,
            ',' => TokenKind::Comma,
            ';' => TokenKind::Semicolon,
            ':' => TokenKind::Colon,
            '.' => TokenKind::Dot,
            '@' => TokenKind::At,
            _ => match single_op(c, true) {
                Some(op) => TokenKind::Op(op),
                None => TokenKind::Unknown,
            },
        };
        cur.bump();
        push(kind, &cur);
    }
    tokens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chars(s: &str) -> Vec<char> {
        s.chars().collect()
    }

    #[test]
    fn cfamily_basic_tokens() {
        let src = chars("int f(){ return x + 1; } // done");
        let toks = lex_cfamily(&src, Language::C);
        let kinds: Vec<_> = toks.iter().map(|t| t.kind).collect();
        assert!(kinds.contains(&TokenKind::Keyword(Kw::Return)));
        assert!(kinds.contains(&TokenKind::Op("+")));
        assert_eq!(kinds.last(), Some(&TokenKind::Comment));
        // comment span covers "// done"
        let c = toks.last().unwrap();
        assert_eq!(c.end - c.start, 7);
    }

    #[test]
    fn cfamily_preproc_is_single_token() {
        let src = chars("#include <stdio.h>\nint x;");
        let toks = lex_cfamily(&src, Language::C);
        assert_eq!(toks[0].kind, TokenKind::Preproc);
        assert_eq!(toks[0].end, 18);
        assert_eq!(toks[1].kind, TokenKind::Keyword(Kw::Other)); // int
    }

    #[test]
    fn cfamily_strings_and_chars_are_opaque() {
        let src = chars(r#"char* s = "if(x){}"; char c = '{';"#);
        let toks = lex_cfamily(&src, Language::C);
        let strs = toks.iter().filter(|t| t.kind == TokenKind::Str).count();
        assert_eq!(strs, 2);
        assert!(!toks.iter().any(|t| t.kind == TokenKind::Keyword(Kw::If)));
        let braces = toks
            .iter()
            .filter(|t| matches!(t.kind, TokenKind::OpenBrace | TokenKind::CloseBrace))
            .count();
        assert_eq!(braces, 0);
    }

    #[test]
    fn python_string_prefixes_and_triple_quotes() {
        let src = chars("s = f\"hi {x}\"\nd = '''a\nb'''\n");
        let toks = lex_python(&src);
        let strs: Vec<_> = toks.iter().filter(|t| t.kind == TokenKind::Str).collect();
        assert_eq!(strs.len(), 2);
        assert_eq!(strs[0].text(&src), "f\"hi {x}\"");
        assert!(strs[1].text(&src).contains('\n'));
    }

    #[test]
    fn python_newlines_and_continuation() {
        let src = chars("a = 1\nb = 2 + \\\n    3\n");
        let toks = lex_python(&src);
        let newlines = toks.iter().filter(|t| t.kind == TokenKind::Newline).count();
        // the escaped newline is swallowed
        assert_eq!(newlines, 2);
    }

    #[test]
    fn python_operators() {
        let src = chars("c = a ** b // 2 != 3");
        let toks = lex_python(&src);
        let ops: Vec<_> = toks
            .iter()
            .filter_map(|t| match t.kind {
                TokenKind::Op(o) => Some(o),
                _ => None,
            })
            .collect();
        assert_eq!(ops, vec!["=", "**", "//", "!=", ]);
    }

    #[test]
    fn tab_expansion_in_columns() {
        let src = chars("\tx = 1\n");
        let toks = lex_python(&src);
        assert_eq!(toks[0].col, 8);
    }
}
