use std::fmt;

use super::ast::Pos;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Number,
    Keyword,
    Symbol,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub line: usize,
    pub column: usize,
}

impl Token {
    pub fn pos(&self) -> Pos {
        Pos::new(self.line, self.column)
    }

    /// Position just past the last character.
    pub fn end(&self) -> Pos {
        Pos::new(self.line, self.column + self.text.chars().count())
    }

    pub fn is(&self, kind: TokenKind, text: &str) -> bool {
        self.kind == kind && self.text == text
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}`", self.text)
    }
}

/// Reserved words. `x` and `o` are deliberately absent: they are ordinary
/// identifiers that the parser reads as keywords only in context.
pub const KEYWORDS: &[&str] = &[
    "universe",
    "set",
    "on",
    "rel",
    "syadstate",
    "asti",
    "avaktavya",
    "time",
    "at",
    "eval",
    "infer",
    "syad",
    "given",
    "implies",
    "or",
    "and",
    "not",
    "very",
    "most",
    "more-or-less",
    "not-very",
    "is",
    "are",
    "if",
    "then",
];

const SYMBOLS: &str = "={},/+();:";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct LexError {
    pub message: String,
    pub line: usize,
    pub column: usize,
}

impl LexError {
    pub fn pos(&self) -> Pos {
        Pos::new(self.line, self.column)
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

struct Lexer {
    chars: Vec<char>,
    at: usize,
    line: usize,
    column: usize,
    tokens: Vec<Token>,
}

impl Lexer {
    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.at + offset).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek_at(0)?;
        self.at += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>, line: usize, column: usize) -> LexError {
        LexError {
            message: message.into(),
            line,
            column,
        }
    }

    fn push(&mut self, kind: TokenKind, text: String, line: usize, column: usize) {
        self.tokens.push(Token {
            kind,
            text,
            line,
            column,
        });
    }

    /// True when `suffix` follows the cursor and is not itself followed by an identifier character.
    fn followed_by_word(&self, suffix: &str) -> bool {
        let n = suffix.chars().count();
        suffix
            .chars()
            .enumerate()
            .all(|(k, c)| self.peek_at(k) == Some(c))
            && !self.peek_at(n).is_some_and(is_ident_char)
    }

    fn run(mut self) -> Result<Vec<Token>, LexError> {
        while let Some(c) = self.peek_at(0) {
            let (line, column) = (self.line, self.column);
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while self.peek_at(0).is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if is_ident_start(c) {
                let mut word = String::new();
                while let Some(c) = self.peek_at(0).filter(|&c| is_ident_char(c)) {
                    word.push(c);
                    self.bump();
                }
                for (head, tail) in [("more", "-or-less"), ("not", "-very")] {
                    if word == head && self.followed_by_word(tail) {
                        for _ in tail.chars() {
                            self.bump();
                        }
                        word.push_str(tail);
                    }
                }
                let kind = if KEYWORDS.contains(&word.as_str()) {
                    TokenKind::Keyword
                } else {
                    TokenKind::Ident
                };
                self.push(kind, word, line, column);
            } else if c.is_ascii_digit()
                || (c == '.' && self.peek_at(1).is_some_and(|d| d.is_ascii_digit()))
            {
                let mut text = String::new();
                while let Some(d) = self.peek_at(0).filter(char::is_ascii_digit) {
                    text.push(d);
                    self.bump();
                }
                if self.peek_at(0) == Some('.') {
                    text.push('.');
                    self.bump();
                    while let Some(d) = self.peek_at(0).filter(char::is_ascii_digit) {
                        text.push(d);
                        self.bump();
                    }
                }
                if self
                    .peek_at(0)
                    .is_some_and(|c| is_ident_char(c) || c == '.')
                {
                    return Err(self.error(format!("malformed number `{text}`"), line, column));
                }
                self.push(TokenKind::Number, text, line, column);
            } else if SYMBOLS.contains(c) {
                self.bump();
                self.push(TokenKind::Symbol, c.to_string(), line, column);
            } else {
                return Err(self.error(format!("unexpected character {c:?}"), line, column));
            }
        }
        Ok(self.tokens)
    }
}

/// Splits source text into tokens. Whitespace and `#` comments are dropped;
/// lines and columns are 1-based and count characters.
pub fn tokenize(source: &str) -> Result<Vec<Token>, LexError> {
    Lexer {
        chars: source.chars().collect(),
        at: 0,
        line: 1,
        column: 1,
        tokens: Vec::new(),
    }
    .run()
}
