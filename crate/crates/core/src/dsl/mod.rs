//! A small language for declaring universes, fuzzy sets, relations and
//! predication states, and for querying them.
//!
//! ```text
//! universe U = {x1, x2}
//! set Tall on U = 0.56/x1 + 0.6/x2
//! eval very Tall
//! infer R1: x is Tall; x and y are Tall
//! ```

pub mod ast;
mod eval;
mod lexer;
mod parser;

pub use eval::{
    evaluate, Binding, Environment, QueryBody, QueryResult, SemanticError, SemanticErrorKind,
    TraceStep, Value,
};
pub use lexer::{tokenize, LexError, Token, TokenKind, KEYWORDS};
pub use parser::{parse, ParseError};

use ast::{Pos, Statement};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DslError {
    #[error("{0}")]
    Lex(#[from] LexError),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Semantic(#[from] SemanticError),
}

impl DslError {
    pub fn pos(&self) -> Pos {
        match self {
            DslError::Lex(e) => e.pos(),
            DslError::Parse(e) => e.pos(),
            DslError::Semantic(e) => e.pos,
        }
    }
}

pub fn parse_source(source: &str) -> Result<Vec<Statement>, DslError> {
    Ok(parse(&tokenize(source)?)?)
}

/// Tokenizes, parses and evaluates `source` against `env`.
pub fn run_source(source: &str, env: &mut Environment) -> Result<Vec<QueryResult>, DslError> {
    let statements = parse_source(source)?;
    Ok(evaluate(&statements, env)?)
}
