//! Recursive-descent parser.
//!
//! A statement ends at `;`, at the end of its line, or at end of input. The
//! `;` between the two premises of `infer` is part of the statement.
//! Precedence from loosest to tightest: `implies`, `or`, `and`, `o`, prefix
//! operators (`not` and the hedges).

use super::ast::*;
use super::lexer::{Token, TokenKind};
use crate::fuzzy::Hedge;
use crate::inference::Rule;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub message: String,
    pub line: usize,
    pub column: usize,
}

impl ParseError {
    pub fn pos(&self) -> Pos {
        Pos::new(self.line, self.column)
    }
}

type PResult<T> = Result<T, ParseError>;

struct Parser<'t> {
    tokens: &'t [Token],
    at: usize,
    /// Line of the statement being parsed; tokens on later lines are invisible.
    line: usize,
}

impl<'t> Parser<'t> {
    fn peek(&self) -> Option<&'t Token> {
        self.tokens.get(self.at).filter(|t| t.line == self.line)
    }

    fn next(&mut self) -> Option<&'t Token> {
        let t = self.peek()?;
        self.at += 1;
        Some(t)
    }

    /// Where an error about the next (possibly missing) token points.
    fn here(&self) -> Pos {
        match self.peek() {
            Some(t) => t.pos(),
            None => match self.at.checked_sub(1).and_then(|i| self.tokens.get(i)) {
                Some(prev) => prev.end(),
                None => Pos::new(1, 1),
            },
        }
    }

    fn error_at(&self, pos: Pos, message: impl Into<String>) -> ParseError {
        ParseError {
            message: message.into(),
            line: pos.line,
            column: pos.column,
        }
    }

    fn expected(&self, what: &str) -> ParseError {
        let found = match self.peek() {
            Some(t) => t.to_string(),
            None => "end of statement".to_string(),
        };
        self.error_at(self.here(), format!("expected {what}, found {found}"))
    }

    fn at_symbol(&self, s: &str) -> bool {
        self.peek().is_some_and(|t| t.is(TokenKind::Symbol, s))
    }

    fn at_keyword(&self, k: &str) -> bool {
        self.peek().is_some_and(|t| t.is(TokenKind::Keyword, k))
    }

    /// `x` and `o` are identifiers that act as keywords in some positions.
    fn at_contextual(&self, word: &str) -> bool {
        self.peek().is_some_and(|t| t.is(TokenKind::Ident, word))
    }

    fn symbol(&mut self, s: &str) -> PResult<Pos> {
        if self.at_symbol(s) {
            Ok(self.next().unwrap().pos())
        } else {
            Err(self.expected(&format!("`{s}`")))
        }
    }

    fn keyword(&mut self, k: &str) -> PResult<Pos> {
        if self.at_keyword(k) {
            Ok(self.next().unwrap().pos())
        } else {
            Err(self.expected(&format!("`{k}`")))
        }
    }

    fn contextual(&mut self, word: &str) -> PResult<Pos> {
        if self.at_contextual(word) {
            Ok(self.next().unwrap().pos())
        } else {
            Err(self.expected(&format!("`{word}`")))
        }
    }

    fn ident(&mut self) -> PResult<Name> {
        match self.peek() {
            Some(t) if t.kind == TokenKind::Ident => {
                self.at += 1;
                Ok(Spanned::new(t.text.clone(), t.pos()))
            }
            _ => Err(self.expected("identifier")),
        }
    }

    fn number(&mut self) -> PResult<Spanned<f64>> {
        match self.peek() {
            Some(t) if t.kind == TokenKind::Number => {
                let value: f64 = t
                    .text
                    .parse()
                    .map_err(|_| self.error_at(t.pos(), format!("invalid number `{}`", t.text)))?;
                if !value.is_finite() {
                    return Err(self.error_at(t.pos(), format!("number `{}` is too large", t.text)));
                }
                self.at += 1;
                Ok(Spanned::new(value, t.pos()))
            }
            _ => Err(self.expected("number")),
        }
    }

    fn program(&mut self) -> PResult<Vec<Statement>> {
        let mut statements = Vec::new();
        while let Some(first) = self.tokens.get(self.at) {
            self.line = first.line;
            if self.at_symbol(";") {
                self.at += 1;
                continue;
            }
            statements.push(self.statement()?);
            match self.peek() {
                None => {}
                Some(t) if t.is(TokenKind::Symbol, ";") => self.at += 1,
                Some(_) => return Err(self.expected("end of statement")),
            }
        }
        Ok(statements)
    }

    fn statement(&mut self) -> PResult<Statement> {
        let pos = self.here();
        let head = self.peek().map(|t| (t.kind, t.text.as_str()));
        let kind = match head {
            Some((TokenKind::Keyword, "universe")) => self.universe()?,
            Some((TokenKind::Keyword, "set")) => self.set_decl()?,
            Some((TokenKind::Keyword, "rel")) => self.rel_decl()?,
            Some((TokenKind::Keyword, "syadstate")) => self.syad_decl()?,
            Some((TokenKind::Keyword, "eval")) => {
                self.next();
                StatementKind::Eval(self.expr()?)
            }
            Some((TokenKind::Keyword, "infer")) => self.infer()?,
            Some((TokenKind::Keyword, "syad")) => {
                self.next();
                let element = self.ident()?;
                self.keyword("given")?;
                StatementKind::Syad {
                    element,
                    state: self.ident()?,
                }
            }
            _ => return Err(self.expected("a statement")),
        };
        Ok(Statement { kind, pos })
    }

    fn universe(&mut self) -> PResult<StatementKind> {
        self.keyword("universe")?;
        let name = self.ident()?;
        self.symbol("=")?;
        self.symbol("{")?;
        let mut elements = vec![self.ident()?];
        while self.at_symbol(",") {
            self.next();
            elements.push(self.ident()?);
        }
        self.symbol("}")?;
        Ok(StatementKind::Universe { name, elements })
    }

    fn set_decl(&mut self) -> PResult<StatementKind> {
        self.keyword("set")?;
        let name = self.ident()?;
        self.keyword("on")?;
        let universe = self.ident()?;
        self.symbol("=")?;
        let mut pairs = Vec::new();
        loop {
            let grade = self.number()?;
            self.symbol("/")?;
            pairs.push((grade, self.ident()?));
            if !self.at_symbol("+") {
                break;
            }
            self.next();
        }
        Ok(StatementKind::Set {
            name,
            universe,
            pairs,
        })
    }

    fn rel_decl(&mut self) -> PResult<StatementKind> {
        self.keyword("rel")?;
        let name = self.ident()?;
        self.keyword("on")?;
        let domain = self.ident()?;
        self.contextual("x")?;
        let codomain = self.ident()?;
        self.symbol("=")?;
        let mut entries = Vec::new();
        loop {
            let grade = self.number()?;
            self.symbol("/")?;
            self.symbol("(")?;
            let x = self.ident()?;
            self.symbol(",")?;
            let y = self.ident()?;
            self.symbol(")")?;
            entries.push((grade, x, y));
            if !self.at_symbol("+") {
                break;
            }
            self.next();
        }
        Ok(StatementKind::Relation {
            name,
            domain,
            codomain,
            entries,
        })
    }

    fn syad_decl(&mut self) -> PResult<StatementKind> {
        self.keyword("syadstate")?;
        let name = self.ident()?;
        self.symbol("=")?;
        self.keyword("asti")?;
        let asti = self.ident()?;
        self.symbol(",")?;
        self.keyword("avaktavya")?;
        let avaktavya = self.ident()?;
        self.symbol(",")?;
        self.keyword("time")?;
        let time = self.ident()?;
        let at = if self.at_symbol(",") {
            self.next();
            self.keyword("at")?;
            Some(self.ident()?)
        } else {
            None
        };
        Ok(StatementKind::SyadState {
            name,
            asti,
            avaktavya,
            time,
            at,
        })
    }

    fn infer(&mut self) -> PResult<StatementKind> {
        self.keyword("infer")?;
        let rule = match self.peek() {
            Some(t) if t.kind == TokenKind::Ident => match Rule::parse(&t.text) {
                Some(r) => {
                    self.at += 1;
                    Spanned::new(r, t.pos())
                }
                None => return Err(self.expected("a rule R1..R5")),
            },
            _ => return Err(self.expected("a rule R1..R5")),
        };
        self.symbol(":")?;
        let fact = self.proposition()?;
        self.symbol(";")?;
        let premise = if self.at_keyword("if") {
            self.next();
            let antecedent = self.proposition()?;
            self.keyword("then")?;
            Premise::Conditional {
                antecedent,
                consequent: self.proposition()?,
            }
        } else {
            Premise::Proposition(self.proposition()?)
        };
        Ok(StatementKind::Infer {
            rule,
            fact,
            premise,
        })
    }

    fn proposition(&mut self) -> PResult<PropositionAst> {
        let first = self.ident()?;
        let subjects = if self.at_keyword("and") {
            self.next();
            SubjectsAst::And(first, self.ident()?)
        } else if self.at_keyword("or") {
            self.next();
            SubjectsAst::Or(first, self.ident()?)
        } else {
            SubjectsAst::One(first)
        };
        if self.at_keyword("is") || self.at_keyword("are") {
            self.next();
        } else {
            return Err(self.expected("`is` or `are`"));
        }
        Ok(PropositionAst {
            subjects,
            term: self.ident()?,
        })
    }

    fn expr(&mut self) -> PResult<Expr> {
        let lhs = self.binary_level(BinaryOp::Or)?;
        if self.at_keyword("implies") {
            let pos = self.next().unwrap().pos();
            let rhs = self.binary_level(BinaryOp::Or)?;
            return Ok(binary(BinaryOp::Implies, pos, lhs, rhs));
        }
        Ok(lhs)
    }

    /// Left-associative levels `or` > `and` > `o`.
    fn binary_level(&mut self, op: BinaryOp) -> PResult<Expr> {
        let tighter = |p: &mut Self| match op {
            BinaryOp::Or => p.binary_level(BinaryOp::And),
            BinaryOp::And => p.binary_level(BinaryOp::Compose),
            _ => p.unary(),
        };
        let mut lhs = tighter(self)?;
        loop {
            let matches = match op {
                BinaryOp::Or => self.at_keyword("or"),
                BinaryOp::And => self.at_keyword("and"),
                _ => self.at_contextual("o"),
            };
            if !matches {
                return Ok(lhs);
            }
            let pos = self.next().unwrap().pos();
            let rhs = tighter(self)?;
            lhs = binary(op, pos, lhs, rhs);
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        let op = match self.peek() {
            Some(t) if t.kind == TokenKind::Keyword => match t.text.as_str() {
                "not" => Some(UnaryOp::Not),
                "very" => Some(UnaryOp::Hedge(Hedge::Very)),
                "most" => Some(UnaryOp::Hedge(Hedge::Most)),
                "more-or-less" => Some(UnaryOp::Hedge(Hedge::MoreOrLess)),
                "not-very" => Some(UnaryOp::Hedge(Hedge::NotVery)),
                _ => None,
            },
            _ => None,
        };
        if let Some(op) = op {
            let pos = self.next().unwrap().pos();
            let operand = self.unary()?;
            return Ok(Expr::Unary {
                op: Spanned::new(op, pos),
                operand: Box::new(operand),
            });
        }
        self.primary()
    }

    fn primary(&mut self) -> PResult<Expr> {
        if self.at_symbol("(") {
            self.next();
            let inner = self.expr()?;
            self.symbol(")")?;
            return Ok(inner);
        }
        match self.peek() {
            Some(t) if t.kind == TokenKind::Ident => Ok(Expr::Ref(self.ident()?)),
            _ => Err(self.expected("a set name or `(`")),
        }
    }
}

fn binary(op: BinaryOp, pos: Pos, lhs: Expr, rhs: Expr) -> Expr {
    Expr::Binary {
        op: Spanned::new(op, pos),
        lhs: Box::new(lhs),
        rhs: Box::new(rhs),
    }
}

pub fn parse(tokens: &[Token]) -> Result<Vec<Statement>, ParseError> {
    Parser {
        tokens,
        at: 0,
        line: 1,
    }
    .program()
}
