//! Syntax tree for the DSL. `Display` renders canonical source that parses
//! back to an equal tree.

use std::fmt;

use crate::fuzzy::Hedge;
use crate::inference::Rule;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    pub fn new(line: usize, column: usize) -> Self {
        Self { line, column }
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

/// A value tagged with its source position. Positions do not take part in equality.
#[derive(Debug, Clone)]
pub struct Spanned<T> {
    pub value: T,
    pub pos: Pos,
}

impl<T> Spanned<T> {
    pub fn new(value: T, pos: Pos) -> Self {
        Self { value, pos }
    }
}

impl<T: PartialEq> PartialEq for Spanned<T> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl<T: fmt::Display> fmt::Display for Spanned<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

pub type Name = Spanned<String>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOp {
    Not,
    Hedge(Hedge),
}

impl fmt::Display for UnaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnaryOp::Not => f.write_str("not"),
            UnaryOp::Hedge(h) => f.write_str(h.keyword()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Implies,
    Or,
    And,
    Compose,
}

impl BinaryOp {
    fn precedence(self) -> u8 {
        match self {
            BinaryOp::Implies => 1,
            BinaryOp::Or => 2,
            BinaryOp::And => 3,
            BinaryOp::Compose => 4,
        }
    }
}

impl fmt::Display for BinaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BinaryOp::Implies => "implies",
            BinaryOp::Or => "or",
            BinaryOp::And => "and",
            BinaryOp::Compose => "o",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Ref(Name),
    Unary {
        op: Spanned<UnaryOp>,
        operand: Box<Expr>,
    },
    Binary {
        op: Spanned<BinaryOp>,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Binary { op, .. } => op.value.precedence(),
            _ => u8::MAX,
        }
    }

    /// Position of the leftmost token.
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Ref(n) => n.pos,
            Expr::Unary { op, .. } => op.pos,
            Expr::Binary { lhs, .. } => lhs.pos(),
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Ref(n) => f.write_str(&n.value),
            Expr::Unary { op, operand } => {
                write!(f, "{op} ")?;
                write_operand(f, operand, matches!(**operand, Expr::Binary { .. }))
            }
            Expr::Binary { op, lhs, rhs } => {
                let p = op.value.precedence();
                // `implies` does not chain, the others associate to the left.
                let left_parens = if op.value == BinaryOp::Implies {
                    lhs.precedence() <= p
                } else {
                    lhs.precedence() < p
                };
                write_operand(f, lhs, left_parens)?;
                write!(f, " {op} ")?;
                write_operand(f, rhs, rhs.precedence() <= p)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SubjectsAst {
    One(Name),
    And(Name, Name),
    Or(Name, Name),
}

impl SubjectsAst {
    pub fn pos(&self) -> Pos {
        match self {
            SubjectsAst::One(x) | SubjectsAst::And(x, _) | SubjectsAst::Or(x, _) => x.pos,
        }
    }
}

impl fmt::Display for SubjectsAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubjectsAst::One(x) => write!(f, "{x} is"),
            SubjectsAst::And(x, y) => write!(f, "{x} and {y} are"),
            SubjectsAst::Or(x, y) => write!(f, "{x} or {y} are"),
        }
    }
}

/// `x is A`, `x and y are A`, `x or y are A`.
#[derive(Debug, Clone, PartialEq)]
pub struct PropositionAst {
    pub subjects: SubjectsAst,
    pub term: Name,
}

impl fmt::Display for PropositionAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.subjects, self.term)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Premise {
    Proposition(PropositionAst),
    Conditional {
        antecedent: PropositionAst,
        consequent: PropositionAst,
    },
}

impl fmt::Display for Premise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Premise::Proposition(p) => p.fmt(f),
            Premise::Conditional {
                antecedent,
                consequent,
            } => write!(f, "if {antecedent} then {consequent}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum StatementKind {
    Universe {
        name: Name,
        elements: Vec<Name>,
    },
    Set {
        name: Name,
        universe: Name,
        pairs: Vec<(Spanned<f64>, Name)>,
    },
    Relation {
        name: Name,
        domain: Name,
        codomain: Name,
        entries: Vec<(Spanned<f64>, Name, Name)>,
    },
    SyadState {
        name: Name,
        asti: Name,
        avaktavya: Name,
        time: Name,
        at: Option<Name>,
    },
    Eval(Expr),
    Infer {
        rule: Spanned<Rule>,
        fact: PropositionAst,
        premise: Premise,
    },
    Syad {
        element: Name,
        state: Name,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Statement {
    pub kind: StatementKind,
    pub pos: Pos,
}

fn join<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl IntoIterator<Item = T>,
    sep: &str,
) -> fmt::Result {
    for (i, item) in items.into_iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

impl fmt::Display for StatementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatementKind::Universe { name, elements } => {
                write!(f, "universe {name} = {{")?;
                join(f, elements, ", ")?;
                f.write_str("}")
            }
            StatementKind::Set {
                name,
                universe,
                pairs,
            } => {
                write!(f, "set {name} on {universe} = ")?;
                join(f, pairs.iter().map(|(g, e)| format!("{g}/{e}")), " + ")
            }
            StatementKind::Relation {
                name,
                domain,
                codomain,
                entries,
            } => {
                write!(f, "rel {name} on {domain} x {codomain} = ")?;
                join(
                    f,
                    entries.iter().map(|(g, x, y)| format!("{g}/({x}, {y})")),
                    " + ",
                )
            }
            StatementKind::SyadState {
                name,
                asti,
                avaktavya,
                time,
                at,
            } => {
                write!(
                    f,
                    "syadstate {name} = asti {asti}, avaktavya {avaktavya}, time {time}"
                )?;
                match at {
                    Some(t) => write!(f, ", at {t}"),
                    None => Ok(()),
                }
            }
            StatementKind::Eval(e) => write!(f, "eval {e}"),
            StatementKind::Infer {
                rule,
                fact,
                premise,
            } => write!(f, "infer {rule}: {fact}; {premise}"),
            StatementKind::Syad { element, state } => write!(f, "syad {element} given {state}"),
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}
