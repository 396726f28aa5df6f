//! Single-step fuzzy inference.
//!
//! R1-R4 combine two premises pointwise:
//!
//! | rule | premises                          | conclusion         |
//! |------|-----------------------------------|--------------------|
//! | R1   | `x is A`, `x and y are B`         | `y is A and B`     |
//! | R2   | `x is A`, `x or y is B`           | `y is A or B`      |
//! | R3   | `x and y are A`, `y and z are B`  | `x and z are A and B` |
//! | R4   | `x or y are A`, `y or z are B`    | `x or z are A or B`   |
//!
//! R3 and R4 are the chained forms. A literal reading that concludes
//! `y and z are B` / `x or z are B` would only restate the second premise.
//!
//! R5 is generalized modus ponens: from `x is A'` and `if x is A then y is B`
//! conclude `y is A' o (A -> B)`, with `->` the Kleene-Dienes implication
//! relation and `o` max-min composition.

use std::fmt;

use crate::error::{FuzzyError, Result};
use crate::fuzzy::{check_same, Connective, FuzzySet};
use crate::relation::{compose, implication_relation, FuzzyRelation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
}

impl Rule {
    pub fn parse(text: &str) -> Option<Rule> {
        match text {
            "R1" => Some(Rule::R1),
            "R2" => Some(Rule::R2),
            "R3" => Some(Rule::R3),
            "R4" => Some(Rule::R4),
            "R5" => Some(Rule::R5),
            _ => None,
        }
    }

    /// Connective used to merge the premise terms (R5 has none).
    pub fn connective(self) -> Option<Connective> {
        match self {
            Rule::R1 | Rule::R3 => Some(Connective::And),
            Rule::R2 | Rule::R4 => Some(Connective::Or),
            Rule::R5 => None,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
        };
        f.write_str(s)
    }
}

/// Subject pattern of a proposition: `x`, `x and y`, or `x or y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subjects {
    One(String),
    And(String, String),
    Or(String, String),
}

impl Subjects {
    pub fn one(x: impl Into<String>) -> Self {
        Subjects::One(x.into())
    }

    pub fn and(x: impl Into<String>, y: impl Into<String>) -> Self {
        Subjects::And(x.into(), y.into())
    }

    pub fn or(x: impl Into<String>, y: impl Into<String>) -> Self {
        Subjects::Or(x.into(), y.into())
    }

    fn validate(&self) -> Result<()> {
        match self {
            Subjects::And(a, b) | Subjects::Or(a, b) if a == b => Err(FuzzyError::SchemaMismatch(
                format!("subject `{a}` appears twice"),
            )),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Subjects {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subjects::One(x) => write!(f, "{x} is"),
            Subjects::And(x, y) => write!(f, "{x} and {y} are"),
            Subjects::Or(x, y) => write!(f, "{x} or {y} are"),
        }
    }
}

/// `subjects is/are term`.
#[derive(Debug, Clone, PartialEq)]
pub struct Proposition {
    subjects: Subjects,
    term: FuzzySet,
}

impl Proposition {
    pub fn new(subjects: Subjects, term: FuzzySet) -> Result<Self> {
        subjects.validate()?;
        Ok(Self { subjects, term })
    }

    pub fn subjects(&self) -> &Subjects {
        &self.subjects
    }

    pub fn term(&self) -> &FuzzySet {
        &self.term
    }
}

/// `if x is A then y is B`.
#[derive(Debug, Clone, PartialEq)]
pub struct Conditional {
    antecedent: (String, FuzzySet),
    consequent: (String, FuzzySet),
}

impl Conditional {
    pub fn new(
        antecedent: (impl Into<String>, FuzzySet),
        consequent: (impl Into<String>, FuzzySet),
    ) -> Result<Self> {
        let antecedent = (antecedent.0.into(), antecedent.1);
        let consequent = (consequent.0.into(), consequent.1);
        if antecedent.0 == consequent.0 {
            return Err(FuzzyError::SchemaMismatch(format!(
                "conditional uses `{}` on both sides",
                antecedent.0
            )));
        }
        Ok(Self {
            antecedent,
            consequent,
        })
    }

    pub fn antecedent(&self) -> (&str, &FuzzySet) {
        (&self.antecedent.0, &self.antecedent.1)
    }

    pub fn consequent(&self) -> (&str, &FuzzySet) {
        (&self.consequent.0, &self.consequent.1)
    }
}

fn mismatch(rule: Rule, p: &Subjects, q: &Subjects) -> FuzzyError {
    FuzzyError::SchemaMismatch(format!(
        "premises `{p} ..` and `{q} ..` do not fit rule {rule}"
    ))
}

/// Applies one of R1-R4 to two premises.
pub fn apply_rule(rule: Rule, p: &Proposition, q: &Proposition) -> Result<Proposition> {
    use Subjects::*;

    let subjects = match (rule, &p.subjects, &q.subjects) {
        (Rule::R1, One(x), And(x2, y)) | (Rule::R2, One(x), Or(x2, y)) if x == x2 => One(y.clone()),
        (Rule::R3, And(x, y), And(y2, z)) if y == y2 => And(x.clone(), z.clone()),
        (Rule::R4, Or(x, y), Or(y2, z)) if y == y2 => Or(x.clone(), z.clone()),
        _ => return Err(mismatch(rule, &p.subjects, &q.subjects)),
    };
    // R3/R4 with x == z would conclude about a single variable twice.
    subjects
        .validate()
        .map_err(|_| mismatch(rule, &p.subjects, &q.subjects))?;

    let connective = rule.connective().expect("R1-R4 carry a connective");
    let term = p.term.combine(&q.term, connective)?;
    Ok(Proposition { subjects, term })
}

/// Result of generalized modus ponens together with its intermediate relation.
#[derive(Debug, Clone, PartialEq)]
pub struct ModusPonens {
    pub implication: FuzzyRelation,
    pub conclusion: Proposition,
}

/// R5: `x is A'` and `if x is A then y is B` give `y is A' o (A -> B)`.
pub fn generalized_modus_ponens(fact: &Proposition, rule: &Conditional) -> Result<Proposition> {
    modus_ponens_traced(fact, rule).map(|mp| mp.conclusion)
}

pub fn modus_ponens_traced(fact: &Proposition, rule: &Conditional) -> Result<ModusPonens> {
    let (x, a) = rule.antecedent();
    let (y, b) = rule.consequent();
    match &fact.subjects {
        Subjects::One(fx) if fx == x => {}
        other => {
            return Err(FuzzyError::SchemaMismatch(format!(
                "fact `{other} ..` does not match antecedent `{x} is ..`"
            )))
        }
    }
    check_same(a.universe(), fact.term.universe())?;
    let implication = implication_relation(a, b);
    let term = compose(&fact.term, &implication)?;
    Ok(ModusPonens {
        implication,
        conclusion: Proposition {
            subjects: Subjects::one(y),
            term,
        },
    })
}
