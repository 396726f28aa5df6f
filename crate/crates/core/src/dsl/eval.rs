use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::ast::*;
use crate::error::FuzzyError;
use crate::fuzzy::{FuzzySet, Grade, Universe};
use crate::inference::{self, Conditional, Proposition, Rule, Subjects};
use crate::relation::{compose, FuzzyRelation};
use crate::saptabhangi::{SevenValuation, SyadState};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SemanticErrorKind {
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("`{0}` is already defined")]
    Redefinition(String),
    #[error("`{name}` is a {found}, expected a {expected}")]
    WrongKind {
        name: String,
        expected: &'static str,
        found: &'static str,
    },
    #[error("cannot apply `{op}` to {operands}")]
    BadOperands { op: String, operands: String },
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{pos}: {kind}")]
pub struct SemanticError {
    pub kind: SemanticErrorKind,
    pub pos: Pos,
}

impl SemanticError {
    fn new(kind: impl Into<SemanticErrorKind>, pos: Pos) -> Self {
        Self {
            kind: kind.into(),
            pos,
        }
    }
}

trait At<T> {
    fn at(self, pos: Pos) -> Result<T, SemanticError>;
}

impl<T> At<T> for Result<T, FuzzyError> {
    fn at(self, pos: Pos) -> Result<T, SemanticError> {
        self.map_err(|e| SemanticError::new(e, pos))
    }
}

/// Anything a name can be bound to.
#[derive(Debug, Clone, PartialEq)]
pub enum Binding {
    Universe(Arc<Universe>),
    Set(FuzzySet),
    Relation(FuzzyRelation),
    SyadState(SyadState),
}

impl Binding {
    fn kind_name(&self) -> &'static str {
        match self {
            Binding::Universe(_) => "universe",
            Binding::Set(_) => "set",
            Binding::Relation(_) => "relation",
            Binding::SyadState(_) => "syadstate",
        }
    }
}

/// Result of evaluating an expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Set(FuzzySet),
    Relation(FuzzyRelation),
}

impl Value {
    fn kind_name(&self) -> &'static str {
        match self {
            Value::Set(_) => "set",
            Value::Relation(_) => "relation",
        }
    }
}

/// One intermediate object shown by `--trace`.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceStep {
    pub label: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq)]
pub enum QueryBody {
    Value(Value),
    Inference {
        steps: Vec<TraceStep>,
        /// e.g. `y is (A and B)`
        description: String,
        conclusion: Proposition,
    },
    Valuation(SevenValuation),
}

#[derive(Debug, Clone, PartialEq)]
pub struct QueryResult {
    /// Canonical source of the query.
    pub header: String,
    pub body: QueryBody,
}

/// Symbol table shared by every kind of declaration.
#[derive(Debug, Default, Clone)]
pub struct Environment {
    bindings: HashMap<String, Binding>,
    trace: bool,
}

impl Environment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record intermediate objects of `infer` queries.
    pub fn with_trace(mut self, trace: bool) -> Self {
        self.trace = trace;
        self
    }

    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.bindings.get(name)
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    fn lookup(&self, name: &Name) -> Result<&Binding, SemanticError> {
        self.bindings.get(&name.value).ok_or_else(|| {
            SemanticError::new(SemanticErrorKind::UnknownName(name.value.clone()), name.pos)
        })
    }

    fn wrong_kind(name: &Name, expected: &'static str, found: &Binding) -> SemanticError {
        SemanticError::new(
            SemanticErrorKind::WrongKind {
                name: name.value.clone(),
                expected,
                found: found.kind_name(),
            },
            name.pos,
        )
    }

    fn universe(&self, name: &Name) -> Result<Arc<Universe>, SemanticError> {
        match self.lookup(name)? {
            Binding::Universe(u) => Ok(u.clone()),
            other => Err(Self::wrong_kind(name, "universe", other)),
        }
    }

    fn set(&self, name: &Name) -> Result<&FuzzySet, SemanticError> {
        match self.lookup(name)? {
            Binding::Set(s) => Ok(s),
            other => Err(Self::wrong_kind(name, "set", other)),
        }
    }

    fn relation(&self, name: &Name) -> Result<&FuzzyRelation, SemanticError> {
        match self.lookup(name)? {
            Binding::Relation(r) => Ok(r),
            other => Err(Self::wrong_kind(name, "relation", other)),
        }
    }

    fn syad_state(&self, name: &Name) -> Result<&SyadState, SemanticError> {
        match self.lookup(name)? {
            Binding::SyadState(s) => Ok(s),
            other => Err(Self::wrong_kind(name, "syadstate", other)),
        }
    }

    fn define(&mut self, name: &Name, binding: Binding) -> Result<(), SemanticError> {
        if self.bindings.contains_key(&name.value) {
            return Err(SemanticError::new(
                SemanticErrorKind::Redefinition(name.value.clone()),
                name.pos,
            ));
        }
        self.bindings.insert(name.value.clone(), binding);
        Ok(())
    }

    /// Runs one statement. Declarations bind names and return `None`; queries
    /// return their result. A failed statement leaves the environment unchanged.
    pub fn execute(&mut self, statement: &Statement) -> Result<Option<QueryResult>, SemanticError> {
        let header = statement.to_string();
        let body = match &statement.kind {
            StatementKind::Universe { name, elements } => {
                let u = self.declare_universe(name, elements)?;
                self.define(name, Binding::Universe(Arc::new(u)))?;
                return Ok(None);
            }
            StatementKind::Set {
                name,
                universe,
                pairs,
            } => {
                let set = self.declare_set(universe, pairs)?;
                self.define(name, Binding::Set(set))?;
                return Ok(None);
            }
            StatementKind::Relation {
                name,
                domain,
                codomain,
                entries,
            } => {
                let rel = self.declare_relation(domain, codomain, entries)?;
                self.define(name, Binding::Relation(rel))?;
                return Ok(None);
            }
            StatementKind::SyadState {
                name,
                asti,
                avaktavya,
                time,
                at,
            } => {
                let state = self.declare_syad(asti, avaktavya, time, at.as_ref())?;
                self.define(name, Binding::SyadState(state))?;
                return Ok(None);
            }
            StatementKind::Eval(expr) => QueryBody::Value(self.eval_expr(expr)?),
            StatementKind::Infer {
                rule,
                fact,
                premise,
            } => self.infer(rule, fact, premise)?,
            StatementKind::Syad { element, state } => {
                let state = self.syad_state(state)?;
                QueryBody::Valuation(state.valuate(&element.value).at(element.pos)?)
            }
        };
        Ok(Some(QueryResult { header, body }))
    }

    fn declare_universe(&self, name: &Name, elements: &[Name]) -> Result<Universe, SemanticError> {
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].iter().any(|prev| prev.value == e.value) {
                return Err(SemanticError::new(
                    FuzzyError::DuplicateElement(e.value.clone()),
                    e.pos,
                ));
            }
        }
        Universe::new(name.value.clone(), elements.iter().map(|e| e.value.clone())).at(name.pos)
    }

    fn declare_set(
        &self,
        universe: &Name,
        pairs: &[(Spanned<f64>, Name)],
    ) -> Result<FuzzySet, SemanticError> {
        let u = self.universe(universe)?;
        for (i, (grade, element)) in pairs.iter().enumerate() {
            Grade::new(grade.value).at(grade.pos)?;
            u.index_of(&element.value).at(element.pos)?;
            if pairs[..i]
                .iter()
                .any(|(_, prev)| prev.value == element.value)
            {
                return Err(SemanticError::new(
                    FuzzyError::DuplicateElement(element.value.clone()),
                    element.pos,
                ));
            }
        }
        let pairs: Vec<(&str, f64)> = pairs
            .iter()
            .map(|(g, e)| (e.value.as_str(), g.value))
            .collect();
        FuzzySet::from_pairs(u, &pairs).at(universe.pos)
    }

    fn declare_relation(
        &self,
        domain: &Name,
        codomain: &Name,
        entries: &[(Spanned<f64>, Name, Name)],
    ) -> Result<FuzzyRelation, SemanticError> {
        let (dx, dy) = (self.universe(domain)?, self.universe(codomain)?);
        for (i, (grade, x, y)) in entries.iter().enumerate() {
            Grade::new(grade.value).at(grade.pos)?;
            dx.index_of(&x.value).at(x.pos)?;
            dy.index_of(&y.value).at(y.pos)?;
            if entries[..i]
                .iter()
                .any(|(_, px, py)| px.value == x.value && py.value == y.value)
            {
                return Err(SemanticError::new(
                    FuzzyError::DuplicateElement(format!("({},{})", x.value, y.value)),
                    x.pos,
                ));
            }
        }
        let entries: Vec<((&str, &str), f64)> = entries
            .iter()
            .map(|(g, x, y)| ((x.value.as_str(), y.value.as_str()), g.value))
            .collect();
        FuzzyRelation::from_entries(dx, dy, &entries).at(domain.pos)
    }

    fn declare_syad(
        &self,
        asti: &Name,
        avaktavya: &Name,
        time: &Name,
        at: Option<&Name>,
    ) -> Result<SyadState, SemanticError> {
        let a = self.set(asti)?;
        let i = self.set(avaktavya)?;
        let r = self.relation(time)?;
        crate::fuzzy::check_same(a.universe(), i.universe()).at(avaktavya.pos)?;
        crate::fuzzy::check_same(a.universe(), r.domain()).at(time.pos)?;
        let fixed = at.map(|t| t.value.as_str());
        SyadState::new(a.clone(), i.clone(), r.clone(), fixed).at(at.map_or(time.pos, |t| t.pos))
    }

    pub fn eval_expr(&self, expr: &Expr) -> Result<Value, SemanticError> {
        match expr {
            Expr::Ref(name) => match self.lookup(name)? {
                Binding::Set(s) => Ok(Value::Set(s.clone())),
                Binding::Relation(r) => Ok(Value::Relation(r.clone())),
                other => Err(Self::wrong_kind(name, "set or relation", other)),
            },
            Expr::Unary { op, operand } => match (op.value, self.eval_expr(operand)?) {
                (UnaryOp::Not, Value::Set(s)) => Ok(Value::Set(s.negate())),
                (UnaryOp::Hedge(h), Value::Set(s)) => Ok(Value::Set(s.hedge(h))),
                (op_value, v) => Err(SemanticError::new(
                    SemanticErrorKind::BadOperands {
                        op: op_value.to_string(),
                        operands: format!("a {}", v.kind_name()),
                    },
                    op.pos,
                )),
            },
            Expr::Binary { op, lhs, rhs } => {
                let (l, r) = (self.eval_expr(lhs)?, self.eval_expr(rhs)?);
                let pos = op.pos;
                match (op.value, l, r) {
                    (BinaryOp::And, Value::Set(a), Value::Set(b)) => {
                        a.and(&b).at(pos).map(Value::Set)
                    }
                    (BinaryOp::Or, Value::Set(a), Value::Set(b)) => {
                        a.or(&b).at(pos).map(Value::Set)
                    }
                    (BinaryOp::Implies, Value::Set(a), Value::Set(b)) => {
                        a.implies(&b).at(pos).map(Value::Set)
                    }
                    (BinaryOp::Compose, Value::Set(a), Value::Relation(r)) => {
                        compose(&a, &r).at(pos).map(Value::Set)
                    }
                    (BinaryOp::Compose, Value::Relation(a), Value::Relation(b)) => {
                        a.compose(&b).at(pos).map(Value::Relation)
                    }
                    (op_value, l, r) => Err(SemanticError::new(
                        SemanticErrorKind::BadOperands {
                            op: op_value.to_string(),
                            operands: format!("a {} and a {}", l.kind_name(), r.kind_name()),
                        },
                        pos,
                    )),
                }
            }
        }
    }

    fn proposition(&self, p: &PropositionAst) -> Result<Proposition, SemanticError> {
        let term = self.set(&p.term)?.clone();
        let subjects = match &p.subjects {
            SubjectsAst::One(x) => Subjects::one(&x.value),
            SubjectsAst::And(x, y) => Subjects::and(&x.value, &y.value),
            SubjectsAst::Or(x, y) => Subjects::or(&x.value, &y.value),
        };
        Proposition::new(subjects, term).at(p.subjects.pos())
    }

    fn infer(
        &self,
        rule: &Spanned<Rule>,
        fact: &PropositionAst,
        premise: &Premise,
    ) -> Result<QueryBody, SemanticError> {
        let schema_error =
            |msg: String| SemanticError::new(FuzzyError::SchemaMismatch(msg), rule.pos);
        let p = self.proposition(fact)?;
        match (rule.value, premise) {
            (
                Rule::R5,
                Premise::Conditional {
                    antecedent,
                    consequent,
                },
            ) => {
                let single = |prop: &PropositionAst| match &prop.subjects {
                    SubjectsAst::One(x) => Ok(x.value.clone()),
                    _ => Err(schema_error(format!("`{prop}` must have a single subject"))),
                };
                let (x, y) = (single(antecedent)?, single(consequent)?);
                let a = self.set(&antecedent.term)?.clone();
                let b = self.set(&consequent.term)?.clone();
                let conditional = Conditional::new((x, a), (y, b)).at(rule.pos)?;
                let mp = inference::modus_ponens_traced(&p, &conditional).map_err(|e| match e {
                    FuzzyError::UniverseMismatch { .. } => SemanticError::new(e, fact.term.pos),
                    e => SemanticError::new(e, rule.pos),
                })?;
                let relation_name = format!("({} implies {})", antecedent.term, consequent.term);
                let composed = format!("{} o {relation_name}", fact.term);
                let mut steps = Vec::new();
                if self.trace {
                    steps.push(TraceStep {
                        label: format!("implication {relation_name}"),
                        value: Value::Relation(mp.implication.clone()),
                    });
                    steps.push(TraceStep {
                        label: format!("composition {composed}"),
                        value: Value::Set(mp.conclusion.term().clone()),
                    });
                }
                Ok(QueryBody::Inference {
                    steps,
                    description: format!("{} ({composed})", mp.conclusion.subjects()),
                    conclusion: mp.conclusion,
                })
            }
            (Rule::R5, Premise::Proposition(_)) => Err(schema_error(
                "rule R5 needs a conditional `if .. then ..`".into(),
            )),
            (_, Premise::Conditional { .. }) => Err(schema_error(format!(
                "rule {} takes two propositions, not a conditional",
                rule.value
            ))),
            (r, Premise::Proposition(second)) => {
                let q = self.proposition(second)?;
                let conclusion = inference::apply_rule(r, &p, &q).map_err(|e| match e {
                    FuzzyError::UniverseMismatch { .. } => SemanticError::new(e, second.term.pos),
                    e => SemanticError::new(e, rule.pos),
                })?;
                let joiner = if r.connective() == Some(crate::fuzzy::Connective::And) {
                    "and"
                } else {
                    "or"
                };
                let mut steps = Vec::new();
                if self.trace {
                    for prop in [fact, second] {
                        steps.push(TraceStep {
                            label: format!("premise {prop}"),
                            value: Value::Set(self.set(&prop.term)?.clone()),
                        });
                    }
                }
                Ok(QueryBody::Inference {
                    steps,
                    description: format!(
                        "{} ({} {joiner} {})",
                        conclusion.subjects(),
                        fact.term,
                        second.term
                    ),
                    conclusion,
                })
            }
        }
    }
}

/// Runs statements in order against `env`, stopping at the first error.
pub fn evaluate(
    statements: &[Statement],
    env: &mut Environment,
) -> Result<Vec<QueryResult>, SemanticError> {
    let mut results = Vec::new();
    for statement in statements {
        if let Some(r) = env.execute(statement)? {
            results.push(r);
        }
    }
    Ok(results)
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Set(s) => s.fmt(f),
            Value::Relation(r) => {
                for (i, ((x, y), g)) in r.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{g}/({x}, {y})")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{lexer::tokenize, parser::parse};
    use super::*;

    fn run(src: &str) -> Result<Vec<QueryResult>, SemanticError> {
        let stmts = parse(&tokenize(src).unwrap()).unwrap();
        evaluate(&stmts, &mut Environment::new())
    }

    fn set_of(r: &QueryResult) -> &FuzzySet {
        match &r.body {
            QueryBody::Value(Value::Set(s)) => s,
            QueryBody::Inference { conclusion, .. } => conclusion.term(),
            other => panic!("{other:?}"),
        }
    }

    const TALL: &str = "universe U = {x1, x2, x3, x4, x5}\n\
                        set Tall on U = 0.56/x1 + 0.6/x2 + 0.65/x3 + 0.67/x4 + 0.69/x5\n";

    #[test]
    fn eval_not_tall() {
        let out = run(&format!("{TALL}eval not Tall")).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].header, "eval not Tall");
        let g = set_of(&out[0]).membership("x1").unwrap().value();
        assert!((g - 0.44).abs() < 1e-15);
    }

    #[test]
    fn unknown_name() {
        let err = run("eval Mystery").unwrap_err();
        assert_eq!(err.kind, SemanticErrorKind::UnknownName("Mystery".into()));
        assert_eq!(err.pos, Pos::new(1, 6));
    }

    #[test]
    fn grade_out_of_range_points_at_number() {
        let err = run("universe U = {x1}\nset T on U = 1.2/x1").unwrap_err();
        assert_eq!(
            err.kind,
            SemanticErrorKind::Fuzzy(FuzzyError::GradeOutOfRange(1.2))
        );
        assert_eq!(err.pos, Pos::new(2, 14));
    }

    #[test]
    fn redefinition_and_wrong_kind() {
        let err = run("universe U = {a}; universe U = {b}").unwrap_err();
        assert!(matches!(err.kind, SemanticErrorKind::Redefinition(_)));
        assert_eq!(err.pos, Pos::new(1, 28));
        let err = run("universe U = {a}; set U on U = 1/a").unwrap_err();
        assert!(matches!(err.kind, SemanticErrorKind::Redefinition(_)));
        let err = run("universe U = {a}; eval U").unwrap_err();
        assert!(matches!(err.kind, SemanticErrorKind::WrongKind { .. }));
    }

    #[test]
    fn declaration_errors() {
        let err = run("universe U = {a, b, a}").unwrap_err();
        assert_eq!(err.pos, Pos::new(1, 21));
        let err = run("universe U = {a}; set S on U = 0.5/b").unwrap_err();
        assert!(matches!(
            err.kind,
            SemanticErrorKind::Fuzzy(FuzzyError::UnknownElement { .. })
        ));
        assert_eq!(err.pos, Pos::new(1, 36));
        let err = run("universe U = {a}; set S on U = 0.5/a + 0.1/a").unwrap_err();
        assert_eq!(err.pos, Pos::new(1, 44));
        let err = run("universe U = {a}; rel R on U x U = 0.5/(a, a) + 2/(a, a)").unwrap_err();
        assert_eq!(err.pos, Pos::new(1, 49));
    }

    #[test]
    fn universe_mismatch_points_at_operator() {
        let src =
            "universe U = {a}; universe V = {a}; set A on U = 1/a; set B on V = 1/a\neval A and B";
        let err = run(src).unwrap_err();
        assert!(matches!(
            err.kind,
            SemanticErrorKind::Fuzzy(FuzzyError::UniverseMismatch { .. })
        ));
        assert_eq!(err.pos, Pos::new(2, 8));
    }

    #[test]
    fn composition_and_type_errors() {
        let src = "universe X = {a, b}; universe Y = {p}\n\
                   set A on X = 0.3/a + 0.8/b\n\
                   rel R on X x Y = 0.5/(a, p) + 0.6/(b, p)\n\
                   eval A o R\n\
                   eval R o very A";
        let err = run(src).unwrap_err();
        assert!(matches!(err.kind, SemanticErrorKind::BadOperands { .. }));
        assert_eq!(err.pos, Pos::new(5, 8));

        let out = run(&src[..src.rfind('\n').unwrap()]).unwrap();
        assert_eq!(set_of(&out[0]).membership("p").unwrap().value(), 0.6);
    }

    #[test]
    fn infer_r5_matches_library() {
        let src = "universe X = {a, b}; universe Y = {p, q}\n\
                   set A on X = 1/a + 0.4/b; set A1 on X = 0.7/a + 0.9/b; set B on Y = 0.2/p + 0.9/q\n\
                   infer R5: x is A1; if x is A then y is B";
        let out = run(src).unwrap();
        let expected = {
            let x = Arc::new(Universe::new("X", ["a", "b"]).unwrap());
            let y = Arc::new(Universe::new("Y", ["p", "q"]).unwrap());
            let rule = Conditional::new(
                ("x", FuzzySet::from_grades(x.clone(), &[1.0, 0.4]).unwrap()),
                ("y", FuzzySet::from_grades(y, &[0.2, 0.9]).unwrap()),
            )
            .unwrap();
            let fact = Proposition::new(
                Subjects::one("x"),
                FuzzySet::from_grades(x, &[0.7, 0.9]).unwrap(),
            )
            .unwrap();
            inference::generalized_modus_ponens(&fact, &rule).unwrap()
        };
        match &out[0].body {
            QueryBody::Inference {
                conclusion,
                description,
                steps,
            } => {
                assert_eq!(conclusion, &expected);
                assert_eq!(description, "y is (A1 o (A implies B))");
                assert!(steps.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infer_schema_errors() {
        let base = "universe U = {a}; set A on U = 1/a; set B on U = 0.5/a\n";
        let err = run(&format!("{base}infer R1: x is A; z and y are B")).unwrap_err();
        assert!(matches!(
            err.kind,
            SemanticErrorKind::Fuzzy(FuzzyError::SchemaMismatch(_))
        ));
        assert_eq!(err.pos, Pos::new(2, 7));
        assert!(run(&format!("{base}infer R5: x is A; x and y are B")).is_err());
        assert!(run(&format!("{base}infer R2: x is A; if x is A then y is B")).is_err());
        assert!(run(&format!(
            "{base}infer R5: x is A; if x and z are A then y is B"
        ))
        .is_err());
        let out = run(&format!("{base}infer R2: x is A; x or y are B")).unwrap();
        assert_eq!(set_of(&out[0]).grades()[0].value(), 1.0);
    }

    #[test]
    fn trace_records_intermediate_objects() {
        let src = "universe X = {a}; universe Y = {p}; set A on X = 0.5/a; set B on Y = 0.2/p\n\
                   infer R5: x is A; if x is A then y is B";
        let stmts = parse(&tokenize(src).unwrap()).unwrap();
        let mut env = Environment::new().with_trace(true);
        let out = evaluate(&stmts, &mut env).unwrap();
        match &out[0].body {
            QueryBody::Inference { steps, .. } => {
                assert_eq!(steps.len(), 2);
                assert!(matches!(steps[0].value, Value::Relation(_)));
                assert!(matches!(steps[1].value, Value::Set(_)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syad_query() {
        let src = "universe X = {a, b}; universe T = {t1, t2}\n\
                   set A on X = 0.5/a; set I on X = 1/a + 1/b\n\
                   rel R on X x T = 1/(a, t1) + 1/(a, t2)\n\
                   syadstate S = asti A, avaktavya I, time R, at t2\n\
                   syad a given S";
        let out = run(src).unwrap();
        match &out[0].body {
            QueryBody::Valuation(v) => {
                assert!(v.grades().iter().all(|g| g.value() == 0.5));
            }
            other => panic!("{other:?}"),
        }
        let err = run(&src.replace("syad a given S", "syad zz given S")).unwrap_err();
        assert_eq!(err.pos, Pos::new(5, 6));
        let err = run(&src.replace("at t2", "at t9")).unwrap_err();
        assert_eq!(err.pos.line, 4);
    }

    #[test]
    fn failed_statement_leaves_environment_intact() {
        let stmts = parse(&tokenize("universe U = {a}; set S on U = 3/a").unwrap()).unwrap();
        let mut env = Environment::new();
        assert!(evaluate(&stmts, &mut env).is_err());
        assert_eq!(env.len(), 1);
        assert!(env.get("S").is_none());
    }
}
