//! Discrete fuzzy sets over finite universes.
//!
//! A [`FuzzySet`] assigns a [`Grade`] to every element of its [`Universe`].
//! Connectives are pointwise: `And` is min, `Or` is max, `Implies` is the
//! Kleene-Dienes form `max(1 - a, b)`, and negation is `1 - a`. Some older
//! presentations print the min/max labels the other way around; here min is
//! always conjunction.
//!
//! Hedges transform grades: `Very` and `Most` square (concentration),
//! `MoreOrLess` takes the square root (diffusion), `NotVery` is `1 - a^2`.

use std::fmt;
use std::sync::Arc;

use crate::error::{FuzzyError, Result};

/// A finite, ordered, non-empty set of distinct element labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    name: String,
    elements: Vec<String>,
}

impl Universe {
    pub fn new<N, I, S>(name: N, elements: I) -> Result<Self>
    where
        N: Into<String>,
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let name = name.into();
        let mut labels: Vec<String> = Vec::new();
        for e in elements {
            let e = e.into();
            if labels.contains(&e) {
                return Err(FuzzyError::DuplicateElement(e));
            }
            labels.push(e);
        }
        if labels.is_empty() {
            return Err(FuzzyError::EmptyUniverse(name));
        }
        Ok(Self {
            name,
            elements: labels,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Elements in declaration order.
    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, element: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == element)
            .ok_or_else(|| FuzzyError::UnknownElement {
                element: element.to_string(),
                universe: self.name.clone(),
            })
    }

    pub fn contains(&self, element: &str) -> bool {
        self.elements.iter().any(|e| e == element)
    }
}

pub(crate) fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_same(a: &Arc<Universe>, b: &Arc<Universe>) -> Result<()> {
    if same_universe(a, b) {
        Ok(())
    } else {
        Err(FuzzyError::UniverseMismatch {
            expected: a.name().to_string(),
            found: b.name().to_string(),
        })
    }
}

/// A membership grade in the closed unit interval.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Grade(f64);

impl Grade {
    pub const ZERO: Grade = Grade(0.0);
    pub const ONE: Grade = Grade(1.0);

    /// Rejects anything outside `[0, 1]`, including NaN. No clamping.
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Grade(value))
        } else {
            Err(FuzzyError::GradeOutOfRange(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn min(self, other: Grade) -> Grade {
        Grade(self.0.min(other.0))
    }

    pub fn max(self, other: Grade) -> Grade {
        Grade(self.0.max(other.0))
    }

    pub fn complement(self) -> Grade {
        Grade(1.0 - self.0)
    }

    pub fn square(self) -> Grade {
        Grade(self.0 * self.0)
    }

    pub fn sqrt(self) -> Grade {
        Grade(self.0.sqrt())
    }
}

impl TryFrom<f64> for Grade {
    type Error = FuzzyError;

    fn try_from(value: f64) -> Result<Self> {
        Grade::new(value)
    }
}

impl From<Grade> for f64 {
    fn from(g: Grade) -> f64 {
        g.0
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connective {
    And,
    Or,
    Implies,
}

impl Connective {
    pub fn apply(self, a: Grade, b: Grade) -> Grade {
        match self {
            Connective::And => a.min(b),
            Connective::Or => a.max(b),
            Connective::Implies => a.complement().max(b),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hedge {
    Very,
    /// Alias of `Very`.
    Most,
    MoreOrLess,
    NotVery,
}

impl Hedge {
    pub fn apply(self, g: Grade) -> Grade {
        match self {
            Hedge::Very | Hedge::Most => g.square(),
            Hedge::MoreOrLess => g.sqrt(),
            Hedge::NotVery => g.square().complement(),
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Hedge::Very => "very",
            Hedge::Most => "most",
            Hedge::MoreOrLess => "more-or-less",
            Hedge::NotVery => "not-very",
        }
    }
}

/// A total membership function over a universe.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySet {
    universe: Arc<Universe>,
    grades: Vec<Grade>,
}

impl FuzzySet {
    /// Singleton-sum construction `g1/e1 + g2/e2 + ...`. Unlisted elements get 0.
    pub fn from_pairs<S: AsRef<str>>(universe: Arc<Universe>, pairs: &[(S, f64)]) -> Result<Self> {
        let mut grades = vec![Grade::ZERO; universe.len()];
        let mut seen = vec![false; universe.len()];
        for (element, value) in pairs {
            let element = element.as_ref();
            let grade = Grade::new(*value)?;
            let idx = universe.index_of(element)?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(FuzzyError::DuplicateElement(element.to_string()));
            }
            grades[idx] = grade;
        }
        Ok(Self { universe, grades })
    }

    /// Grades given in universe order; the length must match the universe.
    pub fn from_grades(universe: Arc<Universe>, values: &[f64]) -> Result<Self> {
        if values.len() != universe.len() {
            return Err(FuzzyError::SchemaMismatch(format!(
                "{} grades supplied for universe `{}` of size {}",
                values.len(),
                universe.name(),
                universe.len()
            )));
        }
        let grades = values
            .iter()
            .map(|&v| Grade::new(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { universe, grades })
    }

    pub fn empty(universe: Arc<Universe>) -> Self {
        let grades = vec![Grade::ZERO; universe.len()];
        Self { universe, grades }
    }

    pub(crate) fn from_raw(universe: Arc<Universe>, grades: Vec<Grade>) -> Self {
        debug_assert_eq!(universe.len(), grades.len());
        Self { universe, grades }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn membership(&self, element: &str) -> Result<Grade> {
        Ok(self.grades[self.universe.index_of(element)?])
    }

    /// `(element, grade)` pairs in universe order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, Grade)> + '_ {
        self.universe
            .elements()
            .iter()
            .map(String::as_str)
            .zip(self.grades.iter().copied())
    }

    /// Largest grade; 0 for the empty set.
    pub fn height(&self) -> Grade {
        self.grades.iter().copied().fold(Grade::ZERO, Grade::max)
    }

    pub fn combine(&self, other: &FuzzySet, connective: Connective) -> Result<FuzzySet> {
        check_same(&self.universe, &other.universe)?;
        let grades = self
            .grades
            .iter()
            .zip(&other.grades)
            .map(|(&a, &b)| connective.apply(a, b))
            .collect();
        Ok(Self::from_raw(self.universe.clone(), grades))
    }

    pub fn and(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.combine(other, Connective::And)
    }

    pub fn or(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.combine(other, Connective::Or)
    }

    pub fn implies(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.combine(other, Connective::Implies)
    }

    pub fn negate(&self) -> FuzzySet {
        self.map(Grade::complement)
    }

    pub fn hedge(&self, hedge: Hedge) -> FuzzySet {
        self.map(|g| hedge.apply(g))
    }

    fn map(&self, f: impl Fn(Grade) -> Grade) -> FuzzySet {
        Self::from_raw(
            self.universe.clone(),
            self.grades.iter().map(|&g| f(g)).collect(),
        )
    }
}

impl fmt::Display for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (e, g)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{g}/{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u5() -> Arc<Universe> {
        Arc::new(Universe::new("U", ["x1", "x2", "x3", "x4", "x5"]).unwrap())
    }

    fn tall() -> FuzzySet {
        FuzzySet::from_pairs(
            u5(),
            &[
                ("x1", 0.56),
                ("x2", 0.6),
                ("x3", 0.65),
                ("x4", 0.67),
                ("x5", 0.69),
            ],
        )
        .unwrap()
    }

    #[test]
    fn universe_rejects_duplicates_and_empty() {
        assert_eq!(
            Universe::new("U", ["a", "a"]),
            Err(FuzzyError::DuplicateElement("a".into()))
        );
        assert_eq!(
            Universe::new("U", Vec::<String>::new()),
            Err(FuzzyError::EmptyUniverse("U".into()))
        );
    }

    #[test]
    fn universe_labels_are_case_sensitive() {
        let u = Universe::new("U", ["a", "A"]).unwrap();
        assert_eq!(u.index_of("A").unwrap(), 1);
        assert!(u.index_of("b").is_err());
    }

    #[test]
    fn grade_bounds() {
        assert!(Grade::new(0.0).is_ok());
        assert!(Grade::new(1.0).is_ok());
        assert_eq!(Grade::new(1.2), Err(FuzzyError::GradeOutOfRange(1.2)));
        assert!(Grade::new(-0.1).is_err());
        assert!(Grade::new(f64::NAN).is_err());
    }

    #[test]
    fn make_set_tall() {
        let t = tall();
        assert_eq!(t.membership("x2").unwrap().value(), 0.6);
        assert_eq!(t.membership("x1").unwrap().value(), 0.56);
        assert!(matches!(
            t.membership("x9"),
            Err(FuzzyError::UnknownElement { .. })
        ));
    }

    #[test]
    fn make_set_partial_and_errors() {
        let u = Arc::new(Universe::new("U", ["x1", "x2"]).unwrap());
        let z = FuzzySet::from_pairs::<&str>(u.clone(), &[]).unwrap();
        assert!(z.grades().iter().all(|g| g.value() == 0.0));
        assert_eq!(z.membership("x1").unwrap(), Grade::ZERO);

        let one = Arc::new(Universe::new("U", ["x1"]).unwrap());
        assert_eq!(
            FuzzySet::from_pairs(one, &[("x1", 1.2)]),
            Err(FuzzyError::GradeOutOfRange(1.2))
        );
        assert!(matches!(
            FuzzySet::from_pairs(u.clone(), &[("q", 0.2)]),
            Err(FuzzyError::UnknownElement { .. })
        ));
        assert_eq!(
            FuzzySet::from_pairs(u, &[("x1", 0.2), ("x1", 0.3)]),
            Err(FuzzyError::DuplicateElement("x1".into()))
        );
    }

    #[test]
    fn connectives() {
        let t = tall();
        let both = t.and(&t.negate()).unwrap();
        assert_eq!(both.membership("x2").unwrap().value(), 0.4);

        let z = FuzzySet::empty(u5());
        assert_eq!(t.or(&z).unwrap(), t);

        let imp = z.implies(&t).unwrap();
        assert!(imp.grades().iter().all(|g| g.value() == 1.0));
    }

    #[test]
    fn combine_requires_same_universe() {
        let other = Arc::new(Universe::new("V", ["x1"]).unwrap());
        let err = tall().and(&FuzzySet::empty(other)).unwrap_err();
        assert!(matches!(err, FuzzyError::UniverseMismatch { .. }));
    }

    #[test]
    fn structurally_equal_universes_are_compatible() {
        let a = FuzzySet::empty(u5());
        let b = FuzzySet::empty(u5());
        assert!(a.and(&b).is_ok());
    }

    #[test]
    fn negation() {
        let t = tall();
        assert!((t.negate().membership("x1").unwrap().value() - 0.44).abs() < 1e-15);
        let half = FuzzySet::from_grades(u5(), &[0.5; 5]).unwrap();
        assert_eq!(half.negate(), half);
        for (a, b) in t.negate().negate().grades().iter().zip(t.grades()) {
            assert!((a.value() - b.value()).abs() <= 1e-12);
        }
    }

    #[test]
    fn hedges() {
        let u = Arc::new(Universe::new("U", ["a", "b", "c"]).unwrap());
        let s = FuzzySet::from_grades(u, &[0.6, 0.25, 1.0]).unwrap();
        let very = s.hedge(Hedge::Very);
        assert!((very.grades()[0].value() - 0.36).abs() < 1e-15);
        assert_eq!(s.hedge(Hedge::Most), very);
        assert_eq!(s.hedge(Hedge::MoreOrLess).grades()[1].value(), 0.5);
        assert_eq!(s.hedge(Hedge::NotVery).grades()[2].value(), 0.0);
    }

    #[test]
    fn singleton_sum_display() {
        let u = Arc::new(Universe::new("U", ["x1", "x2"]).unwrap());
        let s = FuzzySet::from_pairs(u, &[("x2", 0.6)]).unwrap();
        assert_eq!(s.to_string(), "0/x1 + 0.6/x2");
    }
}
