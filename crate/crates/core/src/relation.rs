//! Fuzzy relations over `X x Y` and max-min composition.

use std::sync::Arc;

use crate::error::{FuzzyError, Result};
use crate::fuzzy::{check_same, FuzzySet, Grade, Universe};

/// Dense row-major grade matrix; row `i` belongs to the `i`-th domain element.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyRelation {
    domain: Arc<Universe>,
    codomain: Arc<Universe>,
    grades: Vec<Grade>,
}

impl FuzzyRelation {
    /// Entries `g/(x, y)`; unlisted pairs get 0.
    pub fn from_entries<S: AsRef<str>>(
        domain: Arc<Universe>,
        codomain: Arc<Universe>,
        entries: &[((S, S), f64)],
    ) -> Result<Self> {
        let cols = codomain.len();
        let mut grades = vec![Grade::ZERO; domain.len() * cols];
        let mut seen = vec![false; grades.len()];
        for ((x, y), value) in entries {
            let grade = Grade::new(*value)?;
            let (x, y) = (x.as_ref(), y.as_ref());
            let idx = domain.index_of(x)? * cols + codomain.index_of(y)?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(FuzzyError::DuplicateElement(format!("({x},{y})")));
            }
            grades[idx] = grade;
        }
        Ok(Self {
            domain,
            codomain,
            grades,
        })
    }

    /// Row-major grades; the length must be `|X| * |Y|`.
    pub fn from_grades(
        domain: Arc<Universe>,
        codomain: Arc<Universe>,
        values: &[f64],
    ) -> Result<Self> {
        if values.len() != domain.len() * codomain.len() {
            return Err(FuzzyError::SchemaMismatch(format!(
                "{} grades supplied for a {}x{} relation",
                values.len(),
                domain.len(),
                codomain.len()
            )));
        }
        let grades = values
            .iter()
            .map(|&v| Grade::new(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            domain,
            codomain,
            grades,
        })
    }

    fn from_fn(
        domain: Arc<Universe>,
        codomain: Arc<Universe>,
        mut f: impl FnMut(usize, usize) -> Grade,
    ) -> Self {
        let (rows, cols) = (domain.len(), codomain.len());
        let mut grades = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                grades.push(f(i, j));
            }
        }
        Self {
            domain,
            codomain,
            grades,
        }
    }

    pub fn domain(&self) -> &Arc<Universe> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Universe> {
        &self.codomain
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn at(&self, row: usize, col: usize) -> Grade {
        self.grades[row * self.codomain.len() + col]
    }

    pub fn get(&self, x: &str, y: &str) -> Result<Grade> {
        Ok(self.at(self.domain.index_of(x)?, self.codomain.index_of(y)?))
    }

    pub fn row(&self, row: usize) -> &[Grade] {
        let cols = self.codomain.len();
        &self.grades[row * cols..(row + 1) * cols]
    }

    /// `((x, y), grade)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = ((&str, &str), Grade)> + '_ {
        let ys = self.codomain.elements();
        self.domain
            .elements()
            .iter()
            .enumerate()
            .flat_map(move |(i, x)| {
                ys.iter()
                    .enumerate()
                    .map(move |(j, y)| ((x.as_str(), y.as_str()), self.at(i, j)))
            })
    }

    /// Max-min composition with another relation: `(R o S)(x, z) = max_y min(R(x, y), S(y, z))`.
    pub fn compose(&self, other: &FuzzyRelation) -> Result<FuzzyRelation> {
        check_same(&self.codomain, &other.domain)?;
        let inner = self.codomain.len();
        Ok(Self::from_fn(
            self.domain.clone(),
            other.codomain.clone(),
            |i, k| {
                (0..inner)
                    .map(|j| self.at(i, j).min(other.at(j, k)))
                    .fold(Grade::ZERO, Grade::max)
            },
        ))
    }
}

/// `(a x b)(x, y) = min(a(x), b(y))`.
pub fn cartesian_product(a: &FuzzySet, b: &FuzzySet) -> FuzzyRelation {
    let (ga, gb) = (a.grades(), b.grades());
    FuzzyRelation::from_fn(a.universe().clone(), b.universe().clone(), |i, j| {
        ga[i].min(gb[j])
    })
}

/// Sup-min composition `(a o r)(y) = max_x min(a(x), r(x, y))`.
pub fn compose(a: &FuzzySet, r: &FuzzyRelation) -> Result<FuzzySet> {
    check_same(a.universe(), r.domain())?;
    let mut out = vec![Grade::ZERO; r.codomain().len()];
    for (i, &ax) in a.grades().iter().enumerate() {
        for (acc, &rxy) in out.iter_mut().zip(r.row(i)) {
            *acc = acc.max(ax.min(rxy));
        }
    }
    Ok(FuzzySet::from_raw(r.codomain().clone(), out))
}

/// Kleene-Dienes implication lifted to `X x Y`: `max(1 - a(x), b(y))`.
pub fn implication_relation(a: &FuzzySet, b: &FuzzySet) -> FuzzyRelation {
    let (ga, gb) = (a.grades(), b.grades());
    FuzzyRelation::from_fn(a.universe().clone(), b.universe().clone(), |i, j| {
        ga[i].complement().max(gb[j])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(name: &str, elems: &[&str]) -> Arc<Universe> {
        Arc::new(Universe::new(name, elems.iter().copied()).unwrap())
    }

    #[test]
    fn product_zero_row() {
        let x = uni("X", &["a", "b"]);
        let y = uni("Y", &["p", "q", "r"]);
        let a = FuzzySet::from_pairs(x, &[("b", 0.7)]).unwrap();
        let b = FuzzySet::from_grades(y, &[0.2, 0.9, 1.0]).unwrap();
        let r = cartesian_product(&a, &b);
        assert!(r.row(0).iter().all(|g| g.value() == 0.0));
        let row1: Vec<f64> = r.row(1).iter().map(|g| g.value()).collect();
        assert_eq!(row1, vec![0.2, 0.7, 0.7]);
    }

    #[test]
    fn product_of_crisp_singletons() {
        let u = uni("U", &["a", "e", "c"]);
        let s = FuzzySet::from_pairs(u, &[("e", 1.0)]).unwrap();
        let r = cartesian_product(&s, &s);
        for ((x, y), g) in r.iter() {
            let expected = if x == "e" && y == "e" { 1.0 } else { 0.0 };
            assert_eq!(g.value(), expected, "({x},{y})");
        }
    }

    #[test]
    fn product_tall_pair() {
        let x = uni("X", &["x1", "x2"]);
        let y = uni("Y", &["y1", "y2"]);
        let a = FuzzySet::from_pairs(x, &[("x1", 0.56), ("x2", 0.6)]).unwrap();
        let b = FuzzySet::from_pairs(y, &[("y1", 0.5), ("y2", 1.0)]).unwrap();
        let r = cartesian_product(&a, &b);
        assert_eq!(r.get("x1", "y1").unwrap().value(), 0.5);
        assert_eq!(r.get("x1", "y2").unwrap().value(), 0.56);
        assert_eq!(r.get("x2", "y1").unwrap().value(), 0.5);
        assert_eq!(r.get("x2", "y2").unwrap().value(), 0.6);
    }

    #[test]
    fn compose_trivial_cases() {
        let x = uni("X", &["a", "b", "c"]);
        let y = uni("Y", &["p", "q"]);
        let ones = FuzzyRelation::from_grades(x.clone(), y.clone(), &[1.0; 6]).unwrap();
        let zero = FuzzySet::empty(x.clone());
        assert!(compose(&zero, &ones)
            .unwrap()
            .grades()
            .iter()
            .all(|g| g.value() == 0.0));
        let normal = FuzzySet::from_grades(x, &[0.2, 1.0, 0.4]).unwrap();
        assert!(compose(&normal, &ones)
            .unwrap()
            .grades()
            .iter()
            .all(|g| g.value() == 1.0));
    }

    #[test]
    fn compose_requires_matching_domain() {
        let x = uni("X", &["a"]);
        let y = uni("Y", &["p"]);
        let r = FuzzyRelation::from_grades(x, y.clone(), &[0.3]).unwrap();
        let err = compose(&FuzzySet::empty(y), &r).unwrap_err();
        assert!(matches!(err, FuzzyError::UniverseMismatch { .. }));
    }

    #[test]
    fn implication_rows() {
        let x = uni("X", &["x1", "x2"]);
        let y = uni("Y", &["y1"]);
        let a = FuzzySet::from_pairs(x.clone(), &[("x1", 0.56), ("x2", 0.6)]).unwrap();
        let b = FuzzySet::from_pairs(y.clone(), &[("y1", 0.3)]).unwrap();
        let r = implication_relation(&a, &b);
        assert!((r.get("x1", "y1").unwrap().value() - 0.44).abs() < 1e-15);
        assert_eq!(r.get("x2", "y1").unwrap().value(), 0.4);

        let crisp = FuzzySet::from_grades(x, &[1.0, 0.0]).unwrap();
        let b2 = FuzzySet::from_grades(uni("Y", &["p", "q"]), &[0.25, 0.75]).unwrap();
        let r = implication_relation(&crisp, &b2);
        assert_eq!(r.row(0), b2.grades());
        assert!(r.row(1).iter().all(|g| g.value() == 1.0));
    }

    #[test]
    fn entries_reject_bad_input() {
        let x = uni("X", &["a"]);
        let y = uni("Y", &["p"]);
        assert!(matches!(
            FuzzyRelation::from_entries(x.clone(), y.clone(), &[(("a", "p"), 1.5)]),
            Err(FuzzyError::GradeOutOfRange(_))
        ));
        assert!(matches!(
            FuzzyRelation::from_entries(x.clone(), y.clone(), &[(("p", "a"), 0.5)]),
            Err(FuzzyError::UnknownElement { .. })
        ));
        assert!(matches!(
            FuzzyRelation::from_entries(x, y, &[(("a", "p"), 0.5), (("a", "p"), 0.5)]),
            Err(FuzzyError::DuplicateElement(_))
        ));
    }

    #[test]
    fn relation_composition() {
        let x = uni("X", &["a", "b"]);
        let y = uni("Y", &["p", "q"]);
        let z = uni("Z", &["s"]);
        let r = FuzzyRelation::from_grades(x, y.clone(), &[0.3, 0.8, 1.0, 0.1]).unwrap();
        let s = FuzzyRelation::from_grades(y, z, &[0.5, 0.6]).unwrap();
        let rs = r.compose(&s).unwrap();
        assert_eq!(rs.at(0, 0).value(), 0.6);
        assert_eq!(rs.at(1, 0).value(), 0.5);
        assert!(s.compose(&r).is_err());
    }
}
