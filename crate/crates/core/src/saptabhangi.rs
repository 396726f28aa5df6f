//! Seven-fold (saptabhangi) predication over fuzzy grades.
//!
//! For an element `x` with `a = asti(x)`, `n = 1 - a`, `i = avaktavya(x)` and
//! a time relation `R` over `X x T`:
//!
//! | # | name                       | grade                                   |
//! |---|----------------------------|-----------------------------------------|
//! | 1 | syad-asti                  | `a`                                     |
//! | 2 | syad-nasti                 | `n`                                     |
//! | 3 | syad-asti-nasti            | `min(a, max_t min(n, R(x, t)))`         |
//! | 4 | syad-avaktavya             | `min(a, n, R(x, t0), i)`                |
//! | 5 | syad-asti-avaktavya        | `min(a, sqrt(i))`                       |
//! | 6 | syad-nasti-avaktavya       | `min(n, i)`                             |
//! | 7 | syad-asti-nasti-avaktavya  | `min(a, n, i)`                          |
//!
//! `t0` is the state's fixed time point. Item 3 is "at different times", so
//! the negation is composed with the time relation; item 4 is "at the same
//! time", so it is evaluated at `t0` only. Item 5 applies the diffusion hedge
//! to indescribability.

use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::fuzzy::{check_same, FuzzySet, Grade, Universe};
use crate::relation::FuzzyRelation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predication {
    Asti,
    Nasti,
    AstiNasti,
    Avaktavya,
    AstiAvaktavya,
    NastiAvaktavya,
    AstiNastiAvaktavya,
}

impl Predication {
    pub const ALL: [Predication; 7] = [
        Predication::Asti,
        Predication::Nasti,
        Predication::AstiNasti,
        Predication::Avaktavya,
        Predication::AstiAvaktavya,
        Predication::NastiAvaktavya,
        Predication::AstiNastiAvaktavya,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predication::Asti => "syad-asti",
            Predication::Nasti => "syad-nasti",
            Predication::AstiNasti => "syad-asti-nasti",
            Predication::Avaktavya => "syad-avaktavya",
            Predication::AstiAvaktavya => "syad-asti-avaktavya",
            Predication::NastiAvaktavya => "syad-nasti-avaktavya",
            Predication::AstiNastiAvaktavya => "syad-asti-nasti-avaktavya",
        }
    }

    /// `v1` .. `v7`.
    pub fn label(self) -> &'static str {
        ["v1", "v2", "v3", "v4", "v5", "v6", "v7"][self as usize]
    }
}

impl fmt::Display for Predication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Everything needed to valuate the seven predications over `X`.
#[derive(Debug, Clone, PartialEq)]
pub struct SyadState {
    asti: FuzzySet,
    avaktavya: FuzzySet,
    time_relation: FuzzyRelation,
    fixed_time: usize,
}

impl SyadState {
    /// `fixed_time` defaults to the first time point when `None`.
    pub fn new(
        asti: FuzzySet,
        avaktavya: FuzzySet,
        time_relation: FuzzyRelation,
        fixed_time: Option<&str>,
    ) -> Result<Self> {
        check_same(asti.universe(), avaktavya.universe())?;
        check_same(asti.universe(), time_relation.domain())?;
        let fixed_time = match fixed_time {
            Some(t) => time_relation.codomain().index_of(t)?,
            None => 0,
        };
        Ok(Self {
            asti,
            avaktavya,
            time_relation,
            fixed_time,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.asti.universe()
    }

    pub fn asti(&self) -> &FuzzySet {
        &self.asti
    }

    pub fn avaktavya(&self) -> &FuzzySet {
        &self.avaktavya
    }

    pub fn time_relation(&self) -> &FuzzyRelation {
        &self.time_relation
    }

    pub fn fixed_time(&self) -> &str {
        &self.time_relation.codomain().elements()[self.fixed_time]
    }

    pub fn valuate(&self, element: &str) -> Result<SevenValuation> {
        let idx = self.universe().index_of(element)?;
        Ok(self.valuate_index(idx))
    }

    /// One valuation per element, in universe order.
    pub fn valuate_all(&self) -> Vec<SevenValuation> {
        (0..self.universe().len())
            .map(|i| self.valuate_index(i))
            .collect()
    }

    fn valuate_index(&self, idx: usize) -> SevenValuation {
        let a = self.asti.grades()[idx];
        let n = a.complement();
        let i = self.avaktavya.grades()[idx];
        let times = self.time_relation.row(idx);

        let not_over_time = times.iter().fold(Grade::ZERO, |acc, &r| acc.max(n.min(r)));
        let grades = [
            a,
            n,
            a.min(not_over_time),
            a.min(n.min(times[self.fixed_time])).min(i),
            a.min(i.sqrt()),
            n.min(i),
            a.min(n).min(i),
        ];
        SevenValuation {
            element: self.universe().elements()[idx].clone(),
            grades,
        }
    }
}

/// The seven grades of one element, indexed by [`Predication`].
#[derive(Debug, Clone, PartialEq)]
pub struct SevenValuation {
    element: String,
    grades: [Grade; 7],
}

impl SevenValuation {
    pub fn element(&self) -> &str {
        &self.element
    }

    pub fn grades(&self) -> &[Grade; 7] {
        &self.grades
    }

    pub fn get(&self, p: Predication) -> Grade {
        self.grades[p as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Predication, Grade)> + '_ {
        Predication::ALL.iter().map(move |&p| (p, self.get(p)))
    }
}
