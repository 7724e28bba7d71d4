//! Clause-by-clause verdicts.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// What a [`ConditionReport`] was checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Model {
    #[serde(rename = "fork")]
    ConjunctiveFork,
    #[serde(rename = "gcc")]
    GeneralisedCommonCause,
    #[serde(rename = "hr")]
    HrRccs,
    #[serde(rename = "ghr")]
    GhrRccs,
    #[serde(rename = "m")]
    MRccs,
    #[serde(rename = "gm")]
    GmRccs,
    #[serde(rename = "quasi-admissible")]
    QuasiAdmissible,
    #[serde(rename = "hr-admissible")]
    HrAdmissible,
    #[serde(rename = "m-admissible")]
    MAdmissible,
    #[serde(rename = "extension")]
    Extension,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::ConjunctiveFork => "fork",
            Model::GeneralisedCommonCause => "gcc",
            Model::HrRccs => "hr",
            Model::GhrRccs => "ghr",
            Model::MRccs => "m",
            Model::GmRccs => "gm",
            Model::QuasiAdmissible => "quasi-admissible",
            Model::HrAdmissible => "hr-admissible",
            Model::MAdmissible => "m-admissible",
            Model::Extension => "extension",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "!=")]
    Ne,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "<")]
    Lt,
    /// Strictly between 0 and 1; `rhs` is absent.
    #[serde(rename = "in (0,1)")]
    InOpenUnit,
    /// A structural property with no numeric sides.
    #[serde(rename = "holds")]
    Holds,
}

impl Relation {
    pub fn evaluate(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Ne => lhs != rhs,
            Relation::Gt => lhs > rhs,
            Relation::Lt => lhs < rhs,
            Relation::InOpenUnit => lhs.in_open_unit(),
            Relation::Holds => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Clause {
    pub id: String,
    /// 1-based cell (or entry) indices the clause refers to; empty for global clauses.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cells: Vec<usize>,
    pub holds: bool,
    /// `None` when the left side is undefined (conditioning on a null event).
    pub lhs: Option<Rational>,
    pub relation: Relation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Clause {
    /// Compares `lhs` against `rhs`; an undefined left side fails.
    pub fn compare(
        id: impl Into<String>,
        cells: Vec<usize>,
        lhs: Option<Rational>,
        relation: Relation,
        rhs: Rational,
    ) -> Self {
        let holds = lhs.as_ref().is_some_and(|l| relation.evaluate(l, &rhs));
        Clause {
            id: id.into(),
            cells,
            holds,
            lhs,
            relation,
            rhs: Some(rhs),
            note: None,
        }
    }

    pub fn in_open_unit(id: impl Into<String>, cells: Vec<usize>, value: Rational) -> Self {
        Clause {
            id: id.into(),
            cells,
            holds: value.in_open_unit(),
            lhs: Some(value),
            relation: Relation::InOpenUnit,
            rhs: None,
            note: None,
        }
    }

    pub fn structural(id: impl Into<String>, holds: bool, note: impl Into<String>) -> Self {
        Clause {
            id: id.into(),
            cells: Vec::new(),
            holds,
            lhs: None,
            relation: Relation::Holds,
            rhs: None,
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Equality of everything but the id, for comparing a generalised model
    /// at ε = 0 with its classical counterpart.
    pub fn same_values(&self, other: &Clause) -> bool {
        self.cells == other.cells
            && self.holds == other.holds
            && self.lhs == other.lhs
            && self.relation == other.relation
            && self.rhs == other.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub model: Model,
    pub verdict: bool,
    pub clauses: Vec<Clause>,
}

impl ConditionReport {
    pub fn new(model: Model, clauses: Vec<Clause>) -> Self {
        let verdict = clauses.iter().all(|c| c.holds);
        ConditionReport {
            model,
            verdict,
            clauses,
        }
    }

    pub fn failed(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.holds)
    }

    pub fn clause(&self, id: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.id == id)
    }

    pub fn clauses_with_id<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a Clause> + 'a {
        self.clauses.iter().filter(move |c| c.id == id)
    }

    /// Clause-for-clause value equality, ignoring clause ids and the model tag.
    pub fn same_values(&self, other: &ConditionReport) -> bool {
        self.verdict == other.verdict
            && self.clauses.len() == other.clauses.len()
            && self
                .clauses
                .iter()
                .zip(&other.clauses)
                .all(|(a, b)| a.same_values(b))
    }
}
