//! The three reference spaces used throughout the tests and examples.
//!
//! * `U4`: uniform over `w1..w4`, `A = {w1,w2}`, `B = {w1,w3}` (independent).
//! * `F8`: a conjunctive fork. Atoms `cXY`/`nXY` lie in `C`/`¬C`, with
//!   `X = 1` iff the atom is in `A` and `Y = 1` iff it is in `B`.
//! * `S4`: the four Boolean cells of `(A, B)` with weights
//!   17/50, 8/50, 8/50, 17/50, so `Corr(A,B) = 9/100`.

use crate::io::SpaceDocument;
use crate::rational::Rational;
use crate::space::{Event, Partition, ProbabilitySpace};

#[derive(Debug, Clone)]
pub struct Fixture {
    pub space: ProbabilitySpace,
    events: Vec<(&'static str, Event)>,
}

impl Fixture {
    fn new(space: ProbabilitySpace, events: &[(&'static str, &[&str])]) -> Self {
        let events = events
            .iter()
            .map(|(name, labels)| (*name, space.event(labels.iter()).expect("fixture labels")))
            .collect();
        Fixture { space, events }
    }

    /// Panics on an unknown name.
    pub fn event(&self, name: &str) -> &Event {
        self.events
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, e)| e)
            .unwrap_or_else(|| panic!("fixture has no event {name:?}"))
    }

    /// `{C, ¬C}` for fixtures that define `C`.
    pub fn cause_partition(&self) -> Partition {
        let c = self.event("C").clone();
        let not_c = c.complement();
        Partition::new(&self.space, vec![c, not_c]).expect("C is proper")
    }

    pub fn document(&self) -> SpaceDocument {
        let mut doc = SpaceDocument::new(self.space.clone());
        for (name, e) in &self.events {
            doc.events.insert(name.to_string(), e.clone());
        }
        doc
    }
}

pub fn u4() -> Fixture {
    let space = ProbabilitySpace::uniform(["w1", "w2", "w3", "w4"]).expect("uniform");
    Fixture::new(space, &[("A", &["w1", "w2"]), ("B", &["w1", "w3"])])
}

pub const F8_LABELS: [&str; 8] = ["c11", "c10", "c01", "c00", "n11", "n10", "n01", "n00"];

pub fn f8_weights() -> [Rational; 8] {
    [
        Rational::frac(8, 25),
        Rational::frac(2, 25),
        Rational::frac(2, 25),
        Rational::frac(1, 50),
        Rational::frac(1, 50),
        Rational::frac(2, 25),
        Rational::frac(2, 25),
        Rational::frac(8, 25),
    ]
}

pub fn f8() -> Fixture {
    let space = ProbabilitySpace::new(F8_LABELS.into_iter().zip(f8_weights())).expect("weights");
    Fixture::new(
        space,
        &[
            ("A", &["c11", "c10", "n11", "n10"]),
            ("B", &["c11", "c01", "n11", "n01"]),
            ("C", &["c11", "c10", "c01", "c00"]),
            ("notC", &["n11", "n10", "n01", "n00"]),
        ],
    )
}

pub fn s4() -> Fixture {
    let space = ProbabilitySpace::new([
        ("AB", Rational::frac(17, 50)),
        ("AnB", Rational::frac(4, 25)),
        ("nAB", Rational::frac(4, 25)),
        ("nAnB", Rational::frac(17, 50)),
    ])
    .expect("weights");
    Fixture::new(space, &[("A", &["AB", "AnB"]), ("B", &["AB", "nAB"])])
}

/// The four-cell space over `(A, B)` with `p(A) = a`, `p(B) = b` and
/// `p(A∧B) = ab + epsilon + delta`, or `None` when some cell would not be
/// strictly positive.
pub fn four_cell(
    a: &Rational,
    b: &Rational,
    epsilon: &Rational,
    delta: &Rational,
) -> Option<Fixture> {
    let ab = a * b + epsilon + delta;
    let cells = [ab.clone(), a - &ab, b - &ab, Rational::one() - a - b + &ab];
    if cells.iter().any(|c| !c.is_positive()) {
        return None;
    }
    let space = ProbabilitySpace::new(["AB", "AnB", "nAB", "nAnB"].into_iter().zip(cells)).ok()?;
    Some(Fixture::new(
        space,
        &[("A", &["AB", "AnB"]), ("B", &["AB", "nAB"])],
    ))
}
