//! Finite classical probability spaces with an exact measure.
//!
//! A [`ProbabilitySpace`] is an ordered list of labelled atoms with strictly
//! positive rational weights summing to one. Events are atom subsets tied to
//! the space that created them; mixing events of different spaces is an
//! error rather than a silent relabelling.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Identity token shared by a space and every event or partition built on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpaceId(u64);

impl SpaceId {
    fn fresh() -> Self {
        static NEXT: AtomicU64 = AtomicU64::new(1);
        SpaceId(NEXT.fetch_add(1, Ordering::Relaxed))
    }
}

#[derive(Clone)]
pub struct ProbabilitySpace {
    id: SpaceId,
    labels: Vec<String>,
    weights: Vec<Rational>,
    index: HashMap<String, usize>,
}

impl fmt::Debug for ProbabilitySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.labels.iter().zip(&self.weights))
            .finish()
    }
}

impl ProbabilitySpace {
    pub fn new<S: Into<String>>(atoms: impl IntoIterator<Item = (S, Rational)>) -> Result<Self> {
        let mut labels = Vec::new();
        let mut weights = Vec::new();
        let mut index = HashMap::new();
        for (label, weight) in atoms {
            let label = label.into();
            if !weight.is_positive() {
                return Err(Error::InvalidSpace(format!(
                    "weight of atom {label:?} must be strictly positive, got {weight}"
                )));
            }
            if index.insert(label.clone(), labels.len()).is_some() {
                return Err(Error::InvalidSpace(format!(
                    "atom label {label:?} is not unique"
                )));
            }
            labels.push(label);
            weights.push(weight);
        }
        if labels.is_empty() {
            return Err(Error::InvalidSpace("space has no atoms".into()));
        }
        let total: Rational = weights.iter().sum();
        if total != 1 {
            return Err(Error::InvalidSpace(format!(
                "atom weights sum to {total}, expected 1"
            )));
        }
        Ok(ProbabilitySpace {
            id: SpaceId::fresh(),
            labels,
            weights,
            index,
        })
    }

    /// Uniform space over the given labels.
    pub fn uniform<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len() as i64;
        if n == 0 {
            return Err(Error::InvalidSpace("space has no atoms".into()));
        }
        Self::new(labels.into_iter().map(|l| (l, Rational::frac(1, n))))
    }

    pub fn id(&self) -> SpaceId {
        self.id
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn label(&self, atom: usize) -> &str {
        &self.labels[atom]
    }

    pub fn weight(&self, atom: usize) -> &Rational {
        &self.weights[atom]
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&str, &Rational)> {
        self.labels.iter().map(String::as_str).zip(&self.weights)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn event<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<Event> {
        let mut members = FixedBitSet::with_capacity(self.len());
        for label in labels {
            let label = label.as_ref();
            let i = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownAtom(label.to_string()))?;
            members.insert(i);
        }
        Ok(Event {
            space: self.id,
            members,
        })
    }

    pub fn event_from_indices(&self, atoms: impl IntoIterator<Item = usize>) -> Result<Event> {
        let mut members = FixedBitSet::with_capacity(self.len());
        for i in atoms {
            if i >= self.len() {
                return Err(Error::InvalidArgument(format!(
                    "atom index {i} out of range for a space of {} atoms",
                    self.len()
                )));
            }
            members.insert(i);
        }
        Ok(Event {
            space: self.id,
            members,
        })
    }

    pub fn empty_event(&self) -> Event {
        Event {
            space: self.id,
            members: FixedBitSet::with_capacity(self.len()),
        }
    }

    /// The sure event Ω.
    pub fn full_event(&self) -> Event {
        let mut members = FixedBitSet::with_capacity(self.len());
        members.insert_range(..);
        Event {
            space: self.id,
            members,
        }
    }

    pub fn owns(&self, event: &Event) -> bool {
        event.space == self.id && event.members.len() == self.len()
    }

    fn check(&self, event: &Event) -> Result<()> {
        if self.owns(event) {
            Ok(())
        } else {
            Err(Error::ForeignEvent)
        }
    }

    pub fn prob(&self, event: &Event) -> Result<Rational> {
        self.check(event)?;
        Ok(event.members.ones().map(|i| &self.weights[i]).sum())
    }

    /// `p(E | C)`.
    pub fn cond_prob(&self, event: &Event, given: &Event) -> Result<Rational> {
        let pc = self.prob(given)?;
        if pc.is_zero() {
            return Err(Error::ZeroConditioningEvent);
        }
        let joint = self.prob(&event.intersect(given)?)?;
        joint.checked_div(&pc)
    }

    /// `Corr_C(A,B) = p(A∧B|C) − p(A|C)p(B|C)`.
    pub fn cond_correlation(&self, a: &Event, b: &Event, given: &Event) -> Result<Rational> {
        let ab = a.intersect(b)?;
        let p_ab = self.cond_prob(&ab, given)?;
        let p_a = self.cond_prob(a, given)?;
        let p_b = self.cond_prob(b, given)?;
        Ok(p_ab - p_a * p_b)
    }

    /// Unconditional correlation, i.e. conditioning on Ω.
    pub fn correlation(&self, a: &Event, b: &Event) -> Result<Rational> {
        self.cond_correlation(a, b, &self.full_event())
    }

    /// Actual minus expected correlation.
    pub fn deviation(&self, a: &Event, b: &Event, expected: &Rational) -> Result<Rational> {
        Ok(self.correlation(a, b)? - expected)
    }
}

/// A set of atoms of one particular space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Event {
    space: SpaceId,
    members: FixedBitSet,
}

impl fmt::Debug for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.ones()).finish()
    }
}

impl Event {
    pub fn space_id(&self) -> SpaceId {
        self.space
    }

    pub fn contains(&self, atom: usize) -> bool {
        self.members.contains(atom)
    }

    pub fn atoms(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn complement(&self) -> Event {
        let mut members = self.members.clone();
        members.toggle_range(..);
        Event {
            space: self.space,
            members,
        }
    }

    fn same_space(&self, other: &Event) -> Result<()> {
        if self.space == other.space && self.members.len() == other.members.len() {
            Ok(())
        } else {
            Err(Error::ForeignEvent)
        }
    }

    pub fn intersect(&self, other: &Event) -> Result<Event> {
        self.same_space(other)?;
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ok(Event {
            space: self.space,
            members,
        })
    }

    pub fn union(&self, other: &Event) -> Result<Event> {
        self.same_space(other)?;
        let mut members = self.members.clone();
        members.union_with(&other.members);
        Ok(Event {
            space: self.space,
            members,
        })
    }

    pub fn is_disjoint(&self, other: &Event) -> Result<bool> {
        self.same_space(other)?;
        Ok(self.members.is_disjoint(&other.members))
    }

    pub fn labels<'s>(&self, space: &'s ProbabilitySpace) -> Vec<&'s str> {
        self.members.ones().map(|i| space.label(i)).collect()
    }
}

/// An ordered list of at least two nonempty, pairwise disjoint events
/// covering every atom.
#[derive(Clone, PartialEq, Eq)]
pub struct Partition {
    space: SpaceId,
    blocks: Vec<Event>,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.blocks).finish()
    }
}

impl Partition {
    pub fn new(space: &ProbabilitySpace, blocks: Vec<Event>) -> Result<Self> {
        if blocks.len() < 2 {
            return Err(Error::PartitionTooSmall(blocks.len()));
        }
        let mut seen = FixedBitSet::with_capacity(space.len());
        for (i, block) in blocks.iter().enumerate() {
            space.check(block)?;
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {} is empty", i + 1)));
            }
            if !seen.is_disjoint(&block.members) {
                return Err(Error::InvalidPartition(format!(
                    "block {} overlaps an earlier block",
                    i + 1
                )));
            }
            seen.union_with(&block.members);
        }
        if seen.count_ones(..) != space.len() {
            return Err(Error::InvalidPartition(
                "blocks do not cover every atom".into(),
            ));
        }
        Ok(Partition {
            space: space.id,
            blocks,
        })
    }

    /// Builds the partition whose block `k` holds the atoms `i` with
    /// `assignment[i] == k`.
    pub fn from_assignment(space: &ProbabilitySpace, assignment: &[usize]) -> Result<Self> {
        if assignment.len() != space.len() {
            return Err(Error::InvalidPartition(format!(
                "assignment covers {} atoms, space has {}",
                assignment.len(),
                space.len()
            )));
        }
        let count = assignment.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![space.empty_event(); count];
        for (atom, &block) in assignment.iter().enumerate() {
            blocks[block].members.insert(atom);
        }
        Partition::new(space, blocks)
    }

    pub fn space_id(&self) -> SpaceId {
        self.space
    }

    pub fn blocks(&self) -> &[Event] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_labels<'s>(&self, space: &'s ProbabilitySpace) -> Vec<Vec<&'s str>> {
        self.blocks.iter().map(|b| b.labels(space)).collect()
    }
}
