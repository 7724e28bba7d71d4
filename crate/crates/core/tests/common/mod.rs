#![allow(dead_code)]

//! Brute-force oracle: probabilities recomputed by summing raw atom weights
//! keyed by label, independently of `ProbabilitySpace`.

use std::collections::BTreeMap;

use proptest::prelude::*;
use rccs_core::{Event, Partition, ProbabilitySpace, Rational};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

pub struct Oracle {
    weights: BTreeMap<String, Rational>,
}

impl Oracle {
    pub fn new(pairs: &[(&str, Rational)]) -> Self {
        Oracle {
            weights: pairs
                .iter()
                .map(|(l, w)| (l.to_string(), w.clone()))
                .collect(),
        }
    }

    pub fn of(space: &ProbabilitySpace) -> Self {
        Oracle {
            weights: space
                .atoms()
                .map(|(l, w)| (l.to_string(), w.clone()))
                .collect(),
        }
    }

    pub fn p(&self, labels: &[&str]) -> Rational {
        labels.iter().map(|l| self.weights[*l].clone()).sum()
    }

    fn and<'a>(x: &[&'a str], y: &[&str]) -> Vec<&'a str> {
        x.iter().copied().filter(|l| y.contains(l)).collect()
    }

    pub fn cond(&self, e: &[&str], c: &[&str]) -> Rational {
        self.p(&Self::and(e, c)).checked_div(&self.p(c)).unwrap()
    }

    pub fn cond_corr(&self, a: &[&str], b: &[&str], c: &[&str]) -> Rational {
        self.cond(&Self::and(a, b), c) - self.cond(a, c) * self.cond(b, c)
    }

    pub fn corr(&self, a: &[&str], b: &[&str]) -> Rational {
        let all: Vec<&str> = self.weights.keys().map(String::as_str).collect();
        self.cond_corr(a, b, &all)
    }

    pub fn complement<'a>(&'a self, e: &[&str]) -> Vec<&'a str> {
        self.weights
            .keys()
            .map(String::as_str)
            .filter(|l| !e.contains(l))
            .collect()
    }
}

/// Raw material for a random space: positive integer weights and
/// membership masks for two events and a partition assignment.
#[derive(Debug, Clone)]
pub struct RawSpace {
    pub weights: Vec<i64>,
    pub a: Vec<bool>,
    pub b: Vec<bool>,
    pub blocks: Vec<usize>,
}

pub struct Built {
    pub space: ProbabilitySpace,
    pub a: Event,
    pub b: Event,
    pub partition: Partition,
}

impl RawSpace {
    pub fn build(&self) -> Built {
        let total: i64 = self.weights.iter().sum();
        let space = ProbabilitySpace::new(
            self.weights
                .iter()
                .enumerate()
                .map(|(i, w)| (format!("w{i}"), q(*w, total))),
        )
        .unwrap();
        let pick = |mask: &[bool]| {
            space
                .event_from_indices(mask.iter().enumerate().filter(|(_, m)| **m).map(|(i, _)| i))
                .unwrap()
        };
        let a = pick(&self.a);
        let b = pick(&self.b);
        let partition = Partition::from_assignment(&space, &canonical(&self.blocks)).unwrap();
        Built {
            space,
            a,
            b,
            partition,
        }
    }
}

/// Relabels block ids to `0..k` in order of first appearance.
pub fn canonical(blocks: &[usize]) -> Vec<usize> {
    let mut seen: Vec<usize> = Vec::new();
    blocks
        .iter()
        .map(|b| match seen.iter().position(|s| s == b) {
            Some(i) => i,
            None => {
                seen.push(*b);
                seen.len() - 1
            }
        })
        .collect()
}

/// Random spaces of 3..=`max_atoms` atoms whose partition has at least two
/// blocks.
pub fn raw_space(max_atoms: usize) -> impl Strategy<Value = RawSpace> {
    (3..=max_atoms).prop_flat_map(|m| {
        (
            prop::collection::vec(1i64..=9, m),
            prop::collection::vec(any::<bool>(), m),
            prop::collection::vec(any::<bool>(), m),
            prop::collection::vec(0usize..4, m),
        )
            .prop_filter("partition needs two blocks", |(_, _, _, blocks)| {
                blocks.iter().any(|b| *b != blocks[0])
            })
            .prop_map(|(weights, a, b, blocks)| RawSpace {
                weights,
                a,
                b,
                blocks,
            })
    })
}

/// A space with one 4-atom block per cause cell, every block restoring
/// conditional correlation `epsilon`.
#[derive(Debug, Clone)]
pub struct ScreenedSpec {
    pub epsilon: Rational,
    pub blocks: Vec<(i64, i64, i64)>,
}

pub fn screened_spec() -> impl Strategy<Value = ScreenedSpec> {
    (
        -2i64..=2,
        prop::collection::vec((1i64..=5, 1i64..8, 1i64..8), 2..=4),
    )
        .prop_map(|(e, blocks)| ScreenedSpec {
            epsilon: q(e, 64),
            blocks,
        })
        .prop_filter_map("cells must be positive", |s| s.build().map(|_| s))
}

impl ScreenedSpec {
    pub fn build(&self) -> Option<Built> {
        let total: i64 = self.blocks.iter().map(|b| b.0).sum();
        let mut atoms = Vec::new();
        for (i, &(w, x, y)) in self.blocks.iter().enumerate() {
            let (x, y) = (q(x, 8), q(y, 8));
            let d = &x * &y + &self.epsilon;
            let cells = [d.clone(), &x - &d, &y - &d, Rational::one() - &x - &y + &d];
            if !cells.iter().all(Rational::is_positive) {
                return None;
            }
            for (k, c) in cells.into_iter().enumerate() {
                atoms.push((format!("b{i}k{k}"), q(w, total) * c));
            }
        }
        let n = self.blocks.len();
        let space = ProbabilitySpace::new(atoms).ok()?;
        let a = space
            .event_from_indices((0..n).flat_map(|i| [4 * i, 4 * i + 1]))
            .ok()?;
        let b = space
            .event_from_indices((0..n).flat_map(|i| [4 * i, 4 * i + 2]))
            .ok()?;
        let assignment: Vec<usize> = (0..4 * n).map(|j| j / 4).collect();
        let partition = Partition::from_assignment(&space, &assignment).ok()?;
        Some(Built {
            space,
            a,
            b,
            partition,
        })
    }
}
