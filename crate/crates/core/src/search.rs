//! Brute-force ground truth: exhaustive partition search and randomized
//! falsification of admissibility.
//!
//! The search decides hits with its own clause arithmetic on raw atom
//! weights, sharing no code with [`crate::models`]; the validator report is
//! attached to each hit so the two can be compared.

use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::admissible::{complete_tail, is_admissible, AdmissibleSet, Family, TargetProfile};
use crate::error::{Error, Result};
use crate::models::check_system;
use crate::rational::Rational;
use crate::report::{ConditionReport, Model};
use crate::space::{Event, Partition, ProbabilitySpace};

/// Upper bound on the number of partitions a single search may examine.
pub const SEARCH_BUDGET: u64 = 10_000_000;

/// Stirling number of the second kind, `S(m, n)`.
pub fn stirling2(m: usize, n: usize) -> BigUint {
    let mut row = vec![BigUint::zero(); n + 1];
    row[0] = BigUint::one();
    for _ in 0..m {
        for k in (1..=n).rev() {
            row[k] = &row[k] * BigUint::from(k) + &row[k - 1];
        }
        row[0] = BigUint::zero();
    }
    row[n].clone()
}

/// Restricted growth strings of length `m` with exactly `n` distinct values,
/// in lexicographic order. Position `i` holds the block of atom `i`.
#[derive(Debug, Clone)]
pub struct GrowthStrings {
    m: usize,
    n: usize,
    current: Option<Vec<usize>>,
}

impl GrowthStrings {
    pub fn new(m: usize, n: usize) -> Self {
        let current = (n >= 1 && n <= m).then(|| {
            let mut s = vec![0; m];
            for (j, slot) in s[m - n + 1..].iter_mut().enumerate() {
                *slot = j + 1;
            }
            s
        });
        GrowthStrings { m, n, current }
    }

    fn advance(&self, s: &[usize]) -> Option<Vec<usize>> {
        let (m, n) = (self.m, self.n);
        let mut prefix_max = vec![0; m];
        for i in 1..m {
            prefix_max[i] = prefix_max[i - 1].max(s[i - 1]);
        }
        for i in (1..m).rev() {
            let v = s[i] + 1;
            if v > prefix_max[i] + 1 || v >= n {
                continue;
            }
            let top = prefix_max[i].max(v);
            let remaining = m - 1 - i;
            if top + remaining < n - 1 {
                continue;
            }
            let mut next = s[..i].to_vec();
            next.push(v);
            let fresh = n - 1 - top;
            next.extend(std::iter::repeat(0).take(remaining - fresh));
            next.extend(top + 1..n);
            return Some(next);
        }
        None
    }
}

impl Iterator for GrowthStrings {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        self.current = self.advance(&cur);
        Some(cur)
    }
}

/// Every partition of the atoms into exactly `n` blocks, each once.
pub fn enumerate_partitions(
    space: &ProbabilitySpace,
    n: usize,
) -> Result<impl Iterator<Item = Partition> + '_> {
    if n < 2 || n > space.len() {
        return Err(Error::InvalidArgument(format!(
            "partition size {n} outside 2..={}",
            space.len()
        )));
    }
    Ok(GrowthStrings::new(space.len(), n)
        .map(move |s| Partition::from_assignment(space, &s).expect("growth string is a partition")))
}

#[derive(Debug, Clone)]
pub struct SearchQuery {
    pub a: Event,
    pub b: Event,
    pub epsilon: Rational,
    pub model: Model,
    pub sizes: RangeInclusive<usize>,
}

#[derive(Debug, Clone)]
pub struct SearchHit {
    pub partition: Partition,
    pub report: ConditionReport,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub hits: Vec<SearchHit>,
    pub partitions_examined: u64,
}

impl SearchReport {
    pub fn to_json(&self, space: &ProbabilitySpace) -> Value {
        let hits: Vec<Value> = self
            .hits
            .iter()
            .map(|h| {
                json!({
                    "blocks": h.partition.block_labels(space),
                    "report": h.report,
                })
            })
            .collect();
        json!({
            "partitions_examined": self.partitions_examined,
            "hits": hits,
        })
    }
}

/// Atom-level data for the oracle.
struct Atoms {
    weight: Vec<Rational>,
    in_a: Vec<bool>,
    in_b: Vec<bool>,
}

#[derive(Clone)]
struct Sums {
    w: Rational,
    wa: Rational,
    wb: Rational,
    wab: Rational,
}

fn block_sums(atoms: &Atoms, assignment: &[usize], n: usize) -> Vec<Sums> {
    let mut sums = vec![
        Sums {
            w: Rational::zero(),
            wa: Rational::zero(),
            wb: Rational::zero(),
            wab: Rational::zero(),
        };
        n
    ];
    for (i, &blk) in assignment.iter().enumerate() {
        let s = &mut sums[blk];
        let w = &atoms.weight[i];
        s.w += w;
        if atoms.in_a[i] {
            s.wa += w;
        }
        if atoms.in_b[i] {
            s.wb += w;
        }
        if atoms.in_a[i] && atoms.in_b[i] {
            s.wab += w;
        }
    }
    sums
}

/// Decides the model's clauses with denominators cleared:
/// `Corr_{C_i} = ε` iff `wab·w − wa·wb = ε·w²`, and so on.
fn oracle_accepts(
    atoms: &Atoms,
    assignment: &[usize],
    n: usize,
    model: Model,
    epsilon: &Rational,
) -> bool {
    let eps = match model {
        Model::HrRccs | Model::MRccs => Rational::zero(),
        _ => epsilon.clone(),
    };
    let sums = block_sums(atoms, assignment, n);
    for s in &sums {
        if s.w.is_zero() || &s.wab * &s.w - &s.wa * &s.wb != &eps * &s.w * &s.w {
            return false;
        }
    }
    match model {
        Model::HrRccs | Model::GhrRccs => {
            for i in 0..n {
                for j in i + 1..n {
                    let (x, y) = (&sums[i], &sums[j]);
                    let da = &x.wa * &y.w - &y.wa * &x.w;
                    let db = &x.wb * &y.w - &y.wb * &x.w;
                    if !(da * db).is_positive() {
                        return false;
                    }
                }
            }
            true
        }
        _ => {
            let pa: Rational = sums.iter().map(|s| &s.wa).sum();
            let pb: Rational = sums.iter().map(|s| &s.wb).sum();
            sums.iter()
                .all(|s| ((&s.wa - &pa * &s.w) * (&s.wb - &pb * &s.w)).is_positive())
        }
    }
}

/// Every partition in the size range that satisfies the queried model.
pub fn find_rccs(space: &ProbabilitySpace, query: &SearchQuery) -> Result<SearchReport> {
    if !matches!(
        query.model,
        Model::HrRccs | Model::GhrRccs | Model::MRccs | Model::GmRccs
    ) {
        return Err(Error::InvalidArgument(format!(
            "{} is not a common cause system model",
            query.model
        )));
    }
    let (lo, hi) = (*query.sizes.start(), *query.sizes.end());
    if lo < 2 || lo > hi || hi > space.len() {
        return Err(Error::InvalidArgument(format!(
            "size range {lo}..={hi} must lie within 2..={}",
            space.len()
        )));
    }
    space.prob(&query.a)?;
    space.prob(&query.b)?;
    let total: BigUint = (lo..=hi).map(|n| stirling2(space.len(), n)).sum();
    if total > BigUint::from(SEARCH_BUDGET) {
        return Err(Error::SearchBudgetExceeded {
            required: total.to_string(),
            budget: SEARCH_BUDGET,
        });
    }
    let atoms = Atoms {
        weight: space.weights().to_vec(),
        in_a: (0..space.len()).map(|i| query.a.contains(i)).collect(),
        in_b: (0..space.len()).map(|i| query.b.contains(i)).collect(),
    };
    let mut hits = Vec::new();
    let mut examined = 0u64;
    for n in lo..=hi {
        for s in GrowthStrings::new(space.len(), n) {
            examined += 1;
            if oracle_accepts(&atoms, &s, n, query.model, &query.epsilon) {
                let partition = Partition::from_assignment(space, &s)?;
                let report = check_system(
                    query.model,
                    space,
                    &query.a,
                    &query.b,
                    &partition,
                    &query.epsilon,
                )?;
                hits.push(SearchHit { partition, report });
            }
        }
    }
    debug_assert_eq!(Some(examined), total.to_u64());
    Ok(SearchReport {
        hits,
        partitions_examined: examined,
    })
}

const HEAD_GRID: i64 = 64;

fn differentiated(set: &AdmissibleSet, profile: &TargetProfile, family: Family) -> bool {
    let es = set.entries();
    match family {
        Family::Hr => (0..es.len()).all(|i| {
            (i + 1..es.len()).all(|j| ((&es[i].a - &es[j].a) * (&es[i].b - &es[j].b)).is_positive())
        }),
        Family::M => es
            .iter()
            .all(|e| ((&e.a - &profile.a) * (&e.b - &profile.b)).is_positive()),
    }
}

/// Draws `trials` seeded candidate sets (dyadic heads, tails completed from
/// the profile) and returns the first that is admissible for `family`.
pub fn sample_admissible_search(
    profile: &TargetProfile,
    trials: u64,
    seed: u64,
    family: Family,
) -> Result<Option<AdmissibleSet>> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = profile.n as i64 - 1;
    for _ in 0..trials {
        let head: Vec<_> = (0..k)
            .map(|_| {
                (
                    Rational::frac(rng.random_range(1..HEAD_GRID), HEAD_GRID),
                    Rational::frac(rng.random_range(1..HEAD_GRID), HEAD_GRID),
                    Rational::frac(rng.random_range(1..HEAD_GRID), HEAD_GRID * k),
                )
            })
            .collect();
        let Ok(set) = complete_tail(&head, profile) else {
            continue;
        };
        if differentiated(&set, profile, family) && is_admissible(family, &set, profile).verdict {
            return Ok(Some(set));
        }
    }
    Ok(None)
}
