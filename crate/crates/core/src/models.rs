//! Validators for the six common-cause models and the exact deviation
//! decomposition.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::{Clause, ConditionReport, Model, Relation};
use crate::space::{Event, Partition, ProbabilitySpace};

fn ensure_distinct(a: &Event, b: &Event, c: &Event) -> Result<()> {
    if a == b {
        return Err(Error::IdenticalEvents("A", "B"));
    }
    if a == c {
        return Err(Error::IdenticalEvents("A", "C"));
    }
    if b == c {
        return Err(Error::IdenticalEvents("B", "C"));
    }
    Ok(())
}

/// `p(E|C)`, or `None` when `p(C) = 0`.
fn cond(space: &ProbabilitySpace, e: &Event, c: &Event) -> Result<Option<Rational>> {
    match space.cond_prob(e, c) {
        Ok(v) => Ok(Some(v)),
        Err(Error::ZeroConditioningEvent) => Ok(None),
        Err(e) => Err(e),
    }
}

fn cond_corr(
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    c: &Event,
) -> Result<Option<Rational>> {
    match space.cond_correlation(a, b, c) {
        Ok(v) => Ok(Some(v)),
        Err(Error::ZeroConditioningEvent) => Ok(None),
        Err(e) => Err(e),
    }
}

fn diff(x: Option<Rational>, y: Option<Rational>) -> Option<Rational> {
    Some(x? - y?)
}

fn fork_report(
    model: Model,
    prefix: &str,
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    c: &Event,
    epsilon: &Rational,
) -> Result<ConditionReport> {
    for e in [a, b, c] {
        space.prob(e)?;
    }
    ensure_distinct(a, b, c)?;
    let not_c = c.complement();
    let zero = Rational::zero();
    let clauses = vec![
        Clause::compare(
            format!("{prefix}-0"),
            vec![],
            Some(space.prob(c)?),
            Relation::Ne,
            zero.clone(),
        ),
        Clause::compare(
            format!("{prefix}-0-complement"),
            vec![],
            Some(space.prob(&not_c)?),
            Relation::Ne,
            zero.clone(),
        ),
        Clause::compare(
            format!("{prefix}-1"),
            vec![],
            cond_corr(space, a, b, c)?,
            Relation::Eq,
            epsilon.clone(),
        ),
        Clause::compare(
            format!("{prefix}-2"),
            vec![],
            cond_corr(space, a, b, &not_c)?,
            Relation::Eq,
            epsilon.clone(),
        ),
        Clause::compare(
            format!("{prefix}-3"),
            vec![],
            diff(cond(space, a, c)?, cond(space, a, &not_c)?),
            Relation::Gt,
            zero.clone(),
        ),
        Clause::compare(
            format!("{prefix}-4"),
            vec![],
            diff(cond(space, b, c)?, cond(space, b, &not_c)?),
            Relation::Gt,
            zero,
        ),
    ];
    Ok(ConditionReport::new(model, clauses))
}

/// Reichenbach's conjunctive fork: `C` and `¬C` screen off `A` from `B`
/// and raise both probabilities.
pub fn check_conjunctive_common_cause(
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    c: &Event,
) -> Result<ConditionReport> {
    fork_report(
        Model::ConjunctiveFork,
        "c-fork",
        space,
        a,
        b,
        c,
        &Rational::zero(),
    )
}

/// The fork with screening-off replaced by restoration of the expected
/// correlation `epsilon`.
pub fn check_generalised_common_cause(
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    c: &Event,
    epsilon: &Rational,
) -> Result<ConditionReport> {
    fork_report(
        Model::GeneralisedCommonCause,
        "gc-fork",
        space,
        a,
        b,
        c,
        epsilon,
    )
}

/// Per-cell statistics shared by the system validators.
struct Cell {
    p: Rational,
    pa: Option<Rational>,
    pb: Option<Rational>,
    corr: Option<Rational>,
}

fn cells(
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    partition: &Partition,
) -> Result<Vec<Cell>> {
    if partition.space_id() != space.id() {
        return Err(Error::ForeignEvent);
    }
    if partition.len() < 2 {
        return Err(Error::PartitionTooSmall(partition.len()));
    }
    space.prob(a)?;
    space.prob(b)?;
    partition
        .blocks()
        .iter()
        .map(|c| {
            Ok(Cell {
                p: space.prob(c)?,
                pa: cond(space, a, c)?,
                pb: cond(space, b, c)?,
                corr: cond_corr(space, a, b, c)?,
            })
        })
        .collect()
}

#[derive(Clone, Copy)]
enum Differentiation {
    Pairwise,
    AgainstMarginals,
}

#[allow(clippy::too_many_arguments)]
fn system_report(
    model: Model,
    prefix: &str,
    kind: Differentiation,
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    partition: &Partition,
    epsilon: &Rational,
) -> Result<ConditionReport> {
    let cells = cells(space, a, b, partition)?;
    let zero = Rational::zero();
    let mut clauses = Vec::new();
    for (i, cell) in cells.iter().enumerate() {
        clauses.push(Clause::compare(
            format!("{prefix}-0"),
            vec![i + 1],
            Some(cell.p.clone()),
            Relation::Ne,
            zero.clone(),
        ));
    }
    for (i, cell) in cells.iter().enumerate() {
        clauses.push(Clause::compare(
            format!("{prefix}-1"),
            vec![i + 1],
            cell.corr.clone(),
            Relation::Eq,
            epsilon.clone(),
        ));
    }
    match kind {
        Differentiation::Pairwise => {
            for i in 0..cells.len() {
                for j in i + 1..cells.len() {
                    let (ci, cj) = (&cells[i], &cells[j]);
                    let lhs = diff(ci.pa.clone(), cj.pa.clone())
                        .zip(diff(ci.pb.clone(), cj.pb.clone()))
                        .map(|(x, y)| x * y);
                    clauses.push(Clause::compare(
                        format!("{prefix}-2"),
                        vec![i + 1, j + 1],
                        lhs,
                        Relation::Gt,
                        zero.clone(),
                    ));
                }
            }
        }
        Differentiation::AgainstMarginals => {
            let pa = space.prob(a)?;
            let pb = space.prob(b)?;
            for (i, cell) in cells.iter().enumerate() {
                let lhs = cell
                    .pa
                    .as_ref()
                    .zip(cell.pb.as_ref())
                    .map(|(x, y)| (x - &pa) * (y - &pb));
                clauses.push(Clause::compare(
                    format!("{prefix}-2"),
                    vec![i + 1],
                    lhs,
                    Relation::Gt,
                    zero.clone(),
                ));
            }
        }
    }
    Ok(ConditionReport::new(model, clauses))
}

pub fn check_hr_rccs(
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    partition: &Partition,
) -> Result<ConditionReport> {
    system_report(
        Model::HrRccs,
        "rccs",
        Differentiation::Pairwise,
        space,
        a,
        b,
        partition,
        &Rational::zero(),
    )
}

pub fn check_ghr_rccs(
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    partition: &Partition,
    epsilon: &Rational,
) -> Result<ConditionReport> {
    system_report(
        Model::GhrRccs,
        "grccs",
        Differentiation::Pairwise,
        space,
        a,
        b,
        partition,
        epsilon,
    )
}

pub fn check_m_rccs(
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    partition: &Partition,
) -> Result<ConditionReport> {
    system_report(
        Model::MRccs,
        "mccs",
        Differentiation::AgainstMarginals,
        space,
        a,
        b,
        partition,
        &Rational::zero(),
    )
}

pub fn check_gm_rccs(
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    partition: &Partition,
    epsilon: &Rational,
) -> Result<ConditionReport> {
    system_report(
        Model::GmRccs,
        "gmccs",
        Differentiation::AgainstMarginals,
        space,
        a,
        b,
        partition,
        epsilon,
    )
}

/// Runs the validator for one of the four system models. `epsilon` is
/// ignored by the classical models.
pub fn check_system(
    model: Model,
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    partition: &Partition,
    epsilon: &Rational,
) -> Result<ConditionReport> {
    match model {
        Model::HrRccs => check_hr_rccs(space, a, b, partition),
        Model::GhrRccs => check_ghr_rccs(space, a, b, partition, epsilon),
        Model::MRccs => check_m_rccs(space, a, b, partition),
        Model::GmRccs => check_gm_rccs(space, a, b, partition, epsilon),
        other => Err(Error::InvalidArgument(format!(
            "{other} is not a common cause system model"
        ))),
    }
}

/// Splits `Corr(A,B)` by total probability over `partition`.
///
/// Returns `(pair_sum, residual)` with
/// `pair_sum = Σ_{i<j} p(C_i)p(C_j)[p(A|C_i)−p(A|C_j)][p(B|C_i)−p(B|C_j)]`
/// and `residual = Σ_i p(C_i) Corr_{C_i}(A,B)`. Their sum is always the
/// unconditional correlation.
pub fn decompose_correlation(
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    partition: &Partition,
) -> Result<(Rational, Rational)> {
    let cells = cells(space, a, b, partition)?;
    let stats: Vec<_> = cells
        .iter()
        .map(|c| {
            // blocks of a Partition are nonempty, so every cell is conditionable
            let pa = c.pa.clone().ok_or(Error::ZeroConditioningEvent)?;
            let pb = c.pb.clone().ok_or(Error::ZeroConditioningEvent)?;
            let corr = c.corr.clone().ok_or(Error::ZeroConditioningEvent)?;
            Ok((&c.p, pa, pb, corr))
        })
        .collect::<Result<_>>()?;
    let mut pair_sum = Rational::zero();
    for i in 0..stats.len() {
        for j in i + 1..stats.len() {
            let (pi, ai, bi, _) = &stats[i];
            let (pj, aj, bj, _) = &stats[j];
            pair_sum += &(*pi * *pj * (ai - aj) * (bi - bj));
        }
    }
    let residual = stats.iter().map(|(p, _, _, corr)| *p * corr).sum();
    Ok((pair_sum, residual))
}

fn require_screening(
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    partition: &Partition,
    epsilon: &Rational,
) -> Result<()> {
    for (i, c) in partition.blocks().iter().enumerate() {
        let value = space.cond_correlation(a, b, c)?;
        if &value != epsilon {
            return Err(Error::ScreeningHypothesisViolated {
                cell: i + 1,
                value,
                expected: epsilon.clone(),
            });
        }
    }
    Ok(())
}

/// Deviation of a partition whose cells all restore `epsilon`, computed as
/// the pairwise sum. Equals `deviation(A, B, epsilon)`.
pub fn hr_deviation_formula(
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    partition: &Partition,
    epsilon: &Rational,
) -> Result<Rational> {
    let (pair_sum, _) = decompose_correlation(space, a, b, partition)?;
    require_screening(space, a, b, partition, epsilon)?;
    Ok(pair_sum)
}

/// `Σ_i p(C_i)[p(A|C_i)−p(A)][p(B|C_i)−p(B)]` for a partition whose cells
/// all restore `epsilon`. Equals `deviation(A, B, epsilon)`.
pub fn m_deviation_formula(
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    partition: &Partition,
    epsilon: &Rational,
) -> Result<Rational> {
    cells(space, a, b, partition)?;
    require_screening(space, a, b, partition, epsilon)?;
    let pa = space.prob(a)?;
    let pb = space.prob(b)?;
    partition
        .blocks()
        .iter()
        .map(|c| {
            let p = space.prob(c)?;
            Ok(p * (space.cond_prob(a, c)? - &pa) * (space.cond_prob(b, c)? - &pb))
        })
        .sum()
}
