//! Admissible number sets: checkers, tail completion and exact generators.
//!
//! An [`AdmissibleSet`] lists quadruples `(a_i, b_i, c_i, d_i)` that a cause
//! cell `C_i` would carry as `p(A|C_i)`, `p(B|C_i)`, `p(C_i)` and
//! `p(A∧B|C_i)`. The checkers follow the printed definitions; the
//! generators additionally reproduce the requested deviation exactly, which
//! is what an extension needs.

use serde::{Deserialize, Serialize};

use crate::bounds::{infeasibility_certificate, Certificate, Region};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::{Clause, ConditionReport, Model, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Entry {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Entry {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Entry { a, b, c, d }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Entry>", into = "Vec<Entry>")]
pub struct AdmissibleSet {
    entries: Vec<Entry>,
}

impl TryFrom<Vec<Entry>> for AdmissibleSet {
    type Error = Error;
    fn try_from(entries: Vec<Entry>) -> Result<Self> {
        AdmissibleSet::new(entries)
    }
}

impl From<AdmissibleSet> for Vec<Entry> {
    fn from(set: AdmissibleSet) -> Self {
        set.entries
    }
}

impl AdmissibleSet {
    /// At least two entries, every number in `(0,1)`, weights summing to 1.
    pub fn new(entries: Vec<Entry>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "an admissible set needs at least 2 entries, got {}",
                entries.len()
            )));
        }
        for (i, e) in entries.iter().enumerate() {
            for (name, v) in [("a", &e.a), ("b", &e.b), ("c", &e.c), ("d", &e.d)] {
                if !v.in_open_unit() {
                    return Err(Error::InvalidArgument(format!(
                        "{name}_{} = {v} is outside (0,1)",
                        i + 1
                    )));
                }
            }
        }
        let total: Rational = entries.iter().map(|e| &e.c).sum();
        if total != 1 {
            return Err(Error::InvalidArgument(format!(
                "weights c_i sum to {total}, expected 1"
            )));
        }
        Ok(AdmissibleSet { entries })
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Replaces entry `index` by `copies` entries with the same `a, b, d` and
    /// weight `c / copies`.
    pub fn split_entry(&self, index: usize, copies: usize) -> Result<AdmissibleSet> {
        if index >= self.entries.len() || copies == 0 {
            return Err(Error::InvalidArgument(format!(
                "cannot split entry {index} into {copies} copies"
            )));
        }
        let mut entries = Vec::with_capacity(self.entries.len() + copies - 1);
        for (i, e) in self.entries.iter().enumerate() {
            if i == index {
                let c = e.c.div_int(copies as i64);
                for _ in 0..copies {
                    entries.push(Entry::new(e.a.clone(), e.b.clone(), c.clone(), e.d.clone()));
                }
            } else {
                entries.push(e.clone());
            }
        }
        AdmissibleSet::new(entries)
    }
}

/// The pair statistics a set should realize.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TargetProfile {
    pub a: Rational,
    pub b: Rational,
    pub epsilon: Rational,
    pub delta: Rational,
    pub n: usize,
}

impl TargetProfile {
    pub fn new(
        a: Rational,
        b: Rational,
        epsilon: Rational,
        delta: Rational,
        n: usize,
    ) -> Result<Self> {
        if !a.in_open_unit() || !b.in_open_unit() {
            return Err(Error::InvalidArgument(format!(
                "p(A) = {a} and p(B) = {b} must lie in (0,1)"
            )));
        }
        if !delta.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "deviation must be positive, got {delta}"
            )));
        }
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "size must be at least 2, got {n}"
            )));
        }
        Ok(TargetProfile {
            a,
            b,
            epsilon,
            delta,
            n,
        })
    }

    pub fn with_size(&self, n: usize) -> Result<Self> {
        TargetProfile::new(
            self.a.clone(),
            self.b.clone(),
            self.epsilon.clone(),
            self.delta.clone(),
            n,
        )
    }
}

/// Which differentiation clause a set must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Pairwise `[a_i − a_j][b_i − b_j] > 0`.
    Hr,
    /// Per entry `[a_i − a][b_i − b] > 0`.
    M,
}

impl Family {
    pub fn system_model(self, generalised: bool) -> Model {
        match (self, generalised) {
            (Family::Hr, false) => Model::HrRccs,
            (Family::Hr, true) => Model::GhrRccs,
            (Family::M, false) => Model::MRccs,
            (Family::M, true) => Model::GmRccs,
        }
    }
}

fn quasi_clauses(set: &AdmissibleSet, profile: &TargetProfile) -> Vec<Clause> {
    let es = set.entries();
    let mut clauses = vec![
        Clause::compare(
            "adm-a",
            vec![],
            Some(es.iter().map(|e| &e.a * &e.c).sum()),
            Relation::Eq,
            profile.a.clone(),
        ),
        Clause::compare(
            "adm-b",
            vec![],
            Some(es.iter().map(|e| &e.b * &e.c).sum()),
            Relation::Eq,
            profile.b.clone(),
        ),
        Clause::compare(
            "adm-partition",
            vec![],
            Some(es.iter().map(|e| &e.c).sum()),
            Relation::Eq,
            Rational::one(),
        ),
    ];
    for (i, e) in es.iter().enumerate() {
        clauses.push(Clause::compare(
            "adm-di",
            vec![i + 1],
            Some(&e.d - &e.a * &e.b),
            Relation::Eq,
            profile.epsilon.clone(),
        ));
    }
    for (i, e) in es.iter().enumerate() {
        for (name, v) in [("a", &e.a), ("b", &e.b), ("d", &e.d)] {
            clauses.push(
                Clause::in_open_unit("adm-aibi", vec![i + 1], v.clone())
                    .with_note(format!("{name}_{}", i + 1)),
            );
        }
    }
    for (i, e) in es.iter().enumerate() {
        clauses.push(Clause::in_open_unit("adm-ci", vec![i + 1], e.c.clone()));
    }
    clauses
}

pub fn is_quasi_admissible(set: &AdmissibleSet, profile: &TargetProfile) -> ConditionReport {
    ConditionReport::new(Model::QuasiAdmissible, quasi_clauses(set, profile))
}

pub fn is_hr_admissible(set: &AdmissibleSet, profile: &TargetProfile) -> ConditionReport {
    let mut clauses = quasi_clauses(set, profile);
    let es = set.entries();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            clauses.push(Clause::compare(
                "grccs-admissible",
                vec![i + 1, j + 1],
                Some((&es[i].a - &es[j].a) * (&es[i].b - &es[j].b)),
                Relation::Gt,
                Rational::zero(),
            ));
        }
    }
    ConditionReport::new(Model::HrAdmissible, clauses)
}

pub fn is_m_admissible(set: &AdmissibleSet, profile: &TargetProfile) -> ConditionReport {
    let mut clauses = quasi_clauses(set, profile);
    for (i, e) in set.entries().iter().enumerate() {
        clauses.push(Clause::compare(
            "gmccs-admissible",
            vec![i + 1],
            Some((&e.a - &profile.a) * (&e.b - &profile.b)),
            Relation::Gt,
            Rational::zero(),
        ));
    }
    ConditionReport::new(Model::MAdmissible, clauses)
}

pub fn is_admissible(
    family: Family,
    set: &AdmissibleSet,
    profile: &TargetProfile,
) -> ConditionReport {
    match family {
        Family::Hr => is_hr_admissible(set, profile),
        Family::M => is_m_admissible(set, profile),
    }
}

/// Completes a head of `(a_k, b_k, c_k)` triples to a full set: the last
/// entry is forced by the profile's marginals, and every `d` by `ε`.
pub fn complete_tail(
    head: &[(Rational, Rational, Rational)],
    profile: &TargetProfile,
) -> Result<AdmissibleSet> {
    if head.is_empty() {
        return Err(Error::InvalidArgument(
            "head must hold at least one triple".into(),
        ));
    }
    let eps = &profile.epsilon;
    let mut entries = Vec::with_capacity(head.len() + 1);
    let (mut sum_c, mut sum_ac, mut sum_bc) =
        (Rational::zero(), Rational::zero(), Rational::zero());
    for (k, (a, b, c)) in head.iter().enumerate() {
        for (name, v) in [("a", a), ("b", b), ("c", c)] {
            if !v.in_open_unit() {
                return Err(Error::InvalidArgument(format!(
                    "head value {name}_{} = {v} is outside (0,1)",
                    k + 1
                )));
            }
        }
        let d = eps + a * b;
        if !d.in_open_unit() {
            return Err(Error::TailOutOfRange {
                symbol: format!("d_{}", k + 1),
                value: d,
            });
        }
        sum_c += c;
        sum_ac += &(a * c);
        sum_bc += &(b * c);
        entries.push(Entry::new(a.clone(), b.clone(), c.clone(), d));
    }
    let n = head.len() + 1;
    let c_n = Rational::one() - &sum_c;
    if !c_n.in_open_unit() {
        return Err(Error::TailOutOfRange {
            symbol: format!("c_{n}"),
            value: c_n,
        });
    }
    let ra = &profile.a - &sum_ac;
    let rb = &profile.b - &sum_bc;
    let a_n = ra.checked_div(&c_n)?;
    let b_n = rb.checked_div(&c_n)?;
    for (name, v) in [("a", &a_n), ("b", &b_n)] {
        if !v.in_open_unit() {
            return Err(Error::TailOutOfRange {
                symbol: format!("{name}_{n}"),
                value: v.clone(),
            });
        }
    }
    let d_n = eps + (&ra * &rb).checked_div(&(&c_n * &c_n))?;
    if !d_n.in_open_unit() {
        return Err(Error::TailOutOfRange {
            symbol: format!("d_{n}"),
            value: d_n,
        });
    }
    entries.push(Entry::new(a_n, b_n, c_n, d_n));
    AdmissibleSet::new(entries)
}

/// `ε + ab > 0`.
pub fn existence_condition(profile: &TargetProfile) -> bool {
    (&profile.epsilon + &profile.a * &profile.b).is_positive()
}

/// `Σ c_i d_i − (Σ c_i a_i)(Σ c_i b_i) − ε`: the deviation a partition with
/// these statistics would show.
pub fn realized_deviation(set: &AdmissibleSet, profile: &TargetProfile) -> Rational {
    let es = set.entries();
    let cd: Rational = es.iter().map(|e| &e.c * &e.d).sum();
    let ca: Rational = es.iter().map(|e| &e.c * &e.a).sum();
    let cb: Rational = es.iter().map(|e| &e.c * &e.b).sum();
    cd - ca * cb - &profile.epsilon
}

/// Smallest slack among the bounds an entry must satisfy in `region`.
fn margin(a: &Rational, b: &Rational, c: &Rational, eps: &Rational, region: Region) -> Rational {
    let one = Rational::one();
    let d = eps + a * b;
    let mut vals = vec![
        a.clone(),
        &one - a,
        b.clone(),
        &one - b,
        d.clone(),
        &one - &d,
        c.clone(),
    ];
    if region == Region::CellBounds {
        vals.push(a - &d);
        vals.push(b - &d);
        vals.push(&one - a - b + &d);
    }
    vals.into_iter().min().expect("nonempty")
}

/// Head weights tried for the two-cell base, in order.
const BASE_WEIGHTS: [(i64, i64); 17] = [
    (1, 2),
    (1, 3),
    (2, 3),
    (1, 4),
    (3, 4),
    (1, 5),
    (4, 5),
    (1, 8),
    (7, 8),
    (1, 10),
    (9, 10),
    (1, 16),
    (15, 16),
    (1, 32),
    (31, 32),
    (1, 64),
    (63, 64),
];
const OFFSET_GRID: i64 = 64;
const SHRINK_BUDGET: usize = 64;

/// A two-cell solution: head cell of weight `w` sits at offset `−x` in `a`
/// and `−rho·x` in `b`; the tail balances it.
struct Base {
    w: Rational,
    x: Rational,
}

fn best_base(profile: &TargetProfile, region: Region) -> Option<Base> {
    let (a, b, eps, delta) = (&profile.a, &profile.b, &profile.epsilon, &profile.delta);
    let mut best: Option<(Rational, Base)> = None;
    for (p, q) in BASE_WEIGHTS {
        let w = Rational::frac(p, q);
        let tail_w = Rational::one() - &w;
        let ratio = w.checked_div(&tail_w).expect("w < 1");
        let balanced = delta.checked_div(&ratio).expect("ratio > 0").exact_sqrt();
        let grid = (1..OFFSET_GRID).map(|j| Rational::frac(j, OFFSET_GRID));
        for x in balanced.into_iter().chain(grid) {
            let rho = delta.checked_div(&(&ratio * &x * &x)).expect("x > 0");
            let head = (a - &x, b - &rho * &x);
            let tail = (a + &x * &ratio, b + &rho * &x * &ratio);
            let m = std::cmp::min(
                margin(&head.0, &head.1, &w, eps, region),
                margin(&tail.0, &tail.1, &tail_w, eps, region),
            );
            if m.is_positive() && best.as_ref().map_or(true, |(bm, _)| &m > bm) {
                best = Some((m, Base { w: w.clone(), x }));
            }
        }
    }
    best.map(|(_, base)| base)
}

const FINE_WEIGHTS: i64 = 256;
const FINE_OFFSETS: i64 = 4096;

fn margin_f64(a: f64, b: f64, c: f64, eps: f64, region: Region) -> f64 {
    let d = eps + a * b;
    let mut m = [a, 1.0 - a, b, 1.0 - b, d, 1.0 - d, c]
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    if region == Region::CellBounds {
        m = m.min(a - d).min(b - d).min(1.0 - a - b + d);
    }
    m
}

/// Fallback for [`best_base`]: scans a much finer `(w, x)` grid in floating
/// point and keeps the winner only if it passes the exact margin check.
fn fine_base(profile: &TargetProfile, region: Region) -> Option<Base> {
    let (a, b, eps, delta) = (
        profile.a.to_f64_lossy(),
        profile.b.to_f64_lossy(),
        profile.epsilon.to_f64_lossy(),
        profile.delta.to_f64_lossy(),
    );
    let mut best: Option<(f64, i64, i64)> = None;
    for k in 1..FINE_WEIGHTS {
        let w = k as f64 / FINE_WEIGHTS as f64;
        let ratio = w / (1.0 - w);
        for j in 1..FINE_OFFSETS {
            let x = j as f64 / FINE_OFFSETS as f64;
            let rho = delta / (ratio * x * x);
            let m = margin_f64(a - x, b - rho * x, w, eps, region).min(margin_f64(
                a + x * ratio,
                b + rho * x * ratio,
                1.0 - w,
                eps,
                region,
            ));
            if m > 0.0 && best.map_or(true, |(bm, _, _)| m > bm) {
                best = Some((m, k, j));
            }
        }
    }
    let (_, k, j) = best?;
    let w = Rational::frac(k, FINE_WEIGHTS);
    let x = Rational::frac(j, FINE_OFFSETS);
    let tail_w = Rational::one() - &w;
    let ratio = w.checked_div(&tail_w).ok()?;
    let rho = profile.delta.checked_div(&(&ratio * &x * &x)).ok()?;
    let head = (&profile.a - &x, &profile.b - &rho * &x);
    let tail = (&profile.a + &x * &ratio, &profile.b + &rho * &x * &ratio);
    let m = std::cmp::min(
        margin(&head.0, &head.1, &w, &profile.epsilon, region),
        margin(&tail.0, &tail.1, &tail_w, &profile.epsilon, region),
    );
    m.is_positive().then_some(Base { w, x })
}

/// Builds an `n`-entry head for `base` by spreading the head cell into
/// `n − 1` distinct offsets `−x(1 + η t_j)`, `t_j = j − n/2`.
fn spread_head(
    profile: &TargetProfile,
    base: &Base,
    eta: &Rational,
) -> Vec<(Rational, Rational, Rational)> {
    let n = profile.n as i64;
    let k = n - 1;
    let cw = base.w.div_int(k);
    let tail_w = Rational::one() - &base.w;
    let u_tail = &base.x * base.w.checked_div(&tail_w).expect("w < 1");
    let offsets: Vec<Rational> = (1..=k)
        .map(|j| -(&base.x * (Rational::one() + eta * Rational::frac(2 * j - n, 2))))
        .collect();
    let var: Rational =
        offsets.iter().map(|u| &cw * u * u).sum::<Rational>() + &tail_w * &u_tail * &u_tail;
    let rho = profile.delta.checked_div(&var).expect("positive spread");
    offsets
        .into_iter()
        .map(|u| (&profile.a + &u, &profile.b + &rho * &u, cw.clone()))
        .collect()
}

fn fits(set: &AdmissibleSet, profile: &TargetProfile, region: Region) -> bool {
    set.entries()
        .iter()
        .all(|e| margin(&e.a, &e.b, &e.c, &profile.epsilon, region).is_positive())
}

/// Deterministic generator restricted to `region`; `None` when it finds
/// nothing.
pub(crate) fn generate(
    profile: &TargetProfile,
    family: Family,
    region: Region,
) -> Option<AdmissibleSet> {
    let base = best_base(profile, region).or_else(|| fine_base(profile, region))?;
    let set = match (family, profile.n) {
        (_, 2) => {
            let two = profile.with_size(2).ok()?;
            complete_tail(&spread_head(&two, &base, &Rational::zero()), &two).ok()?
        }
        (Family::M, n) => {
            let two = profile.with_size(2).ok()?;
            let pair = complete_tail(&spread_head(&two, &base, &Rational::zero()), &two).ok()?;
            pair.split_entry(1, n - 1).ok()?
        }
        (Family::Hr, _) => {
            let mut eta = Rational::frac(1, 2);
            let mut found = None;
            for _ in 0..=SHRINK_BUDGET {
                if let Ok(set) = complete_tail(&spread_head(profile, &base, &eta), profile) {
                    if fits(&set, profile, region) {
                        found = Some(set);
                        break;
                    }
                }
                eta = eta.div_int(2);
            }
            found?
        }
    };
    let ok = fits(&set, profile, region)
        && is_admissible(family, &set, profile).verdict
        && realized_deviation(&set, profile) == profile.delta;
    ok.then_some(set)
}

fn construct(profile: &TargetProfile, family: Family) -> Result<AdmissibleSet> {
    if !existence_condition(profile) {
        return Err(Error::InfeasibleProfile(Box::new(
            Certificate::ProductBound {
                a: profile.a.clone(),
                b: profile.b.clone(),
                epsilon: profile.epsilon.clone(),
            },
        )));
    }
    let eab = &profile.epsilon + &profile.a * &profile.b;
    if eab >= 1 {
        return Err(Error::InvalidArgument(format!(
            "ε + p(A)p(B) = {eab} must be below 1"
        )));
    }
    for region in [Region::CellBounds, Region::Literal] {
        if let Some(set) = generate(profile, family, region) {
            return Ok(set);
        }
    }
    let (a, b, eps, delta) = (&profile.a, &profile.b, &profile.epsilon, &profile.delta);
    match infeasibility_certificate(a, b, eps, delta, Region::Literal) {
        Some(cert) => Err(Error::InfeasibleProfile(Box::new(cert))),
        None => Err(Error::ConstructionFailed(format!(
            "no set of size {} found for p(A) = {a}, p(B) = {b}, ε = {eps}, Δ = {delta}",
            profile.n
        ))),
    }
}

/// An HR-admissible set of size `profile.n` with realized deviation exactly
/// `profile.delta`.
pub fn construct_hr_admissible(profile: &TargetProfile) -> Result<AdmissibleSet> {
    construct(profile, Family::Hr)
}

/// An M-admissible set of size `profile.n` with realized deviation exactly
/// `profile.delta`. For `n > 2` the last entry is split into equal copies.
pub fn construct_m_admissible(profile: &TargetProfile) -> Result<AdmissibleSet> {
    construct(profile, Family::M)
}

pub fn construct_admissible(profile: &TargetProfile, family: Family) -> Result<AdmissibleSet> {
    construct(profile, family)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn fork_profile(n: usize) -> TargetProfile {
        TargetProfile::new(q(1, 2), q(1, 2), q(0, 1), q(9, 100), n).unwrap()
    }

    fn fork_set() -> AdmissibleSet {
        AdmissibleSet::new(vec![
            Entry::new(q(1, 5), q(1, 5), q(1, 2), q(1, 25)),
            Entry::new(q(4, 5), q(4, 5), q(1, 2), q(16, 25)),
        ])
        .unwrap()
    }

    #[test]
    fn rejects_zero_weight() {
        let e = AdmissibleSet::new(vec![
            Entry::new(q(1, 5), q(1, 5), q(0, 1), q(1, 25)),
            Entry::new(q(4, 5), q(4, 5), q(1, 1), q(16, 25)),
        ]);
        assert!(e.is_err());
    }

    #[test]
    fn tail_completion_of_fork_head() {
        let set = complete_tail(&[(q(1, 5), q(1, 5), q(1, 2))], &fork_profile(2)).unwrap();
        assert_eq!(set, fork_set());
    }

    #[test]
    fn tail_out_of_range_names_symbol() {
        let err = complete_tail(&[(q(1, 10), q(1, 2), q(3, 4))], &fork_profile(2)).unwrap_err();
        assert!(
            matches!(err, Error::TailOutOfRange { ref symbol, .. } if symbol == "a_2"),
            "{err}"
        );
    }

    #[test]
    fn existence_condition_is_strict() {
        let p = TargetProfile::new(q(1, 5), q(1, 5), q(-1, 25), q(1, 100), 2).unwrap();
        assert!(!existence_condition(&p));
    }

    #[test]
    fn generator_reproduces_fork_set() {
        assert_eq!(
            construct_hr_admissible(&fork_profile(2)).unwrap(),
            fork_set()
        );
        assert_eq!(
            construct_m_admissible(&fork_profile(2)).unwrap(),
            fork_set()
        );
    }

    #[test]
    fn m_generator_splits_last_entry() {
        let set = construct_m_admissible(&fork_profile(3)).unwrap();
        let expected = AdmissibleSet::new(vec![
            Entry::new(q(1, 5), q(1, 5), q(1, 2), q(1, 25)),
            Entry::new(q(4, 5), q(4, 5), q(1, 4), q(16, 25)),
            Entry::new(q(4, 5), q(4, 5), q(1, 4), q(16, 25)),
        ])
        .unwrap();
        assert_eq!(set, expected);
    }

    #[test]
    fn hr_generator_larger_sizes() {
        for n in 3..=5 {
            let p = fork_profile(n);
            let set = construct_hr_admissible(&p).unwrap();
            assert_eq!(set.len(), n);
            assert!(is_hr_admissible(&set, &p).verdict);
            assert_eq!(realized_deviation(&set, &p), p.delta);
        }
    }

    #[test]
    fn infeasible_profile_carries_product_certificate() {
        let p = TargetProfile::new(q(1, 2), q(1, 2), q(-1, 4), q(1, 20), 2).unwrap();
        match construct_hr_admissible(&p) {
            Err(Error::InfeasibleProfile(c)) => {
                assert!(matches!(*c, Certificate::ProductBound { .. }));
                assert!(c.verify());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn serde_round_trip() {
        let json = serde_json::to_string(&fork_set()).unwrap();
        assert!(json.starts_with(r#"[{"a":"1/5","b":"1/5","c":"1/2","d":"1/25"}"#));
        let back: AdmissibleSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, fork_set());
        assert!(serde_json::from_str::<AdmissibleSet>(
            r#"[{"a":"1/5","b":"1/5","c":"1/2","d":"1/25"}]"#
        )
        .is_err());
    }
}
