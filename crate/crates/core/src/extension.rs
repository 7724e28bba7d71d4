//! Extensions of a probability space that host a common cause system.
//!
//! Every source atom lying in Boolean cell `k` of `(A, B)` is split into `n`
//! sub-atoms `"<label>#<i>"` with weights `weight · r[i][k]`. The cause cell
//! `C_i` collects all sub-atoms with index `i`, and an event `E` is carried
//! to the union of the sub-atoms refining its atoms.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::admissible::{generate, AdmissibleSet, Family, TargetProfile};
use crate::bounds::{infeasibility_certificate, Region};
use crate::error::{Error, Result};
use crate::io::SpaceDocument;
use crate::models::check_system;
use crate::rational::Rational;
use crate::report::{Clause, ConditionReport, Model, Relation};
use crate::space::{Event, Partition, ProbabilitySpace, SpaceId};

pub const CELL_NAMES: [&str; 4] = ["A∧B", "A∧¬B", "¬A∧B", "¬A∧¬B"];

/// `r[i][k]`: the share of cell `k`'s mass that goes to cause cell `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitRatios {
    rows: Vec<[Rational; 4]>,
}

impl SplitRatios {
    pub fn rows(&self) -> &[[Rational; 4]] {
        &self.rows
    }

    pub fn get(&self, i: usize, k: usize) -> &Rational {
        &self.rows[i][k]
    }

    pub fn column(&self, k: usize) -> Vec<Rational> {
        self.rows.iter().map(|r| r[k].clone()).collect()
    }

    pub fn column_sums(&self) -> [Rational; 4] {
        std::array::from_fn(|k| self.rows.iter().map(|r| &r[k]).sum())
    }

    /// Every entry in `[0,1]` and every column summing to 1.
    pub fn is_stochastic(&self) -> bool {
        let in_range = self
            .rows
            .iter()
            .flatten()
            .all(|r| !r.is_negative() && *r <= 1);
        in_range && self.column_sums().iter().all(|s| *s == 1)
    }
}

/// Probabilities of the four Boolean cells of `(A, B)`.
pub fn cell_probabilities(space: &ProbabilitySpace, a: &Event, b: &Event) -> Result<[Rational; 4]> {
    let (na, nb) = (a.complement(), b.complement());
    Ok([
        space.prob(&a.intersect(b)?)?,
        space.prob(&a.intersect(&nb)?)?,
        space.prob(&na.intersect(b)?)?,
        space.prob(&na.intersect(&nb)?)?,
    ])
}

pub fn split_ratios(set: &AdmissibleSet, cell_probs: &[Rational; 4]) -> Result<SplitRatios> {
    for (k, p) in cell_probs.iter().enumerate() {
        if !p.is_positive() {
            return Err(Error::DegenerateCell(CELL_NAMES[k]));
        }
    }
    let mut rows = Vec::with_capacity(set.len());
    for (i, e) in set.entries().iter().enumerate() {
        let cd = &e.c * &e.d;
        let ca = &e.c * &e.a;
        let cb = &e.c * &e.b;
        let numerators = [cd.clone(), &ca - &cd, &cb - &cd, &e.c - &ca - &cb + &cd];
        let mut row: [Rational; 4] = Default::default();
        for (k, num) in numerators.into_iter().enumerate() {
            if num.is_negative() {
                return Err(Error::NegativeRatio {
                    cell: i + 1,
                    column: k + 1,
                    numerator: num,
                });
            }
            row[k] = num.checked_div(&cell_probs[k])?;
        }
        rows.push(row);
    }
    Ok(SplitRatios { rows })
}

#[derive(Debug, Clone)]
pub struct ExtensionResult {
    source_id: SpaceId,
    target: ProbabilitySpace,
    atom_map: Vec<Vec<usize>>,
    rccs: Partition,
    model: Model,
    epsilon: Rational,
    dropped: Vec<String>,
}

impl ExtensionResult {
    /// Assembles a result without checking it; see [`verify_extension`].
    ///
    /// `atom_map[s]` lists the target atoms refining source atom `s`, and
    /// `blocks` the target atoms of each cause cell.
    pub fn from_parts(
        source: &ProbabilitySpace,
        target: ProbabilitySpace,
        atom_map: Vec<Vec<usize>>,
        blocks: Vec<Vec<usize>>,
        model: Model,
        epsilon: Rational,
    ) -> Result<Self> {
        if atom_map.len() != source.len() {
            return Err(Error::InvalidArgument(format!(
                "map covers {} atoms, source has {}",
                atom_map.len(),
                source.len()
            )));
        }
        if atom_map.iter().flatten().any(|&t| t >= target.len()) {
            return Err(Error::InvalidArgument(
                "map names a missing target atom".into(),
            ));
        }
        let blocks = blocks
            .into_iter()
            .map(|b| target.event_from_indices(b))
            .collect::<Result<Vec<_>>>()?;
        let rccs = Partition::new(&target, blocks)?;
        Ok(ExtensionResult {
            source_id: source.id(),
            target,
            atom_map,
            rccs,
            model,
            epsilon,
            dropped: Vec::new(),
        })
    }

    pub fn source_id(&self) -> SpaceId {
        self.source_id
    }

    pub fn target(&self) -> &ProbabilitySpace {
        &self.target
    }

    pub fn atom_map(&self) -> &[Vec<usize>] {
        &self.atom_map
    }

    pub fn rccs(&self) -> &Partition {
        &self.rccs
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn epsilon(&self) -> &Rational {
        &self.epsilon
    }

    /// Labels of zero-weight sub-atoms left out of the target.
    pub fn dropped(&self) -> &[String] {
        &self.dropped
    }

    /// The extension as a space file: `h` of every named source event, the
    /// cause cells as events `C1..Cn`, and the `map`, `rccs`, `model` and
    /// `epsilon` sections.
    pub fn to_document(&self, source: &SpaceDocument) -> Result<SpaceDocument> {
        let mut doc = SpaceDocument::new(self.target.clone());
        for (name, e) in &source.events {
            doc.events.insert(name.clone(), induced_event(self, e)?);
        }
        let names = self
            .rccs
            .blocks()
            .iter()
            .enumerate()
            .map(|(i, block)| doc.insert_event(&format!("C{}", i + 1), block.clone()))
            .collect();
        let map: BTreeMap<String, Vec<String>> = self
            .atom_map
            .iter()
            .enumerate()
            .map(|(s, ts)| {
                let labels = ts
                    .iter()
                    .map(|&t| self.target.label(t).to_string())
                    .collect();
                (source.space.label(s).to_string(), labels)
            })
            .collect();
        doc.map = Some(map);
        doc.rccs = Some(names);
        doc.model = Some(self.model);
        doc.epsilon = Some(self.epsilon.clone());
        Ok(doc)
    }
}

/// Extends `space` with a GHR- (`Family::Hr`) or GM-RCCS (`Family::M`) of
/// size `n` for `(a, b)` at expected correlation `epsilon`.
pub fn extend_with_rccs(
    space: &ProbabilitySpace,
    a: &Event,
    b: &Event,
    epsilon: &Rational,
    n: usize,
    family: Family,
) -> Result<ExtensionResult> {
    let cells = cell_probabilities(space, a, b)?;
    for (k, p) in cells.iter().enumerate() {
        if !p.is_positive() {
            return Err(Error::DegenerateCell(CELL_NAMES[k]));
        }
    }
    let pa = space.prob(a)?;
    let pb = space.prob(b)?;
    let delta = space.deviation(a, b, epsilon)?;
    let profile = TargetProfile::new(pa, pb, epsilon.clone(), delta, n)?;
    let (pa, pb) = (&profile.a, &profile.b);
    let fail = || {
        infeasibility_certificate(pa, pb, epsilon, &profile.delta, Region::CellBounds)
            .map(|c| Error::InfeasibleProfile(Box::new(c)))
    };
    if !(epsilon + pa * pb).is_positive() {
        return Err(fail().expect("product bound"));
    }
    let set = match generate(&profile, family, Region::CellBounds) {
        Some(set) => set,
        None => {
            return Err(fail().unwrap_or_else(|| {
                Error::ConstructionFailed(format!(
                    "no cell-feasible set of size {n} for p(A) = {pa}, p(B) = {pb}, ε = {epsilon}, Δ = {}",
                    profile.delta
                ))
            }))
        }
    };
    let ratios = split_ratios(&set, &cells)?;
    if !ratios.is_stochastic() {
        return Err(Error::ConstructionFailed(
            "split ratios are not column-stochastic".into(),
        ));
    }

    let mut atoms = Vec::new();
    let mut atom_map = vec![Vec::new(); space.len()];
    let mut blocks = vec![Vec::new(); n];
    let mut dropped = Vec::new();
    for (s, images) in atom_map.iter_mut().enumerate() {
        let k = match (a.contains(s), b.contains(s)) {
            (true, true) => 0,
            (true, false) => 1,
            (false, true) => 2,
            (false, false) => 3,
        };
        for (i, block) in blocks.iter_mut().enumerate() {
            let label = format!("{}#{}", space.label(s), i + 1);
            let w = space.weight(s) * ratios.get(i, k);
            if w.is_zero() {
                dropped.push(label);
                continue;
            }
            images.push(atoms.len());
            block.push(atoms.len());
            atoms.push((label, w));
        }
    }
    if blocks.iter().any(Vec::is_empty) {
        return Err(Error::ConstructionFailed(
            "a cause cell lost all its atoms".into(),
        ));
    }
    let target = ProbabilitySpace::new(atoms)?;
    let model = family.system_model(true);
    let mut result =
        ExtensionResult::from_parts(space, target, atom_map, blocks, model, epsilon.clone())?;
    result.dropped = dropped;

    let ha = induced_event(&result, a)?;
    let hb = induced_event(&result, b)?;
    let report = check_system(model, &result.target, &ha, &hb, &result.rccs, epsilon)?;
    if !report.verdict {
        return Err(Error::ConstructionFailed(format!(
            "constructed partition fails {}",
            report
                .failed()
                .map(|c| c.id.as_str())
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    let ext = verify_extension(space, &result);
    if !ext.verdict {
        return Err(Error::ConstructionFailed(format!(
            "constructed space is not an extension: {}",
            ext.failed()
                .map(|c| c.id.as_str())
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    Ok(result)
}

/// `h(E)`: the target atoms refining the atoms of `E`.
pub fn induced_event(result: &ExtensionResult, event: &Event) -> Result<Event> {
    if event.space_id() != result.source_id {
        return Err(Error::ForeignEvent);
    }
    result.target.event_from_indices(
        event
            .atoms()
            .flat_map(|s| result.atom_map[s].iter().copied()),
    )
}

const EXHAUSTIVE_ATOMS: usize = 12;
const SAMPLED_EVENTS: usize = 1000;
const SAMPLE_SEED: u64 = 0x5eed;

fn source_events(source: &ProbabilitySpace) -> Vec<Event> {
    let m = source.len();
    if m <= EXHAUSTIVE_ATOMS {
        (0u32..1 << m)
            .map(|mask| {
                source
                    .event_from_indices((0..m).filter(|i| mask >> i & 1 == 1))
                    .expect("indices in range")
            })
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let mut seen = HashSet::new();
        let mut out = vec![source.empty_event(), source.full_event()];
        for _ in 0..SAMPLED_EVENTS {
            let atoms: Vec<usize> = (0..m).filter(|_| rng.random_bool(0.5)).collect();
            let e = source.event_from_indices(atoms).expect("indices in range");
            if seen.insert(e.clone()) {
                out.push(e);
            }
        }
        out
    }
}

/// Checks that the refinement map is an injective, complement-preserving
/// lattice homomorphism that preserves the measure.
pub fn verify_extension(source: &ProbabilitySpace, result: &ExtensionResult) -> ConditionReport {
    let mut clauses = Vec::new();
    let linked = result.source_id == source.id() && result.atom_map.len() == source.len();
    clauses.push(Clause::structural(
        "ext-source",
        linked,
        "result was built from this source space",
    ));
    if !linked {
        return ConditionReport::new(Model::Extension, clauses);
    }
    let target = &result.target;

    let mut owner = vec![None; target.len()];
    let mut refines = true;
    for (s, ts) in result.atom_map.iter().enumerate() {
        refines &= !ts.is_empty();
        for &t in ts {
            refines &= owner[t].replace(s).is_none();
        }
    }
    refines &= owner.iter().all(Option::is_some);
    clauses.push(Clause::structural(
        "ext-refinement",
        refines,
        "every source atom maps to a nonempty set of target atoms, and these sets partition the target",
    ));

    for (s, ts) in result.atom_map.iter().enumerate() {
        let mass: Rational = ts.iter().map(|&t| target.weight(t)).sum();
        clauses.push(Clause::compare(
            "ext-atom-measure",
            vec![s + 1],
            Some(mass),
            Relation::Eq,
            source.weight(s).clone(),
        ));
    }

    let events = source_events(source);
    let images: Vec<Event> = events
        .iter()
        .map(|e| induced_event(result, e).expect("source event"))
        .collect();

    let distinct: HashSet<&Event> = images.iter().collect();
    clauses.push(Clause::structural(
        "ext-injective",
        distinct.len() == events.len(),
        format!(
            "{} distinct events have {} distinct images",
            events.len(),
            distinct.len()
        ),
    ));

    let h = |e: &Event| induced_event(result, e).expect("source event");
    let singletons: Vec<Event> = (0..source.len())
        .map(|s| source.event_from_indices([s]).expect("index in range"))
        .collect();
    let mut pairs: Vec<(&Event, &Event)> = Vec::new();
    for x in &singletons {
        for y in &singletons {
            pairs.push((x, y));
        }
    }
    for w in events.windows(2).take(SAMPLED_EVENTS) {
        pairs.push((&w[0], &w[1]));
    }
    let meet_ok = pairs.iter().all(|(x, y)| {
        h(&x.intersect(y).expect("same space")) == h(x).intersect(&h(y)).expect("same space")
    });
    let join_ok = pairs.iter().all(|(x, y)| {
        h(&x.union(y).expect("same space")) == h(x).union(&h(y)).expect("same space")
    });
    clauses.push(Clause::structural(
        "ext-meet",
        meet_ok,
        format!("h(E∧F) = h(E)∧h(F) on {} pairs", pairs.len()),
    ));
    clauses.push(Clause::structural(
        "ext-join",
        join_ok,
        format!("h(E∨F) = h(E)∨h(F) on {} pairs", pairs.len()),
    ));
    let complement_ok = events
        .iter()
        .zip(&images)
        .all(|(e, img)| h(&e.complement()) == img.complement());
    clauses.push(Clause::structural(
        "ext-complement",
        complement_ok,
        format!("h(¬E) = ¬h(E) on {} events", events.len()),
    ));

    let mut measure = None;
    for (e, img) in events.iter().zip(&images) {
        let lhs = target.prob(img).expect("target event");
        let rhs = source.prob(e).expect("source event");
        if lhs != rhs {
            measure = Some(
                Clause::compare("ext-measure", vec![], Some(lhs), Relation::Eq, rhs)
                    .with_note(format!("fails at event {{{}}}", e.labels(source).join(","))),
            );
            break;
        }
    }
    clauses.push(measure.unwrap_or_else(|| {
        Clause::compare(
            "ext-measure",
            vec![],
            Some(Rational::one()),
            Relation::Eq,
            Rational::one(),
        )
        .with_note(format!("p'(h(E)) = p(E) on {} events", events.len()))
    }));

    if !result.dropped.is_empty() {
        clauses.push(Clause::structural(
            "ext-dropped",
            true,
            format!(
                "zero-weight sub-atoms dropped: {}",
                result.dropped.join(", ")
            ),
        ));
    }
    ConditionReport::new(Model::Extension, clauses)
}
