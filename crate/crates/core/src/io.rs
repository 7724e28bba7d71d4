//! The JSON space file.
//!
//! ```json
//! {"atoms":[{"label":"w1","weight":"1/4"}, ...],
//!  "events":{"A":["w1","w2"], ...}}
//! ```
//!
//! Files written for an extension additionally carry `map`, `rccs`, `model`
//! and `epsilon`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::Model;
use crate::space::{Event, Partition, ProbabilitySpace};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AtomRecord {
    label: String,
    weight: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceFile {
    atoms: Vec<AtomRecord>,
    #[serde(default)]
    events: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    map: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rccs: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    model: Option<Model>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    epsilon: Option<Rational>,
}

/// A parsed space file: the space, its named events, and the optional
/// extension sections.
#[derive(Debug, Clone)]
pub struct SpaceDocument {
    pub space: ProbabilitySpace,
    pub events: BTreeMap<String, Event>,
    pub map: Option<BTreeMap<String, Vec<String>>>,
    pub rccs: Option<Vec<String>>,
    pub model: Option<Model>,
    pub epsilon: Option<Rational>,
}

impl SpaceDocument {
    pub fn new(space: ProbabilitySpace) -> Self {
        SpaceDocument {
            space,
            events: BTreeMap::new(),
            map: None,
            rccs: None,
            model: None,
            epsilon: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SpaceFile =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let mut atoms = Vec::with_capacity(file.atoms.len());
        for rec in file.atoms {
            let weight = Rational::parse_reduced(&rec.weight).map_err(|e| match e {
                Error::ParseRational(m) => {
                    Error::Format(format!("weight of atom {:?}: {m}", rec.label))
                }
                other => other,
            })?;
            atoms.push((rec.label, weight));
        }
        let space = ProbabilitySpace::new(atoms)?;
        let mut events = BTreeMap::new();
        for (name, labels) in file.events {
            let event = space.event(&labels).map_err(|e| match e {
                Error::UnknownAtom(l) => {
                    Error::Format(format!("event {name:?} names unknown atom {l:?}"))
                }
                other => other,
            })?;
            events.insert(name, event);
        }
        if let Some(rccs) = &file.rccs {
            for name in rccs {
                if !events.contains_key(name) {
                    return Err(Error::Format(format!(
                        "rccs block {name:?} is not a named event"
                    )));
                }
            }
        }
        if let Some(map) = &file.map {
            for (src, targets) in map {
                for t in targets {
                    if space.index_of(t).is_none() {
                        return Err(Error::Format(format!(
                            "map entry {src:?} names unknown atom {t:?}"
                        )));
                    }
                }
            }
        }
        Ok(SpaceDocument {
            space,
            events,
            map: file.map,
            rccs: file.rccs,
            model: file.model,
            epsilon: file.epsilon,
        })
    }

    pub fn to_json(&self) -> String {
        let file = SpaceFile {
            atoms: self
                .space
                .atoms()
                .map(|(label, w)| AtomRecord {
                    label: label.to_string(),
                    weight: w.to_string(),
                })
                .collect(),
            events: self
                .events
                .iter()
                .map(|(name, e)| {
                    let labels = e
                        .labels(&self.space)
                        .into_iter()
                        .map(String::from)
                        .collect();
                    (name.clone(), labels)
                })
                .collect(),
            map: self.map.clone(),
            rccs: self.rccs.clone(),
            model: self.model,
            epsilon: self.epsilon.clone(),
        };
        let mut out = serde_json::to_string_pretty(&file).expect("space file serializes");
        out.push('\n');
        out
    }

    pub fn event(&self, name: &str) -> Result<&Event> {
        self.events
            .get(name)
            .ok_or_else(|| Error::Format(format!("no event named {name:?}")))
    }

    /// Builds a partition from named events, in the given order.
    pub fn partition<S: AsRef<str>>(&self, names: &[S]) -> Result<Partition> {
        let blocks = names
            .iter()
            .map(|n| self.event(n.as_ref()).cloned())
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&self.space, blocks)
    }

    /// Adds `event` under `name`, appending `'` until the name is free.
    /// Returns the name used.
    pub fn insert_event(&mut self, name: &str, event: Event) -> String {
        let mut name = name.to_string();
        while self.events.contains_key(&name) {
            name.push('\'');
        }
        self.events.insert(name.clone(), event);
        name
    }
}
