//! The JSON spec-file format: named groups, filtrations, actions, morphisms,
//! points, topologies and topological groups, all certified on load.
//!
//! ```json
//! {
//!   "version": "coind-lab/1",
//!   "groups": { "D4": { "catalog": "D4" },
//!               "C2": { "order": 2, "names": ["1", "s"], "mul": [[0, 1], [1, 0]] } },
//!   "filtrations": { "D4lcs": { "group": "D4", "lcs": true },
//!                    "C2whole": { "group": "C2", "levels": [[0, 1]] } },
//!   "actions": { "conj": { "actor": "D4", "target": "D4", "kind": "conjugation" } },
//!   "morphisms": { "id": { "source": "D4", "target": "D4", "kind": "identity",
//!                          "source_filtration": "D4lcs", "target_filtration": "D4lcs" } },
//!   "points": { "X": { "action": "conj", "actor_filtration": "D4lcs", "target_filtration": "D4lcs" } },
//!   "topologies": { "sierpinski": { "size": 2, "opens": [[], [0], [0, 1]] } },
//!   "topgroups": { "D4ind": { "group": "D4", "kind": "indiscrete" } }
//! }
//! ```
//!
//! Sections are resolved in the order above, so a reference may only point
//! at an earlier section. Every object passes its validator before it is
//! stored; failures name the object as `section.name`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::action::{
    check_filtration_preserving, validate_group_action, FilteredAction, GroupAction,
};
use crate::error::{Error, Result};
use crate::filtration::{lower_central_series, validate_scf, Filtration, ScfCertificate};
use crate::group::{
    catalog, generate_subgroup, validate_group, Elem, GroupRef, Homomorphism, RawGroup,
};
use crate::topology::{validate_topgroup, validate_topology, FiniteTopology, TopGroup};

pub const SPEC_VERSION: &str = "coind-lab/1";

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    version: String,
    #[serde(default)]
    groups: BTreeMap<String, GroupEntry>,
    #[serde(default)]
    filtrations: BTreeMap<String, FiltrationEntry>,
    #[serde(default)]
    actions: BTreeMap<String, ActionEntry>,
    #[serde(default)]
    morphisms: BTreeMap<String, MorphismEntry>,
    #[serde(default)]
    points: BTreeMap<String, PointEntry>,
    #[serde(default)]
    topologies: BTreeMap<String, TopologyEntry>,
    #[serde(default)]
    topgroups: BTreeMap<String, TopGroupEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupEntry {
    catalog: Option<String>,
    order: Option<usize>,
    names: Option<Vec<String>>,
    mul: Option<Vec<Vec<usize>>>,
    identity: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FiltrationEntry {
    group: String,
    levels: Option<Vec<Vec<Elem>>>,
    #[serde(default)]
    lcs: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionEntry {
    actor: String,
    target: String,
    kind: Option<String>,
    table: Option<Vec<Vec<Elem>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismEntry {
    source: String,
    target: String,
    kind: Option<String>,
    map: Option<Vec<Elem>>,
    source_filtration: Option<String>,
    target_filtration: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointEntry {
    action: String,
    actor_filtration: String,
    target_filtration: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TopologyEntry {
    size: usize,
    kind: Option<String>,
    opens: Option<Vec<Vec<Elem>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TopGroupEntry {
    group: String,
    topology: Option<String>,
    kind: Option<String>,
    /// Generators of a normal subgroup whose cosets form the basic opens.
    normal: Option<Vec<Elem>>,
}

/// A homomorphism with the filtrations it was declared against, if any.
#[derive(Clone, Debug)]
pub struct SpecMorphism {
    pub hom: Homomorphism,
    pub source_filtration: Option<ScfCertificate>,
    pub target_filtration: Option<ScfCertificate>,
}

/// A fully resolved and certified spec file.
#[derive(Clone, Debug, Default)]
pub struct SpecFile {
    pub groups: BTreeMap<String, GroupRef>,
    pub filtrations: BTreeMap<String, ScfCertificate>,
    pub actions: BTreeMap<String, GroupAction>,
    pub morphisms: BTreeMap<String, SpecMorphism>,
    /// Level-preserving actions; certification as actions of filtrations
    /// happens where it is needed (their transport limit may differ).
    pub points: BTreeMap<String, FilteredAction>,
    pub topologies: BTreeMap<String, FiniteTopology>,
    pub topgroups: BTreeMap<String, TopGroup>,
}

fn resolve<'a, T>(map: &'a BTreeMap<String, T>, kind: &'static str, name: &str) -> Result<&'a T> {
    map.get(name).ok_or_else(|| Error::Unresolved {
        kind,
        name: name.to_string(),
    })
}

macro_rules! accessor {
    ($fn:ident, $field:ident, $ty:ty, $kind:literal) => {
        pub fn $fn(&self, name: &str) -> Result<&$ty> {
            resolve(&self.$field, $kind, name)
        }
    };
}

impl SpecFile {
    accessor!(group, groups, GroupRef, "group");
    accessor!(filtration, filtrations, ScfCertificate, "filtration");
    accessor!(action, actions, GroupAction, "action");
    accessor!(morphism, morphisms, SpecMorphism, "morphism");
    accessor!(point, points, FilteredAction, "point");
    accessor!(topology, topologies, FiniteTopology, "topology");
    accessor!(topgroup, topgroups, TopGroup, "topological group");

    /// Number of named objects across all sections.
    pub fn object_count(&self) -> usize {
        self.groups.len()
            + self.filtrations.len()
            + self.actions.len()
            + self.morphisms.len()
            + self.points.len()
            + self.topologies.len()
            + self.topgroups.len()
    }
}

/// Reads and certifies a spec file.
pub fn parse_spec(path: impl AsRef<Path>) -> Result<SpecFile> {
    let text = std::fs::read_to_string(path)?;
    parse_spec_str(&text)
}

/// Parses and certifies spec-file text.
pub fn parse_spec_str(text: &str) -> Result<SpecFile> {
    let raw: RawSpec = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if raw.version != SPEC_VERSION {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!(
                "unsupported version `{}` (expected `{SPEC_VERSION}`)",
                raw.version
            ),
        });
    }
    let mut spec = SpecFile::default();
    for (name, e) in raw.groups {
        let g = build_group(&e).map_err(|err| err.in_object(format!("groups.{name}")))?;
        spec.groups.insert(name, g);
    }
    for (name, e) in raw.filtrations {
        let f = build_filtration(&spec, &e)
            .map_err(|err| err.in_object(format!("filtrations.{name}")))?;
        spec.filtrations.insert(name, f);
    }
    for (name, e) in raw.actions {
        let a = build_action(&spec, &e).map_err(|err| err.in_object(format!("actions.{name}")))?;
        spec.actions.insert(name, a);
    }
    for (name, e) in raw.morphisms {
        let m =
            build_morphism(&spec, &e).map_err(|err| err.in_object(format!("morphisms.{name}")))?;
        spec.morphisms.insert(name, m);
    }
    for (name, e) in raw.points {
        let p = build_point(&spec, &e).map_err(|err| err.in_object(format!("points.{name}")))?;
        spec.points.insert(name, p);
    }
    for (name, e) in raw.topologies {
        let t = build_topology(&e).map_err(|err| err.in_object(format!("topologies.{name}")))?;
        spec.topologies.insert(name, t);
    }
    for (name, e) in raw.topgroups {
        let t =
            build_topgroup(&spec, &e).map_err(|err| err.in_object(format!("topgroups.{name}")))?;
        spec.topgroups.insert(name, t);
    }
    Ok(spec)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn build_group(e: &GroupEntry) -> Result<GroupRef> {
    match (&e.catalog, &e.order, &e.names, &e.mul) {
        (Some(name), None, None, None) if e.identity.is_none() => {
            catalog(name).ok_or_else(|| Error::Unresolved {
                kind: "catalog group",
                name: name.clone(),
            })
        }
        (None, Some(order), Some(names), Some(mul)) => validate_group(&RawGroup {
            order: *order,
            names: names.clone(),
            mul: mul.clone(),
            identity: e.identity,
        }),
        _ => Err(invalid(
            "a group is either {\"catalog\"} or {\"order\", \"names\", \"mul\"}",
        )),
    }
}

fn build_filtration(spec: &SpecFile, e: &FiltrationEntry) -> Result<ScfCertificate> {
    let g = spec.group(&e.group)?;
    match (&e.levels, e.lcs) {
        (Some(levels), false) => validate_scf(&Filtration::from_element_sets(g, levels)?),
        (None, true) => Ok(lower_central_series(g)),
        _ => Err(invalid(
            "a filtration has exactly one of \"levels\" or \"lcs\": true",
        )),
    }
}

fn build_action(spec: &SpecFile, e: &ActionEntry) -> Result<GroupAction> {
    let (b, g) = (spec.group(&e.actor)?, spec.group(&e.target)?);
    match (e.kind.as_deref(), &e.table) {
        (None, Some(rows)) => validate_group_action(rows, b, g),
        (Some("trivial"), None) => Ok(GroupAction::trivial(b, g)),
        (Some("conjugation"), None) if b.id() == g.id() => Ok(GroupAction::conjugation(g)),
        (Some("conjugation"), None) => Err(invalid("conjugation needs actor = target")),
        (Some(k), None) => Err(invalid(format!(
            "unknown action kind `{k}` (trivial, conjugation)"
        ))),
        _ => Err(invalid(
            "an action has exactly one of \"kind\" or \"table\"",
        )),
    }
}

fn build_morphism(spec: &SpecFile, e: &MorphismEntry) -> Result<SpecMorphism> {
    let (s, t) = (spec.group(&e.source)?, spec.group(&e.target)?);
    let hom = match (e.kind.as_deref(), &e.map) {
        (None, Some(map)) => Homomorphism::new(s, t, map.clone())?,
        (Some("trivial"), None) => Homomorphism::trivial(s, t),
        (Some("identity"), None) if s.id() == t.id() => Homomorphism::identity(s),
        (Some("identity"), None) => return Err(invalid("identity needs source = target")),
        (Some(k), None) => {
            return Err(invalid(format!(
                "unknown morphism kind `{k}` (identity, trivial)"
            )))
        }
        _ => return Err(invalid("a morphism has exactly one of \"kind\" or \"map\"")),
    };
    let source_filtration = e
        .source_filtration
        .as_deref()
        .map(|n| spec.filtration(n))
        .transpose()?;
    let target_filtration = e
        .target_filtration
        .as_deref()
        .map(|n| spec.filtration(n))
        .transpose()?;
    for (f, group, side) in [
        (&source_filtration, s, "source"),
        (&target_filtration, t, "target"),
    ] {
        if let Some(f) = f {
            if f.group().id() != group.id() {
                return Err(invalid(format!(
                    "{side} filtration lives on a different group"
                )));
            }
        }
    }
    if let (Some(sf), Some(tf)) = (&source_filtration, &target_filtration) {
        check_filtration_preserving(&hom, sf, tf)?;
    }
    Ok(SpecMorphism {
        hom,
        source_filtration: source_filtration.cloned(),
        target_filtration: target_filtration.cloned(),
    })
}

fn build_point(spec: &SpecFile, e: &PointEntry) -> Result<FilteredAction> {
    let a = spec.action(&e.action)?;
    let bf = spec.filtration(&e.actor_filtration)?;
    let gf = spec.filtration(&e.target_filtration)?;
    if bf.group().id() != a.actor().id() || gf.group().id() != a.target().id() {
        return Err(invalid(
            "point filtrations must live on the action's actor and target",
        ));
    }
    FilteredAction::new(a.clone(), bf.clone(), gf.clone())
}

fn build_topology(e: &TopologyEntry) -> Result<FiniteTopology> {
    match (e.kind.as_deref(), &e.opens) {
        (None, Some(opens)) => validate_topology(opens, e.size),
        (Some("discrete"), None) => Ok(FiniteTopology::discrete(e.size)),
        (Some("indiscrete"), None) => Ok(FiniteTopology::indiscrete(e.size)),
        (Some(k), None) => Err(invalid(format!(
            "unknown topology kind `{k}` (discrete, indiscrete)"
        ))),
        _ => Err(invalid(
            "a topology has exactly one of \"kind\" or \"opens\"",
        )),
    }
}

fn build_topgroup(spec: &SpecFile, e: &TopGroupEntry) -> Result<TopGroup> {
    let g = spec.group(&e.group)?;
    match (&e.topology, e.kind.as_deref(), &e.normal) {
        (Some(t), None, None) => {
            let t = spec.topology(t)?;
            validate_topgroup(g, t)
        }
        (None, Some("discrete"), None) => Ok(TopGroup::discrete(g)),
        (None, Some("indiscrete"), None) => Ok(TopGroup::indiscrete(g)),
        (None, Some(k), None) => Err(invalid(format!(
            "unknown topological group kind `{k}` (discrete, indiscrete)"
        ))),
        (None, None, Some(gens)) => {
            for &x in gens {
                g.check_elem(x)?;
            }
            TopGroup::from_normal_subgroup(&generate_subgroup(g, gens)?)
        }
        _ => Err(invalid(
            "a topological group has exactly one of \"topology\", \"kind\" or \"normal\"",
        )),
    }
}
