use std::fmt;

use thiserror::Error;

use crate::group::Elem;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// First violated group axiom found while certifying a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupViolation {
    Empty,
    Malformed(String),
    NotAssociative { a: Elem, b: Elem, c: Elem },
    NoIdentity { claimed: Elem, witness: Elem },
    NoInverse { element: Elem },
}

impl fmt::Display for GroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "group has no elements"),
            Self::Malformed(msg) => write!(f, "malformed table: {msg}"),
            Self::NotAssociative { a, b, c } => {
                write!(f, "associativity fails at ({a}*{b})*{c} != {a}*({b}*{c})")
            }
            Self::NoIdentity { claimed, witness } => {
                write!(
                    f,
                    "{claimed} is not a two-sided identity (witness {witness})"
                )
            }
            Self::NoInverse { element } => write!(f, "element {element} has no two-sided inverse"),
        }
    }
}

/// A failure of `[G_i, G_j] ⊆ G_{i+j}`, with a witness commutator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScfViolation {
    pub i: usize,
    pub j: usize,
    pub x: Elem,
    pub y: Elem,
    pub commutator: Elem,
}

impl fmt::Display for ScfViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[G_{}, G_{}] not in G_{}: [{}, {}] = {}",
            self.i,
            self.j,
            self.i + self.j,
            self.x,
            self.y,
            self.commutator
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionViolation {
    Malformed(String),
    Unit { g: Elem },
    NotAutomorphism { b: Elem, x: Elem, y: Elem },
    NotBijective { b: Elem },
    Composition { b: Elem, c: Elem, g: Elem },
}

impl fmt::Display for ActionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Malformed(msg) => write!(f, "malformed action table: {msg}"),
            Self::Unit { g } => write!(f, "identity does not act trivially on {g}"),
            Self::NotAutomorphism { b, x, y } => {
                write!(f, "{b} does not act multiplicatively on ({x}, {y})")
            }
            Self::NotBijective { b } => write!(f, "{b} does not act bijectively"),
            Self::Composition { b, c, g } => {
                write!(f, "({b}{c})·{g} != {b}·({c}·{g})")
            }
        }
    }
}

/// Why an action fails to be an action of filtered groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScfActionViolation {
    /// `b·g` leaves level `level` of the target filtration.
    LevelNotPreserved { level: usize, b: Elem, g: Elem },
    /// `[b, g] = (b·g)g⁻¹` with `b ∈ B_i`, `g ∈ G_j` is not in `G_{i+j}`.
    Bracket {
        i: usize,
        j: usize,
        b: Elem,
        g: Elem,
        bracket: Elem,
    },
}

impl fmt::Display for ScfActionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LevelNotPreserved { level, b, g } => {
                write!(f, "{b}·{g} leaves level {level}")
            }
            Self::Bracket {
                i,
                j,
                b,
                g,
                bracket,
            } => write!(
                f,
                "[B_{i}, G_{j}] not in G_{}: [{b}, {g}] = {bracket}",
                i + j
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopologyViolation {
    Malformed(String),
    MissingEmptyOrWhole,
    UnionMissing {
        a: Vec<Elem>,
        b: Vec<Elem>,
    },
    IntersectionMissing {
        a: Vec<Elem>,
        b: Vec<Elem>,
    },
    /// Preimage of the open set `open` under `operation` is not open; it
    /// fails at the listed point.
    Discontinuous {
        operation: String,
        open: Vec<Elem>,
        at: Vec<Elem>,
    },
}

impl fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Malformed(msg) => write!(f, "malformed topology: {msg}"),
            Self::MissingEmptyOrWhole => write!(f, "family must contain the empty and whole set"),
            Self::UnionMissing { a, b } => write!(f, "union of {a:?} and {b:?} is not open"),
            Self::IntersectionMissing { a, b } => {
                write!(f, "intersection of {a:?} and {b:?} is not open")
            }
            Self::Discontinuous { operation, open, at } => write!(
                f,
                "{operation} is not continuous: preimage of open {open:?} is not a neighbourhood of {at:?}"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(GroupViolation),
    #[error("index {index} out of range for a group of order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("operands live in different groups")]
    ParentMismatch,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("budget exceeded: {what} needs {needed}, limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),
    #[error("filtration is not strongly central: {0}")]
    NotStronglyCentral(ScfViolation),
    #[error("invalid group action: {0}")]
    InvalidAction(ActionViolation),
    #[error("not an action of filtrations: {0}")]
    NotScfAction(ScfActionViolation),
    #[error("morphism does not preserve filtrations at level {level} (element {element})")]
    NotFiltrationPreserving { level: usize, element: Elem },
    #[error("morphism is not equivariant at actor element {actor}, element {element}")]
    NotEquivariant { actor: Elem, element: Elem },
    #[error("invalid topology: {0}")]
    InvalidTopology(TopologyViolation),
    #[error("not a topological group: {0}")]
    NotTopGroup(TopologyViolation),
    #[error("not continuous: {0}")]
    NotContinuous(TopologyViolation),
    #[error("internal consistency fault: {0}")]
    InternalFault(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("in `{object}`: {source}")]
    InObject {
        object: String,
        #[source]
        source: Box<Error>,
    },
    #[error("unresolved reference `{name}` ({kind})")]
    Unresolved { kind: &'static str, name: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn fault(msg: impl Into<String>) -> Self {
        Self::InternalFault(msg.into())
    }

    pub(crate) fn in_object(self, object: impl Into<String>) -> Self {
        Self::InObject {
            object: object.into(),
            source: Box::new(self),
        }
    }
}
