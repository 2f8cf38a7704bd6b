//! Finite topological groups: topologies by minimal neighbourhoods,
//! compact-open function groups, currying, and the continuity tower.

mod group;
mod space;

pub use group::{
    check_continuous_automorphisms, continuous_maps_group, t_top_infinity, t_top_step,
    validate_continuous_action, validate_topgroup, ContinuousAction, TopGroup, TopLevel, TopTower,
};
pub use space::{
    compact_open, continuous_maps, curry_check, validate_topology, CurryReport, FiniteTopology,
};
