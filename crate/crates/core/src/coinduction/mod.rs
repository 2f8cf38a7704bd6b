//! Co-induction of points: the equivariant-map group `hom_E(B, Y)`, the
//! transport operator and its fixed point, and the adjoint transposes.

mod adjunction;
mod maps;
mod transport;

pub use adjunction::{
    coinduce, transpose_backward, transpose_backward_plain, transpose_forward,
    transpose_forward_plain, Coinduced,
};
pub use maps::{
    equivariant_maps, equivariant_maps_exhaustive, equivariant_maps_transversal,
    EquivariantMapGroup, MapConstruction,
};
pub use transport::{t_infinity, t_step, transport, TransportTower};
