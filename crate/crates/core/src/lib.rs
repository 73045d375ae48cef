//! Abstract regular polyhedra as rank-3 string C-groups: construction,
//! invariants, and enumeration of the vertex-faithful ones by vertex count.

pub mod enumerate;
pub mod families;
pub mod fp;
pub mod manifest;
pub mod operators;
pub mod perm;
pub mod polyhedron;
pub mod tables;
pub mod verify;

pub use polyhedron::{try_polyhedron, InvariantRecord, PolyError, Polyhedron, PolyhedronRecord};
