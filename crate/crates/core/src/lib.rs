//! Voxel settlement generation toolkit: a common world model, terrain
//! analysis, traversability-aware road planning, a structure grammar, four
//! interchangeable settlement-generation strategies, and a metrics suite
//! for auditing what they build.
//!
//! The crate is `no_std` + `alloc`: everything in here is pure computation
//! over in-memory worlds. File formats, the CLI, and anything touching the
//! OS live in the companion `settlegen` crate.

#![no_std]

extern crate alloc;

pub mod block;
pub mod geom;
pub mod grid;
pub mod rng;
pub mod site;
pub mod terrain;
pub mod world;

pub use block::{BlockCategory, BlockTable};
pub use geom::{Axis, BoundingBox, Coord, Facing, Rect};
pub use grid::Grid2D;
pub use site::{census, BiomeTable, SiteProfile};
pub use terrain::{buildable_regions, compute_edges, compute_terrain, flatness, EdgeMap, TerrainMaps};
pub use world::{BlockId, VoxelWorld, WorldError};
