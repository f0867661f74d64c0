//! Terrain analysis: ground/surface heightmaps, steepness edge maps, and
//! buildable-region extraction.
//!
//! Ground level is the highest solid block of a column, skipping vegetation
//! and crafted objects. Over water the ground is the flooded floor while
//! the surface is the top of the water; everywhere else the two coincide.
//! A height difference of two or more blocks between neighbouring columns
//! is an unjumpable edge.

use alloc::vec::Vec;

use crate::block::{BlockCategory, BlockTable};
use crate::geom::{BoundingBox, Coord, Rect};
use crate::grid::Grid2D;
use crate::world::VoxelWorld;

/// Height difference (in blocks) at or above which a step is an edge.
pub const EDGE_THRESHOLD: i32 = 2;

/// Per-column height and liquid maps for a world region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerrainMaps {
    pub region: BoundingBox,
    pub ground: Grid2D<i32>,
    pub surface: Grid2D<i32>,
    pub water_mask: Grid2D<bool>,
    pub lava_mask: Grid2D<bool>,
    /// Columns with no solid block at all; their ground is pinned to the
    /// region floor rather than treated as an error.
    pub diagnostics: Vec<(i32, i32)>,
}

impl TerrainMaps {
    pub fn bounds(&self) -> Rect {
        self.ground.bounds()
    }

    pub fn ground_at(&self, x: i32, z: i32) -> i32 {
        *self.ground.get(x, z)
    }

    pub fn surface_at(&self, x: i32, z: i32) -> i32 {
        *self.surface.get(x, z)
    }

    pub fn is_water(&self, x: i32, z: i32) -> bool {
        *self.water_mask.get(x, z)
    }

    pub fn is_lava(&self, x: i32, z: i32) -> bool {
        *self.lava_mask.get(x, z)
    }
}

/// Boolean steepness map plus the dilation radius that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMap {
    pub edges: Grid2D<bool>,
    pub dilation_radius: u32,
}

impl EdgeMap {
    pub fn bounds(&self) -> Rect {
        self.edges.bounds()
    }

    pub fn is_edge(&self, x: i32, z: i32) -> bool {
        *self.edges.get(x, z)
    }
}

/// Scans every column of `region` top-down and caches ground and surface
/// levels, water, and lava.
pub fn compute_terrain(world: &VoxelWorld, region: BoundingBox) -> TerrainMaps {
    assert!(world.bounds().contains_box(&region), "region outside world");
    let table = BlockTable::builtin();
    let rect = region.footprint();
    let floor = region.min.y;
    let mut ground = Grid2D::filled(rect, floor);
    let mut surface = Grid2D::filled(rect, floor);
    let mut water_mask = Grid2D::filled(rect, false);
    let mut lava_mask = Grid2D::filled(rect, false);
    let mut diagnostics = Vec::new();

    for (x, z) in rect.cells() {
        let mut top_liquid: Option<(i32, BlockCategory)> = None;
        let mut solid: Option<i32> = None;
        for y in (region.min.y..=region.max.y).rev() {
            let cat = table.category(world.name_at(Coord::new(x, y, z)));
            match cat {
                BlockCategory::Air | BlockCategory::Vegetation | BlockCategory::Crafted => {}
                BlockCategory::Water | BlockCategory::Lava => {
                    if top_liquid.is_none() {
                        top_liquid = Some((y, cat));
                    }
                }
                BlockCategory::Solid => {
                    solid = Some(y);
                    break;
                }
            }
        }
        let g = match solid {
            Some(y) => y,
            None => {
                diagnostics.push((x, z));
                floor
            }
        };
        ground.set(x, z, g);
        match top_liquid {
            Some((y, BlockCategory::Water)) => {
                water_mask.set(x, z, true);
                surface.set(x, z, y);
            }
            Some((_, _)) => {
                // Lava: flagged, but the walk surface stays at the floor
                // under it (surface exceeds ground only over water).
                lava_mask.set(x, z, true);
                surface.set(x, z, g);
            }
            None => surface.set(x, z, g),
        }
    }

    TerrainMaps {
        region,
        ground,
        surface,
        water_mask,
        lava_mask,
        diagnostics,
    }
}

/// Marks columns whose ground differs by [`EDGE_THRESHOLD`] or more from any
/// 4-neighbour, then dilates the marks by `radius` (Chebyshev).
pub fn compute_edges(maps: &TerrainMaps, radius: u32) -> EdgeMap {
    let rect = maps.ground.bounds();
    let mut raw = Grid2D::filled(rect, false);
    for (x, z, &g) in maps.ground.iter() {
        for (dx, dz) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            if let Some(&n) = maps.ground.try_get(x + dx, z + dz) {
                if (n - g).abs() >= EDGE_THRESHOLD {
                    raw.set(x, z, true);
                    break;
                }
            }
        }
    }
    EdgeMap {
        edges: raw.dilate(radius),
        dilation_radius: radius,
    }
}

/// 4-connected components of cells that are neither edge nor water, largest
/// first. Ties are broken by discovery order (row-major scan), so the output
/// is deterministic.
pub fn buildable_regions(edges: &EdgeMap, water_mask: &Grid2D<bool>) -> Vec<Vec<(i32, i32)>> {
    assert_eq!(edges.bounds(), water_mask.bounds(), "mask shapes differ");
    let rect = edges.bounds();
    let clear = |x: i32, z: i32| !*edges.edges.get(x, z) && !*water_mask.get(x, z);
    let mut seen = Grid2D::filled(rect, false);
    let mut regions: Vec<Vec<(i32, i32)>> = Vec::new();

    for (sx, sz) in rect.cells() {
        if *seen.get(sx, sz) || !clear(sx, sz) {
            continue;
        }
        let mut cells = Vec::new();
        let mut queue = alloc::collections::VecDeque::new();
        seen.set(sx, sz, true);
        queue.push_back((sx, sz));
        while let Some((x, z)) = queue.pop_front() {
            cells.push((x, z));
            for (dx, dz) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let (nx, nz) = (x + dx, z + dz);
                if rect.contains(nx, nz) && !*seen.get(nx, nz) && clear(nx, nz) {
                    seen.set(nx, nz, true);
                    queue.push_back((nx, nz));
                }
            }
        }
        regions.push(cells);
    }

    regions.sort_by_key(|r| core::cmp::Reverse(r.len()));
    regions
}

/// Ground-height range over `rect`: `max - min`. Zero means perfectly flat.
pub fn flatness(maps: &TerrainMaps, rect: Rect) -> i32 {
    assert!(maps.bounds().contains_rect(&rect), "rect outside maps");
    let mut lo = i32::MAX;
    let mut hi = i32::MIN;
    for (x, z) in rect.cells() {
        let g = maps.ground_at(x, z);
        lo = lo.min(g);
        hi = hi.max(g);
    }
    hi - lo
}
