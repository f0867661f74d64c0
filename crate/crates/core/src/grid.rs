//! World-anchored 2D grids over the x/z plane.
//!
//! Heightmaps, masks, and corner maps all share this one container so that
//! every consumer indexes with world coordinates and nobody re-derives
//! origin offsets.

use alloc::vec;
use alloc::vec::Vec;

use crate::geom::Rect;

/// A dense rectangular grid addressed by world (x, z).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid2D<T> {
    bounds: Rect,
    data: Vec<T>,
}

impl<T: Clone> Grid2D<T> {
    pub fn filled(bounds: Rect, value: T) -> Self {
        let len = bounds.area() as usize;
        Self {
            bounds,
            data: vec![value; len],
        }
    }
}

impl<T> Grid2D<T> {
    pub fn bounds(&self) -> Rect {
        self.bounds
    }

    pub fn width(&self) -> u32 {
        self.bounds.width()
    }

    pub fn depth(&self) -> u32 {
        self.bounds.depth()
    }

    pub fn in_bounds(&self, x: i32, z: i32) -> bool {
        self.bounds.contains(x, z)
    }

    fn index(&self, x: i32, z: i32) -> usize {
        debug_assert!(self.in_bounds(x, z), "grid access out of bounds: ({x}, {z})");
        let lx = (x - self.bounds.x0) as usize;
        let lz = (z - self.bounds.z0) as usize;
        lz * self.bounds.width() as usize + lx
    }

    /// Panics when out of bounds; use [`Grid2D::try_get`] for soft lookups.
    pub fn get(&self, x: i32, z: i32) -> &T {
        &self.data[self.index(x, z)]
    }

    pub fn try_get(&self, x: i32, z: i32) -> Option<&T> {
        self.in_bounds(x, z).then(|| self.get(x, z))
    }

    pub fn set(&mut self, x: i32, z: i32, value: T) {
        let i = self.index(x, z);
        self.data[i] = value;
    }

    /// Iterates `(x, z, &value)` row by row (z-major), a deterministic order.
    pub fn iter(&self) -> impl Iterator<Item = (i32, i32, &T)> {
        let b = self.bounds;
        self.data.iter().enumerate().map(move |(i, v)| {
            let w = b.width() as usize;
            let x = b.x0 + (i % w) as i32;
            let z = b.z0 + (i / w) as i32;
            (x, z, v)
        })
    }
}

impl Grid2D<bool> {
    /// Count of `true` cells.
    pub fn count_true(&self) -> usize {
        self.data.iter().filter(|v| **v).count()
    }

    /// Chebyshev dilation: output true wherever any input cell within
    /// `radius` is true.
    pub fn dilate(&self, radius: u32) -> Grid2D<bool> {
        if radius == 0 {
            return self.clone();
        }
        let r = radius as i32;
        let mut out = Grid2D::filled(self.bounds, false);
        for (x, z, v) in self.iter() {
            if !*v {
                continue;
            }
            for dz in -r..=r {
                for dx in -r..=r {
                    if self.in_bounds(x + dx, z + dz) {
                        out.set(x + dx, z + dz, true);
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn world_anchored_indexing() {
        let mut g = Grid2D::filled(Rect::new(-4, 10, 3, 17), 0i32);
        g.set(-4, 10, 7);
        g.set(3, 17, 9);
        assert_eq!(*g.get(-4, 10), 7);
        assert_eq!(*g.get(3, 17), 9);
        assert_eq!(*g.get(0, 12), 0);
        assert!(g.try_get(4, 10).is_none());
        assert_eq!(g.iter().count(), 64);
    }

    #[test]
    fn dilation_radius_zero_is_identity() {
        let mut g = Grid2D::filled(Rect::new(0, 0, 4, 4), false);
        g.set(2, 2, true);
        assert_eq!(g.dilate(0), g);
    }

    #[test]
    fn dilation_grows_chebyshev_ring() {
        let mut g = Grid2D::filled(Rect::new(0, 0, 4, 4), false);
        g.set(2, 2, true);
        let d = g.dilate(1);
        assert_eq!(d.count_true(), 9);
        assert!(*d.get(1, 1) && *d.get(3, 3) && *d.get(1, 3));
        assert!(!*d.get(0, 0));
        // Monotone in the radius.
        let d2 = g.dilate(2);
        for (x, z, v) in d.iter() {
            if *v {
                assert!(*d2.get(x, z));
            }
        }
    }
}
