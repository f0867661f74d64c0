//! Integer coordinate math: 3D coordinates, inclusive bounding boxes, and
//! 2D footprint rectangles.

use core::fmt;

/// World axis, used in bounds errors to name the offending component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::X => write!(f, "x"),
            Axis::Y => write!(f, "y"),
            Axis::Z => write!(f, "z"),
        }
    }
}

/// A block position. `y` is vertical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coord {
    pub x: i32,
    pub y: i32,
    pub z: i32,
}

impl Coord {
    pub const fn new(x: i32, y: i32, z: i32) -> Self {
        Self { x, y, z }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Axis-aligned box with inclusive corners, so `min == max` is a single cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundingBox {
    pub min: Coord,
    pub max: Coord,
}

impl BoundingBox {
    /// Builds a box from two opposite corners; panics if `min > max` on any
    /// axis.
    pub fn new(min: Coord, max: Coord) -> Self {
        assert!(
            min.x <= max.x && min.y <= max.y && min.z <= max.z,
            "degenerate box: {min} > {max}"
        );
        Self { min, max }
    }

    pub fn size_x(&self) -> u32 {
        (self.max.x - self.min.x + 1) as u32
    }

    pub fn size_y(&self) -> u32 {
        (self.max.y - self.min.y + 1) as u32
    }

    pub fn size_z(&self) -> u32 {
        (self.max.z - self.min.z + 1) as u32
    }

    pub fn volume(&self) -> u64 {
        self.size_x() as u64 * self.size_y() as u64 * self.size_z() as u64
    }

    pub fn contains(&self, c: Coord) -> bool {
        (self.min.x..=self.max.x).contains(&c.x)
            && (self.min.y..=self.max.y).contains(&c.y)
            && (self.min.z..=self.max.z).contains(&c.z)
    }

    pub fn contains_box(&self, other: &BoundingBox) -> bool {
        self.contains(other.min) && self.contains(other.max)
    }

    pub fn intersects(&self, other: &BoundingBox) -> bool {
        self.min.x <= other.max.x
            && other.min.x <= self.max.x
            && self.min.y <= other.max.y
            && other.min.y <= self.max.y
            && self.min.z <= other.max.z
            && other.min.z <= self.max.z
    }

    /// The 2D footprint of this box on the x/z plane.
    pub fn footprint(&self) -> Rect {
        Rect {
            x0: self.min.x,
            z0: self.min.z,
            x1: self.max.x,
            z1: self.max.z,
        }
    }

    /// Iterates all cells, y-major then z then x (the block payload order).
    pub fn cells(&self) -> impl Iterator<Item = Coord> + '_ {
        let b = *self;
        (b.min.y..=b.max.y).flat_map(move |y| {
            (b.min.z..=b.max.z)
                .flat_map(move |z| (b.min.x..=b.max.x).map(move |x| Coord::new(x, y, z)))
        })
    }
}

impl fmt::Display for BoundingBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.min, self.max)
    }
}

/// Inclusive axis-aligned rectangle on the x/z plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub x0: i32,
    pub z0: i32,
    pub x1: i32,
    pub z1: i32,
}

impl Rect {
    pub fn new(x0: i32, z0: i32, x1: i32, z1: i32) -> Self {
        assert!(x0 <= x1 && z0 <= z1, "degenerate rect");
        Self { x0, z0, x1, z1 }
    }

    /// Rectangle anchored at `(x0, z0)` spanning `w`×`d` cells.
    pub fn with_size(x0: i32, z0: i32, w: u32, d: u32) -> Self {
        assert!(w > 0 && d > 0, "empty rect");
        Self {
            x0,
            z0,
            x1: x0 + w as i32 - 1,
            z1: z0 + d as i32 - 1,
        }
    }

    pub fn width(&self) -> u32 {
        (self.x1 - self.x0 + 1) as u32
    }

    pub fn depth(&self) -> u32 {
        (self.z1 - self.z0 + 1) as u32
    }

    pub fn area(&self) -> u64 {
        self.width() as u64 * self.depth() as u64
    }

    pub fn contains(&self, x: i32, z: i32) -> bool {
        (self.x0..=self.x1).contains(&x) && (self.z0..=self.z1).contains(&z)
    }

    pub fn contains_rect(&self, other: &Rect) -> bool {
        self.x0 <= other.x0 && self.z0 <= other.z0 && other.x1 <= self.x1 && other.z1 <= self.z1
    }

    pub fn intersects(&self, other: &Rect) -> bool {
        self.x0 <= other.x1 && other.x0 <= self.x1 && self.z0 <= other.z1 && other.z0 <= self.z1
    }

    /// Grows the rectangle by `r` cells on every side.
    pub fn inflate(&self, r: i32) -> Rect {
        Rect {
            x0: self.x0 - r,
            z0: self.z0 - r,
            x1: self.x1 + r,
            z1: self.z1 + r,
        }
    }

    /// Shrinks by `r` on every side; `None` if nothing remains.
    pub fn shrink(&self, r: i32) -> Option<Rect> {
        let (x0, z0, x1, z1) = (self.x0 + r, self.z0 + r, self.x1 - r, self.z1 - r);
        (x0 <= x1 && z0 <= z1).then_some(Rect { x0, z0, x1, z1 })
    }

    pub fn center(&self) -> (i32, i32) {
        ((self.x0 + self.x1).div_euclid(2), (self.z0 + self.z1).div_euclid(2))
    }

    /// Chebyshev gap between two rectangles: 0 when they touch or overlap.
    pub fn gap(&self, other: &Rect) -> u32 {
        let dx = if other.x0 > self.x1 {
            other.x0 - self.x1 - 1
        } else if self.x0 > other.x1 {
            self.x0 - other.x1 - 1
        } else {
            0
        };
        let dz = if other.z0 > self.z1 {
            other.z0 - self.z1 - 1
        } else if self.z0 > other.z1 {
            self.z0 - other.z1 - 1
        } else {
            0
        };
        dx.max(dz) as u32
    }

    /// Iterates all (x, z) cells row by row (z-major).
    pub fn cells(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        let r = *self;
        (r.z0..=r.z1).flat_map(move |z| (r.x0..=r.x1).map(move |x| (x, z)))
    }

    /// Extrudes the rectangle into a box spanning `[y0, y1]`.
    pub fn extrude(&self, y0: i32, y1: i32) -> BoundingBox {
        BoundingBox::new(Coord::new(self.x0, y0, self.z0), Coord::new(self.x1, y1, self.z1))
    }
}

/// Horizontal cardinal direction; `South` is +z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Facing {
    North,
    South,
    West,
    East,
}

impl Facing {
    pub const ALL: [Facing; 4] = [Facing::North, Facing::South, Facing::West, Facing::East];

    /// Unit (dx, dz) step in this direction.
    pub fn offset(self) -> (i32, i32) {
        match self {
            Facing::North => (0, -1),
            Facing::South => (0, 1),
            Facing::West => (-1, 0),
            Facing::East => (1, 0),
        }
    }

    pub fn opposite(self) -> Facing {
        match self {
            Facing::North => Facing::South,
            Facing::South => Facing::North,
            Facing::West => Facing::East,
            Facing::East => Facing::West,
        }
    }
}
