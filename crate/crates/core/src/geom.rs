//! Integer lattice geometry: positions, directions and the clockwise frame
//! used to compare path turns.

use serde::{Deserialize, Serialize};

/// A position on the tile lattice. `x` grows east, `y` grows north.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Pos {
    pub x: i32,
    pub y: i32,
}

impl Pos {
    pub const fn new(x: i32, y: i32) -> Self {
        Pos { x, y }
    }

    pub fn offset(self, v: Vec2) -> Pos {
        Pos::new(self.x + v.dx, self.y + v.dy)
    }

    pub fn neighbor(self, d: Dir) -> Pos {
        self.offset(d.vec())
    }

    /// Row-major order: by `y`, then by `x`. Used wherever a deterministic
    /// scan over positions is required.
    pub fn row_major_key(self) -> (i32, i32) {
        (self.y, self.x)
    }

    pub fn is_adjacent(self, other: Pos) -> bool {
        (self.x - other.x).abs() + (self.y - other.y).abs() == 1
    }
}

impl std::fmt::Debug for Pos {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// An integer displacement between positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vec2 {
    pub dx: i32,
    pub dy: i32,
}

impl Vec2 {
    pub const fn new(dx: i32, dy: i32) -> Self {
        Vec2 { dx, dy }
    }

    pub fn between(from: Pos, to: Pos) -> Vec2 {
        Vec2::new(to.x - from.x, to.y - from.y)
    }

    pub fn neg(self) -> Vec2 {
        Vec2::new(-self.dx, -self.dy)
    }

    /// The clockwise quarter turn `(x, y) -> (y, -x)`.
    pub fn rot_cw(self) -> Vec2 {
        Vec2::new(self.dy, -self.dx)
    }
}

/// The four cardinal directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dir {
    North,
    East,
    South,
    West,
}

pub const ALL_DIRS: [Dir; 4] = [Dir::East, Dir::North, Dir::West, Dir::South];

impl Dir {
    pub fn vec(self) -> Vec2 {
        match self {
            Dir::North => Vec2::new(0, 1),
            Dir::East => Vec2::new(1, 0),
            Dir::South => Vec2::new(0, -1),
            Dir::West => Vec2::new(-1, 0),
        }
    }

    pub fn opposite(self) -> Dir {
        match self {
            Dir::North => Dir::South,
            Dir::East => Dir::West,
            Dir::South => Dir::North,
            Dir::West => Dir::East,
        }
    }

    pub fn from_vec(v: Vec2) -> Option<Dir> {
        match (v.dx, v.dy) {
            (0, 1) => Some(Dir::North),
            (1, 0) => Some(Dir::East),
            (0, -1) => Some(Dir::South),
            (-1, 0) => Some(Dir::West),
            _ => None,
        }
    }
}

/// Vertical side selector used by visibility queries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    North,
    South,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::North => Side::South,
            Side::South => Side::North,
        }
    }
}

/// The ordered step alternatives after a path tile, clockwise starting just
/// right of the incoming direction. `incoming` is the vector from the current
/// tile back to the previous one.
pub fn clockwise_frame(incoming: Vec2) -> [Vec2; 3] {
    let r1 = incoming.rot_cw();
    let r2 = r1.rot_cw();
    let r3 = r2.rot_cw();
    [r1, r2, r3]
}

/// A point in doubled coordinates: tile centers live at even pairs, glue
/// positions at mixed parity. All region geometry is exact on this grid.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DPoint {
    pub x: i32,
    pub y: i32,
}

impl DPoint {
    pub const fn new(x: i32, y: i32) -> Self {
        DPoint { x, y }
    }

    pub fn of_tile(p: Pos) -> DPoint {
        DPoint::new(2 * p.x, 2 * p.y)
    }

    /// Midpoint of the edge between two adjacent tiles, exact in doubled
    /// coordinates.
    pub fn of_edge(a: Pos, b: Pos) -> DPoint {
        debug_assert!(a.is_adjacent(b));
        DPoint::new(a.x + b.x, a.y + b.y)
    }
}

impl std::fmt::Debug for DPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}]", self.x, self.y)
    }
}
