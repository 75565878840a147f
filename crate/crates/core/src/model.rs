//! Tile-system semantics: tile types, assemblies, attachment, saturation to
//! the unique terminal assembly, and finite/infinite classification.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::geom::{Dir, Pos, ALL_DIRS};

/// A glue: a label plus a nonnegative strength. The empty label with
/// strength 0 is the null glue.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Glue {
    pub label: String,
    pub strength: u32,
}

impl Glue {
    pub fn null() -> Glue {
        Glue { label: String::new(), strength: 0 }
    }

    pub fn new(label: &str, strength: u32) -> Glue {
        Glue { label: label.to_string(), strength }
    }

    pub fn is_null(&self) -> bool {
        self.label.is_empty() && self.strength == 0
    }

    /// Two abutting sides bind when their labels are equal, nonempty, and
    /// both strengths are at least 1. Strengths above 1 carry no extra
    /// meaning at temperature 1.
    pub fn binds(&self, other: &Glue) -> bool {
        !self.label.is_empty()
            && self.label == other.label
            && self.strength >= 1
            && other.strength >= 1
    }
}

/// A unit square tile type with one glue per side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TileType {
    pub name: String,
    pub north: Glue,
    pub east: Glue,
    pub south: Glue,
    pub west: Glue,
}

impl TileType {
    pub fn side(&self, d: Dir) -> &Glue {
        match d {
            Dir::North => &self.north,
            Dir::East => &self.east,
            Dir::South => &self.south,
            Dir::West => &self.west,
        }
    }
}

/// Index of a tile type within its system.
pub type TypeId = u16;

/// A finite assembly: a map from positions to tile types with an
/// edge-connected, nonempty domain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assembly {
    pub tiles: BTreeMap<Pos, TypeId>,
}

impl Assembly {
    pub fn new() -> Assembly {
        Assembly { tiles: BTreeMap::new() }
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn get(&self, p: Pos) -> Option<TypeId> {
        self.tiles.get(&p).copied()
    }

    pub fn contains(&self, p: Pos) -> bool {
        self.tiles.contains_key(&p)
    }

    pub fn is_connected(&self) -> bool {
        if self.tiles.is_empty() {
            return false;
        }
        let start = *self.tiles.keys().next().unwrap();
        let mut seen = std::collections::BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(p) = stack.pop() {
            for d in ALL_DIRS {
                let q = p.neighbor(d);
                if self.tiles.contains_key(&q) && seen.insert(q) {
                    stack.push(q);
                }
            }
        }
        seen.len() == self.tiles.len()
    }
}

impl Default for Assembly {
    fn default() -> Self {
        Assembly::new()
    }
}

/// Axis-aligned extent summary of an assembly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extents {
    pub west: i32,
    pub east: i32,
    pub south: i32,
    pub north: i32,
}

impl Extents {
    pub fn width(&self) -> i32 {
        self.east - self.west
    }

    pub fn height(&self) -> i32 {
        self.north - self.south
    }

    pub fn contains(&self, p: Pos) -> bool {
        p.x >= self.west && p.x <= self.east && p.y >= self.south && p.y <= self.north
    }

    pub fn expand(&self, by: i32) -> Extents {
        Extents {
            west: self.west - by,
            east: self.east + by,
            south: self.south - by,
            north: self.north + by,
        }
    }
}

/// Extents of a nonempty assembly.
pub fn extents(a: &Assembly) -> Result<Extents, ModelError> {
    if a.tiles.is_empty() {
        return Err(ModelError::EmptyAssembly);
    }
    let mut e = Extents { west: i32::MAX, east: i32::MIN, south: i32::MAX, north: i32::MIN };
    for p in a.tiles.keys() {
        e.west = e.west.min(p.x);
        e.east = e.east.max(p.x);
        e.south = e.south.min(p.y);
        e.north = e.north.max(p.y);
    }
    Ok(e)
}

/// A temperature-1 tile assembly system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TileSystem {
    pub types: Vec<TileType>,
    pub seed: Assembly,
}

impl TileSystem {
    pub fn tile(&self, id: TypeId) -> &TileType {
        &self.types[id as usize]
    }

    pub fn type_by_name(&self, name: &str) -> Option<TypeId> {
        self.types.iter().position(|t| t.name == name).map(|i| i as TypeId)
    }

    pub fn type_count(&self) -> usize {
        self.types.len()
    }

    pub fn seed_size(&self) -> usize {
        self.seed.len()
    }

    pub fn seed_extents(&self) -> Extents {
        extents(&self.seed).expect("seed is nonempty")
    }

    /// The classification cap from the linear size bound on directed
    /// temperature-1 terminal assemblies.
    pub fn size_bound(&self) -> i64 {
        7 * self.seed_size() as i64 + 58 * self.type_count() as i64 + 30
    }

    /// True when the tile placed at `pos` would bind the tile at the
    /// adjacent position `q` (both facing glues match with strength >= 1).
    pub fn edge_binds(&self, tile: TypeId, pos: Pos, other: TypeId, q: Pos) -> bool {
        debug_assert!(pos.is_adjacent(q));
        let d = Dir::from_vec(crate::geom::Vec2::between(pos, q)).unwrap();
        self.tile(tile).side(d).binds(self.tile(other).side(d.opposite()))
    }
}

// ---------------------------------------------------------------------------
// File format
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TileFile {
    name: String,
    north: (String, i64),
    east: (String, i64),
    south: (String, i64),
    west: (String, i64),
}

#[derive(Serialize, Deserialize)]
struct SeedFile {
    x: i32,
    y: i32,
    tile: String,
}

#[derive(Serialize, Deserialize)]
struct SystemFile {
    tiles: Vec<TileFile>,
    seed: Vec<SeedFile>,
}

fn glue_from_file(name: &str, g: (String, i64)) -> Result<Glue, ModelError> {
    if g.1 < 0 {
        return Err(ModelError::BadStrength(name.to_string()));
    }
    Ok(Glue { label: g.0, strength: g.1 as u32 })
}

/// Parse and validate a system description in the JSON interchange format.
pub fn validate_system(json: &str) -> Result<TileSystem, ModelError> {
    let file: SystemFile =
        serde_json::from_str(json).map_err(|e| ModelError::Parse(e.to_string()))?;
    let mut types = Vec::new();
    for t in file.tiles {
        if types.iter().any(|u: &TileType| u.name == t.name) {
            return Err(ModelError::DuplicateTileName(t.name));
        }
        types.push(TileType {
            north: glue_from_file(&t.name, t.north)?,
            east: glue_from_file(&t.name, t.east)?,
            south: glue_from_file(&t.name, t.south)?,
            west: glue_from_file(&t.name, t.west)?,
            name: t.name,
        });
    }
    if file.seed.is_empty() {
        return Err(ModelError::EmptySeed);
    }
    let mut seed = Assembly::new();
    for s in file.seed {
        let id = types
            .iter()
            .position(|t| t.name == s.tile)
            .ok_or_else(|| ModelError::UnknownSeedTile(s.tile.clone()))?;
        let p = Pos::new(s.x, s.y);
        if seed.tiles.insert(p, id as TypeId).is_some() {
            return Err(ModelError::DuplicateSeedPosition(p));
        }
    }
    if !seed.is_connected() {
        return Err(ModelError::DisconnectedSeed);
    }
    Ok(TileSystem { types, seed })
}

/// Serialize a system back to the interchange format.
pub fn system_to_json(sys: &TileSystem) -> String {
    let file = SystemFile {
        tiles: sys
            .types
            .iter()
            .map(|t| TileFile {
                name: t.name.clone(),
                north: (t.north.label.clone(), t.north.strength as i64),
                east: (t.east.label.clone(), t.east.strength as i64),
                south: (t.south.label.clone(), t.south.strength as i64),
                west: (t.west.label.clone(), t.west.strength as i64),
            })
            .collect(),
        seed: sys
            .seed
            .tiles
            .iter()
            .map(|(p, id)| SeedFile { x: p.x, y: p.y, tile: sys.tile(*id).name.clone() })
            .collect(),
    };
    serde_json::to_string(&file).expect("system serialization cannot fail")
}

// ---------------------------------------------------------------------------
// Attachment, union, saturation
// ---------------------------------------------------------------------------

/// True when `tile` stably binds to `a` at the empty position `pos`: some
/// occupied neighbor exists and the abutting glues match.
pub fn attachable(
    sys: &TileSystem,
    a: &Assembly,
    pos: Pos,
    tile: TypeId,
) -> Result<bool, ModelError> {
    if a.contains(pos) {
        return Err(ModelError::OccupiedPosition(pos));
    }
    Ok(ALL_DIRS.iter().any(|&d| {
        a.get(pos.neighbor(d))
            .map(|other| sys.edge_binds(tile, pos, other, pos.neighbor(d)))
            .unwrap_or(false)
    }))
}

/// The union of two assemblies, defined when overlaps agree and the pieces
/// either overlap or bind across some edge.
pub fn union(sys: &TileSystem, a: &Assembly, b: &Assembly) -> Result<Assembly, ModelError> {
    let mut overlap = false;
    for (p, ta) in &a.tiles {
        if let Some(tb) = b.get(*p) {
            if tb != *ta {
                return Err(ModelError::ConflictingOverlap(*p));
            }
            overlap = true;
        }
    }
    if !overlap {
        let binds = a.tiles.iter().any(|(p, ta)| {
            ALL_DIRS.iter().any(|&d| {
                let q = p.neighbor(d);
                b.get(q).map(|tb| sys.edge_binds(*ta, *p, tb, q)).unwrap_or(false)
            })
        });
        if !binds {
            return Err(ModelError::DisjointUnbound);
        }
    }
    let mut out = a.clone();
    for (p, t) in &b.tiles {
        out.tiles.insert(*p, *t);
    }
    Ok(out)
}

/// True when no empty position admits any attachable tile type.
pub fn is_terminal(sys: &TileSystem, a: &Assembly) -> bool {
    for (p, _) in &a.tiles {
        for d in ALL_DIRS {
            let q = p.neighbor(d);
            if a.contains(q) {
                continue;
            }
            for id in 0..sys.types.len() as TypeId {
                if attachable(sys, a, q, id).unwrap_or(false) {
                    return false;
                }
            }
        }
    }
    true
}

/// Which axis a growth escape happened on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Horizontal,
    Vertical,
}

/// Result of saturating a system inside a bounding box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SaturationOutcome {
    /// The in-box fixpoint is terminal: the unique terminal assembly.
    Finite(Assembly),
    /// Growth escapes the box on this axis.
    CapExceeded(Axis),
    /// Two distinct tile types compete for one position.
    Conflict { pos: Pos, first: TypeId, second: TypeId },
}

/// Grow the union of producible assemblies inside the box obtained by
/// expanding the seed extents by `cap` on every side.
///
/// Conflicts are detected two ways: two types attachable at a popped empty
/// position, and (at the fixpoint) a type that binds an occupied position's
/// neighborhood, disagrees with the placed tile, and whose enabling neighbor
/// is still seed-connected without that position. Positions are processed in
/// row-major order so reports are reproducible.
pub fn saturate(sys: &TileSystem, cap: i64) -> SaturationOutcome {
    assert!(cap > 0, "cap must be positive");
    let cap = cap.min(i32::MAX as i64 / 4) as i32;
    let bbox = sys.seed_extents().expand(cap);

    let mut placed = sys.seed.clone();
    let mut frontier: std::collections::BTreeSet<(i32, i32)> = std::collections::BTreeSet::new();
    let mut exit_axis: Option<Axis> = None;

    // Stop filling once it is certain the state space is large and growth
    // escapes the box; small systems always reach their true fixpoint.
    let early_exit_after = 5002 + sys.seed_size();
    let mut placements = 0usize;

    let push_around =
        |placed: &Assembly,
         frontier: &mut std::collections::BTreeSet<(i32, i32)>,
         exit_axis: &mut Option<Axis>,
         p: Pos| {
            for d in ALL_DIRS {
                let q = p.neighbor(d);
                if placed.contains(q) {
                    continue;
                }
                if bbox.contains(q) {
                    frontier.insert(q.row_major_key());
                } else if exit_axis.is_none() {
                    // Only counts as an escape if something can actually
                    // attach there.
                    let can = (0..sys.types.len() as TypeId)
                        .any(|id| attachable(sys, placed, q, id).unwrap_or(false));
                    if can {
                        *exit_axis = Some(if q.x < bbox.west || q.x > bbox.east {
                            Axis::Horizontal
                        } else {
                            Axis::Vertical
                        });
                    }
                }
            }
        };

    let seed_positions: Vec<Pos> = sys.seed.tiles.keys().copied().collect();
    for p in &seed_positions {
        push_around(&placed, &mut frontier, &mut exit_axis, *p);
    }

    while let Some(&(y, x)) = frontier.iter().next() {
        frontier.remove(&(y, x));
        let pos = Pos::new(x, y);
        if placed.contains(pos) {
            continue;
        }
        let mut candidates: Vec<TypeId> = (0..sys.types.len() as TypeId)
            .filter(|&id| attachable(sys, &placed, pos, id).unwrap_or(false))
            .collect();
        candidates.sort_by(|a, b| sys.tile(*a).name.cmp(&sys.tile(*b).name));
        match candidates.len() {
            0 => continue,
            1 => {
                placed.tiles.insert(pos, candidates[0]);
                placements += 1;
                push_around(&placed, &mut frontier, &mut exit_axis, pos);
                if exit_axis.is_some() && placements > early_exit_after {
                    return SaturationOutcome::CapExceeded(exit_axis.unwrap());
                }
            }
            _ => {
                return SaturationOutcome::Conflict {
                    pos,
                    first: candidates[0],
                    second: candidates[1],
                };
            }
        }
    }

    // Fixpoint reached. Look for late disagreements: a type attachable at an
    // occupied position via a neighbor that does not depend on that position
    // for its own seed connection.
    if let Some(conflict) = late_conflict(sys, &placed) {
        return SaturationOutcome::Conflict {
            pos: conflict.0,
            first: conflict.1,
            second: conflict.2,
        };
    }

    if let Some(axis) = exit_axis {
        return SaturationOutcome::CapExceeded(axis);
    }
    SaturationOutcome::Finite(placed)
}

/// Seed-connectivity over binding edges with one position removed.
fn seed_connected_without(sys: &TileSystem, a: &Assembly, removed: Pos, target: Pos) -> bool {
    if target == removed {
        return false;
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut stack: Vec<Pos> = Vec::new();
    for p in sys.seed.tiles.keys() {
        if *p != removed && seen.insert(*p) {
            stack.push(*p);
        }
    }
    while let Some(p) = stack.pop() {
        if p == target {
            return true;
        }
        let tp = a.get(p).unwrap();
        for d in ALL_DIRS {
            let q = p.neighbor(d);
            if q == removed || seen.contains(&q) {
                continue;
            }
            if let Some(tq) = a.get(q) {
                if sys.edge_binds(tp, p, tq, q) && seen.insert(q) {
                    stack.push(q);
                }
            }
        }
    }
    false
}

fn late_conflict(sys: &TileSystem, placed: &Assembly) -> Option<(Pos, TypeId, TypeId)> {
    let mut occupied: Vec<Pos> = placed.tiles.keys().copied().collect();
    occupied.sort_by_key(|p| p.row_major_key());
    for p in occupied {
        if sys.seed.contains(p) {
            // Seed positions exist in every producible assembly, so nothing
            // can ever attach there first.
            continue;
        }
        let here = placed.get(p).unwrap();
        let mut ids: Vec<TypeId> = (0..sys.types.len() as TypeId).collect();
        ids.sort_by(|a, b| sys.tile(*a).name.cmp(&sys.tile(*b).name));
        for y in ids {
            if y == here {
                continue;
            }
            let genuine = ALL_DIRS.iter().any(|&d| {
                let q = p.neighbor(d);
                match placed.get(q) {
                    Some(tq) if sys.edge_binds(y, p, tq, q) => {
                        seed_connected_without(sys, placed, p, q)
                    }
                    _ => false,
                }
            });
            if genuine {
                let (a, b) = if sys.tile(here).name <= sys.tile(y).name {
                    (here, y)
                } else {
                    (y, here)
                };
                return Some((p, a, b));
            }
        }
    }
    None
}

/// Final verdict for a system under the linear decision bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum Classification {
    Finite {
        #[serde(skip_serializing_if = "Option::is_none")]
        terminal: Option<Assembly>,
        extents: Extents,
        tiles: usize,
    },
    Infinite {
        axis: Axis,
    },
    NonDirected {
        position: (i32, i32),
        type_a: String,
        type_b: String,
    },
}

/// Decide finite vs infinite vs non-directed by saturating inside the box
/// given by the linear bound on each axis.
pub fn classify(sys: &TileSystem) -> Classification {
    match saturate(sys, sys.size_bound()) {
        SaturationOutcome::Finite(a) => {
            let e = extents(&a).expect("terminal assembly contains the seed");
            let tiles = a.len();
            Classification::Finite { terminal: Some(a), extents: e, tiles }
        }
        SaturationOutcome::CapExceeded(axis) => Classification::Infinite { axis },
        SaturationOutcome::Conflict { pos, first, second } => Classification::NonDirected {
            position: (pos.x, pos.y),
            type_a: sys.tile(first).name.clone(),
            type_b: sys.tile(second).name.clone(),
        },
    }
}

/// The unique terminal assembly of a system already known to be finite and
/// directed, or an error mapping otherwise.
pub fn terminal_assembly(sys: &TileSystem) -> Result<Assembly, crate::error::PathError> {
    match classify(sys) {
        Classification::Finite { terminal, .. } => Ok(terminal.unwrap()),
        Classification::Infinite { .. } => Err(crate::error::PathError::SystemNotFinite),
        Classification::NonDirected { .. } => Err(crate::error::PathError::SystemNotDirected),
    }
}
