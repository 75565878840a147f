//! Per-path glue records, columns, pointing directions, visibility and
//! pseudo-visibility, and first/last glue indices on a column.
//!
//! Visibility on a column only involves horizontal glues: a glue ray runs
//! along the half-integer line between two columns and can only meet other
//! horizontal glues there. Every edge between two adjacent seed tiles counts
//! as a blocking glue even when the labels do not bind.

use serde::{Deserialize, Serialize};

use crate::error::GlueError;
use crate::geom::{DPoint, Dir, Pos, Side};
use crate::model::{Assembly, TileSystem};
use crate::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// One inter-tile bond of a path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueRecord {
    /// Bond between steps `index` and `index + 1`.
    pub index: usize,
    pub orientation: Orientation,
    /// For horizontal glues, the smaller of the two x coordinates.
    pub column: Option<i32>,
    /// For horizontal glues, whether the path crosses eastward or westward.
    pub points: Option<Dir>,
    pub label: String,
    /// Glue position in doubled coordinates.
    pub position: DPoint,
    /// Row of the bond (the tiles' shared y for horizontal glues).
    pub y: i32,
}

/// The glue records of a path, in path order.
pub fn glues(sys: &TileSystem, p: &Path) -> Result<Vec<GlueRecord>, GlueError> {
    if p.len() < 2 {
        return Err(GlueError::TooShort);
    }
    let mut out = Vec::with_capacity(p.len() - 1);
    for i in 0..p.len() - 1 {
        let (a, ta) = p.steps()[i];
        let (b, _) = p.steps()[i + 1];
        let d = Dir::from_vec(crate::geom::Vec2::between(a, b)).unwrap();
        let label = sys.tile(ta).side(d).label.clone();
        let horizontal = a.y == b.y;
        out.push(GlueRecord {
            index: i,
            orientation: if horizontal { Orientation::Horizontal } else { Orientation::Vertical },
            column: horizontal.then(|| a.x.min(b.x)),
            points: horizontal.then(|| if b.x > a.x { Dir::East } else { Dir::West }),
            label,
            position: DPoint::new(a.x + b.x, 2 * a.y),
            y: a.y,
        });
    }
    Ok(out)
}

/// Horizontal blocking glues contributed by the seed on one column: every
/// east-west adjacency inside the seed domain.
pub fn seed_glue_rows(seed: &Assembly, column: i32) -> Vec<i32> {
    seed.tiles
        .keys()
        .filter(|p| p.x == column && seed.contains(Pos::new(p.x + 1, p.y)))
        .map(|p| p.y)
        .collect()
}

fn column_range(p: &Path) -> (i32, i32) {
    let e = p.extents();
    (e.west, e.east)
}

/// Indices of the path's horizontal glues on `column`, restricted to
/// `index >= start`.
fn column_glues(gl: &[GlueRecord], column: i32, start: usize) -> Vec<usize> {
    gl.iter()
        .filter(|g| g.index >= start && g.column == Some(column))
        .map(|g| g.index)
        .collect()
}

/// The glue of the suffix `p[start..]` visible from `side` on `column`, if
/// any. Blocking considers the suffix's own glues and the seed's implicit
/// glues; strictly-beyond comparisons cannot tie because two glues of one
/// path on one column have distinct rows.
pub fn visible_glue_in_suffix(
    sys: &TileSystem,
    p: &Path,
    seed: &Assembly,
    start: usize,
    column: i32,
    side: Side,
) -> Result<Option<usize>, GlueError> {
    let gl = glues(sys, p)?;
    let on_column = column_glues(&gl, column, start);
    let candidate = match side {
        Side::North => on_column.iter().copied().max_by_key(|i| gl[*i].y),
        Side::South => on_column.iter().copied().min_by_key(|i| gl[*i].y),
    };
    let Some(candidate) = candidate else {
        return Ok(None);
    };
    let cy = gl[candidate].y;
    let blocked = seed_glue_rows(seed, column).into_iter().any(|sy| match side {
        Side::North => sy > cy,
        Side::South => sy < cy,
    });
    Ok(if blocked { None } else { Some(candidate) })
}

/// The glue of `p` visible from `side` on `column`, if any.
pub fn visible_glue(
    sys: &TileSystem,
    p: &Path,
    seed: &Assembly,
    column: i32,
    side: Side,
) -> Result<Option<usize>, GlueError> {
    let (w, e) = column_range(p);
    if column < w || column >= e {
        return Err(GlueError::ColumnOutOfRange(column));
    }
    visible_glue_in_suffix(sys, p, seed, 0, column, side)
}

/// True when glue `i` is visible from `side` within the suffix of `p`
/// starting at `i`. Vertical glues are never visible from north or south.
pub fn is_pseudo_visible(
    sys: &TileSystem,
    p: &Path,
    seed: &Assembly,
    i: usize,
    side: Side,
) -> Result<bool, GlueError> {
    if i + 1 >= p.len() {
        return Err(GlueError::BadIndex(i));
    }
    let gl = glues(sys, p)?;
    let Some(column) = gl[i].column else {
        return Ok(false);
    };
    Ok(visible_glue_in_suffix(sys, p, seed, i, column, side)? == Some(i))
}

/// The vertical span between the north- and south-visible glues of `p` on
/// `column`.
pub fn width_on_column(
    sys: &TileSystem,
    p: &Path,
    seed: &Assembly,
    column: i32,
) -> Result<i32, GlueError> {
    let gl = glues(sys, p)?;
    if column_glues(&gl, column, 0).is_empty() {
        return Err(GlueError::NoGlueOnColumn(column));
    }
    let n = visible_glue_in_suffix(sys, p, seed, 0, column, Side::North)?
        .ok_or(GlueError::NoVisibleGlue(column))?;
    let s = visible_glue_in_suffix(sys, p, seed, 0, column, Side::South)?
        .ok_or(GlueError::NoVisibleGlue(column))?;
    Ok(gl[n].y - gl[s].y)
}

/// Largest glue index of `p` on `column`.
pub fn last_glue_index(sys: &TileSystem, p: &Path, column: i32) -> Result<usize, GlueError> {
    let gl = glues(sys, p)?;
    column_glues(&gl, column, 0)
        .into_iter()
        .max()
        .ok_or(GlueError::NoGlueOnColumn(column))
}

/// Smallest glue index of `p` on `column`.
pub fn first_glue_index(sys: &TileSystem, p: &Path, column: i32) -> Result<usize, GlueError> {
    let gl = glues(sys, p)?;
    column_glues(&gl, column, 0)
        .into_iter()
        .min()
        .ok_or(GlueError::NoGlueOnColumn(column))
}

/// Visibility flags of one glue, as reported by the decomposition tables.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GlueTableRow {
    pub index: usize,
    pub orientation: Orientation,
    pub column: Option<i32>,
    pub points: Option<Dir>,
    pub y: i32,
    pub label: String,
    pub visible_from_north: bool,
    pub visible_from_south: bool,
}

/// The full glue table of a path, used by the CLI decomposition reports.
pub fn glue_table(
    sys: &TileSystem,
    p: &Path,
    seed: &Assembly,
) -> Result<Vec<GlueTableRow>, GlueError> {
    let gl = glues(sys, p)?;
    let mut rows = Vec::with_capacity(gl.len());
    for g in &gl {
        let (mut vn, mut vs) = (false, false);
        if let Some(c) = g.column {
            vn = visible_glue_in_suffix(sys, p, seed, 0, c, Side::North)? == Some(g.index);
            vs = visible_glue_in_suffix(sys, p, seed, 0, c, Side::South)? == Some(g.index);
        }
        rows.push(GlueTableRow {
            index: g.index,
            orientation: g.orientation,
            column: g.column,
            points: g.points,
            y: g.y,
            label: g.label.clone(),
            visible_from_north: vn,
            visible_from_south: vs,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::TileSystem;

    fn span_path(sys: &TileSystem) -> Path {
        Path::from_names(
            sys,
            &[
                (Pos::new(1, 0), "p1"),
                (Pos::new(2, 0), "p2"),
                (Pos::new(2, 1), "p3"),
                (Pos::new(1, 1), "p4"),
                (Pos::new(1, 2), "p5"),
                (Pos::new(2, 2), "p6"),
            ],
        )
        .unwrap()
    }

    fn zigzag_path(sys: &TileSystem) -> Path {
        Path::from_names(
            sys,
            &[
                (Pos::new(1, 0), "z1"),
                (Pos::new(1, 1), "z2"),
                (Pos::new(0, 1), "z3"),
                (Pos::new(0, 2), "z4"),
                (Pos::new(1, 2), "z5"),
                (Pos::new(2, 2), "z6"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn glue_records_line3() {
        let sys = fixtures::load("line3");
        let p = Path::from_names(
            &sys,
            &[(Pos::new(0, 0), "t0"), (Pos::new(1, 0), "t1"), (Pos::new(2, 0), "t2")],
        )
        .unwrap();
        let gl = glues(&sys, &p).unwrap();
        assert_eq!(gl.len(), 2);
        assert!(gl.iter().all(|g| g.orientation == Orientation::Horizontal));
        assert_eq!(gl[0].column, Some(0));
        assert_eq!(gl[1].column, Some(1));
        assert!(gl.iter().all(|g| g.points == Some(Dir::East)));
    }

    #[test]
    fn glue_records_span() {
        let sys = fixtures::load("span");
        let gl = glues(&sys, &span_path(&sys)).unwrap();
        let summary: Vec<(Option<i32>, Option<Dir>, i32)> =
            gl.iter().map(|g| (g.column, g.points, g.y)).collect();
        assert_eq!(
            summary,
            vec![
                (Some(1), Some(Dir::East), 0),
                (None, None, 0),
                (Some(1), Some(Dir::West), 1),
                (None, None, 1),
                (Some(1), Some(Dir::East), 2),
            ]
        );
        // Glue positions are exact midpoints in doubled coordinates.
        assert_eq!(gl[0].position, DPoint::new(3, 0));
        assert_eq!(gl[4].position, DPoint::new(3, 4));
    }

    #[test]
    fn single_tile_has_no_glues() {
        let sys = fixtures::load("ray");
        let p = Path::from_names(&sys, &[(Pos::new(0, 0), "t")]).unwrap();
        assert_eq!(glues(&sys, &p), Err(GlueError::TooShort));
    }

    #[test]
    fn span_visibility() {
        let sys = fixtures::load("span");
        let p = span_path(&sys);
        assert_eq!(visible_glue(&sys, &p, &sys.seed, 1, Side::South).unwrap(), Some(0));
        assert_eq!(visible_glue(&sys, &p, &sys.seed, 1, Side::North).unwrap(), Some(4));
        assert_eq!(
            visible_glue(&sys, &p, &sys.seed, 9, Side::North),
            Err(GlueError::ColumnOutOfRange(9))
        );
    }

    #[test]
    fn zigzag_visibility() {
        let sys = fixtures::load("zigzag");
        let p = zigzag_path(&sys);
        // Column 0 glues: the westward bond at y=1 (index 1) and the
        // eastward bond at y=2 (index 3). A single-tile seed never blocks.
        assert_eq!(visible_glue(&sys, &p, &sys.seed, 0, Side::South).unwrap(), Some(1));
        assert_eq!(visible_glue(&sys, &p, &sys.seed, 0, Side::North).unwrap(), Some(3));
        assert_eq!(width_on_column(&sys, &p, &sys.seed, 0).unwrap(), 1);
    }

    #[test]
    fn pseudo_visibility_span() {
        let sys = fixtures::load("span");
        let p = span_path(&sys);
        // Any glue visible in the whole path stays visible in its suffix.
        for (i, side) in [(0usize, Side::South), (4usize, Side::North)] {
            assert!(is_pseudo_visible(&sys, &p, &sys.seed, i, side).unwrap());
        }
        // The westward middle glue is shadowed in the full path but visible
        // from the south in its own suffix.
        assert_eq!(visible_glue(&sys, &p, &sys.seed, 1, Side::South).unwrap(), Some(0));
        assert!(is_pseudo_visible(&sys, &p, &sys.seed, 2, Side::South).unwrap());
        assert!(!is_pseudo_visible(&sys, &p, &sys.seed, 2, Side::North).unwrap());
        assert_eq!(
            is_pseudo_visible(&sys, &p, &sys.seed, 5, Side::South),
            Err(GlueError::BadIndex(5))
        );
    }

    #[test]
    fn widths() {
        let sys = fixtures::load("span");
        let p = span_path(&sys);
        assert_eq!(width_on_column(&sys, &p, &sys.seed, 1).unwrap(), 2);

        let line = fixtures::load("line3");
        let lp = Path::from_names(
            &line,
            &[(Pos::new(0, 0), "t0"), (Pos::new(1, 0), "t1"), (Pos::new(2, 0), "t2")],
        )
        .unwrap();
        assert_eq!(width_on_column(&line, &lp, &line.seed, 0).unwrap(), 0);
    }

    #[test]
    fn seed_blocking() {
        // In the seedblock fixture the seed's top bar contributes horizontal
        // glues on columns 0 and 1 at y=2, blocking north visibility there.
        let sys = fixtures::load("seedblock");
        assert_eq!(seed_glue_rows(&sys.seed, 0), vec![2]);
        assert_eq!(seed_glue_rows(&sys.seed, 1), vec![2]);
        let p = Path::from_names(
            &sys,
            &[
                (Pos::new(1, 0), "a"),
                (Pos::new(2, 0), "b"),
                (Pos::new(2, 1), "c"),
                (Pos::new(1, 1), "d"),
            ],
        )
        .unwrap();
        // The path's northernmost glue on column 1 sits at y=1, below the
        // seed bar at y=2: blocked from the north, visible from the south.
        assert_eq!(visible_glue(&sys, &p, &sys.seed, 1, Side::North).unwrap(), None);
        assert_eq!(visible_glue(&sys, &p, &sys.seed, 1, Side::South).unwrap(), Some(0));
        assert_eq!(
            width_on_column(&sys, &p, &sys.seed, 1),
            Err(GlueError::NoVisibleGlue(1))
        );
    }

    #[test]
    fn first_and_last_glue_indices() {
        let sys = fixtures::load("span");
        let p = span_path(&sys);
        assert_eq!(last_glue_index(&sys, &p, 1).unwrap(), 4);
        assert_eq!(first_glue_index(&sys, &p, 1).unwrap(), 0);

        let line = fixtures::load("line3");
        let lp = Path::from_names(
            &line,
            &[(Pos::new(0, 0), "t0"), (Pos::new(1, 0), "t1"), (Pos::new(2, 0), "t2")],
        )
        .unwrap();
        assert_eq!(last_glue_index(&line, &lp, 0).unwrap(), 0);
        assert_eq!(last_glue_index(&line, &lp, 5), Err(GlueError::NoGlueOnColumn(5)));

        let zig = fixtures::load("zigzag");
        let zp = zigzag_path(&zig);
        assert_eq!(first_glue_index(&zig, &zp, 0).unwrap(), 1);
    }
}
