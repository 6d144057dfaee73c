use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::RegionError;

/// Lattice point `(x, y)`.
pub type Point = (i64, i64);

/// Unit square `[x, x+1] x [y, y+1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub const fn new(x: i64, y: i64) -> Self {
        Cell { x, y }
    }

    pub fn corners(self) -> [Point; 4] {
        let Cell { x, y } = self;
        [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)]
    }

    /// Doubled center `(2x+1, 2y+1)`, exact in integers.
    pub fn center2(self) -> (i64, i64) {
        (2 * self.x + 1, 2 * self.y + 1)
    }

    /// Diagonal coordinates of the center: `p = cx + cy`, `q = cx - cy`.
    pub fn pq(self) -> (i64, i64) {
        (self.x + self.y + 1, self.x - self.y)
    }
}

/// Finite set of cells. An empty region carries an anchor point.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Region {
    cells: BTreeSet<Cell>,
    anchor: Option<Point>,
}

impl Region {
    /// Nonempty region from cells; the anchor is used only if `cells` turns out empty.
    pub fn new(cells: impl IntoIterator<Item = Cell>, anchor_if_empty: Point) -> Self {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        let anchor = if cells.is_empty() { Some(anchor_if_empty) } else { None };
        Region { cells, anchor }
    }

    /// Region from cells with no anchor; an empty input is rejected.
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Result<Self, RegionError> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(RegionError::MissingAnchor);
        }
        Ok(Region { cells, anchor: None })
    }

    /// The formal empty region at `p`.
    pub fn empty_at(p: Point) -> Self {
        Region { cells: BTreeSet::new(), anchor: Some(p) }
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn anchor(&self) -> Option<Point> {
        self.anchor
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    /// Keeps the cells satisfying `keep`; an emptied region is anchored at `anchor_if_empty`.
    pub fn filter(&self, keep: impl Fn(Cell) -> bool, anchor_if_empty: Point) -> Region {
        Region::new(self.cells.iter().copied().filter(|&c| keep(c)), anchor_if_empty)
    }

    /// Removes the given cells. The anchor of a resulting empty region is `anchor_if_empty`.
    pub fn without(&self, drop: &[Cell], anchor_if_empty: Point) -> Region {
        self.filter(|c| !drop.contains(&c), anchor_if_empty)
    }

    pub fn union(&self, other: &Region) -> Region {
        let anchor = self.anchor.or(other.anchor).unwrap_or((0, 0));
        Region::new(self.cells.union(&other.cells).copied(), anchor)
    }

    pub fn is_subset(&self, other: &Region) -> bool {
        self.cells.is_subset(&other.cells)
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Region {
        Region {
            cells: self.cells.iter().map(|c| Cell::new(c.x + dx, c.y + dy)).collect(),
            anchor: self.anchor.map(|(x, y)| (x + dx, y + dy)),
        }
    }

    /// Mirror image in the vertical line `X = axis`.
    pub fn reflect_x(&self, axis: i64) -> Region {
        Region {
            cells: self.cells.iter().map(|c| Cell::new(2 * axis - 1 - c.x, c.y)).collect(),
            anchor: self.anchor.map(|(x, y)| (2 * axis - x, y)),
        }
    }

    /// Cells with `0 <= y` and `y + 1 <= n`. An emptied region keeps `anchor_if_empty`.
    pub fn strip(&self, n: i64, anchor_if_empty: Point) -> Region {
        self.filter(|c| c.y >= 0 && c.y < n, anchor_if_empty)
    }

    /// `(min_x, min_y, max_x, max_y)` over cells.
    pub fn bounds(&self) -> Option<(i64, i64, i64, i64)> {
        let mut it = self.cells.iter();
        let first = it.next()?;
        Some(it.fold((first.x, first.y, first.x, first.y), |(a, b, c, d), e| {
            (a.min(e.x), b.min(e.y), c.max(e.x), d.max(e.y))
        }))
    }

    /// Checkerboard class: the cell with lower-left corner `(x, y)` is white iff `x + y` is even.
    pub fn color_counts(&self) -> (usize, usize) {
        let white = self.cells.iter().filter(|c| (c.x + c.y).rem_euclid(2) == 0).count();
        (white, self.cells.len() - white)
    }
}

/// Lattice points that are corners of at least two cells; `{anchor}` for the empty region.
pub fn covering_points(r: &Region) -> BTreeSet<Point> {
    if r.is_empty() {
        return r.anchor.into_iter().collect();
    }
    let mut count: BTreeMap<Point, u8> = BTreeMap::new();
    for c in r.cells() {
        for p in c.corners() {
            *count.entry(p).or_insert(0) += 1;
        }
    }
    count.into_iter().filter(|&(_, k)| k >= 2).map(|(p, _)| p).collect()
}

/// [`covering_points`] for a region living between `y = 0` and `y = n`.
///
/// Along the line `y = n`, each maximal run of cells in row `n-1` starting at column `L`
/// contributes only its points at odd offsets `L+1, L+3, ...`; the even-offset points are dropped.
pub fn covering_points_in_strip(r: &Region, n: i64) -> BTreeSet<Point> {
    let mut pts = covering_points(r);
    let top: Vec<i64> = r.cells().iter().filter(|c| c.y == n - 1).map(|c| c.x).collect();
    let mut i = 0;
    while i < top.len() {
        let mut j = i;
        while j + 1 < top.len() && top[j + 1] == top[j] + 1 {
            j += 1;
        }
        let start = top[i];
        let mut x = start + 2;
        while x <= top[j] {
            pts.remove(&(x, n));
            x += 2;
        }
        i = j + 1;
    }
    pts
}

#[derive(Serialize, Deserialize)]
struct RegionJson {
    cells: Vec<(i64, i64)>,
    anchor: Option<(i64, i64)>,
}

impl Serialize for Region {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RegionJson { cells: self.cells.iter().map(|c| (c.x, c.y)).collect(), anchor: self.anchor }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Region {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = RegionJson::deserialize(d)?;
        let cells: BTreeSet<Cell> = j.cells.into_iter().map(|(x, y)| Cell::new(x, y)).collect();
        match (cells.is_empty(), j.anchor) {
            (true, Some(a)) => Ok(Region::empty_at(a)),
            (true, None) => Err(serde::de::Error::custom("empty region needs an anchor")),
            (false, _) => Ok(Region { cells, anchor: None }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block(w: i64, h: i64) -> Region {
        Region::from_cells((0..w).flat_map(|x| (0..h).map(move |y| Cell::new(x, y)))).unwrap()
    }

    #[test]
    fn covering_points_of_two_by_two() {
        let pts = covering_points(&block(2, 2).translate(-1, -1));
        let want: BTreeSet<Point> = [(0, 0), (0, 1), (0, -1), (1, 0), (-1, 0)].into_iter().collect();
        assert_eq!(pts, want);
    }

    #[test]
    fn single_cell_has_no_covering_points() {
        assert!(covering_points(&block(1, 1)).is_empty());
    }

    #[test]
    fn empty_region_covers_its_anchor() {
        let e = Region::empty_at((3, 4));
        assert_eq!(covering_points(&e).into_iter().collect::<Vec<_>>(), vec![(3, 4)]);
    }

    #[test]
    fn strip_top_rule_drops_even_offsets() {
        // a 5-wide run touching y=2 keeps (1,2),(3,2) and drops (2,2),(4,2)
        let r = block(5, 2);
        let plain = covering_points(&r);
        let strip = covering_points_in_strip(&r, 2);
        let dropped: Vec<Point> = plain.difference(&strip).copied().collect();
        assert_eq!(dropped, vec![(2, 2), (4, 2)]);
        // a region below the line is unaffected
        assert_eq!(covering_points_in_strip(&r, 3), plain);
    }

    #[test]
    fn reflection_is_an_involution() {
        let r = Region::from_cells([Cell::new(0, 0), Cell::new(3, 1), Cell::new(-2, 5)]).unwrap();
        assert_eq!(r.reflect_x(4).reflect_x(4), r);
        assert!(r.reflect_x(0).contains(Cell::new(-1, 0)));
    }

    #[test]
    fn json_round_trip() {
        let r = block(2, 1);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"cells":[[0,0],[1,0]],"anchor":null}"#);
        assert_eq!(serde_json::from_str::<Region>(&s).unwrap(), r);
        let e = Region::empty_at((1, 2));
        assert_eq!(serde_json::from_str::<Region>(&serde_json::to_string(&e).unwrap()).unwrap(), e);
        assert!(serde_json::from_str::<Region>(r#"{"cells":[],"anchor":null}"#).is_err());
    }
}
