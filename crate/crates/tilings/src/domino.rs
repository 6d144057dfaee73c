use cminor_regions::{Cell, Point};
use serde::{Deserialize, Serialize};

use crate::TilingError;

/// Two edge-adjacent cells, stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Domino {
    a: Cell,
    b: Cell,
}

impl Domino {
    pub fn new(p: Cell, q: Cell) -> Result<Self, TilingError> {
        let (a, b) = if p < q { (p, q) } else { (q, p) };
        let adjacent = (a.x == b.x && b.y == a.y + 1) || (a.y == b.y && b.x == a.x + 1);
        if !adjacent {
            return Err(TilingError::NotAdjacent(p, q));
        }
        Ok(Domino { a, b })
    }

    pub fn cells(self) -> (Cell, Cell) {
        (self.a, self.b)
    }

    /// Long side horizontal, i.e. the cells sit side by side.
    pub fn is_horizontal(self) -> bool {
        self.a.y == self.b.y
    }

    /// Midpoints of the two long sides, the points whose `v` weight the domino.
    ///
    /// Cells `(x-1,y),(x,y)` give `(x,y),(x,y+1)`; cells `(x,y-1),(x,y)` give `(x,y),(x+1,y)`.
    pub fn long_side_midpoints(self) -> (Point, Point) {
        if self.is_horizontal() {
            let x = self.b.x;
            ((x, self.a.y), (x, self.a.y + 1))
        } else {
            let y = self.b.y;
            ((self.a.x, y), (self.a.x + 1, y))
        }
    }
}

impl Serialize for Domino {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [[self.a.x, self.a.y], [self.b.x, self.b.y]].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Domino {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [[ax, ay], [bx, by]] = <[[i64; 2]; 2]>::deserialize(d)?;
        Domino::new(Cell::new(ax, ay), Cell::new(bx, by)).map_err(serde::de::Error::custom)
    }
}

/// A tiling as its list of dominoes in increasing order.
pub type Tiling = Vec<Domino>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn midpoints_follow_the_weight_convention() {
        let h = Domino::new(Cell::new(0, 0), Cell::new(-1, 0)).unwrap();
        assert_eq!(h.long_side_midpoints(), ((0, 0), (0, 1)));
        let v = Domino::new(Cell::new(0, 1), Cell::new(0, 0)).unwrap();
        assert_eq!(v.long_side_midpoints(), ((0, 1), (1, 1)));
    }

    #[test]
    fn rejects_non_adjacent_cells() {
        assert!(Domino::new(Cell::new(0, 0), Cell::new(1, 1)).is_err());
        assert!(Domino::new(Cell::new(0, 0), Cell::new(0, 0)).is_err());
    }

    #[test]
    fn json_is_a_cell_pair() {
        let d = Domino::new(Cell::new(2, 3), Cell::new(2, 4)).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, "[[2,3],[2,4]]");
        assert_eq!(serde_json::from_str::<Domino>(&s).unwrap(), d);
    }
}
