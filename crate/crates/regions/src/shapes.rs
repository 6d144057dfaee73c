use serde::{Deserialize, Serialize};

use crate::region::{Cell, Region};
use crate::RegionError;

/// Cells whose center lies within `|cx - x0| + |cy - y0| <= h`; the formal empty region for `h = 0`.
pub fn build_aztec_diamond(x0: i64, y0: i64, h: u64) -> Region {
    let h = h as i64;
    let cells = (x0 - h..x0 + h).flat_map(|x| {
        (y0 - h..y0 + h).filter_map(move |y| {
            let c = Cell::new(x, y);
            let (cx, cy) = c.center2();
            ((cx - 2 * x0).abs() + (cy - 2 * y0).abs() <= 2 * h).then_some(c)
        })
    });
    Region::new(cells, (x0, y0))
}

/// Part of the diamond between the lines `y = 0` and `y = n`.
pub fn build_tad(x0: i64, y0: i64, h: u64, n: i64) -> Region {
    build_aztec_diamond(x0, y0, h).strip(n, (x0, y0))
}

/// Aztec rectangle with `m` steps on its north-west side and `n2` on its north-east side.
///
/// Its left corner is `(x0 - m, y0)` and its top corner `(x0, y0 + m)`: the line `x = x0`
/// bisects the top step and `y = y0` bisects the leftmost step. In diagonal coordinates of cell
/// centers, `p = cx + cy` ranges over `[x0+y0-m, x0+y0+m]` and `q = cx - cy` over
/// `[x0-y0-m, x0-y0-m+2*n2]`. With `m = n2` this is the diamond of order `m`.
pub fn build_aztec_rectangle(x0: i64, y0: i64, m: u64, n2: u64) -> Region {
    let (m, n2) = (m as i64, n2 as i64);
    let (pl, ph) = (x0 + y0 - m, x0 + y0 + m);
    let (ql, qh) = (x0 - y0 - m, x0 - y0 - m + 2 * n2);
    let cells = (x0 - m - 1..=x0 + n2 + 1).flat_map(move |x| {
        (y0 - n2 - 1..=y0 + m + 1).filter_map(move |y| {
            let c = Cell::new(x, y);
            let (p, q) = c.pq();
            (pl <= p && p <= ph && ql <= q && q <= qh).then_some(c)
        })
    });
    Region::new(cells, (x0, y0))
}

/// A diamond `AD_{x0,0}^h` centered on the line `y = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondParams {
    pub x0: i64,
    pub h: u64,
}

impl DiamondParams {
    pub fn region(self) -> Region {
        build_aztec_diamond(self.x0, 0, self.h)
    }

    /// True if `other` lies inside `self`.
    pub fn contains(self, other: DiamondParams) -> bool {
        (other.x0 - self.x0).abs() + other.h as i64 <= self.h as i64
    }
}

/// How the two diamonds of an L-sum sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LSumShape {
    /// The first (left) diamond lies inside the second.
    FirstInside,
    /// Neither contains the other: a V-shaped union.
    Overlap,
    /// The second (right) diamond lies inside the first.
    SecondInside,
}

impl LSumShape {
    pub fn of(d1: DiamondParams, d2: DiamondParams) -> LSumShape {
        if d2.contains(d1) {
            LSumShape::FirstInside
        } else if d1.contains(d2) {
            LSumShape::SecondInside
        } else {
            LSumShape::Overlap
        }
    }

    pub fn letter(self) -> char {
        match self {
            LSumShape::FirstInside => 'a',
            LSumShape::Overlap => 'b',
            LSumShape::SecondInside => 'c',
        }
    }
}

/// Sum of two diamonds centered on `y = 0`.
///
/// V shape: the union. First inside second: the first diamond together with the cells of the
/// second lying beyond the first's north-east side (`p >= x1 + h1 + 1`). Second inside first:
/// the second diamond together with the cells of the first lying beyond the second's
/// north-west side (`q <= x2 - h2 - 1`). Diamonds given right-to-left are handled by mirroring.
pub fn l_sum(d1: DiamondParams, d2: DiamondParams) -> Result<Region, RegionError> {
    if (d1.x0 - d2.x0).abs() > (d1.h + d2.h) as i64 {
        return Err(RegionError::DisjointDiamonds);
    }
    if d1.x0 > d2.x0 {
        let m = |d: DiamondParams| DiamondParams { x0: -d.x0, h: d.h };
        return Ok(l_sum(m(d1), m(d2))?.reflect_x(0));
    }
    let (r1, r2) = (d1.region(), d2.region());
    let anchor = (d1.x0, 0);
    Ok(match LSumShape::of(d1, d2) {
        LSumShape::Overlap => r1.union(&r2),
        LSumShape::FirstInside => {
            let ne1 = d1.x0 + d1.h as i64;
            r1.union(&r2.filter(|c| c.pq().0 > ne1, anchor))
        }
        LSumShape::SecondInside => {
            let nw2 = d2.x0 - d2.h as i64;
            r2.union(&r1.filter(|c| c.pq().1 < nw2, anchor))
        }
    })
}

/// Which way a zigzag path continues horizontally beyond its last step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Extension {
    Plus,
    Minus,
}

/// Zigzag lattice path from its anchor on a horizontal line: peaks of heights `k_1..k_s`
/// separated by valleys of depths `t_1..t_{s-1}`, flat at the anchor height outside.
///
/// The path is a staircase; over column `X` it sits at height `f(X + 1)`, where `f` is the
/// piecewise linear profile rising and falling with slope one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZigzagPath {
    pub peaks: Vec<u64>,
    pub valleys: Vec<u64>,
    pub extension: Extension,
    pub anchor: (i64, i64),
}

impl ZigzagPath {
    pub fn new(peaks: &[u64], valleys: &[u64], extension: Extension, anchor: (i64, i64)) -> Result<Self, RegionError> {
        if peaks.is_empty() || valleys.len() + 1 != peaks.len() || peaks.iter().chain(valleys).any(|&v| v == 0) {
            return Err(RegionError::InvalidParams(format!("path peaks {peaks:?} valleys {valleys:?}")));
        }
        Ok(ZigzagPath { peaks: peaks.to_vec(), valleys: valleys.to_vec(), extension, anchor })
    }

    /// Horizontal extent of the zigzag part.
    pub fn width(&self) -> i64 {
        2 * self.peaks.iter().chain(&self.valleys).sum::<u64>() as i64
    }

    /// Height of the profile at lattice abscissa `x`.
    pub fn profile(&self, x: i64) -> i64 {
        let mut pos = self.anchor.0;
        for (i, &k) in self.peaks.iter().enumerate() {
            let k = k as i64;
            if (pos..=pos + 2 * k).contains(&x) {
                return self.anchor.1 + k - (x - pos - k).abs();
            }
            pos += 2 * k;
            if let Some(&t) = self.valleys.get(i) {
                let t = t as i64;
                if (pos..=pos + 2 * t).contains(&x) {
                    return self.anchor.1 - t + (x - pos - t).abs();
                }
                pos += 2 * t;
            }
        }
        self.anchor.1
    }

    /// Height of the staircase over column `x`.
    pub fn floor_at(&self, x: i64) -> i64 {
        self.profile(x + 1)
    }
}

/// Keeps the cells lying entirely on or above the path.
pub fn trim_below_path(r: &Region, p: &ZigzagPath) -> Region {
    r.filter(|c| c.y >= p.floor_at(c.x), p.anchor)
}
