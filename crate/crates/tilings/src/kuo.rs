use std::collections::{BTreeMap, BTreeSet, HashSet};

use cminor_algebra::Rational;
use cminor_regions::{Cell, Region};
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::domino::Domino;
use crate::dp::profile_sum;
use crate::weights::{domino_weight, WeightMap};
use crate::TilingError;

/// Dual graph of a region: cells as vertices, edge-adjacent cells joined, with rational edge
/// weights. Vertex classes follow the checkerboard; `flip` swaps them.
#[derive(Clone, Debug)]
pub struct DualGraph {
    region: Region,
    weights: BTreeMap<(Cell, Cell), Rational>,
    flip: bool,
}

/// Neighbour directions in counter-clockwise order.
const DIRS: [(i64, i64); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];

impl DualGraph {
    /// Edge weights from `weight`, called once per edge.
    pub fn new(region: Region, mut weight: impl FnMut(Domino) -> Rational) -> Self {
        let mut weights = BTreeMap::new();
        for &c in region.cells() {
            for nb in [Cell::new(c.x + 1, c.y), Cell::new(c.x, c.y + 1)] {
                if region.contains(nb) {
                    let d = Domino::new(c, nb).expect("adjacent");
                    weights.insert((c, nb), weight(d));
                }
            }
        }
        DualGraph { region, weights, flip: false }
    }

    /// Domino weights from a numeric weight map.
    pub fn from_weight_map(region: Region, w: &WeightMap) -> Result<Self, TilingError> {
        let mut err = None;
        let g = DualGraph::new(region, |d| {
            domino_weight(d, w).unwrap_or_else(|e| {
                err.get_or_insert(e);
                Rational::one()
            })
        });
        match err {
            Some(e) => Err(e),
            None => Ok(g),
        }
    }

    pub fn with_flip(mut self, flip: bool) -> Self {
        self.flip = flip;
        self
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    /// True for the first class (white cells unless flipped).
    pub fn in_first_class(&self, c: Cell) -> bool {
        ((c.x + c.y).rem_euclid(2) == 0) != self.flip
    }

    /// Sizes of the two vertex classes.
    pub fn class_sizes(&self) -> (usize, usize) {
        let first = self.region.cells().iter().filter(|&&c| self.in_first_class(c)).count();
        (first, self.region.len() - first)
    }

    /// `W(G - removed)`: the matching weight sum after deleting vertices.
    pub fn weight_without(&self, removed: &[Cell]) -> Result<Rational, TilingError> {
        let rest = self.region.without(removed, (0, 0));
        profile_sum::<Rational>(&rest, |a, b| Ok(self.weights[&(a, b)].clone()))
    }

    fn neighbours_ccw(&self, c: Cell) -> Vec<Cell> {
        DIRS.iter().map(|&(dx, dy)| Cell::new(c.x + dx, c.y + dy)).filter(|&nb| self.region.contains(nb)).collect()
    }

    /// Boundary walks of all faces of the grid embedding, isolated vertices excluded.
    ///
    /// Each face is traced by arriving at a vertex and leaving along the neighbour that comes
    /// just before the arrival edge in counter-clockwise order.
    pub fn faces(&self) -> Vec<Vec<Cell>> {
        let mut used: HashSet<(Cell, Cell)> = HashSet::new();
        let mut faces = Vec::new();
        for &a in self.region.cells() {
            for b in self.neighbours_ccw(a) {
                if used.contains(&(a, b)) {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut u, mut v) = (a, b);
                while used.insert((u, v)) {
                    walk.push(u);
                    let around = self.neighbours_ccw(v);
                    let i = around.iter().position(|&c| c == u).expect("edge is symmetric");
                    let next = around[(i + around.len() - 1) % around.len()];
                    (u, v) = (v, next);
                }
                faces.push(walk);
            }
        }
        faces
    }
}

/// Whether `want` occurs in this order (possibly reversed) along the closed walk `face`.
fn in_cyclic_order(face: &[Cell], want: &[Cell]) -> bool {
    let distinct: BTreeSet<Cell> = want.iter().copied().collect();
    if distinct.len() != want.len() {
        return false;
    }
    let fits = |seq: &[Cell]| {
        (0..seq.len()).filter(|&i| seq[i] == want[0]).any(|start| {
            let mut k = 1;
            for step in 1..seq.len() {
                if k < want.len() && seq[(start + step) % seq.len()] == want[k] {
                    k += 1;
                }
            }
            k == want.len()
        })
    };
    let rev: Vec<Cell> = face.iter().rev().copied().collect();
    fits(face) || fits(&rev)
}

/// The three condensation identities for four vertices `u, v, w, s` in cyclic order on a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KuoVariant {
    /// `u, w` in one class, `v, s` in the other, classes of equal size:
    /// `W(G) W(G-uvws) = W(G-uv) W(G-ws) + W(G-us) W(G-vw)`.
    Alternating,
    /// `u, v, w` in the larger class, which has one vertex more, `s` in the other:
    /// `W(G-v) W(G-uws) = W(G-u) W(G-vws) + W(G-w) W(G-uvs)`.
    Surplus,
    /// `u, v` in one class, `w, s` in the other, classes of equal size:
    /// `W(G-us) W(G-vw) = W(G) W(G-uvws) + W(G-uw) W(G-vs)`.
    Paired,
}

impl KuoVariant {
    pub const ALL: [KuoVariant; 3] = [KuoVariant::Alternating, KuoVariant::Surplus, KuoVariant::Paired];

    pub fn name(self) -> &'static str {
        match self {
            KuoVariant::Alternating => "alternating",
            KuoVariant::Surplus => "surplus",
            KuoVariant::Paired => "paired",
        }
    }

    /// Whether vertices with these class memberships fit the variant, given the class sizes.
    pub fn fits(self, classes: [bool; 4], sizes: (usize, usize)) -> bool {
        let [u, v, w, s] = classes;
        let count = |c: bool| if c { sizes.0 } else { sizes.1 };
        match self {
            KuoVariant::Alternating => u == w && v == s && u != v && sizes.0 == sizes.1,
            KuoVariant::Surplus => u == v && v == w && s != u && count(u) == count(s) + 1,
            KuoVariant::Paired => u == v && w == s && u != w && sizes.0 == sizes.1,
        }
    }
}

/// Both sides of one condensation identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuoCheck {
    pub variant: KuoVariant,
    #[serde(with = "cminor_algebra::rational::as_string")]
    pub lhs: Rational,
    #[serde(with = "cminor_algebra::rational::as_string")]
    pub rhs: Rational,
    pub holds: bool,
}

pub fn kuo_check(
    g: &DualGraph,
    u: Cell,
    v: Cell,
    w: Cell,
    s: Cell,
    variant: KuoVariant,
) -> Result<KuoCheck, TilingError> {
    let quad = [u, v, w, s];
    if quad.iter().any(|&c| !g.region.contains(c)) || !g.faces().iter().any(|f| in_cyclic_order(f, &quad)) {
        return Err(TilingError::BadCyclicOrder);
    }
    let classes = quad.map(|c| g.in_first_class(c));
    if !variant.fits(classes, g.class_sizes()) {
        return Err(TilingError::BadBipartition(format!(
            "{} with classes {classes:?} and sizes {:?}",
            variant.name(),
            g.class_sizes()
        )));
    }
    let wt = |rm: &[Cell]| g.weight_without(rm);
    let (lhs, rhs) = match variant {
        KuoVariant::Alternating => {
            (wt(&[])? * wt(&[u, v, w, s])?, wt(&[u, v])? * wt(&[w, s])? + wt(&[u, s])? * wt(&[v, w])?)
        }
        KuoVariant::Surplus => (wt(&[v])? * wt(&[u, w, s])?, wt(&[u])? * wt(&[v, w, s])? + wt(&[w])? * wt(&[u, v, s])?),
        KuoVariant::Paired => {
            (wt(&[u, s])? * wt(&[v, w])?, wt(&[])? * wt(&[u, v, w, s])? + wt(&[u, w])? * wt(&[v, s])?)
        }
    };
    let holds = lhs == rhs;
    Ok(KuoCheck { variant, lhs, rhs, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cminor_algebra::{frac, int};
    use cminor_regions::build_aztec_diamond;

    fn block(w: i64, h: i64) -> Region {
        Region::from_cells((0..w).flat_map(|x| (0..h).map(move |y| Cell::new(x, y)))).unwrap()
    }

    #[test]
    fn square_faces() {
        let g = DualGraph::new(block(2, 2), |_| int(1));
        let faces = g.faces();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.len() == 4));
    }

    #[test]
    fn faces_of_a_path_walk_both_ways() {
        let g = DualGraph::new(block(3, 1), |_| int(1));
        let faces = g.faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 4);
    }

    #[test]
    fn four_cycle_alternating() {
        let g = DualGraph::new(block(2, 2), |_| int(1));
        let (a, b, c, d) = (Cell::new(0, 0), Cell::new(1, 0), Cell::new(1, 1), Cell::new(0, 1));
        let r = kuo_check(&g, a, b, c, d, KuoVariant::Alternating).unwrap();
        // W(G) = 2, W(G - all) = 1; two of the four pairs are edges
        assert_eq!(r.lhs, int(2));
        assert!(r.holds);
    }

    #[test]
    fn diamond_corners_with_weights() {
        let d = build_aztec_diamond(0, 0, 2);
        let mut k = 0i64;
        let g = DualGraph::new(d, |_| {
            k += 1;
            frac(k * 7 % 11 + 1, k % 5 + 1)
        });
        // leftmost, bottom, rightmost, top cells of the order-2 diamond, counter-clockwise
        let (l, b, r, t) = (Cell::new(-2, 0), Cell::new(-1, -2), Cell::new(1, -1), Cell::new(0, 1));
        assert!(kuo_check(&g, l, b, r, t, KuoVariant::Alternating).unwrap().holds);
        assert!(matches!(kuo_check(&g, l, b, r, t, KuoVariant::Paired), Err(TilingError::BadBipartition(_))));
    }

    #[test]
    fn paired_on_a_two_by_three_block() {
        let g = DualGraph::new(block(2, 3), |_| int(1));
        let (u, v, w, s) = (Cell::new(0, 0), Cell::new(1, 1), Cell::new(1, 2), Cell::new(0, 1));
        let r = kuo_check(&g, u, v, w, s, KuoVariant::Paired).unwrap();
        assert_eq!((r.lhs.clone(), r.holds), (int(1), true));
        assert!(matches!(kuo_check(&g, u, v, w, s, KuoVariant::Alternating), Err(TilingError::BadBipartition(_))));
    }

    #[test]
    fn rejects_vertices_off_a_common_face() {
        let g = DualGraph::new(block(4, 4), |_| int(1));
        let inner = Cell::new(1, 1);
        let r = kuo_check(&g, Cell::new(0, 0), inner, Cell::new(3, 3), Cell::new(0, 3), KuoVariant::Alternating);
        assert_eq!(r.unwrap_err(), TilingError::BadCyclicOrder);
    }
}
