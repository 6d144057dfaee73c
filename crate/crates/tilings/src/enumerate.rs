use std::collections::HashMap;

use cminor_algebra::Rational;
use cminor_regions::{Cell, Region};
use num_traits::One;

use crate::domino::{Domino, Tiling};
use crate::weights::{domino_weight, WeightMap};
use crate::TilingError;

/// Default size limit for brute-force enumeration.
pub const ORACLE_CELL_CAP: usize = 48;

/// Calls `f` on every domino tiling of `r`, each exactly once. The empty region has one
/// (empty) tiling.
pub fn for_each_tiling(r: &Region, cap: usize, mut f: impl FnMut(&[Domino])) -> Result<(), TilingError> {
    if r.len() > cap {
        return Err(TilingError::CapExceeded { what: format!("{} cells", r.len()), cap: cap as u64 });
    }
    if r.len() % 2 == 1 {
        return Ok(());
    }
    let cells: Vec<Cell> = r.cells().iter().copied().collect();
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut covered = vec![false; cells.len()];
    let mut stack = Vec::with_capacity(cells.len() / 2);
    walk(&cells, &index, &mut covered, 0, &mut stack, &mut f);
    Ok(())
}

// The first uncovered cell in (x, y) order can only pair upwards or to the right.
fn walk(
    cells: &[Cell],
    index: &HashMap<Cell, usize>,
    covered: &mut [bool],
    from: usize,
    stack: &mut Vec<Domino>,
    f: &mut impl FnMut(&[Domino]),
) {
    let Some(i) = (from..cells.len()).find(|&i| !covered[i]) else {
        f(stack);
        return;
    };
    let c = cells[i];
    covered[i] = true;
    for nb in [Cell::new(c.x, c.y + 1), Cell::new(c.x + 1, c.y)] {
        if let Some(&j) = index.get(&nb) {
            if !covered[j] {
                covered[j] = true;
                stack.push(Domino::new(c, nb).expect("neighbours are adjacent"));
                walk(cells, index, covered, i + 1, stack, f);
                stack.pop();
                covered[j] = false;
            }
        }
    }
    covered[i] = false;
}

pub fn enumerate_tilings(r: &Region, cap: usize) -> Result<Vec<Tiling>, TilingError> {
    let mut out = Vec::new();
    for_each_tiling(r, cap, |t| {
        let mut t = t.to_vec();
        t.sort();
        out.push(t);
    })?;
    Ok(out)
}

/// Brute-force `W(R)`: the sum over enumerated tilings of the product of domino weights.
pub fn enumerated_weight_sum(
    r: &Region,
    cap: usize,
    mut weight: impl FnMut(Domino) -> Result<Rational, TilingError>,
) -> Result<Rational, TilingError> {
    let mut memo: HashMap<Domino, Rational> = HashMap::new();
    let mut err = None;
    let mut total = Rational::from_integer(0.into());
    for_each_tiling(r, cap, |t| {
        let mut prod = Rational::one();
        for &d in t {
            let w = match memo.get(&d) {
                Some(w) => w.clone(),
                None => match weight(d) {
                    Ok(w) => {
                        memo.insert(d, w.clone());
                        w
                    }
                    Err(e) => {
                        err.get_or_insert(e);
                        return;
                    }
                },
            };
            prod *= w;
        }
        total += prod;
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// [`enumerated_weight_sum`] under a weight map.
pub fn enumerated_weight_sum_map(r: &Region, w: &WeightMap, cap: usize) -> Result<Rational, TilingError> {
    enumerated_weight_sum(r, cap, |d| domino_weight(d, w))
}
