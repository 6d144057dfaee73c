use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use cminor_algebra::{LaurentPoly, Rational};
use cminor_regions::{Cell, Region};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::TilingError;

/// Values the profile DP can sum and multiply.
pub trait DpValue: Clone {
    /// What placing one domino does to a partial sum.
    type Step;
    fn dp_zero() -> Self;
    fn dp_one() -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn apply(&self, step: &Self::Step) -> Self;
}

impl DpValue for Rational {
    type Step = Rational;
    fn dp_zero() -> Self {
        Zero::zero()
    }
    fn dp_one() -> Self {
        One::one()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn apply(&self, step: &Self) -> Self {
        self * step
    }
}

impl DpValue for BigUint {
    type Step = BigUint;
    fn dp_zero() -> Self {
        Zero::zero()
    }
    fn dp_one() -> Self {
        One::one()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn apply(&self, step: &Self) -> Self {
        self * step
    }
}

impl DpValue for LaurentPoly {
    type Step = LaurentPoly;
    fn dp_zero() -> Self {
        LaurentPoly::zero()
    }
    fn dp_one() -> Self {
        LaurentPoly::one()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in other.terms() {
            self.add_term(m.clone(), c.clone());
        }
    }
    fn apply(&self, step: &Self) -> Self {
        self * step
    }
}

/// Widest frontier the bitmask profile supports.
pub const MAX_FRONTIER: usize = 63;

/// Integer partial sums kept over a fixed common denominator: a step multiplies by `mul`
/// and divides by `div`, which the caller guarantees to be exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scaled(pub BigInt);

/// `None` stands for one.
#[derive(Clone, Debug)]
pub struct ScaledStep {
    pub mul: Option<BigInt>,
    pub div: Option<BigInt>,
}

impl ScaledStep {
    pub fn new(mul: BigInt, div: BigInt) -> Self {
        ScaledStep { mul: (!mul.is_one()).then_some(mul), div: (!div.is_one()).then_some(div) }
    }
}

impl DpValue for Scaled {
    type Step = ScaledStep;
    fn dp_zero() -> Self {
        Scaled(BigInt::zero())
    }
    fn dp_one() -> Self {
        Scaled(BigInt::one())
    }
    fn add_assign_ref(&mut self, other: &Self) {
        self.0 += &other.0;
    }
    fn apply(&self, step: &ScaledStep) -> Self {
        let prod = match &step.mul {
            Some(m) => &self.0 * m,
            None => self.0.clone(),
        };
        match &step.div {
            Some(d) => {
                let (q, r) = prod.div_rem(d);
                debug_assert!(r.is_zero(), "inexact step");
                Scaled(q)
            }
            None => Scaled(prod),
        }
    }
}

/// Sum over all domino tilings of `r` of the product of `edge(a, b)` over its dominoes.
///
/// `edge` is called once for every pair of edge-adjacent cells `a < b` of `r`. The sweep runs
/// along the longer side of the bounding box with a bitmask frontier across the shorter one.
/// The empty region sums to one.
pub fn profile_sum<T: DpValue>(
    r: &Region,
    edge: impl FnMut(Cell, Cell) -> Result<T::Step, TilingError>,
) -> Result<T, TilingError> {
    profile_sum_from(r, T::dp_one(), edge)
}

/// [`profile_sum`] with the empty partial tiling valued `start` instead of one.
pub fn profile_sum_from<T: DpValue>(
    r: &Region,
    start: T,
    mut edge: impl FnMut(Cell, Cell) -> Result<T::Step, TilingError>,
) -> Result<T, TilingError> {
    let Some((x0, y0, x1, y1)) = r.bounds() else {
        return Ok(start);
    };
    if r.len() % 2 == 1 {
        return Ok(T::dp_zero());
    }
    // major axis = the one swept; minor axis = across the frontier
    let by_columns = (x1 - x0) >= (y1 - y0);
    let (maj0, maj1, min0, min1) = if by_columns { (x0, x1, y0, y1) } else { (y0, y1, x0, x1) };
    let height = (min1 - min0 + 1) as usize;
    if height > MAX_FRONTIER {
        return Err(TilingError::FrontierTooWide(height));
    }
    let cell_at = |maj: i64, min: i64| if by_columns { Cell::new(maj, min) } else { Cell::new(min, maj) };

    // per cell in sweep order: weight of the domino to the next major / next minor neighbour
    let mut steps: Vec<(usize, Option<T::Step>, Option<T::Step>)> = Vec::with_capacity(r.len());
    let mut order: Vec<Cell> = r.cells().iter().copied().collect();
    if !by_columns {
        order.sort_by_key(|c| (c.y, c.x));
    }
    for c in order {
        let (maj, min) = if by_columns { (c.x, c.y) } else { (c.y, c.x) };
        debug_assert!((maj0..=maj1).contains(&maj));
        let along = cell_at(maj + 1, min);
        let across = cell_at(maj, min + 1);
        let wa = if r.contains(along) { Some(edge(c, along)?) } else { None };
        let wc = if r.contains(across) { Some(edge(c, across)?) } else { None };
        steps.push(((min - min0) as usize, wa, wc));
    }

    let mut cur: HashMap<u64, T> = HashMap::new();
    cur.insert(0, start);
    let mut next: HashMap<u64, T> = HashMap::new();
    for (i, wa, wc) in &steps {
        let bit = 1u64 << i;
        next.clear();
        for (mask, val) in cur.drain() {
            if mask & bit != 0 {
                merge(&mut next, mask & !bit, val);
                continue;
            }
            if let Some(w) = wa {
                merge(&mut next, mask | bit, val.apply(w));
            }
            if let Some(w) = wc {
                if mask & (bit << 1) == 0 {
                    merge(&mut next, mask | (bit << 1), val.apply(w));
                }
            }
        }
        std::mem::swap(&mut cur, &mut next);
        if cur.is_empty() {
            return Ok(T::dp_zero());
        }
    }
    Ok(cur.remove(&0).unwrap_or_else(T::dp_zero))
}

fn merge<T: DpValue>(map: &mut HashMap<u64, T>, key: u64, val: T) {
    match map.entry(key) {
        Entry::Occupied(mut e) => e.get_mut().add_assign_ref(&val),
        Entry::Vacant(e) => {
            e.insert(val);
        }
    }
}

/// Number of domino tilings of `r`.
pub fn count_tilings(r: &Region) -> BigUint {
    profile_sum::<BigUint>(r, |_, _| Ok(BigUint::one())).expect("unit weights cannot fail")
}

/// Weight sum with explicit per-domino weights keyed by the cell pair `(a, b)`, `a < b`;
/// pairs missing from the table weigh one.
pub fn weighted_by_table(r: &Region, table: &BTreeMap<(Cell, Cell), Rational>) -> Result<Rational, TilingError> {
    profile_sum::<Rational>(r, |a, b| Ok(table.get(&(a, b)).cloned().unwrap_or_else(Rational::one)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cminor_regions::build_aztec_diamond;

    fn block(w: i64, h: i64) -> Region {
        Region::from_cells((0..w).flat_map(|x| (0..h).map(move |y| Cell::new(x, y)))).unwrap()
    }

    #[test]
    fn rectangle_counts() {
        // 2xn strips are Fibonacci; 4x4 has 36, 3x4 has 11, 8x8 has 12988816
        assert_eq!(count_tilings(&block(2, 10)), BigUint::from(89u32));
        assert_eq!(count_tilings(&block(4, 4)), BigUint::from(36u32));
        assert_eq!(count_tilings(&block(3, 4)), BigUint::from(11u32));
        assert_eq!(count_tilings(&block(4, 3)), BigUint::from(11u32));
        assert_eq!(count_tilings(&block(8, 8)), BigUint::from(12988816u32));
    }

    #[test]
    fn aztec_diamond_counts() {
        for h in 0..=8u64 {
            assert_eq!(count_tilings(&build_aztec_diamond(0, 0, h)), BigUint::one() << (h * (h + 1) / 2));
        }
    }

    #[test]
    fn odd_and_empty_regions() {
        assert!(count_tilings(&block(3, 3)).is_zero());
        assert_eq!(count_tilings(&Region::empty_at((0, 0))), BigUint::one());
    }

    #[test]
    fn disconnected_region_multiplies() {
        let r = block(2, 2).union(&block(2, 3).translate(5, 1));
        assert_eq!(count_tilings(&r), BigUint::from(6u32));
    }
}
