use std::collections::BTreeMap;

use cminor_algebra::{LaurentPoly, Matrix, Monomial, Rational};
use cminor_minors::central_minor;
use cminor_regions::Point;
use num_traits::{One, Zero};

use crate::domino::Domino;
use crate::TilingError;

/// All central minors `CM_{x,y}(M)` for `0 <= x < 2n`, `0 <= y <= n`.
#[derive(Clone, Debug)]
pub struct CentralTable {
    n: usize,
    values: Vec<Rational>,
}

impl CentralTable {
    pub fn new(m: &Matrix) -> Result<Self, TilingError> {
        let n = m.rows();
        if !m.is_square() || n == 0 {
            return Err(TilingError::BadMatrix(format!("{}x{}", m.rows(), m.cols())));
        }
        let mut values = Vec::with_capacity(2 * n * (n + 1));
        for x in 0..2 * n as i64 {
            for y in 0..=n {
                values.push(central_minor(m, x, y).map_err(|e| TilingError::BadMatrix(e.to_string()))?);
            }
        }
        Ok(CentralTable { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `v_{x,y}`: the central minor for `0 <= y <= n` (x taken mod 2n), 1 elsewhere.
    pub fn v(&self, (x, y): Point) -> Rational {
        let n = self.n as i64;
        if !(0..=n).contains(&y) {
            return Rational::one();
        }
        let xr = x.rem_euclid(2 * n) as usize;
        self.values[xr * (self.n + 1) + y as usize].clone()
    }
}

/// Where the point weights `v_{x,y}` come from.
#[derive(Clone, Debug)]
pub enum WeightMap {
    /// `v_{x,y} = CM_{x mod 2n, y}(M)` inside the strip `0 <= y <= n`, 1 outside.
    Matrix(CentralTable),
    /// Explicit values with a default for unlisted points, optionally tied to a strip height.
    Table { values: BTreeMap<Point, Rational>, default: Rational, strip: Option<i64> },
    /// Every point is its own variable.
    Symbolic { strip: Option<i64> },
}

impl WeightMap {
    pub fn from_matrix(m: &Matrix) -> Result<Self, TilingError> {
        Ok(WeightMap::Matrix(CentralTable::new(m)?))
    }

    pub fn ones() -> Self {
        WeightMap::Table { values: BTreeMap::new(), default: Rational::one(), strip: None }
    }

    pub fn table(values: BTreeMap<Point, Rational>) -> Self {
        WeightMap::Table { values, default: Rational::one(), strip: None }
    }

    /// Height of the strip the regions live in; decides the covering rule on `y = n`.
    pub fn strip(&self) -> Option<i64> {
        match self {
            WeightMap::Matrix(t) => Some(t.n as i64),
            WeightMap::Table { strip, .. } | WeightMap::Symbolic { strip } => *strip,
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, WeightMap::Symbolic { .. })
    }

    /// Numeric `v_p`; `None` in symbolic mode.
    pub fn value(&self, p: Point) -> Option<Rational> {
        match self {
            WeightMap::Matrix(t) => Some(t.v(p)),
            WeightMap::Table { values, default, .. } => Some(values.get(&p).unwrap_or(default).clone()),
            WeightMap::Symbolic { .. } => None,
        }
    }
}

/// `1 / (v_p v_q)` for the long-side midpoints `p, q` of `d`.
pub fn domino_weight(d: Domino, w: &WeightMap) -> Result<Rational, TilingError> {
    let (p, q) = d.long_side_midpoints();
    let (vp, vq) = match (w.value(p), w.value(q)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(TilingError::SymbolicWeights),
    };
    for (pt, v) in [(p, &vp), (q, &vq)] {
        if v.is_zero() {
            return Err(TilingError::GenericityViolation(pt));
        }
    }
    Ok((vp * vq).recip())
}

/// The monomial `v_p^{-1} v_q^{-1}` of `d`.
pub fn domino_monomial(d: Domino) -> LaurentPoly {
    let (p, q) = d.long_side_midpoints();
    let mut m = Monomial::new();
    *m.entry(p).or_insert(0) -= 1;
    *m.entry(q).or_insert(0) -= 1;
    LaurentPoly::term(m, Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use cminor_algebra::{frac, int};
    use cminor_regions::Cell;

    fn sample(n: usize) -> Matrix {
        Matrix::from_fn(n, n, |i, j| frac((3 * i + 7 * j + 1) as i64 % 11 - 5, (i + 2 * j) as i64 % 4 + 1))
    }

    #[test]
    fn ones_give_unit_weights() {
        let d = Domino::new(Cell::new(0, 0), Cell::new(1, 0)).unwrap();
        assert_eq!(domino_weight(d, &WeightMap::ones()).unwrap(), int(1));
    }

    #[test]
    fn bottom_row_domino_sees_the_empty_minor() {
        let m = sample(5);
        let w = WeightMap::from_matrix(&m).unwrap();
        let d = Domino::new(Cell::new(-1, 0), Cell::new(0, 0)).unwrap();
        let cm01 = central_minor(&m, 0, 1).unwrap();
        assert_eq!(w.value((0, 0)).unwrap(), int(1));
        assert_eq!(domino_weight(d, &w).unwrap(), cm01.recip());
    }

    #[test]
    fn matrix_mode_is_periodic_and_one_outside_the_strip() {
        let m = sample(4);
        let w = WeightMap::from_matrix(&m).unwrap();
        assert_eq!(w.value((3, 2)), w.value((11, 2)));
        assert_eq!(w.value((-5, 2)), w.value((3, 2)));
        assert_eq!(w.value((2, -1)).unwrap(), int(1));
        assert_eq!(w.value((2, 5)).unwrap(), int(1));
    }

    #[test]
    fn symbolic_monomial() {
        let d = Domino::new(Cell::new(0, 0), Cell::new(0, 1)).unwrap();
        let mut m = Monomial::new();
        m.insert((0, 1), -1);
        m.insert((1, 1), -1);
        assert_eq!(domino_monomial(d), LaurentPoly::term(m, int(1)));
    }

    #[test]
    fn zero_weight_is_reported() {
        let mut vals = BTreeMap::new();
        vals.insert((1, 0), int(0));
        let d = Domino::new(Cell::new(0, 0), Cell::new(1, 0)).unwrap();
        assert_eq!(domino_weight(d, &WeightMap::table(vals)), Err(TilingError::GenericityViolation((1, 0))));
    }
}
