use cminor_algebra::{LaurentPoly, Rational};
use cminor_regions::{covering_points, covering_points_in_strip, Cell, Point, Region};
use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::domino::Domino;
use crate::dp::{count_tilings, profile_sum, profile_sum_from, Scaled, ScaledStep};
use crate::weights::{domino_monomial, domino_weight, WeightMap};
use crate::TilingError;

/// Default cap on the number of tilings a symbolic polynomial may expand.
pub const SYMBOLIC_TILING_CAP: u64 = 1_000_000;

/// `W(R)`: the weighted tiling sum under numeric weights.
pub fn weight_sum(r: &Region, w: &WeightMap) -> Result<Rational, TilingError> {
    let s = scaled_weight_sum(r, w)?;
    let factors =
        s.exponents.iter().flat_map(|(p, &k)| std::iter::repeat_n(s.parts[p].0.clone(), k as usize)).collect();
    Ok(reduce_over(s.num, factors))
}

/// `W(R)` by plain rational arithmetic; slower, kept as a second route.
pub fn weight_sum_rational(r: &Region, w: &WeightMap) -> Result<Rational, TilingError> {
    profile_sum::<Rational>(r, |a, b| domino_weight(Domino::new(a, b)?, w))
}

/// Most dominoes of one tiling that can have `p` as a long-side midpoint: two when all four
/// cells around `p` are present, at most one otherwise.
fn midpoint_multiplicity(r: &Region, (x, y): Point) -> u32 {
    let present = [(-1, -1), (0, -1), (-1, 0), (0, 0)].map(|(dx, dy)| r.contains(Cell::new(x + dx, y + dy)));
    match present.iter().filter(|&&b| b).count() {
        4 => 2,
        _ if (present[0] && present[1])
            || (present[2] && present[3])
            || (present[0] && present[2])
            || (present[1] && present[3]) =>
        {
            1
        }
        _ => 0,
    }
}

/// `W(R)` without fractions, as an integer over a product of known factors.
///
/// With `v_p = n_p / d_p`, every partial sum is kept multiplied by `E = prod n_p^{c_p}`, where
/// `c_p` bounds how often `p` is a long-side midpoint within one tiling. A domino with midpoints
/// `p, q` multiplies by `d_p d_q` and divides by `n_p n_q`; each partial tiling's term stays an
/// integer, so the division is exact.
pub struct ScaledSum {
    /// `W(R) * E`.
    pub num: BigInt,
    /// `(p, c_p)` for every point with `c_p > 0`.
    pub exponents: BTreeMap<Point, u32>,
    /// `(n_p, d_p)` for every point looked up.
    pub parts: BTreeMap<Point, (BigInt, BigInt)>,
}

impl ScaledSum {
    pub fn scale(&self) -> BigInt {
        self.exponents
            .iter()
            .fold(BigInt::one(), |acc, (p, &k)| acc * num_traits::pow(self.parts[p].0.clone(), k as usize))
    }
}

pub fn scaled_weight_sum(r: &Region, w: &WeightMap) -> Result<ScaledSum, TilingError> {
    let mut parts: BTreeMap<Point, (BigInt, BigInt)> = BTreeMap::new();
    let mut exponents = BTreeMap::new();
    for c in r.cells() {
        for p in c.corners() {
            if parts.contains_key(&p) {
                continue;
            }
            let k = midpoint_multiplicity(r, p);
            if k == 0 {
                continue;
            }
            let v = w.value(p).ok_or(TilingError::SymbolicWeights)?;
            if v.is_zero() {
                return Err(TilingError::GenericityViolation(p));
            }
            parts.insert(p, (v.numer().clone(), v.denom().clone()));
            exponents.insert(p, k);
        }
    }
    let sum = ScaledSum { num: BigInt::zero(), exponents, parts };
    let num = profile_sum_from(r, Scaled(sum.scale()), |a, b| {
        let (p, q) = Domino::new(a, b)?.long_side_midpoints();
        let ((np, dp), (nq, dq)) = (&sum.parts[&p], &sum.parts[&q]);
        Ok(ScaledStep::new(dp * dq, np * nq))
    })?;
    Ok(ScaledSum { num: num.0, ..sum })
}

/// `x / prod(factors)` in lowest terms, cancelling one known factor at a time so that no gcd
/// ever involves two huge operands.
fn reduce_over(mut x: BigInt, factors: Vec<BigInt>) -> Rational {
    if x.is_zero() {
        return Rational::zero();
    }
    let mut den = BigInt::one();
    for mut f in factors {
        let g = (&x % &f).gcd(&f);
        if !g.is_one() {
            x /= &g;
            f /= &g;
        }
        den *= f;
    }
    Rational::new(x, den)
}

/// `W(R)` as a Laurent polynomial in the `v` variables.
pub fn weight_sum_symbolic(r: &Region) -> LaurentPoly {
    profile_sum::<LaurentPoly>(r, |a, b| Ok(domino_monomial(Domino::new(a, b)?)))
        .expect("adjacent cells by construction")
}

/// Points contributing to `F(R)`: the strip rule applies when `w` names a strip height.
pub fn covering_set(r: &Region, strip: Option<i64>) -> Vec<Point> {
    match strip {
        Some(n) => covering_points_in_strip(r, n).into_iter().collect(),
        None => covering_points(r).into_iter().collect(),
    }
}

/// `F(R)`: the product of `v` over the covering points.
pub fn covering_monomial(r: &Region, w: &WeightMap) -> Result<Rational, TilingError> {
    let mut f = Rational::one();
    for p in covering_set(r, w.strip()) {
        f *= w.value(p).ok_or(TilingError::SymbolicWeights)?;
    }
    Ok(f)
}

pub fn covering_monomial_symbolic(r: &Region, strip: Option<i64>) -> LaurentPoly {
    covering_set(r, strip).into_iter().fold(LaurentPoly::one(), |acc, p| &acc * &LaurentPoly::var(p))
}

/// `P(R) = F(R) W(R)`, numeric or symbolic according to the weight map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TilingValue {
    Number(#[serde(with = "cminor_algebra::rational::as_string")] Rational),
    Poly(LaurentPoly),
}

pub fn tiling_polynomial(r: &Region, w: &WeightMap) -> Result<TilingValue, TilingError> {
    match w {
        WeightMap::Symbolic { strip } => {
            tiling_polynomial_symbolic(r, *strip, SYMBOLIC_TILING_CAP).map(TilingValue::Poly)
        }
        _ => tiling_polynomial_value(r, w).map(TilingValue::Number),
    }
}

/// Numeric `P(R)`. An untileable region gives zero without touching `F`.
pub fn tiling_polynomial_value(r: &Region, w: &WeightMap) -> Result<Rational, TilingError> {
    let s = scaled_weight_sum(r, w)?;
    if s.num.is_zero() {
        return Ok(Rational::zero());
    }
    // cancel F's numerators against E exponent by exponent before any big gcd
    let mut exps: BTreeMap<Point, i64> = s.exponents.iter().map(|(&p, &k)| (p, -(k as i64))).collect();
    let mut num = s.num;
    let mut factors = Vec::new();
    for p in covering_set(r, w.strip()) {
        let v = w.value(p).ok_or(TilingError::SymbolicWeights)?;
        if v.is_zero() {
            return Ok(Rational::zero());
        }
        match exps.get_mut(&p) {
            Some(e) if *e < 0 && s.parts[&p].0 == *v.numer() => *e += 1,
            _ => num *= v.numer(),
        }
        factors.push(v.denom().clone());
    }
    for (p, e) in exps {
        for _ in 0..(-e) {
            factors.push(s.parts[&p].0.clone());
        }
    }
    Ok(reduce_over(num, factors))
}

/// Symbolic `P(R)`; refuses regions with more than `cap` tilings.
pub fn tiling_polynomial_symbolic(r: &Region, strip: Option<i64>, cap: u64) -> Result<LaurentPoly, TilingError> {
    let count = count_tilings(r);
    if count > BigUint::from(cap) {
        return Err(TilingError::CapExceeded { what: format!("{count} tilings"), cap });
    }
    Ok(&covering_monomial_symbolic(r, strip) * &weight_sum_symbolic(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cminor_algebra::int;
    use cminor_regions::build_aztec_diamond;

    #[test]
    fn diamond_counts_under_unit_weights() {
        let want = [2u64, 8, 64, 1024, 32768, 2097152];
        for (h, &c) in (1..=6u64).zip(&want) {
            assert_eq!(weight_sum(&build_aztec_diamond(0, 0, h), &WeightMap::ones()).unwrap(), int(c as i64));
        }
    }

    #[test]
    fn empty_region_conventions() {
        let e = Region::empty_at((3, 1));
        let mut vals = BTreeMap::new();
        vals.insert((3, 1), int(7));
        let w = WeightMap::table(vals);
        assert_eq!(weight_sum(&e, &w).unwrap(), int(1));
        assert_eq!(covering_monomial(&e, &w).unwrap(), int(7));
        assert_eq!(tiling_polynomial_value(&e, &w).unwrap(), int(7));
        assert_eq!(tiling_polynomial_symbolic(&e, None, 10).unwrap(), LaurentPoly::var((3, 1)));
    }

    #[test]
    fn order_one_covering_monomial() {
        let mut vals = BTreeMap::new();
        vals.insert((0, 0), int(2));
        for p in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            vals.insert(p, int(3));
        }
        let d = build_aztec_diamond(0, 0, 1);
        assert_eq!(covering_monomial(&d, &WeightMap::table(vals)).unwrap(), int(162));
    }

    #[test]
    fn order_one_polynomial() {
        let d = build_aztec_diamond(0, 0, 1);
        assert_eq!(tiling_polynomial_value(&d, &WeightMap::ones()).unwrap(), int(2));
        let p = tiling_polynomial_symbolic(&d, None, 10).unwrap();
        // F = v00 v10 v-10 v01 v0-1; tilings: two horizontals and two verticals
        assert_eq!(p.len(), 2);
        assert_eq!(p.eval(|_| int(1)).unwrap(), int(2));
    }

    #[test]
    fn symbolic_cap() {
        let d = build_aztec_diamond(0, 0, 3);
        assert!(matches!(tiling_polynomial_symbolic(&d, None, 63), Err(TilingError::CapExceeded { .. })));
        assert!(tiling_polynomial_symbolic(&d, None, 64).is_ok());
    }
}
