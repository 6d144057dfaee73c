use std::collections::BTreeMap;
use std::time::Instant;

use cminor_algebra::{frac, laurent_eval, Rational};
use cminor_regions::Region;
use cminor_tilings::{
    enumerated_weight_sum_map, tiling_polynomial_symbolic, tiling_polynomial_value, weight_sum, WeightMap,
    ORACLE_CELL_CAP, SYMBOLIC_TILING_CAP,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::condense::random_subregion;
use crate::report::VerificationReport;
use crate::VerifyError;

/// Nonzero weights `±p/q` on every corner of the region.
fn random_weights(rng: &mut ChaCha8Rng, r: &Region) -> WeightMap {
    let mut vals = BTreeMap::new();
    for c in r.cells() {
        for p in c.corners() {
            vals.entry(p).or_insert_with(|| {
                let num = rng.gen_range(1..=30) * if rng.gen_bool(0.5) { -1 } else { 1 };
                frac(num, rng.gen_range(1..=9))
            });
        }
    }
    WeightMap::table(vals)
}

/// Profile DP against brute-force enumeration on random sub-regions of `AD^4`.
pub fn oracle_equivalence(rng: &mut ChaCha8Rng, count: usize) -> Result<Vec<VerificationReport>, VerifyError> {
    (0..count)
        .map(|_| {
            let t = Instant::now();
            let keep = rng.gen_range(0.5..1.0);
            let r = random_subregion(rng, keep);
            let w = random_weights(rng, &r);
            let lhs = weight_sum(&r, &w)?;
            let rhs = enumerated_weight_sum_map(&r, &w, ORACLE_CELL_CAP)?;
            Ok(VerificationReport::new("oracle", format!("cells={}", r.len()), lhs, rhs, t).with_region(r.len(), None))
        })
        .collect()
}

/// Largest region used by [`symbolic_consistency`].
pub const SYMBOLIC_CELL_LIMIT: usize = 30;

/// Symbolic `P(R)` evaluated at random weights against the numeric `P(R)`, on regions of at
/// most 30 cells.
pub fn symbolic_consistency(rng: &mut ChaCha8Rng, count: usize) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let t = Instant::now();
        let keep = rng.gen_range(0.3..0.75);
        let r = random_subregion(rng, keep);
        if r.len() > SYMBOLIC_CELL_LIMIT {
            continue;
        }
        let w = random_weights(rng, &r);
        let poly = tiling_polynomial_symbolic(&r, None, SYMBOLIC_TILING_CAP)?;
        let lhs = laurent_eval(&poly, |p| w.value(p).unwrap_or_else(|| Rational::from_integer(1.into())))
            .map_err(|e| VerifyError::BadCase(e.to_string()))?;
        let rhs = tiling_polynomial_value(&r, &w)?;
        let case = format!("cells={} terms={}", r.len(), poly.len());
        out.push(VerificationReport::new("symbolic", case, lhs, rhs, t).with_region(r.len(), None));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::rng;

    #[test]
    fn small_batches_agree() {
        let mut r = rng(8);
        assert!(oracle_equivalence(&mut r, 20).unwrap().iter().all(|x| x.equal));
        let sym = symbolic_consistency(&mut r, 20).unwrap();
        assert!(sym.iter().all(|x| x.equal && x.cells.unwrap() <= SYMBOLIC_CELL_LIMIT));
    }
}
