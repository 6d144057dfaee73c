use std::time::Instant;

use cminor_algebra::Rational;
use cminor_minors::{
    central_offset, contiguous_minor, normalize_sm_spec, offset_preimage, sm_minor, spec_offset, SemiContigSpec, Side,
    SignedOffset,
};
use cminor_regions::{build_q, build_tad, QParams, QType, Region};
use cminor_tilings::{count_tilings, tiling_polynomial_value, WeightMap};
use rand_chacha::ChaCha8Rng;

use crate::report::VerificationReport;
use crate::sample::{generic_matrix, Generic};
use crate::VerifyError;

/// Regions up to this many cells also get their tiling count in the report.
const COUNT_CELL_LIMIT: usize = 80;

/// The worked example `(n, a, b, y) = (13, 1, 5, 2)`, whose region is `TAD_{2,2}^{2,13}`.
pub const WORKED_EXAMPLE: (usize, i64, i64, usize) = (13, 1, 5, 2);

fn region_stats(r: &Region) -> (usize, Option<String>) {
    let count = (r.len() <= COUNT_CELL_LIMIT).then(|| count_tilings(r).to_string());
    (r.len(), count)
}

fn p_value(r: &Region, w: &WeightMap) -> Result<Rational, VerifyError> {
    Ok(tiling_polynomial_value(r, w)?)
}

/// `CON_{a,b,y}(M)` against `P(TAD_{x-h,y}^{|h|,n})`.
pub fn verify_theorem1(g: &Generic, a: i64, b: i64, y: usize) -> Result<VerificationReport, VerifyError> {
    let t = Instant::now();
    let n = g.n();
    let lhs = contiguous_minor(&g.matrix, a, b, y)?;
    let (x, h) = central_offset(a, b, y, n);
    let region = build_tad(x - h.value, y as i64, h.value.unsigned_abs(), n as i64);
    let rhs = p_value(&region, &g.weights)?;
    let (cells, count) = region_stats(&region);
    let case = format!("n={n} a={a} b={b} y={y} x={x} h={h}");
    let mut rep = VerificationReport::new("thm1", case, lhs, rhs, t).with_region(cells, count);
    if (n, a, b, y) == WORKED_EXAMPLE {
        rep = rep.with_label("worked example CON_{1,5,2} = P(TAD_{2,2}^{2,13})");
    }
    Ok(rep)
}

/// Every `(a, b, y)` with `0 <= y <= n/2`.
pub fn contiguous_sweep(g: &Generic) -> Result<Vec<VerificationReport>, VerifyError> {
    let n = g.n() as i64;
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            for y in 0..=(n / 2) as usize {
                out.push(verify_theorem1(g, a, b, y)?);
            }
        }
    }
    Ok(out)
}

/// The Q-region parameters attached to a spec, or `None` for a spec with no rows.
pub fn q_params(spec: &SemiContigSpec) -> Result<Option<QParams>, VerifyError> {
    let norm = normalize_sm_spec(spec)?;
    if norm.k() == 0 {
        return Ok(None);
    }
    let (x, h) = spec_offset(spec)?;
    Ok(Some(QParams {
        x,
        h,
        ks: norm.ks.iter().map(|&k| k as u64).collect(),
        ts: norm.ts.iter().map(|&t| t as u64).collect(),
        n: norm.n as i64,
        mirrored: norm.side == Side::SmBar,
    }))
}

/// `SM` or `SMbar` against the tiling polynomial of its (mirrored) Q-region.
pub fn verify_semicontig(g: &Generic, spec: &SemiContigSpec) -> Result<VerificationReport, VerifyError> {
    let t = Instant::now();
    if spec.n != g.n() {
        return Err(VerifyError::BadCase(format!("spec for n={} on a {}x{} matrix", spec.n, g.n(), g.n())));
    }
    let suite = match spec.side {
        Side::Sm => "thm2",
        Side::SmBar => "thm3",
    };
    let lhs = sm_minor(&g.matrix, spec)?;
    let base = format!("n={} a={} b={} ks={:?} ts={:?}", spec.n, spec.a, spec.b, spec.ks, spec.ts);
    let Some(q) = q_params(spec)? else {
        // no rows: the minor is 1, the empty product
        return Ok(VerificationReport::new(suite, base, lhs, Rational::from_integer(1.into()), t));
    };
    let ty = q.q_type()?;
    let region = build_q(&q)?;
    let rhs = p_value(&region, &g.weights)?;
    let (cells, count) = region_stats(&region);
    let case = format!("{base} x={} h={} type={}", q.x, q.h, ty.label());
    Ok(VerificationReport::new(suite, case, lhs, rhs, t).with_region(cells, count))
}

pub fn verify_theorem2(g: &Generic, spec: &SemiContigSpec) -> Result<VerificationReport, VerifyError> {
    if spec.side != Side::Sm {
        return Err(VerifyError::BadCase("expected an SM spec".into()));
    }
    verify_semicontig(g, spec)
}

pub fn verify_theorem3(g: &Generic, spec: &SemiContigSpec) -> Result<VerificationReport, VerifyError> {
    if spec.side != Side::SmBar {
        return Err(VerifyError::BadCase("expected an SMbar spec".into()));
    }
    verify_semicontig(g, spec)
}

/// Block-size and gap bounds for semicontiguous sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepBounds {
    pub s_min: usize,
    pub s_max: usize,
    pub k_max: usize,
    pub t_max: usize,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds { s_min: 2, s_max: 2, k_max: 3, t_max: 3 }
    }
}

fn tuples(len: usize, max: usize) -> Vec<Vec<usize>> {
    (0..len).fold(vec![vec![]], |acc, _| {
        acc.into_iter().flat_map(|v| (1..=max).map(move |x| [v.clone(), vec![x]].concat())).collect()
    })
}

/// All specs with positive blocks and gaps within `bounds`, over every `(a, b)`, with `k + t <= n`.
pub fn semicontig_specs(n: usize, side: Side, bounds: SweepBounds) -> Vec<SemiContigSpec> {
    let mut out = Vec::new();
    for s in bounds.s_min.max(1)..=bounds.s_max {
        for ks in tuples(s, bounds.k_max) {
            for ts in tuples(s - 1, bounds.t_max) {
                if ks.iter().sum::<usize>() + ts.iter().sum::<usize>() > n {
                    continue;
                }
                for a in 1..=n as i64 {
                    for b in 1..=n as i64 {
                        out.push(SemiContigSpec { a, b, ks: ks.clone(), ts: ts.clone(), n, side });
                    }
                }
            }
        }
    }
    out
}

/// A region given by its own parameters, checked on some spec that produces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceCase {
    pub label: &'static str,
    pub params: QParams,
}

fn reference(label: &'static str, x: i64, h: i64, ks: &[u64], ts: &[u64], n: i64, mirrored: bool) -> ReferenceCase {
    ReferenceCase {
        label,
        params: QParams { x, h: SignedOffset::new(h), ks: ks.to_vec(), ts: ts.to_vec(), n, mirrored },
    }
}

/// The illustrated parameter sets, one region per Q-type and L-sum shape, plus mirrors. Where the
/// stated `x` has the parity no spec can reach, the odd `n` lets `x + n` stand in; that region is
/// the same one moved `n` columns.
pub fn reference_cases() -> Vec<ReferenceCase> {
    vec![
        reference("type 1, s=3 k=(2,2,2) t=(1,2) x=15 h=12 (at x=40)", 40, 12, &[2, 2, 2], &[1, 2], 25, false),
        reference("type 1, s=2 k=(4,1) t=(1) x=8 h=9", 8, 9, &[4, 1], &[1], 19, false),
        reference("type 2 first inside, s=3 k=(3,4,4) t=(2,1) x=7 h=4", 7, 4, &[3, 4, 4], &[2, 1], 14, false),
        reference("type 2 overlap, s=3 k=(2,3,2) t=(3,4) x=15 h=9 (at x=34)", 34, 9, &[2, 3, 2], &[3, 4], 19, false),
        reference("type 2 second inside, s=3 k=(4,2,1) t=(2,4) x=16 h=11", 16, 11, &[4, 2, 1], &[2, 4], 23, false),
        reference("type 3, s=3 k=(3,1,2) t=(2,1) x=0 h=-2", 0, -2, &[3, 1, 2], &[2, 1], 9, false),
        reference("type 3, s=2 k=(2,4) t=(1) x=1 h=-3", 1, -3, &[2, 4], &[1], 8, false),
        reference("mirrored, s=2 k=(3,3) t=(2) x=13 h=11", 13, 11, &[3, 3], &[2], 23, true),
        reference("mirrored, s=3 k=(4,4,3) t=(2,1) x=7 h=4 (at x=22)", 22, 4, &[4, 4, 3], &[2, 1], 15, true),
        reference("mirrored, s=3 k=(2,2,2) t=(1,2) x=4 h=-1 (at x=13)", 13, -1, &[2, 2, 2], &[1, 2], 9, true),
    ]
}

/// Finds a spec whose region is the reference region and verifies it on a fresh generic matrix.
pub fn verify_reference_case(rng: &mut ChaCha8Rng, case: &ReferenceCase) -> Result<VerificationReport, VerifyError> {
    let p = &case.params;
    let n = p.n as usize;
    let ks: Vec<usize> = p.ks.iter().map(|&k| k as usize).collect();
    let ts: Vec<usize> = p.ts.iter().map(|&t| t as usize).collect();
    let (k, k1) = (ks.iter().sum::<usize>(), ks[0]);
    let (a1, b) = offset_preimage(p.x, p.h, k1, n)
        .ok_or_else(|| VerifyError::BadCase(format!("no spec reaches x={} h={} on n={n}", p.x, p.h)))?;
    let spec = if p.mirrored {
        SemiContigSpec::sm_bar(a1, b, &ks, &ts, n)
    } else {
        SemiContigSpec::sm(a1 - (k - k1) as i64, b, &ks, &ts, n)
    };
    let got = q_params(&spec)?.ok_or_else(|| VerifyError::BadCase("empty spec".into()))?;
    if got.h != p.h || (got.x - p.x).rem_euclid(2 * p.n) != 0 {
        return Err(VerifyError::BadCase(format!("spec reaches x={} h={}, wanted x={} h={}", got.x, got.h, p.x, p.h)));
    }
    let g = generic_matrix(rng, n);
    Ok(verify_semicontig(&g, &spec)?.with_label(case.label))
}

/// Q-types met by a batch of reports, read from their case strings.
pub fn types_seen(reports: &[VerificationReport]) -> std::collections::BTreeSet<String> {
    reports.iter().filter_map(|r| r.case.split("type=").nth(1).map(str::to_string)).collect()
}

/// Every label a Q-type can carry.
pub fn all_type_labels() -> Vec<String> {
    use cminor_regions::LSumShape;
    [
        QType::Type1,
        QType::Type2(LSumShape::Overlap),
        QType::Type2(LSumShape::FirstInside),
        QType::Type2(LSumShape::SecondInside),
        QType::Type3,
    ]
    .iter()
    .map(|t| t.label())
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::rng;

    #[test]
    fn worked_example_is_labelled_and_equal() {
        let g = generic_matrix(&mut rng(1), 13);
        let r = verify_theorem1(&g, 1, 5, 2).unwrap();
        assert!(r.equal && r.label.is_some());
        assert!(r.case.contains("x=4 h=2"));
    }

    #[test]
    fn empty_minor_is_one_on_both_sides() {
        let g = generic_matrix(&mut rng(2), 7);
        for a in 1..=7 {
            for b in 1..=7 {
                let r = verify_theorem1(&g, a, b, 0).unwrap();
                assert!(r.equal && r.lhs == Rational::from_integer(1.into()), "{}", r.case);
            }
        }
    }

    #[test]
    fn small_sweeps_pass() {
        let g = generic_matrix(&mut rng(3), 6);
        assert!(contiguous_sweep(&g).unwrap().iter().all(|r| r.equal));
        let bounds = SweepBounds { s_min: 2, s_max: 2, k_max: 2, t_max: 1 };
        for side in [Side::Sm, Side::SmBar] {
            let specs = semicontig_specs(6, side, bounds);
            assert_eq!(specs.len(), 4 * 36);
            for s in &specs {
                assert!(verify_semicontig(&g, s).unwrap().equal, "{s:?}");
            }
        }
    }

    #[test]
    fn single_block_reduces_to_contiguous() {
        let g = generic_matrix(&mut rng(4), 8);
        for (a, b) in [(1, 1), (3, 7), (8, 2)] {
            let r2 = verify_theorem2(&g, &SemiContigSpec::sm(a, b, &[3], &[], 8)).unwrap();
            let r1 = verify_theorem1(&g, a, b, 3).unwrap();
            assert_eq!((r1.lhs.clone(), r1.rhs.clone()), (r2.lhs.clone(), r2.rhs.clone()));
            assert!(r2.case.contains("type=tad"));
        }
    }

    #[test]
    fn side_mismatch_is_rejected() {
        let g = generic_matrix(&mut rng(5), 6);
        assert!(verify_theorem2(&g, &SemiContigSpec::sm_bar(1, 1, &[1, 1], &[1], 6)).is_err());
        assert!(verify_theorem3(&g, &SemiContigSpec::sm(1, 1, &[1, 1], &[1], 6)).is_err());
    }

    #[test]
    fn reference_cases_are_reachable() {
        let mut r = rng(6);
        let case = &reference_cases()[6];
        let rep = verify_reference_case(&mut r, case).unwrap();
        assert!(rep.equal && rep.case.contains("type=type3"));
    }
}
