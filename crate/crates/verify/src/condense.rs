use std::collections::BTreeSet;
use std::time::Instant;

use cminor_algebra::frac;
use cminor_minors::{dodgson_check, jaw_move_check, recurrence_check, SemiContigSpec};
use cminor_regions::{build_aztec_diamond, Cell, Region};
use cminor_tilings::{enumerate_tilings, kuo_check, DualGraph, KuoVariant, Tiling, ORACLE_CELL_CAP};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::report::VerificationReport;
use crate::sample::{random_matrix, rng};
use crate::VerifyError;

/// `k` labels from `lo..=hi` in increasing order.
fn ccw_subset(rng: &mut ChaCha8Rng, lo: usize, hi: usize, k: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (lo..=hi).collect();
    pool.shuffle(rng);
    pool.truncate(k);
    pool.sort_unstable();
    pool
}

/// Random 5x5 blocks of a 10x10 matrix: rows `1..=5`, columns `10..=6`, so the block is a
/// circular pair. Rows `a, b` and columns `c, d` are removed, `a, b, d, c` counter-clockwise.
pub fn dodgson_suite(rng: &mut ChaCha8Rng, count: usize) -> Result<Vec<VerificationReport>, VerifyError> {
    let rows: Vec<usize> = (1..=5).collect();
    let cols: Vec<usize> = (6..=10).rev().collect();
    (0..count)
        .map(|_| {
            let t = Instant::now();
            let omega = random_matrix(rng, 10, 10);
            let ab = ccw_subset(rng, 1, 5, 2);
            let dc = ccw_subset(rng, 6, 10, 2);
            let (a, b, d, c) = (ab[0], ab[1], dc[0], dc[1]);
            let chk = dodgson_check(&omega, &rows, &cols, a, b, c, d)?;
            Ok(VerificationReport::new("dodgson", format!("5x5 a={a} b={b} c={c} d={d}"), chk.lhs, chk.rhs, t))
        })
        .collect()
}

/// Random 4x5 blocks of a 10x10 matrix: rows among `1..=5`, columns `6..=10`.
pub fn jaw_suite(rng: &mut ChaCha8Rng, count: usize) -> Result<Vec<VerificationReport>, VerifyError> {
    (0..count)
        .map(|_| {
            let t = Instant::now();
            let omega = random_matrix(rng, 10, 10);
            let rows = ccw_subset(rng, 1, 5, 4);
            let cols: Vec<usize> = (6..=10).rev().collect();
            let g = rows[rng.gen_range(0..4)];
            let (d, e, f) = (cols[0], cols[rng.gen_range(1..4)], cols[4]);
            let chk = jaw_move_check(&omega, &rows, &cols, d, e, f, g)?;
            let case = format!("rows={rows:?} cols={cols:?} d={d} e={e} f={f} g={g}");
            Ok(VerificationReport::new("jaw", case, chk.lhs, chk.rhs, t))
        })
        .collect()
}

/// Six-term recurrence instances with `s` in `2..=3`, blocks and gaps in `1..=3`, `n` in `8..=12`.
pub fn recurrence_suite(rng: &mut ChaCha8Rng, count: usize) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let t = Instant::now();
        let n = rng.gen_range(8..=12);
        let s = rng.gen_range(2..=3);
        let ks: Vec<usize> = (0..s).map(|_| rng.gen_range(1..=3)).collect();
        let ts: Vec<usize> = (1..s).map(|_| rng.gen_range(1..=3)).collect();
        if ks.iter().sum::<usize>() + ts.iter().sum::<usize>() >= n {
            continue;
        }
        let (a, b) = (rng.gen_range(1..=n as i64), rng.gen_range(1..=n as i64));
        let m = random_matrix(rng, n, n);
        let spec = SemiContigSpec::sm(a, b, &ks, &ts, n);
        let chk = recurrence_check(&m, &spec)?;
        let case = format!("n={n} a={a} b={b} ks={ks:?} ts={ts:?}");
        out.push(VerificationReport::new("recurrence", case, chk.lhs, chk.rhs, t));
    }
    Ok(out)
}

/// A sub-region of `AD^4`: usually the cells of a random subset of a random tiling's dominoes
/// (so it stays tileable), sometimes an arbitrary cell subset.
pub fn random_subregion(rng: &mut ChaCha8Rng, keep: f64) -> Region {
    thread_local! {
        static TILINGS: Vec<Tiling> = enumerate_tilings(&build_aztec_diamond(0, 0, 4), ORACLE_CELL_CAP).expect("AD^4 is small");
    }
    if rng.gen_bool(0.2) {
        let base = build_aztec_diamond(0, 0, 4);
        let cells: Vec<Cell> = base.cells().iter().copied().filter(|_| rng.gen_bool(keep)).collect();
        return Region::new(cells, (0, 0));
    }
    TILINGS.with(|all| {
        let t = &all[rng.gen_range(0..all.len())];
        let cells: Vec<Cell> =
            t.iter().filter(|_| rng.gen_bool(keep)).flat_map(|d| [d.cells().0, d.cells().1]).collect();
        Region::new(cells, (0, 0))
    })
}

/// Four distinct vertices in cyclic order on one face whose classes fit the variant.
fn pick_quad(rng: &mut ChaCha8Rng, g: &DualGraph, variant: KuoVariant) -> Option<[Cell; 4]> {
    let faces: Vec<Vec<Cell>> = g.faces().into_iter().filter(|f| f.len() >= 4).collect();
    if faces.is_empty() {
        return None;
    }
    for _ in 0..200 {
        let f = &faces[rng.gen_range(0..faces.len())];
        let mut pos: Vec<usize> = (0..f.len()).collect();
        pos.shuffle(rng);
        pos.truncate(4);
        pos.sort_unstable();
        let quad = [f[pos[0]], f[pos[1]], f[pos[2]], f[pos[3]]];
        let distinct: BTreeSet<Cell> = quad.iter().copied().collect();
        if distinct.len() == 4 && variant.fits(quad.map(|c| g.in_first_class(c)), g.class_sizes()) {
            return Some(quad);
        }
    }
    None
}

/// Draws before [`kuo_suite`] gives up on a variant.
const KUO_DRAW_LIMIT: usize = 100_000;

/// Kuo condensation on randomly weighted dual graphs of `AD^4` sub-regions.
pub fn kuo_suite(
    rng: &mut ChaCha8Rng,
    variant: KuoVariant,
    count: usize,
) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut out = Vec::with_capacity(count);
    let mut draws = 0;
    while out.len() < count {
        draws += 1;
        if draws > KUO_DRAW_LIMIT {
            return Err(VerifyError::BadCase(format!("no {} configuration found", variant.name())));
        }
        let t = Instant::now();
        let region = random_subregion(rng, 0.85);
        let g = DualGraph::new(region, |_| {
            let p = rng.gen_range(1..=40) * if rng.gen_bool(0.3) { -1 } else { 1 };
            frac(p, rng.gen_range(1..=9))
        })
        .with_flip(rng.gen_bool(0.5));
        let Some([u, v, w, s]) = pick_quad(rng, &g, variant) else { continue };
        let chk = kuo_check(&g, u, v, w, s, variant)?;
        let pt = |c: Cell| (c.x, c.y);
        let case = format!("cells={} u={:?} v={:?} w={:?} s={:?}", g.region().len(), pt(u), pt(v), pt(w), pt(s));
        let rep = VerificationReport::new(&format!("kuo-{}", variant.name()), case, chk.lhs, chk.rhs, t)
            .with_region(g.region().len(), None);
        out.push(rep);
    }
    Ok(out)
}

/// `count` condensation checks from one seed, dealt round-robin over Dodgson, jaw move,
/// recurrence and the three Kuo variants.
pub fn verify_condensations(seed: u64, count: usize) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut r = rng(seed);
    let share = |i: usize| count / 6 + usize::from(i < count % 6);
    let mut out = dodgson_suite(&mut r, share(0))?;
    out.extend(jaw_suite(&mut r, share(1))?);
    out.extend(recurrence_suite(&mut r, share(2))?);
    for (i, v) in KuoVariant::ALL.into_iter().enumerate() {
        out.extend(kuo_suite(&mut r, v, share(3 + i))?);
    }
    Ok(out)
}
