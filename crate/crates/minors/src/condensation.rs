use cminor_algebra::{Matrix, Rational};
use serde::Serialize;

use crate::circular::{in_ccw_order, minor_on};
use crate::semicontig::{normalize_sm_spec, sm_minor, SemiContigSpec, Side};
use crate::MinorError;

/// Both sides of an identity, evaluated exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    #[serde(with = "cminor_algebra::rational::as_string")]
    pub lhs: Rational,
    #[serde(with = "cminor_algebra::rational::as_string")]
    pub rhs: Rational,
    pub holds: bool,
}

impl IdentityCheck {
    pub fn new(lhs: Rational, rhs: Rational) -> Self {
        let holds = lhs == rhs;
        IdentityCheck { lhs, rhs, holds }
    }
}

/// Determinant of `omega` on `rows` and `cols` after deleting the listed labels.
fn det_without(
    omega: &Matrix,
    rows: &[usize],
    cols: &[usize],
    drop_rows: &[usize],
    drop_cols: &[usize],
) -> Result<Rational, MinorError> {
    let r: Vec<usize> = rows.iter().copied().filter(|i| !drop_rows.contains(i)).collect();
    let c: Vec<usize> = cols.iter().copied().filter(|j| !drop_cols.contains(j)).collect();
    minor_on(omega, &r, &c)
}

fn check_labels(omega: &Matrix, rows: &[usize], cols: &[usize]) -> Result<(), MinorError> {
    let n = omega.rows();
    let in_range = |v: &[usize]| v.iter().all(|&i| (1..=n).contains(&i));
    if !omega.is_square() || !in_range(rows) || !in_range(cols) {
        return Err(MinorError::BadShape("labels outside the ambient matrix".into()));
    }
    Ok(())
}

/// Dodgson condensation for `M = omega[rows, cols]`: rows `a, b` and columns `c, d` removed,
/// with `a, b, d, c` counter-clockwise around the circle of `omega`'s labels.
pub fn dodgson_check(
    omega: &Matrix,
    rows: &[usize],
    cols: &[usize],
    a: usize,
    b: usize,
    c: usize,
    d: usize,
) -> Result<IdentityCheck, MinorError> {
    check_labels(omega, rows, cols)?;
    if rows.len() != cols.len() || rows.len() < 2 {
        return Err(MinorError::BadShape(format!("{}x{} block", rows.len(), cols.len())));
    }
    if !rows.contains(&a) || !rows.contains(&b) || !cols.contains(&c) || !cols.contains(&d) {
        return Err(MinorError::BadOrder("removed labels must index the block".into()));
    }
    if !in_ccw_order(&[a, b, d, c], omega.rows()) {
        return Err(MinorError::BadOrder(format!("a={a}, b={b}, d={d}, c={c} not counter-clockwise")));
    }
    let m = |dr: &[usize], dc: &[usize]| det_without(omega, rows, cols, dr, dc);
    let lhs = m(&[a], &[c])? * m(&[b], &[d])?;
    let rhs = m(&[], &[])? * m(&[a, b], &[c, d])? + m(&[b], &[c])? * m(&[a], &[d])?;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// Jaw move for a block with one more column than rows: `g` is a row label, `d, e, f` column
/// labels, and `g, f, e, d` run counter-clockwise.
pub fn jaw_move_check(
    omega: &Matrix,
    rows: &[usize],
    cols: &[usize],
    d: usize,
    e: usize,
    f: usize,
    g: usize,
) -> Result<IdentityCheck, MinorError> {
    check_labels(omega, rows, cols)?;
    if cols.len() != rows.len() + 1 || rows.is_empty() {
        return Err(MinorError::BadShape(format!("{}x{} block", rows.len(), cols.len())));
    }
    if !rows.contains(&g) || ![d, e, f].iter().all(|x| cols.contains(x)) {
        return Err(MinorError::BadOrder("removed labels must index the block".into()));
    }
    if !in_ccw_order(&[g, f, e, d], omega.rows()) {
        return Err(MinorError::BadOrder(format!("g={g}, f={f}, e={e}, d={d} not counter-clockwise")));
    }
    let m = |dr: &[usize], dc: &[usize]| det_without(omega, rows, cols, dr, dc);
    let lhs = m(&[], &[e])? * m(&[g], &[d, f])?;
    let rhs = m(&[], &[d])? * m(&[g], &[e, f])? + m(&[], &[f])? * m(&[g], &[d, e])?;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// The six-term recurrence obtained from the jaw move on `M_A^{B + {b+k-k_s+t-1}}`:
///
/// `SM_{a,b}(K;T) SM_{a+1,b+1}(K';T-) = SM_{a,b}(K;T-) SM_{a+1,b+1}(K';T)
///  + SM_{a,b+1}(K'+;T-) SM_{a+1,b}(K-;T)`
///
/// where `K'` lowers `k_1`, `K-` lowers `k_s`, `K'+` lowers `k_1` and raises `k_s`, and `T-`
/// lowers `t_{s-1}`. Every factor is evaluated directly by [`sm_minor`].
pub fn recurrence_check(m: &Matrix, spec: &SemiContigSpec) -> Result<IdentityCheck, MinorError> {
    let spec = normalize_sm_spec(spec)?;
    if spec.side != Side::Sm || spec.s() < 2 {
        return Err(MinorError::BadSpec("recurrence needs an SM spec with at least two blocks".into()));
    }
    let (a, b, n) = (spec.a, spec.b, spec.n);
    let s = spec.s();
    let ks = spec.ks.clone();
    let ts = spec.ts.clone();
    let mut first_down = ks.clone();
    first_down[0] -= 1;
    let mut last_down = ks.clone();
    last_down[s - 1] -= 1;
    let mut shifted = first_down.clone();
    shifted[s - 1] += 1;
    let mut gap_down = ts.clone();
    gap_down[s - 2] -= 1;
    let sm = |a: i64, b: i64, ks: &[usize], ts: &[usize]| sm_minor(m, &SemiContigSpec::sm(a, b, ks, ts, n));
    let lhs = sm(a, b, &ks, &ts)? * sm(a + 1, b + 1, &first_down, &gap_down)?;
    let rhs = sm(a, b, &ks, &gap_down)? * sm(a + 1, b + 1, &first_down, &ts)?
        + sm(a, b + 1, &shifted, &gap_down)? * sm(a + 1, b, &last_down, &ts)?;
    Ok(IdentityCheck::new(lhs, rhs))
}
