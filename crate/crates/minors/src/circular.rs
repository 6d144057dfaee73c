use cminor_algebra::{Matrix, Rational};

use crate::MinorError;

/// Reduces any integer index into `1..=n`.
pub fn idx(i: i64, n: usize) -> usize {
    (i - 1).rem_euclid(n as i64) as usize + 1
}

/// Counter-clockwise distance from `from` to `to` on the circle `1..=n`.
pub fn ccw_dist(from: usize, to: usize, n: usize) -> usize {
    (to + n - from) % n
}

/// True when the labels are distinct and appear in counter-clockwise order around the circle.
pub fn in_ccw_order(labels: &[usize], n: usize) -> bool {
    if labels.len() <= 1 {
        return labels.iter().all(|&l| (1..=n).contains(&l));
    }
    if labels.iter().any(|&l| !(1..=n).contains(&l)) {
        return false;
    }
    let start = labels[0];
    let mut last = 0;
    for &l in &labels[1..] {
        let d = ccw_dist(start, l, n);
        if d <= last {
            return false;
        }
        last = d;
    }
    true
}

/// Row labels `a_1..a_k` and column labels `b_1..b_k` of a circular minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularPair {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub n: usize,
}

impl CircularPair {
    /// Validates that rows run counter-clockwise, columns run clockwise, and, when the two
    /// sets are disjoint, that `a_1..a_k, b_k..b_1` is counter-clockwise as a whole.
    pub fn new(rows: Vec<usize>, cols: Vec<usize>, n: usize) -> Result<Self, MinorError> {
        let rev: Vec<usize> = cols.iter().rev().copied().collect();
        let ok = rows.len() == cols.len() && in_ccw_order(&rows, n) && in_ccw_order(&rev, n);
        let disjoint = rows.iter().all(|r| !cols.contains(r));
        let joint: Vec<usize> = rows.iter().chain(rev.iter()).copied().collect();
        if !ok || (disjoint && !in_ccw_order(&joint, n)) {
            return Err(MinorError::BadPair(format!("rows {rows:?}, cols {cols:?}, n={n}")));
        }
        Ok(CircularPair { rows, cols, n })
    }

    /// Contiguous pair: rows `a..a+y-1`, columns `b+y-1..b`, all mod n.
    pub fn contiguous(a: i64, b: i64, y: usize, n: usize) -> Self {
        let rows = (0..y as i64).map(|i| idx(a + i, n)).collect();
        let cols = (0..y as i64).rev().map(|i| idx(b + i, n)).collect();
        CircularPair { rows, cols, n }
    }
}

/// Determinant of the submatrix on the given 1-based row and column labels, in order.
pub fn minor_on(m: &Matrix, rows: &[usize], cols: &[usize]) -> Result<Rational, MinorError> {
    let r: Vec<usize> = rows.iter().map(|i| i - 1).collect();
    let c: Vec<usize> = cols.iter().map(|j| j - 1).collect();
    Ok(m.select(&r, &c).det()?)
}

pub fn circular_minor(m: &Matrix, p: &CircularPair) -> Result<Rational, MinorError> {
    if p.n != m.rows() || !m.is_square() {
        return Err(MinorError::BadPair(format!("pair for n={} on a {}x{} matrix", p.n, m.rows(), m.cols())));
    }
    let p = CircularPair::new(p.rows.clone(), p.cols.clone(), p.n)?;
    minor_on(m, &p.rows, &p.cols)
}

/// `CON_{a,b,y}`: rows `a..a+y-1`, columns `b+y-1..b`.
pub fn contiguous_minor(m: &Matrix, a: i64, b: i64, y: usize) -> Result<Rational, MinorError> {
    let n = m.rows();
    if y > n {
        return Err(MinorError::BadSize { y, n });
    }
    let p = CircularPair::contiguous(a, b, y, n);
    minor_on(m, &p.rows, &p.cols)
}

/// Row and column starts `(a, b)` of the central minor `CM_{x,y}` for size `n`, reduced into `1..=n`.
pub fn central_indices(x: i64, y: usize, n: usize) -> (usize, usize) {
    let y = y as i64;
    let ni = n as i64;
    let a = (x - y).div_euclid(2);
    let b = (x - y + ni - (ni - 1) % 2).div_euclid(2);
    (idx(a, n), idx(b, n))
}

/// `CM_{x,y}(M)`; `x` is read modulo `2n`.
pub fn central_minor(m: &Matrix, x: i64, y: usize) -> Result<Rational, MinorError> {
    let n = m.rows();
    let (a, b) = central_indices(x.rem_euclid(2 * n as i64), y, n);
    contiguous_minor(m, a as i64, b as i64, y)
}

/// Parameters `(x, y)` of the small central minors, in order of increasing `y` then `x`.
pub fn small_central_params(n: usize) -> Vec<(i64, usize)> {
    let mut out = Vec::new();
    for y in 1..=n / 2 {
        for x in 1..=n as i64 {
            if 2 * y < n || (x + y as i64) % 2 == 1 {
                out.push((x, y));
            }
        }
    }
    out
}

pub fn small_central_minors(m: &Matrix) -> Result<Vec<((i64, usize), Rational)>, MinorError> {
    small_central_params(m.rows()).into_iter().map(|(x, y)| Ok(((x, y), central_minor(m, x, y)?))).collect()
}
