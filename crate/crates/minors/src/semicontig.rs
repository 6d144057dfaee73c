use cminor_algebra::{Matrix, Rational};
use serde::{Deserialize, Serialize};

use crate::circular::{idx, minor_on};
use crate::offset::{central_offset, SignedOffset};
use crate::MinorError;

/// Which side carries the gaps: `SM` has contiguous rows and gapped columns, `SMbar` the reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "SM")]
    Sm,
    #[serde(rename = "SMbar")]
    SmBar,
}

/// `SM_{a,b}(k_1..k_s; t_1..t_{s-1})` or its mirror, on an `n x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemiContigSpec {
    pub a: i64,
    pub b: i64,
    pub ks: Vec<usize>,
    pub ts: Vec<usize>,
    pub n: usize,
    pub side: Side,
}

impl SemiContigSpec {
    pub fn sm(a: i64, b: i64, ks: &[usize], ts: &[usize], n: usize) -> Self {
        SemiContigSpec { a, b, ks: ks.to_vec(), ts: ts.to_vec(), n, side: Side::Sm }
    }

    pub fn sm_bar(a: i64, b: i64, ks: &[usize], ts: &[usize], n: usize) -> Self {
        SemiContigSpec { a, b, ks: ks.to_vec(), ts: ts.to_vec(), n, side: Side::SmBar }
    }

    pub fn k(&self) -> usize {
        self.ks.iter().sum()
    }

    pub fn t(&self) -> usize {
        self.ts.iter().sum()
    }

    pub fn s(&self) -> usize {
        self.ks.len()
    }

    fn check_shape(&self) -> Result<(), MinorError> {
        if self.ks.is_empty() || self.ts.len() + 1 != self.ks.len() || self.n == 0 {
            return Err(MinorError::BadSpec(format!("{} blocks with {} gaps", self.ks.len(), self.ts.len())));
        }
        if self.k() + self.t() > self.n {
            return Err(MinorError::BadSpec(format!("k+t={} exceeds n={}", self.k() + self.t(), self.n)));
        }
        Ok(())
    }

    /// Blocks of the gapped side as `(start, len)` with unreduced starts, in block order.
    ///
    /// For `SM` the blocks run counter-clockwise from `b`; for `SMbar` they run clockwise from `a`,
    /// the first block being `a..a+k_1-1`.
    fn raw_blocks(&self) -> Vec<(i64, usize)> {
        let mut out = Vec::with_capacity(self.ks.len());
        match self.side {
            Side::Sm => {
                let mut pos = self.b;
                for (i, &k) in self.ks.iter().enumerate() {
                    out.push((pos, k));
                    pos += k as i64 + self.ts.get(i).copied().unwrap_or(0) as i64;
                }
            }
            Side::SmBar => {
                let mut start = self.a;
                for (i, &k) in self.ks.iter().enumerate() {
                    if i > 0 {
                        start -= (self.ts[i - 1] + k) as i64;
                    }
                    out.push((start, k));
                }
            }
        }
        out
    }

    fn is_normal(&self) -> bool {
        self.ks.iter().all(|&k| k > 0) && self.ts.iter().all(|&t| t > 0)
    }
}

/// Removes zero-size blocks and zero-size gaps by reading the spec as actual index sets.
///
/// An empty last block drops with its gap; a zero gap merges its neighbours; an empty first
/// block drops with its gap and moves the start of the gapped side to the next block.
/// A spec whose blocks are all empty becomes the single empty block.
pub fn normalize_sm_spec(spec: &SemiContigSpec) -> Result<SemiContigSpec, MinorError> {
    spec.check_shape()?;
    if spec.is_normal() {
        return Ok(spec.clone());
    }
    let blocks: Vec<(i64, usize)> = spec.raw_blocks().into_iter().filter(|&(_, k)| k > 0).collect();
    if blocks.is_empty() {
        let mut out = spec.clone();
        out.ks = vec![0];
        out.ts = vec![];
        return Ok(out);
    }
    // merged: (start, len); gaps between consecutive merged blocks
    let mut merged: Vec<(i64, usize)> = Vec::new();
    let mut gaps: Vec<usize> = Vec::new();
    for (start, len) in blocks {
        match merged.last_mut() {
            None => merged.push((start, len)),
            Some(last) => {
                let gap = match spec.side {
                    Side::Sm => start - (last.0 + last.1 as i64),
                    Side::SmBar => last.0 - (start + len as i64),
                };
                if gap < 0 {
                    return Err(MinorError::UnnormalizableSpec(format!("{spec:?}")));
                }
                if gap == 0 {
                    last.1 += len;
                    if spec.side == Side::SmBar {
                        last.0 = start;
                    }
                } else {
                    merged.push((start, len));
                    gaps.push(gap as usize);
                }
            }
        }
    }
    let mut out = spec.clone();
    match spec.side {
        Side::Sm => out.b = merged[0].0,
        Side::SmBar => out.a = merged[0].0,
    }
    out.ks = merged.iter().map(|&(_, k)| k).collect();
    out.ts = gaps;
    Ok(out)
}

/// Row and column labels of the minor, in determinant order.
///
/// `SM`: rows `a..a+k-1`; columns are the counter-clockwise blocks from `b`, listed clockwise.
/// `SMbar`: rows are the clockwise blocks from `a`, listed counter-clockwise starting from the
/// most clockwise block; columns `b+k-1..b`.
pub fn sm_index_sets(spec: &SemiContigSpec) -> Result<(Vec<usize>, Vec<usize>), MinorError> {
    let s = normalize_sm_spec(spec)?;
    let n = s.n;
    let k = s.k() as i64;
    let gapped: Vec<usize> = {
        let mut blocks = s.raw_blocks();
        if s.side == Side::SmBar {
            blocks.reverse();
        }
        blocks.iter().flat_map(|&(st, len)| (0..len as i64).map(move |i| idx(st + i, n))).collect()
    };
    Ok(match s.side {
        Side::Sm => ((0..k).map(|i| idx(s.a + i, n)).collect(), gapped.into_iter().rev().collect()),
        Side::SmBar => (gapped, (0..k).rev().map(|i| idx(s.b + i, n)).collect()),
    })
}

pub fn sm_minor(m: &Matrix, spec: &SemiContigSpec) -> Result<Rational, MinorError> {
    if m.rows() != spec.n || !m.is_square() {
        return Err(MinorError::BadSpec(format!("spec for n={} on a {}x{} matrix", spec.n, m.rows(), m.cols())));
    }
    let (rows, cols) = sm_index_sets(spec)?;
    minor_on(m, &rows, &cols)
}

/// `(x, h)` of the contiguous minor `M_{A_1}^{B_1}` attached to a normalized spec.
///
/// `SM`: `A_1` is the last `k_1` rows and `B_1` the first block, so the offset is taken at
/// `(a+k-k_1, b)`. `SMbar`: `A_1` is the first block `a..a+k_1-1` and `B_1` the first `k_1`
/// columns `b..b+k_1-1`, so the offset is taken at `(a, b)`.
pub fn spec_offset(spec: &SemiContigSpec) -> Result<(i64, SignedOffset), MinorError> {
    let s = normalize_sm_spec(spec)?;
    let k1 = s.ks[0];
    Ok(match s.side {
        Side::Sm => central_offset(s.a + (s.k() - k1) as i64, s.b, k1, s.n),
        Side::SmBar => central_offset(s.a, s.b, k1, s.n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sm_layout() {
        let s = SemiContigSpec::sm(1, 6, &[1, 1], &[1], 10);
        assert_eq!(sm_index_sets(&s).unwrap(), (vec![1, 2], vec![8, 6]));
        let s = SemiContigSpec::sm(9, 2, &[2, 1], &[2], 10);
        assert_eq!(sm_index_sets(&s).unwrap(), (vec![9, 10, 1], vec![6, 3, 2]));
    }

    #[test]
    fn sm_bar_layout() {
        // A_1 = {5,6}, gap {4}, A_2 = {2,3}; rows listed 2,3,5,6
        let s = SemiContigSpec::sm_bar(5, 8, &[2, 2], &[1], 10);
        assert_eq!(sm_index_sets(&s).unwrap(), (vec![2, 3, 5, 6], vec![1, 10, 9, 8]));
    }

    #[test]
    fn normalization_rules() {
        let s = |ks: &[usize], ts: &[usize]| SemiContigSpec::sm(1, 4, ks, ts, 12);
        let n = normalize_sm_spec(&s(&[2, 0], &[3])).unwrap();
        assert_eq!((n.ks.clone(), n.ts.clone(), n.b), (vec![2], vec![], 4));
        let n = normalize_sm_spec(&s(&[0, 2], &[3])).unwrap();
        assert_eq!((n.ks.clone(), n.ts.clone(), n.b), (vec![2], vec![], 7));
        let n = normalize_sm_spec(&s(&[2, 1, 1], &[2, 0])).unwrap();
        assert_eq!((n.ks.clone(), n.ts.clone(), n.b), (vec![2, 2], vec![2], 4));
    }

    #[test]
    fn sm_bar_normalization_moves_a() {
        let s = SemiContigSpec::sm_bar(8, 1, &[0, 2], &[3], 12);
        let n = normalize_sm_spec(&s).unwrap();
        assert_eq!((n.a, n.ks.clone()), (3, vec![2]));
        let s = SemiContigSpec::sm_bar(8, 1, &[2, 3], &[0], 12);
        let n = normalize_sm_spec(&s).unwrap();
        assert_eq!((n.a, n.ks.clone(), n.ts.clone()), (5, vec![5], vec![]));
        assert_eq!(sm_index_sets(&s).unwrap().0, vec![5, 6, 7, 8, 9]);
    }

    #[test]
    fn bad_specs() {
        assert!(normalize_sm_spec(&SemiContigSpec::sm(1, 1, &[2, 2], &[], 8)).is_err());
        assert!(normalize_sm_spec(&SemiContigSpec::sm(1, 1, &[4, 4], &[1], 8)).is_err());
        assert!(normalize_sm_spec(&SemiContigSpec::sm(1, 1, &[], &[], 8)).is_err());
    }

    #[test]
    fn json_format() {
        let s = SemiContigSpec::sm_bar(1, 2, &[2, 1], &[1], 7);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"a":1,"b":2,"ks":[2,1],"ts":[1],"n":7,"side":"SMbar"}"#);
        assert_eq!(serde_json::from_str::<SemiContigSpec>(&j).unwrap(), s);
    }
}
