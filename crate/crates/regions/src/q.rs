use cminor_minors::SignedOffset;
use serde::{Deserialize, Serialize};

use crate::region::Region;
use crate::shapes::{
    build_aztec_rectangle, build_tad, l_sum, trim_below_path, DiamondParams, Extension, LSumShape, ZigzagPath,
};
use crate::RegionError;

/// Parameters of `Q_{x,h}(k_1..k_s; t_1..t_{s-1})` on the strip of height `n`, or of its mirror.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QParams {
    pub x: i64,
    pub h: SignedOffset,
    pub ks: Vec<u64>,
    pub ts: Vec<u64>,
    pub n: i64,
    pub mirrored: bool,
}

/// Which construction a parameter set falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QType {
    /// A single block: a truncated diamond.
    Tad,
    /// `t < h - k`.
    Type1,
    /// `h >= 0+` and `t >= h - k`, with the shape of its L-sum.
    Type2(LSumShape),
    /// `h <= 0-`.
    Type3,
}

impl QType {
    pub fn label(self) -> String {
        match self {
            QType::Tad => "tad".into(),
            QType::Type1 => "type1".into(),
            QType::Type2(s) => format!("type2{}", s.letter()),
            QType::Type3 => "type3".into(),
        }
    }
}

impl QParams {
    fn validate(&self) -> Result<(), RegionError> {
        let ok = !self.ks.is_empty()
            && self.ts.len() + 1 == self.ks.len()
            && self.ks.iter().chain(&self.ts).all(|&v| v > 0)
            && self.n > 0;
        if ok {
            Ok(())
        } else {
            Err(RegionError::InvalidParams(format!("ks={:?} ts={:?} n={}", self.ks, self.ts, self.n)))
        }
    }

    fn k(&self) -> i64 {
        self.ks.iter().sum::<u64>() as i64
    }

    fn t(&self) -> i64 {
        self.ts.iter().sum::<u64>() as i64
    }

    /// The two diamonds of the Type-2 L-sum: orders `h + k_1` and `2k + t - h - k_1 - 1`,
    /// centered at `x - h` and `x - h + t`.
    pub fn l_sum_diamonds(&self) -> (DiamondParams, DiamondParams) {
        let (x, h, k, t, k1) = (self.x, self.h.value, self.k(), self.t(), self.ks[0] as i64);
        (
            DiamondParams { x0: x - h, h: (h + k1).max(0) as u64 },
            DiamondParams { x0: x - h + t, h: (2 * k + t - h - k1 - 1).max(0) as u64 },
        )
    }

    pub fn q_type(&self) -> Result<QType, RegionError> {
        self.validate()?;
        if self.ks.len() == 1 {
            return Ok(QType::Tad);
        }
        let (h, k, t) = (self.h.value, self.k(), self.t());
        Ok(if t < h - k {
            QType::Type1
        } else if self.h.is_nonnegative() {
            let (d1, d2) = self.l_sum_diamonds();
            QType::Type2(LSumShape::of(d1, d2))
        } else {
            QType::Type3
        })
    }
}

/// Peak of height `k` anchored at `(x0, 0)`.
fn tent(k: i64, x0: i64) -> ZigzagPath {
    ZigzagPath { peaks: vec![k as u64], valleys: vec![], extension: Extension::Plus, anchor: (x0, 0) }
}

/// Builds `Q_{x,h}` (or its mirror) as an explicit cell set.
///
/// Types 1 and 2 trim an Aztec rectangle, respectively an L-sum, below the zigzag path
/// `(k_1..k_s; t_1..t_{s-1})` started at the region's left corner `x - 2h - k_1`.
/// Type 3 trims the rectangle with left corner `X0 = x - h + t - NW` and sides
/// `NW = 2k + t - h - k_1`, `NE = NW - k_s` below a peak of height `k` at `X0`, and below the
/// path `(k_1..k_{s-1}; t_1..t_{s-2})` started `2(k - k_1) + 2|h|` further right, shifted by one
/// column. Every type is then cut to the strip `0 <= y <= n`. The mirror reflects the result
/// in the vertical line `X = x - h`.
pub fn build_q(params: &QParams) -> Result<Region, RegionError> {
    let ty = params.q_type()?;
    let (x, h, n) = (params.x, params.h.value, params.n);
    let (k, t, k1) = (params.k(), params.t(), params.ks[0] as i64);
    let s = params.ks.len();
    let center = (x - h, k1);
    let region = match ty {
        QType::Tad => build_tad(x - h, k1, h.unsigned_abs(), n),
        QType::Type1 | QType::Type2(_) => {
            let base = if ty == QType::Type1 {
                build_aztec_rectangle(x - h, 0, (h + k1) as u64, (h - k + k1) as u64)
            } else {
                let (d1, d2) = params.l_sum_diamonds();
                l_sum(d1, d2)?
            };
            let path = ZigzagPath::new(&params.ks, &params.ts, Extension::Plus, (x - 2 * h - k1, 0))?;
            trim_below_path(&base, &path).strip(n, center)
        }
        QType::Type3 => {
            let nw = 2 * k + t - h - k1;
            let ne = nw - params.ks[s - 1] as i64;
            let top = x - h + t;
            let x0 = top - nw;
            let base = build_aztec_rectangle(top, 0, nw as u64, ne as u64);
            let trimmed = trim_below_path(&base, &tent(k, x0));
            let start = x0 + 2 * (k - k1) + 2 * h.abs() + 1;
            let path = ZigzagPath::new(&params.ks[..s - 1], &params.ts[..s - 2], Extension::Minus, (start, 0))?;
            let inner = trim_below_path(&trimmed, &path);
            inner.strip(n, center)
        }
    };
    Ok(if params.mirrored { region.reflect_x(x - h) } else { region })
}
