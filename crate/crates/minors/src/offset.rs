use std::fmt;

use serde::{Deserialize, Serialize};

/// Flavour of a zero offset: `0+` or `0-`. Nonzero offsets carry `NotApplicable`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ZeroSign {
    Plus,
    Minus,
    NotApplicable,
}

/// Integer offset `h` with a `0+`/`0-` flavour at zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedOffset {
    pub value: i64,
    pub zero_sign: ZeroSign,
}

impl SignedOffset {
    pub fn new(value: i64) -> Self {
        SignedOffset { value, zero_sign: ZeroSign::NotApplicable }
    }

    pub fn zero(sign: ZeroSign) -> Self {
        SignedOffset { value: 0, zero_sign: sign }
    }

    /// True for `h > 0` and `h = 0+`.
    pub fn is_nonnegative(&self) -> bool {
        self.value > 0 || (self.value == 0 && self.zero_sign == ZeroSign::Plus)
    }

    /// Parses `"3"`, `"-2"`, `"0+"` or `"0-"`; a bare `"0"` reads as `0+`.
    pub fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "0+" | "0" => Some(Self::zero(ZeroSign::Plus)),
            "0-" => Some(Self::zero(ZeroSign::Minus)),
            t => t.parse::<i64>().ok().filter(|&v| v != 0).map(Self::new),
        }
    }
}

impl fmt::Display for SignedOffset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.value, self.zero_sign) {
            (0, ZeroSign::Minus) => write!(f, "0-"),
            (0, _) => write!(f, "0+"),
            (v, _) => write!(f, "{v}"),
        }
    }
}

/// Finds the `h` closest to zero for which `CON_{a,b+h,y}` is a central minor, with its `x`.
///
/// Two families of central minors meet the contiguous one: `b+h = a+m` (flavour `0+`, `x = 2a+y`)
/// and `b+h = a+m+1` (flavour `0-`, `x = 2a+y+1`), with `m = floor((n-1)/2)` and equalities mod n.
/// Equal `|h|` is resolved toward the positive value. The returned `x` lies in `0..2n`.
pub fn central_offset(a: i64, b: i64, y: usize, n: usize) -> (i64, SignedOffset) {
    let ni = n as i64;
    let m = (ni - 1) / 2;
    let mut best: Option<(i64, i64, bool)> = None;
    for minus in [false, true] {
        let target = a + m + minus as i64;
        let base = (target - b).rem_euclid(ni);
        for h in [base, base - ni] {
            let better = match best {
                None => true,
                Some((bh, _, _)) => h.abs() < bh.abs() || (h.abs() == bh.abs() && h > bh),
            };
            if better {
                best = Some((h, 2 * a + y as i64 + minus as i64, minus));
            }
        }
    }
    let (h, x, minus) = best.expect("candidates are never empty");
    let off = if h != 0 {
        SignedOffset::new(h)
    } else if minus {
        SignedOffset::zero(ZeroSign::Minus)
    } else {
        SignedOffset::zero(ZeroSign::Plus)
    };
    (x.rem_euclid(2 * ni), off)
}

/// Some `(a, b)` in `1..=n` whose contiguous minor of size `y` has offset `h` and central
/// parameter congruent to `x` mod `2n`, if one exists.
pub fn offset_preimage(x: i64, h: SignedOffset, y: usize, n: usize) -> Option<(i64, i64)> {
    let two_n = 2 * n as i64;
    for a in 1..=n as i64 {
        for b in 1..=n as i64 {
            let (xx, hh) = central_offset(a, b, y, n);
            if hh == h && (xx - x).rem_euclid(two_n) == 0 {
                return Some((a, b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circular::{central_indices, idx};

    #[test]
    fn small_example() {
        let (x, h) = central_offset(1, 5, 2, 13);
        assert_eq!((x, h), (4, SignedOffset::new(2)));
    }

    #[test]
    fn offset_lands_on_a_central_minor() {
        for n in 2..=11usize {
            for a in 1..=n as i64 {
                for b in 1..=n as i64 {
                    for y in 0..=n {
                        let (x, h) = central_offset(a, b, y, n);
                        let (ca, cb) = central_indices(x, y, n);
                        assert_eq!((ca, cb), (idx(a, n), idx(b + h.value, n)), "n={n} a={a} b={b} y={y}");
                        assert!(2 * h.value.unsigned_abs() <= n as u64 + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn zero_flavours() {
        let n = 9;
        let m = 4;
        let (_, plus) = central_offset(2, 2 + m, 3, n);
        assert_eq!(plus, SignedOffset::zero(ZeroSign::Plus));
        let (_, minus) = central_offset(2, 3 + m, 3, n);
        assert_eq!(minus, SignedOffset::zero(ZeroSign::Minus));
    }

    #[test]
    fn sign_of_h_fixes_the_flavour() {
        for n in 3..=10usize {
            for b in 1..=n as i64 {
                let (x, h) = central_offset(1, b, 2, n);
                let minus = x % 2 == 1;
                assert_eq!(minus, !h.is_nonnegative(), "n={n} b={b}");
            }
        }
    }

    #[test]
    fn preimage_round_trip() {
        let (a, b) = offset_preimage(4, SignedOffset::new(2), 2, 13).unwrap();
        assert_eq!(central_offset(a, b, 2, 13), (4, SignedOffset::new(2)));
        // parity forbids x odd with y even and h > 0
        assert!(offset_preimage(5, SignedOffset::new(2), 2, 14).is_none());
    }

    #[test]
    fn parse_and_display() {
        for s in ["0+", "0-", "3", "-2"] {
            assert_eq!(SignedOffset::parse(s).unwrap().to_string(), s);
        }
        assert!(SignedOffset::parse("x").is_none());
    }
}
