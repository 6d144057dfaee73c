use cminor_algebra::{frac, Matrix};
use cminor_tilings::WeightMap;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::VerifyError;

/// Attempts before [`generic_matrix`] gives up.
const RESAMPLE_LIMIT: usize = 100;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries `p/q` with `p` uniform in `-99..=99` and `q` uniform in `1..=9`.
pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| frac(rng.gen_range(-99..=99), rng.gen_range(1..=9)))
}

/// A square matrix whose central minors are all nonzero, with its weight table.
#[derive(Clone, Debug)]
pub struct Generic {
    pub matrix: Matrix,
    pub weights: WeightMap,
}

impl Generic {
    /// Checks every `CM_{x,y}`, `0 <= x < 2n`, `0 <= y <= n`, since each one is a weight.
    pub fn new(matrix: Matrix) -> Result<Self, VerifyError> {
        let weights = WeightMap::from_matrix(&matrix)?;
        let n = matrix.rows() as i64;
        for x in 0..2 * n {
            for y in 0..=n {
                if weights.value((x, y)).is_some_and(|v| v.is_zero()) {
                    return Err(VerifyError::GenericityViolation { x, y: y as usize });
                }
            }
        }
        Ok(Generic { matrix, weights })
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }
}

/// Samples until the matrix is generic.
pub fn generic_matrix(rng: &mut ChaCha8Rng, n: usize) -> Generic {
    for _ in 0..RESAMPLE_LIMIT {
        if let Ok(g) = Generic::new(random_matrix(rng, n, n)) {
            return g;
        }
    }
    panic!("no generic {n}x{n} matrix in {RESAMPLE_LIMIT} draws")
}
