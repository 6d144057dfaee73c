use cminor_algebra::{Matrix, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::network::{Edge, Network};
use crate::NetworkError;

/// Node-to-node response `Λ`; `-λ_{i,j}` is the current into node `j` with node `i` at one
/// volt and every other node grounded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResponseMatrix {
    pub n: usize,
    pub matrix: Matrix,
}

impl ResponseMatrix {
    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    pub fn has_zero_line_sums(&self) -> bool {
        let m = &self.matrix;
        (0..self.n).all(|i| {
            (0..self.n).map(|j| m.get(i, j)).sum::<Rational>().is_zero()
                && (0..self.n).map(|j| m.get(j, i)).sum::<Rational>().is_zero()
        })
    }
}

/// `Λ = L_NN - L_NI L_II^{-1} L_IN` for the Kirchhoff matrix `L`, by eliminating interior
/// vertices one at a time.
pub fn response_matrix(net: &Network) -> Result<ResponseMatrix, NetworkError> {
    net.validate()?;
    let total = net.vertex_count();
    let mut l = vec![vec![Rational::zero(); total]; total];
    for Edge(u, v, c) in &net.edges {
        let (u, v) = (u - 1, v - 1);
        l[u][u] += c;
        l[v][v] += c;
        l[u][v] -= c;
        l[v][u] -= c;
    }
    for k in (net.n..total).rev() {
        let pivot = l[k][k].clone();
        if pivot.is_zero() {
            return Err(NetworkError::SingularInterior);
        }
        for i in 0..k {
            if l[i][k].is_zero() {
                continue;
            }
            let f = &l[i][k] / &pivot;
            for j in 0..k {
                if !l[k][j].is_zero() {
                    let d = &f * &l[k][j];
                    l[i][j] -= d;
                }
            }
        }
    }
    let matrix = Matrix::from_fn(net.n, net.n, |i, j| l[i][j].clone());
    Ok(ResponseMatrix { n: net.n, matrix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cminor_algebra::{frac, int};
    use std::collections::BTreeMap;

    #[test]
    fn single_edge_is_ohms_law() {
        let net = Network { n: 2, interior: 0, edges: vec![Edge(1, 2, frac(5, 3))], rotation: BTreeMap::new() };
        let r = response_matrix(&net).unwrap();
        assert_eq!(r.matrix.to_rows(), vec![vec![frac(5, 3), frac(-5, 3)], vec![frac(-5, 3), frac(5, 3)]]);
    }

    #[test]
    fn star_of_three() {
        let edges = (1..=3).map(|i| Edge(i, 4, int(1))).collect();
        let net = Network { n: 3, interior: 1, edges, rotation: BTreeMap::new() };
        let r = response_matrix(&net).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(*r.matrix.get(i, j), if i == j { frac(2, 3) } else { frac(-1, 3) });
            }
        }
        assert!(r.is_symmetric() && r.has_zero_line_sums());
    }

    #[test]
    fn series_resistors_through_interior() {
        // conductances 2 and 3 in series give 6/5
        let net = Network {
            n: 2,
            interior: 1,
            edges: vec![Edge(1, 3, int(2)), Edge(3, 2, int(3))],
            rotation: BTreeMap::new(),
        };
        let r = response_matrix(&net).unwrap();
        assert_eq!(*r.matrix.get(0, 1), frac(-6, 5));
    }
}
