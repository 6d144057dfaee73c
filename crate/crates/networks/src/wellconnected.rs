use std::collections::VecDeque;

use cminor_algebra::Rational;
use cminor_minors::{central_indices, idx, minor_on, small_central_params, CircularPair};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::network::{Edge, Network};
use crate::response::ResponseMatrix;
use crate::NetworkError;

/// Largest node count the path oracle accepts.
pub const PATHS_NODE_CAP: usize = 7;

/// `(-1)^k det Λ_A^B` with `B` listed as in a circular pair (reverse counter-clockwise).
/// Non-interlaced minors of a response matrix are nonnegative in this normalization.
pub fn normalized_minor(lam: &ResponseMatrix, rows: &[usize], cols: &[usize]) -> Result<Rational, NetworkError> {
    let d = minor_on(&lam.matrix, rows, cols).map_err(|e| NetworkError::Invalid(e.to_string()))?;
    Ok(if rows.len() % 2 == 1 { -d } else { d })
}

/// Outcome of the small-central-minor test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorTest {
    pub well_connected: bool,
    /// The first `(x, y)` whose normalized central minor is not positive.
    pub first_failure: Option<(i64, usize)>,
}

/// Positivity of the `n(n-1)/2` normalized small central minors.
pub fn well_connected_by_minors(lam: &ResponseMatrix) -> Result<MinorTest, NetworkError> {
    for (x, y) in small_central_params(lam.n) {
        let (a, b) = central_indices(x, y, lam.n);
        let rows: Vec<usize> = (0..y as i64).map(|i| idx(a as i64 + i, lam.n)).collect();
        let cols: Vec<usize> = (0..y as i64).rev().map(|i| idx(b as i64 + i, lam.n)).collect();
        if !normalized_minor(lam, &rows, &cols)?.is_positive() {
            return Ok(MinorTest { well_connected: false, first_failure: Some((x, y)) });
        }
    }
    Ok(MinorTest { well_connected: true, first_failure: None })
}

/// All circular pairs `(A, B)` of disjoint `k`-sets of nodes, `1 <= k <= n/2`, that are not
/// interlaced, as row and column label lists.
pub fn noninterlaced_pairs(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for k in 1..=n / 2 {
        for amask in 0u32..(1 << n) {
            if amask.count_ones() as usize != k {
                continue;
            }
            for bmask in 0u32..(1 << n) {
                if bmask.count_ones() as usize != k || amask & bmask != 0 {
                    continue;
                }
                // start just after the last B before an A, walk counter-clockwise
                let label = |i: usize| (amask >> (i - 1) & 1, bmask >> (i - 1) & 1);
                let Some(start) = (1..=n).find(|&i| {
                    label(i).0 == 1 && label(idx(i as i64 - 1, n)).0 == 0 && {
                        let mut j = idx(i as i64 - 1, n);
                        while label(j) == (0, 0) {
                            j = idx(j as i64 - 1, n);
                        }
                        label(j).1 == 1
                    }
                }) else {
                    continue;
                };
                let walk: Vec<usize> = (0..n as i64).map(|s| idx(start as i64 + s, n)).collect();
                let rows: Vec<usize> = walk.iter().copied().filter(|&i| label(i).0 == 1).collect();
                let mut cols: Vec<usize> = walk.iter().copied().filter(|&i| label(i).1 == 1).collect();
                cols.reverse();
                if CircularPair::new(rows.clone(), cols.clone(), n).is_ok() {
                    out.push((rows, cols));
                }
            }
        }
    }
    out
}

/// Every normalized non-interlaced circular minor, in the order of [`noninterlaced_pairs`].
pub fn noninterlaced_minors(lam: &ResponseMatrix) -> Result<Vec<((Vec<usize>, Vec<usize>), Rational)>, NetworkError> {
    noninterlaced_pairs(lam.n)
        .into_iter()
        .map(|(r, c)| {
            let v = normalized_minor(lam, &r, &c)?;
            Ok(((r, c), v))
        })
        .collect()
}

/// Largest number of vertex-disjoint paths from `sources` to `sinks` whose inner vertices are
/// all interior (other boundary nodes are grounded and cannot carry a path).
pub fn disjoint_paths(net: &Network, sources: &[usize], sinks: &[usize]) -> usize {
    let total = net.vertex_count();
    // vertex v has in-node 2v and out-node 2v+1; source 0, sink 1
    let size = 2 * total + 2;
    let mut cap = vec![vec![0i32; size]; size];
    let (src, dst) = (0, 1);
    let vin = |v: usize| 2 * v;
    let vout = |v: usize| 2 * v + 1;
    let role = |v: usize| {
        if sources.contains(&v) {
            1
        } else if sinks.contains(&v) {
            2
        } else if net.is_boundary(v) {
            3
        } else {
            0
        }
    };
    for v in 1..=total {
        match role(v) {
            0 => cap[vin(v)][vout(v)] = 1,
            1 => cap[src][vout(v)] = 1,
            2 => cap[vin(v)][dst] = 1,
            _ => {}
        }
    }
    for Edge(u, v, _) in &net.edges {
        for (a, b) in [(*u, *v), (*v, *u)] {
            let (ra, rb) = (role(a), role(b));
            if ra == 3 || rb == 3 || ra == 2 || rb == 1 {
                continue;
            }
            cap[vout(a)][vin(b)] = 1;
        }
    }
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; size];
        prev[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for y in 0..size {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[dst] == usize::MAX {
            return flow;
        }
        let mut y = dst;
        while y != src {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Well-connectivity from the definition: every non-interlaced pair of `k`-sets is joined by
/// `k` vertex-disjoint paths.
pub fn well_connected_by_paths(net: &Network) -> Result<bool, NetworkError> {
    net.validate()?;
    if net.n > PATHS_NODE_CAP {
        return Err(NetworkError::SizeCapExceeded { n: net.n, cap: PATHS_NODE_CAP });
    }
    Ok(noninterlaced_pairs(net.n).iter().all(|(a, b)| disjoint_paths(net, a, b) == a.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{wheel, Edge};
    use crate::response::response_matrix;
    use cminor_algebra::int;
    use std::collections::BTreeMap;

    fn net(n: usize, interior: usize, edges: &[(usize, usize)]) -> Network {
        Network {
            n,
            interior,
            edges: edges.iter().map(|&(u, v)| Edge(u, v, int(1))).collect(),
            rotation: BTreeMap::new(),
        }
    }

    #[test]
    fn pair_counts() {
        // n=4: k=1 gives 12 ordered pairs, k=2 gives the 4 splits into two adjacent halves
        assert_eq!(noninterlaced_pairs(4).len(), 12 + 4);
        assert_eq!(noninterlaced_pairs(2).len(), 2);
        assert!(noninterlaced_pairs(5).iter().all(|(a, b)| a.len() == b.len()));
    }

    #[test]
    fn two_nodes() {
        let e = net(2, 0, &[(1, 2)]);
        assert!(well_connected_by_paths(&e).unwrap());
        assert!(well_connected_by_minors(&response_matrix(&e).unwrap()).unwrap().well_connected);
    }

    #[test]
    fn star_is_well_connected() {
        let s = net(3, 1, &[(1, 4), (2, 4), (3, 4)]);
        assert!(well_connected_by_paths(&s).unwrap());
        assert!(well_connected_by_minors(&response_matrix(&s).unwrap()).unwrap().well_connected);
    }

    #[test]
    fn path_through_a_grounded_node_does_not_count() {
        let p = net(3, 0, &[(1, 2), (2, 3)]);
        assert!(!well_connected_by_paths(&p).unwrap());
        let t = well_connected_by_minors(&response_matrix(&p).unwrap()).unwrap();
        assert!(!t.well_connected && t.first_failure.is_some());
    }

    #[test]
    fn cut_vertex_blocks_two_paths() {
        // nodes 1,2 and 3,4 meet only at interior vertex 5
        let c = net(4, 1, &[(1, 5), (2, 5), (3, 5), (4, 5)]);
        assert_eq!(disjoint_paths(&c, &[1, 2], &[4, 3]), 1);
        assert!(!well_connected_by_paths(&c).unwrap());
        let (interior, edges, _) = wheel(4);
        let w = net(4, interior, &edges);
        assert!(well_connected_by_paths(&w).unwrap());
    }

    #[test]
    fn size_cap() {
        let (interior, edges, _) = wheel(8);
        assert!(matches!(
            well_connected_by_paths(&net(8, interior, &edges)),
            Err(NetworkError::SizeCapExceeded { .. })
        ));
    }
}
