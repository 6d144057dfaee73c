use std::collections::{BTreeMap, BTreeSet};

use cminor_algebra::rational::as_string;
use cminor_algebra::Rational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::NetworkError;

/// One resistor: endpoints and a positive conductance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize, #[serde(with = "as_string")] pub Rational);

/// Interior vertex count, edge list and rotation system of a network shape.
pub type Template = (usize, Vec<(usize, usize)>, BTreeMap<usize, Vec<usize>>);

/// A graph on a disk: vertices `1..=n` are the boundary nodes in counter-clockwise order,
/// `n+1..=n+interior` the interior vertices. `rotation` is the planar embedding witness: the
/// neighbours of each vertex in counter-clockwise order. It is stored, not checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Network {
    pub n: usize,
    pub interior: usize,
    pub edges: Vec<Edge>,
    #[serde(default)]
    pub rotation: BTreeMap<usize, Vec<usize>>,
}

impl Network {
    pub fn vertex_count(&self) -> usize {
        self.n + self.interior
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        (1..=self.n).contains(&v)
    }

    /// Checks endpoints, conductance signs and connectivity.
    pub fn validate(&self) -> Result<(), NetworkError> {
        let total = self.vertex_count();
        if self.n == 0 {
            return Err(NetworkError::Invalid("no boundary nodes".into()));
        }
        for Edge(u, v, c) in &self.edges {
            if !(1..=total).contains(u) || !(1..=total).contains(v) || u == v {
                return Err(NetworkError::Invalid(format!("bad edge {u}-{v}")));
            }
            if !c.is_positive() {
                return Err(NetworkError::Invalid(format!("conductance {c} on {u}-{v} is not positive")));
            }
        }
        let adj = self.adjacency();
        let mut seen = BTreeSet::from([1usize]);
        let mut stack = vec![1usize];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.len() != total {
            return Err(NetworkError::Invalid("graph is not connected".into()));
        }
        Ok(())
    }

    /// Neighbour lists indexed by vertex (index 0 unused).
    pub fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.vertex_count() + 1];
        for Edge(u, v, _) in &self.edges {
            adj[*u].insert(*v);
            adj[*v].insert(*u);
        }
        adj
    }
}

/// The wheel on `n` boundary nodes: the boundary cycle plus one hub joined to every node.
/// Edge order: cycle edges `(i, i+1)` first, then spokes `(i, hub)`.
pub fn wheel(n: usize) -> Template {
    let hub = n + 1;
    let next = |i: usize| i % n + 1;
    let prev = |i: usize| (i + n - 2) % n + 1;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if n == 2 {
        edges.push((1, 2));
    } else if n > 2 {
        edges.extend((1..=n).map(|i| (i, next(i))));
    }
    edges.extend((1..=n).map(|i| (i, hub)));
    let mut rot = BTreeMap::new();
    for i in 1..=n {
        let around = match n {
            1 => vec![hub],
            2 => vec![next(i), hub],
            _ => vec![next(i), hub, prev(i)],
        };
        rot.insert(i, around);
    }
    rot.insert(hub, (1..=n).collect());
    (1, edges, rot)
}

/// Concentric rings: node `i` joined to interior vertex `c_i`, the `c_i` forming a cycle.
/// Edge order: spokes `(i, c_i)` first, then the inner cycle `(c_i, c_{i+1})`.
pub fn ladder(n: usize) -> Template {
    let c = |i: usize| n + i;
    let next = |i: usize| i % n + 1;
    let prev = |i: usize| (i + n - 2) % n + 1;
    let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (i, c(i))).collect();
    edges.extend((1..=n).map(|i| (c(i), c(next(i)))));
    let mut rot = BTreeMap::new();
    for i in 1..=n {
        rot.insert(i, vec![c(i)]);
        rot.insert(c(i), vec![c(next(i)), c(prev(i)), i]);
    }
    (n, edges, rot)
}

/// Every connected network on the edge subsets of a template, with conductances from
/// `conductance(network_index, edge_index)`. Rotations are restricted to surviving edges.
pub fn edge_subsets(
    n: usize,
    template: Template,
    mut conductance: impl FnMut(usize, usize) -> Rational,
) -> Vec<Network> {
    let (interior, edges, rot) = template;
    assert!(edges.len() < 20, "template too large to enumerate");
    let mut out = Vec::new();
    for mask in 1u32..(1 << edges.len()) {
        let chosen: Vec<(usize, usize)> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let present = |u: usize, v: usize| chosen.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
        let rotation =
            rot.iter().map(|(&v, around)| (v, around.iter().copied().filter(|&w| present(v, w)).collect())).collect();
        let idx = out.len();
        let net = Network {
            n,
            interior,
            edges: chosen.iter().enumerate().map(|(j, &(u, v))| Edge(u, v, conductance(idx, j))).collect(),
            rotation,
        };
        if net.validate().is_ok() {
            out.push(net);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cminor_algebra::int;

    #[test]
    fn wheel_shape() {
        let (interior, edges, rot) = wheel(4);
        assert_eq!(interior, 1);
        assert_eq!(edges.len(), 8);
        assert_eq!(rot[&1], vec![2, 5, 4]);
        assert_eq!(rot[&5], vec![1, 2, 3, 4]);
    }

    #[test]
    fn validation() {
        let good = Network { n: 2, interior: 0, edges: vec![Edge(1, 2, int(3))], rotation: BTreeMap::new() };
        assert!(good.validate().is_ok());
        let neg = Network { edges: vec![Edge(1, 2, int(-1))], ..good.clone() };
        assert!(neg.validate().is_err());
        let split = Network { n: 3, interior: 0, edges: vec![Edge(1, 2, int(1))], rotation: BTreeMap::new() };
        assert!(split.validate().is_err());
    }

    #[test]
    fn subsets_are_connected() {
        let nets = edge_subsets(3, wheel(3), |_, _| int(1));
        assert!(!nets.is_empty());
        assert!(nets.iter().all(|n| n.validate().is_ok()));
        // the full wheel is among them
        assert!(nets.iter().any(|n| n.edges.len() == 6));
    }

    #[test]
    fn json_round_trip() {
        let (interior, edges, rotation) = wheel(3);
        let net =
            Network { n: 3, interior, edges: edges.into_iter().map(|(u, v)| Edge(u, v, int(2))).collect(), rotation };
        let s = serde_json::to_string(&net).unwrap();
        assert!(s.contains(r#"[1,2,"2"]"#));
        assert_eq!(serde_json::from_str::<Network>(&s).unwrap(), net);
    }
}
