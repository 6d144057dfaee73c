use std::time::Instant;

use cminor_algebra::{frac, int, Rational};
use cminor_networks::{
    edge_subsets, ladder, response_matrix, well_connected_by_minors, well_connected_by_paths, wheel, Network,
};
use num_traits::Signed;
use rand::Rng;

use crate::report::VerificationReport;
use crate::sample::rng;
use crate::VerifyError;

/// Every connected edge subset of the wheels on 2..=5 nodes and the ladders on 3..=5 nodes,
/// with random positive conductances.
pub fn network_family(seed: u64) -> Vec<Network> {
    let mut r = rng(seed);
    let mut cond = move |_, _| frac(r.gen_range(1..=30), r.gen_range(1..=7));
    let mut out = Vec::new();
    for n in 2..=5 {
        out.extend(edge_subsets(n, wheel(n), &mut cond));
    }
    for n in 3..=5 {
        out.extend(edge_subsets(n, ladder(n), &mut cond));
    }
    out
}

/// Two reports per network: minors against paths (1 = well-connected), and the total
/// asymmetry plus absolute row sums of the response matrix against zero.
pub fn verify_networks(nets: &[Network]) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut out = Vec::with_capacity(2 * nets.len());
    for (i, net) in nets.iter().enumerate() {
        let t = Instant::now();
        let lam = response_matrix(net)?;
        let by_minors = well_connected_by_minors(&lam)?.well_connected;
        let by_paths = well_connected_by_paths(net)?;
        let case = format!("#{i} n={} interior={} edges={}", net.n, net.interior, net.edges.len());
        out.push(VerificationReport::new("network-wc", case.clone(), int(by_minors as i64), int(by_paths as i64), t));

        let t = Instant::now();
        let m = &lam.matrix;
        let mut defect = Rational::from_integer(0.into());
        for i in 0..lam.n {
            let mut row = Rational::from_integer(0.into());
            for j in 0..lam.n {
                defect += (m.get(i, j) - m.get(j, i)).abs();
                row += m.get(i, j);
            }
            defect += row.abs();
        }
        out.push(VerificationReport::new("network-response", case, defect, int(0), t));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_is_large_and_mixed() {
        let nets = network_family(1);
        assert!(nets.len() >= 30);
        let reps = verify_networks(&nets).unwrap();
        assert!(reps.iter().all(|r| r.equal));
        let wc: Vec<_> = reps.iter().filter(|r| r.suite == "network-wc").collect();
        assert!(wc.iter().any(|r| r.lhs == int(1)) && wc.iter().any(|r| r.lhs == int(0)));
    }
}
