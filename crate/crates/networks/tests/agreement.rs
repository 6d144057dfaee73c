use cminor_algebra::{frac, Rational};
use cminor_networks::*;
use num_traits::Signed;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn family() -> Vec<Network> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut cond = move |_, _| frac(rng.gen_range(1..=30), rng.gen_range(1..=7));
    let mut out = Vec::new();
    for n in 2..=5 {
        out.extend(edge_subsets(n, wheel(n), &mut cond));
    }
    for n in 3..=5 {
        out.extend(edge_subsets(n, ladder(n), &mut cond));
    }
    out
}

#[test]
fn minors_and_paths_agree_on_small_families() {
    let nets = family();
    let (mut yes, mut no) = (0, 0);
    for net in &nets {
        let lam = response_matrix(net).unwrap();
        let by_minors = well_connected_by_minors(&lam).unwrap().well_connected;
        let by_paths = well_connected_by_paths(net).unwrap();
        assert_eq!(by_minors, by_paths, "{}", serde_json::to_string(net).unwrap());
        if by_paths {
            yes += 1;
        } else {
            no += 1;
        }
    }
    assert!(yes >= 20 && no >= 100, "yes={yes} no={no}");
}

#[test]
fn response_matrices_are_symmetric_with_zero_line_sums() {
    for net in family() {
        let lam = response_matrix(&net).unwrap();
        assert!(lam.is_symmetric() && lam.has_zero_line_sums());
    }
}

#[test]
fn noninterlaced_minors_are_nonnegative_and_positive_exactly_when_connected() {
    for net in family() {
        let lam = response_matrix(&net).unwrap();
        for ((a, b), v) in noninterlaced_minors(&lam).unwrap() {
            assert!(!v.is_negative(), "{a:?} {b:?}");
            assert_eq!(v.is_positive(), disjoint_paths(&net, &a, &b) == a.len(), "{a:?} {b:?}");
        }
    }
}

#[test]
fn well_connected_means_all_noninterlaced_minors_positive() {
    for net in family() {
        let lam = response_matrix(&net).unwrap();
        let all = noninterlaced_minors(&lam).unwrap().iter().all(|(_, v)| v.is_positive());
        assert_eq!(all, well_connected_by_minors(&lam).unwrap().well_connected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scaling_conductances_scales_the_response(n in 3usize..=5, c in 1i64..=9) {
        let base = edge_subsets(n, wheel(n), |_, j| frac(j as i64 + 1, 2)).pop().unwrap();
        let mut scaled = base.clone();
        for e in &mut scaled.edges {
            e.2 = e.2.clone() * Rational::from_integer(c.into());
        }
        let (l0, l1) = (response_matrix(&base).unwrap(), response_matrix(&scaled).unwrap());
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(l0.matrix.get(i, j).clone() * Rational::from_integer(c.into()), l1.matrix.get(i, j).clone());
            }
        }
    }
}
