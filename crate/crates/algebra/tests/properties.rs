use cminor_algebra::{frac, int, LaurentPoly, Matrix, Monomial, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| frac(p, q))
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(rational(), n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn without(m: &Matrix, row: Option<usize>, col: Option<usize>) -> Matrix {
    let rows: Vec<usize> = (0..m.rows()).filter(|&i| Some(i) != row).collect();
    let cols: Vec<usize> = (0..m.cols()).filter(|&j| Some(j) != col).collect();
    m.select(&rows, &cols)
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    let term = (proptest::collection::btree_map((-2i64..=2, 0i64..=2), -2i32..=2, 0..3), -5i64..=5);
    proptest::collection::vec(term, 0..4).prop_map(|ts| {
        let mut p = LaurentPoly::zero();
        for (m, c) in ts {
            p.add_term(m as Monomial, int(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn swapping_rows_negates_determinant(m in matrix(5), a in 0usize..5, b in 0usize..5) {
        prop_assume!(a != b);
        let mut s = m.clone();
        s.swap_rows(a, b);
        prop_assert_eq!(s.det().unwrap(), -m.det().unwrap());
    }

    #[test]
    fn determinant_is_linear_in_a_row(m in matrix(4), r in 0usize..4, extra in proptest::collection::vec(rational(), 4), c in rational()) {
        let mut sum = m.clone();
        let mut other = m.clone();
        for j in 0..4 {
            sum.set(r, j, m.get(r, j) + &c * &extra[j]);
            other.set(r, j, extra[j].clone());
        }
        prop_assert_eq!(sum.det().unwrap(), m.det().unwrap() + c * other.det().unwrap());
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(4), b in matrix(4)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn transpose_preserves_determinant(a in matrix(5)) {
        prop_assert_eq!(a.transpose().det().unwrap(), a.det().unwrap());
    }

    #[test]
    fn desnanot_jacobi_on_corners(m in matrix(5)) {
        // rows a=0,b=4 and columns c=0,d=4 removed
        let lhs = without(&m, Some(0), Some(0)).det().unwrap() * without(&m, Some(4), Some(4)).det().unwrap();
        let inner = m.select(&[1, 2, 3], &[1, 2, 3]).det().unwrap();
        let rhs = m.det().unwrap() * inner
            + without(&m, Some(0), Some(4)).det().unwrap() * without(&m, Some(4), Some(0)).det().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn laurent_ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in poly(), q in poly(), seed in 1i64..50) {
        let assign = |(x, y): (i64, i64)| frac(x * 7 + y * 3 + seed * 11 + 101, (x + y).rem_euclid(5) + 1);
        let (pv, qv) = (p.eval(assign).unwrap(), q.eval(assign).unwrap());
        prop_assert_eq!((&p + &q).eval(assign).unwrap(), &pv + &qv);
        prop_assert_eq!((&p * &q).eval(assign).unwrap(), pv * qv);
    }
}

#[test]
fn json_matrix_round_trip() {
    let m = Matrix::from_rows(vec![vec![frac(1, 2), int(-3)], vec![int(0), frac(7, 9)]]).unwrap();
    let s = serde_json::to_string(&m).unwrap();
    assert_eq!(s, r#"[["1/2","-3"],["0","7/9"]]"#);
    let back: Matrix = serde_json::from_str(&s).unwrap();
    assert_eq!(back, m);
}
