use lorhom::linalg::{
    determinant, diagonalize, frac, int, inverse, kernel, rank, signature, solve, Matrix, Rational, Signature,
    Subspace,
};
use num_traits::Zero;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(rat(), rows * cols).prop_map(move |v| Matrix::from_flat(rows, cols, v))
}

fn sized_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))
}

fn square(n: usize) -> impl Strategy<Value = Matrix> {
    matrix(n, n)
}

fn symmetric() -> impl Strategy<Value = Matrix> {
    (1usize..=5).prop_flat_map(square).prop_map(|a| &a + &a.transpose())
}

/// Unit upper-triangular times a permutation: always invertible.
fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    (matrix(n, n), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(move |(m, perm)| {
        let mut u = Matrix::identity(n);
        for i in 0..n {
            for j in i + 1..n {
                u[(i, j)] = m[(i, j)].clone();
            }
        }
        let mut p = Matrix::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            p[(i, j)] = int(1);
        }
        u.matmul(&p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in sized_matrix()) {
        let k = kernel(&m);
        prop_assert_eq!(rank(&m) + k.dim(), m.cols());
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rank_of_transpose(m in sized_matrix()) {
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn solve_finds_preimages(m in sized_matrix(), x in proptest::collection::vec(rat(), 5)) {
        let x = &x[..m.cols()];
        let b = m.mul_vec(x);
        let y = solve(&m, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn inverse_and_determinant(p in (1usize..=4).prop_flat_map(invertible)) {
        let n = p.rows();
        let inv = inverse(&p).unwrap().expect("invertible");
        prop_assert_eq!(p.matmul(&inv), Matrix::identity(n));
        let d = determinant(&p).unwrap();
        prop_assert!(!d.is_zero());
        prop_assert_eq!(determinant(&inv).unwrap(), d.recip());
    }

    #[test]
    fn determinant_is_multiplicative(a in square(3), b in square(3)) {
        prop_assert_eq!(determinant(&a.matmul(&b)).unwrap(), determinant(&a).unwrap() * determinant(&b).unwrap());
    }

    #[test]
    fn signature_is_congruence_invariant(
        (g, p) in (1usize..=5).prop_flat_map(|n| (square(n).prop_map(|a| &a + &a.transpose()), invertible(n)))
    ) {
        let n = g.rows();
        let s = signature(&g).unwrap();
        prop_assert_eq!(s.dim(), n);
        prop_assert_eq!(signature(&g.congruence(&p)).unwrap(), s);
        prop_assert_eq!(s.n_plus + s.n_minus, rank(&g));
    }

    #[test]
    fn diagonalization_is_a_congruence(g in symmetric()) {
        let d = diagonalize(&g).unwrap();
        let n = g.rows();
        prop_assert_eq!(g.congruence(&d.basis), Matrix::diagonal(&d.diagonal));
        prop_assert!(inverse(&d.basis).unwrap().is_some());
        prop_assert_eq!(d.signature().dim(), n);
    }

    #[test]
    fn subspace_span_is_canonical(m in matrix(3, 4), p in invertible(3)) {
        let rows = |a: &Matrix| (0..a.rows()).map(|i| a.row(i).to_vec()).collect::<Vec<_>>();
        // row operations do not change the span
        let a = Subspace::span(4, rows(&m));
        let b = Subspace::span(4, rows(&p.matmul(&m)));
        prop_assert_eq!(a, b);
    }
}

#[test]
fn sylvester_examples() {
    let minkowski = Matrix::from_i64(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
    assert_eq!(signature(&minkowski).unwrap(), Signature::new(2, 1, 0));
    assert!(signature(&Matrix::from_i64(&[&[1, 2], &[3, 4]])).is_err());
    assert_eq!(signature(&Matrix::zeros(2, 2)).unwrap(), Signature::new(0, 0, 2));
}
