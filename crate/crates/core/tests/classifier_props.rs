use lorhom::classifier::{c0_matches, classify, d_acts_as_boost, Verdict};
use lorhom::lie::MatrixLieAlgebra;
use lorhom::linalg::{frac, int, Matrix, Rational, Subspace};
use lorhom::lorentz::{
    lorentz_algebra, maximal_compact_basis, minkowski, so_basis, subalgebra_type2, subalgebra_type3,
    MinkowskiSpace,
};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=2).prop_map(|(n, d)| frac(n, d))
}

fn combination(basis: &[Matrix], coeffs: &[Rational]) -> Matrix {
    let mut out = Matrix::zeros(basis[0].rows(), basis[0].cols());
    for (b, c) in basis.iter().zip(coeffs) {
        out.add_scaled(c, b);
    }
    out
}

/// `diag(a, ±perm, 1/a)`: a rational element of the Lorentz group in the Witt
/// basis.
fn lorentz_transform(s: &MinkowskiSpace, a: &Rational, perm: &[usize], signs: &[bool]) -> Matrix {
    let d = s.dim();
    let mut g = Matrix::zeros(d, d);
    g[(0, 0)] = a.clone();
    g[(d - 1, d - 1)] = a.recip();
    for (i, &j) in perm.iter().enumerate() {
        g[(1 + j, 1 + i)] = if signs[i] { int(-1) } else { int(1) };
    }
    g
}

fn conjugate(h: &MatrixLieAlgebra, g: &Matrix) -> MatrixLieAlgebra {
    let inv = lorhom::linalg::inverse(g).unwrap().unwrap();
    MatrixLieAlgebra::from_basis(h.ambient_size(), h.basis().iter().map(|x| g.matmul(x).matmul(&inv)).collect())
        .unwrap()
}

/// Random invertible recombination of the basis of `h`.
fn scramble(h: &MatrixLieAlgebra, coeffs: &[Rational]) -> MatrixLieAlgebra {
    let d = h.dim();
    let basis: Vec<Matrix> = (0..d)
        .map(|i| {
            // unit lower-triangular mixing
            let mut m = h.basis()[i].clone();
            for j in 0..i {
                m.add_scaled(&coeffs[(i * 7 + j) % coeffs.len()], &h.basis()[j]);
            }
            m
        })
        .rev()
        .collect();
    MatrixLieAlgebra::from_basis(h.ambient_size(), basis).unwrap()
}

fn instance() -> impl Strategy<Value = (usize, u8, usize, bool)> {
    (2usize..=4, 0u8..3, 1usize..=3, any::<bool>())
}

fn build(n: usize, kind: u8, k: usize, full: bool) -> (MinkowskiSpace, MatrixLieAlgebra, Verdict) {
    let s = minkowski(n);
    match kind {
        0 => (s.clone(), MatrixLieAlgebra::from_basis(s.dim(), maximal_compact_basis(&s)).unwrap(), Verdict::TypeI),
        1 => {
            let k = k.min(n - 1);
            let kp: Vec<Matrix> = if full {
                lorhom::lorentz::so_e_basis(&s)
                    .into_iter()
                    .filter(|m| (1..=k).all(|i| m.mul_vec(&s.e(i)).iter().all(|x| *x == int(0))))
                    .collect()
            } else {
                vec![]
            };
            (s.clone(), subalgebra_type2(&s, k, &kp).unwrap(), Verdict::TypeII)
        }
        _ => {
            let c0 = s.bivector(&s.e(1), &s.e(2));
            let kp = if full { vec![c0.clone()] } else { vec![] };
            (s.clone(), subalgebra_type3(&s, &c0, &kp).unwrap(), Verdict::TypeIII)
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn generated_subalgebras_are_lie_algebras(
        n in 1usize..=3,
        coeffs in proptest::collection::vec(rat(), 2 * 10),
    ) {
        let s = minkowski(n);
        let basis = so_basis(&s);
        let d = basis.len();
        let gens = [combination(&basis, &coeffs[..d]), combination(&basis, &coeffs[d..2 * d])];
        let h = MatrixLieAlgebra::generated_by(s.dim(), &gens).unwrap();
        let alg = h.algebra();
        prop_assert!(alg.jacobi_violation().is_none());
        prop_assert!(alg.killing().is_symmetric());
        prop_assert!(alg.killing_is_invariant());
        for x in h.basis() {
            prop_assert!(s.is_skew(x));
        }
    }

    #[test]
    fn compact_generated_algebras_are_type_one(
        n in 1usize..=3,
        coeffs in proptest::collection::vec(rat(), 2 * 6),
    ) {
        let s = minkowski(n);
        let basis = maximal_compact_basis(&s);
        let d = basis.len();
        let gens = [combination(&basis, &coeffs[..d]), combination(&basis, &coeffs[d..2 * d])];
        let h = MatrixLieAlgebra::generated_by(s.dim(), &gens).unwrap();
        let c = classify(&s, &h).unwrap();
        prop_assert_eq!(c.verdict, Verdict::TypeI);
        let t = &c.w.unwrap().basis()[0].clone();
        prop_assert!(s.inner(t, t) < int(0));
    }

    #[test]
    fn verdict_survives_basis_scramble(
        (n, kind, k, full) in instance(),
        coeffs in proptest::collection::vec(rat(), 11),
    ) {
        let (s, h, want) = build(n, kind, k, full);
        let c = classify(&s, &h).unwrap();
        let c2 = classify(&s, &scramble(&h, &coeffs)).unwrap();
        prop_assert_eq!(c.verdict, want);
        prop_assert_eq!(c2.verdict, want);
        prop_assert_eq!(c.w, c2.w);
        prop_assert_eq!(c.k_part.map(|k| k.dim()), c2.k_part.map(|k| k.dim()));
    }

    #[test]
    fn verdict_survives_lorentz_conjugation(
        (n, kind, k, full) in instance(),
        a in (1i64..=5, 1i64..=5).prop_map(|(p, q)| frac(p, q)),
        perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle(),
        signs in proptest::collection::vec(any::<bool>(), 4),
    ) {
        let (s, h, want) = build(n, kind, k, full);
        let perm: Vec<usize> = perm.into_iter().filter(|&j| j < n).collect();
        let g = lorentz_transform(&s, &a, &perm, &signs);
        prop_assert_eq!(g.transpose().matmul(s.gram()).matmul(&g), s.gram().clone());
        let hg = conjugate(&h, &g);
        let c = classify(&s, &h).unwrap();
        let cg = classify(&s, &hg).unwrap();
        prop_assert_eq!(cg.verdict, want);
        if want != Verdict::TypeI {
            // the block is unique for Types II and III, so it moves with g
            let moved = c.w.unwrap().basis().iter().map(|v| g.mul_vec(v)).collect();
            prop_assert_eq!(cg.w.unwrap(), Subspace::span(s.dim(), moved));
        }
    }

    #[test]
    fn type_three_with_two_rotation_planes(
        a in rat(),
        b in rat(),
        mask in 0u8..4,
    ) {
        let s = minkowski(4);
        let r12 = s.bivector(&s.e(1), &s.e(2));
        let r34 = s.bivector(&s.e(3), &s.e(4));
        let c0 = &r12.scale(&a) + &r34.scale(&b);
        let mut kp = Vec::new();
        if mask & 1 == 1 { kp.push(r12.clone()); }
        if mask & 2 == 2 { kp.push(r34.clone()); }
        let h = subalgebra_type3(&s, &c0, &kp).unwrap();
        let c = classify(&s, &h).unwrap();
        prop_assert_eq!(c.verdict, Verdict::TypeIII);
        prop_assert!(d_acts_as_boost(&h, &c));
        let k = c.k_part.clone().unwrap_or_else(|| Subspace::zero(h.dim()));
        prop_assert_eq!(k.dim(), kp.len());
        prop_assert!(c0_matches(&h, &k, c.c0.as_ref().unwrap(), &c0));
    }
}

#[test]
fn full_lorentz_algebra_is_type_two_on_everything() {
    for n in 1..=3 {
        let s = minkowski(n);
        let g = lorentz_algebra(&s).algebra;
        let c = classify(&s, &g).unwrap();
        assert_eq!(c.verdict, Verdict::TypeII);
        assert_eq!(c.w.unwrap().dim(), s.dim());
    }
}
