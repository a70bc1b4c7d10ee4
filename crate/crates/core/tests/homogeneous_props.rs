use lorhom::catalog::{contact_decomposition, wolf_decomposition, ClassicalAlgebraSpec, ContactElementSpec, WolfRow};
use lorhom::homogeneous::{
    analyze_type_ii, analyze_type_iii, classify_admissible, invariant_euclidean_metric, lambda_threshold,
    lorentz_metric, lorentz_space_form, type_iii_model, Model, ReductiveDecomposition, Subtype, TypeIIIVerdict,
};
use lorhom::lie::MatrixLieAlgebra;
use lorhom::linalg::{frac, int, inverse, unit, Matrix, Rational, Signature, Subspace};
use lorhom::lorentz::bivector_with;
use lorhom::module_decomp::{
    irreducible_decomposition, is_valid_decomposition, Decomposition, Representation, TriState,
};
use num_traits::Zero;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

/// `G(ad_X u, v) + G(u, ad_X v)` over every basis triple, computed from
/// brackets in `g` rather than from the isotropy representation.
fn invariance_defect(dec: &ReductiveDecomposition, gram: &Matrix) -> bool {
    let g = &dec.g;
    let coords = |x: &[Rational]| dec.m.coordinates(x).expect("[l, m] ⊆ m");
    for x in dec.l.basis() {
        for (i, u) in dec.m.basis().iter().enumerate() {
            let xu = coords(&g.bracket(x, u));
            for (j, v) in dec.m.basis().iter().enumerate() {
                let xv = coords(&g.bracket(x, v));
                let a = gram.bilinear(&xu, &unit(dec.m.dim(), j));
                let b = gram.bilinear(&unit(dec.m.dim(), i), &xv);
                if !(a + b).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

fn contact(alg: ClassicalAlgebraSpec, b: &[i64], c: &[i64]) -> ContactElementSpec {
    ContactElementSpec::new(alg, b.iter().map(|&x| int(x)).collect(), c.iter().map(|&x| int(x)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn g_lambda_is_invariant_and_switches_at_threshold(
        which in 0usize..4,
        lambda in (0i64..=40, 1i64..=8).prop_map(|(n, d)| frac(n, d)),
    ) {
        let (dec, theta) = match which {
            0 => {
                let w = wolf_decomposition(WolfRow::SuP2, 1).unwrap();
                (w.dec, w.built.theta)
            }
            1 => {
                let w = wolf_decomposition(WolfRow::SpP1Nc, 1).unwrap();
                (w.dec, w.built.theta)
            }
            2 => {
                let c = contact_decomposition(&contact(ClassicalAlgebraSpec::su_pq(2, 1), &[1, 2], &[-3])).unwrap();
                (c.dec, c.theta)
            }
            _ => {
                let c = contact_decomposition(&contact(ClassicalAlgebraSpec::sp2n_r(2), &[1, 2], &[])).unwrap();
                (c.dec, c.theta)
            }
        };
        let z = classify_admissible(&dec).unwrap().z_witness.unwrap();
        let gm = invariant_euclidean_metric(&dec, &theta).unwrap();
        let t = lambda_threshold(&dec, &gm, &z).unwrap();
        // scale the sample so it lands on both sides of the threshold
        let lambda = &lambda * &t / int(8);
        let f = lorentz_metric(&dec, &gm, &z, &lambda).unwrap();
        prop_assert!(!invariance_defect(&dec, &f.gram));
        let d = dec.m.dim();
        let want = if lambda < t {
            Signature::new(d, 0, 0)
        } else if lambda == t {
            Signature::new(d - 1, 0, 1)
        } else {
            Signature::new(d - 1, 1, 0)
        };
        prop_assert_eq!(f.signature, want);
    }

    #[test]
    fn space_form_model_follows_the_sign_of_c(dim in 3usize..=5, c in rat()) {
        let f = lorentz_space_form(dim, c.clone()).unwrap();
        prop_assert!(f.g.jacobi_violation().is_none());
        let a = analyze_type_ii(&f.decomposition().unwrap(), &f.metric).unwrap();
        let want = if c > Rational::zero() {
            Model::DeSitter
        } else if c < Rational::zero() {
            Model::AntiDeSitter
        } else {
            Model::Minkowski
        };
        prop_assert_eq!(a.model, Some(want));
        prop_assert_eq!(a.c, Some(c));
        prop_assert_eq!(a.dim_w, dim);
    }

    #[test]
    fn type_three_dichotomy(lambda in rat(), s in rat(), t in 1i64..=3) {
        let e = |a: usize, b: usize| bivector_with(&Matrix::identity(4), &unit(4, a), &unit(4, b));
        let c0 = e(0, 1).scale(&s);
        let k = [&e(0, 1) + &e(2, 3).scale(&int(t))];
        let f = type_iii_model(&c0, &k, lambda.clone()).unwrap();
        let consistent = lambda.is_zero() || s.is_zero();
        prop_assert_eq!(f.g.jacobi_violation().is_none(), consistent);
        let a = analyze_type_iii(&f.decomposition().unwrap(), &f.metric).unwrap();
        let want = if !consistent {
            TypeIIIVerdict::Inconsistent
        } else if lambda.is_zero() {
            TypeIIIVerdict::FlatFactor
        } else {
            TypeIIIVerdict::CurvedFactor
        };
        prop_assert_eq!(a.verdict, want);
    }
}

proptest! {
    // exact splitting of a 7-dimensional module is the slow part of this file
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// so(3) on ℝ³ ⊕ ℝ³ ⊕ ℝ, hidden by a unimodular change of basis.
    #[test]
    fn module_decomposition_recovers_hidden_blocks(entries in proptest::collection::vec(-2i64..=2, 42)) {
        let l = [
            Matrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]),
            Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]),
            Matrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]),
        ];
        let (mut upper, mut lower) = (Matrix::identity(7), Matrix::identity(7));
        let mut it = entries.iter();
        for i in 0..7 {
            for j in i + 1..7 {
                upper[(i, j)] = int(*it.next().unwrap());
                lower[(j, i)] = int(*it.next().unwrap());
            }
        }
        let p = upper.matmul(&lower);
        let pinv = inverse(&p).unwrap().expect("unimodular");
        let action: Vec<Matrix> = l
            .iter()
            .map(|x| p.matmul(&Matrix::block_diag(&[x.clone(), x.scale(&int(2)), Matrix::zeros(1, 1)])).matmul(&pinv))
            .collect();
        let rep = Representation::new(7, action).unwrap();
        match irreducible_decomposition(&rep).unwrap() {
            Decomposition::Completed(c) => {
                prop_assert_eq!(c.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![1, 3, 3]);
                prop_assert!(is_valid_decomposition(&rep, &c));
            }
            other => prop_assert!(false, "{:?}", other.verdict()),
        }
    }
}

#[test]
fn nilpotent_action_is_not_completely_reducible() {
    let n = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
    let rep = Representation::new(3, vec![n]).unwrap();
    let d = irreducible_decomposition(&rep).unwrap();
    assert_eq!(d.verdict(), TriState::No);
    if let Decomposition::NotCompletelyReducible { witness } = d {
        assert!(rep.is_invariant(&witness));
    }
}

#[test]
fn adjoint_of_semisimple_sum_splits_into_ideals() {
    let so3 = |o: usize| {
        let e = |a: usize, b: usize| bivector_with(&Matrix::identity(6), &unit(6, o + a), &unit(6, o + b));
        vec![e(0, 1), e(0, 2), e(1, 2)]
    };
    let mut basis = so3(0);
    basis.extend(so3(3));
    let g = MatrixLieAlgebra::from_basis(6, basis).unwrap();
    let rep = Representation::adjoint(g.algebra());
    assert!(rep.preserves_brackets(g.algebra()));
    let d = irreducible_decomposition(&rep).unwrap();
    assert_eq!(d.blocks().iter().map(Subspace::dim).collect::<Vec<_>>(), vec![3, 3]);
}

#[test]
fn wolf_rows_are_minimal_ib() {
    for (row, want) in [(WolfRow::SuP2, Subtype::IbCompact), (WolfRow::SuP11Para, Subtype::IbSplit)] {
        let w = wolf_decomposition(row, 2).unwrap();
        let r = classify_admissible(&w.dec).unwrap();
        assert_eq!(r.subtype, want);
        assert_eq!(w.dec.g.centralizer(&w.dec.m_l), w.dec.l);
    }
}
