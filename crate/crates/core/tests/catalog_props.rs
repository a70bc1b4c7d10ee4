use lorhom::catalog::{
    build_algebra, contact_decomposition, unchecked_centralizer_in_p, ClassicalAlgebraSpec, ContactElementSpec,
};
use lorhom::homogeneous::{check_cartan_involution, classify_admissible, Subtype};
use lorhom::linalg::{int, vec_is_zero, Matrix, Rational, Subspace};
use proptest::prelude::*;

fn specs() -> Vec<ClassicalAlgebraSpec> {
    use ClassicalAlgebraSpec as S;
    vec![
        S::su_pq(1, 1),
        S::su_pq(2, 1),
        S::su_pq(2, 2),
        S::su_pq(3, 1),
        S::so_pq(2, 2),
        S::so_pq(1, 2),
        S::so_pq(4, 2),
        S::sp2n_r(1),
        S::sp2n_r(2),
        S::sp2n_r(3),
        S::sp_pq(1, 1),
        S::sp_pq(2, 1),
        S::so_n_h(2),
        S::so_n_h(3),
        S::su_n(3),
        S::so_n(5),
        S::sp_n(2),
    ]
}

/// `θ` is an involutive automorphism and `k`, `p` are its eigenspaces.
#[test]
fn cartan_data_of_every_family() {
    for spec in specs() {
        let b = build_algebra(&spec).unwrap();
        let g = b.algebra.algebra();
        let name = spec.name();
        assert_eq!(g.dim(), spec.expected_dim(), "{name} dim");
        assert_eq!(b.k.dim(), spec.expected_k_dim(), "{name} dim k");
        assert_eq!(b.k.dim() + b.p.dim(), g.dim(), "{name} k + p");
        assert_eq!(b.theta.matmul(&b.theta), Matrix::identity(g.dim()), "{name} θ²");
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let x = b.theta.column(i);
                let y = b.theta.column(j);
                let e = |k: usize| lorhom::linalg::unit(g.dim(), k);
                assert_eq!(b.theta.mul_vec(&g.bracket(&e(i), &e(j))), g.bracket(&x, &y), "{name} θ[b{i},b{j}]");
            }
        }
        for v in b.k.basis() {
            assert_eq!(&b.theta.mul_vec(v), v);
        }
        for v in b.p.basis() {
            let neg: Vec<Rational> = v.iter().map(|x| -x).collect();
            assert_eq!(b.theta.mul_vec(v), neg);
        }
        check_cartan_involution(g, &b.theta).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(g.is_compact_subalgebra(&b.k).unwrap(), "{name} k compact");
    }
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(ClassicalAlgebraSpec::so_pq(3, 1).validate().is_err());
    assert!(build_algebra(&ClassicalAlgebraSpec::su_pq(0, 0)).is_err());
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn cp_dim(spec: &ContactElementSpec) -> usize {
    unchecked_centralizer_in_p(spec).unwrap().dim()
}

/// Valid data gives a decomposition with `C_g(Z) = l ⊕ ℝZ` of the predicted
/// size and an Ia subtype whenever `m_l` is a line.
fn check_valid(spec: &ContactElementSpec) -> Result<(), TestCaseError> {
    prop_assert_eq!(cp_dim(spec), 0, "{} passed validation", spec.name());
    let c = contact_decomposition(spec).unwrap();
    let g = &c.dec.g;
    let cz = g.centralizer_of(&c.z);
    prop_assert_eq!(cz.dim(), spec.expected_centralizer_dim());
    prop_assert_eq!(c.dec.l.dim() + 1, cz.dim());
    prop_assert!(c.dec.m_l.contains(&c.z));
    let r = classify_admissible(&c.dec).unwrap();
    prop_assert!(r.admissible);
    if c.dec.m_l.dim() == 1 {
        prop_assert_eq!(r.subtype, Subtype::Ia);
    }
    Ok(())
}

fn small() -> impl Strategy<Value = i64> {
    -3i64..=3
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn su_pq_centralizer_in_p(
        (p, q) in prop_oneof![Just((1usize, 1usize)), Just((2, 1)), Just((2, 2)), Just((3, 1))],
        raw in proptest::collection::vec(small(), 4),
    ) {
        let b: Vec<i64> = raw[..p].to_vec();
        let mut c: Vec<i64> = raw[p..p + q - 1].to_vec();
        c.push(-(b.iter().sum::<i64>() + c.iter().sum::<i64>()));
        let spec = ContactElementSpec::new(ClassicalAlgebraSpec::su_pq(p, q), ints(&b), ints(&c));
        let oracle = b.iter().any(|x| c.contains(x));
        prop_assert_eq!(cp_dim(&spec) > 0, oracle);
        if spec.validate().is_ok() {
            check_valid(&spec)?;
        } else {
            prop_assert!(oracle || b.iter().chain(&c).all(|x| *x == 0));
        }
    }

    #[test]
    fn sp2n_r_centralizer_in_p(n in 1usize..=3, raw in proptest::collection::vec(small(), 3)) {
        let z = &raw[..n];
        let spec = ContactElementSpec::new(ClassicalAlgebraSpec::sp2n_r(n), ints(z), vec![]);
        let oracle = (0..n).any(|i| (i..n).any(|j| z[i] + z[j] == 0));
        prop_assert_eq!(cp_dim(&spec) > 0, oracle);
        if spec.validate().is_ok() {
            check_valid(&spec)?;
        }
    }

    #[test]
    fn so_pq_centralizer_in_p(
        (p, q) in prop_oneof![Just((2usize, 2usize)), Just((1, 2)), Just((4, 2)), Just((2, 4))],
        raw in proptest::collection::vec(small(), 4),
    ) {
        let b: Vec<i64> = raw[..p / 2].to_vec();
        let c: Vec<i64> = raw[2..2 + q / 2].to_vec();
        let spec = ContactElementSpec::new(ClassicalAlgebraSpec::so_pq(p, q), ints(&b), ints(&c));
        let v0 = p % 2 + 2 * b.iter().filter(|x| **x == 0).count();
        let u0 = q % 2 + 2 * c.iter().filter(|x| **x == 0).count();
        let oracle = (v0 > 0 && u0 > 0) || b.iter().any(|x| *x != 0 && c.iter().any(|y| x.abs() == y.abs()));
        prop_assert_eq!(cp_dim(&spec) > 0, oracle);
        if spec.validate().is_ok() {
            check_valid(&spec)?;
        }
    }

    #[test]
    fn sp_pq_centralizer_in_p(
        (p, q) in prop_oneof![Just((1usize, 1usize)), Just((2, 1))],
        raw in proptest::collection::vec(small(), 3),
    ) {
        let b: Vec<i64> = raw[..p].to_vec();
        let c: Vec<i64> = raw[2..2 + q].to_vec();
        let spec = ContactElementSpec::new(ClassicalAlgebraSpec::sp_pq(p, q), ints(&b), ints(&c));
        let p0 = b.iter().filter(|x| **x == 0).count();
        let q0 = c.iter().filter(|x| **x == 0).count();
        let oracle = (p0 > 0 && q0 > 0) || b.iter().any(|x| *x != 0 && c.iter().any(|y| x.abs() == y.abs()));
        prop_assert_eq!(cp_dim(&spec) > 0, oracle);
        if spec.validate().is_ok() {
            check_valid(&spec)?;
        }
    }
}

#[test]
fn contact_element_lies_in_k() {
    let spec = ContactElementSpec::new(ClassicalAlgebraSpec::su_pq(2, 2), ints(&[1, 2]), ints(&[-1, -2]));
    let c = contact_decomposition(&spec).unwrap();
    assert!(c.k.contains(&c.z));
    let p_part = Subspace::span(c.z.len(), vec![c.z.clone()]);
    assert!(lorhom::linalg::subspace_intersection(&p_part, &c.p).unwrap().is_zero());
    assert!(!vec_is_zero(&c.z));
}
