//! Decompositions `g = l + ℝZ + m′` with `C_g(Z) = l ⊕ ℝZ`, built from a
//! compact element `Z` of a Cartan subalgebra of `k`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::families::{build_algebra, BuiltAlgebra, ClassicalAlgebraSpec, Family};
use super::realify::{complex_i, left, Unit};
use crate::error::{Error, Result};
use crate::homogeneous::{direct_sum, line, reductive_complement, ReductiveDecomposition};
use crate::json::vector_strings;
use crate::lie::MatrixLieAlgebra;
use crate::linalg::{format_rational, parse_rational, subspace_intersection, Matrix, Rational, Subspace, Vector};

/// Eigenvalue data of a contact element, one entry per coordinate.
///
/// * `su`: `b` on the positive block (`p` entries), `c` on the negative
///   block (`q` entries); `Z = i·diag(b, c)`.
/// * `so`: one value per rotation plane, `⌊p/2⌋` in `b` and `⌊q/2⌋` in `c`.
/// * `sp(p,q)`: `Z = diag(b·i, c·i)` on `ℍ^{p+q}`.
/// * `sp(2n,ℝ)` and `so*(2n)`: `z₁…z_n` in `b`, `c` empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContactElementSpec {
    pub algebra: ClassicalAlgebraSpec,
    #[serde(serialize_with = "crate::json::ser::vector")]
    pub b: Vec<Rational>,
    #[serde(serialize_with = "crate::json::ser::vector")]
    pub c: Vec<Rational>,
}

/// Parses `"1,2;-1"` into `(b, c)`; either side may be empty.
pub fn parse_eigen(s: &str) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let mut parts = s.split(';');
    let side = |t: Option<&str>| -> Result<Vec<Rational>> {
        match t.map(str::trim) {
            None | Some("") => Ok(Vec::new()),
            Some(t) => t.split(',').map(|x| parse_rational(x.trim())).collect(),
        }
    };
    let b = side(parts.next())?;
    let c = side(parts.next())?;
    if parts.next().is_some() {
        return Err(Error::Parse(format!("eigenvalue data has more than one ';': {s}")));
    }
    Ok((b, c))
}

impl ContactElementSpec {
    pub fn new(algebra: ClassicalAlgebraSpec, b: Vec<Rational>, c: Vec<Rational>) -> Self {
        ContactElementSpec { algebra, b, c }
    }

    pub fn parse(algebra: ClassicalAlgebraSpec, eigen: &str) -> Result<Self> {
        let (b, c) = parse_eigen(eigen)?;
        Ok(Self::new(algebra, b, c))
    }

    pub fn eigen_text(&self) -> String {
        let side = |v: &[Rational]| vector_strings(v).join(",");
        if self.c.is_empty() && self.algebra.family.single_parameter() {
            side(&self.b)
        } else {
            format!("{};{}", side(&self.b), side(&self.c))
        }
    }

    pub fn name(&self) -> String {
        format!("{}[{}]", self.algebra.name(), self.eigen_text())
    }

    fn expected_lengths(&self) -> (usize, usize) {
        let (p, q) = (self.algebra.p, self.algebra.q);
        match self.algebra.family {
            Family::SoPq | Family::SoN => (p / 2, q / 2),
            _ => (p, q),
        }
    }

    fn check_lengths(&self) -> Result<()> {
        let (lb, lc) = self.expected_lengths();
        if self.b.len() != lb || self.c.len() != lc {
            return Err(Error::Dimension(format!(
                "{} takes {lb} + {lc} eigenvalues, got {} + {}",
                self.algebra.name(),
                self.b.len(),
                self.c.len()
            )));
        }
        Ok(())
    }

    /// The family constraints on the eigenvalue data, plus the sign conditions
    /// without which `C_p(Z) ≠ 0`; each violation is named.
    pub fn validate(&self) -> Result<()> {
        self.algebra.validate()?;
        self.check_lengths()?;
        let (b, c) = (&self.b, &self.c);
        if b.iter().chain(c).all(Zero::is_zero) {
            return Err(Error::Constraint("Z = 0 violates Z ≠ 0".into()));
        }
        let fail = |m: String| Err(Error::Constraint(m));
        let first_equal = |nonzero_only: bool| {
            b.iter().enumerate().find_map(|(j, x)| {
                c.iter().position(|y| x == y && !(nonzero_only && x.is_zero())).map(|a| (j + 1, a + 1))
            })
        };
        let first_opposite = || {
            b.iter().enumerate().find_map(|(j, x)| {
                c.iter().position(|y| !x.is_zero() && (x + y).is_zero()).map(|a| (j + 1, a + 1))
            })
        };
        match self.algebra.family {
            Family::SuPq | Family::SuN => {
                let s: Rational = b.iter().chain(c).sum();
                if !s.is_zero() {
                    return fail(format!(
                        "Σ b_j dim V_j + Σ c_α dim U_α = {} violates the trace condition Σ = 0",
                        format_rational(&s)
                    ));
                }
                if let Some((j, a)) = first_equal(false) {
                    return fail(format!("b{j} = c{a} violates b_j ≠ c_α"));
                }
            }
            Family::SoPq | Family::SoN => {
                if let Some((j, a)) = first_equal(true) {
                    return fail(format!("b{j} = c{a} violates b_j ≠ c_α"));
                }
                if let Some((j, a)) = first_opposite() {
                    return fail(format!("b{j} = −c{a} gives C_p(Z) ≠ 0 (rotation planes agree up to orientation)"));
                }
                let v0 = self.algebra.p % 2 + 2 * b.iter().filter(|x| x.is_zero()).count();
                let u0 = self.algebra.q % 2 + 2 * c.iter().filter(|x| x.is_zero()).count();
                if v0 > 0 && u0 > 0 {
                    return fail(format!(
                        "dim V₀ = {v0} and dim U₀ = {u0} violate 'one of V₀, U₀ is trivial'"
                    ));
                }
            }
            Family::Sp2nR | Family::SoNH => {
                if let Some(i) = b.iter().position(Zero::is_zero) {
                    return fail(format!("z{} = 0 violates z_i non-zero", i + 1));
                }
                for i in 0..b.len() {
                    if let Some(j) = (i + 1..b.len()).find(|&j| b[i] == b[j]) {
                        return fail(format!("z{} = z{} violates z_i pairwise different", i + 1, j + 1));
                    }
                }
                for i in 0..b.len() {
                    if let Some(j) = (i + 1..b.len()).find(|&j| (&b[i] + &b[j]).is_zero()) {
                        return fail(format!("z{} + z{} = 0 gives C_p(Z) ≠ 0", i + 1, j + 1));
                    }
                }
            }
            Family::SpPq | Family::SpN => {
                if let Some((j, a)) = first_equal(true) {
                    return fail(format!("z{j} = z'{a} violates z_j ≠ z'_α"));
                }
                if let Some((j, a)) = first_opposite() {
                    return fail(format!("z{j} = −z'{a} gives C_p(Z) ≠ 0"));
                }
                let p0 = b.iter().filter(|x| x.is_zero()).count();
                let q0 = c.iter().filter(|x| x.is_zero()).count();
                if p0 > 0 && q0 > 0 {
                    return fail(format!("p₀ = {p0} and q₀ = {q0} violate 'one of p₀, q₀ is zero'"));
                }
            }
        }
        Ok(())
    }

    /// `Z` as a real matrix.
    pub fn element_matrix(&self) -> Result<Matrix> {
        self.check_lengths()?;
        let n = self.algebra.ambient_size();
        let vals: Vec<Rational> = self.b.iter().chain(&self.c).cloned().collect();
        let mut z = Matrix::zeros(n, n);
        match self.algebra.family {
            Family::SuPq | Family::SuN => {
                for (t, v) in vals.iter().enumerate() {
                    z.set_block(2 * t, 2 * t, &complex_i().scale(v));
                }
            }
            Family::SoPq | Family::SoN => {
                let planes = self.b.iter().enumerate().map(|(j, v)| (2 * j, v));
                let planes = planes.chain(self.c.iter().enumerate().map(|(a, v)| (self.algebra.p + 2 * a, v)));
                for (o, v) in planes {
                    z[(o + 1, o)] = v.clone();
                    z[(o, o + 1)] = -v.clone();
                }
            }
            Family::Sp2nR => {
                let p = self.algebra.p;
                for (i, v) in vals.iter().enumerate() {
                    z[(p + i, i)] = v.clone();
                    z[(i, p + i)] = -v.clone();
                }
            }
            Family::SpPq | Family::SpN => {
                for (t, v) in vals.iter().enumerate() {
                    z.set_block(4 * t, 4 * t, &left(Unit::I).scale(v));
                }
            }
            Family::SoNH => {
                for (t, v) in vals.iter().enumerate() {
                    z.set_block(4 * t, 4 * t, &left(Unit::J).scale(v));
                }
            }
        }
        Ok(z)
    }

    /// `dim C_k(Z)` predicted from the eigenvalue multiplicities.
    pub fn expected_centralizer_dim(&self) -> usize {
        let by_value = |v: &[Rational], abs: bool| -> BTreeMap<Rational, usize> {
            let mut m = BTreeMap::new();
            for x in v {
                *m.entry(if abs { x.abs() } else { x.clone() }).or_insert(0) += 1;
            }
            m
        };
        let squares = |m: &BTreeMap<Rational, usize>, skip_zero: bool| -> usize {
            m.iter().filter(|(k, _)| !(skip_zero && k.is_zero())).map(|(_, c)| c * c).sum()
        };
        let zeros = |v: &[Rational]| v.iter().filter(|x| x.is_zero()).count();
        match self.algebra.family {
            Family::SuPq | Family::SuN => {
                squares(&by_value(&self.b, false), false) + squares(&by_value(&self.c, false), false) - 1
            }
            Family::SoPq | Family::SoN => [(&self.b, self.algebra.p), (&self.c, self.algebra.q)]
                .iter()
                .map(|(v, dim)| {
                    let d0 = dim % 2 + 2 * zeros(v);
                    squares(&by_value(v, true), true) + d0 * d0.saturating_sub(1) / 2
                })
                .sum(),
            Family::Sp2nR | Family::SoNH => squares(&by_value(&self.b, false), false),
            Family::SpPq | Family::SpN => [&self.b, &self.c]
                .iter()
                .map(|v| {
                    let m0 = zeros(v);
                    squares(&by_value(v, true), true) + m0 * (2 * m0 + 1)
                })
                .sum(),
        }
    }
}

/// A contact decomposition with the data used to check it.
#[derive(Clone, Debug)]
pub struct ContactDecomposition {
    pub name: String,
    pub algebra: MatrixLieAlgebra,
    pub theta: Matrix,
    pub k: Subspace,
    pub p: Subspace,
    /// `Z` in coordinates of `g`.
    pub z: Vector,
    pub dec: ReductiveDecomposition,
    /// `m′ = m ∩ Z^⊥`.
    pub contact_m_prime: Subspace,
    pub expected_l_dim: usize,
    pub expected_m_prime_dim: usize,
}

/// `Z` in the coordinates of the built algebra.
pub fn contact_element(built: &BuiltAlgebra, spec: &ContactElementSpec) -> Result<Vector> {
    built
        .algebra
        .coordinates(&spec.element_matrix()?)
        .ok_or_else(|| Error::Inconsistent(format!("Z is not an element of {}", built.name)))
}

/// `C_p(Z)`.
pub fn centralizer_in_p(built: &BuiltAlgebra, z: &[Rational]) -> Subspace {
    subspace_intersection(&built.algebra.centralizer_of(z), &built.p).expect("same ambient")
}

/// `C_p(Z)` for the given data without checking the family constraints.
pub fn unchecked_centralizer_in_p(spec: &ContactElementSpec) -> Result<Subspace> {
    let built = build_algebra(&spec.algebra)?;
    let z = contact_element(&built, spec)?;
    Ok(centralizer_in_p(&built, &z))
}

fn witness_text(alg: &MatrixLieAlgebra, v: &[Rational]) -> String {
    let m = alg.element(v);
    let rows: Vec<String> = (0..m.rows()).map(|i| format!("[{}]", vector_strings(m.row(i)).join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

/// Validates the data, checks `C_p(Z) = 0` and builds
/// `l = C_k(Z) ∩ Z^⊥` with its Killing complement.
pub fn contact_decomposition(spec: &ContactElementSpec) -> Result<ContactDecomposition> {
    spec.validate()?;
    let built = build_algebra(&spec.algebra)?;
    let z = contact_element(&built, spec)?;
    let cp = centralizer_in_p(&built, &z);
    if let Some(w) = cp.basis().first() {
        return Err(Error::Constraint(format!(
            "C_p(Z) ≠ 0 (dim {}), witness {}",
            cp.dim(),
            witness_text(&built.algebra, w)
        )));
    }
    let g = &built.algebra;
    let ck = subspace_intersection(&g.centralizer_of(&z), &built.k)?;
    let l = subspace_intersection(&ck, &line(&z).orthogonal(g.killing()))?;
    let dec = reductive_complement(g, &l, Some(&built.theta))?;
    let contact_m_prime = subspace_intersection(&dec.m, &line(&z).orthogonal(g.killing()))?;
    let ck_dim = spec.expected_centralizer_dim();
    Ok(ContactDecomposition {
        name: spec.name(),
        expected_l_dim: ck_dim - 1,
        expected_m_prime_dim: built.dim() - ck_dim,
        algebra: built.algebra,
        theta: built.theta,
        k: built.k,
        p: built.p,
        z,
        dec,
        contact_m_prime,
    })
}

/// `g = g₁ ⊕ ⋯ ⊕ g_r` with `Z = Z₁ + ⋯ + Z_r` and
/// `l = Σ lᵢ + (Z^⊥ ∩ span{Zᵢ})`.
pub fn semisimple_sum_decomposition(specs: &[ContactElementSpec]) -> Result<ContactDecomposition> {
    match specs.len() {
        0 => return Err(Error::Range("no summands".into())),
        1 => return contact_decomposition(&specs[0]),
        _ => {}
    }
    let parts = specs.iter().map(contact_decomposition).collect::<Result<Vec<_>>>()?;
    if parts.iter().any(|c| c.z.iter().all(Zero::is_zero)) {
        return Err(Error::Constraint("all Z_i are non-zero".into()));
    }
    let sizes: Vec<usize> = parts.iter().map(|c| c.algebra.ambient_size()).collect();
    let n: usize = sizes.iter().sum();
    let dim: usize = parts.iter().map(|c| c.algebra.dim()).sum();
    let mut basis = Vec::with_capacity(dim);
    let mut offset = 0;
    for c in &parts {
        for b in c.algebra.basis() {
            let mut m = Matrix::zeros(n, n);
            m.set_block(offset, offset, b);
            basis.push(m);
        }
        offset += c.algebra.ambient_size();
    }
    let algebra = MatrixLieAlgebra::from_basis(n, basis)?;
    // coordinates concatenate
    let mut starts = Vec::new();
    let mut s = 0;
    for c in &parts {
        starts.push(s);
        s += c.algebra.dim();
    }
    let embed = |i: usize, v: &[Rational]| -> Vector {
        let mut out = vec![Rational::zero(); dim];
        out[starts[i]..starts[i] + v.len()].clone_from_slice(v);
        out
    };
    let embed_sub = |i: usize, sub: &Subspace| -> Vec<Vector> { sub.basis().iter().map(|v| embed(i, v)).collect() };
    let zs: Vec<Vector> = parts.iter().enumerate().map(|(i, c)| embed(i, &c.z)).collect();
    let z: Vector = zs.iter().fold(vec![Rational::zero(); dim], |acc, v| crate::linalg::vec_add(&acc, v));
    let z_perp = line(&z).orthogonal(algebra.killing());
    let span_z = Subspace::span(dim, zs.clone());
    let mut l_vectors: Vec<Vector> = Vec::new();
    for (i, c) in parts.iter().enumerate() {
        l_vectors.extend(embed_sub(i, &c.dec.l));
    }
    let l = direct_sum(&Subspace::span(dim, l_vectors), &subspace_intersection(&span_z, &z_perp)?);
    let theta = Matrix::block_diag(&parts.iter().map(|c| c.theta.clone()).collect::<Vec<_>>());
    let k = Subspace::span(dim, parts.iter().enumerate().flat_map(|(i, c)| embed_sub(i, &c.k)).collect());
    let p = Subspace::span(dim, parts.iter().enumerate().flat_map(|(i, c)| embed_sub(i, &c.p)).collect());
    let dec = reductive_complement(&algebra, &l, Some(&theta))?;
    let contact_m_prime = subspace_intersection(&dec.m, &z_perp)?;
    let expected_l_dim = parts.iter().map(|c| c.expected_l_dim).sum::<usize>() + parts.len() - 1;
    Ok(ContactDecomposition {
        name: parts.iter().map(|c| c.name.clone()).collect::<Vec<_>>().join(" + "),
        expected_m_prime_dim: dim - expected_l_dim - 1,
        expected_l_dim,
        algebra,
        theta,
        k,
        p,
        z,
        dec,
        contact_m_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn eigen_parsing() {
        let (b, c) = parse_eigen("1, 2 ;-1/2").unwrap();
        assert_eq!(b, ints(&[1, 2]));
        assert_eq!(c, vec![crate::linalg::frac(-1, 2)]);
        assert_eq!(parse_eigen("1,2").unwrap().1, Vec::<Rational>::new());
        assert!(parse_eigen("1;2;3").is_err());
    }

    #[test]
    fn sp4r_generic() {
        let spec = ContactElementSpec::new(ClassicalAlgebraSpec::sp2n_r(2), ints(&[1, 2]), vec![]);
        let c = contact_decomposition(&spec).unwrap();
        assert_eq!(c.dec.l.dim(), 1);
        assert_eq!(c.contact_m_prime.dim(), c.expected_m_prime_dim);
    }

    #[test]
    fn named_violations() {
        let spec = ContactElementSpec::new(ClassicalAlgebraSpec::su_pq(2, 1), ints(&[1, -2]), ints(&[1]));
        let err = spec.validate().unwrap_err().to_string();
        assert!(err.contains("b1 = c1"), "{err}");
        assert!(!unchecked_centralizer_in_p(&spec).unwrap().is_zero());
        let spec = ContactElementSpec::new(ClassicalAlgebraSpec::sp2n_r(2), ints(&[1, -1]), vec![]);
        let err = spec.validate().unwrap_err().to_string();
        assert!(err.contains("z1 + z2 = 0"), "{err}");
        assert!(!unchecked_centralizer_in_p(&spec).unwrap().is_zero());
        assert!(matches!(contact_decomposition(&spec), Err(Error::Constraint(_))));
    }

    #[test]
    fn centralizer_dimension_formula() {
        for (alg, b, c) in [
            (ClassicalAlgebraSpec::su_pq(2, 1), vec![1, 2], vec![-3]),
            (ClassicalAlgebraSpec::so_pq(2, 2), vec![1], vec![2]),
            (ClassicalAlgebraSpec::sp_pq(1, 1), vec![1], vec![2]),
            (ClassicalAlgebraSpec::so_n_h(2), vec![1, 2], vec![]),
        ] {
            let spec = ContactElementSpec::new(alg, ints(&b), ints(&c));
            let d = contact_decomposition(&spec).unwrap();
            assert_eq!(d.dec.l.dim(), d.expected_l_dim, "{}", spec.name());
            assert_eq!(d.contact_m_prime.dim(), d.expected_m_prime_dim, "{}", spec.name());
        }
    }
}
