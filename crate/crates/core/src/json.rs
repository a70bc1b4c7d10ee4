//! JSON transport. Rationals travel as strings `"n"` or `"n/d"`.

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::homogeneous::ModelFixture;
use crate::lie::{LieAlgebra, MatrixLieAlgebra};
use crate::linalg::{format_rational, parse_rational, solve, Matrix, Rational, Subspace, Vector};

/// Matrix Lie algebra input: `{"ambient_size": n, "basis": [[["1","0"],…],…]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub ambient_size: usize,
    pub basis: Vec<Vec<Vec<String>>>,
}

impl AlgebraFile {
    pub fn from_algebra(alg: &MatrixLieAlgebra) -> Self {
        AlgebraFile { ambient_size: alg.ambient_size(), basis: alg.basis().iter().map(matrix_strings).collect() }
    }

    pub fn matrices(&self) -> Result<Vec<Matrix>> {
        self.basis
            .iter()
            .enumerate()
            .map(|(i, rows)| {
                let m = parse_matrix(rows)?;
                if m.rows() != self.ambient_size || m.cols() != self.ambient_size {
                    return Err(Error::Dimension(format!(
                        "basis[{i}] is {}x{}, ambient_size is {}",
                        m.rows(),
                        m.cols(),
                        self.ambient_size
                    )));
                }
                Ok(m)
            })
            .collect()
    }

    pub fn build(&self) -> Result<MatrixLieAlgebra> {
        MatrixLieAlgebra::from_basis(self.ambient_size, self.matrices()?)
    }
}

/// Abstract algebra with a reductive split and a metric on `m`:
/// `structure_constants[i][j]` holds the coordinates of `[b_i, b_j]` (only
/// `i < j` is read), `l` and `m` list basis vectors, and `metric` is the Gram
/// matrix of the listed `m` basis.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureFile {
    pub dim: usize,
    pub structure_constants: Vec<Vec<Vec<String>>>,
    pub l: Vec<Vec<String>>,
    pub m: Vec<Vec<String>>,
    pub metric: Vec<Vec<String>>,
}

impl StructureFile {
    pub fn from_fixture(f: &ModelFixture) -> Self {
        StructureFile {
            dim: f.g.dim(),
            structure_constants: f
                .g
                .structure_table()
                .iter()
                .map(|row| row.iter().map(|v| vector_strings(v)).collect())
                .collect(),
            l: f.l.basis().iter().map(|v| vector_strings(v)).collect(),
            m: f.m.basis().iter().map(|v| vector_strings(v)).collect(),
            metric: matrix_strings(&f.metric),
        }
    }

    /// The fixture, with the metric moved to the echelon basis of `m`.
    pub fn build(&self) -> Result<ModelFixture> {
        let d = self.dim;
        let table = self
            .structure_constants
            .iter()
            .map(|row| row.iter().map(|v| parse_vector(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let g = LieAlgebra::from_structure_constants(d, &table)?;
        let vectors = |rows: &[Vec<String>], what: &str| -> Result<Vec<Vector>> {
            rows.iter()
                .map(|r| {
                    let v = parse_vector(r)?;
                    if v.len() != d {
                        return Err(Error::Dimension(format!("{what} vector has length {}, dim is {d}", v.len())));
                    }
                    Ok(v)
                })
                .collect()
        };
        let lv = vectors(&self.l, "l")?;
        let mv = vectors(&self.m, "m")?;
        let l = Subspace::span(d, lv);
        let m = Subspace::span(d, mv.clone());
        if m.dim() != mv.len() {
            return Err(Error::DependentBasis { index: m.dim() });
        }
        let given = parse_matrix(&self.metric)?;
        if given.rows() != mv.len() || given.cols() != mv.len() {
            return Err(Error::Dimension(format!("metric must be {0}x{0}", mv.len())));
        }
        // rows of t express the echelon basis in the listed one
        let frame = Matrix::from_columns(d, &mv);
        let t_rows = m
            .basis()
            .iter()
            .map(|e| solve(&frame, e).map(|x| x.expect("echelon vector lies in the span")))
            .collect::<Result<Vec<_>>>()?;
        let t = Matrix::from_rows(t_rows)?;
        let metric = t.matmul(&given).matmul(&t.transpose());
        Ok(ModelFixture { g, l, m, metric })
    }
}

pub fn parse_vector(v: &[String]) -> Result<Vector> {
    v.iter().map(|s| parse_rational(s)).collect()
}

pub fn parse_matrix(rows: &[Vec<String>]) -> Result<Matrix> {
    let parsed = rows.iter().map(|r| parse_vector(r)).collect::<Result<Vec<_>>>()?;
    if parsed.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(parsed)
}

pub fn vector_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| vector_strings(m.row(i))).collect()
}

/// `serialize_with` adapters.
pub mod ser {
    use super::*;
    use serde::ser::SerializeStruct;

    pub fn rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&format_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn vector<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        vector_strings(v).serialize(s)
    }

    pub fn opt_vector<S: Serializer>(v: &Option<Vector>, s: S) -> std::result::Result<S::Ok, S::Error> {
        v.as_ref().map(|v| vector_strings(v)).serialize(s)
    }

    pub fn matrix<S: Serializer>(m: &Matrix, s: S) -> std::result::Result<S::Ok, S::Error> {
        matrix_strings(m).serialize(s)
    }

    pub fn opt_matrix<S: Serializer>(m: &Option<Matrix>, s: S) -> std::result::Result<S::Ok, S::Error> {
        m.as_ref().map(matrix_strings).serialize(s)
    }

    pub fn subspace<S: Serializer>(sub: &Subspace, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Subspace", 3)?;
        st.serialize_field("ambient", &sub.ambient_dim())?;
        st.serialize_field("dim", &sub.dim())?;
        let basis: Vec<Vec<String>> = sub.basis().iter().map(|v| vector_strings(v)).collect();
        st.serialize_field("basis", &basis)?;
        st.end()
    }

    pub fn opt_subspace<S: Serializer>(sub: &Option<Subspace>, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct W<'a>(#[serde(serialize_with = "subspace")] &'a Subspace);
        sub.as_ref().map(W).serialize(s)
    }

    pub fn subspaces<S: Serializer>(subs: &[Subspace], s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct W<'a>(#[serde(serialize_with = "subspace")] &'a Subspace);
        subs.iter().map(W).collect::<Vec<_>>().serialize(s)
    }

    pub fn opt_pair<S: Serializer>(p: &Option<(Vector, Vector)>, s: S) -> std::result::Result<S::Ok, S::Error> {
        p.as_ref().map(|(a, b)| (vector_strings(a), vector_strings(b))).serialize(s)
    }
}

/// Pretty JSON with a trailing newline; key order follows struct order so
/// output is byte-stable.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    #[test]
    fn algebra_file_roundtrip() {
        let e = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let h = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let f = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        let alg = MatrixLieAlgebra::from_basis(2, vec![e, h, f]).unwrap();
        let file = AlgebraFile::from_algebra(&alg);
        let text = serde_json::to_string(&file).unwrap();
        let back: AlgebraFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.build().unwrap().basis(), alg.basis());
    }

    #[test]
    fn structure_file_reorders_metric() {
        use crate::homogeneous::lorentz_space_form;
        let f = lorentz_space_form(3, crate::linalg::int(1)).unwrap();
        let mut file = StructureFile::from_fixture(&f);
        assert_eq!(file.build().unwrap().metric, f.metric);
        file.m.reverse();
        let g = file.metric.clone();
        let n = g.len();
        file.metric = (0..n).map(|i| (0..n).map(|j| g[n - 1 - i][n - 1 - j].clone()).collect()).collect();
        assert_eq!(file.build().unwrap().metric, f.metric);
    }

    #[test]
    fn bad_entry_is_a_parse_error() {
        let file = AlgebraFile { ambient_size: 1, basis: vec![vec![vec!["x/2".into()]]] };
        assert!(matches!(file.build(), Err(Error::Parse(_))));
        let v = parse_vector(&["-3/6".to_string()]).unwrap();
        assert_eq!(v, vec![frac(-1, 2)]);
    }
}
