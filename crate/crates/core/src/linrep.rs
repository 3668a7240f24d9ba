//! Representations of quivers over the rationals, `Hom` and `Ext¹`
//! dimensions, and the one-parameter family of four-subspace
//! representations of `D̃₄`.
//!
//! For representations `M, N` the map
//! `⊕_i Hom(M_i, N_i) → ⊕_{a:i→j} Hom(M_i, N_j)`,
//! `(f_i) ↦ (f_j φ^M_a − φ^N_a f_i)` has kernel `Hom(M, N)` and cokernel
//! `Ext¹(M, N)`, so `dim Hom − dim Ext¹ = ⟨dim M, dim N⟩`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::catalog;
use crate::error::{Error, Result};
use crate::forms::{check_len, DimVector};
use crate::linalg;
use crate::quiver::Quiver;
use crate::rational::{self, Rational};

pub type Matrix = Vec<Vec<Rational>>;

/// A vector space `K^{dims[i]}` per vertex and a matrix per arrow; the
/// matrix of `a: i → j` has `dims[j]` rows and `dims[i]` columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    dims: Vec<usize>,
    matrices: Vec<Matrix>,
}

fn zero_matrix(rows: usize, cols: usize) -> Matrix {
    vec![vec![Rational::zero(); cols]; rows]
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

fn stack(top: Matrix, bottom: Matrix) -> Matrix {
    top.into_iter().chain(bottom).collect()
}

impl Representation {
    /// Checks every matrix shape against `dims`.
    pub fn new(q: &Quiver, dims: Vec<usize>, matrices: Vec<Matrix>) -> Result<Self> {
        if dims.len() != q.vertex_count() {
            return Err(Error::SizeMismatch { expected: q.vertex_count(), actual: dims.len() });
        }
        if matrices.len() != q.arrow_count() {
            return Err(Error::ShapeMismatch(format!(
                "{} matrices for {} arrows",
                matrices.len(),
                q.arrow_count()
            )));
        }
        for (k, (arrow, m)) in q.arrows().iter().zip(&matrices).enumerate() {
            let (rows, cols) = (dims[arrow.target], dims[arrow.source]);
            if m.len() != rows || m.iter().any(|r| r.len() != cols) {
                return Err(Error::ShapeMismatch(format!("arrow {k} needs a {rows}x{cols} matrix")));
            }
        }
        Ok(Representation { dims, matrices })
    }

    /// All maps zero.
    pub fn zero_maps(q: &Quiver, dims: Vec<usize>) -> Result<Self> {
        let matrices = q
            .arrows()
            .iter()
            .map(|a| zero_matrix(*dims.get(a.target).unwrap_or(&0), *dims.get(a.source).unwrap_or(&0)))
            .collect();
        Representation::new(q, dims, matrices)
    }

    /// The simple representation at vertex `i`.
    pub fn simple(q: &Quiver, i: usize) -> Result<Self> {
        let mut dims = vec![0; q.vertex_count()];
        *dims.get_mut(i).ok_or_else(|| Error::InvalidArgument(format!("no vertex {i}")))? = 1;
        Representation::zero_maps(q, dims)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector::from_ints(&self.dims.iter().map(|&d| d as i64).collect::<Vec<_>>())
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `M ⊕ N` with block diagonal maps.
    pub fn direct_sum(&self, q: &Quiver, other: &Representation) -> Result<Representation> {
        check_over(q, self)?;
        check_over(q, other)?;
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let matrices = q
            .arrows()
            .iter()
            .zip(self.matrices.iter().zip(&other.matrices))
            .map(|(arrow, (a, b))| {
                let (a_cols, b_cols) = (self.dims[arrow.source], other.dims[arrow.source]);
                let top = a.iter().map(|row| row.iter().cloned().chain(vec![Rational::zero(); b_cols]));
                let bottom = b.iter().map(|row| vec![Rational::zero(); a_cols].into_iter().chain(row.iter().cloned()));
                top.map(Iterator::collect).chain(bottom.map(Iterator::collect)).collect()
            })
            .collect();
        Representation::new(q, dims, matrices)
    }

    /// `{"dims": {vertex: d}, "matrices": [{"arrow": k, "rows": [[...]]}], "quiver": {...}}`.
    pub fn to_json(&self, q: &Quiver) -> Value {
        let dims: serde_json::Map<String, Value> =
            q.vertices().iter().zip(&self.dims).map(|(v, &d)| (v.clone(), json!(d))).collect();
        let matrices: Vec<Value> = self
            .matrices
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let rows: Vec<Vec<String>> =
                    m.iter().map(|r| r.iter().map(rational::to_canonical_string).collect()).collect();
                json!({"arrow": k, "rows": rows})
            })
            .collect();
        json!({"dims": dims, "matrices": matrices, "quiver": q.to_json()})
    }

    /// Reads a representation document over a known quiver. Vertices missing
    /// from `dims` get dimension 0 and arrows missing from `matrices` get the
    /// zero map.
    pub fn from_json(q: &Quiver, value: &Value) -> Result<Self> {
        let doc: RepresentationDocument = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse { location: "representation".into(), message: e.to_string() })?;
        doc.build(q)
    }

    /// Reads a self-contained representation document whose `"quiver"`
    /// field is either a quiver document or a catalog name such as `"@K_3"`.
    pub fn parse_document(text: &str) -> Result<(Quiver, Representation)> {
        let doc: RepresentationDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        let q = match &doc.quiver {
            Some(Value::String(name)) => catalog::lookup(name).map_err(|e| Error::Parse {
                location: "quiver".into(),
                message: e.to_string(),
            })?,
            Some(v @ Value::Object(_)) => Quiver::from_value(v.clone())?,
            _ => {
                return Err(Error::Parse {
                    location: "quiver".into(),
                    message: "expected a quiver document or a catalog name".into(),
                })
            }
        };
        let rep = doc.build(&q)?;
        Ok((q, rep))
    }
}

#[derive(Deserialize)]
struct RepresentationDocument {
    #[serde(default)]
    quiver: Option<Value>,
    dims: BTreeMap<String, usize>,
    #[serde(default)]
    matrices: Vec<MatrixDocument>,
}

#[derive(Deserialize)]
struct MatrixDocument {
    arrow: usize,
    rows: Vec<Vec<Entry>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

impl RepresentationDocument {
    fn build(&self, q: &Quiver) -> Result<Representation> {
        let mut dims = vec![0; q.vertex_count()];
        for (name, &d) in &self.dims {
            let i = q.vertex_index(name).ok_or_else(|| Error::UnknownVertex {
                id: name.clone(),
                location: "dims".into(),
            })?;
            dims[i] = d;
        }
        let mut rep = Representation::zero_maps(q, dims)?;
        for m in &self.matrices {
            if m.arrow >= q.arrow_count() {
                return Err(Error::NoSuchArrow(m.arrow));
            }
            let rows = m
                .rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|e| match e {
                            Entry::Int(v) => Ok(rational::int(*v)),
                            Entry::Text(t) => rational::parse_rational(t),
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            rep.matrices[m.arrow] = rows;
        }
        Representation::new(q, rep.dims, rep.matrices)
    }
}

fn check_over(q: &Quiver, m: &Representation) -> Result<()> {
    Representation::new(q, m.dims.clone(), m.matrices.clone()).map(|_| ())
}

/// Matrix of the intertwiner map `(f_i) ↦ (f_j φ^M_a − φ^N_a f_i)` with its
/// number of unknowns and equations.
fn intertwiner_system(q: &Quiver, m: &Representation, n: &Representation) -> Result<(Matrix, usize, usize)> {
    check_over(q, m)?;
    check_over(q, n)?;
    // f_i is a dimN_i × dimM_i matrix; unknown (r, c) of f_i sits at offset[i] + r·dimM_i + c.
    let mut offset = Vec::with_capacity(q.vertex_count());
    let mut unknowns = 0;
    for i in 0..q.vertex_count() {
        offset.push(unknowns);
        unknowns += n.dims[i] * m.dims[i];
    }
    let var = |i: usize, r: usize, c: usize| offset[i] + r * m.dims[i] + c;

    let mut rows = Vec::new();
    for (k, arrow) in q.arrows().iter().enumerate() {
        let (i, j) = (arrow.source, arrow.target);
        let (pm, pn) = (&m.matrices[k], &n.matrices[k]);
        for r in 0..n.dims[j] {
            for c in 0..m.dims[i] {
                let mut eq = vec![Rational::zero(); unknowns];
                for t in 0..m.dims[j] {
                    eq[var(j, r, t)] += &pm[t][c];
                }
                for t in 0..n.dims[i] {
                    eq[var(i, t, c)] -= &pn[r][t];
                }
                rows.push(eq);
            }
        }
    }
    let equations = rows.len();
    Ok((rows, unknowns, equations))
}

/// `dim Hom(M, N)`.
pub fn hom_dim(q: &Quiver, m: &Representation, n: &Representation) -> Result<usize> {
    let (system, unknowns, _) = intertwiner_system(q, m, n)?;
    Ok(unknowns - linalg::rank(&system))
}

/// `dim Ext¹(M, N)`.
pub fn ext1_dim(q: &Quiver, m: &Representation, n: &Representation) -> Result<usize> {
    let (system, _, equations) = intertwiner_system(q, m, n)?;
    Ok(equations - linalg::rank(&system))
}

/// `End(M)` is one-dimensional.
pub fn is_brick(q: &Quiver, m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::InvalidArgument("the zero representation is not a brick".into()));
    }
    Ok(hom_dim(q, m, m)? == 1)
}

/// Companion matrix of the monic polynomial `c_0 + c_1 t + … + t^m`:
/// ones below the diagonal and last column `−c`.
pub fn companion_matrix(coefficients: &[i64]) -> Result<Matrix> {
    let m = coefficients.len().checked_sub(1).filter(|&m| m >= 1).ok_or_else(|| {
        Error::InvalidArgument("polynomial must have degree at least 1".into())
    })?;
    if coefficients[m] != 1 {
        return Err(Error::InvalidArgument("polynomial must be monic".into()));
    }
    let mut a = zero_matrix(m, m);
    for i in 1..m {
        a[i][i - 1] = Rational::one();
    }
    for (i, row) in a.iter_mut().enumerate() {
        row[m - 1] = rational::int(-coefficients[i]);
    }
    Ok(a)
}

/// The four-subspace representation of `U_4` (rays `1..4` pointing at the
/// center `0`) with dimension vector `m·(2,1,1,1,1)` and maps
/// `(I;0), (0;I), (I;I), (A;I)`, where `A` is the companion matrix of the
/// monic degree-`m` polynomial with coefficients `c_0, …, c_{m−1}, 1`.
pub fn d4_family(m: usize, coefficients: &[i64]) -> Result<(Quiver, Representation)> {
    if coefficients.len() != m + 1 {
        return Err(Error::InvalidArgument(format!(
            "degree {} polynomial given for m = {m}",
            coefficients.len().saturating_sub(1)
        )));
    }
    let a = companion_matrix(coefficients)?;
    let q = catalog::star(4);
    let matrices = vec![
        stack(identity(m), zero_matrix(m, m)),
        stack(zero_matrix(m, m), identity(m)),
        stack(identity(m), identity(m)),
        stack(a, identity(m)),
    ];
    let rep = Representation::new(&q, vec![2 * m, m, m, m, m], matrices)?;
    Ok((q, rep))
}

/// A representation of dimension `α` with integer entries in `[−3, 3]`
/// drawn from a generator seeded by `seed`.
pub fn random_rep(q: &Quiver, alpha: &DimVector, seed: u64) -> Result<Representation> {
    check_len(q.vertex_count(), alpha)?;
    let dims: Vec<usize> = alpha.to_counts()?.into_iter().map(|d| d as usize).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matrices = q
        .arrows()
        .iter()
        .map(|a| {
            (0..dims[a.target])
                .map(|_| (0..dims[a.source]).map(|_| rational::int(rng.random_range(-3..=3))).collect())
                .collect()
        })
        .collect();
    Representation::new(q, dims, matrices)
}
