//! The Euler form, its symmetrization, the Tits quadratic form, the Cartan
//! matrix and simple reflections. Everything is exact.
//!
//! For a quiver `Q` and vectors `α, β` indexed by its vertices:
//!
//! * `⟨α,β⟩ = Σ_i α_i β_i − Σ_{a:i→j} α_i β_j` (the Euler form),
//! * `(α,β) = ⟨α,β⟩ + ⟨β,α⟩ = αᵀ C β` with `C` the Cartan matrix,
//! * `q(α) = ⟨α,α⟩ = ½ αᵀ C α`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::quiver::{Quiver, VertexSet};
use crate::rational::{self, Rational};

/// A rational vector indexed by the vertices of a fixed quiver.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector(Vec<Rational>);

impl DimVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        DimVector(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        DimVector(entries.iter().map(|&v| rational::int(v)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        DimVector(vec![Rational::zero(); n])
    }

    /// The basis vector `e_i` of length `n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(rational::is_integral)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|v| !v.is_negative())
    }

    /// `|v|`, the sum of the coordinates.
    pub fn total(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn scale(&self, factor: &Rational) -> DimVector {
        DimVector(self.0.iter().map(|v| v * factor).collect())
    }

    pub fn support(&self) -> VertexSet {
        VertexSet::from_indices(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, _)| i)
                .collect(),
        )
    }

    /// The entries as integers, failing on any fractional entry.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        Ok(self.0.iter().map(|v| v.numer().clone()).collect())
    }

    /// The entries as nonnegative machine integers.
    pub fn to_counts(&self) -> Result<Vec<u64>> {
        self.to_integers()?
            .iter()
            .map(|v| u64::try_from(v).map_err(|_| Error::Negative))
            .collect()
    }

    /// Extends a vector on `set` by zeros to a vector on `n` vertices.
    pub fn extend_by_zero(&self, set: &VertexSet, n: usize) -> DimVector {
        let mut out = DimVector::zeros(n);
        for (v, &i) in self.0.iter().zip(set.indices()) {
            out.0[i] = v.clone();
        }
        out
    }

    pub fn restrict(&self, set: &VertexSet) -> DimVector {
        DimVector(set.indices().iter().map(|&i| self.0[i].clone()).collect())
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Index<usize> for DimVector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(rational::to_canonical_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for DimVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational::vec_as_strings::serialize(&self.0, s)
    }
}

/// The symmetric integer Gram matrix of `(·,·)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix(Vec<Vec<i64>>);

impl CartanMatrix {
    /// Wraps an arbitrary square matrix, checking symmetry.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if (0..i).any(|j| rows[i][j] != rows[j][i]) {
                return Err(Error::NotSymmetric);
            }
        }
        Ok(CartanMatrix(rows))
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn principal_submatrix(&self, set: &VertexSet) -> CartanMatrix {
        let idx = set.indices();
        CartanMatrix(
            idx.iter()
                .map(|&i| idx.iter().map(|&j| self.0[i][j]).collect())
                .collect(),
        )
    }

    /// `C · α`.
    pub fn apply(&self, alpha: &DimVector) -> Result<DimVector> {
        check_len(self.size(), alpha)?;
        Ok(DimVector(
            self.0
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(alpha.entries())
                        .filter(|(c, _)| **c != 0)
                        .map(|(&c, a)| rational::int(c) * a)
                        .sum()
                })
                .collect(),
        ))
    }

    /// `αᵀ C β`.
    pub fn pairing(&self, alpha: &DimVector, beta: &DimVector) -> Result<Rational> {
        check_len(self.size(), alpha)?;
        let c_beta = self.apply(beta)?;
        Ok(alpha.entries().iter().zip(c_beta.entries()).map(|(a, b)| a * b).sum())
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

pub(crate) fn check_len(expected: usize, v: &DimVector) -> Result<()> {
    if v.len() != expected {
        return Err(Error::SizeMismatch { expected, actual: v.len() });
    }
    Ok(())
}

/// `⟨α,β⟩ = Σ α_i β_i − Σ_{a:i→j} α_i β_j`.
pub fn euler_form(q: &Quiver, alpha: &DimVector, beta: &DimVector) -> Result<Rational> {
    check_len(q.vertex_count(), alpha)?;
    check_len(q.vertex_count(), beta)?;
    let diagonal: Rational = alpha.entries().iter().zip(beta.entries()).map(|(a, b)| a * b).sum();
    let arrows: Rational = q.arrows().iter().map(|a| &alpha[a.source] * &beta[a.target]).sum();
    Ok(diagonal - arrows)
}

/// `(α,β) = ⟨α,β⟩ + ⟨β,α⟩`.
pub fn symmetric_form(q: &Quiver, alpha: &DimVector, beta: &DimVector) -> Result<Rational> {
    Ok(euler_form(q, alpha, beta)? + euler_form(q, beta, alpha)?)
}

/// The Tits form `q(α) = ⟨α,α⟩`.
pub fn tits_q(q: &Quiver, alpha: &DimVector) -> Result<Rational> {
    euler_form(q, alpha, alpha)
}

/// Diagonal `2 − 2·loops(i)`, off-diagonal `−(arrows between i and j)`.
pub fn cartan_matrix(q: &Quiver) -> CartanMatrix {
    let n = q.vertex_count();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for a in q.arrows() {
        if a.is_loop() {
            c[a.source][a.source] -= 2;
        } else {
            c[a.source][a.target] -= 1;
            c[a.target][a.source] -= 1;
        }
    }
    CartanMatrix(c)
}

/// The simple reflection `s_i(α) = α − (α,e_i) e_i`; undefined at a vertex
/// carrying a loop.
pub fn reflect(q: &Quiver, alpha: &DimVector, i: usize) -> Result<DimVector> {
    check_len(q.vertex_count(), alpha)?;
    if i >= q.vertex_count() {
        return Err(Error::UnknownVertex { id: format!("#{i}"), location: "reflect".into() });
    }
    if q.loops_at(i) > 0 {
        return Err(Error::LoopAtVertex(q.vertex_name(i).to_string()));
    }
    let c = cartan_matrix(q);
    let pairing: Rational = (0..q.vertex_count())
        .map(|j| rational::int(c.entry(i, j)) * &alpha[j])
        .sum();
    let mut out = alpha.clone();
    out.0[i] -= pairing;
    Ok(out)
}

/// Positive real roots with every coordinate at most `bound`, obtained as
/// the closure of `{±e_i}` under simple reflections, exploring only vectors
/// inside the box `|α_i| ≤ bound`. Sorted lexicographically.
pub fn real_roots(q: &Quiver, bound: u64) -> Result<Vec<DimVector>> {
    if q.has_loops() {
        return Err(Error::HasLoops);
    }
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be positive".into()));
    }
    let n = q.vertex_count();
    let c = cartan_matrix(q);
    let bound = i64::try_from(bound).map_err(|_| Error::InvalidArgument("bound too large".into()))?;

    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        for sign in [1, -1] {
            let mut e = vec![0; n];
            e[i] = sign;
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| c.entry(i, j) * v[j]).sum();
            if pairing == 0 {
                continue;
            }
            let mut w = v.clone();
            w[i] -= pairing;
            if w[i].abs() <= bound && !seen.contains(&w) {
                seen.insert(w.clone());
                queue.push_back(w);
            }
        }
    }
    let positive: BTreeSet<Vec<i64>> = seen.into_iter().filter(|v| v.iter().all(|&x| x >= 0)).collect();
    Ok(positive.into_iter().map(|v| DimVector::from_ints(&v)).collect())
}

/// Membership in the fundamental region: `α ≠ 0`, `α ≥ 0`, connected
/// support, and `(α,e_i) ≤ 0` for every vertex.
pub fn in_fundamental_region(q: &Quiver, alpha: &DimVector) -> Result<bool> {
    check_len(q.vertex_count(), alpha)?;
    if !alpha.is_integral() {
        return Err(Error::NotIntegral);
    }
    if alpha.is_zero() || !alpha.is_nonnegative() {
        return Ok(false);
    }
    if !q.induced_subquiver(&alpha.support())?.is_connected() {
        return Ok(false);
    }
    let c_alpha = cartan_matrix(q).apply(alpha)?;
    Ok(c_alpha.entries().iter().all(|v| !v.is_positive()))
}

/// Classification of a vector by the value of the Tits form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootKind {
    /// `q(α) = 1`; a real root if it lies in the Weyl orbit of a simple
    /// root, which only [`real_roots`] certifies.
    RealCandidate,
    /// `q(α) = 0`.
    Isotropic,
    /// `q(α) < 0`.
    Anisotropic,
    /// Any other value of `q`; not a root.
    NotARoot,
}

pub fn root_kind(q: &Quiver, alpha: &DimVector) -> Result<RootKind> {
    let value = tits_q(q, alpha)?;
    Ok(if value.is_one() {
        RootKind::RealCandidate
    } else if value.is_zero() {
        RootKind::Isotropic
    } else if value.is_negative() {
        RootKind::Anisotropic
    } else {
        RootKind::NotARoot
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::{int, ratio};

    fn e(n: usize, i: usize) -> DimVector {
        DimVector::basis(n, i)
    }

    #[test]
    fn euler_form_on_kronecker() {
        let k3 = catalog::kronecker(3);
        assert_eq!(euler_form(&k3, &e(2, 0), &e(2, 1)).unwrap(), int(-3));
        assert_eq!(euler_form(&k3, &e(2, 1), &e(2, 0)).unwrap(), int(0));
        let d4 = catalog::star(4);
        let delta = DimVector::from_ints(&[2, 1, 1, 1, 1]);
        assert_eq!(euler_form(&d4, &delta, &delta).unwrap(), int(0));
        assert!(euler_form(&k3, &e(3, 0), &e(2, 0)).is_err());
    }

    #[test]
    fn tits_form_values() {
        let q = catalog::k3k3();
        assert_eq!(tits_q(&q, &DimVector::from_ints(&[1, 1, 0, 0])).unwrap(), int(-1));
        assert_eq!(tits_q(&catalog::loops(2), &DimVector::from_ints(&[1])).unwrap(), int(-1));
        assert_eq!(tits_q(&q, &DimVector::zeros(4)).unwrap(), int(0));
        let half = DimVector::new(vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(tits_q(&catalog::kronecker(3), &half).unwrap(), ratio(-1, 4));
    }

    #[test]
    fn cartan_matrices() {
        assert_eq!(cartan_matrix(&catalog::kronecker(3)).rows(), [vec![2, -3], vec![-3, 2]]);
        assert_eq!(cartan_matrix(&catalog::loops(2)).rows(), [vec![-2]]);
        let u4 = cartan_matrix(&catalog::star(4));
        assert_eq!(u4.size(), 5);
        for i in 0..5 {
            for j in 0..5 {
                let expected = match (i, j) {
                    _ if i == j => 2,
                    (0, _) | (_, 0) => -1,
                    _ => 0,
                };
                assert_eq!(u4.entry(i, j), expected);
            }
        }
        assert_eq!(CartanMatrix::from_rows(vec![vec![2, 1], vec![0, 2]]), Err(Error::NotSymmetric));
    }

    #[test]
    fn reflections() {
        let k3 = catalog::kronecker(3);
        assert_eq!(reflect(&k3, &e(2, 0), 0).unwrap(), DimVector::from_ints(&[-1, 0]));
        assert_eq!(reflect(&k3, &e(2, 1), 0).unwrap(), DimVector::from_ints(&[3, 1]));
        assert_eq!(
            reflect(&catalog::loops(2), &e(1, 0), 0),
            Err(Error::LoopAtVertex("1".into()))
        );
    }

    #[test]
    fn roots_of_small_quivers() {
        let a2 = real_roots(&catalog::dynkin_a(2), 5).unwrap();
        assert_eq!(
            a2,
            vec![
                DimVector::from_ints(&[0, 1]),
                DimVector::from_ints(&[1, 0]),
                DimVector::from_ints(&[1, 1])
            ]
        );
        assert_eq!(real_roots(&catalog::dynkin_a(3), 5).unwrap().len(), 6);
        let k2: Vec<String> = real_roots(&catalog::kronecker(2), 3)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(k2, ["(0,1)", "(1,0)", "(1,2)", "(2,1)", "(2,3)", "(3,2)"]);
        assert_eq!(real_roots(&catalog::loops(1), 3), Err(Error::HasLoops));
    }

    #[test]
    fn fundamental_region() {
        let k3 = catalog::kronecker(3);
        assert!(in_fundamental_region(&k3, &DimVector::from_ints(&[1, 1])).unwrap());
        assert!(!in_fundamental_region(&catalog::dynkin_a(2), &DimVector::from_ints(&[1, 1])).unwrap());
        assert!(!in_fundamental_region(&k3, &DimVector::zeros(2)).unwrap());
        let disconnected = catalog::k3k3();
        assert!(!in_fundamental_region(&disconnected, &DimVector::from_ints(&[1, 1, 1, 1])).unwrap());
        assert_eq!(
            in_fundamental_region(&k3, &DimVector::new(vec![ratio(1, 2), int(1)])),
            Err(Error::NotIntegral)
        );
    }

    #[test]
    fn root_kinds() {
        let k2 = catalog::kronecker(2);
        assert_eq!(root_kind(&k2, &DimVector::from_ints(&[1, 0])).unwrap(), RootKind::RealCandidate);
        assert_eq!(root_kind(&k2, &DimVector::from_ints(&[1, 1])).unwrap(), RootKind::Isotropic);
        let k3 = catalog::kronecker(3);
        assert_eq!(root_kind(&k3, &DimVector::from_ints(&[1, 1])).unwrap(), RootKind::Anisotropic);
        assert_eq!(root_kind(&k3, &DimVector::from_ints(&[0, 2])).unwrap(), RootKind::NotARoot);
    }
}
