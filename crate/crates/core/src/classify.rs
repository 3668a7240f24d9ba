//! Representation type from the definiteness of the Cartan matrix, null
//! roots of tame quivers, and Dynkin-name recognition.
//!
//! A connected quiver is of finite type iff `C_Q` is positive definite,
//! tame iff it is positive semidefinite and singular, and wild otherwise.
//! The Dynkin recognizer never feeds into that decision; it exists to
//! cross-check it.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{cartan_matrix, tits_q, CartanMatrix, DimVector};
use crate::linalg;
use crate::quiver::{Quiver, VertexSet};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RepType {
    Finite,
    Tame,
    Wild,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepType::Finite => "finite",
            RepType::Tame => "tame",
            RepType::Wild => "wild",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefiniteSingular,
    Indefinite,
}

/// Definiteness of a symmetric integer matrix by symmetric fraction-free
/// elimination with diagonal pivoting.
///
/// Each step pivots on a positive diagonal entry. With none left, a
/// negative diagonal entry or a nonzero entry in the remaining block means
/// the matrix is indefinite; an all-zero block contributes zero pivots.
pub fn symmetric_definiteness(rows: &[Vec<BigInt>]) -> Result<Definiteness> {
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::ShapeMismatch(format!("row {i} has {} entries, expected {n}", row.len())));
        }
        if (0..i).any(|j| rows[i][j] != rows[j][i]) {
            return Err(Error::NotSymmetric);
        }
    }
    let mut m = rows.to_vec();
    let mut active: Vec<usize> = (0..n).collect();
    let mut prev = BigInt::one();
    let mut singular = false;
    while !active.is_empty() {
        let Some(pos) = active.iter().position(|&k| m[k][k].is_positive()) else {
            if active.iter().any(|&k| m[k][k].is_negative()) {
                return Ok(Definiteness::Indefinite);
            }
            if active.iter().any(|&i| active.iter().any(|&j| !m[i][j].is_zero())) {
                return Ok(Definiteness::Indefinite);
            }
            singular = true;
            break;
        };
        let k = active.remove(pos);
        let pivot = m[k][k].clone();
        // Entries are bordered minors of the permuted matrix, so the
        // division by the previous pivot is exact and signs are preserved.
        for &i in &active {
            for &j in &active {
                m[i][j] = (&pivot * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = pivot;
    }
    Ok(if singular {
        Definiteness::PositiveSemidefiniteSingular
    } else {
        Definiteness::PositiveDefinite
    })
}

pub fn definiteness(c: &CartanMatrix) -> Definiteness {
    symmetric_definiteness(&linalg::to_bigint_matrix(c.rows())).expect("Cartan matrices are symmetric")
}

fn type_of(d: Definiteness) -> RepType {
    match d {
        Definiteness::PositiveDefinite => RepType::Finite,
        Definiteness::PositiveSemidefiniteSingular => RepType::Tame,
        Definiteness::Indefinite => RepType::Wild,
    }
}

/// Representation type of one connected component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    #[serde(rename = "component_vertices")]
    pub vertex_names: Vec<String>,
    #[serde(skip)]
    pub vertices: VertexSet,
    #[serde(rename = "type")]
    pub rep_type: RepType,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dynkin_name: Option<DynkinName>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub null_root: Option<DimVector>,
}

/// Per-component types plus the aggregate (wild beats tame beats finite).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepTypeReport {
    pub components: Vec<ComponentReport>,
    pub aggregate: RepType,
}

/// Classifies every connected component of `q`.
pub fn rep_type(q: &Quiver) -> RepTypeReport {
    let c = cartan_matrix(q);
    let components: Vec<ComponentReport> = q
        .connected_components()
        .into_iter()
        .map(|set| {
            let sub = q.induced_subquiver(&set).expect("component is a subset");
            let rep_type = type_of(definiteness(&c.principal_submatrix(&set)));
            let null_root = (rep_type == RepType::Tame).then(|| null_root(&sub).expect("tame component"));
            ComponentReport {
                vertex_names: sub.vertices().to_vec(),
                vertices: set,
                rep_type,
                dynkin_name: dynkin_name(&sub),
                null_root,
            }
        })
        .collect();
    let aggregate = components.iter().map(|c| c.rep_type).max().unwrap_or(RepType::Finite);
    RepTypeReport { components, aggregate }
}

/// Type of a connected quiver; errors when `q` is disconnected or empty.
pub fn connected_rep_type(q: &Quiver) -> Result<RepType> {
    if !q.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(type_of(definiteness(&cartan_matrix(q))))
}

/// True when some connected component of `q` is wild.
pub fn is_wild(q: &Quiver) -> bool {
    let c = cartan_matrix(q);
    q.connected_components()
        .iter()
        .any(|set| definiteness(&c.principal_submatrix(set)) == Definiteness::Indefinite)
}

/// True when every connected component of `q` is wild (and `q` is nonempty).
pub fn all_components_wild(q: &Quiver) -> bool {
    let c = cartan_matrix(q);
    let comps = q.connected_components();
    !comps.is_empty()
        && comps
            .iter()
            .all(|set| definiteness(&c.principal_submatrix(set)) == Definiteness::Indefinite)
}

/// The null root of a connected tame quiver: the generator of `ker C_Q`
/// with positive entries and minimum entry 1.
pub fn null_root(q: &Quiver) -> Result<DimVector> {
    match connected_rep_type(q)? {
        RepType::Tame => {}
        RepType::Wild => return Err(Error::Wild("null root undefined")),
        RepType::Finite => return Err(Error::NotTame),
    }
    let c = cartan_matrix(q);
    let rows: Vec<Vec<Rational>> = c
        .rows()
        .iter()
        .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
        .collect();
    let kernel = linalg::nullspace(&rows, q.vertex_count());
    let [v] = kernel.as_slice() else {
        return Err(Error::Internal(format!("kernel of C_Q has dimension {}", kernel.len())));
    };
    let denominators = v.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let scaled: Vec<Rational> = v.iter().map(|r| r * Rational::from_integer(denominators.clone())).collect();
    let min = scaled
        .iter()
        .min_by_key(|r| r.abs())
        .cloned()
        .ok_or_else(|| Error::Internal("empty kernel vector".into()))?;
    if min.is_zero() {
        return Err(Error::Internal("null root has a zero entry".into()));
    }
    let delta = DimVector::new(scaled.iter().map(|r| r / &min).collect());
    let ok = delta.is_integral()
        && delta.entries().iter().all(|v| v >= &Rational::one())
        && delta.entries().iter().any(One::is_one)
        && tits_q(q, &delta)?.is_zero();
    if !ok {
        return Err(Error::Internal(format!("null root candidate {delta} fails its postcondition")));
    }
    Ok(delta)
}

/// Names of Dynkin and extended Dynkin diagrams. `AffineA(0)` is the
/// one-loop quiver and `AffineA(1)` the double edge `K_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DynkinName {
    A(usize),
    D(usize),
    E(usize),
    AffineA(usize),
    AffineD(usize),
    AffineE(usize),
}

impl DynkinName {
    pub fn is_extended(&self) -> bool {
        matches!(self, DynkinName::AffineA(_) | DynkinName::AffineD(_) | DynkinName::AffineE(_))
    }

    /// Catalog-style spelling, e.g. `Dt_4`.
    pub fn ascii(&self) -> String {
        match *self {
            DynkinName::A(n) => format!("A_{n}"),
            DynkinName::D(n) => format!("D_{n}"),
            DynkinName::E(n) => format!("E_{n}"),
            DynkinName::AffineA(n) => format!("At_{n}"),
            DynkinName::AffineD(n) => format!("Dt_{n}"),
            DynkinName::AffineE(n) => format!("Et_{n}"),
        }
    }
}

fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap())
        .collect()
}

impl fmt::Display for DynkinName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (letter, n, tilde) = match *self {
            DynkinName::A(n) => ('A', n, false),
            DynkinName::D(n) => ('D', n, false),
            DynkinName::E(n) => ('E', n, false),
            DynkinName::AffineA(n) => ('A', n, true),
            DynkinName::AffineD(n) => ('D', n, true),
            DynkinName::AffineE(n) => ('E', n, true),
        };
        write!(f, "{letter}{}{}", if tilde { "\u{303}" } else { "" }, subscript(n))
    }
}

impl Serialize for DynkinName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Recognizes connected Dynkin and extended Dynkin diagrams from the shape
/// of the underlying graph. Returns `None` for anything else, including
/// every quiver with multiple edges or loops other than `K_2` and `L_1`.
pub fn dynkin_name(q: &Quiver) -> Option<DynkinName> {
    let n = q.vertex_count();
    if n == 0 || !q.is_connected() {
        return None;
    }
    if n == 1 {
        return match q.arrow_count() {
            0 => Some(DynkinName::A(1)),
            1 => Some(DynkinName::AffineA(0)),
            _ => None,
        };
    }
    if q.has_loops() {
        return None;
    }
    if n == 2 && q.edge_multiplicity(0, 1) == 2 {
        return Some(DynkinName::AffineA(1));
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in q.arrows() {
        if adj[a.source].contains(&a.target) {
            return None;
        }
        adj[a.source].push(a.target);
        adj[a.target].push(a.source);
    }
    let edges = q.arrow_count();
    let degree: Vec<usize> = adj.iter().map(Vec::len).collect();

    if edges == n {
        return degree.iter().all(|&d| d == 2).then_some(DynkinName::AffineA(n - 1));
    }
    if edges != n - 1 {
        return None;
    }

    let branches: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();
    let arm_length = |from: usize, first: usize| {
        let (mut prev, mut cur, mut len) = (from, first, 1);
        while degree[cur] == 2 {
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
            len += 1;
        }
        len
    };
    match branches.as_slice() {
        [] => Some(DynkinName::A(n)),
        [b] if degree[*b] == 3 => {
            let mut arms: Vec<usize> = adj[*b].iter().map(|&v| arm_length(*b, v)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Some(DynkinName::D(k + 3)),
                [1, 2, 2] => Some(DynkinName::E(6)),
                [1, 2, 3] => Some(DynkinName::E(7)),
                [1, 2, 4] => Some(DynkinName::E(8)),
                [2, 2, 2] => Some(DynkinName::AffineE(6)),
                [1, 3, 3] => Some(DynkinName::AffineE(7)),
                [1, 2, 5] => Some(DynkinName::AffineE(8)),
                _ => None,
            }
        }
        [b] if degree[*b] == 4 && n == 5 => Some(DynkinName::AffineD(4)),
        [b1, b2] if degree[*b1] == 3 && degree[*b2] == 3 => {
            let leaves = |b: usize| adj[b].iter().filter(|&&v| degree[v] == 1).count();
            (leaves(*b1) == 2 && leaves(*b2) == 2).then_some(DynkinName::AffineD(n - 1))
        }
        _ => None,
    }
}

/// `q` is wild and no proper induced subquiver is wild.
///
/// Wildness is inherited by induced superquivers, so only the subquivers
/// missing a single vertex need checking.
pub fn is_minimal_wild_quiver(q: &Quiver) -> bool {
    if !is_wild(q) {
        return false;
    }
    let n = q.vertex_count();
    (0..n).all(|drop| {
        let keep = VertexSet::from_indices((0..n).filter(|&v| v != drop).collect());
        !is_wild(&q.induced_subquiver(&keep).expect("subset"))
    })
}

/// `q` is wild and removing any single arrow occurrence leaves a quiver
/// that is not wild.
pub fn is_minimal_wild_graph(q: &Quiver) -> bool {
    is_wild(q)
        && (0..q.arrow_count()).all(|a| !is_wild(&q.remove_arrow(a).expect("arrow index in range")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn definiteness_examples() {
        let d = |rows: &[&[i64]]| symmetric_definiteness(&big(rows)).unwrap();
        assert_eq!(d(&[&[2, -1], &[-1, 2]]), Definiteness::PositiveDefinite);
        assert_eq!(d(&[&[2, -2], &[-2, 2]]), Definiteness::PositiveSemidefiniteSingular);
        assert_eq!(d(&[&[2, -3], &[-3, 2]]), Definiteness::Indefinite);
        assert_eq!(d(&[&[0, 1], &[1, 0]]), Definiteness::Indefinite);
        assert_eq!(d(&[&[0, 0], &[0, 3]]), Definiteness::PositiveSemidefiniteSingular);
        assert_eq!(d(&[&[-2]]), Definiteness::Indefinite);
        assert_eq!(d(&[]), Definiteness::PositiveDefinite);
        assert_eq!(symmetric_definiteness(&big(&[&[1, 2], &[0, 1]])), Err(Error::NotSymmetric));
    }

    #[test]
    fn rep_types() {
        assert_eq!(rep_type(&catalog::dynkin_a(2)).aggregate, RepType::Finite);
        assert_eq!(rep_type(&catalog::kronecker(2)).aggregate, RepType::Tame);
        assert_eq!(rep_type(&catalog::loops(2)).aggregate, RepType::Wild);
        let mixed = catalog::kronecker(3).disjoint_union(&catalog::kronecker(2), "'");
        let report = rep_type(&mixed);
        assert_eq!(report.components.len(), 2);
        assert_eq!(report.components[0].rep_type, RepType::Wild);
        assert_eq!(report.components[1].rep_type, RepType::Tame);
        assert_eq!(report.aggregate, RepType::Wild);
    }

    #[test]
    fn null_roots() {
        assert_eq!(null_root(&catalog::kronecker(2)).unwrap(), DimVector::from_ints(&[1, 1]));
        assert_eq!(null_root(&catalog::star(4)).unwrap(), DimVector::from_ints(&[2, 1, 1, 1, 1]));
        assert_eq!(null_root(&catalog::loops(1)).unwrap(), DimVector::from_ints(&[1]));
        assert_eq!(null_root(&catalog::kronecker(3)), Err(Error::Wild("null root undefined")));
        assert_eq!(null_root(&catalog::dynkin_a(3)), Err(Error::NotTame));
        assert_eq!(null_root(&catalog::k3k3()), Err(Error::NotConnected));
    }

    #[test]
    fn dynkin_names() {
        assert_eq!(dynkin_name(&catalog::star(4)), Some(DynkinName::AffineD(4)));
        assert_eq!(dynkin_name(&catalog::star(4)).unwrap().to_string(), "D̃₄");
        assert_eq!(dynkin_name(&catalog::dynkin_a(3)), Some(DynkinName::A(3)));
        assert_eq!(dynkin_name(&catalog::kronecker(3)), None);
        assert_eq!(dynkin_name(&catalog::kronecker(2)), Some(DynkinName::AffineA(1)));
        assert_eq!(dynkin_name(&catalog::loops(1)), Some(DynkinName::AffineA(0)));
        for n in 4..=9 {
            assert_eq!(dynkin_name(&catalog::dynkin_d(n)), Some(DynkinName::D(n)));
            assert_eq!(dynkin_name(&catalog::affine_d(n)), Some(DynkinName::AffineD(n)));
        }
        for n in 6..=8 {
            assert_eq!(dynkin_name(&catalog::dynkin_e(n)), Some(DynkinName::E(n)));
            assert_eq!(dynkin_name(&catalog::affine_e(n)), Some(DynkinName::AffineE(n)));
        }
        for n in 2..=8 {
            assert_eq!(dynkin_name(&catalog::affine_a(n)), Some(DynkinName::AffineA(n)));
        }
        assert_eq!(dynkin_name(&catalog::e8tt()), None);
        assert_eq!(dynkin_name(&catalog::k3k3()), None);
    }

    #[test]
    fn e8tt_minus_last_vertex_is_affine_e8() {
        let q = catalog::e8tt();
        let keep = VertexSet::from_indices((0..9).collect());
        let sub = q.induced_subquiver(&keep).unwrap();
        assert_eq!(connected_rep_type(&sub).unwrap(), RepType::Tame);
        assert_eq!(dynkin_name(&sub), Some(DynkinName::AffineE(8)));
    }

    #[test]
    fn minimal_wild() {
        assert!(is_minimal_wild_quiver(&catalog::kronecker(5)));
        assert!(is_minimal_wild_quiver(&catalog::e8tt()));
        assert!(!is_minimal_wild_quiver(&catalog::k3k3()));
        assert!(is_minimal_wild_graph(&catalog::kronecker(3)));
        assert!(!is_minimal_wild_graph(&catalog::kronecker(4)));
        assert!(is_minimal_wild_quiver(&catalog::kronecker(4)));
        assert!(is_minimal_wild_graph(&catalog::loops(2)));
        assert!(!is_minimal_wild_graph(&catalog::loops(3)));
        assert!(!is_minimal_wild_graph(&catalog::kronecker(2)));
    }
}
