//! Critical points of the Tits form on the simplex and the wild growth
//! coefficient `Λ_Q = max { −q(α) : α ≥ 0, |α| = 1 }`.
//!
//! On a disjoint union of wild connected quivers the Cartan matrix is
//! invertible, and the only candidate critical point of `q` on the
//! hyperplane `|α| = 1` is `α = x / |x|` with `x = C⁻¹·(1,…,1)`; its critical
//! value is `q(α) = −λ` with `λ = −1 / (2|x|)`. `Λ_Q` is the largest such
//! `λ` over the connected wild induced subquivers whose critical point is
//! strictly positive with `λ > 0` (the effective ones).

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{self, Definiteness};
use crate::error::{Error, Result};
use crate::forms::{cartan_matrix, CartanMatrix, DimVector};
use crate::linalg;
use crate::quiver::{Quiver, VertexSet};
use crate::rational::{self, Rational};

/// The critical point of `q` on `|α| = 1` together with its multiplier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalPoint {
    pub alpha: DimVector,
    #[serde(with = "rational::as_string")]
    pub lambda: Rational,
}

impl CriticalPoint {
    /// Strictly positive coordinates and positive `λ`.
    pub fn is_effective(&self) -> bool {
        self.lambda.is_positive() && self.alpha.entries().iter().all(Signed::is_positive)
    }

    /// Least `m ≥ 1` with `m·α` integral.
    pub fn minimal_multiple(&self) -> BigInt {
        rational::common_denominator(self.alpha.entries())
    }
}

/// Solves `C x = (1,…,1)` and normalizes. `Err(Singular)` when `C` is not
/// invertible, `Ok(None)` when `|x| = 0`.
fn critical_point_of(c: &CartanMatrix) -> Result<Option<CriticalPoint>> {
    let n = c.size();
    let ones = vec![BigInt::one(); n];
    let x = linalg::bareiss_solve(&linalg::to_bigint_matrix(c.rows()), &ones).ok_or(Error::Singular)?;
    let total: Rational = x.iter().sum();
    if total.is_zero() {
        return Ok(None);
    }
    let alpha = DimVector::new(x.iter().map(|v| v / &total).collect());
    let lambda = -(Rational::one() / (rational::int(2) * &total));
    Ok(Some(CriticalPoint { alpha, lambda }))
}

fn require_all_wild(q: &Quiver) -> Result<()> {
    if q.is_empty() {
        return Err(Error::NotWild);
    }
    let c = cartan_matrix(q);
    for set in q.connected_components() {
        if classify::definiteness(&c.principal_submatrix(&set)) != Definiteness::Indefinite {
            return Err(Error::ComponentNotWild(q.format_set(&set)));
        }
    }
    Ok(())
}

/// The critical point of `q_Q` on `H_Q`. Requires every connected
/// component of `q` to be wild.
pub fn critical_point(q: &Quiver) -> Result<Option<CriticalPoint>> {
    require_all_wild(q)?;
    critical_point_of(&cartan_matrix(q))
}

/// The critical point exists, lies in the open simplex, and `λ > 0`.
pub fn is_effective(q: &Quiver) -> Result<bool> {
    Ok(critical_point(q)?.is_some_and(|cp| cp.is_effective()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaOptions {
    /// Largest quiver accepted by the exhaustive subset enumeration.
    pub max_vertices: usize,
}

impl Default for LambdaOptions {
    fn default() -> Self {
        LambdaOptions { max_vertices: 20 }
    }
}

/// `Λ_Q` with an effective connected wild subquiver attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaReport {
    pub lambda_max: Rational,
    /// Vertex set of the witness subquiver, in the ambient quiver.
    pub witness: VertexSet,
    pub witness_names: Vec<String>,
    /// Critical point of the witness, indexed by the witness's vertices.
    pub witness_point: CriticalPoint,
}

impl Serialize for LambdaReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LambdaReport", 3)?;
        st.serialize_field("alpha", &self.witness_point.alpha)?;
        st.serialize_field("lambda", &rational::to_canonical_string(&self.lambda_max))?;
        st.serialize_field("witness_vertices", &self.witness_names)?;
        st.end()
    }
}

pub fn lambda_max(q: &Quiver) -> Result<LambdaReport> {
    lambda_max_with(q, &LambdaOptions::default())
}

/// Better candidate first: larger `λ`, then the lexicographically smaller
/// vertex set.
fn compare_candidates(a: &(Rational, VertexSet, CriticalPoint), b: &(Rational, VertexSet, CriticalPoint)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1))
}

/// `Λ_Q` by exhaustive enumeration of vertex subsets: every connected wild
/// induced subquiver is solved for its critical point and the effective ones
/// compete on `λ`. Ties go to the lexicographically smallest vertex set, so
/// the result does not depend on the parallel schedule.
pub fn lambda_max_with(q: &Quiver, options: &LambdaOptions) -> Result<LambdaReport> {
    let n = q.vertex_count();
    let cap = options.max_vertices.min(63);
    if n > cap {
        return Err(Error::TooManyVertices { actual: n, cap });
    }
    if !classify::is_wild(q) {
        return Err(Error::NotWild);
    }
    let c = cartan_matrix(q);
    let neighbors = q.neighbor_masks();

    let best = (1u64..1u64 << n)
        .into_par_iter()
        .filter(|&mask| mask_is_connected(mask, &neighbors))
        .filter_map(|mask| {
            let set = VertexSet::from_mask(mask);
            let sub = c.principal_submatrix(&set);
            if classify::definiteness(&sub) != Definiteness::Indefinite {
                return None;
            }
            let cp = critical_point_of(&sub).ok()??;
            cp.is_effective().then(|| (cp.lambda.clone(), set, cp))
        })
        .min_by(compare_candidates);

    let (lambda, witness, witness_point) =
        best.ok_or_else(|| Error::Internal("wild quiver without an effective subquiver".into()))?;
    if !lambda.is_positive() {
        return Err(Error::Internal("Λ_Q is not positive".into()));
    }
    let witness_names = witness.indices().iter().map(|&i| q.vertex_name(i).to_string()).collect();
    Ok(LambdaReport { lambda_max: lambda, witness, witness_names, witness_point })
}

pub(crate) fn mask_is_connected(mask: u64, neighbors: &[u64]) -> bool {
    if mask == 0 {
        return false;
    }
    let mut reached = mask & mask.wrapping_neg();
    let mut frontier = reached;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = neighbors[v] & mask & !reached;
        reached |= new;
        frontier |= new;
    }
    reached == mask
}

/// A Schur root `m·α_{Q'}` built from an effective subquiver `Q'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurRoot {
    /// `m·α_{Q'}` extended by zeros to all of `Q`.
    pub vector: DimVector,
    #[serde(skip)]
    pub support: VertexSet,
    pub multiple: u64,
}

/// `m·α_{Q'}` for the effective connected wild subquiver on `set`,
/// certified by `(m·α, e_i) < 0` for every vertex `i` of the subquiver,
/// which puts it in the interior of the fundamental region.
pub fn schur_root_from_effective(q: &Quiver, set: &VertexSet, m: u64) -> Result<SchurRoot> {
    if m == 0 {
        return Err(Error::InvalidArgument("multiple must be positive".into()));
    }
    let sub = q.induced_subquiver(set)?;
    if !sub.is_connected() {
        return Err(Error::NotConnected);
    }
    let cp = critical_point(&sub)?.filter(CriticalPoint::is_effective).ok_or(Error::NotEffective)?;
    let scaled = cp.alpha.scale(&Rational::from_integer(m.into()));
    if !scaled.is_integral() {
        return Err(Error::NotIntegral);
    }
    let pairings = cartan_matrix(&sub).apply(&scaled)?;
    if !pairings.entries().iter().all(Signed::is_negative) {
        return Err(Error::Internal(format!("{scaled} is not in the interior of the fundamental region")));
    }
    Ok(SchurRoot { vector: scaled.extend_by_zero(set, q.vertex_count()), support: set.clone(), multiple: m })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridOptions {
    /// Maximum number of search nodes before giving up.
    pub node_budget: u64,
}

impl Default for GridOptions {
    fn default() -> Self {
        GridOptions { node_budget: 5_000_000 }
    }
}

pub fn grid_oracle(q: &Quiver, n: u64) -> Result<Rational> {
    grid_oracle_with(q, n, &GridOptions::default())
}

/// `max −q(k/N)` over the lattice points `k ≥ 0`, `Σk = N` of the simplex.
///
/// This is an exact depth-first branch and bound over the coordinates in
/// vertex order. A partial assignment is pruned when the minimum of `q`
/// over the real completions with the right coordinate sum (nonnegativity
/// dropped) cannot beat the incumbent; that minimum is finite whenever `q`
/// is positive definite on the sum-zero directions of the unassigned
/// coordinates, and is found from the Lagrange system of the restriction.
/// Otherwise nothing is pruned at that depth. The answer is always a value
/// of `−q` at an actual grid point.
pub fn grid_oracle_with(q: &Quiver, n: u64, options: &GridOptions) -> Result<Rational> {
    if q.is_empty() {
        return Err(Error::InvalidArgument("grid oracle needs a nonempty quiver".into()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("grid size must be positive".into()));
    }
    let c = cartan_matrix(q);
    let search = GridSearch::new(&c, options.node_budget);
    let min_q = search.run(n)?;
    let n_sq = Rational::from_integer(BigInt::from(n) * BigInt::from(n));
    Ok(-min_q / n_sq)
}

/// Per-depth data: at depth `t` coordinates `0..t` are fixed, coordinate
/// `t` is being chosen, and `t+1..n` are relaxed.
struct Level {
    /// Completion of the relaxed block is `x = Σ_{p<t} k_p·z[p] + v·dz + s·zs`.
    z: Vec<Vec<Rational>>,
    dz: Vec<Rational>,
    zs: Vec<Rational>,
    /// `wᵀCw / 2` where `w` is the direction of `v`; the leading coefficient
    /// of the bound as a function of `v`.
    curvature: Rational,
}

struct GridSearch<'a> {
    c: &'a CartanMatrix,
    n: usize,
    /// `None` at depths where the relaxation is unbounded below.
    levels: Vec<Option<Level>>,
    budget: u64,
}

impl<'a> GridSearch<'a> {
    fn new(c: &'a CartanMatrix, budget: u64) -> Self {
        let n = c.size();
        let levels = (0..n.saturating_sub(1)).map(|t| Self::level(c, t)).collect();
        GridSearch { c, n, levels, budget }
    }

    fn level(c: &CartanMatrix, t: usize) -> Option<Level> {
        let n = c.size();
        let rest: Vec<usize> = (t + 1..n).collect();
        let r = rest.len();
        // q restricted to the sum-zero directions of the relaxed block, in
        // the basis e_i - e_last.
        let last = rest[r - 1];
        let reduced: Vec<Vec<BigInt>> = rest[..r - 1]
            .iter()
            .map(|&i| {
                rest[..r - 1]
                    .iter()
                    .map(|&j| BigInt::from(c.entry(i, j) - c.entry(i, last) - c.entry(last, j) + c.entry(last, last)))
                    .collect()
            })
            .collect();
        if classify::symmetric_definiteness(&reduced).ok()? != Definiteness::PositiveDefinite {
            return None;
        }
        // Lagrange system [[C_RR, 1], [1ᵀ, 0]].
        let mut kkt: Vec<Vec<BigInt>> = rest
            .iter()
            .map(|&i| {
                let mut row: Vec<BigInt> = rest.iter().map(|&j| BigInt::from(c.entry(i, j))).collect();
                row.push(BigInt::one());
                row
            })
            .collect();
        let mut border = vec![BigInt::one(); r];
        border.push(BigInt::zero());
        kkt.push(border);
        let solve_for = |col: Option<usize>, sum: i64| -> Option<Vec<Rational>> {
            let mut rhs: Vec<BigInt> = rest
                .iter()
                .map(|&i| BigInt::from(col.map_or(0, |p| -c.entry(i, p))))
                .collect();
            rhs.push(BigInt::from(sum));
            let mut y = linalg::bareiss_solve(&kkt, &rhs)?;
            y.truncate(r);
            Some(y)
        };
        let z: Vec<Vec<Rational>> = (0..=t).map(|p| solve_for(Some(p), 0)).collect::<Option<_>>()?;
        let zs = solve_for(None, 1)?;
        let dz: Vec<Rational> = z[t].iter().zip(&zs).map(|(a, b)| a - b).collect();

        let mut w = vec![Rational::zero(); n];
        w[t] = Rational::one();
        for (i, x) in rest.iter().zip(&dz) {
            w[*i] = x.clone();
        }
        let curvature = half_form(c, &w, &w);
        let z = z.into_iter().take(t).collect();
        Some(Level { z, dz, zs, curvature })
    }

    fn run(&self, total: u64) -> Result<Rational> {
        let mut state = SearchState { prefix: Vec::with_capacity(self.n), best: None, nodes: 0 };
        self.descend(&mut state, total)?;
        state.best.ok_or_else(|| Error::Internal("grid search found no point".into()))
    }

    fn descend(&self, st: &mut SearchState, remaining: u64) -> Result<()> {
        st.nodes += 1;
        if st.nodes > self.budget {
            return Err(Error::GridBudget(self.budget));
        }
        let t = st.prefix.len();
        if t + 1 == self.n {
            let mut k: Vec<Rational> = st.prefix.iter().map(|&v| rational::int(v as i64)).collect();
            k.push(rational::int(remaining as i64));
            let value = half_form(self.c, &k, &k);
            if st.best.as_ref().is_none_or(|b| value < *b) {
                st.best = Some(value);
            }
            return Ok(());
        }
        match &self.levels[t] {
            None => {
                for v in 0..=remaining {
                    st.prefix.push(v);
                    self.descend(st, remaining - v)?;
                    st.prefix.pop();
                }
            }
            Some(level) => {
                let bound = self.bound_polynomial(level, &st.prefix, remaining);
                for v in candidate_order(&bound, remaining) {
                    let lower = bound.eval(v);
                    if st.best.as_ref().is_some_and(|b| lower >= *b) {
                        if bound.a.is_positive() {
                            // Candidates come in increasing order of the bound.
                            break;
                        }
                        continue;
                    }
                    st.prefix.push(v);
                    self.descend(st, remaining - v)?;
                    st.prefix.pop();
                }
            }
        }
        Ok(())
    }

    /// The relaxed minimum of `q` as a quadratic in the value `v` chosen at
    /// the current depth.
    fn bound_polynomial(&self, level: &Level, prefix: &[u64], remaining: u64) -> Quadratic {
        let t = prefix.len();
        let s = rational::int(remaining as i64);
        let mut x0: Vec<Rational> = level.zs.iter().map(|z| z * &s).collect();
        for (p, &kp) in prefix.iter().enumerate() {
            if kp == 0 {
                continue;
            }
            let kp = rational::int(kp as i64);
            for (x, z) in x0.iter_mut().zip(&level.z[p]) {
                *x += z * &kp;
            }
        }
        let mut u = vec![Rational::zero(); self.n];
        for (p, &kp) in prefix.iter().enumerate() {
            u[p] = rational::int(kp as i64);
        }
        for (i, x) in x0.into_iter().enumerate() {
            u[t + 1 + i] = x;
        }
        let mut w = vec![Rational::zero(); self.n];
        w[t] = Rational::one();
        for (i, x) in level.dz.iter().enumerate() {
            w[t + 1 + i] = x.clone();
        }
        Quadratic {
            a: level.curvature.clone(),
            b: rational::int(2) * half_form(self.c, &u, &w),
            c: half_form(self.c, &u, &u),
        }
    }
}

struct SearchState {
    prefix: Vec<u64>,
    best: Option<Rational>,
    nodes: u64,
}

/// `a v² + b v + c`.
struct Quadratic {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl Quadratic {
    fn eval(&self, v: u64) -> Rational {
        let v = rational::int(v as i64);
        (&self.a * &v + &self.b) * &v + &self.c
    }
}

/// Values `0..=max` in increasing order of the bound when it is convex,
/// otherwise all values sorted by the bound.
fn candidate_order(bound: &Quadratic, max: u64) -> Vec<u64> {
    if bound.a.is_positive() {
        let vertex = -&bound.b / (rational::int(2) * &bound.a);
        let start = vertex.floor().to_integer();
        let start = start.clamp(BigInt::zero(), BigInt::from(max));
        let start = u64::try_from(&start).expect("clamped");
        let (mut lo, mut hi) = (start as i64, start as i64 + 1);
        let mut order = Vec::with_capacity(max as usize + 1);
        while lo >= 0 || hi <= max as i64 {
            let take_lo = if lo < 0 {
                false
            } else if hi > max as i64 {
                true
            } else {
                bound.eval(lo as u64) <= bound.eval(hi as u64)
            };
            if take_lo {
                order.push(lo as u64);
                lo -= 1;
            } else {
                order.push(hi as u64);
                hi += 1;
            }
        }
        order
    } else {
        let mut order: Vec<(Rational, u64)> = (0..=max).map(|v| (bound.eval(v), v)).collect();
        order.sort();
        order.into_iter().map(|(_, v)| v).collect()
    }
}

/// `½ xᵀ C y`.
fn half_form(c: &CartanMatrix, x: &[Rational], y: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            let cij = c.entry(i, j);
            if cij != 0 && !yj.is_zero() {
                acc += xi * yj * rational::int(cij);
            }
        }
    }
    acc / rational::int(2)
}
