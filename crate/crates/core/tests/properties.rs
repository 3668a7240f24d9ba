use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use quiver_ed::classify::{self, Definiteness};
use quiver_ed::forms::{self, cartan_matrix, euler_form, symmetric_form, tits_q, DimVector};
use quiver_ed::growth;
use quiver_ed::lambda;
use quiver_ed::linrep;
use quiver_ed::rational::{int, Rational};
use quiver_ed::{catalog, Quiver, VertexSet};

fn build(n: usize, edges: Vec<(usize, usize)>, allow_loops: bool) -> Quiver {
    let edges = edges.into_iter().filter(|(a, b)| allow_loops || a != b);
    Quiver::from_indices((1..=n).map(|i| i.to_string()), edges).unwrap()
}

fn arb_quiver(max_n: usize, max_arrows: usize, allow_loops: bool) -> impl Strategy<Value = Quiver> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_arrows).prop_map(move |e| build(n, e, allow_loops))
    })
}

fn arb_vector(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = DimVector> {
    prop::collection::vec(lo..=hi, n).prop_map(|v| DimVector::from_ints(&v))
}

fn with_vectors(max_n: usize, loops: bool) -> impl Strategy<Value = (Quiver, DimVector, DimVector, DimVector)> {
    arb_quiver(max_n, 8, loops).prop_flat_map(|q| {
        let n = q.vertex_count();
        (Just(q), arb_vector(n, -5, 5), arb_vector(n, -5, 5), arb_vector(n, -5, 5))
    })
}

fn add(a: &DimVector, b: &DimVector) -> DimVector {
    DimVector::new(a.entries().iter().zip(b.entries()).map(|(x, y)| x + y).collect())
}

/// Determinant by rational elimination.
fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut d = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            d = -d;
        }
        let pivot = m[col][col].clone();
        d *= &pivot;
        for r in col + 1..n {
            let f = &m[r][col] / &pivot;
            let (top, bottom) = m.split_at_mut(r);
            for (dst, src) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *dst -= &f * src;
            }
        }
    }
    d
}

/// Definiteness from principal minors: positive definite iff all leading
/// minors are positive, positive semidefinite iff all principal minors are
/// nonnegative.
fn minors_definiteness(c: &[Vec<i64>]) -> Definiteness {
    let n = c.len();
    let minor = |idx: &[usize]| det(idx.iter().map(|&i| idx.iter().map(|&j| int(c[i][j])).collect()).collect());
    if (1..=n).all(|k| minor(&(0..k).collect::<Vec<_>>()).is_positive()) {
        return Definiteness::PositiveDefinite;
    }
    let psd = (1u64..1 << n).all(|mask| !minor(VertexSet::from_mask(mask).indices()).is_negative());
    if psd {
        Definiteness::PositiveSemidefiniteSingular
    } else {
        Definiteness::Indefinite
    }
}

/// Plain sequential maximum over all connected wild induced subquivers.
fn sequential_lambda(q: &Quiver) -> Option<(Rational, VertexSet)> {
    let mut best: Option<(Rational, VertexSet)> = None;
    for mask in 1u64..1 << q.vertex_count() {
        let set = VertexSet::from_mask(mask);
        let sub = q.induced_subquiver(&set).unwrap();
        if !sub.is_connected() || !classify::is_wild(&sub) {
            continue;
        }
        let Ok(Some(cp)) = lambda::critical_point(&sub) else { continue };
        if !cp.is_effective() {
            continue;
        }
        let better = match &best {
            None => true,
            Some((l, s)) => cp.lambda > *l || (cp.lambda == *l && set < *s),
        };
        if better {
            best = Some((cp.lambda, set));
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn euler_form_is_bilinear((q, a, b, c) in with_vectors(5, true), k in -4i64..=4) {
        let lhs = euler_form(&q, &add(&a, &b), &c).unwrap();
        prop_assert_eq!(lhs, euler_form(&q, &a, &c).unwrap() + euler_form(&q, &b, &c).unwrap());
        let lhs = euler_form(&q, &c, &add(&a, &b)).unwrap();
        prop_assert_eq!(lhs, euler_form(&q, &c, &a).unwrap() + euler_form(&q, &c, &b).unwrap());
        let scaled = a.scale(&int(k));
        prop_assert_eq!(euler_form(&q, &scaled, &b).unwrap(), int(k) * euler_form(&q, &a, &b).unwrap());
    }

    #[test]
    fn tits_form_is_half_the_cartan_pairing((q, a, b, _) in with_vectors(5, true)) {
        let c = cartan_matrix(&q);
        prop_assert_eq!(tits_q(&q, &a).unwrap(), c.pairing(&a, &a).unwrap() / int(2));
        prop_assert_eq!(symmetric_form(&q, &a, &b).unwrap(), c.pairing(&a, &b).unwrap());
    }

    #[test]
    fn reflections_are_involutive_isometries((q, a, _, _) in with_vectors(5, false), i in 0usize..5) {
        let i = i % q.vertex_count();
        let r = forms::reflect(&q, &a, i).unwrap();
        prop_assert_eq!(forms::reflect(&q, &r, i).unwrap(), a.clone());
        prop_assert_eq!(tits_q(&q, &r).unwrap(), tits_q(&q, &a).unwrap());
    }

    #[test]
    fn definiteness_matches_principal_minors(q in arb_quiver(5, 8, true)) {
        let c = cartan_matrix(&q);
        prop_assert_eq!(classify::definiteness(&c), minors_definiteness(c.rows()));
    }

    #[test]
    fn induced_subquivers_restrict_the_cartan_matrix(q in arb_quiver(6, 10, true), mask in 1u64..64) {
        let mask = mask & ((1 << q.vertex_count()) - 1);
        prop_assume!(mask != 0);
        let set = VertexSet::from_mask(mask);
        let sub = q.induced_subquiver(&set).unwrap();
        prop_assert_eq!(cartan_matrix(&sub), cartan_matrix(&q).principal_submatrix(&set));
        let report = classify::rep_type(&q);
        for comp in &report.components {
            let piece = q.induced_subquiver(&comp.vertices).unwrap();
            prop_assert_eq!(classify::connected_rep_type(&piece).unwrap(), comp.rep_type);
        }
    }

    #[test]
    fn orientation_does_not_matter(q in arb_quiver(5, 8, true), k in 0usize..8) {
        prop_assume!(q.arrow_count() > 0);
        let flipped = q.reverse_arrow(k % q.arrow_count()).unwrap();
        prop_assert_eq!(cartan_matrix(&flipped), cartan_matrix(&q));
        prop_assert_eq!(classify::rep_type(&flipped).aggregate, classify::rep_type(&q).aggregate);
        if classify::is_wild(&q) {
            prop_assert_eq!(
                lambda::lambda_max(&flipped).unwrap().lambda_max,
                lambda::lambda_max(&q).unwrap().lambda_max
            );
        }
    }

    #[test]
    fn critical_points_are_exact(q in arb_quiver(5, 10, true)) {
        prop_assume!(classify::all_components_wild(&q));
        // Wild quivers can still have a singular Cartan matrix.
        let result = lambda::critical_point(&q);
        prop_assume!(result != Err(quiver_ed::Error::Singular));
        if let Some(cp) = result.unwrap() {
            let c = cartan_matrix(&q);
            let image = c.apply(&cp.alpha).unwrap();
            let target = -int(2) * &cp.lambda;
            prop_assert!(image.entries().iter().all(|v| *v == target));
            prop_assert_eq!(cp.alpha.total(), Rational::one());
            prop_assert_eq!(tits_q(&q, &cp.alpha).unwrap(), -cp.lambda.clone());
        }
    }

    #[test]
    fn lambda_max_matches_sequential_search(q in arb_quiver(6, 10, true)) {
        prop_assume!(classify::is_wild(&q));
        let report = lambda::lambda_max(&q).unwrap();
        let (lam, set) = sequential_lambda(&q).unwrap();
        prop_assert_eq!(&report.lambda_max, &lam);
        prop_assert_eq!(&report.witness, &set);
        prop_assert!(report.lambda_max.is_positive());
        prop_assert!(report.witness_point.alpha.entries().iter().all(Signed::is_positive));
        prop_assert_eq!(lambda::lambda_max(&q).unwrap(), report);
    }

    #[test]
    fn grid_never_beats_lambda(q in arb_quiver(4, 8, true), n in 1u64..=8) {
        prop_assume!(classify::is_wild(&q));
        let report = lambda::lambda_max(&q).unwrap();
        prop_assert!(lambda::grid_oracle(&q, n).unwrap() <= report.lambda_max);
        let n_star: u64 = report.witness_point.minimal_multiple().try_into().unwrap();
        if n_star <= 40 {
            prop_assert_eq!(lambda::grid_oracle(&q, n_star).unwrap(), report.lambda_max);
        }
    }

    #[test]
    fn euler_identity_holds(q in arb_quiver(4, 6, true), dims in prop::collection::vec(0i64..=3, 8), seed in any::<u64>()) {
        let n = q.vertex_count();
        let a = DimVector::from_ints(&dims[..n]);
        let b = DimVector::from_ints(&dims[4..4 + n]);
        let m = linrep::random_rep(&q, &a, seed).unwrap();
        let r = linrep::random_rep(&q, &b, seed.wrapping_add(1)).unwrap();
        let hom = linrep::hom_dim(&q, &m, &r).unwrap() as i64;
        let ext = linrep::ext1_dim(&q, &m, &r).unwrap() as i64;
        prop_assert_eq!(int(hom - ext), euler_form(&q, &a, &b).unwrap());
    }

    #[test]
    fn hom_is_additive(q in arb_quiver(3, 4, true), dims in prop::collection::vec(0i64..=2, 9), seed in any::<u64>()) {
        let n = q.vertex_count();
        let rep = |k: usize, s: u64| linrep::random_rep(&q, &DimVector::from_ints(&dims[3 * k..3 * k + n]), s).unwrap();
        let (m, n1, n2) = (rep(0, seed), rep(1, seed ^ 1), rep(2, seed ^ 2));
        let sum = n1.direct_sum(&q, &n2).unwrap();
        prop_assert_eq!(
            linrep::hom_dim(&q, &m, &sum).unwrap(),
            linrep::hom_dim(&q, &m, &n1).unwrap() + linrep::hom_dim(&q, &m, &n2).unwrap()
        );
    }

    #[test]
    fn d4_family_has_zero_euler_form(m in 1usize..=3, coeffs in prop::collection::vec(-3i64..=3, 3)) {
        let mut poly = coeffs[..m].to_vec();
        poly.push(1);
        let (q, rep) = linrep::d4_family(m, &poly).unwrap();
        let dims = rep.dim_vector();
        prop_assert_eq!(tits_q(&q, &dims).unwrap(), Rational::zero());
        prop_assert_eq!(linrep::hom_dim(&q, &rep, &rep).unwrap(), linrep::ext1_dim(&q, &rep, &rep).unwrap());
    }

    #[test]
    fn single_filtration_step(q in arb_quiver(5, 8, true), entries in prop::collection::vec(0i64..=4, 5)) {
        let beta = DimVector::from_ints(&entries[..q.vertex_count()]);
        let f = growth::filtration_bounds(&q, std::slice::from_ref(&beta)).unwrap();
        let value = tits_q(&q, &beta).unwrap();
        prop_assert_eq!(f.nil_dim, -value.clone());
        prop_assert_eq!(f.indec_trdeg_bound, Rational::one() - value);
    }
}

#[test]
fn r_exact_is_nondecreasing() {
    let quivers = [catalog::kronecker(2), catalog::star(4), catalog::loops(1), catalog::affine_e(8), catalog::dynkin_d(5)];
    for q in &quivers {
        let values: Vec<u64> = (1..=60).map(|n| growth::r_exact(q, n).unwrap()).collect();
        assert!(values.windows(2).all(|w| w[0] <= w[1]), "{q}");
    }
}

#[test]
fn wild_lower_bound_along_multiples() {
    for q in [catalog::kronecker(3), catalog::loops(2), catalog::star(5), catalog::att(0)] {
        let report = lambda::lambda_max(&q).unwrap();
        let m: u64 = report.witness_point.minimal_multiple().try_into().unwrap();
        for h in 1..=6 {
            let n = m * h;
            let b = growth::r_bounds_wild(&q, n).unwrap();
            let nn = int(n as i64);
            let expected = Rational::one() / (&nn * &nn) + &report.lambda_max;
            assert_eq!(&b.lower / (&nn * &nn), expected, "{q} n={n}");
            assert!(b.lower <= b.upper);
        }
    }
}

#[test]
fn components_do_not_beat_their_best_part() {
    let parts = [catalog::kronecker(3), catalog::kronecker(4), catalog::loops(2), catalog::star(5), catalog::att(1)];
    for a in &parts {
        for b in &parts {
            let union = a.disjoint_union(b, "'");
            let la = lambda::critical_point(a).unwrap().unwrap().lambda;
            let lb = lambda::critical_point(b).unwrap().unwrap().lambda;
            let cp = lambda::critical_point(&union).unwrap().unwrap();
            assert!(cp.is_effective());
            assert!(cp.lambda <= la.clone().max(lb.clone()), "{a} + {b}");
            assert_eq!(lambda::lambda_max(&union).unwrap().lambda_max, la.max(lb));
        }
    }
}

#[test]
fn minimal_wild_quivers_are_effective() {
    for entry in catalog::minimal_wild_graphs() {
        let q = &entry.quiver;
        assert!(classify::is_minimal_wild_graph(q), "{}", entry.label);
        assert!(classify::is_minimal_wild_quiver(q), "{}", entry.label);
        assert!(lambda::is_effective(q).unwrap(), "{}", entry.label);
        let cp = lambda::critical_point(q).unwrap().unwrap();
        assert_eq!(lambda::lambda_max(q).unwrap().lambda_max, cp.lambda, "{}", entry.label);
    }
}
