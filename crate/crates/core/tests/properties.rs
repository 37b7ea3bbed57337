//! Property tests for the numeric, LP, and unary/relation layers.

use num_traits::{Signed, Zero};
use proptest::prelude::*;

use semilin_core::lp::{feasible, implicit_equalities, optimize, LinearConstraint, LpOutcome, RelOp};
use semilin_core::numeric::{dot, frac, rat, AffineSubspace, QMatrix, QVec, Rational};
use semilin_core::relation::{excluded_interval_on_segment, LinearSet, SemilinearRelation};
use semilin_core::unary::{component_element, Component, UnaryNF};

fn rational() -> impl Strategy<Value = Rational> {
    (-24i64..=24, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn qvec(n: usize) -> impl Strategy<Value = QVec> {
    proptest::collection::vec(rational(), n)
}

fn small_coeffs(n: usize) -> impl Strategy<Value = QVec> {
    proptest::collection::vec((-3i64..=3).prop_map(rat), n)
}

fn relop() -> impl Strategy<Value = RelOp> {
    prop_oneof![Just(RelOp::Eq), Just(RelOp::Le), Just(RelOp::Lt)]
}

fn constraint(n: usize) -> impl Strategy<Value = LinearConstraint> {
    (small_coeffs(n), relop(), (-3i64..=3).prop_map(rat))
        .prop_map(|(coeffs, op, rhs)| LinearConstraint::new(coeffs, op, rhs))
}

fn system(n: usize) -> impl Strategy<Value = Vec<LinearConstraint>> {
    proptest::collection::vec(constraint(n), 1..=5)
}

fn relation(arity: usize) -> impl Strategy<Value = SemilinearRelation> {
    proptest::collection::vec(proptest::collection::vec(constraint(arity), 1..=3), 1..=3)
        .prop_map(move |disjuncts| {
            let sets = disjuncts
                .into_iter()
                .map(|cs| LinearSet::new(arity, cs).unwrap())
                .collect();
            SemilinearRelation::new("R", arity, sets).unwrap()
        })
}

/// A random unary set built from up to four points and intervals.
fn unary_nf() -> impl Strategy<Value = UnaryNF> {
    let piece = prop_oneof![
        rational().prop_map(UnaryNF::point),
        (rational(), rational(), any::<bool>(), any::<bool>()).prop_map(|(a, b, lo, hi)| {
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            UnaryNF::interval(Some(a), lo, Some(b), hi)
        }),
        (rational(), any::<bool>()).prop_map(|(a, right)| {
            if right {
                UnaryNF::interval(Some(a), false, None, true)
            } else {
                UnaryNF::interval(None, true, Some(a), false)
            }
        }),
    ];
    proptest::collection::vec(piece, 0..=4)
        .prop_map(|pieces| pieces.iter().fold(UnaryNF::empty(), |acc, p| acc.union(p)))
}

/// Probe values around the components of the given sets.
fn probe_points(sets: &[&UnaryNF], extra: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = extra.to_vec();
    let offsets = [frac(-1, 3), rat(0), frac(1, 3)];
    for set in sets {
        for c in set.components() {
            out.push(component_element(c));
            match c {
                Component::Point(q) => {
                    for o in &offsets {
                        out.push(q + o);
                    }
                }
                Component::Interval { lo, hi, .. } => {
                    for v in [lo, hi].into_iter().flatten() {
                        for o in &offsets {
                            out.push(v + o);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Realise a unary normal form as a one-dimensional relation.
fn realize_unary(u: &UnaryNF) -> SemilinearRelation {
    let mut disjuncts = Vec::new();
    for c in u.components() {
        let mut rows = Vec::new();
        match c {
            Component::Point(q) => {
                rows.push(LinearConstraint::new(vec![rat(1)], RelOp::Eq, q.clone()));
            }
            Component::Interval {
                lo,
                lo_open,
                hi,
                hi_open,
            } => {
                if let Some(l) = lo {
                    let coeffs = vec![rat(-1)];
                    let op = if *lo_open { RelOp::Lt } else { RelOp::Le };
                    rows.push(LinearConstraint::new(coeffs, op, -l.clone()));
                }
                if let Some(h) = hi {
                    let op = if *hi_open { RelOp::Lt } else { RelOp::Le };
                    rows.push(LinearConstraint::new(vec![rat(1)], op, h.clone()));
                }
                if rows.is_empty() {
                    rows.push(LinearConstraint::new(vec![rat(0)], RelOp::Eq, rat(0)));
                }
            }
        }
        disjuncts.push(LinearSet::new(1, rows).unwrap());
    }
    SemilinearRelation::new("U", 1, disjuncts).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn consistent_systems_round_trip_through_parametric_form(
        rows in proptest::collection::vec(small_coeffs(4), 1..=4),
        x0 in qvec(4),
        lambdas in proptest::collection::vec(rational(), 4),
    ) {
        // Build a consistent system by construction: f = E·x0.
        let f: QVec = rows.iter().map(|r| dot(r, &x0)).collect();
        let e = QMatrix::new(rows, 4).unwrap();
        let a = AffineSubspace::from_system(&e, &f).unwrap();
        prop_assert!(!a.is_empty());
        prop_assert!(a.contains(&x0));
        let sample = a.point_at(&lambdas[..a.directions().len()]).unwrap();
        prop_assert!(a.contains(&sample));
    }

    #[test]
    fn canonical_form_ignores_row_order_and_scaling(
        rows in proptest::collection::vec(small_coeffs(3), 1..=4),
        x0 in qvec(3),
        perm_seed in 0usize..24,
        scales in proptest::collection::vec((1i64..=5, any::<bool>()), 4),
    ) {
        let f: QVec = rows.iter().map(|r| dot(r, &x0)).collect();
        let a = AffineSubspace::from_system(&QMatrix::new(rows.clone(), 3).unwrap(), &f).unwrap();
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.rotate_left(perm_seed % rows.len().max(1));
        let mut shuffled = Vec::new();
        let mut f2 = Vec::new();
        for (k, &i) in order.iter().enumerate() {
            let (mag, neg) = scales[k % scales.len()];
            let s = if neg { rat(-mag) } else { rat(mag) };
            shuffled.push(rows[i].iter().map(|q| q * &s).collect::<QVec>());
            f2.push(&f[i] * &s);
        }
        let b = AffineSubspace::from_system(&QMatrix::new(shuffled, 3).unwrap(), &f2).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn projection_commutes_with_membership(
        rows in proptest::collection::vec(small_coeffs(4), 1..=3),
        x0 in qvec(4),
        lambdas in proptest::collection::vec(rational(), 4),
        coords in proptest::collection::btree_set(0usize..4, 1..=3),
    ) {
        let f: QVec = rows.iter().map(|r| dot(r, &x0)).collect();
        let a = AffineSubspace::from_system(&QMatrix::new(rows, 4).unwrap(), &f).unwrap();
        let coords: Vec<usize> = coords.into_iter().collect();
        let projected = a.project(&coords);
        let p = a.point_at(&lambdas[..a.directions().len()]).unwrap();
        let image: QVec = coords.iter().map(|&c| p[c].clone()).collect();
        prop_assert!(projected.contains(&image));
    }

    #[test]
    fn optimum_witnesses_are_exact(sys in system(2), c in small_coeffs(2)) {
        match optimize(&sys, 2, &c) {
            LpOutcome::Optimum { value, witness } => {
                prop_assert!(sys.iter().all(|r| r.eval(&witness)));
                prop_assert_eq!(dot(&c, &witness), value);
            }
            LpOutcome::Infeasible => {
                prop_assert!(feasible(&sys, 2).is_none());
            }
            _ => {}
        }
    }

    #[test]
    fn optimize_value_dominates_feasible_samples(
        sys in system(2),
        c in small_coeffs(2),
        samples in proptest::collection::vec(qvec(2), 20),
    ) {
        let bound = match optimize(&sys, 2, &c) {
            LpOutcome::Optimum { value, .. } => value,
            LpOutcome::Supremum { value } => value,
            _ => return Ok(()),
        };
        for p in &samples {
            if sys.iter().all(|r| r.eval(p)) {
                prop_assert!(dot(&c, p) <= bound);
            }
        }
    }

    #[test]
    fn feasibility_is_monotone(sys in system(2), extra in constraint(2)) {
        let mut bigger = sys.clone();
        bigger.push(extra);
        if feasible(&bigger, 2).is_some() {
            prop_assert!(feasible(&sys, 2).is_some());
        }
    }

    #[test]
    fn implicit_rows_hold_with_equality_at_samples(
        sys in proptest::collection::vec(
            (small_coeffs(2), prop_oneof![Just(RelOp::Eq), Just(RelOp::Le)], (-3i64..=3).prop_map(rat))
                .prop_map(|(co, op, rhs)| LinearConstraint::new(co, op, rhs)),
            1..=4,
        ),
        samples in proptest::collection::vec(qvec(2), 20),
    ) {
        if feasible(&sys, 2).is_none() {
            return Ok(());
        }
        let implicit = implicit_equalities(&sys, 2).unwrap();
        for p in &samples {
            if sys.iter().all(|r| r.eval(p)) {
                for &i in &implicit {
                    prop_assert_eq!(dot(&sys[i].coeffs, p), sys[i].rhs.clone());
                }
            }
        }
    }

    #[test]
    fn union_and_intersection_match_pointwise_membership(a in unary_nf(), b in unary_nf(), extra in proptest::collection::vec(rational(), 8)) {
        let u = a.union(&b);
        let i = a.intersect(&b);
        for x in probe_points(&[&a, &b, &u, &i], &extra) {
            prop_assert_eq!(u.contains(&x), a.contains(&x) || b.contains(&x));
            prop_assert_eq!(i.contains(&x), a.contains(&x) && b.contains(&x));
        }
    }

    #[test]
    fn scale_translate_negate_match_pointwise_membership(
        a in unary_nf(),
        c in rational().prop_filter("nonzero", |q| !q.is_zero()),
        t in rational(),
        extra in proptest::collection::vec(rational(), 8),
    ) {
        let scaled = a.scale(&c).unwrap();
        let shifted = a.translate(&t);
        let negated = a.negate();
        for x in probe_points(&[&a, &scaled, &shifted, &negated], &extra) {
            prop_assert_eq!(scaled.contains(&x), a.contains(&(&x / &c)));
            prop_assert_eq!(shifted.contains(&x), a.contains(&(&x - &t)));
            prop_assert_eq!(negated.contains(&x), a.contains(&(-x.clone())));
        }
    }

    #[test]
    fn scale_round_trips_bit_exactly(
        a in unary_nf(),
        c in rational().prop_filter("nonzero", |q| !q.is_zero()),
    ) {
        let back = a.scale(&c).unwrap().scale(&c.clone().recip()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn minkowski_sum_contains_all_pairwise_sums(a in unary_nf(), b in unary_nf()) {
        let s = a.minkowski_sum(&b);
        for x in a.sample_elements() {
            for y in b.sample_elements() {
                prop_assert!(s.contains(&(&x + &y)));
            }
        }
        if a.is_empty() || b.is_empty() {
            prop_assert!(s.is_empty());
        }
    }

    #[test]
    fn restrict_line_matches_membership(
        r in relation(3),
        a in qvec(3),
        b in qvec(3),
        ts in proptest::collection::vec(rational(), 6),
    ) {
        if a == b {
            return Ok(());
        }
        let u = r.restrict_line(&a, &b).unwrap();
        for t in ts {
            let point: QVec = a
                .iter()
                .zip(&b)
                .map(|(pa, pb)| (rat(1) - &t) * pa + &t * pb)
                .collect();
            prop_assert_eq!(u.contains(&t), r.eval(&point).unwrap());
        }
    }

    #[test]
    fn unary_normal_form_matches_relation_membership(
        r in relation(1),
        extra in proptest::collection::vec(rational(), 8),
    ) {
        let u = r.to_unary().unwrap();
        for x in probe_points(&[&u], &extra) {
            prop_assert_eq!(u.contains(&x), r.eval(&[x.clone()]).unwrap());
        }
    }

    #[test]
    fn essential_convexity_agrees_with_excluded_interval_witnesses(u in unary_nf()) {
        let realized = realize_unary(&u);
        prop_assert_eq!(realized.to_unary().unwrap(), u.clone());
        if u.essentially_convex() {
            // No pair of members admits an excluded interval.
            let elems = u.sample_elements();
            for p in &elems {
                for q in &elems {
                    if p != q {
                        let w = excluded_interval_on_segment(&realized, &[p.clone()], &[q.clone()])
                            .unwrap();
                        prop_assert!(w.is_none());
                    }
                }
            }
        } else {
            // Members straddling the widest gap witness the exclusion.
            let gaps = u.gaps();
            let (g1, g2) = gaps.first().unwrap();
            let left = u
                .components()
                .iter()
                .filter(|c| match c {
                    Component::Point(v) => v <= g1,
                    Component::Interval { hi, .. } => hi.as_ref().is_some_and(|h| h <= g1),
                })
                .last()
                .unwrap();
            let right = u
                .components()
                .iter()
                .find(|c| match c {
                    Component::Point(v) => v >= g2,
                    Component::Interval { lo, .. } => lo.as_ref().is_some_and(|l| l >= g2),
                })
                .unwrap();
            let p = component_element(left);
            let q = component_element(right);
            let w = excluded_interval_on_segment(&realized, &[p], &[q]).unwrap();
            prop_assert!(w.is_some());
            let (d1, d2) = w.unwrap();
            prop_assert!(rat(0) < d1 && d1 < d2 && d2 < rat(1));
        }
    }

    #[test]
    fn strict_feasibility_witnesses_are_strict(sys in system(3)) {
        if let Some(p) = feasible(&sys, 3) {
            for row in &sys {
                prop_assert!(row.eval(&p));
                if row.op == RelOp::Lt {
                    prop_assert!(dot(&row.coeffs, &p) < row.rhs);
                }
            }
        }
    }
}

#[test]
fn supremum_values_are_approached_but_not_attained() {
    // max x over x < 1 with a redundant strict row.
    let sys = vec![
        LinearConstraint::new(vec![rat(1)], RelOp::Lt, rat(1)),
        LinearConstraint::new(vec![rat(1)], RelOp::Lt, rat(2)),
    ];
    match optimize(&sys, 1, &[rat(1)]) {
        LpOutcome::Supremum { value } => {
            assert_eq!(value, rat(1));
            // Points arbitrarily close are feasible.
            for k in 1..6 {
                let p = vec![rat(1) - frac(1, 10i64.pow(k))];
                assert!(sys.iter().all(|r| r.eval(&p)));
            }
        }
        other => panic!("expected supremum, got {:?}", other),
    }
}
