//! Affine hulls of linear sets and unions of linear sets.
//!
//! The hull of one linear set intersected with an affine subspace is
//! computed by the implicit-equality method: check feasibility with
//! strictness respected, drop strict rows, find the non-strict rows that
//! every feasible point satisfies with equality, and canonicalise the
//! resulting equation system. For a union of linear sets, the hull of
//! the union restricted to a subspace is the hull of one
//! maximum-dimension disjunct intersection, followed by a greedy pass
//! that removes redundant defining rows; the pass keeps the defining set
//! a subset of the input rows.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::lp::{feasible, implicit_equalities, LinearConstraint, RelOp};
use crate::numeric::{AffineSubspace, QMatrix, QVec, Rational};
use crate::numeric::{Insert, RrefBuilder};
use crate::relation::{LinearSet, SemilinearRelation};

/// The equation rows of a subspace as `Eq` constraints.
pub fn subspace_constraints(a: &AffineSubspace) -> Vec<LinearConstraint> {
    a.equations()
        .iter()
        .zip(a.rhs())
        .map(|(e, f)| LinearConstraint::new(e.clone(), RelOp::Eq, f.clone()))
        .collect()
}

/// Affine hull of the solution set of a mixed constraint system.
///
/// Strict rows are dropped only after a strictness-respecting
/// feasibility check; equation-only systems skip the LP entirely.
pub fn hull_of_system(rows: &[LinearConstraint], n: usize) -> AffineSubspace {
    if rows.iter().all(|c| c.op == RelOp::Eq) {
        let e = QMatrix::new(rows.iter().map(|c| c.coeffs.clone()).collect(), n)
            .expect("uniform row dimension");
        let f: QVec = rows.iter().map(|c| c.rhs.clone()).collect();
        return AffineSubspace::from_system(&e, &f).expect("shape checked");
    }
    if feasible(rows, n).is_none() {
        return AffineSubspace::empty(n);
    }
    let nonstrict: Vec<LinearConstraint> = rows
        .iter()
        .filter(|c| c.op != RelOp::Lt)
        .cloned()
        .collect();
    let implicit = implicit_equalities(&nonstrict, n).expect("feasible non-strict system");
    let mut eqs: Vec<QVec> = Vec::new();
    let mut f: QVec = Vec::new();
    for (i, c) in nonstrict.iter().enumerate() {
        if c.op == RelOp::Eq || implicit.binary_search(&i).is_ok() {
            eqs.push(c.coeffs.clone());
            f.push(c.rhs.clone());
        }
    }
    let e = QMatrix::new(eqs, n).expect("uniform row dimension");
    AffineSubspace::from_system(&e, &f).expect("shape checked")
}

/// Affine hull of `L ∩ A`.
pub fn linear_set_hull(l: &LinearSet, a: &AffineSubspace) -> AffineSubspace {
    let n = a.ambient();
    debug_assert_eq!(l.arity(), n);
    if a.is_empty() {
        return AffineSubspace::empty(n);
    }
    let mut rows = l.constraints().to_vec();
    rows.extend(subspace_constraints(a));
    hull_of_system(&rows, n)
}

/// Provenance of a row retained by [`alg2_hull`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowSource {
    /// Row `row` of disjunct `disjunct` of the input relation.
    Relation { disjunct: usize, row: usize },
    /// Equation row `row` of the input subspace.
    Subspace { row: usize },
}

/// A surviving defining row with its origin.
#[derive(Clone, Debug)]
pub struct RetainedRow {
    pub source: RowSource,
    pub constraint: LinearConstraint,
}

/// Output of [`alg2_hull`].
#[derive(Clone, Debug)]
pub struct Alg2Result {
    /// Hull of the chosen maximum-dimension disjunct intersection; empty
    /// when every disjunct misses the subspace.
    pub hull: AffineSubspace,
    /// The exact hull of the whole union restricted to the subspace:
    /// the affine span of every disjunct hull. Coincides with `hull`
    /// whenever no bounded non-constant unary relation is definable
    /// from the inputs.
    pub union_span: AffineSubspace,
    /// Index of the chosen disjunct, absent when the hull is empty.
    pub chosen_disjunct: Option<usize>,
    /// Rows surviving the greedy removal; always a subset of the input
    /// rows of the chosen disjunct and the subspace.
    pub retained: Vec<RetainedRow>,
}

/// Greedy removal pass: drop rows whose removal keeps the hull dimension
/// at `target_dim`, scanning in input order. Returns the kept indices.
pub fn greedy_reduce(rows: &[LinearConstraint], n: usize, target_dim: i64) -> Vec<usize> {
    if rows.iter().all(|c| c.op == RelOp::Eq) {
        return greedy_reduce_equations(rows, n);
    }
    let mut alive: Vec<bool> = rows.iter().map(|_| true).collect();
    for j in 0..rows.len() {
        alive[j] = false;
        let candidate: Vec<LinearConstraint> = rows
            .iter()
            .zip(&alive)
            .filter(|(_, &keep)| keep)
            .map(|(c, _)| c.clone())
            .collect();
        if hull_of_system(&candidate, n).dim() != target_dim {
            alive[j] = true;
        }
    }
    (0..rows.len()).filter(|&j| alive[j]).collect()
}

/// Equation-only greedy pass via the dependency space of the rows.
///
/// A row is removable exactly when some linear dependency among the
/// still-alive rows involves it; removing it shrinks the dependency
/// space by the dependencies that used it.
fn greedy_reduce_equations(rows: &[LinearConstraint], n: usize) -> Vec<usize> {
    let count = rows.len();
    let width = n + 1 + count;
    let mut builder = RrefBuilder::new(n, None);
    let mut deps: Vec<QVec> = Vec::new();
    for (i, c) in rows.iter().enumerate() {
        let mut aug = Vec::with_capacity(width);
        aug.extend(c.coeffs.iter().cloned());
        aug.push(c.rhs.clone());
        aug.extend(core::iter::repeat(Rational::zero()).take(count));
        aug[n + 1 + i] = Rational::from_integer(1.into());
        match builder.insert(aug) {
            Insert::Zero(reduced) => {
                debug_assert!(reduced[n].is_zero(), "dependency over a consistent system");
                deps.push(reduced[n + 1..].to_vec());
            }
            Insert::Added => {}
            Insert::Inconsistent => unreachable!("no rhs column configured"),
        }
    }
    let mut kept = Vec::new();
    for j in 0..count {
        match deps.iter().position(|d| !d[j].is_zero()) {
            None => kept.push(j),
            Some(p) => {
                let pivot = deps.swap_remove(p);
                for d in deps.iter_mut() {
                    if !d[j].is_zero() {
                        let c = &d[j] / &pivot[j];
                        for (x, y) in d.iter_mut().zip(&pivot) {
                            if !y.is_zero() {
                                *x -= &c * y;
                            }
                        }
                    }
                }
            }
        }
    }
    kept
}

/// Hull of `R ∩ A` for a union `R` of linear sets, with the retained
/// defining rows.
///
/// Picks the lowest-index disjunct maximising `dim(aff(R_i ∩ A))`. The
/// returned `hull` equals `aff(R ∩ A)` whenever no bounded non-constant
/// unary relation is definable from the inputs; in general it is the
/// hull of one disjunct intersection and therefore contained in
/// `aff(R ∩ A)`, which is reported exactly as `union_span`.
pub fn alg2_hull(r: &SemilinearRelation, a: &AffineSubspace) -> Alg2Result {
    let n = a.ambient();
    debug_assert_eq!(r.arity(), n);
    let empty = Alg2Result {
        hull: AffineSubspace::empty(n),
        union_span: AffineSubspace::empty(n),
        chosen_disjunct: None,
        retained: Vec::new(),
    };
    if a.is_empty() {
        return empty;
    }
    let mut parts: Vec<AffineSubspace> = Vec::new();
    let mut best: Option<(usize, usize)> = None;
    for (i, disjunct) in r.disjuncts().iter().enumerate() {
        let hull = linear_set_hull(disjunct, a);
        if hull.is_empty() {
            continue;
        }
        let better = match &best {
            None => true,
            Some((_, b)) => hull.dim() > parts[*b].dim(),
        };
        if better {
            best = Some((i, parts.len()));
        }
        parts.push(hull);
    }
    let (chosen, best_part) = match best {
        None => return empty,
        Some(x) => x,
    };
    let union_span = if parts.len() == 1 {
        parts[0].clone()
    } else {
        AffineSubspace::affine_span(n, parts.iter())
    };
    let hull = parts.swap_remove(best_part);

    let mut sources: Vec<RowSource> = Vec::new();
    let mut rows: Vec<LinearConstraint> = Vec::new();
    for (row, c) in r.disjuncts()[chosen].constraints().iter().enumerate() {
        sources.push(RowSource::Relation {
            disjunct: chosen,
            row,
        });
        rows.push(c.clone());
    }
    for (row, c) in subspace_constraints(a).into_iter().enumerate() {
        sources.push(RowSource::Subspace { row });
        rows.push(c);
    }
    let kept = greedy_reduce(&rows, n, hull.dim());
    let retained = kept
        .into_iter()
        .map(|j| RetainedRow {
            source: sources[j],
            constraint: rows[j].clone(),
        })
        .collect();
    Alg2Result {
        hull,
        union_span,
        chosen_disjunct: Some(chosen),
        retained,
    }
}

/// Independent affine hull of a union of linear sets, without the
/// max-disjunct selection: one relative-interior point per feasible set
/// plus its hull directions, spanned together.
pub fn union_hull_oracle(sets: &[LinearSet], n: usize) -> AffineSubspace {
    let full = AffineSubspace::full(n);
    let mut parts: Vec<AffineSubspace> = Vec::new();
    for set in sets {
        debug_assert_eq!(set.arity(), n);
        let hull = linear_set_hull(set, &full);
        if hull.is_empty() {
            continue;
        }
        let p = relative_interior_point(set.constraints(), n)
            .expect("non-empty linear set has a relative interior point");
        parts.push(AffineSubspace::from_parametric(p, hull.directions()));
    }
    AffineSubspace::affine_span(n, parts.iter())
}

/// A point satisfying every non-implicit inequality strictly.
fn relative_interior_point(rows: &[LinearConstraint], n: usize) -> Option<QVec> {
    feasible(rows, n)?;
    let nonstrict: Vec<LinearConstraint> = rows
        .iter()
        .filter(|c| c.op != RelOp::Lt)
        .cloned()
        .collect();
    let implicit = implicit_equalities(&nonstrict, n).expect("feasibility checked");
    let mut tightened: Vec<LinearConstraint> = Vec::with_capacity(rows.len());
    let mut le_index = 0;
    for c in &nonstrict {
        let mut c = c.clone();
        if c.op == RelOp::Le {
            if implicit.binary_search(&le_index).is_err() {
                c.op = RelOp::Lt;
            }
            le_index += 1;
        }
        tightened.push(c);
    }
    tightened.extend(rows.iter().filter(|c| c.op == RelOp::Lt).cloned());
    feasible(&tightened, n)
}
