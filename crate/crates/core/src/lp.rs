//! Exact rational linear programming over mixed strict/non-strict systems.
//!
//! The solver is a dense two-phase simplex over [`Rational`] with Bland's
//! anti-cycling rule. Strict inequalities are handled exactly by an
//! auxiliary slack: every strict row `a·x < r` becomes `a·x + ε ≤ r` and
//! the system is strictly feasible iff the maximum of `ε` (capped at 1)
//! is positive. No perturbation, no floating point.


use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::numeric::{dot, rat, zero_vec, QVec, Rational};

/// Relational operator of a linear constraint.
///
/// `≥`/`>` inputs are normalised to `Le`/`Lt` by negating both sides at
/// construction time, so only these three survive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelOp {
    Eq,
    Le,
    Lt,
}

/// A single linear constraint `coeffs · x  op  rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: QVec,
    pub op: RelOp,
    pub rhs: Rational,
}

impl LinearConstraint {
    pub fn new(coeffs: QVec, op: RelOp, rhs: Rational) -> Self {
        LinearConstraint { coeffs, op, rhs }
    }

    /// Build from a `≥` constraint by negation.
    pub fn ge(coeffs: QVec, rhs: Rational) -> Self {
        LinearConstraint::new(coeffs.iter().map(|c| -c).collect(), RelOp::Le, -rhs)
    }

    /// Build from a `>` constraint by negation.
    pub fn gt(coeffs: QVec, rhs: Rational) -> Self {
        LinearConstraint::new(coeffs.iter().map(|c| -c).collect(), RelOp::Lt, -rhs)
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Evaluate at a point, respecting strictness. All-zero coefficient
    /// rows evaluate to a constant truth value.
    pub fn eval(&self, p: &[Rational]) -> bool {
        let lhs = dot(&self.coeffs, p);
        match self.op {
            RelOp::Eq => lhs == self.rhs,
            RelOp::Le => lhs <= self.rhs,
            RelOp::Lt => lhs < self.rhs,
        }
    }
}

/// Result of an exact optimisation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    /// Maximum attained exactly at the witness.
    Optimum { value: Rational, witness: QVec },
    /// The value is approached but not attained within the strict system.
    Supremum { value: Rational },
}

enum SimplexOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, point: QVec },
}

/// Dense simplex tableau for `max obj·z  s.t.  A z = b, z ≥ 0`.
struct Tableau {
    rows: Vec<QVec>,
    b: QVec,
    basis: Vec<usize>,
    n_cols: usize,
    /// Columns the entering rule may consider (artificials are excluded
    /// in phase 2).
    n_eligible: usize,
    cbar: QVec,
    value: Rational,
}

impl Tableau {
    /// Recompute reduced costs and the objective value for `obj`.
    fn price_out(&mut self, obj: &[Rational]) {
        self.cbar = obj.to_vec();
        self.value = Rational::zero();
        for (i, &bi) in self.basis.iter().enumerate() {
            let c = obj[bi].clone();
            if c.is_zero() {
                continue;
            }
            self.value += &c * &self.b[i];
            for (x, a) in self.cbar.iter_mut().zip(&self.rows[i]) {
                if !a.is_zero() {
                    *x -= &c * a;
                }
            }
        }
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let inv = self.rows[r][j].clone().recip();
        if !inv.is_one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            self.b[r] *= &inv;
        }
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][j].is_zero() {
                continue;
            }
            let c = self.rows[i][j].clone();
            let (src, dst) = if i < r {
                let (lo, hi) = self.rows.split_at_mut(r);
                (&hi[0], &mut lo[i])
            } else {
                let (lo, hi) = self.rows.split_at_mut(i);
                (&lo[r], &mut hi[0])
            };
            for (x, y) in dst.iter_mut().zip(src) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
            let br = self.b[r].clone();
            self.b[i] -= &c * &br;
        }
        let t = self.cbar[j].clone();
        if !t.is_zero() {
            self.value += &t * &self.b[r];
            let row = self.rows[r].clone();
            for (x, y) in self.cbar.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x -= &t * y;
                }
            }
        }
        self.basis[r] = j;
    }

    /// Run simplex iterations with Bland's rule until optimal or unbounded.
    fn run(&mut self) -> bool {
        loop {
            let entering = (0..self.n_eligible).find(|&j| self.cbar[j].is_positive());
            let j = match entering {
                None => return true,
                Some(j) => j,
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][j].is_positive() {
                    continue;
                }
                let ratio = &self.b[i] / &self.rows[i][j];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                None => return false,
                Some((r, _)) => self.pivot(r, j),
            }
        }
    }

    fn point(&self) -> QVec {
        let mut z = zero_vec(self.n_cols);
        for (i, &bi) in self.basis.iter().enumerate() {
            z[bi] = self.b[i].clone();
        }
        z
    }
}

/// Maximise `c·x` over `rows` (only `Eq`/`Le` ops) with free variables.
///
/// Free variables are split as `x = p − q` with `p, q ≥ 0`.
fn solve_max(rows: &[LinearConstraint], n: usize, c: &[Rational]) -> SimplexOutcome {
    let m = rows.len();
    let n_slack = rows.iter().filter(|r| r.op == RelOp::Le).count();
    let n_struct = 2 * n + n_slack;
    let n_cols = n_struct + m;

    let mut a: Vec<QVec> = Vec::with_capacity(m);
    let mut b: QVec = Vec::with_capacity(m);
    let mut slack = 0;
    for (i, row) in rows.iter().enumerate() {
        debug_assert!(row.op != RelOp::Lt);
        let mut t = zero_vec(n_cols);
        for (j, cf) in row.coeffs.iter().enumerate() {
            if !cf.is_zero() {
                t[2 * j] = cf.clone();
                t[2 * j + 1] = -cf.clone();
            }
        }
        if row.op == RelOp::Le {
            t[2 * n + slack] = Rational::one();
            slack += 1;
        }
        let mut rhs = row.rhs.clone();
        if rhs.is_negative() {
            for x in t.iter_mut() {
                if !x.is_zero() {
                    *x = -x.clone();
                }
            }
            rhs = -rhs;
        }
        t[n_struct + i] = Rational::one();
        a.push(t);
        b.push(rhs);
    }

    let mut tab = Tableau {
        rows: a,
        b,
        basis: (n_struct..n_cols).collect(),
        n_cols,
        n_eligible: n_struct,
        cbar: Vec::new(),
        value: Rational::zero(),
    };

    // Phase 1: maximise the negated sum of artificials.
    let mut phase1 = zero_vec(n_cols);
    for x in phase1[n_struct..].iter_mut() {
        *x = -Rational::one();
    }
    tab.price_out(&phase1);
    let finished = tab.run();
    debug_assert!(finished, "phase 1 is bounded by construction");
    if tab.value.is_negative() {
        return SimplexOutcome::Infeasible;
    }

    // Drive artificials out of the basis; drop redundant rows.
    let mut r = 0;
    while r < tab.rows.len() {
        if tab.basis[r] < n_struct {
            r += 1;
            continue;
        }
        match (0..n_struct).find(|&j| !tab.rows[r][j].is_zero()) {
            Some(j) => {
                tab.pivot(r, j);
                r += 1;
            }
            None => {
                tab.rows.remove(r);
                tab.b.remove(r);
                tab.basis.remove(r);
            }
        }
    }

    // Phase 2: the real objective on the p/q split.
    let mut phase2 = zero_vec(n_cols);
    for (j, cf) in c.iter().enumerate() {
        if !cf.is_zero() {
            phase2[2 * j] = cf.clone();
            phase2[2 * j + 1] = -cf.clone();
        }
    }
    tab.price_out(&phase2);
    if !tab.run() {
        return SimplexOutcome::Unbounded;
    }

    let z = tab.point();
    let point = (0..n).map(|j| &z[2 * j] - &z[2 * j + 1]).collect();
    SimplexOutcome::Optimal {
        value: tab.value,
        point,
    }
}

/// Find a point satisfying every constraint (strict ones strictly).
///
/// Strict rows are encoded with an auxiliary slack `ε ≤ 1` added to each;
/// the system is strictly feasible iff the maximum of `ε` is positive.
pub fn feasible(system: &[LinearConstraint], n: usize) -> Option<QVec> {
    debug_assert!(system.iter().all(|c| c.dim() == n));
    let has_strict = system.iter().any(|c| c.op == RelOp::Lt);
    if !has_strict {
        return match solve_max(system, n, &zero_vec(n)) {
            SimplexOutcome::Optimal { point, .. } => Some(point),
            SimplexOutcome::Infeasible => None,
            SimplexOutcome::Unbounded => unreachable!("zero objective is bounded"),
        };
    }
    // ε is variable n.
    let mut rows: Vec<LinearConstraint> = Vec::with_capacity(system.len() + 2);
    for c in system {
        let mut coeffs = c.coeffs.clone();
        match c.op {
            RelOp::Lt => {
                coeffs.push(Rational::one());
                rows.push(LinearConstraint::new(coeffs, RelOp::Le, c.rhs.clone()));
            }
            op => {
                coeffs.push(Rational::zero());
                rows.push(LinearConstraint::new(coeffs, op, c.rhs.clone()));
            }
        }
    }
    let mut eps_cap = zero_vec(n + 1);
    eps_cap[n] = Rational::one();
    rows.push(LinearConstraint::new(eps_cap.clone(), RelOp::Le, rat(1)));
    rows.push(LinearConstraint::ge(eps_cap.clone(), rat(0)));
    match solve_max(&rows, n + 1, &eps_cap) {
        SimplexOutcome::Infeasible => None,
        SimplexOutcome::Unbounded => unreachable!("epsilon is capped"),
        SimplexOutcome::Optimal { value, mut point } => {
            if value.is_positive() {
                point.truncate(n);
                debug_assert!(system.iter().all(|c| c.eval(&point)));
                Some(point)
            } else {
                None
            }
        }
    }
}

/// Exact classification of `max c·x` over a mixed system.
pub fn optimize(system: &[LinearConstraint], n: usize, c: &[Rational]) -> LpOutcome {
    debug_assert_eq!(c.len(), n);
    if feasible(system, n).is_none() {
        return LpOutcome::Infeasible;
    }
    let closure: Vec<LinearConstraint> = system
        .iter()
        .map(|r| match r.op {
            RelOp::Lt => LinearConstraint::new(r.coeffs.clone(), RelOp::Le, r.rhs.clone()),
            _ => r.clone(),
        })
        .collect();
    match solve_max(&closure, n, c) {
        SimplexOutcome::Unbounded => LpOutcome::Unbounded,
        SimplexOutcome::Infeasible => unreachable!("closure of a feasible system"),
        SimplexOutcome::Optimal { value, point } => {
            if system.iter().all(|r| r.op != RelOp::Lt) {
                return LpOutcome::Optimum {
                    value,
                    witness: point,
                };
            }
            // Is the supremum attained by a strictly feasible point?
            let mut pinned = system.to_vec();
            pinned.push(LinearConstraint::new(c.to_vec(), RelOp::Eq, value.clone()));
            match feasible(&pinned, n) {
                Some(witness) => LpOutcome::Optimum { value, witness },
                None => LpOutcome::Supremum { value },
            }
        }
    }
}

/// Indices of `Le` rows that every feasible point satisfies with equality.
///
/// Decided per row by feasibility of the system with that row tightened
/// to a strict inequality.
pub fn implicit_equalities(system: &[LinearConstraint], n: usize) -> Result<Vec<usize>, Error> {
    if system.iter().any(|c| c.op == RelOp::Lt) {
        return Err(Error::Precondition(
            "implicit_equalities takes a non-strict system",
        ));
    }
    if feasible(system, n).is_none() {
        return Err(Error::Precondition(
            "implicit_equalities takes a feasible system",
        ));
    }
    let mut implicit = Vec::new();
    for (i, row) in system.iter().enumerate() {
        if row.op != RelOp::Le {
            continue;
        }
        let mut tightened = system.to_vec();
        tightened[i].op = RelOp::Lt;
        if feasible(&tightened, n).is_none() {
            implicit.push(i);
        }
    }
    Ok(implicit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::frac;

    fn le(coeffs: Vec<i64>, rhs: i64) -> LinearConstraint {
        LinearConstraint::new(coeffs.into_iter().map(rat).collect(), RelOp::Le, rat(rhs))
    }

    fn lt(coeffs: Vec<i64>, rhs: i64) -> LinearConstraint {
        LinearConstraint::new(coeffs.into_iter().map(rat).collect(), RelOp::Lt, rat(rhs))
    }

    fn eq(coeffs: Vec<i64>, rhs: i64) -> LinearConstraint {
        LinearConstraint::new(coeffs.into_iter().map(rat).collect(), RelOp::Eq, rat(rhs))
    }

    fn ge(coeffs: Vec<i64>, rhs: i64) -> LinearConstraint {
        LinearConstraint::ge(coeffs.into_iter().map(rat).collect(), rat(rhs))
    }

    #[test]
    fn box_interval_is_feasible() {
        let sys = vec![ge(vec![1], 0), le(vec![1], 1)];
        let p = feasible(&sys, 1).unwrap();
        assert!(sys.iter().all(|c| c.eval(&p)));
    }

    #[test]
    fn contradictory_strict_pair() {
        let sys = vec![lt(vec![-1], 0), lt(vec![1], 0)]; // x > 0, x < 0
        assert!(feasible(&sys, 1).is_none());
    }

    #[test]
    fn boundary_excluded() {
        let sys = vec![lt(vec![-1], 0), le(vec![1], 0)]; // x > 0, x <= 0
        assert!(feasible(&sys, 1).is_none());
    }

    #[test]
    fn strict_interior_point_found() {
        let sys = vec![lt(vec![-1, 0], 0), lt(vec![0, -1], 0), lt(vec![1, 1], 1)];
        let p = feasible(&sys, 2).unwrap();
        assert!(sys.iter().all(|c| c.eval(&p)));
    }

    #[test]
    fn optimum_on_a_box() {
        let sys = vec![le(vec![1, 0], 1), le(vec![0, 1], 2)];
        let out = optimize(&sys, 2, &[rat(1), rat(1)]);
        match out {
            LpOutcome::Optimum { value, witness } => {
                assert_eq!(value, rat(3));
                assert_eq!(witness, vec![rat(1), rat(2)]);
            }
            other => panic!("expected optimum, got {:?}", other),
        }
    }

    #[test]
    fn open_bound_gives_supremum() {
        let sys = vec![lt(vec![1], 1)];
        let out = optimize(&sys, 1, &[rat(1)]);
        assert_eq!(out, LpOutcome::Supremum { value: rat(1) });
    }

    #[test]
    fn unbounded_ray() {
        let sys = vec![ge(vec![1], 0)];
        let out = optimize(&sys, 1, &[rat(1)]);
        assert_eq!(out, LpOutcome::Unbounded);
    }

    #[test]
    fn infeasible_system_reported() {
        let sys = vec![eq(vec![1], 0), eq(vec![1], 1)];
        assert_eq!(optimize(&sys, 1, &[rat(1)]), LpOutcome::Infeasible);
    }

    #[test]
    fn strict_row_attained_elsewhere() {
        // max y s.t. x < 1, y <= 2: the supremum of y is attained even
        // though the system has a strict row.
        let sys = vec![lt(vec![1, 0], 1), le(vec![0, 1], 2)];
        match optimize(&sys, 2, &[rat(0), rat(1)]) {
            LpOutcome::Optimum { value, witness } => {
                assert_eq!(value, rat(2));
                assert!(sys.iter().all(|c| c.eval(&witness)));
            }
            other => panic!("expected optimum, got {:?}", other),
        }
    }

    #[test]
    fn fractional_optimum_is_exact() {
        // max x s.t. 3x <= 1
        let sys = vec![le(vec![3], 1)];
        match optimize(&sys, 1, &[rat(1)]) {
            LpOutcome::Optimum { value, witness } => {
                assert_eq!(value, frac(1, 3));
                assert_eq!(witness, vec![frac(1, 3)]);
            }
            other => panic!("expected optimum, got {:?}", other),
        }
    }

    #[test]
    fn forced_point_makes_rows_implicit() {
        let sys = vec![le(vec![1], 0), ge(vec![1], 0)];
        assert_eq!(implicit_equalities(&sys, 1).unwrap(), vec![0, 1]);
    }

    #[test]
    fn slack_row_is_not_implicit() {
        let sys = vec![le(vec![1], 1)];
        assert!(implicit_equalities(&sys, 1).unwrap().is_empty());
    }

    #[test]
    fn unique_vertex_makes_all_rows_implicit() {
        // x + y <= 1, x >= 1, y >= 0 forces (1, 0).
        let sys = vec![le(vec![1, 1], 1), ge(vec![1, 0], 1), ge(vec![0, 1], 0)];
        assert_eq!(implicit_equalities(&sys, 2).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn infeasible_input_is_a_precondition_error() {
        let sys = vec![le(vec![1], 0), ge(vec![1], 1)];
        assert!(matches!(
            implicit_equalities(&sys, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn zero_coefficient_rows_are_constant() {
        let truthy = vec![le(vec![0], 1)];
        assert!(feasible(&truthy, 1).is_some());
        let falsy = vec![le(vec![0], -1)];
        assert!(feasible(&falsy, 1).is_none());
        let strict_zero = vec![lt(vec![0], 0)];
        assert!(feasible(&strict_zero, 1).is_none());
    }
}
