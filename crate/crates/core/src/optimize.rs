//! Linear optimisation over the solution set of a CSP instance.
//!
//! Two routes. The affine route runs affine consistency and reads the
//! answer off the final subspace: the objective is constant on the
//! subspace (optimum) or some direction improves it (unbounded). The
//! direct route applies only when every relation has a single disjunct:
//! all lifted constraints stack into one mixed system handed to the
//! exact simplex, which also distinguishes attained optima from
//! suprema.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::consistency::{affine_consistency, lift, CspInstance};
use crate::error::Error;
use crate::lp::{optimize as lp_optimize, LinearConstraint, LpOutcome};
use crate::numeric::{dot, QVec, Rational};

/// Answer of an optimisation run.
///
/// `Optimum` from the affine route carries no witness: a point of the
/// final subspace need not solve the instance, so reporting one would
/// be unsound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OptAnswer {
    Unsatisfiable,
    Unbounded,
    Optimum {
        value: Rational,
        witness: Option<QVec>,
    },
    /// The optimum is arbitrarily close to the value but not attained.
    Approaches { value: Rational },
}

/// Optimise via affine consistency.
///
/// Exact for languages without a definable bounded non-constant unary
/// relation; otherwise the answer is advisory (the final subspace
/// over-approximates the solution set).
pub fn opt_affine(inst: &CspInstance) -> Result<OptAnswer, Error> {
    let c = inst.objective.as_ref().ok_or(Error::MissingObjective)?;
    let (answer, trace) = affine_consistency(inst)?;
    if !answer {
        return Ok(OptAnswer::Unsatisfiable);
    }
    let a = &trace.final_subspace;
    // The objective is constant on A iff it annihilates every direction.
    if a.directions().iter().all(|d| dot(c, d).is_zero()) {
        Ok(OptAnswer::Optimum {
            value: dot(c, a.base().expect("non-empty subspace")),
            witness: None,
        })
    } else {
        Ok(OptAnswer::Unbounded)
    }
}

/// Optimise by stacking single-disjunct constraints into one LP.
pub fn opt_direct(inst: &CspInstance) -> Result<OptAnswer, Error> {
    let c = inst.objective.as_ref().ok_or(Error::MissingObjective)?;
    let n = inst.n_vars();
    let mut rows: Vec<LinearConstraint> = Vec::new();
    for constraint in &inst.constraints {
        let rel = inst.relation_of(constraint);
        if rel.disjuncts().len() != 1 {
            return Err(Error::WrongRoute);
        }
        let lifted = lift(rel, &constraint.scope, n)?;
        rows.extend(lifted.disjuncts()[0].constraints().iter().cloned());
    }
    Ok(match lp_optimize(&rows, n, c) {
        LpOutcome::Infeasible => OptAnswer::Unsatisfiable,
        LpOutcome::Unbounded => OptAnswer::Unbounded,
        LpOutcome::Optimum { value, witness } => OptAnswer::Optimum {
            value,
            witness: Some(witness),
        },
        LpOutcome::Supremum { value } => OptAnswer::Approaches { value },
    })
}

/// True when the direct route applies to the instance.
pub fn direct_route_applies(inst: &CspInstance) -> bool {
    inst.constraints
        .iter()
        .all(|c| inst.relation_of(c).disjuncts().len() == 1)
}
