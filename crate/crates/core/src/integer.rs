//! Integer-solution machinery: Hermite normal form, integer points in
//! affine subspaces, integrality-constrained solving, and scalability
//! rescaling.
//!
//! Integer feasibility of an equation system `E·x = f` is decided by a
//! column-style Hermite normal form: with `M·U = H` lower triangular
//! and `U` unimodular, the substitution `x = U·y` turns the system into
//! a forward substitution whose pivot components must come out integral;
//! the free components of `y` enumerate the full solution lattice
//! through the corresponding columns of `U`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::consistency::{affine_consistency, check_assignment, CspInstance};
use crate::error::Error;
use crate::numeric::{AffineSubspace, QVec, Rational};
use crate::relation::SemilinearRelation;
use crate::unary::UnaryNF;

/// All integer points of an affine subspace: `base + Σ λ_i basis_i`
/// with integral `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeDescription {
    pub base: Vec<BigInt>,
    /// Linearly independent integer directions.
    pub basis: Vec<Vec<BigInt>>,
}

/// Result of a Hermite-normal-form computation.
#[derive(Clone, Debug)]
pub struct HnfResult {
    /// Column-style HNF of the input, `m × n`.
    pub h: Vec<Vec<BigInt>>,
    /// Unimodular `n × n` transform with `M·U = H`.
    pub u: Vec<Vec<BigInt>>,
    /// Pivot positions `(row, col)` with strictly increasing rows and
    /// columns.
    pub pivots: Vec<(usize, usize)>,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Column-style Hermite normal form via extended-gcd column sweeps.
///
/// Pivots are positive; entries left of a pivot in its row are reduced
/// into `[0, pivot)`.
pub fn hnf(m: &[Vec<BigInt>]) -> HnfResult {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut h: Vec<Vec<BigInt>> = m.to_vec();
    let mut u = identity(cols);

    let swap_cols = |h: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        if a == b {
            return;
        }
        for row in h.iter_mut() {
            row.swap(a, b);
        }
        for row in u.iter_mut() {
            row.swap(a, b);
        }
    };
    // col_b -= q * col_a
    let sub_col = |h: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, b: usize, q: &BigInt, a: usize| {
        if q.is_zero() {
            return;
        }
        for row in h.iter_mut() {
            let t = &row[a] * q;
            row[b] -= t;
        }
        for row in u.iter_mut() {
            let t = &row[a] * q;
            row[b] -= t;
        }
    };
    let negate_col = |h: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, a: usize| {
        for row in h.iter_mut() {
            row[a] = -row[a].clone();
        }
        for row in u.iter_mut() {
            row[a] = -row[a].clone();
        }
    };

    let mut pivots = Vec::new();
    let mut col = 0;
    for row in 0..rows {
        if col == cols {
            break;
        }
        // Sweep the row's entries in columns >= col down to a single gcd.
        loop {
            let mut smallest: Option<usize> = None;
            for j in col..cols {
                if h[row][j].is_zero() {
                    continue;
                }
                smallest = Some(match smallest {
                    None => j,
                    Some(s) => {
                        if h[row][j].magnitude() < h[row][s].magnitude() {
                            j
                        } else {
                            s
                        }
                    }
                });
            }
            let s = match smallest {
                None => break,
                Some(s) => s,
            };
            swap_cols(&mut h, &mut u, col, s);
            let mut others = false;
            for j in col + 1..cols {
                if h[row][j].is_zero() {
                    continue;
                }
                let q = &h[row][j] / &h[row][col];
                sub_col(&mut h, &mut u, j, &q, col);
                if !h[row][j].is_zero() {
                    others = true;
                }
            }
            if !others {
                break;
            }
        }
        if h[row][col].is_zero() {
            continue;
        }
        if h[row][col].is_negative() {
            negate_col(&mut h, &mut u, col);
        }
        // Reduce entries left of the pivot into [0, pivot).
        for j in 0..col {
            if !h[row][j].is_zero() {
                let q = h[row][j].div_floor(&h[row][col]);
                sub_col(&mut h, &mut u, j, &q, col);
            }
        }
        pivots.push((row, col));
        col += 1;
    }
    HnfResult { h, u, pivots }
}

/// Clear denominators of the subspace's equation system into integer
/// rows.
fn integer_system(a: &AffineSubspace) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut e = Vec::new();
    let mut f = Vec::new();
    for (row, rhs) in a.equations().iter().zip(a.rhs()) {
        let mut lcm = rhs.denom().clone();
        for q in row {
            lcm = lcm.lcm(q.denom());
        }
        e.push(
            row.iter()
                .map(|q| q.numer() * (&lcm / q.denom()))
                .collect::<Vec<BigInt>>(),
        );
        f.push(rhs.numer() * (&lcm / rhs.denom()));
    }
    (e, f)
}

/// One integer point of the subspace plus the lattice of all of them,
/// or `None` when no integer point exists.
pub fn integer_point(
    a: &AffineSubspace,
) -> Result<Option<(Vec<BigInt>, LatticeDescription)>, Error> {
    if a.is_empty() {
        return Err(Error::Precondition("integer_point takes a non-empty subspace"));
    }
    let n = a.ambient();
    let (e, f) = integer_system(a);
    let HnfResult { h, u, pivots } = if e.is_empty() {
        HnfResult {
            h: Vec::new(),
            u: identity(n),
            pivots: Vec::new(),
        }
    } else {
        hnf(&e)
    };
    // Forward substitution over the rationals; pivot components must be
    // integers for an integer point to exist.
    let mut y = vec![BigInt::zero(); n];
    for &(r, c) in &pivots {
        let mut residual = Rational::from_integer(f[r].clone());
        for &(_, c2) in pivots.iter().take_while(|&&(r2, _)| r2 < r) {
            if !h[r][c2].is_zero() {
                residual -= Rational::from_integer(&h[r][c2] * &y[c2]);
            }
        }
        let value = residual / Rational::from_integer(h[r][c].clone());
        if !value.is_integer() {
            return Ok(None);
        }
        y[c] = value.to_integer();
    }
    let point: Vec<BigInt> = (0..n)
        .map(|i| (0..n).map(|j| &u[i][j] * &y[j]).sum())
        .collect();
    debug_assert!({
        let p: QVec = point.iter().cloned().map(Rational::from_integer).collect();
        a.contains(&p)
    });
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let basis: Vec<Vec<BigInt>> = (0..n)
        .filter(|j| !pivot_cols.contains(j))
        .map(|j| (0..n).map(|i| u[i][j].clone()).collect())
        .collect();
    Ok(Some((
        point.clone(),
        LatticeDescription { base: point, basis },
    )))
}

/// Decide satisfiability with integrality constraints.
///
/// 0-valid instances are accepted outright; otherwise affine
/// consistency runs, the final subspace is projected onto the integer
/// variables, and the lattice decides. Exact under the same hypothesis
/// as the consistency procedure itself.
pub fn solve_with_integrality(inst: &CspInstance) -> Result<bool, Error> {
    let zero_valid = inst.constraints.iter().try_fold(true, |acc, c| {
        let rel = inst.relation_of(c);
        let zeros = vec![Rational::zero(); rel.arity()];
        rel.eval(&zeros).map(|ok| acc && ok)
    })?;
    if zero_valid {
        return Ok(true);
    }
    let (answer, trace) = affine_consistency(inst)?;
    if !answer {
        return Ok(false);
    }
    let ints: Vec<usize> = inst.int_vars.clone().unwrap_or_default();
    if ints.is_empty() {
        return Ok(true);
    }
    let projected = trace.final_subspace.project(&ints);
    Ok(integer_point(&projected)?.is_some())
}

/// `{ a ∈ Q | a·p ∈ R }`, the scaling section of `R` at `p ≠ 0`.
pub fn scaling_section(r: &SemilinearRelation, p: &[Rational]) -> Result<UnaryNF, Error> {
    if p.iter().all(Zero::is_zero) {
        return Err(Error::DegenerateLine);
    }
    let origin = vec![Rational::zero(); p.len()];
    r.restrict_line(&origin, p)
}

/// Scale a rational solution to an integral one.
///
/// For each constraint the scaling section at the solution must contain
/// a tail `(A_i, ∞)`; the factor is the smallest positive multiple of
/// the solution's denominator lcm strictly exceeding every `A_i`.
pub fn scale_to_integer(inst: &CspInstance, s: &[Rational]) -> Result<QVec, Error> {
    if !check_assignment(inst, s, false)? {
        return Err(Error::Precondition("scale_to_integer takes a solution"));
    }
    let mut threshold = Rational::zero();
    for (i, c) in inst.constraints.iter().enumerate() {
        let tuple: QVec = c.scope.iter().map(|&v| s[v].clone()).collect();
        let section = if tuple.iter().all(Zero::is_zero) {
            // a·0 = 0 stays a member for every a.
            UnaryNF::full_line()
        } else {
            scaling_section(inst.relation_of(c), &tuple)?
        };
        match section.has_tail() {
            Some(a) => threshold = threshold.max(a),
            None => return Err(Error::ScalabilityViolation { constraint: i }),
        }
    }
    let mut lcm = BigInt::one();
    for q in s {
        lcm = lcm.lcm(q.denom());
    }
    let lcm = Rational::from_integer(lcm);
    let k = (&threshold / &lcm).floor() + Rational::one();
    let k = k.max(Rational::one());
    let factor = k * lcm;
    let scaled: QVec = s.iter().map(|q| q * &factor).collect();
    debug_assert!(scaled.iter().all(Rational::is_integer));
    debug_assert!(check_assignment(inst, &scaled, false)?);
    Ok(scaled)
}
