//! Shared generators and small oracles for the integration suites.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use semilin_core::consistency::{lift, CspConstraint, CspInstance};
use semilin_core::lp::{LinearConstraint, RelOp};
use semilin_core::numeric::{rat, AffineSubspace, QMatrix, QVec, Rational};
use semilin_core::relation::{builtin_one, builtin_rplus, builtin_zero, LinearSet, SemilinearRelation};
use semilin_core::unary::UnaryNF;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_coeff(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound))
}

pub fn rand_vec(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> QVec {
    (0..n).map(|_| rand_coeff(rng, bound)).collect()
}

/// Random instance over the built-ins `{Rplus, One, Zero}`.
pub fn rand_equation_instance(rng: &mut ChaCha8Rng, n: usize, m: usize) -> CspInstance {
    let variables: Vec<String> = (0..n).map(|i| format!("v{}", i)).collect();
    let mut inst = CspInstance::new(variables);
    let rplus = inst.add_relation(builtin_rplus());
    let one = inst.add_relation(builtin_one());
    let zero = inst.add_relation(builtin_zero());
    for _ in 0..m {
        let (relation, arity) = match rng.gen_range(0..4) {
            0 | 1 => (rplus, 3),
            2 => (one, 1),
            _ => (zero, 1),
        };
        let scope: Vec<usize> = (0..arity).map(|_| rng.gen_range(0..n)).collect();
        inst.constraints.push(CspConstraint { relation, scope });
    }
    inst
}

/// Random relation: up to `max_disjuncts` disjuncts of up to `max_rows`
/// constraints with coefficients in `[-bound, bound]`.
pub fn rand_relation(
    rng: &mut ChaCha8Rng,
    name: &str,
    arity: usize,
    max_disjuncts: usize,
    max_rows: usize,
    bound: i64,
    allow_inequalities: bool,
) -> SemilinearRelation {
    let n_disjuncts = rng.gen_range(1..=max_disjuncts);
    let disjuncts = (0..n_disjuncts)
        .map(|_| {
            let n_rows = rng.gen_range(1..=max_rows);
            let rows = (0..n_rows)
                .map(|_| {
                    let coeffs = rand_vec(rng, arity, bound);
                    let op = if allow_inequalities {
                        match rng.gen_range(0..4) {
                            0 => RelOp::Le,
                            1 => RelOp::Lt,
                            _ => RelOp::Eq,
                        }
                    } else {
                        RelOp::Eq
                    };
                    LinearConstraint::new(coeffs, op, rand_coeff(rng, bound))
                })
                .collect();
            LinearSet::new(arity, rows).unwrap()
        })
        .collect();
    SemilinearRelation::new(name, arity, disjuncts).unwrap()
}

/// Random multi-disjunct instance with fresh relations per constraint.
pub fn rand_multidisjunct_instance(
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
    max_disjuncts: usize,
) -> CspInstance {
    let variables: Vec<String> = (0..n).map(|i| format!("v{}", i)).collect();
    let mut inst = CspInstance::new(variables);
    for k in 0..m {
        let arity = rng.gen_range(1..=n.min(3));
        let rel = rand_relation(
            rng,
            &format!("R{}", k),
            arity,
            max_disjuncts,
            2,
            3,
            true,
        );
        let idx = inst.add_relation(rel);
        let scope: Vec<usize> = (0..arity).map(|_| rng.gen_range(0..n)).collect();
        inst.constraints.push(CspConstraint { relation: idx, scope });
    }
    inst
}

/// Stack the lifted single-disjunct equation systems of an instance and
/// canonicalise: the completeness oracle for the equation fragment.
pub fn stacked_equations(inst: &CspInstance) -> AffineSubspace {
    let n = inst.n_vars();
    let mut rows: Vec<QVec> = Vec::new();
    let mut rhs: QVec = Vec::new();
    for c in &inst.constraints {
        let lifted = lift(inst.relation_of(c), &c.scope, n).unwrap();
        assert_eq!(lifted.disjuncts().len(), 1);
        for row in lifted.disjuncts()[0].constraints() {
            assert_eq!(row.op, RelOp::Eq);
            rows.push(row.coeffs.clone());
            rhs.push(row.rhs.clone());
        }
    }
    AffineSubspace::from_system(&QMatrix::new(rows, n).unwrap(), &rhs).unwrap()
}

/// Random bounded unary set that stays away from zero: a union of
/// points and intervals placed in `±[1, 12]`.
pub fn rand_away_from_zero_unary(rng: &mut ChaCha8Rng) -> UnaryNF {
    let n_pieces = rng.gen_range(1..=3);
    let mut u = UnaryNF::empty();
    for _ in 0..n_pieces {
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let lo = rng.gen_range(1i64..=10);
        if rng.gen_bool(0.5) {
            u = u.union(&UnaryNF::point(rat(sign * lo)));
        } else {
            let hi = lo + rng.gen_range(1i64..=2);
            let (a, b) = if sign > 0 { (lo, hi) } else { (-hi, -lo) };
            u = u.union(&UnaryNF::interval(
                Some(rat(a)),
                rng.gen_bool(0.5),
                Some(rat(b)),
                rng.gen_bool(0.5),
            ));
        }
    }
    u
}

/// Solve `basis · λ = target` exactly (columns independent); `None`
/// when the target is outside the column span.
pub fn solve_columns(basis: &[Vec<BigInt>], target: &[Rational]) -> Option<QVec> {
    use num_traits::Zero;
    let n = target.len();
    let k = basis.len();
    // Augmented rows of the n×(k+1) system.
    let mut rows: Vec<QVec> = (0..n)
        .map(|i| {
            let mut row: QVec = (0..k)
                .map(|j| Rational::from_integer(basis[j][i].clone()))
                .collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r0 = 0;
    for col in 0..k {
        let pivot = match (r0..n).find(|&r| !rows[r][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        rows.swap(r0, pivot);
        let inv = rows[r0][col].clone().recip();
        for x in rows[r0].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for r in 0..n {
            if r != r0 && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let src = rows[r0].clone();
                for (x, y) in rows[r].iter_mut().zip(&src) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivot_cols.push(col);
        r0 += 1;
        if r0 == n {
            break;
        }
    }
    // Consistency: residual rows must have zero right-hand side.
    for r in r0..n {
        if !rows[r][k].is_zero() {
            return None;
        }
    }
    let mut lambda = vec![Rational::zero(); k];
    for (r, &col) in pivot_cols.iter().enumerate() {
        lambda[col] = rows[r][k].clone();
    }
    Some(lambda)
}
