//! Language- and relation-level analyses.
//!
//! Decidable flags (0-validity, homogeneity), the syntactic cone with
//! its membership oracle, scaling-endomorphism checks, the non-zero
//! unary projection, and the unary gadget constructions that underpin
//! the NAE-3SAT hardness reduction. Whether a whole language closure
//! contains a bounded non-constant unary relation is not decided here;
//! [`language_report`] marks such predicates as unknown and reports
//! probe-level evidence instead.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::integer::scaling_section;
use crate::lp::{feasible, LinearConstraint, RelOp};
use crate::numeric::{frac, rat, scale_vec, QVec, Rational};
use crate::relation::{format_rational, LinearSet, SemilinearRelation};
use crate::unary::{
    element_near_hi, element_near_lo, open_interval, Component, Extremum,
    UnaryNF,
};

/// True iff the relation contains the all-zero tuple.
pub fn is_zero_valid(r: &SemilinearRelation) -> Result<bool, Error> {
    let zeros = vec![Rational::zero(); r.arity()];
    r.eval(&zeros)
}

/// True iff every constraint in every disjunct has right-hand side 0.
pub fn is_homogeneous(r: &SemilinearRelation) -> bool {
    r.disjuncts()
        .iter()
        .all(|d| d.constraints().iter().all(|c| c.rhs.is_zero()))
}

/// The two-pass syntactic cone.
///
/// Disjuncts containing a non-homogeneous inequality violated by the
/// zero tuple are removed, then all remaining non-homogeneous
/// inequalities are dropped. The output is syntactically homogeneous
/// and equals `cone(R)` whenever the language context violates the
/// positive-gap-at-zero property; a disjunct stripped of every row is
/// kept as the trivial row `0 = 0`.
pub fn syntactic_cone(r: &SemilinearRelation) -> SemilinearRelation {
    let arity = r.arity();
    let mut disjuncts = Vec::new();
    for d in r.disjuncts() {
        let zero_ok = d.constraints().iter().all(|c| {
            if c.rhs.is_zero() {
                return true;
            }
            match c.op {
                RelOp::Eq => false,
                RelOp::Le => !c.rhs.is_negative(),
                RelOp::Lt => c.rhs.is_positive(),
            }
        });
        if !zero_ok {
            continue;
        }
        let mut rows: Vec<LinearConstraint> = d
            .constraints()
            .iter()
            .filter(|c| c.rhs.is_zero())
            .cloned()
            .collect();
        if rows.is_empty() {
            rows.push(LinearConstraint::new(
                vec![Rational::zero(); arity],
                RelOp::Eq,
                Rational::zero(),
            ));
        }
        disjuncts.push(LinearSet::new(arity, rows).expect("arity preserved"));
    }
    SemilinearRelation::new(&format!("cone_{}", r.name()), arity, disjuncts)
        .expect("arity preserved")
}

/// True iff `μ·p ∈ R` for some `μ > 0`.
pub fn cone_membership(r: &SemilinearRelation, p: &[Rational]) -> Result<bool, Error> {
    let section = scaling_section(r, p)?;
    Ok(!section
        .intersect(&open_interval(Some(Rational::zero()), None))
        .is_empty())
}

/// Check `x ∈ R ⇔ a·x ∈ R` on the sampled points; must always hold for
/// homogeneous relations and positive `a`.
pub fn check_scaling_invariance(
    r: &SemilinearRelation,
    a: &Rational,
    points: &[QVec],
) -> Result<bool, Error> {
    debug_assert!(a.is_positive());
    for p in points {
        if r.eval(p)? != r.eval(&scale_vec(a, p))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Substitute `var := 0` in a constraint system (coefficient dropped).
fn pin_to_zero(rows: &[LinearConstraint], pins: &[usize]) -> Vec<LinearConstraint> {
    rows.iter()
        .map(|c| {
            let coeffs = c
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, q)| {
                    if pins.contains(&i) {
                        Rational::zero()
                    } else {
                        q.clone()
                    }
                })
                .collect();
            LinearConstraint::new(coeffs, c.op, c.rhs.clone())
        })
        .collect()
}

/// Eliminate one variable from a mixed system by substitution (when an
/// equation pins it) or by combining lower and upper bounds.
fn fourier_motzkin_eliminate(rows: Vec<LinearConstraint>, var: usize) -> Vec<LinearConstraint> {
    if let Some(src_idx) = rows
        .iter()
        .position(|c| c.op == RelOp::Eq && !c.coeffs[var].is_zero())
    {
        let src = rows[src_idx].clone();
        let pivot = src.coeffs[var].clone();
        return rows
            .into_iter()
            .enumerate()
            .filter(|(i, _)| *i != src_idx)
            .map(|(_, mut c)| {
                if !c.coeffs[var].is_zero() {
                    let f = &c.coeffs[var] / &pivot;
                    for (x, y) in c.coeffs.iter_mut().zip(&src.coeffs) {
                        *x -= &f * y;
                    }
                    c.rhs -= &f * &src.rhs;
                }
                c
            })
            .collect();
    }
    let mut out: Vec<LinearConstraint> = Vec::new();
    let mut lowers: Vec<LinearConstraint> = Vec::new();
    let mut uppers: Vec<LinearConstraint> = Vec::new();
    for c in rows {
        if c.coeffs[var].is_zero() {
            out.push(c);
        } else if c.coeffs[var].is_positive() {
            uppers.push(c);
        } else {
            lowers.push(c);
        }
    }
    for lo in &lowers {
        for up in &uppers {
            // c_lo < 0 < c_up: scale and add so the variable cancels.
            let a = up.coeffs[var].clone();
            let b = -lo.coeffs[var].clone();
            let coeffs: QVec = lo
                .coeffs
                .iter()
                .zip(&up.coeffs)
                .map(|(l, u)| &a * l + &b * u)
                .collect();
            let rhs = &a * &lo.rhs + &b * &up.rhs;
            let op = if lo.op == RelOp::Lt || up.op == RelOp::Lt {
                RelOp::Lt
            } else {
                RelOp::Le
            };
            out.push(LinearConstraint::new(coeffs, op, rhs));
        }
    }
    out
}

/// Project a system onto one coordinate by eliminating all others.
fn project_to_coordinate(rows: &[LinearConstraint], arity: usize, target: usize) -> UnaryNF {
    let mut rows = rows.to_vec();
    for var in 0..arity {
        if var != target {
            rows = fourier_motzkin_eliminate(rows, var);
        }
    }
    let one_var: Vec<(Rational, RelOp, Rational)> = rows
        .iter()
        .map(|c| (c.coeffs[target].clone(), c.op, c.rhs.clone()))
        .collect();
    UnaryNF::from_one_var_system(&one_var)
}

/// All size-`k` index subsets of `0..n`, lexicographic.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// From a non-empty relation that misses the zero tuple, derive a
/// non-empty unary relation not containing 0.
///
/// Searches zero patterns of decreasing size for a maximal pinnable
/// set, then projects the pinned relation onto the first remaining
/// coordinate by one-variable Fourier–Motzkin elimination.
pub fn nonzero_unary_projection(r: &SemilinearRelation) -> Result<UnaryNF, Error> {
    if is_zero_valid(r)? {
        return Err(Error::Precondition(
            "nonzero_unary_projection takes a relation missing the zero tuple",
        ));
    }
    let k = r.arity();
    let pinned_feasible = |pins: &[usize]| -> bool {
        r.disjuncts()
            .iter()
            .any(|d| feasible(&pin_to_zero(d.constraints(), pins), k).is_some())
    };
    let mut pattern: Option<Vec<usize>> = None;
    'outer: for size in (0..k).rev() {
        for z in combinations(k, size) {
            if pinned_feasible(&z) {
                pattern = Some(z);
                break 'outer;
            }
        }
    }
    let pattern = pattern.ok_or(Error::Precondition(
        "nonzero_unary_projection takes a non-empty relation",
    ))?;
    let target = (0..k)
        .find(|i| !pattern.contains(i))
        .expect("a full zero pattern would make the relation 0-valid");
    let mut result = UnaryNF::empty();
    for d in r.disjuncts() {
        let rows = pin_to_zero(d.constraints(), &pattern);
        result = result.union(&project_to_coordinate(&rows, k, target));
    }
    debug_assert!(!result.is_empty());
    debug_assert!(!result.is_zero_valid());
    Ok(result)
}

/// Output of [`halfbound_construct`].
#[derive(Clone, Debug)]
pub struct HalfboundOutput {
    /// Bounded set containing an interval: a bnu.
    pub bnu: UnaryNF,
    /// Present when the input has points of both signs: a non-empty
    /// bounded set.
    pub bounded: Option<UnaryNF>,
    /// True when the input was unbounded below and the construction ran
    /// on the mirrored set.
    pub mirrored: bool,
}

/// Pick `a > 0` with `[a, ∞) ⊆ u` and `(−∞, −a] ∩ u = ∅`, smallest
/// integer-friendly choice first.
fn halfbound_threshold(u: &UnaryNF) -> Rational {
    let tail_lo = u.has_tail().expect("unbounded above");
    let tail_closed = u.contains(&tail_lo);
    let (inf_v, inf_attained) = match u.inf() {
        Extremum::Finite { value, attained } => (value, attained),
        _ => unreachable!("bounded below"),
    };
    let candidate = tail_lo.clone().max(-inf_v.clone()).max(Rational::zero());
    let tail_ok = candidate > tail_lo || (candidate == tail_lo && tail_closed);
    let neg_ok = candidate > -inf_v.clone() || (candidate == -inf_v.clone() && !inf_attained);
    if candidate.is_positive() && tail_ok && neg_ok {
        candidate
    } else {
        candidate + Rational::one()
    }
}

/// The half-bounded constructions.
///
/// For a set unbounded in exactly one direction, part (1) intersects the
/// set with a reflected translate, producing a bounded set containing an
/// interval. When the set has points of both signs, part (2) intersects
/// it with a scaled copy, producing a non-empty bounded set. Inputs
/// unbounded below are mirrored through negation first and the results
/// mirrored back.
pub fn halfbound_construct(u: &UnaryNF) -> Result<HalfboundOutput, Error> {
    let unbounded_above = matches!(u.sup(), Extremum::PosInf);
    let unbounded_below = matches!(u.inf(), Extremum::NegInf);
    if unbounded_above == unbounded_below {
        return Err(Error::Precondition(
            "halfbound_construct takes a set unbounded in exactly one direction",
        ));
    }
    let mirrored = unbounded_below;
    let v = if mirrored { u.negate() } else { u.clone() };

    let a = halfbound_threshold(&v);
    let b = rat(2) * &a + Rational::one();
    let part1 = v.intersect(&v.negate().translate(&b));
    debug_assert!(part1.is_bnu());

    let negatives = v.intersect(&open_interval(None, Some(Rational::zero())));
    let positives = v.intersect(&open_interval(Some(Rational::zero()), None));
    let part2 = if !negatives.is_empty() && !positives.is_empty() {
        let a2 = match positives.inf() {
            Extremum::Finite {
                value,
                attained: true,
            } => value,
            _ => element_near_lo(&positives.components()[0], &Rational::one())
                .expect("bounded below"),
        };
        let c = match negatives.inf() {
            Extremum::Finite {
                value,
                attained: true,
            } => value,
            _ => element_near_lo(&negatives.components()[0], &Rational::one())
                .expect("bounded below"),
        };
        let scaled = v.scale(&(&a2 / &c)).expect("a2 and c are nonzero");
        let result = v.intersect(&scaled);
        debug_assert!(result.is_bounded() && !result.is_empty());
        debug_assert!(result.contains(&a2));
        Some(result)
    } else {
        None
    };

    if mirrored {
        Ok(HalfboundOutput {
            bnu: part1.negate(),
            bounded: part2.map(|p| p.negate()),
            mirrored,
        })
    } else {
        Ok(HalfboundOutput {
            bnu: part1,
            bounded: part2,
            mirrored,
        })
    }
}

/// Which center set an approximate unit clusters around.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitTag {
    /// Within δ of `{1}`.
    One,
    /// Within δ of `{−1, 1}`.
    PmOne,
}

/// An element of maximal or minimal magnitude, within a margin.
fn extreme_magnitude_element(t: &UnaryNF, want_max: bool, margin: &Rational) -> Rational {
    let comps = t.components();
    if want_max {
        let sup_v = match t.sup() {
            Extremum::Finite { value, .. } => value,
            _ => unreachable!("bounded"),
        };
        let inf_v = match t.inf() {
            Extremum::Finite { value, .. } => value,
            _ => unreachable!("bounded"),
        };
        if sup_v.abs() >= inf_v.abs() {
            element_near_hi(comps.last().unwrap(), margin).expect("bounded above")
        } else {
            element_near_lo(comps.first().unwrap(), margin).expect("bounded below")
        }
    } else {
        // Minimal magnitude: the inner boundary nearest zero. The set is
        // bounded away from zero, so every component is single-signed.
        let neg = t.intersect(&open_interval(None, Some(Rational::zero())));
        let pos = t.intersect(&open_interval(Some(Rational::zero()), None));
        let pos_cand = pos
            .components()
            .first()
            .map(|c| element_near_lo(c, margin).expect("bounded below"));
        let neg_cand = neg
            .components()
            .last()
            .map(|c| element_near_hi(c, margin).expect("bounded above"));
        match (pos_cand, neg_cand) {
            (Some(p), Some(n)) => {
                if p.abs() <= n.abs() {
                    p
                } else {
                    n
                }
            }
            (Some(p), None) => p,
            (None, Some(n)) => n,
            (None, None) => unreachable!("non-empty"),
        }
    }
}

/// Normalise a bounded set that avoids zero into an approximate unit.
///
/// Returns a set within `delta` of `{1}` (tag `One`) or of `{−1, 1}`
/// (tag `PmOne`, which also contains both centers). The symmetric part
/// of the input decides the route; otherwise the set is normalised by
/// elements of extremal magnitude and then squeezed around 1 by a
/// second scaling pass.
pub fn approximate_unit(t: &UnaryNF, delta: &Rational) -> Result<(UnaryNF, UnitTag), Error> {
    if t.is_empty() || !t.is_bounded() || t.bounded_away_from_zero().is_none() {
        return Err(Error::Precondition(
            "approximate_unit takes a non-empty bounded set avoiding zero",
        ));
    }
    debug_assert!(delta.is_positive());
    let symmetric = t.intersect(&t.negate());
    if !symmetric.is_empty() {
        let mut margin = delta.min(&Rational::one()).clone() / rat(2);
        for _ in 0..24 {
            let u = squeeze_symmetric(&symmetric, &margin);
            if u.contains(&rat(-1))
                && u.contains(&rat(1))
                && u.in_neighborhood(&[rat(-1), rat(1)], delta)
            {
                return Ok((u, UnitTag::PmOne));
            }
            margin /= rat(2);
        }
        return Err(Error::GadgetSearchExhausted);
    }
    // Magnitude-split route: normalise by a top- and a bottom-magnitude
    // element, then squeeze around 1.
    let mut margin = delta.min(&Rational::one()).clone() / rat(2);
    for _ in 0..24 {
        let a = extreme_magnitude_element(t, true, &margin);
        let b = extreme_magnitude_element(t, false, &margin);
        let u0 = t
            .scale(&a.clone().recip())
            .expect("extreme elements avoid zero")
            .intersect(&t.scale(&b.clone().recip()).expect("nonzero"));
        debug_assert!(u0.contains(&rat(1)));
        let has_negatives = !u0
            .intersect(&open_interval(None, Some(Rational::zero())))
            .is_empty();
        if !has_negatives {
            let u = squeeze_positive(&u0, &margin);
            if u.contains(&rat(1)) && u.in_neighborhood(&[rat(1)], delta) {
                return Ok((u, UnitTag::One));
            }
            let sym = u.intersect(&u.negate());
            if !sym.is_empty() {
                let v = squeeze_symmetric(&sym, &margin);
                if v.contains(&rat(-1))
                    && v.contains(&rat(1))
                    && v.in_neighborhood(&[rat(-1), rat(1)], delta)
                {
                    return Ok((v, UnitTag::PmOne));
                }
            }
        }
        margin /= rat(2);
    }
    Err(Error::GadgetSearchExhausted)
}

/// `scale(1/p⁻, U) ∩ scale(1/p⁺, U)` with near-extremal positive `p±`.
fn squeeze_positive(u: &UnaryNF, rel_margin: &Rational) -> UnaryNF {
    let sup_v = match u.sup() {
        Extremum::Finite { value, .. } => value,
        _ => unreachable!("bounded"),
    };
    let inf_v = match u.inf() {
        Extremum::Finite { value, .. } => value,
        _ => unreachable!("bounded"),
    };
    let p_hi = element_near_hi(u.components().last().unwrap(), &(rel_margin * &sup_v))
        .expect("bounded above");
    let p_lo = element_near_lo(u.components().first().unwrap(), &(rel_margin * &inf_v))
        .expect("bounded below");
    u.scale(&p_lo.recip())
        .expect("positive")
        .intersect(&u.scale(&p_hi.recip()).expect("positive"))
}

/// Squeeze a symmetric set around `{−1, 1}` by its positive part.
fn squeeze_symmetric(sym: &UnaryNF, rel_margin: &Rational) -> UnaryNF {
    let pos = sym.intersect(&open_interval(Some(Rational::zero()), None));
    debug_assert!(!pos.is_empty(), "symmetric set avoiding zero has positives");
    let sup_v = match pos.sup() {
        Extremum::Finite { value, .. } => value,
        _ => unreachable!("bounded"),
    };
    let inf_v = match pos.inf() {
        Extremum::Finite { value, .. } => value,
        _ => unreachable!("bounded"),
    };
    let p_hi = element_near_hi(pos.components().last().unwrap(), &(rel_margin * &sup_v))
        .expect("bounded above");
    let p_lo = element_near_lo(pos.components().first().unwrap(), &(rel_margin * &inf_v))
        .expect("bounded below");
    sym.scale(&p_lo.recip())
        .expect("positive")
        .intersect(&sym.scale(&p_hi.recip()).expect("positive"))
}

/// Pick witnesses `p < q` around a gap `(g1, g2)` so that their midpoint
/// falls strictly inside the gap.
fn straddle_gap(
    u: &UnaryNF,
    g1: &Rational,
    g2: &Rational,
) -> (Rational, Rational, Rational) {
    let width = g2 - g1;
    let margin = &width / rat(8);
    let comps = u.components();
    let left_idx = comps
        .iter()
        .rposition(|c| match c {
            Component::Point(v) => v <= g1,
            Component::Interval { hi, .. } => hi.as_ref().is_some_and(|h| h <= g1),
        })
        .expect("gap has a left neighbour");
    let p = element_near_hi(&comps[left_idx], &margin).expect("gap endpoint is finite");
    let q = element_near_lo(&comps[left_idx + 1], &margin).expect("gap endpoint is finite");
    let m = (&p + &q) / rat(2);
    debug_assert!(&m > g1 && &m < g2);
    (p, q, m)
}

/// Two distinct near-extremal elements of a bnu.
fn spread_pair(t: &UnaryNF) -> (Rational, Rational) {
    let sup_v = match t.sup() {
        Extremum::Finite { value, .. } => value,
        _ => unreachable!("bounded"),
    };
    let inf_v = match t.inf() {
        Extremum::Finite { value, .. } => value,
        _ => unreachable!("bounded"),
    };
    let margin = (&sup_v - &inf_v) / rat(8);
    let p = element_near_lo(t.components().first().unwrap(), &margin).expect("bounded");
    let q = element_near_hi(t.components().last().unwrap(), &margin).expect("bounded");
    debug_assert!(p < q);
    (p, q)
}

/// Translate a scaled set toward zero through the approximate unit:
/// `{ z − y·m | z ∈ set, y ∈ unit }`.
fn gadget_translate(set: &UnaryNF, m: &Rational, unit: &UnaryNF) -> UnaryNF {
    if m.is_zero() {
        set.clone()
    } else {
        set.minkowski_sum(&unit.scale(&-m.clone()).expect("m is nonzero"))
    }
}

/// Build a relation within 1/2 of `{−1, 1}` (containing both centers)
/// from a bnu avoiding zero and a unary set that excludes an interval.
///
/// If the bnu already qualifies it is returned unchanged; if its
/// symmetric part yields an approximate `{−1, 1}` unit, that is
/// returned. Otherwise two near-translates are intersected: the
/// interval-excluding set re-centred on its widest gap, and the bnu
/// re-centred between two spread points, both smeared by an approximate
/// `{1}` unit whose δ shrinks by halving until the intersection lands
/// in the target class.
pub fn hardness_gadget(t: &UnaryNF, u: &UnaryNF) -> Result<UnaryNF, Error> {
    if !t.is_bnu() || t.bounded_away_from_zero().is_none() {
        return Err(Error::Precondition(
            "hardness_gadget takes a bnu avoiding zero",
        ));
    }
    if u.essentially_convex() {
        return Err(Error::Precondition(
            "hardness_gadget takes a set that excludes an interval",
        ));
    }
    let centers = [rat(-1), rat(1)];
    let half = frac(1, 2);
    if t.contains(&rat(-1)) && t.contains(&rat(1)) && t.in_neighborhood(&centers, &half) {
        return Ok(t.clone());
    }

    // Re-centre the interval-excluding set on its widest gap.
    let (g1, g2) = u
        .gaps()
        .into_iter()
        .max_by(|a, b| (&a.1 - &a.0).cmp(&(&b.1 - &b.0)))
        .expect("not essentially convex");
    let (p, q, m) = straddle_gap(u, &g1, &g2);
    let c = rat(2) / (&q - &p);
    let u_scaled = u.scale(&c).expect("positive scale");
    let m_scaled = &c * &m;

    // Re-centre the bnu between two spread points.
    let (p2, q2) = spread_pair(t);
    let c2 = rat(2) / (&q2 - &p2);
    let t_scaled = t.scale(&c2).expect("positive scale");
    let m2_scaled = &c2 * ((&p2 + &q2) / rat(2));

    let mut delta = frac(1, 4);
    for _ in 0..20 {
        let (unit, tag) = approximate_unit(t, &delta)?;
        if tag == UnitTag::PmOne {
            return Ok(unit);
        }
        let t0 = gadget_translate(&u_scaled, &m_scaled, &unit);
        let t_inf = gadget_translate(&t_scaled, &m2_scaled, &unit);
        let w = t0.intersect(&t_inf);
        debug_assert!(w.contains(&rat(-1)) && w.contains(&rat(1)));
        if w.in_neighborhood(&centers, &half) {
            return Ok(w);
        }
        if w.is_bounded() && w.bounded_away_from_zero().is_some() {
            if let Ok((candidate, UnitTag::PmOne)) = approximate_unit(&w, &half) {
                if candidate.contains(&rat(-1))
                    && candidate.contains(&rat(1))
                    && candidate.in_neighborhood(&centers, &half)
                {
                    return Ok(candidate);
                }
            }
        }
        delta /= rat(2);
    }
    Err(Error::GadgetSearchExhausted)
}

/// Three-valued answer for predicates the tool does not decide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriState {
    Yes(String),
    No(String),
    Unknown,
}

/// Per-relation decidable flags.
#[derive(Clone, Debug)]
pub struct RelationReport {
    pub name: String,
    pub arity: usize,
    pub disjunct_count: usize,
    pub zero_valid: bool,
    pub homogeneous: bool,
}

/// Evidence extracted from one supplied unary probe.
#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub name: String,
    pub bnu: bool,
    pub essentially_convex: bool,
    pub away_from_zero: Option<Rational>,
    pub tail_bound: Option<Rational>,
    /// Positive point present and no elements in some `(0, ε)`.
    pub p0_witness: bool,
    /// Positive point present and no elements beyond some finite bound.
    pub pinf_witness: bool,
}

/// Advisory solver recommendation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recommendation {
    TrivialZeroValid,
    NpHardnessEvidence { bnu_probe: String, gap_probe: String },
    ConeRoute,
    AffineConsistencyAdvisory,
}

/// Language-level analysis with explicit unknown markers for the
/// closure predicates the tool cannot decide.
#[derive(Clone, Debug)]
pub struct LanguageReport {
    pub relations: Vec<RelationReport>,
    pub probes: Vec<ProbeReport>,
    pub bnu_in_closure: TriState,
    pub all_unaries_essentially_convex: TriState,
    pub p0: TriState,
    pub pinf: TriState,
    pub recommendation: Recommendation,
}

/// Analyse a language and optional unary probes.
pub fn language_report(
    relations: &[SemilinearRelation],
    probes: &[SemilinearRelation],
) -> Result<LanguageReport, Error> {
    let mut rel_reports = Vec::with_capacity(relations.len());
    for r in relations {
        rel_reports.push(RelationReport {
            name: r.name().to_string(),
            arity: r.arity(),
            disjunct_count: r.disjuncts().len(),
            zero_valid: is_zero_valid(r)?,
            homogeneous: is_homogeneous(r),
        });
    }
    let mut probe_reports = Vec::with_capacity(probes.len());
    for p in probes {
        let u = p.to_unary()?;
        let positives = u.intersect(&open_interval(Some(Rational::zero()), None));
        let has_positive = !positives.is_empty();
        let p0_witness = has_positive
            && match positives.inf() {
                Extremum::Finite { value, .. } => value.is_positive(),
                _ => false,
            };
        let pinf_witness = has_positive && u.positive_tail_bound().is_some();
        probe_reports.push(ProbeReport {
            name: p.name().to_string(),
            bnu: u.is_bnu(),
            essentially_convex: u.essentially_convex(),
            away_from_zero: u.bounded_away_from_zero(),
            tail_bound: u.positive_tail_bound(),
            p0_witness,
            pinf_witness,
        });
    }

    let bnu_in_closure = match probe_reports.iter().find(|p| p.bnu) {
        Some(p) => TriState::Yes(p.name.clone()),
        None => TriState::Unknown,
    };
    let all_unaries_essentially_convex =
        match probe_reports.iter().find(|p| !p.essentially_convex) {
            Some(p) => TriState::No(p.name.clone()),
            None => TriState::Unknown,
        };
    let p0 = match probe_reports.iter().find(|p| p.p0_witness) {
        Some(p) => TriState::Yes(p.name.clone()),
        None => TriState::Unknown,
    };
    let pinf = match probe_reports.iter().find(|p| p.pinf_witness) {
        Some(p) => TriState::Yes(p.name.clone()),
        None => TriState::Unknown,
    };

    let recommendation = if rel_reports.iter().all(|r| r.zero_valid) {
        Recommendation::TrivialZeroValid
    } else if let (TriState::Yes(bnu_probe), TriState::No(gap_probe)) =
        (&bnu_in_closure, &all_unaries_essentially_convex)
    {
        Recommendation::NpHardnessEvidence {
            bnu_probe: bnu_probe.clone(),
            gap_probe: gap_probe.clone(),
        }
    } else if rel_reports.iter().all(|r| r.homogeneous) {
        Recommendation::ConeRoute
    } else {
        Recommendation::AffineConsistencyAdvisory
    };

    Ok(LanguageReport {
        relations: rel_reports,
        probes: probe_reports,
        bnu_in_closure,
        all_unaries_essentially_convex,
        p0,
        pinf,
        recommendation,
    })
}

impl LanguageReport {
    /// Deterministic line-oriented rendering.
    pub fn to_text(&self) -> String {
        fn tri(t: &TriState) -> String {
            match t {
                TriState::Yes(w) => format!("YES (probe {})", w),
                TriState::No(w) => format!("NO (probe {})", w),
                TriState::Unknown => "UNKNOWN".to_string(),
            }
        }
        fn opt(v: &Option<Rational>) -> String {
            match v {
                Some(q) => format_rational(q),
                None => "none".to_string(),
            }
        }
        let mut out = String::from("relations:\n");
        for r in &self.relations {
            out.push_str(&format!(
                "  {}: arity {}, disjuncts {}, zero-valid {}, homogeneous {}\n",
                r.name,
                r.arity,
                r.disjunct_count,
                if r.zero_valid { "yes" } else { "no" },
                if r.homogeneous { "yes" } else { "no" },
            ));
        }
        out.push_str("probes:\n");
        for p in &self.probes {
            out.push_str(&format!(
                "  {}: bnu {}, essentially-convex {}, away-from-zero {}, tail-bound {}, P0-witness {}, Pinf-witness {}\n",
                p.name,
                if p.bnu { "yes" } else { "no" },
                if p.essentially_convex { "yes" } else { "no" },
                opt(&p.away_from_zero),
                opt(&p.tail_bound),
                if p.p0_witness { "yes" } else { "no" },
                if p.pinf_witness { "yes" } else { "no" },
            ));
        }
        out.push_str(&format!(
            "closure: bnu {}\nclosure: all-unaries-essentially-convex {}\nclosure: P0 {}\nclosure: Pinf {}\n",
            tri(&self.bnu_in_closure),
            tri(&self.all_unaries_essentially_convex),
            tri(&self.p0),
            tri(&self.pinf),
        ));
        out.push_str(&match &self.recommendation {
            Recommendation::TrivialZeroValid => {
                "recommendation: zero-valid language; every instance is satisfiable by the zero assignment\n".to_string()
            }
            Recommendation::NpHardnessEvidence { bnu_probe, gap_probe } => format!(
                "recommendation: NP-hardness evidence (bnu probe {}, interval-excluding probe {}); the NAE reduction applies\n",
                bnu_probe, gap_probe
            ),
            Recommendation::ConeRoute => {
                "recommendation: homogeneous language; cone route applies\n".to_string()
            }
            Recommendation::AffineConsistencyAdvisory => {
                "recommendation: affine consistency (sound; complete only without a definable bnu — UNKNOWN)\n".to_string()
            }
        });
        out
    }
}
