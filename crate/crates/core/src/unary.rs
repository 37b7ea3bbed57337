//! Canonical normal form for unary semilinear sets.
//!
//! Every unary semilinear set is a finite union of points and intervals
//! with rational (or infinite) endpoints. [`UnaryNF`] keeps that union
//! canonical: components are pairwise disjoint, sorted by position, and
//! non-mergeable, so equality of sets is equality of representations.
//! A point adjacent to an open interval endpoint is merged into a closed
//! endpoint, and overlapping intervals are merged.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::lp::RelOp;
use crate::numeric::{rat, Rational};

/// One canonical component: an isolated point or a maximal interval.
///
/// `None` endpoints denote −∞ / +∞ and are always open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    Point(Rational),
    Interval {
        lo: Option<Rational>,
        lo_open: bool,
        hi: Option<Rational>,
        hi_open: bool,
    },
}

impl Component {
    /// Lower bound as (value, open); `None` value means −∞.
    fn lo_bound(&self) -> (Option<&Rational>, bool) {
        match self {
            Component::Point(q) => (Some(q), false),
            Component::Interval { lo, lo_open, .. } => (lo.as_ref(), *lo_open),
        }
    }

    fn hi_bound(&self) -> (Option<&Rational>, bool) {
        match self {
            Component::Point(q) => (Some(q), false),
            Component::Interval { hi, hi_open, .. } => (hi.as_ref(), *hi_open),
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        match self {
            Component::Point(q) => q == x,
            Component::Interval {
                lo,
                lo_open,
                hi,
                hi_open,
            } => {
                let above = match lo {
                    None => true,
                    Some(l) => {
                        if *lo_open {
                            x > l
                        } else {
                            x >= l
                        }
                    }
                };
                let below = match hi {
                    None => true,
                    Some(h) => {
                        if *hi_open {
                            x < h
                        } else {
                            x <= h
                        }
                    }
                };
                above && below
            }
        }
    }
}

/// Raw piece used while building the canonical form.
#[derive(Clone, Debug)]
struct Piece {
    lo: Option<Rational>,
    lo_open: bool,
    hi: Option<Rational>,
    hi_open: bool,
}

impl Piece {
    fn point(q: Rational) -> Self {
        Piece {
            lo: Some(q.clone()),
            lo_open: false,
            hi: Some(q),
            hi_open: false,
        }
    }

    /// `None` if the piece is empty (e.g. inverted or open-degenerate).
    fn new(
        lo: Option<Rational>,
        lo_open: bool,
        hi: Option<Rational>,
        hi_open: bool,
    ) -> Option<Self> {
        if let (Some(l), Some(h)) = (&lo, &hi) {
            match l.cmp(h) {
                Ordering::Greater => return None,
                Ordering::Equal => {
                    if lo_open || hi_open {
                        return None;
                    }
                }
                Ordering::Less => {}
            }
        }
        Some(Piece {
            lo_open: lo.is_none() || lo_open,
            hi_open: hi.is_none() || hi_open,
            lo,
            hi,
        })
    }

    fn from_component(c: &Component) -> Self {
        match c {
            Component::Point(q) => Piece::point(q.clone()),
            Component::Interval {
                lo,
                lo_open,
                hi,
                hi_open,
            } => Piece {
                lo: lo.clone(),
                lo_open: *lo_open,
                hi: hi.clone(),
                hi_open: *hi_open,
            },
        }
    }

    fn into_component(self) -> Component {
        if let (Some(l), Some(h)) = (&self.lo, &self.hi) {
            if l == h {
                return Component::Point(self.lo.unwrap());
            }
        }
        Component::Interval {
            lo: self.lo,
            lo_open: self.lo_open,
            hi: self.hi,
            hi_open: self.hi_open,
        }
    }
}

/// Order of lower bounds: −∞ first; at equal values closed before open.
fn cmp_lo(a: (&Option<Rational>, bool), b: (&Option<Rational>, bool)) -> Ordering {
    match (a.0, b.0) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(x), Some(y)) => x.cmp(y).then_with(|| a.1.cmp(&b.1)),
    }
}

/// Order of upper bounds: +∞ last; at equal values open before closed.
fn cmp_hi(a: (&Option<Rational>, bool), b: (&Option<Rational>, bool)) -> Ordering {
    match (a.0, b.0) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Greater,
        (Some(_), None) => Ordering::Less,
        (Some(x), Some(y)) => x.cmp(y).then_with(|| b.1.cmp(&a.1)),
    }
}

/// Supremum or infimum of a unary set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extremum {
    NegInf,
    PosInf,
    Finite { value: Rational, attained: bool },
}

/// A unary semilinear set in canonical normal form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UnaryNF {
    components: Vec<Component>,
}

impl UnaryNF {
    pub fn empty() -> Self {
        UnaryNF::default()
    }

    pub fn full_line() -> Self {
        UnaryNF {
            components: vec![Component::Interval {
                lo: None,
                lo_open: true,
                hi: None,
                hi_open: true,
            }],
        }
    }

    pub fn point(q: Rational) -> Self {
        UnaryNF {
            components: vec![Component::Point(q)],
        }
    }

    /// Interval constructor; degenerate inputs give the empty set, and a
    /// closed `[q, q]` collapses to a point.
    pub fn interval(
        lo: Option<Rational>,
        lo_open: bool,
        hi: Option<Rational>,
        hi_open: bool,
    ) -> Self {
        match Piece::new(lo, lo_open, hi, hi_open) {
            None => UnaryNF::empty(),
            Some(p) => UnaryNF::from_pieces(vec![p]),
        }
    }

    /// A finite set of points.
    pub fn points<I: IntoIterator<Item = Rational>>(qs: I) -> Self {
        UnaryNF::from_pieces(qs.into_iter().map(Piece::point).collect())
    }

    fn from_pieces(mut pieces: Vec<Piece>) -> Self {
        pieces.sort_by(|a, b| {
            cmp_lo((&a.lo, a.lo_open), (&b.lo, b.lo_open))
                .then_with(|| cmp_hi((&a.hi, a.hi_open), (&b.hi, b.hi_open)))
        });
        let mut out: Vec<Piece> = Vec::with_capacity(pieces.len());
        for p in pieces {
            match out.last_mut() {
                None => out.push(p),
                Some(cur) => {
                    let gap = match (&cur.hi, &p.lo) {
                        (None, _) => false,
                        (Some(_), None) => false,
                        (Some(h), Some(l)) => match h.cmp(l) {
                            Ordering::Less => true,
                            Ordering::Greater => false,
                            Ordering::Equal => cur.hi_open && p.lo_open,
                        },
                    };
                    if gap {
                        out.push(p);
                    } else if cmp_hi((&cur.hi, cur.hi_open), (&p.hi, p.hi_open)) == Ordering::Less
                    {
                        cur.hi = p.hi;
                        cur.hi_open = p.hi_open;
                    }
                }
            }
        }
        UnaryNF {
            components: out.into_iter().map(Piece::into_component).collect(),
        }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.components.iter().any(|c| c.contains(x))
    }

    pub fn union(&self, other: &UnaryNF) -> UnaryNF {
        let mut pieces: Vec<Piece> = self.components.iter().map(Piece::from_component).collect();
        pieces.extend(other.components.iter().map(Piece::from_component));
        UnaryNF::from_pieces(pieces)
    }

    pub fn intersect(&self, other: &UnaryNF) -> UnaryNF {
        let mut pieces = Vec::new();
        for a in &self.components {
            let pa = Piece::from_component(a);
            for b in &other.components {
                let pb = Piece::from_component(b);
                let (lo, lo_open) = match cmp_lo((&pa.lo, pa.lo_open), (&pb.lo, pb.lo_open)) {
                    Ordering::Less => (pb.lo.clone(), pb.lo_open),
                    _ => (pa.lo.clone(), pa.lo_open),
                };
                let (hi, hi_open) = match cmp_hi((&pa.hi, pa.hi_open), (&pb.hi, pb.hi_open)) {
                    Ordering::Greater => (pb.hi.clone(), pb.hi_open),
                    _ => (pa.hi.clone(), pa.hi_open),
                };
                if let Some(p) = Piece::new(lo, lo_open, hi, hi_open) {
                    pieces.push(p);
                }
            }
        }
        UnaryNF::from_pieces(pieces)
    }

    /// `{ c·x | x ∈ U }` for `c ≠ 0`.
    pub fn scale(&self, c: &Rational) -> Result<UnaryNF, Error> {
        if c.is_zero() {
            return Err(Error::ScaleByZero);
        }
        let flip = c.is_negative();
        let pieces = self
            .components
            .iter()
            .map(|comp| {
                let p = Piece::from_component(comp);
                let lo = p.lo.map(|v| c * v);
                let hi = p.hi.map(|v| c * v);
                if flip {
                    Piece {
                        lo: hi,
                        lo_open: p.hi_open,
                        hi: lo,
                        hi_open: p.lo_open,
                    }
                } else {
                    Piece {
                        lo,
                        lo_open: p.lo_open,
                        hi,
                        hi_open: p.hi_open,
                    }
                }
            })
            .collect();
        Ok(UnaryNF::from_pieces(pieces))
    }

    /// `{ x + c | x ∈ U }`.
    pub fn translate(&self, c: &Rational) -> UnaryNF {
        let pieces = self
            .components
            .iter()
            .map(|comp| {
                let p = Piece::from_component(comp);
                Piece {
                    lo: p.lo.map(|v| &v + c),
                    lo_open: p.lo_open,
                    hi: p.hi.map(|v| &v + c),
                    hi_open: p.hi_open,
                }
            })
            .collect();
        UnaryNF::from_pieces(pieces)
    }

    /// `{ −x | x ∈ U }`.
    pub fn negate(&self) -> UnaryNF {
        self.scale(&rat(-1)).expect("-1 is nonzero")
    }

    /// Minkowski sum `{ x + y | x ∈ U, y ∈ V }`.
    ///
    /// Endpoints add; a sum endpoint is attained only when both operands
    /// attain theirs.
    pub fn minkowski_sum(&self, other: &UnaryNF) -> UnaryNF {
        let mut pieces = Vec::new();
        for a in &self.components {
            let pa = Piece::from_component(a);
            for b in &other.components {
                let pb = Piece::from_component(b);
                let (lo, lo_open) = match (&pa.lo, &pb.lo) {
                    (Some(x), Some(y)) => (Some(x + y), pa.lo_open || pb.lo_open),
                    _ => (None, true),
                };
                let (hi, hi_open) = match (&pa.hi, &pb.hi) {
                    (Some(x), Some(y)) => (Some(x + y), pa.hi_open || pb.hi_open),
                    _ => (None, true),
                };
                if let Some(p) = Piece::new(lo, lo_open, hi, hi_open) {
                    pieces.push(p);
                }
            }
        }
        UnaryNF::from_pieces(pieces)
    }

    pub fn sup(&self) -> Extremum {
        match self.components.last() {
            None => Extremum::NegInf,
            Some(c) => match c.hi_bound() {
                (None, _) => Extremum::PosInf,
                (Some(v), open) => Extremum::Finite {
                    value: v.clone(),
                    attained: !open,
                },
            },
        }
    }

    pub fn inf(&self) -> Extremum {
        match self.components.first() {
            None => Extremum::PosInf,
            Some(c) => match c.lo_bound() {
                (None, _) => Extremum::NegInf,
                (Some(v), open) => Extremum::Finite {
                    value: v.clone(),
                    attained: !open,
                },
            },
        }
    }

    pub fn is_bounded(&self) -> bool {
        !matches!(self.sup(), Extremum::PosInf) && !matches!(self.inf(), Extremum::NegInf)
    }

    /// Bounded and containing more than one point.
    pub fn is_bnu(&self) -> bool {
        if !self.is_bounded() {
            return false;
        }
        match self.components.len() {
            0 => false,
            1 => matches!(self.components[0], Component::Interval { .. }),
            _ => true,
        }
    }

    pub fn is_zero_valid(&self) -> bool {
        self.contains(&Rational::zero())
    }

    /// Half the distance from 0 to the closure of the set, when positive.
    ///
    /// `Some(ε)` guarantees `U ∩ (−2ε, 2ε) = ∅`. The empty set is
    /// vacuously bounded away from zero and reports `Some(1)`.
    pub fn bounded_away_from_zero(&self) -> Option<Rational> {
        if self.is_empty() {
            return Some(rat(1));
        }
        let mut best: Option<Rational> = None;
        for c in &self.components {
            let p = Piece::from_component(c);
            let lo_positive = p.lo.as_ref().is_some_and(|v| v.is_positive());
            let hi_negative = p.hi.as_ref().is_some_and(|v| v.is_negative());
            let d = if lo_positive {
                p.lo.clone().unwrap()
            } else if hi_negative {
                -p.hi.clone().unwrap()
            } else {
                // Zero lies in the closure of this component.
                Rational::zero()
            };
            best = Some(match best {
                None => d,
                Some(b) => b.min(d),
            });
        }
        let d = best.unwrap();
        if d.is_positive() {
            Some(d / rat(2))
        } else {
            None
        }
    }

    /// A finite `M` with `U ∩ (M, ∞) = ∅`, when one exists.
    pub fn positive_tail_bound(&self) -> Option<Rational> {
        match self.sup() {
            Extremum::PosInf => None,
            Extremum::NegInf => Some(Rational::zero()),
            Extremum::Finite { value, .. } => Some(value),
        }
    }

    /// The left endpoint `A` of an unbounded-above final interval, so
    /// that `(A, ∞) ⊆ U`; absent when the set is bounded above.
    pub fn has_tail(&self) -> Option<Rational> {
        match self.components.last() {
            Some(Component::Interval { lo, hi: None, .. }) => {
                Some(lo.clone().unwrap_or_else(Rational::zero))
            }
            _ => None,
        }
    }

    /// True when every element lies within `delta` of some center.
    pub fn in_neighborhood(&self, centers: &[Rational], delta: &Rational) -> bool {
        debug_assert!(delta.is_positive());
        let balls = UnaryNF::from_pieces(
            centers
                .iter()
                .filter_map(|c| Piece::new(Some(c - delta), true, Some(c + delta), true))
                .collect(),
        );
        self.subset_of(&balls)
    }

    pub fn subset_of(&self, other: &UnaryNF) -> bool {
        self.intersect(other) == *self
    }

    /// True iff every gap between consecutive components is a single point.
    pub fn essentially_convex(&self) -> bool {
        self.gaps().is_empty()
    }

    /// Positive-length interior gaps, as closure-endpoint pairs `(g1, g2)`
    /// with `g1 < g2`.
    pub fn gaps(&self) -> Vec<(Rational, Rational)> {
        let mut out = Vec::new();
        for w in self.components.windows(2) {
            let h = w[0].hi_bound();
            let l = w[1].lo_bound();
            if let (Some(g1), Some(g2)) = (h.0, l.0) {
                if g1 < g2 {
                    out.push((g1.clone(), g2.clone()));
                }
            }
        }
        out
    }

    /// Solve a one-variable mixed system `coeff·t  op  rhs` exactly.
    ///
    /// Zero-coefficient rows act as constant truth values.
    pub fn from_one_var_system(rows: &[(Rational, RelOp, Rational)]) -> UnaryNF {
        let mut lo: Option<Rational> = None;
        let mut lo_open = true;
        let mut hi: Option<Rational> = None;
        let mut hi_open = true;
        fn tighten_hi(v: Rational, open: bool, hi: &mut Option<Rational>, hi_open: &mut bool) {
            let replace = match hi {
                None => true,
                Some(h) => v < *h || (v == *h && open && !*hi_open),
            };
            if replace {
                *hi = Some(v);
                *hi_open = open;
            }
        }
        fn tighten_lo(v: Rational, open: bool, lo: &mut Option<Rational>, lo_open: &mut bool) {
            let replace = match lo {
                None => true,
                Some(l) => v > *l || (v == *l && open && !*lo_open),
            };
            if replace {
                *lo = Some(v);
                *lo_open = open;
            }
        }
        for (c, op, r) in rows {
            if c.is_zero() {
                let holds = match op {
                    RelOp::Eq => r.is_zero(),
                    RelOp::Le => !r.is_negative(),
                    RelOp::Lt => r.is_positive(),
                };
                if holds {
                    continue;
                }
                return UnaryNF::empty();
            }
            let bound = r / c;
            match (op, c.is_positive()) {
                (RelOp::Eq, _) => {
                    tighten_lo(bound.clone(), false, &mut lo, &mut lo_open);
                    tighten_hi(bound, false, &mut hi, &mut hi_open);
                }
                (RelOp::Le, true) => tighten_hi(bound, false, &mut hi, &mut hi_open),
                (RelOp::Le, false) => tighten_lo(bound, false, &mut lo, &mut lo_open),
                (RelOp::Lt, true) => tighten_hi(bound, true, &mut hi, &mut hi_open),
                (RelOp::Lt, false) => tighten_lo(bound, true, &mut lo, &mut lo_open),
            }
        }
        UnaryNF::interval(lo, lo_open, hi, hi_open)
    }

    /// A representative element of each component, preferring attained
    /// endpoints; interior fallback for open intervals.
    pub fn sample_elements(&self) -> Vec<Rational> {
        self.components.iter().map(component_element).collect()
    }
}

/// Some element of a component, deterministically.
pub fn component_element(c: &Component) -> Rational {
    match c {
        Component::Point(q) => q.clone(),
        Component::Interval {
            lo,
            lo_open,
            hi,
            hi_open,
        } => match (lo, hi) {
            (Some(l), _) if !*lo_open => l.clone(),
            (_, Some(h)) if !*hi_open => h.clone(),
            (Some(l), Some(h)) => (l + h) / rat(2),
            (Some(l), None) => l + rat(1),
            (None, Some(h)) => h - rat(1),
            (None, None) => Rational::zero(),
        },
    }
}

/// An element of the component strictly within `margin` of its upper
/// bound (the bound itself when attained); `None` if unbounded above.
pub fn element_near_hi(c: &Component, margin: &Rational) -> Option<Rational> {
    debug_assert!(margin.is_positive());
    match c {
        Component::Point(q) => Some(q.clone()),
        Component::Interval { lo, hi, hi_open, .. } => {
            let h = hi.as_ref()?;
            if !*hi_open {
                return Some(h.clone());
            }
            let step = match lo {
                Some(l) => margin.min(&(h - l)).clone() / rat(2),
                None => margin / rat(2),
            };
            Some(h - step)
        }
    }
}

/// An element of the component strictly within `margin` of its lower
/// bound (the bound itself when attained); `None` if unbounded below.
pub fn element_near_lo(c: &Component, margin: &Rational) -> Option<Rational> {
    debug_assert!(margin.is_positive());
    match c {
        Component::Point(q) => Some(q.clone()),
        Component::Interval { lo, lo_open, hi, .. } => {
            let l = lo.as_ref()?;
            if !*lo_open {
                return Some(l.clone());
            }
            let step = match hi {
                Some(h) => margin.min(&(h - l)).clone() / rat(2),
                None => margin / rat(2),
            };
            Some(l + step)
        }
    }
}

/// The open interval `(lo, hi)` as a set; `None` endpoints are infinite.
pub fn open_interval(lo: Option<Rational>, hi: Option<Rational>) -> UnaryNF {
    UnaryNF::interval(lo, true, hi, true)
}

/// The closed interval `[lo, hi]` as a set.
pub fn closed_interval(lo: Rational, hi: Rational) -> UnaryNF {
    UnaryNF::interval(Some(lo), false, Some(hi), false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::frac;

    fn pts(v: Vec<i64>) -> UnaryNF {
        UnaryNF::points(v.into_iter().map(rat))
    }

    #[test]
    fn point_merges_into_open_endpoint() {
        let u = UnaryNF::interval(Some(rat(0)), false, Some(rat(1)), true)
            .union(&UnaryNF::point(rat(1)));
        assert_eq!(u, closed_interval(rat(0), rat(1)));
    }

    #[test]
    fn overlapping_intervals_merge() {
        let u = UnaryNF::interval(None, true, Some(rat(2)), false)
            .union(&UnaryNF::interval(Some(rat(1)), false, None, true));
        assert_eq!(u, UnaryNF::full_line());
    }

    #[test]
    fn open_touch_does_not_merge() {
        let u = open_interval(Some(rat(0)), Some(rat(1)))
            .union(&open_interval(Some(rat(1)), Some(rat(2))));
        assert_eq!(u.components().len(), 2);
        assert!(!u.contains(&rat(1)));
        assert!(u.essentially_convex());
    }

    #[test]
    fn scale_by_half() {
        let u = pts(vec![1, 2]);
        let s = u.scale(&frac(1, 2)).unwrap();
        assert_eq!(s, UnaryNF::points([frac(1, 2), rat(1)]));
    }

    #[test]
    fn scale_by_zero_rejected() {
        assert!(matches!(pts(vec![1]).scale(&rat(0)), Err(Error::ScaleByZero)));
    }

    #[test]
    fn intersect_points() {
        let a = pts(vec![1, 2]);
        let b = UnaryNF::points([frac(1, 2), rat(1)]);
        assert_eq!(a.intersect(&b), pts(vec![1]));
    }

    #[test]
    fn negate_half_bounded_interval() {
        let u = UnaryNF::interval(Some(rat(1)), false, None, true);
        let n = u.negate();
        assert_eq!(n, UnaryNF::interval(None, true, Some(rat(-1)), false));
    }

    #[test]
    fn extremes_and_attainment() {
        let u = open_interval(Some(rat(0)), Some(rat(1))).union(&UnaryNF::point(rat(5)));
        assert_eq!(
            u.sup(),
            Extremum::Finite {
                value: rat(5),
                attained: true
            }
        );
        assert_eq!(
            u.inf(),
            Extremum::Finite {
                value: rat(0),
                attained: false
            }
        );
        assert_eq!(UnaryNF::empty().sup(), Extremum::NegInf);
        assert_eq!(UnaryNF::empty().inf(), Extremum::PosInf);
    }

    #[test]
    fn bnu_detection() {
        assert!(pts(vec![-1, 1]).is_bnu());
        assert!(closed_interval(rat(0), rat(1)).is_bnu());
        assert!(!pts(vec![3]).is_bnu());
        assert!(!UnaryNF::empty().is_bnu());
        assert!(!UnaryNF::interval(Some(rat(1)), false, None, true).is_bnu());
    }

    #[test]
    fn neighborhood_checks() {
        let centers = [rat(-1), rat(1)];
        assert!(pts(vec![1]).in_neighborhood(&centers, &frac(1, 2)));
        assert!(!pts(vec![-2, 1]).in_neighborhood(&centers, &frac(1, 2)));
        // Chained balls cover a connecting interval.
        assert!(closed_interval(rat(0), rat(1)).in_neighborhood(&[rat(0), rat(1)], &frac(3, 4)));
    }

    #[test]
    fn tail_extraction() {
        let u = pts(vec![-2]).union(&UnaryNF::interval(Some(rat(1)), false, None, true));
        assert_eq!(u.has_tail(), Some(rat(1)));
        assert_eq!(pts(vec![1, 2]).has_tail(), None);
        assert_eq!(UnaryNF::full_line().has_tail(), Some(rat(0)));
    }

    #[test]
    fn away_from_zero() {
        assert_eq!(pts(vec![-3, 1]).bounded_away_from_zero(), Some(frac(1, 2)));
        assert_eq!(
            UnaryNF::interval(Some(rat(0)), true, Some(rat(1)), false).bounded_away_from_zero(),
            None
        );
        assert_eq!(pts(vec![0]).bounded_away_from_zero(), None);
        assert_eq!(UnaryNF::empty().bounded_away_from_zero(), Some(rat(1)));
    }

    #[test]
    fn essential_convexity_cases() {
        assert!(closed_interval(rat(0), rat(1)).essentially_convex());
        assert!(!pts(vec![0, 1]).essentially_convex());
        let punctured = open_interval(None, Some(rat(0))).union(&open_interval(Some(rat(0)), None));
        assert!(punctured.essentially_convex());
    }

    #[test]
    fn one_var_system_solving() {
        // 2t <= 4 and -t < 1, i.e. -1 < t <= 2.
        let u = UnaryNF::from_one_var_system(&[
            (rat(2), RelOp::Le, rat(4)),
            (rat(-1), RelOp::Lt, rat(1)),
        ]);
        assert_eq!(u, UnaryNF::interval(Some(rat(-1)), true, Some(rat(2)), false));
        // Contradiction.
        let e = UnaryNF::from_one_var_system(&[
            (rat(1), RelOp::Lt, rat(1)),
            (rat(-1), RelOp::Lt, rat(-1)),
        ]);
        assert!(e.is_empty());
        // Constant rows.
        let c = UnaryNF::from_one_var_system(&[(rat(0), RelOp::Le, rat(0))]);
        assert_eq!(c, UnaryNF::full_line());
        let f = UnaryNF::from_one_var_system(&[(rat(0), RelOp::Lt, rat(0))]);
        assert!(f.is_empty());
        // Equality pin inside bounds.
        let p = UnaryNF::from_one_var_system(&[
            (rat(3), RelOp::Eq, rat(1)),
            (rat(1), RelOp::Le, rat(2)),
        ]);
        assert_eq!(p, UnaryNF::point(frac(1, 3)));
    }

    #[test]
    fn minkowski_sum_of_intervals() {
        let a = closed_interval(rat(0), rat(1));
        let b = open_interval(Some(rat(10)), Some(rat(11)));
        assert_eq!(a.minkowski_sum(&b), open_interval(Some(rat(10)), Some(rat(12))));
        let p = pts(vec![5]);
        assert_eq!(a.minkowski_sum(&p), closed_interval(rat(5), rat(6)));
        assert!(a.minkowski_sum(&UnaryNF::empty()).is_empty());
    }

    #[test]
    fn scale_round_trip_is_exact() {
        let u = pts(vec![1, 2]).union(&open_interval(Some(rat(3)), Some(rat(4))));
        let c = frac(7, 3);
        let back = u.scale(&c).unwrap().scale(&c.recip()).unwrap();
        assert_eq!(back, u);
    }

    #[test]
    fn gap_listing() {
        let u = pts(vec![0]).union(&closed_interval(rat(2), rat(3)));
        assert_eq!(u.gaps(), vec![(rat(0), rat(2))]);
        let v = open_interval(None, Some(rat(0))).union(&open_interval(Some(rat(0)), None));
        assert!(v.gaps().is_empty());
    }
}
