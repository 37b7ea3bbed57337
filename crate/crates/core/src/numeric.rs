//! Exact rational scalars, vectors, matrices, and canonical affine subspaces.
//!
//! Everything downstream works over [`Rational`] (arbitrary-precision,
//! always in lowest terms with a positive denominator). An
//! [`AffineSubspace`] is kept simultaneously in equation form (a reduced
//! row echelon system `E·x = f`) and parametric form (base point plus
//! independent directions). The equation form is canonical: two subspaces
//! with the same point set compare bit-identically, which is what the
//! affine-consistency loop uses for fixpoint detection.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

/// The scalar used everywhere: an exact arbitrary-precision fraction.
pub type Rational = num_rational::BigRational;

/// A vector over [`Rational`].
pub type QVec = Vec<Rational>;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A vector of zeros.
pub fn zero_vec(n: usize) -> QVec {
    vec![Rational::zero(); n]
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn scale_vec(c: &Rational, v: &[Rational]) -> QVec {
    v.iter().map(|x| c * x).collect()
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Total bit size of a rational: numerator bits plus denominator bits.
pub fn rational_bits(q: &Rational) -> u64 {
    q.numer().bits() + q.denom().bits()
}

/// A dense rational matrix, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: Vec<QVec>,
    cols: usize,
}

impl QMatrix {
    pub fn new(rows: Vec<QVec>, cols: usize) -> Result<Self, Error> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape);
        }
        Ok(QMatrix { rows, cols })
    }

    pub fn rows(&self) -> &[QVec] {
        &self.rows
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }
}

/// Outcome of inserting one row into an [`RrefBuilder`].
pub(crate) enum Insert {
    /// The row contributed a new pivot.
    Added,
    /// The row reduced to zero; the fully reduced row (including any
    /// augmentation columns) is returned.
    Zero(QVec),
    /// The row reduced to `0 = c` with `c != 0` in the designated
    /// right-hand-side column.
    Inconsistent,
}

/// Incremental reduced-row-echelon builder.
///
/// Pivots are only chosen among the first `n_pivot_cols` columns; an
/// optional `rhs_col` marks the column whose residual signals an
/// inconsistent affine system. Further columns are carried along
/// unreduced, which is how row provenance is tracked when needed.
pub(crate) struct RrefBuilder {
    n_pivot_cols: usize,
    rhs_col: Option<usize>,
    rows: Vec<QVec>,
    pivots: Vec<usize>,
}

impl RrefBuilder {
    pub fn new(n_pivot_cols: usize, rhs_col: Option<usize>) -> Self {
        RrefBuilder {
            n_pivot_cols,
            rhs_col,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[QVec] {
        &self.rows
    }

    pub fn insert(&mut self, mut row: QVec) -> Insert {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(r) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        let lead = (0..self.n_pivot_cols).find(|&j| !row[j].is_zero());
        match lead {
            None => {
                if let Some(rc) = self.rhs_col {
                    if !row[rc].is_zero() {
                        return Insert::Inconsistent;
                    }
                }
                Insert::Zero(row)
            }
            Some(j) => {
                let inv = row[j].clone().recip();
                for x in row.iter_mut() {
                    if !x.is_zero() {
                        *x *= &inv;
                    }
                }
                for r in self.rows.iter_mut() {
                    if !r[j].is_zero() {
                        let c = r[j].clone();
                        for (x, y) in r.iter_mut().zip(&row) {
                            if !y.is_zero() {
                                *x -= &c * y;
                            }
                        }
                    }
                }
                let pos = self.pivots.partition_point(|&p| p < j);
                self.pivots.insert(pos, j);
                self.rows.insert(pos, row);
                Insert::Added
            }
        }
    }
}

/// An affine subspace of `Q^n` in canonical dual form.
///
/// Non-empty subspaces carry a reduced-row-echelon equation system
/// `E·x = f` (pivot columns strictly increasing, pivot entries 1, pivot
/// columns eliminated everywhere else) together with the parametric form
/// derived from the free columns. The empty subspace is a first-class
/// value of dimension −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSubspace {
    ambient: usize,
    repr: Option<SubspaceRepr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct SubspaceRepr {
    /// RREF coefficient rows, each of length `ambient`.
    equations: Vec<QVec>,
    /// Right-hand sides, one per equation row.
    rhs: QVec,
    /// A point of the subspace (free coordinates set to zero).
    base: QVec,
    /// Independent directions, one per free column, ascending.
    directions: Vec<QVec>,
}

impl AffineSubspace {
    /// The full space `Q^n`.
    pub fn full(n: usize) -> Self {
        let mut directions = Vec::with_capacity(n);
        for j in 0..n {
            let mut d = zero_vec(n);
            d[j] = Rational::one();
            directions.push(d);
        }
        AffineSubspace {
            ambient: n,
            repr: Some(SubspaceRepr {
                equations: Vec::new(),
                rhs: Vec::new(),
                base: zero_vec(n),
                directions,
            }),
        }
    }

    /// The empty subspace of `Q^n`.
    pub fn empty(n: usize) -> Self {
        AffineSubspace {
            ambient: n,
            repr: None,
        }
    }

    /// Canonicalise the solution set of `E·x = f`.
    pub fn from_system(e: &QMatrix, f: &[Rational]) -> Result<Self, Error> {
        if e.n_rows() != f.len() {
            return Err(Error::Shape);
        }
        let n = e.n_cols();
        let mut builder = RrefBuilder::new(n, Some(n));
        for (row, b) in e.rows().iter().zip(f) {
            let mut aug = row.clone();
            aug.push(b.clone());
            if let Insert::Inconsistent = builder.insert(aug) {
                return Ok(AffineSubspace::empty(n));
            }
        }
        Ok(AffineSubspace::from_rref(n, builder))
    }

    /// Canonicalise from a seeded builder over `n + 1` columns.
    pub(crate) fn from_rref(n: usize, builder: RrefBuilder) -> Self {
        let pivots = builder.pivots().to_vec();
        let mut equations = Vec::with_capacity(builder.rank());
        let mut rhs = Vec::with_capacity(builder.rank());
        for row in builder.rows() {
            equations.push(row[..n].to_vec());
            rhs.push(row[n].clone());
        }
        let mut base = zero_vec(n);
        for (i, &p) in pivots.iter().enumerate() {
            base[p] = rhs[i].clone();
        }
        let mut directions = Vec::new();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for j in 0..n {
            if is_pivot[j] {
                continue;
            }
            let mut d = zero_vec(n);
            d[j] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                if !equations[i][j].is_zero() {
                    d[p] = -equations[i][j].clone();
                }
            }
            directions.push(d);
        }
        AffineSubspace {
            ambient: n,
            repr: Some(SubspaceRepr {
                equations,
                rhs,
                base,
                directions,
            }),
        }
    }

    /// Canonicalise the affine set `base + span(directions)`.
    ///
    /// The directions need not be independent.
    pub fn from_parametric(base: QVec, directions: &[QVec]) -> Self {
        let n = base.len();
        // Independent span of the directions.
        let mut span = RrefBuilder::new(n, None);
        for d in directions {
            debug_assert_eq!(d.len(), n);
            span.insert(d.clone());
        }
        // Kernel of the span matrix = normals of the defining equations.
        let mut is_pivot = vec![false; n];
        for &p in span.pivots() {
            is_pivot[p] = true;
        }
        let mut builder = RrefBuilder::new(n, Some(n));
        for j in 0..n {
            if is_pivot[j] {
                continue;
            }
            let mut normal = zero_vec(n + 1);
            normal[j] = Rational::one();
            for (i, &p) in span.pivots().iter().enumerate() {
                if !span.rows()[i][j].is_zero() {
                    normal[p] = -span.rows()[i][j].clone();
                }
            }
            normal[n] = dot(&normal[..n], &base);
            builder.insert(normal);
        }
        AffineSubspace::from_rref(n, builder)
    }

    /// Affine span of a family of subspaces (empty members are ignored).
    pub fn affine_span<'a, I>(n: usize, parts: I) -> Self
    where
        I: IntoIterator<Item = &'a AffineSubspace>,
    {
        let parts: Vec<&AffineSubspace> = parts.into_iter().filter(|p| !p.is_empty()).collect();
        // A single member is already canonical.
        if parts.len() == 1 {
            return parts[0].clone();
        }
        let mut base: Option<QVec> = None;
        let mut dirs: Vec<QVec> = Vec::new();
        for part in parts {
            debug_assert_eq!(part.ambient, n);
            let repr = match &part.repr {
                Some(r) => r,
                None => continue,
            };
            match &base {
                None => base = Some(repr.base.clone()),
                Some(b) => dirs.push(sub_vec(&repr.base, b)),
            }
            dirs.extend(repr.directions.iter().cloned());
        }
        match base {
            None => AffineSubspace::empty(n),
            Some(b) => AffineSubspace::from_parametric(b, &dirs),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_empty(&self) -> bool {
        self.repr.is_none()
    }

    /// Dimension; −1 for the empty subspace.
    pub fn dim(&self) -> i64 {
        match &self.repr {
            None => -1,
            Some(r) => r.directions.len() as i64,
        }
    }

    /// RREF equation rows (coefficients only).
    pub fn equations(&self) -> &[QVec] {
        self.repr.as_ref().map_or(&[], |r| &r.equations)
    }

    /// Right-hand sides of the equation rows.
    pub fn rhs(&self) -> &[Rational] {
        self.repr.as_ref().map_or(&[], |r| &r.rhs)
    }

    pub fn base(&self) -> Option<&QVec> {
        self.repr.as_ref().map(|r| &r.base)
    }

    pub fn directions(&self) -> &[QVec] {
        self.repr.as_ref().map_or(&[], |r| &r.directions)
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        match &self.repr {
            None => false,
            Some(r) => {
                debug_assert_eq!(p.len(), self.ambient);
                r.equations
                    .iter()
                    .zip(&r.rhs)
                    .all(|(e, f)| dot(e, p) == *f)
            }
        }
    }

    /// The point `base + Σ λ_i d_i`.
    pub fn point_at(&self, lambdas: &[Rational]) -> Option<QVec> {
        let r = self.repr.as_ref()?;
        debug_assert_eq!(lambdas.len(), r.directions.len());
        let mut p = r.base.clone();
        for (l, d) in lambdas.iter().zip(&r.directions) {
            if !l.is_zero() {
                for (x, y) in p.iter_mut().zip(d) {
                    *x += l * y;
                }
            }
        }
        Some(p)
    }

    /// Coordinate projection onto the given coordinates.
    ///
    /// The selected coordinates keep their relative order; duplicates are
    /// ignored. Computed on the parametric form and re-canonicalised.
    pub fn project(&self, coords: &[usize]) -> AffineSubspace {
        let mut sel: Vec<usize> = coords.to_vec();
        sel.sort_unstable();
        sel.dedup();
        debug_assert!(sel.iter().all(|&c| c < self.ambient));
        let repr = match &self.repr {
            None => return AffineSubspace::empty(sel.len()),
            Some(r) => r,
        };
        let pick = |v: &QVec| -> QVec { sel.iter().map(|&c| v[c].clone()).collect() };
        let base = pick(&repr.base);
        let dirs: Vec<QVec> = repr.directions.iter().map(pick).collect();
        AffineSubspace::from_parametric(base, &dirs)
    }

    /// True when every point of `self` lies in `other`.
    pub fn subset_of(&self, other: &AffineSubspace) -> bool {
        debug_assert_eq!(self.ambient, other.ambient);
        let repr = match &self.repr {
            None => return true,
            Some(r) => r,
        };
        let other_repr = match &other.repr {
            None => return false,
            Some(r) => r,
        };
        if !other.contains(&repr.base) {
            return false;
        }
        repr.directions.iter().all(|d| {
            other_repr
                .equations
                .iter()
                .all(|e| dot(e, d).is_zero())
        })
    }

    /// Total bit size of the canonical equation representation.
    pub fn size_bits(&self) -> u64 {
        match &self.repr {
            None => 1,
            Some(r) => {
                let mut total = 0;
                for (e, f) in r.equations.iter().zip(&r.rhs) {
                    for q in e {
                        total += rational_bits(q);
                    }
                    total += rational_bits(f);
                }
                total
            }
        }
    }
}

/// Canonicalise the solution set of the stacked system `E·x = f`.
pub fn rre_form(e: &QMatrix, f: &[Rational]) -> Result<AffineSubspace, Error> {
    AffineSubspace::from_system(e, f)
}
