//! The semilinear-relation data model.
//!
//! A [`LinearSet`] is a finite conjunction of strict/non-strict linear
//! constraints; a [`SemilinearRelation`] is a named finite union of
//! linear sets of one arity. The module also carries the text grammar
//! (parser and emitter) for relation files and the line-restriction
//! operation that turns a relation sliced by a line into a [`UnaryNF`].
//!
//! Relation file grammar (UTF-8 text, `#` starts a line comment):
//!
//! ```text
//! relation <name> <arity> { <disjunct> ( "|" <disjunct> )* }
//! disjunct   := <constraint> ( ";" <constraint> )*
//! constraint := <term> ( ("+"|"-") <term> )* <relop> <rational>
//! term       := <rational> "*" "x" <index>
//! relop      := "=" | "<=" | "<" | ">=" | ">"
//! rational   := integer | integer "/" positive-integer
//! ```
//!
//! `>=`/`>` are normalised to `<=`/`<` at parse time. An empty brace pair
//! denotes the empty relation (zero disjuncts).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::lp::{LinearConstraint, RelOp};
use crate::numeric::{dot, rat, rational_bits, sub_vec, Rational};
use crate::unary::UnaryNF;

/// A conjunction of linear constraints over `arity` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSet {
    arity: usize,
    constraints: Vec<LinearConstraint>,
}

impl LinearSet {
    pub fn new(arity: usize, constraints: Vec<LinearConstraint>) -> Result<Self, Error> {
        if constraints.iter().any(|c| c.dim() != arity) {
            return Err(Error::Shape);
        }
        Ok(LinearSet { arity, constraints })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn eval(&self, x: &[Rational]) -> bool {
        self.constraints.iter().all(|c| c.eval(x))
    }

    pub fn size_bits(&self) -> u64 {
        self.constraints
            .iter()
            .map(|c| c.coeffs.iter().map(rational_bits).sum::<u64>() + rational_bits(&c.rhs))
            .sum()
    }
}

/// A named finite union of linear sets of fixed arity.
///
/// Zero disjuncts denote the empty relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilinearRelation {
    name: String,
    arity: usize,
    disjuncts: Vec<LinearSet>,
}

impl SemilinearRelation {
    pub fn new(name: &str, arity: usize, disjuncts: Vec<LinearSet>) -> Result<Self, Error> {
        if disjuncts.iter().any(|d| d.arity() != arity) {
            return Err(Error::ArityMismatch(name.to_string()));
        }
        Ok(SemilinearRelation {
            name: name.to_string(),
            arity,
            disjuncts,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn disjuncts(&self) -> &[LinearSet] {
        &self.disjuncts
    }

    pub fn is_empty_relation(&self) -> bool {
        self.disjuncts.is_empty()
    }

    /// Membership with strictness respected: true iff some disjunct has
    /// all constraints satisfied.
    pub fn eval(&self, x: &[Rational]) -> Result<bool, Error> {
        if x.len() != self.arity {
            return Err(Error::Shape);
        }
        Ok(self.disjuncts.iter().any(|d| d.eval(x)))
    }

    pub fn size_bits(&self) -> u64 {
        self.disjuncts.iter().map(LinearSet::size_bits).sum()
    }

    /// `{ t ∈ Q | (1−t)·a + t·b ∈ R }` in canonical normal form.
    pub fn restrict_line(&self, a: &[Rational], b: &[Rational]) -> Result<UnaryNF, Error> {
        if a.len() != self.arity || b.len() != self.arity {
            return Err(Error::Shape);
        }
        if a == b {
            return Err(Error::DegenerateLine);
        }
        let dir = sub_vec(b, a);
        let mut result = UnaryNF::empty();
        for disjunct in &self.disjuncts {
            let rows: Vec<(Rational, RelOp, Rational)> = disjunct
                .constraints()
                .iter()
                .map(|c| {
                    let coeff = dot(&c.coeffs, &dir);
                    let rhs = &c.rhs - dot(&c.coeffs, a);
                    (coeff, c.op, rhs)
                })
                .collect();
            result = result.union(&UnaryNF::from_one_var_system(&rows));
        }
        Ok(result)
    }

    /// Canonical normal form of an arity-1 relation.
    pub fn to_unary(&self) -> Result<UnaryNF, Error> {
        if self.arity != 1 {
            return Err(Error::ArityMismatch(self.name.clone()));
        }
        let mut result = UnaryNF::empty();
        for disjunct in &self.disjuncts {
            let rows: Vec<(Rational, RelOp, Rational)> = disjunct
                .constraints()
                .iter()
                .map(|c| (c.coeffs[0].clone(), c.op, c.rhs.clone()))
                .collect();
            result = result.union(&UnaryNF::from_one_var_system(&rows));
        }
        Ok(result)
    }

    /// Grammar text for this relation.
    pub fn to_grammar(&self) -> String {
        let mut out = format!("relation {} {} {{", self.name, self.arity);
        if self.disjuncts.is_empty() {
            out.push_str(" }");
            return out;
        }
        for (i, d) in self.disjuncts.iter().enumerate() {
            if i > 0 {
                out.push_str(" |");
            }
            for (j, c) in d.constraints().iter().enumerate() {
                if j > 0 {
                    out.push(';');
                }
                out.push(' ');
                out.push_str(&format_constraint(c));
            }
            if d.constraints().is_empty() {
                out.push_str(" 0*x1 = 0");
            }
        }
        out.push_str(" }");
        out
    }
}

/// Format a rational in grammar form (`n` or `n/d`).
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Format a constraint in grammar form.
pub fn format_constraint(c: &LinearConstraint) -> String {
    let mut out = String::new();
    let mut first = true;
    for (i, coeff) in c.coeffs.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        if first {
            out.push_str(&format!("{}*x{}", format_rational(coeff), i + 1));
            first = false;
        } else if coeff.is_negative() {
            out.push_str(&format!(" - {}*x{}", format_rational(&-coeff), i + 1));
        } else {
            out.push_str(&format!(" + {}*x{}", format_rational(coeff), i + 1));
        }
    }
    if first {
        out.push_str("0*x1");
    }
    let op = match c.op {
        RelOp::Eq => "=",
        RelOp::Le => "<=",
        RelOp::Lt => "<",
    };
    out.push_str(&format!(" {} {}", op, format_rational(&c.rhs)));
    out
}

/// `R₊ = {(x, y, z) | x + y = z}`.
pub fn builtin_rplus() -> SemilinearRelation {
    SemilinearRelation::new(
        "Rplus",
        3,
        vec![LinearSet::new(
            3,
            vec![LinearConstraint::new(
                vec![rat(1), rat(1), rat(-1)],
                RelOp::Eq,
                rat(0),
            )],
        )
        .unwrap()],
    )
    .unwrap()
}

/// `{1}`.
pub fn builtin_one() -> SemilinearRelation {
    SemilinearRelation::new(
        "One",
        1,
        vec![LinearSet::new(
            1,
            vec![LinearConstraint::new(vec![rat(1)], RelOp::Eq, rat(1))],
        )
        .unwrap()],
    )
    .unwrap()
}

/// `≤` as a binary relation.
pub fn builtin_leq() -> SemilinearRelation {
    SemilinearRelation::new(
        "Leq",
        2,
        vec![LinearSet::new(
            2,
            vec![LinearConstraint::new(
                vec![rat(1), rat(-1)],
                RelOp::Le,
                rat(0),
            )],
        )
        .unwrap()],
    )
    .unwrap()
}

/// `{0}`.
pub fn builtin_zero() -> SemilinearRelation {
    SemilinearRelation::new(
        "Zero",
        1,
        vec![LinearSet::new(
            1,
            vec![LinearConstraint::new(vec![rat(1)], RelOp::Eq, rat(0))],
        )
        .unwrap()],
    )
    .unwrap()
}

/// The built-in relations always in scope: `Rplus`, `One`, `Leq`, `Zero`.
pub fn builtin_relations() -> Vec<SemilinearRelation> {
    vec![
        builtin_rplus(),
        builtin_one(),
        builtin_leq(),
        builtin_zero(),
    ]
}

/// If the line through `p, q ∈ R` misses a whole subinterval, return
/// rational parameters `(δ1, δ2)` with `0 < δ1 < δ2 < 1` such that
/// `p + (q−p)·y ∉ R` for all `δ1 ≤ y ≤ δ2`.
///
/// The returned pair is the middle half of the widest such gap. Absence
/// means no positive-length gap lies on the open segment.
pub fn excluded_interval_on_segment(
    r: &SemilinearRelation,
    p: &[Rational],
    q: &[Rational],
) -> Result<Option<(Rational, Rational)>, Error> {
    if !r.eval(p)? || !r.eval(q)? {
        return Err(Error::Precondition(
            "excluded_interval_on_segment needs p and q in R",
        ));
    }
    let u = r.restrict_line(p, q)?;
    let mut widest: Option<(Rational, Rational)> = None;
    for (g1, g2) in u.gaps() {
        if g1 < Rational::zero() || g2 > rat(1) {
            continue;
        }
        let replace = match &widest {
            None => true,
            Some((w1, w2)) => (&g2 - &g1) > (w2 - w1),
        };
        if replace {
            widest = Some((g1, g2));
        }
    }
    Ok(widest.map(|(g1, g2)| {
        let quarter = (&g2 - &g1) / rat(4);
        (&g1 + &quarter, &g2 - &quarter)
    }))
}

/// Streaming scanner with line/column tracking, shared by the file
/// grammars.
pub(crate) struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    pub fn new(src: &'a str) -> Self {
        Scanner {
            bytes: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    pub fn error(&self, msg: &str) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            msg: msg.to_string(),
        }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = *self.bytes.get(self.pos)?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn peek_raw(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    pub fn skip_ws(&mut self) {
        loop {
            match self.peek_raw() {
                Some(b) if b.is_ascii_whitespace() => {
                    self.bump();
                }
                Some(b'#') => {
                    while let Some(b) = self.bump() {
                        if b == b'\n' {
                            break;
                        }
                    }
                }
                _ => return,
            }
        }
    }

    pub fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.peek_raw()
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, b: u8) -> Result<(), Error> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", b as char)))
        }
    }

    pub fn ident(&mut self) -> Result<String, Error> {
        self.skip_ws();
        let start = self.pos;
        match self.peek_raw() {
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                self.bump();
            }
            _ => return Err(self.error("expected identifier")),
        }
        while let Some(b) = self.peek_raw() {
            if b.is_ascii_alphanumeric() || b == b'_' {
                self.bump();
            } else {
                break;
            }
        }
        Ok(core::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii ident")
            .to_string())
    }

    /// Peek the next identifier without consuming it.
    pub fn peek_ident(&mut self) -> Option<String> {
        self.skip_ws();
        let save = (self.pos, self.line, self.col);
        let id = self.ident().ok();
        let (pos, line, col) = save;
        self.pos = pos;
        self.line = line;
        self.col = col;
        id
    }

    pub fn integer(&mut self) -> Result<BigInt, Error> {
        self.skip_ws();
        let start = self.pos;
        if self.peek_raw() == Some(b'-') {
            self.bump();
        }
        let digits_start = self.pos;
        while let Some(b) = self.peek_raw() {
            if b.is_ascii_digit() {
                self.bump();
            } else {
                break;
            }
        }
        if self.pos == digits_start {
            return Err(self.error("expected integer"));
        }
        Ok(BigInt::parse_bytes(&self.bytes[start..self.pos], 10).expect("scanned digits"))
    }

    pub fn usize_lit(&mut self) -> Result<usize, Error> {
        let n = self.integer()?;
        if n.is_negative() {
            return Err(self.error("expected non-negative integer"));
        }
        let (_, digits) = n.to_u64_digits();
        match digits.len() {
            0 => Ok(0),
            1 => Ok(digits[0] as usize),
            _ => Err(self.error("integer literal too large")),
        }
    }

    pub fn rational(&mut self) -> Result<Rational, Error> {
        let numer = self.integer()?;
        if self.peek() == Some(b'/') {
            self.bump();
            let denom = self.integer()?;
            if !denom.is_positive() {
                return Err(self.error("denominator must be positive"));
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }
}

/// Parse one constraint over `arity` variables; `>=`/`>` are normalised.
pub(crate) fn parse_constraint(
    sc: &mut Scanner<'_>,
    arity: usize,
) -> Result<LinearConstraint, Error> {
    let mut coeffs = vec![Rational::zero(); arity];
    let mut negate_term = false;
    loop {
        let coeff = sc.rational()?;
        sc.expect(b'*')?;
        sc.skip_ws();
        match sc.peek_raw() {
            Some(b'x') => {
                sc.bump();
            }
            _ => return Err(sc.error("expected variable `x<index>`")),
        }
        let idx = sc.usize_lit()?;
        if idx == 0 || idx > arity {
            return Err(sc.error(&format!(
                "variable index x{} out of range 1..={}",
                idx, arity
            )));
        }
        let signed = if negate_term { -coeff } else { coeff };
        coeffs[idx - 1] += signed;
        match sc.peek() {
            Some(b'+') => {
                sc.bump();
                negate_term = false;
            }
            Some(b'-') => {
                sc.bump();
                negate_term = true;
            }
            _ => break,
        }
    }
    sc.skip_ws();
    let op = match sc.peek_raw() {
        Some(b'=') => {
            sc.bump();
            RelOp::Eq
        }
        Some(b'<') => {
            sc.bump();
            if sc.peek_raw() == Some(b'=') {
                sc.bump();
                RelOp::Le
            } else {
                RelOp::Lt
            }
        }
        Some(b'>') => {
            sc.bump();
            if sc.peek_raw() == Some(b'=') {
                sc.bump();
                let rhs = sc.rational()?;
                return Ok(LinearConstraint::ge(coeffs, rhs));
            }
            let rhs = sc.rational()?;
            return Ok(LinearConstraint::gt(coeffs, rhs));
        }
        _ => return Err(sc.error("expected relational operator")),
    };
    let rhs = sc.rational()?;
    Ok(LinearConstraint::new(coeffs, op, rhs))
}

/// Parse a single `relation ...` block from a scanner positioned at the
/// `relation` keyword.
pub(crate) fn parse_relation_block(sc: &mut Scanner<'_>) -> Result<SemilinearRelation, Error> {
    let kw = sc.ident()?;
    if kw != "relation" {
        return Err(sc.error("expected `relation`"));
    }
    let name = sc.ident()?;
    let arity = sc.usize_lit()?;
    if arity == 0 {
        return Err(sc.error("relation arity must be positive"));
    }
    sc.expect(b'{')?;
    let mut disjuncts = Vec::new();
    if sc.peek() != Some(b'}') {
        loop {
            let mut constraints = vec![parse_constraint(sc, arity)?];
            while sc.eat(b';') {
                constraints.push(parse_constraint(sc, arity)?);
            }
            disjuncts.push(LinearSet::new(arity, constraints)?);
            if !sc.eat(b'|') {
                break;
            }
        }
    }
    sc.expect(b'}')?;
    SemilinearRelation::new(&name, arity, disjuncts)
}

/// Parse exactly one relation from text.
pub fn parse_relation(text: &str) -> Result<SemilinearRelation, Error> {
    let mut sc = Scanner::new(text);
    let rel = parse_relation_block(&mut sc)?;
    if !sc.at_end() {
        return Err(sc.error("trailing input after relation"));
    }
    Ok(rel)
}

/// Parse a relation file: any number of `relation` blocks.
pub fn parse_relations(text: &str) -> Result<Vec<SemilinearRelation>, Error> {
    let mut sc = Scanner::new(text);
    let mut out = Vec::new();
    while !sc.at_end() {
        out.push(parse_relation_block(&mut sc)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{frac, QVec};
    use crate::unary::{closed_interval, open_interval};

    fn qv(v: Vec<i64>) -> QVec {
        v.into_iter().map(rat).collect()
    }

    fn pm_one() -> SemilinearRelation {
        parse_relation("relation D 1 { 1*x1 = -1 | 1*x1 = 1 }").unwrap()
    }

    #[test]
    fn parse_rplus_matches_builtin() {
        let r = parse_relation("relation Rplus 3 { 1*x1 + 1*x2 - 1*x3 = 0 }").unwrap();
        assert_eq!(r, builtin_rplus());
    }

    #[test]
    fn parse_one_matches_builtin() {
        let r = parse_relation("relation One 1 { 1*x1 = 1 }").unwrap();
        assert_eq!(r, builtin_one());
    }

    #[test]
    fn parse_plus_minus_one() {
        let d = pm_one();
        assert_eq!(d.disjuncts().len(), 2);
        assert_eq!(d.to_unary().unwrap(), UnaryNF::points([rat(-1), rat(1)]));
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_relation("relation Bad 1 {\n 1*x2 = 0 }") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn ge_and_gt_are_normalised() {
        let r = parse_relation("relation G 1 { 2*x1 >= 4 }").unwrap();
        let c = &r.disjuncts()[0].constraints()[0];
        assert_eq!(c.op, RelOp::Le);
        assert_eq!(c.coeffs, vec![rat(-2)]);
        assert_eq!(c.rhs, rat(-4));
        let s = parse_relation("relation H 1 { 1*x1 > 0 }").unwrap();
        assert_eq!(s.disjuncts()[0].constraints()[0].op, RelOp::Lt);
    }

    #[test]
    fn repeated_terms_sum_coefficients() {
        let r = parse_relation("relation S 2 { 1*x1 + 2*x1 - 1*x2 = 0 }").unwrap();
        assert_eq!(r.disjuncts()[0].constraints()[0].coeffs, qv(vec![3, -1]));
    }

    #[test]
    fn eval_membership() {
        let rp = builtin_rplus();
        assert!(rp.eval(&qv(vec![1, 2, 3])).unwrap());
        assert!(!rp.eval(&qv(vec![1, 2, 4])).unwrap());
        assert!(pm_one().eval(&qv(vec![1])).unwrap());
        assert!(matches!(rp.eval(&qv(vec![1, 2])), Err(Error::Shape)));
    }

    #[test]
    fn restrict_line_inside_plane() {
        let rp = builtin_rplus();
        let u = rp
            .restrict_line(&qv(vec![0, 0, 0]), &qv(vec![1, 1, 2]))
            .unwrap();
        assert_eq!(u, UnaryNF::full_line());
    }

    #[test]
    fn restrict_line_single_crossing() {
        let rp = builtin_rplus();
        let u = rp
            .restrict_line(&qv(vec![0, 0, 1]), &qv(vec![1, 1, 1]))
            .unwrap();
        assert_eq!(u, UnaryNF::point(frac(1, 2)));
    }

    #[test]
    fn restrict_line_on_point_pair() {
        let u = pm_one().restrict_line(&qv(vec![0]), &qv(vec![1])).unwrap();
        assert_eq!(u, UnaryNF::points([rat(-1), rat(1)]));
    }

    #[test]
    fn degenerate_line_rejected() {
        let rp = builtin_rplus();
        assert!(matches!(
            rp.restrict_line(&qv(vec![1, 2, 3]), &qv(vec![1, 2, 3])),
            Err(Error::DegenerateLine)
        ));
    }

    #[test]
    fn unary_normal_forms() {
        let r = parse_relation("relation U 1 { 1*x1 >= 1 | 1*x1 = 0 }").unwrap();
        let u = r.to_unary().unwrap();
        assert_eq!(
            u,
            UnaryNF::point(rat(0)).union(&UnaryNF::interval(Some(rat(1)), false, None, true))
        );
        let e = parse_relation("relation E 1 { 1*x1 < 1; 1*x1 > 1 }").unwrap();
        assert!(e.to_unary().unwrap().is_empty());
        let m = parse_relation("relation M 1 { 1*x1 <= 2 | 1*x1 >= 1 }").unwrap();
        assert_eq!(m.to_unary().unwrap(), UnaryNF::full_line());
    }

    #[test]
    fn excluded_interval_between_two_points() {
        let r = parse_relation("relation R 1 { 1*x1 = 0 | 1*x1 = 1 }").unwrap();
        let w = excluded_interval_on_segment(&r, &qv(vec![0]), &qv(vec![1])).unwrap();
        assert_eq!(w, Some((frac(1, 4), frac(3, 4))));
    }

    #[test]
    fn convex_relation_has_no_excluded_interval() {
        let rp = builtin_rplus();
        let w = excluded_interval_on_segment(&rp, &qv(vec![0, 0, 0]), &qv(vec![1, 1, 2])).unwrap();
        assert_eq!(w, None);
    }

    #[test]
    fn excluded_interval_with_halfline_union() {
        let r = parse_relation("relation R 1 { 1*x1 <= 0 | 1*x1 >= 1 }").unwrap();
        let w = excluded_interval_on_segment(&r, &qv(vec![0]), &qv(vec![2]))
            .unwrap()
            .unwrap();
        // The gap in parameter space is (0, 1/2); the witness sits inside it.
        assert!(w.0 > rat(0) && w.0 < w.1 && w.1 < frac(1, 2));
        assert_eq!(w, (frac(1, 8), frac(3, 8)));
    }

    #[test]
    fn membership_outside_relation_is_precondition_error() {
        let r = parse_relation("relation R 1 { 1*x1 = 0 }").unwrap();
        assert!(matches!(
            excluded_interval_on_segment(&r, &qv(vec![0]), &qv(vec![1])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn grammar_round_trip() {
        let texts = [
            "relation Rplus 3 { 1*x1 + 1*x2 - 1*x3 = 0 }",
            "relation D 1 { 1*x1 = -1 | 1*x1 = 1 }",
            "relation Mixed 2 { 1/2*x1 - 3*x2 <= 7/3; 1*x1 < 1 | 2*x1 = 0 }",
            "relation Empty 2 { }",
        ];
        for t in texts {
            let r = parse_relation(t).unwrap();
            let emitted = r.to_grammar();
            let back = parse_relation(&emitted).unwrap();
            assert_eq!(back, r, "round trip failed for `{}` -> `{}`", t, emitted);
        }
    }

    #[test]
    fn interval_relations_to_unary() {
        let r = parse_relation("relation I 1 { 1*x1 > 0; 1*x1 < 1 }").unwrap();
        assert_eq!(
            r.to_unary().unwrap(),
            open_interval(Some(rat(0)), Some(rat(1)))
        );
        let c = parse_relation("relation C 1 { 1*x1 >= 0; 1*x1 <= 1 }").unwrap();
        assert_eq!(c.to_unary().unwrap(), closed_interval(rat(0), rat(1)));
    }
}
