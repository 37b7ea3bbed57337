//! CSP instances, the affine-consistency decision procedure, and the
//! NAE-3SAT reduction.
//!
//! Affine consistency maintains an affine upper bound `A` on the
//! solution set, sweeping the constraints in input order and replacing
//! `A` by the hull of each lifted constraint intersected with `A` until
//! a full sweep leaves the canonical form unchanged. The final subspace
//! always contains the affine hull of the solution set; the answer "no"
//! (empty `A`) is therefore always correct, and "yes" is correct for
//! languages in which no bounded non-constant unary relation is
//! definable.
//!
//! Instance file grammar (`#` starts a line comment; `relation` blocks
//! may precede the statements and shadow the built-ins):
//!
//! ```text
//! vars <name>+ ;
//! constraint <relname> "(" <name> ("," <name>)* ")" ;
//! maximize <rational>*<name> (("+"|"-") <rational>*<name>)* ;   (optional)
//! int <name>+ ;                                                 (optional)
//! ```
//!
//! NAE file grammar: `vars <name>+ ;` then `clause <name> <name> <name> ;`
//! per clause (`.` is also accepted as a clause terminator).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Error;
use crate::hull::{alg2_hull, hull_of_system};
use crate::lp::{LinearConstraint, RelOp};
use crate::numeric::{rat, AffineSubspace, QVec, Rational};
use crate::relation::{
    builtin_relations, format_rational, parse_relation_block, LinearSet, Scanner,
    SemilinearRelation,
};

/// One constraint: a relation applied to a scope of variable indices.
///
/// Repeated variables in a scope are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CspConstraint {
    /// Index into the instance's relation table.
    pub relation: usize,
    pub scope: Vec<usize>,
}

/// A CSP instance over named variables, with an optional linear
/// objective and an optional set of integer-constrained variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CspInstance {
    pub variables: Vec<String>,
    /// Relation table; constraints reference it by index.
    pub relations: Vec<SemilinearRelation>,
    pub constraints: Vec<CspConstraint>,
    pub objective: Option<QVec>,
    /// Sorted variable indices constrained to take integer values.
    pub int_vars: Option<Vec<usize>>,
}

impl CspInstance {
    pub fn new(variables: Vec<String>) -> Self {
        CspInstance {
            variables,
            relations: Vec::new(),
            constraints: Vec::new(),
            objective: None,
            int_vars: None,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.variables.len()
    }

    /// Add a relation to the table, returning its index.
    pub fn add_relation(&mut self, r: SemilinearRelation) -> usize {
        self.relations.push(r);
        self.relations.len() - 1
    }

    /// Add a constraint over named variables.
    pub fn add_constraint(&mut self, relation: usize, scope_names: &[&str]) -> Result<(), Error> {
        let rel = &self.relations[relation];
        if scope_names.len() != rel.arity() {
            return Err(Error::ArityMismatch(rel.name().to_string()));
        }
        let mut scope = Vec::with_capacity(scope_names.len());
        for name in scope_names {
            let idx = self
                .variables
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            scope.push(idx);
        }
        self.constraints.push(CspConstraint { relation, scope });
        Ok(())
    }

    pub fn relation_of(&self, c: &CspConstraint) -> &SemilinearRelation {
        &self.relations[c.relation]
    }

    /// Greatest single-relation representation size, in bits.
    pub fn max_relation_size_bits(&self) -> u64 {
        self.constraints
            .iter()
            .map(|c| self.relation_of(c).size_bits())
            .max()
            .unwrap_or(0)
    }

    /// Instance file text for this instance. Relations structurally
    /// equal to a built-in of the same name are not re-emitted.
    pub fn to_grammar(&self) -> String {
        let mut out = String::new();
        let builtins = builtin_relations();
        for rel in &self.relations {
            let is_builtin = builtins
                .iter()
                .any(|b| b.name() == rel.name() && b == rel);
            if !is_builtin {
                out.push_str(&rel.to_grammar());
                out.push('\n');
            }
        }
        out.push_str("vars");
        for v in &self.variables {
            out.push(' ');
            out.push_str(v);
        }
        out.push_str(" ;\n");
        for c in &self.constraints {
            out.push_str(&format!("constraint {}(", self.relation_of(c).name()));
            for (i, &v) in c.scope.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&self.variables[v]);
            }
            out.push_str(") ;\n");
        }
        if let Some(obj) = &self.objective {
            out.push_str("maximize ");
            let mut first = true;
            for (i, coeff) in obj.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                if first {
                    out.push_str(&format!("{}*{}", format_rational(coeff), self.variables[i]));
                    first = false;
                } else if coeff < &Rational::zero() {
                    out.push_str(&format!(
                        " - {}*{}",
                        format_rational(&-coeff),
                        self.variables[i]
                    ));
                } else {
                    out.push_str(&format!(
                        " + {}*{}",
                        format_rational(coeff),
                        self.variables[i]
                    ));
                }
            }
            if first {
                out.push_str(&format!("0*{}", self.variables[0]));
            }
            out.push_str(" ;\n");
        }
        if let Some(ints) = &self.int_vars {
            out.push_str("int");
            for &i in ints {
                out.push(' ');
                out.push_str(&self.variables[i]);
            }
            out.push_str(" ;\n");
        }
        out
    }
}

/// Re-address a relation from its scope to the full variable space.
///
/// The coefficient on scope position `j` moves to the global index of
/// the `j`-th scope variable; repeated scope variables sum their
/// coefficients.
pub fn lift(
    r: &SemilinearRelation,
    scope: &[usize],
    n: usize,
) -> Result<SemilinearRelation, Error> {
    if scope.len() != r.arity() {
        return Err(Error::ArityMismatch(r.name().to_string()));
    }
    if scope.iter().any(|&v| v >= n) {
        return Err(Error::Shape);
    }
    let mut disjuncts = Vec::with_capacity(r.disjuncts().len());
    for d in r.disjuncts() {
        let mut constraints = Vec::with_capacity(d.constraints().len());
        for c in d.constraints() {
            let mut coeffs = vec![Rational::zero(); n];
            for (j, coeff) in c.coeffs.iter().enumerate() {
                if !coeff.is_zero() {
                    coeffs[scope[j]] += coeff;
                }
            }
            constraints.push(LinearConstraint::new(coeffs, c.op, c.rhs.clone()));
        }
        disjuncts.push(LinearSet::new(n, constraints)?);
    }
    SemilinearRelation::new(r.name(), n, disjuncts)
}

/// One application of the hull step inside the consistency loop.
#[derive(Clone, Debug)]
pub struct TraceStep {
    pub constraint: usize,
    pub before: Arc<AffineSubspace>,
    pub after: Arc<AffineSubspace>,
}

/// Observable record of an affine-consistency run.
#[derive(Clone, Debug)]
pub struct ConsistencyTrace {
    pub steps: Vec<TraceStep>,
    pub final_subspace: AffineSubspace,
    pub answer: bool,
}

/// Decide the instance by affine consistency.
///
/// Sweeps constraints in input order, repeating until the canonical
/// subspace survives a full sweep unchanged; an empty subspace stops
/// immediately. Answers yes iff the final subspace is non-empty. Each
/// step replaces the subspace by the exact hull of the lifted relation
/// restricted to it (the union span reported by [`alg2_hull`]), so the
/// final subspace always contains the affine hull of the solution set.
pub fn affine_consistency(inst: &CspInstance) -> Result<(bool, ConsistencyTrace), Error> {
    let n = inst.n_vars();
    let mut lifted = Vec::with_capacity(inst.constraints.len());
    for c in &inst.constraints {
        lifted.push(lift(inst.relation_of(c), &c.scope, n)?);
    }
    let mut current = Arc::new(AffineSubspace::full(n));
    let mut steps: Vec<TraceStep> = Vec::new();
    'outer: loop {
        let sweep_start = current.clone();
        for (i, rel) in lifted.iter().enumerate() {
            let before = current.clone();
            let after = Arc::new(alg2_hull(rel, &before).union_span);
            current = after.clone();
            steps.push(TraceStep {
                constraint: i,
                before,
                after,
            });
            if current.is_empty() {
                break 'outer;
            }
        }
        if *current == *sweep_start {
            break;
        }
    }
    let final_subspace = (*current).clone();
    let answer = !final_subspace.is_empty();
    Ok((
        answer,
        ConsistencyTrace {
            steps,
            final_subspace,
            answer,
        },
    ))
}

/// Evaluate an assignment against every constraint (strictness
/// respected); with `with_integrality`, also require integer values on
/// the instance's integer variables.
pub fn check_assignment(
    inst: &CspInstance,
    x: &[Rational],
    with_integrality: bool,
) -> Result<bool, Error> {
    if x.len() != inst.n_vars() {
        return Err(Error::Shape);
    }
    for c in &inst.constraints {
        let tuple: QVec = c.scope.iter().map(|&v| x[v].clone()).collect();
        if !inst.relation_of(c).eval(&tuple)? {
            return Ok(false);
        }
    }
    if with_integrality {
        if let Some(ints) = &inst.int_vars {
            if ints.iter().any(|&v| !x[v].is_integer()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Default cap on the disjunct-expansion product.
pub const DEFAULT_ORACLE_CAP: u128 = 1_000_000;

/// The true affine hull of the solution set, by exponential expansion:
/// one disjunct chosen per constraint, each conjunction hulled, all
/// hulls spanned.
pub fn expansion_oracle(inst: &CspInstance, cap: u128) -> Result<AffineSubspace, Error> {
    let n = inst.n_vars();
    let mut lifted = Vec::with_capacity(inst.constraints.len());
    for c in &inst.constraints {
        lifted.push(lift(inst.relation_of(c), &c.scope, n)?);
    }
    if lifted.iter().any(|r| r.is_empty_relation()) {
        return Ok(AffineSubspace::empty(n));
    }
    let mut product: u128 = 1;
    for r in &lifted {
        product = product.saturating_mul(r.disjuncts().len() as u128);
        if product > cap {
            return Err(Error::OracleTooLarge { product, cap });
        }
    }
    let mut parts: Vec<AffineSubspace> = Vec::new();
    let mut choice = vec![0usize; lifted.len()];
    loop {
        let mut rows: Vec<LinearConstraint> = Vec::new();
        for (r, &d) in lifted.iter().zip(&choice) {
            rows.extend(r.disjuncts()[d].constraints().iter().cloned());
        }
        let h = hull_of_system(&rows, n);
        if !h.is_empty() {
            parts.push(h);
        }
        // Odometer increment.
        let mut k = 0;
        loop {
            if k == lifted.len() {
                let span = AffineSubspace::affine_span(n, parts.iter());
                return Ok(span);
            }
            choice[k] += 1;
            if choice[k] < lifted[k].disjuncts().len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// A Not-All-Equal 3SAT instance over ±1 variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaeInstance {
    pub variables: Vec<String>,
    pub clauses: Vec<[usize; 3]>,
}

/// The 4-ary relation `x1 + x2 + x3 + x4 = 0` used by the reduction.
pub fn sum4_relation(name: &str) -> SemilinearRelation {
    SemilinearRelation::new(
        name,
        4,
        vec![LinearSet::new(
            4,
            vec![LinearConstraint::new(
                vec![rat(1), rat(1), rat(1), rat(1)],
                RelOp::Eq,
                rat(0),
            )],
        )
        .unwrap()],
    )
    .unwrap()
}

fn fresh_name(base: &str, taken: &[String]) -> String {
    let mut name = base.to_string();
    while taken.iter().any(|t| t == &name) {
        name.insert(0, '_');
    }
    name
}

/// Reduce a NAE-3SAT instance to a CSP over `{T, x+y+z+w=0}`.
///
/// Requires `T` to be within 1/2 of `{−1, 1}` and to contain both −1
/// and 1. The image instance has one fresh `w` variable per clause, a
/// `T` constraint on every original and fresh variable, and the 4-ary
/// equation per clause.
pub fn reduce_nae(nae: &NaeInstance, t: &SemilinearRelation) -> Result<CspInstance, Error> {
    let u = t.to_unary()?;
    if !u.in_neighborhood(&[rat(-1), rat(1)], &crate::numeric::frac(1, 2))
        || !u.contains(&rat(-1))
        || !u.contains(&rat(1))
    {
        return Err(Error::GadgetDomain(format!(
            "`{}` is not within 1/2 of {{-1, 1}} with both centers included",
            t.name()
        )));
    }
    let mut variables = nae.variables.clone();
    let mut w_names = Vec::with_capacity(nae.clauses.len());
    for i in 0..nae.clauses.len() {
        let w = fresh_name(&format!("w{}", i + 1), &variables);
        variables.push(w.clone());
        w_names.push(w);
    }
    let mut inst = CspInstance::new(variables);
    let t_idx = inst.add_relation(t.clone());
    let sum_name = fresh_name("Sum4Zero", &[t.name().to_string()]);
    let sum_idx = inst.add_relation(sum4_relation(&sum_name));
    let n_orig = nae.variables.len();
    for v in 0..n_orig {
        inst.constraints.push(CspConstraint {
            relation: t_idx,
            scope: vec![v],
        });
    }
    for (i, _) in nae.clauses.iter().enumerate() {
        inst.constraints.push(CspConstraint {
            relation: t_idx,
            scope: vec![n_orig + i],
        });
    }
    for (i, clause) in nae.clauses.iter().enumerate() {
        inst.constraints.push(CspConstraint {
            relation: sum_idx,
            scope: vec![clause[0], clause[1], clause[2], n_orig + i],
        });
    }
    Ok(inst)
}

/// Extend a satisfying ±1 assignment of the NAE instance to the reduced
/// instance, choosing `w = −(x + y + z)` per clause.
pub fn nae_forward_solution(nae: &NaeInstance, assignment: &[bool]) -> Result<QVec, Error> {
    if assignment.len() != nae.variables.len() {
        return Err(Error::Shape);
    }
    let val = |v: usize| if assignment[v] { rat(1) } else { rat(-1) };
    let mut out: QVec = (0..nae.variables.len()).map(val).collect();
    for clause in &nae.clauses {
        let (a, b, c) = (assignment[clause[0]], assignment[clause[1]], assignment[clause[2]]);
        if a == b && b == c {
            return Err(Error::Precondition(
                "nae_forward_solution needs a satisfying assignment",
            ));
        }
        let sum = val(clause[0]) + val(clause[1]) + val(clause[2]);
        out.push(-sum);
    }
    Ok(out)
}

/// Parse an instance file.
pub fn parse_instance(text: &str) -> Result<CspInstance, Error> {
    let mut sc = Scanner::new(text);
    let mut defined: Vec<SemilinearRelation> = Vec::new();
    let mut variables: Vec<String> = Vec::new();
    let mut seen_vars = false;
    let mut raw_constraints: Vec<(String, Vec<String>)> = Vec::new();
    let mut objective_terms: Option<Vec<(Rational, String)>> = None;
    let mut int_names: Option<Vec<String>> = None;
    while !sc.at_end() {
        let kw = match sc.peek_ident() {
            Some(kw) => kw,
            None => return Err(sc.error("expected a statement keyword")),
        };
        match kw.as_str() {
            "relation" => {
                let rel = parse_relation_block(&mut sc)?;
                if defined.iter().any(|r| r.name() == rel.name()) {
                    return Err(sc.error(&format!("relation `{}` defined twice", rel.name())));
                }
                defined.push(rel);
            }
            "vars" => {
                sc.ident()?;
                if seen_vars {
                    return Err(sc.error("duplicate `vars` statement"));
                }
                seen_vars = true;
                loop {
                    let name = sc.ident()?;
                    if variables.contains(&name) {
                        return Err(sc.error(&format!("variable `{}` declared twice", name)));
                    }
                    variables.push(name);
                    if sc.eat(b';') {
                        break;
                    }
                }
            }
            "constraint" => {
                sc.ident()?;
                let rel = sc.ident()?;
                sc.expect(b'(')?;
                let mut scope = vec![sc.ident()?];
                while sc.eat(b',') {
                    scope.push(sc.ident()?);
                }
                sc.expect(b')')?;
                sc.expect(b';')?;
                raw_constraints.push((rel, scope));
            }
            "maximize" => {
                sc.ident()?;
                if objective_terms.is_some() {
                    return Err(sc.error("duplicate `maximize` statement"));
                }
                let mut terms = Vec::new();
                let mut negate = false;
                loop {
                    let coeff = sc.rational()?;
                    sc.expect(b'*')?;
                    let name = sc.ident()?;
                    terms.push((if negate { -coeff } else { coeff }, name));
                    if sc.eat(b'+') {
                        negate = false;
                    } else if sc.eat(b'-') {
                        negate = true;
                    } else {
                        sc.expect(b';')?;
                        break;
                    }
                }
                objective_terms = Some(terms);
            }
            "int" => {
                sc.ident()?;
                if int_names.is_some() {
                    return Err(sc.error("duplicate `int` statement"));
                }
                let mut names = Vec::new();
                loop {
                    names.push(sc.ident()?);
                    if sc.eat(b';') {
                        break;
                    }
                }
                int_names = Some(names);
            }
            other => {
                return Err(sc.error(&format!("unknown statement `{}`", other)));
            }
        }
    }
    if !seen_vars {
        return Err(sc.error("missing `vars` statement"));
    }

    let mut inst = CspInstance::new(variables);
    for rel in defined {
        inst.add_relation(rel);
    }
    let builtins = builtin_relations();
    for (rel_name, scope) in raw_constraints {
        let idx = match inst.relations.iter().position(|r| r.name() == rel_name) {
            Some(i) => i,
            None => match builtins.iter().find(|b| b.name() == rel_name) {
                Some(b) => inst.add_relation(b.clone()),
                None => return Err(Error::UnknownRelation(rel_name)),
            },
        };
        let scope_refs: Vec<&str> = scope.iter().map(String::as_str).collect();
        inst.add_constraint(idx, &scope_refs)?;
    }
    if let Some(terms) = objective_terms {
        let mut obj = vec![Rational::zero(); inst.n_vars()];
        for (coeff, name) in terms {
            let idx = inst
                .variables
                .iter()
                .position(|v| *v == name)
                .ok_or(Error::UnknownVariable(name))?;
            obj[idx] += coeff;
        }
        inst.objective = Some(obj);
    }
    if let Some(names) = int_names {
        let mut ints = Vec::new();
        for name in names {
            let idx = inst
                .variables
                .iter()
                .position(|v| *v == name)
                .ok_or(Error::UnknownVariable(name))?;
            ints.push(idx);
        }
        ints.sort_unstable();
        ints.dedup();
        inst.int_vars = Some(ints);
    }
    Ok(inst)
}

/// Parse a NAE-3SAT file.
pub fn parse_nae(text: &str) -> Result<NaeInstance, Error> {
    let mut sc = Scanner::new(text);
    let kw = sc.ident()?;
    if kw != "vars" {
        return Err(sc.error("expected `vars`"));
    }
    let mut variables: Vec<String> = Vec::new();
    loop {
        let name = sc.ident()?;
        if variables.contains(&name) {
            return Err(sc.error(&format!("variable `{}` declared twice", name)));
        }
        variables.push(name);
        if sc.eat(b';') || sc.eat(b'.') {
            break;
        }
    }
    let mut clauses = Vec::new();
    while !sc.at_end() {
        let kw = sc.ident()?;
        if kw != "clause" {
            return Err(sc.error("expected `clause`"));
        }
        let mut ids = [0usize; 3];
        for slot in ids.iter_mut() {
            let name = sc.ident()?;
            *slot = variables
                .iter()
                .position(|v| *v == name)
                .ok_or(Error::UnknownVariable(name))?;
        }
        if !(sc.eat(b';') || sc.eat(b'.')) {
            return Err(sc.error("expected `;` after clause"));
        }
        clauses.push(ids);
    }
    Ok(NaeInstance { variables, clauses })
}
