//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// Errors raised by the library.
///
/// Parse errors carry a 1-based line and column. Precondition violations
/// name the operation whose contract was broken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Dimension mismatch between a matrix, vector, or relation arity.
    Shape,
    /// A line restriction was requested through a single point.
    DegenerateLine,
    /// Scaling a unary set by zero is not defined.
    ScaleByZero,
    /// Syntax error in a relation, instance, or NAE file.
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    /// A constraint scope names a variable that was not declared.
    UnknownVariable(String),
    /// A constraint names a relation that is not defined.
    UnknownRelation(String),
    /// Relation arities disagree across disjuncts or with a scope.
    ArityMismatch(String),
    /// An operation's stated precondition does not hold.
    Precondition(&'static str),
    /// The disjunct-expansion oracle would exceed its configured cap.
    OracleTooLarge { product: u128, cap: u128 },
    /// A gadget input is outside the NAE reduction's admissible class.
    GadgetDomain(String),
    /// The hardness-gadget search exhausted its halving budget.
    GadgetSearchExhausted,
    /// The language is not scalable at the given solution point.
    ScalabilityViolation { constraint: usize },
    /// Optimisation was requested without an objective.
    MissingObjective,
    /// The direct optimisation route needs single-disjunct relations.
    WrongRoute,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape => write!(f, "dimension mismatch"),
            Error::DegenerateLine => write!(f, "line through two equal points is degenerate"),
            Error::ScaleByZero => write!(f, "scaling a unary set by zero is not defined"),
            Error::Parse { line, col, msg } => {
                write!(f, "parse error at {}:{}: {}", line, col, msg)
            }
            Error::UnknownVariable(name) => write!(f, "unknown variable `{}`", name),
            Error::UnknownRelation(name) => write!(f, "unknown relation `{}`", name),
            Error::ArityMismatch(name) => write!(f, "arity mismatch in `{}`", name),
            Error::Precondition(what) => write!(f, "precondition violated: {}", what),
            Error::OracleTooLarge { product, cap } => write!(
                f,
                "expansion oracle too large: {} disjunct combinations exceed cap {}",
                product, cap
            ),
            Error::GadgetDomain(msg) => write!(f, "gadget domain error: {}", msg),
            Error::GadgetSearchExhausted => {
                write!(f, "internal error: gadget delta search exhausted its budget")
            }
            Error::ScalabilityViolation { constraint } => write!(
                f,
                "scalability violation: constraint {} has no scaling tail at the given solution",
                constraint
            ),
            Error::MissingObjective => write!(f, "instance has no objective"),
            Error::WrongRoute => write!(
                f,
                "direct optimisation requires single-disjunct relations only"
            ),
        }
    }
}
