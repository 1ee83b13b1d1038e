//! Rational tangle calculus, a diagrammatic knot oracle, and solvers for
//! tangle equations modelling Xer site-specific recombination.

pub mod arith;
pub mod diagram;
pub mod error;
pub mod expr;
pub mod fraction;
pub mod report;
pub mod solver;
pub mod tables;
pub mod two_bridge;

pub use error::{Result, TangleError};
pub use expr::{parse_expr, TangleExpr};
pub use fraction::{
    apply_twist, cf_to_fraction, circle_product_fraction, fraction_to_cf, Axis, TangleFraction,
    TwistWord,
};
pub use report::{Report, VerificationSummary, REPORT_SCHEMA};
pub use solver::{LinkSpec, SolutionFamily, Verification};
pub use two_bridge::{
    closure_of_rational, crossing_number_genus1, two_bridge_equal, KnotName, LinkKind,
    TwoBridgeLink,
};
