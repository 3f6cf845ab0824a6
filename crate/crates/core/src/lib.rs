//! Exact construction of Kirchhoff polynomials and matroid basis generating
//! functions, together with exact certificates for their log-concavity,
//! Hessian identities and degree-one Lefschetz properties.
//!
//! Everything on a verdict path is computed over `Q`; there is no floating
//! point in any check.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod hessian;
pub mod identity;
pub mod lefschetz;
pub mod linalg;
pub mod matrix_tree;
pub mod matroid;
pub mod poly;
pub mod rational;
pub mod report;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::{Graph, SimplicityReport, SpanningTreeSet};
pub use matrix_tree::{kirchhoff_polynomial, laplacian, KirchhoffRoute, PolynomialMatrix};
pub use matroid::Matroid;
pub use poly::Polynomial;
pub use rational::Rational;
pub use hessian::{
    check_log_concavity, hessian_and_gradient_at, Inertia, LogConcavityMode, LogConcavityVerdict,
    RationalPoint, SymmetricRationalMatrix,
};
pub use report::VerificationReport;
pub use lefschetz::{graph_slp_report, slp_degree_one, SlpReport};
