//! Exact computation, verification, and certification of two-color
//! off-diagonal Rado numbers for the equation pair `x + y + c = z` (red) and
//! `x + y + k = z` (blue), on the integer range `[1, N]` and on the real
//! interval `[alpha, N]`.
//!
//! The crate keeps three independent routes to every number and checks them
//! against each other:
//!
//! - closed-form values ([`formulas`]),
//! - a backtracking solver with forced-color propagation plus a brute-force
//!   enumeration oracle ([`search`]),
//! - extremal colorings for the lower bounds ([`extremal`], validated by
//!   [`coloring`] and [`intervals`]) and forcing-chain certificates for the
//!   upper bounds ([`certificates`]).
//!
//! No floating point anywhere: all continuous arithmetic is exact rational
//! arithmetic ([`rational`]).

pub mod certificates;
pub mod coloring;
pub mod equation;
pub mod error;
pub mod extremal;
pub mod formulas;
pub mod intervals;
pub mod rational;
pub mod search;

pub use equation::{Color, EquationKind, RadoResult, SchurEquation};
pub use error::RadoError;
pub use rational::Rational;
