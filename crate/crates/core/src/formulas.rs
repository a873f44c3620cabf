//! Closed-form off-diagonal Rado numbers, discrete and continuous.
//!
//! For integers `1 <= c <= k` the number is infinite when c and k differ in
//! parity, `k + 3c + 5` when `k <= 2c`, and `2k + c + 4` when `k > 2c`. The
//! continuous analogue on `[alpha, N]` replaces the additive constants 5 and 4
//! by `5*alpha` and `4*alpha`.

use std::fmt;

use crate::equation::RadoResult;
use crate::error::RadoError;
use crate::rational::{at_least_one, integer_parity_even, positive, rat, Rational};

/// Which case of the closed form applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// c and k are integers of different parity; the number is infinite.
    ParityInfinite,
    /// `k <= 2c`; value `k + 3c + 5alpha`.
    LowBranch,
    /// `k > 2c`; value `2k + c + 4alpha`.
    HighBranch,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::ParityInfinite => "ParityInfinite",
            Branch::LowBranch => "LowBranch",
            Branch::HighBranch => "HighBranch",
        })
    }
}

/// A validated `(c, k, alpha)` parameter triple with `1 <= c <= k` and,
/// when present, `alpha > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterPair {
    pub c: Rational,
    pub k: Rational,
    pub alpha: Option<Rational>,
}

impl ParameterPair {
    pub fn new(c: Rational, k: Rational, alpha: Option<Rational>) -> Result<Self, RadoError> {
        if !at_least_one(&c) {
            return Err(RadoError::params(format!("c = {c} must be >= 1")));
        }
        if k < c {
            return Err(RadoError::params(format!("k = {k} must be >= c = {c}")));
        }
        if let Some(a) = &alpha {
            if !positive(a) {
                return Err(RadoError::params(format!("alpha = {a} must be > 0")));
            }
        }
        Ok(ParameterPair { c, k, alpha })
    }
}

/// Classifies `(c, k)`: parity-infinite for integer pairs of different parity,
/// otherwise low (`k <= 2c`, boundary inclusive) or high (`k > 2c`).
pub fn branch_of(c: &Rational, k: &Rational) -> Result<Branch, RadoError> {
    ParameterPair::new(c.clone(), k.clone(), None)?;
    if let (Some(pc), Some(pk)) = (integer_parity_even(c), integer_parity_even(k)) {
        if pc != pk {
            return Ok(Branch::ParityInfinite);
        }
    }
    if *k <= rat(2) * c {
        Ok(Branch::LowBranch)
    } else {
        Ok(Branch::HighBranch)
    }
}

/// The discrete off-diagonal Rado number for integer parameters.
pub fn rado_formula_discrete(c: u32, k: u32) -> Result<RadoResult, RadoError> {
    if c < 1 {
        return Err(RadoError::params("c must be >= 1"));
    }
    if k < c {
        return Err(RadoError::params(format!("k = {k} must be >= c = {c}")));
    }
    if c % 2 != k % 2 {
        return Ok(RadoResult::Infinite);
    }
    let (c, k) = (c as u64, k as u64);
    let value = if k <= 2 * c { k + 3 * c + 5 } else { 2 * k + c + 4 };
    Ok(RadoResult::Finite(crate::rational::rat_u64(value)))
}

/// Continuous formula value plus an indeterminacy marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuousValue {
    pub result: RadoResult,
    /// Set when c and k are not both integers: the parity condition that
    /// decides the infinite case is undefined there, so the finite branch
    /// value is reported but the infinite case cannot be ruled in or out.
    pub parity_indeterminate: bool,
}

/// The continuous off-diagonal Rado number on `[alpha, N]`.
pub fn rado_formula_continuous(
    c: &Rational,
    k: &Rational,
    alpha: &Rational,
) -> Result<ContinuousValue, RadoError> {
    ParameterPair::new(c.clone(), k.clone(), Some(alpha.clone()))?;
    let both_integers = c.is_integer() && k.is_integer();
    match branch_of(c, k)? {
        Branch::ParityInfinite => Ok(ContinuousValue {
            result: RadoResult::Infinite,
            parity_indeterminate: false,
        }),
        Branch::LowBranch => Ok(ContinuousValue {
            result: RadoResult::Finite(k + rat(3) * c + rat(5) * alpha),
            parity_indeterminate: !both_integers,
        }),
        Branch::HighBranch => Ok(ContinuousValue {
            result: RadoResult::Finite(rat(2) * k + c + rat(4) * alpha),
            parity_indeterminate: !both_integers,
        }),
    }
}

/// The formula value as a rational for a finite branch, used by the modules
/// that need `N` itself (extremal constructions, certificate checking).
pub fn finite_value(branch: Branch, c: &Rational, k: &Rational, alpha: &Rational) -> Option<Rational> {
    match branch {
        Branch::ParityInfinite => None,
        Branch::LowBranch => Some(k + rat(3) * c + rat(5) * alpha),
        Branch::HighBranch => Some(rat(2) * k + c + rat(4) * alpha),
    }
}
