//! The two target relations and the shared result type.
//!
//! The pair under study is `x + y + c = z` (associated with red) and
//! `x + y + k = z` (associated with blue). A coloring is *valid* when it has
//! no all-red solution to the c-equation and no all-blue solution to the
//! k-equation.

use std::fmt;

use crate::error::RadoError;
use crate::rational::{rat_u32, to_u32, Rational};

/// One of the two colors. Red is bound to the c-equation, blue to the k-equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
        }
    }

    pub fn from_letter(ch: char) -> Option<Color> {
        match ch {
            'R' => Some(Color::Red),
            'B' => Some(Color::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which of the two equations a triple refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquationKind {
    CEquation,
    KEquation,
}

impl EquationKind {
    /// The color whose monochromatic solutions this equation forbids.
    pub fn color(self) -> Color {
        match self {
            EquationKind::CEquation => Color::Red,
            EquationKind::KEquation => Color::Blue,
        }
    }

    pub fn suffix(self) -> char {
        match self {
            EquationKind::CEquation => 'c',
            EquationKind::KEquation => 'k',
        }
    }

    pub fn from_suffix(ch: char) -> Option<EquationKind> {
        match ch {
            'c' => Some(EquationKind::CEquation),
            'k' => Some(EquationKind::KEquation),
            _ => None,
        }
    }
}

/// The relation `x + y + shift = z` for a fixed rational shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurEquation {
    pub shift: Rational,
    pub kind: EquationKind,
}

impl SchurEquation {
    pub fn c_equation(shift: Rational) -> Self {
        SchurEquation {
            shift,
            kind: EquationKind::CEquation,
        }
    }

    pub fn k_equation(shift: Rational) -> Self {
        SchurEquation {
            shift,
            kind: EquationKind::KEquation,
        }
    }
}

/// Outcome of a Rado-number computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadoResult {
    Finite(Rational),
    Infinite,
    ExceededCap(u32),
}

impl RadoResult {
    pub fn finite_u32(value: u32) -> Self {
        RadoResult::Finite(rat_u32(value))
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            RadoResult::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_finite_u32(&self) -> Option<u32> {
        self.as_finite().and_then(to_u32)
    }
}

impl fmt::Display for RadoResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadoResult::Finite(v) => write!(f, "{v}"),
            RadoResult::Infinite => f.write_str("infinite"),
            RadoResult::ExceededCap(cap) => write!(f, "cap-exceeded({cap})"),
        }
    }
}

/// True iff `x + y + shift = z` exactly. `x` and `y` are unordered and may coincide.
pub fn is_solution(eq: &SchurEquation, x: &Rational, y: &Rational, z: &Rational) -> bool {
    &(x + y + &eq.shift) == z
}

/// All triples `1 <= x <= y <= z <= n` with `x + y + shift = z`, lexicographic.
///
/// Only defined for positive integer shifts; enumeration over the continuum
/// makes no sense.
pub fn solutions_within(eq: &SchurEquation, n: u32) -> Result<Vec<(u32, u32, u32)>, RadoError> {
    let shift = to_u32(&eq.shift)
        .filter(|s| *s >= 1)
        .ok_or_else(|| RadoError::params(format!("shift {} is not a positive integer", eq.shift)))?;
    let mut out = Vec::new();
    for x in 1..=n {
        for y in x..=n {
            let z = x as u64 + y as u64 + shift as u64;
            if z <= n as u64 {
                out.push((x, y, z as u32));
            }
        }
    }
    Ok(out)
}
