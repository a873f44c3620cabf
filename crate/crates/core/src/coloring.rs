//! Total red/blue colorings of `{1, ..., n}`, the discrete validator, and the
//! line-oriented coloring file format.

use std::fmt::Write as _;

use crate::equation::Color;
use crate::error::RadoError;

/// A total red/blue assignment on `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteColoring {
    cells: Vec<Color>,
}

impl DiscreteColoring {
    pub fn new(cells: Vec<Color>) -> Self {
        DiscreteColoring { cells }
    }

    pub fn from_fn(n: u32, color_of: impl Fn(u32) -> Color) -> Self {
        DiscreteColoring {
            cells: (1..=n).map(color_of).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.cells.len() as u32
    }

    /// Color of `element` (1-based). Panics when out of range.
    pub fn color(&self, element: u32) -> Color {
        self.cells[(element - 1) as usize]
    }

    /// The restriction to `{1, ..., m}`.
    pub fn restrict(&self, m: u32) -> DiscreteColoring {
        DiscreteColoring {
            cells: self.cells[..m as usize].to_vec(),
        }
    }

    pub fn elements_of(&self, color: Color) -> Vec<u32> {
        (1..=self.n()).filter(|&i| self.color(i) == color).collect()
    }
}

/// A monochromatic solution found by a validator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub triple: (u32, u32, u32),
    pub color: Color,
}

/// First monochromatic solution in lexicographic order of `(x, y, z)`, or
/// `None` when the coloring avoids both red c-solutions and blue k-solutions.
///
/// For equal `(x, y)` the red triple is checked before the blue one, which
/// keeps the output deterministic even when `c = k`.
pub fn validate_discrete(coloring: &DiscreteColoring, c: u32, k: u32) -> Option<Violation> {
    let n = coloring.n();
    for x in 1..=n {
        for y in x..=n {
            for (shift, color) in [(c, Color::Red), (k, Color::Blue)] {
                let z = x as u64 + y as u64 + shift as u64;
                if z <= n as u64 {
                    let z = z as u32;
                    if coloring.color(x) == color
                        && coloring.color(y) == color
                        && coloring.color(z) == color
                    {
                        return Some(Violation {
                            triple: (x, y, z),
                            color,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Renders the coloring file format: header `discrete <n> <c> <k>`, then one
/// `<element> <R|B>` line per element in increasing order.
pub fn write_discrete(coloring: &DiscreteColoring, c: u32, k: u32) -> String {
    let mut out = String::new();
    writeln!(out, "discrete {} {} {}", coloring.n(), c, k).unwrap();
    for i in 1..=coloring.n() {
        writeln!(out, "{} {}", i, coloring.color(i).letter()).unwrap();
    }
    out
}

/// Parses the discrete coloring format, rejecting duplicate, missing, or
/// out-of-order elements.
pub fn parse_discrete(text: &str) -> Result<(DiscreteColoring, u32, u32), RadoError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| RadoError::parse(1, "empty file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 || fields[0] != "discrete" {
        return Err(RadoError::parse(1, "expected header `discrete <n> <c> <k>`"));
    }
    let n: u32 = fields[1]
        .parse()
        .map_err(|_| RadoError::parse(1, "bad n in header"))?;
    let c: u32 = fields[2]
        .parse()
        .map_err(|_| RadoError::parse(1, "bad c in header"))?;
    let k: u32 = fields[3]
        .parse()
        .map_err(|_| RadoError::parse(1, "bad k in header"))?;

    let mut cells = Vec::with_capacity(n as usize);
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let element: u32 = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| RadoError::parse(line_no, "expected `<element> <R|B>`"))?;
        let color = parts
            .next()
            .and_then(|t| {
                let mut chars = t.chars();
                match (chars.next(), chars.next()) {
                    (Some(ch), None) => Color::from_letter(ch),
                    _ => None,
                }
            })
            .ok_or_else(|| RadoError::parse(line_no, "color must be R or B"))?;
        if parts.next().is_some() {
            return Err(RadoError::parse(line_no, "trailing tokens"));
        }
        let expected = cells.len() as u32 + 1;
        if element != expected {
            return Err(RadoError::parse(
                line_no,
                format!("expected element {expected}, found {element} (duplicates and gaps are rejected)"),
            ));
        }
        if element > n {
            return Err(RadoError::parse(line_no, format!("element {element} exceeds n={n}")));
        }
        cells.push(color);
    }
    if cells.len() as u32 != n {
        return Err(RadoError::parse(
            text.lines().count(),
            format!("coloring has {} elements, header declares n={n}", cells.len()),
        ));
    }
    Ok((DiscreteColoring::new(cells), c, k))
}
