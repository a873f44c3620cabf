//! Exact interval-set algebra over rationals and the continuous-coloring
//! validator.
//!
//! A red solution to `x + y + c = z` with all three values in red pieces
//! exists iff for some red pieces A, B, C the Minkowski sum `A + B + c`
//! meets C; likewise for blue with shift k. Both the sum and the overlap are
//! computed exactly with boundary flags, so half-open abutments (the whole
//! point of the extremal constructions) are decided correctly.

use std::fmt;

use num_traits::One;

use crate::equation::Color;
use crate::error::RadoError;
use crate::rational::{rat, Rational};

/// A nonempty bounded interval with independently open or closed endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedInterval {
    pub lo: Rational,
    pub lo_closed: bool,
    pub hi: Rational,
    pub hi_closed: bool,
}

impl BoundedInterval {
    /// Requires `lo < hi`, or `lo = hi` with both endpoints closed (a point).
    pub fn new(lo: Rational, lo_closed: bool, hi: Rational, hi_closed: bool) -> Result<Self, RadoError> {
        if lo > hi || (lo == hi && !(lo_closed && hi_closed)) {
            return Err(RadoError::MalformedColoring(format!(
                "empty interval: {}{}, {}{}",
                if lo_closed { '[' } else { '(' },
                lo,
                hi,
                if hi_closed { ']' } else { ')' },
            )));
        }
        Ok(BoundedInterval { lo, lo_closed, hi, hi_closed })
    }

    pub fn closed(lo: Rational, hi: Rational) -> Result<Self, RadoError> {
        Self::new(lo, true, hi, true)
    }

    pub fn half_open(lo: Rational, hi: Rational) -> Result<Self, RadoError> {
        Self::new(lo, true, hi, false)
    }

    pub fn point(v: Rational) -> Self {
        BoundedInterval { lo: v.clone(), lo_closed: true, hi: v, hi_closed: true }
    }

    pub fn contains(&self, v: &Rational) -> bool {
        let above = if self.lo_closed { *v >= self.lo } else { *v > self.lo };
        let below = if self.hi_closed { *v <= self.hi } else { *v < self.hi };
        above && below
    }

    /// A deterministic interior point: a closed endpoint when one exists,
    /// otherwise the midpoint.
    fn sample(&self) -> Rational {
        if self.lo_closed {
            self.lo.clone()
        } else if self.hi_closed {
            self.hi.clone()
        } else {
            (&self.lo + &self.hi) / rat(2)
        }
    }
}

impl fmt::Display for BoundedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' },
        )
    }
}

/// `{x + y + shift : x in a, y in b}`. An endpoint of the sum is closed iff
/// both contributing endpoints are closed.
pub fn minkowski_sum(a: &BoundedInterval, b: &BoundedInterval, shift: &Rational) -> BoundedInterval {
    BoundedInterval {
        lo: &a.lo + &b.lo + shift,
        lo_closed: a.lo_closed && b.lo_closed,
        hi: &a.hi + &b.hi + shift,
        hi_closed: a.hi_closed && b.hi_closed,
    }
}

/// The common part of two intervals, if any.
pub fn overlap(a: &BoundedInterval, b: &BoundedInterval) -> Option<BoundedInterval> {
    let (lo, lo_closed) = if a.lo > b.lo {
        (a.lo.clone(), a.lo_closed)
    } else if b.lo > a.lo {
        (b.lo.clone(), b.lo_closed)
    } else {
        (a.lo.clone(), a.lo_closed && b.lo_closed)
    };
    let (hi, hi_closed) = if a.hi < b.hi {
        (a.hi.clone(), a.hi_closed)
    } else if b.hi < a.hi {
        (b.hi.clone(), b.hi_closed)
    } else {
        (a.hi.clone(), a.hi_closed && b.hi_closed)
    };
    BoundedInterval::new(lo, lo_closed, hi, hi_closed).ok()
}

/// True iff the intervals share at least one point, honoring boundary flags.
pub fn intersects(a: &BoundedInterval, b: &BoundedInterval) -> bool {
    overlap(a, b).is_some()
}

/// A red/blue coloring of `[alpha, n]` or `[alpha, n)` by finitely many
/// disjoint intervals, stored in increasing order with no gaps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalColoring {
    pub alpha: Rational,
    pub n: Rational,
    /// Whether the right endpoint `n` itself belongs to the domain.
    pub n_inclusive: bool,
    pieces: Vec<(BoundedInterval, Color)>,
}

impl IntervalColoring {
    /// Checks that the pieces exactly partition the declared domain:
    /// sorted, pairwise disjoint, abutting with exactly one closed flag at
    /// every internal boundary, starting closed at `alpha` and ending at `n`.
    pub fn new(
        alpha: Rational,
        n: Rational,
        n_inclusive: bool,
        pieces: Vec<(BoundedInterval, Color)>,
    ) -> Result<Self, RadoError> {
        if pieces.is_empty() {
            return Err(RadoError::MalformedColoring("no pieces".into()));
        }
        let first = &pieces[0].0;
        if first.lo != alpha || !first.lo_closed {
            return Err(RadoError::MalformedColoring(format!(
                "first piece {} does not start closed at alpha = {alpha}",
                first
            )));
        }
        for window in pieces.windows(2) {
            let (prev, next) = (&window[0].0, &window[1].0);
            if prev.hi != next.lo {
                return Err(RadoError::MalformedColoring(format!(
                    "gap or overlap between {prev} and {next}"
                )));
            }
            if prev.hi_closed == next.lo_closed {
                return Err(RadoError::MalformedColoring(format!(
                    "boundary {} is {} by both {prev} and {next}",
                    prev.hi,
                    if prev.hi_closed { "claimed" } else { "left out" },
                )));
            }
        }
        let last = &pieces[pieces.len() - 1].0;
        if last.hi != n || last.hi_closed != n_inclusive {
            return Err(RadoError::MalformedColoring(format!(
                "last piece {last} does not end at {}{n}",
                if n_inclusive { "closed " } else { "open " },
            )));
        }
        Ok(IntervalColoring { alpha, n, n_inclusive, pieces })
    }

    pub fn pieces(&self) -> &[(BoundedInterval, Color)] {
        &self.pieces
    }

    pub fn pieces_of(&self, color: Color) -> Vec<&BoundedInterval> {
        self.pieces
            .iter()
            .filter(|(_, col)| *col == color)
            .map(|(iv, _)| iv)
            .collect()
    }

    /// The induced integer coloring on `domain ∩ Z`, when all integer points
    /// are covered. Used to cross-check the continuous validator against the
    /// discrete one.
    pub fn induced_discrete(&self) -> Option<crate::coloring::DiscreteColoring> {
        if self.alpha != Rational::one() {
            return None;
        }
        let mut cells = Vec::new();
        let mut i = rat(1);
        loop {
            let in_domain = if self.n_inclusive { i <= self.n } else { i < self.n };
            if !in_domain {
                break;
            }
            let piece = self.pieces.iter().find(|(iv, _)| iv.contains(&i))?;
            cells.push(piece.1);
            i += rat(1);
        }
        Some(crate::coloring::DiscreteColoring::new(cells))
    }
}

/// A monochromatic rational solution found by the continuous validator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalViolation {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
    pub color: Color,
}

/// Finds a monochromatic solution (red under shift c, blue under shift k) or
/// reports that none exists. The witness is extracted deterministically from
/// the first overlapping Minkowski sum: sample z there, then sample x from
/// the compatible slice of the first factor.
pub fn validate_interval(
    coloring: &IntervalColoring,
    c: &Rational,
    k: &Rational,
) -> Option<IntervalViolation> {
    for (shift, color) in [(c, Color::Red), (k, Color::Blue)] {
        let pieces = coloring.pieces_of(color);
        for (i, a) in pieces.iter().enumerate() {
            for b in &pieces[i..] {
                let sum = minkowski_sum(a, b, shift);
                for target in &pieces {
                    if let Some(hit) = overlap(&sum, target) {
                        let z = hit.sample();
                        // x must lie in a and leave y = z - shift - x inside b
                        let residue = BoundedInterval {
                            lo: &z - shift - &b.hi,
                            lo_closed: b.hi_closed,
                            hi: &z - shift - &b.lo,
                            hi_closed: b.lo_closed,
                        };
                        let x_slice = overlap(a, &residue)
                            .expect("z in the Minkowski sum always splits into factors");
                        let x = x_slice.sample();
                        let y = &z - shift - &x;
                        return Some(IntervalViolation { x, y, z, color });
                    }
                }
            }
        }
    }
    None
}

/// Renders the interval coloring format: header `continuous <alpha> <N> <c> <k>`,
/// then one `<lo> <0|1> <hi> <0|1> <R|B>` line per piece.
pub fn write_interval(coloring: &IntervalColoring, c: &Rational, k: &Rational) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    writeln!(out, "continuous {} {} {} {}", coloring.alpha, coloring.n, c, k).unwrap();
    for (iv, color) in coloring.pieces() {
        writeln!(
            out,
            "{} {} {} {} {}",
            iv.lo,
            iv.lo_closed as u8,
            iv.hi,
            iv.hi_closed as u8,
            color.letter()
        )
        .unwrap();
    }
    out
}

/// Parses the interval coloring format and re-checks the partition invariant.
pub fn parse_interval(text: &str) -> Result<(IntervalColoring, Rational, Rational), RadoError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| RadoError::parse(1, "empty file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 5 || fields[0] != "continuous" {
        return Err(RadoError::parse(1, "expected header `continuous <alpha> <N> <c> <k>`"));
    }
    let parse_field = |idx: usize, what: &str| {
        crate::rational::parse_rational(fields[idx])
            .map_err(|e| RadoError::parse(1, format!("bad {what} in header: {e}")))
    };
    let alpha = parse_field(1, "alpha")?;
    let n = parse_field(2, "N")?;
    let c = parse_field(3, "c")?;
    let k = parse_field(4, "k")?;

    let mut pieces = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 5 {
            return Err(RadoError::parse(line_no, "expected `<lo> <0|1> <hi> <0|1> <R|B>`"));
        }
        let lo = crate::rational::parse_rational(tokens[0])
            .map_err(|e| RadoError::parse(line_no, e))?;
        let hi = crate::rational::parse_rational(tokens[2])
            .map_err(|e| RadoError::parse(line_no, e))?;
        let flag = |t: &str| match t {
            "0" => Ok(false),
            "1" => Ok(true),
            _ => Err(RadoError::parse(line_no, "boundary flag must be 0 or 1")),
        };
        let lo_closed = flag(tokens[1])?;
        let hi_closed = flag(tokens[3])?;
        let color = tokens[4]
            .chars()
            .next()
            .filter(|_| tokens[4].len() == 1)
            .and_then(Color::from_letter)
            .ok_or_else(|| RadoError::parse(line_no, "color must be R or B"))?;
        let interval = BoundedInterval::new(lo, lo_closed, hi, hi_closed)
            .map_err(|e| RadoError::parse(line_no, e.to_string()))?;
        pieces.push((interval, color));
    }
    let n_inclusive = pieces.last().map(|(iv, _)| iv.hi_closed).unwrap_or(false);
    let coloring = IntervalColoring::new(alpha, n, n_inclusive, pieces)?;
    Ok((coloring, c, k))
}
