//! Line-oriented certificate format.
//!
//! ```text
//! branch <element-form> R {
//!   step <x-form> <y-form> <c|k> => <element-form> <R|B>
//!   ...
//!   contra <x-form> <y-form> <c|k>      # or a nested pair of branch blocks
//! }
//! branch <element-form> B {
//!   ...
//! }
//! ```
//!
//! The two blocks of a case split must be adjacent, red first, on the same
//! element. Lines starting with `#` and blank lines are ignored. Forms are
//! sums of signed terms with rational coefficients (`num/den`) over `k`,
//! `c`, `alpha`.

use crate::equation::{Color, EquationKind};
use crate::error::RadoError;

use super::form::LinearForm;
use super::{BranchNode, CertBranch, CertTail, ForcingStep, TerminalTriple};

struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

fn lex(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(idx, raw)| {
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                None
            } else {
                Some(Line {
                    number: idx + 1,
                    tokens: trimmed.split_whitespace().collect(),
                })
            }
        })
        .collect()
}

fn parse_form(token: &str, line: usize) -> Result<LinearForm, RadoError> {
    LinearForm::parse(token).map_err(|e| RadoError::parse(line, e))
}

fn parse_equation(token: &str, line: usize) -> Result<EquationKind, RadoError> {
    token
        .chars()
        .next()
        .filter(|_| token.len() == 1)
        .and_then(EquationKind::from_suffix)
        .ok_or_else(|| RadoError::parse(line, "equation must be c or k"))
}

fn parse_color(token: &str, line: usize) -> Result<Color, RadoError> {
    token
        .chars()
        .next()
        .filter(|_| token.len() == 1)
        .and_then(Color::from_letter)
        .ok_or_else(|| RadoError::parse(line, "color must be R or B"))
}

/// Parses a whole certificate body: one case split at the top level.
pub fn parse_certificate_tree(text: &str) -> Result<BranchNode, RadoError> {
    let lines = lex(text);
    let mut pos = 0;
    let node = parse_node(&lines, &mut pos)?;
    if pos != lines.len() {
        return Err(RadoError::parse(
            lines[pos].number,
            "trailing content after the root case split",
        ));
    }
    Ok(node)
}

fn parse_node(lines: &[Line<'_>], pos: &mut usize) -> Result<BranchNode, RadoError> {
    let (red_element, red) = parse_block(lines, pos, Color::Red)?;
    let (blue_element, blue) = parse_block(lines, pos, Color::Blue)?;
    if red_element != blue_element {
        return Err(RadoError::parse(
            lines.get(*pos - 1).map(|l| l.number).unwrap_or(0),
            format!(
                "case split must cover both colors of one element; found {} then {}",
                red_element.canonical(),
                blue_element.canonical()
            ),
        ));
    }
    Ok(BranchNode { element: red_element, red, blue })
}

fn parse_block(
    lines: &[Line<'_>],
    pos: &mut usize,
    expected_color: Color,
) -> Result<(LinearForm, CertBranch), RadoError> {
    let line = lines
        .get(*pos)
        .ok_or_else(|| RadoError::parse(0, format!("missing {expected_color} case block")))?;
    if line.tokens.len() != 4 || line.tokens[0] != "branch" || line.tokens[3] != "{" {
        return Err(RadoError::parse(
            line.number,
            "expected `branch <element-form> <R|B> {`",
        ));
    }
    let element = parse_form(line.tokens[1], line.number)?;
    let color = parse_color(line.tokens[2], line.number)?;
    if color != expected_color {
        return Err(RadoError::parse(
            line.number,
            format!("expected the {expected_color} case of this split first"),
        ));
    }
    *pos += 1;

    let mut steps = Vec::new();
    let tail;
    loop {
        let line = lines
            .get(*pos)
            .ok_or_else(|| RadoError::parse(0, "unterminated branch block"))?;
        match line.tokens[0] {
            "step" => {
                if line.tokens.len() != 7 || line.tokens[4] != "=>" {
                    return Err(RadoError::parse(
                        line.number,
                        "expected `step <x> <y> <c|k> => <element> <R|B>`",
                    ));
                }
                steps.push(ForcingStep {
                    x: parse_form(line.tokens[1], line.number)?,
                    y: parse_form(line.tokens[2], line.number)?,
                    equation: parse_equation(line.tokens[3], line.number)?,
                    conclusion: parse_form(line.tokens[5], line.number)?,
                    color: parse_color(line.tokens[6], line.number)?,
                });
                *pos += 1;
            }
            "contra" => {
                if line.tokens.len() != 4 {
                    return Err(RadoError::parse(line.number, "expected `contra <x> <y> <c|k>`"));
                }
                tail = CertTail::Contradiction(TerminalTriple {
                    x: parse_form(line.tokens[1], line.number)?,
                    y: parse_form(line.tokens[2], line.number)?,
                    equation: parse_equation(line.tokens[3], line.number)?,
                });
                *pos += 1;
                break;
            }
            "branch" => {
                tail = CertTail::Split(Box::new(parse_node(lines, pos)?));
                break;
            }
            other => {
                return Err(RadoError::parse(
                    line.number,
                    format!("unexpected directive `{other}`"),
                ));
            }
        }
    }

    let close = lines
        .get(*pos)
        .ok_or_else(|| RadoError::parse(0, "missing closing `}`"))?;
    if close.tokens != ["}"] {
        return Err(RadoError::parse(close.number, "expected `}`"));
    }
    *pos += 1;
    Ok((element, CertBranch { steps, tail }))
}
