//! Linear forms `a*k + b*c + d*alpha + e` with rational coefficients.
//!
//! Chain elements are stored symbolically so one transcription serves every
//! parameter value; evaluation is exact rational arithmetic.

use std::fmt;
use std::ops::Add;

use num_traits::Zero;

use crate::rational::{parse_rational, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub k_coeff: Rational,
    pub c_coeff: Rational,
    pub alpha_coeff: Rational,
    pub constant: Rational,
}

impl LinearForm {
    pub fn zero() -> Self {
        LinearForm {
            k_coeff: rat(0),
            c_coeff: rat(0),
            alpha_coeff: rat(0),
            constant: rat(0),
        }
    }

    pub fn k() -> Self {
        LinearForm { k_coeff: rat(1), ..Self::zero() }
    }

    pub fn c() -> Self {
        LinearForm { c_coeff: rat(1), ..Self::zero() }
    }

    pub fn alpha() -> Self {
        LinearForm { alpha_coeff: rat(1), ..Self::zero() }
    }

    pub fn eval(&self, c: &Rational, k: &Rational, alpha: &Rational) -> Rational {
        &self.k_coeff * k + &self.c_coeff * c + &self.alpha_coeff * alpha + &self.constant
    }

    /// Folds a fixed alpha into the constant term.
    pub fn substitute_alpha(&self, alpha: &Rational) -> LinearForm {
        LinearForm {
            k_coeff: self.k_coeff.clone(),
            c_coeff: self.c_coeff.clone(),
            alpha_coeff: rat(0),
            constant: &self.constant + &self.alpha_coeff * alpha,
        }
    }

    /// The file representation: all four terms, signs folded into the
    /// separators, e.g. `1*k-2*c+0*alpha+0`.
    pub fn canonical(&self) -> String {
        let mut out = String::new();
        let mut term = |coeff: &Rational, var: Option<&str>| {
            if !out.is_empty() {
                out.push(if coeff < &rat(0) { '-' } else { '+' });
            } else if coeff < &rat(0) {
                out.push('-');
            }
            let magnitude = if coeff < &rat(0) { -coeff.clone() } else { coeff.clone() };
            out.push_str(&magnitude.to_string());
            if let Some(name) = var {
                out.push('*');
                out.push_str(name);
            }
        };
        term(&self.k_coeff, Some("k"));
        term(&self.c_coeff, Some("c"));
        term(&self.alpha_coeff, Some("alpha"));
        term(&self.constant, None);
        out
    }

    /// Parses a sum of signed terms `coeff`, `var`, or `coeff*var` with
    /// `var` in `{k, c, alpha, a}`. Accepts both the canonical four-term
    /// form and abbreviated hand-written forms like `k-2*c`.
    pub fn parse(text: &str) -> Result<LinearForm, String> {
        let compact: String = text.chars().filter(|ch| !ch.is_whitespace()).collect();
        if compact.is_empty() {
            return Err("empty form".into());
        }
        let mut form = LinearForm::zero();
        let mut chunk = String::new();
        let mut chunks: Vec<String> = Vec::new();
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                chunks.push(std::mem::take(&mut chunk));
                if ch == '-' {
                    chunk.push('-');
                }
            } else {
                chunk.push(ch);
            }
        }
        chunks.push(chunk);
        for raw in chunks {
            if raw.is_empty() || raw == "-" {
                return Err(format!("dangling sign in `{text}`"));
            }
            let (coeff_text, var): (&str, Option<&str>) = match raw.split_once('*') {
                Some((num, var)) => (num, Some(var)),
                None => {
                    let body = raw.strip_prefix('-').unwrap_or(&raw);
                    if body == "k" || body == "c" || body == "alpha" || body == "a" {
                        (if raw.starts_with('-') { "-1" } else { "1" }, Some(body))
                    } else {
                        (raw.as_str(), None)
                    }
                }
            };
            let coeff = parse_rational(coeff_text)?;
            let slot = match var {
                Some("k") => &mut form.k_coeff,
                Some("c") => &mut form.c_coeff,
                Some("alpha") | Some("a") => &mut form.alpha_coeff,
                Some(other) => return Err(format!("unknown variable `{other}` in `{text}`")),
                None => &mut form.constant,
            };
            *slot += coeff;
        }
        Ok(form)
    }
}

impl Add<&LinearForm> for &LinearForm {
    type Output = LinearForm;

    fn add(self, rhs: &LinearForm) -> LinearForm {
        LinearForm {
            k_coeff: &self.k_coeff + &rhs.k_coeff,
            c_coeff: &self.c_coeff + &rhs.c_coeff,
            alpha_coeff: &self.alpha_coeff + &rhs.alpha_coeff,
            constant: &self.constant + &rhs.constant,
        }
    }
}

/// Pretty form for traces: zero terms dropped, `alpha` shortened to `a`,
/// fractional coefficients as `k/2` or `3k/2`.
impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rendered = String::new();
        let mut push_term = |coeff: &Rational, var: Option<&str>| {
            if coeff.is_zero() {
                return;
            }
            let negative = coeff < &rat(0);
            if rendered.is_empty() {
                if negative {
                    rendered.push('-');
                }
            } else {
                rendered.push(if negative { '-' } else { '+' });
            }
            let magnitude = if negative { -coeff.clone() } else { coeff.clone() };
            match var {
                None => rendered.push_str(&magnitude.to_string()),
                Some(name) => {
                    let numer = magnitude.numer();
                    let denom = magnitude.denom();
                    if numer != &num_bigint::BigInt::from(1) {
                        rendered.push_str(&numer.to_string());
                    }
                    rendered.push_str(name);
                    if !magnitude.is_integer() {
                        rendered.push('/');
                        rendered.push_str(&denom.to_string());
                    }
                }
            }
        };
        push_term(&self.k_coeff, Some("k"));
        push_term(&self.c_coeff, Some("c"));
        push_term(&self.alpha_coeff, Some("a"));
        push_term(&self.constant, None);
        if rendered.is_empty() {
            rendered.push('0');
        }
        f.write_str(&rendered)
    }
}
