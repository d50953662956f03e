//! Plain-text ideal descriptions.
//!
//! ```text
//! # comment
//! ring p=32003 vars=x,y,z
//! x^3
//! 2*x^2*y - y^2*z
//! pow m 4
//! ```
//!
//! The header fixes the field (`p=<prime>` or `Q`) and the variables. Every
//! following line is a homogeneous generator, a sum of terms
//! `[+|-] [int*] var[^int] (* var[^int])*`, or the directive `pow m <t>`
//! adding all monomials of degree `t`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::field::{FieldSpec, Scalar};
use crate::ideal::Ideal;
use crate::monomial::{monomials_of_degree, Monomial, MAX_EXPONENT};
use crate::poly::{Polynomial, Term};
use crate::ring::PolyRing;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, column, message: message.into() })
}

/// Parses a whole file into an ideal.
pub fn parse_ideal_file(text: &str) -> Result<Ideal, ParseError> {
    parse_ideal_file_over(text, None)
}

/// Like [`parse_ideal_file`], with `field` replacing the field named in the
/// header. Coefficients are read in the replacement field.
pub fn parse_ideal_file_over(text: &str, field: Option<&FieldSpec>) -> Result<Ideal, ParseError> {
    let mut ring: Option<Arc<PolyRing>> = None;
    let mut gens = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let content = content.trim();
        match &ring {
            None => {
                let header = parse_header(content, line_no, indent + 1)?;
                ring = Some(match field {
                    Some(f) => PolyRing::new(f.clone(), header.var_names()).expect("names already validated"),
                    None => header,
                });
            }
            Some(r) => {
                if let Some(rest) = content.strip_prefix("pow") {
                    if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                        gens.extend(parse_pow(r, rest, line_no, indent + 4)?);
                        continue;
                    }
                }
                gens.push(parse_generator(r, content, line_no, indent + 1)?);
            }
        }
    }
    let Some(ring) = ring else {
        return err(last_line.max(1), 1, "missing ring header");
    };
    if gens.is_empty() {
        return err(last_line.max(1), 1, "no generators");
    }
    Ideal::new(&ring, gens).map_err(|e| ParseError { line: last_line, column: 1, message: e.to_string() })
}

fn parse_header(content: &str, line: usize, column: usize) -> Result<Arc<PolyRing>, ParseError> {
    let mut words = content.split_whitespace();
    if words.next() != Some("ring") {
        return err(line, column, "expected header `ring p=<prime>|Q vars=<names>`");
    }
    let mut field = None;
    let mut vars = None;
    for word in words {
        let col = column + content.find(word).unwrap_or(0);
        if word == "Q" {
            field = Some(FieldSpec::rationals());
        } else if let Some(p) = word.strip_prefix("p=") {
            let p: u64 = match p.parse() {
                Ok(p) => p,
                Err(_) => return err(line, col + 2, format!("invalid prime `{p}`")),
            };
            field = Some(FieldSpec::prime(p).map_err(|e| ParseError { line, column: col + 2, message: e.to_string() })?);
        } else if let Some(list) = word.strip_prefix("vars=") {
            let names: Vec<&str> = list.split(',').collect();
            for (k, name) in names.iter().enumerate() {
                if !is_identifier(name) {
                    let offset: usize = names[..k].iter().map(|n| n.len() + 1).sum();
                    return err(line, col + 5 + offset, format!("invalid variable name `{name}`"));
                }
            }
            vars = Some(names);
        } else {
            return err(line, col, format!("unexpected `{word}` in header"));
        }
    }
    let Some(field) = field else { return err(line, column, "header lacks a field (`p=<prime>` or `Q`)") };
    let Some(vars) = vars else { return err(line, column, "header lacks `vars=`") };
    PolyRing::new(field, &vars).map_err(|e| ParseError { line, column, message: e.to_string() })
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_pow(ring: &Arc<PolyRing>, rest: &str, line: usize, column: usize) -> Result<Vec<Polynomial>, ParseError> {
    let words: Vec<&str> = rest.split_whitespace().collect();
    match words.as_slice() {
        ["m", t] => {
            let t: u32 = match t.parse() {
                Ok(t) if t >= 1 => t,
                _ => return err(line, column, format!("`pow m` needs a positive integer, got `{t}`")),
            };
            if t > MAX_EXPONENT as u32 {
                return err(line, column, format!("degree {t} exceeds {MAX_EXPONENT}"));
            }
            Ok(monomials_of_degree(ring.nvars(), t).into_iter().map(|m| Polynomial::from_monomial(ring, m)).collect())
        }
        _ => err(line, column, "expected `pow m <t>`"),
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    column: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn col(&self) -> usize {
        self.column + self.pos
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        err(self.line, self.col(), message)
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &str {
        let start = self.pos;
        while self.pos < self.bytes.len() && f(self.bytes[self.pos]) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos]).expect("ASCII slice")
    }

    fn integer(&mut self) -> Option<String> {
        let s = self.take_while(|b| b.is_ascii_digit());
        (!s.is_empty()).then(|| s.to_string())
    }
}

fn parse_generator(ring: &Arc<PolyRing>, content: &str, line: usize, column: usize) -> Result<Polynomial, ParseError> {
    let field = ring.field();
    let mut cur = Cursor { bytes: content.as_bytes(), pos: 0, line, column };
    let mut terms = Vec::new();
    let mut degree: Option<u32> = None;
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return cur.fail("empty generator");
            }
            break;
        }
        let term_col = cur.col();
        let negative = match cur.peek() {
            Some(b'+') => {
                cur.pos += 1;
                false
            }
            Some(b'-') => {
                cur.pos += 1;
                true
            }
            _ if first => false,
            _ => return cur.fail("expected `+` or `-`"),
        };
        first = false;
        cur.skip_ws();

        let mut coeff = BigInt::one();
        if matches!(cur.peek(), Some(b) if b.is_ascii_digit()) {
            let digits = cur.integer().expect("digit present");
            coeff = digits.parse().expect("decimal digits");
            cur.skip_ws();
            if cur.peek() != Some(b'*') {
                return cur.fail("expected `*` after coefficient");
            }
            cur.pos += 1;
            cur.skip_ws();
        }
        let mut exps = vec![0u32; ring.nvars()];
        loop {
            let var_col = cur.col();
            let name = cur.take_while(|b| b.is_ascii_alphanumeric() || b == b'_').to_string();
            if name.is_empty() {
                return cur.fail("expected a variable");
            }
            let Some(k) = ring.var_index(&name) else {
                return err(line, var_col, format!("unknown variable `{name}`"));
            };
            cur.skip_ws();
            let mut e = 1u32;
            if cur.peek() == Some(b'^') {
                cur.pos += 1;
                cur.skip_ws();
                let exp_col = cur.col();
                let Some(digits) = cur.integer() else { return cur.fail("expected an exponent") };
                e = match digits.parse() {
                    Ok(e) => e,
                    Err(_) => return err(line, exp_col, format!("exponent `{digits}` is too large")),
                };
                cur.skip_ws();
            }
            exps[k] += e;
            if exps[k] > MAX_EXPONENT as u32 {
                return err(line, var_col, format!("exponent of `{name}` exceeds {MAX_EXPONENT}"));
            }
            if cur.peek() == Some(b'*') {
                cur.pos += 1;
                cur.skip_ws();
            } else {
                break;
            }
        }
        let monomial = Monomial::new(&exps).expect("exponents checked");
        match degree {
            None => degree = Some(monomial.degree()),
            Some(d) if d != monomial.degree() => {
                return err(line, term_col, format!("generator is not homogeneous: degree {} after degree {d}", monomial.degree()));
            }
            Some(_) => {}
        }
        if negative {
            coeff = -coeff;
        }
        terms.push(Term { coeff: field.from_bigint(&coeff), monomial });
    }
    let poly = Polynomial::from_terms(ring, terms);
    if poly.is_zero() {
        return err(line, column, "generator is zero");
    }
    Ok(poly)
}

/// Writes an ideal in the file format. Rational generators are scaled to
/// integer coefficients.
pub fn format_ideal_file(ideal: &Ideal) -> String {
    let ring = ideal.ring();
    let field = match ring.field() {
        FieldSpec::PrimeField { p } => format!("p={p}"),
        FieldSpec::Rationals => "Q".to_string(),
    };
    let mut out = format!("ring {} vars={}\n", field, ring.var_names().join(","));
    for g in ideal.generators() {
        out.push_str(&integral_multiple(g).to_string());
        out.push('\n');
    }
    out
}

fn integral_multiple(g: &Polynomial) -> Polynomial {
    let denominator = g.terms().iter().fold(BigInt::one(), |acc, t| match &t.coeff {
        Scalar::Rat(r) => acc.lcm(r.denom()),
        Scalar::Mod(_) => acc,
    });
    if denominator.is_one() || denominator.is_negative() {
        return g.clone();
    }
    let ring = g.ring();
    let scale = ring.field().from_bigint(&denominator);
    let terms = g
        .terms()
        .iter()
        .map(|t| Term { coeff: ring.field().mul(&t.coeff, &scale), monomial: t.monomial.clone() })
        .collect();
    Polynomial::from_terms(ring, terms)
}
