//! Text grammar for terms and polynomials, and the canonical printer.
//!
//! ```text
//! poly    := [sign] monomial (sign monomial)*
//! monomial:= factor (['*'] factor)*
//! factor  := INT ['/' INT] | NAME ['^' INT]
//! ```
//!
//! Whitespace is insignificant. A name that is not a declared variable is
//! split into declared variables when possible, so `xy^2` reads as `x*y^2`.

use num_traits::{One, Signed, Zero};

use crate::coeff::{format_rational, Rational};
use crate::error::{Error, Result};
use crate::param::{ParamMonomial, ParamPoly};
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::term::Term;

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
    ring: &'a Ring,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.col0 + self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    /// One monomial: coefficient times term.
    fn monomial(&mut self) -> Result<(Rational, Term)> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut factors = 0;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n: num_bigint::BigInt = self.digits()?.parse().unwrap();
                    let mut q = Rational::from_integer(n);
                    if self.peek() == Some('/') {
                        self.pos += 1;
                        let d: num_bigint::BigInt = self.digits()?.parse().unwrap();
                        if d.is_zero() {
                            return Err(self.err("zero denominator"));
                        }
                        q /= Rational::from_integer(d);
                    }
                    coeff *= q;
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let at = self.pos;
                    let name = self.ident();
                    let vars = split_name(self.ring, &name).ok_or_else(|| {
                        Error::parse(
                            self.line,
                            self.col0 + at + 1,
                            format!("unknown variable `{name}`"),
                        )
                    })?;
                    let power = if self.peek() == Some('^') {
                        self.pos += 1;
                        self.digits()?
                            .parse::<u32>()
                            .map_err(|_| self.err("exponent too large"))?
                    } else {
                        1
                    };
                    let (last, rest) = vars.split_last().unwrap();
                    for &v in rest {
                        exps[v] += 1;
                    }
                    exps[*last] += power;
                }
                _ => {
                    if factors == 0 {
                        return Err(self.err("expected a coefficient or variable"));
                    }
                    break;
                }
            }
            factors += 1;
            if self.peek() == Some('*') {
                self.pos += 1;
                if !matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    return Err(self.err("expected a factor after `*`"));
                }
            }
        }
        Ok((coeff, Term::new(exps)))
    }
}

/// Splits `name` into declared variable names, longest match first.
fn split_name(ring: &Ring, name: &str) -> Option<Vec<usize>> {
    if let Some(i) = ring.index_of(name) {
        return Some(vec![i]);
    }
    let mut candidates: Vec<(usize, &String)> = ring
        .names()
        .iter()
        .enumerate()
        .filter(|(_, n)| name.starts_with(n.as_str()))
        .collect();
    candidates.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));
    for (i, n) in candidates {
        if let Some(mut rest) = split_name(ring, &name[n.len()..]) {
            rest.insert(0, i);
            return Some(rest);
        }
    }
    None
}

pub fn parse_polynomial(ring: &Ring, s: &str) -> Result<Polynomial<Rational>> {
    parse_polynomial_at(ring, s, 1, 0)
}

/// Parses with error positions reported relative to `line` and column offset `col0`.
pub fn parse_polynomial_at(
    ring: &Ring,
    s: &str,
    line: usize,
    col0: usize,
) -> Result<Polynomial<Rational>> {
    let mut cur = Cursor {
        chars: s.chars().collect(),
        pos: 0,
        line,
        col0,
        ring,
    };
    let mut poly = Polynomial::zero(ring.nvars());
    let mut first = true;
    loop {
        let sign = match cur.peek() {
            Some('+') => {
                cur.pos += 1;
                Rational::one()
            }
            Some('-') => {
                cur.pos += 1;
                -Rational::one()
            }
            None if !first => break,
            None => return Err(cur.err("empty polynomial")),
            Some(_) if first => Rational::one(),
            Some(c) => return Err(cur.err(format!("unexpected `{c}`"))),
        };
        first = false;
        let (c, t) = cur.monomial()?;
        poly.add_term(t, &(c * sign));
    }
    Ok(poly)
}

/// A single term with coefficient 1, e.g. `x^2*y`.
pub fn parse_term(ring: &Ring, s: &str) -> Result<Term> {
    parse_term_at(ring, s, 1, 0)
}

pub fn parse_term_at(ring: &Ring, s: &str, line: usize, col0: usize) -> Result<Term> {
    let mut cur = Cursor {
        chars: s.chars().collect(),
        pos: 0,
        line,
        col0,
        ring,
    };
    let (c, t) = cur.monomial()?;
    if cur.peek().is_some() {
        return Err(cur.err("trailing input after term"));
    }
    if !c.is_one() {
        return Err(Error::parse(line, col0 + 1, "a term must have coefficient 1"));
    }
    Ok(t)
}

pub fn format_term(ring: &Ring, t: &Term) -> String {
    if t.is_one() {
        return "1".into();
    }
    let mut parts = Vec::new();
    for v in (0..t.nvars()).rev() {
        match t.exponent(v) {
            0 => {}
            1 => parts.push(ring.name(v).to_string()),
            e => parts.push(format!("{}^{e}", ring.name(v))),
        }
    }
    parts.join("*")
}

fn push_signed(out: &mut String, negative: bool, body: &str) {
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    out.push_str(body);
}

fn coeff_times(abs: &Rational, body: &str) -> String {
    match (abs.is_one(), body) {
        (true, "1") => "1".into(),
        (true, _) => body.into(),
        (false, "1") => format_rational(abs),
        (false, _) => format!("{}*{body}", format_rational(abs)),
    }
}

/// Canonical form: terms descending in degrevlex, `0` for the zero polynomial.
pub fn format_polynomial(ring: &Ring, p: &Polynomial<Rational>) -> String {
    let mut out = String::new();
    for (t, c) in p.iter_desc() {
        push_signed(&mut out, c.is_negative(), &coeff_times(&c.abs(), &format_term(ring, t)));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_param_monomial(m: &ParamMonomial, names: &[String]) -> String {
    if m.is_one() {
        return "1".into();
    }
    m.factors()
        .iter()
        .map(|&(i, e)| match e {
            1 => names[i as usize].clone(),
            e => format!("{}^{e}", names[i as usize]),
        })
        .collect::<Vec<_>>()
        .join("*")
}

pub fn format_param_poly(p: &ParamPoly, names: &[String]) -> String {
    let mut out = String::new();
    for (m, q) in p.sorted_terms() {
        push_signed(
            &mut out,
            q.is_negative(),
            &coeff_times(&q.abs(), &format_param_monomial(m, names)),
        );
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_param_polynomial(ring: &Ring, p: &Polynomial<ParamPoly>, names: &[String]) -> String {
    let mut out = String::new();
    for (t, c) in p.iter_desc() {
        let term = format_term(ring, t);
        if c.len() == 1 {
            let (m, q) = c.iter().next().unwrap();
            let inner = coeff_times(&q.abs(), &format_param_monomial(m, names));
            let body = if term == "1" {
                inner
            } else if inner == "1" {
                term
            } else {
                format!("{inner}*{term}")
            };
            push_signed(&mut out, q.is_negative(), &body);
        } else {
            let body = format!("({})*{term}", format_param_poly(c, names));
            push_signed(&mut out, false, &body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::ratio;

    #[test]
    fn parses_rationals_and_implicit_products() {
        let r = Ring::xyz();
        let p = parse_polynomial(&r, " 3/4 x^2 y - 2*y z +z^3 ").unwrap();
        assert_eq!(p.len(), 3);
        let x2y = Term::new(vec![0, 1, 2]);
        assert_eq!(p.coeff(&x2y), Some(&ratio(3, 4)));
        assert_eq!(format_polynomial(&r, &p), "3/4*x^2*y + z^3 - 2*y*z");
        assert_eq!(parse_polynomial(&r, "xy^2").unwrap(), parse_polynomial(&r, "x*y^2").unwrap());
    }

    #[test]
    fn cancellation_and_zero() {
        let r = Ring::xyz();
        assert!(parse_polynomial(&r, "x*y - y*x").unwrap().is_zero());
        assert_eq!(format_polynomial(&r, &parse_polynomial(&r, "0").unwrap()), "0");
    }

    #[test]
    fn error_positions() {
        let r = Ring::xyz();
        match parse_polynomial(&r, "x + w") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polynomial(&r, "x +").is_err());
        assert!(parse_polynomial(&r, "1/0").is_err());
        assert!(parse_polynomial(&r, "x y *").is_err());
        assert!(parse_term(&r, "2*x").is_err());
        assert!(parse_term(&r, "x + y").is_err());
    }

    #[test]
    fn multi_character_names() {
        let r = Ring::new(["c1", "c2", "c12"]).unwrap();
        let p = parse_polynomial(&r, "c12 - c1*c2^2").unwrap();
        assert_eq!(format_polynomial(&r, &p), "-c2^2*c1 + c12");
        assert_eq!(parse_polynomial(&r, &format_polynomial(&r, &p)).unwrap(), p);
    }
}
