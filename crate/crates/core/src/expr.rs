//! Text form of polynomials.
//!
//! The grammar is the usual one: `+ - * / ^`, parentheses, integer and
//! decimal literals, unary minus, and implicit multiplication (`2X^3Y`).
//! Exponents are nonnegative integer literals and division is only by
//! nonzero constants, so every accepted text denotes an exact polynomial.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::branch::Parameterization;
use crate::{Error, Poly, Rational, Result, YPoly};

/// Names that denote irrational or non-real constants.
const IRRATIONAL_NAMES: &[&str] = &["sqrt", "pi", "e", "i", "exp", "log", "ln"];

/// Exponent vector to coefficient.
type Sparse = BTreeMap<Vec<usize>, Rational>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Var(usize),
    Op(char),
}

struct Lexer<'a> {
    src: &'a str,
    vars: &'a [&'a str],
}

impl Lexer<'_> {
    fn run(&self) -> Result<Vec<(Tok, usize)>> {
        let bytes = self.src.as_bytes();
        let mut out = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() || c == b'.' {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                out.push((Tok::Num(decimal(&self.src[start..i], start)?), start));
            } else if c.is_ascii_alphabetic() || c == b'_' {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                self.word(&self.src[start..i], start, &mut out)?;
            } else if b"+-*/^()".contains(&c) {
                out.push((Tok::Op(c as char), i));
                i += 1;
            } else {
                let ch = self.src[i..].chars().next().unwrap_or('?');
                if "√π∞".contains(ch) {
                    return Err(Error::IrrationalLiteral { offset: i });
                }
                return Err(syntax(i, format!("unexpected character {ch:?}")));
            }
        }
        Ok(out)
    }

    /// Splits a run of letters into variables, so that `XY` reads as `X*Y`.
    fn word(&self, w: &str, start: usize, out: &mut Vec<(Tok, usize)>) -> Result<()> {
        if IRRATIONAL_NAMES.contains(&w.to_ascii_lowercase().as_str()) {
            return Err(Error::IrrationalLiteral { offset: start });
        }
        let mut toks = Vec::new();
        for (k, ch) in w.char_indices() {
            match self.vars.iter().position(|v| v.len() == 1 && v.starts_with(ch)) {
                Some(idx) => toks.push((Tok::Var(idx), start + k)),
                None => {
                    return Err(syntax(
                        start + k,
                        format!("unknown name {w:?}; expected variables {}", self.vars.join(", ")),
                    ))
                }
            }
        }
        out.extend(toks);
        Ok(())
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax { offset, message: message.into() }
}

fn decimal(s: &str, offset: usize) -> Result<Rational> {
    let (int_part, frac) = match s.split_once('.') {
        Some((a, b)) => (a, b),
        None => (s, ""),
    };
    if frac.contains('.') || (int_part.is_empty() && frac.is_empty()) {
        return Err(syntax(offset, format!("malformed number {s:?}")));
    }
    let digits = format!("{int_part}{frac}");
    let n: BigInt = digits.parse().map_err(|_| syntax(offset, "malformed number"))?;
    let d = num_traits::pow(BigInt::from(10), frac.len());
    Ok(Rational::new(n, d))
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    nvars: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn constant(&self, c: Rational) -> Sparse {
        let mut m = Sparse::new();
        if !c.is_zero() {
            m.insert(vec![0; self.nvars], c);
        }
        m
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = if self.eat('-') {
            neg(&self.term()?)
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = add(&acc, &self.term()?);
            } else if self.eat('-') {
                acc = add(&acc, &neg(&self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = mul(&acc, &self.unary()?);
            } else if self.eat('/') {
                let at = self.offset();
                let d = self.unary()?;
                let c = as_constant(&d, self.nvars)
                    .filter(|c| !c.is_zero())
                    .ok_or_else(|| syntax(at, "division only by a nonzero constant"))?;
                acc = scale(&acc, &c.recip());
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Var(_) | Tok::Op('('))) {
                acc = mul(&acc, &self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Sparse> {
        if self.eat('-') {
            return Ok(neg(&self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Sparse> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.offset();
        let e = match self.toks.get(self.pos) {
            Some((Tok::Num(r), _)) if r.is_integer() => r.to_integer(),
            Some((Tok::Num(_), o)) => return Err(Error::IrrationalLiteral { offset: *o }),
            Some((Tok::Op('-'), o)) => return Err(syntax(*o, "negative exponent")),
            Some((Tok::Op('('), _)) => {
                let inner = self.primary()?;
                return Err(match as_constant(&inner, self.nvars) {
                    Some(c) if !c.is_integer() => Error::IrrationalLiteral { offset: at },
                    _ => syntax(at, "exponent must be an integer literal"),
                });
            }
            _ => return Err(syntax(at, "expected an integer exponent")),
        };
        self.pos += 1;
        // a fractional exponent written as ^(1/2) or ^1/2 is caught here
        if self.peek() == Some(&Tok::Op('/')) {
            return Err(Error::IrrationalLiteral { offset: at });
        }
        let e: u32 = e.try_into().map_err(|_| syntax(at, "exponent too large"))?;
        let mut acc = self.constant(Rational::one());
        for _ in 0..e {
            acc = mul(&acc, &base);
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<Sparse> {
        let at = self.offset();
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Num(r), _)) => {
                self.pos += 1;
                Ok(self.constant(r))
            }
            Some((Tok::Var(v), _)) => {
                self.pos += 1;
                let mut e = vec![0; self.nvars];
                e[v] = 1;
                Ok(Sparse::from([(e, Rational::one())]))
            }
            Some((Tok::Op('('), _)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Op('^')) {
                    return Err(syntax(self.offset(), "unexpected '^'"));
                }
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(syntax(self.offset(), "expected ')'"));
                }
                Ok(inner)
            }
            Some((Tok::Op(c), _)) => Err(syntax(at, format!("unexpected {c:?}"))),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

fn add(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = a.clone();
    for (e, c) in b {
        let slot = out.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            out.remove(e);
        }
    }
    out
}

fn neg(a: &Sparse) -> Sparse {
    a.iter().map(|(e, c)| (e.clone(), -c)).collect()
}

fn scale(a: &Sparse, k: &Rational) -> Sparse {
    a.iter().map(|(e, c)| (e.clone(), c * k)).collect()
}

fn mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let slot = out.entry(e).or_insert_with(Rational::zero);
            *slot += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn as_constant(a: &Sparse, nvars: usize) -> Option<Rational> {
    match a.len() {
        0 => Some(Rational::zero()),
        1 => a.get(&vec![0; nvars]).cloned(),
        _ => None,
    }
}

fn parse_sparse(text: &str, vars: &[&str]) -> Result<Sparse> {
    let toks = Lexer { src: text, vars }.run()?;
    let mut p = Parser { toks, pos: 0, nvars: vars.len(), end: text.len() };
    if p.toks.is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let value = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(syntax(p.offset(), "unexpected trailing input"));
    }
    Ok(value)
}

/// Parses a polynomial in `X` and `Y`.
pub fn parse_curve(text: &str) -> Result<YPoly> {
    parse_bivariate(text, "X", "Y")
}

/// Parses a polynomial in two named variables; the first plays the role of
/// `X`, the second of `Y`.
pub fn parse_bivariate(text: &str, xv: &str, yv: &str) -> Result<YPoly> {
    let sparse = parse_sparse(text, &[xv, yv])?;
    Ok(YPoly::from_terms(sparse.into_iter().map(|(e, c)| (c, e[0], e[1]))))
}

/// Parses a polynomial in a single variable.
pub fn parse_poly(text: &str, var: &str) -> Result<Poly> {
    let sparse = parse_sparse(text, &[var])?;
    Ok(Poly::from_terms(sparse.into_iter().map(|(e, c)| (c, e[0]))))
}

/// Parses `"n; y(T)"` (or `"n, y(T)"`) into the parameterization
/// `X = T^n`, `Y = y(T)`.
pub fn parse_param(text: &str) -> Result<Parameterization> {
    let (head, tail) = text
        .split_once(';')
        .or_else(|| text.split_once(','))
        .ok_or_else(|| syntax(text.len(), "expected \"n; y(T)\""))?;
    let n: u64 = head
        .trim()
        .parse()
        .map_err(|_| syntax(0, format!("expected a positive integer, found {:?}", head.trim())))?;
    let offset = head.len() + 1;
    let y = parse_poly(tail, "T").map_err(|e| shift_offset(e, offset))?;
    Parameterization::new(n, y)
}

fn shift_offset(e: Error, by: usize) -> Error {
    match e {
        Error::Syntax { offset, message } => Error::Syntax { offset: offset + by, message },
        Error::IrrationalLiteral { offset } => Error::IrrationalLiteral { offset: offset + by },
        other => other,
    }
}

/// Joins signed terms into canonical text, in the order given.
///
/// Each term is a coefficient and a list of `(variable, exponent)` factors;
/// zero exponents are skipped. The empty sum prints as `0`.
pub fn format_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (Rational, Vec<(&'a str, usize)>)>,
{
    let mut out = String::new();
    for (c, factors) in terms {
        if c.is_zero() {
            continue;
        }
        let mono: Vec<String> = factors
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        let mag = c.abs();
        let body = if mono.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            mono.join("*")
        } else {
            format!("{mag}*{}", mono.join("*"))
        };
        match (out.is_empty(), c.is_negative()) {
            (true, false) => out.push_str(&body),
            (true, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
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
    use crate::series::{int, ratio};
    use crate::test_support::f_ex;

    #[test]
    fn f_ex_from_text() {
        let f = parse_curve("Y^4 - 2*X^3*Y^2 - 4*X^5*Y + X^6 - X^7").unwrap();
        let mut expected = YPoly::y_pow(4);
        for (c, i, j) in [(-2, 3, 2), (-4, 5, 1), (1, 6, 0), (-1, 7, 0)] {
            expected = &expected + &YPoly::from_terms([(int(c), i, j)]);
        }
        assert_eq!(f, expected);
        assert_eq!(parse_curve("Y^4-2X^3Y^2-4X^5Y+X^6-X^7").unwrap(), f);
    }

    #[test]
    fn single_variable() {
        assert_eq!(parse_curve("Y").unwrap(), YPoly::y());
    }

    #[test]
    fn rational_literal() {
        assert_eq!(parse_curve("Y^2 - (1/1)*X^3").unwrap(), parse_curve("Y^2-X^3").unwrap());
        assert_eq!(parse_poly("3/2*T + 0.25", "T").unwrap(), Poly::from_coeffs(vec![ratio(1, 4), ratio(3, 2)]));
    }

    #[test]
    fn precedence_and_unary_minus() {
        assert_eq!(parse_poly("-T^2", "T").unwrap(), Poly::from_ints(&[0, 0, -1]));
        assert_eq!(parse_poly("2^3 - 1 - 1", "T").unwrap(), Poly::from_int(6));
        assert_eq!(parse_poly("(T+1)^2", "T").unwrap(), Poly::from_ints(&[1, 2, 1]));
        assert_eq!(parse_poly("2(T+1)T", "T").unwrap(), Poly::from_ints(&[0, 2, 2]));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse_curve("Y + * X"),
            Err(Error::Syntax { offset: 4, message: "unexpected '*'".into() })
        );
        assert!(matches!(parse_curve("Y^2 - Z"), Err(Error::Syntax { offset: 6, .. })));
        assert!(matches!(parse_curve("(Y"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_curve("Y / X"), Err(Error::Syntax { offset: 4, .. })));
        assert!(matches!(parse_curve("Y/0"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_curve(""), Err(Error::Syntax { offset: 0, .. })));
    }

    #[test]
    fn irrational_inputs_rejected() {
        assert_eq!(parse_curve("Y - sqrt(2)*X"), Err(Error::IrrationalLiteral { offset: 4 }));
        assert!(matches!(parse_curve("pi*Y"), Err(Error::IrrationalLiteral { offset: 0 })));
        assert!(matches!(parse_curve("X^(1/2)"), Err(Error::IrrationalLiteral { offset: 2 })));
        assert!(matches!(parse_curve("X^(2)"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_curve("X^1/2"), Err(Error::IrrationalLiteral { .. })));
        assert!(matches!(parse_curve("X^1.5"), Err(Error::IrrationalLiteral { .. })));
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(f_ex().to_string(), "Y^4 - 2*X^3*Y^2 - 4*X^5*Y + X^6 - X^7");
        let p = parse_curve("-3/2*X^2*Y + 1/3").unwrap();
        assert_eq!(p.to_string(), "-3/2*X^2*Y + 1/3");
        assert_eq!(YPoly::zero().to_string(), "0");
    }

    #[test]
    fn print_then_parse_is_identity() {
        for s in ["Y^4 - 2*X^3*Y^2 - 4*X^5*Y + X^6 - X^7", "-Y + 7/5*X", "Y^3 - X^2*Y^2 + 1", "X"] {
            let p = parse_curve(s).unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(parse_curve(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn param_text() {
        let p = parse_param("4; T^6 + T^7").unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.y(), &Poly::from_ints(&[0, 0, 0, 0, 0, 0, 1, 1]));
        assert!(matches!(parse_param("4; T^6"), Err(Error::NotPrimitive(2))));
        assert!(matches!(parse_param("2; T^3 + Q"), Err(Error::Syntax { offset: 9, .. })));
    }
}
