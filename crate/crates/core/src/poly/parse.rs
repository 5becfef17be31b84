//! Text grammar for polynomials.
//!
//! ```text
//! poly   := sign? term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := integer ('/' integer)? | variable ('^' integer)?
//! variable := ('x' | 'a' | 'X' | 'A') index | 'x' | 'y' | 'z' | 'w'
//! ```
//!
//! Indices are 1-based. The bare letters `x, y, z, w` stand for the first
//! four variables. Whitespace is ignored everywhere.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::Polynomial;

/// Parses `text` as a polynomial in `n` variables.
pub fn parse_polynomial<F: Field>(field: &F, n: usize, text: &str) -> Result<Polynomial<F>> {
    parse_polynomial_at(field, n, text, 1, 1)
}

/// Like [`parse_polynomial`], reporting errors relative to the given line
/// and starting column.
pub fn parse_polynomial_at<F: Field>(
    field: &F,
    n: usize,
    text: &str,
    line: usize,
    column: usize,
) -> Result<Polynomial<F>> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        line,
        column,
        n,
        field,
    };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected character '{}'", p.chars[p.pos])));
    }
    Ok(poly)
}

struct Parser<'a, F: Field> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    n: usize,
    field: &'a F,
}

impl<F: Field> Parser<'_, F> {
    fn error(&self, message: String) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column + self.pos,
            message,
        }
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

    fn poly(&mut self) -> Result<Polynomial<F>> {
        let f = self.field;
        let mut terms: Vec<(Monomial, F::Elem)> = Vec::new();
        let mut first = true;
        loop {
            let mut negative = false;
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                }
                Some('-') => {
                    self.pos += 1;
                    negative = true;
                }
                None if first => return Err(self.error("empty polynomial".into())),
                None => break,
                _ if first => {}
                Some(c) => return Err(self.error(format!("expected '+' or '-', found '{c}'"))),
            }
            first = false;
            let (m, mut c) = self.term()?;
            if negative {
                c = f.neg(&c);
            }
            terms.push((m, c));
            if self.peek().is_none() {
                break;
            }
        }
        Ok(Polynomial::from_terms(f, self.n, terms))
    }

    fn term(&mut self) -> Result<(Monomial, F::Elem)> {
        let f = self.field;
        let mut coeff = f.one();
        let mut mono = Monomial::one(self.n);
        let mut any = false;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let v = self.factor_number()?;
                    coeff = f.mul(&coeff, &v);
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let m = self.factor_variable()?;
                    mono = mono.mul(&m);
                }
                Some(c) if !any => return Err(self.error(format!("expected a term, found '{c}'"))),
                None if !any => return Err(self.error("expected a term".into())),
                _ => break,
            }
            any = true;
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    match self.peek() {
                        Some(c) if c.is_ascii_alphanumeric() => {}
                        _ => return Err(self.error("expected a factor after '*'".into())),
                    }
                }
                Some(c) if c.is_ascii_alphanumeric() => {}
                _ => break,
            }
        }
        Ok((mono, coeff))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer".into()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn factor_number(&mut self) -> Result<F::Elem> {
        let num = self.integer()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.integer()?;
            return self.field.from_ratio(&num, &den).map_err(|_| Error::Parse {
                line: self.line,
                column: self.column + at,
                message: "zero denominator".into(),
            });
        }
        Ok(self.field.from_bigint(&num))
    }

    fn factor_variable(&mut self) -> Result<Monomial> {
        self.skip_ws();
        let start = self.pos;
        let letter = self.chars[self.pos];
        self.pos += 1;
        let mut digits = String::new();
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            digits.push(self.chars[self.pos]);
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let index = match (letter, digits.is_empty()) {
            ('x' | 'a' | 'X' | 'A', false) => digits.parse::<usize>().ok().filter(|&i| i >= 1).map(|i| i - 1),
            ('x', true) => Some(0),
            ('y', true) => Some(1),
            ('z', true) => Some(2),
            ('w', true) => Some(3),
            _ => None,
        };
        let index = match index {
            Some(i) if i < self.n => i,
            _ => {
                return Err(Error::UnknownVariable {
                    name,
                    line: self.line,
                    column: self.column + start,
                })
            }
        };
        let mut e: u16 = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {}
                _ => return Err(self.error("expected an exponent after '^'".into())),
            }
            let at = self.pos;
            let v = self.integer()?;
            e = u16::try_from(v).map_err(|_| Error::Parse {
                line: self.line,
                column: self.column + at,
                message: "exponent too large".into(),
            })?;
        }
        let mut m = Monomial::one(self.n);
        for _ in 0..e {
            m = m.times_var(index);
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn parses_terms_and_coefficients() {
        let f = Rationals;
        let p = parse_polynomial(&f, 3, "3*x1^2*x3 - 1/2 x2^3 + x1x2x3").unwrap();
        assert_eq!(p.render("x"), "-1/2*x2^3 + 3*x1^2*x3 + x1*x2*x3");
        let q = parse_polynomial(&f, 3, "  a1 * a2  - a1*a2 ").unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn aliases_and_whitespace() {
        let f = PrimeField::default();
        let p = parse_polynomial(&f, 2, "x^2 y - 2 y ^ 3").unwrap();
        let q = parse_polynomial(&f, 2, "x1^2*x2-2*x2^3").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn malformed_exponent() {
        let f = PrimeField::default();
        let e = parse_polynomial(&f, 3, "x1^^2").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, column: 4, .. }), "{e:?}");
    }

    #[test]
    fn unknown_variables() {
        let f = PrimeField::default();
        assert!(matches!(
            parse_polynomial(&f, 2, "x3").unwrap_err(),
            Error::UnknownVariable { .. }
        ));
        assert!(matches!(
            parse_polynomial(&f, 2, "x1 + q").unwrap_err(),
            Error::UnknownVariable { column: 6, .. }
        ));
    }

    #[test]
    fn dangling_operators() {
        let f = PrimeField::default();
        assert!(parse_polynomial(&f, 2, "x1 +").is_err());
        assert!(parse_polynomial(&f, 2, "x1 *").is_err());
        assert!(parse_polynomial(&f, 2, "").is_err());
        assert!(parse_polynomial(&f, 2, "1/0").is_err());
    }
}
