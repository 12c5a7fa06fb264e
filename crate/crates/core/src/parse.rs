//! Text grammar for polynomials:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ('^' integer)?
//! atom   := integer | 't' | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Division is allowed only by nonzero constants. Columns in errors are
//! 1-based character positions.

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::unipoly::UniPoly;

use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(char),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Int(s.parse().expect("digits")), col));
        } else if matches!(c, 'x' | 'X' | 'y' | 'Y' | 't') {
            out.push((Tok::Var(c.to_ascii_lowercase()), col));
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(Error::Parse { column: col, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    field: &'a F,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    allow_y: bool,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { column: self.col(), message: message.into() })
    }

    fn expr(&mut self) -> Result<BiPoly<F>> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Op('-')) => {
                negate = true;
                self.pos += 1;
            }
            Some(Tok::Op('+')) => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek() {
            let op = *op;
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BiPoly<F>> {
        let k = self.field;
        let mut acc = self.factor()?;
        while let Some(Tok::Op(op @ ('*' | '/'))) = self.peek() {
            let op = *op;
            self.pos += 1;
            let col = self.col();
            let rhs = self.factor()?;
            if op == '*' {
                acc = acc.mul(&rhs);
            } else {
                if rhs.total_degree() > 0 {
                    return Err(Error::Parse { column: col, message: "division by a non-constant".into() });
                }
                let inv = k.inv(&rhs.coeff(0, 0)).ok_or(Error::Parse {
                    column: col,
                    message: format!("division by zero in {}", k.spec()),
                })?;
                acc = acc.scale(&inv);
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BiPoly<F>> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    let e = u32::try_from(&n).ok().filter(|e| *e <= 4096);
                    let Some(e) = e else { return self.err("exponent too large") };
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected an integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BiPoly<F>> {
        let k = self.field;
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(BiPoly::constant(k, k.from_bigint(&n)))
            }
            Some(Tok::Var('x')) => {
                self.pos += 1;
                Ok(BiPoly::monomial(k, k.one(), 1, 0))
            }
            Some(Tok::Var('y')) if self.allow_y => {
                self.pos += 1;
                Ok(BiPoly::monomial(k, k.one(), 0, 1))
            }
            Some(Tok::Var('t')) => match k.generator() {
                Some(t) => {
                    self.pos += 1;
                    Ok(BiPoly::constant(k, t))
                }
                None => self.err(format!("`t` is not defined over {}", k.spec())),
            },
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::Op(')')) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(Tok::Var(v)) => self.err(format!("unexpected variable `{v}`")),
            Some(Tok::Op(c)) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_any<F: Field>(text: &str, field: &F, allow_y: bool) -> Result<BiPoly<F>> {
    let toks = lex(text)?;
    let end = text.chars().count() + 1;
    let mut p = Parser { field, toks, pos: 0, end, allow_y };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}

/// Parses a polynomial in `x`.
pub fn parse_poly<F: Field>(text: &str, field: &F) -> Result<UniPoly<F>> {
    let b = parse_any(text, field, false)?;
    Ok(UniPoly::new(field, (0..=b.deg_x()).map(|i| b.coeff(i, 0)).collect()))
}

/// Parses a polynomial in `x` and `y`.
pub fn parse_bipoly<F: Field>(text: &str, field: &F) -> Result<BiPoly<F>> {
    parse_any(text, field, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FiniteField, Rationals};
    use crate::unipoly::dickson;

    #[test]
    fn dickson_text() {
        let q = Rationals;
        assert_eq!(parse_poly("x^3 - 3*x", &q).unwrap(), dickson(&q, 3, &q.one()));
    }

    #[test]
    fn extension_generator() {
        let f4 = FiniteField::with_default_modulus(2, 2).unwrap();
        let f = parse_poly("x^4+(1+t)*x^2+t*x", &f4).unwrap();
        assert_eq!(f.coeff(1), f4.generator().unwrap());
        assert_eq!(parse_poly(&f.to_string(), &f4).unwrap(), f);
    }

    #[test]
    fn error_columns() {
        let q = Rationals;
        assert!(matches!(parse_poly("x^^2", &q), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(parse_poly("x + t", &q), Err(Error::Parse { column: 5, .. })));
        assert!(matches!(parse_poly("(x + 1", &q), Err(Error::Parse { column: 7, .. })));
        let f2 = FiniteField::prime(2).unwrap();
        assert!(matches!(parse_poly("1/2", &f2), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(parse_poly("x/x", &q), Err(Error::Parse { .. })));
    }

    #[test]
    fn rationals_and_signs() {
        let q = Rationals;
        let f = parse_poly("-x^2/3 + 5/2", &q).unwrap();
        assert_eq!(f.coeffs(), &[q.ratio(5, 2), q.zero(), q.ratio(-1, 3)]);
        assert_eq!(f.to_string(), "-1/3*x^2 + 5/2");
        assert_eq!(parse_poly(&f.to_string(), &q).unwrap(), f);
    }

    #[test]
    fn bivariate() {
        let f3 = FiniteField::prime(3).unwrap();
        let b = parse_bipoly("x^2 - 2*x*y + y^2 - 2*x - 2*y + 1", &f3).unwrap();
        assert_eq!(b.to_string(), "x^2 + x*y + y^2 + x + y + 1");
    }
}
