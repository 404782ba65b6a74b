//! Parser for polynomials over F3 in the variables `x`, `y`, `z`.
//!
//! Accepts integers, `+`, `-`, `*`, implicit multiplication, `^` with a
//! nonnegative integer exponent and parentheses. `eps`, `epsilon` and `ε`
//! denote the constant 2.

use std::collections::BTreeMap;

use super::{monomial_index, FormsError};

/// Sparse polynomial over F3 keyed by exponents `(i, j, k)` of `x^i y^j z^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparsePoly(pub BTreeMap<(u32, u32, u32), u8>);

impl SparsePoly {
    fn constant(c: u8) -> Self {
        let mut p = SparsePoly::default();
        p.push((0, 0, 0), c);
        p
    }

    fn push(&mut self, mono: (u32, u32, u32), c: u8) {
        let e = self.0.entry(mono).or_insert(0);
        *e = (*e + c) % 3;
        if *e == 0 {
            self.0.remove(&mono);
        }
    }

    fn add(mut self, other: &SparsePoly) -> Self {
        for (&m, &c) in &other.0 {
            self.push(m, c);
        }
        self
    }

    fn neg(self) -> Self {
        SparsePoly(self.0.into_iter().map(|(m, c)| (m, (3 - c) % 3)).collect())
    }

    fn mul(&self, other: &SparsePoly) -> Self {
        let mut out = SparsePoly::default();
        for (&(a, b, c), &u) in &self.0 {
            for (&(d, e, f), &v) in &other.0 {
                out.push((a + d, b + e, c + f), u * v % 3);
            }
        }
        out
    }

    fn pow(&self, n: u32) -> Self {
        (0..n).fold(SparsePoly::constant(1), |acc, _| acc.mul(self))
    }

    /// Coefficients in the quintic monomial order; fails unless the
    /// polynomial is homogeneous of degree 5 (or zero).
    pub fn to_quintic(&self) -> Result<[u8; 21], FormsError> {
        let mut out = [0u8; 21];
        for (&(i, j, k), &c) in &self.0 {
            if i + j + k != 5 {
                return Err(FormsError::Shape { expected: 5 });
            }
            out[monomial_index(i as u8, j as u8, k as u8)] = c;
        }
        Ok(out)
    }

    /// Coefficients of a univariate polynomial in `x`, lowest degree first.
    pub fn to_univariate_x(&self) -> Result<Vec<u8>, FormsError> {
        let deg = self.0.keys().map(|m| m.0).max().unwrap_or(0) as usize;
        let mut out = vec![0u8; deg + 1];
        for (&(i, j, k), &c) in &self.0 {
            if j != 0 || k != 0 {
                return Err(FormsError::Shape { expected: 0 });
            }
            out[i as usize] = c;
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T, FormsError> {
        Err(FormsError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn number(&mut self) -> Result<u64, FormsError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .or_else(|_| self.err("expected an integer"))
    }

    fn expr(&mut self) -> Result<SparsePoly, FormsError> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.bump();
                self.term()?.neg()
            }
            Some('+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.bump();
                    acc = acc.add(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SparsePoly, FormsError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = acc.mul(&self.power()?);
                }
                Some(c) if c == '(' || c.is_ascii_alphanumeric() || c == 'ε' => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<SparsePoly, FormsError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let n = self.number()?;
            let n = u32::try_from(n).or_else(|_| self.err("exponent too large"))?;
            Ok(base.pow(n))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<SparsePoly, FormsError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                Ok(SparsePoly::constant((n % 3) as u8))
            }
            Some('ε') => {
                self.bump();
                Ok(SparsePoly::constant(2))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let rest = &self.src[self.pos..];
                let word_len = rest
                    .find(|c: char| !c.is_ascii_alphabetic())
                    .unwrap_or(rest.len());
                if matches!(&rest[..word_len], "eps" | "epsilon") {
                    self.pos += word_len;
                    return Ok(SparsePoly::constant(2));
                }
                // one letter at a time, so "xyz^3" reads as x * y * z^3
                let mono = match c {
                    'x' => (1, 0, 0),
                    'y' => (0, 1, 0),
                    'z' => (0, 0, 1),
                    _ => return self.err("unknown identifier"),
                };
                self.pos += 1;
                let mut v = SparsePoly::default();
                v.push(mono, 1);
                Ok(v)
            }
            _ => self.err("unexpected input"),
        }
    }
}

/// Parses a polynomial expression over F3.
pub fn parse_poly(src: &str) -> Result<SparsePoly, FormsError> {
    let mut p = Parser { src, pos: 0 };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_expressions() {
        let p = parse_poly("x^2 - eps y^2").unwrap();
        assert_eq!(p.0.get(&(2, 0, 0)), Some(&1));
        assert_eq!(p.0.get(&(0, 2, 0)), Some(&1));
        let q = parse_poly("(x+y)^3").unwrap();
        assert_eq!(q, parse_poly("x^3 + y^3").unwrap());
        assert_eq!(parse_poly("3x").unwrap(), SparsePoly::default());
        assert_eq!(parse_poly("2*x*y").unwrap(), parse_poly("2 x y").unwrap());
        assert_eq!(parse_poly("xyz^3").unwrap(), parse_poly("x*y*z^3").unwrap());
    }

    #[test]
    fn quintic_layout() {
        let p = parse_poly("x y z^3 + y^5").unwrap().to_quintic().unwrap();
        assert_eq!(p[4], 1);
        assert_eq!(p[20], 1);
        assert_eq!(p.iter().map(|&c| c as u32).sum::<u32>(), 2);
        assert!(parse_poly("x^2").unwrap().to_quintic().is_err());
    }

    #[test]
    fn errors() {
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("(x").is_err());
        assert!(parse_poly("w").is_err());
        assert!(parse_poly("x )").is_err());
    }
}
