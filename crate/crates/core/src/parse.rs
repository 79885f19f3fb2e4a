//! Text grammar for polynomials.
//!
//! ```text
//! poly     := ['+'|'-'] term (('+'|'-') term)*
//! term     := integer ['*' monomial] | monomial
//! monomial := var ['^' integer] ('*' var ['^' integer])*
//! var      := 'x' index          (1-based)
//! ```
//!
//! Whitespace is allowed between tokens. Printing emits terms from the
//! largest exponent down, and `parse(print(g)) == g` for every `g`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::{Exponent, Poly, Ring};

pub fn parse_poly(text: &str, ring: Ring) -> Result<Poly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

impl Poly {
    pub fn parse(text: &str, ring: Ring) -> Result<Poly> {
        parse_poly(text, ring)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: Ring,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut out = Poly::zero(self.ring);
        let mut negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (c, d) = self.term()?;
            out.add_term(if negate { -c } else { c }, d);
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(BigInt, Exponent)> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let c = self.unsigned()?;
                if self.eat(b'*') {
                    let d = self.monomial()?;
                    Ok((c, d))
                } else {
                    Ok((c, Exponent::zero(self.ring.nvars)))
                }
            }
            Some(b'x') => Ok((BigInt::one(), self.monomial()?)),
            Some(_) => Err(self.error("expected a coefficient or a variable")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn unsigned(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("nonempty digit string"))
    }

    fn signed_small(&mut self) -> Result<i64> {
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let at = self.pos;
        let v = self.unsigned()?;
        let v = if neg { -v } else { v };
        i64::try_from(v).map_err(|_| Error::Syntax {
            pos: at,
            msg: "exponent out of range".into(),
        })
    }

    fn monomial(&mut self) -> Result<Exponent> {
        let mut exps = vec![0i64; self.ring.nvars];
        loop {
            if !self.eat(b'x') {
                return Err(self.error("expected a variable x<index>"));
            }
            let at = self.pos;
            // no whitespace between 'x' and its index
            let mut end = self.pos;
            while end < self.src.len() && self.src[end].is_ascii_digit() {
                end += 1;
            }
            if end == self.pos {
                return Err(self.error("expected a variable index after 'x'"));
            }
            let idx: usize = std::str::from_utf8(&self.src[self.pos..end])
                .expect("ascii digits")
                .parse()
                .map_err(|_| self.error("variable index out of range"))?;
            self.pos = end;
            if idx == 0 || idx > self.ring.nvars {
                return Err(Error::Syntax {
                    pos: at,
                    msg: format!("variable x{idx} outside x1..x{}", self.ring.nvars),
                });
            }
            let e = if self.eat(b'^') {
                self.signed_small()?
            } else {
                1
            };
            exps[idx - 1] += e;
            // a '*' continues the monomial only if another variable follows
            let save = self.pos;
            if self.eat(b'*') && self.peek() == Some(b'x') {
                continue;
            }
            self.pos = save;
            break;
        }
        let d = Exponent::new(exps);
        self.ring.check_exponent(&d)?;
        Ok(d)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, d: &Exponent) -> fmt::Result {
    let mut first = true;
    for (i, &e) in d.entries().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "x{}", i + 1)?;
        } else {
            write!(f, "x{}^{}", i + 1, e)?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if d.is_zero() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, d)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Degree;

    #[test]
    fn parses_mixed_terms() {
        let r = Ring::laurent(2);
        let g = parse_poly("2*x1^3*x2^-1 - x2 + 5", r).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.coeff(&Exponent::new(vec![3, -1])), BigInt::from(2));
        assert_eq!(g.coeff(&Exponent::new(vec![0, 1])), BigInt::from(-1));
        assert_eq!(g.coeff(&Exponent::new(vec![0, 0])), BigInt::from(5));
        assert_eq!(g.degree(), Degree::Finite(4));
        assert_eq!(g.to_string(), "2*x1^3*x2^-1 - x2 + 5");
    }

    #[test]
    fn cancellation_and_whitespace() {
        let r = Ring::polynomial(1);
        assert!(parse_poly("x1 - x1", r).unwrap().is_zero());
        assert_eq!(
            parse_poly("  -x1^2+  1 ", r).unwrap().to_string(),
            "-x1^2 + 1"
        );
        assert_eq!(parse_poly("x1*x1", r).unwrap().to_string(), "x1^2");
        assert_eq!(parse_poly("0", r).unwrap().to_string(), "0");
    }

    #[test]
    fn mode_rule() {
        let err = parse_poly("x1^-2", Ring::polynomial(1)).unwrap_err();
        assert!(matches!(
            err,
            Error::NegativeExponentInPolynomialMode { var: 1, .. }
        ));
        // x1^-1*x1 is fine: the monomial is x1^0
        assert!(parse_poly("x1^-1*x1", Ring::polynomial(1)).is_ok());
    }

    #[test]
    fn syntax_errors_report_position() {
        let r = Ring::polynomial(2);
        assert!(matches!(
            parse_poly("x3", r),
            Err(Error::Syntax { pos: 1, .. })
        ));
        assert!(matches!(
            parse_poly("2 +", r),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(parse_poly("2*", r), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_poly("x1 x2", r),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_poly("", r),
            Err(Error::Syntax { pos: 0, .. })
        ));
    }
}
