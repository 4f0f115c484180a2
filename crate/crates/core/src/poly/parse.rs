//! Polynomial text grammar:
//!
//! ```text
//! poly    := sign? term (sign term)*
//! term    := factor ('*' factor)*
//! factor  := INT | '(' literal ')' | VAR ('^' INT)?
//! literal := sign? lterm (sign lterm)*        -- element of GF(p^e) in `t`
//! lterm   := lfactor ('*' lfactor)*
//! lfactor := INT | 't' ('^' INT)?
//! ```
//!
//! Whitespace is insignificant and integers are reduced modulo p.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::field::Elem;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn syntax(pos: usize, msg: &str) -> Error {
    Error::Syntax {
        pos,
        msg: msg.to_string(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i]
                    .parse::<u64>()
                    .map_err(|_| syntax(start, "integer too large"))?;
                out.push((Tok::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => return Err(syntax(start, "unexpected character")),
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(_, p)| p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.bump();
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) if n <= u32::MAX as u64 => Ok(n as u32),
            _ => Err(syntax(at, "expected exponent")),
        }
    }

    /// `sign? term (sign term)*`. Ring polynomials and `t`-literals share
    /// this routine; `factor` adds its exponents into `exps` and returns its
    /// coefficient.
    fn sum<F>(&mut self, width: usize, factor: &mut F) -> Result<Vec<(Vec<u32>, Elem)>>
    where
        F: FnMut(&mut Self, &mut Vec<u32>) -> Result<Elem>,
    {
        let field = self.ring.field().clone();
        let mut acc: BTreeMap<Vec<u32>, Elem> = BTreeMap::new();
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        loop {
            let mut exps = vec![0u32; width];
            let mut coef: Elem = factor(self, &mut exps)?;
            while self.peek() == Some(&Tok::Star) {
                self.bump();
                let c = factor(self, &mut exps)?;
                coef = field.mul(coef, c);
            }
            if negate {
                coef = field.neg(coef);
            }
            let slot = acc.entry(exps).or_insert(0);
            *slot = field.add(*slot, coef);
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                _ => break,
            }
            self.bump();
        }
        Ok(acc.into_iter().filter(|&(_, c)| c != 0).collect())
    }

    fn ring_factor(&mut self, exps: &mut [u32]) -> Result<Elem> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(self.int(n)),
            Some(Tok::LParen) => {
                let c = self.literal()?;
                let close = self.here();
                if self.bump() != Some(Tok::RParen) {
                    return Err(syntax(close, "expected `)`"));
                }
                Ok(c)
            }
            Some(Tok::Ident(name)) => {
                let i = self.ring.index_of(&name).ok_or(Error::UnknownVariable { name, pos: at })?;
                let e = self.exponent()?;
                exps[i] = exps[i].checked_add(e).ok_or_else(|| syntax(at, "exponent overflow"))?;
                Ok(1)
            }
            _ => Err(syntax(at, "expected a coefficient or a variable")),
        }
    }

    fn int(&self, n: u64) -> Elem {
        let p = self.ring.field().characteristic() as u64;
        (n % p) as Elem
    }

    /// Field element written as a polynomial in `t`.
    fn literal(&mut self) -> Result<Elem> {
        let field = self.ring.field().clone();
        let has_t = !field.is_prime_field();
        let mut factor = |this: &mut Self, exps: &mut Vec<u32>| -> Result<Elem> {
            let at = this.here();
            match this.bump() {
                Some(Tok::Int(n)) => Ok(this.int(n)),
                Some(Tok::Ident(name)) if name == "t" && has_t => {
                    let e = this.exponent()?;
                    exps[0] += e;
                    Ok(1)
                }
                Some(Tok::Ident(_)) if has_t => Err(syntax(at, "only `t` may appear in a coefficient literal")),
                Some(Tok::Ident(_)) => Err(syntax(at, "prime fields have no generator `t`")),
                _ => Err(syntax(at, "expected a coefficient literal")),
            }
        };
        let terms = self.sum(1, &mut factor)?;
        let mut coeffs: Vec<i64> = Vec::new();
        for (e, c) in terms {
            let k = e[0] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, 0);
            }
            coeffs[k] = c as i64;
        }
        Ok(field.reduce_t_poly(&coeffs))
    }
}

pub(super) fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(syntax(0, "empty polynomial"));
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
    };
    let terms = parser.sum(ring.nvars(), &mut |p: &mut Parser<'_>, exps: &mut Vec<u32>| p.ring_factor(exps))?;
    if parser.pos < parser.toks.len() {
        return Err(syntax(parser.here(), "unexpected token"));
    }
    Ok(Polynomial::from_map(
        ring.clone(),
        terms.into_iter().map(|(e, c)| (Monomial::new(e), c)).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn r2() -> Ring {
        Ring::new(FieldSpec::prime(3).unwrap(), ["X0", "X1"]).unwrap()
    }

    #[test]
    fn accepts_grammar() {
        let r = r2();
        let f = r.parse(" 2*X0^2 *X1 - X1 + 4 ").unwrap();
        assert_eq!(f, r.parse("2*X0^2*X1 + 2*X1 + 1").unwrap());
        assert_eq!(r.parse("X0*X0").unwrap(), r.parse("X0^2").unwrap());
        assert_eq!(r.parse("-1").unwrap(), r.constant(2));
        assert_eq!(r.parse("(2)*X0").unwrap(), r.parse("2*X0").unwrap());
    }

    #[test]
    fn extension_literals() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let r = Ring::new(f4.clone(), ["X0"]).unwrap();
        let a = r.parse("(t^2)*X0").unwrap();
        let b = r.parse("(t+1)*X0").unwrap();
        assert_eq!(a, b);
        assert_eq!(r.parse("(t)*(t)").unwrap(), r.parse("(t+1)").unwrap());
    }

    #[test]
    fn reports_errors_with_positions() {
        let r = r2();
        assert_eq!(
            r.parse("X0 + X7"),
            Err(Error::UnknownVariable {
                name: "X7".into(),
                pos: 5
            })
        );
        assert!(matches!(r.parse("X0 +"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(r.parse("X0 ^"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(r.parse("X0 X1"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(r.parse("(t)*X0"), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(r.parse(""), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(r.parse("X0 $"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(r.parse("(1"), Err(Error::Syntax { pos: 2, .. })));
    }
}
