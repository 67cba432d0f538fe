//! Parser for the textual twist-relation language used on the command line
//! and in tests.
//!
//! ```text
//! spec  := stmt (";" stmt)*
//! stmt  := "[u(" gen "),u(" gen ")]" "=" coeff
//!        | "u(" gen ")^" int "=" coeff ("*" "u(" word ")")?
//! coeff := "zeta" ("^" int)? | param | rational
//! word  := gen ("^" int)?
//! ```
//!
//! Whitespace is ignored between tokens.  Generator names are identifiers
//! referring to named group elements; parameters are single uppercase
//! letters; `zeta` denotes the distinguished root of unity whose order is
//! fixed by the group being twisted, so `zeta^k` keeps `k` symbolic here.
//! Parsing is purely syntactic — resolution against a concrete group
//! happens in [`super::registry`].

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffToken {
    /// `zeta^k`.
    Zeta(i64),
    /// A single-uppercase-letter formal parameter.
    Param(char),
    /// An explicit rational number `a` or `a/b`.
    Rational(BigRational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationKind {
    /// `[u(x),u(y)] = coeff`.
    Commutator { left: String, right: String },
    /// `u(x)^e = coeff` or `u(x)^e = coeff * u(w^k)`.
    Power {
        gen: String,
        exponent: i64,
        tail: Option<(String, i64)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistRelation {
    pub kind: RelationKind,
    pub coeff: CoeffToken,
}

/// A parsed (unresolved) list of twist relations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TwistSpec {
    pub relations: Vec<TwistRelation>,
}

pub fn parse_relations(text: &str) -> Result<TwistSpec> {
    let mut sc = Scanner::new(text);
    let mut relations = Vec::new();
    sc.skip_ws();
    if sc.at_end() {
        return Ok(TwistSpec { relations });
    }
    loop {
        relations.push(sc.stmt()?);
        sc.skip_ws();
        if sc.at_end() {
            break;
        }
        sc.expect(';')?;
    }
    Ok(TwistSpec { relations })
}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
}

impl Scanner {
    fn new(text: &str) -> Self {
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(self.err(format!("expected {c:?}, found {d:?}"))),
            None => Err(self.err(format!("expected {c:?}, found end of input"))),
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            Some(c) => return Err(self.err(format!("expected a name, found {c:?}"))),
            None => return Err(self.err("expected a name, found end of input")),
        }
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        match self.chars.get(self.pos) {
            Some(c) if c.is_ascii_digit() => {}
            _ => return Err(self.err("expected an integer")),
        }
        let mut v: i64 = 0;
        while let Some(c) = self.chars.get(self.pos) {
            let Some(d) = c.to_digit(10) else { break };
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as i64))
                .ok_or_else(|| self.err("integer too large"))?;
            self.pos += 1;
        }
        Ok(if neg { -v } else { v })
    }

    /// `u(` name `)`; returns the name.
    fn u_of(&mut self) -> Result<String> {
        match self.peek() {
            Some('u') => self.pos += 1,
            _ => return Err(self.err("expected u(...)")),
        }
        self.expect('(')?;
        let name = self.ident()?;
        self.expect(')')?;
        Ok(name)
    }

    fn stmt(&mut self) -> Result<TwistRelation> {
        if self.peek() == Some('[') {
            self.expect('[')?;
            let left = self.u_of()?;
            self.expect(',')?;
            let right = self.u_of()?;
            self.expect(']')?;
            self.expect('=')?;
            let coeff = self.coeff()?;
            return Ok(TwistRelation {
                kind: RelationKind::Commutator { left, right },
                coeff,
            });
        }
        let gen = self.u_of()?;
        self.expect('^')?;
        let exponent = self.int()?;
        self.expect('=')?;
        let coeff = self.coeff()?;
        let mut tail = None;
        if self.peek() == Some('*') {
            self.expect('*')?;
            match self.peek() {
                Some('u') => self.pos += 1,
                _ => return Err(self.err("expected u(...) after *")),
            }
            self.expect('(')?;
            let base = self.ident()?;
            let exp = if self.peek() == Some('^') {
                self.expect('^')?;
                self.int()?
            } else {
                1
            };
            self.expect(')')?;
            tail = Some((base, exp));
        }
        Ok(TwistRelation {
            kind: RelationKind::Power {
                gen,
                exponent,
                tail,
            },
            coeff,
        })
    }

    fn coeff(&mut self) -> Result<CoeffToken> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.pos;
                let name = self.ident()?;
                if name == "zeta" {
                    if self.peek() == Some('^') {
                        self.expect('^')?;
                        return Ok(CoeffToken::Zeta(self.int()?));
                    }
                    return Ok(CoeffToken::Zeta(1));
                }
                if name.len() == 1 {
                    let c = name.chars().next().unwrap();
                    if c.is_ascii_uppercase() {
                        return Ok(CoeffToken::Param(c));
                    }
                }
                self.pos = at;
                Err(self.err(format!(
                    "expected zeta^k, a single uppercase parameter, or a rational; found {name:?}"
                )))
            }
            Some(c) if c.is_ascii_digit() || c == '-' => {
                let num = self.int()?;
                let mut den = 1i64;
                if self.peek() == Some('/') {
                    self.expect('/')?;
                    den = self.int()?;
                    if den == 0 {
                        return Err(self.err("rational with zero denominator"));
                    }
                }
                Ok(CoeffToken::Rational(BigRational::new(
                    BigInt::from(num),
                    BigInt::from(den),
                )))
            }
            Some(c) => Err(self.err(format!("expected a coefficient, found {c:?}"))),
            None => Err(self.err("expected a coefficient, found end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> CoeffToken {
        CoeffToken::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    #[test]
    fn parses_power_relations() {
        let spec = parse_relations("u(a)^3 = L; u(b)^3 = M").unwrap();
        assert_eq!(spec.relations.len(), 2);
        assert_eq!(
            spec.relations[0].kind,
            RelationKind::Power {
                gen: "a".into(),
                exponent: 3,
                tail: None
            }
        );
        assert_eq!(spec.relations[0].coeff, CoeffToken::Param('L'));
        assert_eq!(spec.relations[1].coeff, CoeffToken::Param('M'));
    }

    #[test]
    fn parses_tails_and_negative_exponents() {
        let spec = parse_relations("u(a)^3 = 2/3 * u(a^-3)").unwrap();
        assert_eq!(
            spec.relations[0].kind,
            RelationKind::Power {
                gen: "a".into(),
                exponent: 3,
                tail: Some(("a".into(), -3))
            }
        );
        assert_eq!(spec.relations[0].coeff, rat(2, 3));
        let spec = parse_relations("u(a)^9 = 1 * u(c)").unwrap();
        assert_eq!(
            spec.relations[0].kind,
            RelationKind::Power {
                gen: "a".into(),
                exponent: 9,
                tail: Some(("c".into(), 1))
            }
        );
    }

    #[test]
    fn parses_commutators_and_whitespace() {
        let spec = parse_relations(" [ u ( c ) , u ( d ) ] = zeta ^ 2 ").unwrap();
        assert_eq!(
            spec.relations[0].kind,
            RelationKind::Commutator {
                left: "c".into(),
                right: "d".into()
            }
        );
        assert_eq!(spec.relations[0].coeff, CoeffToken::Zeta(2));
        let spec = parse_relations("[u(c),u(d)]=zeta^-1;u(e)^2=-1").unwrap();
        assert_eq!(spec.relations.len(), 2);
        assert_eq!(spec.relations[0].coeff, CoeffToken::Zeta(-1));
        assert_eq!(spec.relations[1].coeff, rat(-1, 1));
        // Bare `zeta` is shorthand for the first power.
        let spec = parse_relations("[u(a),u(b)] = zeta").unwrap();
        assert_eq!(spec.relations[0].coeff, CoeffToken::Zeta(1));
    }

    #[test]
    fn empty_spec_is_the_trivial_twist() {
        assert!(parse_relations("").unwrap().relations.is_empty());
        assert!(parse_relations("   ").unwrap().relations.is_empty());
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "u(a)^3",
            "u(a)^3 = q",
            "u(a)^3 = 1/0",
            "u(a)^3 = L;",
            "[u(a),u(b)] = L extra",
            "v(a)^3 = L",
            "u(a)^3 = L * w(c)",
        ] {
            let err = parse_relations(bad).unwrap_err();
            assert!(
                matches!(err, Error::Parse { .. }),
                "{bad:?} gave {err:?}"
            );
        }
    }
}
