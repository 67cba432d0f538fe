//! Exact scalar tokens of the form `r * zeta_n^e * (monomial in named
//! parameters)`: a nonzero rational times a root of unity times formal
//! parameters with integer exponents.
//!
//! These are the coefficient values twisted-algebra relations carry around.
//! Roots of unity are kept symbolic (`z3`, `z9^2`, ...) except that `zeta_1`
//! and `zeta_2` fold into the rational part, so equality of tokens is literal
//! structural equality of the canonical form.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A nonzero scalar `coeff * zeta_{zeta_order}^{zeta_exp} * prod params^k`.
///
/// Canonical form: `coeff != 0`; `gcd(zeta_exp, zeta_order) == 1` with
/// `0 <= zeta_exp < zeta_order` and `zeta_order > 2` (orders 1 and 2 are
/// absorbed into `coeff`); `params` has no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Token {
    coeff: BigRational,
    zeta_order: u32,
    zeta_exp: u32,
    params: BTreeMap<char, i64>,
}

impl Token {
    pub fn one() -> Self {
        Token {
            coeff: BigRational::one(),
            zeta_order: 1,
            zeta_exp: 0,
            params: BTreeMap::new(),
        }
    }

    pub fn rational(r: BigRational) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::Invalid("scalar tokens must be nonzero".into()));
        }
        Ok(Token {
            coeff: r,
            zeta_order: 1,
            zeta_exp: 0,
            params: BTreeMap::new(),
        })
    }

    pub fn integer(n: i64) -> Result<Self> {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `zeta_order^exp` for the primitive root of unity of the given order.
    pub fn root_of_unity(order: u32, exp: i64) -> Result<Self> {
        if order == 0 {
            return Err(Error::Invalid("root of unity needs positive order".into()));
        }
        let e = exp.rem_euclid(order as i64) as u32;
        let mut t = Token::one();
        t.mul_root(order, e);
        Ok(t)
    }

    pub fn param(name: char) -> Result<Self> {
        if !name.is_ascii_uppercase() {
            return Err(Error::Invalid(format!(
                "parameter names are single uppercase letters, got {name:?}"
            )));
        }
        let mut params = BTreeMap::new();
        params.insert(name, 1);
        Ok(Token {
            coeff: BigRational::one(),
            zeta_order: 1,
            zeta_exp: 0,
            params,
        })
    }

    fn mul_root(&mut self, order: u32, exp: u32) {
        // Merge zeta_order^zeta_exp with order^exp over the lcm, then reduce.
        let l = (self.zeta_order as u64).lcm(&(order as u64)) as u32;
        let merged = (self.zeta_exp as u64 * (l / self.zeta_order) as u64
            + exp as u64 * (l / order) as u64)
            % l as u64;
        let g = (merged as u64).gcd(&(l as u64)) as u32;
        let (mut o, mut e) = (l / g, (merged as u32) / g);
        if o == 2 {
            // zeta_2 = -1 folds into the rational coefficient.
            if e == 1 {
                self.coeff = -std::mem::take(&mut self.coeff);
            }
            o = 1;
            e = 0;
        }
        if o == 1 {
            e = 0;
        }
        self.zeta_order = o;
        self.zeta_exp = e;
    }

    pub fn mul(&self, other: &Token) -> Token {
        let mut out = self.clone();
        out.coeff *= &other.coeff;
        out.mul_root(other.zeta_order, other.zeta_exp);
        for (&p, &k) in &other.params {
            let e = out.params.entry(p).or_insert(0);
            *e += k;
            if *e == 0 {
                out.params.remove(&p);
            }
        }
        out
    }

    pub fn pow(&self, k: i64) -> Token {
        if k == 0 {
            return Token::one();
        }
        let mut base = if k < 0 { self.inv() } else { self.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = Token::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Token {
        let mut out = Token {
            coeff: self.coeff.recip(),
            zeta_order: 1,
            zeta_exp: 0,
            params: self.params.iter().map(|(&p, &k)| (p, -k)).collect(),
        };
        if self.zeta_order > 1 {
            out.mul_root(self.zeta_order, self.zeta_order - self.zeta_exp);
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.coeff.is_one() && self.zeta_order == 1 && self.params.is_empty()
    }

    pub fn has_params(&self) -> bool {
        !self.params.is_empty()
    }

    pub fn params(&self) -> &BTreeMap<char, i64> {
        &self.params
    }

    /// The rational part when the token carries no root and no parameters.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.zeta_order == 1 && self.params.is_empty() {
            Some(&self.coeff)
        } else {
            None
        }
    }

    /// If the token is exactly a root of unity, its exponent for the
    /// primitive root of order `m` (so the token equals `zeta_m^result`).
    /// Requires the token's order to divide `m`.
    pub fn as_root_exponent(&self, m: u32) -> Option<u32> {
        if !self.params.is_empty() {
            return None;
        }
        let sign = if self.coeff.is_one() {
            0u32
        } else if (-self.coeff.clone()).is_one() {
            1
        } else {
            return None;
        };
        if m == 0 {
            return None;
        }
        // token = (-1)^sign * zeta_o^e = zeta_{2o or o}^..; express over zeta_m.
        let mut exp_num = self.zeta_exp as u64 * 2 + sign as u64 * self.zeta_order as u64;
        let mut ord = 2 * self.zeta_order as u64; // token = zeta_ord^exp_num
        let g = exp_num.gcd(&ord);
        if g > 0 {
            exp_num /= g;
            ord /= g;
        }
        if ord == 0 {
            ord = 1;
        }
        if m as u64 % ord != 0 {
            return None;
        }
        Some((exp_num * (m as u64 / ord) % m as u64) as u32)
    }

    pub fn is_root_of_unity(&self) -> bool {
        self.params.is_empty()
            && (self.coeff.is_one() || (-self.coeff.clone()).is_one())
    }

    /// Substitute `1` for every parameter (the degenerate specialization).
    pub fn without_params(&self) -> Token {
        let mut out = self.clone();
        out.params.clear();
        out
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let minus_one = -BigRational::one();
        if !self.coeff.is_one() {
            if self.coeff == minus_one && (self.zeta_order > 1 || !self.params.is_empty()) {
                // render as prefix sign below
            } else {
                parts.push(self.coeff.to_string());
            }
        }
        if self.zeta_order > 1 {
            if self.zeta_exp == 1 {
                parts.push(format!("z{}", self.zeta_order));
            } else {
                parts.push(format!("z{}^{}", self.zeta_order, self.zeta_exp));
            }
        }
        for (p, k) in &self.params {
            if *k == 1 {
                parts.push(p.to_string());
            } else {
                parts.push(format!("{p}^{k}"));
            }
        }
        let body = if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        };
        if self.coeff == minus_one && (self.zeta_order > 1 || !self.params.is_empty()) {
            write!(f, "-{body}")
        } else {
            write!(f, "{body}")
        }
    }
}

impl Serialize for Token {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn rational_from_parts(num: i64, den: i64) -> Result<BigRational> {
    if den == 0 {
        return Err(Error::Invalid("rational with zero denominator".into()));
    }
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_fold_and_merge() {
        let m1 = Token::root_of_unity(2, 1).unwrap();
        assert_eq!(m1.as_rational().unwrap(), &-BigRational::one());
        let z4 = Token::root_of_unity(4, 1).unwrap();
        assert_eq!(z4.mul(&z4), Token::root_of_unity(2, 1).unwrap());
        let z6 = Token::root_of_unity(6, 1).unwrap();
        // zeta_6 = -zeta_3^2: order reduces to 3 with a sign.
        assert_eq!(z6.pow(2), Token::root_of_unity(3, 1).unwrap());
        assert_eq!(z6.pow(3), Token::integer(-1).unwrap());
        assert_eq!(z6.pow(6), Token::one());
        let z9 = Token::root_of_unity(9, 6).unwrap();
        assert_eq!(z9, Token::root_of_unity(3, 2).unwrap());
    }

    #[test]
    fn root_exponent_extraction() {
        let t = Token::root_of_unity(4, 3).unwrap();
        assert_eq!(t.as_root_exponent(4), Some(3));
        assert_eq!(t.as_root_exponent(8), Some(6));
        assert_eq!(t.as_root_exponent(2), None);
        let m1 = Token::integer(-1).unwrap();
        assert_eq!(m1.as_root_exponent(4), Some(2));
        assert_eq!(m1.as_root_exponent(3), None);
        assert_eq!(Token::one().as_root_exponent(5), Some(0));
        let z6 = Token::root_of_unity(6, 1).unwrap();
        assert_eq!(z6.as_root_exponent(6), Some(1));
        assert_eq!(z6.as_root_exponent(12), Some(2));
        assert!(Token::integer(2).unwrap().as_root_exponent(4).is_none());
    }

    #[test]
    fn params_and_inverse() {
        let l = Token::param('L').unwrap();
        let m = Token::param('M').unwrap();
        let t = l.mul(&m).mul(&Token::integer(2).unwrap());
        assert_eq!(t.to_string(), "2*L*M");
        let u = t.mul(&t.inv());
        assert!(u.is_one());
        assert_eq!(l.pow(3).mul(&l.pow(-3)), Token::one());
        assert!(Token::param('q').is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Token::one().to_string(), "1");
        assert_eq!(Token::integer(-1).unwrap().to_string(), "-1");
        assert_eq!(Token::root_of_unity(3, 1).unwrap().to_string(), "z3");
        assert_eq!(Token::root_of_unity(9, 2).unwrap().to_string(), "z9^2");
        let t = Token::root_of_unity(4, 1)
            .unwrap()
            .mul(&Token::integer(-1).unwrap());
        assert_eq!(t.to_string(), "-z4");
        assert_eq!(
            Token::param('L').unwrap().pow(-1).to_string(),
            "L^-1"
        );
    }
}
