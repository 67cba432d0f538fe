//! Cyclotomic polynomials over the integers and exact arithmetic with
//! integer combinations of roots of unity.
//!
//! Elements are kept reduced modulo `Phi_n`, i.e. as integer polynomials in
//! `zeta_n` of degree < phi(n), so equality is literal coefficient equality.
//! Coefficients here are `i64`: the consumers are character tables, whose
//! entries are sums of at most `sqrt(|G|)` roots of unity, far below any
//! overflow concern.

use std::fmt;

use serde::{Serialize, Serializer};

/// Moebius function of `n >= 1`.
fn moebius(mut n: u32) -> i32 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if m > 1 {
        result = result / m * (m - 1);
    }
    result
}

/// Multiply two integer polynomials (dense, ascending powers).
fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials; panics if the division is inexact
/// (callers only divide by known factors).
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd] == 1 || den[dd] == -1, "divisor must have unit lead");
    assert!(rem.len() > dd);
    let mut quo = vec![0i64; rem.len() - dd];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dd] / den[dd];
        quo[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact polynomial division");
    quo
}

/// The n-th cyclotomic polynomial as an ascending coefficient vector,
/// via `Phi_n(x) = prod_{d | n} (x^{n/d} - 1)^{mu(d)}`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    let mut num = vec![1i64];
    let mut dens: Vec<Vec<i64>> = Vec::new();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let e = (n / d) as usize;
        let mut f = vec![0i64; e + 1];
        f[0] = -1;
        f[e] = 1;
        match moebius(d) {
            1 => num = poly_mul(&num, &f),
            -1 => dens.push(f),
            _ => {}
        }
    }
    for den in &dens {
        num = poly_div_exact(&num, den);
    }
    while num.len() > 1 && *num.last().unwrap() == 0 {
        num.pop();
    }
    num
}

/// An integer combination of `n`-th roots of unity, reduced mod `Phi_n`.
/// Construct and combine through [`ZetaRing`], which caches `Phi_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZetaInt {
    n: u32,
    /// Coefficients of 1, zeta, ..., zeta^(phi(n)-1).
    coeffs: Vec<i64>,
}

impl ZetaInt {
    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }
}

impl fmt::Display for ZetaInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            if j == 0 {
                write!(f, "{a}")?;
            } else {
                if a != 1 {
                    write!(f, "{a}*")?;
                }
                if j == 1 {
                    write!(f, "z{}", self.n)?;
                } else {
                    write!(f, "z{}^{}", self.n, j)?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for ZetaInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Arithmetic context for `Z[zeta_n]`: holds `Phi_n` so reductions are cheap.
pub struct ZetaRing {
    n: u32,
    phi: Vec<i64>,
    degree: usize,
}

impl ZetaRing {
    pub fn new(n: u32) -> ZetaRing {
        let phi = cyclotomic_polynomial(n);
        let degree = phi.len() - 1;
        ZetaRing { n, phi, degree }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn reduce(&self, mut full: Vec<i64>) -> ZetaInt {
        for i in (self.degree..full.len()).rev() {
            let c = full[i];
            if c != 0 {
                full[i] = 0;
                for (j, &p) in self.phi.iter().enumerate().take(self.degree) {
                    full[i - self.degree + j] -= c * p;
                }
            }
        }
        full.truncate(self.degree);
        full.resize(self.degree, 0);
        ZetaInt { n: self.n, coeffs: full }
    }

    pub fn zero(&self) -> ZetaInt {
        ZetaInt { n: self.n, coeffs: vec![0; self.degree] }
    }

    pub fn integer(&self, k: i64) -> ZetaInt {
        let mut z = self.zero();
        z.coeffs[0] = k;
        z
    }

    /// `zeta_n^j` (any integer exponent).
    pub fn root(&self, j: i64) -> ZetaInt {
        let e = j.rem_euclid(self.n as i64) as usize;
        let mut full = vec![0i64; e + 1];
        full[e] = 1;
        self.reduce(full)
    }

    /// `sum_j mults[j] * zeta_n^(j * n / o)` for a list indexed by `j mod o`.
    pub fn from_root_multiplicities(&self, o: u32, mults: &[i64]) -> ZetaInt {
        assert!(self.n % o == 0);
        let step = (self.n / o) as usize;
        let mut full = vec![0i64; self.n as usize];
        for (j, &m) in mults.iter().enumerate() {
            full[j * step % self.n as usize] += m;
        }
        self.reduce(full)
    }

    pub fn add(&self, a: &ZetaInt, b: &ZetaInt) -> ZetaInt {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        ZetaInt { n: self.n, coeffs }
    }

    pub fn mul(&self, a: &ZetaInt, b: &ZetaInt) -> ZetaInt {
        self.reduce(poly_mul(&a.coeffs, &b.coeffs))
    }

    /// Apply the Galois map `zeta -> zeta^t`; requires `gcd(t, n) = 1`.
    pub fn galois(&self, a: &ZetaInt, t: i64) -> ZetaInt {
        let t = t.rem_euclid(self.n as i64) as u64;
        assert_eq!(num_integer::gcd(t, self.n as u64), 1, "galois exponent not a unit");
        let mut full = vec![0i64; self.n as usize];
        for (j, &c) in a.coeffs.iter().enumerate() {
            full[(j as u64 * t % self.n as u64) as usize] += c;
        }
        self.reduce(full)
    }

    /// Complex conjugation `zeta -> zeta^(-1)`.
    pub fn conj(&self, a: &ZetaInt) -> ZetaInt {
        self.galois(a, self.n as i64 - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // phi(105) = 48 and the first coefficient of absolute value 2 in any
        // cyclotomic polynomial appears here.
        let c105 = cyclotomic_polynomial(105);
        assert_eq!(c105.len(), 49);
        assert!(c105.contains(&-2));
        for n in [8u32, 9, 20, 48, 288] {
            assert_eq!(cyclotomic_polynomial(n).len() as u32, euler_phi(n) + 1);
        }
    }

    #[test]
    fn root_arithmetic() {
        let r = ZetaRing::new(12);
        let z = r.root(1);
        let mut acc = r.integer(1);
        for _ in 0..12 {
            acc = r.mul(&acc, &z);
        }
        assert_eq!(acc, r.integer(1));
        // Sum of all primitive 4th and 2nd and 1st roots: z^3 + z^9 = 0 etc.
        let sum_all: ZetaInt = (0..12).fold(r.zero(), |a, j| r.add(&a, &r.root(j)));
        assert!(sum_all.is_zero());
        assert_eq!(r.root(6), r.integer(-1));
        // Conjugation inverts roots.
        assert_eq!(r.conj(&r.root(5)), r.root(-5));
        // Norm-like product of z4 with its conjugate.
        let z4 = r.root(3);
        assert_eq!(r.mul(&z4, &r.conj(&z4)), r.integer(1));
    }

    #[test]
    fn multiplicity_embedding() {
        // 1 + zeta_3 + zeta_3^2 = 0 read through the order-6 ring.
        let r = ZetaRing::new(6);
        let v = r.from_root_multiplicities(3, &[1, 1, 1]);
        assert!(v.is_zero());
        let w = r.from_root_multiplicities(2, &[2, 5]);
        assert_eq!(w, r.integer(-3));
    }

    #[test]
    fn displays_canonically() {
        let r = ZetaRing::new(8);
        let x = r.add(&r.root(1), &r.add(&r.integer(-2), &r.root(3)));
        assert_eq!(x.to_string(), "-2 + z8 + z8^3");
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!(serde_json::to_string(&x).unwrap(), "\"-2 + z8 + z8^3\"");
    }
}
