//! Dense univariate polynomials over Q, lowest degree first.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::Rational;

/// Polynomial with rational coefficients, stored dense, lowest degree first.
/// The zero polynomial is the empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycPoly {
    coeffs: Vec<Rational>,
}

impl CycPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        CycPoly { coeffs }
    }

    pub fn zero() -> Self {
        CycPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        CycPoly {
            coeffs: vec![Rational::one()],
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        CycPoly::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// x^n with unit coefficient.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        CycPoly { coeffs }
    }

    /// x^n - 1.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[0] = -Rational::one();
        coeffs[n] = Rational::one();
        CycPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 by convention of callers
    /// that check `is_zero` first.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        CycPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        CycPoly::new(out)
    }

    pub fn neg(&self) -> Self {
        CycPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return CycPoly::zero();
        }
        CycPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return CycPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        CycPoly::new(out)
    }

    /// Quotient and remainder with `deg(rem) < deg(divisor)`.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.coeffs.len() < divisor.coeffs.len() {
            return (CycPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dlead = divisor.leading();
        let dd = divisor.degree();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &dlead;
            quot[k - dd] = q.clone();
            rem[k] = Rational::zero();
            for (j, c) in divisor.coeffs[..dd].iter().enumerate() {
                if !c.is_zero() {
                    rem[k - dd + j] -= c * &q;
                }
            }
        }
        (CycPoly::new(quot), CycPoly::new(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "exact_div called with non-divisor");
        q
    }

    /// Extended gcd: returns (g, u, v) with u*self + v*other = g, g monic (or zero).
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = CycPoly::one();
        let mut s1 = CycPoly::zero();
        let mut t0 = CycPoly::zero();
        let mut t1 = CycPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead = r0.leading();
        let inv = Rational::one() / lead;
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Pretty form like `x^4 - x^3 + x^2 - x + 1`, for reports.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if k == 0 {
                format!("{mag}")
            } else {
                let x = if k == 1 { "x".into() } else { format!("x^{k}") };
                if mag.is_one() {
                    x
                } else {
                    format!("{mag}*{x}")
                }
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

impl Serialize for CycPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}
