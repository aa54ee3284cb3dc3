//! Elements of cyclotomic fields Q(zeta_m) in the power basis.

use std::f64::consts::TAU;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use super::cyclotomic::{cyclotomic_poly, euler_phi};
use super::poly::CycPoly;
use super::sign::sign_of_real;
use super::sparse::ratio_if_rational;
use super::Rational;

/// Element of Q(zeta_m), represented by its conductor and the coefficient
/// vector of length phi(m) in the power basis zeta^0 .. zeta^{phi(m)-1},
/// canonically reduced modulo Phi_m.
#[derive(Clone)]
pub struct CycElt {
    m: u64,
    coeffs: Vec<Rational>,
}

impl CycElt {
    fn from_reduced(m: u64, coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(coeffs.len() as u64, euler_phi(m));
        CycElt { m, coeffs }
    }

    /// Reduce an arbitrary coefficient list (power k meaning zeta_m^k) into
    /// the canonical power basis. Exponents may exceed phi(m); reduction is by
    /// polynomial remainder modulo Phi_m after folding exponents mod m.
    pub fn reduce(m: u64, raw: &[Rational]) -> Self {
        let phi = euler_phi(m) as usize;
        let mut folded = vec![Rational::zero(); (m as usize).max(1)];
        for (k, c) in raw.iter().enumerate() {
            if !c.is_zero() {
                folded[k % m as usize] += c;
            }
        }
        let poly = CycPoly::new(folded);
        let (_, rem) = poly.divrem(&cyclotomic_poly(m));
        let mut coeffs = rem.coeffs().to_vec();
        coeffs.resize(phi, Rational::zero());
        CycElt::from_reduced(m, coeffs)
    }

    pub fn zero(m: u64) -> Self {
        CycElt::from_reduced(m, vec![Rational::zero(); euler_phi(m) as usize])
    }

    pub fn one(m: u64) -> Self {
        CycElt::from_rational(m, Rational::one())
    }

    pub fn from_rational(m: u64, q: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); euler_phi(m) as usize];
        coeffs[0] = q;
        CycElt::from_reduced(m, coeffs)
    }

    pub fn from_i64(m: u64, v: i64) -> Self {
        CycElt::from_rational(m, Rational::from_integer(v.into()))
    }

    /// zeta_m^k, k taken mod m (negative k allowed).
    pub fn zeta_pow(m: u64, k: i64) -> Self {
        let k = k.rem_euclid(m as i64) as usize;
        let mut raw = vec![Rational::zero(); k + 1];
        raw[k] = Rational::one();
        CycElt::reduce(m, &raw)
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value if the element lies in Q (all coefficients of
    /// zeta^k for k >= 1 vanish), else None.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Promote to conductor big_m (m must divide big_m) via zeta_m = zeta_M^{M/m}.
    pub fn promote(&self, big_m: u64) -> Self {
        if big_m == self.m {
            return self.clone();
        }
        assert!(
            big_m % self.m == 0,
            "promotion target {} not a multiple of conductor {}",
            big_m,
            self.m
        );
        let stride = (big_m / self.m) as usize;
        let mut raw = vec![Rational::zero(); (self.coeffs.len() - 1) * stride + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[k * stride] = c.clone();
            }
        }
        CycElt::reduce(big_m, &raw)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.m == other.m {
            (self.clone(), other.clone())
        } else {
            let m = self.m.lcm(&other.m);
            (self.promote(m), other.promote(m))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Self {
        CycElt::from_reduced(self.m, self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        CycElt::from_reduced(self.m, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        let m = a.m;
        let prod = CycPoly::new(a.coeffs).mul(&CycPoly::new(b.coeffs));
        let (_, rem) = prod.divrem(&cyclotomic_poly(m));
        let mut coeffs = rem.coeffs().to_vec();
        coeffs.resize(euler_phi(m) as usize, Rational::zero());
        CycElt::from_reduced(m, coeffs)
    }

    /// Multiplicative inverse via extended polynomial gcd with Phi_m.
    /// Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero cyclotomic element");
        let p = CycPoly::new(self.coeffs.clone());
        let phi_m = cyclotomic_poly(self.m);
        let (g, u, _) = p.ext_gcd(&phi_m);
        let g0 = g.coeff(0);
        assert!(
            g.degree() == 0 && !g0.is_zero(),
            "Phi_m and a nonzero element must be coprime"
        );
        let scaled = u.scale(&(Rational::one() / g0));
        let (_, rem) = scaled.divrem(&phi_m);
        let mut coeffs = rem.coeffs().to_vec();
        coeffs.resize(euler_phi(self.m) as usize, Rational::zero());
        CycElt::from_reduced(self.m, coeffs)
    }

    /// Full field division. A proportionality fast path returns rational
    /// quotients without a generic inverse; otherwise falls back to inv().
    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero cyclotomic element");
        if let Some(q) = self.div_rational(other) {
            let m = self.m.lcm(&other.m);
            return CycElt::from_rational(m, q);
        }
        let (a, b) = self.common(other);
        a.mul(&b.inv())
    }

    /// The quotient self/other when it is rational, else None. Decided by
    /// exact proportionality of the two elements over the compositum field,
    /// without materializing the (irrational) quotient.
    pub fn div_rational(&self, other: &Self) -> Option<Rational> {
        assert!(!other.is_zero(), "division by zero cyclotomic element");
        if self.m == other.m {
            let mut q: Option<Rational> = None;
            for (a, b) in self.coeffs.iter().zip(other.coeffs.iter()) {
                match (&q, b.is_zero()) {
                    (_, false) => {
                        let cand = a / b;
                        match &q {
                            Some(prev) if *prev != cand => return None,
                            _ => q = Some(cand),
                        }
                    }
                    (_, true) => {
                        if !a.is_zero() {
                            return None;
                        }
                    }
                }
            }
            return q;
        }
        ratio_if_rational(self, other)
    }

    /// Galois conjugation zeta -> zeta^{-1} (complex conjugation on the
    /// standard embedding).
    pub fn conjugate(&self) -> Self {
        let m = self.m;
        let mut raw = vec![Rational::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(m as usize - k) % m as usize] += c;
            }
        }
        CycElt::reduce(m, &raw)
    }

    /// True when fixed by zeta -> zeta^{-1}, i.e. the element is real.
    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// Complex embedding at zeta_m = exp(2 pi i / m), in f64. Diagnostic only;
    /// all decisions in this crate are exact.
    pub fn embed(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let f = c.to_f64().unwrap_or(f64::NAN);
            let theta = TAU * (k as f64) / (self.m as f64);
            re += f * theta.cos();
            im += f * theta.sin();
        }
        (re, im)
    }

    /// f64 shadow of a real element.
    pub fn to_f64(&self) -> f64 {
        self.embed().0
    }

    /// Exact sign of a real-subfield element: -1, 0, or +1.
    /// Panics (debug) if the element is not real.
    pub fn sign(&self) -> i32 {
        debug_assert!(self.is_real(), "sign of a non-real element");
        sign_of_real(self)
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// Exact comparison of real elements.
    pub fn cmp_real(&self, other: &Self) -> std::cmp::Ordering {
        match self.sub(other).sign() {
            s if s < 0 => std::cmp::Ordering::Less,
            0 => std::cmp::Ordering::Equal,
            _ => std::cmp::Ordering::Greater,
        }
    }

    /// Stable short text form used in JSON: conductor and coefficient list.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl PartialEq for CycElt {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycElt {}

/// Hash is consistent with Eq only among elements sharing a conductor, which
/// is how every hashed collection in this crate uses it (all geometry for a
/// surface lives at conductor 4n).
impl Hash for CycElt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.m.hash(state);
        for c in &self.coeffs {
            c.hash(state);
        }
    }
}

impl fmt::Debug for CycElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElt(m={}, ~{:.6}", self.m, self.embed().0)?;
        let im = self.embed().1;
        if im.abs() > 1e-12 {
            write!(f, "{im:+.6}i")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for CycElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                if k == 0 {
                    format!("{c}")
                } else {
                    format!("{c}*z{}^{k}", self.m)
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Serialize for CycElt {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = ser.serialize_struct("CycElt", 3)?;
        s.serialize_field("conductor", &self.m)?;
        s.serialize_field("coeffs", &self.coeff_strings())?;
        s.serialize_field("float", &crate::svg::shadow(self.to_f64()))?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn zeta4_squares_to_minus_one() {
        let i = CycElt::zeta_pow(4, 1);
        assert_eq!(i.mul(&i), CycElt::from_i64(4, -1));
    }

    #[test]
    fn reduce_is_idempotent() {
        let x = CycElt::reduce(
            12,
            &[q(1, 2), q(0, 1), q(-3, 1), q(0, 1), q(7, 5), q(1, 1), q(2, 3)],
        );
        let again = CycElt::reduce(12, x.coeffs());
        assert_eq!(x, again);
    }

    #[test]
    fn promotion_preserves_value() {
        let z5 = CycElt::zeta_pow(5, 2);
        let promoted = z5.promote(20);
        assert_eq!(promoted, z5);
        let (re0, im0) = z5.embed();
        let (re1, im1) = promoted.embed();
        assert!((re0 - re1).abs() < 1e-12 && (im0 - im1).abs() < 1e-12);
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let x = CycElt::zeta_pow(7, 3).add(&CycElt::from_i64(7, 2));
        assert_eq!(x.mul(&x.inv()), CycElt::one(7));
    }

    #[test]
    fn primitive_root_is_irrational() {
        assert!(CycElt::zeta_pow(5, 1).as_rational().is_none());
    }

    #[test]
    fn div_rational_detects_scalar_multiples() {
        let x = CycElt::zeta_pow(9, 2).add(&CycElt::zeta_pow(9, 5));
        let y = x.scale(&q(-7, 3));
        assert_eq!(y.div_rational(&x), Some(q(-7, 3)));
        assert_eq!(x.div_rational(&y), Some(q(-3, 7)));
        let z = x.add(&CycElt::one(9));
        assert_eq!(z.div_rational(&x), None);
    }

    #[test]
    fn div_agrees_with_mul_inv() {
        let x = CycElt::zeta_pow(12, 5).add(&CycElt::from_i64(12, 3));
        let y = CycElt::zeta_pow(12, 2).sub(&CycElt::from_i64(12, 1));
        let via_div = x.div(&y);
        let via_inv = x.mul(&y.inv());
        assert_eq!(via_div, via_inv);
        assert_eq!(via_div.mul(&y), x);
    }

    #[test]
    fn conjugation_fixes_rationals_and_flips_roots() {
        let half = CycElt::from_rational(8, q(1, 2));
        assert_eq!(half.conjugate(), half);
        let z = CycElt::zeta_pow(8, 1);
        assert_eq!(z.conjugate(), CycElt::zeta_pow(8, 7));
        assert!(z.add(&z.conjugate()).is_real());
    }

    #[test]
    fn cross_conductor_equality() {
        let one_a = CycElt::one(1);
        let one_b = CycElt::one(12);
        assert_eq!(one_a, one_b);
        let z6 = CycElt::zeta_pow(6, 1);
        let z12sq = CycElt::zeta_pow(12, 2);
        assert_eq!(z6, z12sq);
    }
}
