//! Exact sign of real cyclotomic elements.
//!
//! A nonzero element is separated from zero by evaluating its embedding with
//! rational interval arithmetic at increasing precision: pi comes from a
//! Machin-series enclosure, cosines from alternating Taylor brackets. The
//! zero test itself is exact on the canonical coefficient vector, so the
//! escalation always terminates.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use super::cyc::CycElt;
use super::Rational;

type Interval = (Rational, Rational);

fn int_add(a: &Interval, b: &Interval) -> Interval {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn int_scale(a: &Interval, c: &Rational) -> Interval {
    if c.is_negative() {
        (&a.1 * c, &a.0 * c)
    } else {
        (&a.0 * c, &a.1 * c)
    }
}

/// atan(1/x) bracket from the alternating Taylor series.
fn atan_inv(x: u64, terms: u32) -> Interval {
    let x2 = Rational::from_integer((x * x).into());
    let mut sum = Rational::zero();
    let mut power = Rational::new(1.into(), x.into());
    for j in 0..terms {
        let term = &power / Rational::from_integer((2 * j as i64 + 1).into());
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
    }
    let bound = &power / Rational::from_integer((2 * terms as i64 + 1).into());
    (&sum - &bound, &sum + &bound)
}

fn pi_interval(level: u32) -> Interval {
    let terms = 12 + 6 * level;
    let a = atan_inv(5, terms);
    let b = atan_inv(239, terms);
    let sixteen = Rational::from_integer(16.into());
    let four = Rational::from_integer(4.into());
    let hi = &a.1 * &sixteen - &b.0 * &four;
    let lo = &a.0 * &sixteen - &b.1 * &four;
    (lo, hi)
}

/// Taylor bracket for cos at a nonnegative rational angle below ~1.7.
fn cos_series(theta: &Rational, n_terms: u32) -> Interval {
    let t2 = theta * theta;
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for j in 1..=n_terms {
        term = &term * &t2 / Rational::from_integer(((2 * j - 1) as i64 * (2 * j) as i64).into());
        if j % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
    }
    let next = &term * &t2
        / Rational::from_integer(
            ((2 * n_terms + 1) as i64 * (2 * n_terms + 2) as i64).into(),
        );
    (&sum - &next, &sum + &next)
}

/// Enclosure of cos(2 pi t) for exact rational t in [0, 1/4]; cos is
/// decreasing there, so evaluate the bracket at both angle endpoints.
fn cos_quarter(t: &Rational, level: u32) -> Interval {
    if t.is_zero() {
        return (Rational::one(), Rational::one());
    }
    let (pi_lo, pi_hi) = pi_interval(level);
    let two_t = t * Rational::from_integer(2.into());
    let theta_lo = &pi_lo * &two_t;
    let theta_hi = &pi_hi * &two_t;
    let n = 6 + 2 * level;
    let at_hi = cos_series(&theta_hi, n);
    let at_lo = cos_series(&theta_lo, n);
    (at_hi.0, at_lo.1)
}

/// Enclosure of cos(2 pi k / m) via quadrant symmetries.
fn cos_frac(k: u64, m: u64, level: u32) -> Interval {
    let mut t = Rational::new((k % m).into(), m.into());
    // cos(2 pi t) = cos(2 pi (1 - t))
    if t > Rational::new(1.into(), 2.into()) {
        t = Rational::one() - t;
    }
    if t <= Rational::new(1.into(), 4.into()) {
        cos_quarter(&t, level)
    } else {
        // cos(2 pi t) = -cos(2 pi (1/2 - t))
        let s = Rational::new(1.into(), 2.into()) - t;
        let inner = cos_quarter(&s, level);
        (-inner.1, -inner.0)
    }
}

fn cos_table(m: u64, level: u32) -> Arc<Vec<Interval>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), Arc<Vec<Interval>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(m, level)) {
        return t.clone();
    }
    let phi = super::cyclotomic::euler_phi(m);
    let table: Vec<Interval> = (0..phi).map(|k| cos_frac(k, m, level)).collect();
    let arc = Arc::new(table);
    cache.lock().unwrap().insert((m, level), arc.clone());
    arc
}

/// Sign of the real embedding of a real-subfield element: -1, 0, or +1.
pub(crate) fn sign_of_real(x: &CycElt) -> i32 {
    if x.is_zero() {
        return 0;
    }
    let m = x.conductor();
    for level in 0.. {
        let table = cos_table(m, level);
        let mut acc: Interval = (Rational::zero(), Rational::zero());
        for (k, c) in x.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = int_add(&acc, &int_scale(&table[k], c));
        }
        if acc.0.is_positive() {
            return 1;
        }
        if acc.1.is_negative() {
            return -1;
        }
        assert!(level < 64, "sign escalation failed to converge");
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_enclosure_is_tight_and_correct() {
        let (lo, hi) = pi_interval(0);
        // enclosure is far tighter than f64 resolution; check the bracket
        // against known rational bounds of pi instead
        let below = Rational::new(3141592653589793u64.into(), 10u64.pow(15).into());
        let above = Rational::new(3141592653589794u64.into(), 10u64.pow(15).into());
        assert!(lo < above && below < hi);
        assert!(&hi - &lo < Rational::new(1.into(), 10u64.pow(14).into()));
        assert!(lo < hi);
    }

    fn to_f64(i: &Interval) -> (f64, f64) {
        (i.0.to_f64(), i.1.to_f64())
    }

    trait ApproxF64 {
        fn to_f64(&self) -> f64;
    }
    impl ApproxF64 for Rational {
        fn to_f64(&self) -> f64 {
            num_traits::ToPrimitive::to_f64(self).unwrap()
        }
    }

    #[test]
    fn cos_enclosures_bracket_f64_values() {
        for m in [5u64, 7, 12, 32, 96] {
            for k in 0..m {
                let (lo, hi) = to_f64(&cos_frac(k, m, 0));
                let truth = (std::f64::consts::TAU * k as f64 / m as f64).cos();
                assert!(lo - 1e-9 <= truth && truth <= hi + 1e-9, "cos(2pi*{k}/{m})");
                assert!(hi - lo < 1e-6);
            }
        }
    }

    #[test]
    fn signs_of_simple_elements() {
        // 2 cos(2 pi / 5) = zeta + zeta^4 > 0, golden-ratio conjugate
        let c1 = CycElt::zeta_pow(5, 1).add(&CycElt::zeta_pow(5, 4));
        assert_eq!(sign_of_real(&c1), 1);
        // 2 cos(4 pi / 5) < 0
        let c2 = CycElt::zeta_pow(5, 2).add(&CycElt::zeta_pow(5, 3));
        assert_eq!(sign_of_real(&c2), -1);
        assert_eq!(sign_of_real(&CycElt::zero(5)), 0);
        // tiny but nonzero: (2 cos(2 pi/5)) - (sqrt(5)-1)/2 = 0 exactly, so
        // perturb by  1/10^9 instead and expect the perturbation's sign
        let half = Rational::new(1.into(), 1_000_000_000.into());
        let tiny = c1.sub(&c1).add(&CycElt::from_rational(5, half.clone()));
        assert_eq!(sign_of_real(&tiny), 1);
        let tiny_neg = CycElt::from_rational(5, -half);
        assert_eq!(sign_of_real(&tiny_neg), -1);
    }

    #[test]
    fn sign_separates_close_algebraic_numbers() {
        // 2cos(2pi/7) + 2cos(4pi/7) + 2cos(6pi/7) = -1 exactly; adding 1 gives
        // an exact zero, catching any interval looseness.
        let mut s = CycElt::one(7);
        for k in 1..=3 {
            s = s
                .add(&CycElt::zeta_pow(7, k))
                .add(&CycElt::zeta_pow(7, -k));
        }
        assert_eq!(sign_of_real(&s), 0);
    }
}
