//! Cyclotomic polynomials, Euler's totient, and the conductor map g.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::poly::CycPoly;

/// Euler totient, by trial-division factorization.
pub fn euler_phi(m: u64) -> u64 {
    assert!(m >= 1, "euler_phi needs m >= 1");
    let mut m = m;
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut pk = 1;
            while m % p == 0 {
                m /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        phi *= m - 1;
    }
    phi
}

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn is_squarefree(m: u64) -> bool {
    factorize(m).iter().all(|&(_, e)| e == 1)
}

/// Divisors of m in increasing order.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            if d != m / d {
                out.push(m / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// The conductor map: g(m) = m for m = 2 mod 4, 2m when 4 | m, 4m for m odd,
/// so that Q(sin(pi k/m)) is the maximal real subfield of Q(zeta_{g(m)}).
pub fn g_of(m: u64) -> u64 {
    assert!(m >= 1, "g_of needs m >= 1");
    if m % 4 == 2 {
        m
    } else if m % 4 == 0 {
        2 * m
    } else {
        4 * m
    }
}

fn cache() -> &'static Mutex<HashMap<u64, Arc<CycPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The m-th cyclotomic polynomial Phi_m: monic of degree phi(m), computed by
/// exact division of x^m - 1 by the product of Phi_d over proper divisors d.
pub fn cyclotomic_poly(m: u64) -> Arc<CycPoly> {
    assert!(m >= 1, "cyclotomic_poly needs m >= 1");
    if let Some(p) = cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let poly = if m == 1 {
        CycPoly::from_i64(&[-1, 1])
    } else {
        let mut num = CycPoly::x_pow_minus_one(m as usize);
        for d in divisors(m) {
            if d == m {
                continue;
            }
            num = num.exact_div(&cyclotomic_poly(d));
        }
        num
    };
    let arc = Arc::new(poly);
    cache().lock().unwrap().insert(m, arc.clone());
    arc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_base_case() {
        assert_eq!(euler_phi(1), 1);
    }

    #[test]
    fn phi_standard_value() {
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn phi_matches_brute_force_count() {
        // 30 -> 8, counting units mod 30 directly.
        let brute = (1..30u64).filter(|k| num_integer::gcd(*k, 30) == 1).count() as u64;
        assert_eq!(brute, 8);
        assert_eq!(euler_phi(30), brute);
        for m in 1..=200u64 {
            let b = (1..=m).filter(|k| num_integer::gcd(*k, m) == 1).count() as u64;
            let b = if m == 1 { 1 } else { b };
            assert_eq!(euler_phi(m), b, "phi({m})");
        }
    }

    #[test]
    fn g_of_cases() {
        assert_eq!(g_of(6), 6); // m = 2 mod 4
        assert_eq!(g_of(8), 16); // 4 | m
        assert_eq!(g_of(5), 20); // m odd
    }

    #[test]
    fn cyclotomic_base_cases() {
        assert_eq!(*cyclotomic_poly(1), CycPoly::from_i64(&[-1, 1]));
        assert_eq!(*cyclotomic_poly(4), CycPoly::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn cyclotomic_10_by_independent_division() {
        // Oracle: divide x^10 - 1 by Phi_1 * Phi_2 * Phi_5 assembled by hand.
        let phi1 = CycPoly::from_i64(&[-1, 1]);
        let phi2 = CycPoly::from_i64(&[1, 1]);
        let phi5 = CycPoly::from_i64(&[1, 1, 1, 1, 1]);
        let expect = CycPoly::x_pow_minus_one(10)
            .exact_div(&phi1)
            .exact_div(&phi2)
            .exact_div(&phi5);
        assert_eq!(expect, CycPoly::from_i64(&[1, -1, 1, -1, 1]));
        assert_eq!(*cyclotomic_poly(10), expect);
    }

    #[test]
    fn cyclotomic_degree_and_divides_x_m_minus_one() {
        for m in 1..=100u64 {
            let phi = cyclotomic_poly(m);
            assert!(phi.is_monic(), "Phi_{m} monic");
            assert_eq!(phi.degree() as u64, euler_phi(m), "deg Phi_{m}");
            let (_, r) = CycPoly::x_pow_minus_one(m as usize).divrem(&phi);
            assert!(r.is_zero(), "Phi_{m} | x^{m} - 1");
        }
    }
}
