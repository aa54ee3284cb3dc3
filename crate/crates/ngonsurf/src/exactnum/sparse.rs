//! Proportionality of cyclotomic elements across conductors.
//!
//! Deciding whether x/y is rational only needs x = q*y over the compositum
//! Q(zeta_M). Reducing dense power-basis vectors modulo Phi_M is quadratic in
//! phi(M), which is far too slow at the compositum conductors reached by the
//! sine-ratio sweep (phi(M) up to ~2000). Instead both elements are expanded
//! in the tensor basis of Q(zeta_M) = prod_p Q(zeta_{p^a}); each root of unity
//! expands into a short signed sum, and proportionality becomes a sparse map
//! comparison.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::Zero;

use super::cyc::CycElt;
use super::cyclotomic::{euler_phi, factorize};
use super::Rational;

struct TensorCtx {
    /// (p, p^{a-1}, phi(p^a), modulus p^a, unit inverse of M/p^a mod p^a, stride)
    primes: Vec<(u64, u64, u64, u64, u64, u64)>,
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let e = i128::extended_gcd(&(a as i128), &(m as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m as i128) as u64
}

impl TensorCtx {
    fn new(m: u64) -> Self {
        let mut primes = Vec::new();
        let mut stride = 1u64;
        for (p, a) in factorize(m) {
            let pa = p.pow(a);
            let phi = euler_phi(pa);
            let inv = mod_inverse((m / pa) % pa, pa);
            primes.push((p, pa / p, phi, pa, inv, stride));
            stride *= phi;
        }
        TensorCtx { primes }
    }

    /// Expand zeta_M^t into signed tensor-basis keys.
    fn expand_root(&self, t: u64, out: &mut Vec<(u64, bool)>) {
        out.clear();
        out.push((0u64, false));
        let mut scratch = Vec::new();
        for &(p, pa1, phi, pa, inv, stride) in &self.primes {
            let e = (t % pa) * inv % pa;
            scratch.clear();
            if e < phi {
                // already a basis exponent for this factor
                for &(key, neg) in out.iter() {
                    scratch.push((key + e * stride, neg));
                }
            } else {
                // zeta^e = -sum_{j=0}^{p-2} zeta^{r + j p^{a-1}}
                let r = e - phi;
                debug_assert!(r < pa1 || (p == 2 && pa1 == 1 && r == 0));
                for j in 0..(p - 1) {
                    let ee = r + j * pa1;
                    debug_assert!(ee < phi);
                    for &(key, neg) in out.iter() {
                        scratch.push((key + ee * stride, !neg));
                    }
                }
            }
            std::mem::swap(out, &mut scratch);
        }
    }
}

fn expand_elt(ctx: &TensorCtx, elt: &CycElt, big_m: u64) -> HashMap<u64, Rational> {
    let stride = big_m / elt.conductor();
    let mut map: HashMap<u64, Rational> = HashMap::new();
    let mut roots = Vec::new();
    for (k, c) in elt.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        ctx.expand_root(k as u64 * stride, &mut roots);
        for &(key, neg) in &roots {
            let entry = map.entry(key).or_insert_with(Rational::zero);
            if neg {
                *entry -= c;
            } else {
                *entry += c;
            }
        }
    }
    map.retain(|_, v| !v.is_zero());
    map
}

/// The rational q with a = q*b, if one exists; None when a/b is irrational.
/// `b` must be nonzero.
pub(crate) fn ratio_if_rational(a: &CycElt, b: &CycElt) -> Option<Rational> {
    let big_m = a.conductor().lcm(&b.conductor());
    let ctx = TensorCtx::new(big_m);
    let ma = expand_elt(&ctx, a, big_m);
    let mb = expand_elt(&ctx, b, big_m);
    debug_assert!(!mb.is_empty(), "ratio_if_rational with zero denominator");
    if ma.is_empty() {
        return Some(Rational::zero());
    }
    if ma.len() != mb.len() {
        return None;
    }
    let (k0, v0) = mb.iter().next().unwrap();
    let q = ma.get(k0)? / v0;
    for (k, v) in &mb {
        if ma.get(k)? != &(v * &q) {
            return None;
        }
    }
    Some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn tensor_expansion_matches_dense_reduction() {
        // zeta_45^t expanded in the tensor basis, then mapped back through the
        // dense representation by summing the basis products, must agree.
        let m = 45;
        let ctx = TensorCtx::new(m);
        let mut roots = Vec::new();
        for t in 0..m {
            ctx.expand_root(t, &mut roots);
            let mut acc = CycElt::zero(m);
            for &(key, negflag) in &roots {
                // decode mixed-radix key back into a root of unity product
                let mut elt = CycElt::one(m);
                let mut rem = key;
                for &(_, _, phi, pa, _, _) in &ctx.primes {
                    let e = rem % phi;
                    rem /= phi;
                    let root = CycElt::zeta_pow(pa, e as i64).promote(m);
                    elt = elt.mul(&root);
                }
                acc = if negflag { acc.sub(&elt) } else { acc.add(&elt) };
            }
            assert_eq!(acc, CycElt::zeta_pow(m, t as i64), "t = {t}");
        }
    }

    #[test]
    fn cross_conductor_rational_ratio() {
        // zeta_6 = -zeta_3^2, so (1+zeta_6) / (1 - zeta_3^2) = 1.
        let a = CycElt::one(6).add(&CycElt::zeta_pow(6, 1));
        let b = CycElt::one(3).sub(&CycElt::zeta_pow(3, 2));
        assert_eq!(ratio_if_rational(&a, &b), Some(Rational::one()));
        let scaled = b.scale(&q(5, 7));
        assert_eq!(ratio_if_rational(&a, &scaled), Some(q(7, 5)));
    }

    #[test]
    fn irrational_ratio_rejected() {
        let a = CycElt::zeta_pow(5, 1).sub(&CycElt::zeta_pow(5, 4));
        let b = CycElt::zeta_pow(5, 2).sub(&CycElt::zeta_pow(5, 3));
        assert_eq!(ratio_if_rational(&a, &b), None);
        // agreement with the dense route at a small conductor
        assert!(a.div(&b).as_rational().is_none());
    }

    #[test]
    fn agrees_with_dense_division_on_mixed_conductors() {
        let cases = [
            (CycElt::zeta_pow(8, 1).add(&CycElt::zeta_pow(8, 7)), CycElt::one(4)),
            (
                CycElt::zeta_pow(12, 2).sub(&CycElt::zeta_pow(12, 10)),
                CycElt::zeta_pow(4, 1),
            ),
            (
                CycElt::zeta_pow(10, 1).add(&CycElt::zeta_pow(10, 9)),
                CycElt::one(5).add(&CycElt::zeta_pow(5, 1)),
            ),
        ];
        for (a, b) in cases {
            let dense = a.div(&b).as_rational();
            let sparse = ratio_if_rational(&a, &b);
            assert_eq!(dense, sparse, "a={a:?} b={b:?}");
        }
    }
}
