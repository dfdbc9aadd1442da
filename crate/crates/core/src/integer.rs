//! Exact integer primitives shared by every solver.
//!
//! All values are [`BigUint`]; callers are expected to pass positive values
//! (the solvers never produce zero). Nothing in here uses floating point.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

pub fn lcm(a: &BigUint, b: &BigUint) -> BigUint {
    a.lcm(b)
}

pub fn gcd_u32(a: u32, b: u32) -> u32 {
    a.gcd(&b)
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

pub fn coprime(a: &BigUint, b: &BigUint) -> bool {
    a.gcd(b).is_one()
}

/// Exact `base^exp`.
pub fn ipow(base: &BigUint, exp: u32) -> BigUint {
    num_traits::pow::Pow::pow(base, exp)
}

/// Largest `u` with `u^e <= v`. `e` must be at least 1.
pub fn root_floor(v: &BigUint, e: u32) -> BigUint {
    assert!(e >= 1, "root index must be positive");
    v.nth_root(e)
}

/// The exact `e`-th root of `v`, or `None` when `v` is not a perfect `e`-th
/// power.
pub fn perfect_root(v: &BigUint, e: u32) -> Option<BigUint> {
    if e == 1 {
        return Some(v.clone());
    }
    let u = root_floor(v, e);
    (ipow(&u, e) == *v).then_some(u)
}

/// Exponent `a` with `v = base^a`, when `v` is an exact power of `base`.
pub fn exact_log(v: &BigUint, base: u32) -> Option<u32> {
    assert!(base >= 2);
    if v.is_zero() {
        return None;
    }
    let mut rest = v.clone();
    let mut a = 0u32;
    while !rest.is_one() {
        let (q, r) = rest.div_rem(&BigUint::from(base));
        if !r.is_zero() {
            return None;
        }
        rest = q;
        a += 1;
    }
    Some(a)
}

/// Canonical prime factorization: primes strictly increasing, exponents
/// positive. `1` factors as the empty product.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * ipow(p, *e))
    }
}

fn push_factor(factors: &mut Vec<(BigUint, u32)>, p: BigUint) {
    match factors.last_mut() {
        Some((last, e)) if *last == p => *e += 1,
        _ => factors.push((p, 1)),
    }
}

fn factorize_u64(mut v: u64, factors: &mut Vec<(BigUint, u32)>) {
    for p in [2u64, 3] {
        while v.is_multiple_of(p) {
            push_factor(factors, p.into());
            v /= p;
        }
    }
    // 6j +- 1 wheel
    let mut p = 5u64;
    let mut step = 2u64;
    while p.saturating_mul(p) <= v {
        while v.is_multiple_of(p) {
            push_factor(factors, p.into());
            v /= p;
        }
        p += step;
        step = 6 - step;
    }
    if v > 1 {
        push_factor(factors, v.into());
    }
}

/// Trial division with a 2-3 wheel. Desk-scale inputs only.
pub fn factorize(v: &BigUint) -> Factorization {
    let mut factors = Vec::new();
    if v.is_zero() {
        return Factorization { factors };
    }
    if let Some(small) = v.to_u64() {
        factorize_u64(small, &mut factors);
        return Factorization { factors };
    }

    let mut rest = v.clone();
    for p in [2u32, 3] {
        let p = BigUint::from(p);
        while (&rest % &p).is_zero() {
            rest /= &p;
            push_factor(&mut factors, p.clone());
        }
    }
    let mut p = BigUint::from(5u32);
    let mut step = 2u32;
    while &p * &p <= rest {
        if let Some(small) = rest.to_u64() {
            // The remaining cofactor fits a machine word; its prime factors
            // are all >= p, so finishing in u64 keeps the order canonical.
            factorize_u64(small, &mut factors);
            return Factorization { factors };
        }
        while (&rest % &p).is_zero() {
            rest /= &p;
            push_factor(&mut factors, p.clone());
        }
        p += step;
        step = 6 - step;
    }
    if !rest.is_one() {
        push_factor(&mut factors, rest);
    }
    Factorization { factors }
}

/// All positive divisors of `v`, ascending.
pub fn divisors(v: &BigUint) -> Vec<BigUint> {
    if v.is_zero() {
        return Vec::new();
    }
    let mut out = vec![BigUint::one()];
    for (p, e) in factorize(v).factors() {
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for d in &out {
            let mut q = d.clone();
            next.push(q.clone());
            for _ in 0..*e {
                q *= p;
                next.push(q.clone());
            }
        }
        out = next;
    }
    out.sort();
    out
}
