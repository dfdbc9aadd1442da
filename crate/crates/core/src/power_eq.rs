//! The pure power equation `x^a = y^b`.
//!
//! With `g = gcd(a, b)`, `a = g·a1`, `b = g·b1`, every positive solution is
//! `(t^b1, t^a1)` for exactly one positive `t`.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::integer::{gcd_u32, ipow, lcm_u32, perfect_root};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerEqParametrization {
    pub a: u32,
    pub b: u32,
    /// `gcd(a, b)`
    pub d: u32,
    pub a1: u32,
    pub b1: u32,
}

impl PowerEqParametrization {
    /// Returns `None` when `a` or `b` is zero.
    pub fn new(a: u32, b: u32) -> Option<Self> {
        if a == 0 || b == 0 {
            return None;
        }
        let d = gcd_u32(a, b);
        Some(Self {
            a,
            b,
            d,
            a1: a / d,
            b1: b / d,
        })
    }

    pub fn lcm(&self) -> u64 {
        u64::from(lcm_u32(self.a, self.b))
    }

    /// The pair generated by `t`.
    pub fn pair(&self, t: &BigUint) -> (BigUint, BigUint) {
        (ipow(t, self.b1), ipow(t, self.a1))
    }

    /// Family members for `t = 1..=t_max`, ascending in both coordinates.
    pub fn enumerate(&self, t_max: u64) -> Vec<(BigUint, BigUint)> {
        (1..=t_max).map(|t| self.pair(&BigUint::from(t))).collect()
    }

    /// The `t` generating `(x, y)`, or `None` when `(x, y)` does not solve
    /// `x^a = y^b`.
    pub fn recover(&self, x: &BigUint, y: &BigUint) -> Option<BigUint> {
        let t = perfect_root(x, self.b1)?;
        (ipow(&t, self.a1) == *y).then_some(t)
    }

    pub fn is_solution(&self, x: &BigUint, y: &BigUint) -> bool {
        ipow(x, self.a) == ipow(y, self.b)
    }
}

pub fn parametrize(a: u32, b: u32) -> Option<PowerEqParametrization> {
    PowerEqParametrization::new(a, b)
}

pub fn enumerate_solutions(p: &PowerEqParametrization, t_max: u64) -> Vec<(BigUint, BigUint)> {
    p.enumerate(t_max)
}

pub fn recover_parameter(x: &BigUint, y: &BigUint, p: &PowerEqParametrization) -> Option<BigUint> {
    p.recover(x, y)
}

/// Recovers `t` from the prime factorization of `x`: every exponent must be a
/// multiple of `b1`. Independent of [`PowerEqParametrization::recover`].
pub fn recover_by_factorization(
    x: &BigUint,
    y: &BigUint,
    p: &PowerEqParametrization,
) -> Option<BigUint> {
    let mut t = BigUint::one();
    for (prime, e) in crate::integer::factorize(x).factors() {
        if e % p.b1 != 0 {
            return None;
        }
        t *= ipow(prime, e / p.b1);
    }
    (ipow(&t, p.a1) == *y).then_some(t)
}
