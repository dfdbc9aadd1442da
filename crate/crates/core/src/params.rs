use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::integer::ipow;

/// The five integers defining `x^n + y^m = c * x^k * y^l`.
///
/// Every field is at least 1; construct through [`EquationParams::new`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EquationParams {
    n: u32,
    m: u32,
    k: u32,
    l: u32,
    c: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamError {
    /// An exponent or the coefficient was zero.
    NotPositive(&'static str),
    /// `k + l` does not fit in 32 bits.
    ExponentOverflow,
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamError::NotPositive(name) => write!(f, "{name} must be ≥ 1"),
            ParamError::ExponentOverflow => f.write_str("k + l must fit in 32 bits"),
        }
    }
}

impl core::error::Error for ParamError {}

impl EquationParams {
    pub fn new(n: u32, m: u32, k: u32, l: u32, c: impl Into<BigUint>) -> Result<Self, ParamError> {
        let c = c.into();
        for (name, v) in [("n", n), ("m", m), ("k", k), ("l", l)] {
            if v == 0 {
                return Err(ParamError::NotPositive(name));
            }
        }
        if c.is_zero() {
            return Err(ParamError::NotPositive("c"));
        }
        if k.checked_add(l).is_none() {
            return Err(ParamError::ExponentOverflow);
        }
        Ok(Self { n, m, k, l, c })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn c(&self) -> &BigUint {
        &self.c
    }

    /// `k + l`, widened so it cannot overflow.
    pub fn kl(&self) -> u64 {
        u64::from(self.k) + u64::from(self.l)
    }

    /// Same equation with the roles of `x` and `y` exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            n: self.m,
            m: self.n,
            k: self.l,
            l: self.k,
            c: self.c.clone(),
        }
    }

    /// Left- and right-hand sides at `(x, y)`.
    pub fn sides(&self, x: &BigUint, y: &BigUint) -> (BigUint, BigUint) {
        let lhs = ipow(x, self.n) + ipow(y, self.m);
        let rhs = &self.c * ipow(x, self.k) * ipow(y, self.l);
        (lhs, rhs)
    }

    /// Exact membership test. Zero coordinates are never solutions.
    pub fn is_solution(&self, x: &BigUint, y: &BigUint) -> bool {
        if x.is_zero() || y.is_zero() {
            return false;
        }
        let (lhs, rhs) = self.sides(x, y);
        lhs == rhs
    }
}

impl fmt::Display for EquationParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x^{} + y^{} = {}·x^{}·y^{}",
            self.n, self.m, self.c, self.k, self.l
        )
    }
}
