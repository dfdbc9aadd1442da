//! Exhaustive ground truth.
//!
//! [`brute_force`] evaluates the equation at every pair of a box in exact
//! arithmetic. It shares nothing with the case solvers beyond the parameter
//! type, so it can be used to check them.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::integer::ipow;
use crate::params::EquationParams;
use crate::solution::{SolutionKind, SolutionSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchBox {
    pub x_max: u64,
    pub y_max: u64,
    /// Keep only pairs with `gcd(x, y) = 1`.
    pub coprime_only: bool,
    /// Keep only pairs with `gcd(x, y) <= gcd_max`.
    pub gcd_max: Option<u64>,
}

impl SearchBox {
    pub fn square(side: u64) -> Self {
        Self {
            x_max: side,
            y_max: side,
            coprime_only: false,
            gcd_max: None,
        }
    }

    pub fn coprime(mut self) -> Self {
        self.coprime_only = true;
        self
    }

    pub fn with_gcd_max(mut self, gcd_max: u64) -> Self {
        self.gcd_max = Some(gcd_max);
        self
    }

    fn has_filter(&self) -> bool {
        self.coprime_only || self.gcd_max.is_some()
    }

    fn accepts_gcd(&self, g: u64) -> bool {
        (!self.coprime_only || g == 1) && self.gcd_max.is_none_or(|gm| g <= gm)
    }

    /// Whether `(x, y)` lies in the box and passes its filters.
    pub fn contains(&self, x: &BigUint, y: &BigUint) -> bool {
        let (Some(xs), Some(ys)) = (x.to_u64(), y.to_u64()) else {
            return false;
        };
        if xs == 0 || ys == 0 || xs > self.x_max || ys > self.y_max {
            return false;
        }
        !self.has_filter() || self.accepts_gcd(xs.gcd(&ys))
    }
}

/// `v^e` for `v = 0..=max`, as `u128` where it fits.
struct PowTable {
    small: Vec<Option<u128>>,
    exp: u32,
}

impl PowTable {
    fn new(max: u64, exp: u32, factor: Option<u128>) -> Self {
        let small = (0..=max)
            .map(|v| {
                let mut acc = factor?;
                for _ in 0..exp {
                    acc = acc.checked_mul(u128::from(v))?;
                }
                Some(acc)
            })
            .collect();
        Self { small, exp }
    }

    fn get(&self, v: u64) -> Option<u128> {
        self.small[v as usize]
    }
}

/// Every `(x, y)` in `b` with `x^n + y^m = c·x^k·y^l`, in lexicographic
/// order.
pub fn brute_force(p: &EquationParams, b: &SearchBox) -> Vec<(BigUint, BigUint)> {
    let c_small = p.c().to_u128();
    let xn = PowTable::new(b.x_max, p.n(), Some(1));
    let cxk = PowTable::new(b.x_max, p.k(), c_small);
    let ym = PowTable::new(b.y_max, p.m(), Some(1));
    let yl = PowTable::new(b.y_max, p.l(), Some(1));
    let filtered = b.has_filter();

    let mut out = Vec::new();
    for x in 1..=b.x_max {
        for y in 1..=b.y_max {
            if filtered && !b.accepts_gcd(x.gcd(&y)) {
                continue;
            }
            let fast = (|| {
                let lhs = xn.get(x)?.checked_add(ym.get(y)?)?;
                let rhs = cxk.get(x)?.checked_mul(yl.get(y)?)?;
                Some(lhs == rhs)
            })();
            let hit = match fast {
                Some(hit) => hit,
                None => {
                    let (xb, yb) = (BigUint::from(x), BigUint::from(y));
                    ipow(&xb, xn.exp) + ipow(&yb, ym.exp)
                        == p.c() * ipow(&xb, cxk.exp) * ipow(&yb, yl.exp)
                }
            };
            if hit {
                out.push((BigUint::from(x), BigUint::from(y)));
            }
        }
    }
    out
}

/// Discrepancies between a solver result and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrosscheckReport {
    /// The box actually searched: the requested box narrowed to the solver's
    /// declared scope for bounded results.
    pub effective_box: SearchBox,
    pub oracle_solutions: Vec<(BigUint, BigUint)>,
    /// Solver pairs (or diagonal members) inside the effective box.
    pub solver_in_box: usize,
    /// Claimed solutions that are not solutions.
    pub soundness_failures: Vec<(BigUint, BigUint)>,
    /// Oracle solutions the solver's completeness claim missed.
    pub completeness_failures: Vec<(BigUint, BigUint)>,
}

impl CrosscheckReport {
    pub fn discrepancies(&self) -> usize {
        self.soundness_failures.len() + self.completeness_failures.len()
    }

    pub fn is_clean(&self) -> bool {
        self.discrepancies() == 0
    }
}

/// Compares `s` (computed for `p`, in `p`'s orientation) with
/// [`brute_force`] over `b`.
///
/// Soundness: every listed pair must solve the equation, and for the diagonal
/// family every `(d, d)` in the box must. Completeness: every oracle pair must
/// belong to `s`; for bounded results the box is first narrowed to the
/// declared gcd bound and window, so the check applies to every kind.
pub fn crosscheck(p: &EquationParams, b: &SearchBox, s: &SolutionSet) -> CrosscheckReport {
    let mut eff = *b;
    if let Some(bound) = s.bound {
        eff.gcd_max = Some(eff.gcd_max.map_or(bound.gcd_max, |g| g.min(bound.gcd_max)));
        if let Some((wx, wy)) = bound.window {
            eff.x_max = eff.x_max.min(wx);
            eff.y_max = eff.y_max.min(wy);
        }
    }

    let oracle = brute_force(p, &eff);
    let in_oracle = |x: &BigUint, y: &BigUint| {
        oracle
            .binary_search_by(|(ox, oy)| (ox, oy).cmp(&(x, y)))
            .is_ok()
    };

    let mut soundness = Vec::new();
    let mut solver_in_box = 0;
    if s.kind == SolutionKind::ParametricDiagonal {
        for d in 1..=eff.x_max.min(eff.y_max) {
            let d = BigUint::from(d);
            if !eff.contains(&d, &d) {
                continue;
            }
            solver_in_box += 1;
            if !in_oracle(&d, &d) {
                soundness.push((d.clone(), d));
            }
        }
    } else {
        for (x, y) in s.pairs() {
            let inside = eff.contains(x, y);
            solver_in_box += usize::from(inside);
            let ok = if inside {
                in_oracle(x, y)
            } else {
                p.is_solution(x, y)
            };
            if !ok || x.is_zero() || y.is_zero() {
                soundness.push((x.clone(), y.clone()));
            }
        }
    }

    let completeness = oracle
        .iter()
        .filter(|(x, y)| !s.contains(x, y))
        .cloned()
        .collect();

    CrosscheckReport {
        effective_box: eff,
        oracle_solutions: oracle,
        solver_in_box,
        soundness_failures: soundness,
        completeness_failures: completeness,
    }
}
