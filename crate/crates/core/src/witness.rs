//! Per-solution certificates and their validator.
//!
//! A witness records the gcd split `x = d·x1`, `y = d·y1` of one solution
//! together with the auxiliary integers of the case characterization that
//! produced it. Bindings are expressed in the canonical orientation chosen by
//! [`classify`]; [`validate_witness`] re-orients the pair before checking.
//!
//! Symbols per rule (`?` marks optional bindings, checked when present):
//!
//! | rule      | bindings                                  |
//! |-----------|-------------------------------------------|
//! | coprime   | d x1 y1                                   |
//! | Case1     | d x1 y1                                   |
//! | Case2     | d x1 y1 t L                               |
//! | Case3     | d x1 y1 r s rho?                          |
//! | Case4     | d x1 y1 R S R1? S1?                       |
//! | Case5     | d x1 y1 r M? rho? v?                      |
//! | Case6     | d x1 y1 t L? e1? e2? e3?                  |
//! | Case7     | d x1 y1                                   |
//! | Case8     | d x1 y1 r                                 |
//! | fallback  | d x1 y1                                   |

use alloc::collections::BTreeMap;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::classify::{classify, CaseId};
use crate::integer::{coprime, ipow, lcm_u32};
use crate::params::EquationParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    D,
    X1,
    Y1,
    /// lower-case `r`
    SmallR,
    /// lower-case `s`
    SmallS,
    /// upper-case `R`
    BigR,
    /// upper-case `S`
    BigS,
    R1,
    S1,
    M,
    L,
    E1,
    E2,
    E3,
    Rho,
    V,
    T,
}

impl Symbol {
    pub const ALL: [Symbol; 17] = [
        Symbol::D,
        Symbol::X1,
        Symbol::Y1,
        Symbol::SmallR,
        Symbol::SmallS,
        Symbol::BigR,
        Symbol::BigS,
        Symbol::R1,
        Symbol::S1,
        Symbol::M,
        Symbol::L,
        Symbol::E1,
        Symbol::E2,
        Symbol::E3,
        Symbol::Rho,
        Symbol::V,
        Symbol::T,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Symbol::D => "d",
            Symbol::X1 => "x1",
            Symbol::Y1 => "y1",
            Symbol::SmallR => "r",
            Symbol::SmallS => "s",
            Symbol::BigR => "R",
            Symbol::BigS => "S",
            Symbol::R1 => "R1",
            Symbol::S1 => "S1",
            Symbol::M => "M",
            Symbol::L => "L",
            Symbol::E1 => "e1",
            Symbol::E2 => "e2",
            Symbol::E3 => "e3",
            Symbol::Rho => "rho",
            Symbol::V => "v",
            Symbol::T => "t",
        }
    }

    pub fn from_name(name: &str) -> Option<Symbol> {
        Symbol::ALL.into_iter().find(|s| s.as_str() == name)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which characterization a witness certifies against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessRule {
    /// `gcd(x, y) = 1`, which forces `x = y = 1`.
    Coprime,
    Case(CaseId),
    /// Plain gcd split of a pair found by exhaustive search.
    Fallback,
}

impl WitnessRule {
    pub fn name(self) -> &'static str {
        match self {
            WitnessRule::Coprime => "coprime",
            WitnessRule::Case(c) => c.as_str(),
            WitnessRule::Fallback => "fallback",
        }
    }

    fn required(self) -> &'static [Symbol] {
        use Symbol::*;
        match self {
            WitnessRule::Case(CaseId::Case2) => &[D, X1, Y1, T, L],
            WitnessRule::Case(CaseId::Case3) => &[D, X1, Y1, SmallR, SmallS],
            WitnessRule::Case(CaseId::Case4) => &[D, X1, Y1, BigR, BigS],
            WitnessRule::Case(CaseId::Case5) => &[D, X1, Y1, SmallR],
            WitnessRule::Case(CaseId::Case6) => &[D, X1, Y1, T],
            WitnessRule::Case(CaseId::Case8) => &[D, X1, Y1, SmallR],
            _ => &[D, X1, Y1],
        }
    }

    fn optional(self) -> &'static [Symbol] {
        use Symbol::*;
        match self {
            WitnessRule::Case(CaseId::Case3) => &[Rho],
            WitnessRule::Case(CaseId::Case4) => &[R1, S1],
            WitnessRule::Case(CaseId::Case5) => &[M, Rho, V],
            WitnessRule::Case(CaseId::Case6) => &[L, E1, E2, E3],
            _ => &[],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub rule: WitnessRule,
    bindings: BTreeMap<Symbol, BigUint>,
}

impl Witness {
    pub fn new(rule: WitnessRule) -> Self {
        Self {
            rule,
            bindings: BTreeMap::new(),
        }
    }

    /// Gcd split `(d, x1, y1)` under `rule`.
    pub fn split(rule: WitnessRule, d: BigUint, x1: BigUint, y1: BigUint) -> Self {
        let mut w = Self::new(rule);
        w.bind(Symbol::D, d)
            .bind(Symbol::X1, x1)
            .bind(Symbol::Y1, y1);
        w
    }

    pub fn bind(&mut self, symbol: Symbol, value: impl Into<BigUint>) -> &mut Self {
        self.bindings.insert(symbol, value.into());
        self
    }

    pub fn with(mut self, symbol: Symbol, value: impl Into<BigUint>) -> Self {
        self.bind(symbol, value);
        self
    }

    pub fn get(&self, symbol: Symbol) -> Option<&BigUint> {
        self.bindings.get(&symbol)
    }

    pub fn remove(&mut self, symbol: Symbol) -> Option<BigUint> {
        self.bindings.remove(&symbol)
    }

    pub fn bindings(&self) -> impl Iterator<Item = (Symbol, &BigUint)> {
        self.bindings.iter().map(|(s, v)| (*s, v))
    }
}

/// Re-checks one solution against its certificate.
///
/// `p` is the equation in the caller's orientation and `case` the case it is
/// expected to classify as. Returns `true` iff the witness is well-formed for
/// its rule, reconstructs `(x, y)` through `x = d·x1`, `y = d·y1` with
/// coprime `x1, y1`, every defining relation of the rule holds, and `(x, y)`
/// solves the equation.
pub fn validate_witness(
    p: &EquationParams,
    x: &BigUint,
    y: &BigUint,
    w: &Witness,
    case: CaseId,
) -> bool {
    let cls = classify(p);
    if cls.case != case {
        return false;
    }
    match w.rule {
        WitnessRule::Case(c) if c != case => return false,
        _ => {}
    }
    let (x, y) = if cls.swapped { (y, x) } else { (x, y) };
    check(&cls.canonical, x, y, w).is_some()
}

fn check(q: &EquationParams, x: &BigUint, y: &BigUint, w: &Witness) -> Option<()> {
    let required = w.rule.required();
    let optional = w.rule.optional();
    for (s, v) in w.bindings() {
        if !required.contains(&s) && !optional.contains(&s) {
            return None;
        }
        if v.is_zero() {
            return None;
        }
    }
    let get = |s: Symbol| w.get(s);
    for s in required {
        get(*s)?;
    }

    let d = get(Symbol::D)?;
    let x1 = get(Symbol::X1)?;
    let y1 = get(Symbol::Y1)?;
    ensure(*x == d * x1 && *y == d * y1)?;
    ensure(coprime(x1, y1))?;
    ensure(q.is_solution(x, y))?;

    let (n, m, k, l) = (q.n(), q.m(), q.k(), q.l());
    let c = q.c();
    let one = BigUint::one();
    match w.rule {
        WitnessRule::Fallback => {}
        WitnessRule::Coprime => {
            ensure(d.is_one() && x1.is_one() && y1.is_one())?;
        }
        WitnessRule::Case(CaseId::Case1) => {
            ensure(x1.is_one() && y1.is_one() && *c == BigUint::from(2u32))?;
        }
        WitnessRule::Case(CaseId::Case2) => {
            let (t, big_l) = (get(Symbol::T)?, get(Symbol::L)?);
            let dm = m - n;
            ensure(y1.is_one())?;
            ensure(ipow(x1, n) == ipow(d, dm))?;
            ensure(*big_l == BigUint::from(lcm_u32(n, dm)))?;
            let lv = big_l.to_u32()?;
            ensure(*x1 == ipow(t, lv / n) && *d == ipow(t, lv / dm))?;
        }
        WitnessRule::Case(CaseId::Case3) => {
            let (r, s) = (get(Symbol::SmallR)?, get(Symbol::SmallS)?);
            let kl = k + l;
            ensure(ipow(d, m - kl) == r * ipow(x1, k))?;
            ensure(ipow(d, n - kl) == s * ipow(y1, l))?;
            ensure(*c == ipow(x1, n - k) * s + ipow(y1, m - l) * r)?;
            if let Some(rho) = get(Symbol::Rho) {
                ensure(x1.is_one() && y1.is_one() && d == rho)?;
                ensure(*c == ipow(rho, m - kl) + ipow(rho, n - kl))?;
            }
        }
        WitnessRule::Case(CaseId::Case4) => {
            let (big_r, big_s) = (get(Symbol::BigR)?, get(Symbol::BigS)?);
            let kl = k + l;
            ensure(y1.is_one())?;
            ensure(ipow(d, m - kl) == big_r * big_s)?;
            ensure(ipow(x1, n) == ipow(d, kl - n) * big_s)?;
            ensure(big_s * (&one + big_r) == c * ipow(x1, k))?;
            ensure(ipow(d, m - n) == big_r * ipow(x1, n))?;
            match (get(Symbol::R1), get(Symbol::S1)) {
                (None, None) => {}
                (Some(r1), Some(s1)) => {
                    ensure(*big_r == r1 * r1 && *big_s == s1 * s1)?;
                    ensure(*d == r1 * s1 && *x1 == r1 * s1 * s1)?;
                }
                _ => return None,
            }
        }
        WitnessRule::Case(CaseId::Case5) => {
            let r = get(Symbol::SmallR)?;
            ensure(y1.is_one())?;
            ensure(ipow(x1, n - k) + r == *c)?;
            ensure(ipow(d, m - n) == r * ipow(x1, k))?;
            if let Some(big_m) = get(Symbol::M) {
                ensure(x1 <= big_m)?;
                ensure(ipow(big_m, n - k) < *c && ipow(&(big_m + 1u32), n - k) >= *c)?;
            }
            match (get(Symbol::Rho), get(Symbol::V)) {
                (None, None) => {}
                (Some(rho), Some(v)) => {
                    let rho_u = rho.to_u32()?;
                    let (kb, mb, nb, lb) = (
                        BigUint::from(k),
                        BigUint::from(m),
                        BigUint::from(n),
                        BigUint::from(l),
                    );
                    ensure(kb == rho * v)?;
                    ensure(mb == &lb + v * rho + v)?;
                    ensure(nb == rho * v + &lb)?;
                    ensure(*d == ipow(&BigUint::from(2u32), rho_u))?;
                    ensure(*x1 == BigUint::from(2u32) && r.is_one())?;
                }
                _ => return None,
            }
        }
        WitnessRule::Case(CaseId::Case6) => {
            let t = get(Symbol::T)?;
            let dn = n - m;
            let lv = lcm_u32(m, dn);
            ensure(x1.is_one())?;
            ensure(ipow(y1, m) == ipow(d, dn))?;
            ensure(*y1 == ipow(t, lv / m) && *d == ipow(t, lv / dn))?;
            let lb = BigUint::from(lv);
            let e1 = BigUint::from(lv / m) * dn;
            let e3 = &lb + BigUint::from(lv / m) * l;
            let expected = [
                (Symbol::L, &lb),
                (Symbol::E1, &e1),
                (Symbol::E2, &lb),
                (Symbol::E3, &e3),
            ];
            for (s, want) in expected {
                if let Some(v) = get(s) {
                    ensure(v == want)?;
                }
            }
        }
        WitnessRule::Case(CaseId::Case7) => {
            ensure(x1.is_one() && y1.is_one())?;
            let kl = k + l;
            ensure(c * ipow(d, kl - n) == BigUint::from(2u32))?;
        }
        WitnessRule::Case(CaseId::Case8) => {
            let r = get(Symbol::SmallR)?;
            let kl = k + l;
            ensure(ipow(d, n - kl) == ipow(x1, k) * ipow(y1, l) * r)?;
            ensure(r * (ipow(x1, n) + ipow(y1, n)) == *c)?;
        }
    }
    Some(())
}

fn ensure(cond: bool) -> Option<()> {
    cond.then_some(())
}
