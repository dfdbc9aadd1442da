//! One solver per case, plus [`solve`], which classifies and dispatches.
//!
//! Every per-case solver expects canonical parameters (see
//! [`classify`](crate::classify::classify)) and rejects inputs outside its
//! case with [`SolveError::Precondition`]. Solutions are emitted in canonical
//! orientation; [`solve`] mirrors them back when the classification swapped.
//!
//! All of them work on the gcd split `x = d·x1`, `y = d·y1`, `gcd(x1, y1) = 1`:
//! comparing the powers of `d` on both sides of the equation forces `x1` or
//! `y1` (often both) to be 1 and turns the rest into divisibility conditions
//! on `d` that can be enumerated exactly.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::classify::{classify, unswap_solutions, CaseClassification, CaseId};
use crate::integer::{
    coprime, divisors, exact_log, factorize, gcd, ipow, lcm_u32, perfect_root, root_floor,
};
use crate::oracle::{brute_force, SearchBox};
use crate::params::EquationParams;
use crate::solution::{GcdBound, Provenance, Solution, SolutionSet};
use crate::witness::{Symbol, Witness, WitnessRule};

/// Default gcd bound for bounded and fallback searches.
pub const DEFAULT_BOUND: u64 = 200;

/// Exponent tuples `(n, m, k, l)` of Case 4 whose solution set is known in
/// closed form: `{(1, 1)}` when `c = 2`, empty otherwise.
pub const CASE4_CLOSED_FORMS: [(u32, u32, u32, u32); 2] = [(2, 6, 2, 2), (2, 6, 3, 1)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// A per-case solver was called outside its case or side condition.
    Precondition {
        case: CaseId,
        reason: &'static str,
    },
    ZeroBound,
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::Precondition { case, reason } => {
                write!(f, "{case} solver precondition violated: {reason}")
            }
            SolveError::ZeroBound => f.write_str("bound must be ≥ 1"),
        }
    }
}

impl core::error::Error for SolveError {}

fn prov(source: &'static str, clause: &'static str) -> Provenance {
    Provenance { source, clause }
}

fn two() -> BigUint {
    BigUint::from(2u32)
}

fn require(p: &EquationParams, case: CaseId, with_hypothesis: bool) -> Result<(), SolveError> {
    if !case.holds_for(p) {
        return Err(SolveError::Precondition {
            case,
            reason: "parameters are not in this case's canonical ordering",
        });
    }
    if with_hypothesis && !case.hypothesis_holds(p) {
        let reason = match case {
            CaseId::Case6 => "requires m ≤ l",
            _ => "requires n ≤ k",
        };
        return Err(SolveError::Precondition { case, reason });
    }
    Ok(())
}

fn solution(
    rule: WitnessRule,
    d: BigUint,
    x1: BigUint,
    y1: BigUint,
) -> (BigUint, BigUint, Witness) {
    let x = &d * &x1;
    let y = &d * &y1;
    (x, y, Witness::split(rule, d, x1, y1))
}

fn finish(found: Vec<(BigUint, BigUint, Witness)>, provenance: Provenance) -> SolutionSet {
    let solutions = found
        .into_iter()
        .map(|(x, y, witness)| Solution { x, y, witness })
        .collect();
    SolutionSet::finite(solutions, provenance)
}

/// Solutions with `gcd(x, y) = 1`, for any exponents: `{(1, 1)}` iff `c = 2`.
pub fn solve_coprime(p: &EquationParams) -> SolutionSet {
    if *p.c() == two() {
        let one = BigUint::one();
        let sol = solution(WitnessRule::Coprime, one.clone(), one.clone(), one);
        finish(vec![sol], prov("coprime", "c=2"))
    } else {
        SolutionSet::empty(prov("coprime", "c≠2"))
    }
}

/// `n = m = k + l`: the diagonal `(d, d)` when `c = 2`, nothing otherwise.
pub fn solve_case1(p: &EquationParams) -> Result<SolutionSet, SolveError> {
    require(p, CaseId::Case1, false)?;
    Ok(if *p.c() == two() {
        SolutionSet::diagonal(prov("case1", "c=2"))
    } else {
        SolutionSet::empty(prov("case1", "c≠2"))
    })
}

/// `n < m < k + l` with `n <= k`: `{(1, 1)}` iff `c = 2`.
pub fn solve_case2(p: &EquationParams) -> Result<SolutionSet, SolveError> {
    require(p, CaseId::Case2, true)?;
    if *p.c() != two() {
        return Ok(SolutionSet::empty(prov("case2", "c≠2")));
    }
    let one = BigUint::one();
    let (x, y, w) = solution(
        WitnessRule::Case(CaseId::Case2),
        one.clone(),
        one.clone(),
        one,
    );
    let w = w
        .with(Symbol::T, 1u32)
        .with(Symbol::L, lcm_u32(p.n(), p.m() - p.n()));
    Ok(finish(vec![(x, y, w)], prov("case2", "c=2")))
}

/// `k + l < n < m`: finite and certified.
///
/// Solutions correspond to coprime `(x1, y1)` and positive `r, s` with
/// `d^(m-k-l) = r·x1^k`, `d^(n-k-l) = s·y1^l` and
/// `c = x1^(n-k)·s + y1^(m-l)·r`.
pub fn solve_case3(p: &EquationParams) -> Result<SolutionSet, SolveError> {
    require(p, CaseId::Case3, false)?;
    let (n, m, k, l) = (p.n(), p.m(), p.k(), p.l());
    let kl = k + l;
    let c = p.c();
    let mut found = Vec::new();

    let mut x1 = BigUint::one();
    loop {
        let xa = ipow(&x1, n - k);
        if xa >= *c {
            break;
        }
        let mut y1 = BigUint::one();
        loop {
            let yb = ipow(&y1, m - l);
            if &xa + &yb > *c {
                break;
            }
            if coprime(&x1, &y1) {
                let x1k = ipow(&x1, k);
                let y1l = ipow(&y1, l);
                let mut r = BigUint::one();
                while &yb * &r + &xa <= *c {
                    let rem = c - &yb * &r;
                    if (&rem % &xa).is_zero() {
                        let s = rem / &xa;
                        if let Some(d) = perfect_root(&(&r * &x1k), m - kl) {
                            if ipow(&d, n - kl) == &s * &y1l {
                                let (x, y, mut w) = solution(
                                    WitnessRule::Case(CaseId::Case3),
                                    d.clone(),
                                    x1.clone(),
                                    y1.clone(),
                                );
                                w.bind(Symbol::SmallR, r.clone()).bind(Symbol::SmallS, s);
                                if x1.is_one() && y1.is_one() {
                                    w.bind(Symbol::Rho, d);
                                }
                                found.push((x, y, w));
                            }
                        }
                    }
                    r += 1u32;
                }
            }
            y1 += 1u32;
        }
        x1 += 1u32;
    }
    Ok(finish(found, prov("case3", "enumeration")))
}

/// `n < k + l < m` with `n <= k`.
///
/// Here `y1 = 1` and a pair `(d·x1, d)` is a solution iff
/// `x1^n + d^(m-n) = c·d^(k+l-n)·x1^k`, with `x1^n | d^(m-n)` and
/// `d^(k+l-n) | x1^n`. Finiteness is only known for [`CASE4_CLOSED_FORMS`];
/// otherwise the result is complete for `gcd(x, y) = d <= bound`.
pub fn solve_case4(p: &EquationParams, bound: u64) -> Result<SolutionSet, SolveError> {
    require(p, CaseId::Case4, true)?;
    if bound == 0 {
        return Err(SolveError::ZeroBound);
    }
    let (n, m, k, l) = (p.n(), p.m(), p.k(), p.l());
    let kl = k + l;
    let c = p.c();

    if CASE4_CLOSED_FORMS.contains(&(n, m, k, l)) {
        if *c != two() {
            return Ok(SolutionSet::empty(prov("case4", "closed-form c≠2")));
        }
        let one = BigUint::one();
        let (x, y, w) = solution(
            WitnessRule::Case(CaseId::Case4),
            one.clone(),
            one.clone(),
            one,
        );
        let w = w
            .with(Symbol::BigR, 1u32)
            .with(Symbol::BigS, 1u32)
            .with(Symbol::R1, 1u32)
            .with(Symbol::S1, 1u32);
        return Ok(finish(vec![(x, y, w)], prov("case4", "closed-form c=2")));
    }

    let (lo, hi) = (kl - n, m - n);
    let mut found = Vec::new();
    for d in 1..=bound {
        let d = BigUint::from(d);
        let d_hi = ipow(&d, hi);
        let d_lo = ipow(&d, lo);
        for x1 in case4_candidates(&d, n, lo, hi) {
            let x1n = ipow(&x1, n);
            if &x1n + &d_hi != c * &d_lo * ipow(&x1, k) {
                continue;
            }
            let big_r = &d_hi / &x1n;
            let big_s = &x1n / &d_lo;
            let (x, y, w) = solution(
                WitnessRule::Case(CaseId::Case4),
                d.clone(),
                x1,
                BigUint::one(),
            );
            found.push((x, y, w.with(Symbol::BigR, big_r).with(Symbol::BigS, big_s)));
        }
    }
    let solutions = found
        .into_iter()
        .map(|(x, y, witness)| Solution { x, y, witness })
        .collect();
    Ok(SolutionSet::bounded(
        solutions,
        GcdBound {
            gcd_max: bound,
            window: None,
        },
        prov("case4", "gcd-bounded enumeration"),
    ))
}

/// All `x1` with `d^lo | x1^n` and `x1^n | d^hi`: built prime by prime from
/// the factorization of `d`, with `lo·e <= n·a <= hi·e` for each `p^e || d`.
fn case4_candidates(d: &BigUint, n: u32, lo: u32, hi: u32) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for (prime, e) in factorize(d).factors() {
        let e = u64::from(*e);
        let (n, lo, hi) = (u64::from(n), u64::from(lo), u64::from(hi));
        let a_min = (lo * e).div_ceil(n);
        let a_max = hi * e / n;
        if a_min > a_max {
            return Vec::new();
        }
        let mut next = Vec::new();
        for base in &out {
            for a in a_min..=a_max {
                next.push(base * ipow(prime, a as u32));
            }
        }
        out = next;
    }
    out
}

/// `n = k + l < m`: finite and certified.
///
/// `c = 1` has no solutions. Otherwise `y1 = 1`, `x1^(n-k) + r = c` and
/// `d^(m-n) = r·x1^k`, with `x1` ranging up to the largest `M` such that
/// `M^(n-k) < c`.
pub fn solve_case5(p: &EquationParams) -> Result<SolutionSet, SolveError> {
    require(p, CaseId::Case5, false)?;
    let (n, m, k, l) = (p.n(), p.m(), p.k(), p.l());
    let c = p.c();
    if c.is_one() {
        return Ok(SolutionSet::empty(prov("case5", "c=1")));
    }
    let big_m = root_floor(&(c - 1u32), n - k);
    let mut found = Vec::new();
    let mut x1 = BigUint::one();
    while x1 <= big_m {
        let r = c - ipow(&x1, n - k);
        if let Some(d) = perfect_root(&(&r * ipow(&x1, k)), m - n) {
            let (x, y, mut w) = solution(
                WitnessRule::Case(CaseId::Case5),
                d.clone(),
                x1.clone(),
                BigUint::one(),
            );
            w.bind(Symbol::SmallR, r.clone())
                .bind(Symbol::M, big_m.clone());
            // c = 3, l = 1, m - n >= 2: the single solution has d a power of two.
            if *c == BigUint::from(3u32) && l == 1 && m - n >= 2 && x1 == two() {
                if let Some(rho) = exact_log(&d, 2).filter(|rho| *rho > 0) {
                    w.bind(Symbol::Rho, rho).bind(Symbol::V, m - n);
                }
            }
            found.push((x, y, w));
        }
        x1 += 1u32;
    }
    Ok(finish(found, prov("case5", "enumeration")))
}

/// `m < n = k + l` with `m <= l` (canonical orientation).
///
/// Here `x1 = 1` and `y1^m = d^(n-m)`, so `y1 = t^(L/m)` and
/// `d = t^(L/(n-m))` with `L = lcm(m, n - m)`.
pub fn solve_case6(p: &EquationParams) -> Result<SolutionSet, SolveError> {
    require(p, CaseId::Case6, true)?;
    let (n, m, l) = (p.n(), p.m(), p.l());
    let c = p.c();
    let dn = n - m;
    let big_l = lcm_u32(m, dn);
    let e1 = u64::from(big_l / m) * u64::from(dn);
    let e2 = u64::from(big_l);
    let e3 = u64::from(big_l) + u64::from(big_l / m) * u64::from(l);

    let emit = |t: u32| {
        let t = BigUint::from(t);
        let y1 = ipow(&t, big_l / m);
        let d = ipow(&t, big_l / dn);
        let (x, y, w) = solution(WitnessRule::Case(CaseId::Case6), d, BigUint::one(), y1);
        let w = w
            .with(Symbol::T, t)
            .with(Symbol::L, big_l)
            .with(Symbol::E1, e1)
            .with(Symbol::E2, e2)
            .with(Symbol::E3, e3);
        (x, y, w)
    };

    if *c == two() {
        Ok(finish(vec![emit(1)], prov("case6", "c=2")))
    } else if e1 == e2 && c.is_one() && e3 - e1 == 1 {
        Ok(finish(vec![emit(2)], prov("case6", "n=2m, c=1, e3-e1=1")))
    } else {
        Ok(SolutionSet::empty(prov("case6", "no solution")))
    }
}

/// `n = m < k + l`: `x1 = y1 = 1` and `2 = c·d^(k+l-n)`.
pub fn solve_case7(p: &EquationParams) -> Result<SolutionSet, SolveError> {
    require(p, CaseId::Case7, false)?;
    let excess = u64::from(p.k()) + u64::from(p.l()) - u64::from(p.n());
    let c = p.c();
    let d = if *c == two() {
        BigUint::one()
    } else if c.is_one() && excess == 1 {
        two()
    } else {
        return Ok(SolutionSet::empty(prov("case7", "no solution")));
    };
    let clause = if d.is_one() { "c=2" } else { "c=1, k+l=n+1" };
    let sol = solution(
        WitnessRule::Case(CaseId::Case7),
        d,
        BigUint::one(),
        BigUint::one(),
    );
    Ok(finish(vec![sol], prov("case7", clause)))
}

/// `k + l < n = m`: finite and certified.
///
/// Solutions correspond to a divisor `r` of `c` and coprime `(x1, y1)` with
/// `x1^n + y1^n = c / r` and `d^(n-k-l) = r·x1^k·y1^l`. The search visits
/// about `c^(1/n)` values of `x1` per divisor, so it suits moderate `c` only.
pub fn solve_case8(p: &EquationParams) -> Result<SolutionSet, SolveError> {
    require(p, CaseId::Case8, false)?;
    let (n, k, l) = (p.n(), p.k(), p.l());
    let kl = k + l;
    let c = p.c();
    let mut found = Vec::new();
    for r in divisors(c) {
        let target = c / &r;
        if target < two() {
            continue;
        }
        let mut x1 = BigUint::one();
        loop {
            let x1n = ipow(&x1, n);
            if x1n >= target {
                break;
            }
            if let Some(y1) = perfect_root(&(&target - &x1n), n) {
                if coprime(&x1, &y1) {
                    let v = &r * ipow(&x1, k) * ipow(&y1, l);
                    if let Some(d) = perfect_root(&v, n - kl) {
                        let (x, y, w) =
                            solution(WitnessRule::Case(CaseId::Case8), d, x1.clone(), y1);
                        found.push((x, y, w.with(Symbol::SmallR, r.clone())));
                    }
                }
            }
            x1 += 1u32;
        }
    }
    Ok(finish(found, prov("case8", "enumeration")))
}

/// Exhaustive search in the window `[1, bound]²`, used where no
/// characterization applies (Case 2 with `n > k`, Case 6 with `m > l`).
pub fn solve_fallback(p: &EquationParams, bound: u64) -> Result<SolutionSet, SolveError> {
    if bound == 0 {
        return Err(SolveError::ZeroBound);
    }
    let search = SearchBox {
        x_max: bound,
        y_max: bound,
        coprime_only: false,
        gcd_max: Some(bound),
    };
    let solutions = brute_force(p, &search)
        .into_iter()
        .map(|(x, y)| {
            let d = gcd(&x, &y);
            let witness = Witness::split(WitnessRule::Fallback, d.clone(), &x / &d, &y / &d);
            Solution { x, y, witness }
        })
        .collect();
    Ok(SolutionSet::bounded(
        solutions,
        GcdBound {
            gcd_max: bound,
            window: Some((bound, bound)),
        },
        prov("fallback", "exhaustive window"),
    ))
}

/// Classifies `p`, runs the matching solver in canonical coordinates and maps
/// the result back to the caller's orientation.
pub fn solve(
    p: &EquationParams,
    bound: u64,
) -> Result<(CaseClassification, SolutionSet), SolveError> {
    if bound == 0 {
        return Err(SolveError::ZeroBound);
    }
    let cls = classify(p);
    let q = &cls.canonical;
    let set = if !cls.hypothesis_met {
        solve_fallback(q, bound)?
    } else {
        match cls.case {
            CaseId::Case1 => solve_case1(q)?,
            CaseId::Case2 => solve_case2(q)?,
            CaseId::Case3 => solve_case3(q)?,
            CaseId::Case4 => solve_case4(q, bound)?,
            CaseId::Case5 => solve_case5(q)?,
            CaseId::Case6 => solve_case6(q)?,
            CaseId::Case7 => solve_case7(q)?,
            CaseId::Case8 => solve_case8(q)?,
        }
    };
    let swapped = cls.swapped;
    Ok((cls, unswap_solutions(set, swapped)))
}

/// `(x, y)` pairs of a set as `u64`, for tests and small reports.
pub fn small_pairs(s: &SolutionSet) -> Vec<(u64, u64)> {
    s.pairs()
        .filter_map(|(x, y)| Some((x.to_u64()?, y.to_u64()?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::SolutionKind;
    use crate::witness::validate_witness;

    fn params(n: u32, m: u32, k: u32, l: u32, c: u32) -> EquationParams {
        EquationParams::new(n, m, k, l, c).unwrap()
    }

    fn run(n: u32, m: u32, k: u32, l: u32, c: u32) -> SolutionSet {
        let p = params(n, m, k, l, c);
        let (cls, set) = solve(&p, DEFAULT_BOUND).unwrap();
        for s in &set.solutions {
            assert!(p.is_solution(&s.x, &s.y));
            assert!(
                validate_witness(&p, &s.x, &s.y, &s.witness, cls.case),
                "{p}: {:?}",
                s
            );
        }
        set
    }

    #[test]
    fn coprime_solver() {
        assert_eq!(
            small_pairs(&solve_coprime(&params(3, 5, 1, 2, 2))),
            [(1, 1)]
        );
        assert_eq!(
            solve_coprime(&params(3, 5, 1, 2, 5)).kind,
            SolutionKind::Empty
        );
        let p = params(1, 1, 1, 1, 2);
        let s = solve_coprime(&p);
        assert!(p.is_solution(&s.solutions[0].x, &s.solutions[0].y));
    }

    #[test]
    fn case1_examples() {
        let s = solve_case1(&params(2, 2, 1, 1, 2)).unwrap();
        assert_eq!(s.kind, SolutionKind::ParametricDiagonal);
        assert!(params(2, 2, 1, 1, 2).is_solution(&3u32.into(), &3u32.into()));
        assert_eq!(
            solve_case1(&params(2, 2, 1, 1, 3)).unwrap().kind,
            SolutionKind::Empty
        );
        assert_eq!(
            solve_case1(&params(3, 3, 2, 1, 2)).unwrap().kind,
            SolutionKind::ParametricDiagonal
        );
        assert!(solve_case1(&params(2, 3, 1, 1, 2)).is_err());
    }

    #[test]
    fn case2_examples() {
        assert_eq!(
            small_pairs(&solve_case2(&params(1, 2, 1, 2, 2)).unwrap()),
            [(1, 1)]
        );
        assert_eq!(
            solve_case2(&params(1, 2, 1, 2, 3)).unwrap().kind,
            SolutionKind::Empty
        );
        assert_eq!(
            solve_case2(&params(2, 3, 2, 2, 7)).unwrap().kind,
            SolutionKind::Empty
        );
        assert!(matches!(
            solve_case2(&params(2, 3, 1, 3, 2)),
            Err(SolveError::Precondition {
                case: CaseId::Case2,
                ..
            })
        ));
    }

    #[test]
    fn case3_examples() {
        assert!(small_pairs(&run(3, 4, 1, 1, 6)).contains(&(2, 2)));
        assert_eq!(run(3, 4, 1, 1, 5).kind, SolutionKind::Empty);
        assert_eq!(small_pairs(&run(3, 4, 1, 1, 2)), [(1, 1)]);
    }

    #[test]
    fn case3_off_diagonal_solutions() {
        // (4, 2) = 2·(2, 1) with r = 4, s = 2: c = 2^2·2 + 1^4·4
        assert_eq!(small_pairs(&run(3, 5, 1, 1, 12)), [(4, 2)]);
        assert_eq!(small_pairs(&run(4, 5, 2, 1, 9)), [(4, 2)]);
        // rho = 3 on the diagonal: 3^2 + 3 = 12
        assert_eq!(small_pairs(&run(3, 4, 1, 1, 12)), [(3, 3)]);
    }

    #[test]
    fn case4_examples() {
        let s = solve_case4(&params(2, 6, 2, 2, 2), DEFAULT_BOUND).unwrap();
        assert_eq!(
            (s.kind, small_pairs(&s)),
            (SolutionKind::Finite, vec![(1, 1)])
        );
        assert_eq!(
            solve_case4(&params(2, 6, 3, 1, 5), DEFAULT_BOUND)
                .unwrap()
                .kind,
            SolutionKind::Empty
        );

        let s = solve_case4(&params(2, 5, 2, 1, 2), 50).unwrap();
        assert_eq!(s.kind, SolutionKind::BoundedIncomplete);
        let first = &s.solutions[0];
        assert_eq!(
            (first.x.clone(), first.y.clone()),
            (1u32.into(), 1u32.into())
        );
        assert_eq!(first.witness.get(Symbol::BigR), Some(&1u32.into()));
        assert_eq!(first.witness.get(Symbol::BigS), Some(&1u32.into()));
        assert_eq!(first.witness.get(Symbol::D), Some(&1u32.into()));
    }

    #[test]
    fn case4_candidates_match_scan() {
        for d in 1u32..=60 {
            for (n, lo, hi) in [(1, 1, 3), (2, 1, 3), (2, 2, 4), (3, 1, 2)] {
                let db = BigUint::from(d);
                let mut fast = case4_candidates(&db, n, lo, hi);
                fast.sort();
                let (dlo, dhi) = (ipow(&db, lo), ipow(&db, hi));
                let slow: Vec<BigUint> = (1u64..)
                    .map(BigUint::from)
                    .take_while(|x1| ipow(x1, n) <= dhi)
                    .filter(|x1| {
                        let x1n = ipow(x1, n);
                        (&dhi % &x1n).is_zero() && (&x1n % &dlo).is_zero()
                    })
                    .collect();
                assert_eq!(fast, slow, "d={d} n={n} lo={lo} hi={hi}");
            }
        }
    }

    #[test]
    fn case5_examples() {
        assert_eq!(small_pairs(&run(2, 3, 1, 1, 3)), [(2, 2), (4, 2)]);
        assert_eq!(small_pairs(&run(3, 4, 1, 2, 3)), [(2, 2)]);
        let s = run(3, 5, 2, 1, 3);
        assert_eq!(small_pairs(&s), [(4, 2)]);
        let w = &s.solutions[0].witness;
        assert_eq!(w.get(Symbol::Rho), Some(&1u32.into()));
        assert_eq!(w.get(Symbol::V), Some(&2u32.into()));
        for (n, m, k, l) in [(2, 3, 1, 1), (3, 5, 2, 1), (4, 9, 1, 3)] {
            assert_eq!(small_pairs(&run(n, m, k, l, 2)), [(1, 1)]);
        }
        assert_eq!(run(2, 3, 1, 1, 1).kind, SolutionKind::Empty);
    }

    #[test]
    fn case5_power_of_two_family() {
        // c = 3, l = 1, m - n = 1: (2, 2) and (2^(k+1), 2^k).
        for k in 1..=20u32 {
            let s = run(k + 1, k + 2, k, 1, 3);
            let two_k = ipow(&two(), k);
            let got: Vec<_> = s.pairs().map(|(x, y)| (x.clone(), y.clone())).collect();
            let mut want = vec![(two(), two()), (&two_k * 2u32, two_k)];
            want.sort();
            assert_eq!(got, want, "k={k}");
        }
    }

    #[test]
    fn case6_examples() {
        let s = solve_case6(&params(2, 1, 1, 1, 1)).unwrap();
        assert_eq!(small_pairs(&s), [(2, 4)]);
        assert_eq!(
            small_pairs(&solve_case6(&params(2, 1, 1, 1, 2)).unwrap()),
            [(1, 1)]
        );
        assert_eq!(
            solve_case6(&params(3, 1, 2, 1, 1)).unwrap().kind,
            SolutionKind::Empty
        );
        assert!(solve_case6(&params(3, 2, 2, 1, 1)).is_err());
    }

    #[test]
    fn case7_examples() {
        assert_eq!(
            small_pairs(&solve_case7(&params(2, 2, 2, 1, 1)).unwrap()),
            [(2, 2)]
        );
        assert_eq!(
            small_pairs(&solve_case7(&params(2, 2, 2, 1, 2)).unwrap()),
            [(1, 1)]
        );
        assert_eq!(
            solve_case7(&params(2, 2, 3, 2, 1)).unwrap().kind,
            SolutionKind::Empty
        );
    }

    #[test]
    fn case8_examples() {
        assert_eq!(small_pairs(&run(3, 3, 1, 1, 4)), [(2, 2)]);
        assert_eq!(small_pairs(&run(3, 3, 1, 1, 2)), [(1, 1)]);
        assert_eq!(run(3, 3, 1, 1, 7).kind, SolutionKind::Empty);
    }

    #[test]
    fn dispatch_examples() {
        assert_eq!(small_pairs(&run(3, 2, 1, 1, 3)), [(2, 2), (2, 4)]);
        assert_eq!(run(2, 2, 1, 1, 2).kind, SolutionKind::ParametricDiagonal);
        assert_eq!(run(2, 3, 2, 3, 4).kind, SolutionKind::Empty);
        assert_eq!(solve(&params(2, 2, 1, 1, 2), 0), Err(SolveError::ZeroBound));
    }

    #[test]
    fn fallback_when_hypothesis_fails() {
        let p = params(2, 3, 1, 3, 2);
        let (cls, s) = solve(&p, 30).unwrap();
        assert!(!cls.hypothesis_met);
        assert_eq!(s.kind, SolutionKind::BoundedIncomplete);
        assert_eq!(s.provenance.source, "fallback");
        assert_eq!(
            s.bound,
            Some(GcdBound {
                gcd_max: 30,
                window: Some((30, 30))
            })
        );
        for sol in &s.solutions {
            assert!(validate_witness(&p, &sol.x, &sol.y, &sol.witness, cls.case));
        }
    }
}
