//! Case classification and the `x <-> y` symmetry.
//!
//! Orderings are decided by comparing `n`, `m` and `k + l`. Every ordering
//! except Case 6 is solved in the orientation `n <= m`; Case 6 is solved in
//! the orientation `m < n = k + l`, where its solution set is described.

use core::fmt;

use crate::params::EquationParams;
use crate::solution::SolutionSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    /// `n = m = k + l`
    Case1,
    /// `n < m < k + l`
    Case2,
    /// `k + l < n < m`
    Case3,
    /// `n < k + l < m`
    Case4,
    /// `n = k + l < m`
    Case5,
    /// `m < n = k + l` (canonical orientation)
    Case6,
    /// `n = m < k + l`
    Case7,
    /// `k + l < n = m`
    Case8,
}

impl CaseId {
    pub const ALL: [CaseId; 8] = [
        CaseId::Case1,
        CaseId::Case2,
        CaseId::Case3,
        CaseId::Case4,
        CaseId::Case5,
        CaseId::Case6,
        CaseId::Case7,
        CaseId::Case8,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::Case1 => "Case1",
            CaseId::Case2 => "Case2",
            CaseId::Case3 => "Case3",
            CaseId::Case4 => "Case4",
            CaseId::Case5 => "Case5",
            CaseId::Case6 => "Case6",
            CaseId::Case7 => "Case7",
            CaseId::Case8 => "Case8",
        }
    }

    /// Whether canonical parameters satisfy this case's defining ordering.
    pub fn holds_for(self, p: &EquationParams) -> bool {
        let (n, m, s) = (u64::from(p.n()), u64::from(p.m()), p.kl());
        match self {
            CaseId::Case1 => n == m && m == s,
            CaseId::Case2 => n < m && m < s,
            CaseId::Case3 => s < n && n < m,
            CaseId::Case4 => n < s && s < m,
            CaseId::Case5 => n == s && s < m,
            CaseId::Case6 => m < n && n == s,
            CaseId::Case7 => n == m && m < s,
            CaseId::Case8 => s < n && n == m,
        }
    }

    /// Side condition under which the case solver applies, evaluated on canonical
    /// parameters. Only Cases 2, 4 and 6 have one.
    pub fn hypothesis_holds(self, p: &EquationParams) -> bool {
        match self {
            CaseId::Case2 | CaseId::Case4 => p.n() <= p.k(),
            CaseId::Case6 => p.m() <= p.l(),
            _ => true,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseClassification {
    pub case: CaseId,
    /// `canonical` is the input with `x` and `y` exchanged.
    pub swapped: bool,
    pub hypothesis_met: bool,
    pub canonical: EquationParams,
}

pub fn classify(p: &EquationParams) -> CaseClassification {
    let (n, m, s) = (u64::from(p.n()), u64::from(p.m()), p.kl());
    let (lo, hi) = (n.min(m), n.max(m));

    let (case, want_n_larger) = if n == m {
        let case = match s.cmp(&n) {
            core::cmp::Ordering::Equal => CaseId::Case1,
            core::cmp::Ordering::Greater => CaseId::Case7,
            core::cmp::Ordering::Less => CaseId::Case8,
        };
        (case, None)
    } else if s > hi {
        (CaseId::Case2, Some(false))
    } else if s == hi {
        (CaseId::Case6, Some(true))
    } else if s > lo {
        (CaseId::Case4, Some(false))
    } else if s == lo {
        (CaseId::Case5, Some(false))
    } else {
        (CaseId::Case3, Some(false))
    };

    let swapped = match want_n_larger {
        None => false,
        Some(true) => n < m,
        Some(false) => n > m,
    };
    let canonical = if swapped { p.swapped() } else { p.clone() };
    debug_assert!(case.holds_for(&canonical));
    CaseClassification {
        case,
        swapped,
        hypothesis_met: case.hypothesis_holds(&canonical),
        canonical,
    }
}

/// Maps a solution set computed in canonical coordinates back to the caller's
/// orientation.
pub fn unswap_solutions(s: SolutionSet, swapped: bool) -> SolutionSet {
    if swapped {
        s.mirrored()
    } else {
        s
    }
}
