use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::witness::Witness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolutionKind {
    /// Certified: there are no solutions.
    Empty,
    /// Certified: `solutions` is the complete solution set.
    Finite,
    /// Certified: the solutions are exactly `(d, d)` for every `d >= 1`.
    ParametricDiagonal,
    /// `solutions` is complete only within the attached [`GcdBound`].
    BoundedIncomplete,
}

impl SolutionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SolutionKind::Empty => "empty",
            SolutionKind::Finite => "finite_certified",
            SolutionKind::ParametricDiagonal => "parametric_diagonal",
            SolutionKind::BoundedIncomplete => "bounded_incomplete",
        }
    }

    pub fn is_certified(self) -> bool {
        !matches!(self, SolutionKind::BoundedIncomplete)
    }
}

impl fmt::Display for SolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Completeness scope of a bounded result: every solution with
/// `gcd(x, y) <= gcd_max` (and inside `window`, when present) is listed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GcdBound {
    pub gcd_max: u64,
    /// `(x_max, y_max)`
    pub window: Option<(u64, u64)>,
}

impl GcdBound {
    fn mirrored(self) -> Self {
        Self {
            gcd_max: self.gcd_max,
            window: self.window.map(|(x, y)| (y, x)),
        }
    }
}

/// Which solver produced a set, and which branch of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Provenance {
    /// `"case1"` .. `"case8"`, `"coprime"` or `"fallback"`.
    pub source: &'static str,
    pub clause: &'static str,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.source, self.clause)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub x: BigUint,
    pub y: BigUint,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub kind: SolutionKind,
    /// Sorted by `(x, y)`, no duplicates. Empty for `Empty` and
    /// `ParametricDiagonal`.
    pub solutions: Vec<Solution>,
    /// Present exactly for `BoundedIncomplete`.
    pub bound: Option<GcdBound>,
    pub provenance: Provenance,
}

impl SolutionSet {
    pub fn empty(provenance: Provenance) -> Self {
        Self {
            kind: SolutionKind::Empty,
            solutions: Vec::new(),
            bound: None,
            provenance,
        }
    }

    pub fn diagonal(provenance: Provenance) -> Self {
        Self {
            kind: SolutionKind::ParametricDiagonal,
            solutions: Vec::new(),
            bound: None,
            provenance,
        }
    }

    /// A certified finite set; collapses to `Empty` when nothing was found.
    pub fn finite(solutions: Vec<Solution>, provenance: Provenance) -> Self {
        let solutions = normalize(solutions);
        let kind = if solutions.is_empty() {
            SolutionKind::Empty
        } else {
            SolutionKind::Finite
        };
        Self {
            kind,
            solutions,
            bound: None,
            provenance,
        }
    }

    pub fn bounded(solutions: Vec<Solution>, bound: GcdBound, provenance: Provenance) -> Self {
        Self {
            kind: SolutionKind::BoundedIncomplete,
            solutions: normalize(solutions),
            bound: Some(bound),
            provenance,
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&BigUint, &BigUint)> {
        self.solutions.iter().map(|s| (&s.x, &s.y))
    }

    /// Whether `(x, y)` belongs to the set. For the diagonal family this is
    /// `x == y`; for the other kinds it is list membership.
    pub fn contains(&self, x: &BigUint, y: &BigUint) -> bool {
        match self.kind {
            SolutionKind::ParametricDiagonal => x == y,
            _ => self
                .solutions
                .binary_search_by(|s| (&s.x, &s.y).cmp(&(x, y)))
                .is_ok(),
        }
    }

    /// The same set with `x` and `y` exchanged in every pair. Witnesses are
    /// left in the orientation they were produced in.
    pub fn mirrored(self) -> Self {
        let solutions = self
            .solutions
            .into_iter()
            .map(|s| Solution {
                x: s.y,
                y: s.x,
                witness: s.witness,
            })
            .collect();
        Self {
            kind: self.kind,
            solutions: normalize(solutions),
            bound: self.bound.map(GcdBound::mirrored),
            provenance: self.provenance,
        }
    }
}

/// Lexicographic sort; for repeated pairs the first witness is kept.
fn normalize(mut solutions: Vec<Solution>) -> Vec<Solution> {
    solutions.sort_by(|a, b| (&a.x, &a.y).cmp(&(&b.x, &b.y)));
    solutions.dedup_by(|later, earlier| later.x == earlier.x && later.y == earlier.y);
    solutions
}
