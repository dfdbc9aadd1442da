//! JSON shapes for every subcommand.
//!
//! Integers are always decimal strings so the schema does not depend on
//! magnitude.

use std::collections::BTreeMap;
use std::time::Duration;

use dioph_core::power_eq::PowerEqParametrization;
use dioph_core::{
    BigUint, CaseClassification, CrosscheckReport, EquationParams, SearchBox, SolutionSet, Witness,
};
use serde::Serialize;

fn dec(v: impl ToString) -> String {
    v.to_string()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamsJson {
    pub n: String,
    pub m: String,
    pub k: String,
    pub l: String,
    pub c: String,
}

impl From<&EquationParams> for ParamsJson {
    fn from(p: &EquationParams) -> Self {
        Self {
            n: dec(p.n()),
            m: dec(p.m()),
            k: dec(p.k()),
            l: dec(p.l()),
            c: dec(p.c()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessJson {
    pub rule: &'static str,
    pub bindings: BTreeMap<&'static str, String>,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        Self {
            rule: w.rule.name(),
            bindings: w.bindings().map(|(s, v)| (s.as_str(), dec(v))).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairJson {
    pub x: String,
    pub y: String,
}

impl PairJson {
    pub fn new(x: &BigUint, y: &BigUint) -> Self {
        Self {
            x: dec(x),
            y: dec(y),
        }
    }
}

fn pairs(v: &[(BigUint, BigUint)]) -> Vec<PairJson> {
    v.iter().map(|(x, y)| PairJson::new(x, y)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolutionJson {
    pub x: String,
    pub y: String,
    pub witness: WitnessJson,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProvenanceJson {
    pub source: &'static str,
    pub clause: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WindowJson {
    pub x_max: String,
    pub y_max: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundJson {
    pub gcd_max: String,
    pub window: Option<WindowJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoxJson {
    pub x_max: String,
    pub y_max: String,
    pub coprime: bool,
    pub gcd_max: Option<String>,
}

impl From<&SearchBox> for BoxJson {
    fn from(b: &SearchBox) -> Self {
        Self {
            x_max: dec(b.x_max),
            y_max: dec(b.y_max),
            coprime: b.coprime_only,
            gcd_max: b.gcd_max.map(dec),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrosscheckJson {
    #[serde(rename = "box")]
    pub search_box: BoxJson,
    pub oracle_solutions: String,
    pub solver_in_box: String,
    pub soundness: String,
    pub completeness: String,
    pub soundness_failures: Vec<PairJson>,
    pub completeness_failures: Vec<PairJson>,
}

impl From<&CrosscheckReport> for CrosscheckJson {
    fn from(r: &CrosscheckReport) -> Self {
        Self {
            search_box: (&r.effective_box).into(),
            oracle_solutions: dec(r.oracle_solutions.len()),
            solver_in_box: dec(r.solver_in_box),
            soundness: dec(r.soundness_failures.len()),
            completeness: dec(r.completeness_failures.len()),
            soundness_failures: pairs(&r.soundness_failures),
            completeness_failures: pairs(&r.completeness_failures),
        }
    }
}

/// One solved (and optionally cross-checked) instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceReport {
    pub params: ParamsJson,
    pub case: &'static str,
    pub swapped: bool,
    pub hypothesis_met: bool,
    pub kind: &'static str,
    pub provenance: ProvenanceJson,
    pub bound: Option<BoundJson>,
    pub solutions: Vec<SolutionJson>,
    pub crosscheck: Option<CrosscheckJson>,
    pub elapsed_us: String,
}

impl InstanceReport {
    pub fn new(
        p: &EquationParams,
        cls: &CaseClassification,
        set: &SolutionSet,
        check: Option<&CrosscheckReport>,
        elapsed: Duration,
    ) -> Self {
        Self {
            params: p.into(),
            case: cls.case.as_str(),
            swapped: cls.swapped,
            hypothesis_met: cls.hypothesis_met,
            kind: set.kind.as_str(),
            provenance: ProvenanceJson {
                source: set.provenance.source,
                clause: set.provenance.clause,
            },
            bound: set.bound.map(|b| BoundJson {
                gcd_max: dec(b.gcd_max),
                window: b.window.map(|(x, y)| WindowJson {
                    x_max: dec(x),
                    y_max: dec(y),
                }),
            }),
            solutions: set
                .solutions
                .iter()
                .map(|s| SolutionJson {
                    x: dec(&s.x),
                    y: dec(&s.y),
                    witness: (&s.witness).into(),
                })
                .collect(),
            crosscheck: check.map(Into::into),
            elapsed_us: dec(elapsed.as_micros()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BruteReport {
    pub params: ParamsJson,
    #[serde(rename = "box")]
    pub search_box: BoxJson,
    pub solutions: Vec<PairJson>,
}

impl BruteReport {
    pub fn new(p: &EquationParams, b: &SearchBox, found: &[(BigUint, BigUint)]) -> Self {
        Self {
            params: p.into(),
            search_box: b.into(),
            solutions: pairs(found),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyMember {
    pub t: String,
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerEqReport {
    pub a: String,
    pub b: String,
    pub d: String,
    pub a1: String,
    pub b1: String,
    /// `(x, y)` as powers of `t`, e.g. `["t^3", "t^2"]`.
    pub family: [String; 2],
    pub solutions: Vec<FamilyMember>,
}

/// `t` or `t^e`.
pub fn t_power(e: u32) -> String {
    if e == 1 {
        "t".into()
    } else {
        format!("t^{e}")
    }
}

impl PowerEqReport {
    pub fn new(p: &PowerEqParametrization, t_max: u64) -> Self {
        Self {
            a: dec(p.a),
            b: dec(p.b),
            d: dec(p.d),
            a1: dec(p.a1),
            b1: dec(p.b1),
            family: [t_power(p.b1), t_power(p.a1)],
            solutions: (1..=t_max)
                .map(|t| {
                    let (x, y) = p.pair(&BigUint::from(t));
                    FamilyMember {
                        t: dec(t),
                        x: dec(x),
                        y: dec(y),
                    }
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SweepSummary {
    pub instances: String,
    pub certified: String,
    pub bounded: String,
    /// Instances with at least one discrepancy.
    pub defective: String,
    pub discrepancies: String,
    pub kinds: BTreeMap<&'static str, String>,
    pub cases: BTreeMap<&'static str, String>,
    pub elapsed_ms: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryLine {
    pub summary: SweepSummary,
}
