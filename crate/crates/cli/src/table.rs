//! Fixed-width text rendering for the human-readable output.

use std::fmt::Write;

use crate::report::{BruteReport, InstanceReport, PowerEqReport, SummaryLine, WitnessJson};

/// Left-aligned text columns separated by two spaces; numeric-looking cells
/// are right-aligned.
pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Self {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<S: Into<String>>(&mut self, cells: impl IntoIterator<Item = S>) {
        self.rows.push(cells.into_iter().map(Into::into).collect());
    }

    pub fn render(&self) -> String {
        let cols = self.headers.len();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (i, cell) in r.iter().enumerate().take(cols) {
                widths[i] = widths[i].max(cell.chars().count());
            }
        }
        let numeric: Vec<bool> = (0..cols)
            .map(|i| {
                !self.rows.is_empty()
                    && self.rows.iter().all(|r| {
                        r.get(i)
                            .is_some_and(|c| !c.is_empty() && c.bytes().all(|b| b.is_ascii_digit()))
                    })
            })
            .collect();

        let mut out = String::new();
        let mut line = |cells: &[String]| {
            let mut s = String::new();
            for (i, w) in widths.iter().enumerate() {
                let cell = cells.get(i).map_or("", String::as_str);
                let pad = w - cell.chars().count();
                if i > 0 {
                    s.push_str("  ");
                }
                if numeric[i] {
                    s.extend(std::iter::repeat_n(' ', pad));
                    s.push_str(cell);
                } else {
                    s.push_str(cell);
                    s.extend(std::iter::repeat_n(' ', pad));
                }
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        line(&self.headers);
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        line(&rule);
        for r in &self.rows {
            line(r);
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn witness_cell(w: &WitnessJson) -> String {
    let mut s = format!("{}:", w.rule);
    for (k, v) in &w.bindings {
        let _ = write!(s, " {k}={v}");
    }
    s
}

fn equation(r: &crate::report::ParamsJson) -> String {
    format!("x^{} + y^{} = {}·x^{}·y^{}", r.n, r.m, r.c, r.k, r.l)
}

pub fn instance(r: &InstanceReport) -> String {
    let mut info = Table::new(["field", "value"]);
    info.row(["equation".to_string(), equation(&r.params)]);
    info.row(["case", r.case]);
    info.row(["swapped", yes_no(r.swapped)]);
    info.row(["hypothesis met", yes_no(r.hypothesis_met)]);
    info.row(["kind", r.kind]);
    info.row([
        "provenance".to_string(),
        format!("{}/{}", r.provenance.source, r.provenance.clause),
    ]);
    if let Some(b) = &r.bound {
        let window = b.window.as_ref().map_or(String::new(), |w| {
            format!(", x ≤ {}, y ≤ {}", w.x_max, w.y_max)
        });
        info.row([
            "complete for".to_string(),
            format!("gcd(x, y) ≤ {}{window}", b.gcd_max),
        ]);
    }
    if let Some(c) = &r.crosscheck {
        info.row([
            "oracle box".to_string(),
            format!("{} x {}", c.search_box.x_max, c.search_box.y_max),
        ]);
        if let Some(g) = &c.search_box.gcd_max {
            info.row(["oracle gcd max", g.as_str()]);
        }
        info.row(["oracle solutions", c.oracle_solutions.as_str()]);
        info.row(["solver in box", c.solver_in_box.as_str()]);
        info.row(["soundness failures", c.soundness.as_str()]);
        info.row(["completeness failures", c.completeness.as_str()]);
    }
    info.row(["elapsed (us)", r.elapsed_us.as_str()]);

    let mut out = info.render();
    out.push('\n');
    if r.kind == "parametric_diagonal" {
        out.push_str("solutions: (d, d) for every d ≥ 1\n");
    } else if r.solutions.is_empty() {
        out.push_str("solutions: none\n");
    } else {
        let mut t = Table::new(["x", "y", "witness"]);
        for s in &r.solutions {
            t.row([s.x.clone(), s.y.clone(), witness_cell(&s.witness)]);
        }
        out.push_str(&t.render());
    }
    if let Some(c) = &r.crosscheck {
        for (label, list) in [
            ("soundness", &c.soundness_failures),
            ("completeness", &c.completeness_failures),
        ] {
            for p in list {
                let _ = writeln!(out, "{label} failure: ({}, {})", p.x, p.y);
            }
        }
    }
    out
}

pub fn brute(r: &BruteReport) -> String {
    let b = &r.search_box;
    let mut out = format!(
        "{}  over 1 ≤ x ≤ {}, 1 ≤ y ≤ {}",
        equation(&r.params),
        b.x_max,
        b.y_max
    );
    if b.coprime {
        out.push_str(", gcd(x, y) = 1");
    }
    if let Some(g) = &b.gcd_max {
        let _ = write!(out, ", gcd(x, y) ≤ {g}");
    }
    out.push_str("\n\n");
    if r.solutions.is_empty() {
        out.push_str("solutions: none\n");
    } else {
        let mut t = Table::new(["x", "y"]);
        for p in &r.solutions {
            t.row([p.x.as_str(), p.y.as_str()]);
        }
        out.push_str(&t.render());
    }
    out
}

pub fn power_eq(r: &PowerEqReport) -> String {
    let mut out = format!(
        "x^{} = y^{}  d = {}  a1 = {}  b1 = {}  family (x, y) = ({}, {})\n\n",
        r.a, r.b, r.d, r.a1, r.b1, r.family[0], r.family[1]
    );
    let mut t = Table::new(["t", "x", "y"]);
    for s in &r.solutions {
        t.row([s.t.as_str(), s.x.as_str(), s.y.as_str()]);
    }
    out.push_str(&t.render());
    out
}

pub fn summary(s: &SummaryLine) -> String {
    let s = &s.summary;
    let mut t = Table::new(["total", "count"]);
    for (k, v) in [
        ("instances", &s.instances),
        ("certified", &s.certified),
        ("bounded", &s.bounded),
        ("defective", &s.defective),
        ("discrepancies", &s.discrepancies),
    ] {
        t.row([k, v.as_str()]);
    }
    for (k, v) in s.kinds.iter().chain(&s.cases) {
        t.row([*k, v.as_str()]);
    }
    t.row(["elapsed (ms)", s.elapsed_ms.as_str()]);
    t.render()
}
