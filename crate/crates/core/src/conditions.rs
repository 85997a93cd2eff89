//! Ore-type and Dirac-type degree conditions with full violation reports.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{BipartiteDigraph, Side, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "k")]
pub enum ConditionSpec {
    /// `d⁺(u) + d⁻(v) ≥ a + k` for every non-adjacent ordered opposite-class pair (balanced only).
    AkStar(usize),
    /// As `AkStar` but over all non-adjacent ordered pairs, same-class pairs included.
    Ak(usize),
    /// `d⁺(u) + d⁻(v) > (a + b + 2) / 2` for every non-adjacent ordered opposite-class pair.
    StrictHalfSum,
    /// `δ⁺ ≥ (a + 2) / 2` and `δ⁻ ≥ (a + 2) / 2`.
    DiracBipartite,
}

impl ConditionSpec {
    pub fn name(&self) -> String {
        match self {
            ConditionSpec::AkStar(k) => format!("a{k}star"),
            ConditionSpec::Ak(k) => format!("a{k}"),
            ConditionSpec::StrictHalfSum => "strict-half".into(),
            ConditionSpec::DiracBipartite => "dirac".into(),
        }
    }
}

/// A threshold `doubled / 2`, compared either as `≥` or strictly as `>`.
///
/// Kept in doubled integer form so that half-integral bounds compare exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold {
    pub doubled: i64,
    pub strict: bool,
}

impl Threshold {
    pub fn at_least(value: usize) -> Self {
        Threshold { doubled: 2 * value as i64, strict: false }
    }

    pub fn is_met_by(&self, sum: usize) -> bool {
        let twice = 2 * sum as i64;
        if self.strict {
            twice > self.doubled
        } else {
            twice >= self.doubled
        }
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl Serialize for Threshold {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: Vertex,
    pub v: Vertex,
    pub sum: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: ConditionSpec,
    pub holds: bool,
    pub threshold: Threshold,
    pub violations: Vec<Violation>,
}

struct DegreeTable {
    out: Vec<usize>,
    in_: Vec<usize>,
    a: usize,
}

impl DegreeTable {
    fn new(d: &BipartiteDigraph) -> Self {
        let vs: Vec<Vertex> = d.vertices().collect();
        DegreeTable {
            out: vs.iter().map(|&v| d.out_degree(v)).collect(),
            in_: vs.iter().map(|&v| d.in_degree(v)).collect(),
            a: d.a(),
        }
    }

    fn slot(&self, v: Vertex) -> usize {
        match v.side {
            Side::X => v.index,
            Side::Y => self.a + v.index,
        }
    }

    fn out(&self, v: Vertex) -> usize {
        self.out[self.slot(v)]
    }

    fn in_(&self, v: Vertex) -> usize {
        self.in_[self.slot(v)]
    }
}

/// Ordered pairs `(u, v)` with `u` in `from` and `v` in `to`, lexicographic.
fn ordered_pairs(d: &BipartiteDigraph, from: Side, to: Side) -> impl Iterator<Item = (Vertex, Vertex)> {
    let nu = d.class_size(from);
    let nv = d.class_size(to);
    (0..nu).flat_map(move |i| {
        (0..nv).filter_map(move |j| {
            let u = Vertex { side: from, index: i };
            let v = Vertex { side: to, index: j };
            (u != v).then_some((u, v))
        })
    })
}

/// Non-adjacent ordered pairs in report order: X→Y, Y→X, then (if requested) X→X, Y→Y.
fn scan_pairs(d: &BipartiteDigraph, same_class: bool) -> Vec<(Vertex, Vertex)> {
    let mut blocks = vec![(Side::X, Side::Y), (Side::Y, Side::X)];
    if same_class {
        blocks.extend([(Side::X, Side::X), (Side::Y, Side::Y)]);
    }
    blocks.into_iter().flat_map(|(s, t)| ordered_pairs(d, s, t)).filter(|&(u, v)| !d.has_arc(u, v)).collect()
}

fn pair_report(
    d: &BipartiteDigraph,
    condition: ConditionSpec,
    threshold: Threshold,
    same_class: bool,
) -> ConditionReport {
    let deg = DegreeTable::new(d);
    let violations: Vec<Violation> = scan_pairs(d, same_class)
        .into_iter()
        .map(|(u, v)| Violation { u, v, sum: deg.out(u) + deg.in_(v) })
        .filter(|w| !threshold.is_met_by(w.sum))
        .collect();
    ConditionReport { condition, holds: violations.is_empty(), threshold, violations }
}

/// Evaluates `condition` on `d` and lists every violation.
///
/// The unbalanced conditions take `a = |X|` as the smaller class; callers
/// orient the digraph so that `a ≤ b`.
pub fn check(d: &BipartiteDigraph, condition: ConditionSpec) -> Result<ConditionReport> {
    let (a, b) = (d.a(), d.b());
    Ok(match condition {
        ConditionSpec::AkStar(k) => {
            if a != b {
                return Err(Error::UnbalancedInput { a, b });
            }
            pair_report(d, condition, Threshold::at_least(a + k), false)
        }
        ConditionSpec::Ak(k) => pair_report(d, condition, Threshold::at_least(a + k), true),
        ConditionSpec::StrictHalfSum => {
            let threshold = Threshold { doubled: (a + b + 2) as i64, strict: true };
            pair_report(d, condition, threshold, false)
        }
        ConditionSpec::DiracBipartite => {
            let threshold = Threshold { doubled: (a + 2) as i64, strict: false };
            let mut violations = Vec::new();
            for v in d.vertices() {
                for degree in [d.out_degree(v), d.in_degree(v)] {
                    if !threshold.is_met_by(degree) {
                        violations.push(Violation { u: v, v, sum: degree });
                    }
                }
            }
            ConditionReport { condition, holds: violations.is_empty(), threshold, violations }
        }
    })
}

/// The one-sided condition that suffices when a complete X→Y matching is
/// assumed: `d⁺(y) + d⁻(x) ≥ a + k` for every `y ∈ Y`, `x ∈ X` with `y→x` absent.
pub fn check_one_sided(d: &BipartiteDigraph, k: usize) -> Result<ConditionReport> {
    let (a, b) = (d.a(), d.b());
    if a != b {
        return Err(Error::UnbalancedInput { a, b });
    }
    let deg = DegreeTable::new(d);
    let threshold = Threshold::at_least(a + k);
    let violations: Vec<Violation> = ordered_pairs(d, Side::Y, Side::X)
        .filter(|&(u, v)| !d.has_arc(u, v))
        .map(|(u, v)| Violation { u, v, sum: deg.out(u) + deg.in_(v) })
        .filter(|w| !threshold.is_met_by(w.sum))
        .collect();
    Ok(ConditionReport { condition: ConditionSpec::AkStar(k), holds: violations.is_empty(), threshold, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, fig2, Fig2Params};

    fn two_k11() -> BipartiteDigraph {
        BipartiteDigraph::parse("bdg 1\n2 2\n10\n01\n10\n01\n").unwrap()
    }

    #[test]
    fn complete_digraph_is_vacuous() {
        let r = check(&complete_bipartite(2, 2), ConditionSpec::AkStar(2)).unwrap();
        assert!(r.holds);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn two_components() {
        let d = two_k11();
        assert!(check(&d, ConditionSpec::AkStar(0)).unwrap().holds);
        let r = check(&d, ConditionSpec::AkStar(1)).unwrap();
        assert!(!r.holds);
        assert_eq!(r.violations[0], Violation { u: Vertex::x(0), v: Vertex::y(1), sum: 2 });
        assert_eq!(r.violations.len(), 4);
    }

    #[test]
    fn strict_half_sum_on_fig2() {
        let d = fig2(Fig2Params { a: 3, b: 7, k: 1 }).unwrap();
        let r = check(&d, ConditionSpec::StrictHalfSum).unwrap();
        assert!(!r.holds);
        assert_eq!(r.threshold.to_string(), "6");
        assert!(r.violations.iter().all(|v| v.sum == 5));
    }

    #[test]
    fn dirac_on_complete() {
        let r = check(&complete_bipartite(2, 2), ConditionSpec::DiracBipartite).unwrap();
        assert!(r.holds);
        let r = check(&BipartiteDigraph::empty(2, 2), ConditionSpec::DiracBipartite).unwrap();
        assert_eq!(r.violations.len(), 8);
        assert_eq!(r.violations[0], Violation { u: Vertex::x(0), v: Vertex::x(0), sum: 0 });
    }

    #[test]
    fn ak_star_needs_balance() {
        assert_eq!(
            check(&BipartiteDigraph::empty(2, 3), ConditionSpec::AkStar(0)),
            Err(Error::UnbalancedInput { a: 2, b: 3 })
        );
    }

    #[test]
    fn ak_includes_same_class_pairs() {
        let r = check(&complete_bipartite(2, 2), ConditionSpec::Ak(1)).unwrap();
        // x0,x1 have d⁺ = d⁻ = 2, so every same-class pair sums to 4 ≥ 3
        assert!(r.holds);
        let r = check(&complete_bipartite(2, 2), ConditionSpec::Ak(3)).unwrap();
        assert_eq!(r.violations.len(), 4);
        assert_eq!((r.violations[0].u, r.violations[0].v), (Vertex::x(0), Vertex::x(1)));
    }

    #[test]
    fn threshold_display() {
        assert_eq!(Threshold { doubled: 11, strict: true }.to_string(), "11/2");
        assert!(Threshold { doubled: 11, strict: true }.is_met_by(6));
        assert!(!Threshold { doubled: 12, strict: true }.is_met_by(6));
    }
}
