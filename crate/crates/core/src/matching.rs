//! Complete matchings from X to Y, with Hall-violator certificates when none exists.

use serde::Serialize;

use crate::conditions::Violation;
use crate::error::{Error, Result};
use crate::graph::{BipartiteDigraph, Vertex};

/// An injective assignment `x ↦ M(x)` along X→Y arcs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    /// `mate_of_x[i] = Some(j)` ⇔ `x_i ↦ y_j`.
    mate_of_x: Vec<Option<usize>>,
    #[serde(skip)]
    mate_of_y: Vec<Option<usize>>,
}

impl Matching {
    fn empty(a: usize, b: usize) -> Self {
        Matching { mate_of_x: vec![None; a], mate_of_y: vec![None; b] }
    }

    /// Validates that `pairs` is injective and supported by X→Y arcs of `d`.
    pub fn from_pairs(d: &BipartiteDigraph, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut m = Matching::empty(d.a(), d.b());
        for &(i, j) in pairs {
            for v in [Vertex::x(i), Vertex::y(j)] {
                if !d.contains(v) {
                    return Err(Error::IndexOutOfRange(v));
                }
            }
            if !d.has_xy(i, j) {
                return Err(Error::InvalidParams(format!("matching pair x{i}->y{j} is not an arc")));
            }
            if m.mate_of_x[i].is_some() || m.mate_of_y[j].is_some() {
                return Err(Error::InvalidParams(format!("matching pair x{i}->y{j} is not independent")));
            }
            m.mate_of_x[i] = Some(j);
            m.mate_of_y[j] = Some(i);
        }
        Ok(m)
    }

    /// The matching partner `M(x_i)`, as a Y-index.
    #[inline]
    pub fn mate_of_x(&self, i: usize) -> Option<usize> {
        self.mate_of_x[i]
    }

    /// The X-index `i` with `M(x_i) = y_j`.
    #[inline]
    pub fn mate_of_y(&self, j: usize) -> Option<usize> {
        self.mate_of_y[j]
    }

    /// Matching partner of any vertex, in either direction.
    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        if v.is_x() {
            self.mate_of_x.get(v.index).copied().flatten().map(Vertex::y)
        } else {
            self.mate_of_y.get(v.index).copied().flatten().map(Vertex::x)
        }
    }

    pub fn is_complete(&self) -> bool {
        self.mate_of_x.iter().all(Option::is_some)
    }

    pub fn len(&self) -> usize {
        self.mate_of_x.iter().flatten().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(i, j)` pairs in ascending X order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate_of_x.iter().enumerate().filter_map(|(i, j)| j.map(|j| (i, j))).collect()
    }

    /// Re-checks injectivity and arc support against `d`.
    pub fn is_valid_for(&self, d: &BipartiteDigraph) -> bool {
        Matching::from_pairs(d, &self.pairs()).is_ok()
    }
}

/// A set `S ⊆ X` whose out-neighbourhood is smaller than `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HallViolator {
    /// X-indices, ascending.
    pub set: Vec<usize>,
    /// Y-indices of `N⁺(S)`, ascending.
    pub neighborhood: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum MatchingResult {
    Complete(Matching),
    Violator(HallViolator),
}

struct Augmenter<'a> {
    d: &'a BipartiteDigraph,
    m: Matching,
    seen_x: Vec<bool>,
}

impl Augmenter<'_> {
    /// Alternating DFS. A free out-neighbour is taken directly when one
    /// exists; otherwise matched out-neighbours are re-routed. Both passes go
    /// in ascending Y order.
    fn augment(&mut self, i: usize) -> bool {
        if std::mem::replace(&mut self.seen_x[i], true) {
            return false;
        }
        let d = self.d;
        if let Some(j) = (0..d.b()).find(|&j| d.has_xy(i, j) && self.m.mate_of_y[j].is_none()) {
            self.m.mate_of_x[i] = Some(j);
            self.m.mate_of_y[j] = Some(i);
            return true;
        }
        for j in 0..d.b() {
            if !d.has_xy(i, j) {
                continue;
            }
            let k = self.m.mate_of_y[j].expect("no free neighbour left");
            if self.augment(k) {
                self.m.mate_of_x[i] = Some(j);
                self.m.mate_of_y[j] = Some(i);
                return true;
            }
        }
        false
    }
}

/// Finds a complete matching from X to Y or a Hall violator.
///
/// X-vertices are processed in ascending order. When the alternating search
/// from some `x` fails, the X-vertices it reached form the violator: every
/// out-neighbour of that set is matched into it, minus `x` itself.
pub fn complete_matching(d: &BipartiteDigraph) -> MatchingResult {
    let mut aug = Augmenter { d, m: Matching::empty(d.a(), d.b()), seen_x: vec![false; d.a()] };
    for i in 0..d.a() {
        aug.seen_x.iter_mut().for_each(|s| *s = false);
        if !aug.augment(i) {
            let set: Vec<usize> = (0..d.a()).filter(|&k| aug.seen_x[k]).collect();
            let neighborhood = out_neighborhood(d, &set);
            return MatchingResult::Violator(HallViolator { set, neighborhood });
        }
    }
    MatchingResult::Complete(aug.m)
}

fn out_neighborhood(d: &BipartiteDigraph, set: &[usize]) -> Vec<usize> {
    (0..d.b()).filter(|&j| set.iter().any(|&i| d.has_xy(i, j))).collect()
}

/// Turns a Hall violator into a pair `(x, y)`, `x ∈ S`, `y ∉ N⁺(S)`, whose
/// degree sum is below `a`, so condition A₀* fails.
///
/// `d⁺(x) ≤ |N⁺(S)|` and `d⁻(y) ≤ a − |S|`, hence the sum is at most
/// `a − 1`. The lexicographically least such pair is returned.
pub fn hall_to_witness(d: &BipartiteDigraph, viol: &HallViolator) -> Result<Violation> {
    if !d.is_balanced() {
        return Err(Error::UnbalancedInput { a: d.a(), b: d.b() });
    }
    if viol.set.is_empty() || viol.set.iter().any(|&i| i >= d.a()) {
        return Err(Error::NotAViolator("set must be a nonempty subset of X".into()));
    }
    if out_neighborhood(d, &viol.set) != viol.neighborhood {
        return Err(Error::NotAViolator("neighborhood is not N⁺(S)".into()));
    }
    if viol.neighborhood.len() >= viol.set.len() {
        return Err(Error::NotAViolator("|N⁺(S)| ≥ |S|".into()));
    }
    let mut set = viol.set.clone();
    set.sort_unstable();
    let &i = set.first().expect("nonempty");
    let j =
        (0..d.b()).find(|j| !viol.neighborhood.contains(j)).expect("|N⁺(S)| < |S| ≤ b leaves a Y-vertex outside N⁺(S)");
    let (x, y) = (Vertex::x(i), Vertex::y(j));
    let sum = d.out_degree(x) + d.in_degree(y);
    debug_assert!(sum < d.a());
    Ok(Violation { u: x, v: y, sum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete_bipartite;

    fn both_to_y0() -> BipartiteDigraph {
        BipartiteDigraph::build(2, 2, &[(Vertex::x(0), Vertex::y(0)), (Vertex::x(1), Vertex::y(0))]).unwrap()
    }

    #[test]
    fn identity_on_complete() {
        match complete_matching(&complete_bipartite(2, 2)) {
            MatchingResult::Complete(m) => assert_eq!(m.pairs(), vec![(0, 0), (1, 1)]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn violator_when_both_see_y0() {
        let d = both_to_y0();
        let viol = match complete_matching(&d) {
            MatchingResult::Violator(v) => v,
            other => panic!("{other:?}"),
        };
        assert_eq!(viol, HallViolator { set: vec![0, 1], neighborhood: vec![0] });
        assert_eq!(hall_to_witness(&d, &viol).unwrap(), Violation { u: Vertex::x(0), v: Vertex::y(1), sum: 1 });
    }

    #[test]
    fn witness_on_empty() {
        let d = BipartiteDigraph::empty(2, 2);
        let viol = HallViolator { set: vec![0, 1], neighborhood: vec![] };
        assert_eq!(hall_to_witness(&d, &viol).unwrap(), Violation { u: Vertex::x(0), v: Vertex::y(0), sum: 0 });
        // the search itself stops at the first unmatched vertex
        match complete_matching(&d) {
            MatchingResult::Violator(v) => assert_eq!(v, HallViolator { set: vec![0], neighborhood: vec![] }),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bogus_violators_are_rejected() {
        let d = complete_bipartite(2, 2);
        let bogus = HallViolator { set: vec![0, 1], neighborhood: vec![0] };
        assert!(matches!(hall_to_witness(&d, &bogus), Err(Error::NotAViolator(_))));
        let bogus = HallViolator { set: vec![0], neighborhood: vec![0, 1] };
        assert!(matches!(hall_to_witness(&d, &bogus), Err(Error::NotAViolator(_))));
    }

    #[test]
    fn from_pairs_validates() {
        let d = both_to_y0();
        assert!(Matching::from_pairs(&d, &[(0, 0)]).is_ok());
        assert!(Matching::from_pairs(&d, &[(0, 0), (1, 0)]).is_err());
        assert!(Matching::from_pairs(&d, &[(0, 1)]).is_err());
    }
}
