//! The constructive hamiltonicity engine.
//!
//! Fixes one complete matching `M` from X to Y, builds a long compatible
//! cycle, then repeatedly grows it with the moves of [`crate::compatible`]
//! until it spans the digraph. When no move applies the engine looks for a
//! non-adjacent pair whose degree sum is below `a + 2`; such a pair
//! certifies that the hypothesis fails. If none exists either, the run ends
//! in [`Error::TheoremViolation`].

use std::fmt;

use serde::Serialize;

use crate::compatible::{
    cross_merge, cut_long_cycle, insert_segment, lemma25_bound, maximal_in_region, CompatibleCycle, CompatiblePath,
    Grown, Lemma25Record, MoveRecord,
};
use crate::error::{Error, Result};
use crate::graph::{BipartiteDigraph, Side, Vertex, VertexSet};
use crate::matching::{complete_matching, hall_to_witness, Matching, MatchingResult};

/// The degree-sum slack required beyond `a`.
pub const REQUIRED_SLACK: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EngineMode {
    /// Condition A₂* over all non-adjacent opposite-class ordered pairs.
    Full,
    /// A complete X→Y matching is assumed; the condition is only required
    /// on pairs `(y, x)` with `y → x` absent.
    Remark26Forward,
    /// A complete Y→X matching is assumed; the condition is only required
    /// on pairs `(x, y)` with `x → y` absent.
    Remark26Reverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    /// Derived from a Hall violator; `sum < a`.
    HallPair,
    /// A pair violating the degree condition; `sum < a + 2`.
    DegreePair,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessKind::HallPair => "hall-pair",
            WitnessKind::DegreePair => "degree-pair",
        })
    }
}

/// An ordered pair `(u, v)` with `u → v` absent and `d⁺(u) + d⁻(v) < bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub u: Vertex,
    pub v: Vertex,
    pub sum: usize,
    pub bound: usize,
}

impl Witness {
    /// Recomputes the pair's degree sum against `d`.
    pub fn is_valid_for(&self, d: &BipartiteDigraph) -> bool {
        d.contains(self.u)
            && d.contains(self.v)
            && self.u.side != self.v.side
            && !d.has_arc(self.u, self.v)
            && d.out_degree(self.u) + d.in_degree(self.v) == self.sum
            && self.sum < self.bound
            && self.bound
                == match self.kind {
                    WitnessKind::HallPair => d.a(),
                    WitnessKind::DegreePair => d.a() + REQUIRED_SLACK,
                }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Cycle(Vec<Vertex>),
    Witness(Witness),
}

impl Outcome {
    pub fn is_cycle(&self) -> bool {
        matches!(self, Outcome::Cycle(_))
    }
}

/// A full engine run: the outcome plus everything needed to audit it.
#[derive(Debug, Clone, Serialize)]
pub struct EngineRun {
    pub outcome: Outcome,
    pub matching: Option<Matching>,
    /// Moves applied to the growing structure, in order.
    pub trace: Vec<MoveRecord>,
    /// Merge degree records taken whenever no insertion of the
    /// outside path into the current cycle was possible.
    pub stable_configs: Vec<Lemma25Record>,
}

/// Runs the engine and returns only the outcome.
pub fn find_hamiltonian(d: &BipartiteDigraph, mode: EngineMode) -> Result<Outcome> {
    run_engine(d, mode).map(|r| r.outcome)
}

/// Runs the engine with its trace.
pub fn run_engine(d: &BipartiteDigraph, mode: EngineMode) -> Result<EngineRun> {
    if !d.is_balanced() {
        return Err(Error::UnbalancedInput { a: d.a(), b: d.b() });
    }
    if mode == EngineMode::Remark26Reverse {
        let mut run = run_forward(&d.swap_classes(), EngineMode::Remark26Forward)?;
        run.outcome = match run.outcome {
            Outcome::Cycle(seq) => Outcome::Cycle(canonical_rotation(seq.into_iter().map(swap_side).collect())),
            Outcome::Witness(w) => Outcome::Witness(Witness { u: swap_side(w.u), v: swap_side(w.v), ..w }),
        };
        // the matching ran Y→X; it has no X→Y meaning on the original digraph
        run.matching = None;
        return Ok(run);
    }
    run_forward(d, mode)
}

fn swap_side(v: Vertex) -> Vertex {
    Vertex { side: v.side.opposite(), index: v.index }
}

fn canonical_rotation(mut seq: Vec<Vertex>) -> Vec<Vertex> {
    if let Some(p) = seq.iter().position(|v| v.is_x()) {
        let start = (p..seq.len()).step_by(2).min_by_key(|&q| seq[q].index).unwrap_or(p);
        seq.rotate_left(start);
    }
    seq
}

struct Engine<'a> {
    d: &'a BipartiteDigraph,
    m: Matching,
    trace: Vec<MoveRecord>,
    stable_configs: Vec<Lemma25Record>,
}

fn run_forward(d: &BipartiteDigraph, mode: EngineMode) -> Result<EngineRun> {
    let m = match complete_matching(d) {
        MatchingResult::Complete(m) => m,
        MatchingResult::Violator(viol) => {
            if mode != EngineMode::Full {
                return Err(Error::MatchingAbsent);
            }
            let w = hall_to_witness(d, &viol)?;
            let witness = Witness { kind: WitnessKind::HallPair, u: w.u, v: w.v, sum: w.sum, bound: d.a() };
            return Ok(EngineRun {
                outcome: Outcome::Witness(witness),
                matching: None,
                trace: vec![],
                stable_configs: vec![],
            });
        }
    };
    let mut engine = Engine { d, m, trace: Vec::new(), stable_configs: Vec::new() };
    let outcome = engine.run(mode)?;
    Ok(EngineRun { outcome, matching: Some(engine.m), trace: engine.trace, stable_configs: engine.stable_configs })
}

impl Engine<'_> {
    fn run(&mut self, mode: EngineMode) -> Result<Outcome> {
        let d = self.d;
        let mut cycle = match maximal_in_region(d, &self.m, &VertexSet::empty(d.a(), d.b()), &mut self.trace)? {
            Grown::Cycle(c) => c,
            Grown::Path(p) => match cut_long_cycle(d, &self.m, &p, REQUIRED_SLACK)? {
                Some((c, rec)) => {
                    self.trace.push(rec);
                    c
                }
                None => return self.witness_or_violation(mode, 0),
            },
        };
        while cycle.len() < d.order() {
            match self.improve(&cycle)? {
                Some((next, rec)) => {
                    debug_assert!(rec.after_len > rec.before_len);
                    self.trace.push(rec);
                    cycle = next;
                }
                None => return self.witness_or_violation(mode, cycle.len()),
            }
        }
        let seq = cycle.vertices().to_vec();
        if !verify_hamiltonian_cycle(d, &seq) {
            return Err(Error::Internal(format!("engine produced an invalid cycle {seq:?}")));
        }
        Ok(Outcome::Cycle(seq))
    }

    fn witness_or_violation(&self, mode: EngineMode, cycle_len: usize) -> Result<Outcome> {
        match scan_witness(self.d, mode)? {
            Some(w) => Ok(Outcome::Witness(w)),
            None => Err(Error::TheoremViolation { cycle_len }),
        }
    }

    /// Tries every move against the maximal path outside `c`, then against a
    /// maximal path in the residual region.
    fn improve(&mut self, c: &CompatibleCycle) -> Result<Option<(CompatibleCycle, MoveRecord)>> {
        let (d, m) = (self.d, &self.m);
        let mut forbidden = c.vertex_set(d.a(), d.b());
        let mut scratch = Vec::new();
        let outside = as_path(maximal_in_region(d, m, &forbidden, &mut scratch)?);
        if let Some(hit) = self.try_path(c, &outside)? {
            return Ok(Some(hit));
        }
        self.stable_configs.push(lemma25_bound(d, c, &outside.0));

        outside.0.vertices().iter().for_each(|&v| forbidden.insert(v));
        if forbidden.len() == d.order() {
            return Ok(None);
        }
        let residual = as_path(maximal_in_region(d, m, &forbidden, &mut scratch)?);
        self.try_path(c, &residual)
    }

    fn try_path(
        &self,
        c: &CompatibleCycle,
        (p, closed): &(CompatiblePath, bool),
    ) -> Result<Option<(CompatibleCycle, MoveRecord)>> {
        let (d, m) = (self.d, &self.m);
        let rotations: Vec<CompatiblePath> =
            if *closed { (0..p.half_len()).map(|r| p.rotated(r)).collect() } else { vec![p.clone()] };
        for rot in &rotations {
            if let Some(hit) = insert_segment(d, m, c, rot)? {
                return Ok(Some(hit));
            }
        }
        if *closed {
            for rot in &rotations {
                if let Some(hit) = cross_merge(d, m, c, rot)? {
                    return Ok(Some(hit));
                }
            }
        }
        Ok(None)
    }
}

fn as_path(g: Grown) -> (CompatiblePath, bool) {
    match g {
        Grown::Path(p) => (p, false),
        Grown::Cycle(c) => (c.opened_at(0), true),
    }
}

/// First non-adjacent ordered pair whose degree sum is at most `a + 1`.
///
/// `Full` scans X→Y pairs then Y→X pairs; the one-sided modes scan only the
/// orientation their condition constrains.
pub fn scan_witness(d: &BipartiteDigraph, mode: EngineMode) -> Result<Option<Witness>> {
    let (a, b) = (d.a(), d.b());
    if a != b {
        return Err(Error::UnbalancedInput { a, b });
    }
    let blocks: &[(Side, Side)] = match mode {
        EngineMode::Full => &[(Side::X, Side::Y), (Side::Y, Side::X)],
        EngineMode::Remark26Forward => &[(Side::Y, Side::X)],
        EngineMode::Remark26Reverse => &[(Side::X, Side::Y)],
    };
    let bound = a + REQUIRED_SLACK;
    for &(from, to) in blocks {
        for i in 0..a {
            for j in 0..a {
                let u = Vertex { side: from, index: i };
                let v = Vertex { side: to, index: j };
                if d.has_arc(u, v) {
                    continue;
                }
                let sum = d.out_degree(u) + d.in_degree(v);
                if sum < bound {
                    return Ok(Some(Witness { kind: WitnessKind::DegreePair, u, v, sum, bound }));
                }
            }
        }
    }
    Ok(None)
}

/// Certificate check independent of any matching: `seq` lists every vertex
/// exactly once, alternates classes, and consecutive vertices (with
/// wrap-around) are joined by arcs.
pub fn verify_hamiltonian_cycle(d: &BipartiteDigraph, seq: &[Vertex]) -> bool {
    if !d.is_balanced() || seq.len() != d.order() || seq.is_empty() {
        return false;
    }
    let mut seen = VertexSet::empty(d.a(), d.b());
    for &v in seq {
        if !d.contains(v) || seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    (0..seq.len()).all(|t| d.has_arc(seq[t], seq[(t + 1) % seq.len()]))
}
