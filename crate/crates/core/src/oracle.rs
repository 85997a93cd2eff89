//! Ground truth by exhaustive search, and the verification campaigns built on it.

use std::ops::Range;

use serde::Serialize;

use crate::conditions::{check, check_one_sided, ConditionSpec};
use crate::error::{Error, Result};
use crate::graph::{BipartiteDigraph, Vertex};
use crate::hamilton::{run_engine, verify_hamiltonian_cycle, EngineMode, Outcome, REQUIRED_SLACK};
use crate::matching::{complete_matching, MatchingResult};

/// Largest number of arc slots `2ab` that [`enumerate`] accepts.
pub const MAX_ENUMERATION_BITS: usize = 40;

fn check_length(d: &BipartiteDigraph, length: usize) -> Result<()> {
    let (a, b) = (d.a(), d.b());
    if length < 2 || length % 2 == 1 || length > 2 * a.min(b) {
        return Err(Error::BadLength { length, a, b });
    }
    Ok(())
}

/// Depth-first search over alternating sequences whose first X-vertex has
/// the least index on the cycle, so each cycle is met exactly once.
struct CycleSearch<'a> {
    d: &'a BipartiteDigraph,
    length: usize,
    used_x: Vec<bool>,
    used_y: Vec<bool>,
    live_x: Vec<bool>,
    live_y: Vec<bool>,
    path: Vec<Vertex>,
}

impl<'a> CycleSearch<'a> {
    fn new(d: &'a BipartiteDigraph, length: usize) -> Self {
        // a vertex with no out-arc or no in-arc lies on no cycle
        let live = |v: Vertex| d.out_neighbors(v).next().is_some() && d.in_neighbors(v).next().is_some();
        CycleSearch {
            d,
            length,
            used_x: vec![false; d.a()],
            used_y: vec![false; d.b()],
            live_x: (0..d.a()).map(|i| live(Vertex::x(i))).collect(),
            live_y: (0..d.b()).map(|j| live(Vertex::y(j))).collect(),
            path: Vec::with_capacity(length),
        }
    }

    /// Visits cycles in discovery order; `visit` returns `false` to stop.
    fn run(&mut self, visit: &mut dyn FnMut(&[Vertex]) -> bool) {
        for s in 0..self.d.a() {
            if !self.live_x[s] {
                continue;
            }
            self.used_x[s] = true;
            self.path.push(Vertex::x(s));
            let go_on = self.extend(s, visit);
            self.path.pop();
            self.used_x[s] = false;
            if !go_on {
                return;
            }
        }
    }

    fn extend(&mut self, start: usize, visit: &mut dyn FnMut(&[Vertex]) -> bool) -> bool {
        let x = self.path.last().expect("nonempty").index;
        for j in 0..self.d.b() {
            if self.used_y[j] || !self.live_y[j] || !self.d.has_xy(x, j) {
                continue;
            }
            self.path.push(Vertex::y(j));
            self.used_y[j] = true;
            let go_on = if self.path.len() == self.length {
                !self.d.has_yx(j, start) || visit(&self.path)
            } else {
                self.step_to_x(start, j, visit)
            };
            self.used_y[j] = false;
            self.path.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    fn step_to_x(&mut self, start: usize, j: usize, visit: &mut dyn FnMut(&[Vertex]) -> bool) -> bool {
        for i in start + 1..self.d.a() {
            if self.used_x[i] || !self.live_x[i] || !self.d.has_yx(j, i) {
                continue;
            }
            self.path.push(Vertex::x(i));
            self.used_x[i] = true;
            let go_on = self.extend(start, visit);
            self.used_x[i] = false;
            self.path.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// The first cycle of exactly `length` vertices found by backtracking, in
/// ascending-index order.
pub fn brute_cycle(d: &BipartiteDigraph, length: usize) -> Result<Option<Vec<Vertex>>> {
    check_length(d, length)?;
    let mut found = None;
    CycleSearch::new(d, length).run(&mut |c| {
        found = Some(c.to_vec());
        false
    });
    Ok(found)
}

/// Number of distinct cycles of `length` vertices (rotations identified).
pub fn count_cycles(d: &BipartiteDigraph, length: usize) -> Result<u64> {
    check_length(d, length)?;
    let mut n = 0u64;
    CycleSearch::new(d, length).run(&mut |_| {
        n += 1;
        true
    });
    Ok(n)
}

fn check_bits(a: usize, b: usize) -> Result<u32> {
    let bits = 2 * a * b;
    if a == 0 || b == 0 || bits > MAX_ENUMERATION_BITS {
        return Err(Error::TooLarge { bits });
    }
    Ok(bits as u32)
}

/// Enumeration index of `d`: bits `0..ab` hold the X→Y matrix row-major,
/// bits `ab..2ab` the Y→X matrix row-major.
pub fn encode(d: &BipartiteDigraph) -> Result<u64> {
    let (a, b) = (d.a(), d.b());
    check_bits(a, b)?;
    let mut code = 0u64;
    for i in 0..a {
        for j in 0..b {
            if d.has_xy(i, j) {
                code |= 1 << (i * b + j);
            }
        }
    }
    for j in 0..b {
        for i in 0..a {
            if d.has_yx(j, i) {
                code |= 1 << (a * b + j * a + i);
            }
        }
    }
    Ok(code)
}

pub fn decode(a: usize, b: usize, code: u64) -> Result<BipartiteDigraph> {
    let bits = check_bits(a, b)?;
    if code >> bits != 0 {
        return Err(Error::InvalidParams(format!("index {code} exceeds 2^{bits}")));
    }
    let mut d = BipartiteDigraph::empty(a, b);
    for i in 0..a {
        for j in 0..b {
            if code >> (i * b + j) & 1 == 1 {
                d.add_arc(Vertex::x(i), Vertex::y(j))?;
            }
        }
    }
    for j in 0..b {
        for i in 0..a {
            if code >> (a * b + j * a + i) & 1 == 1 {
                d.add_arc(Vertex::y(j), Vertex::x(i))?;
            }
        }
    }
    Ok(d)
}

/// Size of the enumeration space for classes of sizes `a` and `b`.
pub fn space_size(a: usize, b: usize) -> Result<u64> {
    Ok(1u64 << check_bits(a, b)?)
}

/// All digraphs with classes of sizes `a`, `b` in ascending index order,
/// optionally restricted to an index interval.
pub fn enumerate(
    a: usize,
    b: usize,
    range: Option<Range<u64>>,
) -> Result<impl Iterator<Item = (u64, BipartiteDigraph)>> {
    let total = space_size(a, b)?;
    let range = range.unwrap_or(0..total);
    let range = range.start.min(total)..range.end.min(total);
    Ok(range.map(move |code| (code, decode(a, b, code).expect("code in range"))))
}

/// `<decimal index> <single-line BDG>`, the results-file line format.
pub fn result_line(code: u64, d: &BipartiteDigraph) -> String {
    format!("{code} {}", d.single_line())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EngineFailure {
    pub code: u64,
    pub reason: String,
    pub theorem_violation: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationStats {
    pub total: u64,
    pub satisfying: u64,
    pub hamiltonian_among_satisfying: u64,
    pub engine_cycles_among_satisfying: u64,
    /// Satisfying digraphs without a cycle of length `2a`.
    pub counterexamples: Vec<u64>,
    pub engine_failures: Vec<EngineFailure>,
}

impl VerificationStats {
    /// Associative, commutative merge of partial runs.
    pub fn merge(mut self, other: VerificationStats) -> VerificationStats {
        self.total += other.total;
        self.satisfying += other.satisfying;
        self.hamiltonian_among_satisfying += other.hamiltonian_among_satisfying;
        self.engine_cycles_among_satisfying += other.engine_cycles_among_satisfying;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort_unstable();
        self.engine_failures.extend(other.engine_failures);
        self.engine_failures.sort_by(|x, y| (x.code, &x.reason).cmp(&(y.code, &y.reason)));
        self
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty() && self.engine_failures.is_empty()
    }
}

/// Whether the hypothesis of `mode` with slack `k` holds, and whether the
/// engine's standing matching assumption (if any) is met.
pub fn hypothesis_holds(d: &BipartiteDigraph, k: usize, mode: EngineMode) -> Result<bool> {
    Ok(match mode {
        EngineMode::Full => check(d, ConditionSpec::AkStar(k))?.holds,
        EngineMode::Remark26Forward => {
            matches!(complete_matching(d), MatchingResult::Complete(_)) && check_one_sided(d, k)?.holds
        }
        EngineMode::Remark26Reverse => {
            let s = d.swap_classes();
            matches!(complete_matching(&s), MatchingResult::Complete(_)) && check_one_sided(&s, k)?.holds
        }
    })
}

fn has_engine_matching(d: &BipartiteDigraph, mode: EngineMode) -> bool {
    let target = match mode {
        EngineMode::Full => return true,
        EngineMode::Remark26Forward => complete_matching(d),
        EngineMode::Remark26Reverse => complete_matching(&d.swap_classes()),
    };
    matches!(target, MatchingResult::Complete(_))
}

/// Checks one instance, folding the result into `stats`.
fn verify_instance(
    code: u64,
    d: &BipartiteDigraph,
    k: usize,
    mode: EngineMode,
    stats: &mut VerificationStats,
) -> Result<()> {
    stats.total += 1;
    let satisfying = hypothesis_holds(d, k, mode)?;
    let oracle = brute_cycle(d, d.order())?;
    let mut fail = |reason: String, theorem_violation: bool| {
        stats.engine_failures.push(EngineFailure { code, reason, theorem_violation });
    };
    let mut engine_cycle = false;
    if has_engine_matching(d, mode) {
        match run_engine(d, mode) {
            Ok(run) => match run.outcome {
                Outcome::Cycle(c) => {
                    engine_cycle = true;
                    if !verify_hamiltonian_cycle(d, &c) {
                        fail("engine cycle fails verification".into(), false);
                    }
                    if oracle.is_none() {
                        fail("engine found a cycle the oracle missed".into(), false);
                    }
                }
                Outcome::Witness(w) => {
                    if !w.is_valid_for(d) {
                        fail(format!("invalid witness {w:?}"), false);
                    }
                    if satisfying && k >= REQUIRED_SLACK {
                        fail("witness returned for a digraph meeting the hypothesis".into(), false);
                    }
                }
            },
            Err(e @ Error::TheoremViolation { .. }) => fail(e.to_string(), true),
            Err(e) => fail(e.to_string(), false),
        }
    }
    if satisfying {
        stats.satisfying += 1;
        if engine_cycle {
            stats.engine_cycles_among_satisfying += 1;
        }
        match oracle {
            Some(_) => stats.hamiltonian_among_satisfying += 1,
            None => stats.counterexamples.push(code),
        }
    }
    Ok(())
}

/// Runs the engine and the oracle on every balanced digraph with `a` vertices
/// per class (optionally a sub-interval of the index space).
pub fn exhaustive_verify(a: usize, k: usize, mode: EngineMode, range: Option<Range<u64>>) -> Result<VerificationStats> {
    let mut stats = VerificationStats::default();
    for (code, d) in enumerate(a, a, range)? {
        verify_instance(code, &d, k, mode, &mut stats)?;
    }
    Ok(stats)
}

/// [`exhaustive_verify`] split across `jobs` independent workers.
pub fn exhaustive_verify_parallel(
    a: usize,
    k: usize,
    mode: EngineMode,
    range: Option<Range<u64>>,
    jobs: usize,
) -> Result<VerificationStats> {
    let total = space_size(a, a)?;
    let range = range.unwrap_or(0..total);
    let (lo, hi) = (range.start.min(total), range.end.min(total));
    let jobs = jobs.max(1) as u64;
    let chunk = (hi.saturating_sub(lo)).div_ceil(jobs).max(1);
    let parts: Vec<Range<u64>> =
        (0..jobs).map(|t| (lo + t * chunk).min(hi)..(lo + (t + 1) * chunk).min(hi)).filter(|r| !r.is_empty()).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> =
            parts.into_iter().map(|r| scope.spawn(move || exhaustive_verify(a, k, mode, Some(r)))).collect();
        handles.into_iter().try_fold(VerificationStats::default(), |acc, h| {
            Ok(acc.merge(h.join().expect("verification worker panicked")?))
        })
    })
}

/// Balanced digraphs meeting A_k* that have no cycle of length `2a`.
pub fn sharpness_search(a: usize, k: usize) -> Result<Vec<u64>> {
    let mut found = Vec::new();
    for (code, d) in enumerate(a, a, None)? {
        if check(&d, ConditionSpec::AkStar(k))?.holds && brute_cycle(&d, 2 * a)?.is_none() {
            found.push(code);
        }
    }
    Ok(found)
}

/// Digraphs with `a ≤ b` meeting the strict half-sum condition that have no
/// cycle of length `2a`.
pub fn conjecture_search(a: usize, b: usize) -> Result<Vec<u64>> {
    if a > b {
        return Err(Error::InvalidParams(format!("need a ≤ b (got {a} and {b})")));
    }
    let mut found = Vec::new();
    for (code, d) in enumerate(a, b, None)? {
        if check(&d, ConditionSpec::StrictHalfSum)?.holds && brute_cycle(&d, 2 * a)?.is_none() {
            found.push(code);
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, fig2, Fig2Params};

    fn seq(s: &str) -> Vec<Vertex> {
        s.split_whitespace().map(|t| t.parse().unwrap()).collect()
    }

    fn two_k11() -> BipartiteDigraph {
        BipartiteDigraph::parse("bdg 1\n2 2\n10\n01\n10\n01\n").unwrap()
    }

    #[test]
    fn brute_cycle_examples() {
        assert_eq!(brute_cycle(&complete_bipartite(2, 2), 4).unwrap(), Some(seq("x0 y0 x1 y1")));
        assert_eq!(brute_cycle(&two_k11(), 4).unwrap(), None);
        let f = fig2(Fig2Params { a: 3, b: 7, k: 1 }).unwrap();
        assert_eq!(brute_cycle(&f, 6).unwrap(), None);
        assert!(matches!(brute_cycle(&two_k11(), 3), Err(Error::BadLength { .. })));
        assert!(matches!(brute_cycle(&two_k11(), 6), Err(Error::BadLength { .. })));
        assert!(matches!(brute_cycle(&two_k11(), 0), Err(Error::BadLength { .. })));
    }

    #[test]
    fn count_cycles_examples() {
        let both = BipartiteDigraph::parse("bdg 1\n1 1\n1\n1\n").unwrap();
        assert_eq!(count_cycles(&both, 2).unwrap(), 1);
        assert_eq!(count_cycles(&two_k11(), 4).unwrap(), 0);
        assert_eq!(count_cycles(&two_k11(), 2).unwrap(), 2);
        assert_eq!(count_cycles(&complete_bipartite(2, 2), 4).unwrap(), 2);
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate(2, 2, None).unwrap().count(), 256);
        let all: Vec<_> = enumerate(1, 1, None).unwrap().map(|(_, d)| d.serialize()).collect();
        assert_eq!(all, vec!["bdg 1\n1 1\n0\n0\n", "bdg 1\n1 1\n1\n0\n", "bdg 1\n1 1\n0\n1\n", "bdg 1\n1 1\n1\n1\n"]);
        assert_eq!(space_size(3, 3).unwrap(), 262_144);
        assert_eq!(enumerate(2, 2, Some(250..300)).unwrap().count(), 6);
        assert!(matches!(enumerate(5, 5, None), Err(Error::TooLarge { bits: 50 })));
    }

    #[test]
    fn encode_layout() {
        // x0→y1 is bit 1; y0→x1 is bit ab + 0·a + 1 = 5
        let d = BipartiteDigraph::build(2, 2, &[(Vertex::x(0), Vertex::y(1)), (Vertex::y(0), Vertex::x(1))]).unwrap();
        assert_eq!(encode(&d).unwrap(), (1 << 1) | (1 << 5));
        assert_eq!(decode(2, 2, encode(&d).unwrap()).unwrap(), d);
        assert!(decode(1, 1, 16).is_err());
    }

    #[test]
    fn small_exhaustive_runs() {
        let s = exhaustive_verify(2, 2, EngineMode::Full, None).unwrap();
        assert_eq!(s.total, 256);
        assert!(s.is_clean(), "{s:?}");
        let s0 = exhaustive_verify(2, 0, EngineMode::Full, None).unwrap();
        assert!(s0.counterexamples.contains(&encode(&two_k11()).unwrap()));
        assert!(s0.engine_failures.is_empty());
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq = exhaustive_verify(2, 1, EngineMode::Full, None).unwrap();
        let par = exhaustive_verify_parallel(2, 1, EngineMode::Full, None, 3).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn conjecture_trivial_sizes() {
        assert!(conjecture_search(1, 1).unwrap().is_empty());
        assert!(conjecture_search(2, 1).is_err());
    }

    #[test]
    fn result_line_format() {
        let d = complete_bipartite(1, 1);
        assert_eq!(result_line(3, &d), "3 bdg 1/1 1/1/1");
    }
}
