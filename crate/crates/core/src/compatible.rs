//! Paths and cycles compatible with a complete matching `M` from X to Y, and
//! the moves that grow them.
//!
//! Matching arcs always run X→Y, so a vertex sequence is compatible with `M`
//! exactly when every X-vertex on it is immediately followed by its mate.
//! A compatible structure is therefore determined by its sequence of
//! X-vertices; the moves below work on that sequence and expand it to the
//! full `x, M(x), x', M(x'), …` form on output.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteDigraph, Side, Vertex, VertexSet};
use crate::matching::Matching;

/// Why a sequence fails to be a compatible path or cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Defect {
    EmptyCycle,
    OddLength,
    OutOfRange(Vertex),
    Repeated(Vertex),
    /// Position `pos` holds a vertex of the wrong colour class.
    WrongSide {
        pos: usize,
    },
    /// `x` is followed by something other than its matching partner.
    NotMatchingArc(Vertex, Vertex),
    MissingArc(Vertex, Vertex),
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::EmptyCycle => write!(f, "a cycle needs at least two vertices"),
            Defect::OddLength => write!(f, "odd number of vertices"),
            Defect::OutOfRange(v) => write!(f, "{v} out of range"),
            Defect::Repeated(v) => write!(f, "{v} repeated"),
            Defect::WrongSide { pos } => write!(f, "wrong colour class at position {pos}"),
            Defect::NotMatchingArc(x, y) => write!(f, "{x}->{y} is not the matching arc of {x}"),
            Defect::MissingArc(u, v) => write!(f, "arc {u}->{v} missing"),
        }
    }
}

/// Checks every compatibility invariant of `seq` against `(d, m)`.
///
/// Paths may be empty; cycles need at least one matched pair plus the
/// closing arc.
pub fn check_compatible(
    d: &BipartiteDigraph,
    m: &Matching,
    seq: &[Vertex],
    closed: bool,
) -> std::result::Result<(), Defect> {
    if closed && seq.is_empty() {
        return Err(Defect::EmptyCycle);
    }
    if seq.len() % 2 == 1 {
        return Err(Defect::OddLength);
    }
    let mut seen = VertexSet::empty(d.a(), d.b());
    for (pos, &v) in seq.iter().enumerate() {
        if !d.contains(v) {
            return Err(Defect::OutOfRange(v));
        }
        let expected = if pos % 2 == 0 { Side::X } else { Side::Y };
        if v.side != expected {
            return Err(Defect::WrongSide { pos });
        }
        if seen.contains(v) {
            return Err(Defect::Repeated(v));
        }
        seen.insert(v);
    }
    for pair in seq.chunks(2) {
        let (x, y) = (pair[0], pair[1]);
        if m.mate(x) != Some(y) || !d.has_arc(x, y) {
            return Err(Defect::NotMatchingArc(x, y));
        }
    }
    let n = seq.len();
    let links = if closed { n / 2 } else { (n / 2).saturating_sub(1) };
    for k in 0..links {
        let y = seq[2 * k + 1];
        let x = seq[(2 * k + 2) % n];
        if !d.has_arc(y, x) {
            return Err(Defect::MissingArc(y, x));
        }
    }
    Ok(())
}

/// `true` iff `seq` is a compatible path (`closed = false`) or cycle (`closed = true`).
pub fn verify(d: &BipartiteDigraph, m: &Matching, seq: &[Vertex], closed: bool) -> bool {
    check_compatible(d, m, seq, closed).is_ok()
}

/// A path `(p_1, …, p_s)` compatible with a matching, `p_1 ∈ X`, `p_s ∈ Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CompatiblePath {
    vertices: Vec<Vertex>,
}

/// A cycle `[x_1, y_1, …, x_m, y_m]` compatible with a matching, stored
/// starting at its least-index X-vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CompatibleCycle {
    vertices: Vec<Vertex>,
}

fn expand(m: &Matching, xs: &[usize]) -> Vec<Vertex> {
    xs.iter().flat_map(|&i| [Vertex::x(i), Vertex::y(m.mate_of_x(i).expect("matched X-vertex"))]).collect()
}

fn x_indices(seq: &[Vertex]) -> Vec<usize> {
    seq.iter().step_by(2).map(|v| v.index).collect()
}

impl CompatiblePath {
    /// Validates `seq` as a compatible path for `(d, m)`.
    pub fn new(d: &BipartiteDigraph, m: &Matching, seq: Vec<Vertex>) -> std::result::Result<Self, Defect> {
        check_compatible(d, m, &seq, false)?;
        Ok(CompatiblePath { vertices: seq })
    }

    fn from_xs(m: &Matching, xs: &[usize]) -> Self {
        CompatiblePath { vertices: expand(m, xs) }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of matched pairs on the path.
    pub fn half_len(&self) -> usize {
        self.vertices.len() / 2
    }

    pub fn xs(&self) -> Vec<usize> {
        x_indices(&self.vertices)
    }

    pub fn first(&self) -> Option<Vertex> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.vertices.last().copied()
    }

    /// `p_s → p_1` is an arc.
    pub fn closes(&self, d: &BipartiteDigraph) -> bool {
        match (self.first(), self.last()) {
            (Some(first), Some(last)) => d.has_arc(last, first),
            _ => false,
        }
    }

    /// The cyclic shift starting at the `r`-th matched pair. Only meaningful
    /// for closing paths.
    pub fn rotated(&self, r: usize) -> CompatiblePath {
        let mut v = self.vertices.clone();
        v.rotate_left(2 * r);
        CompatiblePath { vertices: v }
    }

    pub fn vertex_set(&self, a: usize, b: usize) -> VertexSet {
        let mut s = VertexSet::empty(a, b);
        self.vertices.iter().for_each(|&v| s.insert(v));
        s
    }
}

impl CompatibleCycle {
    /// Validates `seq` as a compatible cycle and rotates it to canonical form.
    pub fn new(d: &BipartiteDigraph, m: &Matching, seq: Vec<Vertex>) -> std::result::Result<Self, Defect> {
        check_compatible(d, m, &seq, true)?;
        Ok(Self::from_xs(m, &x_indices(&seq)))
    }

    fn from_xs(m: &Matching, xs: &[usize]) -> Self {
        let mut xs = xs.to_vec();
        if let Some(start) = xs.iter().enumerate().min_by_key(|(_, &i)| i).map(|(p, _)| p) {
            xs.rotate_left(start);
        }
        CompatibleCycle { vertices: expand(m, &xs) }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Half the length, `m`.
    pub fn half_len(&self) -> usize {
        self.vertices.len() / 2
    }

    pub fn xs(&self) -> Vec<usize> {
        x_indices(&self.vertices)
    }

    pub fn vertex_set(&self, a: usize, b: usize) -> VertexSet {
        let mut s = VertexSet::empty(a, b);
        self.vertices.iter().for_each(|&v| s.insert(v));
        s
    }

    /// The cycle opened into a path starting at its `r`-th matched pair.
    pub fn opened_at(&self, r: usize) -> CompatiblePath {
        let mut v = self.vertices.clone();
        v.rotate_left(2 * r);
        CompatiblePath { vertices: v }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    Reopen,
    Cut,
    InsertSegment,
    CrossMerge,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::Reopen => "Reopen",
            MoveKind::Cut => "Cut",
            MoveKind::InsertSegment => "InsertSegment",
            MoveKind::CrossMerge => "CrossMerge",
        })
    }
}

/// One applied move: the positions it used and the length change it caused.
///
/// `before_len` is the length of the structure the move replaced; a cut
/// starts the first cycle from a path and records 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub indices: BTreeMap<&'static str, usize>,
    pub before_len: usize,
    pub after_len: usize,
}

impl MoveRecord {
    fn new(kind: MoveKind, indices: &[(&'static str, usize)], before_len: usize, after_len: usize) -> Self {
        MoveRecord { kind, indices: indices.iter().copied().collect(), before_len, after_len }
    }
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MOVE {} len {}→{}", self.kind, self.before_len, self.after_len)
    }
}

/// Output of path growth: a maximal path, or a cycle when the path closes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Grown {
    Path(CompatiblePath),
    Cycle(CompatibleCycle),
}

/// Unforbidden, unvisited X-vertices, i.e. the ones a path may still take.
struct Frontier<'a> {
    d: &'a BipartiteDigraph,
    m: &'a Matching,
    free: Vec<bool>,
}

impl<'a> Frontier<'a> {
    fn new(d: &'a BipartiteDigraph, m: &'a Matching, forbidden: &VertexSet) -> Result<Self> {
        let free: Vec<bool> = (0..d.a()).map(|i| !forbidden.contains(Vertex::x(i))).collect();
        for i in (0..d.a()).filter(|&i| free[i]) {
            match m.mate_of_x(i) {
                Some(j) if !forbidden.contains(Vertex::y(j)) => {}
                Some(_) => {
                    return Err(Error::PreconditionViolated(format!(
                        "forbidden set is not closed under the matching at x{i}"
                    )))
                }
                None => return Err(Error::PreconditionViolated(format!("x{i} is unmatched"))),
            }
        }
        Ok(Frontier { d, m, free })
    }

    fn mate(&self, i: usize) -> Vertex {
        Vertex::y(self.m.mate_of_x(i).expect("checked in Frontier::new"))
    }

    /// Least free `x` with `y → x`.
    fn successor(&self, y: Vertex) -> Option<usize> {
        (0..self.d.a()).find(|&i| self.free[i] && self.d.has_arc(y, Vertex::x(i)))
    }

    /// Least free `x` with `M(x) → target`.
    fn predecessor(&self, target: usize) -> Option<usize> {
        (0..self.d.a()).find(|&i| self.free[i] && self.d.has_arc(self.mate(i), Vertex::x(target)))
    }

    /// Extends `xs` at the tail, then at the head, until neither applies or
    /// the sequence closes.
    fn grow(&mut self, mut xs: Vec<usize>) -> Grown {
        for &i in &xs {
            self.free[i] = false;
        }
        while let Some(next) = self.successor(self.mate(*xs.last().expect("nonempty"))) {
            self.free[next] = false;
            xs.push(next);
        }
        let mut front = std::collections::VecDeque::from(xs);
        loop {
            let head = front[0];
            let tail = *front.back().expect("nonempty");
            if self.d.has_arc(self.mate(tail), Vertex::x(head)) {
                return Grown::Cycle(CompatibleCycle::from_xs(self.m, front.make_contiguous()));
            }
            match self.predecessor(head) {
                Some(prev) => {
                    self.free[prev] = false;
                    front.push_front(prev);
                }
                None => return Grown::Path(CompatiblePath::from_xs(self.m, front.make_contiguous())),
            }
        }
    }
}

/// Grows a maximal compatible path in `D ∖ forbidden`, starting from the
/// least unforbidden X-vertex.
///
/// Tail extension follows the least-index arc `y → x` to a free `x` and then
/// `x → M(x)`. Once the tail is stuck, the head is extended by prepending the
/// least free `x` with `M(x) → p_1`. If the tail ever dominates the head the
/// sequence is returned as a cycle.
pub fn grow_maximal_path(d: &BipartiteDigraph, m: &Matching, forbidden: &VertexSet) -> Result<Grown> {
    let mut frontier = Frontier::new(d, m, forbidden)?;
    let start = (0..d.a()).find(|&i| frontier.free[i]).ok_or(Error::EmptyRegion)?;
    Ok(frontier.grow(vec![start]))
}

/// Extends an existing compatible path to a maximal one inside `D ∖ forbidden`.
pub fn extend_path(d: &BipartiteDigraph, m: &Matching, path: &CompatiblePath, forbidden: &VertexSet) -> Result<Grown> {
    let mut frontier = Frontier::new(d, m, forbidden)?;
    let xs = path.xs();
    if xs.is_empty() {
        let start = (0..d.a()).find(|&i| frontier.free[i]).ok_or(Error::EmptyRegion)?;
        return Ok(frontier.grow(vec![start]));
    }
    if let Some(&i) = xs.iter().find(|&&i| !frontier.free[i]) {
        return Err(Error::PreconditionViolated(format!("path vertex x{i} is forbidden")));
    }
    Ok(frontier.grow(xs))
}

/// Opens `c` into a strictly longer path by entering it from outside.
///
/// Finds the least `y ∉ V(C) ∪ forbidden` (then least cycle position `i`)
/// with `y → x_i`, and returns `(M⁻¹(y), y, x_i, y_i, …, x_{i−1}, y_{i−1})`.
pub fn reopen_cycle(
    d: &BipartiteDigraph,
    m: &Matching,
    c: &CompatibleCycle,
    forbidden: &VertexSet,
) -> Option<CompatiblePath> {
    let on_c = c.vertex_set(d.a(), d.b());
    let cx = c.xs();
    for j in 0..d.b() {
        let y = Vertex::y(j);
        if on_c.contains(y) || forbidden.contains(y) {
            continue;
        }
        let Some(x) = m.mate_of_y(j) else { continue };
        if forbidden.contains(Vertex::x(x)) {
            continue;
        }
        if let Some(i) = (0..cx.len()).find(|&i| d.has_arc(y, Vertex::x(cx[i]))) {
            let mut xs = vec![x];
            xs.extend(cx[i..].iter().chain(&cx[..i]));
            return Some(CompatiblePath::from_xs(m, &xs));
        }
    }
    None
}

/// Mirror image of [`reopen_cycle`]: leaves `c` from some `y_i` towards a
/// vertex outside. Finds the least cycle position `i` (then least `x`) with
/// `y_i → x`, `x ∉ V(C) ∪ forbidden`, and returns
/// `(x_{i+1}, y_{i+1}, …, x_i, y_i, x, M(x))`.
pub fn reopen_cycle_outward(
    d: &BipartiteDigraph,
    m: &Matching,
    c: &CompatibleCycle,
    forbidden: &VertexSet,
) -> Option<CompatiblePath> {
    let on_c = c.vertex_set(d.a(), d.b());
    let cx = c.xs();
    for i in 0..cx.len() {
        let yi = Vertex::y(m.mate_of_x(cx[i])?);
        let exit = (0..d.a()).find(|&x| {
            let xv = Vertex::x(x);
            !on_c.contains(xv)
                && !forbidden.contains(xv)
                && m.mate_of_x(x).is_some_and(|j| !forbidden.contains(Vertex::y(j)))
                && d.has_arc(yi, xv)
        });
        if let Some(x) = exit {
            let mut xs: Vec<usize> = cx[i + 1..].iter().chain(&cx[..=i]).copied().collect();
            xs.push(x);
            return Some(CompatiblePath::from_xs(m, &xs));
        }
    }
    None
}

/// Grows a path in `D ∖ forbidden` and, while it closes into a cycle that can
/// be reopened, reopens and regrows it.
///
/// The result is a path that cannot be extended at either end and does not
/// close, or a cycle that no vertex of the region enters or leaves.
pub fn maximal_in_region(
    d: &BipartiteDigraph,
    m: &Matching,
    forbidden: &VertexSet,
    trace: &mut Vec<MoveRecord>,
) -> Result<Grown> {
    let mut grown = grow_maximal_path(d, m, forbidden)?;
    while let Grown::Cycle(c) = &grown {
        let opened = reopen_cycle(d, m, c, forbidden).or_else(|| reopen_cycle_outward(d, m, c, forbidden));
        let Some(path) = opened else { break };
        trace.push(MoveRecord::new(MoveKind::Reopen, &[], c.len(), path.len()));
        grown = extend_path(d, m, &path, forbidden)?;
    }
    Ok(grown)
}

/// Extracts a long compatible cycle from a maximal non-closing path.
///
/// With `P = (p_1, …, p_s)`: if `2·d⁺_{V(P)}(p_s) ≥ a + k`, returns
/// `[p_{i0}, …, p_s]` for the least `i0` with `p_s → p_{i0}`; otherwise if
/// `2·d⁻_{V(P)}(p_1) ≥ a + k`, returns `[p_1, …, p_{j0}]` for the greatest
/// `j0` with `p_{j0} → p_1`.
pub fn cut_long_cycle(
    d: &BipartiteDigraph,
    m: &Matching,
    p: &CompatiblePath,
    k: usize,
) -> Result<Option<(CompatibleCycle, MoveRecord)>> {
    let (Some(first), Some(last)) = (p.first(), p.last()) else {
        return Ok(None);
    };
    if d.has_arc(last, first) {
        return Err(Error::PreconditionViolated("path closes; reopen it instead of cutting".into()));
    }
    let target = d.a() + k;
    let xs = p.xs();
    let back_from_tail: Vec<usize> = (0..xs.len()).filter(|&t| d.has_arc(last, Vertex::x(xs[t]))).collect();
    if 2 * back_from_tail.len() >= target {
        let i0 = back_from_tail[0];
        let c = CompatibleCycle::from_xs(m, &xs[i0..]);
        let rec = MoveRecord::new(MoveKind::Cut, &[("i0", i0)], 0, c.len());
        return Ok(Some((c, rec)));
    }
    let into_head: Vec<usize> =
        (0..xs.len()).filter(|&t| d.has_arc(Vertex::y(m.mate_of_x(xs[t]).expect("matched")), first)).collect();
    if 2 * into_head.len() >= target {
        let j0 = *into_head.last().expect("nonempty");
        let c = CompatibleCycle::from_xs(m, &xs[..=j0]);
        let rec = MoveRecord::new(MoveKind::Cut, &[("j0", j0)], 0, c.len());
        return Ok(Some((c, rec)));
    }
    Ok(None)
}

fn check_disjoint(c: &CompatibleCycle, p: &[Vertex], a: usize, b: usize) -> Result<()> {
    let on_c = c.vertex_set(a, b);
    match p.iter().find(|&&v| on_c.contains(v)) {
        Some(&v) => Err(Error::NotDisjoint(v)),
        None => Ok(()),
    }
}

/// Half-length of the forward stretch of `C` strictly between positions
/// `i` (a Y-anchor) and `j` (an X-anchor).
#[inline]
fn gap(i: usize, j: usize, m: usize) -> usize {
    (j + m - i - 1) % m
}

/// `cx[from], cx[from+1], …, cx[to]`, cyclically.
fn cyclic_run(cx: &[usize], from: usize, to: usize) -> impl Iterator<Item = usize> + '_ {
    let m = cx.len();
    let count = (to + m - from) % m + 1;
    (0..count).map(move |t| cx[(from + t) % m])
}

/// Splices a sub-segment of `P` into `C` in place of a shorter stretch.
///
/// Searches segments `(u_g, …, v_h)` of `P`, longest first and then by
/// ascending `g`, and anchors `y_i → u_g`, `v_h → x_j` on `C` by ascending
/// `(i, j)`, such that the stretch `x_{i+1}, …, y_{j−1}` being replaced has
/// half-length `l < h − g + 1`. The first hit gives a strictly longer cycle.
pub fn insert_segment(
    d: &BipartiteDigraph,
    m: &Matching,
    c: &CompatibleCycle,
    p: &CompatiblePath,
) -> Result<Option<(CompatibleCycle, MoveRecord)>> {
    check_disjoint(c, p.vertices(), d.a(), d.b())?;
    let cx = c.xs();
    let px = p.xs();
    let (mc, pc) = (cx.len(), px.len());
    if mc == 0 {
        return Ok(None);
    }
    let cy: Vec<Vertex> = cx.iter().map(|&i| Vertex::y(m.mate_of_x(i).expect("matched"))).collect();
    for q in (1..=pc).rev() {
        for g in 0..=pc - q {
            let h = g + q - 1;
            let ug = Vertex::x(px[g]);
            let vh = Vertex::y(m.mate_of_x(px[h]).expect("matched"));
            for i in (0..mc).filter(|&i| d.has_arc(cy[i], ug)) {
                for j in (0..mc).filter(|&j| d.has_arc(vh, Vertex::x(cx[j]))) {
                    let l = gap(i, j, mc);
                    if l >= q {
                        continue;
                    }
                    let mut xs: Vec<usize> = cyclic_run(&cx, j, i).collect();
                    xs.extend_from_slice(&px[g..=h]);
                    let out = CompatibleCycle::from_xs(m, &xs);
                    let rec = MoveRecord::new(
                        MoveKind::InsertSegment,
                        &[("g", g), ("h", h), ("i", i), ("j", j), ("l", l)],
                        c.len(),
                        out.len(),
                    );
                    return Ok(Some((out, rec)));
                }
            }
        }
    }
    Ok(None)
}

/// Merges a closed path `Pc = (u_1, …, v_p)` (with `v_p → u_1`) and `C` into
/// one cycle on `V(C) ∪ V(Pc)`:
///
/// `[u_1, …, v_p, x_{j0}, …, y_s, x_{i0+1}, …, y_{j0−1}, x_{s+1}, …, y_{i0}]`
///
/// for anchors `y_{i0} → u_1`, `v_p → x_{j0}` and a split pair
/// `(y_s, x_{s+1})` outside the stretch between them with
/// `y_s → x_{i0+1}` and `y_{j0−1} → x_{s+1}`. All triples are tried in
/// ascending `(i0, j0, s)` order.
pub fn cross_merge(
    d: &BipartiteDigraph,
    m: &Matching,
    c: &CompatibleCycle,
    pc: &CompatiblePath,
) -> Result<Option<(CompatibleCycle, MoveRecord)>> {
    check_disjoint(c, pc.vertices(), d.a(), d.b())?;
    if !pc.closes(d) {
        return Err(Error::PreconditionViolated("cross merge needs a closed path (v_p → u_1)".into()));
    }
    let (u1, vp) = (pc.first().expect("closed"), pc.last().expect("closed"));
    let cx = c.xs();
    let mc = cx.len();
    let cy: Vec<Vertex> = cx.iter().map(|&i| Vertex::y(m.mate_of_x(i).expect("matched"))).collect();
    for i0 in (0..mc).filter(|&i| d.has_arc(cy[i], u1)) {
        for j0 in (0..mc).filter(|&j| d.has_arc(vp, Vertex::x(cx[j]))) {
            let l = gap(i0, j0, mc);
            if l == 0 {
                continue;
            }
            let seg_first = (i0 + 1) % mc;
            let seg_last = (j0 + mc - 1) % mc;
            // split pairs (y_s, x_{s+1}) with s = j0, …, i0 − 1
            for t in 0..(mc - l - 1) {
                let s = (j0 + t) % mc;
                let after = (s + 1) % mc;
                if !d.has_arc(cy[s], Vertex::x(cx[seg_first])) || !d.has_arc(cy[seg_last], Vertex::x(cx[after])) {
                    continue;
                }
                let mut xs = pc.xs();
                xs.extend(cyclic_run(&cx, j0, s));
                xs.extend(cyclic_run(&cx, seg_first, seg_last));
                xs.extend(cyclic_run(&cx, after, i0));
                let out = CompatibleCycle::from_xs(m, &xs);
                let rec = MoveRecord::new(
                    MoveKind::CrossMerge,
                    &[("i0", i0), ("j0", j0), ("s", s), ("l", l)],
                    c.len(),
                    out.len(),
                );
                return Ok(Some((out, rec)));
            }
        }
    }
    Ok(None)
}

/// Degree bound relating a cycle `C` and a path `P` outside it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Lemma25Record {
    /// `d⁺_{V(C)}(v_p) + d⁻_{V(C)}(u_1)`.
    pub lhs: i64,
    /// `m − p + 1`.
    pub rhs: i64,
    /// Both summands of `lhs` are positive.
    pub premises_hold: bool,
}

impl Lemma25Record {
    /// The bound is asserted only under its premises.
    pub fn is_consistent(&self) -> bool {
        !self.premises_hold || self.lhs <= self.rhs
    }
}

pub fn lemma25_bound(d: &BipartiteDigraph, c: &CompatibleCycle, p: &CompatiblePath) -> Lemma25Record {
    let on_c = c.vertex_set(d.a(), d.b());
    let (out_vp, in_u1) = match (p.first(), p.last()) {
        (Some(u1), Some(vp)) => (
            d.out_neighbors(vp).filter(|w| on_c.contains(*w)).count(),
            d.in_neighbors(u1).filter(|w| on_c.contains(*w)).count(),
        ),
        _ => (0, 0),
    };
    Lemma25Record {
        lhs: (out_vp + in_u1) as i64,
        rhs: c.half_len() as i64 - p.half_len() as i64 + 1,
        premises_hold: out_vp > 0 && in_u1 > 0,
    }
}
