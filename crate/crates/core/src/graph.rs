//! Bipartite digraph data model.
//!
//! Vertices are `(side, index)` pairs with 0-based indices. Arcs only ever
//! join opposite colour classes: the two dense matrices `xy` (a×b) and `yx`
//! (b×a) cannot encode anything else, so loops, parallel arcs and
//! intra-class arcs are unrepresentable.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// A vertex of a bipartite digraph. Ordering is X before Y, then by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub const fn x(index: usize) -> Self {
        Vertex { side: Side::X, index }
    }

    pub const fn y(index: usize) -> Self {
        Vertex { side: Side::Y, index }
    }

    pub fn is_x(self) -> bool {
        self.side == Side::X
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::X => write!(f, "x{}", self.index),
            Side::Y => write!(f, "y{}", self.index),
        }
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Vertex {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let side = match s.as_bytes().first() {
            Some(b'x') | Some(b'X') => Side::X,
            Some(b'y') | Some(b'Y') => Side::Y,
            _ => return Err(format!("bad vertex `{s}`: expected x<index> or y<index>")),
        };
        let index = s[1..].parse().map_err(|_| format!("bad vertex `{s}`: expected x<index> or y<index>"))?;
        Ok(Vertex { side, index })
    }
}

/// Positive (`out`) and negative (`in_`) half-degree of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreePair {
    pub out: usize,
    #[serde(rename = "in")]
    pub in_: usize,
}

/// A subset of the vertices of a digraph with `a` X-vertices and `b` Y-vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    x: Vec<bool>,
    y: Vec<bool>,
}

impl VertexSet {
    pub fn empty(a: usize, b: usize) -> Self {
        VertexSet { x: vec![false; a], y: vec![false; b] }
    }

    pub fn full(a: usize, b: usize) -> Self {
        VertexSet { x: vec![true; a], y: vec![true; b] }
    }

    pub fn from_vertices(a: usize, b: usize, vertices: &[Vertex]) -> Result<Self> {
        let mut set = VertexSet::empty(a, b);
        for &v in vertices {
            if !set.in_range(v) {
                return Err(Error::IndexOutOfRange(v));
            }
            set.insert(v);
        }
        Ok(set)
    }

    fn in_range(&self, v: Vertex) -> bool {
        match v.side {
            Side::X => v.index < self.x.len(),
            Side::Y => v.index < self.y.len(),
        }
    }

    /// Panics if `v` is out of range.
    pub fn insert(&mut self, v: Vertex) {
        match v.side {
            Side::X => self.x[v.index] = true,
            Side::Y => self.y[v.index] = true,
        }
    }

    pub fn remove(&mut self, v: Vertex) {
        match v.side {
            Side::X => self.x[v.index] = false,
            Side::Y => self.y[v.index] = false,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        match v.side {
            Side::X => self.x.get(v.index).copied().unwrap_or(false),
            Side::Y => self.y.get(v.index).copied().unwrap_or(false),
        }
    }

    pub fn len(&self) -> usize {
        self.x.iter().chain(&self.y).filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Members in canonical order: X ascending, then Y ascending.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        let xs = self.x.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| Vertex::x(i));
        let ys = self.y.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| Vertex::y(j));
        xs.chain(ys)
    }

    pub fn complement(&self) -> Self {
        VertexSet { x: self.x.iter().map(|b| !b).collect(), y: self.y.iter().map(|b| !b).collect() }
    }
}

/// A bipartite digraph with colour classes X (size `a`) and Y (size `b`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteDigraph {
    a: usize,
    b: usize,
    /// Row-major a×b: `xy[i * b + j]` ⇔ arc x_i→y_j.
    xy: Vec<bool>,
    /// Row-major b×a: `yx[j * a + i]` ⇔ arc y_j→x_i.
    yx: Vec<bool>,
}

/// Result of [`BipartiteDigraph::remove_vertices`]: the induced subdigraph
/// together with the new-index → original-index tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub digraph: BipartiteDigraph,
    pub x_original: Vec<usize>,
    pub y_original: Vec<usize>,
}

impl Induced {
    pub fn original(&self, v: Vertex) -> Vertex {
        match v.side {
            Side::X => Vertex::x(self.x_original[v.index]),
            Side::Y => Vertex::y(self.y_original[v.index]),
        }
    }
}

impl BipartiteDigraph {
    /// The digraph on `a + b` vertices with no arcs.
    pub fn empty(a: usize, b: usize) -> Self {
        BipartiteDigraph { a, b, xy: vec![false; a * b], yx: vec![false; a * b] }
    }

    /// Builds a digraph from an arc list. Duplicate arcs collapse.
    pub fn build(a: usize, b: usize, arcs: &[(Vertex, Vertex)]) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidParams(format!("class sizes must be at least 1 (got {a} and {b})")));
        }
        let mut d = BipartiteDigraph::empty(a, b);
        for &(u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn is_balanced(&self) -> bool {
        self.a == self.b
    }

    pub fn order(&self) -> usize {
        self.a + self.b
    }

    pub fn class_size(&self, side: Side) -> usize {
        match side {
            Side::X => self.a,
            Side::Y => self.b,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.index < self.class_size(v.side)
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(v))
        }
    }

    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.set_arc(u, v, true)
    }

    pub fn remove_arc(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.set_arc(u, v, false)
    }

    fn set_arc(&mut self, u: Vertex, v: Vertex, present: bool) -> Result<()> {
        if u.side == v.side {
            return Err(Error::SameClassArc(u, v));
        }
        self.check(u)?;
        self.check(v)?;
        match u.side {
            Side::X => self.xy[u.index * self.b + v.index] = present,
            Side::Y => self.yx[u.index * self.a + v.index] = present,
        }
        Ok(())
    }

    /// Arc test; same-class or out-of-range pairs are simply absent.
    #[inline]
    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        if !self.contains(u) || !self.contains(v) {
            return false;
        }
        match (u.side, v.side) {
            (Side::X, Side::Y) => self.xy[u.index * self.b + v.index],
            (Side::Y, Side::X) => self.yx[u.index * self.a + v.index],
            _ => false,
        }
    }

    #[inline]
    pub fn has_xy(&self, i: usize, j: usize) -> bool {
        self.xy[i * self.b + j]
    }

    #[inline]
    pub fn has_yx(&self, j: usize, i: usize) -> bool {
        self.yx[j * self.a + i]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.a).map(Vertex::x).chain((0..self.b).map(Vertex::y))
    }

    /// Out-neighbours in ascending index order.
    pub fn out_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let other = v.side.opposite();
        (0..self.class_size(other)).map(move |i| Vertex { side: other, index: i }).filter(move |&w| self.has_arc(v, w))
    }

    /// In-neighbours in ascending index order.
    pub fn in_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let other = v.side.opposite();
        (0..self.class_size(other)).map(move |i| Vertex { side: other, index: i }).filter(move |&w| self.has_arc(w, v))
    }

    /// `d⁺` and `d⁻` of `v`, optionally counting only neighbours inside `restriction`.
    pub fn degrees(&self, v: Vertex, restriction: Option<&VertexSet>) -> Result<DegreePair> {
        self.check(v)?;
        let keep = |w: &Vertex| restriction.is_none_or(|s| s.contains(*w));
        Ok(DegreePair {
            out: self.out_neighbors(v).filter(keep).count(),
            in_: self.in_neighbors(v).filter(keep).count(),
        })
    }

    /// Unrestricted `d⁺(v)`. Panics on out-of-range vertices.
    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_neighbors(v).count()
    }

    /// Unrestricted `d⁻(v)`. Panics on out-of-range vertices.
    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_neighbors(v).count()
    }

    pub fn min_out_degree(&self) -> usize {
        self.vertices().map(|v| self.out_degree(v)).min().unwrap_or(0)
    }

    pub fn min_in_degree(&self) -> usize {
        self.vertices().map(|v| self.in_degree(v)).min().unwrap_or(0)
    }

    pub fn arc_count_xy(&self) -> usize {
        self.xy.iter().filter(|&&b| b).count()
    }

    pub fn arc_count_yx(&self) -> usize {
        self.yx.iter().filter(|&&b| b).count()
    }

    /// All arcs, X→Y first, each block lexicographic.
    pub fn arcs(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for i in 0..self.a {
            for j in 0..self.b {
                if self.has_xy(i, j) {
                    out.push((Vertex::x(i), Vertex::y(j)));
                }
            }
        }
        for j in 0..self.b {
            for i in 0..self.a {
                if self.has_yx(j, i) {
                    out.push((Vertex::y(j), Vertex::x(i)));
                }
            }
        }
        out
    }

    /// Induced subdigraph on `V(D) ∖ S` with compacted indices.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> Result<Induced> {
        let set = VertexSet::from_vertices(self.a, self.b, removed)?;
        let x_original: Vec<usize> = (0..self.a).filter(|&i| !set.contains(Vertex::x(i))).collect();
        let y_original: Vec<usize> = (0..self.b).filter(|&j| !set.contains(Vertex::y(j))).collect();
        let mut digraph = BipartiteDigraph::empty(x_original.len(), y_original.len());
        for (ni, &i) in x_original.iter().enumerate() {
            for (nj, &j) in y_original.iter().enumerate() {
                digraph.xy[ni * digraph.b + nj] = self.has_xy(i, j);
                digraph.yx[nj * digraph.a + ni] = self.has_yx(j, i);
            }
        }
        Ok(Induced { digraph, x_original, y_original })
    }

    /// Reverses every arc. Classes keep their names.
    pub fn transpose(&self) -> Self {
        let mut t = BipartiteDigraph::empty(self.a, self.b);
        for i in 0..self.a {
            for j in 0..self.b {
                t.xy[i * self.b + j] = self.has_yx(j, i);
                t.yx[j * self.a + i] = self.has_xy(i, j);
            }
        }
        t
    }

    /// Renames X to Y and Y to X, keeping every arc.
    pub fn swap_classes(&self) -> Self {
        BipartiteDigraph { a: self.b, b: self.a, xy: self.yx.clone(), yx: self.xy.clone() }
    }

    /// Class-preserving relabeling: vertex x_i becomes x_{px[i]}, y_j becomes y_{py[j]}.
    pub fn relabel(&self, px: &[usize], py: &[usize]) -> Result<Self> {
        let is_perm = |p: &[usize], n: usize| {
            let mut seen = vec![false; n];
            p.len() == n && p.iter().all(|&k| k < n && !std::mem::replace(&mut seen[k], true))
        };
        if !is_perm(px, self.a) || !is_perm(py, self.b) {
            return Err(Error::InvalidParams("relabeling is not a pair of permutations".into()));
        }
        let mut r = BipartiteDigraph::empty(self.a, self.b);
        for (i, &pi) in px.iter().enumerate() {
            for (j, &pj) in py.iter().enumerate() {
                r.xy[pi * self.b + pj] = self.has_xy(i, j);
                r.yx[pj * self.a + pi] = self.has_yx(j, i);
            }
        }
        Ok(r)
    }

    /// Canonical BDG text.
    pub fn serialize(&self) -> String {
        let mut s = format!("bdg 1\n{} {}\n", self.a, self.b);
        for i in 0..self.a {
            s.extend((0..self.b).map(|j| if self.has_xy(i, j) { '1' } else { '0' }));
            s.push('\n');
        }
        for j in 0..self.b {
            s.extend((0..self.a).map(|i| if self.has_yx(j, i) { '1' } else { '0' }));
            s.push('\n');
        }
        s
    }

    /// BDG text on one line, rows joined by `/`.
    pub fn single_line(&self) -> String {
        self.serialize().trim_end_matches('\n').replace('\n', "/")
    }

    pub fn parse_single_line(s: &str) -> Result<Self> {
        Self::parse(&s.trim().replace('/', "\n"))
    }

    /// Parses BDG text. `#`-prefixed lines are comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.split('\n').enumerate().map(|(n, l)| (n + 1, l)).filter(|(_, l)| !l.starts_with('#'));
        let last_line = text.split('\n').count();
        let err = |line: usize, message: &str| Error::Parse { line, message: message.to_string() };

        let (n, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
        if header != "bdg 1" {
            return Err(err(n, "expected header `bdg 1`"));
        }
        let (n, sizes) = lines.next().ok_or_else(|| err(last_line, "missing size line"))?;
        let parts: Vec<&str> = sizes.split(' ').collect();
        let parse_size = |s: &str| s.parse::<usize>().ok().filter(|&v| v >= 1 && !s.starts_with('+'));
        let (a, b) = match parts.as_slice() {
            [sa, sb] => match (parse_size(sa), parse_size(sb)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(err(n, "expected `<a> <b>` with positive decimal sizes")),
            },
            _ => return Err(err(n, "expected `<a> <b>`")),
        };

        let mut d = BipartiteDigraph::empty(a, b);
        for row in 0..a + b {
            let width = if row < a { b } else { a };
            let (n, line) = lines.next().ok_or_else(|| err(last_line, "missing adjacency row"))?;
            if line.len() != width {
                return Err(err(n, &format!("row length {} but expected {width}", line.len())));
            }
            for (col, c) in line.bytes().enumerate() {
                let bit = match c {
                    b'0' => false,
                    b'1' => true,
                    _ => return Err(err(n, "adjacency rows may only contain '0' and '1'")),
                };
                if row < a {
                    d.xy[row * b + col] = bit;
                } else {
                    d.yx[(row - a) * a + col] = bit;
                }
            }
        }
        for (n, line) in lines {
            if !line.is_empty() {
                return Err(err(n, "unexpected content after adjacency rows"));
            }
        }
        Ok(d)
    }
}
