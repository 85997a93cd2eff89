#![allow(dead_code)]

use bdg_core::compatible::verify;
use bdg_core::{BipartiteDigraph, Matching, Vertex, VertexSet};

pub fn seq(s: &str) -> Vec<Vertex> {
    s.split_whitespace().map(|t| t.parse().unwrap()).collect()
}

pub fn two_k11() -> BipartiteDigraph {
    BipartiteDigraph::parse("bdg 1\n2 2\n10\n01\n10\n01\n").unwrap()
}

/// All orderings of all nonempty subsets of `items`.
pub fn arrangements(items: &[usize]) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for k in 0..items.len() {
            if !used[k] {
                used[k] = true;
                cur.push(items[k]);
                rec(items, used, cur, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(items, &mut vec![false; items.len()], &mut Vec::new(), &mut out);
    out
}

pub fn expand(m: &Matching, xs: &[usize]) -> Vec<Vertex> {
    xs.iter().flat_map(|&i| [Vertex::x(i), Vertex::y(m.mate_of_x(i).unwrap())]).collect()
}

/// Every compatible cycle, each listed once starting from its least X-index.
pub fn all_compatible_cycles(d: &BipartiteDigraph, m: &Matching) -> Vec<Vec<Vertex>> {
    let xs: Vec<usize> = (0..d.a()).collect();
    arrangements(&xs)
        .into_iter()
        .filter(|arr| arr.iter().all(|&i| arr[0] <= i))
        .map(|arr| expand(m, &arr))
        .filter(|s| verify(d, m, s, true))
        .collect()
}

/// Every nonempty compatible path avoiding `forbidden`.
pub fn all_compatible_paths(d: &BipartiteDigraph, m: &Matching, forbidden: &VertexSet) -> Vec<Vec<Vertex>> {
    let xs: Vec<usize> = (0..d.a())
        .filter(|&i| !forbidden.contains(Vertex::x(i)) && !forbidden.contains(Vertex::y(m.mate_of_x(i).unwrap())))
        .collect();
    arrangements(&xs).into_iter().map(|arr| expand(m, &arr)).filter(|s| verify(d, m, s, false)).collect()
}

/// Whether some permutation σ has x_i → y_σ(i) for all i (a ≤ b).
pub fn sdr_exists(d: &BipartiteDigraph) -> bool {
    let ys: Vec<usize> = (0..d.b()).collect();
    arrangements(&ys)
        .into_iter()
        .filter(|arr| arr.len() == d.a())
        .any(|arr| arr.iter().enumerate().all(|(i, &j)| d.has_xy(i, j)))
}

/// Cycles of length `2t` counted by explicit enumeration of ordered X and Y
/// tuples, then divided by the `t` rotations.
pub fn count_cycles_by_tuples(d: &BipartiteDigraph, t: usize) -> u64 {
    let xs: Vec<usize> = (0..d.a()).collect();
    let ys: Vec<usize> = (0..d.b()).collect();
    let xt: Vec<Vec<usize>> = arrangements(&xs).into_iter().filter(|v| v.len() == t).collect();
    let yt: Vec<Vec<usize>> = arrangements(&ys).into_iter().filter(|v| v.len() == t).collect();
    let mut n = 0;
    for xv in &xt {
        for yv in &yt {
            let ok = (0..t).all(|k| d.has_xy(xv[k], yv[k]) && d.has_yx(yv[k], xv[(k + 1) % t]));
            if ok {
                n += 1;
            }
        }
    }
    n / t as u64
}

/// Rotates a cycle so that it starts at its least-index X-vertex.
pub fn canonical(mut s: Vec<Vertex>) -> Vec<Vertex> {
    let start = (0..s.len()).step_by(2).min_by_key(|&p| s[p].index).unwrap_or(0);
    s.rotate_left(start);
    s
}
