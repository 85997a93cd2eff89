//! Extremal families and seeded random instances.
//!
//! Random instances use generator `chacha8-v1`: a `ChaCha8Rng` seeded with
//! `seed_from_u64(seed)`, drawing one `f64` in `[0, 1)` per arc slot in
//! enumeration-index order (X→Y row-major, then Y→X row-major); the arc is
//! present when the draw is below the arc probability. Changing any of this
//! changes every seeded instance and is a breaking change.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::conditions::{check, ConditionSpec};
use crate::error::{Error, Result};
use crate::graph::{BipartiteDigraph, Vertex};
use crate::oracle::{brute_cycle, enumerate};

pub const RANDOM_GENERATOR: &str = "chacha8-v1";

/// Rejections allowed in [`random_satisfying`] before repairing a sample.
pub const MAX_REJECTIONS: usize = 100_000;

pub fn complete_bipartite(a: usize, b: usize) -> BipartiteDigraph {
    let mut d = BipartiteDigraph::empty(a, b);
    for i in 0..a {
        for j in 0..b {
            d.add_arc(Vertex::x(i), Vertex::y(j)).expect("in range");
            d.add_arc(Vertex::y(j), Vertex::x(i)).expect("in range");
        }
    }
    d
}

/// Parameters of the two-component family `K*_{1,k+2} ∪ K*_{a−1,b−k−2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fig2Params {
    pub a: usize,
    pub b: usize,
    pub k: usize,
}

/// `K*_{1,k+2} ∪ K*_{a−1,b−k−2}`: x0 with y0..y_{k+1}, and x1..x_{a−1} with
/// the remaining Y-vertices, each component complete, no arcs between them.
pub fn fig2(p: Fig2Params) -> Result<BipartiteDigraph> {
    let Fig2Params { a, b, k } = p;
    if a < 2 || b < a + 2 * k + 2 {
        return Err(Error::InvalidParams(format!("need a ≥ 2 and b ≥ a + 2k + 2 (got a={a}, b={b}, k={k})")));
    }
    let mut d = BipartiteDigraph::empty(a, b);
    let split = k + 2;
    for i in 0..a {
        let ys = if i == 0 { 0..split } else { split..b };
        for j in ys {
            d.add_arc(Vertex::x(i), Vertex::y(j))?;
            d.add_arc(Vertex::y(j), Vertex::x(i))?;
        }
    }
    Ok(d)
}

/// The first digraph in enumeration order with `a = b = 3`, every half-degree
/// equal to 2, and no cycle of length 6.
pub fn fig1_example() -> Result<BipartiteDigraph> {
    static CACHE: OnceLock<std::result::Result<BipartiteDigraph, Error>> = OnceLock::new();
    CACHE.get_or_init(search_fig1).clone()
}

fn search_fig1() -> Result<BipartiteDigraph> {
    for (_, d) in enumerate(3, 3, None)? {
        let two_regular = d.vertices().all(|v| d.out_degree(v) == 2 && d.in_degree(v) == 2);
        if two_regular && brute_cycle(&d, 6)?.is_none() {
            return Ok(d);
        }
    }
    Err(Error::SearchFailed("no 2-regular 3+3 digraph without a 6-cycle".into()))
}

fn fill(rng: &mut ChaCha8Rng, a: usize, b: usize, arc_probability: f64) -> BipartiteDigraph {
    let mut d = BipartiteDigraph::empty(a, b);
    for i in 0..a {
        for j in 0..b {
            if rng.random::<f64>() < arc_probability {
                d.add_arc(Vertex::x(i), Vertex::y(j)).expect("in range");
            }
        }
    }
    for j in 0..b {
        for i in 0..a {
            if rng.random::<f64>() < arc_probability {
                d.add_arc(Vertex::y(j), Vertex::x(i)).expect("in range");
            }
        }
    }
    d
}

/// Each of the `2ab` arcs present independently with `arc_probability`.
pub fn random_digraph(a: usize, b: usize, arc_probability: f64, seed: u64) -> Result<BipartiteDigraph> {
    if a == 0 || b == 0 || !(0.0..=1.0).contains(&arc_probability) {
        return Err(Error::InvalidParams(format!(
            "need a, b ≥ 1 and 0 ≤ p ≤ 1 (got a={a}, b={b}, p={arc_probability})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(fill(&mut rng, a, b, arc_probability))
}

/// Arc probability used for the `attempt`-th sample: cycles through
/// 0.55, 0.60, …, 0.95.
pub fn schedule(attempt: usize) -> f64 {
    0.55 + 0.05 * (attempt % 9) as f64
}

/// A random balanced digraph satisfying A_k*.
///
/// Samples with probabilities from [`schedule`] from one seeded stream until
/// a sample satisfies the condition. After [`MAX_REJECTIONS`] failures the
/// last sample is repaired: for each violating pair `(u, v)` in report
/// order, arcs from `u` to its least-index non-neighbours are added until
/// the pair meets the bound, and the whole check is repeated.
pub fn random_satisfying(a: usize, k: usize, seed: u64) -> Result<BipartiteDigraph> {
    if a < 2 {
        return Err(Error::InvalidParams(format!("need a ≥ 2 (got {a})")));
    }
    let condition = ConditionSpec::AkStar(k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sample = BipartiteDigraph::empty(a, a);
    for attempt in 0..MAX_REJECTIONS {
        sample = fill(&mut rng, a, a, schedule(attempt));
        if check(&sample, condition)?.holds {
            return Ok(sample);
        }
    }
    repair(sample, condition)
}

fn repair(mut d: BipartiteDigraph, condition: ConditionSpec) -> Result<BipartiteDigraph> {
    loop {
        let report = check(&d, condition)?;
        if report.holds {
            return Ok(d);
        }
        for viol in report.violations {
            let (u, v) = (viol.u, viol.v);
            loop {
                if d.has_arc(u, v) || report.threshold.is_met_by(d.out_degree(u) + d.in_degree(v)) {
                    break;
                }
                let target = (0..d.class_size(u.side.opposite()))
                    .map(|i| Vertex { side: u.side.opposite(), index: i })
                    .find(|&w| !d.has_arc(u, w))
                    .expect("u lacks an arc to v, so a non-neighbour exists");
                d.add_arc(u, target)?;
            }
        }
    }
}
