//! Brute-force ground truth. Nothing here touches the solver code paths or
//! the query counter; every test goes straight to [`Graph::has_edge`].

use crate::claw::Claw;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, NodeWeights};

/// Largest graph the full subset enumeration accepts.
pub const EXHAUSTIVE_LIMIT: usize = 24;

/// `min(α(G), 4)` over the given nodes, by nested scans that stop at the
/// first stable 4-set.
pub fn brute_alpha_min4_within(graph: &Graph, nodes: &[NodeId]) -> usize {
    let e = |a: NodeId, b: NodeId| graph.has_edge(a, b);
    let k = nodes.len();
    let mut best = k.min(1);
    for i in 0..k {
        let a = nodes[i];
        for j in i + 1..k {
            let b = nodes[j];
            if e(a, b) {
                continue;
            }
            best = best.max(2);
            for l in j + 1..k {
                let c = nodes[l];
                if e(a, c) || e(b, c) {
                    continue;
                }
                best = 3;
                for &d in &nodes[l + 1..] {
                    if !e(a, d) && !e(b, d) && !e(c, d) {
                        return 4;
                    }
                }
            }
        }
    }
    best
}

pub fn brute_alpha_min4(graph: &Graph) -> usize {
    let all: Vec<NodeId> = (0..graph.n()).collect();
    brute_alpha_min4_within(graph, &all)
}

/// Exhaustive claw search over every center and every triple of its
/// neighbors.
pub fn brute_is_clawfree(graph: &Graph) -> Option<Claw> {
    for w in 0..graph.n() {
        let nb = graph.neighbors(w);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                for k in j + 1..nb.len() {
                    let (x, y, z) = (nb[i], nb[j], nb[k]);
                    if !graph.has_edge(x, y) && !graph.has_edge(x, z) && !graph.has_edge(y, z) {
                        return Some(Claw::new(w, x, y, z));
                    }
                }
            }
        }
    }
    None
}

/// Maximum weight stable set (ascending ids) and its weight; the empty set
/// counts, so the weight is never negative.
///
/// When the non-negative nodes induce a subgraph with `α <= 3`, every
/// optimum can be trimmed to at most three nodes and the scan over subsets
/// of size `<= 3` is exact. Otherwise small graphs fall back to
/// [`brute_mwss_exhaustive`].
pub fn brute_mwss(graph: &Graph, weights: &NodeWeights) -> Result<(Vec<NodeId>, i64)> {
    check_weights(graph, weights)?;
    let useful: Vec<NodeId> = (0..graph.n()).filter(|&v| weights[v] >= 0).collect();
    if brute_alpha_min4_within(graph, &useful) >= 4 {
        return if graph.n() <= EXHAUSTIVE_LIMIT {
            brute_mwss_exhaustive(graph, weights)
        } else {
            Err(Error::OracleLimit(format!(
                "α >= 4 on {} nodes; exhaustive search stops at {EXHAUSTIVE_LIMIT}",
                graph.n()
            )))
        };
    }
    let n = graph.n();
    let e = |a: NodeId, b: NodeId| graph.has_edge(a, b);
    let w = |v: NodeId| weights[v];
    let mut best: (Vec<NodeId>, i64) = (vec![], 0);
    let mut offer = |set: Vec<NodeId>, weight: i64| {
        if weight > best.1 {
            best = (set, weight);
        }
    };
    for a in 0..n {
        offer(vec![a], w(a));
        for b in a + 1..n {
            if e(a, b) {
                continue;
            }
            offer(vec![a, b], w(a) + w(b));
            for c in b + 1..n {
                if !e(a, c) && !e(b, c) {
                    offer(vec![a, b, c], w(a) + w(b) + w(c));
                }
            }
        }
    }
    Ok(best)
}

/// Maximum weight stable set by enumerating all `2^n` subsets.
pub fn brute_mwss_exhaustive(graph: &Graph, weights: &NodeWeights) -> Result<(Vec<NodeId>, i64)> {
    check_weights(graph, weights)?;
    let n = graph.n();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::OracleLimit(format!(
            "{n} nodes exceeds the exhaustive limit {EXHAUSTIVE_LIMIT}"
        )));
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| graph.has_edge(u, v))
                .fold(0, |m, u| m | 1 << u)
        })
        .collect();
    let mut best = (0u32, 0i64);
    for subset in 0u32..(1u32 << n) {
        let mut weight = 0i64;
        let mut stable = true;
        let mut rest = subset;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if masks[v] & subset != 0 {
                stable = false;
                break;
            }
            weight += weights[v];
        }
        if stable && weight > best.1 {
            best = (subset, weight);
        }
    }
    let set = (0..n).filter(|&v| best.0 >> v & 1 == 1).collect();
    Ok((set, best.1))
}

fn check_weights(graph: &Graph, weights: &NodeWeights) -> Result<()> {
    if weights.len() != graph.n() {
        return Err(Error::WeightLength {
            expected: graph.n(),
            got: weights.len(),
        });
    }
    Ok(())
}
