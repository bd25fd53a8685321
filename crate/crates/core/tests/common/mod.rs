#![allow(dead_code)]

use clawfree::generate::{generate, line_graph, GenKind, GenSpec};
use clawfree::oracle::brute_is_clawfree;
use clawfree::{Graph, NodeId, NodeSet, NodeWeights};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Line graph of a random host graph.
fn random_line_graph(rng: &mut impl Rng, max_n: usize) -> Graph {
    let host_n = rng.gen_range(2..=7);
    let p = rng.gen_range(0.2..0.9);
    let mut host = Vec::new();
    for a in 0..host_n {
        for b in a + 1..host_n {
            if rng.gen_bool(p) {
                host.push((a, b));
            }
        }
    }
    host.shuffle(rng);
    host.truncate(max_n.max(1));
    line_graph(host_n, &host).unwrap()
}

/// Dense random graph, resampled until claw-free.
fn dense_clawfree(rng: &mut impl Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(1..=max_n.min(14));
        let p = rng.gen_range(0.5..0.95);
        let g = gnp(rng, n, p);
        if brute_is_clawfree(&g).is_none() {
            return g;
        }
    }
}

fn generated(rng: &mut impl Rng, max_n: usize) -> Graph {
    let seed = rng.gen();
    let kind = match rng.gen_range(0..3) {
        0 => {
            let leaves = rng.gen_range(3..=10);
            let edges = rng.gen_range(3..=(3 * leaves + 3).min(max_n.max(3)));
            GenKind::LineGraphCover3 { edges, leaves }
        }
        1 => GenKind::ComplementTriangleFree {
            n: rng.gen_range(1..=max_n.max(1)),
            density: rng.gen_range(0.0..1.0),
        },
        _ => GenKind::Cycle {
            n: rng.gen_range(3..=max_n.clamp(3, 12)),
        },
    };
    generate(&GenSpec {
        kind,
        weights: (1, 1),
        seed,
    })
    .unwrap()
    .graph
}

/// A random claw-free graph on at most about `max_n` nodes, drawn from a
/// mix of constructions and then possibly thinned to an induced subgraph.
pub fn random_clawfree(rng: &mut impl Rng, max_n: usize) -> Graph {
    let g = match rng.gen_range(0..3) {
        0 => random_line_graph(rng, max_n),
        1 => dense_clawfree(rng, max_n),
        _ => generated(rng, max_n),
    };
    if g.n() > 0 && rng.gen_bool(0.3) {
        let keep = NodeSet::new(g.n(), (0..g.n()).filter(|_| rng.gen_bool(0.8))).unwrap();
        return g.induced_subgraph(&keep).0;
    }
    g
}

pub fn random_weights(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> NodeWeights {
    NodeWeights::new((0..n).map(|_| rng.gen_range(lo..=hi)).collect()).unwrap()
}

pub fn is_clique(g: &Graph, nodes: &[NodeId]) -> bool {
    nodes
        .iter()
        .enumerate()
        .all(|(i, &a)| nodes[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// All stable sets of size exactly `k`, ascending tuples.
pub fn stable_sets_of_size(g: &Graph, k: usize) -> Vec<Vec<NodeId>> {
    fn go(g: &Graph, k: usize, start: usize, cur: &mut Vec<NodeId>, out: &mut Vec<Vec<NodeId>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..g.n() {
            if cur.iter().all(|&u| !g.has_edge(u, v)) {
                cur.push(v);
                go(g, k, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, k, 0, &mut Vec::new(), &mut out);
    out
}

/// A random maximal clique grown from a random start node.
pub fn random_clique(rng: &mut impl Rng, g: &Graph) -> Vec<NodeId> {
    let mut order: Vec<NodeId> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut clique: Vec<NodeId> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique
}

pub fn node_set(n: usize, ids: &[NodeId]) -> NodeSet {
    NodeSet::new(n, ids.iter().copied()).unwrap()
}
