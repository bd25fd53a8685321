//! Claws, locality, and the classification of nodes around a small stable
//! set `T` by which members of `T` they see.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, NodeSet, SolveCtx};

/// Induced `K_{1,3}`: `center` adjacent to three pairwise non-adjacent leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claw {
    pub center: NodeId,
    /// Ascending.
    pub leaves: [NodeId; 3],
}

impl Claw {
    pub fn new(center: NodeId, a: NodeId, b: NodeId, c: NodeId) -> Self {
        let mut leaves = [a, b, c];
        leaves.sort_unstable();
        Claw { center, leaves }
    }

    /// Re-checks the four-node pattern against `graph`.
    pub fn is_valid_in(&self, graph: &Graph) -> bool {
        let [a, b, c] = self.leaves;
        a != b
            && b != c
            && self
                .leaves
                .iter()
                .all(|&l| l != self.center && graph.has_edge(self.center, l))
            && graph.is_stable(&self.leaves)
    }
}

impl fmt::Display for Claw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.leaves;
        write!(
            f,
            "claw centered at {} with leaves {a}, {b}, {c}",
            self.center
        )
    }
}

/// Finds a claw by looking, center by center, for a stable triple among the
/// neighbors. Validation only: worst case is `O(sum deg^3)`.
pub fn find_claw(graph: &Graph) -> Option<Claw> {
    for center in 0..graph.n() {
        let nbrs = graph.neighbors(center);
        if nbrs.len() < 3 {
            continue;
        }
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if graph.has_edge(a, b) {
                    continue;
                }
                if let Some(&c) = nbrs
                    .iter()
                    .find(|&&c| c != a && c != b && !graph.has_edge(a, c) && !graph.has_edge(b, c))
                {
                    return Some(Claw::new(center, a, b, c));
                }
            }
        }
    }
    None
}

/// Some `u` with `nodes ⊆ N[u]`, scanning `u` ascending; `O(n·|nodes|)`.
pub fn is_local(graph: &Graph, nodes: &[NodeId]) -> Option<NodeId> {
    (0..graph.n()).find(|&u| nodes.iter().all(|&x| x == u || graph.has_edge(u, x)))
}

/// Partition of `V \ T` for a stable set `T` of two or three nodes.
///
/// `free(i)` holds the nodes whose only neighbor in `T` is `T[i]`,
/// `shared(i, j)` those adjacent to exactly `T[i]` and `T[j]`, and
/// `super_free()` those with no neighbor in `T`.
#[derive(Clone, Debug)]
pub struct Classification {
    terminals: Vec<NodeId>,
    free: Vec<NodeSet>,
    shared: Vec<NodeSet>,
    super_free: NodeSet,
}

#[inline]
fn pair_slot(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (0, 1) => 0,
        (0, 2) => 1,
        (1, 2) => 2,
        _ => panic!("no terminal pair ({i}, {j})"),
    }
}

impl Classification {
    pub fn terminals(&self) -> &[NodeId] {
        &self.terminals
    }

    pub fn free(&self, i: usize) -> &NodeSet {
        &self.free[i]
    }

    pub fn shared(&self, i: usize, j: usize) -> &NodeSet {
        &self.shared[pair_slot(i, j)]
    }

    pub fn super_free(&self) -> &NodeSet {
        &self.super_free
    }

    /// All classes, for partition checks.
    pub fn classes(&self) -> impl Iterator<Item = &NodeSet> {
        self.free
            .iter()
            .chain(self.shared.iter())
            .chain(std::iter::once(&self.super_free))
    }

    /// Recomputes every node's class with uncounted adjacency tests.
    pub fn verify_partition(&self, graph: &Graph) -> bool {
        let k = self.terminals.len();
        let mut seen = vec![0u8; graph.n()];
        for class in self.classes() {
            for v in class.iter() {
                seen[v] += 1;
            }
        }
        for &t in &self.terminals {
            if seen[t] != 0 {
                return false;
            }
            seen[t] = 1;
        }
        if seen.iter().any(|&c| c != 1) {
            return false;
        }
        let sees = |v: NodeId| -> Vec<usize> {
            (0..k)
                .filter(|&i| graph.has_edge(v, self.terminals[i]))
                .collect()
        };
        (0..k).all(|i| self.free[i].iter().all(|v| sees(v) == [i]))
            && (0..k)
                .all(|i| (i + 1..k).all(|j| self.shared(i, j).iter().all(|v| sees(v) == [i, j])))
            && self.super_free.iter().all(|v| sees(v).is_empty())
    }
}

/// Classifies `V \ T` by adjacency to each node of `T` (at most `|T|` queries
/// per node). A node adjacent to all three nodes of `T` is the center of a
/// claw and is reported as [`Error::NotClawFree`].
pub fn classify(ctx: &SolveCtx<'_>, terminals: &[NodeId]) -> Result<Classification> {
    let k = terminals.len();
    if !(2..=3).contains(&k) {
        return Err(Error::StableSetSize(k));
    }
    let n = ctx.n();
    let t_set = NodeSet::new(n, terminals.iter().copied())?;
    for (i, &a) in terminals.iter().enumerate() {
        for &b in &terminals[i + 1..] {
            if ctx.adjacent(a, b) {
                return Err(Error::NotStable(a, b));
            }
        }
    }

    let mut free = vec![NodeSet::empty(n); k];
    let mut shared = vec![NodeSet::empty(n); if k == 3 { 3 } else { 1 }];
    let mut super_free = NodeSet::empty(n);
    for v in 0..n {
        if t_set.contains(v) {
            continue;
        }
        let mut hits = [0usize; 3];
        let mut count = 0;
        for (i, &t) in terminals.iter().enumerate() {
            if ctx.adjacent(v, t) {
                hits[count] = i;
                count += 1;
            }
        }
        match count {
            0 => super_free.insert(v),
            1 => free[hits[0]].insert(v),
            2 => shared[pair_slot(hits[0], hits[1])].insert(v),
            _ => {
                return Err(Error::NotClawFree(Claw::new(
                    v,
                    terminals[0],
                    terminals[1],
                    terminals[2],
                )))
            }
        };
    }

    let cls = Classification {
        terminals: terminals.to_vec(),
        free,
        shared,
        super_free,
    };
    debug_assert!(cls.verify_partition(ctx.graph()));
    Ok(cls)
}
