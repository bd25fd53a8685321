//! Immutable simple undirected graphs, node sets, node weights and the
//! counted adjacency probe every solver routine goes through.

use std::cell::Cell;
use std::collections::HashSet;
use std::fmt;
use std::ops::Index;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type NodeId = usize;

/// Largest node count for which membership is a dense bit matrix (2 MiB).
const DENSE_LIMIT: usize = 4096;

#[derive(Clone)]
enum Membership {
    Dense(FixedBitSet),
    Sparse(HashSet<u64>),
}

/// Simple undirected graph on nodes `0..n`.
///
/// Neighbor lists are sorted ascending. Adjacency tests run in constant
/// (expected) time: a bit matrix for small graphs, a hash set of edge keys
/// otherwise.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    m: usize,
    adjacency: Vec<Vec<NodeId>>,
    membership: Membership,
}

#[inline]
fn edge_key(u: NodeId, v: NodeId) -> u64 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    ((a as u64) << 32) | b as u64
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range ids are rejected.
    pub fn new(n: usize, edges: &[(NodeId, NodeId)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::NodeOutOfRange { node: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_adjacency(adjacency))
    }

    /// Graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_adjacency(vec![Vec::new(); n])
    }

    fn from_sorted_adjacency(adjacency: Vec<Vec<NodeId>>) -> Self {
        let n = adjacency.len();
        let degree_sum: usize = adjacency.iter().map(Vec::len).sum();
        let membership = if n <= DENSE_LIMIT {
            let mut bits = FixedBitSet::with_capacity(n * n);
            for (u, list) in adjacency.iter().enumerate() {
                for &v in list {
                    bits.insert(u * n + v);
                }
            }
            Membership::Dense(bits)
        } else {
            let mut keys = HashSet::with_capacity(degree_sum / 2);
            for (u, list) in adjacency.iter().enumerate() {
                keys.extend(list.iter().filter(|&&v| v > u).map(|&v| edge_key(u, v)));
            }
            Membership::Sparse(keys)
        };
        Graph {
            n,
            m: degree_sum / 2,
            adjacency,
            membership,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Uncounted adjacency test. Solver code uses [`SolveCtx::adjacent`].
    #[inline]
    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        if u == v {
            return false;
        }
        match &self.membership {
            Membership::Dense(bits) => bits.contains(u * self.n + v),
            Membership::Sparse(keys) => keys.contains(&edge_key(u, v)),
        }
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_stable(&self, nodes: &[NodeId]) -> bool {
        nodes.iter().enumerate().all(|(i, &u)| {
            nodes[i + 1..]
                .iter()
                .all(|&v| u != v && !self.has_edge(u, v))
        })
    }

    /// The subgraph induced by `keep`, with new ids assigned in ascending
    /// order of the old ids.
    pub fn induced_subgraph(&self, keep: &NodeSet) -> (Graph, IdMap) {
        let mut old_to_new = vec![None; self.n];
        let mut new_to_old = Vec::with_capacity(keep.len());
        for v in (0..self.n).filter(|&v| keep.contains(v)) {
            old_to_new[v] = Some(new_to_old.len());
            new_to_old.push(v);
        }
        let adjacency = new_to_old
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter_map(|&x| old_to_new[x])
                    .collect()
            })
            .collect();
        (
            Graph::from_sorted_adjacency(adjacency),
            IdMap {
                old_to_new,
                new_to_old,
            },
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("adjacency", &self.adjacency)
            .finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

/// Node renumbering produced by [`Graph::induced_subgraph`].
#[derive(Clone, Debug)]
pub struct IdMap {
    pub old_to_new: Vec<Option<NodeId>>,
    pub new_to_old: Vec<NodeId>,
}

impl IdMap {
    pub fn to_old(&self, v: NodeId) -> NodeId {
        self.new_to_old[v]
    }
}

/// Tally of adjacency queries for one solve.
#[derive(Debug, Default)]
pub struct QueryCounter(Cell<u64>);

impl QueryCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self) -> u64 {
        self.0.get()
    }

    pub fn reset(&self) {
        self.0.set(0);
    }
}

/// A graph paired with the counter charged for every adjacency query.
///
/// The counter is borrowed so that routines running on a derived graph (for
/// example after dropping negative-weight nodes) keep charging the same solve.
#[derive(Clone, Copy)]
pub struct SolveCtx<'a> {
    graph: &'a Graph,
    counter: &'a QueryCounter,
}

impl<'a> SolveCtx<'a> {
    pub fn new(graph: &'a Graph, counter: &'a QueryCounter) -> Self {
        SolveCtx { graph, counter }
    }

    #[inline]
    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.graph.n
    }

    /// Adjacency oracle; each call costs exactly one query.
    #[inline]
    pub fn adjacent(&self, u: NodeId, v: NodeId) -> bool {
        debug_assert!(u != v, "adjacency query on a single node {u}");
        debug_assert!(u < self.graph.n && v < self.graph.n);
        self.counter.0.set(self.counter.0.get() + 1);
        self.graph.has_edge(u, v)
    }

    pub fn queries(&self) -> u64 {
        self.counter.get()
    }

    /// Same counter, different graph.
    pub fn rebind<'b>(&self, graph: &'b Graph) -> SolveCtx<'b>
    where
        'a: 'b,
    {
        SolveCtx {
            graph,
            counter: self.counter,
        }
    }
}

/// Outcome of a clique test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliqueVerdict {
    Clique,
    /// First non-adjacent pair in list order.
    Witness(NodeId, NodeId),
}

/// Outcome of a nullity test between two disjoint sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NullVerdict {
    Null,
    /// First crossing edge `(a, b)` with `a` from the first set.
    Edge(NodeId, NodeId),
}

impl SolveCtx<'_> {
    /// Checks all pairs of `nodes`; costs at most `k(k-1)/2` queries.
    pub fn clique_or_witness(&self, nodes: &[NodeId]) -> CliqueVerdict {
        for (i, &u) in nodes.iter().enumerate() {
            for &v in &nodes[i + 1..] {
                if !self.adjacent(u, v) {
                    return CliqueVerdict::Witness(u, v);
                }
            }
        }
        CliqueVerdict::Clique
    }

    /// Tests whether no edge joins `a` and `b`.
    pub fn null_to(&self, a: &NodeSet, b: &NodeSet) -> Result<NullVerdict> {
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        if let Some(v) = small.first_common(large) {
            return Err(Error::Overlap(v));
        }
        for x in a.iter() {
            for y in b.iter() {
                if self.adjacent(x, y) {
                    return Ok(NullVerdict::Edge(x, y));
                }
            }
        }
        Ok(NullVerdict::Null)
    }
}

/// Ordered set of distinct nodes with constant-time membership.
#[derive(Clone)]
pub struct NodeSet {
    ids: Vec<NodeId>,
    members: FixedBitSet,
}

impl NodeSet {
    pub fn empty(universe: usize) -> Self {
        NodeSet {
            ids: Vec::new(),
            members: FixedBitSet::with_capacity(universe),
        }
    }

    /// All nodes `0..universe`, ascending.
    pub fn full(universe: usize) -> Self {
        let mut members = FixedBitSet::with_capacity(universe);
        members.insert_range(..);
        NodeSet {
            ids: (0..universe).collect(),
            members,
        }
    }

    pub fn new(universe: usize, ids: impl IntoIterator<Item = NodeId>) -> Result<Self> {
        let mut set = Self::empty(universe);
        for v in ids {
            if v >= universe {
                return Err(Error::NodeOutOfRange {
                    node: v,
                    n: universe,
                });
            }
            if !set.insert(v) {
                return Err(Error::DuplicateNode(v));
            }
        }
        Ok(set)
    }

    /// Appends `v`; returns false (and leaves the set unchanged) if present.
    pub fn insert(&mut self, v: NodeId) -> bool {
        if self.members.put(v) {
            return false;
        }
        self.ids.push(v);
        true
    }

    #[inline]
    pub fn contains(&self, v: NodeId) -> bool {
        self.members.contains(v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[NodeId] {
        &self.ids
    }

    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.ids.iter().copied()
    }

    pub fn universe(&self) -> usize {
        self.members.len()
    }

    /// First node (in list order) shared with `other`.
    pub fn first_common(&self, other: &NodeSet) -> Option<NodeId> {
        self.iter().find(|&v| other.contains(v))
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.ids).finish()
    }
}

impl PartialEq for NodeSet {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids
    }
}

impl Eq for NodeSet {}

/// Signed integer node weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeWeights(Vec<i64>);

impl NodeWeights {
    /// Bound on |w| so that sums of a few weights cannot overflow.
    pub const MAX_ABS: i64 = 1 << 61;

    pub fn new(weights: Vec<i64>) -> Result<Self> {
        for (node, &weight) in weights.iter().enumerate() {
            if weight.unsigned_abs() > Self::MAX_ABS as u64 {
                return Err(Error::WeightRange { node, weight });
            }
        }
        Ok(NodeWeights(weights))
    }

    pub fn unit(n: usize) -> Self {
        NodeWeights(vec![1; n])
    }

    pub fn for_graph(graph: &Graph, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != graph.n() {
            return Err(Error::WeightLength {
                expected: graph.n(),
                got: weights.len(),
            });
        }
        Self::new(weights)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn total(&self, nodes: &[NodeId]) -> i64 {
        nodes.iter().map(|&v| self.0[v]).sum()
    }

    /// Weights of the nodes kept by `map`, in new-id order.
    pub fn restrict(&self, map: &IdMap) -> NodeWeights {
        NodeWeights(map.new_to_old.iter().map(|&v| self.0[v]).collect())
    }
}

impl Index<NodeId> for NodeWeights {
    type Output = i64;

    fn index(&self, v: NodeId) -> &i64 {
        &self.0[v]
    }
}
