//! Maximum weight stable sets for claw-free graphs with `α(G) <= 3`.
//!
//! The orchestration in [`mwss_alpha3`] first finds a stable set of size
//! `min(α, 4)`. When that set `T` has three nodes, every stable triple
//! disjoint from `T` alternates with `T` in one of a handful of shapes, and
//! each shape reduces to a search over three sets `X × Y × Z` with `Z` a
//! clique, answered by [`weighted_three_sets`].

use std::cmp::Ordering;

use crate::cardinality::{check_clique, check_disjoint, probe_alpha, AlphaProbe};
use crate::claw::{Classification, Claw};
use crate::error::{Error, Result};
use crate::graph::{CliqueVerdict, NodeId, NodeSet, NodeWeights, SolveCtx};

/// Nodes of a clique `Z` sorted by non-increasing weight (ties by id), with
/// the prefix counts `h(u, i) = |N(u) ∩ {z_1..z_i}|` for each probe node.
#[derive(Clone, Debug)]
pub struct OrderedCliquePrefix {
    order: Vec<NodeId>,
    probes: Vec<NodeId>,
    /// `probes.len()` rows of `p + 1` counts each.
    counts: Vec<u32>,
}

impl OrderedCliquePrefix {
    /// Costs `|probes| · |Z|` adjacency queries.
    pub fn build<'s>(
        ctx: &SolveCtx<'_>,
        weights: &NodeWeights,
        clique: &NodeSet,
        probes: impl IntoIterator<Item = &'s NodeSet>,
    ) -> Self {
        let mut order = clique.as_slice().to_vec();
        order.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));
        let probes: Vec<NodeId> = probes.into_iter().flat_map(NodeSet::iter).collect();
        let p = order.len();
        let mut counts = Vec::with_capacity(probes.len() * (p + 1));
        for &u in &probes {
            let mut seen = 0u32;
            counts.push(0);
            for &z in &order {
                if ctx.adjacent(u, z) {
                    seen += 1;
                }
                counts.push(seen);
            }
        }
        OrderedCliquePrefix {
            order,
            probes,
            counts,
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `z_1..z_p`.
    pub fn order(&self) -> &[NodeId] {
        &self.order
    }

    pub fn probes(&self) -> &[NodeId] {
        &self.probes
    }

    /// `h(probes[row], i)` for `i` in `0..=p`.
    #[inline]
    pub fn count(&self, row: usize, i: usize) -> usize {
        self.counts[row * (self.order.len() + 1) + i] as usize
    }

    /// Whether some node of the prefix `{z_1..z_i}` misses both probes.
    #[inline]
    pub fn prefix_is_free(&self, row_x: usize, row_y: usize, i: usize) -> bool {
        self.count(row_x, i) + self.count(row_y, i) < i
    }

    /// Smallest `k` in `1..=p` whose prefix is free for the (non-adjacent)
    /// probe pair, i.e. the position of the heaviest node of `Z` stable with
    /// both. The predicate is monotone in `k` on claw-free graphs, so this is
    /// a binary search.
    pub fn heaviest_free(&self, row_x: usize, row_y: usize) -> Option<usize> {
        let p = self.order.len();
        if !self.prefix_is_free(row_x, row_y, p) {
            return None;
        }
        let (mut lo, mut hi) = (1, p);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.prefix_is_free(row_x, row_y, mid) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        Some(lo)
    }
}

/// A stable set with its total weight; `nodes` ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedSet {
    pub nodes: Vec<NodeId>,
    pub weight: i64,
}

impl WeightedSet {
    pub fn new(mut nodes: Vec<NodeId>, weights: &NodeWeights) -> Self {
        nodes.sort_unstable();
        let weight = weights.total(&nodes);
        WeightedSet { nodes, weight }
    }

    pub fn empty() -> Self {
        WeightedSet {
            nodes: Vec::new(),
            weight: 0,
        }
    }

    /// Heavier first, then lexicographically smaller node list.
    fn rank(&self, other: &Self) -> Ordering {
        other
            .weight
            .cmp(&self.weight)
            .then_with(|| self.nodes.cmp(&other.nodes))
    }
}

fn keep_best(best: &mut Option<WeightedSet>, candidate: Option<WeightedSet>) {
    if let Some(c) = candidate {
        if best.as_ref().is_none_or(|b| c.rank(b) == Ordering::Less) {
            *best = Some(c);
        }
    }
}

/// Maximum weight stable `(x, y, z)` in `X × Y × Z`, `Z` a clique.
///
/// Each non-adjacent probe pair costs one query plus a binary search over the
/// prefix table. Ties go to the lexicographically smallest `(x, y, z)`.
pub fn weighted_three_sets(
    ctx: &SolveCtx<'_>,
    weights: &NodeWeights,
    x: &NodeSet,
    y: &NodeSet,
    z: &NodeSet,
) -> Result<Option<([NodeId; 3], i64)>> {
    if cfg!(debug_assertions) {
        check_disjoint(&[x, y, z])?;
        check_clique(ctx.graph(), z)?;
    }
    if x.is_empty() || y.is_empty() || z.is_empty() {
        return Ok(None);
    }
    let prefix = OrderedCliquePrefix::build(ctx, weights, z, [x, y]);
    let mut best: Option<([NodeId; 3], i64)> = None;
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            if ctx.adjacent(a, b) {
                continue;
            }
            let Some(k) = prefix.heaviest_free(i, x.len() + j) else {
                continue;
            };
            let c = prefix.order()[k - 1];
            if cfg!(debug_assertions) {
                let g = ctx.graph();
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    return Err(Error::Precondition("graph must be claw-free on X ∪ Y ∪ Z"));
                }
            }
            let total = weights[a] + weights[b] + weights[c];
            let better = match best {
                None => true,
                Some((triple, w)) => total > w || (total == w && [a, b, c] < triple),
            };
            if better {
                best = Some(([a, b, c], total));
            }
        }
    }
    Ok(best)
}

/// Heaviest stable set of one or two nodes inside `nodes` (exhaustive pair
/// scan).
pub fn mwss_small(
    ctx: &SolveCtx<'_>,
    weights: &NodeWeights,
    nodes: &[NodeId],
) -> Option<WeightedSet> {
    let mut best = None;
    for (i, &a) in nodes.iter().enumerate() {
        keep_best(&mut best, Some(WeightedSet::new(vec![a], weights)));
        for &b in &nodes[i + 1..] {
            if !ctx.adjacent(a, b) {
                keep_best(&mut best, Some(WeightedSet::new(vec![a, b], weights)));
            }
        }
    }
    best
}

/// Heaviest stable set meeting the stable set `terminals`, assuming `α <= 3`:
/// for each terminal `v`, `v` plus the best set of size `<= 2` among its
/// non-neighbors.
pub fn mwss_intersecting(
    ctx: &SolveCtx<'_>,
    weights: &NodeWeights,
    terminals: &[NodeId],
) -> Result<Option<WeightedSet>> {
    for (i, &a) in terminals.iter().enumerate() {
        for &b in &terminals[i + 1..] {
            if a == b || ctx.adjacent(a, b) {
                return Err(Error::NotStable(a, b));
            }
        }
    }
    let mut best = None;
    for &v in terminals {
        let outside: Vec<NodeId> = (0..ctx.n())
            .filter(|&u| u != v && !ctx.adjacent(u, v))
            .collect();
        keep_best(&mut best, Some(WeightedSet::new(vec![v], weights)));
        if let Some(rest) = mwss_small(ctx, weights, &outside) {
            let mut nodes = rest.nodes;
            nodes.push(v);
            keep_best(&mut best, Some(WeightedSet::new(nodes, weights)));
        }
    }
    Ok(best)
}

fn triple_set(found: Option<([NodeId; 3], i64)>, weights: &NodeWeights) -> Option<WeightedSet> {
    found.map(|(t, _)| WeightedSet::new(t.to_vec(), weights))
}

/// Triples alternating with `T` along a six-node path `(a, x, b, y, c, z)`,
/// over all six orders of `T`.
pub fn mwss_type_path6(
    ctx: &SolveCtx<'_>,
    weights: &NodeWeights,
    cls: &Classification,
) -> Result<Option<WeightedSet>> {
    let mut best = None;
    for (a, b, c) in [
        (0, 1, 2),
        (0, 2, 1),
        (1, 0, 2),
        (1, 2, 0),
        (2, 0, 1),
        (2, 1, 0),
    ] {
        let found = weighted_three_sets(
            ctx,
            weights,
            cls.shared(a, b),
            cls.shared(b, c),
            cls.free(c),
        )?;
        keep_best(&mut best, triple_set(found, weights));
    }
    Ok(best)
}

/// Triples alternating with `T` around a six-node cycle: one node from each
/// of the three shared classes.
///
/// When `shared(t, u)` is not a clique, a non-adjacent pair `v, v'` in it
/// splits `shared(s, u)` into two cliques (neighbors of `v`, neighbors of
/// `v'`); any failure of that split exhibits a claw.
pub fn mwss_type_cycle6(
    ctx: &SolveCtx<'_>,
    weights: &NodeWeights,
    cls: &Classification,
) -> Result<Option<WeightedSet>> {
    let (st, su, tu) = (cls.shared(0, 1), cls.shared(0, 2), cls.shared(1, 2));
    if st.is_empty() || su.is_empty() || tu.is_empty() {
        return Ok(None);
    }
    let (v, v2) = match ctx.clique_or_witness(tu.as_slice()) {
        CliqueVerdict::Clique => {
            let found = weighted_three_sets(ctx, weights, st, su, tu)?;
            return Ok(triple_set(found, weights));
        }
        CliqueVerdict::Witness(v, v2) => (v, v2),
    };
    let t = cls.terminals();
    let (s, u) = (t[0], t[2]);
    let n = ctx.n();
    let mut near_v = NodeSet::empty(n);
    let mut near_v2 = NodeSet::empty(n);
    for c in su.iter() {
        match (ctx.adjacent(c, v), ctx.adjacent(c, v2)) {
            (true, false) => near_v.insert(c),
            (false, true) => near_v2.insert(c),
            (false, false) => return Err(Error::NotClawFree(Claw::new(u, c, v, v2))),
            (true, true) => return Err(Error::NotClawFree(Claw::new(c, s, v, v2))),
        };
    }
    if cfg!(debug_assertions) {
        let g = ctx.graph();
        for (part, other) in [(&near_v, v2), (&near_v2, v)] {
            let ids = part.as_slice();
            for (i, &p) in ids.iter().enumerate() {
                if let Some(&q) = ids[i + 1..].iter().find(|&&q| !g.has_edge(p, q)) {
                    return Err(Error::NotClawFree(Claw::new(u, p, q, other)));
                }
            }
        }
    }
    let mut best = None;
    for part in [&near_v, &near_v2] {
        let found = weighted_three_sets(ctx, weights, st, tu, part)?;
        keep_best(&mut best, triple_set(found, weights));
    }
    Ok(best)
}

/// Triples whose alternation with `T` includes a two-node path `(a, z)`:
/// the remaining terminals `b, c` pair with two free nodes, a four-node path
/// (either end), or a four-node cycle through `shared(b, c)`.
pub fn mwss_type_iii(
    ctx: &SolveCtx<'_>,
    weights: &NodeWeights,
    cls: &Classification,
) -> Result<Option<WeightedSet>> {
    let mut best = None;
    for (a, b, c) in [(0, 1, 2), (1, 0, 2), (2, 0, 1)] {
        let lone = cls.free(a);
        if lone.is_empty() {
            continue;
        }
        let bridge = cls.shared(b, c);
        for (x, y) in [
            (cls.free(b), cls.free(c)),
            (bridge, cls.free(c)),
            (bridge, cls.free(b)),
        ] {
            let found = weighted_three_sets(ctx, weights, x, y, lone)?;
            keep_best(&mut best, triple_set(found, weights));
        }

        if bridge.len() < 2 {
            continue;
        }
        if cfg!(debug_assertions) {
            let g = ctx.graph();
            for z in lone.iter() {
                if let Some(x) = bridge.iter().find(|&x| g.has_edge(z, x)) {
                    let t = cls.terminals();
                    return Err(Error::NotClawFree(Claw::new(x, z, t[b], t[c])));
                }
            }
        }
        let heaviest = lone
            .iter()
            .min_by(|&p, &q| weights[q].cmp(&weights[p]).then(p.cmp(&q)))
            .expect("non-empty");
        let ids = bridge.as_slice();
        let mut pair: Option<WeightedSet> = None;
        for (i, &p) in ids.iter().enumerate() {
            for &q in &ids[i + 1..] {
                if !ctx.adjacent(p, q) {
                    keep_best(&mut pair, Some(WeightedSet::new(vec![p, q], weights)));
                }
            }
        }
        if let Some(pair) = pair {
            let mut nodes = pair.nodes;
            nodes.push(heaviest);
            keep_best(&mut best, Some(WeightedSet::new(nodes, weights)));
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// A stable 4-set, ascending ids.
    AlphaAtLeast4 { witness: [NodeId; 4] },
    Optimal {
        /// Ascending ids.
        set: Vec<NodeId>,
        weight: i64,
        /// Number of negative-weight nodes removed before solving.
        dropped_negative: usize,
    },
}

/// Either a stable 4-set, or a maximum weight stable set.
///
/// Negative-weight nodes are removed first and the empty set is always a
/// candidate, so the reported weight is never negative.
pub fn mwss_alpha3(ctx: &SolveCtx<'_>, weights: &NodeWeights) -> Result<SolveOutcome> {
    let graph = ctx.graph();
    if weights.len() != graph.n() {
        return Err(Error::WeightLength {
            expected: graph.n(),
            got: weights.len(),
        });
    }
    let keep = NodeSet::new(graph.n(), (0..graph.n()).filter(|&v| weights[v] >= 0))?;
    let dropped_negative = graph.n() - keep.len();
    let reduced = (dropped_negative > 0).then(|| graph.induced_subgraph(&keep));
    let (sub_ctx, sub_weights, to_old) = match &reduced {
        Some((g, map)) => (ctx.rebind(g), weights.restrict(map), Some(map)),
        None => (*ctx, weights.clone(), None),
    };
    let original_id = |v: NodeId| to_old.map_or(v, |m| m.to_old(v));

    let probe = probe_alpha(&sub_ctx)?;
    let mut best = Some(WeightedSet::empty());
    match &probe {
        AlphaProbe::Quad(quad) => {
            let mut witness = quad.map(original_id);
            witness.sort_unstable();
            if !graph.is_stable(&witness) {
                return Err(Error::Precondition(
                    "graph must be claw-free (4-set witness is not stable)",
                ));
            }
            return Ok(SolveOutcome::AlphaAtLeast4 { witness });
        }
        AlphaProbe::Empty | AlphaProbe::Clique(_) | AlphaProbe::Pair(..) => {
            let all: Vec<NodeId> = (0..sub_ctx.n()).collect();
            keep_best(&mut best, mwss_small(&sub_ctx, &sub_weights, &all));
        }
        AlphaProbe::Triple(cls) => {
            if !cls.super_free().is_empty() {
                return Err(Error::Precondition("α = 3 leaves no super-free node"));
            }
            keep_best(
                &mut best,
                mwss_intersecting(&sub_ctx, &sub_weights, cls.terminals())?,
            );
            keep_best(&mut best, mwss_type_path6(&sub_ctx, &sub_weights, cls)?);
            keep_best(&mut best, mwss_type_cycle6(&sub_ctx, &sub_weights, cls)?);
            keep_best(&mut best, mwss_type_iii(&sub_ctx, &sub_weights, cls)?);
            let all: Vec<NodeId> = (0..sub_ctx.n()).collect();
            keep_best(&mut best, mwss_small(&sub_ctx, &sub_weights, &all));
        }
    }

    let best = best.expect("empty set is always a candidate");
    let mut set: Vec<NodeId> = best.nodes.iter().map(|&v| original_id(v)).collect();
    set.sort_unstable();
    if !graph.is_stable(&set) {
        return Err(Error::Precondition(
            "graph must be claw-free (solution is not stable)",
        ));
    }
    assert_eq!(weights.total(&set), best.weight);
    Ok(SolveOutcome::Optimal {
        set,
        weight: best.weight,
        dropped_negative,
    })
}
