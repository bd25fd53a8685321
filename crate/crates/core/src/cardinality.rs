//! Stable sets of size `min(α, 4)` in claw-free graphs using `O(m)`
//! adjacency queries.

use crate::claw::{classify, Classification};
use crate::error::{Error, Result};
use crate::graph::{CliqueVerdict, Graph, NodeId, NodeSet, SolveCtx};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaStatus {
    /// `α(G) = k` for `k <= 3`.
    Exact(usize),
    AtLeast4,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableSetReport {
    /// Ascending node ids.
    pub set: Vec<NodeId>,
    pub alpha: AlphaStatus,
}

#[derive(Clone, Debug)]
pub enum ExtendThree {
    Triple([NodeId; 3]),
    AlphaIs2,
}

#[derive(Clone, Debug)]
pub enum ExtendFour {
    Quad([NodeId; 4]),
    /// No stable 4-set exists; carries the classification around the triple.
    AlphaIs3(Classification),
}

/// Result of the full cardinality probe, keeping whatever structure the
/// weighted solver reuses.
#[derive(Clone, Debug)]
pub enum AlphaProbe {
    Empty,
    Clique(NodeId),
    Pair(NodeId, NodeId),
    Triple(Classification),
    Quad([NodeId; 4]),
}

impl AlphaProbe {
    pub fn report(&self) -> StableSetReport {
        let (mut set, alpha) = match self {
            AlphaProbe::Empty => (vec![], AlphaStatus::Exact(0)),
            AlphaProbe::Clique(v) => (vec![*v], AlphaStatus::Exact(1)),
            AlphaProbe::Pair(s, t) => (vec![*s, *t], AlphaStatus::Exact(2)),
            AlphaProbe::Triple(cls) => (cls.terminals().to_vec(), AlphaStatus::Exact(3)),
            AlphaProbe::Quad(q) => (q.to_vec(), AlphaStatus::AtLeast4),
        };
        set.sort_unstable();
        StableSetReport { set, alpha }
    }
}

/// A non-adjacent pair, or `None` when the graph is complete. Uses degrees
/// only, no adjacency queries.
pub fn stable_pair(graph: &Graph) -> Option<(NodeId, NodeId)> {
    let n = graph.n();
    let v = (0..n).find(|&v| graph.degree(v) + 1 < n)?;
    // first id missing from the sorted list N(v) ∪ {v}
    let mut expected = 0;
    for &x in graph.neighbors(v) {
        if expected == v {
            expected += 1;
        }
        if x != expected {
            break;
        }
        expected += 1;
    }
    if expected == v {
        expected += 1;
    }
    Some((v, expected))
}

/// `|N(u) ∩ Z|` for each `u` of `probes`, in list order.
fn clique_hits(ctx: &SolveCtx<'_>, probes: &NodeSet, z: &NodeSet) -> Vec<usize> {
    probes
        .iter()
        .map(|u| z.iter().filter(|&c| ctx.adjacent(u, c)).count())
        .collect()
}

fn first_free_in(ctx: &SolveCtx<'_>, z: &NodeSet, avoid: &[NodeId]) -> Option<NodeId> {
    z.iter()
        .find(|&c| avoid.iter().all(|&a| !ctx.adjacent(a, c)))
}

pub(crate) fn check_disjoint(sets: &[&NodeSet]) -> Result<()> {
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            if a.first_common(b).is_some() {
                return Err(Error::Precondition("sets must be pairwise disjoint"));
            }
        }
    }
    Ok(())
}

pub(crate) fn check_clique(graph: &Graph, z: &NodeSet) -> Result<()> {
    let ids = z.as_slice();
    for (i, &a) in ids.iter().enumerate() {
        if ids[i + 1..].iter().any(|&b| !graph.has_edge(a, b)) {
            return Err(Error::Precondition("Z must be a clique"));
        }
    }
    Ok(())
}

pub(crate) fn check_null(
    graph: &Graph,
    a: &NodeSet,
    b: &NodeSet,
    what: &'static str,
) -> Result<()> {
    if a.iter().any(|x| b.iter().any(|y| graph.has_edge(x, y))) {
        return Err(Error::Precondition(what));
    }
    Ok(())
}

/// A stable `(x, y, z)` from `X × Y × Z` where `Z` is a clique, or `None`.
///
/// With `h(u) = |N(u) ∩ Z|`, a non-adjacent pair `(x, y)` extends into `Z`
/// exactly when `h(x) + h(y) < |Z|` (claw-freeness rules out a common
/// neighbor in `Z` alongside a common non-neighbor).
pub fn three_sets_stable(
    ctx: &SolveCtx<'_>,
    x: &NodeSet,
    y: &NodeSet,
    z: &NodeSet,
) -> Result<Option<[NodeId; 3]>> {
    if cfg!(debug_assertions) {
        check_disjoint(&[x, y, z])?;
        check_clique(ctx.graph(), z)?;
    }
    if x.is_empty() || y.is_empty() || z.is_empty() {
        return Ok(None);
    }
    let hx = clique_hits(ctx, x, z);
    let hy = clique_hits(ctx, y, z);
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            if ctx.adjacent(a, b) || hx[i] + hy[j] >= z.len() {
                continue;
            }
            if let Some(c) = first_free_in(ctx, z, &[a, b]) {
                return Ok(Some([a, b, c]));
            }
            // unreachable on claw-free input: the counts guarantee a free node
            return Err(Error::Precondition("graph must be claw-free on X ∪ Y ∪ Z"));
        }
    }
    Ok(None)
}

/// A stable `(x, y, z, w)` from `X × Y × Z × W`, given `Z` a clique, `W` null
/// to `Z`, `X` null to `Y` and `W` non-empty.
///
/// For each `w` the candidates shrink to non-neighbors of `w`; since `X` is
/// null to `Y`, the two candidates with fewest neighbors in `Z` decide.
pub fn four_sets_stable(
    ctx: &SolveCtx<'_>,
    x: &NodeSet,
    y: &NodeSet,
    z: &NodeSet,
    w: &NodeSet,
) -> Result<Option<[NodeId; 4]>> {
    if w.is_empty() {
        return Err(Error::Precondition("W must be non-empty"));
    }
    if cfg!(debug_assertions) {
        let g = ctx.graph();
        check_disjoint(&[x, y, z, w])?;
        check_clique(g, z)?;
        check_null(g, w, z, "W must be null to Z")?;
        check_null(g, x, y, "X must be null to Y")?;
    }
    if x.is_empty() || y.is_empty() || z.is_empty() {
        return Ok(None);
    }
    let hx = clique_hits(ctx, x, z);
    let hy = clique_hits(ctx, y, z);
    let lightest = |set: &NodeSet, h: &[usize], pivot: NodeId| -> Option<(NodeId, usize)> {
        let mut best: Option<(NodeId, usize)> = None;
        for (i, u) in set.iter().enumerate() {
            if !ctx.adjacent(u, pivot) && best.is_none_or(|(_, hb)| h[i] < hb) {
                best = Some((u, h[i]));
            }
        }
        best
    };
    for pivot in w.iter() {
        let (Some((a, ha)), Some((b, hb))) = (lightest(x, &hx, pivot), lightest(y, &hy, pivot))
        else {
            continue;
        };
        if ha + hb >= z.len() {
            continue;
        }
        return match first_free_in(ctx, z, &[a, b]) {
            Some(c) => Ok(Some([a, b, c, pivot])),
            None => Err(Error::Precondition("graph must be claw-free on X ∪ Y ∪ Z")),
        };
    }
    Ok(None)
}

fn non_clique_pair(ctx: &SolveCtx<'_>, set: &NodeSet) -> Option<(NodeId, NodeId)> {
    match ctx.clique_or_witness(set.as_slice()) {
        CliqueVerdict::Clique => None,
        CliqueVerdict::Witness(a, b) => Some((a, b)),
    }
}

/// Grows a stable pair to a stable triple, or certifies `α = 2`.
pub fn extend_to_three(ctx: &SolveCtx<'_>, pair: (NodeId, NodeId)) -> Result<ExtendThree> {
    let (s, t) = pair;
    let cls = classify(ctx, &[s, t])?;
    if let Some(v) = cls.super_free().iter().next() {
        return Ok(ExtendThree::Triple([s, t, v]));
    }
    if let Some((a, b)) = non_clique_pair(ctx, cls.free(0)) {
        return Ok(ExtendThree::Triple([a, b, t]));
    }
    if let Some((a, b)) = non_clique_pair(ctx, cls.free(1)) {
        return Ok(ExtendThree::Triple([a, b, s]));
    }
    Ok(
        match three_sets_stable(ctx, cls.shared(0, 1), cls.free(0), cls.free(1))? {
            Some(triple) => ExtendThree::Triple(triple),
            None => ExtendThree::AlphaIs2,
        },
    )
}

/// Grows a stable triple to a stable 4-set, or certifies `α = 3`.
///
/// After the super-free and clique checks, a larger stable set would have to
/// alternate with `T` along a path through two nodes of `T` (five nodes) or
/// all three (seven nodes); both shapes are searched for each ordering.
pub fn extend_to_four(ctx: &SolveCtx<'_>, triple: [NodeId; 3]) -> Result<ExtendFour> {
    let cls = classify(ctx, &triple)?;
    let t = triple;
    if let Some(v) = cls.super_free().iter().next() {
        return Ok(ExtendFour::Quad([t[0], t[1], t[2], v]));
    }
    for i in 0..3 {
        if let Some((a, b)) = non_clique_pair(ctx, cls.free(i)) {
            let others: Vec<_> = (0..3).filter(|&j| j != i).map(|j| t[j]).collect();
            return Ok(ExtendFour::Quad([a, b, others[0], others[1]]));
        }
    }
    // five-node paths (x, a, y, b, z)
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        if let Some([x, y, z]) = three_sets_stable(ctx, cls.free(i), cls.shared(i, j), cls.free(j))?
        {
            return Ok(ExtendFour::Quad([x, y, z, t[k]]));
        }
    }
    // seven-node paths (x, a, w, b, y, c, z) with b in the middle
    for (b, a, c) in [(0, 1, 2), (1, 0, 2), (2, 0, 1)] {
        let bridge = cls.shared(a, b);
        if bridge.is_empty() {
            continue;
        }
        if let Some(quad) =
            four_sets_stable(ctx, cls.free(a), cls.shared(b, c), cls.free(c), bridge)?
        {
            return Ok(ExtendFour::Quad(quad));
        }
    }
    Ok(ExtendFour::AlphaIs3(cls))
}

/// Runs the whole chain: clique test, pair, triple, 4-set.
pub fn probe_alpha(ctx: &SolveCtx<'_>) -> Result<AlphaProbe> {
    let graph = ctx.graph();
    if graph.n() == 0 {
        return Ok(AlphaProbe::Empty);
    }
    let Some((s, t)) = stable_pair(graph) else {
        return Ok(AlphaProbe::Clique(0));
    };
    let triple = match extend_to_three(ctx, (s, t))? {
        ExtendThree::AlphaIs2 => return Ok(AlphaProbe::Pair(s, t)),
        ExtendThree::Triple(triple) => triple,
    };
    Ok(match extend_to_four(ctx, triple)? {
        ExtendFour::Quad(quad) => AlphaProbe::Quad(quad),
        ExtendFour::AlphaIs3(cls) => AlphaProbe::Triple(cls),
    })
}

/// A stable set of size `min(α(G), 4)` for a claw-free graph.
pub fn stable_set_min_alpha4(ctx: &SolveCtx<'_>) -> Result<StableSetReport> {
    let report = probe_alpha(ctx)?.report();
    if !ctx.graph().is_stable(&report.set) {
        return Err(Error::Precondition(
            "graph must be claw-free (result is not stable)",
        ));
    }
    Ok(report)
}
