//! Seeded generators for claw-free instances whose independence number is
//! known by construction.
//!
//! All randomness comes from a SplitMix64 stream (Steele, Lea and Flood;
//! increment `0x9e3779b97f4a7c15`, output mixers `0xbf58476d1ce4e5b9` and
//! `0x94d049bb133111eb`) seeded directly with `GenSpec::seed`, so a spec always
//! yields the same instance.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, NodeWeights};
use crate::oracle::{brute_alpha_min4, brute_is_clawfree};

#[derive(Clone, Debug, PartialEq)]
pub enum GenKind {
    /// Line graph of a host graph whose edges are all covered by three
    /// centers and which holds three disjoint edges: `α = ν(host) = 3`.
    /// `edges` is the host edge count (the node count of the output),
    /// `leaves` the number of non-center host vertices.
    LineGraphCover3 { edges: usize, leaves: usize },
    /// Complement of a random bipartite graph, so `α <= 2`. `density` is the
    /// probability of each cross edge in the bipartite graph.
    ComplementTriangleFree { n: usize, density: f64 },
    /// `C_n`, `α = floor(n / 2)`.
    Cycle { n: usize },
}

impl GenKind {
    pub fn name(&self) -> &'static str {
        match self {
            GenKind::LineGraphCover3 { .. } => "line_graph_cover3",
            GenKind::ComplementTriangleFree { .. } => "complement_triangle_free",
            GenKind::Cycle { .. } => "cycle",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub kind: GenKind,
    /// Inclusive weight range.
    pub weights: (i64, i64),
    pub seed: u64,
}

impl GenSpec {
    /// Member of the benchmark family with roughly `target_m` edges: about
    /// half of all center-leaf host edges, with `3L²/8 ≈ target_m`.
    pub fn scaling_family(target_m: usize, seed: u64) -> Self {
        let leaves = ((8.0 * target_m as f64 / 3.0).sqrt().round() as usize).max(3);
        GenSpec {
            kind: GenKind::LineGraphCover3 {
                edges: 3 + 3 * leaves / 2,
                leaves,
            },
            weights: (1, 100),
            seed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaClaim {
    Exact(usize),
    AtMost(usize),
}

impl AlphaClaim {
    /// Whether a measured `min(α, 4)` is consistent with the claim.
    pub fn admits(&self, alpha_min4: usize) -> bool {
        match *self {
            AlphaClaim::Exact(k) => alpha_min4 == k.min(4),
            AlphaClaim::AtMost(k) => alpha_min4 <= k,
        }
    }
}

impl fmt::Display for AlphaClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaClaim::Exact(k) => write!(f, "alpha={k}"),
            AlphaClaim::AtMost(k) => write!(f, "alpha<={k}"),
        }
    }
}

/// What the construction guarantees, plus the evidence behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: &'static str,
    pub seed: u64,
    pub alpha: AlphaClaim,
    /// `key=value` evidence, one comment line each.
    pub evidence: Vec<String>,
}

impl Certificate {
    /// Comment lines (without the `c ` prefix) for an instance file.
    pub fn comment_lines(&self) -> Vec<String> {
        let mut lines = vec![format!(
            "cert kind={} seed={} {}",
            self.kind, self.seed, self.alpha
        )];
        lines.extend(self.evidence.iter().map(|e| format!("cert {e}")));
        lines
    }
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub weights: NodeWeights,
    pub certificate: Certificate,
}

/// Line graph of a host graph on `host_n` vertices; node `i` is host edge `i`.
pub fn line_graph(host_n: usize, host_edges: &[(usize, usize)]) -> Result<Graph> {
    let mut incident = vec![Vec::new(); host_n];
    for (i, &(a, b)) in host_edges.iter().enumerate() {
        for x in [a, b] {
            if x >= host_n {
                return Err(Error::NodeOutOfRange { node: x, n: host_n });
            }
            incident[x].push(i);
        }
    }
    let edges: Vec<(NodeId, NodeId)> = incident
        .iter()
        .flat_map(|list| {
            list.iter()
                .enumerate()
                .flat_map(move |(i, &e)| list[i + 1..].iter().map(move |&f| (e, f)))
        })
        .collect();
    Graph::new(host_edges.len(), &edges)
}

fn join_edges(edges: &[(usize, usize)]) -> String {
    edges
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn generate(spec: &GenSpec) -> Result<Generated> {
    let (lo, hi) = spec.weights;
    if lo > hi {
        return Err(Error::InvalidSpec(format!(
            "empty weight range [{lo}, {hi}]"
        )));
    }
    if lo.unsigned_abs().max(hi.unsigned_abs()) > NodeWeights::MAX_ABS as u64 {
        return Err(Error::InvalidSpec("weights must stay within ±2^61".into()));
    }
    let mut rng = SplitMix64::seed_from_u64(spec.seed);
    let (graph, alpha, evidence) = match spec.kind {
        GenKind::LineGraphCover3 { edges, leaves } => {
            if leaves < 3 {
                return Err(Error::InvalidSpec(format!(
                    "need at least 3 leaves, got {leaves}"
                )));
            }
            let max_edges = 3 * leaves + 3;
            if !(3..=max_edges).contains(&edges) {
                return Err(Error::InvalidSpec(format!(
                    "host edge count {edges} outside 3..={max_edges} for {leaves} leaves"
                )));
            }
            // centers 0, 1, 2; leaves 3..3+leaves; a private leaf per center
            let matching = [(0, 3), (1, 4), (2, 5)];
            let mut pool: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (1, 2)];
            for c in 0..3 {
                pool.extend((3..3 + leaves).filter(|&l| l != 3 + c).map(|l| (c, l)));
            }
            pool.shuffle(&mut rng);
            let mut host: Vec<(usize, usize)> = matching.to_vec();
            host.extend_from_slice(&pool[..edges - 3]);
            host.sort_unstable();
            let graph = line_graph(3 + leaves, &host)?;
            let evidence = vec![
                "cover=0,1,2".to_string(),
                format!("matching={}", join_edges(&matching)),
                format!(
                    "host_vertices={} host_edges={}",
                    3 + leaves,
                    join_edges(&host)
                ),
            ];
            (graph, AlphaClaim::Exact(3), evidence)
        }
        GenKind::ComplementTriangleFree { n, density } => {
            if n == 0 || !(0.0..=1.0).contains(&density) {
                return Err(Error::InvalidSpec(format!(
                    "need n >= 1 and density in [0, 1], got n={n} density={density}"
                )));
            }
            let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    // bipartite edge ⇒ missing from the complement
                    let bipartite = side[u] != side[v] && rng.gen_bool(density);
                    if !bipartite {
                        edges.push((u, v));
                    }
                }
            }
            let parts: String = side.iter().map(|&s| if s { '1' } else { '0' }).collect();
            (
                Graph::new(n, &edges)?,
                AlphaClaim::AtMost(2),
                vec![format!("bipartition={parts}")],
            )
        }
        GenKind::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidSpec(format!("a cycle needs n >= 3, got {n}")));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            (Graph::new(n, &edges)?, AlphaClaim::Exact(n / 2), vec![])
        }
    };
    let weights = NodeWeights::new((0..graph.n()).map(|_| rng.gen_range(lo..=hi)).collect())?;
    Ok(Generated {
        graph,
        weights,
        certificate: Certificate {
            kind: spec.kind.name(),
            seed: spec.seed,
            alpha,
            evidence,
        },
    })
}

/// Failure found by [`certify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifyFailure {
    Claw(crate::claw::Claw),
    Alpha {
        claimed: AlphaClaim,
        measured_min4: usize,
    },
}

impl fmt::Display for CertifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifyFailure::Claw(c) => write!(f, "{c}"),
            CertifyFailure::Alpha {
                claimed,
                measured_min4,
            } => write!(
                f,
                "claimed {claimed}, brute force gives min(alpha, 4) = {measured_min4}"
            ),
        }
    }
}

/// Re-checks claw-freeness and the independence claim with the brute-force
/// oracles only.
pub fn certify(
    graph: &Graph,
    certificate: &Certificate,
) -> std::result::Result<(), CertifyFailure> {
    if let Some(claw) = brute_is_clawfree(graph) {
        return Err(CertifyFailure::Claw(claw));
    }
    let measured = brute_alpha_min4(graph);
    if !certificate.alpha.admits(measured) {
        return Err(CertifyFailure::Alpha {
            claimed: certificate.alpha,
            measured_min4: measured,
        });
    }
    Ok(())
}
