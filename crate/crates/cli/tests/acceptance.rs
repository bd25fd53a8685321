//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use clawfree::generate::{generate, line_graph, GenKind, GenSpec};
use clawfree::oracle::{brute_alpha_min4, brute_is_clawfree};
use clawfree::weighted::OrderedCliquePrefix;
use clawfree::{
    find_claw, mwss_alpha3, stable_set_min_alpha4, AlphaStatus, Graph, NodeId, NodeSet,
    NodeWeights, QueryCounter, SolveCtx,
};
use clawfree_cli::{
    bench_instance, cardinality_queries, gen_text, spread, verify_with, GenOptions, Kind,
    VerifyOptions,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
}

fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
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

/// Random claw-free graph with at most `max_n` nodes from several
/// constructions, sometimes thinned to an induced subgraph.
fn random_clawfree(rng: &mut impl Rng, max_n: usize) -> Graph {
    let g = match rng.gen_range(0..4) {
        0 => {
            let host_n = rng.gen_range(2..=9);
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
            host.truncate(max_n);
            line_graph(host_n, &host).unwrap()
        }
        1 => loop {
            let n = rng.gen_range(1..=max_n.min(16));
            let p = rng.gen_range(0.5..0.95);
            let g = gnp(rng, n, p);
            if brute_is_clawfree(&g).is_none() {
                break g;
            }
        },
        2 => {
            let leaves = rng.gen_range(3..=12);
            let edges = rng.gen_range(3..=(3 * leaves + 3).min(max_n));
            let spec = GenSpec {
                kind: GenKind::LineGraphCover3 { edges, leaves },
                weights: (1, 1),
                seed: rng.gen(),
            };
            generate(&spec).unwrap().graph
        }
        _ => {
            let spec = GenSpec {
                kind: GenKind::ComplementTriangleFree {
                    n: rng.gen_range(1..=max_n),
                    density: rng.gen_range(0.0..=1.0),
                },
                weights: (1, 1),
                seed: rng.gen(),
            };
            generate(&spec).unwrap().graph
        }
    };
    if g.n() > 0 && rng.gen_bool(0.3) {
        let keep = NodeSet::new(g.n(), (0..g.n()).filter(|_| rng.gen_bool(0.8))).unwrap();
        return g.induced_subgraph(&keep).0;
    }
    g
}

fn oracle_equivalence() -> Verdict {
    let opts = VerifyOptions {
        count: 12_000,
        seed: 2024,
        max_n: 60,
        dump: std::env::temp_dir().join("clawfree-acceptance-failure.txt"),
    };
    let (summary, _) = verify_with(&opts, &|ctx: &SolveCtx<'_>, w: &NodeWeights| {
        mwss_alpha3(ctx, w)
    });
    let first = summary
        .failures
        .first()
        .map(|f| format!("; first: #{} {} {}", f.index, f.kind, f.reason));
    Verdict {
        ok: summary.failures.is_empty() && summary.passed == opts.count,
        detail: format!(
            "{} instances, {} optimal weights equal the oracle, {} stable 4-set witnesses verified, {} mismatches{}",
            opts.count,
            summary.optimal,
            summary.alpha_ge_4,
            summary.failures.len(),
            first.unwrap_or_default()
        ),
    }
}

fn cardinality_mismatch(g: &Graph) -> Option<String> {
    let expected = brute_alpha_min4(g);
    let counter = QueryCounter::new();
    let report = match stable_set_min_alpha4(&SolveCtx::new(g, &counter)) {
        Ok(r) => r,
        Err(e) => return Some(format!("error {e}")),
    };
    let verdict_ok = match report.alpha {
        AlphaStatus::Exact(k) => k == expected && k <= 3,
        AlphaStatus::AtLeast4 => expected == 4,
    };
    if report.set.len() != expected || !g.is_stable(&report.set) || !verdict_ok {
        return Some(format!(
            "n={} edges={:?} got {:?}, expected {expected}",
            g.n(),
            g.edges().collect::<Vec<_>>(),
            report
        ));
    }
    None
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

fn cardinality_correctness() -> Verdict {
    let mut small = 0usize;
    let mut failures = Vec::new();
    for n in 0..=6 {
        for g in all_graphs(n).filter(|g| brute_is_clawfree(g).is_none()) {
            small += 1;
            failures.extend(cardinality_mismatch(&g));
        }
    }
    let random: Vec<(usize, Option<String>)> = (0..10_000u64)
        .into_par_iter()
        .map(|i| {
            let mut rng =
                SplitMix64::seed_from_u64(0xa11ce ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let g = random_clawfree(&mut rng, 40);
            assert!(brute_is_clawfree(&g).is_none());
            (brute_alpha_min4(&g), cardinality_mismatch(&g))
        })
        .collect();
    let mut by_alpha = [0usize; 5];
    for (alpha, failure) in random {
        by_alpha[alpha] += 1;
        failures.extend(failure);
    }
    Verdict {
        ok: failures.is_empty(),
        detail: format!(
            "{small} claw-free graphs on <= 6 nodes and 10000 random ones (alpha 0..=3: {:?}, >=4: {}), {} mismatches{}",
            &by_alpha[..4],
            by_alpha[4],
            failures.len(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    }
}

#[derive(Default)]
struct PairStats {
    pairs: usize,
    extendable: usize,
    count_violations: usize,
    monotone_violations: usize,
    search_violations: usize,
}

fn probe_pairs(g: &Graph, z: &[NodeId], weights: &NodeWeights) -> PairStats {
    let n = g.n();
    let zset = NodeSet::new(n, z.iter().copied()).unwrap();
    let outside = NodeSet::new(n, (0..n).filter(|&v| !zset.contains(v))).unwrap();
    let counter = QueryCounter::new();
    let ctx = SolveCtx::new(g, &counter);
    let prefix = OrderedCliquePrefix::build(&ctx, weights, &zset, [&outside]);
    let order = prefix.order();
    let p = order.len();
    let probes = prefix.probes();
    let mut stats = PairStats::default();
    for rx in 0..probes.len() {
        for ry in rx + 1..probes.len() {
            let (x, y) = (probes[rx], probes[ry]);
            if g.has_edge(x, y) {
                continue;
            }
            stats.pairs += 1;
            // count test against exhaustive scan over the whole clique
            let h = |u: NodeId| z.iter().filter(|&&c| g.has_edge(u, c)).count();
            let free = |c: NodeId| !g.has_edge(x, c) && !g.has_edge(y, c);
            let exists = z.iter().any(|&c| free(c));
            stats.extendable += exists as usize;
            if exists != (h(x) + h(y) < z.len()) {
                stats.count_violations += 1;
            }
            // prefix predicate: exact on every prefix and monotone in its length
            let mut seen_true = false;
            let mut first_free = None;
            for i in 0..=p {
                let pred = prefix.prefix_is_free(rx, ry, i);
                let truth = order[..i].iter().any(|&c| free(c));
                if pred != truth || (seen_true && !pred) {
                    stats.monotone_violations += 1;
                    break;
                }
                if pred && !seen_true {
                    first_free = Some(i);
                }
                seen_true |= pred;
            }
            if prefix.heaviest_free(rx, ry) != first_free {
                stats.search_violations += 1;
            }
        }
    }
    stats
}

fn prefix_properties() -> Verdict {
    let results: Vec<PairStats> = (0..1000u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = SplitMix64::seed_from_u64(0x5eed ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let g = loop {
                let g = random_clawfree(&mut rng, 40);
                if g.n() >= 4 {
                    break g;
                }
            };
            let mut order: Vec<NodeId> = (0..g.n()).collect();
            order.shuffle(&mut rng);
            let mut z: Vec<NodeId> = Vec::new();
            for v in order {
                if z.iter().all(|&u| g.has_edge(u, v)) {
                    z.push(v);
                }
            }
            // repeated weights exercise the tie order
            let weights =
                NodeWeights::new((0..g.n()).map(|_| rng.gen_range(0..=5)).collect()).unwrap();
            probe_pairs(&g, &z, &weights)
        })
        .collect();
    let mut total = PairStats::default();
    for s in results {
        total.pairs += s.pairs;
        total.extendable += s.extendable;
        total.count_violations += s.count_violations;
        total.monotone_violations += s.monotone_violations;
        total.search_violations += s.search_violations;
    }
    let violations = total.count_violations + total.monotone_violations + total.search_violations;
    Verdict {
        ok: violations == 0 && total.pairs > 0 && total.extendable > 0 && total.extendable < total.pairs,
        detail: format!(
            "1000 instances, {} non-adjacent probe pairs ({} extendable into the clique); violations: count test {}, prefix predicate {}, binary search {}",
            total.pairs, total.extendable, total.count_violations, total.monotone_violations, total.search_violations
        ),
    }
}

fn complexity_scaling() -> Verdict {
    let sizes: Vec<usize> = [10, 12, 14, 16, 18].iter().map(|k| 1usize << k).collect();
    let mut ok = true;
    let mut detail = Vec::new();
    for seed in [1u64, 2, 3] {
        let mut ratios = Vec::new();
        let mut card = Vec::new();
        for &m in &sizes {
            let record = bench_instance(m, seed).expect("benchmark instance");
            let graph = generate(&GenSpec::scaling_family(m, seed)).unwrap().graph;
            let q = cardinality_queries(&graph).expect("cardinality solver");
            ratios.push(record.ratio);
            card.push(q as f64 / graph.m() as f64);
        }
        let weighted_spread = spread(ratios.iter().copied()).unwrap();
        let card_spread = spread(card.iter().copied()).unwrap();
        ok &= weighted_spread <= 3.0 && card_spread <= 3.0;
        detail.push(format!(
            "seed {seed}: Q/(m log2(n+2)) {:.3}..{:.3} spread {weighted_spread:.3}, cardinality Q/m {:.3}..{:.3} spread {card_spread:.3}",
            ratios.iter().cloned().fold(f64::INFINITY, f64::min),
            ratios.iter().cloned().fold(0.0, f64::max),
            card.iter().cloned().fold(f64::INFINITY, f64::min),
            card.iter().cloned().fold(0.0, f64::max),
        ));
    }
    Verdict {
        ok,
        detail: format!("m = 2^10..2^18, limit 3.000; {}", detail.join("; ")),
    }
}

fn gen_options(kind: Kind, seed: u64) -> GenOptions {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let n = match kind {
        Kind::Cycle => rng.gen_range(3..=30),
        _ => rng.gen_range(3..=40),
    };
    GenOptions {
        kind,
        seed,
        n,
        leaves: None,
        density: rng.gen_range(0.0..=1.0),
        weights: (-50, 100),
    }
}

fn validation_and_certificates() -> Verdict {
    let mut rng = SplitMix64::seed_from_u64(77);
    let (mut with_claw, mut disagreements) = (0, 0);
    for i in 0..1000 {
        let n = rng.gen_range(1..=30);
        let g = if i % 4 == 0 {
            random_clawfree(&mut rng, 30)
        } else {
            let p = rng.gen_range(0.05..0.98);
            gnp(&mut rng, n, p)
        };
        let fast = find_claw(&g);
        let brute = brute_is_clawfree(&g);
        with_claw += brute.is_some() as usize;
        if fast.is_some() != brute.is_some() || fast.is_some_and(|c| !c.is_valid_in(&g)) {
            disagreements += 1;
        }
    }
    let mut cert_failures = Vec::new();
    for seed in 0..100u64 {
        for kind in [
            Kind::LineGraphCover3,
            Kind::ComplementTriangleFree,
            Kind::Cycle,
        ] {
            if let Err(e) = gen_text(&gen_options(kind, seed), true) {
                cert_failures.push(format!("{kind:?} seed {seed}: {e}"));
            }
        }
    }
    Verdict {
        ok: disagreements == 0 && cert_failures.is_empty() && with_claw > 0 && with_claw < 1000,
        detail: format!(
            "claw detection on 1000 graphs ({with_claw} with a claw): {disagreements} disagreements; certification over 100 seeds x 3 kinds: {} failures{}",
            cert_failures.len(),
            cert_failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    }
}

fn run_binary(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_clawfree"))
        .args(args)
        .output()
        .expect("run clawfree");
    (out.status.code(), out.stdout)
}

fn determinism() -> Verdict {
    let dir = std::env::temp_dir().join(format!("clawfree-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = |name: &str| -> PathBuf { dir.join(name) };
    let mut problems = Vec::new();
    for (kind, seed, n) in [
        ("line_graph_cover3", "11", "40"),
        ("complement_triangle_free", "12", "35"),
        ("cycle", "13", "9"),
    ] {
        let mut files = Vec::new();
        for run in 0..2 {
            let file = path(&format!("{kind}-{run}.txt"));
            let f = file.to_str().unwrap();
            let (code, _) = run_binary(&[
                "gen", "--kind", kind, "--seed", seed, "--n", n, "--wmin", "-50", "--wmax", "50",
                "--out", f,
            ]);
            if code != Some(0) {
                problems.push(format!("gen {kind} exit {code:?}"));
            }
            files.push(std::fs::read(&file).unwrap_or_default());
        }
        if files[0] != files[1] || files[0].is_empty() {
            problems.push(format!("gen {kind} output differs"));
        }
        let f = path(&format!("{kind}-0.txt"));
        let first = run_binary(&["solve", "--input", f.to_str().unwrap(), "--validate"]);
        let second = run_binary(&["solve", "--input", f.to_str().unwrap(), "--validate"]);
        if first != second || first.1.is_empty() {
            problems.push(format!("solve {kind} output differs"));
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    Verdict {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            "gen and solve byte-identical across two runs for 3 kinds".to_string()
        } else {
            problems.join("; ")
        },
    }
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("1 oracle equivalence", oracle_equivalence),
        ("2 cardinality correctness", cardinality_correctness),
        (
            "3 clique count test and prefix predicate",
            prefix_properties,
        ),
        ("4 query-count scaling", complexity_scaling),
        (
            "5 claw detection and certificates",
            validation_and_certificates,
        ),
        ("6 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let verdict = check();
        let status = if verdict.ok { "PASS" } else { "FAIL" };
        failed += !verdict.ok as usize;
        println!(
            "{status} criterion {name} ({:.1}s): {}",
            start.elapsed().as_secs_f64(),
            verdict.detail
        );
    }
    println!("acceptance: {} of 6 criteria passed", 6 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
