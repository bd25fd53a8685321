//! Subcommand bodies for the `clawfree` binary. Each returns an [`Output`]
//! so tests can drive them without spawning a process.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use anyhow::Context;
use clawfree::generate::{certify, generate, GenKind, GenSpec};
use clawfree::io::{read_instance, write_instance, Instance};
use clawfree::oracle::{brute_alpha_min4, brute_mwss};
use clawfree::{
    find_claw, mwss_alpha3, stable_set_min_alpha4, AlphaStatus, Claw, Error, Graph, NodeId,
    NodeWeights, QueryCounter, SolveCtx, SolveOutcome,
};
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_ALPHA_GE_4: i32 = 2;
pub const EXIT_NOT_CLAW_FREE: i32 = 3;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn line(code: i32, line: impl Into<String>) -> Self {
        let mut stdout = line.into();
        stdout.push('\n');
        Output {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(err: impl std::fmt::Display) -> Self {
        Output {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

/// Comma-separated 1-based ids.
pub fn format_ids(ids: &[NodeId]) -> String {
    ids.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn claw_line(claw: &Claw) -> String {
    format!(
        "NOT_CLAW_FREE center={} leaves={}",
        claw.center + 1,
        format_ids(&claw.leaves)
    )
}

fn load(path: &Path) -> anyhow::Result<Instance> {
    let file =
        std::fs::File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    read_instance(std::io::BufReader::new(file)).with_context(|| format!("in {}", path.display()))
}

pub fn solve_instance(instance: &Instance, validate: bool) -> Output {
    if validate {
        if let Some(claw) = find_claw(&instance.graph) {
            return Output::line(EXIT_NOT_CLAW_FREE, claw_line(&claw));
        }
    }
    let counter = QueryCounter::new();
    let ctx = SolveCtx::new(&instance.graph, &counter);
    match mwss_alpha3(&ctx, &instance.weights) {
        Ok(SolveOutcome::Optimal { set, weight, .. }) => Output::line(
            EXIT_OK,
            format!("OPTIMAL weight={weight} set={}", format_ids(&set)),
        ),
        Ok(SolveOutcome::AlphaAtLeast4 { witness }) => Output::line(
            EXIT_ALPHA_GE_4,
            format!("ALPHA_GE_4 witness={}", format_ids(&witness)),
        ),
        Err(Error::NotClawFree(claw)) => Output::line(EXIT_NOT_CLAW_FREE, claw_line(&claw)),
        Err(e @ Error::Precondition(_)) => Output::error(format!("{e}; rerun with --validate")),
        Err(e) => Output::error(e),
    }
}

pub fn cmd_solve(input: &Path, validate: bool) -> Output {
    match load(input) {
        Ok(instance) => solve_instance(&instance, validate),
        Err(e) => Output::error(format!("{e:#}")),
    }
}

pub fn check_graph(graph: &Graph) -> Output {
    if let Some(claw) = find_claw(graph) {
        return Output::line(EXIT_NOT_CLAW_FREE, claw_line(&claw));
    }
    let counter = QueryCounter::new();
    match stable_set_min_alpha4(&SolveCtx::new(graph, &counter)) {
        Ok(report) => Output::line(
            EXIT_OK,
            match report.alpha {
                AlphaStatus::Exact(k) => format!("CLAW_FREE alpha={k}"),
                AlphaStatus::AtLeast4 => "CLAW_FREE alpha>=4".to_string(),
            },
        ),
        Err(e) => Output::error(e),
    }
}

pub fn cmd_check(input: &Path) -> Output {
    match load(input) {
        Ok(instance) => check_graph(&instance.graph),
        Err(e) => Output::error(format!("{e:#}")),
    }
}

/// Generator family selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    LineGraphCover3,
    ComplementTriangleFree,
    Cycle,
}

#[derive(Clone, Debug)]
pub struct GenOptions {
    pub kind: Kind,
    pub seed: u64,
    /// Node count; for line graphs, the number of host edges.
    pub n: usize,
    /// Host leaves for line graphs; defaults to `max(3, n / 2)`.
    pub leaves: Option<usize>,
    pub density: f64,
    pub weights: (i64, i64),
}

impl GenOptions {
    pub fn spec(&self) -> GenSpec {
        let kind = match self.kind {
            Kind::LineGraphCover3 => GenKind::LineGraphCover3 {
                edges: self.n,
                leaves: self.leaves.unwrap_or((self.n / 2).max(3)),
            },
            Kind::ComplementTriangleFree => GenKind::ComplementTriangleFree {
                n: self.n,
                density: self.density,
            },
            Kind::Cycle => GenKind::Cycle { n: self.n },
        };
        GenSpec {
            kind,
            weights: self.weights,
            seed: self.seed,
        }
    }
}

/// Generated instance file contents, optionally re-certified.
pub fn gen_text(opts: &GenOptions, certify_output: bool) -> Result<String, String> {
    let generated = generate(&opts.spec()).map_err(|e| e.to_string())?;
    if certify_output {
        certify(&generated.graph, &generated.certificate)
            .map_err(|f| format!("certification failed: {f}"))?;
    }
    let comments = generated.certificate.comment_lines();
    Ok(write_instance(
        &generated.graph,
        &generated.weights,
        &comments,
    ))
}

pub fn cmd_gen(opts: &GenOptions, out: &Path, certify_output: bool) -> Output {
    let text = match gen_text(opts, certify_output) {
        Ok(text) => text,
        Err(e) => return Output::error(e),
    };
    if let Err(e) = std::fs::write(out, &text) {
        return Output::error(format!("cannot write {}: {e}", out.display()));
    }
    let mut line = format!("wrote {}", out.display());
    if certify_output {
        line.push_str(" certified");
    }
    Output::line(EXIT_OK, line)
}

pub type Solver = dyn Fn(&SolveCtx<'_>, &NodeWeights) -> clawfree::Result<SolveOutcome> + Sync;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub count: usize,
    pub seed: u64,
    pub max_n: usize,
    /// Where the first failing instance is written.
    pub dump: std::path::PathBuf,
}

/// The `index`-th verify instance: kinds rotate, and every other round of
/// three uses weights in `[-50, 50]` instead of `[1, 100]`.
pub fn verify_spec(index: usize, seed: u64, max_n: usize) -> GenSpec {
    let mut rng =
        SplitMix64::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let max_n = max_n.max(3);
    let weights = if (index / 3).is_multiple_of(2) {
        (1, 100)
    } else {
        (-50, 50)
    };
    let kind = match index % 3 {
        0 => {
            let edges = rng.gen_range(3..=max_n);
            let min_leaves = edges.saturating_sub(3).div_ceil(3).max(3);
            let leaves = rng.gen_range(min_leaves..=min_leaves.max(edges));
            GenKind::LineGraphCover3 { edges, leaves }
        }
        1 => GenKind::ComplementTriangleFree {
            n: rng.gen_range(1..=max_n),
            density: rng.gen_range(0.0..=1.0),
        },
        _ => GenKind::Cycle {
            n: rng.gen_range(3..=max_n),
        },
    };
    GenSpec {
        kind,
        weights,
        seed: rng.gen(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyFailure {
    pub index: usize,
    pub kind: &'static str,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifySummary {
    pub passed: usize,
    pub optimal: usize,
    pub alpha_ge_4: usize,
    pub failures: Vec<VerifyFailure>,
}

enum Checked {
    Optimal,
    AlphaGe4,
}

fn check_one(graph: &Graph, weights: &NodeWeights, solver: &Solver) -> Result<Checked, String> {
    let counter = QueryCounter::new();
    let ctx = SolveCtx::new(graph, &counter);

    let expected_min4 = brute_alpha_min4(graph);
    let report = stable_set_min_alpha4(&ctx).map_err(|e| format!("cardinality solver: {e}"))?;
    if report.set.len() != expected_min4 || !graph.is_stable(&report.set) {
        return Err(format!(
            "cardinality: got {:?}, brute force min(alpha, 4) = {expected_min4}",
            report.set
        ));
    }
    let exact_ok = match report.alpha {
        AlphaStatus::Exact(k) => k == expected_min4 && k <= 3,
        AlphaStatus::AtLeast4 => expected_min4 == 4,
    };
    if !exact_ok {
        return Err(format!(
            "cardinality verdict {:?} vs min(alpha, 4) = {expected_min4}",
            report.alpha
        ));
    }

    match solver(&ctx, weights).map_err(|e| format!("solver: {e}"))? {
        SolveOutcome::AlphaAtLeast4 { witness } => {
            if graph.is_stable(&witness) && witness.iter().all(|&v| weights[v] >= 0) {
                Ok(Checked::AlphaGe4)
            } else {
                Err(format!("bad 4-set witness {witness:?}"))
            }
        }
        SolveOutcome::Optimal { set, weight, .. } => {
            let (_, expected) = brute_mwss(graph, weights).map_err(|e| format!("oracle: {e}"))?;
            if weight != expected {
                Err(format!("weight {weight}, oracle {expected}"))
            } else if !graph.is_stable(&set) || weights.total(&set) != weight {
                Err(format!("set {set:?} does not realize weight {weight}"))
            } else {
                Ok(Checked::Optimal)
            }
        }
    }
}

/// Runs the oracle comparison over `opts.count` instances with `solver`
/// standing in for the weighted solver.
pub fn verify_with(opts: &VerifyOptions, solver: &Solver) -> (VerifySummary, Option<String>) {
    let results: Vec<_> = (0..opts.count)
        .into_par_iter()
        .map(|i| {
            let spec = verify_spec(i, opts.seed, opts.max_n);
            let generated = generate(&spec).expect("verify specs are valid");
            let verdict = check_one(&generated.graph, &generated.weights, solver);
            (spec, generated, verdict)
        })
        .collect();

    let mut summary = VerifySummary::default();
    let mut dump = None;
    for (i, (spec, generated, verdict)) in results.into_iter().enumerate() {
        match verdict {
            Ok(Checked::Optimal) => {
                summary.passed += 1;
                summary.optimal += 1;
            }
            Ok(Checked::AlphaGe4) => {
                summary.passed += 1;
                summary.alpha_ge_4 += 1;
            }
            Err(reason) => {
                if dump.is_none() {
                    let mut comments = vec![format!("verify failure index={i}: {reason}")];
                    comments.extend(generated.certificate.comment_lines());
                    dump = Some(write_instance(
                        &generated.graph,
                        &generated.weights,
                        &comments,
                    ));
                }
                summary.failures.push(VerifyFailure {
                    index: i,
                    kind: spec.kind.name(),
                    reason,
                });
            }
        }
    }
    (summary, dump)
}

pub fn cmd_verify_with(opts: &VerifyOptions, solver: &Solver) -> Output {
    let (summary, dump) = verify_with(opts, solver);
    let mut out = Output::default();
    for f in &summary.failures {
        let _ = writeln!(
            out.stdout,
            "MISMATCH instance={} kind={} {}",
            f.index, f.kind, f.reason
        );
    }
    let _ = writeln!(
        out.stdout,
        "verified {} instances: {} passed ({} optimal, {} alpha>=4), {} failed",
        opts.count,
        summary.passed,
        summary.optimal,
        summary.alpha_ge_4,
        summary.failures.len()
    );
    if let Some(text) = dump {
        out.code = EXIT_INPUT;
        match std::fs::write(&opts.dump, text) {
            Ok(()) => {
                let _ = writeln!(
                    out.stdout,
                    "first failing instance written to {}",
                    opts.dump.display()
                );
            }
            Err(e) => {
                let _ = writeln!(
                    out.stderr,
                    "error: cannot write {}: {e}",
                    opts.dump.display()
                );
            }
        }
    }
    out
}

pub fn cmd_verify(opts: &VerifyOptions) -> Output {
    cmd_verify_with(opts, &|ctx: &SolveCtx<'_>, w: &NodeWeights| {
        mwss_alpha3(ctx, w)
    })
}

pub const CSV_HEADER: &str = "instance,n,m,queries,ns,ratio";

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    /// Adjacency queries made by the weighted solver.
    pub queries: u64,
    pub ns: u128,
    /// `queries / (m · log2(n + 2))`.
    pub ratio: f64,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{:.6}",
            self.instance, self.n, self.m, self.queries, self.ns, self.ratio
        )
    }
}

pub fn normalized_ratio(queries: u64, n: usize, m: usize) -> f64 {
    queries as f64 / (m.max(1) as f64 * ((n + 2) as f64).log2())
}

pub fn bench_instance(target_m: usize, seed: u64) -> clawfree::Result<BenchRecord> {
    let generated = generate(&GenSpec::scaling_family(target_m, seed))?;
    let graph = &generated.graph;
    let counter = QueryCounter::new();
    let ctx = SolveCtx::new(graph, &counter);
    let start = Instant::now();
    mwss_alpha3(&ctx, &generated.weights)?;
    let ns = start.elapsed().as_nanos();
    let queries = counter.get();
    Ok(BenchRecord {
        instance: format!("line_graph_cover3_m{target_m}_s{seed}"),
        n: graph.n(),
        m: graph.m(),
        queries,
        ns,
        ratio: normalized_ratio(queries, graph.n(), graph.m()),
    })
}

/// Adjacency queries made by the cardinality solver alone.
pub fn cardinality_queries(graph: &Graph) -> clawfree::Result<u64> {
    let counter = QueryCounter::new();
    stable_set_min_alpha4(&SolveCtx::new(graph, &counter))?;
    Ok(counter.get())
}

pub fn write_csv(records: &[BenchRecord]) -> String {
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for r in records {
        csv.push_str(&r.csv_row());
        csv.push('\n');
    }
    csv
}

/// Largest over smallest value, or `None` for fewer than one value.
pub fn spread(values: impl IntoIterator<Item = f64>) -> Option<f64> {
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (lo <= hi).then(|| hi / lo)
}

pub fn parse_sizes(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|e| format!("bad size {s:?}: {e}"))
        })
        .collect()
}

pub fn cmd_bench(sizes: &[usize], seed: u64, out: &Path) -> Output {
    let mut records = Vec::with_capacity(sizes.len());
    for &m in sizes {
        match bench_instance(m, seed) {
            Ok(r) => records.push(r),
            Err(e) => return Output::error(format!("size {m}: {e}")),
        }
    }
    if let Err(e) = std::fs::write(out, write_csv(&records)) {
        return Output::error(format!("cannot write {}: {e}", out.display()));
    }
    let mut output = Output::default();
    for r in &records {
        let _ = writeln!(
            output.stdout,
            "{} n={} m={} queries={} ratio={:.4}",
            r.instance, r.n, r.m, r.queries, r.ratio
        );
    }
    match spread(records.iter().map(|r| r.ratio)) {
        Some(s) => {
            let _ = writeln!(output.stdout, "ratio max/min = {s:.3}");
        }
        None => {
            let _ = writeln!(output.stdout, "no sizes given");
        }
    }
    output
}
