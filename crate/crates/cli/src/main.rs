use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use clawfree_cli::{GenOptions, Kind, Output, VerifyOptions};

/// Maximum weight stable sets in claw-free graphs with independence number
/// at most three.
#[derive(Parser)]
#[command(name = "clawfree", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "line_graph_cover3")]
    LineGraphCover3,
    #[value(name = "complement_triangle_free")]
    ComplementTriangleFree,
    #[value(name = "cycle")]
    Cycle,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance: prints OPTIMAL, ALPHA_GE_4 or NOT_CLAW_FREE.
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// Check claw-freeness before solving.
        #[arg(long)]
        validate: bool,
    },
    /// Report claw-freeness and min(alpha, 4).
    Check {
        #[arg(long)]
        input: PathBuf,
    },
    /// Write a generated instance with its certificate as comments.
    Gen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Re-check claw-freeness and alpha by brute force.
        #[arg(long)]
        certify: bool,
        /// Node count (host edge count for line graphs).
        #[arg(long, default_value_t = 20)]
        n: usize,
        /// Host leaves for line graphs.
        #[arg(long)]
        leaves: Option<usize>,
        /// Bipartite edge probability for complements.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        wmin: i64,
        #[arg(long, default_value_t = 100, allow_negative_numbers = true)]
        wmax: i64,
    },
    /// Compare the solvers against brute force on generated instances.
    Verify {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long = "max-n", default_value_t = 60)]
        max_n: usize,
        #[arg(long, default_value = "verify_failure.txt")]
        dump: PathBuf,
    },
    /// Count adjacency queries over the scaling family and write a CSV.
    Bench {
        /// Comma-separated target edge counts.
        #[arg(long, allow_hyphen_values = true)]
        sizes: String,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(command: Command) -> Output {
    match command {
        Command::Solve { input, validate } => clawfree_cli::cmd_solve(&input, validate),
        Command::Check { input } => clawfree_cli::cmd_check(&input),
        Command::Gen {
            kind,
            seed,
            out,
            certify,
            n,
            leaves,
            density,
            wmin,
            wmax,
        } => {
            let kind = match kind {
                KindArg::LineGraphCover3 => Kind::LineGraphCover3,
                KindArg::ComplementTriangleFree => Kind::ComplementTriangleFree,
                KindArg::Cycle => Kind::Cycle,
            };
            let opts = GenOptions {
                kind,
                seed,
                n,
                leaves,
                density,
                weights: (wmin, wmax),
            };
            clawfree_cli::cmd_gen(&opts, &out, certify)
        }
        Command::Verify {
            count,
            seed,
            max_n,
            dump,
        } => clawfree_cli::cmd_verify(&VerifyOptions {
            count,
            seed,
            max_n,
            dump,
        }),
        Command::Bench { sizes, seed, out } => match clawfree_cli::parse_sizes(&sizes) {
            Ok(sizes) => clawfree_cli::cmd_bench(&sizes, seed, &out),
            Err(e) => Output {
                code: clawfree_cli::EXIT_INPUT,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            },
        },
    }
}

fn main() -> ExitCode {
    let out = run(Cli::parse().command);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
