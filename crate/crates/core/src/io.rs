//! Line-oriented instance files.
//!
//! ```text
//! c <comment>
//! p edge <n> <m>
//! n <v> <w>        optional, 1-based node, signed weight (default 1)
//! e <u> <v>        exactly m lines, 1-based
//! ```

use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, NodeWeights};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub weights: NodeWeights,
    /// Comment lines without the leading `c `, in file order.
    pub comments: Vec<String>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_node(tok: Option<&str>, n: usize, line: usize) -> Result<NodeId> {
    let tok = tok.ok_or_else(|| parse_err(line, "missing node id"))?;
    let v: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("invalid node id `{tok}`")))?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("node id {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn expect_end<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match toks.next() {
        Some(extra) => Err(parse_err(
            line,
            format!("unexpected trailing token `{extra}`"),
        )),
        None => Ok(()),
    }
}

pub fn read_instance<R: BufRead>(reader: R) -> Result<Instance> {
    let mut comments = Vec::new();
    // (n, declared m, header line number)
    let mut header: Option<(usize, usize, usize)> = None;
    let mut weights: Vec<Option<i64>> = Vec::new();
    let mut edges = Vec::new();
    let mut last_line = 0;

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        let tag = toks.next().unwrap_or_default();
        if tag == "c" {
            let rest = trimmed[1..].strip_prefix(' ').unwrap_or(&trimmed[1..]);
            comments.push(rest.to_string());
            continue;
        }
        if tag == "p" {
            if header.is_some() {
                return Err(parse_err(lineno, "second problem line"));
            }
            if toks.next() != Some("edge") {
                return Err(parse_err(lineno, "expected `p edge <n> <m>`"));
            }
            let mut count = |what: &str| -> Result<usize> {
                let tok = toks
                    .next()
                    .ok_or_else(|| parse_err(lineno, format!("missing {what} in problem line")))?;
                tok.parse()
                    .map_err(|_| parse_err(lineno, format!("invalid {what} `{tok}`")))
            };
            let n = count("node count")?;
            let m = count("edge count")?;
            expect_end(toks, lineno)?;
            header = Some((n, m, lineno));
            weights = vec![None; n];
            continue;
        }
        let Some((n, _, _)) = header else {
            return Err(parse_err(
                lineno,
                "expected `p edge <n> <m>` before data lines",
            ));
        };
        match tag {
            "n" => {
                let v = parse_node(toks.next(), n, lineno)?;
                let tok = toks
                    .next()
                    .ok_or_else(|| parse_err(lineno, "missing weight"))?;
                let w: i64 = tok
                    .parse()
                    .map_err(|_| parse_err(lineno, format!("non-integer weight `{tok}`")))?;
                if w.unsigned_abs() > NodeWeights::MAX_ABS as u64 {
                    return Err(parse_err(
                        lineno,
                        format!("weight {w} exceeds 2^61 in magnitude"),
                    ));
                }
                expect_end(toks, lineno)?;
                if weights[v].replace(w).is_some() {
                    return Err(parse_err(
                        lineno,
                        format!("second weight for node {}", v + 1),
                    ));
                }
            }
            "e" => {
                let u = parse_node(toks.next(), n, lineno)?;
                let v = parse_node(toks.next(), n, lineno)?;
                expect_end(toks, lineno)?;
                if u == v {
                    return Err(parse_err(lineno, format!("self-loop on node {}", u + 1)));
                }
                edges.push((u, v));
            }
            other => return Err(parse_err(lineno, format!("unknown line type `{other}`"))),
        }
    }

    let (n, m, header_line) =
        header.ok_or_else(|| parse_err(last_line + 1, "missing `p edge <n> <m>` line"))?;
    if edges.len() != m {
        return Err(parse_err(
            header_line,
            format!(
                "header declares {m} edges but {} edge lines follow",
                edges.len()
            ),
        ));
    }
    let graph = Graph::new(n, &edges)?;
    let weights = NodeWeights::new(weights.into_iter().map(|w| w.unwrap_or(1)).collect())?;
    Ok(Instance {
        graph,
        weights,
        comments,
    })
}

pub fn read_instance_str(text: &str) -> Result<Instance> {
    read_instance(text.as_bytes())
}

/// Serializes an instance; weights equal to the default 1 are omitted and
/// edges are written once each in ascending order.
pub fn write_instance(graph: &Graph, weights: &NodeWeights, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        if c.is_empty() {
            out.push_str("c\n");
        } else {
            let _ = writeln!(out, "c {c}");
        }
    }
    let _ = writeln!(out, "p edge {} {}", graph.n(), graph.m());
    for (v, &w) in weights.as_slice().iter().enumerate() {
        if w != 1 {
            let _ = writeln!(out, "n {} {w}", v + 1);
        }
    }
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
