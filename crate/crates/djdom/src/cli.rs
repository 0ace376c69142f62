//! Command-line front end.
//!
//! One command per invocation: solve, transform, generate, verify, or order.
//! Graphs are read from a file path or standard input with `-`. Human output
//! echoes the command, an input fingerprint, and the result; `--porcelain`
//! switches to line-oriented machine output (`k`, `s`, optional `t`, `ok`)
//! that is byte-stable across runs. The timing line is opt-in via `--timing`
//! so that default porcelain output stays diffable.
//!
//! Exit codes: 0 success, 2 invalid input, 3 search budget exhausted.

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::exact::{self, SearchConfig, Strategy};
use crate::generators;
use crate::graph::{
    is_disjunctive_dominating, is_dominating, is_two_dominating, is_vertex_cover, parse_graph,
    serialize_graph, Graph, VertexSet,
};
use crate::greedy::approx_disjunctive;
use crate::ordering::{compute_bco, is_bco, is_contiguous};
use crate::pig::solve_pig_linear;
use crate::reductions::{apx_gadget_transform, domination_hardness_transform, gc_transform};

#[derive(Parser)]
#[command(name = "djdom", version, about = "Disjunctive domination toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    /// Linear solver for connected proper interval graphs (b = 2).
    Pig,
    /// Branch and bound, optimal on any graph.
    Exact,
    /// Multicover greedy with a logarithmic guarantee.
    Greedy,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Problem {
    /// b-disjunctive domination.
    Ddp,
    /// Domination.
    Dom,
    /// 2-domination.
    #[value(name = "2dom")]
    TwoDom,
    /// Vertex cover.
    Vc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TransformKind {
    /// Pendant on every vertex.
    Gc,
    /// Chain and shared apex on every vertex.
    Domhard,
    /// Nine-vertex gadget per edge.
    Apx,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    /// Random connected proper interval graph.
    Pig,
    /// Random connected Erdos-Renyi graph.
    Gnp,
    /// Random tree.
    Tree,
    /// Random connected cubic graph.
    Cubic,
    /// Fixed family by name: pN, cN, kN, starN, claw, petersen.
    Named,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem on a graph and verify the answer.
    Solve {
        #[arg(value_enum)]
        algo: Algo,
        /// Graph file in edge-list format, or - for standard input.
        #[arg(default_value = "-")]
        graph: String,
        #[arg(long, value_enum, default_value = "ddp")]
        problem: Problem,
        /// Disjunctive requirement b.
        #[arg(long, default_value_t = 2)]
        b: u32,
        /// Search node budget for the exact solver.
        #[arg(long, default_value_t = exact::DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long)]
        porcelain: bool,
        /// Include the wall-time line in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Apply a graph transform and print the resulting edge list.
    Transform {
        #[arg(value_enum)]
        kind: TransformKind,
        #[arg(default_value = "-")]
        graph: String,
        /// Also print one `role <vertex> <tag>` line per new vertex.
        #[arg(long)]
        roles: bool,
    },
    /// Generate a graph and print its edge list.
    Generate {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for gnp.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Family name for the named kind.
        #[arg(long)]
        name: Option<String>,
    },
    /// Check a vertex set against a problem's definition.
    Verify {
        #[arg(default_value = "-")]
        graph: String,
        /// Comma-separated vertex list, e.g. 1,2,5 (empty for the empty set).
        #[arg(long, default_value = "")]
        set: String,
        #[arg(long, value_enum, default_value = "ddp")]
        problem: Problem,
        #[arg(long, default_value_t = 2)]
        b: u32,
        #[arg(long)]
        porcelain: bool,
        #[arg(long)]
        timing: bool,
    },
    /// Compute a certified umbrella ordering of a proper interval graph.
    Order {
        #[arg(default_value = "-")]
        graph: String,
        #[arg(long)]
        porcelain: bool,
        #[arg(long)]
        timing: bool,
    },
}

/// Parse `args` (without the program name) and execute, writing reports to
/// `out`. Returns the process exit code.
pub fn run_from<W: Write>(args: &[String], out: &mut W) -> i32 {
    let mut argv = Vec::with_capacity(args.len() + 1);
    argv.push("djdom".to_string());
    argv.extend(args.iter().cloned());
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let echo = args.join(" ");
    match execute(cli.command, &echo, out) {
        Ok(()) => 0,
        Err(Error::BudgetExceeded(limit)) => {
            eprintln!("error: search budget of {limit} nodes exhausted");
            3
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute<W: Write>(command: Command, echo: &str, out: &mut W) -> Result<()> {
    match command {
        Command::Solve { algo, graph, problem, b, budget, porcelain, timing } => {
            let (g, input) = load_graph(&graph)?;
            let start = std::time::Instant::now();
            let solution = match algo {
                Algo::Pig => {
                    if problem != Problem::Ddp {
                        return Err(Error::InvalidParameter(
                            "the pig solver handles problem ddp only".into(),
                        ));
                    }
                    if b != 2 {
                        return Err(Error::InvalidParameter(
                            "the pig solver is specific to b = 2".into(),
                        ));
                    }
                    solve_pig_linear(&g)?
                }
                Algo::Exact => {
                    let cfg = SearchConfig { strategy: Strategy::BranchAndBound, node_budget: budget };
                    match problem {
                        Problem::Ddp => exact::exact_disjunctive(&g, b, &cfg)?,
                        Problem::Dom => exact::exact_domination(&g, &cfg)?,
                        Problem::TwoDom => exact::exact_two_domination(&g, &cfg)?,
                        Problem::Vc => exact::exact_vertex_cover(&g, &cfg)?,
                    }
                }
                Algo::Greedy => {
                    if problem != Problem::Ddp {
                        return Err(Error::InvalidParameter(
                            "the greedy solver handles problem ddp only".into(),
                        ));
                    }
                    approx_disjunctive(&g, b)?
                }
            };
            let elapsed = start.elapsed();
            let ok = verdict(&g, problem, b, &solution)?;
            report(out, porcelain, timing.then(|| elapsed), echo, &input, &solution, ok)
        }
        Command::Transform { kind, graph, roles } => {
            let (g, _) = load_graph(&graph)?;
            let tr = match kind {
                TransformKind::Gc => gc_transform(&g),
                TransformKind::Domhard => domination_hardness_transform(&g),
                TransformKind::Apx => apx_gadget_transform(&g)?,
            };
            write_str(out, &serialize_graph(&tr.h))?;
            if roles {
                for (v, role) in tr.role.iter().enumerate() {
                    write_str(out, &format!("role {v} {role}\n"))?;
                }
            }
            Ok(())
        }
        Command::Generate { kind, n, seed, p, name } => {
            let need_n = || {
                n.ok_or_else(|| Error::InvalidParameter("--n is required for this kind".into()))
            };
            let g = match kind {
                GenKind::Pig => generators::gen_proper_interval(need_n()?, seed)?,
                GenKind::Gnp => generators::gen_connected(need_n()?, p, seed)?,
                GenKind::Tree => generators::gen_tree(need_n()?, seed)?,
                GenKind::Cubic => generators::gen_cubic(need_n()?, seed)?,
                GenKind::Named => {
                    let name = name.ok_or_else(|| {
                        Error::InvalidParameter("--name is required for the named kind".into())
                    })?;
                    generators::named(&name)?
                }
            };
            write_str(out, &serialize_graph(&g))
        }
        Command::Verify { graph, set, problem, b, porcelain, timing } => {
            let (g, input) = load_graph(&graph)?;
            let solution = parse_set(&set)?;
            let start = std::time::Instant::now();
            let ok = verdict(&g, problem, b, &solution)?;
            let elapsed = start.elapsed();
            report(out, porcelain, timing.then(|| elapsed), echo, &input, &solution, ok)
        }
        Command::Order { graph, porcelain, timing } => {
            let (g, input) = load_graph(&graph)?;
            let start = std::time::Instant::now();
            let ord = compute_bco(&g)?;
            let elapsed = start.elapsed();
            // Re-certify from scratch rather than trusting the constructor.
            let ok = is_contiguous(&g, &ord) && is_bco(&g, &ord)?;
            let as_set = ord.order().to_vec();
            report_sequence(out, porcelain, timing.then(|| elapsed), echo, &input, &as_set, ok)
        }
    }
}

fn load_graph(path: &str) -> Result<(Graph, String)> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidParameter(format!("cannot read standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParameter(format!("cannot read {path}: {e}")))?
    };
    let g = parse_graph(&text)?;
    let input = format!("n={} m={} fnv1a={:016x}", g.n(), g.m(), fnv1a(text.as_bytes()));
    Ok((g, input))
}

fn parse_set(spec: &str) -> Result<VertexSet> {
    let mut set = VertexSet::new();
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let v: usize = part
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad vertex {part:?} in --set")))?;
        set.insert(v);
    }
    Ok(set)
}

fn verdict(g: &Graph, problem: Problem, b: u32, set: &VertexSet) -> Result<bool> {
    match problem {
        Problem::Ddp => is_disjunctive_dominating(g, set, b),
        Problem::Dom => is_dominating(g, set),
        Problem::TwoDom => is_two_dominating(g, set),
        Problem::Vc => is_vertex_cover(g, set),
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for &byte in bytes {
        h ^= byte as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn report<W: Write>(
    out: &mut W,
    porcelain: bool,
    elapsed: Option<std::time::Duration>,
    echo: &str,
    input: &str,
    solution: &VertexSet,
    ok: bool,
) -> Result<()> {
    report_sequence(out, porcelain, elapsed, echo, input, solution.members(), ok)
}

fn report_sequence<W: Write>(
    out: &mut W,
    porcelain: bool,
    elapsed: Option<std::time::Duration>,
    echo: &str,
    input: &str,
    items: &[usize],
    ok: bool,
) -> Result<()> {
    let joined =
        items.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    if porcelain {
        write_str(out, &format!("k {}\ns {joined}\n", items.len()))?;
        if let Some(t) = elapsed {
            write_str(out, &format!("t {}\n", t.as_millis()))?;
        }
        write_str(out, &format!("ok {}\n", ok as u8))
    } else {
        write_str(out, &format!("command: {echo}\ninput: {input}\n"))?;
        write_str(out, &format!("k: {}\ns: {joined}\n", items.len()))?;
        write_str(out, &format!("verify: {}\n", if ok { "VALID" } else { "INVALID" }))?;
        if let Some(t) = elapsed {
            write_str(out, &format!("time: {} ms\n", t.as_millis()))?;
        }
        Ok(())
    }
}

fn write_str<W: Write>(out: &mut W, s: &str) -> Result<()> {
    out.write_all(s.as_bytes())
        .map_err(|e| Error::InvalidParameter(format!("cannot write output: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String) {
        let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut buf = Vec::new();
        let code = run_from(&argv, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn generate_then_shape() {
        let (code, out) = run(&["generate", "named", "--name", "p4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "p 4 3\ne 0 1\ne 1 2\ne 2 3\n");
    }

    #[test]
    fn fixed_hash_value() {
        // FNV-1a of "a" is the published test vector.
        assert_eq!(fnv1a(b"a"), 0xaf63dc4c8601ec8c);
        assert_eq!(fnv1a(b""), 0xcbf29ce484222325);
    }

    #[test]
    fn set_parsing() {
        assert_eq!(parse_set("1,2,5").unwrap().members(), &[1, 2, 5]);
        assert_eq!(parse_set(" 3 , 1 ").unwrap().members(), &[1, 3]);
        assert!(parse_set("").unwrap().is_empty());
        assert!(parse_set("1,x").is_err());
    }

    #[test]
    fn unknown_flags_exit_with_usage_code() {
        let (code, _) = run(&["solve", "pig", "--no-such-flag"]);
        assert_eq!(code, 2);
        let (code, _) = run(&["frobnicate"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn help_exits_cleanly() {
        let (code, _) = run(&["--help"]);
        assert_eq!(code, 0);
    }
}
