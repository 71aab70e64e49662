//! Command-line front end. Every command writes to `out` and returns the
//! process exit status: 0 success, 1 verification failure, 2 budget
//! exhausted, 3 bad input.

use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use graceful_core::labeling::{enumerate_graceful, EnumerationMode};
use graceful_core::solver::{solve_table, table_instances, TableRow};
use graceful_core::strategies::{verify_strategy_with, VerifyOptions};
use graceful_core::{build_family, solve, FamilySpec, Move, Player, StrategyId};
use serde::Serialize;
use serde_json::json;

use crate::family::{default_family, FamilyArgs};
use crate::service::{serve, ServiceConfig};
use crate::session::Session;
use crate::{AppError, Engine};

#[derive(Debug, Parser)]
#[command(name = "graceful", version, about = "Solve and play the Graceful labeling game")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Mode {
    Raw,
    Canonical,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Winner and optimal moves from the empty board.
    Solve {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        first: Player,
        #[arg(long, env = "GRACEFUL_BUDGET", default_value_t = crate::DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Graceful labelings of a graph.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Mode::Raw)]
        mode: Mode,
        #[arg(long, env = "GRACEFUL_BUDGET", default_value_t = crate::DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Checks a strategy against every opponent reply.
    Verify {
        #[arg(long)]
        strategy: StrategyId,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        first: Player,
        #[arg(long, env = "GRACEFUL_BUDGET", default_value_t = crate::DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Winners of the desk-scale instance table.
    Table {
        #[arg(long, env = "GRACEFUL_BUDGET", default_value_t = crate::DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Play against the engine in the terminal.
    Play {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        first: Player,
        #[arg(long, default_value = "alice")]
        human: Player,
        #[arg(long, default_value = "solver")]
        engine: String,
        #[arg(long, env = "GRACEFUL_BUDGET", default_value_t = crate::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value_t = 1024)]
        session_cap: usize,
        /// Load sessions from this file at start and save them on shutdown.
        #[arg(long)]
        snapshot: Option<PathBuf>,
        /// Solve each game fully when its session starts.
        #[arg(long)]
        precompute: bool,
        #[arg(long, env = "GRACEFUL_BUDGET", default_value_t = crate::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Graphviz rendering of a graph, optionally labeled.
    ExportDot {
        #[command(flatten)]
        family: FamilyArgs,
        /// Vertex labels in vertex order; `-` leaves a vertex free.
        #[arg(long)]
        labels: Option<String>,
    },
}

/// One row of the winners table, in the table's A/B notation.
#[derive(Debug, Clone, Serialize)]
pub struct TableReportRow {
    pub family: String,
    pub params: Vec<usize>,
    pub alice_first: Option<char>,
    pub bob_first: Option<char>,
    pub nodes_expanded: u64,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub v: u32,
    pub rows: Vec<TableReportRow>,
}

impl TableReport {
    pub fn from_rows(rows: &[TableRow]) -> TableReport {
        TableReport {
            v: 1,
            rows: rows
                .iter()
                .map(|r| TableReportRow {
                    family: r.instance.to_string(),
                    params: r.instance.params(),
                    alice_first: r.alice_first.map(Player::letter),
                    bob_first: r.bob_first.map(Player::letter),
                    nodes_expanded: r.nodes_expanded,
                    error: r.error.clone(),
                })
                .collect(),
        }
    }
}

fn moves_text(moves: &[Move]) -> String {
    moves.iter().map(|m| format!("({},{})", m.vertex, m.label)).collect::<Vec<_>>().join(" ")
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), AppError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| AppError::Internal(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

fn io(e: std::io::Error) -> AppError {
    AppError::Internal(e.to_string())
}

/// Runs one command. Errors are reported on stderr.
pub fn run(cli: Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> i32 {
    match dispatch(cli, input, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, AppError> {
    match cli.command {
        Command::Solve { family, first, budget, json } => cmd_solve(&family.resolve(None)?, first, budget, json, out),
        Command::Enumerate { family, mode, budget, json } => cmd_enumerate(&family.resolve(None)?, mode, budget, json, out),
        Command::Verify { strategy, family, first, budget, json } => {
            let spec = family.resolve(Some(default_family(strategy)))?;
            cmd_verify(strategy, &spec, first, budget, json, out)
        }
        Command::Table { budget, json } => cmd_table(budget, json, out),
        Command::Play { family, first, human, engine, budget } => {
            let engine: Engine = engine.parse()?;
            cmd_play(family.resolve(None)?, first, human, engine, budget, input, out)
        }
        Command::Serve { port, session_cap, snapshot, precompute, budget } => {
            let config = ServiceConfig { session_cap, budget, precompute, snapshot };
            let rt = tokio::runtime::Runtime::new().map_err(io)?;
            rt.block_on(serve(port, config))?;
            Ok(0)
        }
        Command::ExportDot { family, labels } => cmd_dot(&family.resolve(None)?, labels.as_deref(), out),
    }
}

fn cmd_solve(spec: &FamilySpec, first: Player, budget: u64, json: bool, out: &mut dyn Write) -> Result<i32, AppError> {
    let g = Arc::new(build_family(spec)?);
    let r = solve(g, first, budget)?;
    if json {
        write_json(
            out,
            &json!({
                "v": 1,
                "instance": spec.to_string(),
                "first": first,
                "winner": r.winner,
                "optimal_moves": r.optimal_moves,
                "principal_variation": r.principal_variation,
                "nodes_expanded": r.nodes_expanded,
            }),
        )?;
    } else {
        writeln!(out, "instance: {spec}").map_err(io)?;
        writeln!(out, "first: {first}").map_err(io)?;
        writeln!(out, "winner: {}", r.winner).map_err(io)?;
        writeln!(out, "optimal moves: {}", moves_text(&r.optimal_moves)).map_err(io)?;
        writeln!(out, "principal variation: {}", moves_text(&r.principal_variation)).map_err(io)?;
        writeln!(out, "nodes expanded: {}", r.nodes_expanded).map_err(io)?;
    }
    Ok(0)
}

fn cmd_enumerate(spec: &FamilySpec, mode: Mode, budget: u64, json: bool, out: &mut dyn Write) -> Result<i32, AppError> {
    let g = build_family(spec)?;
    let m = match mode {
        Mode::Raw => EnumerationMode::Raw,
        Mode::Canonical => EnumerationMode::UpToAutomorphism,
    };
    let all = enumerate_graceful(&g, m, budget)?;
    if json {
        let labelings: Vec<&[usize]> = all.iter().map(|f| f.as_slice()).collect();
        write_json(
            out,
            &json!({ "v": 1, "instance": spec.to_string(), "mode": m, "count": all.len(), "labelings": labelings }),
        )?;
    } else {
        for f in &all {
            writeln!(out, "{f}").map_err(io)?;
        }
        writeln!(out, "count: {}", all.len()).map_err(io)?;
    }
    Ok(0)
}

fn cmd_verify(
    id: StrategyId,
    spec: &FamilySpec,
    first: Player,
    budget: u64,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, AppError> {
    let options = VerifyOptions {
        budget,
        ..VerifyOptions::default()
    };
    let v = verify_strategy_with(id, spec, first, options)?;
    if json {
        let mut value = serde_json::to_value(&v).map_err(|e| AppError::Internal(e.to_string()))?;
        value["v"] = json!(1);
        value["instance"] = json!(spec.to_string());
        write_json(out, &value)?;
    } else {
        writeln!(out, "strategy: {id}").map_err(io)?;
        writeln!(out, "instance: {spec}").map_err(io)?;
        writeln!(out, "first: {first}").map_err(io)?;
        writeln!(out, "{}", if v.holds { "holds" } else { "fails" }).map_err(io)?;
        writeln!(out, "lines checked: {}", v.lines_checked).map_err(io)?;
        writeln!(out, "solver fallbacks: {}", v.offscript_count).map_err(io)?;
        writeln!(out, "refutations: {}", v.refutation_count).map_err(io)?;
        if let Some(line) = &v.counterexample {
            writeln!(out, "counterexample: {}", moves_text(line)).map_err(io)?;
        }
    }
    Ok(if v.holds { 0 } else { 1 })
}

fn cmd_table(budget: u64, json: bool, out: &mut dyn Write) -> Result<i32, AppError> {
    let report = TableReport::from_rows(&solve_table(&table_instances(), budget));
    if json {
        write_json(out, &report)?;
    } else {
        writeln!(out, "{:<20} {:>6} {:>6} {:>12}", "instance", "alice", "bob", "nodes").map_err(io)?;
        for r in &report.rows {
            let cell = |w: Option<char>| w.map_or("?".to_string(), String::from);
            write!(out, "{:<20} {:>6} {:>6} {:>12}", r.family, cell(r.alice_first), cell(r.bob_first), r.nodes_expanded)
                .map_err(io)?;
            match &r.error {
                Some(e) => writeln!(out, "  error: {e}").map_err(io)?,
                None => writeln!(out).map_err(io)?,
            }
        }
    }
    let budget_hit = report.rows.iter().any(|r| r.error.is_some());
    Ok(if budget_hit { 2 } else { 0 })
}

fn board(s: &Session) -> String {
    let g = s.state.graph();
    let lab = s.state.labeling();
    let mut text = String::new();
    for v in 0..g.n_vertices() {
        let l = lab.label(v).map_or("_".to_string(), |l| l.to_string());
        text.push_str(&format!("  {v} {:<12} {l}\n", g.name(v)));
    }
    let used: Vec<String> = lab.used_edge_labels().iter().map(|l| l.to_string()).collect();
    text.push_str(&format!("  edge labels: {}\n", used.join(" ")));
    text
}

fn cmd_play(
    spec: FamilySpec,
    first: Player,
    human: Player,
    engine: Engine,
    budget: u64,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32, AppError> {
    let mut s = Session::new("terminal".into(), spec, first, human, engine, budget, false)?;
    writeln!(out, "{} with m = {}; you are {human}. Enter `vertex label`, `hint` or `quit`.", s.spec, s.state.m())
        .map_err(io)?;
    if let Some(mv) = s.state.moves().first().filter(|_| first != human) {
        writeln!(out, "engine plays ({},{})", mv.vertex, mv.label).map_err(io)?;
    }
    let mut line = String::new();
    while !s.is_over() {
        write!(out, "{}> ", board(&s)).map_err(io)?;
        out.flush().map_err(io)?;
        line.clear();
        if input.read_line(&mut line).map_err(io)? == 0 {
            return Ok(0);
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        match words[..] {
            ["quit"] | ["q"] => return Ok(0),
            ["hint"] => match s.hint() {
                Ok(h) => writeln!(out, "hint: ({},{}), {} wins with best play", h.mv.vertex, h.mv.label, h.winner)
                    .map_err(io)?,
                Err(e) => writeln!(out, "no hint: {e}").map_err(io)?,
            },
            [v, l] => {
                let (Ok(v), Ok(l)) = (v.parse(), l.parse()) else {
                    writeln!(out, "expected two numbers").map_err(io)?;
                    continue;
                };
                match s.human_move(Move::new(v, l)) {
                    Ok(Some(mv)) => writeln!(out, "engine plays ({},{})", mv.vertex, mv.label).map_err(io)?,
                    Ok(None) => {}
                    Err(e) => writeln!(out, "rejected: {e}").map_err(io)?,
                }
            }
            _ => writeln!(out, "expected `vertex label`, `hint` or `quit`").map_err(io)?,
        }
    }
    write!(out, "{}", board(&s)).map_err(io)?;
    let winner = s.state.status().winner().ok_or(AppError::GameOver)?;
    writeln!(out, "{winner} wins").map_err(io)?;
    Ok(0)
}

fn cmd_dot(spec: &FamilySpec, labels: Option<&str>, out: &mut dyn Write) -> Result<i32, AppError> {
    let g = build_family(spec)?;
    let text = match labels {
        None => g.to_dot(),
        Some(list) => {
            let labels = list
                .split(',')
                .map(|x| match x.trim() {
                    "-" | "" => Ok(None),
                    t => t.parse().map(Some).map_err(|_| AppError::BadInput(format!("bad label {t:?}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            if labels.len() != g.n_vertices() {
                return Err(AppError::BadInput(format!("{} labels for {} vertices", labels.len(), g.n_vertices())));
            }
            g.to_dot_labeled(&labels)
        }
    };
    write!(out, "{text}").map_err(io)?;
    Ok(0)
}
