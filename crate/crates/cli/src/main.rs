//! `hom`: build Hom complexes, compute exact homology and Stiefel-Whitney
//! heights, dump E1 tableaux, and assemble chromatic bound reports.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use homcx::cache::{cache_key, ComplexCache};
use homcx::chain::cellular_chain;
use homcx::equivariant::{sw_height, DEFAULT_SIMPLEX_CAP};
use homcx::error::Error;
use homcx::filtration::{e1_page, support_filtration};
use homcx::hom::{complete_involution, cycle_involution, DEFAULT_CELL_CAP};
use homcx::obstruction::{
    chi_lower_connectivity, chi_lower_sw, BoundReport, Caps, Strategy, StrategyEntry,
};
use homcx::{Graph, HomComplex};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "hom", version, about = "Exact topology of graph Hom complexes")]
struct Cli {
    /// Worker threads for multi-strategy commands
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Complex cache directory (or set HOM_CACHE_DIR)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Write the report here (atomically) instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build Hom(source, target) and report its cell structure
    Build {
        /// family spec (complete:4, cycle:5, kneser:5,2, path:4) or file path
        source: String,
        target: String,
        #[arg(long)]
        dim_cap: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CELL_CAP)]
        max_cells: usize,
    },
    /// Exact homology of Hom(source, target)
    Homology {
        source: String,
        target: String,
        /// coefficient ring: z or f2
        #[arg(long, default_value = "z")]
        ring: String,
        #[arg(long)]
        dim_cap: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CELL_CAP)]
        max_cells: usize,
    },
    /// Height of the first Stiefel-Whitney class of Hom(source, target)
    SwHeight {
        /// odd cycle (gamma action) or complete graph (swap action)
        source: String,
        target: String,
        /// highest cup power attempted
        #[arg(long, default_value_t = 8)]
        cap: usize,
        #[arg(long)]
        dim_cap: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CELL_CAP)]
        max_cells: usize,
    },
    /// Chromatic lower-bound report for a graph
    ChiBound {
        graph: String,
        /// comma-separated strategies, e.g. sw-complete:2,conn-neighborhood
        /// (aliases: k<m> = sw-complete:m, neighborhood)
        #[arg(long)]
        strategy: Option<String>,
        #[arg(long, default_value_t = 2_000_000)]
        max_cells: usize,
        /// highest cup power attempted by sw strategies
        #[arg(long, default_value_t = 8)]
        sw_cap: usize,
    },
    /// E1 tableau of the support filtration of Hom_+(graph, K_n)
    E1Page {
        graph: String,
        n: usize,
        /// csv or json
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Repeatedly delete foldable vertices
    FoldReduce { graph: String },
    /// Run named verification checks
    Verify {
        /// run one named check
        #[arg(long)]
        check: Option<String>,
        /// include the heavy (tens of minutes) checks
        #[arg(long)]
        all: bool,
        /// list available checks and exit
        #[arg(long)]
        list: bool,
    },
}

fn resolve_graph(spec: &str) -> Result<Graph, Error> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec)?;
        Graph::from_text(&text)
    } else {
        Graph::from_spec(spec)
    }
}

fn emit(out: &Option<PathBuf>, bytes: &[u8]) -> Result<(), Error> {
    match out {
        None => {
            std::io::stdout().write_all(bytes)?;
            Ok(())
        }
        Some(path) => {
            // atomic single write: temp file in the target directory, rename
            let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
            let tmp = match dir {
                Some(d) => d.join(format!(
                    ".{}.tmp",
                    path.file_name().unwrap_or_default().to_string_lossy()
                )),
                None => PathBuf::from(format!(".{}.tmp", path.to_string_lossy())),
            };
            std::fs::write(&tmp, bytes)?;
            std::fs::rename(&tmp, path)?;
            Ok(())
        }
    }
}

fn envelope(command: &str, input_hash: &str, body: Value) -> Vec<u8> {
    let mut v = json!({
        "tool_version": VERSION,
        "command": command,
        "input_hash": input_hash,
    });
    if let (Value::Object(env), Value::Object(b)) = (&mut v, body) {
        for (k, val) in b {
            env.insert(k, val);
        }
    }
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s.into_bytes()
}

fn cache_dir(cli: &Cli) -> Option<PathBuf> {
    cli.cache_dir
        .clone()
        .or_else(|| std::env::var_os("HOM_CACHE_DIR").map(PathBuf::from))
}

fn build_cached(
    cli: &Cli,
    source: &Graph,
    target: &Graph,
    dim_cap: Option<usize>,
    max_cells: usize,
) -> Result<(HomComplex, String), Error> {
    let key = cache_key(source, target, dim_cap, VERSION);
    if let Some(dir) = cache_dir(cli) {
        let cache = ComplexCache::new(dir);
        if let Some(x) = cache.load(&key) {
            eprintln!("cache hit: {key}");
            return Ok((x, key));
        }
        let x = HomComplex::build(source, target, dim_cap, max_cells)?;
        cache.store(&key, &x)?;
        return Ok((x, key));
    }
    Ok((HomComplex::build(source, target, dim_cap, max_cells)?, key))
}

fn involution_for(x: &HomComplex) -> Result<homcx::hom::Involution, Error> {
    let src = &x.source;
    let n = src.vertex_count();
    if n >= 3 && n % 2 == 1 && *src == Graph::cycle(n)? {
        cycle_involution(x)
    } else if n >= 2 && *src == Graph::complete(n)? {
        complete_involution(x)
    } else {
        Err(Error::BadParameter(
            "sw-height needs an odd-cycle or complete source graph".into(),
        ))
    }
}

fn parse_strategies(arg: &Option<String>) -> Result<Vec<Strategy>, Error> {
    let Some(list) = arg else {
        return Ok(Strategy::default_set());
    };
    list.split(',')
        .map(|tok| {
            let tok = tok.trim();
            if tok == "neighborhood" {
                return Ok(Strategy::ConnNeighborhood);
            }
            if let Some(m) = tok.strip_prefix('k').and_then(|r| r.parse::<usize>().ok()) {
                if m >= 2 {
                    return Ok(Strategy::SwComplete { m });
                }
            }
            Strategy::parse(tok)
        })
        .collect()
}

fn run_strategies(
    g: &Graph,
    strategies: &[Strategy],
    caps: &Caps,
    threads: usize,
) -> Vec<StrategyEntry> {
    let run_one = |s: Strategy| -> StrategyEntry {
        let start = std::time::Instant::now();
        let r = match s {
            Strategy::SwCycle { .. } | Strategy::SwComplete { .. } => chi_lower_sw(g, s, caps),
            _ => chi_lower_connectivity(g, s, caps),
        };
        r.unwrap_or_else(|err| StrategyEntry {
            name: s.name(),
            complex_cells_by_dim: Vec::new(),
            invariant: None,
            bound: None,
            rigor: "rigorous".into(),
            ms: start.elapsed().as_millis() as u64,
            note: Some(format!("strategy failed: {err}")),
        })
    };
    if threads <= 1 || strategies.len() <= 1 {
        return strategies.iter().map(|&s| run_one(s)).collect();
    }
    // run concurrently, collect in input order for determinism
    let mut out: Vec<Option<StrategyEntry>> = vec![None; strategies.len()];
    std::thread::scope(|scope| {
        let handles: Vec<_> = strategies
            .iter()
            .map(|&s| scope.spawn(move || run_one(s)))
            .collect();
        for (slot, h) in out.iter_mut().zip(handles) {
            *slot = Some(h.join().expect("strategy thread panicked"));
        }
    });
    out.into_iter().map(|e| e.expect("filled")).collect()
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.cmd {
        Cmd::Build {
            source,
            target,
            dim_cap,
            max_cells,
        } => {
            let (g, h) = (resolve_graph(source)?, resolve_graph(target)?);
            let (x, key) = build_cached(cli, &g, &h, *dim_cap, *max_cells)?;
            let body = json!({
                "source": source,
                "target": target,
                "dim_cap": dim_cap,
                "cells_by_dim": x.f_vector(),
                "total_cells": x.cell_count(),
                "max_dim": x.max_dim(),
                "euler_characteristic": x.euler_characteristic(),
            });
            emit(&cli.output, &envelope("build", &key, body))
        }
        Cmd::Homology {
            source,
            target,
            ring,
            dim_cap,
            max_cells,
        } => {
            let (g, h) = (resolve_graph(source)?, resolve_graph(target)?);
            let (x, key) = build_cached(cli, &g, &h, *dim_cap, *max_cells)?;
            let chain = cellular_chain(&x)?;
            let body = match ring.as_str() {
                "f2" => json!({
                    "ring": "f2",
                    "cells_by_dim": x.f_vector(),
                    "betti": chain.homology_f2(),
                }),
                "z" => {
                    let hz = chain.homology_z();
                    json!({
                        "ring": "z",
                        "cells_by_dim": x.f_vector(),
                        "betti": hz.iter().map(|g| g.free_rank).collect::<Vec<_>>(),
                        "torsion": hz
                            .iter()
                            .map(|g| g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    })
                }
                other => {
                    return Err(Error::BadParameter(format!(
                        "unknown ring '{other}' (use z or f2)"
                    )))
                }
            };
            emit(&cli.output, &envelope("homology", &key, body))
        }
        Cmd::SwHeight {
            source,
            target,
            cap,
            dim_cap,
            max_cells,
        } => {
            let (g, h) = (resolve_graph(source)?, resolve_graph(target)?);
            let (x, key) = build_cached(cli, &g, &h, *dim_cap, *max_cells)?;
            let sigma = involution_for(&x)?;
            let height = sw_height(&x, &sigma, *cap, DEFAULT_SIMPLEX_CAP)?;
            let body = json!({
                "height": height,
                "powers_checked": (height + 1).min(*cap),
                "cap": cap,
                "cells_by_dim": x.f_vector(),
            });
            emit(&cli.output, &envelope("sw-height", &key, body))
        }
        Cmd::ChiBound {
            graph,
            strategy,
            max_cells,
            sw_cap,
        } => {
            let g = resolve_graph(graph)?;
            let strategies = parse_strategies(strategy)?;
            let caps = Caps {
                max_cells: *max_cells,
                sw_cap: *sw_cap,
                simplex_cap: DEFAULT_SIMPLEX_CAP,
            };
            let greedy_upper = g.greedy_chromatic_upper()?;
            let entries = run_strategies(&g, &strategies, &caps, cli.threads);
            let trivial = if g.vertex_count() == 0 { 0i64 } else { 1 };
            let best_lower = entries
                .iter()
                .filter_map(|e| e.bound)
                .max()
                .map(|b| b.max(trivial) as usize)
                .unwrap_or(trivial as usize);
            if best_lower > greedy_upper {
                return Err(Error::Soundness(format!(
                    "lower bound {best_lower} exceeds upper bound {greedy_upper}"
                )));
            }
            let report = BoundReport {
                input: g.to_text(),
                strategies: entries,
                greedy_upper,
                best_lower,
            };
            let key = cache_key(&g, &g, None, VERSION);
            emit(
                &cli.output,
                &envelope("chi-bound", &key, serde_json::to_value(&report).expect("serializable")),
            )
        }
        Cmd::E1Page { graph, n, format } => {
            let g = resolve_graph(graph)?;
            let f = support_filtration(&g, *n, DEFAULT_SIMPLEX_CAP)?;
            let page = e1_page(&f)?;
            if page.euler_characteristic() != f.plus.euler_characteristic() {
                return Err(Error::Soundness("E1 page fails Euler consistency".into()));
            }
            match format.as_str() {
                "csv" => {
                    let mut out = String::from("d,s,rank,torsion\n");
                    for (s, per_s) in page.groups_z.iter().enumerate() {
                        for (d, grp) in per_s.iter().enumerate() {
                            let torsion = grp
                                .torsion
                                .iter()
                                .map(|t| t.to_string())
                                .collect::<Vec<_>>()
                                .join(";");
                            out.push_str(&format!("{d},{s},{},{torsion}\n", grp.free_rank));
                        }
                    }
                    emit(&cli.output, out.as_bytes())
                }
                "json" => {
                    let key = cache_key(&g, &Graph::complete(*n)?, None, VERSION);
                    let body = json!({
                        "n": n,
                        "ranks_f2": page.ranks_f2,
                        "groups_z": page
                            .groups_z
                            .iter()
                            .map(|per_s| per_s.iter().map(|g| g.to_string()).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                        "euler_characteristic": page.euler_characteristic(),
                    });
                    emit(&cli.output, &envelope("e1-page", &key, body))
                }
                other => Err(Error::BadParameter(format!(
                    "unknown format '{other}' (use csv or json)"
                ))),
            }
        }
        Cmd::FoldReduce { graph } => {
            let mut g = resolve_graph(graph)?;
            // original labels of the surviving vertices
            let mut orig: Vec<usize> = (0..g.vertex_count()).collect();
            let mut steps = Vec::new();
            loop {
                let folds = g.find_folds();
                let Some(&(u, v)) = folds.first() else { break };
                steps.push(json!({ "removed": orig[v], "onto": orig[u] }));
                let (next, kept) = g.delete_vertex(v);
                orig = kept.into_iter().map(|old| orig[old]).collect();
                g = next;
            }
            let key = cache_key(&g, &g, None, VERSION);
            let body = json!({
                "steps": steps,
                "vertices_remaining": g.vertex_count(),
                "reduced": g.to_text(),
            });
            emit(&cli.output, &envelope("fold-reduce", &key, body))
        }
        Cmd::Verify { check, all, list } => {
            let available = homcx::verify::checks();
            if *list {
                let mut out = String::new();
                for (name, heavy, _) in &available {
                    out.push_str(&format!(
                        "{name}{}\n",
                        if *heavy { " (heavy)" } else { "" }
                    ));
                }
                return emit(&cli.output, out.as_bytes());
            }
            let selected: Vec<&'static str> = match check {
                Some(name) => {
                    if !available.iter().any(|(n, _, _)| n == name) {
                        return Err(Error::BadParameter(format!("unknown check '{name}'")));
                    }
                    vec![available.iter().find(|(n, _, _)| n == name).unwrap().0]
                }
                None => available
                    .iter()
                    .filter(|(_, heavy, _)| *all || !heavy)
                    .map(|(n, _, _)| *n)
                    .collect(),
            };
            let mut failed = false;
            let mut out = String::new();
            for name in selected {
                let r = homcx::verify::run_check(name).expect("known check");
                out.push_str(&format!(
                    "{} {} — {}\n",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                ));
                failed |= !r.pass;
            }
            emit(&cli.output, out.as_bytes())?;
            if failed {
                return Err(Error::Soundness("verification checks failed".into()));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return ExitCode::from(1);
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceCap(_) => ExitCode::from(2),
                Error::Soundness(_) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}
