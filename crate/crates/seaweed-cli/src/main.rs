//! `seaweed` — invariants of seaweed subalgebras of gl(N)/sl(N).
//!
//! Exit codes: 0 success, 1 verification or oracle mismatch, 2 usage or
//! parse error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use seaweed::invariants::{full_report, OracleSection};
use seaweed::meander::{compositions, Meander};
use seaweed::notation::{Composition, Flavor, SeaweedSpec};
use seaweed::oracle::{FieldConfig, DEFAULT_PRIME};
use seaweed::poset::{poset_from_diagram, BlockDiagram};
use seaweed::render;
use seaweed::verify::verify_up_to;
use seaweed::weighted::WeightedMeander;

const ENUMERATE_CAP: usize = 12;
const ORACLE_CAP: usize = 6;

#[derive(Parser)]
#[command(
    name = "seaweed",
    about = "Invariants of seaweed subalgebras from meanders, block posets, and an exact matrix oracle",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant report of one spec
    Analyze {
        /// Spec text, e.g. "p 2|3|1|2|2/7|3" or "pA 7/7"
        spec: String,
        /// Emit the report as a JSON object
        #[arg(long)]
        json: bool,
        /// Attach matrix-oracle values and cross-check the formulas
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        field: FieldArgs,
        /// Write output to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stream one JSON report per composition pair of size N
    Enumerate {
        n: usize,
        /// Keep only specs with every part in {1, 2}
        #[arg(long = "parts-le-2")]
        parts_le_2: bool,
        /// Keep only parabolic specs (bottom composition is the single part N)
        #[arg(long)]
        parabolic: bool,
        /// Emit the traceless (sl) flavor
        #[arg(long = "type-a")]
        type_a: bool,
        /// Attach matrix-oracle values (lowers the size cap)
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        field: FieldArgs,
        /// Write output to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check every formula against the oracle for all specs of size <= N
    Verify {
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Emit a diagram for one spec
    Render {
        spec: String,
        kind: DiagramKind,
        /// Graphviz DOT output (the default)
        #[arg(long, conflicts_with = "tikz")]
        dot: bool,
        /// TikZ output
        #[arg(long)]
        tikz: bool,
        /// Write output to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct FieldArgs {
    /// Prime modulus for the oracle's working field
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Random-functional trials per rank computation
    #[arg(long, default_value_t = 3)]
    trials: u32,
    /// Seed of the deterministic sampler
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl FieldArgs {
    fn config(&self) -> FieldConfig {
        FieldConfig {
            prime: self.prime,
            trials: self.trials,
            seed: self.seed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramKind {
    Meander,
    Weighted,
    Blocks,
    Hasse,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze {
            spec,
            json,
            oracle,
            field,
            out,
        } => cmd_analyze(&spec, json, oracle, &field.config(), out.as_deref()),
        Command::Enumerate {
            n,
            parts_le_2,
            parabolic,
            type_a,
            oracle,
            field,
            out,
        } => cmd_enumerate(
            n,
            parts_le_2,
            parabolic,
            type_a,
            oracle,
            &field.config(),
            out.as_deref(),
        ),
        Command::Verify { n, field } => cmd_verify(n, &field.config()),
        Command::Render {
            spec,
            kind,
            dot,
            tikz,
            out,
        } => {
            let format = if tikz { Format::Tikz } else { Format::Dot };
            let _ = dot;
            cmd_render(&spec, kind, format, out.as_deref())
        }
    };
    ExitCode::from(code)
}

enum Format {
    Dot,
    Tikz,
}

fn open_sink(out: Option<&std::path::Path>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn parse_spec_or_usage(text: &str) -> Result<SeaweedSpec, u8> {
    SeaweedSpec::parse(text).map_err(|e| {
        eprintln!("error: {e}");
        2
    })
}

fn cmd_analyze(
    text: &str,
    json: bool,
    oracle: bool,
    cfg: &FieldConfig,
    out: Option<&std::path::Path>,
) -> u8 {
    let spec = match parse_spec_or_usage(text) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let mut report = match full_report(&spec, oracle, cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("oracle error: {e}");
            return 1;
        }
    };
    let mut mismatch = false;
    if let Some(section) = report.oracle.clone() {
        let agrees = |o: &OracleSection| {
            o.matches(
                report.index_seaweed,
                report.index_nilradical,
                report.center_dim,
                report.breadth_seaweed,
            )
        };
        if !agrees(&section) {
            // re-check before calling it genuine
            mismatch = true;
            for esc in cfg.escalated() {
                match OracleSection::compute(&spec, &esc) {
                    Ok(retry) if agrees(&retry) => {
                        report.oracle = Some(retry);
                        mismatch = false;
                        break;
                    }
                    Ok(retry) => report.oracle = Some(retry),
                    Err(e) => {
                        eprintln!("oracle error: {e}");
                        return 1;
                    }
                }
            }
        }
    }
    let body = if json {
        format!("{}\n", report.to_json())
    } else {
        report.to_string()
    };
    if let Err(e) = open_sink(out).and_then(|mut w| w.write_all(body.as_bytes())) {
        eprintln!("error: {e}");
        return 1;
    }
    if mismatch {
        eprintln!("oracle mismatch for {spec} (see the oracle section)");
        return 1;
    }
    0
}

fn parts_le_2(c: &Composition) -> bool {
    c.parts().iter().all(|&p| p <= 2)
}

fn cmd_enumerate(
    n: usize,
    only_small_parts: bool,
    parabolic: bool,
    type_a: bool,
    oracle: bool,
    cfg: &FieldConfig,
    out: Option<&std::path::Path>,
) -> u8 {
    let cap = if oracle { ORACLE_CAP } else { ENUMERATE_CAP };
    if n == 0 || n > cap {
        eprintln!(
            "error: N must be between 1 and {cap} (with{} oracle)",
            if oracle { "" } else { "out" }
        );
        return 2;
    }
    let flavor = if type_a { Flavor::Sl } else { Flavor::Gl };
    let comps = compositions(n);
    let full = Composition::new(vec![n]).unwrap();
    let mut sink = match open_sink(out) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    for top in &comps {
        if only_small_parts && !parts_le_2(top) {
            continue;
        }
        for bottom in &comps {
            if only_small_parts && !parts_le_2(bottom) {
                continue;
            }
            if parabolic && *bottom != full {
                continue;
            }
            let spec = SeaweedSpec::new(top.clone(), bottom.clone(), flavor).unwrap();
            let report = match full_report(&spec, oracle, cfg) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("oracle error for {spec}: {e}");
                    return 1;
                }
            };
            if let Err(e) = writeln!(sink, "{}", report.to_json()) {
                if e.kind() == io::ErrorKind::BrokenPipe {
                    return 0;
                }
                eprintln!("error: {e}");
                return 1;
            }
        }
    }
    if let Err(e) = sink.flush() {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return 0;
        }
        eprintln!("error: {e}");
        return 1;
    }
    0
}

fn cmd_verify(n: usize, cfg: &FieldConfig) -> u8 {
    if n == 0 || n > ORACLE_CAP {
        eprintln!("error: N must be between 1 and {ORACLE_CAP}");
        return 2;
    }
    let report = match verify_up_to(n, cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("oracle error: {e}");
            return 1;
        }
    };
    for check in &report.checks {
        println!(
            "{:<45} passed {:>6}, failed {}",
            check.name,
            check.passed,
            check.mismatches.len()
        );
        for m in &check.mismatches {
            println!("    {}: {}", m.subject, m.detail);
        }
    }
    if report.is_clean() {
        println!("all checks passed for N <= {n}");
        0
    } else {
        1
    }
}

fn cmd_render(text: &str, kind: DiagramKind, format: Format, out: Option<&std::path::Path>) -> u8 {
    let spec = match parse_spec_or_usage(text) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let body = match (kind, format) {
        (DiagramKind::Meander, Format::Dot) => render::meander_dot(&Meander::from_spec(&spec)),
        (DiagramKind::Meander, Format::Tikz) => render::meander_tikz(&Meander::from_spec(&spec)),
        (DiagramKind::Weighted, Format::Dot) => {
            render::weighted_dot(&WeightedMeander::from_spec(&spec))
        }
        (DiagramKind::Weighted, Format::Tikz) => {
            render::weighted_tikz(&WeightedMeander::from_spec(&spec))
        }
        (DiagramKind::Blocks, Format::Dot) => render::blocks_dot(&BlockDiagram::from_spec(&spec)),
        (DiagramKind::Blocks, Format::Tikz) => render::blocks_tikz(&BlockDiagram::from_spec(&spec)),
        (DiagramKind::Hasse, Format::Dot) => {
            render::hasse_dot(&poset_from_diagram(&BlockDiagram::from_spec(&spec)))
        }
        (DiagramKind::Hasse, Format::Tikz) => {
            render::hasse_tikz(&poset_from_diagram(&BlockDiagram::from_spec(&spec)))
        }
    };
    if let Err(e) = open_sink(out).and_then(|mut w| w.write_all(body.as_bytes())) {
        eprintln!("error: {e}");
        return 1;
    }
    0
}
