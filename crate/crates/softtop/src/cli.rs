//! Command-line surface binding all modules.
//!
//! Exit status contract: 0 = success / property holds / all claims pass,
//! 1 = property false or counterexample found, 2 = input error,
//! 3 = capacity error.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::claims::{verify_all, verify_claim, ClaimReport, Verdict};
use crate::enumerate::{
    build_lattice_with_limit, counts_report, enumerate_topologies_within, export_dot,
    ENUM_CELL_GUARD,
};
use crate::error::{Error, Result};
use crate::ground::Ground;
use crate::maximal::{is_maximal, Method, Property};
use crate::parse;
use crate::props::{self, SeparationLevel};
use crate::set::SoftSet;
use crate::symbolic::{
    family_property, sym_is_maximal, sym_query, SymFamily, SymQuery, SymbolicTopology,
};
use crate::topology::SoftTopology;

#[derive(Parser)]
#[command(
    name = "softtop",
    about = "Soft set algebra and soft topology workbench",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeOp {
    Meet,
    Join,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckProp {
    Connected,
    Compact,
    T0,
    T1,
    T2,
    Submaximal,
    Stable,
    Dense,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Fort,
    Pp,
    Ep,
}

#[derive(Clone, Copy, ValueEnum)]
enum SymQueryArg {
    Open,
    Closed,
    Compact,
    Dense,
    Connected,
    Maximal,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a topology file against the axioms.
    Validate { file: PathBuf },
    /// Emit the smallest topology including the sets in a collection file.
    Generate { file: PathBuf },
    /// Lattice meet or join of two topologies over the same ground.
    Op {
        #[arg(value_enum)]
        op: LatticeOp,
        file_a: PathBuf,
        file_b: PathBuf,
    },
    /// Relative topology over a non-null subset.
    Subspace {
        file: PathBuf,
        /// Soft-set literal, e.g. `{e1:{a}; e2:{}}`.
        #[arg(long)]
        set: String,
    },
    /// Check a property of a topology, or of a subset via `--set`.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        prop: CheckProp,
        #[arg(long)]
        set: Option<String>,
    },
    /// Decide whether a topology is maximal for a property.
    Maximal {
        file: PathBuf,
        /// `compact` or `connected`.
        #[arg(long)]
        prop: String,
        /// `brute`, `extension`, `characterization`, or `all`.
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Enumerate all topologies on a 1-parameter ground with `--cells`
    /// elements; optionally export the lattice as DOT.
    Enumerate {
        #[arg(long)]
        cells: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Print the counts line (printed by default as well).
        #[arg(long)]
        counts: bool,
        /// Override the enumeration cell guard (hard cap applies).
        #[arg(long, default_value_t = ENUM_CELL_GUARD)]
        limit: usize,
    },
    /// Verify one claim by id, or `all`, scanning every ground up to the
    /// cell bound.
    Verify {
        claim: String,
        #[arg(long)]
        bound: usize,
        /// Worker threads for the scan (output is identical regardless).
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Query the anchored symbolic families over the naturals.
    Symbolic {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Anchor soft point, e.g. `1(e)` or `0(e1)`.
        #[arg(long)]
        anchor: String,
        #[arg(long, value_enum)]
        query: SymQueryArg,
        /// Symbolic soft-set literal, e.g. `{e1:FIN{1,3}; e2:COF{2}}`.
        #[arg(long)]
        set: Option<String>,
        /// Comma-separated parameter list; defaults to the anchor's
        /// parameter.
        #[arg(long)]
        params: Option<String>,
    },
}

/// Parses argv and dispatches; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(Error::from)
}

fn bool_exit(value: bool) -> i32 {
    println!("{value}");
    if value {
        0
    } else {
        1
    }
}

fn dispatch(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Validate { file } => {
            let t = parse::parse_topology_text(&read(&file)?)?;
            println!(
                "valid: {} opens over {} cells",
                t.opens().len(),
                t.carrier().cell_count()
            );
            Ok(0)
        }
        Cmd::Generate { file } => {
            let (ground, sets) = parse::parse_collection_text(&read(&file)?)?;
            let t = SoftTopology::generate(&ground, &sets)?;
            print!("{}", t.to_file_string());
            Ok(0)
        }
        Cmd::Op { op, file_a, file_b } => {
            let a = parse::parse_topology_text(&read(&file_a)?)?;
            let b = parse::parse_topology_text(&read(&file_b)?)?;
            if a.ground() != b.ground() {
                return Err(Error::GroundMismatch);
            }
            let result = match op {
                LatticeOp::Meet => a.meet(&b)?,
                LatticeOp::Join => a.join(&b)?,
            };
            print!("{}", result.to_file_string());
            Ok(0)
        }
        Cmd::Subspace { file, set } => {
            let t = parse::parse_topology_text(&read(&file)?)?;
            let subset = parse::parse_soft_set(t.ground(), &set)?;
            print!("{}", t.relative(&subset)?.to_file_string());
            Ok(0)
        }
        Cmd::Check { file, prop, set } => {
            let t = parse::parse_topology_text(&read(&file)?)?;
            let subset = set
                .map(|s| parse::parse_soft_set(t.ground(), &s))
                .transpose()?;
            let value = check_property(&t, prop, subset.as_ref())?;
            Ok(bool_exit(value))
        }
        Cmd::Maximal { file, prop, method } => {
            let t = parse::parse_topology_text(&read(&file)?)?;
            let property: Property = prop.parse()?;
            let method: Method = method.parse()?;
            Ok(bool_exit(is_maximal(&t, property, method)?))
        }
        Cmd::Enumerate {
            cells,
            dot,
            counts,
            limit,
        } => {
            if cells == 0 {
                return Err(Error::Rejected("cells must be at least 1".into()));
            }
            let ground = Ground::canonical(1, cells);
            let topologies =
                enumerate_topologies_within(&SoftSet::absolute(&ground), limit)?;
            if counts || dot.is_none() {
                println!("{}", counts_report(cells, topologies.len()));
            }
            if let Some(path) = dot {
                let lattice = build_lattice_with_limit(&ground, limit)?;
                export_dot(&lattice, &path)?;
            }
            Ok(0)
        }
        Cmd::Verify {
            claim,
            bound,
            workers,
        } => {
            let job = move || -> Result<Vec<ClaimReport>> {
                if claim == "all" {
                    verify_all(bound)
                } else {
                    Ok(vec![verify_claim(claim.parse()?, bound)?])
                }
            };
            let reports = match workers {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Error::Internal(e.to_string()))?
                    .install(job),
                None => job(),
            }?;
            let mut failed = false;
            for report in &reports {
                println!("{}", report.render());
                if report.verdict == Verdict::Counterexample {
                    failed = true;
                }
            }
            Ok(if failed { 1 } else { 0 })
        }
        Cmd::Symbolic {
            family,
            anchor,
            query,
            set,
            params,
        } => {
            let (anchor_elem, anchor_param) = parse::parse_anchor(&anchor)?;
            let params: Vec<String> = match params {
                Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
                None => vec![anchor_param.clone()],
            };
            let family = match family {
                FamilyArg::Fort => SymFamily::Fort,
                FamilyArg::Pp => SymFamily::ParticularPoint,
                FamilyArg::Ep => SymFamily::ExcludedPoint,
            };
            let topology =
                SymbolicTopology::new(family, params.clone(), &anchor_param, anchor_elem)?;
            let subset = set
                .map(|s| parse::parse_symbolic_set(&params, &s))
                .transpose()?;
            match query {
                SymQueryArg::Maximal => {
                    let outcome = sym_is_maximal(&topology, family_property(family))?;
                    println!("{}", outcome.maximal);
                    println!("{}", outcome.certificate);
                    Ok(if outcome.maximal { 0 } else { 1 })
                }
                _ => {
                    let q = match query {
                        SymQueryArg::Open => SymQuery::Open,
                        SymQueryArg::Closed => SymQuery::Closed,
                        SymQueryArg::Compact => SymQuery::Compact,
                        SymQueryArg::Dense => SymQuery::Dense,
                        SymQueryArg::Connected => SymQuery::ConnectedSpace,
                        SymQueryArg::Maximal => unreachable!(),
                    };
                    Ok(bool_exit(sym_query(&topology, subset.as_ref(), q)?))
                }
            }
        }
    }
}

fn check_property(
    t: &SoftTopology,
    prop: CheckProp,
    subset: Option<&SoftSet>,
) -> Result<bool> {
    // Properties of a subset are read off its relative topology, except for
    // the ones with a direct subset meaning.
    match (prop, subset) {
        (CheckProp::Connected, None) => Ok(props::is_connected(t)),
        (CheckProp::Connected, Some(y)) => props::is_connected_subset(t, y),
        (CheckProp::Compact, None) => props::is_compact_subset(t, t.carrier()),
        (CheckProp::Compact, Some(y)) => props::is_compact_subset(t, y),
        (CheckProp::Dense, Some(y)) => t.is_dense(y),
        (CheckProp::Dense, None) => Err(Error::Rejected(
            "`--prop dense` needs `--set <literal>`".into(),
        )),
        (CheckProp::Stable, None) => Ok(props::is_stable_space(t)),
        (CheckProp::Stable, Some(y)) => Ok(y.is_stable()),
        (CheckProp::Submaximal, None) => props::is_submaximal(t),
        (CheckProp::Submaximal, Some(y)) => props::is_submaximal(&t.relative(y)?),
        (CheckProp::T0, None) => Ok(props::separation_axiom(t, SeparationLevel::T0)),
        (CheckProp::T1, None) => Ok(props::separation_axiom(t, SeparationLevel::T1)),
        (CheckProp::T2, None) => Ok(props::separation_axiom(t, SeparationLevel::T2)),
        (CheckProp::T0, Some(y)) => {
            Ok(props::separation_axiom(&t.relative(y)?, SeparationLevel::T0))
        }
        (CheckProp::T1, Some(y)) => {
            Ok(props::separation_axiom(&t.relative(y)?, SeparationLevel::T1))
        }
        (CheckProp::T2, Some(y)) => {
            Ok(props::separation_axiom(&t.relative(y)?, SeparationLevel::T2))
        }
    }
}
