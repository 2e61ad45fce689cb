//! coverdeal: cover ideals and leader placement from the command line.
//!
//! Every subcommand reads one topology JSON (`--input FILE`, `-` for stdin)
//! and writes a deterministic document to stdout; diagnostics go to stderr.
//! Exit codes: 0 success, 1 validation failure, 2 resource cap, 3
//! unsupported configuration, 64 usage.

use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use coverdeal_core as core;
use coverdeal_core::{GraphInput, HFamilySpec, SimpleGraph};

const ANTICHAIN_ENV: &str = "COVERDEAL_MAX_ANTICHAIN";

#[derive(Parser)]
#[command(
    name = "coverdeal",
    version,
    about = "Vertex covers, cover ideals, and gateway placement for network topologies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Topology JSON: {"n", "edges"} or {"n", "clique", "stars"}; "-" reads stdin
    #[arg(long, short)]
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a topology, echoing the normalized edge list
    Validate(InputArgs),
    /// Enumerate all minimal vertex covers and the covering number
    Covers {
        #[command(flatten)]
        input: InputArgs,
        /// Plain-text rendering instead of JSON
        #[arg(long)]
        pretty: bool,
    },
    /// The edge ideal: one degree-2 generator per edge
    EdgeIdeal {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        pretty: bool,
    },
    /// The ideal of vertex covers
    CoverIdeal {
        #[command(flatten)]
        input: InputArgs,
        /// closed: family formulas; enum: cover enumeration; intersect: edge-prime intersection
        #[arg(long, value_enum, default_value_t = Method::Enum)]
        method: Method,
        #[arg(long)]
        pretty: bool,
    },
    /// Certify a linear-quotient ordering of the cover ideal
    Quotients {
        #[command(flatten)]
        input: InputArgs,
        /// paper: the family's explicit order; search: backtracking over orderings
        #[arg(long, value_enum, default_value_t = OrderChoice::Paper)]
        order: OrderChoice,
    },
    /// Betti numbers and twists of R/I from a linear-quotient certificate
    Resolution {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OrderChoice::Paper)]
        order: OrderChoice,
    },
    /// Closed-form ring invariants for the family topology
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        subject: Subject,
        #[arg(long)]
        pretty: bool,
    },
    /// Choose gateway leaders from a minimum vertex cover
    Plan {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        pretty: bool,
    },
    /// DOT rendering of the topology with leaders highlighted
    ExportDot(InputArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Enum,
    Intersect,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderChoice {
    Paper,
    Search,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Subject {
    Edge,
    Cover,
}

struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 1,
        }
    }

    fn unsupported(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 3,
        }
    }
}

impl From<core::Error> for Failure {
    fn from(e: core::Error) -> Self {
        let code = match e {
            core::Error::AntichainCap { .. } | core::Error::SearchBound { .. } => 2,
            core::Error::Unsupported(_) => 3,
            _ => 1,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage_ok =
                e.kind() == ErrorKind::DisplayHelp || e.kind() == ErrorKind::DisplayVersion;
            let _ = e.print();
            return ExitCode::from(if usage_ok { 0 } else { 64 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Validate(input) => validate(&load(&input)?),
        Command::Covers { input, pretty } => covers(&load(&input)?, pretty),
        Command::EdgeIdeal { input, pretty } => edge_ideal(&load(&input)?, pretty),
        Command::CoverIdeal {
            input,
            method,
            pretty,
        } => cover_ideal(&load(&input)?, method, pretty),
        Command::Quotients { input, order } => quotients(&load(&input)?, order),
        Command::Resolution { input, order } => resolution(&load(&input)?, order),
        Command::Invariants {
            input,
            subject,
            pretty,
        } => invariants(&load(&input)?, subject, pretty),
        Command::Plan { input, pretty } => plan(&load(&input)?, pretty),
        Command::ExportDot(input) => export_dot(&load(&input)?),
    }
}

fn load(args: &InputArgs) -> Result<GraphInput, Failure> {
    let text = if args.input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::input(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(&args.input)
            .map_err(|e| Failure::input(format!("cannot read {}: {e}", args.input)))?
    };
    Ok(GraphInput::from_json(&text)?)
}

fn antichain_cap() -> Result<usize, Failure> {
    match std::env::var(ANTICHAIN_ENV) {
        Ok(value) => value
            .trim()
            .parse()
            .map_err(|_| Failure::input(format!("{ANTICHAIN_ENV}={value:?} is not a count"))),
        Err(_) => Ok(core::DEFAULT_ANTICHAIN_CAP),
    }
}

fn require_spec(input: &GraphInput, what: &str) -> Result<HFamilySpec, Failure> {
    input.family_spec().cloned().ok_or_else(|| {
        Failure::input(format!(
            "{what} needs the clique/stars input form, not a bare edge list"
        ))
    })
}

fn emit<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    let json = serde_json::to_string(value)
        .map_err(|e| Failure::input(format!("serialization failed: {e}")))?;
    println!("{json}");
    Ok(())
}

fn validate(input: &GraphInput) -> Result<(), Failure> {
    let g = input.to_graph()?;
    let form = match input {
        GraphInput::Family(_) => "family",
        GraphInput::EdgeList { .. } => "edge-list",
    };
    let edges = g.edges();
    emit(&serde_json::json!({
        "form": form,
        "n": g.n(),
        "edges": edges,
    }))
}

fn covers(input: &GraphInput, pretty: bool) -> Result<(), Failure> {
    let g = input.to_graph()?;
    let cc = core::minimal_covers(&g, antichain_cap()?)?;
    if pretty {
        println!("alpha0 = {}", cc.alpha0);
        for c in &cc.covers {
            println!("{c:?}");
        }
        Ok(())
    } else {
        emit(&cc)
    }
}

fn edge_ideal(input: &GraphInput, pretty: bool) -> Result<(), Failure> {
    let g = input.to_graph()?;
    let ideal = core::edge_ideal(&g);
    if pretty {
        println!("{}", ideal.render());
        Ok(())
    } else {
        emit(&ideal)
    }
}

fn build_cover_ideal(input: &GraphInput, method: Method) -> Result<core::MonomialIdeal, Failure> {
    let cap = antichain_cap()?;
    let ideal = match method {
        Method::Closed => {
            let spec = require_spec(input, "--method closed")?;
            core::closed_form_cover_ideal_h(&spec)?
        }
        Method::Enum => {
            let g = input.to_graph()?;
            let cc = core::minimal_covers(&g, cap)?;
            core::cover_ideal_from_covers(&cc, g.n())?
        }
        Method::Intersect => {
            let g = input.to_graph()?;
            core::cover_ideal_by_intersection(&g, cap)?
        }
    };
    if ideal.is_unit() {
        eprintln!("note: cover ideal is the unit ideal (the graph has no edges)");
    }
    Ok(ideal)
}

fn cover_ideal(input: &GraphInput, method: Method, pretty: bool) -> Result<(), Failure> {
    let ideal = build_cover_ideal(input, method)?;
    if pretty {
        println!("{}", ideal.render());
        Ok(())
    } else {
        emit(&ideal)
    }
}

/// Cover ideal plus a certificate for it, via the family order or search.
fn certified_cover_ideal(
    input: &GraphInput,
    order: OrderChoice,
) -> Result<(core::MonomialIdeal, Option<core::QuotientCertificate>), Failure> {
    match order {
        OrderChoice::Paper => {
            let spec = require_spec(input, "--order paper")?;
            let ideal = core::closed_form_cover_ideal_h(&spec)?;
            let order = core::h_family_order(&spec, &ideal)?;
            match core::verify_linear_quotients(&ideal, &order)? {
                core::QuotientCheck::Certified(cert) => Ok((ideal, Some(cert))),
                core::QuotientCheck::Failed { position, witness } => {
                    eprintln!("note: family order fails at step {position} ({witness})");
                    Ok((ideal, None))
                }
            }
        }
        OrderChoice::Search => {
            let g = input.to_graph()?;
            let cc = core::minimal_covers(&g, antichain_cap()?)?;
            let ideal = core::cover_ideal_from_covers(&cc, g.n())?;
            match core::search_linear_quotients(&ideal, core::DEFAULT_SEARCH_BOUND)? {
                core::SearchOutcome::Found(cert) => Ok((ideal, Some(cert))),
                core::SearchOutcome::Exhausted => Ok((ideal, None)),
            }
        }
    }
}

fn quotients(input: &GraphInput, order: OrderChoice) -> Result<(), Failure> {
    let (_, cert) = certified_cover_ideal(input, order)?;
    match cert {
        Some(cert) => emit(&cert),
        None => emit(&serde_json::json!({ "exhausted": true })),
    }
}

fn resolution(input: &GraphInput, order: OrderChoice) -> Result<(), Failure> {
    let (ideal, cert) = certified_cover_ideal(input, order)?;
    let cert = cert.ok_or_else(|| {
        Failure::unsupported("no linear-quotient ordering found; resolution data needs one")
    })?;
    emit(&core::betti_from_certificate(&cert, &ideal.degrees()))
}

fn invariants(input: &GraphInput, subject: Subject, pretty: bool) -> Result<(), Failure> {
    let spec = require_spec(input, "invariants")?;
    let report = match subject {
        Subject::Edge => core::edge_ideal_invariants(&spec)?,
        Subject::Cover => core::cover_ideal_invariants(&spec)?,
    };
    if pretty {
        println!(
            "subject = {}",
            match subject {
                Subject::Edge => "edge",
                Subject::Cover => "cover",
            }
        );
        println!("dim = {}", report.dim);
        println!("depth = {}", report.depth);
        println!("pd = {}", report.pd);
        println!("reg = {}", report.reg);
        println!("cm = {}", report.cm);
        println!("linear_resolution = {}", report.linear_resolution);
        Ok(())
    } else {
        emit(&report)
    }
}

fn plan(input: &GraphInput, pretty: bool) -> Result<(), Failure> {
    let g = input.to_graph()?;
    let plan = core::plan_placement(&g, antichain_cap()?)?;
    for warning in &plan.warnings {
        eprintln!("warning: {warning}");
    }
    if pretty {
        println!(
            "leaders = {:?} (cardinality {})",
            plan.leaders, plan.cardinality
        );
        for alt in &plan.alternatives {
            println!("alternative = {alt:?}");
        }
        for (sensor, leader) in &plan.assignment {
            println!("v{sensor} -> v{leader}");
        }
        Ok(())
    } else {
        emit(&plan)
    }
}

fn export_dot(input: &GraphInput) -> Result<(), Failure> {
    let g: SimpleGraph = input.to_graph()?;
    let plan = core::plan_placement(&g, antichain_cap()?)?;
    for warning in &plan.warnings {
        eprintln!("warning: {warning}");
    }
    print!("{}", g.to_dot(&plan.leaders));
    Ok(())
}
