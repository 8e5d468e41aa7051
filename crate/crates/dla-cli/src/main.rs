//! Command-line surface for the spin-chain DLA engine.
//!
//! Exit codes: 0 success, 1 classification mismatch, 2 usage or parse
//! error, 3 resource cap exceeded.

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use dla_core::catalog::{catalog_generators, extend, FamilyId, Topology};
use dla_core::classify::{classify_sweep, scaling_class_of, ClassificationRow, Verdict};
use dla_core::dla::{close_with_caps, Caps, DlaBasis, DlaError};
use dla_core::orbits::{canonicalize, scan_power_sets, OrbitRecord};
use dla_core::pauli::{parse_set, PauliString};
use dla_core::structure::{
    center_strings, frustration_graph, ideal_components, recognize_path_or_cycle, stabilizer,
    verify_iso_parts, IsoExpression,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "dla",
    about = "Dynamical Lie algebras of 2-local spin-chain Hamiltonians",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct CommonOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<String>,
    /// Worker threads (default: DLA_THREADS or all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Abort a closure once it holds more than this many strings.
    #[arg(long)]
    max_elements: Option<usize>,
    /// Abort a closure after this many seconds.
    #[arg(long)]
    max_seconds: Option<f64>,
    /// Truncate text-mode basis listings beyond this many strings.
    #[arg(long, default_value_t = 512)]
    print_limit: usize,
}

#[derive(Args)]
struct ModelSelect {
    /// Comma-separated generator strings, e.g. "XY,YZ". Two-site strings
    /// are extended to n sites when --n is given; otherwise they are used
    /// verbatim.
    #[arg(long, conflicts_with = "family")]
    generators: Option<String>,
    /// Catalog family name (a0..a22, b0..b4, c0..c7).
    #[arg(long)]
    family: Option<String>,
    /// Chain length.
    #[arg(long)]
    n: Option<usize>,
    /// Chain topology for the extension.
    #[arg(long, default_value = "open")]
    topology: String,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Lie closure of a generator set.
    Close {
        #[command(flatten)]
        select: ModelSelect,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Structural report: stabilizer, center, ideals, frustration graph.
    Structure {
        #[command(flatten)]
        select: ModelSelect,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Enumerate all two-site subalgebras and their symmetry orbits.
    Scan {
        /// Report only the orbit of this generator set.
        #[arg(long)]
        orbit_of: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Verify computed closures against the chain classification.
    Classify {
        /// Range of chain lengths, e.g. "3..8", "4", or "3.." for the
        /// topology default.
        #[arg(long, default_value = "3..")]
        n: String,
        /// Topology: open, periodic, permutation, or all.
        #[arg(long, default_value = "open")]
        topology: String,
        /// Restrict to these families (repeatable).
        #[arg(long)]
        family: Vec<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
}

/// A command failure, reported on stderr with the exit code it carries.
#[derive(Debug)]
struct CmdError {
    message: String,
    code: u8,
}

impl CmdError {
    fn usage(message: impl Into<String>) -> Self {
        CmdError {
            message: message.into(),
            code: EXIT_USAGE,
        }
    }

    fn cap(message: impl Into<String>) -> Self {
        CmdError {
            message: message.into(),
            code: EXIT_CAP,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Close { select, common } => cmd_close(&select, &common),
        Command::Structure { select, common } => cmd_structure(&select, &common),
        Command::Scan { orbit_of, common } => cmd_scan(orbit_of.as_deref(), &common),
        Command::Classify {
            n,
            topology,
            family,
            common,
        } => cmd_classify(&n, &topology, &family, &common),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn init_threads(common: &CommonOpts) {
    let threads = common.threads.or_else(|| {
        std::env::var("DLA_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(t) = threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
}

fn caps_of(common: &CommonOpts) -> Caps {
    Caps {
        max_elements: common.max_elements,
        max_seconds: common.max_seconds,
    }
}

fn emit(common: &CommonOpts, text: String) -> Result<(), CmdError> {
    match &common.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| CmdError::usage(format!("cannot write {path}: {e}")))
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

/// Resolve the generator set from the selection flags. Returns the
/// generators, the family when one was named, the topology, and n.
fn resolve_generators(
    select: &ModelSelect,
) -> Result<(Vec<PauliString>, Option<FamilyId>, Topology, usize), CmdError> {
    let topology = Topology::from_str(&select.topology).map_err(CmdError::usage)?;
    match (&select.generators, &select.family) {
        (Some(text), None) => {
            let gens2 = parse_set(text).map_err(|e| CmdError::usage(e.to_string()))?;
            match select.n {
                Some(n) => {
                    let gens =
                        extend(&gens2, n, topology).map_err(|e| CmdError::usage(e.to_string()))?;
                    Ok((gens, None, topology, n))
                }
                None => {
                    let n = gens2.first().map(|g| g.n()).unwrap_or(0);
                    Ok((gens2, None, topology, n))
                }
            }
        }
        (None, Some(name)) => {
            let family: FamilyId = name
                .parse()
                .map_err(|e: dla_core::catalog::CatalogError| CmdError::usage(e.to_string()))?;
            let n = select
                .n
                .ok_or_else(|| CmdError::usage("--family requires --n"))?;
            let gens2 = catalog_generators(family);
            let gens = if n == 2 {
                gens2
            } else {
                extend(&gens2, n, topology).map_err(|e| CmdError::usage(e.to_string()))?
            };
            Ok((gens, Some(family), topology, n))
        }
        _ => Err(CmdError::usage(
            "exactly one of --generators or --family is required",
        )),
    }
}

fn run_closure(gens: &[PauliString], caps: Caps) -> Result<DlaBasis, CmdError> {
    close_with_caps(gens, caps).map_err(|e| match e {
        DlaError::ElementCapExceeded { .. } | DlaError::TimeCapExceeded { .. } => {
            CmdError::cap(e.to_string())
        }
        other => CmdError::usage(other.to_string()),
    })
}

fn list_strings(set: &[PauliString]) -> Vec<String> {
    set.iter().map(|p| p.to_string()).collect()
}

fn print_basis(out: &mut String, basis: &[PauliString], limit: usize) {
    for chunk in basis.chunks(16).take(limit.div_ceil(16)) {
        let line: Vec<String> = chunk.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(out, "  {}", line.join(" "));
    }
    if basis.len() > limit {
        let _ = writeln!(out, "  ... ({} more)", basis.len() - limit);
    }
}

fn cmd_close(select: &ModelSelect, common: &CommonOpts) -> Result<u8, CmdError> {
    init_threads(common);
    let started = Instant::now();
    let (gens, family, topology, n) = resolve_generators(select)?;
    let basis = run_closure(&gens, caps_of(common))?;
    let elapsed_ms = started.elapsed().as_millis() as u64;

    let text = match common.format {
        Format::Json => {
            let report = json!({
                "command": "close",
                "n": n,
                "topology": topology,
                "family": family,
                "generators": list_strings(&gens),
                "dimension": basis.dimension(),
                "basis": list_strings(basis.basis()),
                "elapsed_ms": elapsed_ms,
            });
            serde_json::to_string_pretty(&report).expect("report serializes")
        }
        Format::Csv => {
            let mut out = String::from("string\n");
            for p in basis.basis() {
                let _ = writeln!(out, "{p}");
            }
            out.trim_end().to_string()
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "n = {n}, topology = {topology}");
            let _ = writeln!(out, "generators ({}):", gens.len());
            print_basis(&mut out, &gens, common.print_limit);
            let _ = writeln!(out, "dimension = {}", basis.dimension());
            let _ = writeln!(out, "basis:");
            print_basis(&mut out, basis.basis(), common.print_limit);
            let _ = write!(out, "elapsed: {elapsed_ms} ms");
            out
        }
    };
    emit(common, text)?;
    Ok(0)
}

fn cmd_structure(select: &ModelSelect, common: &CommonOpts) -> Result<u8, CmdError> {
    init_threads(common);
    let (gens, family, topology, n) = resolve_generators(select)?;
    let basis = run_closure(&gens, caps_of(common))?;

    let st = stabilizer(&gens);
    let center = center_strings(&basis);
    let components = ideal_components(&basis);
    let component_sizes: Vec<usize> = components.iter().map(|c| c.len()).collect();
    // For named families, graph recognition runs on the equivalent
    // path-forming generating set.
    let graph_gens = match (family, select.n) {
        (Some(f), Some(n)) if n > 2 => {
            extend(&dla_core::catalog::recognition_generators(f), n, topology)
                .map_err(|e| CmdError::usage(e.to_string()))?
        }
        _ => gens.clone(),
    };
    let graph = frustration_graph(&graph_gens);
    let frustration = recognize_path_or_cycle(&graph);

    let claim: Option<IsoExpression> = family
        .and_then(|f| dla_core::classify::predict(f, topology, n).ok())
        .or_else(|| frustration.clone());
    let iso_checks = claim
        .as_ref()
        .map(|c| verify_iso_parts(basis.dimension() as u64, center.len(), &component_sizes, c));

    let text = match common.format {
        Format::Json => {
            let report = json!({
                "command": "structure",
                "n": n,
                "topology": topology,
                "family": family,
                "generators": list_strings(&gens),
                "dim": basis.dimension(),
                "center": list_strings(&center),
                "stabilizer_generators": list_strings(st.generator_basis()),
                "stabilizer_order": st.order().to_string(),
                "stabilizer_elements": st.elements().map(list_strings),
                "component_sizes": component_sizes,
                "frustration_verdict": frustration.as_ref().map(|e| e.to_string()),
                "iso_claim": claim.as_ref().map(|e| e.to_string()),
                "iso_checks": iso_checks,
                // dimension, center and component checks are necessary
                // conditions; no isomorphism is constructed
                "iso_check_level": "necessary-only",
            });
            serde_json::to_string_pretty(&report).expect("report serializes")
        }
        Format::Csv => {
            let mut out = String::from("key,value\n");
            let _ = writeln!(out, "n,{n}");
            let _ = writeln!(out, "dim,{}", basis.dimension());
            let _ = writeln!(out, "center,{}", list_strings(&center).join(" "));
            let _ = writeln!(
                out,
                "stabilizer_generators,{}",
                list_strings(st.generator_basis()).join(" ")
            );
            let _ = writeln!(out, "stabilizer_order,{}", st.order());
            let _ = writeln!(
                out,
                "component_sizes,{}",
                component_sizes
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            let _ = writeln!(
                out,
                "frustration_verdict,{}",
                frustration
                    .as_ref()
                    .map(|e| e.to_string())
                    .unwrap_or_default()
            );
            let _ = writeln!(
                out,
                "iso_claim,{}",
                claim.as_ref().map(|e| e.to_string()).unwrap_or_default()
            );
            out.trim_end().to_string()
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "n = {n}, topology = {topology}");
            let _ = writeln!(out, "dimension = {}", basis.dimension());
            let _ = writeln!(out, "center ({}):", center.len());
            print_basis(&mut out, &center, common.print_limit);
            let _ = writeln!(
                out,
                "stabilizer: order {} with generator basis:",
                st.order()
            );
            print_basis(&mut out, st.generator_basis(), common.print_limit);
            if let Some(els) = st.elements() {
                if els.len() <= common.print_limit {
                    let _ = writeln!(out, "stabilizer elements:");
                    print_basis(&mut out, els, common.print_limit);
                }
            }
            let _ = writeln!(out, "ideal component sizes: {component_sizes:?}");
            match &frustration {
                Some(e) => {
                    let _ = writeln!(out, "frustration graph: paths/cycles, {e}");
                }
                None => {
                    let _ = writeln!(out, "frustration graph: not a union of paths/cycles");
                }
            }
            if let (Some(c), Some(checks)) = (&claim, &iso_checks) {
                let _ = writeln!(
                    out,
                    "claim {c}: dim_ok={} center_ok={} components_ok={}",
                    checks.dim_ok, checks.center_ok, checks.component_consistent
                );
            }
            out.trim_end().to_string()
        }
    };
    emit(common, text)?;
    Ok(0)
}

fn class_letter(class: dla_core::orbits::SubalgebraClass) -> &'static str {
    match class {
        dla_core::orbits::SubalgebraClass::A => "a",
        dla_core::orbits::SubalgebraClass::B => "b",
        dla_core::orbits::SubalgebraClass::C => "c",
    }
}

fn orbit_row(record: &OrbitRecord) -> serde_json::Value {
    json!({
        "family": record.matched_family,
        "class": record.class,
        "canonical_basis": record.canonical_basis,
        "dim": record.dimension(),
        "stabilizer_order": record.stabilizer_order,
        "orbit_size": record.orbit_size,
        "s": record.invariants.singles,
        "p": record.invariants.single_pairs,
        "e": record.invariants.equal_doubles,
        "d": record.invariants.different_doubles,
    })
}

fn orbit_csv_line(record: &OrbitRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        record
            .matched_family
            .map(|f| f.to_string())
            .unwrap_or_default(),
        class_letter(record.class),
        record
            .canonical_basis
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        record.dimension(),
        record.stabilizer_order,
        record.orbit_size,
        record.invariants.singles,
        record.invariants.single_pairs,
        record.invariants.equal_doubles,
        record.invariants.different_doubles,
    )
}

const ORBIT_CSV_HEADER: &str =
    "family,class,canonical_basis,dim,stabilizer_order,orbit_size,s,p,e,d";

fn cmd_scan(orbit_of: Option<&str>, common: &CommonOpts) -> Result<u8, CmdError> {
    init_threads(common);
    if let Some(text) = orbit_of {
        let gens = parse_set(text).map_err(|e| CmdError::usage(e.to_string()))?;
        let closed = run_closure(&gens, caps_of(common))?;
        if closed.n() != 2 {
            return Err(CmdError::usage("--orbit-of takes two-site strings"));
        }
        let record = canonicalize(closed.basis()).map_err(|e| CmdError::usage(e.to_string()))?;
        let out = match common.format {
            Format::Json => {
                serde_json::to_string_pretty(&orbit_row(&record)).expect("report serializes")
            }
            Format::Csv => format!("{ORBIT_CSV_HEADER}\n{}", orbit_csv_line(&record)),
            Format::Text => format!(
                "orbit of {}: family {}, canonical {{{}}}, dim {}, orbit size {}, stabilizer {}, (s,p,e,d) = {:?}",
                text,
                record
                    .matched_family
                    .map(|f| f.to_string())
                    .unwrap_or_else(|| "?".into()),
                record
                    .canonical_basis
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                record.dimension(),
                record.orbit_size,
                record.stabilizer_order,
                record.invariants.tuple(),
            ),
        };
        emit(common, out)?;
        return Ok(0);
    }

    let started = Instant::now();
    let inventory = scan_power_sets();
    let elapsed_ms = started.elapsed().as_millis() as u64;
    let text = match common.format {
        Format::Json => {
            let report = json!({
                "command": "scan",
                "total": inventory.total(),
                "a_count": inventory.a_count,
                "b_count": inventory.b_count,
                "c_count": inventory.c_count,
                "orbit_count": inventory.orbit_count(),
                "orbits": inventory.orbits.iter().map(orbit_row).collect::<Vec<_>>(),
                "elapsed_ms": elapsed_ms,
            });
            serde_json::to_string_pretty(&report).expect("report serializes")
        }
        Format::Csv => {
            let mut out = String::from(ORBIT_CSV_HEADER);
            out.push('\n');
            for r in &inventory.orbits {
                out.push_str(&orbit_csv_line(r));
                out.push('\n');
            }
            out.trim_end().to_string()
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{} subalgebras of su(4): {} a-type, {} b-type, {} c-type; {} orbits",
                inventory.total(),
                inventory.a_count,
                inventory.b_count,
                inventory.c_count,
                inventory.orbit_count()
            );
            let _ = writeln!(
                out,
                "{:<6} {:<5} {:>4} {:>6} {:>6}  {:<14} basis",
                "family", "class", "dim", "stab", "orbit", "(s,p,e,d)"
            );
            for r in &inventory.orbits {
                let _ = writeln!(
                    out,
                    "{:<6} {:<5} {:>4} {:>6} {:>6}  {:<14} {}",
                    r.matched_family
                        .map(|f| f.to_string())
                        .unwrap_or_else(|| "?".into()),
                    class_letter(r.class),
                    r.dimension(),
                    r.stabilizer_order,
                    r.orbit_size,
                    format!("{:?}", r.invariants.tuple()),
                    r.canonical_basis
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                );
            }
            let _ = write!(out, "elapsed: {elapsed_ms} ms");
            out
        }
    };
    emit(common, text)?;
    Ok(0)
}

fn parse_range(text: &str, default_max: usize) -> Result<(usize, usize), CmdError> {
    let parse_one = |s: &str| -> Result<usize, CmdError> {
        s.parse()
            .map_err(|_| CmdError::usage(format!("bad chain length {s:?}")))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, "")) => (parse_one(lo.trim())?, default_max),
        Some((lo, hi)) => (parse_one(lo.trim())?, parse_one(hi.trim())?),
        None => {
            let v = parse_one(text.trim())?;
            (v, v)
        }
    };
    if lo < 3 {
        return Err(CmdError::usage(format!(
            "classification sweeps start at n = 3, got {lo}"
        )));
    }
    if hi < lo {
        return Err(CmdError::usage(format!("empty range {text:?}")));
    }
    Ok((lo, hi))
}

fn classify_csv_line(row: &ClassificationRow) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        row.topology,
        row.family,
        row.n,
        row.computed_dim.map(|d| d.to_string()).unwrap_or_default(),
        row.predicted_dim.map(|d| d.to_string()).unwrap_or_default(),
        row.predicted
            .as_ref()
            .map(|e| e.to_string())
            .unwrap_or_default(),
        row.center_dim.map(|d| d.to_string()).unwrap_or_default(),
        row.component_sizes
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        match &row.verdict {
            Verdict::Match => "match".to_string(),
            Verdict::Mismatch(d) => format!("mismatch:{d}"),
            Verdict::OutOfRange => "out_of_range".to_string(),
            Verdict::Capped(_) => "capped".to_string(),
        },
        row.elapsed_ms,
    )
}

fn cmd_classify(
    range: &str,
    topology: &str,
    families: &[String],
    common: &CommonOpts,
) -> Result<u8, CmdError> {
    init_threads(common);
    let topologies: Vec<Topology> = if topology.trim().eq_ignore_ascii_case("all") {
        Topology::all().to_vec()
    } else {
        vec![Topology::from_str(topology).map_err(CmdError::usage)?]
    };
    // permutation chains saturate fastest; the default sweep stops at 6
    let default_max = if topologies == [Topology::Permutation] {
        6
    } else {
        8
    };
    let (n_min, n_max) = parse_range(range, default_max)?;

    let families: Vec<FamilyId> = if families.is_empty() {
        FamilyId::chain_families()
    } else {
        families
            .iter()
            .map(|f| {
                f.parse()
                    .map_err(|e: dla_core::catalog::CatalogError| CmdError::usage(e.to_string()))
            })
            .collect::<Result<_, _>>()?
    };

    let started = Instant::now();
    let rows = classify_sweep(n_min, n_max, &topologies, &families, caps_of(common))
        .map_err(|e| CmdError::usage(e.to_string()))?;
    let elapsed_ms = started.elapsed().as_millis() as u64;

    let mismatches = rows
        .iter()
        .filter(|r| matches!(r.verdict, Verdict::Mismatch(_)))
        .count();
    let capped = rows.iter().filter(|r| r.is_capped()).count();

    let scaling: Vec<serde_json::Value> = topologies
        .iter()
        .flat_map(|&t| {
            families.iter().filter_map(move |&f| {
                scaling_class_of(f, t)
                    .ok()
                    .map(|class| json!({"family": f, "topology": t, "class": class}))
            })
        })
        .collect();

    let text = match common.format {
        Format::Json => {
            let report = json!({
                "command": "classify",
                "n_min": n_min,
                "n_max": n_max,
                "rows": rows,
                "mismatches": mismatches,
                "capped": capped,
                "scaling": scaling,
                "iso_check_level": "necessary-only",
                "elapsed_ms": elapsed_ms,
            });
            serde_json::to_string_pretty(&report).expect("report serializes")
        }
        Format::Csv => {
            let mut out = String::from(
                "topology,family,n,computed_dim,predicted_dim,predicted,center_dim,component_sizes,verdict,elapsed_ms\n",
            );
            for r in &rows {
                out.push_str(&classify_csv_line(r));
                out.push('\n');
            }
            out.trim_end().to_string()
        }
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{:<12} {:<4} n={} dim={:<8} predicted={:<8} {:<28} {}",
                    r.topology.to_string(),
                    r.family.to_string(),
                    r.n,
                    r.computed_dim.map(|d| d.to_string()).unwrap_or_default(),
                    r.predicted_dim.map(|d| d.to_string()).unwrap_or_default(),
                    r.predicted
                        .as_ref()
                        .map(|e| e.to_string())
                        .unwrap_or_default(),
                    match &r.verdict {
                        Verdict::Match => "ok".to_string(),
                        Verdict::Mismatch(d) => format!("MISMATCH({d})"),
                        Verdict::OutOfRange => "out of range".to_string(),
                        Verdict::Capped(d) => format!("capped: {d}"),
                    },
                );
            }
            let _ = write!(
                out,
                "{} rows, {mismatches} mismatches, {capped} capped, {elapsed_ms} ms",
                rows.len()
            );
            out
        }
    };
    emit(common, text)?;

    if mismatches > 0 {
        Ok(EXIT_MISMATCH)
    } else if capped > 0 {
        Ok(EXIT_CAP)
    } else {
        Ok(0)
    }
}
