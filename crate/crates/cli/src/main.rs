//! Command-line front end: parses inputs, dispatches to the library,
//! renders human-readable or JSON output, and sets exit codes.
//!
//! Exit codes: 0 success; 2 input validation errors (including usage);
//! 3 mathematical refusals (non-Gorenstein-projective queries, empty
//! core, hypothesis violations); 4 triangular certificate failures.
//! Output bytes are deterministic for fixed input and flags.

use clap::{Args, Parser, Subcommand};
use nakayama_core::{
    build_core, deformation_ring, is_gorenstein_projective, jn_generators, oracle, position,
    reduce_udr, zhang_gp_check, DefRingPresentation, Error, ErrorKind, GorensteinCore,
    KupischInput, NakayamaAlgebra, SparsePoly, TriangularSpec, Uniserial, ZhangVerdict,
};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "nakayama", version, about = "Gorenstein-projective modules and universal deformation rings of cyclic Nakayama algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra and summarize it
    Info(AlgebraArgs),
    /// List all Gorenstein-projective indecomposables
    #[command(name = "gp-list")]
    GpList(AlgebraArgs),
    /// List the elementary Gorenstein-projective modules
    Elementaries(AlgebraArgs),
    /// Gorenstein core invariants (g, Loewy length, vertex class X)
    Core(AlgebraArgs),
    /// Core length and boundary distance of a module
    Position(ModuleArgs),
    /// Universal deformation ring presentation of a module
    Defring(ModuleArgs),
    /// Generators of the ideal Jn(a)
    Jn(JnArgs),
    /// Validate a triangular matrix algebra certificate and reduce
    Triangular(TriangularArgs),
    /// Verify every admissible algebra within bounds
    Survey(SurveyArgs),
}

#[derive(Args)]
struct AlgebraArgs {
    /// Kupisch series, comma separated (e.g. 4,5)
    #[arg(long, value_name = "C0,C1,...")]
    kupisch: Option<String>,
    /// JSON file of the form {"kupisch": [c0, ...]}
    #[arg(long, value_name = "FILE", conflicts_with = "kupisch")]
    input: Option<PathBuf>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ModuleArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Module as top,len with 0-indexed vertices (e.g. 0,2)
    #[arg(long, value_name = "V,L")]
    module: String,
}

#[derive(Args)]
struct JnArgs {
    /// Number of variables
    #[arg(long)]
    n: usize,
    /// Matrix power
    #[arg(long)]
    a: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TriangularArgs {
    /// Certificate file (JSON)
    #[arg(long, value_name = "FILE")]
    spec: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SurveyArgs {
    #[arg(long, default_value_t = 4)]
    max_s: usize,
    #[arg(long, default_value_t = 8)]
    max_c: usize,
    /// Write per-module presentation rows to a CSV file
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

enum CliError {
    Core(Error),
    Usage(String),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e.kind() {
                ErrorKind::Validation => 2,
                ErrorKind::Refusal => 3,
                ErrorKind::Certificate => 4,
            },
        }
    }

    fn report(&self) -> String {
        match self {
            CliError::Core(e) => format!("error[{}]: {e}", e.name()),
            CliError::Usage(msg) => format!("error[Usage]: {msg}"),
            CliError::Io(msg) => format!("error[Io]: {msg}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.report());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Info(args) => cmd_info(args),
        Command::GpList(args) => cmd_gp_list(args),
        Command::Elementaries(args) => cmd_elementaries(args),
        Command::Core(args) => cmd_core(args),
        Command::Position(args) => cmd_position(args),
        Command::Defring(args) => cmd_defring(args),
        Command::Jn(args) => cmd_jn(args),
        Command::Triangular(args) => cmd_triangular(args),
        Command::Survey(args) => cmd_survey(args),
    }
}

fn parse_usize_list(input: &str, what: &str) -> Result<Vec<usize>, CliError> {
    input
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("cannot parse {what} entry \"{part}\"")))
        })
        .collect()
}

fn load_algebra(args: &AlgebraArgs) -> Result<NakayamaAlgebra, CliError> {
    let series = match (&args.kupisch, &args.input) {
        (Some(text), None) => parse_usize_list(text, "kupisch")?,
        (None, Some(path)) => {
            let text = read_file(path)?;
            let input: KupischInput = serde_json::from_str(&text)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            input.kupisch
        }
        _ => return Err(CliError::Usage("provide exactly one of --kupisch or --input".into())),
    };
    Ok(NakayamaAlgebra::from_kupisch(&series)?)
}

fn parse_module(a: &NakayamaAlgebra, text: &str) -> Result<Uniserial, CliError> {
    let parts = parse_usize_list(text, "module")?;
    if parts.len() != 2 {
        return Err(CliError::Usage(format!("--module expects top,len; got \"{text}\"")));
    }
    Ok(a.module(parts[0], parts[1])?)
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization cannot fail")
}

fn join_usize(values: impl IntoIterator<Item = usize>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

// ---- subcommands ----

#[derive(Serialize)]
struct InfoOut {
    kupisch: Vec<usize>,
    vertices: usize,
    indecomposables: usize,
    core: Option<GorensteinCore>,
}

fn cmd_info(args: AlgebraArgs) -> Result<String, CliError> {
    let a = load_algebra(&args)?;
    let core = build_core(&a)?;
    let out = InfoOut {
        kupisch: a.kupisch().to_vec(),
        vertices: a.vertex_count(),
        indecomposables: a.indecomposables().len(),
        core,
    };
    if args.json {
        return Ok(to_json(&out));
    }
    let mut text = format!(
        "kupisch: {}\nvertices: {}\nindecomposables: {}\n",
        join_usize(out.kupisch.iter().copied()),
        out.vertices,
        out.indecomposables
    );
    match &out.core {
        Some(core) => text.push_str(&render_core(core)),
        None => text.push_str("core: empty"),
    }
    Ok(text)
}

fn render_core(core: &GorensteinCore) -> String {
    format!(
        "g: {}\nell_core: {}\nx_set: {}\nhypothesis_ok: {}\nelementaries: {}",
        core.g,
        core.ell_core,
        join_usize(core.x_set.iter().copied()),
        core.hypothesis_ok,
        core.elementaries
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

#[derive(Serialize)]
struct GpEntry {
    top: usize,
    len: usize,
    projective: bool,
    elementary: bool,
}

fn cmd_gp_list(args: AlgebraArgs) -> Result<String, CliError> {
    let a = load_algebra(&args)?;
    let elems = nakayama_core::elementaries(&a);
    let entries: Vec<GpEntry> = a
        .indecomposables()
        .into_iter()
        .filter(|&m| is_gorenstein_projective(&a, m))
        .map(|m| GpEntry {
            top: m.top,
            len: m.len,
            projective: a.is_projective(m),
            elementary: elems.contains(&m),
        })
        .collect();
    if args.json {
        return Ok(to_json(&entries));
    }
    let lines: Vec<String> = entries
        .iter()
        .map(|e| {
            let m = Uniserial::new(e.top, e.len);
            if e.projective {
                format!("{m} projective")
            } else if e.elementary {
                format!("{m} elementary")
            } else {
                m.to_string()
            }
        })
        .collect();
    Ok(lines.join("\n"))
}

fn cmd_elementaries(args: AlgebraArgs) -> Result<String, CliError> {
    let a = load_algebra(&args)?;
    let elems = nakayama_core::elementaries(&a);
    if args.json {
        return Ok(to_json(&elems));
    }
    Ok(elems
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join("\n"))
}

fn cmd_core(args: AlgebraArgs) -> Result<String, CliError> {
    let a = load_algebra(&args)?;
    let core = build_core(&a)?.ok_or(Error::EmptyCore)?;
    if args.json {
        return Ok(to_json(&core));
    }
    Ok(render_core(&core))
}

fn cmd_position(args: ModuleArgs) -> Result<String, CliError> {
    let a = load_algebra(&args.algebra)?;
    let m = parse_module(&a, &args.module)?;
    let core = build_core(&a)?.ok_or(Error::EmptyCore)?;
    let pos = position(&a, &core, m)?;
    if args.algebra.json {
        return Ok(to_json(&pos));
    }
    Ok(format!(
        "m: {}\nd: {}\nell_v: {}",
        pos.core_length, pos.distance, pos.ell_v
    ))
}

fn cmd_defring(args: ModuleArgs) -> Result<String, CliError> {
    let a = load_algebra(&args.algebra)?;
    let m = parse_module(&a, &args.module)?;
    let core = build_core(&a)?;
    let pres = deformation_ring(&a, core.as_ref(), m)?;
    if args.algebra.json {
        return Ok(to_json(&pres));
    }
    Ok(pres.to_string())
}

#[derive(Serialize)]
struct JnOut {
    n: usize,
    a: usize,
    generators: Vec<SparsePoly>,
}

fn cmd_jn(args: JnArgs) -> Result<String, CliError> {
    let generators = jn_generators(args.n, args.a)?;
    if args.json {
        return Ok(to_json(&JnOut {
            n: args.n,
            a: args.a,
            generators,
        }));
    }
    if generators.is_empty() {
        return Ok("(zero ideal of k)".to_string());
    }
    Ok(generators
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join("\n"))
}

#[derive(Serialize)]
struct TriangularOut {
    #[serde(flatten)]
    verdict: ZhangVerdict,
    presentation: DefRingPresentation,
}

fn cmd_triangular(args: TriangularArgs) -> Result<String, CliError> {
    let text = read_file(&args.spec)?;
    let spec = TriangularSpec::from_json(&text)?;
    let a = NakayamaAlgebra::from_kupisch(&spec.lambda_kupisch)?;
    let verdict = zhang_gp_check(&a, &spec.gamma, &spec.bimodule, &spec.module)?;
    let presentation = reduce_udr(&a, &spec.gamma, &spec.bimodule, &spec.module)?;
    let out = TriangularOut {
        verdict,
        presentation,
    };
    if args.json {
        return Ok(to_json(&out));
    }
    Ok(format!(
        "gorenstein_projective: {}\nv_gorenstein_projective: {}\ndeformation_ring: {}\nn: {}\nm: {}",
        out.verdict.gorenstein_projective,
        out.verdict.v_gorenstein_projective,
        out.presentation,
        out.presentation.n,
        out.presentation.m
    ))
}

fn cmd_survey(args: SurveyArgs) -> Result<String, CliError> {
    if args.max_s < 1 || args.max_c < 2 {
        return Err(CliError::Usage("survey requires --max-s >= 1 and --max-c >= 2".into()));
    }
    let report = oracle::survey(args.max_s, args.max_c);
    if let Some(path) = &args.csv {
        std::fs::write(path, report.to_csv())
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    if args.json {
        return Ok(to_json(&report));
    }
    let mut text = format!(
        "algebras_checked: {}\nfailures: {}\nempty_core_count: {}\nhypothesis_violation_count: {}",
        report.algebras_checked,
        report.failures.len(),
        report.empty_core_count,
        report.hypothesis_violation_count
    );
    for f in report.failures.iter().take(10) {
        text.push_str(&format!(
            "\nFAIL {:?} {}: {}",
            f.kupisch, f.invariant, f.witness
        ));
    }
    text.push_str("\npresentation_counts (n,m -> count):");
    for p in &report.presentation_counts {
        text.push_str(&format!("\n  ({},{}) -> {}", p.n, p.m, p.count));
    }
    text.push_str("\ng_counts (g -> count):");
    for gc in &report.g_counts {
        text.push_str(&format!("\n  {} -> {}", gc.g, gc.count));
    }
    if let Some(path) = &args.csv {
        text.push_str(&format!("\ncsv: {} ({} rows)", path.display(), report.rows.len()));
    }
    Ok(text)
}
