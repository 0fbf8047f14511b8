//! `octaverify`: replay proof scripts and print group fact sheets.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use octaverify_core::grouprep::formulas::{self, REPRESENTATIONS};
use octaverify_core::grouprep::gn::gn_group;
use octaverify_core::grouprep::{GroupElement, LabeledGroup, Permutation};
use octaverify_core::prover::{self, ProofScript, RunOptions, BUNDLED};

#[derive(Parser)]
#[command(name = "octaverify", version, about = "Exact replay of binary octahedral rationality computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a proof script and print its report.
    Verify(VerifyArgs),
    /// Print a fact sheet for a group: s4hat, g3, g4 or g5.
    Group { name: String },
    /// Print the matrices of a representation (two_dim, real4_sqrt2, ... or 3.1 to 3.5).
    Rep {
        id: String,
        /// Also check the defining relations and the restriction of scalars.
        #[arg(long)]
        check: bool,
    },
    /// List bundled scripts and representations.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "script", required_unless_present = "script")]
    bundled: Option<String>,
    #[arg(long)]
    script: Option<PathBuf>,
    /// Also write the JSON report to this path.
    #[arg(long)]
    json_report: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Treat cited steps as failures for the exit code.
    #[arg(long)]
    strict_cited: bool,
    /// Step ids to report as cited without running them.
    #[arg(long, value_delimiter = ',')]
    skip: Vec<String>,
    #[arg(long)]
    gcd_threshold: Option<usize>,
}

const USAGE_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Verify(args) => verify(args),
        Command::Group { name } => group(&name),
        Command::Rep { id, check } => rep(&id, check),
        Command::List => {
            list();
            Ok(true)
        }
    };
    match out {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn load(args: &VerifyArgs) -> Result<ProofScript, String> {
    match (&args.bundled, &args.script) {
        (Some(name), _) => prover::bundled(name).map_err(|e| {
            let names: Vec<&str> = BUNDLED.iter().map(|(n, _)| *n).collect();
            format!("{e} (available: {})", names.join(", "))
        }),
        (None, Some(path)) => {
            let src = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            ProofScript::from_json(&src)
                .map_err(|e| format!("{}: {e} (script format: docs/script.schema.json)", path.display()))
        }
        (None, None) => Err("one of --bundled or --script is required".into()),
    }
}

fn verify(args: VerifyArgs) -> Result<bool, String> {
    let script = load(&args)?;
    let mut opts = RunOptions::from_env();
    opts.strict_cited = args.strict_cited;
    opts.skip = args.skip.iter().map(|s| s.trim().to_string()).collect::<BTreeSet<_>>();
    if let Some(t) = args.gcd_threshold {
        opts.gcd_threshold = t;
    }
    let report = prover::run(&script, &opts).map_err(|e| e.to_string())?;
    if let Some(path) = &args.json_report {
        std::fs::write(path, report.to_json() + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
    }
    match args.format {
        Format::Text => print!("{report}"),
        Format::Json => println!("{}", report.to_json()),
    }
    Ok(report.success(opts.strict_cited))
}

fn print_lifts<T: GroupElement>(g: &LabeledGroup<T>, proj: &[Permutation]) {
    let table = formulas::lift_orders(g, proj);
    println!("lift orders (image in S_n -> orders of both preimages):");
    for (p, orders) in &table {
        let o: Vec<String> = orders.iter().map(usize::to_string).collect();
        println!("  {:<14} {}", p.to_string(), o.join(", "));
    }
    println!("by cycle type:");
    for (ty, orders) in formulas::lift_orders_by_type(&table) {
        let t: Vec<String> = ty.iter().map(usize::to_string).collect();
        let o: Vec<String> = orders.iter().map(usize::to_string).collect();
        println!("  [{}] -> {{{}}}", t.join(","), o.join(", "));
    }
}

fn group(name: &str) -> Result<bool, String> {
    match name.to_ascii_lowercase().as_str() {
        "s4hat" | "binary-octahedral" => {
            let gens = formulas::two_dim();
            let g = formulas::closure_of(&gens).map_err(|e| e.to_string())?;
            let q = formulas::quotient_check(&g, &formulas::s4_projection());
            println!("binary octahedral group (2-dimensional model over Q(zeta))");
            println!("order: {}", g.order());
            println!("center size: {}", g.center().len());
            for (rel, ok) in formulas::verify_presentation(&gens) {
                println!("  {rel}: {}", if ok { "holds" } else { "FAILS" });
            }
            let imgs: Vec<String> = formulas::s4_projection().iter().map(|p| p.to_string()).collect();
            println!("projection to S4: aprime, b, c -> {}", imgs.join(", "));
            println!("kernel size: {}", q.kernel.len());
            if q.is_homomorphism {
                print_lifts(&g, &q.images);
            }
            Ok(q.is_homomorphism && g.order() == 48)
        }
        other => {
            let n: usize = other
                .strip_prefix('g')
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| format!("unknown group '{name}' (try s4hat, g3, g4, g5)"))?;
            let g = gn_group(n).map_err(|e| e.to_string())?;
            println!("G{n}: double cover of S{n} from the cup product of the sign character");
            println!("order: {}", g.group.order());
            println!("center size: {}", g.group.center().len());
            println!("faithful 2n-dimensional representation: {}", g.is_faithful());
            print_lifts(&g.group, &g.projections());
            Ok(g.is_faithful())
        }
    }
}

fn rep(id: &str, check: bool) -> Result<bool, String> {
    let name = formulas::resolve_representation(id).ok_or_else(|| format!("unknown representation '{id}'"))?;
    let gens = formulas::literal(name).ok_or_else(|| format!("no matrices for {name}"))?;
    let (_, alias, desc) = REPRESENTATIONS.iter().find(|(n, _, _)| *n == name).expect("resolved");
    println!("{name} ({alias}): {desc}");
    for (label, m) in [("aprime", &gens.aprime), ("b", &gens.b), ("c", &gens.c)] {
        println!("{label} =\n{m}");
    }
    if !check {
        return Ok(true);
    }
    let rels = formulas::verify_presentation(&gens);
    let mut ok = true;
    for (rel, holds) in &rels {
        ok &= holds;
        if !holds {
            println!("relation {rel} FAILS");
        }
    }
    println!("presentation {}", if ok { "verified" } else { "failed" });
    let restricted = formulas::computed(name).map_err(|e| e.to_string())? == gens;
    println!("restriction of scalars {}", if restricted { "matches" } else { "differs" });
    Ok(ok && restricted)
}

fn list() {
    println!("bundled scripts:");
    for (name, _) in BUNDLED {
        let steps = prover::bundled(name).map(|s| s.steps.len()).unwrap_or(0);
        println!("  {name:<12} {steps} steps");
    }
    println!("representations:");
    for (name, alias, desc) in REPRESENTATIONS {
        println!("  {name:<18} {alias}  {desc}");
    }
}
