mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use braidcyc::cocyclic::{build_and_verify, DEFAULT_CAP};
use braidcyc::cohomology::hc_dimensions;
use braidcyc::graded::{braid_symmetry_check, space_with_support, support_criterion, Category};
use braidcyc::hopf::ModularPair;
use braidcyc::io::{self, CoalgebraJson, HopfJson, ModuleJson, PairJson, RJson};
use braidcyc::report::CheckResult;
use braidcyc::transmute::{czn_group_algebra, czn_r_matrix, transmute, OrdinaryHopfData};
use braidcyc::triple::{build_triple_cocyclic, TripleData};
use braidcyc::{builtin, pipeline};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use output::{Output, Status};

#[derive(Parser)]
#[command(name = "braidcyc", version, about = "Exact braided Hopf cyclic cohomology over Q(ζ_n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a built-in structure file.
    #[command(subcommand)]
    Builtin(Builtin),
    /// Check axioms of a structure file.
    #[command(subcommand)]
    Verify(Verify),
    /// Decide whether ψψ = id and ψ = flip for given degree supports.
    BraidCheck(BraidCheckArgs),
    /// Transmute an ordinary Hopf algebra with an R-matrix.
    Transmute(TransmuteArgs),
    /// Build and verify the cocyclic object of a Hopf algebra.
    #[command(subcommand)]
    Cocyclic(CocyclicCmd),
    /// Build and verify the cocyclic object of a triple (H, C, M).
    #[command(subcommand)]
    Triple(TripleCmd),
    /// Hochschild and cyclic cohomology dimensions.
    Cohomology(CohomologyArgs),
    /// C[Z_n] end to end: transmutation, cocyclic object, cohomology.
    Pipeline(PipelineArgs),
}

#[derive(Args)]
struct Common {
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to this file (relative paths resolve
    /// under $BRAIDCYC_OUT_DIR when set).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Builtin {
    /// The group algebra C[Z_n] as an ordinary (degree-0) Hopf algebra.
    Czn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The R-matrix (1/n) Σ ζ^{-ab} g^a ⊗ g^b.
    CznR {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The braided line Q(ζ)[x]/(x^k) with x primitive of the given degree.
    Line {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// H as a module coalgebra over itself (C = H).
    Coalgebra {
        #[arg(long)]
        hopf: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The unit object as coefficients, acting by δ and coacting by σ.
    Module {
        #[arg(long)]
        hopf: String,
        #[arg(long)]
        pair: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Hopf axioms (and the modular pair, if the file has one).
    Hopf {
        #[arg(long)]
        hopf: String,
        #[command(flatten)]
        common: Common,
    },
    /// Quasitriangular axioms for an R file over an ordinary Hopf algebra.
    Quasitriangular {
        #[arg(long)]
        hopf: String,
        #[arg(long)]
        r: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct BraidCheckArgs {
    #[arg(long)]
    n: usize,
    /// Degrees of the first object, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    support: Vec<usize>,
    /// Degrees of the second object; defaults to the first.
    #[arg(long, value_delimiter = ',')]
    support_b: Option<Vec<usize>>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct TransmuteArgs {
    #[arg(long)]
    hopf: String,
    #[arg(long)]
    r: String,
    /// Basis index of the grading generator g.
    #[arg(long, default_value_t = 1)]
    generator: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LevelArgs {
    #[arg(long)]
    hopf: String,
    /// Pair file; overrides the Hopf file's own pair.
    #[arg(long)]
    pair: Option<String>,
    #[arg(long)]
    level: usize,
    /// Bound on dim(Cⁿ)², the dense size of the largest operator.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand)]
enum CocyclicCmd {
    Build {
        #[command(flatten)]
        args: LevelArgs,
        /// Run the identity suite (always on; kept for command compatibility).
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Subcommand)]
enum TripleCmd {
    Build {
        #[arg(long)]
        hopf: String,
        #[arg(long)]
        coalgebra: String,
        #[arg(long)]
        module: String,
        #[arg(long)]
        level: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct CohomologyArgs {
    #[command(flatten)]
    args: LevelArgs,
}

#[derive(Args)]
struct PipelineArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    level: usize,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(flatten)]
    common: Common,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(output::exit_code(&e))
        }
    }
}

fn load_hopf(path: &str) -> anyhow::Result<(braidcyc::hopf::BraidedHopfAlgebra, ModularPair)> {
    let text = output::read_input(path)?;
    let json: HopfJson = io::parse(&text, path)?;
    json.to_hopf().with_context(|| format!("in {path}"))
}

fn load_pair(
    h: &braidcyc::hopf::BraidedHopfAlgebra,
    default: ModularPair,
    path: &Option<String>,
) -> anyhow::Result<ModularPair> {
    match path {
        None => Ok(default),
        Some(p) => {
            let json: PairJson = io::parse(&output::read_input(p)?, p)?;
            Ok(json.to_pair(h).with_context(|| format!("in {p}"))?)
        }
    }
}

fn emit_file<T: serde::Serialize>(value: &T, out: &Option<PathBuf>) -> anyhow::Result<Status> {
    let text = io::to_pretty(value)?;
    match out {
        Some(p) => output::write_file(p, &text)?,
        None => output::print(&format!("{text}\n"))?,
    }
    Ok(Status::Pass)
}

fn run(cmd: Command) -> anyhow::Result<Status> {
    match cmd {
        Command::Builtin(b) => builtin_cmd(b),
        Command::Verify(Verify::Hopf { hopf, common }) => {
            let (h, pair) = load_hopf(&hopf)?;
            let mut checks = h.verify_axioms();
            checks.extend(pair.verify(&h));
            Output::new("verify hopf", common).checks(&checks)
        }
        Command::Verify(Verify::Quasitriangular { hopf, r, common }) => {
            let (h, _) = load_hopf(&hopf)?;
            let rj: RJson = io::parse(&output::read_input(&r)?, &r)?;
            let r = rj.to_r(h.space()).with_context(|| format!("in {r}"))?;
            let data = OrdinaryHopfData { hopf: h, generator: Vec::new() };
            Output::new("verify quasitriangular", common).checks(&data.verify_quasitriangular(&r)?)
        }
        Command::BraidCheck(a) => braid_check(a),
        Command::Transmute(a) => {
            let (h, _) = load_hopf(&a.hopf)?;
            let rj: RJson = io::parse(&output::read_input(&a.r)?, &a.r)?;
            let r = rj.to_r(h.space()).with_context(|| format!("in {}", a.r))?;
            if a.generator >= h.dim() {
                anyhow::bail!(braidcyc::Error::Parse(format!("generator index {} outside H", a.generator)));
            }
            let one = braidcyc::scalar::Cyclo::one(h.space().field());
            let data = OrdinaryHopfData { hopf: h, generator: vec![(a.generator, one)] };
            let t = transmute(&data, &r)?;
            emit_file(&HopfJson::from_hopf(&t.hopf, None), &a.out)
        }
        Command::Cocyclic(CocyclicCmd::Build { args, .. }) => {
            let (h, own) = load_hopf(&args.hopf)?;
            let pair = load_pair(&h, own, &args.pair)?;
            let (_, report) = build_and_verify(&h, &pair, args.level, args.cap)?;
            Output::new("cocyclic build", args.common).cocyclic(&report)
        }
        Command::Triple(TripleCmd::Build { hopf, coalgebra, module, level, cap, common, .. }) => {
            let (h, _) = load_hopf(&hopf)?;
            let cj: CoalgebraJson = io::parse(&output::read_input(&coalgebra)?, &coalgebra)?;
            let mj: ModuleJson = io::parse(&output::read_input(&module)?, &module)?;
            let c = cj.to_coalgebra(&h).with_context(|| format!("in {coalgebra}"))?;
            let m = mj.to_module(&h).with_context(|| format!("in {module}"))?;
            let t = TripleData::new(h, c, m)?;
            let (_, report) = build_triple_cocyclic(&t, level, cap)?;
            Output::new("triple build", common).triple(&report)
        }
        Command::Cohomology(CohomologyArgs { args }) => {
            let (h, own) = load_hopf(&args.hopf)?;
            let pair = load_pair(&h, own, &args.pair)?;
            let level = args.level.max(1);
            let (cm, report) = build_and_verify(&h, &pair, level, args.cap)?;
            if report.para_defects.iter().any(|&d| d != 0) {
                let out = Output::new("cohomology", args.common);
                return out.refuse(&report);
            }
            let coh = hc_dimensions(&cm, level - 1)?;
            Output::new("cohomology", args.common).cohomology(&coh)
        }
        Command::Pipeline(a) => {
            let report = pipeline::run_czn(a.n, a.level, a.cap)?;
            Output::new("pipeline", a.common).pipeline(&report)
        }
    }
}

fn builtin_cmd(b: Builtin) -> anyhow::Result<Status> {
    match b {
        Builtin::Czn { n, out } => {
            check_n(n)?;
            emit_file(&HopfJson::from_hopf(&czn_group_algebra(n).hopf, None), &out)
        }
        Builtin::CznR { n, out } => {
            check_n(n)?;
            let h = czn_group_algebra(n);
            emit_file(&RJson::from_r(h.space(), &czn_r_matrix(n)), &out)
        }
        Builtin::Line { n, degree, out } => {
            check_n(n)?;
            let h = builtin::braided_line(n, degree).map_err(|e| braidcyc::Error::Parse(e.to_string()))?;
            emit_file(&HopfJson::from_hopf(&h, None), &out)
        }
        Builtin::Coalgebra { hopf, out } => {
            let (h, pair) = load_hopf(&hopf)?;
            let t = TripleData::hopf_reduction(&h, &pair)?;
            emit_file(&CoalgebraJson::from_coalgebra(&t.coalgebra), &out)
        }
        Builtin::Module { hopf, pair, out } => {
            let (h, own) = load_hopf(&hopf)?;
            let pair = load_pair(&h, own, &pair)?;
            let t = TripleData::hopf_reduction(&h, &pair)?;
            emit_file(&ModuleJson::from_module(&t.module), &out)
        }
    }
}

fn check_n(n: usize) -> anyhow::Result<()> {
    if n == 0 {
        anyhow::bail!(braidcyc::Error::Parse("--n must be at least 1".into()));
    }
    Ok(())
}

fn braid_check(a: BraidCheckArgs) -> anyhow::Result<Status> {
    check_n(a.n)?;
    let sb = a.support_b.clone().unwrap_or_else(|| a.support.clone());
    let criterion = support_criterion(a.n, &a.support, &sb).map_err(|e| braidcyc::Error::Parse(e.to_string()))?;
    let cat = Category::anyonic(a.n);
    let va = space_with_support(&cat, &a.support)?;
    let vb = space_with_support(&cat, &sb)?;
    let matrix = braid_symmetry_check(&va, &vb)?;
    let agree = CheckResult::flag("support criterion agrees with the exact matrix check", None, criterion == matrix);
    let value = json!({
        "n": a.n,
        "support": a.support,
        "support_b": sb,
        "criterion": criterion,
        "matrix": matrix,
        "checks": [agree],
    });
    let mut out = Output::new("braid-check", a.common);
    out.line(format!("n = {}, supports {:?} and {:?}", a.n, a.support, sb));
    out.line(format!(
        "symmetric pair (ψψ = id): {}   flip (ψ = τ): {}",
        yes_no(matrix.symmetric_pair),
        yes_no(matrix.flip)
    ));
    out.line(format!(
        "support criterion: symmetric pair {}, flip {}",
        yes_no(criterion.symmetric_pair),
        yes_no(criterion.flip)
    ));
    out.finish(value, agree.pass)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
