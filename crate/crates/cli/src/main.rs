use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pgpw_core::code::{analyze_code, code_dimension, CodeSummary};
use pgpw_core::construction::{build_line_pcw, certify_minimality, check_conjecture_max, MinimalityCertificate};
use pgpw_core::decoder::{awgn_simulate, Decoders, SimReport};
use pgpw_core::fraction::{decimal_string, fraction_string, DECIMAL_DIGITS};
use pgpw_core::geometry::degree_of_order;
use pgpw_core::io::{
    from_json, simulation_csv, spectrum_csv, to_json, weight_enumerator_csv, ConeJson, MatrixJson,
    RaySetJson,
};
use pgpw_core::pseudoweight::{
    bound_table, certify_ray_set, certify_two_value_bound, certify_zero_component,
    check_conjecture_min_012, spectrum, BoundCertificate, ConjectureReport, Evidence,
    SpectrumReport,
};
use pgpw_core::rays::{enumerate_rays_with, Budget, EnumerationOptions, RaySet};
use pgpw_core::{build_plane, circulant_labeling, BinaryMatrix, ConeSystem, Error, FieldTable, Plane, Rational};

/// Directory for artifacts when `--out` is not given.
const OUT_DIR_VAR: &str = "PGPW_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "pgpw",
    version,
    about = "Minimal pseudo-codewords and pseudo-weights of projective-plane LDPC codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Circulant parity-check matrix of PG(2, q)
    Build(Target),
    /// Inequality system of the fundamental cone
    Cone(Target),
    /// Extreme rays of the fundamental cone
    Enumerate(EnumerateArgs),
    /// Code parameters, weight enumerator and minimal codewords
    Code(CodeArgs),
    /// Pseudo-weight spectrum and gap
    Gap(GapArgs),
    /// Bound certificates and conjecture evidence
    Verify(VerifyArgs),
    /// Coefficients of the two-value pseudo-weight bound
    Table(TableArgs),
    /// Line-at-infinity pseudo-codeword
    Construct(ConstructArgs),
    /// Monte-Carlo ML vs LP decoding on the AWGN channel
    Simulate(SimulateArgs),
}

fn parse_q(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(q @ (2 | 4 | 8)) => Ok(q),
        _ => Err(format!("q must be 2, 4 or 8, got {s}")),
    }
}

fn parse_positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number, got {s}")),
    }
}

#[derive(Args)]
struct Target {
    #[arg(long, value_parser = parse_q)]
    q: u64,
    /// Output file (defaults to $PGPW_OUT_DIR/<name>, else stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct RaySource {
    /// Reuse a ray set saved by `enumerate`
    #[arg(long)]
    rays: Option<PathBuf>,
    #[arg(long)]
    no_symmetry: bool,
    #[arg(long, value_parser = parse_positive, default_value = "3600")]
    budget_seconds: f64,
    /// Cap on rays held during enumeration
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_rays: Option<u64>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long)]
    no_symmetry: bool,
    #[arg(long, value_parser = parse_positive, default_value = "3600")]
    budget_seconds: f64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_rays: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct CodeArgs {
    #[command(flatten)]
    target: Target,
    /// json: full summary; csv: weight enumerator
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct GapArgs {
    #[command(flatten)]
    target: Target,
    #[command(flatten)]
    source: RaySource,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundName {
    All,
    SumBound,
    WeightWindow,
    WeightFloor,
    ZeroOneTwo,
    TwoValue,
    ZeroComponent,
    Construction,
    ConjectureMin,
    ConjectureMax,
}

impl BoundName {
    fn needs_rays(self) -> bool {
        matches!(
            self,
            BoundName::SumBound
                | BoundName::WeightWindow
                | BoundName::WeightFloor
                | BoundName::ZeroOneTwo
                | BoundName::ConjectureMin
                | BoundName::ConjectureMax
        )
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum, default_value = "all")]
    bound: BoundName,
    #[command(flatten)]
    source: RaySource,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i64).range(1..))]
    m: i64,
    #[arg(long = "Mmax", default_value_t = 15, value_parser = clap::value_parser!(i64).range(1..))]
    big_m_max: i64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long, default_value_t = 0)]
    line: usize,
    /// Run the exact minimality certificate
    #[arg(long)]
    certify: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecoderArg {
    Ml,
    Lp,
    Both,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    target: Target,
    /// Eb/N0 in dB; repeat or comma-separate for several points
    #[arg(long = "snr-db", required = true, value_delimiter = ',', allow_negative_numbers = true)]
    snr_db: Vec<f64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "both")]
    decoder: DecoderArg,
    #[command(flatten)]
    source: RaySource,
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(PathBuf, std::io::Error),
    Verification(usize),
    Skipped(usize),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io(p, e) => write!(f, "{}: {e}", p.display()),
            Failure::Verification(n) => write!(f, "{n} check(s) failed"),
            Failure::Skipped(n) => write!(f, "{n} check(s) skipped: ray set unavailable within budget"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(
                Error::BudgetExceeded { .. }
                | Error::DimensionLimit { .. }
                | Error::CodeTooLarge { .. }
                | Error::SearchSpaceTooLarge { .. },
            )
            | Failure::Skipped(_) => 3,
            Failure::Core(Error::InvalidArgument(_) | Error::InvalidLine { .. }) => 2,
            _ => 1,
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(a) => build(&a),
        Command::Cone(a) => cone(&a),
        Command::Enumerate(a) => enumerate(&a),
        Command::Code(a) => code(&a),
        Command::Gap(a) => gap(&a),
        Command::Verify(a) => verify(&a),
        Command::Table(a) => table(&a),
        Command::Construct(a) => construct(&a),
        Command::Simulate(a) => simulate(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pgpw: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn destination(out: &Option<PathBuf>, default_name: &str) -> Option<PathBuf> {
    out.clone()
        .or_else(|| std::env::var_os(OUT_DIR_VAR).map(|d| Path::new(&d).join(default_name)))
}

fn write_file(path: &Path, contents: &str) -> Outcome {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Failure::Io(dir.to_path_buf(), e))?;
    }
    std::fs::write(path, contents).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

/// Writes the artifact to its destination, or to stdout if there is none.
fn emit(out: &Option<PathBuf>, default_name: &str, contents: &str) -> Outcome {
    match destination(out, default_name) {
        Some(path) => {
            write_file(&path, contents)?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

/// Writes the artifact only when a destination is configured.
fn emit_optional(out: &Option<PathBuf>, default_name: &str, contents: &str) -> Outcome {
    if let Some(path) = destination(out, default_name) {
        write_file(&path, contents)?;
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}

fn exact(r: &Rational) -> String {
    format!("{} ({})", fraction_string(r), decimal_string(r, DECIMAL_DIGITS))
}

fn plane_for(q: u64) -> Result<(Plane, BinaryMatrix), Error> {
    let field = FieldTable::build(degree_of_order(q)?)?;
    circulant_labeling(&build_plane(&field))
}

fn build(a: &Target) -> Outcome {
    let (_, h) = plane_for(a.q)?;
    emit(&a.out, &format!("plane_q{}.json", a.q), &to_json(&MatrixJson::new(a.q, &h))?)
}

fn cone(a: &Target) -> Outcome {
    let (_, h) = plane_for(a.q)?;
    let cone = ConeSystem::build(&h)?;
    emit(&a.out, &format!("cone_q{}.json", a.q), &to_json(&ConeJson::new(&cone))?)
}

fn enumeration_options(no_symmetry: bool, budget_seconds: f64, max_rays: Option<u64>) -> EnumerationOptions {
    EnumerationOptions {
        use_symmetry: !no_symmetry,
        budget: Budget {
            time_limit: Some(Duration::from_secs_f64(budget_seconds)),
            max_rays: max_rays.map(|m| m as usize),
        },
        ..EnumerationOptions::default()
    }
}

fn load_rays(source: &RaySource, h: &BinaryMatrix) -> Result<RaySet, Failure> {
    if let Some(path) = &source.rays {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(path.clone(), e))?;
        let json: RaySetJson = from_json(&text)?;
        return Ok(json.into_ray_set(h)?);
    }
    let cone = ConeSystem::build(h)?;
    let opts = enumeration_options(source.no_symmetry, source.budget_seconds, source.max_rays);
    Ok(enumerate_rays_with(&cone, &opts)?)
}

fn enumerate(a: &EnumerateArgs) -> Outcome {
    let (_, h) = plane_for(a.target.q)?;
    let cone = ConeSystem::build(&h)?;
    let opts = enumeration_options(a.no_symmetry, a.budget_seconds, a.max_rays);
    let rays = enumerate_rays_with(&cone, &opts)?;
    eprintln!("{} rays in {} orbit classes", rays.len(), rays.orbit_rep_indices().len());
    emit(
        &a.target.out,
        &format!("rays_q{}.json", a.target.q),
        &to_json(&RaySetJson::new(&rays))?,
    )
}

#[derive(Serialize)]
struct RankOnly {
    n: usize,
    k: usize,
    rank: usize,
    swept: bool,
}

fn code(a: &CodeArgs) -> Outcome {
    let (_, h) = plane_for(a.target.q)?;
    let q = a.target.q;
    match analyze_code(&h) {
        Ok(summary) => match a.format {
            Format::Json => emit(&a.target.out, &format!("code_q{q}.json"), &to_json(&summary)?),
            Format::Csv => emit(
                &a.target.out,
                &format!("weights_q{q}.csv"),
                &weight_enumerator_csv(&summary)?,
            ),
        },
        Err(Error::CodeTooLarge { .. }) if matches!(a.format, Format::Json) => {
            let k = code_dimension(&h);
            let info = RankOnly {
                n: h.cols(),
                k,
                rank: h.cols() - k,
                swept: false,
            };
            emit(&a.target.out, &format!("code_q{q}.json"), &to_json(&info)?)
        }
        Err(e) => Err(e.into()),
    }
}

fn code_and_rays(q: u64, source: &RaySource) -> Result<(BinaryMatrix, CodeSummary, RaySet), Failure> {
    let (_, h) = plane_for(q)?;
    let code = analyze_code(&h)?;
    let rays = load_rays(source, &h)?;
    Ok((h, code, rays))
}

fn print_spectrum(report: &SpectrumReport) {
    println!("d_min {}", report.d_min);
    println!("w_p_min {}", exact(&report.w_p_min));
    match (report.min_non_codeword_weight(), &report.gap) {
        (Some(w), Some(g)) => {
            println!("min_non_codeword {}", exact(&w));
            println!("gap {}", exact(g));
        }
        _ => println!("gap undefined (no non-codeword class)"),
    }
}

fn gap(a: &GapArgs) -> Outcome {
    let (_, code, rays) = code_and_rays(a.target.q, &a.source)?;
    let report = spectrum(&rays, &code)?;
    print_spectrum(&report);
    let q = a.target.q;
    match a.format {
        Format::Json => emit_optional(&a.target.out, &format!("spectrum_q{q}.json"), &to_json(&report)?),
        Format::Csv => emit_optional(&a.target.out, &format!("spectrum_q{q}.csv"), &spectrum_csv(&report)?),
    }
}

#[derive(Serialize, Default)]
struct Bundle {
    q: u64,
    certificates: Vec<BoundCertificate>,
    constructions: Vec<MinimalityCertificate>,
    conjectures: Vec<ConjectureReport>,
    skipped: Vec<String>,
}

fn verify(a: &VerifyArgs) -> Outcome {
    let q = a.target.q;
    let wants = |b: BoundName| a.bound == BoundName::All || a.bound == b;
    let (plane, h) = plane_for(q)?;
    let cone = ConeSystem::build(&h)?;
    let mut bundle = Bundle {
        q,
        ..Bundle::default()
    };

    let ray_checks = [
        BoundName::SumBound,
        BoundName::WeightWindow,
        BoundName::WeightFloor,
        BoundName::ZeroOneTwo,
        BoundName::ConjectureMin,
        BoundName::ConjectureMax,
    ];
    if ray_checks.iter().any(|&b| wants(b) && b.needs_rays()) {
        match load_rays(&a.source, &h) {
            Ok(rays) => {
                for cert in certify_ray_set(&cone, &rays, q)? {
                    let keep = match cert.bound_name.as_str() {
                        "sum_bound" => wants(BoundName::SumBound),
                        "weight_window" => wants(BoundName::WeightWindow),
                        "weight_floor" => wants(BoundName::WeightFloor),
                        "zero_one_two" => wants(BoundName::ZeroOneTwo),
                        _ => true,
                    };
                    if keep {
                        bundle.certificates.push(cert);
                    }
                }
                if wants(BoundName::ConjectureMin) || wants(BoundName::ConjectureMax) {
                    let code = analyze_code(&h)?;
                    let report = spectrum(&rays, &code)?;
                    if wants(BoundName::ConjectureMin) {
                        bundle.conjectures.push(check_conjecture_min_012(&report));
                    }
                    if wants(BoundName::ConjectureMax) {
                        bundle.conjectures.push(check_conjecture_max(&report, q));
                    }
                }
            }
            Err(Failure::Core(
                e @ (Error::BudgetExceeded { .. } | Error::DimensionLimit { .. }),
            )) => {
                for b in ray_checks.iter().filter(|&&b| wants(b)) {
                    bundle
                        .skipped
                        .push(format!("{}: {e}", b.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()));
                }
            }
            Err(e) => return Err(e),
        }
    }
    if wants(BoundName::TwoValue) {
        bundle.certificates.push(certify_two_value_bound(8, 4)?);
    }
    if wants(BoundName::ZeroComponent) {
        bundle.certificates.push(certify_zero_component(1000, a.seed)?);
    }
    if wants(BoundName::Construction) {
        let c = build_line_pcw(&plane, 0)?;
        bundle.constructions.push(certify_minimality(&c, &cone)?);
    }

    let mut failed = 0;
    for c in &bundle.certificates {
        let status = if c.passes() { "PASS" } else { "FAIL" };
        println!("{status} {} ({} witnesses)", c.bound_name, c.witnesses.len());
        for v in &c.violations {
            println!("  {v}");
        }
        failed += usize::from(!c.passes());
    }
    for c in &bundle.constructions {
        let status = if c.passes() { "PASS" } else { "FAIL" };
        println!(
            "{status} construction (line {}, {} tight, rank {})",
            c.line_index, c.tight_parity, c.rank
        );
        for v in &c.failures {
            println!("  {v}");
        }
        failed += usize::from(!c.passes());
    }
    for c in &bundle.conjectures {
        let status = match c.evidence {
            Evidence::Consistent => "PASS",
            Evidence::Vacuous => "VACUOUS",
            Evidence::Counterexample => "FAIL",
        };
        let observed = c.observed.as_ref().map(exact).unwrap_or_else(|| "-".into());
        println!("{status} {} (observed {observed})", c.conjecture);
        failed += usize::from(c.evidence == Evidence::Counterexample);
    }
    for s in &bundle.skipped {
        println!("SKIP {s}");
    }
    emit_optional(&a.target.out, &format!("certificates_q{q}.json"), &to_json(&bundle)?)?;
    if failed > 0 {
        Err(Failure::Verification(failed))
    } else if !bundle.skipped.is_empty() {
        Err(Failure::Skipped(bundle.skipped.len()))
    } else {
        Ok(())
    }
}

fn table(a: &TableArgs) -> Outcome {
    let rows = bound_table(a.m, a.big_m_max)?;
    let mut text = String::from("M,coefficient_fraction,coefficient_decimal\n");
    for (bm, c) in rows {
        text.push_str(&format!(
            "{bm},{},{}\n",
            fraction_string(&c),
            decimal_string(&c, DECIMAL_DIGITS)
        ));
    }
    emit(&a.out, &format!("table_m{}.csv", a.m), &text)
}

#[derive(Serialize)]
struct ConstructionOutput {
    construction: pgpw_core::construction::LineConstruction,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<MinimalityCertificate>,
}

fn construct(a: &ConstructArgs) -> Outcome {
    let q = a.target.q;
    let (plane, h) = plane_for(q)?;
    let c = build_line_pcw(&plane, a.line)?;
    println!("line {} points {:?}", a.line, plane.line_points(a.line));
    println!("w_p {}", exact(&c.claimed_weight));
    let certificate = if a.certify {
        let cone = ConeSystem::build(&h)?;
        let cert = certify_minimality(&c, &cone)?;
        println!(
            "{} minimality: {} tight parity, {} tight nonneg, rank {}, det(AA^T) {}",
            if cert.passes() { "PASS" } else { "FAIL" },
            cert.tight_parity,
            cert.tight_nonneg,
            cert.rank,
            if cert.gram_determinant == cert.expected_determinant { "matches" } else { "differs" }
        );
        for f in &cert.failures {
            println!("  {f}");
        }
        Some(cert)
    } else {
        None
    };
    let failed = certificate.as_ref().is_some_and(|c| !c.passes());
    let output = ConstructionOutput {
        construction: c,
        certificate,
    };
    emit_optional(&a.target.out, &format!("construction_q{q}.json"), &to_json(&output)?)?;
    if failed {
        Err(Failure::Verification(1))
    } else {
        Ok(())
    }
}

fn simulate(a: &SimulateArgs) -> Outcome {
    let q = a.target.q;
    let decoders = match a.decoder {
        DecoderArg::Ml => Decoders::Ml,
        DecoderArg::Lp => Decoders::Lp,
        DecoderArg::Both => Decoders::Both,
    };
    let (code, rays) = if matches!(decoders, Decoders::Ml) {
        let (_, h) = plane_for(q)?;
        let empty = RaySet::from_integer_rays(Vec::new(), &h, 1)?;
        (analyze_code(&h)?, empty)
    } else {
        let (_, code, rays) = code_and_rays(q, &a.source)?;
        (code, rays)
    };
    let reports: Vec<SimReport> = a
        .snr_db
        .iter()
        .map(|&snr| awgn_simulate(&code, &rays, snr, a.trials, a.seed, decoders))
        .collect::<Result<_, _>>()?;
    emit(&a.target.out, &format!("simulation_q{q}.csv"), &simulation_csv(&reports)?)
}
