use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kvertex::checks::{run_all, run_suite, Suite, SuiteConfig, Verdict};
use kvertex::conifold::{compose_conifold, g_inv_kernel, v_kernel, z_conifold, Which};
use kvertex::fock::{matrix_element, Kernel};
use kvertex::localization::{fixed_point_ed, fixed_point_elambda};
use kvertex::partitions::Partition;
use kvertex::scalars::text::qseries_to_json;
use kvertex::symfunc::json::kernel_to_json;
use kvertex::symfunc::SymFunc2;
use kvertex::vertex::{gluing, gluing_inv, one_leg, stab, two_leg, Variant};
use kvertex::Error;

#[derive(Parser)]
#[command(
    name = "kvertex",
    version,
    about = "Exact expansions of the K-theoretic 2-leg vertex"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a named formula as a two-alphabet series.
    Expand(ExpandArgs),
    /// Matrix element <s_lambda (x) s_mu, K>.
    Pair(PairArgs),
    /// Fixed-point data for E_d or E_lambda.
    Localize(LocalizeArgs),
    /// Glue two capped vertices into the resolved conifold.
    Conifold(ConifoldArgs),
    /// Run consistency suites and print one verdict per line.
    Check(CheckArgs),
}

#[derive(Args, Clone, Copy)]
struct Orders {
    #[arg(long = "q-order", default_value_t = 4)]
    q_order: u32,
    #[arg(long = "Q-order", default_value_t = 2)]
    big_q_order: u32,
    #[arg(long, default_value_t = 4)]
    deg: u32,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Out {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Formula {
    OneLeg,
    TwoLeg,
    Gluing,
    GluingInv,
    Stab,
    ConifoldV1,
    ConifoldV2,
    ConifoldGInv,
    Conifold,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum VariantArg {
    AsPrinted,
    LemmaForm,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::AsPrinted => Variant::AsPrinted,
            VariantArg::LemmaForm => Variant::LemmaForm,
        }
    }
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long, value_enum)]
    formula: Formula,
    #[arg(long, value_enum, default_value = "as-printed")]
    variant: VariantArg,
    #[arg(long)]
    lambda: Option<Partition>,
    #[command(flatten)]
    orders: Orders,
    #[arg(long, value_enum, default_value = "text")]
    out: Out,
}

#[derive(Args)]
struct PairArgs {
    #[arg(long, value_enum)]
    formula: Formula,
    #[arg(long, value_enum, default_value = "as-printed")]
    variant: VariantArg,
    #[arg(long, default_value = "")]
    lambda: Partition,
    #[arg(long, default_value = "")]
    mu: Partition,
    #[command(flatten)]
    orders: Orders,
    #[arg(long, value_enum, default_value = "text")]
    out: Out,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Family {
    #[value(name = "Ed")]
    Ed,
    #[value(name = "Elam")]
    Elam,
}

#[derive(Args)]
struct LocalizeArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    d: Option<i64>,
    #[arg(long)]
    lambda: Option<Partition>,
    #[arg(long, value_enum, default_value = "text")]
    out: Out,
}

#[derive(Args)]
struct ConifoldArgs {
    #[command(flatten)]
    orders: Orders,
    /// Also run the theorem check and print its verdict.
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value = "text")]
    out: Out,
}

#[derive(Args)]
struct CheckArgs {
    /// A suite name or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long = "q-order")]
    q_order: Option<u32>,
    #[arg(long = "Q-order")]
    big_q_order: Option<u32>,
    #[arg(long)]
    deg: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    out: Out,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_)
            | Error::Parse(_)
            | Error::SizeMismatch(..)
            | Error::CellOutsideDiagram { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn json_string<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn write_body(w: &mut impl Write, body: &SymFunc2, out: Out) -> io::Result<()> {
    match out {
        Out::Text => writeln!(w, "{body}"),
        Out::Json => writeln!(w, "{}", json_string(&kernel_to_json(body))),
    }
}

fn formula_kernel(
    formula: Formula,
    variant: Variant,
    lambda: Option<&Partition>,
    o: Orders,
) -> Result<Kernel, Failure> {
    let (nq, nbig, deg) = (o.q_order, o.big_q_order, o.deg);
    let k = match formula {
        Formula::OneLeg => one_leg(nq, deg)?.kernel(),
        Formula::TwoLeg => two_leg(nq, deg, variant)?.kernel(),
        Formula::Gluing => gluing(nq, deg)?.kernel(),
        Formula::GluingInv => gluing_inv(nq, deg)?.kernel(),
        Formula::Stab => {
            let l = lambda.ok_or_else(|| Failure::Usage("--formula stab needs --lambda".into()))?;
            Kernel::new(stab(l, deg.max(l.size()), nq)?.into_left(0))
        }
        Formula::ConifoldV1 => v_kernel(Which::First, nq, nbig, deg)?,
        Formula::ConifoldV2 => v_kernel(Which::Second, nq, nbig, deg)?,
        Formula::ConifoldGInv => g_inv_kernel(nq, nbig, deg)?,
        Formula::Conifold => compose_conifold(nq, nbig, deg)?.kernel(),
    };
    Ok(k)
}

fn expand(a: &ExpandArgs, w: &mut impl Write) -> Outcome {
    let k = formula_kernel(a.formula, a.variant.into(), a.lambda.as_ref(), a.orders)?;
    write_body(w, &k.body, a.out)?;
    Ok(true)
}

fn pair(a: &PairArgs, w: &mut impl Write) -> Outcome {
    if a.formula == Formula::Stab {
        return Err(Failure::Usage("stab is a single-alphabet function; use expand".into()));
    }
    let mut o = a.orders;
    o.deg = o.deg.max(a.lambda.size()).max(a.mu.size());
    let k = formula_kernel(a.formula, a.variant.into(), None, o)?;
    if a.mu.size() > k.body.bounds().1 {
        return Err(Failure::Usage(format!(
            "--mu {} is outside the incoming alphabet of this formula",
            a.mu
        )));
    }
    let m = matrix_element(&k, &a.lambda, &a.mu);
    match a.out {
        Out::Text => writeln!(w, "{m}")?,
        Out::Json => writeln!(w, "{}", json_string(&qseries_to_json(&m)))?,
    }
    Ok(true)
}

fn localize(a: &LocalizeArgs, w: &mut impl Write) -> Outcome {
    let fp = match a.family {
        Family::Ed => fixed_point_ed(a.d.ok_or_else(|| Failure::Usage("--family Ed needs --d".into()))?)?,
        Family::Elam => fixed_point_elambda(
            a.lambda
                .as_ref()
                .ok_or_else(|| Failure::Usage("--family Elam needs --lambda".into()))?,
        ),
    };
    match a.out {
        Out::Text => writeln!(w, "{fp}")?,
        Out::Json => writeln!(w, "{}", fp.to_json())?,
    }
    Ok(true)
}

fn conifold(a: &ConifoldArgs, w: &mut impl Write) -> Outcome {
    let o = a.orders;
    let glued = compose_conifold(o.q_order, o.big_q_order, o.deg)?;
    let z = z_conifold(o.q_order, o.big_q_order)?;
    let seed = glued.body.scale(&z.inverse()?).plethystic_log()?;
    write_body(w, &seed, a.out)?;
    if !a.check {
        return Ok(true);
    }
    let vs = run_suite(
        Suite::Conifold,
        &SuiteConfig {
            nq: Some(o.q_order),
            nbig: Some(o.big_q_order),
            deg: Some(o.deg),
        },
    )?;
    write_verdicts(w, &vs, a.out)
}

fn write_verdicts(w: &mut impl Write, vs: &[Verdict], out: Out) -> Outcome {
    for v in vs {
        match out {
            Out::Text => writeln!(w, "{v}")?,
            Out::Json => writeln!(w, "{}", v.to_json_line())?,
        }
    }
    Ok(vs.iter().all(|v| v.passed))
}

fn check(a: &CheckArgs, w: &mut impl Write) -> Outcome {
    let cfg = SuiteConfig {
        nq: a.q_order,
        nbig: a.big_q_order,
        deg: a.deg,
    };
    let vs = if a.suite == "all" {
        run_all(&cfg)?
    } else {
        run_suite(a.suite.parse::<Suite>()?, &cfg)?
    };
    write_verdicts(w, &vs, a.out)
}

fn init_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("KVERTEX_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| Failure::Usage(format!("KVERTEX_THREADS must be a positive integer, got '{v}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Compute(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut w = BufWriter::new(stdout.lock());
    let result = init_threads().and_then(|_| match &cli.command {
        Command::Expand(a) => expand(a, &mut w),
        Command::Pair(a) => pair(a, &mut w),
        Command::Localize(a) => localize(a, &mut w),
        Command::Conifold(a) => conifold(a, &mut w),
        Command::Check(a) => check(a, &mut w),
    });
    let flushed = w.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
        (Err(Failure::Usage(m)), _) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        (Err(Failure::Compute(m)), _) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
