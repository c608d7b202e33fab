//! `fock`: canonical bases of level-1 Fock spaces, the comparison checks
//! and the Rouquier formulas from the command line.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors, 3 when a resource limit is hit.

mod emit;

use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use fock_core::abacus::{enumerate_weight_space, verify_carbeta};
use fock_core::compare;
use fock_core::fock::a1::llt_canonical_basis;
use fock_core::fock::a2::canonical_basis_a2;
use fock_core::hstrict::{enumerate_bar_weight_space, is_restricted_h};
use fock_core::partition::verify_carlem;
use fock_core::rouquier::{
    ct_formula, is_w_rouquier_bar_core, is_w_rouquier_core, mainrouq_formula, minimal_rouquier_bar_core,
    minimal_rouquier_core, rock_q1, verify_ct, verify_mainrouq,
};
use fock_core::symfunc::{verify_b_strip, verify_dual_pieri, verify_hl_pieri, verify_kostka_properties};
use fock_core::{CanonicalBasisMatrix, Error, FockKind, LaurentPoly, Partition, Report};
use serde::Serialize;

use emit::{render, Format, MatrixEmission};

const DEFAULT_MAX_WEIGHT: usize = 6;
const MAX_SPACE: usize = 20_000;

#[derive(Parser)]
#[command(name = "fock", version, about = "Canonical bases of level-1 Fock spaces in types A(1) and A(2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical basis matrix of one weight space.
    #[command(subcommand)]
    Canon(Canon),
    /// Run one of the executable checks.
    Verify(VerifyArgs),
    /// Evaluate the closed formulas on a Rouquier weight space.
    Rouquier(RouquierArgs),
    /// Re-emit a JSON matrix (a file, or `-` for stdin) in another format.
    Render {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Canon {
    /// Partitions with `m` residues.
    A1 {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// `h`-strict partitions with bar-residues.
    A2 {
        #[arg(long)]
        h: usize,
        #[command(flatten)]
        space: SpaceArgs,
    },
}

#[derive(Args)]
struct SpaceArgs {
    /// Core (or bar-core), comma-separated; `p^k` repeats a part.
    #[arg(long, value_parser = partition_arg, allow_hyphen_values = true)]
    core: Partition,
    #[arg(long)]
    weight: usize,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Pieri,
    Dualpieri,
    Bstrip,
    Kostka,
    Carbeta,
    Carlem,
    Addrun,
    Samecoeff,
    Sasfk,
    Standard,
    Sscbv,
    Samedec,
    Firstmain,
    Rouquier,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    target: Target,
    #[arg(long)]
    max_size: Option<usize>,
    #[arg(long, default_value_t = 4)]
    max_r: usize,
    /// Values of h; several may be given, comma-separated.
    #[arg(long, value_delimiter = ',')]
    h: Vec<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_parser = partition_arg)]
    core: Option<Partition>,
    #[arg(long, visible_alias = "w")]
    weight: Option<usize>,
    #[arg(long, default_value_t = 4)]
    max_l: usize,
    #[arg(long, default_value_t = 3)]
    max_w: usize,
    #[arg(long, default_value_t = 200)]
    instances: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Print the reports as JSON, with every failing instance.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("modulus").required(true).args(["h", "m"])))]
struct RouquierArgs {
    #[arg(long)]
    h: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    w: usize,
    /// A Rouquier core; the smallest one is generated when omitted.
    #[arg(long, value_parser = partition_arg)]
    core: Option<Partition>,
    #[arg(long, value_parser = partition_arg, requires = "beta")]
    alpha: Option<Partition>,
    #[arg(long, value_parser = partition_arg, requires = "alpha")]
    beta: Option<Partition>,
    /// Evaluate at q = 1.
    #[arg(long = "at-q-1")]
    at_q_1: bool,
    /// Only report whether the core is w-Rouquier.
    #[arg(long)]
    check_core: bool,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

fn partition_arg(s: &str) -> std::result::Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn max_weight() -> Result<usize> {
    match std::env::var("FOCK_MAX_WEIGHT") {
        Ok(v) => v.trim().parse().with_context(|| format!("FOCK_MAX_WEIGHT must be a number, got `{v}`")),
        Err(_) => Ok(DEFAULT_MAX_WEIGHT),
    }
}

fn guard_weight(w: usize) -> Result<()> {
    let limit = max_weight()?;
    if w > limit {
        return Err(Error::ResourceLimit(format!("weight {w} exceeds {limit}; set FOCK_MAX_WEIGHT to raise it")).into());
    }
    Ok(())
}

fn guard_space(size: usize) -> Result<()> {
    if size > MAX_SPACE {
        return Err(Error::ResourceLimit(format!("weight space has {size} elements, more than {MAX_SPACE}")).into());
    }
    Ok(())
}

fn space_size(kind: FockKind, core: &Partition, w: usize, modulus: usize) -> Result<usize> {
    guard_weight(w)?;
    let size = match kind {
        FockKind::A1 => enumerate_weight_space(core, w, modulus)?.len(),
        FockKind::A2 => enumerate_bar_weight_space(core, w, modulus)?.len(),
    };
    guard_space(size)?;
    Ok(size)
}

fn run_canon(canon: Canon) -> Result<ExitCode> {
    let (kind, modulus, space) = match canon {
        Canon::A1 { m, space } => (FockKind::A1, m, space),
        Canon::A2 { h, space } => (FockKind::A2, h, space),
    };
    space_size(kind, &space.core, space.weight, modulus)?;
    let matrix = match kind {
        FockKind::A1 => llt_canonical_basis(&space.core, space.weight, modulus)?,
        FockKind::A2 => canonical_basis_a2(&space.core, space.weight, modulus)?,
    };
    print!("{}", render(&matrix, space.format, None)?);
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct JsonReport<'a> {
    name: &'a str,
    passed: bool,
    checked: usize,
    failures: &'a [String],
}

fn hs_or(hs: &[usize], default: &[usize]) -> Vec<usize> {
    if hs.is_empty() {
        default.to_vec()
    } else {
        hs.to_vec()
    }
}

fn single_h(args: &VerifyArgs) -> Result<usize> {
    match args.h.as_slice() {
        [h] => Ok(*h),
        _ => bail!("this target needs exactly one --h"),
    }
}

fn rouquier_reports(args: &VerifyArgs) -> Result<Vec<Report>> {
    let w = args.weight.context("verify rouquier needs --w")?;
    guard_weight(w)?;
    match (args.h.as_slice(), args.m) {
        ([h], None) => {
            let gamma = match &args.core {
                Some(c) => c.clone(),
                None => minimal_rouquier_bar_core(w, *h)?,
            };
            space_size(FockKind::A2, &gamma, w, *h)?;
            Ok(vec![verify_mainrouq(&gamma, w, *h)?])
        }
        ([], Some(m)) => {
            let nu = match &args.core {
                Some(c) => c.clone(),
                None => minimal_rouquier_core(w, m)?,
            };
            space_size(FockKind::A1, &nu, w, m)?;
            Ok(vec![verify_ct(&nu, w, m)?])
        }
        _ => bail!("verify rouquier needs exactly one of --h or --m"),
    }
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode> {
    let reports: Vec<Report> = match args.target {
        Target::Pieri => vec![verify_hl_pieri(args.max_size.unwrap_or(8), args.max_r)],
        Target::Dualpieri => vec![verify_dual_pieri(args.max_size.unwrap_or(8), args.max_r)],
        Target::Bstrip => vec![verify_b_strip(args.max_size.unwrap_or(10))],
        Target::Kostka => vec![verify_kostka_properties(args.max_size.unwrap_or(8))],
        Target::Carbeta => vec![verify_carbeta(args.max_size.unwrap_or(12), args.max_r)],
        Target::Carlem => vec![verify_carlem(args.max_size.unwrap_or(8))],
        Target::Addrun => {
            let hs = hs_or(&args.h, &[3, 5, 7]);
            vec![
                compare::verify_addrun1(&hs, args.instances, args.seed)?,
                compare::verify_addrun2(&hs, args.instances, args.seed)?,
            ]
        }
        Target::Samecoeff => {
            vec![compare::verify_samecoeff(&hs_or(&args.h, &[3, 5, 7]), args.instances, args.seed)?]
        }
        Target::Sasfk => vec![compare::verify_sasfk(&hs_or(&args.h, &[3, 5, 7]), args.instances, args.seed)?],
        Target::Standard => {
            let mut reports = Vec::new();
            for h in hs_or(&args.h, &[3, 5, 7]) {
                reports.push(compare::verify_nicebijec(h, args.max_l)?);
                reports.push(compare::verify_nicecore(h, args.max_l, args.max_w)?);
            }
            reports
        }
        Target::Sscbv => {
            let h = single_h(&args)?;
            let w = args.weight.context("verify sscbv needs --weight")?;
            let core = args.core.clone().context("verify sscbv needs --core")?;
            space_size(FockKind::A2, &core, w, h)?;
            vec![compare::verify_sscbv(h, &core, w)?]
        }
        Target::Samedec | Target::Firstmain => {
            guard_weight(args.max_w)?;
            let size = args.max_size.unwrap_or(8);
            let mut reports = Vec::new();
            for h in hs_or(&args.h, &[5, 7]) {
                reports.push(if args.target == Target::Samedec {
                    compare::verify_samedec(h, args.max_l, args.max_w, size)?
                } else {
                    compare::verify_firstmain(h, args.max_l, args.max_w, size)?
                });
            }
            reports
        }
        Target::Rouquier => rouquier_reports(&args)?,
    };
    if args.json {
        let out: Vec<JsonReport> = reports
            .iter()
            .map(|r| JsonReport { name: &r.name, passed: r.passed(), checked: r.checked, failures: &r.failures })
            .collect();
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        for r in &reports {
            println!("{r}");
        }
    }
    Ok(if reports.iter().all(Report::passed) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// Type and modulus of a Rouquier computation.
#[derive(Clone, Copy)]
enum Setting {
    Bar(usize),
    Plain(usize),
}

impl Setting {
    fn kind(self) -> FockKind {
        match self {
            Setting::Bar(_) => FockKind::A2,
            Setting::Plain(_) => FockKind::A1,
        }
    }

    fn modulus(self) -> usize {
        match self {
            Setting::Bar(h) | Setting::Plain(h) => h,
        }
    }

    fn is_rouquier(self, core: &Partition, w: usize) -> Result<bool> {
        Ok(match self {
            Setting::Bar(h) => is_w_rouquier_bar_core(core, w, h)?,
            Setting::Plain(m) => is_w_rouquier_core(core, w, m)?,
        })
    }

    fn minimal_core(self, w: usize) -> Result<Partition> {
        Ok(match self {
            Setting::Bar(h) => minimal_rouquier_bar_core(w, h)?,
            Setting::Plain(m) => minimal_rouquier_core(w, m)?,
        })
    }

    fn formula(self, row: &Partition, col: &Partition, core: &Partition) -> Result<LaurentPoly> {
        Ok(match self {
            Setting::Bar(h) => mainrouq_formula(row, col, core, h)?,
            Setting::Plain(m) => ct_formula(row, col, core, m)?,
        })
    }

    fn restricted(self, p: &Partition) -> bool {
        match self {
            Setting::Bar(h) => is_restricted_h(p, h),
            Setting::Plain(m) => p.is_restricted(m),
        }
    }
}

fn run_rouquier(args: RouquierArgs) -> Result<ExitCode> {
    let setting = match (args.h, args.m) {
        (Some(h), None) => Setting::Bar(h),
        (None, Some(m)) => Setting::Plain(m),
        _ => bail!("give exactly one of --h or --m"),
    };
    let w = args.w;
    if args.check_core {
        let core = args.core.context("--check-core needs --core")?;
        let yes = setting.is_rouquier(&core, w)?;
        println!("{w}-Rouquier: {}", if yes { "yes" } else { "no" });
        return Ok(if yes { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }
    guard_weight(w)?;
    let core = match args.core {
        Some(c) => c,
        None => setting.minimal_core(w)?,
    };
    if !setting.is_rouquier(&core, w)? {
        return Err(Error::NotRouquier { partition: core.to_string(), w, modulus: setting.modulus() }.into());
    }
    let conjectural = matches!(setting, Setting::Bar(_)) && args.at_q_1;
    if let (Some(alpha), Some(beta)) = (&args.alpha, &args.beta) {
        match setting {
            Setting::Bar(h) if args.at_q_1 => {
                let value = rock_q1(alpha, beta, &core, h)?;
                println!("{value}");
                if !value.abelian_defect {
                    eprintln!("note: weight {w} is not below h={h}");
                }
            }
            _ => {
                let d = setting.formula(alpha, beta, &core)?;
                if args.at_q_1 {
                    println!("{}", d.eval_q1());
                } else {
                    println!("{d}");
                }
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let modulus = setting.modulus();
    space_size(setting.kind(), &core, w, modulus)?;
    let rows = match setting {
        Setting::Bar(h) => enumerate_bar_weight_space(&core, w, h)?,
        Setting::Plain(m) => enumerate_weight_space(&core, w, m)?,
    };
    let cols: Vec<Partition> = rows.iter().filter(|p| setting.restricted(p)).cloned().collect();
    let mut entries = Vec::with_capacity(rows.len());
    for row in &rows {
        let mut line = Vec::with_capacity(cols.len());
        for col in &cols {
            let d = setting.formula(row, col, &core)?;
            line.push(if args.at_q_1 { LaurentPoly::constant(d.eval_q1()) } else { d });
        }
        entries.push(line);
    }
    let matrix = CanonicalBasisMatrix { kind: setting.kind(), modulus, core, weight: w, rows, cols, entries };
    let note = match (args.at_q_1, conjectural) {
        (true, true) => "values at q=1 (CONJECTURAL)",
        (true, false) => "values at q=1",
        _ => "entries from the Rouquier formula",
    };
    print!("{}", render(&matrix, args.format, Some(note))?);
    Ok(ExitCode::SUCCESS)
}

fn run_render(input: &str, format: Format) -> Result<ExitCode> {
    let text = if input == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        std::fs::read_to_string(input).with_context(|| format!("cannot read {input}"))?
    };
    let emission: MatrixEmission = serde_json::from_str(&text).context("not a matrix emission")?;
    let matrix = emission.to_matrix()?;
    print!("{}", render(&matrix, format, emission.note.as_deref())?);
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Canon(canon) => run_canon(canon),
        Command::Verify(args) => run_verify(args),
        Command::Rouquier(args) => run_rouquier(args),
        Command::Render { input, format } => run_render(&input, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let limit = e.chain().any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::ResourceLimit(_))));
            ExitCode::from(if limit { 3 } else { 2 })
        }
    }
}
