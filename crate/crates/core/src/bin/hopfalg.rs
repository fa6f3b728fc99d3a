//! Command-line front end: load algebras from bit-exact JSON or presets,
//! run verifications and computations, emit human-readable and JSON reports.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use hopfalg::constructions::{preset, FiniteGroup, Preset};
use hopfalg::indicators::{chi2_decompose, indicator_report, trace_antipode_report, nu_m};
use hopfalg::io::{
    dump_hopf, BlockTable, CheckOut, IndicatorRow, InputDocument, ReportDocument, Sq2Row,
};
use hopfalg::scalar::Scalar;
use hopfalg::wedderburn::decompose;
use hopfalg::{Error, HopfData, Q, Qi, DEFAULT_SEED};

#[derive(Parser)]
#[command(
    name = "hopfalg",
    about = "Exact computations with semisimple Hopf algebras given by structure constants"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the full Hopf-axiom suite (associativity through S^2 = id).
    Verify(Common),
    /// Wedderburn decomposition: block degrees and character table.
    Decompose(Common),
    /// Frobenius-Schur indicator table, Tr S, and the trace identities.
    Indicators(IndicatorsArgs),
    /// The trace-of-antipode identities.
    TraceS(Common),
    /// chi^(2) decomposition against the character rows, per character.
    Sq2(Common),
    /// Group indicator sum: theta_m = sum nu_m(chi) chi, pointwise.
    Eq1(Eq1Args),
    /// Print a preset (or re-parsed input) as an input JSON document.
    Dump(Common),
}

#[derive(Args)]
struct Common {
    /// Path to an input JSON document.
    input: Option<PathBuf>,
    /// Preset name (c2, c3, c4, s3, d4, q8, kac16); substitutes for <input>.
    #[arg(long)]
    preset: Option<String>,
    /// Write the machine-readable report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Seed for the randomized splitting search (overrides HOPF_SEED).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct IndicatorsArgs {
    #[command(flatten)]
    common: Common,
    /// Additional indicator orders nu_m to tabulate (repeatable).
    #[arg(long = "m")]
    m: Vec<usize>,
}

#[derive(Args)]
struct Eq1Args {
    #[command(flatten)]
    common: Common,
    /// Sweedler-power order m.
    #[arg(long = "m", default_value = "2")]
    m: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli.cmd) {
        Ok(all_pass) => {
            if all_pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    };
    ExitCode::from(code)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::NonSplitOverField { .. }
        | Error::NotSemisimple
        | Error::NotSemisimpleHopf => 3,
        Error::Input(_) | Error::ScalarParse(_, _) | Error::UnknownPreset(_) => 2,
        _ => 1,
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Error> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("HOPF_SEED") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| Error::Input(format!("HOPF_SEED is not a u64: {v:?}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

/// Where the algebra comes from: a preset (with its natural field) or a
/// document whose `field` key picks the scalar type.
enum Source {
    Preset(Preset),
    Doc(InputDocument),
}

impl Source {
    fn field_name(&self) -> &str {
        match self {
            // smallest field over which the preset splits
            Source::Preset(p) => match p {
                Preset::C2 | Preset::S3 | Preset::D4 => "Q",
                _ => "Qi",
            },
            Source::Doc(d) => &d.field,
        }
    }

    fn name(&self) -> String {
        match self {
            Source::Preset(p) => p.name().to_string(),
            Source::Doc(d) => d.name.clone(),
        }
    }

    fn group(&self) -> Option<FiniteGroup> {
        match self {
            Source::Preset(p) if p.is_group_algebra() => Some(p.group()),
            _ => None,
        }
    }

    fn hopf<T: hopfalg::poly::RootField>(&self) -> Result<HopfData<T>, Error> {
        match self {
            Source::Preset(p) => preset::<T>(*p),
            Source::Doc(d) => d.to_hopf::<T>(),
        }
    }
}

fn load_source(common: &Common) -> Result<Source, Error> {
    match (&common.preset, &common.input) {
        (Some(name), None) => Ok(Source::Preset(Preset::from_str(name)?)),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
            let doc: InputDocument = serde_json::from_str(&text).map_err(|e| {
                Error::Input(format!(
                    "malformed JSON in {} at line {}, column {}: {e}",
                    path.display(),
                    e.line(),
                    e.column()
                ))
            })?;
            Ok(Source::Doc(doc))
        }
        (Some(_), Some(_)) => Err(Error::Input(
            "give either an input path or --preset, not both".into(),
        )),
        (None, None) => Err(Error::Input(
            "no input: give an input path or --preset <name>".into(),
        )),
    }
}

fn run(cmd: &Cmd) -> Result<bool, Error> {
    let (common, label) = match cmd {
        Cmd::Verify(c) => (c, "verify"),
        Cmd::Decompose(c) => (c, "decompose"),
        Cmd::Indicators(a) => (&a.common, "indicators"),
        Cmd::TraceS(c) => (c, "trace-s"),
        Cmd::Sq2(c) => (c, "sq2"),
        Cmd::Eq1(a) => (&a.common, "eq1"),
        Cmd::Dump(c) => (c, "dump"),
    };
    let source = load_source(common)?;
    let seed = resolve_seed(common.seed)?;
    match source.field_name() {
        "Q" => run_typed::<Q>(cmd, &source, common, label, seed),
        "Qi" => run_typed::<Qi>(cmd, &source, common, label, seed),
        other => Err(Error::Input(format!(
            "unknown field {other:?}: expected \"Q\" or \"Qi\""
        ))),
    }
}

fn run_typed<T: hopfalg::poly::RootField>(
    cmd: &Cmd,
    source: &Source,
    common: &Common,
    label: &str,
    seed: u64,
) -> Result<bool, Error> {
    let started = Instant::now();
    let h = source.hopf::<T>()?;
    let mut report = ReportDocument {
        name: source.name(),
        field: T::FIELD_NAME.to_string(),
        command: label.to_string(),
        seed,
        checks: Vec::new(),
        blocks: None,
        indicators: None,
        trace_s: None,
        sq2: None,
        elapsed_ms: 0,
    };

    match cmd {
        Cmd::Dump(_) => {
            let doc = dump_hopf(&source.name(), &h);
            let text = serde_json::to_string_pretty(&doc)
                .map_err(|e| Error::Input(format!("serialize failed: {e}")))?;
            println!("{text}");
            if let Some(path) = &common.json {
                fs::write(path, text)
                    .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
            }
            return Ok(true);
        }
        Cmd::Verify(_) => {
            let v = h.verify();
            push_items(&mut report.checks, &v.items);
        }
        Cmd::Decompose(_) => {
            let d = decompose(&h.algebra, seed)?;
            report.blocks = Some(block_table(&d));
            report.checks.push(CheckOut {
                name: "Wedderburn decomposition computed".into(),
                pass: true,
                failure: None,
            });
            println!("blocks of {} over {}:", source.name(), T::FIELD_NAME);
            for (i, deg) in d.degrees.iter().enumerate() {
                let row: Vec<String> = (0..h.dim())
                    .map(|j| d.characters[(i, j)].render())
                    .collect();
                println!("  #{i}: M_{deg}  chi = [{}]", row.join(", "));
            }
        }
        Cmd::Indicators(args) => {
            let d = decompose(&h.algebra, seed)?;
            let group = source.group();
            let rep = indicator_report(&h, &d, &args.m, group.as_ref())?;
            report.blocks = Some(block_table(&d));
            report.trace_s = Some(rep.trace_s.render());
            report.indicators = Some(
                rep.records
                    .iter()
                    .map(|r| IndicatorRow {
                        index: r.index,
                        degree: r.degree,
                        nu2: r.nu2.render(),
                        self_dual: r.self_dual,
                        nu_m: r.nu_m.iter().map(|(m, v)| (*m, v.render())).collect(),
                    })
                    .collect(),
            );
            println!("indicators of {} over {}:", source.name(), T::FIELD_NAME);
            for r in &rep.records {
                let extras: Vec<String> = r
                    .nu_m
                    .iter()
                    .map(|(m, v)| format!("nu_{m} = {}", v.render()))
                    .collect();
                println!(
                    "  chi_{} (deg {}): nu_2 = {}  self-dual: {}{}{}",
                    r.index,
                    r.degree,
                    r.nu2.render(),
                    r.self_dual,
                    if extras.is_empty() { "" } else { "  " },
                    extras.join("  ")
                );
            }
            println!("  Tr S = {}", rep.trace_s.render());
            push_items(&mut report.checks, &rep.identity_checks);
        }
        Cmd::TraceS(_) => {
            let d = decompose(&h.algebra, seed)?;
            let nu2 = nu_m(&h, &d, 2)?;
            let group = source.group();
            let (trace_s, rep) = trace_antipode_report(&h, &d, &nu2, group.as_ref());
            report.trace_s = Some(trace_s.render());
            println!("Tr S = {}", trace_s.render());
            push_items(&mut report.checks, &rep.items);
        }
        Cmd::Sq2(_) => {
            let d = decompose(&h.algebra, seed)?;
            let mut rows = Vec::new();
            println!("chi^(2) decompositions for {}:", source.name());
            for i in 0..d.d {
                let dec = chi2_decompose(&h, &d, i);
                let status = if dec.in_span() { "in_span" } else { "not_in_span" };
                println!(
                    "  chi_{i} (deg {}): {status}{}",
                    d.degrees[i],
                    match &dec.coefficients {
                        Some(cs) => format!(
                            "  coefficients = [{}]{}",
                            cs.iter().map(Scalar::render).collect::<Vec<_>>().join(", "),
                            if dec.integral_flag { "  (integral)" } else { "" }
                        ),
                        None => String::new(),
                    }
                );
                rows.push(Sq2Row {
                    index: i,
                    degree: d.degrees[i],
                    status: status.to_string(),
                    coefficients: dec
                        .coefficients
                        .as_ref()
                        .map(|cs| cs.iter().map(Scalar::render).collect()),
                    integral: dec.integral_flag,
                });
            }
            report.sq2 = Some(rows);
            report.checks.push(CheckOut {
                name: "chi^(2) decomposition computed".into(),
                pass: true,
                failure: None,
            });
        }
        Cmd::Eq1(args) => {
            let group = source.group().ok_or_else(|| {
                Error::Input("eq1 needs a group-algebra preset (c2, c3, c4, s3, d4, q8)".into())
            })?;
            let d = decompose(&h.algebra, seed)?;
            let rep = hopfalg::indicators::verify_eq1(&group, &h, &d, args.m)?;
            push_items(&mut report.checks, &rep.items);
        }
    }

    report.elapsed_ms = started.elapsed().as_millis();
    let all_pass = report.checks.iter().all(|c| c.pass);
    for c in &report.checks {
        match &c.failure {
            None => println!("  ok   {}", c.name),
            Some(why) => println!("  FAIL {} — {}", c.name, why),
        }
    }
    if let Some(path) = &common.json {
        let text = serde_json::to_string_pretty(&report)
            .map_err(|e| Error::Input(format!("serialize failed: {e}")))?;
        fs::write(path, text)
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(all_pass)
}

fn push_items(out: &mut Vec<CheckOut>, items: &[hopfalg::hopf::CheckItem]) {
    for it in items {
        out.push(CheckOut {
            name: it.name.to_string(),
            pass: it.pass(),
            failure: it.failure.clone(),
        });
    }
}

fn block_table<T: Scalar>(d: &hopfalg::wedderburn::BlockDecomposition<T>) -> BlockTable {
    let n = d.characters.cols;
    BlockTable {
        degrees: d.degrees.clone(),
        characters: (0..d.d)
            .map(|i| (0..n).map(|j| d.characters[(i, j)].render()).collect())
            .collect(),
    }
}
