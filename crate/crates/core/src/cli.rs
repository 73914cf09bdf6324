//! The `ftc` command line. [`run`] takes the arguments and writers so it can
//! be driven in-process.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::calculus::{self, FtcPair};
use crate::carrier::{Carrier, Element, FiniteAlgebra};
use crate::constructions::DEFAULT_DEGREE_BOUND;
use crate::equivalence::{self, functor_f_unchecked, functor_g_unchecked};
use crate::error::{Error, Result};
use crate::instances::{self, Instance};
use crate::laws::{LawReport, Witness};
use crate::sample::Sampler;
use crate::scalar::Ring;
use crate::zinbiel::{self, ZinbielInstance};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONSTRUCTION: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "ftc", about = "Derivation/integration pairs and Zinbiel algebras, exactly")]
pub struct Cli {
    /// Seed for the random samples (FTC_SEED overrides it).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Random samples per law, on top of the exhaustive small cases.
    #[arg(long, global = true, default_value_t = 500)]
    pub samples: usize,
    /// Highest degree the graded K inverse is solved for.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_BOUND)]
    pub degree_bound: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Shuffle product of two tensor sums, e.g. `shuffle "[0,1]" "[2]"`.
    Shuffle {
        u: String,
        v: String,
        #[arg(long, default_value = "Q")]
        ring: String,
        /// Alphabet size; defaults to one more than the largest letter.
        #[arg(long)]
        basis: Option<usize>,
    },
    /// Augmented mixable shuffle in RB(k[y]/(y^d)); letter i stands for y^i.
    Mixshuffle {
        s: String,
        t: String,
        #[arg(long, default_value = "Q")]
        ring: String,
        #[arg(long, default_value_t = 4)]
        truncation: usize,
    },
    /// Hurwitz product of two series `(a0, a1, ...)`.
    HurwitzMul {
        f: String,
        g: String,
        #[arg(long, default_value = "Q")]
        ring: String,
    },
    /// `X ◁ Y` in a Zinbiel instance (an FTC-pair name means its F-image).
    Zinbiel {
        x: String,
        y: String,
        #[arg(long)]
        instance: String,
    },
    /// Runs the law suite of one instance.
    CheckLaws {
        #[arg(long)]
        instance: String,
    },
    /// Applies F (`ftc-to-zin`) or G (`zin-to-ftc`) and prints the image.
    Convert {
        #[arg(value_enum)]
        direction: Direction,
        #[arg(long)]
        instance: String,
    },
    /// Checks the unit/counit round trips and the laws of the image.
    Roundtrip {
        #[arg(long)]
        instance: String,
    },
    /// Runs every corpus check and compares against the expected verdicts.
    Suite {
        /// How many consecutive seeds to run, starting at --seed.
        #[arg(long, default_value_t = 1)]
        seeds: u64,
    },
    /// Lists the built-in instances.
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    FtcToZin,
    ZinToFtc,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    if let Ok(seed) = std::env::var("FTC_SEED") {
        match seed.trim().parse() {
            Ok(s) => cli.seed = s,
            Err(_) => {
                let _ = writeln!(err, "error: FTC_SEED must be an unsigned integer, got `{seed}`");
                return EXIT_USAGE;
            }
        }
    }
    match execute(&cli, out) {
        Ok(code) => code,
        // A closed pipe (`ftc ... | head`) is not a failure.
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Exit status for an error that stopped a command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. }
        | Error::UnknownInstance(_)
        | Error::InvalidSpec(_)
        | Error::InvalidModulus(_)
        | Error::CarrierMismatch { .. }
        | Error::RingMismatch { .. }
        | Error::LetterOutOfRange { .. }
        | Error::UnitInReduced(_)
        | Error::OutsideSubspace { .. }
        | Error::ZeroDenominator => EXIT_USAGE,
        Error::InvalidIntegration(_)
        | Error::InvalidFtcPair(_)
        | Error::InvalidZinbiel(_)
        | Error::InvalidMorphism(_)
        | Error::InvalidConstructionInput(_)
        | Error::RestrictionEscapes { .. } => EXIT_VIOLATION,
        Error::Io(_) => EXIT_USAGE,
        _ => EXIT_CONSTRUCTION,
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let sampler = Sampler::new(cli.seed, cli.samples);
    let io = Error::Io;
    match &cli.command {
        Command::Shuffle { u, v, ring, basis } => {
            let ring = Ring::parse(ring)?;
            let basis = match basis {
                Some(b) => *b,
                None => alphabet_size(&[u, v])?,
            };
            let c = Carrier::shuffle(ring, basis);
            let r = c.mul(&c.parse(u)?, &c.parse(v)?)?;
            print_element(out, cli.format, &c, &r).map_err(io)?;
        }
        Command::Mixshuffle { s, t, ring, truncation } => {
            let alg = std::sync::Arc::new(FiniteAlgebra::truncated_polynomial(Ring::parse(ring)?, "y", *truncation));
            let c = Carrier::free_rota_baxter(alg);
            let r = c.mul(&c.parse(s)?, &c.parse(t)?)?;
            print_element(out, cli.format, &c, &r).map_err(io)?;
        }
        Command::HurwitzMul { f, g, ring } => {
            let c = Carrier::hurwitz(Carrier::Scalars(Ring::parse(ring)?));
            let r = c.mul(&c.parse(f)?, &c.parse(g)?)?;
            print_element(out, cli.format, &c, &r).map_err(io)?;
        }
        Command::Zinbiel { x, y, instance } => {
            let z = match instances::resolve(instance, cli.degree_bound, &sampler)? {
                Instance::Zinbiel(z) => z,
                Instance::Ftc(pair) => functor_f_unchecked(&pair),
            };
            let c = z.module_carrier().clone();
            let (x, y) = (c.parse(x)?, c.parse(y)?);
            z.carrier.require(&x)?;
            z.carrier.require(&y)?;
            print_element(out, cli.format, &c, &z.zin(&x, &y)?).map_err(io)?;
        }
        Command::CheckLaws { instance } => {
            let reports = match instances::resolve(instance, cli.degree_bound, &sampler)? {
                Instance::Ftc(pair) => calculus::check_all(&pair, &sampler)?,
                Instance::Zinbiel(z) => zinbiel::check_zinbiel(&z, &sampler)?,
            };
            return print_reports(out, cli.format, instance, &reports).map_err(io);
        }
        Command::Convert { direction, instance } => {
            let inst = instances::resolve(instance, cli.degree_bound, &sampler)?;
            return convert(out, cli.format, *direction, inst, &sampler);
        }
        Command::Roundtrip { instance } => {
            let mut reports = Vec::new();
            match instances::resolve(instance, cli.degree_bound, &sampler)? {
                Instance::Ftc(pair) => {
                    reports.push(equivalence::check_roundtrip_ftc(&pair, &sampler)?);
                    let gf = functor_g_unchecked(&functor_f_unchecked(&pair));
                    reports.extend(calculus::check_all(&gf, &sampler)?);
                }
                Instance::Zinbiel(z) => {
                    reports.push(equivalence::check_roundtrip_zin(&z, &sampler)?);
                    let fg = functor_f_unchecked(&functor_g_unchecked(&z));
                    reports.extend(zinbiel::check_zinbiel(&fg, &sampler)?);
                }
            }
            return print_reports(out, cli.format, instance, &reports).map_err(io);
        }
        Command::Suite { seeds } => {
            let report = suite(cli.seed, *seeds, cli.samples, cli.degree_bound)?;
            match cli.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable")),
                Format::Text => write_suite_text(out, &report),
            }
            .map_err(io)?;
            return Ok(if report.summary.mismatched == 0 { EXIT_OK } else { EXIT_VIOLATION });
        }
        Command::List => {
            for name in instances::names() {
                writeln!(out, "{name}").map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn alphabet_size(texts: &[&String]) -> Result<usize> {
    let mut size = 1;
    for t in texts {
        // Parse against a generous alphabet just to find the letters.
        let probe = Carrier::shuffle(Ring::Rationals, usize::MAX);
        if let Element::Tensor(s) = probe.parse(t)? {
            for (w, _) in s.terms() {
                size = size.max(w.letters().iter().max().map_or(0, |m| m + 1));
            }
        }
    }
    Ok(size)
}

fn print_element(out: &mut dyn Write, format: Format, c: &Carrier, x: &Element) -> std::io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{}", c.format(x)),
        Format::Json => writeln!(
            out,
            "{}",
            json!({"schemaVersion": SCHEMA_VERSION, "carrier": c.to_string(), "value": c.format(x)})
        ),
    }
}

fn print_reports(out: &mut dyn Write, format: Format, instance: &str, reports: &[LawReport]) -> std::io::Result<i32> {
    match format {
        Format::Text => {
            for r in reports {
                writeln!(out, "{}", r.summary())?;
            }
        }
        Format::Json => {
            let doc = json!({"schemaVersion": SCHEMA_VERSION, "instance": instance, "reports": reports});
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?;
        }
    }
    Ok(if reports.iter().all(LawReport::holds) { EXIT_OK } else { EXIT_VIOLATION })
}

/// One line per product on the image's basis sample.
fn convert(
    out: &mut dyn Write,
    format: Format,
    direction: Direction,
    inst: Instance,
    sampler: &Sampler,
) -> Result<i32> {
    let cfg = &sampler.config;
    let mut table: Vec<(String, String)> = Vec::new();
    let (name, algebra, module) = match (direction, inst) {
        (Direction::FtcToZin, Instance::Ftc(pair)) => {
            let z = equivalence::functor_f(&pair, sampler)?;
            let c = z.module_carrier();
            let basis = z.carrier.basis_sample(cfg)?;
            for x in basis.iter().take(4) {
                for y in basis.iter().take(4) {
                    table.push((format!("{} ◁ {}", c.format(x), c.format(y)), c.format(&z.zin(x, y)?)));
                }
            }
            (z.name.clone(), z.base.name(), z.carrier.name())
        }
        (Direction::ZinToFtc, Instance::Zinbiel(z)) => {
            let pair = equivalence::functor_g(&z, sampler)?;
            let (a, m) = (pair.algebra_carrier(), pair.module_carrier());
            for x in pair.algebra.basis_sample(cfg)?.iter().take(6) {
                table.push((format!("D{}", a.format(x)), m.format(&pair.d(x)?)));
            }
            for x in pair.module.basis_sample(cfg)?.iter().take(6) {
                table.push((format!("P({})", m.format(x)), a.format(&pair.p(x)?)));
            }
            (pair.name.clone(), pair.algebra.name(), pair.module.name())
        }
        (Direction::FtcToZin, Instance::Zinbiel(z)) => {
            return Err(Error::mismatch("an FTC-pair", format!("Zinbiel instance {}", z.name)))
        }
        (Direction::ZinToFtc, Instance::Ftc(p)) => {
            return Err(Error::mismatch("a Zinbiel instance", format!("FTC-pair {}", p.name)))
        }
    };
    match format {
        Format::Text => {
            writeln!(out, "{name}: {algebra} ⇄ {module}")?;
            for (k, v) in &table {
                writeln!(out, "  {k} = {v}")?;
            }
        }
        Format::Json => {
            let values: Vec<_> = table.iter().map(|(k, v)| json!({"expr": k, "value": v})).collect();
            let doc = json!({
                "schemaVersion": SCHEMA_VERSION,
                "image": name,
                "algebra": algebra,
                "module": module,
                "values": values,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteEntry {
    pub instance: String,
    pub law: String,
    pub seed: u64,
    pub expected: &'static str,
    pub status: String,
    pub matched: bool,
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub schema_version: u32,
    pub seeds: Vec<u64>,
    pub samples: usize,
    pub entries: Vec<SuiteEntry>,
    pub summary: SuiteSummary,
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "holds-on-samples"
    } else {
        "violated"
    }
}

fn entry(instance: &str, report: &LawReport, expected: bool) -> SuiteEntry {
    SuiteEntry {
        instance: instance.to_string(),
        law: report.law.clone(),
        seed: report.seed,
        expected: verdict(expected),
        status: report.status.to_string(),
        matched: report.holds() == expected,
        samples: report.samples,
        witness: report.witness.clone(),
    }
}

fn ftc_suite(name: &str, pair: &FtcPair, e: &instances::FtcEntry, sampler: &Sampler) -> Result<Vec<SuiteEntry>> {
    let mut out = Vec::new();
    for (report, &expected) in calculus::check_all(pair, sampler)?.iter().zip(&e.expected) {
        out.push(entry(name, report, expected));
    }
    out.push(entry(name, &calculus::check_ftc2_equivalence(pair, sampler)?, true));
    if e.is_ftc_pair() {
        out.push(entry(name, &calculus::check_action(pair, sampler)?, true));
        out.push(entry(name, &calculus::check_kerd_linearity(pair, sampler)?, true));
        out.push(entry(name, &calculus::check_augmented(pair, sampler)?, e.augmented));
        out.push(entry(name, &equivalence::check_augmented_correspondence(pair, sampler)?.report, true));
        out.push(entry(name, &equivalence::check_roundtrip_ftc(pair, sampler)?, true));
        let gf = functor_g_unchecked(&functor_f_unchecked(pair));
        for report in calculus::check_all(&gf, sampler)? {
            let mut r = report;
            r.law = format!("G(F).{}", r.law);
            out.push(entry(name, &r, true));
        }
    }
    Ok(out)
}

fn zin_suite(name: &str, z: &ZinbielInstance, e: &instances::ZinEntry, sampler: &Sampler) -> Result<Vec<SuiteEntry>> {
    let mut out = Vec::new();
    for (report, &expected) in zinbiel::check_zinbiel(z, sampler)?.iter().zip(&e.expected) {
        out.push(entry(name, report, expected));
    }
    if e.is_zinbiel() {
        out.push(entry(name, &equivalence::check_roundtrip_zin(z, sampler)?, true));
    }
    Ok(out)
}

/// Runs the whole corpus for `seeds` consecutive seeds. Entries come out in
/// corpus order whatever the thread count.
pub fn suite(seed: u64, seeds: u64, samples: usize, degree_bound: usize) -> Result<SuiteReport> {
    let mut entries = Vec::new();
    let seed_list: Vec<u64> = (seed..seed.saturating_add(seeds)).collect();
    for &s in &seed_list {
        let sampler = Sampler::new(s, samples);
        for e in instances::FTC_CORPUS.iter().chain(instances::MUTANT_CORPUS) {
            let pair = instances::ftc_instance(e.name, degree_bound, &sampler)?;
            entries.extend(ftc_suite(e.name, &pair, e, &sampler)?);
        }
        for e in instances::ZIN_CORPUS {
            let z = instances::zin_instance(e.name, degree_bound, &sampler)?;
            entries.extend(zin_suite(e.name, &z, e, &sampler)?);
        }
    }
    let matched = entries.iter().filter(|e| e.matched).count();
    Ok(SuiteReport {
        schema_version: SCHEMA_VERSION,
        seeds: seed_list,
        samples,
        summary: SuiteSummary {
            total: entries.len(),
            matched,
            mismatched: entries.len() - matched,
        },
        entries,
    })
}

fn write_suite_text(out: &mut dyn Write, report: &SuiteReport) -> std::io::Result<()> {
    for e in &report.entries {
        let mark = if e.matched { "ok  " } else { "FAIL" };
        write!(out, "{mark} seed {} {} {}: {} (expected {})", e.seed, e.instance, e.law, e.status, e.expected)?;
        if let Some(w) = &e.witness {
            let inputs: Vec<String> = w.inputs.iter().map(|v| format!("{} = {}", v.name, v.value)).collect();
            write!(out, " at {} [{}]: {} != {}", inputs.join(", "), w.clause, w.lhs, w.rhs)?;
        }
        writeln!(out)?;
    }
    writeln!(
        out,
        "{} entries, {} matched, {} mismatched",
        report.summary.total, report.summary.matched, report.summary.mismatched
    )
}
