//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad input or I/O,
//! 3 precision ran out.

pub mod export;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eisenstein::literal::parse_point;
use crate::eisenstein::Valuation;
use crate::error::{Error, Result};
use crate::moufang::{
    build_class_table, ch_check, loop_from, loop_report, nucleus, verify_cml,
    verify_inverse_is_unit_product, verify_quasigroup, witness, ChMode, ClassId, ClassTable,
    LoopTable, TableConfig, WitnessReport,
};
use crate::surface::{
    check_eckhardt_swaps, chord, derive_seed, enumerate_classes, lift_representative, random_lift,
    Family, LambdaParams, Point, CLASS_MODULUS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

const MIN_PRECISION: u32 = 6;
const UNIT_SAMPLES: usize = 10;
const ECKHARDT_SAMPLES: usize = 500;

#[derive(Debug, Parser)]
#[command(
    name = "cubic-cml",
    version,
    about = "Point classes of T0³+T1³+T2³+θT3³ = 0 modulo 𝔭³ and their Moufang loop"
)]
struct Cli {
    /// Working precision in 𝔭-adic digits.
    #[arg(long, global = true, default_value_t = 12)]
    precision: u32,
    /// Master seed for random lifts and sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Representative pairs per sampled cell in the admissibility check.
    #[arg(long, global = true, default_value_t = 20)]
    lift_samples: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Quasigroup,
    Cml,
    Admissibility,
    Witness,
    Ch,
    Eckhardt,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the canonical point tuples modulo 𝔭ⁿ, n = 1, 2, 3.
    Enumerate {
        #[arg(long = "mod")]
        modulus: u32,
    },
    /// Third intersection of the line through two points, and its class.
    Compose {
        #[arg(long = "p", allow_hyphen_values = true)]
        p: String,
        #[arg(long = "q", allow_hyphen_values = true)]
        q: String,
    },
    /// Lift a class label to a point at the working precision.
    Lift {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        exp: u8,
        /// Three balanced digits, e.g. `1,0,-1`.
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        /// Add random higher digits to the free coordinates.
        #[arg(long)]
        random: bool,
    },
    /// Build the class and loop tables and write them to a file.
    Table {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run verification suites and print a loop report.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Use a previously exported JSON table instead of building one.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, default_value_t = 500)]
        admissibility_cells: usize,
        #[arg(long, default_value_t = 1000)]
        ch_samples: usize,
        /// Check every unordered triple in the CH suite (slow).
        #[arg(long)]
        ch_exhaustive: bool,
    },
    /// Both association orders of the standard non-associative triple.
    Witness {
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Elements associating with everything.
    Nucleus {
        #[arg(long)]
        table: Option<PathBuf>,
    },
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::PrecisionExhausted { .. } => EXIT_PRECISION,
            Error::AdmissibilityViolation { .. } => EXIT_VERIFY,
            _ => EXIT_INPUT,
        };
        Failure(code, e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Parse `argv` (including the program name), run, and return the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    if cli.precision < MIN_PRECISION {
        return Err(Failure(
            EXIT_INPUT,
            format!("--precision must be at least {MIN_PRECISION}"),
        ));
    }
    match &cli.command {
        Command::Enumerate { modulus } => enumerate(*modulus, out),
        Command::Compose { p, q } => compose(p, q, out),
        Command::Lift {
            family,
            exp,
            params,
            random,
        } => lift(cli, *family, *exp, params, *random, out),
        Command::Table { out: path, format } => table(cli, path, *format, out),
        Command::Verify {
            suite,
            table,
            admissibility_cells,
            ch_samples,
            ch_exhaustive,
        } => {
            let ch = if *ch_exhaustive {
                ChMode::Exhaustive
            } else {
                ChMode::Sampled {
                    count: *ch_samples,
                    seed: derive_seed(cli.seed, &[0xC4]),
                }
            };
            verify(cli, *suite, table.as_deref(), *admissibility_cells, ch, out)
        }
        Command::Witness { table } => {
            let (t, l) = tables(cli, table.as_deref(), 0)?;
            let w = witness(&t, &l, WitnessReport::standard_triple());
            print_witness(&w, out)?;
            Ok(if w.is_violation() {
                EXIT_OK
            } else {
                EXIT_VERIFY
            })
        }
        Command::Nucleus { table } => {
            let (_, l) = tables(cli, table.as_deref(), 0)?;
            let n = nucleus(&l);
            let ids: Vec<String> = n.iter().map(|c| c.to_string()).collect();
            say(out, format_args!("size {}", n.len()))?;
            say(out, format_args!("ids  {}", ids.join(" ")))?;
            for c in &n {
                say(out, format_args!("  {:>3}  {}", c, c.canonical()))?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn say(out: &mut dyn Write, args: std::fmt::Arguments<'_>) -> CliResult<()> {
    writeln!(out, "{args}").map_err(|e| Failure(EXIT_INPUT, e.to_string()))
}

fn enumerate(modulus: u32, out: &mut dyn Write) -> CliResult<i32> {
    for form in enumerate_classes(modulus)? {
        say(out, format_args!("{form}"))?;
    }
    Ok(EXIT_OK)
}

/// An input point: exact if it lies on the surface, otherwise known only to
/// the precision that Hensel's lemma guarantees for a nearby surface point.
fn surface_point(s: &str) -> Result<Point<BigInt>> {
    let p = Point::new(parse_point(s)?);
    match p.eval_form().valuation() {
        Valuation::Finite(v) if v >= CLASS_MODULUS + 2 => Ok(p.with_precision(v - 2)),
        Valuation::Finite(v) => Err(Error::NotOnSurface(v)),
        _ => Ok(p),
    }
}

fn compose(p: &str, q: &str, out: &mut dyn Write) -> CliResult<i32> {
    let (p, q) = (surface_point(p)?, surface_point(q)?);
    let (r, trace) = chord(&p, &q)?;
    let form = r.normalize(CLASS_MODULUS)?;
    say(out, format_args!("{r}"))?;
    say(out, format_args!("canonical {form}"))?;
    if let Some(c) = ClassId::of(&form) {
        say(out, format_args!("class     {c} ({})", c.params()))?;
    }
    say(out, format_args!("A         {}", trace.a))?;
    say(out, format_args!("B         {}", trace.b))?;
    match trace.margin {
        Some(m) => say(out, format_args!("margin    {m}"))?,
        None => say(out, format_args!("margin    exact"))?,
    }
    Ok(EXIT_OK)
}

fn parse_digits(s: &str) -> Result<[i8; 3]> {
    let digits: Vec<i8> = s
        .split(',')
        .map(|d| {
            d.trim()
                .parse::<i8>()
                .map_err(|_| Error::Parse(format!("bad digit {d:?}")))
        })
        .collect::<Result<_>>()?;
    digits
        .try_into()
        .map_err(|v: Vec<i8>| Error::Parse(format!("expected 3 digits, got {}", v.len())))
}

fn lift(
    cli: &Cli,
    family: Family,
    exp: u8,
    params: &str,
    random: bool,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let lp = LambdaParams::new(family, exp, parse_digits(params)?)?;
    let p: Point<BigInt> = if random {
        random_lift(&lp, cli.precision, cli.seed)?
    } else {
        lift_representative(&lp, cli.precision)?
    };
    say(out, format_args!("{p}"))?;
    say(out, format_args!("precision {}", cli.precision))?;
    say(out, format_args!("class     {} ({lp})", lp.index()))?;
    say(
        out,
        format_args!("canonical {}", p.normalize(CLASS_MODULUS)?),
    )?;
    Ok(EXIT_OK)
}

fn table_config(cli: &Cli, admissibility_cells: usize) -> TableConfig {
    TableConfig {
        precision: cli.precision,
        lift_samples: cli.lift_samples,
        admissibility_cells,
        seed: cli.seed,
    }
}

fn tables(
    cli: &Cli,
    from: Option<&Path>,
    admissibility_cells: usize,
) -> CliResult<(ClassTable, LoopTable)> {
    match from {
        Some(path) => {
            let f = File::open(path)
                .map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))?;
            Ok(export::read_json(BufReader::new(f))?)
        }
        None => {
            let t = build_class_table(&table_config(cli, admissibility_cells))?;
            let l = loop_from(&t, ClassId::u0())?;
            Ok((t, l))
        }
    }
}

fn table(cli: &Cli, path: &Path, format: Format, out: &mut dyn Write) -> CliResult<i32> {
    let t = build_class_table(&table_config(
        cli,
        TableConfig::default().admissibility_cells,
    ))?;
    let l = loop_from(&t, ClassId::u0())?;
    let f =
        File::create(path).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    let mut w = BufWriter::new(f);
    match format {
        Format::Json => export::write_json(&t, &l, &mut w)?,
        Format::Csv => export::write_csv(&t, &l, &mut w)?,
    }
    w.flush().map_err(|e| Failure(EXIT_INPUT, e.to_string()))?;
    let a = t.admissibility();
    say(out, format_args!("wrote {}", path.display()))?;
    say(
        out,
        format_args!(
            "admissibility {} cells, {} pairs, {} failed",
            a.cells, a.pairs, a.failed
        ),
    )?;
    Ok(EXIT_OK)
}

fn print_witness(w: &WitnessReport, out: &mut dyn Write) -> CliResult<()> {
    let [x, y, z] = w.triple;
    say(
        out,
        format_args!("unit      {} {}", w.unit, w.unit.canonical()),
    )?;
    for (name, c) in [("X", x), ("Y", y), ("Z", z)] {
        say(out, format_args!("{name}         {c} {}", c.canonical()))?;
    }
    say(
        out,
        format_args!("(XY)∘Z    {} {}", w.left_circ, w.left_circ.canonical()),
    )?;
    say(
        out,
        format_args!("X∘(YZ)    {} {}", w.right_circ, w.right_circ.canonical()),
    )?;
    say(
        out,
        format_args!("(XY)Z     {} {}", w.left, w.left.canonical()),
    )?;
    say(
        out,
        format_args!("X(YZ)     {} {}", w.right, w.right.canonical()),
    )?;
    let verdict = if w.is_violation() {
        "non-associative"
    } else {
        "associative"
    };
    say(out, format_args!("{verdict}"))
}

fn verify(
    cli: &Cli,
    suite: Suite,
    from: Option<&Path>,
    admissibility_cells: usize,
    ch: ChMode,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let needs_admissibility = matches!(suite, Suite::All | Suite::Admissibility) && from.is_none();
    let cells = if needs_admissibility {
        admissibility_cells
    } else {
        0
    };
    let (t, l) = match tables(cli, from, cells) {
        Err(Failure(EXIT_VERIFY, msg)) => {
            say(out, format_args!("admissibility FAILED: {msg}"))?;
            return Ok(EXIT_VERIFY);
        }
        r => r?,
    };
    let run = |s: Suite| suite == Suite::All || suite == s;
    let mut ok = true;

    if run(Suite::Quasigroup) {
        let r = verify_quasigroup(&t);
        let diagonal = ClassId::all().find(|&s| t.get(s, s) != s);
        ok &= r.passed() && diagonal.is_none();
        say(
            out,
            format_args!("quasigroup {}", verdict(r.passed() && diagonal.is_none())),
        )?;
        write!(out, "{r}").map_err(|e| Failure(EXIT_INPUT, e.to_string()))?;
        match diagonal {
            None => say(out, format_args!("  {:<28} ok", "s∘s = s"))?,
            Some(s) => say(out, format_args!("  {:<28} FAILED at ({s})", "s∘s = s"))?,
        }
    }
    if run(Suite::Cml) {
        let r = verify_cml(&l);
        let inv = verify_inverse_is_unit_product(&t, &l);
        ok &= r.passed() && inv.passed();
        say(
            out,
            format_args!(
                "cml (unit {}) {}",
                l.unit(),
                verdict(r.passed() && inv.passed())
            ),
        )?;
        write!(out, "{r}").map_err(|e| Failure(EXIT_INPUT, e.to_string()))?;
        say(
            out,
            format_args!("  {:<28} {}", inv.name, verdict(inv.passed())),
        )?;
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cli.seed, &[0x0u64, 0x1]));
        let mut units = Vec::new();
        while units.len() < UNIT_SAMPLES {
            let u = ClassId::new(rng.gen_range(0..crate::moufang::CLASS_COUNT)).expect("in range");
            if u != l.unit() && !units.contains(&u) {
                units.push(u);
            }
        }
        for u in units {
            let alt = loop_from(&t, u)?;
            let passed = verify_cml(&alt).passed();
            ok &= passed;
            say(
                out,
                format_args!("  {:<28} {}", format!("unit {u}"), verdict(passed)),
            )?;
        }
    }
    if run(Suite::Admissibility) {
        let a = t.admissibility();
        let passed = a.failed == 0;
        ok &= passed;
        say(
            out,
            format_args!(
                "admissibility {} ({} cells, {} pairs)",
                verdict(passed),
                a.cells,
                a.pairs
            ),
        )?;
    }
    if run(Suite::Witness) {
        let w = witness(&t, &l, WitnessReport::standard_triple());
        ok &= w.is_violation();
        say(out, format_args!("witness {}", verdict(w.is_violation())))?;
        print_witness(&w, out)?;
        let fourth =
            |c: ClassId| crate::eisenstein::literal::format_digits(&c.canonical().coords()[3]);
        say(
            out,
            format_args!(
                "fourth coordinates {} vs {}",
                fourth(w.left_circ),
                fourth(w.right_circ)
            ),
        )?;
    }
    if run(Suite::Ch) {
        let triples = ch.triples();
        let r = ch_check(&t, &triples);
        ok &= r.passed();
        say(
            out,
            format_args!(
                "ch {} ({} triples, largest closure {}, {} failures)",
                verdict(r.passed()),
                r.checked,
                r.largest_closure,
                r.failures.len()
            ),
        )?;
    }
    if run(Suite::Eckhardt) {
        let r = check_eckhardt_swaps(ECKHARDT_SAMPLES, cli.precision, cli.seed)?;
        ok &= r.passed();
        say(
            out,
            format_args!(
                "eckhardt {} ({} points, {} failures)",
                verdict(r.passed()),
                r.checked,
                r.failures.len()
            ),
        )?;
    }
    if suite == Suite::All {
        say(out, format_args!("{}", loop_report(&t, &l)))?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY })
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "ok"
    } else {
        "FAILED"
    }
}
