use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use ribbontangle::eval::{builtin, Builtin, EvalError, Functor, JonesModule};
use ribbontangle::format::{read_json, ring_tag};
use ribbontangle::hopf::{
    check_derived_antipode_identities, check_hopf, group_algebra, FiniteGroup, HopfData,
};
use ribbontangle::oracle::{count_meridian_homs, kauffman_bracket};
use ribbontangle::report::CheckReport;
use ribbontangle::ribbon::{certify_ribbon, RibbonDatum};
use ribbontangle::ring::{LaurentHalf, Rational, Ring, RingTag};
use ribbontangle::tangle::{braid_closure, parse_tangle, BraidWord, TangleWord};
use ribbontangle::yd::{adjoint_yd, check_yd, YDData};

#[derive(Parser)]
#[command(
    name = "ribbontangle",
    version,
    about = "Certify ribbon data and evaluate framed tangles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check axioms, one PASS/FAIL line per identity.
    Check(CheckArgs),
    /// Evaluate a tangle or the closure of a braid.
    Eval(EvalArgs),
    /// Reference values computed without linear algebra.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Print built-in data as JSON.
    #[command(subcommand)]
    Export(ExportCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Hopf,
    Yd,
    Ribbon,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(value_enum)]
    target: Target,
    /// JSON file.
    #[arg(required_unless_present = "builtin")]
    file: Option<PathBuf>,
    /// Built-in datum: jones, s3-transpositions, s3-all, z3-nontrivial, or <group>-<class>.
    #[arg(long, conflicts_with = "file")]
    builtin: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Braid word such as "1 -2 1 -2"; the closure is evaluated.
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// Tangle text, or @file.
    #[arg(long)]
    tangle: Option<String>,
    /// File with one braid word per line.
    #[arg(long)]
    batch: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    /// Built-in name or ribbon datum JSON file.
    #[arg(long)]
    datum: String,
    #[command(flatten)]
    input: Input,
    /// Number of braid strands; defaults to one more than the largest generator.
    #[arg(long)]
    strands: Option<usize>,
    /// Multiply by the inverse twist once per unit of writhe.
    #[arg(long)]
    normalize: bool,
    /// Print the full matrix even for closed diagrams.
    #[arg(long)]
    raw_matrix: bool,
    /// Skip certification.
    #[arg(long = "unsafe")]
    unchecked: bool,
    /// Worker threads for --batch.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Kauffman bracket state sum, converted to v and writhe-corrected.
    Kauffman {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
        /// Print the bracket in A instead.
        #[arg(long)]
        bracket: bool,
    },
    /// Count colorings of the closure by a conjugation-closed subset.
    CountHoms {
        #[arg(long)]
        group: String,
        #[arg(long)]
        class: String,
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ExportCommand {
    /// Group algebra.
    Hopf {
        #[arg(long)]
        group: String,
    },
    /// Adjoint module on a conjugation-closed subset.
    Yd {
        #[arg(long)]
        group: String,
        #[arg(long)]
        class: String,
        /// Value of the "hopf" field, relative to the output file.
        #[arg(long)]
        hopf_file: String,
    },
    /// Ribbon datum of a built-in.
    Ribbon {
        #[arg(long)]
        builtin: String,
    },
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

macro_rules! outln {
    ($($t:tt)*) => {
        emit(&format!("{}\n", format_args!($($t)*)))
    };
}

/// Exit 2 with a message.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Run = Result<bool, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(a) => check(a),
        Command::Eval(a) => eval(a),
        Command::Oracle(c) => oracle(c),
        Command::Export(c) => export(c),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn print_report(r: &CheckReport) -> bool {
    emit(&r.to_string());
    r.all_passed()
}

fn prefixed(prefix: &str, r: CheckReport) -> CheckReport {
    let mut out = CheckReport::new();
    for mut e in r.entries {
        e.name = format!("{prefix}{}", e.name);
        out.push(e);
    }
    out
}

fn group_part(name: &str) -> &str {
    name.split_once('-').map_or(name, |(g, _)| g)
}

fn hopf_report<R: Ring>(h: &HopfData<R>) -> CheckReport {
    let mut r = check_hopf(h);
    r.extend(check_derived_antipode_identities(h));
    r
}

fn check(a: CheckArgs) -> Run {
    if let Some(name) = a.builtin {
        return check_builtin(a.target, &name);
    }
    let path = a.file.expect("required by clap");
    let doc = read_json(&path)?;
    let report = match (a.target, ring_tag(&doc)?) {
        (Target::Hopf, RingTag::Rational) => hopf_report(&HopfData::<Rational>::from_json(&doc)?),
        (Target::Hopf, RingTag::LaurentHalf) => {
            hopf_report(&HopfData::<LaurentHalf>::from_json(&doc)?)
        }
        (Target::Yd, RingTag::Rational) => check_yd(&YDData::<Rational>::load(&path)?),
        (Target::Yd, RingTag::LaurentHalf) => check_yd(&YDData::<LaurentHalf>::load(&path)?),
        (Target::Ribbon, RingTag::Rational) => {
            certify_ribbon(&RibbonDatum::<Rational>::from_json(&doc)?)
        }
        (Target::Ribbon, RingTag::LaurentHalf) => {
            certify_ribbon(&RibbonDatum::<LaurentHalf>::from_json(&doc)?)
        }
    };
    Ok(print_report(&report))
}

fn check_builtin(target: Target, name: &str) -> Run {
    let report = match (target, builtin(name)?) {
        (Target::Hopf, Builtin::Jones(_)) => {
            return Err(InputError(
                "jones has no finite Hopf algebra; try `check yd --builtin jones`".into(),
            ))
        }
        (Target::Hopf, Builtin::Group(_)) => {
            hopf_report(&group_algebra(&FiniteGroup::by_name(group_part(name))?))
        }
        (Target::Yd, Builtin::Jones(d)) => JonesModule::new().check(&d.pivotal.gamma(), &d),
        (Target::Yd, Builtin::Group(g)) => {
            let mut r = check_yd(&g.yd);
            match g.derive_dual_yd() {
                Ok(dual) => r.extend(prefixed("X*: ", check_yd(&dual))),
                Err(e) => outln!("{e}"),
            }
            r
        }
        (Target::Ribbon, Builtin::Jones(d)) => {
            let mut r = certify_ribbon(&d);
            r.extend(JonesModule::new().check(&d.pivotal.gamma(), &d));
            r
        }
        (Target::Ribbon, Builtin::Group(g)) => {
            let mut r = certify_ribbon(&g.datum());
            r.extend(g.check_ribbon_conditions());
            r
        }
    };
    Ok(print_report(&report))
}

enum Datum {
    Rational(RibbonDatum<Rational>),
    Laurent(RibbonDatum<LaurentHalf>),
}

fn load_datum(name: &str) -> Result<Datum, InputError> {
    let path = Path::new(name);
    if name.ends_with(".json") || path.is_file() {
        let doc = read_json(path)?;
        return Ok(match ring_tag(&doc)? {
            RingTag::Rational => Datum::Rational(RibbonDatum::from_json(&doc)?),
            RingTag::LaurentHalf => Datum::Laurent(RibbonDatum::from_json(&doc)?),
        });
    }
    Ok(match builtin(name)? {
        Builtin::Jones(d) => Datum::Laurent(d),
        Builtin::Group(g) => Datum::Rational(g.datum()),
    })
}

fn read_arg(text: &str) -> Result<String, InputError> {
    match text.strip_prefix('@') {
        Some(file) => fs::read_to_string(file).map_err(|e| InputError(format!("{file}: {e}"))),
        None => Ok(text.to_string()),
    }
}

fn eval(a: EvalArgs) -> Run {
    match load_datum(&a.datum)? {
        Datum::Rational(d) => eval_with(d, &a),
        Datum::Laurent(d) => eval_with(d, &a),
    }
}

/// `Ok(Err(_))` marks a semantic failure.
fn value<R: Ring>(
    f: &Functor<R>,
    t: &TangleWord,
    a: &EvalArgs,
) -> Result<Result<String, String>, InputError> {
    if a.raw_matrix || !t.is_closed() {
        if a.normalize {
            return Err(InputError("--normalize needs a closed diagram".into()));
        }
        return Ok(Ok(f.evaluate(t).to_string().trim_end().to_string()));
    }
    match f.framed_invariant(t, a.normalize) {
        Ok(v) => Ok(Ok(v.to_string())),
        Err(e @ (EvalError::TwistNotUnit(_) | EvalError::Ribbon(_))) => Ok(Err(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn eval_with<R: Ring>(d: RibbonDatum<R>, a: &EvalArgs) -> Run {
    let f = if a.unchecked {
        Functor::new_unchecked(d)
    } else {
        match Functor::new(d) {
            Ok(f) => f,
            Err(EvalError::Uncertified(report)) => {
                outln!("datum failed certification");
                for e in report.failures() {
                    outln!("{e}");
                }
                return Ok(false);
            }
            Err(e) => return Err(e.into()),
        }
    };
    let closure = |text: &str| -> Result<TangleWord, InputError> {
        Ok(braid_closure(&BraidWord::parse(text, a.strands)?))
    };
    if let Some(path) = &a.input.batch {
        let text =
            fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        let words: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(a.jobs.max(1))
            .build()?;
        let results: Vec<_> = pool.install(|| {
            words
                .par_iter()
                .map(|w| closure(w).and_then(|t| value(&f, &t, a)))
                .collect()
        });
        let mut ok = true;
        for (w, r) in words.iter().zip(results) {
            match r? {
                Ok(v) => outln!("{w}\t{v}"),
                Err(m) => {
                    outln!("{w}\terror: {m}");
                    ok = false;
                }
            }
        }
        return Ok(ok);
    }
    let t = match (&a.input.braid, &a.input.tangle) {
        (Some(b), _) => closure(&read_arg(b)?)?,
        (_, Some(t)) => parse_tangle(&read_arg(t)?)?,
        _ => unreachable!("clap requires one input"),
    };
    match value(&f, &t, a)? {
        Ok(v) => {
            outln!("{v}");
            Ok(true)
        }
        Err(m) => {
            outln!("{m}");
            Ok(false)
        }
    }
}

fn oracle(c: OracleCommand) -> Run {
    match c {
        OracleCommand::Kauffman {
            braid,
            strands,
            bracket,
        } => {
            let v = kauffman_bracket(&BraidWord::parse(&read_arg(&braid)?, strands)?)?;
            if bracket {
                outln!("{}", v.bracket_text());
            } else {
                outln!("{}", v.value);
            }
        }
        OracleCommand::CountHoms {
            group,
            class,
            braid,
            strands,
        } => {
            let g = FiniteGroup::by_name(&group)?;
            let subset = g.named_class(&class)?;
            let b = BraidWord::parse(&read_arg(&braid)?, strands)?;
            outln!("{}", count_meridian_homs(&g, &subset, &b)?);
        }
    }
    Ok(true)
}

fn export(c: ExportCommand) -> Run {
    let doc = match c {
        ExportCommand::Hopf { group } => group_algebra(&FiniteGroup::by_name(&group)?).to_json(),
        ExportCommand::Yd {
            group,
            class,
            hopf_file,
        } => {
            let g = FiniteGroup::by_name(&group)?;
            let subset = g.named_class(&class)?;
            let yd = adjoint_yd(&g, group_algebra(&g).into(), &subset)?;
            yd.to_json(&hopf_file)
        }
        ExportCommand::Ribbon { builtin: name } => match builtin(&name)? {
            Builtin::Jones(d) => d.to_json(),
            Builtin::Group(g) => g.datum().to_json(),
        },
    };
    outln!("{}", render(&doc));
    Ok(true)
}

/// One line per top-level field, one line per entry of a coefficient list.
fn render(doc: &serde_json::Value) -> String {
    let serde_json::Value::Object(fields) = doc else {
        return doc.to_string();
    };
    let body: Vec<String> = fields
        .iter()
        .map(|(k, v)| {
            let key = serde_json::Value::from(k.as_str());
            match v {
                serde_json::Value::Array(rows)
                    if rows.iter().all(|r| r.is_array()) && !rows.is_empty() =>
                {
                    let rows: Vec<String> = rows.iter().map(|r| format!("    {r}")).collect();
                    format!("  {key}: [\n{}\n  ]", rows.join(",\n"))
                }
                _ => format!("  {key}: {v}"),
            }
        })
        .collect();
    format!("{{\n{}\n}}", body.join(",\n"))
}
