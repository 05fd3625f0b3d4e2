//! The `recring` command line: `seq`, `expand`, `transform`, `check`.
//!
//! Exit codes: 0 on success or a passing check, 1 when a check fails, 2 on
//! usage and parse errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::chains::is_regular_chain;
use crate::error::Error;
use crate::groebner::is_groebner;
use crate::poly::{text, CoefficientRing, Polynomial};
use crate::quotient::{make_ring, required_vars, RingFamily, RingSpec};
use crate::sequences::{
    binomial_transform_prefix, central_binomial_oracle, central_binomial_ring, generate_range,
    gould_mod2_ring, gould_oracle, gould_signed_ring, oracle_term, transform_ring, SequenceId,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

// terms computed per parallel batch before they are written out
const STREAM_CHUNK: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqArg {
    Cbc,
    Gould,
}

impl From<SeqArg> for SequenceId {
    fn from(s: SeqArg) -> Self {
        match s {
            SeqArg::Cbc => SequenceId::CentralBinomial,
            SeqArg::Gould => SequenceId::Gould,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqMethod {
    Ring,
    Oracle,
    Mod2,
    Signed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TransformMethod {
    Ring,
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "K")]
    K,
    #[value(name = "Kmod")]
    Kmod,
    #[value(name = "Kprime")]
    Kprime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Groebner,
    Chain,
}

#[derive(Debug, Parser)]
#[command(name = "recring", version, about = "Recursive polynomial quotient rings and the sequences they generate")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,
    /// Custom ring specification (JSON) for `expand` and `check`.
    #[arg(long, global = true, value_name = "PATH")]
    spec: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print terms of a sequence.
    Seq {
        #[arg(value_enum)]
        seq: SeqArg,
        #[arg(long, default_value_t = 0)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, default_value_t = SeqMethod::Ring)]
        method: SeqMethod,
    },
    /// Print the normal form of base^n and its coefficient sum.
    Expand {
        #[arg(long, value_enum, ignore_case = true)]
        family: Option<FamilyArg>,
        /// Modulus for the Kmod family.
        #[arg(long)]
        m: Option<BigInt>,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "1+x1", allow_hyphen_values = true)]
        base: String,
    },
    /// Print terms of the t-th binomial transform of a sequence.
    Transform {
        #[arg(long, value_enum)]
        seq: SeqArg,
        #[arg(long, allow_negative_numbers = true)]
        t: i64,
        #[arg(long, default_value_t = 0)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, default_value_t = TransformMethod::Ring)]
        method: TransformMethod,
    },
    /// Verify the Groebner-basis or regular-chain property of a generator set.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[arg(long, value_enum, ignore_case = true)]
        family: Option<FamilyArg>,
        #[arg(long)]
        m: Option<BigInt>,
        #[arg(long)]
        vars: Option<u32>,
        /// JSON array of polynomials used as the generator set.
        #[arg(long, value_name = "PATH")]
        generators: Option<PathBuf>,
    },
}

struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<std::io::Error> for Usage {
    fn from(e: std::io::Error) -> Self {
        Usage(format!("i/o error: {e}"))
    }
}

type CmdResult = std::result::Result<i32, Usage>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Seq { seq, from, to, method } => cmd_seq(*seq, *from, *to, *method, cli.format, out),
        Command::Expand { family, m, n, base } => {
            cmd_expand(*family, m.as_ref(), cli.spec.as_deref(), *n, base, cli.format, out, err)
        }
        Command::Transform { seq, t, from, to, method } => {
            cmd_transform(*seq, *t, *from, *to, *method, cli.format, out)
        }
        Command::Check { kind, family, m, vars, generators } => cmd_check(
            *kind,
            *family,
            m.as_ref(),
            *vars,
            cli.spec.as_deref(),
            generators.as_deref(),
            cli.format,
            out,
            err,
        ),
    }
}

fn check_range(from: u64, to: u64) -> std::result::Result<(), Usage> {
    if from > to {
        return Err(Usage(format!("--from ({from}) must not exceed --to ({to})")));
    }
    Ok(())
}

/// Writes `(index, value)` rows as they arrive.
struct TermWriter<'a> {
    out: &'a mut dyn Write,
    format: OutputFormat,
    first: bool,
}

impl<'a> TermWriter<'a> {
    fn new(out: &'a mut dyn Write, format: OutputFormat) -> std::io::Result<Self> {
        match format {
            OutputFormat::Json => write!(out, "[")?,
            OutputFormat::Csv => writeln!(out, "index,value")?,
            OutputFormat::Text => {}
        }
        Ok(TermWriter { out, format, first: true })
    }

    fn push(&mut self, n: u64, value: &BigInt) -> std::io::Result<()> {
        match self.format {
            OutputFormat::Text => {
                if !self.first {
                    write!(self.out, " ")?;
                }
                write!(self.out, "{value}")?;
            }
            OutputFormat::Json => {
                if !self.first {
                    write!(self.out, ",")?;
                }
                write!(self.out, "{}", serde_json::json!({"n": n, "value": value.to_string()}))?;
            }
            OutputFormat::Csv => writeln!(self.out, "{n},{value}")?,
        }
        self.first = false;
        self.out.flush()
    }

    fn finish(self) -> std::io::Result<()> {
        match self.format {
            OutputFormat::Text => writeln!(self.out),
            OutputFormat::Json => writeln!(self.out, "]"),
            OutputFormat::Csv => Ok(()),
        }
    }
}

fn stream<F>(from: u64, to: u64, format: OutputFormat, out: &mut dyn Write, f: F) -> CmdResult
where
    F: Fn(u64) -> BigInt + Sync + Send,
{
    let mut w = TermWriter::new(out, format)?;
    let mut lo = from;
    loop {
        let hi = to.min(lo.saturating_add(STREAM_CHUNK - 1));
        for (k, v) in generate_range(lo, hi, &f).iter().enumerate() {
            w.push(lo + k as u64, v)?;
        }
        if hi == to {
            break;
        }
        lo = hi + 1;
    }
    w.finish()?;
    Ok(EXIT_OK)
}

fn cmd_seq(seq: SeqArg, from: u64, to: u64, method: SeqMethod, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    check_range(from, to)?;
    let f: fn(u64) -> BigInt = match (seq, method) {
        (SeqArg::Cbc, SeqMethod::Ring) => central_binomial_ring,
        (SeqArg::Cbc, SeqMethod::Oracle) => central_binomial_oracle,
        (SeqArg::Gould, SeqMethod::Ring | SeqMethod::Mod2) => gould_mod2_ring,
        (SeqArg::Gould, SeqMethod::Signed) => gould_signed_ring,
        (SeqArg::Gould, SeqMethod::Oracle) => gould_oracle,
        (SeqArg::Cbc, m) => {
            return Err(Usage(format!("method {m:?} applies only to the gould sequence").to_lowercase()))
        }
    };
    stream(from, to, format, out, f)
}

fn cmd_transform(
    seq: SeqArg,
    t: i64,
    from: u64,
    to: u64,
    method: TransformMethod,
    format: OutputFormat,
    out: &mut dyn Write,
) -> CmdResult {
    check_range(from, to)?;
    let seq: SequenceId = seq.into();
    match method {
        TransformMethod::Ring => stream(from, to, format, out, |n| transform_ring(seq, t, n)),
        TransformMethod::Direct => {
            let upto = usize::try_from(to).map_err(|_| Usage("--to is too large".into()))?;
            let terms: Vec<BigInt> = (0..=to).map(|k| oracle_term(seq, k)).collect();
            let values = binomial_transform_prefix(&terms, t, upto)?;
            let mut w = TermWriter::new(out, format)?;
            for n in from..=to {
                w.push(n, &values[n as usize])?;
            }
            w.finish()?;
            Ok(EXIT_OK)
        }
    }
}

fn family_of(family: FamilyArg, m: Option<&BigInt>) -> std::result::Result<RingFamily, Usage> {
    match (family, m) {
        (FamilyArg::K, None) => Ok(RingFamily::K),
        (FamilyArg::Kprime, None) => Ok(RingFamily::KPrime),
        (FamilyArg::Kmod, Some(m)) => Ok(RingFamily::KMod(m.clone())),
        (FamilyArg::Kmod, None) => Err(Usage("--m is required for family Kmod".into())),
        (_, Some(_)) => Err(Usage("--m is only valid with family Kmod".into())),
    }
}

fn read_json(path: &Path) -> std::result::Result<serde_json::Value, Usage> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&raw).map_err(|e| Usage(format!("invalid JSON in {}: {e}", path.display())))
}

fn load_spec(path: &Path) -> std::result::Result<RingSpec, Usage> {
    Ok(RingSpec::from_json(&read_json(path)?)?)
}

#[allow(clippy::too_many_arguments)]
fn cmd_expand(
    family: Option<FamilyArg>,
    m: Option<&BigInt>,
    spec: Option<&Path>,
    n: u64,
    base: &str,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let (ring, label) = match (family, spec) {
        (Some(_), Some(_)) => return Err(Usage("give either --family or --spec, not both".into())),
        (None, None) => return Err(Usage("one of --family or --spec is required".into())),
        (Some(f), None) => {
            let fam = family_of(f, m)?;
            (make_ring(&fam, required_vars(n.max(1))?)?, fam.name().to_string())
        }
        (None, Some(path)) => {
            let ring = load_spec(path)?;
            match is_groebner(&ring.ideal_generators()) {
                Ok(r) if r.is_groebner => {}
                Ok(_) => writeln!(
                    err,
                    "warning: the generators are not a Groebner basis; the normal form may depend on rewrite order"
                )?,
                Err(e) => writeln!(err, "warning: Groebner check unavailable ({e})")?,
            }
            (ring, "custom".to_string())
        }
    };
    let base = text::parse(base, ring.coeff_ring().clone())?;
    let power = ring.pow(&base, n)?;
    let sum = power.evaluate_all_ones();
    match format {
        OutputFormat::Text => writeln!(out, "{power} | sum={sum}")?,
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "family": label,
                "vars": ring.num_vars(),
                "n": n,
                "base": base.to_string(),
                "text": power.to_string(),
                "poly": text::to_json(&power),
                "sum": sum.to_string(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        OutputFormat::Csv => {
            writeln!(out, "monomial,coefficient")?;
            let mut terms: Vec<_> = power.terms().iter().collect();
            terms.sort_by(|a, b| a.1.display_cmp(&b.1));
            for (c, mono) in terms {
                writeln!(out, "{mono},{c}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn load_generators(
    path: &Path,
    m: Option<&BigInt>,
) -> std::result::Result<Vec<Polynomial>, Usage> {
    let ring = match m {
        Some(m) => CoefficientRing::modulo(m.clone())?,
        None => CoefficientRing::Integers,
    };
    let doc = read_json(path)?;
    let items = doc
        .as_array()
        .ok_or_else(|| Usage("generator file must hold a JSON array of polynomials".into()))?;
    items
        .iter()
        .map(|v| text::from_json(v, ring.clone()).map_err(Usage::from))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    kind: CheckKind,
    family: Option<FamilyArg>,
    m: Option<&BigInt>,
    vars: Option<u32>,
    spec: Option<&Path>,
    generators: Option<&Path>,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let sources = family.is_some() as u8 + spec.is_some() as u8 + generators.is_some() as u8;
    if sources != 1 {
        return Err(Usage("give exactly one of --family, --spec or --generators".into()));
    }
    let (gens, num_vars) = if let Some(f) = family {
        let vars = vars.ok_or_else(|| Usage("--vars is required with --family".into()))?;
        if vars == 0 {
            return Err(Usage("--vars must be at least 1".into()));
        }
        (make_ring(&family_of(f, m)?, vars)?.ideal_generators(), vars)
    } else if let Some(path) = spec {
        let ring = load_spec(path)?;
        let n = ring.num_vars();
        (ring.ideal_generators(), n)
    } else {
        let gens = load_generators(generators.expect("one source"), m)?;
        let detected = gens.iter().filter_map(Polynomial::max_var).max().unwrap_or(0);
        let n = vars.unwrap_or(detected);
        if n < detected {
            return Err(Usage(format!("--vars {n} is smaller than the largest variable x{detected}")));
        }
        (gens, n)
    };

    let (passed, report) = match kind {
        CheckKind::Groebner => {
            let r = is_groebner(&gens)?;
            (r.is_groebner, r.to_json())
        }
        CheckKind::Chain => match is_regular_chain(&gens, num_vars) {
            Ok(r) => (r.is_regular_chain, r.to_json()),
            Err(e @ Error::NotGroebner(..)) => {
                writeln!(err, "chain check failed: {e}")?;
                return Ok(EXIT_CHECK_FAILED);
            }
            Err(e) => return Err(e.into()),
        },
    };
    match format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"))?,
        OutputFormat::Text => writeln!(out, "{report}")?,
        OutputFormat::Csv => {
            writeln!(out, "key,value")?;
            if let Some(obj) = report.as_object() {
                for (k, v) in obj {
                    writeln!(out, "{k},{}", csv_field(v))?;
                }
            }
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn csv_field(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Null => String::new(),
        other => format!("\"{}\"", other.to_string().replace('"', "\"\"")),
    }
    .replace('\n', " ")
}
