//! `fibcomp` command-line front end.
//!
//! Exit status: 0 on success, 1 on a domain or verification failure, 2 on a
//! usage or parse error.

use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use fibcomp::{
    check_identity, conjugate, decode, encode, enumerate, enumerate_range, reverse,
    verify_bijection, Annotation, BijectionMap, ClassSpec, Composition, CutJoinSeq, Format,
    IdentityConfig, IdentityId, Origin, RenderSpec, Shading, TaggedSource, VerifyConfig,
};

const DEFAULT_IDENTITY_NMAX: u32 = IdentityConfig::DEFAULT_FORMULA_MAX;

#[derive(Parser)]
#[command(
    name = "fibcomp",
    version,
    about = "Restricted integer compositions, cut/join codec and Fibonacci bijections",
    after_help = "Compositions are written as comma-separated parts (`3,1,1`); the empty \
                  composition is `-`. Cut/join words are strings of `J` and `C`.\n\n\
                  Environment:\n  FIBCOMP_MAX_N          materialization bound for `verify` (default 20)\n  \
                  FIBCOMP_DEFAULT_NMAX   n_max for `identity` when omitted (default 30)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the class compositions of n in canonical (lexicographic) order.
    Enumerate {
        #[arg(value_parser = parse_class)]
        class: ClassSpec,
        n: u32,
        /// Stop after this many lines.
        #[arg(long)]
        limit: Option<u64>,
        /// Only ranks in `a..b` (half-open, 0-based).
        #[arg(long, value_parser = parse_rank_range)]
        rank_range: Option<(BigUint, BigUint)>,
    },
    /// Print the number of class compositions of n.
    Count {
        #[arg(value_parser = parse_class)]
        class: ClassSpec,
        n: u32,
    },
    /// Encode, decode, conjugate or reverse. Reads stdin lines when INPUT is omitted.
    Codec {
        op: CodecOp,
        input: Option<String>,
        /// Board length for `decode`; required to spell the empty word.
        #[arg(long)]
        board: Option<u32>,
    },
    /// Apply one of the bijections forward or backward.
    ///
    /// fwd takes `TAG COMPOSITION`, bwd takes `COMPOSITION`. With the
    /// composition omitted, one composition per stdin line is mapped.
    Map {
        #[arg(value_parser = parse_map)]
        name: BijectionMap,
        direction: Direction,
        args: Vec<String>,
        #[arg(long)]
        n: u32,
    },
    /// Exhaustively check a bijection for every valid n up to N_MAX.
    Verify {
        target: MapTarget,
        n_max: Option<u32>,
        #[arg(long, env = "FIBCOMP_MAX_N", default_value_t = VerifyConfig::DEFAULT_BOUND)]
        bound: u32,
    },
    /// Tabulate an identity for every n up to N_MAX.
    Identity {
        target: IdentityTarget,
        #[arg(env = "FIBCOMP_DEFAULT_NMAX", default_value_t = DEFAULT_IDENTITY_NMAX)]
        n_max: u32,
    },
    /// Draw the tiling of a composition.
    Render {
        #[arg(value_parser = parse_composition)]
        composition: Composition,
        #[command(flatten)]
        format: FormatArgs,
        #[arg(long, default_value = "none")]
        shade: ShadeArg,
        #[arg(long, default_value = "none")]
        annotate: AnnotateArg,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct FormatArgs {
    #[arg(long)]
    ascii: bool,
    #[arg(long)]
    svg: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum CodecOp {
    Encode,
    Decode,
    Conjugate,
    Reverse,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Fwd,
    Bwd,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapTarget {
    Prop1,
    Prop2,
    Prop3,
    Thm4,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityTarget {
    Eq1,
    Eq2,
    Eq3,
    Eq4,
    Pow2,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShadeArg {
    None,
    EvenGray,
}

#[derive(Clone, Copy, ValueEnum)]
enum AnnotateArg {
    None,
    Cutjoin,
    Lengths,
}

fn parse_class(s: &str) -> Result<ClassSpec, String> {
    s.parse().map_err(|e: fibcomp::ParseError| e.to_string())
}

fn parse_map(s: &str) -> Result<BijectionMap, String> {
    s.parse().map_err(|e: fibcomp::ParseError| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: fibcomp::ParseError| e.to_string())
}

fn parse_rank_range(s: &str) -> Result<(BigUint, BigUint), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected `a..b`, got `{s}`"))?;
    let lo: BigUint = lo.parse().map_err(|_| format!("bad rank `{lo}`"))?;
    let hi: BigUint = hi.parse().map_err(|_| format!("bad rank `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty or reversed range `{s}`"));
    }
    Ok((lo, hi))
}

/// A failed command: message for stderr and the exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<fibcomp::Error> for Failure {
    fn from(e: fibcomp::Error) -> Self {
        match e {
            fibcomp::Error::Parse(p) => Self::usage(p.to_string()),
            other => Self::domain(other.to_string()),
        }
    }
}

impl From<fibcomp::ParseError> for Failure {
    fn from(e: fibcomp::ParseError) -> Self {
        Self::usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::domain(format!("i/o error: {e}"))
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match result {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(1),
        Err(failure) => {
            if !failure.message.is_empty() {
                eprintln!("fibcomp: {}", failure.message);
            }
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> CmdResult {
    match command {
        Command::Enumerate {
            class,
            n,
            limit,
            rank_range,
        } => cmd_enumerate(class, n, limit, rank_range, out),
        Command::Count { class, n } => {
            writeln!(out, "{}", fibcomp::count(class, n))?;
            Ok(())
        }
        Command::Codec { op, input, board } => cmd_codec(op, input, board, out),
        Command::Map {
            name,
            direction,
            args,
            n,
        } => cmd_map(name, direction, &args, n, out),
        Command::Verify {
            target,
            n_max,
            bound,
        } => cmd_verify(target, n_max.unwrap_or(bound), bound, out),
        Command::Identity { target, n_max } => cmd_identity(target, n_max, out),
        Command::Render {
            composition,
            format,
            shade,
            annotate,
        } => {
            let spec = RenderSpec {
                format: if format.svg {
                    Format::Svg
                } else {
                    Format::Ascii
                },
                shading: match shade {
                    ShadeArg::None => Shading::None,
                    ShadeArg::EvenGray => Shading::EvenGray,
                },
                annotation: match annotate {
                    AnnotateArg::None => Annotation::None,
                    AnnotateArg::Cutjoin => Annotation::CutJoin,
                    AnnotateArg::Lengths => Annotation::Lengths,
                },
            };
            out.write_all(fibcomp::render(&composition, &spec)?.as_bytes())?;
            Ok(())
        }
    }
}

fn cmd_enumerate(
    class: ClassSpec,
    n: u32,
    limit: Option<u64>,
    rank_range: Option<(BigUint, BigUint)>,
    out: &mut impl Write,
) -> CmdResult {
    let stream: Box<dyn Iterator<Item = Composition>> = match rank_range {
        Some((lo, hi)) => Box::new(enumerate_range(class, n, &lo, &hi)),
        None => Box::new(enumerate(class, n)),
    };
    let limit = limit.map_or(usize::MAX, |l| usize::try_from(l).unwrap_or(usize::MAX));
    for c in stream.take(limit) {
        writeln!(out, "{c}")?;
    }
    Ok(())
}

/// Runs `each` over the single argument or, when absent, every stdin line.
/// Batch mode keeps going after a bad line and reports the worst exit code.
fn for_each_input(
    input: Option<String>,
    out: &mut impl Write,
    mut each: impl FnMut(&str, &mut dyn Write) -> CmdResult,
) -> CmdResult {
    if let Some(input) = input {
        return each(&input, out);
    }
    let mut worst: Option<Failure> = None;
    for line in io::stdin().lock().lines() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if let Err(failure) = each(line, out) {
            eprintln!("fibcomp: {line}: {}", failure.message);
            if worst.as_ref().is_none_or(|w| failure.code > w.code) {
                worst = Some(failure);
            }
        }
    }
    match worst {
        Some(failure) => Err(Failure {
            code: failure.code,
            message: String::new(),
        }),
        None => Ok(()),
    }
}

fn cmd_codec(
    op: CodecOp,
    input: Option<String>,
    board: Option<u32>,
    out: &mut impl Write,
) -> CmdResult {
    for_each_input(input, out, |text, out| {
        let line = match op {
            CodecOp::Decode => decode(&CutJoinSeq::parse(text, board)?).to_string(),
            CodecOp::Encode => encode(&text.parse()?)?.to_string(),
            CodecOp::Conjugate => conjugate(&text.parse()?)?.to_string(),
            CodecOp::Reverse => reverse(&text.parse()?).to_string(),
        };
        writeln!(out, "{line}")?;
        Ok(())
    })
}

fn cmd_map(
    map: BijectionMap,
    direction: Direction,
    args: &[String],
    n: u32,
    out: &mut impl Write,
) -> CmdResult {
    match direction {
        Direction::Fwd => {
            let (tag, input) = match args {
                [tag] => (tag, None),
                [tag, c] => (tag, Some(c.clone())),
                _ => return Err(Failure::usage("map fwd expects TAG [COMPOSITION]")),
            };
            let origin: Origin = tag.parse()?;
            for_each_input(input, out, |text, out| {
                let source = TaggedSource::new(origin, text.parse()?);
                writeln!(out, "{}", map.forward(&source, n)?)?;
                Ok(())
            })
        }
        Direction::Bwd => {
            let input = match args {
                [] => None,
                [c] => Some(c.clone()),
                _ => return Err(Failure::usage("map bwd expects [COMPOSITION]")),
            };
            for_each_input(input, out, |text, out| {
                writeln!(out, "{}", map.backward(&text.parse()?, n)?)?;
                Ok(())
            })
        }
    }
}

fn cmd_verify(target: MapTarget, n_max: u32, bound: u32, out: &mut impl Write) -> CmdResult {
    let maps: Vec<BijectionMap> = match target {
        MapTarget::Prop1 => vec![BijectionMap::Prop1],
        MapTarget::Prop2 => vec![BijectionMap::Prop2],
        MapTarget::Prop3 => vec![BijectionMap::Prop3],
        MapTarget::Thm4 => vec![BijectionMap::Thm4],
        MapTarget::All => BijectionMap::ALL_MAPS.to_vec(),
    };
    if n_max > bound {
        return Err(Failure::usage(format!(
            "n_max {n_max} exceeds the materialization bound {bound} (raise with --bound or FIBCOMP_MAX_N)"
        )));
    }
    if let Some(map) = maps.iter().find(|m| n_max < m.min_n()) {
        return Err(Failure::usage(format!(
            "{map} is valid for n >= {}, got n_max = {n_max}",
            map.min_n()
        )));
    }
    let config = VerifyConfig { bound };
    let mut first_failure = None;
    for map in maps {
        for n in map.min_n()..=n_max {
            let report = verify_bijection(map, n, &config)?;
            writeln!(out, "{report}")?;
            if let (None, Some(failure)) = (&first_failure, report.failures.first()) {
                writeln!(out, "counterexample: {failure}")?;
                first_failure = Some(format!("{map} failed at n = {n}: {failure}"));
            }
        }
    }
    match first_failure {
        Some(message) => Err(Failure::domain(message)),
        None => Ok(()),
    }
}

fn cmd_identity(target: IdentityTarget, n_max: u32, out: &mut impl Write) -> CmdResult {
    if n_max < 1 {
        return Err(Failure::usage("n_max must be at least 1"));
    }
    let ids: Vec<IdentityId> = match target {
        IdentityTarget::Eq1 => vec![IdentityId::Eq1],
        IdentityTarget::Eq2 => vec![IdentityId::Eq2],
        IdentityTarget::Eq3 => vec![IdentityId::Eq3],
        IdentityTarget::Eq4 => vec![IdentityId::Eq4],
        IdentityTarget::Pow2 => vec![IdentityId::Pow2],
        IdentityTarget::All => IdentityId::ALL_IDS.to_vec(),
    };
    let config = IdentityConfig::default();
    let mut failed = None;
    for id in ids {
        let report = check_identity(id, n_max, &config);
        write!(out, "{report}")?;
        if let (None, Some(row)) = (&failed, report.first_failure()) {
            failed = Some(format!("{id} fails at n = {}", row.n));
        }
    }
    match failed {
        Some(message) => Err(Failure::domain(message)),
        None => Ok(()),
    }
}
