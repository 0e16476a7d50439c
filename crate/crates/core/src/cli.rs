//! Command-line front end.
//!
//! Exit codes: 0 when every expectation is met, 1 on a verdict mismatch,
//! 2 on an input error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::checks::{resolve, resolve_lattice, CheckSuite, Target, DEFAULT_SEED};
use crate::closure::ClosureSpace;
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::product::{
    beta_join, beta_sequence, box_join, build_product, fraser_join, ProductKind, ProductUniverse,
};
use crate::text::{parse_lattice, render_lattice};

#[derive(Parser, Debug)]
#[command(
    name = "tensorlat",
    version,
    about = "Weak tensor products of finite atomistic lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the full closed family of a lattice or product.
    Build(BuildArgs),
    /// Run a suite of checks.
    Check(CheckArgs),
    /// Join a set of points in a product.
    Join(JoinArgs),
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[arg(long, value_name = "N", conflicts_with_all = ["powerset", "product", "file"])]
    mo: Option<usize>,
    #[arg(long, value_name = "N", conflicts_with_all = ["product", "file"])]
    powerset: Option<usize>,
    /// Product kind followed by two or three factor files.
    #[arg(long, num_args = 3..=4, value_names = ["KIND", "A", "B"], conflicts_with = "file")]
    product: Option<Vec<String>>,
    /// A lattice file or a product description file.
    file: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Built-in suite name or suite file.
    #[arg(long, value_name = "NAME|FILE")]
    suite: String,
    #[arg(long, value_name = "K", default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Append elapsed times to each record.
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Box,
    Fraser,
    BetaSequence,
}

#[derive(Args, Debug)]
struct JoinArgs {
    /// Product description file or a reference such as `fraser:mo4,mo4`.
    product: String,
    /// Points as comma-separated coordinate labels, e.g. `a,b`.
    #[arg(required = true)]
    points: Vec<String>,
    #[arg(long, value_enum, default_value = "fraser")]
    method: Method,
    /// Factor indices for the beta sequence, e.g. `1,0,1`. Without it the
    /// factors are taken round robin until nothing changes.
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<usize>>,
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Precondition(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| io_error(path, e))
}

/// A factor given as a file, or failing that as a reference like `mo3`.
fn load_factor(s: &str, base: &Path) -> Result<ClosureSpace> {
    let path = base.join(s);
    if path.is_file() {
        parse_lattice(&read(&path)?)
    } else {
        resolve_lattice(s, base)
    }
}

fn product_of(
    kind: &str,
    factors: &[String],
    base: &Path,
) -> Result<(ProductUniverse, ClosureSpace)> {
    let kind: ProductKind = kind.parse()?;
    let factors = factors
        .iter()
        .map(|f| load_factor(f, base))
        .collect::<Result<Vec<_>>>()?;
    let u = ProductUniverse::new(factors)?;
    let space = build_product(kind, &u)?;
    Ok((u, space))
}

/// `kind: box` and one `factor: PATH` line per factor; paths are relative
/// to the description file.
fn parse_description(text: &str, base: &Path) -> Result<(ProductUniverse, ClosureSpace)> {
    let mut kind = None;
    let mut factors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        match t.split_once(':').map(|(k, v)| (k.trim(), v.trim())) {
            Some(("kind", v)) => kind = Some(v.to_string()),
            Some(("factor", v)) => factors.push(v.to_string()),
            _ => {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: "expected `kind:` or `factor:`".into(),
                })
            }
        }
    }
    let kind = kind.ok_or(Error::Parse {
        line: 1,
        msg: "missing `kind:` line".into(),
    })?;
    product_of(&kind, &factors, base)
}

fn is_description(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("kind:"))
}

fn parent(path: &Path) -> &Path {
    path.parent().unwrap_or(Path::new("."))
}

fn load_product(reference: &str) -> Result<(ProductUniverse, ClosureSpace)> {
    let path = Path::new(reference);
    if path.is_file() {
        let text = read(path)?;
        return parse_description(&text, parent(path));
    }
    match resolve(reference, Path::new("."))? {
        Target::Product {
            universe, space, ..
        } => Ok((universe, space)),
        _ => Err(Error::Precondition(format!(
            "`{reference}` is not a product"
        ))),
    }
}

fn cmd_build(args: &BuildArgs) -> Result<String> {
    let space = if let Some(n) = args.mo {
        ClosureSpace::mo(n)?
    } else if let Some(n) = args.powerset {
        ClosureSpace::powerset(n)?
    } else if let Some(p) = &args.product {
        product_of(&p[0], &p[1..], Path::new("."))?.1
    } else if let Some(path) = &args.file {
        let text = read(path)?;
        if is_description(&text) {
            parse_description(&text, parent(path))?.1
        } else {
            parse_lattice(&text)?
        }
    } else {
        return Err(Error::Precondition(
            "build needs --mo, --powerset, --product or a file".into(),
        ));
    };
    Ok(render_lattice(&space))
}

fn load_suite(spec: &str) -> Result<(CheckSuite, PathBuf)> {
    if let Some(s) = CheckSuite::builtin(spec) {
        return Ok((s, PathBuf::from(".")));
    }
    let path = Path::new(spec);
    let text = read(path)?;
    Ok((CheckSuite::parse(spec, &text)?, parent(path).to_path_buf()))
}

fn cmd_join(args: &JoinArgs) -> Result<String> {
    let (u, space) = load_product(&args.product)?;
    let r: PointSet = args
        .points
        .iter()
        .map(|p| u.parse_point(p))
        .collect::<Result<_>>()?;
    let show = |s: PointSet| space.render_braced(s);
    Ok(match args.method {
        Method::Box => format!("JOIN {}\n", show(box_join(&u, r))),
        Method::Fraser => format!("JOIN {}\n", show(fraser_join(&u, r))),
        Method::BetaSequence => {
            let seq = match &args.order {
                Some(order) => {
                    if let Some(&b) = order.iter().find(|&&b| b >= u.arity()) {
                        return Err(Error::Precondition(format!(
                            "factor index {b} out of range for {} factors",
                            u.arity()
                        )));
                    }
                    beta_sequence(&u, r, order)
                }
                None => round_robin(&u, r),
            };
            seq.iter()
                .enumerate()
                .map(|(i, &s)| format!("R{i} {}\n", show(s)))
                .collect()
        }
    })
}

/// β-joins cycling through the factors until a full pass changes nothing;
/// only the sets that differ from their predecessor are kept.
fn round_robin(u: &ProductUniverse, r: PointSet) -> Vec<PointSet> {
    let mut seq = vec![r];
    let mut stable = 0;
    let mut beta = 0;
    while stable < u.arity() {
        let next = beta_join(u, *seq.last().expect("nonempty"), beta);
        if next == *seq.last().expect("nonempty") {
            stable += 1;
        } else {
            stable = 1;
            seq.push(next);
        }
        beta = (beta + 1) % u.arity();
    }
    seq
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| io_error(path, e))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let emit = |out: &mut dyn Write, text: &str| -> Result<()> {
        out.write_all(text.as_bytes())
            .map_err(|e| Error::Precondition(format!("write failed: {e}")))
    };
    match &cli.command {
        Command::Build(args) => {
            let text = cmd_build(args)?;
            match &args.out {
                Some(path) => write_file(path, &text)?,
                None => emit(out, &text)?,
            }
            Ok(0)
        }
        Command::Check(args) => {
            let (suite, base) = load_suite(&args.suite)?;
            let report = suite.run(args.seed, &base)?;
            let text = report.render(args.timings);
            emit(out, &text)?;
            if let Some(path) = &args.out {
                write_file(path, &text)?;
            }
            Ok(if report.all_met() { 0 } else { 1 })
        }
        Command::Join(args) => {
            emit(out, &cmd_join(args)?)?;
            Ok(0)
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Errors go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
