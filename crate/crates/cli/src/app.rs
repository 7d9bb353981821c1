//! Command-line interface.

use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ncharm::freealg::{expand_in_p, h_basis, lyndon_factorize, p_basis, s_basis, NCPoly, Word};
use ncharm::frobenius::{glchar_aprime, glchar_aprime_schur, Module};
use ncharm::harmonics::{frob_from_kernels, kernel, Flavor, DEFAULT_BUDGET};
use ncharm::verify::{self, Report, Suite};
use ncharm::{rational, Basis, QSeries};

use crate::bfile::{self, BFile, BFileError};
use crate::formats;

/// Exit status for a failed verification or comparison.
pub const EXIT_FAIL: i32 = 1;
/// Exit status for bad arguments or unreadable input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ncharm", version, about = "Graded Frobenius characteristics of noncommutative harmonics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    S,
    H,
    E,
    M,
    P,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::S => Basis::S,
            BasisArg::H => Basis::H,
            BasisArg::E => Basis::E,
            BasisArg::M => Basis::M,
            BasisArg::P => Basis::P,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Hausdorff,
    Twisted,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Hausdorff => Flavor::Hausdorff,
            FlavorArg::Twisted => Flavor::Twisted,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisKind {
    P,
    S,
    H,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a graded Frobenius series (or the GL character with `glchar`).
    Series {
        /// sym, ncsym, qxn, mhar, nchar, coinv, aprime or glchar
        module: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        deg: usize,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
        /// Only the Hilbert series.
        #[arg(long)]
        hilbert: bool,
        #[arg(long, value_enum, default_value = "s")]
        basis: BasisArg,
    },
    /// Compare Hilbert series against local OEIS b-files.
    OeisCheck {
        /// Sequence ids such as A122391.
        ids: Vec<String>,
        /// Check every bound sequence.
        #[arg(long)]
        all: bool,
        /// Explicit b-file (only with a single id).
        #[arg(long)]
        bfile: Option<PathBuf>,
        /// Directory holding bNNNNNN.txt files (default: $NCHARM_OEIS_DIR, then `.`).
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Largest power of q compared.
        #[arg(long, default_value_t = 30)]
        deg: usize,
    },
    /// Run a verification sweep.
    Verify {
        /// chevalley, drensky, triangularity, duality, kernels or syt
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        deg: Option<usize>,
        #[arg(long)]
        len: Option<usize>,
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Brute-force kernel of the invariant operators in one degree.
    Kernel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        deg: usize,
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Graded Frobenius series assembled from brute-force kernels.
    FrobKernels {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        deg: usize,
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
        #[arg(long, value_enum, default_value = "s")]
        basis: BasisArg,
    },
    /// A bracket, shuffle or hybrid basis element.
    Basis {
        #[arg(value_enum)]
        kind: BasisKind,
        /// Digits (`2112`) or comma-separated letters (`2,11,1`).
        word: String,
        /// Print the coefficients in the bracket basis instead.
        #[arg(long)]
        expand: bool,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Lyndon factorization of a word.
    Lyndon { word: String },
}

/// What a command printed and how it wants to exit.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, stderr: String::new(), code: 0 }
    }
}

/// The monomial budget for brute-force kernels, from `NCHARM_BUDGET`.
pub fn budget() -> Result<u64> {
    match std::env::var("NCHARM_BUDGET") {
        Ok(v) => v.trim().parse().with_context(|| format!("NCHARM_BUDGET={:?} is not a count", v)),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_BUDGET),
        Err(e) => Err(anyhow!(e)),
    }
}

fn parse_word(s: &str) -> Result<Word> {
    Word::parse(s).ok_or_else(|| anyhow!("bad word {:?}: use digits 1-9 or comma-separated positive letters", s))
}

fn join(s: &QSeries) -> String {
    formats::qseries_strings(s).join(",")
}

fn json<T: serde::Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

pub fn run(cli: Cli) -> Result<Output> {
    match cli.command {
        Command::Series { module, n, deg, format, hilbert, basis } => series(&module, n, deg, format, hilbert, basis.into()),
        Command::OeisCheck { ids, all, bfile, dir, deg } => oeis_check(ids, all, bfile, dir, deg),
        Command::Verify { suite, n, nmax, deg, len, kmax } => {
            let suite = Suite::from_name(&suite).ok_or_else(|| anyhow!("unknown suite {:?}", suite))?;
            let report = run_suite(suite, n, nmax, deg, len, kmax)?;
            let code = if report.passed() { 0 } else { EXIT_FAIL };
            Ok(Output { stdout: format!("{}\n", report), stderr: String::new(), code })
        }
        Command::Kernel { n, deg, flavor, format } => kernel_cmd(n, deg, flavor.into(), format),
        Command::FrobKernels { n, deg, flavor, format, basis } => {
            if n == 0 {
                bail!("--n must be at least 1");
            }
            let f = frob_from_kernels(n, deg, flavor.into(), budget()?).map_err(|e| anyhow!(e))?;
            frob_output(&f, format, false, basis.into())
        }
        Command::Basis { kind, word, expand, format } => basis_cmd(kind, &parse_word(&word)?, expand, format),
        Command::Lyndon { word } => {
            let w = parse_word(&word)?;
            let f = lyndon_factorize(&w);
            let parts: Vec<String> = f.factors().iter().map(|l| format!("({})", l)).collect();
            Ok(Output::ok(format!("{}\n", parts.join(""))))
        }
    }
}

fn frob_output(f: &ncharm::FrobSeries, format: Format, hilbert: bool, basis: Basis) -> Result<Output> {
    let hs = f.hilbert();
    let text = match (format, hilbert) {
        (Format::Pretty, true) => format!("{}\n", join(&hs)),
        (Format::Json, true) => json(&serde_json::json!({ "label": f.label(), "hilbert": formats::qseries_strings(&hs) }))?,
        (Format::Csv, true) => formats::qseries_to_csv(&hs)?,
        (Format::Pretty, false) => format!("{}\n{}\nhilbert: {}\n", f.label(), f.value.to_basis(basis), join(&hs)),
        (Format::Json, false) => json(&formats::frob_to_json(f, basis))?,
        (Format::Csv, false) => formats::symfunc_to_csv(&f.value.to_basis(basis))?,
    };
    Ok(Output::ok(text))
}

fn series(module: &str, n: usize, deg: usize, format: Format, hilbert: bool, basis: Basis) -> Result<Output> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    if module == "glchar" {
        return glchar(n, deg, format, hilbert, basis);
    }
    let m = Module::from_name(module).ok_or_else(|| {
        anyhow!("unknown module {:?} (expected sym, ncsym, qxn, mhar, nchar, coinv, aprime or glchar)", module)
    })?;
    frob_output(&m.frob(n, deg), format, hilbert, basis)
}

fn glchar(n: usize, deg: usize, format: Format, hilbert: bool, basis: Basis) -> Result<Output> {
    let specialized = glchar_aprime(n, deg);
    if hilbert {
        return Ok(Output::ok(match format {
            Format::Pretty => format!("{}\n", join(&specialized)),
            Format::Json => json(&formats::qseries_strings(&specialized))?,
            Format::Csv => formats::qseries_to_csv(&specialized)?,
        }));
    }
    let degrees: Vec<_> = (0..=deg).map(|k| glchar_aprime_schur(k).to_basis(basis)).collect();
    let text = match format {
        Format::Pretty => {
            let mut out = format!("glchar_{}\nspecialization: {}\n", n, join(&specialized));
            for (k, f) in degrees.iter().enumerate() {
                let body = f.to_string();
                out.push_str(&format!("degree {}: {}\n", k, body.trim_start_matches("q^0: ")));
            }
            out
        }
        Format::Json => json(&serde_json::json!({
            "n": n,
            "specialization": formats::qseries_strings(&specialized),
            "degrees": degrees.iter().map(formats::symfunc_to_json).collect::<Vec<_>>(),
        }))?,
        Format::Csv => {
            // The degree column carries the polynomial degree k of the a variables.
            let mut out = String::from("degree,basis,partition,coeff\n");
            for (k, f) in degrees.iter().enumerate() {
                for (l, c) in f.q_slice(0) {
                    let parts: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
                    out.push_str(&format!("{},{},{},{}\n", k, f.basis().tag(), parts.join(" "), rational::to_string(&c)));
                }
            }
            out
        }
    };
    Ok(Output::ok(text))
}

fn resolve_dir(dir: Option<PathBuf>) -> PathBuf {
    dir.or_else(|| std::env::var_os("NCHARM_OEIS_DIR").map(PathBuf::from)).unwrap_or_else(|| PathBuf::from("."))
}

fn oeis_check(ids: Vec<String>, all: bool, file: Option<PathBuf>, dir: Option<PathBuf>, deg: usize) -> Result<Output> {
    let ids: Vec<String> = if all {
        bfile::BINDINGS.iter().map(|(s, _, _)| s.to_string()).collect()
    } else {
        ids
    };
    if ids.is_empty() {
        bail!("give sequence ids or --all");
    }
    if file.is_some() && ids.len() != 1 {
        bail!("--bfile takes exactly one sequence id");
    }
    let dir = resolve_dir(dir);
    let mut out = Output::default();
    for id in &ids {
        let (module, n) = bfile::binding(id).ok_or_else(|| anyhow!("{} is not a bound sequence", id))?;
        let path = file.clone().unwrap_or_else(|| dir.join(bfile::file_name(id)));
        match BFile::read(id, &path) {
            Ok(b) => {
                let c = bfile::compare(&b, module, n, deg);
                if !c.passed() {
                    out.code = out.code.max(EXIT_FAIL);
                }
                out.stdout.push_str(&format!("{}\n", c));
            }
            Err(e @ (BFileError::Io { .. } | BFileError::Parse { .. })) => {
                out.code = EXIT_USAGE;
                out.stderr.push_str(&format!("ERROR {}: {}\n", id, e));
            }
        }
    }
    Ok(out)
}

pub fn run_suite(
    suite: Suite,
    n: Option<usize>,
    nmax: Option<usize>,
    deg: Option<usize>,
    len: Option<usize>,
    kmax: Option<usize>,
) -> Result<Report> {
    Ok(match suite {
        Suite::Chevalley => verify::chevalley(nmax.or(n).unwrap_or(4), deg.unwrap_or(8)),
        Suite::Drensky => {
            let nmax = nmax.or(n).unwrap_or(4);
            verify::drensky(nmax, nmax, deg.unwrap_or(8))
        }
        Suite::Triangularity => verify::triangularity(n.unwrap_or(3), len.unwrap_or(6)),
        Suite::Duality => verify::duality(n.unwrap_or(3), len.unwrap_or(5)),
        Suite::Kernels => verify::kernels(n.unwrap_or(2), deg.unwrap_or(5), budget()?),
        Suite::Syt => verify::syt(kmax.unwrap_or(7), nmax.or(n).unwrap_or(3), deg.unwrap_or(6)),
    })
}

fn kernel_cmd(n: usize, deg: usize, flavor: Flavor, format: Format) -> Result<Output> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    let k = kernel(n, deg, flavor, budget()?).map_err(|e| anyhow!(e))?;
    let j = formats::kernel_to_json(&k, flavor)?;
    let text = match format {
        Format::Json => json(&j)?,
        Format::Pretty => {
            let mut out = format!("{} kernel n={} degree={} dim={}\n", flavor.name(), n, deg, k.dim());
            for f in k.basis() {
                out.push_str(&format!("  {}\n", f));
            }
            for (l, chi) in &j.characters {
                let parts: Vec<String> = l.iter().map(|p| p.to_string()).collect();
                out.push_str(&format!("chi[{}] = {}\n", parts.join(","), chi));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("vector,word,coeff\n");
            for (i, f) in k.basis().iter().enumerate() {
                for line in formats::ncpoly_to_csv(f)?.lines().skip(1) {
                    out.push_str(&format!("{},{}\n", i, line));
                }
            }
            out
        }
    };
    Ok(Output::ok(text))
}

fn basis_cmd(kind: BasisKind, w: &Word, expand: bool, format: Format) -> Result<Output> {
    let f: NCPoly = match kind {
        BasisKind::P => p_basis(w),
        BasisKind::S => s_basis(w),
        BasisKind::H => h_basis(w),
    };
    if !expand {
        return Ok(Output::ok(match format {
            Format::Pretty => format!("{}\n", f),
            Format::Json => json(&formats::ncpoly_to_json(&f))?,
            Format::Csv => formats::ncpoly_to_csv(&f)?,
        }));
    }
    let e = expand_in_p(&f).map_err(|e| anyhow!(e))?;
    let text = match format {
        Format::Pretty => {
            let terms: Vec<String> = e.iter().rev().map(|(u, c)| format!("{}*P[{}]", rational::to_string(c), u)).collect();
            format!("{}\n", terms.join(" + "))
        }
        Format::Json => json(&serde_json::json!({
            "terms": e.iter().map(|(u, c)| serde_json::json!({ "word": u.letters(), "coeff": rational::to_string(c) })).collect::<Vec<_>>()
        }))?,
        Format::Csv => {
            let mut out = String::from("word,coeff\n");
            for (u, c) in &e {
                out.push_str(&format!("{},{}\n", u, rational::to_string(c)));
            }
            out
        }
    };
    Ok(Output::ok(text))
}
