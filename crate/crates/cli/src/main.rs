//! Command-line front end for the skew brace kernel.
//!
//! Subcommands: `validate` and `analyze` for single `.brace` files,
//! `enumerate` to build catalogs on disk, `verify` to run the named check
//! suites over a catalog. Exit codes are a stable contract: 0 success,
//! 1 mathematical failure (invalid brace, failed check, oracle mismatch),
//! 2 usage or I/O error.

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use skewbrace::enumerate::{brute_force_enumerate, ENUMERATION_CAP};
use skewbrace::io::{self, read_brace_file, write_catalog};
use skewbrace::theorems::find_factorisations;
use skewbrace::verify::{run_keys_on_brace, SuiteReport, TheoremKey};
use skewbrace::ybe::ybe_check;
use skewbrace::{BraceCatalog, SkewBrace};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "skewbrace",
    version,
    about = "Compute with finite skew braces: validate, analyze, enumerate, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a .brace file holds a well-formed skew brace.
    Validate {
        /// Path to a .brace file.
        file: PathBuf,
    },
    /// Print a structural report on one brace.
    Analyze {
        /// Path to a .brace file.
        file: PathBuf,
        /// Emit tab-separated rows instead of prose.
        #[arg(long)]
        tsv: bool,
    },
    /// Write every brace of one order, up to isomorphism, into a catalog
    /// directory.
    Enumerate {
        /// Brace order to enumerate.
        order: usize,
        /// Catalog root; braces land in <out>/order<NN>/brace_<XXXX>.brace.
        #[arg(long, default_value = "catalog")]
        out: PathBuf,
        /// Re-derive the catalog with the independent slow search and
        /// compare (orders up to 6).
        #[arg(long)]
        oracle: bool,
        /// Permit orders beyond the default cap of 16 (up to 24).
        #[arg(long)]
        allow_large: bool,
    },
    /// Run check suites over a catalog directory or a single file.
    Verify {
        /// A .brace file, a directory of .brace files, or a root holding
        /// order<NN> subdirectories.
        catalog: PathBuf,
        /// Check family to run, or "all".
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Emit tab-separated rows instead of prose.
        #[arg(long)]
        tsv: bool,
        /// Size of the worker thread pool.
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the report here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Error carrying the exit code contract.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn math(message: impl Into<String>) -> Failure {
        Failure { code: 1, message: message.into() }
    }
}

impl From<io::IoError> for Failure {
    fn from(e: io::IoError) -> Failure {
        match e {
            // A readable file that is not a brace is a mathematical
            // failure; unreadable or ill-formed input is an I/O one.
            io::IoError::Invalid(inner) => Failure::math(format!("not a skew brace: {inner}")),
            other => Failure { code: 2, message: other.to_string() },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Validate { file } => {
            let b = read_brace_file(&file)?;
            println!(
                "valid skew brace of order {}{}",
                b.order(),
                if b.is_trivial_brace() { " (trivial)" } else { "" }
            );
            Ok(0)
        }
        Command::Analyze { file, tsv } => {
            let b = read_brace_file(&file)?;
            print!("{}", if tsv { analyze_tsv(&b) } else { analyze_text(&b) });
            Ok(0)
        }
        Command::Enumerate { order, out, oracle, allow_large } => enumerate(order, &out, oracle, allow_large),
        Command::Verify { catalog, theorem, tsv, jobs, out } => {
            verify(&catalog, &theorem, tsv, jobs, out.as_deref())
        }
    }
}

fn analyze_text(b: &SkewBrace) -> String {
    let mut out = String::new();
    let yes = |f: bool| if f { "yes" } else { "no" };
    writeln!(out, "skew brace of order {}", b.order()).unwrap();
    writeln!(
        out,
        "additive group abelian: {}; multiplicative group abelian: {}",
        yes(b.add().is_abelian()),
        yes(b.mul().is_abelian())
    )
    .unwrap();
    writeln!(out, "trivial: {}; abelian: {}", yes(b.is_trivial_brace()), yes(b.is_abelian_brace()))
        .unwrap();
    writeln!(out, "fix: {}", b.fix_set()).unwrap();
    writeln!(out, "lambda kernel: {}", b.lambda_kernel()).unwrap();
    writeln!(out, "socle: {}", b.socle()).unwrap();
    writeln!(out, "centre: {}", b.centre()).unwrap();
    let ci = b.commutator_ideal();
    let abelian_quotient = b.quotient(&ci).map(|q| q.is_abelian_brace()).unwrap_or(false);
    writeln!(out, "commutator ideal: {ci} (abelian quotient: {})", yes(abelian_quotient)).unwrap();
    let ybe = ybe_check(b);
    writeln!(
        out,
        "yang-baxter map: bijective {}, nondegenerate {}, braid {}",
        yes(ybe.bijective),
        yes(ybe.nondegenerate),
        yes(ybe.braid)
    )
    .unwrap();
    let subs = skewbrace::theorems::enumerate_subbraces(b);
    writeln!(out, "subbraces ({}):", subs.len()).unwrap();
    for s in &subs {
        let f = b.analyze_subbrace(s);
        let mut tags = Vec::new();
        if f.trivial {
            tags.push("trivial");
        }
        if f.abelian {
            tags.push("abelian");
        }
        if f.ideal {
            tags.push("ideal");
        } else {
            if f.strong_left_ideal {
                tags.push("strong-left-ideal");
            } else if f.left_ideal {
                tags.push("left-ideal");
            }
            if f.right_ideal {
                tags.push("right-ideal");
            }
        }
        writeln!(out, "  {s} {}", if tags.is_empty() { "-".into() } else { tags.join(",") })
            .unwrap();
    }
    let pairs = find_factorisations(b);
    writeln!(out, "covering subbrace pairs: {}", pairs.len()).unwrap();
    out
}

fn analyze_tsv(b: &SkewBrace) -> String {
    let mut out = String::new();
    let ci = b.commutator_ideal();
    let ybe = ybe_check(b);
    let mut field = |name: &str, value: String| {
        writeln!(out, "field\t{name}\t{value}").unwrap();
    };
    field("order", b.order().to_string());
    field("add-abelian", b.add().is_abelian().to_string());
    field("mul-abelian", b.mul().is_abelian().to_string());
    field("trivial", b.is_trivial_brace().to_string());
    field("abelian", b.is_abelian_brace().to_string());
    field("fix", b.fix_set().to_string());
    field("lambda-kernel", b.lambda_kernel().to_string());
    field("socle", b.socle().to_string());
    field("centre", b.centre().to_string());
    field("commutator-ideal", ci.to_string());
    field("ybe", ybe.all_hold().to_string());
    for s in skewbrace::theorems::enumerate_subbraces(b) {
        let f = b.analyze_subbrace(&s);
        writeln!(
            out,
            "subbrace\t{s}\ttrivial={} abelian={} left={} right={} strong-left={} ideal={}",
            f.trivial, f.abelian, f.left_ideal, f.right_ideal, f.strong_left_ideal, f.ideal
        )
        .unwrap();
    }
    out
}

fn enumerate(order: usize, out: &Path, oracle: bool, allow_large: bool) -> Result<u8, Failure> {
    if order == 0 {
        return Err(Failure::usage("order must be positive"));
    }
    let braces = if order <= ENUMERATION_CAP {
        skewbrace::enumerate::enumerate_braces(order)
    } else if allow_large {
        skewbrace::enumerate::enumerate_braces_uncapped(order)
    } else {
        return Err(Failure::usage(format!(
            "order {order} exceeds the default cap of {ENUMERATION_CAP}; \
             pass --allow-large to enumerate it anyway (supported up to 24)"
        )));
    }
    .map_err(|e| Failure::usage(e.to_string()))?;

    if oracle {
        if order > 6 {
            return Err(Failure::usage("--oracle re-derivation is supported up to order 6"));
        }
        let brute = brute_force_enumerate(order).map_err(|e| Failure::usage(e.to_string()))?;
        let keys = |v: &[SkewBrace]| {
            let mut ks: Vec<_> = v.iter().map(|b| b.canonical_key()).collect();
            ks.sort();
            ks
        };
        if keys(&braces) != keys(&brute) {
            return Err(Failure::math(format!(
                "oracle mismatch at order {order}: {} vs {} classes",
                braces.len(),
                brute.len()
            )));
        }
        println!("oracle agrees: {} classes", braces.len());
    }

    let dir = write_catalog(out, order, &braces)?;
    let plural = if braces.len() == 1 { "" } else { "s" };
    println!("wrote {} brace{plural} of order {} to {}", braces.len(), order, dir.display());
    Ok(0)
}

/// Loads one or more catalogs from a path: a single `.brace` file, a
/// directory holding `.brace` files of one order, or a root whose
/// subdirectories hold them.
fn load_catalogs(path: &Path) -> Result<Vec<BraceCatalog>, Failure> {
    if path.is_file() {
        let b = read_brace_file(path)?;
        return Ok(vec![BraceCatalog::from_braces(b.order(), vec![b])]);
    }
    if !path.is_dir() {
        return Err(Failure::usage(format!("no such file or directory: {}", path.display())));
    }
    let braces = read_brace_dir(path)?;
    if !braces.is_empty() {
        return Ok(vec![catalog_from(braces, path)?]);
    }
    let mut subdirs: Vec<PathBuf> = std::fs::read_dir(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_dir())
        .collect();
    subdirs.sort();
    let mut catalogs = Vec::new();
    for dir in subdirs {
        let braces = read_brace_dir(&dir)?;
        if !braces.is_empty() {
            catalogs.push(catalog_from(braces, &dir)?);
        }
    }
    catalogs.sort_by_key(|c| c.order());
    Ok(catalogs)
}

fn read_brace_dir(dir: &Path) -> Result<Vec<SkewBrace>, Failure> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Failure::usage(format!("{}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "brace"))
        .collect();
    files.sort();
    files.iter().map(|f| Ok(read_brace_file(f)?)).collect()
}

fn catalog_from(braces: Vec<SkewBrace>, source: &Path) -> Result<BraceCatalog, Failure> {
    let order = braces[0].order();
    if braces.iter().any(|b| b.order() != order) {
        return Err(Failure::usage(format!(
            "{} mixes braces of different orders",
            source.display()
        )));
    }
    Ok(BraceCatalog::from_braces(order, braces))
}

fn verify(
    catalog: &Path,
    theorem: &str,
    tsv: bool,
    jobs: Option<usize>,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    let keys: Vec<TheoremKey> = if theorem == "all" {
        TheoremKey::ALL.to_vec()
    } else {
        match TheoremKey::parse(theorem) {
            Some(k) => vec![k],
            None => {
                let names: Vec<_> =
                    TheoremKey::ALL.iter().map(|k| k.name()).collect();
                return Err(Failure::usage(format!(
                    "unknown check family {theorem:?}; expected \"all\" or one of: {}",
                    names.join(", ")
                )));
            }
        }
    };
    if let Some(n) = jobs {
        if n == 0 {
            return Err(Failure::usage("--jobs must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::usage(format!("thread pool: {e}")))?;
    }

    let catalogs = load_catalogs(catalog)?;
    let total: usize = catalogs.iter().map(|c| c.len()).sum();
    if total == 0 {
        println!("0 instances");
        return Ok(0);
    }

    let mut report = SuiteReport::default();
    let mut header = String::new();
    for cat in &catalogs {
        let noun = if cat.len() == 1 { "brace" } else { "braces" };
        writeln!(header, "# {} {} of order {}", cat.len(), noun, cat.order()).unwrap();
        let per_brace: Vec<Vec<_>> = (0..cat.len())
            .into_par_iter()
            .map(|i| run_keys_on_brace(&keys, &cat.id(i), cat.get(i).unwrap()))
            .collect();
        report.lines.extend(per_brace.into_iter().flatten());
    }

    let (passed, failed, skipped) = report.counts();
    let body = if tsv { report.render_tsv() } else { format!("{header}{}", report.render_text()) };
    match out {
        Some(path) => {
            std::fs::write(path, &body)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            println!("report written to {}", path.display());
        }
        None => print!("{body}"),
    }
    if !tsv && out.is_none() {
        println!(
            "instances scanned: {}; premises matched: {}; conclusions verified: {passed}",
            passed + failed + skipped,
            passed + failed
        );
    }
    if failed > 0 {
        let first = report.failures()[0].clone();
        eprintln!(
            "verification failed: {} on brace {} instance {}",
            first.key, first.brace_id, first.instance
        );
        return Ok(1);
    }
    Ok(0)
}
