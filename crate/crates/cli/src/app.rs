use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use reidemeister_core::spaces::cone_apex;
use reidemeister_core::stratified::Perversity;

use crate::document::{vertex_stratum, Generator, Resolved, SpaceDocument};
use crate::suites::{torsion_report, verify, Status, Suite, TorsionReport, VerifyOptions, VerifyReport};
use crate::CliError;

/// Worker count for verification, all cores when unset.
pub const WORKERS_ENV: &str = "REIDEMEISTER_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "reidemeister", version, about = "Exact Reidemeister and intersection Reidemeister torsion")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Torsion of a document; intersection torsion if it names a perversity.
    Torsion { doc: PathBuf },
    /// Intersection torsion for the given perversity.
    IhTorsion {
        doc: PathBuf,
        #[arg(long)]
        perversity: String,
    },
    /// Run a verification suite over the catalog and any documents.
    Verify {
        suite: SuiteArg,
        #[arg(long, default_value_t = 2000)]
        max_simplices: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra documents; they extend the catalog.
        #[arg(long = "doc")]
        docs: Vec<PathBuf>,
        #[arg(long, default_value_t = 100)]
        cm_cases: usize,
        #[arg(long, default_value_t = 3)]
        random_covers: usize,
    },
    /// Print the canonical document of a generated space,
    /// e.g. `sphere 2`, `product circle:3 cone:sphere:1`.
    Generate {
        #[arg(required = true)]
        spec: Vec<String>,
        /// Mark the apex of a cone as singular stratum.
        #[arg(long)]
        stratify_apex: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Gluing,
    Phi,
    Kunneth,
    Cm,
    MainTheorem,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Gluing => vec![Suite::Gluing],
            SuiteArg::Phi => vec![Suite::Phi],
            SuiteArg::Kunneth => vec![Suite::Kunneth],
            SuiteArg::Cm => vec![Suite::Cm],
            SuiteArg::MainTheorem => vec![Suite::MainTheorem],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

/// Parses arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match execute(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn read_document(path: &Path) -> Result<Resolved, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
    };
    SpaceDocument::from_json(&text)?.resolve()
}

fn workers_from_env() -> Result<Option<usize>, CliError> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| CliError::Input(format!("{WORKERS_ENV}={v:?} is not a positive integer"))),
        _ => Ok(None),
    }
}

fn execute(cli: Cli, out: &mut impl Write) -> Result<i32, CliError> {
    let io_err = |e: io::Error| CliError::Input(format!("write failed: {e}"));
    match cli.command {
        Command::Torsion { doc } => {
            let doc = read_document(&doc)?;
            let p = match &doc.subject {
                crate::document::Subject::Space { strat: Some(_), .. } => doc.perversity.clone(),
                _ => None,
            };
            let report = torsion_report(&doc, p.as_ref())?;
            write_torsion(out, &report, cli.json).map_err(io_err)?;
            Ok(0)
        }
        Command::IhTorsion { doc, perversity } => {
            let doc = read_document(&doc)?;
            let p = Perversity::from_name(&perversity).map_err(|e| CliError::Input(e.to_string()))?;
            let report = torsion_report(&doc, Some(&p))?;
            write_torsion(out, &report, cli.json).map_err(io_err)?;
            Ok(0)
        }
        Command::Verify { suite, max_simplices, seed, docs, cm_cases, random_covers } => {
            let docs = docs.iter().map(|p| read_document(p)).collect::<Result<Vec<_>, _>>()?;
            let opts = VerifyOptions { seed, max_simplices, cm_cases, random_covers, workers: workers_from_env()? };
            let report = verify(&suite.suites(), &opts, &docs);
            write_verify(out, &report, cli.json).map_err(io_err)?;
            Ok(if report.summary.failed > 0 {
                1
            } else if report.summary.errors > 0 {
                3
            } else {
                0
            })
        }
        Command::Generate { spec, stratify_apex } => {
            let doc = generate(&spec.join(":"), stratify_apex)?;
            out.write_all(doc.to_json().as_bytes()).map_err(io_err)?;
            Ok(0)
        }
    }
}

/// Canonical explicit document for a generator spec.
pub fn generate(spec: &str, stratify_apex: bool) -> Result<SpaceDocument, CliError> {
    let g = Generator::parse(spec)?;
    let complex = g.build()?;
    let mut doc = SpaceDocument::explicit(g.to_string(), &complex);
    if stratify_apex {
        let Generator::Cone { of } = &g else {
            return Err(CliError::Input("--stratify-apex needs a cone".into()));
        };
        let apex = cone_apex(&of.build()?);
        doc.stratification.push(vertex_stratum(&complex, apex));
    }
    Ok(doc)
}

fn write_torsion(out: &mut impl Write, r: &TorsionReport, json: bool) -> io::Result<()> {
    if json {
        serde_json::to_writer_pretty(&mut *out, r).map_err(io::Error::other)?;
        return writeln!(out);
    }
    writeln!(out, "space: {}", r.name)?;
    match &r.perversity {
        Some(p) => writeln!(out, "complex: intersection ({p})")?,
        None => writeln!(out, "complex: {}", r.kind)?,
    }
    let betti: Vec<String> = r.betti.iter().map(ToString::to_string).collect();
    writeln!(out, "betti: {}", betti.join(" "))?;
    writeln!(out, "torsion: {}", r.torsion)?;
    writeln!(out, "homology basis:")?;
    for (q, reps) in r.homology_basis.iter().enumerate() {
        for v in reps {
            writeln!(out, "  H_{q}: [{}]", v.join(", "))?;
        }
    }
    Ok(())
}

fn write_verify(out: &mut impl Write, r: &VerifyReport, json: bool) -> io::Result<()> {
    if json {
        serde_json::to_writer_pretty(&mut *out, r).map_err(io::Error::other)?;
        return writeln!(out);
    }
    for c in &r.cases {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
            Status::Error => "ERROR",
        };
        match (&c.lhs, &c.rhs) {
            (Some(l), Some(rhs)) => writeln!(out, "{tag:<5} {}  lhs={l} rhs={rhs}", c.id)?,
            _ => writeln!(out, "{tag:<5} {}  {}", c.id, c.details.get("reason").map_or("", String::as_str))?,
        }
    }
    let s = &r.summary;
    writeln!(
        out,
        "{} cases: {} passed, {} failed, {} skipped, {} errors",
        s.total, s.passed, s.failed, s.skipped, s.errors
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_commands() {
        let cli = Cli::try_parse_from(["reidemeister", "--json", "verify", "main-theorem", "--seed", "3"]).unwrap();
        assert!(cli.json);
        assert!(matches!(cli.command, Command::Verify { seed: 3, .. }));
        assert!(Cli::try_parse_from(["reidemeister", "verify", "nonsense"]).is_err());
    }

    #[test]
    fn generate_cone_with_apex() {
        let doc = generate("cone:sphere:1", true).unwrap();
        assert_eq!(doc.stratification.len(), 1);
        assert_eq!(doc.stratification[0].simplices, vec![vec![3]]);
        assert_eq!(doc.stratification[0].codimension, Some(2));
        assert!(generate("sphere:1", true).is_err());
        assert!(generate("klein:3", false).is_err());
    }
}
