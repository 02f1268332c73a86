use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lintype::cli::{run, AnalysisRequest, Command, Source};
use lintype::Setting;

#[derive(Parser)]
#[command(name = "lintype", version, about = "Linear type and singularity invariants of hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Singular points, their invariants, linear type and genus.
    Analyze(Common),
    /// Milnor numbers at the singular points.
    Milnor(Common),
    /// Tjurina numbers at the singular points.
    Tjurina(Common),
    /// Local Euler-relation test at the singular points.
    Eulerian(Common),
    /// ADE types of plane curve singularities.
    Classify(Common),
    /// Syzygy matrix of the Jacobian or gradient ideal.
    Syzygy(Common),
    /// Symmetric algebra presentation ideal.
    Sym(Common),
    /// Rees algebra presentation ideal.
    Rees(Common),
    /// Linear type verdict with the criteria that agree.
    LinearType(Common),
    /// Geometric genus of an irreducible plane curve.
    Genus(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum SettingArg {
    Affine,
    Projective,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum)]
    setting: SettingArg,
    /// Also compare Rees and symmetric ideals directly.
    #[arg(long)]
    direct_rees: bool,
    /// Declare the curve irreducible (needed for the genus).
    #[arg(long)]
    assert_irreducible: bool,
    /// Preferred chart variable for projective points.
    #[arg(long, value_name = "VAR")]
    chart: Option<String>,
    /// Write the JSON report to OUT (`-` for stdout).
    #[arg(long, value_name = "OUT")]
    json: Option<PathBuf>,
    /// Polynomial to use from FILE (default `f`, else the first).
    #[arg(long)]
    name: Option<String>,
    /// Inline polynomial instead of FILE.
    #[arg(long, conflicts_with = "file")]
    expr: Option<String>,
    /// Variables for --expr, comma separated.
    #[arg(long, requires = "expr", value_delimiter = ',')]
    ring: Option<Vec<String>>,
    /// Input file: `ring x,y,z;` then `name = polynomial;` lines.
    #[arg(required_unless_present = "expr")]
    file: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, c) = match cli.command {
        Cmd::Analyze(c) => (Command::Analyze, c),
        Cmd::Milnor(c) => (Command::Milnor, c),
        Cmd::Tjurina(c) => (Command::Tjurina, c),
        Cmd::Eulerian(c) => (Command::Eulerian, c),
        Cmd::Classify(c) => (Command::Classify, c),
        Cmd::Syzygy(c) => (Command::Syzygy, c),
        Cmd::Sym(c) => (Command::Sym, c),
        Cmd::Rees(c) => (Command::Rees, c),
        Cmd::LinearType(c) => (Command::LinearType, c),
        Cmd::Genus(c) => (Command::Genus, c),
    };
    let source = match (c.expr, c.file) {
        (Some(expr), _) => Source::Inline { expr, ring: c.ring },
        (None, Some(path)) => Source::File { path, name: c.name },
        (None, None) => unreachable!("clap requires one source"),
    };
    let setting = match c.setting {
        SettingArg::Affine => Setting::Affine,
        SettingArg::Projective => Setting::Projective,
    };
    let mut req = AnalysisRequest::new(source, setting, [command]);
    req.direct_rees = c.direct_rees;
    req.assert_irreducible = c.assert_irreducible;
    req.chart = c.chart;
    let (report, code) = run(&req);
    match c.json {
        Some(out) if out.as_os_str() == "-" => println!("{}", report.to_json()),
        Some(out) => {
            if let Err(e) = std::fs::write(&out, report.to_json() + "\n") {
                eprintln!("cannot write {}: {e}", out.display());
                return ExitCode::from(1);
            }
            println!("{}", report.summary());
        }
        None => println!("{}", report.summary()),
    }
    ExitCode::from(code as u8)
}
