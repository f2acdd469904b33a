//! Command-line front end.
//!
//! Exit codes: 0 success, 1 bad input (parse, validation, parameters),
//! 2 contract violation detected during a run.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use facelattice::oracle;
use facelattice::variants::{simple_dimension, simplicial_dimension};
use facelattice::{
    build_covector_lattice, build_face_lattice, build_k_skeleton, build_simple_lattice,
    build_simplicial_lattice, enumerate_faces_dfs, parse_cocircuits, parse_incidence,
    write_covector_lattice, write_face_lattice, BuildOptions, Format, Incidence, LabelMode,
};

#[derive(Parser)]
#[command(name = "facelattice", version, about = "Face lattices from vertex-facet incidences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the Hasse diagram of a polytope's face lattice.
    Build(BuildArgs),
    /// Build the big face lattice of an oriented matroid from cocircuits.
    Om(OmArgs),
    /// Write a generated incidence file to stdout.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BuildArgs {
    /// Incidence file, or `-` for stdin.
    input: String,
    #[arg(long, value_enum, default_value_t = LabelArg::Vertices)]
    labels: LabelArg,
    /// Only faces of dimension at most K.
    #[arg(long, value_name = "K", group = "mode")]
    k_skeleton: Option<usize>,
    /// Use the simple-polytope builder.
    #[arg(long, group = "mode")]
    simple: bool,
    /// Use the simplicial-polytope builder.
    #[arg(long, group = "mode")]
    simplicial: bool,
    /// List faces with their dimensions, depth first, without arcs.
    #[arg(long, group = "mode")]
    faces_only: bool,
    /// Never run on the transposed matrix.
    #[arg(long)]
    no_dualize: bool,
    /// Try every vertex outside H when forming candidate covers.
    #[arg(long)]
    no_restrict: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OmArgs {
    /// Cocircuit file, or `-` for stdin.
    input: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Subcommand)]
enum GenKind {
    Simplex { d: usize },
    Cube { d: usize },
    Cross { d: usize },
    Cyclic { d: usize, n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelArg {
    Vertices,
    Facets,
    Dim,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

impl From<LabelArg> for LabelMode {
    fn from(l: LabelArg) -> Self {
        match l {
            LabelArg::Vertices => LabelMode::Vertices,
            LabelArg::Facets => LabelMode::Facets,
            LabelArg::Dim => LabelMode::Dim,
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn write_output(out: &OutputArgs, text: &str) -> Result<()> {
    match &out.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn summary(inc: &Incidence, phi: usize, arcs: Option<usize>) {
    let arcs = arcs.map_or_else(|| "n/a".to_string(), |a| a.to_string());
    eprintln!(
        "n={} m={} alpha={} phi={} arcs={}",
        inc.vertex_count(),
        inc.facet_count(),
        inc.alpha(),
        phi,
        arcs
    );
}

fn cmd_build(args: &BuildArgs) -> Result<()> {
    let inc = parse_incidence(&read_input(&args.input)?)?;
    let format = Format::from(args.output.format);

    if args.faces_only {
        let mut faces = Vec::new();
        enumerate_faces_dfs(&inc, |face, dim| faces.push((dim, face.to_vec())))?;
        let text = match format {
            Format::Text => {
                let mut s = String::new();
                for (dim, face) in &faces {
                    let list: Vec<String> = face.iter().map(ToString::to_string).collect();
                    s.push_str(&dim.to_string());
                    if !list.is_empty() {
                        s.push(' ');
                        s.push_str(&list.join(" "));
                    }
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let items: Vec<_> = faces
                    .iter()
                    .map(|(dim, face)| serde_json::json!({ "dim": dim, "vertices": face }))
                    .collect();
                serde_json::to_string(&items)? + "\n"
            }
        };
        write_output(&args.output, &text)?;
        summary(&inc, faces.len(), None);
        return Ok(());
    }

    let opts = BuildOptions {
        restrict: !args.no_restrict,
        auto_dualize: !args.no_dualize,
    };
    let diagram = if let Some(k) = args.k_skeleton {
        build_k_skeleton(&inc, k, opts.restrict)?
    } else if args.simple {
        let d = simple_dimension(&inc).ok_or_else(|| {
            anyhow::anyhow!("--simple: vertices lie on different numbers of facets")
        })?;
        build_simple_lattice(&inc, d)?
    } else if args.simplicial {
        let d = simplicial_dimension(&inc)
            .ok_or_else(|| anyhow::anyhow!("--simplicial: facets have different sizes"))?;
        build_simplicial_lattice(&inc, d)?
    } else {
        build_face_lattice(&inc, &opts)?
    };
    let text = write_face_lattice(&diagram, &inc, args.labels.into(), format);
    write_output(&args.output, &text)?;
    summary(&inc, diagram.node_count(), Some(diagram.arc_count()));
    Ok(())
}

fn cmd_om(args: &OmArgs) -> Result<()> {
    let cocircuits = parse_cocircuits(&read_input(&args.input)?)?;
    let lattice = build_covector_lattice(&cocircuits)?;
    write_output(
        &args.output,
        &write_covector_lattice(&lattice, args.output.format.into()),
    )?;
    eprintln!(
        "n={} k={} phi={} arcs={}",
        cocircuits.len(),
        cocircuits.ground_size(),
        lattice.node_count(),
        lattice.arc_count()
    );
    Ok(())
}

fn cmd_gen(kind: &GenKind) -> Result<()> {
    let inc = match *kind {
        GenKind::Simplex { d } => oracle::gen_simplex(d)?,
        GenKind::Cube { d } => oracle::gen_cube(d)?,
        GenKind::Cross { d } => oracle::gen_cross(d)?,
        GenKind::Cyclic { d, n } => oracle::gen_cyclic(d, n)?,
    };
    let mut stdout = io::stdout().lock();
    write!(stdout, "{inc}")?;
    stdout.flush()?;
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<facelattice::Error>() {
        Some(facelattice::Error::Contract(_)) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Om(args) => cmd_om(args),
        Command::Gen { kind } => cmd_gen(kind),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
