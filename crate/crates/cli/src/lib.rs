//! Command-line front end for `regenum`.

mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use regenum::enumerate::Context;
use regenum::groups::named;
use regenum::homcount::Method;
use regenum::io::{data_dir, load_group, load_named, load_table};
use regenum::{Error, Limits, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "regenum", version, about = "Count and list regular maps, hypermaps and surface coverings")]
pub struct Cli {
    /// Directory holding groups/ and tables/ (defaults to $REGENUM_DATA or ./data).
    #[arg(long, global = true)]
    data: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true)]
    lattice_cap: Option<usize>,
    #[arg(long, global = true)]
    closure_cap: Option<usize>,
    #[arg(long, global = true)]
    oracle_budget: Option<u128>,
    #[arg(long, global = true)]
    cover_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct GroupArg {
    /// A shipped group name (A5, L2_7, ...), a constructor such as `psl2:13`
    /// or `dihedral:6`, or a path to a group file.
    #[arg(long)]
    group: String,
    /// Character table file, when the group is given by path or constructor.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct ObjectArgs {
    #[command(flatten)]
    group: GroupArg,
    /// Parent preset such as H+, M+, M, M:5, H, triangle:2,3,7, genus2.
    #[arg(long)]
    parent: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Basic data about a group.
    Group(GroupArg),
    /// Subgroups with Möbius values.
    Lattice(GroupArg),
    /// Number of homomorphisms from the parent group.
    Homcount {
        #[command(flatten)]
        args: ObjectArgs,
        #[arg(long, default_value = "auto")]
        method: String,
        /// Count only images of exactly the stated periods.
        #[arg(long)]
        smooth: bool,
    },
    /// Regular objects with the given automorphism group.
    Enumerate {
        #[command(flatten)]
        args: ObjectArgs,
        #[arg(long, conflicts_with = "list")]
        count_only: bool,
        #[arg(long)]
        list: bool,
        #[arg(long, default_value = "auto")]
        method: String,
    },
    /// Invariants of every regular object.
    Objects(ObjectArgs),
    /// Orbits of the operation group on regular objects.
    Orbits {
        #[command(flatten)]
        args: ObjectArgs,
        /// `omega`, `hj:K`, or both joined by `+`.
        #[arg(long, default_value = "omega")]
        ops: String,
    },
    /// The universal cover of all regular objects.
    Universal(ObjectArgs),
    /// Reference checks.
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
        /// Skip the largest linear group.
        #[arg(long)]
        quick: bool,
        /// Run a single check by number.
        #[arg(long)]
        check: Option<u8>,
    },
}

/// Runs the command line and returns the process exit status: 0 on success,
/// 1 on usage or input errors, 2 when a consistency check fails.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                1
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    let outcome = match cli.threads {
        Some(n) if n > 1 => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Error::Argument(e.to_string())),
        },
        _ => execute(&cli),
    };
    match outcome {
        Ok((report, failed)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &report).map_err(|source| Error::Io { path: path.clone(), source }),
                None => stdout.write_all(report.as_bytes()).map_err(|source| Error::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                }),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return 1;
            }
            if failed {
                2
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_consistency() {
                2
            } else {
                1
            }
        }
    }
}

impl Cli {
    fn limits(&self) -> Limits {
        let mut l = if self.threads == Some(1) { Limits::sequential() } else { Limits::default() };
        if let Some(c) = self.lattice_cap {
            l.lattice_cap = c;
        }
        if let Some(c) = self.closure_cap {
            l.closure_cap = c;
        }
        if let Some(c) = self.oracle_budget {
            l.oracle_budget = c;
        }
        if let Some(c) = self.cover_cap {
            l.cover_closure_cap = c;
        }
        l
    }

    fn data(&self) -> PathBuf {
        self.data.clone().unwrap_or_else(data_dir)
    }

    fn context(&self, arg: &GroupArg) -> Result<Context> {
        let limits = self.limits();
        let spec = arg.group.as_str();
        let explicit_table = arg.table.as_deref().map(load_table).transpose()?;
        let constructed = match spec.split_once(':') {
            Some(("cyclic", n)) => Some(named::cyclic(size(n)?)?),
            Some(("dihedral", n)) => Some(named::dihedral(size(n)?)?),
            Some(("symmetric", n)) => Some(named::symmetric(size(n)?)?),
            Some(("alternating", n)) => Some(named::alternating(size(n)?)?),
            Some(("psl2", n)) => Some(named::psl2(size(n)?)?),
            _ => None,
        };
        let (g, table) = if let Some(g) = constructed {
            (g, explicit_table)
        } else if spec.ends_with(".json") || spec.contains('/') {
            (load_group(std::path::Path::new(spec), &limits)?, explicit_table)
        } else {
            let (g, t) = load_named(&self.data(), spec, &limits)?;
            (g, explicit_table.or(t))
        };
        if let Some(t) = &table {
            t.bind(&g)?;
        }
        Ok(Context::new(g, table, limits))
    }
}

fn size(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Argument(format!("bad size {s:?}")))
}

fn method(s: &str) -> Result<Method> {
    s.parse()
}

/// The report text and whether any reference check failed.
fn execute(cli: &Cli) -> Result<(String, bool)> {
    let f = cli.format;
    let text = match &cli.command {
        Command::Group(arg) => report::group(&cli.context(arg)?, f)?,
        Command::Lattice(arg) => report::lattice(&cli.context(arg)?, f)?,
        Command::Homcount { args, method: m, smooth } => {
            report::homcount(&cli.context(&args.group)?, &args.parent, method(m)?, *smooth, f)?
        }
        Command::Enumerate { args, count_only, list: _, method: m } => {
            report::enumerate(&cli.context(&args.group)?, &args.parent, *count_only, method(m)?, f)?
        }
        Command::Objects(args) => report::objects(&cli.context(&args.group)?, &args.parent, f)?,
        Command::Orbits { args, ops } => report::orbits(&cli.context(&args.group)?, &args.parent, ops, f)?,
        Command::Universal(args) => report::universal(&cli.context(&args.group)?, &args.parent, f)?,
        Command::Verify { suite, quick, check } => {
            if suite != "paper" {
                return Err(Error::Argument(format!("unknown suite {suite:?}")));
            }
            let opts = regenum::verify::SuiteOptions {
                quick: *quick,
                limits: cli.limits(),
                data: cli.data(),
            };
            return report::verify(&opts, *check, f);
        }
    };
    Ok((text, false))
}
