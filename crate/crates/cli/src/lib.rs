//! Command-line driver. [`run`] parses arguments, reads files, and writes
//! results to the given streams, returning the process exit status:
//!
//! | status | meaning |
//! |---|---|
//! | 0 | success, or the checked property holds |
//! | 1 | the property fails, no witness exists, or an input violates a precondition |
//! | 2 | usage error, unreadable or malformed input |
//! | 3 | the request exceeds a search bound |

pub mod format;

use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rectangularity::construct::{
    constant_groupoid, coset_construction, evans_central, group_factorization_pair, left_extension,
    left_split_extension, partition_construction, rectangular_band, right_extension,
    right_split_extension, simple_blow_up,
};
use rectangularity::enumerate::{
    count_rectangular, enumerate_band_blow_ups, enumerate_central, enumerate_rectangular, Mode,
};
use rectangularity::isotopy::{are_isotopic, find_transversal};
use rectangularity::properties::{
    has_blackburn, is_full, is_matrix_symmetric, is_maximal, is_partial_latin, is_partial_p1,
    p1_violation, p2_violation, rectangle_violation, Law,
};
use rectangularity::transform::{
    graph_pair_to_groupoid, graph_pair_to_matrices, groupoid_to_graph_pair, matrices_to_graph_pair,
};
use rectangularity::{Error, FiniteGroup, GraphPair, Groupoid, Mapping, Permutation};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "rectangularity",
    version,
    about = "Rectangular groupoids, P2 graph pairs and P4 matrix pairs"
)]
struct Cli {
    /// Display symbols, rows and columns from 1 (files stay 0-based).
    #[arg(long, global = true)]
    one_based: bool,

    /// Worker threads for enumeration; 0 uses every core. Output does not
    /// depend on this value.
    #[arg(long, global = true, default_value_t = 0, value_name = "N")]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test a property of a table, graph pair, matrix pair or partial array.
    Check {
        #[arg(long, value_enum)]
        property: Property,
        file: PathBuf,
    },
    /// Translate between the groupoid, graph-pair and matrix-pair models.
    Convert {
        #[arg(long, value_enum)]
        from: Model,
        #[arg(long, value_enum)]
        to: Model,
        file: PathBuf,
    },
    /// Build a groupoid or graph pair.
    Construct {
        #[command(subcommand)]
        what: Construction,
    },
    /// Count or list rectangular, central or blown-up groupoids.
    Enumerate(EnumerateArgs),
    /// Find an isotopy from the first table to the second.
    Isotopy { first: PathBuf, second: PathBuf },
    /// Find a transversal: one cell per row and column, all symbols distinct.
    Transversal { file: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Property {
    Rectangular,
    P1,
    P2,
    P4,
    Central,
    Idempotent,
    Associative,
    MatrixSymmetric,
    UndirectedEq,
    Partitioned,
    DuallyPartitioned,
    Full,
    Maximal,
    PartialP1,
    PartialLatin,
    Blackburn,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Model {
    Groupoid,
    Graphpair,
    Matrices,
}

#[derive(Subcommand, Debug)]
enum Construction {
    /// Every product equals one element.
    Constant {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        element: usize,
    },
    /// The central groupoid of order m^2 given by (x, y) -> (x mod m) m + y div m.
    Evans {
        #[arg(long)]
        m: usize,
    },
    /// Rectangular band on n x m, element (i, j) numbered i m + j.
    Band {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Add an element behaving like ELEMENT.
    Blowup {
        #[arg(long)]
        element: usize,
        file: PathBuf,
    },
    /// Left extension at an idempotent element.
    LeftExt {
        #[arg(long)]
        element: usize,
        file: PathBuf,
    },
    /// Right extension at an idempotent element.
    RightExt {
        #[arg(long)]
        element: usize,
        file: PathBuf,
    },
    /// Left split extension of A by B; F maps A into B, G maps B into A.
    LeftSplit(SplitArgs),
    /// Right split extension of A by B; F maps A into B, G maps B into A.
    RightSplit(SplitArgs),
    /// Graph pair of a partition system file.
    Partition { file: PathBuf },
    /// Graph pair of an exact factorization of a group into H and K.
    Factorization {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
    },
    /// Graph pair from a subgroup H and left coset representatives T.
    Coset {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<usize>,
    },
}

#[derive(Args, Debug)]
struct SplitArgs {
    a: PathBuf,
    b: PathBuf,
    #[arg(long, value_delimiter = ',', required = true)]
    f: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    g: Vec<usize>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GroupArgs {
    /// Direct product of cyclic groups, e.g. `6` or `2,3`.
    #[arg(long, value_delimiter = ',')]
    cyclic: Option<Vec<usize>>,
    /// Symmetric group on K points.
    #[arg(long, value_name = "K")]
    symmetric: Option<usize>,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    class: Class,
    #[arg(long)]
    order: usize,
    /// Second band dimension for band-blowups.
    #[arg(long)]
    m: Option<usize>,
    /// Defaults to iso for rectangular and central, labeled for band-blowups.
    #[arg(long, value_enum)]
    up_to: Option<UpTo>,
    /// Raise the central bound to order 16.
    #[arg(long)]
    long_run: bool,
    #[arg(long, value_enum, default_value_t = Emit::Count)]
    emit: Emit,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Class {
    Rectangular,
    Central,
    BandBlowups,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum UpTo {
    Labeled,
    Iso,
    Isotopy,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Emit {
    Count,
    Tables,
    Json,
}

/// Why a command stopped early.
enum Failure {
    Usage(String),
    Input(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(format!("write failed: {e}"))
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one command line (program name first) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_TRUE
            };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return status;
        }
    };
    let ctx = Ctx {
        offset: usize::from(cli.one_based),
        jobs: cli.jobs,
    };
    let result = match cli.command {
        Command::Check { property, file } => ctx.check(property, &file, out),
        Command::Convert { from, to, file } => ctx.convert(from, to, &file, out),
        Command::Construct { what } => ctx.construct(what, out),
        Command::Enumerate(args) => ctx.enumerate(&args, out, err),
        Command::Isotopy { first, second } => ctx.isotopy(&first, &second, out),
        Command::Transversal { file } => ctx.transversal(&file, out),
    };
    match result {
        Ok(status) => status,
        Err(failure) => {
            let (status, message) = match failure {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Input(m) => (EXIT_USAGE, m),
                Failure::Core(e @ Error::Capacity { .. }) => (EXIT_CAPACITY, e.to_string()),
                Failure::Core(e) => (EXIT_FALSE, e.to_string()),
            };
            let _ = writeln!(err, "error: {message}");
            status
        }
    }
}

struct Ctx {
    offset: usize,
    jobs: usize,
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_file<T>(
    path: &Path,
    parse: fn(&str) -> Result<T, format::ParseError>,
) -> Result<T, Failure> {
    parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn table(path: &Path) -> Result<Groupoid, Failure> {
    parse_file(path, format::parse_table)
}

fn join<T: Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

impl Ctx {
    fn shift(&self, x: usize) -> usize {
        x + self.offset
    }

    fn tuple(&self, xs: &[usize]) -> String {
        format!("({})", join(xs.iter().map(|&x| self.shift(x)), ", "))
    }

    fn perm(&self, p: &Permutation) -> String {
        join(p.images().iter().map(|&x| self.shift(x)), " ")
    }

    /// `true`, or `false` followed by an optional witness line.
    fn verdict(&self, out: &mut dyn Write, witness: Option<Option<String>>) -> Outcome {
        match witness {
            None => {
                writeln!(out, "true")?;
                Ok(EXIT_TRUE)
            }
            Some(w) => {
                writeln!(out, "false")?;
                if let Some(w) = w {
                    writeln!(out, "witness: {w}")?;
                }
                Ok(EXIT_FALSE)
            }
        }
    }

    fn check(&self, property: Property, file: &Path, out: &mut dyn Write) -> Outcome {
        let law = |law: Law| -> Result<Option<Option<String>>, Failure> {
            let g = table(file)?;
            Ok(law.counterexample(&g).map(|t| Some(self.tuple(&t))))
        };
        let flag = |holds: bool| if holds { None } else { Some(None) };
        let witness = match property {
            Property::Rectangular => rectangle_violation(&table(file)?).map(|v| {
                Some(format!(
                    "symbol {} spans cell {} but it holds another symbol",
                    self.shift(v.symbol),
                    self.tuple(&[v.row, v.col])
                ))
            }),
            Property::P1 => p1_violation(&table(file)?).map(|(x, y)| {
                Some(format!(
                    "symbols {} and {} share a row and a column",
                    self.shift(x),
                    self.shift(y)
                ))
            }),
            Property::P2 => {
                let gp = parse_file(file, format::parse_graph_pair)?;
                p2_violation(&gp).map(|v| {
                    Some(format!(
                        "{} red-green paths from {} to {}",
                        v.count,
                        self.shift(v.from),
                        self.shift(v.to)
                    ))
                })
            }
            Property::P4 => {
                let (a, b) = parse_file(file, format::parse_matrix_pair)?;
                a.product_not_ones(&b)?
                    .map(|(i, j, c)| Some(format!("(AB){} = {c}", self.tuple(&[i, j]))))
            }
            Property::Central => law(Law::Central)?,
            Property::Idempotent => law(Law::Idempotent)?,
            Property::Associative => law(Law::Associative)?,
            Property::UndirectedEq => law(Law::UndirectedEq)?,
            Property::Partitioned => law(Law::Partitioned)?,
            Property::DuallyPartitioned => law(Law::DuallyPartitioned)?,
            Property::MatrixSymmetric => flag(is_matrix_symmetric(&table(file)?)),
            Property::Full => flag(is_full(&table(file)?)),
            Property::Maximal => flag(is_maximal(&table(file)?)),
            Property::PartialP1 => flag(is_partial_p1(&parse_file(file, format::parse_partial)?)),
            Property::PartialLatin => {
                flag(is_partial_latin(&parse_file(file, format::parse_partial)?))
            }
            Property::Blackburn => flag(has_blackburn(&parse_file(file, format::parse_partial)?)),
        };
        self.verdict(out, witness)
    }

    fn convert(&self, from: Model, to: Model, file: &Path, out: &mut dyn Write) -> Outcome {
        let gp: GraphPair = match from {
            Model::Groupoid => {
                let g = table(file)?;
                if to == Model::Groupoid {
                    out.write_all(format::render_table(&g, self.offset).as_bytes())?;
                    return Ok(EXIT_TRUE);
                }
                groupoid_to_graph_pair(&g)
            }
            Model::Graphpair => parse_file(file, format::parse_graph_pair)?,
            Model::Matrices => {
                let (a, b) = parse_file(file, format::parse_matrix_pair)?;
                matrices_to_graph_pair(&a, &b)?
            }
        };
        let text = match to {
            Model::Groupoid => format::render_table(&graph_pair_to_groupoid(&gp)?, self.offset),
            Model::Graphpair => format::render_graph_pair(&gp),
            Model::Matrices => {
                let (a, b) = graph_pair_to_matrices(&gp);
                format::render_matrix_pair(&a, &b)
            }
        };
        out.write_all(text.as_bytes())?;
        Ok(EXIT_TRUE)
    }

    fn construct(&self, what: Construction, out: &mut dyn Write) -> Outcome {
        let text = match what {
            Construction::Constant { order, element } => {
                self.render(&constant_groupoid(order, element)?)
            }
            Construction::Evans { m } => self.render(&evans_central(m)?),
            Construction::Band { n, m } => self.render(&rectangular_band(n, m)?),
            Construction::Blowup { element, file } => {
                self.render(&simple_blow_up(&table(&file)?, element)?)
            }
            Construction::LeftExt { element, file } => {
                self.render(&left_extension(&table(&file)?, element)?)
            }
            Construction::RightExt { element, file } => {
                self.render(&right_extension(&table(&file)?, element)?)
            }
            Construction::LeftSplit(s) => {
                let (a, b, f, g) = split_inputs(&s)?;
                self.render(&left_split_extension(&a, &b, &f, &g)?)
            }
            Construction::RightSplit(s) => {
                let (a, b, f, g) = split_inputs(&s)?;
                self.render(&right_split_extension(&a, &b, &f, &g)?)
            }
            Construction::Partition { file } => {
                let ps = parse_file(&file, format::parse_partition_system)?;
                format::render_graph_pair(&partition_construction(&ps))
            }
            Construction::Factorization { group, h, k } => {
                format::render_graph_pair(&group_factorization_pair(&group.build()?, &h, &k)?)
            }
            Construction::Coset { group, h, t } => {
                format::render_graph_pair(&coset_construction(&group.build()?, &h, &t)?)
            }
        };
        out.write_all(text.as_bytes())?;
        Ok(EXIT_TRUE)
    }

    fn render(&self, g: &Groupoid) -> String {
        format::render_table(g, self.offset)
    }

    fn enumerate(&self, args: &EnumerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
        let n = args.order;
        let up_to = args.up_to.unwrap_or(match args.class {
            Class::BandBlowups => UpTo::Labeled,
            _ => UpTo::Iso,
        });
        let (count, tables, mode) = match args.class {
            Class::Rectangular => {
                let mode = match up_to {
                    UpTo::Labeled => Mode::Labeled,
                    UpTo::Iso => Mode::Isomorphism,
                    UpTo::Isotopy => Mode::Isotopy,
                };
                if mode == Mode::Labeled && args.emit == Emit::Count {
                    // counting reaches one order further than listing
                    (count_rectangular(n, self.jobs)?, Vec::new(), up_to)
                } else {
                    let census = enumerate_rectangular(n, mode, self.jobs)?;
                    (census.count, census.tables, up_to)
                }
            }
            Class::Central => {
                if up_to != UpTo::Iso {
                    return Err(Failure::Usage(
                        "central groupoids are enumerated up to isomorphism only (--up-to iso)"
                            .into(),
                    ));
                }
                let census = enumerate_central(n, args.long_run, self.jobs)?;
                if let Some(d) = &census.diagnostic {
                    writeln!(err, "note: {d}")?;
                }
                (census.count, census.tables, up_to)
            }
            Class::BandBlowups => {
                if up_to != UpTo::Labeled {
                    return Err(Failure::Usage(
                        "band blow-ups are counted labeled only (--up-to labeled)".into(),
                    ));
                }
                if args.emit == Emit::Tables {
                    return Err(Failure::Usage(
                        "band blow-ups are counted, not listed (--emit count or json)".into(),
                    ));
                }
                let m = args
                    .m
                    .ok_or_else(|| Failure::Usage("band-blowups needs --m".into()))?;
                (enumerate_band_blow_ups(n, m)?, Vec::new(), up_to)
            }
        };
        match args.emit {
            Emit::Count => writeln!(out, "{count}")?,
            Emit::Tables => {
                let blocks: Vec<String> = tables.iter().map(|g| self.render(g)).collect();
                out.write_all(blocks.join("\n").as_bytes())?;
            }
            Emit::Json => {
                let report = Report {
                    order: n,
                    m: args.m.filter(|_| args.class == Class::BandBlowups),
                    class: args
                        .class
                        .to_possible_value()
                        .expect("named")
                        .get_name()
                        .to_string(),
                    mode: mode
                        .to_possible_value()
                        .expect("named")
                        .get_name()
                        .to_string(),
                    count,
                    tables: tables.iter().map(|g| g.entries()).collect(),
                };
                let text = serde_json::to_string(&report).expect("plain data");
                writeln!(out, "{text}")?;
            }
        }
        Ok(EXIT_TRUE)
    }

    fn isotopy(&self, first: &Path, second: &Path, out: &mut dyn Write) -> Outcome {
        let g = table(first)?;
        let h = table(second)?;
        match are_isotopic(&g, &h)? {
            Some(t) => {
                writeln!(out, "alpha: {}", self.perm(&t.alpha))?;
                writeln!(out, "beta: {}", self.perm(&t.beta))?;
                writeln!(out, "gamma: {}", self.perm(&t.gamma))?;
                Ok(EXIT_TRUE)
            }
            None => {
                writeln!(out, "none")?;
                Ok(EXIT_FALSE)
            }
        }
    }

    fn transversal(&self, file: &Path, out: &mut dyn Write) -> Outcome {
        match find_transversal(&table(file)?) {
            Some(t) => {
                let cells = t.cells().iter().map(|&(r, c)| self.tuple(&[r, c]));
                writeln!(out, "{}", join(cells, " "))?;
                Ok(EXIT_TRUE)
            }
            None => {
                writeln!(out, "none")?;
                Ok(EXIT_FALSE)
            }
        }
    }
}

/// JSON census record; tables are flattened row-major and always 0-based.
#[derive(Serialize)]
struct Report {
    order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    class: String,
    mode: String,
    count: u64,
    tables: Vec<Vec<usize>>,
}

impl GroupArgs {
    fn build(&self) -> Result<FiniteGroup, Failure> {
        if let Some(k) = self.symmetric {
            return Ok(FiniteGroup::symmetric(k)?);
        }
        let factors = self.cyclic.as_deref().unwrap_or_default();
        let mut it = factors.iter();
        let first = it
            .next()
            .ok_or_else(|| Failure::Usage("--cyclic needs at least one factor".into()))?;
        let mut group = FiniteGroup::cyclic(*first)?;
        for &m in it {
            group = group.direct_product(&FiniteGroup::cyclic(m)?)?;
        }
        Ok(group)
    }
}

fn split_inputs(s: &SplitArgs) -> Result<(Groupoid, Groupoid, Mapping, Mapping), Failure> {
    let a = table(&s.a)?;
    let b = table(&s.b)?;
    let f = Mapping::new(b.order(), s.f.clone())?;
    let g = Mapping::new(a.order(), s.g.clone())?;
    Ok((a, b, f, g))
}
