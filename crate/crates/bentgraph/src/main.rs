use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bentgraph::core::anf::render;
use bentgraph::core::catalog;
use bentgraph::core::codes::code_of;
use bentgraph::core::equivalence::{classify_et_class, Classification, MatrixKind};
use bentgraph::core::graph::{
    cayley_graph, clique_polynomial, graph6_decode, rank2, srg_params, DenseGraph,
};
use bentgraph::core::sequences::{sigma, tau};
use bentgraph::core::{parse_anf, BooleanFunction, Error};
use bentgraph::export::{self, parse_matrix_kind};
use bentgraph::ingest::{parse_cast128_sboxes, sbox_bit_function, SBoxes};
use bentgraph::{archive, verify};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bentgraph", version, about = "Extended-Cayley classification of bent functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FnInput {
    /// ANF text, e.g. "x0*x1 + x2*x3"
    #[arg(long, requires = "dim", conflicts_with = "name")]
    anf: Option<String>,
    /// Number of variables
    #[arg(long)]
    dim: Option<usize>,
    /// Catalog name, e.g. f6,3
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args)]
struct GraphInput {
    #[command(flatten)]
    function: FnInput,
    /// A graph in graph6 format instead of a Cayley graph
    #[arg(long, conflicts_with_all = ["anf", "name"])]
    g6: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sequence {
    Sigma,
    Tau,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Quadratic,
    DillonSchatz,
    RGraph,
    Sdp,
    SigmaTau,
    Cast128,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the ET class of a bent function and write an archive
    Classify {
        #[command(flatten)]
        input: FnInput,
        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Archive output path
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the bent-class summary as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Print the class summary stored in an archive
    Summary {
        #[arg(long)]
        archive: PathBuf,
        #[arg(long, default_value = "bent")]
        matrix: String,
        /// Print CSV instead of a table
        #[arg(long)]
        csv: bool,
    },
    /// Write one archive matrix as a binary PGM image
    Plot {
        #[arg(long)]
        archive: PathBuf,
        /// bent, dual or wc
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Report whether a function is bent
    BentCheck(FnInput),
    /// Print the ANF of the dual
    Dual(FnInput),
    /// Print the Walsh–Hadamard spectrum
    Wht(FnInput),
    /// Print the ANF of a function given as an ANF or a truth table
    Anf {
        #[command(flatten)]
        input: FnInput,
        /// Truth table as a string of 0/1, entry x at position x
        #[arg(long, conflicts_with_all = ["anf", "name"])]
        table: Option<String>,
    },
    /// Describe the linear code spanned by the support
    Code(FnInput),
    /// Strongly regular parameters of a graph
    Srg(GraphInput),
    /// Clique polynomial of a graph
    CliquePoly(GraphInput),
    /// GF(2) rank of the adjacency matrix
    Rank2(GraphInput),
    /// Print sigma_m or tau_m
    Sequence { kind: Sequence, m: usize },
    /// Bit functions of the CAST-128 S-boxes
    Cast128 {
        /// S-box tables in RFC 2144 layout
        #[arg(long)]
        file: PathBuf,
        #[arg(long = "box", default_value_t = 1)]
        sbox: usize,
        #[arg(long, default_value_t = 0)]
        bit: usize,
        /// Check all 256 bit functions for bentness
        #[arg(long)]
        check_bent: bool,
    },
    /// Run a theorem suite
    Verify {
        suite: Suite,
        /// Largest m (quadratic, sigma-tau)
        #[arg(long, default_value_t = 3)]
        m: usize,
        /// Largest m for the exhaustive quadratic witness checks (default: m)
        #[arg(long)]
        witness_m: Option<usize>,
        /// Dimension (r-graph) or largest dimension (dillon-schatz, sdp)
        #[arg(long, default_value_t = 6)]
        dim: usize,
        /// Random ET members per representative (r-graph)
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// S-box file (cast128)
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Verification(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::Verification(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::VariableOutOfRange { .. } | Error::MalformedGraph6(_) => {
                Failure::Usage(e.to_string())
            }
            Error::NotBent | Error::NotBentWeight { .. } => Failure::Domain("not bent".into()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<archive::ArchiveError> for Failure {
    fn from(e: archive::ArchiveError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<bentgraph::ingest::IngestError> for Failure {
    fn from(e: bentgraph::ingest::IngestError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn io_error(path: &Path, e: std::io::Error) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

impl FnInput {
    fn load(&self) -> Result<(BooleanFunction, String), Failure> {
        if let Some(name) = &self.name {
            let named =
                catalog::by_name(name).ok_or_else(|| Failure::Usage(format!("unknown function {name:?}")))?;
            return Ok((named.function(), named.anf.to_string()));
        }
        match (&self.anf, self.dim) {
            (Some(text), Some(n)) => {
                let f = parse_anf(text, n)?;
                let anf = render(&f);
                Ok((f, anf))
            }
            _ => Err(Failure::Usage("give --anf with --dim, or --name".into())),
        }
    }

    fn bent(&self) -> Result<BooleanFunction, Failure> {
        let (f, _) = self.load()?;
        if !f.is_bent() {
            return Err(Failure::Domain("not bent".into()));
        }
        Ok(f)
    }
}

impl GraphInput {
    fn load(&self) -> Result<DenseGraph, Failure> {
        match &self.g6 {
            Some(s) => Ok(graph6_decode(s)?),
            None => Ok(cayley_graph(&self.function.load()?.0)?),
        }
    }
}

fn matrix_kind(name: &str) -> Result<MatrixKind, Failure> {
    parse_matrix_kind(name).ok_or_else(|| Failure::Usage(format!("unknown matrix {name:?}; use bent, dual or wc")))
}

fn load_sboxes(path: &Path) -> Result<SBoxes, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    Ok(parse_cast128_sboxes(&text)?)
}

fn print_summary(cl: &Classification) -> CmdResult {
    println!("{} variables, {} graphs", cl.num_vars(), cl.graphs().len());
    println!("bent classes: {}", cl.bent_class_count());
    print!("{}", export::table(&cl.descriptors(MatrixKind::Bent)?));
    println!("dual classes: {}", cl.dual_class_count());
    print!("{}", export::table(&cl.descriptors(MatrixKind::Dual)?));
    Ok(())
}

fn report(r: verify::Report) -> CmdResult {
    println!("{r}");
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Verification("verification failed".into()))
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Classify {
            input,
            workers,
            out,
            csv,
        } => {
            let f = input.bent()?;
            let cl = classify_et_class(&f, workers)?;
            if let Some(path) = &out {
                archive::save(&cl, path).map_err(|e| io_error(path, e))?;
            }
            if let Some(path) = &csv {
                let text = export::csv(&cl.descriptors(MatrixKind::Bent)?);
                fs::write(path, text).map_err(|e| io_error(path, e))?;
            }
            print_summary(&cl)
        }
        Command::Summary { archive, matrix, csv } => {
            let kind = matrix_kind(&matrix)?;
            let cl = archive::load(&archive)?;
            if kind == MatrixKind::WeightClass {
                return Err(Failure::Usage("summaries exist for bent and dual only".into()));
            }
            let ds = cl.descriptors(kind)?;
            print!("{}", if csv { export::csv(&ds) } else { export::table(&ds) });
            Ok(())
        }
        Command::Plot { archive, matrix, out } => {
            let kind = matrix_kind(&matrix)?;
            let cl = archive::load(&archive)?;
            fs::write(&out, export::matrix_pgm(&cl, kind)).map_err(|e| io_error(&out, e))
        }
        Command::BentCheck(input) => {
            let f = input.bent()?;
            println!("bent, weight {}, weight class {}", f.weight(), f.weight_class()?);
            Ok(())
        }
        Command::Dual(input) => {
            println!("{}", render(&input.bent()?.dual()?));
            Ok(())
        }
        Command::Wht(input) => {
            let (f, _) = input.load()?;
            let values: Vec<String> = f.walsh_hadamard().values().iter().map(i32::to_string).collect();
            println!("{}", values.join(" "));
            Ok(())
        }
        Command::Anf { input, table } => {
            let f = match table {
                Some(t) => {
                    let bits = t
                        .chars()
                        .filter(|c| !c.is_whitespace())
                        .map(|c| match c {
                            '0' => Ok(0),
                            '1' => Ok(1),
                            _ => Err(Failure::Usage(format!("bad truth-table digit {c:?}"))),
                        })
                        .collect::<Result<Vec<u8>, _>>()?;
                    BooleanFunction::from_bits(&bits)?
                }
                None => input.load()?.0,
            };
            println!("{}", render(&f));
            Ok(())
        }
        Command::Code(input) => {
            let (f, _) = input.load()?;
            let code = code_of(&f)?;
            println!("length {}", code.length());
            println!("dimension {}", code.dimension());
            let weights: Vec<String> = code.nonzero_weights()?.iter().map(usize::to_string).collect();
            println!("nonzero weights {}", weights.join(" "));
            println!("projective {}", code.is_projective());
            Ok(())
        }
        Command::Srg(input) => {
            let g = input.load()?;
            match srg_params(&g) {
                Some(p) => println!("{p}"),
                None if g.is_complete() => println!("complete (K{})", g.vertex_count()),
                None => println!("not strongly regular"),
            }
            Ok(())
        }
        Command::CliquePoly(input) => {
            let p = clique_polynomial(&input.load()?);
            println!("{p}");
            Ok(())
        }
        Command::Rank2(input) => {
            println!("{}", rank2(&input.load()?));
            Ok(())
        }
        Command::Sequence { kind, m } => {
            if m == 0 || 2 * m > 16 {
                return Err(Failure::Domain(format!("m = {m} out of range 1..=8")));
            }
            let f = match kind {
                Sequence::Sigma => sigma(m),
                Sequence::Tau => tau(m),
            };
            println!("{}", render(&f));
            Ok(())
        }
        Command::Cast128 {
            file,
            sbox,
            bit,
            check_bent,
        } => {
            let tables = load_sboxes(&file)?;
            if check_bent {
                let bent = (1..=8)
                    .flat_map(|s| (0..32).map(move |b| (s, b)))
                    .filter(|&(s, b)| sbox_bit_function(&tables, s, b).is_ok_and(|f| f.is_bent()))
                    .count();
                println!("{bent}/256 bent");
                if bent != 256 {
                    return Err(Failure::Verification("not every bit function is bent".into()));
                }
                return Ok(());
            }
            let f = sbox_bit_function(&tables, sbox, bit).map_err(|e| Failure::Domain(e.to_string()))?;
            println!("{}", render(&f));
            Ok(())
        }
        Command::Verify {
            suite,
            m,
            witness_m,
            dim,
            samples,
            seed,
            workers,
            file,
        } => {
            let r = match suite {
                Suite::Quadratic => {
                    let wm = witness_m.unwrap_or(m);
                    if m > 4 || wm > 8 {
                        return Err(Failure::Domain("quadratic suite supports m <= 4 and witnesses up to m = 8".into()));
                    }
                    verify::quadratic(m, wm, workers, seed)?
                }
                Suite::DillonSchatz => verify::dillon_schatz(dim)?,
                Suite::RGraph => verify::r_graph(dim, samples, seed)?,
                Suite::Sdp => verify::sdp(dim)?,
                Suite::SigmaTau => {
                    if m == 0 || m > 8 {
                        return Err(Failure::Domain(format!("m = {m} out of range 1..=8")));
                    }
                    verify::sigma_tau(m)?
                }
                Suite::Cast128 => {
                    let path = file.ok_or_else(|| Failure::Usage("cast128 needs --file".into()))?;
                    verify::cast128(&load_sboxes(&path)?)?
                }
            };
            report(r)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("bentgraph: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
