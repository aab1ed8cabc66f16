use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use octa_core::io::{parse_off, parse_xpc, write_obj, write_off, write_xpc};
use octa_core::subdivide::{schlegel_24cell_reference, subdivide_tetrahedron, TetraFlag};
use octa_core::{fixtures, octahedralize, verify_complex, Error, ValidationLevel};

#[derive(Parser)]
#[command(
    name = "octa",
    version,
    about = "Exact octahedral subdivisions of balanced simplicial 3-polytopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Fast,
    Full,
}

impl From<Level> for ValidationLevel {
    fn from(l: Level) -> Self {
        match l {
            Level::Fast => ValidationLevel::Fast,
            Level::Full => ValidationLevel::Full,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Reference {
    Schlegel24,
    Tetra23,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Bipyramid2k,
}

#[derive(Subcommand)]
enum Command {
    /// Subdivide a balanced simplicial polytope (OFF) into octahedra.
    Subdivide {
        input: PathBuf,
        /// Output XPC file (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Verify the result before writing it.
        #[arg(long, value_enum)]
        verify: Option<Level>,
        /// Write the verification report (TSV) here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write a 23-cell reference complex.
    Ref {
        #[arg(value_enum)]
        name: Reference,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a balanced test polytope as OFF.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export every cell facet of an XPC complex as an OBJ triangle mesh.
    Export {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check an XPC complex, optionally against the polytope it subdivides.
    Verify {
        input: PathBuf,
        #[arg(long)]
        against: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "fast")]
        level: Level,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

const EXIT_INPUT: u8 = 1;
const EXIT_NOT_BALANCED: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_SEARCH: u8 = 4;

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidPolytope(_) | Error::Geom(_) => EXIT_INPUT,
            Error::NotBalanced(_) | Error::MatchingFailure(_) => EXIT_NOT_BALANCED,
            Error::SearchExhausted { .. } => EXIT_SEARCH,
            Error::Precondition(_) | Error::CellCertificationFailed(_) => EXIT_VERIFY,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: String) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message,
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_failure(format!("{}: {e}", path.display())))
}

fn read_parsed<T>(path: &Path, parse: impl Fn(&str) -> octa_core::Result<T>) -> Result<T, Failure> {
    parse(&read(path)?).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| input_failure(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Subdivide {
            input,
            out,
            verify,
            report,
        } => {
            let p = read_parsed(&input, parse_off)?;
            let complex = octahedralize(&p)?;
            eprintln!("{} cells", complex.cells().len());
            let mut passed = true;
            if let Some(level) = verify {
                let r = verify_complex(&complex, Some(&p), level.into());
                if let Some(path) = &report {
                    emit(Some(path), &r.to_tsv())?;
                }
                for c in r.failures() {
                    eprintln!("verification failed: {}: {}", c.name, c.detail);
                }
                passed = r.passed();
            }
            emit(out.as_deref(), &write_xpc(&complex))?;
            if !passed {
                return Err(Failure {
                    code: EXIT_VERIFY,
                    message: "verification failed".into(),
                });
            }
        }
        Command::Ref { name, out } => {
            let complex = match name {
                Reference::Schlegel24 => schlegel_24cell_reference()?.block.complex()?,
                Reference::Tetra23 => {
                    subdivide_tetrahedron(&fixtures::unit_tetrahedron_points(), TetraFlag::default())?
                }
            };
            eprintln!("{} cells", complex.cells().len());
            emit(out.as_deref(), &write_xpc(&complex))?;
        }
        Command::Gen { family, k, out } => {
            let Family::Bipyramid2k = family;
            if k < 2 {
                return Err(input_failure("bipyramid2k needs --k >= 2".into()));
            }
            emit(out.as_deref(), &write_off(&fixtures::bipyramid(k)))?;
        }
        Command::Export { input, out } => {
            let complex = read_parsed(&input, parse_xpc)?;
            emit(Some(&out), &write_obj(&complex))?;
        }
        Command::Verify {
            input,
            against,
            level,
            report,
        } => {
            let complex = read_parsed(&input, parse_xpc)?;
            let polytope = match &against {
                Some(path) => Some(read_parsed(path, parse_off)?),
                None => None,
            };
            let r = verify_complex(&complex, polytope.as_ref(), level.into());
            match &report {
                Some(path) => emit(Some(path), &r.to_tsv())?,
                None => print!("{}", r.to_tsv()),
            }
            if !r.passed() {
                return Err(Failure {
                    code: EXIT_VERIFY,
                    message: format!(
                        "verification failed: {}",
                        r.failures().map(|c| c.name.as_str()).collect::<Vec<_>>().join(", ")
                    ),
                });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
