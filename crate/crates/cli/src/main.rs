use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quantale::io::{emit, export_dot, load_instance, render_analysis, DotView};
use quantale::properties::analyze;
use quantale::suite::{enumerate_quantales, run_suite, select_theorems, Corpus, CorpusMember, CATALOG, DEFAULT_BOUND};

/// Finite quantale workbench: analyze instances, run the theorem catalogue,
/// enumerate small quantales and export Hasse diagrams.
#[derive(Parser)]
#[command(name = "quantale", version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print spectra, radicals, centers, L(A), verdicts and decomposition.
    Analyze {
        /// Instance file or generator string (e.g. `zn:12`).
        instance: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the theorem catalogue over a corpus.
    Verify {
        /// `fixtures`, `enumerated`, `all`, an instance file or a generator.
        corpus: String,
        /// Comma-separated theorem ids; all when omitted.
        #[arg(long, value_delimiter = ',')]
        theorems: Option<Vec<String>>,
        /// Largest enumerated carrier for `enumerated` and `all`.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        max_size: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Omit wall-clock timing from the report.
        #[arg(long)]
        no_timing: bool,
    },
    /// List quantales up to isomorphism on at most `max-size` elements.
    Enumerate {
        #[arg(long)]
        max_size: usize,
        /// Print each quantale as an instance document.
        #[arg(long)]
        emit: bool,
    },
    /// Emit a Graphviz DOT Hasse diagram.
    ExportDot {
        instance: String,
        #[arg(long, default_value = "lattice")]
        view: DotView,
    },
    /// List the theorem catalogue.
    Theorems,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Failures that map to exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Usage> {
    match cli.command {
        Command::Analyze { instance, format } => {
            let q = load_instance(&instance)?;
            let report = analyze(&q)?;
            match format {
                Format::Text => print!("{}", render_analysis(&instance, &q, &report)),
                Format::Json => println!("{}", report.to_json()),
            }
        }
        Command::Verify {
            corpus,
            theorems,
            max_size,
            format,
            no_timing,
        } => {
            let corpus = load_corpus(&corpus, max_size)?;
            let selected = select_theorems(theorems.as_deref())?;
            let mut report = run_suite(&corpus, &selected)?;
            if no_timing {
                report = report.without_timing();
            }
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            if !report.unexpected_refutations().is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Enumerate { max_size, emit: docs } => {
            let all = enumerate_quantales(max_size)?;
            for e in &all {
                let q = &e.quantale;
                if docs {
                    println!("# {}\n{}", e.name, emit(q, Some(&e.name)));
                } else {
                    let kind = if q.is_frame() { "frame" } else { "quantale" };
                    println!("{:<6} {} elements  {kind}", e.name, q.len());
                }
            }
            for n in 1..=max_size {
                let count = all.iter().filter(|e| e.quantale.len() == n).count();
                println!("size {n}: {count}");
            }
        }
        Command::ExportDot { instance, view } => {
            let q = load_instance(&instance)?;
            print!("{}", export_dot(&q, view, &instance)?);
        }
        Command::Theorems => {
            let width = CATALOG.iter().map(|t| t.id.len()).max().unwrap_or(0);
            for t in CATALOG {
                let flag = if t.known_refutable { "  [known refutable]" } else { "" };
                println!("{:<width$}  {}{flag}", t.id, t.statement);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_corpus(spec: &str, max_size: usize) -> Result<Corpus, Usage> {
    Ok(match spec {
        "fixtures" => Corpus::fixtures(),
        "enumerated" => Corpus::enumerated(max_size)?,
        "all" => {
            let mut c = Corpus::fixtures();
            c.extend(Corpus::enumerated(max_size)?);
            c
        }
        other => match CorpusMember::from_generator(other, other) {
            Ok(member) => Corpus::single(member),
            Err(_) => Corpus::single(CorpusMember::new(other, other, load_instance(other)?)),
        },
    })
}
