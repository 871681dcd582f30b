//! The `sigbasis` command line: reads an ideal file or builds a benchmark
//! ideal, computes its reduced Gröbner basis and prints it.

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use thiserror::Error;

use crate::classic::{autoreduce, buchberger_run, ClassicConfig};
use crate::error::{AlgebraError, ParseError};
use crate::gen::{cyclic, katsura, Ideal, KatsuraNaming};
use crate::io::{format_polynomial, parse_ideal};
use crate::lookup::LookupKind;
use crate::monomial::RingOrder;
use crate::poly::Polynomial;
use crate::queue::{QueueBackend, QueueConfig};
use crate::ring::Ring;
use crate::sb::{sb_run, ModuleOrderKind, SbConfig, SchreyerTiebreak};
use crate::spair::SPairQueueKind;
use crate::stats::StatsReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Sb,
    Classic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Naming {
    /// katsuraN has N variables.
    Varcount,
    /// katsuraN has N+1 variables.
    Classic,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "sigbasis", version, about = "Gröbner bases over prime fields")]
pub struct Cli {
    /// Ideal file, or a built-in ideal: katsuraN, cyclicN, hcyclicN.
    pub input: String,

    #[arg(long, value_enum, default_value = "sb")]
    pub algorithm: Algorithm,

    /// Reducer queue: heap, geobucket or tourtree.
    #[arg(long, default_value = "heap")]
    pub reducer: QueueBackend,

    /// Sum like terms in a hash table in front of the queue.
    #[arg(long, conflicts_with = "dedup")]
    pub hashed: bool,

    /// Merge equal monomials inside the queue.
    #[arg(long)]
    pub dedup: bool,

    /// Queue one lazy stream per product instead of every term.
    #[arg(long)]
    pub compressed: bool,

    /// Monomial lookup: list, divlist, kdtree or divkdtree.
    #[arg(long, default_value = "divkdtree")]
    pub lookup: LookupKind,

    /// S-pair queue: triangle-tt, triangle-heap, heap or tourtree.
    #[arg(long, default_value = "triangle-tt")]
    pub spair_queue: SPairQueueKind,

    /// Module order for the signature algorithm: schreyer or potop.
    #[arg(long, default_value = "schreyer")]
    pub module_order: ModuleOrderKind,

    /// Which component wins a Schreyer tie: low-gt or high-gt.
    #[arg(long, default_value = "low-gt")]
    pub schreyer_tiebreak: SchreyerTiebreak,

    /// Base divisors per new element (0, 1 or 2).
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=2))]
    pub base_divisors: u8,

    /// Also apply the singular criterion before queueing.
    #[arg(long)]
    pub early_singular: bool,

    /// Skip eliminating pairs whose signature a known syzygy divides.
    #[arg(long)]
    pub no_signature_criterion: bool,

    /// Skip the Koszul syzygy criterion.
    #[arg(long)]
    pub no_koszul: bool,

    /// Skip the relatively prime leads criterion.
    #[arg(long)]
    pub no_relprime: bool,

    /// Classic algorithm: skip the lcm criterion.
    #[arg(long)]
    pub no_lcm: bool,

    /// Classic algorithm: skip the graph criterion.
    #[arg(long)]
    pub no_graph: bool,

    /// Use the generators as given instead of autoreducing them first.
    #[arg(long)]
    pub raw_input: bool,

    /// Print run statistics after the basis.
    #[arg(long)]
    pub stats: bool,

    /// Write the output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Characteristic for built-in ideals.
    #[arg(long, default_value_t = 101)]
    pub prime: u32,

    /// Term order for built-in ideals: grevlex, lex or "elim K".
    #[arg(long, default_value = "grevlex")]
    pub order: RingOrder,

    /// Variable count convention for katsuraN.
    #[arg(long, value_enum, default_value = "varcount")]
    pub katsura_naming: Naming,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
}

impl Cli {
    pub fn queue(&self) -> QueueConfig {
        QueueConfig {
            backend: self.reducer,
            hashed: self.hashed,
            dedup: self.dedup,
            compressed: self.compressed,
        }
    }

    pub fn sb_config(&self) -> SbConfig {
        SbConfig {
            queue: self.queue(),
            lookup: self.lookup,
            spair_queue: self.spair_queue,
            module_order: self.module_order,
            tiebreak: self.schreyer_tiebreak,
            base_divisors: self.base_divisors as usize,
            early_singular: self.early_singular,
            signature_criterion: !self.no_signature_criterion,
            koszul: !self.no_koszul,
            relprime: !self.no_relprime,
            ..SbConfig::default()
        }
    }

    pub fn classic_config(&self) -> ClassicConfig {
        ClassicConfig {
            queue: self.queue(),
            lookup: self.lookup,
            spair_queue: self.spair_queue,
            relprime: !self.no_relprime,
            lcm: !self.no_lcm,
            graph: !self.no_graph,
            ..ClassicConfig::default()
        }
    }
}

/// Resolves `katsuraN`, `cyclicN` and `hcyclicN`.
pub fn builtin(name: &str, p: u32, order: RingOrder, naming: KatsuraNaming) -> Option<Result<Ideal, AlgebraError>> {
    let split = name.find(|c: char| c.is_ascii_digit())?;
    let n: usize = name[split..].parse().ok()?;
    match &name[..split] {
        "katsura" if n >= 2 => Some(katsura(n, naming, p, order)),
        "cyclic" if n >= 2 => Some(cyclic(n, false, p, order)),
        "hcyclic" if n >= 2 => Some(cyclic(n, true, p, order)),
        _ => None,
    }
}

fn load(cli: &Cli) -> Result<(Ring, Vec<Polynomial>), CliError> {
    let path = Path::new(&cli.input);
    if !path.exists() {
        let naming = match cli.katsura_naming {
            Naming::Varcount => KatsuraNaming::VarCount,
            Naming::Classic => KatsuraNaming::Classic,
        };
        if let Some(ideal) = builtin(&cli.input, cli.prime, cli.order, naming) {
            let ideal = ideal?;
            return Ok((ideal.ring, ideal.gens));
        }
    }
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_ideal(&text)?)
}

/// Runs a parsed command line and returns everything it would print.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    cli.queue().validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let (ring, mut gens) = load(cli)?;
    gens.retain(|g| !g.is_zero());
    if gens.is_empty() {
        return Err(CliError::Usage("the input has no nonzero generator".into()));
    }
    if !cli.raw_input {
        gens = autoreduce(&ring, &gens, cli.queue(), cli.lookup);
    }

    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    match cli.algorithm {
        Algorithm::Sb => {
            let res = sb_run(&ring, &gens, &cli.sb_config());
            for g in res.reduced_gb(&ring, cli.queue(), cli.lookup) {
                line(format_polynomial(&ring, &g));
            }
            for s in &res.syzygies {
                line(s.to_string());
            }
            if cli.stats {
                out.push_str(&StatsReport::from_sb(&res.stats, cli.early_singular).to_string());
            }
        }
        Algorithm::Classic => {
            let res = buchberger_run(&ring, &gens, &cli.classic_config());
            for g in &res.basis {
                line(format_polynomial(&ring, g));
            }
            if cli.stats {
                let monomials = res.basis.iter().map(Polynomial::len).sum();
                out.push_str(&StatsReport::from_classic(&res.stats, monomials).to_string());
            }
        }
    }
    Ok(out)
}

/// Full front end: parses `args`, runs, writes the output. Usage errors exit
/// with status 2, other failures with 1.
pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = execute(&cli).and_then(|text| match &cli.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sigbasis: {e}");
            if matches!(e, CliError::Usage(_)) {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
