//! `qbch`: build quasi-BCH code specs, encode and decode symbol files, run
//! seeded channel simulations, and dump code diagnostics.
//!
//! Exit codes: 0 success, 1 parameter error, 2 usage error, 3 decode
//! failures present in the output.

mod sim;
mod spec_file;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qbch_core::field::build_field;
use qbch_core::ilrs;
use qbch_core::matrix::MatRingElem;
use qbch_core::qbch::{BlockWord, QuasiBchSpec};
use qbch_core::wb;

#[derive(Debug)]
pub struct CliError {
    message: String,
    exit_code: u8,
}

impl CliError {
    fn param(message: String) -> Self {
        CliError {
            message,
            exit_code: 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DecoderKind {
    /// Welch-Berlekamp over the matrix ring.
    Wb,
    /// Row-wise interleaved Reed-Solomon decoding.
    Ilrs,
    /// Collaborative interleaved decoding (scalar root matrices only).
    Collab,
}

impl DecoderKind {
    pub fn name(self) -> &'static str {
        match self {
            DecoderKind::Wb => "wb",
            DecoderKind::Ilrs => "ilrs",
            DecoderKind::Collab => "collab",
        }
    }
}

#[derive(Parser)]
#[command(name = "qbch", version, about = "Quasi-BCH codes over matrix rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code spec file from parameters.
    MakeCode {
        /// Base field characteristic (prime).
        #[arg(long)]
        q: u64,
        /// Extension degree of the root field F_{q^s}.
        #[arg(long)]
        s: usize,
        /// Block size l.
        #[arg(long)]
        l: usize,
        /// Number of blocks m.
        #[arg(long)]
        m: usize,
        /// Designed block distance.
        #[arg(long)]
        delta: usize,
        /// Optional root matrix: l*l comma-separated integer encodings,
        /// row-major, over the canonical F_{q^s}.
        #[arg(long)]
        gamma: Option<String>,
        /// Output spec path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Encode a message file (dim symbols per line) to codewords.
    Encode {
        #[arg(long)]
        code: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decode a received-word file (m*l symbols per line) to messages.
    /// Lines that fail to decode become `FAIL` and the exit code is 3.
    Decode {
        #[arg(long)]
        code: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = DecoderKind::Wb)]
        decoder: DecoderKind,
    },
    /// Seeded Monte-Carlo channel simulation.
    Simulate {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_enum)]
        decoder: DecoderKind,
        /// Block errors injected per trial.
        #[arg(long)]
        errors: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Print parity and generator matrices, eigenvalues and row codes.
    Inspect {
        #[arg(long)]
        code: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code)
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::MakeCode {
            q,
            s,
            l,
            m,
            delta,
            gamma,
            out,
        } => make_code(q, s, l, m, delta, gamma, &out),
        Command::Encode { code, input, out } => encode(&code, &input, &out),
        Command::Decode {
            code,
            input,
            out,
            decoder,
        } => decode(&code, &input, &out, decoder),
        Command::Simulate {
            code,
            decoder,
            errors,
            trials,
            seed,
        } => simulate(&code, decoder, errors, trials, seed),
        Command::Inspect { code } => inspect(&code),
    }
}

fn make_code(
    q: u64,
    s: usize,
    l: usize,
    m: usize,
    delta: usize,
    gamma: Option<String>,
    out: &Path,
) -> Result<u8, CliError> {
    let gamma = match gamma {
        None => None,
        Some(raw) => {
            let field = build_field(q, s)
                .map_err(|e| CliError::param(format!("invalid field parameters: {e}")))?;
            let ints = raw
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u64>()
                        .map_err(|_| CliError::param(format!("invalid gamma entry `{tok}`")))
                })
                .collect::<Result<Vec<u64>, CliError>>()?;
            Some(
                MatRingElem::from_ints(&field, l, &ints)
                    .map_err(|e| CliError::param(format!("invalid gamma: {e}")))?,
            )
        }
    };
    let spec = QuasiBchSpec::build(q, s, l, m, delta, gamma)
        .map_err(|e| CliError::param(format!("invalid code parameters: {e}")))?;
    spec_file::write_spec(&spec, out)?;
    println!(
        "length={} dim={} tau={} sprime={}",
        spec.length(),
        spec.dim(),
        spec.tau(),
        ilrs::splitting_field_degree(spec.q(), spec.s(), spec.m()),
    );
    Ok(0)
}

fn encode(code: &Path, input: &Path, out: &Path) -> Result<u8, CliError> {
    let spec = spec_file::read_spec(code)?;
    let messages = spec_file::read_words(input, spec.dim())?;
    let mut text = String::new();
    for msg in &messages {
        let word = spec
            .encode(msg)
            .map_err(|e| CliError::param(format!("encode failed: {e}")))?;
        text.push_str(&spec_file::word_to_line(&word));
        text.push('\n');
    }
    fs::write(out, text)
        .map_err(|e| CliError::param(format!("cannot write {}: {e}", out.display())))?;
    Ok(0)
}

fn decode(code: &Path, input: &Path, out: &Path, decoder: DecoderKind) -> Result<u8, CliError> {
    let spec = spec_file::read_spec(code)?;
    check_decoder(&spec, decoder)?;
    let words = spec_file::read_words(input, spec.length())?;
    let mut text = String::new();
    let mut failures = 0usize;
    for symbols in &words {
        let received = BlockWord::new(spec.q(), spec.ell(), symbols.clone())
            .map_err(|e| CliError::param(format!("invalid word: {e}")))?;
        let outcome = match decoder {
            DecoderKind::Wb => wb::decode(&spec, &received),
            DecoderKind::Ilrs => ilrs::decode(&spec, &received),
            DecoderKind::Collab => ilrs::decode_collaborative(&spec, &received),
        };
        match outcome {
            Ok(word) => {
                let msg = spec
                    .extract_message(&word)
                    .map_err(|e| CliError::param(format!("decode postcondition failed: {e}")))?;
                text.push_str(&spec_file::format_word(&msg));
            }
            Err(_) => {
                failures += 1;
                text.push_str("FAIL");
            }
        }
        text.push('\n');
    }
    fs::write(out, text)
        .map_err(|e| CliError::param(format!("cannot write {}: {e}", out.display())))?;
    Ok(if failures > 0 { 3 } else { 0 })
}

fn check_decoder(spec: &QuasiBchSpec, decoder: DecoderKind) -> Result<(), CliError> {
    if decoder == DecoderKind::Collab && !spec.gamma().is_scalar() {
        return Err(CliError::param(
            "collaborative decoding requires a scalar root matrix".to_string(),
        ));
    }
    Ok(())
}

fn simulate(
    code: &Path,
    decoder: DecoderKind,
    errors: usize,
    trials: u64,
    seed: u64,
) -> Result<u8, CliError> {
    let spec = spec_file::read_spec(code)?;
    check_decoder(&spec, decoder)?;
    if errors > spec.m() {
        return Err(CliError::param(format!(
            "cannot place {errors} distinct block errors in {} blocks",
            spec.m()
        )));
    }
    let report = sim::simulate(&spec, decoder, errors, trials, seed);
    print!("{}", report.render());
    Ok(0)
}

fn inspect(code: &Path) -> Result<u8, CliError> {
    let spec = spec_file::read_spec(code)?;
    let mut out = String::new();
    writeln!(
        out,
        "q={} s={} l={} m={} delta={}",
        spec.q(),
        spec.s(),
        spec.ell(),
        spec.m(),
        spec.delta()
    )
    .unwrap();
    let eig = ilrs::diagonalize(&spec)
        .map_err(|e| CliError::param(format!("diagonalization failed: {e}")))?;
    writeln!(
        out,
        "length={} dim={} tau={} sprime={}",
        spec.length(),
        spec.dim(),
        spec.tau(),
        eig.s_prime()
    )
    .unwrap();
    let h = spec.parity_matrix();
    writeln!(out, "H ({}x{}) over F_q^s:", h.rows(), h.cols()).unwrap();
    for r in 0..h.rows() {
        let row: Vec<String> = (0..h.cols())
            .map(|c| h.get(r, c).to_int().to_string())
            .collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    let g = spec.generator_matrix();
    writeln!(out, "G ({}x{}) over F_q:", g.rows(), g.cols()).unwrap();
    for r in 0..g.rows() {
        let row: Vec<String> = (0..g.cols())
            .map(|c| g.get(r, c).to_int().to_string())
            .collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    let encs: Vec<String> = eig
        .lambdas()
        .iter()
        .map(|l| l.to_int().to_string())
        .collect();
    writeln!(out, "eigenvalues over F_q^sprime: {}", encs.join(" ")).unwrap();
    for (i, lambda) in eig.lambdas().iter().enumerate() {
        writeln!(
            out,
            "row {} parity matrix ({}x{}) for lambda={}:",
            i,
            spec.delta() - 1,
            spec.m(),
            lambda.to_int()
        )
        .unwrap();
        for t in 1..spec.delta() {
            let row: Vec<String> = (0..spec.m())
                .map(|j| lambda.pow((t * j) as u64).to_int().to_string())
                .collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    print!("{out}");
    Ok(0)
}
